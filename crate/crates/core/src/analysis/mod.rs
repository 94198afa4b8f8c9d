//! Sweeps, control surfaces and cross-variant correlation.

mod correlation;
mod sweep;
mod trend;
mod variant;

pub use correlation::{
    correlation_report, pearson, CorrelationReport, CorrelationRow, STANDARD_PAIRS,
};
pub use sweep::{
    default_surface_axis, default_sweep_grid, run_sweep, run_sweep_on, run_sweep_with,
    standard_sweeps, surface_grid, surface_values, Exec, StandardSweep, SurfaceGrid, SurfaceSpec,
    SweepResult, SweepRow, SweepSpec, DEFAULT_FIXED, STANDARD_SWEEPS,
};
pub use trend::{
    check_sweep_trend, check_trend, Trend, TrendViolation, EXPECTED_TRENDS, TREND_SLACK,
};
pub use variant::{build_system, build_with_rules, SystemOptions, VariantId};
