use crate::analysis::variant::{build_system, SystemOptions, VariantId};
use crate::catalog::InputId;
use crate::error::{Error, Result};
use crate::inference::FuzzySystem;
use crate::ruledsl::DecisionId;

/// How a batch of independent evaluations is scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Rayon data parallelism; same as `Sequential` without the `parallel`
    /// feature.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Maps `f` over `items` keeping input order.
pub(crate) fn map_ordered<T, U, F>(items: &[T], exec: Exec, f: F) -> Result<Vec<U>>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Result<U> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

pub const DEFAULT_FIXED: f64 = 50.0;

/// 10, 20, ..., 100.
pub fn default_sweep_grid() -> Vec<f64> {
    (1..=10).map(|k| f64::from(k) * 10.0).collect()
}

/// 0, 2, ..., 100.
pub fn default_surface_axis() -> Vec<f64> {
    (0..=50).map(|k| f64::from(k) * 2.0).collect()
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter("grid is empty".into()));
    }
    if grid.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidParameter("grid values must be finite".into()));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter(
            "grid must be strictly increasing".into(),
        ));
    }
    Ok(())
}

fn input_position(decision: DecisionId, input: InputId) -> Result<usize> {
    decision
        .inputs()
        .iter()
        .position(|&i| i == input)
        .ok_or_else(|| Error::InvalidParameter(format!("`{input}` is not an input of {decision}")))
}

fn check_variants(variants: &[VariantId]) -> Result<()> {
    if variants.is_empty() {
        return Err(Error::InvalidParameter("no variants selected".into()));
    }
    for (i, v) in variants.iter().enumerate() {
        if variants[..i].contains(v) {
            return Err(Error::InvalidParameter(format!(
                "variant `{v}` listed twice"
            )));
        }
    }
    Ok(())
}

/// One input varied over a grid, the others held at `fixed`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub decision: DecisionId,
    pub varied: InputId,
    pub fixed: f64,
    pub grid: Vec<f64>,
    pub variants: Vec<VariantId>,
}

impl SweepSpec {
    /// Default grid, fixed value and all four variants.
    pub fn new(decision: DecisionId, varied: InputId) -> Self {
        SweepSpec {
            decision,
            varied,
            fixed: DEFAULT_FIXED,
            grid: default_sweep_grid(),
            variants: VariantId::ALL.to_vec(),
        }
    }

    pub fn with_fixed(mut self, fixed: f64) -> Self {
        self.fixed = fixed;
        self
    }

    pub fn with_grid(mut self, grid: Vec<f64>) -> Self {
        self.grid = grid;
        self
    }

    pub fn with_variants(mut self, variants: Vec<VariantId>) -> Self {
        self.variants = variants;
        self
    }

    pub fn validate(&self) -> Result<()> {
        input_position(self.decision, self.varied)?;
        check_grid(&self.grid)?;
        check_variants(&self.variants)?;
        if !self.fixed.is_finite() {
            return Err(Error::InvalidParameter("fixed value must be finite".into()));
        }
        Ok(())
    }

    /// The full input vector at each grid point.
    pub fn points(&self) -> Result<Vec<Vec<f64>>> {
        let k = input_position(self.decision, self.varied)?;
        let n = self.decision.inputs().len();
        Ok(self
            .grid
            .iter()
            .map(|&g| {
                let mut x = vec![self.fixed; n];
                x[k] = g;
                x
            })
            .collect())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub input: f64,
    /// Aligned with `SweepSpec::variants`.
    pub outputs: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub spec: SweepSpec,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    pub fn column(&self, variant: VariantId) -> Option<Vec<f64>> {
        let j = self.spec.variants.iter().position(|&v| v == variant)?;
        Some(self.rows.iter().map(|r| r.outputs[j]).collect())
    }

    pub fn inputs(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.input).collect()
    }
}

fn build_all(
    decision: DecisionId,
    variants: &[VariantId],
    opts: &SystemOptions,
) -> Result<Vec<FuzzySystem>> {
    variants
        .iter()
        .map(|&v| build_system(decision, v, opts))
        .collect()
}

fn eval_point(systems: &[FuzzySystem], x: &[f64]) -> Result<Vec<f64>> {
    systems
        .iter()
        .map(|s| s.evaluate(x))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::AtPoint {
            point: x.to_vec(),
            source: Box::new(e),
        })
}

pub fn run_sweep(spec: &SweepSpec, opts: &SystemOptions) -> Result<SweepResult> {
    run_sweep_with(spec, opts, Exec::default())
}

pub fn run_sweep_with(spec: &SweepSpec, opts: &SystemOptions, exec: Exec) -> Result<SweepResult> {
    spec.validate()?;
    let systems = build_all(spec.decision, &spec.variants, opts)?;
    run_sweep_on(spec, &systems, exec)
}

/// Runs `spec` on prebuilt systems, one per entry of `spec.variants`.
pub fn run_sweep_on(spec: &SweepSpec, systems: &[FuzzySystem], exec: Exec) -> Result<SweepResult> {
    spec.validate()?;
    if systems.len() != spec.variants.len() {
        return Err(Error::Arity {
            expected: spec.variants.len(),
            got: systems.len(),
        });
    }
    let points = spec.points()?;
    let k = input_position(spec.decision, spec.varied)?;
    let rows = map_ordered(&points, exec, |x| {
        Ok(SweepRow {
            input: x[k],
            outputs: eval_point(systems, x)?,
        })
    })?;
    Ok(SweepResult {
        spec: spec.clone(),
        rows,
    })
}

/// Two inputs varied over a Cartesian grid, the rest held at `fixed`.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceSpec {
    pub decision: DecisionId,
    pub input_a: InputId,
    pub input_b: InputId,
    pub fixed: f64,
    pub grid_a: Vec<f64>,
    pub grid_b: Vec<f64>,
    pub variants: Vec<VariantId>,
}

impl SurfaceSpec {
    pub fn new(decision: DecisionId, input_a: InputId, input_b: InputId) -> Self {
        SurfaceSpec {
            decision,
            input_a,
            input_b,
            fixed: DEFAULT_FIXED,
            grid_a: default_surface_axis(),
            grid_b: default_surface_axis(),
            variants: VariantId::ALL.to_vec(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.input_a == self.input_b {
            return Err(Error::InvalidParameter("surface inputs must differ".into()));
        }
        input_position(self.decision, self.input_a)?;
        input_position(self.decision, self.input_b)?;
        check_grid(&self.grid_a)?;
        check_grid(&self.grid_b)?;
        check_variants(&self.variants)
    }
}

/// Row-major over `grid_a` (outer) and `grid_b` (inner).
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceGrid {
    pub spec: SurfaceSpec,
    /// `values[v][i * grid_b.len() + j]` for variant `v`.
    pub values: Vec<Vec<f64>>,
}

impl SurfaceGrid {
    pub fn at(&self, variant: usize, i: usize, j: usize) -> f64 {
        self.values[variant][i * self.spec.grid_b.len() + j]
    }
}

/// Evaluates `system` over `grid_a × grid_b` for inputs `a` and `b`, others
/// at `fixed`. Row-major with `grid_a` outer.
pub fn surface_values(
    system: &FuzzySystem,
    a: usize,
    b: usize,
    fixed: f64,
    grid_a: &[f64],
    grid_b: &[f64],
    exec: Exec,
) -> Result<Vec<f64>> {
    let n = system.inputs().len();
    if a == b || a >= n || b >= n {
        return Err(Error::InvalidParameter(format!(
            "bad surface inputs {a}, {b}"
        )));
    }
    let points: Vec<Vec<f64>> = grid_a
        .iter()
        .flat_map(|&xa| {
            grid_b.iter().map(move |&xb| {
                let mut x = vec![fixed; n];
                x[a] = xa;
                x[b] = xb;
                x
            })
        })
        .collect();
    map_ordered(&points, exec, |x| {
        system.evaluate(x).map_err(|e| Error::AtPoint {
            point: x.clone(),
            source: Box::new(e),
        })
    })
}

pub fn surface_grid(spec: &SurfaceSpec, opts: &SystemOptions, exec: Exec) -> Result<SurfaceGrid> {
    spec.validate()?;
    let a = input_position(spec.decision, spec.input_a)?;
    let b = input_position(spec.decision, spec.input_b)?;
    let values = build_all(spec.decision, &spec.variants, opts)?
        .iter()
        .map(|s| surface_values(s, a, b, spec.fixed, &spec.grid_a, &spec.grid_b, exec))
        .collect::<Result<_>>()?;
    Ok(SurfaceGrid {
        spec: spec.clone(),
        values,
    })
}

/// One of the fourteen standard one-input sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StandardSweep {
    /// Output file number, 9 to 22.
    pub number: u8,
    pub decision: DecisionId,
    pub input: InputId,
}

impl StandardSweep {
    pub fn spec(&self) -> SweepSpec {
        SweepSpec::new(self.decision, self.input)
    }

    /// Row label for correlation reports; SNR appears for two decisions.
    pub fn label(&self) -> String {
        match self.input {
            InputId::Snr => format!("snr ({})", self.decision.key()),
            i => i.key().to_owned(),
        }
    }
}

pub const STANDARD_SWEEPS: [StandardSweep; 14] = {
    use DecisionId as D;
    use InputId as I;
    const fn s(number: u8, decision: DecisionId, input: InputId) -> StandardSweep {
        StandardSweep {
            number,
            decision,
            input,
        }
    }
    [
        s(9, D::ChannelSelection, I::SignalStrength),
        s(10, D::ChannelSelection, I::SpectrumDemand),
        s(11, D::ChannelSelection, I::Snr),
        s(12, D::HandoffStatus, I::Snr),
        s(13, D::HandoffStatus, I::Interference),
        s(14, D::ChannelGain, I::ChannelQuality),
        s(15, D::ChannelGain, I::Susceptibility),
        s(16, D::AccessSpectrum, I::SpectrumUtilisationEfficiency),
        s(17, D::AccessSpectrum, I::DegreeOfMobility),
        s(18, D::AccessSpectrum, I::DistanceToPrimaryUser),
        s(19, D::AccessLatency, I::SuTrafficIntensity),
        s(20, D::AccessLatency, I::BaTrafficIntensity),
        s(21, D::BandwidthAllocation, I::AccessLatency),
        s(22, D::BandwidthAllocation, I::TrafficPriority),
    ]
};

/// All fourteen standard sweeps with default settings, in order.
pub fn standard_sweeps(opts: &SystemOptions, exec: Exec) -> Result<Vec<SweepResult>> {
    STANDARD_SWEEPS
        .iter()
        .map(|s| run_sweep_with(&s.spec(), opts, exec))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        let ok = SweepSpec::new(DecisionId::HandoffStatus, InputId::Snr);
        ok.validate().unwrap();
        assert!(
            SweepSpec::new(DecisionId::HandoffStatus, InputId::SignalStrength)
                .validate()
                .is_err()
        );
        assert!(ok.clone().with_grid(vec![]).validate().is_err());
        assert!(ok.clone().with_grid(vec![10.0, 10.0]).validate().is_err());
        assert!(ok.clone().with_variants(vec![]).validate().is_err());
    }

    #[test]
    fn sweep_rows_follow_grid() {
        let spec = SweepSpec::new(DecisionId::AccessLatency, InputId::BaTrafficIntensity)
            .with_grid(vec![0.0, 37.5, 100.0])
            .with_variants(vec![VariantId::LinearSugeno, VariantId::TriangularMamdani]);
        let r = run_sweep(&spec, &SystemOptions::default()).unwrap();
        assert_eq!(r.inputs(), [0.0, 37.5, 100.0]);
        assert_eq!(r.rows[0].outputs.len(), 2);
        assert!(r.column(VariantId::GaussianMamdani).is_none());
    }

    #[test]
    fn parallel_and_sequential_agree_bitwise() {
        let opts = SystemOptions::default();
        for s in &STANDARD_SWEEPS[..3] {
            let a = run_sweep_with(&s.spec(), &opts, Exec::Sequential).unwrap();
            let b = run_sweep_with(&s.spec(), &opts, Exec::Parallel).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn surface_single_point_matches_evaluate() {
        let mut spec = SurfaceSpec::new(
            DecisionId::ChannelSelection,
            InputId::SignalStrength,
            InputId::Snr,
        );
        spec.grid_a = vec![30.0];
        spec.grid_b = vec![70.0];
        let opts = SystemOptions::default();
        let g = surface_grid(&spec, &opts, Exec::Sequential).unwrap();
        for (k, &v) in spec.variants.iter().enumerate() {
            let s = build_system(spec.decision, v, &opts).unwrap();
            assert_eq!(g.at(k, 0, 0), s.evaluate(&[30.0, 50.0, 70.0]).unwrap());
        }
    }

    #[test]
    fn surface_rejects_same_input() {
        let spec = SurfaceSpec::new(DecisionId::HandoffStatus, InputId::Snr, InputId::Snr);
        assert!(surface_grid(&spec, &SystemOptions::default(), Exec::Sequential).is_err());
    }

    #[test]
    fn standard_sweeps_are_well_formed() {
        for s in STANDARD_SWEEPS {
            s.spec().validate().unwrap();
        }
        assert_eq!(STANDARD_SWEEPS[3].label(), "snr (handoff)");
    }
}
