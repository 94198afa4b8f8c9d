//! Parametric membership curves and the crisp universe they live on.

use crate::error::{Error, Result};

/// Closed interval of crisp values a linguistic variable is defined over.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Universe {
    lo: f64,
    hi: f64,
}

impl Universe {
    /// Universe shared by every catalog variable.
    pub const PERCENT: Universe = Universe { lo: 0.0, hi: 100.0 };

    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidParameter(format!(
                "universe needs finite lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Universe { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn clamp(&self, x: f64) -> f64 {
        x.clamp(self.lo, self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        (self.lo..=self.hi).contains(&x)
    }
}

/// Shape of a membership curve.
///
/// Triangles may be degenerate on one side (`a == b` or `b == c`), which is how
/// the extreme labels of a partition put their peak on the universe edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MembershipFunction {
    Triangular { a: f64, b: f64, c: f64 },
    TrapezoidShoulder { a: f64, b: f64, c: f64, d: f64 },
    Gaussian { mean: f64, sigma: f64 },
}

fn check_finite(values: &[f64]) -> Result<()> {
    if values.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "membership parameters must be finite: {values:?}"
        )))
    }
}

impl MembershipFunction {
    pub fn triangular(a: f64, b: f64, c: f64) -> Result<Self> {
        check_finite(&[a, b, c])?;
        if !(a <= b && b <= c) || a == c {
            return Err(Error::InvalidParameter(format!(
                "triangle needs a <= b <= c, not all equal: ({a}, {b}, {c})"
            )));
        }
        Ok(MembershipFunction::Triangular { a, b, c })
    }

    pub fn trapezoid_shoulder(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        check_finite(&[a, b, c, d])?;
        if !(a <= b && b < c && c <= d) {
            return Err(Error::InvalidParameter(format!(
                "trapezoid needs a <= b < c <= d: ({a}, {b}, {c}, {d})"
            )));
        }
        Ok(MembershipFunction::TrapezoidShoulder { a, b, c, d })
    }

    pub fn gaussian(mean: f64, sigma: f64) -> Result<Self> {
        check_finite(&[mean, sigma])?;
        if sigma <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "gaussian sigma must be positive, got {sigma}"
            )));
        }
        Ok(MembershipFunction::Gaussian { mean, sigma })
    }

    /// Degree of membership of `x`, always in `[0, 1]`.
    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            MembershipFunction::Triangular { a, b, c } => {
                if x == b {
                    1.0
                } else if x < b {
                    if x <= a {
                        0.0
                    } else {
                        (x - a) / (b - a)
                    }
                } else if x >= c {
                    0.0
                } else {
                    (c - x) / (c - b)
                }
            }
            MembershipFunction::TrapezoidShoulder { a, b, c, d } => {
                if (b..=c).contains(&x) {
                    1.0
                } else if x < b {
                    if x <= a {
                        0.0
                    } else {
                        (x - a) / (b - a)
                    }
                } else if x >= d {
                    0.0
                } else {
                    (d - x) / (d - c)
                }
            }
            MembershipFunction::Gaussian { mean, sigma } => {
                let z = (x - mean) / sigma;
                (-0.5 * z * z).exp()
            }
        }
    }

    /// A location where the curve reaches 1 (the left edge of a plateau).
    pub fn peak(&self) -> f64 {
        match *self {
            MembershipFunction::Triangular { b, .. } => b,
            MembershipFunction::TrapezoidShoulder { b, .. } => b,
            MembershipFunction::Gaussian { mean, .. } => mean,
        }
    }

    /// Gaussian with the same peak and the same full width at half maximum.
    pub fn gaussian_equivalent(&self) -> Result<Self> {
        match *self {
            MembershipFunction::Triangular { a, b, c } => {
                let half_base = if b > a { b - a } else { c - b };
                // Triangle FWHM equals its half-base; Gaussian FWHM is 2*sqrt(2 ln 2)*sigma.
                let sigma = half_base / (2.0 * (2.0 * std::f64::consts::LN_2).sqrt());
                MembershipFunction::gaussian(b, sigma)
            }
            MembershipFunction::TrapezoidShoulder { a, b, c, d } => {
                let fwhm = (c - b) + 0.5 * ((b - a) + (d - c));
                let center = if a == b {
                    b
                } else if c == d {
                    c
                } else {
                    0.5 * (b + c)
                };
                MembershipFunction::gaussian(
                    center,
                    fwhm / (2.0 * (2.0 * std::f64::consts::LN_2).sqrt()),
                )
            }
            g @ MembershipFunction::Gaussian { .. } => Ok(g),
        }
    }

    /// Largest slope magnitude of the curve; used for continuity checks.
    pub fn lipschitz(&self) -> f64 {
        let ramp = |lo: f64, hi: f64| if hi > lo { 1.0 / (hi - lo) } else { 0.0 };
        match *self {
            MembershipFunction::Triangular { a, b, c } => ramp(a, b).max(ramp(b, c)),
            MembershipFunction::TrapezoidShoulder { a, b, c, d } => ramp(a, b).max(ramp(c, d)),
            // max |d/dx exp(-z^2/2)| = exp(-1/2) / sigma at z = ±1
            MembershipFunction::Gaussian { sigma, .. } => (-0.5f64).exp() / sigma,
        }
    }
}

/// Free-function form of [`MembershipFunction::eval`].
pub fn eval_mf(mf: &MembershipFunction, x: f64) -> f64 {
    mf.eval(x)
}
