//! Sampled output curves and the defuzzifiers that reduce them to a crisp value.

use crate::error::{Error, Result};
use crate::inference::config::Defuzzifier;
use crate::membership::Universe;

/// Degree equality tolerance for the maxima family.
pub const MAXIMA_TOLERANCE: f64 = 1e-9;

/// Uniformly sampled membership curve over an output universe.
///
/// Sample `i` sits at `mid + (i - m) * step` with `m = (n - 1) / 2`, so the
/// grid is exactly symmetric about the universe midpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregateCurve {
    mid: f64,
    step: f64,
    degrees: Vec<f64>,
}

impl AggregateCurve {
    pub fn sample(universe: Universe, resolution: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let grid = SampleGrid::new(universe, resolution)?;
        let degrees = (0..resolution).map(|i| f(grid.x(i))).collect();
        AggregateCurve::from_degrees(universe, degrees)
    }

    pub fn from_degrees(universe: Universe, degrees: Vec<f64>) -> Result<Self> {
        let grid = SampleGrid::new(universe, degrees.len())?;
        if let Some(bad) = degrees.iter().find(|d| !(0.0..=1.0).contains(*d)) {
            return Err(Error::InvalidParameter(format!(
                "curve degree {bad} outside [0, 1]"
            )));
        }
        Ok(AggregateCurve {
            mid: grid.mid,
            step: grid.step,
            degrees,
        })
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.iter().all(|&d| d == 0.0)
    }

    pub fn x(&self, i: usize) -> f64 {
        let m = (self.degrees.len() - 1) / 2;
        self.mid + (i as f64 - m as f64) * self.step
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    pub fn samples(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| (self.x(i), d))
    }

    pub fn defuzzify(&self, method: Defuzzifier) -> Result<f64> {
        match method {
            Defuzzifier::Centroid => self.centroid(),
            Defuzzifier::Bisector => self.bisector(),
            Defuzzifier::MeanOfMaxima
            | Defuzzifier::SmallestOfMaxima
            | Defuzzifier::LargestOfMaxima => self.maxima(method),
        }
    }

    /// Discrete centroid `Σ x·μ / Σ μ`.
    ///
    /// The first moment is accumulated about the midpoint in mirrored pairs, so a
    /// curve whose samples are symmetric about the midpoint lands on it exactly.
    pub fn centroid(&self) -> Result<f64> {
        let total: f64 = self.degrees.iter().sum();
        if total <= 0.0 {
            return Err(Error::EmptyAggregate);
        }
        let m = (self.degrees.len() - 1) / 2;
        let moment: f64 = (1..=m)
            .map(|k| k as f64 * (self.degrees[m + k] - self.degrees[m - k]))
            .sum();
        Ok(self.mid + self.step * (moment / total))
    }

    /// First sample where the running sum reaches half of the total.
    pub fn bisector(&self) -> Result<f64> {
        let total: f64 = self.degrees.iter().sum();
        if total <= 0.0 {
            return Err(Error::EmptyAggregate);
        }
        let half = 0.5 * total;
        let mut acc = 0.0;
        for (i, &d) in self.degrees.iter().enumerate() {
            acc += d;
            if acc >= half {
                return Ok(self.x(i));
            }
        }
        Ok(self.x(self.degrees.len() - 1))
    }

    fn maxima(&self, method: Defuzzifier) -> Result<f64> {
        let peak = self.degrees.iter().copied().fold(0.0, f64::max);
        if peak <= 0.0 {
            return Err(Error::EmptyAggregate);
        }
        let mut xs = self
            .degrees
            .iter()
            .enumerate()
            .filter(|(_, &d)| d >= peak - MAXIMA_TOLERANCE)
            .map(|(i, _)| self.x(i));
        Ok(match method {
            Defuzzifier::SmallestOfMaxima => xs.next().expect("peak is attained"),
            Defuzzifier::LargestOfMaxima => xs.next_back().expect("peak is attained"),
            _ => {
                let (sum, n) = xs.fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
                sum / n as f64
            }
        })
    }
}

pub fn defuzz_centroid(curve: &AggregateCurve) -> Result<f64> {
    curve.centroid()
}

pub fn defuzz_bisector(curve: &AggregateCurve) -> Result<f64> {
    curve.bisector()
}

/// Mean, smallest or largest of maxima; any other method is treated as mean.
pub fn defuzz_maxima_family(curve: &AggregateCurve, method: Defuzzifier) -> Result<f64> {
    curve.maxima(method)
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct SampleGrid {
    pub mid: f64,
    pub step: f64,
    pub m: usize,
}

impl SampleGrid {
    pub fn new(universe: Universe, n: usize) -> Result<Self> {
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "curve needs an odd sample count >= 3, got {n}"
            )));
        }
        Ok(SampleGrid {
            mid: universe.midpoint(),
            step: (universe.hi() - universe.lo()) / (n - 1) as f64,
            m: (n - 1) / 2,
        })
    }

    pub fn x(&self, i: usize) -> f64 {
        self.mid + (i as f64 - self.m as f64) * self.step
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::membership::MembershipFunction;
    use approx::assert_abs_diff_eq;

    fn tri(a: f64, b: f64, c: f64) -> MembershipFunction {
        MembershipFunction::triangular(a, b, c).unwrap()
    }

    fn curve(f: impl Fn(f64) -> f64) -> AggregateCurve {
        AggregateCurve::sample(Universe::PERCENT, 1001, f).unwrap()
    }

    /// Continuous centroid by composite Simpson quadrature; independent of the
    /// discrete sum used by the engine.
    fn simpson_centroid(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
        let n = 200_000;
        let h = (hi - lo) / n as f64;
        let (mut m0, mut m1) = (0.0, 0.0);
        for i in 0..=n {
            let x = lo + i as f64 * h;
            let w = if i == 0 || i == n {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            m0 += w * f(x);
            m1 += w * x * f(x);
        }
        m1 / m0
    }

    #[test]
    fn grid_is_uniform_and_spans_universe() {
        let c = curve(|_| 1.0);
        assert_eq!(c.x(0), 0.0);
        assert_eq!(c.x(500), 50.0);
        assert_eq!(c.x(1000), 100.0);
        let xs: Vec<f64> = c.samples().map(|s| s.0).collect();
        assert!(xs.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn centroid_of_edge_triangles() {
        let off = tri(0.0, 0.0, 100.0);
        let c = curve(|x| off.eval(x)).centroid().unwrap();
        assert_abs_diff_eq!(
            simpson_centroid(|x| off.eval(x), 0.0, 100.0),
            100.0 / 3.0,
            epsilon = 1e-6
        );
        assert_abs_diff_eq!(c, 100.0 / 3.0, epsilon = 0.05);

        let vl = tri(0.0, 0.0, 25.0);
        let c = curve(|x| vl.eval(x)).centroid().unwrap();
        assert_abs_diff_eq!(c, 25.0 / 3.0, epsilon = 0.05);
    }

    #[test]
    fn symmetric_curves_centre_exactly() {
        let m = tri(25.0, 50.0, 75.0);
        assert_eq!(curve(|x| m.eval(x)).centroid().unwrap(), 50.0);
        assert_eq!(curve(|x| m.eval(x).min(0.5)).centroid().unwrap(), 50.0);
        let (vl, vh) = (tri(0.0, 0.0, 25.0), tri(75.0, 100.0, 100.0));
        assert_eq!(
            curve(|x| vl.eval(x).max(vh.eval(x))).centroid().unwrap(),
            50.0
        );
    }

    #[test]
    fn maxima_family_on_clipped_triangle() {
        let m = tri(25.0, 50.0, 75.0);
        let c = curve(|x| m.eval(x).min(0.5));
        assert_abs_diff_eq!(
            c.defuzzify(Defuzzifier::MeanOfMaxima).unwrap(),
            50.0,
            epsilon = 1e-9
        );
        assert_abs_diff_eq!(
            c.defuzzify(Defuzzifier::SmallestOfMaxima).unwrap(),
            37.5,
            epsilon = 1e-9
        );
        assert_abs_diff_eq!(
            c.defuzzify(Defuzzifier::LargestOfMaxima).unwrap(),
            62.5,
            epsilon = 1e-9
        );
    }

    #[test]
    fn bisector_examples() {
        let m = tri(25.0, 50.0, 75.0);
        assert_eq!(curve(|x| m.eval(x)).bisector().unwrap(), 50.0);
        // Right triangle on [0, 100] falling from 1: area left of t is
        // (100^2 - (100 - t)^2) / 200, half the total at t = 100 (1 - 1/sqrt 2).
        let analytic = 100.0 * (1.0 - 1.0 / 2f64.sqrt());
        assert_abs_diff_eq!(analytic, 29.2893, epsilon = 1e-4);
        let off = tri(0.0, 0.0, 100.0);
        assert_abs_diff_eq!(
            curve(|x| off.eval(x)).bisector().unwrap(),
            analytic,
            epsilon = 0.1
        );
    }

    #[test]
    fn empty_curve_errors_everywhere() {
        let c = curve(|_| 0.0);
        for m in [
            Defuzzifier::Centroid,
            Defuzzifier::Bisector,
            Defuzzifier::MeanOfMaxima,
            Defuzzifier::SmallestOfMaxima,
            Defuzzifier::LargestOfMaxima,
        ] {
            assert_eq!(c.defuzzify(m), Err(Error::EmptyAggregate));
        }
    }

    #[test]
    fn rejects_bad_sample_sets() {
        assert!(AggregateCurve::from_degrees(Universe::PERCENT, vec![0.0; 4]).is_err());
        assert!(AggregateCurve::from_degrees(Universe::PERCENT, vec![0.0, 1.5, 0.0]).is_err());
    }
}
