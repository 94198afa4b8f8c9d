//! Linguistic variables: a universe partitioned into labelled terms.

use std::fmt;

use crate::error::{Error, Result};
use crate::membership::{MembershipFunction, Universe};

/// Minimum degree some term must reach everywhere on the universe.
pub const COVERAGE_FLOOR: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VariableKind {
    Input,
    Output,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinguisticTerm {
    pub label: String,
    pub mf: MembershipFunction,
}

impl LinguisticTerm {
    pub fn new(label: impl Into<String>, mf: MembershipFunction) -> Self {
        LinguisticTerm {
            label: label.into(),
            mf,
        }
    }
}

/// Canonical key for label matching: case-insensitive, with spaces,
/// underscores and hyphens ignored (`Very_Low`, `very low`, `VeryLow` agree).
pub fn label_key(label: &str) -> String {
    label
        .chars()
        .filter(|c| !matches!(c, '_' | ' ' | '-'))
        .flat_map(char::to_lowercase)
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinguisticVariable {
    name: String,
    universe: Universe,
    terms: Vec<LinguisticTerm>,
    kind: VariableKind,
}

impl LinguisticVariable {
    /// Validates term count, label uniqueness and coverage of the universe.
    pub fn new(
        name: impl Into<String>,
        universe: Universe,
        terms: Vec<LinguisticTerm>,
        kind: VariableKind,
    ) -> Result<Self> {
        let name = name.into();
        if terms.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "variable `{name}` needs at least 2 terms"
            )));
        }
        for (i, t) in terms.iter().enumerate() {
            let key = label_key(&t.label);
            if key.is_empty() {
                return Err(Error::InvalidParameter(format!(
                    "variable `{name}` has an empty label"
                )));
            }
            if terms[..i].iter().any(|o| label_key(&o.label) == key) {
                return Err(Error::InvalidParameter(format!(
                    "variable `{name}` repeats label `{}`",
                    t.label
                )));
            }
        }
        let var = LinguisticVariable {
            name,
            universe,
            terms,
            kind,
        };
        if let Some((x, best)) = var.worst_coverage() {
            if best < COVERAGE_FLOOR {
                return Err(Error::InvalidParameter(format!(
                    "variable `{}` has a dead zone at {x} (max degree {best})",
                    var.name
                )));
            }
        }
        Ok(var)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn terms(&self) -> &[LinguisticTerm] {
        &self.terms
    }

    pub fn kind(&self) -> VariableKind {
        self.kind
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.terms.iter().map(|t| t.label.as_str())
    }

    pub fn term_index(&self, label: &str) -> Option<usize> {
        let key = label_key(label);
        self.terms.iter().position(|t| label_key(&t.label) == key)
    }

    pub fn term(&self, label: &str) -> Option<&LinguisticTerm> {
        self.term_index(label).map(|i| &self.terms[i])
    }

    /// Degrees of every term at `x`, after clamping `x` into the universe.
    pub fn fuzzify(&self, x: f64) -> Memberships {
        let x = self.universe.clamp(x);
        Memberships {
            degrees: self.terms.iter().map(|t| t.mf.eval(x)).collect(),
        }
    }

    /// Lowest "max over terms" degree found on a dense grid plus every
    /// breakpoint of the term shapes.
    fn worst_coverage(&self) -> Option<(f64, f64)> {
        let (lo, hi) = (self.universe.lo(), self.universe.hi());
        let n = 2000;
        let mut probes: Vec<f64> = (0..=n)
            .map(|i| lo + (hi - lo) * i as f64 / n as f64)
            .collect();
        for t in &self.terms {
            match t.mf {
                MembershipFunction::Triangular { a, b, c } => probes.extend([a, b, c]),
                MembershipFunction::TrapezoidShoulder { a, b, c, d } => probes.extend([a, b, c, d]),
                MembershipFunction::Gaussian { mean, .. } => probes.push(mean),
            }
        }
        probes
            .into_iter()
            .filter(|x| self.universe.contains(*x))
            .map(|x| {
                let best = self.terms.iter().map(|t| t.mf.eval(x)).fold(0.0, f64::max);
                (x, best)
            })
            .min_by(|a, b| a.1.total_cmp(&b.1))
    }
}

/// Term degrees of one variable, in term order.
#[derive(Debug, Clone, PartialEq)]
pub struct Memberships {
    degrees: Vec<f64>,
}

impl Memberships {
    pub fn from_degrees(degrees: Vec<f64>) -> Self {
        Memberships { degrees }
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    pub fn get(&self, term: usize) -> Option<f64> {
        self.degrees.get(term).copied()
    }

    /// Label/degree pairs, in term order.
    pub fn labelled<'a>(&'a self, var: &'a LinguisticVariable) -> Vec<(&'a str, f64)> {
        var.labels().zip(self.degrees.iter().copied()).collect()
    }
}

/// Free-function form of [`LinguisticVariable::fuzzify`].
pub fn fuzzify(var: &LinguisticVariable, x: f64) -> Memberships {
    var.fuzzify(x)
}

impl fmt::Display for LinguisticVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.name)?;
        for (i, l) in self.labels().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(l)?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(a: f64, b: f64, c: f64) -> MembershipFunction {
        MembershipFunction::triangular(a, b, c).unwrap()
    }

    #[test]
    fn label_keys_ignore_case_and_separators() {
        assert_eq!(label_key("Very_Low"), label_key("very low"));
        assert_eq!(label_key("VeryLow"), label_key("VERY-LOW"));
        assert_ne!(label_key("Low"), label_key("VeryLow"));
    }

    #[test]
    fn rejects_duplicates_and_dead_zones() {
        let dup = LinguisticVariable::new(
            "v",
            Universe::PERCENT,
            vec![
                LinguisticTerm::new("Low", tri(0.0, 0.0, 100.0)),
                LinguisticTerm::new("low", tri(0.0, 100.0, 100.0)),
            ],
            VariableKind::Input,
        );
        assert!(dup.is_err());

        let gap = LinguisticVariable::new(
            "v",
            Universe::PERCENT,
            vec![
                LinguisticTerm::new("A", tri(0.0, 0.0, 40.0)),
                LinguisticTerm::new("B", tri(60.0, 100.0, 100.0)),
            ],
            VariableKind::Input,
        );
        assert!(matches!(gap, Err(Error::InvalidParameter(_))));

        let single = LinguisticVariable::new(
            "v",
            Universe::PERCENT,
            vec![LinguisticTerm::new("A", tri(0.0, 50.0, 100.0))],
            VariableKind::Input,
        );
        assert!(single.is_err());
    }

    #[test]
    fn fuzzify_clamps_out_of_range() {
        let v = LinguisticVariable::new(
            "v",
            Universe::PERCENT,
            vec![
                LinguisticTerm::new("Off", tri(0.0, 0.0, 100.0)),
                LinguisticTerm::new("On", tri(0.0, 100.0, 100.0)),
            ],
            VariableKind::Input,
        )
        .unwrap();
        assert_eq!(v.fuzzify(110.0), v.fuzzify(100.0));
        assert_eq!(v.fuzzify(-3.0).degrees(), &[1.0, 0.0]);
        assert_eq!(v.term_index("ON"), Some(1));
    }
}
