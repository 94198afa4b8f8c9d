//! The standard variable catalog: 13 radio inputs and 6 decision outputs on
//! the `[0, 100]` universe, in a triangular and a Gaussian shape family.
//!
//! Triangles put their peak at the middle of each label's range, with the
//! extreme labels degenerate at the universe edge. Gaussian terms keep the
//! same peak and match the triangle's full width at half maximum.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::membership::{MembershipFunction, Universe};
use crate::variable::{LinguisticTerm, LinguisticVariable, VariableKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MfFamily {
    Triangular,
    Gaussian,
}

impl MfFamily {
    pub fn name(self) -> &'static str {
        match self {
            MfFamily::Triangular => "triangular",
            MfFamily::Gaussian => "gaussian",
        }
    }
}

impl FromStr for MfFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "triangular" | "tri" => Ok(MfFamily::Triangular),
            "gaussian" | "gauss" => Ok(MfFamily::Gaussian),
            _ => Err(Error::InvalidParameter(format!("unknown MF family `{s}`"))),
        }
    }
}

/// Which labelled partition a variable uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LabelSet {
    /// VeryLow, Low, Moderate, High, VeryHigh
    FiveLevel,
    /// Small, Medium, Large
    ThreeSize,
    OffOn,
    AbsentPresent,
}

impl LabelSet {
    /// Label and triangle `(a, b, c)` for every term, in order.
    pub fn triangles(self) -> &'static [(&'static str, [f64; 3])] {
        match self {
            LabelSet::FiveLevel => &[
                ("VeryLow", [0.0, 0.0, 25.0]),
                ("Low", [0.0, 25.0, 50.0]),
                ("Moderate", [25.0, 50.0, 75.0]),
                ("High", [50.0, 75.0, 100.0]),
                ("VeryHigh", [75.0, 100.0, 100.0]),
            ],
            LabelSet::ThreeSize => &[
                ("Small", [0.0, 0.0, 50.0]),
                ("Medium", [0.0, 50.0, 100.0]),
                ("Large", [50.0, 100.0, 100.0]),
            ],
            LabelSet::OffOn => &[("Off", [0.0, 0.0, 100.0]), ("On", [0.0, 100.0, 100.0])],
            LabelSet::AbsentPresent => &[
                ("Absent", [0.0, 0.0, 100.0]),
                ("Present", [0.0, 100.0, 100.0]),
            ],
        }
    }

    pub fn labels(self) -> impl Iterator<Item = &'static str> {
        self.triangles().iter().map(|(l, _)| *l)
    }

    /// Peak of each term; these are the constant Sugeno consequents.
    pub fn peaks(self) -> impl Iterator<Item = f64> {
        self.triangles().iter().map(|(_, p)| p[1])
    }
}

macro_rules! id_enum {
    ($(#[$m:meta])* $name:ident { $($variant:ident => $key:literal, $title:literal, $set:ident;)* }) => {
        $(#[$m])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name { $($variant),* }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),*];

            /// Snake-case identifier used in rule files, CSV headers and flags.
            pub fn key(self) -> &'static str {
                match self { $($name::$variant => $key),* }
            }

            pub fn title(self) -> &'static str {
                match self { $($name::$variant => $title),* }
            }

            pub fn label_set(self) -> LabelSet {
                match self { $($name::$variant => LabelSet::$set),* }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.key())
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                let k = s.trim().to_ascii_lowercase().replace('-', "_");
                $name::ALL
                    .iter()
                    .copied()
                    .find(|v| v.key() == k)
                    .ok_or_else(|| Error::InvalidParameter(format!(
                        concat!("unknown ", stringify!($name), " `{}`"), s
                    )))
            }
        }
    };
}

id_enum! {
    /// The thirteen crisp radio inputs.
    InputId {
        SignalStrength => "signal_strength", "Signal strength", FiveLevel;
        SpectrumDemand => "spectrum_demand", "Spectrum demand", FiveLevel;
        Snr => "snr", "Signal to interference plus noise ratio", FiveLevel;
        Interference => "interference", "Interference", FiveLevel;
        ChannelQuality => "channel_quality", "Channel quality", FiveLevel;
        Susceptibility => "susceptibility", "Susceptibility", FiveLevel;
        SpectrumUtilisationEfficiency => "spectrum_utilisation_efficiency", "Spectrum utilisation efficiency", ThreeSize;
        DegreeOfMobility => "degree_of_mobility", "Degree of mobility", ThreeSize;
        DistanceToPrimaryUser => "distance_to_primary_user", "Distance to primary user", ThreeSize;
        SuTrafficIntensity => "su_traffic_intensity", "Secondary user traffic intensity", FiveLevel;
        BaTrafficIntensity => "ba_traffic_intensity", "Bandwidth allocation traffic intensity", AbsentPresent;
        AccessLatency => "access_latency", "Access latency", FiveLevel;
        TrafficPriority => "traffic_priority", "Traffic priority", AbsentPresent;
    }
}

id_enum! {
    /// The six decision outputs.
    OutputId {
        ChannelSelection => "channel_selection", "Channel selection probability", FiveLevel;
        HandoffStatus => "handoff_status", "Handoff status", OffOn;
        ChannelGain => "channel_gain", "Channel gain", FiveLevel;
        AccessSpectrum => "access_spectrum", "Access the spectrum", FiveLevel;
        AccessLatency => "access_latency", "Access latency", FiveLevel;
        BandwidthAllocation => "bandwidth_allocation", "Bandwidth allocation", FiveLevel;
    }
}

fn build_terms(set: LabelSet, family: MfFamily) -> Result<Vec<LinguisticTerm>> {
    set.triangles()
        .iter()
        .map(|&(label, [a, b, c])| {
            let tri = MembershipFunction::triangular(a, b, c)?;
            let mf = match family {
                MfFamily::Triangular => tri,
                MfFamily::Gaussian => tri.gaussian_equivalent()?,
            };
            Ok(LinguisticTerm::new(label, mf))
        })
        .collect()
}

pub fn input_variable(id: InputId, family: MfFamily) -> LinguisticVariable {
    LinguisticVariable::new(
        id.key(),
        Universe::PERCENT,
        build_terms(id.label_set(), family).expect("catalog terms are valid"),
        VariableKind::Input,
    )
    .expect("catalog variables satisfy coverage")
}

pub fn output_variable(id: OutputId, family: MfFamily) -> LinguisticVariable {
    LinguisticVariable::new(
        id.key(),
        Universe::PERCENT,
        build_terms(id.label_set(), family).expect("catalog terms are valid"),
        VariableKind::Output,
    )
    .expect("catalog variables satisfy coverage")
}

/// All 13 inputs and 6 outputs in one shape family.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub family: MfFamily,
    pub inputs: Vec<LinguisticVariable>,
    pub outputs: Vec<LinguisticVariable>,
}

impl Catalog {
    pub fn new(family: MfFamily) -> Self {
        Catalog {
            family,
            inputs: InputId::ALL
                .iter()
                .map(|&i| input_variable(i, family))
                .collect(),
            outputs: OutputId::ALL
                .iter()
                .map(|&o| output_variable(o, family))
                .collect(),
        }
    }

    pub fn input(&self, id: InputId) -> &LinguisticVariable {
        &self.inputs[id as usize]
    }

    pub fn output(&self, id: OutputId) -> &LinguisticVariable {
        &self.outputs[id as usize]
    }
}

/// The triangular and Gaussian catalogs, in that order.
pub fn standard_catalog() -> [Catalog; 2] {
    [
        Catalog::new(MfFamily::Triangular),
        Catalog::new(MfFamily::Gaussian),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn five_level_fuzzify_at_midpoint_and_edge() {
        let v = input_variable(InputId::SignalStrength, MfFamily::Triangular);
        assert_eq!(v.fuzzify(50.0).degrees(), &[0.0, 0.0, 1.0, 0.0, 0.0]);
        assert_eq!(v.fuzzify(0.0).degrees(), &[1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(v.fuzzify(110.0), v.fuzzify(100.0));
        // 10 sits 40% of the way from VeryLow's peak to Low's peak.
        let d = v.fuzzify(10.0);
        assert_abs_diff_eq!(d.degrees()[0], 0.6, epsilon = 1e-12);
        assert_abs_diff_eq!(d.degrees()[1], 0.4, epsilon = 1e-12);
    }

    #[test]
    fn catalog_shapes_are_as_documented() {
        let cat = Catalog::new(MfFamily::Triangular);
        let mob = cat.input(InputId::DegreeOfMobility);
        let labels: Vec<_> = mob.labels().collect();
        assert_eq!(labels, ["Small", "Medium", "Large"]);
        assert_eq!(
            mob.term("Medium").unwrap().mf,
            MembershipFunction::triangular(0.0, 50.0, 100.0).unwrap()
        );
        let ho = cat.output(OutputId::HandoffStatus);
        assert_eq!(
            ho.term("Off").unwrap().mf,
            MembershipFunction::triangular(0.0, 0.0, 100.0).unwrap()
        );
        assert_eq!(cat.inputs.len(), 13);
        assert_eq!(cat.outputs.len(), 6);
    }

    #[test]
    fn gaussian_sigmas() {
        let cat = Catalog::new(MfFamily::Gaussian);
        let sigma = |v: &LinguisticVariable, l: &str| match v.term(l).unwrap().mf {
            MembershipFunction::Gaussian { sigma, .. } => sigma,
            _ => panic!("not gaussian"),
        };
        let s = cat.input(InputId::Snr);
        assert_abs_diff_eq!(sigma(s, "Moderate"), 10.6165, epsilon = 1e-4);
        assert_abs_diff_eq!(sigma(s, "VeryLow"), 10.6165, epsilon = 1e-4);
        assert_abs_diff_eq!(
            sigma(cat.input(InputId::DegreeOfMobility), "Medium"),
            21.2330,
            epsilon = 1e-4
        );
        assert_abs_diff_eq!(
            sigma(cat.input(InputId::TrafficPriority), "Absent"),
            42.4661,
            epsilon = 1e-4
        );
    }

    #[test]
    fn families_share_peak_locations() {
        let [tri, gau] = standard_catalog();
        for (t, g) in tri
            .inputs
            .iter()
            .chain(&tri.outputs)
            .zip(gau.inputs.iter().chain(&gau.outputs))
        {
            for (tt, gt) in t.terms().iter().zip(g.terms()) {
                assert_eq!(tt.label, gt.label);
                assert_eq!(tt.mf.peak(), gt.mf.peak(), "{} {}", t.name(), tt.label);
            }
        }
    }

    #[test]
    fn every_catalog_variable_covers_universe() {
        for cat in standard_catalog() {
            for v in cat.inputs.iter().chain(&cat.outputs) {
                for i in 0..=10_000 {
                    let x = i as f64 / 100.0;
                    let best = v.fuzzify(x).degrees().iter().copied().fold(0.0, f64::max);
                    assert!(best >= 0.01, "{} dead at {x}", v.name());
                }
            }
        }
    }

    #[test]
    fn ids_parse_with_dashes() {
        assert_eq!(
            "signal-strength".parse::<InputId>().unwrap(),
            InputId::SignalStrength
        );
        assert_eq!(
            "handoff_status".parse::<OutputId>().unwrap(),
            OutputId::HandoffStatus
        );
        assert!("nope".parse::<InputId>().is_err());
    }
}
