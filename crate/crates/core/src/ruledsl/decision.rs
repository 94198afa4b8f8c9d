use std::fmt;
use std::str::FromStr;

use crate::catalog::{InputId, OutputId};
use crate::error::{Error, Result};

/// The six spectrum decisions, one rule base each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DecisionId {
    ChannelSelection,
    HandoffStatus,
    ChannelGain,
    AccessSpectrum,
    AccessLatency,
    BandwidthAllocation,
}

impl DecisionId {
    pub const ALL: [DecisionId; 6] = [
        DecisionId::ChannelSelection,
        DecisionId::HandoffStatus,
        DecisionId::ChannelGain,
        DecisionId::AccessSpectrum,
        DecisionId::AccessLatency,
        DecisionId::BandwidthAllocation,
    ];

    /// Short name used on the command line.
    pub fn key(self) -> &'static str {
        match self {
            DecisionId::ChannelSelection => "channel-selection",
            DecisionId::HandoffStatus => "handoff",
            DecisionId::ChannelGain => "channel-gain",
            DecisionId::AccessSpectrum => "access-spectrum",
            DecisionId::AccessLatency => "access-latency",
            DecisionId::BandwidthAllocation => "bandwidth-allocation",
        }
    }

    pub fn inputs(self) -> &'static [InputId] {
        use InputId::*;
        match self {
            DecisionId::ChannelSelection => &[SignalStrength, SpectrumDemand, Snr],
            DecisionId::HandoffStatus => &[Snr, Interference],
            DecisionId::ChannelGain => &[ChannelQuality, Susceptibility],
            DecisionId::AccessSpectrum => &[
                SpectrumUtilisationEfficiency,
                DegreeOfMobility,
                DistanceToPrimaryUser,
            ],
            DecisionId::AccessLatency => &[SuTrafficIntensity, BaTrafficIntensity],
            DecisionId::BandwidthAllocation => &[AccessLatency, TrafficPriority],
        }
    }

    pub fn output(self) -> OutputId {
        match self {
            DecisionId::ChannelSelection => OutputId::ChannelSelection,
            DecisionId::HandoffStatus => OutputId::HandoffStatus,
            DecisionId::ChannelGain => OutputId::ChannelGain,
            DecisionId::AccessSpectrum => OutputId::AccessSpectrum,
            DecisionId::AccessLatency => OutputId::AccessLatency,
            DecisionId::BandwidthAllocation => OutputId::BandwidthAllocation,
        }
    }

    /// Number of rules in the complete built-in base.
    pub fn rule_count(self) -> usize {
        self.inputs()
            .iter()
            .map(|i| i.label_set().labels().count())
            .product()
    }

    pub fn from_output(output: &str) -> Option<DecisionId> {
        let out = output.parse::<OutputId>().ok()?;
        DecisionId::ALL.into_iter().find(|d| d.output() == out)
    }
}

impl fmt::Display for DecisionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for DecisionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let k = s.trim().to_ascii_lowercase().replace('_', "-");
        DecisionId::ALL
            .into_iter()
            .find(|d| d.key() == k)
            .or_else(|| DecisionId::from_output(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown decision `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_keys_and_outputs() {
        assert_eq!(
            "handoff".parse::<DecisionId>().unwrap(),
            DecisionId::HandoffStatus
        );
        assert_eq!(
            "handoff_status".parse::<DecisionId>().unwrap(),
            DecisionId::HandoffStatus
        );
        assert_eq!(
            "channel_gain".parse::<DecisionId>().unwrap(),
            DecisionId::ChannelGain
        );
        assert!("gain".parse::<DecisionId>().is_err());
    }

    #[test]
    fn rule_counts() {
        let counts: Vec<usize> = DecisionId::ALL.iter().map(|d| d.rule_count()).collect();
        assert_eq!(counts, [125, 25, 25, 27, 10, 10]);
    }
}
