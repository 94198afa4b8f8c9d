//! Radio measurements and their mapping onto the [0, 100] input universe.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::catalog::InputId;
use crate::error::{Error, Result};

/// Boltzmann constant as used for interference temperature, J/K.
pub const BOLTZMANN: f64 = 1.38e-23;

fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

fn nonneg(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        Err(domain(format!("{name} must be finite and >= 0, got {v}")))
    }
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(domain(format!("{name} must be finite and > 0, got {v}")))
    }
}

/// Signal to interference-plus-noise ratio in dB.
pub fn sinr_db(desired: f64, interference: f64, noise: f64) -> Result<f64> {
    positive("desired power", desired)?;
    nonneg("interference power", interference)?;
    nonneg("noise power", noise)?;
    let floor = interference + noise;
    positive("interference + noise", floor)?;
    Ok(10.0 * (desired / floor).log10())
}

/// Interference temperature in kelvin: `p_i / (k B)`.
pub fn interference_temperature(p_i: f64, bandwidth: f64) -> Result<f64> {
    nonneg("interference power", p_i)?;
    positive("bandwidth", bandwidth)?;
    Ok(p_i / (BOLTZMANN * bandwidth))
}

/// Share of time the channel is free, in percent: `100 F / (U A + F)`.
pub fn susceptibility_pct(free_time: f64, usage_time: f64, arrivals: f64) -> Result<f64> {
    nonneg("free time", free_time)?;
    nonneg("usage time", usage_time)?;
    nonneg("arrivals", arrivals)?;
    let denom = usage_time * arrivals + free_time;
    positive("usage_time * arrivals + free_time", denom)?;
    Ok(100.0 * free_time / denom)
}

pub fn spectrum_utilisation_efficiency(su_band: f64, avail_band: f64) -> Result<f64> {
    nonneg("secondary band", su_band)?;
    positive("available band", avail_band)?;
    if su_band > avail_band {
        return Err(domain(format!(
            "secondary band {su_band} exceeds available band {avail_band}"
        )));
    }
    Ok(su_band / avail_band)
}

/// Primary transmit power over noise variance, in dB. Stands in for distance
/// to the primary user.
pub fn snr_distance_proxy(primary_tx_power: f64, noise_variance: f64) -> Result<f64> {
    positive("primary transmit power", primary_tx_power)?;
    positive("noise variance", noise_variance)?;
    Ok(10.0 * (primary_tx_power / noise_variance).log10())
}

/// Mean access latency in seconds for the two-queue model.
pub fn access_latency(
    rho1: f64,
    rho2: f64,
    p_block: f64,
    lambda1: f64,
    lambda2: f64,
) -> Result<f64> {
    if !(0.0..1.0).contains(&rho1) {
        return Err(domain(format!("rho1 must lie in [0, 1), got {rho1}")));
    }
    if !(0.0..=1.0).contains(&rho2) {
        return Err(domain(format!("rho2 must lie in [0, 1], got {rho2}")));
    }
    if !(0.0..=1.0).contains(&p_block) {
        return Err(domain(format!(
            "blocking probability must lie in [0, 1], got {p_block}"
        )));
    }
    nonneg("lambda1", lambda1)?;
    nonneg("lambda2", lambda2)?;
    positive("lambda1 + lambda2", lambda1 + lambda2)?;
    let n1 = rho1 / (1.0 - rho1);
    let n2 = rho2 * (1.0 - p_block);
    Ok((n1 + n2) / (lambda1 + lambda2))
}

/// Channel gain `(received - noise) / sent`.
pub fn channel_gain(received: f64, noise: f64, sent: f64) -> Result<f64> {
    if sent == 0.0 || !sent.is_finite() {
        return Err(domain(format!(
            "sent signal must be finite and nonzero, got {sent}"
        )));
    }
    if !received.is_finite() || !noise.is_finite() {
        return Err(domain("signal amplitudes must be finite"));
    }
    Ok((received - noise) / sent)
}

/// Raw interval mapped linearly onto [0, 100].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CalibrationRange {
    lo: f64,
    hi: f64,
}

impl CalibrationRange {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidParameter(format!(
                "calibration range needs lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(CalibrationRange { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }
}

pub fn normalize(raw: f64, range: CalibrationRange) -> f64 {
    let x = raw.clamp(range.lo, range.hi);
    100.0 * (x - range.lo) / (range.hi - range.lo)
}

/// Raw metrics that can stand in for a crisp input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RawMetric {
    SinrDb,
    InterferenceTemperature,
    Susceptibility,
    SpectrumUtilisationEfficiency,
    SnrProxyDb,
    AccessLatency,
    ChannelGain,
}

impl RawMetric {
    pub const ALL: [RawMetric; 7] = [
        RawMetric::SinrDb,
        RawMetric::InterferenceTemperature,
        RawMetric::Susceptibility,
        RawMetric::SpectrumUtilisationEfficiency,
        RawMetric::SnrProxyDb,
        RawMetric::AccessLatency,
        RawMetric::ChannelGain,
    ];

    pub fn key(self) -> &'static str {
        match self {
            RawMetric::SinrDb => "sinr_db",
            RawMetric::InterferenceTemperature => "interference_temperature",
            RawMetric::Susceptibility => "susceptibility_pct",
            RawMetric::SpectrumUtilisationEfficiency => "spectrum_utilisation_efficiency",
            RawMetric::SnrProxyDb => "snr_proxy_db",
            RawMetric::AccessLatency => "access_latency_s",
            RawMetric::ChannelGain => "channel_gain",
        }
    }

    /// The crisp input this metric is normalized into.
    pub fn input(self) -> InputId {
        match self {
            RawMetric::SinrDb => InputId::Snr,
            RawMetric::InterferenceTemperature => InputId::Interference,
            RawMetric::Susceptibility => InputId::Susceptibility,
            RawMetric::SpectrumUtilisationEfficiency => InputId::SpectrumUtilisationEfficiency,
            RawMetric::SnrProxyDb => InputId::DistanceToPrimaryUser,
            RawMetric::AccessLatency => InputId::AccessLatency,
            RawMetric::ChannelGain => InputId::ChannelQuality,
        }
    }

    /// Default range. These are arbitrary engineering choices.
    pub fn default_range(self) -> CalibrationRange {
        let (lo, hi) = match self {
            RawMetric::SinrDb => (-10.0, 30.0),
            RawMetric::InterferenceTemperature => (0.0, 1000.0),
            RawMetric::Susceptibility => (0.0, 100.0),
            RawMetric::SpectrumUtilisationEfficiency => (0.0, 1.0),
            RawMetric::SnrProxyDb => (-10.0, 30.0),
            RawMetric::AccessLatency => (0.0, 10.0),
            RawMetric::ChannelGain => (0.0, 1.0),
        };
        CalibrationRange { lo, hi }
    }
}

impl fmt::Display for RawMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for RawMetric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase().replace('-', "_");
        RawMetric::ALL
            .into_iter()
            .find(|m| m.key() == s)
            .ok_or_else(|| {
                let valid: Vec<_> = RawMetric::ALL.iter().map(|m| m.key()).collect();
                Error::InvalidParameter(format!(
                    "unknown raw metric `{s}` (valid: {})",
                    valid.join(", ")
                ))
            })
    }
}

/// Per-metric calibration, defaulting to [`RawMetric::default_range`].
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CalibrationTable {
    overrides: BTreeMap<RawMetric, CalibrationRange>,
}

impl CalibrationTable {
    pub fn set(&mut self, metric: RawMetric, range: CalibrationRange) {
        self.overrides.insert(metric, range);
    }

    pub fn range(&self, metric: RawMetric) -> CalibrationRange {
        self.overrides
            .get(&metric)
            .copied()
            .unwrap_or_else(|| metric.default_range())
    }

    /// Normalized crisp value and the input it feeds.
    pub fn crisp(&self, metric: RawMetric, raw: f64) -> (InputId, f64) {
        (metric.input(), normalize(raw, self.range(metric)))
    }
}

/// A full set of raw measurements for one link.
#[derive(Debug, Clone, PartialEq)]
pub struct RadioScenario {
    pub desired_power: f64,
    pub interference_power: f64,
    pub noise_power: f64,
    /// Average interference power at the center frequency.
    pub p_i: f64,
    pub bandwidth: f64,
    pub su_band: f64,
    pub avail_band: f64,
    pub primary_tx_power: f64,
    pub noise_variance: f64,
    pub free_time: f64,
    pub usage_time: f64,
    pub arrivals: f64,
    pub rho1: f64,
    pub rho2: f64,
    pub p_block: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    pub received_signal: f64,
    pub sent_signal: f64,
    pub noise_term: f64,
}

impl RadioScenario {
    /// Every raw metric the scenario determines.
    pub fn raw_metrics(&self) -> Result<Vec<(RawMetric, f64)>> {
        Ok(vec![
            (
                RawMetric::SinrDb,
                sinr_db(
                    self.desired_power,
                    self.interference_power,
                    self.noise_power,
                )?,
            ),
            (
                RawMetric::InterferenceTemperature,
                interference_temperature(self.p_i, self.bandwidth)?,
            ),
            (
                RawMetric::Susceptibility,
                susceptibility_pct(self.free_time, self.usage_time, self.arrivals)?,
            ),
            (
                RawMetric::SpectrumUtilisationEfficiency,
                spectrum_utilisation_efficiency(self.su_band, self.avail_band)?,
            ),
            (
                RawMetric::SnrProxyDb,
                snr_distance_proxy(self.primary_tx_power, self.noise_variance)?,
            ),
            (
                RawMetric::AccessLatency,
                access_latency(
                    self.rho1,
                    self.rho2,
                    self.p_block,
                    self.lambda1,
                    self.lambda2,
                )?,
            ),
            (
                RawMetric::ChannelGain,
                channel_gain(self.received_signal, self.noise_term, self.sent_signal)?,
            ),
        ])
    }

    pub fn crisp_inputs(&self, calibration: &CalibrationTable) -> Result<Vec<(InputId, f64)>> {
        Ok(self
            .raw_metrics()?
            .into_iter()
            .map(|(m, raw)| calibration.crisp(m, raw))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn sinr_examples() {
        assert_relative_eq!(
            sinr_db(100.0, 0.5, 0.5).unwrap(),
            20.0,
            max_relative = 1e-12
        );
        assert_eq!(sinr_db(1.0, 0.5, 0.5).unwrap(), 0.0);
        assert_relative_eq!(sinr_db(1.0, 9.0, 1.0).unwrap(), -10.0, max_relative = 1e-12);
        assert!(sinr_db(0.0, 1.0, 1.0).is_err());
        assert!(sinr_db(1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn queue_latency() {
        assert_relative_eq!(
            access_latency(0.5, 0.5, 0.0, 0.5, 0.5).unwrap(),
            1.5,
            max_relative = 1e-12
        );
        assert_eq!(access_latency(0.0, 0.0, 0.3, 1.0, 1.0).unwrap(), 0.0);
        assert_relative_eq!(
            access_latency(0.5, 1.0, 1.0, 1.0, 1.0).unwrap(),
            0.5,
            max_relative = 1e-12
        );
        assert!(access_latency(1.0, 0.0, 0.0, 1.0, 1.0).is_err());
        assert!(access_latency(0.5, 0.0, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn normalize_clamps() {
        let r = CalibrationRange::new(-10.0, 30.0).unwrap();
        assert_eq!(normalize(-10.0, r), 0.0);
        assert_eq!(normalize(10.0, r), 50.0);
        assert_eq!(normalize(99.0, r), 100.0);
        assert_eq!(normalize(-99.0, r), 0.0);
        assert!(CalibrationRange::new(1.0, 1.0).is_err());
    }

    #[test]
    fn scenario_to_inputs() {
        let s = RadioScenario {
            desired_power: 100.0,
            interference_power: 0.5,
            noise_power: 0.5,
            p_i: 1.38e-17,
            bandwidth: 1e6,
            su_band: 5e6,
            avail_band: 1e7,
            primary_tx_power: 10.0,
            noise_variance: 1.0,
            free_time: 2.0,
            usage_time: 1.0,
            arrivals: 2.0,
            rho1: 0.5,
            rho2: 0.5,
            p_block: 0.0,
            lambda1: 0.5,
            lambda2: 0.5,
            received_signal: 2.0,
            sent_signal: 1.0,
            noise_term: 1.0,
        };
        let mut cal = CalibrationTable::default();
        cal.set(
            RawMetric::InterferenceTemperature,
            CalibrationRange::new(0.0, 2.0).unwrap(),
        );
        let got: BTreeMap<_, _> = s.crisp_inputs(&cal).unwrap().into_iter().collect();
        assert_relative_eq!(got[&InputId::Snr], 75.0, max_relative = 1e-12);
        assert_relative_eq!(got[&InputId::Interference], 50.0, max_relative = 1e-12);
        assert_relative_eq!(got[&InputId::Susceptibility], 50.0, max_relative = 1e-12);
        assert_relative_eq!(
            got[&InputId::SpectrumUtilisationEfficiency],
            50.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            got[&InputId::DistanceToPrimaryUser],
            50.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(got[&InputId::AccessLatency], 15.0, max_relative = 1e-12);
        assert_relative_eq!(got[&InputId::ChannelQuality], 100.0, max_relative = 1e-12);
    }

    #[test]
    fn metric_names_parse() {
        for m in RawMetric::ALL {
            assert_eq!(m.key().parse::<RawMetric>().unwrap(), m);
        }
        assert!("watts".parse::<RawMetric>().is_err());
    }
}
