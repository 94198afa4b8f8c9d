// Rule tables transcribed row by row, in printed order.

/// Signal strength, spectrum demand, SNR -> channel selection. 126 printed rows, one exact duplicate.
pub(super) const CHANNEL_SELECTION: &[[&str; 4]] = &[
    ["VeryHigh", "VeryHigh", "VeryHigh", "Moderate"],
    ["VeryHigh", "VeryHigh", "High", "Low"],
    ["VeryHigh", "VeryHigh", "Moderate", "VeryLow"],
    ["VeryHigh", "VeryHigh", "Low", "VeryLow"],
    ["VeryHigh", "VeryHigh", "VeryLow", "VeryLow"],
    ["VeryHigh", "High", "VeryHigh", "High"],
    ["VeryHigh", "High", "High", "Moderate"],
    ["VeryHigh", "High", "Moderate", "Low"],
    ["VeryHigh", "High", "Low", "VeryLow"],
    ["VeryHigh", "High", "VeryLow", "VeryLow"],
    ["VeryHigh", "Moderate", "VeryHigh", "VeryHigh"],
    ["VeryHigh", "Moderate", "High", "High"],
    ["VeryHigh", "Moderate", "Moderate", "Moderate"],
    ["VeryHigh", "Moderate", "Low", "Low"],
    ["VeryHigh", "Moderate", "VeryLow", "VeryLow"],
    ["VeryHigh", "Low", "VeryHigh", "VeryHigh"],
    ["VeryHigh", "Low", "High", "VeryHigh"],
    ["VeryHigh", "Low", "Moderate", "High"],
    ["VeryHigh", "Low", "Low", "Moderate"],
    ["VeryHigh", "Low", "VeryLow", "Low"],
    ["VeryHigh", "VeryLow", "VeryHigh", "VeryHigh"],
    ["VeryHigh", "VeryLow", "High", "VeryHigh"],
    ["VeryHigh", "VeryLow", "Moderate", "VeryHigh"],
    ["VeryHigh", "VeryLow", "Low", "High"],
    ["VeryHigh", "VeryLow", "VeryLow", "Moderate"],
    ["High", "VeryHigh", "VeryHigh", "Moderate"],
    ["High", "VeryHigh", "High", "Low"],
    ["High", "VeryHigh", "Moderate", "VeryLow"],
    ["High", "VeryHigh", "Low", "VeryLow"],
    ["High", "VeryHigh", "VeryLow", "VeryLow"],
    ["High", "High", "VeryHigh", "High"],
    ["High", "High", "High", "Moderate"],
    ["High", "High", "Moderate", "Low"],
    ["High", "High", "Low", "VeryLow"],
    ["High", "High", "VeryLow", "VeryLow"],
    ["High", "Moderate", "VeryHigh", "VeryHigh"],
    ["High", "Moderate", "High", "High"],
    ["High", "Moderate", "Moderate", "Moderate"],
    ["High", "Moderate", "Low", "Low"],
    ["High", "Moderate", "VeryLow", "VeryLow"],
    ["High", "Low", "VeryHigh", "VeryHigh"],
    ["High", "Low", "High", "VeryHigh"],
    ["High", "Low", "Moderate", "High"],
    ["High", "Low", "Low", "Moderate"],
    ["High", "Low", "VeryLow", "Low"],
    ["High", "VeryLow", "VeryHigh", "VeryHigh"],
    ["High", "VeryLow", "High", "VeryHigh"],
    ["High", "VeryLow", "Moderate", "VeryHigh"],
    ["High", "VeryLow", "Low", "High"],
    ["High", "VeryLow", "VeryLow", "Moderate"],
    ["Moderate", "VeryHigh", "VeryHigh", "Moderate"],
    ["Moderate", "VeryHigh", "High", "Low"],
    ["Moderate", "VeryHigh", "Moderate", "Low"],
    ["Moderate", "VeryHigh", "Low", "VeryLow"],
    ["Moderate", "VeryHigh", "VeryLow", "VeryLow"],
    ["Moderate", "High", "VeryHigh", "High"],
    ["Moderate", "High", "High", "Moderate"],
    ["Moderate", "High", "Moderate", "Low"],
    ["Moderate", "High", "Low", "Low"],
    ["Moderate", "High", "VeryLow", "VeryLow"],
    ["Moderate", "Moderate", "VeryHigh", "VeryHigh"],
    ["Moderate", "Moderate", "High", "High"],
    ["Moderate", "Moderate", "Moderate", "Moderate"],
    ["Moderate", "Moderate", "Low", "Low"],
    ["Moderate", "Moderate", "VeryLow", "VeryLow"],
    ["Moderate", "Low", "VeryHigh", "VeryHigh"],
    ["Moderate", "Low", "High", "VeryHigh"],
    ["Moderate", "Low", "Moderate", "High"],
    ["Moderate", "Low", "Low", "Moderate"],
    ["Moderate", "Low", "VeryLow", "Low"],
    ["Moderate", "VeryLow", "VeryHigh", "VeryHigh"],
    ["Moderate", "VeryLow", "High", "VeryHigh"],
    ["Moderate", "VeryLow", "Moderate", "VeryHigh"],
    ["Moderate", "VeryLow", "Low", "High"],
    ["Moderate", "VeryLow", "VeryLow", "Moderate"],
    ["Low", "VeryHigh", "VeryHigh", "Moderate"],
    ["Low", "VeryHigh", "High", "Low"],
    ["Low", "VeryHigh", "Moderate", "Low"],
    ["Low", "VeryHigh", "Low", "VeryLow"],
    ["Low", "VeryHigh", "VeryLow", "VeryLow"],
    ["Low", "High", "VeryHigh", "High"],
    ["Low", "High", "High", "Moderate"],
    ["Low", "High", "Moderate", "Low"],
    ["Low", "High", "Low", "VeryLow"],
    ["Low", "High", "VeryLow", "VeryLow"],
    ["Low", "Moderate", "VeryHigh", "Low"],
    ["Low", "Moderate", "High", "Low"],
    ["Low", "Moderate", "Moderate", "VeryLow"],
    ["Low", "Moderate", "Low", "Low"],
    ["Low", "Moderate", "VeryLow", "VeryLow"],
    ["Low", "Low", "VeryHigh", "VeryHigh"],
    ["Low", "Low", "High", "VeryHigh"],
    ["Low", "Low", "Moderate", "Moderate"],
    ["Low", "Low", "Low", "Low"],
    ["Low", "Low", "VeryLow", "Low"],
    ["Low", "VeryLow", "VeryHigh", "VeryHigh"],
    ["Low", "VeryLow", "High", "VeryHigh"],
    ["Low", "VeryLow", "Moderate", "High"],
    ["Low", "VeryLow", "Low", "Moderate"],
    ["Low", "VeryLow", "VeryLow", "Moderate"],
    ["Low", "VeryLow", "VeryLow", "Moderate"],
    ["VeryLow", "VeryHigh", "VeryHigh", "Moderate"],
    ["VeryLow", "VeryHigh", "High", "Low"],
    ["VeryLow", "VeryHigh", "Moderate", "Low"],
    ["VeryLow", "VeryHigh", "Low", "VeryLow"],
    ["VeryLow", "VeryHigh", "VeryLow", "VeryLow"],
    ["VeryLow", "High", "VeryHigh", "High"],
    ["VeryLow", "High", "High", "Moderate"],
    ["VeryLow", "High", "Moderate", "Low"],
    ["VeryLow", "High", "Low", "VeryLow"],
    ["VeryLow", "High", "VeryLow", "VeryLow"],
    ["VeryLow", "Moderate", "VeryHigh", "Low"],
    ["VeryLow", "Moderate", "High", "Low"],
    ["VeryLow", "Moderate", "Moderate", "VeryLow"],
    ["VeryLow", "Moderate", "Low", "VeryLow"],
    ["VeryLow", "Moderate", "VeryLow", "VeryLow"],
    ["VeryLow", "Low", "VeryHigh", "VeryHigh"],
    ["VeryLow", "Low", "High", "VeryHigh"],
    ["VeryLow", "Low", "Moderate", "Moderate"],
    ["VeryLow", "Low", "Low", "Low"],
    ["VeryLow", "Low", "VeryLow", "VeryLow"],
    ["VeryLow", "VeryLow", "VeryHigh", "VeryHigh"],
    ["VeryLow", "VeryLow", "High", "VeryHigh"],
    ["VeryLow", "VeryLow", "Moderate", "High"],
    ["VeryLow", "VeryLow", "Low", "Moderate"],
    ["VeryLow", "VeryLow", "VeryLow", "VeryLow"],
];

/// SNR, interference -> handoff status.
pub(super) const HANDOFF_STATUS: &[[&str; 3]] = &[
    ["VeryHigh", "VeryHigh", "Off"],
    ["VeryHigh", "High", "Off"],
    ["VeryHigh", "Moderate", "On"],
    ["VeryHigh", "Low", "On"],
    ["VeryHigh", "VeryLow", "On"],
    ["High", "VeryHigh", "Off"],
    ["High", "High", "Off"],
    ["High", "Moderate", "On"],
    ["High", "Low", "On"],
    ["High", "VeryLow", "On"],
    ["Moderate", "VeryHigh", "Off"],
    ["Moderate", "High", "Off"],
    ["Moderate", "Moderate", "On"],
    ["Moderate", "Low", "On"],
    ["Moderate", "VeryLow", "Off"],
    ["Low", "VeryHigh", "Off"],
    ["Low", "High", "Off"],
    ["Low", "Moderate", "Off"],
    ["Low", "Low", "Off"],
    ["Low", "VeryLow", "Off"],
    ["VeryLow", "VeryHigh", "Off"],
    ["VeryLow", "High", "Off"],
    ["VeryLow", "Moderate", "Off"],
    ["VeryLow", "Low", "Off"],
    ["VeryLow", "VeryLow", "Off"],
];

/// Channel quality, susceptibility -> channel gain.
pub(super) const CHANNEL_GAIN: &[[&str; 3]] = &[
    ["VeryHigh", "VeryHigh", "Low"],
    ["VeryHigh", "High", "Low"],
    ["VeryHigh", "Moderate", "High"],
    ["VeryHigh", "Low", "VeryHigh"],
    ["VeryHigh", "VeryLow", "VeryHigh"],
    ["High", "VeryHigh", "Low"],
    ["High", "High", "Low"],
    ["High", "Moderate", "Moderate"],
    ["High", "Low", "High"],
    ["High", "VeryLow", "VeryHigh"],
    ["Low", "VeryHigh", "Low"],
    ["Low", "High", "Low"],
    ["Low", "Moderate", "Low"],
    ["Low", "Low", "Low"],
    ["Low", "VeryLow", "Low"],
    ["Moderate", "VeryHigh", "Low"],
    ["Moderate", "High", "Low"],
    ["Moderate", "Moderate", "Moderate"],
    ["Moderate", "Low", "Moderate"],
    ["Moderate", "VeryLow", "High"],
    ["VeryLow", "VeryHigh", "Low"],
    ["VeryLow", "High", "Low"],
    ["VeryLow", "Moderate", "Low"],
    ["VeryLow", "Low", "Low"],
    ["VeryLow", "VeryLow", "Low"],
];

/// Spectrum utilisation efficiency, degree of mobility, distance to primary user -> access the spectrum.
pub(super) const ACCESS_SPECTRUM: &[[&str; 4]] = &[
    ["Small", "Small", "Small", "VeryLow"],
    ["Small", "Small", "Medium", "Low"],
    ["Small", "Small", "Large", "Low"],
    ["Small", "Medium", "Small", "VeryLow"],
    ["Small", "Medium", "Medium", "Low"],
    ["Small", "Medium", "Large", "Moderate"],
    ["Small", "Large", "Small", "Low"],
    ["Small", "Large", "Medium", "Low"],
    ["Small", "Large", "Large", "Moderate"],
    ["Medium", "Small", "Small", "VeryLow"],
    ["Medium", "Small", "Medium", "Moderate"],
    ["Medium", "Small", "Large", "High"],
    ["Medium", "Medium", "Small", "VeryLow"],
    ["Medium", "Medium", "Medium", "Moderate"],
    ["Medium", "Medium", "Large", "High"],
    ["Medium", "Large", "Small", "VeryLow"],
    ["Medium", "Large", "Medium", "Low"],
    ["Medium", "Large", "Large", "High"],
    ["Large", "Small", "Small", "Low"],
    ["Large", "Small", "Medium", "High"],
    ["Large", "Small", "Large", "VeryHigh"],
    ["Large", "Medium", "Small", "Low"],
    ["Large", "Medium", "Medium", "High"],
    ["Large", "Medium", "Large", "VeryHigh"],
    ["Large", "Large", "Small", "VeryLow"],
    ["Large", "Large", "Medium", "High"],
    ["Large", "Large", "Large", "High"],
];

/// SU traffic intensity, BA traffic intensity -> access latency.
pub(super) const ACCESS_LATENCY: &[[&str; 3]] = &[
    ["VeryLow", "Absent", "VeryLow"],
    ["VeryLow", "Present", "Low"],
    ["Low", "Absent", "Low"],
    ["Low", "Present", "Moderate"],
    ["Moderate", "Absent", "Moderate"],
    ["Moderate", "Present", "High"],
    ["High", "Absent", "High"],
    ["High", "Present", "VeryHigh"],
    ["VeryHigh", "Absent", "VeryHigh"],
    ["VeryHigh", "Present", "VeryHigh"],
];

/// Access latency, traffic priority -> bandwidth allocation.
pub(super) const BANDWIDTH_ALLOCATION: &[[&str; 3]] = &[
    ["VeryLow", "Absent", "VeryHigh"],
    ["VeryLow", "Present", "VeryHigh"],
    ["Low", "Absent", "Moderate"],
    ["Low", "Present", "High"],
    ["Moderate", "Absent", "Low"],
    ["Moderate", "Present", "Moderate"],
    ["High", "Absent", "Low"],
    ["High", "Present", "Low"],
    ["VeryHigh", "Absent", "VeryLow"],
    ["VeryHigh", "Present", "VeryLow"],
];
