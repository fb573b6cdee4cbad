//! Symmetric-group dimensions, class sizes and the statistics built on them.

mod dims;
mod histogram;
mod plancherel;
mod stats;

pub use dims::{
    class_size, dimension, involution_count, involution_counts, plancherel_mass, sweep, DimRecord,
    Sweep, DEFAULT_CAP,
};
pub use histogram::{histogram, histogram_in_range, Histogram};
pub use plancherel::{
    rsk_shape, sample_plancherel, seeded_permutation, PlancherelSample, SAMPLER_VERSION,
};
pub use stats::{
    a0, angle_report, asymptotic_estimates, fraction_near_max, interval_counts, layer_sums,
    max_dimension, predicted_log_ratio, vk_ratio, AngleReport, AsymptoticEstimates,
    FractionNearMax, IntervalCounts, LayerSums, MaxDimension,
};
