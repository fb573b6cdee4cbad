use crate::error::{Error, Result};

/// Equal-width histogram.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    /// `bins + 1` strictly increasing edges.
    pub bin_edges: Vec<f64>,
    pub counts: Vec<usize>,
}

impl Histogram {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Bins spanning `[min, max]` of the data.
///
/// A value on an interior edge lands in the bin to its right and the maximum
/// lands in the last bin. Constant data collapses to one bin of width 1
/// centred on the value.
pub fn histogram(values: &[f64], bins: usize) -> Result<Histogram> {
    if values.is_empty() {
        return Err(Error::validation("histogram of empty data"));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::validation("histogram values must be finite"));
    }
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if lo == hi {
        return Ok(Histogram {
            bin_edges: vec![lo - 0.5, lo + 0.5],
            counts: vec![values.len()],
        });
    }
    histogram_in_range(values, bins, lo, hi)
}

/// Like [`histogram`] but over a caller-chosen range, so several data sets
/// can share edges. Every value must lie in `[lo, hi]`.
pub fn histogram_in_range(values: &[f64], bins: usize, lo: f64, hi: f64) -> Result<Histogram> {
    if bins == 0 {
        return Err(Error::validation("histogram needs at least one bin"));
    }
    if lo.is_nan() || hi.is_nan() || lo >= hi {
        return Err(Error::validation(format!(
            "empty histogram range [{lo}, {hi}]"
        )));
    }
    let width = (hi - lo) / bins as f64;
    let mut edges: Vec<f64> = (0..bins).map(|i| lo + i as f64 * width).collect();
    edges.push(hi);

    let mut counts = vec![0; bins];
    for &v in values {
        if !(lo..=hi).contains(&v) {
            return Err(Error::validation(format!("value {v} outside [{lo}, {hi}]")));
        }
        let mut idx = (((v - lo) / width).floor() as usize).min(bins - 1);
        // Settle rounding against the stored edges.
        while idx + 1 < bins && v >= edges[idx + 1] {
            idx += 1;
        }
        while idx > 0 && v < edges[idx] {
            idx -= 1;
        }
        counts[idx] += 1;
    }
    Ok(Histogram {
        bin_edges: edges,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn four_points_two_bins() {
        let h = histogram(&[0.0, 1.0, 2.0, 3.0], 2).unwrap();
        assert_eq!(h.bin_edges, vec![0.0, 1.5, 3.0]);
        assert_eq!(h.counts, vec![2, 2]);
    }

    #[test]
    fn interior_edge_goes_right() {
        let h = histogram(&[0.0, 1.0, 2.0, 4.0], 4).unwrap();
        assert_eq!(h.counts, vec![1, 1, 1, 1]);
    }

    #[test]
    fn constant_data_is_one_bin() {
        let h = histogram(&[2.5; 9], 20).unwrap();
        assert_eq!(h.counts, vec![9]);
        assert!(h.bin_edges[0] < h.bin_edges[1]);
    }

    #[test]
    fn invalid_input() {
        assert!(histogram(&[], 3).is_err());
        assert!(histogram(&[1.0, 2.0], 0).is_err());
        assert!(histogram(&[1.0, f64::NAN], 2).is_err());
        assert!(histogram_in_range(&[5.0], 2, 0.0, 1.0).is_err());
    }

    proptest! {
        #[test]
        fn counts_are_conserved(values in prop::collection::vec(-1e6f64..1e6, 1..300), bins in 1usize..64) {
            let h = histogram(&values, bins).unwrap();
            prop_assert_eq!(h.total(), values.len());
            prop_assert!(h.bin_edges.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
