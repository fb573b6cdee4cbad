//! Robinson–Schensted shapes and seeded Plancherel sampling.
//!
//! The shape of the insertion tableau of a uniform random permutation of
//! `1..=n` is distributed according to the Plancherel measure `d_λ² / n!`.
//!
//! Sample `i` of a run with seed `s` is drawn from its own ChaCha20 stream:
//! the generator is seeded with `seed_from_u64(s)` and then switched to
//! stream `i`. The permutation is built by Fisher–Yates over `1..=n`, drawing
//! each swap index uniformly from `0..=j` as a `u64`. Streams therefore do
//! not depend on thread count or pointer width.

use super::dims::dimension_with;
use crate::bigmath::{factorial, ln_biguint};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::collections::HashMap;

/// Identifier of the sampling scheme; bump when the stream layout changes.
pub const SAMPLER_VERSION: &str = "chacha20-stream-per-sample/fisher-yates-u64/v1";

/// Shape of the row-insertion tableau of `perm`, a permutation of `1..=n`.
pub fn rsk_shape(perm: &[usize]) -> Result<Partition> {
    let n = perm.len();
    let mut seen = vec![false; n + 1];
    for &x in perm {
        if x == 0 || x > n || seen[x] {
            return Err(Error::validation(format!(
                "not a permutation of 1..={n}: offending entry {x}"
            )));
        }
        seen[x] = true;
    }

    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &x in perm {
        let mut carry = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            let pos = row.partition_point(|&y| y < carry);
            if pos == row.len() {
                row.push(carry);
                placed = true;
                break;
            }
            std::mem::swap(&mut row[pos], &mut carry);
        }
        if !placed {
            rows.push(vec![carry]);
        }
    }
    Partition::new(rows.iter().map(Vec::len).collect())
}

/// Uniform permutation of `1..=n` for sample `index` under `seed`.
pub fn seeded_permutation(n: usize, seed: u64, index: u64) -> Vec<usize> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut perm: Vec<usize> = (1..=n).collect();
    for j in (1..n).rev() {
        let k = rng.random_range(0..=j as u64) as usize;
        perm.swap(j, k);
    }
    perm
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlancherelSample {
    pub shape: Partition,
    /// `ln(d_λ² / n!)`.
    pub log_pl: f64,
}

/// Draws `count` Plancherel-distributed shapes of size `n`.
pub fn sample_plancherel(n: usize, seed: u64, count: usize) -> Result<Vec<PlancherelSample>> {
    if n == 0 {
        return Err(Error::validation("sampling needs n >= 1"));
    }
    if count == 0 {
        return Err(Error::validation("sampling needs count >= 1"));
    }
    let shape_of = |i: usize| rsk_shape(&seeded_permutation(n, seed, i as u64));

    #[cfg(feature = "parallel")]
    let shapes: Vec<Partition> = {
        use rayon::prelude::*;
        (0..count)
            .into_par_iter()
            .map(shape_of)
            .collect::<Result<_>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let shapes: Vec<Partition> = (0..count).map(shape_of).collect::<Result<_>>()?;

    let fact = factorial(n);
    let ln_fact = ln_biguint(&fact);
    let mut cache: HashMap<Partition, f64> = HashMap::new();
    shapes
        .into_iter()
        .map(|shape| {
            let log_pl = match cache.get(&shape) {
                Some(&v) => v,
                None => {
                    let d = dimension_with(&shape, &fact)?;
                    let v = 2.0 * ln_biguint(&d) - ln_fact;
                    cache.insert(shape.clone(), v);
                    v
                }
            };
            Ok(PlancherelSample { shape, log_pl })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions;
    use crate::symstats::plancherel_mass;
    use num_traits::ToPrimitive;

    // O(n²) longest increasing subsequence, independent of insertion.
    fn lis(perm: &[usize]) -> usize {
        let mut best = vec![1; perm.len()];
        for i in 0..perm.len() {
            for j in 0..i {
                if perm[j] < perm[i] {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize])) {
        fn rec(cur: &mut Vec<usize>, used: &mut [bool], n: usize, f: &mut impl FnMut(&[usize])) {
            if cur.len() == n {
                f(cur);
                return;
            }
            for x in 1..=n {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    rec(cur, used, n, f);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        rec(&mut Vec::new(), &mut vec![false; n + 1], n, f);
    }

    #[test]
    fn monotone_permutations() {
        let inc: Vec<usize> = (1..=6).collect();
        assert_eq!(rsk_shape(&inc).unwrap().parts(), &[6]);
        let dec: Vec<usize> = (1..=6).rev().collect();
        assert_eq!(rsk_shape(&dec).unwrap().parts(), &[1; 6]);
        assert_eq!(rsk_shape(&[3, 1, 2]).unwrap().parts(), &[2, 1]);
        assert!(rsk_shape(&[]).unwrap().is_empty());
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(rsk_shape(&[1, 1, 2]).is_err());
        assert!(rsk_shape(&[0, 1]).is_err());
        assert!(rsk_shape(&[1, 4, 2]).is_err());
    }

    #[test]
    fn first_row_is_lis_exhaustively() {
        for n in 1..=7 {
            for_each_permutation(n, &mut |perm| {
                assert_eq!(rsk_shape(perm).unwrap().first_part(), lis(perm));
            });
        }
        for n in 8..=12 {
            for i in 0..200 {
                let perm = seeded_permutation(n, 99, i);
                assert_eq!(rsk_shape(&perm).unwrap().first_part(), lis(&perm));
            }
        }
    }

    #[test]
    fn shape_counts_are_squared_dimensions() {
        // RSK is a bijection onto pairs of standard tableaux of equal shape.
        for n in 1..=6 {
            let mut counts: HashMap<Partition, u64> = HashMap::new();
            for_each_permutation(n, &mut |perm| {
                *counts.entry(rsk_shape(perm).unwrap()).or_default() += 1;
            });
            for lambda in partitions::enumerate(n) {
                let d = crate::symstats::dimension(&lambda)
                    .unwrap()
                    .to_u64()
                    .unwrap();
                assert_eq!(counts[&lambda], d * d);
            }
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let a = sample_plancherel(12, 7, 50).unwrap();
        let b = sample_plancherel(12, 7, 50).unwrap();
        assert_eq!(a, b);
        let c = sample_plancherel(12, 8, 50).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn n_two_has_half_mass_everywhere() {
        for s in sample_plancherel(2, 3, 20).unwrap() {
            assert!((s.log_pl - 0.5f64.ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn small_n_frequencies_within_three_standard_errors() {
        let samples = 100_000;
        for n in 1..=5 {
            let drawn = sample_plancherel(n, 2024 + n as u64, samples).unwrap();
            let mut counts: HashMap<Partition, usize> = HashMap::new();
            for s in &drawn {
                *counts.entry(s.shape.clone()).or_default() += 1;
            }
            for lambda in partitions::enumerate(n) {
                let p = plancherel_mass(&lambda).unwrap().to_f64().unwrap();
                let freq = *counts.get(&lambda).unwrap_or(&0) as f64 / samples as f64;
                let se = (p * (1.0 - p) / samples as f64).sqrt();
                assert!((freq - p).abs() <= 3.0 * se.max(1e-12), "n = {n}, {lambda}");
            }
        }
    }
}
