//! Integer partitions: enumeration, counting, conjugation, frequency
//! notation and hook lengths.
//!
//! Partitions of `n` index both the conjugacy classes and the irreducible
//! representations of `S_n`, so every symmetric-group table in this crate is
//! keyed by the order produced here: reverse-lexicographic, from `(n)` down
//! to `(1, ..., 1)`.

use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    /// Validates and wraps `parts`. Parts must be positive and weakly
    /// decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::validation("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::validation(
                "partition parts must be weakly decreasing",
            ));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            n: 0,
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number being partitioned.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram: `λ'_j = #{i : λ_i >= j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        let mut conj = Vec::with_capacity(width);
        for j in 1..=width {
            conj.push(self.parts.iter().take_while(|&&p| p >= j).count());
        }
        Partition {
            parts: conj,
            n: self.n,
        }
    }

    pub fn to_frequency(&self) -> FrequencyForm {
        let mut freq = BTreeMap::new();
        for &p in &self.parts {
            *freq.entry(p).or_insert(0) += 1;
        }
        FrequencyForm { freq }
    }

    /// Hook length of every box, row by row.
    ///
    /// `h(i, j) = λ_i - i + λ'_j - j + 1` with 1-based indices.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - j - 1) + (conj.parts[j] - i - 1) + 1)
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::validation(format!("expected [a,b,...], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::validation(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Frequency notation `<1^a_1, 2^a_2, ...>`: part value to multiplicity.
/// Only nonzero multiplicities are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyForm {
    freq: BTreeMap<usize, usize>,
}

impl FrequencyForm {
    pub fn new(freq: BTreeMap<usize, usize>) -> Result<Self> {
        if freq.keys().any(|&k| k == 0) {
            return Err(Error::validation("part values must be positive"));
        }
        let freq = freq.into_iter().filter(|&(_, m)| m > 0).collect();
        Ok(FrequencyForm { freq })
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.freq.get(&part).copied().unwrap_or(0)
    }

    /// `(part, multiplicity)` pairs in increasing part order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.freq.iter().map(|(&k, &v)| (k, v))
    }

    pub fn n(&self) -> usize {
        self.freq.iter().map(|(k, v)| k * v).sum()
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (&part, &mult) in self.freq.iter().rev() {
            parts.extend(std::iter::repeat_n(part, mult));
        }
        Partition::from_parts_unchecked(parts)
    }
}

impl fmt::Display for FrequencyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, (k, v)) in self.freq.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}^{v}")?;
        }
        f.write_str(">")
    }
}

impl FromStr for FrequencyForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(|| Error::validation(format!("expected <i^a,...>, got {s:?}")))?;
        let mut freq = BTreeMap::new();
        if inner.trim().is_empty() {
            return FrequencyForm::new(freq);
        }
        for term in inner.split(',') {
            let (k, v) = term
                .trim()
                .split_once('^')
                .ok_or_else(|| Error::validation(format!("bad term {term:?}")))?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::validation(format!("bad term {term:?}")))
            };
            *freq.entry(parse(k)?).or_insert(0) += parse(v)?;
        }
        FrequencyForm::new(freq)
    }
}

impl From<&Partition> for FrequencyForm {
    fn from(p: &Partition) -> Self {
        p.to_frequency()
    }
}

/// Partitions of `n` with every part at most `max_part`, in
/// reverse-lexicographic order.
#[derive(Debug, Clone)]
pub struct BoundedPartitions {
    current: Option<Vec<usize>>,
}

impl BoundedPartitions {
    pub fn new(n: usize, max_part: usize) -> Self {
        if n > 0 && max_part == 0 {
            return BoundedPartitions { current: None };
        }
        let mut first = Vec::new();
        let mut rest = n;
        while rest > 0 {
            let part = rest.min(max_part);
            first.push(part);
            rest -= part;
        }
        BoundedPartitions {
            current: Some(first),
        }
    }
}

impl Iterator for BoundedPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.current.take()?;
        let mut next = current.clone();
        let mut ones = 0;
        while next.last() == Some(&1) {
            next.pop();
            ones += 1;
        }
        if let Some(v) = next.pop() {
            let mut rest = v + ones;
            let w = v - 1;
            while rest >= w {
                next.push(w);
                rest -= w;
            }
            if rest > 0 {
                next.push(rest);
            }
            self.current = Some(next);
        }
        Some(current)
    }
}

/// Every partition of `n` exactly once, from `(n)` to `(1^n)`.
pub fn enumerate(n: usize) -> impl Iterator<Item = Partition> {
    BoundedPartitions::new(n, n).map(Partition::from_parts_unchecked)
}

/// Partitions of `n` whose largest part is exactly `k`, in the same relative
/// order as [`enumerate`]. Concatenating these for `k = n, n-1, ..., 1`
/// reproduces [`enumerate`], which is what the parallel sweeps rely on.
pub fn enumerate_with_first_part(n: usize, k: usize) -> impl Iterator<Item = Partition> {
    let valid = (n == 0 && k == 0) || (k >= 1 && k <= n);
    let tails = if valid {
        Some(BoundedPartitions::new(n - k, k))
    } else {
        None
    };
    tails.into_iter().flatten().map(move |tail| {
        let mut parts = Vec::with_capacity(tail.len() + 1);
        if k > 0 {
            parts.push(k);
        }
        parts.extend(tail);
        Partition::from_parts_unchecked(parts)
    })
}

/// `p(0), ..., p(n)` by Euler's pentagonal-number recurrence
/// `p(m) = Σ_{j>=1} (-1)^{j+1} [p(m - j(3j-1)/2) + p(m - j(3j+1)/2)]`.
pub fn partition_count_table(n: usize) -> Vec<BigUint> {
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    table.push(BigUint::from(1u32));
    for m in 1..=n {
        // Positive and negative contributions are accumulated separately so
        // the whole computation stays unsigned.
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let acc = if j % 2 == 1 { &mut plus } else { &mut minus };
            *acc += &table[m - g1];
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= m {
                *acc += &table[m - g2];
            }
        }
        table.push(plus - minus);
    }
    table
}

/// `p(n)`, the number of partitions of `n`.
pub fn partition_count(n: usize) -> BigUint {
    partition_count_table(n).pop().unwrap()
}
