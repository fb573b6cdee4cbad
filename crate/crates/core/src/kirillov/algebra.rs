use crate::error::{Error, Result};
use crate::qseries::is_prime;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Largest matrix size among the presets.
pub(crate) const MAX_SIZE: usize = 4;

/// Supported nilpotent Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    /// Strictly upper-triangular 3×3 matrices (Heisenberg algebra).
    Heis3,
    /// Strictly upper-triangular 4×4 matrices.
    Ut4,
}

impl Preset {
    pub fn name(self) -> &'static str {
        match self {
            Preset::Heis3 => "heis3",
            Preset::Ut4 => "ut4",
        }
    }

    pub fn matrix_size(self) -> usize {
        match self {
            Preset::Heis3 => 3,
            Preset::Ut4 => 4,
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "heis3" => Ok(Preset::Heis3),
            "ut4" => Ok(Preset::Ut4),
            _ => Err(Error::validation(format!(
                "unknown algebra {s:?}; expected heis3 or ut4"
            ))),
        }
    }
}

/// Square matrix over `F_p`, at most 4×4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    size: usize,
    p: u32,
    entries: [[u32; MAX_SIZE]; MAX_SIZE],
}

impl FpMatrix {
    pub fn zero(size: usize, p: u32) -> Self {
        FpMatrix {
            size,
            p,
            entries: [[0; MAX_SIZE]; MAX_SIZE],
        }
    }

    pub fn identity(size: usize, p: u32) -> Self {
        let mut m = Self::zero(size, p);
        for i in 0..size {
            m.entries[i][i] = 1;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i][j] = v % self.p;
    }

    pub fn add(&self, rhs: &FpMatrix) -> FpMatrix {
        let mut out = *self;
        for i in 0..self.size {
            for j in 0..self.size {
                out.entries[i][j] = (self.entries[i][j] + rhs.entries[i][j]) % self.p;
            }
        }
        out
    }

    pub fn sub(&self, rhs: &FpMatrix) -> FpMatrix {
        let mut out = *self;
        for i in 0..self.size {
            for j in 0..self.size {
                out.entries[i][j] = (self.entries[i][j] + self.p - rhs.entries[i][j]) % self.p;
            }
        }
        out
    }

    pub fn scale(&self, c: u32) -> FpMatrix {
        let mut out = *self;
        for row in out.entries.iter_mut().take(self.size) {
            for v in row.iter_mut().take(self.size) {
                *v = (*v * c) % self.p;
            }
        }
        out
    }

    pub fn mul(&self, rhs: &FpMatrix) -> FpMatrix {
        let mut out = Self::zero(self.size, self.p);
        for i in 0..self.size {
            for k in 0..self.size {
                let a = self.entries[i][k];
                if a == 0 {
                    continue;
                }
                for j in 0..self.size {
                    out.entries[i][j] = (out.entries[i][j] + a * rhs.entries[k][j]) % self.p;
                }
            }
        }
        out
    }

    /// Inverse of a unitriangular matrix: `Σ_k (−N)^k` with `N = g − I`.
    pub fn unitriangular_inverse(&self) -> FpMatrix {
        let id = Self::identity(self.size, self.p);
        let neg_n = id.sub(self);
        let mut term = id;
        let mut acc = id;
        for _ in 1..self.size {
            term = term.mul(&neg_n);
            acc = acc.add(&term);
        }
        acc
    }
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Rank of a list of vectors over `F_p`.
pub(crate) fn rank_mod_p(mut rows: Vec<Vec<u32>>, p: u32) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][col], p);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col] * inv % p;
                for c in 0..width {
                    rows[r][c] = (rows[r][c] + p * p - factor * rows[rank][c]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A nilpotent Lie algebra over `F_p` realised as strictly upper-triangular
/// matrices, with basis `E_{ij}` (`i < j`) ordered by superdiagonal and then
/// by row.
#[derive(Debug, Clone)]
pub struct NilAlgebra {
    preset: Preset,
    p: u32,
    basis: Vec<(usize, usize)>,
    /// `[e_i, e_j]` in basis coordinates for `i < j`; zero brackets omitted.
    brackets: BTreeMap<(usize, usize), Vec<u32>>,
    nilpotency_class: usize,
}

impl NilAlgebra {
    /// Builds the preset over `F_p` and checks antisymmetry, the Jacobi
    /// identity and nilpotency. `p` must be a prime below 256 and larger
    /// than the nilpotency class.
    pub fn new(preset: Preset, p: u32) -> Result<Self> {
        if p >= 256 || !is_prime(p as u64) {
            return Err(Error::validation(format!(
                "p must be a prime below 256, got {p}"
            )));
        }
        let size = preset.matrix_size();
        let class = size - 1;
        if p as usize <= class {
            return Err(Error::UnsupportedCharacteristic {
                algebra: preset.name(),
                class,
                p,
            });
        }
        let mut basis = Vec::new();
        for diag in 1..size {
            for i in 0..size - diag {
                basis.push((i, i + diag));
            }
        }
        let mut alg = NilAlgebra {
            preset,
            p,
            basis,
            brackets: BTreeMap::new(),
            nilpotency_class: class,
        };
        let dim = alg.dim();
        for i in 0..dim {
            for j in i + 1..dim {
                let (a, b) = (alg.basis_matrix(i), alg.basis_matrix(j));
                let bracket = a.mul(&b).sub(&b.mul(&a));
                let coords = alg.coords_of(&bracket);
                if coords.iter().any(|&c| c != 0) {
                    alg.brackets.insert((i, j), coords);
                }
            }
        }
        alg.verify()?;
        Ok(alg)
    }

    pub fn preset(&self) -> Preset {
        self.preset
    }

    pub fn name(&self) -> &'static str {
        self.preset.name()
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix_size(&self) -> usize {
        self.preset.matrix_size()
    }

    pub fn nilpotency_class(&self) -> usize {
        self.nilpotency_class
    }

    pub fn brackets(&self) -> &BTreeMap<(usize, usize), Vec<u32>> {
        &self.brackets
    }

    /// Matrix position `(row, col)` of basis vector `k`.
    pub fn basis_position(&self, k: usize) -> (usize, usize) {
        self.basis[k]
    }

    pub fn basis_matrix(&self, k: usize) -> FpMatrix {
        let mut m = FpMatrix::zero(self.matrix_size(), self.p);
        let (i, j) = self.basis[k];
        m.set(i, j, 1);
        m
    }

    pub fn matrix_of(&self, coords: &[u32]) -> FpMatrix {
        let mut m = FpMatrix::zero(self.matrix_size(), self.p);
        for (&(i, j), &c) in self.basis.iter().zip(coords) {
            m.set(i, j, c);
        }
        m
    }

    /// Coordinates of the strictly upper-triangular part of `m`.
    pub fn coords_of(&self, m: &FpMatrix) -> Vec<u32> {
        self.basis.iter().map(|&(i, j)| m.get(i, j)).collect()
    }

    /// `[x, y]` from the structure constants.
    pub fn bracket(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut out = vec![0u64; self.dim()];
        for (&(i, j), c) in &self.brackets {
            // [x, y] = Σ_{i<j} (x_i y_j − x_j y_i) [e_i, e_j]
            let w = (x[i] as u64 * y[j] as u64 + p * p - x[j] as u64 * y[i] as u64) % p;
            if w == 0 {
                continue;
            }
            for (o, &ck) in out.iter_mut().zip(c) {
                *o = (*o + w * ck as u64) % p;
            }
        }
        out.into_iter().map(|v| v as u32).collect()
    }

    fn unit(&self, k: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[k] = 1;
        v
    }

    fn verify(&self) -> Result<()> {
        let dim = self.dim();
        let units: Vec<Vec<u32>> = (0..dim).map(|k| self.unit(k)).collect();
        let p = self.p;
        let add = |a: &[u32], b: &[u32]| -> Vec<u32> {
            a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
        };
        for a in &units {
            if self.bracket(a, a).iter().any(|&c| c != 0) {
                return Err(Error::Invariant(format!("{}: [x, x] != 0", self.name())));
            }
            for b in &units {
                let ab = self.bracket(a, b);
                let ba = self.bracket(b, a);
                if add(&ab, &ba).iter().any(|&c| c != 0) {
                    return Err(Error::Invariant(format!(
                        "{}: bracket not antisymmetric",
                        self.name()
                    )));
                }
                for c in &units {
                    let j1 = self.bracket(a, &self.bracket(b, c));
                    let j2 = self.bracket(b, &self.bracket(c, a));
                    let j3 = self.bracket(c, &self.bracket(a, b));
                    if add(&add(&j1, &j2), &j3).iter().any(|&v| v != 0) {
                        return Err(Error::Invariant(format!(
                            "{}: Jacobi identity fails",
                            self.name()
                        )));
                    }
                }
            }
        }
        // Lower central series: g^1 = g, g^{k+1} = [g, g^k]; g^{class+1} = 0.
        let mut layer = units.clone();
        for _ in 0..self.nilpotency_class {
            let mut next = Vec::new();
            for a in &units {
                for b in &layer {
                    let v = self.bracket(a, b);
                    if v.iter().any(|&c| c != 0) {
                        next.push(v);
                    }
                }
            }
            layer = next;
        }
        if !layer.is_empty() {
            return Err(Error::Invariant(format!(
                "{}: not nilpotent of class {}",
                self.name(),
                self.nilpotency_class
            )));
        }
        Ok(())
    }

    /// Dimension of `[n, n]`.
    pub fn derived_dim(&self) -> usize {
        let rows: Vec<Vec<u32>> = self.brackets.values().cloned().collect();
        if rows.is_empty() {
            0
        } else {
            rank_mod_p(rows, self.p)
        }
    }

    /// Number of elements, `p^dim`.
    pub fn order(&self) -> usize {
        (self.p as usize).pow(self.dim() as u32)
    }

    /// Index of a coordinate vector in `0..p^dim` (base `p`, first
    /// coordinate least significant).
    pub fn index_of(&self, coords: &[u32]) -> usize {
        coords
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.p as usize + c as usize)
    }

    pub fn coords_at(&self, mut index: usize) -> Vec<u32> {
        let p = self.p as usize;
        (0..self.dim())
            .map(|_| {
                let c = index % p;
                index /= p;
                c as u32
            })
            .collect()
    }

    /// Truncated exponential `Σ_{k<=class} x^k / k!`.
    pub fn exp(&self, x: &[u32]) -> FpMatrix {
        let m = self.matrix_of(x);
        let size = self.matrix_size();
        let mut term = FpMatrix::identity(size, self.p);
        let mut acc = term;
        for k in 1..=self.nilpotency_class {
            term = term.mul(&m).scale(inv_mod(k as u32, self.p));
            acc = acc.add(&term);
        }
        acc
    }

    /// Truncated logarithm `Σ_{k<=class} (−1)^{k+1} (g − I)^k / k`.
    pub fn log(&self, g: &FpMatrix) -> Vec<u32> {
        let size = self.matrix_size();
        let n = g.sub(&FpMatrix::identity(size, self.p));
        let mut power = n;
        let mut acc = FpMatrix::zero(size, self.p);
        for k in 1..=self.nilpotency_class {
            let term = power.scale(inv_mod(k as u32, self.p));
            acc = if k % 2 == 1 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
            power = power.mul(&n);
        }
        self.coords_of(&acc)
    }
}

/// `exp(x)` for `x` given in basis coordinates.
pub fn exp_element(x: &[u32], alg: &NilAlgebra) -> Result<FpMatrix> {
    if x.len() != alg.dim() {
        return Err(Error::validation(format!(
            "expected {} coordinates, got {}",
            alg.dim(),
            x.len()
        )));
    }
    if x.iter().any(|&c| c >= alg.p()) {
        return Err(Error::validation(format!(
            "coordinates must lie in [0, {})",
            alg.p()
        )));
    }
    Ok(alg.exp(x))
}
