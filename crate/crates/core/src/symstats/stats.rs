use super::dims::{check_cap, involution_count, Sweep};
use crate::bigmath::{factorial, ln_biguint, ln_rational};
use crate::error::{Error, Result};
use crate::partitions::{partition_count, Partition};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use std::f64::consts::PI;

/// `a₀ = π√(2/3) − 2`, the decay rate of `(Σ d_λ)² / (p(n) n!)`.
pub fn a0() -> f64 {
    PI * (2.0f64 / 3.0).sqrt() - 2.0
}

/// `(2 − π√(2/3))√n + ln(n)/2`, the asymptotic prediction for
/// `ln(A_n / B_n)` up to an additive constant.
pub fn predicted_log_ratio(n: usize) -> f64 {
    let n = n as f64;
    -a0() * n.sqrt() + n.ln() / 2.0
}

/// Squared cosine between `(d_λ)` and the all-ones vector of length `p(n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleReport {
    pub n: usize,
    /// `Σ d_λ = I(n)`.
    pub sum_dim: BigUint,
    /// `Σ d_λ² = n!`.
    pub sum_dim_sq: BigUint,
    /// `p(n)`.
    pub count: BigUint,
    /// `I(n)² / (p(n) n!)`.
    pub cos_sq: f64,
    pub log_ratio: f64,
    pub predicted_log: f64,
}

impl AngleReport {
    /// `log_ratio − predicted_log`; stays bounded as `n` grows.
    pub fn deviation(&self) -> f64 {
        self.log_ratio - self.predicted_log
    }
}

/// Computed from the closed forms `I(n)`, `p(n)` and `n!`, so no sweep is
/// needed and any `n` is cheap.
pub fn angle_report(n: usize) -> Result<AngleReport> {
    if n == 0 {
        return Err(Error::validation("angle report needs n >= 1"));
    }
    let sum_dim = involution_count(n);
    let sum_dim_sq = factorial(n);
    let count = partition_count(n);
    let log_ratio = 2.0 * ln_biguint(&sum_dim) - ln_biguint(&count) - ln_biguint(&sum_dim_sq);
    Ok(AngleReport {
        n,
        sum_dim,
        sum_dim_sq,
        count,
        cos_sq: log_ratio.exp(),
        log_ratio,
        predicted_log: predicted_log_ratio(n),
    })
}

/// Logarithms (nats) of the classical asymptotic approximations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticEstimates {
    /// Hardy–Ramanujan: `p(n) ≈ e^{π√(2n/3)} / (4n√3)`.
    pub ln_alpha: f64,
    /// Chowla–Herstein–Moore: `I(n) ≈ (n/e)^{n/2} e^{√n} / (√2 e^{1/4})`.
    pub ln_beta: f64,
    /// Stirling: `n! ≈ √(2πn) (n/e)^n`.
    pub ln_gamma: f64,
    /// Asymptotic average dimension
    /// `2√6 (n/e)^{n/2} n exp(√n (1 − π√(2/3)) − 1/4)`.
    pub ln_avg_asym: f64,
}

pub fn asymptotic_estimates(n: usize) -> Result<AsymptoticEstimates> {
    if n == 0 {
        return Err(Error::validation("asymptotic estimates need n >= 1"));
    }
    let nf = n as f64;
    let ln_n = nf.ln();
    let sqrt_n = nf.sqrt();
    let ln_alpha = PI * (2.0 * nf / 3.0).sqrt() - (4.0 * nf * 3f64.sqrt()).ln();
    let ln_beta = nf / 2.0 * (ln_n - 1.0) + sqrt_n - 0.5 * 2f64.ln() - 0.25;
    let ln_gamma = 0.5 * (2.0 * PI * nf).ln() + nf * (ln_n - 1.0);
    let ln_avg_asym = (2.0 * 6f64.sqrt()).ln()
        + nf / 2.0 * (ln_n - 1.0)
        + ln_n
        + sqrt_n * (1.0 - PI * (2.0f64 / 3.0).sqrt())
        - 0.25;
    Ok(AsymptoticEstimates {
        ln_alpha,
        ln_beta,
        ln_gamma,
        ln_avg_asym,
    })
}

/// Counts of `ln d_λ²` and `ln c_λ` values inside `[α n ln n, β n ln n]`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalCounts {
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
    pub count_a: usize,
    pub count_b: usize,
}

impl IntervalCounts {
    /// `|A^n[α,β]| / |B^n[α,β]|`, `None` when the class window is empty.
    pub fn ratio(&self) -> Option<f64> {
        (self.count_b > 0).then(|| self.count_a as f64 / self.count_b as f64)
    }
}

/// `a^{n,k} = Σ ln d_λ²` and `b^{n,k} = Σ ln c_λ` over `λ ⊢ n` with `λ₁ = k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LayerSums {
    pub k: usize,
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MaxDimension {
    pub n: usize,
    pub max_dim: BigUint,
    /// Every partition attaining the maximum, in enumeration order.
    pub argmax: Vec<Partition>,
}

/// Share of partitions whose dimension is within a factor `A` of the maximum.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionNearMax {
    pub n: usize,
    pub a: f64,
    /// `#{λ : A m_n <= d_λ <= m_n}`.
    pub count: usize,
    /// `C_n = count / p(n)`.
    pub c: BigRational,
    /// Exponent rate used in the bound, `0.9 a₀`.
    pub rate: f64,
    /// `(A C_n)² <= e^{−rate √n}`.
    pub bound_ok: bool,
}

impl Sweep {
    pub fn max_dimension(&self) -> MaxDimension {
        let max_dim = self
            .records()
            .iter()
            .map(|r| &r.dim)
            .max()
            .cloned()
            .unwrap_or_default();
        let argmax = self
            .records()
            .iter()
            .filter(|r| r.dim == max_dim)
            .map(|r| r.lambda.clone())
            .collect();
        MaxDimension {
            n: self.n(),
            max_dim,
            argmax,
        }
    }

    /// Closed interval membership on both ends.
    pub fn interval_counts(&self, alpha: f64, beta: f64) -> Result<IntervalCounts> {
        if !(0.0..=1.0).contains(&alpha) || !(0.0..=1.0).contains(&beta) || alpha >= beta {
            return Err(Error::validation(format!(
                "need 0 <= alpha < beta <= 1, got alpha = {alpha}, beta = {beta}"
            )));
        }
        let n = self.n() as f64;
        let scale = n * n.ln();
        let (lo, hi) = (alpha * scale, beta * scale);
        let inside = |x: f64| lo <= x && x <= hi;
        Ok(IntervalCounts {
            n: self.n(),
            alpha,
            beta,
            count_a: self
                .records()
                .iter()
                .filter(|r| inside(r.log_dim_sq))
                .count(),
            count_b: self
                .records()
                .iter()
                .filter(|r| inside(r.log_class))
                .count(),
        })
    }

    pub fn layer_sums(&self, k: usize) -> Result<LayerSums> {
        if k == 0 || k > self.n() {
            return Err(Error::validation(format!(
                "layer index k = {k} outside 1..={}",
                self.n()
            )));
        }
        let (a, b) = self
            .records()
            .iter()
            .filter(|r| r.lambda.first_part() == k)
            .fold((0.0, 0.0), |(a, b), r| (a + r.log_dim_sq, b + r.log_class));
        Ok(LayerSums { k, a, b })
    }

    /// All layers `k = 1..=n`.
    pub fn all_layer_sums(&self) -> Vec<LayerSums> {
        let mut out: Vec<LayerSums> = (1..=self.n())
            .map(|k| LayerSums { k, a: 0.0, b: 0.0 })
            .collect();
        for r in self.records() {
            let slot = &mut out[r.lambda.first_part() - 1];
            slot.a += r.log_dim_sq;
            slot.b += r.log_class;
        }
        out
    }

    pub fn fraction_near_max(&self, a: f64) -> Result<FractionNearMax> {
        if !(a > 0.0 && a < 1.0) {
            return Err(Error::validation(format!("need 0 < A < 1, got {a}")));
        }
        let exact_a = BigRational::from_float(a)
            .ok_or_else(|| Error::validation(format!("A = {a} is not finite")))?;
        let m = self.max_dimension().max_dim;
        let threshold_num = BigInt::from(m.clone()) * exact_a.numer();
        let den = exact_a.denom();
        let count = self
            .records()
            .iter()
            .filter(|r| BigInt::from(r.dim.clone()) * den >= threshold_num)
            .count();
        let total = self.records().len();
        let c = BigRational::new(BigInt::from(count), BigInt::from(total));
        let rate = 0.9 * a0();
        let lhs = 2.0 * (a.ln() + ln_rational(&c));
        let rhs = -rate * (self.n() as f64).sqrt();
        Ok(FractionNearMax {
            n: self.n(),
            a,
            count,
            c,
            rate,
            bound_ok: lhs <= rhs,
        })
    }

    /// `−ln(m_n² / n!) / √n`.
    pub fn vk_ratio(&self) -> f64 {
        let m = self.max_dimension().max_dim;
        (ln_biguint(self.n_factorial()) - 2.0 * ln_biguint(&m)) / (self.n() as f64).sqrt()
    }
}

pub fn max_dimension(n: usize, cap: usize) -> Result<MaxDimension> {
    Ok(Sweep::compute(n, cap)?.max_dimension())
}

pub fn interval_counts(n: usize, alpha: f64, beta: f64, cap: usize) -> Result<IntervalCounts> {
    Sweep::compute(n, cap)?.interval_counts(alpha, beta)
}

pub fn layer_sums(n: usize, k: usize, cap: usize) -> Result<LayerSums> {
    Sweep::compute(n, cap)?.layer_sums(k)
}

pub fn fraction_near_max(n: usize, a: f64, cap: usize) -> Result<FractionNearMax> {
    Sweep::compute(n, cap)?.fraction_near_max(a)
}

pub fn vk_ratio(n: usize, cap: usize) -> Result<f64> {
    check_cap("vk_ratio", n, cap)?;
    Ok(Sweep::compute(n, cap)?.vk_ratio())
}
