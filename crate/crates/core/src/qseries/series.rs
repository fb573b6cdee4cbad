use super::poly::QPolynomial;
use num_bigint::BigInt;

/// Power series in `t` truncated after `t^order`, with polynomial-in-`q`
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<QPolynomial>,
}

impl TruncatedSeries {
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![QPolynomial::zero(); order + 1];
        coeffs[0] = QPolynomial::one();
        TruncatedSeries { order, coeffs }
    }

    /// Series from the given coefficients, padded or truncated to `order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<QPolynomial>) -> Self {
        coeffs.resize(order + 1, QPolynomial::zero());
        TruncatedSeries { order, coeffs }
    }

    /// Series with integer coefficients.
    pub fn from_ints(order: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            order,
            coeffs
                .iter()
                .map(|&c| QPolynomial::constant(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[QPolynomial] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<QPolynomial> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &QPolynomial {
        &self.coeffs[k]
    }

    /// Product, discarding powers of `t` beyond the order.
    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order, rhs.order, "series orders differ");
        let mut out = vec![QPolynomial::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(self.order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        TruncatedSeries {
            order: self.order,
            coeffs: out,
        }
    }

    /// Multiplies in place by the sparse series `Σ_k c_k t^{step·k}`, where
    /// `c_k = factor(k)`. Much cheaper than a dense product.
    pub fn mul_sparse(&mut self, step: usize, factor: impl Fn(usize) -> QPolynomial) {
        assert!(step >= 1);
        let n = self.order;
        let terms: Vec<QPolynomial> = (0..=n / step).map(&factor).collect();
        let mut out = vec![QPolynomial::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, c) in terms.iter().enumerate() {
                let deg = i + k * step;
                if deg > n {
                    break;
                }
                if !c.is_zero() {
                    out[deg] = &out[deg] + &(a * c);
                }
            }
        }
        self.coeffs = out;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_inverts_one_minus_t() {
        let n = 8;
        let one_minus_t = TruncatedSeries::from_ints(n, &[1, -1]);
        let geometric = TruncatedSeries::from_ints(n, &[1; 9]);
        assert_eq!(one_minus_t.mul(&geometric), TruncatedSeries::one(n));
    }

    #[test]
    fn sparse_matches_dense() {
        let n = 10;
        let base = TruncatedSeries::from_ints(n, &[1, 2, 0, -3, 1]);
        let mut sparse = base.clone();
        sparse.mul_sparse(3, |k| QPolynomial::monomial(BigInt::from(1), k));
        let mut dense_coeffs = vec![QPolynomial::zero(); n + 1];
        for k in 0..=n / 3 {
            dense_coeffs[3 * k] = QPolynomial::monomial(BigInt::from(1), k);
        }
        let dense = base.mul(&TruncatedSeries::from_coeffs(n, dense_coeffs));
        assert_eq!(sparse, dense);
    }
}
