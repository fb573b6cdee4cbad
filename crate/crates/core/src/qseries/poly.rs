use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Polynomial in `q` with integer coefficients; `coeffs[i]` multiplies `q^i`.
/// No trailing zeros; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c · q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `q^k − 1`.
    pub fn q_power_minus_one(k: usize) -> Self {
        Self::monomial(BigInt::one(), k) - Self::one()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval_int(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * q + BigRational::from_integer(c.clone())
            })
    }

    /// Coefficients as decimal strings, lowest power first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(out)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for QPolynomial {
            type Output = QPolynomial;
            fn $method(self, rhs: QPolynomial) -> QPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `c0 + c1*q + c2*q^2 + ...`, zero terms omitted, coefficients always
/// written out (so `q^2 − 1` renders as `-1 + 1*q^2`).
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for QPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::validation(format!("cannot parse polynomial {s:?}"));
        let mut coeffs: Vec<BigInt> = Vec::new();
        for term in s.split(" + ") {
            let term = term.trim();
            let (c, k) = match term.split_once('*') {
                None => (term, 0),
                Some((c, "q")) => (c, 1),
                Some((c, pow)) => {
                    let k = pow
                        .strip_prefix("q^")
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(bad)?;
                    (c, k)
                }
            };
            let c: BigInt = c.parse().map_err(|_| bad())?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += c;
        }
        Ok(QPolynomial::new(coeffs))
    }
}

impl QPolynomial {
    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn arithmetic_and_degree() {
        let a = QPolynomial::from_i64s(&[-1, 1]);
        let b = QPolynomial::from_i64s(&[1, 1]);
        let prod = &a * &b;
        assert_eq!(prod, QPolynomial::from_i64s(&[-1, 0, 1]));
        assert_eq!(prod.degree(), Some(2));
        assert_eq!((&prod - &prod).degree(), None);
        assert_eq!(prod.eval_int(&BigInt::from(3)), BigInt::from(8));
        assert_eq!(
            prod.eval(&BigRational::new(1.into(), 2.into())),
            BigRational::new((-3).into(), 4.into())
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(
            QPolynomial::from_i64s(&[-1, 0, 1]).to_string(),
            "-1 + 1*q^2"
        );
        assert_eq!(QPolynomial::from_i64s(&[0, -1]).to_string(), "-1*q");
        assert_eq!(QPolynomial::zero().to_string(), "0");
        assert!("1 + 2*x".parse::<QPolynomial>().is_err());
    }

    proptest! {
        #[test]
        fn text_round_trip(coeffs in prop::collection::vec(-1000i64..1000, 0..12)) {
            let p = QPolynomial::from_i64s(&coeffs);
            prop_assert_eq!(p.to_string().parse::<QPolynomial>().unwrap(), p);
        }

        #[test]
        fn evaluation_is_a_ring_map(
            a in prop::collection::vec(-50i64..50, 0..6),
            b in prop::collection::vec(-50i64..50, 0..6),
            q in -7i64..7,
        ) {
            let (a, b) = (QPolynomial::from_i64s(&a), QPolynomial::from_i64s(&b));
            let q = BigInt::from(q);
            prop_assert_eq!((&a * &b).eval_int(&q), a.eval_int(&q) * b.eval_int(&q));
            prop_assert_eq!((&a + &b).eval_int(&q), a.eval_int(&q) + b.eval_int(&q));
        }
    }
}
