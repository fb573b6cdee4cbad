//! Degree sums, class counts and orders for `GL_n(F_q)` as exact
//! polynomials in `q`, and the limit `B_n² / (C_n D_n) → 1/γ(q)`.

use super::poly::QPolynomial;
use super::series::TruncatedSeries;
use crate::bigmath::rational_pow;
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn q_poly() -> QPolynomial {
    QPolynomial::monomial(BigInt::one(), 1)
}

/// `C_0(q), ..., C_nmax(q)`: class counts of `GL_n(F_q)` from the expansion
/// of `Π_{r>=1} (1 − t^r) / (1 − q t^r)`.
///
/// Each `(1 − q t^r)^{-1}` is multiplied in as the truncated geometric
/// series `Σ_k q^k t^{rk}`.
pub fn feit_fine(nmax: usize) -> Vec<QPolynomial> {
    let mut series = TruncatedSeries::one(nmax);
    for r in 1..=nmax {
        series.mul_sparse(r, |k| match k {
            0 => QPolynomial::one(),
            1 => QPolynomial::constant(BigInt::from(-1)),
            _ => QPolynomial::zero(),
        });
        series.mul_sparse(r, |k| QPolynomial::monomial(BigInt::one(), k));
    }
    series.into_coeffs()
}

/// Sum of the irreducible character degrees of `GL_n(F_q)`:
/// `q^{m²+m} (q^{2m+1} − 1)(q^{2m−1} − 1)⋯(q − 1)` for `n = 2m + 1` and
/// `q^{m²+m} (q^{2m−1} − 1)⋯(q − 1)` for `n = 2m`.
pub fn gow_sum(n: usize) -> Result<QPolynomial> {
    if n == 0 {
        return Err(Error::validation("gow_sum needs n >= 1"));
    }
    let m = n / 2;
    let top = if n % 2 == 1 { 2 * m + 1 } else { 2 * m - 1 };
    let mut poly = QPolynomial::monomial(BigInt::one(), m * m + m);
    for k in (1..=top).step_by(2) {
        poly = &poly * &QPolynomial::q_power_minus_one(k);
    }
    Ok(poly)
}

/// `|GL_n(F_q)| = (q^n − 1)(q^n − q)⋯(q^n − q^{n−1})`.
pub fn gl_order(n: usize) -> Result<QPolynomial> {
    if n == 0 {
        return Err(Error::validation("gl_order needs n >= 1"));
    }
    let qn = QPolynomial::monomial(BigInt::one(), n);
    Ok((0..n).fold(QPolynomial::one(), |acc, i| {
        &acc * &(&qn - &QPolynomial::monomial(BigInt::one(), i))
    }))
}

pub fn is_prime(q: u64) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

fn det_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            m.swap(pivot, col);
            det = (p - det) % p;
        }
        det = det * m[col][col] % p;
        let inv = pow_mod(m[col][col], p - 2, p);
        for r in col + 1..n {
            let factor = m[r][col] * inv % p;
            for c in col..n {
                m[r][c] = (m[r][c] + p * p - factor * m[col][c] % p) % p;
            }
        }
    }
    det
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Largest number of symmetric matrices the brute force will visit.
pub const SYMMETRIC_ENUMERATION_LIMIT: u64 = 20_000_000;

/// Invertible symmetric `n × n` matrices over the prime field `F_q`, counted
/// by exhaustive enumeration.
pub fn symmetric_invertible_count(n: usize, q: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::validation("matrix size must be >= 1"));
    }
    if !is_prime(q) {
        return Err(Error::UnsupportedField { q });
    }
    let slots = n * (n + 1) / 2;
    let total = (q as u128).checked_pow(slots as u32).unwrap_or(u128::MAX);
    if total > SYMMETRIC_ENUMERATION_LIMIT as u128 {
        return Err(Error::ResourceLimit {
            what: "symmetric matrix enumeration",
            n,
            cap: SYMMETRIC_ENUMERATION_LIMIT as usize,
        });
    }
    let positions: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut digits = vec![0u64; slots];
    let mut count = 0u64;
    for _ in 0..total {
        let mut m = vec![vec![0u64; n]; n];
        for (&(i, j), &v) in positions.iter().zip(&digits) {
            m[i][j] = v;
            m[j][i] = v;
        }
        if det_mod_p(m, q) != 0 {
            count += 1;
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
    }
    Ok(BigUint::from(count))
}

/// Both sides of `Σ_{i>=0} t^{i(i+1)/2} = Π_{i>=1} (1 − t^{2i}) / (1 − t^{2i−1})`
/// expanded to `t^order`: `(lhs, rhs)` integer coefficient vectors.
pub fn gauss_identity_sides(order: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut lhs = vec![BigInt::zero(); order + 1];
    for i in 0.. {
        let e = i * (i + 1) / 2;
        if e > order {
            break;
        }
        lhs[e] += 1;
    }

    let mut rhs = TruncatedSeries::one(order);
    for i in 1.. {
        if 2 * i - 1 > order {
            break;
        }
        // (1 − t^{2i})
        rhs.mul_sparse(2 * i, |k| match k {
            0 => QPolynomial::one(),
            1 => QPolynomial::constant(BigInt::from(-1)),
            _ => QPolynomial::zero(),
        });
        // 1 / (1 − t^{2i−1})
        rhs.mul_sparse(2 * i - 1, |_| QPolynomial::one());
    }
    let rhs = rhs.into_coeffs().into_iter().map(|c| c.coeff(0)).collect();
    (lhs, rhs)
}

/// Coefficient-wise check of the Gauss identity up to `t^order`.
pub fn gauss_identity_check(order: usize) -> Result<bool> {
    if order == 0 {
        return Err(Error::validation("order must be >= 1"));
    }
    let (lhs, rhs) = gauss_identity_sides(order);
    Ok(lhs == rhs)
}

/// Partial sum of `γ(q) = Σ_{i>=0} q^{−i(i+1)/2}` and a bound on the
/// omitted tail.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaPartialSum {
    pub terms: usize,
    pub sum: BigRational,
    /// Geometric bound `q^{−T(T+1)/2} / (1 − q^{−(T+1)})` on the tail after
    /// `T` terms. For `q >= 2` this is at most `2 q^{−T(T+1)/2}`.
    pub tail_bound: BigRational,
}

pub fn gamma_q(q: &BigRational, terms: usize) -> Result<GammaPartialSum> {
    if *q <= BigRational::one() {
        return Err(Error::validation(format!("gamma_q needs q > 1, got {q}")));
    }
    if terms == 0 {
        return Err(Error::validation("gamma_q needs at least one term"));
    }
    let sum = (0..terms)
        .map(|i| rational_pow(q, -((i * (i + 1) / 2) as i64)))
        .sum();
    let t = terms as i64;
    let first_omitted = rational_pow(q, -(t * (t + 1) / 2));
    let ratio = rational_pow(q, -(t + 1));
    let tail_bound = first_omitted / (BigRational::one() - ratio);
    Ok(GammaPartialSum {
        terms,
        sum,
        tail_bound,
    })
}

fn ratio_from(
    gow: &QPolynomial,
    classes: &QPolynomial,
    order: &QPolynomial,
    q: &BigRational,
) -> Result<BigRational> {
    let den = classes.eval(q) * order.eval(q);
    if den.is_zero() {
        return Err(Error::validation(format!(
            "C_n(q)·|GL_n(F_q)| vanishes at q = {q}"
        )));
    }
    let b = gow.eval(q);
    Ok(&b * &b / den)
}

/// `B_n(q)² / (C_n(q) D_n(q))` evaluated exactly at `q`.
pub fn log_constant_ratio(n: usize, q: &BigRational) -> Result<BigRational> {
    let classes = feit_fine(n);
    ratio_from(&gow_sum(n)?, &classes[n], &gl_order(n)?, q)
}

/// [`log_constant_ratio`] for every `n = 1..=nmax`, sharing one series
/// expansion.
pub fn log_constant_ratios(nmax: usize, q: &BigRational) -> Result<Vec<BigRational>> {
    let classes = feit_fine(nmax);
    (1..=nmax)
        .map(|n| ratio_from(&gow_sum(n)?, &classes[n], &gl_order(n)?, q))
        .collect()
}

/// One line of the `GL_2(F_q)` census: `count` objects of the given size.
#[derive(Debug, Clone, PartialEq)]
pub struct CensusRow {
    pub label: &'static str,
    pub count: BigInt,
    /// Dimension for representation rows, class size for class rows.
    pub size: BigInt,
}

/// Irreducible representations and conjugacy classes of `GL_2(F_q)` with the
/// identities they must satisfy.
///
/// The class list carries two candidate sizes for classes of elements that
/// are diagonalizable over `F_{q²}` but not over `F_q`: the centralizer
/// index `q² − q` (used in `class_rows`) and the value `(q² − q)/2` that is
/// sometimes quoted for it. Both are checked against the class equation.
#[derive(Debug, Clone, PartialEq)]
pub struct Gl2Census {
    pub q: BigInt,
    pub order: BigInt,
    pub rep_rows: Vec<CensusRow>,
    pub class_rows: Vec<CensusRow>,
    pub elliptic_size_halved: BigInt,
    /// `Σ count·dim² = |GL_2|` at this `q`.
    pub rep_identity: bool,
    /// `Σ count·size = |GL_2|` using `q² − q` for the elliptic classes.
    pub class_identity: bool,
    /// Same, using `(q² − q)/2`.
    pub class_identity_halved: bool,
    /// `Σ count·dim = B_2(q)` at this `q`.
    pub degree_sum_identity: bool,
    /// Number of classes equals number of irreducibles equals `C_2(q)`.
    pub count_identity: bool,
    /// The same identities as polynomial identities in `q`.
    pub rep_identity_symbolic: bool,
    pub class_identity_symbolic: bool,
    pub class_identity_halved_symbolic: bool,
    pub degree_sum_symbolic: bool,
    pub count_symbolic: bool,
}

// Census rows as polynomials scaled by 2, so (q−1)(q−2)/2 stays integral.
struct DoubledRow {
    count2: QPolynomial,
    size2: QPolynomial,
}

fn doubled_census(elliptic_halved: bool) -> (Vec<DoubledRow>, Vec<DoubledRow>) {
    let c = |v: &[i64]| QPolynomial::from_i64s(v);
    let reps = vec![
        DoubledRow {
            count2: c(&[-2, 2]),
            size2: c(&[2]),
        },
        DoubledRow {
            count2: c(&[-2, 2]),
            size2: c(&[0, 2]),
        },
        DoubledRow {
            count2: c(&[2, -3, 1]),
            size2: c(&[2, 2]),
        },
        DoubledRow {
            count2: c(&[0, -1, 1]),
            size2: c(&[-2, 2]),
        },
    ];
    let elliptic = if elliptic_halved {
        c(&[0, -1, 1])
    } else {
        c(&[0, -2, 2])
    };
    let classes = vec![
        DoubledRow {
            count2: c(&[-2, 2]),
            size2: c(&[2]),
        },
        DoubledRow {
            count2: c(&[-2, 2]),
            size2: c(&[-2, 0, 2]),
        },
        DoubledRow {
            count2: c(&[2, -3, 1]),
            size2: c(&[0, 2, 2]),
        },
        DoubledRow {
            count2: c(&[0, -1, 1]),
            size2: elliptic,
        },
    ];
    (reps, classes)
}

fn weighted_sum4(rows: &[DoubledRow], size_power: u32) -> QPolynomial {
    // Σ (2·count)(2·size)^k; equals 2^{k+1} Σ count·size^k.
    rows.iter().fold(QPolynomial::zero(), |acc, r| {
        &acc + &(&r.count2 * &r.size2.pow(size_power))
    })
}

pub fn gl2_census(q: &BigInt) -> Result<Gl2Census> {
    if *q < BigInt::from(2) {
        return Err(Error::validation(format!("census needs q >= 2, got {q}")));
    }
    let (reps, classes) = doubled_census(false);
    let (_, classes_halved) = doubled_census(true);
    let two = BigInt::from(2);
    let labels_rep = [
        "one-dimensional",
        "Steinberg twists",
        "principal series",
        "discrete series",
    ];
    let labels_class = [
        "central",
        "central times unipotent",
        "split semisimple",
        "elliptic",
    ];
    let instantiate = |rows: &[DoubledRow], labels: [&'static str; 4]| -> Vec<CensusRow> {
        rows.iter()
            .zip(labels)
            .map(|(r, label)| CensusRow {
                label,
                count: r.count2.eval_int(q) / &two,
                size: r.size2.eval_int(q) / &two,
            })
            .collect()
    };
    let rep_rows = instantiate(&reps, labels_rep);
    let class_rows = instantiate(&classes, labels_class);
    let elliptic_size_halved = classes_halved[3].size2.eval_int(q) / &two;

    let order_poly = gl_order(2)?;
    let order = order_poly.eval_int(q);
    let classes_poly = feit_fine(2).swap_remove(2);
    let gow_poly = gow_sum(2)?;

    let sum_rows = |rows: &[CensusRow], squared: bool| -> BigInt {
        rows.iter()
            .map(|r| {
                if squared {
                    &r.count * &r.size * &r.size
                } else {
                    &r.count * &r.size
                }
            })
            .sum()
    };
    let mut halved_rows = class_rows.clone();
    halved_rows[3].size = elliptic_size_halved.clone();

    let count_total: BigInt = rep_rows.iter().map(|r| r.count.clone()).sum();
    let class_total: BigInt = class_rows.iter().map(|r| r.count.clone()).sum();

    let four = BigInt::from(4);
    let eight = BigInt::from(8);
    let sum_counts2 = |rows: &[DoubledRow]| {
        rows.iter()
            .fold(QPolynomial::zero(), |acc, r| &acc + &r.count2)
    };

    Ok(Gl2Census {
        q: q.clone(),
        rep_identity: sum_rows(&rep_rows, true) == order,
        class_identity: sum_rows(&class_rows, false) == order,
        class_identity_halved: sum_rows(&halved_rows, false) == order,
        degree_sum_identity: sum_rows(&rep_rows, false) == gow_poly.eval_int(q),
        count_identity: count_total == class_total && count_total == classes_poly.eval_int(q),
        rep_identity_symbolic: weighted_sum4(&reps, 2) == order_poly.scale(&eight),
        class_identity_symbolic: weighted_sum4(&classes, 1) == order_poly.scale(&four),
        class_identity_halved_symbolic: weighted_sum4(&classes_halved, 1)
            == order_poly.scale(&four),
        degree_sum_symbolic: weighted_sum4(&reps, 1) == gow_poly.scale(&four),
        count_symbolic: sum_counts2(&reps) == classes_poly.scale(&two)
            && sum_counts2(&classes) == classes_poly.scale(&two),
        order,
        rep_rows,
        class_rows,
        elliptic_size_halved,
    })
}

/// Comparison of `2 d²` for a pair of `SL_2(F_q)` half-size representations
/// with the matching `PGL_2(F_q)` class size.
#[derive(Debug, Clone, PartialEq)]
pub struct LeadingPair {
    pub twice_dim_sq: BigInt,
    pub class_size: BigInt,
    pub ratio: BigRational,
    /// `|ratio − 1| <= 5/q`.
    pub within_tolerance: bool,
    /// Leading coefficients in `q` of `2d²` and the class size agree.
    pub leading_match: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sl2Pgl2Report {
    pub q: u64,
    /// `2((q+1)/2)²` against `q(q+1)/2`.
    pub plus: LeadingPair,
    /// `2((q−1)/2)²` against `(q²−q)/2`.
    pub minus: LeadingPair,
}

pub fn sl2_pgl2_leading_check(q: u64) -> Result<Sl2Pgl2Report> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(Error::validation(format!("need odd q >= 3, got {q}")));
    }
    let qb = BigInt::from(q);
    let tol = BigRational::new(5.into(), qb.clone());
    // Polynomials scaled by 2: 2·(2d²) = (q ± 1)², 2·size = q² ± q.
    let pair = |dim_poly2: QPolynomial, size_poly2: QPolynomial| {
        let lhs2 = dim_poly2.pow(2);
        let twice_dim_sq = lhs2.eval_int(&qb) / BigInt::from(2);
        let class_size = size_poly2.eval_int(&qb) / BigInt::from(2);
        let ratio = BigRational::new(twice_dim_sq.clone(), class_size.clone());
        LeadingPair {
            within_tolerance: (&ratio - BigRational::one()).abs() <= tol,
            leading_match: lhs2.degree() == size_poly2.degree()
                && lhs2.leading_coeff() == size_poly2.leading_coeff(),
            twice_dim_sq,
            class_size,
            ratio,
        }
    };
    let q_plus_1 = &q_poly() + &QPolynomial::one();
    let q_minus_1 = &q_poly() - &QPolynomial::one();
    Ok(Sl2Pgl2Report {
        q,
        plus: pair(q_plus_1, QPolynomial::from_i64s(&[0, 1, 1])),
        minus: pair(q_minus_1, QPolynomial::from_i64s(&[0, -1, 1])),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn feit_fine_small() {
        let c = feit_fine(3);
        assert_eq!(c[0], QPolynomial::one());
        assert_eq!(c[1], poly(&[-1, 1]));
        assert_eq!(c[2], poly(&[-1, 0, 1]));
        // GL_3(F_q) has q³ − q classes.
        assert_eq!(c[3], poly(&[0, -1, 0, 1]));
    }

    #[test]
    fn feit_fine_monic_degree_n() {
        for (n, c) in feit_fine(30).iter().enumerate() {
            assert_eq!(c.degree(), Some(n));
            assert_eq!(c.leading_coeff(), Some(&BigInt::one()));
        }
    }

    #[test]
    fn gow_examples() {
        assert_eq!(gow_sum(1).unwrap(), poly(&[-1, 1]));
        assert_eq!(gow_sum(2).unwrap(), poly(&[0, 0, -1, 1]));
        let expected3 = &(&QPolynomial::monomial(1.into(), 2) * &QPolynomial::q_power_minus_one(3))
            * &QPolynomial::q_power_minus_one(1);
        assert_eq!(gow_sum(3).unwrap(), expected3);
        assert!(gow_sum(0).is_err());
    }

    #[test]
    fn gl_order_examples() {
        assert_eq!(gl_order(1).unwrap(), poly(&[-1, 1]));
        assert_eq!(gl_order(2).unwrap(), poly(&[0, 1, -1, -1, 1]));
        assert_eq!(gl_order(2).unwrap().eval_int(&2.into()), 6.into());
        assert_eq!(gl_order(5).unwrap().degree(), Some(25));
    }

    #[test]
    fn symmetric_counts_small() {
        assert_eq!(
            symmetric_invertible_count(2, 2).unwrap(),
            BigUint::from(4u32)
        );
        assert_eq!(
            symmetric_invertible_count(1, 3).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            symmetric_invertible_count(2, 3).unwrap(),
            BigUint::from(18u32)
        );
        assert_eq!(
            symmetric_invertible_count(2, 4).unwrap_err(),
            Error::UnsupportedField { q: 4 }
        );
        assert!(matches!(
            symmetric_invertible_count(6, 7),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn gow_equals_symmetric_counts() {
        for (n, q) in [
            (1, 2),
            (1, 3),
            (1, 5),
            (2, 2),
            (2, 3),
            (2, 5),
            (3, 2),
            (3, 3),
            (3, 5),
            (4, 2),
        ] {
            let brute = BigInt::from(symmetric_invertible_count(n, q).unwrap());
            assert_eq!(
                gow_sum(n).unwrap().eval_int(&BigInt::from(q)),
                brute,
                "n={n} q={q}"
            );
        }
    }

    #[test]
    fn gauss_identity() {
        assert!(gauss_identity_check(1).unwrap());
        assert!(gauss_identity_check(10).unwrap());
        assert!(gauss_identity_check(25).unwrap());
        assert!(gauss_identity_check(200).unwrap());
        let (lhs, _) = gauss_identity_sides(1);
        assert_eq!(lhs, vec![BigInt::one(), BigInt::one()]);
    }

    #[test]
    fn gamma_partial_sums() {
        let two = BigRational::from_integer(2.into());
        assert_eq!(gamma_q(&two, 1).unwrap().sum, BigRational::one());
        let expected = [0, 1, 3, 6, 10, 15, 21]
            .iter()
            .map(|&e| rat(1, 1 << e))
            .sum::<BigRational>();
        let g7 = gamma_q(&two, 7).unwrap();
        assert_eq!(g7.sum, expected);
        assert!(g7.tail_bound <= rat(2, 1 << 28));
        let g10 = gamma_q(&two, 10).unwrap();
        let inv = crate::bigmath::rational_to_f64(&g10.sum.recip());
        assert!((inv - 0.609_149_711_066).abs() < 1e-11);
        assert_eq!((inv * 1e5).trunc(), 60914.0);
        assert!(gamma_q(&BigRational::one(), 3).is_err());
        assert!(gamma_q(&two, 0).is_err());
    }

    #[test]
    fn gamma_partial_sums_increase() {
        let q = rat(3, 2);
        let mut prev = BigRational::zero();
        for t in 1..12 {
            let g = gamma_q(&q, t).unwrap();
            assert!(g.sum > prev);
            // The bound really bounds: next partial sums stay below sum + tail.
            let far = gamma_q(&q, t + 8).unwrap();
            assert!(far.sum <= &g.sum + &g.tail_bound);
            prev = g.sum;
        }
    }

    #[test]
    fn ratio_examples() {
        let q = BigRational::from_integer(7.into());
        assert_eq!(log_constant_ratio(1, &q).unwrap(), BigRational::one());
        let two = BigRational::from_integer(2.into());
        assert_eq!(log_constant_ratio(2, &two).unwrap(), rat(8, 9));
        assert!(log_constant_ratio(2, &BigRational::one()).is_err());
        let table = log_constant_ratios(6, &two).unwrap();
        for (i, r) in table.iter().enumerate() {
            assert_eq!(*r, log_constant_ratio(i + 1, &two).unwrap());
        }
    }

    #[test]
    fn ratio_approaches_inverse_gamma() {
        let two = BigRational::from_integer(2.into());
        let g = gamma_q(&two, 10).unwrap();
        let inv_lo = g.sum.recip();
        // 1/γ lies in [1/(sum + tail), 1/sum].
        let inv_hi_gap = &inv_lo - (&g.sum + &g.tail_bound).recip();
        let slack = &g.tail_bound + &rat(1, 100);
        let ratios = log_constant_ratios(30, &two).unwrap();
        let dist: Vec<BigRational> = ratios.iter().map(|r| (r - &inv_lo).abs()).collect();
        for n in 15..=30 {
            assert!(dist[n - 1] <= &slack + &inv_hi_gap, "n = {n}");
        }
        // The approach oscillates with the parity of n; each parity class
        // approaches monotonically.
        for n in 3..=30 {
            assert!(dist[n - 1] < dist[n - 3], "n = {n}");
        }
    }

    #[test]
    fn census_at_two_and_three() {
        let c2 = gl2_census(&2.into()).unwrap();
        let reps: Vec<(i64, i64)> = c2
            .rep_rows
            .iter()
            .map(|r| {
                (
                    r.count.clone().try_into().unwrap(),
                    r.size.clone().try_into().unwrap(),
                )
            })
            .collect();
        assert_eq!(reps, vec![(1, 1), (1, 2), (0, 3), (1, 1)]);
        assert!(c2.rep_identity && c2.rep_identity_symbolic);
        assert!(c2.degree_sum_identity && c2.degree_sum_symbolic);
        assert!(c2.count_identity && c2.count_symbolic);

        let c3 = gl2_census(&3.into()).unwrap();
        let classes: Vec<(i64, i64)> = c3
            .class_rows
            .iter()
            .map(|r| {
                (
                    r.count.clone().try_into().unwrap(),
                    r.size.clone().try_into().unwrap(),
                )
            })
            .collect();
        assert_eq!(classes, vec![(2, 1), (2, 8), (1, 12), (3, 6)]);
        assert_eq!(c3.elliptic_size_halved, BigInt::from(3));
        assert!(c3.class_identity && c3.class_identity_symbolic);
        assert!(!c3.class_identity_halved && !c3.class_identity_halved_symbolic);
        assert_eq!(c3.order, BigInt::from(48));
    }

    #[test]
    fn census_identities_hold_for_many_q() {
        for q in 2..40 {
            let c = gl2_census(&q.into()).unwrap();
            assert!(
                c.rep_identity && c.class_identity && c.count_identity && c.degree_sum_identity
            );
        }
        assert!(gl2_census(&1.into()).is_err());
    }

    #[test]
    fn sl2_pgl2_pairs() {
        let r3 = sl2_pgl2_leading_check(3).unwrap();
        assert_eq!(r3.plus.twice_dim_sq, 8.into());
        assert_eq!(r3.plus.class_size, 6.into());
        assert_eq!(r3.plus.ratio, rat(4, 3));
        assert!(r3.plus.leading_match && r3.minus.leading_match);
        for q in (3..=101).step_by(2) {
            let r = sl2_pgl2_leading_check(q).unwrap();
            assert!(
                r.plus.within_tolerance && r.minus.within_tolerance,
                "q = {q}"
            );
        }
        let r101 = sl2_pgl2_leading_check(101).unwrap();
        let dev = crate::bigmath::rational_to_f64(&(&r101.plus.ratio - BigRational::one()));
        assert!(dev.abs() < 0.05);
        assert!(sl2_pgl2_leading_check(4).is_err());
        assert!(sl2_pgl2_leading_check(1).is_err());
    }
}
