use crate::bigmath::{factorial, factorial_table, ln_biguint};
use crate::error::{Error, Result};
use crate::partitions::{self, Partition};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Default upper bound on `n` for full sweeps over all partitions of `n`.
pub const DEFAULT_CAP: usize = 50;

/// Per-partition record of a sweep over `S_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct DimRecord {
    pub lambda: Partition,
    /// `d_λ`, the dimension of the irreducible representation.
    pub dim: BigUint,
    /// `c_λ`, the size of the conjugacy class of cycle type `λ`.
    pub class_size: BigUint,
    /// `ln(d_λ²)` in nats.
    pub log_dim_sq: f64,
    /// `ln(c_λ)` in nats.
    pub log_class: f64,
}

fn product_of(values: impl Iterator<Item = u64>) -> BigUint {
    // Multiply in u128 chunks before touching the big integer.
    let mut acc = BigUint::one();
    let mut chunk: u128 = 1;
    for v in values {
        match chunk.checked_mul(v as u128) {
            Some(c) if c < (1u128 << 100) => chunk = c,
            _ => {
                acc *= chunk;
                chunk = v as u128;
            }
        }
    }
    acc * chunk
}

fn exact_div(num: &BigUint, den: &BigUint, what: &str, lambda: &Partition) -> Result<BigUint> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Invariant(format!(
            "{what} for {lambda} is not an integer"
        )));
    }
    Ok(q)
}

pub(crate) fn dimension_with(lambda: &Partition, n_factorial: &BigUint) -> Result<BigUint> {
    let hooks = lambda
        .hook_lengths()
        .into_iter()
        .flatten()
        .map(|h| h as u64);
    exact_div(
        n_factorial,
        &product_of(hooks),
        "hook-length quotient",
        lambda,
    )
}

pub(crate) fn class_size_with(lambda: &Partition, n_factorial: &BigUint) -> Result<BigUint> {
    let freq = lambda.to_frequency();
    let mut centralizer = BigUint::one();
    for (part, mult) in freq.iter() {
        centralizer *= BigUint::from(part).pow(mult as u32);
        centralizer *= factorial(mult);
    }
    exact_div(n_factorial, &centralizer, "class size", lambda)
}

/// `d_λ = n! / Π h(i,j)` by the hook-length formula.
///
/// The division is checked; a remainder means a bug and is reported as
/// [`Error::Invariant`].
pub fn dimension(lambda: &Partition) -> Result<BigUint> {
    dimension_with(lambda, &factorial(lambda.n()))
}

/// `c_λ = n! / Π_i (i^{a_i} a_i!)` where `a_i` is the multiplicity of `i`.
pub fn class_size(lambda: &Partition) -> Result<BigUint> {
    class_size_with(lambda, &factorial(lambda.n()))
}

/// Number of involutions in `S_n`, `Σ_{2k<=n} n! / (2^k k! (n-2k)!)`.
pub fn involution_count(n: usize) -> BigUint {
    let facts = factorial_table(n);
    let mut total = BigUint::zero();
    for k in 0..=n / 2 {
        let den = (BigUint::one() << k) * &facts[k] * &facts[n - 2 * k];
        total += &facts[n] / den;
    }
    debug_assert_eq!(total, involution_counts(n)[n]);
    total
}

/// `I(0), ..., I(nmax)` from `I(n) = I(n-1) + (n-1) I(n-2)`.
pub fn involution_counts(nmax: usize) -> Vec<BigUint> {
    let mut table = vec![BigUint::one()];
    if nmax >= 1 {
        table.push(BigUint::one());
    }
    for n in 2..=nmax {
        let next = &table[n - 1] + &table[n - 2] * (n - 1);
        table.push(next);
    }
    table
}

/// Plancherel probability `d_λ² / n!` in lowest terms.
pub fn plancherel_mass(lambda: &Partition) -> Result<BigRational> {
    let fact = factorial(lambda.n());
    let d = dimension_with(lambda, &fact)?;
    Ok(BigRational::new(BigInt::from(&d * &d), BigInt::from(fact)))
}

pub(crate) fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::ResourceLimit { what, n, cap });
    }
    Ok(())
}

/// All [`DimRecord`]s for one `n`, plus the exact aggregates derived from
/// them.
#[derive(Debug, Clone)]
pub struct Sweep {
    n: usize,
    n_factorial: BigUint,
    records: Vec<DimRecord>,
}

fn layer_records(n: usize, k: usize, fact: &BigUint) -> Result<Vec<DimRecord>> {
    partitions::enumerate_with_first_part(n, k)
        .map(|lambda| {
            let dim = dimension_with(&lambda, fact)?;
            let class_size = class_size_with(&lambda, fact)?;
            let log_dim_sq = 2.0 * ln_biguint(&dim);
            let log_class = ln_biguint(&class_size);
            Ok(DimRecord {
                lambda,
                dim,
                class_size,
                log_dim_sq,
                log_class,
            })
        })
        .collect()
}

impl Sweep {
    /// Computes every record for `n`, in enumeration order, and verifies
    /// `Σ d = I(n)`, `Σ d² = n!` and `Σ c = n!` exactly.
    pub fn compute(n: usize, cap: usize) -> Result<Sweep> {
        if n == 0 {
            return Err(Error::validation("sweep needs n >= 1"));
        }
        check_cap("sweep", n, cap)?;
        let fact = factorial(n);

        #[cfg(feature = "parallel")]
        let layers: Vec<Vec<DimRecord>> = {
            use rayon::prelude::*;
            (0..n)
                .into_par_iter()
                .map(|i| layer_records(n, n - i, &fact))
                .collect::<Result<_>>()?
        };
        #[cfg(not(feature = "parallel"))]
        let layers: Vec<Vec<DimRecord>> = (1..=n)
            .rev()
            .map(|k| layer_records(n, k, &fact))
            .collect::<Result<_>>()?;

        let sweep = Sweep {
            n,
            n_factorial: fact,
            records: layers.into_iter().flatten().collect(),
        };
        sweep.verify_identities()?;
        Ok(sweep)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn records(&self) -> &[DimRecord] {
        &self.records
    }

    pub fn into_records(self) -> Vec<DimRecord> {
        self.records
    }

    pub fn n_factorial(&self) -> &BigUint {
        &self.n_factorial
    }

    pub fn sum_dim(&self) -> BigUint {
        self.records.iter().map(|r| &r.dim).sum()
    }

    pub fn sum_dim_sq(&self) -> BigUint {
        self.records.iter().map(|r| &r.dim * &r.dim).sum()
    }

    pub fn sum_class(&self) -> BigUint {
        self.records.iter().map(|r| &r.class_size).sum()
    }

    fn verify_identities(&self) -> Result<()> {
        let n = self.n;
        if self.sum_dim() != involution_count(n) {
            return Err(Error::Invariant(format!("sum of dimensions != I({n})")));
        }
        if self.sum_dim_sq() != self.n_factorial {
            return Err(Error::Invariant(format!(
                "sum of squared dimensions != {n}!"
            )));
        }
        if self.sum_class() != self.n_factorial {
            return Err(Error::Invariant(format!("class equation fails for S_{n}")));
        }
        Ok(())
    }
}

/// Convenience wrapper around [`Sweep::compute`].
pub fn sweep(n: usize, cap: usize) -> Result<Vec<DimRecord>> {
    Ok(Sweep::compute(n, cap)?.into_records())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    // Brute-force oracle: count s in S_n with s∘s = id over all permutations.
    fn involutions_brute_force(n: usize) -> u64 {
        fn rec(perm: &mut Vec<usize>, used: &mut Vec<bool>, n: usize) -> u64 {
            if perm.len() == n {
                return perm.iter().enumerate().all(|(i, &x)| perm[x] == i) as u64;
            }
            let mut total = 0;
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    perm.push(x);
                    total += rec(perm, used, n);
                    perm.pop();
                    used[x] = false;
                }
            }
            total
        }
        rec(&mut Vec::new(), &mut vec![false; n], n)
    }

    #[test]
    fn worked_dimension_and_class_size() {
        assert_eq!(dimension(&p(&[5, 2])).unwrap(), u(14));
        assert_eq!(class_size(&p(&[3, 2, 2, 2, 1])).unwrap(), u(25200));
    }

    #[test]
    fn trivial_and_sign_representations() {
        for n in 1..=12 {
            assert_eq!(dimension(&p(&[n])).unwrap(), u(1));
            assert_eq!(dimension(&p(&vec![1; n])).unwrap(), u(1));
            assert_eq!(class_size(&p(&vec![1; n])).unwrap(), u(1));
        }
    }

    #[test]
    fn small_groups_match_hand_sums() {
        let dims3: Vec<_> = partitions::enumerate(3)
            .map(|l| dimension(&l).unwrap())
            .collect();
        assert_eq!(dims3, vec![u(1), u(2), u(1)]);
        let classes3: Vec<_> = partitions::enumerate(3)
            .map(|l| class_size(&l).unwrap())
            .collect();
        assert_eq!(classes3, vec![u(2), u(3), u(1)]);

        let mut classes4: Vec<_> = partitions::enumerate(4)
            .map(|l| class_size(&l).unwrap())
            .collect();
        classes4.sort();
        assert_eq!(classes4, vec![u(1), u(3), u(6), u(6), u(8)]);
    }

    #[test]
    fn involutions_match_brute_force_and_recurrence() {
        assert_eq!(involution_count(0), u(1));
        assert_eq!(involution_count(3), u(4));
        assert_eq!(involution_count(4), u(10));
        let rec = involution_counts(30);
        for n in 0..=7 {
            assert_eq!(involution_count(n), u(involutions_brute_force(n)));
        }
        for (n, value) in rec.iter().enumerate() {
            assert_eq!(involution_count(n), *value);
        }
    }

    #[test]
    fn plancherel_mass_examples() {
        assert_eq!(
            plancherel_mass(&p(&[2])).unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        assert_eq!(
            plancherel_mass(&p(&[3, 1, 1])).unwrap(),
            BigRational::new(3.into(), 10.into())
        );
        for n in 1..=15 {
            let total: BigRational = partitions::enumerate(n)
                .map(|l| plancherel_mass(&l).unwrap())
                .sum();
            assert_eq!(total, BigRational::one());
        }
    }

    #[test]
    fn sweep_three_in_order() {
        let recs = sweep(3, DEFAULT_CAP).unwrap();
        let dims: Vec<_> = recs.iter().map(|r| r.dim.clone()).collect();
        let classes: Vec<_> = recs.iter().map(|r| r.class_size.clone()).collect();
        assert_eq!(dims, vec![u(1), u(2), u(1)]);
        assert_eq!(classes, vec![u(2), u(3), u(1)]);
    }

    #[test]
    fn sweep_one_and_twenty() {
        let one = sweep(1, DEFAULT_CAP).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].dim, u(1));
        assert_eq!(one[0].class_size, u(1));
        let s = Sweep::compute(20, DEFAULT_CAP).unwrap();
        assert_eq!(s.records().len(), 627);
        assert_eq!(s.sum_dim_sq(), factorial(20));
    }

    #[test]
    fn sweep_respects_cap() {
        let err = Sweep::compute(12, 10).unwrap_err();
        assert_eq!(
            err,
            Error::ResourceLimit {
                what: "sweep",
                n: 12,
                cap: 10
            }
        );
        assert!(matches!(Sweep::compute(0, 10), Err(Error::Validation(_))));
    }

    #[test]
    fn log_fields_match_float_oracle() {
        let s = Sweep::compute(25, DEFAULT_CAP).unwrap();
        for r in s.records() {
            let d = num_traits::ToPrimitive::to_f64(&r.dim).unwrap();
            let expected = 2.0 * d.ln();
            let tol = 1e-9 * expected.abs().max(1.0);
            assert!((r.log_dim_sq - expected).abs() <= tol);
        }
    }

    #[test]
    fn dimension_is_conjugation_invariant() {
        for n in 1..=25 {
            let fact = factorial(n);
            for lambda in partitions::enumerate(n) {
                assert_eq!(
                    dimension_with(&lambda, &fact).unwrap(),
                    dimension_with(&lambda.conjugate(), &fact).unwrap()
                );
            }
        }
    }
}
