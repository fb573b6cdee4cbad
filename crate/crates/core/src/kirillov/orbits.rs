use super::algebra::{FpMatrix, NilAlgebra};
use crate::bigmath::exact_sqrt;
use num_bigint::BigUint;
use std::collections::VecDeque;

/// Group generators `exp(E_{i,i+1})`: the superdiagonal basis vectors come
/// first in the basis order.
fn generators(alg: &NilAlgebra) -> Vec<FpMatrix> {
    (0..alg.matrix_size() - 1)
        .map(|k| {
            let mut x = vec![0; alg.dim()];
            x[k] = 1;
            alg.exp(&x)
        })
        .collect()
}

/// Sizes of the orbits of a permutation action on `0..count`, given as a
/// list of maps (one per generator), found by breadth-first closure.
fn orbit_sizes_under(count: usize, step: impl Fn(usize, &mut Vec<usize>)) -> Vec<u64> {
    let mut visited = vec![false; count];
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    let mut images = Vec::new();
    for seed in 0..count {
        if visited[seed] {
            continue;
        }
        visited[seed] = true;
        queue.push_back(seed);
        let mut size = 0u64;
        while let Some(x) = queue.pop_front() {
            size += 1;
            images.clear();
            step(x, &mut images);
            for &y in &images {
                if !visited[y] {
                    visited[y] = true;
                    queue.push_back(y);
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    sizes
}

/// Orbit sizes of the coadjoint action `λ ↦ λ ∘ Ad(g⁻¹)` on `n*`, sorted.
///
/// Functionals are coordinate vectors in the dual basis, indexed the same
/// way as Lie algebra elements.
pub fn coadjoint_orbits(alg: &NilAlgebra) -> Vec<u64> {
    let p = alg.p() as u64;
    let dim = alg.dim();
    // For each generator s, the matrix of Ad(s⁻¹) on the basis: column k is
    // s⁻¹ E_k s in coordinates.
    let actions: Vec<Vec<Vec<u64>>> = generators(alg)
        .iter()
        .map(|s| {
            let s_inv = s.unitriangular_inverse();
            let cols: Vec<Vec<u32>> = (0..dim)
                .map(|k| alg.coords_of(&s_inv.mul(&alg.basis_matrix(k)).mul(s)))
                .collect();
            (0..dim)
                .map(|j| (0..dim).map(|k| cols[k][j] as u64).collect())
                .collect()
        })
        .collect();
    orbit_sizes_under(alg.order(), |idx, out| {
        let lambda = alg.coords_at(idx);
        for a in &actions {
            let image: Vec<u32> = (0..dim)
                .map(|k| {
                    let v: u64 = (0..dim).map(|j| lambda[j] as u64 * a[j][k]).sum();
                    (v % p) as u32
                })
                .collect();
            out.push(alg.index_of(&image));
        }
    })
}

/// Conjugacy class sizes of `exp(n)`, sorted.
///
/// The group is listed as `exp(x)` over all `x`, each element keyed by the
/// strictly upper-triangular part of its matrix.
pub fn conjugacy_classes(alg: &NilAlgebra) -> Vec<u64> {
    let order = alg.order();
    let mut elements = vec![None; order];
    for idx in 0..order {
        let g = alg.exp(&alg.coords_at(idx));
        let key = alg.index_of(&alg.coords_of(&g));
        elements[key] = Some(g);
    }
    let elements: Vec<FpMatrix> = elements
        .into_iter()
        .map(|g| g.expect("exp is a bijection onto the unitriangular group"))
        .collect();
    let gens: Vec<(FpMatrix, FpMatrix)> = generators(alg)
        .into_iter()
        .map(|s| {
            let inv = s.unitriangular_inverse();
            (s, inv)
        })
        .collect();
    orbit_sizes_under(order, |idx, out| {
        let g = &elements[idx];
        for (s, s_inv) in &gens {
            let c = s.mul(g).mul(s_inv);
            out.push(alg.index_of(&alg.coords_of(&c)));
        }
    })
}

/// Comparison of coadjoint orbits with conjugacy classes for one algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitReport {
    pub algebra: &'static str,
    pub p: u32,
    pub dim: usize,
    /// `p^dim`.
    pub group_order: BigUint,
    pub orbit_sizes: Vec<u64>,
    pub class_sizes: Vec<u64>,
    /// Square roots of the orbit sizes, sorted.
    pub rep_dims: Vec<BigUint>,
    /// Every orbit size is `p^{2k}`.
    pub even_powers: bool,
    /// `Σ d² = |N|` and the number of one-point orbits is `|N / [N, N]|`.
    pub match_kirillov: bool,
    /// The multiset of `d²` equals the multiset of class sizes.
    pub match_naive: bool,
}

fn is_even_power(mut x: u64, p: u64) -> bool {
    let mut e = 0;
    while x.is_multiple_of(p) {
        x /= p;
        e += 1;
    }
    x == 1 && e % 2 == 0
}

pub fn kirillov_report(alg: &NilAlgebra) -> OrbitReport {
    let p = alg.p();
    let orbit_sizes = coadjoint_orbits(alg);
    let class_sizes = conjugacy_classes(alg);
    let group_order = BigUint::from(p).pow(alg.dim() as u32);

    let even_powers = orbit_sizes.iter().all(|&s| is_even_power(s, p as u64));
    let rep_dims: Vec<BigUint> = orbit_sizes
        .iter()
        .filter_map(|&s| exact_sqrt(&BigUint::from(s)))
        .collect();
    let sum_sq: BigUint = rep_dims.iter().map(|d| d * d).sum();
    let fixed_points = orbit_sizes.iter().filter(|&&s| s == 1).count();
    let abelianization = (p as usize).pow((alg.dim() - alg.derived_dim()) as u32);
    let match_kirillov = rep_dims.len() == orbit_sizes.len()
        && sum_sq == group_order
        && fixed_points == abelianization;
    let match_naive = orbit_sizes == class_sizes;

    OrbitReport {
        algebra: alg.name(),
        p,
        dim: alg.dim(),
        group_order,
        orbit_sizes,
        class_sizes,
        rep_dims,
        even_powers,
        match_kirillov,
        match_naive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kirillov::Preset;

    fn counts(sizes: &[u64]) -> Vec<(u64, usize)> {
        let mut out: Vec<(u64, usize)> = Vec::new();
        for &s in sizes {
            match out.last_mut() {
                Some((v, c)) if *v == s => *c += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    #[test]
    fn heisenberg_orbits() {
        let h3 = NilAlgebra::new(Preset::Heis3, 3).unwrap();
        assert_eq!(counts(&coadjoint_orbits(&h3)), vec![(1, 9), (9, 2)]);
        let h5 = NilAlgebra::new(Preset::Heis3, 5).unwrap();
        assert_eq!(counts(&coadjoint_orbits(&h5)), vec![(1, 25), (25, 4)]);
    }

    #[test]
    fn heisenberg_classes() {
        let h3 = NilAlgebra::new(Preset::Heis3, 3).unwrap();
        assert_eq!(counts(&conjugacy_classes(&h3)), vec![(1, 3), (3, 8)]);
        let h5 = NilAlgebra::new(Preset::Heis3, 5).unwrap();
        assert_eq!(counts(&conjugacy_classes(&h5)), vec![(1, 5), (5, 24)]);
    }

    // All-pairs conjugation, independent of the generator closure.
    fn classes_all_pairs(alg: &NilAlgebra) -> Vec<u64> {
        let elements: Vec<FpMatrix> = (0..alg.order())
            .map(|i| alg.exp(&alg.coords_at(i)))
            .collect();
        let key = |g: &FpMatrix| alg.index_of(&alg.coords_of(g));
        let mut seen = vec![false; alg.order()];
        let mut sizes = Vec::new();
        for g in &elements {
            if seen[key(g)] {
                continue;
            }
            let mut class = std::collections::HashSet::new();
            for h in &elements {
                class.insert(key(&h.mul(g).mul(&h.unitriangular_inverse())));
            }
            for &k in &class {
                seen[k] = true;
            }
            sizes.push(class.len() as u64);
        }
        sizes.sort_unstable();
        sizes
    }

    #[test]
    fn generator_closure_matches_all_pairs() {
        for p in [3, 5] {
            let h = NilAlgebra::new(Preset::Heis3, p).unwrap();
            assert_eq!(conjugacy_classes(&h), classes_all_pairs(&h));
        }
    }

    #[test]
    fn heisenberg_report() {
        let h3 = NilAlgebra::new(Preset::Heis3, 3).unwrap();
        let r = kirillov_report(&h3);
        assert_eq!(r.orbit_sizes.len(), 11);
        assert_eq!(r.class_sizes.len(), 11);
        let dims: Vec<u64> = r.rep_dims.iter().map(|d| d.try_into().unwrap()).collect();
        assert_eq!(dims, [vec![1; 9], vec![3; 2]].concat());
        assert!(r.match_kirillov && r.even_powers);
        assert!(!r.match_naive);
    }

    #[test]
    fn ut4_at_five() {
        let u = NilAlgebra::new(Preset::Ut4, 5).unwrap();
        let r = kirillov_report(&u);
        assert_eq!(r.orbit_sizes.iter().sum::<u64>(), 15_625);
        assert_eq!(r.class_sizes.iter().sum::<u64>(), 15_625);
        assert_eq!(r.orbit_sizes.len(), r.class_sizes.len());
        assert!(r.match_kirillov && r.even_powers);
    }

    #[test]
    fn even_power_detection() {
        assert!(is_even_power(1, 3));
        assert!(is_even_power(81, 3));
        assert!(!is_even_power(27, 3));
        assert!(!is_even_power(18, 3));
    }
}
