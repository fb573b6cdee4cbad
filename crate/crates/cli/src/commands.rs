use crate::args::{GlCmd, HistWhat, KirillovArgs, SymCmd};
use crate::table::{Cell, Table};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use repstat_core::bigmath::{ln_biguint, ln_rational, rational_to_f64};
use repstat_core::kirillov::{kirillov_report, NilAlgebra, Preset};
use repstat_core::partitions::partition_count;
use repstat_core::qseries::{
    feit_fine, gamma_q, gauss_identity_check, gl2_census, gl_order, gow_sum, log_constant_ratios,
    sl2_pgl2_leading_check,
};
use repstat_core::symstats::{
    angle_report, asymptotic_estimates, histogram, involution_count, sample_plancherel, Sweep,
};
use repstat_core::{Error, Result};
use std::collections::BTreeMap;

/// Largest `nmax` accepted by the polynomial tables; the group order alone
/// has degree `n²`.
pub const POLY_NMAX_LIMIT: usize = 200;
/// Largest group order `p^dim` enumerated by the orbit computation.
pub const KIRILLOV_ORDER_LIMIT: u64 = 2_000_000;
/// Limits on the sampler: permutation size and total work `n·count`.
pub const PLANCHEREL_N_LIMIT: usize = 100_000;
pub const PLANCHEREL_WORK_LIMIT: usize = 200_000_000;
/// Terms of the γ(q) partial sum; the tail after 30 terms is below q^{−465}.
const GAMMA_TERMS: usize = 30;

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        return Err(Error::Validation(format!("--{name} must be at least 1")));
    }
    Ok(())
}

fn limit(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::ResourceLimit { what, n, cap });
    }
    Ok(())
}

/// Returns the table and, for sampled output, the seed used.
pub fn run_sym(cmd: &SymCmd, cap: usize) -> Result<(Table, Option<u64>)> {
    let table = match *cmd {
        SymCmd::Sweep { n } => sweep(n, cap)?,
        SymCmd::Hist { n, what, bins } => hist(n, what, bins, cap)?,
        SymCmd::Angle { nmax } => angle(nmax)?,
        SymCmd::Intervals {
            n,
            nmin,
            alpha,
            beta,
        } => intervals(nmin.unwrap_or(n), n, alpha, beta, cap)?,
        SymCmd::Layers { n } => layers(n, cap)?,
        SymCmd::Maxdim { nmax } => maxdim(nmax, cap)?,
        SymCmd::Plancherel { n, count, seed } => {
            return Ok((plancherel(n, count, seed)?, Some(seed)))
        }
    };
    Ok((table, None))
}

fn sweep(n: usize, cap: usize) -> Result<Table> {
    positive("n", n)?;
    let sweep = Sweep::compute(n, cap)?;
    let mut t = Table::new(vec![
        "lambda",
        "dim",
        "class_size",
        "ln_dim_sq",
        "ln_class_size",
    ]);
    for r in sweep.records() {
        t.push(vec![
            Cell::text(&r.lambda),
            Cell::big(&r.dim),
            Cell::big(&r.class_size),
            Cell::Real(r.log_dim_sq),
            Cell::Real(r.log_class),
        ]);
    }
    Ok(t)
}

fn hist(n: usize, what: HistWhat, bins: usize, cap: usize) -> Result<Table> {
    positive("n", n)?;
    positive("bins", bins)?;
    let sweep = Sweep::compute(n, cap)?;
    let values: Vec<f64> = sweep
        .records()
        .iter()
        .map(|r| match what {
            HistWhat::Dimsq => r.log_dim_sq,
            HistWhat::Class => r.log_class,
        })
        .collect();
    let h = histogram(&values, bins)?;
    let mut t = Table::new(vec!["bin", "lo", "hi", "count"]);
    for (i, &count) in h.counts.iter().enumerate() {
        t.push(vec![
            Cell::int(i),
            Cell::Real(h.bin_edges[i]),
            Cell::Real(h.bin_edges[i + 1]),
            Cell::int(count),
        ]);
    }
    Ok(t)
}

fn angle(nmax: usize) -> Result<Table> {
    positive("nmax", nmax)?;
    limit("angle table", nmax, 5000)?;
    let mut t = Table::new(vec![
        "n",
        "sum_dim",
        "sum_dim_sq",
        "partitions",
        "cos_sq",
        "log_ratio",
        "predicted_log",
        "deviation",
    ]);
    for n in 1..=nmax {
        let a = angle_report(n)?;
        t.push(vec![
            Cell::int(n),
            Cell::big(&a.sum_dim),
            Cell::big(&a.sum_dim_sq),
            Cell::big(&a.count),
            Cell::Real(a.cos_sq),
            Cell::Real(a.log_ratio),
            Cell::Real(a.predicted_log),
            Cell::Real(a.deviation()),
        ]);
    }
    Ok(t)
}

fn intervals(nmin: usize, nmax: usize, alpha: f64, beta: f64, cap: usize) -> Result<Table> {
    positive("n", nmin)?;
    if nmin > nmax {
        return Err(Error::Validation(format!(
            "--nmin {nmin} is larger than --n {nmax}"
        )));
    }
    limit("sweep", nmax, cap)?;
    let mut t = Table::new(vec![
        "n",
        "alpha",
        "beta",
        "count_dim_sq",
        "count_class",
        "ratio",
    ]);
    for n in nmin..=nmax {
        let c = Sweep::compute(n, cap)?.interval_counts(alpha, beta)?;
        t.push(vec![
            Cell::int(n),
            Cell::Real(c.alpha),
            Cell::Real(c.beta),
            Cell::int(c.count_a),
            Cell::int(c.count_b),
            c.ratio().map_or(Cell::Empty, Cell::Real),
        ]);
    }
    Ok(t)
}

fn layers(n: usize, cap: usize) -> Result<Table> {
    positive("n", n)?;
    let sweep = Sweep::compute(n, cap)?;
    let mut t = Table::new(vec!["k", "sum_ln_dim_sq", "sum_ln_class_size"]);
    for l in sweep.all_layer_sums() {
        t.push(vec![Cell::int(l.k), Cell::Real(l.a), Cell::Real(l.b)]);
    }
    Ok(t)
}

fn maxdim(nmax: usize, cap: usize) -> Result<Table> {
    positive("nmax", nmax)?;
    limit("sweep", nmax, cap)?;
    let mut t = Table::new(vec![
        "n",
        "max_dim",
        "argmax",
        "vk_ratio",
        "mean_dim",
        "asymptotic_avg_dim",
        "ln_max_dim",
        "ln_mean_dim",
        "ln_asymptotic_avg_dim",
    ]);
    for n in 1..=nmax {
        let sweep = Sweep::compute(n, cap)?;
        let m = sweep.max_dimension();
        let mean = BigRational::new(
            BigInt::from(involution_count(n)),
            BigInt::from(partition_count(n)),
        );
        let ln_mean = ln_rational(&mean);
        let ln_asym = asymptotic_estimates(n)?.ln_avg_asym;
        let ln_max = ln_biguint(&m.max_dim);
        t.push(vec![
            Cell::int(n),
            Cell::big(&m.max_dim),
            Cell::List(m.argmax.iter().map(|p| p.to_string()).collect()),
            Cell::Real(sweep.vk_ratio()),
            Cell::Real(rational_to_f64(&mean)),
            Cell::Real(ln_asym.exp()),
            Cell::Real(ln_max),
            Cell::Real(ln_mean),
            Cell::Real(ln_asym),
        ]);
    }
    Ok(t)
}

fn plancherel(n: usize, count: usize, seed: u64) -> Result<Table> {
    positive("n", n)?;
    positive("count", count)?;
    limit("plancherel sample size", n, PLANCHEREL_N_LIMIT)?;
    limit(
        "plancherel total work n*count",
        n.saturating_mul(count),
        PLANCHEREL_WORK_LIMIT,
    )?;
    let samples = sample_plancherel(n, seed, count)?;
    let sqrt_n = (n as f64).sqrt();
    let mut t = Table::new(vec!["sample", "shape", "ln_pl", "neg_ln_pl_over_sqrt_n"]);
    for (i, s) in samples.iter().enumerate() {
        t.push(vec![
            Cell::int(i),
            Cell::text(&s.shape),
            Cell::Real(s.log_pl),
            Cell::Real(-s.log_pl / sqrt_n),
        ]);
    }
    Ok(t)
}

/// Parses `7` or `5/2` into an exact rational.
pub fn parse_q(text: &str) -> Result<BigRational> {
    let bad = || {
        Error::Validation(format!(
            "--q must be an integer or a fraction a/b, got {text:?}"
        ))
    };
    let q = match text.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            BigRational::new(a, b)
        }
        None => BigRational::from_integer(text.trim().parse().map_err(|_| bad())?),
    };
    Ok(q)
}

pub fn run_gl(cmd: &GlCmd) -> Result<Table> {
    match cmd {
        GlCmd::Gow { nmax } => poly_table(1, *nmax, gow_sum),
        GlCmd::Order { nmax } => poly_table(1, *nmax, gl_order),
        GlCmd::Classes { nmax } => {
            limit("polynomial table", *nmax, POLY_NMAX_LIMIT)?;
            let classes = feit_fine(*nmax);
            poly_table(0, *nmax, |n| Ok(classes[n].clone()))
        }
        GlCmd::Ratio { nmax, q } => ratio(*nmax, &parse_q(q)?),
        GlCmd::Census { q } => census(*q),
        GlCmd::Gauss { order } => {
            positive("order", *order)?;
            limit("gauss identity order", *order, 100_000)?;
            let mut t = Table::new(vec!["order", "identity_holds"]);
            t.push(vec![
                Cell::int(*order),
                Cell::Bool(gauss_identity_check(*order)?),
            ]);
            Ok(t)
        }
        GlCmd::Sl2 { qmax } => sl2(*qmax),
    }
}

fn poly_table(
    first: usize,
    nmax: usize,
    f: impl Fn(usize) -> Result<repstat_core::qseries::QPolynomial>,
) -> Result<Table> {
    if nmax < first {
        return Err(Error::Validation(format!(
            "--nmax must be at least {first}"
        )));
    }
    limit("polynomial table", nmax, POLY_NMAX_LIMIT)?;
    let mut t = Table::new(vec!["n", "degree", "polynomial"]);
    for n in first..=nmax {
        let p = f(n)?;
        t.push(vec![
            Cell::int(n),
            p.degree().map_or(Cell::Empty, Cell::int),
            Cell::Poly(p),
        ]);
    }
    Ok(t)
}

fn ratio(nmax: usize, q: &BigRational) -> Result<Table> {
    positive("nmax", nmax)?;
    limit("polynomial table", nmax, POLY_NMAX_LIMIT)?;
    let gamma = gamma_q(q, GAMMA_TERMS)?;
    let inv_gamma = BigRational::one() / &gamma.sum;
    let inv_gamma_f = rational_to_f64(&inv_gamma);
    let ratios = log_constant_ratios(nmax, q)?;
    let mut t = Table::new(vec![
        "n",
        "q",
        "ratio_exact",
        "ratio",
        "inv_gamma",
        "gamma_tail_bound",
        "abs_difference",
    ]);
    for (i, r) in ratios.into_iter().enumerate() {
        let diff = rational_to_f64(&(&r - &inv_gamma).abs());
        let real = rational_to_f64(&r);
        t.push(vec![
            Cell::int(i + 1),
            Cell::Rational(q.clone()),
            Cell::Rational(r),
            Cell::Real(real),
            Cell::Real(inv_gamma_f),
            Cell::Real(rational_to_f64(&gamma.tail_bound)),
            Cell::Real(diff),
        ]);
    }
    Ok(t)
}

fn census(q: i64) -> Result<Table> {
    let c = gl2_census(&BigInt::from(q))?;
    let mut t = Table::new(vec!["section", "case", "count", "size"]);
    for (section, rows) in [("representations", &c.rep_rows), ("classes", &c.class_rows)] {
        for r in rows {
            t.push(vec![
                Cell::text(section),
                Cell::text(r.label),
                Cell::big(&r.count),
                Cell::big(&r.size),
            ]);
        }
    }
    t.push(vec![
        Cell::text("classes"),
        Cell::text("elliptic (halved size)"),
        Cell::big(&c.class_rows[3].count),
        Cell::big(&c.elliptic_size_halved),
    ]);
    let checks = [
        (
            "sum of squared degrees = group order",
            c.rep_identity,
            c.rep_identity_symbolic,
        ),
        (
            "class equation",
            c.class_identity,
            c.class_identity_symbolic,
        ),
        (
            "class equation with halved elliptic size",
            c.class_identity_halved,
            c.class_identity_halved_symbolic,
        ),
        (
            "sum of degrees = symmetric invertible count",
            c.degree_sum_identity,
            c.degree_sum_symbolic,
        ),
        (
            "representation count = class count",
            c.count_identity,
            c.count_symbolic,
        ),
    ];
    for (name, at_q, symbolic) in checks {
        t.push(vec![
            Cell::text("check at q"),
            Cell::text(name),
            Cell::Empty,
            Cell::Bool(at_q),
        ]);
        t.push(vec![
            Cell::text("check as polynomial"),
            Cell::text(name),
            Cell::Empty,
            Cell::Bool(symbolic),
        ]);
    }
    Ok(t)
}

fn sl2(qmax: u64) -> Result<Table> {
    if qmax < 3 {
        return Err(Error::Validation(format!(
            "--qmax must be at least 3, got {qmax}"
        )));
    }
    limit("sl2 table", qmax as usize, 1_000_000)?;
    let mut t = Table::new(vec![
        "q",
        "sign",
        "twice_dim_sq",
        "class_size",
        "ratio",
        "within_5_over_q",
        "leading_match",
    ]);
    for q in (3..=qmax).step_by(2) {
        let r = sl2_pgl2_leading_check(q)?;
        for (sign, pair) in [("+", &r.plus), ("-", &r.minus)] {
            t.push(vec![
                Cell::Int(q as i64),
                Cell::text(sign),
                Cell::big(&pair.twice_dim_sq),
                Cell::big(&pair.class_size),
                Cell::Real(rational_to_f64(&pair.ratio)),
                Cell::Bool(pair.within_tolerance),
                Cell::Bool(pair.leading_match),
            ]);
        }
    }
    Ok(t)
}

/// Sizes as `size:multiplicity`, ascending.
fn size_multiset(sizes: &[u64]) -> Vec<String> {
    let mut counts = BTreeMap::new();
    for &s in sizes {
        *counts.entry(s).or_insert(0usize) += 1;
    }
    counts.iter().map(|(s, m)| format!("{s}:{m}")).collect()
}

pub fn run_kirillov(args: &KirillovArgs) -> Result<Table> {
    let preset: Preset = args
        .alg
        .parse()
        .map_err(|_| Error::Validation(format!("unknown algebra {:?}", args.alg)))?;
    let alg = NilAlgebra::new(preset, args.p)?;
    let order = (args.p as u64).saturating_pow(alg.dim() as u32);
    if order > KIRILLOV_ORDER_LIMIT {
        return Err(Error::ResourceLimit {
            what: "kirillov group order",
            n: order as usize,
            cap: KIRILLOV_ORDER_LIMIT as usize,
        });
    }
    let r = kirillov_report(&alg);
    let mut t = Table::new(vec![
        "algebra",
        "p",
        "dim",
        "group_order",
        "orbit_count",
        "class_count",
        "orbit_sizes",
        "class_sizes",
        "rep_dims",
        "even_powers",
        "match_kirillov",
        "match_naive",
    ]);
    let dims: Vec<u64> = r
        .rep_dims
        .iter()
        .map(|d| u64::try_from(d).expect("dimension below group order"))
        .collect();
    t.push(vec![
        Cell::text(r.algebra),
        Cell::Int(r.p as i64),
        Cell::int(r.dim),
        Cell::big(&r.group_order),
        Cell::int(r.orbit_sizes.len()),
        Cell::int(r.class_sizes.len()),
        Cell::List(size_multiset(&r.orbit_sizes)),
        Cell::List(size_multiset(&r.class_sizes)),
        Cell::List(size_multiset(&dims)),
        Cell::Bool(r.even_powers),
        Cell::Bool(r.match_kirillov),
        Cell::Bool(r.match_naive),
    ]);
    Ok(t)
}
