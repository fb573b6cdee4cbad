use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "repstat",
    version,
    about = "Exact tables of representation dimensions and conjugacy class sizes"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Raise the largest n accepted by partition sweeps (default 50).
    #[arg(long, global = true)]
    pub cap: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Symmetric groups S_n.
    Sym {
        #[command(subcommand)]
        cmd: SymCmd,
    },
    /// General linear groups GL_n(F_q).
    Gl {
        #[command(subcommand)]
        cmd: GlCmd,
    },
    /// Coadjoint orbits against conjugacy classes for a unipotent group.
    Kirillov(KirillovArgs),
}

#[derive(Debug, Subcommand)]
pub enum SymCmd {
    /// One row per partition: dimension, class size and their logs.
    Sweep {
        #[arg(long)]
        n: usize,
    },
    /// Histogram of ln d² or ln c over the partitions of n.
    Hist {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        what: HistWhat,
        #[arg(long, default_value_t = 20)]
        bins: usize,
    },
    /// Angle between the dimension vector and the all-ones vector, n = 1..=nmax.
    Angle {
        #[arg(long)]
        nmax: usize,
    },
    /// Counts of ln d² and ln c inside [alpha·n ln n, beta·n ln n].
    Intervals {
        /// Largest n (or the only n when --nmin is absent).
        #[arg(long)]
        n: usize,
        /// Emit one row for every n in nmin..=n.
        #[arg(long)]
        nmin: Option<usize>,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
    },
    /// Sums of ln d² and ln c over partitions with first part k, k = 1..=n.
    Layers {
        #[arg(long)]
        n: usize,
    },
    /// Maximal dimension against the mean and the asymptotic average.
    Maxdim {
        #[arg(long)]
        nmax: usize,
    },
    /// Seeded Plancherel samples via RSK of uniform permutations.
    Plancherel {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HistWhat {
    /// ln d_λ²
    Dimsq,
    /// ln c_λ
    Class,
}

#[derive(Debug, Subcommand)]
pub enum GlCmd {
    /// Sum of irreducible degrees as a polynomial in q, n = 1..=nmax.
    Gow {
        #[arg(long)]
        nmax: usize,
    },
    /// Number of conjugacy classes as a polynomial in q, n = 0..=nmax.
    Classes {
        #[arg(long)]
        nmax: usize,
    },
    /// Group order as a polynomial in q, n = 1..=nmax.
    Order {
        #[arg(long)]
        nmax: usize,
    },
    /// Exact ratio B_n² / (C_n · |GL_n|) at q, with its limit 1/γ(q).
    Ratio {
        #[arg(long)]
        nmax: usize,
        /// Integer or fraction such as 2 or 5/2; must exceed 1.
        #[arg(long)]
        q: String,
    },
    /// GL_2 representation and class tables with identity checks.
    Census {
        #[arg(long)]
        q: i64,
    },
    /// Coefficient check of Σ t^{i(i+1)/2} = Π (1−t^{2i})/(1−t^{2i−1}).
    Gauss {
        #[arg(long)]
        order: usize,
    },
    /// Largest character degree against largest class in SL_2 and PGL_2.
    Sl2 {
        /// Odd prime power; every odd q in 3..=q is checked.
        #[arg(long)]
        qmax: u64,
    },
}

#[derive(Debug, Args)]
pub struct KirillovArgs {
    #[arg(long, value_parser = ["heis3", "ut4"])]
    pub alg: String,
    #[arg(long)]
    pub p: u32,
}
