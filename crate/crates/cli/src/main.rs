use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod report;

use report::{Failure, Report};

#[derive(Parser)]
#[command(name = "groupomega", version, about = "Group-theoretic matrix multiplication toolkit")]
struct Cli {
    /// Print the versioned JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Work limit for brute-force checks (default: $GROUPOMEGA_BUDGET or 1e8).
    #[arg(long, global = true)]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group structure summary.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Jennings series and p-degrees.
    Jennings(JenningsArgs),
    /// Dimensions of the powers of the augmentation ideal.
    IdealDims(IdealDimsArgs),
    /// Slice-rank bounds for a p-group.
    SliceBound(SliceBoundArgs),
    /// Sylow-based bound for a nilpotent group given as a product.
    NilpotentBound { group: String },
    /// Exact slice or flat rank of a small tensor file.
    #[command(subcommand)]
    Tensor(TensorCmd),
    /// Triple product property.
    #[command(subcommand)]
    Tpp(VerifyCmd),
    /// Simultaneous triple product property.
    #[command(subcommand)]
    Stpp(VerifyCmd),
    /// Solve the exponent inequality for an instance file.
    Omega(OmegaArgs),
    /// Multiplicative and border matchings.
    #[command(subcommand)]
    Matching(MatchingCmd),
    /// Young subgroups from triangle and hexagon arrays.
    #[command(subcommand)]
    Young(YoungCmd),
    /// Exploratory scans.
    #[command(subcommand)]
    Explore(ExploreCmd),
}

#[derive(Subcommand)]
enum GroupCmd {
    Info { group: String },
}

#[derive(Args)]
struct JenningsArgs {
    group: Option<String>,
    #[arg(short)]
    p: Option<u64>,
    /// Synthetic p-degrees `p: r1,r2,...` instead of a group.
    #[arg(long)]
    degrees: Option<String>,
    /// Check bounded variance with this constant `M`.
    #[arg(long)]
    max_variance: Option<String>,
    /// Check linear expectation with this constant `c`.
    #[arg(long)]
    expectation: Option<String>,
    /// Check bounded length with this constant `L`.
    #[arg(long)]
    max_length: Option<usize>,
}

#[derive(Args)]
struct IdealDimsArgs {
    group: String,
    #[arg(short)]
    p: u64,
    /// Also print a basis of every power.
    #[arg(long)]
    dump_basis: bool,
}

#[derive(Args)]
struct SliceBoundArgs {
    group: Option<String>,
    #[arg(short)]
    p: Option<u64>,
    /// Synthetic p-degrees `p: r1,r2,...` instead of a group.
    #[arg(long)]
    degrees: Option<String>,
}

#[derive(Subcommand)]
enum TensorCmd {
    Slicerank { file: PathBuf },
    Flatrank { file: PathBuf },
}

#[derive(Subcommand)]
enum VerifyCmd {
    Verify { file: PathBuf },
}

#[derive(Args)]
struct OmegaArgs {
    file: PathBuf,
    /// Character degrees, e.g. `1,1,2`.
    #[arg(long)]
    degrees: Option<String>,
}

#[derive(Subcommand)]
enum MatchingCmd {
    Verify {
        file: PathBuf,
    },
    /// The quadratic border matching in Z/m.
    Cyclic {
        #[arg(short)]
        m: usize,
    },
    /// Combine matchings in a normal subgroup and its quotient.
    Extend {
        group: String,
        /// Elements of the normal subgroup, e.g. `0,3,6`.
        #[arg(long)]
        normal: String,
        /// Matching inside the normal subgroup (elements of the group).
        #[arg(long)]
        sub: PathBuf,
        /// Matching in the quotient (coset numbering).
        #[arg(long)]
        quotient: PathBuf,
    },
    /// Border matching along a central series of a p-group.
    Chain {
        group: String,
        #[arg(short)]
        p: u64,
    },
}

#[derive(Subcommand)]
enum YoungCmd {
    Triangle {
        #[arg(short)]
        m: usize,
    },
    Hexagon {
        #[arg(short)]
        s: usize,
    },
    /// Subgroup-order ratio of one shape, or between two shapes.
    Ratio {
        /// `triangle:M` or `hexagon:S`; give two to compare.
        #[arg(long)]
        shape: Vec<String>,
        #[arg(long)]
        hexagon: Option<usize>,
        #[arg(long)]
        triangle: Option<usize>,
    },
    Scan {
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        #[arg(long, allow_negative_numbers = true)]
        d: f64,
        /// e.g. `triangle:2..13,hexagon:2..6`.
        #[arg(long)]
        shapes: String,
    },
    /// Check the binomial lower bound for one `(n, t)` or all `t < n <= N`.
    Binomial {
        #[arg(short)]
        n: u64,
        #[arg(short)]
        t: Option<u64>,
    },
}

#[derive(Subcommand)]
enum ExploreCmd {
    /// `δ'` for `r_i = i^c` against its predicted growth.
    DeltaPrime {
        /// Comma-separated exponents.
        #[arg(long, allow_hyphen_values = true, default_value = "0,-1,-2,-3")]
        c: String,
        /// Comma-separated lengths; defaults to 2^4..2^16.
        #[arg(long)]
        ells: Option<String>,
    },
}

fn budget(flag: Option<u64>) -> Result<groupomega::Budget, Failure> {
    if let Some(b) = flag {
        return Ok(groupomega::Budget::new(b));
    }
    match std::env::var("GROUPOMEGA_BUDGET") {
        Ok(v) => v
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite() && *x >= 1.0)
            .map(|x| groupomega::Budget::new(x as u64))
            .ok_or_else(|| Failure::Usage(format!("GROUPOMEGA_BUDGET must be a positive number, got `{v}`"))),
        Err(_) => Ok(groupomega::Budget::default()),
    }
}

fn dispatch(cli: Cli) -> Result<Report, Failure> {
    let budget = budget(cli.budget)?;
    use commands::*;
    match cli.command {
        Command::Group(GroupCmd::Info { group }) => group_info(&group),
        Command::Jennings(a) => jennings(
            a.group.as_deref(),
            a.p,
            a.degrees.as_deref(),
            a.max_variance.as_deref(),
            a.expectation.as_deref(),
            a.max_length,
        ),
        Command::IdealDims(a) => ideal_dims(&a.group, a.p, a.dump_basis),
        Command::SliceBound(a) => slice_bound(a.group.as_deref(), a.p, a.degrees.as_deref()),
        Command::NilpotentBound { group } => nilpotent(&group),
        Command::Tensor(TensorCmd::Slicerank { file }) => tensor_rank(&file, false),
        Command::Tensor(TensorCmd::Flatrank { file }) => tensor_rank(&file, true),
        Command::Tpp(VerifyCmd::Verify { file }) => tpp_verify(&file, budget),
        Command::Stpp(VerifyCmd::Verify { file }) => stpp_verify(&file, budget),
        Command::Omega(a) => omega(&a.file, a.degrees.as_deref()),
        Command::Matching(MatchingCmd::Verify { file }) => matching_verify(&file, budget),
        Command::Matching(MatchingCmd::Cyclic { m }) => matching_cyclic(m, budget),
        Command::Matching(MatchingCmd::Extend { group, normal, sub, quotient }) => {
            matching_extend(&group, &normal, &sub, &quotient, budget)
        }
        Command::Matching(MatchingCmd::Chain { group, p }) => matching_chain(&group, p, budget),
        Command::Young(YoungCmd::Triangle { m }) => young_shape(&format!("triangle:{m}")),
        Command::Young(YoungCmd::Hexagon { s }) => young_shape(&format!("hexagon:{s}")),
        Command::Young(YoungCmd::Ratio { shape, hexagon, triangle }) => {
            let mut shapes = shape;
            shapes.extend(hexagon.map(|s| format!("hexagon:{s}")));
            shapes.extend(triangle.map(|m| format!("triangle:{m}")));
            young_ratio(&shapes)
        }
        Command::Young(YoungCmd::Scan { c, d, shapes }) => young_scan(&shapes, c, d),
        Command::Young(YoungCmd::Binomial { n, t }) => binomial(n, t),
        Command::Explore(ExploreCmd::DeltaPrime { c, ells }) => delta_prime(&c, ells.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match dispatch(cli) {
        Ok(report) => {
            report.print(json);
            ExitCode::from(if report.verdict { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
