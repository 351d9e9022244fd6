mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use report::{Format, Report};

/// Finite Gray-categories: validation, model-structure predicates, path
/// objects, cofibrant replacement, computads and nerves.
#[derive(Debug, Parser)]
#[command(name = "graycat", version)]
pub struct Cli {
    #[command(flatten)]
    pub bounds: Bounds,
    /// Report layout.
    #[arg(long, value_enum, default_value = "human", global = true)]
    pub format: Format,
    /// Write the constructed structure here, in its canonical text format.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Bounds {
    /// Longest edge path enumerated in free sesquicategories.
    #[arg(long, default_value_t = 4, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub bound_path: u64,
    /// Word bound for cofibrant replacement and counit checks.
    #[arg(long, default_value_t = 3, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub bound_word: u64,
    /// Search budget for exhaustive searches.
    #[arg(long, env = "GRAYCAT_BUDGET", default_value_t = graycat::simplicial::DEFAULT_BUDGET as u64, global = true,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Highest simplicial dimension inspected.
    #[arg(long, default_value_t = 4, global = true, value_parser = clap::value_parser!(u64).range(1..=4))]
    pub maxdim: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a file of any supported kind, chosen by its header line.
    Validate { file: PathBuf },
    /// Weak equivalence, fibration and trivial-fibration verdicts for a `gray-morphism` file.
    Classify { file: PathBuf },
    /// Build the path object and check D, P, P′ and ⟨P, P′⟩.
    PathObject { file: PathBuf },
    /// The nerve of a Gray-groupoid.
    Nerve { file: PathBuf },
    /// Horn filling up to `--maxdim`, on a simplicial-set file, a Gray-groupoid's nerve, or a builder.
    KanCheck(SimplexSource),
    /// Check the counit q : QA → A and the underlying free sesquicategory of QA.
    CofibrantReplace { file: PathBuf },
    /// Comonad laws for (Q, q, d) on cells within `--bound-word`.
    ComonadCheck { file: PathBuf },
    /// The Gray-category presentation of a simplicial set or of a groupoid's nerve.
    Pi3(SimplexSource),
    /// Spot-check the counit Π₃N(G) → G within `--bound-word`.
    CounitCheck { file: PathBuf },
    /// Funny tensor product of two categories, with its unit and symmetry checks.
    FunnyTensor { left: PathBuf, right: PathBuf },
    /// Cells of the free sesquicategory on a computad within `--bound-path`.
    FreeSesqui {
        file: PathBuf,
        /// A 2-cell `source ; left gen right ; …` to factor.
        #[arg(long)]
        cell: Vec<String>,
    },
    /// The computad presenting a retract of a free sesquicategory.
    RetractComputad { computad: PathBuf, endomorphism: PathBuf },
    /// Complete or check an adjoint biequivalence.
    #[command(subcommand)]
    AdjointBiequiv(AdjointCommand),
    /// The Gray-category 2_X of a 2-category, optionally checking representability in G.
    TwoOf {
        file: PathBuf,
        /// Compare Gray-functors 2_X → G with triples (A, B, X → G(A, B)).
        #[arg(long)]
        against: Option<PathBuf>,
    },
    /// The boundary inclusion ∂Δ[n+2] ⊂ Δ[n+2], for n at most 2.
    Gn { n: usize },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SimplexSource {
    /// A `simplicial-set` or `gray-category` file.
    pub file: Option<PathBuf>,
    /// The standard simplex Δ[n].
    #[arg(long, value_name = "N")]
    pub delta: Option<usize>,
    /// Its boundary ∂Δ[n].
    #[arg(long, value_name = "N")]
    pub boundary: Option<usize>,
    /// The horn Λ^r[n].
    #[arg(long, num_args = 2, value_names = ["N", "R"])]
    pub horn: Option<Vec<usize>>,
}

#[derive(Debug, Subcommand)]
pub enum AdjointCommand {
    /// Given f, g and ε : fg ⇒ 1, find η, S and the unique T.
    Complete {
        file: PathBuf,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        eps: String,
    },
    /// Check both tetrahedron equations on given data.
    Check {
        file: PathBuf,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        eta: String,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        t: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are input errors, not inconclusive runs
            return ExitCode::from(if e.use_stderr() { report::Status::InputError as u8 } else { 0 });
        }
    };
    let mut report = Report::new();
    report.put("command", cli.command.name());
    report.put("bound_path", cli.bounds.bound_path);
    report.put("bound_word", cli.bounds.bound_word);
    report.put("budget", cli.bounds.budget);
    report.put("maxdim", cli.bounds.maxdim);
    if let Err(e) = commands::run(&cli, &mut report) {
        report.error(&e);
    }
    print!("{}", report.render(cli.format));
    ExitCode::from(report.status() as u8)
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Classify { .. } => "classify",
            Command::PathObject { .. } => "path-object",
            Command::Nerve { .. } => "nerve",
            Command::KanCheck(_) => "kan-check",
            Command::CofibrantReplace { .. } => "cofibrant-replace",
            Command::ComonadCheck { .. } => "comonad-check",
            Command::Pi3(_) => "pi3",
            Command::CounitCheck { .. } => "counit-check",
            Command::FunnyTensor { .. } => "funny-tensor",
            Command::FreeSesqui { .. } => "free-sesqui",
            Command::RetractComputad { .. } => "retract-computad",
            Command::AdjointBiequiv(AdjointCommand::Complete { .. }) => "adjoint-biequiv complete",
            Command::AdjointBiequiv(AdjointCommand::Check { .. }) => "adjoint-biequiv check",
            Command::TwoOf { .. } => "two-of",
            Command::Gn { .. } => "gn",
        }
    }
}
