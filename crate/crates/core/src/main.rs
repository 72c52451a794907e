//! Command-line surface over the library: encode/decode, tree and sequence
//! ranking, shell-table emission, and the verification suite.
//!
//! All integer I/O is decimal with arbitrary precision. Exit codes: 0 on
//! success, 1 when `verify` finds a failing property, 2 on usage or domain
//! errors.

use std::fmt;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use natcode::enums::{self, TuplingFamily};
use natcode::pairings::PairingKind;
use natcode::tuplings::{self, TuplingFunction};
use natcode::verify;
use natcode::{Error, Nat};

#[derive(Parser)]
#[command(name = "natcode", version, about = "Bijections between tuples, trees, sequences and ℕ")]
struct Cli {
    /// Wrap the result in a one-line JSON envelope.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map coordinates to their code.
    Encode {
        #[command(flatten)]
        sel: Selector,
        /// Coordinates x1 … xd.
        #[arg(required = true)]
        coords: Vec<String>,
    },
    /// Map a code back to its coordinates.
    Decode {
        #[command(flatten)]
        sel: Selector,
        /// The code to invert.
        z: String,
    },
    /// Rank and unrank full binary trees.
    Tree {
        #[command(subcommand)]
        cmd: TreeCmd,
    },
    /// Rank and unrank finite sequences.
    Seq {
        #[command(subcommand)]
        cmd: SeqCmd,
    },
    /// Emit (point, code, shell) records over a grid.
    Shells {
        #[command(flatten)]
        sel: Selector,
        /// Inclusive per-coordinate maximum of the grid.
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run the self-check suite and report one verdict per property.
    Verify {
        /// Code/rank prefix each property is checked over.
        #[arg(long)]
        limit: u64,
    },
}

#[derive(Subcommand)]
enum TreeCmd {
    /// Print the tree at an index as an s-expression like ((o o) o).
    Unrank {
        #[arg(long, value_enum)]
        pairing: PairingSel,
        n: String,
    },
    /// Parse an s-expression and print its index.
    Rank {
        #[arg(long, value_enum)]
        pairing: PairingSel,
        tree: String,
    },
}

#[derive(Subcommand)]
enum SeqCmd {
    /// Print the sequence at an index, comma-separated (empty line for ()).
    Unrank {
        #[arg(long, value_enum)]
        scheme: Scheme,
        #[arg(long, value_enum)]
        pairing: PairingSel,
        /// Tupling family for the zeta scheme (ignored by xi).
        #[arg(long, value_enum)]
        family: Option<Family>,
        n: String,
    },
    /// Read a comma-separated sequence and print its index.
    Rank {
        #[arg(long, value_enum)]
        scheme: Scheme,
        #[arg(long, value_enum)]
        pairing: PairingSel,
        /// Tupling family for the zeta scheme (ignored by xi).
        #[arg(long, value_enum)]
        family: Option<Family>,
        seq: String,
    },
}

#[derive(Args)]
struct Selector {
    /// Function family.
    #[arg(long = "fn", value_enum)]
    function: FunctionName,
    /// Number of coordinates.
    #[arg(long, default_value_t = 2)]
    dim: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum FunctionName {
    Cantor,
    CantorSwapped,
    CantorPositive,
    Rs,
    Skolem,
    Chowla,
    Dyadic,
    FoldCantor,
    FoldRs,
}

#[derive(Clone, Copy, ValueEnum)]
enum PairingSel {
    Cantor,
    CantorSwapped,
    Rs,
    Dyadic,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Xi,
    Zeta,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Rs,
    FoldCantor,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Domain(e) => write!(f, "{e}"),
            Failure::Usage(msg) => f.write_str(msg),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    match &cli.command {
        Command::Encode { sel, coords } => {
            let f = sel.build()?;
            let point: Vec<Nat> = coords.iter().map(|c| parse_nat(c)).collect::<Result<_, _>>()?;
            let code = f.encode(&point)?;
            if cli.json {
                println!(
                    "{}",
                    envelope(&nat_array(&point), &code.to_string(), sel.name(), Some(sel.dim))
                );
            } else {
                println!("{code}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decode { sel, z } => {
            let f = sel.build()?;
            let z = parse_nat(z)?;
            let point = f.decode(&z)?;
            if cli.json {
                println!(
                    "{}",
                    envelope(&z.to_string(), &nat_array(&point), sel.name(), Some(sel.dim))
                );
            } else {
                println!("{}", join(&point, " "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tree { cmd } => run_tree(cli, cmd),
        Command::Seq { cmd } => run_seq(cli, cmd),
        Command::Shells { sel, max, format } => run_shells(cli, sel, *max, *format),
        Command::Verify { limit } => Ok(run_verify(cli, *limit)),
    }
}

fn run_tree(cli: &Cli, cmd: &TreeCmd) -> Result<ExitCode, Failure> {
    match cmd {
        TreeCmd::Unrank { pairing, n } => {
            let n = parse_nat(n)?;
            let tree = enums::tree_unrank(&n, pairing.kind())?;
            if cli.json {
                println!(
                    "{}",
                    envelope(&n.to_string(), &json_str(&tree.to_string()), pairing.name(), Some(2))
                );
            } else {
                println!("{tree}");
            }
        }
        TreeCmd::Rank { pairing, tree } => {
            let parsed: enums::FullBinaryTree = tree.parse()?;
            let rank = enums::tree_rank(&parsed, pairing.kind())?;
            if cli.json {
                println!(
                    "{}",
                    envelope(&json_str(tree), &rank.to_string(), pairing.name(), Some(2))
                );
            } else {
                println!("{rank}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_seq(cli: &Cli, cmd: &SeqCmd) -> Result<ExitCode, Failure> {
    match cmd {
        SeqCmd::Unrank {
            scheme,
            pairing,
            family,
            n,
        } => {
            let n = parse_nat(n)?;
            let seq = match scheme {
                Scheme::Xi => enums::seq_unrank_xi(&n, pairing.kind())?,
                Scheme::Zeta => {
                    enums::seq_unrank_zeta(&n, pairing.kind(), family.unwrap_or(Family::Rs).family())?
                }
            };
            if cli.json {
                println!(
                    "{}",
                    envelope(&n.to_string(), &nat_array(&seq), pairing.name(), None)
                );
            } else {
                println!("{}", join(&seq, ","));
            }
        }
        SeqCmd::Rank {
            scheme,
            pairing,
            family,
            seq,
        } => {
            let items = parse_seq(seq)?;
            let rank = match scheme {
                Scheme::Xi => enums::seq_rank_xi(&items, pairing.kind())?,
                Scheme::Zeta => {
                    enums::seq_rank_zeta(&items, pairing.kind(), family.unwrap_or(Family::Rs).family())?
                }
            };
            if cli.json {
                println!(
                    "{}",
                    envelope(&nat_array(&items), &rank.to_string(), pairing.name(), None)
                );
            } else {
                println!("{rank}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_shells(cli: &Cli, sel: &Selector, max: u64, format: Format) -> Result<ExitCode, Failure> {
    let f = sel.build()?;
    let sigma = f.standard_shell().ok_or_else(|| {
        Failure::Usage(format!("{} has no standard shell numbering", sel.name()))
    })?;
    let dim = f.dim();
    let mut rows: Vec<(Vec<Nat>, Nat, Nat)> = Vec::new();
    let mut point = vec![0u64; dim];
    'grid: loop {
        let p: Vec<Nat> = point.iter().copied().map(Nat::from).collect();
        let code = f.encode(&p)?;
        let shell = sigma.sigma(&p)?;
        rows.push((p, code, shell));
        let mut pos = 0;
        loop {
            if pos == dim {
                break 'grid;
            }
            if point[pos] < max {
                point[pos] += 1;
                break;
            }
            point[pos] = 0;
            pos += 1;
        }
    }
    let mut out = String::new();
    if cli.json {
        let body: Vec<String> = rows.iter().map(row_object).collect();
        out.push_str(&envelope(
            &max.to_string(),
            &format!("[{}]", body.join(",")),
            sel.name(),
            Some(dim),
        ));
        out.push('\n');
    } else {
        match format {
            Format::Csv => {
                for i in 1..=dim {
                    out.push_str(&format!("x{i},"));
                }
                out.push_str("code,shell\n");
                for (p, code, shell) in &rows {
                    out.push_str(&format!("{},{code},{shell}\n", join(p, ",")));
                }
            }
            Format::Json => {
                for row in &rows {
                    out.push_str(&row_object(row));
                    out.push('\n');
                }
            }
        }
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn run_verify(cli: &Cli, limit: u64) -> ExitCode {
    let reports = verify::run_suite(limit);
    let failed = reports.iter().filter(|r| !r.passed).count();
    if cli.json {
        let body: Vec<String> = reports
            .iter()
            .map(|r| {
                format!(
                    "{{\"name\":{},\"passed\":{},\"detail\":{}}}",
                    json_str(&r.name),
                    r.passed,
                    json_str(&r.detail)
                )
            })
            .collect();
        println!(
            "{}",
            envelope(&limit.to_string(), &format!("[{}]", body.join(",")), "verify", None)
        );
    } else {
        for r in &reports {
            if r.passed {
                println!("ok {}", r.name);
            } else {
                println!("FAIL {}: {}", r.name, r.detail);
            }
        }
        println!(
            "{} properties, {} failed, limit {limit}",
            reports.len(),
            failed
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

impl Selector {
    fn build(&self) -> Result<TuplingFunction, Failure> {
        let two_only = |f: TuplingFunction| {
            if self.dim == 2 {
                Ok(f)
            } else {
                Err(Failure::Usage(format!(
                    "{} is a pairing: --dim must be 2, got {}",
                    self.name(),
                    self.dim
                )))
            }
        };
        match self.function {
            FunctionName::Cantor => two_only(tuplings::cantor()),
            FunctionName::CantorSwapped => two_only(tuplings::cantor_swapped()),
            FunctionName::CantorPositive => two_only(tuplings::cantor_positive()),
            FunctionName::Dyadic => two_only(tuplings::dyadic()),
            FunctionName::Rs => Ok(tuplings::rosenberg_strong(self.dim)?),
            FunctionName::Skolem => Ok(tuplings::skolem(self.dim)?),
            FunctionName::Chowla => Ok(tuplings::chowla(self.dim)?),
            FunctionName::FoldCantor => self.fold(PairingKind::Cantor),
            FunctionName::FoldRs => self.fold(PairingKind::RosenbergStrong),
        }
    }

    fn fold(&self, kind: PairingKind) -> Result<TuplingFunction, Failure> {
        if self.dim < 2 {
            return Err(Failure::Usage(format!(
                "{} needs --dim of at least 2, got {}",
                self.name(),
                self.dim
            )));
        }
        Ok(tuplings::fold_tupling(kind, self.dim)?)
    }

    fn name(&self) -> &'static str {
        match self.function {
            FunctionName::Cantor => "cantor",
            FunctionName::CantorSwapped => "cantor-swapped",
            FunctionName::CantorPositive => "cantor-positive",
            FunctionName::Rs => "rs",
            FunctionName::Skolem => "skolem",
            FunctionName::Chowla => "chowla",
            FunctionName::Dyadic => "dyadic",
            FunctionName::FoldCantor => "fold-cantor",
            FunctionName::FoldRs => "fold-rs",
        }
    }
}

impl PairingSel {
    fn kind(self) -> PairingKind {
        match self {
            PairingSel::Cantor => PairingKind::Cantor,
            PairingSel::CantorSwapped => PairingKind::CantorSwapped,
            PairingSel::Rs => PairingKind::RosenbergStrong,
            PairingSel::Dyadic => PairingKind::Dyadic,
        }
    }

    fn name(self) -> &'static str {
        self.kind().name()
    }
}

impl Family {
    fn family(self) -> TuplingFamily {
        match self {
            Family::Rs => TuplingFamily::RosenbergStrong,
            Family::FoldCantor => TuplingFamily::FoldCantor,
        }
    }
}

fn parse_nat(s: &str) -> Result<Nat, Failure> {
    s.trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("not a natural number: {s:?}")))
}

fn parse_seq(s: &str) -> Result<Vec<Nat>, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_nat).collect()
}

fn join(items: &[Nat], sep: &str) -> String {
    items
        .iter()
        .map(Nat::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn nat_array(items: &[Nat]) -> String {
    format!("[{}]", join(items, ","))
}

fn row_object((point, code, shell): &(Vec<Nat>, Nat, Nat)) -> String {
    format!(
        "{{\"point\":{},\"code\":{code},\"shell\":{shell}}}",
        nat_array(point)
    )
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// The machine-readable wrapper shared by every command.
fn envelope(input: &str, output: &str, function: &str, dim: Option<usize>) -> String {
    let dim = dim.map_or_else(|| "null".to_string(), |d| d.to_string());
    format!(
        "{{\"input\":{input},\"output\":{output},\"function\":{},\"dim\":{dim}}}",
        json_str(function)
    )
}
