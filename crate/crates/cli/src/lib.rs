//! Command-line front end for `semicov`.
//!
//! [`run`] takes the argument vector and two output streams and returns the
//! process exit code: 0 on success, 1 on a domain error, 2 on a usage error.

pub mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semicov::coe::{self, coe_closure, coe_msg, coe_rank1, enumerate_coe};
use semicov::oracle;
use semicov::theta::{enumerate_theta, theta_closure, theta_msg, theta_rank1};
use semicov::{Error, FamilyTree, NumericalSemigroup};

use render::{FamilyDoc, SemigroupDoc};

pub const DEFAULT_MAX_MEMBERS: usize = 100_000;
pub const MAX_MEMBERS_ENV: &str = "SEMICOV_MAX_MEMBERS";

#[derive(Parser, Debug)]
#[command(
    name = "semicov",
    version,
    about = "Numerical semigroups and semi-covarieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Single-semigroup invariants.
    #[command(subcommand)]
    Ns(NsCommand),
    /// Oversemigroups of a fixed semigroup.
    #[command(subcommand)]
    Theta(ThetaCommand),
    /// Coe-semigroups with a fixed Frobenius number.
    #[command(subcommand)]
    Coe(CoeCommand),
    /// Export a family tree.
    Tree(TreeArgs),
    /// Brute-force verification suites.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand, Debug)]
enum NsCommand {
    Info {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct DeltaArg {
    /// Generators of Δ.
    #[arg(long, value_delimiter = ',', required = true)]
    gens: Vec<u64>,
}

#[derive(Args, Debug)]
struct Limit {
    #[arg(long)]
    max_members: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum ThetaCommand {
    Enumerate {
        #[command(flatten)]
        delta: DeltaArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        limit: Limit,
    },
    Closure {
        #[command(flatten)]
        delta: DeltaArg,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Msg)]
        format: Format,
    },
    Msg {
        #[command(flatten)]
        delta: DeltaArg,
        /// Generators of the member S.
        #[arg(long, value_delimiter = ',', required = true)]
        member: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Msg)]
        format: Format,
    },
    Rank1 {
        #[command(flatten)]
        delta: DeltaArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct FrobeniusArg {
    #[arg(long, allow_negative_numbers = true)]
    frobenius: i64,
}

#[derive(Subcommand, Debug)]
enum CoeCommand {
    Enumerate {
        #[command(flatten)]
        f: FrobeniusArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        limit: Limit,
    },
    Closure {
        #[command(flatten)]
        f: FrobeniusArg,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Msg)]
        format: Format,
    },
    Msg {
        #[command(flatten)]
        f: FrobeniusArg,
        /// Generators `g` of the member `⟨g⟩ ∪ {F+1, →}`.
        #[arg(long, value_delimiter = ',', required = true)]
        member: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Msg)]
        format: Format,
    },
    Rank1 {
        #[command(flatten)]
        f: FrobeniusArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Whether ⟨gens⟩ is a coe-semigroup.
    Check {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Theta,
    Coe,
}

#[derive(Args, Debug)]
struct TreeArgs {
    #[arg(long, value_enum)]
    family: FamilyKind,
    #[arg(long, value_delimiter = ',')]
    gens: Option<Vec<u64>>,
    #[arg(long, allow_negative_numbers = true)]
    frobenius: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Dot)]
    format: Format,
    #[command(flatten)]
    limit: Limit,
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    Verify {
        #[arg(long, default_value_t = 8)]
        max_genus: u64,
        #[arg(long, default_value_t = 13)]
        max_frobenius: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Count,
    Msg,
}

enum Failure {
    Domain(Error),
    Usage(String),
    /// Oracle mismatches: the report still goes to standard output.
    Mismatch {
        report: String,
        failed: Vec<&'static str>,
    },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<String, Failure>;

fn unsupported(format: Format, command: &str) -> Failure {
    Failure::Usage(format!(
        "format {:?} is not available for `{command}`",
        format
    ))
}

fn max_members(limit: &Limit) -> Result<usize, Failure> {
    if let Some(n) = limit.max_members {
        return Ok(n);
    }
    match std::env::var(MAX_MEMBERS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_MEMBERS_ENV}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_MAX_MEMBERS),
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("documents serialize");
    s.push('\n');
    s
}

fn semigroup(s: &NumericalSemigroup, format: Format, command: &str) -> Outcome {
    match format {
        Format::Msg => Ok(format!("{}\n", render::join(s.minimal_generators()))),
        Format::Json => Ok(json(&SemigroupDoc::from(s))),
        Format::Text => Ok(format!("{}\n", render::label(s))),
        f => Err(unsupported(f, command)),
    }
}

fn semigroup_list(list: &[NumericalSemigroup], format: Format, command: &str) -> Outcome {
    match format {
        Format::Count => Ok(format!("{}\n", list.len())),
        Format::Text => Ok(list
            .iter()
            .map(|s| format!("{}\n", render::label(s)))
            .collect()),
        Format::Msg => Ok(list
            .iter()
            .map(|s| format!("{}\n", render::join(s.minimal_generators())))
            .collect()),
        Format::Json => Ok(list.iter().map(|s| json(&SemigroupDoc::from(s))).collect()),
        f => Err(unsupported(f, command)),
    }
}

fn family(tree: &FamilyTree, name: &str, format: Format, command: &str) -> Outcome {
    match format {
        Format::Count => Ok(format!("{}\n", tree.len())),
        Format::Json => Ok(json(&FamilyDoc::from(tree))),
        Format::Dot => Ok(render::dot(tree, name)),
        Format::Text | Format::Msg => {
            let members: Vec<_> = tree.members().cloned().collect();
            semigroup_list(&members, format, command)
        }
    }
}

fn generated(gens: &[u64]) -> Result<NumericalSemigroup, Failure> {
    Ok(NumericalSemigroup::from_generators(gens)?)
}

fn info(s: &NumericalSemigroup, format: Format) -> Outcome {
    match format {
        Format::Json => Ok(json(&SemigroupDoc::from(s))),
        Format::Text => {
            let inv = s.invariants();
            let pf = if s.is_naturals() {
                "-1".to_string()
            } else {
                render::join(&s.pseudo_frobenius()?)
            };
            let sg = if s.is_naturals() {
                String::new()
            } else {
                render::join(&s.special_gaps()?)
            };
            Ok(format!(
                "msg: {}\nmultiplicity: {}\nfrobenius: {}\ngenus: {}\nembedding_dimension: {}\ntype: {}\ngaps: {}\npseudo_frobenius: {}\nspecial_gaps: {}\n",
                render::join(s.minimal_generators()),
                inv.multiplicity,
                inv.frobenius,
                inv.genus,
                inv.embedding_dimension,
                inv.semigroup_type,
                render::join(&s.gaps()),
                pf,
                sg,
            ))
        }
        f => Err(unsupported(f, "ns info")),
    }
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Ns(NsCommand::Info { gens, format }) => info(&generated(&gens)?, format),

        Command::Theta(ThetaCommand::Enumerate {
            delta,
            format,
            limit,
        }) => {
            let d = generated(&delta.gens)?;
            let tree = enumerate_theta(&d, Some(max_members(&limit)?))?;
            family(&tree, &format!("theta({d})"), format, "theta enumerate")
        }
        Command::Theta(ThetaCommand::Closure { delta, set, format }) => {
            let d = generated(&delta.gens)?;
            semigroup(&theta_closure(&d, &set)?, format, "theta closure")
        }
        Command::Theta(ThetaCommand::Msg {
            delta,
            member,
            format,
        }) => {
            let d = generated(&delta.gens)?;
            let s = generated(&member)?;
            let m = theta_msg(&d, &s)?;
            match format {
                Format::Msg => Ok(format!("{}\n", render::join(&m))),
                Format::Count => Ok(format!("{}\n", m.len())),
                f => Err(unsupported(f, "theta msg")),
            }
        }
        Command::Theta(ThetaCommand::Rank1 { delta, format }) => {
            let d = generated(&delta.gens)?;
            let pairs = theta_rank1(&d);
            match format {
                Format::Text => Ok(pairs
                    .iter()
                    .map(|(x, s)| format!("{x}: {}\n", render::label(s)))
                    .collect()),
                f => {
                    let list: Vec<_> = pairs.into_iter().map(|p| p.1).collect();
                    semigroup_list(&list, f, "theta rank1")
                }
            }
        }

        Command::Coe(CoeCommand::Enumerate { f, format, limit }) => {
            let tree = enumerate_coe(f.frobenius, Some(max_members(&limit)?))?;
            family(
                &tree,
                &format!("C({})", f.frobenius),
                format,
                "coe enumerate",
            )
        }
        Command::Coe(CoeCommand::Closure { f, set, format }) => {
            semigroup(&coe_closure(f.frobenius, &set)?, format, "coe closure")
        }
        Command::Coe(CoeCommand::Msg { f, member, format }) => {
            if f.frobenius <= 0 {
                return Err(Error::EvenFrobenius(f.frobenius).into());
            }
            let s = NumericalSemigroup::generated_with_tail(&member, f.frobenius as u64)?;
            let m = coe_msg(f.frobenius, &s)?;
            match format {
                Format::Msg => Ok(format!("{}\n", render::join(&m))),
                Format::Count => Ok(format!("{}\n", m.len())),
                fmt => Err(unsupported(fmt, "coe msg")),
            }
        }
        Command::Coe(CoeCommand::Rank1 { f, format }) => {
            semigroup_list(&coe_rank1(f.frobenius)?, format, "coe rank1")
        }
        Command::Coe(CoeCommand::Check { gens }) => {
            Ok(format!("{}\n", coe::is_coe(&generated(&gens)?)))
        }

        Command::Tree(args) => {
            let limit = Some(max_members(&args.limit)?);
            let (tree, name) = match (args.family, &args.gens, args.frobenius) {
                (FamilyKind::Theta, Some(g), None) => {
                    let d = generated(g)?;
                    (enumerate_theta(&d, limit)?, format!("theta({d})"))
                }
                (FamilyKind::Coe, None, Some(f)) => (enumerate_coe(f, limit)?, format!("C({f})")),
                (FamilyKind::Theta, _, _) => {
                    return Err(Failure::Usage("--family theta takes --gens only".into()))
                }
                (FamilyKind::Coe, _, _) => {
                    return Err(Failure::Usage("--family coe takes --frobenius only".into()))
                }
            };
            match args.format {
                Format::Dot | Format::Json => family(&tree, &name, args.format, "tree"),
                f => Err(unsupported(f, "tree")),
            }
        }

        Command::Oracle(OracleCommand::Verify {
            max_genus,
            max_frobenius,
        }) => {
            let checks = oracle::verify(max_genus, max_frobenius)?;
            let mut out = String::new();
            let mut failed = Vec::new();
            for c in &checks {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                out.push_str(&format!("{status} {} ({} cases)\n", c.name, c.cases));
                for m in &c.mismatches {
                    out.push_str(&format!("  mismatch: {m}\n"));
                }
                if !c.passed() {
                    failed.push(c.name);
                }
            }
            if failed.is_empty() {
                Ok(out)
            } else {
                Err(Failure::Mismatch {
                    report: out,
                    failed,
                })
            }
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            1
        }
        Err(Failure::Mismatch { report, failed }) => {
            let _ = out.write_all(report.as_bytes());
            let _ = writeln!(err, "error[oracle-mismatch]: {}", failed.join(", "));
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error[usage]: {msg}");
            2
        }
    }
}
