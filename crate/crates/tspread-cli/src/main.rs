//! `tspread` — command-line front end for t-spread monomial combinatorics.
//!
//! Exit codes: 0 success, 1 domain error (infeasible f-vector, input not
//! strongly stable, out-of-range values), 2 usage or parse error. With
//! `--json` every invocation emits one self-describing record on stdout;
//! human diagnostics go to stderr.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};

use tspread::{
    binomial_expansion, dominance_check, graded_betti, lex_ideal_from_ft_vector, lex_segment,
    min_of_shadow, t_operator, validate_ft_vector, BettiTable, Error, FTVector, Monomial,
    MonomialIdeal, MonomialSet, SpreadContext,
};

#[derive(Parser)]
#[command(
    name = "tspread",
    version,
    about = "Combinatorics of t-spread monomial ideals: enumeration, shadows, lex ideals, f-vectors, Betti tables"
)]
struct Cli {
    /// Emit a single JSON record on stdout instead of plain text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List M_{n,deg,t} in descending lex order
    Enumerate {
        #[arg(long)]
        n: u32,
        /// Gap vector, comma separated (d = len + 1), e.g. 1,0,2
        #[arg(long, value_delimiter = ',')]
        t: Vec<u32>,
        #[arg(long)]
        deg: usize,
    },
    /// Print |M_{n,deg,t}|
    Count {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',')]
        t: Vec<u32>,
        #[arg(long)]
        deg: usize,
    },
    /// Shadow of a set file (one monomial per line); --classical skips the spread filter
    Shadow {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',')]
        t: Vec<u32>,
        /// Classical shadow: every product x_i * w, no spread filter
        #[arg(long)]
        classical: bool,
        setfile: PathBuf,
    },
    /// Check a set file for the strongly-stable and lex properties
    CheckSet {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',')]
        t: Vec<u32>,
        setfile: PathBuf,
    },
    /// Initial lex segment determined by a monomial
    Segment {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',')]
        t: Vec<u32>,
        monomial: String,
    },
    /// Lex minimum of the shadow of the segment determined by a monomial
    SegmentMinShadow {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',')]
        t: Vec<u32>,
        monomial: String,
    },
    /// Macaulay binomial expansion of a with respect to deg
    Expand {
        #[arg(long)]
        a: BigUint,
        #[arg(long)]
        deg: u32,
    },
    /// The t-spread operator a^(n,deg,t)
    Operator {
        #[arg(long)]
        a: BigUint,
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',')]
        t: Vec<u32>,
        #[arg(long)]
        deg: usize,
    },
    /// f-vector of an ideal file (header `n=.. t=..`, one generator per line)
    Fvector { idealfile: PathBuf },
    /// Check the f-vector growth bounds; exits 1 with diagnostics when violated
    ValidateF {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',')]
        t: Vec<u32>,
        /// Entries f_-1,f_0,...,f_{d-1}, comma separated
        #[arg(long)]
        f: String,
    },
    /// The lex ideal with the same f-vector as a strongly stable ideal file
    Lexify { idealfile: PathBuf },
    /// Witness lex ideal realizing a valid f-vector
    FromF {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',')]
        t: Vec<u32>,
        #[arg(long)]
        f: String,
    },
    /// Graded Betti table of a strongly stable ideal file
    Betti {
        /// Also lexify and report entrywise dominance
        #[arg(long)]
        compare: bool,
        idealfile: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let name = command_name(&cli.command);
    match run(cli) {
        Ok(record) => {
            if json {
                println!("{record}");
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            if json {
                println!(
                    "{}",
                    json!({
                        "command": name,
                        "ok": false,
                        "error": { "kind": error_kind(&err), "message": err.to_string() },
                    })
                );
            }
            ExitCode::from(exit_code(&err))
        }
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Enumerate { .. } => "enumerate",
        Command::Count { .. } => "count",
        Command::Shadow { .. } => "shadow",
        Command::CheckSet { .. } => "check-set",
        Command::Segment { .. } => "segment",
        Command::SegmentMinShadow { .. } => "segment-min-shadow",
        Command::Expand { .. } => "expand",
        Command::Operator { .. } => "operator",
        Command::Fvector { .. } => "fvector",
        Command::ValidateF { .. } => "validate-f",
        Command::Lexify { .. } => "lexify",
        Command::FromF { .. } => "from-f",
        Command::Betti { .. } => "betti",
    }
}

#[derive(Debug)]
enum CliError {
    Domain(Error),
    Io(PathBuf, std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

fn exit_code(err: &CliError) -> u8 {
    match err {
        // malformed input text and unreadable files are usage errors
        CliError::Domain(Error::Parse { .. }) | CliError::Io(..) => 2,
        CliError::Domain(_) => 1,
    }
}

fn error_kind(err: &CliError) -> &'static str {
    match err {
        CliError::Io(..) => "io",
        CliError::Domain(e) => match e {
            Error::Parse { .. } => "parse",
            Error::InvalidFtVector(_) => "invalid-f-vector",
            Error::NotStronglyStable(_) => "not-strongly-stable",
            Error::InfeasibleSize { .. } => "infeasible-size",
            Error::OperatorOutOfRange { .. } => "out-of-range",
            Error::NotFullSupport => "not-full-support",
            Error::NotTSpread(_) => "not-t-spread",
            Error::EmptyShadow { .. } => "empty-shadow",
            Error::UnitIdeal => "unit-ideal",
            _ => "domain",
        },
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))
}

fn context(n: u32, t: Vec<u32>) -> Result<SpreadContext, CliError> {
    Ok(SpreadContext::new(n, t)?)
}

fn indices(m: &Monomial) -> Value {
    json!(m.indices())
}

fn set_record(set: &MonomialSet) -> Value {
    json!({
        "degree": set.degree(),
        "count": set.len(),
        "monomials": set.iter().map(indices).collect::<Vec<_>>(),
    })
}

fn ideal_record(ideal: &MonomialIdeal) -> Value {
    json!({
        "context": { "n": ideal.ctx().n(), "t": ideal.ctx().t() },
        "generators": ideal.generators().iter().map(indices).collect::<Vec<_>>(),
    })
}

fn betti_record(table: &BettiTable) -> Value {
    json!(table
        .iter()
        .map(|(&(i, j), v)| json!({ "i": i, "j": j, "value": v.to_string() }))
        .collect::<Vec<_>>())
}

fn print_ideal(ideal: &MonomialIdeal, json: bool) {
    if !json {
        print!("{ideal}");
    }
}

fn run(cli: Cli) -> Result<Value, CliError> {
    let json = cli.json;
    match cli.command {
        Command::Enumerate { n, t, deg } => {
            let ctx = context(n, t)?;
            let set = MonomialSet::all(&ctx, deg)?;
            if !json {
                print!("{set}");
            }
            Ok(json!({
                "command": "enumerate",
                "n": ctx.n(), "t": ctx.t(), "degree": deg,
                "count": set.len(),
                "monomials": set.iter().map(indices).collect::<Vec<_>>(),
            }))
        }
        Command::Count { n, t, deg } => {
            let ctx = context(n, t)?;
            let count = ctx.count(deg)?;
            if !json {
                println!("{count}");
            }
            Ok(json!({
                "command": "count",
                "n": ctx.n(), "t": ctx.t(), "degree": deg,
                "count": count.to_string(),
            }))
        }
        Command::Shadow {
            n,
            t,
            classical,
            setfile,
        } => {
            let ctx = context(n, t)?;
            let set = MonomialSet::parse_lines(&ctx, &read(&setfile)?)?;
            let shadow = if classical {
                set.shadow_0()
            } else {
                set.shadow_t()
            };
            if !json {
                print!("{shadow}");
            }
            Ok(json!({
                "command": "shadow",
                "n": ctx.n(), "t": ctx.t(), "classical": classical,
                "input": set_record(&set),
                "shadow": set_record(&shadow),
            }))
        }
        Command::CheckSet { n, t, setfile } => {
            let ctx = context(n, t)?;
            let set = MonomialSet::parse_lines(&ctx, &read(&setfile)?)?;
            let stable = set.strongly_stable_violation();
            let lex = set.lex_violation();
            if !json {
                println!("strongly-stable: {}", stable.is_none());
                println!("lex: {}", lex.is_none());
                if let Some(v) = &stable {
                    println!("witness (strongly-stable): {v}");
                }
                if let Some(m) = &lex {
                    println!("witness (lex): {m} is missing");
                }
            }
            Ok(json!({
                "command": "check-set",
                "n": ctx.n(), "t": ctx.t(), "degree": set.degree(), "count": set.len(),
                "strongly_stable": stable.is_none(),
                "lex": lex.is_none(),
                "stable_witness": stable.map(|v| json!({
                    "monomial": indices(&v.monomial),
                    "removed": v.removed,
                    "inserted": v.inserted,
                    "exchange": indices(&v.exchange),
                })),
                "lex_witness": lex.map(|m| indices(&m)),
            }))
        }
        Command::Segment { n, t, monomial } => {
            let ctx = context(n, t)?;
            let u = Monomial::parse(&monomial, &ctx)?;
            let segment = lex_segment(&u, &ctx)?;
            if !json {
                print!("{segment}");
            }
            Ok(json!({
                "command": "segment",
                "n": ctx.n(), "t": ctx.t(), "monomial": indices(&u),
                "segment": set_record(&segment),
            }))
        }
        Command::SegmentMinShadow { n, t, monomial } => {
            let ctx = context(n, t)?;
            let u = Monomial::parse(&monomial, &ctx)?;
            let (min, r) = min_of_shadow(&u, &ctx)?;
            if !json {
                println!("min: {min}");
                println!("r: {r}");
            }
            Ok(json!({
                "command": "segment-min-shadow",
                "n": ctx.n(), "t": ctx.t(), "monomial": indices(&u),
                "min": indices(&min),
                "r": r,
            }))
        }
        Command::Expand { a, deg } => {
            let expansion = binomial_expansion(&a, deg)?;
            if !json {
                println!("{a} = {expansion}");
            }
            Ok(json!({
                "command": "expand",
                "a": a.to_string(), "degree": deg,
                "expansion": expansion.to_string(),
                "terms": expansion.terms().iter()
                    .map(|(top, j)| json!({ "top": top.to_string(), "index": j }))
                    .collect::<Vec<_>>(),
            }))
        }
        Command::Operator { a, n, t, deg } => {
            let ctx = context(n, t)?;
            let value = t_operator(&a, &ctx, deg)?;
            if !json {
                println!("{value}");
            }
            Ok(json!({
                "command": "operator",
                "a": a.to_string(), "n": ctx.n(), "t": ctx.t(), "degree": deg,
                "value": value.to_string(),
            }))
        }
        Command::Fvector { idealfile } => {
            let ideal = MonomialIdeal::parse_text(&read(&idealfile)?)?;
            let f = ideal.ft_vector()?;
            if !json {
                println!("{f}");
            }
            Ok(json!({
                "command": "fvector",
                "ideal": ideal_record(&ideal),
                "f": f.entries().iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            }))
        }
        Command::ValidateF { n, t, f } => {
            let ctx = context(n, t)?;
            let f = FTVector::parse(&f)?;
            let check = validate_ft_vector(&f, &ctx)?;
            match check.violation {
                None => {
                    if !json {
                        println!("valid: {f}");
                    }
                    Ok(json!({
                        "command": "validate-f",
                        "n": ctx.n(), "t": ctx.t(),
                        "f": f.entries().iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                        "valid": true,
                    }))
                }
                Some(violation) => Err(Error::InvalidFtVector(violation).into()),
            }
        }
        Command::Lexify { idealfile } => {
            let ideal = MonomialIdeal::parse_text(&read(&idealfile)?)?;
            let lexified = ideal.lexify()?;
            print_ideal(&lexified, json);
            Ok(json!({
                "command": "lexify",
                "input": ideal_record(&ideal),
                "ideal": ideal_record(&lexified),
            }))
        }
        Command::FromF { n, t, f } => {
            let ctx = context(n, t)?;
            let f = FTVector::parse(&f)?;
            let ideal = lex_ideal_from_ft_vector(&f, &ctx)?;
            print_ideal(&ideal, json);
            Ok(json!({
                "command": "from-f",
                "f": f.entries().iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                "ideal": ideal_record(&ideal),
            }))
        }
        Command::Betti { compare, idealfile } => {
            let ideal = MonomialIdeal::parse_text(&read(&idealfile)?)?;
            if compare {
                let report = dominance_check(&ideal)?;
                if !json {
                    println!("betti(I):");
                    print!("{}", report.ideal_table.render());
                    println!();
                    println!("betti(lexify(I)):");
                    print!("{}", report.lex_table.render());
                    println!();
                    println!("dominance: {}", report.holds);
                    if let Some((i, j, ours, lex)) = &report.first_violation {
                        println!("violation at (i={i}, j={j}): {ours} > {lex}");
                    }
                }
                Ok(json!({
                    "command": "betti",
                    "compare": true,
                    "ideal": betti_record(&report.ideal_table),
                    "lex": betti_record(&report.lex_table),
                    "dominance": report.holds,
                }))
            } else {
                let table = graded_betti(&ideal)?;
                if !json {
                    print!("{}", table.render());
                }
                Ok(json!({
                    "command": "betti",
                    "compare": false,
                    "ideal": betti_record(&table),
                }))
            }
        }
    }
}
