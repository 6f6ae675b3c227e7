use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use diag_rees::detmat::{block, subsets, RowKind, SymbolicMatrix};
use diag_rees::generators::{GeneratorSet, G_candidate_set, L_generators};
use diag_rees::groebner::{BuchbergerOptions, EngineStats, GroebnerBasis};
use diag_rees::poly::{universe, Family, Polynomial, ProblemParams, Ring, TermOrder, VariableId};
use diag_rees::rees::{self, IdealSpec, Verdict, VerificationReport};
use diag_rees::Error;

const EXIT_FAIL: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "diag-rees", version, about = "Diagonal ideals of determinantal rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a generator set, one `tag: polynomial` per line.
    Gens {
        #[arg(long, value_parser = parse_params)]
        params: ProblemParams,
        #[arg(long, value_enum, default_value_t = SetKind::L)]
        set: SetKind,
        /// Also print the stacked matrices behind each f generator.
        #[arg(long)]
        dump_matrices: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduced Gröbner basis in canonical text.
    Groebner {
        #[arg(long, value_parser = parse_params)]
        params: ProblemParams,
        /// paperlex: L under PaperLex. elim:t: the Rees presentation
        /// (minors and z - t(x - y)) with t eliminated first. elim:xy: L with
        /// the x and y variables eliminated first.
        #[arg(long, default_value = "paperlex", value_parser = ["paperlex", "elim:t", "elim:xy"])]
        order: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print engine counters as JSON on stderr.
        #[arg(long)]
        stats: bool,
        #[arg(long, env = "DIAG_REES_BUDGET_SECS", default_value_t = 3600)]
        budget_secs: u64,
    },
    /// Run a verification and report pass/fail per check.
    Verify {
        #[arg(value_enum)]
        what: Target,
        /// Required except for the two example targets.
        #[arg(long, value_parser = parse_params)]
        params: Option<ProblemParams>,
        #[arg(long, env = "DIAG_REES_BUDGET_SECS", default_value_t = 3600)]
        budget_secs: u64,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SetKind {
    L,
    G,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    LinearType,
    Nzd,
    Gb,
    Identities,
    Fiber,
    #[value(name = "example-3x4")]
    Example3x4,
    ExampleNotfiber,
}

fn parse_params(s: &str) -> Result<ProblemParams, String> {
    let v: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()?;
    if v.len() != 6 {
        return Err(format!("expected m,n,s1,t1,s2,t2, got {} values", v.len()));
    }
    ProblemParams::new(v[0], v[1], v[2], v[3], v[4], v[5]).map_err(|e| e.to_string())
}

/// Writes through a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> anyhow::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path)?;
    Ok(())
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => write_atomic(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn options(budget_secs: u64) -> anyhow::Result<BuchbergerOptions> {
    if budget_secs == 0 {
        return Err(Error::InvalidParams("budget must be positive".into()).into());
    }
    let deadline = Instant::now() + Duration::from_secs(budget_secs);
    Ok(BuchbergerOptions::default().with_deadline(Some(deadline)))
}

fn dump_f_matrices(params: &ProblemParams) -> String {
    let mut out = String::new();
    let width: Vec<usize> = (1..=params.f_width()).collect();
    for cols in subsets(&width, params.s1) {
        let tag = cols.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        write!(out, "# f[{tag}] =").unwrap();
        for q in 1..=params.s2.min(params.s1) {
            let blocks = [block(RowKind::Z, q, q), block(RowKind::Y, 1, q - 1), block(RowKind::X, q + 1, params.s1)];
            let sign = if q % 2 == 1 { '+' } else { '-' };
            write!(out, " {sign} {}", SymbolicMatrix::stack(&blocks, &cols)).unwrap();
        }
        out.push('\n');
    }
    out
}

fn gens(params: ProblemParams, set: SetKind, dump: bool, out: Option<PathBuf>) -> anyhow::Result<u8> {
    let g: GeneratorSet = match set {
        SetKind::L => L_generators(&params)?,
        SetKind::G => G_candidate_set(&params)?,
    };
    let mut text = String::new();
    if dump {
        text.push_str(&dump_f_matrices(&params));
    }
    text.push_str(&g.to_text());
    emit(out.as_deref(), &text)?;
    Ok(0)
}

fn groebner(
    params: ProblemParams,
    order: &str,
    out: Option<PathBuf>,
    stats: bool,
    opts: &BuchbergerOptions,
) -> anyhow::Result<u8> {
    let (ring, polys): (Ring, Vec<Polynomial>) = match order {
        "paperlex" => {
            let l = L_generators(&params)?;
            (l.ring.clone(), l.polys())
        }
        "elim:xy" => {
            let l = L_generators(&params)?;
            let block = l
                .ring
                .variables()
                .iter()
                .copied()
                .filter(|v| matches!(v.family, Family::X | Family::Y));
            let ring = l.ring.with_order(TermOrder::block_elim(block, TermOrder::PaperLex))?;
            let polys = l.polys().iter().map(|p| p.convert(&l.ring, &ring)).collect::<Result<_, _>>()?;
            (ring, polys)
        }
        _ => {
            let spec = IdealSpec::standard(&params)?;
            let ring = Ring::new(
                &universe(&params, true),
                TermOrder::block_elim([VariableId::t()], TermOrder::PaperLex),
            )?;
            let t = Polynomial::var(&ring, VariableId::t())?;
            let mut polys = spec.base().iter().map(|p| p.convert(&spec.ring, &ring)).collect::<Result<Vec<_>, _>>()?;
            for i in 1..=params.m {
                for j in 1..=params.n {
                    let v = |f: fn(usize, usize) -> VariableId| Polynomial::var(&ring, f(i, j));
                    polys.push(v(VariableId::z)?.sub(&t.mul(&v(VariableId::x)?.sub(&v(VariableId::y)?))));
                }
            }
            (ring, polys)
        }
    };
    let gb = match GroebnerBasis::compute(&ring, &polys, opts) {
        Ok(gb) => gb,
        Err(Error::BudgetExceeded) => {
            eprintln!("inconclusive: budget");
            return Ok(EXIT_INCONCLUSIVE);
        }
        Err(e) => return Err(e.into()),
    };
    let mut text = String::new();
    for g in &gb.elements {
        writeln!(text, "{}", ring.fmt_poly(g)).unwrap();
    }
    emit(out.as_deref(), &text)?;
    if stats {
        let EngineStats { pairs, reductions, zero_reductions, max_degree } = gb.stats;
        let v = serde_json::json!({
            "schema": 1,
            "pairs": pairs,
            "reductions": reductions,
            "zero_reductions": zero_reductions,
            "max_degree": max_degree,
            "basis_size": gb.len(),
        });
        eprintln!("{v}");
    }
    Ok(0)
}

fn verify(
    what: Target,
    params: Option<ProblemParams>,
    opts: &BuchbergerOptions,
    json: Option<PathBuf>,
    format: Format,
) -> anyhow::Result<u8> {
    let need = || params.ok_or_else(|| Error::InvalidParams("--params is required for this target".into()));
    let report: VerificationReport = match what {
        Target::LinearType => rees::verify_linear_type(&need()?, opts)?,
        Target::Nzd => rees::nzd_certificate(&need()?, opts)?,
        Target::Gb => rees::verify_gb(&need()?, opts)?,
        Target::Identities => rees::verify_identities(&need()?, opts)?,
        Target::Fiber => rees::verify_fiber(&need()?, opts)?,
        Target::Example3x4 => rees::example_3x4(opts)?,
        Target::ExampleNotfiber => rees::notfiber_case(opts)?,
    };
    if let Some(path) = &json {
        write_atomic(path, &report.to_json())?;
    }
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    Ok(match report.verdict() {
        Verdict::Pass => 0,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                e.exit();
            }
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let result = match cli.command {
        Command::Gens { params, set, dump_matrices, out } => gens(params, set, dump_matrices, out),
        Command::Groebner { params, order, out, stats, budget_secs } => {
            options(budget_secs).and_then(|o| groebner(params, &order, out, stats, &o))
        }
        Command::Verify { what, params, budget_secs, json, format } => {
            options(budget_secs).and_then(|o| verify(what, params, &o, json, format))
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let usage = matches!(e.downcast_ref::<Error>(), Some(Error::InvalidParams(_)));
            ExitCode::from(if usage { EXIT_USAGE } else { EXIT_FAIL })
        }
    }
}
