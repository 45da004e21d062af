use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use jack_core::checks::{run_check, Bounds, Check, Verdict};
use jack_core::format::JsonCoeff;
use jack_core::poly::divide_by_alpha_poly;
use jack_core::recursion::{f_nonsym, MemoStore};
use jack_core::symmetric::{expand_monomial, expand_partial_sym, j_sym, Basis};
use jack_core::tableau::{f_comb_threaded, j_comb};
use jack_core::{AlphaFrac, AlphaPoly, Composition, JackError, MPoly};

mod cache;
mod output;

use cache::CacheDir;
use output::{CacheStats, CacheStatsRow, Format};

/// Exact Jack polynomials: compute, verify, and manage the memo cache.
#[derive(Parser)]
#[command(name = "jack", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for tableau sums.
    #[arg(long, global = true, env = "JACK_THREADS", default_value_t = 1)]
    threads: usize,

    /// Directory holding the persistent memo cache.
    #[arg(long, global = true, env = "JACK_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Allow sizes beyond |lambda| = 8 or n = 8.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute F, E, J or P.
    Compute(ComputeArgs),
    /// Run a verification sweep.
    Verify(VerifyArgs),
    /// Inspect or move the memo cache.
    Cache(CacheArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    #[value(name = "F")]
    F,
    #[value(name = "E")]
    E,
    #[value(name = "J")]
    J,
    #[value(name = "P")]
    P,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    /// Monomials in x.
    X,
    M,
    MTilde,
    /// Augmented partially symmetric monomials, split at --split.
    MPartial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    Recursion,
    Tableau,
}

#[derive(Args)]
struct ComputeArgs {
    kind: Kind,

    /// Comma-separated parts, e.g. 0,2,1.
    #[arg(long, value_parser = parse_lambda)]
    lambda: Composition,

    /// Variable count (defaults to the number of parts).
    #[arg(long)]
    n: Option<usize>,

    /// Output basis (default: x for F/E, m for J/P).
    #[arg(long, value_enum)]
    basis: Option<BasisArg>,

    /// Split index for m-partial (default: position of the last nonzero part).
    #[arg(long)]
    split: Option<usize>,

    #[arg(long, value_enum, default_value_t = Engine::Recursion)]
    engine: Engine,

    /// Substitute a rational value for alpha, e.g. 1/2.
    #[arg(long, value_parser = parse_rational)]
    alpha: Option<BigRational>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_parser = check_names())]
    check: String,

    #[arg(long, default_value_t = 3)]
    n_max: usize,

    #[arg(long, default_value_t = 4)]
    deg_max: u32,

    /// k values for the pairing at alpha = 1/k.
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    k_list: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CacheAction {
    Stats,
    Clear,
    Export,
    Import,
}

#[derive(Args)]
struct CacheArgs {
    action: CacheAction,

    #[arg(long)]
    path: Option<PathBuf>,

    /// Variable count to export (needed when the cache holds several).
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Cache(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Cache(_) => 3,
        }
    }
}

impl From<JackError> for CliError {
    fn from(e: JackError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn cache_err(e: JackError) -> CliError {
    CliError::Cache(e.to_string())
}

fn parse_lambda(s: &str) -> Result<Composition, String> {
    s.parse::<Composition>().map_err(|e| e.to_string())
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    s.parse::<BigRational>().map_err(|_| format!("{s:?} is not a rational number"))
}

fn check_names() -> PossibleValuesParser {
    let mut names: Vec<&'static str> = Check::ALL.iter().map(|c| c.name()).collect();
    names.push("all");
    PossibleValuesParser::new(names)
}

const DESK_LIMIT: usize = 8;

fn guard(force: bool, what: &str, value: usize) -> Result<(), CliError> {
    if value > DESK_LIMIT && !force {
        return Err(CliError::Usage(format!(
            "{what} = {value} exceeds the desk-scale limit {DESK_LIMIT}; pass --force to run anyway"
        )));
    }
    Ok(())
}

/// Coefficients that can be evaluated at a rational α.
trait Specialize: JsonCoeff {
    fn at(&self, alpha: &BigRational) -> Result<BigRational, CliError>;
}

impl Specialize for AlphaPoly {
    fn at(&self, alpha: &BigRational) -> Result<BigRational, CliError> {
        Ok(self.eval(alpha))
    }
}

impl Specialize for AlphaFrac {
    fn at(&self, alpha: &BigRational) -> Result<BigRational, CliError> {
        self.eval(alpha)
            .map_err(|_| CliError::Usage(format!("--alpha {alpha} makes a denominator vanish")))
    }
}

struct Session {
    format: Format,
    threads: usize,
    memo: MemoStore,
    cache: Option<CacheDir>,
}

impl Session {
    fn open(cli: &Cli) -> Result<Self, CliError> {
        let memo = MemoStore::new();
        let cache = match &cli.cache_dir {
            Some(dir) => {
                let c = CacheDir::new(dir).map_err(cache_err)?;
                c.load_into(&memo).map_err(cache_err)?;
                Some(c)
            }
            None => None,
        };
        Ok(Self {
            format: cli.format,
            threads: cli.threads.max(1),
            memo,
            cache,
        })
    }

    fn persist(&self) -> Result<(), CliError> {
        if let Some(c) = &self.cache {
            c.save_from(&self.memo).map_err(cache_err)?;
        }
        Ok(())
    }

    fn require_cache(&self) -> Result<&CacheDir, CliError> {
        self.cache
            .as_ref()
            .ok_or_else(|| CliError::Usage("cache commands need --cache-dir or JACK_CACHE_DIR".into()))
    }
}

fn emit_poly<C: Specialize>(
    s: &Session,
    kind: &str,
    lambda: &[u32],
    alpha: Option<&BigRational>,
    f: &MPoly<C>,
) -> Result<String, CliError> {
    Ok(match alpha {
        None => output::polynomial(kind, lambda, None, f, s.format),
        Some(a) => {
            let g = f.try_map_coeffs(|c| c.at(a).map_err(|e| JackError::Precondition(e.to_string())))?;
            output::polynomial(kind, lambda, Some(&a.to_string()), &g, s.format)
        }
    })
}

fn emit_expansion<C: Specialize>(
    s: &Session,
    lambda: &[u32],
    basis: Basis,
    split: usize,
    alpha: Option<&BigRational>,
    entries: &[(Vec<u32>, C)],
) -> Result<String, CliError> {
    Ok(match alpha {
        None => output::expansion(lambda, basis, split, entries, s.format),
        Some(a) => {
            let shown = entries
                .iter()
                .map(|(mu, c)| Ok((mu.clone(), c.at(a)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            output::expansion(lambda, basis, split, &shown, s.format)
        }
    })
}

fn expand_symmetric<C: Specialize>(
    s: &Session,
    lambda: &[u32],
    basis: BasisArg,
    alpha: Option<&BigRational>,
    f: &MPoly<C>,
) -> Result<String, CliError> {
    let exp = expand_monomial(f)?;
    match basis {
        BasisArg::M => emit_expansion(s, lambda, Basis::Monomial, 0, alpha, exp.entries()),
        BasisArg::MTilde => emit_expansion(s, lambda, Basis::Augmented, 0, alpha, &exp.augmented()?),
        _ => unreachable!("checked by caller"),
    }
}

fn compute(s: &Session, force: bool, a: &ComputeArgs) -> Result<String, CliError> {
    let given = a.lambda.n();
    let n = a.n.unwrap_or(given);
    if n < given {
        return Err(CliError::Usage(format!(
            "--n {n} is smaller than the {given} parts given in --lambda"
        )));
    }
    guard(force, "|lambda|", a.lambda.degree() as usize)?;
    guard(force, "n", n)?;
    let lambda = Composition::padded(a.lambda.parts(), n)?;
    let symmetric = matches!(a.kind, Kind::J | Kind::P);
    if symmetric && !lambda.is_partition() {
        return Err(CliError::Usage(format!(
            "--lambda {} must be a partition (weakly decreasing) for {:?}",
            a.lambda, a.kind
        )));
    }
    let basis = a.basis.unwrap_or(if symmetric { BasisArg::M } else { BasisArg::X });
    match (symmetric, basis) {
        (false, BasisArg::M | BasisArg::MTilde) => {
            return Err(CliError::Usage("--basis m and m-tilde require J or P".into()));
        }
        (true, BasisArg::MPartial) => {
            return Err(CliError::Usage("--basis m-partial requires F or E".into()));
        }
        _ => {}
    }
    if a.split.is_some() && basis != BasisArg::MPartial {
        return Err(CliError::Usage("--split only applies to --basis m-partial".into()));
    }
    let alpha = a.alpha.as_ref();
    let kind = format!("{:?}", a.kind);
    let parts = lambda.parts();

    let f_poly = || match a.engine {
        Engine::Recursion => f_nonsym(&lambda, &s.memo).as_ref().clone(),
        Engine::Tableau => f_comb_threaded(&lambda, s.threads),
    };
    let j_poly = || -> Result<MPoly<AlphaPoly>, CliError> {
        Ok(match a.engine {
            Engine::Recursion => j_sym(&lambda, n, &s.memo)?,
            Engine::Tableau => j_comb(&lambda, n)?,
        })
    };
    let partial = |f_split: usize| -> Result<usize, CliError> {
        if f_split > n {
            return Err(CliError::Usage(format!("--split {f_split} exceeds n = {n}")));
        }
        Ok(f_split)
    };
    let split = partial(a.split.unwrap_or(lambda.length()))?;

    let out = match (a.kind, basis) {
        (Kind::F, BasisArg::X) => emit_poly(s, &kind, parts, alpha, &f_poly())?,
        (Kind::F, _) => {
            let exp = expand_partial_sym(&f_poly(), split)?;
            emit_expansion(s, parts, Basis::Partial, split, alpha, exp.entries())?
        }
        (Kind::E, b) => {
            let e = divide_by_alpha_poly(&f_poly(), &lambda.upper_hook_product())?;
            if b == BasisArg::X {
                emit_poly(s, &kind, parts, alpha, &e)?
            } else {
                let exp = expand_partial_sym(&e, split)?;
                emit_expansion(s, parts, Basis::Partial, split, alpha, exp.entries())?
            }
        }
        (Kind::J, b) => {
            let j = j_poly()?;
            let label = lambda.nonzero_parts();
            if b == BasisArg::X {
                emit_poly(s, &kind, &label, alpha, &j)?
            } else {
                expand_symmetric(s, &label, b, alpha, &j)?
            }
        }
        (Kind::P, b) => {
            let p = divide_by_alpha_poly(&j_poly()?, &lambda.lower_hook_product())?;
            let label = lambda.nonzero_parts();
            if b == BasisArg::X {
                emit_poly(s, &kind, &label, alpha, &p)?
            } else {
                expand_symmetric(s, &label, b, alpha, &p)?
            }
        }
    };
    s.persist()?;
    Ok(out)
}

fn verify(s: &Session, force: bool, a: &VerifyArgs) -> Result<(String, bool), CliError> {
    guard(force, "--n-max", a.n_max)?;
    guard(force, "--deg-max", a.deg_max as usize)?;
    if a.k_list.contains(&0) {
        return Err(CliError::Usage("--k-list entries must be positive".into()));
    }
    let checks: Vec<Check> = if a.check == "all" {
        Check::ALL.to_vec()
    } else {
        vec![a.check.parse()?]
    };
    let bounds = Bounds {
        n_max: a.n_max,
        deg_max: a.deg_max,
        k_list: a.k_list.clone(),
        threads: s.threads,
    };
    let verdicts = checks
        .into_iter()
        .map(|c| run_check(c, &bounds))
        .collect::<Result<Vec<Verdict>, _>>()?;
    let pass = verdicts.iter().all(|v| v.pass);
    Ok((output::verdicts(&verdicts, s.format), pass))
}

fn cache_cmd(s: &Session, a: &CacheArgs) -> Result<String, CliError> {
    let dir = s.require_cache()?;
    let path = || {
        a.path
            .clone()
            .ok_or_else(|| CliError::Usage(format!("cache {:?} needs --path", a.action).to_lowercase()))
    };
    Ok(match a.action {
        CacheAction::Stats => {
            let by_n: Vec<CacheStatsRow> = s
                .memo
                .stats_by_n()
                .into_iter()
                .map(|(n, entries, terms)| CacheStatsRow { n, entries, terms })
                .collect();
            let stats = CacheStats {
                entries: by_n.iter().map(|r| r.entries).sum(),
                terms: by_n.iter().map(|r| r.terms).sum(),
                by_n,
            };
            output::cache_stats(&stats, s.format)
        }
        CacheAction::Clear => {
            let removed = dir.clear().map_err(cache_err)?;
            output::report("removed", removed, format!("removed {removed} cache files"), s.format)
        }
        CacheAction::Export => {
            let path = path()?;
            let counts = s.memo.variable_counts();
            let n = match (a.n, counts.as_slice()) {
                (Some(n), _) => n,
                (None, [only]) => *only,
                (None, []) => return Err(CliError::Usage("the cache is empty; pass --n to export".into())),
                (None, _) => {
                    return Err(CliError::Usage(format!(
                        "the cache holds n in {counts:?}; choose one with --n"
                    )))
                }
            };
            s.memo.save(&path, n).map_err(cache_err)?;
            let exported = s.memo.stats_by_n().into_iter().find(|r| r.0 == n).map_or(0, |r| r.1);
            output::report(
                "exported",
                exported,
                format!("exported {exported} entries (n={n}) to {}", path.display()),
                s.format,
            )
        }
        CacheAction::Import => {
            let path = path()?;
            let imported = s.memo.load(&path).map_err(cache_err)?;
            s.persist()?;
            output::report(
                "imported",
                imported,
                format!("imported {imported} entries from {}", path.display()),
                s.format,
            )
        }
    })
}

fn run(cli: &Cli) -> Result<(String, bool), CliError> {
    let session = Session::open(cli)?;
    match &cli.command {
        Command::Compute(a) => compute(&session, cli.force, a).map(|s| (s, true)),
        Command::Verify(a) => verify(&session, cli.force, a),
        Command::Cache(a) => cache_cmd(&session, a).map(|s| (s, true)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, pass)) => {
            println!("{text}");
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
