//! `frobmap`: compute Frobenius-map ideal data from the command line.
//!
//! Exit status: 0 on a completed run (whatever the verdicts), 1 on usage or
//! input errors, 2 when the computation itself failed (a partial report is still
//! written).

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use frobenius_core::frobenius::{FrobeniusLadder, Ladder};
use frobenius_core::problem::{parse_problem_with, Preset, ProblemFile};
use frobenius_core::report::{render_report, CrossCheck, Format, ProblemEcho, Report};
use frobenius_core::{Engine, Error, FrobeniusConfig, Ideal, LMethod, Limits, Path, Polynomial};

#[derive(Parser, Debug)]
#[command(name = "frobmap", version, about = "Frobenius-map ideal data over GF(p)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the finite-generation ladder for levels 1..=e_max.
    Check(CheckArgs),
    /// Run a single ideal operation.
    Op(OpArgs),
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Text => Format::Text,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum PresetArg {
    PaperMonomial,
    PaperDeterminantal,
}

impl From<PresetArg> for Preset {
    fn from(p: PresetArg) -> Preset {
        match p {
            PresetArg::PaperMonomial => Preset::PaperMonomial,
            PresetArg::PaperDeterminantal => Preset::PaperDeterminantal,
        }
    }
}

#[derive(Args, Debug)]
struct Source {
    /// Built-in problem.
    #[arg(long, value_enum, conflicts_with = "input")]
    preset: Option<PresetArg>,
    /// Problem file.
    #[arg(long)]
    input: Option<std::path::PathBuf>,
    /// Characteristic; overrides the preset default or the file's `p`.
    #[arg(long)]
    p: Option<u64>,
    /// Abort a Gröbner run whose basis grows beyond this many elements.
    #[arg(long, default_value_t = Limits::default().max_basis_size)]
    max_basis: usize,
    /// Abort a Gröbner run after this many S-pair reductions.
    #[arg(long, default_value_t = Limits::default().max_reductions)]
    max_reductions: usize,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    source: Source,
    /// Highest level (default: the file's `e_max`, else 3, or 2 for the determinantal preset).
    #[arg(long)]
    e_max: Option<u32>,
    /// Report format.
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Assemble L_e by enumerating compositions instead of the recursion.
    #[arg(long = "brute-force-L")]
    brute_force_l: bool,
    /// For monomial ideals, also run the Gröbner path and compare.
    #[arg(long)]
    both_paths: bool,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum OpKind {
    Colon,
    Intersect,
    Product,
    Bracket,
    Gb,
    Member,
}

#[derive(Args, Debug)]
struct OpArgs {
    #[arg(value_enum)]
    op: OpKind,
    #[command(flatten)]
    source: Source,
    /// Bracket exponent (overrides `e` in the file).
    #[arg(long)]
    e: Option<u32>,
    /// Use the Gröbner engine even for monomial input.
    #[arg(long)]
    groebner: bool,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

enum Failure {
    Usage(String),
    Computation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_computational() {
            Failure::Computation(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn load(source: &Source) -> Result<ProblemFile, Failure> {
    let limits = Limits {
        max_basis_size: source.max_basis,
        max_reductions: source.max_reductions,
    };
    let problem = match (&source.preset, &source.input) {
        (Some(preset), None) => ProblemFile::from_preset((*preset).into(), source.p.unwrap_or(2))?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            parse_problem_with(&text, source.p)?
        }
        _ => return Err(Failure::Usage("exactly one of --preset or --input is required".into())),
    };
    Ok(problem.with_limits(limits))
}

fn ladders_agree(a: &FrobeniusLadder, b: &FrobeniusLadder, e: u32) -> Result<bool, Error> {
    let (Some(x), Some(y)) = (a.level(e), b.level(e)) else {
        return Ok(false);
    };
    Ok(x.k.equals_with(&y.k, Engine::Groebner)?
        && x.l.equals_with(&y.l, Engine::Groebner)?
        && x.contained_raw == y.contained_raw
        && x.contained_mod_bracket == y.contained_mod_bracket
        && x.witnesses == y.witnesses)
}

fn check(args: &CheckArgs) -> Result<(String, bool), Failure> {
    let problem = load(&args.source)?;
    let e_max = args
        .e_max
        .or(problem.e_max)
        .unwrap_or_else(|| problem.preset.map_or(3, Preset::default_e_max));
    let method = if args.brute_force_l {
        LMethod::BruteForce
    } else {
        LMethod::Recursion
    };
    let ideal = Ideal::new(&problem.ring, problem.generators.clone())?;
    let config = FrobeniusConfig::new(ideal, e_max)?;
    let ladder = Ladder::new(config.clone()).with_method(method);
    let result = ladder.run();

    let echo = ProblemEcho::new(&problem, e_max, method, Engine::Auto);
    let mut report = Report::new(echo, &result);

    if args.both_paths && ladder.path() == Path::Monomial {
        let general = Ladder::new(config).with_method(method).with_engine(Engine::Groebner).run();
        for level in report.levels.iter_mut().filter(|l| l.error.is_none()) {
            let failure = general.failures.iter().find(|f| f.e == level.e);
            level.cross_check = Some(match failure {
                Some(f) => CrossCheck {
                    path: Path::Groebner,
                    agrees: false,
                    error: Some(f.error.to_string()),
                },
                None => match ladders_agree(&result, &general, level.e) {
                    Ok(agrees) => CrossCheck {
                        path: Path::Groebner,
                        agrees,
                        error: None,
                    },
                    Err(e) => CrossCheck {
                        path: Path::Groebner,
                        agrees: false,
                        error: Some(e.to_string()),
                    },
                },
            });
        }
    }
    let text = render_report(&report, args.format.into())?;
    Ok((text, report.has_errors()))
}

fn render_ideal(op: &str, path: Path, gens: &[Polynomial], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => gens.iter().map(|g| format!("{g}\n")).collect(),
        OutputFormat::Json => {
            let list: Vec<String> = gens.iter().map(|g| format!("{:?}", g.to_string())).collect();
            format!(
                "{{\n  \"op\": \"{op}\",\n  \"path\": \"{path}\",\n  \"generators\": [{}]\n}}\n",
                list.join(", ")
            )
        }
    }
}

fn run_op(args: &OpArgs) -> Result<String, Failure> {
    let problem = load(&args.source)?;
    let engine = if args.groebner { Engine::Groebner } else { Engine::Auto };
    let ring = &problem.ring;
    let first = Ideal::new(ring, problem.generators.clone())?;
    let second = || -> Result<Ideal, Failure> {
        let gens = problem
            .second
            .clone()
            .ok_or_else(|| Failure::Usage("this operation needs `gens2` in the input".into()))?;
        Ok(Ideal::new(ring, gens)?)
    };
    let (name, result, path) = match args.op {
        OpKind::Colon => {
            let j = second()?;
            ("colon", first.colon_with(&j, engine)?, first.path(&[&j], engine))
        }
        OpKind::Intersect => {
            let j = second()?;
            ("intersect", first.intersection_with(&j, engine)?, first.path(&[&j], engine))
        }
        OpKind::Product => {
            let j = second()?;
            ("product", first.product_with(&j, engine)?, first.path(&[&j], engine))
        }
        OpKind::Bracket => {
            let e = args
                .e
                .or(problem.e)
                .ok_or_else(|| Failure::Usage("bracket needs --e or `e` in the input".into()))?;
            ("bracket", first.bracket_power(e)?, first.path(&[], engine))
        }
        OpKind::Gb => ("gb", first.clone(), first.path(&[], engine)),
        OpKind::Member => {
            let f = problem
                .element
                .clone()
                .ok_or_else(|| Failure::Usage("member needs `element` in the input".into()))?;
            let member = first.contains_element_with(&f, engine)?;
            return Ok(match args.format {
                OutputFormat::Text => format!("{member}\n"),
                OutputFormat::Json => format!(
                    "{{\n  \"op\": \"member\",\n  \"path\": \"{}\",\n  \"element\": {:?},\n  \"member\": {member}\n}}\n",
                    first.path(&[], engine),
                    f.to_string()
                ),
            });
        }
    };
    let gens = match (path, args.op) {
        (Path::Groebner, OpKind::Gb) => result.basis()?.elements().to_vec(),
        (Path::Groebner, _) => result.generators().to_vec(),
        (Path::Monomial, _) => result.canonical_generators()?,
    };
    Ok(render_ideal(name, path, &gens, args.format))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match &cli.command {
        Command::Check(args) => check(args).map(|(text, partial)| {
            print!("{text}");
            partial
        }),
        Command::Op(args) => run_op(args).map(|text| {
            print!("{text}");
            false
        }),
    };
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Computation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
