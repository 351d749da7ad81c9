//! `homalg`: check, construct and evaluate Hom-algebras from JSON files.
//!
//! Exit codes: 0 when every requested check holds, 1 when one fails, 2 on
//! usage, parse or precondition errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use homalg::catalog::{self, CatalogItem, CatalogSpec};
use homalg::checkers::{classify, Class};
use homalg::constructions::{commutator_algebra, derived_algebra, is_algebra_morphism, plus_algebra, yau_twist};
use homalg::format::{parse_algebra_with, parse_morphism, serialize_algebra, serialize_morphism};
use homalg::forms;
use homalg::{AlgebraError, CheckReport, Element, HomAlgebra, Scalar};

#[derive(Parser)]
#[command(name = "homalg", version, about = "Exact Hom-algebra identity checker")]
struct Cli {
    /// Worker threads for sweeps; 0 means one per core.
    #[arg(long, global = true, env = "HOMALG_THREADS")]
    threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,

    /// Accept algebra files whose twisting map is not multiplicative.
    #[arg(long, global = true)]
    skip_mult_check: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run one or more class checks, or the full classification.
    Check {
        file: PathBuf,
        /// Class name, e.g. hom-alternative; repeatable.
        #[arg(long = "class")]
        classes: Vec<String>,
    },
    /// Build a new algebra: commutator, plus, derive:N or twist:MORPHISM-FILE.
    Construct {
        file: PathBuf,
        #[arg(long)]
        op: String,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Evaluate a form on basis vectors. A token is a basis label, a number
    /// `n` naming the label `e<n>`, or else a 0-based index.
    Eval {
        file: PathBuf,
        #[arg(long)]
        form: String,
        #[arg(allow_hyphen_values = true)]
        indices: Vec<String>,
    },
    /// Emit a catalog algebra; morphism families emit their Yau twist.
    Catalog {
        name: String,
        #[arg(long = "param", allow_hyphen_values = true)]
        params: Vec<String>,
        /// Emit the morphism itself instead of the twisted algebra.
        #[arg(long)]
        morphism: bool,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Check that a linear map is a morphism from one algebra to another.
    Morphism {
        source: PathBuf,
        target: PathBuf,
        map: PathBuf,
    },
}

/// Errors that end the run with exit code 2.
struct Usage(String);

impl From<AlgebraError> for Usage {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::NotAMorphism(report) => {
                let mut msg = String::from("linear map is not an algebra morphism");
                if let Some(w) = &report.witness {
                    msg.push_str(&format!(
                        "; {} fails at {:?} with defect {:?}",
                        w.law,
                        w.indices,
                        w.defect.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>()
                    ));
                }
                Usage(msg)
            }
            other => Usage(other.to_string()),
        }
    }
}

type Outcome = Result<bool, Usage>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Check { file, classes } => {
            let a = load(file, cli.skip_mult_check)?;
            cmd_check(&a, classes, cli.report)
        }
        Command::Construct { file, op, out } => {
            let a = load(file, cli.skip_mult_check)?;
            let built = construct(&a, op)?;
            emit(out.as_deref(), &serialize_algebra(&built))?;
            Ok(true)
        }
        Command::Eval { file, form, indices } => {
            let a = load(file, cli.skip_mult_check)?;
            cmd_eval(&a, form, indices, cli.report)
        }
        Command::Catalog {
            name,
            params,
            morphism,
            out,
        } => {
            let params = params
                .iter()
                .map(|p| p.parse::<Scalar>())
                .collect::<Result<Vec<_>, _>>()?;
            let spec = CatalogSpec::new(name.clone(), params);
            let text = match catalog::build(&spec)? {
                CatalogItem::Morphism { map, .. } if *morphism => serialize_morphism(name, &map),
                CatalogItem::Algebra(_) if *morphism => {
                    return Err(Usage(format!("{name} is an algebra, not a morphism family")))
                }
                _ => serialize_algebra(&catalog::build_algebra(&spec)?),
            };
            emit(out.as_deref(), &text)?;
            Ok(true)
        }
        Command::Morphism { source, target, map } => {
            let src = load(source, cli.skip_mult_check)?;
            let dst = load(target, cli.skip_mult_check)?;
            let m = parse_morphism(&read(map)?, src.dim())?;
            let report = is_algebra_morphism(&src, &dst, &m)?;
            print_reports(src.name(), &src, &[report], cli.report)
        }
    }
}

fn read(path: &Path) -> Result<String, Usage> {
    fs::read_to_string(path).map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path, skip_mult_check: bool) -> Result<HomAlgebra, Usage> {
    let text = read(path)?;
    parse_algebra_with(&text, skip_mult_check).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Usage> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_check(a: &HomAlgebra, classes: &[String], format: ReportFormat) -> Outcome {
    let reports = if classes.is_empty() {
        match classify(a) {
            Ok(c) => c.verdicts.into_iter().map(|(_, r)| r).collect(),
            Err(AlgebraError::Inconsistent(msg)) => {
                eprintln!("classification is inconsistent: {msg}");
                return Ok(false);
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        let mut out = Vec::new();
        for name in classes {
            let class = Class::from_name(name).ok_or_else(|| {
                let known: Vec<&str> = Class::ALL.iter().map(|c| c.name()).collect();
                Usage(format!("unknown class {name:?}; known: {}", known.join(", ")))
            })?;
            out.push(class.run(a)?);
        }
        out
    };
    print_reports(a.name(), a, &reports, format)
}

fn print_reports(name: &str, a: &HomAlgebra, reports: &[CheckReport], format: ReportFormat) -> Outcome {
    let holds = reports.iter().all(|r| r.holds);
    match format {
        ReportFormat::Json => {
            let doc = json!({
                "algebra": name,
                "multiplicative": a.is_multiplicative(),
                "holds": holds,
                "reports": reports,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("reports serialize"));
        }
        ReportFormat::Text => {
            if !a.is_multiplicative() {
                println!("warning: twisting map is not multiplicative");
            }
            for r in reports {
                println!("{}", verdict_line(a, r));
                for c in &r.cross_checks {
                    let verdict = if c.holds { "holds" } else { "fails" };
                    let agreement = if c.agrees { "agrees" } else { "DISAGREES" };
                    println!("  cross-check {}: {verdict}, {agreement}", c.identity_id);
                }
            }
        }
    }
    Ok(holds)
}

fn verdict_line(a: &HomAlgebra, r: &CheckReport) -> String {
    match &r.witness {
        None => format!("{}: holds ({} tuples)", r.identity_id, r.tuples_checked),
        Some(w) => {
            let labels: Vec<&str> = w.indices.iter().map(|&i| a.basis()[i].as_str()).collect();
            format!(
                "{}: fails ({} tuples); witness {} at ({}) indices {:?}, defect {}",
                r.identity_id,
                r.tuples_checked,
                w.law,
                labels.join(", "),
                w.indices,
                a.display(&w.defect)
            )
        }
    }
}

fn construct(a: &HomAlgebra, op: &str) -> Result<HomAlgebra, Usage> {
    if let Some(n) = op.strip_prefix("derive:") {
        let n: u32 = n.parse().map_err(|_| Usage(format!("bad derive depth {n:?}")))?;
        return Ok(derived_algebra(a, n)?);
    }
    if let Some(path) = op.strip_prefix("twist:") {
        let m = parse_morphism(&read(Path::new(path))?, a.dim())?;
        return Ok(yau_twist(a, &m)?);
    }
    match op {
        "commutator" => Ok(commutator_algebra(a)),
        "plus" => Ok(plus_algebra(a)),
        _ => Err(Usage(format!(
            "unknown op {op:?}; expected commutator, plus, derive:N or twist:FILE"
        ))),
    }
}

fn basis_index(a: &HomAlgebra, token: &str) -> Result<usize, Usage> {
    if let Some(i) = a.basis_index(token).or_else(|| a.basis_index(&format!("e{token}"))) {
        return Ok(i);
    }
    match token.parse::<usize>() {
        Ok(i) if i < a.dim() => Ok(i),
        Ok(i) => Err(Usage(format!("index {i} out of range for dimension {}", a.dim()))),
        Err(_) => Err(Usage(format!("unknown basis element {token:?}"))),
    }
}

fn cmd_eval(a: &HomAlgebra, form: &str, tokens: &[String], format: ReportFormat) -> Outcome {
    let arity = match form {
        "bracket" | "jordan" => 2,
        "associator" | "jacobian" | "cyclic" => 3,
        "f" | "F" => 4,
        "g" => 5,
        _ => {
            return Err(Usage(format!(
                "unknown form {form:?}; expected associator, jacobian, cyclic, f, F, g, bracket or jordan"
            )))
        }
    };
    if tokens.len() != arity {
        return Err(Usage(format!("{form} takes {arity} indices, got {}", tokens.len())));
    }
    let indices = tokens
        .iter()
        .map(|t| basis_index(a, t))
        .collect::<Result<Vec<_>, _>>()?;
    let v: Vec<Element> = indices.iter().map(|&i| a.e(i)).collect();
    let value = match form {
        "bracket" => forms::commutator(a, &v[0], &v[1]),
        "jordan" => forms::jordan_product(a, &v[0], &v[1]),
        "associator" => forms::hom_associator(a, &v[0], &v[1], &v[2]),
        "jacobian" => forms::hom_jacobian(a, &v[0], &v[1], &v[2]),
        "cyclic" => forms::cyclic_associator(a, &v[0], &v[1], &v[2]),
        "f" => forms::bruck_kleinfeld_f(a, &v[0], &v[1], &v[2], &v[3]),
        "F" => forms::big_f_function(a, &v[0], &v[1], &v[2], &v[3]),
        _ => forms::g_function(a, &v[0], &v[1], &v[2], &v[3], &v[4]),
    }?;
    match format {
        ReportFormat::Text => println!("{}", a.display(&value)),
        ReportFormat::Json => {
            let doc = json!({ "form": form, "indices": indices, "value": value });
            println!("{}", serde_json::to_string_pretty(&doc).expect("elements serialize"));
        }
    }
    Ok(true)
}
