//! `gysin`: exact pushforward calculator for isotropic Grassmann and flag
//! bundles.
//!
//! Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 2 invalid input (inadmissible partition, parse error, box violation),
//! 3 internal consistency failure (route disagreement, under-truncation,
//! odd coefficient while halving).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gysin_cli::output::{self, CheckJson, CheckSuiteJson, ShapeJson};
use gysin_cli::{checks, parse};
use gysin_core::chern_models::{ChernModel, ModelVariant};
use gysin_core::gysin::{self, GysinResult, InputClass, Route};
use gysin_core::partitions::{
    self, AmbientShape, FormType, OrdinaryPartition, StrictPartition,
};
use gysin_core::Error as CoreError;

#[derive(Parser)]
#[command(
    name = "gysin",
    version,
    about = "Exact Gysin pushforwards for isotropic Grassmann and flag bundles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all admissible flag indices of a shape
    Enumerate(EnumerateArgs),
    /// Delta vector, rank and fiber dimension of one index
    Profile(ProfileArgs),
    /// Covers from below in the admissible subposet
    Predecessors(PredecessorsArgs),
    /// Tower profile of the fibration between nested indices
    Fibration(FibrationArgs),
    /// Evaluate a pushforward
    Gysin(GysinArgs),
    /// Run the built-in verification suites
    Check(CheckArgs),
}

#[derive(Args)]
struct ShapeArgs {
    /// Form type: C (symplectic) or D (even orthogonal)
    #[arg(long = "type", value_parser = parse_form_type)]
    form_type: FormType,
    /// Half-rank of the ambient bundle
    #[arg(long)]
    n: u32,
    /// Number of isotropic steps
    #[arg(long)]
    d: u32,
}

fn parse_form_type(s: &str) -> Result<FormType, String> {
    match s {
        "C" | "c" => Ok(FormType::Symplectic),
        "D" | "d" => Ok(FormType::EvenOrthogonal),
        "B" | "b" => Err("not implemented: odd orthogonal".to_string()),
        other => Err(format!("expected C or D, got '{other}'")),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Trivial,
    Free,
    Rooted,
}

impl ModelArg {
    fn variant(self) -> ModelVariant {
        match self {
            ModelArg::Trivial => ModelVariant::Trivial,
            ModelArg::Free => ModelVariant::FreeSegre,
            ModelArg::Rooted => ModelVariant::RootedFlag,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Closed,
    Tower,
    Both,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
}

#[derive(Args)]
struct ProfileArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// Flag index, comma-separated descending (e.g. "6,5,3")
    #[arg(long)]
    mu: Option<String>,
    /// Schubert index; trailing zeros may be omitted
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
}

#[derive(Args)]
struct PredecessorsArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long)]
    mu: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
}

#[derive(Args)]
struct FibrationArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// The smaller index
    #[arg(long)]
    nu: String,
    /// The larger index
    #[arg(long)]
    mu: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
}

#[derive(Args)]
struct GysinArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// Flag index, comma-separated descending
    #[arg(long)]
    mu: Option<String>,
    /// Schubert index; routed through its complement
    #[arg(long)]
    lambda: Option<String>,
    /// Class expression in t1..td (operators + - * ^, shorthands h and eK)
    #[arg(long)]
    f: String,
    #[arg(long, value_enum, default_value_t = ModelArg::Free)]
    model: ModelArg,
    #[arg(long, value_enum, default_value_t = RouteArg::Closed)]
    route: RouteArg,
    /// Halve all coefficients (even-orthogonal with d = n only)
    #[arg(long)]
    single_component: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
}

enum AppError {
    /// Exit code 2.
    Input(String),
    /// Exit code 3.
    Internal(String),
}

impl From<CoreError> for AppError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::UnderTruncated { .. } | CoreError::OddCoefficient => {
                AppError::Internal(e.to_string())
            }
            _ => AppError::Input(e.to_string()),
        }
    }
}

impl From<parse::ParseError> for AppError {
    fn from(e: parse::ParseError) -> Self {
        AppError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Input(m)) => {
            eprintln!("{m}");
            ExitCode::from(2)
        }
        Err(AppError::Internal(m)) => {
            eprintln!("{m}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Enumerate(args) => enumerate(args),
        Command::Profile(args) => profile(args),
        Command::Predecessors(args) => predecessors(args),
        Command::Fibration(args) => fibration(args),
        Command::Gysin(args) => gysin_cmd(args),
        Command::Check(args) => check(args),
    }
}

fn shape_of(args: &ShapeArgs) -> Result<AmbientShape, AppError> {
    Ok(AmbientShape::new(args.form_type, args.n, args.d)?)
}

fn parse_parts(s: &str) -> Result<Vec<u32>, AppError> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<Vec<u32>, _>>()
        .map_err(|_| AppError::Input(format!("invalid partition '{s}': expected comma-separated nonnegative integers")))
}

fn parse_mu(s: &str) -> Result<StrictPartition, AppError> {
    Ok(StrictPartition::new(parse_parts(s)?)?)
}

fn parse_lambda(s: &str) -> Result<OrdinaryPartition, AppError> {
    Ok(OrdinaryPartition::new(parse_parts(s)?)?)
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn enumerate(args: EnumerateArgs) -> Result<(), AppError> {
    let shape = shape_of(&args.shape)?;
    let entries: Vec<(StrictPartition, Vec<u32>, u32, u32)> =
        partitions::enumerate_admissible(&shape)
            .into_iter()
            .map(|mu| {
                let p = partitions::profile(&mu, &shape).expect("enumerated index is valid");
                let rank = partitions::rank(&mu, &shape).expect("enumerated index is valid");
                (mu, p.delta, rank, p.fiber_dim)
            })
            .collect();
    match args.output {
        OutputFormat::Json => {
            let json = output::EnumerateJson {
                shape: ShapeJson::from(&shape),
                count: entries.len(),
                partitions: entries
                    .iter()
                    .map(|(mu, delta, rank, fiber_dim)| output::EnumerateEntryJson {
                        mu: mu.parts().to_vec(),
                        delta: delta.clone(),
                        rank: *rank,
                        fiber_dim: *fiber_dim,
                    })
                    .collect(),
            };
            print_json(&json);
        }
        OutputFormat::Text => print!("{}", output::enumerate_text(&shape, &entries)),
        OutputFormat::Latex => print!("{}", output::enumerate_latex(&entries)),
    }
    Ok(())
}

fn resolve_index(
    shape: &AmbientShape,
    mu: &Option<String>,
    lambda: &Option<String>,
) -> Result<(StrictPartition, Option<OrdinaryPartition>), AppError> {
    match (mu, lambda) {
        (Some(m), None) => Ok((parse_mu(m)?, None)),
        (None, Some(l)) => {
            let lambda = parse_lambda(l)?;
            let mu = partitions::complement(&lambda, shape)?;
            Ok((mu, Some(lambda)))
        }
        _ => Err(AppError::Input(
            "exactly one of --mu and --lambda must be given".to_string(),
        )),
    }
}

fn profile(args: ProfileArgs) -> Result<(), AppError> {
    let shape = shape_of(&args.shape)?;
    let (mu, _) = resolve_index(&shape, &args.mu, &args.lambda)?;
    let p = partitions::profile(&mu, &shape)?;
    let rank = partitions::rank(&mu, &shape)?;
    let lambda = partitions::schubert_index(&mu, &shape)?;
    match args.output {
        OutputFormat::Json => {
            let json = output::ProfileJson {
                shape: ShapeJson::from(&shape),
                mu: p.mu.parts().to_vec(),
                lambda: lambda.parts().to_vec(),
                delta: p.delta.clone(),
                rank,
                fiber_dim: p.fiber_dim,
            };
            print_json(&json);
        }
        OutputFormat::Text => print!("{}", output::profile_text(&shape, &p, &lambda, rank)),
        OutputFormat::Latex => print!("{}", output::profile_latex(&p, &lambda, rank)),
    }
    Ok(())
}

fn predecessors(args: PredecessorsArgs) -> Result<(), AppError> {
    let shape = shape_of(&args.shape)?;
    let mu = parse_mu(&args.mu)?;
    let preds = partitions::direct_predecessors(&mu, &shape)?;
    match args.output {
        OutputFormat::Json => {
            let json = output::PredecessorsJson {
                shape: ShapeJson::from(&shape),
                mu: mu.parts().to_vec(),
                predecessors: preds.iter().map(|p| p.parts().to_vec()).collect(),
            };
            print_json(&json);
        }
        OutputFormat::Text => print!("{}", output::predecessors_text(&mu, &preds)),
        OutputFormat::Latex => print!("{}", output::predecessors_latex(&mu, &preds)),
    }
    Ok(())
}

fn fibration(args: FibrationArgs) -> Result<(), AppError> {
    let shape = shape_of(&args.shape)?;
    let nu = parse_mu(&args.nu)?;
    let mu = parse_mu(&args.mu)?;
    let p = partitions::fibration_profile(&nu, &mu, &shape)?;
    let gap =
        partitions::rank(&mu, &shape)? - partitions::rank(&nu, &shape)?;
    match args.output {
        OutputFormat::Json => {
            let json = output::FibrationJson {
                shape: ShapeJson::from(&shape),
                nu: nu.parts().to_vec(),
                mu: mu.parts().to_vec(),
                k: p.k.clone(),
                rel_dim: p.rel_dim,
                rank_gap: gap,
            };
            print_json(&json);
        }
        OutputFormat::Text => print!("{}", output::fibration_text(&nu, &mu, &p, gap)),
        OutputFormat::Latex => print!("{}", output::fibration_latex(&p)),
    }
    Ok(())
}

fn evaluate(
    model: &ChernModel,
    mu: &StrictPartition,
    lambda: &Option<OrdinaryPartition>,
    f: &InputClass,
    route: Route,
) -> Result<GysinResult, AppError> {
    let result = match lambda {
        Some(l) => gysin::gysin_schubert(model, l, f, route)?,
        None => match route {
            Route::Closed => gysin::gysin_closed(model, mu, f)?,
            Route::Tower => gysin::gysin_tower(model, mu, f)?,
        },
    };
    Ok(result)
}

fn gysin_cmd(args: GysinArgs) -> Result<(), AppError> {
    let shape = shape_of(&args.shape)?;
    if args.single_component
        && (shape.form_type() != FormType::EvenOrthogonal || shape.d() != shape.n())
    {
        return Err(AppError::Input(
            "--single-component requires --type D with d = n".to_string(),
        ));
    }
    let (mu, lambda) = resolve_index(&shape, &args.mu, &args.lambda)?;
    let delta = partitions::delta(&mu, &shape)?;
    let f = parse::parse_class_expression(&args.f, shape.d() as usize)?;
    let model = ChernModel::new(args.model.variant(), shape);

    let (result, route_tag, routes_agree) = match args.route {
        RouteArg::Closed => (evaluate(&model, &mu, &lambda, &f, Route::Closed)?, "closed", None),
        RouteArg::Tower => (evaluate(&model, &mu, &lambda, &f, Route::Tower)?, "tower", None),
        RouteArg::Both => {
            let closed = evaluate(&model, &mu, &lambda, &f, Route::Closed)?;
            let tower = evaluate(&model, &mu, &lambda, &f, Route::Tower)?;
            let agree = closed.value == tower.value;
            (closed, "both", Some(agree))
        }
    };

    let result = if args.single_component {
        gysin::halve_components(&result)?
    } else {
        result
    };

    match args.output {
        OutputFormat::Json => {
            let mut json = output::gysin_json(&result, &delta, &args.f, route_tag);
            json.routes_agree = routes_agree;
            print_json(&json);
        }
        OutputFormat::Text => {
            print!("{}", output::gysin_text(&result, &delta, &args.f, route_tag));
            if let Some(agree) = routes_agree {
                println!("routes_agree: {agree}");
            }
        }
        OutputFormat::Latex => print!("{}", output::gysin_latex(&result, &f)),
    }

    if routes_agree == Some(false) {
        return Err(AppError::Internal(format!(
            "route disagreement: closed and tower differ for mu={}",
            result.mu
        )));
    }
    Ok(())
}

fn check(args: CheckArgs) -> Result<(), AppError> {
    let outcomes = checks::run_all();
    let passed = outcomes.iter().filter(|o| o.ok()).count();
    let failed = outcomes.len() - passed;
    match args.output {
        OutputFormat::Json => {
            let json = CheckJson {
                passed,
                failed,
                suites: outcomes
                    .iter()
                    .map(|o| CheckSuiteJson {
                        name: o.name.to_string(),
                        cases: o.cases,
                        ok: o.ok(),
                        detail: o.error.clone(),
                    })
                    .collect(),
            };
            print_json(&json);
        }
        OutputFormat::Text => {
            for o in &outcomes {
                match &o.error {
                    None => println!("ok {} ({} cases)", o.name, o.cases),
                    Some(e) => println!("FAIL {}: {e}", o.name),
                }
            }
            println!("{passed} passed, {failed} failed");
        }
        OutputFormat::Latex => {
            return Err(AppError::Input(
                "latex output is not supported for check".to_string(),
            ));
        }
    }
    if failed > 0 {
        return Err(AppError::Internal(format!(
            "{failed} verification suite(s) failed"
        )));
    }
    Ok(())
}
