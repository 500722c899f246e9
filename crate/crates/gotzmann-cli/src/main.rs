use clap::{Parser, Subcommand};

mod commands;
mod selftest;

/// Exit codes: 0 = computed, 1 = negative verdict, 2 = input error.
const EXIT_NEGATIVE: i32 = 1;
const EXIT_INPUT: i32 = 2;

#[derive(Parser)]
#[command(name = "gotzmann", version, about = "Exact Hilbert-function calculus: expansions, growth bounds, Gotzmann invariants, classifiers, and a monomial-ideal oracle", long_about = None)]
struct Cli {
    /// Pretty-print JSON output with this indent width.
    #[arg(long, global = true)]
    json_indent: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// d-binomial expansion of c: k-sequence and Macaulay difference set.
    Expand { c: String, d: u32 },
    /// Growth bounds: Macaulay's upper bound or Green's lower restriction bound.
    Bound {
        #[arg(value_parser = ["upper", "lower"])]
        kind: String,
        c: String,
        d: u32,
    },
    /// Operations on a numerical polynomial (JSON file).
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Operations on Hilbert-function data (JSON file).
    #[command(subcommand)]
    Hf(HfCommand),
    /// Decision procedures.
    #[command(subcommand)]
    Classify(ClassifyCommand),
    /// Monomial-ideal oracle.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Run every golden example and report pass/fail.
    Selftest,
}

#[derive(Subcommand)]
enum PolyCommand {
    /// Gotzmann profile, hyperplane-section tower, and genus cross-checks.
    Analyze { poly: String },
}

#[derive(Subcommand)]
enum HfCommand {
    /// Growth report with the invariants G and (for saturated data) M.
    Analyze { spec: String },
}

#[derive(Subcommand)]
enum ClassifyCommand {
    /// Necessary conditions on the Hilbert polynomial of a nondegenerate
    /// reduced equidimensional subscheme of codimension >= 2.
    Stanley { poly: String },
    /// Uniform-position obstruction test on an h-vector.
    Upp {
        hvec: String,
        #[arg(long)]
        ambient: u32,
    },
    /// The dichotomy G = deg or G = M for saturated reduced equidimensional data.
    Mg { spec: String },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Lex-segment ideal realizing an admissible Hilbert function.
    Lex { hf: String },
    /// Hilbert function of a monomial ideal at one degree.
    Hilbert {
        ideal: String,
        #[arg(long)]
        degree: u32,
    },
    /// Full verification suite: Macaulay, Green, persistence, saturation formula.
    Verify {
        ideal: String,
        #[arg(long)]
        horizon: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    let indent = cli.json_indent;
    // Library invariants proven under caller-asserted preconditions (for
    // example "this data is saturated") are enforced with assertions; input
    // that lies about a precondition trips them. Surface that as an input
    // error instead of an abort.
    std::panic::set_hook(Box::new(|_| {}));
    let outcome = std::panic::catch_unwind(|| run_command(cli.command))
        .unwrap_or_else(|payload| Err(panic_message(payload)));
    match outcome {
        Ok(out) => {
            print_json(&out.json, indent);
            if let Some(summary) = out.summary {
                eprintln!("{}", summary);
            }
            std::process::exit(if out.negative { EXIT_NEGATIVE } else { 0 });
        }
        Err(err) => {
            let obj = serde_json::json!({ "error": err });
            print_json(&obj, indent);
            eprintln!("error: {}", err);
            std::process::exit(EXIT_INPUT);
        }
    }
}

fn run_command(command: Command) -> Result<commands::Outcome, String> {
    match command {
        Command::Expand { c, d } => commands::expand(&c, d),
        Command::Bound { kind, c, d } => commands::bound(&kind, &c, d),
        Command::Poly(PolyCommand::Analyze { poly }) => commands::poly_analyze(&poly),
        Command::Hf(HfCommand::Analyze { spec }) => commands::hf_analyze(&spec),
        Command::Classify(ClassifyCommand::Stanley { poly }) => commands::classify_stanley(&poly),
        Command::Classify(ClassifyCommand::Upp { hvec, ambient }) => {
            commands::classify_upp(&hvec, ambient)
        }
        Command::Classify(ClassifyCommand::Mg { spec }) => commands::classify_mg(&spec),
        Command::Oracle(OracleCommand::Lex { hf }) => commands::oracle_lex(&hf),
        Command::Oracle(OracleCommand::Hilbert { ideal, degree }) => {
            commands::oracle_hilbert(&ideal, degree)
        }
        Command::Oracle(OracleCommand::Verify {
            ideal,
            horizon,
            seed,
        }) => commands::oracle_verify(&ideal, horizon, seed),
        Command::Selftest => selftest::run(),
    }
}

fn panic_message(payload: Box<dyn std::any::Any + Send>) -> String {
    let detail = if let Some(s) = payload.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        "unexpected internal failure".to_string()
    };
    format!("inconsistent input: {}", detail)
}

fn print_json(value: &serde_json::Value, indent: Option<usize>) {
    let rendered = match indent {
        None | Some(0) => value.to_string(),
        Some(width) => {
            let indent_bytes = vec![b' '; width];
            let mut buf = Vec::new();
            let formatter = serde_json::ser::PrettyFormatter::with_indent(&indent_bytes);
            let mut ser = serde_json::Serializer::with_formatter(&mut buf, formatter);
            serde::Serialize::serialize(value, &mut ser).expect("JSON serialization");
            String::from_utf8(buf).expect("JSON is UTF-8")
        }
    };
    println!("{}", rendered);
}
