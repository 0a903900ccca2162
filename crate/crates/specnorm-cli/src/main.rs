use specnorm_cli::args::Args;
use specnorm_cli::circle::{circle_samples, table_to_csv, table_to_svg, Method};
use specnorm_cli::io::{read_doubly_stochastic_csv, read_matrix_file};
use specnorm_cli::verify::{run_verify, Suite};
use specnorm_cli::{CliError, Result};

use specnorm_core::distributions::Distribution;
use specnorm_core::extension::norm_extended;
use specnorm_core::linalg::HermitianMatrix;
use specnorm_core::majorization::birkhoff_decompose;
use specnorm_core::norms::{continuity_scan, norm_exact_partition, norm_mc, NormSpec};

const USAGE: &str = "specnorm - random-vector matrix norms

Usage:
  specnorm norm --dist <spec> --d <real> --matrix <file> [--method exact|mc]
                [--samples N] [--seed S]
  specnorm circle --dist <spec> --d <real> --resolution R --method exact|mc
                  --out <csv> [--svg <file>] [--samples N] [--seed S]
  specnorm verify --suite <axioms|engines|extension|majorization|figures|continuity>
                  [--seed S]
  specnorm decompose --doubly-stochastic <csv>
  specnorm continuity --dist <spec> --matrix <file> --dmin <a> --dmax <b>
                      --steps <k> [--samples N] [--seed S] --out <csv>

Distributions: normal:mu=0,sigma=1  exp  bernoulli:q=0.5  pareto:alpha=4,xm=1
Matrix files: first line n, then n rows of n entries like 1.5-0.25i
Exit codes: 0 ok, 1 verification failure, 2 usage/parse error, 3 domain error";

fn main() {
    let tokens: Vec<String> = std::env::args().skip(1).collect();
    if tokens.is_empty() {
        eprintln!("{USAGE}");
        std::process::exit(2);
    }
    if matches!(tokens[0].as_str(), "help" | "--help" | "-h") {
        println!("{USAGE}");
        return;
    }
    match run(&tokens) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("specnorm: {e}");
            std::process::exit(e.exit_code());
        }
    }
}

fn run(tokens: &[String]) -> Result<i32> {
    let args = Args::parse(tokens)?;
    let command = args
        .positional()
        .first()
        .ok_or_else(|| CliError::Usage("missing subcommand".into()))?;
    if args.positional().len() > 1 {
        return Err(CliError::Usage(format!(
            "unexpected argument `{}`",
            args.positional()[1]
        )));
    }
    match command.as_str() {
        "norm" => cmd_norm(&args),
        "circle" => cmd_circle(&args),
        "verify" => cmd_verify(&args),
        "decompose" => cmd_decompose(&args),
        "continuity" => cmd_continuity(&args),
        other => Err(CliError::Usage(format!("unknown subcommand `{other}`"))),
    }
}

fn cmd_norm(args: &Args) -> Result<i32> {
    args.reject_unknown(&["dist", "d", "matrix", "method", "samples", "seed"])?;
    let dist = Distribution::parse_spec(args.require("dist")?)?;
    let d: f64 = args.parse_value("d")?;
    let matrix = read_matrix_file(args.require("matrix")?)?;
    let samples: u64 = args.parse_or("samples", 1_000_000)?;
    let seed: u64 = args.parse_or("seed", 1)?;
    let is_even = d >= 2.0 && d.fract() == 0.0 && (d as u64).is_multiple_of(2);
    let method: Method = match args.get("method") {
        Some(m) => m.parse()?,
        None if is_even => Method::Exact,
        None => Method::Mc,
    };
    match method {
        Method::Exact => {
            if !is_even {
                return Err(CliError::Domain(specnorm_core::Error::OddExponent { d }));
            }
            let value = match HermitianMatrix::new(matrix.clone()) {
                Ok(a) => {
                    let spec = NormSpec::new(dist, d)?;
                    norm_exact_partition(&a, &spec)?
                }
                Err(_) => norm_extended(&matrix, &dist, d as u32)?,
            };
            println!("{value}");
        }
        Method::Mc => {
            let a = HermitianMatrix::new(matrix)?;
            let spec = NormSpec::new(dist, d)?;
            let est = norm_mc(a.eigenvalues()?, &spec, samples, seed)?;
            println!("{} {}", est.value, est.stderr);
        }
    }
    Ok(0)
}

fn cmd_circle(args: &Args) -> Result<i32> {
    args.reject_unknown(&["dist", "d", "resolution", "method", "out", "svg", "samples", "seed"])?;
    let dist = Distribution::parse_spec(args.require("dist")?)?;
    let d: f64 = args.parse_value("d")?;
    let resolution: usize = args.parse_value("resolution")?;
    let method: Method = args.require("method")?.parse()?;
    let samples: u64 = args.parse_or("samples", 1_000_000)?;
    let seed: u64 = args.parse_or("seed", 1)?;
    let out = args.require("out")?;
    let table = circle_samples(&dist, d, resolution, method, samples, seed)?;
    std::fs::write(out, table_to_csv(&table))?;
    if let Some(svg_path) = args.get("svg") {
        std::fs::write(svg_path, table_to_svg(&table))?;
    }
    Ok(0)
}

fn cmd_verify(args: &Args) -> Result<i32> {
    args.reject_unknown(&["suite", "seed"])?;
    let suite: Suite = args.require("suite")?.parse()?;
    let seed: u64 = args.parse_or("seed", 1)?;
    let report = run_verify(suite, seed)?;
    print!("{}", report.render());
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_decompose(args: &Args) -> Result<i32> {
    args.reject_unknown(&["doubly-stochastic"])?;
    let d = read_doubly_stochastic_csv(args.require("doubly-stochastic")?)?;
    let decomposition = birkhoff_decompose(&d)?;
    println!("coefficient,permutation");
    for term in &decomposition.terms {
        let perm: Vec<String> = term.permutation.iter().map(|p| p.to_string()).collect();
        println!("{:.16e},{}", term.coefficient, perm.join(" "));
    }
    Ok(0)
}

fn cmd_continuity(args: &Args) -> Result<i32> {
    args.reject_unknown(&["dist", "matrix", "dmin", "dmax", "steps", "samples", "seed", "out"])?;
    let dist = Distribution::parse_spec(args.require("dist")?)?;
    let matrix = read_matrix_file(args.require("matrix")?)?;
    let a = HermitianMatrix::new(matrix)?;
    let dmin: f64 = args.parse_value("dmin")?;
    let dmax: f64 = args.parse_value("dmax")?;
    let steps: usize = args.parse_value("steps")?;
    let samples: u64 = args.parse_or("samples", 1_000_000)?;
    let seed: u64 = args.parse_or("seed", 1)?;
    let out = args.require("out")?;
    if steps == 0 {
        return Err(CliError::Usage("steps must be at least 1".into()));
    }
    let grid: Vec<f64> = if steps == 1 {
        vec![dmin]
    } else {
        (0..steps)
            .map(|k| dmin + (dmax - dmin) * k as f64 / (steps - 1) as f64)
            .collect()
    };
    let estimates = continuity_scan(&a, &dist, &grid, samples, seed)?;
    let mut csv = String::from("d,norm,stderr,samples\n");
    for (d, est) in grid.iter().zip(&estimates) {
        csv.push_str(&format!(
            "{d:.16e},{:.16e},{:.16e},{}\n",
            est.value, est.stderr, est.samples
        ));
    }
    std::fs::write(out, csv)?;
    Ok(0)
}
