use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use plancherel_core::measure::{growth_kernel, measure, measures, Provenance, Sampler};
use plancherel_core::observables::{check_jack_level, kerov_coords, parse_observable, Evaluator};
use plancherel_core::rat::{parse_theta, to_compact_string, to_fraction_string};
use plancherel_core::symfunc::JackTable;
use plancherel_core::verify::{run_suite, Suite, SuiteOptions, SuiteReport};
use plancherel_core::{Error, Partition, Rat};

#[derive(Parser, Debug)]
#[command(
    name = "plancherel",
    version,
    about = "Exact Plancherel and Jack-Plancherel averages on Young diagrams"
)]
struct Cli {
    /// Jack parameter as an integer or p/q.
    #[arg(long, global = true)]
    theta: Option<String>,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<String>,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact averages of an observable for one level or a range of levels.
    Avg(AvgArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Sample growth trajectories.
    Sample(SampleArgs),
    /// Print coordinates, kernels, measures or Jack functions.
    Show(ShowArgs),
}

#[derive(Args, Debug)]
struct AvgArgs {
    /// Observable, e.g. `fmu:2,1`, `content:p(2)`, `pstar:3*hrho:2`.
    #[arg(long)]
    obs: String,

    /// Level `N` or inclusive range `A..B`.
    #[arg(long)]
    n: String,

    #[arg(long, default_value = "growth")]
    source: String,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// stanley, jack-closed-form, polynomiality, growth-vs-jack,
    /// kerov-identities, del-identity, duality, structural, combinatorial
    /// or sampler.
    suite: String,

    #[arg(long)]
    n_max: Option<usize>,

    /// Observable for the polynomiality suite.
    #[arg(long)]
    obs: Option<String>,

    #[arg(long)]
    trajectories: Option<u64>,

    /// Write the averages of the polynomiality suite as CSV.
    #[arg(long, value_name = "PATH")]
    emit_table: Option<String>,
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[arg(long)]
    n: usize,

    #[arg(long, default_value_t = 1)]
    trajectories: u64,

    /// Include every full path.
    #[arg(long)]
    paths: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ShowObject {
    Coords,
    Kernel,
    Measure,
    Jack,
}

#[derive(Args, Debug)]
struct ShowArgs {
    #[arg(value_enum)]
    object: ShowObject,

    /// Diagram as comma-separated rows; the empty string is the empty diagram.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,

    #[arg(long)]
    n: Option<usize>,

    #[arg(long, default_value = "growth")]
    source: String,
}

enum Failure {
    Core(Error),
    Usage(String),
    Verification,
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

struct Output {
    format: Format,
    path: Option<String>,
}

impl Output {
    fn write(&self, text: &str) -> std::io::Result<()> {
        match &self.path {
            Some(p) => fs::write(p, text),
            None => std::io::stdout().lock().write_all(text.as_bytes()),
        }
    }

    fn emit(&self, json: &Value, csv: impl FnOnce() -> String) -> std::io::Result<()> {
        match self.format {
            Format::Json => self.write(&format!("{json}\n")),
            Format::Csv => self.write(&csv()),
        }
    }
}

fn fraction(x: &Rat) -> Value {
    Value::String(to_fraction_string(x))
}

fn parse_levels(s: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::Core(Error::parse(s, "expected N or A..B"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?);
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![num(s)?]),
    }
}

fn parse_lambda(s: Option<&String>) -> Result<Partition, Failure> {
    let s = s.ok_or_else(|| Failure::Usage("--lambda is required".into()))?;
    Ok(s.parse()?)
}

fn theta_or_one(theta: &Option<Rat>) -> Rat {
    theta.clone().unwrap_or_else(|| Rat::from_integer(1.into()))
}

fn cmd_avg(args: &AvgArgs, theta: Rat, out: &Output) -> Outcome {
    let obs = parse_observable(&args.obs)?;
    let levels = parse_levels(&args.n)?;
    let source: Provenance = args.source.parse()?;
    let n_max = *levels.iter().max().expect("nonempty range");
    let eval = Evaluator::new(theta.clone()).with_jack_degree(
        plancherel_core::symfunc::DEFAULT_JACK_DEGREE.max(n_max + obs.del_depth()),
    );
    check_jack_level(&obs, &eval, n_max)?;
    let tables = measures(n_max, &theta, source)?;
    let mut rows = Vec::with_capacity(levels.len());
    for &n in &levels {
        rows.push((n, tables[n].average(&obs, &eval)?));
    }
    let json = json!({
        "observable": obs.to_string(),
        "theta": fraction(&theta),
        "source": source.name(),
        "averages": rows.iter().map(|(n, v)| json!({"n": n, "value": fraction(v)})).collect::<Vec<_>>(),
    });
    out.emit(&json, || {
        let mut s = String::from("n,average\n");
        for (n, v) in &rows {
            s.push_str(&format!("{n},{}\n", to_compact_string(v)));
        }
        s
    })?;
    Ok(())
}

fn report_json(report: &SuiteReport) -> Value {
    json!({
        "suite": report.suite.name(),
        "passed": report.passed(),
        "cases": report.cases.iter().map(|c| json!({
            "label": c.label,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

fn cmd_verify(
    args: &VerifyArgs,
    theta: Option<Rat>,
    seed: u64,
    format: Option<Format>,
    out: &Output,
) -> Outcome {
    let suite: Suite = args.suite.parse()?;
    if args.emit_table.is_some() && suite != Suite::Polynomiality {
        return Err(Failure::Usage(
            "--emit-table applies to the polynomiality suite".into(),
        ));
    }
    let obs = args.obs.as_deref().map(parse_observable).transpose()?;
    let opts = SuiteOptions {
        theta,
        n_max: args.n_max,
        obs,
        seed,
        trajectories: args.trajectories,
    };
    let report = run_suite(suite, &opts)?;
    match format {
        Some(Format::Json) => out.write(&format!("{}\n", report_json(&report)))?,
        Some(Format::Csv) => {
            let mut s = String::from("label,passed,detail\n");
            for c in &report.cases {
                let detail = c.detail.clone().unwrap_or_default().replace('"', "\"\"");
                s.push_str(&format!("\"{}\",{},\"{detail}\"\n", c.label, c.passed));
            }
            out.write(&s)?;
        }
        None => {
            let mut s: String = report.cases.iter().map(|c| format!("{c}\n")).collect();
            s.push_str(&format!(
                "{} {}: {}/{} cases passed\n",
                if report.passed() { "PASS" } else { "FAIL" },
                suite,
                report.passed_count(),
                report.cases.len()
            ));
            out.write(&s)?;
        }
    }
    if let Some(path) = &args.emit_table {
        let mut s = String::from("observable,theta,n,average\n");
        for r in &report.poly_reports {
            for (n, v) in r.values.iter().enumerate() {
                s.push_str(&format!(
                    "\"{}\",{},{n},{}\n",
                    r.observable,
                    to_compact_string(&r.theta),
                    to_compact_string(v)
                ));
            }
        }
        fs::write(path, s)?;
    }
    if let Some(first) = report.first_failure() {
        eprintln!("first counterexample: {first}");
        return Err(Failure::Verification);
    }
    Ok(())
}

fn cmd_sample(args: &SampleArgs, theta: Rat, seed: u64, out: &Output) -> Outcome {
    if args.trajectories == 0 {
        return Err(Failure::Usage("--trajectories must be at least 1".into()));
    }
    let mut sampler = Sampler::new(theta.clone(), seed);
    let paths: Vec<Vec<Partition>> = (0..args.trajectories)
        .map(|i| sampler.trajectory(args.n, i))
        .collect();
    let finals: Vec<&Partition> = paths
        .iter()
        .map(|p| p.last().expect("nonempty path"))
        .collect();
    let mut counts = std::collections::BTreeMap::<&Partition, u64>::new();
    for f in &finals {
        *counts.entry(*f).or_insert(0) += 1;
    }
    let exact = measure(args.n, &theta, Provenance::Growth).ok();
    let total = Rat::from_integer(args.trajectories.into());
    let freq: Vec<(&Partition, u64, Rat, Option<Rat>)> = counts
        .into_iter()
        .rev()
        .map(|(p, c)| {
            let f = Rat::from_integer(c.into()) / &total;
            (p, c, f, exact.as_ref().map(|m| m.weight(p)))
        })
        .collect();
    let mut json = json!({
        "n": args.n,
        "theta": fraction(&theta),
        "seed": seed,
        "trajectories": args.trajectories,
        "finals": finals.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "frequencies": freq.iter().map(|(p, c, f, e)| json!({
            "partition": p.to_string(),
            "count": c,
            "frequency": fraction(f),
            "exact": e.as_ref().map(to_fraction_string),
        })).collect::<Vec<_>>(),
    });
    if args.paths {
        json["paths"] = paths
            .iter()
            .map(|p| p.iter().map(|l| l.to_string()).collect::<Vec<_>>())
            .collect();
    }
    out.emit(&json, || {
        let mut s = if args.paths {
            String::from("trajectory,final,path\n")
        } else {
            String::from("trajectory,final\n")
        };
        for (i, p) in paths.iter().enumerate() {
            let last = p.last().expect("nonempty path");
            if args.paths {
                let joined: Vec<String> = p.iter().map(|l| format!("({l})")).collect();
                s.push_str(&format!("{i},\"{last}\",\"{}\"\n", joined.join(" ")));
            } else {
                s.push_str(&format!("{i},\"{last}\"\n"));
            }
        }
        s.push_str("\npartition,count,frequency,exact\n");
        for (p, c, f, e) in &freq {
            let e = e.as_ref().map(to_compact_string).unwrap_or_default();
            s.push_str(&format!("\"{p}\",{c},{},{e}\n", to_compact_string(f)));
        }
        s
    })?;
    Ok(())
}

fn cmd_show(args: &ShowArgs, theta: Rat, out: &Output) -> Outcome {
    match args.object {
        ShowObject::Coords => {
            let lambda = parse_lambda(args.lambda.as_ref())?;
            let c = kerov_coords(&lambda, &theta);
            let json = json!({
                "lambda": lambda.to_string(),
                "theta": fraction(&theta),
                "x": c.x.iter().map(fraction).collect::<Vec<_>>(),
                "y": c.y.iter().map(fraction).collect::<Vec<_>>(),
            });
            out.emit(&json, || {
                let mut s = String::from("kind,index,value\n");
                for (i, x) in c.x.iter().enumerate() {
                    s.push_str(&format!("x,{},{}\n", i + 1, to_compact_string(x)));
                }
                for (j, y) in c.y.iter().enumerate() {
                    s.push_str(&format!("y,{},{}\n", j + 1, to_compact_string(y)));
                }
                s
            })?;
        }
        ShowObject::Kernel => {
            let lambda = parse_lambda(args.lambda.as_ref())?;
            let k = growth_kernel(&lambda, &theta);
            let json = json!({
                "lambda": lambda.to_string(),
                "theta": fraction(&theta),
                "targets": k.targets().map(|(p, w)| json!([p.to_string(), to_fraction_string(w)])).collect::<Vec<_>>(),
            });
            out.emit(&json, || {
                let mut s = String::from("partition,probability\n");
                for (p, w) in k.targets() {
                    s.push_str(&format!("\"{p}\",{}\n", to_compact_string(w)));
                }
                s
            })?;
        }
        ShowObject::Measure => {
            let n = args
                .n
                .ok_or_else(|| Failure::Usage("--n is required".into()))?;
            let m = measure(n, &theta, args.source.parse()?)?;
            match out.format {
                Format::Json => out.write(&format!("{}\n", m.to_json()))?,
                Format::Csv => out.write(&m.to_csv())?,
            }
        }
        ShowObject::Jack => {
            let lambda = parse_lambda(args.lambda.as_ref())?;
            let table = JackTable::build(&theta, lambda.size())?;
            let p = table.p(&lambda)?;
            let q = table.q(&lambda)?;
            let json = json!({
                "lambda": lambda.to_string(),
                "theta": fraction(&theta),
                "p": p,
                "q": q,
                "norm": fraction(table.norm(&lambda)?),
                "dim": fraction(table.dim_theta(&lambda)?),
                "dim_prime": fraction(table.dim_theta_prime(&lambda)?),
            });
            out.emit(&json, || {
                let mut s = String::from("monomial,p,q\n");
                for (mu, c) in p.sorted_terms() {
                    s.push_str(&format!(
                        "\"{mu}\",{},{}\n",
                        to_compact_string(c),
                        to_compact_string(&q.coeff(mu))
                    ));
                }
                s
            })?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let theta = cli.theta.as_deref().map(parse_theta).transpose()?;
    let out = Output {
        format: cli.format.unwrap_or(Format::Json),
        path: cli.out.clone(),
    };
    match &cli.command {
        Command::Avg(a) => cmd_avg(a, theta_or_one(&theta), &out),
        Command::Verify(a) => cmd_verify(a, theta, cli.seed, cli.format, &out),
        Command::Sample(a) => cmd_sample(a, theta_or_one(&theta), cli.seed, &out),
        Command::Show(a) => cmd_show(a, theta_or_one(&theta), &out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::DegreeBound { .. } | Error::LevelBound { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
