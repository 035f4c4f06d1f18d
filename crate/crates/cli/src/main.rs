//! Command-line interface: machine-readable access to the verifier, the
//! coefficient table, the extremal constructions and the general-density
//! optimizer. Every report is JSON or CSV; exit status 0 means success,
//! 1 a failed verification, 2 a usage error.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use c5min_core::c5::count_c5;
use c5min_core::cert::{
    alpha_fn, lambda_fn, lower_bound, nontight_export, psd_check_a, verify_certificate, PsdMode,
    PsdOutcome,
};
use c5min_core::error::Error;
use c5min_core::extremal::turan_density_report;
use c5min_core::flagalg::{align_to_paper, cf_opt_vector, five_classes, product_table, PaperData};
use c5min_core::fmin::{
    build_construction, fmin, fmin_curve, k2_convention_report, rho_from, Regime,
};
use c5min_core::graph::Graph;
use c5min_core::graph6::{parse_graph6, write_graph6};
use c5min_core::identity::{check_identity, degenerate_residual};
use c5min_core::poly::{rat, rat_to_f64};
use c5min_core::rng::SplitMix64;
use c5min_core::small::enumerate_classes;

/// Fixed default seed so that runs are reproducible without flags.
const DEFAULT_SEED: u64 = 0xC5C5_C5C5;

const SCHEMA: u64 = 1;

#[derive(Parser)]
#[command(name = "c5min", version, about = "Pentagon-density certificate tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for data-parallel stages (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the certificate: symbolic families, positivity, null space.
    Verify(VerifyArgs),
    /// Emit the computed 23x34 coefficient table.
    Table(TableArgs),
    /// Align the computed table against a shipped data file.
    Align(AlignArgs),
    /// Balanced multipartite construction and its exact 5-cycle density.
    Turan(TuranArgs),
    /// Minimize the construction's 5-cycle density at one edge density.
    Fmin(FminArgs),
    /// Sample the minimization curve against the secant line.
    FminCurve(FminCurveArgs),
    /// Build the layered random construction.
    Construct(ConstructArgs),
    /// Count 5-cycles of graph6-encoded graphs.
    CountC5(CountArgs),
    /// Check the injective quadratic-form identity on sampled graphs.
    Identity(IdentityArgs),
    /// List the classes strictly above the minimum, with excesses.
    Nontight,
}

#[derive(Args)]
struct VerifyArgs {
    /// Also evaluate the bound at this integer k.
    #[arg(long)]
    k: Option<i64>,
    /// Exact positivity sweep over an inclusive range "a..b".
    #[arg(long, value_parser = parse_range)]
    k_range: Option<(i64, i64)>,
    /// Run only the symbolic checks (skip the default 3..1000 sweep).
    #[arg(long)]
    symbolic: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Column order of the emitted table.
    #[arg(long, value_enum, default_value_t = TableOrder::Internal)]
    order: TableOrder,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableOrder {
    Internal,
    Paper,
}

#[derive(Args)]
struct AlignArgs {
    /// Path of the 23x34 integer CSV to align against.
    #[arg(long)]
    paper_table: PathBuf,
}

#[derive(Args)]
struct TuranArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    n: u64,
    /// Also write the graph itself, one graph6 line.
    #[arg(long)]
    graph_out: Option<PathBuf>,
}

#[derive(Args)]
struct FminArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Also report the published k = 2 reduced form comparison.
    #[arg(long)]
    conventions: bool,
}

#[derive(Args)]
struct FminCurveArgs {
    #[arg(long)]
    from: f64,
    #[arg(long)]
    to: f64,
    #[arg(long)]
    step: f64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    x: f64,
    /// Density of the random block; derived from --p when omitted.
    #[arg(long)]
    rho: Option<f64>,
    /// Target edge density used to derive rho when --rho is absent.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct CountArgs {
    /// File with one graph6 line per graph; "-" reads stdin.
    #[arg(long = "in")]
    input: String,
}

#[derive(Args)]
struct IdentityArgs {
    /// Order of the sampled graphs.
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 50)]
    trials: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    k: i64,
    /// Check every isomorphism class of the given order instead (n <= 7).
    #[arg(long)]
    exhaustive: bool,
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or("expected a..b")?;
    let a = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{e}"))?;
    if a > b {
        return Err("empty range".into());
    }
    Ok((a, b))
}

/// Data directory: C5MIN_DATA when set, else ./data.
fn data_dir() -> PathBuf {
    std::env::var_os("C5MIN_DATA")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("data"))
}

struct Report {
    json: Value,
    csv: String,
}

fn emit(cli: &Cli, report: &Report) -> std::io::Result<()> {
    let text = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => report.csv.clone(),
    };
    match &cli.out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    #[cfg(feature = "parallel")]
    {
        if let Some(jobs) = cli.jobs {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .expect("thread pool");
            return pool.install(|| dispatch(&cli));
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = cli.jobs;
    dispatch(&cli)
}

fn dispatch(cli: &Cli) -> ExitCode {
    match run(cli) {
        Ok(report) => {
            if emit(cli, &report).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            let code = match &err {
                Error::Certificate(_) | Error::AlignMismatch(_) | Error::AlignAmbiguous(_) => 1,
                _ => 2,
            };
            let failure = Report {
                json: json!({ "schema": SCHEMA, "ok": false, "error": err.to_string() }),
                csv: format!("error\n\"{err}\"\n"),
            };
            let _ = emit(cli, &failure);
            eprintln!("c5min: {err}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Table(args) => cmd_table(args),
        Command::Align(args) => cmd_align(args),
        Command::Turan(args) => cmd_turan(args),
        Command::Fmin(args) => cmd_fmin(args),
        Command::FminCurve(args) => cmd_fmin_curve(args),
        Command::Construct(args) => cmd_construct(args),
        Command::CountC5(args) => cmd_count(args),
        Command::Identity(args) => cmd_identity(args),
        Command::Nontight => cmd_nontight(),
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<Report, Error> {
    let table = product_table();
    let report = verify_certificate(&table)?;

    let nontight: Vec<Value> = nontight_export(&report)
        .into_iter()
        .zip(&report.nontight)
        .map(|((g6, excess), (idx, _))| {
            json!({
                "graph6": g6,
                "excess": excess.to_string(),
                "class": idx,
                "k4_coefficient": report.m_values[*idx],
            })
        })
        .collect();

    let mut psd = json!({
        "shift": report
            .psd_shift
            .iter()
            .map(|v| json!({
                "coeffs_nonnegative": v.coeffs_nonnegative,
                "constant_positive": v.constant_positive,
            }))
            .collect::<Vec<_>>(),
        "shift_proven": report.psd_shift_proven,
    });

    // Default behaviour: symbolic checks plus the exact sweep to 1000.
    let range = if args.symbolic {
        None
    } else {
        Some(args.k_range.unwrap_or((3, 1000)))
    };
    if let Some((a, b)) = range {
        if a < 3 {
            return Err(Error::Domain(format!("k range starts at {a}, need >= 3")));
        }
        match psd_check_a(PsdMode::Range { kmax: b })? {
            PsdOutcome::Range {
                all_positive,
                first_failure,
                ..
            } => {
                psd["range"] = json!({
                    "from": a,
                    "to": b,
                    "all_positive": all_positive,
                    "first_failure": first_failure,
                });
                if !all_positive {
                    return Err(Error::Certificate(format!(
                        "positivity sweep failed at k = {first_failure:?}"
                    )));
                }
            }
            _ => unreachable!(),
        }
    }

    let mut out = json!({
        "schema": SCHEMA,
        "ok": true,
        "alpha": alpha_fn().to_string(),
        "lambda": lambda_fn().to_string(),
        "tight_indices": report.tight,
        "nontight": nontight,
        "psd": psd,
        "kernel_ok": report.kernel_ok,
        "min_cf_equals_120lambda": report.min_cf_equals_120_lambda,
    });

    if let Some(k) = args.k {
        let bound = lower_bound(&table, k)?;
        out["k"] = json!(k);
        out["lower_bound_at_k"] = json!(bound.to_string());
        out["lambda_at_k"] = json!(lambda_fn().eval(&rat(k)).expect("k >= 3").to_string());
    }

    let mut csv = String::from("key,value\n");
    csv.push_str(&format!(
        "min_cf_equals_120lambda,{}\n",
        report.min_cf_equals_120_lambda
    ));
    csv.push_str(&format!("kernel_ok,{}\n", report.kernel_ok));
    csv.push_str(&format!("psd_shift_proven,{}\n", report.psd_shift_proven));
    csv.push_str(&format!("tight,{}\n", report.tight.len()));
    csv.push_str(&format!("nontight,{}\n", report.nontight.len()));

    Ok(Report { json: out, csv })
}

fn table_rows_internal() -> (Vec<i64>, Vec<i64>, Vec<Vec<i64>>) {
    let table = product_table();
    let copt: Vec<i64> = cf_opt_vector().iter().map(|&c| c as i64).collect();
    let pk2: Vec<i64> = five_classes()
        .iter()
        .map(|g| g.edge_count() as i64)
        .collect();
    let rows: Vec<Vec<i64>> = table
        .scaled_rows()
        .iter()
        .map(|r| r.iter().map(|&v| v as i64).collect())
        .collect();
    (copt, pk2, rows)
}

fn cmd_table(args: &TableArgs) -> Result<Report, Error> {
    let (mut copt, mut pk2, mut rows) = table_rows_internal();
    let order = match args.order {
        TableOrder::Internal => "internal",
        TableOrder::Paper => {
            let paper = PaperData::load(&data_dir().join("appendix_a.csv"))?;
            let table = product_table();
            let alignment = align_to_paper(&table, &paper)?;
            copt = alignment.to_paper_order(&copt);
            pk2 = alignment.to_paper_order(&pk2);
            for row in &mut rows {
                *row = alignment.to_paper_order(row);
            }
            "paper"
        }
    };

    let join = |v: &[i64]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut csv = String::new();
    csv.push_str(&join(&copt));
    csv.push('\n');
    csv.push_str(&join(&pk2));
    csv.push('\n');
    for row in &rows {
        csv.push_str(&join(row));
        csv.push('\n');
    }

    Ok(Report {
        json: json!({
            "schema": SCHEMA,
            "order": order,
            "c5_counts": copt,
            "edge_counts": pk2,
            "product_rows_x30": rows,
        }),
        csv,
    })
}

fn cmd_align(args: &AlignArgs) -> Result<Report, Error> {
    let paper = PaperData::load(&args.paper_table)?;
    let table = product_table();
    let alignment = align_to_paper(&table, &paper)?;
    let perm_1based: Vec<usize> = alignment.perm.iter().map(|&p| p + 1).collect();
    let mut csv = String::from("internal_class,paper_column\n");
    for (i, p) in perm_1based.iter().enumerate() {
        csv.push_str(&format!("{i},{p}\n"));
    }
    Ok(Report {
        json: json!({ "schema": SCHEMA, "ok": true, "paper_column_of_class": perm_1based }),
        csv,
    })
}

fn cmd_turan(args: &TuranArgs) -> Result<Report, Error> {
    let report = turan_density_report(args.k, args.n)?;
    if let Some(path) = &args.graph_out {
        let g = c5min_core::extremal::turan_graph(args.k, args.n)?;
        fs::write(path, format!("{}\n", write_graph6(&g)))
            .map_err(|e| Error::Data(format!("{}: {e}", path.display())))?;
    }
    let json = json!({
        "schema": SCHEMA,
        "k": report.k,
        "n": report.n,
        "count": report.count.to_string(),
        "density": rat_to_f64(&report.density),
        "density_exact": report.density.to_string(),
        "lambda": rat_to_f64(&report.lambda),
        "lambda_exact": report.lambda.to_string(),
        "gap": report.gap,
    });
    let csv = format!(
        "k,n,count,density,lambda,gap\n{},{},{},{},{},{}\n",
        report.k,
        report.n,
        report.count,
        rat_to_f64(&report.density),
        rat_to_f64(&report.lambda),
        report.gap
    );
    Ok(Report { json, csv })
}

fn cmd_fmin(args: &FminArgs) -> Result<Report, Error> {
    let regime = Regime::new(args.k, args.p)?;
    let sol = fmin(regime.k, regime.p, args.tol)?;
    let status = match sol.status {
        c5min_core::fmin::SolveStatus::OptimalGrid => "optimal-grid",
        c5min_core::fmin::SolveStatus::Boundary => "boundary",
        c5min_core::fmin::SolveStatus::Infeasible => "infeasible",
    };
    let mut json = json!({
        "schema": SCHEMA,
        "k": args.k,
        "p": args.p,
        "x": sol.point.x,
        "y": sol.point.y,
        "rho": sol.point.rho,
        "fmin": sol.value,
        "status": status,
    });
    if args.conventions {
        let samples: Vec<(f64, f64)> = (1..=20).map(|i| (0.04 * i as f64, args.p)).collect();
        let report = k2_convention_report(&samples)?;
        json["conventions"] = json!(report
            .iter()
            .map(|s| json!({
                "x": s.x,
                "display": s.display,
                "density_rho_matches": s.density_matches,
                "literal_rho_matches": s.literal_matches,
            }))
            .collect::<Vec<_>>());
    }
    let csv = format!(
        "k,p,x,y,rho,fmin,status\n{},{},{},{},{},{},{}\n",
        args.k, args.p, sol.point.x, sol.point.y, sol.point.rho, sol.value, status
    );
    Ok(Report { json, csv })
}

fn cmd_fmin_curve(args: &FminCurveArgs) -> Result<Report, Error> {
    let rows = fmin_curve(args.from, args.to, args.step, args.tol)?;
    let mut csv = String::from("p,fmin,L,gap\n");
    for r in &rows {
        csv.push_str(&format!("{},{},{},{}\n", r.p, r.fmin, r.l, r.gap));
    }
    let json = json!({
        "schema": SCHEMA,
        "rows": rows
            .iter()
            .map(|r| json!({ "p": r.p, "fmin": r.fmin, "L": r.l, "gap": r.gap, "knot": r.knot }))
            .collect::<Vec<_>>(),
    });
    Ok(Report { json, csv })
}

fn cmd_construct(args: &ConstructArgs) -> Result<Report, Error> {
    let rho = match (args.rho, args.p) {
        (Some(r), _) => r,
        (None, Some(p)) => rho_from(args.k, p, args.x)?,
        (None, None) => {
            return Err(Error::Domain("construct needs --rho or --p".into()));
        }
    };
    let g = build_construction(args.k, args.n, args.x, rho, args.seed)?;
    let g6 = write_graph6(&g);
    let json = json!({
        "schema": SCHEMA,
        "k": args.k,
        "n": args.n,
        "x": args.x,
        "rho": rho,
        "seed": args.seed,
        "edges": g.edge_count(),
        "graph6": g6,
    });
    let csv = format!("{g6}\n");
    Ok(Report { json, csv })
}

fn cmd_count(args: &CountArgs) -> Result<Report, Error> {
    let text = if args.input == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Data(format!("stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(&args.input).map_err(|e| Error::Data(format!("{}: {e}", args.input)))?
    };
    let mut rows = Vec::new();
    let mut csv = String::from("graph6,count\n");
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let g = parse_graph6(line)?;
        let c = count_c5(&g);
        csv.push_str(&format!("{},{}\n", line.trim(), c));
        rows.push(json!({ "graph6": line.trim(), "count": c.to_string() }));
    }
    Ok(Report {
        json: json!({ "schema": SCHEMA, "counts": rows }),
        csv,
    })
}

fn cmd_identity(args: &IdentityArgs) -> Result<Report, Error> {
    let table = product_table();
    let graphs: Vec<Graph> = if args.exhaustive {
        enumerate_classes(args.n)?.iter().map(Graph::from).collect()
    } else {
        let mut rng = SplitMix64::new(args.seed);
        (0..args.trials)
            .map(|_| Graph::random(args.n, rng.next_u64(), 1, 2))
            .collect()
    };
    let mut failures = 0u64;
    let mut max_residual_ratio = 0f64;
    let n4 = (args.n as f64).powi(4).max(1.0);
    for g in &graphs {
        if g.n() < 5 {
            continue;
        }
        let check = check_identity(g, args.k, &table)?;
        if !check.equal {
            failures += 1;
        }
        let r = rat_to_f64(&degenerate_residual(g, args.k)?).abs() / n4;
        max_residual_ratio = max_residual_ratio.max(r);
    }
    let checked = graphs.len() as u64;
    let json = json!({
        "schema": SCHEMA,
        "k": args.k,
        "n": args.n,
        "exhaustive": args.exhaustive,
        "checked": checked,
        "failures": failures,
        "max_residual_ratio": max_residual_ratio,
    });
    let csv =
        format!("checked,failures,max_residual_ratio\n{checked},{failures},{max_residual_ratio}\n");
    if failures > 0 {
        return Err(Error::Certificate(format!("{failures} identity failures")));
    }
    Ok(Report { json, csv })
}

fn cmd_nontight() -> Result<Report, Error> {
    let table = product_table();
    let report = verify_certificate(&table)?;
    let lines = nontight_export(&report);
    let mut csv = String::new();
    for (g6, excess) in &lines {
        csv.push_str(&format!("{g6},{excess}\n"));
    }
    let json = json!({
        "schema": SCHEMA,
        "nontight": lines
            .iter()
            .map(|(g6, excess)| json!({ "graph6": g6, "excess": excess.to_string() }))
            .collect::<Vec<_>>(),
    });
    Ok(Report { json, csv })
}
