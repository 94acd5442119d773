mod modules;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use modrep_core::homological::{ext_dims, DimValue};
use modrep_core::ledger::{verify_exact_p3, verify_symbolic, SUPPORTED_PRIMES};
use modrep_core::partition::{abacus_display, block_label, is_p_regular, p_core_and_weight, principal_block_quiver, BlockLabel, Partition};
use modrep_core::rel_homology::{finitistic_and_gorenstein, global_dimension, is_tilting, relative_domdim_chain, AddCategory};
use modrep_core::schur_weyl::{basic_schur_p3, exact_model_p3, young_module};
use modrep_core::suite::{all_ids, run_suite, SuiteConfig};
use modrep_core::AlgModule;
use serde_json::{json, Value};

use modules::AlgebraChoice;

#[derive(Parser)]
#[command(name = "modrep", version, about = "Modular representation theory of symmetric groups in weight two")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Symbolic,
    Exact,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites.
    #[command(subcommand)]
    Verify(Verify),
    /// Abacus display, core, weight and block label of a partition.
    Abacus {
        #[arg(long)]
        p: u32,
        /// Parts separated by commas, e.g. "3,2,1".
        #[arg(long)]
        partition: Partition,
    },
    /// Predicted Ext-quiver of the principal block of kS_2p.
    Quiver {
        #[arg(long)]
        p: u32,
    },
    /// Dimensions of Ext^i between two named modules, i = 0..=degree.
    Ext {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = AlgebraChoice::Lambda)]
        algebra: AlgebraChoice,
        /// Kind and weight, e.g. "Y<3>", "dS<2,1>", "P(3,3)".
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Relative dominant dimension of basic S(3,6) with respect to tensor space.
    Domdim {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 12)]
        cutoff: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Global dimension of basic S(3,6) or of Λ(3,6).
    Gldim {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = AlgebraChoice::Schur)]
        algebra: AlgebraChoice,
        #[arg(long, default_value_t = 20)]
        cutoff: usize,
    },
    /// Finitistic dimension and Gorenstein check of Λ(3,6).
    Findim {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 20)]
        cutoff: usize,
    },
    /// Tilting check for the sum of principal-block Young modules other than Y<3>.
    Tilting {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 20)]
        cutoff: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Every acceptance criterion, exactly at p = 3 and symbolically at larger primes.
    P3Full {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        cutoff: usize,
        /// Criteria to run (default: all).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the built-in ledger of decompositions for one prime.
    Ledger {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = Mode::Symbolic)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// What a command produced: a JSON document, its text rendering and a verdict.
struct Report {
    json: Value,
    text: Vec<String>,
    passed: bool,
}

impl Report {
    fn ok(json: Value, text: Vec<String>) -> Self {
        Report { json, text, passed: true }
    }
}

#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn exact_prime(p: u32) -> Result<()> {
    if p != 3 {
        return Err(usage(format!("exact computations are available only for p = 3 (got p = {p})")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(r) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&r.json).expect("reports serialise"),
                Format::Text => r.text.join("\n"),
            };
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if r.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), json!("1"));
    }
    v
}

fn run(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Verify(Verify::P3Full { seed, cutoff, only, out }) => verify_full(*seed, *cutoff, only, out.as_ref()),
        Command::Verify(Verify::Ledger { p, mode, seed }) => verify_ledger(*p, *mode, *seed),
        Command::Abacus { p, partition } => abacus(*p, partition),
        Command::Quiver { p } => quiver(*p),
        Command::Ext { p, algebra, from, to, degree, seed } => ext(*p, *algebra, from, to, *degree, *seed),
        Command::Domdim { p, cutoff, seed } => domdim(*p, *cutoff, *seed),
        Command::Gldim { p, algebra, cutoff } => gldim(*p, *algebra, *cutoff),
        Command::Findim { p, cutoff } => findim(*p, *cutoff),
        Command::Tilting { p, cutoff, seed } => tilting(*p, *cutoff, *seed),
    }
}

fn verify_full(seed: u64, cutoff: usize, only: &[u8], out: Option<&PathBuf>) -> Result<Report> {
    if let Some(bad) = only.iter().find(|&&i| !(1..=15).contains(&i)) {
        return Err(usage(format!("there is no criterion {bad}; criteria are numbered 1 to 15")));
    }
    let ids = if only.is_empty() { all_ids() } else { only.to_vec() };
    let report = run_suite(&SuiteConfig { seed, cutoff }, &ids);
    let json = serde_json::to_value(&report)?;
    if let Some(path) = out {
        std::fs::write(path, serde_json::to_string_pretty(&json)? + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    let mut text = Vec::new();
    for c in &report.criteria {
        text.push(format!("{} criterion {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.title));
        text.extend(c.observations.iter().map(|l| format!("    {l}")));
    }
    let failed = report.failed_ids();
    text.push(if failed.is_empty() {
        format!("{} of {} criteria passed", ids.len(), ids.len())
    } else {
        format!("failed criteria: {}", failed.iter().map(u8::to_string).collect::<Vec<_>>().join(", "))
    });
    Ok(Report { json, text, passed: report.passed })
}

fn verify_ledger(p: u32, mode: Mode, seed: u64) -> Result<Report> {
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(usage(format!("p = {p} is not supported; choose one of {SUPPORTED_PRIMES:?}")));
    }
    match mode {
        Mode::Symbolic => {
            let r = verify_symbolic(p)?;
            let mut text = vec![format!(
                "p = {p}: {} filtrations, {} identities, {} chains, {} derived classes",
                r.filtrations,
                r.identities,
                r.chains,
                r.derived.len()
            )];
            for (what, list) in [("missing", &r.coverage_missing), ("duplicated", &r.coverage_duplicated), ("unexpected", &r.coverage_unexpected)] {
                if !list.is_empty() {
                    text.push(format!("FAIL coverage {what}: {}", list.join(", ")));
                }
            }
            text.extend(r.failures.iter().map(|f| format!("FAIL {} {}: {}", f.source, f.entry, f.reason)));
            text.push(format!("{} symbolic ledger p = {p}", if r.passed { "PASS" } else { "FAIL" }));
            Ok(Report { json: serde_json::to_value(&r)?, text, passed: r.passed })
        }
        Mode::Exact => {
            exact_prime(p)?;
            let r = verify_exact_p3(seed)?;
            let mut text: Vec<String> = r
                .entries
                .iter()
                .map(|e| format!("{} {} {}: {}", if e.passed { "PASS" } else { "FAIL" }, e.source, e.entry, e.detail))
                .collect();
            text.push(format!("{} exact ledger p = 3 ({} entries)", if r.passed { "PASS" } else { "FAIL" }, r.entries.len()));
            Ok(Report { json: serde_json::to_value(&r)?, text, passed: r.passed })
        }
    }
}

fn grid(ab: &modrep_core::partition::AbacusDisplay) -> Vec<String> {
    let p = ab.prime as usize;
    let rows = ab.bead_positions.iter().next_back().map_or(0, |&q| q / p + 1);
    (0..rows)
        .map(|r| (0..p).map(|c| if ab.bead_positions.contains(&(r * p + c)) { "o" } else { "." }).collect::<Vec<_>>().join(" "))
        .collect()
}

fn abacus(p: u32, lam: &Partition) -> Result<Report> {
    let ab = abacus_display(lam, p).map_err(|e| usage(e.to_string()))?;
    let (core, weight) = p_core_and_weight(lam, p);
    let label: Option<BlockLabel> = block_label(lam, p).ok();
    let regular = is_p_regular(lam, p);
    let mut text = vec![format!("partition ({lam}), p = {p}")];
    text.push((1..=p).map(|r| r.to_string()).collect::<Vec<_>>().join(" "));
    text.extend(grid(&ab));
    text.push(format!("core ({core}), weight {weight}"));
    text.push(match label {
        Some(l) => format!("label {l}"),
        None => "not in the principal block".into(),
    });
    text.push(if regular { "p-regular".into() } else { "singular".into() });
    let json = json!({
        "schema": "1",
        "p": p,
        "partition": lam.parts(),
        "beads": ab.bead_positions,
        "core": core.parts(),
        "weight": weight,
        "label": label.map(|l| l.to_string()),
        "p_regular": regular,
    });
    Ok(Report::ok(json, text))
}

fn quiver(p: u32) -> Result<Report> {
    let q = principal_block_quiver(p).map_err(|e| usage(e.to_string()))?;
    let mut text = vec![format!("{} vertices, {} edges", q.vertices.len(), q.edges.len())];
    text.extend(q.edges.iter().map(|(a, b)| format!("{a} -- {b}")));
    Ok(Report::ok(with_schema(serde_json::to_value(&q)?), text))
}

fn ext(p: u32, alg: AlgebraChoice, from: &str, to: &str, degree: usize, seed: u64) -> Result<Report> {
    exact_prime(p)?;
    let a = modules::parse_name(from).map_err(|e| usage(e.to_string()))?;
    let b = modules::parse_name(to).map_err(|e| usage(e.to_string()))?;
    for x in [&a, &b] {
        modules::check_kind(alg, x).map_err(|e| usage(e.to_string()))?;
    }
    let m = modules::build(alg, &a, seed)?;
    let n = modules::build(alg, &b, seed)?;
    let dims = ext_dims(&m, &n, degree)?;
    let text = dims.iter().enumerate().map(|(i, d)| format!("dim Ext^{i}({from}, {to}) = {d}")).collect();
    Ok(Report::ok(json!({ "schema": "1", "from": from, "to": to, "ext": dims }), text))
}

fn dim_json(v: DimValue) -> Value {
    serde_json::to_value(v).expect("dimension values serialise")
}

fn domdim(p: u32, cutoff: usize, seed: u64) -> Result<Report> {
    exact_prime(p)?;
    let b = basic_schur_p3()?;
    let cat = AddCategory::new(&b.natural, seed)?;
    let chain = relative_domdim_chain(&AlgModule::regular(&b.alg), &cat, cutoff)?;
    let dims: Vec<usize> = chain.terms.iter().map(|t| t.dim()).collect();
    let text = vec![format!("Q-domdim basic S(3,6) = {}", chain.value), format!("approximation term dimensions: {dims:?}")];
    Ok(Report::ok(json!({ "schema": "1", "domdim": dim_json(chain.value), "term_dims": dims }), text))
}

fn gldim(p: u32, alg: AlgebraChoice, cutoff: usize) -> Result<Report> {
    exact_prime(p)?;
    let a = match alg {
        AlgebraChoice::Schur => &basic_schur_p3()?.alg,
        AlgebraChoice::Lambda => &exact_model_p3()?.basic.alg,
    };
    let v = global_dimension(a, cutoff)?;
    Ok(Report::ok(json!({ "schema": "1", "algebra": a.name(), "gldim": dim_json(v) }), vec![v.to_string()]))
}

fn findim(p: u32, cutoff: usize) -> Result<Report> {
    exact_prime(p)?;
    let r = finitistic_and_gorenstein(&exact_model_p3()?.basic.alg, cutoff)?;
    let text = vec![
        format!("findim {}{}", r.findim, if r.findim_lower_bound_only { " (lower bound)" } else { "" }),
        format!("injdim left {}, right {}", r.injdim_left, r.injdim_right),
        format!("Iwanaga-Gorenstein: {}", r.iwanaga_gorenstein),
    ];
    Ok(Report::ok(with_schema(serde_json::to_value(&r)?), text))
}

fn tilting(p: u32, cutoff: usize, seed: u64) -> Result<Report> {
    exact_prime(p)?;
    let model = exact_model_p3()?;
    let ys = ["<2>", "<1>", "<3,2>", "<3,1>", "<2,1>"]
        .iter()
        .map(|l| {
            let lam = modrep_core::partition::label_to_partition(l.parse().expect("label literal"), 3)?;
            Ok(model.principal_module(&young_module(&lam, 3, seed)?.module)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let cert = is_tilting(&AlgModule::direct_sum_all(&model.principal.alg, &ys), cutoff, seed)?;
    let text = vec![format!("tilting: {}", cert.is_tilting), format!("pdim {}", cert.pdim)];
    let passed = cert.is_tilting;
    Ok(Report { json: with_schema(serde_json::to_value(&cert)?), text, passed })
}
