//! Command-line surface for the Calabi-Yau classification of the stable
//! module categories of Lambda(n, t).
//!
//! Exit codes are a stable contract: 0 on success, 1 when a verification
//! sweep finds a mathematical discrepancy, 2 on usage errors (clap uses 2
//! for flag errors as well).

mod cache;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nakayama_cy::verify::{check_point, grid_points, GridPoint};
use nakayama_cy::{par, Algebra, StableHomTable, StableObject};

use cache::{CacheRecord, CacheWriter};
use output::OutputRecord;

#[derive(Parser)]
#[command(
    name = "nakayama-cy",
    version,
    about = "Calabi-Yau modules of the self-injective Nakayama algebras Lambda(n,t)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List the minimal d-th Calabi-Yau objects of Lambda(n,t)
    Classify {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        t: i64,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Category-level report: CY dimension and indecomposable CY modules
    Category {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        t: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// CY dimension of one object, given as a summand list "i,l;i,l;..."
    Cydim {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        t: i64,
        #[arg(long)]
        object: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Orbit partition of the indecomposables under G = [-d] . F
    Orbits {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        t: i64,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Serre-duality dimension grid over the exact matrix model
    Homcheck {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        t: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Cross-route verification sweep with a resumable result cache
    Verify {
        #[arg(long = "n-max")]
        n_max: u32,
        #[arg(long = "t-max")]
        t_max: u32,
        /// Worker threads for the sweep (default: one per core)
        #[arg(long)]
        jobs: Option<usize>,
        /// Run the exact Hom-space checks only for n, t up to this bound
        #[arg(long = "hom-max", default_value_t = 8)]
        hom_max: u32,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Classify { n, t, d, format } => classify(n, t, d, format),
        Command::Category { n, t, format } => category(n, t, format),
        Command::Cydim {
            n,
            t,
            object,
            format,
        } => cydim(n, t, &object, format),
        Command::Orbits { n, t, d, format } => orbits(n, t, d, format),
        Command::Homcheck { n, t, format } => homcheck(n, t, format),
        Command::Verify {
            n_max,
            t_max,
            jobs,
            hom_max,
        } => verify(n_max, t_max, jobs, hom_max),
    }
}

fn algebra(n: i64, t: i64) -> Result<Algebra, String> {
    Algebra::new(n, t).map_err(|e| e.to_string())
}

fn emit_json<P: serde::Serialize>(record: &OutputRecord<P>) {
    println!(
        "{}",
        serde_json::to_string(record).expect("output records serialize")
    );
}

fn classify(n: i64, t: i64, d: i64, format: Format) -> Result<ExitCode, String> {
    let alg = algebra(n, t)?;
    let res = nakayama_cy::minimal_cy_modules(&alg, d);
    let payload = output::classify_payload(&alg, &res);
    match format {
        Format::Table => print!("{}", output::render_classify_table(&alg, d, &payload)),
        Format::Csv => print!("{}", output::render_classify_csv(&alg, &payload)),
        Format::Json => emit_json(&OutputRecord::new("classify", &alg, Some(d), payload)),
    }
    Ok(ExitCode::SUCCESS)
}

fn category(n: i64, t: i64, format: Format) -> Result<ExitCode, String> {
    let alg = algebra(n, t)?;
    let report = nakayama_cy::category_report(&alg);
    let payload = output::category_payload(&alg, &report);
    match format {
        Format::Table => print!("{}", output::render_category_table(&alg, &payload)),
        Format::Json => emit_json(&OutputRecord::new("category", &alg, None, payload)),
        Format::Csv => return Err("csv output is available for classify and orbits".into()),
    }
    Ok(ExitCode::SUCCESS)
}

/// Parses an object spec "i,l;i,l;...", validating every summand.
fn parse_object(alg: &Algebra, spec: &str) -> Result<StableObject, String> {
    let mut summands = Vec::new();
    for part in spec.split(';') {
        let part = part.trim();
        let (i, l) = part
            .split_once(',')
            .ok_or_else(|| format!("malformed summand '{part}', expected 'i,l'"))?;
        let i: i64 = i
            .trim()
            .parse()
            .map_err(|_| format!("malformed top index '{i}'"))?;
        let l: i64 = l
            .trim()
            .parse()
            .map_err(|_| format!("malformed Loewy length '{l}'"))?;
        summands.push(alg.module(i, l).map_err(|e| e.to_string())?);
    }
    if summands.is_empty() {
        return Err("object spec is empty".into());
    }
    Ok(StableObject::new(summands))
}

fn cydim(n: i64, t: i64, spec: &str, format: Format) -> Result<ExitCode, String> {
    let alg = algebra(n, t)?;
    let object = parse_object(&alg, spec)?;
    let payload = output::CydimPayload {
        cy_dimension: nakayama_cy::cy_dimension(&alg, &object),
        object_shift_order: nakayama_cy::relative_order(&object, |m| alg.shift(m, 1))
            .expect("shift has finite order"),
        object,
    };
    match format {
        Format::Table => print!("{}", output::render_cydim_table(&payload)),
        Format::Json => emit_json(&OutputRecord::new("cydim", &alg, None, payload)),
        Format::Csv => return Err("csv output is available for classify and orbits".into()),
    }
    Ok(ExitCode::SUCCESS)
}

fn orbits(n: i64, t: i64, d: i64, format: Format) -> Result<ExitCode, String> {
    let alg = algebra(n, t)?;
    let records = nakayama_cy::all_orbits(&alg, d);
    let payload = output::orbits_payload(nakayama_cy::normalize_degree(&alg, d), &records);
    match format {
        Format::Table => print!("{}", output::render_orbits_table(&alg, d, &payload)),
        Format::Csv => print!("{}", output::render_orbits_csv(&alg, &payload)),
        Format::Json => emit_json(&OutputRecord::new("orbits", &alg, Some(d), payload)),
    }
    Ok(ExitCode::SUCCESS)
}

fn homcheck(n: i64, t: i64, format: Format) -> Result<ExitCode, String> {
    let alg = algebra(n, t)?;
    let table = StableHomTable::compute(&alg);
    let failures = table.serre_duality_failures();
    let modules: Vec<_> = alg.modules().collect();
    let payload = output::HomcheckPayload {
        pairs_checked: modules.len() * modules.len(),
        modules,
        all_pass: failures.is_empty(),
        failures,
    };
    match format {
        Format::Table => print!("{}", output::render_homcheck_table(&alg, &payload)),
        Format::Json => emit_json(&OutputRecord::new("homcheck", &alg, None, payload)),
        Format::Csv => return Err("csv output is available for classify and orbits".into()),
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(n_max: u32, t_max: u32, jobs: Option<usize>, hom_max: u32) -> Result<ExitCode, String> {
    if n_max < 1 || t_max < 2 {
        return Err("verify needs --n-max >= 1 and --t-max >= 2".into());
    }
    let path = cache::cache_path();
    let cached = cache::load(&path);
    let writer = CacheWriter::append_to(&path)
        .map_err(|e| format!("cannot open cache {}: {e}", path.display()))?;

    let points = grid_points(n_max, t_max);
    let total = points.len();
    let (hits, todo): (Vec<GridPoint>, Vec<GridPoint>) = points
        .into_iter()
        .partition(|p| cached.contains_key(&(p.n, p.t, p.d)));

    let fresh: Vec<CacheRecord> = par::with_thread_count(jobs, || {
        par::map(todo, |point| {
            let alg = Algebra::new(point.n as i64, point.t as i64).expect("valid point");
            let with_hom = point.d == 0 && point.n <= hom_max && point.t <= hom_max;
            let record = CacheRecord::from_outcome(&check_point(&alg, point.d, with_hom));
            writer.append(&record);
            record
        })
    });
    writer.flush();

    let mut records: Vec<&CacheRecord> = fresh.iter().collect();
    records.extend(hits.iter().map(|p| &cached[&(p.n, p.t, p.d)]));
    let hom_checked = records.iter().filter(|r| r.hom_checked).count();
    let failures: Vec<&&CacheRecord> = records.iter().filter(|r| !r.ok).collect();

    println!(
        "verify sweep: n <= {n_max}, t <= {t_max} (hom budget {hom_max}), cache {}",
        path.display()
    );
    println!(
        "points: {total} total, {} cached, {} checked, {hom_checked} hom-checked",
        hits.len(),
        fresh.len()
    );
    if let Some(first) = failures.first() {
        println!("{} discrepancies", failures.len());
        println!(
            "first counterexample at Lambda({},{}), d = {}:",
            first.n, first.t, first.d
        );
        for line in &first.discrepancies {
            println!("  {line}");
        }
        Ok(ExitCode::from(1))
    } else {
        println!("0 discrepancies");
        Ok(ExitCode::SUCCESS)
    }
}
