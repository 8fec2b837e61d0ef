use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use apery::lift::{lex_min_lift, wilf_holds};
use apery::ratio::{search_counterexamples, semigroup_ratio_bridge, Hit, SearchConfig};
use apery::semigroup::from_json_array;
use apery::tessellation::{kernel_lattice, prop_2_8_check, verify_tessellation};
use apery::verify::run_battery;
use apery::{NumericalSemigroup, Rat};

#[derive(Parser)]
#[command(name = "apery", version, about = "Numerical semigroups, staircases and Wilf ratios in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Jsonl,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full report for a single semigroup, given as "g0,g1,..." or a JSON array
    Analyze {
        semigroup: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate all semigroups under the caps and run the theorem battery
    Enumerate {
        #[arg(long, default_value_t = 8)]
        max_mult: u64,
        #[arg(long, default_value_t = 40)]
        max_frob: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Search for pairs (gamma, B) with w(gamma, B) < 1/(e-1)
    RatioSearch {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, default_value_t = 6)]
        max_denom: i64,
        #[arg(long, default_value_t = 3)]
        gamma_max: i64,
        /// candidate budget; falls back to APERY_BUDGET, then 10^6
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        integer_gamma: bool,
        #[arg(long)]
        require_tessellation: bool,
        #[arg(long)]
        require_common_denominator: bool,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// checkpoint file; resumes from it when present
        #[arg(long)]
        resume: Option<PathBuf>,
    },
}

fn default_budget() -> u64 {
    std::env::var("APERY_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1_000_000)
}

fn rat_pair(r: Rat) -> (i64, i64) {
    (*r.numer(), *r.denom())
}

fn parse_semigroup(input: &str) -> Result<NumericalSemigroup, apery::Error> {
    if input.trim_start().starts_with('[') {
        from_json_array(input)
    } else {
        input.parse()
    }
}

fn analyze(input: &str, format: Format) -> Result<ExitCode, apery::Error> {
    let s = parse_semigroup(input)?;
    let lift = lex_min_lift(&s)?;
    let stories = lift.stories();
    let wilf = wilf_holds(&s);
    let lat = kernel_lattice(&s);
    let tessellates = verify_tessellation(&lift.tilde_a, &lat)?;
    let structure = prop_2_8_check(&lift.tilde_a, &lat)?;
    let (w_stories, w_ideal) = semigroup_ratio_bridge(&s)?;
    let battery = run_battery(&s);

    let mut apery_sorted = s.apery().apery.clone();
    apery_sorted.sort_unstable();

    match format {
        Format::Text => {
            println!("S = {s}  e = {}  g0 = {}", s.embedding_dimension(), s.multiplicity());
            println!("A = {apery_sorted:?}");
            println!(
                "conductor = {}  Frobenius = {}  genus = {}",
                s.conductor(),
                s.frobenius(),
                s.genus()
            );
            println!("L ({}) = {:?}", s.left_count(), s.left_part());
            println!("gaps ({}) = {:?}", s.genus(), s.gaps());
            println!(
                "pseudo-Frobenius = {:?}  type t(S) = {}  symmetric = {}",
                s.pseudo_frobenius(),
                s.type_of(),
                s.is_symmetric()
            );
            println!("lift à = {}", lift.tilde_a);
            println!("t(R(Ã)) = {}", lift.tilde_a.type_of());
            println!("ideal generators = {:?}", lift.tilde_a.min_generators());
            println!(
                "stories: n0 = {}  h = {:?}  h' = {:?}  u = {}  d = {}  w(S) = {}",
                stories.n0, stories.h, stories.h_prime, stories.u_count, stories.d_count, stories.wilf_ratio
            );
            for (x0, count) in lift.story_rows() {
                println!("  story x0 = {x0:>3}: {count} points");
            }
            println!("Wilf: holds = {}  margin e#L - c = {}", wilf.holds, wilf.margin);
            println!("kernel lattice = {lat}  (HNF rows {:?})", lat.basis());
            println!("tessellates by kernel lattice: {tessellates}");
            println!(
                "tessellation structure check: {} (off-axis generators {:?})",
                structure.holds(),
                structure.off_axis_generators
            );
            println!("bridge: w(S) = {w_stories} = w(g/g0, Ã) = {w_ideal}");
            if !battery.passed() {
                println!("VIOLATIONS: {:?}", battery.violations);
            }
        }
        _ => {
            let doc = json!({
                "semigroup": s.generators(),
                "embedding_dimension": s.embedding_dimension(),
                "apery": { "g0": s.multiplicity(), "apery": s.apery().apery, "conductor": s.conductor() },
                "frobenius": s.frobenius(),
                "genus": s.genus(),
                "left_part": s.left_part(),
                "gaps": s.gaps(),
                "pseudo_frobenius": s.pseudo_frobenius(),
                "type": s.type_of(),
                "symmetric": s.is_symmetric(),
                "lift": lift.tilde_a.points_vec(),
                "lift_type": lift.tilde_a.type_of(),
                "ideal_generators": lift.tilde_a.min_generators(),
                "stories": {
                    "n0": stories.n0, "h": stories.h, "h_prime": stories.h_prime,
                    "u": stories.u_count, "d": stories.d_count,
                    "wilf_ratio": rat_pair(stories.wilf_ratio),
                },
                "wilf": { "holds": wilf.holds, "margin": wilf.margin },
                "kernel_lattice": lat.basis(),
                "tessellates": tessellates,
                "structure_check": structure.holds(),
                "violations": battery.violations,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    Ok(if battery.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn enumerate(max_mult: u64, max_frob: u64, format: Format, threads: Option<usize>) -> ExitCode {
    if let Some(n) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .ok();
    }
    use rayon::prelude::*;

    let mut count = 0u64;
    let mut min_margin = i64::MAX;
    let mut violations: Vec<String> = Vec::new();
    let mut batch: Vec<NumericalSemigroup> = Vec::new();

    // deterministic output with bounded memory: enumerate in order,
    // run the battery per batch, print per batch
    let mut flush = |batch: &mut Vec<NumericalSemigroup>| {
        let reports: Vec<_> = batch.par_iter().map(run_battery).collect();
        for r in reports {
            count += 1;
            min_margin = min_margin.min(r.wilf_margin);
            if format == Format::Text {
                let verdict = if r.passed() { "ok" } else { "FAIL" };
                println!("{:?} margin={} {}", r.generators, r.wilf_margin, verdict);
            }
            violations.extend(r.violations);
        }
        batch.clear();
    };
    apery::enumerate::enumerate_semigroups(max_mult, max_frob, |s| {
        batch.push(s);
        if batch.len() == 8192 {
            flush(&mut batch);
        }
    });
    flush(&mut batch);

    match format {
        Format::Text => println!("# {count} semigroups, {} violations", violations.len()),
        _ => {
            let doc = json!({
                "count": count,
                "violations": violations,
                "min_wilf_margin": if count > 0 { Some(min_margin) } else { None },
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    if violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn hit_jsonl(hit: &Hit) -> String {
    let doc = json!({
        "gamma": hit.gamma.iter().map(|&g| rat_pair(g)).collect::<Vec<_>>(),
        "B": hit.points,
        "d": hit.d,
        "u": hit.u,
        "ratio": rat_pair(hit.ratio),
        "tessellates": hit.tessellates,
        "common_denominator": hit.common_denominator,
    });
    doc.to_string()
}

fn hit_csv(hit: &Hit) -> String {
    let gamma: Vec<String> = hit.gamma.iter().map(|g| g.to_string()).collect();
    let points: Vec<String> = hit
        .points
        .iter()
        .map(|p| p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!(
        "\"{}\",\"{}\",{},{},{},{},{}",
        gamma.join(" "),
        points.join(";"),
        hit.d,
        hit.u,
        hit.ratio,
        hit.tessellates,
        hit.common_denominator
    )
}

#[allow(clippy::too_many_arguments)]
fn ratio_search(
    cfg: SearchConfig,
    format: Format,
    out: Option<PathBuf>,
    resume: Option<PathBuf>,
) -> ExitCode {
    let resume_after = resume.as_ref().and_then(|p| {
        let text = fs::read_to_string(p).ok()?;
        let doc: serde_json::Value = serde_json::from_str(&text).ok()?;
        let key = doc.get("last_key")?;
        Some((key[0].as_u64()? as usize, key[1].as_u64()? as usize))
    });

    let mut sink: Box<dyn std::io::Write> = match &out {
        Some(path) => Box::new(fs::File::create(path).expect("cannot create output file")),
        None => Box::new(std::io::stdout()),
    };
    if format == Format::Csv {
        writeln!(sink, "gamma,B,d,u,ratio,tessellates,common_denominator").unwrap();
    }
    let result = search_counterexamples(&cfg, resume_after, |hit| {
        let line = match format {
            Format::Csv => hit_csv(hit),
            _ => hit_jsonl(hit),
        };
        writeln!(sink, "{line}").unwrap();
    });
    sink.flush().unwrap();

    match result {
        Ok(summary) => {
            if let (Some(path), Some(key)) = (&resume, summary.last_key) {
                let doc = json!({ "last_key": [key.0, key.1] });
                fs::write(path, doc.to_string()).expect("cannot write checkpoint");
            }
            eprintln!(
                "# examined {} pairs, {} hits",
                summary.examined, summary.hits
            );
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Analyze { semigroup, format } => match analyze(&semigroup, format) {
            Ok(code) => code,
            Err(err) => {
                eprintln!("error: {err}");
                ExitCode::from(2)
            }
        },
        Cmd::Enumerate {
            max_mult,
            max_frob,
            format,
            threads,
        } => enumerate(max_mult, max_frob, format, threads),
        Cmd::RatioSearch {
            dim,
            max_size,
            max_denom,
            gamma_max,
            budget,
            integer_gamma,
            require_tessellation,
            require_common_denominator,
            format,
            out,
            resume,
        } => {
            let cfg = SearchConfig {
                dim,
                max_size,
                max_denom,
                gamma_max,
                budget: budget.unwrap_or_else(default_budget),
                integer_gamma_only: integer_gamma,
                require_tessellation,
                require_common_denominator,
                tessellation_budget: 1_000_000,
            };
            ratio_search(cfg, format, out, resume)
        }
    }
}
