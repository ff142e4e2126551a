use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use orbital_core::bsgen::{
    a_rsn, a_rsn_closed_form, a_rsn_corrected_form, bs_element, bs_minor, BsInstance,
};
use orbital_core::parabolic::{codim1_descendants, tableau_of, word_of, SimpleSubset};
use orbital_core::quantize::{
    build_mu, characteristic_factors, s_check_sets, s_sets, solve_b, BSolution, RootEvent,
};
use orbital_core::report::CheckReport;
use orbital_core::suite::{run_instance, run_suite, SuiteConfig, SuiteSummary, GENERIC_CHECKS};
use orbital_core::tableaux::WordPerm;

#[derive(Parser)]
#[command(
    name = "orbital",
    version,
    about = "Hypersurface orbital varieties in sl(n): generators and checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SubsetArgs {
    /// Rank: the subset lives in the simple roots of sl(n).
    #[arg(long)]
    n: usize,
    /// Comma-separated simple root indices, e.g. `1,4`; empty for none.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    subset: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

impl SubsetArgs {
    fn parse(&self) -> Result<SimpleSubset, String> {
        SimpleSubset::parse(self.n, &self.subset).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the recording tableau Q(w) of a word such as "[2,1,3]".
    Rs {
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Chain form, Richardson tableau, word and codimension-one descendants.
    Chains(SubsetArgs),
    /// The minor generator of the hypersurface attached to a subset.
    Bs {
        #[command(subcommand)]
        action: BsAction,
    },
    /// The determinant Det(t e^s + f^r) on an n-dimensional space.
    Arsn {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The b-system, mu+rho, the index sets and the characteristic factors.
    Quantize(SubsetArgs),
    /// Run every check over all admissible subsets up to a rank bound.
    Suite {
        #[arg(long)]
        max_n: usize,
        /// Comma-separated check names; all checks when omitted.
        #[arg(long)]
        checks: Option<String>,
        /// Restrict the run to one subset of sl(max_n).
        #[arg(long)]
        subset: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Seed for the randomized coprimality certificate.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum BsAction {
    /// Print the generator m_{l_I}.
    Element(SubsetArgs),
    /// Print the bottom-left minor of M_I + t Id.
    Minor(SubsetArgs),
    /// Run every check on the subset; exits nonzero on any failure.
    Verify {
        #[command(flatten)]
        args: SubsetArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Failure modes of a command: bad input, or checks that ran and failed.
enum Failure {
    Usage(String),
    Checks,
}

impl From<orbital_core::Error> for Failure {
    fn from(e: orbital_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("ORBITAL_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| format!("ORBITAL_THREADS must be a positive integer, got '{value}'"))?;
    if threads == 0 {
        return Err("ORBITAL_THREADS must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn print_json(value: &Value) {
    println!("{value}");
}

fn events_json(events: &[RootEvent]) -> Value {
    json!(events
        .iter()
        .map(|e| json!({"m": e.m, "root": [e.root.0, e.root.1]}))
        .collect::<Vec<_>>())
}

fn events_text(events: &[RootEvent]) -> String {
    let parts: Vec<String> = events.iter().map(RootEvent::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn admissible(subset: SimpleSubset) -> Result<BsInstance, Failure> {
    BsInstance::new(subset).map_err(|e| {
        Failure::Usage(format!(
            "{e}; a generator needs at least two chains with equal first and last lengths"
        ))
    })
}

fn cmd_rs(word: &str, format: Format) -> Result<(), Failure> {
    let w: WordPerm = word.parse()?;
    let q = w.rs_q();
    match format {
        Format::Text => println!("{q}"),
        Format::Json => print_json(
            &json!({"word": w.to_string(), "rows": q.rows(), "shape": q.shape().parts()}),
        ),
    }
    Ok(())
}

fn cmd_chains(args: &SubsetArgs) -> Result<(), Failure> {
    let subset = args.parse()?;
    let chains = subset.chains();
    let tableau = tableau_of(&subset);
    let word = word_of(&subset);
    let desc = codim1_descendants(&subset);
    match args.format {
        Format::Text => {
            println!("chains: {chains}");
            println!("lengths: {:?}", chains.lengths());
            println!("word: {word}");
            println!("tableau:\n{tableau}");
            for (i, t) in &desc {
                println!("codimension-one descendant i={i}:\n{t}");
            }
        }
        Format::Json => print_json(&json!({
            "n": subset.n(),
            "subset": subset.members(),
            "chains": chains.to_string(),
            "lengths": chains.lengths(),
            "word": word.to_string(),
            "tableau": tableau.rows(),
            "codim1_descendants": desc.iter().map(|(i, t)| json!({"i": i, "rows": t.rows()})).collect::<Vec<_>>(),
        })),
    }
    Ok(())
}

fn emit(report: &CheckReport, format: Format) {
    match format {
        Format::Text => println!("{}", report.to_text()),
        Format::Json => println!(
            "{}",
            serde_json::to_string(report).expect("reports serialize")
        ),
    }
}

fn emit_summary(summary: &SuiteSummary, format: Format) {
    match format {
        Format::Text => println!(
            "summary: instances={} generic={} skipped={} reports={} failures={}",
            summary.instances, summary.generic, summary.skipped, summary.reports, summary.failures
        ),
        Format::Json => print_json(&json!({"summary": summary})),
    }
}

fn cmd_bs(action: &BsAction) -> Result<(), Failure> {
    match action {
        BsAction::Element(args) | BsAction::Minor(args) => {
            let inst = admissible(args.parse()?)?;
            let is_element = matches!(action, BsAction::Element(_));
            let p = if is_element {
                bs_element(&inst)?
            } else {
                bs_minor(&inst)?
            };
            match args.format {
                Format::Text => println!("{p}"),
                Format::Json => print_json(&json!({
                    "n": inst.n(),
                    "subset": inst.subset().members(),
                    "kind": if is_element { "element" } else { "minor" },
                    "polynomial": p.to_string(),
                    "terms": p.num_terms(),
                    "degree": p.degree(),
                    "c": inst.c(),
                    "d": inst.d_total(),
                    "l_index": inst.l_index(),
                })),
            }
            Ok(())
        }
        BsAction::Verify { args, seed } => {
            let inst = admissible(args.parse()?)?;
            let config = SuiteConfig::new(inst.n().max(2))?.with_seed(*seed);
            let reports = run_instance(&inst, &config);
            for r in &reports {
                emit(r, args.format);
            }
            if let Err(e) = inst.require_generic() {
                let skipped = GENERIC_CHECKS.join(",");
                match args.format {
                    Format::Text => println!("SKIP {skipped}: {e}"),
                    Format::Json => {
                        print_json(&json!({"skipped": GENERIC_CHECKS, "reason": e.to_string()}))
                    }
                }
            }
            if reports.iter().all(|r| r.pass) {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
    }
}

fn cmd_arsn(r: usize, s: usize, n: usize, format: Format) -> Result<(), Failure> {
    let det = a_rsn(r, s, n)?;
    let stated = a_rsn_closed_form(r, s, n);
    let corrected = a_rsn_corrected_form(r, s, n);
    match format {
        Format::Text => {
            println!("det: {det}");
            println!(
                "closed form ((-1)^(r+s) t^r)^h: {stated}{}",
                if det == stated { "" } else { "  (differs)" }
            );
            println!(
                "closed form ((-1)^(rs) t^r)^h: {corrected}{}",
                if det == corrected { "" } else { "  (differs)" }
            );
        }
        Format::Json => print_json(&json!({
            "r": r, "s": s, "n": n,
            "det": det.to_string(),
            "closed_form": stated.to_string(),
            "corrected_form": corrected.to_string(),
            "matches_closed_form": det == stated,
            "matches_corrected_form": det == corrected,
        })),
    }
    Ok(())
}

fn cmd_quantize(args: &SubsetArgs) -> Result<(), Failure> {
    let subset = args.parse()?;
    let inst = admissible(subset.clone())?;
    let lengths = inst.chains().lengths().to_vec();
    let b = solve_b(&lengths)?;
    let factors = characteristic_factors(&subset)?;
    let factor_text: Vec<String> = factors.iter().map(ToString::to_string).collect();
    let BSolution::Solution(b) = b else {
        let reason = inst
            .require_generic()
            .err()
            .map(|e| e.to_string())
            .unwrap_or_default();
        match args.format {
            Format::Text => {
                println!("lengths: {lengths:?}");
                println!("b-system infeasible: {reason}");
                println!("factors: {}", factor_text.join(", "));
            }
            Format::Json => print_json(&json!({
                "lengths": lengths, "b": Value::Null, "infeasible": reason, "factors": factor_text,
            })),
        }
        return Ok(());
    };
    let v = build_mu(&subset)?;
    let (s, so) = s_sets(&v, &subset)?;
    let (sc, sco) = s_check_sets(&v, &subset)?;
    match args.format {
        Format::Text => {
            println!("lengths: {lengths:?}");
            println!("b: {b:?}");
            println!("mu+rho: {v}");
            println!("S: {}", events_text(&s));
            println!("S°: {}", events_text(&so));
            println!("Š: {}", events_text(&sc));
            println!("Š°: {}", events_text(&sco));
            println!("factors: {}", factor_text.join(", "));
        }
        Format::Json => print_json(&json!({
            "lengths": lengths,
            "b": b,
            "mu_plus_rho": v.to_strings(),
            "S": events_json(&s),
            "S_regular": events_json(&so),
            "S_check": events_json(&sc),
            "S_check_regular": events_json(&sco),
            "factors": factor_text,
        })),
    }
    Ok(())
}

fn cmd_suite(
    max_n: usize,
    checks: Option<&str>,
    subset: Option<&str>,
    format: Format,
    seed: u64,
) -> Result<(), Failure> {
    let mut config = SuiteConfig::new(max_n)?.with_seed(seed);
    if let Some(list) = checks {
        config = config.with_checks(list)?;
    }
    if let Some(text) = subset {
        config = config.with_subset(SimpleSubset::parse(max_n, text)?);
    }
    let stdout = io::stdout();
    let summary = run_suite(&config, |r| {
        emit(r, format);
        let _ = stdout.lock().flush();
    })?;
    emit_summary(&summary, format);
    if summary.all_passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let outcome = match &cli.command {
        Command::Rs { word, format } => cmd_rs(word, *format),
        Command::Chains(args) => cmd_chains(args),
        Command::Bs { action } => cmd_bs(action),
        Command::Arsn { r, s, n, format } => cmd_arsn(*r, *s, *n, *format),
        Command::Quantize(args) => cmd_quantize(args),
        Command::Suite {
            max_n,
            checks,
            subset,
            format,
            seed,
        } => cmd_suite(*max_n, checks.as_deref(), subset.as_deref(), *format, *seed),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
