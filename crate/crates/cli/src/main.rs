use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pow2free::atlas;
use pow2free::cycles::{CycleEngine, MAX_CYCLE_LENGTH};
use pow2free::format::{encode_graph6, format_edge_list, read_graph, to_dot};
use pow2free::search::find_min_pow2_free;

/// Build, verify and search cubic graphs without power-of-two cycles.
#[derive(Parser)]
#[command(name = "pow2free", version)]
struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named graph.
    Build {
        name: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::G6)]
        format: OutputFormat,
        /// Print the inflation plan instead of the graph.
        #[arg(long)]
        emit_plan: bool,
    },
    /// Check every claim attached to a named graph.
    Verify { name: String },
    /// Count cycles by length in a graph6 or edge-list file (`-` for stdin).
    Spectrum {
        input: PathBuf,
        /// Count cycles of every length from 3 up to this bound.
        #[arg(long, conflicts_with = "existence_only", required_unless_present = "existence_only")]
        max: Option<usize>,
        /// Only report whether cycles of these power-of-two lengths exist.
        #[arg(long, value_delimiter = ',')]
        existence_only: Option<Vec<usize>>,
    },
    /// Find the smallest connected cubic graphs without 2^m-cycles for m <= k.
    Search {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        nmax: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    G6,
    Edgelist,
    Dot,
}

/// Exit status for a claim that did not hold.
const CLAIM_FAILED: u8 = 1;
/// Exit status for bad arguments or unreadable input.
const USAGE: u8 = 2;

struct Failure(u8, String);

fn usage(message: impl Into<String>) -> Failure {
    Failure(USAGE, message.into())
}

fn named(name: &str) -> Result<atlas::NamedGraph, Failure> {
    atlas::by_name(name)
        .ok_or_else(|| usage(format!("unknown graph `{name}`; expected one of {}", atlas::NAMES.join(", "))))
}

fn build(name: &str, format: OutputFormat, emit_plan: bool, out: &mut impl Write) -> Result<(), Failure> {
    let ng = named(name)?;
    let text = if emit_plan {
        ng.plan
            .as_ref()
            .map(|p| p.to_text())
            .ok_or_else(|| usage(format!("`{name}` is not built from an inflation plan")))?
    } else {
        match format {
            OutputFormat::G6 => encode_graph6(&ng.graph) + "\n",
            OutputFormat::Edgelist => format_edge_list(&ng.graph),
            OutputFormat::Dot => to_dot(&ng.graph, ng.labels.as_deref()),
        }
    };
    out.write_all(text.as_bytes()).map_err(|e| usage(e.to_string()))
}

fn verify(name: &str, out: &mut impl Write) -> Result<(), Failure> {
    let ng = named(name)?;
    let outcomes = ng.verify();
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        let detail = if o.detail.is_empty() { String::new() } else { format!("  [{}]", o.detail) };
        writeln!(out, "{status}  {:<55} {:>10.2?}{detail}", o.claim, o.elapsed).map_err(|e| usage(e.to_string()))?;
    }
    writeln!(out, "{name}: {} of {} claims hold", outcomes.len() - failed, outcomes.len())
        .map_err(|e| usage(e.to_string()))?;
    if failed > 0 {
        return Err(Failure(CLAIM_FAILED, format!("{failed} claim(s) failed")));
    }
    Ok(())
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut text))
    }
    .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn spectrum(
    input: &PathBuf,
    max: Option<usize>,
    existence: Option<&[usize]>,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let text = read_input(input)?;
    let g = read_graph(&text).map_err(|e| usage(format!("{}: {e}", input.display())))?;
    let engine = CycleEngine::new(&g);
    let io_err = |e: io::Error| usage(e.to_string());
    if let Some(lengths) = existence {
        if let Some(&bad) = lengths.iter().find(|&&l| !l.is_power_of_two() || !(4..=MAX_CYCLE_LENGTH).contains(&l)) {
            return Err(usage(format!("{bad} is not a power of two in 4..={MAX_CYCLE_LENGTH}")));
        }
        for &len in lengths {
            let found = engine.has_cycle_of_length(len).map_err(|e| usage(e.to_string()))?;
            writeln!(out, "{len}: {}", if found { "present" } else { "absent" }).map_err(io_err)?;
        }
    } else if let Some(max) = max {
        let s = engine.spectrum(max).map_err(|e| usage(e.to_string()))?;
        writeln!(out, "{s}").map_err(io_err)?;
    }
    Ok(())
}

fn search(k: u32, nmax: usize, out: &mut impl Write) -> Result<(), Failure> {
    let report = find_min_pow2_free(k, nmax).map_err(|e| usage(e.to_string()))?;
    write!(out, "{report}").map_err(|e| usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(USAGE);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("global pool is configured once");
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Build { name, format, emit_plan } => build(name, *format, *emit_plan, &mut out),
        Command::Verify { name } => verify(name, &mut out),
        Command::Spectrum { input, max, existence_only } => {
            spectrum(input, *max, existence_only.as_deref(), &mut out)
        }
        Command::Search { k, nmax } => search(*k, *nmax, &mut out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, message)) => {
            let _ = out.flush();
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
