use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use divide_core::generators::{coil, gen_chords, zigzag};
use divide_core::render::render_svg;
use divide_core::report::{build_report, corpus_csv, load_input, run_corpus, Input};
use divide_core::theorem::DEFAULT_DEPTH;
use divide_core::walks::walk_table;
use divide_core::{build_gamma, compute_faces, gamma_to_dot, matrix_n};

#[derive(Parser)]
#[command(name = "divide", version, about = "Dynkin diagrams, monodromy and Lefschetz numbers of divides")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Zigzag,
    Coil,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a divide file is well formed
    Validate { file: PathBuf },
    /// Full invariant report with identity checks
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// number of monodromy trace powers to list
        #[arg(long, default_value_t = DEFAULT_DEPTH as u64, value_parser = clap::value_parser!(u64).range(1..=64))]
        traces: u64,
    },
    /// Write the Dynkin diagram as Graphviz DOT
    Gamma {
        file: PathBuf,
        #[arg(long)]
        dot: PathBuf,
    },
    /// Draw a chord arrangement as SVG
    Render {
        file: PathBuf,
        #[arg(long)]
        svg: PathBuf,
    },
    /// Sample a random chord arrangement
    GenChords {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short)]
        o: PathBuf,
    },
    /// Write a member of a parametric family
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(short)]
        o: PathBuf,
    },
    /// Check every identity on a corpus of random chord arrangements
    Corpus {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Monodromy traces against closed walks on the diagram
    Traces {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
        k: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn read_input(path: &Path) -> Result<Input> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    load_input(&text).with_context(|| format!("{}", path.display()))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Validate { file } => {
            read_input(&file)?;
            println!("valid");
        }
        Command::Report { file, format, traces } => {
            let input = read_input(&file)?;
            let report = build_report(&file.display().to_string(), &input, traces as usize)?;
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print!("{}", report.to_json()),
            }
            return Ok(!report.has_failures());
        }
        Command::Gamma { file, dot } => {
            let input = read_input(&file)?;
            let map = input.map();
            let gamma = build_gamma(map, &compute_faces(map)?);
            write(&dot, &gamma_to_dot(&gamma))?;
        }
        Command::Render { file, svg } => match read_input(&file)? {
            Input::Map(_) => bail!("{}: no geometry available (render needs a divide-chords/1 file)", file.display()),
            Input::Chords(set, _) => write(&svg, &render_svg(&set)?)?,
        },
        Command::GenChords { n, seed, o } => write(&o, &gen_chords(n, seed)?.to_json())?,
        Command::Gen { family, k, o } => {
            let k = k as usize;
            let map = match family {
                Family::Zigzag => zigzag(k),
                Family::Coil => coil(k),
            };
            write(&o, &map.to_json())?;
        }
        Command::Corpus { count, n, seed, csv } => {
            let (rows, summary) = run_corpus(count as usize, n, seed, DEFAULT_DEPTH)?;
            match csv {
                Some(path) => write(&path, &corpus_csv(&rows))?,
                None => print!("{}", corpus_csv(&rows)),
            }
            eprint!("{}", summary.to_text());
            return Ok(summary.ok());
        }
        Command::Traces { file, k, csv } => {
            let input = read_input(&file)?;
            let map = input.map();
            let gamma = build_gamma(map, &compute_faces(map)?);
            let table = walk_table(&gamma, &matrix_n(&gamma), k as usize)?.to_csv();
            match csv {
                Some(path) => write(&path, &table)?,
                None => print!("{table}"),
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
