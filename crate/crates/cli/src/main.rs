mod records;
mod render;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use tanglekit::classify::{
    classify, count_table, stabilizer, symmetry_table, ClassRecord, SymmetryName,
};
use tanglekit::minimize::minimize;
use tanglekit::{
    canonicalize, emit, fraction, orbit16, parse, relation, ParseMode, Tangle, TangleError,
};

use crate::records::{read_records, write_records};
use crate::render::Diagram;

#[derive(Parser)]
#[command(
    name = "tanglekit",
    version,
    about = "Canonical forms and classification of algebraic tangles"
)]
struct Cli {
    /// Read multi-digit integers and fractions separated by spaces instead
    /// of one digit per factor.
    #[arg(long, global = true)]
    spaced: bool,
    /// Largest crossing number `classify` and `count` may enumerate.
    #[arg(long, global = true, env = "TANGLEKIT_BUDGET", default_value_t = 10)]
    budget: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form.
    Canon {
        #[arg(allow_hyphen_values = true)]
        tangle: String,
    },
    /// Print the fraction.
    Frac {
        #[arg(allow_hyphen_values = true)]
        tangle: String,
    },
    /// Print how two tangles are related: isotopic, equivalent, same-orbit
    /// or distinct.
    Eq {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// List the canonical forms of the 16 images and the symmetry group.
    Orbit {
        #[arg(allow_hyphen_values = true)]
        tangle: String,
    },
    /// Print the minimal crossing number and a diagram realizing it.
    Minimize {
        #[arg(allow_hyphen_values = true)]
        tangle: String,
    },
    /// Write one record per orbit up to the given crossing number.
    Classify {
        #[arg(long, default_value_t = 10)]
        max_crossings: u32,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Keep only orbits with this many closed components.
        #[arg(long)]
        closed: Option<u32>,
    },
    /// Summarize orbit counts per crossing number.
    Count {
        /// Print an aligned table with headers.
        #[arg(long)]
        table: bool,
        /// Count symmetry groups instead of closed components.
        #[arg(long)]
        symmetry: bool,
        /// Record file to summarize; classifies afresh when absent.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        max_crossings: u32,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Draw the tangle as an SVG diagram.
    Render {
        #[arg(allow_hyphen_values = true)]
        tangle: String,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<TangleError>() {
                Some(TangleError::Syntax(_) | TangleError::CompositeInput(_)) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<()> {
    let mode = if cli.spaced {
        ParseMode::Spaced
    } else {
        ParseMode::Compact
    };
    let read = |s: &str| -> Result<Tangle> { Ok(parse(s, mode)?) };
    let mut out = BufWriter::new(io::stdout().lock());
    match &cli.command {
        Command::Canon { tangle } => writeln!(out, "{}", emit(&canonicalize(&read(tangle)?)?))?,
        Command::Frac { tangle } => writeln!(out, "{}", fraction(&read(tangle)?)?)?,
        Command::Eq { a, b } => writeln!(out, "{}", relation(&read(a)?, &read(b)?)?)?,
        Command::Orbit { tangle } => {
            let t = read(tangle)?;
            for (g, image) in orbit16(&t) {
                writeln!(out, "{g}\t{}", emit(&canonicalize(&image)?))?;
            }
            let stab = stabilizer(&t)?;
            let name = SymmetryName::from_stabilizer(&stab)
                .ok_or_else(|| TangleError::CompositeInput("unexpected symmetry group".into()))?;
            writeln!(out, "symmetry {name}")?;
        }
        Command::Minimize { tangle } => {
            let (n, witness) = minimize(&read(tangle)?)?;
            writeln!(out, "{n}\n{}", emit(&witness))?;
        }
        Command::Classify {
            max_crossings,
            out: path,
            jobs,
            closed,
        } => {
            let records = run_classify(*max_crossings, cli.budget, *jobs)?;
            let kept = records
                .iter()
                .filter(|r| closed.is_none_or(|k| r.closed_components == k));
            match path {
                Some(p) => {
                    let file =
                        File::create(p).with_context(|| format!("creating {}", p.display()))?;
                    write_records(&mut BufWriter::new(file), kept)?;
                }
                None => write_records(&mut out, kept)?,
            }
        }
        Command::Count {
            table,
            symmetry,
            input,
            max_crossings,
            jobs,
        } => {
            let records = match input {
                Some(p) => {
                    let file = File::open(p).with_context(|| format!("opening {}", p.display()))?;
                    read_records(BufReader::new(file))?
                }
                None => run_classify(*max_crossings, cli.budget, *jobs)?,
            };
            if *symmetry {
                write_symmetry(&mut out, &records, *table)?;
            } else {
                write_counts(&mut out, &records, *table)?;
            }
        }
        Command::Render { tangle, out: path } => {
            let svg = Diagram::of(&read(tangle)?).to_svg();
            std::fs::write(path, svg).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    out.flush()?;
    Ok(())
}

fn run_classify(max: u32, budget: u32, jobs: usize) -> Result<Vec<ClassRecord>> {
    if max > budget {
        bail!("{max} crossings exceeds the budget of {budget}; raise TANGLEKIT_BUDGET or --budget");
    }
    Ok(classify(max, jobs)?)
}

fn write_counts(out: &mut impl Write, records: &[ClassRecord], table: bool) -> Result<()> {
    let max = records.iter().map(|r| r.crossings).max().unwrap_or(0);
    let rows = count_table(records, max);
    let width = rows.iter().map(|r| r.by_closed.len()).max().unwrap_or(1);
    if table {
        let closed: Vec<String> = (0..width).map(|k| format!("{k:>6}")).collect();
        writeln!(
            out,
            "{:>6} {} {:>8} {:>8} {:>8}",
            "cross",
            closed.join(" "),
            "orbit",
            "equiv",
            "isotopy"
        )?;
    }
    for r in rows {
        let cells: Vec<String> = (0..width)
            .map(|k| match r.by_closed.get(k) {
                Some(&n) if n > 0 => n.to_string(),
                _ => "-".to_string(),
            })
            .collect();
        if table {
            let cells: Vec<String> = cells.iter().map(|c| format!("{c:>6}")).collect();
            writeln!(
                out,
                "{:>6} {} {:>8} {:>8} {:>8}",
                r.crossings,
                cells.join(" "),
                r.orbits,
                r.equivalence,
                r.isotopy
            )?;
        } else {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                r.crossings,
                cells.join("/"),
                r.orbits,
                r.equivalence,
                r.isotopy
            )?;
        }
    }
    Ok(())
}

fn write_symmetry(out: &mut impl Write, records: &[ClassRecord], table: bool) -> Result<()> {
    let by_row = symmetry_table(records);
    if table {
        let names: Vec<String> = SymmetryName::ALL
            .iter()
            .map(|s| format!("{:>5}", s.abbreviation()))
            .collect();
        writeln!(out, "{:>6} {}", "cross", names.join(" "))?;
    }
    for (n, groups) in by_row {
        if table {
            let cells: Vec<String> = SymmetryName::ALL
                .iter()
                .map(|s| {
                    format!(
                        "{:>5}",
                        groups.get(s).map_or("-".to_string(), u64::to_string)
                    )
                })
                .collect();
            writeln!(out, "{n:>6} {}", cells.join(" "))?;
        } else {
            let cells: Vec<String> = groups
                .iter()
                .map(|(s, k)| format!("{}={k}", s.abbreviation()))
                .collect();
            writeln!(out, "{n}\t{}", cells.join(" "))?;
        }
    }
    Ok(())
}
