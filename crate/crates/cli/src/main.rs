use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use twoclosed::fixtures;
use twoclosed::{
    decide_2_closed, decide_with_oracle_check, parse_group, serialize_group, two_closure, zel,
    OracleLimits, PermGroup, TwoOrbitColoring,
};

#[derive(Parser)]
#[command(
    name = "twoclosed",
    version,
    about = "2-closure tools for permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide 2-closedness (exit 0: 2-closed, 1: not 2-closed, 2: error)
    Decide {
        /// Group file, or '-' for stdin
        file: PathBuf,
        /// Also compute the closure by brute force and compare
        #[arg(long)]
        oracle_check: bool,
    },
    /// Print the 2-closure computed by exhaustive search
    Closure { file: PathBuf },
    /// Print zel(G) of an intransitive group
    Zel { file: PathBuf },
    /// Print the orbits, one per line
    Orbits { file: PathBuf },
    /// Print the 2-orbit coloring as a matrix of color ids
    Orb2 { file: PathBuf },
    /// Print the Example 1 group for a prime p
    Example1 { p: usize },
    /// Print the Example 2 group for a prime p
    Example2 { p: usize },
    /// Print a seeded random abelian group with cyclic constituents
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        max_degree: usize,
    },
}

fn read_group(path: &PathBuf) -> anyhow::Result<PermGroup> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(parse_group(&text)?)
}

fn group_with_order(group: &PermGroup) -> anyhow::Result<String> {
    Ok(format!(
        "# order {}\n{}",
        group.order()?,
        serialize_group(group)
    ))
}

fn run(cli: Cli, out: &mut impl Write) -> anyhow::Result<u8> {
    match cli.command {
        Command::Decide { file, oracle_check } => {
            let group = read_group(&file)?;
            if oracle_check {
                let report = decide_with_oracle_check(&group, OracleLimits::default())?;
                write!(out, "{}", report.trace)?;
                writeln!(
                    out,
                    "oracle: {} (|G|={}, |closure|={})",
                    if report.oracle {
                        "2-closed"
                    } else {
                        "not 2-closed"
                    },
                    report.group_order,
                    report.closure_order
                )?;
                if report.mismatch() {
                    bail!("criterion and oracle disagree");
                }
                Ok(if report.decided { 0 } else { 1 })
            } else {
                let (verdict, trace) = decide_2_closed(&group)?;
                write!(out, "{trace}")?;
                Ok(if verdict { 0 } else { 1 })
            }
        }
        Command::Closure { file } => {
            let closure = two_closure(&read_group(&file)?, OracleLimits::default())?;
            write!(out, "{}", group_with_order(&closure)?)?;
            Ok(0)
        }
        Command::Zel { file } => {
            write!(out, "{}", group_with_order(&zel(&read_group(&file)?)?)?)?;
            Ok(0)
        }
        Command::Orbits { file } => {
            for class in read_group(&file)?.orbits().classes() {
                let pts: Vec<String> = class.iter().map(usize::to_string).collect();
                writeln!(out, "{{{}}}", pts.join(" "))?;
            }
            Ok(0)
        }
        Command::Orb2 { file } => {
            write!(out, "{}", TwoOrbitColoring::of_group(&read_group(&file)?))?;
            Ok(0)
        }
        Command::Example1 { p } => {
            write!(out, "{}", serialize_group(&fixtures::example1(p)?))?;
            Ok(0)
        }
        Command::Example2 { p } => {
            write!(out, "{}", serialize_group(&fixtures::example2(p)?))?;
            Ok(0)
        }
        Command::Random { seed, max_degree } => {
            let g = fixtures::random_abelian_cyclic(seed, max_degree);
            write!(out, "{}", serialize_group(&g))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
