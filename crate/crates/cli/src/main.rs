use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use desargues_cli::fuzz::{self, FuzzSpec, Theorem};
use desargues_cli::{check, demo, exit, figure};

#[derive(Parser)]
#[command(name = "desargues", version, about = "Exact projective geometry checker")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and evaluate a .geo file.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run seeded random trials of a theorem.
    Fuzz {
        #[arg(long)]
        theorem: Theorem,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = fuzz::DEFAULT_BOUND)]
        bound: i64,
        #[arg(long)]
        json: bool,
    },
    /// Render a .geo file as SVG.
    Figure {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run a worked problem: problem1 or problem2.
    Demo { name: String },
}

fn read(file: &PathBuf) -> Result<String, i32> {
    fs::read_to_string(file).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", file.display());
        exit::IO
    })
}

fn cmd_check(file: PathBuf, json: bool) -> i32 {
    let src = match read(&file) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let path = file.display().to_string();
    match check::check_source(&src) {
        Ok((_, report)) => {
            if json {
                println!("{}", check::report_json(&path, &report));
            } else {
                print!("{}", check::report_text(&path, &report));
            }
            if report.passed() {
                exit::PASS
            } else {
                exit::FAIL
            }
        }
        Err(err) => {
            if json {
                println!("{}", check::parse_error_json(&path, &err));
            } else {
                eprint!("{}", check::parse_error_text(&path, &err));
            }
            exit::USAGE
        }
    }
}

fn cmd_fuzz(spec: FuzzSpec, json: bool) -> i32 {
    match fuzz::run(&spec) {
        Ok(run) => {
            let text = if json { run.to_json_lines() } else { run.to_text() };
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return exit::IO;
            }
            if run.falsified() {
                exit::FAIL
            } else {
                exit::PASS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit::USAGE
        }
    }
}

fn cmd_figure(file: PathBuf, output: PathBuf) -> i32 {
    let src = match read(&file) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let path = file.display().to_string();
    let (program, report) = match check::check_source(&src) {
        Ok(parsed) => parsed,
        Err(err) => {
            eprint!("{}", check::parse_error_text(&path, &err));
            return exit::USAGE;
        }
    };
    if !report.errors.is_empty() {
        for e in &report.errors {
            eprintln!("{path}:{e}");
        }
        return exit::FAIL;
    }
    match fs::write(&output, figure::render(&program, &report)) {
        Ok(()) => exit::PASS,
        Err(e) => {
            eprintln!("error: cannot write {}: {e}", output.display());
            exit::IO
        }
    }
}

fn cmd_demo(name: &str) -> i32 {
    match demo::run(name) {
        Some(d) => {
            print!("{}", d.report);
            if d.ok {
                exit::PASS
            } else {
                exit::FAIL
            }
        }
        None => {
            eprintln!(
                "error: unknown demo `{name}` (expected one of: {})",
                demo::NAMES.join(", ")
            );
            exit::USAGE
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Check { file, json } => cmd_check(file, json),
        Command::Fuzz {
            theorem,
            trials,
            seed,
            bound,
            json,
        } => cmd_fuzz(
            FuzzSpec {
                theorem,
                trials,
                seed,
                bound,
            },
            json,
        ),
        Command::Figure { file, output } => cmd_figure(file, output),
        Command::Demo { name } => cmd_demo(&name),
    };
    ExitCode::from(code as u8)
}
