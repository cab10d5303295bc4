//! The `argsolve` command line.
//!
//! Exit codes: 0 success (and YES for `justify`), 1 NO for `justify`,
//! 2 usage or input errors, 3 frameworks above the enumeration bound.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::classify;
use crate::error::Error;
use crate::framework::Framework;
use crate::io::{emit_dot, emit_extensions, emit_trace, extensions_json, render_set, InputFormat};
use crate::operators::kleene_least_fixpoint;
use crate::semantics::{
    enumerate, justification, EnumerationOptions, SemanticsKind, DEFAULT_MAX_ARGS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TOO_LARGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "argsolve",
    version,
    about = "Solver for finite abstract argumentation frameworks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Framework file (.tgf or .apx)
    #[arg(short = 'f', long = "file")]
    file: PathBuf,
    /// Input format; inferred from the file extension when omitted
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Debug, Args)]
struct Bound {
    /// Largest framework to enumerate extensions for
    #[arg(long = "max-args", env = "ARGSOLVE_MAX_ARGS", default_value_t = DEFAULT_MAX_ARGS)]
    max_args: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Tgf,
    Apx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Credulous,
    #[value(alias = "skeptical")]
    Sceptical,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every extension under a semantics
    Extensions {
        #[command(flatten)]
        input: Input,
        /// conflict-free, naive, self-defending, admissible, complete,
        /// preferred, stable or grounded
        #[arg(short = 's', long = "semantics")]
        semantics: SemanticsKind,
        #[command(flatten)]
        bound: Bound,
        /// Print at most this many extensions
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Decide credulous or sceptical acceptance of one argument
    Justify {
        #[command(flatten)]
        input: Input,
        /// complete, preferred, stable or grounded
        #[arg(short = 's', long = "semantics")]
        semantics: SemanticsKind,
        #[arg(short = 'a', long = "argument")]
        argument: String,
        #[arg(long, value_enum)]
        mode: Mode,
        #[command(flatten)]
        bound: Bound,
    },
    /// Report structural and semantic properties
    Classify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        bound: Bound,
        #[arg(long)]
        json: bool,
    },
    /// Print the grounded extension
    Grounded {
        #[command(flatten)]
        input: Input,
        /// Print every Kleene iteration step before the result
        #[arg(long)]
        trace: bool,
    },
    /// Render the attack graph in Graphviz DOT
    Dot {
        #[command(flatten)]
        input: Input,
    },
    /// Parse the input and report whether it is well formed
    Validate {
        #[command(flatten)]
        input: Input,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::TooLarge { .. } => EXIT_TOO_LARGE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn load(input: &Input) -> Result<Framework, Failure> {
    let format = match input.format {
        Some(FormatArg::Tgf) => InputFormat::Tgf,
        Some(FormatArg::Apx) => InputFormat::Apx,
        None => InputFormat::from_path(&input.file).ok_or_else(|| Failure {
            code: EXIT_USAGE,
            message: format!(
                "cannot infer the format of {}; pass --format tgf|apx",
                input.file.display()
            ),
        })?,
    };
    let text = std::fs::read_to_string(&input.file).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", input.file.display()),
    })?;
    format.parse(&text).map_err(|e| Failure {
        message: format!("{}: {e}", input.file.display()),
        ..Failure::from(e)
    })
}

fn execute(command: Command, out: &mut String) -> Result<i32, Failure> {
    match command {
        Command::Extensions {
            input,
            semantics,
            bound,
            limit,
            json,
        } => {
            let af = load(&input)?;
            let options = EnumerationOptions {
                max_args: bound.max_args,
                limit,
            };
            let found = enumerate(&af, semantics, &options)?;
            if json {
                out.push_str(&extensions_json(&af, &found.extensions).to_string());
                out.push('\n');
            } else {
                out.push_str(&emit_extensions(&af, &found.extensions));
            }
            Ok(EXIT_OK)
        }
        Command::Justify {
            input,
            semantics,
            argument,
            mode,
            bound,
        } => {
            let af = load(&input)?;
            let a = af.argument(&argument)?;
            let options = EnumerationOptions::with_max_args(bound.max_args);
            let status = justification(&af, a, semantics, &options)?;
            let yes = match mode {
                Mode::Credulous => status.credulous,
                Mode::Sceptical => status.sceptical,
            };
            out.push_str(if yes { "YES\n" } else { "NO\n" });
            Ok(if yes { EXIT_OK } else { EXIT_NO })
        }
        Command::Classify { input, bound, json } => {
            let af = load(&input)?;
            let report = classify(&af, &EnumerationOptions::with_max_args(bound.max_args));
            if json {
                out.push_str(&report.to_json().to_string());
                out.push('\n');
            } else {
                for (key, value) in report.entries() {
                    out.push_str(&format!("{key}: {value}\n"));
                }
            }
            if report.semantic_fields_absent() {
                return Err(Failure::from(Error::TooLarge {
                    size: af.len(),
                    bound: bound.max_args,
                }));
            }
            Ok(EXIT_OK)
        }
        Command::Grounded { input, trace } => {
            let af = load(&input)?;
            let iteration = kleene_least_fixpoint(&af);
            if trace {
                out.push_str(&emit_trace(&af, &iteration));
            }
            out.push_str(&render_set(&af, iteration.last()));
            out.push('\n');
            Ok(EXIT_OK)
        }
        Command::Dot { input } => {
            let af = load(&input)?;
            out.push_str(&emit_dot(&af));
            Ok(EXIT_OK)
        }
        Command::Validate { input } => {
            let af = load(&input)?;
            out.push_str(&format!(
                "ok: {} arguments, {} attacks\n",
                af.len(),
                af.attacks().len()
            ));
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code. Results go to `stdout`, diagnostics to `stderr`.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() {
                let _ = write!(stderr, "{err}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{err}");
                EXIT_OK
            };
            return code;
        }
    };
    let mut out = String::new();
    let code = match execute(cli.command, &mut out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    };
    let _ = stdout.write_all(out.as_bytes());
    code
}
