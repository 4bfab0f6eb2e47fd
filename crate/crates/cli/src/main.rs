//! `hetcat`: check finite categories and het-bifunctors, find
//! representations, synthesize adjunctions and draw them.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hetcat::instances::CATALOG;
use hetcat::represent::Side;

use hetcat_cli::commands::{self, DotKind};
use hetcat_cli::input::{capacity, load_source, InputError};
use hetcat_cli::report::{Inputs, RunReport};

#[derive(Parser)]
#[command(name = "hetcat", version, about = "Finite heteromorphic adjunctions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Input file in the hetcat language.
    file: Option<PathBuf>,

    /// A named instance instead of a file (see `hetcat list`).
    #[arg(long, conflicts_with = "file")]
    instance: Option<String>,

    /// Declaration to use when the file holds several.
    #[arg(long)]
    name: Option<String>,

    /// Write the JSON report here (`-` for stdout).
    #[arg(long)]
    json: Option<PathBuf>,

    /// Largest number of objects any generated category may have.
    #[arg(long, env = "HETCAT_CAPACITY")]
    max_objects: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Run every applicable law check.
    Check(Common),
    /// Search for representations of a het-bifunctor.
    Represent {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "both")]
        side: SideArg,
    },
    /// Synthesize the adjunction of a het-bifunctor representable on both sides.
    Adjoint {
        #[command(flatten)]
        common: Common,
        /// Print every transposition as a two-rule derivation.
        #[arg(long)]
        gentzen: bool,
        /// Also write the het square of the first unit as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check that the adjunction is recovered from its abstract het-bifunctor.
    VerifyTheorem(Common),
    /// Render a category or an adjunctive square as Graphviz DOT.
    EmitDot {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "category")]
        kind: DotKind,
        /// Object `x` of the square (default: the first).
        #[arg(long)]
        object: Option<String>,
        /// Write DOT here instead of stdout.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// List the named instances.
    List,
}

fn inputs(c: &Common) -> Inputs {
    Inputs {
        file: c.file.as_ref().map(|p| p.display().to_string()),
        instance: c.instance.clone(),
        name: c.name.clone(),
        max_objects: c.max_objects,
        ..Inputs::default()
    }
}

fn write_out(path: &Path, text: &str) -> Result<(), InputError> {
    if path == Path::new("-") {
        print!("{text}");
        return Ok(());
    }
    std::fs::write(path, text).map_err(|source| InputError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn run(command: Command) -> ExitCode {
    if let Command::List = command {
        for e in CATALOG {
            println!("{:<22} {}", e.pattern, e.summary);
        }
        return ExitCode::SUCCESS;
    }
    let (name, common) = match &command {
        Command::Check(c) => ("check", c),
        Command::Represent { common, .. } => ("represent", common),
        Command::Adjoint { common, .. } => ("adjoint", common),
        Command::VerifyTheorem(c) => ("verify-theorem", c),
        Command::EmitDot { common, .. } => ("emit-dot", common),
        Command::List => unreachable!(),
    };
    let common = common.clone();
    let mut r = RunReport::new(name, inputs(&common));
    let mut stdout_text = None;
    let result = (|| -> Result<(), InputError> {
        let src = load_source(
            common.file.as_deref(),
            common.instance.as_deref(),
            capacity(common.max_objects),
        )?;
        r.stage("load");
        let sel = common.name.as_deref();
        match &command {
            Command::Check(_) => commands::check(&mut r, &src)?,
            Command::Represent { side, .. } => {
                r.inputs.side = Some(format!("{side:?}").to_lowercase());
                let sides = match side {
                    SideArg::Left => vec![Side::Left],
                    SideArg::Right => vec![Side::Right],
                    SideArg::Both => vec![Side::Left, Side::Right],
                };
                commands::represent(&mut r, &src, sel, &sides)?;
            }
            Command::Adjoint { gentzen, dot, .. } => {
                let pacioli = common.instance.as_deref() == Some("pacioli:demo");
                let adj = commands::adjoint(&mut r, &src, sel, *gentzen, pacioli)?;
                let echoed: String = r
                    .artifacts
                    .iter()
                    .filter(|a| a.name == "pacioli-unit" || (a.name == "gentzen" && *gentzen))
                    .map(|a| a.text.as_str())
                    .collect();
                if !echoed.is_empty() {
                    stdout_text = Some(echoed);
                }
                if let (Some(path), Some(adj)) = (dot, adj) {
                    if let Some(core) = adj.het_core() {
                        let x = adj.x().objects().next().expect("nonempty");
                        let sq = adj.het_square(core.het_unit(x)).expect("het core");
                        write_out(path, &hetcat::render::het_square_dot(&adj, &sq))?;
                    }
                }
            }
            Command::VerifyTheorem(_) => commands::verify_theorem(&mut r, &src, sel)?,
            Command::EmitDot { kind, object, dot, .. } => {
                r.inputs.kind = Some(format!("{kind:?}").to_lowercase());
                if let Some(text) = commands::emit_dot(&mut r, &src, sel, *kind, object.as_deref())? {
                    match dot {
                        Some(p) => write_out(p, &text)?,
                        None => stdout_text = Some(text),
                    }
                }
            }
            Command::List => unreachable!(),
        }
        Ok(())
    })();
    if let Err(e) = result {
        if let InputError::Parse(_, diags) = &e {
            r.diagnostics = diags.clone();
        }
        r.error(e.to_string());
    }
    r.finish();
    let json_to_stdout = common.json.as_deref() == Some(Path::new("-"));
    if let Some(p) = &common.json {
        if let Err(e) = write_out(p, &r.to_json()) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if !json_to_stdout {
        if let Some(t) = stdout_text {
            print!("{t}");
            eprint!("{}", r.summary());
        } else {
            print!("{}", r.summary());
        }
    }
    ExitCode::from(r.status.exit_code() as u8)
}

fn main() -> ExitCode {
    run(Cli::parse().command)
}
