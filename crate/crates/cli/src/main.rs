use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orbiforge::cosetenum::{default_max_cosets, todd_coxeter};
use orbiforge::exactgeom::Vec2;
use orbiforge::fixtures::fixture;
use orbiforge::fpgroup::{abelianization, Presentation, SignHom};
use orbiforge::knotcusp::{verdict_by_name, DEFAULT_SEED};
use orbiforge::lattice::{is_rotationally_rhombic, symmetry_order, Lattice2};
use orbiforge::presfile::{parse_presentation, parse_word_list};
use orbiforge::verify::{run_verification, Format};
use orbiforge::wallpaper::{model, orientation_double_cover, SubgroupHandle};
use orbiforge::Error;

/// Exact group theory for Euclidean 2-orbifolds and knot-complement cusps.
#[derive(Parser)]
#[command(name = "orbiforge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Abelian invariants of a presentation file (or `builtin:<name>`).
    Abelianize { file: PathBuf },
    /// Enumerates the cosets of a subgroup.
    Cosets {
        file: PathBuf,
        /// Subgroup generators separated by `;`.
        #[arg(long, default_value = "")]
        subgroup: String,
        #[arg(long)]
        max_cosets: Option<usize>,
        /// Print the coset table.
        #[arg(long)]
        table: bool,
    },
    /// Classifies a wallpaper group, or the kernel of a sign map on it.
    Classify {
        model: String,
        /// e.g. `a=-1,b=+1`; unmentioned generators map to +1.
        #[arg(long)]
        sign: Option<String>,
    },
    /// The orientation double cover of a wallpaper group.
    DoubleCover { model: String },
    /// Whether the lattice spanned by two vectors is rotationally rhombic.
    Rhombic { v1: String, v2: String },
    /// Which cusp types a hyperbolic knot complement can cover.
    Verdict {
        signature: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Runs the verification suite.
    VerifyPaper {
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
}

fn load(file: &PathBuf) -> orbiforge::Result<Presentation> {
    let text = match file.to_str().and_then(|s| s.strip_prefix("builtin:")) {
        Some(name) => fixture(name).ok_or_else(|| Error::InvalidArgument(format!("no bundled presentation `{name}`")))?.to_string(),
        None => std::fs::read_to_string(file)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", file.display())))?,
    };
    parse_presentation(&text)
}

fn vector(s: &str) -> orbiforge::Result<Vec2> {
    s.trim().trim_start_matches('(').trim_end_matches(')').parse()
}

fn run(cmd: Command) -> orbiforge::Result<(String, u8)> {
    Ok(match cmd {
        Command::Abelianize { file } => {
            let p = load(&file)?;
            (format!("{}", abelianization(&p)), 0)
        }
        Command::Cosets { file, subgroup, max_cosets, table } => {
            let p = load(&file)?;
            let sub = parse_word_list(&subgroup, p.generators())?;
            let t = todd_coxeter(&p, &sub, max_cosets.unwrap_or_else(default_max_cosets))?;
            let mut out = format!("index {}", t.index());
            if table {
                let mut cols = Vec::new();
                for g in p.generators() {
                    cols.push(g.clone());
                    cols.push(format!("{g}^-1"));
                }
                out += &format!("\ncoset {}", cols.join(" "));
                for (i, row) in t.rows().iter().enumerate() {
                    let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                    out += &format!("\n{i} {}", cells.join(" "));
                }
            }
            (out, 0)
        }
        Command::Classify { model: name, sign } => {
            let g = model(&name)?;
            let h = match sign {
                Some(s) => SubgroupHandle::kernel(&g, &SignHom::parse(&s, g.presentation())?)?,
                None => SubgroupHandle::whole(&g)?,
            };
            (format!("{}\nindex {}", h.classify()?, h.index()), 0)
        }
        Command::DoubleCover { model: name } => {
            let (h, s) = orientation_double_cover(&model(&name)?)?;
            (format!("{s}\nindex {}", h.index()), 0)
        }
        Command::Rhombic { v1, v2 } => {
            let l = Lattice2::new(vector(&v1)?, vector(&v2)?)?;
            let r = is_rotationally_rhombic(&l)?;
            (format!("{}\nsymmetry order {}", if r { "rhombic" } else { "not rhombic" }, symmetry_order(&l)?), 0)
        }
        Command::Verdict { signature, format } => {
            let v = verdict_by_name(&signature)?;
            let out = match format {
                OutFormat::Json => serde_json::to_string_pretty(&v.to_json()).expect("serializable"),
                OutFormat::Text => {
                    let mut out = match v.reason() {
                        None => format!("{}: realizable ({})", v.signature, v.witness().unwrap_or_default()),
                        Some(r) => format!("{}: excluded ({})", v.signature, serde_json::to_value(r).expect("serializable").as_str().unwrap_or_default()),
                    };
                    for c in &v.checks {
                        out += &format!("\n  {} {}: {}", if c.pass { "pass" } else { "FAIL" }, c.name, c.detail);
                    }
                    for n in &v.notes {
                        out += &format!("\n  note: {n}");
                    }
                    out
                }
            };
            (out, if v.all_checks_pass() { 0 } else { 1 })
        }
        Command::VerifyPaper { only, seed, format } => {
            let r = run_verification(&only, seed)?;
            (r.render(format.into()).trim_end().to_string(), r.exit_code() as u8)
        }
    })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit { .. } => 3,
        Error::Invariant(_) | Error::TheoremCheck(_) | Error::IncompleteTable => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
