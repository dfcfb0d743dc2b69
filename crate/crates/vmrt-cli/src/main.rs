use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use vmrt_core::atlas::{enumerate, isotropy_dimension, kac_diagram, lookup, SymmetricSpaceEntry};
use vmrt_core::exec::Execution;
use vmrt_core::render_io::{
    atlas_catalog, parse_marked, to_ascii, to_canonical_text, to_dot, to_json_value, to_latex, Drawable,
};
use vmrt_core::verify::run_all;
use vmrt_core::vmrt_engine::{fold, identify, vmrt, z_dimension, z_orbit_diagram, FoldingPair};

#[derive(Parser)]
#[command(
    name = "vmrt",
    version,
    about = "VMRTs of wonderful compactifications from marked Kac diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Latex,
    Dot,
    Json,
    Canonical,
}

#[derive(clap::Args)]
struct Entry {
    /// Atlas label, e.g. AI, group-G, herm-EVII (case-insensitive)
    label: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum, default_value = "ascii")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// List atlas entries up to a rank
    List {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Marked Kac diagram of an entry
    Kac(Entry),
    /// Marked Dynkin diagram(s) of the closed orbit Z
    Zorbit(Entry),
    /// Marked Dynkin diagram of the VMRT
    Vmrt(Entry),
    /// Dimension of G/P for a marked diagram in canonical text
    Dim {
        diagram: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Apply a diagram folding
    Fold {
        diagram: String,
        /// swap, A2l-Bl, A2l-1-Cl, Dl+1-Bl, A2-A1 or E6-F4
        #[arg(long)]
        pair: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Run the acceptance checks
    Verify {
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
        /// Run checks on one thread
        #[arg(long)]
        sequential: bool,
    },
    /// Write the JSON atlas catalog
    ExportAtlas {
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Verification,
    Io(String),
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(1),
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::List { max_rank, format } => Ok(list(max_rank, format)),
        Command::Kac(a) => kac(&a),
        Command::Zorbit(a) => zorbit(&a),
        Command::Vmrt(a) => vmrt_cmd(&a),
        Command::Dim { diagram, format } => {
            let d = parse_marked(&diagram).map_err(|e| Failure::Usage(format!("{diagram}: {e}")))?;
            let info = vec![format!("{}, dim {}", identify(&d), z_dimension(&d))];
            Ok(render(
                format,
                &info,
                &[&d],
                json!({ "dimension": z_dimension(&d), "identification": identify(&d) }),
            ))
        }
        Command::Fold { diagram, pair, format } => {
            let p = FoldingPair::from_name(&pair).ok_or_else(|| {
                let names: Vec<&str> = FoldingPair::ALL.iter().map(|p| p.name()).collect();
                Failure::Usage(format!(
                    "unknown folding pair {pair}; expected one of {}",
                    names.join(", ")
                ))
            })?;
            let d = parse_marked(&diagram).map_err(|e| Failure::Usage(format!("{diagram}: {e}")))?;
            let f = fold(&d, p).map_err(|e| Failure::Usage(format!("{diagram}: {e}")))?;
            let info = vec![format!("{} -> {}, dim {}", identify(&d), identify(&f), z_dimension(&f))];
            Ok(render(
                format,
                &info,
                &[&f],
                json!({ "pair": p.name(), "source": to_canonical_text(&d), "dimension": z_dimension(&f), "identification": identify(&f) }),
            ))
        }
        Command::Verify { max_rank, sequential } => {
            let exec = if sequential {
                Execution::Sequential
            } else {
                Execution::available()
            };
            let report = run_all(max_rank, exec);
            print!("{}", report.table());
            if report.passed() {
                Ok(String::new())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::ExportAtlas { max_rank, out } => {
            let mut text = serde_json::to_string_pretty(&atlas_catalog(max_rank)).expect("plain data");
            text.push('\n');
            match out {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
    }
}

fn entry(a: &Entry) -> Result<SymmetricSpaceEntry, Failure> {
    let mut params = BTreeMap::new();
    if let Some(n) = a.n {
        params.insert("n".to_string(), n);
    }
    if let Some(m) = a.m {
        params.insert("m".to_string(), m);
    }
    lookup(&a.label, &params).map_err(|e| Failure::Usage(e.to_string()))
}

fn engine_error(e: &SymmetricSpaceEntry, err: vmrt_core::Error) -> Failure {
    Failure::Usage(format!("{}: {err}", e.name()))
}

fn kac(a: &Entry) -> Outcome {
    let e = entry(a)?;
    let k = kac_diagram(&e);
    let info = vec![
        format!("{}: G = {}, H = {}", e.name(), e.g_desc, e.h_desc),
        format!("{}, dim G/H {}", k.diagram(), isotropy_dimension(&e)),
    ];
    Ok(render(
        a.format,
        &info,
        &[&k],
        json!({ "entry": e.name(), "affine": k.diagram().to_string(), "isotropy_dimension": isotropy_dimension(&e) }),
    ))
}

fn zorbit(a: &Entry) -> Outcome {
    let e = entry(a)?;
    let z = z_orbit_diagram(&kac_diagram(&e), e.kind).map_err(|err| engine_error(&e, err))?;
    let names: Vec<String> = z.iter().map(identify).collect();
    let info = vec![format!(
        "{}: Z = {}, dim {}",
        e.name(),
        names.join(" and "),
        z_dimension(&z[0])
    )];
    let refs: Vec<&dyn Drawable> = z.iter().map(|d| d as &dyn Drawable).collect();
    Ok(render(
        a.format,
        &info,
        &refs,
        json!({ "entry": e.name(), "dimension": z_dimension(&z[0]), "identification": names.join(" and ") }),
    ))
}

fn vmrt_cmd(a: &Entry) -> Outcome {
    let e = entry(a)?;
    let v = vmrt(&e).map_err(|err| engine_error(&e, err))?;
    let mut info = vec![format!("{}, dim {}", v.identification, v.dimension)];
    if let Some(alias) = &v.alias {
        info.push(format!("tabulated as {alias}"));
    }
    if let Some(note) = &v.ambient_note {
        info.push(note.clone());
    }
    let refs: Vec<&dyn Drawable> = v.components.iter().map(|d| d as &dyn Drawable).collect();
    Ok(render(
        a.format,
        &info,
        &refs,
        json!({
            "entry": e.name(),
            "kind": v.kind.as_str(),
            "dimension": v.dimension,
            "identification": v.identification,
            "tabulated_name": v.alias,
            "note": v.ambient_note,
        }),
    ))
}

/// Info lines then diagrams; comments in LaTeX and DOT, one object in JSON.
fn render(format: Format, info: &[String], diagrams: &[&dyn Drawable], mut meta: Value) -> String {
    let comment = match format {
        Format::Latex => "% ",
        Format::Dot => "// ",
        _ => "",
    };
    if format == Format::Json {
        meta["diagrams"] = diagrams.iter().map(|d| to_json_value(*d)).collect();
        let mut s = serde_json::to_string_pretty(&meta).expect("plain data");
        s.push('\n');
        return s;
    }
    let mut out: String = info.iter().map(|l| format!("{comment}{l}\n")).collect();
    for d in diagrams {
        let body = match format {
            Format::Ascii => to_ascii(*d),
            Format::Latex => to_latex(*d),
            Format::Dot => to_dot(*d),
            Format::Canonical => to_canonical_text(*d),
            Format::Json => unreachable!(),
        };
        out.push_str(&body);
        if !body.ends_with('\n') {
            out.push('\n');
        }
    }
    out
}

fn list(max_rank: usize, format: Format) -> String {
    let entries = enumerate(max_rank);
    if format == Format::Json {
        let rows: Vec<Value> = entries
            .iter()
            .map(|e| {
                json!({
                    "name": e.name(),
                    "kind": e.kind.as_str(),
                    "g": e.g_desc,
                    "h": e.h_desc,
                    "kac": kac_diagram(e).diagram().to_string(),
                    "restricted_type": e.restricted_type.to_string(),
                    "boundary_degree": e.boundary_degree,
                })
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&Value::from(rows)).expect("plain data");
        s.push('\n');
        return s;
    }
    entries
        .iter()
        .map(|e| {
            format!(
                "{:<22} {:<24} {:<18} {:<22} {:<10} {:<6} d={}\n",
                e.name(),
                e.kind.as_str(),
                e.g_desc,
                e.h_desc,
                kac_diagram(e).diagram().to_string(),
                e.restricted_type.to_string(),
                e.boundary_degree
            )
        })
        .collect()
}
