//! One function per subcommand. Each writes to the given sink.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use fivevertex::crystal::{demazure_atom_set, demazure_crystal};
use fivevertex::laurent::{demazure_atom, demazure_char};
use fivevertex::lattice::{enumerate_states, gtp_of_state, partition_function, Family, LatticeState, ModelSpec};
use fivevertex::patterns::GtPattern;
use fivevertex::verify::{sweep, CheckKind, Status, SweepOptions};
use fivevertex::weyl::Permutation;

use crate::document::StateDocument;
use crate::render::render_svg;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatesOut {
    Count,
    Json,
    Svg,
}

fn io(e: std::io::Error) -> CliError {
    CliError::Internal(format!("write failed: {e}"))
}

pub fn model(lambda: &[i64], w: &[usize], family: Family) -> Result<ModelSpec, CliError> {
    let w = Permutation::new(w.to_vec()).map_err(CliError::usage)?;
    ModelSpec::new(lambda, w, family).map_err(CliError::usage)
}

fn perm(lambda: &[i64], w: &[usize]) -> Result<Permutation, CliError> {
    Ok(model(lambda, w, Family::Closed)?.w)
}

pub fn states(
    spec: &ModelSpec,
    gtp: Option<&GtPattern>,
    out: StatesOut,
    dir: Option<&Path>,
    sink: &mut dyn Write,
) -> Result<(), CliError> {
    let mut found: Vec<LatticeState> = enumerate_states(spec);
    if let Some(a) = gtp {
        let mut kept = Vec::new();
        for s in found {
            if gtp_of_state(&s).map_err(CliError::internal)? == *a {
                kept.push(s);
            }
        }
        found = kept;
    }
    match out {
        StatesOut::Count => writeln!(sink, "{}", found.len()).map_err(io),
        StatesOut::Json => {
            for s in &found {
                writeln!(sink, "{}", StateDocument::from_state(s)?.to_json()).map_err(io)?;
            }
            Ok(())
        }
        StatesOut::Svg => match (dir, found.len()) {
            (None, 1) => write!(sink, "{}", render_svg(&found[0])).map_err(io),
            (None, k) => Err(CliError::Usage(format!("{k} states match; pass --dir to write one SVG per state"))),
            (Some(d), _) => {
                fs::create_dir_all(d).map_err(io)?;
                for (k, s) in found.iter().enumerate() {
                    let path: PathBuf = d.join(format!("state-{:04}.svg", k + 1));
                    fs::write(&path, render_svg(s)).map_err(io)?;
                    writeln!(sink, "{}", path.display()).map_err(io)?;
                }
                Ok(())
            }
        },
    }
}

pub fn partfn(spec: &ModelSpec, sink: &mut dyn Write) -> Result<(), CliError> {
    let z = partition_function(spec).map_err(CliError::usage)?;
    writeln!(sink, "{z}").map_err(io)
}

pub fn character(lambda: &[i64], w: &[usize], atom: bool, sink: &mut dyn Write) -> Result<(), CliError> {
    let w = perm(lambda, w)?;
    let p = if atom { demazure_atom(lambda, &w) } else { demazure_char(lambda, &w) }.map_err(CliError::usage)?;
    writeln!(sink, "{p}").map_err(io)
}

pub fn crystal(lambda: &[i64], w: &[usize], atoms: bool, sink: &mut dyn Write) -> Result<(), CliError> {
    let w = perm(lambda, w)?;
    let set = if atoms { demazure_atom_set(lambda, &w) } else { demazure_crystal(lambda, &w) }
        .map_err(CliError::usage)?;
    for t in &set.elements {
        writeln!(sink, "{t}").map_err(io)?;
    }
    Ok(())
}

pub fn verify(opts: &SweepOptions, out: Option<&Path>, sink: &mut dyn Write) -> Result<(), CliError> {
    let reports = sweep(opts).map_err(CliError::usage)?;
    let mut text = String::new();
    for r in &reports {
        text.push_str(&r.to_json_line());
        text.push('\n');
    }
    match out {
        Some(p) => fs::write(p, &text).map_err(io)?,
        None => sink.write_all(text.as_bytes()).map_err(io)?,
    }
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    if failed > 0 {
        return Err(CliError::CheckFailed(failed));
    }
    Ok(())
}

pub fn load_state(path: &Path) -> Result<LatticeState, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Document(format!("{}: {e}", path.display())))?;
    StateDocument::parse(&text)?.to_state()
}

pub fn render(state: &Path, out: Option<&Path>, sink: &mut dyn Write) -> Result<(), CliError> {
    let svg = render_svg(&load_state(state)?);
    match out {
        Some(p) => fs::write(p, svg).map_err(io),
        None => sink.write_all(svg.as_bytes()).map_err(io),
    }
}

pub fn parse_checks(s: &str) -> Result<Vec<CheckKind>, CliError> {
    fivevertex::verify::parse_checks(s).map_err(|e| CliError::Usage(e.to_string()))
}
