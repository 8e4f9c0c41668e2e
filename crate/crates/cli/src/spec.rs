//! Group specs given as catalog tokens or as generator text.

use std::path::Path;

use gt_core::perm_core::{FiniteGroup, Permutation};
use gt_core::{catalog, Error};
use serde::Serialize;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum Provenance {
    /// Canonical catalog name.
    Catalog(String),
    /// Path of the generator file.
    File(String),
    Inline,
}

#[derive(Debug, Clone)]
pub struct GroupSpec {
    pub source: String,
    pub provenance: Provenance,
    pub group: FiniteGroup,
}

impl GroupSpec {
    /// The resolved generators in the generator-file format.
    pub fn to_file_text(&self) -> String {
        let mut out = format!("degree: {}\n", self.group.degree());
        for g in self.group.generators() {
            out.push_str(&format!("gen: {g}\n"));
        }
        out
    }
}

fn looks_like_generator_text(text: &str) -> bool {
    text.split(['\n', ';'])
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("degree:"))
}

/// An existing file is read as generator text. Otherwise text starting with `degree:` is parsed
/// inline, and anything else as a catalog token.
///
/// Inline text may separate lines with `;`.
pub fn parse_group_spec(text: &str) -> CliResult<GroupSpec> {
    let path = Path::new(text);
    if !text.trim().is_empty() && !looks_like_generator_text(text) && path.is_file() {
        let body = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io { path: text.to_string(), message: e.to_string() })?;
        let group = parse_generator_text(&body)?;
        return Ok(GroupSpec { source: text.to_string(), provenance: Provenance::File(text.to_string()), group });
    }
    if looks_like_generator_text(text) {
        let group = parse_generator_text(&text.replace(';', "\n"))?;
        return Ok(GroupSpec { source: text.to_string(), provenance: Provenance::Inline, group });
    }
    let (name, group) = catalog::parse(text).map_err(|e| match e {
        Error::Precondition(message) => CliError::Parse { line: 1, column: 1, message },
        other => CliError::Core(other),
    })?;
    Ok(GroupSpec { source: text.to_string(), provenance: Provenance::Catalog(name), group })
}

/// Parses the `degree: n` / `gen: <cycles>` format with 1-based points.
pub fn parse_generator_text(text: &str) -> CliResult<FiniteGroup> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim_start();
        let indent = raw.len() - trimmed.len();
        if trimmed.trim().is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |column: usize, message: String| CliError::Parse { line, column, message };
        let Some((key, rest)) = trimmed.split_once(':') else {
            return Err(err(indent + 1, "expected 'degree:' or 'gen:'".into()));
        };
        // Column of the first character after the colon.
        let value_col = indent + key.len() + 2;
        match key.trim() {
            "degree" => {
                if degree.is_some() {
                    return Err(err(indent + 1, "duplicate degree line".into()));
                }
                let n: usize =
                    rest.trim().parse().map_err(|_| err(value_col, format!("invalid degree '{}'", rest.trim())))?;
                if n == 0 {
                    return Err(err(value_col, "degree must be positive".into()));
                }
                degree = Some(n);
            }
            "gen" => {
                let n = degree.ok_or_else(|| err(indent + 1, "generator before the degree line".into()))?;
                let p = Permutation::parse_cycles(rest, n).map_err(|e| match e {
                    Error::Parse { position, message } => err(value_col + position - 1, message),
                    other => err(value_col, other.to_string()),
                })?;
                gens.push(p);
            }
            other => return Err(err(indent + 1, format!("unknown key '{other}'"))),
        }
    }
    let n = degree.ok_or(CliError::Parse { line: 1, column: 1, message: "missing 'degree:' line".into() })?;
    Ok(FiniteGroup::new(n, gens)?)
}
