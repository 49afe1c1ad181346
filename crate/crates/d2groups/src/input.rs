//! Text file formats: permutation generators and presentations.
//!
//! Both formats treat `#` as the start of a comment running to the end of
//! the line.

use std::fs;
use std::path::Path;

use d2groups_core::group::{close_generators, parse_cycle_list, Permutation};
use d2groups_core::presentation::{parse_presentation, Presentation};
use d2groups_core::{Error, GroupTable};

/// Failure to obtain input, before or during parsing.
#[derive(Debug)]
pub enum InputError {
    Io { path: String, source: std::io::Error },
    Parse { path: String, line: Option<usize>, source: Error },
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InputError::Io { path, source } => write!(f, "{path}: {source}"),
            InputError::Parse {
                path,
                line: Some(line),
                source,
            } => write!(f, "{path}:{line}: {source}"),
            InputError::Parse { path, source, .. } => write!(f, "{path}: {source}"),
        }
    }
}

impl std::error::Error for InputError {}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(code, _)| code)
}

/// Removes comments, keeping line structure so error positions stay useful.
pub fn strip_comments(text: &str) -> String {
    text.lines().map(strip_comment).collect::<Vec<_>>().join("\n")
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Parses permutation generators, one per nonblank line in 1-based cycle
/// notation. The degree is the largest point mentioned anywhere.
pub fn parse_permutations(text: &str) -> Result<Vec<Permutation>, (Option<usize>, Error)> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let cycles = parse_cycle_list(line).map_err(|e| (Some(i + 1), e))?;
        lines.push((i + 1, cycles));
    }
    if lines.is_empty() {
        return Err((None, Error::InvalidPermutation("no generators given".into())));
    }
    let degree = lines
        .iter()
        .flat_map(|(_, cs)| cs.iter().flatten())
        .map(|&p| p as usize + 1)
        .max()
        .unwrap_or(1);
    lines
        .into_iter()
        .map(|(n, cs)| Permutation::from_cycles(degree, &cs).map_err(|e| (Some(n), e)))
        .collect()
}

/// Reads a permutation file and closes the generators into a table.
pub fn load_permutation_group(path: &Path, max_order: usize) -> Result<GroupTable, InputError> {
    let text = read(path)?;
    let shown = path.display().to_string();
    let perms = parse_permutations(&text).map_err(|(line, source)| InputError::Parse {
        path: shown.clone(),
        line,
        source,
    })?;
    close_generators(&perms, max_order)
        .map(|(g, _)| g)
        .map_err(|source| InputError::Parse {
            path: shown,
            line: None,
            source,
        })
}

/// Reads a presentation file.
pub fn load_presentation(path: &Path) -> Result<Presentation, InputError> {
    let text = read(path)?;
    parse_presentation(&strip_comments(&text)).map_err(|source| InputError::Parse {
        path: path.display().to_string(),
        line: None,
        source,
    })
}
