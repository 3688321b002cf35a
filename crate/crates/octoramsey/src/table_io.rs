//! Text format for loop and group tables.
//!
//! ```text
//! 3
//! 0
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! # names: a b c
//! ```
//!
//! Line one is the order, line two the identity index, then one row per
//! element. The `# names:` line is optional. Blank lines are ignored.

use std::fmt;

use octoramsey_core::loops::{cyclic, octo16, s3, LoopError, LoopTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableFormatError {
    Parse { line: usize, message: String },
    Table(LoopError),
    UnknownGroup(String),
}

impl fmt::Display for TableFormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableFormatError::Parse { line, message } => write!(f, "line {line}: {message}"),
            TableFormatError::Table(e) => e.fmt(f),
            TableFormatError::UnknownGroup(name) => {
                write!(f, "unknown built-in table `{name}` (expected z<n>, s3 or octo16)")
            }
        }
    }
}

impl std::error::Error for TableFormatError {}

impl From<LoopError> for TableFormatError {
    fn from(e: LoopError) -> Self {
        TableFormatError::Table(e)
    }
}

pub fn parse_table(text: &str) -> Result<LoopTable, TableFormatError> {
    let mut names = None;
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix("# names:") {
            names = Some(rest.split_whitespace().map(String::from).collect::<Vec<_>>());
        } else if !line.is_empty() && !line.starts_with('#') {
            lines.push((i + 1, line));
        }
    }
    let number = |(line, s): (usize, &str)| {
        s.parse::<usize>().map_err(|_| TableFormatError::Parse {
            line,
            message: format!("expected a nonnegative integer, found `{s}`"),
        })
    };
    let mut it = lines.into_iter();
    let missing = |what: &str| TableFormatError::Parse { line: 0, message: format!("missing {what}") };
    let order = number(it.next().ok_or_else(|| missing("order line"))?)?;
    let identity = number(it.next().ok_or_else(|| missing("identity line"))?)?;
    let rows = it
        .map(|(line, s)| s.split_whitespace().map(|tok| number((line, tok))).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LoopTable::new(order, identity, rows, names)?)
}

pub fn write_table(table: &LoopTable) -> String {
    let mut out = format!("{}\n{}\n", table.order(), table.identity());
    for a in 0..table.order() {
        let row: Vec<String> = table.row(a).iter().map(usize::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if let Some(names) = table.names() {
        out.push_str("# names: ");
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}

/// `z<n>`, `s3` or `octo16`.
pub fn builtin(name: &str) -> Result<LoopTable, TableFormatError> {
    match name {
        "s3" => Ok(s3()),
        "octo16" => Ok(octo16()),
        _ => name
            .strip_prefix('z')
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| n > 0)
            .map(cyclic)
            .ok_or_else(|| TableFormatError::UnknownGroup(name.into())),
    }
}
