//! Text formats for Cayley tables and soft sets, and group spec parsing.
//!
//! Cayley-table files: a line `order n`, then `n` rows of `n` whitespace
//! separated 0-based indices, then an optional `names` line. Identity and
//! inverses are derived, not declared.
//!
//! Soft-set files: a line `universe m label_0 ... label_{m-1}`, then one line
//! per group element `<element-index> : {lab,lab,...}` with `{}` for the
//! empty set. Omitted elements default to empty; input is whitespace
//! insensitive and order insensitive inside braces. Lines starting with `#`
//! are comments.

use crate::group::{FiniteGroup, GroupError};
use crate::soft::{SoftError, SoftSet, Universe};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError { line, col, msg: msg.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, col {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug)]
pub enum IoError {
    Parse(ParseError),
    Group(GroupError),
    Soft(SoftError),
    File(String),
}

impl fmt::Display for IoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IoError::Parse(e) => e.fmt(f),
            IoError::Group(e) => e.fmt(f),
            IoError::Soft(e) => e.fmt(f),
            IoError::File(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for IoError {}

impl From<ParseError> for IoError {
    fn from(e: ParseError) -> Self {
        IoError::Parse(e)
    }
}

impl From<GroupError> for IoError {
    fn from(e: GroupError) -> Self {
        IoError::Group(e)
    }
}

impl From<SoftError> for IoError {
    fn from(e: SoftError) -> Self {
        IoError::Soft(e)
    }
}

/// Numbered, significant lines: comments and blanks skipped.
fn significant_lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
}

/// Tokens of a line with their 1-based starting column.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Parses a Cayley-table file and validates the group axioms.
pub fn parse_group_file(src: &str) -> Result<FiniteGroup, IoError> {
    let mut lines = significant_lines(src);
    let (lno, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "expected `order n`"))?;
    let toks = tokens(header);
    if toks.len() != 2 || toks[0].1 != "order" {
        return Err(ParseError::new(lno, toks.first().map_or(1, |t| t.0), "expected `order n`").into());
    }
    let n: usize = toks[1]
        .1
        .parse()
        .map_err(|_| ParseError::new(lno, toks[1].0, format!("bad order {:?}", toks[1].1)))?;
    if n == 0 {
        return Err(ParseError::new(lno, toks[1].0, "order must be positive").into());
    }

    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let (lno, row) = lines
            .next()
            .ok_or_else(|| ParseError::new(lno, 1, format!("expected {n} table rows")))?;
        let toks = tokens(row);
        if toks.len() != n {
            return Err(ParseError::new(lno, 1, format!("expected {n} entries, found {}", toks.len())).into());
        }
        let mut parsed = Vec::with_capacity(n);
        for (col, tok) in toks {
            let v: usize = tok
                .parse()
                .map_err(|_| ParseError::new(lno, col, format!("bad index {tok:?}")))?;
            if v >= n {
                return Err(ParseError::new(lno, col, format!("index {v} out of range for order {n}")).into());
            }
            parsed.push(v);
        }
        table.push(parsed);
    }

    let mut names = None;
    if let Some((lno, line)) = lines.next() {
        let toks = tokens(line);
        if toks.first().map(|t| t.1) != Some("names") {
            return Err(ParseError::new(lno, toks.first().map_or(1, |t| t.0), "expected `names ...` or end of file").into());
        }
        if toks.len() != n + 1 {
            return Err(ParseError::new(lno, 1, format!("expected {n} names, found {}", toks.len() - 1)).into());
        }
        names = Some(toks[1..].iter().map(|(_, t)| t.to_string()).collect());
        if let Some((lno, _)) = lines.next() {
            return Err(ParseError::new(lno, 1, "unexpected trailing content").into());
        }
    }

    Ok(FiniteGroup::from_table(table, names)?)
}

/// Parses a soft set over `group` from the text format.
pub fn parse_soft_set(group: &FiniteGroup, src: &str) -> Result<SoftSet, IoError> {
    let mut lines = significant_lines(src);
    let (lno, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "expected `universe m labels...`"))?;
    let toks = tokens(header);
    if toks.first().map(|t| t.1) != Some("universe") {
        return Err(ParseError::new(lno, toks.first().map_or(1, |t| t.0), "expected `universe m labels...`").into());
    }
    if toks.len() < 2 {
        return Err(ParseError::new(lno, 1, "expected universe size").into());
    }
    let m: usize = toks[1]
        .1
        .parse()
        .map_err(|_| ParseError::new(lno, toks[1].0, format!("bad universe size {:?}", toks[1].1)))?;
    if toks.len() != m + 2 {
        return Err(ParseError::new(lno, 1, format!("expected {m} labels, found {}", toks.len() - 2)).into());
    }
    let labels: Vec<String> = toks[2..].iter().map(|(_, t)| t.to_string()).collect();
    let universe = Universe::new(labels).map_err(|e| ParseError::new(lno, toks[2].0, e.to_string()))?;

    let mut values = vec![0u64; group.order()];
    let mut seen = vec![false; group.order()];
    for (lno, line) in lines {
        let colon = line
            .find(':')
            .ok_or_else(|| ParseError::new(lno, 1, "expected `<element-index> : {labels}`"))?;
        let lhs = line[..colon].trim();
        let lhs_col = line.find(lhs).unwrap_or(0) + 1;
        let idx: usize = lhs
            .parse()
            .map_err(|_| ParseError::new(lno, lhs_col, format!("bad element index {lhs:?}")))?;
        if idx >= group.order() {
            return Err(ParseError::new(
                lno,
                lhs_col,
                format!("element index {idx} out of range for group of order {}", group.order()),
            )
            .into());
        }
        if seen[idx] {
            return Err(ParseError::new(lno, lhs_col, format!("element {idx} listed twice")).into());
        }
        seen[idx] = true;

        let rhs = line[colon + 1..].trim();
        let rhs_col = colon + 2 + line[colon + 1..].len() - line[colon + 1..].trim_start().len();
        if !rhs.starts_with('{') || !rhs.ends_with('}') {
            return Err(ParseError::new(lno, rhs_col, "expected a braced set like {a,b} or {}").into());
        }
        let body = &rhs[1..rhs.len() - 1];
        let mut mask = 0u64;
        if !body.trim().is_empty() {
            for part in body.split(',') {
                let lab = part.trim();
                if lab.is_empty() {
                    return Err(ParseError::new(lno, rhs_col, "empty label inside braces").into());
                }
                let bit = universe
                    .index_of(lab)
                    .ok_or_else(|| ParseError::new(lno, rhs_col, format!("unknown label {lab:?}")))?;
                mask |= 1u64 << bit;
            }
        }
        values[idx] = mask;
    }

    Ok(SoftSet::from_masks(group, &universe, values)?)
}

/// Renders a soft set in the text format. `validated` adds the comment line
/// recording what the value was checked to be.
pub fn emit_soft_set(f: &SoftSet, validated: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(v) = validated {
        out.push_str(&format!("# validated: {v}\n"));
    }
    let u = f.universe();
    out.push_str(&format!("universe {}", u.size()));
    for l in u.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for x in 0..f.group().order() {
        out.push_str(&format!("{x} : {}\n", u.render_mask(f.mask_at(x))));
    }
    out
}

/// Renders a Cayley table in the group file format.
pub fn emit_group_file(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut out = format!("order {n}\n");
    for i in 0..n {
        let row: Vec<String> = g.table_row(i).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out.push_str("names ");
    out.push_str(&g.names().join(" "));
    out.push('\n');
    out
}

/// Parses a group spec: `cyclic:n`, `dihedral:n`, `klein`, `quaternion`,
/// `symmetric:n`, or `table:PATH`.
pub fn parse_group_spec(spec: &str) -> Result<FiniteGroup, IoError> {
    let (head, arg) = match spec.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (spec, None),
    };
    let need_n = |arg: Option<&str>| -> Result<usize, IoError> {
        let a = arg.ok_or_else(|| IoError::File(format!("group spec {spec:?} needs a parameter, like {head}:3")))?;
        a.parse()
            .map_err(|_| IoError::File(format!("bad group parameter {a:?} in {spec:?}")))
    };
    match head {
        "cyclic" => Ok(FiniteGroup::cyclic(need_n(arg)?)?),
        "dihedral" => Ok(FiniteGroup::dihedral(need_n(arg)?)?),
        "klein" => Ok(FiniteGroup::klein()),
        "quaternion" => Ok(FiniteGroup::quaternion()),
        "symmetric" => Ok(FiniteGroup::symmetric(need_n(arg)?)?),
        "table" => {
            let path = arg.ok_or_else(|| IoError::File("table spec needs a path, like table:g.table".into()))?;
            let src = std::fs::read_to_string(path)
                .map_err(|e| IoError::File(format!("cannot read {path}: {e}")))?;
            parse_group_file(&src)
        }
        _ => Err(IoError::File(format!(
            "unknown group spec {spec:?}; expected cyclic:n, dihedral:n, klein, quaternion, symmetric:n, or table:PATH"
        ))),
    }
}
