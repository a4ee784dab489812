//! The family text format.
//!
//! One line per record, `m c` as rational literals (`p/q` or `p`), meaning
//! `y = m·x + c`. A `#` starts a comment that runs to the end of the line.
//! Lines of the form `#! key=value` are headers and carry provenance; a
//! `name` header becomes the family name. Blank lines are ignored.
//!
//! ```text
//! #! kind=figure10
//! #! l=3
//! 3/5 3/5
//! -3 0   # steep line through the origin
//! ```

use crate::construct::ConstructionSpec;
use crate::error::{Error, Result};
use crate::geom::{Line, LineFamily};
use crate::rat::Rat;

/// A parsed family file: header pairs in file order plus the family.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FamilyFile {
    pub header: Vec<(String, String)>,
    pub family: LineFamily,
}

impl FamilyFile {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.header.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// The construction recorded in the header, if any.
    pub fn spec(&self) -> Option<Result<ConstructionSpec>> {
        let kind = self.get("kind")?;
        Some(ConstructionSpec::from_parts(kind, |key| self.get(key)?.parse().ok()))
    }

    /// A file whose header records `spec` and the family name.
    pub fn from_spec(spec: &ConstructionSpec, family: LineFamily) -> FamilyFile {
        let mut header = vec![("kind".to_string(), spec.kind().to_string())];
        header.extend(spec.params().into_iter().map(|(k, v)| (k.to_string(), v.to_string())));
        FamilyFile { header, family }
    }
}

fn is_infinite(tok: &str) -> bool {
    let t = tok.trim_start_matches(['+', '-']);
    matches!(t.to_ascii_lowercase().as_str(), "inf" | "infinity" | "∞")
        || t.split_once('/').is_some_and(|(n, d)| !n.is_empty() && d.parse::<i64>() == Ok(0))
}

fn parse_record(no: usize, text: &str) -> Result<Line> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    if let Some(t) = toks.iter().find(|t| t.starts_with("x=") || **t == "x") {
        return Err(Error::VerticalLine { line: no, token: (*t).to_string() });
    }
    if toks.len() != 2 {
        return Err(Error::Syntax { line: no, message: format!("expected two rationals \"m c\", found {} tokens", toks.len()) });
    }
    if is_infinite(toks[0]) {
        return Err(Error::VerticalLine { line: no, token: toks[0].to_string() });
    }
    let num = |t: &str| {
        t.parse::<Rat>().map_err(|e| Error::Syntax { line: no, message: format!("{t:?}: {e}") })
    };
    Ok(Line::new(num(toks[0])?, num(toks[1])?))
}

/// Parses a family file. Errors carry 1-based line numbers.
pub fn parse_family_file(text: &str) -> Result<FamilyFile> {
    let mut header = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        if let Some(h) = raw.trim_start().strip_prefix("#!") {
            let (k, v) = h.split_once('=').ok_or_else(|| Error::Syntax {
                line: no,
                message: "header must be \"#! key=value\"".into(),
            })?;
            header.push((k.trim().to_string(), v.trim().to_string()));
            continue;
        }
        let body = raw.split('#').next().unwrap_or_default();
        if body.trim().is_empty() {
            continue;
        }
        lines.push(parse_record(no, body)?);
    }
    let mut family = LineFamily::new(lines)?;
    if let Some((_, name)) = header.iter().find(|(k, _)| k == "name") {
        family = family.with_name(name.clone());
    }
    Ok(FamilyFile { header, family })
}

pub fn parse_family(text: &str) -> Result<LineFamily> {
    parse_family_file(text).map(|f| f.family)
}

/// Canonical text: headers (plus `name` when the family has one and the
/// header lacks it), then one record per line in slope order.
pub fn serialize_family_file(file: &FamilyFile) -> String {
    let mut out = String::new();
    for (k, v) in &file.header {
        out.push_str(&format!("#! {k}={v}\n"));
    }
    if let Some(name) = file.family.name() {
        if file.get("name").is_none() {
            out.push_str(&format!("#! name={name}\n"));
        }
    }
    for l in file.family.iter() {
        out.push_str(&format!("{} {}\n", l.m, l.c));
    }
    out
}

pub fn serialize_family(family: &LineFamily) -> String {
    serialize_family_file(&FamilyFile { header: Vec::new(), family: family.clone() })
}
