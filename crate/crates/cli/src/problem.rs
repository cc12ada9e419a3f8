//! Line-oriented problem files.
//!
//! ```text
//! # comment
//! ring x y z [over Qi]
//! ideal J1 = y - x^2; y
//! data p1 on J1 = x
//! operator L = x^2 + y^2
//! mode pair
//! ```
//!
//! `ring` must come first. Names are unique across ideals, data and the
//! operator; every datum names a declared ideal.

use varinterp::ideal::Ideal;
use varinterp::polyring::parse_polynomial;
use varinterp::{Field, Polynomial, Ring};

use crate::error::CliError;

/// Solver selection for `interpolate`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Disjoint,
    Pair,
    Sequential,
    Restricted,
}

impl Mode {
    fn from_name(name: &str) -> Option<Mode> {
        match name {
            "disjoint" => Some(Mode::Disjoint),
            "pair" => Some(Mode::Pair),
            "sequential" => Some(Mode::Sequential),
            "restricted" => Some(Mode::Restricted),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct NamedIdeal {
    pub name: String,
    pub ideal: Ideal,
}

#[derive(Clone, Debug)]
pub struct Datum {
    pub name: String,
    /// Index into [`ProblemFile::ideals`].
    pub ideal: usize,
    pub value: Polynomial,
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub ring: Ring,
    pub ideals: Vec<NamedIdeal>,
    pub data: Vec<Datum>,
    pub operator: Option<(String, Polynomial)>,
    pub mode: Option<Mode>,
}

impl ProblemFile {
    pub fn ideal_by_name(&self, name: &str) -> Option<&NamedIdeal> {
        self.ideals.iter().find(|i| i.name == name)
    }
}

/// A source line; columns are 1-based and count characters.
struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn syntax(&self, column: usize, message: impl Into<String>) -> CliError {
        CliError::Syntax { line: self.number, column, message: message.into() }
    }

    fn semantic(&self, message: impl Into<String>) -> CliError {
        CliError::Semantic { line: self.number, message: message.into() }
    }

    /// Column of byte offset `at`.
    fn column(&self, at: usize) -> usize {
        self.text[..at].chars().count() + 1
    }

    /// Next whitespace-delimited word at or after byte offset `at`.
    fn word(&self, at: usize) -> Option<(usize, &'a str)> {
        let rest = &self.text[at..];
        let start = at + (rest.len() - rest.trim_start().len());
        let tail = &self.text[start..];
        if tail.is_empty() {
            return None;
        }
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        Some((start, &tail[..len]))
    }

    fn expect_word(&self, at: usize, what: &str) -> Result<(usize, &'a str), CliError> {
        self.word(at).ok_or_else(|| self.syntax(self.column(self.text.len()), format!("expected {what}")))
    }

    /// Skip an exact token such as `=` or `on`.
    fn expect_token(&self, at: usize, token: &str) -> Result<usize, CliError> {
        let rest = &self.text[at..];
        let start = at + (rest.len() - rest.trim_start().len());
        if self.text[start..].starts_with(token) {
            Ok(start + token.len())
        } else {
            Err(self.syntax(self.column(start), format!("expected '{token}'")))
        }
    }

    fn polynomial(&self, ring: &Ring, at: usize, source: &str) -> Result<Polynomial, CliError> {
        parse_polynomial(ring, source).map_err(|e| match e {
            varinterp::Error::Parse { column, message } => {
                let offset = self.column(at) - 1;
                if message.starts_with("unknown variable") {
                    self.semantic(message)
                } else {
                    self.syntax(offset + column, message)
                }
            }
            other => self.semantic(other.to_string()),
        })
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

const KEYWORDS: [&str; 5] = ["ring", "ideal", "data", "operator", "mode"];

/// Parse a problem file. Errors carry 1-based line and column numbers.
pub fn parse_problem(text: &str) -> Result<ProblemFile, CliError> {
    let mut ring: Option<Ring> = None;
    let mut ideals: Vec<NamedIdeal> = Vec::new();
    let mut data: Vec<Datum> = Vec::new();
    let mut operator = None;
    let mut mode = None;
    let mut names: Vec<String> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let line = Line { number: idx + 1, text: content };
        let Some((kpos, key)) = line.word(0) else {
            continue;
        };
        let after_key = kpos + key.len();
        if !KEYWORDS.contains(&key) {
            return Err(line.syntax(line.column(kpos), format!("unknown key '{key}'")));
        }
        if key != "ring" && ring.is_none() {
            return Err(line.semantic("the ring must be declared first"));
        }
        match key {
            "ring" => {
                if ring.is_some() {
                    return Err(line.semantic("ring declared twice"));
                }
                ring = Some(parse_ring(&line, after_key)?);
            }
            "mode" => {
                let (pos, word) = line.expect_word(after_key, "a mode name")?;
                let parsed = Mode::from_name(word)
                    .ok_or_else(|| line.syntax(line.column(pos), format!("unknown mode '{word}'")))?;
                if let Some((extra, _)) = line.word(pos + word.len()) {
                    return Err(line.syntax(line.column(extra), "unexpected text after mode"));
                }
                if mode.replace(parsed).is_some() {
                    return Err(line.semantic("mode declared twice"));
                }
            }
            _ => {
                let ring = ring.as_ref().expect("checked above");
                let (npos, name) = line.expect_word(after_key, "a name")?;
                let name = name.split('=').next().unwrap_or(name);
                if !valid_name(name) {
                    return Err(line.syntax(line.column(npos), format!("invalid name '{name}'")));
                }
                if names.iter().any(|n| n == name) {
                    return Err(line.semantic(format!("duplicate name '{name}'")));
                }
                let mut at = npos + name.len();
                let mut target = None;
                if key == "data" {
                    at = line.expect_token(at, "on")?;
                    let (ipos, iname) = line.expect_word(at, "an ideal name")?;
                    let iname = iname.split('=').next().unwrap_or(iname);
                    let index = ideals
                        .iter()
                        .position(|i| i.name == iname)
                        .ok_or_else(|| line.semantic(format!("unknown ideal '{iname}'")))?;
                    target = Some(index);
                    at = ipos + iname.len();
                }
                at = line.expect_token(at, "=")?;
                let body = &content[at..];
                match key {
                    "ideal" => {
                        let mut gens = Vec::new();
                        let mut offset = at;
                        for piece in body.split(';') {
                            if piece.trim().is_empty() {
                                return Err(line.syntax(line.column(offset), "empty generator"));
                            }
                            gens.push(line.polynomial(ring, offset, piece)?);
                            offset += piece.len() + 1;
                        }
                        let ideal = Ideal::new(ring, gens).expect("generators share the ring");
                        ideals.push(NamedIdeal { name: name.to_string(), ideal });
                    }
                    "data" => {
                        let value = line.polynomial(ring, at, body)?;
                        data.push(Datum { name: name.to_string(), ideal: target.expect("data target"), value });
                    }
                    _ => {
                        if operator.is_some() {
                            return Err(line.semantic("operator declared twice"));
                        }
                        operator = Some((name.to_string(), line.polynomial(ring, at, body)?));
                    }
                }
                names.push(name.to_string());
            }
        }
    }
    let ring = ring.ok_or(CliError::Semantic { line: 0, message: "missing ring declaration".into() })?;
    Ok(ProblemFile { ring, ideals, data, operator, mode })
}

fn parse_ring(line: &Line<'_>, mut at: usize) -> Result<Ring, CliError> {
    let mut vars: Vec<String> = Vec::new();
    let mut field = Field::Rational;
    while let Some((pos, word)) = line.word(at) {
        at = pos + word.len();
        if word == "over" {
            let (fpos, f) = line.expect_word(at, "a field (Q or Qi)")?;
            field = match f {
                "Q" => Field::Rational,
                "Qi" => Field::GaussianRational,
                _ => return Err(line.syntax(line.column(fpos), format!("unknown field '{f}'"))),
            };
            if let Some((extra, _)) = line.word(fpos + f.len()) {
                return Err(line.syntax(line.column(extra), "unexpected text after field"));
            }
            break;
        }
        if !valid_name(word) {
            return Err(line.syntax(line.column(pos), format!("invalid variable name '{word}'")));
        }
        if vars.iter().any(|v| v == word) {
            return Err(line.semantic(format!("duplicate variable '{word}'")));
        }
        vars.push(word.to_string());
    }
    if vars.is_empty() {
        return Err(line.syntax(line.column(at), "ring needs at least one variable"));
    }
    if field == Field::GaussianRational && vars.iter().any(|v| v == "i") {
        return Err(line.semantic("'i' is the imaginary unit over Qi and cannot be a variable"));
    }
    Ok(Ring::new(vars, field))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let p = parse_problem("ring x y\nideal J = y - x^2\ndata p on J = x\n").unwrap();
        assert_eq!(p.ring.vars(), ["x", "y"]);
        assert_eq!(p.ideals.len(), 1);
        assert_eq!(p.data[0].value.to_string(), "x");
        assert_eq!(p.data[0].ideal, 0);
        assert!(p.mode.is_none());
    }

    #[test]
    fn full_file() {
        let text = "# header\nring x y over Qi\nideal J1 = y - x^2; y  # two generators\nideal J2=x\n\
                    data p1 on J1 = i*x\noperator L = x^2 + y^2\nmode restricted\n";
        let p = parse_problem(text).unwrap();
        assert_eq!(p.ring.field(), Field::GaussianRational);
        assert_eq!(p.ideals[0].ideal.generators().len(), 2);
        assert_eq!(p.ideal_by_name("J2").unwrap().ideal.generators()[0].to_string(), "x");
        assert_eq!(p.data[0].value.to_string(), "i*x");
        assert_eq!(p.operator.as_ref().unwrap().0, "L");
        assert_eq!(p.mode, Some(Mode::Restricted));
    }

    fn err(text: &str) -> String {
        parse_problem(text).unwrap_err().to_string()
    }

    #[test]
    fn errors() {
        assert_eq!(err("ring x y\ndata p on K = x\n"), "line 2: unknown ideal 'K'");
        assert_eq!(err("ring x y\nideal J = z\n"), "line 2: unknown variable 'z'");
        assert_eq!(err("ring x\nvariety V = x\n"), "line 2, column 1: unknown key 'variety'");
        assert_eq!(err("ideal J = x\n"), "line 1: the ring must be declared first");
        assert_eq!(err("ring x\nideal J = x\nideal J = x^2\n"), "line 3: duplicate name 'J'");
        assert_eq!(err("ring x\nideal J = x +\n"), "line 2, column 14: unexpected end of input");
        assert_eq!(err("ring x\nideal J = x;; x\n"), "line 2, column 13: empty generator");
        assert_eq!(err("ring 1x\n"), "line 1, column 6: invalid variable name '1x'");
        assert_eq!(err("ring x\nmode fast\n"), "line 2, column 6: unknown mode 'fast'");
        assert_eq!(err("ring x i over Qi\n"), "line 1: 'i' is the imaginary unit over Qi and cannot be a variable");
        assert_eq!(err("ring x\ndata p J = x\n"), "line 2, column 8: expected 'on'");
        assert_eq!(err("# nothing\n"), "missing ring declaration");
    }
}
