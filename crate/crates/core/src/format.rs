//! The `.alg` text format and the module-expression grammar.
//!
//! ```text
//! # two-vertex example
//! vertices: 1 2
//! arrow: alpha 1 2
//! arrow: beta 2 1
//! arrow: gamma 2 2
//! monomial: beta.alpha, gamma.gamma
//! field: Q
//! ```
//!
//! Paths are written in traversal order: `a.b` walks `a` then `b`, which is the
//! algebra product `b·a`. Relation lines hold comma-separated relations whose
//! terms are `c*path` with `c` an integer or fraction `n/d`; several
//! `relations:` lines accumulate. `nilpotency: N` adds `J^N` to the ideal.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Algebra, IdealSpec, Relation};
use crate::error::{Error, Result};
use crate::field::{format_rational, parse_rational, FieldSpec};
use crate::quiver::{Path, Quiver};

fn section_of(key: &str) -> &'static str {
    match key {
        "vertices" | "arrow" => "quiver",
        "truncated" | "monomial" | "relations" | "nilpotency" => "ideal",
        "field" => "field",
        _ => "header",
    }
}

/// Parses an `.alg` document.
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let mut vertices: Option<(usize, Vec<String>)> = None;
    let mut arrows: Vec<(usize, String, String, String)> = Vec::new();
    let mut truncated: Option<(usize, usize)> = None;
    let mut monomial: Option<(usize, String)> = None;
    let mut relations: Vec<(usize, String)> = Vec::new();
    let mut nilpotency: Option<(usize, usize)> = None;
    let mut field = FieldSpec::Rationals;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            return Err(Error::parse("header", line_no, format!("expected `key: value`, found {line:?}")));
        };
        let key = key.trim();
        let value = value.trim();
        let section = section_of(key);
        let err = |m: String| Error::parse(section, line_no, m);
        match key {
            "vertices" => {
                if vertices.is_some() {
                    return Err(err("duplicate vertices line".into()));
                }
                vertices = Some((line_no, value.split_whitespace().map(str::to_string).collect()));
            }
            "arrow" => {
                let parts: Vec<&str> = value.split_whitespace().collect();
                if parts.len() != 3 {
                    return Err(err(format!("expected `arrow: name source target`, found {value:?}")));
                }
                arrows.push((line_no, parts[0].into(), parts[1].into(), parts[2].into()));
            }
            "truncated" => {
                let k = value.parse().map_err(|_| err(format!("bad truncation exponent {value:?}")))?;
                truncated = Some((line_no, k));
            }
            "monomial" => monomial = Some((line_no, value.to_string())),
            "relations" => relations.push((line_no, value.to_string())),
            "nilpotency" => {
                let n = value.parse().map_err(|_| err(format!("bad nilpotency bound {value:?}")))?;
                nilpotency = Some((line_no, n));
            }
            "field" => field = parse_field(value).ok_or_else(|| err(format!("unknown field {value:?}")))?,
            _ => return Err(err(format!("unknown key {key:?}"))),
        }
    }

    let (vline, names) = vertices.ok_or_else(|| Error::parse("quiver", 0, "missing vertices line"))?;
    let vref: Vec<&str> = names.iter().map(String::as_str).collect();
    let aref: Vec<(&str, &str, &str)> = arrows.iter().map(|(_, n, s, t)| (n.as_str(), s.as_str(), t.as_str())).collect();
    let quiver = Quiver::new(&vref, &aref).map_err(|e| {
        let line = arrows.last().map(|a| a.0).unwrap_or(vline);
        Error::parse("quiver", line, e.to_string())
    })?;

    let given = [truncated.is_some(), monomial.is_some(), !relations.is_empty()];
    if given.iter().filter(|&&b| b).count() != 1 {
        return Err(Error::parse("ideal", 0, "exactly one of truncated, monomial, relations is required"));
    }
    let ideal = if let Some((_, k)) = truncated {
        IdealSpec::Truncated(k)
    } else if let Some((line, m)) = monomial {
        let gens = m
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| quiver.parse_path(s).map_err(|e| Error::parse("ideal", line, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        IdealSpec::Monomial(gens)
    } else {
        let mut rels = Vec::new();
        for (line, text) in &relations {
            for r in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                rels.push(parse_relation(&quiver, r).map_err(|m| Error::parse("ideal", *line, m))?);
            }
        }
        let (_, n) = nilpotency.ok_or_else(|| Error::parse("ideal", relations[0].0, "relations need a nilpotency bound"))?;
        IdealSpec::Relations { relations: rels, nilpotency: n }
    };
    if nilpotency.is_some() && relations.is_empty() {
        return Err(Error::parse("ideal", nilpotency.map(|n| n.0).unwrap_or(0), "nilpotency only applies to relations"));
    }
    Algebra::new(quiver, ideal, field).map_err(|e| Error::parse("ideal", 0, e.to_string()))
}

fn parse_field(s: &str) -> Option<FieldSpec> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    match parts.as_slice() {
        ["Q"] => Some(FieldSpec::Rationals),
        ["Fp", p] => FieldSpec::prime(p.parse().ok()?),
        _ => None,
    }
}

/// Parses `c1*p1 + c2*p2 - p3`; a missing coefficient is 1.
fn parse_relation(q: &Quiver, s: &str) -> std::result::Result<Relation, String> {
    let mut terms = Vec::new();
    let mut rest = s.trim();
    let mut sign = BigRational::one();
    if let Some(r) = rest.strip_prefix('-') {
        sign = -sign;
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = rest[..end].trim();
        if term.is_empty() {
            return Err(format!("empty term in relation {s:?}"));
        }
        let (coef, path) = match term.split_once('*') {
            Some((c, p)) => (parse_rational(c.trim()).ok_or_else(|| format!("bad coefficient {c:?}"))?, p.trim()),
            None => (BigRational::one(), term),
        };
        let p = q.parse_path(path).map_err(|e| e.to_string())?;
        terms.push((sign.clone() * coef, p));
        if end == rest.len() {
            break;
        }
        sign = if rest[end..].starts_with('-') { -BigRational::one() } else { BigRational::one() };
        rest = rest[end + 1..].trim_start();
    }
    Ok(Relation { terms })
}

fn path_text(q: &Quiver, p: &Path) -> String {
    p.traversal_string(q)
}

/// Prints an algebra in canonical `.alg` form; `parse_algebra` inverts it.
pub fn print_algebra(alg: &Algebra) -> String {
    let q = alg.quiver();
    let mut out = String::new();
    let names: Vec<&str> = (0..q.vertex_count()).map(|v| q.vertex_name(v)).collect();
    let _ = writeln!(out, "vertices: {}", names.join(" "));
    for a in q.arrows() {
        let _ = writeln!(out, "arrow: {} {} {}", a.name, q.vertex_name(a.source), q.vertex_name(a.target));
    }
    match alg.ideal() {
        IdealSpec::Truncated(k) => {
            let _ = writeln!(out, "truncated: {k}");
        }
        IdealSpec::Monomial(gens) => {
            let g: Vec<String> = gens.iter().map(|p| path_text(q, p)).collect();
            let _ = writeln!(out, "monomial: {}", g.join(", "));
        }
        IdealSpec::Relations { relations, nilpotency } => {
            for r in relations {
                let _ = writeln!(out, "relations: {}", relation_text(q, r));
            }
            let _ = writeln!(out, "nilpotency: {nilpotency}");
        }
    }
    let _ = writeln!(out, "field: {}", alg.field());
    out
}

pub fn relation_text(q: &Quiver, r: &Relation) -> String {
    let mut s = String::new();
    for (i, (c, p)) in r.terms.iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if !a.is_one() {
            let _ = write!(s, "{}*", format_rational(&a));
        }
        s.push_str(&path_text(q, p));
    }
    if r.terms.is_empty() || r.terms.iter().all(|(c, _)| c.is_zero()) {
        s = "0".into();
    }
    s
}

/// A module expression; evaluated combinatorially (to a multiset of path classes) or linearly
/// (to a representation) by the shell.
#[derive(Clone, Debug, PartialEq)]
pub enum ModuleExpr {
    Path(String),
    Simple(String),
    Proj(String),
    Inj(String),
    Scaled(usize, Box<ModuleExpr>),
    Sum(Vec<ModuleExpr>),
    Rep {
        dims: Vec<(String, usize)>,
        maps: Vec<(String, Vec<Vec<BigRational>>)>,
    },
    /// A named generator such as `M_alpha(1,3)`.
    Call(String, Vec<BigRational>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Num(BigRational),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |m: String| Error::parse("module", 1, m);
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let start = i;
            i += 1;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(parse_rational(&text).ok_or_else(|| err(format!("bad number {text:?}")))?));
        } else if c.is_alphanumeric() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '.') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+*(){}[];:=,".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(err(format!("unexpected character {c:?} at offset {i}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn err(&self, m: impl Into<String>) -> Error {
        Error::parse("module", 1, format!("{} (token {})", m.into(), self.pos + 1))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn eat(&mut self, c: char) -> Result<()> {
        match self.next() {
            Some(Tok::Sym(d)) if d == c => Ok(()),
            other => Err(self.err(format!("expected {c:?}, found {other:?}"))),
        }
    }

    fn at(&self, c: char) -> bool {
        matches!(self.peek(), Some(Tok::Sym(d)) if *d == c)
    }

    fn sum(&mut self) -> Result<ModuleExpr> {
        let mut parts = vec![self.term()?];
        while self.at('+') {
            self.pos += 1;
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 { parts.pop().expect("one part") } else { ModuleExpr::Sum(parts) })
    }

    fn term(&mut self) -> Result<ModuleExpr> {
        if let Some(Tok::Num(k)) = self.peek().cloned() {
            self.pos += 1;
            self.eat('*')?;
            let k = if k.is_integer() && !k.is_negative() {
                k.to_integer().try_into().map_err(|_| self.err("multiplicity too large"))?
            } else {
                return Err(self.err("multiplicity must be a natural number"));
            };
            return Ok(ModuleExpr::Scaled(k, Box::new(self.atom()?)));
        }
        self.atom()
    }

    fn word(&mut self) -> Result<String> {
        match self.next() {
            Some(Tok::Ident(s)) => Ok(s),
            Some(Tok::Num(n)) if n.is_integer() => Ok(n.to_string()),
            other => Err(self.err(format!("expected a name, found {other:?}"))),
        }
    }

    fn atom(&mut self) -> Result<ModuleExpr> {
        if self.at('(') {
            self.pos += 1;
            let e = self.sum()?;
            self.eat(')')?;
            return Ok(e);
        }
        let name = self.word()?;
        if name == "rep" {
            return self.rep();
        }
        self.eat('(')?;
        let e = match name.as_str() {
            "path" => ModuleExpr::Path(self.word()?),
            "simple" => ModuleExpr::Simple(self.word()?),
            "proj" => ModuleExpr::Proj(self.word()?),
            "inj" => ModuleExpr::Inj(self.word()?),
            _ => {
                let mut args = Vec::new();
                while !self.at(')') {
                    match self.next() {
                        Some(Tok::Num(n)) => args.push(n),
                        other => return Err(self.err(format!("expected a number argument, found {other:?}"))),
                    }
                    if self.at(',') {
                        self.pos += 1;
                    }
                }
                ModuleExpr::Call(name, args)
            }
        };
        self.eat(')')?;
        Ok(e)
    }

    fn rep(&mut self) -> Result<ModuleExpr> {
        self.eat('{')?;
        let mut dims = Vec::new();
        let mut maps = Vec::new();
        while !self.at('}') {
            if self.at(';') {
                self.pos += 1;
                continue;
            }
            let name = self.word()?;
            if self.at(':') {
                self.pos += 1;
                match self.next() {
                    Some(Tok::Num(n)) if n.is_integer() && !n.is_negative() => {
                        dims.push((name, n.to_integer().try_into().map_err(|_| self.err("dimension too large"))?))
                    }
                    other => return Err(self.err(format!("expected a dimension, found {other:?}"))),
                }
            } else {
                self.eat('=')?;
                maps.push((name, self.matrix()?));
            }
        }
        self.eat('}')?;
        Ok(ModuleExpr::Rep { dims, maps })
    }

    fn matrix(&mut self) -> Result<Vec<Vec<BigRational>>> {
        self.eat('[')?;
        let mut rows = Vec::new();
        while self.at('[') {
            self.pos += 1;
            let mut row = Vec::new();
            while !self.at(']') {
                match self.next() {
                    Some(Tok::Num(n)) => row.push(n),
                    other => return Err(self.err(format!("expected a matrix entry, found {other:?}"))),
                }
                if self.at(',') {
                    self.pos += 1;
                }
            }
            self.eat(']')?;
            rows.push(row);
            if self.at(',') {
                self.pos += 1;
            }
        }
        self.eat(']')?;
        Ok(rows)
    }
}

pub fn parse_module(s: &str) -> Result<ModuleExpr> {
    let mut p = Parser { toks: lex(s)?, pos: 0 };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SEC4: &str = "vertices: 1 2\narrow: alpha 1 2\narrow: beta 2 1\narrow: gamma 2 2\nmonomial: beta.alpha, gamma.gamma\n";

    #[test]
    fn round_trip() {
        let a = parse_algebra(SEC4).unwrap();
        assert_eq!(a.dim(), 9);
        let b = parse_algebra(&print_algebra(&a)).unwrap();
        assert_eq!(a, b);
        assert_eq!(print_algebra(&a), print_algebra(&b));
    }

    #[test]
    fn relations_round_trip() {
        let text = "vertices: 1 2 3 4\narrow: a 1 2\narrow: b 2 4\narrow: c 1 3\narrow: d 3 4\nrelations: a.b - 2*c.d\nnilpotency: 3\nfield: Fp 7\n";
        let a = parse_algebra(text).unwrap();
        assert_eq!(a.dim(), 9);
        assert_eq!(parse_algebra(&print_algebra(&a)).unwrap(), a);
    }

    #[test]
    fn rejects_unknown_key_with_line() {
        let err = parse_algebra("vertices: 1\nloops: 3\ntruncated: 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_algebra("vertices: 1 2\narrow: a 1 3\ntruncated: 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { ref section, line: 2, .. } if section == "quiver"));
    }

    #[test]
    fn module_grammar() {
        let e = parse_module("2*(simple(1) + path(a.b)) + M_alpha(1,3) + rep{1:1 2:1; a = [[1/2]]}").unwrap();
        let ModuleExpr::Sum(parts) = e else { panic!() };
        assert_eq!(parts.len(), 3);
        assert!(matches!(&parts[0], ModuleExpr::Scaled(2, _)));
        assert_eq!(parts[1], ModuleExpr::Call("M_alpha".into(), vec![BigRational::one(), BigRational::from_integer(3.into())]));
        assert!(matches!(&parts[2], ModuleExpr::Rep { dims, maps } if dims.len() == 2 && maps.len() == 1));
        assert!(parse_module("simple(1) +").is_err());
    }
}
