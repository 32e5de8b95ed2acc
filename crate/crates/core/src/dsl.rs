//! The line-oriented workspace language.
//!
//! ```text
//! ring X Y Z
//! ideal I = X*Y, Y*Z, X*Z
//! poly f = X - 1/2*Y^2
//! family F = [I, I] sat m      # m: the maximal ideal of the variables
//! ```

use std::fmt;

use indexmap::IndexMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::poly::SparsePoly;
use crate::ring::{Exponent, RingCtx};
use crate::saturation::{maximal_generators, IdealFamily};

/// What a family is saturated by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SatSpec {
    None,
    Maximal,
    Names(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyDecl {
    pub members: Vec<String>,
    pub sat: SatSpec,
    pub family: IdealFamily,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Ideal(MonomialIdeal),
    Poly(SparsePoly),
    Family(FamilyDecl),
}

impl Item {
    fn kind(&self) -> &'static str {
        match self {
            Item::Ideal(_) => "ideal",
            Item::Poly(_) => "poly",
            Item::Family(_) => "family",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Workspace {
    ring: RingCtx,
    items: IndexMap<String, Item>,
}

impl Workspace {
    pub fn ring(&self) -> &RingCtx {
        &self.ring
    }

    pub fn items(&self) -> impl Iterator<Item = (&str, &Item)> {
        self.items.iter().map(|(k, v)| (k.as_str(), v))
    }

    fn lookup(&self, name: &str, want: &str) -> Result<&Item> {
        let item = self.items.get(name).ok_or_else(|| Error::pre(format!("unknown name `{name}`")))?;
        if item.kind() != want {
            return Err(Error::pre(format!("`{name}` is a {}, not a {want}", item.kind())));
        }
        Ok(item)
    }

    pub fn ideal(&self, name: &str) -> Result<&MonomialIdeal> {
        match self.lookup(name, "ideal")? {
            Item::Ideal(i) => Ok(i),
            _ => unreachable!(),
        }
    }

    pub fn poly(&self, name: &str) -> Result<&SparsePoly> {
        match self.lookup(name, "poly")? {
            Item::Poly(p) => Ok(p),
            _ => unreachable!(),
        }
    }

    pub fn family(&self, name: &str) -> Result<&IdealFamily> {
        match self.lookup(name, "family")? {
            Item::Family(f) => Ok(&f.family),
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for Workspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {}", self.ring.var_names().join(" "))?;
        for (name, item) in &self.items {
            match item {
                Item::Ideal(i) => writeln!(f, "ideal {name} = {i}")?,
                Item::Poly(p) => writeln!(f, "poly {name} = {p}")?,
                Item::Family(d) => {
                    write!(f, "family {name} = [{}]", d.members.join(", "))?;
                    match &d.sat {
                        SatSpec::None => writeln!(f)?,
                        SatSpec::Maximal => writeln!(f, " sat m")?,
                        SatSpec::Names(ns) => writeln!(f, " sat {}", ns.join(" "))?,
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Int(s) => write!(f, "`{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
        }
    }
}

/// Tokens of one line with their 1-based columns.
fn lex(line: &str, lineno: usize) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(chars[start..i].iter().collect()), col));
        } else if "^*/,=+-[]".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(Error::Parse { line: lineno, col, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Cursor<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { line: self.line, col: self.col(), msg: msg.into() })
    }

    fn next(&mut self) -> Option<&'a Tok> {
        let t = self.peek();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(t) => self.err(format!("expected `{c}`, found {t}")),
                None => self.err(format!("expected `{c}` before end of line")),
            }
        }
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s.clone())
            }
            Some(t) => self.err(format!("expected {what}, found {t}")),
            None => self.err(format!("expected {what} before end of line")),
        }
    }

    fn done(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => self.err(format!("unexpected {t}")),
        }
    }

    fn int<T: std::str::FromStr>(&mut self, what: &str) -> Result<T> {
        match self.peek() {
            Some(Tok::Int(s)) => {
                let v = s.parse().or_else(|_| self.err(format!("{what} `{s}` is out of range")))?;
                self.pos += 1;
                Ok(v)
            }
            Some(t) => self.err(format!("expected {what}, found {t}")),
            None => self.err(format!("expected {what} before end of line")),
        }
    }
}

/// `VAR('^'INT)? ('*' VAR('^'INT)?)*`, starting at a variable.
fn monomial(cur: &mut Cursor, ring: &RingCtx) -> Result<Exponent> {
    let mut e = vec![0u32; ring.num_vars()];
    loop {
        let col = cur.col();
        let name = cur.ident("a variable")?;
        let Some(v) = ring.var_index(&name) else {
            return Err(Error::Parse { line: cur.line, col, msg: format!("unknown variable `{name}`") });
        };
        let k: u32 = if cur.eat('^') { cur.int("an exponent")? } else { 1 };
        e[v] = e[v].checked_add(k).ok_or(Error::Parse { line: cur.line, col, msg: "exponent overflow".into() })?;
        if !cur.eat('*') {
            return Ok(Exponent(e));
        }
    }
}

fn ideal_rhs(cur: &mut Cursor, ring: &RingCtx) -> Result<MonomialIdeal> {
    let mut gens = Vec::new();
    loop {
        match cur.peek() {
            Some(Tok::Int(s)) if s == "0" || s == "1" => {
                let unit = s == "1";
                cur.next();
                if matches!(cur.peek(), Some(Tok::Sym('*'))) {
                    return cur.err("coefficients are not allowed in ideal generators");
                }
                if unit {
                    gens.push(Exponent::zero(ring.num_vars()));
                }
            }
            Some(Tok::Int(_)) => return cur.err("coefficients are not allowed in ideal generators"),
            _ => gens.push(monomial(cur, ring)?),
        }
        match cur.peek() {
            Some(Tok::Sym('+' | '-')) => {
                return cur.err("sums are not allowed in ideal generators (use `poly`)");
            }
            Some(Tok::Sym(',')) => {
                cur.next();
            }
            _ => break,
        }
    }
    cur.done()?;
    MonomialIdeal::new(ring, gens)
}

fn poly_rhs(cur: &mut Cursor, ring: &RingCtx) -> Result<SparsePoly> {
    let mut terms: Vec<(Exponent, BigRational)> = Vec::new();
    let mut first = true;
    loop {
        let mut sign = BigRational::one();
        if cur.eat('-') {
            sign = -sign;
        } else if !cur.eat('+') && !first {
            break;
        }
        first = false;
        let mut coeff = sign;
        let mut mono = Exponent::zero(ring.num_vars());
        if matches!(cur.peek(), Some(Tok::Int(_))) {
            let num: BigInt = cur.int("a coefficient")?;
            let mut c = BigRational::from_integer(num);
            if cur.eat('/') {
                let den: BigInt = cur.int("a denominator")?;
                if den.is_zero() {
                    return cur.err("zero denominator");
                }
                c /= BigRational::from_integer(den);
            }
            coeff *= c;
            if cur.eat('*') {
                mono = monomial(cur, ring)?;
            }
        } else {
            mono = monomial(cur, ring)?;
        }
        terms.push((mono, coeff));
    }
    let end = cur.col();
    cur.done()?;
    let p = SparsePoly::from_terms(ring, terms)?;
    if p.is_zero() {
        return Err(Error::Parse { line: cur.line, col: end, msg: "zero polynomial".into() });
    }
    Ok(p)
}

fn family_rhs(cur: &mut Cursor, ws: &Workspace) -> Result<FamilyDecl> {
    cur.expect('[')?;
    let mut members = Vec::new();
    let mut ideals = Vec::new();
    loop {
        let col = cur.col();
        let name = cur.ident("an ideal name")?;
        let ideal = ws.ideal(&name).map_err(|e| Error::Parse { line: cur.line, col, msg: reason(e) })?;
        ideals.push(ideal.clone());
        members.push(name);
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect(']')?;
    let (sat, j_gens) = match cur.peek() {
        None => (SatSpec::None, Vec::new()),
        Some(Tok::Ident(s)) if s == "sat" => {
            cur.next();
            if cur.peek() == Some(&Tok::Ident("m".into())) {
                cur.next();
                (SatSpec::Maximal, maximal_generators(&ws.ring))
            } else {
                let mut names = Vec::new();
                let mut gens = Vec::new();
                while cur.peek().is_some() {
                    let col = cur.col();
                    let name = cur.ident("a poly or ideal name")?;
                    match ws.items.get(&name) {
                        Some(Item::Poly(p)) => gens.push(p.clone()),
                        Some(Item::Ideal(i)) => {
                            if i.is_zero() {
                                return Err(Error::Parse { line: cur.line, col, msg: "cannot saturate by the zero ideal".into() });
                            }
                            for g in i.gens() {
                                gens.push(SparsePoly::monomial(&ws.ring, g.clone(), BigRational::one())?);
                            }
                        }
                        Some(other) => {
                            return Err(Error::Parse {
                                line: cur.line,
                                col,
                                msg: format!("`{name}` is a {}, expected a poly or ideal", other.kind()),
                            })
                        }
                        None => return Err(Error::Parse { line: cur.line, col, msg: format!("unknown name `{name}`") }),
                    }
                    names.push(name);
                    cur.eat(',');
                }
                if names.is_empty() {
                    return cur.err("expected `m` or names after `sat`");
                }
                (SatSpec::Names(names), gens)
            }
        }
        Some(t) => return cur.err(format!("expected `sat` or end of line, found {t}")),
    };
    let family = IdealFamily::new(ideals, j_gens)?;
    Ok(FamilyDecl { members, sat, family })
}

fn reason(e: Error) -> String {
    match e {
        Error::Precondition(m) | Error::Domain(m) => m,
        other => other.to_string(),
    }
}

pub fn parse_workspace(text: &str) -> Result<Workspace> {
    let mut ws: Option<Workspace> = None;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let toks = lex(line, lineno)?;
        if toks.is_empty() {
            continue;
        }
        let mut cur = Cursor { toks: &toks, pos: 0, line: lineno, end_col: line.chars().count() + 1 };
        let keyword = cur.ident("a declaration keyword")?;
        if keyword == "ring" {
            if ws.is_some() {
                return Err(Error::Parse { line: lineno, col: 1, msg: "ring declared twice".into() });
            }
            let mut names = Vec::new();
            while cur.peek().is_some() {
                names.push(cur.ident("a variable name")?);
            }
            if names.is_empty() {
                return cur.err("ring needs at least one variable");
            }
            let ring = RingCtx::new(names).map_err(|e| Error::Parse { line: lineno, col: 6, msg: reason(e) })?;
            ws = Some(Workspace { ring, items: IndexMap::new() });
            continue;
        }
        let Some(w) = ws.as_mut() else {
            return Err(Error::Parse { line: lineno, col: 1, msg: "the first declaration must be `ring`".into() });
        };
        let name_col = cur.col();
        let name = cur.ident("a name")?;
        let clash = if name == "m" || name == "sat" {
            Some("is reserved".to_string())
        } else if w.ring.var_index(&name).is_some() {
            Some("is a variable".to_string())
        } else {
            w.items.get(&name).map(|it| format!("is already declared as a {}", it.kind()))
        };
        if let Some(why) = clash {
            return Err(Error::Parse { line: lineno, col: name_col, msg: format!("`{name}` {why}") });
        }
        cur.expect('=')?;
        let wrap = |e: Error| match e {
            Error::Parse { .. } => e,
            other => Error::Parse { line: lineno, col: name_col, msg: reason(other) },
        };
        let item = match keyword.as_str() {
            "ideal" => Item::Ideal(ideal_rhs(&mut cur, &w.ring).map_err(wrap)?),
            "poly" => Item::Poly(poly_rhs(&mut cur, &w.ring).map_err(wrap)?),
            "family" => Item::Family(family_rhs(&mut cur, w).map_err(wrap)?),
            other => {
                return Err(Error::Parse { line: lineno, col: 1, msg: format!("unknown declaration `{other}`") })
            }
        };
        w.items.insert(name, item);
    }
    ws.ok_or(Error::Parse { line: 1, col: 1, msg: "missing `ring` declaration".into() })
}
