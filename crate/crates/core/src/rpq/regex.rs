use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::ids::{is_valid_token, Label};
use crate::graph::rename::Relabeling;

/// Regular expressions over labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regex {
    Epsilon,
    Atom(Label),
    Star(Box<Regex>),
    Concat(Box<Regex>, Box<Regex>),
    Union(Box<Regex>, Box<Regex>),
}

impl Regex {
    pub fn atom(a: &str) -> Regex {
        Regex::Atom(crate::graph::ids::l(a))
    }

    pub fn star(r: Regex) -> Regex {
        Regex::Star(Box::new(r))
    }

    pub fn concat(a: Regex, b: Regex) -> Regex {
        Regex::Concat(Box::new(a), Box::new(b))
    }

    pub fn union(a: Regex, b: Regex) -> Regex {
        Regex::Union(Box::new(a), Box::new(b))
    }

    /// Right-nested concatenation of a nonempty sequence; ε for an empty one.
    pub fn concat_all(mut parts: Vec<Regex>) -> Regex {
        let Some(mut acc) = parts.pop() else {
            return Regex::Epsilon;
        };
        while let Some(p) = parts.pop() {
            acc = Regex::concat(p, acc);
        }
        acc
    }

    /// Right-nested union of a nonempty sequence.
    pub fn union_all(mut parts: Vec<Regex>) -> Option<Regex> {
        let mut acc = parts.pop()?;
        while let Some(p) = parts.pop() {
            acc = Regex::union(p, acc);
        }
        Some(acc)
    }

    /// `r^n`, ε for n = 0.
    pub fn power(r: &Regex, n: usize) -> Regex {
        Regex::concat_all(vec![r.clone(); n])
    }

    /// `ε + r + r² + … + rⁿ`.
    pub fn up_to(r: &Regex, n: usize) -> Regex {
        Regex::union_all((0..=n).map(|i| Regex::power(r, i)).collect()).expect("nonempty")
    }

    /// Atoms in left-to-right order; the i-th atom (1-based) is `atoms()[i-1]`.
    pub fn atoms(&self) -> Vec<&Label> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a Label>) {
        match self {
            Regex::Epsilon => {}
            Regex::Atom(a) => out.push(a),
            Regex::Star(r) => r.collect_atoms(out),
            Regex::Concat(a, b) | Regex::Union(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Number of atom occurrences `k`.
    pub fn atom_count(&self) -> usize {
        match self {
            Regex::Epsilon => 0,
            Regex::Atom(_) => 1,
            Regex::Star(r) => r.atom_count(),
            Regex::Concat(a, b) | Regex::Union(a, b) => a.atom_count() + b.atom_count(),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Regex::Epsilon | Regex::Atom(_) => 1,
            Regex::Star(r) => 1 + r.node_count(),
            Regex::Concat(a, b) | Regex::Union(a, b) => 1 + a.node_count() + b.node_count(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Regex::Epsilon | Regex::Atom(_) => 0,
            Regex::Star(r) => 1 + r.depth(),
            Regex::Concat(a, b) | Regex::Union(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    pub fn nullable(&self) -> bool {
        match self {
            Regex::Epsilon | Regex::Star(_) => true,
            Regex::Atom(_) => false,
            Regex::Concat(a, b) => a.nullable() && b.nullable(),
            Regex::Union(a, b) => a.nullable() || b.nullable(),
        }
    }

    /// Replaces every atom by its image under `f`.
    pub fn map_atoms(&self, f: &mut impl FnMut(&Label) -> Label) -> Regex {
        match self {
            Regex::Epsilon => Regex::Epsilon,
            Regex::Atom(a) => Regex::Atom(f(a)),
            Regex::Star(r) => Regex::star(r.map_atoms(f)),
            Regex::Concat(a, b) => Regex::concat(a.map_atoms(f), b.map_atoms(f)),
            Regex::Union(a, b) => Regex::union(a.map_atoms(f), b.map_atoms(f)),
        }
    }

    pub fn relabel(&self, lambda: &Relabeling) -> Regex {
        self.map_atoms(&mut |a| lambda.label(a))
    }

    pub fn parse(text: &str) -> Result<Regex> {
        Parser::new(text).parse()
    }

    fn precedence(&self) -> u8 {
        match self {
            Regex::Union(..) => 0,
            Regex::Concat(..) => 1,
            Regex::Star(_) => 2,
            Regex::Epsilon | Regex::Atom(_) => 3,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.precedence() < min;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Regex::Epsilon => f.write_str("eps")?,
            Regex::Atom(a) => write!(f, "{a}")?,
            Regex::Star(r) => {
                r.fmt_prec(f, 2)?;
                f.write_str("*")?;
            }
            // both operators nest to the right, so only a left operand of
            // equal precedence needs parentheses
            Regex::Concat(a, b) => {
                a.fmt_prec(f, 2)?;
                f.write_str(" ")?;
                b.fmt_prec(f, 1)?;
            }
            Regex::Union(a, b) => {
                a.fmt_prec(f, 1)?;
                f.write_str(" + ")?;
                b.fmt_prec(f, 0)?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Regex {
    /// Canonical form with minimal parentheses. Union and concatenation nest
    /// to the right, so `parse(print(r)) == r` exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl fmt::Debug for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Regex({self})")
    }
}

impl FromStr for Regex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Regex> {
        Regex::parse(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Atom(String),
    Eps,
    Plus,
    Star,
    LParen,
    RParen,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    lex_error: Option<Error>,
}

impl Parser {
    fn new(text: &str) -> Self {
        let mut toks = Vec::new();
        let mut lex_error = None;
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            match c {
                b' ' | b'\t' | b'\n' | b'\r' => i += 1,
                b'+' | b'|' => {
                    toks.push((i, Tok::Plus));
                    i += 1;
                }
                b'*' => {
                    toks.push((i, Tok::Star));
                    i += 1;
                }
                b'(' => {
                    toks.push((i, Tok::LParen));
                    i += 1;
                }
                b')' => {
                    toks.push((i, Tok::RParen));
                    i += 1;
                }
                _ if c.is_ascii_alphanumeric() || c == b'_' => {
                    let start = i;
                    while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                        i += 1;
                    }
                    let word = &text[start..i];
                    debug_assert!(is_valid_token(word));
                    toks.push((start, if word == "eps" { Tok::Eps } else { Tok::Atom(word.to_string()) }));
                }
                _ => {
                    lex_error = Some(Error::Syntax {
                        offset: i,
                        message: format!("unexpected character {:?}", text[i..].chars().next().unwrap()),
                    });
                    break;
                }
            }
        }
        Parser { toks, pos: 0, end: text.len(), lex_error }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { offset: self.offset(), message: message.into() })
    }

    fn parse(mut self) -> Result<Regex> {
        if let Some(e) = self.lex_error.take() {
            return Err(e);
        }
        if self.toks.is_empty() {
            return self.error("empty query (write `eps` for the empty word)");
        }
        let r = self.union()?;
        if self.pos != self.toks.len() {
            return self.error("unexpected token");
        }
        Ok(r)
    }

    fn union(&mut self) -> Result<Regex> {
        let mut parts = vec![self.concat()?];
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            parts.push(self.concat()?);
        }
        Ok(Regex::union_all(parts).expect("at least one operand"))
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Atom(_) | Tok::Eps | Tok::LParen))
    }

    fn concat(&mut self) -> Result<Regex> {
        if !self.starts_factor() {
            return self.error("expected an atom, `eps` or `(`");
        }
        let mut parts = vec![self.postfix()?];
        while self.starts_factor() {
            parts.push(self.postfix()?);
        }
        Ok(Regex::concat_all(parts))
    }

    fn postfix(&mut self) -> Result<Regex> {
        let mut r = self.primary()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            r = Regex::star(r);
        }
        Ok(r)
    }

    fn primary(&mut self) -> Result<Regex> {
        match self.peek().cloned() {
            Some(Tok::Atom(a)) => {
                self.pos += 1;
                Ok(Regex::Atom(Label::new(&a)?))
            }
            Some(Tok::Eps) => {
                self.pos += 1;
                Ok(Regex::Epsilon)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let r = self.union()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.error("expected `)`");
                }
                self.pos += 1;
                Ok(r)
            }
            _ => self.error("expected an atom, `eps` or `(`"),
        }
    }
}
