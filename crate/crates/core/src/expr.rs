//! Parsing of element expressions.
//!
//! ```text
//! element  := "0" | [sign] term (sign term)*
//! term     := [rational] ["h" ["^" int]] ["*"] [monomial]     (not empty)
//! monomial := factor ("&" factor)*
//! factor   := "@" vertex | "(" edge+ ")" | ("(" edge "," height ")")+
//! edge     := name ["*"]
//! ```
//!
//! The unit is written `1`. Heighted factors `(e,1)(e*,2)` are only accepted
//! by [`parse_heighted`].

use crate::error::{Error, Result};
use crate::heights::{HeightedCollection, HeightedElement};
use crate::quiver::{DoubleQuiver, Edge, Vertex};
use crate::symalg::{canonical_necklace, HPoly, Monomial, Necklace, Rational, SymLElement};

enum Factor {
    Idempotent(Vertex),
    Word(Vec<Edge>),
    Heighted(Vec<(Edge, u32)>),
}

struct Parser<'a> {
    q: &'a DoubleQuiver,
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Expression {
            column: self.src[..self.pos].chars().count() + 1,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn integer<T: std::str::FromStr>(&mut self) -> Result<T> {
        self.skip_ws();
        match self.digits() {
            Some(d) => match d.parse() {
                Ok(v) => Ok(v),
                Err(_) => self.err(format!("integer `{d}` out of range")),
            },
            None => self.err("expected an integer"),
        }
    }

    fn name(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
        {
            self.bump();
        }
        if self.pos == start {
            return self.err("expected a name");
        }
        Ok(&self.src[start..self.pos])
    }

    fn edge(&mut self) -> Result<Edge> {
        let name = self.name()?;
        let reversed = self.peek() == Some('*');
        if reversed {
            self.bump();
        }
        let full = if reversed { format!("{name}*") } else { name.to_string() };
        self.q.edge_by_name(&full)
    }

    fn factor(&mut self) -> Result<Factor> {
        self.skip_ws();
        if self.eat('@') {
            let v = self.name()?;
            return Ok(Factor::Idempotent(self.q.vertex_by_name(v)?));
        }
        self.expect('(')?;
        let first = self.edge()?;
        if !self.eat(',') {
            let mut word = vec![first];
            while !self.eat(')') {
                if self.peek().is_none() {
                    return self.err("unterminated necklace");
                }
                word.push(self.edge()?);
            }
            return Ok(Factor::Word(word));
        }
        let mut letters = vec![(first, self.integer()?)];
        self.expect(')')?;
        loop {
            self.skip_ws();
            if self.peek() != Some('(') {
                break;
            }
            self.bump();
            let e = self.edge()?;
            self.expect(',')?;
            letters.push((e, self.integer()?));
            self.expect(')')?;
        }
        Ok(Factor::Heighted(letters))
    }

    fn rational(&mut self) -> Result<Option<Rational>> {
        self.skip_ws();
        let Some(n) = self.digits() else {
            return Ok(None);
        };
        let n: num::BigInt = n.parse().expect("digits");
        if self.eat('/') {
            self.skip_ws();
            let Some(d) = self.digits() else {
                return self.err("expected a denominator");
            };
            let d: num::BigInt = d.parse().expect("digits");
            if d == num::BigInt::from(0) {
                return self.err("zero denominator");
            }
            return Ok(Some(Rational::new(n, d)));
        }
        Ok(Some(Rational::from_integer(n)))
    }

    fn term(&mut self) -> Result<(HPoly, Vec<Factor>)> {
        let c = self.rational()?;
        self.skip_ws();
        let mut power = None;
        if self.peek() == Some('h') {
            self.bump();
            power = Some(if self.eat('^') { self.integer()? } else { 1 });
        }
        let has_coeff = c.is_some() || power.is_some();
        let c = c.unwrap_or_else(|| Rational::from_integer(1.into()));
        let coeff = HPoly::monomial(c, power.unwrap_or(0));
        if has_coeff {
            self.eat('*');
        }
        self.skip_ws();
        let mut factors = Vec::new();
        if matches!(self.peek(), Some('(') | Some('@')) {
            factors.push(self.factor()?);
            while self.eat('&') {
                factors.push(self.factor()?);
            }
        } else if !has_coeff {
            return self.err("expected a term");
        }
        Ok((coeff, factors))
    }

    fn element(&mut self) -> Result<Vec<(HPoly, Vec<Factor>)>> {
        let mut terms = Vec::new();
        let mut negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        loop {
            let (c, f) = self.term()?;
            terms.push((if negative { -c } else { c }, f));
            self.skip_ws();
            match self.peek() {
                None => return Ok(terms),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(c) => return self.err(format!("unexpected `{c}`")),
            }
            self.bump();
        }
    }
}

fn parse_terms<'a>(q: &'a DoubleQuiver, src: &'a str) -> Result<Vec<(HPoly, Vec<Factor>)>> {
    let mut p = Parser { q, src, pos: 0 };
    p.skip_ws();
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    p.element()
}

/// Parses a `Sym L[h]` element, canonicalizing every necklace.
pub fn parse_element(q: &DoubleQuiver, src: &str) -> Result<SymLElement> {
    let mut out = SymLElement::zero();
    for (c, factors) in parse_terms(q, src)? {
        let mut ns = Vec::with_capacity(factors.len());
        for f in factors {
            ns.push(match f {
                Factor::Idempotent(v) => Necklace::Idempotent(v),
                Factor::Word(w) => canonical_necklace(q, &w)?,
                Factor::Heighted(_) => {
                    return Err(Error::Expression {
                        column: 1,
                        message: "height labels are not allowed here".into(),
                    })
                }
            });
        }
        out.add_term(Monomial::from_factors(ns), &c);
    }
    Ok(out)
}

/// Parses a combination of height-labelled collections such as
/// `1/2 (e,1)(e*,2) + 1/2 (e,2)(e*,1)`.
pub fn parse_heighted(q: &DoubleQuiver, src: &str) -> Result<HeightedElement> {
    let mut out = HeightedElement::zero();
    for (c, factors) in parse_terms(q, src)? {
        let mut idempotents = Vec::new();
        let mut words = Vec::new();
        for f in factors {
            match f {
                Factor::Idempotent(v) => idempotents.push(v),
                Factor::Heighted(w) => words.push(w),
                Factor::Word(_) => {
                    return Err(Error::Expression {
                        column: 1,
                        message: "every edge needs a height, as in `(e,1)`".into(),
                    })
                }
            }
        }
        out.add_term(HeightedCollection::new(q, idempotents, words)?, &c);
    }
    Ok(out)
}

/// Parses a necklace expression that must be a single necklace with coefficient 1.
pub fn parse_necklace(q: &DoubleQuiver, src: &str) -> Result<Necklace> {
    let el = parse_element(q, src)?;
    let mut terms = el.iter();
    match (terms.next(), terms.next()) {
        (Some((m, c)), None) if c == &HPoly::one() => m
            .as_necklace()
            .cloned()
            .ok_or_else(|| Error::NotInLieAlgebra(src.trim().to_string())),
        _ => Err(Error::NotInLieAlgebra(src.trim().to_string())),
    }
}
