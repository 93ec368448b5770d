//! Text format for presentations and polynomials.
//!
//! ```text
//! # comment
//! generators a b c d
//! relation a*b = q*b*a
//! relation [b, c] = 0
//! adjoined [a, [a, b]_q]_{q^-1} = 0
//! define e = [c, a]_q
//! ```
//!
//! Polynomials use `+ - *`, juxtaposition, parentheses, the scalar `q`
//! (with exponents `q^2`, `q^-1`, `q^(1/2)`), integer constants, powers of
//! generators, and q-commutators `[x, y]_s` meaning `x y - s y x`.
//! `[x, y]` without a subscript is the plain commutator.

use std::collections::HashMap;

use crate::error::{AlgebraError, ParseError};
use crate::ncalg::{q_commutator, NcPoly};
use crate::qscalar::QScalar;

/// `lhs = rhs`; `adjoined` flags relations added beyond a source presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: NcPoly,
    pub rhs: NcPoly,
    pub adjoined: bool,
    pub text: String,
}

impl Relation {
    pub fn poly(&self) -> NcPoly {
        self.lhs.sub(&self.rhs)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
    /// Named elements usable in later expressions.
    pub definitions: Vec<(String, NcPoly)>,
}

impl Presentation {
    pub fn new(generators: Vec<String>) -> Self {
        Self {
            generators,
            ..Self::default()
        }
    }

    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        let mut pres = Presentation::default();
        let mut seen_generators = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let at = |e: ParseError| AlgebraError::Parse(e.at_line(line_no));
            match keyword {
                "generators" => {
                    if seen_generators {
                        return Err(at(ParseError::new("generators declared twice")));
                    }
                    seen_generators = true;
                    for g in rest.split_whitespace() {
                        pres.add_generator(g).map_err(at)?;
                    }
                }
                "relation" | "adjoined" => {
                    pres.add_relation(rest, keyword == "adjoined").map_err(at)?;
                }
                "define" => {
                    let (name, body) = rest
                        .split_once('=')
                        .ok_or_else(|| at(ParseError::new("expected `define name = expr`")))?;
                    let name = name.trim();
                    check_identifier(name).map_err(at)?;
                    let poly = pres.parse_poly(body).map_err(at)?;
                    pres.definitions.push((name.to_string(), poly));
                }
                other => {
                    return Err(at(ParseError::new(format!("unknown directive `{other}`"))));
                }
            }
        }
        Ok(pres)
    }

    pub fn add_generator(&mut self, name: &str) -> Result<(), ParseError> {
        check_identifier(name)?;
        if self.generators.iter().any(|g| g == name) {
            return Err(ParseError::new(format!(
                "generator `{name}` declared twice"
            )));
        }
        if self.generators.len() >= u8::MAX as usize {
            return Err(ParseError::new("too many generators"));
        }
        self.generators.push(name.to_string());
        Ok(())
    }

    pub fn add_relation(&mut self, text: &str, adjoined: bool) -> Result<(), ParseError> {
        let (lhs, rhs) = text
            .split_once('=')
            .ok_or_else(|| ParseError::new("relation needs `=`"))?;
        let relation = Relation {
            lhs: self.parse_poly(lhs)?,
            rhs: self.parse_poly(rhs)?,
            adjoined,
            text: text.trim().to_string(),
        };
        self.relations.push(relation);
        Ok(())
    }

    pub fn define(&mut self, name: &str, poly: NcPoly) {
        self.definitions.push((name.to_string(), poly));
    }

    pub fn definition(&self, name: &str) -> Option<&NcPoly> {
        self.definitions
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
    }

    pub fn generator(&self, name: &str) -> Option<NcPoly> {
        self.generators
            .iter()
            .position(|g| g == name)
            .map(|i| NcPoly::generator(i as u8))
    }

    /// Parses an expression over this presentation's generators and definitions.
    pub fn parse_poly(&self, text: &str) -> Result<NcPoly, ParseError> {
        let mut symbols: HashMap<&str, NcPoly> = HashMap::new();
        for (i, g) in self.generators.iter().enumerate() {
            symbols.insert(g, NcPoly::generator(i as u8));
        }
        for (name, poly) in &self.definitions {
            symbols.insert(name, poly.clone());
        }
        parse_poly(text, &symbols)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("generators {}\n", self.generators.join(" "));
        for r in &self.relations {
            let kw = if r.adjoined { "adjoined" } else { "relation" };
            out.push_str(&format!("{kw} {}\n", r.text));
        }
        out
    }
}

fn check_identifier(name: &str) -> Result<(), ParseError> {
    let mut chars = name.chars();
    let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
        && name != "q";
    if ok {
        Ok(())
    } else {
        Err(ParseError::new(format!("`{name}` is not a valid name")))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, ParseError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len()
                && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
            {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let v = text
                .parse()
                .map_err(|_| ParseError::new(format!("integer `{text}` is too large")))?;
            out.push(Tok::Int(v));
        } else if "+-*^()[]{},_/".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(ParseError::new(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    symbols: &'a HashMap<&'a str, NcPoly>,
}

/// Parses a polynomial expression with the given named symbols.
pub fn parse_poly(text: &str, symbols: &HashMap<&str, NcPoly>) -> Result<NcPoly, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        symbols,
    };
    if p.toks.is_empty() {
        return Err(ParseError::new("empty expression"));
    }
    let poly = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(ParseError::new(format!(
            "unexpected trailing input at token {}",
            p.pos + 1
        )));
    }
    Ok(poly)
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(ParseError::new(format!("expected `{c}`")))
        }
    }

    fn sum(&mut self) -> Result<NcPoly, ParseError> {
        let mut acc = NcPoly::zero();
        let mut first = true;
        loop {
            let negate = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                break;
            };
            first = false;
            let t = self.product()?;
            acc = if negate { acc.sub(&t) } else { acc.add(&t) };
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Ident(_)) | Some(Tok::Int(_)) | Some(Tok::Sym('(')) | Some(Tok::Sym('['))
        )
    }

    fn product(&mut self) -> Result<NcPoly, ParseError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') || self.starts_factor() {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<NcPoly, ParseError> {
        if self.peek() == Some(&Tok::Ident("q".into())) {
            self.pos += 1;
            let h = if self.eat('^') {
                self.half_exponent()?
            } else {
                2
            };
            return Ok(NcPoly::scalar(QScalar::qpow(h)));
        }
        let base = self.atom()?;
        if self.eat('^') {
            let h = self.half_exponent()?;
            if h < 0 || h % 2 != 0 {
                return Err(ParseError::new(
                    "only q may carry negative or fractional powers",
                ));
            }
            Ok(base.pow((h / 2) as u32))
        } else {
            Ok(base)
        }
    }

    /// `k`, `-k`, `(k)`, `(k/2)`, `{...}`; returns twice the exponent.
    fn half_exponent(&mut self) -> Result<i64, ParseError> {
        let close = if self.eat('(') {
            Some(')')
        } else if self.eat('{') {
            Some('}')
        } else {
            None
        };
        let neg = self.eat('-');
        let n = match self.peek() {
            Some(Tok::Int(n)) => *n,
            _ => return Err(ParseError::new("expected an exponent")),
        };
        self.pos += 1;
        let mut h = 2 * n;
        if close.is_some() && self.eat('/') {
            match self.peek() {
                Some(Tok::Int(2)) => self.pos += 1,
                _ => return Err(ParseError::new("only halves are allowed in exponents")),
            }
            h = n;
        }
        if let Some(c) = close {
            self.expect(c)?;
        }
        Ok(if neg { -h } else { h })
    }

    fn atom(&mut self) -> Result<NcPoly, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(NcPoly::scalar(QScalar::from(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.symbols
                    .get(name.as_str())
                    .cloned()
                    .ok_or_else(|| ParseError::new(format!("unknown symbol `{name}`")))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let p = self.sum()?;
                self.expect(')')?;
                Ok(p)
            }
            Some(Tok::Sym('[')) => {
                self.pos += 1;
                let x = self.sum()?;
                self.expect(',')?;
                let y = self.sum()?;
                self.expect(']')?;
                let h = if self.eat('_') {
                    self.commutator_subscript()?
                } else {
                    0
                };
                Ok(q_commutator(&x, &y, h))
            }
            _ => Err(ParseError::new("expected a term")),
        }
    }

    /// `q`, `q^e`, or either wrapped in braces.
    fn commutator_subscript(&mut self) -> Result<i64, ParseError> {
        let braced = self.eat('{');
        if self.peek() != Some(&Tok::Ident("q".into())) {
            return Err(ParseError::new("commutator subscript must be a power of q"));
        }
        self.pos += 1;
        let h = if self.eat('^') {
            self.half_exponent()?
        } else {
            2
        };
        if braced {
            self.expect('}')?;
        }
        Ok(h)
    }
}
