//! Formal sums of named classes, e.g. `2eH - 2T15 - (N16 + N36)/3 + 1/2 C16`.
//!
//! Names: `N16`, `T15` (curves), `C15` (conic of a line), `R16` (cubic of a
//! node), `eH`, `eS`, `NN`, `TT` (sums of all nodes / lines) and `NN5`, `TT5`
//! (face sums). Extra names may be supplied by the caller.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{CurveKind, CurveName, DivisorClass, PicardLattice};
use crate::error::{Error, Result};

pub type Env = BTreeMap<String, DivisorClass>;

pub fn parse(pic: &PicardLattice, s: &str) -> Result<DivisorClass> {
    parse_with(pic, s, &Env::new())
}

pub fn parse_with(pic: &PicardLattice, s: &str, env: &Env) -> Result<DivisorClass> {
    let tokens = tokenize(s)?;
    let mut p = Parser { pic, env, tokens, pos: 0, src: s };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

/// Resolves a single name.
pub fn named(pic: &PicardLattice, name: &str, env: &Env) -> Result<DivisorClass> {
    if let Some(c) = env.get(name) {
        return Ok(c.clone());
    }
    match name {
        "eH" => return Ok(pic.eta_h()),
        "eS" => return Ok(pic.eta_s()),
        "NN" => return Ok(pic.node_sum()),
        "TT" => return Ok(pic.line_sum()),
        _ => {}
    }
    let unknown = || Error::UnknownName(name.to_string());
    let face = |rest: &str| -> Result<u8> {
        match rest.parse::<u8>() {
            Ok(i @ 1..=5) => Ok(i),
            _ => Err(unknown()),
        }
    };
    if let Some(rest) = name.strip_prefix("NN") {
        return Ok(pic.face_nodes(face(rest)?));
    }
    if let Some(rest) = name.strip_prefix("TT") {
        return Ok(pic.face_lines(face(rest)?));
    }
    if let Some(rest) = name.strip_prefix('C') {
        let line = CurveName::parse(&format!("T{rest}")).map_err(|_| unknown())?;
        return pic.conic(line);
    }
    if let Some(rest) = name.strip_prefix('R') {
        let node = CurveName::parse(&format!("N{rest}")).map_err(|_| unknown())?;
        return pic.cubic(node);
    }
    let c = CurveName::parse(name).map_err(|_| unknown())?;
    debug_assert!(matches!(c.kind, CurveKind::Node | CurveKind::Line));
    Ok(pic.curve(c).clone())
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' | '·' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '(' => {
                out.push(Tok::Open);
                i += 1
            }
            ')' => {
                out.push(Tok::Close);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Tok::Num(text.parse().expect("digits")));
            }
            a if a.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push(Tok::Name(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?} in {s:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    pic: &'a PicardLattice,
    env: &'a Env,
    tokens: Vec<Tok>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} in {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    // expr := ['+'|'-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<DivisorClass> {
        let mut sign = 1;
        if self.eat(&Tok::Minus) {
            sign = -1;
        } else {
            self.eat(&Tok::Plus);
        }
        let mut acc = self.term()?.times(sign);
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    // term := [number ['/' number] ['*']] atom ['/' number]
    fn term(&mut self) -> Result<DivisorClass> {
        let mut coef = BigRational::one();
        if let Some(Tok::Num(n)) = self.peek().cloned() {
            self.pos += 1;
            coef = BigRational::from_integer(n);
            if self.peek() == Some(&Tok::Slash) {
                self.pos += 1;
                coef /= BigRational::from_integer(self.number()?);
            }
            self.eat(&Tok::Star);
            if !matches!(self.peek(), Some(Tok::Name(_)) | Some(Tok::Open)) {
                // bare number: only zero is a class
                return if coef.is_zero() { Ok(DivisorClass::zero()) } else { Err(self.error("bare number")) };
            }
        }
        let mut v = self.atom()?;
        while self.eat(&Tok::Slash) {
            coef /= BigRational::from_integer(self.number()?);
        }
        v = v.scale(&coef);
        Ok(v)
    }

    fn number(&mut self) -> Result<BigInt> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) if !n.is_zero() => {
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.error("expected a nonzero number")),
        }
    }

    fn atom(&mut self) -> Result<DivisorClass> {
        match self.peek().cloned() {
            Some(Tok::Open) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(&Tok::Close) {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            Some(Tok::Name(n)) => {
                self.pos += 1;
                named(self.pic, &n, self.env)
            }
            _ => Err(self.error("expected a name or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::hessian::picard;

    #[test]
    fn parses_sums() {
        let p = picard();
        let a = parse(p, "2N13 - 2N46").unwrap();
        let b = &p.curve(CurveName::node("13")).times(2) - &p.curve(CurveName::node("46")).times(2);
        assert_eq!(a, b);
        assert_eq!(parse(p, "eH + eS").unwrap(), parse(p, "NN + TT").unwrap());
        assert_eq!(parse(p, "1/2(C16 - N45)").unwrap(), parse(p, "(C16 - N45)/2").unwrap());
        assert_eq!(parse(p, "-(N16+N36)").unwrap(), parse(p, "-N16 - N36").unwrap());
        assert_eq!(parse(p, "0").unwrap(), DivisorClass::zero());
        assert_eq!(p.square(&parse(p, "C16").unwrap()), rat(-2, 1));
    }

    #[test]
    fn rejects_bad_input() {
        let p = picard();
        assert!(matches!(parse(p, "N14"), Err(Error::UnknownName(_))));
        assert!(matches!(parse(p, "C12"), Err(Error::UnknownName(_))));
        assert!(matches!(parse(p, "NN6"), Err(Error::UnknownName(_))));
        assert!(matches!(parse(p, "N16 +"), Err(Error::Parse(_))));
        assert!(matches!(parse(p, "(N16"), Err(Error::Parse(_))));
        assert!(matches!(parse(p, "3"), Err(Error::Parse(_))));
        assert!(matches!(parse(p, "N16/0"), Err(Error::Parse(_))));
        assert!(matches!(parse(p, "N16 $"), Err(Error::Parse(_))));
    }

    #[test]
    fn extra_names() {
        let p = picard();
        let mut env = Env::new();
        env.insert("D1".into(), parse(p, "N26+N45").unwrap());
        assert_eq!(parse_with(p, "D1 - N45", &env).unwrap(), parse(p, "N26").unwrap());
    }
}
