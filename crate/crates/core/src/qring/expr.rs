//! Parser for LaTeX-style expressions in `q`, such as
//! `q^{-3}(-q^4 - q^3 + q^2 + 1)` or `-\frac{q^4}{(1-q)^2(1-q^3)}`, and for
//! linear combinations of Schur symbols `s_{3,2}` with such coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{LaurentV, RationalQ};
use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Q,
    Schur(Partition),
    Plus,
    Minus,
    Times,
    Caret,
    Open(char),
    Close(char),
    Frac,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let bad = |m: &str| Error::InvalidArgument(format!("cannot parse {s:?}: {m}"));
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' | '$' => i += 1,
            '0'..='9' => {
                let j = (i..chars.len()).find(|&j| !chars[j].is_ascii_digit()).unwrap_or(chars.len());
                let t: String = chars[i..j].iter().collect();
                out.push(Tok::Num(t.parse().unwrap()));
                i = j;
            }
            'q' => {
                out.push(Tok::Q);
                i += 1;
            }
            's' => {
                if chars.get(i + 1) != Some(&'_') {
                    return Err(bad("expected s_"));
                }
                i += 2;
                let body: String = if chars.get(i) == Some(&'{') {
                    let j = (i..chars.len()).find(|&j| chars[j] == '}').ok_or_else(|| bad("unclosed s_{"))?;
                    let b = chars[i + 1..j].iter().collect();
                    i = j + 1;
                    b
                } else {
                    let b = chars.get(i).filter(|c| c.is_ascii_digit()).ok_or_else(|| bad("empty s_"))?;
                    i += 1;
                    b.to_string()
                };
                out.push(Tok::Schur(Partition::parse(&body)?));
            }
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Times);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' | '{' => {
                out.push(Tok::Open(c));
                i += 1;
            }
            ')' | '}' => {
                out.push(Tok::Close(if c == ')' { '(' } else { '{' }));
                i += 1;
            }
            '\\' => {
                let j = (i + 1..chars.len()).find(|&j| !chars[j].is_ascii_alphabetic()).unwrap_or(chars.len());
                let word: String = chars[i + 1..j].iter().collect();
                match word.as_str() {
                    "frac" | "dfrac" | "tfrac" => out.push(Tok::Frac),
                    "cdot" | "times" => out.push(Tok::Times),
                    "left" | "right" | "" => {}
                    _ => return Err(bad(&format!("unknown command \\{word}"))),
                }
                i = if word.is_empty() { j + 1 } else { j };
            }
            _ => return Err(bad(&format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

/// Linear combination of Schur symbols; the empty partition holds scalars.
type Lin = BTreeMap<Partition, RationalQ>;

fn scalar(x: RationalQ) -> Lin {
    let mut m = Lin::new();
    if !x.is_zero() {
        m.insert(Partition::empty(), x);
    }
    m
}

fn as_scalar(x: &Lin) -> Option<RationalQ> {
    match x.len() {
        0 => Some(RationalQ::zero()),
        1 => x.get(&Partition::empty()).cloned(),
        _ => None,
    }
}

fn add(a: &Lin, b: &Lin, sign: i64) -> Lin {
    let mut out = a.clone();
    for (k, v) in b {
        let v = if sign < 0 { -v } else { v.clone() };
        let s = out.get(k).map(|x| x + &v).unwrap_or(v);
        if s.is_zero() {
            out.remove(k);
        } else {
            out.insert(k.clone(), s);
        }
    }
    out
}

fn scale(a: &Lin, c: &RationalQ) -> Lin {
    a.iter().map(|(k, v)| (k.clone(), v * c)).filter(|(_, v)| !v.is_zero()).collect()
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, m: &str) -> Error {
        Error::InvalidArgument(format!("cannot parse {:?} at token {}: {m}", self.src, self.pos))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {t:?}")))
        }
    }

    fn expr(&mut self) -> Result<Lin> {
        let mut acc = Lin::new();
        loop {
            let mut sign = 1;
            while let Some(t @ (Tok::Plus | Tok::Minus)) = self.peek() {
                if *t == Tok::Minus {
                    sign = -sign;
                }
                self.pos += 1;
            }
            acc = add(&acc, &self.term()?, sign);
            if !matches!(self.peek(), Some(Tok::Plus | Tok::Minus)) {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Q | Tok::Schur(_) | Tok::Open(_) | Tok::Frac))
    }

    fn term(&mut self) -> Result<Lin> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(&Tok::Times) {
                self.pos += 1;
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            let f = self.factor()?;
            acc = match (as_scalar(&acc), as_scalar(&f)) {
                (Some(a), _) => scale(&f, &a),
                (_, Some(b)) => scale(&acc, &b),
                _ => return Err(self.err("product of two Schur symbols")),
            };
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let braced = self.peek() == Some(&Tok::Open('{'));
        if braced {
            self.pos += 1;
        }
        let neg = self.peek() == Some(&Tok::Minus);
        if neg {
            self.pos += 1;
        }
        let Some(Tok::Num(n)) = self.peek().cloned() else { return Err(self.err("expected exponent")) };
        self.pos += 1;
        if braced {
            self.expect(Tok::Close('{'))?;
        }
        let n: i64 = n.try_into().map_err(|_| self.err("exponent too large"))?;
        Ok(if neg { -n } else { n })
    }

    fn factor(&mut self) -> Result<Lin> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.exponent()?;
        let b = as_scalar(&base).ok_or_else(|| self.err("power of a Schur symbol"))?;
        let p = if e >= 0 { b } else { b.recip()? };
        let mut out = RationalQ::one();
        for _ in 0..e.unsigned_abs() {
            out = &out * &p;
        }
        Ok(scalar(out))
    }

    fn atom(&mut self) -> Result<Lin> {
        let t = self.peek().cloned().ok_or_else(|| self.err("unexpected end"))?;
        self.pos += 1;
        match t {
            Tok::Num(n) => Ok(scalar(RationalQ::from(LaurentV::from(n)))),
            Tok::Q => Ok(scalar(RationalQ::from(LaurentV::q_pow(1)))),
            Tok::Schur(p) => Ok([(p, RationalQ::one())].into_iter().collect()),
            Tok::Open(c) => {
                let e = self.expr()?;
                self.expect(Tok::Close(c))?;
                Ok(e)
            }
            Tok::Frac => {
                self.expect(Tok::Open('{'))?;
                let num = self.expr()?;
                self.expect(Tok::Close('{'))?;
                self.expect(Tok::Open('{'))?;
                let den = self.expr()?;
                self.expect(Tok::Close('{'))?;
                let d = as_scalar(&den).ok_or_else(|| self.err("Schur symbol in a denominator"))?;
                Ok(scale(&num, &d.recip()?))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

fn parse_lin(s: &str) -> Result<Lin> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks: &toks, pos: 0, src: s };
    let out = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parses a rational function of `q`.
pub fn parse_rational(s: &str) -> Result<RationalQ> {
    let l = parse_lin(s)?;
    as_scalar(&l).ok_or_else(|| Error::InvalidArgument(format!("{s:?} contains Schur symbols")))
}

/// Parses a Laurent polynomial in `q`.
pub fn parse_laurent(s: &str) -> Result<LaurentV> {
    parse_rational(s)?
        .to_laurent()
        .map_err(|_| Error::InvalidArgument(format!("{s:?} is not a Laurent polynomial")))
}

/// Parses `sum c_mu s_mu`, with a bare scalar standing for `c s_empty`.
/// Every coefficient must be a Laurent polynomial in `q`.
pub fn parse_schur_sum(s: &str) -> Result<BTreeMap<Partition, LaurentV>> {
    parse_lin(s)?
        .into_iter()
        .map(|(k, v)| {
            v.to_laurent()
                .map(|x| (k, x))
                .map_err(|_| Error::InvalidArgument(format!("coefficient in {s:?} is not a Laurent polynomial")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        let q = LaurentV::q_pow;
        assert_eq!(parse_laurent("q^{-3}(-q^4 - q^3 + q^2 + 1)").unwrap(), LaurentV::from_q_dense(-3, &[1, 0, 1, -1, -1]));
        assert_eq!(parse_laurent("-q^3(1-q^2)").unwrap(), q(5) - q(3));
        assert_eq!(parse_laurent("2q^2+q-1").unwrap(), q(2).scale(&2.into()) + q(1) - q(0));
        let d = parse_rational(r"-\frac{q^4}{(1-q)^2(1-q^3)}").unwrap();
        let den = LaurentV::one_minus_q_pow(1).pow(2) * LaurentV::one_minus_q_pow(3);
        assert_eq!(d, RationalQ::new(-q(4), den).unwrap());
        assert!(parse_rational("q^").is_err());
        assert!(parse_rational("(1-q").is_err());
        assert_eq!(parse_laurent("0").unwrap(), LaurentV::zero());
        assert_eq!(parse_laurent("-(q - 1) - -1").unwrap(), LaurentV::constant(2) - q(1));
    }

    #[test]
    fn schur_sums() {
        let f = parse_schur_sum("-qs_{1,1}+qs_{1}-q").unwrap();
        let q = LaurentV::q_pow(1);
        assert_eq!(f[&part!(1, 1)], -&q);
        assert_eq!(f[&part!(1)], q);
        assert_eq!(f[&part!()], -LaurentV::q_pow(1));
        let g = parse_schur_sum("q^6s_{3}-(q^6+q^5)s_2+s_1").unwrap();
        assert_eq!(g[&part!(2)], -(LaurentV::q_pow(6) + LaurentV::q_pow(5)));
        assert_eq!(g[&part!(1)], LaurentV::one());
        assert!(parse_schur_sum("s_1 s_2").is_err());
    }
}
