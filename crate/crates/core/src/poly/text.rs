//! Canonical text form of polynomials.
//!
//! Terms are printed in descending order, variables as `x[i,j]`, `y[i,j]`,
//! `z[i,j]`, `t`, coefficients as integers or `p/q`, e.g.
//! `z[1,1]*x[1,2] - z[1,1]*y[1,2] - z[1,2]*x[1,1] + z[1,2]*y[1,1]`.

use std::fmt::Write;

use super::coeff::{Field, Rational};
use super::polynomial::Polynomial;
use super::ring::{Monomial, Ring};
use super::var::{Family, VariableId};
use crate::error::{Error, Result};

impl Ring {
    pub fn fmt_poly<C: Field>(&self, p: &Polynomial<C>) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in p.terms().iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                write!(out, "{abs}").unwrap();
            } else if abs.is_one() {
                out.push_str(&self.fmt_monomial(m));
            } else {
                write!(out, "{abs}*{}", self.fmt_monomial(m)).unwrap();
            }
        }
        out
    }

    pub fn parse_poly(&self, s: &str) -> Result<Polynomial<Rational>> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
            ring: self,
        }
        .parse()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at byte {}", self.pos)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn parse(mut self) -> Result<Polynomial<Rational>> {
        let mut terms: Vec<(Monomial, Rational)> = Vec::new();
        let mut first = true;
        loop {
            let negate = match self.peek() {
                None if !first => break,
                None => return self.err("empty polynomial"),
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(_) if first => false,
                Some(_) => return self.err("expected + or -"),
            };
            first = false;
            let (mut c, m) = self.term()?;
            if negate {
                c = c.neg();
            }
            terms.push((m, c));
        }
        Ok(Polynomial::from_terms(terms))
    }

    fn term(&mut self) -> Result<(Rational, Monomial)> {
        let mut c = Rational::one();
        let mut m = Monomial::one();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let num = self.digits()?.to_string();
                    let r: Rational = if self.eat(b'/') {
                        let den = self.digits()?;
                        format!("{num}/{den}").parse()?
                    } else {
                        num.parse()?
                    };
                    c = c.mul(&r);
                }
                Some(b'x' | b'y' | b'z' | b't') => {
                    let v = self.variable()?;
                    let e = if self.eat(b'^') {
                        self.digits()?
                            .parse::<u32>()
                            .map_err(|e| Error::Parse(e.to_string()))?
                    } else {
                        1
                    };
                    let slot = self.ring.slot(v)?;
                    let mut factor = Monomial::one();
                    factor.set_exponent(slot, e)?;
                    let total = m.exponent(slot) + e;
                    if total > u8::MAX as u32 {
                        return Err(Error::ExponentOverflow);
                    }
                    m = m.mul(&factor);
                }
                _ => return self.err("expected coefficient or variable"),
            }
            if !self.eat(b'*') {
                return Ok((c, m));
            }
        }
    }

    fn variable(&mut self) -> Result<VariableId> {
        let family = match self.src[self.pos] {
            b'x' => Family::X,
            b'y' => Family::Y,
            b'z' => Family::Z,
            _ => {
                self.pos += 1;
                return Ok(VariableId::t());
            }
        };
        self.pos += 1;
        if !self.eat(b'[') {
            return self.err("expected [");
        }
        let row: usize = self.digits()?.parse().map_err(|_| Error::Parse("row".into()))?;
        if !self.eat(b',') {
            return self.err("expected ,");
        }
        let col: usize = self.digits()?.parse().map_err(|_| Error::Parse("col".into()))?;
        if !self.eat(b']') {
            return self.err("expected ]");
        }
        if row == 0 || col == 0 || row > 255 || col > 255 {
            return self.err("indices must be in 1..=255");
        }
        Ok(VariableId::indexed(family, row, col))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::var::ProblemParams;
    use proptest::prelude::*;

    fn ring() -> Ring {
        Ring::paper(&ProblemParams::new(2, 3, 2, 3, 2, 3).unwrap()).unwrap()
    }

    #[test]
    fn canonical_g_text() {
        let r = ring();
        let p = r
            .parse_poly("z[1,2]*y[1,1] - z[1,2]*x[1,1] + z[1,1]*x[1,2] - z[1,1]*y[1,2]")
            .unwrap();
        assert_eq!(
            r.fmt_poly(&p),
            "z[1,1]*x[1,2] - z[1,1]*y[1,2] - z[1,2]*x[1,1] + z[1,2]*y[1,1]"
        );
    }

    #[test]
    fn coefficients_and_powers() {
        let r = ring();
        let p = r.parse_poly("-3/6*x[1,1]^2*y[2,3] + 2 + t*0").unwrap_err();
        assert!(matches!(p, Error::UnknownVariable(_)));
        let p = r.parse_poly("-3/6*x[1,1]^2*y[2,3] + 2").unwrap();
        assert_eq!(r.fmt_poly(&p), "-1/2*x[1,1]^2*y[2,3] + 2");
        assert_eq!(r.fmt_poly(&r.parse_poly("x[1,1] - x[1,1]").unwrap()), "0");
        assert!(r.parse_poly("x[1,1] +").is_err());
        assert!(r.parse_poly("").is_err());
        assert!(r.parse_poly("x[0,1]").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let r = ring();
        let n = r.nvars();
        prop::collection::vec(
            (prop::collection::vec((0..n, 1u32..3), 0..4), -5i64..5, 1i64..4),
            0..6,
        )
        .prop_map(move |terms| {
            Polynomial::from_terms(terms.into_iter().map(|(vars, num, den)| {
                let mut m = Monomial::one();
                for (slot, e) in vars {
                    m.set_exponent(slot, m.exponent(slot) + e).unwrap();
                }
                (m, Rational::new(num, den))
            }))
        })
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(p in arb_poly()) {
            let r = ring();
            let text = r.fmt_poly(&p);
            prop_assert_eq!(r.parse_poly(&text).unwrap(), p);
        }
    }
}
