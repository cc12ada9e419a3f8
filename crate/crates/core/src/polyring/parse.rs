//! Text grammar for polynomials:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*      // '/' only by nonzero constants
//! unary := ('-' | '+') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | identifier | '(' expr ')'
//! ```
//!
//! `i` is the imaginary unit in rings over ℚ(i). Multiplication must be
//! explicit: `2x` is rejected.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Field, Polynomial, Ring, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse { column, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Int(s.parse().expect("digits")), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(err(col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let col = self.col();
                self.pos += 1;
                let d = self.unary()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(err(col, "division only by a nonzero constant"));
                }
                let c = d.coeff(&super::Monomial::one(self.ring.nvars()));
                acc = acc.scale(&c.inv().expect("nonzero"));
            } else {
                match self.peek() {
                    Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::Sym('(')) => {
                        return Err(err(self.col(), "expected an operator; multiplication needs '*'"))
                    }
                    _ => return Ok(acc),
                }
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            let col = self.col();
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| err(col, "exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(err(col, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(self.ring.constant(Scalar::real(BigRational::from_integer(n))))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(idx) = self.ring.var_index(&name) {
                    Ok(self.ring.var(idx))
                } else if name == "i" {
                    if self.ring.field() == Field::GaussianRational {
                        Ok(self.ring.constant(Scalar::i()))
                    } else {
                        Err(err(col, "imaginary unit 'i' requires a ring over Qi"))
                    }
                } else {
                    Err(err(col, format!("unknown variable '{name}'")))
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(err(self.col(), "expected ')'"));
                }
                Ok(inner)
            }
            Some(Tok::Sym(c)) => Err(err(col, format!("unexpected '{c}'"))),
            None => Err(err(col, "unexpected end of input")),
        }
    }
}

/// Parse `text` as a polynomial of `ring`. Columns in errors are 1-based
/// character offsets into `text`.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let toks = lex(text)?;
    let mut p = Parser { ring, toks, pos: 0, end_col: text.chars().count() + 1 };
    if p.toks.is_empty() {
        return Err(err(1, "empty expression"));
    }
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(p.col(), "unexpected trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> Ring {
        Ring::rational(["x", "y", "z"])
    }

    #[test]
    fn parses_grammar_example() {
        let r = ring();
        let p = parse_polynomial(&r, "3/2*x^2*y - z + 1").unwrap();
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let expect = (&x.pow(2) * &y).scale(&Scalar::ratio(3, 2)) - z + r.one();
        assert_eq!(p, expect);
        assert_eq!(p.to_string(), "3/2*x^2*y - z + 1");
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        let r = ring();
        assert_eq!(parse_polynomial(&r, "-x^2").unwrap(), -r.var(0).pow(2));
        assert_eq!(parse_polynomial(&r, "(x-y)*(x+y)").unwrap(), r.var(0).pow(2) - r.var(1).pow(2));
    }

    #[test]
    fn errors_carry_columns() {
        let r = ring();
        assert_eq!(
            parse_polynomial(&r, "x + w"),
            Err(Error::Parse { column: 5, message: "unknown variable 'w'".into() })
        );
        assert!(matches!(parse_polynomial(&r, "2x"), Err(Error::Parse { column: 2, .. })));
        assert!(matches!(parse_polynomial(&r, "x/y"), Err(Error::Parse { column: 2, .. })));
        assert!(matches!(parse_polynomial(&r, "x + i"), Err(Error::Parse { column: 5, .. })));
        assert!(matches!(parse_polynomial(&r, "(x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, ""), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, "x^y"), Err(Error::Parse { column: 3, .. })));
    }

    #[test]
    fn gaussian_unit() {
        let r = Ring::new(["x", "y"], Field::GaussianRational);
        let p = parse_polynomial(&r, "x + i*y").unwrap();
        assert_eq!(p.coeff(&super::super::Monomial::var(2, 1)), Scalar::i());
        assert_eq!(parse_polynomial(&r, "i^2").unwrap(), r.constant(Scalar::from_int(-1)));
    }

    fn arb_poly(field: Field) -> impl Strategy<Value = Polynomial> {
        let term = (proptest::collection::vec(0u32..4, 3), -20i64..20, 1i64..7, -3i64..4);
        proptest::collection::vec(term, 0..6).prop_map(move |terms| {
            let r = Ring::new(["x", "y", "z"], field);
            Polynomial::from_terms(
                &r,
                terms.into_iter().map(|(e, n, d, im)| {
                    let re = Scalar::ratio(n, d);
                    let c = match field {
                        Field::Rational => re,
                        Field::GaussianRational => re + Scalar::i() * Scalar::from_int(im),
                    };
                    (super::super::Monomial::new(e), c)
                }),
            )
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(p in arb_poly(Field::Rational)) {
            let back = parse_polynomial(p.ring(), &p.to_string()).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn print_parse_round_trip_gaussian(p in arb_poly(Field::GaussianRational)) {
            let back = parse_polynomial(p.ring(), &p.to_string()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
