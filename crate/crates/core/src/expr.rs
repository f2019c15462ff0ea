//! Textual polynomials.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' digits)?
//! atom   := number | var | '(' expr ')'
//! number := digits ('/' digits)? 'i'? | 'i'
//! var    := '~'? 'z' digits            (z1 .. zn, ~ marks the conjugate)
//! ```
//!
//! Gaussian literals such as `(1/2+2/3i)` are ordinary parenthesized sums.
//! There is no general division and no floating-point literal.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::GComplex;
use crate::boundary::BPoly2;
use crate::error::ParseError;
use crate::slicer::{BPolyN, MonoN};

/// Parses `text` as a polynomial in `z1..zn` and their conjugates.
pub fn parse_poly(text: &str, n: usize) -> Result<BPolyN, ParseError> {
    if n == 0 {
        return Err(ParseError::new(0, "dimension must be at least 1"));
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        n,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected {:?}", p.src[p.pos] as char)));
    }
    Ok(out)
}

pub fn parse_poly2(text: &str) -> Result<BPoly2, ParseError> {
    parse_poly(text, 2).map(|f| f.to_bpoly2().expect("dimension is 2"))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<BPolyN, ParseError> {
        let negate_first = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.term()?;
        if negate_first {
            acc = acc.scale(&-GComplex::one());
        }
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BPolyN, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BPolyN, ParseError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected a nonnegative integer exponent"));
            }
            let exp: u32 = digits
                .parse()
                .map_err(|_| ParseError::new(start, "exponent out of range"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<BPolyN, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'~') | Some(b'z') => self.variable(),
            Some(b'i') => {
                self.pos += 1;
                Ok(BPolyN::constant(self.n, GComplex::i()))
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) => Err(self.error(format!("unexpected {:?}", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<BPolyN, ParseError> {
        let start = self.pos;
        let num: BigInt = self.digits().parse().expect("digits");
        let mut value = BigRational::from_integer(num);
        if self.src.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let den = self.digits();
            if den.is_empty() {
                return Err(self.error("expected a denominator"));
            }
            let den: BigInt = den.parse().expect("digits");
            if den.is_zero() {
                return Err(ParseError::new(start, "zero denominator"));
            }
            value /= BigRational::from_integer(den);
        }
        if matches!(self.src.get(self.pos), Some(b'.') | Some(b'e') | Some(b'E')) {
            return Err(ParseError::new(start, "non-rational literal (use p/q)"));
        }
        let c = if self.src.get(self.pos) == Some(&b'i') {
            self.pos += 1;
            GComplex::new(BigRational::zero(), value)
        } else {
            GComplex::real(value)
        };
        Ok(BPolyN::constant(self.n, c))
    }

    fn variable(&mut self) -> Result<BPolyN, ParseError> {
        let start = self.pos;
        let conj = self.src[self.pos] == b'~';
        if conj {
            self.pos += 1;
        }
        if self.src.get(self.pos) != Some(&b'z') {
            return Err(self.error("expected a variable z<index>"));
        }
        self.pos += 1;
        let digits = self.digits();
        let index: usize = digits
            .parse()
            .map_err(|_| ParseError::new(start, "expected a variable index"))?;
        if index == 0 || index > self.n {
            return Err(ParseError::new(
                start,
                format!("unknown variable z{index} in dimension {}", self.n),
            ));
        }
        Ok(if conj {
            BPolyN::conj_var(self.n, index)
        } else {
            BPolyN::var(self.n, index)
        })
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &MonoN) -> fmt::Result {
    let mut first = true;
    for i in 0..m.dim() {
        for (exp, prefix) in [(m.hol[i], ""), (m.anti[i], "~")] {
            if exp == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{prefix}z{}", i + 1)?;
            if exp > 1 {
                write!(f, "^{exp}")?;
            }
        }
    }
    Ok(())
}

/// Prints terms in descending monomial order, e.g. `(3/2)*z1^2*z2 - ~z2`.
impl fmt::Display for BPolyN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let constant = m.hol.iter().chain(&m.anti).all(|&e| e == 0);
            let (negative, shown) = if c.is_real() && c.re.is_negative() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let plain_integer = shown.is_real() && shown.re.is_integer();
            if constant {
                if plain_integer {
                    write!(f, "{shown}")?;
                } else {
                    write!(f, "({shown})")?;
                }
                continue;
            }
            if !shown.is_one() {
                if plain_integer {
                    write!(f, "{shown}*")?;
                } else {
                    write!(f, "({shown})*")?;
                }
            }
            write_monomial(f, m)?;
        }
        Ok(())
    }
}

impl fmt::Display for BPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        BPolyN::from_bpoly2(self).fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::Mono2;

    #[test]
    fn parse_examples() {
        let f = parse_poly2("z1*~z1").unwrap();
        assert_eq!(f, BPoly2::monomial(Mono2::new(1, 1, 0, 0), GComplex::one()));

        let f = parse_poly2("(3/2)*z1^2*z2 - ~z2").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.coeff(&Mono2::new(2, 0, 1, 0)), GComplex::ratio(3, 2));
        assert_eq!(f.coeff(&Mono2::new(0, 0, 0, 1)), GComplex::from_int(-1));

        let g = parse_poly("z1*z3 + (0+1i)*~z2", 3).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.terms().any(|(_, c)| *c == GComplex::i()));
    }

    #[test]
    fn parse_errors() {
        let err = parse_poly2("z1 + z3").unwrap_err();
        assert_eq!(err.position, 5);
        assert!(err.message.contains("unknown variable"));
        assert!(parse_poly2("1.5*z1").unwrap_err().message.contains("non-rational"));
        assert!(parse_poly2("z1 +").is_err());
        assert!(parse_poly2("(z1").is_err());
        assert!(parse_poly2("z0").is_err());
        assert!(parse_poly2("1/0").is_err());
        assert!(parse_poly2("z1 z2").is_err());
        assert!(parse_poly2("x").is_err());
    }

    #[test]
    fn print_forms() {
        let f = parse_poly2("(3/2)*z1^2*z2 - ~z2").unwrap();
        assert_eq!(f.to_string(), "(3/2)*z1^2*z2 - ~z2");
        assert_eq!(parse_poly2("-z1 + 2 - (1/3)").unwrap().to_string(), "-z1 + (5/3)");
        assert_eq!(parse_poly2("(1-2i)*~z1").unwrap().to_string(), "(1-2i)*~z1");
        assert_eq!(parse_poly2("z1 - z1").unwrap().to_string(), "0");
        assert_eq!(parse_poly2("i*z2*~z2").unwrap().to_string(), "(1i)*z2*~z2");
    }

    #[test]
    fn products_expand() {
        let f = parse_poly2("(z1 + ~z1)^2").unwrap();
        let g = parse_poly2("z1^2 + 2*z1*~z1 + ~z1^2").unwrap();
        assert_eq!(f, g);
    }
}
