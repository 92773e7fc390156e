//! Text forms of scalars, polynomials and valuations.
//!
//! Scalar: terms joined by `+` (or `-`), each `<rational>` or
//! `<rational>*pi^<k>` with `0 ≤ k < b`, e.g. `1/3+2*pi^1`. A bare `pi` or
//! `pi^k` is read with coefficient 1. Whitespace is ignored.
//!
//! Polynomial: comma-separated scalars, constant term first, e.g. `0,-1,0,1`
//! for `z^3 - z`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::UPoly;
use crate::scalar::{ExtScalar, PadicContext, Valuation};

struct Cursor<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Cursor { src, chars, pos: 0 }
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(o, _)| o)
            .unwrap_or(self.src.len())
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
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
            Err(Error::parse(self.offset(), format!("expected '{c}'")))
        }
    }

    fn digits(&mut self) -> Result<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::parse(self.offset(), "expected digits"));
        }
        Ok(self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect())
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }
}

fn parse_term(cur: &mut Cursor<'_>, ctx: PadicContext, acc: &mut [BigRational]) -> Result<()> {
    let mut negative = false;
    while let Some(c @ ('+' | '-')) = cur.peek() {
        negative ^= c == '-';
        cur.bump();
    }
    let coeff = if cur.peek() == Some('p') {
        BigRational::from_integer(BigInt::from(1))
    } else {
        let num: BigInt = cur.digits()?.parse().expect("ascii digits");
        let den = if cur.eat('/') {
            let at = cur.offset();
            let den: BigInt = cur.digits()?.parse().expect("ascii digits");
            if den.is_zero() {
                return Err(Error::parse(at, "zero denominator"));
            }
            den
        } else {
            BigInt::from(1)
        };
        let has_pi = cur.eat('*');
        let q = BigRational::new(num, den);
        if !has_pi {
            acc[0] += if negative { -q } else { q };
            return Ok(());
        }
        q
    };
    let at = cur.offset();
    for expected in ['p', 'i'] {
        if cur.bump() != Some(expected) {
            return Err(Error::parse(at, "expected 'pi'"));
        }
    }
    let k = if cur.eat('^') {
        let at = cur.offset();
        cur.digits()?
            .parse::<u64>()
            .map_err(|_| Error::parse(at, "exponent too large"))?
    } else {
        1
    };
    if k >= ctx.ram() as u64 {
        return Err(Error::RamExponentOutOfRange {
            exponent: k,
            ram: ctx.ram(),
        });
    }
    acc[k as usize] += if negative { -coeff } else { coeff };
    Ok(())
}

fn parse_scalar_at(
    cur: &mut Cursor<'_>,
    ctx: PadicContext,
    stop: Option<char>,
) -> Result<ExtScalar> {
    let mut acc = vec![BigRational::zero(); ctx.ram() as usize];
    parse_term(cur, ctx, &mut acc)?;
    loop {
        match cur.peek() {
            None => break,
            Some(c) if Some(c) == stop => break,
            Some('+') | Some('-') => parse_term(cur, ctx, &mut acc)?,
            Some(c) => return Err(Error::parse(cur.offset(), format!("unexpected '{c}'"))),
        }
    }
    Ok(ExtScalar::from_coords(ctx, acc).expect("length matches ram"))
}

pub fn parse_scalar(text: &str, ctx: PadicContext) -> Result<ExtScalar> {
    let mut cur = Cursor::new(text);
    parse_scalar_at(&mut cur, ctx, None)
}

pub fn parse_poly(text: &str, ctx: PadicContext) -> Result<UPoly> {
    let mut cur = Cursor::new(text);
    let mut coeffs = vec![parse_scalar_at(&mut cur, ctx, Some(','))?];
    while !cur.at_end() {
        cur.expect(',')?;
        coeffs.push(parse_scalar_at(&mut cur, ctx, Some(','))?);
    }
    UPoly::new(ctx, coeffs)
}

/// Splits on `;` and parses each piece as a polynomial.
pub fn parse_factor_list(text: &str, ctx: PadicContext) -> Result<Vec<UPoly>> {
    let mut base = 0;
    let mut out = Vec::new();
    for piece in text.split(';') {
        let poly = parse_poly(piece, ctx).map_err(|e| match e {
            Error::Parse { offset, message } => Error::Parse {
                offset: offset + base,
                message,
            },
            other => other,
        })?;
        out.push(poly);
        base += piece.len() + 1;
    }
    Ok(out)
}

/// Comma-separated positive integers.
pub fn parse_multiplicities(text: &str) -> Result<Vec<u32>> {
    let mut base = 0;
    let mut out = Vec::new();
    for piece in text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let m: u32 = piece
            .trim()
            .parse()
            .map_err(|_| Error::parse(base + lead, "expected a positive integer"))?;
        if m == 0 {
            return Err(Error::parse(base + lead, "multiplicity must be positive"));
        }
        out.push(m);
        base += piece.len() + 1;
    }
    Ok(out)
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// `"num/den"`; the form used for every rational in JSON output.
pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// `"num/den"` or `"inf"`.
pub fn valuation_string(v: &Valuation) -> String {
    v.to_string()
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let shown = if first {
                c.clone()
            } else if c.is_negative() {
                f.write_str("-")?;
                -c
            } else {
                f.write_str("+")?;
                c.clone()
            };
            write_rational(f, &shown)?;
            if k > 0 {
                write!(f, "*pi^{k}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, b: u32) -> PadicContext {
        PadicContext::new(p, b).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn scalar_examples() {
        let c1 = ctx(3, 1);
        assert_eq!(parse_scalar("-1", c1).unwrap(), ExtScalar::from_int(c1, -1));
        let c = ctx(3, 2);
        let x = parse_scalar("1/3+2*pi^1", c).unwrap();
        assert_eq!(x.coords(), &[q(1, 3), q(2, 1)]);
        assert_eq!(
            parse_scalar("1*pi^5", c),
            Err(Error::RamExponentOutOfRange {
                exponent: 5,
                ram: 2
            })
        );
    }

    #[test]
    fn whitespace_and_signs() {
        let c = ctx(5, 3);
        let x = parse_scalar(" 1 / 3 - 2 * pi ^ 2 + -pi ", c).unwrap();
        assert_eq!(x.coords(), &[q(1, 3), q(-1, 1), q(-2, 1)]);
        assert_eq!(x.to_string(), "1/3-1*pi^1-2*pi^2");
        assert_eq!(parse_scalar(&x.to_string(), c).unwrap(), x);
    }

    #[test]
    fn parse_error_offsets() {
        let c = ctx(3, 2);
        assert_eq!(
            parse_scalar("1/0", c),
            Err(Error::Parse {
                offset: 2,
                message: "zero denominator".into()
            })
        );
        assert!(matches!(
            parse_scalar("1+x", c),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            parse_scalar("", c),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            parse_scalar("2*po", c),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            parse_poly("0,1,,1", c),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(matches!(
            parse_factor_list("0,1;1,x", c),
            Err(Error::Parse { offset: 6, .. })
        ));
    }

    #[test]
    fn poly_examples() {
        let c = ctx(3, 1);
        let f = parse_poly("0,-1,0,1", c).unwrap();
        assert_eq!(f, UPoly::from_ints(c, &[0, -1, 0, 1]));
        assert_eq!(f.to_string(), "0,-1,0,1");
        assert!(parse_poly("0", c).unwrap().is_zero());
        assert_eq!(parse_poly("1,0,0", c).unwrap(), UPoly::one(c));
    }

    #[test]
    fn factor_and_multiplicity_lists() {
        let c = ctx(3, 1);
        let fs = parse_factor_list("0,1; -1,1", c).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(parse_multiplicities("3, 1").unwrap(), vec![3, 1]);
        assert!(parse_multiplicities("1,0").is_err());
    }
}
