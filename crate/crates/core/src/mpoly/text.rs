use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Monomial, MonomialOrder, MultiPoly, Ring};
use crate::exactnum::BigRational;

/// Parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

fn lex(src: &str) -> Result<Lexer, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            toks.push((Tok::Num(s.parse().unwrap()), l0, c0));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            toks.push((Tok::Ident(chars[start..i].iter().collect()), l0, c0));
            continue;
        }
        if c == '*' && chars.get(i + 1) == Some(&'*') {
            toks.push((Tok::Op('^'), l0, c0));
            i += 2;
            col += 2;
            continue;
        }
        if "+-*/^()".contains(c) {
            toks.push((Tok::Op(c), l0, c0));
            i += 1;
            col += 1;
            continue;
        }
        return Err(ParseError {
            line: l0,
            col: c0,
            msg: format!("unexpected character '{c}'"),
        });
    }
    toks.push((Tok::End, line, col));
    Ok(Lexer { toks, pos: 0 })
}

struct Parser<'a> {
    lx: Lexer,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.lx.toks[self.lx.pos].0
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        let (_, line, col) = &self.lx.toks[self.lx.pos];
        ParseError {
            line: *line,
            col: *col,
            msg: msg.into(),
        }
    }

    fn bump(&mut self) -> Tok {
        let t = self.lx.toks[self.lx.pos].0.clone();
        if t != Tok::End {
            self.lx.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = MultiPoly::zero(self.ring);
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    false
                }
                Tok::Op('-') => {
                    self.bump();
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    acc = &acc * &self.power()?;
                }
                Tok::Op('/') => {
                    self.bump();
                    let d = self.power()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(self.err("division only by a nonzero constant"));
                    }
                    acc = acc.scale(&d.coeff(&Monomial::one()).recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == &Tok::Op('^') {
            self.bump();
            match self.bump() {
                Tok::Num(k) => {
                    let k: u32 = k
                        .try_into()
                        .ok()
                        .filter(|&k| k <= 1000)
                        .ok_or_else(|| self.err("exponent too large"))?;
                    return Ok(base.pow(k));
                }
                _ => {
                    self.lx.pos -= 1;
                    return Err(self.err("expected a nonnegative integer exponent"));
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(MultiPoly::constant(self.ring, BigRational::from_integer(n)))
            }
            Tok::Ident(name) => match self.ring.index_of(&name) {
                Some(i) => {
                    self.bump();
                    Ok(MultiPoly::var(self.ring, i))
                }
                None => Err(self.err(format!("unknown variable '{name}'"))),
            },
            Tok::Op('(') => {
                self.bump();
                let e = self.expr()?;
                if self.bump() != Tok::Op(')') {
                    self.lx.pos -= 1;
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Tok::Op('-') => {
                self.bump();
                Ok(-&self.power()?)
            }
            Tok::End => Err(self.err("unexpected end of input")),
            Tok::Op(c) => Err(self.err(format!("unexpected '{c}'"))),
        }
    }
}

/// Parses a polynomial over the given ring. Accepts `+ - * / ^ **`,
/// parentheses and integer literals; division is allowed by constants only.
pub fn parse_poly(src: &str, ring: &Arc<Ring>) -> Result<MultiPoly, ParseError> {
    let mut p = Parser { lx: lex(src)?, ring };
    if p.peek() == &Tok::End {
        return Err(p.err("empty polynomial"));
    }
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Parses with an inferred ring. Names of the form `<letter><0..2>` sharing
/// one letter give the projective ring on that letter.
pub fn parse_auto(src: &str) -> Result<MultiPoly, ParseError> {
    let lx = lex(src)?;
    let mut names: Vec<String> = lx
        .toks
        .iter()
        .filter_map(|(t, _, _)| match t {
            Tok::Ident(s) => Some(s.clone()),
            _ => None,
        })
        .collect();
    names.sort();
    names.dedup();
    let prefix = names.first().and_then(|s| s.chars().next()).unwrap_or('x');
    let projective = names.iter().all(|s| {
        let mut cs = s.chars();
        cs.next() == Some(prefix) && matches!(cs.as_str(), "0" | "1" | "2")
    });
    let ring = if projective {
        Ring::projective(&prefix.to_string())
    } else {
        Ring::new(names, MonomialOrder::GradedRevLex).map_err(|e| ParseError {
            line: 1,
            col: 1,
            msg: e.to_string(),
        })?
    };
    parse_poly(src, &ring)
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, vars: &[String]) -> fmt::Result {
    let mut first = true;
    for (i, v) in vars.iter().enumerate() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(v)?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

/// Terms are printed in descending graded lex order regardless of the ring
/// order, so output is stable across orders.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let n = self.nvars();
        let mut terms: Vec<&(Monomial, BigRational)> = self.terms().iter().collect();
        terms.sort_by_cached_key(|(m, _)| std::cmp::Reverse(MonomialOrder::GradedLex.key(m, n)));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, m, self.ring().vars())?;
            }
        }
        Ok(())
    }
}

impl MultiPoly {
    /// True if the coefficient is an integer for every term.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms().iter().all(|(_, c)| c.is_integer())
    }

    /// Maximum coefficient bit length (numerator or denominator).
    pub fn max_coeff_bits(&self) -> u64 {
        self.terms()
            .iter()
            .map(|(_, c)| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Arc<Ring> {
        Ring::projective("x")
    }

    #[test]
    fn round_trip() {
        let r = x();
        for s in [
            "x0^2 + x0*x2 - x1^2",
            "x0^3 - 3/4*x0^2*x2 - 2*x0*x1^2 - 21/16*x0*x2^2 - 3/2*x1^2*x2 + 55/64*x2^3",
            "-x0 + 7",
            "0",
        ] {
            let p = parse_poly(s, &r).unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(parse_poly(&p.to_string(), &r).unwrap(), p);
        }
    }

    #[test]
    fn tolerant_input() {
        let r = x();
        let a = parse_poly("  x0^3 - 3/4*x2*x0^2 - 2*x1^2*x0 ", &r).unwrap();
        let b = parse_poly("-2*x0*x1**2 + x0^3 - (3/4)*x0^2*x2", &r).unwrap();
        assert_eq!(a, b);
        let c = parse_poly("(x0 + x1)*(x0 - x1)", &r).unwrap();
        assert_eq!(c.to_string(), "x0^2 - x1^2");
    }

    #[test]
    fn error_positions() {
        let r = x();
        let e = parse_poly("x0 +\n  x3", &r).unwrap_err();
        assert_eq!((e.line, e.col), (2, 3));
        let e = parse_poly("x0 + $", &r).unwrap_err();
        assert_eq!((e.line, e.col), (1, 6));
        assert!(parse_poly("x0/x1", &r).is_err());
        assert!(parse_poly("(x0", &r).is_err());
        assert!(parse_poly("", &r).is_err());
        assert!(parse_poly("x0 x1", &r).is_err());
    }

    #[test]
    fn auto_ring() {
        let p = parse_auto("y0^2 - y2^2").unwrap();
        assert_eq!(p.ring().vars(), ["y0", "y1", "y2"]);
        let p = parse_auto("a*b + c").unwrap();
        assert_eq!(p.ring().vars(), ["a", "b", "c"]);
    }
}
