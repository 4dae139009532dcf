//! The field K₀ = ℚ(Q) of rational functions, where all representation
//! matrix entries live.
//!
//! A `RatFunc` is stored fully reduced over Z[Q]: numerator and denominator
//! share no factor (neither polynomial nor integer content) and the
//! denominator has positive leading coefficient. That representation is
//! unique, so field equality is plain structural equality.

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use num::{BigInt, BigRational, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    /// Normalizing constructor. Errors only when `den` is the zero polynomial.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        if den.leading_coeff().unwrap().is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: IntPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> RatFunc {
        RatFunc::from_poly(IntPoly::from_int(c))
    }

    /// p/q for integers, q ≠ 0.
    pub fn from_ratio(p: i64, q: i64) -> RatFunc {
        RatFunc::new(IntPoly::from_int(p), IntPoly::from_int(q)).expect("nonzero denominator")
    }

    pub fn zero() -> RatFunc {
        RatFunc::from_poly(IntPoly::zero())
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(IntPoly::one())
    }

    pub fn q() -> RatFunc {
        RatFunc::from_poly(IntPoly::q())
    }

    /// Q + c.
    pub fn q_plus(c: i64) -> RatFunc {
        RatFunc::from_poly(IntPoly::q_plus(c))
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self * &other.inv()?)
    }

    /// Exact evaluation at Q = q0.
    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Canonical text form, denominator always parenthesized:
    /// `Q / (Q - 1)`, `(Q^2 - 2*Q) / (Q - 1)`, `3`.
    pub fn render(&self) -> String {
        if self.den.is_one() {
            return self.num.render();
        }
        let num = if self.num.is_monomial() {
            self.num.render()
        } else {
            format!("({})", self.num.render())
        };
        format!("{} / ({})", num, self.den.render())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.render())
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominators")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominators")
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

// ---- parsing ----

/// Parse an expression over integer literals, `Q`, `+ - * / ^` and
/// parentheses. `^` binds tighter than `*` and `/`; unary minus is allowed.
pub fn parse(text: &str) -> Result<RatFunc> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let value = p.expr()?;
    match p.peek() {
        None => Ok(value),
        Some((pos, _)) => Err(Error::ParseError {
            pos,
            msg: "trailing input".into(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            'Q' | 'q' => {
                out.push((i, Tok::Q));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                out.push((
                    start,
                    Tok::Int(digits.parse::<BigInt>().map_err(|_| Error::ParseError {
                        pos: start,
                        msg: "bad integer literal".into(),
                    })?),
                ));
            }
            other => {
                return Err(Error::ParseError {
                    pos: i,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, &Tok)> {
        self.tokens.get(self.pos).map(|(p, t)| (*p, t))
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn end_pos(&self) -> usize {
        self.tokens.last().map(|(p, _)| p + 1).unwrap_or(0)
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some((_, tok)) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        while let Some((pos, tok)) = self.peek() {
            match tok {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = acc.div(&rhs).map_err(|_| Error::ParseError {
                        pos,
                        msg: "division by zero".into(),
                    })?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if let Some((_, Tok::Minus)) = self.peek() {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if let Some((pos, Tok::Caret)) = self.peek() {
            self.bump();
            match self.bump() {
                Some((_, Tok::Int(e))) => {
                    let e = u32::try_from(&e).map_err(|_| Error::ParseError {
                        pos,
                        msg: "exponent out of range".into(),
                    })?;
                    let mut acc = RatFunc::one();
                    for _ in 0..e {
                        acc = &acc * &base;
                    }
                    return Ok(acc);
                }
                other => {
                    return Err(Error::ParseError {
                        pos: other.map(|(p, _)| p).unwrap_or_else(|| self.end_pos()),
                        msg: "expected integer exponent".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.bump() {
            Some((_, Tok::Int(n))) => Ok(RatFunc::from_poly(IntPoly::constant(n))),
            Some((_, Tok::Q)) => Ok(RatFunc::q()),
            Some((pos, Tok::LParen)) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    _ => Err(Error::ParseError {
                        pos,
                        msg: "unclosed parenthesis".into(),
                    }),
                }
            }
            Some((pos, _)) => Err(Error::ParseError {
                pos,
                msg: "expected integer, Q or '('".into(),
            }),
            None => Err(Error::ParseError {
                pos: self.end_pos(),
                msg: "unexpected end of input".into(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rf(text: &str) -> RatFunc {
        parse(text).unwrap()
    }

    #[test]
    fn complementary_fractions_sum_to_one() {
        // 1/Q + (Q-1)/Q = 1
        assert_eq!(&rf("1/Q") + &rf("(Q-1)/Q"), RatFunc::one());
    }

    #[test]
    fn add_identity_and_inverse() {
        let x = rf("(Q^2-3)/(Q-5)");
        assert_eq!(&x + &RatFunc::zero(), x);
        assert_eq!(&rf("Q/(Q-1)") + &rf("-Q/(Q-1)"), RatFunc::zero());
    }

    #[test]
    fn mul_cases() {
        assert_eq!(&rf("Q/(Q-1)") * &rf("(Q-1)/Q"), RatFunc::one());
        assert_eq!(
            &rf("(Q-2)/(Q-1)") * &rf("(Q-2)/(Q-1)"),
            rf("(Q^2-4*Q+4)/(Q^2-2*Q+1)")
        );
        let x = rf("(3*Q+1)/(Q-7)");
        assert_eq!(&x * &RatFunc::one(), x);
    }

    #[test]
    fn inv_cases() {
        assert_eq!(rf("Q/(Q-1)").inv().unwrap(), rf("(Q-1)/Q"));
        assert_eq!(RatFunc::one().inv().unwrap(), RatFunc::one());
        // normalization reduces (Q²−Q)/(Q−1) to Q before inverting
        assert_eq!(rf("(Q^2-Q)/(Q-1)").inv().unwrap(), rf("1/Q"));
        assert_eq!(RatFunc::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn eval_cases() {
        let three = BigRational::from(BigInt::from(3));
        assert_eq!(
            rf("Q/(Q-1)").eval_at(&three).unwrap(),
            BigRational::new(BigInt::from(3), BigInt::from(2))
        );
        let two = BigRational::from(BigInt::from(2));
        assert!(rf("Q*(Q-2)/(Q-1)").eval_at(&two).unwrap().is_zero());
        let one = BigRational::from(BigInt::from(1));
        assert_eq!(rf("1/(Q-1)").eval_at(&one), Err(Error::PoleAtPoint));
    }

    #[test]
    fn parse_examples() {
        let p = rf("Q^2 - 3*Q + 4");
        assert_eq!(p.numerator().coeffs().to_vec(), {
            use num::BigInt as B;
            vec![B::from(4), B::from(-3), B::from(1)]
        });
        assert_eq!(rf("Q/(Q-1)").render(), "Q / (Q - 1)");
        assert!(matches!(parse("(Q"), Err(Error::ParseError { .. })));
        assert!(matches!(parse("Q +"), Err(Error::ParseError { .. })));
        assert!(matches!(parse("1/(Q-Q)"), Err(Error::ParseError { .. })));
    }

    #[test]
    fn caret_binds_tighter_than_star() {
        assert_eq!(rf("2*Q^2"), &rf("2") * &(&rf("Q") * &rf("Q")));
        assert_eq!(rf("-Q^2"), -&(&rf("Q") * &rf("Q")));
    }

    #[test]
    fn print_parse_roundtrip() {
        for text in [
            "0",
            "1",
            "-3",
            "Q",
            "Q / (Q - 1)",
            "(Q^2 - 2*Q) / (Q - 1)",
            "(3*Q - 1) / (2*Q - 4)",
            "-Q / (Q + 5)",
        ] {
            let v = rf(text);
            assert_eq!(parse(&v.render()).unwrap(), v, "roundtrip of {text}");
        }
    }

    fn random_rf(rng: &mut StdRng) -> RatFunc {
        let poly = |rng: &mut StdRng| {
            let deg = rng.random_range(0..3usize);
            IntPoly::from_coeffs(
                (0..=deg)
                    .map(|_| BigInt::from(rng.random_range(-4i64..=4)))
                    .collect(),
            )
        };
        loop {
            let den = poly(rng);
            if den.is_zero() {
                continue;
            }
            return RatFunc::new(poly(rng), den).unwrap();
        }
    }

    #[test]
    fn field_axioms_on_random_inputs() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..200 {
            let a = random_rf(&mut rng);
            let b = random_rf(&mut rng);
            let c = random_rf(&mut rng);
            assert_eq!(&a + &b, &b + &a);
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                assert_eq!(&a * &a.inv().unwrap(), RatFunc::one());
            }
        }
    }

    #[test]
    fn eval_is_multiplicative() {
        let mut rng = StdRng::seed_from_u64(7);
        let q0 = BigRational::new(BigInt::from(17), BigInt::from(5));
        for _ in 0..100 {
            let a = random_rf(&mut rng);
            let b = random_rf(&mut rng);
            if let (Ok(ea), Ok(eb), Ok(eab)) = (
                a.eval_at(&q0),
                b.eval_at(&q0),
                (&a * &b).eval_at(&q0),
            ) {
                assert_eq!(eab, ea * eb);
            }
        }
    }
}
