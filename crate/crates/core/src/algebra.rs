//! Z[Q]-linear combinations of seat-plans with the bilinear stacking product.

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::ratfunc;
use crate::seatplan::SeatPlan;
use std::collections::BTreeMap;
use std::fmt;

/// An element of the partition algebra on n strands: a finite Z[Q]-linear
/// combination of seat-plans. Zero coefficients are never stored, so equality
/// is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElement {
    n: usize,
    terms: BTreeMap<SeatPlan, IntPoly>,
}

impl AlgElement {
    pub fn zero(n: usize) -> AlgElement {
        AlgElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> AlgElement {
        AlgElement::from_diagram(SeatPlan::identity(n))
    }

    pub fn from_diagram(w: SeatPlan) -> AlgElement {
        AlgElement::from_term(w, IntPoly::one())
    }

    pub fn from_term(w: SeatPlan, coeff: IntPoly) -> AlgElement {
        let n = w.n();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(w, coeff);
        }
        AlgElement { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SeatPlan, &IntPoly)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, w: &SeatPlan) -> IntPoly {
        self.terms.get(w).cloned().unwrap_or_else(IntPoly::zero)
    }

    pub fn add(&self, other: &AlgElement) -> Result<AlgElement> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            let entry = terms.entry(w.clone()).or_insert_with(IntPoly::zero);
            *entry = &*entry + c;
            if entry.is_zero() {
                terms.remove(w);
            }
        }
        Ok(AlgElement { n: self.n, terms })
    }

    pub fn sub(&self, other: &AlgElement) -> Result<AlgElement> {
        self.add(&other.scale(&IntPoly::from_int(-1)))
    }

    pub fn scale(&self, c: &IntPoly) -> AlgElement {
        if c.is_zero() {
            return AlgElement::zero(self.n);
        }
        AlgElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a * c))
                .collect(),
        }
    }

    /// Bilinear extension of diagram composition; every closed interior
    /// component contributes a factor Q.
    pub fn mul(&self, other: &AlgElement) -> Result<AlgElement> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut terms: BTreeMap<SeatPlan, IntPoly> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let prod = a.compose(b)?;
                let coeff = &(ca * cb) * &IntPoly::monomial(num::BigInt::from(1), prod.removed);
                let entry = terms
                    .entry(prod.diagram)
                    .or_insert_with(IntPoly::zero);
                *entry = &*entry + &coeff;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(AlgElement { n: self.n, terms })
    }

    /// The involution * extended linearly: coefficients fixed, diagrams starred.
    pub fn star(&self) -> AlgElement {
        AlgElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.star(), c.clone()))
                .collect(),
        }
    }

    /// Text form `Q^2 * {{...}} + (Q - 1) * {{...}}`; zero renders as `0`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                if c.is_one() {
                    w.to_string()
                } else if c.is_monomial() && c.leading_coeff().is_some_and(|l| l > &num::BigInt::from(0)) {
                    format!("{c} * {w}")
                } else {
                    format!("({c}) * {w}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parse the text form produced by `render`: a `+`-separated sum of
    /// `coeff * diagram` terms, where `coeff` is a polynomial in Q and may be
    /// omitted when 1.
    pub fn parse(n: usize, text: &str) -> Result<AlgElement> {
        let trimmed = text.trim();
        if trimmed == "0" {
            return Ok(AlgElement::zero(n));
        }
        let mut acc = AlgElement::zero(n);
        for piece in split_top_level_plus(trimmed) {
            let piece = piece.trim();
            let (coeff, diagram_text) = match piece.find('*').map(|_| piece.rfind("* {")) {
                Some(Some(star_pos)) => {
                    let coeff_text = &piece[..star_pos];
                    let rf = ratfunc::parse(coeff_text)?;
                    if !rf.denominator().is_one() {
                        return Err(Error::ParseError {
                            pos: 0,
                            msg: "coefficient must be a polynomial in Q".into(),
                        });
                    }
                    (rf.numerator().clone(), &piece[star_pos + 1..])
                }
                _ => (IntPoly::one(), piece),
            };
            let w = SeatPlan::parse(n, diagram_text.trim())?;
            acc = acc.add(&AlgElement::from_term(w, coeff))?;
        }
        Ok(acc)
    }
}

/// Split on '+' at brace/paren depth zero.
fn split_top_level_plus(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '{' | '(' => depth += 1,
            '}' | ')' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
