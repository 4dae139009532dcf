//! Hook-length ratios of Q-augmented Young diagrams.
//!
//! h(λ) is the product of all hook lengths. For an augmented diagram the
//! first row is symbolically long, so h itself is not a finite polynomial,
//! but a ratio h(big)/h(small) for shapes one box apart is: only hooks in the
//! removed box's row and column change, the removed corner has hook 1, and
//! the long run of untouched first-row columns telescopes. First-row hooks
//! are linear polynomials in Q, all others are the ordinary core hooks.

use crate::bratteli::{AugShape, Augment};
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::ratfunc::RatFunc;

/// h(big)/h(small) where `big` is a tilde shape and `small` a hat shape
/// obtained from it by removing one box: the first-row box (equal cores) or
/// one removable core box.
pub fn hook_ratio(big: &AugShape, small: &AugShape) -> Result<RatFunc> {
    let apart = || Error::NotOneBoxApart(big.to_string(), small.to_string());
    if big.kind != Augment::Tilde || small.kind != Augment::Hat {
        return Err(apart());
    }
    let lam = &big.core;
    let size = lam.size() as i64;
    // first-row hook at column c: (Q − |λ|) − c + λ'_c + 1
    let first_row_hook = |c: usize| -> IntPoly {
        IntPoly::q_plus(-size - c as i64 + lam.conjugate_at(c) as i64 + 1)
    };
    let over_predecessor = |h: IntPoly| -> RatFunc {
        let below = &h - &IntPoly::one();
        RatFunc::new(h, below).expect("hook > 1 generically")
    };

    if big.core == small.core {
        // removed the last first-row box; columns beyond λ_1 telescope to Q − |λ| − λ_1
        let lam1 = lam.parts().first().copied().unwrap_or(0);
        let mut ratio = RatFunc::from_poly(IntPoly::q_plus(-size - lam1 as i64));
        for c in 1..=lam1 {
            ratio = ratio * over_predecessor(first_row_hook(c));
        }
        Ok(ratio)
    } else {
        // removed a removable core box
        let (_, r0) = lam
            .removals()
            .into_iter()
            .find(|(p, _)| p == &small.core)
            .ok_or_else(apart)?;
        let c0 = lam.parts()[r0 - 1];
        let mut ratio = over_predecessor(first_row_hook(c0));
        for c in 1..c0 {
            ratio = ratio * over_predecessor(IntPoly::from_int(lam.hook(r0, c) as i64));
        }
        for r in 1..r0 {
            ratio = ratio * over_predecessor(IntPoly::from_int(lam.hook(r, c0) as i64));
        }
        Ok(ratio)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bratteli::{neighbors, Direction, Partition};
    use crate::ratfunc::parse;

    fn tilde(parts: &[usize]) -> AugShape {
        AugShape::tilde(Partition::new(parts.to_vec()).unwrap())
    }

    fn hat(parts: &[usize]) -> AugShape {
        AugShape::hat(Partition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn printed_cut_ratios() {
        let cases = [
            (&[][..], &[][..], "Q"),
            (&[1][..], &[][..], "Q/(Q-1)"),
            (&[1][..], &[1][..], "Q*(Q-2)/(Q-1)"),
            (&[2][..], &[1][..], "2*(Q-2)/(Q-3)"),
            (&[2][..], &[2][..], "(Q-1)*(Q-4)/(Q-3)"),
            (&[1, 1][..], &[1][..], "2*Q/(Q-1)"),
            (&[1, 1][..], &[1, 1][..], "Q*(Q-3)/(Q-1)"),
            (&[3][..], &[2][..], "3*(Q-4)/(Q-5)"),
            (&[3][..], &[3][..], "(Q-2)*(Q-6)/(Q-5)"),
            (&[2, 1][..], &[1, 1][..], "3*(Q-3)/(2*(Q-4))"),
            (&[2, 1][..], &[2][..], "3*(Q-1)/(2*(Q-2))"),
            (
                &[2, 1][..],
                &[2, 1][..],
                "(Q-1)*(Q-3)*(Q-5)/((Q-2)*(Q-4))",
            ),
            (&[1, 1, 1][..], &[1, 1][..], "3*Q/(Q-1)"),
            (&[1, 1, 1][..], &[1, 1, 1][..], "Q*(Q-4)/(Q-1)"),
        ];
        for (big, small, expected) in cases {
            assert_eq!(
                hook_ratio(&tilde(big), &hat(small)).unwrap(),
                parse(expected).unwrap(),
                "h(~{big:?})/h(^{small:?})"
            );
        }
    }

    #[test]
    fn printed_join_ratios() {
        // h(μ̂)/h(μ̂ plus a box) inverts the cut ratio
        let cases = [
            (&[][..], &[][..], "1/Q"),
            (&[][..], &[1][..], "(Q-1)/Q"),
            (&[1][..], &[1][..], "(Q-1)/(Q*(Q-2))"),
            (&[1][..], &[2][..], "(Q-3)/(2*(Q-2))"),
            (&[1][..], &[1, 1][..], "(Q-1)/(2*Q)"),
            (&[2][..], &[2, 1][..], "2*(Q-2)/(3*(Q-1))"),
        ];
        for (small, big, expected) in cases {
            assert_eq!(
                hook_ratio(&tilde(big), &hat(small)).unwrap().inv().unwrap(),
                parse(expected).unwrap(),
                "h(^{small:?})/h(~{big:?})"
            );
        }
    }

    #[test]
    fn rejects_shapes_not_one_box_apart() {
        assert!(hook_ratio(&tilde(&[2]), &hat(&[2, 1])).is_err());
        assert!(hook_ratio(&tilde(&[]), &hat(&[1])).is_err());
        assert!(hook_ratio(&tilde(&[3]), &hat(&[1])).is_err());
        // wrong kinds
        assert!(hook_ratio(&hat(&[1]), &hat(&[])).is_err());
        assert!(hook_ratio(&tilde(&[1]), &tilde(&[1])).is_err());
    }

    #[test]
    fn row_sums_give_q_and_column_sums_give_one() {
        // Σ over removable boxes of h(λ̃)/h(μ̂) = Q, and Σ over additions of
        // h(μ̂)/h(ν̃) = 1, for every core of size ≤ 4
        let mut cores = vec![];
        for size in 0..=4 {
            cores.extend(
                crate::bratteli::vertices(2 * size)
                    .into_iter()
                    .filter(|s| s.core.size() == size),
            );
        }
        for shape in &cores {
            let lam = shape.clone();
            let q = RatFunc::q();
            let mut row_sum = RatFunc::zero();
            for down in neighbors(&lam, Direction::Down) {
                row_sum = row_sum + hook_ratio(&lam, &down).unwrap();
            }
            assert_eq!(row_sum, q, "row sum at {lam}");

            let mu = AugShape::hat(lam.core.clone());
            let mut col_sum = RatFunc::zero();
            for up in neighbors(&mu, Direction::Up) {
                col_sum = col_sum + hook_ratio(&up, &mu).unwrap().inv().unwrap();
            }
            assert_eq!(col_sum, RatFunc::one(), "column sum at {mu}");
        }
    }
}
