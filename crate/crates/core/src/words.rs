//! Generator words and standard expressions.
//!
//! A `Word` is a sequence over the alphabet {s_i, f_i, e_i} with diagram
//! semantics: evaluation composes the generator diagrams left to right and
//! accumulates the power of Q picked up along the way.
//!
//! `standard_word` synthesizes, for every seat-plan, a deterministic word that
//! evaluates back to exactly that diagram with zero Q-power. The word has the
//! shape
//!
//!   x_M · (fuse runs per upper part) · (E-cuts of non-representative upper
//!   slots) · (routing permutation) · (reversed fuse runs per lower part) ·
//!   reversed x_F
//!
//! where x_M and x_F sort the part elements into consecutive slots. The lower
//! half keeps every slot of every lower part connected upward, so each
//! dangling strand produced by a top-side cut lands inside some lower block
//! and no interior component ever closes. The round-trip tests enforce this
//! for every diagram.

use crate::algebra::AlgElement;
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::seatplan::SeatPlan;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    /// Transposition s_i (1 ≤ i ≤ n−1).
    S(usize),
    /// Fusion f_i (1 ≤ i ≤ n−1).
    F(usize),
    /// Cut e_i (1 ≤ i ≤ n).
    E(usize),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::S(i) | Letter::F(i) | Letter::E(i) => i,
        }
    }

    pub fn diagram(self, n: usize) -> Result<SeatPlan> {
        match self {
            Letter::S(i) => SeatPlan::generator_s(n, i),
            Letter::F(i) => SeatPlan::generator_f(n, i),
            Letter::E(i) => SeatPlan::generator_e(n, i),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::S(i) => write!(f, "s{i}"),
            Letter::F(i) => write!(f, "f{i}"),
            Letter::E(i) => write!(f, "e{i}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Parse whitespace-separated letters `s1 f2 e3`, case-insensitive.
    pub fn parse(text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for raw in text.split_whitespace() {
            let mut chars = raw.chars();
            let tag = chars.next().map(|c| c.to_ascii_lowercase());
            let index: usize = chars.as_str().parse().map_err(|_| Error::ParseError {
                pos: 0,
                msg: format!("bad letter '{raw}'"),
            })?;
            let letter = match tag {
                Some('s') => Letter::S(index),
                Some('f') => Letter::F(index),
                Some('e') => Letter::E(index),
                _ => {
                    return Err(Error::ParseError {
                        pos: 0,
                        msg: format!("bad letter '{raw}'"),
                    })
                }
            };
            if index == 0 {
                return Err(Error::ParseError {
                    pos: 0,
                    msg: format!("letter index must be positive in '{raw}'"),
                });
            }
            letters.push(letter);
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&rendered.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Word {
        Word(iter.into_iter().collect())
    }
}

/// Compose the generator diagrams of `word` left to right at strand count n.
/// Returns the resulting diagram and the total power of Q removed.
pub fn eval_word(word: &Word, n: usize) -> Result<(SeatPlan, usize)> {
    let mut diagram = SeatPlan::identity(n);
    let mut power = 0;
    for &letter in &word.0 {
        let step = diagram.compose(&letter.diagram(n)?)?;
        diagram = step.diagram;
        power += step.removed;
    }
    Ok((diagram, power))
}

/// Q^power · [diagram].
pub fn word_to_element(word: &Word, n: usize) -> Result<AlgElement> {
    let (diagram, power) = eval_word(word, n)?;
    Ok(AlgElement::from_term(
        diagram,
        IntPoly::monomial(num::BigInt::from(1), power),
    ))
}

/// The min-ordered part sequences of a seat-plan.
///
/// Propagating parts come first (positions 1..p), ordered by minimum element;
/// defective parts follow, again by minimum. `sigma[k]` is the 1-based index
/// j such that the upper part M_j and the lower part F_{k+1} belong to the
/// same block of w.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartData {
    /// Upper parts M_1..M_u as sorted top indices.
    pub mseq: Vec<Vec<usize>>,
    /// Lower parts F_1..F_v as sorted bottom indices.
    pub fseq: Vec<Vec<usize>>,
    /// Propagating count p.
    pub p: usize,
    /// sigma[k-1] = j with M_j ⊔ F_k' a block of w (1-based, k = 1..p).
    pub sigma: Vec<usize>,
}

pub fn part_data(w: &SeatPlan) -> PartData {
    let mut prop_pairs: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut upper_defective: Vec<Vec<usize>> = Vec::new();
    let mut lower_defective: Vec<Vec<usize>> = Vec::new();
    for block in w.blocks() {
        let upper: Vec<usize> = block
            .iter()
            .filter(|p| p.is_top())
            .map(|p| p.index())
            .collect();
        let lower: Vec<usize> = block
            .iter()
            .filter(|p| !p.is_top())
            .map(|p| p.index())
            .collect();
        match (upper.is_empty(), lower.is_empty()) {
            (false, false) => prop_pairs.push((upper, lower)),
            (false, true) => upper_defective.push(upper),
            (true, false) => lower_defective.push(lower),
            (true, true) => unreachable!("empty block"),
        }
    }
    let p = prop_pairs.len();

    let mut mseq: Vec<Vec<usize>> = prop_pairs.iter().map(|(u, _)| u.clone()).collect();
    mseq.sort_by_key(|part| part[0]);
    let mut fseq_prop: Vec<(Vec<usize>, Vec<usize>)> = prop_pairs;
    fseq_prop.sort_by_key(|(_, l)| l[0]);
    let sigma: Vec<usize> = fseq_prop
        .iter()
        .map(|(u, _)| 1 + mseq.iter().position(|m| m == u).expect("part present"))
        .collect();
    let mut fseq: Vec<Vec<usize>> = fseq_prop.into_iter().map(|(_, l)| l).collect();

    upper_defective.sort_by_key(|part| part[0]);
    lower_defective.sort_by_key(|part| part[0]);
    mseq.extend(upper_defective);
    fseq.extend(lower_defective);
    PartData {
        mseq,
        fseq,
        p,
        sigma,
    }
}

/// Reduced S-word for a permutation in one-line notation (1-based images),
/// obtained by bubble sort; evaluation equals the permutation diagram.
pub fn permutation_word(one_line: &[usize]) -> Word {
    let mut arr: Vec<usize> = one_line.to_vec();
    let n = arr.len();
    let mut swaps: Vec<usize> = Vec::new();
    loop {
        let mut swapped = false;
        for i in 1..n {
            if arr[i - 1] > arr[i] {
                arr.swap(i - 1, i);
                swaps.push(i);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    // arr sorted means π·s_{i1}···s_{ik} = id, so π = s_{ik}···s_{i1}
    swaps.into_iter().rev().map(Letter::S).collect()
}

/// Deterministic standard word: eval_word(standard_word(w), n) = (w, 0).
pub fn standard_word(w: &SeatPlan) -> Word {
    let n = w.n();
    let data = part_data(w);
    let mut letters: Vec<Letter> = Vec::new();

    // x_M: slot j receives the j-th element of the flattened upper sequence
    let m_flat: Vec<usize> = data.mseq.iter().flatten().copied().collect();
    letters.extend(permutation_word(&m_flat).0);

    // fuse each upper part's slot run, then cut every slot that is not the
    // representative (first slot) of a propagating part
    let mut slot = 1;
    let mut m_start = Vec::with_capacity(data.mseq.len());
    for part in &data.mseq {
        m_start.push(slot);
        for a in slot..slot + part.len() - 1 {
            letters.push(Letter::F(a));
        }
        slot += part.len();
    }
    for (k, part) in data.mseq.iter().enumerate() {
        let keep_first = k < data.p;
        for offset in 0..part.len() {
            if keep_first && offset == 0 {
                continue;
            }
            letters.push(Letter::E(m_start[k] + offset));
        }
    }

    // routing permutation: the representative slot of F_k must receive the
    // block of M_{sigma(k)}; everything else pairs up in ascending order
    let f_start: Vec<usize> = data
        .fseq
        .iter()
        .scan(1, |acc, part| {
            let start = *acc;
            *acc += part.len();
            Some(start)
        })
        .collect();
    let mut routing = vec![0usize; n];
    let mut used_top = vec![false; n + 1];
    for k in 0..data.p {
        let top = m_start[data.sigma[k] - 1];
        routing[f_start[k] - 1] = top;
        used_top[top] = true;
    }
    let mut free_tops = (1..=n).filter(|&j| !used_top[j]);
    for r in routing.iter_mut() {
        if *r == 0 {
            *r = free_tops.next().expect("counts match");
        }
    }
    letters.extend(permutation_word(&routing).0);

    // lower half: star of (x_F · fuse runs), i.e. the reversed word; every
    // lower part keeps all of its slots joined upward, absorbing the
    // singletons cut above
    let f_flat: Vec<usize> = data.fseq.iter().flatten().copied().collect();
    let mut lower: Vec<Letter> = permutation_word(&f_flat).0;
    let mut slot = 1;
    for part in &data.fseq {
        for a in slot..slot + part.len() - 1 {
            lower.push(Letter::F(a));
        }
        slot += part.len();
    }
    letters.extend(lower.into_iter().rev());

    Word(letters)
}
