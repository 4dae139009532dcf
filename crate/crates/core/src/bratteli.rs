//! The Bratteli graph of the tower of partition algebras and its path model.
//!
//! Vertices are Q-augmented Young diagrams: λ̃ = (Q−|λ|, λ) at integer levels
//! and λ̂ = (Q−1−|λ|, λ) at half-integer levels. Consecutive levels are joined
//! by remove-a-box (tilde to hat) and add-a-box (hat to tilde) moves; a
//! tableau is a path from the empty tilde shape at level 0. Q is generic, so
//! the augmented first row never interferes with the core.
//!
//! Levels are handled as doubled integers throughout (`level2` = 2·level).

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// An ordinary integer partition; parts weakly decreasing and positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::ParseError {
                pos: 0,
                msg: format!("{parts:?} is not weakly decreasing and positive"),
            });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column heights (conjugate partition entries), 1-based column index.
    pub fn conjugate_at(&self, col: usize) -> usize {
        self.parts.iter().filter(|&&len| len >= col).count()
    }

    /// Hook length of the box at (row, col), both 1-based.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.parts[row - 1] - col;
        let leg = self
            .parts
            .iter()
            .skip(row)
            .filter(|&&len| len >= col)
            .count();
        arm + leg + 1
    }

    /// Partitions obtained by removing one removable (corner) box, with the
    /// 1-based row each was removed from.
    pub fn removals(&self) -> Vec<(Partition, usize)> {
        let mut out = Vec::new();
        for row in 1..=self.parts.len() {
            let here = self.parts[row - 1];
            let below = self.parts.get(row).copied().unwrap_or(0);
            if here > below {
                let mut parts = self.parts.clone();
                parts[row - 1] -= 1;
                if parts[row - 1] == 0 {
                    parts.remove(row - 1);
                }
                out.push((Partition { parts }, row));
            }
        }
        out
    }

    /// Partitions obtained by adding one addable box, with the 1-based row.
    pub fn additions(&self) -> Vec<(Partition, usize)> {
        let mut out = Vec::new();
        for row in 1..=self.parts.len() + 1 {
            let here = self.parts.get(row - 1).copied().unwrap_or(0);
            let above = if row == 1 {
                usize::MAX
            } else {
                self.parts[row - 2]
            };
            if here < above {
                let mut parts = self.parts.clone();
                if row <= parts.len() {
                    parts[row - 1] += 1;
                } else {
                    parts.push(1);
                }
                out.push((Partition { parts }, row));
            }
        }
        out
    }

    /// True if `self` covers `smaller` (one box larger, containing it).
    pub fn covers(&self, smaller: &Partition) -> bool {
        self.removals().iter().any(|(p, _)| p == smaller)
    }
}

impl Ord for Partition {
    /// Canonical vertex order: by size, then lexicographically with larger
    /// first parts first ((2) before (1,1)).
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, "]")
    }
}

/// Tilde (integer level) or hat (half level) augmentation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Augment {
    Tilde,
    Hat,
}

/// A Q-augmented Young diagram: the core partition plus a first row of
/// Q−|core| (tilde) or Q−1−|core| (hat) boxes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AugShape {
    pub kind: Augment,
    pub core: Partition,
}

impl AugShape {
    pub fn tilde(core: Partition) -> AugShape {
        AugShape {
            kind: Augment::Tilde,
            core,
        }
    }

    pub fn hat(core: Partition) -> AugShape {
        AugShape {
            kind: Augment::Hat,
            core,
        }
    }

    pub fn tilde_empty() -> AugShape {
        AugShape::tilde(Partition::empty())
    }

    /// Parse `~[2,1]` or `^[]`.
    pub fn parse(text: &str) -> Result<AugShape> {
        let text = text.trim();
        let err = |msg: &str| Error::ParseError {
            pos: 0,
            msg: format!("{msg} in shape '{text}'"),
        };
        let (kind, rest) = match text.chars().next() {
            Some('~') => (Augment::Tilde, &text[1..]),
            Some('^') => (Augment::Hat, &text[1..]),
            _ => return Err(err("expected '~' or '^'")),
        };
        let rest = rest.trim();
        if !rest.starts_with('[') || !rest.ends_with(']') {
            return Err(err("expected [..]"));
        }
        let inner = &rest[1..rest.len() - 1];
        let parts: Vec<usize> = if inner.trim().is_empty() {
            vec![]
        } else {
            inner
                .split(',')
                .map(|piece| piece.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err("bad part"))?
        };
        Ok(AugShape {
            kind,
            core: Partition::new(parts)?,
        })
    }
}

impl Ord for AugShape {
    fn cmp(&self, other: &Self) -> Ordering {
        self.core
            .cmp(&other.core)
            .then_with(|| self.kind.cmp(&other.kind))
    }
}

impl PartialOrd for AugShape {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AugShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marker = match self.kind {
            Augment::Tilde => '~',
            Augment::Hat => '^',
        };
        write!(f, "{marker}{}", self.core)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Up,
    Down,
}

/// Render a doubled level as `3` or `5/2`.
pub fn level2_to_string(level2: usize) -> String {
    if level2.is_multiple_of(2) {
        format!("{}", level2 / 2)
    } else {
        format!("{level2}/2")
    }
}

/// Parse `3` or `5/2` into a doubled level.
pub fn level2_from_str(text: &str) -> Result<usize> {
    let text = text.trim();
    let bad = || Error::ParseError {
        pos: 0,
        msg: format!("bad level '{text}'"),
    };
    if let Some((num, den)) = text.split_once('/') {
        if den.trim() != "2" {
            return Err(bad());
        }
        let v: usize = num.trim().parse().map_err(|_| bad())?;
        if v.is_multiple_of(2) {
            return Err(bad());
        }
        Ok(v)
    } else {
        let v: usize = text.parse().map_err(|_| bad())?;
        Ok(2 * v)
    }
}

fn partitions_up_to(max: usize) -> Vec<Partition> {
    fn extend(remaining: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition {
            parts: current.clone(),
        });
        for first in (1..=remaining.min(cap)).rev() {
            current.push(first);
            extend(remaining - first, first, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(max, max, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// All vertices at a level: tilde shapes with |core| ≤ level at integer
/// levels, hat shapes with |core| ≤ level−1/2 at half levels. Canonical order.
pub fn vertices(level2: usize) -> Vec<AugShape> {
    if level2.is_multiple_of(2) {
        partitions_up_to(level2 / 2)
            .into_iter()
            .map(AugShape::tilde)
            .collect()
    } else {
        partitions_up_to((level2 - 1) / 2)
            .into_iter()
            .map(AugShape::hat)
            .collect()
    }
}

/// Neighbors of a shape one half-level away. The rule is symmetric in the
/// level direction: a tilde shape meets hat shapes (remove the augmented
/// first-row box, or a removable core box), a hat shape meets tilde shapes
/// (re-grow the first row, or add an addable core box).
pub fn neighbors(shape: &AugShape, _direction: Direction) -> Vec<AugShape> {
    let mut out = Vec::new();
    match shape.kind {
        Augment::Tilde => {
            out.push(AugShape::hat(shape.core.clone()));
            for (smaller, _) in shape.core.removals() {
                out.push(AugShape::hat(smaller));
            }
        }
        Augment::Hat => {
            out.push(AugShape::tilde(shape.core.clone()));
            for (larger, _) in shape.core.additions() {
                out.push(AugShape::tilde(larger));
            }
        }
    }
    out.sort();
    out
}

/// A path in the graph from the empty tilde shape at level 0; `shapes[k]` is
/// the vertex at doubled level k.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tableau {
    pub shapes: Vec<AugShape>,
}

impl Tableau {
    pub fn level2(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn target(&self) -> &AugShape {
        self.shapes.last().expect("nonempty path")
    }

    pub fn render(&self) -> String {
        self.shapes
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// All tableaux of the target shape at doubled level `level2`, in canonical
/// (lexicographic) order.
pub fn tableaux(target: &AugShape, level2: usize) -> Result<Vec<Tableau>> {
    if !vertices(level2).contains(target) {
        return Err(Error::ShapeNotAtLevel {
            shape: target.to_string(),
            level: level2_to_string(level2),
        });
    }
    let mut out = Vec::new();
    let mut path = vec![AugShape::tilde_empty()];
    fn extend(
        path: &mut Vec<AugShape>,
        target: &AugShape,
        level2: usize,
        out: &mut Vec<Tableau>,
    ) {
        let here2 = path.len() - 1;
        if here2 == level2 {
            if path.last().unwrap() == target {
                out.push(Tableau {
                    shapes: path.clone(),
                });
            }
            return;
        }
        // each half-step changes the core size by at most one
        let gap = target.core.size().abs_diff(path.last().unwrap().core.size());
        if gap > level2 - here2 {
            return;
        }
        for next in neighbors(path.last().unwrap(), Direction::Up) {
            path.push(next);
            extend(path, target, level2, out);
            path.pop();
        }
    }
    extend(&mut path, target, level2, &mut out);
    Ok(out)
}

/// Path counts per vertex at a level, by the dimension recursion.
pub fn dims(level2: usize) -> BTreeMap<AugShape, u64> {
    let mut counts: BTreeMap<AugShape, u64> = BTreeMap::new();
    counts.insert(AugShape::tilde_empty(), 1);
    for _ in 0..level2 {
        let mut next: BTreeMap<AugShape, u64> = BTreeMap::new();
        for (shape, count) in &counts {
            for neighbor in neighbors(shape, Direction::Up) {
                *next.entry(neighbor).or_insert(0) += count;
            }
        }
        counts = next;
    }
    counts
}

/// Σ dim² over the vertices of a level — the dimension of the algebra the
/// level carries.
pub fn sum_of_squared_dims(level2: usize) -> u64 {
    dims(level2).values().map(|d| d * d).sum()
}

/// DOT export of the graph up to `level2`. Vertices are labeled `~[2,1]` /
/// `^[1]` and prefixed by their level so repeated shapes stay distinct.
pub fn graph_export(level2: usize) -> String {
    let mut out = String::from("graph bratteli {\n  rankdir=TB;\n");
    for l2 in 0..=level2 {
        out.push_str(&format!("  // level {}\n", level2_to_string(l2)));
        for v in vertices(l2) {
            out.push_str(&format!("  \"{l2}:{v}\" [label=\"{v}\"];\n"));
        }
    }
    for l2 in 0..level2 {
        for v in vertices(l2) {
            let below: std::collections::BTreeSet<AugShape> =
                vertices(l2 + 1).into_iter().collect();
            for neighbor in neighbors(&v, Direction::Up) {
                if below.contains(&neighbor) {
                    out.push_str(&format!("  \"{l2}:{v}\" -- \"{}:{neighbor}\";\n", l2 + 1));
                }
            }
        }
    }
    out.push_str("}\n");
    out
}
