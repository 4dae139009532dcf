//! Seat-plan diagrams: set partitions of {1..n, 1'..n'}, the basis of the
//! partition algebra.
//!
//! Points are encoded as signed integers, `j` for a top point and `-j` for
//! the bottom point j'. Blocks are kept in a canonical order (sorted by
//! minimum point under 1 < 2 < … < n < 1' < … < n'), so diagram equality is
//! structural equality.
//!
//! Composition stacks one diagram on another, glues the interface and counts
//! the interior components that close up; each contributes a factor Q to the
//! algebra product.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// A marked point: positive j is the top point j, negative -j the bottom
/// point j'. Ordered 1 < 2 < … < n < 1' < 2' < … < n'.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Point(pub i32);

impl Point {
    pub fn top(j: usize) -> Point {
        Point(j as i32)
    }

    pub fn bottom(j: usize) -> Point {
        Point(-(j as i32))
    }

    pub fn is_top(self) -> bool {
        self.0 > 0
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    /// Swap top and bottom.
    pub fn star(self) -> Point {
        Point(-self.0)
    }

    fn key(self) -> (bool, usize) {
        (!self.is_top(), self.index())
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_top() {
            write!(f, "{}", self.index())
        } else {
            write!(f, "{}'", self.index())
        }
    }
}

/// A seat-plan on n strands.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeatPlan {
    n: usize,
    blocks: Vec<Vec<Point>>,
}

/// Result of stacking two seat-plans: the induced diagram and the number of
/// interior components removed (the exponent of Q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposeResult {
    pub diagram: SeatPlan,
    pub removed: usize,
}

/// Default cap for exhaustive enumeration; B_{2n} grows fast.
pub const DEFAULT_ENUM_BOUND: usize = 5;

impl SeatPlan {
    /// Validating constructor: the blocks must partition {1..n, 1'..n'}.
    pub fn make(n: usize, blocks: Vec<Vec<i32>>) -> Result<SeatPlan> {
        if n == 0 {
            return Err(Error::NotAPartition("strand count must be positive".into()));
        }
        let mut seen = vec![false; 2 * n];
        let mut canon: Vec<Vec<Point>> = Vec::with_capacity(blocks.len());
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::NotAPartition("empty block".into()));
            }
            let mut b = Vec::with_capacity(block.len());
            for &raw in block {
                let j = raw.unsigned_abs() as usize;
                if raw == 0 || j > n {
                    return Err(Error::NotAPartition(format!("point {raw} out of range")));
                }
                let slot = if raw > 0 { j - 1 } else { n + j - 1 };
                if seen[slot] {
                    return Err(Error::NotAPartition(format!(
                        "point {} appears twice",
                        Point(raw)
                    )));
                }
                seen[slot] = true;
                b.push(Point(raw));
            }
            b.sort();
            canon.push(b);
        }
        if let Some(slot) = seen.iter().position(|covered| !covered) {
            let missing = if slot < n {
                Point::top(slot + 1)
            } else {
                Point::bottom(slot - n + 1)
            };
            return Err(Error::NotAPartition(format!("point {missing} uncovered")));
        }
        canon.sort();
        Ok(SeatPlan { n, blocks: canon })
    }

    /// Construct from blocks already known to partition the points.
    fn from_blocks_unchecked(n: usize, mut blocks: Vec<Vec<Point>>) -> SeatPlan {
        for b in &mut blocks {
            b.sort();
        }
        blocks.sort();
        SeatPlan { n, blocks }
    }

    pub fn identity(n: usize) -> SeatPlan {
        SeatPlan::from_blocks_unchecked(
            n,
            (1..=n)
                .map(|j| vec![Point::top(j), Point::bottom(j)])
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<Point>] {
        &self.blocks
    }

    /// Export blocks as signed integers (primed = negative).
    pub fn blocks_signed(&self) -> Vec<Vec<i32>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|p| p.0).collect())
            .collect()
    }

    /// The transposition diagram s_i, 1 ≤ i ≤ n−1.
    pub fn generator_s(n: usize, i: usize) -> Result<SeatPlan> {
        if i == 0 || i + 1 > n {
            return Err(Error::IndexOutOfRange { what: "s", index: i });
        }
        let mut blocks: Vec<Vec<Point>> = (1..=n)
            .filter(|&j| j != i && j != i + 1)
            .map(|j| vec![Point::top(j), Point::bottom(j)])
            .collect();
        blocks.push(vec![Point::top(i), Point::bottom(i + 1)]);
        blocks.push(vec![Point::top(i + 1), Point::bottom(i)]);
        Ok(SeatPlan::from_blocks_unchecked(n, blocks))
    }

    /// The fusion diagram f_i = {i, i+1, i', (i+1)'}, 1 ≤ i ≤ n−1.
    pub fn generator_f(n: usize, i: usize) -> Result<SeatPlan> {
        if i == 0 || i + 1 > n {
            return Err(Error::IndexOutOfRange { what: "f", index: i });
        }
        let mut blocks: Vec<Vec<Point>> = (1..=n)
            .filter(|&j| j != i && j != i + 1)
            .map(|j| vec![Point::top(j), Point::bottom(j)])
            .collect();
        blocks.push(vec![
            Point::top(i),
            Point::top(i + 1),
            Point::bottom(i),
            Point::bottom(i + 1),
        ]);
        Ok(SeatPlan::from_blocks_unchecked(n, blocks))
    }

    /// The cut diagram e_i with singletons {i}, {i'}, 1 ≤ i ≤ n.
    pub fn generator_e(n: usize, i: usize) -> Result<SeatPlan> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { what: "e", index: i });
        }
        let mut blocks: Vec<Vec<Point>> = (1..=n)
            .filter(|&j| j != i)
            .map(|j| vec![Point::top(j), Point::bottom(j)])
            .collect();
        blocks.push(vec![Point::top(i)]);
        blocks.push(vec![Point::bottom(i)]);
        Ok(SeatPlan::from_blocks_unchecked(n, blocks))
    }

    /// Diagram of a permutation given in one-line notation (1-based images):
    /// blocks {π(j), j'}, so diagram composition matches map composition.
    pub fn permutation(one_line: &[usize]) -> SeatPlan {
        let n = one_line.len();
        SeatPlan::from_blocks_unchecked(
            n,
            (1..=n)
                .map(|j| vec![Point::top(one_line[j - 1]), Point::bottom(j)])
                .collect(),
        )
    }

    /// Stack `self` on top of `other`, glue, and count closed interior
    /// components. Union-find over three node layers: the top boundary of
    /// `self`, the glued interface, and the bottom boundary of `other`.
    pub fn compose(&self, other: &SeatPlan) -> Result<ComposeResult> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let n = self.n;
        // nodes: 0..n top, n..2n interface, 2n..3n bottom
        let mut uf = UnionFind::new(3 * n);
        let node = |p: Point, upper: bool| -> usize {
            match (upper, p.is_top()) {
                (true, true) => p.index() - 1,
                (true, false) => n + p.index() - 1,
                (false, true) => n + p.index() - 1,
                (false, false) => 2 * n + p.index() - 1,
            }
        };
        for block in &self.blocks {
            for pair in block.windows(2) {
                uf.union(node(pair[0], true), node(pair[1], true));
            }
        }
        for block in &other.blocks {
            for pair in block.windows(2) {
                uf.union(node(pair[0], false), node(pair[1], false));
            }
        }
        // regroup boundary points by their class
        let mut groups: std::collections::HashMap<usize, Vec<Point>> =
            std::collections::HashMap::new();
        for j in 1..=n {
            groups
                .entry(uf.find(j - 1))
                .or_default()
                .push(Point::top(j));
            groups
                .entry(uf.find(2 * n + j - 1))
                .or_default()
                .push(Point::bottom(j));
        }
        // interior components: classes with an interface node but no boundary point
        let mut interface_roots: std::collections::HashSet<usize> =
            std::collections::HashSet::new();
        for j in 0..n {
            interface_roots.insert(uf.find(n + j));
        }
        let removed = interface_roots
            .iter()
            .filter(|root| !groups.contains_key(root))
            .count();
        let diagram = SeatPlan::from_blocks_unchecked(n, groups.into_values().collect());
        Ok(ComposeResult { diagram, removed })
    }

    /// Number of blocks meeting both the top and the bottom boundary.
    pub fn propagating_number(&self) -> usize {
        self.blocks.iter().filter(|b| is_propagating(b)).count()
    }

    /// Nonempty intersections of blocks with the top points, as sorted index sets.
    pub fn upper_parts(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| {
                b.iter()
                    .filter(|p| p.is_top())
                    .map(|p| p.index())
                    .collect::<Vec<_>>()
            })
            .filter(|part| !part.is_empty())
            .collect()
    }

    /// Nonempty intersections of blocks with the bottom points.
    pub fn lower_parts(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| {
                b.iter()
                    .filter(|p| !p.is_top())
                    .map(|p| p.index())
                    .collect::<Vec<_>>()
            })
            .filter(|part| !part.is_empty())
            .collect()
    }

    /// The involution *: swap primed and unprimed labels.
    pub fn star(&self) -> SeatPlan {
        SeatPlan::from_blocks_unchecked(
            self.n,
            self.blocks
                .iter()
                .map(|b| b.iter().map(|p| p.star()).collect())
                .collect(),
        )
    }

    /// True iff some block contains both n and n' (membership in the
    /// half-integer subalgebra's basis).
    pub fn has_fixed_last_strand(&self) -> bool {
        let top = Point::top(self.n);
        let bottom = Point::bottom(self.n);
        self.blocks
            .iter()
            .any(|b| b.contains(&top) && b.contains(&bottom))
    }

    /// Parse brace notation like `{{1,1',4'},{2,5},{3,4},{2'},{3',5'}}`.
    /// Whitespace is insignificant.
    pub fn parse(n: usize, text: &str) -> Result<SeatPlan> {
        let err = |pos: usize, msg: &str| Error::ParseError {
            pos,
            msg: msg.into(),
        };
        let bytes: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut i = 0;
        let expect = |i: &mut usize, c: char| -> Result<()> {
            match bytes.get(*i) {
                Some(&(_, found)) if found == c => {
                    *i += 1;
                    Ok(())
                }
                Some(&(pos, _)) => Err(err(pos, &format!("expected '{c}'"))),
                None => Err(err(text.len(), &format!("expected '{c}'"))),
            }
        };
        expect(&mut i, '{')?;
        let mut blocks: Vec<Vec<i32>> = Vec::new();
        loop {
            expect(&mut i, '{')?;
            let mut block = Vec::new();
            loop {
                let start = i;
                let mut digits = String::new();
                while let Some(&(_, c)) = bytes.get(i) {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        i += 1;
                    } else {
                        break;
                    }
                }
                if digits.is_empty() {
                    return Err(err(
                        bytes.get(start).map(|&(p, _)| p).unwrap_or(text.len()),
                        "expected a point",
                    ));
                }
                let value: i32 = digits
                    .parse()
                    .map_err(|_| err(bytes[start].0, "point out of range"))?;
                let primed = matches!(bytes.get(i), Some(&(_, '\'')) | Some(&(_, '′')));
                if primed {
                    i += 1;
                }
                block.push(if primed { -value } else { value });
                match bytes.get(i) {
                    Some(&(_, ',')) => i += 1,
                    Some(&(_, '}')) => {
                        i += 1;
                        break;
                    }
                    Some(&(pos, _)) => return Err(err(pos, "expected ',' or '}'")),
                    None => return Err(err(text.len(), "unterminated block")),
                }
            }
            blocks.push(block);
            match bytes.get(i) {
                Some(&(_, ',')) => i += 1,
                Some(&(_, '}')) => {
                    i += 1;
                    break;
                }
                Some(&(pos, _)) => return Err(err(pos, "expected ',' or '}'")),
                None => return Err(err(text.len(), "unterminated partition")),
            }
        }
        if i != bytes.len() {
            return Err(err(bytes[i].0, "trailing input"));
        }
        SeatPlan::make(n, blocks)
    }
}

impl fmt::Display for SeatPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, p) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SeatPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn is_propagating(block: &[Point]) -> bool {
    block.iter().any(|p| p.is_top()) && block.iter().any(|p| !p.is_top())
}

/// All seat-plans on n strands in restricted-growth-string order.
pub fn enumerate_all(n: usize) -> Result<Vec<SeatPlan>> {
    enumerate_all_bounded(n, DEFAULT_ENUM_BOUND)
}

pub fn enumerate_all_bounded(n: usize, bound: usize) -> Result<Vec<SeatPlan>> {
    if n > bound {
        return Err(Error::BoundExceeded(n, bound));
    }
    let m = 2 * n;
    // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i])
    let mut out = Vec::new();
    let mut a = vec![0usize; m];
    loop {
        out.push(rgs_to_plan(n, &a));
        // next RGS in lexicographic order
        let mut i = m;
        loop {
            if i == 1 {
                return Ok(out);
            }
            i -= 1;
            let max_prefix = a[..i].iter().copied().max().unwrap_or(0);
            if a[i] <= max_prefix {
                a[i] += 1;
                for v in a[i + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
        }
    }
}

fn rgs_to_plan(n: usize, rgs: &[usize]) -> SeatPlan {
    let classes = rgs.iter().copied().max().unwrap_or(0) + 1;
    let mut blocks: Vec<Vec<Point>> = vec![Vec::new(); classes];
    for (slot, &class) in rgs.iter().enumerate() {
        let p = if slot < n {
            Point::top(slot + 1)
        } else {
            Point::bottom(slot - n + 1)
        };
        blocks[class].push(p);
    }
    SeatPlan::from_blocks_unchecked(n, blocks)
}

/// Seeded sample of seat-plans via uniform-ish random restricted growth
/// strings (each point joins an existing class or opens a new one).
pub fn sample(n: usize, count: usize, seed: u64) -> Vec<SeatPlan> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let m = 2 * n;
    (0..count)
        .map(|_| {
            let mut rgs = vec![0usize; m];
            let mut max = 0usize;
            for slot in rgs.iter_mut().skip(1) {
                *slot = rng.random_range(0..=max + 1);
                max = max.max(*slot);
            }
            rgs_to_plan(n, &rgs)
        })
        .collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> UnionFind {
        UnionFind {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]]; // path halving
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, i: usize, j: usize) {
        let (a, b) = (self.find(i), self.find(j));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w1() -> SeatPlan {
        SeatPlan::parse(5, "{{1,1',4'},{2,5},{3,4},{2'},{3',5'}}").unwrap()
    }

    fn w2() -> SeatPlan {
        SeatPlan::parse(5, "{{1,1',3',4'},{2},{3,5},{4},{2',5'}}").unwrap()
    }

    #[test]
    fn make_validates() {
        assert!(SeatPlan::make(5, vec![vec![1, -1, -4], vec![2, 5], vec![3, 4], vec![-2], vec![-3, -5]]).is_ok());
        // 1' uncovered
        assert!(matches!(
            SeatPlan::make(2, vec![vec![1], vec![2, -2]]),
            Err(Error::NotAPartition(_))
        ));
        assert_eq!(
            SeatPlan::make(1, vec![vec![1, -1]]).unwrap(),
            SeatPlan::identity(1)
        );
        // overlap
        assert!(SeatPlan::make(2, vec![vec![1, 2], vec![2, -1, -2]]).is_err());
        // out of range
        assert!(SeatPlan::make(2, vec![vec![1, 2, 3], vec![-1, -2]]).is_err());
    }

    #[test]
    fn worked_product_from_the_introduction() {
        let result = w1().compose(&w2()).unwrap();
        assert_eq!(result.removed, 2);
        assert_eq!(
            result.diagram,
            SeatPlan::parse(5, "{{1,1',3',4'},{2,5},{3,4},{2',5'}}").unwrap()
        );
    }

    #[test]
    fn identity_is_neutral() {
        let id = SeatPlan::identity(3);
        for w in enumerate_all(3).unwrap() {
            let left = id.compose(&w).unwrap();
            let right = w.compose(&id).unwrap();
            assert_eq!(left.diagram, w);
            assert_eq!(left.removed, 0);
            assert_eq!(right.diagram, w);
            assert_eq!(right.removed, 0);
        }
    }

    #[test]
    fn e_squared_closes_one_component() {
        let e1 = SeatPlan::generator_e(2, 1).unwrap();
        let result = e1.compose(&e1).unwrap();
        assert_eq!(result.diagram, e1);
        assert_eq!(result.removed, 1);
    }

    #[test]
    fn generator_shapes() {
        assert_eq!(
            SeatPlan::generator_f(2, 1).unwrap(),
            SeatPlan::parse(2, "{{1,2,1',2'}}").unwrap()
        );
        assert_eq!(
            SeatPlan::generator_e(2, 1).unwrap(),
            SeatPlan::parse(2, "{{1},{1'},{2,2'}}").unwrap()
        );
        assert_eq!(
            SeatPlan::generator_s(3, 2).unwrap(),
            SeatPlan::parse(3, "{{1,1'},{2,3'},{3,2'}}").unwrap()
        );
        assert!(SeatPlan::generator_s(3, 3).is_err());
        assert!(SeatPlan::generator_e(3, 4).is_err());
    }

    #[test]
    fn propagating_numbers() {
        assert_eq!(SeatPlan::identity(4).propagating_number(), 4);
        assert_eq!(w1().propagating_number(), 1);
        for n in 2..=4 {
            for i in 1..=n {
                assert_eq!(
                    SeatPlan::generator_e(n, i).unwrap().propagating_number(),
                    n - 1
                );
            }
        }
    }

    #[test]
    fn star_examples() {
        for n in 2..=3 {
            for i in 1..n {
                let s = SeatPlan::generator_s(n, i).unwrap();
                let f = SeatPlan::generator_f(n, i).unwrap();
                assert_eq!(s.star(), s);
                assert_eq!(f.star(), f);
            }
            for i in 1..=n {
                let e = SeatPlan::generator_e(n, i).unwrap();
                assert_eq!(e.star(), e);
            }
        }
        assert_eq!(w1().star().star(), w1());
        assert_eq!(
            w1().star(),
            SeatPlan::parse(5, "{{1,4,1'},{2},{3,5},{2',5'},{3',4'}}").unwrap()
        );
    }

    #[test]
    fn enumeration_counts_are_bell_numbers() {
        assert_eq!(enumerate_all(1).unwrap().len(), 2);
        assert_eq!(enumerate_all(2).unwrap().len(), 15);
        assert_eq!(enumerate_all(3).unwrap().len(), 203);
        assert!(matches!(
            enumerate_all(DEFAULT_ENUM_BOUND + 1),
            Err(Error::BoundExceeded(..))
        ));
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let all = enumerate_all(3).unwrap();
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
    }

    #[test]
    fn fixed_last_strand_counts() {
        assert!(SeatPlan::identity(2).has_fixed_last_strand());
        assert!(!SeatPlan::generator_e(2, 2).unwrap().has_fixed_last_strand());
        let count = enumerate_all(2)
            .unwrap()
            .iter()
            .filter(|w| w.has_fixed_last_strand())
            .count();
        assert_eq!(count, 5);
    }

    #[test]
    fn compose_is_associative_with_powers_exhaustive_n2() {
        let all = enumerate_all(2).unwrap();
        for a in &all {
            for b in &all {
                let ab = a.compose(b).unwrap();
                for c in &all {
                    let ab_c = ab.diagram.compose(c).unwrap();
                    let bc = b.compose(c).unwrap();
                    let a_bc = a.compose(&bc.diagram).unwrap();
                    assert_eq!(ab_c.diagram, a_bc.diagram);
                    assert_eq!(ab.removed + ab_c.removed, bc.removed + a_bc.removed);
                }
            }
        }
    }

    #[test]
    fn compose_is_associative_randomized() {
        for n in 3..=4 {
            let sampled = sample(n, 60, 0xA5A5);
            for chunk in sampled.chunks(3) {
                let [a, b, c] = [&chunk[0], &chunk[1], &chunk[2]];
                let ab = a.compose(b).unwrap();
                let ab_c = ab.diagram.compose(c).unwrap();
                let bc = b.compose(c).unwrap();
                let a_bc = a.compose(&bc.diagram).unwrap();
                assert_eq!(ab_c.diagram, a_bc.diagram);
                assert_eq!(ab.removed + ab_c.removed, bc.removed + a_bc.removed);
            }
        }
    }

    #[test]
    fn star_is_an_anti_homomorphism() {
        let sampled = sample(3, 40, 0xBEEF);
        for pair in sampled.chunks(2) {
            let (a, b) = (&pair[0], &pair[1]);
            let ab = a.compose(b).unwrap();
            let star_ba = b.star().compose(&a.star()).unwrap();
            assert_eq!(ab.diagram.star(), star_ba.diagram);
            assert_eq!(ab.removed, star_ba.removed);
        }
    }

    #[test]
    fn propagating_number_never_grows_under_composition() {
        let sampled = sample(4, 60, 0x1234);
        for pair in sampled.chunks(2) {
            let (a, b) = (&pair[0], &pair[1]);
            let ab = a.compose(b).unwrap();
            assert!(
                ab.diagram.propagating_number()
                    <= a.propagating_number().min(b.propagating_number())
            );
        }
    }

    #[test]
    fn parse_display_roundtrip() {
        for w in enumerate_all(2).unwrap() {
            assert_eq!(SeatPlan::parse(2, &w.to_string()).unwrap(), w);
        }
        assert_eq!(w1().to_string(), "{{1,1',4'},{2,5},{3,4},{2'},{3',5'}}");
    }

    #[test]
    fn compose_size_mismatch() {
        let a = SeatPlan::identity(2);
        let b = SeatPlan::identity(3);
        assert_eq!(a.compose(&b), Err(Error::SizeMismatch(2, 3)));
    }
}
