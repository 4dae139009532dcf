//! Seminormal representation matrices of the partition algebra on the
//! Bratteli path basis.
//!
//! The cut and fusion generators act through hook-length ratios keyed by the
//! shape labels alone. A transposition acts on the window of five
//! consecutive coordinates around its index: windows whose core grows by two
//! boxes get the axial-distance 1×1/2×2 blocks, all other windows are looked
//! up in the tabulated families.

mod hooks;
mod matrix;
mod tables;

pub use hooks::hook_ratio;
pub use matrix::{Matrix, RepMatrix};
pub use tables::{families, parse_tables, Family};

use crate::bratteli::{tableaux, vertices, AugShape, Partition, Tableau};
use crate::error::{Error, Result};
use crate::ratfunc::RatFunc;
use crate::relations::{
    basic_instances, derived_instances, instance_valid_at_level2, primed_instances,
    starred_instances, RelationInstance, Report, ReportEntry,
};
use crate::seatplan::SeatPlan;
use crate::words::{standard_word, Letter, Word};
use num::{BigInt, BigRational, Integer, One, Zero};
use std::collections::{BTreeMap, HashMap};

/// Axial distance d(ν, μ, λ) = (c₁−r₁) − (c₀−r₀) for the covering chain
/// ν ◁ μ ◁ λ of core partitions.
pub fn axial_distance(nu: &Partition, mu: &Partition, lambda: &Partition) -> Result<i64> {
    let chain_err = || Error::NotACoveringChain(format!("{nu} < {mu} < {lambda}"));
    let box_added = |small: &Partition, big: &Partition| -> Option<(usize, usize)> {
        big.removals()
            .into_iter()
            .find(|(p, _)| p == small)
            .map(|(_, row)| (row, big.parts()[row - 1]))
    };
    let (r0, c0) = box_added(nu, mu).ok_or_else(chain_err)?;
    let (r1, c1) = box_added(mu, lambda).ok_or_else(chain_err)?;
    Ok((c1 as i64 - r1 as i64) - (c0 as i64 - r0 as i64))
}

fn coordinate_check(level2: usize, i: usize, last_needed2: usize) -> Result<()> {
    if i == 0 || last_needed2 > level2 {
        return Err(Error::CoordinateOutOfRange(i));
    }
    Ok(())
}

/// Group tableau indices by equality outside the erased coordinates.
fn classes_excluding(tabs: &[Tableau], erased: &[usize]) -> Vec<Vec<usize>> {
    let mut map: BTreeMap<Vec<&AugShape>, Vec<usize>> = BTreeMap::new();
    for (index, tab) in tabs.iter().enumerate() {
        let key: Vec<&AugShape> = tab
            .shapes
            .iter()
            .enumerate()
            .filter(|(coord, _)| !erased.contains(coord))
            .map(|(_, shape)| shape)
            .collect();
        map.entry(key).or_default().push(index);
    }
    map.into_values().collect()
}

/// Matrix of the cut generator e_i on the tableaux of `target`.
pub fn e_matrix(i: usize, target: &AugShape, level2: usize) -> Result<RepMatrix> {
    coordinate_check(level2, i, 2 * i)?;
    let tabs = tableaux(target, level2)?;
    let dim = tabs.len();
    let mut entries = Matrix::zero(dim, dim);
    for class in classes_excluding(&tabs, &[2 * i - 1]) {
        let outer_low = &tabs[class[0]].shapes[2 * i - 2];
        let outer_high = &tabs[class[0]].shapes[2 * i];
        if outer_low != outer_high {
            continue; // zero block
        }
        // entry depends only on the row's mid shape
        let ratios: Vec<RatFunc> = class
            .iter()
            .map(|&row| hook_ratio(outer_low, &tabs[row].shapes[2 * i - 1]))
            .collect::<Result<_>>()?;
        for &col in &class {
            for (&row, ratio) in class.iter().zip(&ratios) {
                entries.set(row, col, ratio.clone());
            }
        }
    }
    Ok(RepMatrix {
        target: target.clone(),
        level2,
        generator: Letter::E(i),
        entries,
    })
}

/// Matrix of the fusion generator f_i on the tableaux of `target`.
pub fn f_matrix(i: usize, target: &AugShape, level2: usize) -> Result<RepMatrix> {
    coordinate_check(level2, i, 2 * i + 1)?;
    let tabs = tableaux(target, level2)?;
    let dim = tabs.len();
    let mut entries = Matrix::zero(dim, dim);
    for class in classes_excluding(&tabs, &[2 * i]) {
        let outer_low = &tabs[class[0]].shapes[2 * i - 1];
        let outer_high = &tabs[class[0]].shapes[2 * i + 1];
        if outer_low != outer_high {
            continue;
        }
        // entry depends only on the column's middle shape
        let ratios: Vec<RatFunc> = class
            .iter()
            .map(|&col| hook_ratio(&tabs[col].shapes[2 * i], outer_low)?.inv())
            .collect::<Result<_>>()?;
        for (&col, ratio) in class.iter().zip(&ratios) {
            for &row in &class {
                entries.set(row, col, ratio.clone());
            }
        }
    }
    Ok(RepMatrix {
        target: target.clone(),
        level2,
        generator: Letter::F(i),
        entries,
    })
}

/// Matrix of the transposition s_i on the tableaux of `target`, with the
/// free off-diagonal scale c ≠ 0.
pub fn s_matrix(i: usize, target: &AugShape, level2: usize, c: &RatFunc) -> Result<RepMatrix> {
    s_matrix_with_tables(i, target, level2, c, families())
}

/// Same, against an explicit table set (also used to sanity-check the
/// bundled data by perturbation).
pub fn s_matrix_with_tables(
    i: usize,
    target: &AugShape,
    level2: usize,
    c: &RatFunc,
    table_set: &[Family],
) -> Result<RepMatrix> {
    coordinate_check(level2, i, 2 * i + 2)?;
    if c.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let tabs = tableaux(target, level2)?;
    let dim = tabs.len();
    let mut entries = Matrix::zero(dim, dim);
    let window = |index: usize| -> [AugShape; 5] {
        let shapes = &tabs[index].shapes;
        std::array::from_fn(|k| shapes[2 * i - 2 + k].clone())
    };
    for class in classes_excluding(&tabs, &[2 * i - 1, 2 * i, 2 * i + 1]) {
        let low = &tabs[class[0]].shapes[2 * i - 2];
        let high = &tabs[class[0]].shapes[2 * i + 2];
        if high.core.size() == low.core.size() + 2 {
            // every path here climbs ν ◁ μ ◁ λ with the half-steps forced
            match class.as_slice() {
                &[single] => {
                    let mu = &tabs[single].shapes[2 * i].core;
                    let d = axial_distance(&low.core, mu, &high.core)?;
                    debug_assert!(d.abs() == 1, "lone interlacing path must have |d| = 1");
                    entries.set(single, single, RatFunc::from_ratio(1, d));
                }
                &[first, second] => {
                    let mu = &tabs[first].shapes[2 * i].core;
                    let d = axial_distance(&low.core, mu, &high.core)?;
                    let a = RatFunc::from_ratio(1, d);
                    let b = &RatFunc::one() - &(&a * &a);
                    entries.set(first, first, a.clone());
                    entries.set(second, first, c.clone());
                    entries.set(first, second, b.div(c)?);
                    entries.set(second, second, -&a);
                }
                other => {
                    return Err(Error::ReductiveUnsupported(format!(
                        "{} interlacing paths between {low} and {high}",
                        other.len()
                    )))
                }
            }
            continue;
        }
        // reductive: look the window patterns up in the tables
        let windows: Vec<[AugShape; 5]> = class.iter().map(|&t| window(t)).collect();
        let family = table_set
            .iter()
            .find(|family| {
                windows
                    .iter()
                    .all(|w| family.patterns.iter().any(|p| p == w))
            })
            .ok_or_else(|| {
                Error::ReductiveUnsupported(
                    windows
                        .iter()
                        .map(|w| {
                            w.iter()
                                .map(|s| s.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        })
                        .collect::<Vec<_>>()
                        .join(" | "),
                )
            })?;
        let positions: Vec<usize> = windows
            .iter()
            .map(|w| family.patterns.iter().position(|p| p == w).unwrap())
            .collect();
        // the class must be a block of the family: no cross terms to the
        // patterns the class does not realize
        for fi in 0..family.patterns.len() {
            if positions.contains(&fi) {
                continue;
            }
            for &fj in &positions {
                if !family.matrix.get(fi, fj).is_zero() || !family.matrix.get(fj, fi).is_zero() {
                    return Err(Error::ReductiveUnsupported(format!(
                        "family '{}' does not split on the realized patterns",
                        family.name
                    )));
                }
            }
        }
        for (&row, &frow) in class.iter().zip(&positions) {
            for (&col, &fcol) in class.iter().zip(&positions) {
                entries.set(row, col, family.matrix.get(frow, fcol).clone());
            }
        }
    }
    Ok(RepMatrix {
        target: target.clone(),
        level2,
        generator: Letter::S(i),
        entries,
    })
}

/// Per-shape context caching the generator matrices.
pub struct RepContext {
    pub target: AugShape,
    pub level2: usize,
    pub c: RatFunc,
    pub tabs: Vec<Tableau>,
    cache: HashMap<Letter, Matrix>,
}

impl RepContext {
    pub fn new(target: &AugShape, level2: usize, c: &RatFunc) -> Result<RepContext> {
        Ok(RepContext {
            target: target.clone(),
            level2,
            c: c.clone(),
            tabs: tableaux(target, level2)?,
            cache: HashMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.tabs.len()
    }

    pub fn generator(&mut self, letter: Letter) -> Result<&Matrix> {
        if !self.cache.contains_key(&letter) {
            let built = match letter {
                Letter::E(i) => e_matrix(i, &self.target, self.level2)?,
                Letter::F(i) => f_matrix(i, &self.target, self.level2)?,
                Letter::S(i) => s_matrix(i, &self.target, self.level2, &self.c)?,
            };
            self.cache.insert(letter, built.entries);
        }
        Ok(&self.cache[&letter])
    }

    /// Ordered product of the generator matrices of a word.
    pub fn word_matrix(&mut self, word: &Word) -> Result<Matrix> {
        let mut acc = Matrix::identity(self.dim());
        for &letter in &word.0 {
            acc = acc.mul(self.generator(letter)?);
        }
        Ok(acc)
    }
}

/// Ordered product of generator matrices for a word on one target shape.
pub fn rep_of_word(word: &Word, target: &AugShape, level2: usize, c: &RatFunc) -> Result<Matrix> {
    RepContext::new(target, level2, c)?.word_matrix(word)
}

/// Relation instances the representation at a level must satisfy: the basic
/// and presentation relations, plus the starred ones at half levels.
pub fn level_instances(level2: usize) -> Vec<RelationInstance> {
    let n = level2.div_ceil(2);
    let mut instances = basic_instances(n);
    instances.extend(primed_instances(n));
    instances.extend(derived_instances(n));
    if level2 % 2 == 1 && n >= 3 {
        instances.extend(starred_instances(n));
    }
    instances.retain(|inst| instance_valid_at_level2(inst, level2));
    instances
}

/// Check every relation instance as an exact matrix identity on every shape
/// of the level.
pub fn verify_rep_relations(level2: usize, c: &RatFunc) -> Result<Report> {
    let instances = level_instances(level2);
    let mut report = Report::default();
    for shape in vertices(level2) {
        let mut ctx = RepContext::new(&shape, level2, c)?;
        for instance in &instances {
            let lhs = ctx.word_matrix(&instance.lhs)?;
            let mut rhs = ctx.word_matrix(&instance.rhs)?;
            for _ in 0..instance.rhs_q_power {
                rhs = rhs.scale(&RatFunc::q());
            }
            let passed = lhs == rhs;
            report.push(ReportEntry {
                rule: instance.rule.to_string(),
                instance: format!("{} on {shape}", instance.instance),
                passed,
                detail: if passed {
                    None
                } else {
                    Some(format!("lhs =\n{lhs:?}rhs =\n{rhs:?}"))
                },
            });
        }
    }
    Ok(report)
}

/// Letters that act at a level of the tower.
pub fn letters_at_level(level2: usize) -> Vec<Letter> {
    let mut out = Vec::new();
    for i in 1..=level2 {
        if 2 * i + 2 <= level2 {
            out.push(Letter::S(i));
        }
    }
    for i in 1..=level2 {
        if 2 * i < level2 {
            out.push(Letter::F(i));
        }
    }
    for i in 1..=level2 {
        if 2 * i <= level2 {
            out.push(Letter::E(i));
        }
    }
    out
}

/// Trace of a word's matrix on every shape of the level.
pub fn trace_of(word: &Word, level2: usize, c: &RatFunc) -> Result<BTreeMap<AugShape, RatFunc>> {
    let mut out = BTreeMap::new();
    for shape in vertices(level2) {
        let matrix = rep_of_word(word, &shape, level2, c)?;
        out.insert(shape, matrix.trace());
    }
    Ok(out)
}

/// Words over the letters of a level for every diagram of the corresponding
/// basis. At integer levels these are the standard words; at half levels the
/// standard word may use letters that do not act, so words are found by
/// breadth-first closure instead (their accumulated Q-powers only scale the
/// rows and cannot change a rank).
fn basis_words_at_level(level2: usize) -> Result<Vec<(SeatPlan, Word)>> {
    let n = level2.div_ceil(2);
    if level2.is_multiple_of(2) {
        let mut out = Vec::new();
        for w in crate::seatplan::enumerate_all(n)? {
            let word = standard_word(&w);
            out.push((w, word));
        }
        return Ok(out);
    }
    let letters = letters_at_level(level2);
    let mut seen: BTreeMap<SeatPlan, Word> = BTreeMap::new();
    seen.insert(SeatPlan::identity(n), Word::empty());
    let mut frontier: Vec<SeatPlan> = vec![SeatPlan::identity(n)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for diagram in &frontier {
            let word = seen[diagram].clone();
            for &letter in &letters {
                let product = diagram.compose(&letter.diagram(n)?)?.diagram;
                if !seen.contains_key(&product) {
                    let mut longer = word.clone();
                    longer.0.push(letter);
                    seen.insert(product.clone(), longer);
                    next.push(product);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().collect())
}

/// Rank over the exact rationals of the matrix whose rows are the
/// concatenated entries of the direct-sum representation, specialized at
/// Q = q0, over all basis diagrams of the level. Full rank certifies that
/// the basis diagrams act by linearly independent operators.
pub fn faithfulness_rank(level2: usize, q0: &BigRational, c: &RatFunc) -> Result<usize> {
    type NumericGens = HashMap<Letter, Vec<Vec<BigRational>>>;
    let basis = basis_words_at_level(level2)?;
    let shapes = vertices(level2);
    // specialize every generator matrix once per shape
    let mut specialized: Vec<(usize, NumericGens)> = Vec::new();
    for shape in &shapes {
        let mut ctx = RepContext::new(shape, level2, c)?;
        let dim = ctx.dim();
        let mut map = HashMap::new();
        for letter in letters_at_level(level2) {
            let symbolic = ctx.generator(letter)?;
            let mut numeric = vec![vec![BigRational::zero(); dim]; dim];
            for (i, j, value) in symbolic.entries() {
                if !value.is_zero() {
                    numeric[i][j] = value.eval_at(q0)?;
                }
            }
            map.insert(letter, numeric);
        }
        specialized.push((dim, map));
    }
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(basis.len());
    for (_, word) in &basis {
        let mut row = Vec::new();
        for (dim, map) in &specialized {
            let mut acc = numeric_identity(*dim);
            for letter in &word.0 {
                acc = numeric_mul(&acc, &map[letter]);
            }
            for r in acc {
                row.extend(r);
            }
        }
        rows.push(row);
    }
    Ok(rational_rank(rows))
}

fn numeric_identity(dim: usize) -> Vec<Vec<BigRational>> {
    let mut m = vec![vec![BigRational::zero(); dim]; dim];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigRational::one();
    }
    m
}

fn numeric_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// Exact Gaussian elimination over the rationals. Rows are scaled to
/// integers and content-stripped after every elimination step; row scaling
/// does not change the rank and keeps entry growth tame.
pub fn rational_rank(rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut int_rows: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            let scaled: Vec<BigInt> = row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
            strip_content(scaled)
        })
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_at) = (rank..int_rows.len()).find(|&r| !int_rows[r][col].is_zero()) else {
            continue;
        };
        int_rows.swap(rank, pivot_at);
        let pivot_row = int_rows[rank].clone();
        let pivot = pivot_row[col].clone();
        for row in int_rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (value, p) in row.iter_mut().zip(&pivot_row) {
                *value = &*value * &pivot - p * &factor;
            }
            let stripped = strip_content(std::mem::take(row));
            *row = stripped;
        }
        rank += 1;
        if rank == int_rows.len() {
            break;
        }
    }
    rank
}

fn strip_content(mut row: Vec<BigInt>) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for value in &row {
        content = content.gcd(value);
        if content.is_one() {
            return row;
        }
    }
    if content.is_zero() || content.is_one() {
        return row;
    }
    for value in &mut row {
        *value = &*value / &content;
    }
    row
}
