//! Tabulated action of the transposition generators on reductive tableau
//! windows, loaded from a plain-text data file kept next to this module.

use crate::bratteli::AugShape;
use crate::error::{Error, Result};
use crate::ratfunc::{self, RatFunc};
use crate::seminormal::matrix::Matrix;
use std::sync::LazyLock;

/// One tabulated family: the window patterns (five consecutive shapes) in
/// table order, and the matrix over that basis.
#[derive(Clone, Debug)]
pub struct Family {
    pub name: String,
    pub patterns: Vec<[AugShape; 5]>,
    pub matrix: Matrix,
}

pub fn parse_tables(text: &str) -> Result<Vec<Family>> {
    let mut out: Vec<Family> = Vec::new();
    let mut name: Option<String> = None;
    let mut patterns: Vec<[AugShape; 5]> = Vec::new();
    let mut rows: Vec<Vec<RatFunc>> = Vec::new();
    let mut flush = |name: &mut Option<String>,
                     patterns: &mut Vec<[AugShape; 5]>,
                     rows: &mut Vec<Vec<RatFunc>>|
     -> Result<()> {
        if let Some(name) = name.take() {
            let dim = patterns.len();
            if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                return Err(Error::ParseError {
                    pos: 0,
                    msg: format!("family '{name}' is not square"),
                });
            }
            let mut matrix = Matrix::zero(dim, dim);
            for (i, row) in rows.drain(..).enumerate() {
                for (j, value) in row.into_iter().enumerate() {
                    matrix.set(i, j, value);
                }
            }
            out.push(Family {
                name,
                patterns: std::mem::take(patterns),
                matrix,
            });
        }
        Ok(())
    };
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("family ") {
            flush(&mut name, &mut patterns, &mut rows)?;
            name = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("pattern ") {
            let shapes: Vec<AugShape> = rest
                .split_whitespace()
                .map(AugShape::parse)
                .collect::<Result<_>>()?;
            let window: [AugShape; 5] = shapes.try_into().map_err(|_| Error::ParseError {
                pos: 0,
                msg: "pattern must list five shapes".into(),
            })?;
            patterns.push(window);
        } else if let Some(rest) = line.strip_prefix("row ") {
            let entries: Vec<RatFunc> = rest
                .split(';')
                .map(|piece| ratfunc::parse(piece.trim()))
                .collect::<Result<_>>()?;
            rows.push(entries);
        } else {
            return Err(Error::ParseError {
                pos: 0,
                msg: format!("unexpected table line '{line}'"),
            });
        }
    }
    flush(&mut name, &mut patterns, &mut rows)?;
    Ok(out)
}

static FAMILIES: LazyLock<Vec<Family>> = LazyLock::new(|| {
    parse_tables(include_str!("reductive_tables.txt")).expect("bundled tables parse")
});

pub fn families() -> &'static [Family] {
    &FAMILIES
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_tables_load() {
        let fams = families();
        assert_eq!(fams.len(), 7);
        let dims: Vec<usize> = fams.iter().map(|f| f.patterns.len()).collect();
        assert_eq!(dims, vec![2, 3, 5, 3, 7, 6, 6]);
    }

    #[test]
    fn every_family_squares_to_identity() {
        // each printed table is an involution on its own basis
        for family in families() {
            let square = family.matrix.mul(&family.matrix);
            assert_eq!(
                square,
                Matrix::identity(family.patterns.len()),
                "family {}",
                family.name
            );
        }
    }

    #[test]
    fn patterns_are_distinct_within_a_family() {
        for family in families() {
            for i in 0..family.patterns.len() {
                for j in i + 1..family.patterns.len() {
                    assert_ne!(family.patterns[i], family.patterns[j]);
                }
            }
        }
    }

    #[test]
    fn every_pattern_is_a_walk_in_the_graph() {
        use crate::bratteli::{neighbors, Direction};
        for family in families() {
            for pattern in &family.patterns {
                for pair in pattern.windows(2) {
                    assert!(
                        neighbors(&pair[0], Direction::Up).contains(&pair[1]),
                        "family {}: {} not adjacent to {}",
                        family.name,
                        pair[0],
                        pair[1]
                    );
                }
            }
        }
    }
}
