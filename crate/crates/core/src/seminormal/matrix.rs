//! Dense matrices of rational functions, indexed by the canonical tableau
//! order of the target shape.

use crate::bratteli::{AugShape, Tableau};
use crate::ratfunc::RatFunc;
use crate::words::Letter;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: Vec<Vec<RatFunc>>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows: vec![vec![RatFunc::zero(); cols]; rows],
        }
    }

    pub fn identity(dim: usize) -> Matrix {
        let mut m = Matrix::zero(dim, dim);
        for i in 0..dim {
            m.rows[i][i] = RatFunc::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn get(&self, row: usize, col: usize) -> &RatFunc {
        &self.rows[row][col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: RatFunc) {
        self.rows[row][col] = value;
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols(), other.nrows(), "dimension mismatch");
        let mut out = Matrix::zero(self.nrows(), other.ncols());
        for i in 0..self.nrows() {
            for k in 0..self.ncols() {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols() {
                    let b = &other.rows[k][j];
                    if b.is_zero() {
                        continue;
                    }
                    out.rows[i][j] = &out.rows[i][j] + &(a * b);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> Matrix {
        Matrix {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|v| v * c).collect())
                .collect(),
        }
    }

    pub fn trace(&self) -> RatFunc {
        let mut acc = RatFunc::zero();
        for i in 0..self.nrows().min(self.ncols()) {
            acc = acc + self.rows[i][i].clone();
        }
        acc
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RatFunc)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (i, j, v)))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let rendered: Vec<String> = row.iter().map(|v| v.render()).collect();
            writeln!(f, "[{}]", rendered.join(", "))?;
        }
        Ok(())
    }
}

/// The matrix of one generator on the tableau basis of a target shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    pub target: AugShape,
    pub level2: usize,
    pub generator: Letter,
    pub entries: Matrix,
}

impl RepMatrix {
    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// Line-oriented dump: tableau index header, one nonzero entry per line,
    /// and a dense grid for small shapes.
    pub fn dump(&self, tableaux: &[Tableau]) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# {} on {} at level {}, dim {}\n",
            self.generator,
            self.target,
            crate::bratteli::level2_to_string(self.level2),
            self.dim()
        ));
        for (index, tab) in tableaux.iter().enumerate() {
            out.push_str(&format!("# {index}: {tab}\n"));
        }
        for (i, j, value) in self.entries.entries() {
            if !value.is_zero() {
                out.push_str(&format!("{i} {j} {value}\n"));
            }
        }
        if self.dim() <= 8 {
            out.push_str("# dense\n");
            for i in 0..self.dim() {
                let row: Vec<String> = (0..self.dim())
                    .map(|j| self.entries.get(i, j).render())
                    .collect();
                out.push_str(&format!("[ {} ]\n", row.join(" | ")));
            }
        }
        out
    }
}
