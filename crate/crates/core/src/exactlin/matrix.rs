use std::fmt;

use serde::de;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rat;

/// Dense matrix of exact rationals, row-major.
///
/// 0xN and Nx0 matrices are legal and behave as zero maps; every operation
/// here is total on them.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

/// Result of reduced row echelon form.
pub struct Rref {
    pub reduced: RatMatrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        RatMatrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix::new(rows, cols, vec![Rat::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix::new(r, c, rows.iter().flatten().cloned().collect())
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let as_rat: Vec<Vec<Rat>> = rows
            .iter()
            .map(|row| row.iter().map(|&n| Rat::from_int(n)).collect())
            .collect();
        RatMatrix::from_rows(&as_rat)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c) + &(a * b);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        RatMatrix::new(self.rows, self.cols, entries)
    }

    pub fn scale(&self, s: &Rat) -> RatMatrix {
        let entries = self.entries.iter().map(|a| a * s).collect();
        RatMatrix::new(self.rows, self.cols, entries)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut out = RatMatrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.at(r, c).clone());
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        RatMatrix::new(self.rows + other.rows, self.cols, entries)
    }

    pub fn take_columns(&self, cols: &[usize]) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, j, self.at(r, c).clone());
            }
        }
        out
    }

    /// Unique reduced row echelon form, with pivot columns in increasing order.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..m.cols {
                    let a = m.at(src, c).clone();
                    let b = m.at(pivot_row, c).clone();
                    m.set(src, c, b);
                    m.set(pivot_row, c, a);
                }
            }
            let inv = m.at(pivot_row, col).inv();
            for c in col..m.cols {
                let v = m.at(pivot_row, c) * &inv;
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    let v = m.at(r, c) - &(&factor * m.at(pivot_row, c));
                    m.set(r, c, v);
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        let rank = pivot_cols.len();
        Rref { reduced: m, pivot_cols, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical kernel basis: one column per free variable, in increasing
    /// column order, with the free variable set to 1.
    pub fn nullspace_basis(&self) -> RatMatrix {
        let Rref { reduced, pivot_cols, rank } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = RatMatrix::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            basis.set(f, j, Rat::one());
            for (r, &p) in pivot_cols.iter().enumerate().take(rank) {
                basis.set(p, j, -reduced.at(r, f));
            }
        }
        basis
    }

    /// Canonical image basis: the pivot columns of the original matrix.
    pub fn image_basis(&self) -> RatMatrix {
        let pivots = self.rref().pivot_cols;
        self.take_columns(&pivots)
    }

    /// A particular solution of `self * x = b` with free variables set to
    /// zero, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &RatMatrix) -> Option<RatMatrix> {
        assert_eq!(self.rows, b.rows, "dimension mismatch in solve");
        let aug = self.hstack(b);
        let Rref { reduced, pivot_cols, rank } = aug.rref();
        if pivot_cols.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = RatMatrix::zeros(self.cols, b.cols);
        for (r, &p) in pivot_cols.iter().enumerate().take(rank) {
            for j in 0..b.cols {
                x.set(p, j, reduced.at(r, self.cols + j).clone());
            }
        }
        Some(x)
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RatMatrix", 3)?;
        s.serialize_field("rows", &self.rows)?;
        s.serialize_field("cols", &self.cols)?;
        s.serialize_field("entries", &self.entries)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for RatMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            rows: usize,
            cols: usize,
            entries: Vec<Rat>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.entries.len() != raw.rows * raw.cols {
            return Err(de::Error::custom("entry count mismatch"));
        }
        Ok(RatMatrix::new(raw.rows, raw.cols, raw.entries))
    }
}
