use std::collections::HashMap;
use std::fmt;

use num::{One, Signed};

use super::poly::{same_vars, Poly, Vars};
use crate::error::{Error, Result};

/// Dense matrix of polynomials over one variable list, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    vars: Vars,
    entries: Vec<Poly>,
}

/// Determinants are computed from all minors of the leading rows, so the
/// number of intermediate minors is at most 2^n.
const MAX_DET_DIM: usize = 24;

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::shape(format!(
                "{rows}x{cols} matrix with {} entries",
                entries.len()
            )));
        }
        let vars = entries[0].vars().clone();
        let entries = entries
            .into_iter()
            .map(|p| p.embed(&vars))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            rows,
            cols,
            vars,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize, vars: &Vars) -> Self {
        PolyMatrix {
            rows,
            cols,
            vars: vars.clone(),
            entries: vec![Poly::zero(vars); rows * cols],
        }
    }

    pub fn identity(n: usize, vars: &Vars) -> Self {
        let mut m = Self::zero(n, n, vars);
        for i in 0..n {
            m.entries[i * n + i] = Poly::one(vars);
        }
        m
    }

    /// `I + p·E_ij`, an elementary matrix with determinant 1 for `i != j`.
    pub fn shear(n: usize, i: usize, j: usize, p: Poly) -> Result<Self> {
        if i == j || i >= n || j >= n {
            return Err(Error::shape(format!("shear ({i},{j}) in dimension {n}")));
        }
        let mut m = Self::identity(n, p.vars());
        m.entries[i * n + j] = p;
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Poly> {
        self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            rows: self.cols,
            cols: self.rows,
            vars: self.vars.clone(),
            entries,
        }
    }

    fn check_vars(&self, other: &PolyMatrix) -> Result<()> {
        if same_vars(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.to_vec(),
                right: other.vars.to_vec(),
            })
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<Self> {
        self.check_vars(other)?;
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(&self.vars);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: other.cols,
            vars: self.vars.clone(),
            entries,
        })
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<Self> {
        self.check_vars(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::shape("matrix shapes differ"));
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            vars: self.vars.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Determinants of the submatrices formed by `rows` and every column
    /// set of size `rows.len()`, keyed by column bitmask. Expansion is along
    /// the last row at each step.
    fn minors(&self, rows: &[usize]) -> HashMap<u32, Poly> {
        let mut level: HashMap<u32, Poly> = HashMap::new();
        level.insert(0, Poly::one(&self.vars));
        for (t, &r) in rows.iter().enumerate() {
            let mut next: HashMap<u32, Poly> = HashMap::new();
            for (&mask, minor) in &level {
                for j in 0..self.cols {
                    let bit = 1u32 << j;
                    let a = self.get(r, j);
                    if mask & bit != 0 || a.is_zero() {
                        continue;
                    }
                    let cols = mask | bit;
                    let pos = (cols & (bit - 1)).count_ones() as usize;
                    let term = a * minor;
                    let entry = next.entry(cols).or_insert_with(|| Poly::zero(&self.vars));
                    *entry = if (t + pos).is_multiple_of(2) {
                        &*entry + &term
                    } else {
                        &*entry - &term
                    };
                }
            }
            next.retain(|_, p| !p.is_zero());
            level = next;
        }
        level
    }

    fn check_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::shape(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )));
        }
        if self.rows > MAX_DET_DIM {
            return Err(Error::Unsupported(format!(
                "determinant of dimension {} > {MAX_DET_DIM}",
                self.rows
            )));
        }
        Ok(())
    }

    pub fn det(&self) -> Result<Poly> {
        self.check_square()?;
        let n = self.rows;
        let rows: Vec<usize> = (0..n).collect();
        let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        Ok(self
            .minors(&rows)
            .remove(&full)
            .unwrap_or_else(|| Poly::zero(&self.vars)))
    }

    /// Classical adjugate: `adj[j][i] = (-1)^(i+j) · M_ij`.
    pub fn adjugate(&self) -> Result<Self> {
        self.check_square()?;
        let n = self.rows;
        let mut adj = Self::zero(n, n, &self.vars);
        if n == 1 {
            adj.entries[0] = Poly::one(&self.vars);
            return Ok(adj);
        }
        let full = (1u32 << n) - 1;
        for i in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != i).collect();
            let minors = self.minors(&rows);
            for j in 0..n {
                if let Some(m) = minors.get(&(full & !(1u32 << j))) {
                    adj.entries[j * n + i] = if (i + j) % 2 == 0 { m.clone() } else { -m };
                }
            }
        }
        Ok(adj)
    }

    /// Inverse of a matrix whose determinant is the constant ±1. The result
    /// is again polynomial.
    pub fn unimodular_inverse(&self) -> Result<Self> {
        let det = self.det()?;
        let unit = det
            .constant_value()
            .filter(|d| d.abs().is_one())
            .ok_or_else(|| Error::NotUnimodular(det.to_string()))?;
        let adj = self.adjugate()?;
        if unit.is_one() {
            Ok(adj)
        } else {
            Ok(PolyMatrix {
                entries: adj.entries.iter().map(|p| -p).collect(),
                ..adj
            })
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
