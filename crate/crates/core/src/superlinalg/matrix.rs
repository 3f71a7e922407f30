use std::fmt;
use std::sync::Arc;

use crate::superpoly::{AlgebraError, Poly, Universe};

/// Matrix of a morphism `V -> W` between superspaces with homogeneous bases.
/// Row `i` is the basis vector `f_i` of `W`, column `j` the vector `e_j` of `V`.
#[derive(Clone, PartialEq)]
pub struct SuperMatrix {
    pub rows: Vec<u8>,
    pub cols: Vec<u8>,
    pub parity: u8,
    pub e: Vec<Vec<Poly>>,
}

impl SuperMatrix {
    pub fn zero(u: &Arc<Universe>, rows: &[u8], cols: &[u8], parity: u8) -> Self {
        SuperMatrix {
            rows: rows.to_vec(),
            cols: cols.to_vec(),
            parity,
            e: vec![vec![Poly::zero(u); cols.len()]; rows.len()],
        }
    }

    pub fn identity(u: &Arc<Universe>, par: &[u8]) -> Self {
        let mut m = Self::zero(u, par, par, 0);
        for i in 0..par.len() {
            m.e[i][i] = Poly::one(u);
        }
        m
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.e
            .iter()
            .flatten()
            .next()
            .map(|p| p.universe())
            .expect("empty matrix has no universe")
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().flatten().all(|p| p.is_zero())
    }

    /// Every entry has the parity its position dictates, `p_i + q_j + parity`.
    pub fn entries_graded(&self) -> bool {
        self.e.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, p)| {
                p.is_empty() || p.parity() == Some((self.rows[i] + self.cols[j] + self.parity) & 1)
            })
        })
    }

    pub fn mul(&self, other: &SuperMatrix) -> Result<SuperMatrix, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::Parse(format!(
                "cannot compose {}x{} with {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        let u = self.universe().clone();
        let mut out = SuperMatrix::zero(&u, &self.rows, &other.cols, (self.parity + other.parity) & 1);
        for i in 0..self.nrows() {
            for k in 0..self.ncols() {
                let a = &self.e[i][k];
                if a.is_empty() {
                    continue;
                }
                for j in 0..other.ncols() {
                    let b = &other.e[k][j];
                    if !b.is_empty() {
                        out.e[i][j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &SuperMatrix) -> SuperMatrix {
        let mut out = self.clone();
        for (ro, rb) in out.e.iter_mut().zip(&other.e) {
            for (x, y) in ro.iter_mut().zip(rb) {
                *x += y;
            }
        }
        out
    }

    pub fn sub(&self, other: &SuperMatrix) -> SuperMatrix {
        let mut out = self.clone();
        for (ro, rb) in out.e.iter_mut().zip(&other.e) {
            for (x, y) in ro.iter_mut().zip(rb) {
                *x -= y;
            }
        }
        out
    }

    pub fn scale(&self, c: &crate::Q) -> SuperMatrix {
        let mut out = self.clone();
        for x in out.e.iter_mut().flatten() {
            *x = x.scale(c);
        }
        out
    }

    pub fn neg(&self) -> SuperMatrix {
        self.scale(&-crate::Q::from_integer(1.into()))
    }

    /// Sub-matrix on the given row and column index lists.
    pub fn select(&self, ri: &[usize], ci: &[usize]) -> SuperMatrix {
        SuperMatrix {
            rows: ri.iter().map(|&i| self.rows[i]).collect(),
            cols: ci.iter().map(|&j| self.cols[j]).collect(),
            parity: self.parity,
            e: ri.iter().map(|&i| ci.iter().map(|&j| self.e[i][j].clone()).collect()).collect(),
        }
    }

    /// Block `A_pq` mapping the parity-`q` part of the source to the parity-`p` part of the target.
    pub fn block(&self, p: u8, q: u8) -> SuperMatrix {
        let ri: Vec<usize> = (0..self.nrows()).filter(|&i| self.rows[i] == p).collect();
        let ci: Vec<usize> = (0..self.ncols()).filter(|&j| self.cols[j] == q).collect();
        self.select(&ri, &ci)
    }

    /// Assembles `[[a, b], [c, d]]`.
    pub fn from_blocks(a: &SuperMatrix, b: &SuperMatrix, c: &SuperMatrix, d: &SuperMatrix) -> SuperMatrix {
        let mut rows = a.rows.clone();
        rows.extend(&c.rows);
        let mut cols = a.cols.clone();
        cols.extend(&b.cols);
        let mut e = Vec::new();
        for i in 0..a.nrows() {
            let mut r = a.e[i].clone();
            r.extend(b.e[i].iter().cloned());
            e.push(r);
        }
        for i in 0..c.nrows() {
            let mut r = c.e[i].clone();
            r.extend(d.e[i].iter().cloned());
            e.push(r);
        }
        SuperMatrix { rows, cols, parity: a.parity, e }
    }

    /// Ordinary transpose with no signs and swapped bases.
    pub fn transpose(&self) -> SuperMatrix {
        SuperMatrix {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            parity: self.parity,
            e: (0..self.ncols())
                .map(|j| (0..self.nrows()).map(|i| self.e[i][j].clone()).collect())
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, row) in self.e.iter().enumerate() {
            s.push_str(if self.rows[i] == 0 { "[0| " } else { "[1| " });
            let cells: Vec<String> = row.iter().map(|p| p.canonical().to_text()).collect();
            s.push_str(&cells.join(", "));
            s.push_str("]\n");
        }
        s
    }
}

impl fmt::Debug for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperMatrix(parity {}, cols {:?})\n{}", self.parity, self.cols, self.to_text())
    }
}
