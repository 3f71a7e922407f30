use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::superpoly::{Poly, Universe};
use crate::Q;

/// Dense exact rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    pub e: Vec<Q>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, e: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.e[i * n + i] = Q::one();
        }
        m
    }

    pub fn from_ints(rows: usize, cols: usize, v: &[i64]) -> Self {
        assert_eq!(v.len(), rows * cols);
        QMat { rows, cols, e: v.iter().map(|&x| Q::from_integer(x.into())).collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.e[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.e[i * self.cols + j] = v;
    }

    pub fn mul(&self, o: &QMat) -> QMat {
        assert_eq!(self.cols, o.rows);
        let mut out = QMat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.e[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        QMat { rows: self.rows, cols: self.cols, e: self.e.iter().zip(&o.e).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &QMat) -> QMat {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> QMat {
        QMat { rows: self.rows, cols: self.cols, e: self.e.iter().map(|a| a * c).collect() }
    }

    pub fn transpose(&self) -> QMat {
        let mut out = QMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn kron(&self, o: &QMat) -> QMat {
        let mut out = QMat::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        out.set(i * o.rows + k, j * o.cols + l, a * o.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// `[[a, b], [c, d]]` from equally sized square blocks.
    pub fn blocks(a: &QMat, b: &QMat, c: &QMat, d: &QMat) -> QMat {
        let n = a.rows;
        let mut out = QMat::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, a.get(i, j).clone());
                out.set(i, n + j, b.get(i, j).clone());
                out.set(n + i, j, c.get(i, j).clone());
                out.set(n + i, n + j, d.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(piv) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else { continue };
            for j in 0..m.cols {
                m.e.swap(piv * m.cols + j, rank * m.cols + j);
            }
            let p = m.get(rank, col).clone();
            for r in 0..m.rows {
                if r == rank || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col) / &p;
                for j in 0..m.cols {
                    let v = m.get(rank, j) * &f;
                    m.e[r * m.cols + j] -= v;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Rows of integers, `None` if an entry is not integral.
    pub fn to_int_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let v = self.get(i, j);
                        if v.is_integer() && v.abs() < Q::from_integer(i64::MAX.into()) {
                            Some(v.to_integer().try_into().ok()?)
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `Σ_{ij} u_i m_ij v_j`, keeping the factors of each product in order.
    pub fn bilinear(&self, u: &[Poly], v: &[Poly]) -> Poly {
        let w = self.apply(v);
        let mut out = Poly::zero(w[0].universe());
        for (a, b) in u.iter().zip(&w) {
            if !a.is_empty() && !b.is_empty() {
                out += &(a * b);
            }
        }
        out
    }

    pub fn apply(&self, v: &[Poly]) -> Vec<Poly> {
        assert_eq!(v.len(), self.cols);
        let u = v[0].universe();
        (0..self.rows)
            .map(|i| {
                let mut acc = Poly::zero(u);
                for (j, x) in v.iter().enumerate() {
                    let c = self.get(i, j);
                    if !c.is_zero() && !x.is_empty() {
                        acc += &x.scale(c);
                    }
                }
                acc
            })
            .collect()
    }
}

/// Square matrix with even polynomial entries.
#[derive(Clone, Debug)]
pub struct PMat {
    pub n: usize,
    pub e: Vec<Poly>,
}

impl PMat {
    pub fn zero(u: &Arc<Universe>, n: usize) -> Self {
        PMat { n, e: vec![Poly::zero(u); n * n] }
    }

    pub fn from_q(u: &Arc<Universe>, m: &QMat) -> Self {
        assert_eq!(m.rows, m.cols);
        PMat { n: m.rows, e: m.e.iter().map(|c| Poly::constant(u, c.clone())).collect() }
    }

    /// `Σ_k c_k m_k`.
    pub fn combination(u: &Arc<Universe>, terms: &[(Poly, &QMat)]) -> Self {
        let n = terms.first().map_or(0, |t| t.1.rows);
        let mut out = Self::zero(u, n);
        for (c, m) in terms {
            for (o, q) in out.e.iter_mut().zip(&m.e) {
                if !q.is_zero() {
                    *o += &c.scale(q);
                }
            }
        }
        out
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.e[i * self.n + j]
    }

    pub fn mul(&self, o: &PMat) -> PMat {
        let n = self.n;
        let u = self.e[0].universe().clone();
        let mut out = PMat::zero(&u, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_empty() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_empty() {
                        out.e[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, o: &PMat) -> PMat {
        PMat { n: self.n, e: self.e.iter().zip(&o.e).map(|(a, b)| a - b).collect() }
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PMat {
        PMat { n: self.n, e: self.e.iter().map(f).collect() }
    }

    pub fn apply(&self, v: &[Poly]) -> Vec<Poly> {
        let u = v[0].universe();
        (0..self.n)
            .map(|i| {
                let mut acc = Poly::zero(u);
                for (j, x) in v.iter().enumerate() {
                    let c = self.get(i, j);
                    if !c.is_empty() && !x.is_empty() {
                        acc += &(c * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Exact zero test in the quotient ring.
    pub fn is_zero(&self) -> bool {
        self.e.iter().all(Poly::is_zero)
    }

    /// First nonzero entry in canonical text, `"0"` if there is none.
    pub fn residual_text(&self) -> String {
        self.e.iter().find(|p| !p.is_zero()).map_or_else(|| "0".into(), Poly::to_text)
    }
}
