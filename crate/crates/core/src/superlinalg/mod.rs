//! Supermatrices over the scalar tower: supertranspose, Π-dual, Berezinian and
//! the odd symplectic quadric with its half-Berezinian.

mod matrix;
mod ops;

use std::sync::Arc;

use rand::Rng;

pub use matrix::SuperMatrix;
pub use ops::{berezinian, berezinian_dual, det, inverse, pidual, supertranspose, LinalgError};

use crate::random::{self, Rng64};
use crate::superpoly::{Poly, Universe, UniverseBuilder};
use crate::Q;

/// Superdimension `even|odd`; basis vectors are listed even first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuperDimension {
    pub even: usize,
    pub odd: usize,
}

impl SuperDimension {
    pub fn new(even: usize, odd: usize) -> Self {
        SuperDimension { even, odd }
    }

    pub fn parities(&self) -> Vec<u8> {
        let mut v = vec![0; self.even];
        v.extend(std::iter::repeat(1).take(self.odd));
        v
    }
}

/// Darboux form on `V = L ⊕ L°` with `L` even of dimension `n`: `e_a` pairs
/// with `f_a`, `ω(e_a, f_b) = δ_ab = -ω(f_b, e_a)`. Ghost numbers are 0 on `L`, 1 on `L°`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OddSymplecticForm {
    pub n: usize,
}

impl OddSymplecticForm {
    pub fn new(n: usize) -> Self {
        OddSymplecticForm { n }
    }

    pub fn dims(&self) -> SuperDimension {
        SuperDimension::new(self.n, self.n)
    }

    pub fn ghost(&self, a: usize) -> i64 {
        if a < self.n {
            0
        } else {
            1
        }
    }

    /// `ω(v_a, v_b)` on basis vectors.
    pub fn pairing(&self, a: usize, b: usize) -> i64 {
        let n = self.n;
        if a < n && b == a + n {
            1
        } else if b < n && a == b + n {
            -1
        } else {
            0
        }
    }
}

pub const RESIDUAL_NAMES: [&str; 4] =
    ["S°P - Q°R - Id", "P°R - R°P", "Q°S - S°Q", "P°S - R°Q - Id"];

fn quadric_blocks(a: &SuperMatrix, w: &OddSymplecticForm) -> Result<[SuperMatrix; 4], LinalgError> {
    let par = w.dims().parities();
    if a.rows != par || a.cols != par || a.parity != 0 {
        return Err(LinalgError::Dimension(format!(
            "matrix is not an even endomorphism of {}|{}",
            w.n, w.n
        )));
    }
    Ok([a.block(0, 0), a.block(0, 1), a.block(1, 0), a.block(1, 1)])
}

/// The four residuals whose vanishing cuts out `Q(V, ω)`.
pub fn quadric_residuals(a: &SuperMatrix, w: &OddSymplecticForm) -> Result<Vec<SuperMatrix>, LinalgError> {
    let [p, q, r, s] = quadric_blocks(a, w)?;
    let u = a.universe().clone();
    let (po, qo, ro, so) = (pidual(&p), pidual(&q), pidual(&r), pidual(&s));
    let id0 = SuperMatrix::identity(&u, &p.rows);
    let id1 = SuperMatrix::identity(&u, &s.rows);
    Ok(vec![
        so.mul(&p)?.sub(&qo.mul(&r)?).sub(&id0),
        po.mul(&r)?.sub(&ro.mul(&p)?),
        qo.mul(&s)?.sub(&so.mul(&q)?),
        po.mul(&s)?.sub(&ro.mul(&q)?).sub(&id1),
    ])
}

pub fn on_quadric(a: &SuperMatrix, w: &OddSymplecticForm) -> Result<bool, LinalgError> {
    Ok(quadric_residuals(a, w)?.iter().all(SuperMatrix::is_zero))
}

/// `Ber^{1/2}(A) = Ber(P) = det(P)` on the component of the identity.
pub fn ber_half(a: &SuperMatrix, w: &OddSymplecticForm) -> Result<Poly, LinalgError> {
    let res = quadric_residuals(a, w)?;
    let bad: Vec<String> = res
        .iter()
        .zip(RESIDUAL_NAMES)
        .filter(|(m, _)| !m.is_zero())
        .map(|(_, n)| n.to_string())
        .collect();
    if !bad.is_empty() {
        return Err(LinalgError::NotOnQuadric(bad));
    }
    let p = a.block(0, 0);
    let d = det(&p)?;
    d.try_inverse().map_err(|_| LinalgError::SingularBlock("P".into()))?;
    Ok(d)
}

/// Universe with `k` odd constants `lam0..` used as odd matrix entries.
pub fn odd_constant_universe(k: usize) -> Arc<Universe> {
    let mut b = UniverseBuilder::new();
    for i in 0..k {
        b.odd_const(&format!("lam{i}"));
    }
    b.build().expect("odd constant universe")
}

fn odd_consts(u: &Universe) -> Vec<u16> {
    (0..u.len() as u16).filter(|&g| u.is_odd(g)).collect()
}

fn random_entry(u: &Arc<Universe>, rng: &mut Rng64, parity: u8, lams: &[u16]) -> Poly {
    if parity == 1 {
        if lams.is_empty() {
            return Poly::zero(u);
        }
        let mut p = Poly::zero(u);
        for _ in 0..rng.gen_range(1..=2) {
            let g = lams[rng.gen_range(0..lams.len())];
            p += &Poly::gen(u, g).scale(&random::small_q(rng));
        }
        p
    } else {
        let mut p = Poly::constant(u, Q::from_integer(rng.gen_range(-3i64..=3).into()));
        if lams.len() >= 2 && rng.gen_bool(0.3) {
            let i = rng.gen_range(0..lams.len());
            let j = (i + 1 + rng.gen_range(0..lams.len() - 1)) % lams.len();
            p += &(&Poly::gen(u, lams[i]) * &Poly::gen(u, lams[j]));
        }
        p
    }
}

/// Random even matrix on `dims` whose entries are rationals (plus even
/// products of odd constants) on the diagonal blocks and odd constants off it.
/// Resampled until invertible.
pub fn random_even_matrix(u: &Arc<Universe>, rng: &mut Rng64, dims: SuperDimension) -> SuperMatrix {
    let par = dims.parities();
    let lams = odd_consts(u);
    loop {
        let mut m = SuperMatrix::zero(u, &par, &par, 0);
        for i in 0..par.len() {
            for j in 0..par.len() {
                m.e[i][j] = random_entry(u, rng, par[i] ^ par[j], &lams);
            }
        }
        if berezinian(&m).is_ok() {
            return m;
        }
    }
}

/// Random matrix of given parity without invertibility constraints.
pub fn random_matrix(u: &Arc<Universe>, rng: &mut Rng64, rows: &[u8], cols: &[u8], parity: u8) -> SuperMatrix {
    let lams = odd_consts(u);
    let mut m = SuperMatrix::zero(u, rows, cols, parity);
    for i in 0..rows.len() {
        for j in 0..cols.len() {
            m.e[i][j] = random_entry(u, rng, rows[i] ^ cols[j] ^ parity, &lams);
        }
    }
    m
}

fn rand_block(u: &Arc<Universe>, rng: &mut Rng64, n: usize, parity: u8, lams: &[u16]) -> Vec<Vec<Poly>> {
    (0..n).map(|_| (0..n).map(|_| random_entry(u, rng, parity, lams)).collect()).collect()
}

/// Product of `factors` elementary quadric factors on `n|n`: lower
/// `[[I,0],[R,I]]` with `R = -R^t`, upper `[[I,Q],[0,I]]` with `Q = Q^t`, and
/// diagonal `[[P,0],[0,(P^t)^-1]]`. Checked against the quadric before return.
pub fn random_quadric(
    u: &Arc<Universe>,
    rng: &mut Rng64,
    n: usize,
    factors: usize,
) -> Result<SuperMatrix, LinalgError> {
    let w = OddSymplecticForm::new(n);
    let par = w.dims().parities();
    let lams = odd_consts(u);
    let mut acc = SuperMatrix::identity(u, &par);
    for _ in 0..factors {
        let mut f = SuperMatrix::identity(u, &par);
        match rng.gen_range(0..3) {
            0 => {
                let b = rand_block(u, rng, n, 1, &lams);
                for i in 0..n {
                    for j in 0..i {
                        f.e[n + i][j] = b[i][j].clone();
                        f.e[n + j][i] = -&b[i][j];
                    }
                }
            }
            1 => {
                let b = rand_block(u, rng, n, 1, &lams);
                for i in 0..n {
                    for j in 0..=i {
                        f.e[i][n + j] = b[i][j].clone();
                        f.e[j][n + i] = b[i][j].clone();
                    }
                }
            }
            _ => {
                let p = loop {
                    let mut p = SuperMatrix::zero(u, &par[..n], &par[..n], 0);
                    p.e = rand_block(u, rng, n, 0, &lams);
                    if let Ok(pi) = inverse(&p) {
                        break (p, pi);
                    }
                };
                let pit = p.1.transpose();
                for i in 0..n {
                    for j in 0..n {
                        f.e[i][j] = p.0.e[i][j].clone();
                        f.e[n + i][n + j] = pit.e[i][j].clone();
                    }
                }
            }
        }
        acc = f.mul(&acc)?;
    }
    if !on_quadric(&acc, &w)? {
        return Err(LinalgError::GeneratorBug);
    }
    Ok(acc)
}
