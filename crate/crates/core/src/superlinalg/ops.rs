use std::sync::Arc;

use thiserror::Error;

use super::SuperMatrix;
use crate::superpoly::{AlgebraError, Poly, Universe};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("block {0} is singular")]
    SingularBlock(String),
    #[error("Berezinian needs an even square matrix")]
    NotEven,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not on the quadric; nonzero residuals: {0:?}")]
    NotOnQuadric(Vec<String>),
    #[error("quadric generator self-check failed")]
    GeneratorBug,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn flip(v: &[u8]) -> Vec<u8> {
    v.iter().map(|p| 1 - p).collect()
}

/// Sign rule shared by `*` and `°`: entry `(v, w)` of the adjoint picks up a
/// minus sign exactly when the two basis parities differ and the morphism
/// parity equals the parity of `w`.
fn adjoint(a: &SuperMatrix, pv: &[u8], qw: &[u8], rows: Vec<u8>, cols: Vec<u8>) -> SuperMatrix {
    let d = a.parity;
    let e = (0..a.ncols())
        .map(|v| {
            (0..a.nrows())
                .map(|w| {
                    let x = &a.e[w][v];
                    if pv[v] != qw[w] && d == qw[w] {
                        -x
                    } else {
                        x.clone()
                    }
                })
                .collect()
        })
        .collect();
    SuperMatrix { rows, cols, parity: d, e }
}

/// Supertranspose `A*: W* -> V*`.
pub fn supertranspose(a: &SuperMatrix) -> SuperMatrix {
    adjoint(a, &a.cols, &a.rows, a.cols.clone(), a.rows.clone())
}

/// Π-dual `A° = (A^Π)*: W° -> V°`; the bases of `W°` and `V°` have flipped parity.
pub fn pidual(a: &SuperMatrix) -> SuperMatrix {
    let pv = flip(&a.cols);
    let qw = flip(&a.rows);
    adjoint(a, &pv, &qw, pv.clone(), qw.clone())
}

/// Determinant of a square matrix with pairwise commuting entries, by
/// elimination with pivots whose inverse exists in the tower.
pub fn det(a: &SuperMatrix) -> Result<Poly, LinalgError> {
    let n = a.nrows();
    if n != a.ncols() {
        return Err(LinalgError::Dimension("det of non-square block".into()));
    }
    if n == 0 {
        return Err(LinalgError::Dimension("det of empty block needs a universe".into()));
    }
    let u = a.universe().clone();
    let mut m = a.e.clone();
    let mut acc = Poly::one(&u);
    for col in 0..n {
        let mut piv = None;
        for r in col..n {
            if let Ok(inv) = m[r][col].try_inverse() {
                piv = Some((r, inv));
                break;
            }
        }
        let Some((r, inv)) = piv else {
            if (col..n).all(|r| m[r][col].is_zero()) {
                return Ok(Poly::zero(&u));
            }
            return Err(LinalgError::SingularBlock("no invertible pivot".into()));
        };
        if r != col {
            m.swap(r, col);
            acc = -acc;
        }
        acc = &acc * &m[col][col];
        for r2 in col + 1..n {
            if m[r2][col].is_empty() {
                continue;
            }
            let f = &m[r2][col] * &inv;
            for c2 in col..n {
                let t = &f * &m[col][c2];
                m[r2][c2] -= &t;
            }
        }
    }
    Ok(acc)
}

/// Inverse of a square matrix with commuting entries, by Gauss-Jordan elimination.
pub fn inverse(a: &SuperMatrix) -> Result<SuperMatrix, LinalgError> {
    let n = a.nrows();
    if n != a.ncols() {
        return Err(LinalgError::Dimension("inverse of non-square block".into()));
    }
    if n == 0 {
        return Ok(a.clone());
    }
    let u = a.universe().clone();
    let mut m = a.e.clone();
    let mut inv = SuperMatrix::identity(&u, &a.rows).e;
    for col in 0..n {
        let mut piv = None;
        for r in col..n {
            if let Ok(iv) = m[r][col].try_inverse() {
                piv = Some((r, iv));
                break;
            }
        }
        let (r, iv) = piv.ok_or_else(|| LinalgError::SingularBlock("pivot".into()))?;
        m.swap(r, col);
        inv.swap(r, col);
        for c2 in 0..n {
            m[col][c2] = &iv * &m[col][c2];
            inv[col][c2] = &iv * &inv[col][c2];
        }
        for r2 in 0..n {
            if r2 == col || m[r2][col].is_empty() {
                continue;
            }
            let f = m[r2][col].clone();
            for c2 in 0..n {
                let t = &f * &m[col][c2];
                m[r2][c2] -= &t;
                let t = &f * &inv[col][c2];
                inv[r2][c2] -= &t;
            }
        }
    }
    Ok(SuperMatrix { rows: a.cols.clone(), cols: a.rows.clone(), parity: a.parity, e: inv })
}

fn blocks(a: &SuperMatrix) -> Result<[SuperMatrix; 4], LinalgError> {
    if a.parity != 0 || a.rows != a.cols {
        return Err(LinalgError::NotEven);
    }
    Ok([a.block(0, 0), a.block(0, 1), a.block(1, 0), a.block(1, 1)])
}

fn det_or_one(u: &Arc<Universe>, m: &SuperMatrix, name: &str) -> Result<Poly, LinalgError> {
    if m.nrows() == 0 {
        return Ok(Poly::one(u));
    }
    det(m).map_err(|_| LinalgError::SingularBlock(name.into()))
}

fn invert(p: &Poly, name: &str) -> Result<Poly, LinalgError> {
    p.try_inverse().map_err(|_| LinalgError::SingularBlock(name.into()))
}

fn first_entry_universe(a: &SuperMatrix) -> Arc<Universe> {
    a.universe().clone()
}

/// `Ber(A) = det(A00) / det(A11 - A10 A00^-1 A01)`.
pub fn berezinian(a: &SuperMatrix) -> Result<Poly, LinalgError> {
    let u = first_entry_universe(a);
    let [a00, a01, a10, a11] = blocks(a)?;
    let d0 = det_or_one(&u, &a00, "A00")?;
    if a11.nrows() == 0 {
        return Ok(d0);
    }
    let schur = if a00.nrows() == 0 {
        a11.clone()
    } else {
        let i00 = inverse(&a00).map_err(|_| LinalgError::SingularBlock("A00".into()))?;
        a11.sub(&a10.mul(&i00)?.mul(&a01)?)
    };
    let d1 = det_or_one(&u, &schur, "A11 - A10 A00^-1 A01")?;
    Ok(&d0 * &invert(&d1, "A11 - A10 A00^-1 A01")?)
}

/// The same Berezinian through the other Schur complement,
/// `det(A00 - A01 A11^-1 A10) / det(A11)`.
pub fn berezinian_dual(a: &SuperMatrix) -> Result<Poly, LinalgError> {
    let u = first_entry_universe(a);
    let [a00, a01, a10, a11] = blocks(a)?;
    let d1 = det_or_one(&u, &a11, "A11")?;
    let inv1 = invert(&d1, "A11")?;
    if a00.nrows() == 0 {
        return Ok(inv1);
    }
    let schur = if a11.nrows() == 0 {
        a00.clone()
    } else {
        let i11 = inverse(&a11).map_err(|_| LinalgError::SingularBlock("A11".into()))?;
        a00.sub(&a01.mul(&i11)?.mul(&a10)?)
    };
    let d0 = det_or_one(&u, &schur, "A00 - A01 A11^-1 A10")?;
    Ok(&d0 * &inv1)
}
