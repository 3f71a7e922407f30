use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::{AlgebraError, Kind, Mono, Poly};
use crate::Q;

/// Simultaneous substitution data: generator index to replacement.
pub type Assignment = BTreeMap<u16, Poly>;

/// Left derivative by generator `v`, rejecting formal constants and forms.
pub fn partial(v: u16, f: &Poly) -> Result<Poly, AlgebraError> {
    let g = f.universe().gen(v);
    match g.kind {
        Kind::OddConst | Kind::SimplexForm | Kind::AlgConst => {
            Err(AlgebraError::NotDifferentiable(g.name.clone()))
        }
        _ => Ok(partial_formal(v, f)),
    }
}

/// Left derivative without the kind check.
pub fn partial_formal(v: u16, f: &Poly) -> Poly {
    let u = f.universe().clone();
    let odd = u.is_odd(v);
    f.map_terms(|m, c| {
        let e = m.exp(v);
        if e == 0 {
            return None;
        }
        if odd {
            let before = m
                .factors()
                .iter()
                .take_while(|&&(g, _)| g < v)
                .filter(|&&(g, k)| u.is_odd(g) && k & 1 == 1)
                .count();
            let nc = if before % 2 == 1 { -c.clone() } else { c.clone() };
            Some((m.without(v), nc))
        } else {
            Some((m.with_exp(v, e - 1), c * Q::from_integer(e.into())))
        }
    })
}

/// The derivation `D = sum_g D(g) d/dg` determined by its values on generators.
pub fn derivation(f: &Poly, images: &[(u16, Poly)]) -> Poly {
    let mut out = Poly::zero(f.universe());
    for (g, img) in images {
        if img.is_empty() {
            continue;
        }
        let d = partial_formal(*g, f);
        if !d.is_empty() {
            out += &(img * &d);
        }
    }
    out
}

/// Simultaneous graded substitution.
pub fn substitute(f: &Poly, assignment: &Assignment) -> Result<Poly, AlgebraError> {
    let u = f.universe().clone();
    for (g, val) in assignment {
        val.check_same(f)?;
        let expected = u.gen(*g).parity;
        match val.parity() {
            Some(p) if p == expected || val.is_empty() => {}
            got => {
                return Err(AlgebraError::ParityMismatch {
                    name: u.gen(*g).name.clone(),
                    expected,
                    got: got.map(|p| p.to_string()).unwrap_or_else(|| "mixed".into()),
                })
            }
        }
    }
    let mut cache: HashMap<(u16, i16), Poly> = HashMap::new();
    let mut out = Poly::zero(&u);
    for (m, c) in f.terms() {
        if !m.factors().iter().any(|(g, _)| assignment.contains_key(g)) {
            out.add_term(m.clone(), c.clone());
            continue;
        }
        let mut acc = Poly::constant(&u, c.clone());
        // keep untouched runs as monomials to limit multiplications
        let mut run = Mono::one();
        for &(g, e) in m.factors() {
            if let Some(val) = assignment.get(&g) {
                if !run.is_one() {
                    acc = &acc * &Poly::from_term(&u, std::mem::take(&mut run), Q::one());
                }
                let key = (g, e);
                if !cache.contains_key(&key) {
                    let p = if e >= 0 {
                        val.pow(e as u32)
                    } else {
                        val.try_inverse()?.pow((-e) as u32)
                    };
                    cache.insert(key, p);
                }
                acc = &acc * &cache[&key];
                if acc.is_empty() {
                    break;
                }
            } else {
                run = match run.mul(&Mono::var(g, e), &u) {
                    Some((r, false)) => r,
                    _ => unreachable!("monomial factors are sorted"),
                };
            }
        }
        if !run.is_one() && !acc.is_empty() {
            acc = &acc * &Poly::from_term(&u, run, Q::one());
        }
        out += &acc;
    }
    Ok(out)
}

/// Berezin integral over `odd_vars`: `berezin(v1 v2 ... vk, [v1, ..., vk]) = 1`.
pub fn berezin(f: &Poly, odd_vars: &[u16]) -> Result<Poly, AlgebraError> {
    let u = f.universe();
    for (i, &v) in odd_vars.iter().enumerate() {
        if !u.is_odd(v) {
            return Err(AlgebraError::NotOdd(u.gen(v).name.clone()));
        }
        if odd_vars[..i].contains(&v) {
            return Err(AlgebraError::RepeatedGenerator(u.gen(v).name.clone()));
        }
    }
    let mut g = f.clone();
    for &v in odd_vars {
        g = partial_formal(v, &g);
        if g.is_empty() {
            break;
        }
    }
    Ok(g)
}

/// Standard Gaussian moment in `even_vars`, normalized so that `E[1] = 1`.
/// Odd coordinates may not survive; odd scalars and forms ride along.
pub fn gaussian_moment(f: &Poly, even_vars: &[u16]) -> Result<Poly, AlgebraError> {
    let u = f.universe().clone();
    let mut out = Poly::zero(&u);
    for (m, c) in f.terms() {
        let mut weight = Q::one();
        let mut rest = Mono::one();
        for &(g, e) in m.factors() {
            if even_vars.contains(&g) {
                if e < 0 {
                    return Err(AlgebraError::NegativePower(u.gen(g).name.clone()));
                }
                if e % 2 == 1 {
                    weight = Q::zero();
                } else {
                    weight *= Q::from_integer(double_factorial(e as i64 - 1).into());
                }
            } else {
                // odd constants, simplex forms and cochain generators are coefficients
                if u.is_odd(g) && !matches!(u.gen(g).kind, Kind::OddConst | Kind::SimplexForm | Kind::Cochain) {
                    return Err(AlgebraError::ResidualOdd(u.gen(g).name.clone()));
                }
                rest.0.push((g, e));
            }
        }
        if !weight.is_zero() {
            out.add_term(rest, c * weight);
        }
    }
    Ok(out)
}

fn double_factorial(n: i64) -> i64 {
    let mut acc = 1i64;
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// Coefficient of `hbar^k`.
pub fn laurent_coeff(f: &Poly, k: i16) -> Poly {
    let Some(h) = f.universe().hbar() else {
        return if k == 0 { f.clone() } else { Poly::zero(f.universe()) };
    };
    f.map_terms(|m, c| {
        if m.exp(h) == k {
            Some((m.without(h), c.clone()))
        } else {
            None
        }
    })
}
