use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Mono, Universe};
use crate::Q;

/// Element of the graded supercommutative algebra generated by a [`Universe`].
#[derive(Clone)]
pub struct Poly {
    u: Arc<Universe>,
    terms: BTreeMap<Mono, Q>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.u.id() == other.u.id() && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(u: &Arc<Universe>) -> Self {
        Poly { u: u.clone(), terms: BTreeMap::new() }
    }

    pub fn one(u: &Arc<Universe>) -> Self {
        Self::constant(u, Q::one())
    }

    pub fn constant(u: &Arc<Universe>, c: Q) -> Self {
        let mut p = Self::zero(u);
        if !c.is_zero() {
            p.terms.insert(Mono::one(), c);
        }
        p
    }

    pub fn int(u: &Arc<Universe>, n: i64) -> Self {
        Self::constant(u, Q::from_integer(n.into()))
    }

    pub fn ratio(u: &Arc<Universe>, n: i64, d: i64) -> Self {
        Self::constant(u, Q::new(n.into(), d.into()))
    }

    /// The generator `name` to the first power.
    pub fn var(u: &Arc<Universe>, name: &str) -> Self {
        Self::gen(u, u.idx(name))
    }

    pub fn gen(u: &Arc<Universe>, i: u16) -> Self {
        Self::from_term(u, Mono::var(i, 1), Q::one())
    }

    pub fn gen_pow(u: &Arc<Universe>, i: u16, e: i16) -> Self {
        assert!(e >= 0 || u.gen(i).unit, "negative power of non-unit {}", u.gen(i).name);
        Self::from_term(u, Mono::var(i, e), Q::one())
    }

    pub fn from_term(u: &Arc<Universe>, m: Mono, c: Q) -> Self {
        let mut p = Self::zero(u);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(u: &Arc<Universe>, it: impl IntoIterator<Item = (Mono, Q)>) -> Self {
        let mut p = Self::zero(u);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.u
    }

    pub fn terms(&self) -> &BTreeMap<Mono, Q> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Mono, Q> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Structural zero test; see [`Poly::is_zero`] for rings with unit relations.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Q {
        self.terms.get(&Mono::one()).cloned().unwrap_or_else(Q::zero)
    }

    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&Mono::one()).cloned(),
            _ => None,
        }
    }

    /// Adds `c * m`, applying relations when `m` carries a related generator.
    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        if self.u.has_relations() {
            if let Some(pos) = m
                .factors()
                .iter()
                .position(|&(g, e)| e >= 2 && self.u.relation(g).is_some())
            {
                let (g, e) = m.factors()[pos];
                let rest = m.with_exp(g, e - 2);
                let rel = self.u.relation(g).unwrap().rhs.clone();
                for (rm, rc) in rel {
                    // related generators are even, so no sign arises
                    if let Some((nm, neg)) = rest.mul(&rm, &self.u) {
                        let nc = &c * &rc;
                        self.add_term(nm, if neg { -nc } else { nc });
                    }
                }
                return;
            }
        }
        self.raw_add(m, c);
    }

    fn raw_add(&mut self, m: Mono, c: Q) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn check_same(&self, other: &Poly) -> Result<(), AlgebraError> {
        if self.u.id() == other.u.id() {
            return Ok(());
        }
        let offending = other
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(g, _)| g))
            .map(|g| other.u.gen(g).name.clone())
            .find(|n| self.u.lookup(n).is_none())
            .or_else(|| other.u.generators().first().map(|g| g.name.clone()))
            .unwrap_or_default();
        Err(AlgebraError::UniverseMismatch(offending))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.check_same(other)?;
        Ok(self.mul_ref(other))
    }

    fn mul_ref(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(&self.u);
        if self.terms.is_empty() || other.terms.is_empty() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, neg)) = ma.mul(mb, &self.u) {
                    let c = ca * cb;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.u);
        }
        Poly {
            u: self.u.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Poly {
        self.scale(&Q::from_integer(n.into()))
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one(&self.u);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Parity if homogeneous.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|m| m.parity(&self.u));
        let first = it.next().unwrap_or(0);
        if it.all(|p| p == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn parity_mixed(&self) -> bool {
        self.parity().is_none()
    }

    /// Parity, treating the zero polynomial as even; panics if inhomogeneous.
    pub fn par(&self) -> u8 {
        self.parity().expect("inhomogeneous parity")
    }

    pub fn ghost(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|m| m.ghost(&self.u));
        let first = it.next().unwrap_or(0);
        if it.all(|g| g == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Splits into even and odd parts.
    pub fn split_parity(&self) -> (Poly, Poly) {
        let mut e = Poly::zero(&self.u);
        let mut o = Poly::zero(&self.u);
        for (m, c) in &self.terms {
            if m.parity(&self.u) == 0 {
                e.terms.insert(m.clone(), c.clone());
            } else {
                o.terms.insert(m.clone(), c.clone());
            }
        }
        (e, o)
    }

    pub fn filter(&self, mut keep: impl FnMut(&Mono) -> bool) -> Poly {
        Poly {
            u: self.u.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies `f` to every monomial, summing the images.
    pub fn map_terms(&self, mut f: impl FnMut(&Mono, &Q) -> Option<(Mono, Q)>) -> Poly {
        let mut out = Poly::zero(&self.u);
        for (m, c) in &self.terms {
            if let Some((nm, nc)) = f(m, c) {
                out.add_term(nm, nc);
            }
        }
        out
    }

    pub fn max_degree_in(&self, set: &[u16]) -> i64 {
        self.terms.keys().map(|m| m.degree_in(set)).max().unwrap_or(0)
    }

    /// Generators with a relation that appear with a negative exponent.
    fn negative_related(&self) -> Option<(u16, i16)> {
        let mut worst: Option<(u16, i16)> = None;
        for m in self.terms.keys() {
            for &(g, e) in m.factors() {
                if e < 0 && self.u.relation(g).is_some() {
                    worst = match worst {
                        None => Some((g, e)),
                        Some((wg, we)) if wg == g => Some((g, we.min(e))),
                        keep => keep,
                    };
                }
            }
        }
        worst
    }

    /// Exact zero test. Negative powers of related units are cleared first,
    /// since `u^-1` and `u/u^2` have different normal forms.
    pub fn is_zero(&self) -> bool {
        if self.terms.is_empty() {
            return true;
        }
        let mut p = self.clone();
        for _ in 0..64 {
            match p.negative_related() {
                None => return p.terms.is_empty(),
                Some((g, e)) => {
                    // shift exponents directly: gen_pow would reduce u^k first
                    p = p.map_terms(|m, c| Some((m.with_exp(g, m.exp(g) - e), c.clone())));
                }
            }
        }
        false
    }

    /// Zero if [`Poly::is_zero`] holds, otherwise unchanged; used for reports.
    pub fn canonical(&self) -> Poly {
        if self.is_zero() {
            Poly::zero(&self.u)
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse when the body is an invertible constant or a
    /// single unit monomial; nilpotent corrections use a finite Neumann series.
    pub fn try_inverse(&self) -> Result<Poly, AlgebraError> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.parity(&self.u) == 0
                && m.factors().iter().all(|&(g, _)| self.u.gen(g).unit)
            {
                let inv_m = Mono(m.factors().iter().map(|&(g, e)| (g, -e)).collect());
                let p = Poly::from_term(&self.u, inv_m, c.recip());
                return Ok(p);
            }
        }
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(AlgebraError::NotInvertible(self.to_string()));
        }
        let inv0 = c0.recip();
        // self = c0 (1 + n), n nilpotent when every non-constant term holds an odd generator
        // or a nilpotent even generator
        let n = (self - &Poly::constant(&self.u, c0.clone())).scale(&inv0);
        if !n.terms.keys().all(|m| self.is_nilpotent_mono(m)) {
            return Err(AlgebraError::NotInvertible(self.to_string()));
        }
        let mut acc = Poly::one(&self.u);
        let mut power = Poly::one(&self.u);
        let mut sign = Q::one();
        for _ in 0..=self.u.len() + 2 {
            power = &power * &n;
            if power.is_empty() {
                break;
            }
            sign = -sign;
            acc += &power.scale(&sign);
        }
        if !power.is_empty() {
            return Err(AlgebraError::NotInvertible(self.to_string()));
        }
        Ok(acc.scale(&inv0))
    }

    fn is_nilpotent_mono(&self, m: &Mono) -> bool {
        m.factors().iter().any(|&(g, e)| {
            e > 0
                && (self.u.is_odd(g)
                    || self.u.relation(g).map(|r| r.rhs.is_empty()).unwrap_or(false))
        })
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    s.push_str(&a.to_string());
                    s.push('*');
                }
                s.push_str(&m.display(&self.u));
            }
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_text())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        self.check_same(rhs).unwrap_or_else(|e| panic!("{e}"));
        for (m, c) in &rhs.terms {
            self.raw_add(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        self.check_same(rhs).unwrap_or_else(|e| panic!("{e}"));
        for (m, c) in &rhs.terms {
            self.raw_add(m.clone(), -c.clone());
        }
    }
}

impl AddAssign<Poly> for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        *self += &rhs;
    }
}

impl SubAssign<Poly> for Poly {
    fn sub_assign(&mut self, rhs: Poly) {
        *self -= &rhs;
    }
}
