use std::fmt;

use smallvec::SmallVec;

use super::Universe;

/// Sorted product of generators with exponents; odd generators appear at most once.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(pub SmallVec<[(u16, i16); 4]>);

impl Mono {
    pub fn one() -> Self {
        Mono(SmallVec::new())
    }

    pub fn var(i: u16, e: i16) -> Self {
        let mut v = SmallVec::new();
        if e != 0 {
            v.push((i, e));
        }
        Mono(v)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exp(&self, i: u16) -> i16 {
        match self.0.binary_search_by_key(&i, |&(g, _)| g) {
            Ok(pos) => self.0[pos].1,
            Err(_) => 0,
        }
    }

    pub fn factors(&self) -> &[(u16, i16)] {
        &self.0
    }

    pub fn parity(&self, u: &Universe) -> u8 {
        let mut p = 0u8;
        for &(g, e) in &self.0 {
            if u.is_odd(g) {
                p ^= (e & 1) as u8;
            }
        }
        p
    }

    pub fn ghost(&self, u: &Universe) -> i64 {
        self.0
            .iter()
            .map(|&(g, e)| u.gen(g).ghost as i64 * e as i64)
            .sum()
    }

    /// Total degree in the given generators.
    pub fn degree_in(&self, set: &[u16]) -> i64 {
        self.0
            .iter()
            .filter(|(g, _)| set.contains(g))
            .map(|&(_, e)| e as i64)
            .sum()
    }

    pub fn without(&self, i: u16) -> Mono {
        Mono(self.0.iter().copied().filter(|&(g, _)| g != i).collect())
    }

    pub fn with_exp(&self, i: u16, e: i16) -> Mono {
        let mut v: SmallVec<[(u16, i16); 4]> = SmallVec::new();
        let mut placed = false;
        for &(g, f) in &self.0 {
            if g == i {
                placed = true;
                if e != 0 {
                    v.push((g, e));
                }
            } else {
                if !placed && g > i {
                    placed = true;
                    if e != 0 {
                        v.push((i, e));
                    }
                }
                v.push((g, f));
            }
        }
        if !placed && e != 0 {
            v.push((i, e));
        }
        Mono(v)
    }

    /// Ordered product `self * other`; `None` if an odd generator repeats.
    /// The flag is true when reordering introduces a minus sign.
    pub fn mul(&self, other: &Mono, u: &Universe) -> Option<(Mono, bool)> {
        let a = &self.0;
        let b = &other.0;
        if b.is_empty() {
            return Some((self.clone(), false));
        }
        if a.is_empty() {
            return Some((other.clone(), false));
        }
        let mut out: SmallVec<[(u16, i16); 4]> = SmallVec::with_capacity(a.len() + b.len());
        // odd generators of `a` not yet emitted
        let mut odd_left: u32 = a.iter().filter(|&&(g, e)| u.is_odd(g) && e & 1 == 1).count() as u32;
        let mut neg = false;
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            if take_a {
                let (g, e) = a[i];
                if u.is_odd(g) && e & 1 == 1 {
                    odd_left -= 1;
                }
                out.push((g, e));
                i += 1;
            } else if i < a.len() && a[i].0 == b[j].0 {
                let (g, e) = a[i];
                let f = b[j].1;
                if u.is_odd(g) {
                    return None;
                }
                if e + f != 0 {
                    out.push((g, e + f));
                }
                i += 1;
                j += 1;
            } else {
                let (g, f) = b[j];
                if u.is_odd(g) && f & 1 == 1 && odd_left & 1 == 1 {
                    neg = !neg;
                }
                out.push((g, f));
                j += 1;
            }
        }
        Some((Mono(out), neg))
    }

    pub fn display(&self, u: &Universe) -> String {
        let mut s = String::new();
        for (k, &(g, e)) in self.0.iter().enumerate() {
            if k > 0 {
                s.push('*');
            }
            s.push_str(&u.gen(g).name);
            if e != 1 {
                s.push('^');
                s.push_str(&e.to_string());
            }
        }
        s
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}
