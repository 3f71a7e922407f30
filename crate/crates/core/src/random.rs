//! Seeded test-data generators. Every stream is derived from the run seed and
//! a label, so adding a suite never perturbs the inputs of another.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::superpoly::{Mono, Poly, Universe};
use crate::Q;

pub type Rng64 = ChaCha8Rng;

/// FNV-1a, enough to separate labelled streams.
fn fnv(label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

pub fn stream(seed: u64, label: &str) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed ^ fnv(label).rotate_left(17))
}

pub fn stream_n(seed: u64, label: &str, n: usize) -> Rng64 {
    stream(seed, &format!("{label}#{n}"))
}

/// Small nonzero rational: numerator in [-4, 4], denominator 1 or 2.
pub fn small_q(rng: &mut Rng64) -> Q {
    let mut n: i64 = 0;
    while n == 0 {
        n = rng.gen_range(-4..=4);
    }
    let d: i64 = if rng.gen_bool(0.25) { 2 } else { 1 };
    Q::new(n.into(), d.into())
}

/// Random monomial of total degree `<= max_deg` in `gens`, odd generators at most once.
pub fn random_mono(u: &Universe, rng: &mut Rng64, gens: &[u16], max_deg: usize) -> Mono {
    let deg = rng.gen_range(0..=max_deg);
    let mut exps: Vec<(u16, i16)> = Vec::new();
    for _ in 0..deg {
        let Some(&g) = gens.choose(rng) else { break };
        if let Some(slot) = exps.iter_mut().find(|(h, _)| *h == g) {
            if !u.is_odd(g) {
                slot.1 += 1;
            }
        } else {
            exps.push((g, 1));
        }
    }
    exps.sort();
    Mono(exps.into_iter().collect())
}

/// Random polynomial with up to `max_terms` terms. With `parity` set, terms
/// of the other parity are dropped.
pub fn random_poly(
    u: &Arc<Universe>,
    rng: &mut Rng64,
    gens: &[u16],
    max_deg: usize,
    max_terms: usize,
    parity: Option<u8>,
) -> Poly {
    let n = rng.gen_range(1..=max_terms.max(1));
    let mut p = Poly::zero(u);
    for _ in 0..n {
        let m = random_mono(u, rng, gens, max_deg);
        if let Some(par) = parity {
            if m.parity(u) != par {
                continue;
            }
        }
        let c = small_q(rng);
        p.add_term(m, c);
    }
    p
}

/// Random polynomial of fixed parity and ghost number.
pub fn random_graded(
    u: &Arc<Universe>,
    rng: &mut Rng64,
    gens: &[u16],
    max_deg: usize,
    max_terms: usize,
    parity: u8,
    ghost: i64,
) -> Poly {
    let mut p = Poly::zero(u);
    let mut tries = 0;
    while p.len() < max_terms && tries < 40 * max_terms {
        tries += 1;
        let m = random_mono(u, rng, gens, max_deg);
        if m.parity(u) == parity && m.ghost(u) == ghost {
            p.add_term(m, small_q(rng));
            if rng.gen_bool(0.3) {
                break;
            }
        }
    }
    p
}
