use num_traits::One;

use super::*;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn rep() -> SpinorRep {
    SpinorRep::build().unwrap()
}

#[test]
fn sigma_examples() {
    let r = rep();
    assert_eq!(r.sigma[0].mul(&r.sigma_bar[0]), QMat::identity(16).scale(&-Q::one()));
    assert!(r.sigma[1].mul(&r.sigma_bar[2]).add(&r.sigma[2].mul(&r.sigma_bar[1])).is_zero());
}

#[test]
fn gamma_entries_are_signed_permutations() {
    let r = rep();
    for mu in 0..DIM {
        let rows = r.gamma(mu).to_int_rows().unwrap();
        for row in rows {
            assert_eq!(row.iter().filter(|x| **x != 0).count(), 1);
            assert!(row.iter().all(|x| x.abs() <= 1));
        }
    }
}

#[test]
fn gamma_clifford_relation_on_full_spinors() {
    // independent of the σ/σ̄ bookkeeping inside `build`
    let r = rep();
    for mu in 0..DIM {
        for nu in 0..DIM {
            let ac = r.gamma(mu).mul(r.gamma(nu)).add(&r.gamma(nu).mul(r.gamma(mu)));
            assert_eq!(ac, QMat::identity(32).scale(&q(2 * eta(mu, nu))), "({mu},{nu})");
        }
    }
}

#[test]
fn golden_gamma_grids() {
    let text = rep().golden_text();
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/sigma.txt");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(path, &text).unwrap();
    }
    assert_eq!(text, std::fs::read_to_string(path).unwrap());
}

#[test]
fn light_like_squares() {
    let r = rep();
    let m = light_cone_q(1);
    let n = light_cone_q(-1);
    let (cm, cn) = (r.cl_q(&m), r.cl_q(&n));
    assert!(cm.mul(&cm).is_zero());
    assert!(cn.mul(&cn).is_zero());
    // {cl(m), cl(n)} = 2η(m, n) = -(1): the light-cone pairing is -η
    assert_eq!(cm.mul(&cn).add(&cn.mul(&cm)), QMat::identity(32).scale(&-Q::one()));
    let e09: Vec<Q> = (0..DIM).map(|i| if i == 0 || i == 9 { q(1) } else { q(0) }).collect();
    let c = r.cl_q(&e09);
    assert!(c.mul(&c).is_zero());
}

#[test]
fn projector_properties() {
    let r = rep();
    let (m, n) = (light_cone_q(1), light_cone_q(-1));
    let p = lightcone_projector(&r, &m, &n).unwrap();
    assert_eq!(p.mul(&p), p);
    assert_eq!(p.rank(), 16);
    assert!(r.cl_q(&m).mul(&p).is_zero());
    // rank 8 on each chirality, and the image is exactly ker cl(m)
    for (lo, hi) in [(0, 16), (16, 32)] {
        let mut block = QMat::zeros(16, 16);
        for i in 0..16 {
            for j in 0..16 {
                block.set(i, j, p.get(lo + i, lo + j).clone());
            }
        }
        assert_eq!(block.rank(), 8, "chirality block {lo}..{hi}");
    }
    assert_eq!(r.cl_q(&m).rank(), 16);
    assert!(matches!(lightcone_projector(&r, &m, &m), Err(CliffordError::Pairing(_))));
    let mut e0 = vec![q(0); DIM];
    e0[0] = q(1);
    assert!(lightcone_projector(&r, &e0, &n).is_err());
}

#[test]
fn cl_squares_to_the_norm() {
    let r = rep();
    let u = lemma_universe();
    let p = MinkowskiVector::new((0..DIM).map(|i| Poly::var(&u, &format!("p{i}"))).collect());
    let c = p.cl(&r);
    let sq = c.mul(&c);
    let norm = p.dot(&p);
    for i in 0..32 {
        for j in 0..32 {
            let want = if i == j { norm.clone() } else { Poly::zero(&u) };
            assert_eq!(sq.get(i, j), &want);
        }
    }
    let psi = SpinorVector::symbols(&u, Chirality::Plus, "chi");
    let once = cl(&r, &p, &psi);
    assert_eq!(once.chirality, Chirality::Minus);
    let twice = cl(&r, &p, &once);
    assert_eq!(twice.comps, psi.comps.iter().map(|x| &norm * x).collect::<Vec<_>>());
}

fn symbolic_p(u: &std::sync::Arc<Universe>) -> MinkowskiVector {
    MinkowskiVector::new((0..DIM).map(|i| Poly::var(u, &format!("p{i}"))).collect())
}

#[test]
fn lemma_lightcone_symbolic() {
    let r = rep();
    let u = lemma_universe();
    let p = symbolic_p(&u);
    for ch in [Chirality::Plus, Chirality::Minus] {
        let res = lemma_lightcone_residual(&r, &u, &p, (ch, ch));
        assert!(res.is_zero(), "{ch:?}: {res}");
    }
    // opposite chiralities: both sides vanish separately
    let res = lemma_lightcone_residual(&r, &u, &p, (Chirality::Plus, Chirality::Minus));
    assert!(res.is_zero());
}

#[test]
fn lemma_lightcone_is_not_vacuous() {
    let r = rep();
    let u = lemma_universe();
    let (m, n) = (light_cone_q(1), light_cone_q(-1));
    let proj = lightcone_projector(&r, &m, &n).unwrap();
    let th = SpinorVector::symbols(&u, Chirality::Plus, "chi").apply_q(&proj);
    let th2 = SpinorVector::symbols(&u, Chirality::Plus, "psi").apply_q(&proj);
    let mut nt = Poly::zero(&u);
    for mu in 0..DIM {
        nt += &pair_t1(&r, mu, &th, &th2).scale(&n[mu]);
    }
    assert!(!nt.is_zero());
    // dropping the constraint breaks the identity
    let p = symbolic_p(&u);
    let free = SpinorVector::symbols(&u, Chirality::Plus, "chi").full();
    let free2 = SpinorVector::symbols(&u, Chirality::Plus, "psi").full();
    let mut lhs = Poly::zero(&u);
    let mut rhs = Poly::zero(&u);
    for mu in 0..DIM {
        let t = pair_t1(&r, mu, &free, &free2);
        lhs += &(&p.v[mu] * &t);
        rhs += &t.scale(&n[mu]);
    }
    let pm = lc(&p, &MinkowskiVector::constant(&u, &m)).scale_int(2);
    assert!(!(&lhs - &(&pm * &rhs)).is_zero());
}

#[test]
fn lemma_lightcone_specializations() {
    let r = rep();
    let u = lemma_universe();
    let m = MinkowskiVector::light_cone(&u, 1);
    assert!(lemma_lightcone_residual(&r, &u, &m, (Chirality::Plus, Chirality::Plus)).is_zero());
    let vals = [3, -1, 2, 0, 5, 1, -4, 7, 2, -2];
    let p = MinkowskiVector::constant(&u, &vals.iter().map(|&v| q(v)).collect::<Vec<_>>());
    assert!(lemma_lightcone_residual(&r, &u, &p, (Chirality::Minus, Chirality::Minus)).is_zero());
}

#[test]
fn transverse_generators_and_t_on_kernels() {
    let r = rep();
    for sign in [1, -1] {
        let c = r.cl_q(&light_cone_q(sign));
        for a in 1..=8 {
            for b in a + 1..=8 {
                let g = r.gamma2(a, b);
                assert_eq!(g.mul(&c), c.mul(&g));
            }
        }
        // γ^{09} anticommutes, which is what the vanishing of T^{09} needs
        let g = r.gamma2(0, 9);
        assert!(g.mul(&c).add(&c.mul(&g)).is_zero());
    }
    let u = lemma_universe();
    let proj = lightcone_projector(&r, &light_cone_q(1), &light_cone_q(-1)).unwrap();
    let a = SpinorVector::symbols(&u, Chirality::Plus, "chi").apply_q(&proj);
    let b = SpinorVector::symbols(&u, Chirality::Minus, "psi").apply_q(&proj);
    assert!(pair_t2(&r, 0, 9, &a, &b).is_zero());
    assert!(pair_t2(&r, 1, 2, &a, &b).is_zero());
    assert!(!pair_t2(&r, 1, 9, &a, &b).is_zero());
}

fn flow(n: usize) -> LcFlow {
    LcFlow::new(rep(), n)
}

#[test]
fn g_tau_identities() {
    let f = flow(0);
    let u = f.u().clone();
    let id = PMat::from_q(&u, &QMat::identity(32));
    let g0 = f.g_at(&Poly::one(&u), &Poly::zero(&u));
    assert!(g0.sub(&id).is_zero());
    let half_turn = f.g_at(&Poly::zero(&u), &Poly::one(&u));
    let minus = id.map(|x| -x);
    assert!(half_turn.mul(&half_turn).sub(&minus).is_zero());
    assert!(f.g().mul(&f.g_inv()).sub(&id).is_zero());
    assert!(f.j_square_residual().is_zero());
}

#[test]
fn g_tau_group_law() {
    let f = flow(0);
    let r = f.group_law_residual();
    assert!(r.is_zero(), "{}", r.residual_text());
}

#[test]
fn conjugation_m_and_n() {
    let f = flow(0);
    for sign in [1, -1] {
        let r = f.conjugation_residual(sign);
        assert!(r.is_zero(), "sign {sign}: {}", r.residual_text());
    }
}

#[test]
fn m_tau_endpoints_and_light_likeness() {
    let f = flow(0);
    let u = f.u().clone();
    let at = |v: &MinkowskiVector, c: i64, s: i64| -> Vec<Poly> { v.v.iter().map(|x| f.ring.eval(x, &[("c", q(c)), ("s", q(s))]).unwrap()).collect() };
    assert_eq!(at(&f.m_tau(1), 1, 0), MinkowskiVector::light_cone(&u, 1).v);
    assert_eq!(at(&f.m_tau(1), 0, 1), MinkowskiVector::light_cone(&u, -1).v);
    assert_eq!(at(&f.m_tau(-1), 1, 0), MinkowskiVector::light_cone(&u, -1).v);
    assert_eq!(at(&f.m_tau(-1), 0, 1), MinkowskiVector::light_cone(&u, 1).v);
    let m = f.m_tau(1);
    let n = f.m_tau(-1);
    assert!(m.dot(&m).is_zero());
    assert!(n.dot(&n).is_zero());
    assert!((&lc(&m, &n) - &Poly::constant(&u, half())).is_zero());
}

#[test]
fn p_of_tau_matches_the_light_cone_pairing() {
    // (p, m(τ)) = ½(p_0 - cos πτ p_9 + sin πτ p_*) needs the -η pairing
    let f = flow(0);
    let u = f.u().clone();
    let r = &f.ring;
    let mut pv = vec![Poly::var(&u, "s2"); DIM];
    pv[9] = Poly::var(&u, "pp1");
    for a in 1..=8 {
        pv[a] = r.p(a);
    }
    let p = MinkowskiVector::new(pv);
    let (c, s) = (r.var("c"), r.var("s"));
    let cos = &(&c * &c) - &(&s * &s);
    let sin = (&c * &s).scale_int(2);
    let want = (&(&p.v[0] - &(&cos * &p.v[9])) + &(&sin * &r.var("pstar"))).scale(&half());
    assert!((&lc(&p, &f.m_tau(1)) - &want).is_zero());
}

#[test]
fn p_plus_flow_symbolic() {
    let f = flow(1);
    for (a, r) in f.p_plus_flow_residual().iter().enumerate() {
        assert!(r.is_zero(), "a = {}: {}", a + 1, r);
    }
}

#[test]
fn p_plus_flow_at_rational_points() {
    let f = flow(0);
    let res = f.p_plus_flow_residual();
    // (c, s) on the circle, p with a rational norm
    let pts: [([i64; 8], i64, (i64, i64, i64)); 2] = [([1, 2, 2, 0, 0, 0, 0, 0], 3, (3, 4, 5)), ([2, 0, 3, 0, 6, 0, 0, 0], 7, (5, 12, 13))];
    for (p, ps, (cn, sn, d)) in pts {
        let mut vals: Vec<(String, Q)> = (1..=8).map(|a| (format!("p{a}"), q(p[a - 1]))).collect();
        vals.push(("pstar".into(), q(ps)));
        vals.push(("c".into(), Q::new(cn.into(), d.into())));
        vals.push(("s".into(), Q::new(sn.into(), d.into())));
        let refs: Vec<(&str, Q)> = vals.iter().map(|(n, v)| (n.as_str(), v.clone())).collect();
        for r in &res {
            assert!(f.ring.eval(r, &refs).unwrap().is_zero());
        }
    }
    // τ = 0: no shift
    let u = f.u().clone();
    for r in &res {
        assert!(f.ring.eval(r, &[("c", q(1)), ("s", q(0))]).unwrap().is_zero());
    }
    let _ = u;
}

#[test]
fn p_plus_flow_detects_wrong_derivative() {
    // dropping the p_* chain rule term must break the identity
    let f = flow(0);
    let r = &f.ring;
    let g = f.g();
    let pa = f.u().idx("p1");
    let naive = g.map(|x| partial_formal_pub(pa, x));
    let correct = g.map(|x| r.d_pa(1, x));
    assert!(!naive.sub(&correct).is_zero());
}

fn partial_formal_pub(v: u16, f: &Poly) -> Poly {
    crate::superpoly::partial_formal(v, f)
}

#[test]
fn l_one_is_l_minus() {
    let f = flow(0);
    let (dm, r) = f.l_one_residual().unwrap();
    assert!(dm.iter().all(Poly::is_zero));
    assert!(r.is_zero(), "{}", r.residual_text());
}
