//! What each check verifies, where the statement comes from, and where its
//! constants come from. Indexed check names such as `stokes[d2]` share the
//! entry of their family `stokes`.

use super::{Suite, SuiteError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckInfo {
    pub name: &'static str,
    pub suite: Suite,
    pub anchor: &'static str,
    pub formula: &'static str,
    pub constants: &'static str,
}

const fn info(name: &'static str, suite: Suite, anchor: &'static str, formula: &'static str, constants: &'static str) -> CheckInfo {
    CheckInfo { name, suite, anchor, formula, constants }
}

use Suite::*;

const SEEDED: &str = "random inputs drawn from ChaCha8 streams keyed by (seed, check label, trial)";

pub const CATALOG: &[CheckInfo] = &[
    // superlinalg
    info("ber-mult", Superlinalg, "Berezinian is multiplicative", "Ber(AB) - Ber(A) Ber(B) = 0 for even A, B of dimension 2|2 and 3|2", SEEDED),
    info("ber-dual", Superlinalg, "Berezinian via either diagonal block", "det(A - BD^-1C) det(D)^-1 - det(A) det(D - CA^-1B)^-1 = 0", SEEDED),
    info("ber-supertranspose", Superlinalg, "Berezinian of the supertranspose", "Ber(A^st) - Ber(A) = 0", SEEDED),
    info("ber-pidual", Superlinalg, "Berezinian of the parity-dual map", "Ber(A^Pi) Ber(A) - 1 = 0", SEEDED),
    info(
        "quadric-closed",
        Superlinalg,
        "These equations define a superquadric Q(V, omega) in End(V), closed under composition.",
        "the four quadric equations S°P = Q°R + Id, P°R = R°P, Q°S = S°Q, P°S = R°Q + Id hold for AB when they hold for A and B",
        "quadric elements are products of four lower, upper and diagonal factors with odd constants lam0..lam5",
    ),
    info(
        "ber-half-square",
        Superlinalg,
        "Proposition (Khudaverdian and Voronov): the restriction of the Berezinian to Q(V, omega) is the rational function Ber(P)^2.",
        "Ber(A) - Ber(P)^2 = 0 on the quadric, P the even-even block",
        "quadric elements as for quadric-closed",
    ),
    info(
        "ber-half-mult",
        Superlinalg,
        "Corollary: the function Ber^{1/2}(A) satisfies Ber^{1/2}(AB) = Ber^{1/2}(A) Ber^{1/2}(B).",
        "Ber^{1/2}(AB) - Ber^{1/2}(A) Ber^{1/2}(B) = 0 with Ber^{1/2}(A) = det(P)",
        "quadric elements as for quadric-closed; the sign is fixed by Ber^{1/2}(Id) = 1",
    ),
    // bv
    info("bv-delta-squared", Bv, "[Delta, Delta] = 0", "Delta(Delta(s)) = 0 on a 3|3 Darboux chart", SEEDED),
    info(
        "bv-antisymmetry",
        Bv,
        "Proposition: the antibracket is antisymmetric",
        "(g,f) + (-1)^{(|f|+1)(|g|+1)} (f,g) = 0",
        SEEDED,
    ),
    info("bv-jacobi", Bv, "Proposition: the antibracket satisfies the Jacobi relation", "(f,(g,h)) - ((f,g),h) - (-1)^{(|f|+1)(|g|+1)} (g,(f,h)) = 0", SEEDED),
    info("bv-hamlift-bracket", Bv, "Proposition, part 1: [H_f, m(g)] = m((f,g))", "H_f(g s) - (-1)^{(|f|+1)|g|} g H_f(s) - (f,g) s = 0", SEEDED),
    info(
        "bv-hamlift-product",
        Bv,
        "Proposition, part 2: H_{fg} = m(f) H_g + (-1)^{|f||g|} m(g) H_f + (-1)^{|g|} m((f,g))",
        "H_{fg}(s) - f H_g(s) - (-1)^{|f||g|} g H_f(s) - (-1)^{|g|} (f,g) s = 0",
        SEEDED,
    ),
    info("bv-hamlift-commutator", Bv, "Proposition, part 3: H_{(f,g)} = [H_f, H_g]", "H_{(f,g)}(s) - [H_f, H_g](s) = 0 with the graded commutator", SEEDED),
    info("bv-hamlift-delta", Bv, "[H_f, Delta] = - [Delta, [Delta, m(f)]] = 0", "H_f(Delta s) - (-1)^{|f|+1} Delta(H_f s) = 0", SEEDED),
    info(
        "bv-flow",
        Bv,
        "A half-form sigma = g dx transforms to sigma + epsilon H_f sigma.",
        "first-order transport of s along exp(epsilon H_f) minus (s + epsilon H_f s) = 0, epsilon^2 = 0",
        SEEDED,
    ),
    info(
        "qme-tower",
        Bv,
        "quantum master equation hbar Delta S + (S,S)/2 = 0, order by order in hbar",
        "for S = S0 + hbar S1 + hbar^2 S2 + hbar^3 S3 the tower residuals equal the hbar^n coefficients of hbar Delta S + (S,S)/2, n <= 3",
        SEEDED,
    ),
    // simplex
    info("stokes", Simplex, "Stokes's Theorem on the simplex", "int_{Delta^k} delta w - sum_i (-1)^i int_{Delta^{k-1}} (d^i)^* w = 0", SEEDED),
    info("derham-squared", Simplex, "Omega_k is a simplicial differential graded algebra", "delta(delta(w)) = 0 on Delta^3", SEEDED),
    info("pullback-functorial", Simplex, "(mu nu)^* = nu^* mu^*", "(mu nu)^* w = nu^*(mu^* w) and mu^* delta w = delta mu^* w", SEEDED),
    info(
        "dirichlet-integral",
        Simplex,
        "integration over the k-simplex",
        "int_{Delta^k} t1^a1 ... tk^ak dt1...dtk = a1! ... ak! / (a1 + ... + ak + k)!, against iterated one-variable integration, exponents <= 4, k <= 3",
        "none: all exponent vectors in {0..4}^k",
    ),
    // descent
    info("families-compatible", Descent, "flexible Lagrangian: families agree under face and degeneracy maps", "mu^* L_{alpha mu} = L_alpha for all sequences up to the truncation", "barycentric interpolation of the scenario gauge fermions psi.i"),
    info(
        "lemma-eta-k0",
        Descent,
        "Lemma (Phi): Summing over i, the lemma follows.",
        "[delta + hbar Delta, Phi_{alpha0}] - sum_i (-1)^i sum_alpha Phi_{... alpha ...} = 0 on the scenario cochain and observable",
        "partition of unity and random cochain templates from the scenario file",
    ),
    info(
        "lemma-eta-k1",
        Descent,
        "Lemma (Phi): Summing over i, the lemma follows.",
        "[delta + hbar Delta, Phi_{alpha0 alpha1}] - sum_{i=0}^{2} (-1)^i sum_alpha Phi_{alpha0..alpha_{i-1} alpha alpha_i..alpha1} = 0",
        "partition of unity and random cochain templates from the scenario file",
    ),
    info(
        "lemma-eta",
        Descent,
        "Lemma (Phi): Summing over i, the lemma follows.",
        "[delta + hbar Delta, Phi_{alpha0..alphak}] - sum_i (-1)^i sum_alpha Phi_{alpha0..alpha_{i-1} alpha alpha_i..alphak} = 0, all sequences k <= 2",
        "two-set, three-set and interpolated partitions of unity on a 2|2 chart; random half-forms",
    ),
    info(
        "ms-theorem",
        Descent,
        "Theorem: let iota: L x Delta^k -> M be a proper family of Lagrangian submanifolds of M",
        "delta int_L e^{-eta/hbar} iota^* sigma - int_L e^{-eta/hbar} iota^*(delta + hbar Delta) sigma = 0",
        "eta normalized at the basepoint; families from generating functions psi with odd constants lam1..lam3",
    ),
    info("observable-closed", Descent, "an observable sigma satisfies Delta sigma = 0", "Delta(observable) = 0", "observable from the scenario file"),
    info("trace-value", Descent, "Theorem: the linear form Z on Tot Omega^{1/2}(M_bullet)", "Z(observable), reported as a value", "scenario file"),
    info(
        "truncation-soundness",
        Descent,
        "the sum defining Z terminates",
        "Phi_{alpha0..alphak} annihilates the cochain for k above the truncation K; checked at K and K+1",
        "scenario truncation, overridden by --truncation",
    ),
    info("trace-coboundary", Descent, "Theorem: Z((delta + hbar Delta) tau) = 0", "Z of a coboundary (delta + hbar Delta) tau is exactly zero, at K and K+1", "random templates for tau from the scenario seed"),
    info(
        "pou-independence",
        Descent,
        "Corollary: Z(sigma) is independent of the partition of unity used in the definition of Z",
        "d Z along the interpolation s pou + (1 - s) pou_alt vanishes for the observable",
        "pou and pou_alt from the scenario file",
    ),
    info("scenario-run", Descent, "scenario evaluation", "the scenario could be evaluated", "scenario file"),
    info("maurer-cartan", Descent, "equivariant moment map: mu is a Maurer-Cartan element", "delta_g mu + H_mu-terms: the Maurer-Cartan residual and the morphism residuals vanish", "abelian rho = xi1; two-generator [a,b] = b with rho = (x1 xi1, xi1)"),
    info("conjugation-identity", Descent, "e^{mu} conjugates the differential", "e^{-mu}(delta + hbar Delta) e^{mu} sigma - (delta_g + H_mu + hbar Delta) sigma = 0", SEEDED),
    info(
        "equivariant-closedness",
        Descent,
        "Theorem (Tg): equivariant extension of the trace",
        "Z_g((delta_g + H_mu + hbar Delta) tau) - delta_g Z_g(tau) = 0",
        "abelian and two-generator examples with random tau",
    ),
    // clifford
    info("clifford-relation", Clifford, "gamma^mu gamma^nu + gamma^nu gamma^mu = 2 eta^{mu nu}", "entrywise residual of the anticommutator, one record per (mu, nu)", "eta = diag(-1, 1, ..., 1); octonion words for the 8x8 blocks"),
    info("lightcone-null", Clifford, "m and n are light-like", "cl(m)^2 = 0 for m = m+ and m = m-", "m+- = (E0 +- E9)/2"),
    info("lightcone-pairing", Clifford, "(m, n) = 1/2 with the light-cone pairing", "cl(m) cl(n) + cl(n) cl(m) + 1 = 0", "pairing (a, b) = -eta(a, b)"),
    info("projector-idempotent", Clifford, "theta -> cl(m) cl(n) theta projects from S+- to s+-", "P^2 - P = 0 with P = -cl(m) cl(n)", "m+- as for lightcone-null"),
    info("projector-kernel", Clifford, "the image of the projector is ker cl(m)", "cl(m) P = 0", "m+- as for lightcone-null"),
    info("projector-rank", Clifford, "the constrained spinors are half of S+-", "rank P = 16 (inequality record)", "none"),
    info(
        "lemma-lightcone",
        Clifford,
        "Lemma (lightcone): p_mu T^mu(theta+, theta-) = 2 (p, m) n_nu T^nu(theta+, theta-)",
        "p_mu T^mu(P chi, P psi) - 2 (p, m) n_nu T^nu(P chi, P psi) = 0 as a polynomial in p and 32 odd spinor components",
        "none",
    ),
    info("lemma-lightcone-points", Clifford, "Lemma (lightcone) at rational momenta", "the lemma residual at seeded rational p", SEEDED),
    info("g-tau-square", Clifford, "J = (p_a gamma^{a9})/p_* squares to -1", "J^2 + 1 = 0 modulo p_*^2 = sum p_a^2", "none"),
    info("g-tau-group-law", Clifford, "g(tau) is a one-parameter group", "g(c1,s1) g(c2,s2) - g(c1c2 - s1s2, c1s2 + s1c2) = 0 modulo c^2 + s^2 = 1", "none"),
    info("g-tau-conjugation", Clifford, "g(tau) cl(m+-) g(tau)^-1 = cl(m(tau)), cl(n(tau))", "conjugation residual for m and n", "none"),
    info("m-tau-endpoints", Clifford, "m(0) = m+ and m(1) = m-, while n(0) = m- and n(1) = m+", "endpoint specializations at (c, s) = (1, 0) and (0, 1)", "rational parametrization c = cos(pi tau/2), s = sin(pi tau/2)"),
    info("m-tau-null", Clifford, "m(tau), n(tau) remain a light-cone pair", "(m,m) = (n,n) = 0 and (m, n) = 1/2", "none"),
    info("l-one", Clifford, "Corollary: L(1) = L- cap U+-", "m(1) - m- = 0 and (1 - P-) g(1) P+ = 0", "none"),
    info(
        "lemma-p-plus",
        Clifford,
        "Lemma (p+): on L(tau), p^{+a}(tau) = p^{+a} + sin(pi tau)/(2 p_*) (p_b eta^{ab} p_c T^{c9}/p_*^2 - T^{a9})",
        "flow value minus closed form = 0 in Q[c, s, p_a, p_*^{+-1}]/(c^2 + s^2 - 1, p_*^2 - sum p^2), levels n <= 1",
        "sin(pi tau) = 2cs",
    ),
    // superparticle
    info(
        "lemma-fixed",
        Superparticle,
        "Lemma (fixed): the gauge-fixed action iota^*S equals int (p dx - (p,p)/2 + de^+ c + (p,m) n_mu (-T^mu(theta0, dtheta0) + 2 sum T^mu(theta+_n, theta_{n+1}))) dt",
        "restriction of each action term minus its gauge-fixed form, modulo total derivatives; L(tau) on the momentum shell",
        "tower levels n <= 3; jets to order 3",
    ),
    info(
        "free-action",
        Superparticle,
        "in the redefined fields Theta_n = (p,m)^{n+1/2} theta_n the theory has the action of a free massless superparticle",
        "redefined gauge-fixed action minus the free action, modulo total derivatives on the momentum shell",
        "tower levels n <= 3",
    ),
    info("moment", Superparticle, "restrictions of the translation, supersymmetry and Lorentz moments", "restricted moment minus its expected gauge-fixed form", "epsilon_1..16 even ghost-one parameters; lor_{mu nu} odd constants"),
    info("tau-independence", Superparticle, "the redefined action does not depend on tau", "d/dtau of the redefined L(tau) action, modulo total derivatives on the momentum shell", "none"),
    info(
        "eta-plus-minus",
        Superparticle,
        "eta_{+-} = -(pi/p_*) sum_n p_a T^{a9}(Theta+_n, Theta_n) dtau",
        "the form written in theta, rewritten through Theta, minus the display; empty tower gives 0",
        "pi kept symbolic; tower levels n <= 3",
    ),
    info("berezinian-weights", Superparticle, "the alternating odd integers 1, -3, 5, -7 from the scaling weights +-(n + 1/2)", "weight_n - (-1)^{n+1}(2n+1) = 0, n <= 3", "none"),
    info("cover-membership", Superparticle, "U = U+ cup U-, with U+- inside U(m+-)", "every seeded point of U lies in U+ or U-, and U+- lies in U(m+-)", SEEDED),
    info("p-tau-positivity", Superparticle, "the functions p(tau), 0 <= tau <= 1, and p_* are positive on U+-", "p(tau) >= (p0 - |p9|)/2 > 0 and p_*^2 > p0^2/4 at seeded points of U+- and rational points of the circle (inequality record)", SEEDED),
    info("partition-of-unity", Superparticle, "partition of unity subordinate to {U+, U-}", "phi+ + phi- - 1 = 0 and supp phi+- inside U+-", "degree-7 smoothstep ramp on [1/4, 3/4], coefficients 35, -84, 70, -20"),
    // zeta
    info("bernoulli-b2", Zeta, "B_2(a) = a^2 - a + 1/6", "coefficients of B_2 from B_n' = n B_{n-1}, int_0^1 B_n = 0", "1/6 = B_2(0)"),
    info("bernoulli-reflection", Zeta, "B_n(1 - a) = (-1)^n B_n(a)", "coefficientwise, n <= 12", "none"),
    info("bernoulli-numbers", Zeta, "B_n(0) are the Bernoulli numbers", "B_n(0) against the recursion sum_{k<=m} C(m+1,k) B_k = 0, n <= 12", "none"),
    info("zeta(-1,1)=-1/12", Zeta, "zeta(-1) = -1/12", "zeta(1 - n, a) = -B_n(a)/n at n = 2, a = 1", "-1/12 = -B_2(1)/2"),
    info("L(-1)=0", Zeta, "the regularized Berezinian is proportional to L(-1), which vanishes", "L(-1) = 4 (zeta(-1, 1/4) - zeta(-1, 3/4)) = 0", "character mod 4: L(s) = 1 - 3^-s + 5^-s - ..."),
    info("L(-2k)=E_2k/2", Zeta, "L(-2k) = E_2k/2", "L(1-n) = 4^{n-1}(zeta(1-n,1/4) - zeta(1-n,3/4)) at n = 1, 3, 5, 7, 9", "Euler numbers 1, -1, 5, -61, 1385"),
];

/// Catalog entry of a check name; indexed names `family[...]` fall back to the family.
pub fn lookup(name: &str) -> Option<&'static CheckInfo> {
    let family = match name.find('[') {
        Some(i) if name.ends_with(']') => &name[..i],
        _ => name,
    };
    CATALOG.iter().find(|c| c.name == name).or_else(|| CATALOG.iter().find(|c| c.name == family))
}

pub fn explain(name: &str) -> Result<String, SuiteError> {
    let c = lookup(name).ok_or_else(|| SuiteError::UnknownCheck(name.to_string()))?;
    let mut s = format!("check:     {name}\nsuite:     {}\nanchor:    {}\nformula:   {}\nconstants: {}\n", c.suite, c.anchor, c.formula, c.constants);
    if c.name != name {
        s.push_str(&format!("family:    {}\n", c.name));
    }
    Ok(s)
}
