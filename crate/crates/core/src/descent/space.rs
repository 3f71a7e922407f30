use std::sync::Arc;

use crate::bvcalc::DarbouxChart;
use crate::simplexforms::Simplices;
use crate::superpoly::{Kind, Poly, Universe, UniverseBuilder};

/// Shape of the generator universe shared by every object of a descent computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceConfig {
    /// Number of Darboux pairs; base coordinates `x^a` are even.
    pub n: usize,
    /// Highest simplex dimension that will be touched (nerve depth plus soundness levels).
    pub kmax: usize,
    /// Dimension of the auxiliary simplex carrying families of partitions of unity.
    pub aux: usize,
    pub odd_consts: usize,
    /// Parities of a basis of the Lie superalgebra; cochain generators get the opposite parity.
    pub lie: Vec<u8>,
}

impl SpaceConfig {
    pub fn new(n: usize, kmax: usize) -> Self {
        SpaceConfig { n, kmax, aux: 0, odd_consts: 4, lie: Vec::new() }
    }
}

/// Universe with ħ, odd constants `lam*`, cochain generators `e*`, a
/// Gaussian-dressed chart `x*, xi*`, simplex forms `t*, dt*` and auxiliary `s*, ds*`.
#[derive(Clone, Debug)]
pub struct DescentSpace {
    pub config: SpaceConfig,
    pub chart: DarbouxChart,
    pub simp: Simplices,
    pub aux: Simplices,
    pub lams: Vec<u16>,
    pub eps: Vec<u16>,
    hbar: u16,
}

impl DescentSpace {
    pub fn new(config: SpaceConfig) -> Arc<Self> {
        let mut b = UniverseBuilder::new();
        b.hbar();
        for i in 1..=config.odd_consts {
            b.odd_const(&format!("lam{i}"));
        }
        for (a, &p) in config.lie.iter().enumerate() {
            b.push(&format!("e{}", a + 1), 1 - p, 1, Kind::Cochain, false);
        }
        DarbouxChart::declare(&mut b, &vec![0; config.n], &[]);
        Simplices::declare_named(&mut b, "t", config.kmax);
        Simplices::declare_named(&mut b, "s", config.aux);
        let u = b.build().expect("descent universe");
        Arc::new(DescentSpace {
            chart: DarbouxChart::find(&u, config.n).with_gaussian(),
            simp: Simplices::find_named(&u, "t", config.kmax),
            aux: Simplices::find_named(&u, "s", config.aux),
            lams: (1..=config.odd_consts).map(|i| u.idx(&format!("lam{i}"))).collect(),
            eps: (1..=config.lie.len()).map(|i| u.idx(&format!("e{i}"))).collect(),
            hbar: u.hbar().expect("hbar declared"),
            config,
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.chart.universe()
    }

    pub fn xs(&self) -> Vec<u16> {
        self.chart.pairs().iter().map(|p| p.0).collect()
    }

    pub fn xis(&self) -> Vec<u16> {
        self.chart.pairs().iter().map(|p| p.1).collect()
    }

    pub fn hbar(&self) -> Poly {
        Poly::gen(self.universe(), self.hbar)
    }

    pub fn hbar_pow(&self, e: i16) -> Poly {
        Poly::gen_pow(self.universe(), self.hbar, e)
    }

    pub fn parse(&self, text: &str) -> Result<Poly, crate::AlgebraError> {
        crate::superpoly::parse_poly(self.universe(), text)
    }

    /// `(δ + ħΔ)σ` with `δ` the de Rham differential of the nerve simplex.
    pub fn d_total(&self, s: &Poly) -> Poly {
        &self.simp.derham(s) + &(&self.hbar() * &self.chart.delta(s))
    }

    /// `(d + δ + ħΔ)σ` including the auxiliary simplex.
    pub fn d_total_aux(&self, s: &Poly) -> Poly {
        &self.aux.derham(s) + &self.d_total(s)
    }
}
