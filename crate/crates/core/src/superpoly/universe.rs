//! Generator universes: the ordered alphabet every polynomial is written in.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use serde::Serialize;

use super::{parse, AlgebraError, Mono, Poly};

static NEXT_UNIVERSE_ID: AtomicU64 = AtomicU64::new(1);

/// Role of a generator; decides which operations accept it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    EvenCoord,
    OddCoord,
    OddConst,
    SimplexCoord,
    SimplexForm,
    Cochain,
    Field,
    FieldDeriv,
    /// Formal Laurent variable ħ.
    Hbar,
    /// Commuting parameter (momenta, auxiliary simplex coordinates, ...).
    Param,
    /// Constant tied to other generators by a quadratic relation.
    AlgConst,
}

#[derive(Clone, Debug, Serialize)]
pub struct Generator {
    pub name: String,
    pub parity: u8,
    pub ghost: i32,
    pub kind: Kind,
    /// Negative exponents are allowed.
    pub unit: bool,
}

impl Generator {
    pub fn is_odd(&self) -> bool {
        self.parity == 1
    }
}

/// `var^2 = rhs`; an empty `rhs` makes `var` nilpotent of order two.
#[derive(Clone, Debug)]
pub struct Relation {
    pub var: u16,
    pub rhs: Vec<(Mono, crate::Q)>,
}

#[derive(Debug)]
pub struct Universe {
    id: u64,
    gens: Vec<Generator>,
    index: HashMap<String, u16>,
    relations: Vec<Option<Relation>>,
    has_relations: bool,
    hbar: Option<u16>,
}

impl Universe {
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gen(&self, i: u16) -> &Generator {
        &self.gens[i as usize]
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn lookup(&self, name: &str) -> Option<u16> {
        self.index.get(name).copied()
    }

    pub fn idx(&self, name: &str) -> u16 {
        self.lookup(name)
            .unwrap_or_else(|| panic!("unknown generator `{name}`"))
    }

    pub fn relation(&self, i: u16) -> Option<&Relation> {
        self.relations[i as usize].as_ref()
    }

    pub fn has_relations(&self) -> bool {
        self.has_relations
    }

    pub fn hbar(&self) -> Option<u16> {
        self.hbar
    }

    pub fn is_odd(&self, i: u16) -> bool {
        self.gens[i as usize].parity == 1
    }

    /// Generator names in Koszul order, for reports.
    pub fn order(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.name.clone()).collect()
    }
}

/// Accumulates generators in their Koszul order, then relations.
#[derive(Default)]
pub struct UniverseBuilder {
    gens: Vec<Generator>,
    relations: Vec<(String, String)>,
}

impl UniverseBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: &str, parity: u8, ghost: i32, kind: Kind, unit: bool) -> &mut Self {
        assert!(
            !self.gens.iter().any(|g| g.name == name),
            "generator `{name}` declared twice"
        );
        self.gens.push(Generator {
            name: name.to_string(),
            parity: parity & 1,
            ghost,
            kind,
            unit,
        });
        self
    }

    pub fn even(&mut self, name: &str) -> &mut Self {
        self.push(name, 0, 0, Kind::EvenCoord, false)
    }

    pub fn odd(&mut self, name: &str) -> &mut Self {
        self.push(name, 1, 0, Kind::OddCoord, false)
    }

    pub fn odd_const(&mut self, name: &str) -> &mut Self {
        self.push(name, 1, 0, Kind::OddConst, false)
    }

    pub fn param(&mut self, name: &str) -> &mut Self {
        self.push(name, 0, 0, Kind::Param, false)
    }

    pub fn unit_param(&mut self, name: &str) -> &mut Self {
        self.push(name, 0, 0, Kind::Param, true)
    }

    pub fn hbar(&mut self) -> &mut Self {
        self.push("hbar", 0, 0, Kind::Hbar, true)
    }

    /// An even constant `name` with `name^2 = 0`.
    pub fn nilpotent(&mut self, name: &str) -> &mut Self {
        self.push(name, 0, 0, Kind::Param, false);
        self.relations.push((name.to_string(), "0".to_string()));
        self
    }

    /// An even algebraic constant with `name^2 = rhs`.
    pub fn alg_const(&mut self, name: &str, rhs: &str, unit: bool) -> &mut Self {
        self.push(name, 0, 0, Kind::AlgConst, unit);
        self.relations.push((name.to_string(), rhs.to_string()));
        self
    }

    pub fn build(&self) -> Result<Arc<Universe>, AlgebraError> {
        let mut index = HashMap::new();
        for (i, g) in self.gens.iter().enumerate() {
            index.insert(g.name.clone(), i as u16);
        }
        let hbar = self
            .gens
            .iter()
            .position(|g| g.kind == Kind::Hbar)
            .map(|i| i as u16);
        // Relation right-hand sides are parsed in a relation-free copy.
        let bare = Arc::new(Universe {
            id: NEXT_UNIVERSE_ID.fetch_add(1, Ordering::Relaxed),
            gens: self.gens.clone(),
            index: index.clone(),
            relations: vec![None; self.gens.len()],
            has_relations: false,
            hbar,
        });
        let mut relations = vec![None; self.gens.len()];
        for (name, rhs) in &self.relations {
            let var = bare.lookup(name).ok_or_else(|| AlgebraError::UnknownGenerator(name.clone()))?;
            let p: Poly = parse::parse_poly(&bare, rhs)?;
            if p.parity_mixed() || p.terms().keys().any(|m| m.parity(&bare) == 1) {
                return Err(AlgebraError::Parse(format!("relation for `{name}` is not even")));
            }
            relations[var as usize] = Some(Relation {
                var,
                rhs: p.into_terms().into_iter().collect(),
            });
        }
        let has_relations = relations.iter().any(|r| r.is_some());
        Ok(Arc::new(Universe {
            id: NEXT_UNIVERSE_ID.fetch_add(1, Ordering::Relaxed),
            gens: self.gens.clone(),
            index,
            relations,
            has_relations,
            hbar,
        }))
    }
}
