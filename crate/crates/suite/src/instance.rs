//! Concrete check instances: a group, a universe, a quantification mode, and
//! optionally pinned soft sets or a homomorphism. An instance is reproducible
//! byte-for-byte from its digest.

use softint_core::{FiniteGroup, Homomorphism, SoftSet, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Quantify over everything, falling back to seeded sampling per record
    /// when a scope outgrows the budget (the effective mode is recorded).
    Exhaustive,
    /// Seeded sampling everywhere.
    Random { samples: u32, seed: u64 },
}

impl Mode {
    pub fn describe(&self) -> String {
        match self {
            Mode::Exhaustive => "exhaustive".into(),
            Mode::Random { samples, seed } => format!("random:{samples}:{seed}"),
        }
    }
}

/// A named homomorphism, so reports stay readable.
#[derive(Debug, Clone)]
pub struct NamedHom {
    pub spec: String,
    pub hom: Homomorphism,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub group_spec: String,
    pub group: FiniteGroup,
    pub universe: Universe,
    pub mode: Mode,
    /// When nonempty, checkers quantify over exactly these soft sets.
    pub pinned: Vec<(String, SoftSet)>,
    pub hom: Option<NamedHom>,
}

impl Instance {
    pub fn sweep(spec: &str, group: FiniteGroup, universe: Universe, mode: Mode) -> Self {
        Instance {
            group_spec: spec.to_string(),
            group,
            universe,
            mode,
            pinned: Vec::new(),
            hom: None,
        }
    }

    pub fn with_hom(mut self, spec: &str, hom: Homomorphism) -> Self {
        self.hom = Some(NamedHom { spec: spec.to_string(), hom });
        self
    }

    pub fn with_pinned(mut self, name: &str, soft: SoftSet) -> Self {
        self.pinned.push((name.to_string(), soft));
        self
    }

    /// Canonical serialized form; equal digests mean equal instances.
    pub fn digest(&self) -> String {
        let mut out = format!(
            "g={};u={};mode={}",
            self.group_spec,
            self.universe.size(),
            self.mode.describe()
        );
        for (name, soft) in &self.pinned {
            let masks: Vec<String> = soft.masks().iter().map(|m| m.to_string()).collect();
            out.push_str(&format!(";{name}=[{}]", masks.join(",")));
        }
        if let Some(h) = &self.hom {
            out.push_str(&format!(";hom={}", h.spec));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digests_are_canonical() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let u = Universe::alphabetic(2).unwrap();
        let a = Instance::sweep("cyclic:4", z4.clone(), u.clone(), Mode::Exhaustive);
        assert_eq!(a.digest(), "g=cyclic:4;u=2;mode=exhaustive");

        let b = Instance::sweep("cyclic:4", z4.clone(), u.clone(), Mode::Random { samples: 100, seed: 1 });
        assert_eq!(b.digest(), "g=cyclic:4;u=2;mode=random:100:1");

        let f = SoftSet::from_masks(&z4, &u, vec![3, 1, 3, 1]).unwrap();
        let c = a.clone().with_pinned("f1", f);
        assert_eq!(c.digest(), "g=cyclic:4;u=2;mode=exhaustive;f1=[3,1,3,1]");
    }
}
