//! Soft cosets of an int-group.

use super::SoftIntGroup;
use crate::soft::{SoftSet, USet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The soft coset of `f` with respect to a representative: as a value
/// function, `x -> f(a^-1 x)` on the left and `x -> f(x a^-1)` on the right.
/// Equality is pointwise equality of the value functions, never equality of
/// representatives.
#[derive(Clone)]
pub struct SoftCoset {
    base: SoftIntGroup,
    representative: usize,
    side: Side,
}

impl SoftCoset {
    pub fn base(&self) -> &SoftIntGroup {
        &self.base
    }

    pub fn representative(&self) -> usize {
        self.representative
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn mask_at(&self, x: usize) -> u64 {
        let g = self.base.group();
        let a_inv = g.inv(self.representative);
        match self.side {
            Side::Left => self.base.mask_at(g.mul(a_inv, x)),
            Side::Right => self.base.mask_at(g.mul(x, a_inv)),
        }
    }

    pub fn value(&self, x: usize) -> USet {
        USet::from_mask(self.base.universe(), self.mask_at(x)).expect("mask in range")
    }

    /// The coset materialized as a plain soft set.
    pub fn as_soft_set(&self) -> SoftSet {
        let g = self.base.group();
        let values = (0..g.order()).map(|x| self.mask_at(x)).collect();
        SoftSet::from_masks(g, self.base.universe(), values).expect("masks in range")
    }
}

impl PartialEq for SoftCoset {
    fn eq(&self, other: &Self) -> bool {
        self.as_soft_set() == other.as_soft_set()
    }
}

impl Eq for SoftCoset {}

impl std::fmt::Debug for SoftCoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let side = match self.side {
            Side::Left => "left",
            Side::Right => "right",
        };
        write!(f, "SoftCoset({side}, rep {}, {:?})", self.representative, self.as_soft_set())
    }
}

impl SoftIntGroup {
    pub fn coset(&self, a: usize, side: Side) -> SoftCoset {
        SoftCoset { base: self.clone(), representative: a, side }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FiniteGroup, Subgroup};
    use crate::intgroup::check_int_group;
    use crate::soft::Universe;

    fn f1() -> SoftIntGroup {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let u = Universe::alphabetic(2).unwrap();
        check_int_group(SoftSet::from_masks(&z4, &u, vec![0b11, 0b01, 0b11, 0b01]).unwrap()).unwrap()
    }

    #[test]
    fn coset_values_unfold_the_definition() {
        let f = f1();
        let c = f.coset(1, Side::Left);
        // (1·f)(0) = f(1^-1 · 0) = f(3) = {a}
        assert_eq!(c.mask_at(0), 0b01);
        assert_eq!(c.mask_at(1), f.mask_at(0));
    }

    #[test]
    fn identity_coset_is_f() {
        let f = f1();
        let e = f.group().identity();
        assert_eq!(f.coset(e, Side::Left).as_soft_set(), *f.soft());
        assert_eq!(f.coset(e, Side::Right).as_soft_set(), *f.soft());
    }

    #[test]
    fn coset_of_characteristic_is_characteristic_of_coset() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let u = Universe::alphabetic(2).unwrap();
        let h = Subgroup::new(&d3, &[0, 1, 2]).unwrap();
        let f = check_int_group(SoftSet::characteristic(&d3, &u, h.members()).unwrap()).unwrap();
        for a in 0..6 {
            let coset = f.coset(a, Side::Left).as_soft_set();
            let expect = SoftSet::characteristic(&d3, &u, &h.left_coset(a)).unwrap();
            assert_eq!(coset, expect);
        }
    }

    #[test]
    fn left_equals_right_for_normal() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let u = Universe::alphabetic(2).unwrap();
        let f3 = check_int_group(
            SoftSet::from_masks(&d3, &u, vec![0b11, 0b01, 0b01, 0b01, 0b01, 0b01]).unwrap(),
        )
        .unwrap();
        assert!(f3.is_normal());
        for a in 0..6 {
            assert_eq!(f3.coset(a, Side::Left), f3.coset(a, Side::Right));
            // (af)(ga) = (af)(ag) = f(g)
            let c = f3.coset(a, Side::Left);
            for g in 0..6 {
                let d3g = f3.group();
                assert_eq!(c.mask_at(d3g.mul(g, a)), f3.mask_at(g));
                assert_eq!(c.mask_at(d3g.mul(a, g)), f3.mask_at(g));
            }
        }
    }

    #[test]
    fn coset_equality_matches_e_set_cosets() {
        let f = f1();
        let e_sub = f.e_subgroup();
        for a in 0..4 {
            for b in 0..4 {
                let same_value = f.coset(a, Side::Left) == f.coset(b, Side::Left);
                let same_coset = e_sub.left_coset(a) == e_sub.left_coset(b);
                assert_eq!(same_value, same_coset);
            }
        }
    }
}
