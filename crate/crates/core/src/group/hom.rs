//! Group homomorphisms, validated at construction.

use super::{FiniteGroup, GroupError, Subgroup};

/// A product-preserving map between two finite groups.
#[derive(Clone, PartialEq)]
pub struct Homomorphism {
    domain: FiniteGroup,
    codomain: FiniteGroup,
    map: Vec<usize>,
}

impl std::fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Homomorphism{:?}", self.map)
    }
}

impl Homomorphism {
    /// Checks `map[x*y] = map[x]*map[y]` for all pairs before accepting.
    pub fn new(domain: FiniteGroup, codomain: FiniteGroup, map: Vec<usize>) -> Result<Self, GroupError> {
        if map.len() != domain.order() {
            return Err(GroupError::InvalidParameter(format!(
                "map has {} entries for a domain of order {}",
                map.len(),
                domain.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= codomain.order()) {
            return Err(GroupError::InvalidParameter(format!(
                "image index {bad} out of range for codomain of order {}",
                codomain.order()
            )));
        }
        for x in 0..domain.order() {
            for y in 0..domain.order() {
                if map[domain.mul(x, y)] != codomain.mul(map[x], map[y]) {
                    return Err(GroupError::NotAHomomorphism { x, y });
                }
            }
        }
        Ok(Homomorphism { domain, codomain, map })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        Homomorphism {
            domain: group.clone(),
            codomain: group.clone(),
            map: (0..group.order()).collect(),
        }
    }

    /// Reduction `Z_n -> Z_k`, `x -> x mod k`. Requires `k | n`.
    pub fn cyclic_mod(n: usize, k: usize) -> Result<Self, GroupError> {
        if n == 0 || k == 0 || !n.is_multiple_of(k) {
            return Err(GroupError::InvalidParameter(format!(
                "Z_{n} -> Z_{k} requires k dividing n"
            )));
        }
        let domain = FiniteGroup::cyclic(n)?;
        let codomain = FiniteGroup::cyclic(k)?;
        let map = (0..n).map(|x| x % k).collect();
        Self::new(domain, codomain, map)
    }

    /// The sign map `D_n -> Z_2`: rotations to 0, reflections to 1.
    pub fn dihedral_sign(n: usize) -> Result<Self, GroupError> {
        let domain = FiniteGroup::dihedral(n)?;
        let codomain = FiniteGroup::cyclic(2)?;
        let map = (0..2 * n).map(|x| usize::from(x >= n)).collect();
        Self::new(domain, codomain, map)
    }

    /// The inclusion of a subgroup, from the subgroup viewed as a group of
    /// its own into the parent.
    pub fn inclusion(subgroup: &Subgroup) -> Self {
        let (h, embed) = subgroup.to_group();
        Homomorphism {
            domain: h,
            codomain: subgroup.parent().clone(),
            map: embed,
        }
    }

    pub fn domain(&self) -> &FiniteGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain.order()];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// All domain elements mapped onto `y`.
    pub fn fiber(&self, y: usize) -> Vec<usize> {
        (0..self.domain.order()).filter(|&x| self.map[x] == y).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_map() {
        let h = Homomorphism::cyclic_mod(4, 2).unwrap();
        assert_eq!(h.map(), &[0, 1, 0, 1]);
        assert!(h.is_surjective());
        assert_eq!(h.fiber(0), vec![0, 2]);
        assert!(Homomorphism::cyclic_mod(4, 3).is_err());
    }

    #[test]
    fn sign_map() {
        let h = Homomorphism::dihedral_sign(3).unwrap();
        assert_eq!(h.map(), &[0, 0, 0, 1, 1, 1]);
        assert!(h.is_surjective());
    }

    #[test]
    fn rejects_non_homomorphism() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let err = Homomorphism::new(z4, z2, vec![0, 1, 1, 0]).unwrap_err();
        assert!(matches!(err, GroupError::NotAHomomorphism { .. }));
    }

    #[test]
    fn inclusion_lands_in_parent() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let rot = Subgroup::new(&d3, &[0, 1, 2]).unwrap();
        let inc = Homomorphism::inclusion(&rot);
        assert_eq!(inc.domain().order(), 3);
        assert_eq!(inc.codomain().order(), 6);
        assert!(!inc.is_surjective());
        assert_eq!(inc.fiber(5), Vec::<usize>::new());
    }

    #[test]
    fn identity_hom() {
        let q8 = FiniteGroup::quaternion();
        let id = Homomorphism::identity(&q8);
        assert!(id.is_surjective());
        for x in 0..8 {
            assert_eq!(id.apply(x), x);
        }
    }
}
