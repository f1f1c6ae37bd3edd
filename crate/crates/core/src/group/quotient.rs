//! Quotients of a finite group by a normal subgroup.

use super::{FiniteGroup, GroupError, Homomorphism, Subgroup};

/// A coset partition with its induced group. Cosets are indexed by their
/// smallest member, in increasing order, so construction is deterministic.
#[derive(Clone)]
pub struct QuotientGroup {
    parent: FiniteGroup,
    normal_subgroup: Subgroup,
    group: FiniteGroup,
    cosets: Vec<Vec<usize>>,
    coset_of: Vec<usize>,
}

impl QuotientGroup {
    pub fn new(normal: &Subgroup) -> Result<Self, GroupError> {
        if let Some((conjugator, member)) = normal.normality_witness() {
            return Err(GroupError::NotNormal { conjugator, member });
        }
        let parent = normal.parent().clone();
        let n = parent.order();

        let mut cosets: Vec<Vec<usize>> = Vec::new();
        let mut coset_of = vec![usize::MAX; n];
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let coset = normal.left_coset(x);
            let idx = cosets.len();
            for &y in &coset {
                coset_of[y] = idx;
            }
            cosets.push(coset);
        }

        let k = cosets.len();
        let mut table = vec![vec![0usize; k]; k];
        for a in 0..k {
            for b in 0..k {
                table[a][b] = coset_of[parent.mul(cosets[a][0], cosets[b][0])];
            }
        }
        // The induced operation must not depend on representatives.
        for a in 0..k {
            for b in 0..k {
                for &x in &cosets[a] {
                    for &y in &cosets[b] {
                        debug_assert_eq!(coset_of[parent.mul(x, y)], table[a][b]);
                    }
                }
            }
        }
        let names = cosets.iter().map(|c| format!("[{}]", parent.name(c[0]))).collect();
        let group = FiniteGroup::from_table(table, Some(names))?;

        Ok(QuotientGroup { parent, normal_subgroup: normal.clone(), group, cosets, coset_of })
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn normal_subgroup(&self) -> &Subgroup {
        &self.normal_subgroup
    }

    /// The induced group on cosets.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.cosets.len()
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    pub fn is_abelian(&self) -> bool {
        self.group.is_abelian()
    }

    /// The natural projection onto the quotient.
    pub fn projection(&self) -> Homomorphism {
        Homomorphism::new(self.parent.clone(), self.group.clone(), self.coset_of.clone())
            .expect("projection preserves products")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z4_mod_two_element_subgroup() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let h = Subgroup::new(&z4, &[0, 2]).unwrap();
        let q = QuotientGroup::new(&h).unwrap();
        assert_eq!(q.order(), 2);
        assert!(q.is_abelian());
        assert_eq!(q.cosets(), &[vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let q = QuotientGroup::new(&Subgroup::whole(&d3)).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn d3_mod_rotations() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let rot = Subgroup::new(&d3, &[0, 1, 2]).unwrap();
        let q = QuotientGroup::new(&rot).unwrap();
        assert_eq!(q.order(), 2);
        assert!(q.is_abelian());
    }

    #[test]
    fn rejects_non_normal() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let v = d3.index_of("v").unwrap();
        let h = Subgroup::new(&d3, &[0, v]).unwrap();
        assert!(matches!(QuotientGroup::new(&h), Err(GroupError::NotNormal { .. })));
    }

    #[test]
    fn abelian_quotient_iff_commutators_inside() {
        // Exhaustive over every normal subgroup of every catalog group up to
        // order eight.
        for g in [
            FiniteGroup::cyclic(1).unwrap(),
            FiniteGroup::cyclic(2).unwrap(),
            FiniteGroup::cyclic(3).unwrap(),
            FiniteGroup::cyclic(4).unwrap(),
            FiniteGroup::cyclic(5).unwrap(),
            FiniteGroup::cyclic(6).unwrap(),
            FiniteGroup::klein(),
            FiniteGroup::dihedral(3).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::quaternion(),
        ] {
            let derived = super::super::commutator_subgroup(&g);
            for h in super::super::all_subgroups(&g).unwrap() {
                if !h.is_normal() {
                    continue;
                }
                let q = QuotientGroup::new(&h).unwrap();
                let contained = derived.members().iter().all(|&c| h.contains(c));
                assert_eq!(q.is_abelian(), contained);
            }
        }
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let h = Subgroup::new(&z6, &[0, 3]).unwrap();
        let q = QuotientGroup::new(&h).unwrap();
        let p = q.projection();
        assert!(p.is_surjective());
        assert_eq!(p.apply(3), p.apply(0));
    }
}
