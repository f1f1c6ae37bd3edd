//! Conjugates, the normalizer, and intersections of int-group families.

use super::{IntGroupError, SoftIntGroup};
use crate::group::Subgroup;
use crate::soft::SoftSet;

impl SoftIntGroup {
    /// The conjugate by `u`: `x -> f(u x u^-1)`. Conjugates of int-groups are
    /// int-groups, and composing conjugations multiplies the conjugators:
    /// conjugating by `u` then `v` equals conjugating by `u v`.
    pub fn conjugate(&self, u: usize) -> SoftIntGroup {
        let g = self.group();
        let values = (0..g.order()).map(|x| self.mask_at(g.conj(u, x))).collect();
        let soft = SoftSet::from_masks(g, self.universe(), values).expect("masks in range");
        SoftIntGroup::trusted(soft)
    }

    /// The normalizer `N(f) = {x : f(xy) = f(yx) for all y}`; always a
    /// subgroup, and the whole group exactly when `f` is normal.
    pub fn normalizer(&self) -> Subgroup {
        let g = self.group();
        let n = g.order();
        let members: Vec<usize> = (0..n)
            .filter(|&x| (0..n).all(|y| self.mask_at(g.mul(x, y)) == self.mask_at(g.mul(y, x))))
            .collect();
        Subgroup::new(g, &members).expect("normalizer is a subgroup")
    }

    /// The distinct conjugates of `f`, in order of first appearance as the
    /// conjugator runs over the group. Their number equals the index of the
    /// normalizer.
    pub fn distinct_conjugates(&self) -> Result<Vec<SoftIntGroup>, IntGroupError> {
        if self.support().is_empty() {
            return Err(IntGroupError::EmptySupport);
        }
        let mut out: Vec<SoftIntGroup> = Vec::new();
        for u in 0..self.group().order() {
            let c = self.conjugate(u);
            if !out.contains(&c) {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// The pointwise intersection of all conjugates: the largest normal soft
    /// int-group contained in `f`.
    pub fn largest_normal_contained(&self) -> SoftIntGroup {
        let g = self.group();
        let n = g.order();
        let mut values = vec![self.universe().full_mask(); n];
        for u in 0..n {
            for (x, v) in values.iter_mut().enumerate() {
                *v &= self.mask_at(g.conj(u, x));
            }
        }
        let soft = SoftSet::from_masks(g, self.universe(), values).expect("masks in range");
        SoftIntGroup::trusted(soft)
    }
}

/// Pointwise intersection of a nonempty family of int-groups over one group
/// and one universe. The result is an int-group, and normal when every input
/// is normal.
pub fn family_intersection(fs: &[SoftIntGroup]) -> Result<SoftIntGroup, IntGroupError> {
    let first = fs.first().ok_or(IntGroupError::EmptyFamily)?;
    let mut acc = first.soft().clone();
    for f in &fs[1..] {
        acc = acc.intersection(f.soft())?;
    }
    Ok(SoftIntGroup::trusted(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::intgroup::check_int_group;
    use crate::soft::{SoftSet, Universe};

    fn f2() -> SoftIntGroup {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let u = Universe::alphabetic(2).unwrap();
        check_int_group(SoftSet::characteristic(&d3, &u, &[0, 3]).unwrap()).unwrap()
    }

    fn f3() -> SoftIntGroup {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let u = Universe::alphabetic(2).unwrap();
        check_int_group(SoftSet::from_masks(&d3, &u, vec![0b11, 0b01, 0b01, 0b01, 0b01, 0b01]).unwrap())
            .unwrap()
    }

    #[test]
    fn conjugation_basics() {
        let f = f2();
        assert_eq!(f.conjugate(f.group().identity()), f);
        let u = f.group().index_of("u").unwrap();
        assert_ne!(f.conjugate(u), f);

        let g = f3();
        for x in 0..6 {
            assert_eq!(g.conjugate(x), g);
        }
    }

    #[test]
    fn conjugation_composes() {
        let f = f2();
        let g = f.group().clone();
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(f.conjugate(u).conjugate(v), f.conjugate(g.mul(u, v)));
            }
        }
    }

    #[test]
    fn normalizers() {
        assert_eq!(f3().normalizer().order(), 6);
        let f = f2();
        let n = f.normalizer();
        assert_eq!(n.members(), &[0, 3]); // {e, v}
        assert_eq!(n.index(), 3);

        // Over an Abelian group the normalizer is everything.
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let u = Universe::alphabetic(2).unwrap();
        let f1 = check_int_group(SoftSet::from_masks(&z4, &u, vec![0b11, 0b01, 0b11, 0b01]).unwrap())
            .unwrap();
        assert_eq!(f1.normalizer().order(), 4);
    }

    #[test]
    fn distinct_conjugate_counts() {
        let f = f2();
        let conjugates = f.distinct_conjugates().unwrap();
        assert_eq!(conjugates.len(), 3);
        assert_eq!(conjugates.len() * f.normalizer().order(), f.group().order());

        assert_eq!(f3().distinct_conjugates().unwrap().len(), 1);

        let d3 = FiniteGroup::dihedral(3).unwrap();
        let u = Universe::alphabetic(2).unwrap();
        let empty = check_int_group(SoftSet::empty(&d3, &u)).unwrap();
        assert_eq!(empty.distinct_conjugates(), Err(IntGroupError::EmptySupport));
    }

    #[test]
    fn largest_normal_inside_f2_is_characteristic_of_identity() {
        let f = f2();
        let core = f.largest_normal_contained();
        assert!(core.is_normal());
        assert!(core.soft().is_soft_subset(f.soft()).unwrap());
        let expect =
            SoftSet::characteristic(f.group(), f.universe(), &[f.group().identity()]).unwrap();
        assert_eq!(core.soft(), &expect);

        // Normal int-groups are fixed by all conjugations.
        let g = f3();
        assert_eq!(g.largest_normal_contained(), g);
    }

    #[test]
    fn family_intersections() {
        let f = f2();
        assert_eq!(family_intersection(std::slice::from_ref(&f)).unwrap(), f);

        let universal =
            check_int_group(SoftSet::universal(f.group(), f.universe())).unwrap();
        assert_eq!(family_intersection(&[f.clone(), universal]).unwrap(), f);

        // Intersecting all three conjugates of F2 recovers the largest
        // normal int-group inside it.
        let conjugates = f.distinct_conjugates().unwrap();
        let meet = family_intersection(&conjugates).unwrap();
        assert_eq!(meet, f.largest_normal_contained());

        assert_eq!(family_intersection(&[]), Err(IntGroupError::EmptyFamily));
    }
}
