//! Soft sets: total maps from a group's elements into the subsets of a
//! universe. Off-support elements carry the empty value, so storage is always
//! total over the group.

use super::{SoftError, USet, Universe};
use crate::group::FiniteGroup;

/// The distinct values a soft set takes, and whether they are totally
/// ordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageClass {
    pub sets: Vec<USet>,
    pub chain: bool,
}

/// A soft set over `U` with the group as parameter set.
#[derive(Clone, PartialEq, Eq)]
pub struct SoftSet {
    group: FiniteGroup,
    universe: Universe,
    values: Vec<u64>,
}

impl std::fmt::Debug for SoftSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SoftSet[")?;
        for (i, &v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", self.group.name(i), self.universe.render_mask(v))?;
        }
        write!(f, "]")
    }
}

impl SoftSet {
    /// All values empty.
    pub fn empty(group: &FiniteGroup, universe: &Universe) -> Self {
        SoftSet {
            group: group.clone(),
            universe: universe.clone(),
            values: vec![0; group.order()],
        }
    }

    /// All values the whole universe.
    pub fn universal(group: &FiniteGroup, universe: &Universe) -> Self {
        SoftSet {
            group: group.clone(),
            universe: universe.clone(),
            values: vec![universe.full_mask(); group.order()],
        }
    }

    /// The characteristic soft set of `members`: `U` on the set, empty off it.
    pub fn characteristic(
        group: &FiniteGroup,
        universe: &Universe,
        members: &[usize],
    ) -> Result<Self, SoftError> {
        Self::a_alpha(group, members, &USet::full(universe))
    }

    /// Value `alpha` on `members`, empty elsewhere.
    pub fn a_alpha(group: &FiniteGroup, members: &[usize], alpha: &USet) -> Result<Self, SoftError> {
        let mut values = vec![0u64; group.order()];
        for &m in members {
            if m >= group.order() {
                return Err(SoftError::InvalidElement { index: m, order: group.order() });
            }
            values[m] = alpha.mask();
        }
        Ok(SoftSet {
            group: group.clone(),
            universe: alpha.universe().clone(),
            values,
        })
    }

    /// The soft point: `alpha` at `w`, empty elsewhere.
    pub fn point(group: &FiniteGroup, w: usize, alpha: &USet) -> Result<Self, SoftError> {
        Self::a_alpha(group, &[w], alpha)
    }

    pub fn from_masks(group: &FiniteGroup, universe: &Universe, values: Vec<u64>) -> Result<Self, SoftError> {
        if values.len() != group.order() {
            return Err(SoftError::InvalidElement { index: values.len(), order: group.order() });
        }
        if values.iter().any(|&v| v & !universe.full_mask() != 0) {
            return Err(SoftError::BadUniverse("value has bits outside the universe".into()));
        }
        Ok(SoftSet { group: group.clone(), universe: universe.clone(), values })
    }

    pub fn from_values(group: &FiniteGroup, values: Vec<USet>) -> Result<Self, SoftError> {
        if values.is_empty() {
            return Err(SoftError::EmptyFamily);
        }
        let universe = values[0].universe().clone();
        if values.iter().any(|v| *v.universe() != universe) {
            return Err(SoftError::UniverseMismatch);
        }
        let masks = values.iter().map(USet::mask).collect();
        Self::from_masks(group, &universe, masks)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    #[inline]
    pub fn mask_at(&self, x: usize) -> u64 {
        self.values[x]
    }

    pub fn value(&self, x: usize) -> USet {
        USet::from_mask(&self.universe, self.values[x]).expect("stored masks are in range")
    }

    pub fn masks(&self) -> &[u64] {
        &self.values
    }

    pub(crate) fn check_compatible(&self, other: &SoftSet) -> Result<(), SoftError> {
        if self.group != other.group {
            return Err(SoftError::GroupMismatch);
        }
        if self.universe != other.universe {
            return Err(SoftError::UniverseMismatch);
        }
        Ok(())
    }

    /// Pointwise union.
    pub fn union(&self, other: &SoftSet) -> Result<SoftSet, SoftError> {
        self.check_compatible(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a | b).collect();
        Ok(SoftSet { group: self.group.clone(), universe: self.universe.clone(), values })
    }

    /// Pointwise intersection.
    pub fn intersection(&self, other: &SoftSet) -> Result<SoftSet, SoftError> {
        self.check_compatible(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a & b).collect();
        Ok(SoftSet { group: self.group.clone(), universe: self.universe.clone(), values })
    }

    /// `f(x) ⊆ g(x)` for every element.
    pub fn is_soft_subset(&self, other: &SoftSet) -> Result<bool, SoftError> {
        self.check_compatible(other)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a & !b == 0))
    }

    pub fn soft_equal(&self, other: &SoftSet) -> Result<bool, SoftError> {
        self.check_compatible(other)?;
        Ok(self.values == other.values)
    }

    /// Union of the values over `ks`; empty when `ks` is empty.
    pub fn image_of_set(&self, ks: &[usize]) -> USet {
        let mask = ks.iter().fold(0u64, |m, &k| m | self.values[k]);
        USet::from_mask(&self.universe, mask).expect("stored masks are in range")
    }

    /// Distinct values over the support, largest first, with a flag telling
    /// whether they are totally ordered by inclusion.
    pub fn image_class(&self) -> ImageClass {
        let mut masks: Vec<u64> = self.values.iter().copied().filter(|&v| v != 0).collect();
        self.finish_image_class(&mut masks)
    }

    /// Like [`image_class`](Self::image_class) but keeps the empty value when
    /// the support is proper.
    pub fn image_class_with_empty(&self) -> ImageClass {
        let mut masks: Vec<u64> = self.values.clone();
        self.finish_image_class(&mut masks)
    }

    fn finish_image_class(&self, masks: &mut Vec<u64>) -> ImageClass {
        masks.sort_unstable_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));
        masks.dedup();
        let chain = masks.windows(2).all(|w| w[1] & !w[0] == 0);
        let sets = masks
            .iter()
            .map(|&m| USet::from_mask(&self.universe, m).expect("in range"))
            .collect();
        ImageClass { sets, chain }
    }

    /// The distinct value masks over the whole group, including the empty
    /// value when present, sorted descending by cardinality then by mask.
    pub fn value_masks_distinct(&self) -> Vec<u64> {
        let mut masks: Vec<u64> = self.values.clone();
        masks.sort_unstable_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));
        masks.dedup();
        masks
    }

    /// The cut of the soft set at `alpha`.
    ///
    /// Non-strict: elements whose value contains `alpha`, except that at
    /// `alpha = {}` the cut is the support. Strict: elements whose value
    /// properly contains `alpha`.
    ///
    /// `alpha` must live over this soft set's universe.
    pub fn alpha_cut(&self, alpha: &USet, strict: bool) -> Vec<usize> {
        assert_eq!(*alpha.universe(), self.universe, "cut level over a different universe");
        let a = alpha.mask();
        if strict {
            (0..self.values.len())
                .filter(|&x| a & !self.values[x] == 0 && self.values[x] != a)
                .collect()
        } else if a == 0 {
            self.support()
        } else {
            self.inclusion_cut(a)
        }
    }

    /// The plain inclusion cut `{x : f(x) ⊇ alpha}` with no special case at
    /// the empty level; at `alpha = {}` this is the whole group.
    pub fn inclusion_cut(&self, alpha_mask: u64) -> Vec<usize> {
        (0..self.values.len()).filter(|&x| alpha_mask & !self.values[x] == 0).collect()
    }

    /// Elements with a nonempty value.
    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&x| self.values[x] != 0).collect()
    }

    /// Elements whose value equals the value at the identity.
    pub fn e_set(&self) -> Vec<usize> {
        let at_e = self.values[self.group.identity()];
        (0..self.values.len()).filter(|&x| self.values[x] == at_e).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4_f1() -> SoftSet {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let u = Universe::alphabetic(2).unwrap();
        SoftSet::from_masks(&z4, &u, vec![0b11, 0b01, 0b11, 0b01]).unwrap()
    }

    #[test]
    fn constructors() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let u1 = Universe::alphabetic(1).unwrap();
        let f = SoftSet::characteristic(&d3, &u1, &[0, 3]).unwrap();
        assert_eq!(f.mask_at(0), 1);
        assert_eq!(f.mask_at(3), 1);
        assert_eq!(f.mask_at(1), 0);

        let e = SoftSet::empty(&d3, &u1);
        assert!(e.masks().iter().all(|&m| m == 0));

        let z4 = FiniteGroup::cyclic(4).unwrap();
        let u = Universe::alphabetic(2).unwrap();
        let a = USet::from_labels(&u, &["a"]).unwrap();
        let p = SoftSet::point(&z4, 1, &a).unwrap();
        assert_eq!(p.mask_at(1), 0b01);
        assert_eq!(p.mask_at(0), 0);
        assert_eq!(p.mask_at(2), 0);

        assert!(SoftSet::point(&z4, 9, &a).is_err());
    }

    #[test]
    fn lattice_identities() {
        let f = z4_f1();
        let g = f.group().clone();
        let u = f.universe().clone();
        let empty = SoftSet::empty(&g, &u);
        let universal = SoftSet::universal(&g, &u);
        assert_eq!(f.union(&empty).unwrap(), f);
        assert_eq!(f.intersection(&universal).unwrap(), f);
        assert_eq!(f.intersection(&f).unwrap(), f);
        assert!(empty.is_soft_subset(&f).unwrap());
        assert!(f.is_soft_subset(&universal).unwrap());
        assert!(f.is_soft_subset(&f).unwrap());
        assert!(f.soft_equal(&f).unwrap());
    }

    #[test]
    fn characteristic_intersection() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let u = Universe::alphabetic(1).unwrap();
        let a = SoftSet::characteristic(&z4, &u, &[0, 2]).unwrap();
        let b = SoftSet::characteristic(&z4, &u, &[0, 1]).unwrap();
        let c = SoftSet::characteristic(&z4, &u, &[0]).unwrap();
        assert_eq!(a.intersection(&b).unwrap(), c);
    }

    #[test]
    fn mismatch_errors() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let u = Universe::alphabetic(2).unwrap();
        let f = SoftSet::universal(&z4, &u);
        let g = SoftSet::universal(&z2, &u);
        assert_eq!(f.union(&g), Err(SoftError::GroupMismatch));

        let u3 = Universe::alphabetic(3).unwrap();
        let h = SoftSet::universal(&z4, &u3);
        assert_eq!(f.is_soft_subset(&h), Err(SoftError::UniverseMismatch));
    }

    #[test]
    fn image_of_set() {
        let f = z4_f1();
        assert_eq!(f.image_of_set(&[]).mask(), 0);
        assert_eq!(f.image_of_set(&[1]).mask(), 0b01);
        assert_eq!(f.image_of_set(&[0, 1, 2, 3]).mask(), 0b11);
    }

    #[test]
    fn image_class() {
        let f = z4_f1();
        let ic = f.image_class();
        assert_eq!(ic.sets.len(), 2);
        assert!(ic.chain);
        assert_eq!(ic.sets[0].mask(), 0b11);
        assert_eq!(ic.sets[1].mask(), 0b01);

        let z4 = f.group().clone();
        let u = f.universe().clone();
        let universal = SoftSet::universal(&z4, &u);
        let ic = universal.image_class();
        assert_eq!(ic.sets.len(), 1);
        assert!(ic.chain);

        // Klein fixture: values {a,b}, {a}, {b}, {}: not a chain.
        let klein = FiniteGroup::klein();
        let f4 = SoftSet::from_masks(&klein, &u, vec![0b11, 0b01, 0b10, 0b00]).unwrap();
        let ic = f4.image_class();
        assert_eq!(ic.sets.len(), 3);
        assert!(!ic.chain);
        let with_empty = f4.image_class_with_empty();
        assert_eq!(with_empty.sets.len(), 4);
    }

    #[test]
    fn cuts_and_support() {
        let f = z4_f1();
        let u = f.universe().clone();
        let ab = USet::full(&u);
        assert_eq!(f.alpha_cut(&ab, false), vec![0, 2]);
        assert_eq!(f.alpha_cut(&USet::empty(&u), false), vec![0, 1, 2, 3]);
        assert_eq!(f.inclusion_cut(0), vec![0, 1, 2, 3]);
        let a = USet::from_labels(&u, &["a"]).unwrap();
        assert_eq!(f.alpha_cut(&a, true), vec![0, 2]);
        assert_eq!(f.alpha_cut(&ab, true), Vec::<usize>::new());

        let universal = SoftSet::universal(f.group(), &u);
        assert_eq!(universal.alpha_cut(&ab, false), vec![0, 1, 2, 3]);

        // With an empty value present, the support and the plain cut at {}
        // differ.
        let klein = FiniteGroup::klein();
        let f4 = SoftSet::from_masks(&klein, &u, vec![0b11, 0b01, 0b10, 0b00]).unwrap();
        assert_eq!(f4.support(), vec![0, 1, 2]);
        assert_eq!(f4.alpha_cut(&USet::empty(&u), false), vec![0, 1, 2]);
        assert_eq!(f4.inclusion_cut(0), vec![0, 1, 2, 3]);
    }

    #[test]
    fn e_sets() {
        let f = z4_f1();
        assert_eq!(f.e_set(), vec![0, 2]);

        let d3 = FiniteGroup::dihedral(3).unwrap();
        let u1 = Universe::alphabetic(1).unwrap();
        let f2 = SoftSet::characteristic(&d3, &u1, &[0, 3]).unwrap();
        assert_eq!(f2.e_set(), vec![0, 3]);

        let universal = SoftSet::universal(&d3, &u1);
        assert_eq!(universal.e_set(), vec![0, 1, 2, 3, 4, 5]);
    }
}
