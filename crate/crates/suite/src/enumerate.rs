//! Exhaustive enumeration of soft sets over a group and universe.

use softint_core::{check_int_group, FiniteGroup, SoftIntGroup, SoftSet, Universe};
use std::fmt;

/// Default cap on how many soft sets one enumeration may produce.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    BudgetExceeded { required: u128, budget: u64 },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::BudgetExceeded { required, budget } => {
                write!(f, "enumeration needs {required} soft sets, budget is {budget}")
            }
        }
    }
}

impl std::error::Error for EnumerateError {}

/// `(2^m)^n`: the number of total maps from the group into the power set.
pub fn soft_set_count(group: &FiniteGroup, universe: &Universe) -> u128 {
    let levels = 1u128 << universe.size();
    let mut total = 1u128;
    for _ in 0..group.order() {
        total = total.saturating_mul(levels);
    }
    total
}

/// Streams every total map `G -> P(U)` in lexicographic order of the packed
/// value vector (the value at element 0 is the most significant digit).
pub struct SoftSetIter {
    group: FiniteGroup,
    universe: Universe,
    digits: Vec<u64>,
    levels: u64,
    done: bool,
    started: bool,
}

impl Iterator for SoftSetIter {
    type Item = SoftSet;

    fn next(&mut self) -> Option<SoftSet> {
        if self.done {
            return None;
        }
        if self.started {
            // odometer increment, last digit fastest
            let mut i = self.digits.len();
            loop {
                if i == 0 {
                    self.done = true;
                    return None;
                }
                i -= 1;
                self.digits[i] += 1;
                if self.digits[i] < self.levels {
                    break;
                }
                self.digits[i] = 0;
            }
        }
        self.started = true;
        Some(
            SoftSet::from_masks(&self.group, &self.universe, self.digits.clone())
                .expect("digits stay below 2^m"),
        )
    }
}

pub fn enumerate_soft_sets(
    group: &FiniteGroup,
    universe: &Universe,
    budget: u64,
) -> Result<SoftSetIter, EnumerateError> {
    let required = soft_set_count(group, universe);
    if required > budget as u128 {
        return Err(EnumerateError::BudgetExceeded { required, budget });
    }
    Ok(SoftSetIter {
        group: group.clone(),
        universe: universe.clone(),
        digits: vec![0; group.order()],
        levels: 1u64 << universe.size(),
        done: false,
        started: false,
    })
}

/// The valid int-groups among [`enumerate_soft_sets`], in the same order.
pub fn enumerate_int_groups(
    group: &FiniteGroup,
    universe: &Universe,
    budget: u64,
) -> Result<impl Iterator<Item = SoftIntGroup>, EnumerateError> {
    Ok(enumerate_soft_sets(group, universe, budget)?.filter_map(|f| check_int_group(f).ok()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_arithmetic() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let u1 = Universe::alphabetic(1).unwrap();
        assert_eq!(soft_set_count(&z2, &u1), 4);
        assert_eq!(enumerate_soft_sets(&z2, &u1, DEFAULT_BUDGET).unwrap().count(), 4);

        let z4 = FiniteGroup::cyclic(4).unwrap();
        let u2 = Universe::alphabetic(2).unwrap();
        assert_eq!(soft_set_count(&z4, &u2), 256);
        assert_eq!(enumerate_soft_sets(&z4, &u2, DEFAULT_BUDGET).unwrap().count(), 256);

        let q8 = FiniteGroup::quaternion();
        assert_eq!(soft_set_count(&q8, &u1), 256);
        assert_eq!(enumerate_soft_sets(&q8, &u1, DEFAULT_BUDGET).unwrap().count(), 256);
    }

    #[test]
    fn order_is_lexicographic_in_the_packed_vector() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let u1 = Universe::alphabetic(1).unwrap();
        let all: Vec<Vec<u64>> =
            enumerate_soft_sets(&z2, &u1, DEFAULT_BUDGET).unwrap().map(|f| f.masks().to_vec()).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn budget_is_enforced() {
        let q8 = FiniteGroup::quaternion();
        let u2 = Universe::alphabetic(2).unwrap();
        // 4^8 = 65536
        assert!(enumerate_soft_sets(&q8, &u2, 65535).is_err());
        assert!(enumerate_soft_sets(&q8, &u2, 65536).is_ok());
    }

    #[test]
    fn z2_has_exactly_three_int_groups_over_one_point() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let u1 = Universe::alphabetic(1).unwrap();
        let igs: Vec<Vec<u64>> = enumerate_int_groups(&z2, &u1, DEFAULT_BUDGET)
            .unwrap()
            .map(|f| f.soft().masks().to_vec())
            .collect();
        assert_eq!(igs, vec![vec![0, 0], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn trivial_group_accepts_every_map() {
        let z1 = FiniteGroup::cyclic(1).unwrap();
        let u2 = Universe::alphabetic(2).unwrap();
        assert_eq!(enumerate_int_groups(&z1, &u2, DEFAULT_BUDGET).unwrap().count(), 4);
    }

    #[test]
    fn d3_int_groups_include_all_subgroup_characteristics() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let u1 = Universe::alphabetic(1).unwrap();
        let igs: Vec<SoftIntGroup> =
            enumerate_int_groups(&d3, &u1, DEFAULT_BUDGET).unwrap().collect();
        for sub in softint_core::group::all_subgroups(&d3).unwrap() {
            let ch = SoftSet::characteristic(&d3, &u1, sub.members()).unwrap();
            assert!(igs.iter().any(|f| f.soft() == &ch));
        }
    }

    #[test]
    fn filter_count_matches_direct_validation() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let u2 = Universe::alphabetic(2).unwrap();
        let by_filter = enumerate_int_groups(&d3, &u2, DEFAULT_BUDGET).unwrap().count();
        let by_scan = enumerate_soft_sets(&d3, &u2, DEFAULT_BUDGET)
            .unwrap()
            .filter(|f| softint_core::intgroup::int_group_violation(f).is_none())
            .count();
        assert_eq!(by_filter, by_scan);
        // Each universe point contributes an independent cut, which must be
        // one of the 6 subgroups or empty: (6 + 1)^2 int-groups.
        assert_eq!(by_filter, 49);
    }
}
