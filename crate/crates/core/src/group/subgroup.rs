//! Subgroups as sorted member sets, plus full subgroup enumeration.

use super::{FiniteGroup, GroupError, SUBGROUP_ENUMERATION_BOUND};

/// A validated subgroup: contains the identity, closed under the table and
/// under inverses. Members are kept sorted.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup {
    group: FiniteGroup,
    members: Vec<usize>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

impl Subgroup {
    pub fn new(group: &FiniteGroup, members: &[usize]) -> Result<Self, GroupError> {
        let n = group.order();
        let mut sorted: Vec<usize> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&m| m >= n) {
            return Err(GroupError::NotASubgroup {
                detail: "member index out of range",
                witness: vec![bad],
            });
        }
        if !sorted.contains(&group.identity()) {
            return Err(GroupError::NotASubgroup {
                detail: "identity missing",
                witness: vec![],
            });
        }
        for &a in &sorted {
            for &b in &sorted {
                let ab = group.mul(a, b);
                if sorted.binary_search(&ab).is_err() {
                    return Err(GroupError::NotASubgroup {
                        detail: "not closed under the operation",
                        witness: vec![a, b],
                    });
                }
            }
            if sorted.binary_search(&group.inv(a)).is_err() {
                return Err(GroupError::NotASubgroup {
                    detail: "not closed under inverses",
                    witness: vec![a],
                });
            }
        }
        Ok(Subgroup { group: group.clone(), members: sorted })
    }

    /// The subgroup generated by `gens` (closure of `gens` and the identity).
    pub fn generated(group: &FiniteGroup, gens: &[usize]) -> Self {
        let mut seed = gens.to_vec();
        seed.push(group.identity());
        Subgroup { group: group.clone(), members: closure_members(group, &seed) }
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Subgroup { group: group.clone(), members: vec![group.identity()] }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup { group: group.clone(), members: (0..group.order()).collect() }
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.group.order()
    }

    /// Index `[G : H]`.
    pub fn index(&self) -> usize {
        self.group.order() / self.members.len()
    }

    /// True iff `x h x^-1` stays inside for every `x` in the parent.
    pub fn is_normal(&self) -> bool {
        self.normality_witness().is_none()
    }

    /// First `(conjugator, member)` pair that escapes, scanning in index order.
    pub fn normality_witness(&self) -> Option<(usize, usize)> {
        for x in 0..self.group.order() {
            for &h in &self.members {
                if !self.contains(self.group.conj(x, h)) {
                    return Some((x, h));
                }
            }
        }
        None
    }

    /// The left coset `aH`, sorted.
    pub fn left_coset(&self, a: usize) -> Vec<usize> {
        let mut c: Vec<usize> = self.members.iter().map(|&h| self.group.mul(a, h)).collect();
        c.sort_unstable();
        c
    }

    /// The right coset `Ha`, sorted.
    pub fn right_coset(&self, a: usize) -> Vec<usize> {
        let mut c: Vec<usize> = self.members.iter().map(|&h| self.group.mul(h, a)).collect();
        c.sort_unstable();
        c
    }

    /// This subgroup as a group in its own right, together with the map from
    /// its element indices back to parent indices (the inclusion).
    pub fn to_group(&self) -> (FiniteGroup, Vec<usize>) {
        let k = self.members.len();
        let local = |x: usize| self.members.binary_search(&x).expect("closed");
        let mut table = vec![vec![0usize; k]; k];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = local(self.group.mul(self.members[i], self.members[j]));
            }
        }
        let names = self.members.iter().map(|&m| self.group.name(m).to_string()).collect();
        let g = FiniteGroup::from_table(table, Some(names)).expect("subgroup is a group");
        (g, self.members.clone())
    }

}

fn mask_to_members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask & (1u64 << i) != 0).collect()
}

/// Closure of a set of elements under the group operation, by worklist.
/// Works at any group order.
fn closure_members(group: &FiniteGroup, seed: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; group.order()];
    let mut members: Vec<usize> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();
    for &s in seed {
        if !inside[s] {
            inside[s] = true;
            members.push(s);
            queue.push(s);
        }
    }
    while let Some(a) = queue.pop() {
        for i in 0..members.len() {
            let b = members[i];
            for p in [group.mul(a, b), group.mul(b, a)] {
                if !inside[p] {
                    inside[p] = true;
                    members.push(p);
                    queue.push(p);
                }
            }
        }
    }
    members.sort_unstable();
    members
}

/// Closure of a member mask under the group operation; orders up to 64.
fn closure_mask(group: &FiniteGroup, mut mask: u64) -> u64 {
    let n = group.order();
    loop {
        let mut grew = false;
        for a in 0..n {
            if mask & (1u64 << a) == 0 {
                continue;
            }
            for b in 0..n {
                if mask & (1u64 << b) == 0 {
                    continue;
                }
                let ab = group.mul(a, b);
                if mask & (1u64 << ab) == 0 {
                    mask |= 1u64 << ab;
                    grew = true;
                }
            }
        }
        if !grew {
            return mask;
        }
    }
}

fn is_closed_mask(group: &FiniteGroup, mask: u64) -> bool {
    let n = group.order();
    for a in 0..n {
        if mask & (1u64 << a) == 0 {
            continue;
        }
        for b in 0..n {
            if mask & (1u64 << b) == 0 {
                continue;
            }
            if mask & (1u64 << group.mul(a, b)) == 0 {
                return false;
            }
        }
    }
    true
}

/// All subgroups, with the default order bound of 24.
pub fn all_subgroups(group: &FiniteGroup) -> Result<Vec<Subgroup>, GroupError> {
    all_subgroups_bounded(group, SUBGROUP_ENUMERATION_BOUND)
}

/// All subgroups of `group`, deduplicated and sorted by order then by member
/// list. Scans all subsets when the order allows it, otherwise enumerates by
/// repeatedly extending generated subgroups. Member sets are machine-word
/// masks, so the bound is capped at 64 regardless of the argument.
pub fn all_subgroups_bounded(group: &FiniteGroup, bound: usize) -> Result<Vec<Subgroup>, GroupError> {
    let n = group.order();
    if n > bound.min(64) {
        return Err(GroupError::BoundExceeded { order: n, bound: bound.min(64) });
    }
    let mut masks: Vec<u64> = Vec::new();
    if n <= 12 {
        let e = 1u64 << group.identity();
        for mask in 0..(1u64 << n) {
            if mask & e != 0 && is_closed_mask(group, mask) {
                masks.push(mask);
            }
        }
    } else {
        // Start from the trivial subgroup and extend each known subgroup by
        // one outside element until nothing new appears.
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = vec![1u64 << group.identity()];
        seen.insert(queue[0]);
        while let Some(mask) = queue.pop() {
            for x in 0..n {
                if mask & (1u64 << x) != 0 {
                    continue;
                }
                let bigger = closure_mask(group, mask | (1u64 << x));
                if seen.insert(bigger) {
                    queue.push(bigger);
                }
            }
        }
        masks.extend(seen);
    }
    let mut subgroups: Vec<Subgroup> = masks
        .into_iter()
        .map(|m| Subgroup { group: group.clone(), members: mask_to_members(m) })
        .collect();
    subgroups.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    Ok(subgroups)
}

/// The commutator subgroup: closure of the set of all commutators `[x, y]`.
pub fn commutator_subgroup(group: &FiniteGroup) -> Subgroup {
    let n = group.order();
    let mut seed = vec![group.identity()];
    for x in 0..n {
        for y in 0..n {
            seed.push(group.commutator(x, y));
        }
    }
    Subgroup { group: group.clone(), members: closure_members(group, &seed) }
}

/// True iff every subgroup is normal.
pub fn is_dedekind(group: &FiniteGroup) -> Result<bool, GroupError> {
    Ok(all_subgroups(group)?.iter().all(Subgroup::is_normal))
}
