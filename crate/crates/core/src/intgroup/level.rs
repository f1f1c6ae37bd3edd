//! Level-subgroup structure of a soft int-group.
//!
//! The level subgroups are the distinct inclusion cuts; they are produced by
//! cutting at the intersection closure of the value class, which always
//! includes the e-set (cut at `f(e)`) and the whole group (cut at the meet of
//! all values). The image of an int-group need not be totally ordered, so the
//! report carries both the chain-form verdict (consecutive normality along
//! the chain, when one exists) and a poset-form verdict over every nested
//! pair.

use super::{intersection_closure, SoftIntGroup};
use crate::group::Subgroup;

#[derive(Debug, Clone)]
pub struct LevelReport {
    /// Distinct level subgroups, sorted by order then by members.
    pub subgroups: Vec<Subgroup>,
    /// Whether the level subgroups (equivalently the images) form a chain.
    pub is_chain: bool,
    /// Consecutive normality along the chain; `None` when there is no chain.
    pub chain_normal: Option<bool>,
    /// First consecutive pair `(i, i+1)` that fails, as indices into
    /// `subgroups`.
    pub chain_violation: Option<(usize, usize)>,
    /// Normality of every nested pair of level subgroups.
    pub poset_normal: bool,
    /// First nested pair `(i, j)` with `subgroups[i] ⊆ subgroups[j]` failing.
    pub poset_violation: Option<(usize, usize)>,
}

impl LevelReport {
    /// The chain-form verdict: defined only when the levels form a chain.
    pub fn soft_level_normal(&self) -> Option<bool> {
        self.chain_normal
    }
}

/// `h` normal inside `k`, both given as member lists of the same parent.
fn normal_within(h: &Subgroup, k: &Subgroup) -> bool {
    let g = h.parent();
    k.members()
        .iter()
        .all(|&x| h.members().iter().all(|&m| h.contains(g.conj(x, m))))
}

impl SoftIntGroup {
    pub fn level_structure(&self) -> LevelReport {
        let f = self.soft();
        let g = f.group();

        let mut cuts: Vec<Vec<usize>> = Vec::new();
        for alpha in intersection_closure(f) {
            let cut = f.inclusion_cut(alpha);
            if !cut.is_empty() && !cuts.contains(&cut) {
                cuts.push(cut);
            }
        }
        let mut subgroups: Vec<Subgroup> = cuts
            .into_iter()
            .map(|c| Subgroup::new(g, &c).expect("cuts of an int-group are subgroups"))
            .collect();
        subgroups.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));

        let contained = |a: &Subgroup, b: &Subgroup| a.members().iter().all(|&m| b.contains(m));
        let is_chain = subgroups.windows(2).all(|w| contained(&w[0], &w[1]));

        let mut poset_normal = true;
        let mut poset_violation = None;
        'outer: for i in 0..subgroups.len() {
            for j in 0..subgroups.len() {
                if i != j && contained(&subgroups[i], &subgroups[j])
                    && !normal_within(&subgroups[i], &subgroups[j])
                {
                    poset_normal = false;
                    poset_violation = Some((i, j));
                    break 'outer;
                }
            }
        }

        let (chain_normal, chain_violation) = if is_chain {
            let mut verdict = true;
            let mut violation = None;
            for i in 0..subgroups.len().saturating_sub(1) {
                if !normal_within(&subgroups[i], &subgroups[i + 1]) {
                    verdict = false;
                    violation = Some((i, i + 1));
                    break;
                }
            }
            (Some(verdict), violation)
        } else {
            (None, None)
        };

        LevelReport {
            subgroups,
            is_chain,
            chain_normal,
            chain_violation,
            poset_normal,
            poset_violation,
        }
    }
}
