//! Cached per-(group, universe) data shared by the checkers: the subgroup
//! list and, when the enumeration fits the budget, the full int-group roster.

use crate::enumerate::{enumerate_int_groups, soft_set_count, DEFAULT_BUDGET};
use softint_core::{FiniteGroup, SoftIntGroup, Subgroup, Universe};
use std::collections::HashMap;
use std::rc::Rc;

/// Cap on items any single record may quantify over.
pub const ITEM_BUDGET: u64 = DEFAULT_BUDGET;

/// Cap on estimated word operations per record; scopes that would exceed it
/// fall back to seeded sampling with the effective mode recorded.
pub const WORK_BUDGET: u128 = 1 << 28;

/// True when a scope of `items`, costing roughly `factor` operations each,
/// may run exhaustively.
pub fn within_budget(items: u128, factor: u64) -> bool {
    items <= ITEM_BUDGET as u128 && items.saturating_mul(factor as u128) <= WORK_BUDGET
}

pub struct SweepCtx {
    pub group: FiniteGroup,
    pub universe: Universe,
    /// All subgroups; `None` when the group outgrows the enumeration bound.
    pub subgroups: Option<Vec<Subgroup>>,
    /// Every int-group over (G, U); `None` when the scan outgrows the budget.
    pub int_groups: Option<Vec<SoftIntGroup>>,
    /// The normal ones among `int_groups`.
    pub normals: Option<Vec<SoftIntGroup>>,
}

#[derive(Default)]
pub struct CtxCache {
    map: HashMap<(u64, usize), Rc<SweepCtx>>,
}

impl CtxCache {
    pub fn new() -> Self {
        CtxCache::default()
    }

    pub fn ctx(&mut self, group: &FiniteGroup, universe: &Universe) -> Rc<SweepCtx> {
        let key = (group.table_digest(), universe.size());
        if let Some(ctx) = self.map.get(&key) {
            return Rc::clone(ctx);
        }
        let subgroups = softint_core::group::all_subgroups(group).ok();
        let n = group.order() as u64;
        let scan_ok = within_budget(soft_set_count(group, universe), 10 * n * n);
        let int_groups = if scan_ok {
            Some(
                enumerate_int_groups(group, universe, ITEM_BUDGET)
                    .expect("within budget")
                    .collect::<Vec<_>>(),
            )
        } else {
            None
        };
        let normals = int_groups
            .as_ref()
            .map(|igs| igs.iter().filter(|f| f.is_normal()).cloned().collect());
        let ctx = Rc::new(SweepCtx {
            group: group.clone(),
            universe: universe.clone(),
            subgroups,
            int_groups,
            normals,
        });
        self.map.insert(key, Rc::clone(&ctx));
        ctx
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_is_cached_and_counts_are_right() {
        let mut cache = CtxCache::new();
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let u = Universe::alphabetic(2).unwrap();
        let ctx = cache.ctx(&d3, &u);
        assert_eq!(ctx.subgroups.as_ref().unwrap().len(), 6);
        // per universe point the cut is one of the 6 subgroups or empty
        assert_eq!(ctx.int_groups.as_ref().unwrap().len(), 49);
        // and normality restricts the cut to the 3 normal subgroups or empty
        assert_eq!(ctx.normals.as_ref().unwrap().len(), 16);
        let again = cache.ctx(&d3, &u);
        assert!(Rc::ptr_eq(&ctx, &again));
    }

    #[test]
    fn oversized_scans_are_skipped() {
        let mut cache = CtxCache::new();
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let u = Universe::alphabetic(2).unwrap();
        let ctx = cache.ctx(&s4, &u);
        assert!(ctx.subgroups.is_some());
        assert!(ctx.int_groups.is_none());
    }
}
