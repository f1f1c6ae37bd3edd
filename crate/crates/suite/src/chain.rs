//! Seeded construction of int-groups from subgroup chains.
//!
//! Pick a chain `H_0 ⊆ ... ⊆ H_k = G` and a descending value chain
//! `a_0 ⊇ ... ⊇ a_k`, then let `f(x) = a_i` for the first `i` with
//! `x ∈ H_i`. Every cut of such an `f` is one of the `H_i`, so the result
//! always validates; when every `H_i` is normal, so is `f`.

use crate::rng::SplitMix64;
use softint_core::{check_int_group, FiniteGroup, SoftIntGroup, SoftSet, Subgroup, Universe};
use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

type SubgroupCache = HashMap<u64, (FiniteGroup, Rc<Vec<Subgroup>>)>;

thread_local! {
    static SUBGROUPS: RefCell<SubgroupCache> = RefCell::new(HashMap::new());
}

// Seeded generation draws thousands of chains per group; the subgroup list
// is the same every time.
fn subgroups_of(group: &FiniteGroup) -> Rc<Vec<Subgroup>> {
    SUBGROUPS.with(|cache| {
        let mut map = cache.borrow_mut();
        if let Some((cached_group, list)) = map.get(&group.table_digest()) {
            if cached_group == group {
                return Rc::clone(list);
            }
        }
        let list = Rc::new(
            softint_core::group::all_subgroups(group).expect("chain generation needs the subgroup list"),
        );
        map.insert(group.table_digest(), (group.clone(), Rc::clone(&list)));
        list
    })
}

fn generate(group: &FiniteGroup, universe: &Universe, seed: u64, normal_only: bool) -> SoftIntGroup {
    let mut rng = SplitMix64::new(seed);
    let all = subgroups_of(group);
    let subgroups: Vec<&Subgroup> =
        all.iter().filter(|s| !normal_only || s.is_normal()).collect();

    // Descend from the whole group, then flip to ascending order.
    let mut chain: Vec<&Subgroup> = vec![subgroups.last().expect("the whole group is always present")];
    loop {
        let current = chain.last().unwrap();
        let candidates: Vec<&Subgroup> = subgroups
            .iter()
            .copied()
            .filter(|s| {
                s.order() < current.order() && s.members().iter().all(|&m| current.contains(m))
            })
            .collect();
        if candidates.is_empty() || rng.below(3) == 0 {
            break;
        }
        chain.push(candidates[rng.below(candidates.len() as u64) as usize]);
    }
    chain.reverse();

    let m = universe.size();
    let mut alphas = Vec::with_capacity(chain.len());
    let mut current = rng.mask(m);
    for _ in 0..chain.len() {
        alphas.push(current);
        current &= rng.mask(m);
    }

    let values = (0..group.order())
        .map(|x| {
            let i = chain.iter().position(|h| h.contains(x)).expect("last link is the whole group");
            alphas[i]
        })
        .collect();
    let soft = SoftSet::from_masks(group, universe, values).expect("masks in range");
    check_int_group(soft).expect("chain construction always yields an int-group")
}

/// A seeded int-group built from a random subgroup chain; deterministic per
/// seed. Panics for groups beyond the subgroup enumeration bound, which the
/// construction depends on.
pub fn generate_chain_int_group(group: &FiniteGroup, universe: &Universe, seed: u64) -> SoftIntGroup {
    generate(group, universe, seed, false)
}

/// Like [`generate_chain_int_group`] but drawing only normal subgroups, so
/// the result is a normal int-group.
pub fn generate_chain_normal_int_group(
    group: &FiniteGroup,
    universe: &Universe,
    seed: u64,
) -> SoftIntGroup {
    let f = generate(group, universe, seed, true);
    debug_assert!(f.is_normal());
    f
}
