//! The soft product, a union-of-intersections convolution over the group.

use crate::soft::{SoftError, SoftSet};

/// `(f*g)(x) = ∪ { f(u) ∩ g(v) : u v = x }`, computed over all `|G|`
/// factorizations `(u, u^-1 x)` of each element.
pub fn soft_product(f: &SoftSet, g: &SoftSet) -> Result<SoftSet, SoftError> {
    f.check_compatible(g)?;
    let grp = f.group();
    let n = grp.order();
    let mut values = vec![0u64; n];
    for u in 0..n {
        let fu = f.mask_at(u);
        if fu == 0 {
            continue;
        }
        for v in 0..n {
            values[grp.mul(u, v)] |= fu & g.mask_at(v);
        }
    }
    SoftSet::from_masks(grp, f.universe(), values)
}

/// `f^-1(x) = f(x^-1)`; an involution, and the identity on valid int-groups.
pub fn soft_inverse(f: &SoftSet) -> SoftSet {
    let grp = f.group();
    let values = (0..grp.order()).map(|x| f.mask_at(grp.inv(x))).collect();
    SoftSet::from_masks(grp, f.universe(), values).expect("masks already in range")
}
