//! Transport of soft sets along group homomorphisms.

use crate::group::Homomorphism;
use crate::soft::{SoftError, SoftSet};

/// The soft image: `φ(f)(y)` is the union of `f` over the fiber of `y`,
/// empty when the fiber is empty.
pub fn soft_image(phi: &Homomorphism, f: &SoftSet) -> Result<SoftSet, SoftError> {
    if f.group() != phi.domain() {
        return Err(SoftError::GroupMismatch);
    }
    let mut values = vec![0u64; phi.codomain().order()];
    for x in 0..phi.domain().order() {
        values[phi.apply(x)] |= f.mask_at(x);
    }
    SoftSet::from_masks(phi.codomain(), f.universe(), values)
}

/// The soft preimage: `φ^-1(g)(x) = g(φ(x))`.
pub fn soft_preimage(phi: &Homomorphism, g: &SoftSet) -> Result<SoftSet, SoftError> {
    if g.group() != phi.codomain() {
        return Err(SoftError::GroupMismatch);
    }
    let values = (0..phi.domain().order()).map(|x| g.mask_at(phi.apply(x))).collect();
    SoftSet::from_masks(phi.domain(), g.universe(), values)
}
