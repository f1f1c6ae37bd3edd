//! The canonical fixtures every report and test refers back to.

use softint_core::{check_int_group, FiniteGroup, Homomorphism, SoftIntGroup, SoftSet, Universe};

pub fn universe_ab() -> Universe {
    Universe::alphabetic(2).unwrap()
}

/// Z4 over {a,b} with values {a,b}, {a}, {a,b}, {a}: its cuts are {0,2} and
/// Z4, both subgroups.
pub fn f1() -> SoftIntGroup {
    let z4 = FiniteGroup::cyclic(4).unwrap();
    check_int_group(SoftSet::from_masks(&z4, &universe_ab(), vec![0b11, 0b01, 0b11, 0b01]).unwrap())
        .unwrap()
}

/// D3, the characteristic soft set of {e, v}: a valid int-group that is not
/// normal.
pub fn f2() -> SoftIntGroup {
    let d3 = FiniteGroup::dihedral(3).unwrap();
    check_int_group(SoftSet::characteristic(&d3, &universe_ab(), &[0, 3]).unwrap()).unwrap()
}

/// D3 with {a,b} at the identity and {a} elsewhere: normal (constant on
/// conjugacy classes) with e-set {e}.
pub fn f3() -> SoftIntGroup {
    let d3 = FiniteGroup::dihedral(3).unwrap();
    check_int_group(
        SoftSet::from_masks(&d3, &universe_ab(), vec![0b11, 0b01, 0b01, 0b01, 0b01, 0b01]).unwrap(),
    )
    .unwrap()
}

/// Klein group with values {a,b}, {a}, {b}, {}: a valid int-group whose
/// image is not a chain.
pub fn f4() -> SoftIntGroup {
    let klein = FiniteGroup::klein();
    check_int_group(SoftSet::from_masks(&klein, &universe_ab(), vec![0b11, 0b01, 0b10, 0b00]).unwrap())
        .unwrap()
}

/// The reduction Z4 -> Z2.
pub fn z4_to_z2() -> Homomorphism {
    Homomorphism::cyclic_mod(4, 2).unwrap()
}

/// The sign map D3 -> Z2.
pub fn d3_sign() -> Homomorphism {
    Homomorphism::dihedral_sign(3).unwrap()
}
