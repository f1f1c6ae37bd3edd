//! End-to-end walk through the four canonical fixtures, exercising the whole
//! calculus on instances whose expected values were computed independently
//! (by hand off the Cayley tables, or by the brute-force scans below).

use softint_core::{
    check_int_group, family_intersection, soft_image, soft_preimage, soft_product, FiniteGroup,
    Homomorphism, NormalityCriterion, Side, SoftIntGroup, SoftSet, Subgroup, USet, Universe,
};

fn universe_ab() -> Universe {
    Universe::alphabetic(2).unwrap()
}

/// Z4 with values {a,b}, {a}, {a,b}, {a}.
fn f1() -> SoftIntGroup {
    let z4 = FiniteGroup::cyclic(4).unwrap();
    check_int_group(SoftSet::from_masks(&z4, &universe_ab(), vec![0b11, 0b01, 0b11, 0b01]).unwrap())
        .unwrap()
}

/// D3, characteristic soft set of {e, v}.
fn f2() -> SoftIntGroup {
    let d3 = FiniteGroup::dihedral(3).unwrap();
    check_int_group(SoftSet::characteristic(&d3, &universe_ab(), &[0, 3]).unwrap()).unwrap()
}

/// D3 with {a,b} at the identity and {a} everywhere else.
fn f3() -> SoftIntGroup {
    let d3 = FiniteGroup::dihedral(3).unwrap();
    check_int_group(
        SoftSet::from_masks(&d3, &universe_ab(), vec![0b11, 0b01, 0b01, 0b01, 0b01, 0b01]).unwrap(),
    )
    .unwrap()
}

/// Klein group with values {a,b}, {a}, {b}, {}.
fn f4() -> SoftIntGroup {
    let klein = FiniteGroup::klein();
    check_int_group(SoftSet::from_masks(&klein, &universe_ab(), vec![0b11, 0b01, 0b10, 0b00]).unwrap())
        .unwrap()
}

/// Brute-force oracle for the int-group conditions, written independently of
/// the library's validation path.
fn brute_force_is_int_group(f: &SoftSet) -> bool {
    let g = f.group();
    for x in 0..g.order() {
        for y in 0..g.order() {
            let meet = f.mask_at(x) & f.mask_at(y);
            if f.mask_at(g.mul(x, y)) & meet != meet {
                return false;
            }
        }
    }
    (0..g.order()).all(|x| f.mask_at(g.inv(x)) == f.mask_at(x))
}

#[test]
fn f4_validates_by_brute_force_over_all_sixteen_pairs() {
    let klein = FiniteGroup::klein();
    let raw = SoftSet::from_masks(&klein, &universe_ab(), vec![0b11, 0b01, 0b10, 0b00]).unwrap();
    assert!(brute_force_is_int_group(&raw));
    assert!(check_int_group(raw).is_ok());
}

#[test]
fn level_cuts_justify_f1_and_f3() {
    // F1's nonempty cuts are {0,2} and Z4; both subgroups.
    let f = f1();
    assert_eq!(f.soft().inclusion_cut(0b11), vec![0, 2]);
    assert_eq!(f.soft().inclusion_cut(0b01), vec![0, 1, 2, 3]);

    // F3's cuts are {e} and D3.
    let f = f3();
    assert_eq!(f.soft().inclusion_cut(0b11), vec![0]);
    assert_eq!(f.soft().inclusion_cut(0b01), vec![0, 1, 2, 3, 4, 5]);
}

#[test]
fn f2_matches_the_dihedral_witness() {
    let f = f2();
    let d3 = f.group().clone();
    assert!(!f.is_normal());

    let u = d3.index_of("u").unwrap();
    let v = d3.index_of("v").unwrap();
    // u v u^-1 = vu, where the characteristic set vanishes.
    let conj = d3.conj(u, v);
    assert_eq!(d3.name(conj), "vu");
    assert_eq!(f.mask_at(conj), 0);
    assert_eq!(f.mask_at(v), universe_ab().full_mask());
    assert_eq!(f.normality_witness(), Some((u, v)));
}

#[test]
fn normalizer_and_conjugates_of_f2() {
    let f = f2();
    let n = f.normalizer();
    assert_eq!(n.members(), &[0, 3]);
    let conjugates = f.distinct_conjugates().unwrap();
    assert_eq!(conjugates.len(), 3);

    // The three conjugates are the characteristic sets of the three
    // reflection subgroups {e,v}, {e,vu}, {e,vu2}.
    let d3 = f.group().clone();
    let u = universe_ab();
    for member in ["v", "vu", "vu2"] {
        let idx = d3.index_of(member).unwrap();
        let expect = SoftSet::characteristic(&d3, &u, &[0, idx]).unwrap();
        assert!(conjugates.iter().any(|c| c.soft() == &expect));
    }

    // Their intersection is the characteristic set of {e}: the largest
    // normal int-group inside F2, twice over.
    let meet = family_intersection(&conjugates).unwrap();
    let expect = SoftSet::characteristic(&d3, &u, &[0]).unwrap();
    assert_eq!(meet.soft(), &expect);
    assert_eq!(f.largest_normal_contained(), meet);
}

#[test]
fn six_normality_criteria_agree_on_all_fixtures() {
    for (f, expect) in [(f1(), true), (f2(), false), (f3(), true), (f4(), true)] {
        for c in NormalityCriterion::ALL {
            assert_eq!(f.is_normal_by(c), expect, "{c:?} on {f:?}");
        }
    }
}

#[test]
fn restriction_to_normalizer_is_normal() {
    let f = f2();
    let n = f.normalizer();
    let restricted = f.restrict(&n).unwrap();
    assert!(restricted.is_normal());
}

#[test]
fn quotients_of_f1_line_up() {
    let f = f1();
    let q = f.quotient_group().unwrap();
    assert_eq!(q.order(), 2);

    // Explicit product-preserving bijection with Z4 / {0,2}.
    let z4 = f.group().clone();
    let eset = f.e_subgroup();
    assert_eq!(eset.members(), &[0, 2]);
    let classic = softint_core::QuotientGroup::new(&eset).unwrap();
    assert_eq!(classic.order(), q.order());
    for x in 0..z4.order() {
        for y in 0..z4.order() {
            let via_soft = q.class_of(z4.mul(x, y));
            let via_classic = classic.coset_of(z4.mul(x, y));
            assert_eq!(
                (via_soft, via_classic),
                (
                    q.group().mul(q.class_of(x), q.class_of(y)),
                    classic.group().mul(classic.coset_of(x), classic.coset_of(y))
                )
            );
        }
    }

    let qs = f.quotient_soft().unwrap();
    assert_eq!(qs.mask_at(q.class_of(0)), 0b11);
    assert_eq!(qs.mask_at(q.class_of(1)), 0b01);
}

#[test]
fn coset_definition_unfolds() {
    let f = f1();
    let c = f.coset(1, Side::Left);
    assert_eq!(c.mask_at(0), 0b01); // f(1^-1 * 0) = f(3) = {a}

    for a in 0..4 {
        assert_eq!(f.coset(a, Side::Left), f.coset(a, Side::Right)); // Z4 Abelian
    }
}

#[test]
fn image_and_preimage_round_trip_through_the_mod_map() {
    let phi = Homomorphism::cyclic_mod(4, 2).unwrap();
    let f = f1();
    let image = soft_image(&phi, f.soft()).unwrap();
    assert_eq!(image.mask_at(0), 0b11); // f(0) ∪ f(2)
    assert_eq!(image.mask_at(1), 0b01); // f(1) ∪ f(3)

    let back = soft_preimage(&phi, &image).unwrap();
    assert_eq!(back, *f.soft()); // this instance is fiber-constant

    // Surjective: image of preimage is the identity on soft sets over Z2.
    let u = universe_ab();
    let z2 = phi.codomain().clone();
    for masks in [[0b00u64, 0b00], [0b10, 0b01], [0b11, 0b10]] {
        let g = SoftSet::from_masks(&z2, &u, masks.to_vec()).unwrap();
        assert_eq!(soft_image(&phi, &soft_preimage(&phi, &g).unwrap()).unwrap(), g);
    }
}

#[test]
fn products_on_fixtures() {
    let f = f1();
    let ff = soft_product(f.soft(), f.soft()).unwrap();
    assert_eq!(ff, *f.soft());

    // Soft points multiply to the point of the product element.
    let z4 = f.group().clone();
    let u = universe_ab();
    let a = USet::from_labels(&u, &["a"]).unwrap();
    let b = USet::from_labels(&u, &["b"]).unwrap();
    let p = SoftSet::point(&z4, 1, &a).unwrap();
    let q = SoftSet::point(&z4, 2, &b).unwrap();
    let pq = soft_product(&p, &q).unwrap();
    assert_eq!(pq, SoftSet::point(&z4, 3, &a.intersect(&b).unwrap()).unwrap());

    // point(1, {a}) is a soft subset of F1.
    assert!(p.is_soft_subset(f.soft()).unwrap());
}

#[test]
fn subgroup_enumeration_cross_checked_by_subset_scan() {
    // Independent oracle: scan all subsets of every group of order <= 8 and
    // keep those closed under the operation and containing the identity.
    for g in [
        FiniteGroup::cyclic(4).unwrap(),
        FiniteGroup::cyclic(5).unwrap(),
        FiniteGroup::klein(),
        FiniteGroup::dihedral(3).unwrap(),
        FiniteGroup::dihedral(4).unwrap(),
        FiniteGroup::quaternion(),
    ] {
        let n = g.order();
        let mut oracle: Vec<Vec<usize>> = Vec::new();
        'subsets: for mask in 1u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if !members.contains(&g.identity()) {
                continue;
            }
            for &a in &members {
                for &b in &members {
                    if !members.contains(&g.mul(a, b)) {
                        continue 'subsets;
                    }
                }
            }
            oracle.push(members);
        }
        oracle.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));

        let enumerated: Vec<Vec<usize>> = softint_core::group::all_subgroups(&g)
            .unwrap()
            .into_iter()
            .map(|s| s.members().to_vec())
            .collect();
        assert_eq!(enumerated, oracle);

        for members in &enumerated {
            assert!(Subgroup::new(&g, members).is_ok());
        }
    }
}
