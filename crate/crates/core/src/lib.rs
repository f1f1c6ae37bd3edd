//! Soft int-groups over finite groups and finite universes.
//!
//! A soft set maps every element of a finite group into the subsets of a
//! finite universe; it is an int-group when `f(xy) ⊇ f(x) ∩ f(y)` and
//! `f(x^-1) = f(x)` hold everywhere. This crate provides the group side
//! (Cayley tables, subgroups, quotients, homomorphisms), the soft-set
//! algebra (inclusion, union, intersection, cuts), and the int-group
//! calculus built on both: normality in its equivalent forms, soft products,
//! conjugates, normalizers, cosets, quotient groups, level structure, and
//! transport along homomorphisms.
//!
//! Everything is immutable after construction and deliberately desk-scale:
//! groups up to a few dozen elements, universes up to one machine word.
//!
//! ```
//! use softint_core::{check_int_group, FiniteGroup, SoftSet, Universe};
//!
//! let z4 = FiniteGroup::cyclic(4)?;
//! let u = Universe::alphabetic(2)?;
//! // values {a,b}, {a}, {a,b}, {a}: both cuts are subgroups of Z4
//! let f = check_int_group(SoftSet::from_masks(&z4, &u, vec![0b11, 0b01, 0b11, 0b01])?)
//!     .expect("cuts are subgroups, so this validates");
//!
//! assert!(f.is_normal()); // Z4 is Abelian
//! assert_eq!(f.e_subgroup().members(), &[0, 2]);
//!
//! let q = f.quotient_group()?;
//! assert_eq!(q.order(), 2);
//! assert_eq!(q.induced_soft().mask_at(q.class_of(1)), 0b01);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod group;
pub mod intgroup;
pub mod io;
pub mod soft;

pub use group::{FiniteGroup, GroupError, Homomorphism, QuotientGroup, Subgroup};
pub use intgroup::{
    check_int_group, family_intersection, soft_image, soft_inverse, soft_preimage, soft_product,
    IntGroupError, IntGroupViolation, LevelReport, NormalityCriterion, Side, SoftCoset,
    SoftIntGroup, SoftQuotientGroup,
};
pub use soft::{ImageClass, SoftError, SoftSet, USet, Universe};
