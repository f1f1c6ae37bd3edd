//! The soft int-group calculus: validation, normality in its equivalent
//! forms, conjugates, normalizers, cosets, quotients, level structure, and
//! transport along homomorphisms.

mod conjugacy;
mod coset;
mod level;
mod product;
mod quotient;
mod transport;

pub use conjugacy::family_intersection;
pub use coset::{Side, SoftCoset};
pub use level::LevelReport;
pub use product::{soft_inverse, soft_product};
pub use quotient::SoftQuotientGroup;
pub use transport::{soft_image, soft_preimage};

use crate::group::{GroupError, Subgroup};
use crate::soft::{SoftError, SoftSet};
use std::fmt;

/// Why a soft set is not an int-group. Carries the first witness under
/// row-major traversal, so reports are deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntGroupViolation {
    /// `f(x*y)` does not contain `f(x) ∩ f(y)`.
    Groupoid { x: usize, y: usize },
    /// `f(x^-1) != f(x)`.
    Inverse { x: usize },
}

impl fmt::Display for IntGroupViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntGroupViolation::Groupoid { x, y } => {
                write!(f, "f(x*y) does not contain f(x) & f(y) at ({x}, {y})")
            }
            IntGroupViolation::Inverse { x } => write!(f, "f(x^-1) differs from f(x) at {x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntGroupError {
    /// The operation needs a normal soft int-group.
    NotNormal,
    /// The operation needs a nonempty support.
    EmptySupport,
    /// An intersection over an empty family was requested.
    EmptyFamily,
    Soft(SoftError),
    Group(GroupError),
}

impl fmt::Display for IntGroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntGroupError::NotNormal => write!(f, "soft int-group is not normal"),
            IntGroupError::EmptySupport => write!(f, "soft int-group has empty support"),
            IntGroupError::EmptyFamily => write!(f, "empty family"),
            IntGroupError::Soft(e) => e.fmt(f),
            IntGroupError::Group(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for IntGroupError {}

impl From<SoftError> for IntGroupError {
    fn from(e: SoftError) -> Self {
        IntGroupError::Soft(e)
    }
}

impl From<GroupError> for IntGroupError {
    fn from(e: GroupError) -> Self {
        IntGroupError::Group(e)
    }
}

/// The equivalent normality tests. All of them agree on every valid soft
/// int-group; the theorem suite enforces the agreement wholesale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalityCriterion {
    /// `f(xy) = f(yx)` for all pairs.
    Abelian,
    /// `f(xyx^-1) = f(y)` for all pairs.
    ConjEq,
    /// `f(xyx^-1) ⊇ f(y)` for all pairs.
    ConjSup,
    /// `f(xyx^-1) ⊆ f(y)` for all pairs.
    ConjSub,
    /// Every nonempty value cut is a normal subgroup.
    AlphaCuts,
    /// `f([x,y]) ⊇ f(x)` for all pairs.
    CommutatorSup,
}

impl NormalityCriterion {
    pub const ALL: [NormalityCriterion; 6] = [
        NormalityCriterion::Abelian,
        NormalityCriterion::ConjEq,
        NormalityCriterion::ConjSup,
        NormalityCriterion::ConjSub,
        NormalityCriterion::AlphaCuts,
        NormalityCriterion::CommutatorSup,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NormalityCriterion::Abelian => "abelian",
            NormalityCriterion::ConjEq => "conj-eq",
            NormalityCriterion::ConjSup => "conj-sup",
            NormalityCriterion::ConjSub => "conj-sub",
            NormalityCriterion::AlphaCuts => "alpha-cuts",
            NormalityCriterion::CommutatorSup => "commutator-sup",
        }
    }
}

/// A soft set that passed both int-group conditions.
#[derive(Clone, PartialEq, Eq)]
pub struct SoftIntGroup {
    inner: SoftSet,
}

impl fmt::Debug for SoftIntGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SoftIntGroup({:?})", self.inner)
    }
}

/// Validates both int-group conditions by a full double loop. On failure the
/// report carries the first violating pair in row-major `(x, y)` order; when
/// the groupoid condition is clean, the first violating inverse.
pub fn check_int_group(f: SoftSet) -> Result<SoftIntGroup, IntGroupViolation> {
    match int_group_violation(&f) {
        None => Ok(SoftIntGroup { inner: f }),
        Some(v) => Err(v),
    }
}

/// The first violation of the direct int-group conditions, if any.
pub fn int_group_violation(f: &SoftSet) -> Option<IntGroupViolation> {
    let g = f.group();
    let n = g.order();
    for x in 0..n {
        for y in 0..n {
            let meet = f.mask_at(x) & f.mask_at(y);
            if meet & !f.mask_at(g.mul(x, y)) != 0 {
                return Some(IntGroupViolation::Groupoid { x, y });
            }
        }
    }
    (0..n)
        .find(|&x| f.mask_at(g.inv(x)) != f.mask_at(x))
        .map(|x| IntGroupViolation::Inverse { x })
}

/// Classification by level cuts: a soft set is an int-group exactly when
/// every nonempty inclusion cut is a subgroup. Distinct cuts are produced by
/// the intersection closure of the value class, so only those levels are
/// tested.
pub fn is_int_group_by_cuts(f: &SoftSet) -> bool {
    for alpha in intersection_closure(f) {
        let cut = f.inclusion_cut(alpha);
        if !cut.is_empty() && Subgroup::new(f.group(), &cut).is_err() {
            return false;
        }
    }
    true
}

/// Classification by soft product: `(f*f) ⊆ f` together with `f^-1 = f`.
pub fn is_int_group_by_product(f: &SoftSet) -> bool {
    let ff = soft_product(f, f).expect("same group and universe");
    ff.is_soft_subset(f).expect("same group and universe") && soft_inverse(f) == *f
}

/// All masks obtainable as intersections of nonempty subfamilies of the
/// value class, i.e. the levels at which distinct cuts can appear.
pub(crate) fn intersection_closure(f: &SoftSet) -> Vec<u64> {
    let mut masks = f.value_masks_distinct();
    let mut i = 0;
    while i < masks.len() {
        for j in 0..i {
            let meet = masks[i] & masks[j];
            if !masks.contains(&meet) {
                masks.push(meet);
            }
        }
        i += 1;
    }
    masks.sort_unstable_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));
    masks
}

impl SoftIntGroup {
    pub fn soft(&self) -> &SoftSet {
        &self.inner
    }

    pub fn into_soft(self) -> SoftSet {
        self.inner
    }

    /// Wraps a soft set the caller has already proven valid; checked in
    /// debug builds.
    pub(crate) fn trusted(inner: SoftSet) -> Self {
        debug_assert!(int_group_violation(&inner).is_none());
        SoftIntGroup { inner }
    }

    pub fn group(&self) -> &crate::group::FiniteGroup {
        self.inner.group()
    }

    pub fn universe(&self) -> &crate::soft::Universe {
        self.inner.universe()
    }

    #[inline]
    pub fn mask_at(&self, x: usize) -> u64 {
        self.inner.mask_at(x)
    }

    pub fn value(&self, x: usize) -> crate::soft::USet {
        self.inner.value(x)
    }

    /// `f(e) ⊇ f(x)` for every element; holds for every valid int-group and
    /// is exposed as a checkable property.
    pub fn identity_dominance(&self) -> bool {
        let e_mask = self.inner.mask_at(self.group().identity());
        self.inner.masks().iter().all(|&m| m & !e_mask == 0)
    }

    /// The e-set as a subgroup, which it always is for a valid int-group.
    pub fn e_subgroup(&self) -> Subgroup {
        Subgroup::new(self.group(), &self.inner.e_set()).expect("e-set of an int-group is a subgroup")
    }

    /// Restricts to a subgroup, producing an int-group over the subgroup as
    /// a group of its own.
    pub fn restrict(&self, h: &Subgroup) -> Result<SoftIntGroup, IntGroupError> {
        if h.parent() != self.group() {
            return Err(IntGroupError::Soft(SoftError::GroupMismatch));
        }
        let (hg, embed) = h.to_group();
        let values = embed.iter().map(|&m| self.inner.mask_at(m)).collect();
        let soft = SoftSet::from_masks(&hg, self.universe(), values)?;
        Ok(SoftIntGroup::trusted(soft))
    }

    /// Normality under the defining condition, `f(xy) = f(yx)` everywhere.
    pub fn is_normal(&self) -> bool {
        self.is_normal_by(NormalityCriterion::Abelian)
    }

    pub fn is_normal_by(&self, criterion: NormalityCriterion) -> bool {
        let f = &self.inner;
        let g = f.group();
        let n = g.order();
        match criterion {
            NormalityCriterion::Abelian => (0..n)
                .all(|x| (0..n).all(|y| f.mask_at(g.mul(x, y)) == f.mask_at(g.mul(y, x)))),
            NormalityCriterion::ConjEq => self.normality_witness().is_none(),
            NormalityCriterion::ConjSup => (0..n)
                .all(|x| (0..n).all(|y| f.mask_at(y) & !f.mask_at(g.conj(x, y)) == 0)),
            NormalityCriterion::ConjSub => (0..n)
                .all(|x| (0..n).all(|y| f.mask_at(g.conj(x, y)) & !f.mask_at(y) == 0)),
            NormalityCriterion::AlphaCuts => f.value_masks_distinct().into_iter().all(|alpha| {
                let cut = f.inclusion_cut(alpha);
                cut.is_empty()
                    || Subgroup::new(g, &cut).map(|s| s.is_normal()).unwrap_or(false)
            }),
            NormalityCriterion::CommutatorSup => (0..n)
                .all(|x| (0..n).all(|y| f.mask_at(x) & !f.mask_at(g.commutator(x, y)) == 0)),
        }
    }

    /// First `(x, y)` in row-major order with `f(xyx^-1) != f(y)`.
    pub fn normality_witness(&self) -> Option<(usize, usize)> {
        let f = &self.inner;
        let g = f.group();
        let n = g.order();
        for x in 0..n {
            for y in 0..n {
                if f.mask_at(g.conj(x, y)) != f.mask_at(y) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Whether `f([x,y]) = f(e)` for all pairs. When true the int-group is
    /// normal; the converse fails on concrete instances and is only probed,
    /// never assumed.
    pub fn commutator_value_test(&self) -> bool {
        self.commutator_value_witness().is_none()
    }

    /// First `(x, y)` with `f([x,y]) != f(e)`.
    pub fn commutator_value_witness(&self) -> Option<(usize, usize)> {
        let f = &self.inner;
        let g = f.group();
        let e_mask = f.mask_at(g.identity());
        let n = g.order();
        for x in 0..n {
            for y in 0..n {
                if f.mask_at(g.commutator(x, y)) != e_mask {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn support(&self) -> Vec<usize> {
        self.inner.support()
    }

    pub fn e_set(&self) -> Vec<usize> {
        self.inner.e_set()
    }
}
