//! The quotient of a group by a normal soft int-group: distinct soft cosets
//! under the product `(xf) * (yf) = (xy)f`.

use super::{IntGroupError, Side, SoftIntGroup};
use crate::group::{FiniteGroup, QuotientGroup};
use crate::soft::SoftSet;

/// `G/f`: the distinct cosets of a normal soft int-group, with the induced
/// operation. Cosets are deduplicated by pointwise value equality and indexed
/// in order of their first representative.
#[derive(Clone)]
pub struct SoftQuotientGroup {
    base: SoftIntGroup,
    group: FiniteGroup,
    reps: Vec<usize>,
    class_of: Vec<usize>,
    cosets: Vec<SoftSet>,
}

impl SoftQuotientGroup {
    pub fn new(f: &SoftIntGroup) -> Result<Self, IntGroupError> {
        if !f.is_normal() {
            return Err(IntGroupError::NotNormal);
        }
        let g = f.group().clone();
        let n = g.order();

        let mut reps: Vec<usize> = Vec::new();
        let mut cosets: Vec<SoftSet> = Vec::new();
        let mut class_of = vec![usize::MAX; n];
        for (x, class) in class_of.iter_mut().enumerate() {
            let coset = f.coset(x, Side::Left).as_soft_set();
            match cosets.iter().position(|c| *c == coset) {
                Some(i) => *class = i,
                None => {
                    *class = cosets.len();
                    reps.push(x);
                    cosets.push(coset);
                }
            }
        }

        let k = reps.len();
        let mut table = vec![vec![0usize; k]; k];
        for a in 0..k {
            for b in 0..k {
                table[a][b] = class_of[g.mul(reps[a], reps[b])];
            }
        }
        // Independence of representatives is the point of the construction;
        // it holds whenever f is normal.
        debug_assert!((0..n).all(|x| (0..n)
            .all(|y| class_of[g.mul(x, y)] == table[class_of[x]][class_of[y]])));

        let names = reps.iter().map(|&r| format!("{}f", g.name(r))).collect();
        let group = FiniteGroup::from_table(table, Some(names))?;

        Ok(SoftQuotientGroup { base: f.clone(), group, reps, class_of, cosets })
    }

    pub fn base(&self) -> &SoftIntGroup {
        &self.base
    }

    /// The induced group on the distinct cosets.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    /// First-seen representative of each coset class.
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    /// The coset class of a parent element.
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// The materialized value function of class `i`.
    pub fn coset_soft(&self, i: usize) -> &SoftSet {
        &self.cosets[i]
    }

    /// The soft set on `G/f` sending each coset `xf` to `f(x)`; well defined
    /// because cosets that coincide have equal base values, and again a
    /// normal int-group.
    pub fn induced_soft(&self) -> SoftIntGroup {
        debug_assert!((0..self.class_of.len())
            .all(|x| self.base.mask_at(x) == self.base.mask_at(self.reps[self.class_of[x]])));
        let values = self.reps.iter().map(|&r| self.base.mask_at(r)).collect();
        let soft = SoftSet::from_masks(&self.group, self.base.universe(), values)
            .expect("masks in range");
        SoftIntGroup::trusted(soft)
    }
}

impl SoftIntGroup {
    /// The quotient group `G/f`; requires normality.
    pub fn quotient_group(&self) -> Result<SoftQuotientGroup, IntGroupError> {
        SoftQuotientGroup::new(self)
    }

    /// The induced normal int-group on `G/f`; requires normality.
    pub fn quotient_soft(&self) -> Result<SoftIntGroup, IntGroupError> {
        Ok(self.quotient_group()?.induced_soft())
    }

    /// Builds `G / e_f` and reports whether it is Abelian. Exposed for
    /// normal int-groups only; the verdict is not assumed either way.
    pub fn quotient_by_eset_abelian(&self) -> Result<bool, IntGroupError> {
        if !self.is_normal() {
            return Err(IntGroupError::NotNormal);
        }
        let q = QuotientGroup::new(&self.e_subgroup())?;
        Ok(q.is_abelian())
    }
}
