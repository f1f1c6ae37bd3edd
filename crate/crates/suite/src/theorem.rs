//! The index of checked results. Each id maps to exactly one checker, and
//! every report cites the id together with the property it states.

use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(into = "&'static str")]
pub enum TheoremId {
    B20,
    B100,
    B163,
    B210,
    B220,
    B300,
    B367,
    B380,
    B400,
    B420,
    B430,
    B480,
    B490,
    C15,
    C20,
    C30,
    C35,
    C90Fwd,
    C90Conv,
    C95,
    C100,
    C110,
    C190,
    C220,
    C221,
    C226,
    C227,
    C228,
    C229,
    C240,
    C246,
    C270,
    C290,
    C300,
    C345,
    C355,
    C360,
    C370,
    C380,
    C383,
    C385,
    C420,
    C430,
    D376,
    D593,
}

impl TheoremId {
    pub const ALL: [TheoremId; 45] = [
        TheoremId::B20,
        TheoremId::B100,
        TheoremId::B163,
        TheoremId::B210,
        TheoremId::B220,
        TheoremId::B300,
        TheoremId::B367,
        TheoremId::B380,
        TheoremId::B400,
        TheoremId::B420,
        TheoremId::B430,
        TheoremId::B480,
        TheoremId::B490,
        TheoremId::C15,
        TheoremId::C20,
        TheoremId::C30,
        TheoremId::C35,
        TheoremId::C90Fwd,
        TheoremId::C90Conv,
        TheoremId::C95,
        TheoremId::C100,
        TheoremId::C110,
        TheoremId::C190,
        TheoremId::C220,
        TheoremId::C221,
        TheoremId::C226,
        TheoremId::C227,
        TheoremId::C228,
        TheoremId::C229,
        TheoremId::C240,
        TheoremId::C246,
        TheoremId::C270,
        TheoremId::C290,
        TheoremId::C300,
        TheoremId::C345,
        TheoremId::C355,
        TheoremId::C360,
        TheoremId::C370,
        TheoremId::C380,
        TheoremId::C383,
        TheoremId::C385,
        TheoremId::C420,
        TheoremId::C430,
        TheoremId::D376,
        TheoremId::D593,
    ];

    /// The transport results, checked once per catalog homomorphism.
    pub fn needs_homomorphism(self) -> bool {
        matches!(
            self,
            TheoremId::B163 | TheoremId::C420 | TheoremId::C430 | TheoremId::D376 | TheoremId::D593
        )
    }

    /// Probes report their verdict verbatim but never fail a suite run.
    pub fn informational(self) -> bool {
        matches!(self, TheoremId::C90Conv | TheoremId::C100)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::B20 => "B20",
            TheoremId::B100 => "B100",
            TheoremId::B163 => "B163",
            TheoremId::B210 => "B210",
            TheoremId::B220 => "B220",
            TheoremId::B300 => "B300",
            TheoremId::B367 => "B367",
            TheoremId::B380 => "B380",
            TheoremId::B400 => "B400",
            TheoremId::B420 => "B420",
            TheoremId::B430 => "B430",
            TheoremId::B480 => "B480",
            TheoremId::B490 => "B490",
            TheoremId::C15 => "C15",
            TheoremId::C20 => "C20",
            TheoremId::C30 => "C30",
            TheoremId::C35 => "C35",
            TheoremId::C90Fwd => "C90fwd",
            TheoremId::C90Conv => "C90conv",
            TheoremId::C95 => "C95",
            TheoremId::C100 => "C100",
            TheoremId::C110 => "C110",
            TheoremId::C190 => "C190",
            TheoremId::C220 => "C220",
            TheoremId::C221 => "C221",
            TheoremId::C226 => "C226",
            TheoremId::C227 => "C227",
            TheoremId::C228 => "C228",
            TheoremId::C229 => "C229",
            TheoremId::C240 => "C240",
            TheoremId::C246 => "C246",
            TheoremId::C270 => "C270",
            TheoremId::C290 => "C290",
            TheoremId::C300 => "C300",
            TheoremId::C345 => "C345",
            TheoremId::C355 => "C355",
            TheoremId::C360 => "C360",
            TheoremId::C370 => "C370",
            TheoremId::C380 => "C380",
            TheoremId::C383 => "C383",
            TheoremId::C385 => "C385",
            TheoremId::C420 => "C420",
            TheoremId::C430 => "C430",
            TheoremId::D376 => "D376",
            TheoremId::D593 => "D593",
        }
    }

    /// The property each checker decides, stated over the artifact's own
    /// operations.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::B20 => "f(e) contains f(x) for every x",
            TheoremId::B100 => "the e-set of an int-group is a subgroup",
            TheoremId::B163 => "g contains image(preimage(g)); equality when the map is onto",
            TheoremId::B210 => "restricting an int-group to a subgroup gives an int-group",
            TheoremId::B220 => "intersections of int-group families are int-groups",
            TheoremId::B300 => "larger cut levels give smaller cuts",
            TheoremId::B367 => "int-group iff every nonempty cut is a subgroup",
            TheoremId::B380 => "soft points multiply to the soft point of the product",
            TheoremId::B400 => "the soft product is associative",
            TheoremId::B420 => "a full-image soft point translates under the product",
            TheoremId::B430 => "the three inverse-inclusion conditions are equivalent",
            TheoremId::B480 => "int-group iff f*f sits inside f and f^-1 = f",
            TheoremId::B490 => "f*g is an int-group iff f*g = g*f",
            TheoremId::C15 => "the normality criteria all agree",
            TheoremId::C20 => "over an Abelian group every int-group is normal",
            TheoremId::C30 => "the universal soft set and the e-set block of a normal f are normal",
            TheoremId::C35 => "intersections of normal families are normal",
            TheoremId::C90Fwd => "f([x,y]) = f(e) everywhere forces normality",
            TheoremId::C90Conv => "probe: normality forces f([x,y]) = f(e) everywhere",
            TheoremId::C95 => "G/N is Abelian iff the commutator subgroup sits inside N",
            TheoremId::C100 => "probe: G modulo the e-set of a normal int-group is Abelian",
            TheoremId::C110 => "normal iff f([x,y]) contains f(x) everywhere",
            TheoremId::C190 => "normal int-groups are level normal over nested level subgroups",
            TheoremId::C220 => "normal int-group iff every nonempty cut is a normal subgroup",
            TheoremId::C221 => "e-set normal; support conjugation-invariant",
            TheoremId::C226 => "Dedekind iff every int-group is normal",
            TheoremId::C227 => "normal f commutes with every soft set under *",
            TheoremId::C228 => "normal f times an int-group is an int-group",
            TheoremId::C229 => "products of normal int-groups are normal",
            TheoremId::C240 => "normal int-groups: * is commutative, associative, idempotent",
            TheoremId::C246 => "normal iff fixed by every conjugation",
            TheoremId::C270 => "N(f) is a subgroup; f|N(f) is normal; N(f) = G iff f normal",
            TheoremId::C290 => "distinct conjugates times |N(f)| equals |G|",
            TheoremId::C300 => "the meet of all conjugates is the largest normal int-group in f",
            TheoremId::C345 => "as many left cosets as right cosets",
            TheoremId::C355 => "(af)(ga) = (af)(ag) = f(g) for normal f",
            TheoremId::C360 => "af = bf iff a and b share their e-set coset",
            TheoremId::C370 => "af = bf forces f(a) = f(b) for normal f",
            TheoremId::C380 => "(xf)*(yf) = (xy)f; G/f is a group, Abelian when G is",
            TheoremId::C383 => "xf -> x e_f is a product-preserving bijection onto G/e_f",
            TheoremId::C385 => "xf -> f(x) is a well-defined normal int-group on G/f",
            TheoremId::C420 => "onto images of normal int-groups are normal",
            TheoremId::C430 => "preimages of normal int-groups are normal",
            TheoremId::D376 => "preimage preserves soft inclusion",
            TheoremId::D593 => "image of preimage of a normal int-group is normal",
        }
    }
}

impl From<TheoremId> for &'static str {
    fn from(id: TheoremId) -> Self {
        id.as_str()
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_ordered() {
        let mut names: Vec<&str> = TheoremId::ALL.iter().map(|t| t.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), TheoremId::ALL.len());
    }

    #[test]
    fn probes_are_informational() {
        assert!(TheoremId::C90Conv.informational());
        assert!(TheoremId::C100.informational());
        assert!(!TheoremId::C90Fwd.informational());
    }
}
