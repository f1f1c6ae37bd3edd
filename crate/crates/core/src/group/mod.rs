//! Finite groups given by explicit Cayley tables.
//!
//! Elements are dense indices `0..n`. `table[i][j]` is the index of the
//! product "i then j", so formulas read left to right. Every constructor
//! validates the four group axioms before handing out a value, and all
//! values are immutable once built.

mod hom;
mod quotient;
mod subgroup;

pub use hom::Homomorphism;
pub use quotient::QuotientGroup;
pub use subgroup::{all_subgroups, all_subgroups_bounded, commutator_subgroup, is_dedekind, Subgroup};

use std::fmt;
use std::sync::Arc;

/// Default order cap for subgroup enumeration.
pub const SUBGROUP_ENUMERATION_BOUND: usize = 24;

/// Largest `n` accepted by [`FiniteGroup::symmetric`].
pub const MAX_SYMMETRIC_DEGREE: usize = 5;

/// The four axioms checked when a Cayley table is validated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupAxiom {
    Closure,
    Associativity,
    Identity,
    Inverses,
}

impl fmt::Display for GroupAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupAxiom::Closure => "closure",
            GroupAxiom::Associativity => "associativity",
            GroupAxiom::Identity => "identity",
            GroupAxiom::Inverses => "inverses",
        };
        f.write_str(s)
    }
}

/// Errors from group construction and subgroup machinery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// A Cayley table failed one of the group axioms. The witness holds the
    /// element indices at which the axiom broke.
    AxiomViolation { axiom: GroupAxiom, witness: Vec<usize> },
    /// A member set is not a subgroup of its parent.
    NotASubgroup { detail: &'static str, witness: Vec<usize> },
    /// The subgroup is not normal; `conjugator * member * conjugator^-1`
    /// falls outside it.
    NotNormal { conjugator: usize, member: usize },
    /// A claimed homomorphism does not preserve the product at `(x, y)`.
    NotAHomomorphism { x: usize, y: usize },
    /// A group is larger than the configured enumeration bound.
    BoundExceeded { order: usize, bound: usize },
    /// A constructor parameter is out of range.
    InvalidParameter(String),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::AxiomViolation { axiom, witness } => {
                write!(f, "group axiom violated: {axiom} at {witness:?}")
            }
            GroupError::NotASubgroup { detail, witness } => {
                write!(f, "not a subgroup: {detail} at {witness:?}")
            }
            GroupError::NotNormal { conjugator, member } => {
                write!(f, "not a normal subgroup: conjugating member {member} by {conjugator} leaves the set")
            }
            GroupError::NotAHomomorphism { x, y } => {
                write!(f, "map does not preserve products at ({x}, {y})")
            }
            GroupError::BoundExceeded { order, bound } => {
                write!(f, "group order {order} exceeds enumeration bound {bound}")
            }
            GroupError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
        }
    }
}

impl std::error::Error for GroupError {}

struct GroupInner {
    names: Vec<String>,
    /// Row-major `n * n` multiplication table.
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

/// A finite group with element indices `0..n`, cheap to clone and safe to
/// share across threads.
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<GroupInner>,
}

impl PartialEq for FiniteGroup {
    /// Structural equality on the multiplication table; display names are
    /// ignored.
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.table == other.inner.table
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {}, {:?})", self.order(), self.inner.names)
    }
}

impl FiniteGroup {
    /// Validates a Cayley table and builds the group. The identity and the
    /// inverse array are derived, not declared.
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidParameter("empty Cayley table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::AxiomViolation {
                    axiom: GroupAxiom::Closure,
                    witness: vec![i, row.len()],
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::AxiomViolation {
                        axiom: GroupAxiom::Closure,
                        witness: vec![i, j],
                    });
                }
                flat.push(v);
            }
        }
        let names = match names {
            Some(names) => {
                if names.len() != n {
                    return Err(GroupError::InvalidParameter(format!(
                        "{} names for {} elements",
                        names.len(),
                        n
                    )));
                }
                names
            }
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };

        // Identity: the unique e with e*i = i*e = i for all i.
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| flat[e * n + i] == i && flat[i * n + e] == i))
            .ok_or(GroupError::AxiomViolation {
                axiom: GroupAxiom::Identity,
                witness: vec![],
            })?;

        let mut inverses = Vec::with_capacity(n);
        for i in 0..n {
            let inv = (0..n)
                .find(|&j| flat[i * n + j] == identity && flat[j * n + i] == identity)
                .ok_or(GroupError::AxiomViolation {
                    axiom: GroupAxiom::Inverses,
                    witness: vec![i],
                })?;
            inverses.push(inv);
        }

        for i in 0..n {
            for j in 0..n {
                let ij = flat[i * n + j];
                for k in 0..n {
                    if flat[ij * n + k] != flat[i * n + flat[j * n + k]] {
                        return Err(GroupError::AxiomViolation {
                            axiom: GroupAxiom::Associativity,
                            witness: vec![i, j, k],
                        });
                    }
                }
            }
        }

        Ok(FiniteGroup {
            inner: Arc::new(GroupInner {
                names,
                table: flat,
                identity,
                inverses,
            }),
        })
    }

    /// Cyclic group of order `n`; element `i` is the exponent `i`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter("cyclic group needs n >= 1".into()));
        }
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let names = (0..n).map(|i| i.to_string()).collect();
        Self::from_table(table, Some(names))
    }

    /// Dihedral group of order `2n` with `u^n = v^2 = e` and `u v = v u^(n-1)`.
    /// Element order: `e, u, ..., u^(n-1), v, vu, ..., vu^(n-1)`.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter("dihedral group needs n >= 1".into()));
        }
        let order = 2 * n;
        let idx = |s: usize, k: usize| s * n + k;
        let mut table = vec![vec![0usize; order]; order];
        for s1 in 0..2 {
            for k1 in 0..n {
                for s2 in 0..2 {
                    for k2 in 0..n {
                        // (v^s1 u^k1)(v^s2 u^k2): moving u^k1 past v flips
                        // the rotation sign.
                        let (s, k) = if s2 == 0 {
                            (s1, (k1 + k2) % n)
                        } else {
                            ((s1 + 1) % 2, (n + k2 - k1) % n)
                        };
                        table[idx(s1, k1)][idx(s2, k2)] = idx(s, k);
                    }
                }
            }
        }
        let mut names = Vec::with_capacity(order);
        for s in 0..2 {
            for k in 0..n {
                names.push(match (s, k) {
                    (0, 0) => "e".to_string(),
                    (0, 1) => "u".to_string(),
                    (0, k) => format!("u{k}"),
                    (_, 0) => "v".to_string(),
                    (_, 1) => "vu".to_string(),
                    (_, k) => format!("vu{k}"),
                });
            }
        }
        Self::from_table(table, Some(names))
    }

    /// Klein four-group `{e, x, y, xy}`.
    pub fn klein() -> Self {
        let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        let names = ["e", "x", "y", "xy"].map(String::from).to_vec();
        Self::from_table(table, Some(names)).expect("klein table is a group")
    }

    /// Quaternion group of order 8 in the order `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion() -> Self {
        // Base products on {1, i, j, k} with a sign carry.
        const BASE: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let idx = |sign: usize, base: usize| 2 * base + sign;
        let mut table = vec![vec![0usize; 8]; 8];
        for b1 in 0..4 {
            for s1 in 0..2 {
                for b2 in 0..4 {
                    for s2 in 0..2 {
                        let (sc, b) = BASE[b1][b2];
                        table[idx(s1, b1)][idx(s2, b2)] = idx((s1 + s2 + sc) % 2, b);
                    }
                }
            }
        }
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
        Self::from_table(table, Some(names)).expect("quaternion table is a group")
    }

    /// Symmetric group on `n` letters, permutations in lexicographic order of
    /// their one-line notation. `pq` means "apply p, then q".
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        if n == 0 || n > MAX_SYMMETRIC_DEGREE {
            return Err(GroupError::InvalidParameter(format!(
                "symmetric group degree must be 1..={MAX_SYMMETRIC_DEGREE}"
            )));
        }
        let perms = permutations(n);
        let order = perms.len();
        let index_of = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        let mut table = vec![vec![0usize; order]; order];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                let composed: Vec<usize> = (0..n).map(|x| q[p[x]]).collect();
                table[i][j] = index_of(&composed);
            }
        }
        let names = perms
            .iter()
            .map(|p| p.iter().map(|d| d.to_string()).collect::<String>())
            .collect();
        Self::from_table(table, Some(names))
    }

    /// Direct product; element `(g, h)` has index `g * |H| + h`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let (n, m) = (self.order(), other.order());
        let idx = |g: usize, h: usize| g * m + h;
        let mut table = vec![vec![0usize; n * m]; n * m];
        let mut names = Vec::with_capacity(n * m);
        for g1 in 0..n {
            for h1 in 0..m {
                names.push(format!("({},{})", self.name(g1), other.name(h1)));
                for g2 in 0..n {
                    for h2 in 0..m {
                        table[idx(g1, h1)][idx(g2, h2)] = idx(self.mul(g1, g2), other.mul(h1, h2));
                    }
                }
            }
        }
        Self::from_table(table, Some(names)).expect("product of groups is a group")
    }

    pub fn order(&self) -> usize {
        self.inner.names.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.table[a * self.order() + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inner.inverses[a]
    }

    pub fn identity(&self) -> usize {
        self.inner.identity
    }

    pub fn name(&self, i: usize) -> &str {
        &self.inner.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|n| n == name)
    }

    /// `u x u^-1`.
    #[inline]
    pub fn conj(&self, u: usize, x: usize) -> usize {
        self.mul(self.mul(u, x), self.inv(u))
    }

    /// The commutator `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.mul(self.inv(x), self.inv(y)), x), y)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i + 1..n).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Raw table row, used by serialization.
    pub fn table_row(&self, i: usize) -> &[usize] {
        let n = self.order();
        &self.inner.table[i * n..(i + 1) * n]
    }

    /// A compact fingerprint of the table, used to key caches.
    pub fn table_digest(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for &v in &self.inner.table {
            h ^= v as u64;
            h = h.wrapping_mul(0x1000_0000_01b3);
        }
        h
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next_permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}
