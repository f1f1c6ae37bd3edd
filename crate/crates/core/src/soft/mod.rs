//! Finite universes and subsets of them, the value lattice for soft sets.
//!
//! A universe holds at most 64 labelled elements so that every subset packs
//! into one machine word; all lattice operations are single bit operations.

mod softset;

pub use softset::{ImageClass, SoftSet};

use std::fmt;
use std::sync::Arc;

/// Largest supported universe; subsets are stored as one `u64` mask.
pub const MAX_UNIVERSE: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SoftError {
    /// Two soft sets or value sets live over different universes.
    UniverseMismatch,
    /// Two soft sets are parameterized by different groups.
    GroupMismatch,
    /// Bad universe description (empty, too large, duplicate labels).
    BadUniverse(String),
    /// An element index is out of range for the group.
    InvalidElement { index: usize, order: usize },
    /// An intersection over an empty family was requested.
    EmptyFamily,
}

impl fmt::Display for SoftError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SoftError::UniverseMismatch => write!(f, "universes differ"),
            SoftError::GroupMismatch => write!(f, "parameter groups differ"),
            SoftError::BadUniverse(msg) => write!(f, "bad universe: {msg}"),
            SoftError::InvalidElement { index, order } => {
                write!(f, "element index {index} out of range for group of order {order}")
            }
            SoftError::EmptyFamily => write!(f, "empty family"),
        }
    }
}

impl std::error::Error for SoftError {}

struct UniverseInner {
    labels: Vec<String>,
}

/// A finite universe of labelled points; cheap to clone.
#[derive(Clone)]
pub struct Universe {
    inner: Arc<UniverseInner>,
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.labels == other.inner.labels
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Universe{:?}", self.inner.labels)
    }
}

impl Universe {
    pub fn new(labels: Vec<String>) -> Result<Self, SoftError> {
        if labels.is_empty() {
            return Err(SoftError::BadUniverse("needs at least one element".into()));
        }
        if labels.len() > MAX_UNIVERSE {
            return Err(SoftError::BadUniverse(format!(
                "{} elements exceed the supported maximum of {MAX_UNIVERSE}",
                labels.len()
            )));
        }
        for (i, a) in labels.iter().enumerate() {
            if a.is_empty() || a.chars().any(|c| c.is_whitespace() || c == ',' || c == '{' || c == '}') {
                return Err(SoftError::BadUniverse(format!("label {a:?} is not a plain token")));
            }
            if labels[..i].contains(a) {
                return Err(SoftError::BadUniverse(format!("duplicate label {a:?}")));
            }
        }
        Ok(Universe { inner: Arc::new(UniverseInner { labels }) })
    }

    /// A universe of `m` points labelled `a, b, c, ...` (then `x27, x28, ...`).
    pub fn alphabetic(m: usize) -> Result<Self, SoftError> {
        let labels = (0..m)
            .map(|i| {
                if i < 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("x{}", i + 1)
                }
            })
            .collect();
        Self::new(labels)
    }

    pub fn size(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.labels.iter().position(|l| l == label)
    }

    /// The mask with every point present.
    pub fn full_mask(&self) -> u64 {
        if self.size() == 64 {
            u64::MAX
        } else {
            (1u64 << self.size()) - 1
        }
    }

    pub fn render_mask(&self, mask: u64) -> String {
        let mut out = String::from("{");
        let mut first = true;
        for i in 0..self.size() {
            if mask & (1u64 << i) != 0 {
                if !first {
                    out.push(',');
                }
                out.push_str(self.label(i));
                first = false;
            }
        }
        out.push('}');
        out
    }
}

/// A subset of a universe, ordered by inclusion (never by cardinality).
#[derive(Clone, PartialEq, Eq)]
pub struct USet {
    universe: Universe,
    mask: u64,
}

impl fmt::Debug for USet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.universe.render_mask(self.mask))
    }
}

impl fmt::Display for USet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.universe.render_mask(self.mask))
    }
}

impl USet {
    pub fn empty(universe: &Universe) -> Self {
        USet { universe: universe.clone(), mask: 0 }
    }

    pub fn full(universe: &Universe) -> Self {
        USet { universe: universe.clone(), mask: universe.full_mask() }
    }

    /// Builds from a raw mask; bits outside the universe are rejected.
    pub fn from_mask(universe: &Universe, mask: u64) -> Result<Self, SoftError> {
        if mask & !universe.full_mask() != 0 {
            return Err(SoftError::BadUniverse("mask has bits outside the universe".into()));
        }
        Ok(USet { universe: universe.clone(), mask })
    }

    pub fn from_labels(universe: &Universe, labels: &[&str]) -> Result<Self, SoftError> {
        let mut mask = 0u64;
        for l in labels {
            let i = universe
                .index_of(l)
                .ok_or_else(|| SoftError::BadUniverse(format!("unknown label {l:?}")))?;
            mask |= 1u64 << i;
        }
        Ok(USet { universe: universe.clone(), mask })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn card(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask & (1u64 << i) != 0
    }

    pub fn union(&self, other: &USet) -> Result<USet, SoftError> {
        self.check(other)?;
        Ok(USet { universe: self.universe.clone(), mask: self.mask | other.mask })
    }

    pub fn intersect(&self, other: &USet) -> Result<USet, SoftError> {
        self.check(other)?;
        Ok(USet { universe: self.universe.clone(), mask: self.mask & other.mask })
    }

    pub fn is_subset(&self, other: &USet) -> Result<bool, SoftError> {
        self.check(other)?;
        Ok(self.mask & !other.mask == 0)
    }

    pub fn is_proper_subset(&self, other: &USet) -> Result<bool, SoftError> {
        Ok(self.is_subset(other)? && self.mask != other.mask)
    }

    fn check(&self, other: &USet) -> Result<(), SoftError> {
        if self.universe != other.universe {
            return Err(SoftError::UniverseMismatch);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_validation() {
        assert!(Universe::new(vec![]).is_err());
        assert!(Universe::new(vec!["a".into(), "a".into()]).is_err());
        assert!(Universe::new(vec!["a b".into()]).is_err());
        assert!(Universe::new(vec!["ok".into(), "fine".into()]).is_ok());
        assert_eq!(Universe::alphabetic(2).unwrap().labels(), &["a", "b"]);
        // one machine word is the hard ceiling
        assert!(Universe::alphabetic(64).is_ok());
        assert!(Universe::alphabetic(65).is_err());
        assert_eq!(Universe::alphabetic(64).unwrap().full_mask(), u64::MAX);
    }

    #[test]
    fn uset_lattice_basics() {
        let u = Universe::alphabetic(3).unwrap();
        let ab = USet::from_labels(&u, &["a", "b"]).unwrap();
        let bc = USet::from_labels(&u, &["b", "c"]).unwrap();
        assert_eq!(ab.union(&bc).unwrap(), USet::full(&u));
        assert_eq!(ab.intersect(&bc).unwrap(), USet::from_labels(&u, &["b"]).unwrap());
        assert!(USet::empty(&u).is_subset(&ab).unwrap());
        assert!(!ab.is_subset(&bc).unwrap());
        assert!(!bc.is_subset(&ab).unwrap());
        assert!(ab.is_proper_subset(&USet::full(&u)).unwrap());
        assert!(!ab.is_proper_subset(&ab).unwrap());
        assert_eq!(ab.card(), 2);
        assert_eq!(ab.to_string(), "{a,b}");
        assert_eq!(USet::empty(&u).to_string(), "{}");
    }

    #[test]
    fn mismatched_universes_error() {
        let u2 = Universe::alphabetic(2).unwrap();
        let u3 = Universe::alphabetic(3).unwrap();
        let a = USet::full(&u2);
        let b = USet::full(&u3);
        assert_eq!(a.union(&b), Err(SoftError::UniverseMismatch));
    }
}
