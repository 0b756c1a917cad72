//! Ground set of user ids and packed subset masks.
//!
//! Public interfaces speak user ids; internally everything is a bitmask over
//! the ground set's sorted index positions, which keeps subset algebra and
//! power-set scans cheap for the sizes the exhaustive paths allow.

use crate::error::{Error, Result};

pub type UserId = u32;

/// Subset of a ground set, packed as a bitmask over member indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(index: usize) -> Subset {
        Subset(1 << index)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Subset {
        let mut bits = 0u32;
        for i in indices {
            bits |= 1 << i;
        }
        Subset(bits)
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_singleton(self) -> bool {
        self.len() == 1
    }

    /// Index of the smallest member. Panics on the empty set.
    pub fn least(self) -> usize {
        debug_assert!(!self.is_empty());
        self.0.trailing_zeros() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits >> i & 1 == 1)
    }

    /// All subsets of `self`, the empty set and `self` included.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        // Standard subset-walk of a mask: s -> (s - 1) & full.
        let mut cur = Some(Subset(full));
        std::iter::from_fn(move || {
            let out = cur?;
            cur = if out.0 == 0 {
                None
            } else {
                Some(Subset(out.0.wrapping_sub(1) & full))
            };
            Some(out)
        })
    }
}

impl std::fmt::Debug for Subset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Ordered ground set `V` mapping user ids to bit positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    ids: Vec<UserId>,
}

impl Universe {
    pub fn new(mut ids: Vec<UserId>) -> Result<Universe> {
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        if ids.len() != before {
            return Err(Error::Instance("duplicate user ids".into()));
        }
        if ids.len() > 32 {
            return Err(Error::Instance(format!(
                "ground set of {} users exceeds the 32-user representation cap",
                ids.len()
            )));
        }
        Ok(Universe { ids })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[UserId] {
        &self.ids
    }

    pub fn id_at(&self, index: usize) -> UserId {
        self.ids[index]
    }

    pub fn index_of(&self, id: UserId) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    pub fn full(&self) -> Subset {
        if self.ids.is_empty() {
            Subset::EMPTY
        } else {
            Subset((1u64.wrapping_shl(self.ids.len() as u32) - 1) as u32)
        }
    }

    pub fn subset_of_ids(&self, ids: &[UserId]) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for &id in ids {
            let idx = self
                .index_of(id)
                .ok_or_else(|| Error::NotASubset(format!("unknown user id {id}")))?;
            s = s.union(Subset::singleton(idx));
        }
        Ok(s)
    }

    pub fn ids_of(&self, s: Subset) -> Vec<UserId> {
        s.indices().map(|i| self.ids[i]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_algebra() {
        let a = Subset::from_indices([0, 2]);
        let b = Subset::from_indices([2, 3]);
        assert_eq!(a.union(b), Subset::from_indices([0, 2, 3]));
        assert_eq!(a.intersection(b), Subset::singleton(2));
        assert_eq!(a.difference(b), Subset::singleton(0));
        assert!(a.intersection(b).is_subset_of(a));
        assert_eq!(a.least(), 0);
        assert_eq!(b.len(), 2);
    }

    #[test]
    fn subset_walk_is_complete() {
        let s = Subset::from_indices([0, 1, 3]);
        let all: Vec<Subset> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|t| t.is_subset_of(s)));
    }

    #[test]
    fn universe_maps_ids() {
        let u = Universe::new(vec![4, 1, 9]).unwrap();
        assert_eq!(u.ids(), &[1, 4, 9]);
        assert_eq!(u.index_of(4), Some(1));
        assert_eq!(u.ids_of(u.full()), vec![1, 4, 9]);
        assert!(u.subset_of_ids(&[7]).is_err());
        assert!(Universe::new(vec![1, 1]).is_err());
    }
}
