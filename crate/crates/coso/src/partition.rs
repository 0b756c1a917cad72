//! Set-partition algebra: refinement order, meet, block restriction, and
//! exhaustive enumeration in restricted-growth-string order.

use crate::error::{Error, Result};
use crate::set::Subset;

/// Partition of a carrier subset into disjoint nonempty blocks, kept in
/// canonical order (sorted by least member index).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    carrier: Subset,
    blocks: Vec<Subset>,
}

impl Partition {
    pub fn from_blocks(blocks: Vec<Subset>) -> Result<Partition> {
        let mut carrier = Subset::EMPTY;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::CarrierMismatch("empty block".into()));
            }
            if !carrier.intersection(*b).is_empty() {
                return Err(Error::CarrierMismatch("overlapping blocks".into()));
            }
            carrier = carrier.union(*b);
        }
        let mut blocks = blocks;
        blocks.sort_by_key(|b| b.least());
        Ok(Partition { carrier, blocks })
    }

    /// The bottom element: every member in its own block.
    pub fn singletons(carrier: Subset) -> Partition {
        let blocks = carrier.indices().map(Subset::singleton).collect();
        Partition { carrier, blocks }
    }

    /// The top element `{carrier}`.
    pub fn whole(carrier: Subset) -> Partition {
        debug_assert!(!carrier.is_empty());
        Partition {
            carrier,
            blocks: vec![carrier],
        }
    }

    pub fn carrier(&self) -> Subset {
        self.carrier
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_singletons(&self) -> bool {
        self.blocks.iter().all(|b| b.is_singleton())
    }

    pub fn is_whole(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn has_block(&self, b: Subset) -> bool {
        self.blocks.contains(&b)
    }

    pub fn block_containing(&self, index: usize) -> Option<Subset> {
        self.blocks.iter().copied().find(|b| b.contains(index))
    }

    /// Extends the carrier with a new singleton block `{index}`.
    pub fn with_singleton(&self, index: usize) -> Partition {
        debug_assert!(!self.carrier.contains(index));
        let mut blocks = self.blocks.clone();
        blocks.push(Subset::singleton(index));
        blocks.sort_by_key(|b| b.least());
        Partition {
            carrier: self.carrier.union(Subset::singleton(index)),
            blocks,
        }
    }

    /// Replaces the blocks of `family` by their union (a fusion step).
    pub fn merge_family(&self, family: &[Subset]) -> Partition {
        let union = family
            .iter()
            .fold(Subset::EMPTY, |acc, b| acc.union(*b));
        let mut blocks: Vec<Subset> = self
            .blocks
            .iter()
            .copied()
            .filter(|b| !family.contains(b))
            .collect();
        blocks.push(union);
        blocks.sort_by_key(|b| b.least());
        Partition {
            carrier: self.carrier,
            blocks,
        }
    }

    /// Coarsest common refinement: all nonempty pairwise intersections.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch(
                "meet of partitions over different carriers".into(),
            ));
        }
        let mut blocks = Vec::new();
        for a in &self.blocks {
            for b in &other.blocks {
                let c = a.intersection(*b);
                if !c.is_empty() {
                    blocks.push(c);
                }
            }
        }
        blocks.sort_by_key(|b| b.least());
        Ok(Partition {
            carrier: self.carrier,
            blocks,
        })
    }

    /// True iff every block of `self` is contained in a block of `other`.
    pub fn is_finer_or_equal(&self, other: &Partition) -> Result<bool> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch(
                "refinement test over different carriers".into(),
            ));
        }
        Ok(self.blocks.iter().all(|a| {
            other
                .block_containing(a.least())
                .is_some_and(|b| a.is_subset_of(b))
        }))
    }

    pub fn is_strictly_finer(&self, other: &Partition) -> Result<bool> {
        Ok(self.is_finer_or_equal(other)? && self != other)
    }

    /// The blocks of `self` whose union is `c`. Errors unless `c` is exactly
    /// a union of blocks.
    pub fn restrict_blocks(&self, c: Subset) -> Result<Vec<Subset>> {
        if !c.is_subset_of(self.carrier) {
            return Err(Error::NotASubset(format!(
                "{c:?} is not inside the carrier"
            )));
        }
        let picked: Vec<Subset> = self
            .blocks
            .iter()
            .copied()
            .filter(|b| b.is_subset_of(c))
            .collect();
        let covered = picked.iter().fold(Subset::EMPTY, |acc, b| acc.union(*b));
        if covered != c {
            return Err(Error::CarrierMismatch(format!(
                "{c:?} is not a union of blocks"
            )));
        }
        Ok(picked)
    }
}

impl std::fmt::Debug for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b:?}")?;
        }
        write!(f, "}}")
    }
}

/// Streams every partition of `carrier` exactly once, in restricted-growth
/// string order.
pub fn enumerate_partitions(carrier: Subset, limit: usize) -> Result<PartitionIter> {
    let members: Vec<usize> = carrier.indices().collect();
    if members.len() > limit {
        return Err(Error::LimitExceeded(format!(
            "partition enumeration over {} members (limit {limit})",
            members.len()
        )));
    }
    Ok(PartitionIter {
        members,
        rgs: Vec::new(),
        started: false,
        done: false,
    })
}

pub struct PartitionIter {
    members: Vec<usize>,
    rgs: Vec<usize>,
    started: bool,
    done: bool,
}

impl PartitionIter {
    fn emit(&self) -> Partition {
        let nblocks = self.rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Subset::EMPTY; nblocks];
        for (pos, &label) in self.rgs.iter().enumerate() {
            blocks[label] = blocks[label].union(Subset::singleton(self.members[pos]));
        }
        Partition::from_blocks(blocks).expect("restricted growth strings yield valid partitions")
    }

    /// Advances the restricted growth string `a` where `a[0] = 0` and
    /// `a[i] <= max(a[..i]) + 1`.
    fn step(&mut self) -> bool {
        let n = self.members.len();
        for i in (1..n).rev() {
            let prefix_max = self.rgs[..i].iter().copied().max().unwrap_or(0);
            if self.rgs[i] <= prefix_max {
                self.rgs[i] += 1;
                for j in i + 1..n {
                    self.rgs[j] = 0;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.members.is_empty() {
                self.done = true;
                return None;
            }
            self.rgs = vec![0; self.members.len()];
            return Some(self.emit());
        }
        if self.step() {
            Some(self.emit())
        } else {
            self.done = true;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(blocks: &[&[usize]]) -> Partition {
        Partition::from_blocks(
            blocks
                .iter()
                .map(|b| Subset::from_indices(b.iter().copied()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn meet_is_pairwise_intersections() {
        let p = part(&[&[0, 1], &[2]]);
        let q = part(&[&[0], &[1, 2]]);
        assert_eq!(p.meet(&q).unwrap(), part(&[&[0], &[1], &[2]]));
        assert_eq!(p.meet(&p).unwrap(), p);
    }

    #[test]
    fn refinement_order() {
        let carrier = Subset::from_indices([0, 1, 2]);
        let bot = Partition::singletons(carrier);
        let top = Partition::whole(carrier);
        assert!(bot.is_strictly_finer(&top).unwrap());
        assert!(!top.is_strictly_finer(&top).unwrap());
        let p1 = part(&[&[0, 3, 4], &[1], &[2]]);
        let p2 = part(&[&[3, 4], &[0], &[1], &[2]]);
        assert!(p2.is_strictly_finer(&p1).unwrap());
        assert_eq!(p2.meet(&p1).unwrap(), p2);
    }

    #[test]
    fn restrict_blocks_decomposes() {
        let p2 = part(&[&[3, 4], &[0], &[1], &[2]]);
        let c = Subset::from_indices([0, 3, 4]);
        let picked = p2.restrict_blocks(c).unwrap();
        assert_eq!(
            picked,
            vec![Subset::singleton(0), Subset::from_indices([3, 4])]
        );
        // A block restricts to itself.
        let b = Subset::from_indices([3, 4]);
        assert_eq!(p2.restrict_blocks(b).unwrap(), vec![b]);
        // Not a union of blocks.
        assert!(p2.restrict_blocks(Subset::from_indices([0, 3])).is_err());
    }

    #[test]
    fn enumeration_counts_are_bell_numbers() {
        // Bell numbers 1, 2, 5, 15, 52 for 1..=5 members.
        for (n, bell) in [(1usize, 1usize), (2, 2), (3, 5), (4, 15), (5, 52)] {
            let carrier = Subset::from_indices(0..n);
            let count = enumerate_partitions(carrier, 12).unwrap().count();
            assert_eq!(count, bell, "Bell({n})");
        }
        assert!(enumerate_partitions(Subset::from_indices(0..13), 12).is_err());
    }

    #[test]
    fn enumeration_yields_each_once() {
        let carrier = Subset::from_indices(0..4);
        let mut seen = std::collections::HashSet::new();
        for p in enumerate_partitions(carrier, 12).unwrap() {
            assert_eq!(p.carrier(), carrier);
            assert!(seen.insert(format!("{p:?}")), "duplicate {p:?}");
        }
        assert_eq!(seen.len(), 15);
    }

    #[test]
    fn meet_properties_exhaustive_small() {
        let carrier = Subset::from_indices(0..4);
        let all: Vec<Partition> = enumerate_partitions(carrier, 12).unwrap().collect();
        for p in &all {
            for q in &all {
                let m = p.meet(q).unwrap();
                assert_eq!(m, q.meet(p).unwrap());
                assert!(m.is_finer_or_equal(p).unwrap());
                assert!(m.is_finer_or_equal(q).unwrap());
                assert!(m.is_strictly_finer(p).unwrap() || &m == p);
            }
        }
    }
}
