use std::sync::atomic::{AtomicU64, Ordering::Relaxed};

use serde::Serialize;

/// Counters for one search, summed over every node it expanded including
/// the nested searches on modules.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
    pub max_depth: u64,
    /// Nodes that branched on a hole.
    pub holes: u64,
    /// Nodes that branched on a small witness.
    pub small_aws: u64,
    /// Nodes that branched on a long witness.
    pub long_aws: u64,
    /// Forced insertions of a common base neighbor into a parked set.
    pub case1: u64,
    /// Nested searches on a non-interval module.
    pub recursions: u64,
    pub parks: u64,
    /// Leaves that reached the merge phase.
    pub merges: u64,
    /// Children dropped because the budget could not cover the parked set.
    pub pruned: u64,
    /// Merges whose result was not an interval graph. Always zero unless
    /// something upstream is broken.
    pub rejected_merges: u64,
    pub ms: f64,
}

impl SearchStats {
    pub fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.leaves += other.leaves;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.holes += other.holes;
        self.small_aws += other.small_aws;
        self.long_aws += other.long_aws;
        self.case1 += other.case1;
        self.recursions += other.recursions;
        self.parks += other.parks;
        self.merges += other.merges;
        self.pruned += other.pruned;
        self.rejected_merges += other.rejected_merges;
        self.ms += other.ms;
    }
}

#[derive(Default)]
pub(crate) struct Counters {
    pub nodes: AtomicU64,
    pub leaves: AtomicU64,
    pub max_depth: AtomicU64,
    pub holes: AtomicU64,
    pub small_aws: AtomicU64,
    pub long_aws: AtomicU64,
    pub case1: AtomicU64,
    pub recursions: AtomicU64,
    pub parks: AtomicU64,
    pub merges: AtomicU64,
    pub pruned: AtomicU64,
    pub rejected_merges: AtomicU64,
}

pub(crate) fn bump(c: &AtomicU64) {
    c.fetch_add(1, Relaxed);
}

impl Counters {
    pub fn enter(&self, depth: usize) {
        bump(&self.nodes);
        self.max_depth.fetch_max(depth as u64, Relaxed);
    }

    pub fn snapshot(&self, ms: f64) -> SearchStats {
        SearchStats {
            nodes: self.nodes.load(Relaxed),
            leaves: self.leaves.load(Relaxed),
            max_depth: self.max_depth.load(Relaxed),
            holes: self.holes.load(Relaxed),
            small_aws: self.small_aws.load(Relaxed),
            long_aws: self.long_aws.load(Relaxed),
            case1: self.case1.load(Relaxed),
            recursions: self.recursions.load(Relaxed),
            parks: self.parks.load(Relaxed),
            merges: self.merges.load(Relaxed),
            pruned: self.pruned.load(Relaxed),
            rejected_merges: self.rejected_merges.load(Relaxed),
            ms,
        }
    }
}
