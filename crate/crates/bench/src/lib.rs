//! Inputs shared by the benchmarks.

use tanglekit::generate::candidates;
use tanglekit::Tangle;

/// Every generated candidate up to `max` crossings as a tree.
pub fn candidate_trees(max: u32) -> Vec<Tangle> {
    candidates(max).iter().map(|c| c.tangle()).collect()
}
