//! Deterministic parallel reduction.
//!
//! Group sums (alternators, Γ-sums, Poincaré sums) parallelize over group
//! elements. Although the engine's arithmetic is exact (so any grouping of
//! an associative-commutative reduction yields the same value), reductions
//! here always use a fixed binary tree over the index order, so the work
//! split is independent of thread count and scheduling.

/// Map `lo..hi` through `term` and combine with `combine` over a fixed
/// midpoint-split tree. Returns `None` for an empty range.
pub fn tree_map_reduce<T, F, C>(lo: usize, hi: usize, term: &F, combine: &C) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
    C: Fn(T, T) -> T + Sync,
{
    const SEQUENTIAL_CUTOFF: usize = 16;
    if lo >= hi {
        return None;
    }
    if hi - lo <= SEQUENTIAL_CUTOFF {
        let mut acc = term(lo);
        for i in lo + 1..hi {
            acc = combine(acc, term(i));
        }
        return Some(acc);
    }
    let mid = lo + (hi - lo) / 2;
    let (left, right) = rayon::join(
        || tree_map_reduce(lo, mid, term, combine),
        || tree_map_reduce(mid, hi, term, combine),
    );
    match (left, right) {
        (Some(a), Some(b)) => Some(combine(a, b)),
        (a, None) => a,
        (None, b) => b,
    }
}
