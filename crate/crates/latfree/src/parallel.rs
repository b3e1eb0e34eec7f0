use std::thread;

use latfree_core::{enumerate_3d_shard, merge_shards, ClassificationResult, Result};

/// Runs the 3D parameter search on `jobs` threads. The merged result is
/// identical for every `jobs >= 1`.
pub fn enumerate_3d_parallel(jobs: usize) -> Result<ClassificationResult> {
    let jobs = jobs.max(1);
    if jobs == 1 {
        return latfree_core::enumerate_3d();
    }
    let shards = thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|i| scope.spawn(move || enumerate_3d_shard(i, jobs)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("enumeration worker panicked"))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(merge_shards(shards))
}
