//! Worker pool over independent trial indices. Results come back in
//! index order, so parallel and serial runs merge identically.

use rayon::prelude::*;

use crate::CliResult;

pub fn indexed_map<T, F>(n: usize, threads: usize, f: F) -> CliResult<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> wre::Result<T> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| wre::Error::Parameter(format!("thread pool: {e}")))?;
    let results: Vec<wre::Result<T>> = pool.install(|| (0..n).into_par_iter().map(&f).collect());
    let mut out = Vec::with_capacity(n);
    for r in results {
        out.push(r?);
    }
    Ok(out)
}
