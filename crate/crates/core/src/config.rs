//! Resource limits shared by the searches, builders and verifiers.

/// Limits that turn runaway requests into [`crate::Error::Budget`] errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Bytes allowed for one materialized adjacency matrix.
    pub mem_bytes: usize,
    /// Largest explicit element list (groups, closures, built sets).
    pub max_elements: usize,
    /// Largest number of cosets enumerated by the maximality checks.
    pub max_cosets: usize,
    /// Largest degree for `build_g_set`.
    pub g_set_cap: usize,
    /// Largest ambient degree for the coset-cycle maximality test.
    pub subgroup_ambient_cap: usize,
    /// Largest ambient degree for the general maximality scan over `Sym(m)`.
    pub scan_ambient_cap: usize,
    /// Sets up to this size are verified pairwise; larger ones are sampled.
    pub exhaustive_limit: usize,
    pub sample_pairs: u64,
    pub seed: u64,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            mem_bytes: 4 << 20,
            max_elements: 400_000,
            max_cosets: 50_000,
            g_set_cap: 13,
            subgroup_ambient_cap: 11,
            scan_ambient_cap: 9,
            exhaustive_limit: 5000,
            sample_pairs: 1_000_000,
            seed: 0x5eed_2024,
            workers: None,
        }
    }
}

impl Budget {
    /// Runs `f` on a pool sized by `workers`, or directly on the global pool.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self.workers {
            Some(w) => rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .expect("thread pool")
                .install(f),
            None => f(),
        }
    }
}
