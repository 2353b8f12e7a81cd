//! Enumeration caps.
//!
//! Everything here grows factorially, so each enumerator checks a cap before
//! it starts. `WOL_NMAX_OVERRIDE=<k>` raises every `n` cap to at least `k`
//! and lifts the size caps entirely.

use crate::error::{Error, Result};

pub const ENV_OVERRIDE: &str = "WOL_NMAX_OVERRIDE";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` accepted by general operations.
    pub n_general: usize,
    /// Largest `n` for exhaustive sweeps over all of S_n.
    pub n_sweep: usize,
    /// Largest `n` for brute-force linear extension enumeration.
    pub n_linext: usize,
    /// Largest interval handled by the descent-preserving isomorphism oracle.
    pub dp_iso: usize,
    /// Largest equivalence class the BFS will build.
    pub class_size: usize,
    /// Largest number of standard tableaux enumerated for one shape.
    pub st_count: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            n_general: 20,
            n_sweep: 7,
            n_linext: 9,
            dp_iso: 60,
            class_size: 100_000,
            st_count: 1_000_000,
        }
    }
}

impl Caps {
    /// Defaults, adjusted by the override variable when it is set.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Some(k) = std::env::var(ENV_OVERRIDE)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            caps.n_general = caps.n_general.max(k).min(32);
            caps.n_sweep = caps.n_sweep.max(k);
            caps.n_linext = caps.n_linext.max(k);
            caps.dp_iso = usize::MAX;
            caps.class_size = usize::MAX;
            caps.st_count = usize::MAX;
        }
        caps
    }

    pub fn check(what: &'static str, limit: usize, reached: usize) -> Result<()> {
        if reached > limit {
            Err(Error::Cap {
                what,
                limit,
                reached,
            })
        } else {
            Ok(())
        }
    }
}
