//! Desk-scale size guards.
//!
//! Enumerating `S_n` and building `h x h` tables is factorial in `n`; every
//! entry point that enumerates a group checks against these caps. The
//! `PERMION_MAX_N` environment variable may lower (never raise) the caps,
//! which keeps CI time budgets in check.

use std::sync::OnceLock;

/// Largest degree for which `enumerate_group` will run.
pub const MAX_ENUMERATE_N: usize = 8;
/// Largest degree for a full multiplication table.
pub const MAX_TABLE_N: usize = 6;
/// Largest degree for conjugacy-class enumeration.
pub const MAX_CLASSES_N: usize = 7;
/// Largest degree for the regular representation (matrices are n! x n!).
pub const MAX_REGULAR_N: usize = 4;
/// Largest degree for partition enumeration and hook counts.
pub const MAX_PARTITIONS_N: usize = 10;
/// Largest degree for standard-tableau enumeration.
pub const MAX_TABLEAUX_N: usize = 8;
/// Largest first-quantized amplitude array (`d^N`).
pub const MAX_TENSOR_SIZE: usize = 1_000_000;
/// Largest fermionic mode count (basis is `2^d`).
pub const MAX_FERMION_MODES: usize = 12;
/// Largest truncated bosonic basis (`(M+1)^d`).
pub const MAX_BOSON_BASIS: usize = 100_000;

fn env_max_n() -> Option<usize> {
    static LIMIT: OnceLock<Option<usize>> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var("PERMION_MAX_N")
            .ok()
            .and_then(|v| v.trim().parse().ok())
    })
}

/// Effective cap: the compiled default, lowered by `PERMION_MAX_N` if set.
pub fn effective(default: usize) -> usize {
    match env_max_n() {
        Some(limit) => default.min(limit),
        None => default,
    }
}
