//! Sizing of the order-table window.
//!
//! A semigroup's order table is materialized through `conductor + k * m`,
//! where `k` defaults to [`DEFAULT_MULTIPLIER`] and can be overridden through
//! the `NUMCURVE_WINDOW` environment variable. The table grows on demand past
//! that point, so the multiplier only affects how far the truncated
//! "for every multiple of m" checks look.

use std::sync::OnceLock;

pub const ENV_VAR: &str = "NUMCURVE_WINDOW";
pub const DEFAULT_MULTIPLIER: i64 = 4;
pub const MIN_MULTIPLIER: i64 = 2;

static MULTIPLIER: OnceLock<i64> = OnceLock::new();

/// Window multiplier `k`, read once from the environment.
pub fn multiplier() -> i64 {
    *MULTIPLIER.get_or_init(|| {
        std::env::var(ENV_VAR)
            .ok()
            .and_then(|v| parse_multiplier(&v))
            .unwrap_or(DEFAULT_MULTIPLIER)
    })
}

fn parse_multiplier(raw: &str) -> Option<i64> {
    raw.trim()
        .parse::<i64>()
        .ok()
        .map(|k| k.max(MIN_MULTIPLIER))
}

/// Number of multiples of `m` that truncated "for all λ" checks visit.
///
/// Never fewer than `m + 1`: the reduction number of the maximal ideal is at
/// most `m - 1`, and every failure of the order-shift identities surfaces
/// within that many steps past the Apéry element.
pub fn check_multiples(multiplicity: i64, window_end: i64, top_apery: i64) -> i64 {
    let from_window = (window_end - top_apery).max(0) / multiplicity.max(1);
    from_window.max(3).max(multiplicity + 1)
}
