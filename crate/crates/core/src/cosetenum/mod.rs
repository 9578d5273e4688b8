//! Todd–Coxeter coset enumeration, coset-table queries, Schreier generators
//! and Reidemeister–Schreier rewriting.

mod enumerate;
mod schreier;
mod table;

pub use enumerate::todd_coxeter;
pub use schreier::{reidemeister_schreier, schreier_generators, SubgroupPresentation};
pub use table::CosetTable;

/// Environment variable overriding the coset limit.
pub const MAX_COSETS_ENV: &str = "ORBIFORGE_MAX_COSETS";

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

/// The coset limit, honouring `ORBIFORGE_MAX_COSETS` when it parses.
pub fn default_max_cosets() -> usize {
    std::env::var(MAX_COSETS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or(DEFAULT_MAX_COSETS)
}

/// Enumerates with [`default_max_cosets`].
pub fn enumerate(
    p: &crate::fpgroup::Presentation,
    sub: &[crate::fpgroup::Word],
) -> crate::Result<CosetTable> {
    todd_coxeter(p, sub, default_max_cosets())
}

#[cfg(test)]
mod tests;
