//! Exact computational group theory for Euclidean 2-orbifolds, and the cusp
//! types of orbifolds covered by hyperbolic knot complements.
//!
//! ```
//! use orbiforge::wallpaper::{model, orientation_double_cover};
//!
//! let (_, cover) = orientation_double_cover(&model("p4m").unwrap()).unwrap();
//! assert_eq!(cover.thurston(), "S2(2,4,4)");
//! ```

pub mod cosetenum;
pub mod error;
pub mod exactgeom;
pub mod fixtures;
pub mod fpgroup;
pub mod knotcusp;
pub mod lattice;
pub mod presfile;
pub mod verify;
pub mod wallpaper;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/presentations.md")]
    mod presentations {}
    #[doc = include_str!("../../../book/src/cosets.md")]
    mod cosets {}
    #[doc = include_str!("../../../book/src/wallpaper.md")]
    mod wallpaper {}
    #[doc = include_str!("../../../book/src/lattices.md")]
    mod lattices {}
    #[doc = include_str!("../../../book/src/cusps.md")]
    mod cusps {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
