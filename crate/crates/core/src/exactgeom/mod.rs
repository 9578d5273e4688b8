//! Exact arithmetic in Q(√3) and affine isometries of the Euclidean plane.
//!
//! Every wallpaper group used in this crate has a faithful representation
//! whose matrix entries and translation parts lie in Q(√3), so equality of
//! isometries is decided exactly.

mod isometry;
mod qnum;

pub use isometry::{classify_isometry, fixed_point, IsoClass, Isometry, Mat2, Vec2};
pub use qnum::QuadNum;

/// `f ∘ g`.
pub fn compose(f: &Isometry, g: &Isometry) -> Isometry {
    f.compose(g)
}
