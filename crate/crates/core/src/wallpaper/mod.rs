//! The 17 wallpaper groups as exact isometry groups, and classification of
//! their finite-index subgroups.
mod models;
mod signature;
mod subgroup;

pub use models::{all_models, model, ModelGroup};
pub use signature::{all_signatures, euler_characteristic, signature, Names, OrbifoldSignature, Underlying, CRYSTALLOGRAPHIC_NAMES};
pub use subgroup::SubgroupHandle;

use crate::error::Result;
use crate::fpgroup::SignHom;

/// The homomorphism `g ↦ det ρ(g)`.
pub fn orientation_character(g: &ModelGroup) -> SignHom {
    SignHom::new(g.rep().iter().map(|f| f.det_sign() as i8).collect()).expect("signs are ±1")
}

/// The orientation-preserving subgroup and its signature.
pub fn orientation_double_cover(g: &ModelGroup) -> Result<(SubgroupHandle, OrbifoldSignature)> {
    let h = SubgroupHandle::kernel(g, &orientation_character(g))?;
    let sig = h.classify()?;
    Ok((h, sig))
}

#[cfg(test)]
mod tests;
