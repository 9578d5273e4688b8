//! Finitely presented groups: words, presentations, quotients, integral
//! abelianization and homomorphisms onto Z/2.

mod abelian;
mod presentation;
mod signhom;
mod snf;
mod word;

pub use abelian::{abelianization, relation_matrix, AbelianGroup};
pub use presentation::{quotient, Presentation};
pub use signhom::{sign_homs, SignHom};
pub use snf::{smith_normal_form, IntMatrix, SmithForm};
pub use word::{free_reduce, Word};

#[cfg(test)]
mod tests;
