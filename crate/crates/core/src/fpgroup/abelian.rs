use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::presentation::Presentation;
use super::snf::{smith_normal_form, IntMatrix};

/// `Z^free_rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_k` with `d₁ | d₂ | …` and every `dᵢ ≥ 2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn new(free_rank: usize, torsion: &[u64]) -> Self {
        AbelianGroup { free_rank, torsion: torsion.iter().map(|&d| BigInt::from(d)).collect() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order when finite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    /// Dimension of `Hom(G, Z/2)` over F₂.
    pub fn two_rank(&self) -> usize {
        let two = BigInt::from(2);
        self.free_rank + self.torsion.iter().filter(|d| (*d % &two).is_zero()).count()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn relation_matrix(p: &Presentation) -> IntMatrix {
    let n = p.num_generators();
    let rows: Vec<Vec<i64>> = p.relators().iter().map(|r| r.exponent_sums(n)).collect();
    if rows.is_empty() {
        IntMatrix::zeros(0, n)
    } else {
        IntMatrix::from_rows(&rows)
    }
}

pub fn abelianization(p: &Presentation) -> AbelianGroup {
    let snf = smith_normal_form(&relation_matrix(p));
    let factors = snf.invariant_factors();
    AbelianGroup {
        free_rank: p.num_generators() - factors.len(),
        torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}
