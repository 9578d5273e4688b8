use super::presentation::Presentation;
use super::word::Word;
use crate::error::{Error, Result};

/// A homomorphism to `{+1, -1}` given by its values on generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignHom {
    signs: Vec<i8>,
}

impl SignHom {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidArgument("signs must be +1 or -1".into()));
        }
        Ok(SignHom { signs })
    }

    /// Parses `gen=-1,gen=+1,…`; unmentioned generators map to +1.
    pub fn parse(spec: &str, p: &Presentation) -> Result<Self> {
        let mut signs = vec![1i8; p.num_generators()];
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (g, v) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("expected `gen=±1`, got `{item}`")))?;
            let idx = p.generator_index(g.trim())?;
            signs[idx] = match v.trim() {
                "-1" | "-" => -1,
                "1" | "+1" | "+" => 1,
                other => return Err(Error::InvalidArgument(format!("bad sign `{other}`"))),
            };
        }
        Ok(SignHom { signs })
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn eval(&self, w: &Word) -> i8 {
        let odd = w.letters().iter().filter(|l| self.signs[l.unsigned_abs() as usize - 1] < 0).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    /// Every relator maps to +1.
    pub fn respects(&self, p: &Presentation) -> bool {
        self.signs.len() == p.num_generators() && p.relators().iter().all(|r| self.eval(r) == 1)
    }

    /// Generators of the kernel, read off the two-coset Schreier transversal `{1, g₀}`.
    pub fn kernel_generators(&self) -> Vec<Word> {
        let Some(g0) = self.signs.iter().position(|&s| s < 0) else {
            return (0..self.signs.len()).map(Word::gen).collect();
        };
        let t = Word::gen(g0);
        let mut out = Vec::new();
        for (g, &s) in self.signs.iter().enumerate() {
            let x = Word::gen(g);
            let cands = if s > 0 {
                [x.clone(), x.conjugate_by(&t)]
            } else {
                [x.mul(&t.inverse()), t.mul(&x)]
            };
            for w in cands {
                if !w.is_empty() && !out.contains(&w) {
                    out.push(w);
                }
            }
        }
        out
    }

    pub fn render(&self, p: &Presentation) -> String {
        p.generators()
            .iter()
            .zip(&self.signs)
            .map(|(g, s)| format!("{g}={}", if *s < 0 { "-1" } else { "+1" }))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// All nontrivial homomorphisms to Z/2, ordered lexicographically with +1 before -1.
pub fn sign_homs(p: &Presentation) -> Vec<SignHom> {
    let n = p.num_generators();
    assert!(n < 31, "exhaustive sign enumeration is limited to 30 generators");
    (1u32..(1 << n))
        .map(|mask| SignHom {
            signs: (0..n).map(|i| if mask >> (n - 1 - i) & 1 == 1 { -1 } else { 1 }).collect(),
        })
        .filter(|h| h.respects(p))
        .collect()
}
