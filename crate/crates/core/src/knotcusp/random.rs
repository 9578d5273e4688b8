use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::amalgam::{AmalgamSpec, CuspModel, GluingDatum};
use crate::fpgroup::{Presentation, Word};
use crate::presfile::parse_presentation;

/// Default seed for the randomized amalgam harness.
pub const DEFAULT_SEED: u64 = 0x0b1f_0c5e;

pub const FIGURE_EIGHT: &str = include_str!("../../fixtures/figure8.pres");

pub fn figure_eight() -> Presentation {
    parse_presentation(FIGURE_EIGHT).expect("bundled presentation")
}

fn random_word(rng: &mut ChaCha8Rng, ngens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| {
        let g = rng.gen_range(1..=ngens as i32);
        if rng.gen_bool(0.5) {
            g
        } else {
            -g
        }
    }))
}

/// A knot-like group: meridians `m1…mn` made conjugate by a chain of
/// relators `m(i+1)⁻¹ w mᵢ w⁻¹`, so the abelianization is Z. Sometimes the
/// figure-8 group instead.
pub fn random_knot(rng: &mut ChaCha8Rng) -> Presentation {
    if rng.gen_ratio(1, 4) {
        return figure_eight();
    }
    let n = rng.gen_range(1..=3usize);
    let gens: Vec<String> = (1..=n).map(|i| format!("m{i}")).collect();
    let rels = (0..n - 1)
        .map(|i| {
            let w = random_word(rng, n, 3);
            Word::gen(i + 1).inverse().mul(&w).mul(&Word::gen(i)).mul(&w.inverse())
        })
        .collect();
    Presentation::new("knot", gens, rels).expect("well-formed")
}

pub fn random_amalgam(cusp: CuspModel, rng: &mut ChaCha8Rng) -> AmalgamSpec {
    let knot = random_knot(rng);
    let ncusp = cusp.model().presentation().num_generators();
    let mut gluings: Vec<GluingDatum> = (0..knot.num_generators())
        .flat_map(|j| (0..ncusp).map(move |g| (g, j)))
        .map(|(g, j)| GluingDatum {
            peripheral_generator: g,
            knot_generator: j,
            conjugator: random_word(rng, knot.num_generators(), 6),
            r: rng.gen_range(-3..=3),
            s: rng.gen_range(-3..=3),
        })
        .collect();
    gluings.shuffle(rng);
    AmalgamSpec { cusp, knot, gluings }
}

/// `count` amalgam specs, reproducible from `seed`.
pub fn random_amalgams(cusp: CuspModel, seed: u64, count: usize) -> Vec<AmalgamSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_amalgam(cusp, &mut rng)).collect()
}
