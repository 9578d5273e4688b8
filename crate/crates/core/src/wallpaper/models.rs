use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use super::signature::{signature, OrbifoldSignature, CRYSTALLOGRAPHIC_NAMES};
use crate::cosetenum::enumerate;
use crate::error::{Error, Result};
use crate::exactgeom::{Isometry, Mat2, QuadNum, Vec2};
use crate::fpgroup::{Presentation, Word};
use crate::lattice::Lattice2;
use crate::presfile::parse_presentation;

/// A wallpaper group with a faithful representation in `Isom(E²)`.
#[derive(Clone, Debug)]
pub struct ModelGroup {
    presentation: Presentation,
    rep: Vec<Isometry>,
    inverses: Vec<Isometry>,
    translation_words: [Word; 2],
    signature: OrbifoldSignature,
}

impl ModelGroup {
    pub fn name(&self) -> &str {
        self.presentation.name()
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// Image of each generator.
    pub fn rep(&self) -> &[Isometry] {
        &self.rep
    }

    pub fn translation_words(&self) -> &[Word; 2] {
        &self.translation_words
    }

    pub fn signature(&self) -> &OrbifoldSignature {
        &self.signature
    }

    /// `ρ(w)`, with `ρ(gh) = ρ(g)∘ρ(h)`.
    pub fn evaluate(&self, w: &Word) -> Isometry {
        w.evaluate(&self.rep, &self.inverses, Isometry::identity(), |f, g| f.compose(g))
    }

    /// Images of the two translation words.
    pub fn translation_vectors(&self) -> [Vec2; 2] {
        self.translation_words.clone().map(|w| self.evaluate(&w).trans().clone())
    }

    /// The translation lattice `Λ_G`.
    pub fn lattice(&self) -> Lattice2 {
        let [u, v] = self.translation_vectors();
        Lattice2::new(u, v).expect("validated on construction")
    }

    /// Closure of the generators' linear parts.
    pub fn point_group(&self) -> Vec<Mat2> {
        close_linear(self.rep.iter().map(|f| f.linear().clone()).collect())
    }

    /// Relators act trivially, the translation words give independent
    /// translations, and they generate a subgroup of index `|P(G)|`.
    pub fn validate(&self) -> Result<()> {
        for (i, r) in self.presentation.relators().iter().enumerate() {
            if !self.evaluate(r).is_identity() {
                return Err(Error::Validation(format!(
                    "{}: relator {} = {} is not the identity",
                    self.name(),
                    i + 1,
                    self.presentation.render_word(r)
                )));
            }
        }
        for w in &self.translation_words {
            let f = self.evaluate(w);
            if !f.is_translation() || f.trans().is_zero() {
                return Err(Error::Validation(format!(
                    "{}: {} is not a nontrivial translation",
                    self.name(),
                    self.presentation.render_word(w)
                )));
            }
        }
        let [u, v] = self.translation_vectors();
        if u.cross(&v).is_zero() {
            return Err(Error::Validation(format!("{}: translation words are dependent", self.name())));
        }
        let idx = enumerate(&self.presentation, &self.translation_words)?.index();
        let order = self.point_group().len();
        if idx != order {
            return Err(Error::Validation(format!(
                "{}: [G : <t1,t2>] = {idx} but |P(G)| = {order}",
                self.name()
            )));
        }
        Ok(())
    }
}

/// Closure of a set of 2×2 matrices under multiplication.
pub(crate) fn close_linear(gens: Vec<Mat2>) -> Vec<Mat2> {
    let mut seen: HashSet<Mat2> = HashSet::from([Mat2::identity()]);
    let mut out = vec![Mat2::identity()];
    let mut queue = VecDeque::from([Mat2::identity()]);
    while let Some(m) = queue.pop_front() {
        for g in &gens {
            let p = m.mul(g);
            if seen.insert(p.clone()) {
                out.push(p.clone());
                queue.push_back(p);
            }
        }
    }
    out
}

fn q(s: &str) -> QuadNum {
    s.parse().expect("valid constant")
}

fn pt(x: &str, y: &str) -> Vec2 {
    Vec2::new(q(x), q(y))
}

fn iso(m: Mat2, x: &str, y: &str) -> Isometry {
    Isometry::new(m, pt(x, y)).expect("orthogonal")
}

fn shift(x: &str, y: &str) -> Isometry {
    Isometry::translation(pt(x, y))
}

/// Rotation by `k·30°` about `(x, y)`.
fn rot(k: i64, x: &str, y: &str) -> Isometry {
    Isometry::rotation_about(k, &pt(x, y))
}

/// Reflection in the line at `k·15°` through `(x, y)`.
fn refl(k: i64, x: &str, y: &str) -> Isometry {
    Isometry::reflection_through(k, &pt(x, y))
}

fn flip_y() -> Mat2 {
    Mat2::ints(1, 0, 0, -1)
}

fn flip_x() -> Mat2 {
    Mat2::ints(-1, 0, 0, 1)
}

/// `(crystallographic name, presentation text, generator images, translation words)`
fn spec(name: &str) -> Option<(&'static str, Vec<Isometry>, [&'static str; 2])> {
    let p6a = rot(-2, "0", "0");
    let p6b = rot(-4, "1/2", "1/6*rt3");
    Some(match name {
        "p1" => ("gens X Y\nrel X Y X^-1 Y^-1", vec![shift("1", "0"), shift("0", "1")], ["X", "Y"]),
        "p2" => (
            "gens T1 T2 T3\nrel T1^2\nrel T2^2\nrel T3^2\nrel (T1 T2 T3)^2",
            vec![rot(6, "0", "0"), rot(6, "1/2", "0"), rot(6, "1/2", "1/2")],
            ["T2 T1", "T3 T2"],
        ),
        "pm" => (
            "gens R R1 Y\nrel R^2\nrel R1^2\nrel R Y R^-1 Y^-1\nrel R1 Y R1^-1 Y^-1",
            vec![refl(6, "0", "0"), refl(6, "1/2", "0"), shift("0", "1")],
            ["R1 R", "Y"],
        ),
        "pg" => (
            "gens P Q\nrel P^2 Q^-2",
            vec![iso(flip_x(), "0", "1/2"), iso(flip_x(), "1", "1/2")],
            ["Q P^-1", "P^2"],
        ),
        "cm" => (
            "gens R P\nrel R^2\nrel R P^2 R^-1 P^-2",
            vec![iso(flip_y(), "0", "0"), iso(flip_y(), "1/2", "1/2")],
            ["P^2", "P R"],
        ),
        "pmm" => (
            "gens R1 R2 R3 R4\nrel R1^2\nrel R2^2\nrel R3^2\nrel R4^2\nrel (R1 R2)^2\nrel (R2 R3)^2\nrel (R3 R4)^2\nrel (R4 R1)^2",
            vec![refl(6, "0", "0"), refl(0, "0", "0"), refl(6, "1/2", "0"), refl(0, "0", "1/2")],
            ["R3 R1", "R4 R2"],
        ),
        "pmg" => (
            "gens A B R\nrel A^2\nrel B^2\nrel R^2\nrel R B A R^-1 A^-1 B^-1",
            vec![rot(6, "0", "1/4"), rot(6, "1/2", "1/4"), refl(0, "0", "0")],
            ["B A", "(A R)^2"],
        ),
        "pgg" => (
            "gens P Q\nrel (P Q)^2\nrel (P^-1 Q)^2",
            vec![iso(flip_y(), "1/2", "1/2"), iso(flip_x(), "1/2", "1/2")],
            ["P^2", "Q^2"],
        ),
        "cmm" => (
            "gens R1 R2 T\nrel R1^2\nrel R2^2\nrel T^2\nrel (R1 R2)^2\nrel (R1 T R2 T)^2",
            vec![refl(6, "0", "0"), refl(0, "0", "0"), rot(6, "1/4", "1/4")],
            ["T R1 R2", "R2 T R1"],
        ),
        "p4" => (
            "gens c d\nrel c^4\nrel d^2\nrel (c d)^4",
            vec![rot(-3, "0", "0"), iso(Mat2::ints(-1, 0, 0, -1), "-1", "0")],
            ["c^2 d^-1", "c d^-1 c"],
        ),
        "p4m" => (
            "gens R1 R2 R3\nrel R1^2\nrel R2^2\nrel R3^2\nrel (R1 R3)^4\nrel (R1 R2)^2\nrel (R2 R3)^4",
            vec![refl(0, "0", "0"), refl(6, "1/2", "0"), refl(3, "0", "0")],
            ["R2 R3 R1 R3", "R3 R2 R3 R1"],
        ),
        "p4g" => (
            "gens S R\nrel S^4\nrel R^2\nrel (R S^-1 R S)^2",
            vec![rot(3, "0", "0"), refl(9, "1/2", "0")],
            ["S R S R", "R S R S"],
        ),
        "p3" => (
            "gens s1 s2 s3\nrel s1^3\nrel s2^3\nrel s3^3\nrel s1 s2 s3",
            vec![p6a.compose(&p6b).compose(&p6a.inverse()), p6a.pow(2), p6b.clone()],
            ["s3 s2^-1", "s3^-1 s2"],
        ),
        "p3m1" => (
            "gens R1 R2 R3\nrel R1^2\nrel R2^2\nrel R3^2\nrel (R1 R2)^3\nrel (R2 R3)^3\nrel (R3 R1)^3",
            vec![refl(0, "0", "0"), refl(8, "1", "0"), refl(4, "0", "0")],
            ["R2 R3 R1 R3", "R2 R3 R2 R1"],
        ),
        "p31m" => (
            "gens S R\nrel S^3\nrel R^2\nrel (R S^-1 R S)^3",
            vec![rot(4, "0", "0"), refl(0, "0", "1/6*rt3")],
            ["S^-1 R S R S^-1", "R S^-1 R S^-1"],
        ),
        "p6" => ("gens a b\nrel a^6\nrel b^3\nrel (a b)^2", vec![p6a, p6b], ["b a^-2", "b^-1 a^2"]),
        "p6m" => (
            "gens a b c\nrel a^2\nrel b^2\nrel c^2\nrel (a b)^6\nrel (b c)^3\nrel (c a)^2",
            vec![refl(0, "0", "0"), refl(10, "1", "0"), refl(6, "0", "0")],
            ["b a b a b c", "b a b c b a"],
        ),
        _ => return None,
    })
}


fn build(name: &str) -> Result<ModelGroup> {
    let (text, rep, words) = spec(name).ok_or_else(|| Error::UnknownModel(name.to_string()))?;
    let presentation = parse_presentation(&format!("group {name}\n{text}"))?;
    let translation_words = [presentation.word(words[0])?, presentation.word(words[1])?];
    let inverses = rep.iter().map(Isometry::inverse).collect();
    Ok(ModelGroup { signature: signature(name)?, presentation, rep, inverses, translation_words })
}

fn cache() -> &'static HashMap<&'static str, ModelGroup> {
    static MODELS: OnceLock<HashMap<&'static str, ModelGroup>> = OnceLock::new();
    MODELS.get_or_init(|| {
        CRYSTALLOGRAPHIC_NAMES
            .iter()
            .map(|&n| (n, build(n).unwrap_or_else(|e| panic!("model {n}: {e}"))))
            .collect()
    })
}

/// The model group for a crystallographic, Conway or Thurston name.
pub fn model(name: &str) -> Result<ModelGroup> {
    let sig = signature(name)?;
    Ok(cache()[sig.crystallographic()].clone())
}

/// All 17 models in table order.
pub fn all_models() -> Vec<ModelGroup> {
    CRYSTALLOGRAPHIC_NAMES.iter().map(|n| cache()[n].clone()).collect()
}
