use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::cosetenum::enumerate;
use crate::error::{Error, Result};
use crate::fpgroup::{abelianization, quotient, AbelianGroup, Presentation, SignHom, Word};
use crate::wallpaper::{model, ModelGroup};

/// The two rigid cusp groups the amalgams are built over.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CuspModel {
    P6,
    P4,
}

impl CuspModel {
    pub fn name(self) -> &'static str {
        match self {
            CuspModel::P6 => "p6",
            CuspModel::P4 => "p4",
        }
    }

    pub fn model(self) -> ModelGroup {
        model(self.name()).expect("bundled model")
    }
}

impl fmt::Display for CuspModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One conjugation relator `g·μⱼ·g⁻¹·(w t₁ʳ t₂ˢ w⁻¹)⁻¹`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GluingDatum {
    /// Generator index in the cusp presentation.
    pub peripheral_generator: usize,
    /// Generator index in the knot presentation.
    pub knot_generator: usize,
    /// Word over the knot generators.
    pub conjugator: Word,
    pub r: i64,
    pub s: i64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AmalgamSpec {
    pub cusp: CuspModel,
    pub knot: Presentation,
    pub gluings: Vec<GluingDatum>,
}

impl AmalgamSpec {
    /// Every gluing with an empty conjugator and `(r, s) = (1, 0)`.
    pub fn trivial(cusp: CuspModel, knot: Presentation) -> Self {
        let ncusp = cusp.model().presentation().num_generators();
        let gluings = (0..knot.num_generators())
            .flat_map(|j| {
                (0..ncusp).map(move |g| GluingDatum {
                    peripheral_generator: g,
                    knot_generator: j,
                    conjugator: Word::empty(),
                    r: 1,
                    s: 0,
                })
            })
            .collect();
        AmalgamSpec { cusp, knot, gluings }
    }

    pub fn validate(&self) -> Result<()> {
        let cusp = self.cusp.model();
        let ncusp = cusp.presentation().num_generators();
        let nknot = self.knot.num_generators();
        if nknot == 0 {
            return Err(Error::Validation("knot presentation has no generators".into()));
        }
        for name in self.knot.generators() {
            if cusp.presentation().generators().contains(name) {
                return Err(Error::Validation(format!("knot generator `{name}` clashes with a cusp generator")));
            }
        }
        let ab = abelianization(&self.knot);
        if ab != AbelianGroup::new(1, &[]) {
            return Err(Error::Validation(format!("knot group abelianizes to {ab}, expected Z")));
        }
        let mut seen = BTreeSet::new();
        for d in &self.gluings {
            if d.peripheral_generator >= ncusp || d.knot_generator >= nknot {
                return Err(Error::Validation(format!(
                    "gluing ({}, {}) is out of range",
                    d.peripheral_generator, d.knot_generator
                )));
            }
            if d.conjugator.max_gen() > nknot {
                return Err(Error::Validation("conjugator uses an undeclared knot generator".into()));
            }
            if !seen.insert((d.peripheral_generator, d.knot_generator)) {
                return Err(Error::Validation(format!(
                    "duplicate gluing for ({}, {})",
                    cusp.presentation().generators()[d.peripheral_generator],
                    self.knot.generators()[d.knot_generator]
                )));
            }
        }
        if seen.len() != ncusp * nknot {
            return Err(Error::Validation(format!(
                "incomplete gluings: {} of {} (cusp generator, meridian) pairs",
                seen.len(),
                ncusp * nknot
            )));
        }
        Ok(())
    }
}

/// The presentation `⟨cusp gens, μ₁…μₙ | cusp rels, knot rels, gluings⟩`.
#[derive(Clone, Debug)]
pub struct Amalgam {
    spec: AmalgamSpec,
    presentation: Presentation,
}

impl Amalgam {
    pub fn spec(&self) -> &AmalgamSpec {
        &self.spec
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn cusp(&self) -> CuspModel {
        self.spec.cusp
    }

    fn offset(&self) -> usize {
        self.spec.cusp.model().presentation().num_generators()
    }

    /// `t₁, t₂` as words in the amalgam.
    pub fn translations(&self) -> [Word; 2] {
        self.spec.cusp.model().translation_words().clone()
    }

    pub fn meridians(&self) -> Vec<Word> {
        (0..self.spec.knot.num_generators()).map(|j| Word::gen(self.offset() + j)).collect()
    }

    /// Generator index of a named generator.
    pub fn generator(&self, name: &str) -> Result<Word> {
        Ok(Word::gen(self.presentation.generator_index(name)?))
    }
}

pub fn build_amalgam(spec: &AmalgamSpec) -> Result<Amalgam> {
    spec.validate()?;
    let cusp = spec.cusp.model();
    let cp = cusp.presentation();
    let off = cp.num_generators();
    let [t1, t2] = cusp.translation_words().clone();

    let mut gluings = spec.gluings.clone();
    gluings.sort_by_key(|d| (d.knot_generator, d.peripheral_generator));
    let conj: Vec<Word> = gluings
        .iter()
        .map(|d| {
            let g = Word::gen(d.peripheral_generator);
            let mu = Word::gen(off + d.knot_generator);
            let w = d.conjugator.shifted(off);
            let gamma = w.mul(&t1.pow(d.r)).mul(&t2.pow(d.s)).mul(&w.inverse());
            g.mul(&mu).mul(&g.inverse()).mul(&gamma.inverse())
        })
        .collect();
    let knot: Vec<Word> = spec.knot.relators().iter().map(|r| r.shifted(off)).collect();

    let mut relators = Vec::new();
    match spec.cusp {
        CuspModel::P6 => {
            relators.extend(cp.relators().iter().cloned());
            relators.extend(knot);
        }
        CuspModel::P4 => {
            relators.extend(knot);
            relators.extend(cp.relators().iter().cloned());
        }
    }
    relators.extend(conj);

    let mut gens = cp.generators().to_vec();
    gens.extend(spec.knot.generators().iter().cloned());
    let presentation = Presentation::new(format!("{}*{}", cp.name(), spec.knot.name()), gens, relators)?;
    Ok(Amalgam { spec: spec.clone(), presentation })
}

/// A quotient whose order was certified by a complete coset table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedQuotient {
    pub presentation: Presentation,
    pub order: usize,
    pub abelianization: AbelianGroup,
}

/// `|P / ⟨⟨extra⟩⟩|` by enumeration over the trivial subgroup.
pub fn certified_quotient(p: &Presentation, extra: &[Word]) -> Result<CertifiedQuotient> {
    let q = quotient(p, extra)?;
    let order = enumerate(&q, &[])?.index();
    let abelianization = abelianization(&q);
    Ok(CertifiedQuotient { presentation: q, order, abelianization })
}

/// Kills `b`, `t₁`, `t₂` and every meridian.
pub fn collapse_236(a: &Amalgam) -> Result<CertifiedQuotient> {
    if a.cusp() != CuspModel::P6 {
        return Err(Error::InvalidArgument("collapse_236 needs an amalgam over p6".into()));
    }
    let mut extra = vec![a.generator("b")?];
    extra.extend(a.translations());
    extra.extend(a.meridians());
    certified_quotient(a.presentation(), &extra)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HMap {
    pub hom: SignHom,
    pub quotient: CertifiedQuotient,
}

/// `c ↦ −1`, `d ↦ +1`, `μⱼ ↦ +1`, checked relator by relator, and the
/// quotient by `d`, `c²`, the meridians and `t₁, t₂`.
pub fn h_map_244(a: &Amalgam) -> Result<HMap> {
    if a.cusp() != CuspModel::P4 {
        return Err(Error::InvalidArgument("h_map_244 needs an amalgam over p4".into()));
    }
    let p = a.presentation();
    let mut signs = vec![1i8; p.num_generators()];
    signs[p.generator_index("c")?] = -1;
    let hom = SignHom::new(signs)?;
    for r in p.relators() {
        if hom.eval(r) != 1 {
            return Err(Error::TheoremCheck(format!("h sends relator {} to -1", p.render_word(r))));
        }
    }
    let c = a.generator("c")?;
    let mut extra = vec![a.generator("d")?, c.pow(2)];
    extra.extend(a.meridians());
    extra.extend(a.translations());
    Ok(HMap { hom, quotient: certified_quotient(p, &extra)? })
}
