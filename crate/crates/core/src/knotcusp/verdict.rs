use std::collections::BTreeSet;

use serde::Serialize;

use super::amalgam::{build_amalgam, collapse_236, h_map_244, AmalgamSpec, CuspModel};
use crate::error::{Error, Result};
use crate::fpgroup::{Presentation, SignHom};
use crate::wallpaper::{model, orientation_double_cover, signature, ModelGroup, OrbifoldSignature, SubgroupHandle};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExclusionReason {
    FourTorsion,
    ReflectionSymmetry,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CuspStatus {
    Realizable { witness: String },
    Excluded { reason: ExclusionReason },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), pass, detail: detail.into() }
    }

    fn from_result(name: &str, r: Result<(bool, String)>) -> Check {
        match r {
            Ok((pass, detail)) => Check::new(name, pass, detail),
            Err(e) => Check::new(name, false, format!("error: {e}")),
        }
    }
}

/// Which cusp cross-sections a knot complement can cover.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CuspVerdict {
    pub signature: OrbifoldSignature,
    pub status: CuspStatus,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
struct Record<'a> {
    signature: &'a str,
    conway: &'a str,
    crystallographic: &'a str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<ExclusionReason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a str>,
    checks: &'a [Check],
    notes: &'a [String],
}

impl CuspVerdict {
    pub fn is_realizable(&self) -> bool {
        matches!(self.status, CuspStatus::Realizable { .. })
    }

    pub fn reason(&self) -> Option<ExclusionReason> {
        match self.status {
            CuspStatus::Excluded { reason } => Some(reason),
            CuspStatus::Realizable { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&str> {
        match &self.status {
            CuspStatus::Realizable { witness } => Some(witness),
            CuspStatus::Excluded { .. } => None,
        }
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Required divisor of the covering degree from a knot complement, if any.
    pub fn degree_divisor(&self) -> Option<u64> {
        (self.signature.thurston() == "S2(2,3,6)").then_some(24)
    }

    /// Whether a cover of this degree is consistent with the recorded constraints.
    pub fn admits_degree(&self, deg: u64) -> bool {
        self.is_realizable() && deg > 0 && self.degree_divisor().map_or(true, |d| deg % d == 0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rec = Record {
            signature: self.signature.thurston(),
            conway: self.signature.conway(),
            crystallographic: self.signature.crystallographic(),
            status: if self.is_realizable() { "realizable" } else { "excluded" },
            reason: self.reason(),
            witness: self.witness(),
            checks: &self.checks,
            notes: &self.notes,
        };
        serde_json::to_value(rec).expect("serializable")
    }
}

/// Finite orders of torsion elements of `G`.
pub fn peripheral_order_profile(g: &ModelGroup) -> Result<BTreeSet<u32>> {
    SubgroupHandle::whole(g)?.torsion_orders()
}

/// `ker(c ↦ −1, d ↦ +1) ≤ p4`.
pub fn double_cover_cusp_244() -> Result<OrbifoldSignature> {
    let p4 = model("p4")?;
    let h = SignHom::parse("c=-1,d=+1", p4.presentation())?;
    SubgroupHandle::kernel(&p4, &h)?.classify()
}

/// `ker(a ↦ −1) ≤ p6`, which must contain `t₁, t₂`.
pub fn double_cover_cusp_236() -> Result<(SubgroupHandle, OrbifoldSignature)> {
    let p6 = model("p6")?;
    let h = SignHom::parse("a=-1", p6.presentation())?;
    let k = SubgroupHandle::kernel(&p6, &h)?;
    let s = k.classify()?;
    Ok((k, s))
}

fn free_rank_one() -> Presentation {
    Presentation::new("Z", vec!["m1".into()], vec![]).expect("well-formed")
}

fn witness(thurston: &str) -> Option<&'static str> {
    Some(match thurston {
        "T2" => "figure-8 knot complement",
        "S2(2,2,2,2)" => "quotient of the figure-8 knot complement",
        "S2(2,3,6)" => "figure-8 knot complement over H3/PGL(2,O3); dodecahedral knot complements",
        "S2(3,3,3)" => "orientable double cover of the figure-8 S2(2,3,6) quotient",
        "K2" => "Gieseking manifold, covered by the figure-8 knot complement",
        "RP2(2,2)" => "figure-8 knot complement modulo its full symmetry group",
        "D2(;2,3,6)" => "non-orientable tetrahedral orbifold covered by the figure-8 knot complement",
        "D2(;3,3,3)" => "non-orientable tetrahedral orbifold covered by the figure-8 knot complement",
        "D2(3;3)" => "index-2 subgroup of the minimal non-orientable tetrahedral group, covered by the figure-8 knot complement",
        _ => return None,
    })
}

fn four_torsion_checks(s: &OrbifoldSignature) -> Vec<Check> {
    let mut checks = vec![Check::new(
        "four-torsion",
        s.singular_orders().any(|n| n == 4),
        format!("singular orders {:?}", s.singular_orders().collect::<Vec<_>>()),
    )];
    checks.push(Check::from_result(
        "orientation-cover",
        model(s.crystallographic()).and_then(|g| orientation_double_cover(&g)).map(|(h, c)| {
            (c.thurston() == "S2(2,4,4)", format!("index {} cover is {}", h.index(), c.thurston()))
        }),
    ));
    checks.push(Check::from_result(
        "double-cover-244",
        double_cover_cusp_244().map(|c| (c.thurston() == "S2(2,2,2,2)", format!("ker(c->-1, d->+1) is {}", c.thurston()))),
    ));
    checks.push(Check::from_result(
        "h-map-244",
        build_amalgam(&AmalgamSpec::trivial(CuspModel::P4, free_rank_one())).and_then(|a| h_map_244(&a)).map(|h| {
            (h.quotient.order == 2, format!("h respects every relator; quotient order {}", h.quotient.order))
        }),
    ));
    checks
}

fn reflection_checks(s: &OrbifoldSignature) -> Vec<Check> {
    vec![
        Check::new("boundary-reflector", s.has_boundary_reflector, format!("{} has mirror boundary", s.thurston())),
        Check::from_result(
            "order-profile",
            model(s.crystallographic()).and_then(|g| peripheral_order_profile(&g)).map(|p| {
                (p.iter().all(|&n| n == 2), format!("torsion orders {p:?}"))
            }),
        ),
    ]
}

fn realizable_checks(s: &OrbifoldSignature) -> Vec<Check> {
    let mut checks = vec![Check::new(
        "no-four-torsion",
        s.singular_orders().all(|n| n != 4),
        format!("singular orders {:?}", s.singular_orders().collect::<Vec<_>>()),
    )];
    match s.thurston() {
        "S2(2,3,6)" => {
            checks.push(Check::from_result(
                "collapse-236",
                build_amalgam(&AmalgamSpec::trivial(CuspModel::P6, free_rank_one())).and_then(|a| collapse_236(&a)).map(
                    |q| (q.order == 2, format!("quotient order {}, abelianization {}", q.order, q.abelianization)),
                ),
            ));
            checks.push(Check::from_result(
                "double-cover-236",
                double_cover_cusp_236().and_then(|(k, c)| {
                    let inside = k.model().translation_words().iter().map(|w| k.contains(w)).collect::<Result<Vec<_>>>()?;
                    let pass = c.thurston() == "S2(3,3,3)" && inside.iter().all(|&b| b);
                    Ok((pass, format!("ker(a->-1) is {}, contains t1, t2: {}", c.thurston(), inside.iter().all(|&b| b))))
                }),
            ));
        }
        t if !s.orientable => {
            let t = t.to_string();
            checks.push(Check::from_result(
                "orientation-cover",
                model(s.crystallographic()).and_then(|g| orientation_double_cover(&g)).map(|(_, c)| {
                    (c.thurston() != "S2(2,4,4)", format!("orientation double cover of {t} is {}", c.thurston()))
                }),
            ));
        }
        _ => {}
    }
    checks
}

fn notes(s: &OrbifoldSignature) -> Vec<String> {
    match s.thurston() {
        "S2(2,3,6)" => vec![
            "covering degree ≡ 0 mod 24".into(),
            "figure-8 knot complement: degree 24".into(),
            "dodecahedral knot complements: degree 120".into(),
            "abelianization Z/2 beyond the certified surjection is cited".into(),
        ],
        "S2(3,3,3)" => vec!["covers the S2(2,3,6) quotient with degree 1 or 2".into()],
        "T2" => vec!["the torus-cusped intermediate cover maps to the S2(3,3,3) quotient with degree 6n".into()],
        _ => vec![],
    }
}

pub fn verdict(s: &OrbifoldSignature) -> Result<CuspVerdict> {
    let s = signature(s.crystallographic())?;
    let (status, checks) = if let Some(w) = witness(s.thurston()) {
        (CuspStatus::Realizable { witness: w.into() }, realizable_checks(&s))
    } else if s.singular_orders().any(|n| n == 4) {
        (CuspStatus::Excluded { reason: ExclusionReason::FourTorsion }, four_torsion_checks(&s))
    } else if s.has_boundary_reflector {
        (CuspStatus::Excluded { reason: ExclusionReason::ReflectionSymmetry }, reflection_checks(&s))
    } else {
        return Err(Error::Invariant(format!("no verdict rule for {}", s.thurston())));
    };
    let notes = notes(&s);
    Ok(CuspVerdict { signature: s, status, checks, notes })
}

/// Verdict by any accepted name.
pub fn verdict_by_name(name: &str) -> Result<CuspVerdict> {
    verdict(&signature(name)?)
}

/// Verdicts for all 17 signatures in table order.
pub fn verdict_table() -> Result<Vec<CuspVerdict>> {
    crate::wallpaper::all_signatures().iter().map(verdict).collect()
}
