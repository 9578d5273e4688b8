//! The verification runner: every headline claim as a pass/fail record.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactgeom::{Isometry, QuadNum, Vec2};
use crate::fpgroup::{abelianization, sign_homs, AbelianGroup, SignHom};
use crate::knotcusp::{
    build_amalgam, certified_quotient, collapse_236, double_cover_cusp_236, double_cover_cusp_244, h_map_244,
    peripheral_order_profile, random_amalgams, verdict_table, AmalgamSpec, CuspModel, ExclusionReason,
};
use crate::lattice::{
    is_rotationally_rhombic, rigid_abelian_index, rotation_preserving, sublattice_index, Lattice2, QuadInt, Ring,
    RigidCusp,
};
use crate::presfile::parse_presentation;
use crate::wallpaper::{
    all_models, all_signatures, euler_characteristic, model, orientation_double_cover, SubgroupHandle,
};

/// Samples per randomized check.
pub const RANDOM_SAMPLES: usize = 100;

/// The tetrahedral reflection group used by the census check.
pub const TETRAHEDRAL: &str = include_str!("../fixtures/gamma.pres");

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Cited,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Cited => "CITED",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    #[serde(rename = "paper_anchor")]
    pub anchor: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Report {
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::InvalidArgument(format!("unknown format `{s}`"))),
        }
    }
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut counts = BTreeMap::new();
        for c in &self.checks {
            *counts.entry(c.status.to_string().to_lowercase()).or_insert(0usize) += 1;
        }
        let v = serde_json::json!({ "seed": self.seed, "checks": self.checks, "summary": counts });
        serde_json::to_string_pretty(&v).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out += &format!("{:<5} {:<22} {}\n", c.status.to_string(), c.id, c.detail);
        }
        let fails = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        out += &format!("{} checks, {} failed (seed {})\n", self.checks.len(), fails, self.seed);
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}

type Outcome = Result<(bool, String)>;

struct CheckDef {
    id: &'static str,
    anchor: &'static str,
    run: Option<fn(u64) -> Outcome>,
    cited: &'static str,
}

const fn check(id: &'static str, anchor: &'static str, run: fn(u64) -> Outcome) -> CheckDef {
    CheckDef { id, anchor, run: Some(run), cited: "" }
}

const fn cited(id: &'static str, anchor: &'static str, why: &'static str) -> CheckDef {
    CheckDef { id, anchor, run: None, cited: why }
}

const CHECKS: &[CheckDef] = &[
    check("rep-p6", "p6 cusp representation and translations t1, t2", rep_p6),
    check("rep-p4", "p4 cusp representation and translations t1, t2", rep_p4),
    check("translation-index", "index of the translation subgroup in rigid cusp groups", translation_index),
    check("collapse-236", "p6 amalgam surjects onto Z/2", collapse),
    check("double-cover-236", "S2(2,3,6) cusp double-covered by an S2(3,3,3) cusp", double_cover_236),
    check("hmap-244", "h-map kills the knot group; S2(2,2,2,2) double cover of S2(2,4,4)", hmap),
    check("tetrahedral-census", "index-2 subgroups of the minimal tetrahedral group", census),
    check("orientation-covers", "orientation double covers of non-orientable cusps", orientation_covers),
    check("verdict-table", "which cusp types a knot complement can cover", verdicts),
    check("classifier-roundtrip", "wallpaper classification and the index identity", roundtrip),
    check("lattice-identities", "rotations of rhombic lattices and sublattice indices", lattice_identities),
    check("degree-metadata", "covering degrees onto S2(2,3,6)-cusped quotients", degrees),
    cited(
        "abelianization-isomorphism",
        "abelianization of an S2(2,3,6)-cusped quotient is exactly Z/2",
        "only the surjection onto Z/2 is certified; injectivity rests on an external result",
    ),
    cited(
        "three-dimensional-steps",
        "normality of the knot group and the singular-set case analysis",
        "3-dimensional arguments are assumed, not machine-checked",
    ),
];

/// Every check id in report order.
pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

/// Runs the selected checks, or all when `selection` is empty.
pub fn run_verification(selection: &[String], seed: u64) -> Result<Report> {
    for id in selection {
        if !CHECKS.iter().any(|c| c.id == id) {
            return Err(Error::InvalidArgument(format!("unknown check id `{id}`")));
        }
    }
    let mut checks = Vec::new();
    for def in CHECKS.iter().filter(|c| selection.is_empty() || selection.iter().any(|s| s == c.id)) {
        let (status, detail) = match def.run {
            None => (Status::Cited, def.cited.to_string()),
            Some(f) => match f(seed) {
                Ok((true, d)) => (Status::Pass, d),
                Ok((false, d)) => (Status::Fail, d),
                Err(e @ Error::ResourceLimit { .. }) => return Err(e),
                Err(e) => (Status::Fail, format!("error: {e}")),
            },
        };
        checks.push(CheckRecord { id: def.id.into(), anchor: def.anchor.into(), status, detail });
    }
    Ok(Report { seed, checks })
}

fn q(s: &str) -> QuadNum {
    s.parse().expect("constant")
}

fn translation(x: &str, y: &str) -> Isometry {
    Isometry::translation(Vec2::new(q(x), q(y)))
}

fn rep_check(name: &str, orders: [&str; 3], t: [(&str, &str); 2]) -> Outcome {
    let g = model(name)?;
    let p = g.presentation();
    let mut bad = Vec::new();
    for w in orders {
        if !g.evaluate(&p.word(w)?).is_identity() {
            bad.push(w.to_string());
        }
    }
    for (w, (x, y)) in g.translation_words().iter().zip(t) {
        if g.evaluate(w) != translation(x, y) {
            bad.push(format!("{} != T({x}, {y})", p.render_word(w)));
        }
    }
    let words: Vec<String> = g.translation_words().iter().map(|w| p.render_word(w)).collect();
    Ok(if bad.is_empty() {
        (true, format!("relators trivial; {} = T({}, {}), {} = T({}, {})", words[0], t[0].0, t[0].1, words[1], t[1].0, t[1].1))
    } else {
        (false, format!("mismatch: {}", bad.join("; ")))
    })
}

fn rep_p6(_: u64) -> Outcome {
    rep_check("p6", ["a^6", "b^3", "(a b)^2"], [("1/2", "1/2*rt3"), ("1", "0")])
}

fn rep_p4(_: u64) -> Outcome {
    rep_check("p4", ["c^4", "d^2", "(c d)^4"], [("1", "0"), ("0", "1")])
}

fn translation_index(_: u64) -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for (name, cusp, ring) in [("p6", RigidCusp::S236, Ring::RootMinus3), ("p4", RigidCusp::S244, Ring::Gaussian)] {
        let g = model(name)?;
        let idx = crate::cosetenum::enumerate(g.presentation(), g.translation_words())?.index();
        let formula = rigid_abelian_index(cusp, &QuadInt::new(1, 0, ring))?;
        pass &= BigInt::from(idx) == formula;
        parts.push(format!("{name}: enumerated {idx}, formula {formula}"));
    }
    Ok((pass, parts.join("; ")))
}

fn collapse(seed: u64) -> Outcome {
    let p6 = model("p6")?;
    let mut extra = p6.translation_words().to_vec();
    extra.push(p6.presentation().word("b")?);
    let bare = certified_quotient(p6.presentation(), &extra)?.order;
    let mut orders = BTreeMap::new();
    for spec in random_amalgams(CuspModel::P6, seed, RANDOM_SAMPLES) {
        let q = collapse_236(&build_amalgam(&spec)?)?;
        *orders.entry(q.order).or_insert(0) += 1;
    }
    let pass = bare == 2 && orders.keys().eq([2].iter());
    Ok((pass, format!("bare p6: order {bare}; {RANDOM_SAMPLES} random amalgams: orders {orders:?}")))
}

fn double_cover_236(_: u64) -> Outcome {
    let (k, s) = double_cover_cusp_236()?;
    let contains = k.model().translation_words().iter().map(|w| k.contains(w)).collect::<Result<Vec<_>>>()?;
    let ok = contains.iter().all(|&b| b);
    Ok((s.thurston() == "S2(3,3,3)" && ok, format!("ker(a->-1) <= p6 is {}; t1, t2 in kernel: {ok}", s.thurston())))
}

fn hmap(seed: u64) -> Outcome {
    let p4 = model("p4")?;
    let extra = [p4.presentation().word("d")?, p4.presentation().word("c^2")?];
    let bare = certified_quotient(p4.presentation(), &extra)?.order;
    let cover = double_cover_cusp_244()?;
    let mut ok = 0;
    for spec in random_amalgams(CuspModel::P4, seed, RANDOM_SAMPLES) {
        match h_map_244(&build_amalgam(&spec)?) {
            Ok(h) if h.quotient.order == 2 => ok += 1,
            Ok(_) | Err(Error::TheoremCheck(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let minimal = h_map_244(&build_amalgam(&AmalgamSpec::trivial(
        CuspModel::P4,
        parse_presentation("group Z\ngens m1\n")?,
    ))?)?;
    let pass = bare == 2 && cover.thurston() == "S2(2,2,2,2)" && ok == RANDOM_SAMPLES && minimal.quotient.order == 2;
    Ok((
        pass,
        format!(
            "p4/<<d, c^2>> order {bare}; ker(c->-1, d->+1) is {}; h valid with order-2 quotient on {ok}/{RANDOM_SAMPLES} random amalgams",
            cover.thurston()
        ),
    ))
}

fn census(_: u64) -> Outcome {
    let gamma = parse_presentation(TETRAHEDRAL)?;
    let ab = abelianization(&gamma);
    let homs = sign_homs(&gamma);
    let p6m = model("p6m")?;
    let abc = ["a", "b", "c"].map(|n| gamma.generator_index(n)).into_iter().collect::<Result<Vec<_>>>()?;
    let mut kinds = Vec::new();
    for h in &homs {
        let r = SignHom::new(abc.iter().map(|&i| h.signs()[i]).collect())?;
        kinds.push(SubgroupHandle::kernel(&p6m, &r)?.classify()?.thurston().to_string());
    }
    kinds.sort();
    let pass = ab == AbelianGroup::new(0, &[2, 2]) && homs.len() == 3 && kinds == ["D2(3;3)", "D2(;3,3,3)", "S2(2,3,6)"];
    Ok((pass, format!("abelianization {ab}; {} sign homomorphisms; cusp kernels {}", homs.len(), kinds.join(", "))))
}

const ORIENTATION_COVERS: [(&str, &str); 7] = [
    ("p4m", "S2(2,4,4)"),
    ("p4g", "S2(2,4,4)"),
    ("pg", "T2"),
    ("pgg", "S2(2,2,2,2)"),
    ("p6m", "S2(2,3,6)"),
    ("p3m1", "S2(3,3,3)"),
    ("p31m", "S2(3,3,3)"),
];

fn orientation_covers(_: u64) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (g, want) in ORIENTATION_COVERS {
        let (_, s) = orientation_double_cover(&model(g)?)?;
        pass &= s.thurston() == want;
        parts.push(format!("{g} -> {}", s.thurston()));
    }
    Ok((pass, parts.join(", ")))
}

fn verdicts(_: u64) -> Outcome {
    let table = verdict_table()?;
    let realizable = table.iter().filter(|v| v.is_realizable()).count();
    let four = table.iter().filter(|v| v.reason() == Some(ExclusionReason::FourTorsion)).count();
    let refl: Vec<_> = table.iter().filter(|v| v.reason() == Some(ExclusionReason::ReflectionSymmetry)).collect();
    let mut pass = realizable == 9 && four == 3 && refl.len() == 5;
    for v in &table {
        pass &= v.all_checks_pass();
        pass &= v.signature.singular_orders().any(|n| n == 4) == (v.reason() == Some(ExclusionReason::FourTorsion));
    }
    for v in &refl {
        pass &= peripheral_order_profile(&model(v.signature.crystallographic())?)?.iter().all(|&n| n == 2);
    }
    let failing: Vec<String> = table
        .iter()
        .flat_map(|v| v.checks.iter().filter(|c| !c.pass).map(move |c| format!("{}:{}", v.signature.thurston(), c.name)))
        .collect();
    let mut detail = format!("{realizable} realizable, {four} excluded by 4-torsion, {} by reflection symmetry", refl.len());
    if !failing.is_empty() {
        detail += &format!("; failing {}", failing.join(", "));
    }
    Ok((pass, detail))
}

fn roundtrip(_: u64) -> Outcome {
    let mut handles = 0;
    let mut bad = Vec::new();
    for g in all_models() {
        let whole = SubgroupHandle::whole(&g)?;
        if &whole.classify()? != g.signature() {
            bad.push(format!("{} classified as {}", g.name(), whole.classify()?.thurston()));
        }
        let mut hs = vec![whole];
        for h in sign_homs(g.presentation()) {
            hs.push(SubgroupHandle::kernel(&g, &h)?);
        }
        for h in &hs {
            let (l, r) = h.index_identity()?;
            if l != r {
                bad.push(format!("{}: index identity {l} != {r}", g.name()));
            }
            handles += 1;
        }
    }
    let chi_zero = all_signatures().iter().filter(|s| num_traits::Zero::is_zero(&euler_characteristic(s))).count();
    if chi_zero != 17 {
        bad.push(format!("chi = 0 for only {chi_zero} signatures"));
    }
    Ok(if bad.is_empty() {
        (true, format!("17 models round-trip; index identity on {handles} subgroups; chi = 0 for all 17"))
    } else {
        (false, bad.join("; "))
    })
}

fn lattice_identities(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let square = Lattice2::square();
    let hex = Lattice2::hexagonal();
    let r4 = rotation_preserving(&square, 4).ok_or_else(|| Error::Invariant("square lattice lost its 4-fold rotation".into()))?;
    let r3 = rotation_preserving(&hex, 3).ok_or_else(|| Error::Invariant("hexagonal lattice lost its 3-fold rotation".into()))?;
    let mut bad = 0;
    for _ in 0..RANDOM_SAMPLES {
        let v = square.point(rng.gen_range(-50..=50), rng.gen_range(-50..=50));
        if r4.pow(2).apply(&v) != v.neg() {
            bad += 1;
        }
        let u = hex.point(rng.gen_range(-50..=50), rng.gen_range(-50..=50));
        if !u.add(&r3.apply(&u)).add(&r3.pow(2).apply(&u)).is_zero() {
            bad += 1;
        }
    }
    let mut index_bad = 0;
    for _ in 0..RANDOM_SAMPLES {
        let (n1, n2) = (rng.gen_range(-40..=40), rng.gen_range(-40..=40));
        if n1 == 0 && n2 == 0 {
            continue;
        }
        let ring = if rng.gen_bool(0.5) { Ring::Gaussian } else { Ring::RootMinus3 };
        // z·O as a planar lattice, with O spanned by 1 and τ
        let k = if ring == Ring::Gaussian { 1 } else { 3 };
        let tau_y = if k == 1 { QuadNum::one() } else { QuadNum::sqrt3() };
        let base = Lattice2::new(Vec2::ints(1, 0), Vec2::new(QuadNum::zero(), tau_y.clone()))?;
        let z1 = Vec2::new(QuadNum::int(n1), &tau_y * &QuadNum::int(n2));
        let zt = Vec2::new(QuadNum::int(-k * n2), &tau_y * &QuadNum::int(n1));
        let ratio = Lattice2::new(z1, zt)?.det().abs().checked_div(&base.det().abs())?;
        let idx = sublattice_index(&QuadInt::new(n1, n2, ring))?;
        if ratio != QuadNum::from_rational(num_rational::BigRational::from_integer(idx)) {
            index_bad += 1;
        }
    }
    let rect = Lattice2::new(Vec2::ints(2, 0), Vec2::ints(0, 1))?;
    let rhombic = (is_rotationally_rhombic(&square)?, is_rotationally_rhombic(&hex)?, is_rotationally_rhombic(&rect)?);
    let pass = bad == 0 && index_bad == 0 && rhombic == (true, true, false);
    Ok((
        pass,
        format!(
            "rotation identities failed on {bad}/{} vectors; index mismatches {index_bad}; rhombic square/hexagonal/rectangular = {}/{}/{}; hexagonal index uses n1^2+3n2^2 on Z[sqrt-3], not the Eisenstein form n1^2+n1n2+n2^2",
            2 * RANDOM_SAMPLES,
            rhombic.0,
            rhombic.1,
            rhombic.2
        ),
    ))
}

fn degrees(_: u64) -> Outcome {
    let table = verdict_table()?;
    let v = table
        .iter()
        .find(|v| v.signature.thurston() == "S2(2,3,6)")
        .ok_or_else(|| Error::Invariant("S2(2,3,6) missing from the verdict table".into()))?;
    let note = |a: &str, b: &str| v.notes.iter().any(|n| n.contains(a) && n.contains(b));
    let pass = v.degree_divisor() == Some(24)
        && v.admits_degree(24)
        && v.admits_degree(120)
        && !v.admits_degree(12)
        && note("figure-8", "24")
        && note("dodecahedral", "120");
    Ok((pass, format!("24 | deg; deg 12 rejected; notes: {}", v.notes.join("; "))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id_is_rejected() {
        assert!(matches!(run_verification(&["nope".into()], 0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn single_selection() {
        let r = run_verification(&["rep-p6".into()], 0).unwrap();
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.checks[0].status, Status::Pass, "{}", r.checks[0].detail);
    }

    #[test]
    fn cited_records_do_not_fail() {
        let r = run_verification(&["three-dimensional-steps".into()], 0).unwrap();
        assert_eq!(r.checks[0].status, Status::Cited);
        assert_eq!(r.exit_code(), 0);
    }
}
