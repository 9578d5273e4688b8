use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Zero;

use super::*;
use crate::fpgroup::{sign_homs, SignHom};

fn sig_of(g: &str, signs: &str) -> String {
    let m = model(g).unwrap();
    let h = SignHom::parse(signs, m.presentation()).unwrap();
    SubgroupHandle::kernel(&m, &h).unwrap().classify().unwrap().thurston().to_string()
}

/// Orders forced by the signature: divisors of singular orders, and 2 for a mirror.
fn expected_torsion(s: &OrbifoldSignature) -> BTreeSet<u32> {
    let mut out: BTreeSet<u32> = s.singular_orders().flat_map(|n| (2..=n).filter(move |d| n % d == 0)).collect();
    if s.has_boundary_reflector {
        out.insert(2);
    }
    out
}

#[test]
fn models_classify_as_themselves() {
    for m in all_models() {
        m.validate().unwrap();
        let h = SubgroupHandle::whole(&m).unwrap();
        assert_eq!(h.index(), 1);
        assert_eq!(&h.classify().unwrap(), m.signature(), "{}", m.name());
        assert!(h.translation_lattice().unwrap().same_lattice(&m.lattice()));
    }
}

#[test]
fn sign_kernels_in_rotation_groups() {
    assert_eq!(sig_of("p6", "a=-1"), "S2(3,3,3)");
    assert_eq!(sig_of("p4", "c=-1"), "S2(2,2,2,2)");
    // cd has order 4 and survives
    assert_eq!(sig_of("p4", "c=-1,d=-1"), "S2(2,4,4)");
    assert_eq!(sig_of("p4", "d=-1"), "S2(2,4,4)");
}

#[test]
fn index_two_subgroups_of_p6m() {
    let m = model("p6m").unwrap();
    let mut got: Vec<String> = sign_homs(m.presentation())
        .iter()
        .map(|h| SubgroupHandle::kernel(&m, h).unwrap().classify().unwrap().thurston().to_string())
        .collect();
    got.sort();
    assert_eq!(got, ["D2(3;3)", "D2(;3,3,3)", "S2(2,3,6)"]);
}

#[test]
fn orientation_double_covers() {
    let cases = [
        ("p4m", "S2(2,4,4)"),
        ("p4g", "S2(2,4,4)"),
        ("pg", "T2"),
        ("pm", "T2"),
        ("cm", "T2"),
        ("pgg", "S2(2,2,2,2)"),
        ("pmm", "S2(2,2,2,2)"),
        ("p6m", "S2(2,3,6)"),
        ("p3m1", "S2(3,3,3)"),
        ("p31m", "S2(3,3,3)"),
    ];
    for (g, want) in cases {
        let (h, s) = orientation_double_cover(&model(g).unwrap()).unwrap();
        assert_eq!(h.index(), 2, "{g}");
        assert_eq!(s.thurston(), want, "{g}");
    }
    let (h, s) = orientation_double_cover(&model("p6").unwrap()).unwrap();
    assert_eq!((h.index(), s.thurston()), (1, "S2(2,3,6)"));
}

#[test]
fn every_sign_kernel_is_consistent() {
    for m in all_models() {
        for h in sign_homs(m.presentation()) {
            let k = SubgroupHandle::kernel(&m, &h).unwrap();
            assert_eq!(k.index(), 2);
            let s = k.classify().unwrap();
            let (lhs, rhs) = k.index_identity().unwrap();
            assert_eq!(lhs, rhs, "{} {}", m.name(), h.render(m.presentation()));
            assert_eq!(k.torsion_orders().unwrap(), expected_torsion(&s), "{} -> {}", m.name(), s);
            let pg = k.point_group().unwrap();
            assert_eq!(s.orientable, pg.iter().all(|g| g.det_sign() == 1));
            for w in m.translation_words() {
                let t = w.pow(2);
                assert!(k.contains(&t).unwrap());
            }
        }
    }
}

#[test]
fn translation_sublattices() {
    let m = model("p1").unwrap();
    let p = m.presentation();
    let h = SubgroupHandle::new(&m, &[p.word("X^2").unwrap(), p.word("X Y^3").unwrap()]).unwrap();
    assert_eq!(h.index(), 6);
    assert_eq!(h.lattice_index().unwrap(), 6);
    assert_eq!(h.classify().unwrap().thurston(), "T2");
    let m = model("p2").unwrap();
    let p = m.presentation();
    let h = SubgroupHandle::new(&m, &[p.word("T1").unwrap(), p.word("(T2 T1)^2").unwrap(), p.word("T3 T2").unwrap()]).unwrap();
    assert_eq!(h.index_identity().unwrap().0, h.index_identity().unwrap().1);
    assert_eq!(h.classify().unwrap().thurston(), "S2(2,2,2,2)");
}

#[test]
fn point_groups() {
    let p6 = model("p6").unwrap();
    assert_eq!(p6.point_group().len(), 6);
    let p6m = model("p6m").unwrap();
    let pg = p6m.point_group();
    assert_eq!(pg.len(), 12);
    assert_eq!(pg.iter().filter(|g| g.det_sign() == -1).count(), 6);
    let k = SubgroupHandle::kernel(&p6, &SignHom::parse("a=-1", p6.presentation()).unwrap()).unwrap();
    assert_eq!(k.point_group().unwrap().len(), 3);
}

#[test]
fn euler_characteristics() {
    for s in all_signatures() {
        assert!(euler_characteristic(&s).is_zero(), "{s}");
    }
    let mut s = signature("p4").unwrap();
    s.cone_orders = vec![3, 3, 4];
    assert_eq!(euler_characteristic(&s), BigRational::new((-1).into(), 12.into()));
}

#[test]
fn name_lookup() {
    assert_eq!(signature("*632").unwrap().crystallographic(), "p6m");
    assert_eq!(signature("D2(2;2;)").unwrap().crystallographic(), "pmg");
    assert_eq!(signature(" s2(2, 3, 6) ").unwrap().crystallographic(), "p6");
    assert_eq!(signature("×× ").unwrap().crystallographic(), "pg");
    assert!(signature("p7").is_err());
    assert_eq!(model("442").unwrap().name(), "p4");
}
