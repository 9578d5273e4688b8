use std::collections::{HashSet, VecDeque};

use proptest::prelude::*;

use super::*;
use crate::error::Error;
use crate::fpgroup::{abelianization, sign_homs, AbelianGroup, Presentation, Word};
use crate::presfile::parse_presentation;

fn pres(text: &str) -> Presentation {
    parse_presentation(text).unwrap()
}

fn p6() -> Presentation {
    pres("group p6\ngens a b\nrel a^6\nrel b^3\nrel (a b)^2")
}

fn p4() -> Presentation {
    pres("group p4\ngens c d\nrel c^4\nrel d^2\nrel (c d)^4")
}

/// Order of the permutation group generated by `gens`, by closure.
fn perm_group_order(gens: &[Vec<usize>]) -> usize {
    let n = gens[0].len();
    let id: Vec<usize> = (0..n).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q: Vec<usize> = p.iter().map(|&i| g[i]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.len()
}

#[test]
fn finite_groups_match_permutation_oracle() {
    // S3, A4, A5 as permutation groups satisfying the same relators
    let cases = [
        ("gens a b\nrel a^2\nrel b^3\nrel (a b)^2", vec![vec![1, 0, 2], vec![1, 2, 0]]),
        ("gens a b\nrel a^2\nrel b^3\nrel (a b)^3", vec![vec![1, 0, 3, 2], vec![0, 2, 3, 1]]),
        ("gens a b\nrel a^2\nrel b^3\nrel (a b)^5", vec![vec![1, 0, 3, 2, 4], vec![2, 1, 4, 3, 0]]),
    ];
    for (text, perms) in cases {
        let t = enumerate(&pres(text), &[]).unwrap();
        assert_eq!(t.index(), perm_group_order(&perms), "{text}");
    }
}

#[test]
fn translation_subgroup_indices() {
    let g = p6();
    let t1 = g.word("b a^-2").unwrap();
    let t2 = g.word("b^-1 a^2").unwrap();
    let t = enumerate(&g, &[t1.clone(), t2.clone()]).unwrap();
    assert_eq!(t.index(), 6);
    assert_eq!(t.trace(&t1, 0).unwrap(), 0);
    assert!(t.contains(&t1.mul(&t2)).unwrap());
    assert!(!t.contains(&g.word("a").unwrap()).unwrap());
    assert!(t.contains(&g.word("b^3").unwrap()).unwrap());
    assert_eq!(t.trace(&Word::empty(), 4).unwrap(), 4);

    let h = p4();
    let s = enumerate(&h, &[h.word("c^2 d^-1").unwrap(), h.word("c d^-1 c").unwrap()]).unwrap();
    assert_eq!(s.index(), 4);
}

#[test]
fn collapse_of_p6() {
    let g = p6();
    let extra = ["b a^-2", "b^-1 a^2", "b"].map(|w| g.word(w).unwrap());
    let q = crate::fpgroup::quotient(&g, &extra).unwrap();
    assert_eq!(enumerate(&q, &[]).unwrap().index(), 2);
}

#[test]
fn relators_fix_every_coset() {
    let g = p6();
    let t = enumerate(&g, &[g.word("a^2").unwrap(), g.word("b").unwrap()]).unwrap();
    assert_eq!(t.index(), 2);
    for r in g.relators() {
        for c in 0..t.index() {
            assert_eq!(t.trace(r, c).unwrap(), c);
        }
    }
    t.verify().unwrap();
}

#[test]
fn resource_limit() {
    let free = pres("gens x y\n");
    assert_eq!(todd_coxeter(&free, &[], 50), Err(Error::ResourceLimit { max: 50 }));
    let z2 = pres("gens x y\nrel x y x^-1 y^-1");
    assert!(matches!(todd_coxeter(&z2, &[], 200), Err(Error::ResourceLimit { .. })));
}

#[test]
fn deterministic_standard_tables() {
    let g = pres("gens a b\nrel a^2\nrel b^3\nrel (a b)^5");
    let a = enumerate(&g, &[]).unwrap();
    let b = enumerate(&g, &[]).unwrap();
    assert_eq!(a, b);
    // standard form: first appearances along rows are increasing
    let mut next = 1;
    for row in a.rows() {
        for &d in row {
            if d >= next {
                assert_eq!(d, next);
                next += 1;
            }
        }
    }
}

#[test]
fn cyclic_schreier_generators() {
    let g = pres("gens a\nrel a^6");
    let t = enumerate(&g, &[]).unwrap();
    assert_eq!(t.index(), 6);
    let s = schreier_generators(&t).unwrap();
    assert_eq!(s, vec![Word::gen_pow(0, 6)]);
    let sp = reidemeister_schreier(&t).unwrap();
    assert_eq!(sp.presentation.num_generators(), 0);
    assert!(abelianization(&sp.presentation).is_trivial());
}

#[test]
fn kernel_of_p6_sign() {
    let g = p6();
    let h = &sign_homs(&g)[0];
    let t = enumerate(&g, &h.kernel_generators()).unwrap();
    assert_eq!(t.index(), 2);
    let s = schreier_generators(&t).unwrap();
    assert!(s.contains(&g.word("b").unwrap()));
    assert!(s.contains(&g.word("a^2").unwrap()));
    for w in &s {
        assert!(t.contains(w).unwrap());
    }
    let sp = reidemeister_schreier(&t).unwrap();
    let oracle = pres("gens x y\nrel x^3\nrel y^3\nrel (x y)^3");
    assert_eq!(abelianization(&sp.presentation), abelianization(&oracle));
    assert_eq!(abelianization(&oracle), AbelianGroup::new(0, &[3, 3]));
    for w in &sp.inclusion {
        assert!(t.contains(w).unwrap());
    }
}

#[test]
fn index_one_is_parent() {
    let g = p6();
    let t = enumerate(&g, &[g.word("a").unwrap(), g.word("b").unwrap()]).unwrap();
    assert_eq!(t.index(), 1);
    let sp = reidemeister_schreier(&t).unwrap();
    assert_eq!(sp.presentation.generators(), &["a_0".to_string(), "b_0".to_string()]);
    assert_eq!(sp.presentation.relators(), g.relators());
}

#[test]
fn index_multiplicativity() {
    let g = pres("gens a b\nrel a^2\nrel b^3\nrel (a b)^5");
    let gk = enumerate(&g, &[]).unwrap().index();
    let th = enumerate(&g, &[g.word("b").unwrap()]).unwrap();
    let sp = reidemeister_schreier(&th).unwrap();
    let hk = enumerate(&sp.presentation, &[]).unwrap().index();
    assert_eq!((gk, th.index(), hk), (60, 20, 3));

    // K = ⟨a, b a b⁻¹⟩ inside H = ⟨a, b a b⁻¹, b⁻¹ a b⟩ in A4
    let g = pres("gens a b\nrel a^2\nrel b^3\nrel (a b)^3");
    let k_words = vec![g.word("a").unwrap(), g.word("b a b^-1").unwrap()];
    let h_words = vec![k_words[0].clone(), k_words[1].clone(), g.word("b^-1 a b").unwrap()];
    let tk = enumerate(&g, &k_words).unwrap();
    let th = enumerate(&g, &h_words).unwrap();
    let sp = reidemeister_schreier(&th).unwrap();
    let kin: Vec<Word> = k_words.iter().map(|w| sp.rewrite(w).unwrap()).collect();
    let hk = enumerate(&sp.presentation, &kin).unwrap().index();
    assert_eq!(tk.index(), th.index() * hk);
    assert_eq!((tk.index(), th.index()), (3, 3));
}

#[test]
fn rewrite_rejects_outsiders() {
    let g = p6();
    let t = enumerate(&g, &[g.word("b").unwrap(), g.word("a^2").unwrap()]).unwrap();
    let sp = reidemeister_schreier(&t).unwrap();
    assert!(sp.rewrite(&g.word("a").unwrap()).is_err());
    let w = sp.rewrite(&g.word("a b a^-1").unwrap()).unwrap();
    let back = w.substitute(&sp.inclusion);
    assert!(t.contains(&back).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_subgroups_of_a5(words in proptest::collection::vec(proptest::collection::vec(prop_oneof![Just(1i32), Just(2), Just(-2)], 1..6), 0..3)) {
        let g = pres("gens a b\nrel a^2\nrel b^3\nrel (a b)^5");
        let sub: Vec<Word> = words.into_iter().map(Word::from_letters).collect();
        let t = enumerate(&g, &sub).unwrap();
        t.verify().unwrap();
        prop_assert_eq!(60 % t.index(), 0);
        let sp = reidemeister_schreier(&t).unwrap();
        let order = enumerate(&sp.presentation, &[]).unwrap().index();
        prop_assert_eq!(order * t.index(), 60);
    }
}
