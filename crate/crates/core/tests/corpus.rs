use orbiforge::fixtures::{fixture, fixture_names};
use orbiforge::fpgroup::abelianization;
use orbiforge::presfile::{parse_presentation, render_presentation};
use orbiforge::wallpaper::model;

#[test]
fn bundled_presentations_round_trip() {
    for name in fixture_names() {
        let p = parse_presentation(fixture(name).unwrap()).unwrap();
        let text = render_presentation(&p);
        assert_eq!(parse_presentation(&text).unwrap(), p, "{name}");
        assert_eq!(render_presentation(&parse_presentation(&text).unwrap()), text);
    }
}

#[test]
fn model_fixtures_match_models() {
    for name in fixture_names().filter(|n| n.starts_with("models/")) {
        let m = model(&name["models/".len()..]).unwrap();
        assert_eq!(&parse_presentation(fixture(name).unwrap()).unwrap(), m.presentation(), "{name}");
    }
    for name in ["p6", "p4"] {
        let cusp = parse_presentation(fixture(name).unwrap()).unwrap();
        assert_eq!(&cusp, model(name).unwrap().presentation());
    }
}

#[test]
fn named_fixtures() {
    let gamma = parse_presentation(fixture("gamma").unwrap()).unwrap();
    assert_eq!(gamma.name(), "Gamma");
    assert_eq!((gamma.num_generators(), gamma.relators().len()), (4, 10));
    assert_eq!(abelianization(&parse_presentation(fixture("figure8").unwrap()).unwrap()).to_string(), "Z");
    assert!(fixture("nope").is_none());
}
