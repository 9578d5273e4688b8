//! Presentations bundled with the crate.

macro_rules! bundle {
    ($($name:literal => $path:literal),* $(,)?) => {
        const BUNDLED: &[(&str, &str)] = &[$(($name, include_str!(concat!("../fixtures/", $path)))),*];
    };
}

bundle! {
    "p6" => "p6.pres",
    "p4" => "p4.pres",
    "gamma" => "gamma.pres",
    "figure8" => "figure8.pres",
    "models/p1" => "models/p1.pres",
    "models/p2" => "models/p2.pres",
    "models/pm" => "models/pm.pres",
    "models/pg" => "models/pg.pres",
    "models/cm" => "models/cm.pres",
    "models/pmm" => "models/pmm.pres",
    "models/pmg" => "models/pmg.pres",
    "models/pgg" => "models/pgg.pres",
    "models/cmm" => "models/cmm.pres",
    "models/p4" => "models/p4.pres",
    "models/p4m" => "models/p4m.pres",
    "models/p4g" => "models/p4g.pres",
    "models/p3" => "models/p3.pres",
    "models/p3m1" => "models/p3m1.pres",
    "models/p31m" => "models/p31m.pres",
    "models/p6" => "models/p6.pres",
    "models/p6m" => "models/p6m.pres",
}

/// Text of a bundled presentation, e.g. `gamma` or `models/p4g`.
pub fn fixture(name: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|(n, _)| *n)
}
