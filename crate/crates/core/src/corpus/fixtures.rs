//! The three penny-quarter models, shipped as model files.

use crate::kripke::{load_model, KripkeModel};

pub const FIG1: &str = include_str!("../../../../fixtures/fig1.km");
pub const FIG2: &str = include_str!("../../../../fixtures/fig2.km");
pub const FIG3: &str = include_str!("../../../../fixtures/fig3.km");

pub const FIXTURE_NAMES: [&str; 3] = ["fig1", "fig2", "fig3"];

/// Source text of a named fixture.
pub fn fixture_text(name: &str) -> Option<&'static str> {
    match name {
        "fig1" => Some(FIG1),
        "fig2" => Some(FIG2),
        "fig3" => Some(FIG3),
        _ => None,
    }
}

pub fn fixture(name: &str) -> Option<KripkeModel> {
    fixture_text(name).map(|t| load_model(t).expect("bundled fixtures parse"))
}

/// All fixtures by name.
pub fn fixtures() -> Vec<(&'static str, KripkeModel)> {
    FIXTURE_NAMES
        .iter()
        .map(|n| (*n, fixture(n).unwrap()))
        .collect()
}
