//! Built-in knots with stored surfaces and expected invariants.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::algebra::{Int, Matrix};
use crate::bandform::BandSurface;
use crate::diagram::{standard, CrossingList};

const PRESETS_JSON: &str = include_str!("presets.json");

/// Preset names in display order.
pub const NAMES: [&str; 4] = ["unknot", "trefoil", "figure-eight", "T(2,5)"];

#[derive(Clone, Debug, Deserialize)]
pub struct Preset {
    #[serde(skip)]
    pub name: String,
    core: String,
    /// A Seifert surface in disk-band form.
    pub orientable: BandSurface,
    /// A non-orientable spanning surface of the same knot.
    pub nonorientable: BandSurface,
    seifert: Vec<Vec<i64>>,
    /// Normalized Alexander polynomial, as printed.
    pub alexander: String,
    pub signature: i64,
    pub determinant: i64,
    pub arf: u8,
}

impl Preset {
    /// A diagram of the knot, with the chirality matching the stored forms.
    pub fn diagram(&self) -> CrossingList {
        match self.core.as_str() {
            "trefoil" => standard::trefoil(),
            "figure-eight" => standard::figure_eight(),
            "T(2,5)" => standard::torus_2(5),
            _ => CrossingList::unlink(1),
        }
    }

    /// The expected Seifert matrix of the orientable surface.
    pub fn seifert<T: Int>(&self) -> Matrix<T> {
        Matrix::from_i64_rows(&self.seifert).expect("preset matrices are square")
    }

    pub fn seifert_rows(&self) -> &[Vec<i64>] {
        &self.seifert
    }
}

fn table() -> &'static BTreeMap<String, Preset> {
    static TABLE: OnceLock<BTreeMap<String, Preset>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut map: BTreeMap<String, Preset> =
            serde_json::from_str(PRESETS_JSON).expect("embedded presets.json is valid");
        for (k, v) in map.iter_mut() {
            v.name = k.clone();
        }
        map
    })
}

/// All presets in display order.
pub fn all() -> Vec<&'static Preset> {
    NAMES.iter().map(|n| &table()[*n]).collect()
}

/// Looks a preset up by name. A few common aliases are accepted.
pub fn get(name: &str) -> Option<&'static Preset> {
    let key = match name.to_ascii_lowercase().as_str() {
        "unknot" | "0_1" => "unknot",
        "trefoil" | "3_1" => "trefoil",
        "figure-eight" | "figure8" | "4_1" => "figure-eight",
        "t(2,5)" | "t25" | "5_1" => "T(2,5)",
        _ => return None,
    };
    table().get(key)
}
