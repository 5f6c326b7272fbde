//! Output schema. Result documents are serialized through `serde_json::Value`
//! so object keys come out sorted.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Weight-keyed multiplicities, keys like `"-1,2"`.
pub type CharacterDoc = BTreeMap<String, usize>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub command: String,
    pub input_digest: String,
    pub result: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorDocument {
    pub command: String,
    pub error: ErrorDetail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorDetail {
    pub kind: String,
    pub message: String,
    pub path: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValidateResult {
    pub name: String,
    pub dim: usize,
    pub root_system: String,
    pub grading: String,
    pub valid: bool,
    pub failures: Vec<String>,
    pub g0_dim: usize,
    pub g0_spanned_dim: usize,
    pub reduced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootsResult {
    pub root_system: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub simple_roots: Vec<String>,
    pub positive_roots: Vec<String>,
    pub weyl_order: usize,
    /// Dimension of each nonzero weight space of `g`.
    pub ambient_roots: CharacterDoc,
    pub reduced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParabolicResult {
    pub x: Vec<String>,
    pub x_sigma: Vec<String>,
    pub sigma_plus: Vec<String>,
    pub sigma_zero: Vec<String>,
    pub sigma_minus: Vec<String>,
    pub dim_p: usize,
    pub dim_u: usize,
    pub dim_l: usize,
    pub dim_n: usize,
    pub k_u: usize,
    pub k_n: usize,
    pub p_self_normalizing: bool,
    pub l_self_normalizing: bool,
    pub normalizer_u_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionsResult {
    pub dim: usize,
    pub character: CharacterDoc,
    pub e_dim: usize,
    pub e_certified: bool,
    pub n_invariants_dim: usize,
    pub window_size: usize,
    pub bound: u64,
    pub depth: usize,
    pub trivial_action: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterResult {
    pub dim: usize,
    pub character: CharacterDoc,
    pub weyl_invariant: bool,
    /// Dominant weights with their multiplicities.
    pub dominant: CharacterDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinimalResult {
    pub dim: usize,
    pub character: CharacterDoc,
    pub section_dim: usize,
    pub certified: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealizeResult {
    pub passed: bool,
    pub irreducibility: String,
    pub lambda: String,
    pub slice_dim: usize,
    pub slice_in_n_invariants: bool,
    pub u_v_is_upper: bool,
    pub e_dim: usize,
    pub section_dim: usize,
    pub image_in_section: bool,
    pub injective: bool,
    pub equivariance_witness: Option<(usize, usize)>,
    pub evaluation_matches: bool,
    pub slice_maps_to_invariants: bool,
    pub image_dim: usize,
    pub minimal_dim: usize,
    pub image_is_minimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrobeniusResult {
    pub hom_g_dim: usize,
    pub hom_p_dim: usize,
    pub ev_rank: usize,
    pub bijective: bool,
    pub section_dim: usize,
}

/// Entries are coordinate vectors of exact scalar strings.
pub type MatrixDoc = Vec<Vec<Vec<String>>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NluResult {
    pub block_profile: Vec<usize>,
    pub n: MatrixDoc,
    pub l: MatrixDoc,
    pub u: MatrixDoc,
}

/// A parsed result, one variant per command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommandResult {
    Validate(ValidateResult),
    Roots(RootsResult),
    Parabolic(ParabolicResult),
    Sections(SectionsResult),
    Character(CharacterResult),
    Minimal(MinimalResult),
    Realize(RealizeResult),
    Frobenius(FrobeniusResult),
    Nlu(NluResult),
}

/// Re-parses an emitted document under the output schema.
pub fn parse_document(text: &str) -> Result<(Document, CommandResult), String> {
    let doc: Document = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let v = doc.result.clone();
    let parsed = match doc.command.as_str() {
        "validate" => serde_json::from_value(v).map(CommandResult::Validate),
        "roots" => serde_json::from_value(v).map(CommandResult::Roots),
        "parabolic" => serde_json::from_value(v).map(CommandResult::Parabolic),
        "sections" => serde_json::from_value(v).map(CommandResult::Sections),
        "character" => serde_json::from_value(v).map(CommandResult::Character),
        "minimal" => serde_json::from_value(v).map(CommandResult::Minimal),
        "realize" => serde_json::from_value(v).map(CommandResult::Realize),
        "frobenius" => serde_json::from_value(v).map(CommandResult::Frobenius),
        "nlu" => serde_json::from_value(v).map(CommandResult::Nlu),
        other => return Err(format!("unknown command {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    Ok((doc, parsed))
}
