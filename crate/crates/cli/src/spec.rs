//! Input schema. Every scalar is an exact string such as `"3"`, `"-1/2"` or
//! `"1/2+3i"`; bare JSON integers are accepted as well.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer};

use rootgrade_core::exactlin::Mat;
use rootgrade_core::{Field, Scalar};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Num(pub Scalar);

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d) {
            Ok(Raw::Int(n)) => Ok(Num(Scalar::from_i64(n))),
            Ok(Raw::Str(s)) => Scalar::parse_exact(&s).map(Num).map_err(serde::de::Error::custom),
            Err(_) => Err(serde::de::Error::custom("expected an exact scalar string or an integer")),
        }
    }
}

pub type NumMatrix = Vec<Vec<Num>>;

pub fn to_mat(rows: &NumMatrix, path: &str) -> Result<Mat<Scalar>, CliError> {
    let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|n| n.0.clone()).collect()).collect();
    if rows.is_empty() {
        return Err(CliError::spec(path, "matrix has no rows"));
    }
    Mat::from_rows(rows).map_err(|e| CliError::spec(path, e))
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    /// Required by every command except `nlu`.
    #[serde(default)]
    pub root_system: Option<RootSystemSpec>,
    #[serde(default)]
    pub construction: Construction,
    #[serde(default)]
    pub coordinate_algebra: Option<CoordinateAlgebraSpec>,
    /// Coordinates in the simple coroot basis; defaults to a Borel element.
    #[serde(default)]
    pub parabolic_x: Option<Vec<Num>>,
    #[serde(default, rename = "module_E")]
    pub module_e: Option<PModuleSpec>,
    #[serde(default, rename = "module_V")]
    pub module_v: Option<GModuleSpec>,
    #[serde(default, rename = "module_W")]
    pub module_w: Option<GModuleSpec>,
    /// `n × n` matrix of coordinate vectors for `nlu`.
    #[serde(default)]
    pub matrix: Option<Vec<Vec<Vec<Num>>>>,
    #[serde(default)]
    pub block_profile: Option<Vec<usize>>,
    #[serde(default)]
    pub options: Options,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootSystemSpec {
    pub family: String,
    pub rank: usize,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Construction {
    #[default]
    Chevalley,
    Tensor,
    GlN {
        #[serde(default)]
        n: Option<usize>,
    },
    AbelianExtension {
        representation: RepresentationSpec,
    },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationSpec {
    /// `"natural"` or `"adjoint"`.
    #[serde(default)]
    pub preset: Option<String>,
    /// One matrix per basis element of the Chevalley algebra.
    #[serde(default)]
    pub matrices: Option<Vec<NumMatrix>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoordinateAlgebraSpec {
    /// `"rationals"`, `"dual_numbers"`, `"split"` or `"truncated"`.
    #[serde(default)]
    pub preset: Option<String>,
    /// Number of copies for `split`, nilpotency order for `truncated`.
    #[serde(default)]
    pub parameter: Option<usize>,
    #[serde(default)]
    pub dim: Option<usize>,
    #[serde(default)]
    pub structure_constants: Option<Vec<Vec<Vec<Num>>>>,
    #[serde(default)]
    pub unit: Option<Vec<Num>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PModuleSpec {
    #[serde(default)]
    pub trivial: bool,
    /// Weight of a one-dimensional module, in fundamental weight coordinates.
    #[serde(default)]
    pub character: Option<Vec<i64>>,
    /// Values on `g_0` basis elements outside `h`, keyed by basis label.
    #[serde(default)]
    pub g0_values: BTreeMap<String, Num>,
    #[serde(default)]
    pub dim: Option<usize>,
    #[serde(default)]
    pub weights: Option<Vec<Vec<i64>>>,
    /// Action matrices keyed by basis label; missing `p` elements act by 0.
    #[serde(default)]
    pub action: BTreeMap<String, NumMatrix>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GModuleSpec {
    /// `"trivial"`, `"natural"`, `"dual"` or `"adjoint"`.
    #[serde(default)]
    pub preset: Option<String>,
    #[serde(default)]
    pub direct_sum: Option<Vec<GModuleSpec>>,
    #[serde(default)]
    pub tensor: Option<Vec<GModuleSpec>>,
    /// One matrix per basis element of `g`.
    #[serde(default)]
    pub action: Option<Vec<NumMatrix>>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    /// Replaces the default window bound `B`.
    #[serde(default)]
    pub bound: Option<u64>,
}

pub fn parse_spec(text: &str) -> Result<JobSpec, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        CliError::spec(if path == "." { "$".to_string() } else { path }, e.into_inner())
    })
}
