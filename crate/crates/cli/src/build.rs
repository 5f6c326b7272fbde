//! Turns a validated spec into core objects.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use rootgrade_core::coinduce::PModule;
use rootgrade_core::exactlin::Mat;
use rootgrade_core::groupfact::{BlockProfile, MatrixOverA};
use rootgrade_core::liealg::{
    build_abelian_extension, build_chevalley_of_type, build_gln, build_tensor, parabolic_subalgebra,
    CoordinateAlgebra, GradedLieAlgebra, ParabolicSubalgebra,
};
use rootgrade_core::realize::GModule;
use rootgrade_core::{CartanElement, Family, Field, Limits, Scalar, Weight, WeylGroup};

use crate::error::CliError;
use crate::spec::{to_mat, Construction, CoordinateAlgebraSpec, GModuleSpec, JobSpec, PModuleSpec, RootSystemSpec};

fn root_system(spec: &JobSpec) -> Result<&RootSystemSpec, CliError> {
    spec.root_system
        .as_ref()
        .ok_or_else(|| CliError::spec("root_system", "required by this command"))
}

pub fn family(spec: &JobSpec) -> Result<Family, CliError> {
    root_system(spec)?
        .family
        .parse()
        .map_err(|e| CliError::spec("root_system.family", e))
}

pub fn coordinate_algebra(spec: &CoordinateAlgebraSpec) -> Result<CoordinateAlgebra<Scalar>, CliError> {
    let path = "coordinate_algebra";
    if let Some(preset) = &spec.preset {
        let param = |default: usize| spec.parameter.unwrap_or(default);
        return match preset.as_str() {
            "rationals" => Ok(CoordinateAlgebra::rationals()),
            "dual_numbers" => Ok(CoordinateAlgebra::dual_numbers()),
            "split" if param(2) >= 1 => Ok(CoordinateAlgebra::split(param(2))),
            "truncated" if param(2) >= 1 => Ok(CoordinateAlgebra::truncated_polynomials(param(2))),
            "split" | "truncated" => Err(CliError::spec(format!("{path}.parameter"), "must be positive")),
            other => Err(CliError::spec(format!("{path}.preset"), format!("unknown preset {other:?}"))),
        };
    }
    let tensor = spec
        .structure_constants
        .as_ref()
        .ok_or_else(|| CliError::spec(path, "either preset or structure_constants is required"))?;
    let unit = spec
        .unit
        .as_ref()
        .ok_or_else(|| CliError::spec(format!("{path}.unit"), "missing unit"))?;
    if let Some(d) = spec.dim {
        if d != unit.len() {
            return Err(CliError::spec(
                format!("{path}.dim"),
                format!("dim {d} disagrees with unit of length {}", unit.len()),
            ));
        }
    }
    let tensor = tensor
        .iter()
        .map(|a| a.iter().map(|b| b.iter().map(|n| n.0.clone()).collect()).collect())
        .collect();
    let unit = unit.iter().map(|n| n.0.clone()).collect();
    CoordinateAlgebra::new(tensor, unit).map_err(|e| CliError::spec(path, e))
}

fn required_algebra(spec: &JobSpec) -> Result<CoordinateAlgebra<Scalar>, CliError> {
    spec.coordinate_algebra
        .as_ref()
        .ok_or_else(|| CliError::spec("coordinate_algebra", "required by this construction"))
        .and_then(coordinate_algebra)
}

pub fn algebra(spec: &JobSpec, limits: &Limits) -> Result<GradedLieAlgebra<Scalar>, CliError> {
    let fam = family(spec)?;
    let rank = root_system(spec)?.rank;
    if rank > limits.max_rank {
        return Err(CliError::spec(
            "root_system.rank",
            format!("rank {rank} exceeds --max-rank {}", limits.max_rank),
        ));
    }
    match &spec.construction {
        Construction::Chevalley => Ok(build_chevalley_of_type(fam, rank, limits)?),
        Construction::Tensor => {
            let a = required_algebra(spec)?;
            let gd = build_chevalley_of_type(fam, rank, limits)?;
            Ok(build_tensor(&a, &gd)?)
        }
        Construction::GlN { n } => {
            if fam != Family::A {
                return Err(CliError::spec("root_system.family", "gl_n requires family A"));
            }
            if let Some(n) = n {
                if *n != rank + 1 {
                    return Err(CliError::spec("construction.n", format!("gl_{n} has rank {}, not {rank}", n - 1)));
                }
            }
            let a = spec
                .coordinate_algebra
                .as_ref()
                .map(coordinate_algebra)
                .transpose()?
                .unwrap_or_else(CoordinateAlgebra::rationals);
            Ok(build_gln(&a, rank + 1, limits)?)
        }
        Construction::AbelianExtension { representation } => {
            let gd: GradedLieAlgebra<Scalar> = build_chevalley_of_type(fam, rank, limits)?;
            let path = "construction.representation";
            let mats: Vec<Mat<Scalar>> = match (&representation.preset, &representation.matrices) {
                (Some(p), None) => match p.as_str() {
                    "natural" => GModule::natural(&gd)
                        .map_err(|e| CliError::spec(path, e))?
                        .actions()
                        .to_vec(),
                    "adjoint" => GModule::adjoint(&gd).actions().to_vec(),
                    other => return Err(CliError::spec(format!("{path}.preset"), format!("unknown preset {other:?}"))),
                },
                (None, Some(ms)) => ms
                    .iter()
                    .enumerate()
                    .map(|(k, m)| to_mat(m, &format!("{path}.matrices[{k}]")))
                    .collect::<Result<_, _>>()?,
                _ => return Err(CliError::spec(path, "give exactly one of preset or matrices")),
            };
            if mats.len() != gd.dim() {
                return Err(CliError::spec(
                    format!("{path}.matrices"),
                    format!("expected {} matrices, got {}", gd.dim(), mats.len()),
                ));
            }
            Ok(build_abelian_extension(&gd, &mats)?)
        }
    }
}

pub fn cartan_element(spec: &JobSpec, g: &GradedLieAlgebra<Scalar>) -> Result<CartanElement, CliError> {
    match &spec.parabolic_x {
        None => Ok(g.root_system().borel_element()),
        Some(xs) => {
            if xs.len() != g.rank() {
                return Err(CliError::spec(
                    "parabolic_x",
                    format!("expected {} coordinates, got {}", g.rank(), xs.len()),
                ));
            }
            let coords: Vec<BigRational> = xs
                .iter()
                .enumerate()
                .map(|(k, n)| {
                    n.0.to_rational()
                        .ok_or_else(|| CliError::spec(format!("parabolic_x[{k}]"), "coordinates must be real"))
                })
                .collect::<Result<_, _>>()?;
            Ok(CartanElement(coords))
        }
    }
}

pub fn parabolic(spec: &JobSpec, g: &GradedLieAlgebra<Scalar>) -> Result<ParabolicSubalgebra, CliError> {
    let x = cartan_element(spec, g)?;
    parabolic_subalgebra(g, &x).map_err(|e| CliError::spec("parabolic_x", e))
}

pub fn weyl(g: &GradedLieAlgebra<Scalar>, limits: &Limits) -> Result<WeylGroup, CliError> {
    WeylGroup::build(g.root_system(), limits).map_err(|e| CliError::spec("root_system", e))
}

fn label_index(g: &GradedLieAlgebra<Scalar>, label: &str, path: &str) -> Result<usize, CliError> {
    g.labels()
        .iter()
        .position(|l| l == label)
        .or_else(|| label.parse::<usize>().ok().filter(|&i| i < g.dim()))
        .ok_or_else(|| CliError::spec(path, format!("unknown basis element {label:?}")))
}

fn weight(coords: &[i64], rank: usize, path: &str) -> Result<Weight, CliError> {
    if coords.len() != rank {
        return Err(CliError::spec(path, format!("expected {rank} coordinates, got {}", coords.len())));
    }
    Ok(Weight(coords.to_vec()))
}

pub fn p_module(
    spec: &PModuleSpec,
    g: &GradedLieAlgebra<Scalar>,
    par: &ParabolicSubalgebra,
) -> Result<PModule<Scalar>, CliError> {
    let path = "module_E";
    let explicit = spec.dim.is_some() || spec.weights.is_some() || !spec.action.is_empty();
    match (spec.trivial, &spec.character, explicit) {
        (true, None, false) => Ok(PModule::trivial(g, par)?),
        (false, Some(lambda), false) => {
            let lambda = weight(lambda, g.rank(), &format!("{path}.character"))?;
            let values: Vec<(usize, Scalar)> = spec
                .g0_values
                .iter()
                .map(|(label, v)| Ok((label_index(g, label, &format!("{path}.g0_values.{label}"))?, v.0.clone())))
                .collect::<Result<_, CliError>>()?;
            Ok(PModule::character(g, par, &lambda, &values)?)
        }
        (false, None, true) => {
            let weights = spec
                .weights
                .as_ref()
                .ok_or_else(|| CliError::spec(format!("{path}.weights"), "missing"))?;
            if let Some(d) = spec.dim {
                if d != weights.len() {
                    return Err(CliError::spec(format!("{path}.dim"), "disagrees with the number of weights"));
                }
            }
            let weights = weights
                .iter()
                .enumerate()
                .map(|(k, w)| weight(w, g.rank(), &format!("{path}.weights[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let mut action = BTreeMap::new();
            for (label, m) in &spec.action {
                let p = format!("{path}.action.{label}");
                let idx = label_index(g, label, &p)?;
                let m = to_mat(m, &p)?;
                if m.shape() != (weights.len(), weights.len()) {
                    return Err(CliError::spec(p, format!("expected {0}x{0}", weights.len())));
                }
                action.insert(idx, m);
            }
            Ok(PModule::new(g, par, weights, action)?)
        }
        _ => Err(CliError::spec(path, "give exactly one of trivial, character or dim/weights/action")),
    }
}

pub fn g_module(spec: &GModuleSpec, g: &GradedLieAlgebra<Scalar>, path: &str) -> Result<GModule<Scalar>, CliError> {
    match (&spec.preset, &spec.direct_sum, &spec.tensor, &spec.action) {
        (Some(p), None, None, None) => match p.as_str() {
            "trivial" => Ok(GModule::trivial(g)),
            "adjoint" => Ok(GModule::adjoint(g)),
            "natural" => GModule::natural(g).map_err(|e| CliError::spec(format!("{path}.preset"), e)),
            "dual" => Ok(GModule::natural(g)
                .map_err(|e| CliError::spec(format!("{path}.preset"), e))?
                .dual()),
            other => Err(CliError::spec(format!("{path}.preset"), format!("unknown preset {other:?}"))),
        },
        (None, Some(parts), None, None) | (None, None, Some(parts), None) => {
            let combine_sum = spec.direct_sum.is_some();
            let key = if combine_sum { "direct_sum" } else { "tensor" };
            let mut out: Option<GModule<Scalar>> = None;
            for (k, part) in parts.iter().enumerate() {
                let m = g_module(part, g, &format!("{path}.{key}[{k}]"))?;
                out = Some(match out {
                    None => m,
                    Some(acc) if combine_sum => acc.direct_sum(&m),
                    Some(acc) => acc.tensor(&m),
                });
            }
            out.ok_or_else(|| CliError::spec(format!("{path}.{key}"), "empty list"))
        }
        (None, None, None, Some(mats)) => {
            let mats = mats
                .iter()
                .enumerate()
                .map(|(k, m)| to_mat(m, &format!("{path}.action[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            GModule::from_action(g, mats).map_err(|e| CliError::spec(format!("{path}.action"), e))
        }
        _ => Err(CliError::spec(path, "give exactly one of preset, direct_sum, tensor or action")),
    }
}

pub fn matrix_over_a(spec: &JobSpec) -> Result<(MatrixOverA<Scalar>, BlockProfile), CliError> {
    let a = Arc::new(
        spec.coordinate_algebra
            .as_ref()
            .map(coordinate_algebra)
            .transpose()?
            .unwrap_or_else(CoordinateAlgebra::rationals),
    );
    let rows = spec
        .matrix
        .as_ref()
        .ok_or_else(|| CliError::spec("matrix", "required by nlu"))?;
    let n = rows.len();
    let mut entries = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(CliError::spec(format!("matrix[{i}]"), format!("expected {n} entries")));
        }
        for (j, e) in row.iter().enumerate() {
            if e.len() != a.dim() {
                return Err(CliError::spec(
                    format!("matrix[{i}][{j}]"),
                    format!("expected {} coordinates", a.dim()),
                ));
            }
            entries.push(e.iter().map(|x| x.0.clone()).collect());
        }
    }
    let m = MatrixOverA::new(a, n, entries).map_err(|e| CliError::spec("matrix", e))?;
    let bp = match &spec.block_profile {
        None => BlockProfile::full(n),
        Some(parts) => BlockProfile::new(parts.clone()).map_err(|e| CliError::spec("block_profile", e))?,
    };
    if bp.size() != n {
        return Err(CliError::spec("block_profile", format!("parts must sum to {n}")));
    }
    Ok((m, bp))
}
