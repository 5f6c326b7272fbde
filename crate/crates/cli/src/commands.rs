use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rootgrade_core::coinduce::{g_delta_finite_part_with, minimal_submodule, FinitePartOptions, SectionModule};
use rootgrade_core::groupfact::{nlu_factor, MatrixOverA};
use rootgrade_core::liealg::{nilpotency_degree, normalizer_of_indices, validate, GradedLieAlgebra, Grading};
use rootgrade_core::realize::{frobenius_dims, quotient_e, verify_realization, ModuleIrreducibility};
use rootgrade_core::rootsys::ParabolicSystem;
use rootgrade_core::{Field, Limits, Scalar, Weight, WeylGroup};
use serde::Serialize;

use crate::build;
use crate::error::CliError;
use crate::output::*;
use crate::spec::JobSpec;

pub const COMMANDS: &[&str] = &[
    "validate",
    "roots",
    "parabolic",
    "sections",
    "character",
    "minimal",
    "realize",
    "frobenius",
    "nlu",
];

/// Result value and whether the command's mathematical checks all passed.
pub struct Outcome {
    pub result: serde_json::Value,
    pub passed: bool,
}

fn outcome<T: Serialize>(r: &T, passed: bool) -> Result<Outcome, CliError> {
    let result = serde_json::to_value(r).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(Outcome { result, passed })
}

fn char_doc(c: &BTreeMap<Weight, usize>) -> CharacterDoc {
    c.iter().map(|(w, m)| (w.to_string(), *m)).collect()
}

fn weight_list(ws: &[Weight]) -> Vec<String> {
    ws.iter().map(Weight::to_string).collect()
}

fn rational_list(x: &rootgrade_core::CartanElement) -> Vec<String> {
    x.0.iter().map(|q| Scalar::from_rational(q.clone()).to_exact_string()).collect()
}

fn weyl_invariant(c: &BTreeMap<Weight, usize>, weyl: &WeylGroup) -> bool {
    c.iter()
        .all(|(w, m)| weyl.generators().iter().all(|s| c.get(&s.apply(w)) == Some(m)))
}

fn is_reduced(ambient: &[Weight]) -> bool {
    let set: BTreeSet<&Weight> = ambient.iter().collect();
    ambient.iter().all(|w| !set.contains(&w.scale(2)))
}

fn ambient_multiplicities(g: &GradedLieAlgebra<Scalar>) -> CharacterDoc {
    g.ambient_roots()
        .iter()
        .map(|w| (w.to_string(), g.indices_of_weight(w).len()))
        .collect()
}

fn sections(spec: &JobSpec, limits: &Limits) -> Result<(GradedLieAlgebra<Scalar>, WeylGroup, SectionModule<Scalar>), CliError> {
    let g = build::algebra(spec, limits)?;
    let par = build::parabolic(spec, &g)?;
    let weyl = build::weyl(&g, limits)?;
    let e_spec = spec
        .module_e
        .as_ref()
        .ok_or_else(|| CliError::spec("module_E", "required by this command"))?;
    let e = build::p_module(e_spec, &g, &par)?;
    let opts = FinitePartOptions {
        bound_override: spec.options.bound,
    };
    let v = g_delta_finite_part_with(&g, &par, &e, &weyl, opts)?;
    Ok((g, weyl, v))
}

pub fn run(command: &str, spec: &JobSpec, limits: &Limits) -> Result<Outcome, CliError> {
    match command {
        "validate" => {
            let g = build::algebra(spec, limits)?;
            let report = validate(&g);
            let r = ValidateResult {
                name: g.name().to_string(),
                dim: g.dim(),
                root_system: g.root_system().name(),
                grading: grading_name(report.grading).to_string(),
                valid: report.is_valid(),
                failures: report.failures.iter().map(ToString::to_string).collect(),
                g0_dim: report.g0_dim,
                g0_spanned_dim: report.g0_spanned,
                reduced: is_reduced(g.ambient_roots()),
            };
            let valid = r.valid;
            outcome(&r, valid)
        }
        "roots" => {
            let g = build::algebra(spec, limits)?;
            let rs = g.root_system();
            let weyl = build::weyl(&g, limits)?;
            let r = RootsResult {
                root_system: rs.name(),
                rank: rs.rank(),
                cartan: rs.cartan().to_vec(),
                simple_roots: weight_list(rs.simple_roots()),
                positive_roots: weight_list(rs.positive_roots()),
                weyl_order: weyl.order(),
                ambient_roots: ambient_multiplicities(&g),
                reduced: is_reduced(g.ambient_roots()),
            };
            outcome(&r, true)
        }
        "parabolic" => {
            let g = build::algebra(spec, limits)?;
            let par = build::parabolic(spec, &g)?;
            let sys: &ParabolicSystem = &par.system;
            let p_norm = normalizer_of_indices(&g, &par.p_indices).len();
            let l_norm = normalizer_of_indices(&g, &par.l_indices).len();
            let r = ParabolicResult {
                x: rational_list(&sys.x),
                x_sigma: rational_list(&sys.x_sigma),
                sigma_plus: weight_list(&sys.sigma_plus),
                sigma_zero: weight_list(&sys.sigma_zero),
                sigma_minus: weight_list(&sys.sigma_minus),
                dim_p: par.p_indices.len(),
                dim_u: par.u_indices.len(),
                dim_l: par.l_indices.len(),
                dim_n: par.n_indices.len(),
                k_u: par.k_u,
                k_n: par.k_n,
                p_self_normalizing: p_norm == par.p_indices.len(),
                l_self_normalizing: l_norm == par.l_indices.len(),
                normalizer_u_dim: normalizer_of_indices(&g, &par.u_indices).len(),
            };
            let ok = r.p_self_normalizing && r.l_self_normalizing;
            outcome(&r, ok)
        }
        "sections" => {
            let (_, _, v) = sections(spec, limits)?;
            let window = v.window();
            let r = SectionsResult {
                dim: v.dim(),
                character: char_doc(&v.character()?),
                e_dim: v.e_dim(),
                e_certified: v.e_certified(),
                n_invariants_dim: v.n_invariants().len(),
                window_size: window.weights.len(),
                bound: window.bound,
                depth: window.depth,
                trivial_action: v.actions().iter().all(|m| m.is_zero()),
            };
            outcome(&r, true)
        }
        "character" => {
            let (_, weyl, v) = sections(spec, limits)?;
            let c = v.character()?;
            let dominant: BTreeMap<Weight, usize> =
                c.iter().filter(|(w, _)| w.is_dominant()).map(|(w, m)| (w.clone(), *m)).collect();
            let r = CharacterResult {
                dim: v.dim(),
                character: char_doc(&c),
                weyl_invariant: weyl_invariant(&c, &weyl),
                dominant: char_doc(&dominant),
            };
            let ok = r.weyl_invariant;
            outcome(&r, ok)
        }
        "minimal" => {
            let (_, _, v) = sections(spec, limits)?;
            let m = minimal_submodule(&v)?;
            let r = MinimalResult {
                dim: m.dim(),
                character: char_doc(&m.character()?),
                section_dim: v.dim(),
                certified: m.minimality_certified(),
            };
            outcome(&r, true)
        }
        "realize" => {
            let g = build::algebra(spec, limits)?;
            let par = build::parabolic(spec, &g)?;
            let weyl = build::weyl(&g, limits)?;
            let v_spec = spec
                .module_v
                .as_ref()
                .ok_or_else(|| CliError::spec("module_V", "required by realize"))?;
            let v = build::g_module(v_spec, &g, "module_V")?;
            let rep = verify_realization(&g, &par, &v, &weyl)?;
            let r = RealizeResult {
                passed: rep.passed(),
                irreducibility: match &rep.irreducibility {
                    ModuleIrreducibility::Irreducible => "irreducible".to_string(),
                    ModuleIrreducibility::Reducible { weight, submodule_dim } => {
                        format!("reducible: submodule of dim {submodule_dim} generated at weight {weight}")
                    }
                    ModuleIrreducibility::Inconclusive => "inconclusive".to_string(),
                },
                lambda: Scalar::from_rational(rep.lambda.clone()).to_exact_string(),
                slice_dim: rep.slice_dim,
                slice_in_n_invariants: rep.slice_in_n_invariants,
                u_v_is_upper: rep.u_v_is_upper,
                e_dim: rep.e_dim,
                section_dim: rep.section_dim,
                image_in_section: rep.image_in_section,
                injective: rep.injective,
                equivariance_witness: rep.equivariance_witness,
                evaluation_matches: rep.evaluation_matches,
                slice_maps_to_invariants: rep.slice_maps_to_invariants,
                image_dim: rep.image_dim,
                minimal_dim: rep.minimal_dim,
                image_is_minimal: rep.image_is_minimal,
            };
            let ok = r.passed;
            outcome(&r, ok)
        }
        "frobenius" => {
            let g = build::algebra(spec, limits)?;
            let par = build::parabolic(spec, &g)?;
            let weyl = build::weyl(&g, limits)?;
            let w_spec = spec
                .module_w
                .as_ref()
                .ok_or_else(|| CliError::spec("module_W", "required by frobenius"))?;
            let w = build::g_module(w_spec, &g, "module_W")?;
            let e_spec = spec
                .module_e
                .as_ref()
                .ok_or_else(|| CliError::spec("module_E", "required by frobenius"))?;
            let e = build::p_module(e_spec, &g, &par)?;
            let opts = FinitePartOptions {
                bound_override: spec.options.bound,
            };
            let v = g_delta_finite_part_with(&g, &par, &e, &weyl, opts)?;
            let rep = frobenius_dims(&w, &e, &v);
            let r = FrobeniusResult {
                hom_g_dim: rep.hom_g_dim,
                hom_p_dim: rep.hom_p_dim,
                ev_rank: rep.ev_rank,
                bijective: rep.bijective(),
                section_dim: v.dim(),
            };
            let ok = r.bijective;
            outcome(&r, ok)
        }
        "nlu" => {
            let (m, bp) = build::matrix_over_a(spec)?;
            let f = nlu_factor(&m, &bp)?;
            let r = NluResult {
                block_profile: bp.parts().to_vec(),
                n: matrix_doc(&f.n),
                l: matrix_doc(&f.l),
                u: matrix_doc(&f.u),
            };
            outcome(&r, true)
        }
        other => Err(CliError::spec(
            "command",
            format!("unknown command {other:?}; expected one of {}", COMMANDS.join(", ")),
        )),
    }
}

fn grading_name(g: Grading) -> &'static str {
    match g {
        Grading::Graded => "root-graded",
        Grading::WeaklyGraded => "weakly graded",
    }
}

fn matrix_doc(m: &MatrixOverA<Scalar>) -> MatrixDoc {
    (0..m.n())
        .map(|i| {
            (0..m.n())
                .map(|j| m.entry(i, j).iter().map(Field::to_exact_string).collect())
                .collect()
        })
        .collect()
}

fn set_text(ws: &[Weight]) -> String {
    if ws.is_empty() {
        return "∅".to_string();
    }
    let parts: Vec<String> = ws.iter().map(|w| format!("({w})")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Human-readable summary of the derived objects.
pub fn explain(spec: &JobSpec, limits: &Limits) -> Result<String, CliError> {
    let mut out = String::new();
    if spec.root_system.is_none() {
        let (m, bp) = build::matrix_over_a(spec)?;
        writeln!(out, "matrix of size {} over an algebra of dimension {}", m.n(), m.algebra().dim()).unwrap();
        writeln!(out, "block profile {:?}", bp.parts()).unwrap();
        writeln!(out, "invertible: {}", m.is_invertible()).unwrap();
        return Ok(out);
    }
    let g = build::algebra(spec, limits)?;
    let report = validate(&g);
    let par = build::parabolic(spec, &g)?;
    let weyl = build::weyl(&g, limits)?;
    let sys = &par.system;
    let w = |s: &mut String, line: String| writeln!(s, "{line}").unwrap();
    w(&mut out, format!("algebra {} of dimension {}", g.name(), g.dim()));
    w(&mut out, format!("grading root system Δ = {} (Weyl group order {})", g.root_system().name(), weyl.order()));
    w(&mut out, format!("classification: {}", grading_name(report.grading)));
    let reduced = is_reduced(g.ambient_roots());
    w(
        &mut out,
        format!(
            "R = {}{}",
            set_text(g.ambient_roots()),
            if reduced { "" } else { " (non-reduced)" }
        ),
    );
    w(&mut out, format!("x = {}, x_Σ = {}", sys.x, sys.x_sigma));
    w(&mut out, format!("Σ⁺={}, Σ⁰={}, Σ⁻={}", set_text(&sys.sigma_plus), set_text(&sys.sigma_zero), set_text(&sys.sigma_minus)));
    w(
        &mut out,
        format!(
            "dim p = {}, dim u = {}, dim l = {}, dim n = {}",
            par.p_indices.len(),
            par.u_indices.len(),
            par.l_indices.len(),
            par.n_indices.len()
        ),
    );
    w(&mut out, format!("k_u = {}, k_n = {}", par.k_u, par.k_n));
    debug_assert_eq!(par.k_u, nilpotency_degree(&g, &par.u_indices));
    if let Some(e_spec) = &spec.module_e {
        let e = build::p_module(e_spec, &g, &par)?;
        let opts = FinitePartOptions {
            bound_override: spec.options.bound,
        };
        let v = g_delta_finite_part_with(&g, &par, &e, &weyl, opts)?;
        let window = v.window();
        w(
            &mut out,
            format!(
                "window: {} weights, bound B = {}, depth {}",
                window.weights.len(),
                window.bound,
                window.depth
            ),
        );
        w(&mut out, format!("dim V_f = {}", v.dim()));
    }
    if let Some(v_spec) = &spec.module_v {
        let v = build::g_module(v_spec, &g, "module_V")?;
        let q = quotient_e(&g, &par, &v)?;
        w(&mut out, format!("dim V = {}, dim V/u·V = {}", v.dim(), q.module.dim()));
    }
    Ok(out)
}
