use std::io::Write;
use std::process::{Command, Output};

use rootgrade::output::CommandResult;
use rootgrade::parse_document;
use serde_json::{json, Value};

fn run_with(command: &str, spec: &Value, extra: &[&str]) -> Output {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(spec.to_string().as_bytes()).unwrap();
    Command::new(env!("CARGO_BIN_EXE_rootgrade"))
        .arg(command)
        .arg(file.path())
        .args(extra)
        .output()
        .unwrap()
}

fn run(command: &str, spec: &Value) -> Output {
    run_with(command, spec, &[])
}

fn ok(command: &str, spec: &Value) -> CommandResult {
    let out = run(command, spec);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{stdout} {}", String::from_utf8_lossy(&out.stderr));
    let (doc, result) = parse_document(&stdout).unwrap();
    assert_eq!(doc.command, command);
    assert_eq!(doc.input_digest.len(), 64);
    result
}

fn a1(extra: Value) -> Value {
    let mut base = json!({"root_system": {"family": "A", "rank": 1}});
    base.as_object_mut().unwrap().extend(extra.as_object().unwrap().clone());
    base
}

#[test]
fn sections_on_a1_character() {
    let spec = a1(json!({"parabolic_x": ["1"], "module_E": {"character": [-3]}}));
    let CommandResult::Sections(r) = ok("sections", &spec) else { panic!() };
    assert_eq!(r.dim, 4);
    let expected: Vec<(String, usize)> = ["-1", "-3", "1", "3"].iter().map(|k| (k.to_string(), 1)).collect();
    assert_eq!(r.character.into_iter().collect::<Vec<_>>(), expected);
}

#[test]
fn constants_on_current_algebra() {
    let spec = a1(json!({
        "construction": {"kind": "tensor"},
        "coordinate_algebra": {"preset": "dual_numbers"},
        "module_E": {"trivial": true}
    }));
    let CommandResult::Sections(r) = ok("sections", &spec) else { panic!() };
    assert_eq!(r.dim, 1);
    assert!(r.trivial_action);
}

#[test]
fn nlu_identity_and_permutation() {
    let id = json!({"matrix": [[["1"], ["0"]], [["0"], ["1"]]]});
    let CommandResult::Nlu(r) = ok("nlu", &id) else { panic!() };
    let identity = vec![vec![vec!["1".to_string()], vec!["0".to_string()]], vec![vec!["0".to_string()], vec!["1".to_string()]]];
    assert_eq!((r.n.clone(), r.l.clone(), r.u.clone()), (identity.clone(), identity.clone(), identity));

    let swap = json!({"matrix": [[["0"], ["1"]], [["1"], ["0"]]]});
    let out = run("nlu", &swap);
    assert_eq!(out.status.code(), Some(3));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["error"]["kind"], "precondition");
}

#[test]
fn nlu_over_dual_numbers() {
    let spec = json!({
        "coordinate_algebra": {"preset": "dual_numbers"},
        "block_profile": [1, 1],
        "matrix": [[["2", "1"], ["3", "-1"]], [["0", "0"], ["1", "5"]]]
    });
    let CommandResult::Nlu(r) = ok("nlu", &spec) else { panic!() };
    assert_eq!(r.l[0][0], vec!["2", "1"]);
    // (2+ε)⁻¹(3−ε) = (1/2 − ε/4)(3 − ε) = 3/2 − 5ε/4
    assert_eq!(r.u[0][1], vec!["3/2", "-5/4"]);
}

#[test]
fn malformed_spec_points_at_field() {
    let spec = a1(json!({"module_E": {"character": ["x"]}}));
    let out = run("sections", &spec);
    assert_eq!(out.status.code(), Some(2));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["error"]["path"], "module_E.character[0]");

    let unknown = a1(json!({"modul_E": {}}));
    assert_eq!(run("sections", &unknown).status.code(), Some(2));
    let bad_scalar = a1(json!({"parabolic_x": ["1/0"]}));
    let out = run("parabolic", &bad_scalar);
    assert_eq!(out.status.code(), Some(2));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["error"]["path"], "parabolic_x[0]");
    assert_eq!(run("frobnicate", &a1(json!({}))).status.code(), Some(2));
    let big = json!({"root_system": {"family": "B", "rank": 3}});
    assert_eq!(run_with("roots", &big, &["--max-rank", "2"]).status.code(), Some(2));
    assert_eq!(run_with("roots", &big, &["--max-weyl-order", "10"]).status.code(), Some(2));
    let not_algebra = a1(json!({
        "construction": {"kind": "tensor"},
        "coordinate_algebra": {"structure_constants": [[["1", "0"], ["0", "1"]], [["0", "0"], ["0", "0"]]], "unit": ["1", "0"]}
    }));
    assert_eq!(run("validate", &not_algebra).status.code(), Some(2));
}

#[test]
fn realize_and_frobenius() {
    let CommandResult::Realize(r) = ok("realize", &a1(json!({"module_V": {"preset": "natural"}}))) else { panic!() };
    assert!(r.passed);
    assert_eq!(r.image_dim, 2);

    let reducible = a1(json!({"module_V": {"direct_sum": [{"preset": "natural"}, {"preset": "natural"}]}}));
    let out = run("realize", &reducible);
    assert_eq!(out.status.code(), Some(3));
    let (_, CommandResult::Realize(r)) = parse_document(std::str::from_utf8(&out.stdout).unwrap()).unwrap() else {
        panic!()
    };
    assert!(!r.passed && r.injective);

    let spec = a1(json!({"module_W": {"preset": "natural"}, "module_E": {"character": [-1]}}));
    let CommandResult::Frobenius(r) = ok("frobenius", &spec) else { panic!() };
    assert_eq!((r.hom_g_dim, r.hom_p_dim, r.bijective), (1, 1, true));
}

#[test]
fn explain_summaries() {
    let out = run("explain", &a1(json!({"module_E": {"character": [-2]}})));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Σ⁺={(2)}, Σ⁰=∅"), "{text}");
    assert!(text.contains("dim u = 1"));
    assert!(text.contains("k_u = 2"));
    assert!(text.contains("bound B = 2"));

    let ext = a1(json!({"construction": {"kind": "abelian_extension", "representation": {"preset": "natural"}}}));
    let text = String::from_utf8(run("explain", &ext).stdout).unwrap();
    assert!(text.contains("R = {(-2), (-1), (1), (2)} (non-reduced)"), "{text}");

    let gl = a1(json!({"construction": {"kind": "gl_n", "n": 2}, "coordinate_algebra": {"preset": "dual_numbers"}}));
    let text = String::from_utf8(run("explain", &gl).stdout).unwrap();
    assert!(text.contains("classification: weakly graded"), "{text}");
}

fn corpus() -> Vec<(&'static str, Value)> {
    let b2 = json!({"root_system": {"family": "B", "rank": 2}});
    vec![
        ("validate", a1(json!({"construction": {"kind": "gl_n"}, "coordinate_algebra": {"preset": "split", "parameter": 2}}))),
        ("roots", b2.clone()),
        ("parabolic", json!({"root_system": {"family": "A", "rank": 2}, "parabolic_x": ["1", "0"]})),
        ("sections", a1(json!({"module_E": {"character": [-2]}}))),
        ("character", json!({"root_system": {"family": "A", "rank": 2}, "module_E": {"character": [-1, -1]}})),
        ("minimal", a1(json!({"module_E": {"character": [-1]}}))),
        ("realize", json!({"root_system": {"family": "A", "rank": 2}, "module_V": {"preset": "adjoint"}})),
        ("frobenius", a1(json!({"module_W": {"preset": "trivial"}, "module_E": {"trivial": true}}))),
        ("nlu", json!({"coordinate_algebra": {"preset": "split"}, "matrix": [[["1", "2"], ["0", "1"]], [["3", "1"], ["1", "1"]]]})),
    ]
}

#[test]
fn outputs_are_deterministic_and_reparse() {
    for (command, spec) in corpus() {
        let first = run(command, &spec);
        let second = run(command, &spec);
        assert_eq!(first.status.code(), Some(0), "{command}: {}", String::from_utf8_lossy(&first.stdout));
        assert_eq!(first.stdout, second.stdout, "{command} is not deterministic");
        let text = String::from_utf8(first.stdout).unwrap();
        let (doc, _) = parse_document(&text).unwrap();
        let pretty = run_with(command, &spec, &["--output", "pretty"]);
        let (pdoc, _) = parse_document(std::str::from_utf8(&pretty.stdout).unwrap()).unwrap();
        assert_eq!(doc, pdoc);
        // re-serializing the parsed document is a fixed point
        let again = serde_json::to_string(&serde_json::to_value(&doc).unwrap()).unwrap();
        assert_eq!(again + "\n", text);
    }
}

#[test]
fn sl3_adjoint_character() {
    let spec = json!({"root_system": {"family": "A", "rank": 2}, "module_E": {"character": [-1, -1]}});
    let CommandResult::Character(r) = ok("character", &spec) else { panic!() };
    assert_eq!(r.dim, 8);
    assert_eq!(r.character.get("0,0"), Some(&2));
    assert!(r.weyl_invariant);
}

#[test]
fn sample_jobs_run() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../jobs");
    let jobs = [
        ("a1_sections.json", &["sections", "character", "minimal", "parabolic", "explain"][..]),
        ("dual_sl2_constants.json", &["sections", "validate", "explain"][..]),
        ("sl2_ltimes_c2.json", &["roots", "parabolic", "validate", "explain"][..]),
        ("sl3_adjoint.json", &["sections", "realize", "frobenius", "explain"][..]),
        ("gl2_dual.json", &["validate", "sections", "explain"][..]),
        ("nlu_dual.json", &["nlu", "explain"][..]),
    ];
    for (file, commands) in jobs {
        for command in commands {
            let out = Command::new(env!("CARGO_BIN_EXE_rootgrade"))
                .arg(command)
                .arg(dir.join(file))
                .output()
                .unwrap();
            assert_eq!(out.status.code(), Some(0), "{command} {file}: {}", String::from_utf8_lossy(&out.stdout));
            if *command != "explain" {
                parse_document(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
            }
        }
    }
}
