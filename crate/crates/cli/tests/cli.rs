use std::path::PathBuf;
use std::process::{Command, Output};

use cohocolim::fincat::{nerve, FinPoset, PosetFile};
use cohocolim::simpset::io::from_json;
use cohocolim::simpset::is_isomorphic;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cohocolim")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn census_of_the_two_chain() {
    let o = run(&["resolve", "--poset", &data("chain2.json"), "0", "2", "--maxdim", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("census: deg0: 2 nondeg; deg1: 1 nondeg; deg2: 0 nondeg"));
}

#[test]
fn census_of_an_arrow() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.json");
    std::fs::write(&path, r#"{"elements": ["0", "1"], "relation": [["0", "1"]]}"#).unwrap();
    let o = run(&["resolve", "--poset", path.to_str().unwrap(), "0", "1", "--maxdim", "1"]);
    assert!(stdout(&o).contains("census: deg0: 1 nondeg; deg1: 0 nondeg"));
}

#[test]
fn identity_hom_is_one_empty_word() {
    let o = run(&["resolve", "--poset", &data("chain3.json"), "2", "2", "--maxdim", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let words = &v["result"]["degrees"][0]["words"];
    assert_eq!(words.as_array().unwrap().len(), 1);
    assert_eq!(words[0]["word"], "()^0");
}

#[test]
fn identities_on_the_three_chain() {
    let o = run(&["verify", "--poset", &data("chain3.json"), "--suite", "identities", "--maxdim", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let total: u64 = v["result"]["checks"].as_array().unwrap().iter().filter_map(|c| c["instances"].as_u64()).sum();
    assert!(total >= 100);
}

#[test]
fn decomposition_of_the_boundary_of_a_triangle() {
    let o = run(&["verify", "--poset", &data("boundary_triangle.json"), "--suite", "decomposition"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS decomposition along the maximal elements"));
}

#[test]
fn comparison_suite_reports_inner_faces_of_the_homotopy() {
    let o = run(&["verify", "--poset", &data("chain2.json"), "--suite", "all", "--maxdim", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL H simplicial"));
    assert!(out.contains("counterexample: d1 on"));
    assert!(out.contains("PASS κλ = id"));
    assert!(out.contains("PASS H ends"));
}

#[test]
fn suspension_has_the_homology_of_a_circle() {
    for model in ["cyl", "hocolim_bk", "hocolim_coherent"] {
        let o = run(&["compute", "--diagram", &data("suspension.json"), "--model", model, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["result"]["homology"]["betti"], serde_json::json!([1, 1]), "{model}");
    }
}

#[test]
fn constant_point_cyl_is_the_nerve() {
    let dir = tempfile::tempdir().unwrap();
    let poset_text = std::fs::read_to_string(data("boundary_triangle.json")).unwrap();
    let poset: PosetFile = serde_json::from_str(&poset_text).unwrap();
    let spaces: serde_json::Map<String, serde_json::Value> =
        poset.elements.iter().map(|e| (e.clone(), serde_json::json!("point"))).collect();
    let maps: serde_json::Map<String, serde_json::Value> =
        poset.relation.iter().map(|[a, b]| (format!("{a}<{b}"), serde_json::json!("constant:0"))).collect();
    let diagram = serde_json::json!({"poset": poset, "spaces": spaces, "maps": maps});
    let dpath = dir.path().join("points.json");
    std::fs::write(&dpath, diagram.to_string()).unwrap();
    let out = dir.path().join("cyl.json");
    let o = run(&["compute", "--diagram", dpath.to_str().unwrap(), "--model", "cyl", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let set = from_json(&std::fs::read_to_string(&out).unwrap(), "cyl").unwrap();
    let p = FinPoset::from_file(&poset).unwrap();
    let n = nerve(&p.to_category(), None).unwrap();
    assert_eq!(is_isomorphic(&set, &n.set, 100_000).verdict(), "isomorphic");
}

#[test]
fn total_space_over_the_boundary_of_a_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.json");
    let o = run(&[
        "compute",
        "--diagram",
        &data("boundary_triangle_s0.json"),
        "--model",
        "total_space",
        "--complex",
        &data("boundary_triangle_complex.json"),
        "--out",
        out.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["homology"]["betti"], serde_json::json!([2, 2]));
    assert_eq!(v["result"]["audit"]["iota_iso"], true);
    assert!(out.exists());
}

#[test]
fn non_equivalences_exit_with_four() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("d.json");
    std::fs::write(
        &d,
        r#"{
        "poset": {"elements": ["0", "1", "0.1"], "relation": [["0", "0.1"], ["1", "0.1"]]},
        "spaces": {"0": "S0", "1": "point", "0.1": "point"},
        "maps": {"0<0.1": "constant:0", "1<0.1": "identity"}
    }"#,
    )
    .unwrap();
    let c = dir.path().join("c.json");
    std::fs::write(&c, r#"{"facets": [["0", "1"]]}"#).unwrap();
    let o = run(&["compute", "--diagram", d.to_str().unwrap(), "--model", "total_space", "--complex", c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("0 < 0.1"));
}

#[test]
fn exit_codes_for_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"elements": ["a"], "relation": ["#).unwrap();
    assert_eq!(run(&["verify", "--poset", bad.to_str().unwrap()]).status.code(), Some(2));
    let cyc = dir.path().join("cyc.json");
    std::fs::write(&cyc, r#"{"elements": ["a", "b"], "relation": [["a", "b"], ["b", "a"]]}"#).unwrap();
    assert_eq!(run(&["verify", "--poset", cyc.to_str().unwrap()]).status.code(), Some(3));
    let o = run(&["compute", "--diagram", &data("suspension.json"), "--model", "total_space"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut runs = Vec::new();
    for _ in 0..2 {
        let o = run(&["verify", "--poset", &data("boundary_triangle.json"), "--suite", "identities", "--format", "json", "--out", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        runs.push(std::fs::read_to_string(&path).unwrap());
    }
    assert_eq!(runs[0], runs[1]);
    let ta = runs[0].as_bytes();
    let v: serde_json::Value = serde_json::from_slice(ta).unwrap();
    assert_eq!(v["config"]["suite"], "identities");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
}
