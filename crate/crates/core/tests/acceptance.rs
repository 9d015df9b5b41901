//! The acceptance criteria, one pass/fail line each.
//!
//! A criterion listed in `BLOCKED` is evaluated exactly like the others and
//! printed as FAIL; the target only goes red if a criterion outside that
//! list fails, or if a blocked one starts passing.

use std::io::Write;
use std::time::{Duration, Instant};

use cohocolim::fincat::{FinCategory, FinPoset, Obj};
use cohocolim::freeres::{
    census, contractibility, extra_degeneracy, homotopy_laws, iota_laws, kappa_identities, kappa_lambda, kappa_map,
    psi_sset, simplicial_identities, Coned, LawReport, Resolution,
};
use cohocolim::hocolim::{
    cofinality_check, coherent_from_strict, compare_models, lemma1_decomposition, lemma2_pushout_verify,
    standard_rectification, total_space_pipeline, StrictDiagram,
};
use cohocolim::homalg::{compare_map, homology};
use cohocolim::simpset::standard::{delta, point, s0};
use cohocolim::simpset::{is_isomorphic, SimplexId, SimplicialMap};

/// Criteria that fail for reasons recorded with a counterexample.
const BLOCKED: &[usize] = &[3];

const BUDGET: u64 = 1_000_000;

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict { passed, detail: detail.into() }
}

fn facets(fs: &[&[&str]]) -> Vec<Vec<String>> {
    fs.iter().map(|f| f.iter().map(|v| v.to_string()).collect()).collect()
}

fn boundary_triangle() -> Vec<Vec<String>> {
    facets(&[&["0", "1"], &["1", "2"], &["0", "2"]])
}

fn test_posets() -> Vec<(&'static str, FinPoset)> {
    vec![
        ("[1]", FinPoset::chain(1)),
        ("[2]", FinPoset::chain(2)),
        ("[3]", FinPoset::chain(3)),
        ("2x2 grid", FinPoset::chain(1).product(&FinPoset::chain(1)).unwrap()),
        ("face poset of Δ²", FinPoset::face_poset(&facets(&[&["0", "1", "2"]])).unwrap()),
        ("face poset of ∂Δ²", FinPoset::face_poset(&boundary_triangle()).unwrap()),
    ]
}

/// Folds law reports into one verdict, naming the first violated law.
fn laws(reports: Vec<(String, LawReport)>) -> Verdict {
    let instances: usize = reports.iter().map(|(_, r)| r.instances).sum();
    let violations: usize = reports.iter().map(|(_, r)| r.violations).sum();
    let first = reports
        .iter()
        .find(|(_, r)| !r.passes())
        .map(|(p, r)| format!("; first: {} on {p}: {}", r.law, r.counterexamples.first().cloned().unwrap_or_default()))
        .unwrap_or_default();
    verdict(violations == 0, format!("{violations} violations in {instances} instances{first}"))
}

fn c1() -> Verdict {
    let cat = FinPoset::chain(2).to_category();
    let counts = census(&cat, Obj(0), Obj(2), 4).unwrap();
    let mut res = Resolution::new(&cat).unwrap();
    let hom = res.hom_sset(Obj(0), Obj(2), None).unwrap();
    let iso = is_isomorphic(&hom.set, &delta(1), BUDGET).verdict().to_string();
    let arrow = FinPoset::chain(1).to_category();
    let mut ares = Resolution::new(&arrow).unwrap();
    let discrete = arrow.objects().all(|c| {
        arrow.objects().all(|d| {
            let h = ares.hom_sset(c, d, None).unwrap();
            h.set.counts() == vec![arrow.hom(c, d).len()].into_iter().filter(|&n| n > 0).collect::<Vec<_>>()
        })
    });
    verdict(
        counts == vec![2, 1, 0, 0, 0] && iso == "isomorphic" && discrete,
        format!("census {counts:?}, F[2](0,2) vs Δ¹: {iso}, F[1] discrete: {discrete}"),
    )
}

fn c2() -> Verdict {
    let mut reports = Vec::new();
    for (name, p) in test_posets() {
        let cat = p.to_category();
        reports.push((name.to_string(), simplicial_identities(&cat, 4).unwrap()));
        reports.push((name.to_string(), extra_degeneracy(&cat, 4).unwrap()));
        for r in kappa_identities(&cat, 4).unwrap() {
            reports.push((name.to_string(), r));
        }
    }
    laws(reports)
}

fn c3() -> Verdict {
    let mut reports = Vec::new();
    for (name, p) in test_posets() {
        let cat = p.to_category();
        reports.push((name.to_string(), kappa_lambda(&cat, 3).unwrap()));
        for r in homotopy_laws(&cat, 3).unwrap() {
            reports.push((name.to_string(), r));
        }
        for r in kappa_identities(&cat, 3).unwrap().into_iter().filter(|r| r.law == "τκ = ε") {
            reports.push((name.to_string(), r));
        }
    }
    laws(reports)
}

/// Not a criterion: the weak equivalence the homotopy is meant to provide.
fn kappa_homology_iso() -> Verdict {
    let mut all = true;
    for (_, p) in test_posets() {
        let cat: FinCategory = p.to_category();
        let cone = Coned::new(&cat, "*").unwrap();
        let mut res = Resolution::new(&cat).unwrap();
        let mut hres = Resolution::new(&cone.hat).unwrap();
        for c in cat.objects() {
            let psi = psi_sset(&mut res, c).unwrap();
            let phi = hres.hom_sset(c, cone.apex, None).unwrap();
            let k = kappa_map(&cone, &psi, &phi).unwrap();
            all &= homology(&psi.set).is_acyclic() && compare_map(&psi.set, &phi.set, &k).is_iso();
        }
    }
    verdict(all, "κ: ψ(c) → φ(c) on every test poset and object")
}

fn c4() -> Verdict {
    let mut reports = Vec::new();
    for (name, p) in test_posets() {
        for r in iota_laws(&p.to_category(), 4).unwrap() {
            reports.push((name.to_string(), r));
        }
    }
    laws(reports)
}

fn c5() -> Verdict {
    laws(test_posets().into_iter().map(|(n, p)| (n.to_string(), contractibility(&p.to_category()).unwrap())).collect())
}

fn c6() -> Verdict {
    let p = FinPoset::from_named(&["x", "a", "b"], &[("x", "a"), ("x", "b")]).unwrap();
    let to_pt = SimplicialMap::constant(&s0(), SimplexId::new(0, 0));
    let f = StrictDiagram::new(p, vec![s0(), point(), point()], vec![(0, 1, to_pt.clone()), (0, 2, to_pt)]).unwrap();
    let m = compare_models(&coherent_from_strict(&f)).unwrap();
    let betti = [Some(&m.cyl), Some(&m.hocolim), m.classical.as_ref()].map(|h| h.map(|h| h.betti.clone()));
    let circles = betti.iter().all(|b| b.as_deref() == Some(&[1, 1][..]));
    let maps = m.kappa.is_iso() && m.epsilon.as_ref().is_some_and(|e| e.is_iso());
    let triangle = m.triangle_commutes == Some(true);
    verdict(circles && maps && triangle, format!("Betti {betti:?}, κ/ε iso {maps}, τκ = ε {triangle}"))
}

fn c7() -> Verdict {
    let u = SimplicialMap::constant(&s0(), SimplexId::new(0, 1));
    let v = SimplicialMap::constant(&delta(1), SimplexId::new(0, 0));
    let cases = [
        ("cone on ∅", StrictDiagram::new(FinPoset::chain(0), vec![s0()], vec![]).unwrap()),
        ("cone on pt", StrictDiagram::new(FinPoset::chain(1), vec![s0(), delta(1)], vec![(0, 1, u.clone())]).unwrap()),
        (
            "cone on [1]",
            StrictDiagram::new(FinPoset::chain(2), vec![s0(), delta(1), point()], vec![(0, 1, u), (1, 2, v)]).unwrap(),
        ),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, f) in cases {
        let r = lemma1_decomposition(&coherent_from_strict(&f), BUDGET).unwrap().report;
        ok &= r.iota_isomorphism && r.search == "isomorphic" && r.apex_inclusion_iso;
        detail.push(format!("{name}: ι-iso {}, search {}", r.iota_isomorphism, r.search));
    }
    verdict(ok, detail.join("; "))
}

fn c8() -> Verdict {
    let square = FinPoset::face_poset(&facets(&[&["a", "b"], &["b", "c"], &["c", "d"], &["d", "a"]])).unwrap();
    let tri = FinPoset::face_poset(&boundary_triangle()).unwrap();
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, p) in [("square", square), ("∂Δ²", tri)] {
        let r = lemma2_pushout_verify(&coherent_from_strict(&StrictDiagram::constant(p, s0())), 2).unwrap();
        ok &= r.passes();
        detail.push(format!(
            "{name}: {} pushouts, {} pullbacks, injective {}, iso {}",
            r.nerve_pushouts.len(),
            r.alpha_pullbacks.len(),
            r.verticals_injective,
            r.cyl_pushout_iso
        ));
    }
    verdict(ok, detail.join("; "))
}

fn c9() -> Verdict {
    let u = SimplicialMap::constant(&s0(), SimplexId::new(0, 1));
    let v = SimplicialMap::constant(&delta(1), SimplexId::new(0, 0));
    let chain = StrictDiagram::new(FinPoset::chain(2), vec![s0(), delta(1), point()], vec![(0, 1, u), (1, 2, v)]).unwrap();
    let tri = StrictDiagram::constant(FinPoset::face_poset(&boundary_triangle()).unwrap(), s0());
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, f) in [("[2]", chain), ("∂Δ²", tri)] {
        let a = standard_rectification(&coherent_from_strict(&f), BUDGET).unwrap().audit;
        ok &= a.passes() && a.search == "isomorphic";
        detail.push(format!("{name}: colimit iso {}, search {}, objects {}", a.colimit_iso, a.search, a.objects.len()));
    }
    verdict(ok, detail.join("; "))
}

fn c10() -> Verdict {
    let span = FinPoset::from_named(&["x", "a", "b"], &[("x", "a"), ("x", "b")]).unwrap();
    let cone = FinPoset::from_named(&["a", "b", "m"], &[("a", "m"), ("b", "m")]).unwrap();
    let max = cofinality_check(&FinPoset::chain(0), &cone, &[2], Some(&StrictDiagram::constant(cone.clone(), s0()))).unwrap();
    let feet = FinPoset::from_named(&["a", "b"], &[]).unwrap();
    let two = cofinality_check(&feet, &span, &[1, 2], None).unwrap();
    let betti0 = two.per_object.iter().find(|o| o.object == "x").map(|o| o.homology.betti(0));
    let ok = max.cofinal && max.cross_check.as_ref().is_some_and(|c| c.is_iso()) && !two.cofinal && betti0 == Some(2);
    verdict(ok, format!("maximum cofinal {}, feet cofinal {}, Betti_0 at apex {betti0:?}", max.cofinal, two.cofinal))
}

fn c11() -> Verdict {
    let b = boundary_triangle();
    let f = StrictDiagram::constant(FinPoset::face_poset(&b).unwrap(), s0());
    let r = total_space_pipeline(&b, &f, BUDGET).unwrap().report;
    let faces = r.faces.iter().all(|f| f.fiber_iso && f.injective);
    let ok = r.total.betti == vec![2, 2] && r.iota_iso && r.iota_search == "isomorphic" && faces;
    verdict(ok, format!("Betti {:?}, ι iso {} ({}), faces {faces}", r.total.betti, r.iota_iso, r.iota_search))
}

/// Bypasses the test harness capture so the lines show in every run.
fn report(line: String) {
    let _ = writeln!(std::io::stderr(), "{line}");
}

#[test]
fn acceptance() {
    type Criterion = (usize, &'static str, u64, fn() -> Verdict);
    let criteria: [Criterion; 11] = [
        (1, "resolution census", 1, c1),
        (2, "identity suites", 30, c2),
        (3, "κ/λ/H", 30, c3),
        (4, "ι bijection", 30, c4),
        (5, "contractibility", 10, c5),
        (6, "model comparison", 10, c6),
        (7, "cyl over a cone", 10, c7),
        (8, "decomposition and nerve lemmas", 10, c8),
        (9, "rectification", 60, c9),
        (10, "cofinality", 5, c10),
        (11, "total space pipeline", 60, c11),
    ];
    let mut unexpected = Vec::new();
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let v = run();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(limit);
        let passed = v.passed && in_time;
        let mark = if passed { "PASS" } else { "FAIL" };
        report(format!("criterion {n:>2} {mark} {name} ({:.2} s, limit {limit} s): {}", took.as_secs_f64(), v.detail));
        if n == 3 {
            let k = kappa_homology_iso();
            report(format!("   related: κ homology isomorphism {}: {}", if k.passed { "PASS" } else { "FAIL" }, k.detail));
        }
        if passed == BLOCKED.contains(&n) {
            unexpected.push(n);
        }
    }
    assert!(unexpected.is_empty(), "criteria with an unexpected verdict: {unexpected:?}");
}
