use std::path::Path;

use cohocolim::fincat::{FinCategory, FinPoset, PosetFile};
use cohocolim::freeres::{
    contractibility, extra_degeneracy, homotopy_laws, iota_laws, kappa_identities, kappa_lambda, lambda_simplicial,
    simplicial_identities, LawReport, Resolution,
};
use cohocolim::hocolim::{
    coherent_from_strict, compare_models, fresh_apex, lemma1_decomposition, lemma2_pushout_verify, load_complex,
    load_diagram, standard_rectification, total_space_pipeline, ClassicalHocolim, Cyl, Hocolim, StrictDiagram,
};
use cohocolim::homalg::homology;
use cohocolim::simpset::standard::point;
use cohocolim::simpset::SimplicialSet;
use cohocolim::{Error, Result};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{Model, RunConfig, Suite};

/// Degrees above this need `--force-dim`.
const DIM_GUARD: usize = 6;

pub struct Outcome {
    pub passed: bool,
    pub result: Value,
    pub text: String,
    /// Simplicial set written by `compute`.
    pub set: Option<SimplicialSet>,
}

pub fn load_poset(path: &str) -> Result<FinPoset> {
    let text = std::fs::read_to_string(path)?;
    let file: PosetFile = serde_json::from_str(&text).map_err(|e| Error::Parse { location: path.into(), message: e.to_string() })?;
    FinPoset::from_file(&file).map_err(|e| match e {
        Error::Validation(m) => Error::Parse { location: path.into(), message: m },
        other => other,
    })
}

fn maxdim(cfg: &RunConfig, cat: &FinCategory) -> Result<usize> {
    let d = match cfg.maxdim {
        Some(d) => d,
        None => cat.longest_chain()?,
    };
    if d > DIM_GUARD && !cfg.force_dim {
        return Err(Error::UnsupportedCategory(format!("maximal degree {d} is above {DIM_GUARD}; pass --force-dim")));
    }
    Ok(d)
}

pub fn resolve(cfg: &RunConfig, path: &str, c: &str, d: &str) -> Result<Outcome> {
    let p = load_poset(path)?;
    let cat = p.to_category();
    let (co, dobj) = (cat.object_by_name(c)?, cat.object_by_name(d)?);
    let top = maxdim(cfg, &cat)?;
    let mut res = Resolution::new(&cat)?;
    let mut degrees = Vec::new();
    let mut census = Vec::new();
    let mut text = String::new();
    for n in 0..=top {
        let words = res.words(n, co, dobj);
        let nondeg = words.iter().filter(|w| !w.is_degenerate()).count();
        text.push_str(&format!("deg{n}:\n"));
        let entries: Vec<Value> = words
            .iter()
            .map(|w| {
                let shown = if w.is_empty() { format!("()^{n}") } else { w.show(&cat) };
                let flag = if w.is_degenerate() { "degenerate" } else { "nondeg" };
                text.push_str(&format!("  {shown}  {flag}\n"));
                json!({"word": shown, "degenerate": w.is_degenerate()})
            })
            .collect();
        census.push(format!("deg{n}: {nondeg} nondeg"));
        degrees.push(json!({"degree": n, "words": entries, "nondegenerate": nondeg}));
    }
    let census = census.join("; ");
    text.push_str(&format!("census: {census}\n"));
    Ok(Outcome { passed: true, result: json!({"degrees": degrees, "census": census}), text, set: None })
}

/// One line of a verification report.
#[derive(Serialize)]
struct Entry {
    name: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    instances: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violations: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    counterexamples: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<Value>,
}

impl From<LawReport> for Entry {
    fn from(r: LawReport) -> Self {
        Entry {
            name: r.law.clone(),
            passed: r.passes(),
            instances: Some(r.instances),
            violations: Some(r.violations),
            counterexamples: r.counterexamples,
            detail: None,
        }
    }
}

fn entry<T: Serialize>(name: &str, passed: bool, detail: &T) -> Result<Entry> {
    Ok(Entry {
        name: name.into(),
        passed,
        instances: None,
        violations: None,
        counterexamples: Vec::new(),
        detail: Some(serde_json::to_value(detail)?),
    })
}

pub fn verify(cfg: &RunConfig, path: &str, suite: Suite) -> Result<Outcome> {
    let p = load_poset(path)?;
    let cat = p.to_category();
    let top = maxdim(cfg, &cat)?;
    let points = coherent_from_strict(&StrictDiagram::constant(p.clone(), point()));
    let mut entries: Vec<Entry> = Vec::new();
    let run = |s: Suite| suite == s || suite == Suite::All;
    if run(Suite::Identities) {
        entries.push(simplicial_identities(&cat, top)?.into());
        entries.push(extra_degeneracy(&cat, top)?.into());
        entries.extend(kappa_identities(&cat, top)?.into_iter().map(Entry::from));
        entries.push(contractibility(&cat)?.into());
    }
    if run(Suite::Comparison) {
        entries.push(kappa_lambda(&cat, top)?.into());
        entries.push(lambda_simplicial(&cat, top)?.into());
        entries.extend(homotopy_laws(&cat, top)?.into_iter().map(Entry::from));
        let m = compare_models(&points)?;
        entries.push(entry("models of the constant point diagram", m.all_iso(), &m)?);
    }
    if run(Suite::Decomposition) {
        entries.extend(iota_laws(&cat, top)?.into_iter().map(Entry::from));
        let coned = p.cone(&fresh_apex(&p))?;
        let over_cone = coherent_from_strict(&StrictDiagram::constant(coned, point()));
        let l1 = lemma1_decomposition(&over_cone, cfg.budget)?.report;
        entries.push(entry("cyl over a cone is a mapping cylinder", l1.passes(), &l1)?);
        let l2 = lemma2_pushout_verify(&points, top.min(2))?;
        entries.push(entry("decomposition along the maximal elements", l2.passes(), &l2)?);
        let r = standard_rectification(&points, cfg.budget)?.audit;
        entries.push(entry("standard rectification", r.passes(), &r)?);
    }
    let passed = entries.iter().all(|e| e.passed);
    let mut text = String::new();
    for e in &entries {
        let mark = if e.passed { "PASS" } else { "FAIL" };
        match (e.instances, e.violations) {
            (Some(i), Some(0)) => text.push_str(&format!("{mark} {} ({i} instances)\n", e.name)),
            (Some(i), Some(v)) => text.push_str(&format!("{mark} {} ({v} of {i} instances)\n", e.name)),
            _ => text.push_str(&format!("{mark} {}\n", e.name)),
        }
        for c in &e.counterexamples {
            text.push_str(&format!("    counterexample: {c}\n"));
        }
    }
    let failed = entries.iter().filter(|e| !e.passed).count();
    text.push_str(&format!("{} checks, {failed} failed\n", entries.len()));
    Ok(Outcome { passed, result: json!({"checks": entries}), text, set: None })
}

fn homology_text(set: &SimplicialSet) -> (Value, String) {
    let h = homology(set);
    let text = format!("simplices per degree: {:?}\nhomology: {}\n", set.counts(), h.summary());
    (json!({"counts": set.counts(), "homology": h}), text)
}

pub fn compute(cfg: &RunConfig, diagram: &str, model: Model, complex: Option<&str>) -> Result<Outcome> {
    let loaded = load_diagram(Path::new(diagram))?;
    let need_strict = || {
        loaded.strict.clone().ok_or_else(|| Error::UnsupportedCategory("this model needs a strict diagram".into()))
    };
    let (set, passed, extra) = match model {
        Model::Cyl => (Cyl::new(&loaded.coherent)?.set().clone(), true, None),
        Model::HocolimCoherent => (Hocolim::new(&loaded.coherent)?.set().clone(), true, None),
        Model::HocolimBk => (ClassicalHocolim::new(&need_strict()?)?.set().clone(), true, None),
        Model::Rectify => {
            let r = standard_rectification(&loaded.coherent, cfg.budget)?;
            let passed = r.audit.passes();
            (r.colimit, passed, Some(serde_json::to_value(&r.audit)?))
        }
        Model::TotalSpace => {
            let path = complex.ok_or_else(|| Error::Precondition("total_space needs --complex".into()))?;
            let b = load_complex(Path::new(path))?;
            let t = total_space_pipeline(&b.facets, &need_strict()?, cfg.budget)?;
            let passed = t.report.passes();
            (t.x.set().clone(), passed, Some(serde_json::to_value(&t.report)?))
        }
    };
    let (mut result, mut text) = homology_text(&set);
    if let Some(audit) = extra {
        text.push_str(&format!("audit: {}\n", if passed { "pass" } else { "fail" }));
        text.push_str(&format!("{}\n", serde_json::to_string_pretty(&audit)?));
        result["audit"] = audit;
    }
    Ok(Outcome { passed, result, text, set: Some(set) })
}
