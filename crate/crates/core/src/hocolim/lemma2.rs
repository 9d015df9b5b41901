//! Decomposition of `cyl(F)` along the maximal elements, and the statements
//! about nerves of the resolution behind it.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::Result;
use crate::fincat::{FinCategory, FinPoset, Functor, Mor, Obj};
use crate::freeres::{Resolution, Word};
use crate::simpset::{colimit, pushout, Colimit, SetDiagram, SimplicialMap};

use super::coend::{fresh_apex, Cyl};
use super::compare::restriction_map;
use super::diagram::CoherentDiagram;

/// One exhaustive set-level check in a fixed nerve degree `m` and
/// resolution degree `n`.
#[derive(Clone, Debug, Serialize)]
pub struct NerveCheck {
    pub square: String,
    pub m: usize,
    pub n: usize,
    pub cells: usize,
    pub ok: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma2Report {
    pub maximal: Vec<String>,
    pub nerve_pushouts: Vec<NerveCheck>,
    pub alpha_pullbacks: Vec<NerveCheck>,
    /// Both vertical maps of the `cyl` square are levelwise injective.
    pub verticals_injective: bool,
    /// The map from the pushout to `cyl(F)` is an isomorphism.
    pub cyl_pushout_iso: bool,
    pub witness: Option<String>,
}

impl Lemma2Report {
    pub fn passes(&self) -> bool {
        self.nerve_pushouts.iter().all(|c| c.ok)
            && self.alpha_pullbacks.iter().all(|c| c.ok)
            && self.verticals_injective
            && self.cyl_pushout_iso
    }
}

/// An `m`-simplex of the nerve of `F_nC`: a start object and `m` composable
/// words, first applied first.
type NerveCell = (Obj, Vec<Word>);

fn nerve_cells(res: &mut Resolution<'_>, m: usize, n: usize) -> Vec<NerveCell> {
    let cat = res.category();
    let mut out: Vec<NerveCell> = cat.objects().map(|o| (o, Vec::new())).collect();
    for _ in 0..m {
        let mut next = Vec::new();
        for (start, ws) in out {
            let cur = ws.last().map_or(start, |w| w.target(cat));
            for d in cat.objects() {
                for w in res.words(n, cur, d) {
                    let mut v = ws.clone();
                    v.push(w);
                    next.push((start, v));
                }
            }
        }
        out = next;
    }
    out
}

fn map_cell(f: &Functor, x: &NerveCell) -> NerveCell {
    (f.obj(x.0), x.1.iter().map(|w| w.map(f)).collect())
}

/// Forgetting the parentheses: the string of non-identity morphisms.
fn alpha(x: &NerveCell) -> (Obj, Vec<Mor>) {
    (x.0, x.1.iter().flat_map(|w| w.leaves().into_iter().rev()).collect())
}

fn show_cell(cat: &FinCategory, x: &NerveCell) -> String {
    let ws: Vec<String> = x.1.iter().map(|w| w.show(cat)).collect();
    format!("{}[{}]", cat.object_name(x.0), ws.join(", "))
}

/// Strings of `k` composable non-identities, for all `k`.
fn strings(cat: &FinCategory, max: usize) -> Vec<(Obj, Vec<Mor>)> {
    let mut all = Vec::new();
    let mut cur: Vec<(Obj, Vec<Mor>)> = cat.objects().map(|o| (o, Vec::new())).collect();
    for _ in 0..=max {
        let mut next = Vec::new();
        for (s, ms) in &cur {
            let end = ms.last().map_or(*s, |m| cat.target(*m));
            for m in cat.non_identity_out_of(end) {
                let mut v = ms.clone();
                v.push(m);
                next.push((*s, v));
            }
        }
        all.append(&mut cur);
        cur = next;
    }
    all
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra.max(rb)] = ra.min(rb);
    }
}

/// The four cones of the square `C_0 → C_1, C_2 → C` and its functors.
struct Square {
    cats: [FinCategory; 4],
    /// `f_1, f_2, g_1, g_2`.
    functors: [(usize, usize, Functor); 4],
}

fn monotone(src: &FinPoset, tgt: &FinPoset, map: &[usize]) -> Result<Functor> {
    src.monotone_functor(tgt, map)
}

fn square(p: &FinPoset) -> Result<Square> {
    let apex = fresh_apex(p);
    let max = p.maximal();
    let rest = p.remove_maximal();
    let downs: Vec<_> = max.iter().map(|&m| p.down_set(m)).collect();
    let punct: Vec<_> = max.iter().map(|&m| p.down_set_punctured(m)).collect();
    let tags: Vec<String> = max.iter().map(|&m| p.name(m).to_string()).collect();
    let c0 = FinPoset::disjoint_union(&punct.iter().map(|s| s.poset.clone()).collect::<Vec<_>>(), &tags)?;
    let c2 = FinPoset::disjoint_union(&downs.iter().map(|s| s.poset.clone()).collect::<Vec<_>>(), &tags)?;
    let c1 = rest.poset.clone();
    let pos_in_rest = |i: usize| rest.map.iter().position(|&r| r == i).expect("non-maximal element");
    let mut f1 = Vec::new();
    let mut f2 = Vec::new();
    let mut off2 = 0;
    for (e, d) in punct.iter().zip(&downs) {
        for &i in &e.map {
            f1.push(pos_in_rest(i));
            f2.push(off2 + d.map.iter().position(|&r| r == i).expect("below m"));
        }
        off2 += d.map.len();
    }
    let g1 = rest.map.clone();
    let g2: Vec<usize> = downs.iter().flat_map(|d| d.map.iter().copied()).collect();
    let hats = [c0.cone(&apex)?, c1.cone(&apex)?, c2.cone(&apex)?, p.cone(&apex)?];
    let ext = |m: &[usize], tgt: usize| -> Vec<usize> { m.iter().copied().chain([tgt]).collect() };
    let functors = [
        (0, 1, monotone(&hats[0], &hats[1], &ext(&f1, hats[1].len() - 1))?),
        (0, 2, monotone(&hats[0], &hats[2], &ext(&f2, hats[2].len() - 1))?),
        (1, 3, monotone(&hats[1], &hats[3], &ext(&g1, hats[3].len() - 1))?),
        (2, 3, monotone(&hats[2], &hats[3], &ext(&g2, hats[3].len() - 1))?),
    ];
    let cats = [0, 1, 2, 3].map(|i| hats[i].to_category());
    Ok(Square { cats, functors })
}

fn pushout_check(sq: &Square, m: usize, n: usize) -> Result<NerveCheck> {
    let mut cells = Vec::new();
    for cat in &sq.cats {
        cells.push(nerve_cells(&mut Resolution::new(cat)?, m, n));
    }
    let index: Vec<HashMap<NerveCell, usize>> =
        cells.iter().map(|cs| cs.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect()).collect();
    let (b1, b2) = (cells[1].len(), cells[2].len());
    let mut uf = UnionFind((0..b1 + b2).collect());
    let (f1, f2, g1, g2) = (&sq.functors[0].2, &sq.functors[1].2, &sq.functors[2].2, &sq.functors[3].2);
    for x in &cells[0] {
        let a = index[1][&map_cell(f1, x)];
        let b = index[2][&map_cell(f2, x)];
        uf.union(a, b1 + b);
    }
    let target = |i: usize| -> NerveCell {
        if i < b1 {
            map_cell(g1, &cells[1][i])
        } else {
            map_cell(g2, &cells[2][i - b1])
        }
    };
    let mut class_image: HashMap<usize, NerveCell> = HashMap::new();
    let mut hit: HashMap<NerveCell, usize> = HashMap::new();
    let mut witness = None;
    for i in 0..b1 + b2 {
        let r = uf.find(i);
        let t = target(i);
        match class_image.get(&r) {
            Some(prev) if prev != &t => {
                witness.get_or_insert(format!("class maps to two cells {}", show_cell(&sq.cats[3], &t)));
            }
            Some(_) => {}
            None => {
                class_image.insert(r, t.clone());
                if let Some(other) = hit.insert(t.clone(), r) {
                    if other != r {
                        witness.get_or_insert(format!("two classes over {}", show_cell(&sq.cats[3], &t)));
                    }
                }
            }
        }
    }
    for c in &cells[3] {
        if !hit.contains_key(c) {
            witness.get_or_insert(format!("{} is not in the pushout", show_cell(&sq.cats[3], c)));
        }
    }
    Ok(NerveCheck { square: "pushout".into(), m, n, cells: cells[3].len(), ok: witness.is_none(), witness })
}

/// `α` squares for a functor sending non-identities to non-identities.
pub fn alpha_pullback_check(src: &FinCategory, tgt: &FinCategory, f: &Functor, m: usize, n: usize, name: &str) -> Result<NerveCheck> {
    let xs = nerve_cells(&mut Resolution::new(src)?, m, n);
    let ys = nerve_cells(&mut Resolution::new(tgt)?, m, n);
    let mut count: HashMap<(NerveCell, (Obj, Vec<Mor>)), usize> = HashMap::new();
    for x in &xs {
        *count.entry((map_cell(f, x), alpha(x))).or_default() += 1;
    }
    let longest = src.longest_chain()?;
    let mut over: HashMap<(Obj, Vec<Mor>), Vec<(Obj, Vec<Mor>)>> = HashMap::new();
    for s in strings(src, longest) {
        let image = (f.obj(s.0), s.1.iter().map(|m| f.mor(*m)).collect());
        over.entry(image).or_default().push(s);
    }
    let mut witness = None;
    let mut cells = 0;
    for y in &ys {
        for s in over.get(&alpha(y)).map_or(&[][..], Vec::as_slice) {
            cells += 1;
            let c = count.get(&(y.clone(), s.clone())).copied().unwrap_or(0);
            if c != 1 {
                witness.get_or_insert(format!("{} lifts {c} times over {}", show_cell(tgt, y), src.object_name(s.0)));
            }
        }
    }
    Ok(NerveCheck { square: format!("alpha {name}"), m, n, cells, ok: witness.is_none(), witness })
}

fn coproduct_of(parts: &[(String, &Cyl)]) -> Result<(SetDiagram, Colimit)> {
    let mut d = SetDiagram::default();
    for (tag, c) in parts {
        d.add_object(format!("{tag}:"), c.set().clone());
    }
    let col = colimit(&d)?;
    Ok((d, col))
}

/// Nerve-level checks for `m ≤ 2` and resolution degrees up to `max_n`,
/// and the `cyl`-level pushout square.
pub fn lemma2_pushout_verify(f: &CoherentDiagram, max_n: usize) -> Result<Lemma2Report> {
    let p = f.poset();
    let max = p.maximal();
    let sq = square(p)?;
    let mut nerve_pushouts = Vec::new();
    let mut alpha_pullbacks = Vec::new();
    let names = ["f1", "f2", "g1", "g2"];
    for m in 0..=2 {
        for n in 0..=max_n {
            nerve_pushouts.push(pushout_check(&sq, m, n)?);
            for (k, (s, t, func)) in sq.functors.iter().enumerate() {
                alpha_pullbacks.push(alpha_pullback_check(&sq.cats[*s], &sq.cats[*t], func, m, n, names[k])?);
            }
        }
    }

    let whole = Cyl::new(f)?;
    let rest = Cyl::new(&f.restrict(&p.remove_maximal().map)?)?;
    let rest_to_whole = restriction_map(&rest, &whole)?;
    let mut a_parts = Vec::new();
    let mut b_parts = Vec::new();
    for &m in &max {
        a_parts.push((p.name(m).to_string(), Cyl::new(&f.restrict(&p.down_set_punctured(m).map)?)?));
        b_parts.push((p.name(m).to_string(), Cyl::new(&f.restrict(&p.down_set(m).map)?)?));
    }
    let (da, ca) = coproduct_of(&a_parts.iter().map(|(t, c)| (t.clone(), c)).collect::<Vec<_>>())?;
    let (db, cb) = coproduct_of(&b_parts.iter().map(|(t, c)| (t.clone(), c)).collect::<Vec<_>>())?;
    let mut a_to_b = Vec::new();
    let mut a_to_rest = Vec::new();
    let mut b_to_whole = Vec::new();
    for (i, ((_, a), (_, b))) in a_parts.iter().zip(&b_parts).enumerate() {
        a_to_b.push(cb.legs[i].after(&restriction_map(a, b)?));
        a_to_rest.push(restriction_map(a, &rest)?);
        b_to_whole.push(restriction_map(b, &whole)?);
    }
    let left = ca.factor(&da, &a_to_b, &cb.set)?;
    let top = ca.factor(&da, &a_to_rest, rest.set())?;
    let bottom = cb.factor(&db, &b_to_whole, whole.set())?;
    let verticals_injective = left.is_levelwise_injective() && rest_to_whole.is_levelwise_injective();
    let mut witness = None;
    let mut cyl_pushout_iso = false;
    if left.is_levelwise_injective() {
        let (pd, po) = pushout(&ca.set, &cb.set, rest.set(), &left, &top, ["a:", "b:", ""])?;
        let cocone: [SimplicialMap; 3] = [rest_to_whole.after(&top), bottom, rest_to_whole.clone()];
        match po.factor(&pd, &cocone, whole.set()) {
            Ok(u) => {
                cyl_pushout_iso = u.is_isomorphism(&po.set, whole.set());
                if !cyl_pushout_iso {
                    witness = Some(format!("pushout {:?} vs cyl {:?}", po.set.counts(), whole.set().counts()));
                }
            }
            Err(e) => witness = Some(format!("square does not commute: {e}")),
        }
    } else {
        witness = Some("left vertical map is not levelwise injective".into());
    }
    if witness.is_none() {
        witness = nerve_pushouts.iter().chain(&alpha_pullbacks).find_map(|c| c.witness.clone());
    }
    Ok(Lemma2Report {
        maximal: max.iter().map(|&m| p.name(m).to_string()).collect(),
        nerve_pushouts,
        alpha_pullbacks,
        verticals_injective,
        cyl_pushout_iso,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hocolim::{coherent_from_strict, StrictDiagram};
    use crate::simpset::standard::point;

    #[test]
    fn chain_has_one_maximal_element() {
        let f = coherent_from_strict(&StrictDiagram::constant(FinPoset::chain(2), point()));
        let r = lemma2_pushout_verify(&f, 1).unwrap();
        assert_eq!(r.maximal, vec!["2"]);
        assert!(r.passes(), "{:?}", r.witness);
    }

    #[test]
    fn alpha_on_a_chain() {
        let p = FinPoset::chain(2);
        let sub = p.full_subposet(&[0, 2]);
        let (src, tgt) = (sub.poset.to_category(), p.to_category());
        let f = sub.functor(&p);
        let c = alpha_pullback_check(&src, &tgt, &f, 1, 1, "inclusion").unwrap();
        assert!(c.ok);
        assert!(c.cells > 0);
    }

    fn facets(fs: &[&[&str]]) -> FinPoset {
        FinPoset::face_poset(&fs.iter().map(|f| f.iter().map(|v| v.to_string()).collect()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn boundary_of_a_triangle() {
        let p = facets(&[&["0", "1"], &["1", "2"], &["0", "2"]]);
        let f = coherent_from_strict(&StrictDiagram::constant(p, point()));
        let r = lemma2_pushout_verify(&f, 2).unwrap();
        assert_eq!(r.maximal.len(), 3);
        assert!(r.passes(), "{:?}", r.witness);
    }

    #[test]
    fn square_with_two_points_everywhere() {
        let p = facets(&[&["a", "b"], &["b", "c"], &["c", "d"], &["d", "a"]]);
        let f = coherent_from_strict(&StrictDiagram::constant(p, crate::simpset::standard::s0()));
        let r = lemma2_pushout_verify(&f, 1).unwrap();
        assert!(r.passes(), "{:?}", r.witness);
    }
}
