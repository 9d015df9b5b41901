//! Exhaustive checks of the simplicial structure of the resolution and of
//! the comparison maps on small posets.

use std::collections::HashSet;

use cohocolim::fincat::{FinCategory, FinPoset, Obj};
use cohocolim::freeres::{
    homotopy_h, iota, k_of, kappa, lambda, psi_simplices, tau, x_op, Coned, DoubleCone, PsiSimplex, Resolution, Word,
};

fn posets() -> Vec<(&'static str, FinPoset)> {
    let grid = FinPoset::chain(1).product(&FinPoset::chain(1)).unwrap();
    let tri = FinPoset::face_poset(&[vec!["a".into(), "b".into(), "c".into()]]).unwrap();
    vec![("[1]", FinPoset::chain(1)), ("[2]", FinPoset::chain(2)), ("[3]", FinPoset::chain(3)), ("grid", grid), ("triangle", tri)]
}

fn all_words(res: &mut Resolution<'_>, cat: &FinCategory, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for c in cat.objects() {
        for d in cat.objects() {
            out.extend(res.words(n, c, d));
        }
    }
    out
}

#[test]
fn simplicial_identities_on_words() {
    for (name, p) in posets() {
        let cat = p.to_category();
        let mut res = Resolution::new(&cat).unwrap();
        let top = if p.len() > 4 { 3 } else { 4 };
        for n in 0..=top {
            for w in all_words(&mut res, &cat, n) {
                w.validate(&cat).unwrap();
                // faces
                for j in 0..=n {
                    for i in 0..j {
                        if n >= 2 {
                            let lhs = w.face(&cat, j).unwrap().face(&cat, i).unwrap();
                            let rhs = w.face(&cat, i).unwrap().face(&cat, j - 1).unwrap();
                            assert_eq!(lhs, rhs, "{name}: d{i}d{j} on {}", w.show(&cat));
                        }
                    }
                }
                // degeneracies
                for j in 0..=n {
                    for i in 0..=j {
                        let lhs = w.degeneracy(j).unwrap().degeneracy(i).unwrap();
                        let rhs = w.degeneracy(i).unwrap().degeneracy(j + 1).unwrap();
                        assert_eq!(lhs, rhs, "{name}: s{i}s{j} on {}", w.show(&cat));
                    }
                }
                // mixed
                for j in 0..=n {
                    let sj = w.degeneracy(j).unwrap();
                    for i in 0..=n + 1 {
                        let lhs = sj.face(&cat, i).unwrap();
                        if i == j || i == j + 1 {
                            assert_eq!(lhs, w, "{name}: d{i}s{j}");
                        } else if n >= 1 && i < j {
                            assert_eq!(lhs, w.face(&cat, i).unwrap().degeneracy(j - 1).unwrap(), "{name}: d{i}s{j}");
                        } else if n >= 1 {
                            assert_eq!(lhs, w.face(&cat, i - 1).unwrap().degeneracy(j).unwrap(), "{name}: d{i}s{j}");
                        }
                    }
                }
                // degeneracy detection agrees with the images of s_i
                let deg = (0..n).any(|i| w.face(&cat, i).ok().and_then(|f| f.degeneracy(i).ok()) == Some(w.clone()));
                assert_eq!(deg, w.is_degenerate(), "{name}: degeneracy of {}", w.show(&cat));
            }
        }
    }
}

#[test]
fn extra_degeneracy_relations() {
    for (name, p) in posets() {
        let cat = p.to_category();
        let mut res = Resolution::new(&cat).unwrap();
        for n in 0..=3 {
            for w in all_words(&mut res, &cat, n) {
                let fw = w.extra_f();
                assert_eq!(fw.face(&cat, 0).unwrap(), w, "{name}: d0 F");
                assert_eq!(fw.degeneracy(0).unwrap(), fw.extra_f(), "{name}: s0 F");
                for i in 1..=n + 1 {
                    let lhs = fw.face(&cat, i).unwrap();
                    let rhs = if n == 0 {
                        Word::from_chain(&cat, w.source, &[w.augment(&cat)])
                    } else {
                        w.face(&cat, i - 1).unwrap().extra_f()
                    };
                    assert_eq!(lhs, rhs, "{name}: d{i} F");
                    assert_eq!(fw.degeneracy(i).unwrap(), w.degeneracy(i - 1).unwrap().extra_f(), "{name}: s{i} F");
                }
                // augmentation survives every face
                if n >= 1 {
                    for i in 0..=n {
                        assert_eq!(w.face(&cat, i).unwrap().augment(&cat), w.augment(&cat));
                    }
                }
            }
        }
    }
}

#[test]
fn word_counts_match_factorizations() {
    // F_0[n](0, n) is the set of factorizations: 2^(n-1) of them
    for n in 1..=4 {
        let cat = FinPoset::chain(n).to_category();
        let mut res = Resolution::new(&cat).unwrap();
        assert_eq!(res.words(0, Obj(0), Obj(n)).len(), 1 << (n - 1));
    }
}

fn cones() -> Vec<(&'static str, FinCategory)> {
    posets().into_iter().map(|(n, p)| (n, p.to_category())).collect()
}

#[test]
fn kappa_is_simplicial_and_natural() {
    for (name, cat) in cones() {
        let cone = Coned::new(&cat, "*").unwrap();
        let mut res = Resolution::new(&cat).unwrap();
        for c in cat.objects() {
            for n in 0..=2 {
                for x in psi_simplices(&mut res, c, n) {
                    x.validate(&cat).unwrap();
                    let k = kappa(&cone, &x).unwrap();
                    k.validate(&cone.hat).unwrap();
                    for i in 0..=n {
                        if n >= 1 {
                            assert_eq!(
                                k.face(&cone.hat, i).unwrap(),
                                kappa(&cone, &x.face(&cat, i).unwrap()).unwrap(),
                                "{name}: d{i} κ on {}",
                                x.show(&cat)
                            );
                        }
                        assert_eq!(
                            k.degeneracy(i).unwrap(),
                            kappa(&cone, &x.degeneracy(&cat, i).unwrap()).unwrap(),
                            "{name}: s{i} κ on {}",
                            x.show(&cat)
                        );
                    }
                    // naturality in c
                    for b in cat.objects() {
                        for g in res.words(n, b, c) {
                            assert_eq!(
                                kappa(&cone, &x.precompose(&cat, &g).unwrap()).unwrap(),
                                k.compose(&cone.hat, &cone.lift(&g)).unwrap()
                            );
                        }
                    }
                    // λκ is the x_j formula
                    let lk = lambda(&cone, &k).unwrap();
                    let direct = PsiSimplex {
                        source: x.source,
                        comps: x.comps.iter().enumerate().map(|(j, f)| x_op(&cat, f, j).unwrap()).collect(),
                    };
                    assert_eq!(lk, direct, "{name}: λκ on {}", x.show(&cat));
                    // τκ = ε
                    assert_eq!(tau(&cone, &k).unwrap(), x.augmentations(&cat), "{name}: τκ on {}", x.show(&cat));
                }
            }
        }
    }
}

#[test]
fn kappa_lambda_is_identity() {
    for (name, cat) in cones() {
        let cone = Coned::new(&cat, "*").unwrap();
        let mut hres = Resolution::new(&cone.hat).unwrap();
        for c in cat.objects() {
            for n in 0..=3 {
                for w in hres.words(n, c, cone.apex) {
                    let l = lambda(&cone, &w).unwrap();
                    l.validate(&cat).unwrap();
                    assert_eq!(kappa(&cone, &l).unwrap(), w, "{name}: κλ on {}", w.show(&cone.hat));
                }
            }
        }
    }
}

fn alphas(n: usize) -> Vec<Vec<u32>> {
    (0..=n + 1).map(|k| (0..=n).map(|i| u32::from(i >= k)).collect()).collect()
}

#[test]
fn homotopy_ends_outer_faces_and_degeneracies() {
    for (name, cat) in cones() {
        let cone = Coned::new(&cat, "*").unwrap();
        let mut res = Resolution::new(&cat).unwrap();
        for c in cat.objects() {
            for n in 0..=2 {
                for x in psi_simplices(&mut res, c, n) {
                    assert_eq!(homotopy_h(&cat, &x, 0).unwrap(), x);
                    let lk = lambda(&cone, &kappa(&cone, &x).unwrap()).unwrap();
                    assert_eq!(homotopy_h(&cat, &x, n + 1).unwrap(), lk, "{name}");
                    for a in alphas(n) {
                        let h = homotopy_h(&cat, &x, k_of(&a)).unwrap();
                        h.validate(&cat).unwrap();
                        for i in 0..=n {
                            // the inner faces fail, see `lambda_misses_inner_faces`
                            if n >= 1 && (i == 0 || i == n) {
                                let mut da = a.clone();
                                da.remove(i);
                                assert_eq!(
                                    h.face(&cat, i).unwrap(),
                                    homotopy_h(&cat, &x.face(&cat, i).unwrap(), k_of(&da)).unwrap(),
                                    "{name}: d{i} H"
                                );
                            }
                            let mut sa = a.clone();
                            sa.insert(i, a[i]);
                            assert_eq!(
                                h.degeneracy(&cat, i).unwrap(),
                                homotopy_h(&cat, &x.degeneracy(&cat, i).unwrap(), k_of(&sa)).unwrap(),
                                "{name}: s{i} H"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn iota_is_a_simplicial_bijection() {
    for (name, cat) in cones() {
        let dc = DoubleCone::new(&cat, "*", "m").unwrap();
        let hat = &dc.inner.hat;
        let check = &dc.outer.hat;
        let mut hres = Resolution::new(hat).unwrap();
        let mut cres = Resolution::new(check).unwrap();
        let m = check.object_by_name("m").unwrap();
        for c in cat.objects() {
            for n in 0..=2 {
                let phi = hres.words(n, c, dc.inner.apex);
                let mut seen = HashSet::new();
                for w in &phi {
                    for a in alphas(n) {
                        let v = iota(&dc, w, k_of(&a)).unwrap();
                        v.validate(check).unwrap();
                        assert!(seen.insert(v.clone()), "{name}: ι not injective");
                        for i in 0..=n {
                            if n >= 1 {
                                let mut da = a.clone();
                                da.remove(i);
                                assert_eq!(v.face(check, i).unwrap(), iota(&dc, &w.face(hat, i).unwrap(), k_of(&da)).unwrap());
                            }
                            let mut sa = a.clone();
                            sa.insert(i, a[i]);
                            assert_eq!(v.degeneracy(i).unwrap(), iota(&dc, &w.degeneracy(i).unwrap(), k_of(&sa)).unwrap());
                        }
                    }
                }
                let all: HashSet<Word> = cres.words(n, c, m).into_iter().collect();
                assert_eq!(seen, all, "{name}: ι not surjective at n = {n}");
            }
        }
    }
}

#[test]
fn lambda_misses_inner_faces() {
    let cat = FinPoset::chain(2).to_category();
    let cone = Coned::new(&cat, "*").unwrap();
    let w = Word::parse(&cone.hat, "(((2<*,1<2),(0<1)))", None).unwrap();
    let l = lambda(&cone, &w).unwrap();
    assert_eq!(l.face(&cat, 1).unwrap().show(&cat), "<((1<2),(0<1));()^1>");
    assert_eq!(lambda(&cone, &w.face(&cone.hat, 1).unwrap()).unwrap().show(&cat), "<((1<2,0<1));()^1>");
    // κ still commutes with the face, so κλ = id survives
    assert_eq!(kappa(&cone, &l.face(&cat, 1).unwrap()).unwrap(), w.face(&cone.hat, 1).unwrap());
}

#[test]
fn kappa_is_a_homology_isomorphism() {
    use cohocolim::freeres::{kappa_map, psi_sset};
    use cohocolim::homalg::{compare_map, homology};
    for (name, cat) in cones() {
        let cone = Coned::new(&cat, "*").unwrap();
        let mut res = Resolution::new(&cat).unwrap();
        let mut hres = Resolution::new(&cone.hat).unwrap();
        for c in cat.objects() {
            let psi = psi_sset(&mut res, c).unwrap();
            let phi = hres.hom_sset(c, cone.apex, None).unwrap();
            let k = kappa_map(&cone, &psi, &phi).unwrap();
            assert!(homology(&psi.set).is_acyclic(), "{name}: ψ({c:?})");
            assert!(compare_map(&psi.set, &phi.set, &k).is_iso(), "{name}: κ at {c:?}");
        }
    }
}
