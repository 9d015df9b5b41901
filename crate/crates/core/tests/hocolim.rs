use cohocolim::fincat::{nerve, FinPoset};
use cohocolim::hocolim::{coherent_from_strict, total_space_pipeline, ConeExtension, Cyl, StrictDiagram};
use cohocolim::homalg::homology;
use cohocolim::simpset::standard::{point, s0};
use cohocolim::simpset::{is_isomorphic, SimplicialMap};
use std::collections::BTreeSet;

#[test]
fn maps_out_of_cyl_are_determined_by_the_structure_maps() {
    let p = FinPoset::chain(1);
    let base = coherent_from_strict(&StrictDiagram::constant(p.clone(), s0()));
    let ext = coherent_from_strict(&StrictDiagram::constant(p.cone("*").unwrap(), s0()));
    let ext = ConeExtension::new(base.clone(), ext).unwrap();
    let cyl = Cyl::new(&base).unwrap();
    let u = cyl.factor(&ext).unwrap();
    // the structure maps are jointly surjective, so at most one map agrees with them all
    let mut hit = BTreeSet::new();
    for c in 0..p.len() {
        let (_, prod, map) = cyl.structure_map(c).unwrap();
        for id in prod.set().all_ids() {
            hit.insert(map.image(id).clone());
        }
        let incl = cyl.inclusion(c).unwrap();
        assert_eq!(u.after(&incl), SimplicialMap::identity(&s0()));
    }
    for id in cyl.set().all_ids() {
        assert!(hit.iter().any(|x| x.base == id), "{} is not hit", cyl.set().label(id));
    }
}

#[test]
fn restriction_is_functorial() {
    let u = SimplicialMap::constant(&s0(), cohocolim::simpset::SimplexId::new(0, 0));
    let f = StrictDiagram::new(FinPoset::chain(2), vec![s0(), s0(), point()], vec![(0, 1, SimplicialMap::identity(&s0())), (1, 2, u)])
        .unwrap();
    let cyl = Cyl::new(&coherent_from_strict(&f)).unwrap();
    let (q, to_p) = cyl.restriction(&[0, 1]).unwrap();
    let (r, to_q) = q.restriction(&[0]).unwrap();
    let (r2, direct) = cyl.restriction(&[0]).unwrap();
    assert_eq!(r.set(), r2.set());
    assert_eq!(to_p.after(&to_q), direct);
    assert!(direct.is_levelwise_injective());
}

#[test]
fn total_space_over_a_solid_triangle() {
    let facets = vec![vec!["0".to_string(), "1".to_string(), "2".to_string()]];
    let p = FinPoset::face_poset(&facets).unwrap();
    let t = total_space_pipeline(&facets, &StrictDiagram::constant(p.clone(), s0()), 1_000_000).unwrap();
    let r = &t.report;
    assert_eq!(r.total.betti, vec![2, 0, 0]);
    assert!(r.classical_iso);
    assert!(r.faces.iter().all(|f| f.fiber_iso && f.injective));
    // cyl of the point diagram subdivides the nerve once the poset has chains of length two
    let n = nerve(&p.to_category(), None).unwrap();
    assert_eq!(is_isomorphic(t.subdivision.set(), &n.set, 1_000_000).verdict(), "isomorphic");
    assert_eq!(homology(t.base.set()), homology(&n.set));
    assert_eq!(is_isomorphic(t.base.set(), &n.set, 1_000_000).verdict(), "not isomorphic");
    assert!(!r.iota_iso);
}
