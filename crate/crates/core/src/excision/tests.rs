use super::*;
use crate::cofib::check_cofibration;
use crate::digraph::*;
use crate::field::{Rational, F5};
use crate::pathhom::{regular_boundary, space_at, PathFamily};

type Q = Rational;

fn ends_of_j() -> (DiGraph, VertexSubset) {
    let j = gen_j();
    let bd = VertexSubset::from_labels(&j, &["-2", "2"]).unwrap();
    (j, bd)
}

fn decomposition(g: &DiGraph, a: &VertexSubset) -> ProjectingDecomposition {
    check_cofibration(g, a).unwrap().decomposition.unwrap()
}

#[test]
fn l_on_an_edge_of_height_one_vertices() {
    // x0 -> x1, each with its own edge down into A = {a0, a1}, a0 -> a1
    let g = DiGraph::from_labels(
        &["x0", "x1", "a0", "a1"],
        &[("x0", "x1"), ("x0", "a0"), ("x1", "a1"), ("a0", "a1")],
        EdgePolicy::Strict,
    )
    .unwrap();
    let a = VertexSubset::from_labels(&g, &["a0", "a1"]).unwrap();
    let pd = decomposition(&g, &a);
    let p = Chain::<Q>::from_labelled(&g, &[(1, &["x0", "x1"])]).unwrap();
    let l = l_operator(&g, &a, &pd, 0, &p).unwrap();
    let expect =
        Chain::<Q>::from_labelled(&g, &[(1, &["x0", "a0", "a1"]), (-1, &["x0", "x1", "a1"])]).unwrap();
    assert_eq!(l, expect);
    let l1 = l_operator(&g, &a, &pd, 1, &p).unwrap();
    assert_eq!(l1, Chain::<Q>::from_labelled(&g, &[(-1, &["x0", "x1", "a1"])]).unwrap());
    assert!(l_operator(&g, &a, &pd, 2, &p).is_err());
}

#[test]
fn l_on_a_grid_path() {
    // A 2x3 grid with the bottom row as A; the top-row path of length 2
    // produces the alternating sum of three corner-to-corner paths.
    let top = gen_line(2);
    let grid = gen_line(1).box_product(&top);
    let a = VertexSubset::from_labels(&grid, &["(1,0)", "(1,1)", "(1,2)"]).unwrap();
    let pd = decomposition(&grid, &a);
    let p = Chain::<Q>::from_labelled(&grid, &[(1, &["(0,0)", "(0,1)", "(0,2)"])]).unwrap();
    let l = l_operator(&grid, &a, &pd, 0, &p).unwrap();
    assert_eq!(l.len(), 3);
    assert!(l.terms().all(|(q, _)| q.is_allowed(&grid)));
    let first = RegularPath::from_labels(&grid, &["(0,0)", "(1,0)", "(1,1)", "(1,2)"]).unwrap();
    assert_eq!(l.coefficient(&first), Q::from_i64(1));
}

#[test]
fn degenerate_projections_vanish() {
    let (j, bd) = ends_of_j();
    let pd = decomposition(&j, &bd);
    let v = Chain::<Q>::from_labelled(&j, &[(1, &["-1"])]).unwrap();
    let pv = pi_linear(&j, &bd, &pd, &v).unwrap();
    assert_eq!(pv, Chain::from_labelled(&j, &[(1, &["-2"])]).unwrap());
    let empty = Chain::<Q>::zero(1);
    assert!(pi_linear(&j, &bd, &pd, &empty).unwrap().is_zero());
    let zero = Chain::<Q>::from_labelled(&j, &[(1, &["0"])]).unwrap();
    assert!(matches!(pi_linear(&j, &bd, &pd, &zero), Err(Error::Domain(_))));

    // x2 -> x1 -> a: both project to a, so the image is degenerate
    let g = gen_line(2);
    let a = VertexSubset::from_labels(&g, &["2"]).unwrap();
    let pd = decomposition(&g, &a);
    let p = Chain::<Q>::from_labelled(&g, &[(1, &["0", "1"])]).unwrap();
    assert!(pi_linear(&g, &a, &pd, &p).unwrap().is_zero());
}

#[test]
fn cone_on_trivial_subgraphs() {
    let g = gen_mn_cycle(2, 2).unwrap();
    let none = VertexSubset::empty(&g);
    let cone = MappingCone::<Q>::build(&g, &none, 3).unwrap();
    for n in 0..=3 {
        assert_eq!(cone.dim(n), space_at::<Q>(&g, &PathFamily::Full, n).dim());
    }
    let all = VertexSubset::full(&g);
    let cone = MappingCone::<Q>::build(&g, &all, 3).unwrap();
    assert!((0..=3).all(|n| cone.dim(n) == 0));
    let c31 = gen_mn_cycle(3, 1).unwrap();
    let top = VertexSubset::from_labels(&c31, &["2", "3"]).unwrap();
    assert!(matches!(MappingCone::<Q>::build(&c31, &top, 2), Err(Error::NotCofibration(_))));
}

#[test]
fn comparison_map_on_fixtures() {
    let (j, bd) = ends_of_j();
    let r = verify_e::<Q>(&j, &bd, 4).unwrap();
    assert!(r.verified, "{r:?}");
    assert_eq!(r.cone_dims, r.relative_dims);

    let g = gen_mn_cycle(2, 2).unwrap();
    let sink = VertexSubset::from_labels(&g, &["2"]).unwrap();
    let r = verify_e::<Q>(&g, &sink, 3).unwrap();
    assert!(r.verified, "{r:?}");
    assert_eq!(r.relative_dims, [3, 4, 1, 0]);

    let s = gen_suspension_alt4();
    let b = VertexSubset::from_labels(&s, &["b"]).unwrap();
    // b has edges out, so it is not a cofibration; the lower cycle is one
    assert!(verify_e::<Q>(&s, &b, 3).is_err());
    let none = VertexSubset::empty(&s);
    assert!(verify_e::<F5>(&s, &none, 3).unwrap().verified);
}

#[test]
fn cone_element_images() {
    let (j, bd) = ends_of_j();
    let cone = MappingCone::<Q>::build(&j, &bd, 2).unwrap();
    let n = 1;
    for k in 0..cone.dim(n) {
        let el = cone.element(n, k);
        let img = cone.e_image(&el).unwrap();
        match &el.p {
            Some(p) if !p.is_zero() => {
                let l = l_operator(&j, &bd, cone.decomposition(), 0, p).unwrap();
                assert_eq!(img, l);
            }
            _ => assert_eq!(img, el.q),
        }
    }
    let m = cone.boundary_matrix(2).unwrap();
    let m1 = cone.boundary_matrix(1).unwrap();
    assert!(m1.mul(&m).unwrap().is_zero());
}

#[test]
fn boundary_identity_on_fixtures() {
    let (j, bd) = ends_of_j();
    let r = verify_l_boundary::<Q>(&j, &bd, 4).unwrap();
    assert!(r.holds, "{r:?}");
    assert!(r.checked >= 2);

    // both cone points are sources, so only a sink of the base can serve
    let s = gen_suspension_alt4();
    let sink = VertexSubset::from_labels(&s, &["1"]).unwrap();
    let r = verify_l_boundary::<Q>(&s, &sink, 3).unwrap();
    assert!(r.holds && r.checked > 0, "{r:?}");
    let b = VertexSubset::from_labels(&s, &["b"]).unwrap();
    assert!(matches!(verify_l_boundary::<Q>(&s, &b, 3), Err(Error::NotCofibration(_))));
    // a single edge into A
    let g = gen_line(1);
    let end = VertexSubset::from_labels(&g, &["1"]).unwrap();
    let r = verify_l_boundary::<Q>(&g, &end, 2).unwrap();
    assert!(r.holds && r.checked == 1);
}

#[test]
fn l_image_allowed_exactly_on_height_one_paths() {
    let s = gen_suspension_alt4();
    let sink = VertexSubset::from_labels(&s, &["1"]).unwrap();
    let pd = decomposition(&s, &sink);
    let g = gen_line(3);
    let end = VertexSubset::from_labels(&g, &["3"]).unwrap();
    let gpd = decomposition(&g, &end);
    for (graph, a, pd) in [(&s, &sink, &pd), (&g, &end, &gpd)] {
        let hat1 = PathFamily::ends_at_height_one(graph, a).unwrap();
        let inner = PathFamily::Within(a.complement().intersection(&pd.reaching()));
        for n in 0..3 {
            let ends_low = space_at::<Q>(graph, &hat1, n);
            for p in space_at::<Q>(graph, &inner, n).allowed().paths() {
                let c = Chain::<Q>::from_path(p.clone());
                let l = l_operator(graph, a, pd, 0, &c).unwrap();
                assert!(!l.is_zero());
                let allowed = l.terms().all(|(q, _)| q.is_allowed(graph));
                assert_eq!(allowed, ends_low.allowed().contains(p), "{}", p.display(graph));
            }
        }
    }
}

#[test]
fn boundary_identity_holds_on_the_full_chain_level() {
    let (j, bd) = ends_of_j();
    let pd = decomposition(&j, &bd);
    let p = Chain::<Q>::from_labelled(&j, &[(1, &["-1"])]).unwrap();
    let lp = l_operator(&j, &bd, &pd, 0, &p).unwrap();
    let lhs = regular_boundary(&lp).unwrap();
    let rhs = pi_linear(&j, &bd, &pd, &p).unwrap().minus(&p);
    assert_eq!(lhs, rhs);
}

#[test]
fn excision_on_collapsed_edge() {
    // Pushing the cylinder ends of I1 □ J onto a point.
    let x = gen_line(1).box_product(&gen_j());
    let a = VertexSubset::from_labels(&x, &["(0,2)", "(1,2)"]).unwrap();
    assert!(check_cofibration(&x, &a).unwrap().is_cofibration());
    let f = GraphMap::to_point(&x.induced(&a));
    let sq = pushout(&x, &a, &f).unwrap();
    let r = verify_excision::<Q>(&sq, 3).unwrap();
    assert!(r.verified, "{r:?}");
    let o = omega_pushout_dims::<Q>(&sq, 3).unwrap();
    assert!(o.holds, "{o:?}");

    let id = GraphMap::identity(&x.induced(&a));
    let sq = pushout(&x, &a, &id).unwrap();
    assert!(verify_excision::<Q>(&sq, 3).unwrap().verified);
}

#[test]
fn excision_rejects_non_cofibrations() {
    let x = gen_mn_cycle(3, 1).unwrap();
    let a = VertexSubset::from_labels(&x, &["2", "3"]).unwrap();
    let f = GraphMap::to_point(&x.induced(&a));
    let sq = pushout(&x, &a, &f).unwrap();
    assert!(matches!(verify_excision::<Q>(&sq, 3), Err(Error::NotCofibration(_))));
}

#[test]
fn long_exact_sequences() {
    let g = gen_mn_cycle(2, 1).unwrap();
    let sink = VertexSubset::from_labels(&g, &["2"]).unwrap();
    let r = verify_les::<Q>(&g, &sink, 3).unwrap();
    assert!(r.exact, "{r:?}");

    let all = VertexSubset::full(&g);
    let r = verify_les::<Q>(&g, &all, 3).unwrap();
    assert!(r.exact && r.relative.iter().all(|&b| b == 0));

    let (j, bd) = ends_of_j();
    let r = verify_les::<Q>(&j, &bd, 3).unwrap();
    assert!(r.exact, "{r:?}");
    assert_eq!(r.relative, [0, 1, 0]);
    assert_eq!(r.connecting_ranks, [0, 1, 0]);

    let s = gen_suspension_alt4();
    let base = VertexSubset::from_labels(&s, &["0", "1", "2", "3"]).unwrap();
    let r = verify_les::<Q>(&s, &base, 3).unwrap();
    assert!(r.exact, "{r:?}");
    let sink = VertexSubset::from_labels(&s, &["1"]).unwrap();
    let r = verify_les::<Q>(&s, &sink, 3).unwrap();
    assert!(r.exact, "{r:?}");

    let i1 = gen_line(1);
    let start = VertexSubset::from_labels(&i1, &["0"]).unwrap();
    assert!(verify_les::<Q>(&i1, &start, 2).is_err());
}
