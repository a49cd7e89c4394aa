use super::*;
use crate::digraph::*;
use crate::field::{Rational, F2, F3, F7};

type Q = Rational;

fn betti(g: &DiGraph, k: usize) -> Vec<usize> {
    homology::<Q>(g, k).unwrap().betti
}

#[test]
fn allowed_path_listing() {
    let c3 = gen_cycle(3).unwrap();
    let a2: Vec<String> = allowed_paths(&c3, 2).paths().iter().map(|p| p.display(&c3)).collect();
    assert_eq!(a2, ["012", "120", "201"]);
    assert!(allowed_paths(&gen_line(2), 3).is_empty());
    assert_eq!(allowed_paths(&c3, 0).len(), 3);
}

#[test]
fn line_and_cycle_tables() {
    assert_eq!(betti(&gen_line(2), 4), [1, 0, 0, 0]);
    let t = homology::<Q>(&gen_cycle(3).unwrap(), 4).unwrap();
    assert_eq!(t.betti, [1, 1, 0, 0]);
    assert_eq!(&t.omega_dims[2..], &[0, 0]);
    assert_eq!(t.ranks[1], 2);
}

#[test]
fn triangle_and_squares() {
    let t = homology::<Q>(&gen_mn_cycle(2, 1).unwrap(), 3).unwrap();
    assert_eq!(t.betti, [1, 0, 0]);
    assert_eq!(t.omega_dims[2], 1);
    assert_eq!(t.ranks[2], 1);

    let t = homology::<Q>(&gen_mn_cycle(2, 2).unwrap(), 3).unwrap();
    assert_eq!(t.betti, [1, 0, 0]);
    assert_eq!(t.omega_dims[2], 1);

    let t = homology::<Q>(&gen_mn_cycle(3, 1).unwrap(), 4).unwrap();
    assert_eq!(t.betti, [1, 1, 0, 0]);
    assert_eq!(&t.omega_dims[2..], &[0, 0]);
}

#[test]
fn square_generator() {
    let g = DiGraph::from_labels(
        &["0", "1", "2", "3"],
        &[("0", "1"), ("1", "3"), ("0", "2"), ("2", "3")],
        EdgePolicy::Strict,
    )
    .unwrap();
    let om = omega_basis::<Q>(&g, 2);
    assert_eq!(om.dim(), 1);
    let expect = Chain::<Q>::from_labelled(&g, &[(1, &["0", "1", "3"]), (-1, &["0", "2", "3"])]).unwrap();
    assert!(om.chain(0).proportional_to(&expect));
}

#[test]
fn suspension_table_and_generator() {
    let g = gen_suspension_alt4();
    let t = homology_with_generators::<Q>(&g, 4).unwrap();
    assert_eq!(t.betti, [1, 0, 1, 0]);
    assert_eq!(t.omega_dims[2], 8);
    assert_eq!(t.ranks[2], 7);
    assert_eq!(t.generators.as_ref().unwrap()[2].len(), 1);

    let cx = PathComplex::<Q>::build(&g, PathFamily::Full, 3).unwrap();
    let z = &cx.homology_generators(2)[0];
    let w: &[(i64, &[&str])] = &[
        (1, &["a", "0", "1"]),
        (-1, &["a", "2", "1"]),
        (1, &["a", "2", "3"]),
        (-1, &["a", "0", "3"]),
        (-1, &["b", "0", "1"]),
        (1, &["b", "2", "1"]),
        (-1, &["b", "2", "3"]),
        (1, &["b", "0", "3"]),
    ];
    let expect = Chain::<Q>::from_labelled(&g, w).unwrap();
    assert!(z.proportional_to(&expect), "{}", z.display(&g));
    assert_eq!(cx.rank(3), 0);
}

#[test]
fn punctured_cube_table() {
    let g = gen_punctured_cube();
    let t = homology::<Q>(&g, 5).unwrap();
    assert_eq!(t.omega_dims, [26, 48, 24, 0, 0]);
    assert_eq!(t.betti, [1, 0, 1, 0, 0]);
    assert_eq!(t.ranks[2], 23);
}

#[test]
fn omega_boundary_matrices() {
    let m = omega_boundary_matrix::<Q>(&gen_line(1), 1).unwrap();
    assert_eq!((m.nrows(), m.ncols()), (2, 1));
    assert_eq!(m.rank(), 1);
    assert_eq!(omega_boundary_matrix::<Q>(&gen_mn_cycle(2, 1).unwrap(), 2).unwrap().rank(), 1);
    assert_eq!(omega_boundary_matrix::<Q>(&gen_suspension_alt4(), 2).unwrap().rank(), 7);
    assert!(omega_boundary_matrix::<Q>(&gen_line(1), 0).is_err());
}

#[test]
fn boundary_squares_to_zero() {
    for g in [gen_suspension_alt4(), gen_punctured_cube(), gen_complete(&["a", "b", "c", "d"]).unwrap()] {
        let cx = PathComplex::<Q>::build(&g, PathFamily::Full, 4).unwrap();
        for n in 2..=4 {
            let d1 = cx.boundary_matrix(&g, n - 1).unwrap();
            let d2 = cx.boundary_matrix(&g, n).unwrap();
            assert!(d1.mul(&d2).unwrap().is_zero(), "degree {n}");
        }
        for n in 1..=4 {
            for c in cx.space(n).chains() {
                let d = regular_boundary(&c).unwrap();
                assert!(d.terms().all(|(p, _)| p.is_allowed(&g)));
            }
        }
    }
}

#[test]
fn prime_fields_agree_on_fixtures() {
    let graphs = [
        gen_line(2),
        gen_cycle(3).unwrap(),
        gen_mn_cycle(2, 2).unwrap(),
        gen_mn_cycle(3, 1).unwrap(),
        gen_suspension_alt4(),
        gen_alt_cycle(6).unwrap(),
    ];
    for g in &graphs {
        let q = homology::<Q>(g, 4).unwrap();
        assert_eq!(homology::<F2>(g, 4).unwrap(), q);
        assert_eq!(homology::<F3>(g, 4).unwrap(), q);
        assert_eq!(homology::<F7>(g, 4).unwrap(), q);
    }
}

#[test]
fn complete_graph_on_three_vertices() {
    // Every 2-cycle and every transitive triangle bounds.
    assert_eq!(betti(&gen_complete(&["x", "y", "z"]).unwrap(), 3), [1, 0, 0]);
}

#[test]
fn omega_hat_fixtures() {
    let g = gen_mn_cycle(2, 2).unwrap();
    let full = VertexSubset::full(&g);
    let none = VertexSubset::empty(&g);
    for n in 0..3 {
        assert_eq!(omega_hat_basis::<Q>(&g, &full, n).unwrap().dim(), 0);
        assert_eq!(
            omega_hat_basis::<Q>(&g, &none, n).unwrap().dim(),
            omega_basis::<Q>(&g, n).dim()
        );
    }
    // the common sink of the square
    let sink = VertexSubset::from_labels(&g, &["2"]).unwrap();
    assert_eq!(omega_hat_basis::<Q>(&g, &sink, 2).unwrap().dim(), 1);
}

#[test]
fn omega_hat1_fixtures() {
    let j = gen_j();
    let bd = VertexSubset::from_labels(&j, &["-2", "2"]).unwrap();
    let b0 = omega_hat1_basis::<Q>(&j, &bd, 0).unwrap();
    let keys: Vec<&str> = b0.key_paths().map(|p| j.label(p.first())).collect();
    assert_eq!(keys, ["-1", "1"]);

    let g = gen_mn_cycle(2, 2).unwrap();
    let none = VertexSubset::empty(&g);
    for n in 0..3 {
        assert_eq!(omega_hat1_basis::<Q>(&g, &none, n).unwrap().dim(), 0);
    }
    // Height-one vertices over the sink are 1 and 3; only 01 - 03 survives.
    let sink = VertexSubset::from_labels(&g, &["2"]).unwrap();
    let b1 = omega_hat1_basis::<Q>(&g, &sink, 1).unwrap();
    assert_eq!(b1.dim(), 1);
    let expect = Chain::<Q>::from_labelled(&g, &[(1, &["0", "1"]), (-1, &["0", "3"])]).unwrap();
    assert!(b1.chain(0).proportional_to(&expect));

    let c31 = gen_mn_cycle(3, 1).unwrap();
    let lower = VertexSubset::from_labels(&c31, &["0", "1"]).unwrap();
    assert!(matches!(omega_hat1_basis::<Q>(&c31, &lower, 1), Err(Error::EdgeOut(..))));
}

#[test]
fn relative_homology_fixtures() {
    let g = gen_suspension_alt4();
    let full = VertexSubset::full(&g);
    assert!(relative_homology::<Q>(&g, &full, 4).unwrap().is_acyclic());
    let none = VertexSubset::empty(&g);
    assert_eq!(relative_homology::<Q>(&g, &none, 4).unwrap(), homology::<Q>(&g, 4).unwrap());

    // A leaf attached to a point: the inclusion is a homology isomorphism.
    let i1 = gen_line(1);
    let end = VertexSubset::from_labels(&i1, &["1"]).unwrap();
    assert!(relative_homology::<Q>(&i1, &end, 3).unwrap().is_acyclic());

    let start = VertexSubset::from_labels(&i1, &["0"]).unwrap();
    assert!(matches!(relative_homology::<Q>(&i1, &start, 3), Err(Error::EdgeOut(..))));
    assert!(homology::<Q>(&i1, 0).is_err());
}
