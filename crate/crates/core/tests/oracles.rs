//! Cross-checks of module construction, elimination and Hom spaces against
//! the independent oracles in `common`.

mod common;

use common::{dense_rank, dominant_weights, freudenthal, o1xo1_functionals, o_dim_small, ssyt_count, weight_multiset};
use distrep::hom::{fixed_vectors, functionals, CharSpec};
use distrep::label::{weyl_dim_gl, OLabel};
use distrep::lie::{Delta, GroupKind};
use distrep::linalg::{null_space, SparseMat};
use distrep::rep::{build_gl_irrep, build_o_irrep, dual, multiplicity_decomposition, restrict, tensor};
use distrep::verify::sweep::o_labels;

#[test]
fn gl_dimensions_match_tableau_counts() {
    for n in [1, 2] {
        for mu in dominant_weights(n, 2) {
            let expected = ssyt_count(&mu);
            assert_eq!(weyl_dim_gl(&mu), expected, "{mu:?}");
            assert_eq!(build_gl_irrep(&mu).unwrap().dim(), expected, "{mu:?}");
        }
    }
}

#[test]
fn gl_weights_match_freudenthal() {
    for n in [1, 2] {
        for mu in dominant_weights(n, 2) {
            let f = build_gl_irrep(&mu).unwrap();
            assert_eq!(weight_multiset(&f), freudenthal(&mu), "{mu:?}");
        }
    }
}

#[test]
fn freudenthal_known_values() {
    // The adjoint of gl(3): zero weight with multiplicity 2.
    let adj = freudenthal(&[1, 0, -1]);
    assert_eq!(adj[&vec![0, 0, 0]], 2);
    assert_eq!(adj.values().sum::<u64>(), 8);
}

#[test]
fn o_dimensions_match_spin_pairs() {
    for n in [1, 2] {
        for label in o_labels(n, 4) {
            let expected = o_dim_small(&label);
            assert_eq!(label.dim(), expected, "{label}");
            assert_eq!(build_o_irrep(&label, Delta::Last).unwrap().dim(), expected, "{label}");
        }
    }
}

#[test]
fn rank_one_functionals_match_character_average() {
    for label in o_labels(1, 6) {
        let tau = build_o_irrep(&label, Delta::Last).unwrap();
        for (e1, e2) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let dim = functionals(&tau, &CharSpec::OnOn(e1, e2), Delta::Last).unwrap().dim();
            assert_eq!(dim, o1xo1_functionals(&tau, e1, e2), "{label} ({e1},{e2})");
        }
    }
}

#[test]
fn null_spaces_match_dense_rank() {
    let mods = [
        build_gl_irrep(&[1, 0, 0, -1]).unwrap(),
        restrict(&build_gl_irrep(&[2, 0, 0, -1]).unwrap(), GroupKind::O2n).unwrap(),
        tensor(&build_o_irrep(&"1".parse().unwrap(), Delta::Last).unwrap(), &build_o_irrep(&"2".parse().unwrap(), Delta::Last).unwrap())
            .unwrap(),
    ];
    for m in &mods {
        let stacked = SparseMat::vstack(m.lie_actions());
        let kernel = null_space(&stacked);
        assert_eq!(kernel.len(), m.dim() - dense_rank(&stacked), "{}", m.name());
        for v in &kernel {
            assert!(stacked.mul_vec(v).is_zero());
        }
    }
}

#[test]
fn hom_dimensions_match_dual_formulation() {
    let cases: Vec<(distrep::rep::RepModule, CharSpec)> = vec![
        (build_gl_irrep(&[1, 0, 0, -1]).unwrap(), CharSpec::GlnGln(0, 0)),
        (build_gl_irrep(&[2, 1, -1, -2]).unwrap(), CharSpec::GlnGln(1, -1)),
        (build_gl_irrep(&[1, -1]).unwrap(), CharSpec::GlnGln(0, 0)),
        (build_o_irrep(&"2,2".parse().unwrap(), Delta::Last).unwrap(), CharSpec::OnOn(0, 0)),
        (build_o_irrep(&"3,1".parse().unwrap(), Delta::Last).unwrap(), CharSpec::OnOn(1, 0)),
        (build_o_irrep(&"2,-1/2".parse().unwrap(), Delta::Last).unwrap(), CharSpec::OnOn(1, 1)),
        (build_o_irrep(&"2,2".parse().unwrap(), Delta::Last).unwrap(), CharSpec::TO(vec![0, 0])),
        (build_gl_irrep(&[2, 1, -1, -2]).unwrap(), CharSpec::Hprime(0)),
    ];
    for (m, chi) in &cases {
        let direct = functionals(m, chi, Delta::Last).unwrap().dim();
        let via_dual = fixed_vectors(&dual(m), &chi.inverse(), Delta::Last).unwrap().len();
        assert_eq!(direct, via_dual, "{} {chi}", m.name());
    }
}

#[test]
fn decompositions_do_not_depend_on_the_reflection() {
    for mu in dominant_weights(2, 1).into_iter().chain([vec![2, 1, -1, -2], vec![3, 1, 0, -2]]) {
        let f = build_gl_irrep(&mu).unwrap();
        let parts: Vec<_> = [Delta::Last, Delta::First, Delta::Mid]
            .into_iter()
            .map(|d| multiplicity_decomposition(&f, d).unwrap().parts)
            .collect();
        assert_eq!(parts[0], parts[1], "{mu:?}");
        assert_eq!(parts[0], parts[2], "{mu:?}");
        let total: usize = parts[0].iter().map(|(l, k): &(OLabel, usize)| l.dim() * k).sum();
        assert_eq!(total, f.dim());
    }
}

#[test]
fn o_irreps_do_not_depend_on_the_reflection() {
    for label in o_labels(2, 3) {
        let dims: Vec<usize> =
            [Delta::Last, Delta::First, Delta::Mid].into_iter().map(|d| build_o_irrep(&label, d).unwrap().dim()).collect();
        assert!(dims.iter().all(|d| *d == label.dim()), "{label}");
        let m = build_o_irrep(&label, Delta::First).unwrap();
        let dec = multiplicity_decomposition(&m, Delta::Mid).unwrap();
        assert_eq!(dec.parts, vec![(label.clone(), 1)], "{label}");
    }
}
