//! Property tests for parameter calculus, exact elimination and module
//! invariants.

mod common;

use common::dense_rank;
use distrep::label::OLabel;
use distrep::lie::{Delta, GroupKind};
use distrep::linalg::{null_space, rref_dense, rref_sparse, GaussRat, SparseMat};
use distrep::params::{critical_range, l_minus, l_mu, l_plus, mu_of, SpectralParams};
use distrep::rep::{build_o_irrep, dual, module_json, tensor};
use proptest::prelude::*;

/// Valid `(ℓ, w)` with `n ∈ {1, 2, 3}`, `l₁ ≤ 15`, `|w| ≤ 6`.
fn spectral() -> impl Strategy<Value = SpectralParams> {
    (1usize..=3, -6i64..=6).prop_flat_map(|(n, w)| {
        let parity = (w + 1).rem_euclid(2);
        proptest::sample::subsequence((1..=15).filter(|x: &i64| x % 2 == parity).collect::<Vec<_>>(), n).prop_map(
            move |mut l| {
                l.reverse();
                SpectralParams::new(l, w).unwrap()
            },
        )
    })
}

fn gauss() -> impl Strategy<Value = GaussRat> {
    (-3i64..=3, 1i64..=3, -2i64..=2).prop_map(|(a, b, c)| GaussRat::from_parts((a, b), (c, 1)))
}

fn matrix() -> impl Strategy<Value = SparseMat> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(prop_oneof![3 => Just(GaussRat::zero()), 2 => gauss()], c), r)
            .prop_map(|rows| SparseMat::from_dense(&rows))
    })
}

proptest! {
    #[test]
    fn mu_is_integral_and_dominant(p in spectral()) {
        let mu = mu_of(&p).unwrap();
        prop_assert_eq!(mu.len(), 2 * p.n());
        prop_assert!(mu.windows(2).all(|x| x[0] >= x[1]));
    }

    #[test]
    fn extremal_label_of_mu_is_l_minus_for_even_w(p in spectral()) {
        prop_assume!(p.w() % 2 == 0);
        prop_assert_eq!(l_mu(&mu_of(&p).unwrap()).unwrap(), l_minus(&p).unwrap());
    }

    #[test]
    fn l_plus_is_the_extremal_label_of_its_padding(p in spectral()) {
        let mut nu: Vec<i64> = p.l().iter().map(|x| x + 1).collect();
        nu.extend(std::iter::repeat_n(0, p.n()));
        prop_assert_eq!(l_mu(&nu).unwrap(), l_plus(&p));
    }

    #[test]
    fn critical_range_is_symmetric(p in spectral()) {
        let r = critical_range(&p);
        let mirrored: Vec<i64> = r.iter().rev().map(|x| -p.w() - x).collect();
        prop_assert_eq!(r, mirrored);
    }

    #[test]
    fn elimination_paths_agree(m in matrix()) {
        let a = rref_dense(&m);
        let b = rref_sparse(&m);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.rank, dense_rank(&m));
        let kernel = null_space(&m);
        prop_assert_eq!(kernel.len(), m.ncols() - a.rank);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn field_operations(a in gauss(), b in gauss()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) * &b.inv().unwrap(), a.clone());
        }
    }
}

fn small_label() -> impl Strategy<Value = OLabel> {
    prop_oneof![
        (0i64..=3).prop_map(|a| OLabel::new(vec![a]).unwrap()),
        (0i64..=2).prop_flat_map(|a| (Just(a), 0..=a)).prop_map(|(a, b)| OLabel::new(vec![a, b]).unwrap()),
        (0i64..=2).prop_map(|a| OLabel::with_minus_half(vec![a]).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn built_modules_are_representations(label in small_label()) {
        let m = build_o_irrep(&label, Delta::Last).unwrap();
        prop_assert_eq!(m.dim(), label.dim());
        m.check_brackets(usize::MAX).unwrap();
        m.check_group_compatibility().unwrap();
        m.check_grading().unwrap();
        let d = dual(&m);
        d.check_brackets(usize::MAX).unwrap();
        d.check_group_compatibility().unwrap();
    }

    #[test]
    fn construction_is_deterministic(label in small_label()) {
        let a = build_o_irrep(&label, Delta::Last).unwrap();
        let b = build_o_irrep(&label, Delta::Last).unwrap();
        prop_assert_eq!(module_json(&a), module_json(&b));
    }

    #[test]
    fn tensor_dimension_multiplies(a in small_label(), b in small_label()) {
        prop_assume!(a.n() == b.n());
        let (ma, mb) = (build_o_irrep(&a, Delta::Last).unwrap(), build_o_irrep(&b, Delta::Last).unwrap());
        let t = tensor(&ma, &mb).unwrap();
        prop_assert_eq!(t.dim(), a.dim() * b.dim());
        prop_assert_eq!(t.kind(), GroupKind::O2n);
        t.check_brackets(6).unwrap();
    }
}
