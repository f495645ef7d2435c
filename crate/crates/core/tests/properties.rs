//! Structural properties over every preset, plus randomized Taft
//! parameters, tensor products and elements. Seeds are pinned.

mod common;

use common::*;
use proptest::prelude::*;

use hopfint::integrals::{compute_integrals, integral_order, winding_automorphism};
use hopfint::linalg::Vector;
use hopfint::presets::build_preset;
use hopfint::quotients::{coinvariants, integral_quotient, winding_fixed_points};

fn assert_all(name: &str, results: Vec<(&'static str, Result<(), String>)>) {
    let failures: Vec<String> =
        results.into_iter().filter_map(|(p, r)| r.err().map(|e| format!("{p}: {e}"))).collect();
    assert!(failures.is_empty(), "{name}: {failures:#?}");
}

#[test]
fn finite_presets() {
    for name in FINITE {
        assert_all(name, finite_properties(&finite(name)));
    }
}

#[test]
fn family_presets() {
    for name in FAMILIES {
        assert_all(name, family_properties(&family(name)));
    }
}

#[test]
fn truncated_families_are_finite_presets_too() {
    for name in ["taft_family(3,1,1)", "taft_family(n=4,m=3,t=1)"] {
        let f = family(name);
        let h = f.truncated_hopf(f.terminal.dim()).unwrap();
        assert_all(name, finite_properties(&h));
    }
}

fn coprime_taft() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=6).prop_flat_map(|n| (Just(n), 1..n)).prop_filter("m coprime to n", |&(n, m)| num_integer::gcd(n, m) == 1)
}

fn finite_pool() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["trivial", "cyclic(n=2)", "cyclic(n=3)", "klein_four", "sweedler", "circle_hopf"])
}

proptest! {
    #![proptest_config(seeded(12, 0x1f2e_3d4c))]

    #[test]
    fn random_taft_algebras((n, m) in coprime_taft()) {
        let name = format!("taft_finite(n={n},m={m})");
        let h = finite(&name);
        assert_all(&name, finite_properties(&h));
        let d = compute_integrals(&h).unwrap();
        prop_assert_eq!(integral_order(&h, &d, CAP).unwrap(), Some(n as u64));
    }

    #[test]
    fn random_taft_families(n in 2usize..=6, m in 1usize..6) {
        let name = format!("taft_family(n={n},m={m},t=1)");
        let f = family(&name);
        assert_all(&name, family_properties(&f));
        let expected = (n / num_integer::gcd(n, m)) as u64;
        prop_assert_eq!(f.integral_order(CAP).unwrap(), Some(expected));
        prop_assert_eq!(f.integral_quotient_dim(CAP).unwrap() as u64, expected);
    }

    #[test]
    fn random_tensor_products(a in finite_pool(), b in finite_pool()) {
        let h = finite(a).tensor(&finite(b)).unwrap();
        assert_all(&format!("{a} ⊗ {b}"), finite_properties(&h));
        let io = |h: &hopfint::hopf::FiniteHopfAlgebra| {
            integral_order(h, &compute_integrals(h).unwrap(), CAP).unwrap().unwrap()
        };
        prop_assert_eq!(io(&h), num_integer::lcm(io(&finite(a)), io(&finite(b))));
    }
}

proptest! {
    #![proptest_config(seeded(32, 0x0dd_ba11))]

    /// Random combinations of coinvariants are fixed by every winding in
    /// the clique, and random elements satisfy α_l(h) = Σʳ(S(h)).
    #[test]
    fn random_elements(which in 0usize..FINITE.len(), coeffs in prop::collection::vec(-3i64..=3, 36)) {
        let h = finite(FINITE[which]);
        let f = h.field().clone();
        let d = compute_integrals(&h).unwrap();
        let io = integral_order(&h, &d, CAP).unwrap().unwrap();
        let v: Vector = (0..h.dim()).map(|i| f.from_i64(coeffs[i % coeffs.len()])).collect();
        prop_assert_eq!(d.alpha_left.eval(&v), d.sigma_right.eval(&h.apply_antipode(&v)));

        let iq = integral_quotient(&h, &d, CAP).unwrap();
        let co = coinvariants(&h, &iq).unwrap();
        prop_assert_eq!(&co, &winding_fixed_points(&h, &d, io).unwrap());
        let mut w: Vector = vec![f.zero(); h.dim()];
        for (k, b) in co.basis().iter().enumerate() {
            let c = f.from_i64(coeffs[k % coeffs.len()]);
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi = &*wi + &(&c * bi);
            }
        }
        let mut pi = h.counit_character();
        for _ in 0..io {
            let sigma = winding_automorphism(&h, &pi).unwrap();
            prop_assert_eq!(sigma.apply(&w).unwrap(), w.clone());
            pi = h.convolution(&pi, &d.sigma_right).unwrap();
        }
    }
}

#[test]
fn field_overrides_keep_the_integral_order() {
    for (name, field) in [("sweedler", "cyc:4"), ("taft_finite(n=3)", "cyc:12"), ("cyclic(n=4)", "fp:13")] {
        let f = hopfint::Field::new(field.parse().unwrap()).unwrap();
        let a = build_preset(name, None).unwrap().finite().cloned().unwrap();
        let b = build_preset(name, Some(&f)).unwrap().finite().cloned().unwrap();
        let io = |h: &hopfint::hopf::FiniteHopfAlgebra| integral_order(h, &compute_integrals(h).unwrap(), CAP).unwrap();
        assert_eq!(io(&a), io(&b), "{name} over {field}");
    }
}

