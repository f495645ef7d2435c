//! Preset lists and property checks shared by the property suite and the
//! acceptance target.

#![allow(dead_code)]

use proptest::test_runner::{Config, RngSeed};

use hopfint::family::{FamilyCharacter, PresentedHopfFamily};
use hopfint::hopf::FiniteHopfAlgebra;
use hopfint::integrals::{compute_integrals, integral_order, is_unimodular, winding_automorphism};
use hopfint::monomial::{evaluate, normal_form, Expr, Poly, PolyRing};
use hopfint::presets::build_preset;
use hopfint::quotients::{abelianization, coinvariants, integral_quotient, winding_fixed_points};
use hopfint::{Error, Field, FieldSpec};

pub const CAP: u64 = 1000;

pub const FINITE: &[&str] = &[
    "trivial",
    "cyclic(n=2)",
    "cyclic(n=5)",
    "klein_four",
    "group_algebra(group=s3)",
    "sweedler",
    "taft_finite(n=3)",
    "taft_finite(n=4)",
    "taft_finite(n=4,m=3)",
    "taft_finite(n=5)",
    "circle_hopf",
    "circle_xi(xi=2)",
];

pub const FAMILIES: &[&str] = &[
    "taft_family(2,1,1)",
    "taft_family(3,1,1)",
    "taft_family(5,1,1)",
    "taft_family(n=6,m=2,t=1)",
    "solvable_enveloping",
    "laurent",
    "infinite_dihedral",
    "example85",
];

/// Proptest configuration with a pinned seed and no persistence files.
pub fn seeded(cases: u32, seed: u64) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

pub fn finite(name: &str) -> FiniteHopfAlgebra {
    build_preset(name, None).unwrap_or_else(|e| panic!("{name}: {e}")).finite().cloned().expect("finite preset")
}

pub fn family(name: &str) -> PresentedHopfFamily {
    build_preset(name, None).unwrap_or_else(|e| panic!("{name}: {e}")).family().cloned().expect("family preset")
}

type Check = Result<(), String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

/// Left and right integral spaces are lines; `compute_integrals` refuses
/// anything else.
pub fn integrals_are_lines(h: &FiniteHopfAlgebra) -> Check {
    compute_integrals(h).map(|_| ()).map_err(err)
}

/// Convolution order of `Σʳ` equals the order of its winding matrix.
pub fn routes_agree(h: &FiniteHopfAlgebra) -> Check {
    let d = compute_integrals(h).map_err(err)?;
    let by_convolution = integral_order(h, &d, CAP).map_err(err)?;
    let by_winding = winding_automorphism(h, &d.sigma_right).map_err(err)?.order(CAP).map_err(err)?;
    ensure(by_convolution == by_winding, || format!("convolution {by_convolution:?}, winding {by_winding:?}"))
}

/// `α_l(h) = Σʳ(S(h))` on every basis element.
pub fn alpha_is_sigma_after_antipode(h: &FiniteHopfAlgebra) -> Check {
    let d = compute_integrals(h).map_err(err)?;
    let s = h.antipode();
    for i in 0..h.dim() {
        let lhs = &d.alpha_left.values()[i];
        let rhs = d.sigma_right.eval(&s.column(i));
        ensure(*lhs == rhs, || format!("at {}: {lhs} vs {rhs}", h.labels()[i]))?;
    }
    Ok(())
}

pub fn iq_dim_is_io(h: &FiniteHopfAlgebra) -> Check {
    let d = compute_integrals(h).map_err(err)?;
    let io = integral_order(h, &d, CAP).map_err(err)?.ok_or("io above cap")?;
    let iq = integral_quotient(h, &d, CAP).map_err(err)?;
    ensure(iq.quotient.dim() as u64 == io, || format!("dim H_iq = {}, io = {io}", iq.quotient.dim()))
}

pub fn io_divides_ab_dim(h: &FiniteHopfAlgebra) -> Check {
    let d = compute_integrals(h).map_err(err)?;
    let io = integral_order(h, &d, CAP).map_err(err)?.ok_or("io above cap")?;
    let ab = abelianization(h).map_err(err)?.quotient.dim() as u64;
    ensure(ab % io == 0, || format!("io = {io} does not divide dim H_ab = {ab}"))
}

pub fn coinvariants_are_fixed_points(h: &FiniteHopfAlgebra) -> Check {
    let d = compute_integrals(h).map_err(err)?;
    let io = integral_order(h, &d, CAP).map_err(err)?.ok_or("io above cap")?;
    let iq = integral_quotient(h, &d, CAP).map_err(err)?;
    let co = coinvariants(h, &iq).map_err(err)?;
    let fixed = winding_fixed_points(h, &d, io).map_err(err)?;
    ensure(co == fixed, || format!("coinvariants dim {}, fixed points dim {}", co.dim(), fixed.dim()))
}

/// A cyclotomic field containing both the preset's roots and `ζ₁₂`.
pub fn base_change_target(h: &FiniteHopfAlgebra) -> Field {
    let twelve = Field::cyclotomic(12).unwrap();
    if h.base_change(&twelve).is_ok() {
        return twelve;
    }
    let FieldSpec::Cyclotomic { order, .. } = h.field().spec() else { panic!("{} is not cyclotomic", h.field()) };
    Field::cyclotomic(num_integer::lcm(order, 12)).unwrap()
}

pub fn io_and_unimodularity_survive(h: &FiniteHopfAlgebra, target: &Field) -> Check {
    let big = h.base_change(target).map_err(err)?;
    let (d, e) = (compute_integrals(h).map_err(err)?, compute_integrals(&big).map_err(err)?);
    let before = (integral_order(h, &d, CAP).map_err(err)?, is_unimodular(h, &d).map_err(err)?);
    let after = (integral_order(&big, &e, CAP).map_err(err)?, is_unimodular(&big, &e).map_err(err)?);
    ensure(before == after, || format!("over {}: {before:?}, over {target}: {after:?}", h.field()))
}

/// The suite every finite preset has to pass.
pub fn finite_properties(h: &FiniteHopfAlgebra) -> Vec<(&'static str, Check)> {
    let target = base_change_target(h);
    vec![
        ("integral spaces are lines", integrals_are_lines(h)),
        ("convolution and winding orders agree", routes_agree(h)),
        ("alpha_l = sigma_r after S", alpha_is_sigma_after_antipode(h)),
        ("dim H_iq = io", iq_dim_is_io(h)),
        ("io divides dim H_ab", io_divides_ab_dim(h)),
        ("coinvariants = winding fixed points", coinvariants_are_fixed_points(h)),
        ("base change keeps io and unimodularity", io_and_unimodularity_survive(h, &target)),
    ]
}

/// Order of `σ_π` read off by iterating it on the generators (and their
/// declared inverses) in normal form.
pub fn family_winding_order(f: &PresentedHopfFamily, pi: &FamilyCharacter, cap: u64) -> Result<Option<u64>, Error> {
    let top = f.top();
    let alg = top.algebra.as_ref();
    let field = f.field();
    let sigma = f.winding_images(pi)?;
    let n = sigma.images.len();
    let identity: Vec<Poly> = (0..n).map(|g| normal_form(alg, &Expr::generator(field, g))).collect::<Result<_, _>>()?;
    let identity_inv: Vec<Option<Poly>> =
        (0..n).map(|g| alg.is_invertible(g).then(|| alg.generator(g, true)).transpose()).collect::<Result<_, _>>()?;
    let ring = PolyRing(alg);
    let (mut cur, mut cur_inv) = (identity.clone(), identity_inv.clone());
    for k in 1..=cap {
        // σ^k(g) = σ^{k-1}(σ(g)): substitute the previous images into σ(g).
        let gen = |h: usize, inverse: bool| -> Result<Poly, Error> {
            if inverse {
                cur_inv[h].clone().ok_or_else(|| Error::Parse(format!("no inverse for generator {h}")))
            } else {
                Ok(cur[h].clone())
            }
        };
        let next: Vec<Poly> = sigma.images.iter().map(|e| evaluate(&ring, e, &gen)).collect::<Result<_, _>>()?;
        let next_inv: Vec<Option<Poly>> = (0..n)
            .map(|g| match (&cur_inv[g], sigma.inverse_images.get(g).and_then(|e| e.as_ref())) {
                (Some(_), Some(e)) => evaluate(&ring, e, &gen).map(Some),
                _ => Ok(None),
            })
            .collect::<Result<_, _>>()?;
        cur = next;
        cur_inv = next_inv;
        if cur == identity && cur_inv == identity_inv {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// The suite every family preset has to pass.
pub fn family_properties(f: &PresentedHopfFamily) -> Vec<(&'static str, Check)> {
    let chain = ensure(f.verify_chain().all_passed(), || "chain checks fail".into());
    let lines = integrals_are_lines(&f.terminal);
    let routes = (|| {
        let sigma = f.sigma_right().map_err(err)?;
        let by_convolution = f.integral_order(CAP).map_err(err)?;
        let by_winding = family_winding_order(f, &sigma, CAP).map_err(err)?;
        ensure(by_convolution == by_winding, || format!("convolution {by_convolution:?}, winding {by_winding:?}"))
    })();
    let alpha = (|| {
        let chi = f.integral_character().map_err(err)?;
        let sigma = f.sigma_right().map_err(err)?;
        ensure(f.compose_antipode(&sigma).map_err(err)? == chi, || "alpha_l differs from sigma_r after S".into())?;
        ensure(f.convolution(&chi, &sigma).map_err(err)? == f.counit_character(), || "alpha_l * sigma_r is not the counit".into())
    })();
    vec![
        ("reduction chain verifies", chain),
        ("integral spaces are lines", lines),
        ("convolution and winding orders agree", routes),
        ("alpha_l = sigma_r after S", alpha),
    ]
}
