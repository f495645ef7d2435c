//! Acceptance run: one PASS/FAIL line per criterion. All comparisons are
//! exact (tolerance 0); every criterion is timed against a 5 s budget.
//!
//! Criterion 8 asks for a Hopf map from the circle Hopf algebra to the
//! Klein four group algebra. No such map exists (the character group of the
//! circle algebra is cyclic of order 4), so the criterion reports FAIL. The
//! run exits successfully only when the failing set is exactly that one.

mod common;

use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::TestRunner;

use common::*;
use hopfint::hopf::{hopf_morphism_failure, verify_hopf_morphism, FiniteHopfAlgebra};
use hopfint::integrals::{antipode_report, compute_integrals, integral_order, is_unimodular, maschke_report};
use hopfint::presets::{build_preset, circle_cyclic_witness, circle_klein_witness};
use hopfint::quotients::integral_quotient;
use hopfint::{Field, DEFAULT_ORDER_CAP};

const BUDGET: Duration = Duration::from_secs(5);
const KNOWN_FAILURES: &[u32] = &[8];

type Outcome = Result<Vec<String>, String>;

fn check(ok: bool, what: impl Into<String>) -> Result<String, String> {
    let what = what.into();
    if ok {
        Ok(what)
    } else {
        Err(what)
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(label: &str, got: T, want: T) -> Result<String, String> {
    check(got == want, format!("{label} = {got:?} (want {want:?})"))
}

fn io_of(h: &FiniteHopfAlgebra) -> Option<u64> {
    integral_order(h, &compute_integrals(h).unwrap(), DEFAULT_ORDER_CAP).unwrap()
}

fn sweedler() -> Outcome {
    let h = finite("preset:sweedler");
    let d = compute_integrals(&h).map_err(|e| e.to_string())?;
    let m = maschke_report(&h, &d, DEFAULT_ORDER_CAP).map_err(|e| e.to_string())?;
    let radical = m.radical_dim.ok_or("radical unsupported")?;
    let iq = integral_quotient(&h, &d, DEFAULT_ORDER_CAP).map_err(|e| e.to_string())?;
    let triangle = m.semisimple_by_integral == (radical == 0) && m.semisimple_by_integral == m.cond1_holds;
    Ok(vec![
        expect_eq("io", io_of(&h), Some(2))?,
        expect_eq("unimodular", is_unimodular(&h, &d).unwrap(), false)?,
        check(m.epsilon_of_integral.is_zero(), format!("ε(∫) = {}", m.epsilon_of_integral))?,
        expect_eq("radical_dim", radical, 2)?,
        check(triangle, "semisimple ⟺ radical = 0 ⟺ ε(∫) ≠ 0")?,
        expect_eq("dim H_iq", iq.quotient.dim(), 2)?,
        expect_eq("antipode order", antipode_report(&h, DEFAULT_ORDER_CAP).unwrap().order, Some(4))?,
    ])
}

fn taft_family() -> Outcome {
    let mut lines = Vec::new();
    for n in [2u64, 3, 5] {
        let f = family(&format!("taft_family(n={n},m=1,t=1)"));
        let field = f.field().clone();
        let xi_inv = field.primitive_root_of_unity(n).unwrap().inv().unwrap();
        let chi = f.integral_character().map_err(|e| e.to_string())?;
        lines.push(check(
            chi.value("g") == Some(&xi_inv) && chi.value("x") == Some(&field.zero()),
            format!("n={n}: character {chi}, ξ⁻¹ = {xi_inv}"),
        )?);
        lines.push(expect_eq(&format!("n={n}: io"), f.integral_order(DEFAULT_ORDER_CAP).unwrap(), Some(n))?);
        lines.push(expect_eq(
            &format!("n={n}: clique size"),
            f.clique_of_trivial(DEFAULT_ORDER_CAP).map_err(|e| e.to_string())?.len() as u64,
            n,
        )?);
    }
    Ok(lines)
}

fn enveloping() -> Outcome {
    let q = family("solvable_enveloping");
    let mut lines = vec![
        expect_eq("character over Q", q.integral_character().unwrap().to_string(), "(x↦0, y↦-1)".to_string())?,
        expect_eq("io over Q", q.integral_order(DEFAULT_ORDER_CAP).unwrap(), None)?,
    ];
    for p in [3u64, 5] {
        let fp = Field::prime(p).unwrap();
        let f = build_preset("solvable_enveloping", Some(&fp)).unwrap().family().cloned().unwrap();
        let chi = f.integral_character().unwrap();
        lines.push(check(
            chi.value("x") == Some(&fp.zero()) && chi.value("y") == Some(&fp.from_i64(-1)),
            format!("character over F{p}: {chi}"),
        )?);
        lines.push(expect_eq(&format!("io over F{p}"), f.integral_order(DEFAULT_ORDER_CAP).unwrap(), Some(p))?);
    }
    Ok(lines)
}

fn dihedral() -> Outcome {
    let f = family("infinite_dihedral");
    let sigma = f.sigma_right().unwrap();
    let field = f.field();
    Ok(vec![
        check(
            sigma.value("x") == Some(&field.one()) && sigma.value("g") == Some(&field.from_i64(-1)),
            format!("Σʳ = {sigma}"),
        )?,
        expect_eq("io", f.integral_order(DEFAULT_ORDER_CAP).unwrap(), Some(2))?,
        expect_eq("dim H_iq", f.integral_quotient_dim(DEFAULT_ORDER_CAP).unwrap(), 2)?,
    ])
}

fn two_step_chain() -> Outcome {
    let f = family("example85");
    let chi = f.integral_character().unwrap();
    Ok(vec![
        expect_eq("steps", f.steps.len(), 2)?,
        check(f.verify_chain().all_passed(), "chain verifies")?,
        check(chi == f.counit_character(), format!("character {chi} is trivial"))?,
        expect_eq("io", f.integral_order(DEFAULT_ORDER_CAP).unwrap(), Some(1))?,
    ])
}

fn tensors() -> Outcome {
    let q6 = Field::cyclotomic(6).unwrap();
    let t3 = build_preset("taft_finite(n=3)", Some(&q6)).unwrap().finite().cloned().unwrap();
    let sw = build_preset("sweedler", Some(&q6)).unwrap().finite().cloned().unwrap();
    let mixed = t3.tensor(&sw).map_err(|e| e.to_string())?;
    let t3 = finite("taft_finite(n=3)");
    let square = t3.tensor(&t3).map_err(|e| e.to_string())?;
    Ok(vec![
        expect_eq("io(taft_finite(3) ⊗ sweedler) over Q(ζ6)", io_of(&mixed), Some(6))?,
        expect_eq("dim(taft_finite(3) ⊗ taft_finite(3))", square.dim(), 81)?,
        expect_eq("io(taft_finite(3) ⊗ taft_finite(3))", io_of(&square), Some(3))?,
    ])
}

fn truncations() -> Outcome {
    let f = family("taft_family(3,1,1)");
    let mut lines = Vec::new();
    for s in 1..=4usize {
        let t = f.truncate(s, DEFAULT_ORDER_CAP).map_err(|e| e.to_string())?;
        let layers = t.algebra.radical_layers().map_err(|e| e.to_string())?;
        lines.push(expect_eq(&format!("s={s}: radical layers"), layers, vec![3; s])?);
        let fixed = t.algebra.fixed_subalgebra(&t.windings).map_err(|e| e.to_string())?;
        let labels: Vec<String> = fixed.pivots().iter().map(|&i| t.algebra.labels()[i].clone()).collect();
        let want: Vec<String> = (0..s).map(|j| match j { 0 => "1".into(), 1 => "x".into(), _ => format!("x^{j}") }).collect();
        let monomial = fixed.basis().iter().all(|v| v.iter().filter(|c| !c.is_zero()).count() == 1);
        lines.push(check(monomial && labels == want, format!("s={s}: fixed basis {labels:?}"))?);
        let b = fixed.basis();
        let commutative = b.iter().all(|x| b.iter().all(|y| t.algebra.mul(x, y) == t.algebra.mul(y, x)));
        lines.push(check(commutative, format!("s={s}: fixed subalgebra commutative"))?);
    }
    Ok(lines)
}

fn circle() -> Outcome {
    let h = finite("circle_hopf");
    let axioms = h.verify_axioms();
    let mut lines = vec![check(axioms.all_passed(), "circle Hopf algebra passes the axioms over Q")?];
    let q4 = Field::cyclotomic(4).unwrap();
    let h4 = build_preset("circle_hopf", Some(&q4)).unwrap().finite().cloned().unwrap();
    let (z4_map, z4) = circle_cyclic_witness(&q4).map_err(|e| e.to_string())?;
    // Context for the verdict: z = x+iy has order 4, and z ↦ c is a Hopf map onto kℤ₄.
    let cyclic = verify_hopf_morphism(&z4_map, &h4, &z4);
    let (klein_map, klein) = circle_klein_witness(&q4).map_err(|e| e.to_string())?;
    match hopf_morphism_failure(&klein_map, &h4, &klein) {
        None => lines.push("z = x+iy witness is a Hopf map to k(ℤ₂×ℤ₂)".into()),
        Some(why) => {
            return Err(format!(
                "z = x+iy witness is not a Hopf map to k(ℤ₂×ℤ₂) over Q(ζ4): {why}; \
                 the same z onto kℤ₄ is a Hopf map: {cyclic}"
            ))
        }
    }
    Ok(lines)
}

fn properties() -> Outcome {
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    for name in FINITE {
        for (p, r) in finite_properties(&finite(name)) {
            if let Err(e) = r {
                failures.push(format!("{name}: {p}: {e}"));
            }
        }
    }
    lines.push(format!("{} finite presets × 7 properties", FINITE.len()));
    for name in FAMILIES {
        for (p, r) in family_properties(&family(name)) {
            if let Err(e) = r {
                failures.push(format!("{name}: {p}: {e}"));
            }
        }
    }
    lines.push(format!("{} family presets × 4 properties", FAMILIES.len()));
    let mut runner = TestRunner::new(seeded(6, 0x9a7e_5eed));
    // n = 5 is covered by the preset list; its ℚ(ζ60) base change is slow.
    let strategy = (2usize..=4).prop_flat_map(|n| (Just(n), 1..n)).prop_filter("coprime", |&(n, m)| num_integer::gcd(n, m) == 1);
    let random = runner.run(&strategy, |(n, m)| {
        let h = finite(&format!("taft_finite(n={n},m={m})"));
        for (p, r) in finite_properties(&h) {
            prop_assert!(r.is_ok(), "taft_finite(n={n},m={m}): {p}: {:?}", r);
        }
        Ok(())
    });
    if let Err(e) = random {
        failures.push(e.to_string());
    }
    lines.push("6 seeded random Taft algebras".into());
    if failures.is_empty() {
        Ok(lines)
    } else {
        Err(failures.join("; "))
    }
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 9] = [
        (1, "Sweedler algebra invariants", sweedler),
        (2, "Taft family characters, io and cliques", taft_family),
        (3, "enveloping algebra over Q, F3, F5", enveloping),
        (4, "infinite dihedral family", dihedral),
        (5, "two-step reduction chain", two_step_chain),
        (6, "tensor product laws", tensors),
        (7, "Taft truncations s = 1..4", truncations),
        (8, "circle Hopf algebra and the Klein witness", circle),
        (9, "property suites", properties),
    ];
    println!("acceptance (tolerance: exact; budget {}s per criterion)", BUDGET.as_secs());
    let mut failed = Vec::new();
    for (n, title, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > BUDGET => Err(format!("took {elapsed:.2?}")),
            other => other,
        };
        match &outcome {
            Ok(details) => {
                println!("criterion {n}: PASS  {title} ({elapsed:.2?})");
                for d in details {
                    println!("    {d}");
                }
            }
            Err(why) => {
                println!("criterion {n}: FAIL  {title} ({elapsed:.2?})");
                println!("    {why}");
                failed.push(n);
            }
        }
    }
    if failed == KNOWN_FAILURES {
        println!("failing as documented: {failed:?}");
    } else {
        println!("unexpected outcome: failing {failed:?}, documented {KNOWN_FAILURES:?}");
        std::process::exit(1);
    }
}
