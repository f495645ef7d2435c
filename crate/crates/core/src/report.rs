//! Report documents: the full invariant pipeline rendered as ordered JSON,
//! plus a plain-text view of the same document.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::family::{ChainReport, PresentedHopfFamily};
use crate::hopf::{AxiomReport, Character, FiniteHopfAlgebra};
use crate::integrals::{
    antipode_report, compute_integrals, integral_order, is_unimodular, maschke_report, s_twist_identity_check,
};
use crate::json::FieldJson;
use crate::linalg::Subspace;
use crate::presets::{Golden, Preset, PresetObject};
use crate::quotients::{abelianization, coinvariants, integral_quotient, iq_character_group_is_cyclic, winding_fixed_points};
use crate::scalar::DEFAULT_ORDER_CAP;

/// Truncation levels analysed in a family report.
pub const REPORT_TRUNCATION_LEVELS: usize = 3;
/// Degree bound for the non-zero-divisor evidence in family reports.
pub const NZD_DEGREE: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub order_cap: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { order_cap: DEFAULT_ORDER_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// Hopf axioms, chain checks or golden values failed.
    Failed(Vec<String>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub document: Value,
    /// Flat computed values, keyed like [`Golden::key`].
    pub summary: BTreeMap<&'static str, String>,
    pub status: Status,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.document).expect("serializable") + "\n"
    }

    pub fn to_text(&self) -> String {
        render_text(&self.document)
    }
}

fn opt_u64(v: Option<u64>) -> Value {
    v.map_or(Value::Null, Value::from)
}

fn opt_string(v: Option<u64>) -> String {
    v.map_or_else(|| "none".to_string(), |n| n.to_string())
}

fn character_json(h: &FiniteHopfAlgebra, chi: &Character) -> Value {
    let mut m = Map::new();
    for (label, v) in h.labels().iter().zip(chi.values()) {
        m.insert(label.clone(), Value::from(v.to_string()));
    }
    Value::Object(m)
}

fn axioms_json(report: &AxiomReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            let mut m = Map::new();
            m.insert("name".into(), c.name.into());
            m.insert("ok".into(), c.failure.is_none().into());
            if let Some(w) = &c.failure {
                m.insert("witness".into(), w.clone().into());
            }
            Value::Object(m)
        })
        .collect();
    json!({ "passed": report.all_passed(), "checks": checks })
}

fn chain_json(report: &ChainReport, steps: usize) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            let mut m = Map::new();
            m.insert("step".into(), c.step.into());
            m.insert("name".into(), c.name.into());
            m.insert("ok".into(), c.failure.is_none().into());
            if let Some(w) = &c.failure {
                m.insert("witness".into(), w.clone().into());
            }
            Value::Object(m)
        })
        .collect();
    json!({ "steps": steps, "passed": report.all_passed(), "checks": checks })
}

fn subspace_basis(h: &crate::algebra::FiniteAlgebra, s: &Subspace) -> Vec<String> {
    s.basis().iter().map(|v| h.describe_vector(v)).collect()
}

fn subspace_is_commutative(alg: &crate::algebra::FiniteAlgebra, s: &Subspace) -> bool {
    let b = s.basis();
    b.iter().enumerate().all(|(i, x)| b[i + 1..].iter().all(|y| alg.mul(x, y) == alg.mul(y, x)))
}

/// Compares computed values with golden ones and appends the `golden`
/// block; returns the mismatch messages. A value the pipeline could not
/// compute here (the radical in small characteristic, say) is skipped.
fn attach_golden(doc: &mut Map<String, Value>, summary: &BTreeMap<&'static str, String>, golden: &[Golden]) -> Vec<String> {
    let mut failures = Vec::new();
    let rows: Vec<Value> = golden
        .iter()
        .map(|g| {
            let computed = summary.get(g.key).cloned();
            let ok = computed.as_ref().map(|c| *c == g.value);
            if ok == Some(false) {
                failures.push(format!("golden {}: expected {}, computed {}", g.key, g.value, computed.as_deref().unwrap_or("")));
            }
            json!({
                "key": g.key,
                "expected": g.value,
                "computed": computed,
                "provenance": g.provenance.to_string(),
                "ok": ok,
            })
        })
        .collect();
    if !rows.is_empty() {
        doc.insert("golden".into(), Value::Array(rows));
    }
    failures
}

fn status_of(failures: Vec<String>) -> Status {
    if failures.is_empty() {
        Status::Ok
    } else {
        Status::Failed(failures)
    }
}

/// Everything computed for a finite-dimensional Hopf algebra.
pub fn finite_report(input: &str, h: &FiniteHopfAlgebra, golden: &[Golden], opts: ReportOptions) -> Result<Report> {
    let mut doc = Map::new();
    let mut summary = BTreeMap::new();
    doc.insert("input".into(), input.into());
    doc.insert("kind".into(), "finite".into());
    doc.insert("field".into(), serde_json::to_value(FieldJson::describe(h.field())).expect("field"));
    doc.insert("dim".into(), h.dim().into());
    doc.insert("basis".into(), h.labels().to_vec().into());
    summary.insert("dim", h.dim().to_string());

    let axioms = h.verify_axioms();
    doc.insert("axioms".into(), axioms_json(&axioms));
    if !axioms.all_passed() {
        let failures = axioms.failures().map(|c| format!("{}: {}", c.name, c.failure.as_deref().unwrap_or(""))).collect();
        return Ok(Report { document: Value::Object(doc), summary, status: Status::Failed(failures) });
    }

    let alg = h.algebra();
    let data = compute_integrals(h)?;
    let io = integral_order(h, &data, opts.order_cap)?;
    let unimodular = is_unimodular(h, &data)?;
    doc.insert(
        "integrals".into(),
        json!({
            "left": alg.describe_vector(&data.left),
            "right": alg.describe_vector(&data.right),
            "alpha_left": character_json(h, &data.alpha_left),
            "sigma_right": character_json(h, &data.sigma_right),
            "alpha_left_is_sigma_right_after_antipode": s_twist_identity_check(h, &data),
        }),
    );
    doc.insert("io".into(), opt_u64(io));
    doc.insert("order_cap".into(), opts.order_cap.into());
    doc.insert("unimodular".into(), unimodular.into());
    summary.insert("io", opt_string(io));
    summary.insert("unimodular", unimodular.to_string());

    let m = maschke_report(h, &data, opts.order_cap)?;
    let radical = match m.radical_dim {
        Some(d) => Value::from(d),
        None => Value::from(format!("unsupported in characteristic {}", h.field().characteristic())),
    };
    let triangle = m.radical_dim.map(|d| m.semisimple_by_integral == (d == 0) && m.semisimple_by_integral == m.cond1_holds);
    doc.insert(
        "maschke".into(),
        json!({
            "epsilon_of_integral": m.epsilon_of_integral.to_string(),
            "semisimple_by_integral": m.semisimple_by_integral,
            "radical_dim": radical,
            "cond1": m.cond1_holds,
            "cond2": m.cond2_holds,
            "cond2_characters_checked": m.cond2_checked,
            "triangle_holds": triangle,
        }),
    );
    summary.insert("eps_integral", m.epsilon_of_integral.to_string());
    summary.insert("semisimple", m.semisimple_by_integral.to_string());
    if let Some(d) = m.radical_dim {
        summary.insert("radical_dim", d.to_string());
    }

    let a = antipode_report(h, opts.order_cap)?;
    doc.insert("antipode".into(), json!({ "order": opt_u64(a.order), "squared_is_identity": a.squared_is_identity }));
    summary.insert("antipode_order", opt_string(a.order));

    let ab = abelianization(h)?;
    let ab_dim = ab.quotient.dim();
    doc.insert("abelianization".into(), json!({ "dim": ab_dim, "commutative": ab.quotient.algebra().is_commutative() }));
    summary.insert("ab_dim", ab_dim.to_string());

    let mut failures = Vec::new();
    match io {
        Some(io) => {
            let iq = integral_quotient(h, &data, opts.order_cap)?;
            doc.insert(
                "integral_quotient".into(),
                json!({
                    "dim": iq.quotient.dim(),
                    "kernel_dim": iq.kernel.dim(),
                    "commutative": iq.quotient.algebra().is_commutative(),
                    "character_group_cyclic": iq_character_group_is_cyclic(&iq, &data, opts.order_cap)?,
                    "io_divides_ab_dim": ab_dim as u64 % io == 0,
                }),
            );
            summary.insert("iq_dim", iq.quotient.dim().to_string());
            let co = coinvariants(h, &iq)?;
            let fixed = winding_fixed_points(h, &data, io)?;
            let equal = co == fixed;
            if !equal {
                failures.push("coinvariants differ from the winding-fixed subalgebra".to_string());
            }
            doc.insert(
                "coinvariants".into(),
                json!({
                    "dim": co.dim(),
                    "commutative": subspace_is_commutative(alg, &co),
                    "basis": subspace_basis(alg, &co),
                    "equals_winding_fixed_points": equal,
                }),
            );
        }
        None => {
            doc.insert("integral_quotient".into(), Value::Null);
        }
    }
    failures.extend(attach_golden(&mut doc, &summary, golden));
    Ok(Report { document: Value::Object(doc), summary, status: status_of(failures) })
}

/// Truncation `H/K_s` of a family: radical layers and winding invariants.
pub fn truncation_json(f: &PresentedHopfFamily, s: usize, opts: ReportOptions) -> Result<Value> {
    let t = f.truncate(s, opts.order_cap)?;
    let alg = &t.algebra;
    let layers = match alg.radical_layers() {
        Ok(l) => Value::from(l),
        Err(Error::UnsupportedCharacteristic { characteristic, .. }) => {
            Value::from(format!("unsupported in characteristic {characteristic}"))
        }
        Err(e) => return Err(e),
    };
    let radical_dim = alg.jacobson_radical().ok().map(|r| r.dim());
    let fixed = alg.fixed_subalgebra(&t.windings)?;
    let hopf = f.truncated_hopf(s).map(|h| h.verify_axioms().all_passed()).unwrap_or(false);
    Ok(json!({
        "s": s,
        "dim": alg.dim(),
        "basis": alg.labels().to_vec(),
        "radical_layers": layers,
        "semisimple": radical_dim.map(|d| d == 0),
        "windings": t.windings.len(),
        "fixed_subalgebra": {
            "dim": fixed.dim(),
            "basis": subspace_basis(alg, &fixed),
            "commutative": subspace_is_commutative(alg, &fixed),
        },
        "hopf_quotient": hopf,
    }))
}

/// Everything computed for a presented family.
pub fn family_report(
    input: &str,
    f: &PresentedHopfFamily,
    golden: &[Golden],
    pi_degree: Option<u64>,
    opts: ReportOptions,
) -> Result<Report> {
    let mut doc = Map::new();
    let mut summary = BTreeMap::new();
    doc.insert("input".into(), input.into());
    doc.insert("kind".into(), "family".into());
    doc.insert("field".into(), serde_json::to_value(FieldJson::describe(f.field())).expect("field"));
    doc.insert("generators".into(), f.generator_names().into());
    doc.insert("terminal_dim".into(), f.terminal.dim().into());

    let chain = f.verify_chain();
    doc.insert("chain".into(), chain_json(&chain, f.steps.len()));
    if !chain.all_passed() {
        let failures = chain
            .failures()
            .map(|c| format!("step {} {}: {}", c.step, c.name, c.failure.as_deref().unwrap_or("")))
            .collect();
        return Ok(Report { document: Value::Object(doc), summary, status: Status::Failed(failures) });
    }
    doc.insert(
        "non_zero_divisor_evidence".into(),
        json!({ "degree": NZD_DEGREE, "injective": f.non_zero_divisor_evidence(NZD_DEGREE)? }),
    );

    let chi = f.integral_character()?;
    let sigma = f.compose_antipode(&chi)?;
    let io = f.integral_order(opts.order_cap)?;
    let unimodular = sigma == f.counit_character();
    doc.insert("integral_character".into(), chi.to_string().into());
    doc.insert("sigma_right".into(), sigma.to_string().into());
    doc.insert("io".into(), opt_u64(io));
    doc.insert("order_cap".into(), opts.order_cap.into());
    doc.insert("unimodular".into(), unimodular.into());
    summary.insert("integral_character", chi.to_string());
    summary.insert("sigma_right", sigma.to_string());
    summary.insert("io", opt_string(io));
    summary.insert("unimodular", unimodular.to_string());

    if let Some(io) = io {
        let clique = f.clique_of_trivial(opts.order_cap)?;
        let iq_dim = f.integral_quotient_dim(opts.order_cap)?;
        doc.insert("clique".into(), clique.iter().map(|c| c.to_string()).collect::<Vec<_>>().into());
        doc.insert("iq_dim".into(), iq_dim.into());
        summary.insert("clique_size", clique.len().to_string());
        summary.insert("iq_dim", iq_dim.to_string());
        if let Some(pi) = pi_degree {
            doc.insert("pi_degree".into(), json!({ "value": pi, "provenance": "published", "equals_io": pi == io }));
        }
    } else {
        doc.insert("clique".into(), Value::Null);
    }

    if io.is_some() && f.top().algebra.truncation(1).is_some() {
        let levels = (1..=REPORT_TRUNCATION_LEVELS).map(|s| truncation_json(f, s, opts)).collect::<Result<Vec<_>>>()?;
        doc.insert("truncations".into(), levels.into());
    }
    let failures = attach_golden(&mut doc, &summary, golden);
    Ok(Report { document: Value::Object(doc), summary, status: status_of(failures) })
}

/// Report on a preset, dispatching on its kind.
pub fn preset_report(p: &Preset, opts: ReportOptions) -> Result<Report> {
    match &p.object {
        PresetObject::Finite(h) => finite_report(&p.descriptor, h, &p.golden, opts),
        PresetObject::Family(f) => family_report(&p.descriptor, f, &p.golden, p.pi_degree, opts),
    }
}

/// Report on `H ⊗ K` with the lcm law for integral orders.
pub fn tensor_report(
    (a_name, a): (&str, &FiniteHopfAlgebra),
    (b_name, b): (&str, &FiniteHopfAlgebra),
    opts: ReportOptions,
) -> Result<Report> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().to_string(), b.field().to_string()));
    }
    let order = |h: &FiniteHopfAlgebra| -> Result<Option<u64>> { integral_order(h, &compute_integrals(h)?, opts.order_cap) };
    let (io_a, io_b) = (order(a)?, order(b)?);
    let t = a.tensor(b)?;
    let mut report = finite_report(&format!("{a_name} ⊗ {b_name}"), &t, &[], opts)?;
    let io_t = report.summary.get("io").cloned();
    let lcm = match (io_a, io_b) {
        (Some(x), Some(y)) => Some(num_integer::lcm(x, y)),
        _ => None,
    };
    let holds = io_t.as_deref() == Some(opt_string(lcm).as_str());
    if let Value::Object(doc) = &mut report.document {
        doc.insert(
            "lcm_law".into(),
            json!({ "io_left": opt_u64(io_a), "io_right": opt_u64(io_b), "lcm": opt_u64(lcm), "holds": holds }),
        );
    }
    if !holds && report.status == Status::Ok {
        report.status = Status::Failed(vec!["lcm law fails".into()]);
    }
    Ok(report)
}

/// Standalone truncation document for the `truncate` command.
pub fn truncation_report(input: &str, f: &PresentedHopfFamily, s: usize, opts: ReportOptions) -> Result<Report> {
    let mut doc = Map::new();
    doc.insert("input".into(), input.into());
    doc.insert("kind".into(), "truncation".into());
    doc.insert("field".into(), serde_json::to_value(FieldJson::describe(f.field())).expect("field"));
    let Value::Object(body) = truncation_json(f, s, opts)? else { unreachable!("object") };
    doc.extend(body);
    Ok(Report { document: Value::Object(doc), summary: BTreeMap::new(), status: Status::Ok })
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn render_into(out: &mut String, key: &str, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, x) in m {
                render_into(out, k, x, indent + 1);
            }
        }
        Value::Array(items) if items.iter().all(is_flat) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            out.push_str(&format!("{pad}{key}: [{}]\n", parts.join(", ")));
        }
        Value::Array(items) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for item in items {
                match item {
                    Value::Object(m) => {
                        let flat: Vec<String> = m.iter().map(|(k, x)| format!("{k}={}", compact(x))).collect();
                        out.push_str(&format!("{pad}  - {}\n", flat.join(" ")));
                    }
                    other => out.push_str(&format!("{pad}  - {}\n", compact(other))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{key}: {}\n", scalar_text(other))),
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Object(_) | Value::Array(_) => v.to_string(),
        Value::String(s) if s.contains(' ') => format!("{s:?}"),
        other => scalar_text(other),
    }
}

/// Indented `key: value` lines in document order.
pub fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    match doc {
        Value::Object(m) => {
            for (k, v) in m {
                render_into(&mut out, k, v, 0);
            }
        }
        other => out.push_str(&scalar_text(other)),
    }
    out
}
