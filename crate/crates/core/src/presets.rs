//! Named Hopf algebras and presented families with their expected invariants.
//!
//! Inputs look like `preset:taft_family(n=3,m=1,t=1)`, `taft_family(3,1,1)`
//! or just `sweedler`. Positional arguments fill parameters in declaration
//! order; `key=value` arguments may follow.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::family::{GenMap, HopfData, PresentedHopfFamily, ReductionStep, StageMap, WitnessTerm};
use crate::hopf::FiniteHopfAlgebra;
use crate::linalg::{unit_vector, zero_vector, Matrix, Vector};
use crate::monomial::{
    CommutativeLaurent, Expr, InversionGroup, MonomialAlgebra, SolvableEnveloping, TaftAlgebra, TensorExpr,
};
use crate::scalar::{Field, FieldSpec, Scalar};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Stated in the literature for this example.
    Published,
    /// Immediate from the definitions.
    Elementary,
    /// Computed by the independent scratch oracle and frozen.
    BruteForce,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Published => "published",
            Provenance::Elementary => "elementary",
            Provenance::BruteForce => "brute-force",
        })
    }
}

/// One expected report field. `key` matches the report's field names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Golden {
    pub key: &'static str,
    pub value: String,
    pub provenance: Provenance,
}

fn golden(key: &'static str, value: impl ToString, provenance: Provenance) -> Golden {
    Golden { key, value: value.to_string(), provenance }
}

#[derive(Clone, Debug)]
pub enum PresetObject {
    Finite(FiniteHopfAlgebra),
    Family(PresentedHopfFamily),
}

#[derive(Clone, Debug)]
pub struct Preset {
    /// Canonical `name(key=value,...)` with every parameter resolved.
    pub descriptor: String,
    pub object: PresetObject,
    pub golden: Vec<Golden>,
    /// Closed-form PI degree, where one is published.
    pub pi_degree: Option<u64>,
}

impl Preset {
    pub fn field(&self) -> &Field {
        match &self.object {
            PresetObject::Finite(h) => h.field(),
            PresetObject::Family(f) => f.field(),
        }
    }

    pub fn finite(&self) -> Option<&FiniteHopfAlgebra> {
        match &self.object {
            PresetObject::Finite(h) => Some(h),
            PresetObject::Family(_) => None,
        }
    }

    pub fn family(&self) -> Option<&PresentedHopfFamily> {
        match &self.object {
            PresetObject::Family(f) => Some(f),
            PresetObject::Finite(_) => None,
        }
    }
}

pub const PRESET_NAMES: &[&str] = &[
    "trivial",
    "group_algebra",
    "cyclic",
    "klein_four",
    "sweedler",
    "taft_finite",
    "circle_hopf",
    "circle_xi",
    "taft_family",
    "solvable_enveloping",
    "laurent",
    "infinite_dihedral",
    "example85",
];

/// A parsed `NAME(args)` request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresetRequest {
    pub name: String,
    pub positional: Vec<String>,
    pub named: BTreeMap<String, String>,
}

/// Whether `text` names a preset rather than a file.
pub fn looks_like_preset(text: &str) -> bool {
    if text.starts_with("preset:") {
        return true;
    }
    let name = text.split('(').next().unwrap_or("");
    PRESET_NAMES.contains(&name) && (text == name || text.ends_with(')'))
}

pub fn parse_request(text: &str) -> Result<PresetRequest> {
    let body = text.trim().strip_prefix("preset:").unwrap_or(text.trim());
    let (name, args) = match body.find('(') {
        Some(open) => {
            let inner = body[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {text:?}")))?;
            (&body[..open], inner)
        }
        None => (body, ""),
    };
    let name = name.trim();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(Error::Parse(format!("bad preset name in {text:?}")));
    }
    let mut positional = Vec::new();
    let mut named = BTreeMap::new();
    for arg in args.split(',').map(str::trim).filter(|a| !a.is_empty()) {
        match arg.split_once('=') {
            Some((k, v)) => {
                if named.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
                    return Err(Error::Parse(format!("parameter {k} given twice")));
                }
            }
            None if named.is_empty() => positional.push(arg.to_string()),
            None => return Err(Error::Parse(format!("positional argument {arg:?} after key=value"))),
        }
    }
    Ok(PresetRequest { name: name.to_string(), positional, named })
}

/// Parameter lookup against a declared parameter list.
struct Args<'a> {
    req: &'a PresetRequest,
    keys: &'static [&'static str],
}

impl<'a> Args<'a> {
    fn new(req: &'a PresetRequest, keys: &'static [&'static str]) -> Result<Self> {
        if req.positional.len() > keys.len() {
            return Err(invalid(&req.name, format!("takes at most {} arguments", keys.len())));
        }
        for k in req.named.keys() {
            match keys.iter().position(|x| x == k) {
                None => return Err(invalid(&req.name, format!("unknown parameter {k}"))),
                Some(i) if i < req.positional.len() => {
                    return Err(invalid(&req.name, format!("parameter {k} given twice")))
                }
                _ => {}
            }
        }
        Ok(Args { req, keys })
    }

    fn get(&self, key: &str) -> Option<&'a str> {
        let i = self.keys.iter().position(|k| *k == key).expect("declared key");
        self.req.positional.get(i).or_else(|| self.req.named.get(key)).map(String::as_str)
    }

    fn usize_or(&self, key: &str, default: usize) -> Result<usize> {
        match self.get(key) {
            None => Ok(default),
            Some(v) => v.parse().map_err(|_| invalid(&self.req.name, format!("{key} must be a non-negative integer, got {v:?}"))),
        }
    }

    fn field_or(&self, override_field: Option<&Field>, default: impl FnOnce() -> Result<Field>) -> Result<Field> {
        match (self.keys.contains(&"field").then(|| self.get("field")).flatten(), override_field) {
            (Some(spec), _) => Field::new(spec.parse::<FieldSpec>()?),
            (None, Some(f)) => Ok(f.clone()),
            (None, None) => default(),
        }
    }
}

fn invalid(preset: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParams { preset: preset.to_string(), reason: reason.into() }
}

/// Builds the preset named by `text`; `field` overrides the default field.
pub fn build_preset(text: &str, field: Option<&Field>) -> Result<Preset> {
    let req = parse_request(text)?;
    match req.name.as_str() {
        "trivial" => {
            let a = Args::new(&req, &["field"])?;
            let f = a.field_or(field, || Ok(Field::rational()))?;
            Ok(finite_preset("trivial".into(), cyclic_group_hopf(&f, 1)?, group_goldens(&f, 1, 1)))
        }
        "cyclic" => {
            let a = Args::new(&req, &["n", "field"])?;
            let n = a.usize_or("n", 2)?;
            let f = a.field_or(field, || Ok(Field::rational()))?;
            named_group(&req.name, &format!("z{n}"), &f)
        }
        "group_algebra" => {
            let a = Args::new(&req, &["group", "field"])?;
            let group = a.get("group").ok_or_else(|| invalid(&req.name, "missing group (zN, z2xz2, klein, s3, or a table)"))?;
            let f = a.field_or(field, || Ok(Field::rational()))?;
            named_group(&req.name, group, &f)
        }
        "klein_four" => {
            let a = Args::new(&req, &["field"])?;
            let f = a.field_or(field, || Ok(Field::rational()))?;
            named_group(&req.name, "z2xz2", &f).map(|mut p| {
                p.descriptor = "klein_four".into();
                p
            })
        }
        "sweedler" => {
            let a = Args::new(&req, &["field"])?;
            let f = a.field_or(field, || Ok(Field::rational()))?;
            let mut p = taft_finite_preset(&req.name, &f, 2, 1, 1, None)?;
            p.descriptor = "sweedler".into();
            Ok(p)
        }
        "taft_finite" => {
            let a = Args::new(&req, &["n", "m", "t", "xi", "field"])?;
            let n = a.usize_or("n", 2)?;
            let (m, t) = (a.usize_or("m", 1)?, a.usize_or("t", 1)?);
            let f = a.field_or(field, || taft_default_field(n))?;
            taft_finite_preset(&req.name, &f, n, m, t, a.get("xi"))
        }
        "circle_hopf" => {
            let a = Args::new(&req, &["field"])?;
            let f = a.field_or(field, || Ok(Field::rational()))?;
            let h = circle_hopf(&f, &f.one())?;
            let goldens = vec![
                golden("dim", 4, Provenance::Published),
                golden("io", 1, Provenance::Elementary),
                golden("unimodular", true, Provenance::Elementary),
            ];
            Ok(finite_preset("circle_hopf".into(), h, goldens))
        }
        "circle_xi" => {
            let a = Args::new(&req, &["xi", "field"])?;
            let f = a.field_or(field, || Ok(Field::rational()))?;
            let xi = match a.get("xi") {
                Some(s) => f.parse_scalar(s)?,
                None => f.one(),
            };
            if xi.is_zero() {
                return Err(invalid(&req.name, "xi must be nonzero"));
            }
            let h = circle_hopf(&f, &xi)?;
            let goldens = vec![golden("dim", 4, Provenance::Published), golden("io", 1, Provenance::Elementary)];
            Ok(finite_preset(format!("circle_xi(xi={xi})"), h, goldens))
        }
        "taft_family" => {
            let a = Args::new(&req, &["n", "m", "t", "xi", "field"])?;
            let n = a.usize_or("n", 2)?;
            let (m, t) = (a.usize_or("m", 1)?, a.usize_or("t", 1)?);
            let f = a.field_or(field, || taft_default_field(n))?;
            let xi = taft_root(&req.name, &f, n, a.get("xi"))?;
            let family = taft_family(&f, n, m, t, &xi)?;
            let q = xi.pow(m as u64);
            let io = q.multiplicative_order(n as u64).expect("root of unity");
            let chi = format!("(g↦{}, x↦0)", q.inv()?);
            let goldens = vec![
                golden("integral_character", chi, Provenance::Published),
                golden("io", io, Provenance::Published),
                golden("clique_size", io, Provenance::Published),
                golden("iq_dim", io, Provenance::Published),
            ];
            let mut p = family_preset(format!("taft_family(n={n},m={m},t={t},xi={xi})"), family, goldens);
            p.pi_degree = (num_integer::gcd(m, n) == 1).then_some(n as u64);
            Ok(p)
        }
        "solvable_enveloping" => {
            let a = Args::new(&req, &["field"])?;
            let f = a.field_or(field, || Ok(Field::rational()))?;
            let p = f.characteristic();
            let mut goldens = vec![
                golden("integral_character", format!("(x↦0, y↦{})", -f.one()), Provenance::Published),
                golden("io", if p == 0 { "none".to_string() } else { p.to_string() }, Provenance::Published),
            ];
            if p != 0 {
                goldens.push(golden("clique_size", p, Provenance::Published));
            }
            Ok(family_preset("solvable_enveloping".into(), solvable_enveloping(&f)?, goldens))
        }
        "laurent" => {
            let a = Args::new(&req, &["field"])?;
            let f = a.field_or(field, || Ok(Field::rational()))?;
            let goldens = vec![
                golden("integral_character", "(x↦1)", Provenance::Elementary),
                golden("io", 1, Provenance::Elementary),
            ];
            Ok(family_preset("laurent".into(), laurent(&f)?, goldens))
        }
        "infinite_dihedral" => {
            let a = Args::new(&req, &["field"])?;
            let f = a.field_or(field, || Ok(Field::rational()))?;
            let minus = -f.one();
            let goldens = vec![
                golden("integral_character", format!("(g↦{minus}, x↦1)"), Provenance::Published),
                golden("sigma_right", format!("(g↦{minus}, x↦1)"), Provenance::Published),
                golden("io", 2, Provenance::Published),
                golden("iq_dim", 2, Provenance::Published),
            ];
            Ok(family_preset("infinite_dihedral".into(), infinite_dihedral(&f)?, goldens))
        }
        "example85" => {
            let a = Args::new(&req, &["field"])?;
            let f = a.field_or(field, || Ok(Field::rational()))?;
            let goldens = vec![
                golden("integral_character", "(g↦1, x↦1, y↦1)", Provenance::Published),
                golden("io", 1, Provenance::Published),
            ];
            Ok(family_preset("example85".into(), example85(&f)?, goldens))
        }
        other => Err(Error::Parse(format!("unknown preset {other:?}; known: {}", PRESET_NAMES.join(", ")))),
    }
}

fn finite_preset(descriptor: String, h: FiniteHopfAlgebra, golden: Vec<Golden>) -> Preset {
    Preset { descriptor, object: PresetObject::Finite(h), golden, pi_degree: None }
}

fn family_preset(descriptor: String, f: PresentedHopfFamily, golden: Vec<Golden>) -> Preset {
    Preset { descriptor, object: PresetObject::Family(f), golden, pi_degree: None }
}

fn group_goldens(f: &Field, order: usize, abelian_order: usize) -> Vec<Golden> {
    let p = f.characteristic() as usize;
    let semisimple = p == 0 || order % p != 0;
    vec![
        golden("dim", order, Provenance::Elementary),
        golden("io", 1, Provenance::Elementary),
        golden("unimodular", true, Provenance::Elementary),
        golden("semisimple", semisimple, Provenance::Elementary),
        golden("iq_dim", 1, Provenance::Elementary),
        golden("ab_dim", abelian_order, Provenance::Elementary),
    ]
}

fn named_group(preset: &str, group: &str, f: &Field) -> Result<Preset> {
    let (labels, table) = match group {
        "z2xz2" | "klein" => {
            let labels = ["1", "a", "b", "ab"].map(String::from).to_vec();
            let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
            (labels, table)
        }
        "s3" => symmetric_group_3(),
        g if g.starts_with('z') => {
            let n: usize = g[1..].parse().map_err(|_| invalid(preset, format!("bad cyclic group {g:?}")))?;
            if n == 0 {
                return Err(invalid(preset, "cyclic group order must be positive"));
            }
            let h = cyclic_group_hopf(f, n)?;
            return Ok(finite_preset(format!("group_algebra(z{n})"), h, group_goldens(f, n, n)));
        }
        table => parse_table(preset, table)?,
    };
    let order = labels.len();
    let abelian = abelianization_order(&table);
    let h = group_algebra(f, labels, &table).map_err(|e| invalid(preset, e.to_string()))?;
    Ok(finite_preset(format!("group_algebra({group})"), h, group_goldens(f, order, abelian)))
}

/// `"0 1; 1 0"`-style Cayley tables, rows separated by `;`.
fn parse_table(preset: &str, text: &str) -> Result<(Vec<String>, Vec<Vec<usize>>)> {
    let table: Vec<Vec<usize>> = text
        .split(';')
        .map(|row| row.split_whitespace().map(|c| c.parse::<usize>()).collect::<std::result::Result<_, _>>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| invalid(preset, format!("unknown group {text:?}")))?;
    let labels = (0..table.len()).map(|i| if i == 0 { "1".to_string() } else { format!("e{i}") }).collect();
    Ok((labels, table))
}

fn symmetric_group_3() -> (Vec<String>, Vec<Vec<usize>>) {
    // Permutations of {0,1,2} in one-line notation.
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let labels = ["1", "(01)", "(12)", "(02)", "(012)", "(021)"].map(String::from).to_vec();
    let compose = |a: &[usize; 3], b: &[usize; 3]| -> [usize; 3] { [a[b[0]], a[b[1]], a[b[2]]] };
    let table = perms
        .iter()
        .map(|a| perms.iter().map(|b| perms.iter().position(|p| *p == compose(a, b)).unwrap()).collect())
        .collect();
    (labels, table)
}

fn abelianization_order(table: &[Vec<usize>]) -> usize {
    // |G| / |[G, G]|, with the commutator subgroup generated by closure.
    let n = table.len();
    let inv: Vec<usize> = (0..n).map(|a| (0..n).find(|&b| table[a][b] == 0).unwrap_or(0)).collect();
    let mut sub = vec![false; n];
    sub[0] = true;
    for a in 0..n {
        for b in 0..n {
            sub[table[table[a][b]][table[inv[a]][inv[b]]]] = true;
        }
    }
    loop {
        let members: Vec<usize> = (0..n).filter(|&i| sub[i]).collect();
        let mut grew = false;
        for &a in &members {
            for &b in &members {
                if !sub[table[a][b]] {
                    sub[table[a][b]] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            return n / members.len();
        }
    }
}

/// `kG` from a Cayley table whose row and column 0 is the identity.
pub fn group_algebra(f: &Field, labels: Vec<String>, table: &[Vec<usize>]) -> Result<FiniteHopfAlgebra> {
    let n = table.len();
    let bad = |why: &str| Error::Parse(format!("not a group table: {why}"));
    if n == 0 || labels.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
        return Err(bad("shape"));
    }
    if (0..n).any(|a| table[0][a] != a || table[a][0] != a) {
        return Err(bad("element 0 is not the identity"));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(bad("not associative"));
                }
            }
        }
    }
    let mut inverse = Vec::with_capacity(n);
    for a in 0..n {
        inverse.push((0..n).find(|&b| table[a][b] == 0).ok_or_else(|| bad("missing inverse"))?);
    }
    let entries: Vec<_> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (a, b, table[a][b], f.one())).collect();
    let alg = FiniteAlgebra::new(f, labels, unit_vector(f, n, 0), entries)?;
    let comul: Vec<_> = (0..n).map(|a| (a, a, a, f.one())).collect();
    let mut s = Matrix::zeros(f, n, n);
    for (a, &b) in inverse.iter().enumerate() {
        s.set(b, a, f.one());
    }
    FiniteHopfAlgebra::new(alg, comul, vec![f.one(); n], s)
}

/// `kℤ_n` on `1, g, g^2, …`.
pub fn cyclic_group_hopf(f: &Field, n: usize) -> Result<FiniteHopfAlgebra> {
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    group_algebra(f, labels, &table)
}

/// `k[x,y]/(x² + ξy² − 1, xy)` on `1, x, y, y²` with `x` group-like up to
/// the `y⊗y` correction.
pub fn circle_hopf(f: &Field, xi: &Scalar) -> Result<FiniteHopfAlgebra> {
    let (one, zero) = (f.one(), f.zero());
    let xi_inv = xi.inv()?;
    // Index: 0 = 1, 1 = x, 2 = y, 3 = y².
    let mut mul: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for i in 0..4 {
        mul.push((0, i, i, one.clone()));
        if i > 0 {
            mul.push((i, 0, i, one.clone()));
        }
    }
    mul.push((1, 1, 0, one.clone()));
    mul.push((1, 1, 3, -xi));
    mul.push((2, 2, 3, one.clone()));
    mul.push((2, 3, 2, xi_inv.clone()));
    mul.push((3, 2, 2, xi_inv.clone()));
    mul.push((3, 3, 3, xi_inv));
    let labels = ["1", "x", "y", "y^2"].map(String::from).to_vec();
    let alg = FiniteAlgebra::new(f, labels, unit_vector(f, 4, 0), mul)?;
    let two_xi = xi + xi;
    let comul = vec![
        (0, 0, 0, one.clone()),
        (1, 1, 1, one.clone()),
        (1, 2, 2, -xi),
        (2, 1, 2, one.clone()),
        (2, 2, 1, one.clone()),
        (3, 0, 3, one.clone()),
        (3, 3, 0, one.clone()),
        (3, 3, 3, -&two_xi),
    ];
    let counit = vec![one.clone(), one.clone(), zero.clone(), zero];
    let mut s = Matrix::identity(f, 4);
    s.set(2, 2, -&one);
    FiniteHopfAlgebra::new(alg, comul, counit, s)
}

/// A candidate Hopf map `H₁ → k(ℤ₂×ℤ₂)` over `k ∋ i` sending
/// `z = x + iy ↦ a`, `z⁻¹ ↦ b`, `z² ↦ ab`. It is returned together with
/// its target so callers can test it; since `z` has order 4 in `H₁` it
/// cannot be multiplicative.
pub fn circle_klein_witness(f: &Field) -> Result<(Matrix, FiniteHopfAlgebra)> {
    let i = f.primitive_root_of_unity(4)?;
    let target = named_group("group_algebra", "z2xz2", f)?.finite().cloned().expect("finite");
    let half = f.from_ratio(1, 2)?;
    let neg_i_half = &(-&i) * &half;
    // Target basis 1, a, b, ab.
    let columns = vec![
        vec![f.one(), f.zero(), f.zero(), f.zero()],
        vec![f.zero(), half.clone(), half.clone(), f.zero()],
        vec![f.zero(), neg_i_half.clone(), -&neg_i_half, f.zero()],
        vec![half.clone(), f.zero(), f.zero(), -&half],
    ];
    Ok((Matrix::from_columns(f, 4, &columns)?, target))
}

/// The isomorphism `H₁ ⊗ k → kℤ₄` sending `z = x + iy` to the generator `c`.
pub fn circle_cyclic_witness(f: &Field) -> Result<(Matrix, FiniteHopfAlgebra)> {
    let i = f.primitive_root_of_unity(4)?;
    let target = cyclic_group_hopf(f, 4)?;
    let half = f.from_ratio(1, 2)?;
    let neg_i_half = &(-&i) * &half;
    // x = (c + c³)/2, y = −i(c − c³)/2, y² = (1 − c²)/2.
    let columns = vec![
        vec![f.one(), f.zero(), f.zero(), f.zero()],
        vec![f.zero(), half.clone(), f.zero(), half.clone()],
        vec![f.zero(), neg_i_half.clone(), f.zero(), -&neg_i_half],
        vec![half.clone(), f.zero(), -&half, f.zero()],
    ];
    Ok((Matrix::from_columns(f, 4, &columns)?, target))
}

/// `ℚ(ζ_n)`, or plain `ℚ` when `ζ_n = ±1`.
fn taft_default_field(n: usize) -> Result<Field> {
    if n <= 2 {
        Ok(Field::rational())
    } else {
        Field::cyclotomic(n as u64)
    }
}

fn taft_root(preset: &str, f: &Field, n: usize, xi: Option<&str>) -> Result<Scalar> {
    if n < 2 {
        return Err(invalid(preset, "n must be at least 2"));
    }
    let xi = match xi {
        Some(s) => f.parse_scalar(s)?,
        None => f.primitive_root_of_unity(n as u64).map_err(|e| invalid(preset, e.to_string()))?,
    };
    if xi.multiplicative_order(n as u64) != Some(n as u64) {
        return Err(invalid(preset, format!("xi = {xi} is not a primitive {n}-th root of unity in {f}")));
    }
    Ok(xi)
}

fn taft_finite_preset(preset: &str, f: &Field, n: usize, m: usize, t: usize, xi: Option<&str>) -> Result<Preset> {
    let xi = taft_root(preset, f, n, xi)?;
    let mt = xi.pow((m * t) as u64);
    if mt.multiplicative_order(n as u64) != Some(n as u64) {
        return Err(invalid(preset, format!("xi^(mt) = {mt} must have order exactly {n} for (x^{n}) to be a Hopf ideal")));
    }
    let family = taft_family(f, n, m, t, &xi)?;
    let h = family.truncated_hopf(n)?;
    let report = h.verify_axioms();
    if !report.all_passed() {
        return Err(Error::ConsistencyFailure(format!("{preset}: truncated Taft algebra fails {:?}", report.failures().next())));
    }
    let io = xi.pow(m as u64).multiplicative_order(n as u64).expect("root of unity");
    let goldens = vec![
        golden("dim", n * n, Provenance::Published),
        golden("io", io, Provenance::Published),
        golden("unimodular", io == 1, Provenance::Published),
        golden("semisimple", false, Provenance::Elementary),
        golden("radical_dim", n * n - n, Provenance::BruteForce),
        golden("iq_dim", io, Provenance::BruteForce),
        golden("ab_dim", n, Provenance::BruteForce),
        golden("antipode_order", 2 * n, Provenance::Published),
    ];
    Ok(finite_preset(format!("taft_finite(n={n},m={m},t={t},xi={xi})"), h, goldens))
}

fn word(f: &Field, w: &[(usize, i64)]) -> Expr {
    Expr::word(f, w)
}

fn gen_images(f: &Field, n: usize) -> Vec<Expr> {
    (0..n).map(|g| Expr::generator(f, g)).collect()
}

/// Identity twist on an algebra whose invertible generators are `inv`.
fn identity_twist(f: &Field, inv: &[bool]) -> GenMap<Expr> {
    let inverse = inv.iter().enumerate().map(|(g, &i)| i.then(|| word(f, &[(g, -1)]))).collect();
    GenMap::new(gen_images(f, inv.len()), inverse)
}

/// `Δ(w) = w⊗1 + 1⊗w`.
fn primitive_witness(f: &Field) -> Vec<WitnessTerm> {
    vec![
        WitnessTerm::Left { coeff: f.one(), left: Expr::one(f), right: Expr::one(f) },
        WitnessTerm::Right { coeff: f.one(), left: Expr::one(f), right: Expr::one(f) },
    ]
}

/// `Δ(h − 1) = (h − 1)⊗h + 1⊗(h − 1)` for group-like `h`.
fn grouplike_witness(f: &Field, h: usize) -> Vec<WitnessTerm> {
    vec![
        WitnessTerm::Left { coeff: f.one(), left: Expr::one(f), right: Expr::generator(f, h) },
        WitnessTerm::Right { coeff: f.one(), left: Expr::one(f), right: Expr::one(f) },
    ]
}

/// Group-like Hopf data on an [`InversionGroup`] or Laurent algebra.
fn grouplike_hopf(f: &Field, inv: &[bool], involutive: &[bool]) -> HopfData {
    let n = inv.len();
    let comul = GenMap::new(
        (0..n).map(|g| TensorExpr::grouplike(f, g, 1)).collect(),
        (0..n).map(|g| inv[g].then(|| TensorExpr::grouplike(f, g, -1))).collect(),
    );
    let antipode = GenMap::new(
        (0..n).map(|g| if involutive[g] { Expr::generator(f, g) } else { word(f, &[(g, -1)]) }).collect(),
        (0..n).map(|g| inv[g].then(|| Expr::generator(f, g))).collect(),
    );
    HopfData { comul, counit: vec![f.one(); n], antipode }
}

/// `k⟨g, x⟩/(gⁿ − 1, xg − ξᵐgx)` with `g` group-like and
/// `Δ(x) = x⊗1 + gᵗ⊗x`, reduced by the normal element `x` onto `kℤ_n`.
pub fn taft_family(f: &Field, n: usize, m: usize, t: usize, xi: &Scalar) -> Result<PresentedHopfFamily> {
    let q = xi.pow(m as u64);
    let (g, x) = (TaftAlgebra::G, TaftAlgebra::X);
    let nn = n as i64;
    let tt = (t % n) as i64;
    let algebra: Arc<dyn MonomialAlgebra> = Arc::new(TaftAlgebra::new(f, n, q.clone()));
    let hopf = HopfData {
        comul: GenMap::plain(vec![
            TensorExpr::grouplike(f, g, 1),
            TensorExpr::simple(f, &[(x, 1)], &[]).plus(TensorExpr::simple(f, &[(g, tt)], &[(x, 1)])),
        ]),
        counit: vec![f.one(), f.zero()],
        antipode: GenMap::plain(vec![word(f, &[(g, nn - 1)]), word(f, &[(g, (nn - tt) % nn), (x, 1)]).scaled(&-f.one())]),
    };
    let step = ReductionStep {
        algebra,
        hopf,
        normal_element: Expr::generator(f, x),
        twist: GenMap::plain(vec![Expr::generator(f, g).scaled(&q), Expr::generator(f, x)]),
        twist_inverse: GenMap::plain(vec![Expr::generator(f, g).scaled(&q.inv()?), Expr::generator(f, x)]),
        witness: vec![
            WitnessTerm::Left { coeff: f.one(), left: Expr::one(f), right: Expr::one(f) },
            WitnessTerm::Right { coeff: f.one(), left: word(f, &[(g, tt)]), right: Expr::one(f) },
        ],
        quotient: StageMap::Terminal(GenMap::plain(vec![unit_vector(f, n, 1 % n), zero_vector(f, n)])),
    };
    Ok(PresentedHopfFamily {
        name: format!("taft_family(n={n},m={m},t={t})"),
        steps: vec![step],
        terminal: cyclic_group_hopf(f, n)?,
    })
}

/// `U(L)` for `[x, y] = x`, reduced by `x` onto `k[y]` and then by `y` onto `k`.
pub fn solvable_enveloping(f: &Field) -> Result<PresentedHopfFamily> {
    let (x, y) = (SolvableEnveloping::X, SolvableEnveloping::Y);
    let primitive_hopf = |n: usize| HopfData {
        comul: GenMap::plain((0..n).map(|g| TensorExpr::primitive(f, g)).collect()),
        counit: vec![f.zero(); n],
        antipode: GenMap::plain((0..n).map(|g| Expr::generator(f, g).scaled(&-f.one())).collect()),
    };
    let top = ReductionStep {
        algebra: Arc::new(SolvableEnveloping::new(f)),
        hopf: primitive_hopf(2),
        normal_element: Expr::generator(f, x),
        // x·y = (y + 1)·x
        twist: GenMap::plain(vec![Expr::generator(f, x), Expr::generator(f, y).plus(Expr::one(f))]),
        twist_inverse: GenMap::plain(vec![Expr::generator(f, x), Expr::generator(f, y).minus(Expr::one(f))]),
        witness: primitive_witness(f),
        quotient: StageMap::Next(GenMap::plain(vec![Expr::zero(), Expr::generator(f, 0)])),
    };
    let polynomial = ReductionStep {
        algebra: Arc::new(CommutativeLaurent::new(f, &["y"], &[false])),
        hopf: primitive_hopf(1),
        normal_element: Expr::generator(f, 0),
        twist: identity_twist(f, &[false]),
        twist_inverse: identity_twist(f, &[false]),
        witness: primitive_witness(f),
        quotient: StageMap::Terminal(GenMap::plain(vec![zero_vector(f, 1)])),
    };
    Ok(PresentedHopfFamily {
        name: "solvable_enveloping".into(),
        steps: vec![top, polynomial],
        terminal: cyclic_group_hopf(f, 1)?,
    })
}

/// `k[x, x⁻¹] = kℤ`, reduced by `x − 1` onto `k`.
pub fn laurent(f: &Field) -> Result<PresentedHopfFamily> {
    let step = ReductionStep {
        algebra: Arc::new(CommutativeLaurent::new(f, &["x"], &[true])),
        hopf: grouplike_hopf(f, &[true], &[false]),
        normal_element: Expr::generator(f, 0).minus(Expr::one(f)),
        twist: identity_twist(f, &[true]),
        twist_inverse: identity_twist(f, &[true]),
        witness: grouplike_witness(f, 0),
        quotient: StageMap::Terminal(GenMap::new(vec![vec![f.one()]], vec![Some(vec![f.one()])])),
    };
    Ok(PresentedHopfFamily { name: "laurent".into(), steps: vec![step], terminal: cyclic_group_hopf(f, 1)? })
}

/// Reduction step of `k(ℤʳ ⋊ ℤ₂)` by `h − 1` for the last free generator
/// `h`: `(h − 1)·g = (−g h⁻¹)·(h − 1)`.
fn inversion_step(f: &Field, free: &[&str], quotient: StageMap) -> ReductionStep {
    let g = InversionGroup::G;
    let n = free.len() + 1;
    let h = n - 1;
    let inv: Vec<bool> = (0..n).map(|i| i != g).collect();
    let mut twist = identity_twist(f, &inv);
    let mut twist_inverse = identity_twist(f, &inv);
    twist.images[g] = word(f, &[(g, 1), (h, -1)]).scaled(&-f.one());
    twist_inverse.images[g] = word(f, &[(g, 1), (h, 1)]).scaled(&-f.one());
    let mut involutive = vec![false; n];
    involutive[g] = true;
    ReductionStep {
        algebra: Arc::new(InversionGroup::new(f, free)),
        hopf: grouplike_hopf(f, &inv, &involutive),
        normal_element: Expr::generator(f, h).minus(Expr::one(f)),
        twist,
        twist_inverse,
        witness: grouplike_witness(f, h),
        quotient,
    }
}

/// `k⟨g, x | g² = 1, gxg = x⁻¹⟩`, reduced by `x − 1` onto `kℤ₂`.
pub fn infinite_dihedral(f: &Field) -> Result<PresentedHopfFamily> {
    Ok(PresentedHopfFamily {
        name: "infinite_dihedral".into(),
        steps: vec![dihedral_step(f)],
        terminal: cyclic_group_hopf(f, 2)?,
    })
}

fn dihedral_step(f: &Field) -> ReductionStep {
    let to_z2 = GenMap::new(
        vec![unit_vector(f, 2, 1), unit_vector(f, 2, 0)],
        vec![None, Some(unit_vector(f, 2, 0))],
    );
    inversion_step(f, &["x"], StageMap::Terminal(to_z2))
}

/// `⟨g, x, y | g² = 1, gxg = x⁻¹, gyg = y⁻¹, xy = yx⟩`, reduced by `y − 1`
/// onto the infinite dihedral group and then by `x − 1`.
pub fn example85(f: &Field) -> Result<PresentedHopfFamily> {
    let onto_dihedral = GenMap::new(
        vec![Expr::generator(f, 0), Expr::generator(f, 1), Expr::one(f)],
        vec![None, Some(word(f, &[(1, -1)])), Some(Expr::one(f))],
    );
    Ok(PresentedHopfFamily {
        name: "example85".into(),
        steps: vec![inversion_step(f, &["x", "y"], StageMap::Next(onto_dihedral)), dihedral_step(f)],
        terminal: cyclic_group_hopf(f, 2)?,
    })
}

/// Vector of small integers in `f`.
pub fn int_vector(f: &Field, xs: &[i64]) -> Vector {
    xs.iter().map(|&x| f.from_i64(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::hopf_morphism_failure;

    #[test]
    fn request_grammar() {
        let r = parse_request("preset:taft_family(n=3,m=1,t=1)").unwrap();
        assert_eq!(r.name, "taft_family");
        assert!(r.positional.is_empty());
        assert_eq!(r.named["n"], "3");
        let r = parse_request("taft_family(3, 1, t=1)").unwrap();
        assert_eq!(r.positional, vec!["3", "1"]);
        assert_eq!(r.named.len(), 1);
        assert_eq!(parse_request("sweedler").unwrap().name, "sweedler");
        assert!(parse_request("taft_family(3").is_err());
        assert!(parse_request("taft_family(n=3, 1)").is_err());
        assert!(looks_like_preset("taft_family(3,1,1)"));
        assert!(looks_like_preset("preset:whatever"));
        assert!(!looks_like_preset("examples/sweedler.json"));
    }

    #[test]
    fn bad_parameters_are_rejected() {
        for bad in ["taft_family(n=3,k=1)", "taft_family(3,1,1,z,fp:7,9)", "taft_family(n=3,n=3)", "taft_family(3,n=3)"] {
            assert!(build_preset(bad, None).is_err(), "{bad}");
        }
        // ξ = 1 has order 1, not 2.
        assert!(matches!(build_preset("taft_finite(n=2,xi=1)", None), Err(Error::InvalidParams { .. })));
        // ξ^{mt} = ξ² has order 2, not 4: (x⁴) is not a Hopf ideal.
        assert!(matches!(build_preset("taft_finite(n=4,m=1,t=2)", None), Err(Error::InvalidParams { .. })));
        assert!(matches!(build_preset("nope", None), Err(Error::Parse(_))));
        assert!(matches!(build_preset("group_algebra(0 1; 0 1)", None), Err(Error::InvalidParams { .. })));
    }

    #[test]
    fn finite_presets_are_hopf() {
        for name in [
            "trivial",
            "group_algebra(z3)",
            "group_algebra(s3)",
            "group_algebra(0 1; 1 0)",
            "klein_four",
            "sweedler",
            "taft_finite(3)",
            "taft_finite(n=4,m=1,t=1)",
            "taft_finite(n=4,m=3,t=1)",
            "circle_hopf",
            "circle_xi(xi=2)",
        ] {
            let p = build_preset(name, None).unwrap();
            let h = p.finite().unwrap();
            let report = h.verify_axioms();
            assert!(report.all_passed(), "{name}: {:?}", report.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn sweedler_matches_the_truncated_family() {
        let q = Field::rational();
        let p = build_preset("sweedler", None).unwrap();
        let h = p.finite().unwrap();
        assert_eq!(h.labels(), ["1", "g", "x", "gx"].map(String::from));
        assert!(h.same_structure(&crate::hopf::fixtures::sweedler(&q)));
    }

    #[test]
    fn family_presets_verify() {
        for name in [
            "taft_family(2,1,1)",
            "taft_family(3,1,1)",
            "taft_family(n=5,m=2,t=3)",
            "solvable_enveloping",
            "solvable_enveloping(field=fp:5)",
            "laurent",
            "infinite_dihedral",
            "example85",
        ] {
            let p = build_preset(name, None).unwrap();
            let report = p.family().unwrap().verify_chain();
            assert!(report.all_passed(), "{name}: {:?}", report.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn circle_witnesses() {
        let f = Field::cyclotomic(4).unwrap();
        let h = circle_hopf(&f, &f.one()).unwrap();
        let (klein, v4) = circle_klein_witness(&f).unwrap();
        assert!(hopf_morphism_failure(&klein, &h, &v4).is_some(), "z has order 4");
        let (cyc, z4) = circle_cyclic_witness(&f).unwrap();
        assert_eq!(hopf_morphism_failure(&cyc, &h, &z4), None);
        assert!(cyc.inverse().is_ok());
    }

    #[test]
    fn group_table_checks() {
        let q = Field::rational();
        let (labels, table) = symmetric_group_3();
        assert_eq!(abelianization_order(&table), 2);
        let h = group_algebra(&q, labels, &table).unwrap();
        assert!(!h.algebra().is_commutative());
        assert!(group_algebra(&q, vec!["1".into(), "a".into()], &[vec![0, 1], vec![1, 1]]).is_err());
    }
}
