//! Presented algebras with hand-written normal forms, plus formal
//! expressions in their generators.
//!
//! An element is a [`Poly`]: a map from normal-form monomials (exponent
//! vectors) to coefficients. Expressions ([`Expr`]) are linear combinations
//! of words in the generators and their formal inverses; evaluating one
//! needs a [`Ring`] and a value for every generator.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Vector};
use crate::scalar::{Field, Scalar};

pub type Monomial = Vec<i64>;
pub type Poly = BTreeMap<Monomial, Scalar>;
/// Element of `A ⊗ A`.
pub type Poly2 = BTreeMap<(Monomial, Monomial), Scalar>;
/// A word `g_{i1}^{e1} g_{i2}^{e2} ⋯`; negative exponents use formal inverses.
pub type Word = Vec<(usize, i64)>;

fn add_term<K: Ord>(p: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match p.entry(key) {
        Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                e.insert(sum);
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// A linear combination of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<(Scalar, Word)>,
}

impl Expr {
    pub fn zero() -> Expr {
        Expr { terms: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Expr {
        Expr { terms: vec![(c, Vec::new())] }
    }

    pub fn one(field: &Field) -> Expr {
        Expr::constant(field.one())
    }

    pub fn word(field: &Field, word: &[(usize, i64)]) -> Expr {
        Expr { terms: vec![(field.one(), word.to_vec())] }
    }

    pub fn generator(field: &Field, g: usize) -> Expr {
        Expr::word(field, &[(g, 1)])
    }

    pub fn plus(mut self, other: Expr) -> Expr {
        self.terms.extend(other.terms);
        self
    }

    pub fn minus(mut self, other: Expr) -> Expr {
        self.terms.extend(other.terms.into_iter().map(|(c, w)| (-c, w)));
        self
    }

    pub fn scaled(self, c: &Scalar) -> Expr {
        Expr { terms: self.terms.into_iter().map(|(d, w)| (c * &d, w)).collect() }
    }

    pub fn times(&self, other: &Expr) -> Expr {
        let mut terms = Vec::new();
        for (c, u) in &self.terms {
            for (d, v) in &other.terms {
                let mut w = u.clone();
                w.extend(v.iter().copied());
                terms.push((c * d, w));
            }
        }
        Expr { terms }
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (c, w) in &self.terms {
            let word = render_word(w, names);
            let coef = c.to_string();
            let term = match (coef.as_str(), word.is_empty()) {
                (_, true) => coef.clone(),
                ("1", false) => word,
                ("-1", false) => format!("-{word}"),
                (_, false) if coef.contains('z') => format!("({coef})*{word}"),
                (_, false) => format!("{coef}*{word}"),
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        out
    }
}

pub fn render_word(w: &[(usize, i64)], names: &[String]) -> String {
    w.iter()
        .filter(|(_, e)| *e != 0)
        .map(|&(g, e)| if e == 1 { names[g].clone() } else { format!("{}^{e}", names[g]) })
        .collect()
}

/// A linear combination of pure tensors of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorExpr {
    pub terms: Vec<(Scalar, Word, Word)>,
}

impl TensorExpr {
    pub fn simple(field: &Field, left: &[(usize, i64)], right: &[(usize, i64)]) -> TensorExpr {
        TensorExpr { terms: vec![(field.one(), left.to_vec(), right.to_vec())] }
    }

    pub fn plus(mut self, other: TensorExpr) -> TensorExpr {
        self.terms.extend(other.terms);
        self
    }

    /// `g ⊗ g`.
    pub fn grouplike(field: &Field, g: usize, e: i64) -> TensorExpr {
        TensorExpr::simple(field, &[(g, e)], &[(g, e)])
    }

    /// `g ⊗ 1 + 1 ⊗ g`.
    pub fn primitive(field: &Field, g: usize) -> TensorExpr {
        TensorExpr::simple(field, &[(g, 1)], &[]).plus(TensorExpr::simple(field, &[], &[(g, 1)]))
    }
}

/// Just enough ring structure to evaluate expressions.
pub trait Ring {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Scalar, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

/// Evaluates `expr`, with `gen(g, inverse)` giving the value of `g` or `g⁻¹`.
pub fn evaluate<R: Ring>(
    ring: &R,
    expr: &Expr,
    gen: &dyn Fn(usize, bool) -> Result<R::Elem>,
) -> Result<R::Elem> {
    let mut total = ring.zero();
    for (c, word) in &expr.terms {
        let mut acc = ring.one();
        for &(g, e) in word {
            if e == 0 {
                continue;
            }
            let base = gen(g, e < 0)?;
            for _ in 0..e.unsigned_abs() {
                acc = ring.mul(&acc, &base);
            }
        }
        total = ring.add(&total, &ring.scale(c, &acc));
    }
    Ok(total)
}

pub struct ScalarRing(pub Field);

impl Ring for ScalarRing {
    type Elem = Scalar;
    fn zero(&self) -> Scalar {
        self.0.zero()
    }
    fn one(&self) -> Scalar {
        self.0.one()
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a + b
    }
    fn scale(&self, c: &Scalar, a: &Scalar) -> Scalar {
        c * a
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
}

pub struct VectorRing<'a>(pub &'a FiniteAlgebra);

impl Ring for VectorRing<'_> {
    type Elem = Vector;
    fn zero(&self) -> Vector {
        zero_vector(self.0.field(), self.0.dim())
    }
    fn one(&self) -> Vector {
        self.0.unit().clone()
    }
    fn add(&self, a: &Vector, b: &Vector) -> Vector {
        crate::linalg::add_vectors(a, b)
    }
    fn scale(&self, c: &Scalar, a: &Vector) -> Vector {
        crate::linalg::scale_vector(c, a)
    }
    fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        self.0.mul(a, b)
    }
}

pub struct PolyRing<'a>(pub &'a dyn MonomialAlgebra);

impl Ring for PolyRing<'_> {
    type Elem = Poly;
    fn zero(&self) -> Poly {
        Poly::new()
    }
    fn one(&self) -> Poly {
        let mut p = Poly::new();
        p.insert(self.0.one_monomial(), self.0.field().one());
        p
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = a.clone();
        for (m, c) in b {
            add_term(&mut out, m.clone(), c.clone());
        }
        out
    }
    fn scale(&self, c: &Scalar, a: &Poly) -> Poly {
        a.iter().map(|(m, x)| (m.clone(), c * x)).filter(|(_, x)| !x.is_zero()).collect()
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        poly_mul(self.0, a, b)
    }
}

pub struct TensorRing<'a>(pub &'a dyn MonomialAlgebra);

impl Ring for TensorRing<'_> {
    type Elem = Poly2;
    fn zero(&self) -> Poly2 {
        Poly2::new()
    }
    fn one(&self) -> Poly2 {
        let one = self.0.one_monomial();
        let mut p = Poly2::new();
        p.insert((one.clone(), one), self.0.field().one());
        p
    }
    fn add(&self, a: &Poly2, b: &Poly2) -> Poly2 {
        let mut out = a.clone();
        for (m, c) in b {
            add_term(&mut out, m.clone(), c.clone());
        }
        out
    }
    fn scale(&self, c: &Scalar, a: &Poly2) -> Poly2 {
        a.iter().map(|(m, x)| (m.clone(), c * x)).filter(|(_, x)| !x.is_zero()).collect()
    }
    fn mul(&self, a: &Poly2, b: &Poly2) -> Poly2 {
        let alg = self.0;
        let mut out = Poly2::new();
        for ((a1, a2), c) in a {
            for ((b1, b2), d) in b {
                let left = alg.mul_monomials(a1, b1);
                let right = alg.mul_monomials(a2, b2);
                let cd = c * d;
                for (m1, x) in &left {
                    let s = &cd * x;
                    for (m2, y) in &right {
                        add_term(&mut out, (m1.clone(), m2.clone()), &s * y);
                    }
                }
            }
        }
        out
    }
}

pub fn tensor_of(a: &Poly, b: &Poly) -> Poly2 {
    let mut out = Poly2::new();
    for (m1, x) in a {
        for (m2, y) in b {
            add_term(&mut out, (m1.clone(), m2.clone()), x * y);
        }
    }
    out
}

/// An algebra with a basis of normal-form monomials and a multiplication
/// oracle for them.
pub trait MonomialAlgebra: Send + Sync + Debug {
    fn field(&self) -> &Field;
    fn generator_names(&self) -> Vec<String>;
    /// Whether `g⁻¹` may appear in words.
    fn is_invertible(&self, g: usize) -> bool;
    fn one_monomial(&self) -> Monomial;
    /// Normal form of `g` (or `g⁻¹`).
    fn generator(&self, g: usize, inverse: bool) -> Result<Poly>;
    fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Poly;
    /// Expressions that must vanish: the defining relations.
    fn relators(&self) -> Vec<Expr>;
    /// A word whose product is exactly the monomial `m`.
    fn monomial_word(&self, m: &Monomial) -> Word;
    /// A finite set of basis monomials, growing with `degree`.
    fn monomials_up_to(&self, degree: u32) -> Vec<Monomial>;
    /// Basis of the truncation at level `s` and the monomials generating
    /// the killed ideal, when the algebra declares one.
    fn truncation(&self, _s: usize) -> Option<(Vec<Monomial>, Vec<Monomial>)> {
        None
    }

    fn monomial_label(&self, m: &Monomial) -> String {
        let w = self.monomial_word(m);
        let s = render_word(&w, &self.generator_names());
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }
}

pub fn poly_mul(alg: &dyn MonomialAlgebra, a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (m1, x) in a {
        for (m2, y) in b {
            let xy = x * y;
            for (m, c) in alg.mul_monomials(m1, m2) {
                add_term(&mut out, m, &xy * &c);
            }
        }
    }
    out
}

pub fn monomial_poly(field: &Field, m: Monomial) -> Poly {
    let mut p = Poly::new();
    p.insert(m, field.one());
    p
}

/// Normal form of an expression.
pub fn normal_form(alg: &dyn MonomialAlgebra, expr: &Expr) -> Result<Poly> {
    evaluate(&PolyRing(alg), expr, &|g, inv| alg.generator(g, inv))
}

fn not_invertible(alg: &dyn MonomialAlgebra, g: usize) -> Error {
    Error::Parse(format!("generator {} has no declared inverse", alg.generator_names()[g]))
}

/// `k⟨g, x⟩ / (gⁿ − 1, xg − q·gx)` on monomials `gⁱxʲ`, `i < n`.
#[derive(Debug)]
pub struct TaftAlgebra {
    field: Field,
    n: i64,
    q: Scalar,
}

impl TaftAlgebra {
    pub fn new(field: &Field, n: usize, q: Scalar) -> TaftAlgebra {
        TaftAlgebra { field: field.clone(), n: n as i64, q }
    }

    pub const G: usize = 0;
    pub const X: usize = 1;
}

impl MonomialAlgebra for TaftAlgebra {
    fn field(&self) -> &Field {
        &self.field
    }
    fn generator_names(&self) -> Vec<String> {
        vec!["g".into(), "x".into()]
    }
    fn is_invertible(&self, _g: usize) -> bool {
        false
    }
    fn one_monomial(&self) -> Monomial {
        vec![0, 0]
    }
    fn generator(&self, g: usize, inverse: bool) -> Result<Poly> {
        if inverse {
            return Err(not_invertible(self, g));
        }
        let m = if g == Self::G { vec![1 % self.n, 0] } else { vec![0, 1] };
        Ok(monomial_poly(&self.field, m))
    }
    fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Poly {
        // x^b g^c = q^{bc} g^c x^b
        let coeff = self.q.pow((a[1] * b[0]) as u64);
        let mut p = Poly::new();
        p.insert(vec![(a[0] + b[0]) % self.n, a[1] + b[1]], coeff);
        p
    }
    fn relators(&self) -> Vec<Expr> {
        let f = &self.field;
        let (g, x) = (Self::G, Self::X);
        vec![
            Expr::word(f, &[(g, self.n)]).minus(Expr::one(f)),
            Expr::word(f, &[(x, 1), (g, 1)]).minus(Expr::word(f, &[(g, 1), (x, 1)]).scaled(&self.q)),
        ]
    }
    fn monomial_word(&self, m: &Monomial) -> Word {
        [(Self::G, m[0]), (Self::X, m[1])].into_iter().filter(|(_, e)| *e != 0).collect()
    }
    fn monomials_up_to(&self, degree: u32) -> Vec<Monomial> {
        (0..=degree as i64).flat_map(|j| (0..self.n).map(move |i| vec![i, j])).collect()
    }
    /// `H/(x^s)` on `gⁱxʲ`, `j < s`, ordered by `(j, i)`.
    fn truncation(&self, s: usize) -> Option<(Vec<Monomial>, Vec<Monomial>)> {
        let basis = (0..s as i64).flat_map(|j| (0..self.n).map(move |i| vec![i, j])).collect();
        Some((basis, vec![vec![0, s as i64]]))
    }
}

/// `k⟨x, y⟩ / (xy − yx − x)` on monomials `yᵃxᵇ`, stored as `[b, a]`.
#[derive(Debug)]
pub struct SolvableEnveloping {
    field: Field,
}

impl SolvableEnveloping {
    pub fn new(field: &Field) -> Self {
        SolvableEnveloping { field: field.clone() }
    }

    pub const X: usize = 0;
    pub const Y: usize = 1;
}

fn binomial(n: i64, k: i64) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

impl MonomialAlgebra for SolvableEnveloping {
    fn field(&self) -> &Field {
        &self.field
    }
    fn generator_names(&self) -> Vec<String> {
        vec!["x".into(), "y".into()]
    }
    fn is_invertible(&self, _g: usize) -> bool {
        false
    }
    fn one_monomial(&self) -> Monomial {
        vec![0, 0]
    }
    fn generator(&self, g: usize, inverse: bool) -> Result<Poly> {
        if inverse {
            return Err(not_invertible(self, g));
        }
        let m = if g == Self::X { vec![1, 0] } else { vec![0, 1] };
        Ok(monomial_poly(&self.field, m))
    }
    /// `yᵃxᵇ · yᶜxᵈ = yᵃ (y + b)ᶜ xᵇ⁺ᵈ`.
    fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Poly {
        let (xb, ya) = (a[0], a[1]);
        let (xd, yc) = (b[0], b[1]);
        let mut p = Poly::new();
        for k in 0..=yc {
            let shift = BigInt::from(xb).pow((yc - k) as u32);
            let c = self.field.from_bigint(&(binomial(yc, k) * shift));
            add_term(&mut p, vec![xb + xd, ya + k], c);
        }
        p
    }
    fn relators(&self) -> Vec<Expr> {
        let f = &self.field;
        let (x, y) = (Self::X, Self::Y);
        vec![Expr::word(f, &[(x, 1), (y, 1)])
            .minus(Expr::word(f, &[(y, 1), (x, 1)]))
            .minus(Expr::generator(f, x))]
    }
    fn monomial_word(&self, m: &Monomial) -> Word {
        [(Self::Y, m[1]), (Self::X, m[0])].into_iter().filter(|(_, e)| *e != 0).collect()
    }
    fn monomials_up_to(&self, degree: u32) -> Vec<Monomial> {
        let d = degree as i64;
        (0..=d).flat_map(|b| (0..=d - b).map(move |a| vec![b, a])).collect()
    }
}

/// Commutative polynomial/Laurent algebra; invertible generators may take
/// negative exponents.
#[derive(Debug)]
pub struct CommutativeLaurent {
    field: Field,
    names: Vec<String>,
    invertible: Vec<bool>,
}

impl CommutativeLaurent {
    pub fn new(field: &Field, names: &[&str], invertible: &[bool]) -> Self {
        CommutativeLaurent {
            field: field.clone(),
            names: names.iter().map(|s| s.to_string()).collect(),
            invertible: invertible.to_vec(),
        }
    }
}

impl MonomialAlgebra for CommutativeLaurent {
    fn field(&self) -> &Field {
        &self.field
    }
    fn generator_names(&self) -> Vec<String> {
        self.names.clone()
    }
    fn is_invertible(&self, g: usize) -> bool {
        self.invertible[g]
    }
    fn one_monomial(&self) -> Monomial {
        vec![0; self.names.len()]
    }
    fn generator(&self, g: usize, inverse: bool) -> Result<Poly> {
        if inverse && !self.invertible[g] {
            return Err(not_invertible(self, g));
        }
        let mut m = self.one_monomial();
        m[g] = if inverse { -1 } else { 1 };
        Ok(monomial_poly(&self.field, m))
    }
    fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Poly {
        monomial_poly(&self.field, a.iter().zip(b).map(|(x, y)| x + y).collect())
    }
    fn relators(&self) -> Vec<Expr> {
        let f = &self.field;
        let n = self.names.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                out.push(Expr::word(f, &[(i, 1), (j, 1)]).minus(Expr::word(f, &[(j, 1), (i, 1)])));
            }
            if self.invertible[i] {
                out.push(Expr::word(f, &[(i, 1), (i, -1)]).minus(Expr::one(f)));
            }
        }
        out
    }
    fn monomial_word(&self, m: &Monomial) -> Word {
        m.iter().enumerate().filter(|(_, e)| **e != 0).map(|(g, e)| (g, *e)).collect()
    }
    fn monomials_up_to(&self, degree: u32) -> Vec<Monomial> {
        let mut out = vec![self.one_monomial()];
        for g in 0..self.names.len() {
            let lo = if self.invertible[g] { -(degree as i64) } else { 0 };
            out = out
                .into_iter()
                .flat_map(|m| {
                    (lo..=degree as i64).map(move |e| {
                        let mut m = m.clone();
                        m[g] = e;
                        m
                    })
                })
                .filter(|m| m.iter().map(|e| e.unsigned_abs()).sum::<u64>() <= degree as u64)
                .collect();
        }
        out
    }
}

/// Group algebra of `ℤʳ ⋊ ℤ₂`, with `g` (of order 2) inverting every free
/// generator. Monomials `gᵃ x₁^{b₁} ⋯ x_r^{b_r}` stored as `[a, b₁, …]`.
#[derive(Debug)]
pub struct InversionGroup {
    field: Field,
    names: Vec<String>,
}

impl InversionGroup {
    pub fn new(field: &Field, free: &[&str]) -> Self {
        let mut names = vec!["g".to_string()];
        names.extend(free.iter().map(|s| s.to_string()));
        InversionGroup { field: field.clone(), names }
    }

    pub const G: usize = 0;
}

impl MonomialAlgebra for InversionGroup {
    fn field(&self) -> &Field {
        &self.field
    }
    fn generator_names(&self) -> Vec<String> {
        self.names.clone()
    }
    fn is_invertible(&self, g: usize) -> bool {
        g != Self::G
    }
    fn one_monomial(&self) -> Monomial {
        vec![0; self.names.len()]
    }
    fn generator(&self, g: usize, inverse: bool) -> Result<Poly> {
        if inverse && g == Self::G {
            return Err(not_invertible(self, g));
        }
        let mut m = self.one_monomial();
        m[g] = if inverse { -1 } else { 1 };
        Ok(monomial_poly(&self.field, m))
    }
    /// `(gᵃ·b)(gᶜ·d) = g^{a+c} · ((−1)ᶜ b + d)`.
    fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Poly {
        let sign = if b[0] % 2 == 0 { 1 } else { -1 };
        let mut m = vec![(a[0] + b[0]) % 2];
        m.extend(a[1..].iter().zip(&b[1..]).map(|(x, y)| sign * x + y));
        monomial_poly(&self.field, m)
    }
    fn relators(&self) -> Vec<Expr> {
        let f = &self.field;
        let g = Self::G;
        let r = self.names.len();
        let mut out = vec![Expr::word(f, &[(g, 2)]).minus(Expr::one(f))];
        for i in 1..r {
            out.push(Expr::word(f, &[(g, 1), (i, 1), (g, 1)]).minus(Expr::word(f, &[(i, -1)])));
            out.push(Expr::word(f, &[(i, 1), (i, -1)]).minus(Expr::one(f)));
            for j in i + 1..r {
                out.push(Expr::word(f, &[(i, 1), (j, 1)]).minus(Expr::word(f, &[(j, 1), (i, 1)])));
            }
        }
        out
    }
    fn monomial_word(&self, m: &Monomial) -> Word {
        m.iter().enumerate().filter(|(_, e)| **e != 0).map(|(g, e)| (g, *e)).collect()
    }
    fn monomials_up_to(&self, degree: u32) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = vec![vec![0], vec![1]];
        for _ in 1..self.names.len() {
            out = out
                .into_iter()
                .flat_map(|m| {
                    (-(degree as i64)..=degree as i64).map(move |e| {
                        let mut m = m.clone();
                        m.push(e);
                        m
                    })
                })
                .filter(|m| m[1..].iter().map(|e| e.unsigned_abs()).sum::<u64>() <= degree as u64)
                .collect();
        }
        out
    }
}
