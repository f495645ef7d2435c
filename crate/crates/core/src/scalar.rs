//! Exact base fields: the rationals, prime fields, and cyclotomic extensions
//! of either.
//!
//! A [`Field`] is a cheap, shareable handle; every [`Scalar`] carries its
//! field so mixed-field arithmetic is detected instead of silently producing
//! garbage. Cyclotomic elements are polynomials in the fixed root `z`,
//! reduced modulo the field's modulus polynomial.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default cap for multiplicative and convolution orders.
pub const DEFAULT_ORDER_CAP: u64 = 10_000;

/// Largest number of candidate polynomials tried when searching for the
/// modulus of a cyclotomic extension of a prime field.
const MODULUS_SEARCH_LIMIT: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    Rational,
    Prime(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
    /// Adjoin a primitive `order`-th root of unity to `base`.
    Cyclotomic { base: BaseField, order: u64 },
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational
            | FieldSpec::Cyclotomic {
                base: BaseField::Rational,
                ..
            } => 0,
            FieldSpec::Prime(p)
            | FieldSpec::Cyclotomic {
                base: BaseField::Prime(p),
                ..
            } => *p,
        }
    }

    pub fn base(&self) -> BaseField {
        match self {
            FieldSpec::Rational => BaseField::Rational,
            FieldSpec::Prime(p) => BaseField::Prime(*p),
            FieldSpec::Cyclotomic { base, .. } => *base,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
            FieldSpec::Cyclotomic {
                base: BaseField::Rational,
                order,
            } => write!(f, "Q(z{order})"),
            FieldSpec::Cyclotomic {
                base: BaseField::Prime(p),
                order,
            } => write!(f, "F{p}(z{order})"),
        }
    }
}

/// Accepts `q`, `fp:P`, `cyc:N`, `fp:P:cyc:N`, and the display forms
/// `Q`, `F7`, `Q(z12)`, `F5(z4)`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("unrecognised field spec {s:?}"));
        let num = |t: &str| t.parse::<u64>().map_err(|_| bad());
        let lower = s.to_ascii_lowercase();
        if lower == "q" || lower == "rational" {
            return Ok(FieldSpec::Rational);
        }
        if let Some(rest) = lower.strip_prefix("cyc:") {
            return Ok(FieldSpec::Cyclotomic {
                base: BaseField::Rational,
                order: num(rest)?,
            });
        }
        if let Some(rest) = lower.strip_prefix("fp:") {
            return match rest.split_once(":cyc:") {
                Some((p, n)) => Ok(FieldSpec::Cyclotomic {
                    base: BaseField::Prime(num(p)?),
                    order: num(n)?,
                }),
                None => Ok(FieldSpec::Prime(num(rest)?)),
            };
        }
        // Display forms.
        let (base, tail) = if let Some(rest) = s.strip_prefix('Q') {
            (BaseField::Rational, rest)
        } else if let Some(rest) = s.strip_prefix('F') {
            let end = rest.find('(').unwrap_or(rest.len());
            (BaseField::Prime(num(&rest[..end])?), &rest[end..])
        } else {
            return Err(bad());
        };
        if tail.is_empty() {
            return Ok(match base {
                BaseField::Rational => FieldSpec::Rational,
                BaseField::Prime(p) => FieldSpec::Prime(p),
            });
        }
        let order = tail
            .strip_prefix("(z")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        Ok(FieldSpec::Cyclotomic {
            base,
            order: num(order)?,
        })
    }
}

// ---------------------------------------------------------------------------
// Coefficient rings and dense polynomial helpers
// ---------------------------------------------------------------------------

trait Coeffs {
    type E: Clone + PartialEq;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Option<Self::E>;
}

struct RatCoeffs;

impl Coeffs for RatCoeffs {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
}

struct ModCoeffs(u64);

impl Coeffs for ModCoeffs {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.0 as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.0 as u128 - *b as u128) % self.0 as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        mod_inv(*a, self.0)
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(p as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(p as i128) as u64)
}

fn trim<C: Coeffs>(c: &C, mut v: Vec<C::E>) -> Vec<C::E> {
    while v.last().is_some_and(|x| c.is_zero(x)) {
        v.pop();
    }
    v
}

fn poly_add<C: Coeffs>(c: &C, a: &[C::E], b: &[C::E]) -> Vec<C::E> {
    let n = a.len().max(b.len());
    let z = c.zero();
    let out = (0..n)
        .map(|i| c.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(c, out)
}

fn poly_sub<C: Coeffs>(c: &C, a: &[C::E], b: &[C::E]) -> Vec<C::E> {
    let n = a.len().max(b.len());
    let z = c.zero();
    let out = (0..n)
        .map(|i| c.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(c, out)
}

fn poly_mul<C: Coeffs>(c: &C, a: &[C::E], b: &[C::E]) -> Vec<C::E> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![c.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if c.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = c.add(&out[i + j], &c.mul(x, y));
        }
    }
    trim(c, out)
}

/// Quotient and remainder; `b` must be nonzero.
fn poly_divrem<C: Coeffs>(c: &C, a: &[C::E], b: &[C::E]) -> (Vec<C::E>, Vec<C::E>) {
    let db = b.len() - 1;
    let lead_inv = c.inv(&b[db]).expect("nonzero leading coefficient");
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), trim(c, rem));
    }
    let mut quo = vec![c.zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        let coef = c.mul(&rem[k], &lead_inv);
        if c.is_zero(&coef) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let idx = k - db + j;
            rem[idx] = c.sub(&rem[idx], &c.mul(&coef, bj));
        }
        quo[k - db] = coef;
    }
    rem.truncate(db);
    (trim(c, quo), trim(c, rem))
}

fn poly_rem<C: Coeffs>(c: &C, a: &[C::E], m: &[C::E]) -> Vec<C::E> {
    if a.len() < m.len() {
        return trim(c, a.to_vec());
    }
    poly_divrem(c, a, m).1
}

/// Inverse of `a` modulo the irreducible `m`, by the extended Euclidean algorithm.
fn poly_inv_mod<C: Coeffs>(c: &C, a: &[C::E], m: &[C::E]) -> Option<Vec<C::E>> {
    let (mut r0, mut r1) = (m.to_vec(), poly_rem(c, a, m));
    let (mut s0, mut s1): (Vec<C::E>, Vec<C::E>) = (Vec::new(), vec![c.one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(c, &r0, &r1);
        let s2 = poly_sub(c, &s0, &poly_mul(c, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.len() != 1 {
        return None;
    }
    let k = c.inv(&r0[0])?;
    let scaled: Vec<C::E> = s0.iter().map(|x| c.mul(x, &k)).collect();
    Some(poly_rem(c, &trim(c, scaled), m))
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The `n`-th cyclotomic polynomial over the rationals, low degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigRational> {
    let c = RatCoeffs;
    let mut num = vec![BigRational::zero(); n as usize + 1];
    num[0] = -BigRational::one();
    num[n as usize] = BigRational::one();
    for d in divisors(n) {
        if d < n {
            num = poly_divrem(&c, &num, &cyclotomic_polynomial(d)).0;
        }
    }
    num
}

fn reduce_mod_p(r: &BigRational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let n = r.numer().mod_floor(&pb).to_u64()?;
    let d = r.denom().mod_floor(&pb).to_u64()?;
    let d_inv = mod_inv(d, p)?;
    Some(((n as u128 * d_inv as u128) % p as u128) as u64)
}

/// Lexicographically smallest monic divisor of `Φ_order` mod `p` of the
/// common factor degree, comparing coefficients from `z^{d-1}` down to `z^0`.
fn prime_cyclotomic_modulus(p: u64, order: u64) -> Result<Vec<u64>> {
    let c = ModCoeffs(p);
    let phi: Vec<u64> = cyclotomic_polynomial(order)
        .iter()
        .map(|r| reduce_mod_p(r, p).expect("integral coefficients"))
        .collect();
    let phi = trim(&c, phi);
    // Every irreducible factor of Φ_N over F_p has degree ord_N(p).
    let degree = if order == 1 {
        1
    } else {
        (1..=order)
            .find(|&d| mod_pow(p % order, d, order) == 1 % order)
            .expect("p is a unit mod order") as usize
    };
    let total = (p as u128).pow(degree as u32);
    if total > MODULUS_SEARCH_LIMIT as u128 {
        return Err(Error::InvalidField(format!(
            "F{p}(z{order}): modulus search space too large"
        )));
    }
    for k in 0..total as u64 {
        let mut cand = Vec::with_capacity(degree + 1);
        let mut rest = k;
        for _ in 0..degree {
            cand.push(rest % p);
            rest /= p;
        }
        cand.push(1);
        if poly_rem(&c, &phi, &cand).is_empty() {
            return Ok(cand);
        }
    }
    Err(Error::InvalidField(format!(
        "F{p}(z{order}): no factor of the cyclotomic polynomial found"
    )))
}

// ---------------------------------------------------------------------------
// Field handle
// ---------------------------------------------------------------------------

#[derive(Debug)]
enum Modulus {
    None,
    Rat(Vec<BigRational>),
    Mod(Vec<u64>),
}

#[derive(Debug)]
struct FieldInner {
    spec: FieldSpec,
    modulus: Modulus,
}

/// Shared handle to an exact field. Equality is equality of specs: the
/// modulus is a deterministic function of the spec.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.spec.hash(state)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.spec.fmt(f)
    }
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field> {
        let modulus = match spec {
            FieldSpec::Rational => Modulus::None,
            FieldSpec::Prime(p) => {
                if !is_prime(p) || p > u32::MAX as u64 {
                    return Err(Error::InvalidField(format!("{p} is not a supported prime")));
                }
                Modulus::None
            }
            FieldSpec::Cyclotomic { base, order } => {
                if order == 0 {
                    return Err(Error::InvalidField("cyclotomic order must be positive".into()));
                }
                match base {
                    BaseField::Rational => Modulus::Rat(cyclotomic_polynomial(order)),
                    BaseField::Prime(p) => {
                        if !is_prime(p) || p > u32::MAX as u64 {
                            return Err(Error::InvalidField(format!(
                                "{p} is not a supported prime"
                            )));
                        }
                        if order % p == 0 {
                            return Err(Error::InvalidField(format!(
                                "characteristic {p} divides cyclotomic order {order}"
                            )));
                        }
                        Modulus::Mod(prime_cyclotomic_modulus(p, order)?)
                    }
                }
            }
        };
        Ok(Field(Arc::new(FieldInner { spec, modulus })))
    }

    pub fn rational() -> Field {
        Field::new(FieldSpec::Rational).expect("rationals")
    }

    pub fn prime(p: u64) -> Result<Field> {
        Field::new(FieldSpec::Prime(p))
    }

    pub fn cyclotomic(order: u64) -> Result<Field> {
        Field::new(FieldSpec::Cyclotomic {
            base: BaseField::Rational,
            order,
        })
    }

    pub fn spec(&self) -> FieldSpec {
        self.0.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.0.spec.characteristic()
    }

    /// Degree over the prime field's fraction field (1 unless cyclotomic).
    pub fn degree(&self) -> usize {
        match &self.0.modulus {
            Modulus::None => 1,
            Modulus::Rat(m) => m.len() - 1,
            Modulus::Mod(m) => m.len() - 1,
        }
    }

    /// The modulus polynomial's coefficients as scalars of the base field,
    /// low degree first. Empty for non-cyclotomic fields.
    pub fn modulus_string(&self) -> String {
        match &self.0.modulus {
            Modulus::None => String::new(),
            Modulus::Rat(m) => format_poly(m.iter().map(|c| (c.is_zero(), c.to_string(), c.is_negative(), c.is_one(), (-c).is_one())).collect()),
            Modulus::Mod(m) => format_poly(m.iter().map(|c| (*c == 0, c.to_string(), false, *c == 1, false)).collect()),
        }
    }

    fn wrap(&self, repr: Repr) -> Scalar {
        Scalar {
            field: self.clone(),
            repr,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.wrap(match &self.0.modulus {
            Modulus::None => match self.0.spec {
                FieldSpec::Prime(_) => Repr::Mod(0),
                _ => Repr::Rat(BigRational::zero()),
            },
            Modulus::Rat(_) => Repr::CycRat(Vec::new()),
            Modulus::Mod(_) => Repr::CycMod(Vec::new()),
        })
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        self.from_rational(&BigRational::from_integer(n.clone()))
            .expect("integers embed in every field")
    }

    /// Embeds a rational number. Fails in characteristic `p` when `p`
    /// divides the denominator.
    pub fn from_rational(&self, r: &BigRational) -> Result<Scalar> {
        let repr = match (&self.0.modulus, self.0.spec) {
            (Modulus::None, FieldSpec::Prime(p)) => {
                Repr::Mod(reduce_mod_p(r, p).ok_or(Error::DivisionByZero)?)
            }
            (Modulus::None, _) => Repr::Rat(r.clone()),
            (Modulus::Rat(_), _) => Repr::CycRat(trim(&RatCoeffs, vec![r.clone()])),
            (Modulus::Mod(_), spec) => {
                let p = spec.characteristic();
                Repr::CycMod(trim(
                    &ModCoeffs(p),
                    vec![reduce_mod_p(r, p).ok_or(Error::DivisionByZero)?],
                ))
            }
        };
        Ok(self.wrap(repr))
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        self.from_rational(&BigRational::new(num.into(), den.into()))
    }

    /// The fixed root `z` of a cyclotomic field.
    pub fn generator(&self) -> Result<Scalar> {
        let repr = match &self.0.modulus {
            Modulus::Rat(m) => Repr::CycRat(poly_rem(
                &RatCoeffs,
                &[BigRational::zero(), BigRational::one()],
                m,
            )),
            Modulus::Mod(m) => {
                let c = ModCoeffs(self.characteristic());
                Repr::CycMod(poly_rem(&c, &[0, 1], m))
            }
            Modulus::None => {
                return Err(Error::InvalidField(format!("{self} is not cyclotomic")));
            }
        };
        Ok(self.wrap(repr))
    }

    fn reduce_rat(&self, v: Vec<BigRational>) -> Repr {
        match &self.0.modulus {
            Modulus::Rat(m) => Repr::CycRat(poly_rem(&RatCoeffs, &trim(&RatCoeffs, v), m)),
            _ => unreachable!("rational polynomial over non-cyclotomic field"),
        }
    }

    fn reduce_mod(&self, v: Vec<u64>) -> Repr {
        match &self.0.modulus {
            Modulus::Mod(m) => {
                let c = ModCoeffs(self.characteristic());
                Repr::CycMod(poly_rem(&c, &trim(&c, v), m))
            }
            _ => unreachable!("modular polynomial over non-cyclotomic field"),
        }
    }

    /// Whether every element of `other` has a canonical image in `self`.
    pub fn extends(&self, other: &Field) -> bool {
        self.embedding_exponent(other).is_some()
    }

    /// For an embedding `other -> self`, the exponent `e` with `z_other ↦ z^e`
    /// (0 when `other` has no cyclotomic root).
    fn embedding_exponent(&self, other: &Field) -> Option<u64> {
        use FieldSpec::*;
        match (other.spec(), self.spec()) {
            (a, b) if a == b => Some(1),
            (Rational, Cyclotomic { base: BaseField::Rational, .. }) => Some(0),
            (Prime(p), Cyclotomic { base: BaseField::Prime(q), .. }) if p == q => Some(0),
            (Cyclotomic { base: b1, order: m }, Cyclotomic { base: b2, order: n })
                if b1 == b2 && n % m == 0 =>
            {
                // Smallest exponent (N/M)·u, u a unit mod M, landing on a root
                // of the source modulus.
                let step = n / m;
                let z = self.generator().ok()?;
                (1..=m.max(1))
                    .filter(|u| num_integer::gcd(*u, m) == 1)
                    .map(|u| u * step)
                    .find(|&e| {
                        let root = z.pow(e);
                        other.eval_modulus_at(&root).is_zero()
                    })
            }
            _ => None,
        }
    }

    fn eval_modulus_at(&self, x: &Scalar) -> Scalar {
        let coeffs: Vec<Scalar> = match &self.0.modulus {
            Modulus::Rat(m) => m
                .iter()
                .map(|c| x.field.from_rational(c).expect("rational"))
                .collect(),
            Modulus::Mod(m) => m.iter().map(|c| x.field.from_i64(*c as i64)).collect(),
            Modulus::None => return x.field.zero(),
        };
        let mut acc = x.field.zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Maps `s` into this field along the canonical embedding.
    pub fn embed(&self, s: &Scalar) -> Result<Scalar> {
        let incompatible = || Error::IncompatibleExtension {
            from: s.field.to_string(),
            to: self.to_string(),
        };
        if s.field == *self {
            return Ok(self.wrap(s.repr.clone()));
        }
        let e = self.embedding_exponent(&s.field).ok_or_else(incompatible)?;
        Ok(match &s.repr {
            Repr::Rat(r) => self.from_rational(r)?,
            Repr::Mod(r) => self.from_i64(*r as i64),
            Repr::CycRat(_) | Repr::CycMod(_) if e == 0 => unreachable!("cyclotomic source embeds with e > 0"),
            Repr::CycRat(v) => {
                let z = self.generator()?.pow(e);
                let mut acc = self.zero();
                for c in v.iter().rev() {
                    acc = &(&acc * &z) + &self.from_rational(c)?;
                }
                acc
            }
            Repr::CycMod(v) => {
                let z = self.generator()?.pow(e);
                let mut acc = self.zero();
                for c in v.iter().rev() {
                    acc = &(&acc * &z) + &self.from_i64(*c as i64);
                }
                acc
            }
        })
    }

    /// Parses the canonical text form (`a/b`, residues, or `c0+c1*z+...`).
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |why: &str| Error::Parse(format!("bad scalar {text:?} for {self}: {why}"));
        if s.is_empty() {
            return Err(bad("empty"));
        }
        let cyclotomic = matches!(self.0.spec, FieldSpec::Cyclotomic { .. });
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        let mut acc = self.zero();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let (coef_text, power) = match body.find('z') {
                Some(pos) => {
                    if !cyclotomic {
                        return Err(bad("z only exists in cyclotomic fields"));
                    }
                    let coef = &body[..pos];
                    let coef = match coef.strip_suffix('*') {
                        Some(c) if !c.is_empty() => c,
                        Some(_) => return Err(bad("missing coefficient before '*'")),
                        None if coef.is_empty() => "1",
                        None => return Err(bad("expected '*' before z")),
                    };
                    let exp = &body[pos + 1..];
                    let power = if exp.is_empty() {
                        1
                    } else {
                        exp.strip_prefix('^')
                            .and_then(|e| e.parse::<u64>().ok())
                            .ok_or_else(|| bad("bad exponent"))?
                    };
                    (coef, power)
                }
                None => (body, 0),
            };
            let coef = parse_rational(coef_text).ok_or_else(|| bad("bad coefficient"))?;
            let mut value = self.from_rational(&coef).map_err(|_| bad("denominator vanishes"))?;
            if power > 0 {
                value = &value * &self.generator()?.pow(power);
            }
            acc = if neg { &acc - &value } else { &acc + &value };
        }
        Ok(acc)
    }

    /// An element of exact multiplicative order `n`.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<Scalar> {
        let unavailable = || Error::RootUnavailable {
            field: self.to_string(),
            order: n,
        };
        if n == 0 {
            return Err(unavailable());
        }
        if n == 1 {
            return Ok(self.one());
        }
        let candidate = match self.0.spec {
            FieldSpec::Rational => (n == 2).then(|| self.from_i64(-1)),
            FieldSpec::Prime(p) => {
                if (p - 1) % n != 0 {
                    None
                } else {
                    (2..p)
                        .map(|a| self.from_i64(a as i64))
                        .find(|a| has_exact_order(a, n))
                }
            }
            FieldSpec::Cyclotomic { base, order } => {
                let z = self.generator()?;
                if order % n == 0 {
                    Some(z.pow(order / n))
                } else if order % 2 == 1 && (2 * order) % n == 0 {
                    Some((-&z).pow(2 * order / n))
                } else if let BaseField::Prime(p) = base {
                    ((p - 1) % n == 0).then(|| {
                        (2..p)
                            .map(|a| self.from_i64(a as i64))
                            .find(|a| has_exact_order(a, n))
                            .expect("cyclic unit group")
                    })
                } else {
                    None
                }
            }
        };
        match candidate {
            Some(c) if has_exact_order(&c, n) => Ok(c),
            _ => Err(unavailable()),
        }
    }
}

fn has_exact_order(a: &Scalar, n: u64) -> bool {
    a.pow(n).is_one() && prime_factors(n).iter().all(|q| !a.pow(n / q).is_one())
}

fn parse_rational(t: &str) -> Option<BigRational> {
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    match t.split_once('/') {
        Some((n, d)) if digits(n) && digits(d) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None if digits(t) => Some(BigRational::from_integer(t.parse().ok()?)),
        _ => None,
    }
}

// (is_zero, text, negative, is_one, is_minus_one)
type TermParts = (bool, String, bool, bool, bool);

fn format_poly(coeffs: Vec<TermParts>) -> String {
    let mut out = String::new();
    for (k, (zero, text, negative, one, minus_one)) in coeffs.into_iter().enumerate() {
        if zero {
            continue;
        }
        let zpart = match k {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{k}"),
        };
        let term = if k == 0 {
            text
        } else if one {
            zpart
        } else if minus_one {
            format!("-{zpart}")
        } else {
            format!("{text}*{zpart}")
        };
        if !out.is_empty() && !negative && !minus_one {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    Mod(u64),
    CycRat(Vec<BigRational>),
    CycMod(Vec<u64>),
}

/// An element of an exact field, always in canonical form.
#[derive(Clone, Debug)]
pub struct Scalar {
    field: Field,
    repr: Repr,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr && self.field == other.field
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.repr.hash(state);
    }
}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_zero(),
            Repr::Mod(r) => *r == 0,
            Repr::CycRat(v) => v.is_empty(),
            Repr::CycMod(v) => v.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_one(),
            Repr::Mod(r) => *r == 1,
            Repr::CycRat(v) => v.len() == 1 && v[0].is_one(),
            Repr::CycMod(v) => v.len() == 1 && v[0] == 1,
        }
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ))
        }
    }

    fn p(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Mod(a), Repr::Mod(b)) => Repr::Mod(ModCoeffs(self.p()).add(a, b)),
            (Repr::CycRat(a), Repr::CycRat(b)) => Repr::CycRat(poly_add(&RatCoeffs, a, b)),
            (Repr::CycMod(a), Repr::CycMod(b)) => {
                Repr::CycMod(poly_add(&ModCoeffs(self.p()), a, b))
            }
            _ => unreachable!("representation follows field"),
        };
        Ok(self.field.wrap(repr))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a - b),
            (Repr::Mod(a), Repr::Mod(b)) => Repr::Mod(ModCoeffs(self.p()).sub(a, b)),
            (Repr::CycRat(a), Repr::CycRat(b)) => Repr::CycRat(poly_sub(&RatCoeffs, a, b)),
            (Repr::CycMod(a), Repr::CycMod(b)) => {
                Repr::CycMod(poly_sub(&ModCoeffs(self.p()), a, b))
            }
            _ => unreachable!("representation follows field"),
        };
        Ok(self.field.wrap(repr))
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Mod(a), Repr::Mod(b)) => Repr::Mod(ModCoeffs(self.p()).mul(a, b)),
            (Repr::CycRat(a), Repr::CycRat(b)) => {
                if a.is_empty() || b.is_empty() {
                    Repr::CycRat(Vec::new())
                } else if a.len() == 1 && b.len() == 1 {
                    Repr::CycRat(trim(&RatCoeffs, vec![&a[0] * &b[0]]))
                } else {
                    self.field.reduce_rat(poly_mul(&RatCoeffs, a, b))
                }
            }
            (Repr::CycMod(a), Repr::CycMod(b)) => {
                self.field.reduce_mod(poly_mul(&ModCoeffs(self.p()), a, b))
            }
            _ => unreachable!("representation follows field"),
        };
        Ok(self.field.wrap(repr))
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match (&self.repr, &self.field.0.modulus) {
            (Repr::Rat(a), _) => Repr::Rat(a.recip()),
            (Repr::Mod(a), _) => Repr::Mod(mod_inv(*a, self.p()).ok_or(Error::DivisionByZero)?),
            (Repr::CycRat(a), Modulus::Rat(m)) => {
                Repr::CycRat(poly_inv_mod(&RatCoeffs, a, m).ok_or(Error::DivisionByZero)?)
            }
            (Repr::CycMod(a), Modulus::Mod(m)) => Repr::CycMod(
                poly_inv_mod(&ModCoeffs(self.p()), a, m).ok_or(Error::DivisionByZero)?,
            ),
            _ => unreachable!("representation follows field"),
        };
        Ok(self.field.wrap(repr))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Signed power; negative exponents need an invertible base.
    pub fn powi(&self, e: i64) -> Result<Scalar> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Smallest `n <= cap` with `self^n = 1`.
    pub fn multiplicative_order(&self, cap: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut acc = self.clone();
        for n in 1..=cap {
            if acc.is_one() {
                return Some(n);
            }
            acc = &acc * self;
        }
        None
    }

    /// Value as a rational when the scalar lies in the prime subfield of a
    /// characteristic-zero field.
    pub fn as_rational(&self) -> Option<BigRational> {
        match &self.repr {
            Repr::Rat(r) => Some(r.clone()),
            Repr::CycRat(v) if v.len() <= 1 => Some(v.first().cloned().unwrap_or_else(BigRational::zero)),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rat(r) => write!(f, "{r}"),
            Repr::Mod(r) => write!(f, "{r}"),
            Repr::CycRat(v) => f.write_str(&format_poly(
                v.iter()
                    .map(|c| {
                        (c.is_zero(), c.to_string(), c.is_negative(), c.is_one(), (-c).is_one())
                    })
                    .collect(),
            )),
            Repr::CycMod(v) => f.write_str(&format_poly(
                v.iter()
                    .map(|c| (*c == 0, c.to_string(), false, *c == 1, false))
                    .collect(),
            )),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            /// Panics on mixed fields; use the `try_` form to recover.
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        &self.field.zero() - self
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rational()
    }

    #[test]
    fn rational_sum() {
        let f = q();
        let s = &f.from_ratio(1, 2).unwrap() + &f.from_ratio(1, 3).unwrap();
        assert_eq!(s, f.from_ratio(5, 6).unwrap());
        assert_eq!(s.to_string(), "5/6");
    }

    #[test]
    fn cyclotomic_products_with_zero() {
        let f = Field::cyclotomic(4).unwrap();
        let two = f.from_i64(2);
        assert!((&f.zero() * &two).is_zero());
        assert!((&two * &f.zero()).is_zero());
        assert!((&f.zero() * &f.generator().unwrap()).is_zero());
        assert_eq!(&two * &two, f.from_i64(4));
    }

    #[test]
    fn prime_inverse() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_i64(3).inv().unwrap().to_string(), "5");
        assert_eq!(f.from_i64(0).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn fourth_root_squares_to_minus_one() {
        let f = Field::cyclotomic(4).unwrap();
        let z = f.generator().unwrap();
        assert_eq!(&z * &z, f.from_i64(-1));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = q().one();
        let b = Field::prime(5).unwrap().one();
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(q().primitive_root_of_unity(2).unwrap(), q().from_i64(-1));
        assert!(matches!(
            q().primitive_root_of_unity(3),
            Err(Error::RootUnavailable { .. })
        ));
        let f6 = Field::cyclotomic(6).unwrap();
        let z = f6.generator().unwrap();
        assert_eq!(f6.primitive_root_of_unity(3).unwrap(), z.pow(2));
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.primitive_root_of_unity(3).unwrap().to_string(), "2");
        // Odd cyclotomic orders still contain -1 and hence order 2·N roots.
        let f3 = Field::cyclotomic(3).unwrap();
        assert_eq!(f3.primitive_root_of_unity(6).unwrap().multiplicative_order(100), Some(6));
    }

    #[test]
    fn orders() {
        assert_eq!(q().from_i64(-1).multiplicative_order(100), Some(2));
        assert_eq!(q().from_i64(2).multiplicative_order(100), None);
        let f6 = Field::cyclotomic(6).unwrap();
        assert_eq!(f6.generator().unwrap().multiplicative_order(100), Some(6));
    }

    #[test]
    fn cyclotomic_polynomials() {
        let show = |n| {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        assert_eq!(show(1), "-1,1");
        assert_eq!(show(4), "1,0,1");
        assert_eq!(show(6), "1,-1,1");
        assert_eq!(show(12), "1,0,-1,0,1");
    }

    #[test]
    fn prime_cyclotomic_modulus_is_smallest_factor() {
        // Φ_4 = t^2 + 1 splits mod 5 as (t+2)(t+3); t+2 is smaller.
        let f = Field::new(FieldSpec::Cyclotomic {
            base: BaseField::Prime(5),
            order: 4,
        })
        .unwrap();
        assert_eq!(f.modulus_string(), "2+z");
        assert_eq!(f.degree(), 1);
        // Φ_3 is irreducible mod 2.
        let f = Field::new(FieldSpec::Cyclotomic {
            base: BaseField::Prime(2),
            order: 3,
        })
        .unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.generator().unwrap().multiplicative_order(100), Some(3));
        assert!(Field::new(FieldSpec::Cyclotomic {
            base: BaseField::Prime(3),
            order: 6
        })
        .is_err());
    }

    #[test]
    fn text_round_trip_and_strictness() {
        let f = Field::cyclotomic(12).unwrap();
        for text in ["0", "-1", "1/2-3*z^2", "z", "-z^3+7/5*z", "2+z^3"] {
            let s = f.parse_scalar(text).unwrap();
            assert_eq!(f.parse_scalar(&s.to_string()).unwrap(), s, "{text}");
        }
        assert_eq!(f.parse_scalar(" 1 + z ").unwrap().to_string(), "1+z");
        for bad in ["", "1+", "z^", "2z", "1/0", "x", "*z"] {
            assert!(f.parse_scalar(bad).is_err(), "{bad}");
        }
        assert!(q().parse_scalar("z").is_err());
        assert_eq!(Field::prime(7).unwrap().parse_scalar("-1").unwrap().to_string(), "6");
    }

    #[test]
    fn embeddings() {
        let f3 = Field::cyclotomic(3).unwrap();
        let f12 = Field::cyclotomic(12).unwrap();
        let w = f3.generator().unwrap();
        let image = f12.embed(&w).unwrap();
        assert_eq!(image.multiplicative_order(100), Some(3));
        assert_eq!(f12.embed(&(&w * &w)).unwrap(), &image * &image);
        assert!(f3.embed(&f12.generator().unwrap()).is_err());
        assert_eq!(f12.embed(&q().from_ratio(3, 4).unwrap()).unwrap().to_string(), "3/4");
    }

    #[test]
    fn field_spec_text() {
        for (text, spec) in [
            ("q", FieldSpec::Rational),
            ("fp:2", FieldSpec::Prime(2)),
            ("cyc:12", FieldSpec::Cyclotomic { base: BaseField::Rational, order: 12 }),
            ("fp:5:cyc:4", FieldSpec::Cyclotomic { base: BaseField::Prime(5), order: 4 }),
            ("F5(z4)", FieldSpec::Cyclotomic { base: BaseField::Prime(5), order: 4 }),
            ("Q(z3)", FieldSpec::Cyclotomic { base: BaseField::Rational, order: 3 }),
        ] {
            assert_eq!(text.parse::<FieldSpec>().unwrap(), spec);
            assert_eq!(spec.to_string().parse::<FieldSpec>().unwrap(), spec);
        }
        assert!("fp:x".parse::<FieldSpec>().is_err());
        assert!(Field::prime(8).is_err());
    }
}
