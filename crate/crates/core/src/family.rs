//! Infinite-dimensional Hopf algebras given by generators and a chain of
//! normal elements.
//!
//! Each [`ReductionStep`] holds a presented Hopf algebra `A`, a normal
//! element `w` with `w·g = τ(g)·w` for every generator, and a map from
//! `A/(w)` to the next stage (or to a finite-dimensional terminal Hopf
//! algebra). The integral character of `A` is recovered from the terminal
//! one by pulling back through each quotient and twisting by `τ⁻¹`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::hopf::{FiniteHopfAlgebra, Tensor2};
use crate::integrals::compute_integrals;
use crate::linalg::{zero_vector, Matrix, Vector};
use crate::monomial::{
    evaluate, normal_form, tensor_of, Expr, Monomial, MonomialAlgebra, Poly, Poly2, PolyRing, ScalarRing,
    TensorExpr, TensorRing, VectorRing, Word,
};
use crate::scalar::{Field, Scalar};

/// Images of generators and, where declared, of their formal inverses.
#[derive(Clone, Debug)]
pub struct GenMap<T> {
    pub images: Vec<T>,
    pub inverse_images: Vec<Option<T>>,
}

impl<T> GenMap<T> {
    pub fn new(images: Vec<T>, inverse_images: Vec<Option<T>>) -> Self {
        GenMap { images, inverse_images }
    }

    /// A map with no inverse images.
    pub fn plain(images: Vec<T>) -> Self {
        let inverse_images = images.iter().map(|_| None).collect();
        GenMap { images, inverse_images }
    }

    pub fn get(&self, g: usize, inverse: bool) -> Result<&T> {
        if inverse {
            self.inverse_images[g]
                .as_ref()
                .ok_or_else(|| Error::Parse(format!("no image declared for the inverse of generator {g}")))
        } else {
            Ok(&self.images[g])
        }
    }
}

/// Δ, ε and S on generators (and inverses of invertible generators).
#[derive(Clone, Debug)]
pub struct HopfData {
    pub comul: GenMap<TensorExpr>,
    pub counit: Vec<Scalar>,
    pub antipode: GenMap<Expr>,
}

/// One summand of the witness that `(w)` is a Hopf ideal.
#[derive(Clone, Debug)]
pub enum WitnessTerm {
    /// `c · (a·w) ⊗ b`
    Left { coeff: Scalar, left: Expr, right: Expr },
    /// `c · a ⊗ (b·w)`
    Right { coeff: Scalar, left: Expr, right: Expr },
}

#[derive(Clone, Debug)]
pub enum StageMap {
    /// Into the generators of the next step's algebra.
    Next(GenMap<Expr>),
    /// Into coordinate vectors of the terminal Hopf algebra.
    Terminal(GenMap<Vector>),
}

#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub algebra: Arc<dyn MonomialAlgebra>,
    pub hopf: HopfData,
    pub normal_element: Expr,
    pub twist: GenMap<Expr>,
    pub twist_inverse: GenMap<Expr>,
    pub witness: Vec<WitnessTerm>,
    pub quotient: StageMap,
}

#[derive(Clone, Debug)]
pub struct PresentedHopfFamily {
    pub name: String,
    pub steps: Vec<ReductionStep>,
    pub terminal: FiniteHopfAlgebra,
}

/// Generator values of an algebra map to the base field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCharacter {
    pub names: Vec<String>,
    pub values: Vec<Scalar>,
}

impl FamilyCharacter {
    pub fn value(&self, name: &str) -> Option<&Scalar> {
        self.names.iter().position(|n| n == name).map(|i| &self.values[i])
    }

    pub fn eval(&self, expr: &Expr) -> Result<Scalar> {
        let field = self.values.first().map(|v| v.field().clone()).unwrap_or_else(Field::rational);
        evaluate(&ScalarRing(field), expr, &|g, inv| {
            if inv {
                self.values[g].inv()
            } else {
                Ok(self.values[g].clone())
            }
        })
    }

    pub fn eval_word(&self, w: &Word) -> Result<Scalar> {
        let field = self.values[0].field().clone();
        self.eval(&Expr::word(&field, w))
    }
}

impl fmt::Display for FamilyCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.names.iter().zip(&self.values).map(|(n, v)| format!("{n}↦{v}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCheck {
    pub step: usize,
    pub name: &'static str,
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub checks: Vec<ChainCheck>,
}

impl ChainReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failure.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &ChainCheck> {
        self.checks.iter().filter(|c| c.failure.is_some())
    }
}

/// A finite truncation `H/K` with the winding automorphisms it inherits.
#[derive(Clone, Debug)]
pub struct Truncation {
    pub algebra: FiniteAlgebra,
    pub basis: Vec<Monomial>,
    pub windings: Vec<Matrix>,
}

impl ReductionStep {
    fn alg(&self) -> &dyn MonomialAlgebra {
        self.algebra.as_ref()
    }

    fn field(&self) -> &Field {
        self.algebra.field()
    }

    fn names(&self) -> Vec<String> {
        self.algebra.generator_names()
    }

    fn generator_slots(&self) -> Vec<(usize, bool)> {
        let n = self.names().len();
        let mut out: Vec<(usize, bool)> = (0..n).map(|g| (g, false)).collect();
        out.extend((0..n).filter(|&g| self.algebra.is_invertible(g)).map(|g| (g, true)));
        out
    }

    fn slot_name(&self, g: usize, inv: bool) -> String {
        let name = &self.names()[g];
        if inv {
            format!("{name}^-1")
        } else {
            name.clone()
        }
    }

    fn nf(&self, e: &Expr) -> Result<Poly> {
        normal_form(self.alg(), e)
    }

    /// `φ(e)` for an endomorphism given on generators.
    fn apply_endo(&self, map: &GenMap<Expr>, e: &Expr) -> Result<Poly> {
        evaluate(&PolyRing(self.alg()), e, &|g, inv| self.nf(map.get(g, inv)?))
    }

    fn tensor_expr(&self, t: &TensorExpr) -> Result<Poly2> {
        let mut out = Poly2::new();
        let ring = TensorRing(self.alg());
        for (c, l, r) in &t.terms {
            let term = tensor_of(&self.nf(&Expr::word(self.field(), l))?, &self.nf(&Expr::word(self.field(), r))?);
            out = crate::monomial::Ring::add(&ring, &out, &crate::monomial::Ring::scale(&ring, c, &term));
        }
        Ok(out)
    }

    /// `Δ(e)` computed multiplicatively from Δ on generators.
    fn comul(&self, e: &Expr) -> Result<Poly2> {
        evaluate(&TensorRing(self.alg()), e, &|g, inv| self.tensor_expr(self.hopf.comul.get(g, inv)?))
    }

    fn counit_of(&self, e: &Expr) -> Result<Scalar> {
        let eps = FamilyCharacter { names: self.names(), values: self.hopf.counit.clone() };
        eps.eval(e)
    }

    /// `S(e)`, using that `S` reverses products.
    fn antipode_of_word(&self, w: &Word) -> Result<Poly> {
        let reversed: Word = w.iter().rev().copied().collect();
        self.apply_endo(&self.hopf.antipode, &Expr::word(self.field(), &reversed))
    }

    fn slot_expr(&self, g: usize, inv: bool) -> Expr {
        Expr::word(self.field(), &[(g, if inv { -1 } else { 1 })])
    }

    fn counit_character(&self) -> FamilyCharacter {
        FamilyCharacter { names: self.names(), values: self.hopf.counit.clone() }
    }

    fn check_relators(&self, chi: &FamilyCharacter) -> Result<()> {
        for r in self.algebra.relators() {
            if !chi.eval(&r)?.is_zero() {
                return Err(Error::RelatorViolation(format!(
                    "{chi} does not satisfy {} = 0",
                    r.render(&self.names())
                )));
            }
        }
        Ok(())
    }
}

fn first_failure<I>(items: I) -> Option<String>
where
    I: IntoIterator<Item = Result<Option<String>>>,
{
    for item in items {
        match item {
            Ok(None) => continue,
            Ok(Some(msg)) => return Some(msg),
            Err(e) => return Some(e.to_string()),
        }
    }
    None
}

impl PresentedHopfFamily {
    pub fn top(&self) -> &ReductionStep {
        &self.steps[0]
    }

    pub fn field(&self) -> &Field {
        self.top().field()
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.top().names()
    }

    fn step_checks(&self, j: usize) -> Vec<ChainCheck> {
        let step = &self.steps[j];
        let names = step.names();
        let w = &step.normal_element;
        let mut checks = Vec::new();
        let mut push = |name: &'static str, failure: Option<String>| checks.push(ChainCheck { step: j, name, failure });

        push(
            "relators",
            first_failure(step.algebra.relators().iter().map(|r| {
                Ok((!step.nf(r)?.is_empty()).then(|| format!("{} ≠ 0", r.render(&names))))
            })),
        );

        push(
            "normality",
            first_failure(step.generator_slots().into_iter().map(|(g, inv)| {
                let gen = step.slot_expr(g, inv);
                let tau = step.twist.get(g, inv)?;
                let diff = w.times(&gen).minus(tau.times(w));
                Ok((!step.nf(&diff)?.is_empty()).then(|| format!("w·{} ≠ τ({})·w", step.slot_name(g, inv), step.slot_name(g, inv))))
            })),
        );

        push(
            "twist well-defined",
            first_failure(step.algebra.relators().iter().map(|r| {
                let bad = !step.apply_endo(&step.twist, r)?.is_empty() || !step.apply_endo(&step.twist_inverse, r)?.is_empty();
                Ok(bad.then(|| format!("twist does not preserve {}", r.render(&names))))
            })),
        );

        push(
            "twist inverse",
            first_failure(step.generator_slots().into_iter().map(|(g, inv)| {
                let gen = step.slot_expr(g, inv);
                let expected = step.nf(&gen)?;
                let there = step.apply_endo(&step.twist, step.twist_inverse.get(g, inv)?)?;
                let back = step.apply_endo(&step.twist_inverse, step.twist.get(g, inv)?)?;
                Ok((there != expected || back != expected).then(|| format!("at {}", step.slot_name(g, inv))))
            })),
        );

        let witness = (|| -> Result<Option<String>> {
            if !step.counit_of(w)?.is_zero() {
                return Ok(Some("ε(w) ≠ 0".into()));
            }
            let ring = TensorRing(step.alg());
            let mut claimed = Poly2::new();
            for term in &step.witness {
                let (c, l, r) = match term {
                    WitnessTerm::Left { coeff, left, right } => (coeff, left.times(w), right.clone()),
                    WitnessTerm::Right { coeff, left, right } => (coeff, left.clone(), right.times(w)),
                };
                let t = tensor_of(&step.nf(&l)?, &step.nf(&r)?);
                claimed = crate::monomial::Ring::add(&ring, &claimed, &crate::monomial::Ring::scale(&ring, c, &t));
            }
            Ok((claimed != step.comul(w)?).then(|| "Δ(w) differs from the witness".to_string()))
        })();
        push("hopf ideal witness", first_failure([witness]));

        push("quotient map", first_failure([self.quotient_failure(j)]));
        checks
    }

    fn quotient_failure(&self, j: usize) -> Result<Option<String>> {
        let step = &self.steps[j];
        let names = step.names();
        let mut killed = vec![("w".to_string(), step.normal_element.clone())];
        killed.extend(step.algebra.relators().into_iter().map(|r| (r.render(&names), r)));
        match &step.quotient {
            StageMap::Next(map) => {
                let next = &self.steps[j + 1];
                let image = |e: &Expr| evaluate(&PolyRing(next.alg()), e, &|g, inv| next.nf(map.get(g, inv)?));
                for (label, e) in &killed {
                    if !image(e)?.is_empty() {
                        return Ok(Some(format!("{label} is not killed")));
                    }
                }
                for (g, inv) in step.generator_slots() {
                    let gen = step.slot_expr(g, inv);
                    let target = map.get(g, inv)?;
                    let mut pushed = Poly2::new();
                    let ring = TensorRing(next.alg());
                    for (c, l, r) in &step.hopf.comul.get(g, inv)?.terms {
                        let t = tensor_of(&image(&Expr::word(step.field(), l))?, &image(&Expr::word(step.field(), r))?);
                        pushed = crate::monomial::Ring::add(&ring, &pushed, &crate::monomial::Ring::scale(&ring, c, &t));
                    }
                    if pushed != next.comul(target)? {
                        return Ok(Some(format!("does not commute with Δ at {}", step.slot_name(g, inv))));
                    }
                    if next.counit_of(target)? != step.counit_of(&gen)? {
                        return Ok(Some(format!("does not commute with ε at {}", step.slot_name(g, inv))));
                    }
                }
                Ok(None)
            }
            StageMap::Terminal(map) => {
                let t = &self.terminal;
                let image = |e: &Expr| evaluate(&VectorRing(t.algebra()), e, &|g, inv| Ok(map.get(g, inv)?.clone()));
                for (label, e) in &killed {
                    if !crate::linalg::is_zero_vector(&image(e)?) {
                        return Ok(Some(format!("{label} is not killed")));
                    }
                }
                for (g, inv) in step.generator_slots() {
                    let gen = step.slot_expr(g, inv);
                    let target = map.get(g, inv)?;
                    let mut pushed = Tensor2::new();
                    for (c, l, r) in &step.hopf.comul.get(g, inv)?.terms {
                        let a = image(&Expr::word(step.field(), l))?;
                        let b = image(&Expr::word(step.field(), r))?;
                        for (x, ax) in a.iter().enumerate() {
                            for (y, by) in b.iter().enumerate() {
                                let v = &(c * ax) * by;
                                if v.is_zero() {
                                    continue;
                                }
                                let slot = pushed.entry((x, y)).or_insert_with(|| t.field().zero());
                                *slot = &*slot + &v;
                            }
                        }
                    }
                    pushed.retain(|_, v| !v.is_zero());
                    if pushed != t.coproduct(target) {
                        return Ok(Some(format!("does not commute with Δ at {}", step.slot_name(g, inv))));
                    }
                    if t.counit_of(target) != step.counit_of(&gen)? {
                        return Ok(Some(format!("does not commute with ε at {}", step.slot_name(g, inv))));
                    }
                }
                Ok(None)
            }
        }
    }

    /// Checks normality, twist inverses, Hopf ideal witnesses and quotient
    /// maps for every step, all through the normal-form oracles.
    pub fn verify_chain(&self) -> ChainReport {
        let mut checks = Vec::new();
        for j in 0..self.steps.len() {
            checks.extend(self.step_checks(j));
        }
        if !matches!(self.steps.last().map(|s| &s.quotient), Some(StageMap::Terminal(_))) {
            checks.push(ChainCheck {
                step: self.steps.len().saturating_sub(1),
                name: "terminal",
                failure: Some("chain does not end in a finite Hopf algebra".into()),
            });
        }
        for (j, s) in self.steps.iter().enumerate().take(self.steps.len().saturating_sub(1)) {
            if !matches!(s.quotient, StageMap::Next(_)) {
                checks.push(ChainCheck { step: j, name: "terminal", failure: Some("terminal map before the last step".into()) });
            }
        }
        ChainReport { checks }
    }

    /// The character by which `H` acts on the right of `∫^l`.
    pub fn integral_character(&self) -> Result<FamilyCharacter> {
        let alpha = compute_integrals(&self.terminal)?.alpha_left;
        let mut chi: Option<FamilyCharacter> = None;
        for j in (0..self.steps.len()).rev() {
            let step = &self.steps[j];
            let names = step.names();
            let on_quotient: Vec<Scalar> = match (&step.quotient, &chi) {
                (StageMap::Terminal(map), _) => map.images.iter().map(|v| alpha.eval(v)).collect(),
                (StageMap::Next(map), Some(next)) => {
                    map.images.iter().map(|e| next.eval(e)).collect::<Result<_>>()?
                }
                (StageMap::Next(_), None) => {
                    return Err(Error::ConsistencyFailure("chain does not end in a terminal map".into()))
                }
            };
            let lifted = FamilyCharacter { names: names.clone(), values: on_quotient };
            step.check_relators(&lifted)?;
            if !lifted.eval(&step.normal_element)?.is_zero() {
                return Err(Error::ConsistencyFailure(format!("step {j}: lifted character does not kill w")));
            }
            let values = (0..names.len())
                .map(|g| lifted.eval(step.twist_inverse.get(g, false)?))
                .collect::<Result<Vec<_>>>()?;
            let twisted = FamilyCharacter { names, values };
            step.check_relators(&twisted)?;
            chi = Some(twisted);
        }
        chi.ok_or_else(|| Error::ConsistencyFailure("empty chain".into()))
    }

    pub fn counit_character(&self) -> FamilyCharacter {
        self.top().counit_character()
    }

    /// `χ ∘ S`: the left character of `∫^r` from the right character of `∫^l`.
    pub fn compose_antipode(&self, chi: &FamilyCharacter) -> Result<FamilyCharacter> {
        let top = self.top();
        let values = (0..chi.values.len())
            .map(|g| chi.eval(top.hopf.antipode.get(g, false)?))
            .collect::<Result<Vec<_>>>()?;
        let out = FamilyCharacter { names: chi.names.clone(), values };
        top.check_relators(&out)?;
        Ok(out)
    }

    /// `Σʳ = χ ∘ S` for the integral character `χ`.
    pub fn sigma_right(&self) -> Result<FamilyCharacter> {
        self.compose_antipode(&self.integral_character()?)
    }

    /// `(φ*ψ)(g) = Σ φ(g₁)ψ(g₂)` from the formal coproduct of each generator.
    pub fn convolution(&self, phi: &FamilyCharacter, psi: &FamilyCharacter) -> Result<FamilyCharacter> {
        let top = self.top();
        let mut values = Vec::with_capacity(phi.values.len());
        for g in 0..phi.values.len() {
            let mut acc = self.field().zero();
            for (c, l, r) in &top.hopf.comul.get(g, false)?.terms {
                acc = &acc + &(&(c * &phi.eval_word(l)?) * &psi.eval_word(r)?);
            }
            values.push(acc);
        }
        let out = FamilyCharacter { names: phi.names.clone(), values };
        top.check_relators(&out)?;
        Ok(out)
    }

    fn order_of(&self, chi: &FamilyCharacter, cap: u64) -> Result<Option<u64>> {
        let eps = self.counit_character();
        let mut power = chi.clone();
        for n in 1..=cap {
            if power == eps {
                return Ok(Some(n));
            }
            power = self.convolution(&power, chi)?;
        }
        Ok(None)
    }

    /// Convolution order of the integral character; `None` past `cap`.
    pub fn integral_order(&self, cap: u64) -> Result<Option<u64>> {
        let chi = self.integral_character()?;
        let sigma = self.compose_antipode(&chi)?;
        if self.convolution(&chi, &sigma)? != self.counit_character() {
            return Err(Error::ConsistencyFailure("χ∘S is not the convolution inverse of χ".into()));
        }
        self.order_of(&chi, cap)
    }

    /// `{(Σʳ)^{*t} : 0 ≤ t < io}`.
    pub fn clique_of_trivial(&self, cap: u64) -> Result<Vec<FamilyCharacter>> {
        let io = self.integral_order(cap)?.ok_or(Error::OrderInfinite)?;
        let sigma = self.sigma_right()?;
        let mut out = vec![self.counit_character()];
        for _ in 1..io {
            let next = self.convolution(out.last().expect("nonempty"), &sigma)?;
            out.push(next);
        }
        if self.convolution(out.last().expect("nonempty"), &sigma)? != out[0] {
            return Err(Error::ConsistencyFailure("orbit of Σʳ does not close".into()));
        }
        Ok(out)
    }

    fn eval_on_monomial(&self, chi: &FamilyCharacter, m: &Monomial) -> Result<Scalar> {
        chi.eval_word(&self.top().algebra.monomial_word(m))
    }

    /// `dim H/J_iq`: rank of the clique characters on a growing set of
    /// basis monomials, which stabilizes once all of them are separated.
    pub fn integral_quotient_dim(&self, cap: u64) -> Result<usize> {
        let chars = self.clique_of_trivial(cap)?;
        let alg = &self.top().algebra;
        let mut rank = 0;
        for degree in 0..=(chars.len() as u32 + 2) {
            let monomials = alg.monomials_up_to(degree);
            let rows = chars
                .iter()
                .map(|c| monomials.iter().map(|m| self.eval_on_monomial(c, m)).collect::<Result<Vector>>())
                .collect::<Result<Vec<_>>>()?;
            rank = Matrix::from_rows(self.field(), monomials.len(), rows)?.rank();
            if rank == chars.len() {
                break;
            }
        }
        Ok(rank)
    }

    /// `σ_π(g) = Σ g₁ π(g₂)` on generators and declared inverses.
    pub fn winding_images(&self, pi: &FamilyCharacter) -> Result<GenMap<Expr>> {
        let top = self.top();
        let image = |t: &TensorExpr| -> Result<Expr> {
            let mut e = Expr::zero();
            for (c, l, r) in &t.terms {
                e = e.plus(Expr::word(top.field(), l).scaled(&(c * &pi.eval_word(r)?)));
            }
            Ok(e)
        };
        let images = top.hopf.comul.images.iter().map(image).collect::<Result<Vec<_>>>()?;
        let inverse_images = top
            .hopf
            .comul
            .inverse_images
            .iter()
            .map(|t| t.as_ref().map(image).transpose())
            .collect::<Result<Vec<_>>>()?;
        Ok(GenMap::new(images, inverse_images))
    }

    fn truncation_data(&self, s: usize) -> Result<(Vec<Monomial>, Vec<Monomial>)> {
        if s == 0 {
            return Err(Error::InvalidParams { preset: self.name.clone(), reason: "truncation level must be positive".into() });
        }
        self.top().algebra.truncation(s).ok_or_else(|| Error::TruncationUndeclared(self.name.clone()))
    }

    /// `H/K_s` for the declared monomial ideal `K_s`, with the winding
    /// automorphisms of the clique of `ε` descended to it.
    pub fn truncate(&self, s: usize, cap: u64) -> Result<Truncation> {
        let (basis, killed) = self.truncation_data(s)?;
        let top = self.top();
        let field = self.field().clone();
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let outside = |p: &Poly| p.keys().all(|m| !index.contains_key(m));
        let coords = |p: &Poly| {
            let mut v = zero_vector(&field, basis.len());
            for (m, c) in p {
                if let Some(&i) = index.get(m) {
                    v[i] = c.clone();
                }
            }
            v
        };

        // The killed span must be an ideal.
        for k in &killed {
            let kp = crate::monomial::monomial_poly(&field, k.clone());
            for g in 0..top.names().len() {
                let gp = top.nf(&Expr::generator(&field, g))?;
                let ring = PolyRing(top.alg());
                let left = crate::monomial::Ring::mul(&ring, &gp, &kp);
                let right = crate::monomial::Ring::mul(&ring, &kp, &gp);
                if !outside(&left) || !outside(&right) {
                    return Err(Error::ConsistencyFailure("truncation kernel is not an ideal".into()));
                }
            }
        }

        let mut entries = Vec::new();
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                for (k, c) in coords(&top.algebra.mul_monomials(a, b)).into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        let labels = basis.iter().map(|m| top.algebra.monomial_label(m)).collect();
        let unit = coords(&crate::monomial::monomial_poly(&field, top.algebra.one_monomial()));
        let algebra = FiniteAlgebra::new(&field, labels, unit, entries)?;
        if algebra.associativity_witness().is_some() || algebra.unit_witness().is_some() {
            return Err(Error::ConsistencyFailure("truncation is not an associative unital algebra".into()));
        }

        let mut windings = Vec::new();
        for pi in self.clique_of_trivial(cap)? {
            let images = self.winding_images(&pi)?;
            let apply = |m: &Monomial| top.apply_endo(&images, &Expr::word(&field, &top.algebra.monomial_word(m)));
            for k in &killed {
                if !outside(&apply(k)?) {
                    return Err(Error::ConsistencyFailure("winding does not preserve the truncation kernel".into()));
                }
            }
            let columns = basis.iter().map(|m| Ok(coords(&apply(m)?))).collect::<Result<Vec<_>>>()?;
            let matrix = Matrix::from_columns(&field, basis.len(), &columns)?;
            algebra
                .check_automorphism(&matrix)
                .map_err(|e| Error::ConsistencyFailure(format!("descended winding: {e}")))?;
            windings.push(matrix);
        }
        Ok(Truncation { algebra, basis, windings })
    }

    /// The truncation with Δ, ε, S induced from the generators. Only a Hopf
    /// algebra when the killed ideal is a Hopf ideal; callers verify axioms.
    pub fn truncated_hopf(&self, s: usize) -> Result<FiniteHopfAlgebra> {
        let (basis, _) = self.truncation_data(s)?;
        let top = self.top();
        let field = self.field().clone();
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let coords = |p: &Poly| {
            let mut v = zero_vector(&field, basis.len());
            for (m, c) in p {
                if let Some(&i) = index.get(m) {
                    v[i] = c.clone();
                }
            }
            v
        };
        let mut entries = Vec::new();
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                for (k, c) in coords(&top.algebra.mul_monomials(a, b)).into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        let labels = basis.iter().map(|m| top.algebra.monomial_label(m)).collect();
        let unit = coords(&crate::monomial::monomial_poly(&field, top.algebra.one_monomial()));
        let algebra = FiniteAlgebra::new(&field, labels, unit, entries)?;

        let mut comul = Vec::new();
        let mut counit = Vec::new();
        let mut columns = Vec::new();
        for (i, m) in basis.iter().enumerate() {
            let word = top.algebra.monomial_word(m);
            let e = Expr::word(&field, &word);
            for ((a, b), c) in top.comul(&e)? {
                if let (Some(&j), Some(&k)) = (index.get(&a), index.get(&b)) {
                    comul.push((i, j, k, c));
                }
            }
            counit.push(top.counit_of(&e)?);
            columns.push(coords(&top.antipode_of_word(&word)?));
        }
        let antipode = Matrix::from_columns(&field, basis.len(), &columns)?;
        FiniteHopfAlgebra::new(algebra, comul, counit, antipode)
    }

    /// For each step, whether left and right multiplication by `w` are
    /// injective on the span of the basis monomials up to `degree`. This is
    /// evidence for, not a proof of, `w` being a non-zero-divisor.
    pub fn non_zero_divisor_evidence(&self, degree: u32) -> Result<Vec<bool>> {
        let mut out = Vec::new();
        for step in &self.steps {
            let field = step.field().clone();
            let monomials = step.algebra.monomials_up_to(degree);
            let mut ok = true;
            for left in [true, false] {
                let images = monomials
                    .iter()
                    .map(|m| {
                        let me = Expr::word(&field, &step.algebra.monomial_word(m));
                        let e = if left { step.normal_element.times(&me) } else { me.times(&step.normal_element) };
                        step.nf(&e)
                    })
                    .collect::<Result<Vec<Poly>>>()?;
                let mut support: Vec<&Monomial> = images.iter().flat_map(|p| p.keys()).collect();
                support.sort();
                support.dedup();
                let pos: HashMap<&Monomial, usize> = support.iter().enumerate().map(|(i, m)| (*m, i)).collect();
                let cols: Vec<Vector> = images
                    .iter()
                    .map(|p| {
                        let mut v = zero_vector(&field, support.len());
                        for (m, c) in p {
                            v[pos[m]] = c.clone();
                        }
                        v
                    })
                    .collect();
                let rank = if support.is_empty() { 0 } else { Matrix::from_columns(&field, support.len(), &cols)?.rank() };
                ok &= rank == monomials.len();
            }
            out.push(ok);
        }
        Ok(out)
    }
}
