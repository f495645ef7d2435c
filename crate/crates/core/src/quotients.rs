//! Hopf quotients: Hopf ideal checks, the abelianization, the integral
//! quotient `H_iq` and coinvariant subalgebras.

use crate::algebra::{FiniteAlgebra, Ideal};
use crate::error::{Error, Result};
use crate::hopf::{hopf_morphism_failure, Character, FiniteHopfAlgebra};
use crate::integrals::{integral_order, winding_group, IntegralData};
use crate::linalg::{dot, joint_kernel, zero_vector, Matrix, Subspace, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfQuotient {
    pub quotient: FiniteHopfAlgebra,
    /// Columns are the images of the basis of `H`.
    pub projection: Matrix,
    pub kernel: Ideal,
}

impl HopfQuotient {
    pub fn project(&self, v: &[Scalar]) -> Vector {
        self.projection.apply(v).expect("projection shape")
    }

    /// A character of `H` vanishing on the kernel, seen on the quotient.
    pub fn descend_character(&self, chi: &Character) -> Result<Character> {
        let space = self.kernel.space();
        if space.basis().iter().any(|v| !dot(chi.values(), v).is_zero()) {
            return Err(Error::NotACharacter("does not vanish on the kernel".into()));
        }
        let values = space.complement_indices().iter().map(|&c| chi.values()[c].clone()).collect();
        self.quotient.character(values)
    }
}

/// `(π⊗π)Δ(v)` for the coordinate projection `π`, as a dense `q²` vector.
fn pushed_coproduct(h: &FiniteHopfAlgebra, projection: &Matrix, v: &[Scalar]) -> Vector {
    let q = projection.rows();
    let mut out = zero_vector(h.field(), q * q);
    for ((j, k), c) in h.coproduct(v) {
        let pj = projection.column(j);
        let pk = projection.column(k);
        for (a, x) in pj.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let cx = &c * x;
            for (b, y) in pk.iter().enumerate() {
                if !y.is_zero() {
                    out[a * q + b] = &out[a * q + b] + &(&cx * y);
                }
            }
        }
    }
    out
}

/// Whether `I` is a Hopf ideal: `ε(I) = 0`, `S(I) ⊆ I` and
/// `Δ(I) ⊆ I⊗H + H⊗I`. The last condition is tested as `(π⊗π)Δ(v) = 0`,
/// since `I⊗H + H⊗I` is exactly the kernel of `π⊗π`.
pub fn hopf_ideal_check(h: &FiniteHopfAlgebra, ideal: &Ideal) -> bool {
    let space = ideal.space();
    let basis = space.basis();
    if basis.iter().any(|v| !h.counit_of(v).is_zero()) {
        return false;
    }
    if basis.iter().any(|v| !space.contains(&h.apply_antipode(v))) {
        return false;
    }
    if basis.is_empty() {
        return true;
    }
    let (_, projection) = match h.algebra().quotient(ideal) {
        Ok(q) => q,
        Err(_) => return false,
    };
    basis
        .iter()
        .all(|v| crate::linalg::is_zero_vector(&pushed_coproduct(h, &projection, v)))
}

/// `H/I` with the inherited Hopf structure, for a Hopf ideal `I`.
pub fn hopf_quotient(h: &FiniteHopfAlgebra, ideal: Ideal) -> Result<HopfQuotient> {
    if !hopf_ideal_check(h, &ideal) {
        return Err(Error::NotHopfIdeal);
    }
    let (algebra, projection): (FiniteAlgebra, Matrix) = h.algebra().quotient(&ideal)?;
    let keep = ideal.space().complement_indices();
    let q = keep.len();
    let mut comul = Vec::new();
    for (a, &c) in keep.iter().enumerate() {
        let pushed = pushed_coproduct(h, &projection, &crate::linalg::unit_vector(h.field(), h.dim(), c));
        for (idx, x) in pushed.into_iter().enumerate() {
            if !x.is_zero() {
                comul.push((a, idx / q, idx % q, x));
            }
        }
    }
    let counit: Vector = keep.iter().map(|&c| h.counit()[c].clone()).collect();
    let columns: Vec<Vector> = keep
        .iter()
        .map(|&c| projection.apply(&h.antipode().column(c)).expect("shape"))
        .collect();
    let antipode = Matrix::from_columns(h.field(), q, &columns)?;
    let quotient = FiniteHopfAlgebra::new(algebra, comul, counit, antipode)?;
    if let Some(why) = hopf_morphism_failure(&projection, h, &quotient) {
        return Err(Error::ConsistencyFailure(format!("quotient map: {why}")));
    }
    Ok(HopfQuotient { quotient, projection, kernel: ideal })
}

/// `H_ab = H / (commutators)`.
pub fn abelianization(h: &FiniteHopfAlgebra) -> Result<HopfQuotient> {
    let q = hopf_quotient(h, h.algebra().commutator_ideal())?;
    debug_assert!(q.quotient.algebra().is_commutative());
    Ok(q)
}

/// `H_iq = H / J_iq` with `J_iq = ∩_{i < io} ker (Σʳ)^{*i}`.
pub fn integral_quotient(h: &FiniteHopfAlgebra, data: &IntegralData, cap: u64) -> Result<HopfQuotient> {
    let io = integral_order(h, data, cap)?.ok_or(Error::OrderInfinite)?;
    let mut powers = Vec::new();
    let mut power = h.counit_character();
    for _ in 0..io {
        powers.push(power.values().to_vec());
        power = h.convolution(&power, &data.sigma_right)?;
    }
    let kernel = Subspace::span(h.field(), h.dim(), powers).annihilator();
    let ideal = Ideal::from_subspace(h.algebra(), kernel).map_err(|_| Error::NotHopfIdeal)?;
    let q = hopf_quotient(h, ideal)?;
    if q.quotient.dim() as u64 != io || !q.quotient.algebra().is_commutative() {
        return Err(Error::ConsistencyFailure("integral quotient has the wrong shape".into()));
    }
    Ok(q)
}

/// Whether the characters of `H_iq` obtained from `Σʳ` form a cyclic group
/// of order `dim H_iq` (a commutative algebra of that dimension has no
/// other characters).
pub fn iq_character_group_is_cyclic(q: &HopfQuotient, data: &IntegralData, cap: u64) -> Result<bool> {
    let generator = q.descend_character(&data.sigma_right)?;
    Ok(q.quotient.convolution_order(&generator, cap)? == Some(q.quotient.dim() as u64))
}

/// Right coinvariants `{h : (id⊗π)Δ(h) = h⊗π(1)}`.
pub fn coinvariants(h: &FiniteHopfAlgebra, q: &HopfQuotient) -> Result<Subspace> {
    let n = h.dim();
    let m = q.quotient.dim();
    let one_bar = q.project(h.algebra().unit());
    let space = joint_kernel(h.field(), n, 1, |_, v| {
        let mut out = zero_vector(h.field(), n * m);
        for ((j, k), c) in h.coproduct(v) {
            for (b, y) in q.projection.column(k).iter().enumerate() {
                out[j * m + b] = &out[j * m + b] + &(&c * y);
            }
        }
        for (j, x) in v.iter().enumerate() {
            for (b, y) in one_bar.iter().enumerate() {
                out[j * m + b] = &out[j * m + b] - &(x * y);
            }
        }
        out
    });
    if !h.algebra().is_subalgebra(&space) {
        return Err(Error::ConsistencyFailure("coinvariants are not a unital subalgebra".into()));
    }
    Ok(space)
}

/// Fixed points of the winding group `{σ_{(Σʳ)^{*i}}}`.
pub fn winding_fixed_points(h: &FiniteHopfAlgebra, data: &IntegralData, io: u64) -> Result<Subspace> {
    let group = winding_group(h, &data.sigma_right, io)?;
    h.algebra().fixed_subalgebra(&group)
}
