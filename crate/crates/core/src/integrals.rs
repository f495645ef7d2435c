//! Integrals of finite-dimensional Hopf algebras and the invariants read
//! off from them: distinguished characters, integral order, winding
//! automorphisms, unimodularity and Maschke-type tests.

use crate::error::{Error, Result};
use crate::hopf::{Character, FiniteHopfAlgebra};
use crate::linalg::{dot, joint_kernel, sub_vectors, Matrix, Subspace, Vector};
use crate::scalar::Scalar;

/// Left and right integrals with the characters by which `H` acts on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralData {
    /// `h·t_l = ε(h) t_l`
    pub left: Vector,
    /// `t_r·h = ε(h) t_r`
    pub right: Vector,
    /// `t_l·h = α_l(h) t_l`
    pub alpha_left: Character,
    /// `h·t_r = Σʳ(h) t_r`
    pub sigma_right: Character,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaschkeReport {
    pub epsilon_of_integral: Scalar,
    pub semisimple_by_integral: bool,
    /// `None` when the radical cannot be computed in this characteristic.
    pub radical_dim: Option<usize>,
    pub cond1_holds: bool,
    pub cond2_holds: bool,
    /// Number of characters (1-dimensional simples) Cond2 was checked on.
    pub cond2_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodeReport {
    pub order: Option<u64>,
    pub squared_is_identity: bool,
}

/// Space annihilated by `v ↦ act(i, v) − χ(e_i)·v` for every basis `e_i`.
fn eigenspace<F>(h: &FiniteHopfAlgebra, chi: &[Scalar], act: F) -> Subspace
where
    F: Fn(usize, &[Scalar]) -> Vector + Sync + Send,
{
    joint_kernel(h.field(), h.dim(), h.dim(), |i, v| {
        let scaled: Vector = v.iter().map(|x| x * &chi[i]).collect();
        sub_vectors(&act(i, v), &scaled)
    })
}

/// Reads off the scalar by which each basis element acts on `t`.
fn action_character<F>(h: &FiniteHopfAlgebra, t: &[Scalar], act: F, what: &str) -> Result<Character>
where
    F: Fn(usize, &[Scalar]) -> Vector,
{
    let pivot = t.iter().position(|x| !x.is_zero()).expect("integral is nonzero");
    let mut values = Vec::with_capacity(h.dim());
    for i in 0..h.dim() {
        let image = act(i, t);
        let c = &image[pivot] / &t[pivot];
        if image.iter().zip(t).any(|(a, b)| *a != b * &c) {
            return Err(Error::ConsistencyFailure(format!("{what} is not an eigenvector of {}", h.labels()[i])));
        }
        values.push(c);
    }
    h.character(values)
}

pub fn compute_integrals(h: &FiniteHopfAlgebra) -> Result<IntegralData> {
    let alg = h.algebra();
    let eps = h.counit().clone();
    let left_space = eigenspace(h, &eps, |i, v| alg.basis_times(i, v));
    let right_space = eigenspace(h, &eps, |i, v| alg.times_basis(v, i));
    for space in [&left_space, &right_space] {
        if space.dim() != 1 {
            return Err(Error::IntegralDimNotOne(space.dim()));
        }
    }
    // Echelon rows already have a leading 1.
    let left = left_space.basis()[0].clone();
    let right = right_space.basis()[0].clone();
    let alpha_left = action_character(h, &left, |i, v| alg.times_basis(v, i), "left integral")?;
    let sigma_right = action_character(h, &right, |i, v| alg.basis_times(i, v), "right integral")?;
    Ok(IntegralData { left, right, alpha_left, sigma_right })
}

/// Matrix of `σ_π(h) = Σ h₁ π(h₂)`.
pub fn winding_automorphism(h: &FiniteHopfAlgebra, pi: &Character) -> Result<Matrix> {
    if !h.is_character(pi.values()) {
        return Err(Error::NotACharacter("winding needs a character".into()));
    }
    let n = h.dim();
    let columns: Vec<Vector> = (0..n)
        .map(|i| {
            let mut col = crate::linalg::zero_vector(h.field(), n);
            for (j, k, c) in h.comul_of(i) {
                col[*j] = &col[*j] + &(c * &pi.values()[*k]);
            }
            col
        })
        .collect();
    let m = Matrix::from_columns(h.field(), n, &columns)?;
    h.algebra()
        .check_automorphism(&m)
        .map_err(|e| Error::ConsistencyFailure(format!("winding map: {e}")))?;
    Ok(m)
}

/// The winding automorphisms of the convolution powers `π^{*i}`, `i < count`.
pub fn winding_group(h: &FiniteHopfAlgebra, pi: &Character, count: u64) -> Result<Vec<Matrix>> {
    let mut power = h.counit_character();
    let mut out = Vec::new();
    for _ in 0..count {
        out.push(winding_automorphism(h, &power)?);
        power = h.convolution(&power, pi)?;
    }
    Ok(out)
}

/// Order of `Σʳ` under convolution, cross-checked against the order of its
/// winding automorphism. `None` when it exceeds `cap`.
pub fn integral_order(h: &FiniteHopfAlgebra, data: &IntegralData, cap: u64) -> Result<Option<u64>> {
    let by_convolution = h.convolution_order(&data.sigma_right, cap)?;
    let by_winding = winding_automorphism(h, &data.sigma_right)?.order(cap)?;
    if by_convolution != by_winding {
        return Err(Error::ConsistencyFailure(format!(
            "integral order: convolution gives {by_convolution:?}, winding gives {by_winding:?}"
        )));
    }
    Ok(by_convolution)
}

pub fn is_unimodular(h: &FiniteHopfAlgebra, data: &IntegralData) -> Result<bool> {
    let eps = h.counit_character();
    let right = data.sigma_right == eps;
    let left = data.alpha_left == eps;
    if right != left {
        return Err(Error::ConsistencyFailure("left and right unimodularity disagree".into()));
    }
    Ok(right)
}

/// `Hom_H(M, N)` dimension data for 1-dimensional `M` with character `chi`
/// and `N = H`: the solution space `{v : e_i v = χ(e_i) v}`.
fn hom_into_regular(h: &FiniteHopfAlgebra, chi: &Character) -> Subspace {
    let alg = h.algebra();
    eigenspace(h, chi.values(), |i, v| alg.basis_times(i, v))
}

/// `dim Hom_H(T, k)` for a character `T`: 1 when `T = ε`, else 0, computed
/// as the solutions `c` of `(T(e_i) − ε(e_i))·c = 0`.
fn hom_into_trivial(h: &FiniteHopfAlgebra, chi: &Character) -> usize {
    joint_kernel(h.field(), 1, h.dim(), |i, c| vec![&(&chi.values()[i] - &h.counit()[i]) * &c[0]]).dim()
}

/// Whether `Hom_H(∫^r, H) → Hom_H(∫^r, k)`, composition with `ε`, is bijective.
pub fn cond1_holds(h: &FiniteHopfAlgebra, data: &IntegralData) -> bool {
    let source = hom_into_regular(h, &data.sigma_right);
    let target_dim = hom_into_trivial(h, &data.sigma_right);
    if source.dim() != target_dim {
        return false;
    }
    let images: Vec<Vector> = source.basis().iter().map(|v| vec![h.counit_of(v)]).collect();
    let rank = if images.is_empty() {
        0
    } else {
        Matrix::from_columns(h.field(), 1, &images).expect("1-row").rank()
    };
    rank == target_dim
}

/// Cond2 restricted to the given characters: `Hom_H(T, k) = 0` for every
/// listed `T` other than `Σʳ`.
pub fn cond2_holds_on(h: &FiniteHopfAlgebra, data: &IntegralData, characters: &[Character]) -> bool {
    characters
        .iter()
        .filter(|t| **t != data.sigma_right)
        .all(|t| hom_into_trivial(h, t) == 0)
}

/// The convolution powers of `Σʳ`, capped, starting from `ε`.
pub fn sigma_orbit(h: &FiniteHopfAlgebra, data: &IntegralData, cap: u64) -> Result<Vec<Character>> {
    let eps = h.counit_character();
    let mut out = vec![eps.clone()];
    let mut power = data.sigma_right.clone();
    while power != eps && (out.len() as u64) < cap {
        out.push(power.clone());
        power = h.convolution(&power, &data.sigma_right)?;
    }
    Ok(out)
}

pub fn maschke_report(h: &FiniteHopfAlgebra, data: &IntegralData, cap: u64) -> Result<MaschkeReport> {
    let epsilon_of_integral = h.counit_of(&data.right);
    let radical_dim = match h.algebra().jacobson_radical() {
        Ok(r) => Some(r.dim()),
        Err(Error::UnsupportedCharacteristic { .. }) => None,
        Err(e) => return Err(e),
    };
    let characters = sigma_orbit(h, data, cap)?;
    Ok(MaschkeReport {
        semisimple_by_integral: !epsilon_of_integral.is_zero(),
        epsilon_of_integral,
        radical_dim,
        cond1_holds: cond1_holds(h, data),
        cond2_holds: cond2_holds_on(h, data, &characters),
        cond2_checked: characters.len(),
    })
}

pub fn antipode_report(h: &FiniteHopfAlgebra, cap: u64) -> Result<AntipodeReport> {
    let s = h.antipode();
    Ok(AntipodeReport {
        order: s.order(cap)?,
        squared_is_identity: s.mul(s)?.is_identity(),
    })
}

/// `α_l = Σʳ ∘ S` on every basis element.
pub fn s_twist_identity_check(h: &FiniteHopfAlgebra, data: &IntegralData) -> bool {
    let s = h.antipode();
    (0..h.dim()).all(|i| data.alpha_left.values()[i] == dot(data.sigma_right.values(), &s.column(i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::fixtures::{cyclic_group, ints, sweedler};
    use crate::scalar::Field;

    #[test]
    fn group_algebra_integrals() {
        let q = Field::rational();
        let z3 = cyclic_group(&q, 3);
        let data = compute_integrals(&z3).unwrap();
        assert_eq!(data.left, ints(&q, &[1, 1, 1]));
        assert_eq!(data.right, data.left);
        assert_eq!(data.sigma_right, z3.counit_character());
        assert!(is_unimodular(&z3, &data).unwrap());
        assert_eq!(integral_order(&z3, &data, 100).unwrap(), Some(1));
    }

    #[test]
    fn sweedler_integrals() {
        let q = Field::rational();
        let sw = sweedler(&q);
        let data = compute_integrals(&sw).unwrap();
        assert_eq!(data.left, ints(&q, &[0, 0, 1, 1]));
        assert_eq!(data.right, ints(&q, &[0, 0, 1, -1]));
        assert_eq!(data.alpha_left.values(), &ints(&q, &[1, -1, 0, 0])[..]);
        assert_eq!(data.sigma_right.values(), &ints(&q, &[1, -1, 0, 0])[..]);
        assert!(!is_unimodular(&sw, &data).unwrap());
        assert_eq!(integral_order(&sw, &data, 100).unwrap(), Some(2));
        assert!(s_twist_identity_check(&sw, &data));
    }

    #[test]
    fn windings() {
        let q = Field::rational();
        let sw = sweedler(&q);
        let data = compute_integrals(&sw).unwrap();
        assert!(winding_automorphism(&sw, &sw.counit_character()).unwrap().is_identity());
        let w = winding_automorphism(&sw, &data.sigma_right).unwrap();
        assert_eq!(w.column(1), ints(&q, &[0, -1, 0, 0]));
        assert_eq!(w.column(2), ints(&q, &[0, 0, 1, 0]));
        let inv = winding_automorphism(&sw, &sw.character_inverse(&data.sigma_right).unwrap()).unwrap();
        assert!(w.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn maschke_triangle() {
        let q = Field::rational();
        let z3 = cyclic_group(&q, 3);
        let d = compute_integrals(&z3).unwrap();
        let m = maschke_report(&z3, &d, 100).unwrap();
        assert_eq!(m.epsilon_of_integral, q.from_i64(3));
        assert!(m.semisimple_by_integral && m.cond1_holds && m.cond2_holds);
        assert_eq!(m.radical_dim, Some(0));

        let sw = sweedler(&q);
        let d = compute_integrals(&sw).unwrap();
        let m = maschke_report(&sw, &d, 100).unwrap();
        assert!(m.epsilon_of_integral.is_zero());
        assert!(!m.semisimple_by_integral && !m.cond1_holds);
        assert_eq!(m.radical_dim, Some(2));
        // ε is listed and differs from Σʳ, so Hom(ε, k) ≠ 0.
        assert!(!m.cond2_holds);
        assert_eq!(m.cond2_checked, 2);

        let f2 = Field::prime(2).unwrap();
        let z2 = cyclic_group(&f2, 2);
        let d = compute_integrals(&z2).unwrap();
        let m = maschke_report(&z2, &d, 100).unwrap();
        assert_eq!(m.radical_dim, None);
        assert!(!m.semisimple_by_integral && !m.cond1_holds);
    }

    #[test]
    fn antipode_orders() {
        let q = Field::rational();
        let r = antipode_report(&cyclic_group(&q, 4), 100).unwrap();
        assert!(r.squared_is_identity);
        assert_eq!(r.order, Some(2));
        let r = antipode_report(&sweedler(&q), 100).unwrap();
        assert_eq!(r.order, Some(4));
        assert!(!r.squared_is_identity);
    }

    #[test]
    fn tensor_characters_multiply() {
        let q = Field::rational();
        let sw = sweedler(&q);
        let z2 = cyclic_group(&q, 2);
        let t = sw.tensor(&z2).unwrap();
        let (a, b) = (compute_integrals(&sw).unwrap(), compute_integrals(&z2).unwrap());
        let d = compute_integrals(&t).unwrap();
        assert_eq!(d.sigma_right, t.tensor_character(&a.sigma_right, &b.sigma_right));
        assert_eq!(integral_order(&t, &d, 100).unwrap(), Some(2));
    }

    #[test]
    fn zero_counit_has_no_integrals() {
        let q = Field::rational();
        let sw = sweedler(&q);
        let comul: Vec<_> = sw.comul_entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        let bad = FiniteHopfAlgebra::new(sw.algebra().clone(), comul, ints(&q, &[0, 0, 0, 0]), sw.antipode().clone())
            .unwrap();
        assert_eq!(compute_integrals(&bad).unwrap_err(), Error::IntegralDimNotOne(0));
    }
}
