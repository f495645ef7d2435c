//! Finite-dimensional Hopf algebras: coproduct, counit and antipode on top of
//! a [`FiniteAlgebra`], axiom checks, tensor products, duals and characters.

use std::collections::BTreeMap;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{dot, unit_vector, zero_vector, Matrix, Vector};
use crate::par;
use crate::scalar::{Field, Scalar};

/// Sparse element of `H ⊗ H`, keyed by basis pairs.
pub type Tensor2 = BTreeMap<(usize, usize), Scalar>;

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteHopfAlgebra {
    algebra: FiniteAlgebra,
    comul: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vector,
    antipode: Matrix,
}

/// One named axiom with the first witness of failure, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failure.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| c.failure.is_some())
    }

    pub fn passed(&self, name: &str) -> bool {
        self.checks.iter().any(|c| c.name == name && c.failure.is_none())
    }
}

/// An algebra map `H → k`, stored by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character(Vector);

impl Character {
    pub fn values(&self) -> &[Scalar] {
        &self.0
    }

    pub fn eval(&self, v: &[Scalar]) -> Scalar {
        dot(&self.0, v)
    }

    pub fn into_values(self) -> Vector {
        self.0
    }
}

impl FiniteHopfAlgebra {
    /// Assembles a Hopf algebra from its pieces. `comul` entries
    /// `(i, j, k, c)` mean `Δ(e_i) ∋ c·e_j⊗e_k`; column `i` of `antipode`
    /// is `S(e_i)`. No axioms are checked here, see [`Self::verify_axioms`].
    pub fn new<I>(algebra: FiniteAlgebra, comul: I, counit: Vector, antipode: Matrix) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let n = algebra.dim();
        let field = algebra.field().clone();
        if counit.len() != n {
            return Err(Error::DimMismatch { expected: n, got: counit.len() });
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::DimMismatch {
                expected: n,
                got: antipode.rows().max(antipode.cols()),
            });
        }
        if antipode.field() != &field {
            return Err(Error::FieldMismatch(field.to_string(), antipode.field().to_string()));
        }
        let mut maps: Vec<Tensor2> = vec![BTreeMap::new(); n];
        for (i, j, k, c) in comul {
            if i >= n || j >= n || k >= n {
                return Err(Error::DimMismatch { expected: n, got: i.max(j).max(k) + 1 });
            }
            if c.field() != &field {
                return Err(Error::FieldMismatch(field.to_string(), c.field().to_string()));
            }
            accumulate(&mut maps[i], (j, k), c);
        }
        let comul = maps
            .into_iter()
            .map(|m| m.into_iter().map(|((j, k), c)| (j, k, c)).collect())
            .collect();
        Ok(FiniteHopfAlgebra { algebra, comul, counit, antipode })
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn comul_of(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comul[i]
    }

    pub fn comul_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        self.comul
            .iter()
            .enumerate()
            .flat_map(|(i, v)| v.iter().map(move |(j, k, c)| (i, *j, *k, c)))
    }

    /// Same data with a different antipode matrix.
    pub fn with_antipode(&self, antipode: Matrix) -> Result<Self> {
        let entries: Vec<_> = self.comul_entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        FiniteHopfAlgebra::new(self.algebra.clone(), entries, self.counit.clone(), antipode)
    }

    pub fn coproduct(&self, v: &[Scalar]) -> Tensor2 {
        let mut out = Tensor2::new();
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comul[i] {
                accumulate(&mut out, (*j, *k), x * c);
            }
        }
        out
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        dot(&self.counit, v)
    }

    pub fn apply_antipode(&self, v: &[Scalar]) -> Vector {
        self.antipode.apply(v).expect("antipode is square")
    }

    /// Product in `H ⊗ H`.
    pub fn tensor_mul(&self, a: &Tensor2, b: &Tensor2) -> Tensor2 {
        let alg = &self.algebra;
        let mut out = Tensor2::new();
        for ((a1, a2), c) in a {
            for ((b1, b2), d) in b {
                let cd = c * d;
                for (k1, c1) in alg.basis_product(*a1, *b1) {
                    let s = &cd * c1;
                    for (k2, c2) in alg.basis_product(*a2, *b2) {
                        accumulate(&mut out, (*k1, *k2), &s * c2);
                    }
                }
            }
        }
        out
    }

    /// Dense coordinates of a tensor, with index `j·dim + k`.
    pub fn tensor_to_vector(&self, t: &Tensor2) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(self.field(), n * n);
        for ((j, k), c) in t {
            out[j * n + k] = c.clone();
        }
        out
    }

    fn label(&self, i: usize) -> &str {
        &self.labels()[i]
    }

    fn coassociativity_failure(&self, i: usize) -> Option<String> {
        let mut left: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        let mut right: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (j, k, c) in &self.comul[i] {
            for (a, b, d) in &self.comul[*j] {
                accumulate(&mut left, (*a, *b, *k), c * d);
            }
            for (a, b, d) in &self.comul[*k] {
                accumulate(&mut right, (*j, *a, *b), c * d);
            }
        }
        (left != right).then(|| format!("at {}", self.label(i)))
    }

    fn counit_failure(&self, i: usize) -> Option<String> {
        let n = self.dim();
        let mut left = zero_vector(self.field(), n);
        let mut right = zero_vector(self.field(), n);
        for (j, k, c) in &self.comul[i] {
            left[*k] = &left[*k] + &(&self.counit[*j] * c);
            right[*j] = &right[*j] + &(&self.counit[*k] * c);
        }
        let e = unit_vector(self.field(), n, i);
        (left != e || right != e).then(|| format!("at {}", self.label(i)))
    }

    /// First pair `(rows[r], j)` failing `check`, over every `j`.
    fn pairwise<F>(&self, rows: &[usize], check: F) -> Option<String>
    where
        F: Fn(usize, usize) -> bool + Sync + Send,
    {
        let n = self.dim();
        par::find_map_first(rows.len(), |r| {
            let i = rows[r];
            (0..n)
                .find(|&j| !check(i, j))
                .map(|j| format!("at ({}, {})", self.label(i), self.label(j)))
        })
    }

    fn basis_product_vector(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vector(self.field(), self.dim());
        for (k, c) in self.algebra.basis_product(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// Checks every Hopf algebra axiom exactly. Failures carry the first
    /// offending basis element(s).
    pub fn verify_axioms(&self) -> AxiomReport {
        let n = self.dim();
        let field = self.field();
        let alg = &self.algebra;
        let one = alg.unit().clone();
        let mut checks = Vec::new();
        let mut push = |name: &'static str, failure: Option<String>| checks.push(AxiomCheck { name, failure });

        push("unit", alg.unit_witness().map(|i| format!("at {}", self.label(i))));
        let assoc = alg.associativity_witness();
        // Once the product is associative and Δ, ε, S fix the unit, each
        // multiplicativity law follows from the pairs (g, e_j) with g in an
        // algebra generating set, by induction on word length.
        let rows: Vec<usize> = match assoc {
            None => alg.generating_basis_elements(),
            Some(_) => (0..n).collect(),
        };
        push("associativity", assoc.map(|(i, j, k)| format!("at ({}, {}, {})", self.label(i), self.label(j), self.label(k))));
        push("coassociativity", par::find_map_first(n, |i| self.coassociativity_failure(i)));
        push("counit", par::find_map_first(n, |i| self.counit_failure(i)));

        let counit_mult = if self.counit_of(&one) != field.one() {
            Some("ε(1) ≠ 1".to_string())
        } else {
            self.pairwise(&rows, |i, j| self.counit_of(&self.basis_product_vector(i, j)) == &self.counit[i] * &self.counit[j])
        };
        push("counit multiplicative", counit_mult);

        let coproducts: Vec<Tensor2> = par::map_range(n, |i| self.coproduct(&unit_vector(field, n, i)));
        let mut one_one = Tensor2::new();
        for (a, x) in one.iter().enumerate() {
            for (b, y) in one.iter().enumerate() {
                accumulate(&mut one_one, (a, b), x * y);
            }
        }
        let comul_mult = if self.coproduct(&one) != one_one {
            Some("Δ(1) ≠ 1⊗1".to_string())
        } else {
            self.pairwise(&rows, |i, j| {
                self.coproduct(&self.basis_product_vector(i, j)) == self.tensor_mul(&coproducts[i], &coproducts[j])
            })
        };
        push("coproduct multiplicative", comul_mult);

        let columns: Vec<Vector> = (0..n).map(|j| self.antipode.column(j)).collect();
        let antipode_axiom = par::find_map_first(n, |i| {
            let mut left = zero_vector(field, n);
            let mut right = zero_vector(field, n);
            for (j, k, c) in &self.comul[i] {
                let l = alg.times_basis(&columns[*j], *k);
                let r = alg.basis_times(*j, &columns[*k]);
                for t in 0..n {
                    left[t] = &left[t] + &(c * &l[t]);
                    right[t] = &right[t] + &(c * &r[t]);
                }
            }
            let expected: Vector = one.iter().map(|u| u * &self.counit[i]).collect();
            (left != expected || right != expected).then(|| format!("at {}", self.label(i)))
        });
        push("antipode axiom", antipode_axiom);

        let anti = if self.apply_antipode(&one) != one {
            Some("S(1) ≠ 1".to_string())
        } else {
            self.pairwise(&rows, |i, j| {
                self.apply_antipode(&self.basis_product_vector(i, j)) == alg.mul(&columns[j], &columns[i])
            })
        };
        push("antipode anti-multiplicative", anti);
        AxiomReport { checks }
    }

    /// `H ⊗ K` with basis index `i·dim(K) + a` and the middle swap in Δ.
    pub fn tensor(&self, other: &FiniteHopfAlgebra) -> Result<FiniteHopfAlgebra> {
        let algebra = self.algebra.tensor(&other.algebra)?;
        let m = other.dim();
        let mut comul = Vec::new();
        for (i, j, k, c) in self.comul_entries() {
            for (a, b, d, e) in other.comul_entries() {
                comul.push((i * m + a, j * m + b, k * m + d, c * e));
            }
        }
        let counit = self
            .counit
            .iter()
            .flat_map(|x| other.counit.iter().map(move |y| x * y))
            .collect();
        let antipode = self.antipode.kronecker(&other.antipode)?;
        FiniteHopfAlgebra::new(algebra, comul, counit, antipode)
    }

    /// The dual Hopf algebra on the dual basis `e^i`, labelled `label*`.
    pub fn dual(&self) -> FiniteHopfAlgebra {
        let field = self.field();
        let labels = self.labels().iter().map(|l| format!("{l}*")).collect();
        let products: Vec<_> = self.comul_entries().map(|(i, j, k, c)| (j, k, i, c.clone())).collect();
        let algebra = FiniteAlgebra::new(field, labels, self.counit.clone(), products).expect("dual dims agree");
        let comul: Vec<_> = self
            .algebra
            .structure_constants()
            .map(|(i, j, k, c)| (k, i, j, c.clone()))
            .collect();
        FiniteHopfAlgebra::new(algebra, comul, self.algebra.unit().clone(), self.antipode.transpose())
            .expect("dual dims agree")
    }

    pub fn base_change(&self, target: &Field) -> Result<FiniteHopfAlgebra> {
        if !target.extends(self.field()) {
            return Err(Error::IncompatibleExtension {
                from: self.field().to_string(),
                to: target.to_string(),
            });
        }
        let algebra = self.algebra.base_change(target)?;
        let comul = self
            .comul_entries()
            .map(|(i, j, k, c)| Ok((i, j, k, target.embed(c)?)))
            .collect::<Result<Vec<_>>>()?;
        let embed_vec = |v: &[Scalar]| v.iter().map(|x| target.embed(x)).collect::<Result<Vector>>();
        let counit = embed_vec(&self.counit)?;
        let rows = self.antipode.row_vectors().iter().map(|r| embed_vec(r)).collect::<Result<Vec<_>>>()?;
        let antipode = Matrix::from_rows(target, self.dim(), rows)?;
        FiniteHopfAlgebra::new(algebra, comul, counit, antipode)
    }

    /// Equality of all structure constants, ignoring basis labels.
    pub fn same_structure(&self, other: &FiniteHopfAlgebra) -> bool {
        self.dim() == other.dim()
            && self.field() == other.field()
            && self.algebra.unit() == other.algebra.unit()
            && self.algebra.structure_constants().eq(other.algebra.structure_constants())
            && self.comul == other.comul
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim()).all(|i| {
            let mut flipped: Vec<_> = self.comul[i].iter().map(|(j, k, c)| (*k, *j, c.clone())).collect();
            flipped.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
            flipped == self.comul[i]
        })
    }

    pub fn is_character(&self, phi: &[Scalar]) -> bool {
        let n = self.dim();
        if phi.len() != n || dot(phi, self.algebra.unit()) != self.field().one() {
            return false;
        }
        par::find_map_first(n, |i| {
            (0..n)
                .find(|&j| dot(phi, &self.basis_product_vector(i, j)) != &phi[i] * &phi[j])
                .map(|_| ())
        })
        .is_none()
    }

    pub fn character(&self, phi: Vector) -> Result<Character> {
        if self.is_character(&phi) {
            Ok(Character(phi))
        } else {
            Err(Error::NotACharacter(format!("({})", phi.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))))
        }
    }

    pub fn counit_character(&self) -> Character {
        Character(self.counit.clone())
    }

    /// `(φ*ψ)(e_i) = Σ d_i^{jk} φ(e_j) ψ(e_k)`.
    pub fn convolution(&self, phi: &Character, psi: &Character) -> Result<Character> {
        let values = (0..self.dim())
            .map(|i| {
                let mut acc = self.field().zero();
                for (j, k, c) in &self.comul[i] {
                    acc = &acc + &(&(c * &phi.0[*j]) * &psi.0[*k]);
                }
                acc
            })
            .collect();
        self.character(values)
    }

    /// Convolution inverse `φ∘S`.
    pub fn character_inverse(&self, phi: &Character) -> Result<Character> {
        let values = (0..self.dim()).map(|i| dot(&phi.0, &self.antipode.column(i))).collect();
        self.character(values)
    }

    pub fn character_power(&self, phi: &Character, n: u64) -> Result<Character> {
        let mut acc = self.counit_character();
        for _ in 0..n {
            acc = self.convolution(&acc, phi)?;
        }
        Ok(acc)
    }

    /// Smallest `n ≥ 1` with `φ^{*n} = ε`, or `None` past `cap`.
    pub fn convolution_order(&self, phi: &Character, cap: u64) -> Result<Option<u64>> {
        let eps = self.counit_character();
        let mut power = phi.clone();
        for n in 1..=cap {
            if power == eps {
                return Ok(Some(n));
            }
            power = self.convolution(&power, phi)?;
        }
        Ok(None)
    }

    /// `φ ⊗ ψ` as a covector on `H ⊗ K`.
    pub fn tensor_character(&self, phi: &Character, psi: &Character) -> Character {
        Character(phi.0.iter().flat_map(|x| psi.0.iter().map(move |y| x * y)).collect())
    }
}

/// First reason `f: H → K` fails to be a Hopf algebra map, if any.
pub fn hopf_morphism_failure(f: &Matrix, h: &FiniteHopfAlgebra, k: &FiniteHopfAlgebra) -> Option<String> {
    let n = h.dim();
    if f.cols() != n || f.rows() != k.dim() || f.field() != h.field() || h.field() != k.field() {
        return Some("shape or field mismatch".into());
    }
    let image = |v: &[Scalar]| f.apply(v).expect("shape checked");
    if image(h.algebra().unit()) != *k.algebra().unit() {
        return Some("not unital".into());
    }
    let cols: Vec<Vector> = (0..n).map(|j| f.column(j)).collect();
    let found = par::find_map_first(n, |i| {
        if k.counit_of(&cols[i]) != h.counit()[i] {
            return Some(format!("not counital at {}", h.label(i)));
        }
        if image(&h.apply_antipode(&unit_vector(h.field(), n, i))) != k.apply_antipode(&cols[i]) {
            return Some(format!("does not commute with S at {}", h.label(i)));
        }
        let mut pushed = Tensor2::new();
        for (a, b, c) in h.comul_of(i) {
            for (x, fx) in cols[*a].iter().enumerate() {
                if fx.is_zero() {
                    continue;
                }
                for (y, fy) in cols[*b].iter().enumerate() {
                    accumulate(&mut pushed, (x, y), &(c * fx) * fy);
                }
            }
        }
        if pushed != k.coproduct(&cols[i]) {
            return Some(format!("not comultiplicative at {}", h.label(i)));
        }
        (0..n).find_map(|j| {
            let lhs = image(&h.basis_product_vector(i, j));
            (lhs != k.algebra().mul(&cols[i], &cols[j]))
                .then(|| format!("not multiplicative at ({}, {})", h.label(i), h.label(j)))
        })
    });
    found
}

pub fn verify_hopf_morphism(f: &Matrix, h: &FiniteHopfAlgebra, k: &FiniteHopfAlgebra) -> bool {
    hopf_morphism_failure(f, h, k).is_none()
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::algebra::tests::{group_algebra_cyclic, sweedler_algebra};

    pub(crate) fn cyclic_group(f: &Field, n: usize) -> FiniteHopfAlgebra {
        let alg = group_algebra_cyclic(f, n);
        let comul = (0..n).map(|i| (i, i, i, f.one())).collect::<Vec<_>>();
        let mut s = Matrix::zeros(f, n, n);
        for i in 0..n {
            s.set((n - i) % n, i, f.one());
        }
        FiniteHopfAlgebra::new(alg, comul, vec![f.one(); n], s).unwrap()
    }

    /// Basis `1, g, x, gx` with `Δ(x) = x⊗1 + g⊗x`.
    pub(crate) fn sweedler(f: &Field) -> FiniteHopfAlgebra {
        let one = f.one();
        let comul = vec![
            (0, 0, 0, one.clone()),
            (1, 1, 1, one.clone()),
            (2, 2, 0, one.clone()),
            (2, 1, 2, one.clone()),
            (3, 3, 1, one.clone()),
            (3, 0, 3, one.clone()),
        ];
        let counit = [1, 1, 0, 0].map(|x| f.from_i64(x)).to_vec();
        let s = Matrix::from_columns(
            f,
            4,
            &[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
                .map(|c| c.map(|x| f.from_i64(x)).to_vec()),
        )
        .unwrap();
        FiniteHopfAlgebra::new(sweedler_algebra(f), comul, counit, s).unwrap()
    }

    pub(crate) fn ints(f: &Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn fixtures_pass_every_axiom() {
        let q = Field::rational();
        for h in [cyclic_group(&q, 1), cyclic_group(&q, 2), cyclic_group(&q, 5), sweedler(&q)] {
            let report = h.verify_axioms();
            assert!(report.all_passed(), "{report:?}");
            assert_eq!(report.checks.len(), 8);
        }
    }

    #[test]
    fn identity_antipode_is_caught() {
        let q = Field::rational();
        let bad = sweedler(&q).with_antipode(Matrix::identity(&q, 4)).unwrap();
        let report = bad.verify_axioms();
        assert!(!report.passed("antipode axiom"));
        let failure = report.failures().find(|c| c.name == "antipode axiom").unwrap();
        assert_eq!(failure.failure.as_deref(), Some("at x"));
        assert!(report.passed("associativity"));
        assert!(report.passed("coassociativity"));
    }

    #[test]
    fn generating_sets() {
        let q = Field::rational();
        assert_eq!(sweedler(&q).algebra().generating_basis_elements(), vec![1, 2]);
        assert_eq!(cyclic_group(&q, 5).algebra().generating_basis_elements(), vec![1]);
        assert!(cyclic_group(&q, 1).algebra().generating_basis_elements().is_empty());
        let big = sweedler(&q).tensor(&cyclic_group(&q, 3)).unwrap();
        assert_eq!(big.algebra().generating_basis_elements().len(), 3);
    }

    #[test]
    fn scaled_antipode_breaks_anti_multiplicativity() {
        let q = Field::rational();
        let sw = sweedler(&q);
        let mut s = sw.antipode().clone();
        s.set(2, 3, q.from_i64(2));
        let report = sw.with_antipode(s).unwrap().verify_axioms();
        assert!(!report.passed("antipode anti-multiplicative"));
        assert!(report.passed("coproduct multiplicative"));
    }

    #[test]
    fn broken_coproduct_is_caught() {
        let q = Field::rational();
        let h = sweedler(&q);
        let comul: Vec<_> = h
            .comul_entries()
            .filter(|&(i, j, _, _)| !(i == 2 && j == 1))
            .map(|(i, j, k, c)| (i, j, k, c.clone()))
            .collect();
        let bad = FiniteHopfAlgebra::new(h.algebra().clone(), comul, h.counit().clone(), h.antipode().clone()).unwrap();
        let report = bad.verify_axioms();
        assert!(!report.passed("counit"));
        assert!(!report.all_passed());
    }

    #[test]
    fn tensor_products() {
        let q = Field::rational();
        let k = cyclic_group(&q, 1);
        let sw = sweedler(&q);
        let ks = k.tensor(&sw).unwrap();
        assert!(ks.same_structure(&sw));

        let z2 = cyclic_group(&q, 2);
        let v4 = z2.tensor(&z2).unwrap();
        assert_eq!(v4.dim(), 4);
        assert!(v4.algebra().is_commutative());
        assert!(v4.is_cocommutative());
        assert!(v4.verify_axioms().all_passed());

        let big = sw.tensor(&sw).unwrap();
        assert_eq!(big.dim(), 16);
        assert!(big.verify_axioms().all_passed());

        let f5 = Field::prime(5).unwrap();
        assert!(matches!(z2.tensor(&cyclic_group(&f5, 2)), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn duals() {
        let q = Field::rational();
        let z2 = cyclic_group(&q, 2);
        let d = z2.dual();
        assert_eq!(d.dim(), 2);
        assert!(d.verify_axioms().all_passed());

        let sw = sweedler(&q);
        let dd = sw.dual();
        assert!(dd.verify_axioms().all_passed());
        assert!(!dd.algebra().is_commutative());
        assert!(dd.dual().same_structure(&sw));
        assert_eq!(dd.dual().labels()[2], "x**");

        let v4 = z2.tensor(&z2).unwrap().dual();
        assert!(v4.algebra().is_commutative() && v4.is_cocommutative());
    }

    #[test]
    fn base_changes() {
        let q = Field::rational();
        let q4 = Field::cyclotomic(4).unwrap();
        let sw = sweedler(&q).base_change(&q4).unwrap();
        assert_eq!(sw.field(), &q4);
        assert!(sw.verify_axioms().all_passed());
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(
            cyclic_group(&f5, 2).base_change(&q4),
            Err(Error::IncompatibleExtension { .. })
        ));
    }

    #[test]
    fn characters() {
        let q = Field::rational();
        let sw = sweedler(&q);
        assert!(sw.is_character(sw.counit()));
        assert!(!sw.is_character(&zero_vector(&q, 4)));
        let alpha = sw.character(ints(&q, &[1, -1, 0, 0])).unwrap();
        assert!(!sw.is_character(&ints(&q, &[1, 1, 1, 0])));
        assert!(matches!(sw.character(ints(&q, &[1, 2, 0, 0])), Err(Error::NotACharacter(_))));

        let eps = sw.counit_character();
        assert_eq!(sw.convolution(&eps, &alpha).unwrap(), alpha);
        assert_eq!(sw.convolution(&alpha, &alpha).unwrap(), eps);
        assert_eq!(sw.convolution_order(&alpha, 100).unwrap(), Some(2));
        assert_eq!(sw.convolution_order(&eps, 100).unwrap(), Some(1));
        let inv = sw.character_inverse(&alpha).unwrap();
        assert_eq!(sw.convolution(&alpha, &inv).unwrap(), eps);

        let q3 = Field::cyclotomic(3).unwrap();
        let z3 = cyclic_group(&q3, 3);
        let z = q3.generator().unwrap();
        let chi = z3.character(vec![q3.one(), z.clone(), &z * &z]).unwrap();
        assert_eq!(z3.convolution_order(&chi, 100).unwrap(), Some(3));
        assert_eq!(z3.convolution_order(&chi, 2).unwrap(), None);
    }

    #[test]
    fn morphisms() {
        let q = Field::rational();
        let sw = sweedler(&q);
        assert!(verify_hopf_morphism(&Matrix::identity(&q, 4), &sw, &sw));
        let z2 = cyclic_group(&q, 2);
        let swap = Matrix::from_columns(&q, 2, &[ints(&q, &[0, 1]), ints(&q, &[1, 0])]).unwrap();
        assert_eq!(hopf_morphism_failure(&swap, &z2, &z2).as_deref(), Some("not unital"));
        // Sweedler → kZ2 killing x.
        let p = Matrix::from_columns(
            &q,
            2,
            &[ints(&q, &[1, 0]), ints(&q, &[0, 1]), ints(&q, &[0, 0]), ints(&q, &[0, 0])],
        )
        .unwrap();
        assert!(verify_hopf_morphism(&p, &sw, &z2));
    }
}
