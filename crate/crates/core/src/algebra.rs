//! Finite-dimensional associative algebras given by structure constants.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vector, joint_kernel, sub_vectors, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::par;
use crate::scalar::{Field, Scalar};

/// `e_i · e_j = Σ_k c_{ij}^k e_k`, stored sparsely per pair `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    field: Field,
    labels: Vec<String>,
    unit: Vector,
    table: Vec<Vec<(usize, Scalar)>>,
}

/// A two-sided ideal, kept as its (canonical) subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    space: Subspace,
}

impl Ideal {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Wraps a subspace after checking closure under both multiplications.
    pub fn from_subspace(algebra: &FiniteAlgebra, space: Subspace) -> Result<Ideal> {
        if space.ambient() != algebra.dim() {
            return Err(Error::AmbientMismatch(algebra.dim(), space.ambient()));
        }
        if !algebra.is_ideal(&space) {
            return Err(Error::ConsistencyFailure("subspace is not a two-sided ideal".into()));
        }
        Ok(Ideal { space })
    }
}

/// Reduces against an echelon basis built one vector at a time.
struct Echelon {
    rows: Vec<(usize, Vector)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            let c = v[*p].clone();
            if !c.is_zero() {
                axpy(&mut v, &-&c, row);
            }
        }
        v
    }

    /// Inserts `v` if it is new; returns the normalized new row.
    fn insert(&mut self, v: &[Scalar]) -> Option<Vector> {
        let r = self.reduce(v);
        let p = r.iter().position(|x| !x.is_zero())?;
        let inv = r[p].inv().expect("nonzero");
        let row: Vector = r.iter().map(|x| x * &inv).collect();
        self.rows.push((p, row.clone()));
        Some(row)
    }
}

impl FiniteAlgebra {
    /// Builds an algebra from `(i, j, k, c)` entries meaning `c_{ij}^k += c`.
    pub fn new<I>(field: &Field, labels: Vec<String>, unit: Vector, entries: I) -> Result<FiniteAlgebra>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let dim = labels.len();
        if unit.len() != dim {
            return Err(Error::DimMismatch {
                expected: dim,
                got: unit.len(),
            });
        }
        let mut dense: Vec<Vec<Scalar>> = Vec::new();
        dense.resize_with(dim * dim, Vec::new);
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimMismatch {
                    expected: dim,
                    got: i.max(j).max(k) + 1,
                });
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), c.field().to_string()));
            }
            let slot = &mut dense[i * dim + j];
            if slot.is_empty() {
                *slot = zero_vector(field, dim);
            }
            slot[k] = &slot[k] + &c;
        }
        let table = dense
            .into_iter()
            .map(|v| {
                v.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        Ok(FiniteAlgebra {
            field: field.clone(),
            labels,
            unit,
            table,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(&self.field, self.dim(), i)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    /// Iterates the nonzero structure constants as `(i, j, k, c)`.
    pub fn structure_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        let n = self.dim();
        self.table
            .iter()
            .enumerate()
            .flat_map(move |(ij, v)| v.iter().map(move |(k, c)| (ij / n, ij % n, *k, c)))
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(&self.field, n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    /// `e_i · v`.
    pub fn basis_times(&self, i: usize, v: &[Scalar]) -> Vector {
        let mut out = zero_vector(&self.field, self.dim());
        for (j, y) in v.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            for (k, c) in self.basis_product(i, j) {
                out[*k] = &out[*k] + &(y * c);
            }
        }
        out
    }

    /// `v · e_j`.
    pub fn times_basis(&self, v: &[Scalar], j: usize) -> Vector {
        let mut out = zero_vector(&self.field, self.dim());
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, c) in self.basis_product(i, j) {
                out[*k] = &out[*k] + &(x * c);
            }
        }
        out
    }

    fn check_len(&self, a: &[Scalar]) -> Result<()> {
        if a.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimMismatch {
                expected: self.dim(),
                got: a.len(),
            })
        }
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Result<Matrix> {
        self.check_len(a)?;
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.times_basis(a, j)).collect();
        Matrix::from_columns(&self.field, self.dim(), &cols)
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Result<Matrix> {
        self.check_len(a)?;
        let cols: Vec<Vector> = (0..self.dim()).map(|i| self.basis_times(i, a)).collect();
        Matrix::from_columns(&self.field, self.dim(), &cols)
    }

    /// First basis triple violating associativity, if any.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        // Sparse sums: the dense route allocates n scalars per triple.
        let combine = |terms: &mut dyn Iterator<Item = (usize, Scalar)>| {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, c) in terms {
                match acc.entry(k) {
                    Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    Entry::Occupied(mut e) => {
                        let sum = e.get() + &c;
                        *e.get_mut() = sum;
                    }
                }
            }
            acc.retain(|_, c| !c.is_zero());
            acc
        };
        par::find_map_first(n, |i| {
            for j in 0..n {
                let eij = self.basis_product(i, j);
                for k in 0..n {
                    let left = combine(
                        &mut eij.iter().flat_map(|(a, x)| self.basis_product(*a, k).iter().map(move |(b, y)| (*b, x * y))),
                    );
                    let right = combine(
                        &mut self
                            .basis_product(j, k)
                            .iter()
                            .flat_map(|(a, x)| self.basis_product(i, *a).iter().map(move |(b, y)| (*b, x * y))),
                    );
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
            None
        })
    }

    /// First basis index violating the unit law, if any.
    pub fn unit_witness(&self) -> Option<usize> {
        (0..self.dim()).find(|&i| {
            let e = self.basis_vector(i);
            self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
        })
    }

    pub fn is_ideal(&self, space: &Subspace) -> bool {
        let n = self.dim();
        space.basis().iter().all(|v| {
            (0..n).all(|i| space.contains(&self.basis_times(i, v)) && space.contains(&self.times_basis(v, i)))
        })
    }

    pub fn is_subalgebra(&self, space: &Subspace) -> bool {
        space.contains(&self.unit)
            && space
                .basis()
                .iter()
                .all(|a| space.basis().iter().all(|b| space.contains(&self.mul(a, b))))
    }

    /// Smallest two-sided ideal containing `gens`. Saturates by multiplying
    /// each new vector with the basis in index order, left then right.
    pub fn ideal_generated(&self, gens: &[Vector]) -> Ideal {
        let n = self.dim();
        let mut echelon = Echelon::new();
        let mut queue: std::collections::VecDeque<Vector> =
            gens.iter().filter_map(|g| echelon.insert(g)).collect();
        while let Some(v) = queue.pop_front() {
            if echelon.rows.len() == n {
                break;
            }
            let products = par::map_range(2 * n, |t| {
                let i = t / 2;
                if t % 2 == 0 {
                    self.basis_times(i, &v)
                } else {
                    self.times_basis(&v, i)
                }
            });
            for p in products {
                if let Some(row) = echelon.insert(&p) {
                    queue.push_back(row);
                }
            }
        }
        let space = Subspace::span(&self.field, n, echelon.rows.into_iter().map(|(_, r)| r).collect());
        Ideal { space }
    }

    /// Basis indices that generate the algebra, chosen greedily in index
    /// order: `e_i` is taken whenever it lies outside the subalgebra
    /// generated by the earlier choices. Assumes associativity.
    pub fn generating_basis_elements(&self) -> Vec<usize> {
        let n = self.dim();
        let mut echelon = Echelon::new();
        let mut spanned: Vec<Vector> = Vec::new();
        let mut gens: Vec<usize> = Vec::new();
        let mut queue: std::collections::VecDeque<Vector> = echelon.insert(&self.unit).into_iter().collect();
        for i in 0..=n {
            // Close up under left multiplication by the chosen generators.
            while let Some(v) = queue.pop_front() {
                for &g in &gens {
                    if let Some(row) = echelon.insert(&self.basis_times(g, &v)) {
                        queue.push_back(row);
                    }
                }
                spanned.push(v);
            }
            if i == n || echelon.rows.len() == n {
                break;
            }
            let e = self.basis_vector(i);
            if is_zero_vector(&echelon.reduce(&e)) {
                continue;
            }
            gens.push(i);
            queue.extend(spanned.iter().map(|v| self.basis_times(i, v)).filter_map(|p| echelon.insert(&p)));
            queue.extend(echelon.insert(&e));
        }
        gens
    }

    pub fn commutator_ideal(&self) -> Ideal {
        let n = self.dim();
        let gens: Vec<Vector> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let (a, b) = (self.basis_vector(i), self.basis_vector(j));
                sub_vectors(&self.mul(&a, &b), &self.mul(&b, &a))
            })
            .filter(|v| !is_zero_vector(v))
            .collect();
        self.ideal_generated(&gens)
    }

    /// Quotient by a proper ideal. The quotient basis is the set of
    /// non-pivot coordinates of the ideal's echelon basis; the returned
    /// projection maps coordinates of `A` to coordinates of `A/I`.
    pub fn quotient(&self, ideal: &Ideal) -> Result<(FiniteAlgebra, Matrix)> {
        let space = ideal.space();
        if space.dim() >= self.dim() {
            return Err(Error::ImproperIdeal);
        }
        let keep = space.complement_indices();
        let project = |v: &[Scalar]| -> Vector {
            let r = space.reduce(v);
            keep.iter().map(|&c| r[c].clone()).collect()
        };
        let columns: Vec<Vector> = (0..self.dim()).map(|j| project(&self.basis_vector(j))).collect();
        let projection = Matrix::from_columns(&self.field, keep.len(), &columns)?;
        let mut entries = Vec::new();
        for (a, &ca) in keep.iter().enumerate() {
            for (b, &cb) in keep.iter().enumerate() {
                let prod = self.mul(&self.basis_vector(ca), &self.basis_vector(cb));
                for (k, c) in project(&prod).into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((a, b, k, c));
                    }
                }
            }
        }
        let labels = keep.iter().map(|&c| self.labels[c].clone()).collect();
        let quotient = FiniteAlgebra::new(&self.field, labels, project(&self.unit), entries)?;
        Ok((quotient, projection))
    }

    /// Largest two-sided ideal contained in `space`.
    pub fn largest_ideal_in(&self, space: &Subspace) -> Subspace {
        let n = self.dim();
        let mut current = space.clone();
        loop {
            if current.dim() == 0 {
                return current;
            }
            let conditions = current.annihilator();
            let basis = current.basis().to_vec();
            let ann = conditions.basis().to_vec();
            let embed = |c: &[Scalar]| {
                let mut x = zero_vector(&self.field, n);
                for (ci, b) in c.iter().zip(&basis) {
                    axpy(&mut x, ci, b);
                }
                x
            };
            let test = |v: &[Scalar]| -> Vector {
                ann.iter().map(|a| crate::linalg::dot(a, v)).collect()
            };
            let coeffs = joint_kernel(&self.field, basis.len(), 2 * n, |t, c| {
                let x = embed(c);
                let i = t / 2;
                if t % 2 == 0 {
                    test(&self.basis_times(i, &x))
                } else {
                    test(&self.times_basis(&x, i))
                }
            });
            let next = Subspace::span(
                &self.field,
                n,
                coeffs.basis().iter().map(|c| embed(c)).collect(),
            );
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// `tr(L_{e_m})` for every basis element.
    pub fn trace_vector(&self) -> Vector {
        (0..self.dim())
            .map(|m| {
                let mut acc = self.field.zero();
                for i in 0..self.dim() {
                    for (k, c) in self.basis_product(m, i) {
                        if *k == i {
                            acc = &acc + c;
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// Jacobson radical as the largest ideal inside the kernel of the trace
    /// form `(x, y) ↦ tr(L_x L_y)`. Valid in characteristic 0 or `p > dim`.
    pub fn jacobson_radical(&self) -> Result<Subspace> {
        let p = self.field.characteristic();
        let n = self.dim();
        if p != 0 && p as usize <= n {
            return Err(Error::UnsupportedCharacteristic {
                characteristic: p,
                dim: n,
            });
        }
        let t = self.trace_vector();
        let gram_rows = par::map_range(n, |x| {
            (0..n)
                .map(|y| {
                    let mut acc = self.field.zero();
                    for (k, c) in self.basis_product(x, y) {
                        acc = &acc + &(c * &t[*k]);
                    }
                    acc
                })
                .collect::<Vector>()
        });
        let kernel = Matrix::from_rows(&self.field, n, gram_rows)?.nullspace();
        Ok(self.largest_ideal_in(&kernel))
    }

    /// Span of all products `a·b` with `a ∈ left`, `b ∈ right`.
    pub fn product_space(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let products: Vec<Vector> = left
            .basis()
            .iter()
            .flat_map(|a| right.basis().iter().map(move |b| (a, b)))
            .map(|(a, b)| self.mul(a, b))
            .collect();
        Subspace::span(&self.field, self.dim(), products)
    }

    /// Dimensions of `J^t / J^{t+1}` for the radical `J`, from `t = 0`
    /// until the powers vanish.
    pub fn radical_layers(&self) -> Result<Vec<usize>> {
        let radical = self.jacobson_radical()?;
        let mut layers = Vec::new();
        let mut power = Subspace::full(&self.field, self.dim());
        while power.dim() > 0 {
            let next = if layers.is_empty() {
                radical.clone()
            } else {
                self.product_space(&power, &radical)
            };
            if next.dim() == power.dim() {
                return Err(Error::ConsistencyFailure("radical is not nilpotent".into()));
            }
            layers.push(power.dim() - next.dim());
            power = next;
        }
        Ok(layers)
    }

    /// `Ok(())` when `m` is a unital, multiplicative, invertible map.
    pub fn check_automorphism(&self, m: &Matrix) -> std::result::Result<(), String> {
        let n = self.dim();
        if m.rows() != n || m.cols() != n {
            return Err(format!("expected a {n}x{n} matrix"));
        }
        if m.rank() < n {
            return Err("not invertible".into());
        }
        let image = |v: &[Scalar]| m.apply(v).expect("square");
        if image(&self.unit) != self.unit {
            return Err("not unital".into());
        }
        let cols: Vec<Vector> = (0..n).map(|j| m.column(j)).collect();
        let bad = par::find_map_first(n, |i| {
            (0..n).find_map(|j| {
                let lhs = image(&self.mul(&self.basis_vector(i), &self.basis_vector(j)));
                (lhs != self.mul(&cols[i], &cols[j])).then_some((i, j))
            })
        });
        match bad {
            Some((i, j)) => Err(format!("not multiplicative on ({}, {})", self.labels[i], self.labels[j])),
            None => Ok(()),
        }
    }

    /// Joint fixed points of a family of automorphisms.
    pub fn fixed_subalgebra(&self, autos: &[Matrix]) -> Result<Subspace> {
        for m in autos {
            self.check_automorphism(m).map_err(Error::NotAutomorphism)?;
        }
        let n = self.dim();
        let fixed = joint_kernel(&self.field, n, autos.len(), |t, v| {
            sub_vectors(&autos[t].apply(v).expect("square"), v)
        });
        if !self.is_subalgebra(&fixed) {
            return Err(Error::ConsistencyFailure("fixed points are not a subalgebra".into()));
        }
        Ok(fixed)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        joint_kernel(&self.field, n, n, |i, v| {
            sub_vectors(&self.times_basis(v, i), &self.basis_times(i, v))
        })
    }

    /// Tensor product algebra; basis `a⊗b` has index `a·dim(B) + b`.
    pub fn tensor(&self, other: &FiniteAlgebra) -> Result<FiniteAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        let m = other.dim();
        let labels = self
            .labels
            .iter()
            .flat_map(|a| other.labels.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        let mut unit = Vec::with_capacity(self.dim() * m);
        for a in &self.unit {
            for b in &other.unit {
                unit.push(a * b);
            }
        }
        let mut entries = Vec::new();
        for (i, j, k, c) in self.structure_constants() {
            for (a, b, l, d) in other.structure_constants() {
                entries.push((i * m + a, j * m + b, k * m + l, c * d));
            }
        }
        FiniteAlgebra::new(&self.field, labels, unit, entries)
    }

    /// Same structure constants over an extension field.
    pub fn base_change(&self, target: &Field) -> Result<FiniteAlgebra> {
        let unit = self.unit.iter().map(|x| target.embed(x)).collect::<Result<Vector>>()?;
        let entries = self
            .structure_constants()
            .map(|(i, j, k, c)| Ok((i, j, k, target.embed(c)?)))
            .collect::<Result<Vec<_>>>()?;
        FiniteAlgebra::new(target, self.labels.clone(), unit, entries)
    }

    /// Human-readable linear combination of basis labels.
    pub fn describe_vector(&self, v: &[Scalar]) -> String {
        let mut out = String::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = c.to_string();
            let term = if c.is_one() {
                self.labels[i].clone()
            } else if coef == "-1" {
                format!("-{}", self.labels[i])
            } else if coef.contains('z') {
                format!("({coef})*{}", self.labels[i])
            } else {
                format!("{coef}*{}", self.labels[i])
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn group_algebra_cyclic(f: &Field, n: usize) -> FiniteAlgebra {
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        let entries = (0..n).flat_map(|i| (0..n).map(move |j| (i, j, (i + j) % n)));
        FiniteAlgebra::new(
            f,
            labels,
            unit_vector(f, n, 0),
            entries.map(|(i, j, k)| (i, j, k, f.one())).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    /// Sweedler algebra on `1, g, x, gx` with `g² = 1`, `x² = 0`, `xg = -gx`.
    pub(crate) fn sweedler_algebra(f: &Field) -> FiniteAlgebra {
        // Basis monomials g^a x^b encoded as (a, b); product uses xg = -gx.
        let mono = [(0, 0), (1, 0), (0, 1), (1, 1)];
        let mut entries = Vec::new();
        for (i, &(a1, b1)) in mono.iter().enumerate() {
            for (j, &(a2, b2)) in mono.iter().enumerate() {
                if b1 + b2 > 1 {
                    continue;
                }
                let sign = if b1 == 1 && a2 == 1 { -1 } else { 1 };
                let k = mono.iter().position(|&m| m == ((a1 + a2) % 2, b1 + b2)).unwrap();
                entries.push((i, j, k, f.from_i64(sign)));
            }
        }
        let labels = ["1", "g", "x", "gx"].map(String::from).to_vec();
        FiniteAlgebra::new(f, labels, unit_vector(f, 4, 0), entries).unwrap()
    }

    /// `k[x]/(x^n)`.
    fn truncated_polynomials(f: &Field, n: usize) -> FiniteAlgebra {
        let labels = (0..n).map(|i| format!("x^{i}")).collect();
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|(i, j)| i + j < n)
            .map(|(i, j)| (i, j, i + j, f.one()))
            .collect::<Vec<_>>();
        FiniteAlgebra::new(f, labels, unit_vector(f, n, 0), entries).unwrap()
    }

    /// 2x2 matrices on `E11, E12, E21, E22`.
    fn matrix_algebra(f: &Field) -> FiniteAlgebra {
        let idx = |r: usize, c: usize| 2 * r + c;
        let mut entries = Vec::new();
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            for (c, d) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                if b == c {
                    entries.push((idx(a, b), idx(c, d), idx(a, d), f.one()));
                }
            }
        }
        let mut unit = zero_vector(f, 4);
        unit[0] = f.one();
        unit[3] = f.one();
        FiniteAlgebra::new(f, ["E11", "E12", "E21", "E22"].map(String::from).to_vec(), unit, entries)
            .unwrap()
    }

    fn vecs(f: &Field, rows: &[&[i64]]) -> Vec<Vector> {
        rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect()
    }

    #[test]
    fn presets_are_associative_and_unital() {
        let f = Field::rational();
        for a in [sweedler_algebra(&f), group_algebra_cyclic(&f, 4), truncated_polynomials(&f, 3), matrix_algebra(&f)] {
            assert_eq!(a.associativity_witness(), None);
            assert_eq!(a.unit_witness(), None);
        }
    }

    #[test]
    fn multiplication_operators() {
        let f = Field::rational();
        let z2 = group_algebra_cyclic(&f, 2);
        assert!(z2.left_mult_matrix(z2.unit()).unwrap().is_identity());
        let lg = z2.left_mult_matrix(&z2.basis_vector(1)).unwrap();
        assert_eq!(lg.column(0), z2.basis_vector(1));
        assert_eq!(lg.column(1), z2.basis_vector(0));
        assert!(matches!(z2.left_mult_matrix(&[f.one()]), Err(Error::DimMismatch { .. })));

        let sw = sweedler_algebra(&f);
        let a = vecs(&f, &[&[1, 2, -1, 3]]).remove(0);
        let b = vecs(&f, &[&[0, -1, 4, 1]]).remove(0);
        let la = sw.left_mult_matrix(&a).unwrap();
        let lb = sw.left_mult_matrix(&b).unwrap();
        assert_eq!(la.mul(&lb).unwrap(), sw.left_mult_matrix(&sw.mul(&a, &b)).unwrap());
    }

    #[test]
    fn generated_ideals() {
        let f = Field::rational();
        let sw = sweedler_algebra(&f);
        assert_eq!(sw.ideal_generated(&[sw.unit().clone()]).dim(), 4);
        assert_eq!(sw.ideal_generated(&[]).dim(), 0);
        let ix = sw.ideal_generated(&[sw.basis_vector(2)]);
        assert_eq!(ix.space(), &Subspace::span(&f, 4, vec![sw.basis_vector(2), sw.basis_vector(3)]));
        assert!(sw.is_ideal(ix.space()));
    }

    #[test]
    fn quotients() {
        let f = Field::rational();
        let sw = sweedler_algebra(&f);
        let zero = sw.ideal_generated(&[]);
        let (same, proj) = sw.quotient(&zero).unwrap();
        assert_eq!(same, sw);
        assert!(proj.is_identity());

        let (q, proj) = sw.quotient(&sw.ideal_generated(&[sw.basis_vector(2)])).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.labels(), &["1".to_string(), "g".to_string()]);
        assert!(q.is_commutative());
        let g = q.basis_vector(1);
        assert_eq!(q.mul(&g, &g), *q.unit());
        // The projection is multiplicative on every basis pair.
        for i in 0..4 {
            for j in 0..4 {
                let lhs = proj.apply(&sw.mul(&sw.basis_vector(i), &sw.basis_vector(j))).unwrap();
                let rhs = q.mul(&proj.column(i), &proj.column(j));
                assert_eq!(lhs, rhs);
            }
        }

        // kZ4 / (g^2 - 1) is kZ2.
        let z4 = group_algebra_cyclic(&f, 4);
        let gen = sub_vectors(&z4.basis_vector(2), &z4.basis_vector(0));
        let (q, _) = z4.quotient(&z4.ideal_generated(&[gen])).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q, group_algebra_cyclic(&f, 2).tap_relabel(q.labels()));

        let whole = sw.ideal_generated(&[sw.unit().clone()]);
        assert_eq!(sw.quotient(&whole).unwrap_err(), Error::ImproperIdeal);
    }

    impl FiniteAlgebra {
        fn tap_relabel(mut self, labels: &[String]) -> Self {
            self.labels = labels.to_vec();
            self
        }
    }

    #[test]
    fn commutator_ideals() {
        let f = Field::rational();
        assert_eq!(group_algebra_cyclic(&f, 3).commutator_ideal().dim(), 0);
        let sw = sweedler_algebra(&f);
        let c = sw.commutator_ideal();
        assert_eq!(c.dim(), 2);
        assert_eq!(sw.quotient(&c).unwrap().0.dim(), 2);
        // [E11, E12] = E12 generates all of the simple algebra M_2(k).
        let m2 = matrix_algebra(&f);
        assert_eq!(m2.commutator_ideal().dim(), 4);
        assert_eq!(m2.quotient(&m2.commutator_ideal()).unwrap_err(), Error::ImproperIdeal);
    }

    #[test]
    fn radicals() {
        let f = Field::rational();
        assert_eq!(group_algebra_cyclic(&f, 2).jacobson_radical().unwrap().dim(), 0);
        let sw = sweedler_algebra(&f);
        let rad = sw.jacobson_radical().unwrap();
        assert_eq!(rad, Subspace::span(&f, 4, vec![sw.basis_vector(2), sw.basis_vector(3)]));
        let p3 = truncated_polynomials(&f, 3);
        let rad = p3.jacobson_radical().unwrap();
        assert_eq!(rad, Subspace::span(&f, 3, vec![p3.basis_vector(1), p3.basis_vector(2)]));
        assert_eq!(p3.radical_layers().unwrap(), vec![1, 1, 1]);
        assert_eq!(matrix_algebra(&f).jacobson_radical().unwrap().dim(), 0);
        let f2 = Field::prime(2).unwrap();
        assert_eq!(
            group_algebra_cyclic(&f2, 2).jacobson_radical().unwrap_err(),
            Error::UnsupportedCharacteristic { characteristic: 2, dim: 2 }
        );
        // Characteristic above the dimension is supported: F5[Z3] is semisimple.
        assert_eq!(group_algebra_cyclic(&Field::prime(5).unwrap(), 3).jacobson_radical().unwrap().dim(), 0);
    }

    #[test]
    fn fixed_points() {
        let f = Field::rational();
        let z2 = group_algebra_cyclic(&f, 2);
        let id = Matrix::identity(&f, 2);
        assert_eq!(z2.fixed_subalgebra(&[id]).unwrap().dim(), 2);
        // g ↦ -g
        let flip = Matrix::from_columns(&f, 2, &vecs(&f, &[&[1, 0], &[0, -1]])).unwrap();
        let fixed = z2.fixed_subalgebra(&[flip]).unwrap();
        assert_eq!(fixed, Subspace::span(&f, 2, vec![z2.unit().clone()]));
        // Swapping 1 and g is not unital.
        let swap = Matrix::from_columns(&f, 2, &vecs(&f, &[&[0, 1], &[1, 0]])).unwrap();
        assert!(matches!(z2.fixed_subalgebra(&[swap]), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn centers() {
        let f = Field::rational();
        let z4 = group_algebra_cyclic(&f, 4);
        assert!(z4.is_commutative());
        assert_eq!(z4.center().dim(), 4);
        let sw = sweedler_algebra(&f);
        assert!(!sw.is_commutative());
        assert_eq!(sw.center(), Subspace::span(&f, 4, vec![sw.unit().clone()]));
        assert_eq!(matrix_algebra(&f).center().dim(), 1);
    }

    #[test]
    fn tensor_dims_multiply() {
        let f = Field::rational();
        let t = group_algebra_cyclic(&f, 2).tensor(&sweedler_algebra(&f)).unwrap();
        assert_eq!(t.dim(), 8);
        assert_eq!(t.associativity_witness(), None);
        assert_eq!(t.unit_witness(), None);
    }

    #[test]
    fn describe() {
        let f = Field::rational();
        let sw = sweedler_algebra(&f);
        let v = vecs(&f, &[&[0, 0, 1, -1]]).remove(0);
        assert_eq!(sw.describe_vector(&v), "x-gx");
        assert_eq!(sw.describe_vector(&zero_vector(&f, 4)), "0");
    }
}
