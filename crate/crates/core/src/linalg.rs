//! Dense exact linear algebra: reduced row echelon forms, kernels, subspace
//! lattice operations and matrix orders.
//!
//! Pivoting is leftmost column, topmost row. Vectors are plain `Vec<Scalar>`;
//! matrices act on column vectors.

use crate::error::{Error, Result};
use crate::par;
use crate::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: &Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: &Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// `acc += c * v`, skipping the work when `c` is zero.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(c * x);
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let field = a.first().or(b.first()).map(|s| s.field().clone());
    let mut acc = match field {
        Some(f) => f.zero(),
        None => panic!("dot product of empty vectors has no field"),
    };
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field: field.clone(),
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vector>) -> Result<Matrix> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            for x in &row {
                if x.field() != field {
                    return Err(Error::FieldMismatch(field.to_string(), x.field().to_string()));
                }
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            field: field.clone(),
            data,
        })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vector]) -> Result<Matrix> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimMismatch {
                    expected: rows,
                    got: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.cols != other.rows {
            return Err(Error::DimMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let cols = other.cols;
        let rows = par::map_range(self.rows, |i| {
            let mut out = zero_vector(&self.field, cols);
            for (k, a) in self.row(i).iter().enumerate() {
                axpy(&mut out, a, other.row(k));
            }
            out
        });
        Matrix::from_rows(&self.field, cols, rows)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.try_sub(b)?;
        }
        Ok(out)
    }

    /// Standard Kronecker product; entry `(i·rows(B)+k, j·cols(B)+l)` is
    /// `A[i,j]·B[k,l]`.
    pub fn kronecker(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        let (rb, cb) = (other.rows, other.cols);
        let mut out = Matrix::zeros(&self.field, self.rows * rb, self.cols * cb);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        out.set(i * rb + k, j * cb + l, a * other.get(k, l));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.row_vectors();
        let pivots = rref_in_place(&mut rows, self.cols);
        let m = Matrix::from_rows(&self.field, self.cols, rows).expect("shape preserved");
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vectors();
        rref_in_place(&mut rows, self.cols).len()
    }

    /// Right null space `{v : M v = 0}`.
    pub fn nullspace(&self) -> Subspace {
        let mut rows = self.row_vectors();
        let pivots = rref_in_place(&mut rows, self.cols);
        Subspace::span(&self.field, self.cols, kernel_from_rref(&self.field, &rows, &pivots, self.cols))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotInvertible);
        }
        let n = self.rows;
        let mut rows: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(unit_vector(&self.field, n, i));
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::NotInvertible);
        }
        Matrix::from_rows(&self.field, n, rows.into_iter().map(|r| r[n..].to_vec()).collect())
    }

    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        let mut rows: Vec<Vector> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vector(&self.field, self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = rows[r][self.cols].clone();
        }
        Some(x)
    }

    /// Smallest `n <= cap` with `M^n = I`.
    pub fn order(&self, cap: u64) -> Result<Option<u64>> {
        if !self.is_square() || self.rank() < self.rows {
            return Err(Error::NotInvertible);
        }
        let mut power = self.clone();
        for n in 1..=cap {
            if power.is_identity() {
                return Ok(Some(n));
            }
            power = power.mul(self)?;
        }
        Ok(None)
    }
}

/// In-place reduced row echelon form over the first `cols` columns.
/// Returns the pivot columns; zero rows end up at the bottom.
pub fn rref_in_place(rows: &mut [Vector], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let (top, rest) = rows.split_at_mut(r);
        let (pivot_row, bottom) = rest.split_first_mut().expect("pivot row");
        let pivot_row: &Vector = pivot_row;
        let eliminate = |row: &mut Vector| {
            let factor = row[c].clone();
            if factor.is_zero() {
                return;
            }
            for j in c..row.len() {
                let p = &pivot_row[j];
                if !p.is_zero() {
                    row[j] = &row[j] - &(&factor * p);
                }
            }
        };
        par::for_each_mut(top, eliminate);
        par::for_each_mut(bottom, eliminate);
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn kernel_from_rref(field: &Field, rows: &[Vector], pivots: &[usize], cols: usize) -> Vec<Vector> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = zero_vector(field, cols);
            v[f] = field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&rows[i][f];
            }
            v
        })
        .collect()
}

/// Rank, reduced form and kernel in one call.
pub fn rref_and_nullspace(m: &Matrix) -> (Matrix, usize, Subspace) {
    let (r, pivots) = m.rref();
    let kernel = Subspace::span(
        m.field(),
        m.cols(),
        kernel_from_rref(m.field(), &r.row_vectors(), &pivots, m.cols()),
    );
    (r, pivots.len(), kernel)
}

/// Common kernel of `count` linear maps on `field^dim`, where
/// `apply(t, v)` evaluates the `t`-th map. The candidate space shrinks map
/// by map, so later maps are only evaluated on the surviving subspace.
pub fn joint_kernel<F>(field: &Field, dim: usize, count: usize, apply: F) -> Subspace
where
    F: Fn(usize, &[Scalar]) -> Vector + Sync + Send,
{
    let mut basis: Vec<Vector> = (0..dim).map(|i| unit_vector(field, dim, i)).collect();
    for t in 0..count {
        if basis.is_empty() {
            break;
        }
        let images = par::map_slice(&basis, |v| apply(t, v));
        if images.iter().all(|v| is_zero_vector(v)) {
            continue;
        }
        let out_dim = images[0].len();
        let m = Matrix::from_columns(field, out_dim, &images).expect("uniform image length");
        let coeffs = m.nullspace();
        basis = coeffs
            .basis()
            .iter()
            .map(|c| {
                let mut v = zero_vector(field, dim);
                for (ci, b) in c.iter().zip(&basis) {
                    axpy(&mut v, ci, b);
                }
                v
            })
            .collect();
    }
    Subspace::span(field, dim, basis)
}

/// A subspace of `field^ambient`, stored as the nonzero rows of its reduced
/// row echelon form (hence canonical: equal subspaces compare equal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: &Field, ambient: usize, vectors: Vec<Vector>) -> Subspace {
        let mut rows = vectors;
        let pivots = rref_in_place(&mut rows, ambient);
        rows.truncate(pivots.len());
        Subspace {
            field: field.clone(),
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace::span(field, ambient, Vec::new())
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace::span(
            field,
            ambient,
            (0..ambient).map(|i| unit_vector(field, ambient, i)).collect(),
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots of the echelon basis; their unit
    /// vectors span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// `v` minus its echelon projection: zero at every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                axpy(&mut out, &-&c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(self.ambient, other.ambient))
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Ok(Subspace::span(&self.field, self.ambient, vs))
    }

    /// Vectors orthogonal (under the standard pairing) to every basis vector.
    pub fn annihilator(&self) -> Subspace {
        Subspace::span(
            &self.field,
            self.ambient,
            kernel_from_rref(&self.field, &self.basis, &self.pivots, self.ambient),
        )
    }

    /// Intersection as the kernel of the stacked annihilator conditions.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut conditions = self.annihilator().basis;
        conditions.extend(other.annihilator().basis);
        if conditions.is_empty() {
            return Ok(Subspace::full(&self.field, self.ambient));
        }
        Ok(Matrix::from_rows(&self.field, self.ambient, conditions)?.nullspace())
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        self.contains(v)
            .then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q() -> Field {
        Field::rational()
    }

    fn mat(f: &Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(
            f,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn random_matrix(f: &Field, rng: &mut ChaCha8Rng, r: usize, c: usize, range: i64) -> Matrix {
        let rows = (0..r)
            .map(|_| (0..c).map(|_| f.from_i64(rng.gen_range(-range..=range))).collect())
            .collect();
        Matrix::from_rows(f, c, rows).unwrap()
    }

    #[test]
    fn identity_has_full_rank() {
        let (_, rank, kernel) = rref_and_nullspace(&Matrix::identity(&q(), 2));
        assert_eq!(rank, 2);
        assert_eq!(kernel.dim(), 0);
    }

    #[test]
    fn single_row_kernel() {
        let f = q();
        let (_, rank, kernel) = rref_and_nullspace(&mat(&f, &[&[1, -1]]));
        assert_eq!(rank, 1);
        assert_eq!(kernel, Subspace::span(&f, 2, vec![vec![f.one(), f.one()]]));
    }

    #[test]
    fn kernel_vectors_are_annihilated_over_f7() {
        let f = Field::prime(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            // Rank-deficient by construction: product of 5x3 and 3x5.
            let m = random_matrix(&f, &mut rng, 5, 3, 6)
                .mul(&random_matrix(&f, &mut rng, 3, 5, 6))
                .unwrap();
            let (r, rank, kernel) = rref_and_nullspace(&m);
            assert_eq!(rank + kernel.dim(), 5);
            assert_eq!(r.rref().0, r);
            for v in kernel.basis() {
                assert!(is_zero_vector(&m.apply(v).unwrap()));
            }
        }
    }

    #[test]
    fn intersections() {
        let f = q();
        let e = |i| unit_vector(&f, 3, i);
        let a = Subspace::span(&f, 3, vec![e(0), e(1)]);
        let b = Subspace::span(&f, 3, vec![e(1), e(2)]);
        assert_eq!(a.intersect(&b).unwrap(), Subspace::span(&f, 3, vec![e(1)]));
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert!(matches!(
            a.intersect(&Subspace::zero(&f, 2)),
            Err(Error::AmbientMismatch(3, 2))
        ));
        // Kernels of the two characters of kZ2 (values on 1, g).
        let ker_plus = mat(&f, &[&[1, 1]]).nullspace();
        let ker_minus = mat(&f, &[&[1, -1]]).nullspace();
        assert_eq!(ker_plus.dim(), 1);
        assert_eq!(ker_plus.intersect(&ker_minus).unwrap().dim(), 0);
    }

    #[test]
    fn grassmann_identity_on_random_subspaces() {
        let f = q();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let n = rng.gen_range(1..7);
            let da = rng.gen_range(0..=n);
            let db = rng.gen_range(0..=n);
            let a = Subspace::span(&f, n, random_matrix(&f, &mut rng, da, n, 2).row_vectors());
            let b = Subspace::span(&f, n, random_matrix(&f, &mut rng, db, n, 2).row_vectors());
            let sum = a.sum(&b).unwrap();
            let meet = a.intersect(&b).unwrap();
            assert_eq!(a.dim() + b.dim(), sum.dim() + meet.dim());
            assert!(a.contains_subspace(&meet) && b.contains_subspace(&meet));
        }
    }

    #[test]
    fn matrix_orders() {
        let f = q();
        assert_eq!(Matrix::identity(&f, 3).order(10).unwrap(), Some(1));
        assert_eq!(mat(&f, &[&[0, 1], &[1, 0]]).order(10).unwrap(), Some(2));
        assert_eq!(mat(&f, &[&[1, 1], &[0, 1]]).order(50).unwrap(), None);
        assert_eq!(mat(&f, &[&[1, 1], &[1, 1]]).order(10), Err(Error::NotInvertible));
    }

    #[test]
    fn kronecker_products() {
        let f = q();
        let i2 = Matrix::identity(&f, 2);
        let i3 = Matrix::identity(&f, 3);
        assert_eq!(i2.kronecker(&i3).unwrap(), Matrix::identity(&f, 6));
        let swap = mat(&f, &[&[0, 1], &[1, 0]]);
        let block = swap.kronecker(&i2).unwrap();
        assert_eq!(
            block,
            mat(&f, &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]])
        );
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let [a, b, c, d] = [0; 4].map(|_| random_matrix(&f, &mut rng, 2, 2, 5));
        let lhs = a.kronecker(&b).unwrap().mul(&c.kronecker(&d).unwrap()).unwrap();
        let rhs = a.mul(&c).unwrap().kronecker(&b.mul(&d).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let g = Field::prime(3).unwrap();
        assert!(matches!(
            a.kronecker(&Matrix::identity(&g, 1)),
            Err(Error::FieldMismatch(..))
        ));
    }

    #[test]
    fn inverse_and_solve() {
        let f = q();
        let m = mat(&f, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        let x = m.solve(&[f.from_i64(3), f.from_i64(2)]).unwrap();
        assert_eq!(x, vec![f.one(), f.one()]);
        assert!(mat(&f, &[&[1, 1], &[1, 1]]).solve(&[f.one(), f.zero()]).is_none());
    }

    #[test]
    fn joint_kernel_matches_stacked_kernel() {
        let f = q();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let maps: Vec<Matrix> = (0..3).map(|_| random_matrix(&f, &mut rng, 2, 6, 3)).collect();
        let stacked = Matrix::from_rows(
            &f,
            6,
            maps.iter().flat_map(|m| m.row_vectors()).collect(),
        )
        .unwrap();
        let joint = joint_kernel(&f, 6, 3, |t, v| maps[t].apply(v).unwrap());
        assert_eq!(joint, stacked.nullspace());
    }
}
