//! Dense matrices over Q(ζ_n) and exact Gaussian elimination.
//!
//! Elimination always pivots on the first nonzero entry of a column; every
//! routine skips zero entries, which keeps the monomial and nilpotent
//! matrices used for module actions cheap.

use std::fmt;

use super::cyclotomic::Cyclotomic;
use super::ExactError;

pub type Vector = Vec<Cyclotomic>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    order: u32,
    entries: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zeros(order: u32, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            order,
            entries: vec![Cyclotomic::zero(order); rows * cols],
        }
    }

    pub fn identity(order: u32, n: usize) -> Self {
        Self::scalar(order, n, &Cyclotomic::one(order))
    }

    pub fn scalar(order: u32, n: usize, c: &Cyclotomic) -> Self {
        let mut m = Self::zeros(order, n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols` and all
    /// entries must live in Q(ζ_order).
    pub fn from_rows(
        order: u32,
        cols: usize,
        rows: Vec<Vec<Cyclotomic>>,
    ) -> Result<Self, ExactError> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(ExactError::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for e in row {
                if e.order() != order {
                    return Err(ExactError::OrderMismatch {
                        left: order,
                        right: e.order(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            order,
            entries,
        })
    }

    /// Square matrix with a single entry per row: row `i` holds `v` in
    /// column `j` for `cols_of_rows[i] = (j, v)`.
    pub fn monomial(order: u32, cols_of_rows: &[(usize, Cyclotomic)]) -> Self {
        let n = cols_of_rows.len();
        let mut m = Self::zeros(order, n, n);
        for (i, (j, v)) in cols_of_rows.iter().enumerate() {
            m.set(i, *j, v.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Cyclotomic) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Cyclotomic>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Cyclotomic::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    /// The scalar `c` if the matrix is `c·I`.
    pub fn scalar_value(&self) -> Option<Cyclotomic> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0).clone();
        let ok = (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                if i == j {
                    *self.get(i, j) == c
                } else {
                    self.get(i, j).is_zero()
                }
            })
        });
        ok.then_some(c)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.order, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    t.set(j, i, v.clone());
                }
            }
        }
        t
    }

    pub fn scale(&self, c: &Cyclotomic) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            entries: self
                .entries
                .iter()
                .map(|e| if e.is_zero() { e.clone() } else { e * c })
                .collect(),
        }
    }

    fn same_shape(&self, other: &Matrix, what: &str) -> Result<(), ExactError> {
        if self.order != other.order {
            return Err(ExactError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ExactError::ShapeMismatch(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, ExactError> {
        self.same_shape(other, "add")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            entries,
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, ExactError> {
        self.same_shape(other, "sub")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            entries,
        })
    }

    /// `self - c·I`.
    pub fn shift(&self, c: &Cyclotomic) -> Result<Matrix, ExactError> {
        if !self.is_square() {
            return Err(ExactError::ShapeMismatch(
                "shift of non-square matrix".into(),
            ));
        }
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = m.get(i, i) - c;
            m.set(i, i, v);
        }
        Ok(m)
    }

    pub fn mat_mul(&self, other: &Matrix) -> Result<Matrix, ExactError> {
        if self.order != other.order {
            return Err(ExactError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        if self.cols != other.rows {
            return Err(ExactError::ShapeMismatch(format!(
                "mat_mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.order, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Cyclotomic]) -> Result<Vector, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::ShapeMismatch(format!(
                "apply: {}x{} to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| dot(self.row(i), v, self.order))
            .collect())
    }

    pub fn mat_pow(&self, e: u32) -> Result<Matrix, ExactError> {
        if !self.is_square() {
            return Err(ExactError::ShapeMismatch(
                "mat_pow of non-square matrix".into(),
            ));
        }
        let mut acc = Matrix::identity(self.order, self.rows);
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mat_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mat_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Kronecker product, left factor major: `(A⊗B)[(i,k),(j,l)] = A[i,j]·B[k,l]`.
    pub fn tensor_product(&self, other: &Matrix) -> Result<Matrix, ExactError> {
        if self.order != other.order {
            return Err(ExactError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(self.order, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn direct_sum(&self, other: &Matrix) -> Result<Matrix, ExactError> {
        if self.order != other.order {
            return Err(ExactError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        let mut out = Matrix::zeros(self.order, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<Cyclotomic, ExactError> {
        if !self.is_square() {
            return Err(ExactError::ShapeMismatch(
                "trace of non-square matrix".into(),
            ));
        }
        let mut t = Cyclotomic::zero(self.order);
        for i in 0..self.rows {
            t = &t + self.get(i, i);
        }
        Ok(t)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let pivots = rref_rows(&mut rows, self.cols);
        let m = Matrix::from_rows(self.order, self.cols, rows).expect("shape preserved");
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        rref_rows(&mut rows, self.cols).len()
    }

    /// Basis of the null space `{v : self·v = 0}`, one vector per free
    /// column of the RREF (1 in the free slot).
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let mut rows = self.to_rows();
        let pivots = rref_rows(&mut rows, self.cols);
        kernel_from_rref(&rows, &pivots, self.cols, self.order)
    }

    /// Reduced echelon basis of the column space.
    pub fn image_basis(&self) -> Vec<Vector> {
        let mut rows = self.transpose().to_rows();
        let r = rref_rows(&mut rows, self.rows).len();
        rows.truncate(r);
        rows
    }

    /// A solution of `self·x = b` (free variables set to zero).
    pub fn solve(&self, b: &[Cyclotomic]) -> Result<Vector, ExactError> {
        if b.len() != self.rows {
            return Err(ExactError::ShapeMismatch(format!(
                "solve: {} rows but right-hand side of length {}",
                self.rows,
                b.len()
            )));
        }
        let mut rows: Vec<Vector> = self
            .to_rows()
            .into_iter()
            .zip(b)
            .map(|(mut r, bi)| {
                r.push(bi.clone());
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Err(ExactError::SingularSystem);
        }
        let mut x = vec![Cyclotomic::zero(self.order); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = rows[r][self.cols].clone();
        }
        Ok(x)
    }

    pub fn det(&self) -> Result<Cyclotomic, ExactError> {
        if !self.is_square() {
            return Err(ExactError::ShapeMismatch("det of non-square matrix".into()));
        }
        let n = self.rows;
        let mut rows = self.to_rows();
        let mut det = Cyclotomic::one(self.order);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
                return Ok(Cyclotomic::zero(self.order));
            };
            if p != col {
                rows.swap(p, col);
                det = -det;
            }
            let piv = rows[col][col].clone();
            det = &det * &piv;
            let inv = piv.inv()?;
            for r in col + 1..n {
                if rows[r][col].is_zero() {
                    continue;
                }
                let f = &rows[r][col] * &inv;
                let (top, bottom) = rows.split_at_mut(r);
                axpy(&mut bottom[0], &top[col], &f, col);
            }
        }
        Ok(det)
    }

    /// `det(c·I - self)`.
    pub fn char_poly_eval(&self, c: &Cyclotomic) -> Result<Cyclotomic, ExactError> {
        Matrix::scalar(self.order, self.rows, c).sub(self)?.det()
    }

    /// Monic minimal polynomial, lowest degree first, found as the first
    /// linear dependency among the flattened powers I, M, M², ….
    pub fn min_poly(&self) -> Result<Vec<Cyclotomic>, ExactError> {
        if !self.is_square() {
            return Err(ExactError::ShapeMismatch(
                "min_poly of non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let order = self.order;
        let width = n * n;
        // Each stored row is [vec(M^k) reduced | coefficients expressing it
        // in terms of I, M, …, M^k], echelonised on the first block.
        let mut basis: Vec<(usize, Vector)> = Vec::new();
        let mut power = Matrix::identity(order, n);
        for k in 0..=n {
            let mut row: Vector = power.entries.clone();
            row.extend((0..=n).map(|j| {
                if j == k {
                    Cyclotomic::one(order)
                } else {
                    Cyclotomic::zero(order)
                }
            }));
            for (p, b) in &basis {
                if !row[*p].is_zero() {
                    let f = row[*p].clone();
                    axpy(&mut row, b, &f, 0);
                }
            }
            match (0..width).find(|&j| !row[j].is_zero()) {
                Some(p) => {
                    let inv = row[p].inv()?;
                    for e in row.iter_mut() {
                        if !e.is_zero() {
                            *e = &*e * &inv;
                        }
                    }
                    basis.push((p, row));
                }
                None => {
                    // row tail is a relation with coefficient 1 on M^k.
                    let coeffs: Vector = row[width..width + k + 1].to_vec();
                    return Ok(coeffs);
                }
            }
            power = power.mat_mul(self)?;
        }
        unreachable!("Cayley-Hamilton bounds the degree by n")
    }

    /// Evaluates a polynomial (lowest degree first) at this matrix.
    pub fn eval_poly(&self, coeffs: &[Cyclotomic]) -> Result<Matrix, ExactError> {
        let n = self.rows;
        let mut acc = Matrix::zeros(self.order, n, n);
        for c in coeffs.iter().rev() {
            acc = acc.mat_mul(self)?.add(&Matrix::scalar(self.order, n, c))?;
        }
        Ok(acc)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over Q(z{})",
            self.rows, self.cols, self.order
        )?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn dot(a: &[Cyclotomic], b: &[Cyclotomic], order: u32) -> Cyclotomic {
    let mut acc = Cyclotomic::zero(order);
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

/// `target[j] -= f * source[j]` for `j >= from`.
fn axpy(target: &mut [Cyclotomic], source: &[Cyclotomic], f: &Cyclotomic, from: usize) {
    for (t, s) in target[from..].iter_mut().zip(&source[from..]) {
        if !s.is_zero() {
            *t = &*t - &(f * s);
        }
    }
}

/// In-place RREF on the first `cols` columns of `rows`; returns pivot columns.
/// Zero rows end up at the bottom.
pub fn rref_rows(rows: &mut [Vector], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        if !rows[r][col].is_one() {
            let inv = rows[r][col].inv().expect("nonzero pivot");
            for e in rows[r][col..].iter_mut() {
                if !e.is_zero() {
                    *e = &*e * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                axpy(row, &pivot_row, &f, col);
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

fn kernel_from_rref(rows: &[Vector], pivots: &[usize], cols: usize, order: u32) -> Vec<Vector> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Cyclotomic::zero(order); cols];
            v[f] = Cyclotomic::one(order);
            for (r, &p) in pivots.iter().enumerate() {
                if !rows[r][f].is_zero() {
                    v[p] = -&rows[r][f];
                }
            }
            v
        })
        .collect()
}

/// A subspace of Q(ζ_n)^dim held as a reduced echelon basis. The basis is
/// canonical: equal subspaces have identical `basis` and `pivots`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    order: u32,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(order: u32, ambient: usize) -> Self {
        Subspace {
            ambient,
            order,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(order: u32, ambient: usize) -> Self {
        Self::span(order, ambient, Matrix::identity(order, ambient).to_rows())
    }

    pub fn span(order: u32, ambient: usize, mut vectors: Vec<Vector>) -> Self {
        let pivots = rref_rows(&mut vectors, ambient);
        vectors.truncate(pivots.len());
        Subspace {
            ambient,
            order,
            basis: vectors,
            pivots,
        }
    }

    pub fn kernel(m: &Matrix) -> Self {
        Self::span(m.order(), m.cols(), m.kernel_basis())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Image of the subspace under `m`.
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace, ExactError> {
        let images = self
            .basis
            .iter()
            .map(|v| m.apply(v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Subspace::span(self.order, m.rows(), images))
    }

    /// Coordinates of `v` in the echelon basis, read off at the pivots.
    /// The caller guarantees `v` lies in the subspace.
    pub fn coords(&self, v: &[Cyclotomic]) -> Vector {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn contains(&self, v: &[Cyclotomic]) -> bool {
        let mut rest = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !rest[p].is_zero() {
                let f = rest[p].clone();
                axpy(&mut rest, b, &f, 0);
            }
        }
        rest.iter().all(Cyclotomic::is_zero)
    }

    /// Intersection via the kernel of the stacked system `[A | -B]`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.order, self.ambient);
        }
        let k = self.dim();
        let cols = k + other.dim();
        let rows: Vec<Vector> = (0..self.ambient)
            .map(|i| {
                self.basis
                    .iter()
                    .map(|b| b[i].clone())
                    .chain(other.basis.iter().map(|b| -&b[i]))
                    .collect()
            })
            .collect();
        let m = Matrix::from_rows(self.order, cols, rows).expect("consistent shape");
        let vectors = m
            .kernel_basis()
            .into_iter()
            .map(|c| {
                let mut v = vec![Cyclotomic::zero(self.order); self.ambient];
                for (coef, b) in c[..k].iter().zip(&self.basis) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (vi, bi) in v.iter_mut().zip(b) {
                        if !bi.is_zero() {
                            *vi = &*vi + &(coef * bi);
                        }
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.order, self.ambient, vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(6, n)
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            6,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn kernel_of_zero_matrix() {
        assert_eq!(Matrix::zeros(6, 3, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn min_poly_of_identity() {
        let p = Matrix::identity(6, 4).min_poly().unwrap();
        assert_eq!(p, vec![q(-1), q(1)]);
    }

    #[test]
    fn kronecker_trace_law() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        let b = mat(&[&[2, 0, 1], &[0, -1, 5], &[7, 1, 3]]);
        let k = a.tensor_product(&b).unwrap();
        assert_eq!((k.rows(), k.cols()), (6, 6));
        assert_eq!(
            k.trace().unwrap(),
            &a.trace().unwrap() * &b.trace().unwrap()
        );
    }

    #[test]
    fn solve_and_singular() {
        let a = mat(&[&[1, 1], &[1, 1]]);
        assert_eq!(a.solve(&[q(2), q(2)]).unwrap(), vec![q(2), q(0)]);
        assert_eq!(a.solve(&[q(1), q(2)]), Err(ExactError::SingularSystem));
        assert!(matches!(
            a.mat_mul(&mat(&[&[1, 2, 3]])),
            Err(ExactError::ShapeMismatch(_))
        ));
    }

    #[test]
    fn nilpotent_min_poly_and_det() {
        let n = mat(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(n.min_poly().unwrap(), vec![q(0), q(0), q(0), q(1)]);
        assert_eq!(n.det().unwrap(), q(0));
        assert_eq!(mat(&[&[2, 1], &[1, 1]]).det().unwrap(), q(1));
        // det(cI - N) = c^3
        assert_eq!(n.char_poly_eval(&q(2)).unwrap(), q(8));
    }

    #[test]
    fn subspace_intersection() {
        let e = |v: &[i64]| v.iter().map(|&x| q(x)).collect::<Vector>();
        let a = Subspace::span(6, 3, vec![e(&[1, 0, 0]), e(&[0, 1, 0])]);
        let b = Subspace::span(6, 3, vec![e(&[0, 1, 0]), e(&[0, 0, 1])]);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&e(&[0, 5, 0])));
        assert!(!i.contains(&e(&[1, 0, 0])));
    }

    #[test]
    fn image_basis_is_column_space() {
        let a = mat(&[&[1, 2], &[2, 4], &[0, 0]]);
        let img = a.image_basis();
        assert_eq!(img.len(), 1);
        assert_eq!(img[0], vec![q(1), q(2), q(0)]);
    }
}
