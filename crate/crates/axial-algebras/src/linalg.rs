//! Exact dense linear algebra over [`Scalar`]: row reduction, kernels,
//! canonical subspaces, eigenspaces, minimal polynomials, and an exact
//! LDL^T definiteness certificate over `Q`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A dense matrix with row-major entries, all over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let s = f(r, c);
                assert_eq!(s.field(), field, "matrix entry field mismatch");
                entries.push(s);
            }
        }
        Matrix {
            rows,
            cols,
            field,
            entries,
        }
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        for row in &rows {
            if row.len() != cols {
                return Err(Error::AmbientMismatch(row.len(), cols));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch(
                        s.field().to_string(),
                        field.to_string(),
                    ));
                }
            }
        }
        let r = rows.len();
        Ok(Matrix {
            rows: r,
            cols,
            field,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Parses a grid of scalar strings; handy in tests and file loading.
    pub fn parse(field: Field, rows: &[&[&str]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut out = Vec::new();
        for row in rows {
            out.push(
                row.iter()
                    .map(|s| Scalar::parse(s, field))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Matrix::from_rows(field, cols, out)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_defect().is_none()
    }

    fn symmetry_defect(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((self.rows, self.cols));
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.at(i, j) != self.at(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| {
            self.at(c, r).clone()
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |r, c| {
            self.at(r, c) + other.at(r, c)
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |r, c| {
            self.at(r, c) - other.at(r, c)
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |r, c| self.at(r, c) * s)
    }

    pub fn mul_matrix(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        Matrix::from_fn(self.field, self.rows, other.cols, |r, c| {
            let mut acc = Scalar::zero(self.field);
            for k in 0..self.cols {
                acc = &acc + &(self.at(r, k) * other.at(k, c));
            }
            acc
        })
    }

    /// Applies the matrix to a column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero(self.field);
                for (c, vc) in v.iter().enumerate() {
                    acc = &acc + &(self.at(r, c) * vc);
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Row-reduces in place to reduced row echelon form; returns pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..self.cols {
            // find a nonzero entry at or below `lead`
            let Some(pr) = (lead..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(lead, pr);
            let inv = self.at(lead, col).inverse().expect("pivot nonzero");
            for c in col..self.cols {
                let v = self.at(lead, c) * &inv;
                self.set(lead, c, v);
            }
            for r in 0..self.rows {
                if r != lead && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for c in col..self.cols {
                        let v = self.at(r, c) - &(&factor * self.at(lead, c));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            lead += 1;
            if lead == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        (m, rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one(self.field));
        }
        let pivots = aug.rref_in_place();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(self.field, n, n, |r, c| {
            aug.at(r, n + c).clone()
        }))
    }

    /// Solves `self * x = rhs` for a column vector, if consistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for (r, rv) in rhs.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, self.cols, rv.clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![Scalar::zero(self.field); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug.at(row, self.cols).clone();
        }
        Some(x)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(Scalar::render).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Row reduction together with the (right) kernel of the matrix.
///
/// The kernel rows `k` satisfy `m * k^T = 0`, and
/// `rank + dim kernel = cols`.
pub fn rref_and_kernel(m: &Matrix) -> (Matrix, usize, Subspace) {
    let (rref, rank, pivots) = m.rref();
    let field = m.field();
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut rows = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![Scalar::zero(field); n];
        v[fc] = Scalar::one(field);
        for (prow, &pcol) in pivots.iter().enumerate() {
            v[pcol] = rref.at(prow, fc).neg();
        }
        rows.push(v);
    }
    let kernel = Subspace::from_rows(field, n, rows);
    (rref, rank, kernel)
}

/// A subspace of `F^n` held as a reduced-row-echelon basis with no zero
/// rows. The representation is canonical, so `==` decides subspace equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            field,
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            field,
            basis: Matrix::identity(field, ambient),
        }
    }

    pub fn from_rows(field: Field, ambient: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let m = Matrix::from_rows(field, ambient, rows).expect("row shape");
        let (rref, rank, _) = m.rref();
        let kept: Vec<Vec<Scalar>> = (0..rank).map(|r| rref.row_vec(r)).collect();
        Subspace {
            ambient,
            field,
            basis: Matrix::from_rows(field, ambient, kept).expect("row shape"),
        }
    }

    pub fn span_of_vector(field: Field, v: Vec<Scalar>) -> Self {
        let n = v.len();
        Subspace::from_rows(field, n, vec![v])
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|r| self.basis.row_vec(r)).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Ok(Subspace::from_rows(self.field, self.ambient, rows))
    }

    /// Zassenhaus intersection: row-reduce `[A|A; B|0]` and read the rows
    /// whose left half vanished.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for r in self.basis_rows() {
            let mut row = r.clone();
            row.extend(r);
            rows.push(row);
        }
        for r in other.basis_rows() {
            let mut row = r;
            row.extend(vec![Scalar::zero(self.field); n]);
            rows.push(row);
        }
        let m = Matrix::from_rows(self.field, 2 * n, rows).expect("row shape");
        let (rref, rank, _) = m.rref();
        let mut out = Vec::new();
        for r in 0..rank {
            if (0..n).all(|c| rref.at(r, c).is_zero()) {
                out.push((n..2 * n).map(|c| rref.at(r, c).clone()).collect());
            }
        }
        Ok(Subspace::from_rows(self.field, n, out))
    }

    /// Reduces a vector against the RREF basis; the residual is zero exactly
    /// when the vector lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for r in 0..self.dim() {
            let pivot = (0..self.ambient)
                .find(|&c| !self.basis.at(r, c).is_zero())
                .expect("no zero rows in a subspace basis");
            if !out[pivot].is_zero() {
                let factor = out[pivot].clone();
                for (c, oc) in out.iter_mut().enumerate() {
                    *oc = &*oc - &(&factor * self.basis.at(r, c));
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch(v.len(), self.ambient));
        }
        Ok(self.reduce(v).iter().all(Scalar::is_zero))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for row in other.basis_rows() {
            if !self.contains_vector(&row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Eigenspace of a square matrix for the given eigenvalue, as the kernel of
/// `m - lambda I`. Every basis row `v` satisfies `v * m^T = lambda * v`.
pub fn eigenspace(m: &Matrix, lambda: &Scalar) -> Result<Subspace> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let shifted = m.sub(&Matrix::identity(m.field(), m.rows()).scale(lambda));
    let (_, _, kernel) = rref_and_kernel(&shifted);
    Ok(kernel)
}

/// A polynomial over a field, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>, // trailing coefficient nonzero unless the zero polynomial
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Poly::new(field, vec![Scalar::one(field)])
    }

    /// The monic linear factor `x - root`.
    pub fn x_minus(root: &Scalar) -> Self {
        let field = root.field();
        Poly::new(field, vec![root.neg(), Scalar::one(field)])
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Scalar::is_one)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![Scalar::zero(self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = divisor
            .coeffs
            .last()
            .unwrap()
            .inverse()
            .expect("nonzero lead");
        if rem.len() <= dd {
            return (Poly::zero(self.field), Poly::new(self.field, rem));
        }
        let mut quot = vec![Scalar::zero(self.field); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] * &lead_inv;
            if !c.is_zero() {
                quot[k - dd] = c.clone();
                for (i, dcoef) in divisor.coeffs.iter().enumerate() {
                    rem[k - dd + i] = &rem[k - dd + i] - &(&c * dcoef);
                }
            }
        }
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let g = self.gcd(other);
        let (q, r) = self.mul(other).divrem(&g);
        debug_assert!(r.is_zero());
        q.make_monic()
    }

    pub fn make_monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.inverse().expect("nonzero lead");
                Poly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn eval_scalar(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero(self.field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul_matrix(m)
                .add(&Matrix::identity(self.field, n).scale(c));
        }
        acc
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = match i {
                0 => c.render(),
                1 if c.is_one() => var.to_string(),
                1 => format!("{}*{}", c.render(), var),
                _ if c.is_one() => format!("{var}^{i}"),
                _ => format!("{}*{}^{}", c.render(), var, i),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

/// Minimal polynomial of a square matrix by Krylov iteration: for each basis
/// vector, find the first linear dependence in its Krylov sequence, then take
/// the LCM of the resulting local minimal polynomials.
pub fn minimal_polynomial(m: &Matrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let field = m.field();
    let n = m.rows();
    if n == 0 {
        return Ok(Poly::one(field));
    }
    let mut mu = Poly::one(field);
    for i in 0..n {
        let mut e = vec![Scalar::zero(field); n];
        e[i] = Scalar::one(field);
        let local = local_minimal_polynomial(m, &e);
        mu = mu.lcm(&local);
        if mu.degree() == Some(n) {
            break; // cannot grow further
        }
    }
    Ok(mu)
}

fn local_minimal_polynomial(m: &Matrix, start: &[Scalar]) -> Poly {
    let field = m.field();
    let n = m.rows();
    let mut krylov: Vec<Vec<Scalar>> = vec![start.to_vec()];
    loop {
        let next = m.mul_vec(krylov.last().unwrap());
        // solve sum_j c_j krylov[j] = next
        let k = krylov.len();
        let mat = Matrix::from_fn(field, n, k, |r, c| krylov[c][r].clone());
        if let Some(c) = mat.solve(&next) {
            let mut coeffs: Vec<Scalar> = c.iter().map(Scalar::neg).collect();
            coeffs.push(Scalar::one(field));
            return Poly::new(field, coeffs);
        }
        krylov.push(next);
        debug_assert!(krylov.len() <= n + 1);
    }
}

/// Exact definiteness verdict for a symmetric matrix over `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    /// Positive semidefinite with a nontrivial kernel of the given dimension.
    PositiveSemidefinite {
        kernel_dim: usize,
    },
    Indefinite,
    /// No positive directions: negative semidefinite (possibly definite).
    NegativeTouching,
}

impl fmt::Display for Definiteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Definiteness::PositiveDefinite => write!(f, "PositiveDefinite"),
            Definiteness::PositiveSemidefinite { kernel_dim } => {
                write!(f, "PositiveSemidefinite(kernel_dim={kernel_dim})")
            }
            Definiteness::Indefinite => write!(f, "Indefinite"),
            Definiteness::NegativeTouching => write!(f, "NegativeTouching"),
        }
    }
}

/// Signature of a symmetric rational matrix by exact symmetric elimination
/// with 1x1 and hyperbolic 2x2 pivots. Sylvester's law turns the pivot signs
/// into the inertia `(positive, negative, zero)`.
pub fn inertia(g: &Matrix) -> Result<(usize, usize, usize)> {
    if g.field() != Field::Rationals {
        return Err(Error::UnsupportedField(g.field().to_string()));
    }
    if let Some((r, c)) = g.symmetry_defect() {
        return Err(Error::NotSymmetric(r, c));
    }
    let field = g.field();
    let mut m = g.clone();
    let mut n = m.rows();
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    while n > 0 {
        if m.is_zero() {
            zero += n;
            break;
        }
        if let Some(k) = (0..n).find(|&k| !m.at(k, k).is_zero()) {
            let d = m.at(k, k).clone();
            match d.sign().expect("rational scalar") {
                1 => pos += 1,
                -1 => neg += 1,
                _ => unreachable!(),
            }
            // Schur complement with respect to the 1x1 pivot at (k,k)
            let rest: Vec<usize> = (0..n).filter(|&i| i != k).collect();
            let d_inv = d.inverse().expect("nonzero pivot");
            let next = Matrix::from_fn(field, n - 1, n - 1, |r, c| {
                let (i, j) = (rest[r], rest[c]);
                m.at(i, j) - &(&(m.at(i, k) * m.at(k, j)) * &d_inv)
            });
            m = next;
            n -= 1;
        } else {
            // all diagonal entries vanish; pick a hyperbolic 2x2 block
            let mut found = None;
            'outer: for i in 0..n {
                for j in (i + 1)..n {
                    if !m.at(i, j).is_zero() {
                        found = Some((i, j));
                        break 'outer;
                    }
                }
            }
            let (i, j) = found.expect("nonzero matrix with zero diagonal has off-diagonal entry");
            let b = m.at(i, j).clone();
            pos += 1;
            neg += 1;
            // Schur complement with respect to [[0,b],[b,0]], inverse [[0,1/b],[1/b,0]]
            let rest: Vec<usize> = (0..n).filter(|&r| r != i && r != j).collect();
            let b_inv = b.inverse().expect("nonzero block");
            let next = Matrix::from_fn(field, n - 2, n - 2, |r, c| {
                let (u, v) = (rest[r], rest[c]);
                let correction =
                    &(&(m.at(u, i) * m.at(j, v)) + &(m.at(u, j) * m.at(i, v))) * &b_inv;
                m.at(u, v) - &correction
            });
            m = next;
            n -= 2;
        }
    }
    Ok((pos, neg, zero))
}

/// Definiteness verdict from the exact inertia.
pub fn ldlt_definiteness(g: &Matrix) -> Result<Definiteness> {
    let (pos, neg, zero) = inertia(g)?;
    Ok(if neg == 0 && zero == 0 {
        Definiteness::PositiveDefinite
    } else if neg == 0 {
        Definiteness::PositiveSemidefinite { kernel_dim: zero }
    } else if pos > 0 {
        Definiteness::Indefinite
    } else {
        Definiteness::NegativeTouching
    })
}
