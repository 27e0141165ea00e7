//! Associative symmetric bilinear forms: the linear solver for the full
//! space of such forms on an algebra, radicals, eigenspace orthogonality,
//! and exact definiteness certificates over `Q`.

use crate::algebra::Algebra;
use crate::axial::PeirceData;
use crate::error::{Error, Result};
use crate::linalg::{ldlt_definiteness, rref_and_kernel, Definiteness, Matrix, Subspace};
use crate::scalar::Scalar;

/// A symmetric bilinear form on an algebra, with the associativity law
/// `<x z, y> = <x, z y>` verified on all basis triples at construction.
#[derive(Debug, Clone)]
pub struct GramForm {
    algebra: Algebra,
    gram: Matrix,
}

impl GramForm {
    pub fn new(algebra: Algebra, gram: Matrix) -> Result<GramForm> {
        if gram.rows() != algebra.dim() || gram.cols() != algebra.dim() {
            return Err(Error::AmbientMismatch(gram.rows(), algebra.dim()));
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric(0, 0));
        }
        let n = algebra.dim();
        let pair = |u: &[Scalar], v: &[Scalar]| pair_with(&gram, u, v);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ei = basis_vec(&algebra, i);
                    let ej = basis_vec(&algebra, j);
                    let ik = algebra.product_vector(i, k).to_vec();
                    let kj = algebra.product_vector(k, j).to_vec();
                    if pair(&ik, &ej) != pair(&ei, &kj) {
                        return Err(Error::CrossCheckMismatch(format!(
                            "form is not associative on the basis triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(GramForm { algebra, gram })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn pair(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        pair_with(&self.gram, u, v)
    }
}

fn basis_vec(a: &Algebra, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(a.field()); a.dim()];
    v[i] = Scalar::one(a.field());
    v
}

fn pair_with(gram: &Matrix, u: &[Scalar], v: &[Scalar]) -> Scalar {
    let gv = gram.mul_vec(v);
    let mut acc = Scalar::zero(gram.field());
    for (a, b) in u.iter().zip(gv.iter()) {
        acc = &acc + &(a * b);
    }
    acc
}

/// Solves for the full linear space of symmetric bilinear forms satisfying
/// `<b_i b_k, b_j> = <b_i, b_k b_j>` on all ordered basis triples, in the
/// `n(n+1)/2` unknowns of the upper triangle. Returns a basis of the
/// solution space; redundant equations are absorbed by rank reduction.
///
/// When the space is one-dimensional and some designated axis has nonzero
/// norm, the representative is rescaled so that the first such axis has
/// norm one.
pub fn solve_associative_forms(a: &Algebra) -> Vec<GramForm> {
    let field = a.field();
    let n = a.dim();
    let unknowns = n * (n + 1) / 2;
    let slot = |i: usize, j: usize| -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        i * (2 * n - i + 1) / 2 + (j - i)
    };
    // one equation per ordered triple (i, j, k)
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![Scalar::zero(field); unknowns];
                for (m, c) in a.product_vector(i, k).iter().enumerate() {
                    if !c.is_zero() {
                        let s = slot(m, j);
                        row[s] = &row[s] + c;
                    }
                }
                for (m, c) in a.product_vector(k, j).iter().enumerate() {
                    if !c.is_zero() {
                        let s = slot(i, m);
                        row[s] = &row[s] - c;
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(field, unknowns, rows).expect("system shape");
    let (_, _, kernel) = rref_and_kernel(&system);
    let mut forms: Vec<GramForm> = kernel
        .basis_rows()
        .into_iter()
        .map(|sol| {
            let gram = Matrix::from_fn(field, n, n, |r, c| sol[slot(r, c)].clone());
            GramForm::new(a.clone(), gram).expect("solver output is associative")
        })
        .collect();
    if forms.len() == 1 {
        let gram = forms[0].gram().clone();
        let norm = a
            .axes()
            .into_iter()
            .map(|x| pair_with(&gram, x.coords(), x.coords()))
            .find(|v| !v.is_zero());
        if let Some(norm) = norm {
            let scaled = gram.scale(&norm.inverse().expect("nonzero norm"));
            forms[0] = GramForm::new(a.clone(), scaled).expect("rescaling keeps associativity");
        }
    }
    forms
}

/// The radical of the form: the kernel of its Gram matrix. Verified to be
/// an ideal, and to avoid every designated axis of nonzero norm when the
/// form is attached to a primitive axial algebra.
pub fn radical(form: &GramForm) -> Result<Subspace> {
    let (_, _, kernel) = rref_and_kernel(form.gram());
    let a = form.algebra();
    if !a.is_ideal(&kernel)? {
        return Err(Error::RadicalNotIdeal);
    }
    for x in a.axes() {
        if !form.pair(x.coords(), x.coords()).is_zero() && kernel.contains_vector(x.coords())? {
            return Err(Error::RadicalNotIdeal);
        }
    }
    Ok(kernel)
}

/// Whether the eigenspaces of distinct eigenvalues in the decomposition are
/// pairwise perpendicular under the form.
pub fn eigenspace_orthogonality(form: &GramForm, pd: &PeirceData) -> Result<bool> {
    if form.algebra() != pd.axis().algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let k = pd.eigenvalues().len();
    for i in 0..k {
        for j in (i + 1)..k {
            for u in pd.space_by_index(i).basis_rows() {
                for v in pd.space_by_index(j).basis_rows() {
                    if !form.pair(&u, &v).is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Exact definiteness of the form's Gram matrix; only meaningful over `Q`.
pub fn definiteness(form: &GramForm) -> Result<Definiteness> {
    ldlt_definiteness(form.gram())
}
