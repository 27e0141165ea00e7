//! Commutative algebras given by structure constants on a named basis,
//! with element arithmetic, adjoint matrices, generated subalgebras,
//! ideal closures, and quotients.
//!
//! Products are stored only for basis pairs `(i, j)` with `i <= j`, so a
//! non-commutative table is unrepresentable. Nothing here assumes
//! associativity or any other identity.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{Field, Scalar};

#[derive(Debug)]
struct AlgebraData {
    field: Field,
    basis_names: Vec<String>,
    dim: usize,
    /// Upper-triangle products: entry for `(i, j)`, `i <= j`, at
    /// `i*(2*dim - i + 1)/2 + (j - i)`.
    products: Vec<Vec<Scalar>>,
    /// Designated generating axes as coordinate vectors.
    axes: Vec<Vec<Scalar>>,
}

/// A finite-dimensional commutative algebra over an exact field, plus its
/// designated list of generating axes. Cheap to clone and share; the
/// underlying data is immutable.
#[derive(Debug, Clone)]
pub struct Algebra {
    inner: Arc<AlgebraData>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }
}

fn tri_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < dim);
    i * (2 * dim - i + 1) / 2 + (j - i)
}

impl Algebra {
    /// Builds an algebra from a closure giving the product of basis pairs
    /// `(i, j)` with `i <= j` as a coordinate vector.
    pub fn from_table(
        field: Field,
        basis_names: Vec<String>,
        table: impl Fn(usize, usize) -> Vec<Scalar>,
        axes: Vec<Vec<Scalar>>,
    ) -> Result<Algebra> {
        let dim = basis_names.len();
        let mut products = Vec::with_capacity(dim * (dim + 1) / 2);
        for i in 0..dim {
            for j in i..dim {
                let v = table(i, j);
                check_vector(field, dim, &v)?;
                products.push(v);
            }
        }
        for a in &axes {
            check_vector(field, dim, a)?;
        }
        Ok(Algebra {
            inner: Arc::new(AlgebraData {
                field,
                basis_names,
                dim,
                products,
                axes,
            }),
        })
    }

    /// Builds an algebra from an explicit `(i, j) -> product` map with
    /// `i <= j`; missing pairs default to the zero product.
    pub fn from_product_map(
        field: Field,
        basis_names: Vec<String>,
        map: &BTreeMap<(usize, usize), Vec<Scalar>>,
        axes: Vec<Vec<Scalar>>,
    ) -> Result<Algebra> {
        let dim = basis_names.len();
        for &(i, j) in map.keys() {
            if i > j || j >= dim {
                return Err(Error::BadParameters(format!(
                    "product key ({i},{j}) out of range for dimension {dim}"
                )));
            }
        }
        Algebra::from_table(
            field,
            basis_names,
            |i, j| {
                map.get(&(i, j))
                    .cloned()
                    .unwrap_or_else(|| vec![Scalar::zero(field); dim])
            },
            axes,
        )
    }

    pub fn field(&self) -> Field {
        self.inner.field
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.inner.basis_names
    }

    /// Structure-constant vector of `b_i * b_j` (either order).
    pub fn product_vector(&self, i: usize, j: usize) -> &[Scalar] {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        &self.inner.products[tri_index(self.inner.dim, i, j)]
    }

    pub fn axis_count(&self) -> usize {
        self.inner.axes.len()
    }

    pub fn axis(&self, k: usize) -> Element {
        Element {
            algebra: self.clone(),
            coords: self.inner.axes[k].clone(),
        }
    }

    pub fn axes(&self) -> Vec<Element> {
        (0..self.axis_count()).map(|k| self.axis(k)).collect()
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element> {
        check_vector(self.field(), self.dim(), &coords)?;
        Ok(Element {
            algebra: self.clone(),
            coords,
        })
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut coords = vec![Scalar::zero(self.field()); self.dim()];
        coords[i] = Scalar::one(self.field());
        Element {
            algebra: self.clone(),
            coords,
        }
    }

    pub fn zero(&self) -> Element {
        Element {
            algebra: self.clone(),
            coords: vec![Scalar::zero(self.field()); self.dim()],
        }
    }

    /// Bilinear product on raw coordinate vectors.
    pub fn mul_coords(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let field = self.field();
        let mut out = vec![Scalar::zero(field); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                let prod = self.product_vector(i, j);
                for k in 0..n {
                    if !prod[k].is_zero() {
                        out[k] = &out[k] + &(&coeff * &prod[k]);
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x`: column `j` holds the
    /// coordinates of `x * b_j`.
    pub fn adjoint_matrix(&self, x: &Element) -> Matrix {
        let n = self.dim();
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![Scalar::zero(self.field()); n];
            e[j] = Scalar::one(self.field());
            cols.push(self.mul_coords(&x.coords, &e));
        }
        Matrix::from_fn(self.field(), n, n, |r, c| cols[c][r].clone())
    }

    /// Least subspace containing the generators and closed under the
    /// product, by span-closure iteration. The dimension strictly grows
    /// each round, so the loop runs at most `dim` times.
    pub fn generated_subalgebra(&self, gens: &[Element]) -> Result<Subspace> {
        if gens.is_empty() {
            return Err(Error::BadParameters("empty generator list".into()));
        }
        for g in gens {
            if g.algebra != *self {
                return Err(Error::AlgebraMismatch);
            }
        }
        let rows: Vec<Vec<Scalar>> = gens.iter().map(|g| g.coords.clone()).collect();
        let mut span = Subspace::from_rows(self.field(), self.dim(), rows);
        for _ in 0..=self.dim() {
            let basis = span.basis_rows();
            let mut new_rows = basis.clone();
            let mut grew = false;
            for (i, u) in basis.iter().enumerate() {
                for v in basis.iter().skip(i) {
                    let p = self.mul_coords(u, v);
                    if !span.contains_vector(&p)? {
                        new_rows.push(p);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
            span = Subspace::from_rows(self.field(), self.dim(), new_rows);
        }
        Ok(span)
    }

    /// Least subspace containing the seed and closed under multiplication by
    /// every basis element.
    pub fn ideal_closure(&self, seed: &[Element]) -> Result<Subspace> {
        for g in seed {
            if g.algebra != *self {
                return Err(Error::AlgebraMismatch);
            }
        }
        let rows: Vec<Vec<Scalar>> = seed.iter().map(|g| g.coords.clone()).collect();
        let mut span = Subspace::from_rows(self.field(), self.dim(), rows);
        for _ in 0..=self.dim() {
            let basis = span.basis_rows();
            let mut new_rows = basis.clone();
            let mut grew = false;
            for u in &basis {
                for j in 0..self.dim() {
                    let mut e = vec![Scalar::zero(self.field()); self.dim()];
                    e[j] = Scalar::one(self.field());
                    let p = self.mul_coords(u, &e);
                    if !span.contains_vector(&p)? {
                        new_rows.push(p);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
            span = Subspace::from_rows(self.field(), self.dim(), new_rows);
        }
        Ok(span)
    }

    /// Checks that a subspace is closed under multiplication by every basis
    /// element.
    pub fn is_ideal(&self, sub: &Subspace) -> Result<bool> {
        Ok(self.ideal_defect(sub)?.is_none())
    }

    fn ideal_defect(&self, sub: &Subspace) -> Result<Option<(usize, usize)>> {
        if sub.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch(sub.ambient_dim(), self.dim()));
        }
        for (r, u) in sub.basis_rows().iter().enumerate() {
            for j in 0..self.dim() {
                let mut e = vec![Scalar::zero(self.field()); self.dim()];
                e[j] = Scalar::one(self.field());
                if !sub.contains_vector(&self.mul_coords(u, &e))? {
                    return Ok(Some((r, j)));
                }
            }
        }
        Ok(None)
    }

    /// Quotient by a verified ideal. The quotient basis consists of the
    /// non-pivot coordinates of the ideal's RREF basis, which makes the
    /// induced structure constants reproducible. Axis images are projected
    /// into the quotient and recorded as its designated axes.
    pub fn quotient(&self, ideal: &Subspace) -> Result<QuotientMap> {
        if let Some((row, col)) = self.ideal_defect(ideal)? {
            return Err(Error::NotAnIdeal { row, col });
        }
        let field = self.field();
        let n = self.dim();
        let pivots: Vec<usize> = ideal
            .basis_rows()
            .iter()
            .map(|row| row.iter().position(|c| !c.is_zero()).expect("no zero rows"))
            .collect();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let reduced = ideal.reduce(v);
            free.iter().map(|&c| reduced[c].clone()).collect()
        };
        let names: Vec<String> = free
            .iter()
            .map(|&c| self.inner.basis_names[c].clone())
            .collect();
        let table = |i: usize, j: usize| -> Vec<Scalar> {
            let mut ei = vec![Scalar::zero(field); n];
            ei[free[i]] = Scalar::one(field);
            let mut ej = vec![Scalar::zero(field); n];
            ej[free[j]] = Scalar::one(field);
            project(&self.mul_coords(&ei, &ej))
        };
        let axes: Vec<Vec<Scalar>> = self.inner.axes.iter().map(|a| project(a)).collect();
        let algebra = Algebra::from_table(field, names, table, axes)?;
        let projection = Matrix::from_fn(field, free.len(), n, |r, c| {
            let mut e = vec![Scalar::zero(field); n];
            e[c] = Scalar::one(field);
            project(&e)[r].clone()
        });
        Ok(QuotientMap {
            algebra,
            projection,
        })
    }
}

fn check_vector(field: Field, dim: usize, v: &[Scalar]) -> Result<()> {
    if v.len() != dim {
        return Err(Error::AmbientMismatch(v.len(), dim));
    }
    for s in v {
        if s.field() != field {
            return Err(Error::FieldMismatch(
                s.field().to_string(),
                field.to_string(),
            ));
        }
    }
    Ok(())
}

/// A quotient algebra together with the linear projection from the parent;
/// the projection is an algebra homomorphism.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    pub algebra: Algebra,
    pub projection: Matrix,
}

impl QuotientMap {
    pub fn project(&self, x: &Element) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: self.projection.mul_vec(x.coords()),
        }
    }
}

/// An element of a specific [`Algebra`], held as a coordinate vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    algebra: Algebra,
    coords: Vec<Scalar>,
}

impl Element {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Element {
            algebra: self.algebra.clone(),
            coords: self.algebra.mul_coords(&self.coords, &other.coords),
        })
    }

    pub fn add(&self, other: &Element) -> Element {
        assert!(self.algebra == other.algebra, "element algebra mismatch");
        Element {
            algebra: self.algebra.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        assert!(self.algebra == other.algebra, "element algebra mismatch");
        Element {
            algebra: self.algebra.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn neg(&self) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.algebra.mul_coords(&self.coords, &self.coords) == self.coords
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.coords.iter().map(Scalar::render).collect();
        format!("({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::{catalog, CatalogName};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const Q: Field = Field::Rationals;

    fn q(s: &str) -> Scalar {
        Scalar::parse(s, Q).unwrap()
    }

    fn three_c(eta: &str) -> Algebra {
        catalog(&CatalogName::ThreeC(q(eta)), Q).unwrap().algebra
    }

    #[test]
    fn products_match_defining_relations() {
        let a = three_c("1/4");
        let c0 = a.basis_element(0);
        let c1 = a.basis_element(1);
        // c0 * c1 = (eta/2)(c0 + c1 - c2)
        let p = c0.mul(&c1).unwrap();
        assert_eq!(p.coords(), &[q("1/8"), q("1/8"), q("-1/8")]);
        assert_eq!(c0.mul(&c1).unwrap(), c1.mul(&c0).unwrap());

        let two_b = catalog(&CatalogName::TwoB, Q).unwrap().algebra;
        assert!(two_b
            .basis_element(0)
            .mul(&two_b.basis_element(1))
            .unwrap()
            .is_zero());

        let star = catalog(&CatalogName::ThreeCStar, Q).unwrap().algebra;
        let d0d1 = star.basis_element(0).mul(&star.basis_element(1)).unwrap();
        assert_eq!(d0d1.coords(), &[q("-1"), q("-1")]); // d2 = -d0 - d1
    }

    #[test]
    fn adjoint_matrices() {
        let two_b = catalog(&CatalogName::TwoB, Q).unwrap().algebra;
        let unit = two_b.basis_element(0).add(&two_b.basis_element(1));
        assert_eq!(two_b.adjoint_matrix(&unit), Matrix::identity(Q, 2));
        assert!(two_b.adjoint_matrix(&two_b.zero()).is_zero());

        let a = three_c("1/4");
        let ad = a.adjoint_matrix(&a.basis_element(0));
        // column 1 holds the coordinates of c0 * c1
        assert_eq!(
            a.mul_coords(a.basis_element(0).coords(), a.basis_element(1).coords()),
            vec![
                ad.at(0, 1).clone(),
                ad.at(1, 1).clone(),
                ad.at(2, 1).clone()
            ]
        );
    }

    #[test]
    fn generated_subalgebras() {
        let a = three_c("1/4");
        let single = a.generated_subalgebra(&[a.basis_element(0)]).unwrap();
        assert_eq!(single.dim(), 1);
        let pair = a
            .generated_subalgebra(&[a.basis_element(0), a.basis_element(1)])
            .unwrap();
        assert_eq!(pair.dim(), 3);

        let two_b = catalog(&CatalogName::TwoB, Q).unwrap().algebra;
        let span = two_b.generated_subalgebra(&two_b.axes()).unwrap();
        assert_eq!(span.dim(), 2);

        // closed: products of basis rows stay inside
        for u in pair.basis_rows() {
            for v in pair.basis_rows() {
                assert!(pair.contains_vector(&a.mul_coords(&u, &v)).unwrap());
            }
        }
    }

    #[test]
    fn ideal_closures() {
        let a = three_c("-1");
        let radical = a.element(vec![q("1"), q("1"), q("1")]).unwrap();
        let ideal = a.ideal_closure(&[radical]).unwrap();
        assert_eq!(ideal.dim(), 1); // already an ideal

        // c0 alone sweeps out everything: c0*c1 introduces a c2 component
        let full = a.ideal_closure(&[a.basis_element(0)]).unwrap();
        assert_eq!(full.dim(), 3);

        assert_eq!(a.ideal_closure(&[]).unwrap().dim(), 0);
    }

    #[test]
    fn quotient_of_three_c_minus_one() {
        let a = three_c("-1");
        let ideal = a
            .ideal_closure(&[a.element(vec![q("1"), q("1"), q("1")]).unwrap()])
            .unwrap();
        let quo = a.quotient(&ideal).unwrap();
        assert_eq!(quo.algebra.dim(), 2);
        // d_i d_j = d_k: image of c1 * c2 is -d1 - d2
        let d1 = quo.algebra.basis_element(0);
        let d2 = quo.algebra.basis_element(1);
        let p = d1.mul(&d2).unwrap();
        assert_eq!(p.coords(), &[q("-1"), q("-1")]);
        // axis images recorded
        assert_eq!(quo.algebra.axis_count(), a.axis_count());
    }

    #[test]
    fn quotient_by_zero_ideal_is_identity_relabeling() {
        let a = three_c("1/4");
        let quo = a.quotient(&Subspace::zero(Q, 3)).unwrap();
        assert_eq!(quo.algebra.dim(), 3);
        for i in 0..3 {
            for j in i..3 {
                assert_eq!(quo.algebra.product_vector(i, j), a.product_vector(i, j));
            }
        }
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let a = three_c("1/4");
        let not_ideal = Subspace::span_of_vector(Q, vec![q("1"), q("0"), q("0")]);
        assert!(matches!(
            a.quotient(&not_ideal),
            Err(Error::NotAnIdeal { .. })
        ));
    }

    #[test]
    fn quotient_of_cl00_by_socle() {
        let cl00 = catalog(&CatalogName::Cl00, Q).unwrap().algebra;
        let s = cl00.basis_element(2);
        let ideal = cl00.ideal_closure(&[s]).unwrap();
        assert_eq!(ideal.dim(), 1);
        let quo = cl00.quotient(&ideal).unwrap();
        let e0 = quo.algebra.basis_element(0);
        let e1 = quo.algebra.basis_element(1);
        assert_eq!(e0.mul(&e1).unwrap().coords(), &[q("1/2"), q("1/2")]);
    }

    fn random_element(rng: &mut ChaCha8Rng, a: &Algebra) -> Element {
        let coords = (0..a.dim())
            .map(|_| Scalar::from_int(rng.gen_range(-4..5), a.field()))
            .collect();
        a.element(coords).unwrap()
    }

    #[test]
    fn multiplication_is_bilinear() {
        let a = three_c("1/32");
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let x = random_element(&mut rng, &a);
            let y = random_element(&mut rng, &a);
            let z = random_element(&mut rng, &a);
            let alpha = Scalar::from_int(rng.gen_range(-4..5), Q);
            let lhs = x.scale(&alpha).add(&y).mul(&z).unwrap();
            let rhs = x.mul(&z).unwrap().scale(&alpha).add(&y.mul(&z).unwrap());
            assert_eq!(lhs, rhs);
            assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        }
    }

    #[test]
    fn quotient_projection_is_homomorphism() {
        let a = three_c("-1");
        let ideal = a
            .ideal_closure(&[a.element(vec![q("1"), q("1"), q("1")]).unwrap()])
            .unwrap();
        let quo = a.quotient(&ideal).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let x = random_element(&mut rng, &a);
            let y = random_element(&mut rng, &a);
            let lhs = quo.project(&x.mul(&y).unwrap());
            let rhs = quo.project(&x).mul(&quo.project(&y)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn mismatched_elements_are_rejected() {
        let a = three_c("1/4");
        let b = three_c("1/4"); // distinct instance
        let res = a.basis_element(0).mul(&b.basis_element(0));
        assert!(matches!(res, Err(Error::AlgebraMismatch)));
    }

    #[test]
    fn algebras_and_elements_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Algebra>();
        assert_send_sync::<Element>();
        assert_send_sync::<crate::scalar::Scalar>();
        assert_send_sync::<crate::linalg::Subspace>();

        let a = three_c("1/4");
        let handle =
            std::thread::spawn(move || a.axis(0).mul(&a.axis(1)).unwrap().coords().to_vec());
        assert_eq!(handle.join().unwrap(), vec![q("1/8"), q("1/8"), q("-1/8")]);
    }
}
