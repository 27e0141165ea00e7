//! Axis validation, Peirce decompositions, fusion-table verification,
//! Miyamoto involutions, the Seress check, and axis-set closure.

use std::collections::BTreeMap;
use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{eigenspace, minimal_polynomial, Matrix, Subspace};
use crate::scalar::{Field, Scalar};

/// A fusion table: an eigenvalue set and, for each unordered pair of
/// eigenvalues, the subset allowed to appear in the product of the
/// corresponding eigenspaces. Cells are stored by index into the
/// eigenvalue list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionTable {
    eigenvalues: Vec<Scalar>,
    cells: BTreeMap<(usize, usize), Vec<usize>>,
}

impl FusionTable {
    pub fn new(
        eigenvalues: Vec<Scalar>,
        cells: BTreeMap<(usize, usize), Vec<usize>>,
    ) -> Result<FusionTable> {
        let n = eigenvalues.len();
        for (i, a) in eigenvalues.iter().enumerate() {
            for b in eigenvalues.iter().skip(i + 1) {
                if a == b {
                    return Err(Error::BadParameters(format!(
                        "duplicate eigenvalue {a} in fusion table"
                    )));
                }
            }
        }
        let mut full = BTreeMap::new();
        for i in 0..n {
            for j in i..n {
                let mut cell = cells
                    .get(&(i, j))
                    .or_else(|| cells.get(&(j, i)))
                    .cloned()
                    .ok_or_else(|| {
                        Error::BadParameters(format!("missing fusion cell ({i},{j})"))
                    })?;
                if cell.iter().any(|&k| k >= n) {
                    return Err(Error::BadParameters(format!(
                        "fusion cell ({i},{j}) refers to an unknown eigenvalue"
                    )));
                }
                cell.sort_unstable();
                cell.dedup();
                full.insert((i, j), cell);
            }
        }
        Ok(FusionTable {
            eigenvalues,
            cells: full,
        })
    }

    /// The Jordan-type table on `{1, 0, eta}`: the eta-eigenspace squares
    /// back into the span of the 1- and 0-eigenspaces, and `1 * 0` is empty.
    pub fn jordan(eta: &Scalar) -> Result<FusionTable> {
        let field = eta.field();
        if eta.is_zero() || eta.is_one() {
            return Err(Error::BadEta(eta.render()));
        }
        let one = Scalar::one(field);
        let zero = Scalar::zero(field);
        let mut cells = BTreeMap::new();
        cells.insert((0, 0), vec![0]); // 1*1 = {1}
        cells.insert((0, 1), vec![]); // 1*0 = {}
        cells.insert((0, 2), vec![2]); // 1*eta = {eta}
        cells.insert((1, 1), vec![1]); // 0*0 = {0}
        cells.insert((1, 2), vec![2]); // 0*eta = {eta}
        cells.insert((2, 2), vec![0, 1]); // eta*eta = {1,0}
        FusionTable::new(vec![one, zero, eta.clone()], cells)
    }

    /// The two-eigenvalue table of a sum of copies of the field.
    pub fn associative(field: Field) -> FusionTable {
        let mut cells = BTreeMap::new();
        cells.insert((0, 0), vec![0]);
        cells.insert((0, 1), vec![]);
        cells.insert((1, 1), vec![1]);
        FusionTable::new(vec![Scalar::one(field), Scalar::zero(field)], cells)
            .expect("fixed table is valid")
    }

    pub fn eigenvalues(&self) -> &[Scalar] {
        &self.eigenvalues
    }

    pub fn index_of(&self, lambda: &Scalar) -> Option<usize> {
        self.eigenvalues.iter().position(|e| e == lambda)
    }

    pub fn cell(&self, i: usize, j: usize) -> &[usize] {
        let key = if i <= j { (i, j) } else { (j, i) };
        &self.cells[&key]
    }

    pub fn cells(&self) -> &BTreeMap<(usize, usize), Vec<usize>> {
        &self.cells
    }
}

/// Peirce decomposition of an algebra relative to one idempotent: the
/// adjoint eigenspaces for a supplied eigenvalue list, certified to sum
/// directly to the whole space.
#[derive(Debug, Clone)]
pub struct PeirceData {
    axis: Element,
    eigenvalues: Vec<Scalar>,
    spaces: Vec<Subspace>,
    primitive: bool,
}

impl PeirceData {
    pub fn axis(&self) -> &Element {
        &self.axis
    }

    pub fn eigenvalues(&self) -> &[Scalar] {
        &self.eigenvalues
    }

    pub fn space(&self, lambda: &Scalar) -> Option<&Subspace> {
        self.eigenvalues
            .iter()
            .position(|e| e == lambda)
            .map(|i| &self.spaces[i])
    }

    pub fn space_by_index(&self, i: usize) -> &Subspace {
        &self.spaces[i]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    /// Whether the 1-eigenspace is one-dimensional (spanned by the axis).
    pub fn is_primitive(&self) -> bool {
        self.primitive
    }
}

/// Decomposes the algebra into adjoint eigenspaces of `x` for the supplied
/// eigenvalues. Fails if `x` is not idempotent or if the eigenspaces do not
/// fill the space (in which case the deficiency and the adjoint's minimal
/// polynomial are reported).
pub fn peirce_decompose(a: &Algebra, x: &Element, lambdas: &[Scalar]) -> Result<PeirceData> {
    if x.algebra() != a {
        return Err(Error::AlgebraMismatch);
    }
    if !x.is_idempotent() || x.is_zero() {
        return Err(Error::NotIdempotent);
    }
    let mut seen: Vec<&Scalar> = Vec::new();
    for l in lambdas {
        if seen.contains(&l) {
            return Err(Error::BadParameters(format!("duplicate eigenvalue {l}")));
        }
        seen.push(l);
    }
    let ad = a.adjoint_matrix(x);
    let mut spaces = Vec::with_capacity(lambdas.len());
    for l in lambdas {
        spaces.push(eigenspace(&ad, l)?);
    }
    let found: usize = spaces.iter().map(Subspace::dim).sum();
    if found != a.dim() {
        let mu = minimal_polynomial(&ad)?;
        return Err(Error::NotSemisimple {
            expected: a.dim(),
            found,
            min_poly: mu.render("x"),
        });
    }
    let one = Scalar::one(a.field());
    let primitive = lambdas
        .iter()
        .position(|l| *l == one)
        .map(|i| spaces[i].dim() == 1)
        .unwrap_or(false);
    Ok(PeirceData {
        axis: x.clone(),
        eigenvalues: lambdas.to_vec(),
        spaces,
        primitive,
    })
}

/// Splits an element over the Peirce decomposition of a primitive axis `p`
/// with eigenvalues `{1, 0, eta}`: returns `(phi, alpha, gamma)` with
/// `y = phi p + alpha + gamma`, `alpha` in the 0-eigenspace and `gamma` in
/// the eta-eigenspace.
pub fn decompose_over_axis(
    a: &Algebra,
    pd: &PeirceData,
    y: &Element,
) -> Result<(Scalar, Element, Element)> {
    let field = a.field();
    if !pd.is_primitive() {
        return Err(Error::NotJordanPair(format!(
            "axis {} is not primitive",
            pd.axis().render()
        )));
    }
    let zero = Scalar::zero(field);
    let zero_space = pd
        .space(&zero)
        .ok_or_else(|| Error::BadParameters("decomposition lacks a 0-eigenspace".into()))?;
    let mut rows: Vec<Vec<Scalar>> = vec![pd.axis().coords().to_vec()];
    rows.extend(zero_space.basis_rows());
    let zero_dim = zero_space.dim();
    for (i, l) in pd.eigenvalues.iter().enumerate() {
        if !l.is_one() && !l.is_zero() {
            rows.extend(pd.spaces[i].basis_rows());
        }
    }
    let n = a.dim();
    if rows.len() != n {
        return Err(Error::BadParameters(
            "decomposition does not span the algebra".into(),
        ));
    }
    let m = Matrix::from_fn(field, n, n, |r, c| rows[c][r].clone());
    let coeffs = m.solve(y.coords()).expect("Peirce basis spans");
    let phi = coeffs[0].clone();
    let mut alpha = vec![Scalar::zero(field); n];
    let mut gamma = vec![Scalar::zero(field); n];
    for (k, c) in coeffs.iter().enumerate().skip(1) {
        let target = if k <= zero_dim {
            &mut alpha
        } else {
            &mut gamma
        };
        for (t, entry) in target.iter_mut().zip(rows[k].iter()) {
            *t = &*t + &(c * entry);
        }
    }
    Ok((phi, a.element(alpha)?, a.element(gamma)?))
}

/// Convenience discovery of the eigenvalue list: factors the adjoint's
/// minimal polynomial by the trial roots `{1, 0, eta}` and returns the roots
/// that divide it. Root-finding beyond these candidates is out of scope.
pub fn discover_eigenvalues(a: &Algebra, x: &Element, eta: &Scalar) -> Result<Vec<Scalar>> {
    let ad = a.adjoint_matrix(x);
    let mu = minimal_polynomial(&ad)?;
    let field = a.field();
    let candidates = [Scalar::one(field), Scalar::zero(field), eta.clone()];
    let mut out = Vec::new();
    for c in candidates {
        if out.contains(&c) {
            continue;
        }
        if mu.eval_scalar(&c).is_zero() {
            out.push(c);
        }
    }
    Ok(out)
}

/// One offending product found by [`verify_fusion`].
#[derive(Debug, Clone)]
pub struct FusionViolation {
    pub lambda: Scalar,
    pub mu: Scalar,
    /// Indices of the offending basis vectors inside the two eigenspaces.
    pub left: usize,
    pub right: usize,
    /// The product that escapes the allowed sum of eigenspaces.
    pub witness: Element,
    /// True when the cell is the `1 * 0` cell and the product would be
    /// admitted by the weaker convention `1 * 0 = {0}`.
    pub only_strict_zero_rule: bool,
}

/// Outcome of a fusion verification; violations are data, not errors.
#[derive(Debug, Clone)]
pub struct FusionReport {
    pub ok: bool,
    pub violations: Vec<FusionViolation>,
}

/// Checks every pair of eigenspace basis vectors against the fusion table:
/// the product must lie in the sum of the allowed eigenspaces. Violations
/// are collected exhaustively.
pub fn verify_fusion(a: &Algebra, pd: &PeirceData, table: &FusionTable) -> Result<FusionReport> {
    let field = a.field();
    let one = Scalar::one(field);
    let zero = Scalar::zero(field);
    // map the decomposition's eigenvalues into the table
    let mut table_index = Vec::with_capacity(pd.eigenvalues.len());
    for l in &pd.eigenvalues {
        let idx = table.index_of(l).ok_or_else(|| {
            Error::BadParameters(format!("eigenvalue {l} missing from the fusion table"))
        })?;
        table_index.push(idx);
    }
    let mut violations = Vec::new();
    for (i, li) in pd.eigenvalues.iter().enumerate() {
        for (j, lj) in pd.eigenvalues.iter().enumerate().skip(i) {
            let allowed_table = table.cell(table_index[i], table_index[j]);
            // sum of the allowed eigenspaces, inside this decomposition
            let mut allowed = Subspace::zero(field, a.dim());
            for &t in allowed_table {
                let lam = &table.eigenvalues()[t];
                if let Some(k) = pd.eigenvalues.iter().position(|e| e == lam) {
                    allowed = allowed.sum(&pd.spaces[k])?;
                }
            }
            let is_one_zero_cell = (li == &one && lj == &zero) || (li == &zero && lj == &one);
            let zero_space = pd.space(&zero);
            for (bi, u) in pd.spaces[i].basis_rows().iter().enumerate() {
                for (bj, v) in pd.spaces[j].basis_rows().iter().enumerate() {
                    let p = a.mul_coords(u, v);
                    if !allowed.contains_vector(&p)? {
                        let only_strict = is_one_zero_cell
                            && match zero_space {
                                Some(s) => s.contains_vector(&p)?,
                                None => false,
                            };
                        violations.push(FusionViolation {
                            lambda: li.clone(),
                            mu: lj.clone(),
                            left: bi,
                            right: bj,
                            witness: a.element(p)?,
                            only_strict_zero_rule: only_strict,
                        });
                    }
                }
            }
        }
    }
    Ok(FusionReport {
        ok: violations.is_empty(),
        violations,
    })
}

/// Result of the Seress check at one axis.
#[derive(Debug, Clone)]
pub struct SeressReport {
    pub ok: bool,
    /// Eigenspace containment failures: `(lambda, left index, right index)`
    /// where a product of `A_lambda` and `A_0` basis vectors escapes
    /// `A_lambda`.
    pub containment_failures: Vec<(Scalar, usize, usize)>,
    /// Failures of the associativity consequence `p(xy) = (px)y` on the
    /// randomized spot-check, as rendered witness pairs.
    pub identity_failures: Vec<String>,
    pub identity_trials: usize,
}

/// Verifies that the 0-eigenspace multiplies each other eigenspace back into
/// itself, and spot-checks the consequence `p(xy) = (px)y` for `y` in the
/// span of the 1- and 0-eigenspaces on deterministic randomized samples.
pub fn seress_check(a: &Algebra, pd: &PeirceData) -> Result<SeressReport> {
    let field = a.field();
    let one = Scalar::one(field);
    let zero = Scalar::zero(field);
    let zero_space = pd
        .space(&zero)
        .cloned()
        .unwrap_or_else(|| Subspace::zero(field, a.dim()));
    let mut containment_failures = Vec::new();
    for (i, li) in pd.eigenvalues.iter().enumerate() {
        if *li == one {
            continue;
        }
        for (bi, u) in pd.spaces[i].basis_rows().iter().enumerate() {
            for (bj, v) in zero_space.basis_rows().iter().enumerate() {
                let p = a.mul_coords(u, v);
                if !pd.spaces[i].contains_vector(&p)? {
                    containment_failures.push((li.clone(), bi, bj));
                }
            }
        }
    }

    // spot-check p(xy) = (px)y with x arbitrary and y in A_1(p) + A_0(p)
    let mut plus_rows = vec![pd.axis.coords().to_vec()];
    plus_rows.extend(zero_space.basis_rows());
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e7e55 ^ a.dim() as u64);
    let trials = 8;
    let mut identity_failures = Vec::new();
    for _ in 0..trials {
        let x: Vec<Scalar> = (0..a.dim())
            .map(|_| Scalar::from_int(rng.gen_range(-3..4), field))
            .collect();
        let mut y = vec![Scalar::zero(field); a.dim()];
        for row in &plus_rows {
            let c = Scalar::from_int(rng.gen_range(-3..4), field);
            for (k, entry) in row.iter().enumerate() {
                y[k] = &y[k] + &(&c * entry);
            }
        }
        let p = pd.axis.coords();
        let lhs = a.mul_coords(p, &a.mul_coords(&x, &y));
        let rhs = a.mul_coords(&a.mul_coords(p, &x), &y);
        if lhs != rhs {
            identity_failures.push(format!(
                "x = {:?}, y = {:?}",
                x.iter().map(Scalar::render).collect::<Vec<_>>(),
                y.iter().map(Scalar::render).collect::<Vec<_>>()
            ));
        }
    }
    Ok(SeressReport {
        ok: containment_failures.is_empty() && identity_failures.is_empty(),
        containment_failures,
        identity_failures,
        identity_trials: trials,
    })
}

/// The sign map of an axis: identity on the non-negated eigenspaces and
/// negation on the rest, certified to be an algebra automorphism of order
/// at most two.
#[derive(Debug, Clone)]
pub struct MiyamotoMap {
    matrix: Matrix,
    order: u8,
}

impl MiyamotoMap {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    pub fn apply(&self, x: &Element) -> Element {
        x.algebra()
            .element(self.matrix.mul_vec(x.coords()))
            .expect("same algebra")
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }
}

/// Builds the linear map that fixes the eigenspaces outside
/// `negative_eigenvalues` and negates those inside, then certifies it as an
/// automorphism by checking `tau(b_i b_j) = tau(b_i) tau(b_j)` on all basis
/// pairs. Failure of that grading check is reported with the witness pair.
pub fn miyamoto(
    a: &Algebra,
    pd: &PeirceData,
    negative_eigenvalues: &[Scalar],
) -> Result<MiyamotoMap> {
    let field = a.field();
    let one = Scalar::one(field);
    for l in negative_eigenvalues {
        if *l == one {
            return Err(Error::BadParameters(
                "cannot negate the 1-eigenspace".into(),
            ));
        }
        if !pd.eigenvalues.contains(l) {
            return Err(Error::BadParameters(format!(
                "eigenvalue {l} not part of the decomposition"
            )));
        }
    }
    let n = a.dim();
    // stack the eigenbasis rows and record the sign of each
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    let mut signs: Vec<bool> = Vec::with_capacity(n); // true = negated
    for (i, l) in pd.eigenvalues.iter().enumerate() {
        let negate = negative_eigenvalues.contains(l);
        for row in pd.spaces[i].basis_rows() {
            rows.push(row);
            signs.push(negate);
        }
    }
    debug_assert_eq!(rows.len(), n);
    // columns of S are the eigenbasis vectors; tau = S * diag(+-1) * S^-1
    let s = Matrix::from_fn(field, n, n, |r, c| rows[c][r].clone());
    let s_inv = s.inverse().expect("eigenbasis is a basis");
    let mut d = Matrix::zeros(field, n, n);
    for (k, &negate) in signs.iter().enumerate() {
        d.set(
            k,
            k,
            if negate {
                Scalar::one(field).neg()
            } else {
                Scalar::one(field)
            },
        );
    }
    let tau = s.mul_matrix(&d).mul_matrix(&s_inv);
    debug_assert_eq!(tau.mul_matrix(&tau), Matrix::identity(field, n));
    // automorphism certificate on all basis pairs
    for i in 0..n {
        for j in i..n {
            let prod = a.product_vector(i, j).to_vec();
            let lhs = tau.mul_vec(&prod);
            let ti: Vec<Scalar> = (0..n).map(|r| tau.at(r, i).clone()).collect();
            let tj: Vec<Scalar> = (0..n).map(|r| tau.at(r, j).clone()).collect();
            let rhs = a.mul_coords(&ti, &tj);
            if lhs != rhs {
                return Err(Error::NotAnAutomorphism(i, j));
            }
        }
    }
    let order = if tau == Matrix::identity(field, n) {
        1
    } else {
        2
    };
    Ok(MiyamotoMap { matrix: tau, order })
}

/// Validates one axis at Jordan eigenvalues `{1, 0, eta}` and returns its
/// Peirce data together with the Miyamoto map negating the eta-eigenspace.
pub fn validate_jordan_axis(
    a: &Algebra,
    x: &Element,
    eta: &Scalar,
) -> Result<(PeirceData, MiyamotoMap)> {
    let field = a.field();
    let lambdas = [Scalar::one(field), Scalar::zero(field), eta.clone()];
    let pd = peirce_decompose(a, x, &lambdas)?;
    let tau = miyamoto(a, &pd, std::slice::from_ref(eta))?;
    Ok((pd, tau))
}

/// Result of the axis-set closure under Miyamoto involutions.
#[derive(Debug, Clone)]
pub struct AxisClosure {
    pub axes: Vec<Element>,
    pub taus: Vec<MiyamotoMap>,
    /// True when the closure stabilized within the cap.
    pub complete: bool,
}

/// Default cap on the closure size; closures at eta = 1/2 can be infinite.
pub const DEFAULT_CLOSURE_CAP: usize = 512;

/// Breadth-first closure of the designated axes under all Miyamoto
/// involutions of axes already found, deduplicated by exact coordinate
/// equality. Every new image is validated as a Jordan-type axis.
pub fn axis_closure(a: &Algebra, eta: &Scalar, cap: usize) -> Result<AxisClosure> {
    let mut axes: Vec<Element> = Vec::new();
    let mut taus: Vec<MiyamotoMap> = Vec::new();
    let mut index: HashMap<Vec<Scalar>, usize> = HashMap::new();

    let push = |axes: &mut Vec<Element>,
                taus: &mut Vec<MiyamotoMap>,
                index: &mut HashMap<Vec<Scalar>, usize>,
                x: Element|
     -> Result<bool> {
        if index.contains_key(x.coords()) {
            return Ok(false);
        }
        let (_, tau) = validate_jordan_axis(a, &x, eta)?;
        index.insert(x.coords().to_vec(), axes.len());
        axes.push(x);
        taus.push(tau);
        Ok(true)
    };

    for x in a.axes() {
        push(&mut axes, &mut taus, &mut index, x)?;
    }
    loop {
        if axes.len() > cap {
            return Ok(AxisClosure {
                axes,
                taus,
                complete: false,
            });
        }
        let mut grew = false;
        let current = axes.len();
        'rounds: for t in 0..current {
            for x in 0..current {
                let image = taus[t].apply(&axes[x]);
                if push(&mut axes, &mut taus, &mut index, image)? {
                    grew = true;
                    if axes.len() > cap {
                        break 'rounds;
                    }
                }
            }
        }
        if !grew {
            let complete = axes.len() <= cap;
            return Ok(AxisClosure {
                axes,
                taus,
                complete,
            });
        }
    }
}

/// Whether the span of the given axes equals the subalgebra generated by the
/// algebra's designated generators.
pub fn span_check(a: &Algebra, axes: &[Element]) -> Result<bool> {
    let generated = a.generated_subalgebra(&a.axes())?;
    let rows: Vec<Vec<Scalar>> = axes.iter().map(|x| x.coords().to_vec()).collect();
    let span = Subspace::from_rows(a.field(), a.dim(), rows);
    Ok(span == generated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::dihedral::{build_b, catalog, spin_factor_delta, CatalogName};
    use std::collections::BTreeMap;

    const Q: Field = Field::Rationals;

    fn q(s: &str) -> Scalar {
        Scalar::parse(s, Q).unwrap()
    }

    fn three_c(eta: &str) -> Algebra {
        catalog(&CatalogName::ThreeC(q(eta)), Q).unwrap().algebra
    }

    #[test]
    fn peirce_dimensions_match_the_catalog() {
        let a = three_c("1/4");
        let pd = peirce_decompose(&a, &a.axis(0), &[q("1"), q("0"), q("1/4")]).unwrap();
        assert_eq!(pd.dims(), vec![1, 1, 1]);
        assert!(pd.is_primitive());

        let two_b = catalog(&CatalogName::TwoB, Q).unwrap().algebra;
        let pd = peirce_decompose(&two_b, &two_b.axis(0), &[q("1"), q("0")]).unwrap();
        assert_eq!(pd.dims(), vec![1, 1]);

        let spin = spin_factor_delta(Q, &q("1")).unwrap();
        let pd = peirce_decompose(
            &spin.algebra,
            &spin.algebra.axis(0),
            &[q("1"), q("0"), q("1/2")],
        )
        .unwrap();
        assert_eq!(pd.dims(), vec![1, 1, 1]); // (1, 1, dim V - 1)
    }

    #[test]
    fn non_idempotent_and_non_semisimple_are_detected() {
        let a = three_c("1/4");
        let x = a.element(vec![q("2"), q("0"), q("0")]).unwrap();
        assert!(matches!(
            peirce_decompose(&a, &x, &[q("1")]),
            Err(Error::NotIdempotent)
        ));

        // a*n = a + n makes ad_a a Jordan block: (x-1)^2 divides the minimal polynomial
        let mut map = BTreeMap::new();
        map.insert((0usize, 0usize), vec![q("1"), q("0")]);
        map.insert((0, 1), vec![q("1"), q("1")]);
        map.insert((1, 1), vec![q("0"), q("0")]);
        let bad = Algebra::from_product_map(
            Q,
            vec!["a".into(), "n".into()],
            &map,
            vec![vec![q("1"), q("0")]],
        )
        .unwrap();
        let err = peirce_decompose(&bad, &bad.axis(0), &[q("1"), q("0")]).unwrap_err();
        match err {
            Error::NotSemisimple {
                expected,
                found,
                min_poly,
            } => {
                assert_eq!((expected, found), (2, 1));
                assert!(min_poly.contains("x^2"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn jordan_fusion_holds_for_three_c() {
        for eta in ["1/4", "1/32", "1/3", "-1"] {
            let a = three_c(eta);
            let table = FusionTable::jordan(&q(eta)).unwrap();
            for k in 0..a.axis_count() {
                let pd = peirce_decompose(&a, &a.axis(k), &[q("1"), q("0"), q(eta)]).unwrap();
                let report = verify_fusion(&a, &pd, &table).unwrap();
                assert!(
                    report.ok,
                    "violations at eta={eta}: {:?}",
                    report.violations
                );
            }
        }
    }

    #[test]
    fn fusion_violation_found_in_non_jordan_b() {
        // eta = 1/3, phi = 1: the eta*eta cell leaks an eta component because
        // eta(2 eta - 1)(eta - 2 phi) = 5/27 is nonzero
        let b = build_b(&q("1/3"), &q("1")).unwrap();
        let pd = peirce_decompose(&b, &b.axis(0), &[q("1"), q("0"), q("1/3")]).unwrap();
        let table = FusionTable::jordan(&q("1/3")).unwrap();
        let report = verify_fusion(&b, &pd, &table).unwrap();
        assert!(!report.ok);
        assert!(report
            .violations
            .iter()
            .all(|v| v.lambda == q("1/3") && v.mu == q("1/3")));
    }

    #[test]
    fn associative_table_accepts_diagonal_algebra() {
        let two_b = catalog(&CatalogName::TwoB, Q).unwrap().algebra;
        let table = FusionTable::associative(Q);
        let pd = peirce_decompose(&two_b, &two_b.axis(0), &[q("1"), q("0")]).unwrap();
        assert!(verify_fusion(&two_b, &pd, &table).unwrap().ok);
    }

    #[test]
    fn seress_holds_for_b_even_without_jordan_fusion() {
        for (eta, phi) in [("1/4", "1/8"), ("1/3", "1")] {
            let b = build_b(&q(eta), &q(phi)).unwrap();
            let pd = peirce_decompose(&b, &b.axis(0), &[q("1"), q("0"), q(eta)]).unwrap();
            let report = seress_check(&b, &pd).unwrap();
            assert!(report.ok, "Seress failed for B({eta},{phi})");
        }
    }

    #[test]
    fn miyamoto_of_three_c_swaps_the_other_axes() {
        let a = three_c("1/4");
        let (pd, tau) = validate_jordan_axis(&a, &a.axis(0), &q("1/4")).unwrap();
        assert_eq!(tau.order(), 2);
        assert_eq!(tau.apply(&a.basis_element(1)), a.basis_element(2));
        assert_eq!(tau.apply(&a.basis_element(2)), a.basis_element(1));
        assert_eq!(tau.apply(&a.basis_element(0)), a.basis_element(0));
        // tau fixes A_+ pointwise and negates A_eta
        let g = a.element(vec![q("0"), q("1"), q("-1")]).unwrap();
        assert_eq!(tau.apply(&g), g.neg());
        let _ = pd;
    }

    #[test]
    fn spin_miyamoto_is_the_negated_reflection() {
        // tau(e0+) fixes 1 and v0 and acts on the rest of V by negating the
        // component orthogonal to v0: v1 -> -v1 + b(v1,v0) v0 = v0 - v1
        let spin = spin_factor_delta(Q, &q("1")).unwrap();
        let a = &spin.algebra;
        let (_, tau) = validate_jordan_axis(a, &a.axis(0), &q("1/2")).unwrap();
        let one = a.basis_element(0);
        let v0 = a.basis_element(1);
        let v1 = a.basis_element(2);
        assert_eq!(tau.apply(&one), one);
        assert_eq!(tau.apply(&v0), v0);
        assert_eq!(tau.apply(&v1), v0.sub(&v1));
        // in particular tau(e0+) = tau(e0-)
        let e0_minus = a.element(vec![q("1/2"), q("-1/2"), q("0")]).unwrap();
        let (_, tau_minus) = validate_jordan_axis(a, &e0_minus, &q("1/2")).unwrap();
        assert_eq!(tau.matrix(), tau_minus.matrix());
    }

    #[test]
    fn miyamoto_of_two_b_is_trivial() {
        let two_b = catalog(&CatalogName::TwoB, Q).unwrap().algebra;
        let (pd, tau) = validate_jordan_axis(&two_b, &two_b.axis(0), &q("1/4")).unwrap();
        assert!(tau.is_identity());
        assert_eq!(tau.order(), 1);
        assert_eq!(pd.space(&q("1/4")).unwrap().dim(), 0);
    }

    #[test]
    fn grading_failure_is_reported() {
        let b = build_b(&q("1/3"), &q("1")).unwrap();
        let pd = peirce_decompose(&b, &b.axis(0), &[q("1"), q("0"), q("1/3")]).unwrap();
        assert!(matches!(
            miyamoto(&b, &pd, &[q("1/3")]),
            Err(Error::NotAnAutomorphism(_, _))
        ));
    }

    #[test]
    fn closure_of_three_c_finds_the_third_axis() {
        let a = three_c("1/4");
        let closure = axis_closure(&a, &q("1/4"), DEFAULT_CLOSURE_CAP).unwrap();
        assert!(closure.complete);
        assert_eq!(closure.axes.len(), 3);
        assert!(span_check(&a, &closure.axes).unwrap());
        assert!(!span_check(&a, &[a.axis(0)]).unwrap());
    }

    #[test]
    fn spin_closure_growth_depends_on_the_form() {
        // the product of the two sign maps acts on V with trace delta^2 - 2,
        // so it has finite order over Q only for delta in {0, 1, -1}
        let spin = spin_factor_delta(Q, &q("1")).unwrap();
        let closure = axis_closure(&spin.algebra, &q("1/2"), 50).unwrap();
        assert!(closure.complete);
        assert_eq!(closure.axes.len(), 6);

        // the degenerate form delta = 2 makes that product parabolic of
        // infinite order: the closure blows past any cap
        let spin = spin_factor_delta(Q, &q("2")).unwrap();
        let closure = axis_closure(&spin.algebra, &q("1/2"), 50).unwrap();
        assert!(!closure.complete);
        assert!(closure.axes.len() > 50);

        let spin = spin_factor_delta(Q, &q("3")).unwrap();
        let closure = axis_closure(&spin.algebra, &q("1/2"), 50).unwrap();
        assert!(!closure.complete);
    }

    #[test]
    fn peirce_decomposition_is_direct() {
        let a = three_c("1/3");
        let pd = peirce_decompose(&a, &a.axis(0), &[q("1"), q("0"), q("1/3")]).unwrap();
        for i in 0..3 {
            for j in (i + 1)..3 {
                let cap = pd
                    .space_by_index(i)
                    .intersect(pd.space_by_index(j))
                    .unwrap();
                assert_eq!(cap.dim(), 0);
            }
        }
    }

    #[test]
    fn minimal_polynomial_of_axis_divides_jordan_product() {
        for eta in ["1/4", "-1", "1/3"] {
            let a = three_c(eta);
            let ad = a.adjoint_matrix(&a.axis(0));
            let mu = minimal_polynomial(&ad).unwrap();
            let jordan = crate::linalg::Poly::x_minus(&q("1"))
                .mul(&crate::linalg::Poly::x_minus(&q("0")))
                .mul(&crate::linalg::Poly::x_minus(&q(eta)));
            let (_, rem) = jordan.divrem(&mu);
            assert!(rem.is_zero());
        }
    }

    #[test]
    fn minimal_polynomials_of_all_catalog_adjoints_are_minimal() {
        use crate::linalg::Poly;
        // mu annihilates the adjoint, splits over {1, 0, eta}, and dropping
        // any root breaks annihilation
        let entries: Vec<(crate::dihedral::CatalogAlgebra, Scalar)> = vec![
            (catalog(&CatalogName::OneA, Q).unwrap(), q("1/4")),
            (catalog(&CatalogName::TwoB, Q).unwrap(), q("1/4")),
            (
                catalog(&CatalogName::ThreeC(q("1/4")), Q).unwrap(),
                q("1/4"),
            ),
            (catalog(&CatalogName::ThreeC(q("-1")), Q).unwrap(), q("-1")),
            (catalog(&CatalogName::ThreeCStar, Q).unwrap(), q("-1")),
            (spin_factor_delta(Q, &q("1")).unwrap(), q("1/2")),
            (catalog(&CatalogName::Cl0, Q).unwrap(), q("1/2")),
            (catalog(&CatalogName::Cl00, Q).unwrap(), q("1/2")),
        ];
        for (cat, eta) in entries {
            let a = &cat.algebra;
            for k in 0..a.axis_count() {
                let ad = a.adjoint_matrix(&a.axis(k));
                let mu = minimal_polynomial(&ad).unwrap();
                assert!(mu.is_monic());
                assert!(mu.eval_matrix(&ad).is_zero());
                // mu is a product of distinct linear factors from {1, 0, eta}
                let roots: Vec<Scalar> = [q("1"), q("0"), eta.clone()]
                    .into_iter()
                    .filter(|r| mu.eval_scalar(r).is_zero())
                    .collect();
                let full = roots
                    .iter()
                    .fold(Poly::one(Q), |p, r| p.mul(&Poly::x_minus(r)));
                assert_eq!(mu, full);
                // no proper monic divisor annihilates
                for skip in 0..roots.len() {
                    let partial = roots
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != skip)
                        .fold(Poly::one(Q), |p, (_, r)| p.mul(&Poly::x_minus(r)));
                    assert!(!partial.eval_matrix(&ad).is_zero());
                }
            }
        }
    }

    #[test]
    fn tau_conjugation_identity() {
        // tau(m)^g = tau(m^g) for g among the computed Miyamoto maps, and
        // the image of an axis is an axis with matching Peirce dimensions
        let a = three_c("1/4");
        let closure = axis_closure(&a, &q("1/4"), DEFAULT_CLOSURE_CAP).unwrap();
        for g in &closure.taus {
            for (m_idx, m) in closure.axes.iter().enumerate() {
                let image = g.apply(m);
                let (pd_image, tau_image) = validate_jordan_axis(&a, &image, &q("1/4")).unwrap();
                let (pd_m, _) = validate_jordan_axis(&a, m, &q("1/4")).unwrap();
                assert_eq!(pd_image.dims(), pd_m.dims());
                let gm = g.matrix();
                let lhs = gm
                    .mul_matrix(closure.taus[m_idx].matrix())
                    .mul_matrix(&gm.inverse().unwrap());
                assert_eq!(lhs, *tau_image.matrix());
            }
        }
    }

    #[test]
    fn component_decomposition_matches_the_involution() {
        // with y = phi p + alpha + gamma:
        // gamma = (y - y^tau)/2 and alpha = -phi p + (y + y^tau)/2
        let half = q("1/2");
        for (eta, alg) in [
            ("1/4", three_c("1/4")),
            ("-1", catalog(&CatalogName::ThreeCStar, Q).unwrap().algebra),
            ("1/2", spin_factor_delta(Q, &q("1")).unwrap().algebra),
        ] {
            let eta = q(eta);
            let p = alg.axis(0);
            let y = alg.axis(1);
            let (pd, tau) = validate_jordan_axis(&alg, &p, &eta).unwrap();
            let (phi, alpha, gamma) = decompose_over_axis(&alg, &pd, &y).unwrap();
            let rebuilt = p.scale(&phi).add(&alpha).add(&gamma);
            assert_eq!(rebuilt, y);
            let y_tau = tau.apply(&y);
            assert_eq!(gamma, y.sub(&y_tau).scale(&half));
            assert_eq!(alpha, p.scale(&phi).neg().add(&y.add(&y_tau).scale(&half)));
            assert!(pd
                .space(&q("0"))
                .unwrap()
                .contains_vector(alpha.coords())
                .unwrap());
            assert!(pd
                .space(&eta)
                .unwrap()
                .contains_vector(gamma.coords())
                .unwrap());
            // ab = phi b + eta gamma_b(a), read with roles swapped
            assert_eq!(p.mul(&y).unwrap(), p.scale(&phi).add(&gamma.scale(&eta)));
        }
    }

    #[test]
    fn eigenvalue_discovery_by_trial_roots() {
        let a = three_c("1/4");
        let found = discover_eigenvalues(&a, &a.axis(0), &q("1/4")).unwrap();
        assert_eq!(found, vec![q("1"), q("0"), q("1/4")]);

        // the unit of 2B has adjoint eigenvalue 1 only
        let two_b = catalog(&CatalogName::TwoB, Q).unwrap().algebra;
        let unit = two_b.basis_element(0).add(&two_b.basis_element(1));
        let found = discover_eigenvalues(&two_b, &unit, &q("1/4")).unwrap();
        assert_eq!(found, vec![q("1")]);
    }

    #[test]
    fn fusion_table_round_trips_cells() {
        let t = FusionTable::jordan(&q("1/4")).unwrap();
        assert_eq!(t.cell(2, 2), &[0, 1]);
        assert_eq!(t.cell(1, 0), &[] as &[usize]);
        assert!(FusionTable::jordan(&q("1")).is_err());
        assert!(FusionTable::jordan(&q("0")).is_err());
    }
}
