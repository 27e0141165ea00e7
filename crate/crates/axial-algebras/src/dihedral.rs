//! Everything about algebras on two axes: the universal three-dimensional
//! algebra `B(eta, phi)`, extraction of the pair invariants `(phi, pi,
//! sigma)`, its exceptional ideals, the quotient criterion for Jordan
//! fusion, the catalog of small algebras, and the pair classifier.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{Field, Scalar};

/// Invariants of an ordered pair of axes `(a, b)`:
/// `phi = phi_a(b) = phi_b(a)`, `pi = (1 - eta) phi - eta`, and
/// `sigma = ab - eta a - eta b`. Construction verifies the identities
/// `sigma^2 = pi sigma`, `a sigma = pi a`, `b sigma = pi b`, and
/// `(ab) sigma = pi (ab)`.
#[derive(Debug, Clone)]
pub struct DihedralInvariants {
    pub eta: Scalar,
    pub phi: Scalar,
    pub pi: Scalar,
    pub sigma: Element,
}

/// Builds `B(eta, phi)` on the basis `{c, d, rho}`:
///
/// ```text
/// c^2 = c      cd = eta c + eta d + rho      c rho = pi c
/// d^2 = d      d rho = pi d                  rho^2 = pi rho
/// ```
///
/// with `pi = (1 - eta) phi - eta`, and `c`, `d` designated as axes.
pub fn build_b(eta: &Scalar, phi: &Scalar) -> Result<Algebra> {
    let field = eta.field();
    if phi.field() != field {
        return Err(Error::FieldMismatch(
            eta.field().to_string(),
            phi.field().to_string(),
        ));
    }
    if eta.is_zero() || eta.is_one() {
        return Err(Error::BadEta(eta.render()));
    }
    let pi = b_pi(eta, phi);
    let zero = Scalar::zero(field);
    let one = Scalar::one(field);
    let table = |i: usize, j: usize| -> Vec<Scalar> {
        match (i, j) {
            (0, 0) => vec![one.clone(), zero.clone(), zero.clone()],
            (1, 1) => vec![zero.clone(), one.clone(), zero.clone()],
            (0, 1) => vec![eta.clone(), eta.clone(), one.clone()],
            (0, 2) => vec![pi.clone(), zero.clone(), zero.clone()],
            (1, 2) => vec![zero.clone(), pi.clone(), zero.clone()],
            (2, 2) => vec![zero.clone(), zero.clone(), pi.clone()],
            _ => unreachable!(),
        }
    };
    Algebra::from_table(
        field,
        vec!["c".into(), "d".into(), "rho".into()],
        table,
        vec![
            vec![one.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), one.clone(), zero.clone()],
        ],
    )
}

/// `pi = (1 - eta) phi - eta`.
pub fn b_pi(eta: &Scalar, phi: &Scalar) -> Scalar {
    let one = Scalar::one(eta.field());
    &(&(&one - eta) * phi) - eta
}

/// The recorded one-dimensional Peirce spaces of `B(eta, phi)` at axis
/// `c` (index 0) or `d` (index 1): spanning vectors of the 0- and
/// eta-eigenspaces in the `{c, d, rho}` coordinates.
pub fn b_peirce_vectors(eta: &Scalar, phi: &Scalar, axis: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let field = eta.field();
    let pi = b_pi(eta, phi);
    let zero = Scalar::zero(field);
    let one = Scalar::one(field);
    let em = eta - phi;
    match axis {
        // B_0(c) = span{pi c - rho}, B_eta(c) = span{(eta - phi) c + eta d + rho}
        0 => (
            vec![pi, zero.clone(), one.neg()],
            vec![em, eta.clone(), one],
        ),
        1 => (
            vec![zero.clone(), pi, one.neg()],
            vec![eta.clone(), em, one],
        ),
        _ => panic!("axis index must be 0 or 1"),
    }
}

/// Verdict of the quotient criterion: whether quotients of `B(eta, phi)`
/// beyond the associative ones can have Jordan-type fusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JordanQuotientKind {
    /// `eta (2 eta - 1)(eta - 2 phi) = 0`: the eta-component of the squared
    /// eta-eigenvector vanishes, so Jordan fusion holds generically.
    JordanGeneric,
    /// Only associative quotients (dimension at most two) have Jordan type.
    JordanOnlyIfAssociativeQuotient,
}

pub fn jordan_quotient_condition(eta: &Scalar, phi: &Scalar) -> Result<JordanQuotientKind> {
    if eta.is_zero() || eta.is_one() {
        return Err(Error::BadEta(eta.render()));
    }
    Ok(if jordan_coefficient(eta, phi).is_zero() {
        JordanQuotientKind::JordanGeneric
    } else {
        JordanQuotientKind::JordanOnlyIfAssociativeQuotient
    })
}

/// The obstruction coefficient `eta (2 eta - 1)(eta - 2 phi)`.
pub fn jordan_coefficient(eta: &Scalar, phi: &Scalar) -> Scalar {
    let two = Scalar::from_int(2, eta.field());
    let one = Scalar::one(eta.field());
    let f1 = &(&two * eta) - &one;
    let f2 = eta - &(&two * phi);
    &(eta * &f1) * &f2
}

/// The exceptional proper ideals of `B(eta, phi)`, exactly as cataloged:
/// `phi = eta/(1-eta)` gives `F rho`; `phi = 0` gives the line
/// `F(eta c + eta d + rho)` and two planes; `phi = 1` gives one plane.
/// An empty list means the algebra is simple. Each returned subspace is
/// re-verified to be an ideal.
pub fn b_ideals(eta: &Scalar, phi: &Scalar) -> Result<Vec<(Subspace, String)>> {
    let field = eta.field();
    if eta.is_zero() || eta.is_one() {
        return Err(Error::BadEta(eta.render()));
    }
    let b = build_b(eta, phi)?;
    let one = Scalar::one(field);
    let zero = Scalar::zero(field);
    let mut out: Vec<(Subspace, String)> = Vec::new();
    let mut push = |rows: Vec<Vec<Scalar>>, desc: &str| -> Result<()> {
        let sub = Subspace::from_rows(field, 3, rows);
        if !b.is_ideal(&sub)? {
            return Err(Error::CrossCheckMismatch(format!(
                "cataloged ideal of B({eta},{phi}) failed re-verification: {desc}"
            )));
        }
        out.push((sub, desc.to_string()));
        Ok(())
    };

    let crit = eta.checked_div(&(&one - eta)).expect("eta != 1");
    if *phi == crit {
        // pi = 0 here
        push(
            vec![vec![zero.clone(), zero.clone(), one.clone()]],
            "B_0(c) = B_0(d) = F rho",
        )?;
    }
    if phi.is_zero() {
        let line = vec![eta.clone(), eta.clone(), one.clone()];
        push(
            vec![line.clone()],
            "B_eta(c) = B_eta(d) = F(eta c + eta d + rho)",
        )?;
        push(
            vec![vec![zero.clone(), one.clone(), zero.clone()], line.clone()],
            "B_0(c) + B_eta(c) = B_1(d) + B_eta(d)",
        )?;
        push(
            vec![vec![one.clone(), zero.clone(), zero.clone()], line],
            "B_0(d) + B_eta(d) = B_1(c) + B_eta(c)",
        )?;
    }
    if phi.is_one() {
        let (z, e) = b_peirce_vectors(eta, phi, 0);
        push(vec![z, e], "B_0(c) + B_eta(c) = B_0(d) + B_eta(d)")?;
    }
    Ok(out)
}

/// Reads the pair invariants off a pair of validated axes: decomposes `y`
/// over the Peirce decomposition of `x` to obtain `phi_x(y)`, forms
/// `sigma = xy - eta x - eta y` and `pi`, and verifies all the defining
/// identities before returning.
pub fn extract_invariants(
    a: &Algebra,
    x: &Element,
    y: &Element,
    eta: &Scalar,
) -> Result<DihedralInvariants> {
    if eta.is_zero() || eta.is_one() {
        return Err(Error::BadEta(eta.render()));
    }
    let phi_xy = phi_coefficient(a, x, y, eta)?;
    let phi_yx = phi_coefficient(a, y, x, eta)?;
    if phi_xy != phi_yx {
        return Err(Error::NotJordanPair(format!(
            "phi_x(y) = {phi_xy} differs from phi_y(x) = {phi_yx}"
        )));
    }
    let xy = x.mul(y)?;
    let sigma = xy.sub(&x.scale(eta)).sub(&y.scale(eta));
    let pi = b_pi(eta, &phi_xy);

    let checks: [(&str, Element, Element); 4] = [
        ("sigma^2 = pi sigma", sigma.mul(&sigma)?, sigma.scale(&pi)),
        ("x sigma = pi x", x.mul(&sigma)?, x.scale(&pi)),
        ("y sigma = pi y", y.mul(&sigma)?, y.scale(&pi)),
        ("(xy) sigma = pi (xy)", xy.mul(&sigma)?, xy.scale(&pi)),
    ];
    for (name, lhs, rhs) in checks {
        if lhs != rhs {
            return Err(Error::NotJordanPair(format!("identity {name} fails")));
        }
    }
    Ok(DihedralInvariants {
        eta: eta.clone(),
        phi: phi_xy,
        pi,
        sigma,
    })
}

/// Coefficient of `x` in the Peirce decomposition of `y` relative to `x`.
fn phi_coefficient(a: &Algebra, x: &Element, y: &Element, eta: &Scalar) -> Result<Scalar> {
    let field = a.field();
    let lambdas = [Scalar::one(field), Scalar::zero(field), eta.clone()];
    let pd = crate::axial::peirce_decompose(a, x, &lambdas)?;
    let (phi, _, _) = crate::axial::decompose_over_axis(a, &pd, y)?;
    Ok(phi)
}

/// The isomorphism classes of two-generated algebras, with parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoGenLabel {
    OneA,
    TwoB,
    ThreeC(Scalar),
    ThreeCStar,
    SpinFactor(Scalar),
    Cl0,
    Cl00,
}

impl TwoGenLabel {
    pub fn render(&self) -> String {
        match self {
            TwoGenLabel::OneA => "1A".into(),
            TwoGenLabel::TwoB => "2B".into(),
            TwoGenLabel::ThreeC(eta) => format!("3C({})", eta.render()),
            TwoGenLabel::ThreeCStar => "3C(-1)*".into(),
            TwoGenLabel::SpinFactor(delta) => format!("SpinFactor({})", delta.render()),
            TwoGenLabel::Cl0 => "Cl0".into(),
            TwoGenLabel::Cl00 => "Cl00".into(),
        }
    }
}

/// Classification of a marked pair of axes.
#[derive(Debug, Clone)]
pub struct TwoGenClass {
    pub label: TwoGenLabel,
    pub dim: usize,
    pub phi: Scalar,
    pub pi: Scalar,
    /// Extra labels describing the same algebra, e.g. the overlap of
    /// `3C(1/2)` with the Clifford cases, or every coincidence forced in
    /// characteristic three.
    pub coincidences: Vec<TwoGenLabel>,
}

/// Classifies the subalgebra generated by a marked pair of axes. The label
/// is cross-checked by comparing structure constants against the catalog
/// constructor in the canonical marked basis `(x, y, sigma)` (with `sigma`
/// dropped when dependent).
pub fn classify_pair(a: &Algebra, x: &Element, y: &Element, eta: &Scalar) -> Result<TwoGenClass> {
    let field = a.field();
    let inv = extract_invariants(a, x, y, eta)?;
    let generated = a.generated_subalgebra(&[x.clone(), y.clone()])?;
    let dim = generated.dim();
    let spanned = Subspace::from_rows(
        field,
        a.dim(),
        vec![
            x.coords().to_vec(),
            y.coords().to_vec(),
            inv.sigma.coords().to_vec(),
        ],
    );
    if spanned != generated {
        return Err(Error::UnclassifiedPair(
            "generated subalgebra differs from span{x, y, sigma}".into(),
        ));
    }

    let half = Scalar::from_fraction(1, 2, field).expect("characteristic is odd");
    let minus_one = Scalar::from_int(-1, field);
    let xy = x.mul(y)?;

    let mut labels: Vec<TwoGenLabel> = Vec::new();
    match dim {
        1 => {
            if x != y {
                return Err(Error::UnclassifiedPair(
                    "distinct axes spanning one dimension".into(),
                ));
            }
            labels.push(TwoGenLabel::OneA);
        }
        2 => {
            if xy.is_zero() {
                labels.push(TwoGenLabel::TwoB);
            } else {
                if *eta == minus_one && xy == x.add(y).neg() {
                    labels.push(TwoGenLabel::ThreeCStar);
                }
                if *eta == half && xy == x.add(y).scale(&half) {
                    labels.push(TwoGenLabel::Cl0);
                }
            }
        }
        3 => {
            let half_eta = eta.mul(&half);
            if *eta == half {
                if inv.phi.is_one() {
                    labels.push(TwoGenLabel::Cl00);
                } else {
                    // delta = 4 phi - 2
                    let delta =
                        &(&Scalar::from_int(4, field) * &inv.phi) - &Scalar::from_int(2, field);
                    labels.push(TwoGenLabel::SpinFactor(delta));
                }
                if inv.phi == half_eta {
                    labels.push(TwoGenLabel::ThreeC(eta.clone()));
                }
            } else if inv.phi == half_eta {
                labels.push(TwoGenLabel::ThreeC(eta.clone()));
            }
        }
        _ => {}
    }
    let Some(label) = labels.first().cloned() else {
        return Err(Error::UnclassifiedPair(format!(
            "no catalog label for dim {dim}, eta = {eta}, phi = {}",
            inv.phi
        )));
    };
    cross_check_against_catalog(a, x, y, &inv, &label)?;
    Ok(TwoGenClass {
        label,
        dim,
        phi: inv.phi,
        pi: inv.pi,
        coincidences: labels.split_off(1),
    })
}

/// Structure constants of the span of `basis` inside `a`, expressed on that
/// basis. `None` if the vectors are dependent or a product escapes the span.
pub fn structure_constants_in_basis(
    a: &Algebra,
    basis: &[Vec<Scalar>],
) -> Option<Vec<Vec<Vec<Scalar>>>> {
    let field = a.field();
    let k = basis.len();
    let n = a.dim();
    let m = Matrix::from_fn(field, n, k, |r, c| basis[c][r].clone());
    if m.rank() != k {
        return None;
    }
    let mut tensor = vec![vec![Vec::new(); k]; k];
    for i in 0..k {
        for j in 0..k {
            let p = a.mul_coords(&basis[i], &basis[j]);
            tensor[i][j] = m.solve(&p)?;
        }
    }
    Some(tensor)
}

fn cross_check_against_catalog(
    a: &Algebra,
    x: &Element,
    y: &Element,
    inv: &DihedralInvariants,
    label: &TwoGenLabel,
) -> Result<()> {
    let field = a.field();
    let cat = match label {
        TwoGenLabel::OneA => catalog(&CatalogName::OneA, field)?,
        TwoGenLabel::TwoB => catalog(&CatalogName::TwoB, field)?,
        TwoGenLabel::ThreeC(eta) => catalog(&CatalogName::ThreeC(eta.clone()), field)?,
        TwoGenLabel::ThreeCStar => catalog(&CatalogName::ThreeCStar, field)?,
        TwoGenLabel::SpinFactor(delta) => spin_factor_delta(field, delta)?,
        TwoGenLabel::Cl0 => catalog(&CatalogName::Cl0, field)?,
        TwoGenLabel::Cl00 => catalog(&CatalogName::Cl00, field)?,
    };
    let dim = match label {
        TwoGenLabel::OneA => 1,
        TwoGenLabel::TwoB | TwoGenLabel::ThreeCStar | TwoGenLabel::Cl0 => 2,
        _ => 3,
    };
    // marked basis on our side: (x, y, sigma), truncated to the class dim
    let mut ours = vec![
        x.coords().to_vec(),
        y.coords().to_vec(),
        inv.sigma.coords().to_vec(),
    ];
    ours.truncate(dim);
    // marked basis on the catalog side: its two designated axes and their sigma
    let cx = cat.algebra.axis(0);
    let (cy, csigma);
    if cat.algebra.axis_count() > 1 {
        let cy_el = cat.algebra.axis(1);
        let cxy = cx.mul(&cy_el)?;
        csigma = cxy.sub(&cx.scale(&inv.eta)).sub(&cy_el.scale(&inv.eta));
        cy = cy_el;
    } else {
        cy = cx.clone();
        csigma = cat.algebra.zero();
    }
    let mut theirs = vec![
        cx.coords().to_vec(),
        cy.coords().to_vec(),
        csigma.coords().to_vec(),
    ];
    theirs.truncate(dim);

    let our_tensor = structure_constants_in_basis(a, &ours);
    let cat_tensor = structure_constants_in_basis(&cat.algebra, &theirs);
    match (our_tensor, cat_tensor) {
        (Some(t1), Some(t2)) if t1 == t2 => Ok(()),
        _ => Err(Error::UnclassifiedPair(format!(
            "structure constants do not match the {} catalog table",
            label.render()
        ))),
    }
}

/// Catalog entries of the small algebras, keyed by name and parameters.
#[derive(Debug, Clone)]
pub enum CatalogName {
    /// The one-dimensional algebra on a single idempotent.
    OneA,
    /// Two orthogonal idempotents spanning `F + F`.
    TwoB,
    /// The three-dimensional algebra on a triangle of axes with
    /// `c_i c_j = (eta/2)(c_i + c_j - c_k)`.
    ThreeC(Scalar),
    /// The two-dimensional quotient of `ThreeC(-1)` by its radical, with
    /// `d_i d_j = d_k`.
    ThreeCStar,
    /// Degenerate two-dimensional Clifford-type algebra:
    /// `e_0 e_1 = (e_0 + e_1)/2`.
    Cl0,
    /// Its three-dimensional cover with a square-zero socle `s`.
    Cl00,
    /// `F 1 + V` with product `(a + v)(b + w) = (ab + b(v,w)/2) + aw + bv`,
    /// for a caller-supplied symmetric Gram matrix on `V` and explicit axis
    /// vectors, each verified idempotent.
    SpinFactor {
        gram: Matrix,
        axes: Vec<Vec<Scalar>>,
    },
}

/// An algebra from the catalog, together with the eta at which its axes are
/// of Jordan type (`None` when every eta works, as for `1A` and `2B`).
#[derive(Debug, Clone)]
pub struct CatalogAlgebra {
    pub algebra: Algebra,
    pub eta: Option<Scalar>,
}

pub fn catalog(name: &CatalogName, field: Field) -> Result<CatalogAlgebra> {
    let zero = Scalar::zero(field);
    let one = Scalar::one(field);
    let half = Scalar::from_fraction(1, 2, field).expect("characteristic is odd");
    match name {
        CatalogName::OneA => {
            let algebra = Algebra::from_table(
                field,
                vec!["z0".into()],
                |_, _| vec![one.clone()],
                vec![vec![one.clone()]],
            )?;
            Ok(CatalogAlgebra { algebra, eta: None })
        }
        CatalogName::TwoB => {
            let table = |i: usize, j: usize| -> Vec<Scalar> {
                if i == j {
                    let mut v = vec![zero.clone(), zero.clone()];
                    v[i] = one.clone();
                    v
                } else {
                    vec![zero.clone(), zero.clone()]
                }
            };
            let algebra = Algebra::from_table(
                field,
                vec!["b0".into(), "b1".into()],
                table,
                vec![
                    vec![one.clone(), zero.clone()],
                    vec![zero.clone(), one.clone()],
                ],
            )?;
            Ok(CatalogAlgebra { algebra, eta: None })
        }
        CatalogName::ThreeC(eta) => {
            if eta.field() != field {
                return Err(Error::FieldMismatch(
                    eta.field().to_string(),
                    field.to_string(),
                ));
            }
            if eta.is_zero() || eta.is_one() {
                return Err(Error::BadEta(eta.render()));
            }
            let h = eta.mul(&half);
            let table = |i: usize, j: usize| -> Vec<Scalar> {
                if i == j {
                    let mut v = vec![zero.clone(), zero.clone(), zero.clone()];
                    v[i] = one.clone();
                    v
                } else {
                    let k = 3 - i - j;
                    let mut v = vec![h.clone(), h.clone(), h.clone()];
                    v[k] = h.neg();
                    v
                }
            };
            let algebra = Algebra::from_table(
                field,
                vec!["c0".into(), "c1".into(), "c2".into()],
                table,
                vec![
                    vec![one.clone(), zero.clone(), zero.clone()],
                    vec![zero.clone(), one.clone(), zero.clone()],
                ],
            )?;
            Ok(CatalogAlgebra {
                algebra,
                eta: Some(eta.clone()),
            })
        }
        CatalogName::ThreeCStar => {
            let table = |i: usize, j: usize| -> Vec<Scalar> {
                if i == j {
                    let mut v = vec![zero.clone(), zero.clone()];
                    v[i] = one.clone();
                    v
                } else {
                    // d0 d1 = d2 = -d0 - d1
                    vec![one.neg(), one.neg()]
                }
            };
            let algebra = Algebra::from_table(
                field,
                vec!["d0".into(), "d1".into()],
                table,
                vec![
                    vec![one.clone(), zero.clone()],
                    vec![zero.clone(), one.clone()],
                ],
            )?;
            Ok(CatalogAlgebra {
                algebra,
                eta: Some(Scalar::from_int(-1, field)),
            })
        }
        CatalogName::Cl0 => {
            let table = |i: usize, j: usize| -> Vec<Scalar> {
                if i == j {
                    let mut v = vec![zero.clone(), zero.clone()];
                    v[i] = one.clone();
                    v
                } else {
                    vec![half.clone(), half.clone()]
                }
            };
            let algebra = Algebra::from_table(
                field,
                vec!["e0".into(), "e1".into()],
                table,
                vec![
                    vec![one.clone(), zero.clone()],
                    vec![zero.clone(), one.clone()],
                ],
            )?;
            Ok(CatalogAlgebra {
                algebra,
                eta: Some(half.clone()),
            })
        }
        CatalogName::Cl00 => {
            let table = |i: usize, j: usize| -> Vec<Scalar> {
                match (i, j) {
                    (0, 0) => vec![one.clone(), zero.clone(), zero.clone()],
                    (1, 1) => vec![zero.clone(), one.clone(), zero.clone()],
                    (0, 1) => vec![half.clone(), half.clone(), one.clone()],
                    // s annihilates everything, including itself
                    _ => vec![zero.clone(), zero.clone(), zero.clone()],
                }
            };
            let algebra = Algebra::from_table(
                field,
                vec!["e0".into(), "e1".into(), "s".into()],
                table,
                vec![
                    vec![one.clone(), zero.clone(), zero.clone()],
                    vec![zero.clone(), one.clone(), zero.clone()],
                ],
            )?;
            Ok(CatalogAlgebra {
                algebra,
                eta: Some(half.clone()),
            })
        }
        CatalogName::SpinFactor { gram, axes } => spin_factor(field, gram, axes),
    }
}

/// Builds `F 1 + V` from a symmetric Gram matrix on `V`, with the supplied
/// coordinate vectors as designated axes. Axis idempotency (equivalently,
/// `1/2 + v` with `b(v, v) = 1/2`) is verified.
pub fn spin_factor(field: Field, gram: &Matrix, axes: &[Vec<Scalar>]) -> Result<CatalogAlgebra> {
    if gram.field() != field {
        return Err(Error::FieldMismatch(
            gram.field().to_string(),
            field.to_string(),
        ));
    }
    if !gram.is_symmetric() {
        return Err(Error::BadParameters(
            "spin-factor Gram matrix must be symmetric".into(),
        ));
    }
    let m = gram.rows();
    let n = m + 1;
    let zero = Scalar::zero(field);
    let one = Scalar::one(field);
    let half = Scalar::from_fraction(1, 2, field).expect("characteristic is odd");
    let mut names = vec!["1".to_string()];
    for i in 0..m {
        names.push(format!("v{i}"));
    }
    let table = |i: usize, j: usize| -> Vec<Scalar> {
        let mut v = vec![zero.clone(); n];
        if i == 0 && j == 0 {
            v[0] = one.clone();
        } else if i == 0 {
            v[j] = one.clone();
        } else {
            // v_i v_j = (1/2) b(v_i, v_j) 1
            v[0] = gram.at(i - 1, j - 1).mul(&half);
        }
        v
    };
    let algebra = Algebra::from_table(field, names, table, axes.to_vec())?;
    for (k, ax) in axes.iter().enumerate() {
        let e = algebra.element(ax.clone())?;
        if !e.is_idempotent() {
            return Err(Error::BadParameters(format!(
                "supplied spin-factor axis {k} is not idempotent"
            )));
        }
    }
    Ok(CatalogAlgebra {
        algebra,
        eta: Some(half),
    })
}

/// The standard two-dimensional spin factor: `b(v_i, v_i) = 2`,
/// `b(v_0, v_1) = delta`, with axes `(1 + v_0)/2` and `(1 + v_1)/2`.
pub fn spin_factor_delta(field: Field, delta: &Scalar) -> Result<CatalogAlgebra> {
    let two = Scalar::from_int(2, field);
    let gram = Matrix::from_rows(
        field,
        2,
        vec![vec![two.clone(), delta.clone()], vec![delta.clone(), two]],
    )
    .expect("2x2 grid");
    let half = Scalar::from_fraction(1, 2, field).expect("characteristic is odd");
    let zero = Scalar::zero(field);
    let axes = vec![
        vec![half.clone(), half.clone(), zero.clone()],
        vec![half.clone(), zero, half],
    ];
    spin_factor(field, &gram, &axes)
}
