//! Matsuo algebras: the algebra on the points of a partial triple system
//! with `a_p^2 = a_p`, `a_p a_q = 0` for non-collinear points, and
//! `a_p a_r = delta (a_p + a_r - a_s)` along each line `{p, r, s}`, where
//! `delta = eta / 2`. Includes the canonical associative form and its
//! existence conditions, and the split into connected components.

use crate::algebra::Algebra;
use crate::bilinear::{solve_associative_forms, GramForm};
use crate::error::{Error, Result};
use crate::geometry::PartialTripleSystem;
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

/// Parameters of a Matsuo algebra. The structure constant is `delta =
/// eta / 2`; eta is the prospective Jordan type and must avoid 0 and 1.
#[derive(Debug, Clone)]
pub struct MatsuoParameters {
    eta: Scalar,
    delta: Scalar,
    field: Field,
}

impl MatsuoParameters {
    pub fn new(eta: Scalar, field: Field) -> Result<Self> {
        if eta.field() != field {
            return Err(Error::FieldMismatch(
                eta.field().to_string(),
                field.to_string(),
            ));
        }
        if eta.is_zero() || eta.is_one() {
            return Err(Error::BadEta(eta.render()));
        }
        let half = Scalar::from_fraction(1, 2, field).expect("characteristic is odd");
        let delta = eta.mul(&half);
        Ok(MatsuoParameters { eta, delta, field })
    }

    pub fn eta(&self) -> &Scalar {
        &self.eta
    }

    pub fn delta(&self) -> &Scalar {
        &self.delta
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

/// Builds the Matsuo algebra of a partial triple system. Every point is
/// designated as an axis. The construction succeeds on any valid system;
/// whether the result has Jordan-type fusion is a separate verification.
pub fn build(space: &PartialTripleSystem, params: &MatsuoParameters) -> Result<Algebra> {
    let n = space.point_count();
    if n == 0 {
        return Err(Error::InvalidGeometry("empty point set".into()));
    }
    let field = params.field;
    let zero = Scalar::zero(field);
    let one = Scalar::one(field);
    let delta = params.delta.clone();
    let table = |i: usize, j: usize| -> Vec<Scalar> {
        let mut v = vec![zero.clone(); n];
        if i == j {
            v[i] = one.clone();
        } else if let Some(s) = space.third_point(i, j) {
            v[i] = delta.clone();
            v[j] = delta.clone();
            v[s] = delta.neg();
        }
        v
    };
    let axes: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut v = vec![zero.clone(); n];
            v[i] = one.clone();
            v
        })
        .collect();
    Algebra::from_table(field, space.points().to_vec(), table, axes)
}

/// A witness for a failed existence condition of the canonical form.
#[derive(Debug, Clone)]
pub struct ConditionWitness {
    pub description: String,
}

/// Existence conditions for a nonzero associative form on the Matsuo
/// algebra: (i) every perp set is a subspace; (ii) for each pair of lines
/// `{x,y,z}` and `l` through a common point `x`, `l` misses the perp of `y`
/// exactly when it misses the perp of `z`.
#[derive(Debug, Clone)]
pub struct FrobeniusConditions {
    pub cond_i: bool,
    pub cond_ii: bool,
    pub witness_i: Option<ConditionWitness>,
    pub witness_ii: Option<ConditionWitness>,
}

impl FrobeniusConditions {
    pub fn both(&self) -> bool {
        self.cond_i && self.cond_ii
    }
}

pub fn frobenius_conditions(space: &PartialTripleSystem) -> FrobeniusConditions {
    let n = space.point_count();
    let mut cond_i = true;
    let mut witness_i = None;
    for x in 0..n {
        let perp = space.perp(x);
        let closure = space.subspace_closure(&perp);
        if closure != perp {
            cond_i = false;
            witness_i = Some(ConditionWitness {
                description: format!(
                    "perp of {:?} is not a subspace: closure adds {:?}",
                    space.point_label(x),
                    closure
                        .iter()
                        .filter(|p| !perp.contains(p))
                        .map(|&p| space.point_label(p))
                        .collect::<Vec<_>>()
                ),
            });
            break;
        }
    }
    let mut cond_ii = true;
    let mut witness_ii = None;
    'outer: for first in space.lines() {
        for &x in first {
            for second in space.lines_through(x) {
                if second == *first {
                    continue;
                }
                let others: Vec<usize> = first.iter().copied().filter(|&p| p != x).collect();
                let (y, z) = (others[0], others[1]);
                let meets = |p: usize| {
                    second
                        .iter()
                        .any(|&q| q != x && !space.collinear(p, q) && p != q)
                };
                if meets(y) != meets(z) {
                    cond_ii = false;
                    witness_ii = Some(ConditionWitness {
                        description: format!(
                            "lines {:?} and {:?} through {:?} separate the perps of {:?} and {:?}",
                            first.map(|p| space.point_label(p)),
                            second.map(|p| space.point_label(p)),
                            space.point_label(x),
                            space.point_label(y),
                            space.point_label(z)
                        ),
                    });
                    break 'outer;
                }
            }
        }
    }
    FrobeniusConditions {
        cond_i,
        cond_ii,
        witness_i,
        witness_ii,
    }
}

/// The canonical form on a Matsuo algebra when it exists: Gram matrix
/// `I + (eta/2) D` with `D` the collinearity adjacency matrix, so that
/// `<a_p, a_p> = 1`, `<a_p, a_q> = 0` for perpendicular points, and
/// `<a_p, a_q> = eta/2` for collinear ones. On a disconnected space this is
/// the blockwise form on the components.
///
/// The existence verdict from [`frobenius_conditions`] is cross-checked
/// against the dimension of the solver's solution space (one per connected
/// component when the form exists, zero otherwise).
pub fn canonical_form(
    a: &Algebra,
    space: &PartialTripleSystem,
    params: &MatsuoParameters,
) -> Result<Option<GramForm>> {
    let conditions = frobenius_conditions(space);
    let solver_dim = solve_associative_forms(a).len();
    let components = space.connected_components().len();
    if !conditions.both() {
        if solver_dim != 0 {
            return Err(Error::CrossCheckMismatch(format!(
                "conditions fail but the solver found a {solver_dim}-dimensional space of forms"
            )));
        }
        return Ok(None);
    }
    if solver_dim != components {
        return Err(Error::CrossCheckMismatch(format!(
            "expected one form per component ({components}), solver found {solver_dim}"
        )));
    }
    let n = space.point_count();
    let field = params.field;
    let gram = Matrix::from_fn(field, n, n, |i, j| {
        if i == j {
            Scalar::one(field)
        } else if space.collinear(i, j) {
            params.delta.clone()
        } else {
            Scalar::zero(field)
        }
    });
    let form = GramForm::new(a.clone(), gram).map_err(|_| {
        Error::CrossCheckMismatch("canonical Gram matrix is not associative".into())
    })?;
    Ok(Some(form))
}

/// One Matsuo algebra per connected component, with the products across
/// components verified to vanish in the parent algebra.
pub fn component_split(
    a: &Algebra,
    space: &PartialTripleSystem,
    params: &MatsuoParameters,
) -> Result<Vec<Algebra>> {
    let components = space.connected_components();
    let mut out = Vec::with_capacity(components.len());
    for comp in &components {
        let labels: Vec<String> = comp
            .iter()
            .map(|&p| space.point_label(p).to_string())
            .collect();
        let lines: Vec<Vec<String>> = space
            .lines()
            .iter()
            .filter(|l| l.iter().all(|p| comp.contains(p)))
            .map(|l| {
                l.iter()
                    .map(|&p| space.point_label(p).to_string())
                    .collect()
            })
            .collect();
        let sub_space = PartialTripleSystem::new(labels, lines)?;
        out.push(build(&sub_space, params)?);
    }
    for (ci, comp_i) in components.iter().enumerate() {
        for comp_j in components.iter().skip(ci + 1) {
            for &p in comp_i {
                for &q in comp_j {
                    let prod =
                        a.mul_coords(a.basis_element(p).coords(), a.basis_element(q).coords());
                    if prod.iter().any(|c| !c.is_zero()) {
                        return Err(Error::CrossCheckMismatch(format!(
                            "cross-component product a_{} a_{} is nonzero",
                            space.point_label(p),
                            space.point_label(q)
                        )));
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axial::{peirce_decompose, validate_jordan_axis, verify_fusion, FusionTable};
    use crate::bilinear::{eigenspace_orthogonality, radical};
    use crate::dihedral::{classify_pair, TwoGenLabel};
    use crate::geometry::{builtin_space, BuiltinSpace, CentralAutomorphism};
    use crate::linalg::ldlt_definiteness;
    use crate::linalg::Definiteness;

    const Q: Field = Field::Rationals;

    fn q(s: &str) -> Scalar {
        Scalar::parse(s, Q).unwrap()
    }

    fn matsuo(which: BuiltinSpace, eta: &str) -> (Algebra, PartialTripleSystem, MatsuoParameters) {
        let space = builtin_space(&which).unwrap();
        let params = MatsuoParameters::new(q(eta), Q).unwrap();
        let a = build(&space, &params).unwrap();
        (a, space, params)
    }

    #[test]
    fn parameters_enforce_eta_constraints() {
        assert!(MatsuoParameters::new(q("0"), Q).is_err());
        assert!(MatsuoParameters::new(q("1"), Q).is_err());
        let p = MatsuoParameters::new(q("1/4"), Q).unwrap();
        assert_eq!(p.delta(), &q("1/8"));
    }

    #[test]
    fn single_line_is_three_c() {
        let (a, _, _) = matsuo(BuiltinSpace::SingleLine, "1/4");
        assert_eq!(a.dim(), 3);
        let x = a.basis_element(0);
        let y = a.basis_element(1);
        let class = classify_pair(&a, &x, &y, &q("1/4")).unwrap();
        assert_eq!(class.label, TwoGenLabel::ThreeC(q("1/4")));
    }

    #[test]
    fn two_isolated_points_form_two_b() {
        let (a, _, _) = matsuo(BuiltinSpace::Disconnected2B, "1/4");
        assert_eq!(a.dim(), 2);
        assert!(a
            .basis_element(0)
            .mul(&a.basis_element(1))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn dual_affine_products() {
        // points p0..p5 with lines {p0,p1,p3}, {p0,p2,p4}, {p1,p2,p5}, {p3,p4,p5}
        let (a, space, _) = matsuo(BuiltinSpace::DualAffine2, "1/4");
        assert_eq!(a.dim(), 6);
        // p0 and p5 are opposite: product zero
        assert!(!space.collinear(0, 5));
        assert!(a
            .basis_element(0)
            .mul(&a.basis_element(5))
            .unwrap()
            .is_zero());
        // collinear pair: delta (a_p + a_r - a_s) with delta = 1/8
        let p = a.basis_element(0).mul(&a.basis_element(1)).unwrap();
        let mut expected = vec![q("0"); 6];
        expected[0] = q("1/8");
        expected[1] = q("1/8");
        expected[3] = q("-1/8");
        assert_eq!(p.coords(), &expected[..]);
    }

    #[test]
    fn peirce_shape_at_an_axis() {
        // M_0 has dimension |perp| + lines through p; M_eta has one
        // dimension per line through p
        for which in [
            BuiltinSpace::DualAffine2,
            BuiltinSpace::AG23,
            BuiltinSpace::Fano,
        ] {
            let (a, space, _) = matsuo(which, "1/4");
            for p in 0..space.point_count() {
                let pd = peirce_decompose(&a, &a.axis(p), &[q("1"), q("0"), q("1/4")]).unwrap();
                let lines = space.lines_through(p).len();
                let perp = space.perp(p).len();
                assert_eq!(pd.dims(), vec![1, perp + lines, lines]);
                assert!(pd.is_primitive());
            }
        }
    }

    #[test]
    fn jordan_fusion_iff_fischer() {
        let table = FusionTable::jordan(&q("1/4")).unwrap();
        let pass = [
            BuiltinSpace::SingleLine,
            BuiltinSpace::DualAffine2,
            BuiltinSpace::AG23,
            BuiltinSpace::SymTriangles(4),
        ];
        for which in pass {
            let (a, space, _) = matsuo(which.clone(), "1/4");
            assert!(space.fischer_check().is_fischer);
            for p in 0..a.dim() {
                let pd = peirce_decompose(&a, &a.axis(p), &[q("1"), q("0"), q("1/4")]).unwrap();
                let rep = verify_fusion(&a, &pd, &table).unwrap();
                assert!(rep.ok, "{which:?} axis {p}");
            }
        }
        let fail = [BuiltinSpace::Fano, BuiltinSpace::FivePointTwoLines];
        for which in fail {
            let (a, space, _) = matsuo(which.clone(), "1/4");
            assert!(!space.fischer_check().is_fischer);
            let mut violated = false;
            for p in 0..a.dim() {
                let pd = peirce_decompose(&a, &a.axis(p), &[q("1"), q("0"), q("1/4")]).unwrap();
                let rep = verify_fusion(&a, &pd, &table).unwrap();
                violated |= !rep.ok;
            }
            assert!(violated, "{which:?} should violate Jordan fusion");
        }
    }

    #[test]
    fn miyamoto_map_is_the_central_automorphism() {
        let (a, space, _) = matsuo(BuiltinSpace::DualAffine2, "1/4");
        for p in 0..space.point_count() {
            let (_, tau) = validate_jordan_axis(&a, &a.axis(p), &q("1/4")).unwrap();
            let CentralAutomorphism::Map(images) = space.central_automorphism(p) else {
                panic!("Fischer space has central automorphisms");
            };
            for (src, &dst) in images.iter().enumerate() {
                assert_eq!(tau.apply(&a.basis_element(src)), a.basis_element(dst));
            }
        }
    }

    #[test]
    fn seress_verdict_on_the_five_point_space() {
        // at a_y (the point on both lines) the eta-cells of the Seress
        // condition hold but the 0*0 cell fails: the two zero-eigenvectors
        // eta a_y - a_x - a_z and eta a_y - a_u - a_v multiply to
        // -eta^2 a_y, which lies in the 1-eigenspace
        let (a, space, _) = matsuo(BuiltinSpace::FivePointTwoLines, "1/4");
        let y = space.points().iter().position(|p| p == "y").unwrap();
        let pd =
            crate::axial::peirce_decompose(&a, &a.axis(y), &[q("1"), q("0"), q("1/4")]).unwrap();
        let n1 = a
            .element(vec![q("-1"), q("1/4"), q("-1"), q("0"), q("0")])
            .unwrap();
        let n2 = a
            .element(vec![q("0"), q("1/4"), q("0"), q("-1"), q("-1")])
            .unwrap();
        assert_eq!(
            n1.mul(&n2).unwrap(),
            a.axis(y).scale(&q("-1/16")) // -eta^2 a_y
        );
        let report = crate::axial::seress_check(&a, &pd).unwrap();
        assert!(!report.ok);
        assert!(report
            .containment_failures
            .iter()
            .all(|(lambda, _, _)| lambda.is_zero()));
        assert!(!report.containment_failures.is_empty());
    }

    #[test]
    fn frobenius_conditions_verdicts() {
        // Steiner systems: every perp is empty
        let fano = builtin_space(&BuiltinSpace::Fano).unwrap();
        let cond = frobenius_conditions(&fano);
        assert!(cond.both());

        // Fischer spaces satisfy both conditions
        let da = builtin_space(&BuiltinSpace::DualAffine2).unwrap();
        assert!(frobenius_conditions(&da).both());

        // the five-point space fails (i): perp of x is {u, v}, completed by y
        let five = builtin_space(&BuiltinSpace::FivePointTwoLines).unwrap();
        let cond = frobenius_conditions(&five);
        assert!(!cond.cond_i);
        assert!(cond.witness_i.is_some());
    }

    #[test]
    fn canonical_form_on_fano() {
        let (a, space, params) = matsuo(BuiltinSpace::Fano, "1/4");
        let form = canonical_form(&a, &space, &params).unwrap().unwrap();
        // every pair collinear: Gram = I + (1/8)(J - I)
        for i in 0..7 {
            for j in 0..7 {
                let expected = if i == j { q("1") } else { q("1/8") };
                assert_eq!(form.gram().at(i, j), &expected);
            }
        }
        assert_eq!(radical(&form).unwrap().dim(), 0);
        assert_eq!(
            ldlt_definiteness(form.gram()).unwrap(),
            Definiteness::PositiveDefinite
        );
    }

    #[test]
    fn canonical_form_on_dual_affine_and_ag23() {
        for which in [BuiltinSpace::DualAffine2, BuiltinSpace::AG23] {
            let (a, space, params) = matsuo(which, "1/4");
            let form = canonical_form(&a, &space, &params).unwrap().unwrap();
            assert_eq!(
                ldlt_definiteness(form.gram()).unwrap(),
                Definiteness::PositiveDefinite
            );
            // orthogonality of eigenspaces at every axis
            for p in 0..a.dim() {
                let pd = peirce_decompose(&a, &a.axis(p), &[q("1"), q("0"), q("1/4")]).unwrap();
                assert!(eigenspace_orthogonality(&form, &pd).unwrap());
            }
        }
    }

    #[test]
    fn no_form_on_the_five_point_space() {
        let (a, space, params) = matsuo(BuiltinSpace::FivePointTwoLines, "1/4");
        assert!(canonical_form(&a, &space, &params).unwrap().is_none());
    }

    #[test]
    fn blockwise_form_on_a_disconnected_space() {
        let (a, space, params) = matsuo(BuiltinSpace::Disconnected2B, "1/4");
        let form = canonical_form(&a, &space, &params);
        // two components: the solver space is two-dimensional, which the
        // cross-check demands before returning the blockwise form
        let form = form.unwrap().unwrap();
        assert!(form.gram().at(0, 1).is_zero());
    }

    #[test]
    fn radical_of_the_single_line_at_minus_one() {
        let (a, space, params) = matsuo(BuiltinSpace::SingleLine, "-1");
        let form = canonical_form(&a, &space, &params).unwrap().unwrap();
        let rad = radical(&form).unwrap();
        assert_eq!(rad.dim(), 1);
        assert!(rad.contains_vector(&[q("1"), q("1"), q("1")]).unwrap());
    }

    #[test]
    fn component_split_matches_the_components() {
        let space = PartialTripleSystem::new(
            vec!["x".into(), "y".into(), "z".into(), "w".into()],
            vec![vec!["x".into(), "y".into(), "z".into()]],
        )
        .unwrap();
        let params = MatsuoParameters::new(q("1/4"), Q).unwrap();
        let a = build(&space, &params).unwrap();
        let parts = component_split(&a, &space, &params).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].dim(), 3);
        assert_eq!(parts[1].dim(), 1);

        // the blockwise canonical form exists and keeps the components
        // perpendicular: the isolated point pairs to zero with the line
        let form = canonical_form(&a, &space, &params).unwrap().unwrap();
        let w = space.points().iter().position(|p| p == "w").unwrap();
        for p in 0..3 {
            assert!(form.gram().at(w, p).is_zero());
        }
        assert!(form.gram().at(w, w).is_one());

        let (fano, fano_space, fano_params) = matsuo(BuiltinSpace::Fano, "1/4");
        let parts = component_split(&fano, &fano_space, &fano_params).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].dim(), 7);
    }
}
