//! Axis axioms: absolute primitivity, the cubic law, the ℤ₂ and ℤ₂×ℤ₂
//! gradings, Jordan type, component splitting, and Miyamoto involutions.
//!
//! A type parameter is `Option<Scalar>`, where `None` stands for "any": it
//! is what gets reported when the corresponding nontrivial eigenspace is
//! zero, in which case every admissible value is consistent with the axis.

use serde::{Serialize, Serializer};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::idempotents::enumerate_idempotents_ff_with_cap;
use crate::linalg::{solve_in_span, Element, Operator, Subspace};
use crate::scalars::{Domain, Scalar};
use crate::spectral::{eigen_decompose, joint_from, EigenPart, JointDecomposition, Side};

pub type AxisType = Option<Scalar>;

pub fn type_label(t: &AxisType) -> String {
    t.as_ref()
        .map_or_else(|| "any".to_string(), ToString::to_string)
}

fn ser_type<S: Serializer>(t: &AxisType, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&type_label(t))
}

/// Stand-in eigenvalue used when a type is "any": −1 is never 0 or 1 in
/// characteristic ≠ 2.
fn placeholder(domain: Domain) -> Scalar {
    domain.int(-1)
}

fn check_type_param(p: &Scalar) -> Result<()> {
    if p.is_zero() || p.is_one() {
        Err(Error::TypeParamInvalid(p.to_string()))
    } else {
        Ok(())
    }
}

/// The eigenspaces of one multiplication operator for the values 1, 0, λ.
#[derive(Clone, Debug)]
struct SideSpaces {
    one: Subspace,
    zero: Subspace,
    minus: Subspace,
    value: Scalar,
}

impl SideSpaces {
    fn plus(&self) -> Subspace {
        self.zero.sum(&self.one)
    }

    fn parts(&self, domain: Domain) -> Vec<EigenPart> {
        [
            (domain.one(), &self.one),
            (domain.zero(), &self.zero),
            (self.value.clone(), &self.minus),
        ]
        .into_iter()
        .filter(|(_, s)| !s.is_zero())
        .map(|(value, space)| EigenPart {
            value,
            space: space.clone(),
        })
        .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideReport {
    pub side: Side,
    pub abs_primitive: bool,
    pub cubic_ok: bool,
    pub z2_grading_ok: bool,
    #[serde(serialize_with = "ser_type")]
    pub eigen_type: AxisType,
}

impl SideReport {
    pub fn passes(&self) -> bool {
        self.abs_primitive && self.cubic_ok && self.z2_grading_ok
    }
}

fn check_side(a: &Algebra, x: &Element, side: Side, value: &Scalar) -> (SideReport, SideSpaces) {
    let m = side.operator(a, x);
    let one_s = a.one_scalar();
    let spaces = SideSpaces {
        one: m.shift(&one_s).kernel(),
        zero: m.kernel(),
        minus: m.shift(value).kernel(),
        value: value.clone(),
    };
    let abs_primitive = spaces.one == a.span(std::slice::from_ref(x));
    let cubic_ok = m
        .shift(value)
        .compose(&m.shift(&one_s))
        .compose(&m)
        .is_zero();
    let plus = spaces.plus();
    let minus = &spaces.minus;
    let z2_grading_ok = cubic_ok
        && plus.dim() + minus.dim() == a.dim()
        && a.products_within(&plus, &plus, &plus)
        && a.products_within(&plus, minus, minus)
        && a.products_within(minus, &plus, minus)
        && a.products_within(minus, minus, &plus);
    let report = SideReport {
        side,
        abs_primitive,
        cubic_ok,
        z2_grading_ok,
        eigen_type: (!minus.is_zero()).then(|| value.clone()),
    };
    (report, spaces)
}

/// Verdict of the axis axioms for one element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxisReport {
    pub is_idempotent: bool,
    pub left: SideReport,
    /// Absent for one-sided checks.
    pub right: Option<SideReport>,
    pub ops_commute: bool,
    pub z2xz2_grading_ok: bool,
    pub jordan_type_ok: bool,
    #[serde(serialize_with = "ser_type")]
    pub left_type: AxisType,
    #[serde(serialize_with = "ser_type")]
    pub right_type: AxisType,
    pub decomposition: Option<JointDecomposition>,
}

impl AxisReport {
    pub fn is_abs_left_primitive(&self) -> bool {
        self.left.abs_primitive
    }

    pub fn cubic_ok(&self) -> bool {
        self.left.cubic_ok && self.right.as_ref().is_none_or(|r| r.cubic_ok)
    }

    pub fn z2_grading_ok(&self) -> bool {
        self.left.z2_grading_ok && self.right.as_ref().is_none_or(|r| r.z2_grading_ok)
    }

    /// A left axis of the requested type.
    pub fn is_left_axis(&self) -> bool {
        self.is_idempotent && self.left.passes()
    }

    /// A two-sided axis: both one-sided axioms, commuting operators and the
    /// ℤ₂×ℤ₂ grading.
    pub fn is_axis(&self) -> bool {
        self.is_left_axis()
            && self.right.as_ref().is_some_and(SideReport::passes)
            && self.ops_commute
            && self.z2xz2_grading_ok
    }

    pub fn is_jordan_axis(&self) -> bool {
        self.is_axis() && self.jordan_type_ok
    }

    /// Names of the failed axioms, in checking order.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.is_idempotent {
            out.push("idempotent".to_string());
        }
        for s in std::iter::once(&self.left).chain(self.right.as_ref()) {
            let side = match s.side {
                Side::Left => "left",
                Side::Right => "right",
            };
            if !s.abs_primitive {
                out.push(format!("{side} absolute primitivity"));
            }
            if !s.cubic_ok {
                out.push(format!("{side} cubic law"));
            }
            if !s.z2_grading_ok {
                out.push(format!("{side} Z2 grading"));
            }
        }
        if self.right.is_some() {
            if !self.ops_commute {
                out.push("L_a R_a = R_a L_a".to_string());
            }
            if !self.z2xz2_grading_ok {
                out.push("Z2xZ2 grading".to_string());
            }
            if !self.jordan_type_ok {
                out.push("Jordan type".to_string());
            }
        }
        out
    }
}

/// Left-axis axioms of type `lambda`.
pub fn check_left_axis(a: &Algebra, x: &Element, lambda: &Scalar) -> Result<AxisReport> {
    a.check_element(x)?;
    check_type_param(lambda)?;
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let (left, _) = check_side(a, x, Side::Left, lambda);
    Ok(AxisReport {
        is_idempotent: a.square(x) == *x,
        left_type: left.eigen_type.clone(),
        left,
        right: None,
        ops_commute: false,
        z2xz2_grading_ok: false,
        jordan_type_ok: false,
        right_type: None,
        decomposition: None,
    })
}

/// Two-sided axis axioms of type `(lambda, delta)`.
pub fn check_axis(a: &Algebra, x: &Element, lambda: &Scalar, delta: &Scalar) -> Result<AxisReport> {
    a.check_element(x)?;
    check_type_param(lambda)?;
    check_type_param(delta)?;
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok(check_axis_unchecked(a, x, lambda, delta).0)
}

fn check_axis_unchecked(
    a: &Algebra,
    x: &Element,
    lambda: &Scalar,
    delta: &Scalar,
) -> (AxisReport, SideSpaces, SideSpaces) {
    let domain = a.domain();
    let (left, lspaces) = check_side(a, x, Side::Left, lambda);
    let (right, rspaces) = check_side(a, x, Side::Right, delta);
    let l = a.left_op(x);
    let r = a.right_op(x);
    let ops_commute = l.compose(&r) == r.compose(&l);

    let decomposition =
        ops_commute.then(|| joint_from(&lspaces.parts(domain), &rspaces.parts(domain), a.dim()));
    let mut z2xz2 = false;
    let mut jordan = false;
    if let Some(joint) = &decomposition {
        let (one, zero) = (domain.one(), domain.zero());
        let labels_ok = joint.parts.iter().all(|p| {
            matches!(
                (
                    p.left == one,
                    p.left == zero,
                    p.right == one,
                    p.right == zero
                ),
                (true, false, true, false) | (false, _, false, _)
            )
        });
        let fa = a.span(std::slice::from_ref(x));
        let graded =
            |l: &Scalar, r: &Scalar| joint.part(l, r).cloned().unwrap_or_else(|| a.span(&[]));
        // sign parts: index 0 = (+,+), 1 = (+,−), 2 = (−,+), 3 = (−,−)
        let pieces = [
            graded(&one, &one).sum(&graded(&zero, &zero)),
            graded(&zero, delta),
            graded(lambda, &zero),
            graded(lambda, delta),
        ];
        let grading = (0..4)
            .all(|g| (0..4).all(|h| a.products_within(&pieces[g], &pieces[h], &pieces[g ^ h])));
        z2xz2 = left.z2_grading_ok
            && right.z2_grading_ok
            && joint.complete
            && labels_ok
            && graded(&one, &one) == fa
            && grading;
        jordan = z2xz2 && pieces[1].is_zero() && pieces[2].is_zero();
    }
    let report = AxisReport {
        is_idempotent: a.square(x) == *x,
        left_type: left.eigen_type.clone(),
        right_type: right.eigen_type.clone(),
        left,
        right: Some(right),
        ops_commute,
        z2xz2_grading_ok: z2xz2,
        jordan_type_ok: jordan,
        decomposition,
    };
    (report, lspaces, rspaces)
}

/// Reads the candidate types off the one-sided spectra: the unique
/// eigenvalue outside {0, 1}, or "any" when there is none.
pub fn read_types(a: &Algebra, x: &Element) -> Result<(AxisType, AxisType)> {
    let mut out = Vec::with_capacity(2);
    for side in [Side::Left, Side::Right] {
        let dec = eigen_decompose(a, x, side)?;
        if let Some(defect) = dec.defects.first() {
            return Err(Error::NotAnAxis(format!(
                "{side:?} multiplication: {defect}"
            )));
        }
        let nontrivial: Vec<&Scalar> = dec
            .eigenvalues()
            .filter(|v| !v.is_zero() && !v.is_one())
            .collect();
        match nontrivial.as_slice() {
            [] => out.push(None),
            [v] => out.push(Some((*v).clone())),
            many => {
                let shown: Vec<String> = many.iter().map(ToString::to_string).collect();
                return Err(Error::NotAnAxis(format!(
                    "{side:?} multiplication has eigenvalues {} besides 0 and 1",
                    shown.join(", ")
                )));
            }
        }
    }
    let right = out.pop().unwrap();
    Ok((out.pop().unwrap(), right))
}

/// [`check_axis`] with the types read off the spectra.
pub fn detect_axis(a: &Algebra, x: &Element) -> Result<AxisReport> {
    a.check_element(x)?;
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let (l, r) = read_types(a, x)?;
    let ph = placeholder(a.domain());
    Ok(check_axis_unchecked(a, x, l.as_ref().unwrap_or(&ph), r.as_ref().unwrap_or(&ph)).0)
}

/// Whether an axis that passed through the ℤ₂×ℤ₂ grading is of Jordan type.
pub fn jordan_type(a: &Algebra, x: &Element, lambda: &Scalar, delta: &Scalar) -> Result<bool> {
    let report = check_axis(a, x, lambda, delta)?;
    if !report.is_axis() {
        return Err(Error::NotAnAxis(report.failures().join(", ")));
    }
    Ok(report.jordan_type_ok)
}

/// Components of `y` in `A_{λ,δ}`-style parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Refinement {
    pub y00: Element,
    pub y0d: Element,
    pub yl0: Element,
    pub yld: Element,
}

/// `y = α_y a + y₀ + y_λ` for the left operator, or
/// `y = α_y a + ₀y + _δy` for the right one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentSplit {
    pub side: Side,
    pub alpha: Scalar,
    pub y0: Element,
    pub ylambda: Element,
    #[serde(serialize_with = "ser_type")]
    pub lambda: AxisType,
    /// Two-sided refinement, present when the joint decomposition exists.
    pub refinement: Option<Refinement>,
}

impl ComponentSplit {
    pub fn reconstruct(&self, axis: &Element) -> Element {
        axis.scale(&self.alpha).add(&self.y0).add(&self.ylambda)
    }
}

/// Coordinates of `y` along a direct sum of subspaces, one component per
/// group. Panics if the groups do not span `y`.
fn project(groups: &[&[Element]], y: &Element) -> Vec<Element> {
    let columns: Vec<Element> = groups.iter().flat_map(|g| g.iter().cloned()).collect();
    let zero = Element::zero(y.domain(), y.dim());
    if columns.is_empty() {
        return vec![zero; groups.len()];
    }
    let coeffs = solve_in_span(&columns, y).expect("groups span the algebra");
    let mut k = 0;
    groups
        .iter()
        .map(|g| {
            g.iter().fold(zero.clone(), |acc, v| {
                let c = &coeffs[k];
                k += 1;
                acc.add(&v.scale(c))
            })
        })
        .collect()
}

/// Precomputed splitting data for an axis.
pub struct Splitter {
    axis: Element,
    side: Side,
    spaces: SideSpaces,
    lambda: AxisType,
    joint: Option<[Subspace; 4]>,
}

impl Splitter {
    pub fn new(a: &Algebra, x: &Element, side: Side) -> Result<Self> {
        a.check_element(x)?;
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let (l, r) = read_types(a, x)?;
        let ph = placeholder(a.domain());
        let lv = l.clone().unwrap_or_else(|| ph.clone());
        let rv = r.clone().unwrap_or(ph);
        let (report, lspaces, rspaces) = check_axis_unchecked(a, x, &lv, &rv);
        let (side_report, spaces, lambda) = match side {
            Side::Left => (&report.left, lspaces, l),
            Side::Right => (report.right.as_ref().unwrap(), rspaces, r),
        };
        if !(report.is_idempotent && side_report.passes()) {
            return Err(Error::NotAnAxis(report.failures().join(", ")));
        }
        let joint = report
            .decomposition
            .as_ref()
            .filter(|j| j.complete)
            .map(|j| {
                let zero = a.domain().zero();
                let get =
                    |l: &Scalar, r: &Scalar| j.part(l, r).cloned().unwrap_or_else(|| a.span(&[]));
                // for a right split the roles of λ and δ swap
                let (lv, rv) = match side {
                    Side::Left => (&lv, &rv),
                    Side::Right => (&rv, &lv),
                };
                let oriented = |p: &Scalar, q: &Scalar| match side {
                    Side::Left => get(p, q),
                    Side::Right => get(q, p),
                };
                [
                    oriented(&zero, &zero),
                    oriented(&zero, rv),
                    oriented(lv, &zero),
                    oriented(lv, rv),
                ]
            });
        Ok(Splitter {
            axis: x.clone(),
            side,
            spaces,
            lambda,
            joint,
        })
    }

    pub fn split(&self, y: &Element) -> ComponentSplit {
        let fa = std::slice::from_ref(&self.axis);
        let parts = project(
            &[fa, self.spaces.zero.basis(), self.spaces.minus.basis()],
            y,
        );
        let alpha =
            solve_in_span(fa, &parts[0]).expect("component lies on the axis line")[0].clone();
        let refinement = self.joint.as_ref().map(|j| {
            let r = project(
                &[fa, j[0].basis(), j[1].basis(), j[2].basis(), j[3].basis()],
                y,
            );
            Refinement {
                y00: r[1].clone(),
                y0d: r[2].clone(),
                yl0: r[3].clone(),
                yld: r[4].clone(),
            }
        });
        ComponentSplit {
            side: self.side,
            alpha,
            y0: parts[1].clone(),
            ylambda: parts[2].clone(),
            lambda: self.lambda.clone(),
            refinement,
        }
    }

    /// `A_0` for this side.
    pub fn zero_space(&self) -> &Subspace {
        &self.spaces.zero
    }

    /// The nontrivial eigenspace `A_λ` for this side.
    pub fn minus_space(&self) -> &Subspace {
        &self.spaces.minus
    }
}

/// Left component split `y = α_y a + y₀ + y_λ`.
pub fn component_split(a: &Algebra, x: &Element, y: &Element) -> Result<ComponentSplit> {
    a.check_element(y)?;
    Ok(Splitter::new(a, x, Side::Left)?.split(y))
}

/// Right component split `y = α_y a + ₀y + _δy`.
pub fn right_component_split(a: &Algebra, x: &Element, y: &Element) -> Result<ComponentSplit> {
    a.check_element(y)?;
    Ok(Splitter::new(a, x, Side::Right)?.split(y))
}

/// The Miyamoto involution of a Jordan axis: identity on `A_{1,1} ⊕ A_{0,0}`
/// and negation on `A_{λ,δ}`. The result is checked to be an involutive
/// automorphism.
pub fn miyamoto(a: &Algebra, x: &Element) -> Result<Operator> {
    let report = detect_axis(a, x).map_err(|e| Error::NotJordanAxis(e.to_string()))?;
    if !report.is_jordan_axis() {
        return Err(Error::NotJordanAxis(report.failures().join(", ")));
    }
    let splitter = Splitter::new(a, x, Side::Left)?;
    let two = a.domain().int(2);
    let cols: Vec<Element> = a
        .basis()
        .iter()
        .map(|e| e.sub(&splitter.split(e).ylambda.scale(&two)))
        .collect();
    let tau = Operator::from_columns(&cols);
    if !tau.compose(&tau).is_identity() {
        return Err(Error::NotAutomorphism("τ² ≠ 1".into()));
    }
    if let Some((i, j)) = automorphism_violation(a, &tau) {
        return Err(Error::NotAutomorphism(format!(
            "τ(e{i}·e{j}) ≠ τ(e{i})·τ(e{j})"
        )));
    }
    Ok(tau)
}

/// First basis pair on which `phi` fails to be multiplicative.
pub fn automorphism_violation(a: &Algebra, phi: &Operator) -> Option<(usize, usize)> {
    let n = a.dim();
    let images: Vec<Element> = (0..n).map(|i| phi.column(i)).collect();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| phi.apply(a.product_of_basis(i, j)) != a.mul(&images[i], &images[j]))
}

/// Every two-sided axis of a finite-field algebra, found by testing each
/// nonzero idempotent with the types read off its spectra.
pub fn find_axes_ff(a: &Algebra) -> Result<Vec<(Element, AxisReport)>> {
    find_axes_ff_with_cap(a, crate::idempotents::DEFAULT_ENUM_CAP)
}

pub fn find_axes_ff_with_cap(a: &Algebra, cap: u128) -> Result<Vec<(Element, AxisReport)>> {
    let idempotents = enumerate_idempotents_ff_with_cap(a, cap)?;
    Ok(idempotents
        .elements
        .into_iter()
        .filter(|e| !e.is_zero())
        .filter_map(|e| {
            let report = detect_axis(a, &e).ok()?;
            report.is_axis().then_some((e, report))
        })
        .collect())
}
