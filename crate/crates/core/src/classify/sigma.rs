//! σ and γ, the Seress identities, unit detection and the subalgebras
//! `A′(c, d)`.

use serde::Serialize;

use crate::algebra::{is_commutative, subalgebra_closure, Algebra};
use crate::axes::{check_axis, detect_axis, miyamoto, AxisReport, Splitter};
use crate::error::{Error, Result};
use crate::linalg::{Element, Subspace};
use crate::scalars::Scalar;
use crate::spectral::Side;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaData {
    pub sigma: Element,
    /// `α_b(1 − λ) − λ′`, from the left split of `b` along `a`.
    pub gamma: Scalar,
    pub alpha_a: Scalar,
    pub alpha_b: Scalar,
    /// `aσ ∈ Fa`.
    pub a_sigma_on_line: bool,
    /// `bσ ∈ Fb`.
    pub b_sigma_on_line: bool,
}

/// `σ = ab − λ′a − λb` together with γ and the line conditions.
pub fn sigma(
    alg: &Algebra,
    a: &Element,
    b: &Element,
    lambda: &Scalar,
    lambda_p: &Scalar,
) -> Result<SigmaData> {
    let sa = Splitter::new(alg, a, Side::Left)?;
    let sb = Splitter::new(alg, b, Side::Left)?;
    let s = alg.mul(a, b).sub(&a.scale(lambda_p)).sub(&b.scale(lambda));
    let alpha_b = sa.split(b).alpha;
    let alpha_a = sb.split(a).alpha;
    let one = alg.domain().one();
    let gamma = &(&alpha_b * &(&one - lambda)) - lambda_p;
    let on_line = |x: &Element| alg.span(std::slice::from_ref(x)).contains(&alg.mul(x, &s));
    Ok(SigmaData {
        a_sigma_on_line: on_line(a),
        b_sigma_on_line: on_line(b),
        sigma: s,
        gamma,
        alpha_a,
        alpha_b,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeressReport {
    /// `a(xy) = (ax)y + a(x₀y₀)` for `y ∈ Fa + A_0(L_a)`.
    pub left: bool,
    /// `(yx)a = y(xa) + (₀y ₀x)a` for `y ∈ Fa + A_0(R_a)`.
    pub right: bool,
}

impl SeressReport {
    pub fn holds(&self) -> bool {
        self.left && self.right
    }
}

/// Both Seress identities, checked for every basis `x` and every `y` in a
/// basis of `Fa + A_0`.
pub fn check_seress(alg: &Algebra, a: &Element) -> Result<SeressReport> {
    let report = detect_axis(alg, a)?;
    if !report.is_axis() {
        return Err(Error::NotAnAxis(report.failures().join(", ")));
    }
    let left = Splitter::new(alg, a, Side::Left)?;
    let right = Splitter::new(alg, a, Side::Right)?;
    let basis = alg.basis();
    let plus = |s: &Splitter| -> Vec<Element> {
        std::iter::once(a.clone())
            .chain(s.zero_space().basis().iter().cloned())
            .collect()
    };
    let left_ok = plus(&left).iter().all(|y| {
        let y0 = left.split(y).y0;
        basis.iter().all(|x| {
            let x0 = left.split(x).y0;
            let lhs = alg.mul(a, &alg.mul(x, y));
            let rhs = alg
                .mul(&alg.mul(a, x), y)
                .add(&alg.mul(a, &alg.mul(&x0, &y0)));
            lhs == rhs
        })
    });
    let right_ok = plus(&right).iter().all(|y| {
        let y0 = right.split(y).y0;
        basis.iter().all(|x| {
            let x0 = right.split(x).y0;
            let lhs = alg.mul(&alg.mul(y, x), a);
            let rhs = alg
                .mul(y, &alg.mul(x, a))
                .add(&alg.mul(&alg.mul(&y0, &x0), a));
            lhs == rhs
        })
    });
    Ok(SeressReport {
        left: left_ok,
        right: right_ok,
    })
}

/// The subalgebra generated by `c` and its image under the Miyamoto
/// involution of `d`.
pub fn a_prime_subalgebra(alg: &Algebra, c: &Element, d: &Element) -> Result<Subspace> {
    let rc = detect_axis(alg, c).map_err(|e| Error::NotJordanAxis(e.to_string()))?;
    if !rc.is_jordan_axis() {
        return Err(Error::NotJordanAxis(rc.failures().join(", ")));
    }
    let tau = miyamoto(alg, d)?;
    subalgebra_closure(alg, &[c.clone(), tau.apply(c)])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitReport {
    pub gamma: Scalar,
    /// `σ/γ` when `γ ≠ 0`.
    pub unit: Option<Element>,
    /// The unit acts as identity on both sides of every basis vector.
    pub unit_ok: bool,
    /// `check_axis(1 − a, 1 − λ, 1 − λ)` when the unit exists.
    pub coaxis_report: Option<AxisReport>,
    /// When `γ = 0`: whether `λ = λ′`.
    pub types_equal_when_gamma_zero: Option<bool>,
}

/// Unit `σ/γ` and the axis `1 − a` in the commutative 3-dimensional case.
pub fn unit_and_coaxis(alg: &Algebra, a: &Element, b: &Element) -> Result<UnitReport> {
    if alg.dim() != 3 || !is_commutative(alg) {
        return Err(Error::NotCommutativeCase(format!(
            "dim = {}, commutative = {}",
            alg.dim(),
            is_commutative(alg)
        )));
    }
    let types = |x: &Element, name: &str| -> Result<Scalar> {
        let r =
            detect_axis(alg, x).map_err(|e| Error::NotCommutativeCase(format!("{name}: {e}")))?;
        match (r.is_axis(), r.left_type, r.right_type) {
            (true, Some(l), Some(d)) if l == d => Ok(l),
            _ => Err(Error::NotCommutativeCase(format!(
                "{name} is not an axis of type (λ, λ)"
            ))),
        }
    };
    let l = types(a, "a")?;
    let lp = types(b, "b")?;
    let data = sigma(alg, a, b, &l, &lp)?;
    let gamma = data.gamma.clone();
    if gamma.is_zero() {
        return Ok(UnitReport {
            gamma,
            unit: None,
            unit_ok: false,
            coaxis_report: None,
            types_equal_when_gamma_zero: Some(l == lp),
        });
    }
    let unit = data.sigma.scale(&gamma.inv()?);
    let unit_ok = alg
        .basis()
        .iter()
        .all(|e| alg.mul(&unit, e) == *e && alg.mul(e, &unit) == *e);
    let co = unit.sub(a);
    let mu = &alg.domain().one() - &l;
    let coaxis_report = Some(check_axis(alg, &co, &mu, &mu)?);
    Ok(UnitReport {
        gamma,
        unit: Some(unit),
        unit_ok,
        coaxis_report,
        types_equal_when_gamma_zero: None,
    })
}
