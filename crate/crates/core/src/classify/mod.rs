//! Classification of algebras generated by two axes.
//!
//! Every verdict carries the identities it was derived from as named
//! witnesses. A case other than [`Case::NotClassifiable`] is only returned
//! when all of them hold.

mod search;
mod sigma;
mod suite;

use std::fmt;

use serde::Serialize;

pub use search::{search_dim2_ff, search_dim2_ff_with_cap, SearchReport, Survivor};
pub use sigma::{
    a_prime_subalgebra, check_seress, sigma, unit_and_coaxis, SeressReport, SigmaData, UnitReport,
};
pub use suite::{
    verify_catalog, verify_entry, verify_paper_suite, verify_subject, StatementResult, Subject,
    SuiteReport,
};

use crate::algebra::{is_commutative, is_flexible, subalgebra_closure, Algebra};
use crate::axes::{detect_axis, AxisType, Splitter};
use crate::error::{Error, Result};
use crate::linalg::{solve_in_span, Element, Subspace};
use crate::scalars::Scalar;
use crate::spectral::Side;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case")]
pub enum Case {
    #[serde(rename = "TWO_B")]
    TwoB,
    #[serde(rename = "HSS_DIM2")]
    HssDim2 { lambda: Scalar },
    #[serde(rename = "FLEX1")]
    Flex1 { lambda: Scalar, delta: Scalar },
    #[serde(rename = "FLEX2")]
    Flex2 { lambda: Scalar, delta: Scalar },
    #[serde(rename = "B_FAMILY")]
    BFamily {
        lambda: Scalar,
        lambda_prime: Scalar,
        gamma: Scalar,
    },
    #[serde(rename = "NOT_CLASSIFIABLE")]
    NotClassifiable { diagnostic: String },
}

impl Case {
    pub fn label(&self) -> &'static str {
        match self {
            Case::TwoB => "TWO_B",
            Case::HssDim2 { .. } => "HSS_DIM2",
            Case::Flex1 { .. } => "FLEX1",
            Case::Flex2 { .. } => "FLEX2",
            Case::BFamily { .. } => "B_FAMILY",
            Case::NotClassifiable { .. } => "NOT_CLASSIFIABLE",
        }
    }

    pub fn is_classified(&self) -> bool {
        !matches!(self, Case::NotClassifiable { .. })
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::TwoB => write!(f, "TWO_B"),
            Case::HssDim2 { lambda } => write!(f, "HSS_DIM2(λ={lambda})"),
            Case::Flex1 { lambda, delta } => write!(f, "FLEX1(λ={lambda}, δ={delta})"),
            Case::Flex2 { lambda, delta } => write!(f, "FLEX2(λ={lambda}, δ={delta})"),
            Case::BFamily {
                lambda,
                lambda_prime,
                gamma,
            } => write!(f, "B_FAMILY(λ={lambda}, λ′={lambda_prime}, γ={gamma})"),
            Case::NotClassifiable { diagnostic } => write!(f, "NOT_CLASSIFIABLE({diagnostic})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub case: Case,
    pub dim: usize,
    pub commutative: bool,
    pub flexible: bool,
    pub witnesses: Vec<Witness>,
    pub warnings: Vec<String>,
}

impl ClassificationResult {
    fn new(alg: &Algebra) -> Self {
        let mut warnings = Vec::new();
        if alg.domain().characteristic() == 3 {
            warnings.push(
                "characteristic 3: -1 = 1/2, so the two commutative 2-dimensional cases coincide"
                    .into(),
            );
        }
        ClassificationResult {
            case: Case::NotClassifiable {
                diagnostic: "unclassified".into(),
            },
            dim: alg.dim(),
            commutative: is_commutative(alg),
            flexible: is_flexible(alg),
            witnesses: Vec::new(),
            warnings,
        }
    }

    fn witness(&mut self, name: impl Into<String>, pass: bool) -> bool {
        self.witnesses.push(Witness {
            name: name.into(),
            pass,
        });
        pass
    }

    pub fn first_failure(&self) -> Option<&Witness> {
        self.witnesses.iter().find(|w| !w.pass)
    }

    /// Settles on `case` unless some witness failed.
    fn finish(mut self, case: Case) -> Self {
        self.case = match self.first_failure() {
            Some(w) => Case::NotClassifiable {
                diagnostic: w.name.clone(),
            },
            None => case,
        };
        self
    }

    fn reject(mut self, diagnostic: impl Into<String>) -> Self {
        self.case = Case::NotClassifiable {
            diagnostic: diagnostic.into(),
        };
        self
    }
}

/// Axis data of one generator.
pub(crate) struct AxisInfo {
    pub lambda: AxisType,
    pub delta: AxisType,
    pub left: Splitter,
}

/// Reads the types of `x` and checks it is a (Jordan, if asked) axis.
/// `Ok(Err(msg))` means the element is not an axis.
pub(crate) fn axis_info(
    alg: &Algebra,
    x: &Element,
    jordan: bool,
) -> Result<std::result::Result<AxisInfo, String>> {
    let report = match detect_axis(alg, x) {
        Ok(r) => r,
        Err(Error::NotAnAxis(m)) => return Ok(Err(m)),
        Err(e) => return Err(e),
    };
    let ok = if jordan {
        report.is_jordan_axis()
    } else {
        report.is_axis()
    };
    if !ok {
        return Ok(Err(report.failures().join(", ")));
    }
    let left = Splitter::new(alg, x, Side::Left)?;
    Ok(Ok(AxisInfo {
        lambda: report.left_type.clone(),
        delta: report.right_type.clone(),
        left,
    }))
}

/// Coordinates of `v` in the basis `a, b` of a 2-dimensional span.
fn coords2(a: &Element, b: &Element, v: &Element) -> Option<(Scalar, Scalar)> {
    let c = solve_in_span(&[a.clone(), b.clone()], v)?;
    Some((c[0].clone(), c[1].clone()))
}

fn generated(alg: &Algebra, a: &Element, b: &Element) -> Result<Subspace> {
    alg.check_element(a)?;
    alg.check_element(b)?;
    let closure = subalgebra_closure(alg, &[a.clone(), b.clone()])?;
    if !closure.is_full() {
        return Err(Error::NotGeneratedByGivenAxes);
    }
    Ok(closure)
}

/// Dimension-2 classification: 2B, the commutative cases `ab = λ(a + b)`
/// with `λ ∈ {−1, 1/2}`, or the flexible algebra with `λ + δ = 1, λ ≠ δ`.
pub fn classify_dim2(alg: &Algebra, a: &Element, b: &Element) -> Result<ClassificationResult> {
    if alg.dim() != 2 {
        return Err(Error::NotTwoDim(alg.dim()));
    }
    generated(alg, a, b)?;
    let res = ClassificationResult::new(alg);
    let ia = match axis_info(alg, a, false)? {
        Ok(i) => i,
        Err(m) => return Ok(res.reject(format!("a is not an axis: {m}"))),
    };
    let ib = match axis_info(alg, b, false)? {
        Ok(i) => i,
        Err(m) => return Ok(res.reject(format!("b is not an axis: {m}"))),
    };
    Ok(dim2_body(alg, a, b, &ia, &ib, res))
}

fn dim2_body(
    alg: &Algebra,
    a: &Element,
    b: &Element,
    ia: &AxisInfo,
    ib: &AxisInfo,
    mut res: ClassificationResult,
) -> ClassificationResult {
    let d = alg.domain();
    let one = d.one();
    let ab = alg.mul(a, b);
    let ba = alg.mul(b, a);
    res.witness("flexible", res.flexible);
    if ab.is_zero() && ba.is_zero() {
        res.witness("ab = 0", true);
        res.witness("ba = 0", true);
        return res.finish(Case::TwoB);
    }
    let (Some(l), Some(dl), Some(lp), Some(dp)) = (&ia.lambda, &ia.delta, &ib.lambda, &ib.delta)
    else {
        res.witness(
            "ab = ba = 0 when some nontrivial eigenspace vanishes",
            false,
        );
        return res.finish(Case::TwoB);
    };
    let (Some((p1, q1)), Some((p2, q2))) = (coords2(a, b, &ab), coords2(a, b, &ba)) else {
        res.witness("a, b span A", false);
        return res.finish(Case::TwoB);
    };
    res.witness("ab = δ′a + λb", p1 == *dp && q1 == *l);
    res.witness("ba = λ′a + δb", p2 == *lp && q2 == *dl);
    let llp = l * lp;
    let ddp = dl * dp;
    res.witness("λλ′ − δδ′ = λ′ − δ′", &llp - &ddp == lp - dp);
    res.witness("λλ′ − δδ′ = λ − δ", &llp - &ddp == l - dl);
    res.witness("λλ′ + λ′δ = 1 − δ", &llp + &(lp * dl) == &one - dl);
    res.witness("λ′λ + λδ′ = 1 − δ′", &llp + &(l * dp) == &one - dp);
    res.witness("λ′δ + δδ′ = 1 − λ′", &(lp * dl) + &ddp == &one - lp);
    res.witness("λδ′ + δδ′ = 1 − λ", &(l * dp) + &ddp == &one - l);
    let alpha_b = ia.left.split(b).alpha;
    res.witness("α_b(λ + δ) = 1", &alpha_b * &(l + dl) == one);
    if l == dl {
        let ok = *l == d.int(-1) || *l == d.ratio(1, 2).expect("char ≠ 2");
        res.witness("λ = δ ∈ {-1, 1/2}", ok);
        res.witness("ab = ba = λ(a + b)", ab == ba && p1 == *l && q1 == *l);
        res.finish(Case::HssDim2 { lambda: l.clone() })
    } else {
        res.witness("λ + δ = 1", (l + dl) == one);
        res.finish(Case::Flex1 {
            lambda: l.clone(),
            delta: dl.clone(),
        })
    }
}

/// `A_0(L_x)² ⊆ A_0(L_x)`.
pub(crate) fn zero_part_closed(alg: &Algebra, info: &AxisInfo) -> bool {
    let z = info.left.zero_space();
    alg.products_within(z, z, z)
}

/// Classification of an algebra generated by two axes of Jordan type.
pub fn classify_2gen(alg: &Algebra, a: &Element, b: &Element) -> Result<ClassificationResult> {
    generated(alg, a, b)?;
    if alg.dim() > 3 {
        return Err(Error::DimExceedsThree(alg.dim()));
    }
    let mut res = ClassificationResult::new(alg);
    let ia = match axis_info(alg, a, true)? {
        Ok(i) => i,
        Err(m) => return Ok(res.reject(format!("a is not a Jordan axis: {m}"))),
    };
    let ib = match axis_info(alg, b, true)? {
        Ok(i) => i,
        Err(m) => return Ok(res.reject(format!("b is not a Jordan axis: {m}"))),
    };
    let ab = alg.mul(a, b);
    res.witness(
        "A = span{a, b, ab}",
        alg.span(&[a.clone(), b.clone(), ab.clone()]).is_full(),
    );
    res.witness("A_0(a)² ⊆ A_0(a)", zero_part_closed(alg, &ia));
    res.witness("A_0(b)² ⊆ A_0(b)", zero_part_closed(alg, &ib));
    if alg.dim() <= 2 {
        if alg.dim() == 1 {
            return Ok(res.reject("a and b span a 1-dimensional algebra"));
        }
        let sub = dim2_body(alg, a, b, &ia, &ib, ClassificationResult::new(alg));
        let case = sub.case.clone();
        res.witnesses.extend(sub.witnesses);
        return Ok(res.finish(case));
    }
    res.witness("flexible", res.flexible);
    let types = (&ia.lambda, &ia.delta, &ib.lambda, &ib.delta);
    let (Some(l), Some(dl), Some(lp), Some(dp)) = types else {
        res.witness("all four eigenvalue types defined", false);
        return Ok(res.finish(Case::TwoB));
    };
    let d = alg.domain();
    let one = d.one();
    let ba = alg.mul(b, a);
    let sb = ia.left.split(b);
    let sa = ib.left.split(a);
    if !res.commutative {
        let y = sb.ylambda.clone();
        res.witness("λ ≠ δ", l != dl);
        res.witness("λ′ ≠ δ′", lp != dp);
        res.witness("b_{λ,δ} ≠ 0", !y.is_zero());
        res.witness("b_0 ≠ 0", !sb.y0.is_zero());
        res.witness("b_{λ,δ}² = 0", alg.square(&y).is_zero());
        res.witness("α_a = α_b = 0", sa.alpha.is_zero() && sb.alpha.is_zero());
        res.witness("ab = λy", ab == y.scale(l));
        res.witness("ba = δy", ba == y.scale(dl));
        res.witness("ay = λy", alg.mul(a, &y) == y.scale(l));
        res.witness("ya = δy", alg.mul(&y, a) == y.scale(dl));
        res.witness("by = λ′y", alg.mul(b, &y) == y.scale(lp));
        res.witness("yb = δ′y", alg.mul(&y, b) == y.scale(dp));
        res.witness("λ + δ = 1", (l + dl) == one);
        res.witness("λ′ + δ′ = 1", (lp + dp) == one);
        res.witness("λ′ = δ", lp == dl);
        res.witness("δ′ = λ", dp == l);
        return Ok(res.finish(Case::Flex2 {
            lambda: l.clone(),
            delta: dl.clone(),
        }));
    }
    res.witness("λ = δ", l == dl);
    res.witness("λ′ = δ′", lp == dp);
    let s = ab.sub(&a.scale(lp)).sub(&b.scale(l));
    let gamma = &(&sb.alpha * &(&one - l)) - lp;
    let gamma_a = &(&sa.alpha * &(&one - lp)) - l;
    res.witness("γ = α_b(1 − λ) − λ′ = α_a(1 − λ′) − λ", gamma == gamma_a);
    res.witness(
        "{a, b, σ} is a basis",
        alg.span(&[a.clone(), b.clone(), s.clone()]).is_full(),
    );
    res.witness(
        "aσ = σa = γa",
        alg.mul(a, &s) == a.scale(&gamma) && alg.mul(&s, a) == a.scale(&gamma),
    );
    res.witness(
        "bσ = σb = γb",
        alg.mul(b, &s) == b.scale(&gamma) && alg.mul(&s, b) == b.scale(&gamma),
    );
    res.witness("σ² = γσ", alg.square(&s) == s.scale(&gamma));
    Ok(res.finish(Case::BFamily {
        lambda: l.clone(),
        lambda_prime: lp.clone(),
        gamma,
    }))
}
