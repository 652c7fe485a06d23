//! Minimal polynomials and eigenspace decompositions of multiplication
//! operators.
//!
//! Roots are only ever found exactly. Over GF(p) every residue is tried;
//! over ℚ the rational-root theorem supplies the candidates; over ℚ(t) the
//! candidates are `0`, `1`, and every `c` and `1 − c` where `c` is a
//! structure constant or operator entry. A leftover linear factor is solved
//! directly. Anything else is reported as a non-split minimal polynomial.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{solve_in_span, Element, Operator, Subspace};
use crate::scalars::{Domain, Scalar};

/// A univariate polynomial over a scalar domain, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// `Π (x − rᵢ)`.
    pub fn from_roots(domain: Domain, roots: &[Scalar]) -> Self {
        roots
            .iter()
            .fold(Polynomial::new(vec![domain.one()]), |acc, r| {
                acc.mul_linear(r)
            })
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn domain(&self) -> Domain {
        self.coeffs[0].domain()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.domain().zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn eval_operator(&self, m: &Operator) -> Operator {
        let n = m.size();
        self.coeffs
            .iter()
            .rev()
            .fold(Operator::zero(self.domain(), n), |acc, c| {
                acc.compose(m).add(&Operator::scalar(c.clone(), n))
            })
    }

    fn mul_linear(&self, root: &Scalar) -> Self {
        let zero = self.domain().zero();
        let mut out = vec![zero.clone(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] = &out[i + 1] + c;
            out[i] = &out[i] - &(c * root);
        }
        Polynomial::new(out)
    }

    /// Divides by `(x − root)`, assuming it is a factor.
    fn deflate(&self, root: &Scalar) -> Self {
        let d = self.degree();
        let mut out = vec![self.domain().zero(); d];
        let mut carry = self.domain().zero();
        for i in (0..d).rev() {
            carry = &(&carry * root) + &self.coeffs[i + 1];
            out[i] = carry.clone();
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(deg == 0 && first) {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            let mono = match deg {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{deg}"),
            };
            match (c.is_one(), deg) {
                (true, 0) | (false, 0) => write!(f, "{c}")?,
                (true, _) => f.write_str(&mono)?,
                (false, _) => write!(f, "({c})*{mono}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Kernel of a square operator, echelonized.
pub fn kernel(m: &Operator) -> Subspace {
    m.kernel()
}

/// Monic annihilating polynomial of least degree: the first linear
/// dependence among `I, M, M², …`.
pub fn min_poly(m: &Operator) -> Polynomial {
    let domain = m.domain();
    let flatten = |op: &Operator| Element::new(op.entries().to_vec()).expect("n ≥ 1");
    let mut power = Operator::identity(domain, m.size());
    let mut powers = vec![flatten(&power)];
    loop {
        power = power.compose(m);
        let target = flatten(&power);
        if let Some(c) = solve_in_span(&powers, &target) {
            let mut coeffs: Vec<Scalar> = c.iter().map(|x| -x).collect();
            coeffs.push(domain.one());
            return Polynomial::new(coeffs);
        }
        powers.push(target);
    }
}

/// Roots found in the domain (with multiplicity), plus the unfactored rest.
#[derive(Clone, Debug)]
pub struct RootSplit {
    pub roots: Vec<(Scalar, usize)>,
    pub remainder: Polynomial,
}

/// Finds the roots of `p` lying in its domain; `hints` feed the ℚ(t)
/// candidate set.
pub fn find_roots(p: &Polynomial, hints: &BTreeSet<Scalar>) -> RootSplit {
    let domain = p.domain();
    let mut rest = p.clone();
    let mut roots = Vec::new();
    let mut take = |rest: &mut Polynomial, r: Scalar| {
        let mut mult = 0;
        while rest.degree() > 0 && rest.eval(&r).is_zero() {
            *rest = rest.deflate(&r);
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    };
    take(&mut rest, domain.zero());
    let candidates: Vec<Scalar> = match domain {
        Domain::PrimeField(m) if m.get() <= 1_000_000 => domain.elements().unwrap().collect(),
        Domain::Rational => {
            rational_candidates(&rest).unwrap_or_else(|| hint_candidates(domain, hints))
        }
        _ => hint_candidates(domain, hints),
    };
    for c in candidates {
        if rest.degree() == 0 {
            break;
        }
        take(&mut rest, c);
    }
    if rest.degree() == 1 {
        let c = &rest.coeffs;
        let r = -&(&c[0] / &c[1]);
        take(&mut rest, r);
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    RootSplit {
        roots,
        remainder: rest,
    }
}

fn hint_candidates(domain: Domain, hints: &BTreeSet<Scalar>) -> Vec<Scalar> {
    let mut out: BTreeSet<Scalar> = BTreeSet::new();
    out.insert(domain.one());
    for h in hints.iter().filter(|h| h.domain() == domain) {
        out.insert(h.clone());
        out.insert(&domain.one() - h);
    }
    out.into_iter().collect()
}

/// Candidates `±d/e` with `d | a₀`, `e | aₙ` after clearing denominators.
/// `None` when the integers are too large to factor by trial division.
fn rational_candidates(p: &Polynomial) -> Option<Vec<Scalar>> {
    let coeffs: Vec<BigRational> = p
        .coeffs
        .iter()
        .map(|c| c.as_rational().cloned())
        .collect::<Option<_>>()?;
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
    let a0 = ints.first()?.abs();
    let an = ints.last()?.abs();
    if a0.is_zero() {
        return Some(Vec::new());
    }
    let num_divs = small_divisors(&a0)?;
    let den_divs = small_divisors(&an)?;
    let mut out = BTreeSet::new();
    for d in &num_divs {
        for e in &den_divs {
            let r = BigRational::new(BigInt::from(*d), BigInt::from(*e));
            out.insert(Domain::Rational.rational(&r).unwrap());
            out.insert(Domain::Rational.rational(&-r).unwrap());
        }
    }
    Some(out.into_iter().collect())
}

fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.to_u64().filter(|&n| n <= 1_000_000_000_000)?;
    let mut divs = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            divs.push(d);
            divs.push(n / d);
        }
        d += 1;
    }
    Some(divs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn operator(self, a: &Algebra, x: &Element) -> Operator {
        match self {
            Side::Left => a.left_op(x),
            Side::Right => a.right_op(x),
        }
    }
}

/// Why a decomposition may be incomplete. Reported, never fatal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectralDefect {
    NonSplitMinPoly(Polynomial),
    NonSemisimple(Scalar),
}

impl fmt::Display for SpectralDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralDefect::NonSplitMinPoly(p) => write!(
                f,
                "minimal polynomial has factor {p} without roots in the field"
            ),
            SpectralDefect::NonSemisimple(r) => write!(
                f,
                "eigenvalue {r} is a repeated root of the minimal polynomial"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenPart {
    pub value: Scalar,
    pub space: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenDecomposition {
    pub side: Side,
    pub parts: Vec<EigenPart>,
    pub complete: bool,
    pub min_poly: Polynomial,
    pub defects: Vec<SpectralDefect>,
}

impl EigenDecomposition {
    /// The eigenspace for `value` (zero if `value` is not an eigenvalue).
    pub fn part(&self, value: &Scalar) -> Option<&Subspace> {
        self.parts
            .iter()
            .find(|p| &p.value == value)
            .map(|p| &p.space)
    }

    pub fn eigenvalues(&self) -> impl Iterator<Item = &Scalar> {
        self.parts.iter().map(|p| &p.value)
    }
}

/// Structure constants as root-finding hints.
pub(crate) fn table_hints(a: &Algebra) -> BTreeSet<Scalar> {
    a.table()
        .iter()
        .flatten()
        .flat_map(|e| e.coords().iter().cloned())
        .collect()
}

pub fn eigen_decompose(a: &Algebra, x: &Element, side: Side) -> Result<EigenDecomposition> {
    a.check_element(x)?;
    let m = side.operator(a, x);
    let mut hints = table_hints(a);
    hints.extend(m.entries().iter().cloned());
    Ok(decompose_operator(&m, side, &hints))
}

pub(crate) fn decompose_operator(
    m: &Operator,
    side: Side,
    hints: &BTreeSet<Scalar>,
) -> EigenDecomposition {
    let mp = min_poly(m);
    let split = find_roots(&mp, hints);
    let mut defects = Vec::new();
    let mut parts = Vec::new();
    for (r, mult) in &split.roots {
        if *mult > 1 {
            defects.push(SpectralDefect::NonSemisimple(r.clone()));
        }
        parts.push(EigenPart {
            value: r.clone(),
            space: m.shift(r).kernel(),
        });
    }
    if split.remainder.degree() > 0 {
        defects.push(SpectralDefect::NonSplitMinPoly(split.remainder.clone()));
    }
    let total: usize = parts.iter().map(|p| p.space.dim()).sum();
    EigenDecomposition {
        side,
        complete: total == m.size(),
        parts,
        min_poly: mp,
        defects,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JointPart {
    pub left: Scalar,
    pub right: Scalar,
    pub space: Subspace,
}

/// `A_{λ,δ} = A_λ(L_a) ∩ A_δ(R_a)` for all pairs of one-sided eigenvalues
/// with a nonzero intersection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JointDecomposition {
    pub parts: Vec<JointPart>,
    pub complete: bool,
}

impl JointDecomposition {
    pub fn part(&self, left: &Scalar, right: &Scalar) -> Option<&Subspace> {
        self.parts
            .iter()
            .find(|p| &p.left == left && &p.right == right)
            .map(|p| &p.space)
    }

    /// Dimension of `A_{λ,δ}`, zero when absent.
    pub fn dim_of(&self, left: &Scalar, right: &Scalar) -> usize {
        self.part(left, right).map_or(0, Subspace::dim)
    }
}

pub fn joint_decompose(a: &Algebra, x: &Element) -> Result<JointDecomposition> {
    a.check_element(x)?;
    let l = a.left_op(x);
    let r = a.right_op(x);
    if l.compose(&r) != r.compose(&l) {
        return Err(Error::NonCommutingOps);
    }
    let left = eigen_decompose(a, x, Side::Left)?;
    let right = eigen_decompose(a, x, Side::Right)?;
    Ok(joint_from(&left.parts, &right.parts, a.dim()))
}

pub(crate) fn joint_from(left: &[EigenPart], right: &[EigenPart], n: usize) -> JointDecomposition {
    let mut parts = Vec::new();
    for lp in left {
        for rp in right {
            let space = lp.space.intersect(&rp.space);
            if !space.is_zero() {
                parts.push(JointPart {
                    left: lp.value.clone(),
                    right: rp.value.clone(),
                    space,
                });
            }
        }
    }
    let total: usize = parts.iter().map(|p| p.space.dim()).sum();
    JointDecomposition {
        parts,
        complete: total == n,
    }
}
