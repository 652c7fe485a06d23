//! Named algebras: 2B, the 2-dimensional Jordan-type algebras, the two
//! flexible examples and the commutative 3-dimensional family.

use std::fmt;

use serde::Serialize;

use crate::algebra::{build_algebra, Algebra};
use crate::axes::AxisType;
use crate::classify::Case;
use crate::error::{Error, Result};
use crate::linalg::Element;
use crate::scalars::{Domain, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub description: String,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: Vec<(&'static str, Scalar)>,
    pub constraints: Vec<Constraint>,
    pub algebra: Algebra,
    pub generators: [Element; 2],
    /// Declared `(left, right)` types of the generators.
    pub axis_types: [(AxisType, AxisType); 2],
    pub expected: Case,
}

impl CatalogEntry {
    pub fn domain(&self) -> Domain {
        self.algebra.domain()
    }

    pub fn param(&self, name: &str) -> Option<&Scalar> {
        self.params.iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }

    /// Rebuilds the entry with `t = value` substituted into every parameter,
    /// re-checking the constraints in the new domain.
    pub fn instantiate(&self, value: &Scalar) -> Result<CatalogEntry> {
        let p: Vec<Scalar> = self
            .params
            .iter()
            .map(|(_, v)| v.specialize(value))
            .collect::<Result<_>>()?;
        let domain = value.domain();
        match self.name {
            "2B" => Ok(make_2b(domain)),
            "HSS_DIM2" => make_hss_dim2(domain, &p[0]),
            "FLEX1" => make_flex1(domain, &p[0]),
            "FLEX2" => make_flex2(domain, &p[0]),
            "B_FAMILY" => make_bfamily(domain, &p[0], &p[1], &p[2]),
            other => unreachable!("unknown catalog family {other}"),
        }
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if !self.params.is_empty() {
            let shown: Vec<String> = self
                .params
                .iter()
                .map(|(n, v)| format!("{n}={v}"))
                .collect();
            write!(f, "({})", shown.join(", "))?;
        }
        write!(f, " over {}", self.domain())
    }
}

fn same_domain(domain: Domain, values: &[&Scalar]) -> Result<()> {
    match values.iter().find(|v| v.domain() != domain) {
        Some(v) => Err(Error::DomainMismatch(domain, v.domain())),
        None => Ok(()),
    }
}

fn half(domain: Domain) -> Scalar {
    domain.ratio(1, 2).expect("characteristic is not 2")
}

fn not_in(name: &str, value: &Scalar, excluded: &[(&str, Scalar)]) -> Constraint {
    let labels: Vec<&str> = excluded.iter().map(|(l, _)| *l).collect();
    Constraint {
        description: format!("{name} ∉ {{{}}}", labels.join(", ")),
        holds: excluded.iter().all(|(_, v)| v != value),
    }
}

fn require(constraints: &[Constraint]) -> Result<()> {
    match constraints.iter().find(|c| !c.holds) {
        Some(c) => Err(Error::ParamOutOfRange(c.description.clone())),
        None => Ok(()),
    }
}

fn table_from(rows: Vec<Vec<Vec<Scalar>>>) -> Vec<Vec<Element>> {
    rows.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| Element::new(c).expect("nonempty"))
                .collect()
        })
        .collect()
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// `a² = a, b² = b, ab = ba = 0`.
pub fn make_2b(domain: Domain) -> CatalogEntry {
    let (o, i) = (domain.zero(), domain.one());
    let table = table_from(vec![
        vec![vec![i.clone(), o.clone()], vec![o.clone(), o.clone()]],
        vec![vec![o.clone(), o.clone()], vec![o.clone(), i.clone()]],
    ]);
    let algebra = build_algebra(domain, 2, names(&["a", "b"]), table).expect("valid table");
    CatalogEntry {
        name: "2B",
        params: vec![],
        constraints: vec![],
        generators: [algebra.basis_element(0), algebra.basis_element(1)],
        algebra,
        axis_types: [(None, None), (None, None)],
        expected: Case::TwoB,
    }
}

/// The raw 2-dimensional table `ab = p₁a + q₁b, ba = p₂a + q₂b`.
pub fn dim2_algebra(domain: Domain, ab: [&Scalar; 2], ba: [&Scalar; 2]) -> Result<Algebra> {
    same_domain(domain, &[ab[0], ab[1], ba[0], ba[1]])?;
    let (o, i) = (domain.zero(), domain.one());
    let table = table_from(vec![
        vec![
            vec![i.clone(), o.clone()],
            vec![ab[0].clone(), ab[1].clone()],
        ],
        vec![vec![ba[0].clone(), ba[1].clone()], vec![o, i]],
    ]);
    build_algebra(domain, 2, names(&["a", "b"]), table)
}

/// `ab = ba = λ(a + b)` with `λ ∈ {−1, 1/2}`.
pub fn make_hss_dim2(domain: Domain, lambda: &Scalar) -> Result<CatalogEntry> {
    same_domain(domain, &[lambda])?;
    let constraints = vec![Constraint {
        description: "λ ∈ {-1, 1/2}".into(),
        holds: *lambda == domain.int(-1) || *lambda == half(domain),
    }];
    require(&constraints)?;
    let algebra = dim2_algebra(domain, [lambda, lambda], [lambda, lambda])?;
    let t = Some(lambda.clone());
    Ok(CatalogEntry {
        name: "HSS_DIM2",
        params: vec![("λ", lambda.clone())],
        constraints,
        generators: [algebra.basis_element(0), algebra.basis_element(1)],
        algebra,
        axis_types: [(t.clone(), t.clone()), (t.clone(), t)],
        expected: Case::HssDim2 {
            lambda: lambda.clone(),
        },
    })
}

fn flex_constraints(domain: Domain, lambda: &Scalar) -> Vec<Constraint> {
    vec![not_in(
        "λ",
        lambda,
        &[
            ("0", domain.zero()),
            ("1", domain.one()),
            ("1/2", half(domain)),
        ],
    )]
}

/// `ab = δa + λb, ba = λa + δb` with `δ = 1 − λ`.
pub fn make_flex1(domain: Domain, lambda: &Scalar) -> Result<CatalogEntry> {
    same_domain(domain, &[lambda])?;
    let constraints = flex_constraints(domain, lambda);
    require(&constraints)?;
    let delta = &domain.one() - lambda;
    let algebra = dim2_algebra(domain, [&delta, lambda], [lambda, &delta])?;
    let ty = (Some(lambda.clone()), Some(delta.clone()));
    Ok(CatalogEntry {
        name: "FLEX1",
        params: vec![("λ", lambda.clone())],
        constraints,
        generators: [algebra.basis_element(0), algebra.basis_element(1)],
        algebra,
        axis_types: [ty.clone(), ty],
        expected: Case::Flex1 {
            lambda: lambda.clone(),
            delta,
        },
    })
}

/// `ab = ax = xb = λx, ba = xa = bx = δx, x² = 0` with `δ = 1 − λ`.
pub fn make_flex2(domain: Domain, lambda: &Scalar) -> Result<CatalogEntry> {
    same_domain(domain, &[lambda])?;
    let constraints = flex_constraints(domain, lambda);
    require(&constraints)?;
    let delta = &domain.one() - lambda;
    let algebra = flex2_algebra(domain, lambda, &delta)?;
    Ok(CatalogEntry {
        name: "FLEX2",
        params: vec![("λ", lambda.clone())],
        constraints,
        generators: [algebra.basis_element(0), algebra.basis_element(1)],
        algebra,
        axis_types: [
            (Some(lambda.clone()), Some(delta.clone())),
            (Some(delta.clone()), Some(lambda.clone())),
        ],
        expected: Case::Flex2 {
            lambda: lambda.clone(),
            delta,
        },
    })
}

/// The flex(2) table on `a, b, x` without any parameter checks.
pub fn flex2_algebra(domain: Domain, lambda: &Scalar, delta: &Scalar) -> Result<Algebra> {
    same_domain(domain, &[lambda, delta])?;
    let o = domain.zero();
    let i = domain.one();
    let v = |a: &Scalar, b: &Scalar, x: &Scalar| vec![a.clone(), b.clone(), x.clone()];
    let (l, d) = (lambda, delta);
    let table = table_from(vec![
        vec![v(&i, &o, &o), v(&o, &o, l), v(&o, &o, l)],
        vec![v(&o, &o, d), v(&o, &i, &o), v(&o, &o, d)],
        vec![v(&o, &o, d), v(&o, &o, l), v(&o, &o, &o)],
    ]);
    build_algebra(domain, 3, names(&["a", "b", "x"]), table)
}

/// The commutative table on `a, b, σ`: `ab = ba = λ′a + λb + σ`,
/// `aσ = σa = γa`, `bσ = σb = γb`, `σ² = γσ`. No parameter checks.
pub fn bfamily_algebra(
    domain: Domain,
    lambda: &Scalar,
    lambda_p: &Scalar,
    gamma: &Scalar,
) -> Result<Algebra> {
    same_domain(domain, &[lambda, lambda_p, gamma])?;
    let o = domain.zero();
    let i = domain.one();
    let v = |a: &Scalar, b: &Scalar, s: &Scalar| vec![a.clone(), b.clone(), s.clone()];
    let ab = v(lambda_p, lambda, &i);
    let table = table_from(vec![
        vec![v(&i, &o, &o), ab.clone(), v(gamma, &o, &o)],
        vec![ab, v(&o, &i, &o), v(&o, gamma, &o)],
        vec![v(gamma, &o, &o), v(&o, gamma, &o), v(&o, &o, gamma)],
    ]);
    build_algebra(domain, 3, names(&["a", "b", "s"]), table)
}

/// The value of γ for which `a` and `b` are axes of the commutative family,
/// or `None` when every γ works (`λ = λ′ = 1/2`). Errors when no γ works.
pub fn bfamily_gamma(lambda: &Scalar, lambda_p: &Scalar) -> Result<Option<Scalar>> {
    let domain = lambda.domain();
    let h = half(domain);
    let one = domain.one();
    if *lambda == h && *lambda_p == h {
        return Ok(None);
    }
    let lm = lambda * &h;
    if lambda == lambda_p {
        // −λ(1+λ)/2
        return Ok(Some(-(&lm * &(&one + lambda))));
    }
    if (lambda + lambda_p) == one {
        // −λ(1−λ)/2
        return Ok(Some(-(&lm * &(&one - lambda))));
    }
    Err(Error::ParamOutOfRange(format!(
        "no γ makes a and b axes when λ = {lambda}, λ′ = {lambda_p}: need λ = λ′ or λ + λ′ = 1"
    )))
}

/// Commutative 3-dimensional family with axes `a`, `b` of Jordan types
/// `(λ, λ)` and `(λ′, λ′)`.
pub fn make_bfamily(
    domain: Domain,
    lambda: &Scalar,
    lambda_p: &Scalar,
    gamma: &Scalar,
) -> Result<CatalogEntry> {
    same_domain(domain, &[lambda, lambda_p, gamma])?;
    let excl = [("0", domain.zero()), ("1", domain.one())];
    let mut constraints = vec![not_in("λ", lambda, &excl), not_in("λ′", lambda_p, &excl)];
    require(&constraints)?;
    let forced = bfamily_gamma(lambda, lambda_p)?;
    constraints.push(Constraint {
        description: match &forced {
            Some(g) => format!("γ = {g}"),
            None => "γ arbitrary (λ = λ′ = 1/2)".into(),
        },
        holds: forced.as_ref().is_none_or(|g| g == gamma),
    });
    require(&constraints)?;
    let algebra = bfamily_algebra(domain, lambda, lambda_p, gamma)?;
    Ok(CatalogEntry {
        name: "B_FAMILY",
        params: vec![
            ("λ", lambda.clone()),
            ("λ′", lambda_p.clone()),
            ("γ", gamma.clone()),
        ],
        constraints,
        generators: [algebra.basis_element(0), algebra.basis_element(1)],
        algebra,
        axis_types: [
            (Some(lambda.clone()), Some(lambda.clone())),
            (Some(lambda_p.clone()), Some(lambda_p.clone())),
        ],
        expected: Case::BFamily {
            lambda: lambda.clone(),
            lambda_prime: lambda_p.clone(),
            gamma: gamma.clone(),
        },
    })
}

/// [`make_bfamily`] with γ chosen by the axis condition (1 when free).
pub fn make_bfamily_auto(
    domain: Domain,
    lambda: &Scalar,
    lambda_p: &Scalar,
) -> Result<CatalogEntry> {
    let gamma = bfamily_gamma(lambda, lambda_p)?.unwrap_or_else(|| domain.one());
    make_bfamily(domain, lambda, lambda_p, &gamma)
}

/// Generic entries over ℚ(t): the parametric families with `λ = t`.
pub fn generic_catalog() -> Vec<CatalogEntry> {
    let d = Domain::RationalFunction;
    let t = d.indeterminate().expect("ℚ(t)");
    let one = d.one();
    vec![
        make_2b(d),
        make_flex1(d, &t).expect("t ∉ {0, 1, 1/2}"),
        make_flex2(d, &t).expect("t ∉ {0, 1, 1/2}"),
        make_bfamily_auto(d, &t, &t).expect("λ = λ′"),
        make_bfamily_auto(d, &t, &(&one - &t)).expect("λ + λ′ = 1"),
        make_bfamily(d, &half(d), &half(d), &t).expect("λ = λ′ = 1/2"),
    ]
}

/// Sample entries over ℚ or GF(p).
pub fn sample_catalog(domain: Domain) -> Vec<CatalogEntry> {
    let q = |n: i64, m: i64| domain.ratio(n, m).expect("denominator invertible");
    let mut out = vec![make_2b(domain)];
    out.extend(make_hss_dim2(domain, &q(1, 2)));
    if domain.characteristic() != 3 {
        out.extend(make_hss_dim2(domain, &q(-1, 1)));
    }
    let lambdas: Vec<Scalar> = match domain.order() {
        Some(_) => domain
            .elements()
            .expect("finite")
            .filter(|l| flex_constraints(domain, l)[0].holds)
            .collect(),
        None => vec![q(1, 3), q(-2, 1)],
    };
    for l in &lambdas {
        out.extend(make_flex1(domain, l));
        out.extend(make_flex2(domain, l));
    }
    let mut pairs = vec![
        (q(1, 2), q(1, 2), Some(domain.one())),
        (q(1, 2), q(1, 2), Some(domain.zero())),
    ];
    if domain.characteristic() != 3 {
        pairs.push((q(-1, 1), q(-1, 1), None));
    }
    if let Some(l) = lambdas.first() {
        pairs.push((l.clone(), l.clone(), None));
        pairs.push((l.clone(), &domain.one() - l, None));
    }
    for (l, lp, g) in pairs {
        let entry = match g {
            Some(g) => make_bfamily(domain, &l, &lp, &g),
            None => make_bfamily_auto(domain, &l, &lp),
        };
        out.extend(entry);
    }
    out
}

/// The full shipped catalog: generic ℚ(t) entries plus samples over ℚ and GF(5).
pub fn paper_catalog() -> Vec<CatalogEntry> {
    let mut out = generic_catalog();
    out.extend(sample_catalog(Domain::Rational));
    out.extend(sample_catalog(
        Domain::prime_field(5).expect("5 is an odd prime"),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::is_flexible;

    #[test]
    fn flex2_products() {
        let d = Domain::Rational;
        let e = make_flex2(d, &d.ratio(1, 3).unwrap()).unwrap();
        let a = &e.algebra;
        let x = a.basis_element(2);
        let third = d.ratio(1, 3).unwrap();
        assert_eq!(a.mul(&e.generators[0], &e.generators[1]), x.scale(&third));
        assert_eq!(
            a.mul(&e.generators[1], &e.generators[0]),
            x.scale(&d.ratio(2, 3).unwrap())
        );
        assert!(a.square(&x).is_zero());
    }

    #[test]
    fn parameter_guards() {
        let d = Domain::Rational;
        assert!(matches!(
            make_hss_dim2(d, &d.ratio(1, 3).unwrap()),
            Err(Error::ParamOutOfRange(_))
        ));
        assert!(matches!(
            make_flex1(d, &d.ratio(1, 2).unwrap()),
            Err(Error::ParamOutOfRange(_))
        ));
        assert!(matches!(
            make_flex2(d, &d.one()),
            Err(Error::ParamOutOfRange(_))
        ));
        let (h, third) = (d.ratio(1, 2).unwrap(), d.ratio(1, 3).unwrap());
        assert!(make_bfamily(d, &h, &third, &d.one()).is_err());
        assert!(make_bfamily(d, &h, &h, &d.one()).is_ok());
        assert!(make_bfamily(d, &d.int(-1), &d.int(-1), &d.zero()).is_ok());
    }

    #[test]
    fn gf5_flex1_has_delta_four() {
        let d = Domain::prime_field(5).unwrap();
        let e = make_flex1(d, &d.int(2)).unwrap();
        assert_eq!(
            e.expected,
            Case::Flex1 {
                lambda: d.int(2),
                delta: d.int(4)
            }
        );
    }

    #[test]
    fn every_shipped_entry_is_flexible() {
        for e in paper_catalog() {
            assert!(is_flexible(&e.algebra), "{e}");
            assert!(e.constraints.iter().all(|c| c.holds), "{e}");
        }
    }

    #[test]
    fn instantiation_rechecks_constraints() {
        let generic = make_flex1(
            Domain::RationalFunction,
            &Domain::RationalFunction.indeterminate().unwrap(),
        )
        .unwrap();
        let q = Domain::Rational;
        let e = generic.instantiate(&q.ratio(1, 3).unwrap()).unwrap();
        assert_eq!(
            e.algebra,
            make_flex1(q, &q.ratio(1, 3).unwrap()).unwrap().algebra
        );
        assert!(generic.instantiate(&q.ratio(1, 2).unwrap()).is_err());
    }
}
