//! Replay of the structural statements on catalog algebras.
//!
//! Each statement is checked exactly on a subject (an algebra with two
//! designated generators) and recorded as a pass/fail line. Statements whose
//! hypotheses fail are recorded as vacuous passes.

use rayon::prelude::*;
use serde::Serialize;

use super::{
    axis_info, classify_2gen, classify_dim2, search_dim2_ff, zero_part_closed, AxisInfo, Case,
};
use crate::algebra::{center, flexibility_violation, is_commutative, subalgebra_closure, Algebra};
use crate::axes::{detect_axis, find_axes_ff, miyamoto, AxisType};
use crate::catalog::{make_bfamily, paper_catalog, CatalogEntry};
use crate::classify::sigma::{a_prime_subalgebra, check_seress, unit_and_coaxis};
use crate::linalg::Element;
use crate::scalars::{Domain, Scalar};

#[derive(Clone, Debug)]
pub struct Subject {
    pub label: String,
    pub algebra: Algebra,
    pub generators: [Element; 2],
    /// When set, classification must return exactly this case.
    pub expected: Option<Case>,
}

impl From<&CatalogEntry> for Subject {
    fn from(e: &CatalogEntry) -> Self {
        Subject {
            label: e.to_string(),
            algebra: e.algebra.clone(),
            generators: e.generators.clone(),
            expected: Some(e.expected.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatementResult {
    pub statement: String,
    pub subject: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub results: Vec<StatementResult>,
    pub warnings: Vec<String>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &StatementResult> {
        self.results.iter().filter(|r| !r.pass)
    }

    pub fn is_empty(&self) -> bool {
        self.results.is_empty()
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.results.extend(other.results);
        for w in other.warnings {
            if !self.warnings.contains(&w) {
                self.warnings.push(w);
            }
        }
    }

    /// `(statement, passed, total)` in order of first appearance.
    pub fn summary(&self) -> Vec<(String, usize, usize)> {
        let mut out: Vec<(String, usize, usize)> = Vec::new();
        for r in &self.results {
            let idx = match out.iter().position(|(s, _, _)| *s == r.statement) {
                Some(i) => i,
                None => {
                    out.push((r.statement.clone(), 0, 0));
                    out.len() - 1
                }
            };
            out[idx].2 += 1;
            if r.pass {
                out[idx].1 += 1;
            }
        }
        out
    }

    /// Whether some result for `statement` exists and all of them pass.
    pub fn statement_passes(&self, statement: &str) -> bool {
        let mut it = self
            .results
            .iter()
            .filter(|r| r.statement == statement)
            .peekable();
        it.peek().is_some() && it.all(|r| r.pass)
    }
}

struct Recorder {
    subject: String,
    out: SuiteReport,
}

impl Recorder {
    fn new(subject: impl Into<String>) -> Self {
        Recorder {
            subject: subject.into(),
            out: SuiteReport::default(),
        }
    }

    fn rec(&mut self, statement: &str, pass: bool, detail: impl Into<String>) {
        self.out.results.push(StatementResult {
            statement: statement.into(),
            subject: self.subject.clone(),
            pass,
            detail: detail.into(),
        });
    }

    fn check(&mut self, statement: &str, pass: bool) {
        self.rec(statement, pass, "");
    }

    fn vacuous(&mut self, statement: &str, why: &str) {
        self.rec(statement, true, format!("vacuous: {why}"));
    }
}

fn placeholder(t: &Option<Scalar>, domain: Domain) -> Scalar {
    t.clone().unwrap_or_else(|| domain.int(-1))
}

/// Statements about a single Jordan axis `x`.
fn axis_statements(r: &mut Recorder, alg: &Algebra, x: &Element, info: &AxisInfo) {
    let d = alg.domain();
    let one = d.one();
    let lam = placeholder(&info.lambda, d);
    let line = alg.span(std::slice::from_ref(x));
    let basis = alg.basis();
    let splits: Vec<_> = basis.iter().map(|y| info.left.split(y)).collect();

    let plus: Vec<Element> = std::iter::once(x.clone())
        .chain(info.left.zero_space().basis().iter().cloned())
        .collect();
    r.check(
        "axis-absorbs-plus-part",
        plus.iter().all(|v| line.contains(&alg.mul(x, v))),
    );
    r.check(
        "component-reconstruction",
        basis.iter().zip(&splits).all(|(y, s)| {
            let whole = s.reconstruct(x) == *y;
            let refined = s.refinement.as_ref().is_none_or(|f| {
                x.scale(&s.alpha)
                    .add(&f.y00)
                    .add(&f.y0d)
                    .add(&f.yl0)
                    .add(&f.yld)
                    == *y
            });
            whole && refined
        }),
    );
    r.check(
        "left-action-split",
        basis
            .iter()
            .zip(&splits)
            .all(|(y, s)| alg.mul(x, y) == x.scale(&s.alpha).add(&s.ylambda.scale(&lam))),
    );
    r.check(
        "double-left-action",
        basis.iter().zip(&splits).all(|(y, s)| {
            let xy = alg.mul(x, y);
            alg.mul(x, &xy) == x.scale(&(&s.alpha * &(&one - &lam))).add(&xy.scale(&lam))
        }),
    );
    r.check(
        "right-product-in-span",
        basis.iter().all(|y| {
            alg.span(&[x.clone(), alg.mul(x, y)])
                .contains(&alg.mul(y, x))
        }),
    );
    r.rec(
        "center-iff-equal-types",
        center(alg).contains(x) == (info.lambda == info.delta),
        format!(
            "types ({}, {})",
            crate::axes::type_label(&info.lambda),
            crate::axes::type_label(&info.delta)
        ),
    );
    match check_seress(alg, x) {
        Ok(s) => {
            r.check("seress-left", s.left);
            r.check("seress-right", s.right);
        }
        Err(e) => {
            r.rec("seress-left", false, e.to_string());
            r.rec("seress-right", false, e.to_string());
        }
    }
    r.check("zero-part-closed", zero_part_closed(alg, info));
    match miyamoto(alg, x) {
        Ok(_) => r.check("miyamoto-automorphism", true),
        Err(e) => r.rec("miyamoto-automorphism", false, e.to_string()),
    }
}

/// Statements about an ordered pair of Jordan axes.
fn pair_statements(r: &mut Recorder, alg: &Algebra, x: &Element, ix: &AxisInfo, y: &Element) {
    let line = alg.span(std::slice::from_ref(x));
    let xy = alg.mul(x, y);
    let yx = alg.mul(y, x);
    r.check("product-off-axis-line", xy.is_zero() || !line.contains(&xy));
    r.check(
        "reverse-product-off-axis-line",
        yx.is_zero() || !line.contains(&yx),
    );
    let sy = ix.left.split(y);
    r.check(
        "product-zero-or-lambda-part",
        xy.is_zero() || !sy.ylambda.is_zero(),
    );
    if ix.lambda != ix.delta {
        r.check("mixed-square-zero", alg.square(&sy.ylambda).is_zero());
    } else {
        r.vacuous("mixed-square-zero", "λ = δ");
    }
}

/// Statements about the algebra generated by two Jordan axes.
fn structure_statements(
    r: &mut Recorder,
    alg: &Algebra,
    a: &Element,
    ia: &AxisInfo,
    b: &Element,
    ib: &AxisInfo,
) -> Vec<String> {
    let mut warnings = Vec::new();
    let d = alg.domain();
    let one = d.one();
    let l = placeholder(&ia.lambda, d);
    let (lp, dp) = (placeholder(&ib.lambda, d), placeholder(&ib.delta, d));
    let ab = alg.mul(a, b);
    let ba = alg.mul(b, a);
    let sb = ia.left.split(b);
    let sa = ib.left.split(a);

    let s_right = ab.sub(&a.scale(&dp)).sub(&b.scale(&l));
    let via_a = a
        .scale(&(&(&sb.alpha * &(&one - &l)) - &dp))
        .sub(&sb.y0.scale(&l));
    let via_b = b
        .scale(&(&(&sa.alpha * &(&one - &dp)) - &l))
        .sub(&sa.y0.scale(&dp));
    r.check("sigma-expansion", s_right == via_a && s_right == via_b);

    if sb.ylambda.is_zero() {
        r.check(
            "orthogonal-when-no-mixed-part",
            ab.is_zero() && ba.is_zero() && alg.dim() == 2,
        );
    } else {
        r.vacuous("orthogonal-when-no-mixed-part", "b_{λ,δ} ≠ 0");
    }
    if sb.y0.is_zero() {
        r.check("dim2-when-no-zero-part", alg.dim() == 2);
    } else {
        r.vacuous("dim2-when-no-zero-part", "b_0 ≠ 0");
    }
    let s = ab.sub(&a.scale(&lp)).sub(&b.scale(&l));
    r.check(
        "spanned-by-a-b-ab",
        alg.span(&[a.clone(), b.clone(), ab.clone()]).is_full()
            && alg.span(&[a.clone(), b.clone(), s.clone()]).is_full(),
    );
    let commutative = is_commutative(alg);
    let equal_types = ia.lambda == ia.delta && ib.lambda == ib.delta;
    let unequal_types = ia.lambda != ia.delta && ib.lambda != ib.delta;
    r.rec(
        "commutative-iff-equal-types",
        if commutative {
            equal_types
        } else {
            unequal_types
        },
        format!("commutative = {commutative}"),
    );

    if alg.dim() != 3 || !commutative {
        return warnings;
    }
    let gamma = &(&sb.alpha * &(&one - &l)) - &lp;
    let gamma_a = &(&sa.alpha * &(&one - &lp)) - &l;
    r.check(
        "sigma-action",
        alg.mul(a, &s) == a.scale(&gamma) && alg.mul(b, &s) == b.scale(&gamma_a),
    );
    let zero_a = ia.left.zero_space();
    let zero_b = ib.left.zero_space();
    r.check(
        "zero-squares-cross",
        zero_a.contains(&alg.square(&sb.y0)) && zero_b.contains(&alg.square(&sa.y0)),
    );
    r.rec(
        "sigma-square",
        gamma == gamma_a && alg.square(&s) == s.scale(&gamma),
        format!("γ = {gamma}"),
    );
    if l == lp {
        r.check("equal-types-equal-alphas", sa.alpha == sb.alpha);
    } else {
        r.vacuous("equal-types-equal-alphas", "λ ≠ λ′");
    }
    let table_ok = ab == ba
        && ab == a.scale(&lp).add(&b.scale(&l)).add(&s)
        && alg.mul(&s, a) == a.scale(&gamma)
        && alg.mul(&s, b) == b.scale(&gamma)
        && alg.span(&[a.clone(), b.clone(), s.clone()]).is_full();
    r.check("commutative-table", table_ok);
    r.check("gamma-zero-equal-types", !gamma.is_zero() || l == lp);

    let mut candidates = vec![a.clone(), b.clone()];
    if let Ok(t) = miyamoto(alg, b) {
        candidates.push(t.apply(a));
    }
    if let Ok(t) = miyamoto(alg, a) {
        candidates.push(t.apply(b));
    }
    if gamma.is_zero() {
        r.vacuous("unit", "γ = 0");
        r.vacuous("coaxis", "γ = 0");
        r.vacuous("a-prime-subalgebra", "γ = 0");
    } else {
        match unit_and_coaxis(alg, a, b) {
            Ok(u) => {
                r.check("unit", u.unit_ok && zero_a.dim() == 1 && zero_b.dim() == 1);
                let mu = &one - &l;
                let co_ok = u.coaxis_report.as_ref().is_some_and(|c| {
                    c.is_jordan_axis()
                        && c.left_type.as_ref().is_none_or(|t| *t == mu)
                        && c.right_type.as_ref().is_none_or(|t| *t == mu)
                });
                r.rec("coaxis", co_ok, format!("1 - a of type ({mu}, {mu})"));
                if let Some(unit) = &u.unit {
                    let co = unit.sub(a);
                    candidates.push(co.clone());
                    candidates.push(unit.sub(b));
                    let half = d.ratio(1, 2).expect("char ≠ 2");
                    if d.characteristic() == 3 {
                        warnings.push(
                            "characteristic 3: -1 = 1/2, the subalgebra A'(1-a, b) statement is replayed as a variant".into(),
                        );
                    }
                    match (
                        a_prime_subalgebra(alg, a, b),
                        a_prime_subalgebra(alg, &co, b),
                    ) {
                        (Ok(ap), Ok(ap_co)) => r.rec(
                            "a-prime-subalgebra",
                            ap.dim() != 2 || l == half || ap_co.is_full(),
                            format!(
                                "dim A'(a,b) = {}, dim A'(1-a,b) = {}",
                                ap.dim(),
                                ap_co.dim()
                            ),
                        ),
                        (Err(e), _) | (_, Err(e)) => {
                            r.rec("a-prime-subalgebra", false, e.to_string())
                        }
                    }
                }
            }
            Err(e) => {
                r.rec("unit", false, e.to_string());
                r.rec("coaxis", false, e.to_string());
            }
        }
    }

    let typed: Vec<(Element, (AxisType, AxisType))> = candidates
        .into_iter()
        .filter_map(|c| {
            let rep = detect_axis(alg, &c).ok()?;
            rep.is_jordan_axis()
                .then_some((c, (rep.left_type, rep.right_type)))
        })
        .collect();
    let found = typed.iter().enumerate().any(|(i, (c, tc))| {
        typed[i + 1..].iter().any(|(e, te)| {
            tc == te
                && subalgebra_closure(alg, &[c.clone(), e.clone()])
                    .map(|s| s.is_full())
                    .unwrap_or(false)
        })
    });
    r.check("same-type-generation", found);
    warnings
}

/// Every statement applicable to one subject.
pub fn verify_subject(subject: &Subject) -> SuiteReport {
    let mut r = Recorder::new(subject.label.clone());
    let alg = &subject.algebra;
    let [a, b] = &subject.generators;
    r.rec(
        "flexible",
        flexibility_violation(alg).is_none(),
        flexibility_violation(alg)
            .map_or(String::new(), |t| format!("fails on basis triple {t:?}")),
    );

    let mut infos = Vec::new();
    for (name, x) in [("a", a), ("b", b)] {
        match axis_info(alg, x, true) {
            Ok(Ok(info)) => {
                r.rec("generator-is-jordan-axis", true, name);
                infos.push(Some(info));
            }
            Ok(Err(m)) => {
                r.rec("generator-is-jordan-axis", false, format!("{name}: {m}"));
                infos.push(None);
            }
            Err(e) => {
                r.rec("generator-is-jordan-axis", false, format!("{name}: {e}"));
                infos.push(None);
            }
        }
    }
    for (x, info) in [a, b].into_iter().zip(&infos) {
        if let Some(info) = info {
            axis_statements(&mut r, alg, x, info);
        }
    }
    if let (Some(ia), Some(ib)) = (&infos[0], &infos[1]) {
        pair_statements(&mut r, alg, a, ia, b);
        pair_statements(&mut r, alg, b, ib, a);
        let w = structure_statements(&mut r, alg, a, ia, b, ib);
        r.out.warnings.extend(w);
    }

    let verdict = |case: &Case| match &subject.expected {
        Some(e) => e == case,
        None => case.is_classified(),
    };
    match classify_2gen(alg, a, b) {
        Ok(res) => {
            let detail = match res.first_failure() {
                Some(w) => format!("{} (first failed witness: {})", res.case, w.name),
                None => res.case.to_string(),
            };
            r.rec("two-generated-classification", verdict(&res.case), detail);
            if alg.dim() == 3 && !res.commutative {
                r.check(
                    "noncommutative-dim3-structure",
                    matches!(res.case, Case::Flex2 { .. }),
                );
            }
            r.out.warnings.extend(res.warnings);
        }
        Err(e) => r.rec("two-generated-classification", false, e.to_string()),
    }
    if alg.dim() == 2 {
        match classify_dim2(alg, a, b) {
            Ok(res) => r.rec(
                "dim2-classification",
                verdict(&res.case),
                res.case.to_string(),
            ),
            Err(e) => r.rec("dim2-classification", false, e.to_string()),
        }
    }

    if alg.domain().order().is_some() {
        match find_axes_ff(alg) {
            Ok(found) => {
                for (c, report) in found {
                    if !report.is_jordan_axis() {
                        continue;
                    }
                    let mut sub = Recorder::new(format!("{} / axis {c}", subject.label));
                    if let Ok(Ok(info)) = axis_info(alg, &c, true) {
                        axis_statements(&mut sub, alg, &c, &info);
                    }
                    r.out.merge(sub.out);
                }
            }
            Err(e) => r.rec("found-axes", false, e.to_string()),
        }
    }
    let mut out = r.out;
    out.warnings.dedup();
    out
}

pub fn verify_entry(entry: &CatalogEntry) -> SuiteReport {
    verify_subject(&Subject::from(entry))
}

/// Per-subject replay; the empty list gives the empty report.
pub fn verify_catalog(subjects: &[Subject]) -> SuiteReport {
    let parts: Vec<SuiteReport> = subjects.par_iter().map(verify_subject).collect();
    let mut out = SuiteReport::default();
    for p in parts {
        out.merge(p);
    }
    out
}

/// The shipped catalog, a characteristic-3 variant and the GF(5) search.
pub fn verify_paper_suite() -> SuiteReport {
    let mut subjects: Vec<Subject> = paper_catalog().iter().map(Subject::from).collect();
    let gf3 = Domain::prime_field(3).expect("3 is an odd prime");
    if let Ok(e) = make_bfamily(gf3, &gf3.int(2), &gf3.int(2), &gf3.one()) {
        subjects.push(Subject::from(&e));
    }
    let mut out = verify_catalog(&subjects);
    let mut r = Recorder::new("GF(5)");
    match search_dim2_ff(5) {
        Ok(s) => r.rec(
            "dim2-search-oracle",
            s.matches() && s.survivors.len() == 5,
            format!("survivors: {} of {} tables", s.survivors.len(), s.tables),
        ),
        Err(e) => r.rec("dim2-search-oracle", false, e.to_string()),
    }
    out.merge(r.out);
    out
}
