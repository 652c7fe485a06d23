//! Brute-force oracle for the dimension-2 classification over GF(p).

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{classify_dim2, Case};
use crate::algebra::is_flexible;
use crate::axes::detect_axis;
use crate::catalog::dim2_algebra;
use crate::error::{Error, Result};
use crate::idempotents::DEFAULT_ENUM_CAP;
use crate::scalars::{Domain, Scalar};

/// `[p₁, q₁, p₂, q₂]` for `ab = p₁a + q₁b, ba = p₂a + q₂b`.
pub type Dim2Table = [Scalar; 4];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Survivor {
    pub table: Dim2Table,
    pub case: Case,
    pub flexible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub p: u64,
    pub tables: u64,
    /// Tables in which `a` and `b` are both axes, sorted by table.
    pub survivors: Vec<Survivor>,
    /// The case list evaluated over GF(p), sorted by table.
    pub expected: Vec<(Dim2Table, Case)>,
    pub missing: Vec<Dim2Table>,
    pub unexpected: Vec<Dim2Table>,
    /// Survivors whose classifier label differs from the case list.
    pub mislabeled: Vec<Dim2Table>,
    pub warnings: Vec<String>,
}

impl SearchReport {
    /// Survivors equal the case list, carry the right labels and are flexible.
    pub fn matches(&self) -> bool {
        self.missing.is_empty()
            && self.unexpected.is_empty()
            && self.mislabeled.is_empty()
            && self.survivors.iter().all(|s| s.flexible)
    }
}

/// The tables predicted by the classification, with their cases.
pub fn expected_dim2_cases(domain: Domain) -> BTreeMap<Dim2Table, Case> {
    let zero = domain.zero();
    let one = domain.one();
    let half = domain.ratio(1, 2).expect("char ≠ 2");
    let mut out = BTreeMap::new();
    out.insert(
        [zero.clone(), zero.clone(), zero.clone(), zero.clone()],
        Case::TwoB,
    );
    for l in [domain.int(-1), half.clone()] {
        out.insert(
            [l.clone(), l.clone(), l.clone(), l.clone()],
            Case::HssDim2 { lambda: l },
        );
    }
    for l in domain.elements().expect("finite field") {
        if l == zero || l == one || l == half {
            continue;
        }
        let d = &one - &l;
        out.insert(
            [d.clone(), l.clone(), l.clone(), d.clone()],
            Case::Flex1 {
                lambda: l,
                delta: d,
            },
        );
    }
    out
}

pub fn search_dim2_ff(p: u64) -> Result<SearchReport> {
    search_dim2_ff_with_cap(p, DEFAULT_ENUM_CAP)
}

/// Enumerates all `p⁴` tables with `a² = a, b² = b` and keeps those where
/// `a` and `b` are both axes, with types read off the spectra.
pub fn search_dim2_ff_with_cap(p: u64, cap: u128) -> Result<SearchReport> {
    let domain = Domain::prime_field(p)?;
    let size = (p as u128).pow(4);
    if size > cap {
        return Err(Error::EnumerationTooLarge { size, cap });
    }
    let mut warnings = Vec::new();
    if p == 3 {
        warnings.push(
            "characteristic 3: -1 = 1/2, the two commutative cases collapse into one table"
                .to_string(),
        );
    }
    let residue = |v: u64| domain.residue(v).expect("finite field");
    let mut survivors: Vec<Survivor> = (0..size as u64)
        .into_par_iter()
        .map(|i| {
            let table: Dim2Table =
                [i % p, (i / p) % p, (i / p / p) % p, i / p / p / p].map(residue);
            let alg = dim2_algebra(domain, [&table[0], &table[1]], [&table[2], &table[3]])?;
            let (a, b) = (alg.basis_element(0), alg.basis_element(1));
            let is_axis = |x| detect_axis(&alg, x).map(|r| r.is_axis()).unwrap_or(false);
            if !(is_axis(&a) && is_axis(&b)) {
                return Ok(None);
            }
            let case = classify_dim2(&alg, &a, &b)?.case;
            Ok(Some(Survivor {
                flexible: is_flexible(&alg),
                table,
                case,
            }))
        })
        .filter_map(|r: Result<Option<Survivor>>| r.transpose())
        .collect::<Result<_>>()?;
    survivors.sort_by(|x, y| x.table.cmp(&y.table));

    let expected = expected_dim2_cases(domain);
    let found: BTreeMap<&Dim2Table, &Case> =
        survivors.iter().map(|s| (&s.table, &s.case)).collect();
    let missing = expected
        .keys()
        .filter(|t| !found.contains_key(t))
        .cloned()
        .collect();
    let unexpected = found
        .keys()
        .filter(|t| !expected.contains_key(**t))
        .map(|t| (*t).clone())
        .collect();
    let mislabeled = survivors
        .iter()
        .filter(|s| expected.get(&s.table).is_some_and(|c| *c != s.case))
        .map(|s| s.table.clone())
        .collect();
    Ok(SearchReport {
        p,
        tables: size as u64,
        survivors,
        expected: expected.into_iter().collect(),
        missing,
        unexpected,
        mislabeled,
        warnings,
    })
}
