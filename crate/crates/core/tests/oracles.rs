//! Independent oracle: axes over GF(p) decided by enumerating vectors with
//! plain modular arithmetic, compared against the exact core library.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use axial_core::algebra::Algebra;
use axial_core::axes::{detect_axis, find_axes_ff};
use axial_core::catalog::{make_bfamily_auto, make_flex1, make_flex2};
use axial_core::classify::search_dim2_ff;
use axial_core::idempotents::enumerate_idempotents_ff;
use axial_core::{Domain, Element};

type Vector = Vec<u64>;

struct ModAlgebra {
    p: u64,
    n: usize,
    // table[(i * n + j) * n + k]: coefficient of e_k in e_i e_j
    table: Vec<u64>,
}

impl ModAlgebra {
    fn from_core(a: &Algebra) -> Self {
        let n = a.dim();
        let mut table = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for c in a.product_of_basis(i, j).coords() {
                    table.push(c.as_residue().expect("finite field"));
                }
            }
        }
        ModAlgebra {
            p: a.domain().characteristic(),
            n,
            table,
        }
    }

    fn dim2(p: u64, t: [u64; 4]) -> Self {
        // a² = a, b² = b, ab = t0 a + t1 b, ba = t2 a + t3 b
        let table = vec![1, 0, t[0], t[1], t[2], t[3], 0, 1];
        ModAlgebra { p, n: 2, table }
    }

    fn mul(&self, x: &[u64], y: &[u64]) -> Vector {
        let mut out = vec![0; self.n];
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                let c = xi * yj % self.p;
                if c == 0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o = (*o + c * self.table[(i * self.n + j) * self.n + k]) % self.p;
                }
            }
        }
        out
    }

    fn vectors(&self) -> Vec<Vector> {
        let total = self.p.pow(self.n as u32);
        (0..total)
            .map(|mut i| {
                (0..self.n)
                    .map(|_| {
                        let d = i % self.p;
                        i /= self.p;
                        d
                    })
                    .collect()
            })
            .collect()
    }

    fn scale(&self, c: u64, v: &[u64]) -> Vector {
        v.iter().map(|x| c * x % self.p).collect()
    }

    fn add(&self, u: &[u64], v: &[u64]) -> Vector {
        u.iter().zip(v).map(|(x, y)| (x + y) % self.p).collect()
    }
}

#[derive(Debug, PartialEq, Eq)]
struct OracleAxis {
    left: Option<u64>,
    right: Option<u64>,
    jordan: bool,
}

/// Eigen-sets of one side: value → all vectors with `M v = μ v`.
fn eigensets(
    alg: &ModAlgebra,
    x: &[u64],
    left: bool,
    all: &[Vector],
) -> BTreeMap<u64, HashSet<Vector>> {
    let mut out: BTreeMap<u64, HashSet<Vector>> = BTreeMap::new();
    for v in all {
        let image = if left { alg.mul(x, v) } else { alg.mul(v, x) };
        for mu in 0..alg.p {
            if image == alg.scale(mu, v) {
                out.entry(mu).or_default().insert(v.clone());
            }
        }
    }
    out.retain(|_, s| s.len() > 1);
    out
}

struct Side {
    plus: HashSet<Vector>,
    minus: HashSet<Vector>,
    value: Option<u64>,
    sets: BTreeMap<u64, HashSet<Vector>>,
}

fn side(alg: &ModAlgebra, x: &[u64], left: bool, all: &[Vector]) -> Option<Side> {
    let sets = eigensets(alg, x, left, all);
    let size: u64 = sets.values().map(|s| s.len() as u64).product();
    if size != alg.p.pow(alg.n as u32) {
        return None; // not diagonalizable over GF(p)
    }
    let line: HashSet<Vector> = (0..alg.p).map(|c| alg.scale(c, x)).collect();
    if sets.get(&1) != Some(&line) {
        return None;
    }
    let others: Vec<u64> = sets.keys().copied().filter(|m| *m > 1).collect();
    if others.len() > 1 {
        return None;
    }
    let zero = sets
        .get(&0)
        .cloned()
        .unwrap_or_else(|| HashSet::from([vec![0; alg.n]]));
    let plus: HashSet<Vector> = zero
        .iter()
        .flat_map(|u| line.iter().map(move |v| (u, v)))
        .map(|(u, v)| alg.add(u, v))
        .collect();
    let value = others.first().copied();
    let minus = value.map_or_else(|| HashSet::from([vec![0; alg.n]]), |m| sets[&m].clone());
    Some(Side {
        plus,
        minus,
        value,
        sets,
    })
}

fn graded(alg: &ModAlgebra, s: &Side) -> bool {
    let parts = [(&s.plus, true), (&s.minus, false)];
    parts.iter().all(|(u, su)| {
        parts.iter().all(|(v, sv)| {
            let target = if su == sv { &s.plus } else { &s.minus };
            u.iter()
                .all(|x| v.iter().all(|y| target.contains(&alg.mul(x, y))))
        })
    })
}

fn oracle_axis(alg: &ModAlgebra, x: &[u64]) -> Option<OracleAxis> {
    if x.iter().all(|c| *c == 0) || alg.mul(x, x) != x {
        return None;
    }
    let all = alg.vectors();
    let l = side(alg, x, true, &all)?;
    let r = side(alg, x, false, &all)?;
    if !graded(alg, &l) || !graded(alg, &r) {
        return None;
    }
    let commute = all
        .iter()
        .all(|v| alg.mul(x, &alg.mul(v, x)) == alg.mul(&alg.mul(x, v), x));
    if !commute {
        return None;
    }
    // Sign classes: (left sign, right sign).
    let class = |el: bool, er: bool| -> HashSet<Vector> {
        let ls = if el { &l.plus } else { &l.minus };
        let rs = if er { &r.plus } else { &r.minus };
        ls.intersection(rs).cloned().collect()
    };
    let signs = [(true, true), (true, false), (false, true), (false, false)];
    let classes: Vec<((bool, bool), HashSet<Vector>)> =
        signs.iter().map(|&s| (s, class(s.0, s.1))).collect();
    let total: usize = classes.iter().map(|(_, c)| c.len()).product();
    if total as u64 != alg.p.pow(alg.n as u32) {
        return None;
    }
    for ((a1, b1), u) in &classes {
        for ((a2, b2), v) in &classes {
            let target = class(a1 == a2, b1 == b2);
            if !u
                .iter()
                .all(|x| v.iter().all(|y| target.contains(&alg.mul(x, y))))
            {
                return None;
            }
        }
    }
    let trivial = |m: &HashSet<Vector>| m.len() == 1;
    let meet = |lv: u64, rv: u64| -> HashSet<Vector> {
        match (l.sets.get(&lv), r.sets.get(&rv)) {
            (Some(a), Some(b)) => a.intersection(b).cloned().collect(),
            _ => HashSet::from([vec![0; alg.n]]),
        }
    };
    let jordan = match (l.value, r.value) {
        (Some(lv), Some(rv)) => trivial(&meet(0, rv)) && trivial(&meet(lv, 0)),
        _ => l.value.is_none() && r.value.is_none(),
    };
    Some(OracleAxis {
        left: l.value,
        right: r.value,
        jordan,
    })
}

fn to_vector(e: &Element) -> Vector {
    e.coords().iter().map(|c| c.as_residue().unwrap()).collect()
}

fn core_axis(a: &Algebra, x: &Element) -> Option<OracleAxis> {
    let r = detect_axis(a, x).ok()?;
    r.is_axis().then(|| OracleAxis {
        left: r.left_type.as_ref().map(|s| s.as_residue().unwrap()),
        right: r.right_type.as_ref().map(|s| s.as_residue().unwrap()),
        jordan: r.is_jordan_axis(),
    })
}

#[test]
fn dim2_search_agrees_with_brute_force() {
    for p in [3u64, 5, 7] {
        let mut oracle = BTreeSet::new();
        for i in 0..p.pow(4) {
            let t = [i % p, i / p % p, i / p / p % p, i / p / p / p];
            let alg = ModAlgebra::dim2(p, t);
            if oracle_axis(&alg, &[1, 0]).is_some() && oracle_axis(&alg, &[0, 1]).is_some() {
                oracle.insert(t.to_vec());
            }
        }
        let report = search_dim2_ff(p).unwrap();
        let core: BTreeSet<Vector> = report
            .survivors
            .iter()
            .map(|s| s.table.iter().map(|c| c.as_residue().unwrap()).collect())
            .collect();
        assert_eq!(core, oracle, "GF({p})");
    }
}

#[test]
fn flex2_census_and_axes_agree() {
    for p in [5u64, 7] {
        let d = Domain::prime_field(p).unwrap();
        for l in 2..p {
            let Ok(e) = make_flex2(d, &d.int(l as i64)) else {
                continue;
            };
            let alg = ModAlgebra::from_core(&e.algebra);
            let idem: BTreeSet<Vector> = alg
                .vectors()
                .into_iter()
                .filter(|v| alg.mul(v, v) == *v)
                .collect();
            assert_eq!(idem.len() as u64, 2 * p + 2);
            let core_idem: BTreeSet<Vector> = enumerate_idempotents_ff(&e.algebra)
                .unwrap()
                .elements
                .iter()
                .map(to_vector)
                .collect();
            assert_eq!(core_idem, idem);
            let oracle_axes: BTreeMap<Vector, OracleAxis> = idem
                .iter()
                .filter_map(|v| oracle_axis(&alg, v).map(|o| (v.clone(), o)))
                .collect();
            let core_axes: BTreeMap<Vector, OracleAxis> = find_axes_ff(&e.algebra)
                .unwrap()
                .iter()
                .map(|(y, r)| {
                    let o = OracleAxis {
                        left: r.left_type.as_ref().map(|s| s.as_residue().unwrap()),
                        right: r.right_type.as_ref().map(|s| s.as_residue().unwrap()),
                        jordan: r.is_jordan_axis(),
                    };
                    (to_vector(y), o)
                })
                .collect();
            assert_eq!(core_axes, oracle_axes, "flex(2), λ = {l} over GF({p})");
            assert_eq!(oracle_axes.len() as u64, 2 * p);
        }
    }
}

#[test]
fn other_families_agree() {
    let d = Domain::prime_field(7).unwrap();
    let mut entries = vec![make_flex1(d, &d.int(3)).unwrap()];
    for (l, lp) in [(2, 2), (3, 5), (4, 4), (6, 6)] {
        entries.push(make_bfamily_auto(d, &d.int(l), &d.int(lp)).unwrap());
    }
    for e in entries {
        let alg = ModAlgebra::from_core(&e.algebra);
        for v in alg.vectors() {
            if alg.mul(&v, &v) != v || v.iter().all(|c| *c == 0) {
                continue;
            }
            let x = Element::new(v.iter().map(|c| d.int(*c as i64)).collect()).unwrap();
            assert_eq!(
                core_axis(&e.algebra, &x),
                oracle_axis(&alg, &v),
                "{e}, element {x}"
            );
        }
    }
}

#[test]
fn single_constant_mutants_agree() {
    let d = Domain::prime_field(5).unwrap();
    let e = make_flex2(d, &d.int(2)).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for value in 0..5 {
                    let m = e.algebra.with_entry(i, j, k, d.int(value)).unwrap();
                    let alg = ModAlgebra::from_core(&m);
                    for g in &e.generators {
                        assert_eq!(
                            core_axis(&m, g),
                            oracle_axis(&alg, &to_vector(g)),
                            "entry ({i},{j},{k}) = {value}, generator {g}"
                        );
                    }
                }
            }
        }
    }
}
