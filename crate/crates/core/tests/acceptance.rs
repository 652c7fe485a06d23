//! Acceptance gate: one pass/fail line per criterion. Runs as a plain
//! binary so the lines are always printed.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use axial_core::algebra::{is_flexible, Algebra};
use axial_core::axes::{check_axis, detect_axis, find_axes_ff};
use axial_core::catalog::{
    dim2_algebra, make_2b, make_bfamily, make_bfamily_auto, make_flex1, make_flex2, make_hss_dim2,
    CatalogEntry,
};
use axial_core::classify::{
    classify_2gen, classify_dim2, search_dim2_ff, sigma, verify_paper_suite, verify_subject, Case,
    Subject,
};
use axial_core::idempotents::enumerate_idempotents_ff;
use axial_core::{Domain, Element, Scalar};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    check(t < limit, format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn search_gf5() -> Verdict {
    let start = Instant::now();
    let r = search_dim2_ff(5).map_err(|e| e.to_string())?;
    check(r.tables == 625, format!("{} tables enumerated", r.tables))?;
    check(
        r.survivors.len() == 5,
        format!("{} survivors", r.survivors.len()),
    )?;
    check(
        r.matches(),
        format!("missing {:?}, unexpected {:?}", r.missing, r.unexpected),
    )?;
    check(
        r.survivors.iter().all(|s| s.flexible),
        "a survivor is not flexible",
    )?;
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!(
        "625 tables, 5 flexible survivors matching the case list, {t:.2?}"
    ))
}

fn generic_flex() -> Verdict {
    let start = Instant::now();
    let d = Domain::RationalFunction;
    let t = d.indeterminate().unwrap();
    let delta = &d.one() - &t;
    for entry in [make_flex1(d, &t), make_flex2(d, &t)] {
        let entry = entry.map_err(|e| e.to_string())?;
        let alg = &entry.algebra;
        for (g, (l, r)) in entry.generators.iter().zip(&entry.axis_types) {
            let (l, r) = (l.clone().unwrap(), r.clone().unwrap());
            let rep = check_axis(alg, g, &l, &r).map_err(|e| e.to_string())?;
            check(
                rep.is_jordan_axis(),
                format!("{entry}: {g} fails {:?}", rep.failures()),
            )?;
        }
        check(is_flexible(alg), format!("{entry} is not flexible"))?;
        let [a, b] = &entry.generators;
        let s = sigma(alg, a, b, &t, &delta)
            .map_err(|e| e.to_string())?
            .sigma;
        let expected = match entry.expected {
            Case::Flex2 { .. } => {
                let x = alg.basis_element(2);
                x.scale(&t).sub(&a.scale(&delta)).sub(&b.scale(&t))
            }
            _ => alg.zero(),
        };
        check(
            s == expected,
            format!("{entry}: σ = {s}, expected {expected}"),
        )?;
    }
    let time = within(start, Duration::from_secs(5))?;
    Ok(format!(
        "flex(1), flex(2) over Q(t): axioms, Jordan type, σ, flexibility, {time:.2?}"
    ))
}

fn census() -> Verdict {
    let mut counts = Vec::new();
    for p in [5u64, 7, 11] {
        let d = Domain::prime_field(p).map_err(|e| e.to_string())?;
        let e = make_flex2(d, &d.int(2)).map_err(|e| e.to_string())?;
        let alg = &e.algebra;
        let list = enumerate_idempotents_ff(alg).map_err(|e| e.to_string())?;
        check(
            list.len() as u64 == 2 * p + 2,
            format!("GF({p}): {} idempotents", list.len()),
        )?;
        let (a, b, x) = (
            alg.basis_element(0),
            alg.basis_element(1),
            alg.basis_element(2),
        );
        let expected: BTreeSet<Element> = d
            .elements()
            .unwrap()
            .flat_map(|g| [a.add(&x.scale(&g)), b.add(&x.scale(&g))])
            .collect();
        let axes: BTreeSet<Element> = find_axes_ff(alg)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|(y, _)| y)
            .collect();
        check(axes == expected, format!("GF({p}): axes are {axes:?}"))?;
        let y = a.add(&b).sub(&x);
        let rep = detect_axis(alg, &y).map_err(|e| e.to_string())?;
        check(
            !rep.is_abs_left_primitive(),
            format!("GF({p}): a+b-x is absolutely primitive"),
        )?;
        check(alg.mul(&y, &x) == x, format!("GF({p}): (a+b-x)x != x"))?;
        counts.push(format!("{}", list.len()));
    }
    Ok(format!(
        "flex(2) over GF(5,7,11): {} idempotents; axes a+γx, b+γx; a+b-x not primitive",
        counts.join("/")
    ))
}

fn suite() -> Verdict {
    let start = Instant::now();
    let r = verify_paper_suite();
    let failed: Vec<String> = r
        .failures()
        .map(|f| format!("{} on {}", f.statement, f.subject))
        .collect();
    check(failed.is_empty(), failed.join("; "))?;
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{} statement checks over {} statements, {t:.2?}",
        r.results.len(),
        r.summary().len()
    ))
}

fn mutants() -> Verdict {
    let d = Domain::Rational;
    let e = make_flex2(d, &d.ratio(1, 3).unwrap()).map_err(|e| e.to_string())?;
    let mut algebras: Vec<(String, Algebra)> = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let old = e.algebra.product_of_basis(i, j).coords()[k].clone();
                let alg = e
                    .algebra
                    .with_entry(i, j, k, &old + &d.one())
                    .map_err(|e| e.to_string())?;
                algebras.push((format!("e{i}e{j}[{k}]+1"), alg));
            }
        }
    }
    // ba = λx instead of δx.
    algebras.push((
        "ba=λx".into(),
        e.algebra
            .with_entry(1, 0, 2, d.ratio(1, 3).unwrap())
            .unwrap(),
    ));
    let mut survivors = Vec::new();
    for (label, algebra) in &algebras {
        let r = verify_subject(&Subject {
            label: label.clone(),
            algebra: algebra.clone(),
            generators: e.generators.clone(),
            expected: Some(e.expected.clone()),
        });
        if r.all_pass() {
            survivors.push(label.clone());
        }
    }
    check(
        survivors.is_empty(),
        format!("mutants pass the suite: {survivors:?}"),
    )?;
    Ok(format!(
        "all {} single-constant mutants of flex(2) fail",
        algebras.len()
    ))
}

fn random_param(rng: &mut StdRng, d: Domain, excluded: &[Scalar]) -> Scalar {
    loop {
        let x = match d {
            Domain::Rational => d
                .ratio(rng.gen_range(-30..=30), rng.gen_range(1..=30))
                .unwrap(),
            _ => d.int(rng.gen_range(0..d.characteristic() as i64)),
        };
        if !excluded.contains(&x) {
            return x;
        }
    }
}

fn round_trip() -> Verdict {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut checked = 0;
    for d in [Domain::Rational, Domain::prime_field(5).unwrap()] {
        let (zero, one, half) = (d.zero(), d.one(), d.ratio(1, 2).unwrap());
        let generic = [zero.clone(), one.clone(), half.clone()];
        let edges = [zero.clone(), one.clone()];
        for _ in 0..20 {
            let l = random_param(&mut rng, d, &generic);
            let lp = random_param(&mut rng, d, &edges);
            let hss = if rng.gen_bool(0.5) {
                d.int(-1)
            } else {
                half.clone()
            };
            let branch = rng.gen_range(0..3);
            let bfam = match branch {
                0 => make_bfamily_auto(d, &lp, &lp),
                1 => make_bfamily_auto(d, &lp, &(&one - &lp)),
                _ => make_bfamily(d, &half, &half, &random_param(&mut rng, d, &[])),
            };
            let entries: Vec<CatalogEntry> = vec![
                make_2b(d),
                make_hss_dim2(d, &hss).map_err(|e| e.to_string())?,
                make_flex1(d, &l).map_err(|e| e.to_string())?,
                make_flex2(d, &l).map_err(|e| e.to_string())?,
                bfam.map_err(|e| format!("B-family branch {branch}, λ = {lp}: {e}"))?,
            ];
            for e in entries {
                let [a, b] = &e.generators;
                let got = classify_2gen(&e.algebra, a, b)
                    .map_err(|err| format!("{e}: {err}"))?
                    .case;
                check(got == e.expected, format!("{e}: classified as {got}"))?;
                checked += 1;
            }
        }
        // λ = δ = 1/2 in the FLEX1 shape is the HSS table.
        let alg = dim2_algebra(d, [&half, &half], [&half, &half]).map_err(|e| e.to_string())?;
        let got = classify_dim2(&alg, &alg.basis_element(0), &alg.basis_element(1))
            .map_err(|e| e.to_string())?
            .case;
        check(
            got == Case::HssDim2 {
                lambda: half.clone(),
            },
            format!("1/2 collision over {d} gave {got}"),
        )?;
    }
    Ok(format!("{checked} random instances over Q and GF(5) classify to their family; 1/2 collision gives HSS"))
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("dim-2 search over GF(5)", search_gf5),
        ("generic-parameter flex families", generic_flex),
        ("idempotent census", census),
        ("statement replay suite", suite),
        ("negative controls", mutants),
        ("classifier round-trip", round_trip),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
