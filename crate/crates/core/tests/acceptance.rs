//! Acceptance run: one `criterion N: PASS|FAIL` line per criterion with the
//! elapsed time against its limit. Exits non-zero when any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use common::*;
use quandle_core::catalog::parse_catalog;
use quandle_core::construct::{affine_quandle, conj_quandle, coset_quandle, pe, pq};
use quandle_core::enumerate::{check_inner_conditions, enumerate_degree, xi_set};
use quandle_core::library::{PRIMITIVE, QUASIPRIMITIVE, SPOT};
use quandle_core::{
    brute_force_enumerate, CatalogRecord, Envelope, Limits, Matrix, Mode, Options, PermGroup,
    Quandle,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog(text: &str) -> Vec<CatalogRecord> {
    parse_catalog(text).unwrap()
}

fn merged() -> Vec<CatalogRecord> {
    let mut all = catalog(PRIMITIVE);
    all.extend(catalog(QUASIPRIMITIVE));
    all
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn criterion_1(seen: &mut Vec<Quandle>) -> Outcome {
    let q = example4();
    let inn = q.inner_group();
    ensure(inn.order_u64() == Some(12), || {
        format!("|Inn| = {}", inn.order())
    })?;
    let named = ok(PermGroup::new(
        ["(2,3,4)", "(1,4,3)", "(1,2,4)", "(1,3,2)"]
            .map(|c| p(c, 4))
            .to_vec(),
    ))?;
    ensure(
        inn.is_subgroup_of(&named) && named.is_subgroup_of(&inn),
        || "Inn differs from the named group".into(),
    )?;
    let dis = q.displacement_group();
    let mut dis_elements: Vec<String> = ok(dis.elements())?.iter().map(|e| e.to_string()).collect();
    dis_elements.sort();
    let mut expected: Vec<String> = ["()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]
        .map(String::from)
        .to_vec();
    expected.sort();
    ensure(dis_elements == expected, || {
        format!("Dis = {dis_elements:?}")
    })?;
    ensure(q.is_primitive() && q.is_simple(), || {
        "not primitive and simple".into()
    })?;
    let blocks = ok(dis.minimal_block_system(0, 2))?;
    let mut classes: Vec<Vec<usize>> = blocks
        .classes()
        .iter()
        .map(|c| c.iter().map(|x| x + 1).collect())
        .collect();
    classes.sort();
    ensure(classes == vec![vec![1, 3], vec![2, 4]], || {
        format!("blocks {classes:?}")
    })?;
    seen.push(q);
    Ok("|Inn|=12 Dis=V4 blocks={1,3},{2,4}".into())
}

fn criterion_2(seen: &mut Vec<Quandle>) -> Outcome {
    let (q, _) = ok(conj_quandle(&PermGroup::symmetric(5), &p("(1,2)", 5)))?;
    let inv = q.invariants();
    let status = quandle_core::enumerate::classify_affine(&q, q.is_simple());
    let line = format!(
        "order={} inn={} dis={} simple={} primitive={} affine={}",
        q.order(),
        inv.inn_order,
        inv.dis_order,
        q.is_simple(),
        q.is_primitive(),
        status.label()
    );
    ensure(
        line == "order=10 inn=120 dis=60 simple=true primitive=true affine=no",
        || line.clone(),
    )?;
    seen.push(q);
    Ok(line)
}

fn counts_line(counts: &BTreeMap<usize, usize>) -> String {
    counts
        .iter()
        .map(|(d, c)| format!("{d}->{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn criterion_3(seen: &mut Vec<Quandle>) -> Outcome {
    let records = catalog(PRIMITIVE);
    let opts = Options {
        non_affine_only: true,
        ..Options::default()
    };
    let expected = BTreeMap::from([
        (10, 1),
        (12, 0),
        (15, 1),
        (21, 1),
        (28, 2),
        (36, 3),
        (40, 1),
        (45, 2),
    ]);
    let mut got = BTreeMap::new();
    for &degree in expected.keys() {
        let result = ok(enumerate_degree(degree, &records, Mode::Primitive, &opts))?;
        got.insert(degree, result.filtered());
        seen.extend(result.entries.into_iter().map(|e| e.quandle));
    }
    ensure(got == expected, || counts_line(&got))?;
    Ok(counts_line(&got))
}

fn criterion_4(seen: &mut Vec<Quandle>) -> Outcome {
    let records = merged();
    let expected = BTreeMap::from([
        (12, 1),
        (15, 2),
        (20, 2),
        (21, 2),
        (24, 1),
        (28, 2),
        (30, 1),
    ]);
    let mut got = BTreeMap::new();
    for &degree in expected.keys() {
        // the primitive-mode output is contained in the quasiprimitive one
        let quasi = ok(enumerate_degree(
            degree,
            &records,
            Mode::Quasiprimitive,
            &Options::default(),
        ))?;
        let prim = ok(enumerate_degree(
            degree,
            &records,
            Mode::Primitive,
            &Options::default(),
        ))?;
        for e in &prim.entries {
            ensure(
                quasi
                    .entries
                    .iter()
                    .any(|f| f.quandle.isomorphism(&e.quandle).is_some()),
                || format!("{} missing in quasiprimitive mode", e.source),
            )?;
        }
        got.insert(degree, quasi.entries.iter().filter(|e| e.simple).count());
        seen.extend(quasi.entries.into_iter().map(|e| e.quandle));
    }
    ensure(got == expected, || counts_line(&got))?;
    Ok(counts_line(&got))
}

fn criterion_5(seen: &mut Vec<Quandle>) -> Outcome {
    let records = catalog(SPOT);
    let record = records
        .iter()
        .find(|r| r.degree == 63)
        .ok_or("no degree-63 record")?;
    let group = ok(record.group())?;
    ensure(group.order_u64() == Some(6048), || {
        format!("|G| = {}", group.order())
    })?;
    let xi = ok(xi_set(&group, 0))?.len();
    let result = ok(enumerate_degree(
        63,
        &records,
        Mode::Primitive,
        &Options::default(),
    ))?;
    let line = format!("xi={} filtered={}", xi, result.filtered());
    ensure(xi == 3 && result.filtered() == 2, || line.clone())?;
    seen.extend(result.entries.into_iter().map(|e| e.quandle));
    Ok(line)
}

/// Connected quandles of order at most 12: all of order at most 7 plus
/// named families and the enumerated ones.
fn connected_suite() -> Vec<Quandle> {
    let mut suite: Vec<Quandle> = (1..=7)
        .flat_map(|n| brute_force_enumerate(n, 7).unwrap())
        .filter(|q| q.is_connected())
        .collect();
    suite.extend([9, 11].map(Quandle::dihedral));
    for (prime, text) in [
        (2, "0,1;1,1"),
        (2, "0,0,1;1,0,1;0,1,0"),
        (3, "0,2;1,0"),
        (3, "0,2;1,1"),
        (11, "2"),
    ] {
        suite.push(affine_quandle(&Matrix::parse(prime, text).unwrap()).unwrap());
    }
    suite.push(
        conj_quandle(&PermGroup::symmetric(5), &p("(1,2)", 5))
            .unwrap()
            .0,
    );
    suite.push(
        conj_quandle(&PermGroup::alternating(5), &p("(1,2,3,4,5)", 5))
            .unwrap()
            .0,
    );
    suite.push(
        conj_quandle(&PermGroup::alternating(4), &p("(1,2,3)", 4))
            .unwrap()
            .0,
    );
    suite.push(
        conj_quandle(&PermGroup::symmetric(4), &p("(1,2,3,4)", 4))
            .unwrap()
            .0,
    );
    suite
}

fn small_envelopes() -> Result<Vec<Envelope>, String> {
    let mut out = Vec::new();
    for record in merged().iter().filter(|r| r.degree <= 30) {
        let group = ok(record.group())?;
        for rho in ok(xi_set(&group, 0))? {
            out.push(ok(Envelope::new(group.clone(), 0, rho))?);
        }
    }
    Ok(out)
}

fn criterion_6(seen: &mut Vec<Quandle>) -> Outcome {
    let suite = connected_suite();
    let mut checks = 0;
    for q in &suite {
        ensure(q.order() <= 12, || {
            format!("order {} in the suite", q.order())
        })?;
        for e in 0..q.order() {
            let back = ok(pe(q, e).and_then(|env| pq(&env)))?;
            ensure(&back == q, || {
                format!("pq(pe(Q,{e})) differs for a quandle of order {}", q.order())
            })?;
            checks += 1;
        }
    }
    let envelopes = small_envelopes()?;
    for env in &envelopes {
        let q = ok(pq(env))?;
        let back = ok(pe(&q, env.base_point()))?;
        ensure(
            back.group().same_elements(env.group()) && back.rho() == env.rho(),
            || format!("pe(pq(env)) differs for rho={}", env.rho()),
        )?;
        seen.push(q);
    }
    seen.extend(suite);
    Ok(format!("pq.pe={checks} pe.pq={}", envelopes.len()))
}

/// `x -> R_x` maps `pq(env)` onto `Conj(G, rho^G)`; it is a bijection
/// exactly when the quandle is faithful.
fn check_conj_image(q: &Quandle, env: &Envelope) -> Result<(), String> {
    let (conj, class) = ok(conj_quandle(env.group(), env.rho()))?;
    let f: Vec<usize> = (0..q.order())
        .map(|x| {
            let r = q.right_translation(x).unwrap();
            class
                .iter()
                .position(|c| *c == r)
                .ok_or_else(|| format!("R_{x} outside the class"))
        })
        .collect::<Result<_, _>>()?;
    for x in 0..q.order() {
        for y in 0..q.order() {
            ensure(f[q.op(x, y)] == conj.op(f[x], f[y]), || {
                format!("x -> R_x not a homomorphism for rho={}", env.rho())
            })?;
        }
    }
    let mut image = f.clone();
    image.sort_unstable();
    image.dedup();
    ensure(image.len() == conj.order(), || {
        "x -> R_x not onto the class".into()
    })?;
    ensure((conj.order() == q.order()) == q.is_faithful(), || {
        "bijectivity differs from faithfulness".into()
    })?;
    if q.is_faithful() {
        ensure(q.isomorphism(&conj).is_some(), || {
            format!("conj form differs for rho={}", env.rho())
        })?;
    }
    Ok(())
}

fn criterion_7(seen: &mut Vec<Quandle>) -> Outcome {
    let envelopes = small_envelopes()?;
    let mut faithful = 0;
    for env in &envelopes {
        let q = ok(pq(env))?;
        let (coset, _) = ok(coset_quandle(env))?;
        ensure(q.isomorphism(&coset).is_some(), || {
            format!("coset form differs for rho={}", env.rho())
        })?;
        check_conj_image(&q, env)?;
        faithful += usize::from(q.is_faithful());
        seen.push(coset);
    }
    Ok(format!("envelopes={} faithful={faithful}", envelopes.len()))
}

fn criterion_8(seen: &mut Vec<Quandle>) -> Outcome {
    let all: Vec<Vec<Quandle>> = ok((1..=5).map(|n| brute_force_enumerate(n, 5)).collect())?;
    let counts: Vec<usize> = all.iter().map(Vec::len).collect();
    ensure(counts == [1, 1, 3, 7, 22], || format!("counts {counts:?}"))?;
    let predicted: [(usize, u32, &[&str]); 3] = [
        (3, 3, &["2"]),
        (4, 2, &["0,1;1,1"]),
        (5, 5, &["2", "3", "4"]),
    ];
    for (n, prime, psis) in predicted {
        let simple: Vec<&Quandle> = all[n - 1].iter().filter(|q| q.is_simple()).collect();
        ensure(simple.len() == psis.len(), || {
            format!("{} simple of order {n}", simple.len())
        })?;
        let affine: Vec<Quandle> = psis
            .iter()
            .map(|t| affine_quandle(&Matrix::parse(prime, t).unwrap()).unwrap())
            .collect();
        for q in &simple {
            ensure(affine.iter().any(|a| a.isomorphism(q).is_some()), || {
                format!("order {n} simple not affine")
            })?;
        }
        // the predicted affine quandles are pairwise distinct
        for (i, a) in affine.iter().enumerate() {
            ensure(
                affine[..i].iter().all(|b| b.isomorphism(a).is_none()),
                || format!("repeated psi at {n}"),
            )?;
        }
    }
    seen.extend(all.into_iter().flatten());
    Ok("counts 1,1,3,7,22 simple 1,1,3".into())
}

fn battery(q: &Quandle) -> Result<(), String> {
    let n = q.order();
    ok(q.check_axioms())?;
    let inn = q.inner_group();
    let dis = q.displacement_group();
    ensure(
        dis.is_normal_in(&inn) && ok(inn.quotient_is_cyclic(&dis))?,
        || "Inn/Dis not cyclic".into(),
    )?;
    if q.is_connected() {
        ensure(dis.is_transitive(), || {
            "connected but Dis intransitive".into()
        })?;
    }
    if q.is_primitive() && n > 1 {
        ensure(q.is_simple(), || "primitive but not simple".into())?;
    }
    if q.is_simple() && n > 2 {
        ensure(q.is_connected() && q.is_faithful(), || {
            "simple but not connected and faithful".into()
        })?;
        ensure(ok(q.is_quasiprimitive())?, || {
            "simple but not quasiprimitive".into()
        })?;
        // the largest inner group met here is S10 on 45 points
        let inn = inn.with_limits(Limits {
            elements: 4_000_000,
            ..Limits::default()
        });
        ensure(ok(check_inner_conditions(&inn))?, || {
            "simple but Inn fails the inner conditions".into()
        })?;
    }
    Ok(())
}

#[allow(clippy::ptr_arg)]
fn criterion_9(seen: &mut Vec<Quandle>) -> Outcome {
    for q in seen.iter() {
        battery(q).map_err(|e| format!("order {}: {e}", q.order()))?;
    }
    Ok(format!("quandles={}", seen.len()))
}

type Criterion = fn(&mut Vec<Quandle>) -> Outcome;

fn main() {
    let criteria: [(usize, Criterion, u64); 9] = [
        (1, criterion_1, 1),
        (2, criterion_2, 1),
        (3, criterion_3, 120),
        (4, criterion_4, 180),
        (5, criterion_5, 300),
        (6, criterion_6, 120),
        (7, criterion_7, 120),
        (8, criterion_8, 300),
        (9, criterion_9, 300),
    ];
    let mut seen = Vec::new();
    let mut failures = 0;
    for (n, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run(&mut seen);
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let (verdict, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d} (over time)")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if verdict == "FAIL" {
            failures += 1;
        }
        println!(
            "criterion {n}: {verdict} {detail} elapsed={:.2}s limit={limit}s",
            elapsed.as_secs_f64()
        );
    }
    println!("criterion 10: EXCLUDED full-scale sweep needs external group databases");
    if failures > 0 {
        println!("acceptance: {failures} failed");
        std::process::exit(1);
    }
    println!("acceptance: all passed");
}
