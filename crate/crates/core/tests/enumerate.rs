mod common;

use std::collections::HashSet;

use common::*;
use quandle_core::catalog::parse_catalog;
use quandle_core::construct::{affine_quandle, pq};
use quandle_core::enumerate::{classify_affine, enumerate_degree, filter_up_to_iso, xi_set};
use quandle_core::library::{PRIMITIVE, QUASIPRIMITIVE};
use quandle_core::{
    brute_force_enumerate, AffineStatus, CatalogRecord, Envelope, Error, Limits, Mode, Options,
    PermGroup,
};

fn primitive() -> Vec<CatalogRecord> {
    parse_catalog(PRIMITIVE).unwrap()
}

fn merged() -> Vec<CatalogRecord> {
    let mut all = primitive();
    all.extend(parse_catalog(QUASIPRIMITIVE).unwrap());
    all
}

fn jobs(n: usize) -> Options {
    Options {
        jobs: n,
        ..Options::default()
    }
}

#[test]
fn xi_set_matches_brute_force() {
    let a5 = PermGroup::alternating(5);
    let c5 = a5.subgroup(vec![p("(1,2,3,4,5)", 5)]).unwrap();
    let groups = [
        PermGroup::symmetric(4),
        PermGroup::alternating(4),
        PermGroup::symmetric(5),
        a5.coset_action(&c5).unwrap().group,
        PermGroup::new(vec![p("(1,2,3,4,5,6)", 6), p("(2,6)(3,5)", 6)]).unwrap(),
    ];
    for g in groups {
        let els = g.elements().unwrap();
        let order = els.len();
        let mut expected: Vec<_> = els
            .iter()
            .filter(|z| !z.is_identity() && z.image(0) == 0)
            .filter(|z| {
                els.iter()
                    .filter(|h| h.image(0) == 0)
                    .all(|h| z.commutes_with(h))
            })
            .filter(|z| {
                let class: Vec<_> = els.iter().map(|h| z.conjugate_by(h)).collect();
                closure_elements(&class, order).unwrap().len() == order
            })
            .cloned()
            .collect();
        expected.sort();
        assert_eq!(xi_set(&g, 0).unwrap(), expected);
    }
}

#[test]
fn small_degrees_match_the_oracle() {
    // the primitive catalog has degree 4, and every simple quandle of
    // order 4 is reached from a primitive group
    let result = enumerate_degree(4, &primitive(), Mode::Primitive, &Options::default()).unwrap();
    let simple: Vec<_> = brute_force_enumerate(4, 6)
        .unwrap()
        .into_iter()
        .filter(|q| q.is_simple())
        .collect();
    assert_eq!(result.filtered(), simple.len());
    for e in &result.entries {
        assert!(simple.iter().any(|q| q.isomorphism(&e.quandle).is_some()));
        assert!(e.quandle.isomorphism(&example4()).is_some());
    }
}

#[test]
fn entries_are_consistent_and_pairwise_distinct() {
    let catalog = merged();
    for (degree, mode) in [
        (10, Mode::Primitive),
        (21, Mode::Primitive),
        (20, Mode::Quasiprimitive),
        (30, Mode::Quasiprimitive),
    ] {
        let result = enumerate_degree(degree, &catalog, mode, &Options::default()).unwrap();
        assert_eq!(
            result.raw,
            result.groups.iter().map(|g| g.raw).sum::<usize>()
        );
        assert_eq!(
            result.filtered(),
            result.groups.iter().map(|g| g.filtered).sum::<usize>()
        );
        for (i, e) in result.entries.iter().enumerate() {
            let q = &e.quandle;
            assert!(q.check_axioms().is_ok());
            assert_eq!(q.order(), degree);
            let inv = q.invariants();
            assert_eq!(inv.inn_order, e.inn_order);
            assert_eq!(inv.dis_order, e.dis_order);
            assert_eq!(e.simple, q.is_simple());
            assert_eq!(e.primitive, q.is_primitive());
            assert_eq!(e.quasiprimitive, q.is_quasiprimitive().unwrap());
            if mode == Mode::Primitive {
                assert!(e.primitive);
            }
            // the entry is the quandle of its recorded envelope
            let record = catalog.iter().find(|r| r.label == e.source).unwrap();
            let group = record.group().unwrap();
            assert!(q.inner_group().same_elements(&group));
            let env = Envelope::new(group, 0, e.rho.clone()).unwrap();
            assert_eq!(&pq(&env).unwrap(), q);
            for other in &result.entries[..i] {
                assert!(other.quandle.isomorphism(q).is_none());
            }
        }
    }
}

#[test]
fn output_does_not_depend_on_worker_count() {
    let catalog = merged();
    for (degree, mode) in [
        (12, Mode::Primitive),
        (28, Mode::Primitive),
        (20, Mode::Quasiprimitive),
    ] {
        let one = enumerate_degree(degree, &catalog, mode, &jobs(1)).unwrap();
        let four = enumerate_degree(degree, &catalog, mode, &jobs(4)).unwrap();
        assert_eq!(one.report(), four.report());
        assert_eq!(one.summary_line(), four.summary_line());
    }
}

#[test]
fn primitive_results_reappear_in_quasiprimitive_mode() {
    let catalog = merged();
    for degree in [12, 15, 21, 28] {
        let prim =
            enumerate_degree(degree, &catalog, Mode::Primitive, &Options::default()).unwrap();
        let quasi =
            enumerate_degree(degree, &catalog, Mode::Quasiprimitive, &Options::default()).unwrap();
        assert!(quasi.filtered() >= prim.filtered());
        for e in &prim.entries {
            assert!(quasi
                .entries
                .iter()
                .any(|f| f.quandle.isomorphism(&e.quandle).is_some()));
        }
    }
}

#[test]
fn non_affine_filter_drops_only_affine_entries() {
    let catalog = primitive();
    let all = enumerate_degree(4, &catalog, Mode::Primitive, &Options::default()).unwrap();
    assert!(all.entries.iter().all(|e| e.affine.is_affine()));
    let opts = Options {
        non_affine_only: true,
        ..Options::default()
    };
    assert_eq!(
        enumerate_degree(4, &catalog, Mode::Primitive, &opts)
            .unwrap()
            .filtered(),
        0
    );
    // degree 10 is not a prime power so nothing is affine there
    let ten = enumerate_degree(10, &catalog, Mode::Primitive, &Options::default()).unwrap();
    let ten_na = enumerate_degree(10, &catalog, Mode::Primitive, &opts).unwrap();
    assert_eq!(ten.report(), ten_na.report());
}

#[test]
fn affine_classification_matches_exhaustive_search() {
    for n in [3, 4, 5] {
        let (prime, k) = match n {
            4 => (2u32, 2usize),
            _ => (n as u32, 1),
        };
        let affine: Vec<_> = (0..(prime as usize).pow((k * k) as u32))
            .filter_map(|code| {
                let rows = (0..k)
                    .map(|i| {
                        (0..k)
                            .map(|j| {
                                ((code / (prime as usize).pow((i * k + j) as u32)) % prime as usize)
                                    as u32
                            })
                            .collect()
                    })
                    .collect();
                affine_quandle(&quandle_core::Matrix::new(prime, rows).unwrap()).ok()
            })
            .collect();
        for q in brute_force_enumerate(n, 6).unwrap() {
            let status = classify_affine(&q, q.is_simple());
            if !q.is_simple() {
                assert_eq!(status, AffineStatus::Unclassified);
                continue;
            }
            let is_affine = affine.iter().any(|a| a.isomorphism(&q).is_some());
            assert_eq!(status.is_affine(), is_affine);
            if let AffineStatus::Affine { witness: Some(m) } = status {
                assert!(affine_quandle(&m).unwrap().isomorphism(&q).is_some());
            }
        }
    }
}

#[test]
fn filter_keeps_one_per_class() {
    let pool: Vec<_> = (1..=5)
        .flat_map(|n| brute_force_enumerate(n, 6).unwrap())
        .collect();
    let mut doubled = Vec::new();
    for q in &pool {
        let n = q.order();
        let reversed: Vec<usize> = (0..n).rev().collect();
        doubled.push(q.relabel(&reversed));
        doubled.push(q.clone());
    }
    let kept = filter_up_to_iso(doubled);
    assert_eq!(kept.len(), pool.len());
    let forms: HashSet<_> = kept.iter().map(|q| q.canonical_form()).collect();
    assert_eq!(forms.len(), pool.len());
}

#[test]
fn digest_tracks_the_catalog() {
    let full = primitive();
    let trimmed: Vec<_> = full.iter().filter(|r| r.label != "S10").cloned().collect();
    let a = enumerate_degree(10, &full, Mode::Primitive, &Options::default()).unwrap();
    let b = enumerate_degree(10, &trimmed, Mode::Primitive, &Options::default()).unwrap();
    assert_ne!(a.catalog_digest, b.catalog_digest);
    assert!(a.summary_line().ends_with(&a.catalog_digest));
    assert!(a.report().starts_with("# degree=10 mode=primitive"));
}

#[test]
fn flag_verification_and_limits() {
    let bogus = parse_catalog("group V4\ndegree 4\ngen (1,2)(3,4)\ngen (1,3)(2,4)\nflags transitive,primitive,quasiprimitive\nend\n").unwrap();
    let err = enumerate_degree(4, &bogus, Mode::Primitive, &Options::default()).unwrap_err();
    assert!(matches!(err, Error::FlagMismatch { .. }));
    let unchecked = Options {
        verify_flags: false,
        ..Options::default()
    };
    assert!(enumerate_degree(4, &bogus, Mode::Primitive, &unchecked).is_ok());
    let tiny = Options {
        limits: Limits {
            elements: 10,
            ..Limits::default()
        },
        ..Options::default()
    };
    let err = enumerate_degree(28, &primitive(), Mode::Primitive, &tiny).unwrap_err();
    assert!(err.is_bound(), "{err}");
}
