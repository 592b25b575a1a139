//! Enumeration of the quandles of primitive and quasiprimitive groups.
//!
//! For each catalog group `G` of the requested degree: skip `S_n`/`A_n` for
//! `n > 4` and groups with non-cyclic `G/G'`; otherwise every non-identity
//! `ρ` in the centre of the point stabilizer whose conjugacy class generates
//! `G` yields a quandle. Quandles are filtered up to isomorphism, first per
//! group and then globally.

use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::catalog::{catalog_digest, CatalogRecord};
use crate::construct::{affine_quandle, is_irreducible, is_prime, pq, Envelope, Matrix};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgrp::{Limits, PermGroup};
use crate::quandle::{Invariants, Quandle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Primitive,
    Quasiprimitive,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Primitive => "primitive",
            Mode::Quasiprimitive => "quasiprimitive",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "primitive" => Ok(Mode::Primitive),
            "quasiprimitive" => Ok(Mode::Quasiprimitive),
            _ => Err(Error::InvalidArgument(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub verify_flags: bool,
    pub non_affine_only: bool,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub limits: Limits,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            verify_flags: true,
            non_affine_only: false,
            jobs: 0,
            limits: Limits::default(),
        }
    }
}

/// Outcome of the affine classification of a quandle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineStatus {
    /// Simple of prime-power order; the witness is a matrix whose affine
    /// quandle is isomorphic, when the search found one.
    Affine {
        witness: Option<Matrix>,
    },
    NonAffine,
    /// Not simple, or order at most 2.
    Unclassified,
}

impl AffineStatus {
    pub fn is_affine(&self) -> bool {
        matches!(self, AffineStatus::Affine { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            AffineStatus::Affine { .. } => "yes",
            AffineStatus::NonAffine => "no",
            AffineStatus::Unclassified => "unknown",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub quandle: Quandle,
    pub source: String,
    pub rho: Permutation,
    pub inn_order: BigUint,
    pub dis_order: BigUint,
    pub simple: bool,
    pub primitive: bool,
    pub quasiprimitive: bool,
    pub affine: AffineStatus,
}

/// What happened to one catalog group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSummary {
    pub label: String,
    pub order: BigUint,
    pub skipped: Option<&'static str>,
    /// `|ξ|` (after the non-affine filter when that is on).
    pub raw: usize,
    /// Survivors of the per-group isomorphism filter.
    pub filtered: usize,
}

#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub degree: usize,
    pub mode: Mode,
    pub entries: Vec<Entry>,
    pub groups: Vec<GroupSummary>,
    pub raw: usize,
    pub catalog_digest: String,
}

impl EnumerationResult {
    pub fn filtered(&self) -> usize {
        self.entries.len()
    }

    pub fn summary_line(&self) -> String {
        format!(
            "degree={} mode={} groups={} raw={} filtered={} catalog={}",
            self.degree,
            self.mode.name(),
            self.groups.iter().filter(|g| g.skipped.is_none()).count(),
            self.raw,
            self.filtered(),
            self.catalog_digest
        )
    }

    /// One line per entry after a header line.
    pub fn report(&self) -> String {
        let mut out = format!(
            "# degree={} mode={} raw={} filtered={} catalog={}\n",
            self.degree,
            self.mode.name(),
            self.raw,
            self.filtered(),
            self.catalog_digest
        );
        for (i, e) in self.entries.iter().enumerate() {
            writeln!(out, "[{},{}] {}", self.degree, i + 1, e).unwrap();
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "inn_order={} dis_order={} simple={} primitive={} quasiprimitive={} affine={} src={} rho={}",
            self.inn_order,
            self.dis_order,
            yes_no(self.simple),
            yes_no(self.primitive),
            yes_no(self.quasiprimitive),
            self.affine.label(),
            self.source,
            self.rho
        )
    }
}

/// Non-identity elements of `Z(G_e)` whose conjugacy class generates `G`,
/// sorted by image sequence.
pub fn xi_set(group: &PermGroup, e: usize) -> Result<Vec<Permutation>> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let centre = group.stabilizer(e)?.center()?;
    let mut xi: Vec<Permutation> = centre
        .elements()?
        .into_iter()
        .filter(|z| !z.is_identity())
        .filter(|z| {
            group
                .normal_closure(std::slice::from_ref(z))
                .map(|n| n.order() == group.order())
                .unwrap_or(false)
        })
        .collect();
    xi.sort();
    Ok(xi)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

/// Order `n!` or `n!/2` on `n > 4` points.
pub fn is_symmetric_or_alternating(group: &PermGroup) -> bool {
    let n = group.degree();
    if n <= 4 {
        return false;
    }
    let f = factorial(n);
    *group.order() == f || group.order() * 2u32 == f
}

/// Centre trivial, `G/G'` cyclic, `G' != 1`, and `G'` inside the normal
/// closure of every non-identity element.
pub fn check_inner_conditions(group: &PermGroup) -> Result<bool> {
    if !group.center()?.is_trivial() {
        return Ok(false);
    }
    let derived = group.derived_subgroup();
    if derived.is_trivial() || !group.quotient_is_cyclic(&derived)? {
        return Ok(false);
    }
    for g in group.class_representatives()? {
        if g.is_identity() {
            continue;
        }
        let n = group.normal_closure(std::slice::from_ref(&g))?;
        if !derived.is_subgroup_of(&n) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest order for which an affine witness is searched.
pub const AFFINE_WITNESS_MAX: usize = 64;

fn prime_power(n: usize) -> Option<(u32, usize)> {
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1 && is_prime(p as u32)).then_some((p as u32, k))
}

/// A simple quandle with more than two elements is affine exactly when its
/// order is a prime power. A witness matrix is searched among companion
/// matrices of irreducible polynomials when the order is at most
/// [`AFFINE_WITNESS_MAX`].
pub fn classify_affine(q: &Quandle, simple: bool) -> AffineStatus {
    let n = q.order();
    if !simple || n <= 2 {
        return AffineStatus::Unclassified;
    }
    let Some((p, k)) = prime_power(n) else {
        return AffineStatus::NonAffine;
    };
    if n > AFFINE_WITNESS_MAX {
        return AffineStatus::Affine { witness: None };
    }
    let witness = companion_matrices(p, k).into_iter().find(|m| {
        is_irreducible(m).unwrap_or(false)
            && affine_quandle(m).is_ok_and(|a| a.isomorphism(q).is_some())
    });
    AffineStatus::Affine { witness }
}

/// Companion matrices of monic degree-`k` polynomials over `Z_p` with
/// nonzero constant term.
pub fn companion_matrices(p: u32, k: usize) -> Vec<Matrix> {
    let total = (p as usize).pow(k as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let coeffs: Vec<u32> = (0..k)
            .map(|i| (code / (p as usize).pow(i as u32) % p as usize) as u32)
            .collect();
        if coeffs[0] == 0 {
            continue;
        }
        let mut rows = vec![vec![0u32; k]; k];
        for i in 1..k {
            rows[i][i - 1] = 1;
        }
        for (i, &c) in coeffs.iter().enumerate() {
            rows[i][k - 1] = (p - c) % p;
        }
        out.push(Matrix::new(p, rows).expect("valid companion matrix"));
    }
    out
}

/// Keeps the first of each isomorphism class, comparing invariants before
/// searching.
pub fn filter_up_to_iso(quandles: Vec<Quandle>) -> Vec<Quandle> {
    let mut kept: Vec<(Quandle, Invariants)> = Vec::new();
    for q in quandles {
        let inv = q.invariants();
        if kept
            .iter()
            .all(|(k, kinv)| *kinv != inv || k.find_isomorphism(&q).is_none())
        {
            kept.push((q, inv));
        }
    }
    kept.into_iter().map(|(q, _)| q).collect()
}

struct Candidate {
    entry: Entry,
    invariants: Invariants,
}

fn process_record(
    record: &CatalogRecord,
    opts: &Options,
) -> Result<(GroupSummary, Vec<Candidate>)> {
    let group = record.group()?.with_limits(opts.limits);
    let mut summary = GroupSummary {
        label: record.label.clone(),
        order: group.order().clone(),
        skipped: None,
        raw: 0,
        filtered: 0,
    };
    if opts.verify_flags {
        record.verify(&group)?;
    }
    if is_symmetric_or_alternating(&group) {
        summary.skipped = Some("symmetric or alternating");
        return Ok((summary, Vec::new()));
    }
    let derived = group.derived_subgroup();
    if !group.quotient_is_cyclic(&derived)? {
        summary.skipped = Some("G/G' not cyclic");
        return Ok((summary, Vec::new()));
    }
    let primitive = group.is_primitive();
    let mut kept: Vec<Candidate> = Vec::new();
    for rho in xi_set(&group, 0)? {
        let env = Envelope::new(group.clone(), 0, rho.clone())?;
        let quandle = pq(&env)?;
        let simple = quandle.is_simple();
        let affine = classify_affine(&quandle, simple);
        if opts.non_affine_only && affine.is_affine() {
            continue;
        }
        summary.raw += 1;
        let invariants = quandle.invariants();
        let mut duplicate = false;
        for k in &kept {
            if k.invariants != invariants {
                continue;
            }
            if let Some(f) = k.entry.quandle.find_isomorphism(&quandle) {
                check_fusion(&group, &k.entry, &quandle, &f, &record.label)?;
                duplicate = true;
                break;
            }
        }
        if duplicate {
            continue;
        }
        let quasiprimitive = quandle.is_faithful() && (primitive || group.is_quasiprimitive()?);
        kept.push(Candidate {
            entry: Entry {
                inn_order: invariants.inn_order.clone(),
                dis_order: invariants.dis_order.clone(),
                quandle,
                source: record.label.clone(),
                rho,
                simple,
                primitive,
                quasiprimitive,
                affine,
            },
            invariants,
        });
    }
    summary.filtered = kept.len();
    Ok((summary, kept))
}

/// An isomorphism `f` between quandles over the same group must conjugate
/// the group to itself and carry the first `ρ` into the class of the second.
fn check_fusion(
    group: &PermGroup,
    first: &Entry,
    second: &Quandle,
    f: &[usize],
    label: &str,
) -> Result<()> {
    let phi = Permutation::from_images(f.iter().map(|&v| v as u32).collect())?;
    let normalizes = group
        .generators()
        .iter()
        .all(|g| group.has(&g.conjugate_by(&phi)));
    let moved = first.rho.conjugate_by(&phi);
    let in_class = group.has(&moved) && second.column(f[0]) == moved;
    if normalizes && in_class {
        Ok(())
    } else {
        Err(Error::FusionCheck(label.to_string()))
    }
}

/// Runs the enumeration for one degree over the records of that degree
/// carrying the mode's flag.
pub fn enumerate_degree(
    degree: usize,
    catalog: &[CatalogRecord],
    mode: Mode,
    opts: &Options,
) -> Result<EnumerationResult> {
    let digest = catalog_digest(catalog);
    let selected: Vec<&CatalogRecord> = catalog
        .iter()
        .filter(|r| r.degree == degree)
        .filter(|r| match mode {
            Mode::Primitive => r.flags.primitive,
            Mode::Quasiprimitive => r.flags.quasiprimitive,
        })
        .collect();
    let empty = EnumerationResult {
        degree,
        mode,
        entries: Vec::new(),
        groups: Vec::new(),
        raw: 0,
        catalog_digest: digest.clone(),
    };
    if degree <= 2 {
        return Ok(empty);
    }
    let run = || -> Vec<Result<(GroupSummary, Vec<Candidate>)>> {
        selected
            .par_iter()
            .map(|r| process_record(r, opts))
            .collect()
    };
    let outcomes = if opts.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(run)
    } else {
        run()
    };
    let mut groups = Vec::new();
    let mut candidates = Vec::new();
    for o in outcomes {
        let (summary, kept) = o?;
        groups.push(summary);
        candidates.extend(kept);
    }
    candidates.sort_by(|a, b| {
        (&a.entry.source, a.entry.rho.to_string()).cmp(&(&b.entry.source, b.entry.rho.to_string()))
    });
    let mut kept: Vec<Candidate> = Vec::new();
    for c in candidates {
        let dup = kept.iter().any(|k| {
            k.invariants == c.invariants
                && k.entry.quandle.find_isomorphism(&c.entry.quandle).is_some()
        });
        if !dup {
            kept.push(c);
        }
    }
    let raw = groups.iter().map(|g| g.raw).sum();
    Ok(EnumerationResult {
        degree,
        mode,
        entries: kept.into_iter().map(|c| c.entry).collect(),
        groups,
        raw,
        ..empty
    })
}
