//! Quandles built from groups: envelopes, conjugation and coset quandles,
//! affine quandles.
//!
//! For an envelope `(G, ρ)` with base point `e` the quandle on the points is
//! `x ▷ y = x^(α_y⁻¹ ρ α_y)` where `α_y` is any element with `e^α_y = y`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgrp::PermGroup;
use crate::quandle::Quandle;

/// A transitive group with a base point and a central element `ρ` of the
/// base point stabilizer. When the conjugacy class of `ρ` does not generate
/// the group this is only a folder, and `is_envelope` is false.
#[derive(Clone, Debug)]
pub struct Envelope {
    group: PermGroup,
    base_point: usize,
    rho: Permutation,
    is_envelope: bool,
}

impl Envelope {
    pub fn new(group: PermGroup, base_point: usize, rho: Permutation) -> Result<Self> {
        let n = group.degree();
        if base_point >= n {
            return Err(Error::PointOutOfRange {
                point: base_point,
                degree: n,
            });
        }
        if !group.contains(&rho)? {
            return Err(Error::NotMember(format!("rho = {rho} is not in the group")));
        }
        if !group.is_transitive() {
            return Err(Error::NotTransitive);
        }
        if rho.image(base_point) != base_point {
            return Err(Error::RhoMovesBase(base_point + 1));
        }
        let stab = group.stabilizer(base_point)?;
        if !stab.generators().iter().all(|g| g.commutes_with(&rho)) {
            return Err(Error::RhoNotCentral);
        }
        let is_envelope =
            group.normal_closure(std::slice::from_ref(&rho))?.order() == group.order();
        Ok(Envelope {
            group,
            base_point,
            rho,
            is_envelope,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn base_point(&self) -> usize {
        self.base_point
    }

    pub fn rho(&self) -> &Permutation {
        &self.rho
    }

    pub fn is_envelope(&self) -> bool {
        self.is_envelope
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    /// `α_y` for every point, found by breadth-first search over the
    /// generators from the base point.
    pub fn transversal(&self) -> Vec<Permutation> {
        let n = self.degree();
        let mut alpha: Vec<Option<Permutation>> = vec![None; n];
        alpha[self.base_point] = Some(Permutation::identity(n));
        let mut queue = vec![self.base_point];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k];
            for g in self.group.generators() {
                let y = g.image(x);
                if alpha[y].is_none() {
                    alpha[y] = Some(alpha[x].as_ref().unwrap().then(g));
                    queue.push(y);
                }
            }
            k += 1;
        }
        alpha
            .into_iter()
            .map(|a| a.expect("group is transitive"))
            .collect()
    }
}

/// The quandle of an envelope.
pub fn pq(env: &Envelope) -> Result<Quandle> {
    pq_with_transversal(env, &env.transversal())
}

/// The quandle of an envelope using the given `α_y` (one per point).
pub fn pq_with_transversal(env: &Envelope, alpha: &[Permutation]) -> Result<Quandle> {
    if !env.is_envelope {
        return Err(Error::FolderNotEnvelope);
    }
    let n = env.degree();
    if alpha.len() != n {
        return Err(Error::InvalidArgument(format!(
            "expected {n} transversal elements, got {}",
            alpha.len()
        )));
    }
    for (y, a) in alpha.iter().enumerate() {
        if a.degree() != n || a.image(env.base_point) != y || !env.group.has(a) {
            return Err(Error::InvalidArgument(format!(
                "transversal element {} does not map the base point to {}",
                y + 1,
                y + 1
            )));
        }
    }
    let columns: Vec<Permutation> = alpha.iter().map(|a| env.rho.conjugate_by(a)).collect();
    Ok(Quandle::from_columns_unchecked(&columns))
}

/// `(Inn(Q), e, R_e)` for a connected quandle.
pub fn pe(q: &Quandle, e: usize) -> Result<Envelope> {
    if e >= q.order() {
        return Err(Error::PointOutOfRange {
            point: e,
            degree: q.order(),
        });
    }
    if !q.is_connected() {
        return Err(Error::NotConnected);
    }
    Envelope::new(q.inner_group(), e, q.column(e))
}

/// The conjugation quandle on the class of `g`, with `a ▷ b = b⁻¹ a b`.
/// Class elements are sorted by image sequence; element `i` of the returned
/// list is point `i`.
pub fn conj_quandle(group: &PermGroup, g: &Permutation) -> Result<(Quandle, Vec<Permutation>)> {
    let mut class = group.conjugacy_class(g)?;
    class.sort();
    let index: HashMap<&Permutation, usize> =
        class.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let m = class.len();
    let mut table = vec![0u32; m * m];
    for (a, pa) in class.iter().enumerate() {
        for (b, pb) in class.iter().enumerate() {
            table[a * m + b] = index[&pa.conjugate_by(pb)] as u32;
        }
    }
    Ok((Quandle::from_flat_unchecked(m, table), class))
}

/// The quandle on right cosets of `G_e` with
/// `G_e g ▷ G_e h = G_e ρ⁻¹ g h⁻¹ ρ h`. Cosets are labeled in order of their
/// sorted representatives; these are returned alongside.
pub fn coset_quandle(env: &Envelope) -> Result<(Quandle, Vec<Permutation>)> {
    if !env.is_envelope {
        return Err(Error::FolderNotEnvelope);
    }
    let stab = env.group.stabilizer(env.base_point)?;
    let mut reps = env.group.coset_action(&stab)?.representatives;
    reps.sort();
    let inv: Vec<Permutation> = reps.iter().map(|r| r.inverse()).collect();
    let find = |w: &Permutation| -> usize {
        (0..reps.len())
            .find(|&j| stab.has(&w.then(&inv[j])))
            .expect("cosets cover the group")
    };
    let m = reps.len();
    let rho_inv = env.rho.inverse();
    let mut table = vec![0u32; m * m];
    for (a, g) in reps.iter().enumerate() {
        let left = rho_inv.then(g);
        for b in 0..m {
            let w = left.then(&inv[b]).then(&env.rho).then(&reps[b]);
            table[a * m + b] = find(&w) as u32;
        }
    }
    Ok((Quandle::from_flat_unchecked(m, table), reps))
}

/// `(φ⁻¹ G φ, e, φ⁻¹ ρ φ)` for `φ` fixing `e`.
pub fn transport(env: &Envelope, phi: &Permutation) -> Result<Envelope> {
    if phi.degree() != env.degree() {
        return Err(Error::DegreeMismatch {
            left: env.degree(),
            right: phi.degree(),
        });
    }
    if phi.image(env.base_point) != env.base_point {
        return Err(Error::PhiMovesBase(env.base_point + 1));
    }
    let gens = env
        .group
        .generators()
        .iter()
        .map(|g| g.conjugate_by(phi))
        .collect();
    let group = PermGroup::new(gens)?.with_limits(env.group.limits());
    Envelope::new(group, env.base_point, env.rho.conjugate_by(phi))
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Square matrix over `Z_p`, rows of entries in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    p: u32,
    rows: Vec<Vec<u32>>,
}

impl Matrix {
    pub fn new(p: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        let k = rows.len();
        if k == 0 || rows.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidArgument(
                "matrix must be square and nonempty".into(),
            ));
        }
        if rows.iter().flatten().any(|&v| v >= p) {
            return Err(Error::InvalidArgument(format!(
                "matrix entries must lie in 0..{p}"
            )));
        }
        Ok(Matrix { p, rows })
    }

    /// Parses `"a,b;c,d"`: rows separated by `;`, entries by `,`.
    pub fn parse(p: u32, text: &str) -> Result<Self> {
        let rows = text
            .split(';')
            .map(|r| {
                r.split(',')
                    .map(|v| {
                        v.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::InvalidArgument(format!("bad matrix entry {v:?}")))
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(p, rows)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        self.rows
            .iter()
            .map(|r| {
                (r.iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum::<u64>()
                    % p) as u32
            })
            .collect()
    }

    /// `self - I`.
    fn minus_identity(&self) -> Matrix {
        let mut rows = self.rows.clone();
        for (i, r) in rows.iter_mut().enumerate() {
            r[i] = (r[i] + self.p - 1) % self.p;
        }
        Matrix { p: self.p, rows }
    }

    pub fn rank(&self) -> usize {
        rank_mod_p(self.rows.clone(), self.p)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.dim()
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn rank_mod_p(mut rows: Vec<Vec<u32>>, p: u32) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][c], p);
        for v in rows[rank].iter_mut() {
            *v = (*v as u64 * inv as u64 % p as u64) as u32;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c] as u64;
                for j in 0..cols {
                    let sub = f * rows[rank][j] as u64 % p as u64;
                    rows[r][j] = ((rows[r][j] as u64 + p as u64 - sub) % p as u64) as u32;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Vector with label `Σ v_i p^i` (0-based coordinates).
fn vector_of(label: usize, p: u32, k: usize) -> Vec<u32> {
    let mut v = Vec::with_capacity(k);
    let mut l = label;
    for _ in 0..k {
        v.push((l % p as usize) as u32);
        l /= p as usize;
    }
    v
}

fn label_of(v: &[u32], p: u32) -> usize {
    v.iter()
        .rev()
        .fold(0, |acc, &c| acc * p as usize + c as usize)
}

/// Largest `p^k` accepted by [`affine_quandle`].
pub const AFFINE_MAX_ORDER: usize = 4096;

/// The affine quandle on `Z_p^k`: `x ▷ y = ψ(x - y) + y`.
pub fn affine_quandle(psi: &Matrix) -> Result<Quandle> {
    let (p, k) = (psi.p, psi.dim());
    let order = (p as usize)
        .checked_pow(k as u32)
        .filter(|&m| m <= AFFINE_MAX_ORDER);
    let Some(m) = order else {
        return Err(Error::BoundExceeded {
            what: "affine quandle",
            size: format!("{p}^{k}"),
            bound: AFFINE_MAX_ORDER as u64,
        });
    };
    if !psi.is_invertible() {
        return Err(Error::SingularMatrix(p));
    }
    if psi.minus_identity().rank() < k {
        return Err(Error::FixedVector);
    }
    let vecs: Vec<Vec<u32>> = (0..m).map(|l| vector_of(l, p, k)).collect();
    let mut table = vec![0u32; m * m];
    for (x, vx) in vecs.iter().enumerate() {
        for (y, vy) in vecs.iter().enumerate() {
            let diff: Vec<u32> = vx.iter().zip(vy).map(|(&a, &b)| (a + p - b) % p).collect();
            let img: Vec<u32> = psi
                .apply(&diff)
                .iter()
                .zip(vy)
                .map(|(&a, &b)| (a + b) % p)
                .collect();
            table[x * m + y] = label_of(&img, p) as u32;
        }
    }
    Ok(Quandle::from_flat_unchecked(m, table))
}

/// Largest dimension accepted by [`is_irreducible`].
pub const IRREDUCIBLE_MAX_DIM: usize = 8;

/// Whether `ψ` leaves no nonzero proper subspace invariant: every nonzero
/// vector must generate the whole space under `ψ`.
pub fn is_irreducible(psi: &Matrix) -> Result<bool> {
    let (p, k) = (psi.p, psi.dim());
    if k > IRREDUCIBLE_MAX_DIM || (p as u64).checked_pow(k as u32).is_none_or(|m| m > 1 << 24) {
        return Err(Error::BoundExceeded {
            what: "irreducibility test",
            size: format!("{p}^{k}"),
            bound: IRREDUCIBLE_MAX_DIM as u64,
        });
    }
    if !psi.is_invertible() {
        return Err(Error::SingularMatrix(p));
    }
    let m = (p as usize).pow(k as u32);
    for label in 1..m {
        let v = vector_of(label, p, k);
        // one vector per line: leading nonzero coordinate equal to 1
        if v.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        let mut krylov = vec![v.clone()];
        let mut w = v;
        for _ in 1..k {
            w = psi.apply(&w);
            krylov.push(w.clone());
        }
        if rank_mod_p(krylov, p) < k {
            return Ok(false);
        }
    }
    Ok(true)
}
