//! Finite quandles as multiplication tables.
//!
//! `table[x][y] = x ▷ y`; the column of `y` is the right translation
//! `R_y: x ↦ x ▷ y`. Points are 0-based.
//!
//! Congruences are closed under `▷` in both arguments only. On a finite
//! quandle this already gives compatibility with `▷⁻¹`: each `R_z` maps
//! classes to classes, so it induces a map on the finite set of classes that
//! is onto, hence a bijection, and `R_z⁻¹` maps classes to classes as well.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{AxiomViolation, Error, Result};
use crate::perm::Permutation;
use crate::permgrp::{PermGroup, UnionFind};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quandle {
    n: usize,
    table: Vec<u32>,
}

/// An equivalence relation given by a class index per point. Classes are
/// numbered in order of their smallest point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    class_of: Vec<usize>,
}

impl Congruence {
    fn from_roots(roots: &[usize]) -> Self {
        let mut ids = HashMap::new();
        let class_of = roots
            .iter()
            .map(|r| {
                let next = ids.len();
                *ids.entry(*r).or_insert(next)
            })
            .collect();
        Congruence { class_of }
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn num_classes(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }
}

/// Isomorphism invariants compared before any search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub order: usize,
    pub connected: bool,
    pub inn_order: BigUint,
    pub dis_order: BigUint,
    /// Sorted multiset of column cycle types.
    pub column_types: Vec<Vec<usize>>,
}

impl Quandle {
    /// Validates a 0-based table given as rows.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Shape("a quandle needs at least one element".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::Shape(format!(
                        "entry {} in row {} is outside 1..{n}",
                        v + 1,
                        i + 1
                    )));
                }
                table.push(v as u32);
            }
        }
        let q = Quandle { n, table };
        q.check_axioms().map_err(Error::Axiom)?;
        Ok(q)
    }

    /// Validates a table whose entries are 1-based.
    pub fn from_table_1based(rows: &[Vec<usize>]) -> Result<Self> {
        let mut shifted = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let mut r = Vec::with_capacity(row.len());
            for &v in row {
                if v == 0 {
                    return Err(Error::Shape(format!("entry 0 in row {}", i + 1)));
                }
                r.push(v - 1);
            }
            shifted.push(r);
        }
        Self::from_table(&shifted)
    }

    /// Quandle whose right translations are `columns`, validated.
    pub fn from_columns(columns: &[Permutation]) -> Result<Self> {
        let n = columns.len();
        if n == 0 {
            return Err(Error::Shape("a quandle needs at least one element".into()));
        }
        if let Some(c) = columns.iter().find(|c| c.degree() != n) {
            return Err(Error::DegreeMismatch {
                left: n,
                right: c.degree(),
            });
        }
        let q = Self::from_columns_unchecked(columns);
        q.check_axioms().map_err(Error::Axiom)?;
        Ok(q)
    }

    pub(crate) fn from_columns_unchecked(columns: &[Permutation]) -> Self {
        let n = columns.len();
        let mut table = vec![0u32; n * n];
        for (y, c) in columns.iter().enumerate() {
            for x in 0..n {
                table[x * n + y] = c.image(x) as u32;
            }
        }
        Quandle { n, table }
    }

    pub(crate) fn from_flat_unchecked(n: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        Quandle { n, table }
    }

    /// `x ▷ y = x` for all `x, y`.
    pub fn trivial(n: usize) -> Self {
        let table = (0..n * n).map(|i| (i / n) as u32).collect();
        Quandle { n, table }
    }

    /// Dihedral quandle on `Z_n`: `x ▷ y = 2y - x`.
    pub fn dihedral(n: usize) -> Self {
        let table = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                ((2 * y + n - x) % n) as u32
            })
            .collect();
        Quandle { n, table }
    }

    /// Checks idempotence, bijective columns and right self-distributivity,
    /// reporting the first failure found.
    pub fn check_axioms(&self) -> std::result::Result<(), AxiomViolation> {
        let n = self.n;
        for x in 0..n {
            if self.op(x, x) != x {
                return Err(AxiomViolation::Idempotence { x: x + 1 });
            }
        }
        for y in 0..n {
            let mut seen = vec![false; n];
            for x in 0..n {
                let v = self.op(x, y);
                if std::mem::replace(&mut seen[v], true) {
                    return Err(AxiomViolation::ColumnNotBijective {
                        column: y + 1,
                        value: v + 1,
                    });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(xy, z) != self.op(self.op(x, z), self.op(y, z)) {
                        return Err(AxiomViolation::Distributivity {
                            x: x + 1,
                            y: y + 1,
                            z: z + 1,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `x ▷ y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    /// `x ▷⁻¹ y`, the unique `w` with `w ▷ y = x`.
    pub fn op_inv(&self, x: usize, y: usize) -> usize {
        (0..self.n)
            .find(|&w| self.op(w, y) == x)
            .expect("columns are bijections")
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn right_translation(&self, y: usize) -> Result<Permutation> {
        if y >= self.n {
            return Err(Error::PointOutOfRange {
                point: y,
                degree: self.n,
            });
        }
        Ok(self.column(y))
    }

    pub(crate) fn column(&self, y: usize) -> Permutation {
        Permutation::from_images_unchecked(
            (0..self.n).map(|x| self.table[x * self.n + y]).collect(),
        )
    }

    pub fn right_translations(&self) -> Vec<Permutation> {
        (0..self.n).map(|y| self.column(y)).collect()
    }

    /// `Inn(Q) = <R_y>`.
    pub fn inner_group(&self) -> PermGroup {
        let mut gens: Vec<Permutation> = Vec::new();
        for c in self.right_translations() {
            if !c.is_identity() && !gens.contains(&c) {
                gens.push(c);
            }
        }
        if gens.is_empty() {
            return PermGroup::trivial(self.n);
        }
        PermGroup::new(gens).expect("columns share the degree")
    }

    /// `Dis(Q) = <R_0⁻¹ R_y>`.
    pub fn displacement_group(&self) -> PermGroup {
        let cols = self.right_translations();
        let r0inv = cols[0].inverse();
        let mut gens: Vec<Permutation> = Vec::new();
        for c in &cols[1..] {
            let g = r0inv.then(c);
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        if gens.is_empty() {
            return PermGroup::trivial(self.n);
        }
        PermGroup::new(gens).expect("columns share the degree")
    }

    /// Orbits of `Inn(Q)`, computed from the columns directly.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                uf.union(x, self.op(x, y));
            }
        }
        crate::permgrp::BlockSystem::from_labels(&uf.labels())
            .classes()
            .to_vec()
    }

    pub fn is_connected(&self) -> bool {
        self.orbits().len() == 1
    }

    /// The map `x ↦ R_x` is injective.
    pub fn is_faithful(&self) -> bool {
        let mut cols = self.right_translations();
        cols.sort();
        cols.windows(2).all(|w| w[0] != w[1])
    }

    /// Every left translation `y ↦ x ▷ y` is a bijection.
    pub fn is_latin(&self) -> bool {
        self.table.chunks(self.n).all(|row| {
            let mut seen = vec![false; self.n];
            row.iter()
                .all(|&v| !std::mem::replace(&mut seen[v as usize], true))
        })
    }

    /// Smallest congruence identifying each given pair.
    pub fn congruence_closure(&self, pairs: &[(usize, usize)]) -> Result<Congruence> {
        for &(a, b) in pairs {
            for p in [a, b] {
                if p >= self.n {
                    return Err(Error::PointOutOfRange {
                        point: p,
                        degree: self.n,
                    });
                }
            }
        }
        Ok(self.closure(pairs))
    }

    fn closure(&self, pairs: &[(usize, usize)]) -> Congruence {
        let mut uf = UnionFind::new(self.n);
        let mut queue = Vec::new();
        for &(a, b) in pairs {
            if uf.union(a, b).is_some() {
                queue.push((a, b));
            }
        }
        while let Some((i, j)) = queue.pop() {
            for k in 0..self.n {
                for (u, v) in [
                    (self.op(i, k), self.op(j, k)),
                    (self.op(k, i), self.op(k, j)),
                ] {
                    if uf.union(u, v).is_some() {
                        queue.push((u, v));
                    }
                }
            }
        }
        Congruence::from_roots(&uf.labels())
    }

    /// A congruence other than equality and the full relation, if any.
    pub fn proper_congruence(&self) -> Option<Congruence> {
        // Inn(Q) acts by automorphisms, so in a connected quandle any
        // nontrivial congruence is moved to one relating 0 with some b.
        let firsts: Vec<usize> = if self.is_connected() {
            vec![0]
        } else {
            (0..self.n).collect()
        };
        for &a in &firsts {
            for b in a + 1..self.n {
                let c = self.closure(&[(a, b)]);
                if c.num_classes() > 1 {
                    return Some(c);
                }
            }
        }
        None
    }

    /// More than one element and only the two trivial congruences. The
    /// two-element trivial quandle passes this test.
    pub fn is_simple(&self) -> bool {
        self.n > 1 && self.proper_congruence().is_none()
    }

    /// `Inn(Q)` acts primitively.
    pub fn is_primitive(&self) -> bool {
        self.inner_group().is_primitive()
    }

    /// Faithful, and `Inn(Q)` acts quasiprimitively.
    pub fn is_quasiprimitive(&self) -> Result<bool> {
        Ok(self.is_faithful() && self.inner_group().is_quasiprimitive()?)
    }

    pub fn column_types(&self) -> Vec<Vec<usize>> {
        let mut t: Vec<Vec<usize>> = self
            .right_translations()
            .iter()
            .map(|c| c.cycle_type())
            .collect();
        t.sort();
        t
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            order: self.n,
            connected: self.is_connected(),
            inn_order: self.inner_group().order().clone(),
            dis_order: self.displacement_group().order().clone(),
            column_types: self.column_types(),
        }
    }

    /// `map[x]` is the new label of `x`.
    pub fn relabel(&self, map: &[usize]) -> Quandle {
        let n = self.n;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                table[map[x] * n + map[y]] = map[self.op(x, y)] as u32;
            }
        }
        Quandle { n, table }
    }

    /// Whether `map` is an isomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &Quandle, map: &[usize]) -> bool {
        self.n == other.n
            && map.len() == self.n
            && crate::perm::Permutation::from_images(map.iter().map(|&v| v as u32).collect())
                .is_ok()
            && (0..self.n)
                .all(|x| (0..self.n).all(|y| map[self.op(x, y)] == other.op(map[x], map[y])))
    }

    /// An isomorphism `f` with `f(x ▷ y) = f(x) ▷ f(y)`, or `None`.
    pub fn isomorphism(&self, other: &Quandle) -> Option<Vec<usize>> {
        if self.n != other.n || self.column_types() != other.column_types() {
            return None;
        }
        if self.invariants() != other.invariants() {
            return None;
        }
        self.find_isomorphism(other)
    }

    /// The backtracking search alone, without the invariant screen.
    pub fn find_isomorphism(&self, other: &Quandle) -> Option<Vec<usize>> {
        if self.n != other.n {
            return None;
        }
        let sig = |q: &Quandle| -> Vec<Vec<usize>> {
            q.right_translations()
                .iter()
                .map(|c| c.cycle_type())
                .collect()
        };
        let mut search = IsoSearch {
            a: self,
            b: other,
            sig_a: sig(self),
            sig_b: sig(other),
            map: vec![usize::MAX; self.n],
            used: vec![false; self.n],
            mapped: Vec::with_capacity(self.n),
        };
        // With a transitive Inn(other), any isomorphism can be composed with
        // an inner automorphism so that 0 goes to 0.
        let first: Vec<usize> = if other.is_connected() {
            vec![0]
        } else {
            (0..self.n).collect()
        };
        search.run(&first).then_some(search.map)
    }

    /// Least relabeled table over all `n!` relabelings.
    pub fn canonical_form(&self) -> Quandle {
        let n = self.n;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = self.relabel(&perm);
        let mut c = vec![0usize; n];
        let mut i = 0;
        // Heap's algorithm
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                let r = self.relabel(&perm);
                if r.table < best.table {
                    best = r;
                }
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        best
    }
}

struct IsoSearch<'a> {
    a: &'a Quandle,
    b: &'a Quandle,
    sig_a: Vec<Vec<usize>>,
    sig_b: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
    mapped: Vec<usize>,
}

impl IsoSearch<'_> {
    fn run(&mut self, first_candidates: &[usize]) -> bool {
        let Some(x) = (0..self.a.n).find(|&x| self.map[x] == usize::MAX) else {
            return true;
        };
        let candidates: Vec<usize> = if self.mapped.is_empty() {
            first_candidates.to_vec()
        } else {
            (0..self.b.n).collect()
        };
        for y in candidates {
            if self.used[y] || self.sig_a[x] != self.sig_b[y] {
                continue;
            }
            let mark = self.mapped.len();
            if self.assign(x, y) && self.propagate(mark) && self.run(first_candidates) {
                return true;
            }
            self.undo(mark);
        }
        false
    }

    fn assign(&mut self, x: usize, y: usize) -> bool {
        if self.used[y] || self.sig_a[x] != self.sig_b[y] {
            return false;
        }
        self.map[x] = y;
        self.used[y] = true;
        self.mapped.push(x);
        true
    }

    /// Closes the mapped set under `▷`, checking every pair once.
    fn propagate(&mut self, mark: usize) -> bool {
        let mut idx = mark;
        while idx < self.mapped.len() {
            let x = self.mapped[idx];
            for j in 0..=idx {
                let w = self.mapped[j];
                for (s, t) in [(x, w), (w, x)] {
                    let st = self.a.op(s, t);
                    let img = self.b.op(self.map[s], self.map[t]);
                    if self.map[st] == usize::MAX {
                        if !self.assign(st, img) {
                            return false;
                        }
                    } else if self.map[st] != img {
                        return false;
                    }
                }
            }
            idx += 1;
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for x in self.mapped.drain(mark..) {
            self.used[self.map[x]] = false;
            self.map[x] = usize::MAX;
        }
    }
}

impl std::fmt::Debug for Quandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Quandle({})", self.n)?;
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| (v + 1).to_string()).collect();
            writeln!(f, "  {}", line.join(" "))?;
        }
        Ok(())
    }
}

/// All quandles of order `n` up to isomorphism, by exhaustive search over
/// right translations. `n` is capped at `max_order`.
pub fn brute_force_enumerate(n: usize, max_order: usize) -> Result<Vec<Quandle>> {
    if n > max_order {
        return Err(Error::BoundExceeded {
            what: "brute-force quandle enumeration",
            size: n.to_string(),
            bound: max_order as u64,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut found: Vec<Quandle> = Vec::new();
    let mut cols: Vec<Option<Permutation>> = vec![None; n];
    let fixing: Vec<Vec<Permutation>> = (0..n).map(|y| perms_fixing(n, y)).collect();
    search_columns(&fixing, &mut cols, &mut |q| found.push(q));

    let mut reps: Vec<Quandle> = Vec::new();
    if n <= 4 {
        let mut seen = std::collections::BTreeSet::new();
        for q in found {
            let c = q.canonical_form();
            if seen.insert(c.clone()) {
                reps.push(c);
            }
        }
    } else {
        let mut buckets: HashMap<Vec<Vec<usize>>, Vec<usize>> = HashMap::new();
        for q in found {
            let key = q.column_types();
            let bucket = buckets.entry(key).or_default();
            if bucket
                .iter()
                .all(|&i| reps[i].find_isomorphism(&q).is_none())
            {
                bucket.push(reps.len());
                reps.push(q);
            }
        }
    }
    reps.sort();
    Ok(reps)
}

fn perms_fixing(n: usize, y: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<u32> = (0..n as u32).collect();
    permute_rest(&mut images, 0, y, &mut out);
    out
}

fn permute_rest(images: &mut [u32], k: usize, fixed: usize, out: &mut Vec<Permutation>) {
    let n = images.len();
    if k == n {
        out.push(Permutation::from_images_unchecked(images.to_vec()));
        return;
    }
    if k == fixed {
        return permute_rest(images, k + 1, fixed, out);
    }
    for j in k..n {
        if j == fixed {
            continue;
        }
        images.swap(k, j);
        permute_rest(images, k + 1, fixed, out);
        images.swap(k, j);
    }
}

/// Assigns columns in order; every assigned pair forces
/// `R_{y ▷ z} = R_z⁻¹ R_y R_z`.
fn search_columns(
    fixing: &[Vec<Permutation>],
    cols: &mut Vec<Option<Permutation>>,
    emit: &mut dyn FnMut(Quandle),
) {
    let Some(y) = cols.iter().position(|c| c.is_none()) else {
        let columns: Vec<Permutation> = cols.iter().map(|c| c.clone().unwrap()).collect();
        emit(Quandle::from_columns_unchecked(&columns));
        return;
    };
    for cand in &fixing[y] {
        let saved = cols.clone();
        cols[y] = Some(cand.clone());
        if force_columns(cols) {
            search_columns(fixing, cols, emit);
        }
        *cols = saved;
    }
}

fn force_columns(cols: &mut [Option<Permutation>]) -> bool {
    let n = cols.len();
    loop {
        let mut changed = false;
        for y in 0..n {
            for z in 0..n {
                let (Some(ry), Some(rz)) = (&cols[y], &cols[z]) else {
                    continue;
                };
                let t = rz.image(y);
                let need = ry.conjugate_by(rz);
                match &cols[t] {
                    Some(rt) if *rt != need => return false,
                    Some(_) => {}
                    None => {
                        cols[t] = Some(need);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example4() -> Quandle {
        Quandle::from_table_1based(&[
            vec![1, 4, 2, 3],
            vec![3, 2, 4, 1],
            vec![4, 1, 3, 2],
            vec![2, 3, 1, 4],
        ])
        .unwrap()
    }

    #[test]
    fn validates_example() {
        let q = example4();
        assert_eq!(
            q.right_translation(0).unwrap(),
            Permutation::parse("(2,3,4)", 4).unwrap()
        );
        assert_eq!(q.inner_group().order_u64(), Some(12));
        assert_eq!(q.displacement_group().order_u64(), Some(4));
        assert!(q.is_connected() && q.is_faithful() && q.is_latin());
        assert!(q.is_simple() && q.is_primitive());
    }

    #[test]
    fn axiom_witnesses() {
        let r = Quandle::from_table_1based(&[vec![1, 2], vec![2, 1]]);
        assert!(matches!(
            r,
            Err(Error::Axiom(AxiomViolation::Idempotence { x: 2 }))
        ));
        assert!(Quandle::from_table(&[vec![0, 1], vec![1, 0]]).is_err());
        assert!(Quandle::from_table_1based(&[vec![0]]).is_err());
        Quandle::dihedral(3).check_axioms().unwrap();
    }

    #[test]
    fn dihedral_four() {
        let q = Quandle::dihedral(4);
        assert!(!q.is_connected());
        // {0,2} is already closed; 1 and 3 stay apart
        let c = q.congruence_closure(&[(0, 2)]).unwrap();
        assert_eq!(c.classes(), vec![vec![0, 2], vec![1], vec![3]]);
        let parity = q.congruence_closure(&[(0, 2), (1, 3)]).unwrap();
        assert_eq!(parity.classes(), vec![vec![0, 2], vec![1, 3]]);
        assert!(!q.is_simple());
        let full = Quandle::dihedral(3).congruence_closure(&[(0, 1)]).unwrap();
        assert_eq!(full.num_classes(), 1);
        let t = Quandle::trivial(3).congruence_closure(&[(0, 2)]).unwrap();
        assert_eq!(t.classes(), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn trivial_order_two_is_simple() {
        assert!(Quandle::trivial(2).is_simple());
        assert!(!Quandle::trivial(3).is_simple());
        assert!(!Quandle::trivial(1).is_simple());
    }

    #[test]
    fn isomorphism_search() {
        let q = example4();
        let f = q.isomorphism(&q).unwrap();
        assert!(q.is_isomorphism(&q, &f));
        let r = q.relabel(&[2, 0, 3, 1]);
        let g = q.isomorphism(&r).unwrap();
        assert!(q.is_isomorphism(&r, &g));
        assert!(q.isomorphism(&Quandle::dihedral(4)).is_none());
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| brute_force_enumerate(n, 6).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 3, 7]);
        assert!(brute_force_enumerate(7, 6).is_err());
    }
}
