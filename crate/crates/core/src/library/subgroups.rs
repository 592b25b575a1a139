//! Exhaustive search for subgroups of prescribed orders in small groups.
//!
//! Subgroups are grown from pairs `<a, b>` with `a` a class representative,
//! then extended one element at a time through every intermediate subgroup
//! whose order divides a wanted order. Every subgroup of a wanted order is
//! reached up to conjugacy: conjugate it so one generator is a class
//! representative, then add its remaining generators one by one.

use std::collections::{BTreeSet, HashSet};

use crate::error::Result;
use crate::perm::Permutation;
use crate::permgrp::PermGroup;

/// Subgroups of `group` with order in `orders`, one per conjugacy class under
/// `ambient` (a group normalizing `group`).
pub fn subgroups_of_orders(
    group: &PermGroup,
    ambient: &PermGroup,
    orders: &BTreeSet<u64>,
) -> Result<Vec<PermGroup>> {
    let elements = group.elements()?;
    let steps: BTreeSet<u64> = orders
        .iter()
        .flat_map(|&w| (2..w).filter(move |d| w % d == 0))
        .collect();
    let keep = |o: u64| orders.contains(&o) || steps.contains(&o);
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut found: Vec<PermGroup> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();

    let mut consider = |gens: Vec<Permutation>,
                        found: &mut Vec<PermGroup>,
                        queue: &mut Vec<usize>|
     -> Result<()> {
        let k = group.subgroup(gens)?;
        let o = k.order_u64().expect("small group");
        if !keep(o) {
            return Ok(());
        }
        let key = element_key(&k, ambient)?;
        if seen.contains(&key) {
            return Ok(());
        }
        for conj in conjugate_keys(&k, ambient)? {
            seen.insert(conj);
        }
        if steps.contains(&o) {
            queue.push(found.len());
        }
        found.push(k);
        Ok(())
    };

    for a in group.class_representatives()? {
        if a.is_identity() {
            continue;
        }
        for b in &elements {
            consider(vec![a.clone(), b.clone()], &mut found, &mut queue)?;
        }
    }
    while let Some(i) = queue.pop() {
        let base = found[i].generators().to_vec();
        for c in &elements {
            if found[i].has(c) {
                continue;
            }
            let mut gens = base.clone();
            gens.push(c.clone());
            consider(gens, &mut found, &mut queue)?;
        }
    }
    Ok(found
        .into_iter()
        .filter(|k| orders.contains(&k.order_u64().unwrap()))
        .collect())
}

fn element_key(k: &PermGroup, ambient: &PermGroup) -> Result<Vec<u64>> {
    let mut key: Vec<u64> = k
        .elements()?
        .iter()
        .map(|e| ambient.rank_of(e).expect("subgroup of the ambient group"))
        .collect();
    key.sort_unstable();
    Ok(key)
}

/// Keys of all conjugates of `k` under `ambient`.
fn conjugate_keys(k: &PermGroup, ambient: &PermGroup) -> Result<Vec<Vec<u64>>> {
    let elements = k.elements()?;
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut frontier = vec![elements];
    let mut out = Vec::new();
    while let Some(els) = frontier.pop() {
        let mut key: Vec<u64> = els.iter().map(|e| ambient.rank_of(e).unwrap()).collect();
        key.sort_unstable();
        if !seen.insert(key.clone()) {
            continue;
        }
        out.push(key);
        for s in ambient.generators() {
            frontier.push(els.iter().map(|e| e.conjugate_by(s)).collect());
        }
    }
    Ok(out)
}

/// First subgroup (in search order) of the given order satisfying `accept`.
pub fn find_subgroup(
    group: &PermGroup,
    order: u64,
    accept: impl Fn(&PermGroup) -> bool,
) -> Result<Option<PermGroup>> {
    let reps = group.class_representatives()?;
    let n = group.order_u64().expect("small group");
    for a in reps.iter().filter(|a| !a.is_identity()) {
        if !order.is_multiple_of(a.order()) {
            continue;
        }
        for r in 0..n {
            let b = group.element_at(r);
            if !order.is_multiple_of(b.order()) {
                continue;
            }
            let k = group.subgroup(vec![a.clone(), b])?;
            if k.order_u64() == Some(order) && accept(&k) {
                return Ok(Some(k));
            }
        }
    }
    Ok(None)
}

/// `N_G(H)` by testing every element of `G`.
pub fn normalizer(group: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let mut gens: Vec<Permutation> = h.generators().to_vec();
    let mut current = group.subgroup(gens.clone())?;
    for g in group.elements()? {
        if current.has(&g) {
            continue;
        }
        if h.generators().iter().all(|x| h.has(&x.conjugate_by(&g))) {
            gens.push(g);
            current = group.subgroup(gens.clone())?;
        }
    }
    Ok(current)
}
