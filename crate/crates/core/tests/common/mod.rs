#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use proptest::prelude::*;
use quandle_core::{PermGroup, Permutation, Quandle};

pub fn p(s: &str, n: usize) -> Permutation {
    Permutation::parse(s, n).unwrap()
}

pub fn example4() -> Quandle {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/data/example4.qnd"
    ))
    .unwrap();
    quandle_core::catalog::parse_quandle_file(&text).unwrap()
}

/// Uniform permutation of `0..n` from a shuffle seed.
pub fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// Every element of `<gens>` by breadth-first closure under right
/// multiplication, independent of any stabilizer chain.
pub fn closure_elements(gens: &[Permutation], cap: usize) -> Option<HashSet<Vec<u32>>> {
    let n = gens[0].degree();
    let id: Vec<u32> = (0..n as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<u32> = x.iter().map(|&i| g.images()[i as usize]).collect();
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen)
}

/// All set partitions of `0..n` as label vectors (restricted growth strings).
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn grow(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let max = prefix.iter().copied().max().map_or(0, |m| m + 1);
        for c in 0..=max {
            prefix.push(c);
            grow(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        grow(&mut vec![0], n, &mut out);
    }
    out
}

/// Whether a partition of the points is preserved by every generator.
pub fn is_block_partition(gens: &[Permutation], labels: &[usize]) -> bool {
    gens.iter().all(|g| {
        (0..labels.len()).all(|x| {
            (0..labels.len())
                .all(|y| labels[x] != labels[y] || labels[g.image(x)] == labels[g.image(y)])
        })
    })
}

/// Whether a partition is a quandle congruence.
pub fn is_congruence(q: &Quandle, labels: &[usize]) -> bool {
    let n = q.order();
    (0..n).all(|a| {
        (0..n).all(|b| {
            labels[a] != labels[b]
                || (0..n).all(|c| {
                    labels[q.op(a, c)] == labels[q.op(b, c)]
                        && labels[q.op(c, a)] == labels[q.op(c, b)]
                })
        })
    })
}

/// A random group on `n` points from two or three random generators.
pub fn group_strategy(n: usize) -> impl Strategy<Value = Vec<Permutation>> {
    prop::collection::vec(perm_strategy(n), 1..=3)
}

/// The group generated, when its order is small enough for brute force.
pub fn small_group(gens: &[Permutation]) -> Option<PermGroup> {
    let g = PermGroup::new(gens.to_vec()).ok()?;
    (g.order_u64()? <= 5000).then_some(g)
}

/// An element of `S_a wr S_b` on `a * b` points: point `a * i + j` goes to
/// `a * β(i) + τ_i(j)`.
pub fn wreath_element(a: usize, b: usize) -> impl Strategy<Value = Permutation> {
    (perm_strategy(b), prop::collection::vec(perm_strategy(a), b)).prop_map(move |(beta, taus)| {
        let images = (0..a * b)
            .map(|x| (a * beta.image(x / a) + taus[x / a].image(x % a)) as u32)
            .collect();
        Permutation::from_images(images).unwrap()
    })
}

/// Generators of a subgroup of a wreath product (often imprimitive), or of
/// an arbitrary group, on at most 9 points.
pub fn mixed_group_strategy() -> impl Strategy<Value = Vec<Permutation>> {
    prop_oneof![
        (1usize..=3, 1usize..=3)
            .prop_flat_map(|(a, b)| prop::collection::vec(wreath_element(a, b), 1..=3)),
        Just((2usize, 4usize))
            .prop_flat_map(|(a, b)| prop::collection::vec(wreath_element(a, b), 1..=3)),
        Just((4usize, 2usize))
            .prop_flat_map(|(a, b)| prop::collection::vec(wreath_element(a, b), 1..=3)),
        (2usize..=7).prop_flat_map(group_strategy),
    ]
}
