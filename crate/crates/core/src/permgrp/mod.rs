//! Permutation groups held as a base and strong generating set.
//!
//! Points are 0-based here; the text formats and the CLI shift to 1-based.

mod blocks;
mod chain;

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use blocks::BlockSystem;
pub(crate) use blocks::UnionFind;
use chain::StabChain;

/// Bounds on explicit enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group (or candidate set) whose elements may be listed.
    pub elements: u64,
    /// Largest index for explicit coset enumeration of a quotient.
    pub cosets: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            elements: 1_000_000,
            cosets: 1024,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: BigUint,
    limits: Limits,
}

/// Result of acting on the right cosets of a subgroup.
#[derive(Clone, Debug)]
pub struct CosetAction {
    /// The image group; coset `H` is point 0.
    pub group: PermGroup,
    /// Whether the action has trivial kernel.
    pub faithful: bool,
    /// `representatives[i]` is a representative of coset `i`.
    pub representatives: Vec<Permutation>,
}

impl PermGroup {
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        let degree = check_degrees(&generators)?;
        Ok(Self::build(degree, generators, &[]))
    }

    /// Group whose chain uses `prefix` as the start of its base.
    pub fn with_base(generators: Vec<Permutation>, prefix: &[usize]) -> Result<Self> {
        let degree = check_degrees(&generators)?;
        for &p in prefix {
            if p >= degree {
                return Err(Error::PointOutOfRange { point: p, degree });
            }
        }
        Ok(Self::build(degree, generators, prefix))
    }

    fn build(degree: usize, generators: Vec<Permutation>, prefix: &[usize]) -> Self {
        let chain = StabChain::build(degree, &generators, prefix);
        Self::from_chain(generators, chain, Limits::default())
    }

    fn from_chain(generators: Vec<Permutation>, chain: StabChain, limits: Limits) -> Self {
        let order = chain.order();
        PermGroup {
            degree: chain.degree,
            generators,
            chain,
            order,
            limits,
        }
    }

    /// Same group, with new enumeration bounds (inherited by derived groups).
    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn trivial(degree: usize) -> Self {
        Self::build(degree, vec![Permutation::identity(degree)], &[])
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_images_unchecked(transposition(n)));
            let cycle: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
            gens.push(Permutation::from_images_unchecked(cycle));
        } else {
            gens.push(Permutation::identity(n));
        }
        Self::build(n, gens, &[])
    }

    pub fn alternating(n: usize) -> Self {
        if n < 3 {
            return Self::trivial(n);
        }
        // 3-cycles (0,1,k) generate A_n
        let gens = (2..n)
            .map(|k| {
                let mut im: Vec<u32> = (0..n as u32).collect();
                im[0] = 1;
                im[1] = k as u32;
                im[k] = 0;
                Permutation::from_images_unchecked(im)
            })
            .collect();
        Self::build(n, gens, &[])
    }

    fn derived_group(&self, generators: Vec<Permutation>, chain: StabChain) -> Self {
        let generators = if generators.is_empty() {
            vec![Permutation::identity(self.degree)]
        } else {
            generators
        };
        Self::from_chain(generators, chain, self.limits)
    }

    /// Subgroup of `self` generated by the given members.
    pub fn subgroup(&self, generators: Vec<Permutation>) -> Result<Self> {
        let degree = check_degrees(&generators)?;
        if degree != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: degree,
            });
        }
        for g in &generators {
            if !self.chain.contains(g) {
                return Err(Error::NotMember(format!("{g} is not in the group")));
            }
        }
        let chain = StabChain::build(degree, &generators, &[]);
        Ok(self.derived_group(generators, chain))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.chain.strong_generators()
    }

    /// Lengths of the fundamental orbits along the base.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.chain.orbit_lengths()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.check_degree(p)?;
        Ok(self.chain.contains(p))
    }

    pub(crate) fn has(&self, p: &Permutation) -> bool {
        self.chain.contains(p)
    }

    fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(())
    }

    fn check_point(&self, point: usize) -> Result<()> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        Ok(())
    }

    /// Sorted orbit of `point`.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree];
        let mut orbit = self.orbit_from(point, &mut seen);
        orbit.sort_unstable();
        Ok(orbit)
    }

    fn orbit_from(&self, point: usize, seen: &mut [bool]) -> Vec<usize> {
        seen[point] = true;
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for g in &self.generators {
                let y = g.image(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit
    }

    /// All orbits, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let mut o = self.orbit_from(x, &mut seen);
                o.sort_unstable();
                out.push(o);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1
            || self
                .orbit(0)
                .map(|o| o.len() == self.degree)
                .unwrap_or(false)
    }

    pub fn stabilizer(&self, point: usize) -> Result<Self> {
        self.check_point(point)?;
        let chain = if self.chain.levels.first().map(|l| l.base) == Some(point) {
            self.chain.tail(1)
        } else {
            StabChain::build(self.degree, &self.strong_generators(), &[point]).tail(1)
        };
        let gens = chain
            .levels
            .first()
            .map(|l| l.gens.clone())
            .unwrap_or_default();
        Ok(self.derived_group(gens, chain))
    }

    /// Pointwise stabilizer of a sequence of points.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<Self> {
        for &p in points {
            self.check_point(p)?;
        }
        let chain = StabChain::build(self.degree, &self.strong_generators(), points);
        let tail = chain.tail(points.len());
        let gens = tail
            .levels
            .first()
            .map(|l| l.gens.clone())
            .unwrap_or_default();
        Ok(self.derived_group(gens, tail))
    }

    /// True when every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.has(g))
    }

    /// Equality as sets of permutations.
    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.order == other.order && self.is_subgroup_of(other)
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other
                .generators
                .iter()
                .all(|g| self.generators.iter().all(|h| self.has(&h.conjugate_by(g))))
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<Self> {
        for s in seeds {
            self.check_degree(s)?;
            if !self.has(s) {
                return Err(Error::NotMember(format!("{s} is not in the group")));
            }
        }
        Ok(self.closure_unchecked(seeds))
    }

    fn closure_unchecked(&self, seeds: &[Permutation]) -> Self {
        let mut chain = StabChain::build(self.degree, &[], &[]);
        let mut gens: Vec<Permutation> = Vec::new();
        let mut queue: VecDeque<Permutation> = VecDeque::new();
        for s in seeds {
            if chain.add_generator(s) {
                gens.push(s.clone());
                queue.push_back(s.clone());
            }
        }
        while let Some(n) = queue.pop_front() {
            for g in &self.generators {
                let c = n.conjugate_by(g);
                if chain.add_generator(&c) {
                    gens.push(c.clone());
                    queue.push_back(c);
                }
            }
        }
        self.derived_group(gens, chain)
    }

    pub fn derived_subgroup(&self) -> Self {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.closure_unchecked(&comms)
    }

    fn element_count(&self, what: &'static str) -> Result<u64> {
        match self.order.to_u64() {
            Some(n) if n <= self.limits.elements => Ok(n),
            _ => Err(Error::BoundExceeded {
                what,
                size: self.order.to_string(),
                bound: self.limits.elements,
            }),
        }
    }

    /// Every element, in chain order. Bounded by `limits().elements`.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        let n = self.element_count("element enumeration")?;
        Ok((0..n).map(|r| self.chain.unrank(r)).collect())
    }

    /// The element of rank `r` in chain order.
    pub(crate) fn element_at(&self, r: u64) -> Permutation {
        self.chain.unrank(r)
    }

    pub(crate) fn rank_of(&self, g: &Permutation) -> Option<u64> {
        self.chain.rank(g)
    }

    pub fn conjugacy_class(&self, g: &Permutation) -> Result<Vec<Permutation>> {
        self.check_degree(g)?;
        if !self.has(g) {
            return Err(Error::NotMember(format!("{g} is not in the group")));
        }
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(g.clone());
        let mut class = vec![g.clone()];
        let mut k = 0;
        while k < class.len() {
            for s in &self.generators {
                let c = class[k].conjugate_by(s);
                if !seen.contains(&c) {
                    if class.len() as u64 >= self.limits.elements {
                        return Err(Error::BoundExceeded {
                            what: "conjugacy class",
                            size: format!("more than {}", class.len()),
                            bound: self.limits.elements,
                        });
                    }
                    seen.insert(c.clone());
                    class.push(c);
                }
            }
            k += 1;
        }
        Ok(class)
    }

    /// A sublist of the generators, keeping each one not already in the
    /// group generated by those kept before it.
    pub fn reduced_generators(&self) -> Vec<Permutation> {
        let mut kept: Vec<Permutation> = Vec::new();
        let mut sub: Option<PermGroup> = None;
        for g in &self.generators {
            if g.is_identity() || sub.as_ref().is_some_and(|h| h.chain.contains(g)) {
                continue;
            }
            kept.push(g.clone());
            sub = Some(PermGroup::new(kept.clone()).expect("same degree"));
        }
        if kept.is_empty() {
            kept.push(Permutation::identity(self.degree()));
        }
        kept
    }

    /// One element per conjugacy class: the first in chain order.
    pub fn class_representatives(&self) -> Result<Vec<Permutation>> {
        let n = self.element_count("conjugacy class enumeration")?;
        let mut visited = vec![0u64; (n as usize).div_ceil(64)];
        let gens = self.reduced_generators();
        let mut reps = Vec::new();
        let mut stack = Vec::new();
        for r in 0..n {
            if visited[(r / 64) as usize] >> (r % 64) & 1 == 1 {
                continue;
            }
            visited[(r / 64) as usize] |= 1 << (r % 64);
            let g = self.chain.unrank(r);
            stack.push(g.clone());
            reps.push(g);
            while let Some(x) = stack.pop() {
                for s in &gens {
                    let c = x.conjugate_by(s);
                    let rc = self.chain.rank_member(&c);
                    let (w, b) = ((rc / 64) as usize, rc % 64);
                    if visited[w] >> b & 1 == 0 {
                        visited[w] |= 1 << b;
                        stack.push(c);
                    }
                }
            }
        }
        Ok(reps)
    }

    /// Centre of the group.
    ///
    /// A central element preserves every orbit and, on each orbit, centralizes
    /// a transitive group, so it is fixed by the image of the orbit's first
    /// point. The candidates are enumerated orbit by orbit and tested for
    /// membership; element enumeration is the fallback.
    pub fn center(&self) -> Result<Self> {
        let orbits = self.orbits();
        let mut per_orbit: Vec<Vec<Vec<(usize, usize)>>> = Vec::new();
        let mut product: u64 = 1;
        for orbit in &orbits {
            let choices = self.orbit_centralizer(orbit);
            product = product.saturating_mul(choices.len() as u64);
            per_orbit.push(choices);
        }
        let mut central = Vec::new();
        if product <= self.limits.elements {
            let mut idx = vec![0usize; per_orbit.len()];
            'outer: loop {
                let mut images = vec![0u32; self.degree];
                for (k, &i) in idx.iter().enumerate() {
                    for &(x, y) in &per_orbit[k][i] {
                        images[x] = y as u32;
                    }
                }
                let z = Permutation::from_images_unchecked(images);
                if !z.is_identity() && self.has(&z) {
                    central.push(z);
                }
                for k in 0..idx.len() {
                    idx[k] += 1;
                    if idx[k] < per_orbit[k].len() {
                        continue 'outer;
                    }
                    idx[k] = 0;
                }
                break;
            }
        } else {
            let n = self.element_count("centre computation")?;
            for r in 0..n {
                let z = self.chain.unrank(r);
                if !z.is_identity() && self.generators.iter().all(|g| z.commutes_with(g)) {
                    central.push(z);
                }
            }
        }
        let chain = StabChain::build(self.degree, &central, &[]);
        Ok(self.derived_group(central, chain))
    }

    /// Maps on `orbit` commuting with the generators, as (point, image) lists.
    fn orbit_centralizer(&self, orbit: &[usize]) -> Vec<Vec<(usize, usize)>> {
        let start = orbit[0];
        let mut out = Vec::new();
        let mut map = vec![usize::MAX; self.degree];
        for &c in orbit {
            for &x in orbit {
                map[x] = usize::MAX;
            }
            map[start] = c;
            let mut queue = vec![start];
            let mut ok = true;
            'bfs: while let Some(x) = queue.pop() {
                for g in &self.generators {
                    let (y, zy) = (g.image(x), g.image(map[x]));
                    if map[y] == usize::MAX {
                        map[y] = zy;
                        queue.push(y);
                    } else if map[y] != zy {
                        ok = false;
                        break 'bfs;
                    }
                }
            }
            if !ok {
                continue;
            }
            let mut hit = vec![false; self.degree];
            if orbit
                .iter()
                .any(|&x| std::mem::replace(&mut hit[map[x]], true))
            {
                continue;
            }
            out.push(orbit.iter().map(|&x| (x, map[x])).collect());
        }
        out
    }

    /// Transitive, and every nontrivial normal subgroup is transitive.
    ///
    /// Each nontrivial normal subgroup contains `ncl(g)` for some class
    /// representative `g != 1`, so one closure per class suffices. Primitive
    /// groups return early since their nontrivial normal subgroups are always
    /// transitive.
    pub fn is_quasiprimitive(&self) -> Result<bool> {
        if !self.is_transitive() {
            return Ok(false);
        }
        if self.is_primitive() {
            return Ok(true);
        }
        Ok(self.intransitive_normal_closure()?.is_none())
    }

    /// A non-identity element whose normal closure is intransitive.
    pub fn intransitive_normal_closure(&self) -> Result<Option<Permutation>> {
        for g in self.class_representatives()? {
            if !g.is_identity()
                && !self
                    .closure_unchecked(std::slice::from_ref(&g))
                    .is_transitive()
            {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }

    /// Faithful-or-not action on the right cosets `Hg`, coset `H` first.
    pub fn coset_action(&self, h: &PermGroup) -> Result<CosetAction> {
        if !h.is_subgroup_of(self) {
            return Err(Error::NotSubgroup(
                "a generator of H is not in G".to_string(),
            ));
        }
        let index = (&self.order / &h.order)
            .to_u64()
            .filter(|&i| i <= self.limits.elements);
        let Some(index) = index else {
            return Err(Error::BoundExceeded {
                what: "coset enumeration",
                size: (&self.order / &h.order).to_string(),
                bound: self.limits.elements,
            });
        };
        let h_orbits = h.orbits();
        let key = |g: &Permutation| -> Vec<u32> {
            let mut k = Vec::with_capacity(self.degree + h_orbits.len());
            for o in &h_orbits {
                let mut img: Vec<u32> = o.iter().map(|&x| g.image(x) as u32).collect();
                img.sort_unstable();
                k.extend(img);
                k.push(u32::MAX);
            }
            k
        };
        let mut reps = vec![Permutation::identity(self.degree)];
        let mut inv_reps = vec![Permutation::identity(self.degree)];
        let mut buckets: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
        buckets.insert(key(&reps[0]), vec![0]);
        let mut images: Vec<Vec<u32>> = vec![Vec::new(); self.generators.len()];
        let mut k = 0;
        while k < reps.len() {
            for (s, gen) in self.generators.iter().enumerate() {
                let g = reps[k].then(gen);
                let bucket = buckets.entry(key(&g)).or_default();
                let found = bucket
                    .iter()
                    .copied()
                    .find(|&j| h.has(&g.then(&inv_reps[j])));
                let j = match found {
                    Some(j) => j,
                    None => {
                        let j = reps.len();
                        bucket.push(j);
                        inv_reps.push(g.inverse());
                        reps.push(g);
                        j
                    }
                };
                images[s].push(j as u32);
            }
            k += 1;
        }
        debug_assert_eq!(reps.len() as u64, index);
        let gens: Vec<Permutation> = images
            .into_iter()
            .map(Permutation::from_images_unchecked)
            .collect();
        let group = Self::build(reps.len(), gens, &[]).with_limits(self.limits);
        let faithful = group.order == self.order;
        Ok(CosetAction {
            group,
            faithful,
            representatives: reps,
        })
    }

    /// Whether `G/N` is cyclic, by explicit enumeration of the quotient.
    pub fn quotient_is_cyclic(&self, n: &PermGroup) -> Result<bool> {
        if !n.is_normal_in(self) {
            return Err(if n.is_subgroup_of(self) {
                Error::NotNormal
            } else {
                Error::NotSubgroup("N is not contained in G".to_string())
            });
        }
        let index = &self.order / &n.order;
        let index = match index.to_u64() {
            Some(i) if i <= self.limits.cosets => i,
            _ => {
                return Err(Error::BoundExceeded {
                    what: "quotient enumeration",
                    size: index.to_string(),
                    bound: self.limits.cosets,
                })
            }
        };
        if index == 1 {
            return Ok(true);
        }
        // the coset action of a normal subgroup is the regular action of G/N
        let quotient = self.coset_action(n)?.group;
        Ok(quotient.elements()?.iter().any(|g| g.order() == index))
    }
}

fn check_degrees(generators: &[Permutation]) -> Result<usize> {
    let first = generators.first().ok_or(Error::EmptyGenerators)?;
    let degree = first.degree();
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }
    Ok(degree)
}

fn transposition(n: usize) -> Vec<u32> {
    let mut im: Vec<u32> = (0..n as u32).collect();
    im.swap(0, 1);
    im
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn group(gens: &[&str], n: usize) -> PermGroup {
        PermGroup::new(gens.iter().map(|g| p(g, n)).collect()).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(group(&["(1,2)", "(1,2,3,4,5)"], 5).order_u64(), Some(120));
        assert_eq!(group(&["()"], 4).order_u64(), Some(1));
        let a4 = group(&["(2,3,4)", "(1,4,3)", "(1,2,4)", "(1,3,2)"], 4);
        assert_eq!(a4.order_u64(), Some(12));
        assert_eq!(PermGroup::symmetric(7).order_u64(), Some(5040));
        assert_eq!(PermGroup::alternating(7).order_u64(), Some(2520));
    }

    #[test]
    fn empty_and_mixed_generators() {
        assert!(matches!(
            PermGroup::new(vec![]),
            Err(Error::EmptyGenerators)
        ));
        let r = PermGroup::new(vec![p("(1,2)", 2), p("(1,2)", 3)]);
        assert!(matches!(r, Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn membership() {
        let s5 = group(&["(1,2)", "(1,2,3,4,5)"], 5);
        assert!(s5.contains(&p("(1,3)(2,4)", 5)).unwrap());
        assert!(s5.contains(&Permutation::identity(5)).unwrap());
        let c3 = group(&["(1,2,3)"], 3);
        assert!(!c3.contains(&p("(1,2)", 3)).unwrap());
        assert!(c3.contains(&p("(1,2)", 4)).is_err());
    }

    #[test]
    fn orbits_and_stabilizers() {
        let v4 = group(&["(1,2)(3,4)", "(1,3)(2,4)"], 4);
        assert_eq!(v4.orbit(0).unwrap(), vec![0, 1, 2, 3]);
        assert!(v4.is_transitive());
        let t = group(&["(1,2)"], 3);
        assert_eq!(t.orbit(2).unwrap(), vec![2]);
        assert!(!t.is_transitive());
        assert!(t.orbit(3).is_err());
        let s5 = PermGroup::symmetric(5);
        let st = s5.stabilizer(3).unwrap();
        assert_eq!(st.order_u64(), Some(24));
        assert!(st.generators().iter().all(|g| g.image(3) == 3));
        assert!(PermGroup::trivial(1).is_transitive());
    }

    #[test]
    fn derived_and_closure() {
        let s5 = PermGroup::symmetric(5);
        assert_eq!(s5.derived_subgroup().order_u64(), Some(60));
        assert!(group(&["(1,2,3)"], 3).derived_subgroup().is_trivial());
        let a4 = group(&["(2,3,4)", "(1,4,3)"], 4);
        let d = a4.derived_subgroup();
        assert_eq!(d.order_u64(), Some(4));
        assert!(d.is_normal_in(&a4));
        assert_eq!(
            s5.normal_closure(&[p("(1,2)", 5)]).unwrap().order_u64(),
            Some(120)
        );
        assert!(s5
            .normal_closure(&[Permutation::identity(5)])
            .unwrap()
            .is_trivial());
        let v = a4.normal_closure(&[p("(1,2)(3,4)", 4)]).unwrap();
        assert_eq!(v.order_u64(), Some(4));
        assert!(a4.normal_closure(&[p("(1,2)", 4)]).is_err());
    }

    #[test]
    fn centres() {
        assert!(PermGroup::symmetric(5).center().unwrap().is_trivial());
        assert_eq!(
            group(&["(1,2,3)"], 3).center().unwrap().order_u64(),
            Some(3)
        );
        let v4 = group(&["(1,2)(3,4)", "(1,3)(2,4)"], 4);
        assert_eq!(v4.center().unwrap().order_u64(), Some(4));
        // intransitive: S3 on {1,2,3} times C2 on {4,5}
        let g = group(&["(1,2)", "(1,2,3)", "(4,5)"], 5);
        let z = g.center().unwrap();
        assert_eq!(z.order_u64(), Some(2));
        assert!(z.contains(&p("(4,5)", 5)).unwrap());
    }

    #[test]
    fn classes() {
        let s5 = PermGroup::symmetric(5);
        assert_eq!(s5.conjugacy_class(&p("(1,2)", 5)).unwrap().len(), 10);
        assert_eq!(
            s5.conjugacy_class(&Permutation::identity(5)).unwrap().len(),
            1
        );
        let a5 = PermGroup::alternating(5);
        assert_eq!(a5.conjugacy_class(&p("(1,2,3,4,5)", 5)).unwrap().len(), 12);
        assert_eq!(s5.class_representatives().unwrap().len(), 7);
        assert_eq!(a5.class_representatives().unwrap().len(), 5);
    }

    #[test]
    fn blocks_and_primitivity() {
        let v4 = group(&["(1,2)(3,4)", "(1,3)(2,4)"], 4);
        let b = v4.minimal_block_system(0, 2).unwrap();
        assert_eq!(b.classes(), &[vec![0, 2], vec![1, 3]]);
        assert!(v4.minimal_block_system(1, 1).is_err());
        assert!(PermGroup::symmetric(5).is_primitive());
        assert!(!v4.is_primitive());
        assert!(PermGroup::trivial(1).is_primitive());
    }

    #[test]
    fn coset_actions() {
        let a5 = PermGroup::alternating(5);
        let c5 = a5.subgroup(vec![p("(1,2,3,4,5)", 5)]).unwrap();
        let act = a5.coset_action(&c5).unwrap();
        assert_eq!(act.group.degree(), 12);
        assert!(act.faithful);
        assert_eq!(act.group.order_u64(), Some(60));
        assert!(act.group.is_transitive());
        assert!(!act.group.is_primitive());
        assert_eq!(a5.coset_action(&a5).unwrap().group.degree(), 1);
        let s5 = PermGroup::symmetric(5);
        let nat = s5.coset_action(&s5.stabilizer(0).unwrap()).unwrap();
        assert_eq!(nat.group.degree(), 5);
        assert_eq!(nat.group.order_u64(), Some(120));
        assert!(c5.coset_action(&a5).is_err());
    }

    #[test]
    fn cyclic_quotients() {
        let s5 = PermGroup::symmetric(5);
        let a5 = s5.derived_subgroup();
        assert!(s5.quotient_is_cyclic(&a5).unwrap());
        let v4 = group(&["(1,2)(3,4)", "(1,3)(2,4)"], 4);
        assert!(!v4.quotient_is_cyclic(&PermGroup::trivial(4)).unwrap());
        let a4 = group(&["(2,3,4)", "(1,4,3)"], 4);
        assert!(a4.quotient_is_cyclic(&a4.derived_subgroup()).unwrap());
        let c2 = s5.subgroup(vec![p("(1,2)", 5)]).unwrap();
        assert!(matches!(s5.quotient_is_cyclic(&c2), Err(Error::NotNormal)));
    }
}
