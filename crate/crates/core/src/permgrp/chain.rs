//! Base and strong generating set, built by deterministic Schreier–Sims.
//!
//! Level `i` holds the strong generators fixing the first `i` base points, the
//! orbit of the `i`-th base point under them, and a transversal. Base points
//! are taken as the smallest point moved by the generator that needs one.

use num_bigint::BigUint;

use crate::perm::Permutation;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<u32>,
    /// point -> position in `orbit`, or `NONE`.
    pub position: Vec<u32>,
    /// `transversal[k]` maps `base` to `orbit[k]`.
    pub transversal: Vec<Permutation>,
    pub inv_transversal: Vec<Permutation>,
    /// For generator `s`, orbit positions `< tested[s]` have had their
    /// Schreier generator sifted.
    tested: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut position = vec![NONE; degree];
        position[base] = 0;
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base as u32],
            position,
            transversal: vec![Permutation::identity(degree)],
            inv_transversal: vec![Permutation::identity(degree)],
            tested: Vec::new(),
        }
    }

    fn add_gen(&mut self, g: Permutation) {
        self.gens.push(g);
        self.tested.push(0);
        self.extend_orbit();
    }

    fn extend_orbit(&mut self) {
        let mut k = 0;
        while k < self.orbit.len() {
            let beta = self.orbit[k] as usize;
            for s in 0..self.gens.len() {
                let gamma = self.gens[s].image(beta);
                if self.position[gamma] == NONE {
                    self.position[gamma] = self.orbit.len() as u32;
                    self.orbit.push(gamma as u32);
                    let u = self.transversal[k].then(&self.gens[s]);
                    self.inv_transversal.push(u.inverse());
                    self.transversal.push(u);
                }
            }
            k += 1;
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain for `<gens>` whose base starts with `prefix`.
    pub fn build(degree: usize, gens: &[Permutation], prefix: &[usize]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        let gens: Vec<&Permutation> = gens.iter().filter(|g| !g.is_identity()).collect();
        for g in &gens {
            if chain.base().iter().all(|&b| g.image(b) == b) {
                let b = g.smallest_moved_point().expect("non-identity");
                chain.levels.push(Level::new(b, degree));
            }
        }
        for g in gens {
            for i in 0..chain.levels.len() {
                chain.levels[i].add_gen(g.clone());
                let b = chain.levels[i].base;
                if g.image(b) != b {
                    break;
                }
            }
        }
        chain.complete();
        chain
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| {
            acc * BigUint::from(l.orbit.len())
        })
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Sifts `g` starting at level `from`. Returns the residue and the level
    /// at which it dropped out (`levels.len()` when it passed every level).
    pub fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.image(level.base);
            let pos = level.position[beta];
            if pos == NONE {
                return (h, i);
            }
            if pos != 0 {
                h = h.then(&level.inv_transversal[pos as usize]);
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (h, level) = self.sift(g, 0);
        level == self.levels.len() && h.is_identity()
    }

    /// Adds a generator to a complete chain and restores completeness.
    /// Returns false when `g` was already a member.
    pub fn add_generator(&mut self, g: &Permutation) -> bool {
        if self.contains(g) {
            return false;
        }
        let mut placed = false;
        for i in 0..self.levels.len() {
            self.levels[i].add_gen(g.clone());
            let b = self.levels[i].base;
            if g.image(b) != b {
                placed = true;
                break;
            }
        }
        if !placed {
            let b = g
                .smallest_moved_point()
                .expect("non-member is not the identity");
            let mut level = Level::new(b, self.degree);
            level.add_gen(g.clone());
            self.levels.push(level);
        }
        self.complete();
        true
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            match self.find_missing(li) {
                Some((h, j)) => {
                    for lvl in li + 1..=j {
                        if lvl == self.levels.len() {
                            let b = h.smallest_moved_point().expect("residue is not identity");
                            self.levels.push(Level::new(b, self.degree));
                        }
                        self.levels[lvl].add_gen(h.clone());
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    /// Finds a Schreier generator at level `i` that does not sift through the
    /// levels below, returning its residue and drop-out level.
    fn find_missing(&mut self, i: usize) -> Option<(Permutation, usize)> {
        let nlevels = self.levels.len();
        let ngens = self.levels[i].gens.len();
        for s in 0..ngens {
            while self.levels[i].tested[s] < self.levels[i].orbit.len() {
                let level = &self.levels[i];
                let k = level.tested[s];
                let beta = level.orbit[k] as usize;
                let gen = &level.gens[s];
                let gamma = gen.image(beta);
                let back = &level.inv_transversal[level.position[gamma] as usize];
                let h = level.transversal[k].then(gen).then(back);
                self.levels[i].tested[s] += 1;
                if h.is_identity() {
                    continue;
                }
                let (res, j) = self.sift(&h, i + 1);
                if j < nlevels || !res.is_identity() {
                    // retest after the lower levels grow
                    self.levels[i].tested[s] -= 1;
                    return Some((res, j));
                }
            }
        }
        None
    }

    /// The chain of the stabilizer of the first `skip` base points.
    pub fn tail(&self, skip: usize) -> StabChain {
        StabChain {
            degree: self.degree,
            levels: self.levels[skip.min(self.levels.len())..].to_vec(),
        }
    }

    /// Element with the given coordinates: `coords[i]` indexes the orbit of
    /// level `i`. Elements are `u_{k-1} ... u_1 u_0` in left-to-right order.
    pub fn element(&self, coords: &[usize]) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for (level, &c) in self.levels.iter().zip(coords).rev() {
            if c != 0 {
                g = g.then(&level.transversal[c]);
            }
        }
        g
    }

    /// Mixed-radix rank of a member in `0..order` (inverse of the coordinate
    /// enumeration). `None` for non-members.
    pub fn rank(&self, g: &Permutation) -> Option<u64> {
        let mut h = g.clone();
        let mut rank = 0u64;
        let mut radix = 1u64;
        for level in &self.levels {
            let pos = level.position[h.image(level.base)];
            if pos == NONE {
                return None;
            }
            rank += radix * pos as u64;
            radix *= level.orbit.len() as u64;
            if pos != 0 {
                h = h.then(&level.inv_transversal[pos as usize]);
            }
        }
        h.is_identity().then_some(rank)
    }

    /// Rank of an element known to be in the group. Follows only the base
    /// points, so nothing is allocated.
    pub fn rank_member(&self, g: &Permutation) -> u64 {
        let mut chosen: Vec<usize> = Vec::with_capacity(self.levels.len());
        let mut rank = 0u64;
        let mut radix = 1u64;
        for level in &self.levels {
            let mut x = g.image(level.base);
            for (prev, &pos) in self.levels.iter().zip(&chosen) {
                x = prev.inv_transversal[pos].image(x);
            }
            let pos = level.position[x] as usize;
            rank += radix * pos as u64;
            radix *= level.orbit.len() as u64;
            chosen.push(pos);
        }
        rank
    }

    pub fn unrank(&self, mut rank: u64) -> Permutation {
        let coords: Vec<usize> = self
            .levels
            .iter()
            .map(|l| {
                let len = l.orbit.len() as u64;
                let c = (rank % len) as usize;
                rank /= len;
                c
            })
            .collect();
        self.element(&coords)
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }
}
