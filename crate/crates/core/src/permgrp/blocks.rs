use std::fmt;

use crate::error::{Error, Result};

use super::PermGroup;

/// A partition of `0..degree`. Classes are sorted internally and ordered by
/// their smallest point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    degree: usize,
    classes: Vec<Vec<usize>>,
}

impl BlockSystem {
    /// Builds a partition from a class id per point.
    pub fn from_labels(labels: &[usize]) -> Self {
        let degree = labels.len();
        let mut slot = vec![usize::MAX; labels.iter().copied().max().map_or(0, |m| m + 1)];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (x, &l) in labels.iter().enumerate() {
            if slot[l] == usize::MAX {
                slot[l] = classes.len();
                classes.push(Vec::new());
            }
            classes[slot[l]].push(x);
        }
        BlockSystem { degree, classes }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// True for the one-class partition and the partition into singletons.
    pub fn is_trivial(&self) -> bool {
        self.classes.len() <= 1 || self.classes.len() == self.degree
    }

    /// Index of the class holding `x`.
    pub fn class_of(&self, x: usize) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.binary_search(&x).is_ok())
    }
}

impl fmt::Display for BlockSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str("{")?;
            for (j, x) in class.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; returns the new root if they differed.
    pub fn union(&mut self, a: usize, b: usize) -> Option<usize> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        // keep the smaller point as root so labels are stable
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        Some(lo)
    }

    pub fn labels(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|x| self.find(x)).collect()
    }
}

impl PermGroup {
    /// The finest invariant partition in which `a` and `b` share a class.
    pub fn minimal_block_system(&self, a: usize, b: usize) -> Result<BlockSystem> {
        let n = self.degree();
        for p in [a, b] {
            if p >= n {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree: n,
                });
            }
        }
        if a == b {
            return Err(Error::SamePoint);
        }
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        Ok(self.merge_closure(a, b))
    }

    fn merge_closure(&self, a: usize, b: usize) -> BlockSystem {
        let mut uf = UnionFind::new(self.degree());
        uf.union(a, b);
        let mut queue = vec![(a, b)];
        while let Some((x, y)) = queue.pop() {
            for g in self.generators() {
                let (u, v) = (g.image(x), g.image(y));
                if uf.union(u, v).is_some() {
                    queue.push((u, v));
                }
            }
        }
        BlockSystem::from_labels(&uf.labels())
    }

    /// Transitive with no nontrivial blocks. Degree 1 counts as primitive.
    pub fn is_primitive(&self) -> bool {
        let n = self.degree();
        if n == 1 {
            return true;
        }
        if !self.is_transitive() {
            return false;
        }
        (1..n).all(|b| self.merge_closure(0, b).len() == 1)
    }

    /// A nontrivial block system if one exists.
    pub fn find_block_system(&self) -> Option<BlockSystem> {
        if !self.is_transitive() {
            return None;
        }
        (1..self.degree())
            .map(|b| self.merge_closure(0, b))
            .find(|s| s.len() > 1)
    }
}
