//! Projective spaces over small fields and the (semi)linear groups acting on
//! their points. Vectors are rows and matrices act on the right, `v ↦ vM`.

use std::collections::HashMap;

use super::field::Field;
use crate::perm::Permutation;

pub type Vector = Vec<usize>;
pub type Mat = Vec<Vec<usize>>;

#[derive(Clone, Debug)]
pub struct ProjectiveSpace {
    pub field: Field,
    pub dim: usize,
    pub points: Vec<Vector>,
    index: HashMap<Vector, usize>,
}

impl ProjectiveSpace {
    /// Points of the projective space of the `dim`-dimensional vector space.
    pub fn new(q: usize, dim: usize) -> Self {
        let field = Field::new(q);
        let mut points = Vec::new();
        for code in 1..q.pow(dim as u32) {
            let v: Vector = (0..dim).rev().map(|i| code / q.pow(i as u32) % q).collect();
            if v.iter().find(|&&c| c != 0) == Some(&1) {
                points.push(v);
            }
        }
        let index = points
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        ProjectiveSpace {
            field,
            dim,
            points,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn normalize(&self, v: &[usize]) -> Vector {
        let f = &self.field;
        let lead = *v.iter().find(|&&c| c != 0).expect("nonzero vector");
        let s = f.inv(lead);
        v.iter().map(|&c| f.mul(c, s)).collect()
    }

    pub fn point(&self, v: &[usize]) -> usize {
        self.index[&self.normalize(v)]
    }

    pub fn apply(&self, v: &[usize], m: &Mat) -> Vector {
        let f = &self.field;
        (0..self.dim)
            .map(|j| {
                v.iter()
                    .zip(m)
                    .fold(0, |acc, (&c, row)| f.add(acc, f.mul(c, row[j])))
            })
            .collect()
    }

    pub fn frobenius(&self, v: &[usize]) -> Vector {
        v.iter().map(|&c| self.field.frobenius(c)).collect()
    }

    /// Permutation of the points induced by `v ↦ vM`.
    pub fn matrix_perm(&self, m: &Mat) -> Permutation {
        let images = self
            .points
            .iter()
            .map(|v| self.point(&self.apply(v, m)) as u32)
            .collect();
        Permutation::from_images(images).expect("invertible matrix")
    }

    /// Permutation induced by the coordinatewise Frobenius map.
    pub fn frobenius_perm(&self) -> Permutation {
        let images = self
            .points
            .iter()
            .map(|v| self.point(&self.frobenius(v)) as u32)
            .collect();
        Permutation::from_images(images).expect("field automorphism")
    }

    pub fn identity(&self) -> Mat {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| usize::from(i == j)).collect())
            .collect()
    }

    /// Elementary transvections `I + a e_ij` for `a` in the additive basis;
    /// these generate `SL`.
    pub fn sl_generators(&self) -> Vec<Mat> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i == j {
                    continue;
                }
                for a in self.field.basis() {
                    let mut m = self.identity();
                    m[i][j] = a;
                    out.push(m);
                }
            }
        }
        out
    }

    /// `diag(ω, 1, .., 1)` for a primitive element `ω`.
    pub fn diagonal_generator(&self) -> Mat {
        let mut m = self.identity();
        m[0][0] = self.field.primitive_element();
        m
    }
}

/// Which extension of `PSL` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Linear {
    Psl,
    Pgl,
    Psigmal,
    Pgammal,
}

/// Generators of a projective linear group on the points of `PG(dim-1, q)`.
pub fn linear_group(space: &ProjectiveSpace, kind: Linear) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = space
        .sl_generators()
        .iter()
        .map(|m| space.matrix_perm(m))
        .collect();
    if matches!(kind, Linear::Pgl | Linear::Pgammal) {
        gens.push(space.matrix_perm(&space.diagonal_generator()));
    }
    if matches!(kind, Linear::Psigmal | Linear::Pgammal) {
        gens.push(space.frobenius_perm());
    }
    gens.retain(|g| !g.is_identity());
    gens
}
