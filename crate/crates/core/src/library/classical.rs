//! Classical groups in small dimension, built from their natural modules.

use super::projective::{Mat, ProjectiveSpace};
use crate::perm::Permutation;

/// Restricts `g` to an invariant set of points, relabeled `0..points.len()`.
pub fn restrict(g: &Permutation, points: &[usize]) -> Permutation {
    let mut label = vec![u32::MAX; g.degree()];
    for (i, &p) in points.iter().enumerate() {
        label[p] = i as u32;
    }
    let images = points.iter().map(|&p| label[g.image(p)]).collect();
    Permutation::from_images(images).expect("points form an invariant set")
}

/// `Sp(6,2)` on the quadratic forms polarizing to its symplectic form:
/// returns generators on the 28 forms of minus type and the 36 of plus type.
pub fn sp62_on_forms() -> (Vec<Permutation>, Vec<Permutation>) {
    let bit = |x: u32, i: u32| (x >> i) & 1;
    let b = |x: u32, y: u32| -> u32 {
        (0..3).fold(0, |acc, k| {
            acc ^ (bit(x, 2 * k) & bit(y, 2 * k + 1)) ^ (bit(x, 2 * k + 1) & bit(y, 2 * k))
        })
    };
    let q0 = |x: u32| -> u32 { (0..3).fold(0, |acc, k| acc ^ (bit(x, 2 * k) & bit(x, 2 * k + 1))) };
    // Q_a(x) = Q_0(x) + B(a, x), stored as a 64-bit truth table
    let table =
        |f: &dyn Fn(u32) -> u32| -> u64 { (0..64).fold(0u64, |acc, x| acc | (f(x) as u64) << x) };
    let forms: Vec<u64> = (0..64).map(|a| table(&|x| q0(x) ^ b(a, x))).collect();
    let minus: Vec<u32> = (0..64).filter(|&a| q0(a) == 1).collect();
    let plus: Vec<u32> = (0..64).filter(|&a| q0(a) == 0).collect();
    let mut gens_minus = Vec::new();
    let mut gens_plus = Vec::new();
    for v in 1..64u32 {
        let t = |x: u32| if b(x, v) == 1 { x ^ v } else { x };
        let image = |a: u32| -> u32 {
            let moved = table(&|x| (forms[a as usize] >> t(x)) as u32 & 1);
            forms.iter().position(|&f| f == moved).unwrap() as u32
        };
        let on = |set: &[u32]| -> Permutation {
            let images = set
                .iter()
                .map(|&a| set.iter().position(|&c| c == image(a)).unwrap() as u32)
                .collect();
            Permutation::from_images(images).unwrap()
        };
        gens_minus.push(on(&minus));
        gens_plus.push(on(&plus));
    }
    (gens_minus, gens_plus)
}

/// The orthogonal group of `x_1^2 + .. + x_5^2` over `GF(3)`, generated by
/// reflections, acting on the points of `PG(4,3)`.
pub struct Orthogonal53 {
    pub space: ProjectiveSpace,
    pub reflections: Vec<Permutation>,
}

impl Default for Orthogonal53 {
    fn default() -> Self {
        Self::new()
    }
}

impl Orthogonal53 {
    pub fn new() -> Self {
        let space = ProjectiveSpace::new(3, 5);
        let mut reflections = Vec::new();
        for v in &space.points {
            let bvv = Self::form(v);
            if bvv == 0 {
                continue;
            }
            // x ↦ x - 2 B(x,v)/B(v,v) v; over GF(3), -2 = 1
            let inv = if bvv == 1 { 1 } else { 2 };
            let m: Mat = (0..5)
                .map(|i| {
                    (0..5)
                        .map(|j| (usize::from(i == j) + v[i] * inv * v[j]) % 3)
                        .collect()
                })
                .collect();
            reflections.push(space.matrix_perm(&m));
        }
        Orthogonal53 { space, reflections }
    }

    pub fn bilinear(x: &[usize], y: &[usize]) -> usize {
        x.iter().zip(y).map(|(a, b)| a * b).sum::<usize>() % 3
    }

    pub fn form(x: &[usize]) -> usize {
        Self::bilinear(x, x)
    }

    /// Point indices with the given value of the form (the value is only
    /// defined up to squares, which are 1 in `GF(3)`).
    pub fn points_with_form(&self, value: usize) -> Vec<usize> {
        (0..self.space.len())
            .filter(|&i| Self::form(&self.space.points[i]) == value)
            .collect()
    }

    /// Totally singular lines, each as a sorted set of four point indices.
    pub fn singular_lines(&self) -> Vec<Vec<usize>> {
        let iso = self.points_with_form(0);
        let mut lines: Vec<Vec<usize>> = Vec::new();
        for (i, &a) in iso.iter().enumerate() {
            for &b in &iso[i + 1..] {
                let (va, vb) = (&self.space.points[a], &self.space.points[b]);
                if Self::bilinear(va, vb) != 0 {
                    continue;
                }
                let mut line: Vec<usize> = (0..3)
                    .map(|c| {
                        let w: Vec<usize> =
                            va.iter().zip(vb).map(|(x, y)| (x * c + y) % 3).collect();
                        self.space.point(&w)
                    })
                    .chain(std::iter::once(a))
                    .collect();
                line.sort_unstable();
                line.dedup();
                if !lines.contains(&line) {
                    lines.push(line);
                }
            }
        }
        lines.sort();
        lines
    }
}

/// Action of point permutations on a family of point sets.
pub fn on_sets(g: &Permutation, sets: &[Vec<usize>]) -> Permutation {
    let images = sets
        .iter()
        .map(|s| {
            let mut img: Vec<usize> = s.iter().map(|&p| g.image(p)).collect();
            img.sort_unstable();
            sets.iter()
                .position(|t| *t == img)
                .expect("invariant family") as u32
        })
        .collect();
    Permutation::from_images(images).unwrap()
}

/// `SU(3,3)` from unitary transvections for `x_1 x̄_1 + x_2 x̄_2 + x_3 x̄_3`
/// on `PG(2,9)`, plus the Frobenius map. Returns the space, the transvection
/// permutations and the Frobenius permutation.
pub fn unitary33() -> (ProjectiveSpace, Vec<Permutation>, Permutation) {
    let space = ProjectiveSpace::new(9, 3);
    let f = space.field.clone();
    let conj = |a: usize| f.pow(a, 3);
    let herm = |x: &[usize], y: &[usize]| -> usize {
        x.iter()
            .zip(y)
            .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, conj(b))))
    };
    // trace-zero scalars: a + a^3 = 0
    let scalars: Vec<usize> = (1..9).filter(|&a| f.add(a, conj(a)) == 0).collect();
    let mut gens = Vec::new();
    for v in space.points.iter().filter(|v| herm(v, v) == 0) {
        for &a in &scalars {
            // x ↦ x + a H(x,v) v, so M[i][j] = δ_ij + a v̄_i v_j
            let m: Mat = (0..3)
                .map(|i| {
                    (0..3)
                        .map(|j| f.add(usize::from(i == j), f.mul(a, f.mul(conj(v[i]), v[j]))))
                        .collect()
                })
                .collect();
            gens.push(space.matrix_perm(&m));
        }
    }
    let frob = space.frobenius_perm();
    (space, gens, frob)
}

/// Isotropic and non-isotropic points of `PG(2,9)` for the hermitian form.
pub fn unitary_point_split(space: &ProjectiveSpace) -> (Vec<usize>, Vec<usize>) {
    let f = &space.field;
    let norm = |x: &[usize]| {
        x.iter()
            .fold(0, |acc, &a| f.add(acc, f.mul(a, f.pow(a, 3))))
    };
    (0..space.len()).partition(|&i| norm(&space.points[i]) == 0)
}
