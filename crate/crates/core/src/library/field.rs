//! Small finite fields by explicit tables.
//!
//! Elements of `GF(p^k)` are integers `0..q` read as base-`p` coefficient
//! vectors of polynomials modulo a fixed monic irreducible of degree `k`.

#[derive(Clone, Debug)]
pub struct Field {
    p: usize,
    k: usize,
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

impl Field {
    /// `GF(q)` for a prime power `q` with exponent at most 3.
    pub fn new(q: usize) -> Self {
        let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q >= 2");
        let mut k = 0;
        let mut m = q;
        while m.is_multiple_of(p) {
            m /= p;
            k += 1;
        }
        assert!(m == 1 && k <= 3, "GF({q}) is not supported");
        let modulus = irreducible(p, k);
        let digits = |a: usize| -> Vec<usize> { (0..k).map(|i| a / p.pow(i as u32) % p).collect() };
        let number = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = number(&s) as u16;
                // schoolbook product, then reduce by the monic modulus
                let mut prod = vec![0usize; 2 * k];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for deg in (k..2 * k).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, m) in modulus.iter().enumerate().take(k) {
                        let t = deg - k + i;
                        prod[t] = (prod[t] + p * p - c * m % p) % p;
                    }
                }
                mul[a * q + b] = number(&prod[..k]) as u16;
            }
        }
        Field { p, k, q, add, mul }
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no inverse");
        (1..self.q).find(|&b| self.mul(a, b) == 1).unwrap()
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// `a^p`.
    pub fn frobenius(&self, a: usize) -> usize {
        self.pow(a, self.p)
    }

    /// The additive basis `1, x, .., x^(k-1)`.
    pub fn basis(&self) -> Vec<usize> {
        (0..self.k).map(|i| self.p.pow(i as u32)).collect()
    }

    /// Least element of multiplicative order `q - 1`.
    pub fn primitive_element(&self) -> usize {
        (1..self.q)
            .find(|&a| (1..self.q - 1).all(|e| self.pow(a, e) != 1))
            .expect("the multiplicative group is cyclic")
    }
}

/// Coefficients `c_0..c_{k-1}` of a monic irreducible `x^k + Σ c_i x^i`.
/// For `k <= 3` irreducible means no root.
fn irreducible(p: usize, k: usize) -> Vec<usize> {
    if k == 1 {
        return vec![0];
    }
    for code in 0..p.pow(k as u32) {
        let c: Vec<usize> = (0..k).map(|i| code / p.pow(i as u32) % p).collect();
        let has_root = (0..p).any(|x| {
            let val = (0..k).fold(x.pow(k as u32) % p, |acc, i| {
                (acc + c[i] * x.pow(i as u32)) % p
            });
            val == 0
        });
        if !has_root {
            return c;
        }
    }
    unreachable!("an irreducible polynomial exists")
}
