//! Prime-field scalars and 2x2 matrices over `F_q`.
//!
//! Entries are stored as `u16` residues, so `q <= 65521`; every product fits
//! in a `u32` before reduction.

use std::fmt;

use crate::error::{Error, Result};
use crate::knot::TorusKnotParams;

/// Largest prime below `2^16`.
pub const MAX_FIELD_PRIME: u64 = 65_521;

/// Row-major `[[a, b], [c, d]]` with entries reduced mod `q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mat2 {
    pub a: u16,
    pub b: u16,
    pub c: u16,
    pub d: u16,
}

impl Mat2 {
    pub const ZERO: Mat2 = Mat2 {
        a: 0,
        b: 0,
        c: 0,
        d: 0,
    };
    pub const IDENTITY: Mat2 = Mat2 {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };

    pub const fn new(a: u16, b: u16, c: u16, d: u16) -> Self {
        Self { a, b, c, d }
    }

    pub fn entries(&self) -> [u32; 4] {
        [self.a.into(), self.b.into(), self.c.into(), self.d.into()]
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    pub fn is_scalar(&self) -> bool {
        self.b == 0 && self.c == 0 && self.a == self.d
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Deterministic trial division; adequate for the field sizes used here.
pub fn is_prime(k: u64) -> bool {
    if k < 2 {
        return false;
    }
    if k.is_multiple_of(2) {
        return k == 2;
    }
    let mut d = 3;
    while d * d <= k {
        if k.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime `q <= cap` with `q = 1 (mod mn)`.
pub fn smallest_admissible_prime(params: &TorusKnotParams, cap: u64) -> Result<u64> {
    let modulus = u64::from(params.m()) * u64::from(params.n());
    let mut candidate = modulus + 1;
    while candidate <= cap {
        if is_prime(candidate) {
            return Ok(candidate);
        }
        candidate += modulus;
    }
    Err(Error::NoAdmissiblePrime { modulus, cap })
}

/// `q` prime with `q = 1 (mod mn)`: `F_q*` contains every `mn`-th root of unity
/// and the characteristic does not divide `mn`.
pub fn is_admissible(params: &TorusKnotParams, q: u64) -> bool {
    let modulus = u64::from(params.m()) * u64::from(params.n());
    is_prime(q) && (q - 1).is_multiple_of(modulus)
}

/// The prime field `F_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: u32,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if q > MAX_FIELD_PRIME {
            return Err(Error::FieldTooLarge(q));
        }
        Ok(Self { q: q as u32 })
    }

    pub fn order(&self) -> u64 {
        u64::from(self.q)
    }

    /// `|GL2(F_q)| = (q^2 - 1)(q^2 - q)`.
    pub fn gl2_order(&self) -> u128 {
        let q = u128::from(self.q);
        (q * q - 1) * (q * q - q)
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(i64::from(self.q)) as u32
    }

    #[inline]
    pub fn add(&self, x: u32, y: u32) -> u32 {
        let s = x + y;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, x: u32, y: u32) -> u32 {
        if x >= y {
            x - y
        } else {
            x + self.q - y
        }
    }

    #[inline]
    pub fn neg(&self, x: u32) -> u32 {
        if x == 0 {
            0
        } else {
            self.q - x
        }
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        (x * y) % self.q
    }

    pub fn pow(&self, x: u32, mut k: u64) -> u32 {
        let (mut base, mut acc) = (x % self.q, 1 % self.q);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `None` for zero.
    pub fn inv(&self, x: u32) -> Option<u32> {
        (!x.is_multiple_of(self.q)).then(|| self.pow(x, u64::from(self.q) - 2))
    }

    /// `1 + x + ... + x^(l-1)`.
    pub fn phi(&self, l: u32, x: u32) -> u32 {
        let (mut acc, mut p) = (0, 1 % self.q);
        for _ in 0..l {
            acc = self.add(acc, p);
            p = self.mul(p, x);
        }
        acc
    }

    pub fn mat(&self, a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        let r = |x| self.reduce(x) as u16;
        Mat2::new(r(a), r(b), r(c), r(d))
    }

    pub fn scalar(&self, x: u32) -> Mat2 {
        let x = (x % self.q) as u16;
        Mat2::new(x, 0, 0, x)
    }

    pub fn det(&self, m: &Mat2) -> u32 {
        let [a, b, c, d] = m.entries();
        self.sub(self.mul(a, d), self.mul(b, c))
    }

    pub fn trace(&self, m: &Mat2) -> u32 {
        self.add(m.a.into(), m.d.into())
    }

    pub fn is_invertible(&self, m: &Mat2) -> bool {
        self.det(m) != 0
    }

    pub fn mat_add(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        let (xs, ys) = (x.entries(), y.entries());
        let e = |i: usize| self.add(xs[i], ys[i]) as u16;
        Mat2::new(e(0), e(1), e(2), e(3))
    }

    pub fn mat_sub(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        let (xs, ys) = (x.entries(), y.entries());
        let e = |i: usize| self.sub(xs[i], ys[i]) as u16;
        Mat2::new(e(0), e(1), e(2), e(3))
    }

    #[inline]
    pub fn mat_mul(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        let [a, b, c, d] = x.entries().map(u64::from);
        let [e, f, g, h] = y.entries().map(u64::from);
        let q = u64::from(self.q);
        Mat2::new(
            ((a * e + b * g) % q) as u16,
            ((a * f + b * h) % q) as u16,
            ((c * e + d * g) % q) as u16,
            ((c * f + d * h) % q) as u16,
        )
    }

    /// `M^k` by square-and-multiply; `M^0 = I`.
    pub fn mat_pow(&self, m: &Mat2, mut k: u64) -> Mat2 {
        let (mut base, mut acc) = (*m, Mat2::IDENTITY);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mat_mul(&acc, &base);
            }
            base = self.mat_mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// `I + M + ... + M^(l-1)`, accumulated directly so singular `M - I` is fine.
    pub fn phi_mat(&self, l: u32, m: &Mat2) -> Mat2 {
        let (mut acc, mut p) = (Mat2::ZERO, Mat2::IDENTITY);
        for _ in 0..l {
            acc = self.mat_add(&acc, &p);
            p = self.mat_mul(&p, m);
        }
        acc
    }

    pub fn commutes(&self, x: &Mat2, y: &Mat2) -> bool {
        self.mat_mul(x, y) == self.mat_mul(y, x)
    }

    /// Characteristic polynomial has a double root: `tr^2 = 4 det`.
    pub fn has_repeated_eigenvalue(&self, m: &Mat2) -> bool {
        let tr = self.trace(m);
        self.mul(tr, tr) == self.mul(4 % self.q, self.det(m))
    }

    pub fn rank_2x2(&self, m: &Mat2) -> usize {
        if m.is_zero() {
            0
        } else if self.det(m) != 0 {
            2
        } else {
            1
        }
    }

    /// Rank of the 2x4 block matrix `[left | -right]`.
    pub fn rank_2x4(&self, left: &Mat2, right: &Mat2) -> usize {
        let mut rows = [
            [
                u32::from(left.a),
                u32::from(left.b),
                self.neg(right.a.into()),
                self.neg(right.b.into()),
            ],
            [
                u32::from(left.c),
                u32::from(left.d),
                self.neg(right.c.into()),
                self.neg(right.d.into()),
            ],
        ];
        self.rank(&mut rows)
    }

    /// Rank of the span of `{I, A, B, AB}` in the 4-dimensional matrix
    /// algebra. Rank 4 exactly when the pair has no common eigenvector over the
    /// algebraic closure.
    pub fn pair_algebra_rank(&self, a: &Mat2, b: &Mat2) -> usize {
        let ab = self.mat_mul(a, b);
        let mut rows = [
            Mat2::IDENTITY.entries(),
            a.entries(),
            b.entries(),
            ab.entries(),
        ];
        self.rank(&mut rows)
    }

    /// Fraction-free Gaussian elimination; rows are overwritten.
    pub fn rank<const C: usize>(&self, rows: &mut [[u32; C]]) -> usize {
        let mut rank = 0;
        for col in 0..C {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let (done, rest) = rows.split_at_mut(rank + 1);
            let pivot_row = &done[rank];
            let p = pivot_row[col];
            for row in rest {
                let f = row[col];
                if f == 0 {
                    continue;
                }
                for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = self.sub(self.mul(p, *x), self.mul(f, y));
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Injective code for a matrix, `((a q + b) q + c) q + d`.
    #[inline]
    pub fn encode(&self, m: &Mat2) -> u64 {
        let q = u64::from(self.q);
        let [a, b, c, d] = m.entries().map(u64::from);
        ((a * q + b) * q + c) * q + d
    }

    /// All of `GL2(F_q)` in lexicographic order of `(a, b, c, d)`.
    pub fn gl2_elements(&self) -> Vec<Mat2> {
        let q = self.q as u16;
        let mut out = Vec::with_capacity(self.gl2_order() as usize);
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    for d in 0..q {
                        let m = Mat2::new(a, b, c, d);
                        if self.is_invertible(&m) {
                            out.push(m);
                        }
                    }
                }
            }
        }
        out
    }
}
