//! Exact arithmetic in a prime field F_p.
//!
//! Scalars are canonical residues in `[0, p)`. Every operation reduces, so
//! equality is plain integer equality and serialization is a bare integer.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A prime field F_p, `p >= 2`. Primality is checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Field {
    p: u64,
}

/// An element of F_p, stored as the canonical residue.
pub type Scalar = u64;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(Field { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, a: i128) -> Scalar {
        let p = self.p as i128;
        (((a % p) + p) % p) as Scalar
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u128 * b as u128) % self.p as u128) as Scalar
    }

    pub fn pow(&self, mut base: Scalar, mut exp: u64) -> Scalar {
        let mut acc: Scalar = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat; zero has none.
    pub fn inv(&self, a: Scalar) -> Result<Scalar> {
        if a.is_multiple_of(self.p) {
            return Err(Error::InvalidInput("inverse of zero".into()));
        }
        Ok(self.pow(a, self.p - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Scalar) -> u64 {
        assert!(!a.is_multiple_of(self.p), "order of zero");
        let mut x = a % self.p;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }
}

/// The smallest element of F_p of multiplicative order exactly `n`.
///
/// Deterministic tie-break (smallest) keeps structure constants reproducible.
pub fn primitive_root_of_unity(f: &Field, n: u64) -> Result<Scalar> {
    let p = f.modulus();
    if n == 0 || !(p - 1).is_multiple_of(n) {
        return Err(Error::NoSuchRoot { p, n });
    }
    for a in 1..p {
        if f.order(a) == n {
            return Ok(a);
        }
    }
    Err(Error::NoSuchRoot { p, n })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_init_rejects_composites() {
        assert!(Field::new(4).is_err());
        assert!(Field::new(1).is_err());
        assert!(Field::new(5).is_ok());
    }

    #[test]
    fn inverse_pairs() {
        let f = Field::new(5).unwrap();
        assert_eq!(f.mul(2, 3), 1);
        let f7 = Field::new(7).unwrap();
        // brute-force oracle: the k with 3k = 1 mod 7
        let expect = (1..7).find(|&k| (3 * k) % 7 == 1).unwrap();
        assert_eq!(f7.inv(3).unwrap(), expect);
        assert_eq!(expect, 5);
    }

    #[test]
    fn roots_of_unity() {
        let f = Field::new(5).unwrap();
        // exhaustion oracle over F_5^*: ord(2)=4, ord(3)=4, ord(4)=2
        assert_eq!(primitive_root_of_unity(&f, 4).unwrap(), 2);
        assert_eq!(primitive_root_of_unity(&f, 2).unwrap(), 4);
        assert_eq!(primitive_root_of_unity(&f, 1).unwrap(), 1);
        assert!(primitive_root_of_unity(&f, 3).is_err());
    }

    #[test]
    fn root_order_contract() {
        for p in [5u64, 13, 17, 31] {
            let f = Field::new(p).unwrap();
            let mut n = 1;
            while n < p {
                if (p - 1) % n == 0 {
                    let z = primitive_root_of_unity(&f, n).unwrap();
                    assert_eq!(f.pow(z, n), 1);
                    for d in 1..n {
                        if n % d == 0 {
                            assert_ne!(f.pow(z, d), 1, "p={p} n={n} d={d}");
                        }
                    }
                }
                n += 1;
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for p in [2u64, 3, 5, 7, 11, 13, 31] {
            let f = Field::new(p).unwrap();
            for a in 0..p {
                for b in 0..p {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for c in 0..p {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
        }
    }
}
