//! Arithmetic modulo an odd prime `q`.
//!
//! Elements are plain `u32` values reduced into `[0, q-1]`; all operations go
//! through a [`PrimeField`] handle so the modulus is checked once at
//! construction and never re-validated on the hot path.

use crate::error::{GaloisError, Result};

/// A field element, always reduced modulo the owning field's modulus.
pub type FieldElement = u32;

/// A prime field F_q for an odd prime `q >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    q: u32,
}

fn is_odd_prime(q: u32) -> bool {
    if q < 3 || q % 2 == 0 {
        return false;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= q as u64 {
        if q % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(q: u32) -> Result<Self> {
        if !is_odd_prime(q) {
            return Err(GaloisError::NotPrime(q));
        }
        Ok(PrimeField { q })
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a >= b {
            a - b
        } else {
            self.q - (b - a)
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    pub fn pow(&self, mut base: FieldElement, mut exp: u64) -> FieldElement {
        let mut acc: FieldElement = 1;
        base %= self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a % self.q == 0 {
            return Err(GaloisError::DivisionByZero(self.q));
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    /// Reduces a signed value into `[0, q-1]`.
    #[inline]
    pub fn reduce_i64(&self, a: i64) -> FieldElement {
        let q = self.q as i64;
        (((a % q) + q) % q) as u32
    }

    /// Multiplicative order of `a != 0`.
    pub fn order(&self, a: FieldElement) -> Result<u32> {
        if a % self.q == 0 {
            return Err(GaloisError::DivisionByZero(self.q));
        }
        let mut x = a % self.q;
        let mut ord = 1u32;
        while x != 1 {
            x = self.mul(x, a);
            ord += 1;
        }
        Ok(ord)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_primes() {
        for q in [0u32, 1, 2, 4, 9, 15, 21, 1024] {
            assert!(PrimeField::new(q).is_err(), "q = {q}");
        }
        for q in [3u32, 5, 7, 13, 29, 157, 16381, 32749] {
            assert!(PrimeField::new(q).is_ok(), "q = {q}");
        }
    }

    #[test]
    fn basic_ops_mod_13() {
        let f = PrimeField::new(13).unwrap();
        assert_eq!(f.add(5, 8), 0);
        assert_eq!(f.sub(3, 5), 11);
        assert_eq!(f.mul(7, 8), 4);
        assert_eq!(f.neg(0), 0);
        assert_eq!(f.neg(4), 9);
        assert_eq!(f.inv(1).unwrap(), 1);
        // inv(2): exhaustive search oracle for 2x = 1 mod 13
        let by_search = (1..13).find(|&x| (2 * x) % 13 == 1).unwrap();
        assert_eq!(by_search, 7);
        assert_eq!(f.inv(2).unwrap(), 7);
        assert_eq!(f.inv(0), Err(GaloisError::DivisionByZero(13)));
    }

    #[test]
    fn every_nonzero_element_inverts() {
        for q in [3u32, 13, 29, 157] {
            let f = PrimeField::new(q).unwrap();
            for a in 1..q {
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, inv), 1, "a = {a}, q = {q}");
            }
        }
    }

    #[test]
    fn reduce_signed() {
        let f = PrimeField::new(13).unwrap();
        assert_eq!(f.reduce_i64(-1), 12);
        assert_eq!(f.reduce_i64(26), 0);
        assert_eq!(f.reduce_i64(-27), 12);
    }
}
