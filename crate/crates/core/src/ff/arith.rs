//! Machine-word integer helpers: modular arithmetic, primality and trial
//! factorization, plus a minimal multi-limb natural number used only as an
//! exponent (field cardinalities of large extensions overflow `u64`).

use std::cmp::Ordering;

/// Largest prime accepted as a characteristic: products of two residues must
/// stay below `2^63`.
pub const MAX_CHARACTERISTIC: u64 = 3_037_000_499;

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse modulo `p` by the extended Euclidean algorithm; `None` when
/// `gcd(a, p) != 1`.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(p as i128) as u64)
}

/// Reduce a signed integer into `[0, p)`.
pub fn reduce_i64(v: i64, p: u64) -> u64 {
    (v as i128).rem_euclid(p as i128) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, primes in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors of `n`.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// All positive divisors of `n`, sorted.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Splits `q = p^d`; `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, d)] => Some((*p, *d)),
        _ => None,
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Arbitrary-size natural number, little-endian 64-bit limbs.
///
/// Only what exponentiation needs: construction from powers, small
/// additions and subtractions, shifts and bit access.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Natural {
    limbs: Vec<u64>,
}

impl Natural {
    pub fn zero() -> Self {
        Natural { limbs: Vec::new() }
    }

    pub fn from_u64(v: u64) -> Self {
        let mut n = Natural { limbs: vec![v] };
        n.trim();
        n
    }

    /// `base^exp`.
    pub fn pow(base: u64, exp: u32) -> Self {
        let mut acc = Natural::from_u64(1);
        for _ in 0..exp {
            acc = acc.mul_small(base);
        }
        acc
    }

    fn trim(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn to_u64(&self) -> Option<u64> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0]),
            _ => None,
        }
    }

    pub fn mul_small(&self, m: u64) -> Self {
        let mut carry = 0u128;
        let mut limbs = Vec::with_capacity(self.limbs.len() + 1);
        for &l in &self.limbs {
            let v = l as u128 * m as u128 + carry;
            limbs.push(v as u64);
            carry = v >> 64;
        }
        if carry > 0 {
            limbs.push(carry as u64);
        }
        let mut n = Natural { limbs };
        n.trim();
        n
    }

    pub fn add_small(&self, a: u64) -> Self {
        let mut limbs = self.limbs.clone();
        let mut carry = a;
        for l in limbs.iter_mut() {
            if carry == 0 {
                break;
            }
            let (v, o) = l.overflowing_add(carry);
            *l = v;
            carry = o as u64;
        }
        if carry > 0 {
            limbs.push(carry);
        }
        Natural { limbs }
    }

    /// `self - a`; panics on underflow.
    pub fn sub_small(&self, a: u64) -> Self {
        let mut limbs = self.limbs.clone();
        let mut borrow = a;
        for l in limbs.iter_mut() {
            if borrow == 0 {
                break;
            }
            let (v, o) = l.overflowing_sub(borrow);
            *l = v;
            borrow = o as u64;
        }
        assert!(borrow == 0, "Natural underflow");
        let mut n = Natural { limbs };
        n.trim();
        n
    }

    pub fn bits(&self) -> usize {
        match self.limbs.last() {
            None => 0,
            Some(&top) => 64 * (self.limbs.len() - 1) + (64 - top.leading_zeros() as usize),
        }
    }

    pub fn bit(&self, i: usize) -> bool {
        self.limbs.get(i / 64).is_some_and(|l| (l >> (i % 64)) & 1 == 1)
    }

    pub fn trailing_zeros(&self) -> usize {
        for (i, &l) in self.limbs.iter().enumerate() {
            if l != 0 {
                return 64 * i + l.trailing_zeros() as usize;
            }
        }
        0
    }

    pub fn shr(&self, s: usize) -> Self {
        let limb_shift = s / 64;
        let bit_shift = s % 64;
        if limb_shift >= self.limbs.len() {
            return Natural::zero();
        }
        let src = &self.limbs[limb_shift..];
        let mut limbs = Vec::with_capacity(src.len());
        for i in 0..src.len() {
            let lo = src[i] >> bit_shift;
            let hi = if bit_shift > 0 && i + 1 < src.len() {
                src[i + 1] << (64 - bit_shift)
            } else {
                0
            };
            limbs.push(lo | hi);
        }
        let mut n = Natural { limbs };
        n.trim();
        n
    }

    pub fn is_even(&self) -> bool {
        !self.bit(0)
    }
}

impl PartialOrd for Natural {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Natural {
    fn cmp(&self, other: &Self) -> Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}
