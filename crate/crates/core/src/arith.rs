//! Integer helpers over arbitrary-precision values.
//!
//! Every numeral in the crate is an [`Int`]; convergents grow exponentially in
//! the step count, so nothing is ever narrowed to a machine word except in
//! explicitly bounded fast paths.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rational = num_rational::BigRational;

/// Largest `s >= 0` with `s * s <= n`.
pub fn isqrt(n: &Int) -> Result<Int> {
    if n.is_negative() {
        return Err(Error::domain("n >= 0", format!("isqrt of negative {n}")));
    }
    if n.is_zero() {
        return Ok(Int::zero());
    }
    if let Some(small) = n.to_u64() {
        return Ok(Int::from(isqrt_u64(small)));
    }
    // Newton from above: start at a power of two no smaller than the root.
    let bits = n.bits();
    let mut x = Int::one() << bits.div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1u32;
        if y >= x {
            return Ok(x);
        }
        x = y;
    }
}

fn isqrt_u64(n: u64) -> u64 {
    let mut s = (n as f64).sqrt() as u64;
    while s.checked_mul(s).is_none_or(|sq| sq > n) {
        s -= 1;
    }
    while (s + 1).checked_mul(s + 1).is_some_and(|sq| sq <= n) {
        s += 1;
    }
    s
}

pub fn is_perfect_square(n: &Int) -> bool {
    match isqrt(n) {
        Ok(s) => &s * &s == *n,
        Err(_) => false,
    }
}

/// Floor division for a positive divisor.
pub fn floor_div(a: &Int, b: &Int) -> Int {
    a.div_floor(b)
}

/// Splits `n > 0` as `square * square * free` with `free` squarefree.
///
/// Trial division runs only up to the cube root: the cofactor left after that
/// has at most two prime factors, so it is either squarefree or a prime square.
pub fn squarefree_split(n: &Int) -> (Int, Int) {
    debug_assert!(n.is_positive());
    if let Some(small) = n.to_u64() {
        let (s, f) = squarefree_split_u64(small);
        return (Int::from(s), Int::from(f));
    }
    let mut rest = n.clone();
    let mut square = Int::one();
    let mut free = Int::one();
    let mut p = Int::from(2u32);
    while &p * &p * &p <= rest {
        let p2 = &p * &p;
        while (&rest % &p2).is_zero() {
            rest /= &p2;
            square *= &p;
        }
        if (&rest % &p).is_zero() {
            rest /= &p;
            free *= &p;
        }
        p += if p == Int::from(2u32) { 1u32 } else { 2u32 };
    }
    let r = isqrt(&rest).expect("positive");
    if &r * &r == rest {
        square *= r;
    } else {
        free *= rest;
    }
    (square, free)
}

fn squarefree_split_u64(n: u64) -> (u64, u64) {
    let mut rest = n;
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while (p as u128) * (p as u128) * (p as u128) <= rest as u128 {
        let p2 = p * p;
        while rest.is_multiple_of(p2) {
            rest /= p2;
            square *= p;
        }
        if rest.is_multiple_of(p) {
            rest /= p;
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let r = isqrt_u64(rest);
    if r * r == rest {
        square *= r;
    } else {
        free *= rest;
    }
    (square, free)
}

pub fn sign_of(n: &Int) -> i8 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
