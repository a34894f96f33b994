//! Arithmetic in GF(2^m) for 2 <= m <= 31.
//!
//! Elements are bitmasks of polynomials of degree < m over GF(2), reduced by
//! an explicit irreducible modulus. Multiplication is shift-and-xor with
//! modular reduction; for m <= 16 a context additionally carries log/antilog
//! tables, which give identical results and make powers O(1).

use std::fmt;
use std::ops::{Add, AddAssign};
use std::sync::Arc;

use thiserror::Error;

use crate::gf2;

/// Largest extension degree supported by the 32-bit element representation.
pub const MAX_DEGREE: u32 = 31;

/// Largest degree for which log/antilog tables are built.
const TABLE_DEGREE_LIMIT: u32 = 16;

/// Smallest irreducible polynomial of each degree 2..=31, as a bitmask with
/// bit m set.
const DEFAULT_MODULI: [u64; 30] = [
    0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11B, 0x203, 0x409, 0x805, 0x1009, 0x201B, 0x4021, 0x8003,
    0x1002B, 0x20009, 0x40009, 0x80027, 0x100009, 0x200005, 0x400003, 0x800021, 0x100001B,
    0x2000009, 0x400001B, 0x8000027, 0x10000003, 0x20000005, 0x40000003, 0x80000009,
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("extension degree {0} outside supported range 2..=31")]
    DegreeOutOfRange(u32),
    #[error("modulus {modulus:#X} does not have degree {m}")]
    ModulusDegree { m: u32, modulus: u64 },
    #[error("modulus {0:#X} is reducible over GF(2)")]
    Reducible(u64),
    #[error("cannot parse modulus {0:?} as a hexadecimal bitmask")]
    ParseModulus(String),
    #[error("value {value:#X} is not an element of GF(2^{m})")]
    NotAnElement { value: u64, m: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("zero raised to a negative power")]
    ZeroNegativePower,
    #[error("root of degree {k} is not unique: gcd({k}, {order}) != 1")]
    NotCoprime { k: u64, order: u64 },
}

/// An element of GF(2^m), stored as its coordinate bitmask in the power basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

// Addition in characteristic 2 is xor.
impl Add for Fe {
    type Output = Fe;

    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Fe) -> Fe {
        Fe(self.0 ^ rhs.0)
    }
}

impl AddAssign for Fe {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Fe) {
        self.0 ^= rhs.0;
    }
}

impl serde::Serialize for Fe {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#X}", self.0)
    }
}

#[derive(Debug)]
struct LogTables {
    /// exp[i] = g^i for i in 0..2(q-1), so sums of two logs need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Immutable description of GF(2^m). Cloning is cheap.
#[derive(Clone)]
pub struct FieldCtx {
    m: u32,
    modulus: u64,
    trace_mask: u32,
    tables: Option<Arc<LogTables>>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("m", &self.m)
            .field("modulus", &format_args!("{:#X}", self.modulus))
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

/// The fixed default modulus for degree `m`: the smallest irreducible
/// polynomial of that degree.
pub fn default_modulus(m: u32) -> Result<u64, FieldError> {
    if !(2..=MAX_DEGREE).contains(&m) {
        return Err(FieldError::DegreeOutOfRange(m));
    }
    Ok(DEFAULT_MODULI[(m - 2) as usize])
}

/// Parses a modulus written as a hexadecimal bitmask, with or without `0x`.
pub fn parse_modulus(text: &str) -> Result<u64, FieldError> {
    let t = text.trim();
    let digits = t
        .strip_prefix("0x")
        .or_else(|| t.strip_prefix("0X"))
        .unwrap_or(t);
    u64::from_str_radix(digits, 16).map_err(|_| FieldError::ParseModulus(text.to_string()))
}

pub fn format_modulus(modulus: u64) -> String {
    format!("{modulus:#X}")
}

/// Parses a field element written in hexadecimal (`0x` prefix optional).
pub fn parse_element(text: &str) -> Option<u64> {
    let t = text.trim();
    let digits = t
        .strip_prefix("0x")
        .or_else(|| t.strip_prefix("0X"))
        .unwrap_or(t);
    u64::from_str_radix(digits, 16).ok()
}

/// Carry-less product of two polynomials of degree < 32.
#[inline]
fn clmul(a: u32, b: u32) -> u64 {
    let a = a as u64;
    let mut b = b;
    let mut r = 0u64;
    while b != 0 {
        let i = b.trailing_zeros();
        r ^= a << i;
        b &= b - 1;
    }
    r
}

#[inline]
fn poly_degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

fn poly_rem(mut a: u64, f: u64) -> u64 {
    let df = poly_degree(f);
    while a != 0 && poly_degree(a) >= df {
        a ^= f << (poly_degree(a) - df);
    }
    a
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

fn poly_mulmod(a: u64, b: u64, f: u64) -> u64 {
    poly_rem(clmul(a as u32, b as u32), f)
}

/// Ben-Or irreducibility test: f of degree m is irreducible iff
/// gcd(x^(2^i) - x, f) = 1 for 1 <= i <= m/2.
pub fn is_irreducible(f: u64) -> bool {
    if f < 4 {
        return false;
    }
    let m = poly_degree(f);
    if m > MAX_DEGREE as i32 {
        return false;
    }
    let x = 2u64;
    let mut t = x;
    for _ in 1..=m / 2 {
        t = poly_mulmod(t, t, f);
        if poly_gcd(f, t ^ x) != 1 {
            return false;
        }
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Inverse of `k` modulo `n`, if it exists.
pub(crate) fn mod_inverse(k: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (n as i128, (k % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (t0, t1) = (t1, t0 - quot * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n as i128) as u64)
}

impl FieldCtx {
    /// Builds GF(2^m) over `modulus`, verifying its degree and irreducibility.
    pub fn new(m: u32, modulus: u64) -> Result<Self, FieldError> {
        if !(2..=MAX_DEGREE).contains(&m) {
            return Err(FieldError::DegreeOutOfRange(m));
        }
        if poly_degree(modulus) != m as i32 {
            return Err(FieldError::ModulusDegree { m, modulus });
        }
        if !is_irreducible(modulus) {
            return Err(FieldError::Reducible(modulus));
        }
        let mut ctx = FieldCtx {
            m,
            modulus,
            trace_mask: 0,
            tables: None,
        };
        ctx.trace_mask = (0..m)
            .filter(|&j| ctx.trace_by_definition(Fe(1 << j)) == 1)
            .fold(0u32, |acc, j| acc | (1 << j));
        if m <= TABLE_DEGREE_LIMIT {
            ctx.tables = Some(Arc::new(ctx.build_tables()));
        }
        Ok(ctx)
    }

    pub fn with_default_modulus(m: u32) -> Result<Self, FieldError> {
        Self::new(m, default_modulus(m)?)
    }

    fn build_tables(&self) -> LogTables {
        let order = self.order();
        let factors = prime_factors(order);
        let generator = (2..self.q() as u32)
            .map(Fe)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&p| self.pow_slow(g, order / p) != Fe::ONE)
            })
            .unwrap_or(Fe::ONE);
        let n = order as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; self.q() as usize];
        let mut acc = Fe::ONE;
        for i in 0..n {
            exp[i] = acc.0;
            exp[i + n] = acc.0;
            log[acc.0 as usize] = i as u32;
            acc = self.mul_slow(acc, generator);
        }
        LogTables { exp, log }
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Field size 2^m.
    #[inline]
    pub fn q(&self) -> u64 {
        1u64 << self.m
    }

    /// Order of the multiplicative group, q - 1.
    #[inline]
    pub fn order(&self) -> u64 {
        self.q() - 1
    }

    #[inline]
    pub fn is_odd_degree(&self) -> bool {
        self.m % 2 == 1
    }

    /// Checks that `value` lies in [0, q).
    pub fn elem(&self, value: u64) -> Result<Fe, FieldError> {
        if value < self.q() {
            Ok(Fe(value as u32))
        } else {
            Err(FieldError::NotAnElement { value, m: self.m })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.q() as u32).map(Fe)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (1..self.q() as u32).map(Fe)
    }

    #[inline]
    pub fn add(&self, x: Fe, y: Fe) -> Fe {
        x + y
    }

    #[inline]
    fn reduce(&self, mut r: u64) -> u32 {
        let m = self.m;
        while r >> m != 0 {
            let top = 63 - r.leading_zeros();
            r ^= self.modulus << (top - m);
        }
        r as u32
    }

    /// Shift-and-xor product, independent of the log tables.
    #[inline]
    pub fn mul_slow(&self, x: Fe, y: Fe) -> Fe {
        Fe(self.reduce(clmul(x.0, y.0)))
    }

    #[inline]
    pub fn mul(&self, x: Fe, y: Fe) -> Fe {
        match &self.tables {
            Some(t) => {
                if x.0 == 0 || y.0 == 0 {
                    Fe::ZERO
                } else {
                    Fe(t.exp[(t.log[x.0 as usize] + t.log[y.0 as usize]) as usize])
                }
            }
            None => self.mul_slow(x, y),
        }
    }

    #[inline]
    pub fn square(&self, x: Fe) -> Fe {
        self.mul(x, x)
    }

    /// Square-and-multiply, independent of the log tables.
    pub fn pow_slow(&self, x: Fe, mut n: u64) -> Fe {
        let mut base = x;
        let mut acc = Fe::ONE;
        while n != 0 {
            if n & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            n >>= 1;
        }
        acc
    }

    /// x^n for n >= 0, with 0^0 = 1.
    pub fn pow(&self, x: Fe, n: u64) -> Fe {
        if n == 0 {
            return Fe::ONE;
        }
        if x.0 == 0 {
            return Fe::ZERO;
        }
        let order = self.order();
        match &self.tables {
            Some(t) => {
                let e = (t.log[x.0 as usize] as u64 * (n % order)) % order;
                Fe(t.exp[e as usize])
            }
            None => {
                // x^(q-1) = 1 lets the exponent be reduced, keeping it nonzero.
                let e = n % order;
                self.pow_slow(x, if e == 0 { order } else { e })
            }
        }
    }

    /// x^n for any integer n; negative n means a power of the inverse.
    pub fn pow_signed(&self, x: Fe, n: i64) -> Result<Fe, FieldError> {
        if n >= 0 {
            return Ok(self.pow(x, n as u64));
        }
        if x.is_zero() {
            return Err(FieldError::ZeroNegativePower);
        }
        let order = self.order() as i128;
        let e = (n as i128).rem_euclid(order) as u64;
        Ok(self.pow(x, e))
    }

    pub fn inv(&self, x: Fe) -> Result<Fe, FieldError> {
        if x.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(x, self.order() - 1))
    }

    /// x^(2^i), the i-th Frobenius image.
    pub fn frobenius(&self, x: Fe, i: u32) -> Fe {
        let mut y = x;
        for _ in 0..i % self.m {
            y = self.square(y);
        }
        y
    }

    /// Absolute trace via the precomputed linear functional.
    #[inline]
    pub fn trace(&self, x: Fe) -> u8 {
        ((x.0 & self.trace_mask).count_ones() & 1) as u8
    }

    /// Tr(x) = x + x^2 + ... + x^(2^(m-1)), computed term by term.
    pub fn trace_by_definition(&self, x: Fe) -> u8 {
        let mut acc = Fe::ZERO;
        let mut y = x;
        for _ in 0..self.m {
            acc += y;
            y = self.mul_slow(y, y);
        }
        debug_assert!(acc.0 <= 1);
        acc.0 as u8
    }

    /// Bitmask t such that Tr(x) is the parity of x & t.
    pub fn trace_mask(&self) -> u32 {
        self.trace_mask
    }

    /// The unique square root, x^(2^(m-1)).
    pub fn sqrt(&self, x: Fe) -> Fe {
        self.frobenius(x, self.m - 1)
    }

    /// The unique k-th root when gcd(k, q-1) = 1.
    pub fn kth_root(&self, x: Fe, k: u64) -> Result<Fe, FieldError> {
        let order = self.order();
        let e = mod_inverse(k, order).ok_or(FieldError::NotCoprime { k, order })?;
        Ok(self.pow(x, e))
    }

    /// x^(num/den): the power num * den^{-1} taken modulo q - 1.
    ///
    /// `den` must be invertible modulo q - 1. For x = 0 only num >= 0 is legal,
    /// and 0^(0/den) = 1.
    pub fn frac_pow(&self, x: Fe, num: i64, den: u64) -> Result<Fe, FieldError> {
        let order = self.order();
        let dinv = mod_inverse(den, order).ok_or(FieldError::NotCoprime { k: den, order })?;
        if x.is_zero() {
            return if num < 0 {
                Err(FieldError::ZeroNegativePower)
            } else if num == 0 {
                Ok(Fe::ONE)
            } else {
                Ok(Fe::ZERO)
            };
        }
        let e = ((num as i128).rem_euclid(order as i128) as u128 * dinv as u128) % order as u128;
        Ok(self.pow(x, e as u64))
    }

    /// x^(2^-i), the inverse Frobenius applied i times.
    pub fn frobenius_inv(&self, x: Fe, i: u32) -> Fe {
        let m = self.m;
        self.frobenius(x, (m - i % m) % m)
    }

    /// Half-trace: sum of c^(4^i) for 0 <= i <= (m-1)/2. For odd m and
    /// Tr(c) = 0 it solves u^2 + u = c.
    pub fn half_trace(&self, c: Fe) -> Fe {
        let mut acc = Fe::ZERO;
        let mut y = c;
        for _ in 0..=(self.m - 1) / 2 {
            acc += y;
            y = self.square(self.square(y));
        }
        acc
    }

    /// A solution u of u^2 + u = c, or `None` when Tr(c) = 1. The other
    /// solution is u + 1.
    pub fn solve_artin_schreier(&self, c: Fe) -> Option<Fe> {
        if self.trace(c) == 1 {
            return None;
        }
        if self.is_odd_degree() {
            return Some(self.half_trace(c));
        }
        // Even degree: solve the GF(2)-linear system u -> u^2 + u.
        let columns: Vec<u32> = (0..self.m)
            .map(|j| {
                let b = Fe(1 << j);
                (self.square(b) + b).0
            })
            .collect();
        gf2::solve_columns(&columns, self.m, c.0).map(Fe)
    }

    /// Elementwise check used by property tests: Tr is F2-linear and
    /// Frobenius-invariant at x.
    pub fn trace_is_consistent_at(&self, x: Fe, y: Fe) -> bool {
        self.trace(x + y) == self.trace(x) ^ self.trace(y)
            && self.trace(self.square(x)) == self.trace(x)
    }
}
