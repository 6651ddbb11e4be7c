//! Small finite fields with table-based arithmetic.
//!
//! Elements are `0..q`. Prime fields use modular arithmetic; prime-power
//! fields represent elements as base-p digit strings (polynomial
//! coefficients, least significant first) reduced by a fixed irreducible
//! polynomial bundled below.

use crate::error::{Error, Result};

/// Irreducible polynomials for the prime-power fields in use, as
/// coefficient lists over F_p, constant term first, monic.
const POLYS: &[(u64, &[usize])] = &[
    (4, &[1, 1, 1]),          // x^2 + x + 1 over F2
    (8, &[1, 1, 0, 1]),       // x^3 + x + 1 over F2
    (9, &[1, 0, 1]),          // x^2 + 1 over F3
    (16, &[1, 1, 0, 0, 1]),   // x^4 + x + 1 over F2
    (25, &[1, 1, 1]),         // x^2 + x + 1 over F5
    (27, &[1, 2, 0, 1]),      // x^3 + 2x + 1 over F3
    (32, &[1, 0, 1, 0, 0, 1]), // x^5 + x^2 + 1 over F2
];

/// A finite field of order q = p^e.
#[derive(Clone, Debug)]
pub struct Gf {
    q: usize,
    p: usize,
    e: usize,
    mul: Vec<usize>,
    add: Vec<usize>,
    inv: Vec<usize>,
}

impl Gf {
    pub fn new(q: u64) -> Result<Gf> {
        let (p, e) = factor_prime_power(q).ok_or(Error::UnsupportedField(q))?;
        if e == 1 {
            return Ok(Self::build(q as usize, p as usize, 1, &[]));
        }
        let poly = POLYS
            .iter()
            .find(|(size, _)| *size == q)
            .map(|(_, poly)| *poly)
            .ok_or(Error::UnsupportedField(q))?;
        Ok(Self::build(q as usize, p as usize, e as usize, poly))
    }

    fn build(q: usize, p: usize, e: usize, poly: &[usize]) -> Gf {
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = add_digits(a, b, p, e);
                mul[a * q + b] = mul_mod(a, b, p, e, poly);
            }
        }
        let mut inv = vec![0; q];
        for a in 1..q {
            for b in 1..q {
                if mul[a * q + b] == 1 {
                    inv[a] = b;
                    break;
                }
            }
        }
        Gf {
            q,
            p,
            e,
            mul,
            add,
            inv,
        }
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn extension_degree(&self) -> usize {
        self.e
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        // The additive inverse: scan is fine at these sizes.
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no inverse");
        self.inv[a]
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut acc = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The Frobenius map a -> a^p.
    pub fn frobenius(&self, a: usize) -> usize {
        self.pow(a, self.p as u64)
    }

    /// Smallest multiplicative generator.
    pub fn generator(&self) -> usize {
        let target = (self.q - 1) as u64;
        (1..self.q)
            .find(|&g| multiplicative_order(self, g) == target)
            .expect("every finite field has a primitive element")
    }

    /// True iff `a` is a nonzero square.
    pub fn is_square(&self, a: usize) -> bool {
        a != 0 && (0..self.q).any(|b| self.mul(b, b) == a)
    }
}

fn multiplicative_order(gf: &Gf, a: usize) -> u64 {
    let mut x = a;
    let mut n = 1;
    while x != 1 {
        x = gf.mul(x, a);
        n += 1;
    }
    n
}

fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut n = q;
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            return (n == 1).then_some((p, e));
        }
        p += 1;
    }
    Some((q, 1))
}

fn add_digits(a: usize, b: usize, p: usize, e: usize) -> usize {
    if e == 1 {
        return (a + b) % p;
    }
    let mut out = 0;
    let mut scale = 1;
    let (mut x, mut y) = (a, b);
    for _ in 0..e {
        out += (x % p + y % p) % p * scale;
        x /= p;
        y /= p;
        scale *= p;
    }
    out
}

fn mul_mod(a: usize, b: usize, p: usize, e: usize, poly: &[usize]) -> usize {
    if e == 1 {
        return a * b % p;
    }
    // Schoolbook polynomial product.
    let digits = |mut v: usize| {
        let mut d = vec![0usize; e];
        for item in d.iter_mut() {
            *item = v % p;
            v /= p;
        }
        d
    };
    let (da, db) = (digits(a), digits(b));
    let mut prod = vec![0usize; 2 * e];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // Reduce by the monic irreducible polynomial.
    for i in (e..2 * e).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (j, &pc) in poly.iter().enumerate().take(e) {
            let idx = i - e + j;
            prod[idx] = (prod[idx] + (p - 1) * c * pc) % p;
        }
    }
    let mut out = 0;
    let mut scale = 1;
    for &c in prod.iter().take(e) {
        out += c * scale;
        scale *= p;
    }
    out
}
