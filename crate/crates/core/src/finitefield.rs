//! Explicit arithmetic in GF(r^f) for small prime powers.
//!
//! Elements are polynomials over GF(r) reduced modulo a fixed monic
//! irreducible of degree f, stored low-degree first. Every element also has a
//! stable integer code in `0..q` (its coefficient vector read as a base-r
//! number); the code-level operations are what the group engine uses for
//! compact, allocation-free matrix arithmetic.

use crate::error::{Error, Result};
use crate::numtheory;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

const MAX_DEGREE: usize = 20;
const BUF: usize = 2 * MAX_DEGREE;

/// An explicit finite field GF(r^f).
///
/// The modulus is the first monic irreducible of degree f in the
/// deterministic enumeration order (coefficient vectors read as base-r
/// counters), so two calls with the same parameters build identical fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    r: u64,
    f: u32,
    q: u64,
    /// Monic irreducible of degree f, low-degree first, length f + 1.
    modulus: Vec<u64>,
}

/// An element of a [`FieldSpec`]: exactly f residues mod r, low-degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }
}

fn poly_degree(p: &[u64]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` modulo the monic polynomial `m`, both over GF(r).
fn poly_rem(a: &mut Vec<u64>, m: &[u64], r: u64) {
    let md = poly_degree(m).expect("modulus is nonzero");
    while let Some(d) = poly_degree(a) {
        if d < md {
            break;
        }
        let c = a[d];
        a[d] = 0;
        for j in 0..md {
            let sub = (c * m[j]) % r;
            a[d - md + j] = (a[d - md + j] + r - sub) % r;
        }
    }
    a.truncate(md.max(1));
}

fn is_irreducible(candidate: &[u64], r: u64) -> bool {
    let f = poly_degree(candidate).unwrap();
    if candidate[0] == 0 && f > 1 {
        return false; // divisible by x
    }
    for d in 1..=f / 2 {
        let count = r.pow(d as u32);
        let mut divisor = vec![0u64; d + 1];
        divisor[d] = 1;
        for k in 0..count {
            let mut v = k;
            for c in divisor.iter_mut().take(d) {
                *c = v % r;
                v /= r;
            }
            let mut rem = candidate.to_vec();
            poly_rem(&mut rem, &divisor, r);
            if poly_degree(&rem).is_none() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(r^f), searching monic degree-f polynomials in enumeration
    /// order and taking the first irreducible as the modulus.
    pub fn new(r: u64, f: u32) -> Result<FieldSpec> {
        if !numtheory::is_prime(r) {
            return Err(Error::domain(format!("field characteristic must be prime, got {r}")));
        }
        if f == 0 || f as usize > MAX_DEGREE {
            return Err(Error::domain(format!("field degree must be in 1..={MAX_DEGREE}, got {f}")));
        }
        let q = r
            .checked_pow(f)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or_else(|| Error::domain(format!("field size {r}^{f} exceeds {MAX_FIELD_SIZE}")))?;
        let mut modulus = vec![0u64; f as usize + 1];
        modulus[f as usize] = 1;
        for k in 0..q {
            let mut v = k;
            for c in modulus.iter_mut().take(f as usize) {
                *c = v % r;
                v /= r;
            }
            if is_irreducible(&modulus, r) {
                return Ok(FieldSpec { r, f, q, modulus });
            }
        }
        unreachable!("an irreducible of every degree exists over GF({r})")
    }

    pub fn characteristic(&self) -> u64 {
        self.r
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    /// Number of elements q = r^f.
    pub fn order(&self) -> u64 {
        self.q
    }

    /// The modulus polynomial, low-degree first (length f + 1, monic).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        self.decode(0)
    }

    pub fn one(&self) -> FieldElement {
        self.decode(1)
    }

    /// Wraps a coefficient vector, validating length and ranges.
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.f as usize {
            return Err(Error::domain(format!(
                "element needs exactly {} coefficients, got {}",
                self.f,
                coeffs.len()
            )));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= self.r) {
            return Err(Error::domain(format!("coefficient {c} out of range mod {}", self.r)));
        }
        Ok(FieldElement { coeffs: coeffs.to_vec() })
    }

    /// All q elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|i| self.decode(i))
    }

    /// The integer code of an element: its coefficients read in base r.
    pub fn encode(&self, a: &FieldElement) -> u64 {
        a.coeffs.iter().rev().fold(0, |acc, &c| acc * self.r + c)
    }

    pub fn decode(&self, code: u64) -> FieldElement {
        debug_assert!(code < self.q);
        let mut coeffs = vec![0u64; self.f as usize];
        let mut v = code;
        for c in coeffs.iter_mut() {
            *c = v % self.r;
            v /= self.r;
        }
        FieldElement { coeffs }
    }

    fn digits(&self, code: u64, out: &mut [u64; BUF]) {
        let mut v = code;
        for d in out.iter_mut().take(self.f as usize) {
            *d = v % self.r;
            v /= self.r;
        }
    }

    fn pack(&self, digits: &[u64; BUF]) -> u64 {
        digits[..self.f as usize]
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.r + c)
    }

    pub fn idx_add(&self, a: u64, b: u64) -> u64 {
        let mut da = [0u64; BUF];
        let mut db = [0u64; BUF];
        self.digits(a, &mut da);
        self.digits(b, &mut db);
        for i in 0..self.f as usize {
            da[i] = (da[i] + db[i]) % self.r;
        }
        self.pack(&da)
    }

    pub fn idx_neg(&self, a: u64) -> u64 {
        let mut da = [0u64; BUF];
        self.digits(a, &mut da);
        for d in da.iter_mut().take(self.f as usize) {
            *d = (self.r - *d) % self.r;
        }
        self.pack(&da)
    }

    pub fn idx_sub(&self, a: u64, b: u64) -> u64 {
        self.idx_add(a, self.idx_neg(b))
    }

    pub fn idx_mul(&self, a: u64, b: u64) -> u64 {
        let f = self.f as usize;
        let mut da = [0u64; BUF];
        let mut db = [0u64; BUF];
        self.digits(a, &mut da);
        self.digits(b, &mut db);
        let mut prod = [0u64; BUF];
        for i in 0..f {
            if da[i] == 0 {
                continue;
            }
            for j in 0..f {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % self.r;
            }
        }
        // reduce modulo the monic modulus, highest degree first
        for i in (f..=2 * f.saturating_sub(1)).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..f {
                let sub = (c * self.modulus[j]) % self.r;
                prod[i - f + j] = (prod[i - f + j] + self.r - sub) % self.r;
            }
        }
        self.pack(&prod)
    }

    pub fn idx_pow(&self, a: u64, mut exp: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.idx_mul(acc, base);
            }
            base = self.idx_mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn idx_inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::domain("inverse of zero"));
        }
        Ok(self.idx_pow(a, self.q - 2))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.decode(self.idx_add(self.encode(a), self.encode(b)))
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.decode(self.idx_sub(self.encode(a), self.encode(b)))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.decode(self.idx_mul(self.encode(a), self.encode(b)))
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.decode(self.idx_neg(self.encode(a)))
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        Ok(self.decode(self.idx_inv(self.encode(a))?))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: &FieldElement) -> Result<u64> {
        let code = self.encode(a);
        if code == 0 {
            return Err(Error::domain("zero has no multiplicative order"));
        }
        if self.q == 2 {
            return Ok(1);
        }
        let mut order = self.q - 1;
        for ell in numtheory::factorize(self.q - 1)?.primes() {
            while order.is_multiple_of(ell) && self.idx_pow(code, order / ell) == 1 {
                order /= ell;
            }
        }
        Ok(order)
    }

    /// The first element in code order whose multiplicative order is q - 1.
    pub fn multiplicative_generator(&self) -> FieldElement {
        for code in 1..self.q {
            let elem = self.decode(code);
            if self.element_order(&elem).unwrap() == self.q - 1 {
                return elem;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    /// Codes of all solutions of x^n = 1, sorted ascending.
    pub fn nth_roots_of_unity(&self, n: u64) -> Vec<u64> {
        let d = num_integer::gcd(n, self.q - 1);
        let g = self.encode(&self.multiplicative_generator());
        let h = self.idx_pow(g, (self.q - 1) / d);
        let mut roots = Vec::with_capacity(d as usize);
        let mut x = 1u64;
        for _ in 0..d {
            roots.push(x);
            x = self.idx_mul(x, h);
        }
        debug_assert_eq!(x, 1);
        roots.sort_unstable();
        roots
    }
}
