//! Exact integer number theory: factorization, orders, cyclotomic values and
//! primitive prime divisors.
//!
//! Every public operation works on `u64` values capped at 63 bits
//! (`0..=i64::MAX`); anything larger is rejected as a domain error. All
//! functions are pure and deterministic.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

/// Largest value any operation accepts or returns (63 bits).
pub const MAX_VALUE: u64 = i64::MAX as u64;

const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Witness set making Miller-Rabin deterministic for all n < 2^64.
const MILLER_RABIN_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// A positive integer as an ordered multiset of prime powers.
///
/// Primes are strictly increasing and the product of `prime^exponent`
/// reproduces the factored integer exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    entries: Vec<(u64, u32)>,
}

impl Factorization {
    /// The (prime, exponent) pairs in increasing prime order.
    pub fn entries(&self) -> &[(u64, u32)] {
        &self.entries
    }

    /// The distinct prime divisors, increasing.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p` in the factored integer (0 if coprime).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.entries
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// Recomputes the factored integer.
    pub fn value(&self) -> u64 {
        self.entries
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product()
    }

    /// True when the integer is `prime^k` for a single prime.
    pub fn is_prime_power(&self) -> bool {
        self.entries.len() == 1
    }
}

/// A prime power `base^exponent` with its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePower {
    pub base: u64,
    pub exponent: u32,
    pub value: u64,
}

/// Outcome of the primitive-prime-divisor computation for `a^n - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZsigmondyResult {
    pub a: u64,
    pub n: u32,
    pub kind: ZsigmondyKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZsigmondyKind {
    /// The primitive prime divisors of `a^n - 1`, increasing. Non-empty.
    Primes(Vec<u64>),
    /// `n = 2` and `a + 1` is a power of two: every prime divisor of
    /// `a^2 - 1` already divides `a - 1`.
    ExceptionMersenneLike,
    /// `(a, n) = (2, 6)`: 63 = 7 * 9 and both 3 and 7 divide smaller `2^j - 1`.
    ExceptionTwoSix,
}

/// Which of `q^e - 1`, `q^{2e} - 1` has `p` as a primitive prime divisor,
/// where `e` is the half-order parameter of `q` mod `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimitivePart {
    /// `p | q^e - 1` with `e` odd; `p` is primitive for `q^e - 1`.
    QeMinusOne { e: u64 },
    /// `p | q^e + 1`; `p` is primitive for `q^{2e} - 1`.
    Q2eMinusOne { e: u64 },
}

fn check63(n: u64, what: &str) -> Result<u64> {
    if n > MAX_VALUE {
        Err(Error::domain(format!("{what} exceeds 63 bits: {n}")))
    } else {
        Ok(n)
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for all `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MILLER_RABIN_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard's rho (Brent cycle detection) for a composite n with no prime
/// factor below the trial-division bound. Parameters are fixed, so the
/// returned factor is deterministic.
fn pollard_rho(n: u64) -> u64 {
    debug_assert!(n > 1 && !is_prime(n) && n % 2 == 1);
    for c in 1..64u64 {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!("pollard rho exhausted its deterministic parameter list for {n}")
}

/// Factors `n` into primes, `2 <= n <= 2^63 - 1`.
///
/// Trial division up to 10^6, then Pollard rho with deterministic
/// Miller-Rabin on the cofactor.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::domain(format!("factorize requires n >= 2, got {n}")));
    }
    check63(n, "factorize argument")?;
    let mut rest = n;
    let mut entries: Vec<(u64, u32)> = Vec::new();
    for d in std::iter::once(2).chain((3..).step_by(2)) {
        if d > TRIAL_DIVISION_BOUND || d * d > rest {
            break;
        }
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            entries.push((d, e));
        }
    }
    if rest > 1 {
        let mut stack = vec![rest];
        let mut large: Vec<u64> = Vec::new();
        while let Some(m) = stack.pop() {
            if is_prime(m) {
                large.push(m);
            } else {
                let d = pollard_rho(m);
                stack.push(d);
                stack.push(m / d);
            }
        }
        large.sort_unstable();
        let mut i = 0;
        while i < large.len() {
            let p = large[i];
            let mut e = 0;
            while i < large.len() && large[i] == p {
                e += 1;
                i += 1;
            }
            entries.push((p, e));
        }
    }
    entries.sort_unstable_by_key(|&(p, _)| p);
    debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
    let fac = Factorization { entries };
    debug_assert_eq!(fac.value(), n);
    Ok(fac)
}

/// `n` as a prime power `base^exponent` with `exponent >= 1`, if it is one.
pub fn as_prime_power(n: u64) -> Option<PrimePower> {
    if n < 2 {
        return None;
    }
    let fac = factorize(n).ok()?;
    if fac.is_prime_power() {
        let (base, exponent) = fac.entries[0];
        Some(PrimePower { base, exponent, value: n })
    } else {
        None
    }
}

/// Euler's totient.
pub fn euler_totient(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("euler_totient requires n >= 1"));
    }
    if n == 1 {
        return Ok(1);
    }
    let mut phi = n;
    for p in factorize(n)?.primes() {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

fn require_odd_prime_coprime(q: u64, p: u64, op: &str) -> Result<()> {
    if q < 2 {
        return Err(Error::domain(format!("{op} requires q >= 2, got {q}")));
    }
    if p < 3 || !is_prime(p) {
        return Err(Error::domain(format!("{op} requires an odd prime p, got {p}")));
    }
    if q.is_multiple_of(p) {
        return Err(Error::domain(format!("{op} requires gcd(q, p) = 1, got p = {p} | q = {q}")));
    }
    Ok(())
}

/// Smallest `k >= 1` with `q^k ≡ 1 (mod p)`. Divides `p - 1`.
pub fn multiplicative_order(q: u64, p: u64) -> Result<u64> {
    require_odd_prime_coprime(q, p, "multiplicative_order")?;
    let mut order = p - 1;
    for ell in factorize(p - 1)?.primes() {
        while order.is_multiple_of(ell) && pow_mod(q, order / ell, p) == 1 {
            order /= ell;
        }
    }
    debug_assert_eq!(pow_mod(q, order, p), 1);
    Ok(order)
}

/// Smallest `e >= 1` with `q^{2e} ≡ 1 (mod p)`: the order of `q` if that is
/// odd, half of it otherwise.
pub fn half_order_parameter(q: u64, p: u64) -> Result<u64> {
    let d = multiplicative_order(q, p)?;
    Ok(if d % 2 == 1 { d } else { d / 2 })
}

/// Decides which of `q^e - 1`, `q^{2e} - 1` has `p` as a primitive prime
/// divisor, for `e` the half-order parameter.
pub fn classify_primitive(q: u64, p: u64) -> Result<PrimitivePart> {
    let e = half_order_parameter(q, p)?;
    // p | q^{2e} - 1 = (q^e - 1)(q^e + 1), and p is odd, so exactly one
    // factor is divisible.
    if pow_mod(q, e, p) == 1 {
        debug_assert_eq!(e % 2, 1);
        Ok(PrimitivePart::QeMinusOne { e })
    } else {
        debug_assert_eq!(pow_mod(q, e, p), p - 1);
        Ok(PrimitivePart::Q2eMinusOne { e })
    }
}

/// Checked `a^n` within 63 bits.
pub fn checked_pow(a: u64, n: u32) -> Result<u64> {
    let mut acc: u64 = 1;
    for _ in 0..n {
        acc = acc
            .checked_mul(a)
            .filter(|&v| v <= MAX_VALUE)
            .ok_or_else(|| Error::domain(format!("{a}^{n} exceeds 63 bits")))?;
    }
    Ok(acc)
}

/// All primitive prime divisors of `a^n - 1`, or the exceptional case.
///
/// A prime is primitive when it divides `a^n - 1` but no `a^j - 1` with
/// `0 < j < n`.
pub fn zsigmondy(a: u64, n: u32) -> Result<ZsigmondyResult> {
    if a < 2 || n < 2 {
        return Err(Error::domain(format!("zsigmondy requires a, n >= 2, got ({a}, {n})")));
    }
    let value = checked_pow(a, n)? - 1;
    let mut primes = Vec::new();
    'prime: for ell in factorize(value)?.primes() {
        for j in 1..n {
            if (checked_pow(a, j)? - 1) % ell == 0 {
                continue 'prime;
            }
        }
        primes.push(ell);
    }
    let kind = if a == 2 && n == 6 {
        debug_assert!(primes.is_empty());
        ZsigmondyKind::ExceptionTwoSix
    } else if n == 2 && (a + 1).is_power_of_two() {
        debug_assert!(primes.is_empty());
        ZsigmondyKind::ExceptionMersenneLike
    } else {
        debug_assert!(!primes.is_empty());
        ZsigmondyKind::Primes(primes)
    };
    Ok(ZsigmondyResult { a, n, kind })
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            divs.push(d);
            if d != n / d {
                divs.push(n / d);
            }
        }
        d += 1;
    }
    divs.sort_unstable();
    divs
}

fn moebius(n: u64) -> Result<i32> {
    if n == 1 {
        return Ok(1);
    }
    let fac = factorize(n)?;
    if fac.entries().iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if fac.entries().len() % 2 == 0 { 1 } else { -1 })
}

/// `Φ_n(q)` as an exact big integer, via the Möbius product
/// `Φ_n(q) = ∏_{d|n} (q^d - 1)^{μ(n/d)}`.
pub fn cyclotomic_big(n: u64, q: u64) -> Result<BigUint> {
    if n == 0 || q < 2 {
        return Err(Error::domain(format!("cyclotomic value needs n >= 1, q >= 2, got ({n}, {q})")));
    }
    let big_q = BigUint::from(q);
    let mut numerator = BigUint::one();
    let mut denominator = BigUint::one();
    for d in divisors(n) {
        let term = big_q.pow(d as u32) - BigUint::one();
        match moebius(n / d)? {
            1 => numerator *= &term,
            -1 => denominator *= &term,
            _ => {}
        }
    }
    let (quot, rem) = numerator.div_rem(&denominator);
    debug_assert!(rem == BigUint::ZERO, "cyclotomic product must divide exactly");
    Ok(quot)
}

/// `Φ_n(q)` as a `u64`; values beyond 63 bits are a domain error.
pub fn cyclotomic_value(n: u64, q: u64) -> Result<u64> {
    let big = cyclotomic_big(n, q)?;
    let small: u64 = big
        .try_into()
        .map_err(|_| Error::domain(format!("Phi_{n}({q}) exceeds 63 bits")))?;
    check63(small, "cyclotomic value")
}

/// True iff `p` is prime and `p = 2^(2^k) + 1`.
pub fn is_fermat_prime(p: u64) -> bool {
    if !is_prime(p) || p < 3 {
        return false;
    }
    let m = p - 1;
    m.is_power_of_two() && (m.trailing_zeros() as u64).is_power_of_two()
}

/// True iff `p` is prime and `p = 2^k - 1`.
pub fn is_mersenne_prime(p: u64) -> bool {
    is_prime(p) && (p + 1).is_power_of_two()
}

/// Exhaustive search for `p^2 - 3p + 2 = 2 q^a` with `p = 2^n + 1` a Fermat
/// prime up to `p_max`.
///
/// Returns `(n, p, q, a)` tuples. The single solution has `p = 3`, where
/// `p^2 - 3p + 2 = 2` forces the degenerate `q = 1`, `a = 1`; that tuple is
/// reported verbatim as `(1, 3, 1, 1)` rather than normalized away.
pub fn fermat_prime_power_solutions(p_max: u64) -> Result<Vec<(u32, u64, u64, u32)>> {
    let mut out = Vec::new();
    let mut n = 1u32;
    loop {
        let p = match checked_pow(2, n) {
            Ok(v) if v < u64::MAX => v + 1,
            _ => break,
        };
        if p > p_max {
            break;
        }
        if is_fermat_prime(p) {
            let m = p * p - 3 * p + 2;
            debug_assert_eq!(m % 2, 0);
            let half = m / 2;
            if half == 1 {
                out.push((n, p, 1, 1));
            } else if let Some(pp) = as_prime_power(half) {
                out.push((n, p, pp.base, pp.exponent));
            }
        }
        n += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trial_division_oracle(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                let mut e = 0;
                while n.is_multiple_of(d) {
                    n /= d;
                    e += 1;
                }
                out.push((d, e));
            }
            d += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    /// Lucas-Lehmer test for M_p = 2^p - 1, independent of Miller-Rabin.
    fn lucas_lehmer(p: u32) -> bool {
        let m = (1u128 << p) - 1;
        let mut s: u128 = 4;
        for _ in 0..p - 2 {
            s = (s * s + m - 2) % m;
        }
        s == 0
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(12).unwrap().entries(), &[(2, 2), (3, 1)]);
        // |PSL_3(3)| computed independently by trial division
        assert_eq!(
            factorize(5616).unwrap().entries(),
            trial_division_oracle(5616).as_slice()
        );
        assert_eq!(factorize(5616).unwrap().entries(), &[(2, 4), (3, 3), (13, 1)]);
    }

    #[test]
    fn factorize_mersenne_31() {
        assert!(lucas_lehmer(31));
        let m = (1u64 << 31) - 1;
        assert_eq!(factorize(m).unwrap().entries(), &[(2147483647, 1)]);
    }

    #[test]
    fn factorize_rejects_out_of_range() {
        assert!(matches!(factorize(1), Err(Error::Domain(_))));
        assert!(matches!(factorize(0), Err(Error::Domain(_))));
        assert!(matches!(factorize(u64::MAX), Err(Error::Domain(_))));
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(13));
        assert!(!is_prime(1));
        assert!(!is_prime(2047)); // 23 * 89, a strong pseudoprime to base 2
        assert_eq!(trial_division_oracle(2047), vec![(23, 1), (89, 1)]);
    }

    #[test]
    fn totient_examples() {
        assert_eq!(euler_totient(1).unwrap(), 1);
        assert_eq!(euler_totient(10).unwrap(), 4);
        let brute = (1..=36).filter(|k| num_integer::gcd(*k, 36u64) == 1).count() as u64;
        assert_eq!(euler_totient(36).unwrap(), brute);
        assert_eq!(euler_totient(36).unwrap(), 12);
    }

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(3, 13).unwrap(), 3);
        assert_eq!(multiplicative_order(2, 7).unwrap(), 3);
        assert_eq!(multiplicative_order(4, 5).unwrap(), 2);
        assert!(matches!(multiplicative_order(14, 7), Err(Error::Domain(_))));
    }

    #[test]
    fn half_orders() {
        assert_eq!(half_order_parameter(2, 5).unwrap(), 2);
        assert_eq!(half_order_parameter(2, 7).unwrap(), 3);
        // p | q - 1 gives e = 1
        assert_eq!(half_order_parameter(8, 7).unwrap(), 1);
        assert_eq!(half_order_parameter(11, 5).unwrap(), 1);
    }

    #[test]
    fn primitive_classification() {
        assert_eq!(
            classify_primitive(2, 7).unwrap(),
            PrimitivePart::QeMinusOne { e: 3 }
        );
        assert_eq!(
            classify_primitive(2, 5).unwrap(),
            PrimitivePart::Q2eMinusOne { e: 2 }
        );
        assert_eq!(
            classify_primitive(2, 3).unwrap(),
            PrimitivePart::Q2eMinusOne { e: 1 }
        );
    }

    #[test]
    fn zsigmondy_examples() {
        assert_eq!(zsigmondy(2, 6).unwrap().kind, ZsigmondyKind::ExceptionTwoSix);
        assert_eq!(
            zsigmondy(3, 2).unwrap().kind,
            ZsigmondyKind::ExceptionMersenneLike
        );
        assert_eq!(zsigmondy(2, 4).unwrap().kind, ZsigmondyKind::Primes(vec![5]));
        assert!(matches!(zsigmondy(2, 64), Err(Error::Domain(_))));
    }

    /// A prime is primitive for a^n - 1 exactly when the order of a mod that
    /// prime is n; cross-checks zsigmondy against factorize + orders.
    #[test]
    fn zsigmondy_matches_order_oracle() {
        for a in 2u64..=12 {
            for n in 2u32..=12 {
                let result = zsigmondy(a, n).unwrap();
                let value = checked_pow(a, n).unwrap() - 1;
                // 2 is never primitive for n >= 2: if 2 | a^n - 1 then a is
                // odd and 2 | a - 1 already.
                let by_order: Vec<u64> = factorize(value)
                    .unwrap()
                    .primes()
                    .filter(|&ell| ell != 2 && multiplicative_order(a, ell).unwrap() == n as u64)
                    .collect();
                match result.kind {
                    ZsigmondyKind::Primes(ps) => assert_eq!(ps, by_order, "a={a} n={n}"),
                    _ => assert!(by_order.is_empty(), "a={a} n={n}"),
                }
            }
        }
    }

    #[test]
    fn zsigmondy_exceptions_are_exactly_the_stated_ones() {
        for a in 2u64..=12 {
            for n in 2u32..=12 {
                let kind = zsigmondy(a, n).unwrap().kind;
                let exceptional = !matches!(kind, ZsigmondyKind::Primes(_));
                let expected = (a == 2 && n == 6) || (n == 2 && (a + 1).is_power_of_two());
                assert_eq!(exceptional, expected, "a={a} n={n}");
            }
        }
    }

    #[test]
    fn cyclotomic_examples() {
        for q in 2..10 {
            assert_eq!(cyclotomic_value(1, q).unwrap(), q - 1);
        }
        assert_eq!(cyclotomic_value(3, 3).unwrap(), 13);
        assert_eq!(cyclotomic_value(6, 2).unwrap(), 3);
        assert_eq!(cyclotomic_value(4, 2).unwrap(), 5);
    }

    /// Product over divisors identity: ∏_{d|n} Φ_d(q) = q^n - 1.
    #[test]
    fn cyclotomic_product_identity() {
        for n in 1u64..=36 {
            for q in 2u64..=32 {
                let mut prod = BigUint::one();
                for d in divisors(n) {
                    prod *= cyclotomic_big(d, q).unwrap();
                }
                let target = BigUint::from(q).pow(n as u32) - BigUint::one();
                assert_eq!(prod, target, "n={n} q={q}");
            }
        }
    }

    /// The bound every range analysis leans on: Φ_e(q) < 4 q^φ(e).
    #[test]
    fn cyclotomic_upper_bound() {
        for e in 1u64..=36 {
            for q in 2u64..=32 {
                let phi = euler_totient(e).unwrap();
                let bound = BigUint::from(4u32) * BigUint::from(q).pow(phi as u32);
                assert!(cyclotomic_big(e, q).unwrap() < bound, "e={e} q={q}");
            }
        }
    }

    #[test]
    fn fermat_mersenne() {
        assert!(is_fermat_prime(5));
        assert!(is_mersenne_prime(7));
        assert!(is_fermat_prime(3) && is_mersenne_prime(3));
        assert!(is_fermat_prime(17) && is_fermat_prime(257) && is_fermat_prime(65537));
        assert!(is_mersenne_prime(31) && is_mersenne_prime(127) && is_mersenne_prime(8191));
        assert!(!is_fermat_prime(7) && !is_mersenne_prime(5));
        assert!(!is_fermat_prime(2) && !is_mersenne_prime(2));
    }

    #[test]
    fn fermat_prime_power_search() {
        assert_eq!(fermat_prime_power_solutions(1_000_000).unwrap(), vec![(1, 3, 1, 1)]);
        assert_eq!(fermat_prime_power_solutions(3).unwrap(), vec![(1, 3, 1, 1)]);
        assert!(fermat_prime_power_solutions(2).unwrap().is_empty());
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(
            as_prime_power(16),
            Some(PrimePower { base: 2, exponent: 4, value: 16 })
        );
        assert_eq!(as_prime_power(1), None);
        assert_eq!(as_prime_power(6), None);
        assert_eq!(
            as_prime_power(27),
            Some(PrimePower { base: 3, exponent: 3, value: 27 })
        );
    }

    proptest! {
        #[test]
        fn factorize_reconstructs(n in 2u64..5_000_000) {
            let fac = factorize(n).unwrap();
            prop_assert_eq!(fac.value(), n);
            prop_assert!(fac.primes().all(is_prime));
            prop_assert!(fac.entries().windows(2).all(|w| w[0].0 < w[1].0));
        }

        #[test]
        fn is_prime_matches_trial_division(n in 0u64..200_000) {
            let trial = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            prop_assert_eq!(is_prime(n), trial);
        }

        #[test]
        fn order_divides_p_minus_one(q in 2u64..10_000, idx in 1usize..500) {
            let p = (3u64..).filter(|&m| is_prime(m)).nth(idx).unwrap();
            prop_assume!(q % p != 0);
            let d = multiplicative_order(q, p).unwrap();
            prop_assert_eq!((p - 1) % d, 0);
            let e = half_order_parameter(q, p).unwrap();
            let qe = pow_mod(q, e, p);
            prop_assert!(qe == 1 || qe == p - 1, "q^e must be ±1 mod p");
        }
    }
}
