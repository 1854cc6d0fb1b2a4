//! Closed-form orders and Sylow-count formulas for the simple-group
//! families, plus an executable auditor for the inequality chains their
//! range analysis depends on.
//!
//! Each `*_np` operation evaluates one displayed normalizer-index formula as
//! a literal product of its factors with the division done last and checked
//! exact, so a transcription slip fails loudly instead of rounding.

mod audit;

pub use audit::{proof_inequality_audit, AuditReport, ChainReport};

use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory::{self, MAX_VALUE};

/// A simple-group family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// Alternating group A_n, n >= 5.
    Alt { n: u64 },
    /// PSL_n(q), n >= 2, excluding the non-simple PSL_2(2), PSL_2(3).
    Psl { n: u64, q: u64 },
    /// PSU_n(q), n >= 3.
    Psu { n: u64, q: u64 },
    /// PSp_{2n}(q), n >= 2.
    Psp { n: u64, q: u64 },
    /// P-Omega_{2n+1}(q), n >= 2, q odd.
    OmegaOdd { n: u64, q: u64 },
    /// P-Omega^+_{2n}(q), n >= 3.
    OmegaPlus { n: u64, q: u64 },
    /// P-Omega^-_{2n}(q), n >= 2.
    OmegaMinus { n: u64, q: u64 },
    /// Sz(q), q = 2^(2m+1) >= 8.
    Sz { q: u64 },
    /// G_2(q), q >= 3.
    G2 { q: u64 },
    /// 2G_2(q), q = 3^(2m+1) >= 27.
    Ree2G2 { q: u64 },
    /// 3D_4(q).
    TriD4 { q: u64 },
    F4 { q: u64 },
    /// 2F_4(q), q = 2^(2m+1) >= 8.
    TwoF4 { q: u64 },
    E6 { q: u64 },
    TwoE6 { q: u64 },
    E7 { q: u64 },
    E8 { q: u64 },
}

/// The value of one closed-form Sylow-count formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaResult {
    pub value: u64,
    /// Stable tag of the formula that produced the value.
    pub formula_id: &'static str,
}

/// Which torus the Sylow subgroup of Sp_{2e}(q) lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpCase {
    /// p is a primitive prime divisor of q^{2e} - 1.
    Primitive2e,
    /// p is a primitive prime divisor of q^e - 1, e odd.
    PrimitiveE,
}

/// Which of the two orthogonal-plus normalizer formulas to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaPlusVariant {
    /// The subgroup P-Omega^+_{2(e+1)}(q) pinned by e with p primitive for
    /// q^{2e} - 1.
    SubgroupE,
    /// The full P-Omega^+_{2n}(q) with p primitive for q^{2(n-1)} - 1.
    FullN,
}

/// The four exceptional cases of the classification below p^2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExceptionalCase {
    /// n_p = 1 + p, realized by PSL_2(p), p >= 5.
    Psl2P(u64),
    /// n_13 = 144, realized by PSL_3(3).
    Psl3Of3,
    /// n_p = 1 + (p-3)p/2, realized by PSL_2(p-1), p > 3 Fermat.
    Psl2PMinus1(u64),
    /// n_p = 1 + (p+3)p/2, realized by PSL_2(p+1), p > 3 Mersenne.
    Psl2PPlus1(u64),
}

impl ExceptionalCase {
    pub fn family(&self) -> FamilyId {
        match *self {
            ExceptionalCase::Psl2P(p) => FamilyId::Psl { n: 2, q: p },
            ExceptionalCase::Psl3Of3 => FamilyId::Psl { n: 3, q: 3 },
            ExceptionalCase::Psl2PMinus1(p) => FamilyId::Psl { n: 2, q: p - 1 },
            ExceptionalCase::Psl2PPlus1(p) => FamilyId::Psl { n: 2, q: p + 1 },
        }
    }
}

impl fmt::Display for ExceptionalCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExceptionalCase::Psl2P(p) => write!(f, "PSL2({p})"),
            ExceptionalCase::Psl3Of3 => write!(f, "PSL3(3)"),
            ExceptionalCase::Psl2PMinus1(p) => write!(f, "PSL2({})", p - 1),
            ExceptionalCase::Psl2PPlus1(p) => write!(f, "PSL2({})", p + 1),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyId::Alt { n } => write!(f, "A{n}"),
            FamilyId::Psl { n, q } => write!(f, "PSL{n}({q})"),
            FamilyId::Psu { n, q } => write!(f, "PSU{n}({q})"),
            FamilyId::Psp { n, q } => write!(f, "PSp{}({q})", 2 * n),
            FamilyId::OmegaOdd { n, q } => write!(f, "POmega{}({q})", 2 * n + 1),
            FamilyId::OmegaPlus { n, q } => write!(f, "POmega+{}({q})", 2 * n),
            FamilyId::OmegaMinus { n, q } => write!(f, "POmega-{}({q})", 2 * n),
            FamilyId::Sz { q } => write!(f, "Sz({q})"),
            FamilyId::G2 { q } => write!(f, "G2({q})"),
            FamilyId::Ree2G2 { q } => write!(f, "2G2({q})"),
            FamilyId::TriD4 { q } => write!(f, "3D4({q})"),
            FamilyId::F4 { q } => write!(f, "F4({q})"),
            FamilyId::TwoF4 { q } => write!(f, "2F4({q})"),
            FamilyId::E6 { q } => write!(f, "E6({q})"),
            FamilyId::TwoE6 { q } => write!(f, "2E6({q})"),
            FamilyId::E7 { q } => write!(f, "E7({q})"),
            FamilyId::E8 { q } => write!(f, "E8({q})"),
        }
    }
}

fn is_prime_power(q: u64) -> bool {
    numtheory::as_prime_power(q).is_some()
}

/// q = base^k with k odd and q >= min (the Suzuki/Ree parameter shape).
fn is_odd_power(q: u64, base: u64, min: u64) -> bool {
    if q < min {
        return false;
    }
    match numtheory::as_prime_power(q) {
        Some(pp) => pp.base == base && pp.exponent % 2 == 1,
        None => false,
    }
}

impl FamilyId {
    /// Checks the family's parameter constraints.
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            FamilyId::Alt { n } => n >= 5,
            FamilyId::Psl { n, q } => {
                n >= 2 && is_prime_power(q) && !(n == 2 && (q == 2 || q == 3))
            }
            FamilyId::Psu { n, q } => n >= 3 && is_prime_power(q),
            FamilyId::Psp { n, q } => n >= 2 && is_prime_power(q),
            FamilyId::OmegaOdd { n, q } => n >= 2 && is_prime_power(q) && q % 2 == 1,
            FamilyId::OmegaPlus { n, q } => n >= 3 && is_prime_power(q),
            FamilyId::OmegaMinus { n, q } => n >= 2 && is_prime_power(q),
            FamilyId::Sz { q } => is_odd_power(q, 2, 8),
            FamilyId::G2 { q } => q >= 3 && is_prime_power(q),
            FamilyId::Ree2G2 { q } => is_odd_power(q, 3, 27),
            FamilyId::TriD4 { q } => is_prime_power(q),
            FamilyId::F4 { q } => is_prime_power(q),
            FamilyId::TwoF4 { q } => is_odd_power(q, 2, 8),
            FamilyId::E6 { q }
            | FamilyId::TwoE6 { q }
            | FamilyId::E7 { q }
            | FamilyId::E8 { q } => is_prime_power(q),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!("invalid parameters for family {self}")))
        }
    }
}

/// Running product in u128 with overflow checking; division happens last.
#[derive(Debug, Clone, Copy)]
struct Product(u128);

impl Product {
    fn new() -> Product {
        Product(1)
    }

    fn times(mut self, factor: u128) -> Result<Product> {
        self.0 = self
            .0
            .checked_mul(factor)
            .ok_or_else(|| Error::domain("order product exceeds 128 bits"))?;
        Ok(self)
    }

    fn power(self, base: u64, exp: u64) -> Result<Product> {
        let mut acc = self;
        for _ in 0..exp {
            acc = acc.times(base as u128)?;
        }
        Ok(acc)
    }

    /// Divide exactly and narrow to 63 bits.
    fn exact(self, divisor: u128, what: &str) -> Result<u64> {
        assert_eq!(self.0 % divisor, 0, "{what}: division must be exact");
        let v = self.0 / divisor;
        if v > MAX_VALUE as u128 {
            return Err(Error::domain(format!("{what} exceeds 63 bits")));
        }
        Ok(v as u64)
    }
}

fn qpow(q: u64, e: u64) -> Result<u128> {
    Product::new().power(q, e).map(|p| p.0)
}

/// sqrt(2q) for Sz/2F4 parameters or sqrt(3q) for 2G2: exact by
/// construction, since q is an odd power of the base.
fn exceptional_root(q: u64, base: u64) -> u64 {
    let pp = numtheory::as_prime_power(q).expect("validated");
    base.pow(pp.exponent.div_ceil(2))
}

/// Exact group order per the family's displayed order formula.
pub fn group_order(family: &FamilyId) -> Result<u64> {
    family.validate()?;
    match *family {
        FamilyId::Alt { n } => {
            let mut p = Product::new();
            for k in 2..=n {
                p = p.times(k as u128)?;
            }
            p.exact(2, "|A_n|")
        }
        FamilyId::Psl { n, q } => {
            let mut p = Product::new().power(q, n * (n - 1) / 2)?;
            for i in 1..=n {
                p = p.times(qpow(q, i)? - 1)?;
            }
            let divisor = (q as u128 - 1) * num_integer::gcd(n, q - 1) as u128;
            p.exact(divisor, "|PSL_n(q)|")
        }
        FamilyId::Psu { n, q } => {
            let mut p = Product::new().power(q, n * (n - 1) / 2)?;
            for i in 1..=n {
                let term = if i % 2 == 0 { qpow(q, i)? - 1 } else { qpow(q, i)? + 1 };
                p = p.times(term)?;
            }
            let divisor = num_integer::gcd(n, q + 1) as u128 * (q as u128 + 1);
            p.exact(divisor, "|PSU_n(q)|")
        }
        FamilyId::Psp { n, q } | FamilyId::OmegaOdd { n, q } => {
            let mut p = Product::new().power(q, n * n)?;
            for i in 1..=n {
                p = p.times(qpow(q, 2 * i)? - 1)?;
            }
            p.exact(num_integer::gcd(2, q - 1) as u128, "|PSp_2n(q)|")
        }
        FamilyId::OmegaPlus { n, q } => {
            let mut p = Product::new().power(q, n * (n - 1))?.times(qpow(q, n)? - 1)?;
            for i in 1..n {
                p = p.times(qpow(q, 2 * i)? - 1)?;
            }
            p.exact(num_integer::gcd(4, qpow(q, n)? - 1) as u128, "|POmega+|")
        }
        FamilyId::OmegaMinus { n, q } => {
            let mut p = Product::new().power(q, n * (n - 1))?.times(qpow(q, n)? + 1)?;
            for i in 1..n {
                p = p.times(qpow(q, 2 * i)? - 1)?;
            }
            p.exact(num_integer::gcd(4, qpow(q, n)? + 1) as u128, "|POmega-|")
        }
        FamilyId::Sz { q } => {
            let s = exceptional_root(q, 2) as u128;
            let q2 = q as u128;
            Product::new()
                .power(q, 2)?
                .times(q2 - 1)?
                .times(q2 - s + 1)?
                .times(q2 + s + 1)?
                .exact(1, "|Sz(q)|")
        }
        FamilyId::G2 { q } => {
            let q2 = q as u128;
            Product::new()
                .power(q, 6)?
                .times((q2 - 1) * (q2 - 1))?
                .times((q2 + 1) * (q2 + 1))?
                .times(q2 * q2 + q2 + 1)?
                .times(q2 * q2 - q2 + 1)?
                .exact(1, "|G2(q)|")
        }
        FamilyId::Ree2G2 { q } => {
            let s = exceptional_root(q, 3) as u128;
            let q2 = q as u128;
            Product::new()
                .power(q, 3)?
                .times(q2 + 1)?
                .times(q2 - 1)?
                .times(q2 - s + 1)?
                .times(q2 + s + 1)?
                .exact(1, "|2G2(q)|")
        }
        FamilyId::TriD4 { q } => {
            let a = qpow(q, 2)? + q as u128 + 1;
            let b = qpow(q, 2)? - q as u128 + 1;
            let c = qpow(q, 4)? - qpow(q, 2)? + 1;
            let q2 = q as u128;
            Product::new()
                .power(q, 12)?
                .times(a * a)?
                .times(b * b)?
                .times(c)?
                .times((q2 + 1) * (q2 + 1))?
                .times((q2 - 1) * (q2 - 1))?
                .exact(1, "|3D4(q)|")
        }
        FamilyId::F4 { q } => {
            let s6 = qpow(q, 6)? - 1;
            let s2 = qpow(q, 2)? - 1;
            let a2 = qpow(q, 2)? + 1;
            Product::new()
                .power(q, 24)?
                .times(s6 * s6)?
                .times(s2 * s2)?
                .times(a2 * a2)?
                .times(qpow(q, 4)? + 1)?
                .times(qpow(q, 4)? - qpow(q, 2)? + 1)?
                .exact(1, "|F4(q)|")
        }
        FamilyId::TwoF4 { q } => {
            let s = exceptional_root(q, 2) as u128;
            let q2 = q as u128;
            let s4 = qpow(q, 4)? - 1;
            let torus = q2 * q2 + q2 + 1;
            Product::new()
                .power(q, 12)?
                .times(s4 * s4)?
                .times(q2 * q2 - q2 + 1)?
                .times(torus + s * (q2 + 1))?
                .times(torus - s * (q2 + 1))?
                .exact(1, "|2F4(q)|")
        }
        FamilyId::E6 { q } => Product::new()
            .power(q, 36)?
            .times(qpow(q, 12)? - 1)?
            .times(qpow(q, 9)? - 1)?
            .times(qpow(q, 8)? - 1)?
            .times(qpow(q, 6)? - 1)?
            .times(qpow(q, 5)? - 1)?
            .times(qpow(q, 2)? - 1)?
            .exact(num_integer::gcd(3, q - 1) as u128, "|E6(q)|"),
        FamilyId::TwoE6 { q } => Product::new()
            .power(q, 36)?
            .times(qpow(q, 12)? - 1)?
            .times(qpow(q, 9)? + 1)?
            .times(qpow(q, 8)? - 1)?
            .times(qpow(q, 6)? - 1)?
            .times(qpow(q, 5)? + 1)?
            .times(qpow(q, 2)? - 1)?
            .exact(num_integer::gcd(3, q + 1) as u128, "|2E6(q)|"),
        FamilyId::E7 { q } => Product::new()
            .power(q, 63)?
            .times(qpow(q, 18)? - 1)?
            .times(qpow(q, 14)? - 1)?
            .times(qpow(q, 12)? - 1)?
            .times(qpow(q, 10)? - 1)?
            .times(qpow(q, 8)? - 1)?
            .times(qpow(q, 6)? - 1)?
            .times(qpow(q, 2)? - 1)?
            .exact(1, "|E7(q)|"),
        FamilyId::E8 { q } => Product::new()
            .power(q, 120)?
            .times(qpow(q, 30)? - 1)?
            .times(qpow(q, 24)? - 1)?
            .times(qpow(q, 20)? - 1)?
            .times(qpow(q, 18)? - 1)?
            .times(qpow(q, 14)? - 1)?
            .times(qpow(q, 12)? - 1)?
            .times(qpow(q, 8)? - 1)?
            .times(qpow(q, 2)? - 1)?
            .exact(1, "|E8(q)|"),
    }
}

fn require_odd_prime(p: u64, op: &str) -> Result<()> {
    if p < 3 || !numtheory::is_prime(p) {
        return Err(Error::domain(format!("{op} requires an odd prime, got {p}")));
    }
    Ok(())
}

fn require_prime_power(q: u64, op: &str) -> Result<()> {
    if !is_prime_power(q) {
        return Err(Error::domain(format!("{op} requires a prime power q, got {q}")));
    }
    Ok(())
}

/// n_p(GL_e(q)) when p is a primitive prime divisor of q^e - 1: the torus
/// normalizer has order e (q^e - 1), so
/// n_p = q^{e(e-1)/2} (q-1)(q^2-1)...(q^{e-1}-1) / e.
pub fn gl_np(e: u64, q: u64, p: u64) -> Result<FormulaResult> {
    if e < 2 {
        return Err(Error::domain(format!("gl_np requires e >= 2, got {e}")));
    }
    require_prime_power(q, "gl_np")?;
    require_odd_prime(p, "gl_np")?;
    if q.is_multiple_of(p) || numtheory::multiplicative_order(q, p)? != e {
        return Err(Error::precondition(format!(
            "gl_np: {p} is not a primitive prime divisor of {q}^{e} - 1"
        )));
    }
    let mut prod = Product::new().power(q, e * (e - 1) / 2)?;
    for i in 1..e {
        prod = prod.times(qpow(q, i)? - 1)?;
    }
    Ok(FormulaResult {
        value: prod.exact(e as u128, "gl_np")?,
        formula_id: "gl.e-torus",
    })
}

/// Order parameter of the unitary torus: min k >= 1 with (-q)^k = 1 mod p.
pub fn unitary_order(q: u64, p: u64) -> Result<u64> {
    require_odd_prime(p, "unitary_order")?;
    if q.is_multiple_of(p) {
        return Err(Error::domain(format!("unitary_order requires p != r, got p = {p} | q = {q}")));
    }
    let minus_q = (p - q % p) % p;
    if minus_q == 1 {
        return Ok(1);
    }
    numtheory::multiplicative_order(minus_q, p)
}

/// n_p(GU_e(q)) via the torus normalizer of order e (q^e - (-1)^e):
/// n_p = q^{e(e-1)/2} (q+1)(q^2-1)...(q^{e-1}-(-1)^{e-1}) / e.
///
/// Requires p | q^e - (-1)^e (the torus the count lives in); the value is a
/// Sylow count in the strict sense only when e is the exact unitary order
/// parameter of p, but the formula itself is evaluated whenever p divides
/// the torus order.
pub fn gu_np(e: u64, q: u64, p: u64) -> Result<FormulaResult> {
    if e < 3 {
        return Err(Error::domain(format!("gu_np requires e >= 3, got {e}")));
    }
    require_prime_power(q, "gu_np")?;
    require_odd_prime(p, "gu_np")?;
    let torus = if e.is_multiple_of(2) { qpow(q, e)? - 1 } else { qpow(q, e)? + 1 };
    if q.is_multiple_of(p) || torus % p as u128 != 0 {
        return Err(Error::precondition(format!(
            "gu_np: {p} does not divide {q}^{e} - (-1)^{e}"
        )));
    }
    let mut prod = Product::new().power(q, e * (e - 1) / 2)?;
    for i in 1..e {
        let term = if i % 2 == 0 { qpow(q, i)? - 1 } else { qpow(q, i)? + 1 };
        prod = prod.times(term)?;
    }
    Ok(FormulaResult {
        value: prod.exact(e as u128, "gu_np")?,
        formula_id: "gu.e-torus",
    })
}

/// n_p(Sp_{2e}(q)) for the two torus cases.
///
/// Primitive2e (|N| = 2e(q^e + 1)):
/// n_p = q^{e^2} (q^2-1)(q^4-1)...(q^{2e-2}-1)(q^e-1) / 2e.
/// PrimitiveE, e odd (|N| = 2e(q^e - 1)):
/// n_p = q^{e^2} (q^2-1)(q^4-1)...(q^{2e-2}-1)(q^e+1) / 2e.
pub fn sp_np(e: u64, q: u64, p: u64, case: SpCase) -> Result<FormulaResult> {
    if e < 2 {
        return Err(Error::domain(format!("sp_np requires e >= 2, got {e}")));
    }
    require_prime_power(q, "sp_np")?;
    require_odd_prime(p, "sp_np")?;
    if q.is_multiple_of(p) {
        return Err(Error::precondition(format!("sp_np requires p != r, got {p} | {q}")));
    }
    let order = numtheory::multiplicative_order(q, p)?;
    let (last, formula_id) = match case {
        SpCase::Primitive2e => {
            if order != 2 * e {
                return Err(Error::precondition(format!(
                    "sp_np: {p} is not a primitive prime divisor of {q}^{} - 1",
                    2 * e
                )));
            }
            (qpow(q, e)? - 1, "sp.torus-2e")
        }
        SpCase::PrimitiveE => {
            if e.is_multiple_of(2) || order != e {
                return Err(Error::precondition(format!(
                    "sp_np: needs odd e with {p} a primitive prime divisor of {q}^{e} - 1"
                )));
            }
            (qpow(q, e)? + 1, "sp.torus-e")
        }
    };
    let mut prod = Product::new().power(q, e * e)?;
    for i in 1..e {
        prod = prod.times(qpow(q, 2 * i)? - 1)?;
    }
    prod = prod.times(last)?;
    Ok(FormulaResult {
        value: prod.exact(2 * e as u128, "sp_np")?,
        formula_id,
    })
}

/// The two orthogonal-plus normalizer-index formulas.
///
/// SubgroupE, S1 = P-Omega^+_{2(e+1)}(q), p primitive for q^{2e} - 1:
/// n_p = q^{(e+1)e} (q^{e+1}-1)(q-1)(q^4-1)(q^6-1)...(q^{2e-2}-1)(q^e-1) / 2e.
/// FullN, S = P-Omega^+_{2n}(q), p primitive for q^{2(n-1)} - 1: the same
/// display at n = e + 1.
pub fn omega_plus_np(
    variant: OmegaPlusVariant,
    e_or_n: u64,
    q: u64,
    p: u64,
) -> Result<FormulaResult> {
    let (e, formula_id) = match variant {
        OmegaPlusVariant::SubgroupE => (e_or_n, "omega+.subgroup-torus"),
        OmegaPlusVariant::FullN => {
            if e_or_n < 3 {
                return Err(Error::domain(format!(
                    "omega_plus_np FullN requires n >= 3, got {e_or_n}"
                )));
            }
            (e_or_n - 1, "omega+.full-torus")
        }
    };
    if e < 2 {
        return Err(Error::domain(format!("omega_plus_np requires e >= 2, got {e}")));
    }
    require_prime_power(q, "omega_plus_np")?;
    require_odd_prime(p, "omega_plus_np")?;
    if q.is_multiple_of(p) || numtheory::multiplicative_order(q, p)? != 2 * e {
        return Err(Error::precondition(format!(
            "omega_plus_np: {p} is not a primitive prime divisor of {q}^{} - 1",
            2 * e
        )));
    }
    let mut prod = Product::new()
        .power(q, (e + 1) * e)?
        .times(qpow(q, e + 1)? - 1)?
        .times(q as u128 - 1)?;
    for j in 2..e {
        prod = prod.times(qpow(q, 2 * j)? - 1)?;
    }
    prod = prod.times(qpow(q, e)? - 1)?;
    Ok(FormulaResult {
        value: prod.exact(2 * e as u128, "omega_plus_np")?,
        formula_id,
    })
}

/// n_p(PSL_2(q)) in the three natural positions of p:
/// 1 + p when p = q; q(q-1)/2 when p = q + 1; q(q+1)/2 when p = q - 1.
pub fn psl2_np(q: u64, p: u64) -> Result<FormulaResult> {
    if q < 4 {
        return Err(Error::domain(format!("psl2_np requires q >= 4 (PSL_2(q) simple), got {q}")));
    }
    require_prime_power(q, "psl2_np")?;
    require_odd_prime(p, "psl2_np")?;
    if p == q {
        Ok(FormulaResult { value: 1 + p, formula_id: "psl2.p-equals-q" })
    } else if p == q + 1 {
        Ok(FormulaResult { value: q * (q - 1) / 2, formula_id: "psl2.p-equals-q-plus-1" })
    } else if p + 1 == q {
        Ok(FormulaResult { value: q * (q + 1) / 2, formula_id: "psl2.p-equals-q-minus-1" })
    } else {
        Err(Error::unsupported(format!(
            "psl2_np covers p in {{q, q+1, q-1}} only, got p = {p}, q = {q}"
        )))
    }
}

/// n_p(A_n) = n! / ((n-p)! p (p-1)), valid when p <= n < 2p so the Sylow
/// p-subgroup is C_p.
pub fn alternating_np(n: u64, p: u64) -> Result<FormulaResult> {
    if n < 5 {
        return Err(Error::domain(format!("alternating_np requires n >= 5, got {n}")));
    }
    if !numtheory::is_prime(p) {
        return Err(Error::domain(format!("alternating_np requires a prime p, got {p}")));
    }
    if p > n || n >= 2 * p {
        return Err(Error::precondition(format!(
            "alternating_np requires p <= n < 2p, got n = {n}, p = {p}"
        )));
    }
    // Falling factorial n (n-1) ... (n-p+1) has exactly p factors.
    let mut prod = Product::new();
    for k in (n - p + 1)..=n {
        prod = prod.times(k as u128)?;
    }
    Ok(FormulaResult {
        value: prod.exact(p as u128 * (p as u128 - 1), "alternating_np")?,
        formula_id: "alt.point-stabilizer",
    })
}

/// The four closed forms of the classification.
pub fn exceptional_case_np(case: ExceptionalCase) -> Result<FormulaResult> {
    match case {
        ExceptionalCase::Psl2P(p) => {
            if p < 5 || !numtheory::is_prime(p) {
                return Err(Error::precondition(format!(
                    "case 1+p requires a prime p >= 5, got {p}"
                )));
            }
            Ok(FormulaResult { value: 1 + p, formula_id: "exceptional.psl2-p" })
        }
        ExceptionalCase::Psl3Of3 => Ok(FormulaResult { value: 144, formula_id: "exceptional.psl3-3" }),
        ExceptionalCase::Psl2PMinus1(p) => {
            if p <= 3 || !numtheory::is_fermat_prime(p) {
                return Err(Error::precondition(format!(
                    "case 1+(p-3)p/2 requires a Fermat prime p > 3, got {p}"
                )));
            }
            Ok(FormulaResult {
                value: 1 + (p - 3) * p / 2,
                formula_id: "exceptional.psl2-p-minus-1",
            })
        }
        ExceptionalCase::Psl2PPlus1(p) => {
            if p <= 3 || !numtheory::is_mersenne_prime(p) {
                return Err(Error::precondition(format!(
                    "case 1+(p+3)p/2 requires a Mersenne prime p > 3, got {p}"
                )));
            }
            Ok(FormulaResult {
                value: 1 + (p + 3) * p / 2,
                formula_id: "exceptional.psl2-p-plus-1",
            })
        }
    }
}

/// Lower bounds on the minimal permutation degree of the exceptional
/// families, used to rule them out wholesale.
pub fn minimal_degree_bound(family: &FamilyId) -> Result<u64> {
    family.validate()?;
    let (num, den): (Product, u128) = match *family {
        FamilyId::F4 { q } => (
            Product::new().times(qpow(q, 12)? - 1)?.times(qpow(q, 4)? + 1)?,
            q as u128 - 1,
        ),
        FamilyId::TwoF4 { q } => (
            Product::new()
                .times(qpow(q, 6)? + 1)?
                .times(qpow(q, 3)? + 1)?
                .times(q as u128 + 1)?,
            1,
        ),
        FamilyId::E6 { q } => (
            Product::new()
                .times(qpow(q, 9)? - 1)?
                .times(qpow(q, 8)? + qpow(q, 4)? + 1)?,
            q as u128 - 1,
        ),
        FamilyId::TwoE6 { q } => (
            Product::new()
                .times(qpow(q, 12)? - 1)?
                .times(qpow(q, 6)? - qpow(q, 3)? + 1)?
                .times(qpow(q, 4)? + 1)?,
            q as u128 - 1,
        ),
        FamilyId::E7 { q } => (
            Product::new()
                .times(qpow(q, 14)? - 1)?
                .times(qpow(q, 9)? + 1)?
                .times(qpow(q, 5)? + 1)?,
            q as u128 - 1,
        ),
        FamilyId::E8 { q } => (
            Product::new()
                .times(qpow(q, 20)? - 1)?
                .times(qpow(q, 12)? + 1)?
                .times(qpow(q, 10)? + 1)?
                .times(qpow(q, 6)? + 1)?,
            q as u128 - 1,
        ),
        _ => {
            return Err(Error::unsupported(format!(
                "minimal_degree_bound covers F4, 2F4, E6, 2E6, E7, E8, got {family}"
            )))
        }
    };
    num.exact(den, "minimal degree bound")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupengine;

    #[test]
    fn orders_match_brute_force() {
        assert_eq!(group_order(&FamilyId::Psl { n: 3, q: 3 }).unwrap(), 5616);
        assert_eq!(group_order(&FamilyId::Psl { n: 2, q: 7 }).unwrap(), 168);
        assert_eq!(group_order(&FamilyId::Alt { n: 5 }).unwrap(), 60);
        assert_eq!(group_order(&FamilyId::Alt { n: 6 }).unwrap(), 360);
        assert_eq!(group_order(&FamilyId::Psp { n: 2, q: 2 }).unwrap(), 720);
        for (family, group) in [
            (FamilyId::Alt { n: 5 }, groupengine::alternating_group(5).unwrap()),
            (FamilyId::Psl { n: 2, q: 7 }, groupengine::psl(2, 7).unwrap()),
            (FamilyId::Psl { n: 2, q: 4 }, groupengine::psl(2, 4).unwrap()),
            (FamilyId::Psl { n: 3, q: 3 }, groupengine::psl(3, 3).unwrap()),
            (FamilyId::Psp { n: 2, q: 2 }, groupengine::sp4_2().unwrap()),
        ] {
            assert_eq!(group_order(&family).unwrap(), group.order(), "{family}");
        }
    }

    #[test]
    fn exceptional_orders() {
        // Sz(8) = 64 * 7 * 5 * 13
        assert_eq!(group_order(&FamilyId::Sz { q: 8 }).unwrap(), 29120);
        assert_eq!(group_order(&FamilyId::G2 { q: 3 }).unwrap(), 4245696);
        assert_eq!(group_order(&FamilyId::Ree2G2 { q: 27 }).unwrap(), 10073444472);
        // 2F4(2)' is excluded; the smallest valid parameter is q = 8.
        assert!(group_order(&FamilyId::TwoF4 { q: 2 }).is_err());
        assert!(group_order(&FamilyId::Sz { q: 4 }).is_err());
        assert!(group_order(&FamilyId::Ree2G2 { q: 9 }).is_err());
        assert!(group_order(&FamilyId::E8 { q: 2 }).is_err()); // overflows 63 bits
    }

    #[test]
    fn unitary_order_agrees_with_psu3() {
        // |PSU_3(3)| = 6048, |PSU_3(2)| would need n >= 3 and q = 2: 72? PSU_3(2) is
        // solvable but the displayed order formula still evaluates: 2^3*3*(2^2-1)(2^3+1)/..
        assert_eq!(group_order(&FamilyId::Psu { n: 3, q: 3 }).unwrap(), 6048);
        assert_eq!(group_order(&FamilyId::Psu { n: 4, q: 2 }).unwrap(), 25920);
    }

    #[test]
    fn gl_formula_values() {
        assert_eq!(gl_np(3, 3, 13).unwrap().value, 144);
        assert_eq!(gl_np(3, 2, 7).unwrap().value, 8);
        assert_eq!(gl_np(3, 5, 31).unwrap().value, 4000);
        assert_eq!(gl_np(3, 4, 7).unwrap().value, 960);
        assert_eq!(gl_np(4, 2, 5).unwrap().value, 336);
        assert_eq!(gl_np(2, 11, 3).unwrap().value, 55);
        // 13 has order 12 mod 3... order of 3 mod 13 is 3, not 2
        assert!(matches!(gl_np(2, 3, 13), Err(Error::Precondition(_))));
    }

    #[test]
    fn gu_formula_values() {
        assert_eq!(gu_np(3, 3, 7).unwrap().value, 288);
        assert_eq!(gu_np(3, 2, 3).unwrap().value, 24);
        assert_eq!(gu_np(4, 2, 5).unwrap().value, 1296);
        // 5 does not divide 3^3 + 1 = 28
        assert!(matches!(gu_np(3, 3, 5), Err(Error::Precondition(_))));
    }

    #[test]
    fn unitary_order_parameter() {
        assert_eq!(unitary_order(3, 7).unwrap(), 3); // -3 = 4 mod 7 has order 3
        assert_eq!(unitary_order(2, 5).unwrap(), 4); // -2 = 3 mod 5 has order 4
        assert_eq!(unitary_order(2, 3).unwrap(), 1); // -2 = 1 mod 3
        // gu_np(3, 2, 3) = 24 (above) is therefore a bounding evaluation
        // outside the strict order-parameter regime, and 24 = 0 mod 3.
    }

    #[test]
    fn sp_formula_values() {
        assert_eq!(sp_np(2, 2, 5, SpCase::Primitive2e).unwrap().value, 36);
        assert_eq!(sp_np(2, 3, 5, SpCase::Primitive2e).unwrap().value, 1296);
        // odd-e variant: q^{e^2}(q^2-1)(q^4-1)(q^e+1)/2e at e=3, q=2, p=7
        assert_eq!(sp_np(3, 2, 7, SpCase::PrimitiveE).unwrap().value, 34560);
        // parity mismatch: ord_7(2) = 3 != 6
        assert!(matches!(sp_np(3, 2, 7, SpCase::Primitive2e), Err(Error::Precondition(_))));
        assert!(matches!(sp_np(2, 2, 5, SpCase::PrimitiveE), Err(Error::Precondition(_))));
    }

    #[test]
    fn omega_plus_values() {
        assert_eq!(
            omega_plus_np(OmegaPlusVariant::SubgroupE, 2, 2, 5).unwrap().value,
            336
        );
        assert_eq!(
            omega_plus_np(OmegaPlusVariant::FullN, 3, 2, 5).unwrap().value,
            336
        );
        // 13 is not primitive for 2^6 - 1 (the Zsigmondy exception at (2,6)):
        // ord_13(2) = 12, not 6, so the precondition fails.
        assert!(matches!(
            omega_plus_np(OmegaPlusVariant::SubgroupE, 3, 2, 13),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn psl2_values() {
        assert_eq!(psl2_np(7, 7).unwrap().value, 8);
        assert_eq!(psl2_np(4, 5).unwrap().value, 6);
        assert_eq!(psl2_np(8, 7).unwrap().value, 36);
        assert_eq!(psl2_np(16, 17).unwrap().value, 120);
        assert!(matches!(psl2_np(11, 3), Err(Error::Unsupported(_))));
        assert!(psl2_np(3, 3).is_err());
    }

    #[test]
    fn alternating_values() {
        assert_eq!(alternating_np(5, 5).unwrap().value, 6);
        assert_eq!(alternating_np(6, 5).unwrap().value, 36);
        assert_eq!(alternating_np(5, 3).unwrap().value, 10);
        assert_eq!(alternating_np(7, 7).unwrap().value, 120);
        // n >= 2p: the C_p counting formula is invalid
        assert!(matches!(alternating_np(10, 5), Err(Error::Precondition(_))));
        assert!(matches!(alternating_np(6, 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn exceptional_values() {
        assert_eq!(exceptional_case_np(ExceptionalCase::Psl3Of3).unwrap().value, 144);
        assert_eq!(exceptional_case_np(ExceptionalCase::Psl2PMinus1(5)).unwrap().value, 6);
        assert_eq!(exceptional_case_np(ExceptionalCase::Psl2PPlus1(7)).unwrap().value, 36);
        assert_eq!(exceptional_case_np(ExceptionalCase::Psl2P(13)).unwrap().value, 14);
        assert!(exceptional_case_np(ExceptionalCase::Psl2PMinus1(7)).is_err());
        assert!(exceptional_case_np(ExceptionalCase::Psl2PPlus1(5)).is_err());
        assert!(exceptional_case_np(ExceptionalCase::Psl2P(4)).is_err());
    }

    #[test]
    fn minimal_degree_bounds() {
        assert_eq!(minimal_degree_bound(&FamilyId::F4 { q: 2 }).unwrap(), 69615);
        assert_eq!(minimal_degree_bound(&FamilyId::E6 { q: 2 }).unwrap(), 139503);
        let expected_2f4_8 = (8u64.pow(6) + 1) * (8u64.pow(3) + 1) * 9;
        assert_eq!(minimal_degree_bound(&FamilyId::TwoF4 { q: 8 }).unwrap(), expected_2f4_8);
        assert!(matches!(
            minimal_degree_bound(&FamilyId::Alt { n: 5 }),
            Err(Error::Unsupported(_))
        ));
    }

    /// Formula values are Sylow counts, so they are 1 mod p, whenever the
    /// strict primitivity hypothesis holds. (gu_np evaluated merely under
    /// torus divisibility, e.g. (3,2,3) -> 24, is a bounding value, not a
    /// count, and is exempt.)
    #[test]
    fn formula_values_are_one_mod_p() {
        let strict = [
            gl_np(3, 3, 13).unwrap(),
            gl_np(3, 2, 7).unwrap(),
            gl_np(3, 5, 31).unwrap(),
            gl_np(3, 4, 7).unwrap(),
            gl_np(4, 2, 5).unwrap(),
            gu_np(3, 3, 7).unwrap(),
            gu_np(4, 2, 5).unwrap(),
            sp_np(2, 2, 5, SpCase::Primitive2e).unwrap(),
            omega_plus_np(OmegaPlusVariant::SubgroupE, 2, 2, 5).unwrap(),
            psl2_np(7, 7).unwrap(),
            psl2_np(4, 5).unwrap(),
            psl2_np(8, 7).unwrap(),
            alternating_np(5, 5).unwrap(),
            alternating_np(6, 5).unwrap(),
        ];
        let ps = [13, 7, 31, 7, 5, 7, 5, 5, 5, 7, 5, 7, 5, 5];
        for (res, p) in strict.iter().zip(ps) {
            assert_eq!(res.value % p, 1, "{} = {}", res.formula_id, res.value);
        }
    }

    /// The exceptional closed forms are never prime powers, except 1 + p
    /// for Mersenne p (where 1 + p = 2^k).
    #[test]
    fn exceptional_values_prime_power_exception() {
        let primes: Vec<u64> = (2..=50).filter(|&p| numtheory::is_prime(p)).collect();
        for &p in &primes {
            if p >= 5 {
                let v = exceptional_case_np(ExceptionalCase::Psl2P(p)).unwrap().value;
                let is_pp = numtheory::as_prime_power(v).is_some();
                assert_eq!(is_pp, numtheory::is_mersenne_prime(p), "1+p at p={p}");
            }
            if p > 3 && numtheory::is_fermat_prime(p) {
                let v = exceptional_case_np(ExceptionalCase::Psl2PMinus1(p)).unwrap().value;
                assert!(numtheory::as_prime_power(v).is_none(), "p={p} v={v}");
            }
            if p > 3 && numtheory::is_mersenne_prime(p) {
                let v = exceptional_case_np(ExceptionalCase::Psl2PPlus1(p)).unwrap().value;
                assert!(numtheory::as_prime_power(v).is_none(), "p={p} v={v}");
            }
        }
        assert!(numtheory::as_prime_power(144).is_none());
    }

    /// n_p(A_n) >= (p-2)! in the formula's validity range.
    #[test]
    fn alternating_lower_bound() {
        for p in [3u64, 5, 7, 11] {
            let factorial: u64 = (1..=p.saturating_sub(2)).product();
            for n in p.max(5)..2 * p {
                let v = alternating_np(n, p).unwrap().value;
                assert!(v >= factorial, "n={n} p={p}: {v} < ({p}-2)!");
            }
        }
    }
}
