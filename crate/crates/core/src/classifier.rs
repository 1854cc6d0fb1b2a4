//! The classification of Sylow counts below p^2, in executable form.
//!
//! For a prime p, the admissible values n = n_p(G) < p^2 are exactly: 1, the
//! prime powers congruent to 1 mod p (realized by affine Frobenius groups),
//! and a short list of exceptional values realized by simple groups: 144 at
//! p = 13, 1 + p for p >= 5, 1 + (p-3)p/2 for Fermat p > 3 and
//! 1 + (p+3)p/2 for Mersenne p > 3. Everything here enumerates, decomposes
//! or cross-checks against that classification, with each value carrying a
//! constructive witness.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::families::{FamilyId, ExceptionalCase};
use crate::numtheory::{self, PrimePower};

/// How to rebuild the Frobenius group realizing a prime-power count r^t:
/// affine maps over GF(r^t) with a complement of order p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrobeniusRecipe {
    pub p: u64,
    pub r: u64,
    pub t: u32,
}

/// A constructive witness that a value occurs as some n_p(G).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// n = 1: any group with a normal Sylow p-subgroup.
    Trivial,
    /// n = power.value is a prime power realized by a Frobenius group.
    PrimePower { power: PrimePower, frobenius: FrobeniusRecipe },
    /// n is realized by a simple group from the classification.
    Simple { case: ExceptionalCase, family: FamilyId },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Trivial => write!(f, "trivial (normal Sylow subgroup)"),
            Witness::PrimePower { power, frobenius } => write!(
                f,
                "prime power {}^{} via frobenius({}, {}, {})",
                power.base, power.exponent, frobenius.p, frobenius.r, frobenius.t
            ),
            Witness::Simple { family, .. } => write!(f, "simple: {family}"),
        }
    }
}

/// An admissible Sylow count n < p^2 with all its witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleValue {
    pub value: u64,
    /// (value - 1) / p.
    pub r_coefficient: u64,
    /// At least one; prime-power witness first, then simple ones.
    pub witnesses: Vec<Witness>,
}

/// Verdict of decomposing a candidate value n with respect to p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    /// n = 1: the Sylow subgroup is normal.
    Trivial,
    /// n is a prime power q^t = 1 mod p, realized by the Frobenius recipe.
    PrimePower { power: PrimePower, frobenius: FrobeniusRecipe },
    /// n is one of the exceptional simple-group values for this p. Below
    /// p^2 a Sylow count factors as prime powers times counts of simple
    /// groups, with every nontrivial factor exceeding p; a non-prime-power
    /// below p^2 therefore collapses to a single simple-group count.
    Simple { cases: Vec<ExceptionalCase> },
    /// n occurs as no Sylow p-count at all.
    NotASylowNumber,
}

/// What a Sylow count below p^2 forces about p-solvability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolvabilityVerdict {
    /// n is a prime power (or 1): any group attaining it is p-solvable.
    PSolvableForced { power: Option<PrimePower> },
    /// n is not a prime power: no group attaining it is p-solvable.
    NonPSolvableForced { cases: Vec<ExceptionalCase> },
    /// p is a Mersenne prime > 3, which the dichotomy does not cover.
    OutsideHypothesis { p: u64 },
}

impl fmt::Display for SolvabilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolvabilityVerdict::PSolvableForced { power: Some(pp) } => {
                write!(f, "p-solvable forced: {} = {}^{} is a prime power", pp.value, pp.base, pp.exponent)
            }
            SolvabilityVerdict::PSolvableForced { power: None } => {
                write!(f, "p-solvable forced: the Sylow subgroup is normal")
            }
            SolvabilityVerdict::NonPSolvableForced { cases } => {
                write!(f, "not p-solvable: value is not a prime power")?;
                for c in cases {
                    write!(f, "; realized by {c}")?;
                }
                Ok(())
            }
            SolvabilityVerdict::OutsideHypothesis { p } => {
                write!(f, "outside hypothesis: {p} is a Mersenne prime greater than 3")
            }
        }
    }
}

fn require_prime(p: u64, op: &str) -> Result<()> {
    if !numtheory::is_prime(p) {
        return Err(Error::domain(format!("{op} requires a prime, got {p}")));
    }
    Ok(())
}

/// The exceptional (theorem) cases valid at p, with the value each yields.
fn exceptional_cases(p: u64) -> Vec<(u64, ExceptionalCase)> {
    let mut out = Vec::new();
    if p == 13 {
        out.push((144, ExceptionalCase::Psl3Of3));
    }
    if p >= 5 {
        out.push((1 + p, ExceptionalCase::Psl2P(p)));
    }
    if p > 3 && numtheory::is_fermat_prime(p) {
        out.push((1 + (p - 3) * p / 2, ExceptionalCase::Psl2PMinus1(p)));
    }
    if p > 3 && numtheory::is_mersenne_prime(p) {
        out.push((1 + (p + 3) * p / 2, ExceptionalCase::Psl2PPlus1(p)));
    }
    out
}

/// All admissible Sylow counts below p^2, sorted by value, each with every
/// applicable witness.
///
/// A value can carry several witnesses: at p = 5 the count 6 is both 1 + p
/// (PSL_2(5)) and 1 + (p-3)p/2 (PSL_2(4)); for Mersenne p the count 1 + p
/// is a power of two and so also has a Frobenius witness.
pub fn admissible_sylow_numbers(p: u64) -> Result<Vec<AdmissibleValue>> {
    require_prime(p, "admissible_sylow_numbers")?;
    let mut table: BTreeMap<u64, Vec<Witness>> = BTreeMap::new();
    table.insert(1, vec![Witness::Trivial]);
    for k in 1..p {
        let v = 1 + k * p;
        if let Some(power) = numtheory::as_prime_power(v) {
            table.entry(v).or_default().push(Witness::PrimePower {
                power,
                frobenius: FrobeniusRecipe { p, r: power.base, t: power.exponent },
            });
        }
    }
    for (value, case) in exceptional_cases(p) {
        debug_assert!(value < p * p && value % p == 1);
        table.entry(value).or_default().push(Witness::Simple { case, family: case.family() });
    }
    Ok(table
        .into_iter()
        .map(|(value, witnesses)| AdmissibleValue { value, r_coefficient: (value - 1) / p, witnesses })
        .collect())
}

fn check_candidate(n: u64, p: u64, op: &str) -> Result<()> {
    require_prime(p, op)?;
    if n < 1 {
        return Err(Error::domain(format!("{op} requires n >= 1, got {n}")));
    }
    if n % p != 1 {
        return Err(Error::domain(format!("{op}: {n} is not congruent to 1 mod {p}")));
    }
    if n >= p * p {
        return Err(Error::domain(format!("{op}: {n} is not below {p}^2 = {}", p * p)));
    }
    Ok(())
}

/// Decomposes a candidate count n = 1 mod p, n < p^2.
pub fn decompose(n: u64, p: u64) -> Result<Decomposition> {
    check_candidate(n, p, "decompose")?;
    if n == 1 {
        return Ok(Decomposition::Trivial);
    }
    if let Some(power) = numtheory::as_prime_power(n) {
        return Ok(Decomposition::PrimePower {
            power,
            frobenius: FrobeniusRecipe { p, r: power.base, t: power.exponent },
        });
    }
    let cases: Vec<ExceptionalCase> = exceptional_cases(p)
        .into_iter()
        .filter(|&(value, _)| value == n)
        .map(|(_, case)| case)
        .collect();
    if cases.is_empty() {
        Ok(Decomposition::NotASylowNumber)
    } else {
        Ok(Decomposition::Simple { cases })
    }
}

/// The p-solvability dichotomy for a count n = 1 mod p below p^2: prime
/// power forces p-solvable, non-prime-power forces non-p-solvable, except
/// that Mersenne primes p > 3 fall outside the hypothesis.
pub fn p_solvability_verdict(n: u64, p: u64) -> Result<SolvabilityVerdict> {
    check_candidate(n, p, "p_solvability_verdict")?;
    if p > 3 && numtheory::is_mersenne_prime(p) {
        return Ok(SolvabilityVerdict::OutsideHypothesis { p });
    }
    if n == 1 {
        return Ok(SolvabilityVerdict::PSolvableForced { power: None });
    }
    if let Some(power) = numtheory::as_prime_power(n) {
        return Ok(SolvabilityVerdict::PSolvableForced { power: Some(power) });
    }
    let cases = match decompose(n, p)? {
        Decomposition::Simple { cases } => cases,
        _ => Vec::new(),
    };
    Ok(SolvabilityVerdict::NonPSolvableForced { cases })
}

/// One row per prime up to p_max.
pub fn census(p_max: u64) -> Result<Vec<(u64, Vec<AdmissibleValue>)>> {
    if p_max < 2 {
        return Err(Error::domain(format!("census requires p_max >= 2, got {p_max}")));
    }
    (2..=p_max)
        .filter(|&p| numtheory::is_prime(p))
        .map(|p| Ok((p, admissible_sylow_numbers(p)?)))
        .collect()
}
