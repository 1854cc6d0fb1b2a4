//! Executable audit of the inequality chains behind the family-by-family
//! range analysis.
//!
//! Each family's "for parameters at least this, the count dominates p^2"
//! argument rests on a handful of elementary inequalities.
//! Each is registered here as a (side condition, lhs, relation, rhs) check
//! in exact big-integer arithmetic and swept over a parameter grid; a
//! violation would mean the corresponding case split is unsound.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::numtheory;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rel {
    Le,
    Lt,
    Ge,
    Gt,
}

impl Rel {
    fn holds(self, lhs: &BigUint, rhs: &BigUint) -> bool {
        match self {
            Rel::Le => lhs <= rhs,
            Rel::Lt => lhs < rhs,
            Rel::Ge => lhs >= rhs,
            Rel::Gt => lhs > rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Rel::Le => "<=",
            Rel::Lt => "<",
            Rel::Ge => ">=",
            Rel::Gt => ">",
        }
    }
}

/// One registered inequality: evaluates to None when the side condition
/// excludes the grid point.
type ChainEval = Box<dyn Fn(u64, u64) -> Option<(BigUint, Rel, BigUint)> + Send + Sync>;

struct Chain {
    id: &'static str,
    family: &'static str,
    uses_e: bool,
    eval: ChainEval,
}

/// Result of auditing one chain over the grid.
#[derive(Debug, Clone)]
pub struct ChainReport {
    pub id: String,
    pub family: String,
    pub points_checked: u64,
    pub violations: Vec<String>,
}

/// Result of the full audit.
#[derive(Debug, Clone)]
pub struct AuditReport {
    pub q_max: u64,
    pub e_max: u64,
    pub chains: Vec<ChainReport>,
}

impl AuditReport {
    pub fn total_points(&self) -> u64 {
        self.chains.iter().map(|c| c.points_checked).sum()
    }

    pub fn total_violations(&self) -> u64 {
        self.chains.iter().map(|c| c.violations.len() as u64).sum()
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn pw(q: u64, e: u64) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

fn sq(x: BigUint) -> BigUint {
    &x * &x
}

fn phi(e: u64) -> u64 {
    numtheory::euler_totient(e).expect("totient of a positive integer")
}

fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// q = 2^odd >= 8 (Suzuki and 2F4 parameters).
fn suzuki_q(q: u64) -> bool {
    q >= 8 && matches!(numtheory::as_prime_power(q), Some(pp) if pp.base == 2 && pp.exponent % 2 == 1)
}

/// q = 3^odd >= 27 (Ree parameters).
fn ree_q(q: u64) -> bool {
    q >= 27
        && matches!(numtheory::as_prime_power(q), Some(pp) if pp.base == 3 && pp.exponent % 2 == 1)
}

fn chain(
    id: &'static str,
    family: &'static str,
    uses_e: bool,
    eval: impl Fn(u64, u64) -> Option<(BigUint, Rel, BigUint)> + Send + Sync + 'static,
) -> Chain {
    Chain { id, family, uses_e, eval: Box::new(eval) }
}

/// Eq-style torus-count numerator for the orthogonal-plus subgroup case:
/// q^{(e+1)e} (q^{e+1}-1)(q-1)(q^4-1)(q^6-1)...(q^{2e-2}-1)(q^e-1).
fn omega_plus_numerator(e: u64, q: u64) -> BigUint {
    let mut v = pw(q, (e + 1) * e) * (pw(q, e + 1) - 1u32) * (big(q) - 1u32);
    for j in 2..e {
        v *= pw(q, 2 * j) - 1u32;
    }
    v * (pw(q, e) - 1u32)
}

fn registry() -> Vec<Chain> {
    let mut v: Vec<Chain> = Vec::new();

    // The cyclotomic bound every family analysis leans on: Phi_e(q) < 4 q^phi(e).
    v.push(chain("cyclotomic.upper-bound", "all", true, |q, e| {
        Some((
            numtheory::cyclotomic_big(e, q).expect("in range"),
            Rel::Lt,
            big(4) * pw(q, phi(e)),
        ))
    }));

    // ---- linear: n_p(GL_e(q)) = q^{e(e-1)/2}(q-1)...(q^{e-1}-1)/e ----
    v.push(chain("linear.e6.growth", "linear", true, |q, e| {
        (e >= 6).then(|| (pw(q, e * (e - 1) / 2), Rel::Gt, big(16) * pw(q, 2 * (e - 1))))
    }));
    v.push(chain("linear.e6.factor", "linear", true, |q, e| {
        (e >= 6).then(|| (pw(q, e - 1) - 1u32, Rel::Ge, big(e)))
    }));
    v.push(chain("linear.e6.phi", "linear", true, |q, e| {
        (e >= 6).then(|| (pw(q, 2 * (e - 1)), Rel::Ge, pw(q, 2 * phi(e))))
    }));
    v.push(chain("linear.e5.drop-divisor", "linear", false, |q, _| {
        let lhs = pw(q, 10) * (pw(q, 1) - 1u32) * (pw(q, 2) - 1u32) * (pw(q, 3) - 1u32)
            * (pw(q, 4) - 1u32);
        let rhs = big(5)
            * pw(q, 10)
            * sq(sq(big(q) - 1u32))
            * sq(big(q) + 1u32)
            * (pw(q, 2) + 1u32);
        Some((lhs, Rel::Ge, rhs))
    }));
    v.push(chain("linear.e5.growth", "linear", false, |q, _| {
        let lhs = pw(q, 10) * sq(sq(big(q) - 1u32)) * sq(big(q) + 1u32) * (pw(q, 2) + 1u32);
        Some((lhs, Rel::Ge, pw(q, 14)))
    }));
    v.push(chain("linear.e5.tail", "linear", false, |q, _| {
        Some((pw(q, 14), Rel::Gt, big(16) * pw(q, 8)))
    }));
    v.push(chain("linear.e4.value", "linear", false, |q, _| {
        (q >= 3).then(|| {
            let lhs =
                pw(q, 6) * (big(q) - 1u32) * (pw(q, 2) - 1u32) * (pw(q, 3) - 1u32);
            (lhs, Rel::Ge, big(4) * pw(q, 8))
        })
    }));
    v.push(chain("linear.e4.tail", "linear", false, |q, _| {
        (q >= 3).then(|| (pw(q, 8), Rel::Ge, big(16) * pw(q, 4)))
    }));
    v.push(chain("linear.e3.drop-divisor", "linear", false, |q, _| {
        let lhs = pw(q, 3) * (big(q) - 1u32) * (pw(q, 2) - 1u32);
        Some((lhs, Rel::Ge, pw(q, 4) * sq(big(q) - 1u32)))
    }));
    v.push(chain("linear.e3.growth", "linear", false, |q, _| {
        (q >= 7).then(|| (sq(big(q) - 1u32), Rel::Ge, big(27)))
    }));
    v.push(chain("linear.e3.phi", "linear", false, |q, _| {
        Some((big(9) * pw(q, 4), Rel::Ge, sq(pw(q, 2) + big(q) + 1u32)))
    }));
    v.push(chain("linear.e2.value", "linear", false, |q, _| {
        (q >= 5).then(|| (big(2) * big(q) * (big(q) - 1u32), Rel::Ge, sq(big(q) + 1u32)))
    }));
    v.push(chain("linear.psl3.torus", "linear", false, |q, _| {
        q.is_power_of_two()
            .then(|| (pw(q, 3) * (pw(q, 3) - 1u32), Rel::Gt, big(2) * sq(big(q) + 1u32)))
    }));
    v.push(chain("linear.e1.dihedral", "linear", false, |q, _| {
        (q >= 13).then(|| (big(2) * big(q) * (big(q) + 1u32), Rel::Ge, sq(big(q) - 1u32)))
    }));

    // ---- unitary: n_p(GU_e(q)) = q^{e(e-1)/2}(q+1)(q^2-1).../e ----
    let su_partial = |q: u64, e: u64| {
        // q^{e(e-1)/2} (q+1)(q^2-1)...(q^{e-2}-(-1)^{e-2})
        let mut prod = pw(q, e * (e - 1) / 2);
        for i in 1..=e - 2 {
            prod *= if i % 2 == 0 { pw(q, i) - 1u32 } else { pw(q, i) + 1u32 };
        }
        prod
    };
    v.push(chain("unitary.phi2e", "unitary", true, |q, e| {
        (e >= 3).then(|| (pw(q, 4 * e - 2), Rel::Ge, pw(q, 2 * phi(2 * e))))
    }));
    v.push(chain("unitary.e9.growth", "unitary", true, |q, e| {
        (e >= 9).then(|| (pw(q, e * (e - 1) / 2), Rel::Ge, big(16) * pw(q, 4 * (e - 1))))
    }));
    v.push(chain("unitary.e78", "unitary", true, move |q, e| {
        (e == 7 || e == 8).then(|| (su_partial(q, e), Rel::Ge, big(16) * pw(q, 4 * e - 2)))
    }));
    v.push(chain("unitary.e6", "unitary", false, |q, _| {
        let lhs = pw(q, 15) * (big(q) + 1u32) * (pw(q, 2) - 1u32) * (pw(q, 3) + 1u32)
            * (pw(q, 4) - 1u32);
        Some((lhs, Rel::Gt, pw(q, 15)))
    }));
    v.push(chain("unitary.e6.tail", "unitary", false, |q, _| {
        Some((pw(q, 15), Rel::Gt, big(16) * pw(q, 4)))
    }));
    // The count at e = 5 dominates 16 q^8 directly. (The intermediate
    // lower bound q^16 (q-1)^2 (q^2-q+1) sometimes quoted for this case
    // fails for q >= 3; the direct comparison is what the conclusion
    // needs.)
    v.push(chain("unitary.e5.value", "unitary", false, |q, _| {
        let lhs = pw(q, 10) * (big(q) + 1u32) * (pw(q, 2) - 1u32) * (pw(q, 3) + 1u32)
            * (pw(q, 4) - 1u32);
        Some((lhs, Rel::Gt, big(5) * big(16) * pw(q, 8)))
    }));
    v.push(chain("unitary.e4.drop", "unitary", false, |q, _| {
        let lhs = pw(q, 6) * (big(q) + 1u32) * (pw(q, 2) - 1u32) * (pw(q, 3) + 1u32);
        let rhs = big(4) * pw(q, 6) * (pw(q, 3) + 1u32) * (big(q) - 1u32);
        Some((lhs, Rel::Ge, rhs))
    }));
    v.push(chain("unitary.e4.tail", "unitary", false, |q, _| {
        let lhs = pw(q, 6) * (pw(q, 3) + 1u32) * (big(q) - 1u32);
        Some((lhs, Rel::Gt, big(16) * pw(q, 4)))
    }));
    v.push(chain("unitary.e3.phi", "unitary", false, |q, _| {
        Some((sq(pw(q, 2) - big(q) + 1u32), Rel::Le, big(3) * pw(q, 4)))
    }));
    v.push(chain("unitary.e3.value", "unitary", false, |q, _| {
        (q >= 4).then(|| {
            let lhs = pw(q, 3) * (big(q) + 1u32) * (pw(q, 2) - 1u32);
            (lhs, Rel::Ge, big(9) * pw(q, 4))
        })
    }));
    v.push(chain("unitary.su3.torus", "unitary", false, |q, _| {
        (q >= 4).then(|| {
            let lhs = pw(q, 3) * (big(q) - 1u32) * sq(big(q) + 1u32);
            (lhs, Rel::Ge, big(3) * pw(q, 4) * (big(q) - 1u32))
        })
    }));
    v.push(chain("unitary.su3.growth", "unitary", false, |q, _| {
        (q >= 4).then(|| (pw(q, 4) * (big(q) - 1u32), Rel::Ge, big(3) * pw(q, 4)))
    }));
    v.push(chain("unitary.su3.phi", "unitary", false, |q, _| {
        Some((big(3) * pw(q, 4), Rel::Ge, sq(pw(q, 2) + 1u32)))
    }));
    v.push(chain("unitary.su3.q-minus-1.p2", "unitary", false, |q, _| {
        Some((sq(big(q) - 1u32), Rel::Le, big(2) * pw(q, 2)))
    }));
    v.push(chain("unitary.su3.q-minus-1.value", "unitary", false, |q, _| {
        Some((pw(q, 3), Rel::Ge, big(2) * pw(q, 2)))
    }));

    // ---- symplectic: n_p(Sp_{2e}(q)) per the two torus cases ----
    v.push(chain("symplectic.2e.phi", "symplectic", true, |q, e| {
        (e >= 2).then(|| {
            (
                sq(numtheory::cyclotomic_big(2 * e, q).expect("in range")),
                Rel::Lt,
                big(16) * pw(q, 4 * e - 2),
            )
        })
    }));
    v.push(chain("symplectic.2e.e4.factor", "symplectic", true, |q, e| {
        (e >= 4).then(|| (pw(q, e) - 1u32, Rel::Ge, big(2 * e)))
    }));
    v.push(chain("symplectic.2e.e4.growth", "symplectic", true, |q, e| {
        (e >= 4).then(|| {
            let lhs = pw(q, e * e) * (pw(q, 2) - 1u32) * (pw(q, 4) - 1u32) * (pw(q, 6) - 1u32);
            (lhs, Rel::Ge, big(16) * pw(q, 4 * e - 2))
        })
    }));
    v.push(chain("symplectic.2e.e3.value", "symplectic", false, |q, _| {
        let lhs = pw(q, 9) * (pw(q, 2) - 1u32) * (pw(q, 4) - 1u32) * (pw(q, 3) - 1u32);
        Some((lhs, Rel::Ge, big(6) * pw(q, 12)))
    }));
    v.push(chain("symplectic.2e.e3.tail", "symplectic", false, |q, _| {
        Some((big(16) * pw(q, 4), Rel::Le, pw(q, 12)))
    }));
    v.push(chain("symplectic.2e.e2.value", "symplectic", false, |q, _| {
        (q >= 3).then(|| (pw(q, 4) * sq(pw(q, 2) - 1u32), Rel::Ge, big(64) * pw(q, 4)))
    }));
    v.push(chain("symplectic.odd-e.factor", "symplectic", true, |q, e| {
        (e >= 3 && e % 2 == 1).then(|| (pw(q, e) - 1u32, Rel::Ge, big(2 * e)))
    }));
    v.push(chain("symplectic.odd-e.growth", "symplectic", true, |q, e| {
        (e >= 3 && e % 2 == 1).then(|| {
            let lhs = pw(q, e * e) * (pw(q, 2) - 1u32) * (pw(q, 4) - 1u32);
            let rhs = (pw(q, 2) + 1u32) * sq(big(q) + 1u32) * pw(q, e * e);
            (lhs, Rel::Ge, rhs)
        })
    }));
    v.push(chain("symplectic.odd-e.tail", "symplectic", true, |q, e| {
        (e >= 3 && e % 2 == 1).then(|| {
            let lhs = (pw(q, 2) + 1u32) * sq(big(q) + 1u32) * pw(q, e * e);
            (lhs, Rel::Ge, big(16) * pw(q, 2 * e - 2))
        })
    }));
    v.push(chain("symplectic.odd-e.phi", "symplectic", true, |q, e| {
        (e >= 3 && e % 2 == 1).then(|| (pw(q, 2 * (e - 1)), Rel::Ge, pw(q, 2 * phi(e))))
    }));

    // ---- orthogonal plus: the two normalizer-index displays ----
    v.push(chain("orth-plus.sub.e4.step1", "orthogonal-plus", true, |q, e| {
        (e >= 4).then(|| {
            let lhs = pw(q, e * (e + 1)) * (pw(q, e + 1) - 1u32) * (pw(q, 4) - 1u32);
            let rhs = (pw(q, e + 1) - 1u32) * pw(q, e * e + e + 3);
            (lhs, Rel::Ge, rhs)
        })
    }));
    v.push(chain("orth-plus.sub.e4.step2", "orthogonal-plus", true, |q, e| {
        (e >= 4).then(|| {
            let lhs = (pw(q, e + 1) - 1u32) * pw(q, e * e + e + 3);
            (lhs, Rel::Ge, big(16) * pw(q, 4 * e - 2))
        })
    }));
    v.push(chain("orth-plus.sub.e4.factor", "orthogonal-plus", true, |q, e| {
        (e >= 4).then(|| (pw(q, e) - 1u32, Rel::Ge, big(2 * e)))
    }));
    v.push(chain("orth-plus.sub.e23", "orthogonal-plus", true, |q, e| {
        ((e == 2 || e == 3) && !(e == 2 && q == 2)).then(|| {
            let rhs = big(2 * e) * big(16) * pw(q, 2 * phi(2 * e));
            (omega_plus_numerator(e, q), Rel::Ge, rhs)
        })
    }));
    v.push(chain("orth-plus.sub.e2q2", "orthogonal-plus", true, |q, e| {
        (e == 2 && q == 2).then(|| (big(336), Rel::Gt, big(25)))
    }));
    v.push(chain("orth-plus.full.n5.growth", "orthogonal-plus", true, |q, e| {
        (e >= 5).then(|| {
            let n = e;
            let lhs = pw(q, n * (n - 1)) * (pw(q, n) - 1u32);
            (lhs, Rel::Ge, big(16) * pw(q, 4 * n - 4))
        })
    }));
    v.push(chain("orth-plus.full.n5.factor", "orthogonal-plus", true, |q, e| {
        (e >= 5).then(|| (pw(q, e - 1) - 1u32, Rel::Ge, big(2 * (e - 1))))
    }));
    v.push(chain("orth-plus.full.n5.phi", "orthogonal-plus", true, |q, e| {
        (e >= 5).then(|| (pw(q, 4 * e - 4), Rel::Ge, pw(q, 2 * phi(2 * e - 2))))
    }));
    v.push(chain("orth-plus.full.n34", "orthogonal-plus", true, |q, e| {
        ((e == 3 || e == 4) && !(e == 3 && q == 2)).then(|| {
            let n = e;
            let rhs = big(2 * (n - 1)) * big(16) * pw(q, 4);
            (omega_plus_numerator(n - 1, q), Rel::Ge, rhs)
        })
    }));
    v.push(chain("orth-plus.full.n3q2", "orthogonal-plus", true, |q, e| {
        (e == 3 && q == 2).then(|| (big(336), Rel::Gt, big(25)))
    }));

    // ---- orthogonal minus ----
    v.push(chain("orth-minus.odd-q.torus", "orthogonal-minus", true, |q, e| {
        (q % 2 == 1 && e >= 2).then(|| {
            let n = e;
            (sq(pw(q, n - 1) + 1u32), Rel::Le, big(4) * pw(q, 2 * (n - 1)))
        })
    }));
    v.push(chain("orth-minus.omega8.growth", "orthogonal-minus", false, |q, _| {
        let lhs = pw(q, 8) * (pw(q, 2) - 1u32) * (pw(q, 4) - 1u32) * (pw(q, 6) - 1u32);
        Some((lhs, Rel::Gt, pw(q, 17)))
    }));
    v.push(chain("orth-minus.omega8.phi", "orthogonal-minus", false, |q, _| {
        Some((sq(pw(q, 4) + 1u32), Rel::Le, big(3) * pw(q, 8)))
    }));
    v.push(chain("orth-minus.omega8.tail", "orthogonal-minus", false, |q, _| {
        Some((big(3) * pw(q, 8), Rel::Lt, pw(q, 17)))
    }));

    // ---- Suzuki (q = 2^odd >= 8, sqrt(2q) exact) ----
    let sz_root = |q: u64| {
        let pp = numtheory::as_prime_power(q).expect("suzuki parameter");
        2u64.pow(pp.exponent.div_ceil(2))
    };
    v.push(chain("suzuki.q-minus-1", "suzuki", false, move |q, _| {
        suzuki_q(q).then(|| {
            (pw(q, 2) * (pw(q, 2) + 1u32), Rel::Ge, big(2) * sq(big(q) - 1u32))
        })
    }));
    v.push(chain("suzuki.torus-minus.p2", "suzuki", false, move |q, _| {
        suzuki_q(q).then(|| {
            let s = sz_root(q);
            (sq(big(q - s + 1)), Rel::Le, big(4) * pw(q, 2))
        })
    }));
    v.push(chain("suzuki.torus-minus.value", "suzuki", false, move |q, _| {
        suzuki_q(q).then(|| {
            let s = sz_root(q);
            let lhs = pw(q, 2) * (big(q) - 1u32) * big(q + s + 1);
            (lhs, Rel::Ge, big(4) * pw(q, 2) * big(q + s + 1))
        })
    }));
    v.push(chain("suzuki.torus-minus.tail", "suzuki", false, move |q, _| {
        suzuki_q(q).then(|| {
            let s = sz_root(q);
            (pw(q, 2) * big(q + s + 1), Rel::Ge, big(4) * pw(q, 2))
        })
    }));
    v.push(chain("suzuki.torus-plus.p2", "suzuki", false, move |q, _| {
        suzuki_q(q).then(|| {
            let s = sz_root(q);
            (sq(big(q + s + 1)), Rel::Le, big(5) * pw(q, 2))
        })
    }));
    v.push(chain("suzuki.torus-plus.value", "suzuki", false, move |q, _| {
        suzuki_q(q).then(|| {
            let s = sz_root(q);
            let lhs = pw(q, 2) * (big(q) - 1u32) * big(q - s + 1);
            (lhs, Rel::Ge, big(4) * pw(q, 3))
        })
    }));
    v.push(chain("suzuki.torus-plus.tail", "suzuki", false, move |q, _| {
        suzuki_q(q).then(|| (pw(q, 3), Rel::Ge, big(5) * pw(q, 2)))
    }));

    // ---- Ree 2G2 (q = 3^odd >= 27, sqrt(3q) exact) ----
    let ree_root = |q: u64| {
        let pp = numtheory::as_prime_power(q).expect("ree parameter");
        3u64.pow(pp.exponent.div_ceil(2))
    };
    v.push(chain("ree.q-plus-1.value", "ree", false, move |q, _| {
        ree_q(q).then(|| {
            let lhs = pw(q, 3) * (pw(q, 2) - big(q) + 1u32) * (big(q) - 1u32);
            (lhs, Rel::Gt, big(6) * pw(q, 3))
        })
    }));
    v.push(chain("ree.q-plus-1.tail", "ree", false, move |q, _| {
        ree_q(q).then(|| (big(3) * pw(q, 2), Rel::Ge, sq(big(q) + 1u32)))
    }));
    v.push(chain("ree.q-minus-1", "ree", false, move |q, _| {
        ree_q(q).then(|| (pw(q, 3), Rel::Gt, sq(big(q) - 1u32)))
    }));
    v.push(chain("ree.torus-minus.value", "ree", false, move |q, _| {
        ree_q(q).then(|| {
            let s = ree_root(q);
            let lhs = pw(q, 3) * (pw(q, 2) - 1u32) * big(q + s + 1);
            (lhs, Rel::Ge, big(6) * pw(q, 4))
        })
    }));
    v.push(chain("ree.torus-minus.p2", "ree", false, move |q, _| {
        ree_q(q).then(|| {
            let s = ree_root(q);
            (sq(big(q - s + 1)), Rel::Le, big(4) * pw(q, 2))
        })
    }));
    v.push(chain("ree.torus-minus.tail", "ree", false, move |q, _| {
        ree_q(q).then(|| (big(4) * pw(q, 2), Rel::Lt, pw(q, 4)))
    }));
    v.push(chain("ree.torus-plus.value", "ree", false, move |q, _| {
        ree_q(q).then(|| {
            let s = ree_root(q);
            let lhs = pw(q, 3) * (pw(q, 2) - 1u32) * big(q - s + 1);
            (lhs, Rel::Ge, big(6) * pw(q, 4))
        })
    }));
    v.push(chain("ree.torus-plus.p2", "ree", false, move |q, _| {
        ree_q(q).then(|| {
            let s = ree_root(q);
            (sq(big(q + s + 1)), Rel::Le, big(9) * pw(q, 2))
        })
    }));
    v.push(chain("ree.torus-plus.tail", "ree", false, move |q, _| {
        ree_q(q).then(|| (pw(q, 4), Rel::Ge, big(9) * pw(q, 2)))
    }));

    // ---- triality D4 ----
    v.push(chain("triality-d4.value", "triality-d4", false, |q, _| {
        let lhs = pw(q, 12)
            * sq(pw(q, 2) + big(q) + 1u32)
            * sq(pw(q, 2) - big(q) + 1u32)
            * sq(big(q) + 1u32)
            * sq(big(q) - 1u32);
        Some((lhs, Rel::Ge, big(32) * pw(q, 8)))
    }));
    v.push(chain("triality-d4.p2", "triality-d4", false, |q, _| {
        Some((sq(pw(q, 4) - pw(q, 2) + 1u32), Rel::Le, big(8) * pw(q, 8)))
    }));

    // ---- F4 and the large exceptional families: p^2 bound, minimal-degree
    // bound, and the tail joining them ----
    v.push(chain("f4.p2", "f4", false, |q, _| {
        Some((sq(pw(q, 4) + 1u32), Rel::Le, big(3) * pw(q, 8)))
    }));
    v.push(chain("f4.min-degree", "f4", false, |q, _| {
        let lhs = (pw(q, 12) - 1u32) * (pw(q, 4) + 1u32);
        Some((lhs, Rel::Ge, pw(q, 15) * (big(q) - 1u32)))
    }));
    v.push(chain("f4.tail", "f4", false, |q, _| {
        Some((pw(q, 15), Rel::Gt, big(3) * pw(q, 8)))
    }));
    v.push(chain("2f4.p2", "2f4", false, move |q, _| {
        suzuki_q(q).then(|| {
            let s = sz_root(q);
            let torus = pw(q, 2) + big(q) + 1u32 + big(s) * (big(q) + 1u32);
            (sq(torus), Rel::Le, big(25) * pw(q, 4))
        })
    }));
    v.push(chain("2f4.min-degree", "2f4", false, move |q, _| {
        suzuki_q(q).then(|| {
            let lhs = (pw(q, 6) + 1u32) * (pw(q, 3) + 1u32) * (big(q) + 1u32);
            (lhs, Rel::Gt, pw(q, 10))
        })
    }));
    v.push(chain("2f4.tail", "2f4", false, move |q, _| {
        suzuki_q(q).then(|| (pw(q, 10), Rel::Gt, big(25) * pw(q, 4)))
    }));
    v.push(chain("e6.p2", "e6", false, |q, _| {
        Some((sq(pw(q, 6) + 1u32), Rel::Lt, big(3) * pw(q, 12)))
    }));
    v.push(chain("e6.min-degree", "e6", false, |q, _| {
        let lhs = (pw(q, 9) - 1u32) * (pw(q, 8) + pw(q, 4) + 1u32);
        Some((lhs, Rel::Gt, pw(q, 16) * (big(q) - 1u32)))
    }));
    v.push(chain("e6.tail", "e6", false, |q, _| {
        Some((pw(q, 16), Rel::Gt, big(3) * pw(q, 12)))
    }));
    v.push(chain("2e6.p2", "2e6", false, |q, _| {
        Some((sq(pw(q, 6) + 1u32), Rel::Le, big(3) * pw(q, 12)))
    }));
    v.push(chain("2e6.min-degree", "2e6", false, |q, _| {
        let lhs = (pw(q, 12) - 1u32) * (pw(q, 6) - pw(q, 3) + 1u32) * (pw(q, 4) + 1u32);
        Some((lhs, Rel::Gt, pw(q, 15) * (big(q) - 1u32)))
    }));
    v.push(chain("2e6.tail", "2e6", false, |q, _| {
        Some((pw(q, 15), Rel::Gt, big(3) * pw(q, 12)))
    }));
    v.push(chain("e7.p2", "e7", false, |q, _| {
        Some((sq(pw(q, 9) + 1u32), Rel::Lt, big(3) * pw(q, 18)))
    }));
    v.push(chain("e7.min-degree", "e7", false, |q, _| {
        let lhs = (pw(q, 14) - 1u32) * (pw(q, 9) + 1u32) * (pw(q, 5) + 1u32);
        Some((lhs, Rel::Ge, pw(q, 27) * (big(q) - 1u32)))
    }));
    v.push(chain("e7.tail", "e7", false, |q, _| {
        Some((pw(q, 27), Rel::Gt, big(3) * pw(q, 18)))
    }));
    v.push(chain("e8.p2", "e8", false, |q, _| {
        Some((sq(pw(q, 15) + 1u32), Rel::Lt, big(3) * pw(q, 30)))
    }));
    v.push(chain("e8.min-degree", "e8", false, |q, _| {
        let lhs = (pw(q, 20) - 1u32) * (pw(q, 12) + 1u32) * (pw(q, 10) + 1u32)
            * (pw(q, 6) + 1u32);
        Some((lhs, Rel::Gt, pw(q, 47) * (big(q) - 1u32)))
    }));
    v.push(chain("e8.tail", "e8", false, |q, _| {
        Some((pw(q, 47), Rel::Gt, big(3) * pw(q, 30)))
    }));

    // ---- alternating: (p-2)! > p^2 for p >= 7, and the n >= 6 growth ----
    v.push(chain("alternating.factorial", "alternating", true, |_, e| {
        (e >= 7 && numtheory::is_prime(e)).then(|| (factorial(e - 2), Rel::Gt, big(e * e)))
    }));
    v.push(chain("alternating.degree6", "alternating", true, |_, e| {
        (e >= 6).then(|| {
            let n = e;
            let lhs = big(n) * big(n - 1) * big(n - 2) * big(n - 3) * big(n - 4);
            (lhs, Rel::Ge, big(720))
        })
    }));

    v
}

/// Sweeps every registered inequality chain over 2 <= q <= q_max and
/// 1 <= e <= e_max (each chain applies its own side conditions) and reports
/// any violations. A clean report is the expected outcome.
pub fn proof_inequality_audit(q_max: u64, e_max: u64) -> Result<AuditReport> {
    if q_max < 2 || e_max < 2 {
        return Err(Error::domain(format!(
            "audit requires q_max >= 2 and e_max >= 2, got ({q_max}, {e_max})"
        )));
    }
    let mut chains = Vec::new();
    for c in registry() {
        let mut points = 0u64;
        let mut violations = Vec::new();
        let e_range: Vec<u64> = if c.uses_e { (1..=e_max).collect() } else { vec![0] };
        for q in 2..=q_max {
            for &e in &e_range {
                if let Some((lhs, rel, rhs)) = (c.eval)(q, e) {
                    points += 1;
                    if !rel.holds(&lhs, &rhs) {
                        violations.push(format!(
                            "{} at q={q}{}: {lhs} {} {rhs} fails",
                            c.id,
                            if c.uses_e { format!(", e={e}") } else { String::new() },
                            rel.symbol()
                        ));
                    }
                }
            }
        }
        chains.push(ChainReport {
            id: c.id.to_string(),
            family: c.family.to_string(),
            points_checked: points,
            violations,
        });
    }
    Ok(AuditReport { q_max, e_max, chains })
}
