//! Brute-force construction and full enumeration of small finite groups,
//! plus independent oracles for counting Sylow p-subgroups.
//!
//! Groups are built by breadth-first closure from generators and stored as an
//! explicit element list with deterministic ordering, so every downstream
//! count is reproducible bit for bit.

mod elements;

pub use elements::{AffineMap, Element, GroupLaw, Perm, ProjMatrix};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::finitefield::FieldSpec;
use crate::numtheory;

/// Default cap on the number of elements a closure may enumerate.
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

/// How a Sylow count was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SylowMethod {
    /// Counting elements of order p (valid when the Sylow subgroup is C_p).
    ElementCount,
    /// Orbit of one Sylow subgroup under conjugation, equivalently the index
    /// of its normalizer.
    ConjugacyOrbit,
}

/// The number of Sylow p-subgroups of a group, with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SylowReport {
    pub p: u64,
    /// The p-part of |G|.
    pub group_order_p_part: u64,
    pub n_p: u64,
    pub method: SylowMethod,
    /// The r in n_p = 1 + r p.
    pub r: u64,
}

impl SylowReport {
    fn new(p: u64, p_part: u64, n_p: u64, method: SylowMethod) -> SylowReport {
        assert_eq!(n_p % p, 1, "Sylow count must be 1 mod p");
        SylowReport { p, group_order_p_part: p_part, n_p, method, r: (n_p - 1) / p }
    }
}

/// A fully enumerated finite group.
///
/// Elements are indexed by insertion order of the defining closure; all
/// operations below work on indices.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    law: GroupLaw,
    elements: Vec<Element>,
    index: HashMap<Element, u32>,
    identity: u32,
    inverses: Vec<u32>,
}

impl FiniteGroup {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn law(&self) -> &GroupLaw {
        &self.law
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn element(&self, i: u32) -> &Element {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn index_of(&self, elem: &Element) -> Option<u32> {
        self.index.get(elem).copied()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let product = self.law.mul(&self.elements[a as usize], &self.elements[b as usize]);
        *self
            .index
            .get(&product)
            .expect("group is closed under multiplication")
    }

    pub fn inverse(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    pub fn conjugate(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    /// Least k >= 1 with g^k = identity.
    pub fn element_order(&self, g: u32) -> u64 {
        let mut k = 1u64;
        let mut x = g;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Breadth-first closure of `generators` under the law.
    ///
    /// Element order is the deterministic insertion order: identity first,
    /// then products explored in queue order with generators applied in the
    /// order given.
    pub fn closure(law: GroupLaw, generators: &[Element], cap: usize) -> Result<FiniteGroup> {
        if generators.is_empty() {
            return Err(Error::domain("closure requires at least one generator"));
        }
        let gens: Vec<Element> = generators
            .iter()
            .map(|g| law.normalize(g.clone()))
            .collect();
        let mut elements: Vec<Element> = Vec::new();
        let mut index: HashMap<Element, u32> = HashMap::new();
        let identity = law.identity();
        elements.push(identity.clone());
        index.insert(identity, 0);
        let mut cursor = 0usize;
        while cursor < elements.len() {
            for g in &gens {
                let product = law.mul(&elements[cursor], g);
                if !index.contains_key(&product) {
                    if elements.len() >= cap {
                        return Err(Error::resource(format!(
                            "closure exceeded the cap of {cap} elements"
                        )));
                    }
                    index.insert(product.clone(), elements.len() as u32);
                    elements.push(product);
                }
            }
            cursor += 1;
        }
        Self::finish(law, elements, index, false)
    }

    /// Wraps an explicit element list as a group, verifying closure under
    /// multiplication.
    pub fn from_elements(law: GroupLaw, elems: Vec<Element>) -> Result<FiniteGroup> {
        let mut elements: Vec<Element> = Vec::new();
        let mut index: HashMap<Element, u32> = HashMap::new();
        for e in elems {
            let e = law.normalize(e);
            if !index.contains_key(&e) {
                index.insert(e.clone(), elements.len() as u32);
                elements.push(e);
            }
        }
        Self::finish(law, elements, index, true)
    }

    fn finish(
        law: GroupLaw,
        elements: Vec<Element>,
        index: HashMap<Element, u32>,
        verify_closure: bool,
    ) -> Result<FiniteGroup> {
        let identity = *index
            .get(&law.identity())
            .ok_or_else(|| Error::domain("element set does not contain the identity"))?;
        let mut inverses = Vec::with_capacity(elements.len());
        for e in &elements {
            let inv = law.invert(e);
            let idx = index
                .get(&inv)
                .ok_or_else(|| Error::domain("element set is not closed under inversion"))?;
            inverses.push(*idx);
        }
        if verify_closure {
            for a in &elements {
                for b in &elements {
                    if !index.contains_key(&law.mul(a, b)) {
                        return Err(Error::domain("element set is not closed under multiplication"));
                    }
                }
            }
        }
        Ok(FiniteGroup { law, elements, index, identity, inverses })
    }

    fn require_cyclic_sylow(&self, p: u64, op: &str) -> Result<u64> {
        if p < 2 || !numtheory::is_prime(p) {
            return Err(Error::domain(format!("{op} requires a prime, got {p}")));
        }
        let order = self.order();
        if !order.is_multiple_of(p) {
            return Err(Error::precondition(format!("{op}: {p} does not divide |G| = {order}")));
        }
        if (order / p).is_multiple_of(p) {
            return Err(Error::precondition(format!(
                "{op}: {p}^2 divides |G| = {order}, the C_p counting argument does not apply"
            )));
        }
        Ok(order)
    }

    /// Sylow count by counting elements of order p.
    ///
    /// Requires p || |G|: every Sylow subgroup is then C_p, distinct ones
    /// meet trivially, and each contributes exactly p - 1 elements of
    /// order p.
    pub fn count_sylow_by_elements(&self, p: u64) -> Result<SylowReport> {
        self.require_cyclic_sylow(p, "count_sylow_by_elements")?;
        let count = (0..self.order() as u32)
            .filter(|&g| self.element_order(g) == p)
            .count() as u64;
        assert_eq!(count % (p - 1), 0, "order-p elements split into C_p subgroups");
        Ok(SylowReport::new(p, p, count / (p - 1), SylowMethod::ElementCount))
    }

    /// Sylow count as the size of the conjugation orbit of one subgroup
    /// `<g>` for the first element g of order p.
    ///
    /// Requires p || |G| so that `<g>` is itself a Sylow p-subgroup.
    pub fn count_sylow_by_conjugacy(&self, p: u64) -> Result<SylowReport> {
        self.require_cyclic_sylow(p, "count_sylow_by_conjugacy")?;
        let g = (0..self.order() as u32)
            .find(|&g| self.element_order(g) == p)
            .expect("Cauchy: an element of order p exists");
        let subgroup = self.cyclic_subgroup(g);
        let mut orbit: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
        for h in 0..self.order() as u32 {
            let mut conj: Vec<u32> = subgroup.iter().map(|&x| self.conjugate(h, x)).collect();
            conj.sort_unstable();
            orbit.insert(conj);
        }
        Ok(SylowReport::new(p, p, orbit.len() as u64, SylowMethod::ConjugacyOrbit))
    }

    /// General Sylow count for any p | |G|: locate a full Sylow p-subgroup
    /// and return the index of its normalizer. Covers the non-cyclic case
    /// (p^2 | |G|) that the two specialized oracles reject.
    pub fn count_sylow_by_normalizer(&self, p: u64) -> Result<SylowReport> {
        let subgroup = self.find_sylow_subgroup(p)?;
        let p_part = subgroup.len() as u64;
        let normalizer = self.normalizer_order(&subgroup)?;
        let n_p = self.order() / normalizer;
        Ok(SylowReport::new(p, p_part, n_p, SylowMethod::ConjugacyOrbit))
    }

    /// Elements of the cyclic subgroup generated by g, sorted by index.
    pub fn cyclic_subgroup(&self, g: u32) -> Vec<u32> {
        let mut members = vec![self.identity];
        let mut x = g;
        while x != self.identity {
            members.push(x);
            x = self.mul(x, g);
        }
        members.sort_unstable();
        members
    }

    /// Closure of a set of element indices inside this group.
    fn subgroup_closure(&self, seed: &[u32]) -> Vec<u32> {
        let mut members: Vec<u32> = vec![self.identity];
        let mut seen: std::collections::HashSet<u32> = members.iter().copied().collect();
        for &s in seed {
            if seen.insert(s) {
                members.push(s);
            }
        }
        let mut cursor = 0;
        while cursor < members.len() {
            for gi in 0..members.len() {
                let product = self.mul(members[cursor], members[gi]);
                if seen.insert(product) {
                    members.push(product);
                }
            }
            cursor += 1;
        }
        members.sort_unstable();
        members
    }

    /// A full Sylow p-subgroup, found by growing a p-subgroup through its
    /// normalizer until it reaches the p-part of |G|. Deterministic.
    pub fn find_sylow_subgroup(&self, p: u64) -> Result<Vec<u32>> {
        if p < 2 || !numtheory::is_prime(p) {
            return Err(Error::domain(format!("find_sylow_subgroup requires a prime, got {p}")));
        }
        let order = self.order();
        if !order.is_multiple_of(p) {
            return Err(Error::precondition(format!(
                "find_sylow_subgroup: {p} does not divide |G| = {order}"
            )));
        }
        let mut p_part = 1u64;
        let mut rest = order;
        while rest.is_multiple_of(p) {
            rest /= p;
            p_part *= p;
        }
        // Seed with the first element of order exactly p.
        let seed = (0..order as u32)
            .find_map(|g| {
                let k = self.element_order(g);
                if k.is_multiple_of(p) {
                    Some(self.power(g, k / p))
                } else {
                    None
                }
            })
            .expect("Cauchy: an element of order p exists");
        let mut subgroup = self.cyclic_subgroup(seed);
        while (subgroup.len() as u64) < p_part {
            let normalizer = self.normalizer_elements(&subgroup);
            let in_subgroup: std::collections::HashSet<u32> = subgroup.iter().copied().collect();
            let mut grew = false;
            for &y in &normalizer {
                if in_subgroup.contains(&y) {
                    continue;
                }
                // Strip the p'-part of y's order to get a p-element.
                let mut m = self.element_order(y);
                while m.is_multiple_of(p) {
                    m /= p;
                }
                let z = self.power(y, m);
                if z != self.identity && !in_subgroup.contains(&z) {
                    let mut seed: Vec<u32> = subgroup.clone();
                    seed.push(z);
                    let bigger = self.subgroup_closure(&seed);
                    debug_assert!(p_part.is_multiple_of(bigger.len() as u64));
                    subgroup = bigger;
                    grew = true;
                    break;
                }
            }
            assert!(grew, "normalizer of a non-Sylow p-subgroup grows it");
        }
        Ok(subgroup)
    }

    pub fn power(&self, g: u32, mut exp: u64) -> u32 {
        let mut base = g;
        let mut acc = self.identity;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    fn normalizer_elements(&self, subgroup: &[u32]) -> Vec<u32> {
        let target: Vec<u32> = {
            let mut v = subgroup.to_vec();
            v.sort_unstable();
            v
        };
        (0..self.order() as u32)
            .filter(|&h| {
                let mut conj: Vec<u32> = target.iter().map(|&x| self.conjugate(h, x)).collect();
                conj.sort_unstable();
                conj == target
            })
            .collect()
    }

    /// Order of the normalizer of a subgroup given as an element set.
    pub fn normalizer_order(&self, subgroup: &[u32]) -> Result<u64> {
        let mut sorted = subgroup.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &a in &sorted {
            for &b in &sorted {
                if sorted.binary_search(&self.mul(a, b)).is_err() {
                    return Err(Error::domain("input is not closed under multiplication"));
                }
            }
        }
        Ok(self.normalizer_elements(&sorted).len() as u64)
    }

    /// Multiset of element orders; equal for isomorphic groups.
    pub fn order_spectrum(&self) -> Vec<u64> {
        let mut spectrum: Vec<u64> = (0..self.order() as u32)
            .map(|g| self.element_order(g))
            .collect();
        spectrum.sort_unstable();
        spectrum
    }
}

/// The alternating group A_n for 3 <= n <= 8, generated by 3-cycles.
pub fn alternating_group(n: usize) -> Result<FiniteGroup> {
    if !(3..=8).contains(&n) {
        return Err(Error::domain(format!("alternating_group supports 3 <= n <= 8, got {n}")));
    }
    let gens: Vec<Element> = (2..n)
        .map(|k| Ok(Element::Perm(Perm::from_cycle(n, &[0, 1, k as u8])?)))
        .collect::<Result<_>>()?;
    let group = FiniteGroup::closure(GroupLaw::Permutation { degree: n }, &gens, DEFAULT_CLOSURE_CAP)?;
    let expected: u64 = (1..=n as u64).product::<u64>() / 2;
    assert_eq!(group.order(), expected, "A_{n} order");
    Ok(group)
}

/// Expected |PSL_n(q)| = q^(n(n-1)/2) * prod_{i=2..n} (q^i - 1) / gcd(n, q-1).
pub fn psl_order(n: u32, q: u64) -> Result<u64> {
    let mut order = numtheory::checked_pow(q, n * (n - 1) / 2)?;
    for i in 2..=n {
        order = order
            .checked_mul(numtheory::checked_pow(q, i)? - 1)
            .ok_or_else(|| Error::domain("PSL order exceeds 63 bits"))?;
    }
    Ok(order / num_integer::gcd(n as u64, q - 1))
}

/// PSL_n(q) for n in {2, 3}: the closure of elementary transvections in
/// SL_n(q), with the center quotient taken via canonical scalar
/// normalization.
pub fn psl(n: u32, q: u64) -> Result<FiniteGroup> {
    psl_with_cap(n, q, DEFAULT_CLOSURE_CAP)
}

pub fn psl_with_cap(n: u32, q: u64, cap: usize) -> Result<FiniteGroup> {
    if !(n == 2 || n == 3) {
        return Err(Error::domain(format!("psl supports n in {{2, 3}}, got {n}")));
    }
    let pp = numtheory::as_prime_power(q)
        .ok_or_else(|| Error::domain(format!("psl requires a prime power q, got {q}")))?;
    let expected = psl_order(n, q)?;
    if expected > cap as u64 {
        return Err(Error::resource(format!(
            "|PSL_{n}({q})| = {expected} exceeds the cap of {cap}"
        )));
    }
    let field = FieldSpec::new(pp.base, pp.exponent)?;
    let dim = n as usize;
    // One transvection per matrix position and additive basis vector of the
    // field: together they generate all root subgroups, hence SL_n(q).
    let mut gens = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if i == j {
                continue;
            }
            for basis_power in 0..pp.exponent {
                let lambda = numtheory::checked_pow(pp.base, basis_power)? as u32;
                let mut m = ProjMatrix::identity(&field, dim);
                let mut entries = m.entries().to_vec();
                entries[i * dim + j] = lambda;
                m = ProjMatrix::from_rows(dim, entries)?;
                debug_assert_eq!(m.determinant(&field), 1);
                gens.push(Element::Matrix(m));
            }
        }
    }
    let group = FiniteGroup::closure(GroupLaw::projective(field, dim), &gens, cap)?;
    assert_eq!(group.order(), expected, "PSL_{n}({q}) order");
    Ok(group)
}

/// Sp_4(2) of order 720: enumerate GL_4(2) by transvection closure and keep
/// the matrices preserving the standard alternating form.
pub fn sp4_2() -> Result<FiniteGroup> {
    let field = FieldSpec::new(2, 1)?;
    let dim = 4;
    let mut gens = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if i == j {
                continue;
            }
            let m = ProjMatrix::identity(&field, dim);
            let mut entries = m.entries().to_vec();
            entries[i * dim + j] = 1;
            gens.push(Element::Matrix(ProjMatrix::from_rows(dim, entries)?));
        }
    }
    let law = GroupLaw::projective(field.clone(), dim);
    let gl = FiniteGroup::closure(law.clone(), &gens, DEFAULT_CLOSURE_CAP)?;
    assert_eq!(gl.order(), 20160, "GL_4(2) order");
    // Standard alternating form on pairs (e1,e2), (e3,e4).
    let form = ProjMatrix::from_rows(
        dim,
        vec![
            0, 1, 0, 0, //
            1, 0, 0, 0, //
            0, 0, 0, 1, //
            0, 0, 1, 0,
        ],
    )?;
    let symplectic: Vec<Element> = gl
        .elements()
        .iter()
        .filter(|e| match e {
            Element::Matrix(m) => m.transpose().mul(&form, &field).mul(m, &field) == form,
            _ => unreachable!(),
        })
        .cloned()
        .collect();
    let group = FiniteGroup::from_elements(law, symplectic)?;
    assert_eq!(group.order(), 720, "Sp_4(2) order");
    Ok(group)
}

/// The Frobenius group of affine maps x -> ax + b on GF(r^t) with `a`
/// ranging over the order-p subgroup of the multiplicative group.
///
/// Its Sylow p-count is r^t: every prime power congruent to 1 mod p below
/// p^2 is realized this way.
pub fn frobenius_affine(p: u64, r: u64, t: u32) -> Result<FiniteGroup> {
    frobenius_affine_with_cap(p, r, t, DEFAULT_CLOSURE_CAP)
}

pub fn frobenius_affine_with_cap(p: u64, r: u64, t: u32, cap: usize) -> Result<FiniteGroup> {
    if !numtheory::is_prime(p) {
        return Err(Error::domain(format!("frobenius_affine requires a prime p, got {p}")));
    }
    if !numtheory::is_prime(r) {
        return Err(Error::domain(format!("frobenius_affine requires a prime r, got {r}")));
    }
    let q = numtheory::checked_pow(r, t)?;
    if (q - 1) % p != 0 {
        return Err(Error::domain(format!("{p} does not divide {r}^{t} - 1 = {}", q - 1)));
    }
    let expected = p
        .checked_mul(q)
        .ok_or_else(|| Error::domain("Frobenius group order exceeds 63 bits"))?;
    if expected > cap as u64 {
        return Err(Error::resource(format!(
            "Frobenius group order {expected} exceeds the cap of {cap}"
        )));
    }
    let field = FieldSpec::new(r, t)?;
    let g = field.encode(&field.multiplicative_generator());
    let complement = field.idx_pow(g, (q - 1) / p);
    let mut gens = vec![Element::Affine(AffineMap { mult: complement as u32, shift: 0 })];
    // Translations by the polynomial basis span the whole kernel.
    for i in 0..t {
        let shift = numtheory::checked_pow(r, i)? as u32;
        gens.push(Element::Affine(AffineMap { mult: 1, shift }));
    }
    let group = FiniteGroup::closure(GroupLaw::AffineField { field }, &gens, cap)?;
    assert_eq!(group.order(), expected, "Frobenius group order");
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<FiniteGroup>();
        assert_send_sync::<GroupLaw>();
        assert_send_sync::<SylowReport>();
    }

    #[test]
    fn closure_of_a_three_cycle() {
        let gen = Element::Perm(Perm::from_cycle(3, &[0, 1, 2]).unwrap());
        let g = FiniteGroup::closure(GroupLaw::Permutation { degree: 3 }, &[gen], 100).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn closure_is_deterministic() {
        let a = psl(2, 7).unwrap();
        let b = psl(2, 7).unwrap();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn closure_cap_is_enforced() {
        assert!(matches!(
            psl_with_cap(2, 7, 100),
            Err(Error::Resource(_))
        ));
        let gen = Element::Perm(Perm::from_cycle(5, &[0, 1, 2, 3, 4]).unwrap());
        assert!(matches!(
            FiniteGroup::closure(GroupLaw::Permutation { degree: 5 }, &[gen], 4),
            Err(Error::Resource(_))
        ));
        assert!(FiniteGroup::closure(GroupLaw::Permutation { degree: 5 }, &[], 10).is_err());
    }

    #[test]
    fn alternating_orders() {
        assert_eq!(alternating_group(5).unwrap().order(), 60);
        assert_eq!(alternating_group(6).unwrap().order(), 360);
        assert_eq!(alternating_group(7).unwrap().order(), 2520);
        assert!(alternating_group(9).is_err());
        assert!(alternating_group(2).is_err());
    }

    #[test]
    fn psl_orders() {
        assert_eq!(psl(3, 3).unwrap().order(), 5616);
        assert_eq!(psl(2, 7).unwrap().order(), 168);
        assert_eq!(psl(2, 4).unwrap().order(), 60);
        assert_eq!(psl(2, 5).unwrap().order(), 60);
        assert!(psl(4, 2).is_err());
        assert!(psl(2, 6).is_err());
    }

    #[test]
    fn element_orders() {
        let a5 = alternating_group(5).unwrap();
        assert_eq!(a5.element_order(a5.identity()), 1);
        let c3 = a5
            .index_of(&Element::Perm(Perm::from_cycle(5, &[0, 1, 2]).unwrap()))
            .unwrap();
        assert_eq!(a5.element_order(c3), 3);

        let psl27 = psl(2, 7).unwrap();
        let spectrum = psl27.order_spectrum();
        let distinct: std::collections::BTreeSet<u64> = spectrum.into_iter().collect();
        assert_eq!(distinct.into_iter().collect::<Vec<_>>(), vec![1, 2, 3, 4, 7]);
    }

    #[test]
    fn sylow_counts_on_a5() {
        let a5 = alternating_group(5).unwrap();
        assert_eq!(a5.count_sylow_by_elements(5).unwrap().n_p, 6);
        assert_eq!(a5.count_sylow_by_conjugacy(5).unwrap().n_p, 6);
        assert_eq!(a5.count_sylow_by_elements(3).unwrap().n_p, 10);
        assert_eq!(a5.count_sylow_by_conjugacy(3).unwrap().n_p, 10);
        let report = a5.count_sylow_by_elements(5).unwrap();
        assert_eq!(report.r, 1);
        assert_eq!(report.group_order_p_part, 5);
        // 2^2 | 60: the cyclic-Sylow oracles must refuse
        assert!(matches!(a5.count_sylow_by_elements(2), Err(Error::Precondition(_))));
        // but the general normalizer method still counts: n_2(A_5) = 5
        assert_eq!(a5.count_sylow_by_normalizer(2).unwrap().n_p, 5);
        assert!(matches!(a5.count_sylow_by_elements(7), Err(Error::Precondition(_))));
    }

    #[test]
    fn sylow_counts_on_psl27() {
        let g = psl(2, 7).unwrap();
        assert_eq!(g.count_sylow_by_elements(7).unwrap().n_p, 8);
        assert_eq!(g.count_sylow_by_conjugacy(7).unwrap().n_p, 8);
        assert_eq!(g.count_sylow_by_elements(3).unwrap().n_p, 28);
        assert_eq!(g.count_sylow_by_conjugacy(3).unwrap().n_p, 28);
    }

    #[test]
    fn sylow_counts_on_psl33() {
        let g = psl(3, 3).unwrap();
        assert_eq!(g.count_sylow_by_elements(13).unwrap().n_p, 144);
        assert_eq!(g.count_sylow_by_conjugacy(13).unwrap().n_p, 144);
    }

    #[test]
    fn psl2_11_sylow5_exceeds_p_squared() {
        let g = psl(2, 11).unwrap();
        let by_elements = g.count_sylow_by_elements(5).unwrap().n_p;
        let by_conjugacy = g.count_sylow_by_conjugacy(5).unwrap().n_p;
        assert_eq!(by_elements, by_conjugacy);
        assert_eq!(by_elements, 66);
        assert!(by_elements > 25);
    }

    #[test]
    fn sp4_2_counts() {
        let g = sp4_2().unwrap();
        assert_eq!(g.order(), 720);
        assert_eq!(g.count_sylow_by_elements(5).unwrap().n_p, 36);
        assert_eq!(g.count_sylow_by_conjugacy(5).unwrap().n_p, 36);
        // 3^2 | 720: cyclic-Sylow oracles refuse, the general method counts.
        assert!(matches!(g.count_sylow_by_elements(3), Err(Error::Precondition(_))));
        let n3 = g.count_sylow_by_normalizer(3).unwrap();
        assert_eq!(n3.n_p % 3, 1);
        assert_eq!(n3.n_p, 10); // Sp_4(2) has 10 Sylow 3-subgroups of order 9
        assert_eq!(n3.group_order_p_part, 9);
    }

    #[test]
    fn frobenius_groups() {
        let g = frobenius_affine(5, 2, 4).unwrap();
        assert_eq!(g.order(), 80);
        assert_eq!(g.count_sylow_by_elements(5).unwrap().n_p, 16);

        let a4 = frobenius_affine(3, 2, 2).unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.count_sylow_by_elements(3).unwrap().n_p, 4);

        let s3 = frobenius_affine(2, 3, 1).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.count_sylow_by_elements(2).unwrap().n_p, 3);

        assert!(matches!(frobenius_affine(5, 2, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn normalizers() {
        let g = psl(2, 7).unwrap();
        let sylow7 = g.find_sylow_subgroup(7).unwrap();
        assert_eq!(g.normalizer_order(&sylow7).unwrap(), 21);

        let a5 = alternating_group(5).unwrap();
        let sylow5 = a5.find_sylow_subgroup(5).unwrap();
        assert_eq!(a5.normalizer_order(&sylow5).unwrap(), 10);

        let everything: Vec<u32> = (0..a5.order() as u32).collect();
        assert_eq!(a5.normalizer_order(&everything).unwrap(), 60);

        // {identity, one 3-cycle} is not closed
        let c3 = a5
            .index_of(&Element::Perm(Perm::from_cycle(5, &[0, 1, 2]).unwrap()))
            .unwrap();
        assert!(a5.normalizer_order(&[a5.identity(), c3]).is_err());
    }

    #[test]
    fn a5_psl24_psl25_share_order_spectrum() {
        let a5 = alternating_group(5).unwrap();
        let psl24 = psl(2, 4).unwrap();
        let psl25 = psl(2, 5).unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(psl24.order(), 60);
        assert_eq!(psl25.order(), 60);
        let s = a5.order_spectrum();
        assert_eq!(s, psl24.order_spectrum());
        assert_eq!(s, psl25.order_spectrum());
    }

    /// Both oracles agree and n_p * |N_G(P)| = |G| wherever p || |G|.
    #[test]
    fn oracle_cross_consistency_small() {
        let groups: Vec<FiniteGroup> = vec![
            alternating_group(5).unwrap(),
            alternating_group(6).unwrap(),
            psl(2, 7).unwrap(),
            psl(2, 4).unwrap(),
            frobenius_affine(5, 2, 4).unwrap(),
        ];
        for g in &groups {
            let order = g.order();
            for p in numtheory::factorize(order).unwrap().primes() {
                if (order / p) % p != 0 {
                    let a = g.count_sylow_by_elements(p).unwrap();
                    let b = g.count_sylow_by_conjugacy(p).unwrap();
                    let c = g.count_sylow_by_normalizer(p).unwrap();
                    assert_eq!(a.n_p, b.n_p);
                    assert_eq!(a.n_p, c.n_p);
                    assert_eq!(a.n_p % p, 1);
                    let sylow = g.find_sylow_subgroup(p).unwrap();
                    assert_eq!(a.n_p * g.normalizer_order(&sylow).unwrap(), order);
                }
            }
        }
    }
}
