//! JSON catalog of groups with expected Sylow data, and its verifier.
//!
//! An entry names a constructor, its parameters, the expected group order
//! and the expected Sylow counts. Verification rebuilds the group, runs
//! every applicable counting method (the two cyclic-Sylow oracles when
//! p || |G|, the general normalizer method always) and, where a closed-form
//! family formula applies, checks that too.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{self, SpCase};
use crate::groupengine::{self, FiniteGroup};
use crate::numtheory;

const DEFAULT_CATALOG_JSON: &str = include_str!("../data/catalog_default.json");
const DEEP_CATALOG_JSON: &str = include_str!("../data/catalog_deep.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedSylow {
    pub p: u64,
    pub n_p: u64,
    /// "literature", "derived" or "trivial": where the expectation comes from.
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    pub constructor: String,
    pub parameters: Vec<u64>,
    pub expected_order: u64,
    pub expected_sylow: Vec<ExpectedSylow>,
}

/// Parses a catalog file: a JSON array of entries.
pub fn parse_catalog(json: &str) -> Result<Vec<CatalogEntry>> {
    serde_json::from_str(json).map_err(|e| Error::domain(format!("invalid catalog JSON: {e}")))
}

/// The catalog shipped in the binary.
pub fn default_catalog() -> Vec<CatalogEntry> {
    parse_catalog(DEFAULT_CATALOG_JSON).expect("embedded catalog is valid")
}

/// Larger groups added by deep verification runs.
pub fn deep_catalog_extension() -> Vec<CatalogEntry> {
    parse_catalog(DEEP_CATALOG_JSON).expect("embedded catalog is valid")
}

/// Builds the group an entry describes.
pub fn build_group(constructor: &str, parameters: &[u64], cap: usize) -> Result<FiniteGroup> {
    match (constructor, parameters) {
        ("alternating", [n]) => groupengine::alternating_group(*n as usize),
        ("psl", [n, q]) => groupengine::psl_with_cap(*n as u32, *q, cap),
        ("sp4_2", []) => groupengine::sp4_2(),
        ("frobenius_affine", [p, r, t]) => {
            groupengine::frobenius_affine_with_cap(*p, *r, *t as u32, cap)
        }
        _ => Err(Error::domain(format!(
            "unknown constructor {constructor} with {} parameters",
            parameters.len()
        ))),
    }
}

/// The closed-form count matching an entry at prime p, when one applies.
pub fn formula_np(constructor: &str, parameters: &[u64], p: u64) -> Option<u64> {
    match (constructor, parameters) {
        ("alternating", [n]) => families::alternating_np(*n, p).ok().map(|f| f.value),
        ("psl", [n, q]) => {
            if p == *q && *n == 2 {
                return families::psl2_np(*q, p).ok().map(|f| f.value);
            }
            if p % 2 == 1 && *q % p != 0 {
                if let Ok(order) = numtheory::multiplicative_order(*q, p) {
                    if order == *n {
                        return families::gl_np(*n, *q, p).ok().map(|f| f.value);
                    }
                }
            }
            if *n == 2 && (p == *q + 1 || p + 1 == *q) {
                return families::psl2_np(*q, p).ok().map(|f| f.value);
            }
            None
        }
        ("sp4_2", []) if p == 5 => {
            families::sp_np(2, 2, 5, SpCase::Primitive2e).ok().map(|f| f.value)
        }
        ("frobenius_affine", [p0, r, t]) if p == *p0 => numtheory::checked_pow(*r, *t as u32).ok(),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryOutcome {
    Pass,
    Fail,
    /// The group exceeded the construction cap; only a failure under deep
    /// verification.
    Skipped,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub label: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct EntryReport {
    pub name: String,
    pub outcome: EntryOutcome,
    pub checks: Vec<CheckResult>,
}

impl EntryReport {
    fn push(&mut self, label: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult { label: label.into(), ok, detail: detail.into() });
        if !ok {
            self.outcome = EntryOutcome::Fail;
        }
    }
}

/// Rebuilds one entry's group and checks every expectation against the
/// oracles and the matching closed form. With `strict` a cap overflow is a
/// failure instead of a skip.
pub fn verify_entry(entry: &CatalogEntry, cap: usize, strict: bool) -> EntryReport {
    let mut report =
        EntryReport { name: entry.name.clone(), outcome: EntryOutcome::Pass, checks: Vec::new() };
    let group = match build_group(&entry.constructor, &entry.parameters, cap) {
        Ok(g) => g,
        Err(Error::Resource(msg)) if !strict => {
            report.outcome = EntryOutcome::Skipped;
            report.checks.push(CheckResult {
                label: "build".into(),
                ok: true,
                detail: format!("skipped: {msg}"),
            });
            return report;
        }
        Err(e) => {
            report.push("build", false, e.to_string());
            return report;
        }
    };
    report.push(
        "order",
        group.order() == entry.expected_order,
        format!("expected {}, computed {}", entry.expected_order, group.order()),
    );
    for exp in &entry.expected_sylow {
        let p = exp.p;
        let label = format!("n_{p}");
        let general = match group.count_sylow_by_normalizer(p) {
            Ok(rep) => rep,
            Err(e) => {
                report.push(label, false, e.to_string());
                continue;
            }
        };
        let mut computed = vec![("normalizer", general.n_p)];
        let cyclic_sylow = group.order() % p == 0 && (group.order() / p) % p != 0;
        if cyclic_sylow {
            match (group.count_sylow_by_elements(p), group.count_sylow_by_conjugacy(p)) {
                (Ok(a), Ok(b)) => {
                    computed.push(("element-count", a.n_p));
                    computed.push(("conjugacy-orbit", b.n_p));
                }
                (Err(e), _) | (_, Err(e)) => {
                    report.push(label.clone(), false, e.to_string());
                    continue;
                }
            }
        }
        if let Some(value) = formula_np(&entry.constructor, &entry.parameters, p) {
            computed.push(("formula", value));
        }
        let all_agree = computed.iter().all(|&(_, v)| v == exp.n_p);
        let detail = computed
            .iter()
            .map(|(how, v)| format!("{how}={v}"))
            .collect::<Vec<_>>()
            .join(", ");
        report.push(label, all_agree, format!("expected {} [{}]; {detail}", exp.n_p, exp.provenance));
    }
    report
}

/// Verifies a whole catalog; entry order is preserved.
pub fn verify_catalog(entries: &[CatalogEntry], cap: usize, strict: bool) -> Vec<EntryReport> {
    entries.iter().map(|e| verify_entry(e, cap, strict)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupengine::DEFAULT_CLOSURE_CAP;

    #[test]
    fn embedded_catalogs_parse() {
        let default = default_catalog();
        assert_eq!(default.len(), 13);
        assert!(default.iter().any(|e| e.name == "PSL3(3)"));
        let deep = deep_catalog_extension();
        assert_eq!(deep.len(), 2);
        assert!(deep.iter().any(|e| e.name == "PSL3(4)"));
    }

    #[test]
    fn rejects_malformed_catalog() {
        assert!(parse_catalog("{}").is_err());
        assert!(parse_catalog(r#"[{"name": "x"}]"#).is_err());
        assert!(parse_catalog(r#"[{"name":"x","constructor":"psl","parameters":[2,7],"expected_order":168,"expected_sylow":[],"extra":1}]"#).is_err());
    }

    #[test]
    fn formula_matching() {
        assert_eq!(formula_np("psl", &[3, 3], 13), Some(144));
        assert_eq!(formula_np("psl", &[2, 7], 7), Some(8));
        assert_eq!(formula_np("psl", &[2, 8], 7), Some(36));
        assert_eq!(formula_np("psl", &[2, 11], 3), Some(55));
        assert_eq!(formula_np("psl", &[2, 11], 5), None);
        assert_eq!(formula_np("psl", &[3, 4], 7), Some(960));
        // no closed form is claimed for n_5(PSL3(4)); the general oracle covers it
        assert_eq!(formula_np("psl", &[3, 4], 5), None);
        assert_eq!(formula_np("alternating", &[6], 5), Some(36));
        assert_eq!(formula_np("alternating", &[6], 3), None);
        assert_eq!(formula_np("sp4_2", &[], 5), Some(36));
        assert_eq!(formula_np("sp4_2", &[], 3), None);
        assert_eq!(formula_np("frobenius_affine", &[5, 2, 4], 5), Some(16));
    }

    #[test]
    fn default_catalog_verifies() {
        let reports = verify_catalog(&default_catalog(), DEFAULT_CLOSURE_CAP, false);
        for r in &reports {
            assert_eq!(r.outcome, EntryOutcome::Pass, "{}: {:?}", r.name, r.checks);
        }
    }

    #[test]
    fn tampered_expectation_fails() {
        let mut entries = default_catalog();
        entries.retain(|e| e.name == "A5");
        entries[0].expected_sylow[0].n_p = 7;
        let reports = verify_catalog(&entries, DEFAULT_CLOSURE_CAP, false);
        assert_eq!(reports[0].outcome, EntryOutcome::Fail);
        let failing = reports[0].checks.iter().find(|c| !c.ok).unwrap();
        assert!(failing.detail.contains("expected 7"));
        assert!(failing.detail.contains("=6"));
    }

    #[test]
    fn cap_overflow_skips_unless_strict() {
        let mut entries = deep_catalog_extension();
        entries.retain(|e| e.name == "PSL3(4)");
        let lenient = verify_catalog(&entries, 1000, false);
        assert_eq!(lenient[0].outcome, EntryOutcome::Skipped);
        let strict = verify_catalog(&entries, 1000, true);
        assert_eq!(strict[0].outcome, EntryOutcome::Fail);
    }

    #[test]
    fn unknown_constructor_fails() {
        let entry = CatalogEntry {
            name: "bogus".into(),
            constructor: "sporadic".into(),
            parameters: vec![],
            expected_order: 1,
            expected_sylow: vec![],
        };
        let report = verify_entry(&entry, DEFAULT_CLOSURE_CAP, false);
        assert_eq!(report.outcome, EntryOutcome::Fail);
    }
}
