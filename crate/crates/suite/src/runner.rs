//! Suite configuration and the full run: every theorem id over every
//! applicable instance, merged into one report in canonical order.

use crate::checkers::check_in_cache;
use crate::ctx::CtxCache;
use crate::fixtures;
use crate::instance::{Instance, Mode};
use crate::report::{SuiteReport, TheoremReport};
use crate::theorem::TheoremId;
use softint_core::io::parse_group_spec;
use softint_core::io::IoError;
use softint_core::{FiniteGroup, Homomorphism, QuotientGroup, Universe};

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub group_specs: Vec<String>,
    pub universe_sizes: Vec<usize>,
    pub mode: Mode,
}

impl SuiteConfig {
    /// The desk sweep: every catalog group crossed with one- and two-point
    /// universes, exhaustive.
    pub fn desk() -> Self {
        SuiteConfig {
            group_specs: [
                "cyclic:1",
                "cyclic:2",
                "cyclic:3",
                "cyclic:4",
                "cyclic:5",
                "cyclic:6",
                "klein",
                "dihedral:3",
                "dihedral:4",
                "quaternion",
            ]
            .map(String::from)
            .to_vec(),
            universe_sizes: vec![1, 2],
            mode: Mode::Exhaustive,
        }
    }

    pub fn describe(&self) -> String {
        format!(
            "groups=[{}]; universes=[{}]; mode={}",
            self.group_specs.join(","),
            self.universe_sizes
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(","),
            self.mode.describe()
        )
    }
}

/// The named and derived homomorphisms attached to a catalog group: explicit
/// reductions, quotient projections by every proper nontrivial normal
/// subgroup, and inclusions of every proper nontrivial subgroup.
pub fn hom_catalog(spec: &str, group: &FiniteGroup) -> Vec<(String, Homomorphism)> {
    let mut out: Vec<(String, Homomorphism)> = Vec::new();
    if let Some(n) = spec.strip_prefix("cyclic:").and_then(|s| s.parse::<usize>().ok()) {
        for k in 2..n {
            if n % k == 0 {
                out.push((format!("mod:{n}:{k}"), Homomorphism::cyclic_mod(n, k).unwrap()));
            }
        }
    }
    if let Some(n) = spec.strip_prefix("dihedral:").and_then(|s| s.parse::<usize>().ok()) {
        out.push((format!("sign:{n}"), Homomorphism::dihedral_sign(n).unwrap()));
    }
    if let Ok(subgroups) = softint_core::group::all_subgroups(group) {
        for h in &subgroups {
            if h.is_trivial() || h.is_whole() {
                continue;
            }
            let members: Vec<String> = h.members().iter().map(|m| m.to_string()).collect();
            out.push((format!("incl:{}", members.join(",")), Homomorphism::inclusion(h)));
            if h.is_normal() {
                let q = QuotientGroup::new(h).expect("normal");
                out.push((format!("quot:{}", members.join(",")), q.projection()));
            }
        }
    }
    out
}

/// The two documented probe instances, pinned so their computed values are
/// always printed: the commutator-value converse and the e-set quotient
/// wording, both on the D3 fixture with e-set {e}.
fn probe_instances(mode: Mode) -> Vec<(TheoremId, Instance)> {
    let f3 = fixtures::f3();
    let base = Instance::sweep(
        "dihedral:3",
        f3.group().clone(),
        f3.universe().clone(),
        mode,
    )
    .with_pinned("f3", f3.soft().clone());
    vec![(TheoremId::C90Conv, base.clone()), (TheoremId::C100, base)]
}

/// Runs every theorem over every applicable instance of the config. The
/// report is sorted by (theorem, instance digest), so it does not depend on
/// scheduling, and serializes identically for identical configs and seeds.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport, IoError> {
    let mut cache = CtxCache::new();
    let mut records: Vec<TheoremReport> = Vec::new();

    for spec in &config.group_specs {
        let group = parse_group_spec(spec)?;
        for &m in &config.universe_sizes {
            let universe = Universe::alphabetic(m).map_err(IoError::Soft)?;
            let sweep = Instance::sweep(spec, group.clone(), universe.clone(), config.mode);
            for id in TheoremId::ALL {
                if id.needs_homomorphism() {
                    continue;
                }
                records.push(check_in_cache(id, &sweep, &mut cache));
            }
            for (hspec, hom) in hom_catalog(spec, &group) {
                let inst = Instance::sweep(spec, group.clone(), universe.clone(), config.mode)
                    .with_hom(&hspec, hom);
                for id in TheoremId::ALL {
                    if id.needs_homomorphism() {
                        records.push(check_in_cache(id, &inst, &mut cache));
                    }
                }
            }
        }
    }

    // the documented probes run pinned whenever the sweep contains their host
    if config.group_specs.iter().any(|s| s == "dihedral:3") && config.universe_sizes.contains(&2) {
        for (id, inst) in probe_instances(config.mode) {
            records.push(check_in_cache(id, &inst, &mut cache));
        }
    }

    Ok(SuiteReport::new(config.describe(), records))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config_gives_empty_report() {
        let config = SuiteConfig {
            group_specs: vec![],
            universe_sizes: vec![1, 2],
            mode: Mode::Exhaustive,
        };
        let report = run_suite(&config).unwrap();
        assert_eq!(report.records.len(), 0);
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn small_exhaustive_run_holds() {
        let config = SuiteConfig {
            group_specs: vec!["cyclic:2".into(), "cyclic:4".into()],
            universe_sizes: vec![1],
            mode: Mode::Exhaustive,
        };
        let report = run_suite(&config).unwrap();
        assert!(report.records.len() > 40);
        assert_eq!(report.summary.violated, 0, "text: {}", report.to_text());
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn hom_catalog_shapes() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let homs = hom_catalog("cyclic:4", &z4);
        let specs: Vec<&str> = homs.iter().map(|(s, _)| s.as_str()).collect();
        assert!(specs.contains(&"mod:4:2"));
        assert!(specs.contains(&"incl:0,2"));
        assert!(specs.contains(&"quot:0,2"));

        let d3 = FiniteGroup::dihedral(3).unwrap();
        let homs = hom_catalog("dihedral:3", &d3);
        let specs: Vec<&str> = homs.iter().map(|(s, _)| s.as_str()).collect();
        assert!(specs.contains(&"sign:3"));
        assert!(specs.contains(&"quot:0,1,2"));
        assert!(specs.contains(&"incl:0,3"));
        // reflections are not normal, so no quotient by them
        assert!(!specs.contains(&"quot:0,3"));
    }
}
