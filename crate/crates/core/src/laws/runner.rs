//! Suite configuration, the parallel runner and its report.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use super::{enumerate_hypergraphs, in_subspace, random_instances, render_inputs, Arity, CoproductSource, Law, Memo, Suite};
use crate::error::{Error, Result};
use crate::hgx::parse_hgx;
use crate::hypergraph::{Hypergraph, Involution};
use crate::linear::Key;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteConfig {
    pub max_edges: usize,
    pub max_vertices: usize,
    /// Random instances added to the exhaustive set.
    pub samples: usize,
    pub seed: u64,
    /// Empty selects every suite.
    pub suites: BTreeSet<Suite>,
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_edges: 3, max_vertices: 3, samples: 0, seed: 0, suites: BTreeSet::new(), jobs: None }
    }
}

impl SuiteConfig {
    pub fn selects(&self, s: Suite) -> bool {
        self.suites.is_empty() || self.suites.contains(&s)
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Counterexample {
    /// Inputs in HGX matrix form.
    pub inputs: Vec<String>,
    pub lhs: Value,
    pub rhs: Value,
}

fn is_zero(n: &u64) -> bool {
    *n == 0
}

#[derive(Clone, PartialEq, Debug, Default, Serialize)]
pub struct LawOutcome {
    pub checked: u64,
    pub failed: u64,
    #[serde(skip_serializing_if = "is_zero")]
    pub errors: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

/// Outcomes keyed by law name.
#[derive(Clone, PartialEq, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct LawReport {
    pub laws: BTreeMap<String, LawOutcome>,
}

impl LawReport {
    /// No law failed on any instance.
    pub fn passed(&self) -> bool {
        self.laws.values().all(|o| o.failed == 0)
    }

    /// No instance raised an error.
    pub fn clean(&self) -> bool {
        self.laws.values().all(|o| o.errors == 0)
    }

    pub fn failures(&self) -> impl Iterator<Item = (&String, &LawOutcome)> {
        self.laws.iter().filter(|(_, o)| o.failed > 0)
    }

    pub fn checked(&self) -> u64 {
        self.laws.values().map(|o| o.checked).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn unique_sorted(hs: impl IntoIterator<Item = Hypergraph>) -> Vec<Hypergraph> {
    let keys: BTreeSet<Key> = hs.into_iter().map(|h| h.canonical_key()).collect();
    keys.iter().map(Key::to_hypergraph).collect()
}

struct Pools {
    base: Vec<Hypergraph>,
    dual: Vec<Hypergraph>,
    partners: Vec<Hypergraph>,
    dual_partners: Vec<Hypergraph>,
}

impl Pools {
    fn new(cfg: &SuiteConfig) -> Result<Pools> {
        let mut all = enumerate_hypergraphs(cfg.max_edges, cfg.max_vertices)?;
        all.extend(random_instances(cfg.seed, cfg.samples, cfg.max_edges + 1, cfg.max_vertices + 1)?);
        let base = unique_sorted(all);
        let mut partners = enumerate_hypergraphs(1, 2)?;
        partners.extend(enumerate_hypergraphs(2, 1)?);
        let partners = unique_sorted(partners);
        Ok(Pools {
            dual: base.iter().map(Hypergraph::dual).collect(),
            dual_partners: partners.iter().map(Hypergraph::dual).collect(),
            base,
            partners,
        })
    }

    fn pick(&self, dual: bool, subspace: Option<Involution>, partners: bool) -> Vec<&Hypergraph> {
        let pool = match (dual, partners) {
            (false, false) => &self.base,
            (true, false) => &self.dual,
            (false, true) => &self.partners,
            (true, true) => &self.dual_partners,
        };
        pool.iter().filter(|h| subspace.is_none_or(|w| in_subspace(h, w))).collect()
    }

    fn inputs(&self, law: &Law) -> Vec<Vec<Hypergraph>> {
        match law.arity() {
            Arity::Unary { dual, subspace } => {
                self.pick(dual, subspace, false).into_iter().map(|h| vec![h.clone()]).collect()
            }
            Arity::Binary { dual, subspace } => {
                let partners = self.pick(dual, subspace, true);
                self.pick(dual, subspace, false)
                    .into_iter()
                    .flat_map(|h| partners.iter().map(move |p| vec![h.clone(), (*p).clone()]))
                    .collect()
            }
            Arity::Fixed => law.fixed_inputs(),
        }
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<LawReport> {
    run_suite_with(cfg, &Memo::new())
}

/// Runs every selected law on its instances; deterministic for a fixed config.
pub fn run_suite_with(cfg: &SuiteConfig, src: &dyn CoproductSource) -> Result<LawReport> {
    let laws: Vec<Law> = Law::all().into_iter().filter(|l| cfg.selects(l.suite())).collect();
    let pools = Pools::new(cfg)?;
    let jobs: Vec<(usize, Vec<Hypergraph>)> = laws
        .iter()
        .enumerate()
        .flat_map(|(i, law)| pools.inputs(law).into_iter().map(move |inp| (i, inp)))
        .collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cfg.jobs {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder.build().map_err(|e| Error::Resource(format!("thread pool: {e}")))?;
    let results: Vec<_> =
        pool.install(|| jobs.par_iter().map(|(i, inp)| laws[*i].check(src, inp)).collect());
    let mut report = LawReport::default();
    for law in &laws {
        report.laws.insert(law.name(), LawOutcome::default());
    }
    for ((i, inputs), result) in jobs.iter().zip(results) {
        let out = report.laws.get_mut(&laws[*i].name()).expect("law registered");
        out.checked += 1;
        match result {
            Ok(None) => {}
            Ok(Some(m)) => {
                out.failed += 1;
                out.counterexample.get_or_insert_with(|| Counterexample {
                    inputs: render_inputs(inputs),
                    lhs: m.lhs,
                    rhs: m.rhs,
                });
            }
            Err(e) => {
                out.errors += 1;
                out.first_error.get_or_insert_with(|| format!("{}: {e}", render_inputs(inputs).join("/")));
            }
        }
    }
    Ok(report)
}

/// Re-runs `law` on a recorded counterexample; true if it fails with the same sides.
pub fn recheck(src: &dyn CoproductSource, law: &str, cex: &Counterexample) -> Result<bool> {
    let law: Law = law.parse()?;
    let inputs = cex.inputs.iter().map(|t| parse_hgx(t)).collect::<Result<Vec<_>>>()?;
    Ok(law.check(src, &inputs)?.is_some_and(|m| m.lhs == cex.lhs && m.rhs == cex.rhs))
}
