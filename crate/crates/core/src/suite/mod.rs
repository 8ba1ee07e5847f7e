//! Machine-checked properties of mu-elements over generated corpora.
//!
//! A [`Corpus`] is a list of named instances, each backed by the
//! [`LatticeDocument`] that built it. Every registered check is a claim with
//! a hypothesis (modular, frame, ...); [`run_suite`] evaluates each selected
//! check on every instance satisfying its hypothesis and reports the first
//! counterexample, which [`replay`] can re-verify from the stored document.

use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::builders::{self, MAX_PREORDER_POINTS};
use crate::document::{Built, DocumentKind, LatticeDocument};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::lattice::{Element, FiniteLattice};
use crate::mu;
use crate::quantale::Quantale;

mod checks;
mod examples;
mod search;

pub use checks::{check_names, find_check, Check, Hypothesis};
pub use examples::{example_names, run_paper_examples};
pub use search::{counterexample_search, search_lattice, SearchOutcome, Witness, QUERIES};

/// A constructed instance with lazily computed verdict tables.
#[derive(Debug)]
pub struct Instance {
    name: String,
    document: LatticeDocument,
    built: Built,
    modular: OnceLock<bool>,
    distributive: OnceLock<bool>,
    frame: OnceLock<Option<Quantale>>,
    mu: OnceLock<Vec<bool>>,
    essential: OnceLock<Vec<bool>>,
    irreducible: OnceLock<Vec<bool>>,
    mu_down: OnceLock<Vec<bool>>,
    mu_up: OnceLock<Vec<bool>>,
    mu_closed: OnceLock<Vec<bool>>,
    essentially_closed: OnceLock<Vec<bool>>,
}

impl Instance {
    pub fn new(name: impl Into<String>, document: LatticeDocument) -> Result<Self> {
        let built = document.build()?;
        Ok(Instance {
            name: name.into(),
            document,
            built,
            modular: OnceLock::new(),
            distributive: OnceLock::new(),
            frame: OnceLock::new(),
            mu: OnceLock::new(),
            essential: OnceLock::new(),
            irreducible: OnceLock::new(),
            mu_down: OnceLock::new(),
            mu_up: OnceLock::new(),
            mu_closed: OnceLock::new(),
            essentially_closed: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn document(&self) -> &LatticeDocument {
        &self.document
    }

    pub fn built(&self) -> &Built {
        &self.built
    }

    pub fn lattice(&self) -> &FiniteLattice {
        self.built.lattice()
    }

    pub fn len(&self) -> usize {
        self.lattice().len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice().is_empty()
    }

    pub fn is_modular(&self) -> bool {
        *self.modular.get_or_init(|| self.lattice().is_modular())
    }

    pub fn is_distributive(&self) -> bool {
        *self
            .distributive
            .get_or_init(|| self.lattice().is_distributive())
    }

    /// The frame on this lattice (multiplication = meet), when the lattice
    /// is distributive.
    pub fn frame(&self) -> Option<&Quantale> {
        self.frame
            .get_or_init(|| {
                self.is_distributive()
                    .then(|| Quantale::meet_frame(self.lattice().clone()))
            })
            .as_ref()
    }

    /// The instance's own quantale, or its frame when it was built as a
    /// bare distributive lattice.
    pub fn quantale(&self) -> Option<&Quantale> {
        self.built.quantale().or_else(|| self.frame())
    }

    pub fn mu(&self, x: Element) -> bool {
        self.mu
            .get_or_init(|| table(self.lattice().len(), |x| mu::is_mu(self.lattice(), x)))[x]
    }

    pub fn essential(&self, x: Element) -> bool {
        self.essential.get_or_init(|| {
            table(self.lattice().len(), |x| {
                mu::is_essential(self.lattice(), x)
            })
        })[x]
    }

    pub fn irreducible(&self, x: Element) -> bool {
        self.irreducible.get_or_init(|| {
            table(self.lattice().len(), |x| {
                mu::is_irreducible(self.lattice(), x)
            })
        })[x]
    }

    /// `x <=_mu b↓` (false unless `x <= b`).
    pub fn mu_down(&self, b: Element, x: Element) -> bool {
        let n = self.len();
        self.mu_down.get_or_init(|| {
            let l = self.lattice();
            square(n, |b| {
                let view = l.down_view(b);
                l.elements()
                    .map(|x| l.leq(x, b) && mu::is_mu(&view, x))
                    .collect()
            })
        })[b * n + x]
    }

    /// `x` is a mu-element of `b↑` (false unless `b <= x`).
    pub fn mu_up(&self, b: Element, x: Element) -> bool {
        let n = self.len();
        self.mu_up.get_or_init(|| {
            let l = self.lattice();
            square(n, |b| {
                let view = l.up_view(b);
                l.elements()
                    .map(|x| l.leq(b, x) && mu::is_mu(&view, x))
                    .collect()
            })
        })[b * n + x]
    }

    pub fn mu_closed(&self, x: Element) -> bool {
        self.mu_closed.get_or_init(|| {
            let l = self.lattice();
            l.elements()
                .map(|x| l.above(x).all(|b| b == x || !self.mu_down(b, x)))
                .collect()
        })[x]
    }

    pub fn essentially_closed(&self, x: Element) -> bool {
        self.essentially_closed.get_or_init(|| {
            table(self.lattice().len(), |x| {
                mu::is_essentially_closed(self.lattice(), x)
            })
        })[x]
    }

    pub fn mu_elements(&self) -> Vec<Element> {
        self.lattice().elements().filter(|&x| self.mu(x)).collect()
    }
}

fn table(n: usize, f: impl Fn(Element) -> bool + Sync + Send) -> Vec<bool> {
    (0..n).into_par_iter().map(f).collect()
}

fn square(n: usize, row: impl Fn(Element) -> Vec<bool> + Sync + Send) -> Vec<bool> {
    (0..n).into_par_iter().map(row).collect::<Vec<_>>().concat()
}

/// Named instances plus a record of the generators that produced them.
#[derive(Debug, Default)]
pub struct Corpus {
    generators: Vec<String>,
    instances: Vec<Instance>,
}

impl Corpus {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn instances(&self) -> &[Instance] {
        &self.instances
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        document: LatticeDocument,
    ) -> Result<&mut Self> {
        self.instances.push(Instance::new(name, document)?);
        Ok(self)
    }

    fn generated(
        &mut self,
        generator: String,
        docs: Vec<(String, LatticeDocument)>,
    ) -> Result<&mut Self> {
        let built = docs
            .into_par_iter()
            .map(|(name, doc)| Instance::new(name, doc))
            .collect::<Result<Vec<_>>>()?;
        self.generators
            .push(format!("{generator}: {} instances", built.len()));
        self.instances.extend(built);
        Ok(self)
    }

    pub fn with_powersets(&mut self, max_points: usize) -> Result<&mut Self> {
        let docs = (1..=max_points)
            .map(|k| {
                (
                    format!("P({k})"),
                    LatticeDocument::new(DocumentKind::Powerset { points: k }),
                )
            })
            .collect();
        self.generated(format!("powersets 1..={max_points}"), docs)
    }

    pub fn with_zn_range(&mut self, from: u64, to: u64) -> Result<&mut Self> {
        let docs = (from.max(2)..=to)
            .map(|n| {
                (
                    format!("Z{n}"),
                    LatticeDocument::new(DocumentKind::Zn { n }),
                )
            })
            .collect();
        self.generated(format!("Z_n for n in {from}..={to}"), docs)
    }

    /// Alexandrov frames of every preorder on `1..=max_points` points.
    pub fn with_preorders(&mut self, max_points: usize) -> Result<&mut Self> {
        if max_points > MAX_PREORDER_POINTS {
            return Err(Error::SizeLimitExceeded {
                requested: max_points,
                limit: MAX_PREORDER_POINTS,
            });
        }
        let mut docs = Vec::new();
        for k in 1..=max_points {
            for (i, pairs) in builders::all_preorders(k)?.into_iter().enumerate() {
                let points = (1..=k).map(|p| p.to_string()).collect();
                docs.push((
                    format!("preorder {k}#{i}"),
                    LatticeDocument::new(DocumentKind::Preorder { points, pairs }),
                ));
            }
        }
        self.generated(format!("preorders on 1..={max_points} points"), docs)
    }

    pub fn with_enumerated(&mut self, max_size: usize) -> Result<&mut Self> {
        let docs = enumerate::enumerate_lattices(max_size, true)?
            .iter()
            .enumerate()
            .map(|(i, l)| {
                (
                    format!("lattice {}#{i}", l.len()),
                    LatticeDocument::explicit(l, None),
                )
            })
            .collect();
        self.generated(
            format!("lattices up to isomorphism, sizes 1..={max_size}"),
            docs,
        )
    }

    pub fn with_chains(&mut self, max_length: usize) -> Result<&mut Self> {
        let docs = (1..=max_length)
            .map(|k| {
                (
                    format!("chain {k}"),
                    LatticeDocument::new(DocumentKind::Chain { length: k }),
                )
            })
            .collect();
        self.generated(format!("chains 1..={max_length}"), docs)
    }

    pub fn with_products(
        &mut self,
        products: &[(&str, LatticeDocument, LatticeDocument)],
    ) -> Result<&mut Self> {
        let docs = products
            .iter()
            .map(|(name, l, r)| {
                (
                    name.to_string(),
                    LatticeDocument::new(DocumentKind::Product {
                        left: Box::new(l.clone()),
                        right: Box::new(r.clone()),
                    }),
                )
            })
            .collect();
        self.generated("products".to_string(), docs)
    }

    /// Powersets on at most 4 points, Z_n for n <= 500, preorder frames on
    /// at most 4 points, lattices of at most 6 elements, chains of length
    /// at most 8, and the products M3 x 2 and N5 x 2.
    pub fn default_corpus() -> Result<Self> {
        let mut c = Corpus::new();
        c.with_powersets(4)?
            .with_zn_range(2, 500)?
            .with_preorders(4)?
            .with_enumerated(6)?
            .with_chains(8)?
            .with_products(&fixture_products())?;
        Ok(c)
    }
}

pub fn m3_document() -> LatticeDocument {
    LatticeDocument::explicit(&builders::m3(), None)
}

pub fn n5_document() -> LatticeDocument {
    LatticeDocument::explicit(&builders::n5(), None)
}

fn chain_document(length: usize) -> LatticeDocument {
    LatticeDocument::new(DocumentKind::Chain { length })
}

/// M3 x 2 and N5 x 2.
pub fn fixture_products() -> Vec<(&'static str, LatticeDocument, LatticeDocument)> {
    vec![
        ("M3 x 2", m3_document(), chain_document(2)),
        ("N5 x 2", n5_document(), chain_document(2)),
    ]
}

/// Modular products built from M3: with chains of length 2 and 3, and with
/// itself.
pub fn m3_products() -> Vec<(&'static str, LatticeDocument, LatticeDocument)> {
    vec![
        ("M3 x 2", m3_document(), chain_document(2)),
        ("M3 x 3", m3_document(), chain_document(3)),
        ("M3 x M3", m3_document(), m3_document()),
    ]
}

/// An element named by its role in a claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedElement {
    pub role: String,
    pub index: Element,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: String,
    pub instance: String,
    pub document: LatticeDocument,
    pub elements: Vec<NamedElement>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub claim: String,
    pub hypothesis: String,
    pub instances_tested: usize,
    pub skipped_by_hypothesis: usize,
    pub elements_tested: usize,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub generators: Vec<String>,
    pub instances: usize,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One line per check.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{} {:<32} instances={} skipped={} elements={} time={}ms\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.instances_tested,
                c.skipped_by_hypothesis,
                c.elements_tested,
                c.wall_time_ms
            ));
            if let Some(cx) = &c.counterexample {
                let elements: Vec<String> = cx
                    .elements
                    .iter()
                    .map(|e| format!("{}={}", e.role, e.label))
                    .collect();
                out.push_str(&format!(
                    "     in {}: {} ({})\n",
                    cx.instance,
                    cx.detail,
                    elements.join(", ")
                ));
            }
        }
        out
    }
}

/// Runs the named checks (all of them when `names` is empty) over the
/// corpus.
pub fn run_suite(corpus: &Corpus, names: &[String]) -> Result<SuiteReport> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let selected: Vec<&Check> = if names.is_empty() {
        checks::all().iter().collect()
    } else {
        names
            .iter()
            .map(|n| find_check(n).ok_or_else(|| Error::UnknownCheckName(n.clone())))
            .collect::<Result<_>>()?
    };
    let reports = selected.into_iter().map(|c| run_check(corpus, c)).collect();
    Ok(SuiteReport {
        generators: corpus.generators.clone(),
        instances: corpus.len(),
        checks: reports,
    })
}

fn run_check(corpus: &Corpus, check: &Check) -> CheckReport {
    let start = Instant::now();
    let applicable: Vec<&Instance> = corpus
        .instances
        .iter()
        .filter(|i| check.hypothesis.holds(i))
        .collect();
    let outcomes: Vec<checks::Outcome> = applicable.par_iter().map(|i| (check.run)(i)).collect();
    let counterexample = applicable.iter().zip(&outcomes).find_map(|(inst, o)| {
        o.failure
            .as_ref()
            .map(|f| f.to_counterexample(check.name, inst))
    });
    CheckReport {
        name: check.name.to_string(),
        claim: check.claim.to_string(),
        hypothesis: check.hypothesis.to_string(),
        instances_tested: applicable.len(),
        skipped_by_hypothesis: corpus.len() - applicable.len(),
        elements_tested: outcomes.iter().map(|o| o.elements).sum(),
        passed: counterexample.is_none(),
        counterexample,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

/// Rebuilds the counterexample's instance and reruns its check. True when
/// the same failure, at the same elements, is produced again.
pub fn replay(cx: &Counterexample) -> Result<bool> {
    let check = find_check(&cx.check).ok_or_else(|| Error::UnknownCheckName(cx.check.clone()))?;
    let inst = Instance::new(cx.instance.clone(), cx.document.clone())?;
    let outcome = (check.run)(&inst);
    Ok(outcome
        .failure
        .map(|f| f.to_counterexample(check.name, &inst) == *cx)
        .unwrap_or(false))
}
