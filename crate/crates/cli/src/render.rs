//! Text output for `analyze` and `scan-zn`.

use std::fmt::Write;

use rayon::prelude::*;

use mulattice::builders;
use mulattice::document::Built;
use mulattice::mu::{self, AtomWitness, MuReport};
use mulattice::{Element, FiniteLattice};

pub struct Analysis {
    pub text: String,
    /// Elements whose essential/mu verdicts came from a closed form.
    pub fast_available: usize,
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn names(l: &FiniteLattice, xs: impl IntoIterator<Item = Element>) -> String {
    let v: Vec<&str> = xs.into_iter().map(|x| l.label(x)).collect();
    if v.is_empty() {
        "-".to_string()
    } else {
        v.join(" ")
    }
}

fn witnesses(l: &FiniteLattice, r: &MuReport) -> String {
    let mut parts = Vec::new();
    if let Some(y) = r.essential_witness {
        parts.push(format!("meets {} at 0", l.label(y)));
    }
    if let Some((y, z)) = r.mu_witness {
        parts.push(format!("not mu via {}, {}", l.label(y), l.label(z)));
    }
    if let Some((y, z)) = r.irreducible_witness {
        parts.push(format!("reducible via {}, {}", l.label(y), l.label(z)));
    }
    if let Some(AtomWitness::Between(e)) = r.atom_witness {
        parts.push(format!("above {}", l.label(e)));
    }
    if parts.is_empty() {
        "-".to_string()
    } else {
        parts.join("; ")
    }
}

/// The per-element table followed by summary lines. With `fast`, closed-form
/// verdicts replace the brute-force essential and mu columns where the
/// input kind supports them (their witnesses are then omitted).
pub fn analysis(built: &Built, fast: bool) -> Analysis {
    let l = built.lattice();
    let mut reports = mu::analyze(l);
    let mut fast_available = 0;
    if fast {
        for r in &mut reports {
            if let Some(v) = built.fast_verdict(r.element) {
                fast_available += 1;
                r.essential = v.essential;
                r.mu = v.mu;
                r.essential_witness = None;
                r.mu_witness = None;
            }
        }
    }

    let width = l
        .labels()
        .iter()
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(0)
        .max(5);
    let mut out = String::new();
    writeln!(
        out,
        "lattice: {} elements, modular: {}, distributive: {}",
        l.len(),
        yes(l.is_modular()),
        yes(l.is_distributive())
    )
    .unwrap();
    if fast {
        writeln!(out, "closed-form verdicts: {fast_available} of {}", l.len()).unwrap();
    }
    let pad = |s: &str| format!("{s}{}", " ".repeat(width - s.chars().count()));
    writeln!(
        out,
        "index  {}  essential  mu   irreducible  atom  witnesses",
        pad("label")
    )
    .unwrap();
    for r in &reports {
        writeln!(
            out,
            "{:<5}  {}  {:<9}  {:<3}  {:<11}  {:<4}  {}",
            r.element,
            pad(l.label(r.element)),
            yes(r.essential),
            yes(r.mu),
            yes(r.irreducible),
            yes(r.atom),
            witnesses(l, r)
        )
        .unwrap();
    }
    let pick = |f: fn(&MuReport) -> bool| reports.iter().filter(move |r| f(r)).map(|r| r.element);
    writeln!(out, "mu-set: {}", names(l, pick(|r| r.mu))).unwrap();
    writeln!(out, "essential: {}", names(l, pick(|r| r.essential))).unwrap();
    writeln!(out, "irreducible: {}", names(l, pick(|r| r.irreducible))).unwrap();
    writeln!(out, "atoms: {}", names(l, l.atoms())).unwrap();
    writeln!(out, "maximal: {}", names(l, l.maximal_elements())).unwrap();
    writeln!(out, "socle: {}", l.label(mu::socle(l))).unwrap();
    Analysis {
        text: out,
        fast_available,
    }
}

/// One line per element where a closed form disagrees with brute force.
pub fn cross_check(built: &Built) -> Vec<String> {
    let l = built.lattice();
    l.elements()
        .filter_map(|x| {
            let v = built.fast_verdict(x)?;
            let (essential, is_mu) = (mu::is_essential(l, x), mu::is_mu(l, x));
            if v.essential == essential && v.mu == is_mu {
                return None;
            }
            Some(format!(
                "{}: closed form (essential {}, mu {}) vs brute force (essential {}, mu {})",
                l.label(x),
                v.essential,
                v.mu,
                essential,
                is_mu
            ))
        })
        .collect()
}

pub struct ScanRow {
    pub n: u64,
    pub ideals: usize,
    pub essential: usize,
    pub mu: usize,
    pub irreducible: usize,
}

pub fn scan_rows(from: u64, to: u64, fast: bool) -> mulattice::Result<Vec<ScanRow>> {
    (from..=to)
        .into_par_iter()
        .map(|n| {
            let z = builders::zn(n)?;
            let l = z.lattice();
            let (mut essential, mut is_mu) = (0, 0);
            for x in l.elements() {
                let (e, m) = if fast {
                    let v = mu::fast_mu_exponent(z.modulus(), &z.vector(x))?;
                    (v.essential, v.mu)
                } else {
                    (mu::is_essential(l, x), mu::is_mu(l, x))
                };
                essential += e as usize;
                is_mu += m as usize;
            }
            Ok(ScanRow {
                n,
                ideals: l.len(),
                essential,
                mu: is_mu,
                irreducible: l.elements().filter(|&x| mu::is_irreducible(l, x)).count(),
            })
        })
        .collect()
}
