//! Versioned JSON descriptions of lattices and quantales.

use serde::{Deserialize, Serialize};

use crate::builders::{self, ExponentQuantale, FactoredModulus, TopologySpec};
use crate::error::{Error, Result};
use crate::lattice::{build_lattice, Element, FiniteLattice};
use crate::mu::{self, FastVerdict};
use crate::quantale::{build_quantale, Quantale};
use crate::relation::Relation;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDocument {
    pub version: u32,
    #[serde(flatten)]
    pub kind: DocumentKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DocumentKind {
    /// `leq` lists generating pairs `(x, y)` meaning `x <= y`; the order is
    /// their reflexive transitive closure.
    Explicit {
        labels: Vec<String>,
        leq: Vec<(Element, Element)>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mult: Option<Vec<Vec<Element>>>,
    },
    Powerset {
        points: usize,
    },
    Zn {
        n: u64,
    },
    PidQuotient {
        primes: Vec<String>,
        exponents: Vec<u32>,
    },
    /// Opens are lists of point indices.
    Topology {
        points: Vec<String>,
        opens: Vec<Vec<usize>>,
    },
    /// The Alexandrov topology of a preorder; `(i, j)` means `i <= j`.
    Preorder {
        points: Vec<String>,
        pairs: Vec<(usize, usize)>,
    },
    Chain {
        length: usize,
    },
    Product {
        left: Box<LatticeDocument>,
        right: Box<LatticeDocument>,
    },
}

impl LatticeDocument {
    pub fn new(kind: DocumentKind) -> Self {
        LatticeDocument {
            version: FORMAT_VERSION,
            kind,
        }
    }

    /// An explicit document listing the cover pairs of `lattice`, with the
    /// multiplication table when `quantale` is given.
    pub fn explicit(lattice: &FiniteLattice, quantale: Option<&Quantale>) -> Self {
        Self::new(DocumentKind::Explicit {
            labels: lattice.labels().to_vec(),
            leq: lattice.cover_pairs(),
            mult: quantale.map(Quantale::table),
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: LatticeDocument =
            serde_json::from_str(text).map_err(|e| Error::InvalidDocument(e.to_string()))?;
        doc.check_version()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents always serialize");
        text.push('\n');
        text
    }

    fn check_version(&self) -> Result<()> {
        if self.version != FORMAT_VERSION {
            return Err(Error::InvalidDocument(format!(
                "unsupported format version {} (expected {FORMAT_VERSION})",
                self.version
            )));
        }
        if let DocumentKind::Product { left, right } = &self.kind {
            left.check_version()?;
            right.check_version()?;
        }
        Ok(())
    }

    pub fn build(&self) -> Result<Built> {
        self.check_version()?;
        match &self.kind {
            DocumentKind::Explicit { labels, leq, mult } => {
                let rel = Relation::from_pairs(labels.len(), leq)?.reflexive_transitive_closure();
                let lattice = build_lattice(labels.clone(), &rel)?;
                match mult {
                    Some(table) => Ok(Built::Quantale(build_quantale(lattice, table)?)),
                    None => Ok(Built::Lattice(lattice)),
                }
            }
            DocumentKind::Powerset { points } => {
                let frame = builders::powerset_frame(*points)?;
                let names = (1..=*points).map(|i| i.to_string()).collect();
                let spec = TopologySpec::new(names, (0..1u64 << points).collect())?;
                let opens = (0..1u64 << points).collect();
                Ok(Built::Space { frame, spec, opens })
            }
            DocumentKind::Zn { n } => Ok(Built::Exponent(builders::zn(*n)?)),
            DocumentKind::PidQuotient { primes, exponents } => {
                let modulus = FactoredModulus::new(primes.clone(), exponents.clone())?;
                Ok(Built::Exponent(builders::ideal_quantale(&modulus)?))
            }
            DocumentKind::Topology { points, opens } => {
                let masks = opens
                    .iter()
                    .map(|u| mask_of(u, points.len()))
                    .collect::<Result<Vec<u64>>>()?;
                let spec = TopologySpec::new(points.clone(), masks)?;
                Ok(Built::space(builders::topology_frame(&spec)?, spec))
            }
            DocumentKind::Preorder { points, pairs } => {
                let (frame, spec) = builders::alexandrov_frame(points.clone(), pairs)?;
                Ok(Built::space(frame, spec))
            }
            DocumentKind::Chain { length } => Ok(Built::Quantale(builders::chain(*length)?)),
            DocumentKind::Product { left, right } => {
                let (left, right) = (left.build()?, right.build()?);
                match (left.quantale(), right.quantale()) {
                    (Some(a), Some(b)) => Ok(Built::Quantale(a.product(b)?)),
                    _ => Ok(Built::Lattice(left.lattice().product(right.lattice())?)),
                }
            }
        }
    }
}

fn mask_of(points: &[usize], len: usize) -> Result<u64> {
    points.iter().try_fold(0u64, |acc, &p| {
        if p >= len || p >= 64 {
            Err(Error::IndexOutOfRange { index: p, len })
        } else {
            Ok(acc | 1 << p)
        }
    })
}

/// A constructed document, keeping whatever extra structure its kind offers
/// to the closed-form verdicts.
#[derive(Debug, Clone)]
pub enum Built {
    Lattice(FiniteLattice),
    Quantale(Quantale),
    Exponent(ExponentQuantale),
    /// A frame of opens; `opens[x]` is the open set of element `x`.
    Space {
        frame: Quantale,
        spec: TopologySpec,
        opens: Vec<u64>,
    },
}

impl Built {
    fn space(frame: Quantale, spec: TopologySpec) -> Self {
        let opens = spec.opens().to_vec();
        Built::Space { frame, spec, opens }
    }

    pub fn lattice(&self) -> &FiniteLattice {
        match self {
            Built::Lattice(l) => l,
            Built::Quantale(q) | Built::Space { frame: q, .. } => q.lattice(),
            Built::Exponent(e) => e.lattice(),
        }
    }

    pub fn quantale(&self) -> Option<&Quantale> {
        match self {
            Built::Lattice(_) => None,
            Built::Quantale(q) | Built::Space { frame: q, .. } => Some(q),
            Built::Exponent(e) => Some(e.quantale()),
        }
    }

    /// Closed-form verdicts, when the structure supports one: exponent
    /// vectors, topologies, or modular lattices (where essentiality is
    /// decided directly).
    pub fn fast_verdict(&self, x: Element) -> Option<FastVerdict> {
        match self {
            Built::Exponent(e) => mu::fast_mu_exponent(e.modulus(), &e.vector(x)).ok(),
            Built::Space { spec, opens, .. } => mu::fast_mu_topology(spec, opens[x]).ok(),
            _ => {
                let l = self.lattice();
                mu::fast_mu_modular(l, x).ok().map(|mu| FastVerdict {
                    essential: mu::is_essential(l, x),
                    mu,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_kinds() -> Vec<LatticeDocument> {
        vec![
            LatticeDocument::explicit(&builders::m3(), None),
            LatticeDocument::explicit(
                builders::chain(3).unwrap().lattice(),
                Some(&builders::chain(3).unwrap()),
            ),
            LatticeDocument::new(DocumentKind::Powerset { points: 3 }),
            LatticeDocument::new(DocumentKind::Zn { n: 12 }),
            LatticeDocument::new(DocumentKind::PidQuotient {
                primes: vec!["x".into(), "x+1".into(), "x+2".into()],
                exponents: vec![2, 1, 1],
            }),
            LatticeDocument::new(DocumentKind::Topology {
                points: vec!["a".into(), "b".into()],
                opens: vec![vec![], vec![1], vec![0, 1]],
            }),
            LatticeDocument::new(DocumentKind::Preorder {
                points: vec!["1".into(), "2".into(), "3".into()],
                pairs: vec![(0, 1)],
            }),
            LatticeDocument::new(DocumentKind::Chain { length: 4 }),
            LatticeDocument::new(DocumentKind::Product {
                left: Box::new(LatticeDocument::explicit(&builders::m3(), None)),
                right: Box::new(LatticeDocument::new(DocumentKind::Chain { length: 2 })),
            }),
        ]
    }

    #[test]
    fn round_trip_every_kind() {
        for doc in all_kinds() {
            let text = doc.to_json();
            let back = LatticeDocument::from_json(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_json(), text);
            doc.build().unwrap();
        }
    }

    #[test]
    fn explicit_rebuilds_same_order() {
        let n5 = builders::n5();
        let built = LatticeDocument::explicit(&n5, None).build().unwrap();
        assert_eq!(built.lattice().relation(), n5.relation());
        assert_eq!(built.lattice().labels(), n5.labels());
    }

    #[test]
    fn sizes_and_fast_paths() {
        let sizes: Vec<usize> = all_kinds()
            .iter()
            .map(|d| d.build().unwrap().lattice().len())
            .collect();
        assert_eq!(sizes, vec![5, 3, 8, 6, 12, 3, 6, 4, 10]);
        let z = LatticeDocument::new(DocumentKind::Zn { n: 30 })
            .build()
            .unwrap();
        let two = z.lattice().index_of("(2)").unwrap();
        assert!(!z.fast_verdict(two).unwrap().mu);
        let p = LatticeDocument::new(DocumentKind::Powerset { points: 3 })
            .build()
            .unwrap();
        assert!(!p.fast_verdict(0b011).unwrap().mu);
        assert!(p.fast_verdict(0b001).unwrap().mu);
        let n5 = Built::Lattice(builders::n5());
        assert_eq!(n5.fast_verdict(0), None);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            LatticeDocument::from_json("{\"version\": 2, \"kind\": \"zn\", \"n\": 4}"),
            Err(Error::InvalidDocument(_))
        ));
        assert!(matches!(
            LatticeDocument::from_json("{\"version\": 1, \"kind\": \"cube\"}"),
            Err(Error::InvalidDocument(_))
        ));
        let cyclic = LatticeDocument::new(DocumentKind::Explicit {
            labels: vec!["a".into(), "b".into()],
            leq: vec![(0, 1), (1, 0)],
            mult: None,
        });
        assert!(matches!(cyclic.build(), Err(Error::NotAPartialOrder(_))));
        let bad_open = LatticeDocument::new(DocumentKind::Topology {
            points: vec!["a".into()],
            opens: vec![vec![3]],
        });
        assert!(matches!(
            bad_open.build(),
            Err(Error::IndexOutOfRange { .. })
        ));
    }
}
