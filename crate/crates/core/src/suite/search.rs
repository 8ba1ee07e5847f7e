//! Searches small lattices for instances of boundary phenomena.

use serde::{Deserialize, Serialize};

use crate::document::LatticeDocument;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::lattice::{Element, FiniteLattice};
use crate::mu;

use super::NamedElement;

pub const QUERIES: &[&str] = &[
    "mu-not-essential-not-irreducible-nonmodular",
    "muclosed-converse",
    "pcmu-maximality",
];

pub const MAX_SEARCH_SIZE: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub query: String,
    pub document: LatticeDocument,
    pub elements: Vec<NamedElement>,
    pub detail: String,
}

impl Witness {
    /// Rebuilds the lattice and re-checks the query at the stored elements.
    pub fn verify(&self) -> Result<bool> {
        let built = self.document.build()?;
        let l = built.lattice();
        let xs: Vec<Element> = self.elements.iter().map(|e| e.index).collect();
        if xs.iter().any(|&x| x >= l.len()) {
            return Ok(false);
        }
        holds(&self.query, l, &xs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub query: String,
    pub max_size: usize,
    pub lattices_scanned: usize,
    pub witness: Option<Witness>,
}

fn check_query(query: &str) -> Result<()> {
    if QUERIES.contains(&query) {
        Ok(())
    } else {
        Err(Error::UnknownQuery(query.to_string()))
    }
}

/// Whether `xs` (in the role order of the query) is a witness in `l`.
fn holds(query: &str, l: &FiniteLattice, xs: &[Element]) -> Result<bool> {
    check_query(query)?;
    Ok(match (query, xs) {
        ("mu-not-essential-not-irreducible-nonmodular", &[x]) => {
            !l.is_modular()
                && mu::is_mu(l, x)
                && !mu::is_essential(l, x)
                && !mu::is_irreducible(l, x)
        }
        ("muclosed-converse", &[x, y, b]) => {
            x != l.bottom()
                && l.pseudo_complement(y) == Some(x)
                && l.lt(x, b)
                && mu::is_mu(&l.down_view(b), x)
        }
        ("pcmu-maximality", &[a, b, c, beyond]) => {
            l.is_distributive()
                && a != l.bottom()
                && l.pseudo_complement(a) == Some(b)
                && maximal_disjoint(l, a, b).contains(&c)
                && l.lt(c, beyond)
                && mu::is_mu(&l.down_view(beyond), a)
        }
        _ => false,
    })
}

fn maximal_disjoint(l: &FiniteLattice, a: Element, b: Element) -> Vec<Element> {
    let candidates: Vec<Element> = l.above(a).filter(|&c| l.meet(b, c) == l.bottom()).collect();
    candidates
        .iter()
        .copied()
        .filter(|&c| !candidates.iter().any(|&d| l.lt(c, d)))
        .collect()
}

fn find(query: &str, l: &FiniteLattice) -> Option<(Vec<(&'static str, Element)>, String)> {
    match query {
        "mu-not-essential-not-irreducible-nonmodular" => {
            if l.is_modular() {
                return None;
            }
            l.elements()
                .find(|&x| mu::is_mu(l, x) && !mu::is_essential(l, x) && !mu::is_irreducible(l, x))
                .map(|x| {
                    (
                        vec![("x", x)],
                        "mu-element that is neither essential nor irreducible in a non-modular lattice".to_string(),
                    )
                })
        }
        "muclosed-converse" => l.elements().filter(|&x| x != l.bottom()).find_map(|x| {
            let y = l.elements().find(|&y| l.pseudo_complement(y) == Some(x))?;
            let b = mu::mu_closed_witness(l, x)?;
            Some((
                vec![("x", x), ("of", y), ("b", b)],
                "pseudo-complement that is not mu-closed".to_string(),
            ))
        }),
        "pcmu-maximality" => {
            if !l.is_distributive() {
                return None;
            }
            l.elements().filter(|&a| a != l.bottom()).find_map(|a| {
                let b = l.pseudo_complement(a)?;
                maximal_disjoint(l, a, b).into_iter().find_map(|c| {
                    let beyond = l
                        .above(c)
                        .find(|&d| d != c && mu::is_mu(&l.down_view(d), a))?;
                    Some((
                        vec![("a", a), ("b", b), ("c", c), ("c'", beyond)],
                        "a <=_mu c'↓ for some c' strictly above a maximal c".to_string(),
                    ))
                })
            })
        }
        _ => None,
    }
}

/// The first witness of `query` in `l`, in element index order.
pub fn search_lattice(query: &str, l: &FiniteLattice) -> Result<Option<Witness>> {
    check_query(query)?;
    Ok(find(query, l).map(|(elements, detail)| Witness {
        query: query.to_string(),
        document: LatticeDocument::explicit(l, None),
        elements: elements
            .into_iter()
            .map(|(role, index)| NamedElement {
                role: role.to_string(),
                index,
                label: l.label(index).to_string(),
            })
            .collect(),
        detail,
    }))
}

/// Scans the lattices on at most `max_size` elements, one per isomorphism
/// class, smallest first, and stops at the first witness.
pub fn counterexample_search(query: &str, max_size: usize) -> Result<SearchOutcome> {
    check_query(query)?;
    if max_size > MAX_SEARCH_SIZE {
        return Err(Error::SearchBudgetExceeded {
            budget: MAX_SEARCH_SIZE,
        });
    }
    let mut scanned = 0;
    for l in enumerate::enumerate_lattices(max_size, true)? {
        scanned += 1;
        if let Some(w) = search_lattice(query, &l)? {
            return Ok(SearchOutcome {
                query: query.to_string(),
                max_size,
                lattices_scanned: scanned,
                witness: Some(w),
            });
        }
    }
    Ok(SearchOutcome {
        query: query.to_string(),
        max_size,
        lattices_scanned: scanned,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;

    fn labels(w: &Witness) -> Vec<&str> {
        w.elements.iter().map(|e| e.label.as_str()).collect()
    }

    #[test]
    fn powerset_witnesses() {
        let p = builders::powerset_lattice(3).unwrap();
        let w = search_lattice("muclosed-converse", &p).unwrap().unwrap();
        assert_eq!(labels(&w), vec!["{1}", "{2,3}", "{1,2}"]);
        assert!(w.verify().unwrap());
        let w = search_lattice("pcmu-maximality", &p).unwrap().unwrap();
        assert_eq!(labels(&w), vec!["{1}", "{2,3}", "{1}", "{1,2}"]);
        assert!(w.verify().unwrap());
    }

    #[test]
    fn n5_has_no_exotic_mu_element() {
        let n5 = builders::n5();
        assert_eq!(
            search_lattice("mu-not-essential-not-irreducible-nonmodular", &n5).unwrap(),
            None
        );
    }

    #[test]
    fn enumerated_searches() {
        for q in ["muclosed-converse", "pcmu-maximality"] {
            let out = counterexample_search(q, 5).unwrap();
            let w = out
                .witness
                .expect("small Boolean lattices already witness it");
            assert!(w.verify().unwrap());
            assert!(out.lattices_scanned <= 10);
        }
    }

    #[test]
    fn forged_witness_does_not_verify() {
        let p = builders::powerset_lattice(2).unwrap();
        let mut w = search_lattice("muclosed-converse", &p).unwrap().unwrap();
        w.elements[2].index = w.elements[0].index;
        assert!(!w.verify().unwrap());
    }

    #[test]
    fn guards() {
        assert_eq!(
            counterexample_search("muclosed-converse", 8),
            Err(Error::SearchBudgetExceeded { budget: 7 })
        );
        assert_eq!(
            counterexample_search("nonsense", 3),
            Err(Error::UnknownQuery("nonsense".to_string()))
        );
    }
}
