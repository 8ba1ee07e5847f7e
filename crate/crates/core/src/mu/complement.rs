//! Mu-complements and mu-closedness.

use crate::error::{Error, Result};
use crate::lattice::{Element, FiniteLattice};
use crate::quantale::Quantale;

use super::{is_essential, is_mu};

/// Every `y` with `x ^ y = 0` and `x v y` a mu-element, ascending.
pub fn mu_complements(lattice: &FiniteLattice, x: Element) -> Vec<Element> {
    lattice
        .elements()
        .filter(|&y| lattice.meet(x, y) == lattice.bottom() && is_mu(lattice, lattice.join(x, y)))
        .collect()
}

/// Maximal elements of `candidates` under the lattice order, ascending.
fn maximal_among(lattice: &FiniteLattice, candidates: &[Element]) -> Vec<Element> {
    candidates
        .iter()
        .copied()
        .filter(|&c| !candidates.iter().any(|&d| lattice.lt(c, d)))
        .collect()
}

/// In a modular lattice with `x ^ y = 0`, a maximal `y'` above `x` with
/// `y ^ y' = 0`; it is a mu-complement of `y`. The lowest-index maximal
/// candidate is returned.
pub fn mu_complement_containing(
    lattice: &FiniteLattice,
    x: Element,
    y: Element,
) -> Result<Element> {
    lattice.check_index(x)?;
    lattice.check_index(y)?;
    if !lattice.is_modular() {
        return Err(Error::NotModular);
    }
    if lattice.meet(x, y) != lattice.bottom() {
        return Err(Error::MeetNotZero { x, y });
    }
    containing_unchecked(lattice, x, y)
}

/// [`mu_complement_containing`] without the modularity and disjointness
/// checks; the postcondition is still enforced.
pub(crate) fn containing_unchecked(
    lattice: &FiniteLattice,
    x: Element,
    y: Element,
) -> Result<Element> {
    let candidates: Vec<Element> = lattice
        .above(x)
        .filter(|&c| lattice.meet(y, c) == lattice.bottom())
        .collect();
    let chosen = maximal_among(lattice, &candidates)[0];
    if !is_mu(lattice, lattice.join(y, chosen)) {
        return Err(Error::PostconditionFailed(format!(
            "{} v {} is not a mu-element",
            lattice.label(y),
            lattice.label(chosen)
        )));
    }
    Ok(chosen)
}

/// Some `b > x` with `x` essential in the down-set of `b`.
pub fn essentially_closed_witness(lattice: &FiniteLattice, x: Element) -> Option<Element> {
    lattice
        .above(x)
        .filter(|&b| b != x)
        .find(|&b| is_essential(&lattice.down_view(b), x))
}

pub fn is_essentially_closed(lattice: &FiniteLattice, x: Element) -> bool {
    essentially_closed_witness(lattice, x).is_none()
}

/// Some `b > x` with `x` a mu-element of the down-set of `b`.
pub fn mu_closed_witness(lattice: &FiniteLattice, x: Element) -> Option<Element> {
    lattice
        .above(x)
        .filter(|&b| b != x)
        .find(|&b| is_mu(&lattice.down_view(b), x))
}

pub fn is_mu_closed(lattice: &FiniteLattice, x: Element) -> bool {
    mu_closed_witness(lattice, x).is_none()
}

/// In a frame, with `b` the pseudo-complement of `a`: all maximal `c` with
/// `a <= c` and `b ^ c = 0`. Each is checked to satisfy `a <=_mu c↓`.
pub fn maximal_above_disjoint(frame: &Quantale, a: Element, b: Element) -> Result<Vec<Element>> {
    frame.require_frame()?;
    let lattice = frame.lattice();
    lattice.check_index(a)?;
    lattice.check_index(b)?;
    if lattice.pseudo_complement(a) != Some(b) {
        return Err(Error::NotPseudoComplement { a, b });
    }
    let candidates: Vec<Element> = lattice
        .above(a)
        .filter(|&c| lattice.meet(b, c) == lattice.bottom())
        .collect();
    let maximal = maximal_among(lattice, &candidates);
    if let Some(&c) = maximal.iter().find(|&&c| !is_mu(&lattice.down_view(c), a)) {
        return Err(Error::PostconditionFailed(format!(
            "{} is not a mu-element below {}",
            lattice.label(a),
            lattice.label(c)
        )));
    }
    Ok(maximal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;

    #[test]
    fn z12_complements_of_four() {
        let z = builders::zn(12).unwrap();
        let l = z.lattice();
        let got = mu_complements(l, z.ideal_of(4));
        let mut names: Vec<&str> = got.iter().map(|&y| l.label(y)).collect();
        names.sort();
        assert_eq!(names, vec!["(12)", "(3)", "(6)"]);
        assert_eq!(mu_complements(l, l.top()), vec![l.bottom()]);
    }

    #[test]
    fn powerset_complements_of_singleton() {
        let p = builders::powerset_lattice(3).unwrap();
        let got = mu_complements(&p, 0b001);
        assert_eq!(got, vec![0b000, 0b110]);
    }

    #[test]
    fn containing() {
        let z = builders::zn(12).unwrap();
        let l = z.lattice();
        assert_eq!(
            mu_complement_containing(l, z.ideal_of(3), z.ideal_of(4)).unwrap(),
            z.ideal_of(3)
        );
        assert_eq!(
            mu_complement_containing(l, l.bottom(), l.bottom()).unwrap(),
            l.top()
        );
        let m3 = builders::m3();
        let a = m3.index_of("a").unwrap();
        let got = mu_complement_containing(&m3, m3.bottom(), a).unwrap();
        assert_eq!(m3.label(got), "b");
        assert_eq!(
            mu_complement_containing(&builders::n5(), 0, 0),
            Err(Error::NotModular)
        );
        assert!(matches!(
            mu_complement_containing(l, z.ideal_of(2), z.ideal_of(4)),
            Err(Error::MeetNotZero { .. })
        ));
    }

    #[test]
    fn closedness() {
        let p = builders::powerset_lattice(3).unwrap();
        assert_eq!(mu_closed_witness(&p, 0b001), Some(0b011));
        assert!(is_mu_closed(&p, 0b011));
        assert!(is_essentially_closed(&p, 0b011));
        assert!(is_mu_closed(&p, p.top()));
        assert!(is_essentially_closed(&p, p.top()));
        let c = builders::chain_lattice(3).unwrap();
        assert_eq!(essentially_closed_witness(&c, 1), Some(2));
    }

    #[test]
    fn maximal_disjoint() {
        let p = builders::powerset_frame(3).unwrap();
        assert_eq!(
            maximal_above_disjoint(&p, 0b001, 0b110).unwrap(),
            vec![0b001]
        );
        assert_eq!(maximal_above_disjoint(&p, 0b111, 0).unwrap(), vec![0b111]);
        assert_eq!(
            maximal_above_disjoint(&p, 0b001, 0b010),
            Err(Error::NotPseudoComplement { a: 0b001, b: 0b010 })
        );
        let c = builders::chain(3).unwrap();
        assert_eq!(maximal_above_disjoint(&c, 1, 0).unwrap(), vec![2]);
    }
}
