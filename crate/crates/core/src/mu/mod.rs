//! Essential, mu, and irreducible elements, decided by brute force over a
//! lattice or one of its intervals.
//!
//! Every predicate is relative to a [`SublatticeView`]; "zero" is the view's
//! bottom, which for an up-set is its anchor. Whole-lattice callers can pass
//! `&FiniteLattice` directly.
//!
//! `x` is a mu-element when for all `y`, `z` with `y ^ z != 0`, `x ^ y != 0`
//! and `x ^ z != 0` we also have `x ^ y ^ z != 0`. This pairwise form is
//! equivalent to the condition over arbitrary finite families, which is kept
//! only as a cross-check ([`is_mu_by_families`]).

use std::borrow::Cow;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{Element, FiniteLattice, SublatticeView};
use crate::quantale::Quantale;

pub(crate) mod complement;
mod fast;

pub use complement::{
    essentially_closed_witness, is_essentially_closed, is_mu_closed, maximal_above_disjoint,
    mu_closed_witness, mu_complement_containing, mu_complements,
};
pub use fast::{fast_mu_exponent, fast_mu_modular, fast_mu_topology, FastVerdict};

/// Anything that can be looked at as an interval of a lattice.
pub trait AsView<'a> {
    fn into_view(self) -> Cow<'a, SublatticeView<'a>>;
}

impl<'a> AsView<'a> for &'a FiniteLattice {
    fn into_view(self) -> Cow<'a, SublatticeView<'a>> {
        Cow::Owned(self.whole())
    }
}

impl<'a> AsView<'a> for &'a SublatticeView<'a> {
    fn into_view(self) -> Cow<'a, SublatticeView<'a>> {
        Cow::Borrowed(self)
    }
}

/// A nonzero `y` in the view with `x ^ y = 0`.
pub fn essential_witness<'a>(scope: impl AsView<'a>, x: Element) -> Option<Element> {
    let view = scope.into_view();
    let zero = view.bottom();
    let found = view.nonzero().find(|&y| view.meet(x, y) == zero);
    found
}

pub fn is_essential<'a>(scope: impl AsView<'a>, x: Element) -> bool {
    essential_witness(scope, x).is_none()
}

/// The first pair `(y, z)` (in index order) with `y ^ z`, `x ^ y`, `x ^ z`
/// all nonzero but `x ^ y ^ z = 0`.
pub fn mu_witness<'a>(scope: impl AsView<'a>, x: Element) -> Option<(Element, Element)> {
    let view = scope.into_view();
    let zero = view.bottom();
    let touching: Vec<(Element, Element)> = view
        .elements()
        .iter()
        .map(|&y| (y, view.meet(x, y)))
        .filter(|&(_, xy)| xy != zero)
        .collect();
    for (i, &(y, xy)) in touching.iter().enumerate() {
        for &(z, _) in &touching[i + 1..] {
            if view.meet(y, z) != zero && view.meet(xy, z) == zero {
                return Some((y, z));
            }
        }
    }
    None
}

pub fn is_mu<'a>(scope: impl AsView<'a>, x: Element) -> bool {
    mu_witness(scope, x).is_none()
}

/// Whether `(y, z)` really refutes mu-ness of `x` in the view.
pub fn refutes_mu<'a>(scope: impl AsView<'a>, x: Element, (y, z): (Element, Element)) -> bool {
    let view = scope.into_view();
    let zero = view.bottom();
    [x, y, z].iter().all(|&e| view.contains(e))
        && view.meet(y, z) != zero
        && view.meet(x, y) != zero
        && view.meet(x, z) != zero
        && view.meet(x, view.meet(y, z)) == zero
}

/// The defining condition checked literally over every family of
/// `2..=max_family` distinct elements.
pub fn is_mu_by_families<'a>(scope: impl AsView<'a>, x: Element, max_family: usize) -> bool {
    let view = scope.into_view();
    let zero = view.bottom();
    let touching: Vec<Element> = view
        .elements()
        .iter()
        .copied()
        .filter(|&y| view.meet(x, y) != zero)
        .collect();

    // depth-first over increasing index tuples, carrying the running meet
    fn extend(
        view: &SublatticeView<'_>,
        x: Element,
        touching: &[Element],
        start: usize,
        size: usize,
        acc: Element,
        max_family: usize,
    ) -> bool {
        let zero = view.bottom();
        if size >= 2 && acc != zero && view.meet(x, acc) == zero {
            return false;
        }
        if size == max_family {
            return true;
        }
        (start..touching.len()).all(|i| {
            extend(
                view,
                x,
                touching,
                i + 1,
                size + 1,
                view.meet(acc, touching[i]),
                max_family,
            )
        })
    }
    extend(&view, x, &touching, 0, 0, view.top(), max_family)
}

/// Nonzero `y, z <= x` in the view with `y ^ z = 0`.
pub fn irreducible_witness<'a>(scope: impl AsView<'a>, x: Element) -> Option<(Element, Element)> {
    let view = scope.into_view();
    let zero = view.bottom();
    let lattice = view.parent();
    let below: Vec<Element> = view.nonzero().filter(|&y| lattice.leq(y, x)).collect();
    for (i, &y) in below.iter().enumerate() {
        for &z in &below[i + 1..] {
            if view.meet(y, z) == zero {
                return Some((y, z));
            }
        }
    }
    None
}

/// No two nonzero elements below `x` meet at zero.
pub fn is_irreducible<'a>(scope: impl AsView<'a>, x: Element) -> bool {
    irreducible_witness(scope, x).is_none()
}

/// Why an element is not an atom of the view.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtomWitness {
    /// The element is the view's zero.
    Zero,
    /// An element strictly between zero and the element.
    Between(Element),
}

pub fn atom_witness<'a>(scope: impl AsView<'a>, x: Element) -> Option<AtomWitness> {
    let view = scope.into_view();
    let zero = view.bottom();
    if x == zero {
        return Some(AtomWitness::Zero);
    }
    let lattice = view.parent();
    let between = view.nonzero().find(|&w| lattice.lt(w, x));
    between.map(AtomWitness::Between)
}

pub fn is_atom<'a>(scope: impl AsView<'a>, x: Element) -> bool {
    atom_witness(scope, x).is_none()
}

/// Verdicts for one element, with a witness for each negative verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuReport {
    pub element: Element,
    pub essential: bool,
    pub mu: bool,
    pub irreducible: bool,
    pub atom: bool,
    pub essential_witness: Option<Element>,
    pub mu_witness: Option<(Element, Element)>,
    pub irreducible_witness: Option<(Element, Element)>,
    pub atom_witness: Option<AtomWitness>,
}

pub fn mu_report<'a>(scope: impl AsView<'a>, x: Element) -> MuReport {
    let view = scope.into_view();
    let essential_witness = essential_witness(&*view, x);
    let mu_witness = mu_witness(&*view, x);
    let irreducible_witness = irreducible_witness(&*view, x);
    let atom_witness = atom_witness(&*view, x);
    MuReport {
        element: x,
        essential: essential_witness.is_none(),
        mu: mu_witness.is_none(),
        irreducible: irreducible_witness.is_none(),
        atom: atom_witness.is_none(),
        essential_witness,
        mu_witness,
        irreducible_witness,
        atom_witness,
    }
}

/// Reports for every element of the view, in view order. Elements are
/// analysed in parallel; the output order does not depend on scheduling.
pub fn analyze<'a>(scope: impl AsView<'a>) -> Vec<MuReport> {
    let view = scope.into_view();
    view.elements()
        .par_iter()
        .map(|&x| mu_report(&*view, x))
        .collect()
}

pub fn mu_elements<'a>(scope: impl AsView<'a>) -> Vec<Element> {
    let view = scope.into_view();
    view.elements()
        .iter()
        .copied()
        .filter(|&x| is_mu(&*view, x))
        .collect()
}

/// `x <=_mu b↓`: `x <= b` and `x` is a mu-element of the down-set of `b`.
pub fn mu_in_down(lattice: &FiniteLattice, b: Element, x: Element) -> Result<bool> {
    lattice.check_index(b)?;
    lattice.check_index(x)?;
    if !lattice.leq(x, b) {
        return Err(Error::PreorderViolation {
            x,
            b,
            expected: "x <= b",
        });
    }
    Ok(is_mu(&lattice.down_view(b), x))
}

/// `x <=_mu b↑` in a frame: `b <= x` and `x` is a mu-element of the up-set
/// of `b`, whose zero is `b`.
pub fn mu_in_up(frame: &Quantale, b: Element, x: Element) -> Result<bool> {
    frame.require_frame()?;
    let lattice = frame.lattice();
    lattice.check_index(b)?;
    lattice.check_index(x)?;
    if !lattice.leq(b, x) {
        return Err(Error::PreorderViolation {
            x,
            b,
            expected: "b <= x",
        });
    }
    Ok(is_mu(&lattice.up_view(b), x))
}

/// Join of all atoms (bottom if there are none).
pub fn socle(lattice: &FiniteLattice) -> Element {
    lattice.join_all(lattice.atoms())
}

/// Whether each member meets the join of the others at zero. The slice is
/// treated as a set.
pub fn is_independent(lattice: &FiniteLattice, set: &[Element]) -> Result<bool> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    for &x in set {
        lattice.check_index(x)?;
    }
    let mut members = set.to_vec();
    members.sort_unstable();
    members.dedup();
    Ok(members.iter().enumerate().all(|(i, &a)| {
        let others = lattice.join_all(
            members
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &b)| b),
        );
        lattice.meet(a, others) == lattice.bottom()
    }))
}

/// The join-with-`a` map from a frame onto the up-set of `a`.
#[derive(Debug, Clone)]
pub struct JoinMap<'a> {
    frame: &'a Quantale,
    anchor: Element,
    view: SublatticeView<'a>,
}

pub fn kappa(frame: &Quantale, a: Element) -> Result<JoinMap<'_>> {
    frame.require_frame()?;
    frame.lattice().check_index(a)?;
    Ok(JoinMap {
        frame,
        anchor: a,
        view: frame.lattice().up_view(a),
    })
}

impl<'a> JoinMap<'a> {
    pub fn apply(&self, x: Element) -> Element {
        self.frame.lattice().join(x, self.anchor)
    }

    pub fn view(&self) -> &SublatticeView<'a> {
        &self.view
    }

    /// An essential element of the frame whose image is not essential in
    /// the up-set.
    pub fn essential_failure(&self) -> Option<Element> {
        let l = self.frame.lattice();
        l.elements()
            .find(|&x| is_essential(l, x) && !is_essential(&self.view, self.apply(x)))
    }

    /// A mu-element of the frame whose image is not a mu-element of the
    /// up-set.
    pub fn mu_failure(&self) -> Option<Element> {
        let l = self.frame.lattice();
        l.elements()
            .find(|&x| is_mu(l, x) && !is_mu(&self.view, self.apply(x)))
    }

    pub fn preserves_essential(&self) -> bool {
        self.essential_failure().is_none()
    }

    pub fn preserves_mu(&self) -> bool {
        self.mu_failure().is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;

    fn labels(l: &FiniteLattice, xs: &[Element]) -> Vec<String> {
        let mut v: Vec<String> = xs.iter().map(|&x| l.label(x).to_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn z12_three_is_mu_not_essential() {
        let z = builders::zn(12).unwrap();
        let l = z.lattice();
        let three = z.ideal_of(3);
        assert_eq!(essential_witness(l, three), Some(z.ideal_of(4)));
        assert!(is_mu(l, three));
        assert!(is_essential(l, z.ideal_of(2)));
        assert!(is_essential(l, l.top()));
    }

    #[test]
    fn z30_two_is_not_mu() {
        let z = builders::zn(30).unwrap();
        let l = z.lattice();
        let (y, w) = mu_witness(l, z.ideal_of(2)).unwrap();
        assert_eq!(labels(l, &[y, w]), vec!["(3)", "(5)"]);
        assert!(refutes_mu(l, z.ideal_of(2), (y, w)));
    }

    #[test]
    fn powerset_pair_is_not_mu() {
        let p = builders::powerset_lattice(3).unwrap();
        let x = p.index_of("{1,2}").unwrap();
        let (y, z) = mu_witness(&p, x).unwrap();
        assert_eq!(labels(&p, &[y, z]), vec!["{1,3}", "{2,3}"]);
        assert!(is_mu(&p, p.bottom()));
        assert_eq!(
            labels(&p, &mu_elements(&p)),
            vec!["X", "{1}", "{2}", "{3}", "∅"]
        );
    }

    #[test]
    fn relative_mu() {
        let p = builders::powerset_frame(3).unwrap();
        let l = p.lattice();
        let idx = |s: &str| l.index_of(s).unwrap();
        assert!(mu_in_down(l, idx("{1,2}"), idx("{1}")).unwrap());
        for x in l.elements() {
            assert!(mu_in_down(l, x, x).unwrap());
        }
        assert!(mu_in_up(&p, idx("{2}"), idx("{2,3}")).unwrap());
        assert!(!is_mu(l, idx("{2,3}")));
        assert!(is_atom(&l.up_view(idx("{2}")), idx("{2,3}")));
        assert!(matches!(
            mu_in_down(l, idx("{1}"), idx("{2}")),
            Err(Error::PreorderViolation { .. })
        ));
        assert!(matches!(
            mu_in_up(&p, idx("{1,2}"), idx("{1}")),
            Err(Error::PreorderViolation { .. })
        ));
        let z = builders::zn(12).unwrap();
        assert!(matches!(
            mu_in_up(z.quantale(), z.ideal_of(1), z.ideal_of(1)),
            Err(Error::NotAFrame { .. })
        ));
    }

    #[test]
    fn irreducibility() {
        let z = builders::zn(900).unwrap();
        let l = z.lattice();
        let (y, w) = irreducible_witness(l, z.ideal_of(60)).unwrap();
        assert_eq!(l.meet(y, w), l.bottom());
        assert!(l.leq(y, z.ideal_of(60)) && l.leq(w, z.ideal_of(60)));
        assert!(refutes_irreducible(
            l,
            z.ideal_of(60),
            (z.ideal_of(180), z.ideal_of(300))
        ));

        let z12 = builders::zn(12).unwrap();
        assert!(is_irreducible(z12.lattice(), z12.ideal_of(3)));
        let m3 = builders::m3();
        assert!(m3.atoms().iter().all(|&a| is_irreducible(&m3, a)));
        assert!(is_irreducible(&m3, m3.bottom()));
    }

    fn refutes_irreducible(l: &FiniteLattice, x: Element, (y, z): (Element, Element)) -> bool {
        y != l.bottom()
            && z != l.bottom()
            && l.leq(y, x)
            && l.leq(z, x)
            && l.meet(y, z) == l.bottom()
    }

    #[test]
    fn z12_every_ideal_is_mu() {
        let z = builders::zn(12).unwrap();
        assert_eq!(mu_elements(z.lattice()).len(), 6);
        let c2 = builders::chain_lattice(2).unwrap();
        assert_eq!(mu_elements(&c2), vec![0, 1]);
    }

    #[test]
    fn socles() {
        let p = builders::powerset_lattice(3).unwrap();
        assert_eq!(socle(&p), p.top());
        let z = builders::zn(12).unwrap();
        assert_eq!(socle(z.lattice()), z.ideal_of(2));
        let c = builders::chain_lattice(3).unwrap();
        assert_eq!(socle(&c), 1);
    }

    #[test]
    fn independence() {
        let z = builders::zn(12).unwrap();
        let l = z.lattice();
        assert!(is_independent(l, &[z.ideal_of(3)]).unwrap());
        assert!(is_independent(l, &[z.ideal_of(4), z.ideal_of(6)]).unwrap());
        let p = builders::powerset_lattice(3).unwrap();
        assert!(!is_independent(&p, &[0b001, 0b011]).unwrap());
        assert_eq!(is_independent(&p, &[]), Err(Error::EmptySet));
    }

    #[test]
    fn pairwise_matches_families() {
        for l in [
            builders::powerset_lattice(3).unwrap(),
            builders::zn(360).unwrap().lattice().clone(),
            builders::m3(),
            builders::n5(),
        ] {
            for x in l.elements() {
                assert_eq!(is_mu(&l, x), is_mu_by_families(&l, x, 4), "{}", l.label(x));
            }
        }
    }

    #[test]
    fn reports_carry_witnesses() {
        let z = builders::zn(30).unwrap();
        let l = z.lattice();
        for r in analyze(l) {
            assert_eq!(r.mu, r.mu_witness.is_none());
            if let Some(w) = r.mu_witness {
                assert!(refutes_mu(l, r.element, w));
            }
            if let Some(y) = r.essential_witness {
                assert_eq!(l.meet(r.element, y), l.bottom());
            }
            if r.essential || r.atom {
                assert!(r.mu);
            }
        }
        let bottom = mu_report(l, l.bottom());
        assert_eq!(bottom.atom_witness, Some(AtomWitness::Zero));
    }

    #[test]
    fn kappa_in_three_chain() {
        let c = builders::chain(3).unwrap();
        let k0 = kappa(&c, 0).unwrap();
        assert!((0..3).all(|x| k0.apply(x) == x));
        let k2 = kappa(&c, 2).unwrap();
        assert!((0..3).all(|x| k2.apply(x) == 2));
        let k1 = kappa(&c, 1).unwrap();
        assert_eq!(k1.apply(1), k1.view().bottom());
        assert!(is_essential(c.lattice(), 1));
        assert!(!is_essential(k1.view(), k1.apply(1)));
        assert!(!k1.preserves_essential());
        assert!(!c.is_regular(1));
        assert!(matches!(
            kappa(builders::zn(12).unwrap().quantale(), 0),
            Err(Error::NotAFrame { .. })
        ));
    }
}
