//! Commutative integral quantales over finite lattices.

use crate::error::{Error, Result};
use crate::lattice::{Element, FiniteLattice, LatticeHom};

/// A finite lattice with a validated commutative, associative multiplication
/// that has top as identity and distributes over joins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quantale {
    lattice: FiniteLattice,
    mult: Vec<u16>,
}

/// Validates `table` as a multiplication on `lattice`.
///
/// Distributivity over arbitrary joins is checked as binary distributivity
/// plus `x * 0 = 0`, which is equivalent on a finite lattice.
pub fn build_quantale(lattice: FiniteLattice, table: &[Vec<Element>]) -> Result<Quantale> {
    let n = lattice.len();
    if table.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: table.len(),
        });
    }
    let mut mult = Vec::with_capacity(n * n);
    for row in table {
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
        for &z in row {
            lattice.check_index(z)?;
            mult.push(z as u16);
        }
    }
    let q = Quantale { lattice, mult };
    q.validate()?;
    Ok(q)
}

/// The frame on a distributive lattice: multiplication is meet.
pub fn frame_from(lattice: FiniteLattice) -> Result<Quantale> {
    if let Some((x, y, z)) = lattice.distributivity_witness() {
        return Err(Error::NotDistributive { x, y, z });
    }
    Ok(Quantale::meet_frame(lattice))
}

impl Quantale {
    pub(crate) fn meet_frame(lattice: FiniteLattice) -> Self {
        let n = lattice.len();
        let mut mult = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                mult.push(lattice.meet(x, y) as u16);
            }
        }
        Quantale { lattice, mult }
    }

    pub(crate) fn from_table_unchecked(lattice: FiniteLattice, mult: Vec<u16>) -> Self {
        debug_assert_eq!(mult.len(), lattice.len() * lattice.len());
        Quantale { lattice, mult }
    }

    fn validate(&self) -> Result<()> {
        let l = &self.lattice;
        for x in l.elements() {
            for y in l.elements() {
                if self.mult(x, y) != self.mult(y, x) {
                    return Err(Error::NotCommutative { x, y });
                }
            }
        }
        for x in l.elements() {
            if self.mult(x, l.top()) != x {
                return Err(Error::IdentityViolation { x });
            }
            if self.mult(x, l.bottom()) != l.bottom() {
                return Err(Error::BottomNotAbsorbing { x });
            }
        }
        for x in l.elements() {
            for y in l.elements() {
                let xy = self.mult(x, y);
                for z in l.elements() {
                    if self.mult(xy, z) != self.mult(x, self.mult(y, z)) {
                        return Err(Error::NotAssociative { x, y, z });
                    }
                }
            }
        }
        for x in l.elements() {
            for y in l.elements() {
                for z in l.elements() {
                    if self.mult(x, l.join(y, z)) != l.join(self.mult(x, y), self.mult(x, z)) {
                        return Err(Error::NotJoinDistributive { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn into_lattice(self) -> FiniteLattice {
        self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    #[inline]
    pub fn mult(&self, x: Element, y: Element) -> Element {
        self.mult[x * self.len() + y] as Element
    }

    pub fn table(&self) -> Vec<Vec<Element>> {
        let n = self.len();
        (0..n)
            .map(|x| (0..n).map(|y| self.mult(x, y)).collect())
            .collect()
    }

    /// A pair whose product differs from its meet, if any.
    pub fn frame_witness(&self) -> Option<(Element, Element)> {
        let l = &self.lattice;
        l.elements()
            .flat_map(|x| l.elements().map(move |y| (x, y)))
            .find(|&(x, y)| self.mult(x, y) != l.meet(x, y))
    }

    pub fn is_frame(&self) -> bool {
        self.frame_witness().is_none()
    }

    pub fn require_frame(&self) -> Result<()> {
        match self.frame_witness() {
            Some((x, y)) => Err(Error::NotAFrame { x, y }),
            None => Ok(()),
        }
    }

    /// Join of every `x` with `x * a = 0`.
    pub fn annihilator(&self, a: Element) -> Element {
        let l = &self.lattice;
        l.join_all(l.elements().filter(|&x| self.mult(x, a) == l.bottom()))
    }

    pub fn is_regular(&self, a: Element) -> bool {
        self.annihilator(self.annihilator(a)) == a
    }

    /// Two nonzero elements with zero product.
    pub fn zero_divisor_witness(&self) -> Option<(Element, Element)> {
        let l = &self.lattice;
        let zero = l.bottom();
        l.elements()
            .flat_map(|x| l.elements().map(move |y| (x, y)))
            .find(|&(x, y)| x != zero && y != zero && self.mult(x, y) == zero)
    }

    /// No zero divisors.
    pub fn is_domain(&self) -> bool {
        self.zero_divisor_witness().is_none()
    }

    /// Componentwise product of two quantales.
    pub fn product(&self, other: &Quantale) -> Result<Quantale> {
        let lattice = self.lattice.product(&other.lattice)?;
        let n2 = other.len();
        let n = lattice.len();
        let mut mult = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (x / n2, x % n2);
                let (c, d) = (y / n2, y % n2);
                mult.push((self.mult(a, c) * n2 + other.mult(b, d)) as u16);
            }
        }
        Ok(Quantale::from_table_unchecked(lattice, mult))
    }
}

/// An element map between quantales.
#[derive(Debug, Clone)]
pub struct QuantaleHom<'a> {
    source: &'a Quantale,
    target: &'a Quantale,
    map: Vec<Element>,
}

impl<'a> QuantaleHom<'a> {
    pub fn new(source: &'a Quantale, target: &'a Quantale, map: Vec<Element>) -> Result<Self> {
        LatticeHom::new(source.lattice(), target.lattice(), map.clone())?;
        Ok(QuantaleHom {
            source,
            target,
            map,
        })
    }

    pub fn identity(q: &'a Quantale) -> Self {
        QuantaleHom {
            source: q,
            target: q,
            map: q.lattice().elements().collect(),
        }
    }

    pub fn source(&self) -> &'a Quantale {
        self.source
    }

    pub fn target(&self) -> &'a Quantale {
        self.target
    }

    pub fn map(&self) -> &[Element] {
        &self.map
    }

    pub fn apply(&self, x: Element) -> Element {
        self.map[x]
    }

    pub fn as_lattice_hom(&self) -> LatticeHom<'a> {
        LatticeHom::new(
            self.source.lattice(),
            self.target.lattice(),
            self.map.clone(),
        )
        .expect("validated at construction")
    }

    /// Preserves joins, multiplication and the unit.
    pub fn is_quantale_hom(&self) -> bool {
        let (s, t) = (self.source, self.target);
        let sl = s.lattice();
        self.as_lattice_hom().is_lattice_hom()
            && self.apply(sl.top()) == t.lattice().top()
            && sl.elements().all(|x| {
                sl.elements()
                    .all(|y| self.apply(s.mult(x, y)) == t.mult(self.apply(x), self.apply(y)))
            })
    }

    pub fn is_injective(&self) -> bool {
        self.as_lattice_hom().is_injective()
    }
}

/// Every injective quantale homomorphism from `source` to `target`, found by
/// backtracking over element assignments in index order. `budget` caps the
/// number of partial assignments explored.
pub fn find_injective_homs(
    source: &Quantale,
    target: &Quantale,
    budget: usize,
) -> Result<Vec<Vec<Element>>> {
    let mut search = HomSearch {
        source,
        target,
        map: vec![None; source.len()],
        used: vec![false; target.len()],
        visited: 0,
        budget,
        found: Vec::new(),
    };
    if source.len() > target.len() {
        return Ok(Vec::new());
    }
    let (sl, tl) = (source.lattice(), target.lattice());
    // bottom (the empty join) and top (the unit) are forced
    if !search.assign(sl.bottom(), tl.bottom()) {
        return Ok(Vec::new());
    }
    if sl.top() != sl.bottom() && !search.assign(sl.top(), tl.top()) {
        return Ok(Vec::new());
    }
    if sl.top() == sl.bottom() && tl.top() != tl.bottom() {
        return Ok(Vec::new());
    }
    search.extend(0)?;
    Ok(search.found)
}

struct HomSearch<'a> {
    source: &'a Quantale,
    target: &'a Quantale,
    map: Vec<Option<Element>>,
    used: Vec<bool>,
    visited: usize,
    budget: usize,
    found: Vec<Vec<Element>>,
}

impl HomSearch<'_> {
    /// Records `x -> y` and reports whether every fully assigned
    /// join/product constraint touching `x` still holds.
    fn assign(&mut self, x: Element, y: Element) -> bool {
        self.map[x] = Some(y);
        self.used[y] = true;
        if self.consistent(x) {
            true
        } else {
            self.unassign(x);
            false
        }
    }

    fn unassign(&mut self, x: Element) {
        if let Some(y) = self.map[x].take() {
            self.used[y] = false;
        }
    }

    fn consistent(&self, e: Element) -> bool {
        let (s, t) = (self.source, self.target);
        let (sl, tl) = (s.lattice(), t.lattice());
        for a in sl.elements() {
            let Some(fa) = self.map[a] else { continue };
            for b in a..sl.len() {
                let Some(fb) = self.map[b] else { continue };
                let j = sl.join(a, b);
                let m = s.mult(a, b);
                if a != e && b != e && j != e && m != e {
                    continue;
                }
                if let Some(fj) = self.map[j] {
                    if fj != tl.join(fa, fb) {
                        return false;
                    }
                }
                if let Some(fm) = self.map[m] {
                    if fm != t.mult(fa, fb) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn extend(&mut self, from: Element) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::SearchBudgetExceeded {
                budget: self.budget,
            });
        }
        let Some(x) = (from..self.map.len()).find(|&x| self.map[x].is_none()) else {
            self.found
                .push(self.map.iter().map(|y| y.expect("complete")).collect());
            return Ok(());
        };
        for y in 0..self.target.len() {
            if !self.used[y] && self.assign(x, y) {
                self.extend(x + 1)?;
                self.unassign(x);
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;

    #[test]
    fn meet_on_distributive_lattice_is_a_quantale() {
        let p = builders::powerset_lattice(2).unwrap();
        let table: Vec<Vec<Element>> = p
            .elements()
            .map(|x| p.elements().map(|y| p.meet(x, y)).collect())
            .collect();
        let q = build_quantale(p, &table).unwrap();
        assert!(q.is_frame());
    }

    #[test]
    fn meet_on_m3_is_not_join_distributive() {
        let m3 = builders::m3();
        let atoms = m3.atoms();
        let table: Vec<Vec<Element>> = m3
            .elements()
            .map(|x| m3.elements().map(|y| m3.meet(x, y)).collect())
            .collect();
        match build_quantale(m3, &table) {
            Err(Error::NotJoinDistributive { x, y, z }) => {
                assert!([x, y, z].iter().all(|e| atoms.contains(e)));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            frame_from(builders::m3()),
            Err(Error::NotDistributive { .. })
        ));
    }

    #[test]
    fn exponent_table_for_z12_validates() {
        let z = builders::zn(12).unwrap();
        let q = z.quantale().clone();
        let rebuilt = build_quantale(q.lattice().clone(), &q.table()).unwrap();
        assert_eq!(rebuilt, q);
    }

    #[test]
    fn bad_tables_are_rejected() {
        let c = builders::chain_lattice(3).unwrap();
        // every product is bottom: top is not the identity
        let zero = vec![vec![0; 3]; 3];
        assert_eq!(
            build_quantale(c.clone(), &zero),
            Err(Error::IdentityViolation { x: 1 })
        );
        let mut skew = Quantale::meet_frame(c.clone()).table();
        skew[0][1] = 1;
        assert_eq!(
            build_quantale(c.clone(), &skew),
            Err(Error::NotCommutative { x: 0, y: 1 })
        );
        assert!(matches!(
            build_quantale(c, &[vec![0; 3]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn non_associative_table() {
        // 4-chain 0 < a < b < 1; a*a = a, a*b = 0, b*b = a. Then
        // (a*b)*b = 0 but a*(b*b) = a*a = a.
        let c = builders::chain_lattice(4).unwrap();
        let mut t = Quantale::meet_frame(c.clone()).table();
        t[1][2] = 0;
        t[2][1] = 0;
        t[2][2] = 1;
        assert!(matches!(
            build_quantale(c, &t),
            Err(Error::NotAssociative { .. }) | Err(Error::NotJoinDistributive { .. })
        ));
    }

    #[test]
    fn annihilators() {
        let z = builders::zn(12).unwrap();
        let q = z.quantale();
        let l = q.lattice();
        assert_eq!(q.annihilator(l.bottom()), l.top());
        assert_eq!(q.annihilator(l.top()), l.bottom());
        assert_eq!(q.annihilator(z.ideal_of(3)), z.ideal_of(4));

        let p = builders::powerset_frame(3).unwrap();
        assert_eq!(p.annihilator(0b001), 0b110);
        assert!(p.lattice().elements().all(|x| p.is_regular(x)));
    }

    #[test]
    fn regularity_in_a_three_chain() {
        let c = builders::chain(3).unwrap();
        assert_eq!(c.annihilator(1), 0);
        assert_eq!(c.annihilator(0), 2);
        assert!(!c.is_regular(1));
        assert!(c.is_regular(0) && c.is_regular(2));
    }

    #[test]
    fn annihilator_is_antitone_and_extensive() {
        for q in [
            builders::zn(72).unwrap().quantale().clone(),
            builders::powerset_frame(3).unwrap(),
            builders::chain(5).unwrap(),
        ] {
            let l = q.lattice();
            for a in l.elements() {
                assert!(l.leq(a, q.annihilator(q.annihilator(a))));
                for b in l.above(a) {
                    assert!(l.leq(q.annihilator(b), q.annihilator(a)));
                }
            }
        }
    }

    #[test]
    fn frame_annihilator_is_pseudo_complement() {
        for q in [
            builders::chain(4).unwrap(),
            builders::powerset_frame(3).unwrap(),
        ] {
            let l = q.lattice();
            for a in l.elements() {
                assert_eq!(Some(q.annihilator(a)), l.pseudo_complement(a));
            }
        }
    }

    #[test]
    fn homs_from_two_chain() {
        let c2 = builders::chain(2).unwrap();
        let z = builders::zn(12).unwrap();
        let h = QuantaleHom::new(&c2, z.quantale(), vec![z.ideal_of(0), z.ideal_of(1)]).unwrap();
        assert!(h.is_quantale_hom());
        assert!(QuantaleHom::identity(z.quantale()).is_quantale_hom());
    }

    #[test]
    fn injective_homs_z6_into_z12() {
        let z6 = builders::zn(6).unwrap();
        let z12 = builders::zn(12).unwrap();
        let homs = find_injective_homs(z6.quantale(), z12.quantale(), 100_000).unwrap();
        assert!(!homs.is_empty());
        for map in homs {
            let h = QuantaleHom::new(z6.quantale(), z12.quantale(), map).unwrap();
            assert!(h.is_quantale_hom() && h.is_injective());
        }
    }

    #[test]
    fn hom_search_budget() {
        let p = builders::powerset_frame(2).unwrap();
        let q = builders::powerset_frame(4).unwrap();
        assert_eq!(
            find_injective_homs(&p, &q, 1),
            Err(Error::SearchBudgetExceeded { budget: 1 })
        );
    }
}
