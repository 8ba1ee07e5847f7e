//! Finite bounded lattices with precomputed meet and join tables.
//!
//! Elements are plain indices `0..n`. Labels are carried for display only;
//! every operation is defined on indices.

use std::fmt;

use crate::error::{Error, Result};
use crate::relation::{self, Relation};

pub type Element = usize;

/// A finite lattice given by its order relation, with derived meet and join
/// tables.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    // row x holds every y with x <= y
    up: Relation,
    // row x holds every y with y <= x
    down: Relation,
    meet: Vec<u16>,
    join: Vec<u16>,
    bottom: Element,
    top: Element,
}

/// Validates `leq` and derives the lattice operations.
///
/// Fails with [`Error::NotAPartialOrder`] if `leq` is not reflexive,
/// antisymmetric and transitive, and with [`Error::NotALattice`] naming the
/// first pair (in index order) that lacks a unique meet or join.
pub fn build_lattice(labels: Vec<String>, leq: &Relation) -> Result<FiniteLattice> {
    let n = leq.len();
    if n == 0 {
        return Err(Error::EmptyLattice);
    }
    if labels.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: labels.len(),
        });
    }
    Relation::element_count_fits(n)?;
    leq.check_partial_order()?;
    let up = leq.clone();
    let down = leq.transpose();
    let (meet, join) = match (bound_table(&down), bound_table(&up)) {
        (Ok(meet), Ok(join)) => (meet, join),
        (meet, join) => {
            let failures = [
                meet.err().map(|p| (p, "meet")),
                join.err().map(|p| (p, "join")),
            ];
            let ((x, y), bound) = failures
                .into_iter()
                .flatten()
                .min()
                .expect("one side failed");
            return Err(Error::NotALattice { x, y, bound });
        }
    };
    let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x] as usize);
    let top = (0..n).fold(0, |acc, x| join[acc * n + x] as usize);
    Ok(FiniteLattice {
        labels,
        up,
        down,
        meet,
        join,
        bottom,
        top,
    })
}

/// Greatest common element of `rows[x] & rows[y]` for every pair, where
/// `rows` is either the down-set relation (meets) or the up-set relation
/// (joins). Fails with the first pair that has no such element.
fn bound_table(rows: &Relation) -> std::result::Result<Vec<u16>, (Element, Element)> {
    let n = rows.len();
    // an element of a bound set whose own set is largest is the only
    // candidate for the extremal bound
    let size: Vec<usize> = (0..n).map(|x| relation::count(rows.row(x))).collect();
    let mut table = vec![0u16; n * n];
    let mut common = vec![0u64; relation::words_for(n)];
    for x in 0..n {
        for y in x..n {
            for ((c, a), b) in common.iter_mut().zip(rows.row(x)).zip(rows.row(y)) {
                *c = a & b;
            }
            let candidate = relation::ones(&common).max_by_key(|&z| size[z]);
            let Some(z) = candidate else {
                return Err((x, y));
            };
            if size[z] != relation::count(&common) {
                return Err((x, y));
            }
            table[x * n + y] = z as u16;
            table[y * n + x] = z as u16;
        }
    }
    Ok(table)
}

impl FiniteLattice {
    /// Assembles a lattice from tables already known to be correct.
    pub(crate) fn from_tables(
        labels: Vec<String>,
        leq: Relation,
        meet: Vec<u16>,
        join: Vec<u16>,
        bottom: Element,
        top: Element,
    ) -> Self {
        let n = labels.len();
        debug_assert_eq!(leq.len(), n);
        debug_assert_eq!(meet.len(), n * n);
        debug_assert_eq!(join.len(), n * n);
        let down = leq.transpose();
        FiniteLattice {
            labels,
            up: leq,
            down,
            meet,
            join,
            bottom,
            top,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: a lattice has at least one element.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.len() == 1
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Element) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<Element> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_index(&self, x: Element) -> Result<()> {
        if x >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: x,
                len: self.len(),
            });
        }
        Ok(())
    }

    pub fn relation(&self) -> &Relation {
        &self.up
    }

    #[inline]
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.up.contains(x, y)
    }

    #[inline]
    pub fn lt(&self, x: Element, y: Element) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn meet(&self, x: Element, y: Element) -> Element {
        self.meet[x * self.len() + y] as Element
    }

    #[inline]
    pub fn join(&self, x: Element, y: Element) -> Element {
        self.join[x * self.len() + y] as Element
    }

    pub fn bottom(&self) -> Element {
        self.bottom
    }

    pub fn top(&self) -> Element {
        self.top
    }

    /// Meet of an arbitrary subset; the empty meet is top.
    pub fn meet_all(&self, xs: impl IntoIterator<Item = Element>) -> Element {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of an arbitrary subset; the empty join is bottom.
    pub fn join_all(&self, xs: impl IntoIterator<Item = Element>) -> Element {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn below(&self, x: Element) -> impl Iterator<Item = Element> + '_ {
        relation::ones(self.down.row(x))
    }

    pub fn above(&self, x: Element) -> impl Iterator<Item = Element> + '_ {
        relation::ones(self.up.row(x))
    }

    /// Whether `y` covers `x`: `x < y` with nothing strictly between.
    pub fn covers(&self, x: Element, y: Element) -> bool {
        self.lt(x, y) && self.above(x).all(|z| z == x || z == y || !self.leq(z, y))
    }

    /// Every cover pair `(lower, upper)`, sorted by lower then upper index.
    pub fn cover_pairs(&self) -> Vec<(Element, Element)> {
        self.elements()
            .flat_map(|x| self.upper_covers(x).into_iter().map(move |y| (x, y)))
            .collect()
    }

    pub fn upper_covers(&self, x: Element) -> Vec<Element> {
        self.above(x).filter(|&y| self.covers(x, y)).collect()
    }

    pub fn lower_covers(&self, x: Element) -> Vec<Element> {
        self.below(x).filter(|&y| self.covers(y, x)).collect()
    }

    /// Length of the longest chain from bottom to each element.
    pub fn ranks(&self) -> Vec<usize> {
        let mut order: Vec<Element> = self.elements().collect();
        order.sort_by_key(|&x| relation::count(self.down.row(x)));
        let mut rank = vec![0; self.len()];
        for &x in &order {
            rank[x] = self
                .lower_covers(x)
                .into_iter()
                .map(|y| rank[y] + 1)
                .max()
                .unwrap_or(0);
        }
        rank
    }

    pub fn atoms(&self) -> Vec<Element> {
        self.upper_covers(self.bottom)
    }

    /// Proper elements covered only by top.
    pub fn maximal_elements(&self) -> Vec<Element> {
        self.lower_covers(self.top)
    }

    pub fn is_local(&self) -> bool {
        self.maximal_elements().len() == 1
    }

    pub fn complements_of(&self, x: Element) -> Vec<Element> {
        self.elements()
            .filter(|&y| self.meet(x, y) == self.bottom && self.join(x, y) == self.top)
            .collect()
    }

    /// The greatest `y` with `x ^ y = 0`, or `None` when the disjoint
    /// elements have several maximal members.
    pub fn pseudo_complement(&self, x: Element) -> Option<Element> {
        let disjoint: Vec<Element> = self
            .elements()
            .filter(|&y| self.meet(x, y) == self.bottom)
            .collect();
        let candidate = self.join_all(disjoint.iter().copied());
        disjoint.contains(&candidate).then_some(candidate)
    }

    /// A triple `(a, b, x)` with `a <= b` and `a v (x ^ b) != (a v x) ^ b`.
    pub fn modularity_witness(&self) -> Option<(Element, Element, Element)> {
        for a in self.elements() {
            for b in self.above(a) {
                for x in self.elements() {
                    if self.join(a, self.meet(x, b)) != self.meet(self.join(a, x), b) {
                        return Some((a, b, x));
                    }
                }
            }
        }
        None
    }

    pub fn is_modular(&self) -> bool {
        self.modularity_witness().is_none()
    }

    /// A triple `(x, y, z)` with `x ^ (y v z) != (x ^ y) v (x ^ z)`.
    pub fn distributivity_witness(&self) -> Option<(Element, Element, Element)> {
        for x in self.elements() {
            for y in self.elements() {
                for z in self.elements() {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    pub fn down_view(&self, b: Element) -> SublatticeView<'_> {
        SublatticeView {
            parent: self,
            kind: ViewKind::Down,
            anchor: b,
            elements: self.below(b).collect(),
        }
    }

    pub fn up_view(&self, b: Element) -> SublatticeView<'_> {
        SublatticeView {
            parent: self,
            kind: ViewKind::Up,
            anchor: b,
            elements: self.above(b).collect(),
        }
    }

    /// The whole lattice as a view (the down-set of top).
    pub fn whole(&self) -> SublatticeView<'_> {
        self.down_view(self.top)
    }

    /// Cartesian product with the componentwise order. Element `(i, j)` has
    /// index `i * other.len() + j`.
    pub fn product(&self, other: &FiniteLattice) -> Result<FiniteLattice> {
        let (n1, n2) = (self.len(), other.len());
        let n = n1 * n2;
        Relation::element_count_fits(n)?;
        let split = |x: Element| (x / n2, x % n2);
        let labels = (0..n)
            .map(|x| {
                let (i, j) = split(x);
                format!("({},{})", self.label(i), other.label(j))
            })
            .collect();
        let leq = Relation::from_fn(n, |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            self.leq(a, c) && other.leq(b, d)
        });
        let mut meet = vec![0u16; n * n];
        let mut join = vec![0u16; n * n];
        for x in 0..n {
            for y in 0..n {
                let ((a, b), (c, d)) = (split(x), split(y));
                meet[x * n + y] = (self.meet(a, c) * n2 + other.meet(b, d)) as u16;
                join[x * n + y] = (self.join(a, c) * n2 + other.join(b, d)) as u16;
            }
        }
        Ok(FiniteLattice::from_tables(
            labels,
            leq,
            meet,
            join,
            self.bottom * n2 + other.bottom,
            self.top * n2 + other.top,
        ))
    }
}

impl fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .cover_pairs()
            .into_iter()
            .map(|(x, y)| format!("{}<{}", self.label(x), self.label(y)))
            .collect();
        f.debug_struct("FiniteLattice")
            .field("labels", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViewKind {
    Down,
    Up,
}

/// The interval below (or above) an anchor element, with the parent's
/// operations. Both kinds are closed under the parent's meet and join.
#[derive(Clone)]
pub struct SublatticeView<'a> {
    parent: &'a FiniteLattice,
    kind: ViewKind,
    anchor: Element,
    elements: Vec<Element>,
}

impl<'a> SublatticeView<'a> {
    pub fn parent(&self) -> &'a FiniteLattice {
        self.parent
    }

    pub fn kind(&self) -> ViewKind {
        self.kind
    }

    pub fn anchor(&self) -> Element {
        self.anchor
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The view's zero: parent bottom for a down-set, the anchor for an
    /// up-set.
    pub fn bottom(&self) -> Element {
        match self.kind {
            ViewKind::Down => self.parent.bottom(),
            ViewKind::Up => self.anchor,
        }
    }

    pub fn top(&self) -> Element {
        match self.kind {
            ViewKind::Down => self.anchor,
            ViewKind::Up => self.parent.top(),
        }
    }

    pub fn contains(&self, x: Element) -> bool {
        match self.kind {
            ViewKind::Down => self.parent.leq(x, self.anchor),
            ViewKind::Up => self.parent.leq(self.anchor, x),
        }
    }

    #[inline]
    pub fn meet(&self, x: Element, y: Element) -> Element {
        self.parent.meet(x, y)
    }

    #[inline]
    pub fn join(&self, x: Element, y: Element) -> Element {
        self.parent.join(x, y)
    }

    /// Nonzero elements of the view.
    pub fn nonzero(&self) -> impl Iterator<Item = Element> + '_ {
        let zero = self.bottom();
        self.elements.iter().copied().filter(move |&x| x != zero)
    }
}

impl fmt::Debug for SublatticeView<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self
            .elements
            .iter()
            .map(|&x| self.parent.label(x))
            .collect();
        f.debug_struct("SublatticeView")
            .field("kind", &self.kind)
            .field("anchor", &self.parent.label(self.anchor))
            .field("elements", &labels)
            .finish()
    }
}

/// An element map between two lattices.
#[derive(Debug, Clone)]
pub struct LatticeHom<'a> {
    source: &'a FiniteLattice,
    target: &'a FiniteLattice,
    map: Vec<Element>,
}

impl<'a> LatticeHom<'a> {
    pub fn new(
        source: &'a FiniteLattice,
        target: &'a FiniteLattice,
        map: Vec<Element>,
    ) -> Result<Self> {
        if map.len() != source.len() {
            return Err(Error::DimensionMismatch {
                expected: source.len(),
                found: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.len()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: target.len(),
            });
        }
        Ok(LatticeHom {
            source,
            target,
            map,
        })
    }

    pub fn identity(l: &'a FiniteLattice) -> Self {
        LatticeHom {
            source: l,
            target: l,
            map: l.elements().collect(),
        }
    }

    pub fn source(&self) -> &'a FiniteLattice {
        self.source
    }

    pub fn target(&self) -> &'a FiniteLattice {
        self.target
    }

    pub fn map(&self) -> &[Element] {
        &self.map
    }

    pub fn apply(&self, x: Element) -> Element {
        self.map[x]
    }

    /// Preserves bottom and every binary join (hence all finite joins).
    pub fn is_lattice_hom(&self) -> bool {
        let (s, t) = (self.source, self.target);
        self.apply(s.bottom()) == t.bottom()
            && s.elements().all(|x| {
                s.elements()
                    .all(|y| self.apply(s.join(x, y)) == t.join(self.apply(x), self.apply(y)))
            })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        self.map
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }
}
