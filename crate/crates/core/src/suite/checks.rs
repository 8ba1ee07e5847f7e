//! The registered claims.

use std::fmt;
use std::sync::OnceLock;

use crate::builders;
use crate::document::Built;
use crate::lattice::{Element, FiniteLattice};
use crate::mu;
use crate::quantale::{find_injective_homs, Quantale, QuantaleHom};

use super::{Counterexample, Instance, NamedElement};

/// Which instances a claim is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    Any,
    /// Lattices small enough for the exhaustive family check.
    AtMost16,
    /// Distributive lattices, taken with multiplication = meet.
    Frame,
    Modular,
    /// Instances carrying a quantale (their own, or the frame of a
    /// distributive lattice).
    Quantale,
    /// Ideal quantales of quotients of principal ideal domains.
    Exponent,
    /// Frames of open sets.
    Space,
    /// Frames of all subsets.
    Powerset,
}

impl Hypothesis {
    pub fn holds(self, i: &Instance) -> bool {
        match self {
            Hypothesis::Any => true,
            Hypothesis::AtMost16 => i.len() <= 16,
            Hypothesis::Frame => i.is_distributive(),
            Hypothesis::Modular => i.is_modular(),
            Hypothesis::Quantale => i.quantale().is_some(),
            Hypothesis::Exponent => matches!(i.built(), Built::Exponent(_)),
            Hypothesis::Space => matches!(i.built(), Built::Space { .. }),
            Hypothesis::Powerset => match i.built() {
                Built::Space { spec, .. } => spec.opens().len() == 1 << spec.points().len(),
                _ => false,
            },
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::Any => "any lattice",
            Hypothesis::AtMost16 => "at most 16 elements",
            Hypothesis::Frame => "frame",
            Hypothesis::Modular => "modular lattice",
            Hypothesis::Quantale => "quantale",
            Hypothesis::Exponent => "ideals of a PID quotient",
            Hypothesis::Space => "frame of opens",
            Hypothesis::Powerset => "powerset frame",
        })
    }
}

/// A failed claim: the elements involved, by role, and what went wrong.
#[derive(Debug, Clone)]
pub(crate) struct Failure {
    elements: Vec<(&'static str, Element)>,
    detail: String,
}

impl Failure {
    pub(crate) fn to_counterexample(&self, check: &str, inst: &Instance) -> Counterexample {
        let l = inst.lattice();
        Counterexample {
            check: check.to_string(),
            instance: inst.name().to_string(),
            document: inst.document().clone(),
            elements: self
                .elements
                .iter()
                .map(|&(role, index)| NamedElement {
                    role: role.to_string(),
                    index,
                    label: l.label(index).to_string(),
                })
                .collect(),
            detail: self.detail.clone(),
        }
    }
}

pub(crate) fn fail(elements: &[(&'static str, Element)], detail: impl Into<String>) -> Failure {
    Failure {
        elements: elements.to_vec(),
        detail: detail.into(),
    }
}

/// Elements (or tuples) examined, or the first failure.
type Verdict = Result<usize, Failure>;

pub(crate) struct Outcome {
    pub(crate) elements: usize,
    pub(crate) failure: Option<Failure>,
}

pub struct Check {
    pub name: &'static str,
    pub claim: &'static str,
    pub hypothesis: Hypothesis,
    pub(crate) run: fn(&Instance) -> Outcome,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check")
            .field("name", &self.name)
            .field("hypothesis", &self.hypothesis)
            .finish()
    }
}

macro_rules! check {
    ($name:literal, $hyp:ident, $claim:literal, $f:ident) => {
        Check {
            name: $name,
            claim: $claim,
            hypothesis: Hypothesis::$hyp,
            run: |i| match $f(i) {
                Ok(elements) => Outcome {
                    elements,
                    failure: None,
                },
                Err(f) => Outcome {
                    elements: 0,
                    failure: Some(f),
                },
            },
        }
    };
}

static CHECKS: &[Check] = &[
    check!("lattice-laws", Any,
        "meets and joins are greatest lower and least upper bounds, intervals are closed under them, and distributive lattices are modular",
        lattice_laws),
    check!("essential-implies-mu", Any,
        "every essential element is a mu-element",
        essential_implies_mu),
    check!("basic-mu-elements", Any,
        "bottom, top and every atom are mu-elements",
        basic_mu_elements),
    check!("pairwise-criterion", AtMost16,
        "the pairwise criterion agrees with the condition over all families of up to four elements",
        pairwise_criterion),
    check!("meet-of-mu", Any,
        "the meet of two mu-elements is a mu-element",
        meet_of_mu),
    check!("mu-down-transfer", Any,
        "if n <=_mu n'↓ and n' is a mu-element then n is a mu-element",
        mu_down_transfer),
    check!("mu-down-meets", Any,
        "a1 <=_mu b1↓ and a2 <=_mu b2↓ imply a1^a2 <=_mu (b1^b2)↓",
        mu_down_meets),
    check!("mu-down-restriction", Any,
        "if a is a mu-element then a^b <=_mu b↓ for every b",
        mu_down_restriction),
    check!("pseudocomplement-join-up", Frame,
        "if b is the pseudo-complement of a and c is a mu-element then b v c <=_mu b↑",
        pseudocomplement_join_up),
    check!("up-interval", Frame,
        "a <=_mu c↑ and c <= d <= a imply a <=_mu d↑",
        up_interval),
    check!("injective-hom-contraction", Quantale,
        "an injective quantale homomorphism reflects mu-elements on its image",
        injective_hom_contraction),
    check!("kappa-regularity", Frame,
        "x -> x v a preserves essential elements iff a is regular iff it preserves essential and mu-elements",
        kappa_regularity),
    check!("socle-bound", Any,
        "the meet of all mu-elements lies below the socle, and the socle is top when every mu-element is 0 or 1",
        socle_bound),
    check!("mu-complement-restriction", Frame,
        "if b is a mu-complement of a and a <= n then b^n is a mu-complement of a in n↓",
        mu_complement_restriction),
    check!("mu-complement-existence", Modular,
        "every element has a mu-complement, every disjoint pair admits a mu-complement containing the other element, pseudo-complements are mu-complements, and the lattice is complemented when every mu-element is 0 or 1",
        mu_complement_existence),
    check!("mu-closed-pseudocomplement", Modular,
        "every mu-closed element is maximal disjoint from some element, and a pseudo-complement when distributive",
        mu_closed_pseudocomplement),
    check!("mu-closed-up", Frame,
        "if a != 0 is mu-closed, a <= b and b != 0 is a mu-element then b <=_mu a↑",
        mu_closed_up),
    check!("modular-characterization", Modular,
        "x is a mu-element iff x is essential or irreducible",
        modular_characterization),
    check!("mu-closed-characterization", Modular,
        "for x != 1, x is mu-closed iff x is essentially closed and not irreducible; 1 is both",
        mu_closed_characterization),
    check!("mu-closed-transitive", Modular,
        "if a is mu-closed in b↓ and b is mu-closed then a is mu-closed",
        mu_closed_transitive),
    check!("independent-join", Modular,
        "for an independent set S, the join of S is a mu-element iff S is maximal independent or S is a single irreducible element",
        independent_join),
    check!("exponent-fastpath", Exponent,
        "the exponent-vector criterion agrees with brute force on essential and mu-elements",
        exponent_fastpath),
    check!("topology-fastpath", Space,
        "an open is essential iff dense, and a mu-element iff dense or irreducible",
        topology_fastpath),
    check!("powerset-mu-set", Powerset,
        "the mu-elements of a powerset are exactly the empty set, the whole set and the singletons",
        powerset_mu_set),
];

pub(crate) fn all() -> &'static [Check] {
    CHECKS
}

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.name).collect()
}

pub fn find_check(name: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.name == name)
}

fn lattice_laws(i: &Instance) -> Verdict {
    let l = i.lattice();
    let mut n = 0;
    for x in l.elements() {
        for y in l.elements() {
            let (m, j) = (l.meet(x, y), l.join(x, y));
            if !(l.leq(m, x) && l.leq(m, y) && l.leq(x, j) && l.leq(y, j)) {
                return Err(fail(&[("x", x), ("y", y)], "meet or join is not a bound"));
            }
            for z in l.elements() {
                if l.leq(z, x) && l.leq(z, y) && !l.leq(z, m) {
                    return Err(fail(
                        &[("x", x), ("y", y), ("z", z)],
                        "meet is not greatest",
                    ));
                }
                if l.leq(x, z) && l.leq(y, z) && !l.leq(j, z) {
                    return Err(fail(&[("x", x), ("y", y), ("z", z)], "join is not least"));
                }
            }
            n += 1;
        }
    }
    for b in l.elements() {
        for view in [l.down_view(b), l.up_view(b)] {
            for &x in view.elements() {
                for &y in view.elements() {
                    if !view.contains(view.meet(x, y)) || !view.contains(view.join(x, y)) {
                        return Err(fail(&[("b", b), ("x", x), ("y", y)], "interval not closed"));
                    }
                }
            }
        }
    }
    if i.is_distributive() && !i.is_modular() {
        return Err(fail(&[], "distributive but not modular"));
    }
    Ok(n)
}

fn essential_implies_mu(i: &Instance) -> Verdict {
    let l = i.lattice();
    for x in l.elements() {
        if i.essential(x) && !i.mu(x) {
            return Err(fail(&[("x", x)], "essential but not a mu-element"));
        }
    }
    Ok(l.len())
}

fn basic_mu_elements(i: &Instance) -> Verdict {
    let l = i.lattice();
    let mut special = vec![l.bottom(), l.top()];
    special.extend(l.atoms());
    for &x in &special {
        if !i.mu(x) {
            return Err(fail(
                &[("x", x)],
                "bottom, top or atom that is not a mu-element",
            ));
        }
    }
    Ok(special.len())
}

fn pairwise_criterion(i: &Instance) -> Verdict {
    let l = i.lattice();
    for x in l.elements() {
        if i.mu(x) != mu::is_mu_by_families(l, x, 4) {
            return Err(fail(&[("x", x)], "pairwise and family conditions disagree"));
        }
    }
    Ok(l.len())
}

fn meet_of_mu(i: &Instance) -> Verdict {
    let mus = i.mu_elements();
    let l = i.lattice();
    let mut n = 0;
    for &a in &mus {
        for &b in &mus {
            if !i.mu(l.meet(a, b)) {
                return Err(fail(
                    &[("a", a), ("b", b)],
                    "meet of mu-elements is not a mu-element",
                ));
            }
            n += 1;
        }
    }
    Ok(n)
}

fn mu_down_transfer(i: &Instance) -> Verdict {
    let l = i.lattice();
    let mut n = 0;
    for top in l.elements().filter(|&t| i.mu(t)) {
        for x in l.below(top) {
            if i.mu_down(top, x) && !i.mu(x) {
                return Err(fail(
                    &[("n", x), ("n'", top)],
                    "n <=_mu n'↓ and n' mu, but n not mu",
                ));
            }
            n += 1;
        }
    }
    Ok(n)
}

fn mu_down_pairs(i: &Instance) -> Vec<(Element, Element)> {
    let l = i.lattice();
    l.elements()
        .flat_map(|b| l.below(b).map(move |a| (b, a)))
        .filter(|&(b, a)| i.mu_down(b, a))
        .collect()
}

fn mu_down_meets(i: &Instance) -> Verdict {
    let l = i.lattice();
    let pairs = mu_down_pairs(i);
    for &(b1, a1) in &pairs {
        for &(b2, a2) in &pairs {
            if !i.mu_down(l.meet(b1, b2), l.meet(a1, a2)) {
                return Err(fail(
                    &[("a1", a1), ("b1", b1), ("a2", a2), ("b2", b2)],
                    "a1^a2 is not a mu-element below b1^b2",
                ));
            }
        }
    }
    Ok(pairs.len() * pairs.len())
}

fn mu_down_restriction(i: &Instance) -> Verdict {
    let l = i.lattice();
    let mut n = 0;
    for a in i.mu_elements() {
        for b in l.elements() {
            if !i.mu_down(b, l.meet(a, b)) {
                return Err(fail(
                    &[("a", a), ("b", b)],
                    "a^b is not a mu-element below b",
                ));
            }
            n += 1;
        }
    }
    Ok(n)
}

fn frame_of(i: &Instance) -> &Quantale {
    i.frame().expect("hypothesis guarantees a frame")
}

fn pseudocomplement_join_up(i: &Instance) -> Verdict {
    let l = frame_of(i).lattice();
    let mut n = 0;
    for a in l.elements() {
        let b = l
            .pseudo_complement(a)
            .expect("frames are pseudo-complemented");
        for c in i.mu_elements() {
            if !i.mu_up(b, l.join(b, c)) {
                return Err(fail(
                    &[("a", a), ("b", b), ("c", c)],
                    "b v c is not a mu-element above b",
                ));
            }
            n += 1;
        }
    }
    Ok(n)
}

fn up_interval(i: &Instance) -> Verdict {
    let l = frame_of(i).lattice();
    let mut n = 0;
    for c in l.elements() {
        for a in l.above(c).filter(|&a| i.mu_up(c, a)) {
            for d in l.above(c).filter(|&d| l.leq(d, a)) {
                if !i.mu_up(d, a) {
                    return Err(fail(
                        &[("a", a), ("c", c), ("d", d)],
                        "a is not a mu-element above d",
                    ));
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

const HOM_SEARCH_BUDGET: usize = 1_000_000;
const HOM_TARGET_LIMIT: usize = 16;
const DIAGONAL_LIMIT: usize = 8;

fn small_sources() -> &'static [(&'static str, Quantale)] {
    static SOURCES: OnceLock<Vec<(&'static str, Quantale)>> = OnceLock::new();
    SOURCES.get_or_init(|| {
        vec![
            ("2-chain", builders::chain(2).expect("small chain")),
            ("3-chain", builders::chain(3).expect("small chain")),
            (
                "Z4",
                builders::zn(4).expect("small modulus").into_quantale(),
            ),
            (
                "Z6",
                builders::zn(6).expect("small modulus").into_quantale(),
            ),
            (
                "Z8",
                builders::zn(8).expect("small modulus").into_quantale(),
            ),
            ("P(2)", builders::powerset_frame(2).expect("small powerset")),
        ]
    })
}

fn injective_hom_contraction(i: &Instance) -> Verdict {
    let q = i.quantale().expect("hypothesis guarantees a quantale");
    let mut n = 0;
    if q.len() <= HOM_TARGET_LIMIT {
        for (name, source) in small_sources() {
            let Ok(homs) = find_injective_homs(source, q, HOM_SEARCH_BUDGET) else {
                continue;
            };
            for map in homs {
                for x in source.lattice().elements() {
                    let y = map[x];
                    if i.mu(y) && !mu::is_mu(source.lattice(), x) {
                        return Err(fail(
                            &[("y", y)],
                            format!(
                                "mu-element whose preimage {} in {name} is not a mu-element",
                                source.lattice().label(x)
                            ),
                        ));
                    }
                    n += 1;
                }
            }
        }
    }
    if q.len() <= DIAGONAL_LIMIT {
        let square = q.product(q).expect("small product");
        let size = q.len();
        let map: Vec<Element> = (0..size).map(|x| x * size + x).collect();
        let hom = QuantaleHom::new(q, &square, map).expect("indices in range");
        if !hom.is_quantale_hom() || !hom.is_injective() {
            return Err(fail(
                &[],
                "diagonal is not an injective quantale homomorphism",
            ));
        }
        for x in q.lattice().elements() {
            if mu::is_mu(square.lattice(), hom.apply(x)) && !i.mu(x) {
                return Err(fail(
                    &[("x", x)],
                    "diagonal image is a mu-element but x is not",
                ));
            }
            n += 1;
        }
    }
    Ok(n)
}

fn kappa_regularity(i: &Instance) -> Verdict {
    let f = frame_of(i);
    for a in f.lattice().elements() {
        let k = mu::kappa(f, a).expect("frame");
        let essential = k.preserves_essential();
        let regular = f.is_regular(a);
        let both = essential && k.preserves_mu();
        if essential != regular || regular != both {
            return Err(fail(
                &[("a", a)],
                format!(
                    "preserves essential: {essential}, regular: {regular}, preserves both: {both}"
                ),
            ));
        }
    }
    Ok(f.len())
}

fn only_trivial_mu(i: &Instance) -> bool {
    let l = i.lattice();
    i.mu_elements()
        .iter()
        .all(|&x| x == l.bottom() || x == l.top())
}

fn socle_bound(i: &Instance) -> Verdict {
    let l = i.lattice();
    let soc = mu::socle(l);
    let m = l.meet_all(i.mu_elements());
    if !l.leq(m, soc) {
        return Err(fail(
            &[("meet", m), ("socle", soc)],
            "meet of mu-elements is not below the socle",
        ));
    }
    if only_trivial_mu(i) && soc != l.top() {
        return Err(fail(
            &[("socle", soc)],
            "no nontrivial mu-elements but the socle is not top",
        ));
    }
    Ok(l.len())
}

fn is_mu_complement(i: &Instance, a: Element, b: Element) -> bool {
    let l = i.lattice();
    l.meet(a, b) == l.bottom() && i.mu(l.join(a, b))
}

fn mu_complement_restriction(i: &Instance) -> Verdict {
    let l = i.lattice();
    let mut n = 0;
    for a in l.elements() {
        let complements: Vec<Element> = l
            .elements()
            .filter(|&b| is_mu_complement(i, a, b))
            .collect();
        for top in l.above(a) {
            for &b in &complements {
                let c = l.meet(b, top);
                if l.meet(a, c) != l.bottom() || !i.mu_down(top, l.join(a, c)) {
                    return Err(fail(
                        &[("a", a), ("b", b), ("n", top)],
                        "b^n is not a mu-complement of a below n",
                    ));
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

fn mu_complement_existence(i: &Instance) -> Verdict {
    let l = i.lattice();
    let trivial = only_trivial_mu(i);
    let mut n = 0;
    for y in l.elements() {
        if !l.elements().any(|x| is_mu_complement(i, y, x)) {
            return Err(fail(&[("y", y)], "no mu-complement"));
        }
        for x in l.elements().filter(|&x| l.meet(x, y) == l.bottom()) {
            match mu::complement::containing_unchecked(l, x, y) {
                Ok(z) if l.leq(x, z) && is_mu_complement(i, y, z) => {}
                _ => {
                    return Err(fail(
                        &[("x", x), ("y", y)],
                        "no mu-complement of y contains x",
                    ));
                }
            }
            n += 1;
        }
        if let Some(p) = l.pseudo_complement(y) {
            if !is_mu_complement(i, y, p) {
                return Err(fail(
                    &[("y", y), ("p", p)],
                    "pseudo-complement that is not a mu-complement",
                ));
            }
        }
        if trivial && l.complements_of(y).is_empty() {
            return Err(fail(
                &[("y", y)],
                "no nontrivial mu-elements but y has no complement",
            ));
        }
    }
    Ok(n)
}

fn mu_closed_pseudocomplement(i: &Instance) -> Verdict {
    let l = i.lattice();
    let bottom = l.bottom();
    for x in l.elements().filter(|&x| i.mu_closed(x)) {
        let maximal_disjoint = |y: Element| {
            l.meet(x, y) == bottom && !l.above(x).any(|z| z != x && l.meet(z, y) == bottom)
        };
        if !l.elements().any(maximal_disjoint) {
            return Err(fail(
                &[("x", x)],
                "mu-closed but not maximal disjoint from any element",
            ));
        }
        if i.is_distributive() && !l.elements().any(|y| l.pseudo_complement(y) == Some(x)) {
            return Err(fail(&[("x", x)], "mu-closed but not a pseudo-complement"));
        }
    }
    Ok(l.len())
}

fn mu_closed_up(i: &Instance) -> Verdict {
    let l = frame_of(i).lattice();
    let mut n = 0;
    for a in l.elements().filter(|&a| a != l.bottom() && i.mu_closed(a)) {
        for b in l.above(a).filter(|&b| i.mu(b)) {
            if !i.mu_up(a, b) {
                return Err(fail(&[("a", a), ("b", b)], "b is not a mu-element above a"));
            }
            n += 1;
        }
    }
    Ok(n)
}

fn modular_characterization(i: &Instance) -> Verdict {
    let l = i.lattice();
    for x in l.elements() {
        if i.mu(x) != (i.essential(x) || i.irreducible(x)) {
            return Err(fail(
                &[("x", x)],
                format!(
                    "mu: {}, essential: {}, irreducible: {}",
                    i.mu(x),
                    i.essential(x),
                    i.irreducible(x)
                ),
            ));
        }
    }
    Ok(l.len())
}

fn mu_closed_characterization(i: &Instance) -> Verdict {
    let l = i.lattice();
    for x in l.elements() {
        let ok = if x == l.top() {
            i.mu_closed(x) && i.essentially_closed(x)
        } else {
            i.mu_closed(x) == (i.essentially_closed(x) && !i.irreducible(x))
        };
        if !ok {
            return Err(fail(
                &[("x", x)],
                format!(
                    "mu-closed: {}, essentially closed: {}, irreducible: {}",
                    i.mu_closed(x),
                    i.essentially_closed(x),
                    i.irreducible(x)
                ),
            ));
        }
    }
    Ok(l.len())
}

fn mu_closed_transitive(i: &Instance) -> Verdict {
    let l = i.lattice();
    let mut n = 0;
    for b in l.elements().filter(|&b| i.mu_closed(b)) {
        for a in l.below(b) {
            let closed_below_b = l
                .above(a)
                .filter(|&c| c != a && l.leq(c, b))
                .all(|c| !i.mu_down(c, a));
            if closed_below_b && !i.mu_closed(a) {
                return Err(fail(
                    &[("a", a), ("b", b)],
                    "a is mu-closed below b but not in the lattice",
                ));
            }
            n += 1;
        }
    }
    Ok(n)
}

fn is_independent(l: &FiniteLattice, set: &[Element]) -> bool {
    set.iter().enumerate().all(|(k, &a)| {
        let others = l.join_all(
            set.iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &b)| b),
        );
        l.meet(a, others) == l.bottom()
    })
}

/// Nonempty independent sets of nonzero elements, as ascending lists.
fn independent_sets(l: &FiniteLattice) -> Vec<Vec<Element>> {
    fn extend(
        l: &FiniteLattice,
        start: Element,
        current: &mut Vec<Element>,
        out: &mut Vec<Vec<Element>>,
    ) {
        for x in start..l.len() {
            if x == l.bottom() {
                continue;
            }
            current.push(x);
            if is_independent(l, current) {
                out.push(current.clone());
                extend(l, x + 1, current, out);
            }
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(l, 0, &mut Vec::new(), &mut out);
    out
}

fn independent_join(i: &Instance) -> Verdict {
    let l = i.lattice();
    let sets = independent_sets(l);
    for set in &sets {
        let maximal = !l.elements().any(|z| {
            z != l.bottom() && !set.contains(&z) && {
                let mut bigger = set.clone();
                bigger.push(z);
                is_independent(l, &bigger)
            }
        });
        let join = l.join_all(set.iter().copied());
        let expected = maximal || (set.len() == 1 && i.irreducible(set[0]));
        if i.mu(join) != expected {
            return Err(fail(
                &[("join", join), ("first", set[0])],
                format!(
                    "independent set of {} elements (maximal: {maximal}) has join with mu = {}",
                    set.len(),
                    i.mu(join)
                ),
            ));
        }
    }
    Ok(sets.len())
}

fn fast_path_agrees(i: &Instance) -> Verdict {
    let l = i.lattice();
    for x in l.elements() {
        let fast = i
            .built()
            .fast_verdict(x)
            .expect("hypothesis guarantees a fast path");
        if fast.essential != i.essential(x) || fast.mu != i.mu(x) {
            return Err(fail(
                &[("x", x)],
                format!(
                    "fast path wrong: says essential {}, mu {}; brute force says essential {}, mu {}",
                    fast.essential,
                    fast.mu,
                    i.essential(x),
                    i.mu(x)
                ),
            ));
        }
    }
    Ok(l.len())
}

fn exponent_fastpath(i: &Instance) -> Verdict {
    fast_path_agrees(i)
}

fn topology_fastpath(i: &Instance) -> Verdict {
    fast_path_agrees(i)
}

fn powerset_mu_set(i: &Instance) -> Verdict {
    let Built::Space { spec, opens, .. } = i.built() else {
        unreachable!("hypothesis guarantees a powerset");
    };
    for (x, &u) in opens.iter().enumerate() {
        let expected = u.count_ones() <= 1 || u == spec.full();
        if i.mu(x) != expected {
            return Err(fail(
                &[("x", x)],
                format!("mu = {}, expected {expected}", i.mu(x)),
            ));
        }
    }
    Ok(opens.len())
}
