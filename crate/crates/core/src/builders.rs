//! Constructors for the standard families: powersets, chains, ideal
//! quantales of principal ideal quotients, and finite topologies.

use crate::error::{Error, OrderViolation, Result};
use crate::lattice::{build_lattice, Element, FiniteLattice};
use crate::quantale::Quantale;
use crate::relation::Relation;

pub const MAX_POWERSET_POINTS: usize = 12;
pub const MAX_CHAIN: usize = 4096;
pub const MAX_IDEALS: usize = 4096;
pub const MAX_PREORDER_POINTS: usize = 5;
pub const MAX_TOPOLOGY_POINTS: usize = 16;

fn guard(requested: usize, limit: usize) -> Result<()> {
    if requested > limit {
        return Err(Error::SizeLimitExceeded { requested, limit });
    }
    Ok(())
}

/// Display name of a subset of `points` given as a bit mask.
pub fn subset_label(mask: u64, points: &[String]) -> String {
    let full = if points.len() == 64 {
        u64::MAX
    } else {
        (1u64 << points.len()) - 1
    };
    if mask == 0 {
        "∅".to_string()
    } else if mask == full {
        "X".to_string()
    } else {
        let names: Vec<&str> = (0..points.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| points[i].as_str())
            .collect();
        format!("{{{}}}", names.join(","))
    }
}

fn numbered_points(k: usize) -> Vec<String> {
    (1..=k).map(|i| i.to_string()).collect()
}

/// Boolean lattice of subsets of `{1..k}`; element index is the bit mask.
pub fn powerset_lattice(k: usize) -> Result<FiniteLattice> {
    if k == 0 {
        return Err(Error::SizeLimitExceeded {
            requested: 0,
            limit: 0,
        });
    }
    guard(k, MAX_POWERSET_POINTS)?;
    let n = 1usize << k;
    let points = numbered_points(k);
    let labels = (0..n as u64).map(|m| subset_label(m, &points)).collect();
    let leq = Relation::from_fn(n, |x, y| x & !y == 0);
    let mut meet = vec![0u16; n * n];
    let mut join = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            meet[x * n + y] = (x & y) as u16;
            join[x * n + y] = (x | y) as u16;
        }
    }
    Ok(FiniteLattice::from_tables(
        labels,
        leq,
        meet,
        join,
        0,
        n - 1,
    ))
}

pub fn powerset_frame(k: usize) -> Result<Quantale> {
    Ok(Quantale::meet_frame(powerset_lattice(k)?))
}

/// Total order on `k` elements, bottom `0` and top `1`.
pub fn chain_lattice(k: usize) -> Result<FiniteLattice> {
    if k == 0 {
        return Err(Error::EmptyLattice);
    }
    guard(k, MAX_CHAIN)?;
    let labels = (0..k)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == k - 1 => "1".to_string(),
            i => format!("c{i}"),
        })
        .collect();
    let leq = Relation::from_fn(k, |x, y| x <= y);
    let mut meet = vec![0u16; k * k];
    let mut join = vec![0u16; k * k];
    for x in 0..k {
        for y in 0..k {
            meet[x * k + y] = x.min(y) as u16;
            join[x * k + y] = x.max(y) as u16;
        }
    }
    Ok(FiniteLattice::from_tables(
        labels,
        leq,
        meet,
        join,
        0,
        k - 1,
    ))
}

pub fn chain(k: usize) -> Result<Quantale> {
    Ok(Quantale::meet_frame(chain_lattice(k)?))
}

fn small_lattice(labels: &[&str], covers: &[(usize, usize)]) -> FiniteLattice {
    let leq = Relation::from_pairs(labels.len(), covers)
        .expect("fixture indices")
        .reflexive_transitive_closure();
    build_lattice(labels.iter().map(|s| s.to_string()).collect(), &leq).expect("fixture")
}

/// The diamond: bottom, three pairwise incomparable atoms, top.
pub fn m3() -> FiniteLattice {
    small_lattice(
        &["0", "a", "b", "c", "1"],
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )
}

/// The pentagon: `0 < a < b < 1` and `0 < c < 1`.
pub fn n5() -> FiniteLattice {
    small_lattice(
        &["0", "a", "b", "c", "1"],
        &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
    )
}

/// Divisors of `n` ordered by divisibility (1 at the bottom).
pub fn divisor_lattice(n: u64) -> Result<FiniteLattice> {
    if n == 0 {
        return Err(Error::InvalidModulus(
            "0 has infinitely many divisors".into(),
        ));
    }
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    guard(divisors.len(), MAX_IDEALS)?;
    let leq = Relation::from_fn(divisors.len(), |x, y| {
        divisors[y].is_multiple_of(divisors[x])
    });
    build_lattice(divisors.iter().map(|d| d.to_string()).collect(), &leq)
}

/// Distinct primes `p_1..p_k` (as display labels) with positive exponents
/// `m_1..m_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredModulus {
    primes: Vec<String>,
    exponents: Vec<u32>,
}

impl FactoredModulus {
    pub fn new(primes: Vec<String>, exponents: Vec<u32>) -> Result<Self> {
        if primes.is_empty() {
            return Err(Error::InvalidModulus("no prime factors".into()));
        }
        if primes.len() != exponents.len() {
            return Err(Error::InvalidModulus(format!(
                "{} primes but {} exponents",
                primes.len(),
                exponents.len()
            )));
        }
        if let Some(i) = exponents.iter().position(|&m| m == 0) {
            return Err(Error::InvalidModulus(format!(
                "exponent of {} is zero",
                primes[i]
            )));
        }
        for (i, p) in primes.iter().enumerate() {
            if primes[..i].contains(p) {
                return Err(Error::InvalidModulus(format!("prime {p} repeated")));
            }
        }
        Ok(FactoredModulus { primes, exponents })
    }

    /// Prime factorization of an integer `n >= 2`, primes ascending.
    pub fn of_integer(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidModulus(format!("{n} has no prime factors")));
        }
        let mut primes = Vec::new();
        let mut exponents = Vec::new();
        let mut rest = n;
        let mut p = 2;
        while p * p <= rest {
            if rest.is_multiple_of(p) {
                let mut m = 0;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    m += 1;
                }
                primes.push(p.to_string());
                exponents.push(m);
            }
            p += 1;
        }
        if rest > 1 {
            primes.push(rest.to_string());
            exponents.push(1);
        }
        Self::new(primes, exponents)
    }

    pub fn primes(&self) -> &[String] {
        &self.primes
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn ideal_count(&self) -> usize {
        self.exponents
            .iter()
            .fold(1usize, |acc, &m| acc.saturating_mul(m as usize + 1))
    }

    pub fn check_vector(&self, v: &[u32]) -> Result<()> {
        if v.len() != self.exponents.len() {
            return Err(Error::DimensionMismatch {
                expected: self.exponents.len(),
                found: v.len(),
            });
        }
        for (position, (&value, &max)) in v.iter().zip(&self.exponents).enumerate() {
            if value > max {
                return Err(Error::ExponentOutOfRange {
                    position,
                    value,
                    max,
                });
            }
        }
        Ok(())
    }
}

/// The ideal quantale of `R/(p_1^m_1 ... p_k^m_k)` for a principal ideal
/// domain `R`, with ideals stored as exponent vectors of their generators.
///
/// Ideals are listed in mixed-radix order of their exponent vectors, so the
/// unit ideal (all zeros) is element 0 and the zero ideal (the vector `m`) is
/// the last element. Intersection is the componentwise max, sum the
/// componentwise min, and product the componentwise `min(a + b, m)`.
#[derive(Debug, Clone)]
pub struct ExponentQuantale {
    modulus: FactoredModulus,
    integer: Option<u64>,
    quantale: Quantale,
}

impl ExponentQuantale {
    pub fn modulus(&self) -> &FactoredModulus {
        &self.modulus
    }

    pub fn quantale(&self) -> &Quantale {
        &self.quantale
    }

    pub fn into_quantale(self) -> Quantale {
        self.quantale
    }

    pub fn lattice(&self) -> &FiniteLattice {
        self.quantale.lattice()
    }

    pub fn len(&self) -> usize {
        self.quantale.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quantale.is_empty()
    }

    /// The integer `n` when this is the ideal quantale of `Z_n`.
    pub fn integer(&self) -> Option<u64> {
        self.integer
    }

    pub fn vector(&self, x: Element) -> Vec<u32> {
        decode(x, &self.modulus.exponents)
    }

    pub fn index_of(&self, v: &[u32]) -> Result<Element> {
        self.modulus.check_vector(v)?;
        Ok(encode(v, &self.modulus.exponents))
    }

    /// The ideal `(l) = (gcd(l, n))` of `Z_n`.
    ///
    /// # Panics
    ///
    /// If this is not the ideal quantale of an integer modulus.
    pub fn ideal_of(&self, l: u64) -> Element {
        let n = self.integer.expect("ideal_of needs an integer modulus");
        let g = gcd(l, n);
        let v: Vec<u32> = self
            .modulus
            .primes
            .iter()
            .map(|p| {
                let p: u64 = p.parse().expect("integer prime");
                let mut e = 0;
                let mut g = g;
                while g.is_multiple_of(p) {
                    g /= p;
                    e += 1;
                }
                e
            })
            .collect();
        encode(&v, &self.modulus.exponents)
    }

    /// The divisor of `n` generating ideal `x` of `Z_n`.
    pub fn generator(&self, x: Element) -> u64 {
        assert!(self.integer.is_some(), "generator needs an integer modulus");
        integer_value(&self.modulus, &self.vector(x))
    }
}

fn integer_value(modulus: &FactoredModulus, v: &[u32]) -> u64 {
    modulus
        .primes
        .iter()
        .zip(v)
        .map(|(p, &e)| p.parse::<u64>().expect("integer prime").pow(e))
        .product()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn encode(v: &[u32], m: &[u32]) -> Element {
    v.iter()
        .zip(m)
        .fold(0, |acc, (&e, &max)| acc * (max as usize + 1) + e as usize)
}

fn decode(mut x: Element, m: &[u32]) -> Vec<u32> {
    let mut v = vec![0; m.len()];
    for i in (0..m.len()).rev() {
        let radix = m[i] as usize + 1;
        v[i] = (x % radix) as u32;
        x /= radix;
    }
    v
}

fn polynomial_label(modulus: &FactoredModulus, v: &[u32]) -> String {
    if v.iter().all(|&e| e == 0) {
        return "R".to_string();
    }
    if v == modulus.exponents.as_slice() {
        return "(0)".to_string();
    }
    let factors = v.iter().filter(|&&e| e > 0).count();
    let mut out = String::from("(");
    for (p, &e) in modulus.primes.iter().zip(v) {
        if e == 0 {
            continue;
        }
        let atomic = p.chars().all(|c| c.is_alphanumeric());
        if atomic || (factors == 1 && e == 1) {
            out.push_str(p);
        } else {
            out.push('(');
            out.push_str(p);
            out.push(')');
        }
        if e > 1 {
            out.push_str(&format!("^{e}"));
        }
    }
    out.push(')');
    out
}

fn exponent_quantale(modulus: FactoredModulus, integer: Option<u64>) -> Result<ExponentQuantale> {
    let n = modulus.ideal_count();
    guard(n, MAX_IDEALS)?;
    let m = modulus.exponents.clone();
    let vectors: Vec<Vec<u32>> = (0..n).map(|x| decode(x, &m)).collect();
    let labels = vectors
        .iter()
        .map(|v| match integer {
            Some(_) => format!("({})", integer_value(&modulus, v)),
            None => polynomial_label(&modulus, v),
        })
        .collect();
    // (a) ⊆ (b) iff the exponent vector of b is componentwise <= that of a
    let leq = Relation::from_fn(n, |x, y| {
        vectors[y].iter().zip(&vectors[x]).all(|(b, a)| b <= a)
    });
    let mut meet = vec![0u16; n * n];
    let mut join = vec![0u16; n * n];
    let mut mult = vec![0u16; n * n];
    let mut scratch = vec![0u32; m.len()];
    for x in 0..n {
        for y in 0..n {
            let (a, b) = (&vectors[x], &vectors[y]);
            for i in 0..m.len() {
                scratch[i] = a[i].max(b[i]);
            }
            meet[x * n + y] = encode(&scratch, &m) as u16;
            for i in 0..m.len() {
                scratch[i] = a[i].min(b[i]);
            }
            join[x * n + y] = encode(&scratch, &m) as u16;
            for i in 0..m.len() {
                scratch[i] = (a[i] + b[i]).min(m[i]);
            }
            mult[x * n + y] = encode(&scratch, &m) as u16;
        }
    }
    let lattice = FiniteLattice::from_tables(labels, leq, meet, join, n - 1, 0);
    Ok(ExponentQuantale {
        modulus,
        integer,
        quantale: Quantale::from_table_unchecked(lattice, mult),
    })
}

/// Ideal quantale of `R/(p_1^m_1 ... p_k^m_k)` with symbolic prime labels.
pub fn ideal_quantale(modulus: &FactoredModulus) -> Result<ExponentQuantale> {
    exponent_quantale(modulus.clone(), None)
}

/// Ideal quantale of `Z_n`, labelled by the divisor generating each ideal.
pub fn zn(n: u64) -> Result<ExponentQuantale> {
    exponent_quantale(FactoredModulus::of_integer(n)?, Some(n))
}

/// A finite point set with a family of open subsets (bit masks over the
/// points).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologySpec {
    points: Vec<String>,
    opens: Vec<u64>,
}

impl TopologySpec {
    /// Validates the family and sorts the opens by size, then mask.
    pub fn new(points: Vec<String>, opens: Vec<u64>) -> Result<Self> {
        guard(points.len(), MAX_TOPOLOGY_POINTS)?;
        let full = (1u64 << points.len()) - 1;
        let mut opens = opens;
        opens.sort_by_key(|&u| (u.count_ones(), u));
        opens.dedup();
        let spec = TopologySpec { points, opens };
        if let Some(&u) = spec.opens.iter().find(|&&u| u & !full != 0) {
            return Err(Error::NotATopology(format!(
                "open {u:#b} mentions points outside the space"
            )));
        }
        if !spec.is_open(0) {
            return Err(Error::NotATopology("missing the empty set".into()));
        }
        if !spec.is_open(full) {
            return Err(Error::NotATopology("missing the whole space".into()));
        }
        for &u in &spec.opens {
            for &v in &spec.opens {
                if !spec.is_open(u | v) {
                    return Err(Error::NotATopology(format!(
                        "union of {} and {} is not open",
                        spec.label(u),
                        spec.label(v)
                    )));
                }
                if !spec.is_open(u & v) {
                    return Err(Error::NotATopology(format!(
                        "intersection of {} and {} is not open",
                        spec.label(u),
                        spec.label(v)
                    )));
                }
            }
        }
        Ok(spec)
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn opens(&self) -> &[u64] {
        &self.opens
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.points.len()) - 1
    }

    pub fn is_open(&self, u: u64) -> bool {
        self.opens
            .binary_search_by_key(&(u.count_ones(), u), |&v| (v.count_ones(), v))
            .is_ok()
    }

    /// Element index of an open in the frame built by [`topology_frame`].
    pub fn index_of(&self, u: u64) -> Option<Element> {
        self.opens
            .binary_search_by_key(&(u.count_ones(), u), |&v| (v.count_ones(), v))
            .ok()
    }

    pub fn label(&self, u: u64) -> String {
        subset_label(u, &self.points)
    }
}

/// The frame of opens ordered by inclusion. Element `i` is `spec.opens()[i]`.
pub fn topology_frame(spec: &TopologySpec) -> Result<Quantale> {
    let opens = spec.opens();
    let n = opens.len();
    guard(n, MAX_IDEALS)?;
    let labels = opens.iter().map(|&u| spec.label(u)).collect();
    let leq = Relation::from_fn(n, |x, y| opens[x] & !opens[y] == 0);
    let index = |u: u64| {
        spec.index_of(u)
            .expect("closed under union and intersection")
    };
    let mut meet = vec![0u16; n * n];
    let mut join = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            meet[x * n + y] = index(opens[x] & opens[y]) as u16;
            join[x * n + y] = index(opens[x] | opens[y]) as u16;
        }
    }
    let lattice = FiniteLattice::from_tables(labels, leq, meet, join, 0, n - 1);
    Ok(Quantale::meet_frame(lattice))
}

/// The Alexandrov topology of a preorder on `points`: opens are the
/// up-closed subsets. `pairs` lists `(i, j)` meaning `i <= j`; reflexive
/// pairs are implied, transitivity is required.
pub fn alexandrov_frame(
    points: Vec<String>,
    pairs: &[(usize, usize)],
) -> Result<(Quantale, TopologySpec)> {
    let k = points.len();
    if k == 0 {
        return Err(Error::EmptyLattice);
    }
    guard(k, MAX_PREORDER_POINTS)?;
    let mut rel = Relation::from_pairs(k, pairs)?;
    for i in 0..k {
        rel.insert(i, i);
    }
    rel.check_preorder()?;
    let opens: Vec<u64> = (0..1u64 << k)
        .filter(|&u| rel.pairs().all(|(i, j)| u >> i & 1 == 0 || u >> j & 1 == 1))
        .collect();
    let spec = TopologySpec::new(points, opens)?;
    Ok((topology_frame(&spec)?, spec))
}

/// Every transitive reflexive relation on `k` points, as non-reflexive pair
/// lists, in increasing order of their bit encoding.
pub fn all_preorders(k: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    guard(k, MAX_PREORDER_POINTS)?;
    let off_diagonal: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..1 << off_diagonal.len() {
        let pairs: Vec<(usize, usize)> = off_diagonal
            .iter()
            .enumerate()
            .filter(|(b, _)| bits >> b & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let mut rel = Relation::from_pairs(k, &pairs).expect("in range");
        for i in 0..k {
            rel.insert(i, i);
        }
        match rel.check_preorder() {
            Ok(()) => out.push(pairs),
            Err(Error::NotAPreorder(OrderViolation::Transitivity(..))) => {}
            Err(e) => unreachable!("{e}"),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powerset_sizes() {
        let p1 = powerset_lattice(1).unwrap();
        assert_eq!(p1.len(), 2);
        assert_eq!(p1.relation(), chain_lattice(2).unwrap().relation());
        let p3 = powerset_frame(3).unwrap();
        assert_eq!(p3.len(), 8);
        assert_eq!(p3.lattice().atoms().len(), 3);
        assert!(p3.lattice().is_distributive());
        assert!(matches!(
            powerset_lattice(13),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn powerset_tables_match_derivation() {
        let p = powerset_lattice(3).unwrap();
        let rebuilt = build_lattice(p.labels().to_vec(), p.relation()).unwrap();
        assert_eq!(rebuilt, p);
    }

    #[test]
    fn z12_ideals() {
        let z = zn(12).unwrap();
        assert_eq!(z.len(), 6);
        let l = z.lattice();
        assert_eq!(l.meet(z.ideal_of(3), z.ideal_of(4)), l.bottom());
        assert_eq!(l.join(z.ideal_of(3), z.ideal_of(4)), l.top());
        assert_eq!(z.vector(z.ideal_of(3)), vec![0, 1]);
        assert_eq!(z.ideal_of(0), l.bottom());
        assert_eq!(z.ideal_of(5), l.top());
        assert_eq!(z.ideal_of(8), z.ideal_of(4));
        assert_eq!(z.generator(z.ideal_of(6)), 6);
        assert_eq!(
            z.quantale().mult(z.ideal_of(2), z.ideal_of(6)),
            z.ideal_of(12)
        );
    }

    #[test]
    fn exponent_tables_match_derivation() {
        for n in [12, 30, 72, 360] {
            let z = zn(n).unwrap();
            let rebuilt =
                build_lattice(z.lattice().labels().to_vec(), z.lattice().relation()).unwrap();
            assert_eq!(&rebuilt, z.lattice());
            assert!(rebuilt.is_distributive());
        }
    }

    #[test]
    fn polynomial_quotient() {
        let m = FactoredModulus::new(vec!["x".into(), "x+1".into(), "x+2".into()], vec![2, 1, 1])
            .unwrap();
        let q = ideal_quantale(&m).unwrap();
        assert_eq!(q.len(), 12);
        let l = q.lattice();
        assert_eq!(l.label(l.top()), "R");
        assert_eq!(l.label(l.bottom()), "(0)");
        assert_eq!(l.label(q.index_of(&[2, 1, 0]).unwrap()), "(x^2(x+1))");
        assert_eq!(l.label(q.index_of(&[0, 0, 1]).unwrap()), "(x+2)");
        assert_eq!(l.label(q.index_of(&[0, 1, 1]).unwrap()), "((x+1)(x+2))");
        assert!(matches!(
            q.index_of(&[3, 0, 0]),
            Err(Error::ExponentOutOfRange {
                position: 0,
                value: 3,
                max: 2
            })
        ));
    }

    #[test]
    fn modulus_validation() {
        assert!(FactoredModulus::new(vec![], vec![]).is_err());
        assert!(FactoredModulus::new(vec!["p".into()], vec![0]).is_err());
        assert!(FactoredModulus::new(vec!["p".into(), "p".into()], vec![1, 1]).is_err());
        let m = FactoredModulus::of_integer(900).unwrap();
        assert_eq!(m.primes(), &["2", "3", "5"]);
        assert_eq!(m.exponents(), &[2, 2, 2]);
        assert!(FactoredModulus::of_integer(1).is_err());
        assert_eq!(FactoredModulus::of_integer(1999).unwrap().exponents(), &[1]);
    }

    #[test]
    fn discrete_preorder_gives_powerset() {
        let points: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
        let (q, spec) = alexandrov_frame(points, &[]).unwrap();
        assert_eq!(spec.opens().len(), 8);
        assert_eq!(q.len(), 8);
        assert!(q.lattice().is_distributive());
    }

    #[test]
    fn sierpinski_space() {
        let (q, spec) = alexandrov_frame(vec!["a".into(), "b".into()], &[(0, 1)]).unwrap();
        assert_eq!(spec.opens(), &[0b00, 0b10, 0b11]);
        assert_eq!(q.len(), 3);
        assert_eq!(q.lattice().label(1), "{b}");
    }

    #[test]
    fn preorder_must_be_transitive() {
        let points: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
        assert!(matches!(
            alexandrov_frame(points, &[(0, 1), (1, 2)]),
            Err(Error::NotAPreorder(OrderViolation::Transitivity(0, 1, 2)))
        ));
    }

    #[test]
    fn single_relation_preorders_on_three_points() {
        let points: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                let (q, spec) = alexandrov_frame(points.clone(), &[(i, j)]).unwrap();
                // 8 subsets minus the 2 that hold i without j
                assert_eq!(spec.opens().len(), 6);
                assert!(q.lattice().is_distributive());
                for &u in spec.opens() {
                    for &v in spec.opens() {
                        assert!(spec.is_open(u | v) && spec.is_open(u & v));
                    }
                }
            }
        }
    }

    #[test]
    fn preorder_counts() {
        // labelled preorders (topologies) on k points
        let counts: Vec<usize> = (1..=4).map(|k| all_preorders(k).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
    }

    #[test]
    fn explicit_topologies() {
        let points: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
        let indiscrete = TopologySpec::new(points.clone(), vec![0, 0b111]).unwrap();
        let q = topology_frame(&indiscrete).unwrap();
        assert_eq!(q.len(), 2);
        let nested = TopologySpec::new(points.clone(), vec![0, 0b001, 0b011, 0b111]).unwrap();
        let q = topology_frame(&nested).unwrap();
        assert_eq!(q.len(), 4);
        assert!((0..4).all(|x| (0..4).all(|y| q.lattice().leq(x, y) == (x <= y))));
        let discrete = TopologySpec::new(points.clone(), (0..8).collect()).unwrap();
        let q = topology_frame(&discrete).unwrap();
        let p = powerset_lattice(3).unwrap();
        let by_label = |x: Element| p.index_of(q.lattice().label(x)).unwrap();
        assert!(q.lattice().elements().all(|x| q
            .lattice()
            .elements()
            .all(|y| { q.lattice().leq(x, y) == p.leq(by_label(x), by_label(y)) })));
        assert!(matches!(
            TopologySpec::new(points.clone(), vec![0, 0b001, 0b010, 0b111]),
            Err(Error::NotATopology(_))
        ));
        assert!(matches!(
            TopologySpec::new(points, vec![0b001, 0b111]),
            Err(Error::NotATopology(_))
        ));
    }

    #[test]
    fn chains_and_products() {
        let c2 = chain(2).unwrap();
        assert!(c2.is_frame());
        let sq = chain_lattice(2)
            .unwrap()
            .product(&chain_lattice(2).unwrap())
            .unwrap();
        assert_eq!(sq.len(), 4);
        assert!(sq.is_distributive());
        assert_eq!(sq.atoms().len(), 2);
    }

    #[test]
    fn divisor_lattice_orientation() {
        let d = divisor_lattice(12).unwrap();
        assert_eq!(d.label(d.bottom()), "1");
        assert_eq!(d.label(d.top()), "12");
        assert_eq!(d.len(), 6);
    }
}
