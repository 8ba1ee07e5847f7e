//! Exhaustive generation of small lattices.
//!
//! A lattice on `n >= 2` elements is a bounded poset, so it is enough to
//! generate the posets on the `n - 2` interior elements. Interiors are built
//! with a natural labelling (every element's strict down-set uses only
//! earlier indices), which reaches every isomorphism class.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{build_lattice, Element, FiniteLattice};
use crate::relation::Relation;

pub const MAX_ENUMERATION_SIZE: usize = 8;

/// Every lattice with `1..=max_size` elements, ordered by size and then by
/// generation order. With `dedupe`, one representative per isomorphism
/// class (the first generated) is kept.
pub fn enumerate_lattices(max_size: usize, dedupe: bool) -> Result<Vec<FiniteLattice>> {
    guard(max_size)?;
    let mut out = Vec::new();
    for n in 1..=max_size {
        out.extend(lattices_of_size(n, dedupe)?);
    }
    Ok(out)
}

pub fn lattices_of_size(n: usize, dedupe: bool) -> Result<Vec<FiniteLattice>> {
    guard(n)?;
    if n == 1 {
        return Ok(vec![build_lattice(
            vec!["0".to_string()],
            &Relation::identity(1),
        )?]);
    }
    let interiors = interior_posets(n - 2);
    let lattices: Vec<FiniteLattice> = interiors
        .par_iter()
        .filter_map(|down| bounded_poset(down).ok())
        .collect();
    if !dedupe {
        return Ok(lattices);
    }
    let mut classes: HashMap<Vec<Profile>, Vec<usize>> = HashMap::new();
    let mut kept: Vec<FiniteLattice> = Vec::new();
    for l in lattices {
        let key = invariant_key(&l);
        let bucket = classes.entry(key).or_default();
        if bucket.iter().all(|&i| !are_isomorphic(&kept[i], &l)) {
            bucket.push(kept.len());
            kept.push(l);
        }
    }
    Ok(kept)
}

fn guard(size: usize) -> Result<()> {
    if size == 0 || size > MAX_ENUMERATION_SIZE {
        return Err(Error::SizeLimitExceeded {
            requested: size,
            limit: MAX_ENUMERATION_SIZE,
        });
    }
    Ok(())
}

/// Naturally labelled posets on `m` points, each given by the strict
/// down-set mask of every point.
fn interior_posets(m: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut down = Vec::with_capacity(m);
    extend_poset(m, &mut down, &mut out);
    out
}

fn extend_poset(m: usize, down: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let k = down.len();
    if k == m {
        out.push(down.clone());
        return;
    }
    for mask in 0u32..1 << k {
        let closed = (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .all(|i| down[i] & !mask == 0);
        if closed {
            down.push(mask);
            extend_poset(m, down, out);
            down.pop();
        }
    }
}

/// Adds a bottom (index 0) and a top (last index) around the interior.
fn bounded_poset(down: &[u32]) -> Result<FiniteLattice> {
    let m = down.len();
    let n = m + 2;
    let leq = Relation::from_fn(n, |x, y| {
        x == y
            || x == 0
            || y == n - 1
            || (x > 0 && y > 0 && x < n - 1 && y < n - 1 && down[y - 1] >> (x - 1) & 1 == 1)
    });
    let labels = (0..n)
        .map(|x| match x {
            0 => "0".to_string(),
            x if x == n - 1 => "1".to_string(),
            x => format!("e{x}"),
        })
        .collect();
    build_lattice(labels, &leq)
}

/// Per-element data preserved by order isomorphisms.
type Profile = (usize, usize, usize, usize, usize);

fn profiles(l: &FiniteLattice) -> Vec<Profile> {
    let ranks = l.ranks();
    l.elements()
        .map(|x| {
            (
                ranks[x],
                l.upper_covers(x).len(),
                l.lower_covers(x).len(),
                l.below(x).count(),
                l.above(x).count(),
            )
        })
        .collect()
}

fn invariant_key(l: &FiniteLattice) -> Vec<Profile> {
    let mut p = profiles(l);
    p.sort_unstable();
    p
}

/// An order isomorphism from `a` onto `b`, found by backtracking over
/// elements with matching profiles.
pub fn isomorphism(a: &FiniteLattice, b: &FiniteLattice) -> Option<Vec<Element>> {
    if a.len() != b.len() || invariant_key(a) != invariant_key(b) {
        return None;
    }
    let pa = profiles(a);
    let pb = profiles(b);
    let mut map = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];
    if assign(a, b, &pa, &pb, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn assign(
    a: &FiniteLattice,
    b: &FiniteLattice,
    pa: &[Profile],
    pb: &[Profile],
    x: Element,
    map: &mut [Element],
    used: &mut [bool],
) -> bool {
    if x == a.len() {
        return true;
    }
    for y in b.elements() {
        if used[y] || pa[x] != pb[y] {
            continue;
        }
        let consistent =
            (0..x).all(|u| a.leq(u, x) == b.leq(map[u], y) && a.leq(x, u) == b.leq(y, map[u]));
        if consistent {
            map[x] = y;
            used[y] = true;
            if assign(a, b, pa, pb, x + 1, map, used) {
                return true;
            }
            used[y] = false;
        }
    }
    map[x] = usize::MAX;
    false
}

pub fn are_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> bool {
    isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| lattices_of_size(n, true).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5, 15, 53]);
        assert_eq!(enumerate_lattices(5, true).unwrap().len(), 10);
        assert_eq!(enumerate_lattices(1, false).unwrap().len(), 1);
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            enumerate_lattices(9, true),
            Err(Error::SizeLimitExceeded { requested: 9, .. })
        ));
        assert!(enumerate_lattices(0, true).is_err());
    }

    #[test]
    fn size_five_contains_n5_and_m3() {
        let five = lattices_of_size(5, true).unwrap();
        assert!(five.iter().any(|l| are_isomorphic(l, &builders::n5())));
        assert!(five.iter().any(|l| are_isomorphic(l, &builders::m3())));
        assert_eq!(five.iter().filter(|l| !l.is_modular()).count(), 1);
    }

    #[test]
    fn isomorphism_is_an_order_bijection() {
        let p = builders::powerset_lattice(2).unwrap();
        let four = lattices_of_size(4, true).unwrap();
        let square = four.iter().find(|l| are_isomorphic(l, &p)).unwrap();
        let f = isomorphism(square, &p).unwrap();
        for x in square.elements() {
            for y in square.elements() {
                assert_eq!(square.leq(x, y), p.leq(f[x], f[y]));
            }
        }
        assert!(!are_isomorphic(&builders::m3(), &builders::n5()));
    }
}
