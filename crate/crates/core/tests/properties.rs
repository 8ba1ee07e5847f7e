use proptest::prelude::*;

use mulattice::builders;
use mulattice::document::{DocumentKind, LatticeDocument};
use mulattice::{build_lattice, enumerate, mu, FiniteLattice, Relation};

fn small_lattices() -> &'static [FiniteLattice] {
    static ALL: std::sync::OnceLock<Vec<FiniteLattice>> = std::sync::OnceLock::new();
    ALL.get_or_init(|| enumerate::enumerate_lattices(6, true).unwrap())
}

fn any_lattice() -> impl Strategy<Value = FiniteLattice> {
    (0..small_lattices().len()).prop_map(|i| small_lattices()[i].clone())
}

/// A random partial order on `n` points, relabelled by a random permutation.
fn random_order() -> impl Strategy<Value = (usize, Relation)> {
    (1usize..=6).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            proptest::collection::vec(any::<bool>(), pairs),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(|(n, bits, perm)| {
                let mut r = Relation::identity(n);
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if bits[k] {
                            r.insert(perm[i], perm[j]);
                        }
                        k += 1;
                    }
                }
                (n, r.reflexive_transitive_closure())
            })
    })
}

fn relabel(l: &FiniteLattice, perm: &[usize]) -> FiniteLattice {
    let n = l.len();
    let mut labels = vec![String::new(); n];
    for x in 0..n {
        labels[perm[x]] = l.label(x).to_string();
    }
    let leq = Relation::from_fn(n, |a, b| {
        let inv = |y: usize| perm.iter().position(|&p| p == y).unwrap();
        l.leq(inv(a), inv(b))
    });
    build_lattice(labels, &leq).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn built_tables_are_bounds((n, rel) in random_order()) {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        if let Ok(l) = build_lattice(labels, &rel) {
            for x in l.elements() {
                for y in l.elements() {
                    let m = l.meet(x, y);
                    let j = l.join(x, y);
                    prop_assert!(l.leq(m, x) && l.leq(m, y) && l.leq(x, j) && l.leq(y, j));
                    for z in l.elements() {
                        if l.leq(z, x) && l.leq(z, y) {
                            prop_assert!(l.leq(z, m));
                        }
                        if l.leq(x, z) && l.leq(y, z) {
                            prop_assert!(l.leq(j, z));
                        }
                    }
                    prop_assert_eq!(l.meet(x, l.join(x, y)), x);
                    prop_assert_eq!(l.join(x, l.meet(x, y)), x);
                }
            }
        }
    }

    #[test]
    fn essential_and_atoms_are_mu(l in any_lattice()) {
        for x in l.elements() {
            if mu::is_essential(&l, x) || mu::is_atom(&l, x) || x == l.bottom() {
                prop_assert!(mu::is_mu(&l, x));
            }
        }
    }

    #[test]
    fn meets_of_mu_elements_are_mu(l in any_lattice()) {
        let m = mu::mu_elements(&l);
        for &a in &m {
            for &b in &m {
                prop_assert!(mu::is_mu(&l, l.meet(a, b)));
            }
        }
    }

    #[test]
    fn pairwise_criterion_matches_families(l in any_lattice()) {
        for x in l.elements() {
            prop_assert_eq!(mu::is_mu(&l, x), mu::is_mu_by_families(&l, x, 4));
        }
    }

    #[test]
    fn negative_verdicts_carry_valid_witnesses(l in any_lattice()) {
        for x in l.elements() {
            if let Some(w) = mu::mu_witness(&l, x) {
                prop_assert!(mu::refutes_mu(&l, x, w));
            }
            if let Some(y) = mu::essential_witness(&l, x) {
                prop_assert!(y != l.bottom() && l.meet(x, y) == l.bottom());
            }
        }
    }

    #[test]
    fn relabelling_preserves_mu(l in any_lattice(), seed in any::<u64>()) {
        let n = l.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let k = relabel(&l, &perm);
        let iso = enumerate::isomorphism(&l, &k).expect("relabelling is isomorphic");
        for x in l.elements() {
            for y in l.elements() {
                prop_assert_eq!(l.leq(x, y), k.leq(iso[x], iso[y]));
            }
            prop_assert_eq!(mu::is_mu(&l, x), mu::is_mu(&k, iso[x]));
            prop_assert_eq!(mu::is_irreducible(&l, x), mu::is_irreducible(&k, iso[x]));
        }
    }

    #[test]
    fn exponent_fast_path(n in 2u64..20_000) {
        let z = builders::zn(n).unwrap();
        prop_assume!(z.len() <= 64);
        for x in z.lattice().elements() {
            let v = mu::fast_mu_exponent(z.modulus(), &z.vector(x)).unwrap();
            prop_assert_eq!(v.essential, mu::is_essential(z.lattice(), x));
            prop_assert_eq!(v.mu, mu::is_mu(z.lattice(), x));
        }
    }

    #[test]
    fn topology_fast_path(k in 1usize..=5, bits in any::<u32>()) {
        let points: Vec<String> = (0..k).map(|i| format!("p{i}")).collect();
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && bits >> ((i * 5 + j) % 32) & 1 == 1)
            .collect();
        let closure = Relation::from_pairs(k, &pairs).unwrap().reflexive_transitive_closure();
        let closed: Vec<(usize, usize)> = closure.pairs().filter(|(i, j)| i != j).collect();
        let (frame, spec) = builders::alexandrov_frame(points, &closed).unwrap();
        for (x, &u) in spec.opens().iter().enumerate() {
            let v = mu::fast_mu_topology(&spec, u).unwrap();
            prop_assert_eq!(v.essential, mu::is_essential(frame.lattice(), x));
            prop_assert_eq!(v.mu, mu::is_mu(frame.lattice(), x));
        }
    }

    #[test]
    fn down_restriction(l in any_lattice()) {
        for b in l.elements() {
            for x in l.below(b) {
                if mu::mu_in_down(&l, b, x).unwrap() {
                    for d in l.elements().filter(|&d| l.leq(x, d) && l.leq(d, b)) {
                        prop_assert!(mu::mu_in_down(&l, d, x).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn documents_round_trip(a in 1usize..5, b in 2u64..400, c in 1usize..4) {
        let docs = [
            LatticeDocument::new(DocumentKind::Chain { length: a }),
            LatticeDocument::new(DocumentKind::Zn { n: b }),
            LatticeDocument::new(DocumentKind::Powerset { points: c }),
            LatticeDocument::new(DocumentKind::Product {
                left: Box::new(LatticeDocument::new(DocumentKind::Chain { length: a })),
                right: Box::new(LatticeDocument::new(DocumentKind::Powerset { points: c })),
            }),
        ];
        for doc in docs {
            let text = doc.to_json();
            let back = LatticeDocument::from_json(&text).unwrap();
            prop_assert_eq!(&back, &doc);
            prop_assert_eq!(back.to_json(), text);
            let built = back.build().unwrap();
            let again = LatticeDocument::explicit(built.lattice(), None).build().unwrap();
            prop_assert_eq!(again.lattice().relation(), built.lattice().relation());
        }
    }

    #[test]
    fn modular_mu_is_essential_or_irreducible(l in any_lattice()) {
        prop_assume!(l.is_modular());
        for x in l.elements() {
            let expected: bool = mu::is_essential(&l, x) || mu::is_irreducible(&l, x);
            prop_assert_eq!(mu::is_mu(&l, x), expected);
        }
    }
}

#[test]
fn strategy_covers_every_small_lattice() {
    assert_eq!(small_lattices().len(), 25);
}
