//! Closed-form verdicts for exponent quantales, finite topologies, and
//! modular lattices.

use crate::builders::{FactoredModulus, TopologySpec};
use crate::error::{Error, Result};
use crate::lattice::{Element, FiniteLattice};

use super::{is_essential, is_irreducible};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FastVerdict {
    pub essential: bool,
    pub mu: bool,
}

/// For the ideal with exponent vector `mp` in a quotient with exponents `m`:
/// essential iff every `mp_i < m_i`; mu iff there are no `i != j` with
/// `mp_i < m_i`, `mp_j < m_j` together with some `s` where `mp_s = m_s`.
pub fn fast_mu_exponent(modulus: &FactoredModulus, mp: &[u32]) -> Result<FastVerdict> {
    modulus.check_vector(mp)?;
    let m = modulus.exponents();
    let deficient = mp.iter().zip(m).filter(|(a, b)| a < b).count();
    let saturated = mp.len() - deficient;
    Ok(FastVerdict {
        essential: saturated == 0,
        mu: !(deficient >= 2 && saturated >= 1),
    })
}

/// An open is essential iff it is dense, and mu iff it is dense or
/// irreducible as a subspace.
pub fn fast_mu_topology(spec: &TopologySpec, u: u64) -> Result<FastVerdict> {
    if !spec.is_open(u) {
        return Err(Error::NotAnOpen(u));
    }
    let nonempty = || spec.opens().iter().copied().filter(|&v| v != 0);
    let dense = nonempty().all(|v| v & u != 0);
    let inside: Vec<u64> = nonempty().filter(|&v| v & !u == 0).collect();
    let irreducible = inside.iter().all(|&v| inside.iter().all(|&w| v & w != 0));
    Ok(FastVerdict {
        essential: dense,
        mu: dense || irreducible,
    })
}

/// In a modular lattice, `x` is mu iff it is essential or irreducible.
pub fn fast_mu_modular(lattice: &FiniteLattice, x: Element) -> Result<bool> {
    lattice.check_index(x)?;
    if !lattice.is_modular() {
        return Err(Error::NotModular);
    }
    Ok(is_essential(lattice, x) || is_irreducible(lattice, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;
    use crate::mu::is_mu;

    #[test]
    fn exponent_examples() {
        let z12 = builders::FactoredModulus::of_integer(12).unwrap();
        assert_eq!(
            fast_mu_exponent(&z12, &[0, 1]).unwrap(),
            FastVerdict {
                essential: false,
                mu: true
            }
        );
        let z900 = builders::FactoredModulus::of_integer(900).unwrap();
        assert!(!fast_mu_exponent(&z900, &[2, 1, 1]).unwrap().mu);
        let z180 = builders::FactoredModulus::of_integer(180).unwrap();
        assert!(!fast_mu_exponent(&z180, &[0, 0, 1]).unwrap().mu);
        assert!(matches!(
            fast_mu_exponent(&z12, &[3, 0]),
            Err(Error::ExponentOutOfRange { .. })
        ));
    }

    #[test]
    fn exponent_agrees_with_brute_force() {
        for n in [12, 30, 180, 210, 900] {
            let z = builders::zn(n).unwrap();
            let l = z.lattice();
            for x in l.elements() {
                let v = fast_mu_exponent(z.modulus(), &z.vector(x)).unwrap();
                assert_eq!(v.essential, is_essential(l, x), "Z{n} {}", l.label(x));
                assert_eq!(v.mu, is_mu(l, x), "Z{n} {}", l.label(x));
            }
        }
    }

    #[test]
    fn topology_examples() {
        let discrete =
            builders::TopologySpec::new(vec!["1".into(), "2".into(), "3".into()], (0..8).collect())
                .unwrap();
        assert_eq!(
            fast_mu_topology(&discrete, 0b111).unwrap(),
            FastVerdict {
                essential: true,
                mu: true
            }
        );
        assert_eq!(
            fast_mu_topology(&discrete, 0b011).unwrap(),
            FastVerdict {
                essential: false,
                mu: false
            }
        );
        let sierpinski =
            builders::TopologySpec::new(vec!["0".into(), "1".into()], vec![0, 0b10, 0b11]).unwrap();
        assert!(fast_mu_topology(&sierpinski, 0b10).unwrap().essential);
        assert_eq!(
            fast_mu_topology(&sierpinski, 0b01),
            Err(Error::NotAnOpen(1))
        );
    }

    #[test]
    fn modular_examples() {
        let z12 = builders::zn(12).unwrap();
        assert!(fast_mu_modular(z12.lattice(), z12.ideal_of(3)).unwrap());
        let z30 = builders::zn(30).unwrap();
        assert!(!fast_mu_modular(z30.lattice(), z30.ideal_of(2)).unwrap());
        let m3 = builders::m3();
        assert!(fast_mu_modular(&m3, 1).unwrap());
        assert_eq!(fast_mu_modular(&builders::n5(), 1), Err(Error::NotModular));
    }
}
