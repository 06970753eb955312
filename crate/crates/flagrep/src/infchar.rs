//! Infinitesimal characters as Weyl-orbit data: exact equality of
//! characters, and the integrally dominant representative of an orbit.
//!
//! Weights here are Harish-Chandra parameters and may have rational
//! coordinates; all tests are exact.

use std::hash::{Hash, Hasher};

use num_traits::Signed;

use crate::cartan::{RootSystem, Weight};
use crate::error::Result;
use crate::weyl::{self, WeylElement};

/// An infinitesimal character, carried by any weight of its Weyl orbit and
/// canonicalized by the unique dominant-chamber-closure representative.
///
/// Equality and hashing use only the canonical representative, so two values
/// compare equal exactly when they name the same character.
#[derive(Clone, Debug)]
pub struct InfinitesimalCharacter {
    representative: Weight,
    canonical: Weight,
}

impl InfinitesimalCharacter {
    pub fn new(rs: &RootSystem, representative: &Weight) -> Result<Self> {
        let (canonical, _) = weyl::make_dominant(rs, representative)?;
        Ok(InfinitesimalCharacter {
            representative: representative.clone(),
            canonical,
        })
    }

    pub fn representative(&self) -> &Weight {
        &self.representative
    }

    pub fn canonical(&self) -> &Weight {
        &self.canonical
    }
}

impl PartialEq for InfinitesimalCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for InfinitesimalCharacter {}

impl Hash for InfinitesimalCharacter {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical.hash(state);
    }
}

/// Whether `a` and `b` define the same infinitesimal character, i.e. lie in
/// the same Weyl orbit; decided by comparing dominant representatives.
pub fn chi_equal(rs: &RootSystem, a: &Weight, b: &Weight) -> Result<bool> {
    let (da, _) = weyl::make_dominant(rs, a)?;
    let (db, _) = weyl::make_dominant(rs, b)?;
    Ok(da == db)
}

/// Whether `2 (lambda, alpha) / (alpha, alpha)` avoids the negative integers
/// for every positive root.
pub fn integrally_dominant(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    for alpha in rs.positive_roots() {
        let p = rs.pairing(lambda, alpha)?;
        if p.is_integer() && p.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An integrally dominant point of the orbit of `lambda`, with an element
/// carrying `lambda` there.
///
/// Such a point always exists (the dominant representative qualifies) but
/// need not be unique; the choice is pinned down deterministically by taking
/// the qualifying point reached by the element with the fewest inversions
/// against the positive system, breaking remaining ties lexicographically on
/// coordinates.
pub fn integrally_dominant_conjugate(
    rs: &RootSystem,
    lambda: &Weight,
) -> Result<(Weight, WeylElement)> {
    let mut best: Option<(usize, Weight, WeylElement)> = None;
    for (point, element) in weyl::orbit_with_elements(rs, lambda)? {
        if !integrally_dominant(rs, &point)? {
            continue;
        }
        let inversions = element.inversions(rs);
        let better = match &best {
            None => true,
            Some((best_inv, best_point, _)) => (inversions, point.cmp_lex(best_point))
                < (*best_inv, std::cmp::Ordering::Equal),
        };
        if better {
            best = Some((inversions, point, element));
        }
    }
    let (_, point, element) = best.expect("the dominant representative is integrally dominant");
    Ok((point, element))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn chi_equality_examples() {
        let a1 = rs("A1");
        assert!(chi_equal(&a1, &Weight::integral(&[2]), &Weight::integral(&[-2])).unwrap());
        assert!(!chi_equal(&a1, &Weight::integral(&[2]), &Weight::integral(&[3])).unwrap());
        let a2 = rs("A2");
        for el in weyl::elements(&a2) {
            assert!(chi_equal(&a2, a2.rho(), &el.apply(a2.rho())).unwrap());
        }
        let lam = Weight::from_coords(vec![frac(1, 2), frac(-5, 3)]);
        for p in weyl::orbit(&a2, &lam).unwrap() {
            assert!(chi_equal(&a2, &lam, &p).unwrap());
        }
        assert!(!chi_equal(&a2, &lam, &Weight::integral(&[1, 0])).unwrap());
    }

    #[test]
    fn characters_compare_by_canonical_representative() {
        let a1 = rs("A1");
        let a = InfinitesimalCharacter::new(&a1, &Weight::integral(&[3])).unwrap();
        let b = InfinitesimalCharacter::new(&a1, &Weight::integral(&[-3])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.canonical(), &Weight::integral(&[3]));
        assert_eq!(b.representative(), &Weight::integral(&[-3]));
        let c = InfinitesimalCharacter::new(&a1, &Weight::integral(&[2])).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn integral_dominance_tests() {
        let a1 = rs("A1");
        assert!(integrally_dominant(&a1, &Weight::integral(&[3])).unwrap());
        assert!(integrally_dominant(&a1, &Weight::integral(&[0])).unwrap());
        assert!(!integrally_dominant(&a1, &Weight::integral(&[-2])).unwrap());
        // A non-integral pairing can never be a negative integer.
        assert!(integrally_dominant(&a1, &Weight::from_coords(vec![frac(-1, 2)])).unwrap());

        let a2 = rs("A2");
        assert!(!integrally_dominant(&a2, &Weight::integral(&[-1, 3])).unwrap());
        assert!(integrally_dominant(&a2, &Weight::from_coords(vec![frac(-1, 2), frac(3, 1)]))
            .unwrap());
    }

    #[test]
    fn conjugate_examples() {
        let a1 = rs("A1");
        let (point, el) = integrally_dominant_conjugate(&a1, &Weight::integral(&[-2])).unwrap();
        assert_eq!(point, Weight::integral(&[2]));
        assert_eq!(el.word(), &[0]);

        let lam = Weight::from_coords(vec![frac(-1, 2)]);
        let (point, el) = integrally_dominant_conjugate(&a1, &lam).unwrap();
        assert_eq!(point, lam);
        assert!(el.is_identity());

        let dominant = Weight::integral(&[4]);
        let (point, el) = integrally_dominant_conjugate(&a1, &dominant).unwrap();
        assert_eq!(point, dominant);
        assert!(el.is_identity());
    }

    #[test]
    fn conjugate_qualifies_and_stays_in_orbit() {
        let b2 = rs("B2");
        for lam in [
            Weight::integral(&[-3, 1]),
            Weight::integral(&[-1, -1]),
            Weight::from_coords(vec![frac(-7, 2), frac(1, 3)]),
            Weight::from_coords(vec![frac(5, 2), frac(-5, 2)]),
        ] {
            let (point, el) = integrally_dominant_conjugate(&b2, &lam).unwrap();
            assert!(integrally_dominant(&b2, &point).unwrap(), "{lam}");
            assert_eq!(el.apply(&lam), point, "{lam}");
            assert!(chi_equal(&b2, &lam, &point).unwrap(), "{lam}");
        }
    }

    #[test]
    fn conjugate_is_deterministic() {
        let g2 = rs("G2");
        let lam = Weight::from_coords(vec![frac(-3, 2), frac(2, 1)]);
        let first = integrally_dominant_conjugate(&g2, &lam).unwrap();
        let second = integrally_dominant_conjugate(&g2, &lam).unwrap();
        assert_eq!(first.0, second.0);
        assert_eq!(first.1.matrix(), second.1.matrix());
    }
}
