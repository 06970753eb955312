//! Borel-Weil-Bott: sheaf cohomology of the line bundle `L_lambda` on the
//! full flag variety.
//!
//! For a lattice weight `lambda` the dichotomy is exact: if `lambda + rho`
//! is singular every cohomology group vanishes; otherwise cohomology is
//! concentrated in the single degree
//! `p(lambda) = #{alpha > 0 : (lambda + rho, alpha) < 0}`, where it is the
//! irreducible representation with highest weight `w(lambda + rho) - rho`
//! for the unique `w` making `w(lambda + rho)` dominant.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use crate::cartan::{RootSystem, Weight};
use crate::error::{Error, Result};
use crate::highrep;
use crate::ratmat::{self, Rat};
use crate::weyl::{self, WeylElement};

/// Outcome of the Borel-Weil-Bott computation for one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomologyResult {
    /// `lambda + rho` singular: all cohomology groups are zero.
    Vanishes,
    /// Cohomology concentrated in one degree.
    NonVanishing {
        degree: usize,
        highest_weight: Weight,
        dimension: BigUint,
        /// The element carrying `lambda + rho` to the dominant chamber.
        w_used: WeylElement,
    },
}

impl CohomologyResult {
    pub fn vanishes(&self) -> bool {
        matches!(self, CohomologyResult::Vanishes)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            CohomologyResult::Vanishes => None,
            CohomologyResult::NonVanishing { degree, .. } => Some(*degree),
        }
    }

    pub fn highest_weight(&self) -> Option<&Weight> {
        match self {
            CohomologyResult::Vanishes => None,
            CohomologyResult::NonVanishing { highest_weight, .. } => Some(highest_weight),
        }
    }

    pub fn dimension(&self) -> Option<&BigUint> {
        match self {
            CohomologyResult::Vanishes => None,
            CohomologyResult::NonVanishing { dimension, .. } => Some(dimension),
        }
    }

    pub fn w_used(&self) -> Option<&WeylElement> {
        match self {
            CohomologyResult::Vanishes => None,
            CohomologyResult::NonVanishing { w_used, .. } => Some(w_used),
        }
    }
}

/// The paired results of `bwb` at `lambda` and at the Serre-dual weight
/// `-lambda - 2 rho`.
#[derive(Clone, Debug)]
pub struct SerreReport {
    lambda: Weight,
    dual_lambda: Weight,
    at_lambda: CohomologyResult,
    at_dual: CohomologyResult,
}

impl SerreReport {
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn dual_lambda(&self) -> &Weight {
        &self.dual_lambda
    }

    pub fn at_lambda(&self) -> &CohomologyResult {
        &self.at_lambda
    }

    pub fn at_dual(&self) -> &CohomologyResult {
        &self.at_dual
    }

    pub fn both_vanish(&self) -> bool {
        self.at_lambda.vanishes() && self.at_dual.vanishes()
    }
}

/// Sheaf cohomology of `L_lambda`; `lambda` must lie in the weight lattice.
pub fn bwb(rs: &RootSystem, lambda: &Weight) -> Result<CohomologyResult> {
    if lambda.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: lambda.rank(),
        });
    }
    if !lambda.is_integral() {
        return Err(Error::NonIntegerWeight {
            weight: lambda.to_string(),
        });
    }
    let shifted = lambda + rs.rho();
    if !highrep::is_regular(rs, &shifted)? {
        return Ok(CohomologyResult::Vanishes);
    }
    let degree = rs
        .positive_roots()
        .iter()
        .filter(|alpha| {
            rs.inner_product(&shifted, alpha.weight())
                .expect("rank already checked")
                .is_negative()
        })
        .count();
    let (dominant, w_used) = weyl::make_dominant(rs, &shifted)?;
    let highest_weight = &dominant - rs.rho();
    let dimension = highrep::weyl_dimension(rs, &highest_weight)?;
    Ok(CohomologyResult::NonVanishing {
        degree,
        highest_weight,
        dimension,
        w_used,
    })
}

/// The Euler characteristic `sum_p (-1)^p dim H^p(X, L_lambda)`, computed
/// directly as the product `prod_{alpha > 0} (lambda + rho, alpha) / (rho,
/// alpha)`; zero exactly when `lambda + rho` is singular.
pub fn euler_characteristic(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    if lambda.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: lambda.rank(),
        });
    }
    if !lambda.is_integral() {
        return Err(Error::NonIntegerWeight {
            weight: lambda.to_string(),
        });
    }
    let shifted = lambda + rs.rho();
    let mut quotient = Rat::one();
    for alpha in rs.positive_roots() {
        let num = rs.inner_product(&shifted, alpha.weight())?;
        let den = rs.inner_product(rs.rho(), alpha.weight())?;
        quotient = quotient * num / den;
    }
    if !quotient.is_integer() {
        return Err(Error::NonIntegerResult {
            context: "Euler characteristic product",
            value: quotient.to_string(),
        });
    }
    Ok(quotient.to_integer())
}

/// Runs `bwb` at `lambda` and at `-lambda - 2 rho` and asserts Serre
/// duality: either both vanish, or the degrees sum to `|Phi+|` (the complex
/// dimension of the flag variety) with equal dimensions.
pub fn serre_dual_check(rs: &RootSystem, lambda: &Weight) -> Result<SerreReport> {
    let dual_lambda = &(-lambda) - &rs.rho().scaled(&ratmat::rat(2));
    let at_lambda = bwb(rs, lambda)?;
    let at_dual = bwb(rs, &dual_lambda)?;
    match (&at_lambda, &at_dual) {
        (CohomologyResult::Vanishes, CohomologyResult::Vanishes) => {}
        (
            CohomologyResult::NonVanishing {
                degree: p,
                dimension: d,
                ..
            },
            CohomologyResult::NonVanishing {
                degree: q,
                dimension: e,
                ..
            },
        ) => {
            if p + q != rs.num_positive() {
                return Err(Error::SerreMismatch {
                    weight: lambda.to_string(),
                    detail: format!(
                        "degrees {p} + {q} != {}",
                        rs.num_positive()
                    ),
                });
            }
            if d != e {
                return Err(Error::SerreMismatch {
                    weight: lambda.to_string(),
                    detail: format!("dimensions {d} != {e}"),
                });
            }
        }
        _ => {
            return Err(Error::SerreMismatch {
                weight: lambda.to_string(),
                detail: "one side vanishes and the other does not".into(),
            });
        }
    }
    Ok(SerreReport {
        lambda: lambda.clone(),
        dual_lambda,
        at_lambda,
        at_dual,
    })
}

/// `bwb` over every lattice point of a coordinate box, in lexicographic
/// order.  `ranges[i]` is the inclusive interval for coordinate `i`; an
/// empty interval yields an empty table.
pub fn bwb_table(
    rs: &RootSystem,
    ranges: &[(i64, i64)],
    limit: usize,
) -> Result<Vec<(Weight, CohomologyResult)>> {
    if ranges.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: ranges.len(),
        });
    }
    let mut volume: u128 = 1;
    for &(lo, hi) in ranges {
        if hi < lo {
            return Ok(Vec::new());
        }
        volume = volume.saturating_mul((hi - lo + 1) as u128);
    }
    if volume > limit as u128 {
        return Err(Error::ResourceLimit {
            what: "bwb table",
            needed: volume,
            cap: limit as u128,
        });
    }
    let rank = rs.rank();
    let mut out = Vec::with_capacity(volume as usize);
    let mut coords: Vec<i64> = ranges.iter().map(|&(lo, _)| lo).collect();
    loop {
        let lambda = Weight::integral(&coords);
        let result = bwb(rs, &lambda)?;
        out.push((lambda, result));
        // Advance the least-significant (last) coordinate first, so rows come
        // out in lexicographic order.
        let mut pos = rank;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            coords[pos] += 1;
            if coords[pos] <= ranges[pos].1 {
                break;
            }
            coords[pos] = ranges[pos].0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    #[test]
    fn minus_rho_vanishes_identically() {
        let a1 = rs("A1");
        assert_eq!(bwb(&a1, &Weight::integral(&[-1])).unwrap(), CohomologyResult::Vanishes);
        let a2 = rs("A2");
        assert_eq!(
            bwb(&a2, &Weight::integral(&[-1, -1])).unwrap(),
            CohomologyResult::Vanishes
        );
        // Singular on a non-simple wall.
        assert_eq!(
            bwb(&a2, &Weight::integral(&[-3, 1])).unwrap(),
            CohomologyResult::Vanishes
        );
    }

    #[test]
    fn dominant_weights_live_in_degree_zero() {
        let b2 = rs("B2");
        for a in 0..=3i64 {
            for b in 0..=3i64 {
                let lam = Weight::integral(&[a, b]);
                let res = bwb(&b2, &lam).unwrap();
                assert_eq!(res.degree(), Some(0));
                assert_eq!(res.highest_weight(), Some(&lam));
                assert_eq!(
                    res.dimension(),
                    Some(&highrep::weyl_dimension(&b2, &lam).unwrap())
                );
                assert!(res.w_used().unwrap().is_identity());
            }
        }
    }

    #[test]
    fn a1_negative_side() {
        let a1 = rs("A1");
        let res = bwb(&a1, &Weight::integral(&[-3])).unwrap();
        assert_eq!(res.degree(), Some(1));
        assert_eq!(res.highest_weight(), Some(&Weight::integral(&[1])));
        assert_eq!(res.dimension(), Some(&BigUint::from(2u32)));
        let res = bwb(&a1, &Weight::integral(&[-2])).unwrap();
        assert_eq!(res.degree(), Some(1));
        assert_eq!(res.highest_weight(), Some(&Weight::integral(&[0])));
        assert_eq!(res.dimension(), Some(&BigUint::from(1u32)));
    }

    #[test]
    fn a2_interior_degree() {
        let a2 = rs("A2");
        let res = bwb(&a2, &Weight::integral(&[-3, 0])).unwrap();
        assert_eq!(res.degree(), Some(2));
        assert_eq!(res.highest_weight(), Some(&Weight::zero(2)));
        assert_eq!(res.dimension(), Some(&BigUint::one()));
        assert_eq!(res.w_used().unwrap().inversions(&a2), 2);
    }

    #[test]
    fn degree_is_the_inversion_count_of_w() {
        let g2 = rs("G2");
        for a in -4..=2i64 {
            for b in -4..=2i64 {
                let res = bwb(&g2, &Weight::integral(&[a, b])).unwrap();
                if let CohomologyResult::NonVanishing { degree, w_used, .. } = res {
                    assert!(degree <= g2.num_positive());
                    assert_eq!(degree, w_used.inversions(&g2), "{a},{b}");
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_examples() {
        let a1 = rs("A1");
        assert_eq!(euler_characteristic(&a1, &Weight::integral(&[2])).unwrap(), BigInt::from(3));
        assert_eq!(
            euler_characteristic(&a1, &Weight::integral(&[-3])).unwrap(),
            BigInt::from(-2)
        );
        assert!(euler_characteristic(&a1, &Weight::integral(&[-1])).unwrap().is_zero());
    }

    #[test]
    fn euler_matches_alternating_sum_on_a_grid() {
        let a2 = rs("A2");
        for a in -4..=3i64 {
            for b in -4..=3i64 {
                let lam = Weight::integral(&[a, b]);
                let chi = euler_characteristic(&a2, &lam).unwrap();
                match bwb(&a2, &lam).unwrap() {
                    CohomologyResult::Vanishes => assert!(chi.is_zero(), "{a},{b}"),
                    CohomologyResult::NonVanishing { degree, dimension, .. } => {
                        let mut expected = BigInt::from(dimension);
                        if degree % 2 == 1 {
                            expected = -expected;
                        }
                        assert_eq!(chi, expected, "{a},{b}");
                    }
                }
            }
        }
    }

    #[test]
    fn serre_pairs() {
        let a1 = rs("A1");
        let report = serre_dual_check(&a1, &Weight::integral(&[2])).unwrap();
        assert_eq!(report.dual_lambda(), &Weight::integral(&[-4]));
        assert_eq!(report.at_lambda().degree(), Some(0));
        assert_eq!(report.at_dual().degree(), Some(1));
        assert_eq!(report.at_lambda().dimension(), report.at_dual().dimension());

        let report = serre_dual_check(&a1, &Weight::integral(&[-1])).unwrap();
        assert!(report.both_vanish());

        let a2 = rs("A2");
        let report = serre_dual_check(&a2, &Weight::integral(&[1, 0])).unwrap();
        assert_eq!(report.dual_lambda(), &Weight::integral(&[-3, -2]));
        assert_eq!(report.at_lambda().degree(), Some(0));
        assert_eq!(report.at_dual().degree(), Some(3));
        assert_eq!(report.at_lambda().dimension(), Some(&BigUint::from(3u32)));
        assert_eq!(report.at_dual().dimension(), Some(&BigUint::from(3u32)));
    }

    #[test]
    fn a1_table_pattern() {
        let a1 = rs("A1");
        let table = bwb_table(&a1, &[(-4, 4)], 1000).unwrap();
        assert_eq!(table.len(), 9);
        let degrees: Vec<Option<usize>> = table.iter().map(|(_, r)| r.degree()).collect();
        assert_eq!(
            degrees,
            vec![
                Some(1),
                Some(1),
                Some(1),
                None,
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0)
            ]
        );
        assert_eq!(table[0].0, Weight::integral(&[-4]));
        assert_eq!(table[8].0, Weight::integral(&[4]));
    }

    #[test]
    fn table_is_lexicographic_and_capped() {
        let a2 = rs("A2");
        let table = bwb_table(&a2, &[(-1, 0), (2, 3)], 100).unwrap();
        let order: Vec<Vec<i64>> = table
            .iter()
            .map(|(w, _)| {
                w.integer_coords()
                    .unwrap()
                    .iter()
                    .map(|c| i64::try_from(c).unwrap())
                    .collect()
            })
            .collect();
        assert_eq!(
            order,
            vec![vec![-1, 2], vec![-1, 3], vec![0, 2], vec![0, 3]]
        );
        assert!(matches!(
            bwb_table(&a2, &[(-50, 50), (-50, 50)], 100),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(bwb_table(&a2, &[(2, 1), (0, 0)], 100).unwrap().is_empty());
    }

    #[test]
    fn non_lattice_weights_are_rejected() {
        let a1 = rs("A1");
        let half = Weight::from_coords(vec![Rat::new(BigInt::from(1), BigInt::from(2))]);
        assert!(matches!(
            bwb(&a1, &half),
            Err(Error::NonIntegerWeight { .. })
        ));
        assert!(matches!(
            euler_characteristic(&a1, &half),
            Err(Error::NonIntegerWeight { .. })
        ));
    }
}
