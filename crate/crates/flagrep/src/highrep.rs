//! Finite-dimensional irreducible representations by highest weight:
//! dominance and regularity tests, the Weyl dimension formula, and the full
//! weight multiplicity system via Freudenthal's recursion.

use std::collections::{HashMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::cartan::{RootSystem, Weight};
use crate::error::{Error, Result};
use crate::ratmat::{self, Rat};
use crate::weyl;

/// Default cap on the number of enumerated weights (and on the dominant
/// search box) in `weight_system`.
pub const DEFAULT_WEIGHT_LIMIT: usize = 1_000_000;

/// An irreducible representation described by its weight data.
///
/// `dimension` always equals the sum of the multiplicities in `weights`.
#[derive(Clone, Debug)]
pub struct IrrepDescriptor {
    highest_weight: Weight,
    dimension: BigUint,
    weights: HashMap<Weight, BigUint>,
}

impl IrrepDescriptor {
    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn dimension(&self) -> &BigUint {
        &self.dimension
    }

    pub fn weights(&self) -> &HashMap<Weight, BigUint> {
        &self.weights
    }

    pub fn multiplicity(&self, w: &Weight) -> BigUint {
        self.weights.get(w).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Weights in descending lexicographic coordinate order (the highest
    /// weight first); a deterministic order for display and serialization.
    pub fn sorted_weights(&self) -> Vec<(&Weight, &BigUint)> {
        let mut out: Vec<(&Weight, &BigUint)> = self.weights.iter().collect();
        out.sort_by(|a, b| b.0.cmp_lex(a.0));
        out
    }
}

/// True when `(lambda, alpha) >= 0` for every positive root.
pub fn is_dominant(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    for alpha in rs.positive_roots() {
        if rs.inner_product(lambda, alpha.weight())?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True when `(lambda, alpha) != 0` for every root.
pub fn is_regular(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    for alpha in rs.positive_roots() {
        if rs.inner_product(lambda, alpha.weight())?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of the irreducible representation with highest weight `lambda`
/// by the Weyl dimension formula
/// `prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha)`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigUint> {
    if !is_dominant(rs, lambda)? {
        return Err(Error::NotDominant {
            weight: lambda.to_string(),
        });
    }
    if !lambda.is_integral() {
        return Err(Error::NonIntegerWeight {
            weight: lambda.to_string(),
        });
    }
    let shifted = lambda + rs.rho();
    let mut quotient = Rat::from_integer(BigInt::from(1));
    for alpha in rs.positive_roots() {
        let num = rs.inner_product(&shifted, alpha.weight())?;
        let den = rs.inner_product(rs.rho(), alpha.weight())?;
        quotient = quotient * num / den;
    }
    if !quotient.is_integer() {
        return Err(Error::NonIntegerResult {
            context: "Weyl dimension formula",
            value: quotient.to_string(),
        });
    }
    Ok(quotient
        .to_integer()
        .to_biguint()
        .expect("dimension factors are all positive"))
}

/// Full weight system of the irreducible representation with highest weight
/// `lambda`, with the default resource cap.
pub fn weight_system(rs: &RootSystem, lambda: &Weight) -> Result<IrrepDescriptor> {
    weight_system_with_limit(rs, lambda, DEFAULT_WEIGHT_LIMIT)
}

/// Full weight system with an explicit cap.
///
/// Multiplicities are computed on dominant weights only, in decreasing
/// height by Freudenthal's recursion
/// `(|lambda+rho|^2 - |mu+rho|^2) m(mu) =
///  2 sum_{alpha>0} sum_{k>=1} (mu + k alpha, alpha) m(mu + k alpha)`,
/// then spread over Weyl orbits.  The cap bounds both the dominant search
/// box and the total number of weights produced.
pub fn weight_system_with_limit(
    rs: &RootSystem,
    lambda: &Weight,
    limit: usize,
) -> Result<IrrepDescriptor> {
    if !is_dominant(rs, lambda)? {
        return Err(Error::NotDominant {
            weight: lambda.to_string(),
        });
    }
    if !lambda.is_integral() {
        return Err(Error::NonIntegerWeight {
            weight: lambda.to_string(),
        });
    }
    let rank = rs.rank();

    // Dominant weights mu of the representation are exactly the dominant
    // lattice points with lambda - mu a nonnegative integer combination of
    // simple roots; the combination's coefficients lie in a box bounded by
    // the simple-root coordinates of lambda.
    let bounds_rat = rs.simple_coords_of(lambda)?;
    let mut volume = BigInt::from(1);
    for b in &bounds_rat {
        volume *= b.floor().to_integer() + 1;
    }
    if volume > BigInt::from(limit) {
        return Err(Error::ResourceLimit {
            what: "dominant weight search box",
            needed: volume.to_string().parse().unwrap_or(u128::MAX),
            cap: limit as u128,
        });
    }
    let bounds: Vec<i64> = bounds_rat
        .iter()
        .map(|b| {
            i64::try_from(b.floor().to_integer()).expect("box bound fits i64 once capped")
        })
        .collect();

    let mut dominants: Vec<(i64, Weight)> = Vec::new();
    let mut counter = vec![0i64; rank];
    loop {
        let coords: Vec<Rat> = (0..rank)
            .map(|j| {
                let drop: i64 = (0..rank).map(|i| counter[i] * rs.cartan().entry(i, j)).sum();
                lambda.coord(j) - ratmat::rat(drop)
            })
            .collect();
        if coords.iter().all(|c| !c.is_negative()) {
            dominants.push((counter.iter().sum(), Weight::from_coords(coords)));
        }
        // Odometer step through the box.
        let mut pos = 0;
        loop {
            if pos == rank {
                break;
            }
            counter[pos] += 1;
            if counter[pos] <= bounds[pos] {
                break;
            }
            counter[pos] = 0;
            pos += 1;
        }
        if pos == rank {
            break;
        }
    }
    dominants.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp_lex(&b.1)));

    let dominant_set: HashSet<Weight> = dominants.iter().map(|(_, w)| w.clone()).collect();
    let shifted_top = lambda + rs.rho();
    let top_norm = rs.inner_product(&shifted_top, &shifted_top)?;

    let mut mult: HashMap<Weight, BigUint> = HashMap::new();
    for (height, mu) in &dominants {
        if *height == 0 {
            mult.insert(mu.clone(), BigUint::from(1u32));
            continue;
        }
        let shifted = mu + rs.rho();
        let denom = &top_norm - rs.inner_product(&shifted, &shifted)?;
        let mut sum = Rat::zero();
        for alpha in rs.positive_roots() {
            let mut k: i64 = 1;
            loop {
                let nu = mu + &alpha.weight().scaled(&ratmat::rat(k));
                let (dom_nu, _) = weyl::make_dominant(rs, &nu)?;
                if !dominant_set.contains(&dom_nu) {
                    break; // weights along a root direction form one string
                }
                let m = mult
                    .get(&dom_nu)
                    .expect("multiplicities closer to the highest weight come first");
                let m_rat = Rat::from_integer(BigInt::from(m.clone()));
                sum += rs.inner_product(&nu, alpha.weight())? * m_rat;
                k += 1;
            }
        }
        let value = ratmat::rat(2) * sum / &denom;
        if !value.is_integer() || !value.is_positive() {
            return Err(Error::NonIntegerResult {
                context: "Freudenthal recursion",
                value: value.to_string(),
            });
        }
        mult.insert(
            mu.clone(),
            value
                .to_integer()
                .to_biguint()
                .expect("multiplicity is positive"),
        );
    }

    let mut weights: HashMap<Weight, BigUint> = HashMap::new();
    for (_, mu) in &dominants {
        let m = mult[mu].clone();
        for point in weyl::orbit(rs, mu)? {
            weights.insert(point, m.clone());
            if weights.len() > limit {
                return Err(Error::ResourceLimit {
                    what: "weight system",
                    needed: weights.len() as u128,
                    cap: limit as u128,
                });
            }
        }
    }
    let dimension = weights.values().fold(BigUint::zero(), |s, m| s + m);

    Ok(IrrepDescriptor {
        highest_weight: lambda.clone(),
        dimension,
        weights,
    })
}
