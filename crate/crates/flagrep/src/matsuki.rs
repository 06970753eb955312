//! A concrete Matsuki-duality model: SU(1,1) and its complexified maximal
//! compact subgroup acting on the projective line.
//!
//! Points of `X = CP^1` carry homogeneous coordinates `[z : w]` with affine
//! coordinate `zeta = z / w`.  The complexified compact side `K ~ C*` acts
//! by `zeta -> a^2 zeta` and has the three orbits `{0}`, `{infinity}`, and
//! `C*`; the real form has the open unit disc, the boundary circle, and the
//! exterior.  K-side membership is decided by exact zero tests on the
//! normalized coordinates; the circle test on the real side compares
//! `|log|zeta||` against [`GR_BOUNDARY_EPSILON`].
//!
//! Matsuki duality pairs orbits whose intersection is exactly one orbit of
//! the compact real form `U(1)` (which acts by rigid rotations
//! `zeta -> e^{2 i theta} zeta`), and reverses the closure order.

use std::collections::BTreeSet;
use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Tolerance for the real-side boundary-circle test, applied to
/// `|log(|z| / |w|)|`.
pub const GR_BOUNDARY_EPSILON: f64 = 1e-9;

/// Convergence tolerance for closure-order limit sampling (chordal metric).
const LIMIT_TOLERANCE: f64 = 1e-6;

/// Fixed seed for the closure-sampling angle schedule.
const SCHEDULE_SEED: u64 = 0x004d_6174_7375_6b69;

const SCHEDULE_ANGLES: usize = 16;
const SCHEDULE_DEPTH: u32 = 24;

/// A point of `CP^1`, normalized so `max(|z|, |w|) = 1`.
///
/// Normalization divides by a positive real, so a coordinate equal to zero
/// stays exactly zero and the K-side zero tests remain exact.
#[derive(Clone, Copy, Debug)]
pub struct ProjPoint {
    z: Complex64,
    w: Complex64,
}

impl ProjPoint {
    /// `None` when both coordinates vanish.
    pub fn new(z: Complex64, w: Complex64) -> Option<Self> {
        let m = z.norm().max(w.norm());
        if m == 0.0 || !m.is_finite() {
            return None;
        }
        Some(ProjPoint { z: z / m, w: w / m })
    }

    pub fn from_affine(zeta: Complex64) -> Self {
        ProjPoint::new(zeta, Complex64::new(1.0, 0.0)).expect("w = 1 is nonzero")
    }

    /// The point `[0 : 1]` (affine coordinate 0).
    pub fn zero() -> Self {
        ProjPoint {
            z: Complex64::new(0.0, 0.0),
            w: Complex64::new(1.0, 0.0),
        }
    }

    /// The point `[1 : 0]`.
    pub fn infinity() -> Self {
        ProjPoint {
            z: Complex64::new(1.0, 0.0),
            w: Complex64::new(0.0, 0.0),
        }
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn w(&self) -> Complex64 {
        self.w
    }

    /// Affine coordinate `z / w`, absent at `[1 : 0]`.
    pub fn affine(&self) -> Option<Complex64> {
        if self.w.norm() == 0.0 {
            None
        } else {
            Some(self.z / self.w)
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {}]", self.z, self.w)
    }
}

/// Fubini-Study (chordal) distance on `CP^1`; vanishes exactly on equal
/// points and is bounded by 1.
pub fn chordal_distance(p: &ProjPoint, q: &ProjPoint) -> f64 {
    let cross = (p.z * q.w - q.z * p.w).norm();
    let np = (p.z.norm_sqr() + p.w.norm_sqr()).sqrt();
    let nq = (q.z.norm_sqr() + q.w.norm_sqr()).sqrt();
    cross / (np * nq)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    K,
    Gr,
}

/// The six orbits of the model, three per side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitLabel {
    Zero,
    Infinity,
    CStar,
    Disc,
    Circle,
    Exterior,
}

impl OrbitLabel {
    pub fn side(self) -> Side {
        match self {
            OrbitLabel::Zero | OrbitLabel::Infinity | OrbitLabel::CStar => Side::K,
            _ => Side::Gr,
        }
    }

    /// The Matsuki-dual orbit on the other side; an involution.
    pub fn dual(self) -> OrbitLabel {
        match self {
            OrbitLabel::Zero => OrbitLabel::Disc,
            OrbitLabel::Infinity => OrbitLabel::Exterior,
            OrbitLabel::CStar => OrbitLabel::Circle,
            OrbitLabel::Disc => OrbitLabel::Zero,
            OrbitLabel::Exterior => OrbitLabel::Infinity,
            OrbitLabel::Circle => OrbitLabel::CStar,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrbitLabel::Zero => "Zero",
            OrbitLabel::Infinity => "Infinity",
            OrbitLabel::CStar => "CStar",
            OrbitLabel::Disc => "Disc",
            OrbitLabel::Circle => "Circle",
            OrbitLabel::Exterior => "Exterior",
        }
    }

    pub fn k_orbits() -> [OrbitLabel; 3] {
        [OrbitLabel::Zero, OrbitLabel::Infinity, OrbitLabel::CStar]
    }

    pub fn gr_orbits() -> [OrbitLabel; 3] {
        [OrbitLabel::Disc, OrbitLabel::Circle, OrbitLabel::Exterior]
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Orbit membership of a point on the chosen side.
pub fn classify(p: &ProjPoint, side: Side) -> OrbitLabel {
    let z_zero = p.z.norm() == 0.0;
    let w_zero = p.w.norm() == 0.0;
    match side {
        Side::K => {
            if z_zero {
                OrbitLabel::Zero
            } else if w_zero {
                OrbitLabel::Infinity
            } else {
                OrbitLabel::CStar
            }
        }
        Side::Gr => {
            if z_zero {
                OrbitLabel::Disc
            } else if w_zero {
                OrbitLabel::Exterior
            } else {
                let t = (p.z.norm() / p.w.norm()).ln();
                if t.abs() < GR_BOUNDARY_EPSILON {
                    OrbitLabel::Circle
                } else if t < 0.0 {
                    OrbitLabel::Disc
                } else {
                    OrbitLabel::Exterior
                }
            }
        }
    }
}

/// The dual orbit (involution across sides).
pub fn matsuki_dual(q: OrbitLabel) -> OrbitLabel {
    q.dual()
}

/// Successful outcome of [`verify_duality`].
#[derive(Clone, Debug)]
pub struct DualityReport {
    pairs: Vec<(OrbitLabel, OrbitLabel)>,
    samples_per_pair: usize,
    rotation_checks: usize,
}

impl DualityReport {
    /// The verified dual pairs, K orbit first.
    pub fn pairs(&self) -> &[(OrbitLabel, OrbitLabel)] {
        &self.pairs
    }

    pub fn samples_per_pair(&self) -> usize {
        self.samples_per_pair
    }

    /// Number of rotation-equivalence assertions performed on the boundary
    /// circle.
    pub fn rotation_checks(&self) -> usize {
        self.rotation_checks
    }
}

fn check_sample(p: &ProjPoint, expect_k: OrbitLabel, expect_gr: OrbitLabel) -> Result<()> {
    let k = classify(p, Side::K);
    if k != expect_k {
        return Err(Error::SampleFailure {
            point: p.to_string(),
            reason: format!("classified {k} on the K side, expected {expect_k}"),
        });
    }
    let gr = classify(p, Side::Gr);
    if gr != expect_gr {
        return Err(Error::SampleFailure {
            point: p.to_string(),
            reason: format!("classified {gr} on the real side, expected {expect_gr}"),
        });
    }
    if k.dual() != gr {
        return Err(Error::SampleFailure {
            point: p.to_string(),
            reason: format!("witnesses the non-dual intersection {k} with {gr}"),
        });
    }
    Ok(())
}

/// Whether two unit-modulus affine coordinates are related by the compact
/// rotation action `zeta -> e^{2 i theta} zeta`: solves for `theta` and
/// checks the rotation reproduces `b`.
fn rotation_equivalent(a: Complex64, b: Complex64) -> bool {
    let theta = (b / a).arg() / 2.0;
    let rotated = Complex64::from_polar(1.0, 2.0 * theta) * a;
    (rotated - b).norm() < GR_BOUNDARY_EPSILON
}

/// Samples each dual intersection and asserts the duality pattern with a
/// caller-selected seed; see [`verify_duality_with`] for the
/// caller-owned-generator form.
pub fn verify_duality(samples: usize, seed: u64) -> Result<DualityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    verify_duality_with(&mut rng, samples)
}

/// Samples pseudorandom points in each dual intersection `Q` with `dual(Q)`
/// and asserts: every intersection is non-empty; every sampled point
/// classifies to the expected orbit on both sides (so no sample witnesses a
/// non-dual intersection — for the two single-point orbits this is an exact
/// emptiness proof for all four non-dual pairs involving them); and all
/// boundary samples lie in one rotation orbit.  Boundary samples are
/// constructed to lie exactly on `|z| = |w|`.
pub fn verify_duality_with<R: Rng>(rng: &mut R, samples: usize) -> Result<DualityReport> {
    if samples == 0 {
        return Err(Error::SampleFailure {
            point: "(none)".into(),
            reason: "at least one sample per intersection is required".into(),
        });
    }

    // Zero and Infinity intersect their duals in a single point each.
    check_sample(&ProjPoint::zero(), OrbitLabel::Zero, OrbitLabel::Disc)?;
    check_sample(&ProjPoint::infinity(), OrbitLabel::Infinity, OrbitLabel::Exterior)?;

    // CStar and Circle intersect in the full boundary circle.
    let one = Complex64::new(1.0, 0.0);
    let mut boundary = Vec::with_capacity(samples);
    for _ in 0..samples {
        let theta = rng.gen::<f64>() * TAU;
        let p = ProjPoint::new(Complex64::from_polar(1.0, theta), one)
            .expect("unit-modulus coordinate is nonzero");
        check_sample(&p, OrbitLabel::CStar, OrbitLabel::Circle)?;
        boundary.push(p.affine().expect("w = 1"));
    }

    // Rotation equivalence of the first sample with every other; rotations
    // compose, so pairwise equivalence follows.
    let mut rotation_checks = 0usize;
    for other in &boundary[1..] {
        if !rotation_equivalent(boundary[0], *other) {
            return Err(Error::SampleFailure {
                point: format!("{other}"),
                reason: "boundary samples are not rotation-equivalent".into(),
            });
        }
        rotation_checks += 1;
    }

    Ok(DualityReport {
        pairs: vec![
            (OrbitLabel::Zero, OrbitLabel::Disc),
            (OrbitLabel::Infinity, OrbitLabel::Exterior),
            (OrbitLabel::CStar, OrbitLabel::Circle),
        ],
        samples_per_pair: samples,
        rotation_checks,
    })
}

/// The closure order on one side's orbits: `a <= b` means `a` lies in the
/// closure of `b`.
#[derive(Clone, Debug)]
pub struct OrbitPoset {
    side: Side,
    elements: Vec<OrbitLabel>,
    relation: BTreeSet<(OrbitLabel, OrbitLabel)>,
}

impl OrbitPoset {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn elements(&self) -> &[OrbitLabel] {
        &self.elements
    }

    pub fn leq(&self, a: OrbitLabel, b: OrbitLabel) -> bool {
        self.relation.contains(&(a, b))
    }

    /// All related pairs `(a, b)` with `a <= b`, in a deterministic order.
    pub fn pairs(&self) -> impl Iterator<Item = &(OrbitLabel, OrbitLabel)> {
        self.relation.iter()
    }

    pub fn is_partial_order(&self) -> bool {
        let els = &self.elements;
        let reflexive = els.iter().all(|&a| self.leq(a, a));
        let antisymmetric = els.iter().all(|&a| {
            els.iter()
                .all(|&b| !(self.leq(a, b) && self.leq(b, a)) || a == b)
        });
        let transitive = els.iter().all(|&a| {
            els.iter().all(|&b| {
                els.iter()
                    .all(|&c| !(self.leq(a, b) && self.leq(b, c)) || self.leq(a, c))
            })
        });
        reflexive && antisymmetric && transitive
    }
}

/// Outcome of checking that duality reverses the two closure orders.
#[derive(Clone, Debug)]
pub struct ReversalCertificate {
    holds: bool,
    checked_pairs: Vec<((OrbitLabel, OrbitLabel), bool)>,
}

impl ReversalCertificate {
    pub fn holds(&self) -> bool {
        self.holds
    }

    /// Every ordered K-side pair `(a, b)` with the outcome of the test
    /// `a <= b  iff  dual(b) <= dual(a)`.
    pub fn checked_pairs(&self) -> &[((OrbitLabel, OrbitLabel), bool)] {
        &self.checked_pairs
    }
}

/// One scheduled limit family: points of `orbit` converging to `limit`.
struct LimitFamily {
    orbit: OrbitLabel,
    points: Vec<ProjPoint>,
    limit: ProjPoint,
}

fn limit_families(side: Side) -> Vec<LimitFamily> {
    let mut rng = ChaCha8Rng::seed_from_u64(SCHEDULE_SEED);
    let angles: Vec<f64> = (0..SCHEDULE_ANGLES).map(|_| rng.gen::<f64>() * TAU).collect();
    let inward: Vec<f64> = (1..=SCHEDULE_DEPTH).map(|j| 0.5f64.powi(j as i32)).collect();
    let mut families = Vec::new();
    for &theta in &angles {
        let along = |r: f64| ProjPoint::from_affine(Complex64::from_polar(r, theta));
        match side {
            Side::K => {
                // C* limits onto both point orbits.
                families.push(LimitFamily {
                    orbit: OrbitLabel::CStar,
                    points: inward.iter().map(|&r| along(r)).collect(),
                    limit: ProjPoint::zero(),
                });
                families.push(LimitFamily {
                    orbit: OrbitLabel::CStar,
                    points: inward.iter().map(|&r| along(1.0 / r)).collect(),
                    limit: ProjPoint::infinity(),
                });
            }
            Side::Gr => {
                // The disc and the exterior both limit onto the circle.
                families.push(LimitFamily {
                    orbit: OrbitLabel::Disc,
                    points: inward.iter().map(|&r| along(1.0 - r)).collect(),
                    limit: along(1.0),
                });
                families.push(LimitFamily {
                    orbit: OrbitLabel::Exterior,
                    points: inward.iter().map(|&r| along(1.0 + r)).collect(),
                    limit: along(1.0),
                });
                families.push(LimitFamily {
                    orbit: OrbitLabel::Exterior,
                    points: inward.iter().map(|&r| along(1.0 / r)).collect(),
                    limit: ProjPoint::infinity(),
                });
                families.push(LimitFamily {
                    orbit: OrbitLabel::Disc,
                    points: inward.iter().map(|&r| along(r)).collect(),
                    limit: ProjPoint::zero(),
                });
            }
        }
    }
    families
}

fn closure_relation(side: Side) -> BTreeSet<(OrbitLabel, OrbitLabel)> {
    let elements = match side {
        Side::K => OrbitLabel::k_orbits(),
        Side::Gr => OrbitLabel::gr_orbits(),
    };
    let mut relation: BTreeSet<(OrbitLabel, OrbitLabel)> =
        elements.iter().map(|&q| (q, q)).collect();
    for family in limit_families(side) {
        // Every scheduled point must really lie in the claimed orbit, and
        // the sequence must converge to the claimed limit.
        for p in &family.points {
            assert_eq!(
                classify(p, side),
                family.orbit,
                "closure schedule left its orbit at {p}"
            );
        }
        let distances: Vec<f64> = family
            .points
            .iter()
            .map(|p| chordal_distance(p, &family.limit))
            .collect();
        assert!(
            distances.windows(2).all(|d| d[1] <= d[0]),
            "closure schedule does not approach its limit"
        );
        assert!(
            *distances.last().unwrap() < LIMIT_TOLERANCE,
            "closure schedule stalls short of its limit"
        );
        relation.insert((classify(&family.limit, side), family.orbit));
    }
    relation
}

/// Computes both closure posets by limit sampling along a fixed seeded
/// schedule (radii descending to 0, to the unit circle from both sides, and
/// growing to infinity, along 16 pseudorandom angles), then certifies that
/// the duality bijection reverses them.
pub fn closure_posets() -> (OrbitPoset, OrbitPoset, ReversalCertificate) {
    let k = OrbitPoset {
        side: Side::K,
        elements: OrbitLabel::k_orbits().to_vec(),
        relation: closure_relation(Side::K),
    };
    let gr = OrbitPoset {
        side: Side::Gr,
        elements: OrbitLabel::gr_orbits().to_vec(),
        relation: closure_relation(Side::Gr),
    };
    let mut checked_pairs = Vec::new();
    let mut holds = k.is_partial_order() && gr.is_partial_order();
    for &a in &k.elements {
        for &b in &k.elements {
            let consistent = k.leq(a, b) == gr.leq(b.dual(), a.dual());
            holds &= consistent;
            checked_pairs.push(((a, b), consistent));
        }
    }
    (
        k,
        gr,
        ReversalCertificate {
            holds,
            checked_pairs,
        },
    )
}
