//! The Weyl group acting on weights: simple reflections, dominant
//! representatives, orbits, and chamber classification.
//!
//! Group elements are stored as words in the simple reflections together
//! with their integer action matrix on fundamental-weight coordinates;
//! equality and hashing use only the matrix, since distinct words can name
//! the same element.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::{Signed, Zero};

use crate::cartan::{RootSystem, Weight};
use crate::error::{Error, Result};
use crate::ratmat::{self, Rat};

#[derive(Clone, Debug)]
pub struct WeylElement {
    /// Generator indices in application order (first applied first).  Not
    /// necessarily a reduced word.
    word: Vec<usize>,
    /// Action on fundamental-weight coordinates (column convention).
    matrix: Vec<Vec<i64>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let matrix = (0..rank)
            .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
            .collect();
        WeylElement { word: Vec::new(), matrix }
    }

    /// The simple reflection `s_i`.
    pub fn simple(rs: &RootSystem, i: usize) -> Result<Self> {
        let rank = rs.rank();
        if i >= rank {
            return Err(Error::IndexOutOfRange { index: i, rank });
        }
        // (s_i lambda)_j = lambda_j - A[i][j] lambda_i.
        let mut matrix: Vec<Vec<i64>> = (0..rank)
            .map(|r| (0..rank).map(|c| i64::from(r == c)).collect())
            .collect();
        for j in 0..rank {
            matrix[j][i] -= rs.cartan().entry(i, j);
        }
        Ok(WeylElement { word: vec![i], matrix })
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.matrix.len();
        let mut matrix = vec![vec![0i64; n]; n];
        for r in 0..n {
            for c in 0..n {
                matrix[r][c] = (0..n).map(|k| self.matrix[r][k] * other.matrix[k][c]).sum();
            }
        }
        let mut word = other.word.clone();
        word.extend_from_slice(&self.word);
        WeylElement { word, matrix }
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let n = self.matrix.len();
        assert_eq!(w.rank(), n, "weight rank mismatch");
        let coords = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| ratmat::rat(self.matrix[r][c]) * w.coord(c))
                    .fold(Rat::zero(), |s, t| s + t)
            })
            .collect();
        Weight::from_coords(coords)
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &v)| v == i64::from(i == j)))
    }

    /// The number of positive roots sent to negative roots; this is the
    /// Coxeter length, independent of the stored word.
    pub fn inversions(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|alpha| {
                let image = self.apply(alpha.weight());
                let root = rs
                    .root_of_weight(&image)
                    .expect("Weyl elements permute the roots");
                !root.is_positive()
            })
            .count()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.word.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join("."))
    }
}

/// Sign pattern of a regular weight against the positive roots, identifying
/// its Weyl chamber.
///
/// The first `rank` entries are the simple-root signs in index order; the
/// remaining entries cover the other positive roots in the root system's
/// canonical order.  Simple-root signs alone do not separate chambers (in
/// A2 the patterns `(-,+)` and `(+,-)` each cover two chambers), so the tag
/// keeps the full vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChamberTag {
    signs: Vec<i8>,
}

impl ChamberTag {
    /// Entries are `+1` or `-1`; zeros cannot occur because tags are only
    /// issued for regular weights.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// The per-simple-root prefix of the sign vector.
    pub fn simple_signs(&self, rank: usize) -> &[i8] {
        &self.signs[..rank]
    }

    pub fn is_dominant(&self) -> bool {
        self.signs.iter().all(|&s| s > 0)
    }
}

impl fmt::Display for ChamberTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.signs.iter().map(|&s| if s > 0 { "+" } else { "-" }).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Applies `s_i` to a weight: `lambda - lambda_i * alpha_i`.
pub fn simple_reflection(rs: &RootSystem, i: usize, lambda: &Weight) -> Result<Weight> {
    let rank = rs.rank();
    if i >= rank {
        return Err(Error::IndexOutOfRange { index: i, rank });
    }
    if lambda.rank() != rank {
        return Err(Error::DimensionMismatch {
            expected: rank,
            got: lambda.rank(),
        });
    }
    let li = lambda.coord(i).clone();
    let coords = (0..rank)
        .map(|j| lambda.coord(j) - &li * ratmat::rat(rs.cartan().entry(i, j)))
        .collect();
    Ok(Weight::from_coords(coords))
}

/// The unique dominant point of the orbit, together with an element carrying
/// `lambda` to it.
///
/// The algorithm reflects at the lowest index with a negative coordinate;
/// each step removes exactly one inversion, so it terminates within
/// `|Phi+|` steps.  The returned word need not be reduced.
pub fn make_dominant(rs: &RootSystem, lambda: &Weight) -> Result<(Weight, WeylElement)> {
    if lambda.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: lambda.rank(),
        });
    }
    let mut current = lambda.clone();
    let mut element = WeylElement::identity(rs.rank());
    let cap = rs.num_positive() + rs.rank() + 8;
    let mut steps = 0usize;
    loop {
        match (0..rs.rank()).find(|&i| current.coord(i).is_negative()) {
            None => return Ok((current, element)),
            Some(i) => {
                steps += 1;
                if steps > cap {
                    return Err(Error::NonTermination("make_dominant"));
                }
                current = simple_reflection(rs, i, &current)?;
                element = WeylElement::simple(rs, i)?.compose(&element);
            }
        }
    }
}

/// The Weyl orbit of a weight, in deterministic breadth-first order starting
/// from `lambda`.
pub fn orbit(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    if lambda.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: lambda.rank(),
        });
    }
    let mut out = vec![lambda.clone()];
    let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(w) = queue.pop_front() {
        for i in 0..rs.rank() {
            let image = simple_reflection(rs, i, &w)?;
            if seen.insert(image.clone()) {
                out.push(image.clone());
                queue.push_back(image);
            }
        }
    }
    Ok(out)
}

/// Weyl orbit with, for each point, one group element carrying `lambda`
/// there (the breadth-first-shortest one).
pub fn orbit_with_elements(
    rs: &RootSystem,
    lambda: &Weight,
) -> Result<Vec<(Weight, WeylElement)>> {
    if lambda.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: lambda.rank(),
        });
    }
    let identity = WeylElement::identity(rs.rank());
    let mut out = vec![(lambda.clone(), identity.clone())];
    let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([(lambda.clone(), identity)]);
    while let Some((w, el)) = queue.pop_front() {
        for i in 0..rs.rank() {
            let image = simple_reflection(rs, i, &w)?;
            if seen.insert(image.clone()) {
                let next = WeylElement::simple(rs, i)?.compose(&el);
                out.push((image.clone(), next.clone()));
                queue.push_back((image, next));
            }
        }
    }
    Ok(out)
}

/// Order of the Weyl group, computed as the orbit size of the regular weight
/// `rho`.
pub fn weyl_order(rs: &RootSystem) -> u64 {
    orbit(rs, rs.rho())
        .expect("rho always has the ambient rank")
        .len() as u64
}

/// Every group element, by breadth-first closure of the simple reflections.
pub fn elements(rs: &RootSystem) -> Vec<WeylElement> {
    let identity = WeylElement::identity(rs.rank());
    let mut out = vec![identity.clone()];
    let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::from([identity.matrix().to_vec()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(el) = queue.pop_front() {
        for i in 0..rs.rank() {
            let next = WeylElement::simple(rs, i)
                .expect("index below rank")
                .compose(&el);
            if seen.insert(next.matrix().to_vec()) {
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    out
}

/// Chamber tag of a regular weight: the sign of `(lambda, alpha)` for every
/// positive root, simple roots first.  All pairings are evaluated exactly,
/// and any vanishing one rejects the weight as singular.
pub fn chamber_of(rs: &RootSystem, lambda: &Weight) -> Result<ChamberTag> {
    if lambda.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: lambda.rank(),
        });
    }
    let mut simple_signs = vec![0i8; rs.rank()];
    let mut rest = Vec::with_capacity(rs.num_positive() - rs.rank());
    for alpha in rs.positive_roots() {
        let ip = rs.inner_product(lambda, alpha.weight())?;
        if ip.is_zero() {
            return Err(Error::SingularWeight {
                weight: lambda.to_string(),
                root: alpha.weight().to_string(),
            });
        }
        let sign = if ip.is_positive() { 1 } else { -1 };
        if alpha.height() == 1 {
            let i = alpha
                .simple_coords()
                .iter()
                .position(|&c| c == 1)
                .expect("height-one roots are simple");
            simple_signs[i] = sign;
        } else {
            rest.push(sign);
        }
    }
    simple_signs.extend(rest);
    Ok(ChamberTag {
        signs: simple_signs,
    })
}
