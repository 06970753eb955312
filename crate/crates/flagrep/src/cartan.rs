//! Cartan matrices, root systems, and the invariant bilinear form.
//!
//! Everything downstream is driven by an integer Cartan matrix `A` of finite
//! type, with the convention `A[i][j] = 2(alpha_i, alpha_j) / (alpha_j,
//! alpha_j)`.  Weights are stored in fundamental-weight coordinates, so
//! `coords[i]` is the pairing of the weight with the coroot `alpha_i^vee`;
//! under this convention the simple root `alpha_i` has weight coordinates
//! equal to row `i` of `A`.  All arithmetic is exact: coordinates and form
//! values are arbitrary-precision rationals, and every comparison is an exact
//! sign test.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ratmat::{self, Rat};

/// A weight in fundamental-weight coordinates.
///
/// The weight lattice consists exactly of the weights with integer
/// coordinates; rational coordinates are allowed everywhere so that the same
/// type serves the infinitesimal-character routines.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight {
    coords: Vec<Rat>,
}

impl Weight {
    pub fn from_coords(coords: Vec<Rat>) -> Self {
        Weight { coords }
    }

    /// Lattice weight with the given integer coordinates.
    pub fn integral(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| ratmat::rat(c)).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![Rat::zero(); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rat {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// True when the weight lies in the weight lattice.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Integer coordinates, when the weight lies in the lattice.
    pub fn integer_coords(&self) -> Option<Vec<BigInt>> {
        if !self.is_integral() {
            return None;
        }
        Some(self.coords.iter().map(|c| c.to_integer()).collect())
    }

    pub fn scaled(&self, k: &Rat) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// Lexicographic comparison on coordinates; used only as an arbitrary
    /// deterministic tie-break, never as a mathematical order.
    pub fn cmp_lex(&self, other: &Weight) -> std::cmp::Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.coords {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{}", c)?;
        }
        Ok(())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

/// An integer Cartan matrix, validated to be of finite type at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
    rank: usize,
    label: Option<String>,
    /// `d[i] = (alpha_i, alpha_i) / 2`, normalized so the short roots of each
    /// component have squared length 2.
    symmetrizer: Vec<Rat>,
}

impl CartanMatrix {
    /// Validates shape (diagonal 2, non-positive off-diagonal entries, zeros
    /// symmetric) and finite type (a positive symmetrizer exists and the
    /// symmetrized form is positive definite).
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let rank = entries.len();
        if rank == 0 {
            return Err(Error::InvalidMatrix("rank must be positive".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has length {}, expected {}",
                    i,
                    row.len(),
                    rank
                )));
            }
            if row[i] != 2 {
                return Err(Error::InvalidMatrix(format!(
                    "diagonal entry A[{i}][{i}] = {}, must be 2",
                    row[i]
                )));
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                if i != j && entries[i][j] > 0 {
                    return Err(Error::InvalidMatrix(format!(
                        "off-diagonal entry A[{i}][{j}] = {} is positive",
                        entries[i][j]
                    )));
                }
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvalidMatrix(format!(
                        "zero pattern not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        let symmetrizer = compute_symmetrizer(&entries)?;
        // Symmetrized form B[i][j] = A[i][j] * d[j]; positive definiteness of
        // B is exactly finite type for a symmetrizable matrix.
        let b: Vec<Vec<Rat>> = (0..rank)
            .map(|i| (0..rank).map(|j| ratmat::rat(entries[i][j]) * &symmetrizer[j]).collect())
            .collect();
        if !ratmat::positive_definite(&b) {
            return Err(Error::NotFiniteType(
                "symmetrized form is not positive definite".into(),
            ));
        }
        Ok(CartanMatrix {
            entries,
            rank,
            label: None,
            symmetrizer,
        })
    }

    /// Built-in table lookup for the labels `A<n>`, `B<n>`, `C<n>`, `D<n>`
    /// (n >= 2), `E6`, `E7`, `E8`, `F4`, `G2`.
    pub fn from_label(label: &str) -> Result<Self> {
        let entries = builtin_entries(label).ok_or_else(|| Error::UnknownType(label.to_string()))?;
        let mut cm = CartanMatrix::new(entries)?;
        cm.label = Some(label.to_string());
        Ok(cm)
    }

    /// Parses a whitespace-separated list of `n*n` integers as an `n x n`
    /// matrix (row-major).
    pub fn from_text(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for token in text.split_whitespace() {
            let v: i64 = token
                .parse()
                .map_err(|_| Error::InvalidMatrix(format!("token `{token}` is not an integer")))?;
            values.push(v);
        }
        let count = values.len();
        let rank = (1..).find(|n| n * n >= count).unwrap_or(0);
        if count == 0 || rank * rank != count {
            return Err(Error::InvalidMatrix(format!(
                "expected n*n integers for a square matrix, got {count}"
            )));
        }
        let entries = values.chunks(rank).map(|c| c.to_vec()).collect();
        CartanMatrix::new(entries)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn symmetrizer(&self) -> &[Rat] {
        &self.symmetrizer
    }
}

/// Solves `A[i][j] d[j] = A[j][i] d[i]` component by component, then rescales
/// so the minimum of `d` on each connected component is 1.
fn compute_symmetrizer(entries: &[Vec<i64>]) -> Result<Vec<Rat>> {
    let rank = entries.len();
    let mut d: Vec<Option<Rat>> = vec![None; rank];
    for start in 0..rank {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rat::one());
        let mut component = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().unwrap();
            for j in 0..rank {
                if i == j || entries[i][j] == 0 {
                    continue;
                }
                let dj = &di * ratmat::rat(entries[j][i]) / ratmat::rat(entries[i][j]);
                match &d[j] {
                    None => {
                        if !dj.is_positive() {
                            return Err(Error::NotFiniteType(
                                "no positive symmetrizer exists".into(),
                            ));
                        }
                        d[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                    Some(existing) => {
                        if *existing != dj {
                            return Err(Error::NotFiniteType(
                                "matrix is not symmetrizable".into(),
                            ));
                        }
                    }
                }
            }
        }
        let min = component
            .iter()
            .map(|&i| d[i].clone().unwrap())
            .min()
            .unwrap();
        for &i in &component {
            let v = d[i].take().unwrap();
            d[i] = Some(v / &min);
        }
    }
    Ok(d.into_iter().map(|v| v.unwrap()).collect())
}

fn chain(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        if i + 1 < n {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

fn builtin_entries(label: &str) -> Option<Vec<Vec<i64>>> {
    let mut chars = label.chars();
    let family = chars.next()?;
    let n: usize = chars.as_str().parse().ok()?;
    match (family, n) {
        ('A', n) if n >= 1 => Some(chain(n)),
        ('B', 1) | ('C', 1) => Some(chain(1)),
        ('B', n) if n >= 2 => {
            // Last simple root short: A[n-2][n-1] = -2.
            let mut m = chain(n);
            m[n - 2][n - 1] = -2;
            Some(m)
        }
        ('C', n) if n >= 2 => {
            // Last simple root long: A[n-1][n-2] = -2.
            let mut m = chain(n);
            m[n - 1][n - 2] = -2;
            Some(m)
        }
        ('D', n) if n >= 2 => {
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                m[i][i] = 2;
            }
            for i in 0..n.saturating_sub(2) {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
            if n >= 3 {
                m[n - 3][n - 1] = -1;
                m[n - 1][n - 3] = -1;
            }
            Some(m)
        }
        ('E', n) if (6..=8).contains(&n) => {
            // Bourbaki numbering: chain 1-3-4-5-...-n with node 2 attached to 4.
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                m[i][i] = 2;
            }
            let mut link = |i: usize, j: usize| {
                m[i][j] = -1;
                m[j][i] = -1;
            };
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
            Some(m)
        }
        ('F', 4) => Some(vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -2, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -1, 2],
        ]),
        ('G', 2) => Some(vec![vec![2, -1], vec![-3, 2]]),
        _ => None,
    }
}

/// A root, stored both as an integer vector over the simple roots and in
/// fundamental-weight coordinates (the latter is the `A`-transport of the
/// former).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    simple_coords: Vec<i64>,
    weight: Weight,
    positive: bool,
}

impl Root {
    pub fn simple_coords(&self) -> &[i64] {
        &self.simple_coords
    }

    /// The root as a weight (fundamental-weight coordinates).
    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    /// Signed sum of simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }
}

/// Outcome of adding two roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SumClassification {
    Root(Root),
    Zero,
    NotARoot,
}

/// A finite root system together with the invariant form, positive system,
/// and `rho`.
///
/// Roots are ordered deterministically: all positive roots first (by height,
/// then lexicographically on simple-root coordinates), followed by their
/// negatives in the same order.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanMatrix,
    roots: Vec<Root>,
    num_positive: usize,
    rho: Weight,
    /// Gram matrix of the invariant form in fundamental-weight coordinates.
    gram: Vec<Vec<Rat>>,
    /// `(A^T)^{-1}`, sending fundamental-weight coordinates to simple-root
    /// coordinates.
    inv_transpose: Vec<Vec<Rat>>,
    by_simple: HashMap<Vec<i64>, usize>,
    by_weight: HashMap<Weight, usize>,
}

impl RootSystem {
    /// Enumerates the full root system as the reflection closure of the
    /// simple roots.
    ///
    /// The closure is a worklist pass in simple-root coordinates; the number
    /// of distinct roots it may produce is capped at `4 * rank^2` per
    /// root-length stratum, which bounds every finite type with room to
    /// spare, so exceeding the cap reports `NotFiniteType`.
    pub fn new(cartan: CartanMatrix) -> Result<Self> {
        let rank = cartan.rank();
        let strata = {
            let mut lengths: Vec<Rat> = cartan.symmetrizer().to_vec();
            lengths.sort();
            lengths.dedup();
            lengths.len()
        };
        let cap = 4 * rank * rank * strata;

        let mut order: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..rank {
            let mut e = vec![0i64; rank];
            e[i] = 1;
            seen.insert(e.clone(), ());
            order.push(e.clone());
            queue.push_back(e);
        }
        let mut pops = 0usize;
        while let Some(c) = queue.pop_front() {
            pops += 1;
            if pops > cap {
                return Err(Error::NotFiniteType(format!(
                    "reflection closure exceeded {cap} roots"
                )));
            }
            for i in 0..rank {
                // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, where the
                // pairing is coordinate i of the A-transported vector.
                let pairing: i64 = (0..rank).map(|k| c[k] * cartan.entry(k, i)).sum();
                let mut image = c.clone();
                image[i] -= pairing;
                if !seen.contains_key(&image) {
                    seen.insert(image.clone(), ());
                    order.push(image.clone());
                    queue.push_back(image);
                }
            }
        }

        let mut positives: Vec<Vec<i64>> = Vec::new();
        for c in &order {
            let nonneg = c.iter().all(|&x| x >= 0);
            let nonpos = c.iter().all(|&x| x <= 0);
            if nonneg {
                positives.push(c.clone());
            } else if !nonpos {
                return Err(Error::NotFiniteType(format!(
                    "root {c:?} has mixed signs"
                )));
            }
        }
        if positives.len() * 2 != order.len() {
            return Err(Error::NotFiniteType(
                "root system is not symmetric under negation".into(),
            ));
        }
        positives.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });

        let to_weight = |sc: &[i64]| -> Weight {
            let coords = (0..rank)
                .map(|j| ratmat::rat((0..rank).map(|k| sc[k] * cartan.entry(k, j)).sum::<i64>()))
                .collect();
            Weight::from_coords(coords)
        };
        let mut roots: Vec<Root> = Vec::with_capacity(order.len());
        for sc in &positives {
            roots.push(Root {
                simple_coords: sc.clone(),
                weight: to_weight(sc),
                positive: true,
            });
        }
        for sc in &positives {
            let neg: Vec<i64> = sc.iter().map(|&x| -x).collect();
            roots.push(Root {
                weight: to_weight(&neg),
                simple_coords: neg,
                positive: false,
            });
        }
        let num_positive = positives.len();

        let rho = Weight::integral(&vec![1i64; rank]);
        let mut half_sum = Weight::zero(rank);
        for r in &roots[..num_positive] {
            half_sum = &half_sum + r.weight();
        }
        let half_sum = half_sum.scaled(&Rat::new(BigInt::one(), BigInt::from(2)));
        assert_eq!(
            half_sum, rho,
            "half-sum of positive roots must be the all-ones weight"
        );

        let a_rat: Vec<Vec<Rat>> = (0..rank)
            .map(|i| (0..rank).map(|j| ratmat::rat(cartan.entry(i, j))).collect())
            .collect();
        let a_inv = ratmat::invert(&a_rat)
            .ok_or_else(|| Error::NotFiniteType("Cartan matrix is singular".into()))?;
        let gram: Vec<Vec<Rat>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| &a_inv[i][j] * &cartan.symmetrizer()[j])
                    .collect()
            })
            .collect();
        for i in 0..rank {
            for j in 0..i {
                assert_eq!(gram[i][j], gram[j][i], "invariant form must be symmetric");
            }
        }
        let inv_transpose = ratmat::transpose(&a_inv);

        let mut by_simple = HashMap::new();
        let mut by_weight = HashMap::new();
        for (idx, r) in roots.iter().enumerate() {
            by_simple.insert(r.simple_coords.clone(), idx);
            by_weight.insert(r.weight.clone(), idx);
        }

        Ok(RootSystem {
            cartan,
            roots,
            num_positive,
            rho,
            gram,
            inv_transpose,
            by_simple,
            by_weight,
        })
    }

    pub fn from_label(label: &str) -> Result<Self> {
        RootSystem::new(CartanMatrix::from_label(label)?)
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// All roots, positives first.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive]
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn simple_root(&self, i: usize) -> Result<&Root> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        let mut e = vec![0i64; self.rank()];
        e[i] = 1;
        Ok(&self.roots[self.by_simple[&e]])
    }

    /// Half the sum of the positive roots; in fundamental-weight coordinates
    /// this is the all-ones vector.
    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Gram matrix of the invariant form on fundamental-weight coordinates,
    /// normalized so short roots have squared length 2.
    pub fn gram(&self) -> &[Vec<Rat>] {
        &self.gram
    }

    /// The invariant inner product `(a, b)`.
    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Result<Rat> {
        self.check_rank(a)?;
        self.check_rank(b)?;
        let gb = ratmat::mat_vec(&self.gram, b.coords());
        Ok(a.coords()
            .iter()
            .zip(&gb)
            .map(|(x, y)| x * y)
            .fold(Rat::zero(), |s, t| s + t))
    }

    /// The coroot pairing `2 (lambda, alpha) / (alpha, alpha)`; an integer
    /// whenever `lambda` lies in the weight lattice.
    pub fn pairing(&self, lambda: &Weight, alpha: &Root) -> Result<Rat> {
        let num = self.inner_product(lambda, alpha.weight())?;
        let den = self.inner_product(alpha.weight(), alpha.weight())?;
        Ok(ratmat::rat(2) * num / den)
    }

    /// Classifies `alpha + beta` as a root, zero, or neither.
    pub fn classify_sum(&self, alpha: &Root, beta: &Root) -> SumClassification {
        let sum: Vec<i64> = alpha
            .simple_coords
            .iter()
            .zip(&beta.simple_coords)
            .map(|(a, b)| a + b)
            .collect();
        if sum.iter().all(|&x| x == 0) {
            return SumClassification::Zero;
        }
        match self.by_simple.get(&sum) {
            Some(&idx) => SumClassification::Root(self.roots[idx].clone()),
            None => SumClassification::NotARoot,
        }
    }

    pub fn root_of_weight(&self, w: &Weight) -> Option<&Root> {
        self.by_weight.get(w).map(|&idx| &self.roots[idx])
    }

    pub fn root_of_simple_coords(&self, sc: &[i64]) -> Option<&Root> {
        self.by_simple.get(sc).map(|&idx| &self.roots[idx])
    }

    /// Expresses a weight in simple-root coordinates (exactly).
    pub fn simple_coords_of(&self, w: &Weight) -> Result<Vec<Rat>> {
        self.check_rank(w)?;
        Ok(ratmat::mat_vec(&self.inv_transpose, w.coords()))
    }

    fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    #[test]
    fn root_counts_for_small_types() {
        for (label, total, positive) in [
            ("A1", 2, 1),
            ("A2", 6, 3),
            ("A3", 12, 6),
            ("B2", 8, 4),
            ("C3", 18, 9),
            ("D3", 12, 6),
            ("G2", 12, 6),
            ("F4", 48, 24),
        ] {
            let r = rs(label);
            assert_eq!(r.roots().len(), total, "{label}");
            assert_eq!(r.num_positive(), positive, "{label}");
        }
    }

    #[test]
    fn d2_is_a_product_of_two_a1s() {
        let r = rs("D2");
        assert_eq!(r.roots().len(), 4);
        assert_eq!(r.cartan().entry(0, 1), 0);
    }

    #[test]
    fn e_series_counts() {
        assert_eq!(rs("E6").roots().len(), 72);
        assert_eq!(rs("E7").roots().len(), 126);
        assert_eq!(rs("E8").roots().len(), 240);
    }

    #[test]
    fn simple_roots_have_cartan_rows_as_weight_coords() {
        for label in ["A2", "B2", "G2", "F4"] {
            let r = rs(label);
            for i in 0..r.rank() {
                let alpha = r.simple_root(i).unwrap();
                let expected: Vec<i64> = (0..r.rank()).map(|j| r.cartan().entry(i, j)).collect();
                assert_eq!(alpha.weight(), &Weight::integral(&expected), "{label} {i}");
            }
        }
    }

    #[test]
    fn rho_is_all_ones_and_has_expected_norms() {
        let a1 = rs("A1");
        assert_eq!(a1.rho(), &Weight::integral(&[1]));
        let omega = Weight::integral(&[1]);
        assert_eq!(
            a1.inner_product(&omega, &omega).unwrap(),
            Rat::new(BigInt::from(1), BigInt::from(2))
        );
        let a2 = rs("A2");
        assert_eq!(
            a2.inner_product(a2.rho(), a2.rho()).unwrap(),
            ratmat::rat(2)
        );
    }

    #[test]
    fn short_roots_have_squared_length_two() {
        for label in ["A2", "B2", "B3", "C3", "G2", "F4"] {
            let r = rs(label);
            let min = r
                .roots()
                .iter()
                .map(|root| r.inner_product(root.weight(), root.weight()).unwrap())
                .min()
                .unwrap();
            assert_eq!(min, ratmat::rat(2), "{label}");
        }
    }

    #[test]
    fn pairing_of_fundamental_weights_with_simple_roots_is_kronecker() {
        for label in ["A2", "B2", "G2"] {
            let r = rs(label);
            for i in 0..r.rank() {
                let mut coords = vec![0i64; r.rank()];
                coords[i] = 1;
                let omega = Weight::integral(&coords);
                for j in 0..r.rank() {
                    let alpha = r.simple_root(j).unwrap();
                    let expected = ratmat::rat(if i == j { 1 } else { 0 });
                    assert_eq!(r.pairing(&omega, alpha).unwrap(), expected, "{label} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn pairing_is_integral_on_lattice_weights() {
        let r = rs("G2");
        let lam = Weight::integral(&[3, -2]);
        for root in r.roots() {
            assert!(r.pairing(&lam, root).unwrap().is_integer());
        }
    }

    #[test]
    fn classify_sum_cases() {
        let a2 = rs("A2");
        let a1 = a2.simple_root(0).unwrap().clone();
        let a2nd = a2.simple_root(1).unwrap().clone();
        match a2.classify_sum(&a1, &a2nd) {
            SumClassification::Root(r) => {
                assert_eq!(r.simple_coords(), &[1, 1]);
                assert!(r.is_positive());
            }
            other => panic!("expected a root, got {other:?}"),
        }
        let neg = a2.root_of_simple_coords(&[-1, 0]).unwrap().clone();
        assert_eq!(a2.classify_sum(&a1, &neg), SumClassification::Zero);
        assert_eq!(a2.classify_sum(&a1, &a1), SumClassification::NotARoot);

        let b2 = rs("B2");
        let long = b2.simple_root(0).unwrap().clone();
        let short = b2.simple_root(1).unwrap().clone();
        assert!(matches!(
            b2.classify_sum(&long, &short),
            SumClassification::Root(_)
        ));
        assert_eq!(b2.classify_sum(&short, &short), SumClassification::NotARoot);
    }

    #[test]
    fn rejects_malformed_matrices() {
        assert!(matches!(
            CartanMatrix::new(vec![vec![1]]),
            Err(Error::InvalidMatrix(_))
        ));
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, 1], vec![1, 2]]),
            Err(Error::InvalidMatrix(_))
        ));
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]),
            Err(Error::InvalidMatrix(_))
        ));
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, -1, 0], vec![-1, 2]]),
            Err(Error::InvalidMatrix(_))
        ));
    }

    #[test]
    fn rejects_non_finite_type() {
        // Affine A1: symmetrizable but the form is degenerate.
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]),
            Err(Error::NotFiniteType(_))
        ));
        // A consistent zero pattern whose cycle products rule out a symmetrizer.
        assert!(matches!(
            CartanMatrix::new(vec![
                vec![2, -1, -2],
                vec![-1, 2, -1],
                vec![-1, -1, 2]
            ]),
            Err(Error::NotFiniteType(_))
        ));
        // Indefinite (hyperbolic) rank 2.
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, -3], vec![-3, 2]]),
            Err(Error::NotFiniteType(_))
        ));
    }

    #[test]
    fn label_table_errors() {
        for bad in ["A0", "E9", "F3", "G3", "H4", "B", "12", "Ax"] {
            assert!(
                matches!(CartanMatrix::from_label(bad), Err(Error::UnknownType(_))),
                "{bad}"
            );
        }
        assert!(CartanMatrix::from_label("D2").is_ok());
    }

    #[test]
    fn text_parsing_round_trip() {
        let cm = CartanMatrix::from_text("2 -1\n-1 2").unwrap();
        assert_eq!(cm.entries(), CartanMatrix::from_label("A2").unwrap().entries());
        assert!(matches!(
            CartanMatrix::from_text("2 -1 -1 2 0"),
            Err(Error::InvalidMatrix(_))
        ));
        assert!(matches!(
            CartanMatrix::from_text("2 x -1 2"),
            Err(Error::InvalidMatrix(_))
        ));
        assert!(matches!(
            CartanMatrix::from_text(""),
            Err(Error::InvalidMatrix(_))
        ));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let r = rs("A2");
        let w = Weight::integral(&[1]);
        assert!(matches!(
            r.inner_product(&w, &w),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn roots_come_in_opposite_pairs_with_positives_first() {
        let r = rs("B2");
        let n = r.num_positive();
        for i in 0..n {
            assert!(r.roots()[i].is_positive());
            assert!(!r.roots()[n + i].is_positive());
            let neg: Vec<i64> = r.roots()[i].simple_coords().iter().map(|&x| -x).collect();
            assert_eq!(r.roots()[n + i].simple_coords(), &neg[..]);
        }
    }

    #[test]
    fn simple_coords_of_inverts_the_transport() {
        let r = rs("G2");
        for root in r.roots() {
            let sc = r.simple_coords_of(root.weight()).unwrap();
            let expected: Vec<Rat> = root.simple_coords().iter().map(|&x| ratmat::rat(x)).collect();
            assert_eq!(sc, expected);
        }
    }
}
