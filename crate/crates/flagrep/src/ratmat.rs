//! Small exact-rational matrix helpers (ranks here never exceed 8).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn identity(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect()
}

pub fn transpose(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let rows = m.len();
    let cols = m[0].len();
    (0..cols).map(|j| (0..rows).map(|i| m[i][j].clone()).collect()).collect()
}

pub fn mat_vec(m: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).fold(Rat::zero(), |s, t| s + t))
        .collect()
}

/// Inverse by Gauss-Jordan elimination; `None` when singular.
pub fn invert(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &scale;
            inv[col][j] = &inv[col][j] / &scale;
        }
        for row in 0..n {
            if row == col || a[row][col].is_zero() {
                continue;
            }
            let factor = a[row][col].clone();
            for j in 0..n {
                let t = &a[col][j] * &factor;
                a[row][j] = &a[row][j] - &t;
                let t = &inv[col][j] * &factor;
                inv[row][j] = &inv[row][j] - &t;
            }
        }
    }
    Some(inv)
}

fn determinant(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return Rat::zero(),
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det *= a[col][col].clone();
        let scale = a[col][col].clone();
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let factor = &a[row][col] / &scale;
            for j in col..n {
                let t = &a[col][j] * &factor;
                a[row][j] = &a[row][j] - &t;
            }
        }
    }
    det
}

/// Sylvester's criterion: positive definiteness via leading principal minors.
pub fn positive_definite(m: &[Vec<Rat>]) -> bool {
    let n = m.len();
    (1..=n).all(|k| {
        let minor: Vec<Vec<Rat>> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
        determinant(&minor).is_positive()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn inverse_of_a2_cartan() {
        let a = m(&[&[2, -1], &[-1, 2]]);
        let inv = invert(&a).unwrap();
        assert_eq!(inv[0][0], Rat::new(BigInt::from(2), BigInt::from(3)));
        assert_eq!(inv[0][1], Rat::new(BigInt::from(1), BigInt::from(3)));
        let prod = mat_vec(&inv, &[rat(2), rat(-1)]);
        assert_eq!(prod, vec![rat(1), rat(0)]);
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        assert!(invert(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn definiteness() {
        assert!(positive_definite(&m(&[&[2, -1], &[-1, 2]])));
        assert!(!positive_definite(&m(&[&[2, -2], &[-2, 2]])));
        assert!(!positive_definite(&m(&[&[-2, 0], &[0, -2]])));
    }
}
