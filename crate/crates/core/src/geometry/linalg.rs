//! Small exact linear algebra over arbitrary-precision rationals.

#![allow(clippy::needless_range_loop)] // index loops read naturally in elimination code

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::sign::Sign;

pub type Rat = BigRational;

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn sign_of(r: &Rat) -> Sign {
    if r.is_zero() {
        Sign::Zero
    } else if r.is_positive() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn scale(a: &[Rat], s: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * s).collect()
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Rank by fraction-free Gaussian elimination on a copy.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[r][c];
            for j in c..ncols {
                let t = &m[r][j] * &f;
                m[i][j] = &m[i][j] - &t;
            }
        }
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

/// Determinant of a square matrix by elimination.
pub fn det(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut result = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(c, p);
            result = -result;
        }
        result *= m[c][c].clone();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[c][c];
            for j in c..n {
                let t = &m[c][j] * &f;
                m[i][j] = &m[i][j] - &t;
            }
        }
    }
    result
}

/// Express each row of `rows` in coordinates of a basis of their common row
/// space. Returns vectors of length `rank`.
pub fn coordinates_in_row_space(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    // Reduced row echelon form gives a basis; coordinates read off the pivot
    // columns of each original row reduced against it.
    let mut rref: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = rref.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rref[0].len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !rref[i][c].is_zero()) else {
            continue;
        };
        rref.swap(r, p);
        let inv = rref[r][c].clone();
        for j in 0..ncols {
            rref[r][j] = &rref[r][j] / &inv;
        }
        for i in 0..nrows {
            if i != r && !rref[i][c].is_zero() {
                let f = rref[i][c].clone();
                for j in 0..ncols {
                    let t = &rref[r][j] * &f;
                    rref[i][j] = &rref[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let basis: Vec<Vec<Rat>> = rref[..r].to_vec();
    // Every original row is a combination of the echelon basis; with leading
    // ones at pivot columns the coefficients are the row's pivot entries
    // after peeling.
    rows.iter()
        .map(|row| {
            let mut residue = row.clone();
            let mut coords = Vec::with_capacity(r);
            for (b, &pc) in basis.iter().zip(&pivots) {
                let coef = residue[pc].clone();
                if !coef.is_zero() {
                    for j in 0..ncols {
                        let t = &b[j] * &coef;
                        residue[j] = &residue[j] - &t;
                    }
                }
                coords.push(coef);
            }
            debug_assert!(is_zero_vec(&residue), "row outside its own row space");
            coords
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_det() {
        let id: Vec<Vec<Rat>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| if i == j { rat(1) } else { rat(0) })
                    .collect()
            })
            .collect();
        assert_eq!(rank(&id), 3);
        assert_eq!(det(&id), rat(1));

        let dep = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert_eq!(rank(&dep), 1);
        assert_eq!(det(&dep), rat(0));

        let m = vec![
            vec![rat(0), rat(2), rat(-1)],
            vec![ratio(4, 3), rat(0), ratio(-1, 3)],
            vec![rat(2), rat(-1), rat(0)],
        ];
        assert_eq!(det(&m), rat(0)); // the coplanarity determinant seen in tests
    }

    #[test]
    fn row_space_coordinates() {
        let rows = vec![
            vec![rat(1), rat(1), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(2), rat(3), rat(0)],
        ];
        let coords = coordinates_in_row_space(&rows);
        assert_eq!(coords.len(), 3);
        assert!(coords.iter().all(|c| c.len() == 2));
        // third row = 2·first + second, and the coordinates agree
        assert_eq!(add(&scale(&coords[0], &rat(2)), &coords[1]), coords[2]);
    }
}
