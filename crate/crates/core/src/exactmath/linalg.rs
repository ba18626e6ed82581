use num_traits::{One, Zero};

use super::{QVector, Rational};

/// Row-major dense matrix.
pub type Matrix = Vec<QVector>;

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add(a: &[Rational], b: &[Rational]) -> QVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> QVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Rational, a: &[Rational]) -> QVector {
    a.iter().map(|x| c * x).collect()
}

pub fn mat_vec(m: &Matrix, v: &[Rational]) -> QVector {
    m.iter().map(|row| dot(row, v)).collect()
}

/// Gaussian elimination on an augmented copy. Returns the reduced matrix and
/// the pivot columns.
fn row_reduce(mut m: Matrix, cols: usize) -> (Matrix, Vec<usize>) {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..m[i].len() {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Solves `a x = b` for square `a`. Returns `None` when `a` is singular.
pub fn solve_linear(a: &Matrix, b: &[Rational]) -> Option<QVector> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length");
    let aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (red, pivots) = row_reduce(aug, n);
    if pivots.len() < n {
        return None;
    }
    Some(red.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let (red, pivots) = row_reduce(aug, n);
    if pivots.len() < n {
        return None;
    }
    Some(red.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn rank(a: &Matrix) -> usize {
    let cols = a.first().map_or(0, |r| r.len());
    row_reduce(a.clone(), cols).1.len()
}

pub fn determinant(a: &Matrix) -> Rational {
    let n = a.len();
    let mut m = a.clone();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[c][c];
                for j in c..n {
                    let delta = &f * &m[c][j];
                    m[i][j] -= delta;
                }
            }
        }
    }
    det
}
