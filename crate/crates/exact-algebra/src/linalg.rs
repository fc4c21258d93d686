//! Dense Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::Q;

pub type Matrix = Vec<Vec<Q>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Q::zero(); cols]; rows]
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = Q::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let (src, dst) = if i < r {
                    let (lo, hi) = a.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = a.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d -= &f * s;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Some solution of `a x = b` with free variables set to zero.
pub fn solve(a: &Matrix, b: &[Q]) -> Option<Vec<Q>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let aug: Matrix =
        a.iter().zip(b).map(|(r, x)| r.iter().cloned().chain(std::iter::once(x.clone())).collect()).collect();
    if rows == 0 {
        return Some(vec![Q::zero(); cols]);
    }
    let (red, pivots) = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = red[i][cols].clone();
    }
    Some(x)
}

pub fn transpose(a: &Matrix) -> Matrix {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    (0..cols).map(|j| (0..rows).map(|i| a[i][j].clone()).collect()).collect()
}

pub fn mat_vec(a: &Matrix, x: &[Q]) -> Vec<Q> {
    a.iter().map(|r| r.iter().zip(x).filter(|(c, _)| !c.is_zero()).fold(Q::zero(), |acc, (c, v)| acc + c * v)).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let bt = transpose(b);
    a.iter().map(|r| bt.iter().map(|c| r.iter().zip(c).fold(Q::zero(), |acc, (x, y)| acc + x * y)).collect()).collect()
}

/// The solution of `a x = b` of least Euclidean norm: the one lying in the
/// row space of `a`.
pub fn solve_min_norm(a: &Matrix, b: &[Q]) -> Option<Vec<Q>> {
    let cols = a.first().map_or(0, |r| r.len());
    if a.is_empty() {
        return Some(vec![Q::zero(); cols]);
    }
    // the nonzero rows of the reduced augmented system span the same row space
    let aug: Matrix =
        a.iter().zip(b).map(|(r, x)| r.iter().cloned().chain(std::iter::once(x.clone())).collect()).collect();
    let (red, pivots) = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let r: Matrix = red[..pivots.len()].iter().map(|row| row[..cols].to_vec()).collect();
    let rb: Vec<Q> = red[..pivots.len()].iter().map(|row| row[cols].clone()).collect();
    if r.is_empty() {
        return Some(vec![Q::zero(); cols]);
    }
    let rt = transpose(&r);
    let y = solve(&mat_mul(&r, &rt), &rb)?;
    let x = mat_vec(&rt, &y);
    (mat_vec(a, &x) == b).then_some(x)
}

/// Basis of the kernel of `a`.
pub fn nullspace(a: &Matrix, cols: usize) -> Vec<Vec<Q>> {
    if a.is_empty() {
        return (0..cols).map(|j| unit(cols, j)).collect();
    }
    let (red, pivots) = rref(a);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -red[i][free].clone();
        }
        out.push(v);
    }
    out
}

pub fn unit(len: usize, j: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); len];
    v[j] = Q::one();
    v
}

/// Whether `v` lies in the span of the columns of `a`.
pub fn in_column_span(a: &Matrix, v: &[Q]) -> bool {
    solve(a, v).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qi;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect()
    }

    #[test]
    fn solves_and_detects_inconsistency() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert!(solve(&a, &[qi(1), qi(3)]).is_none());
        let x = solve(&a, &[qi(1), qi(2)]).unwrap();
        assert_eq!(mat_vec(&a, &x), vec![qi(1), qi(2)]);
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn min_norm_lies_in_row_space() {
        let a = m(&[&[1, 1]]);
        let x = solve_min_norm(&a, &[qi(2)]).unwrap();
        assert_eq!(x, vec![qi(1), qi(1)]);
    }

    #[test]
    fn kernel_vectors_are_killed() {
        let a = m(&[&[1, 2, 3], &[0, 1, 1]]);
        let ker = nullspace(&a, 3);
        assert_eq!(ker.len(), 1);
        assert!(mat_vec(&a, &ker[0]).iter().all(|x| x.is_zero()));
    }
}
