use serde::Serialize;

use crate::ToricError;

pub type IVec = [i64; 3];

pub fn det3(a: &IVec, b: &IVec, c: &IVec) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

pub fn cross(a: &IVec, b: &IVec) -> IVec {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Row-style Hermite reduction of integer generators to an upper triangular basis.
fn hermite(mut rows: Vec<IVec>) -> Vec<IVec> {
    let mut out = Vec::new();
    for col in 0..3 {
        while let Some(p) = (0..rows.len()).filter(|&r| rows[r][col] != 0).min_by_key(|&r| rows[r][col].abs()) {
            let pivot = rows[p];
            let mut done = true;
            for (r, row) in rows.iter_mut().enumerate() {
                if r != p && row[col] != 0 {
                    let q = row[col].div_euclid(pivot[col]);
                    for k in 0..3 {
                        row[k] -= q * pivot[k];
                    }
                    done &= row[col] == 0;
                }
            }
            if done {
                let mut pivot = rows.remove(p);
                if pivot[col] < 0 {
                    pivot = pivot.map(|x| -x);
                }
                out.push(pivot);
                break;
            }
        }
    }
    out
}

/// `N = ℤ³ + ℤ·(1, 1, 2g−1)/(2g+1)`, stored as a basis of the scaled lattice
/// `(2g+1)·N ⊆ ℤ³`. All vectors handed to it are scaled by `2g+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientLattice {
    pub genus: u32,
    pub scale: i64,
    /// Upper triangular rows.
    pub basis: [IVec; 3],
}

impl QuotientLattice {
    pub fn new(genus: u32) -> Result<Self, ToricError> {
        if genus < 2 {
            return Err(ToricError::Genus(genus));
        }
        let s = 2 * genus as i64 + 1;
        let rows = vec![[s, 0, 0], [0, s, 0], [0, 0, s], [1, 1, s - 2]];
        let b = hermite(rows);
        Ok(QuotientLattice { genus, scale: s, basis: [b[0], b[1], b[2]] })
    }

    pub fn covolume(&self) -> i64 {
        det3(&self.basis[0], &self.basis[1], &self.basis[2]).abs()
    }

    /// `[N : ℤ³]`.
    pub fn index_of_z3(&self) -> i64 {
        self.scale.pow(3) / self.covolume()
    }

    /// Integer coordinates in the stored basis, if `w` lies in the lattice.
    pub fn coordinates(&self, w: &IVec) -> Option<IVec> {
        let mut rest = *w;
        let mut c = [0; 3];
        for i in 0..3 {
            let b = self.basis[i];
            if rest[i] % b[i] != 0 {
                return None;
            }
            c[i] = rest[i] / b[i];
            for k in 0..3 {
                rest[k] -= c[i] * b[k];
            }
        }
        Some(c)
    }

    pub fn contains(&self, w: &IVec) -> bool {
        self.coordinates(w).is_some()
    }

    pub fn is_primitive(&self, w: &IVec) -> bool {
        self.coordinates(w).is_some_and(|c| c.iter().fold(0, |g, &x| gcd(g, x)) == 1)
    }

    /// Whether three lattice vectors form a basis of the lattice.
    pub fn is_basis(&self, ws: &[IVec; 3]) -> bool {
        ws.iter().all(|w| self.contains(w)) && det3(&ws[0], &ws[1], &ws[2]).abs() == self.covolume()
    }
}
