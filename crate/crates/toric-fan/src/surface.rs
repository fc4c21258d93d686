use std::fmt;

use serde::Serialize;

use crate::fan::Fan;
use crate::lattice::cross;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SurfaceType {
    /// The rational ruled surface `F_a`.
    Hirzebruch(u32),
    ProjectivePlane,
    ProperTransform,
    /// A compact toric surface with the listed self-intersections, in cyclic order.
    Other(Vec<i64>),
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceType::Hirzebruch(a) => write!(f, "F_{a}"),
            SurfaceType::ProjectivePlane => write!(f, "P^2"),
            SurfaceType::ProperTransform => write!(f, "proper transform"),
            SurfaceType::Other(s) => write!(f, "toric surface {s:?}"),
        }
    }
}

/// `H_k ↦ F_{2g+1−2k}` for `1 ≤ k ≤ g−1`, `H_g ↦ P²`, `H_{g+1}` the proper transform.
pub fn component_table(g: u32) -> Vec<(String, SurfaceType)> {
    let mut out: Vec<(String, SurfaceType)> =
        (1..g).map(|k| (format!("H{k}"), SurfaceType::Hirzebruch(2 * g + 1 - 2 * k))).collect();
    out.push((format!("H{g}"), SurfaceType::ProjectivePlane));
    out.push((format!("H{}", g + 1), SurfaceType::ProperTransform));
    out
}

/// The neighbours of `ray` in cyclic order, if its star closes up.
fn link_cycle(f: &Fan, ray: usize) -> Option<Vec<usize>> {
    let pairs: Vec<[usize; 2]> = f
        .cones
        .iter()
        .filter(|c| c.contains(&ray))
        .map(|c| {
            let o: Vec<usize> = c.iter().copied().filter(|&r| r != ray).collect();
            [o[0], o[1]]
        })
        .collect();
    let first = pairs.first()?;
    let mut cycle = vec![first[0], first[1]];
    let mut used = vec![false; pairs.len()];
    used[0] = true;
    loop {
        let last = *cycle.last().unwrap();
        let Some(i) = (0..pairs.len()).find(|&i| !used[i] && pairs[i].contains(&last)) else { break };
        used[i] = true;
        let next = if pairs[i][0] == last { pairs[i][1] } else { pairs[i][0] };
        if next == cycle[0] {
            return used.iter().all(|&u| u).then_some(cycle);
        }
        cycle.push(next);
    }
    None
}

/// The compact torus-invariant surface of an interior ray, read from its
/// star: the quotient fan relations `u_{j−1} + u_{j+1} = −(D_j²) u_j`
/// determine the self-intersections of its boundary curves.
pub fn surface_from_fan(f: &Fan, ray: usize) -> Option<SurfaceType> {
    let cycle = link_cycle(f, ray)?;
    let rho = f.rays[ray].scaled;
    let r = cycle.len();
    let mut selfint = Vec::with_capacity(r);
    for j in 0..r {
        let w = |i: usize| f.rays[cycle[(i + r) % r]].scaled;
        let (prev, cur, next) = (w(j + r - 1), w(j), w(j + 1));
        let sum = [prev[0] + next[0], prev[1] + next[1], prev[2] + next[2]];
        let (lhs, base) = (cross(&sum, &rho), cross(&cur, &rho));
        let k = (0..3).find(|&k| base[k] != 0)?;
        if lhs[k] % base[k] != 0 {
            return None;
        }
        let c = lhs[k] / base[k];
        if (0..3).any(|i| lhs[i] != c * base[i]) {
            return None;
        }
        selfint.push(-c);
    }
    let ty = match r {
        3 if selfint.iter().all(|&s| s == 1) => SurfaceType::ProjectivePlane,
        4 => {
            let rotations =
                (0..4).map(|i| [selfint[i], selfint[(i + 1) % 4], selfint[(i + 2) % 4], selfint[(i + 3) % 4]]);
            match rotations.into_iter().find(|s| s[1] == 0 && s[3] == 0 && s[0] == -s[2] && s[0] >= 0) {
                Some(s) => SurfaceType::Hirzebruch(s[0] as u32),
                None => SurfaceType::Other(selfint),
            }
        }
        _ => SurfaceType::Other(selfint),
    };
    Some(ty)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::build_fan;

    #[test]
    fn genus_three_table() {
        let t = component_table(3);
        let names: Vec<String> = t.iter().map(|(n, s)| format!("{n}:{s}")).collect();
        assert_eq!(names, ["H1:F_5", "H2:F_3", "H3:P^2", "H4:proper transform"]);
        assert_eq!(component_table(4)[0].1, SurfaceType::Hirzebruch(7));
    }

    #[test]
    fn fan_reproduces_the_table() {
        for g in 2..=10 {
            let f = build_fan(g).unwrap();
            for (k, (_, want)) in component_table(g).iter().take(g as usize).enumerate() {
                let ray = f.ray_index(&format!("v{}", k + 1)).unwrap();
                assert_eq!(surface_from_fan(&f, ray).as_ref(), Some(want), "g = {g}, H{}", k + 1);
            }
        }
    }

    #[test]
    fn boundary_rays_are_not_compact() {
        let f = build_fan(3).unwrap();
        for label in ["v0", "e1", "e2"] {
            assert_eq!(surface_from_fan(&f, f.ray_index(label).unwrap()), None);
        }
    }
}
