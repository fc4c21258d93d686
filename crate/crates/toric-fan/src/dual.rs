use serde::Serialize;

use crate::fan::Fan;
use crate::surface::{component_table, SurfaceType};
use crate::ToricError;

#[derive(Clone, Debug, Serialize)]
pub struct Component {
    pub name: String,
    pub surface: SurfaceType,
}

/// An irreducible intersection curve between two components.
#[derive(Clone, Debug, Serialize)]
pub struct Curve {
    pub name: String,
    pub ends: [usize; 2],
}

/// A triple point, glued as a triangle along its three curves.
#[derive(Clone, Debug, Serialize)]
pub struct TriplePoint {
    pub name: String,
    pub components: [usize; 3],
    pub curves: [usize; 3],
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentGraph {
    pub genus: u32,
    pub vertices: Vec<Component>,
    pub edges: Vec<Curve>,
    pub faces: Vec<TriplePoint>,
}

/// The dual complex of `H = H_1 ∪ ⋯ ∪ H_{g+1}`.
///
/// `H_i ∩ H_{i+1}` is one curve `C_i`. `H_i ∩ H_{g+1}` is one section for
/// `i = 1`, two fibres for `2 ≤ i ≤ g−1` and a conic for `i = g`. Each
/// `H_i ∩ H_{i+1} ∩ H_{g+1}` is two points; the point on fibre `s` of `H_i`
/// also lies on fibre `s` of `H_{i+1}`.
pub fn dual_complex(g: u32) -> Result<ComponentGraph, ToricError> {
    if g < 3 {
        return Err(ToricError::DualComplexGenus(g));
    }
    let gi = g as usize;
    let vertices = component_table(g).into_iter().map(|(name, surface)| Component { name, surface }).collect();
    let top = gi; // H_{g+1}
    let mut edges = Vec::new();
    for i in 1..gi {
        edges.push(Curve { name: format!("C{i}"), ends: [i - 1, i] });
    }
    // curves on H_{g+1}, per exceptional component and fibre
    let mut on_top: Vec<[usize; 2]> = Vec::new();
    for i in 1..=gi {
        let names: Vec<String> =
            if i == 1 || i == gi { vec![format!("A{i}")] } else { vec![format!("A{i}.0"), format!("A{i}.1")] };
        let ids: Vec<usize> = names
            .into_iter()
            .map(|name| {
                edges.push(Curve { name, ends: [i - 1, top] });
                edges.len() - 1
            })
            .collect();
        on_top.push([ids[0], *ids.last().unwrap()]);
    }
    let mut faces = Vec::new();
    for i in 1..gi {
        for s in 0..2 {
            faces.push(TriplePoint {
                name: format!("p{i}.{s}"),
                components: [i - 1, i, top],
                curves: [i - 1, on_top[i - 1][s], on_top[i][s]],
            });
        }
    }
    Ok(ComponentGraph { genus: g, vertices, edges, faces })
}

impl ComponentGraph {
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.vertices.len(), self.edges.len(), self.faces.len())
    }

    pub fn euler_characteristic(&self) -> i64 {
        let (v, e, f) = self.counts();
        v as i64 - e as i64 + f as i64
    }

    /// Sorted neighbour lists, with multiplicity.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for c in &self.edges {
            adj[c.ends[0]].push(c.ends[1]);
            adj[c.ends[1]].push(c.ends[0]);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; adj.len()];
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if !std::mem::replace(&mut seen[v], true) {
                stack.extend(&adj[v]);
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Face boundaries are consistent, every curve bounds exactly two faces,
    /// and the faces around each vertex form one cycle.
    pub fn is_closed_surface(&self) -> bool {
        for f in &self.faces {
            for &c in &f.curves {
                let ends = self.edges[c].ends;
                if !ends.iter().all(|v| f.components.contains(v)) {
                    return false;
                }
            }
        }
        for c in 0..self.edges.len() {
            if self.faces.iter().filter(|f| f.curves.contains(&c)).count() != 2 {
                return false;
            }
        }
        (0..self.vertices.len()).all(|v| {
            // corners at v join its two incident curves
            let corners: Vec<[usize; 2]> = self
                .faces
                .iter()
                .filter(|f| f.components.contains(&v))
                .map(|f| {
                    let at: Vec<usize> =
                        f.curves.iter().copied().filter(|&c| self.edges[c].ends.contains(&v)).collect();
                    [at[0], at[1]]
                })
                .collect();
            let Some(first) = corners.first() else { return false };
            let mut used = vec![false; corners.len()];
            used[0] = true;
            let mut cur = first[1];
            while cur != first[0] {
                let Some(i) = (0..corners.len()).find(|&i| !used[i] && corners[i].contains(&cur)) else {
                    return false;
                };
                used[i] = true;
                cur = if corners[i][0] == cur { corners[i][1] } else { corners[i][0] };
            }
            used.iter().all(|&u| u)
        })
    }

    /// Exceptional components `H_i`, `H_j` with `|i − j| ≥ 2` share no curve.
    pub fn exceptional_disjointness(&self) -> bool {
        let top = self.vertices.len() - 1;
        self.edges.iter().all(|c| {
            let [a, b] = c.ends;
            a == top || b == top || a.abs_diff(b) < 2
        })
    }

    /// The curves `C_i` are exactly the walls `(v_i, v_{i+1})` of the fan with
    /// both rays compact.
    pub fn matches_fan(&self, f: &Fan) -> bool {
        let g = self.genus as usize;
        let compact = |r: usize| (1..=g).any(|k| f.ray_index(&format!("v{k}")) == Some(r));
        let mut walls: Vec<[usize; 2]> = f.walls().into_keys().filter(|w| compact(w[0]) && compact(w[1])).collect();
        walls.sort_unstable();
        let mut curves: Vec<[usize; 2]> = self
            .edges
            .iter()
            .filter(|c| c.ends[1] < g)
            .map(|c| {
                let r = |v: usize| f.ray_index(&format!("v{}", v + 1)).unwrap();
                let (a, b) = (r(c.ends[0]), r(c.ends[1]));
                [a.min(b), a.max(b)]
            })
            .collect();
        curves.sort_unstable();
        walls == curves
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::build_fan;

    #[test]
    fn worked_counts() {
        let d = dual_complex(3).unwrap();
        assert_eq!(d.counts(), (4, 6, 4));
        assert_eq!(dual_complex(5).unwrap().counts(), (6, 12, 8));
        assert!(dual_complex(2).is_err());
    }

    #[test]
    fn euler_characteristic_is_two() {
        for g in 3..=12 {
            let d = dual_complex(g).unwrap();
            assert_eq!(d.euler_characteristic(), 2);
            assert!(d.is_connected() && d.is_closed_surface() && d.exceptional_disjointness());
            assert!(d.matches_fan(&build_fan(g).unwrap()));
        }
    }

    #[test]
    fn removing_a_triple_point_opens_the_surface() {
        let mut d = dual_complex(4).unwrap();
        d.faces.pop();
        assert!(!d.is_closed_surface());
        assert_eq!(d.euler_characteristic(), 1);
    }

    #[test]
    fn extra_curve_breaks_disjointness() {
        let mut d = dual_complex(4).unwrap();
        d.edges.push(Curve { name: "X".into(), ends: [0, 2] });
        assert!(!d.exceptional_disjointness());
        assert!(!d.matches_fan(&build_fan(4).unwrap()));
    }
}
