use serde::Serialize;

use crate::dual::{dual_complex, ComponentGraph};
use crate::fan::{build_fan, crepancy_check, smoothness_check, support_check, ConeCheck, Fan, SupportCheck};
use crate::surface::{component_table, surface_from_fan};
use crate::ToricError;

/// Everything checked about the resolution at one genus.
#[derive(Clone, Debug, Serialize)]
pub struct ToricReport {
    pub genus: u32,
    pub fan: Fan,
    pub cones: Vec<ConeCheck>,
    pub crepant: Vec<(String, bool)>,
    pub support: SupportCheck,
    /// Surface types read off the fan agree with the component table.
    pub surfaces_match: bool,
    pub dual: ComponentGraph,
    pub vef: (usize, usize, usize),
    pub euler_characteristic: i64,
    pub closed_surface: bool,
    pub connected: bool,
    pub curves_match_fan: bool,
    pub exceptional_disjoint: bool,
}

impl ToricReport {
    pub fn expected_vef(g: u32) -> (usize, usize, usize) {
        let g = g as usize;
        (g + 1, 3 * g - 3, 2 * (g - 1))
    }

    pub fn passed(&self) -> bool {
        self.cones.len() == 2 * self.genus as usize + 1
            && self.cones.iter().all(|c| c.unimodular)
            && self.crepant.iter().all(|(_, ok)| *ok)
            && self.support.passed()
            && self.surfaces_match
            && self.vef == Self::expected_vef(self.genus)
            && self.euler_characteristic == 2
            && self.closed_surface
            && self.connected
            && self.curves_match_fan
            && self.exceptional_disjoint
    }

    /// A short text rendering for terminals.
    pub fn render_summary(&self) -> String {
        let mut s = String::new();
        let g = self.genus;
        let ok = |b: bool| if b { "ok" } else { "FAIL" };
        s += &format!("genus {g}: N = Z^3 + Z(1,1,{})/{}\n", 2 * g - 1, 2 * g + 1);
        s += "rays (scaled by 2g+1):\n";
        for r in &self.fan.rays {
            s += &format!("  {:<4} {:?}\n", r.label, r.scaled);
        }
        s += &format!("maximal cones: {}\n", self.cones.len());
        for c in &self.cones {
            s += &format!(
                "  ({}) det {} {}\n",
                c.cone.join(", "),
                c.det,
                if c.unimodular { "unimodular" } else { "SINGULAR" }
            );
        }
        s += &format!("crepant rays: {}\n", ok(self.crepant.iter().all(|(_, b)| *b)));
        s += &format!(
            "support = octant: {} (volume {}/{}, {} grid points)\n",
            ok(self.support.passed()),
            self.support.volume_sum,
            self.support.octant_volume,
            self.support.grid_points
        );
        s += "components:\n";
        for v in &self.dual.vertices {
            s += &format!("  {:<4} {}\n", v.name, v.surface);
        }
        s += &format!("surface types from the fan: {}\n", ok(self.surfaces_match));
        let (v, e, f) = self.vef;
        s += &format!("dual complex: V={v} E={e} F={f} chi={}\n", self.euler_characteristic);
        s += &format!("closed connected surface: {}\n", ok(self.closed_surface && self.connected));
        s
    }
}

pub fn toric_suite(g: u32) -> Result<ToricReport, ToricError> {
    let fan = build_fan(g)?;
    let dual = dual_complex(g)?;
    let cones = smoothness_check(&fan);
    let crepant = crepancy_check(&fan);
    let support = support_check(&fan, fan.lattice.scale);
    let surfaces_match = component_table(g).iter().take(g as usize).enumerate().all(|(k, (_, want))| {
        fan.ray_index(&format!("v{}", k + 1)).and_then(|r| surface_from_fan(&fan, r)).as_ref() == Some(want)
    });
    Ok(ToricReport {
        genus: g,
        cones,
        crepant,
        support,
        surfaces_match,
        vef: dual.counts(),
        euler_characteristic: dual.euler_characteristic(),
        closed_surface: dual.is_closed_surface(),
        connected: dual.is_connected(),
        curves_match_fan: dual.matches_fan(&fan),
        exceptional_disjoint: dual.exceptional_disjointness(),
        dual,
        fan,
    })
}
