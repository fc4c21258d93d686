use std::collections::BTreeMap;

use exact_algebra::{mask_weight, negate_weight, qi, ExtElement, Side};
use hochschild::{AInfStructure, Provenance, Strict};
use serde::Serialize;
use transfer::{diagonal_clauses, Clause};

use crate::table::FukayaProductTable;

/// Images of the eight generators in `Λ(V)`, `V = ℂ³`: a basis mask with a sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identification {
    pub images: Vec<(u16, i64)>,
}

impl Identification {
    /// `e ↦ 1`, `xᵢ ↦ ξᵢ`, `x̄ᵢ ↦ −ξⱼ∧ξₖ` for `(i, j, k)` cyclic, `q ↦ −ξ₁∧ξ₂∧ξ₃`.
    pub fn standard(t: &FukayaProductTable) -> Self {
        let image = |name: &str| match name {
            "e" => (0, 1),
            "x1" => (0b001, 1),
            "x2" => (0b010, 1),
            "x3" => (0b100, 1),
            "xb1" => (0b110, -1),
            "xb2" => (0b101, 1),
            "xb3" => (0b011, -1),
            "q" => (0b111, -1),
            other => panic!("no image for generator {other}"),
        };
        Identification { images: t.basis.generators.iter().map(|g| image(&g.name)).collect() }
    }

    /// Replace the image of one generator.
    pub fn with_image(mut self, t: &FukayaProductTable, name: &str, mask: u16, sign: i64) -> Self {
        let i = t.basis.index_of(name).expect("known generator");
        self.images[i] = (mask, sign);
        self
    }
}

/// The stated products moved to `Λ(V)`; every unstated basis tuple maps to zero.
#[derive(Clone, Debug)]
pub struct ExteriorFragment {
    values: BTreeMap<Vec<u16>, ExtElement>,
}

impl AInfStructure for ExteriorFragment {
    fn n(&self) -> usize {
        3
    }

    fn mu(&self, args: &[u16]) -> ExtElement {
        self.values.get(args).cloned().unwrap_or_else(|| ExtElement::zero(Side::V, 3))
    }

    fn provenance(&self) -> Provenance {
        Provenance::StaticTable
    }
}

impl ExteriorFragment {
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<u16>, &ExtElement)> {
        self.values.iter()
    }
}

pub fn identify_to_exterior(t: &FukayaProductTable, id: &Identification) -> ExteriorFragment {
    let mut values = BTreeMap::new();
    for e in &t.entries {
        let args: Vec<u16> = e.inputs.iter().map(|&i| id.images[i].0).collect();
        let v = match e.output {
            None => ExtElement::zero(Side::V, 3),
            Some(o) => {
                // the signs are ±1, so dividing by an input sign is multiplying by it
                let sign = e.inputs.iter().fold(e.coeff * id.images[o].1, |s, &i| s * id.images[i].1);
                ExtElement::term(Side::V, 3, id.images[o].0, qi(sign))
            }
        };
        values.insert(args, v);
    }
    ExteriorFragment { values }
}

pub const WEDGE: &str = "wedge consistency";
pub const WEIGHTS: &str = "weights";

/// Stated quadratic products against `μ² = (−1)^{|a₁|} a₂∧a₁`.
fn wedge_clause(f: &ExteriorFragment, reference: &dyn AInfStructure) -> Clause {
    let bad: Vec<String> =
        f.entries().filter(|(a, v)| a.len() == 2 && reference.mu(a) != **v).map(|(a, _)| format!("{a:?}")).collect();
    let checked = f.entries().filter(|(a, _)| a.len() == 2).count();
    Clause {
        name: WEDGE.into(),
        passed: bad.is_empty(),
        detail: format!(
            "{checked} products, mismatches: {}",
            if bad.is_empty() { "none".into() } else { bad.join(" ") }
        ),
    }
}

/// `x ↦ ξ^S` must carry the table weight onto the `G`-character of `ξ^S`,
/// which exact-algebra records negated.
fn weight_clause(t: &FukayaProductTable, id: &Identification) -> Clause {
    let g = t.basis.genus;
    let bad: Vec<&str> = (0..t.basis.generators.len())
        .filter(|&i| t.basis.canonical_weight(i) != negate_weight(mask_weight(Side::V, id.images[i].0, g), g))
        .map(|i| t.name(i))
        .collect();
    Clause { name: WEIGHTS.into(), passed: bad.is_empty(), detail: format!("mismatched: {bad:?}") }
}

#[derive(Clone, Debug, Serialize)]
pub struct FragmentReport {
    pub genus: u32,
    pub clauses: Vec<Clause>,
}

impl FragmentReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

/// Wedge and weight consistency of the identification plus the two
/// diagonal clauses on the transported fragment.
pub fn fragment_report(t: &FukayaProductTable, id: &Identification) -> FragmentReport {
    let f = identify_to_exterior(t, id);
    let g = t.basis.genus;
    let mut clauses = vec![wedge_clause(&f, &Strict { n: 3 }), weight_clause(t, id)];
    clauses.extend(diagonal_clauses(&f, g).0);
    FragmentReport { genus: g, clauses }
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossClause {
    pub name: String,
    pub fragment: bool,
    pub transferred: bool,
    pub fragment_detail: String,
    pub transferred_detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub genus: u32,
    pub clauses: Vec<CrossClause>,
    /// `λ` on the transferred side when `g ≡ 1 (mod 3)`.
    pub lambda: Option<String>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.fragment && c.transferred)
    }

    /// Names of clauses where either side fails.
    pub fn discrepancies(&self) -> Vec<&str> {
        self.clauses.iter().filter(|c| !(c.fragment && c.transferred)).map(|c| c.name.as_str()).collect()
    }
}

/// Run the same clauses on the transported table and on a transferred
/// structure. On the transferred side the wedge clause compares its `μ²`
/// with the transported products.
pub fn cross_check(t: &FukayaProductTable, id: &Identification, transferred: &dyn AInfStructure) -> CrossCheck {
    let g = t.basis.genus;
    let f = identify_to_exterior(t, id);
    let frag = fragment_report(t, id);
    let mut other = vec![wedge_clause(&f, transferred)];
    // weights are a property of the identification alone
    other.push(weight_clause(t, id));
    let (diag, lambda) = diagonal_clauses(transferred, g);
    other.extend(diag);
    let clauses = frag
        .clauses
        .into_iter()
        .zip(other)
        .map(|(a, b)| CrossClause {
            name: a.name,
            fragment: a.passed,
            transferred: b.passed,
            fragment_detail: a.detail,
            transferred_detail: b.detail,
        })
        .collect();
    CrossCheck { genus: g, clauses, lambda }
}
