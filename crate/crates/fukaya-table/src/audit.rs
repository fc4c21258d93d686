use serde::Serialize;

use crate::table::{canonical, Entry, FukayaBasis, FukayaProductTable};

/// `r` and the common pole order `m = 2g − 2` of the grading section.
pub const R: i64 = 3;

pub fn pole_order(genus: u32) -> i64 {
    2 * genus as i64 - 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexAudit {
    /// `i(x₀) − Σ i(xⱼ)`, absent for a stated vanishing product.
    pub lhs: Option<i64>,
    /// The `k` solving `lhs = r(2 − d) + 2mk`, if any.
    pub computed_k: Option<i64>,
    pub claimed_k: u32,
    pub passed: bool,
}

/// The index law `i(x₀) − i(x₁) − ⋯ − i(x_d) = r(2 − d) + 2mk` for the
/// entry's claimed `k`.
pub fn index_audit(basis: &FukayaBasis, entry: &Entry) -> IndexAudit {
    let Some(out) = entry.output else {
        return IndexAudit { lhs: None, computed_k: None, claimed_k: entry.k, passed: true };
    };
    let idx = |i: usize| basis.generators[i].index;
    let lhs = idx(out) - entry.inputs.iter().map(|&i| idx(i)).sum::<i64>();
    let rest = lhs - R * (2 - entry.arity() as i64);
    let step = 2 * pole_order(basis.genus);
    let computed_k = (rest >= 0 && rest % step == 0).then_some(rest / step);
    IndexAudit { lhs: Some(lhs), computed_k, claimed_k: entry.k, passed: computed_k == Some(entry.k as i64) }
}

/// Weight additivity: the output weight is the sum of the input weights.
pub fn weight_audit(basis: &FukayaBasis, entry: &Entry) -> bool {
    let Some(out) = entry.output else { return true };
    let mut total = [0i64; 3];
    for &i in &entry.inputs {
        for (t, w) in total.iter_mut().zip(basis.generators[i].weight) {
            *t += w;
        }
    }
    canonical(total, basis.modulus()) == basis.canonical_weight(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryAudit {
    pub entry: String,
    pub index: IndexAudit,
    pub weight: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub genus: u32,
    pub r: i64,
    pub m: i64,
    pub entries: Vec<EntryAudit>,
    /// Failures of `μ²(a, e) = a`, `μ²(e, a) = (−1)^{|a|} a`.
    pub unit_failures: Vec<String>,
    /// Failures of `μ²(a, b) = −μ²(b, a)` on the stated mixed products.
    pub antisymmetry_failures: Vec<String>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.index.passed && e.weight)
            && self.unit_failures.is_empty()
            && self.antisymmetry_failures.is_empty()
    }
}

fn unit_failures(t: &FukayaProductTable) -> Vec<String> {
    let Some(e) = t.basis.index_of("e") else { return vec!["no unit generator".into()] };
    let mut bad = Vec::new();
    for (a, g) in t.basis.generators.iter().enumerate() {
        if a == e {
            continue;
        }
        let sign = if g.odd { -1 } else { 1 };
        for (args, want) in [([a, e], 1), ([e, a], sign)] {
            match t.lookup(&args) {
                Some(x) if x.output == Some(a) && x.coeff == want => {}
                _ => bad.push(format!("mu^2({}, {})", t.name(args[0]), t.name(args[1]))),
            }
        }
    }
    bad
}

fn antisymmetry_failures(t: &FukayaProductTable) -> Vec<String> {
    let mut bad = Vec::new();
    for x in t.entries.iter().filter(|x| x.arity() == 2 && x.output.is_some()) {
        let (a, b) = (x.inputs[0], x.inputs[1]);
        if a == b || t.name(a) == "e" || t.name(b) == "e" {
            continue;
        }
        match t.lookup(&[b, a]) {
            Some(y) if y.output == x.output && y.coeff == -x.coeff => {}
            _ => bad.push(t.render(x)),
        }
    }
    bad
}

/// Every entry against the index and weight laws, plus the unit and
/// antisymmetry patterns of the quadratic part.
pub fn audit(t: &FukayaProductTable) -> AuditReport {
    let entries = t
        .entries
        .iter()
        .map(|e| EntryAudit { entry: t.render(e), index: index_audit(&t.basis, e), weight: weight_audit(&t.basis, e) })
        .collect();
    AuditReport {
        genus: t.basis.genus,
        r: R,
        m: pole_order(t.basis.genus),
        entries,
        unit_failures: unit_failures(t),
        antisymmetry_failures: antisymmetry_failures(t),
    }
}
