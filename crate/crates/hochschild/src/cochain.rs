use std::collections::BTreeMap;

use exact_algebra::json::{ext_from_json, ext_to_json, ExtTermJson};
use exact_algebra::{add_weights, mask_weight, negate_weight, ExtElement, Side, Weight, Q};
use serde::{Deserialize, Serialize};

use crate::HochError;

/// Sparse multilinear maps `A^{⊗i} → A`, stored on basis tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    n: usize,
    comps: BTreeMap<usize, BTreeMap<Vec<u16>, ExtElement>>,
}

/// Every tuple of `arity` basis masks over `n` generators, in lexicographic
/// order.
pub fn all_tuples(n: usize, arity: usize) -> Vec<Vec<u16>> {
    let dim = 1u16 << n;
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        let mut next = Vec::with_capacity(out.len() * dim as usize);
        for t in &out {
            for b in 0..dim {
                let mut u = t.clone();
                u.push(b);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

impl Cochain {
    pub fn zero(n: usize) -> Self {
        Cochain { n, comps: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, args: Vec<u16>, value: ExtElement) {
        let arity = args.len();
        let comp = self.comps.entry(arity).or_default();
        if value.is_zero() {
            comp.remove(&args);
        } else {
            comp.insert(args, value);
        }
        if self.comps.get(&arity).is_some_and(|c| c.is_empty()) {
            self.comps.remove(&arity);
        }
    }

    pub fn add_entry(&mut self, args: Vec<u16>, value: &ExtElement) {
        let cur = self.eval(&args);
        self.set(args, cur.add(value));
    }

    pub fn eval(&self, args: &[u16]) -> ExtElement {
        self.comps
            .get(&args.len())
            .and_then(|c| c.get(args))
            .cloned()
            .unwrap_or_else(|| ExtElement::zero(Side::V, self.n))
    }

    pub fn arities(&self) -> impl Iterator<Item = usize> + '_ {
        self.comps.keys().copied()
    }

    pub fn max_arity(&self) -> usize {
        self.comps.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<u16>, &ExtElement)> {
        self.comps.values().flat_map(|c| c.iter())
    }

    pub fn component(&self, arity: usize) -> Cochain {
        let mut c = Cochain::zero(self.n);
        if let Some(m) = self.comps.get(&arity) {
            c.comps.insert(arity, m.clone());
        }
        c
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        let mut r = self.clone();
        for (args, v) in other.entries() {
            r.add_entry(args.clone(), v);
        }
        r
    }

    pub fn scale(&self, c: &Q) -> Cochain {
        let mut r = Cochain::zero(self.n);
        for (args, v) in self.entries() {
            r.set(args.clone(), v.scale(c));
        }
        r
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.add(&other.scale(&-Q::from_integer(1.into())))
    }

    /// Shifted parity `i + j − 1` of one output term.
    pub fn entry_parity(args: &[u16], out_mask: u16) -> u32 {
        let ins: u32 = args.iter().map(|a| a.count_ones()).sum();
        ((args.len() as u32 + out_mask.count_ones() + ins + 1) % 2) as u32
    }

    /// Common shifted parity of all terms, `None` if mixed or zero.
    pub fn parity(&self) -> Option<u32> {
        let mut p = None;
        for (args, v) in self.entries() {
            for (m, _) in v.terms() {
                let q = Self::entry_parity(args, m);
                match p {
                    None => p = Some(q),
                    Some(x) if x != q => return None,
                    _ => {}
                }
            }
        }
        p
    }

    /// Whether every term has Hom-degree `2 − i` for arity `i`, with
    /// arities at least `min_arity`: the shape of degree-`d` elements of the
    /// subalgebra `𝔤_A` is `i ≥ d + 2`, Hom-degree `1 + d − i`.
    pub fn has_profile(&self, d: i64, min_arity: usize) -> bool {
        self.entries().all(|(args, v)| {
            let ins: i64 = args.iter().map(|a| a.count_ones() as i64).sum();
            args.len() >= min_arity
                && v.terms().all(|(m, _)| (m.count_ones() as i64 - ins - (1 + d - args.len() as i64)) % 2 == 0)
        })
    }

    /// Split into parity-homogeneous parts `(even, odd)`.
    pub fn split_parity(&self) -> (Cochain, Cochain) {
        let mut even = Cochain::zero(self.n);
        let mut odd = Cochain::zero(self.n);
        for (args, v) in self.entries() {
            for (m, c) in v.terms() {
                let e = ExtElement::term(Side::V, self.n, m, c.clone());
                if Self::entry_parity(args, m) == 0 {
                    even.add_entry(args.clone(), &e);
                } else {
                    odd.add_entry(args.clone(), &e);
                }
            }
        }
        (even, odd)
    }

    /// Common `G`-weight of all terms (output weight minus input weights),
    /// `None` if the terms disagree. Needs `n = 3`.
    pub fn weight(&self, g: u32) -> Option<Weight> {
        let mut w = None;
        for (args, v) in self.entries() {
            let ins = args.iter().fold([0, 0], |acc, &a| add_weights(acc, mask_weight(Side::V, a, g), g));
            for (m, _) in v.terms() {
                let x = add_weights(mask_weight(Side::V, m, g), negate_weight(ins, g), g);
                match w {
                    None => w = Some(x),
                    Some(y) if y != x => return None,
                    _ => {}
                }
            }
        }
        Some(w.unwrap_or([0, 0]))
    }

    /// Whether every term commutes with the `G`-action.
    pub fn is_weight_homogeneous(&self, g: u32) -> bool {
        self.weight(g) == Some([0, 0])
    }

    pub fn to_json(&self) -> Vec<CochainEntryJson> {
        self.entries()
            .map(|(args, v)| CochainEntryJson { arity: args.len(), inputs: args.clone(), output: ext_to_json(v) })
            .collect()
    }

    pub fn from_json(n: usize, entries: &[CochainEntryJson]) -> Result<Cochain, HochError> {
        let mut c = Cochain::zero(n);
        for (i, e) in entries.iter().enumerate() {
            if e.inputs.len() != e.arity {
                return Err(HochError::Parse(format!("entry {i}: arity {} but {} inputs", e.arity, e.inputs.len())));
            }
            if e.inputs.iter().any(|m| m >> n != 0) {
                return Err(HochError::Parse(format!("entry {i}: input mask out of range")));
            }
            let v = ext_from_json(Side::V, n, &e.output).map_err(|x| HochError::Parse(format!("entry {i}: {x}")))?;
            c.add_entry(e.inputs.clone(), &v);
        }
        Ok(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainEntryJson {
    pub arity: usize,
    pub inputs: Vec<u16>,
    pub output: Vec<ExtTermJson>,
}
