use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::FukayaError;

/// The shipped product table.
pub const TABLE_JSON: &str = include_str!("../data/table.json");

/// SHA-256 of [`TABLE_JSON`]; bumping the table means bumping this.
pub const TABLE_SHA256: &str = "77e851b533f2d12380443354ed100d88ea72bacc1878b7fe3415cc9be6986a28";

pub fn checksum(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub odd: bool,
    pub index: i64,
    /// A representative in `(ℤ/(2g+1))³`; only its class mod the diagonal matters.
    pub weight: [i64; 3],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct EntryJson {
    group: String,
    inputs: Vec<String>,
    output: Option<String>,
    coeff: i64,
    k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    repeat: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct TableJson {
    generators: Vec<Generator>,
    products: Vec<EntryJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FukayaBasis {
    pub genus: u32,
    pub generators: Vec<Generator>,
}

impl FukayaBasis {
    pub fn modulus(&self) -> i64 {
        2 * self.genus as i64 + 1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// The weight class with its third coordinate moved to zero.
    pub fn canonical_weight(&self, i: usize) -> [u32; 2] {
        canonical(self.generators[i].weight, self.modulus())
    }
}

/// `(a, b, c) ↦ (a − c, b − c) mod m`.
pub fn canonical(w: [i64; 3], m: i64) -> [u32; 2] {
    [(w[0] - w[2]).rem_euclid(m) as u32, (w[1] - w[2]).rem_euclid(m) as u32]
}

/// `μ^d(a_d, …, a₁) = coeff · output`, inputs listed from `a_d` down.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub group: String,
    pub inputs: Vec<usize>,
    /// `None` for a stated vanishing product.
    pub output: Option<usize>,
    pub coeff: i64,
    /// The claimed `ħ`-power.
    pub k: u32,
}

impl Entry {
    pub fn arity(&self) -> usize {
        self.inputs.len()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FukayaProductTable {
    pub basis: FukayaBasis,
    pub entries: Vec<Entry>,
}

impl FukayaProductTable {
    /// The shipped table at genus `g`, after verifying its checksum.
    pub fn load(genus: u32) -> Result<Self, FukayaError> {
        let got = checksum(TABLE_JSON.as_bytes());
        if got != TABLE_SHA256 {
            return Err(FukayaError::Checksum { expected: TABLE_SHA256.into(), got });
        }
        Self::from_json(TABLE_JSON, genus)
    }

    pub fn from_json(s: &str, genus: u32) -> Result<Self, FukayaError> {
        if genus < 2 {
            return Err(FukayaError::Genus(genus));
        }
        let raw: TableJson = serde_json::from_str(s).map_err(|e| FukayaError::Parse(e.to_string()))?;
        let basis = FukayaBasis { genus, generators: raw.generators };
        for (i, g) in basis.generators.iter().enumerate() {
            if basis.generators[..i].iter().any(|h| h.name == g.name) {
                return Err(FukayaError::Data(format!("duplicate generator {}", g.name)));
            }
            // r = 3 is odd, so the index reduces to the parity
            if (g.index.rem_euclid(2) == 1) != g.odd {
                return Err(FukayaError::Data(format!("{}: index {} disagrees with parity", g.name, g.index)));
            }
        }
        let find = |n: &str| basis.index_of(n).ok_or_else(|| FukayaError::Data(format!("unknown generator {n}")));
        let mut entries = Vec::new();
        for e in &raw.products {
            let mut inputs = e.inputs.iter().map(|n| find(n)).collect::<Result<Vec<_>, _>>()?;
            match e.repeat.as_deref() {
                None => {}
                Some("2g+1") if inputs.len() == 1 => inputs = vec![inputs[0]; 2 * genus as usize + 1],
                Some(r) => return Err(FukayaError::Data(format!("unsupported repeat {r}"))),
            }
            let output = e.output.as_deref().map(find).transpose()?;
            if output.is_none() != (e.coeff == 0) {
                return Err(FukayaError::Data(format!("{:?}: coefficient and output disagree", e.inputs)));
            }
            let entry = Entry { group: e.group.clone(), inputs, output, coeff: e.coeff, k: e.k };
            if entries.iter().any(|f: &Entry| f.inputs == entry.inputs) {
                return Err(FukayaError::Data(format!("{:?} listed twice", e.inputs)));
            }
            entries.push(entry);
        }
        Ok(FukayaProductTable { basis, entries })
    }

    pub fn lookup(&self, inputs: &[usize]) -> Option<&Entry> {
        self.entries.iter().find(|e| e.inputs == inputs)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis.generators[i].name
    }

    /// `μ^d(x3, x2, x1) = −e` style rendering.
    pub fn render(&self, e: &Entry) -> String {
        let args = if e.arity() > 3 && e.inputs.iter().all(|&i| i == e.inputs[0]) {
            format!("{}^{}", self.name(e.inputs[0]), e.arity())
        } else {
            e.inputs.iter().map(|&i| self.name(i)).collect::<Vec<_>>().join(", ")
        };
        let rhs = match (e.output, e.coeff) {
            (None, _) => "0".to_string(),
            (Some(o), 1) => self.name(o).to_string(),
            (Some(o), -1) => format!("-{}", self.name(o)),
            (Some(o), c) => format!("{c}*{}", self.name(o)),
        };
        format!("mu_{}^{}({args}) = {rhs}", e.k, e.arity())
    }
}
