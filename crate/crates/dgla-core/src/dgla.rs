use exact_algebra::{linalg, parse_rational, Q};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::DglaError;

/// Coordinates in the generator basis of a presentation.
pub type Vector = Vec<Q>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: i32,
    /// `L_r` membership: the generator lies in `L_level`.
    pub level: u32,
}

/// A finite-dimensional filtered DGLA given on a basis of homogeneous
/// generators. Construction checks every axiom on all basis tuples.
#[derive(Clone, Debug, PartialEq)]
pub struct Dgla {
    gens: Vec<Generator>,
    /// `diff[j]` is `∂e_j`.
    diff: Vec<Vec<(usize, Q)>>,
    /// `bracket[i][j]` is `[e_i, e_j]`.
    bracket: Vec<Vec<Vec<(usize, Q)>>>,
    class: Option<usize>,
}

fn sparse(v: &[Q]) -> Vec<(usize, Q)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

fn parity_sign(a: i32, b: i32) -> Q {
    if (a * b).rem_euclid(2) == 1 {
        -Q::one()
    } else {
        Q::one()
    }
}

impl Dgla {
    /// `differential` holds `(from, to, c)`: `∂e_from` has coefficient `c` on
    /// `e_to`. `bracket` holds `(left, right, out, c)`. Missing mirrored
    /// brackets are filled in by graded antisymmetry.
    pub fn new(
        gens: Vec<Generator>,
        differential: &[(usize, usize, Q)],
        bracket: &[(usize, usize, usize, Q)],
    ) -> Result<Dgla, DglaError> {
        let g = Dgla::unchecked(gens, differential, bracket)?;
        g.validate()?;
        Ok(g)
    }

    pub(crate) fn unchecked(
        gens: Vec<Generator>,
        differential: &[(usize, usize, Q)],
        bracket: &[(usize, usize, usize, Q)],
    ) -> Result<Dgla, DglaError> {
        let n = gens.len();
        let oob = |i: usize| {
            if i >= n {
                Err(DglaError::Invalid(format!("generator index {i} out of range")))
            } else {
                Ok(())
            }
        };
        let mut d = vec![vec![Q::zero(); n]; n];
        for (from, to, c) in differential {
            oob(*from)?;
            oob(*to)?;
            d[*from][*to] += c;
        }
        let mut given = vec![vec![None::<Vector>; n]; n];
        for (l, r, o, c) in bracket {
            oob(*l)?;
            oob(*r)?;
            oob(*o)?;
            given[*l][*r].get_or_insert_with(|| vec![Q::zero(); n])[*o] += c;
        }
        let mut b = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let sign = -parity_sign(gens[i].degree, gens[j].degree);
                let v = match (&given[i][j], &given[j][i]) {
                    (Some(v), Some(w)) => {
                        if i != j && *v != w.iter().map(|c| c * &sign).collect::<Vector>() {
                            return Err(DglaError::Invalid(format!(
                                "bracket of {} and {} is not graded antisymmetric",
                                gens[i].name, gens[j].name
                            )));
                        }
                        v.clone()
                    }
                    (Some(v), None) => v.clone(),
                    (None, Some(w)) => w.iter().map(|c| c * &sign).collect(),
                    (None, None) => continue,
                };
                b[i][j] = sparse(&v);
            }
        }
        let mut g = Dgla { diff: d.iter().map(|r| sparse(r)).collect(), bracket: b, gens, class: None };
        g.class = g.compute_class();
        Ok(g)
    }

    fn validate(&self) -> Result<(), DglaError> {
        let n = self.dim();
        for (i, gen) in self.gens.iter().enumerate() {
            if gen.level == 0 {
                return Err(DglaError::Invalid(format!("{} has filtration level 0", gen.name)));
            }
            if self.gens[..i].iter().any(|h| h.name == gen.name) {
                return Err(DglaError::Invalid(format!("duplicate generator {}", gen.name)));
            }
        }
        for j in 0..n {
            for (k, _) in &self.diff[j] {
                if self.degree(*k) != self.degree(j) + 1 {
                    return Err(DglaError::Invalid(format!("∂{} is not of degree one higher", self.name(j))));
                }
                if self.level(*k) < self.level(j) {
                    return Err(DglaError::Invalid(format!("∂{} leaves its filtration level", self.name(j))));
                }
            }
            for i in 0..n {
                for (k, _) in &self.bracket[i][j] {
                    if self.degree(*k) != self.degree(i) + self.degree(j) {
                        return Err(DglaError::Invalid(format!(
                            "bracket of {} and {} has the wrong degree",
                            self.name(i),
                            self.name(j)
                        )));
                    }
                    if self.level(*k) < self.level(i) + self.level(j) {
                        return Err(DglaError::Invalid(format!(
                            "bracket of {} and {} violates the filtration",
                            self.name(i),
                            self.name(j)
                        )));
                    }
                }
            }
            // [e, e] = 0 for even e
            if self.degree(j) % 2 == 0 && !self.bracket[j][j].is_empty() {
                return Err(DglaError::Invalid(format!("[{0}, {0}] must vanish", self.name(j))));
            }
        }
        if let Some((label, _)) = self.axiom_residuals().into_iter().find(|(_, v)| v.iter().any(|c| !c.is_zero())) {
            return Err(DglaError::Invalid(label));
        }
        Ok(())
    }

    /// Residuals of `∂² = 0`, the Leibniz rule and the Jacobi identity,
    /// labelled. Both identities are graded antisymmetric in their arguments
    /// once the bracket is, so nondecreasing basis tuples cover all tuples.
    pub(crate) fn axiom_residuals(&self) -> Vec<(String, Vector)> {
        let n = self.dim();
        let mut out = Vec::new();
        for j in 0..n {
            let e = self.unit(j);
            out.push((format!("∂² ≠ 0 on {}", self.name(j)), self.diff(&self.diff(&e))));
        }
        for i in 0..n {
            for j in i..n {
                let (a, b) = (self.unit(i), self.unit(j));
                let lhs = self.diff(&self.bracket(&a, &b));
                let r1 = self.bracket(&self.diff(&a), &b);
                let r2 = scale(&self.bracket(&a, &self.diff(&b)), &parity_sign(self.degree(i), 1));
                out.push((format!("Leibniz fails on ({}, {})", self.name(i), self.name(j)), sub(&lhs, &add(&r1, &r2))));
            }
        }
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    let (x, y, z) = (self.unit(a), self.unit(b), self.unit(c));
                    let lhs = self.bracket(&x, &self.bracket(&y, &z));
                    let r1 = self.bracket(&self.bracket(&x, &y), &z);
                    let r2 =
                        scale(&self.bracket(&y, &self.bracket(&x, &z)), &parity_sign(self.degree(a), self.degree(b)));
                    out.push((
                        format!("Jacobi fails on ({}, {}, {})", self.name(a), self.name(b), self.name(c)),
                        sub(&lhs, &add(&r1, &r2)),
                    ));
                }
            }
        }
        out
    }

    /// Smallest `c` with every `c`-fold bracket zero, from the lower central
    /// series; `None` when the series stalls above zero.
    fn compute_class(&self) -> Option<usize> {
        let n = self.dim();
        let mut span: Vec<Vector> = (0..n).map(|i| self.unit(i)).collect();
        let mut c = 1;
        loop {
            if span.is_empty() {
                return Some(c);
            }
            let mut next = Vec::new();
            for v in &span {
                for i in 0..n {
                    let w = self.bracket(&self.unit(i), v);
                    if w.iter().any(|x| !x.is_zero()) {
                        next.push(w);
                    }
                }
            }
            let next = row_basis(&next);
            if next.len() == span.len() {
                return None;
            }
            span = next;
            c += 1;
        }
    }

    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn name(&self, i: usize) -> &str {
        &self.gens[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.gens[i].degree
    }

    pub fn level(&self, i: usize) -> u32 {
        self.gens[i].level
    }

    pub fn max_level(&self) -> u32 {
        self.gens.iter().map(|g| g.level).max().unwrap_or(0)
    }

    pub fn nilpotency_class(&self) -> Option<usize> {
        self.class
    }

    pub fn is_nilpotent(&self) -> bool {
        self.class.is_some()
    }

    pub fn zero(&self) -> Vector {
        vec![Q::zero(); self.dim()]
    }

    pub fn unit(&self, i: usize) -> Vector {
        linalg::unit(self.dim(), i)
    }

    pub fn basis_of_degree(&self, d: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degree(i) == d).collect()
    }

    pub fn diff(&self, v: &[Q]) -> Vector {
        let mut out = self.zero();
        for (j, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, d) in &self.diff[j] {
                out[*k] += c * d;
            }
        }
        out
    }

    pub fn bracket(&self, a: &[Q], b: &[Q]) -> Vector {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (k, s) in &self.bracket[i][j] {
                    out[*k] += x * y * s;
                }
            }
        }
        out
    }

    /// `[e_i, e_j]` as a sparse list.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.bracket[i][j]
    }

    /// `∂e_j` as a sparse list.
    pub fn differential_of(&self, j: usize) -> &[(usize, Q)] {
        &self.diff[j]
    }

    pub fn check_len(&self, v: &[Q]) -> Result<(), DglaError> {
        if v.len() != self.dim() {
            return Err(DglaError::Length { got: v.len(), dim: self.dim() });
        }
        Ok(())
    }

    /// The common degree of the nonzero coordinates, `None` for zero.
    pub fn homogeneous_degree(&self, v: &[Q]) -> Result<Option<i32>, DglaError> {
        self.check_len(v)?;
        let mut deg = None;
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match deg {
                None => deg = Some(self.degree(i)),
                Some(d) if d != self.degree(i) => return Err(DglaError::Inhomogeneous),
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn check_degree(&self, v: &[Q], expected: i32) -> Result<(), DglaError> {
        match self.homogeneous_degree(v) {
            Ok(None) => Ok(()),
            Ok(Some(d)) if d == expected => Ok(()),
            _ => Err(DglaError::Degree { expected }),
        }
    }

    /// Filtration level of `v`: the least level among its nonzero
    /// coordinates, `None` for zero.
    pub fn filtration(&self, v: &[Q]) -> Option<u32> {
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| self.level(i)).min()
    }

    pub fn render(&self, v: &[Q]) -> String {
        let parts: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| if c.is_one() { self.name(i).to_string() } else { format!("{c}*{}", self.name(i)) })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn to_json(&self) -> PresentationJson {
        let n = self.dim();
        let mut differential = Vec::new();
        for j in 0..n {
            for (k, c) in &self.diff[j] {
                differential.push(DiffJson {
                    from: self.name(j).into(),
                    to: self.name(*k).into(),
                    coeff: c.to_string(),
                });
            }
        }
        let mut bracket = Vec::new();
        for i in 0..n {
            for j in i..n {
                for (k, c) in &self.bracket[i][j] {
                    bracket.push(BracketJson {
                        left: self.name(i).into(),
                        right: self.name(j).into(),
                        out: self.name(*k).into(),
                        coeff: c.to_string(),
                    });
                }
            }
        }
        PresentationJson { generators: self.gens.clone(), differential, bracket, central_ideal: None }
    }

    pub fn from_json(p: &PresentationJson) -> Result<Dgla, DglaError> {
        let idx = |s: &str| {
            p.generators
                .iter()
                .position(|g| g.name == s)
                .ok_or_else(|| DglaError::Parse(format!("unknown generator {s}")))
        };
        let rat = |s: &str| parse_rational(s).map_err(|e| DglaError::Parse(e.to_string()));
        let mut diff = Vec::new();
        for d in &p.differential {
            diff.push((idx(&d.from)?, idx(&d.to)?, rat(&d.coeff)?));
        }
        let mut br = Vec::new();
        for b in &p.bracket {
            br.push((idx(&b.left)?, idx(&b.right)?, idx(&b.out)?, rat(&b.coeff)?));
        }
        Dgla::new(p.generators.clone(), &diff, &br)
    }

    pub fn parse(s: &str) -> Result<(Dgla, Option<Vec<String>>), DglaError> {
        let p: PresentationJson = serde_json::from_str(s).map_err(|e| DglaError::Parse(e.to_string()))?;
        Ok((Dgla::from_json(&p)?, p.central_ideal))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffJson {
    pub from: String,
    pub to: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketJson {
    pub left: String,
    pub right: String,
    pub out: String,
    pub coeff: String,
}

/// On-disk presentation. Coefficients are rational strings such as `"-3/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: Vec<Generator>,
    #[serde(default)]
    pub differential: Vec<DiffJson>,
    #[serde(default)]
    pub bracket: Vec<BracketJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central_ideal: Option<Vec<String>>,
}

pub fn add(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Q], c: &Q) -> Vector {
    a.iter().map(|x| x * c).collect()
}

pub fn is_zero(a: &[Q]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// A basis of the span of `rows`.
pub(crate) fn row_basis(rows: &[Vector]) -> Vec<Vector> {
    if rows.is_empty() {
        return Vec::new();
    }
    let (red, piv) = linalg::rref(&rows.to_vec());
    red.into_iter().take(piv.len()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::qi;

    fn gen(name: &str, degree: i32, level: u32) -> Generator {
        Generator { name: name.into(), degree, level }
    }

    fn heisenberg() -> Dgla {
        Dgla::new(vec![gen("x", 0, 1), gen("y", 0, 1), gen("z", 0, 2)], &[], &[(0, 1, 2, qi(1))]).unwrap()
    }

    #[test]
    fn antisymmetry_is_filled_in() {
        let g = heisenberg();
        assert_eq!(g.bracket(&g.unit(1), &g.unit(0)), vec![qi(0), qi(0), qi(-1)]);
        assert_eq!(g.nilpotency_class(), Some(3));
    }

    #[test]
    fn odd_brackets_are_symmetric() {
        let g = Dgla::new(vec![gen("a", 1, 1), gen("b", 1, 1), gen("w", 2, 2)], &[], &[(0, 1, 2, qi(1))]).unwrap();
        assert_eq!(g.bracket(&g.unit(1), &g.unit(0)), g.unit(2));
        assert_eq!(g.nilpotency_class(), Some(3));
    }

    #[test]
    fn rejects_broken_axioms() {
        // ∂² ≠ 0
        let e = Dgla::new(vec![gen("a", 0, 1), gen("b", 1, 1), gen("c", 2, 1)], &[(0, 1, qi(1)), (1, 2, qi(1))], &[]);
        assert!(matches!(e, Err(DglaError::Invalid(m)) if m.contains("∂²")));
        // wrong degree
        let e = Dgla::new(vec![gen("a", 0, 1), gen("b", 0, 1)], &[(0, 1, qi(1))], &[]);
        assert!(matches!(e, Err(DglaError::Invalid(_))));
        // bracket must respect the filtration
        let e = Dgla::new(vec![gen("x", 0, 1), gen("y", 0, 1), gen("z", 0, 1)], &[], &[(0, 1, 2, qi(1))]);
        assert!(matches!(e, Err(DglaError::Invalid(m)) if m.contains("filtration")));
        // Jacobi: [x,y]=y, [x,z]=z, [y,z]=x fails
        let e = Dgla::new(
            vec![gen("x", 0, 1), gen("y", 0, 1), gen("z", 0, 1)],
            &[],
            &[(1, 2, 0, qi(1)), (0, 1, 1, qi(1)), (0, 2, 2, qi(1))],
        );
        assert!(e.is_err());
        // inconsistent mirrored bracket
        let e =
            Dgla::new(vec![gen("x", 0, 1), gen("y", 0, 1), gen("z", 0, 2)], &[], &[(0, 1, 2, qi(1)), (1, 0, 2, qi(1))]);
        assert!(matches!(e, Err(DglaError::Invalid(m)) if m.contains("antisymmetric")));
    }

    #[test]
    fn leibniz_is_checked() {
        // [x, y] = z and ∂z = v, but [∂x, y] = [w, y] = 0
        let e = Dgla::new(
            vec![gen("x", 0, 1), gen("y", 0, 1), gen("z", 0, 2), gen("w", 1, 1), gen("v", 1, 2)],
            &[(0, 3, qi(1)), (2, 4, qi(1))],
            &[(0, 1, 2, qi(1))],
        );
        assert!(matches!(&e, Err(DglaError::Invalid(m)) if m.contains("Leibniz")), "{e:?}");
    }

    #[test]
    fn non_nilpotent_class() {
        // [x, y] = y at the same level is allowed only with level 0, so build
        // the filtration-free case by hand
        let g = Dgla::unchecked(vec![gen("x", 0, 1), gen("y", 0, 1)], &[], &[(0, 1, 1, qi(1))]).unwrap();
        assert_eq!(g.nilpotency_class(), None);
    }

    #[test]
    fn json_round_trip() {
        let g = heisenberg();
        let s = serde_json::to_string(&g.to_json()).unwrap();
        let (back, ideal) = Dgla::parse(&s).unwrap();
        assert_eq!(back, g);
        assert_eq!(ideal, None);
        assert!(Dgla::parse("{\"generators\": [{\"name\": \"x\", \"degree\": 0, \"level\": 1}], \"differential\": [{\"from\": \"x\", \"to\": \"q\", \"coeff\": \"1\"}]}").is_err());
    }

    #[test]
    fn homogeneity() {
        let g = heisenberg();
        assert_eq!(g.homogeneous_degree(&g.zero()), Ok(None));
        assert_eq!(g.homogeneous_degree(&g.unit(2)), Ok(Some(0)));
        assert!(g.check_degree(&g.unit(0), 1).is_err());
        assert_eq!(g.filtration(&add(&g.unit(0), &g.unit(2))), Some(1));
        assert_eq!(g.render(&add(&g.unit(0), &scale(&g.unit(2), &qi(-2)))), "x + -2*z");
    }
}
