//! JSON forms: coefficients are exact rational strings.

use serde::{Deserialize, Serialize};

use crate::{parse_rational, rational_string, AlgebraError, ExtElement, Monomial, Polynomial, Side};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<u16>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

pub fn var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("z{i}")).collect()
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        PolynomialJson {
            vars: var_names(p.n()),
            terms: p
                .terms()
                .map(|(m, c)| TermJson { coeff: rational_string(c), exps: m.0.clone(), xi: None })
                .collect(),
        }
    }
}

impl TryFrom<&PolynomialJson> for Polynomial {
    type Error = AlgebraError;

    fn try_from(j: &PolynomialJson) -> Result<Self, AlgebraError> {
        let n = j.vars.len();
        if n == 0 || n > crate::MAX_VARS {
            return Err(AlgebraError::VariableCount(n));
        }
        let mut p = Polynomial::zero(n);
        for (i, t) in j.terms.iter().enumerate() {
            if t.exps.len() != n {
                return Err(AlgebraError::Parse(format!("terms[{i}].exps has length {}, expected {n}", t.exps.len())));
            }
            if t.xi.is_some() {
                return Err(AlgebraError::Parse(format!("terms[{i}] carries xi in a polynomial")));
            }
            let c = parse_rational(&t.coeff).map_err(|e| AlgebraError::Parse(format!("terms[{i}].coeff: {e}")))?;
            p.add_term(Monomial(t.exps.clone()), c);
        }
        Ok(p)
    }
}

pub fn polynomial_to_json(p: &Polynomial) -> String {
    serde_json::to_string(&PolynomialJson::from(p)).expect("serializable")
}

pub fn polynomial_from_json(s: &str) -> Result<Polynomial, AlgebraError> {
    let j: PolynomialJson = serde_json::from_str(s).map_err(|e| AlgebraError::Parse(e.to_string()))?;
    Polynomial::try_from(&j)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtTermJson {
    pub coeff: String,
    pub mask: u16,
}

pub fn ext_to_json(e: &ExtElement) -> Vec<ExtTermJson> {
    e.terms().map(|(m, c)| ExtTermJson { coeff: rational_string(c), mask: m }).collect()
}

pub fn ext_from_json(side: Side, n: usize, terms: &[ExtTermJson]) -> Result<ExtElement, AlgebraError> {
    let mut e = ExtElement::zero(side, n);
    for t in terms {
        if t.mask >> n != 0 {
            return Err(AlgebraError::Parse(format!("mask {} exceeds {n} generators", t.mask)));
        }
        e.add_term(t.mask, parse_rational(&t.coeff)?);
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    #[test]
    fn polynomial_round_trip() {
        let p = Polynomial::from_terms(3, [(q(-1, 3), vec![0, 1, 1]), (q(1, 1), vec![6, 0, 0])]);
        let s = polynomial_to_json(&p);
        assert_eq!(
            s,
            r#"{"vars":["z1","z2","z3"],"terms":[{"coeff":"-1/3","exps":[0,1,1]},{"coeff":"1","exps":[6,0,0]}]}"#
        );
        assert_eq!(polynomial_from_json(&s).unwrap(), p);
        assert!(polynomial_from_json(r#"{"vars":["z1"],"terms":[{"coeff":"1/0","exps":[1]}]}"#).is_err());
        assert!(polynomial_from_json(r#"{"vars":["z1"],"terms":[{"coeff":"1","exps":[1,2]}]}"#).is_err());
    }
}
