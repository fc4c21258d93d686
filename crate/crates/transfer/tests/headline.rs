use exact_algebra::{qi, Polynomial};
use matrix_factorization::MFData;
use transfer::*;

fn fermat(g: u32) -> Polynomial {
    let e = 2 * g + 1;
    Polynomial::from_terms(3, [(qi(1), vec![e, 0, 0]), (qi(1), vec![0, e, 0]), (qi(1), vec![0, 0, e])])
}

#[test]
fn genus_three_diagonals() {
    let mu = Transferred::for_genus(3);
    let cubic = diagonal_polynomial(3, &diagonal_component(&mu, 3, 3, 0)).unwrap();
    assert_eq!(cubic, Polynomial::from_terms(3, [(qi(-1), vec![1, 1, 1])]));
    let top = diagonal_polynomial(3, &diagonal_component(&mu, 3, 7, 1)).unwrap();
    assert_eq!(top, fermat(3));
    // nothing else survives on the diagonal between the two
    for d in 4..7 {
        assert!(hkr_diagonal_terms(3, d, |a| hochschild::AInfStructure::mu(&mu, a)).is_empty(), "arity {d}");
    }
}

#[test]
fn genus_three_report() {
    let rep = hypothesis_check(MFData::for_genus(3), 7, 20, 5);
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(rep.lambda, None);
}

#[test]
fn genus_four_report_has_lambda() {
    let rep = hypothesis_check(MFData::for_genus(4), 7, 20, 5);
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(rep.lambda.as_deref(), Some("0"));
    assert!(rep.clause(VANISHING).unwrap().detail.starts_with("arities 3..5"));
}

#[test]
fn dropping_the_power_term_breaks_the_top_diagonal() {
    let mut mf = MFData::for_genus(3);
    mf.gamma[0] = mf.gamma[0].filter(|m| m.degree() < 6);
    let rep = hypothesis_check(mf, 7, 5, 4);
    assert!(rep.clause(CUBIC).unwrap().passed);
    assert!(!rep.clause(TOP).unwrap().passed);
}
