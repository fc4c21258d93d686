use exact_algebra::{qi, Monomial};
use polyvector::{hkr, hkr_eval, Polyvector};
use transfer::Transferred;

#[test]
fn cubic_term_of_the_transferred_structure() {
    let t = Transferred::for_genus(3);
    let mut beta = hochschild::Cochain::zero(3);
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let args = vec![1u16 << a, 1 << b, 1 << c];
                let v = t.try_mu(&args).unwrap();
                beta.set(args, v);
            }
        }
    }
    let want = Polyvector::term(Monomial(vec![1, 1, 1]), 0, qi(-1));
    assert_eq!(hkr(&beta, 10), want);
    assert_eq!(hkr_eval(3, 3, 10, |args| t.try_mu(args).unwrap()).lambda_part(0).sym_part(3), want);
}
