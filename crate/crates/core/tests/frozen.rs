//! Values computed by a separate straightening and tableau-walk
//! implementation, frozen here.

use qelectric::fock::act_basis;
use qelectric::klr::{eklr_act, graded_hom_dim};
use qelectric::{ChargeVector, LaurentPoly, Partition, Residue, Scalar};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn fock(lam: &str, i: i64, eps: i64) -> Vec<(Partition, Scalar)> {
    act_basis(&p(lam), i, eps, false)
        .unwrap()
        .into_iter()
        .collect()
}

fn monos(terms: &[(&str, i64)]) -> Vec<(Partition, Scalar)> {
    terms
        .iter()
        .map(|(l, e)| (p(l), Scalar::q_pow(*e)))
        .collect()
}

#[test]
fn fock_coefficients() {
    type Case<'a> = (&'a str, i64, i64, &'a [(&'a str, i64)]);
    let cases: &[Case] = &[
        ("2,1", -2, 1, &[("2,1,1", 0)]),
        ("2,1", 2, 1, &[("1,1", -3), ("3,1", -4)]),
        ("2,1", 1, 1, &[]),
        ("3,1", 0, 1, &[("3", 1), ("3,2", 0)]),
        ("2,2", 0, 1, &[]),
        ("3,2,1", -1, 1, &[("3,2", 1), ("3,2,2", 0)]),
        ("1,1", 1, 1, &[("2,1", 4)]),
        ("2,1", -2, -1, &[("2,1,1", 0)]),
        ("2,1", 2, -1, &[("1,1", -5), ("3,1", -4)]),
        ("3,1", 0, -1, &[("3", -1), ("3,2", 0)]),
        ("3,2,1", -1, -1, &[("3,2", -1), ("3,2,2", 0)]),
        ("1,1", 1, -1, &[("2,1", 4)]),
    ];
    for (lam, i, eps, want) in cases {
        assert_eq!(fock(lam, *i, *eps), monos(want), "λ={lam} i={i} ε={eps}");
        let kl: Vec<(Partition, i64)> = want.iter().map(|(l, e)| (p(l), *e)).collect();
        assert_eq!(eklr_act(&p(lam), *i, *eps), kl, "λ={lam} i={i} ε={eps}");
    }
}

fn seq(xs: &[i64]) -> Vec<Residue> {
    xs.iter().map(|&x| Residue::symbolic(1, x)).collect()
}

#[test]
fn level_one_hom_dimensions() {
    let c = ChargeVector::generic(1);
    let cases: &[(&[i64], &[i64], Option<i64>)] = &[
        (&[0, 1, 0], &[0, 1, 0], Some(0)),
        (&[0, -1, 0], &[0, -1, 0], Some(0)),
        (&[0, 1, 0, -1], &[0, 1, 0, -1], Some(0)),
        (&[0, 0], &[0, 0], None),
        (&[0, 1, -1], &[0, -1, 1], Some(-4)),
        (&[0, 1, 1, 0], &[0, 1, 1, 0], None),
        (&[0, 1, 2, 1, 0], &[0, 1, 2, 1, 0], Some(0)),
        (&[0, 1, 2, 3], &[0, -1, 1, -2], Some(-4)),
        (&[0, 1, 2, 3], &[0, 1, 0, 1], Some(0)),
    ];
    for eps in [1, -1] {
        for (s, t, want) in cases {
            let want = want.map_or_else(LaurentPoly::zero, LaurentPoly::q_pow);
            assert_eq!(
                graded_hom_dim(&seq(s), &seq(t), &c, eps),
                want,
                "{s:?} → {t:?} ε={eps}"
            );
        }
    }
}

#[test]
fn level_two_counts() {
    use qelectric::tableaux::dimension_sum;
    let got: Vec<u128> = (0..=4).map(|m| dimension_sum(m, 2)).collect();
    assert_eq!(got, vec![1, 2, 12, 120, 1680]);
    let got: Vec<u128> = (0..=4).map(|m| dimension_sum(m, 3)).collect();
    assert_eq!(got, vec![1, 3, 27, 405, 8505]);
}
