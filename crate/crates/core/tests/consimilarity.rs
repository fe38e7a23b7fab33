mod common;

use common::*;
use proptest::prelude::*;
use splitq::consimilarity::{antipodal_candidates, is_consimilar, solve_xa_bxbar};
use splitq::matrix::s_rank_case;
use splitq::{s_matrix, Error, Exact, RankCase, Scalar};

fn solves(x: &Q, a: &Q, b: &Q) -> bool {
    x * a == b * &x.conjugate()
}

/// `b = -ā + t z` for a zero divisor `z`: `ā + b` is lightlike.
fn lightlike_sum() -> impl Strategy<Value = (Q, Q)> {
    (non_real(), lightlike(), 1i64..=3).prop_map(|(a, z, t)| {
        let b = z.scale(&Exact::from_i64(t)) - a.conjugate();
        (a, b)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn conjugate_sum_defect_is_norm_difference(a in quat(), b in quat()) {
        let x = a.conjugate() + &b;
        let defect = &x * &a - &b * &x.conjugate();
        prop_assert_eq!(defect, Q::from_real(a.i_norm() - b.i_norm()));
    }

    #[test]
    fn verdicts_and_witnesses(a in non_real(), b in non_real(), seed in any::<u64>()) {
        let verdict = is_consimilar(&a, &b).unwrap();
        let family = solve_xa_bxbar(&a, &b);
        prop_assert_eq!(family.dimension(), 4 - s_matrix(&a, &b).rank());
        for y in probes(seed) {
            prop_assert!(solves(&family.eval(&y), &a, &b));
        }
        match verdict.witness {
            Some(x) => {
                prop_assert!(verdict.consimilar);
                prop_assert_eq!(a.i_norm(), b.i_norm());
                prop_assert!(!x.is_lightlike());
                prop_assert!(solves(&x, &a, &b));
                prop_assert!(family.contains(&x));
            }
            None => {
                prop_assert!(!verdict.consimilar);
                for y in probes(seed) {
                    prop_assert!(family.eval(&y).is_lightlike());
                }
            }
        }
    }

    #[test]
    fn equal_norms_consimilar_through_the_sum(a in non_real(), p in quat()) {
        // b = p a p̄ / I(p) has I(b) = I(a)
        prop_assume!(!p.is_lightlike());
        let b = (&(&p * &a) * &p.conjugate()).div_scalar(&p.i_norm());
        prop_assume!(!b.is_real());
        prop_assert_eq!(b.i_norm(), a.i_norm());
        let sum = a.conjugate() + &b;
        prop_assert!(solves(&sum, &a, &b));
        let verdict = is_consimilar(&a, &b).unwrap();
        prop_assert_eq!(verdict.consimilar, sum.is_zero() || !sum.is_lightlike());
    }

    #[test]
    fn lightlike_sums_are_never_consimilar((a, b) in lightlike_sum()) {
        prop_assume!(!b.is_real() && !(a.conjugate() + &b).is_zero());
        let case = s_rank_case(&a, &b).unwrap();
        prop_assert!(matches!(case, RankCase::Rank3b | RankCase::Rank3c));
        prop_assert!(!is_consimilar(&a, &b).unwrap().consimilar);
        let family = solve_xa_bxbar(&a, &b);
        let sum = a.conjugate() + &b;
        let both_lightlike = a.i_norm().is_zero() && b.i_norm().is_zero();
        if !both_lightlike {
            prop_assert_eq!(family.dimension(), 1);
        }
        if case == RankCase::Rank3b {
            prop_assert!(family.contains(&sum));
        }
    }

    #[test]
    fn rank_case_matches_elimination(a in non_real(), b in quat()) {
        let case = s_rank_case(&a, &b).unwrap();
        let rank = s_matrix(&a, &b).rank();
        let exception = case == RankCase::Rank3b && a.i_norm().is_zero() && b.i_norm().is_zero();
        if exception {
            prop_assert!(rank == 2 || rank == 3);
        } else {
            prop_assert_eq!(rank, case.rank());
        }
    }

    #[test]
    fn antipodal_pairs(a in non_real()) {
        let b = -a.conjugate();
        prop_assume!(!b.is_real());
        for x in antipodal_candidates(&a) {
            prop_assert!(solves(&x, &a, &b));
        }
        let verdict = is_consimilar(&a, &b).unwrap();
        prop_assert!(verdict.consimilar);
        prop_assert_eq!(s_matrix(&a, &b).rank(), 1);
    }
}

#[test]
fn four_singular_pairs() {
    let a = q(1, 2, 3, 4);
    let rows = [
        (q(-1, 2, 3, 4), RankCase::Rank1, 1, true),
        (q(2, 1, 3, 4), RankCase::Rank3a, 3, true),
        (q(-2, 1, 4, 3), RankCase::Rank3b, 3, false),
        (q(2, 1, 0, 3), RankCase::Rank3c, 3, false),
    ];
    for (b, case, rank, consimilar) in rows {
        assert_eq!(s_rank_case(&a, &b), Ok(case));
        assert_eq!(s_matrix(&a, &b).rank(), rank);
        assert_eq!(solve_xa_bxbar(&a, &b).dimension(), 4 - rank);
        assert_eq!(is_consimilar(&a, &b).unwrap().consimilar, consimilar);
    }
}

#[test]
fn real_inputs_are_rejected() {
    let r = Q::from_real(Exact::from_i64(2));
    assert_eq!(
        is_consimilar(&r, &q(0, 1, 0, 0)),
        Err(Error::RealInput("a"))
    );
    assert_eq!(
        is_consimilar(&q(0, 1, 0, 0), &r),
        Err(Error::RealInput("b"))
    );
}
