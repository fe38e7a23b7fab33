//! Similarity: the equation `xa = bx` and canonical forms.
//!
//! For non-real `a, b` the matrix `T(a,b) = R(a) - L(b)` is singular in two
//! regimes. When `a0 = b0` and `K(a) = K(b)` it has rank 2 and
//! `T⁺ = (R(a') - L(b')) / (2(|Im a|² + |Im b|²))`, which yields the
//! projector form of the solution. When `a0 ≠ b0` and `det T = 0` it has
//! rank 3; then `p = I_b - I_a + 2(a0 - b0) a` is a nonzero zero divisor,
//! `T(a,b) T(a,b̄) = R(p)`, and the kernel is spanned by `u a - b̄ u` for
//! `u` in the left annihilator of `p`.
//!
//! Two non-real split quaternions are similar exactly when they share the
//! real part and `K`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{t_det, t_rank_case, RankCase};
use crate::pinv::times_j;
use crate::quaternion::{Complex, ComplexPair, SplitQuaternion};
use crate::scalar::{Approx, Scalar};
use crate::solve::SolutionFamily;

/// Upper bound on witness probes (fixed list plus random draws).
pub const WITNESS_SEARCH_CAP: usize = 1000;

fn require_non_real<S: Scalar>(a: &SplitQuaternion<S>, b: &SplitQuaternion<S>) -> Result<()> {
    if a.is_real() {
        Err(Error::RealInput("a"))
    } else if b.is_real() {
        Err(Error::RealInput("b"))
    } else {
        Ok(())
    }
}

/// All solutions of `xa = bx` when `a0 = b0` and `K(a) = K(b)`:
///
/// `x = y - (y a a' - b y a' - b' y a + b' b y) / (2(|Im a|² + |Im b|²))`.
pub fn solve_sim_rank2<S: Scalar>(
    a: &SplitQuaternion<S>,
    b: &SplitQuaternion<S>,
) -> Result<SolutionFamily<S>> {
    require_non_real(a, b)?;
    if !(a.re() - b.re()).is_zero() || !(a.k_form() - b.k_form()).is_zero() {
        return Err(Error::CaseMismatch("need Re(a) = Re(b) and K(a) = K(b)"));
    }
    let denom = S::from_i64(2) * (a.im_norm_sq() + b.im_norm_sq());
    let scaled = |q: SplitQuaternion<S>| q.div_scalar(&denom);
    let one = SplitQuaternion::one();
    let (ap, bp) = (a.prime(), b.prime());
    Ok(SolutionFamily::new(
        SplitQuaternion::zero(),
        vec![
            (one.clone(), one.clone()),
            (one.clone(), -scaled(a * &ap)),
            (b.clone(), scaled(ap)),
            (bp.clone(), scaled(a.clone())),
            (-scaled(&bp * b), one),
        ],
    ))
}

/// The factor `1 - (2(a0-b0) c2 / (I_b - I_a + 2(a0-b0) c̄1)) j` of the
/// rank-3 solution, i.e. twice the left annihilator projector `1 - p p⁺`
/// of `p = I_b - I_a + 2(a0-b0) a`.
fn rank3_factor<S: Scalar>(a: &SplitQuaternion<S>, b: &SplitQuaternion<S>) -> SplitQuaternion<S> {
    let twice = S::from_i64(2) * (a.re() - b.re());
    let ComplexPair { z1, z2 } = a.to_complex_pair();
    let num = Complex::new(twice.clone() * z2.re, twice.clone() * z2.im);
    let den = Complex::new(
        b.i_norm() - a.i_norm() + twice.clone() * z1.re,
        -(twice * z1.im),
    );
    SplitQuaternion::one() - times_j(&num.div(&den))
}

/// All solutions of `xa = bx` when `a0 ≠ b0` and `det T(a,b) = 0`:
///
/// `x = y u a - b̄ y u`, `u = 1 - (2(a0-b0) c2 / (I_b - I_a + 2(a0-b0) c̄1)) j`.
pub fn solve_sim_rank3<S: Scalar>(
    a: &SplitQuaternion<S>,
    b: &SplitQuaternion<S>,
) -> Result<SolutionFamily<S>> {
    require_non_real(a, b)?;
    if (a.re() - b.re()).is_zero() {
        return Err(Error::CaseMismatch("need Re(a) ≠ Re(b)"));
    }
    if !t_det(a, b).is_zero() {
        return Err(Error::CaseMismatch("need det T(a,b) = 0"));
    }
    let p = rank3_pivot(a, b);
    debug_assert!(!p.is_zero() && p.is_lightlike());
    let u = rank3_factor(a, b);
    Ok(SolutionFamily::new(
        SplitQuaternion::zero(),
        vec![(SplitQuaternion::one(), &u * a), (-b.conjugate(), u)],
    ))
}

/// `p = I_b - I_a + 2(a0 - b0) a`; `I(p) = det T(a,b)`.
pub fn rank3_pivot<S: Scalar>(
    a: &SplitQuaternion<S>,
    b: &SplitQuaternion<S>,
) -> SplitQuaternion<S> {
    let shift = SplitQuaternion::from_real(b.i_norm() - a.i_norm());
    shift + a.scale(&(S::from_i64(2) * (a.re() - b.re())))
}

/// All solutions of `xa = bx` for non-real `a, b`; `{0}` when `T(a,b)` is
/// invertible.
pub fn solve_xa_bx<S: Scalar>(
    a: &SplitQuaternion<S>,
    b: &SplitQuaternion<S>,
) -> Result<SolutionFamily<S>> {
    match t_rank_case(a, b)? {
        RankCase::Rank2 => solve_sim_rank2(a, b),
        RankCase::Rank3 => solve_sim_rank3(a, b),
        _ => Ok(SolutionFamily::point(SplitQuaternion::zero())),
    }
}

/// Verdict of [`is_similar`]; when similar, `witness` is an invertible `q`
/// with `q a = b q`.
#[derive(Clone, Debug, PartialEq)]
pub struct Similarity<S> {
    pub similar: bool,
    pub witness: Option<SplitQuaternion<S>>,
}

/// The fixed probe list tried before random parameters.
pub fn probe_list<S: Scalar>() -> Vec<SplitQuaternion<S>> {
    [
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
        (1, 1, 0, 0),
        (1, 0, 1, 0),
        (1, 0, 0, 1),
        (0, 1, 1, 0),
        (0, 0, 1, 1),
        (0, 1, 0, 1),
    ]
    .into_iter()
    .map(|(a, b, c, d)| SplitQuaternion::from_ints(a, b, c, d))
    .collect()
}

/// Random split quaternion with small rational coefficients.
pub(crate) fn random_probe<S: Scalar>(rng: &mut impl Rng) -> SplitQuaternion<S> {
    SplitQuaternion::from_array(std::array::from_fn(|_| {
        S::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
    }))
}

/// First invertible member of `family`, probing the fixed list and then
/// seeded random parameters.
pub fn find_invertible<S: Scalar>(
    family: &SolutionFamily<S>,
    seed: u64,
) -> Result<SplitQuaternion<S>> {
    let fixed = probe_list::<S>();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = std::iter::repeat_with(move || random_probe::<S>(&mut rng));
    fixed
        .into_iter()
        .chain(random)
        .take(WITNESS_SEARCH_CAP)
        .map(|y| family.eval(&y))
        .find(|x| !x.is_lightlike())
        .ok_or(Error::WitnessSearchExhausted {
            attempts: WITNESS_SEARCH_CAP,
        })
}

/// Decides whether `q a q⁻¹ = b` for some invertible `q`.
///
/// Real numbers are only similar to themselves; a real and a non-real
/// element are never similar. For non-real inputs the criterion is
/// `Re(a) = Re(b)` and `K(a) = K(b)`, and the witness is searched in the
/// rank-2 solution family.
pub fn is_similar<S: Scalar>(
    a: &SplitQuaternion<S>,
    b: &SplitQuaternion<S>,
    seed: u64,
) -> Result<Similarity<S>> {
    let no = Similarity {
        similar: false,
        witness: None,
    };
    match (a.is_real(), b.is_real()) {
        (true, true) => {
            return Ok(if a == b {
                Similarity {
                    similar: true,
                    witness: Some(SplitQuaternion::one()),
                }
            } else {
                no
            })
        }
        (true, false) | (false, true) => return Ok(no),
        (false, false) => {}
    }
    if !(a.re() - b.re()).is_zero() || !(a.k_form() - b.k_form()).is_zero() {
        return Ok(no);
    }
    let family = solve_sim_rank2(a, b)?;
    let witness = find_invertible(&family, seed)?;
    Ok(Similarity {
        similar: true,
        witness: Some(witness),
    })
}

/// A canonical representative `target = q a q⁻¹` with its conjugator.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalForm<S> {
    pub target: SplitQuaternion<S>,
    pub conjugator: SplitQuaternion<S>,
}

impl<S: Scalar> CanonicalForm<S> {
    /// `‖q a - target q‖`, zero on the exact backend.
    pub fn residual(&self, a: &SplitQuaternion<S>) -> f64 {
        (&self.conjugator * a - &self.target * &self.conjugator).euclidean_norm()
    }
}

/// Canonical form on the backend of the input, or on the floating-point
/// backend when its square root is not representable there.
#[derive(Clone, Debug, PartialEq)]
pub enum Canonical<S> {
    Native(CanonicalForm<S>),
    Escalated(CanonicalForm<Approx>),
}

/// Canonical representative of the similarity class of a non-real `a`:
///
/// * `K(a) > 0`: `a0 + √K(a) j`
/// * `K(a) < 0`: `a0 + √(-K(a)) i`
/// * `K(a) = 0`: `a0 + i + j`
///
/// Fails with [`Error::NotRepresentable`] when `√|K(a)|` is irrational on
/// the exact backend; see [`canonical_form_or_approx`].
pub fn canonical_form<S: Scalar>(a: &SplitQuaternion<S>, seed: u64) -> Result<CanonicalForm<S>> {
    if a.is_real() {
        return Err(Error::RealInput("a"));
    }
    let k = a.k_form();
    let a0 = a.re();
    let zero = S::zero;
    let target = match k.sign() {
        std::cmp::Ordering::Equal => {
            return Ok(lightlike_canonical_form(a));
        }
        std::cmp::Ordering::Greater => {
            let s = k.sqrt().ok_or(Error::NotRepresentable("√K(a)"))?;
            SplitQuaternion::new(a0, zero(), s, zero())
        }
        std::cmp::Ordering::Less => {
            let s = (-k).sqrt().ok_or(Error::NotRepresentable("√-K(a)"))?;
            SplitQuaternion::new(a0, s, zero(), zero())
        }
    };
    let verdict = is_similar(a, &target, seed)?;
    let conjugator = verdict
        .witness
        .expect("target shares Re and K with the input");
    Ok(CanonicalForm { target, conjugator })
}

pub fn canonical_form_or_approx<S: Scalar>(
    a: &SplitQuaternion<S>,
    seed: u64,
) -> Result<Canonical<S>> {
    match canonical_form(a, seed) {
        Ok(form) => Ok(Canonical::Native(form)),
        Err(Error::NotRepresentable(_)) => {
            canonical_form(&a.to_approx(), seed).map(Canonical::Escalated)
        }
        Err(e) => Err(e),
    }
}

/// Explicit conjugation of a non-real `a` with `K(a) = 0` to `a0 + i + j`,
/// in two steps: first to `a0 + a1 i - a1 j`, then to `a0 + i + j`.
fn lightlike_canonical_form<S: Scalar>(a: &SplitQuaternion<S>) -> CanonicalForm<S> {
    let [a0, a1, a2, a3] = a.to_array();
    let one = || SplitQuaternion::<S>::one();

    // Units act by sign flips: i keeps the i-part and negates j,k; j keeps
    // j and negates i,k; k keeps k and negates i,j.
    let first = if !a3.is_zero() {
        SplitQuaternion::new(a1.clone() - a2, a3, S::zero(), S::zero())
    } else if (a2 + a1.clone()).is_zero() {
        one()
    } else {
        SplitQuaternion::i()
    };

    let second = if (a1.clone() - S::one()).is_zero() {
        SplitQuaternion::i()
    } else if (a1.clone() + S::one()).is_zero() {
        SplitQuaternion::j()
    } else {
        SplitQuaternion::new(S::zero(), S::one() + a1.clone(), S::one() - a1, S::zero())
    };

    CanonicalForm {
        target: SplitQuaternion::new(a0, S::one(), S::one(), S::zero()),
        conjugator: second * first,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::t_matrix;
    use crate::scalar::Exact;

    type Q = SplitQuaternion<Exact>;

    fn q(a: i64, b: i64, c: i64, d: i64) -> Q {
        Q::from_ints(a, b, c, d)
    }

    fn probes() -> Vec<Q> {
        let mut v = probe_list::<Exact>();
        v.push(Q::zero());
        v.push(q(1, 1, 1, 1));
        v
    }

    fn check_family(a: &Q, b: &Q, fam: &SolutionFamily<Exact>) {
        for y in probes() {
            let x = fam.eval(&y);
            assert_eq!(&x * a, b * &x, "y = {y}");
        }
        assert_eq!(fam.dimension(), 4 - t_matrix(a, b).rank());
    }

    #[test]
    fn rank2_family_on_worked_pairs() {
        for (a, b) in [
            (q(1, 3, 2, 1), q(1, 3, 1, 2)),
            (q(1, 5, 3, 4), q(1, 13, 12, 5)),
            (q(0, 1, 2, 2), q(0, 1, 2, 2)),
        ] {
            let fam = solve_sim_rank2(&a, &b).unwrap();
            assert_eq!(fam.dimension(), 2);
            check_family(&a, &b, &fam);
        }
        let a = q(0, 1, 2, 2);
        assert_eq!(solve_sim_rank2(&a, &a).unwrap().eval(&Q::one()), Q::one());
    }

    #[test]
    fn rank3_family_spans_amended_line() {
        let (a, b) = (q(1, 5, 5, 2), q(2, 1, 1, 3));
        let fam = solve_sim_rank3(&a, &b).unwrap();
        assert_eq!(fam.dimension(), 1);
        check_family(&a, &b, &fam);
        assert_eq!(rank3_factor(&a, &b), q(1, 0, 0, -1));
        assert_eq!(
            fam.eval(&Q::one()),
            q(-3, 1, 1, 3).scale(&Exact::from_i64(2))
        );
        for y in probes() {
            assert!(fam.eval(&y).is_parallel_to(&q(-3, 1, 1, 3)));
        }
        let p = rank3_pivot(&a, &b);
        assert!(!p.is_zero() && p.is_lightlike());
    }

    #[test]
    fn rank3_second_example() {
        let (a, b) = (q(2, 1, 0, 1), q(1, 0, 0, 1));
        let fam = solve_sim_rank3(&a, &b).unwrap();
        assert_eq!(fam.dimension(), 1);
        check_family(&a, &b, &fam);
    }

    #[test]
    fn case_guards() {
        assert_eq!(
            solve_sim_rank2(&q(1, 5, 5, 2), &q(2, 1, 1, 3)).unwrap_err(),
            Error::CaseMismatch("need Re(a) = Re(b) and K(a) = K(b)")
        );
        assert!(matches!(
            solve_sim_rank3(&q(1, 3, 2, 1), &q(1, 3, 1, 2)),
            Err(Error::CaseMismatch(_))
        ));
        assert!(matches!(
            solve_sim_rank3(&q(2, 1, 0, 0), &q(1, 0, 1, 0)),
            Err(Error::CaseMismatch(_))
        ));
        assert_eq!(
            solve_xa_bx(&q(1, 0, 0, 0), &Q::i()),
            Err(Error::RealInput("a"))
        );
    }

    #[test]
    fn nonsingular_dispatch_gives_zero_family() {
        let fam = solve_xa_bx(&Q::i(), &Q::j()).unwrap();
        assert_eq!(fam.dimension(), 0);
        assert_eq!(fam.eval(&q(3, 1, 4, 1)), Q::zero());
        assert_eq!(t_matrix(&Q::i(), &Q::j()).rank(), 4);
    }

    #[test]
    fn similarity_verdicts() {
        let (a, b) = (q(1, 5, 3, 4), q(1, 13, 12, 5));
        let v = is_similar(&a, &b, 7).unwrap();
        assert!(v.similar);
        let w = v.witness.unwrap();
        assert!(!w.is_lightlike());
        assert_eq!(&w * &a, &b * &w);

        assert!(!is_similar(&Q::i(), &Q::j(), 0).unwrap().similar);
        let c = q(2, -1, 3, 1);
        assert_eq!(is_similar(&c, &c, 0).unwrap().witness, Some(Q::one()));
        assert!(
            is_similar(&q(3, 0, 0, 0), &q(3, 0, 0, 0), 0)
                .unwrap()
                .similar
        );
        assert!(
            !is_similar(&q(3, 0, 0, 0), &q(2, 0, 0, 0), 0)
                .unwrap()
                .similar
        );
        assert!(
            !is_similar(&q(3, 0, 0, 0), &q(3, 1, 0, 0), 0)
                .unwrap()
                .similar
        );
    }

    fn check_canonical(a: &Q, expected: &Q) {
        let form = canonical_form(a, 1).unwrap();
        assert_eq!(form.target, *expected);
        assert!(!form.conjugator.is_lightlike());
        assert_eq!(&form.conjugator * a, &form.target * &form.conjugator);
    }

    #[test]
    fn canonical_forms_for_k_zero() {
        // a3 ≠ 0 path, a1 ∉ {±1}
        check_canonical(&q(1, 5, 3, 4), &q(1, 1, 1, 0));
        // a3 = 0, a2 = a1
        check_canonical(&q(2, 3, 3, 0), &q(2, 1, 1, 0));
        // a3 = 0, a2 = -a1
        check_canonical(&q(0, -2, 2, 0), &q(0, 1, 1, 0));
        // a1 = ±1 paths
        check_canonical(&q(4, 1, -1, 0), &q(4, 1, 1, 0));
        check_canonical(&q(4, -1, 1, 0), &q(4, 1, 1, 0));
        check_canonical(&q(4, 1, 1, 0), &q(4, 1, 1, 0));
        // a1 = -5 with a3 ≠ 0
        check_canonical(&q(0, -5, 3, 4), &q(0, 1, 1, 0));
    }

    #[test]
    fn canonical_forms_for_k_nonzero() {
        check_canonical(&q(1, 3, 2, 1), &q(1, 2, 0, 0));
        check_canonical(&q(-2, 0, 3, 4), &q(-2, 0, 5, 0));
        assert_eq!(
            canonical_form(&q(2, 0, 0, 0), 0),
            Err(Error::RealInput("a"))
        );
    }

    #[test]
    fn irrational_target_escalates() {
        let a = q(2, 1, 2, 2);
        assert_eq!(canonical_form(&a, 0), Err(Error::NotRepresentable("√K(a)")));
        match canonical_form_or_approx(&a, 0).unwrap() {
            Canonical::Escalated(form) => {
                assert!((form.target.q2().value() - 7f64.sqrt()).abs() < 1e-12);
                assert!(form.residual(&a.to_approx()) <= 1e-9);
            }
            Canonical::Native(_) => panic!("√7 is irrational"),
        }
    }
}
