//! Command execution, generic over the scalar backend. Every command
//! returns its result together with an independent substitution check.

use serde_json::{json, Value};
use splitq::consimilarity::{is_consimilar, solve_xa_bxbar};
use splitq::matrix::{s_det, s_eigenvalues, s_rank_case, t_det, t_eigenvalues, t_rank_case};
use splitq::pinv::mp_inverse_diagnosed;
use splitq::roots::{is_idempotent, is_nilpotent, nth_roots, power, power_by_squaring};
use splitq::similarity::{
    canonical_form_or_approx, is_similar, probe_list, solve_xa_bx, Canonical, CanonicalForm,
};
use splitq::solve::{solve_ax0, solve_axb, solve_axd, solve_xad};
use splitq::{
    left_matrix, right_matrix, s_matrix, t_matrix, Complex, Mat4, Result, Scalar, SolutionFamily,
    SolveOutcome, SplitQuaternion,
};

use crate::{Command, MatrixKind};

pub struct Outcome {
    pub result: Value,
    pub verified: bool,
    /// `Some(false)` for a negative similarity or consimilarity verdict.
    pub verdict: Option<bool>,
}

impl Outcome {
    fn new(result: Value, verified: bool) -> Self {
        Outcome {
            result,
            verified,
            verdict: None,
        }
    }
}

fn lit<S: Scalar>(q: &SplitQuaternion<S>) -> Value {
    Value::String(format!("{q:#}"))
}

fn scalar<S: Scalar>(s: &S) -> Value {
    Value::String(format!("{s:#}"))
}

fn family_json<S: Scalar>(family: &SolutionFamily<S>) -> Value {
    json!({
        "constant": lit(family.constant()),
        "terms": family.terms().iter().map(|(l, r)| json!([lit(l), lit(r)])).collect::<Vec<_>>(),
        "dimension": family.dimension(),
        "basis": family.basis().iter().map(lit).collect::<Vec<_>>(),
    })
}

fn matrix_json<S: Scalar>(m: &Mat4<S>) -> Value {
    m.rows()
        .iter()
        .map(|row| row.iter().map(scalar).collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .into()
}

fn complex_json<S: Scalar>(values: &[Complex<S>]) -> Value {
    values
        .iter()
        .map(|z| lit(&z.to_quaternion()))
        .collect::<Vec<_>>()
        .into()
}

/// Members of `family` at the fixed probes all satisfy `holds`, and the
/// family has the dimension of the kernel of `m`.
fn family_checks<S: Scalar>(
    family: &SolutionFamily<S>,
    m: &Mat4<S>,
    holds: impl Fn(&SplitQuaternion<S>) -> bool,
) -> bool {
    family.dimension() + m.rank() == 4 && probe_list::<S>().iter().all(|y| holds(&family.eval(y)))
}

fn no_invertible_member<S: Scalar>(family: &SolutionFamily<S>) -> bool {
    probe_list::<S>()
        .iter()
        .all(|y| family.eval(y).is_lightlike())
}

fn solve_outcome<S: Scalar>(
    outcome: SolveOutcome<S>,
    m: &Mat4<S>,
    d: &SplitQuaternion<S>,
    holds: impl Fn(&SplitQuaternion<S>) -> bool,
) -> Outcome {
    match outcome {
        SolveOutcome::Solvable(family) => {
            let verified = m.is_consistent(&d.to_array()) && family_checks(&family, m, holds);
            Outcome::new(
                json!({ "solvable": true, "family": family_json(&family) }),
                verified,
            )
        }
        SolveOutcome::Unsolvable(residual) => Outcome::new(
            json!({ "solvable": false, "residual": lit(&residual) }),
            !m.is_consistent(&d.to_array()),
        ),
    }
}

fn canonical_json<T: Scalar>(
    form: &CanonicalForm<T>,
    a: &SplitQuaternion<T>,
    escalated: bool,
) -> (Value, bool) {
    let residual = form.residual(a);
    let verified = !form.conjugator.is_lightlike()
        && if T::EXACT {
            residual == 0.0
        } else {
            residual <= 1e-9 * (1.0 + a.euclidean_norm())
        };
    (
        json!({
            "target": lit(&form.target),
            "conjugator": lit(&form.conjugator),
            "escalated": escalated,
            "residual": residual,
        }),
        verified,
    )
}

pub fn run<S: Scalar>(cmd: &Command, qs: &[SplitQuaternion<S>], seed: u64) -> Result<Outcome> {
    let q = &qs[0];
    Ok(match cmd {
        Command::Classify { .. } => {
            let i_norm = q.i_norm();
            let k_form = q.k_form();
            let im = q.im();
            let verified = q * &q.conjugate() == SplitQuaternion::from_real(i_norm.clone())
                && &im * &im == SplitQuaternion::from_real(k_form.clone());
            Outcome::new(
                json!({
                    "class": q.classify().to_string(),
                    "re": scalar(&q.re()),
                    "I": scalar(&i_norm),
                    "K": scalar(&k_form),
                    "real": q.is_real(),
                    "nilpotent": is_nilpotent(q),
                    "idempotent": is_idempotent(q),
                }),
                verified,
            )
        }
        Command::Pinv { .. } => {
            let p = mp_inverse_diagnosed(q);
            let verified = left_matrix(q).penrose_equations(&left_matrix(&p.value)) == [true; 4];
            Outcome::new(
                json!({ "pinv": lit(&p.value), "ill_conditioned": p.ill_conditioned }),
                verified,
            )
        }
        Command::Roots { n, .. } => {
            let out = nth_roots(q, *n)?;
            let target = q.to_approx();
            let tol = 1e-8 * (1.0 + target.euclidean_norm());
            let verified = out
                .roots
                .iter()
                .all(|w| (power(w, *n) - &target).euclidean_norm() <= tol);
            Outcome::new(
                json!({
                    "roots": out.roots.iter().map(lit).collect::<Vec<_>>(),
                    "count": out.roots.len(),
                    "escalated": out.escalated,
                }),
                verified,
            )
        }
        Command::Power { n, .. } => {
            let p = power(q, *n);
            let verified = p == power_by_squaring(q, *n);
            Outcome::new(json!({ "power": lit(&p) }), verified)
        }
        Command::SolveAxb { .. } => {
            let (a, b, d) = (&qs[0], &qs[1], &qs[2]);
            let m = left_matrix(a) * right_matrix(b);
            solve_outcome(solve_axb(a, b, d)?, &m, d, |x| &(a * x) * b == *d)
        }
        Command::SolveAx0 { .. } => {
            let family = solve_ax0(q)?;
            let m = left_matrix(q);
            let verified = family_checks(&family, &m, |x| (q * x).is_zero());
            Outcome::new(json!({ "family": family_json(&family) }), verified)
        }
        Command::SolveAxd { .. } => {
            let (a, d) = (&qs[0], &qs[1]);
            solve_outcome(solve_axd(a, d)?, &left_matrix(a), d, |x| a * x == *d)
        }
        Command::SolveXad { .. } => {
            let (a, d) = (&qs[0], &qs[1]);
            solve_outcome(solve_xad(a, d)?, &right_matrix(a), d, |x| x * a == *d)
        }
        Command::Similar { .. } => {
            let (a, b) = (&qs[0], &qs[1]);
            let verdict = is_similar(a, b, seed)?;
            let verified = match &verdict.witness {
                Some(w) => !w.is_lightlike() && w * a == b * w,
                None if a.is_real() || b.is_real() => true,
                None => no_invertible_member(&solve_xa_bx(a, b)?),
            };
            Outcome {
                result: json!({
                    "similar": verdict.similar,
                    "witness": verdict.witness.as_ref().map(lit),
                }),
                verified,
                verdict: Some(verdict.similar),
            }
        }
        Command::SimSolve { .. } => {
            let (a, b) = (&qs[0], &qs[1]);
            let family = solve_xa_bx(a, b)?;
            let verified = family_checks(&family, &t_matrix(a, b), |x| x * a == b * x);
            Outcome::new(json!({ "family": family_json(&family) }), verified)
        }
        Command::Canonical { .. } => {
            let (result, verified) = match canonical_form_or_approx(q, seed)? {
                Canonical::Native(form) => canonical_json(&form, q, false),
                Canonical::Escalated(form) => canonical_json(&form, &q.to_approx(), true),
            };
            Outcome::new(result, verified)
        }
        Command::Consimilar { .. } => {
            let (a, b) = (&qs[0], &qs[1]);
            let verdict = is_consimilar(a, b)?;
            let verified = match &verdict.witness {
                Some(x) => !x.is_lightlike() && x * a == b * &x.conjugate(),
                None => no_invertible_member(&solve_xa_bxbar(a, b)),
            };
            Outcome {
                result: json!({
                    "consimilar": verdict.consimilar,
                    "witness": verdict.witness.as_ref().map(lit),
                }),
                verified,
                verdict: Some(verdict.consimilar),
            }
        }
        Command::ConsimSolve { .. } => {
            let (a, b) = (&qs[0], &qs[1]);
            let family = solve_xa_bxbar(a, b);
            let verified = family_checks(&family, &s_matrix(a, b), |x| x * a == b * &x.conjugate());
            Outcome::new(json!({ "family": family_json(&family) }), verified)
        }
        Command::Matrix { kind, .. } => matrix(*kind, qs)?,
    })
}

fn matrix<S: Scalar>(kind: MatrixKind, qs: &[SplitQuaternion<S>]) -> Result<Outcome> {
    let basis = SplitQuaternion::<S>::basis();
    let (a, b) = (&qs[0], qs.get(1));
    let outcome = match (kind, b) {
        (MatrixKind::L, _) | (MatrixKind::R, _) => {
            let (m, verified) = if kind == MatrixKind::L {
                let m = left_matrix(a);
                let ok = basis.iter().all(|x| m.apply(x) == a * x);
                (m, ok)
            } else {
                let m = right_matrix(a);
                let ok = basis.iter().all(|x| m.apply(x) == x * a);
                (m, ok)
            };
            Outcome::new(
                json!({
                    "matrix": matrix_json(&m),
                    "rank": m.rank(),
                    "det": scalar(&m.det()),
                }),
                verified,
            )
        }
        (MatrixKind::T, Some(b)) => {
            let m = t_matrix(a, b);
            let det = m.det();
            let closed = t_det(a, b);
            let (eigen, escalated) = match t_eigenvalues(a, b) {
                Some(v) => (complex_json(&v), false),
                None => (
                    t_eigenvalues(&a.to_approx(), &b.to_approx())
                        .map_or(Value::Null, |v| complex_json(&v)),
                    true,
                ),
            };
            Outcome::new(
                json!({
                    "matrix": matrix_json(&m),
                    "rank": m.rank(),
                    "det": scalar(&det),
                    "case": t_rank_case(a, b).ok().map(|c| c.to_string()),
                    "eigenvalues": eigen,
                    "eigenvalues_escalated": escalated,
                }),
                det == closed,
            )
        }
        (MatrixKind::S, Some(b)) => {
            let m = s_matrix(a, b);
            let det = m.det();
            let closed = s_det(a, b);
            let (eigen, escalated) = match s_eigenvalues(a, b) {
                Some(v) => (complex_json(&v), false),
                None => (
                    s_eigenvalues(&a.to_approx(), &b.to_approx())
                        .map_or(Value::Null, |v| complex_json(&v)),
                    true,
                ),
            };
            Outcome::new(
                json!({
                    "matrix": matrix_json(&m),
                    "rank": m.rank(),
                    "det": scalar(&det),
                    "case": s_rank_case(a, b).ok().map(|c| c.to_string()),
                    "eigenvalues": eigen,
                    "eigenvalues_escalated": escalated,
                }),
                det == closed,
            )
        }
        (_, None) => unreachable!("arity checked before dispatch"),
    };
    Ok(outcome)
}
