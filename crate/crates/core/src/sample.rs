//! Random split quaternions with small rational coefficients, for property
//! checks and examples. All samplers take the RNG explicitly.

use rand::Rng;

use crate::quaternion::{CausalClass, Complex, SplitQuaternion};
use crate::scalar::{Exact, Scalar};

fn small_rational(rng: &mut impl Rng) -> Exact {
    let num = rng.gen_range(-12..=12);
    let den = if rng.gen_bool(0.7) {
        1
    } else {
        rng.gen_range(2..=5)
    };
    Exact::from_ratio(num, den)
}

fn nonzero_rational(rng: &mut impl Rng) -> Exact {
    loop {
        let r = small_rational(rng);
        if !Scalar::is_zero(&r) {
            return r;
        }
    }
}

/// Any split quaternion.
pub fn quaternion(rng: &mut impl Rng) -> SplitQuaternion<Exact> {
    SplitQuaternion::from_array(std::array::from_fn(|_| small_rational(rng)))
}

/// A split quaternion with nonzero imaginary part.
pub fn non_real(rng: &mut impl Rng) -> SplitQuaternion<Exact> {
    loop {
        let q = quaternion(rng);
        if !q.is_real() {
            return q;
        }
    }
}

/// A split quaternion with `I(q) ≠ 0`.
pub fn invertible(rng: &mut impl Rng) -> SplitQuaternion<Exact> {
    loop {
        let q = quaternion(rng);
        if !q.is_lightlike() {
            return q;
        }
    }
}

/// A rational point `(m² - n², 2mn) / (m² + n²)` on the unit circle.
fn unit_complex(rng: &mut impl Rng) -> Complex<Exact> {
    let (m, n) = (rng.gen_range(-6i64..=6), rng.gen_range(-6i64..=6));
    if m == 0 && n == 0 {
        return Complex::real(Exact::from_i64(1));
    }
    let den = m * m + n * n;
    Complex::new(
        Exact::from_ratio(m * m - n * n, den),
        Exact::from_ratio(2 * m * n, den),
    )
}

/// A nonzero zero divisor `z + (z·u) j` with `|u| = 1`.
pub fn lightlike(rng: &mut impl Rng) -> SplitQuaternion<Exact> {
    loop {
        let z1 = Complex::new(small_rational(rng), small_rational(rng));
        if z1.is_zero() {
            continue;
        }
        let z2 = z1.mul(&unit_complex(rng));
        let q = SplitQuaternion::new(z1.re, z1.im, z2.re, z2.im);
        debug_assert!(q.is_lightlike());
        return q;
    }
}

/// A split quaternion of the requested causal class.
pub fn of_class(rng: &mut impl Rng, class: CausalClass) -> SplitQuaternion<Exact> {
    match class {
        CausalClass::Lightlike => lightlike(rng),
        _ => loop {
            let q = invertible(rng);
            if q.classify() == class {
                return q;
            }
        },
    }
}

/// A non-real element with `K(q) = 0`: imaginary part on the light cone
/// `q1² = q2² + q3²`.
pub fn k_zero(rng: &mut impl Rng) -> SplitQuaternion<Exact> {
    let u = unit_complex(rng);
    let scale = nonzero_rational(rng);
    SplitQuaternion::new(
        small_rational(rng),
        scale.clone(),
        scale.clone() * u.re,
        scale * u.im,
    )
}

/// A non-real element with `K(q) ≠ 0`.
pub fn k_nonzero(rng: &mut impl Rng) -> SplitQuaternion<Exact> {
    loop {
        let q = non_real(rng);
        if !Scalar::is_zero(&q.k_form()) {
            return q;
        }
    }
}

/// `p a p⁻¹` for a random invertible `p`; similar to `a` by construction.
pub fn conjugate_of(rng: &mut impl Rng, a: &SplitQuaternion<Exact>) -> SplitQuaternion<Exact> {
    let p = invertible(rng);
    let inv = p.inverse().expect("invertible sample");
    &(&p * a) * &inv
}
