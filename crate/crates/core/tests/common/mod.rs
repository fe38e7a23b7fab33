#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use splitq::{sample, Exact, Scalar, SplitQuaternion};

pub type Q = SplitQuaternion<Exact>;

pub fn q(a: i64, b: i64, c: i64, d: i64) -> Q {
    Q::from_ints(a, b, c, d)
}

pub fn coeff() -> impl Strategy<Value = Exact> {
    (-9i64..=9, prop_oneof![3 => Just(1i64), 1 => 2i64..=5])
        .prop_map(|(n, d)| Exact::from_ratio(n, d))
}

pub fn quat() -> impl Strategy<Value = Q> {
    [coeff(), coeff(), coeff(), coeff()].prop_map(Q::from_array)
}

pub fn non_real() -> impl Strategy<Value = Q> {
    quat().prop_filter("non-real", |q| !q.is_real())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seeded draws from a `splitq::sample` generator.
pub fn seeded(f: fn(&mut ChaCha8Rng) -> Q) -> impl Strategy<Value = Q> {
    any::<u64>().prop_map(move |s| f(&mut rng(s)))
}

pub fn lightlike() -> impl Strategy<Value = Q> {
    seeded(sample::lightlike)
}

/// Values of the family at `{0, 1, i, j, k, 1+i+j+k}` and at 20 random
/// parameters.
pub fn probes(seed: u64) -> Vec<Q> {
    let mut r = rng(seed);
    let mut out = vec![Q::zero(), Q::one(), Q::i(), Q::j(), Q::k(), q(1, 1, 1, 1)];
    out.extend((0..20).map(|_| sample::quaternion(&mut r)));
    out
}
