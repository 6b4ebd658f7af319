use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::moebius::Homography;
use crate::ratpoly::{rat, Polynomial, Rational};

pub(crate) fn rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    rat(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub(crate) fn nonzero(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    loop {
        let r = rational(rng, num, den);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Random `Q` of degree `m` with rational coefficients.
pub(crate) fn polynomial(rng: &mut ChaCha8Rng, m: usize) -> Polynomial<Rational> {
    let mut c: Vec<Rational> = (0..m).map(|_| rational(rng, 9, 6)).collect();
    c.push(nonzero(rng, 9, 6));
    Polynomial::new(c)
}

/// `count` distinct rationals in increasing order.
pub(crate) fn distinct_sorted(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    let mut v: Vec<Rational> = Vec::with_capacity(count);
    while v.len() < count {
        let r = rational(rng, 30, 7);
        if !v.contains(&r) {
            v.push(r);
        }
    }
    v.sort_by(|a, b| a.partial_cmp(b).expect("rationals are ordered"));
    v
}

/// A random rotation of `sorted`, reversed with probability 1/2.
pub(crate) fn cyclic_order(rng: &mut ChaCha8Rng, sorted: &[Rational]) -> (Vec<Rational>, bool) {
    let mut v = sorted.to_vec();
    let shift = rng.gen_range(0..v.len());
    v.rotate_left(shift);
    let reversed = rng.gen_bool(0.5);
    if reversed {
        v.reverse();
    }
    (v, !reversed)
}

pub(crate) fn homography(rng: &mut ChaCha8Rng) -> Homography<Rational> {
    loop {
        let [a, b, c, d] = [0; 4].map(|_| rational(rng, 9, 5));
        if let Ok(h) = Homography::new(a, b, c, d) {
            return h;
        }
    }
}

pub(crate) fn pick<T: Clone>(rng: &mut ChaCha8Rng, items: &[T]) -> T {
    items.choose(rng).expect("non-empty").clone()
}
