//! Euler-criterion oracle for the quartic residue symbol, built on a
//! floor-rounded Gaussian remainder independent of the library's division.

use apollonian::numtheory::{primary_associate, GaussianInt, PowerOfI};
use rand::Rng;

/// Floor-rounded remainder, deliberately unlike the library's
/// nearest-rounding division.
pub fn reduce(z: (i128, i128), m: (i128, i128)) -> (i128, i128) {
    let n = m.0 * m.0 + m.1 * m.1;
    let x = z.0 * m.0 + z.1 * m.1;
    let y = z.1 * m.0 - z.0 * m.1;
    let (qa, qb) = (x.div_euclid(n), y.div_euclid(n));
    (z.0 - (qa * m.0 - qb * m.1), z.1 - (qa * m.1 + qb * m.0))
}

fn mul_mod(a: (i128, i128), b: (i128, i128), m: (i128, i128)) -> (i128, i128) {
    reduce((a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0), m)
}

fn divides(m: (i128, i128), z: (i128, i128)) -> bool {
    let n = m.0 * m.0 + m.1 * m.1;
    let x = z.0 * m.0 + z.1 * m.1;
    let y = z.1 * m.0 - z.0 * m.1;
    x % n == 0 && y % n == 0
}

/// `α^((N(π)−1)/4) mod π`, identified with a power of `i`.
pub fn euler_oracle(alpha: GaussianInt, pi: GaussianInt) -> PowerOfI {
    let m = (pi.re as i128, pi.im as i128);
    let mut e = (pi.norm() as i128 - 1) / 4;
    let mut base = reduce((alpha.re as i128, alpha.im as i128), m);
    let mut acc = (1i128, 0i128);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    let units = [(1, 0), (0, 1), (-1, 0), (0, -1)];
    for (k, u) in units.iter().enumerate() {
        if divides(m, (acc.0 - u.0, acc.1 - u.1)) {
            return PowerOfI::from_exponent(k as i64);
        }
    }
    panic!("Euler criterion gave a non-unit for {alpha} mod {pi}");
}

fn is_prime_small(p: i64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// All primary Gaussian primes of norm at most `bound`, found by brute force.
pub fn primary_primes(bound: i64) -> Vec<GaussianInt> {
    let mut out = Vec::new();
    for p in 3..=bound {
        if !is_prime_small(p) {
            continue;
        }
        if p % 4 == 1 {
            let a = (1..).find(|a| {
                let r = p - a * a;
                let b = (r as f64).sqrt() as i64;
                b * b == r
            });
            let a = a.unwrap();
            let b = ((p - a * a) as f64).sqrt() as i64;
            for z in [GaussianInt::new(a, b), GaussianInt::new(a, -b)] {
                out.push(primary_associate(z).unwrap().0);
            }
        } else if p * p <= bound {
            out.push(primary_associate(GaussianInt::from_int(p)).unwrap().0);
        }
    }
    out
}

pub fn random_gaussian(rng: &mut impl Rng, r: i64) -> GaussianInt {
    GaussianInt::new(rng.gen_range(-r..=r), rng.gen_range(-r..=r))
}

pub fn random_odd(rng: &mut impl Rng, r: i64) -> GaussianInt {
    loop {
        let z = random_gaussian(rng, r);
        if z.is_odd() {
            return z;
        }
    }
}
