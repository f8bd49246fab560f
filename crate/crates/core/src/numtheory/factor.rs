use super::gaussian::GaussianInt;
use super::NumError;

const TRIAL_LIMIT: u64 = 10_000;

/// Prime factorization as `(prime, exponent)` pairs with strictly
/// increasing primes.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn value(&self) -> u128 {
        self.factors
            .iter()
            .map(|&(p, e)| (p as u128).pow(e))
            .product()
    }

    fn push(&mut self, p: u64) {
        match self.factors.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e += 1,
            None => self.factors.push((p, 1)),
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin, valid for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A nontrivial factor of the odd composite `n`, by Pollard rho with
/// Brent's cycle detection.
fn brent_factor(n: u64) -> u64 {
    const BATCH: u64 = 128;
    for c in 1.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, mut r, mut q, mut g) = (2u64, 1u64, 1u64, 1u64);
        let (mut x, mut ys) = (0u64, 0u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            // batch overshot: step one at a time from the saved point
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn split_into(n: u64, out: &mut Factorization) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = brent_factor(n);
    split_into(d, out);
    split_into(n / d, out);
}

/// Complete prime factorization of `2 ≤ n ≤ 2⁶³ − 1`.
pub fn factor(n: u64) -> Result<Factorization, NumError> {
    if !(2..=i64::MAX as u64).contains(&n) {
        return Err(NumError::FactorRange(n));
    }
    let mut out = Factorization::default();
    let mut m = n;
    let mut p = 2;
    while p < TRIAL_LIMIT && p * p <= m {
        while m.is_multiple_of(p) {
            out.push(p);
            m /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        if m < TRIAL_LIMIT * TRIAL_LIMIT {
            // no factor below TRIAL_LIMIT, so m is prime
            out.push(m);
        } else {
            split_into(m, &mut out);
        }
    }
    out.factors.sort_unstable();
    Ok(out)
}

/// A square root of −1 modulo the prime `p ≡ 1 (mod 4)`.
fn sqrt_minus_one(p: u64) -> u64 {
    for c in 2..p {
        let t = pow_mod(c, (p - 1) / 4, p);
        if mul_mod(t, t, p) == p - 1 {
            return t;
        }
    }
    unreachable!("p must be a prime congruent to 1 mod 4")
}

/// The Gaussian prime `a + bi` (`a > b > 0`) of norm `p ≡ 1 (mod 4)`,
/// via Cornacchia's reduction.
fn gaussian_prime_over(p: u64) -> GaussianInt {
    let (mut r0, mut r1) = (p, sqrt_minus_one(p));
    while (r1 as u128) * (r1 as u128) > p as u128 {
        (r0, r1) = (r1, r0 % r1);
    }
    let a = r1;
    let b = (p - a * a).isqrt();
    debug_assert_eq!(a * a + b * b, p);
    canonical(GaussianInt::new(a as i64, b as i64))
}

/// Representative with `re ≥ im ≥ 0` of `{units·z, units·conj(z)}`.
fn canonical(z: GaussianInt) -> GaussianInt {
    let (x, y) = (z.re.unsigned_abs(), z.im.unsigned_abs());
    GaussianInt::new(x.max(y) as i64, x.min(y) as i64)
}

/// Every `β` with `N(β) = m`, one per class under units and conjugation,
/// normalised to `re ≥ im ≥ 0` and listed by decreasing real part.
pub fn sum_two_squares_all(m: u64) -> Result<Vec<GaussianInt>, NumError> {
    if m == 0 {
        return Err(NumError::Zero);
    }
    let mut reps = vec![GaussianInt::ONE];
    if m == 1 {
        return Ok(reps);
    }
    for &(p, e) in factor(m)?.factors() {
        if p == 2 {
            let f = (0..e).fold(GaussianInt::ONE, |z, _| z * GaussianInt::ONE_PLUS_I);
            reps.iter_mut().for_each(|z| *z = *z * f);
        } else if p % 4 == 3 {
            if e % 2 == 1 {
                return Ok(Vec::new());
            }
            let f = GaussianInt::from_int((p as i64).pow(e / 2));
            reps.iter_mut().for_each(|z| *z = *z * f);
        } else {
            let pi = gaussian_prime_over(p);
            let pi_bar = pi.conj();
            let mut next = Vec::with_capacity(reps.len() * (e as usize + 1));
            for j in 0..=e {
                let f = (0..j).fold(GaussianInt::ONE, |z, _| z * pi)
                    * (j..e).fold(GaussianInt::ONE, |z, _| z * pi_bar);
                next.extend(reps.iter().map(|&z| z * f));
            }
            reps = next;
        }
    }
    let mut out: Vec<_> = reps.into_iter().map(canonical).collect();
    out.sort_unstable_by_key(|z| std::cmp::Reverse(z.re));
    out.dedup();
    Ok(out)
}
