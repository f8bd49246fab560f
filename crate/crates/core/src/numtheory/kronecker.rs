use super::NumError;

/// The Kronecker symbol `(a | n)`, extended to every integer `n`.
///
/// Follows the usual conventions: `(a | 0) = 1` iff `a = ±1`,
/// `(a | -1) = sign(a)` (with `(0 | -1) = 1`), and `(a | 2)` is the
/// character of `a mod 8`.
pub fn kronecker(a: i64, n: i64) -> i32 {
    if n == 0 {
        return i32::from(a == 1 || a == -1);
    }
    let mut sign = 1;
    if n < 0 && a < 0 {
        sign = -1;
    }
    let mut m = n.unsigned_abs();
    let twos = m.trailing_zeros();
    if twos > 0 {
        if a & 1 == 0 {
            return 0;
        }
        if twos & 1 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            sign = -sign;
        }
        m >>= twos;
    }
    sign * jacobi(a, m)
}

/// Jacobi symbol `(a | m)` for odd positive `m`.
fn jacobi(a: i64, m: u64) -> i32 {
    debug_assert!(m & 1 == 1);
    let mut a = (a as i128).rem_euclid(m as i128) as u64;
    let mut m = m;
    let mut t = 1;
    while a != 0 {
        let z = a.trailing_zeros();
        a >>= z;
        if z & 1 == 1 && matches!(m & 7, 3 | 5) {
            t = -t;
        }
        if a & 3 == 3 && m & 3 == 3 {
            t = -t;
        }
        std::mem::swap(&mut a, &mut m);
        a %= m;
    }
    if m == 1 {
        t
    } else {
        0
    }
}

/// Splits `n ≠ 0` as `2ᵉ·n′` with `n′` odd (sign kept on `n′`).
pub fn odd_part_and_v2(n: i64) -> Result<(u32, i64), NumError> {
    if n == 0 {
        return Err(NumError::Zero);
    }
    let e = n.trailing_zeros();
    Ok((e, n >> e))
}

pub fn gcd(a: i64, b: i64) -> u64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
