//! Small number-theoretic helpers used by the group kernel.
//!
//! Everything here works by trial division; group orders never exceed a few
//! hundred, so nothing fancier is warranted.

/// Greatest common divisor.
pub fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple. `lcm(0, x) = 0` by convention; callers only pass
/// positive element orders.
pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Trial-division primality test.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, multiplicity)` pairs in ascending prime order.
pub fn factorize(n: usize) -> Vec<(usize, u32)> {
    assert!(n >= 1, "factorize(0) is undefined");
    let mut n = n;
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient: the count of `k` in `1..=n` with `gcd(n, k) = 1`.
///
/// Computed from the factorization, so `euler_phi(1) = 1`.
pub fn euler_phi(n: usize) -> usize {
    assert!(n >= 1, "euler_phi(0) is undefined");
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}
