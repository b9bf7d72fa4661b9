//! Exact arbitrary-precision arithmetic kernels.
//!
//! Everything downstream (valuations, Hilbert symbols, the local-solvability
//! decision procedure) reduces to the handful of operations in this module:
//! deterministic primality, integer factorization, modular exponentiation,
//! modular square roots, and power-residue tests. All functions here are pure
//! and operate on immutable values, so they are safe to call from any thread.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer in canonical form (no negative zero).
pub type Int = BigInt;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    /// Fourth-power residues modulo p only make sense when 4 divides p − 1;
    /// for p ≡ 3 (mod 4) every square is already a fourth power and the
    /// square/fourth distinction collapses.
    #[error("fourth-power residue test rejected: {p} is not 1 mod 4")]
    FourthPowerUndefined { p: Int },
}

/// Largest n for which the fixed Miller–Rabin base set below is a proven
/// deterministic primality test (Sorenson–Webster): 3 317 044 064 679 887 385 961 981.
fn miller_rabin_deterministic_bound() -> Int {
    "3317044064679887385961981".parse().unwrap()
}

const MILLER_RABIN_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Deterministic primality test.
///
/// Trial division by the primes below 100, then Miller–Rabin with the base
/// set {2, …, 37}, which is proven correct for all n below ~3.3 × 10²⁴
/// (comfortably past every input this crate handles). Larger n fall back to
/// Baillie–PSW (base-2 Miller–Rabin plus a strong Lucas test), which has no
/// known pseudoprime.
pub fn is_prime(n: &Int) -> bool {
    if n < &Int::from(2) {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let p = Int::from(p);
        if n == &p {
            return true;
        }
        if n.is_multiple_of(&p) {
            return false;
        }
    }
    if n < &Int::from(100 * 100) {
        return true;
    }
    if *n <= miller_rabin_deterministic_bound() {
        MILLER_RABIN_BASES
            .iter()
            .all(|&a| !miller_rabin_witness(n, &Int::from(a)))
    } else {
        baillie_psw(n)
    }
}

/// True iff `a` witnesses the compositeness of odd `n` > 2.
fn miller_rabin_witness(n: &Int, a: &Int) -> bool {
    let one = Int::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let a = a.mod_floor(n);
    if a.is_zero() {
        return false;
    }
    let mut x = a.modpow(&d, n);
    if x.is_one() || x == n_minus_1 {
        return false;
    }
    for _ in 1..s {
        x = x.modpow(&Int::from(2), n);
        if x == n_minus_1 {
            return false;
        }
    }
    true
}

fn is_perfect_square(n: &Int) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Baillie–PSW: base-2 Miller–Rabin plus a strong Lucas probable-prime test
/// with Selfridge parameters. `n` odd, > 100, no factor below 100.
fn baillie_psw(n: &Int) -> bool {
    if miller_rabin_witness(n, &Int::from(2)) {
        return false;
    }
    if is_perfect_square(n) {
        return false;
    }
    // Selfridge method A: first D in 5, -7, 9, -11, ... with (D|n) = -1.
    let mut d_abs: i64 = 5;
    let mut sign: i64 = 1;
    let d = loop {
        let d = Int::from(sign * d_abs);
        match jacobi_symbol(&d, n) {
            -1 => break d,
            0 => return false, // gcd(D, n) nontrivial and |D| < n
            _ => {}
        }
        d_abs += 2;
        sign = -sign;
    };
    strong_lucas_prp(n, &d)
}

/// Strong Lucas probable-prime test with P = 1, Q = (1 − D)/4.
fn strong_lucas_prp(n: &Int, d: &Int) -> bool {
    let one = Int::one();
    let q = (&one - d) / Int::from(4);
    let half = (n + &one) / Int::from(2); // inverse of 2 mod odd n
    let mulmod = |a: &Int, b: &Int| (a * b).mod_floor(n);
    let halve = |a: &Int| mulmod(a, &half);

    // n + 1 = t · 2^s with t odd.
    let n_plus_1 = n + &one;
    let s = n_plus_1.trailing_zeros().unwrap_or(0);
    let t = &n_plus_1 >> s;

    // Binary ladder for U_t, V_t (P = 1), tracking Q^k alongside.
    let mut u = Int::one();
    let mut v = Int::one();
    let mut qk = q.mod_floor(n);
    let bits = t.bits();
    for i in (0..bits - 1).rev() {
        // k -> 2k
        u = mulmod(&u, &v);
        v = {
            let vv = mulmod(&v, &v);
            (vv - Int::from(2) * &qk).mod_floor(n)
        };
        qk = mulmod(&qk, &qk);
        if t.bit(i) {
            // k -> k + 1 (P = 1)
            let u_next = halve(&(&u + &v));
            let v_next = halve(&(d * &u + &v));
            u = u_next.mod_floor(n);
            v = v_next.mod_floor(n);
            qk = mulmod(&qk, &q.mod_floor(n));
        }
    }

    if u.is_zero() || v.is_zero() {
        return true;
    }
    // V_{t·2^r} for 1 <= r < s.
    for _ in 1..s {
        v = (mulmod(&v, &v) - Int::from(2) * &qk).mod_floor(n);
        if v.is_zero() {
            return true;
        }
        qk = mulmod(&qk, &qk);
    }
    false
}

/// Jacobi symbol (a|n) for odd positive n, computed by quadratic reciprocity
/// without factoring. Returns 0 exactly when gcd(a, n) > 1.
pub(crate) fn jacobi_symbol(a: &Int, n: &Int) -> i32 {
    debug_assert!(n.is_positive() && n.is_odd());
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut acc = 1i32;
    loop {
        if a.is_zero() {
            return if n.is_one() { acc } else { 0 };
        }
        let twos = a.trailing_zeros().unwrap_or(0);
        if twos % 2 == 1 {
            // (2|n) = -1 iff n ≡ ±3 (mod 8)
            let n_mod_8 = (&n % Int::from(8)).to_u32_digits().1.first().copied().unwrap_or(0);
            if n_mod_8 == 3 || n_mod_8 == 5 {
                acc = -acc;
            }
        }
        a >>= twos;
        if a.is_one() {
            return acc;
        }
        // Reciprocity: both a, n odd now.
        let a_mod_4 = (&a % Int::from(4)).to_u32_digits().1.first().copied().unwrap_or(0);
        let n_mod_4 = (&n % Int::from(4)).to_u32_digits().1.first().copied().unwrap_or(0);
        if a_mod_4 == 3 && n_mod_4 == 3 {
            acc = -acc;
        }
        std::mem::swap(&mut a, &mut n);
        a = a.mod_floor(&n);
    }
}

/// a^e mod m, with e ≥ 0 and m ≥ 2. Result in [0, m).
pub fn mod_pow(a: &Int, e: &Int, m: &Int) -> Int {
    debug_assert!(!e.is_negative());
    debug_assert!(m >= &Int::from(2));
    a.mod_floor(m).modpow(e, m)
}

/// Modular square root by Tonelli–Shanks. `p` an odd prime, `a` not divisible
/// by p. Returns the smaller of the two roots when `a` is a quadratic residue,
/// `None` otherwise.
pub fn sqrt_mod(a: &Int, p: &Int) -> Option<Int> {
    let a = a.mod_floor(p);
    debug_assert!(!a.is_zero(), "sqrt_mod requires a not divisible by p");
    let one = Int::one();
    let two = Int::from(2);
    let exp = (p - &one) / &two;
    if mod_pow(&a, &exp, p) != one {
        return None;
    }
    let r = if (p % Int::from(4)) == Int::from(3) {
        mod_pow(&a, &((p + &one) / Int::from(4)), p)
    } else {
        tonelli_shanks(&a, p)
    };
    let other = (p - &r).mod_floor(p);
    Some(r.min(other))
}

/// Tonelli–Shanks for p ≡ 1 (mod 4), `a` a known quadratic residue.
fn tonelli_shanks(a: &Int, p: &Int) -> Int {
    let one = Int::one();
    let two = Int::from(2);
    // p − 1 = q · 2^s, q odd.
    let p_minus_1 = p - &one;
    let s = p_minus_1.trailing_zeros().unwrap();
    let q = &p_minus_1 >> s;
    // Least non-residue as the auxiliary generator.
    let mut z = two.clone();
    let euler = &p_minus_1 / &two;
    while mod_pow(&z, &euler, p) == one {
        z += &one;
    }
    let mut m = s;
    let mut c = mod_pow(&z, &q, p);
    let mut t = mod_pow(a, &q, p);
    let mut r = mod_pow(a, &((&q + &one) / &two), p);
    while !t.is_one() {
        let mut i = 0u64;
        let mut t2i = t.clone();
        while !t2i.is_one() {
            t2i = mod_pow(&t2i, &two, p);
            i += 1;
            debug_assert!(i < m, "tonelli-shanks: input was not a residue");
        }
        let gap = m - i - 1;
        let mut b = c.clone();
        for _ in 0..gap {
            b = mod_pow(&b, &two, p);
        }
        m = i;
        c = mod_pow(&b, &two, p);
        t = (t * &c).mod_floor(p);
        r = (r * &b).mod_floor(p);
    }
    r
}

/// Whether `a` is a d-th power residue modulo the odd prime `p`, for d ∈ {2, 4},
/// by Euler's criterion: a^((p−1)/d) ≡ 1 (mod p).
///
/// The d = 4 test is rejected when p ≢ 1 (mod 4): the fourth powers then
/// coincide with the squares and the index-4 subgroup does not exist.
pub fn power_residue_index(a: &Int, p: &Int, d: u32) -> Result<bool, ArithError> {
    assert!(d == 2 || d == 4, "only square and fourth-power residues are supported");
    let one = Int::one();
    if d == 4 && (p % Int::from(4)) != one {
        return Err(ArithError::FourthPowerUndefined { p: p.clone() });
    }
    let exp = (p - &one) / Int::from(d);
    Ok(mod_pow(a, &exp, p) == one)
}

/// Prime factorization of |n| as (prime, exponent) pairs with strictly
/// increasing primes. `n` must be nonzero; units factor as the empty product.
///
/// Trial division by 2, 3 and the 6k ± 1 wheel up to 10⁶, then Pollard rho
/// (Brent) on whatever composite survives.
pub fn factorize(n: &Int) -> Vec<(Int, u32)> {
    assert!(!n.is_zero(), "factorize requires nonzero input");
    let mut m = n.abs();
    let mut out: Vec<(Int, u32)> = Vec::new();
    let push = |p: Int, e: u32, out: &mut Vec<(Int, u32)>| {
        debug_assert!(e > 0);
        out.push((p, e));
    };

    for small in [2u64, 3] {
        let p = Int::from(small);
        let mut e = 0;
        while m.is_multiple_of(&p) {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            push(p, e, &mut out);
        }
    }
    let mut d: u64 = 5;
    let wheel = [2u64, 4];
    let mut w = 0;
    while d <= 1_000_000 {
        let dp = Int::from(d);
        if &(&dp * &dp) > &m {
            break;
        }
        if m.is_multiple_of(&dp) {
            let mut e = 0;
            while m.is_multiple_of(&dp) {
                m /= &dp;
                e += 1;
            }
            push(dp, e, &mut out);
        }
        d += wheel[w];
        w ^= 1;
    }

    if m > Int::one() {
        // Either prime, or a composite with no factor below 10⁶.
        let mut stack = vec![m];
        let mut hard: Vec<Int> = Vec::new();
        while let Some(c) = stack.pop() {
            if is_prime(&c) {
                hard.push(c);
            } else {
                let f = pollard_rho(&c);
                stack.push(&c / &f);
                stack.push(f);
            }
        }
        hard.sort();
        let mut i = 0;
        while i < hard.len() {
            let mut j = i + 1;
            while j < hard.len() && hard[j] == hard[i] {
                j += 1;
            }
            push(hard[i].clone(), (j - i) as u32, &mut out);
            i = j;
        }
    }

    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Brent-cycle Pollard rho. `n` odd composite with no factor below 10⁶.
fn pollard_rho(n: &Int) -> Int {
    let one = Int::one();
    for c in 1u64.. {
        let c = Int::from(c);
        let f = |x: &Int| (x * x + &c).mod_floor(n);
        let mut x = Int::from(2);
        let mut y = x.clone();
        let mut g = one.clone();
        while g.is_one() {
            x = f(&x);
            y = f(&f(&y));
            g = (&x - &y).abs().gcd(n);
        }
        if &g != n {
            return g;
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn int(n: i64) -> Int {
        Int::from(n)
    }

    #[test]
    fn primality_basics() {
        assert!(is_prime(&int(97)));
        assert!(!is_prime(&int(1)));
        assert!(!is_prime(&int(16)));
        assert!(is_prime(&int(2)));
        assert!(!is_prime(&int(0)));
        assert!(is_prime(&int(3319)));
        assert!(!is_prime(&int(3317))); // 31 · 107
    }

    #[test]
    fn primality_against_sieve() {
        let limit = 10_000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for n in 0..limit {
            assert_eq!(is_prime(&int(n as i64)), sieve[n], "mismatch at {n}");
        }
    }

    #[test]
    fn primality_large() {
        // 2^89 − 1 is a Mersenne prime; 2^87 − 1 is composite.
        let m89 = (Int::one() << 89) - Int::one();
        assert!(is_prime(&m89));
        let m87 = (Int::one() << 87) - Int::one();
        assert!(!is_prime(&m87));
        // Strong pseudoprime to base 2 must still be rejected.
        assert!(!is_prime(&int(2047)));
        // Past the deterministic bound: a known prime 2^127 − 1.
        let m127 = (Int::one() << 127) - Int::one();
        assert!(is_prime(&m127));
        assert!(!is_prime(&(m127 * Int::from(3))));
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(&int(50)), vec![(int(2), 1), (int(5), 2)]);
        assert_eq!(factorize(&int(-17)), vec![(int(17), 1)]);
        assert_eq!(factorize(&int(1)), Vec::<(Int, u32)>::new());
        assert_eq!(factorize(&int(-1)), Vec::<(Int, u32)>::new());
        assert_eq!(
            factorize(&int(2 * 2 * 3 * 97 * 97)),
            vec![(int(2), 2), (int(3), 1), (int(97), 2)]
        );
    }

    #[test]
    fn factorize_beyond_trial_range() {
        // Two primes above the 10⁶ trial bound force the rho path.
        let p = int(1_000_003);
        let q = int(1_000_033);
        let n = &p * &q * &q;
        assert_eq!(factorize(&n), vec![(p, 1), (q, 2)]);
    }

    #[test]
    fn factorize_roundtrip_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..10_000 {
            let n: i64 = rng.gen_range(1..=1_000_000_000_000i64);
            let n = int(if rng.gen() { n } else { -n });
            let product = factorize(&n)
                .into_iter()
                .fold(Int::one(), |acc, (p, e)| acc * p.pow(e));
            assert_eq!(product, n.abs());
        }
    }

    #[test]
    fn mod_pow_examples() {
        assert_eq!(mod_pow(&int(3), &int(8), &int(17)), int(16));
        assert_eq!(mod_pow(&int(5), &int(0), &int(7)), int(1));
        assert_eq!(mod_pow(&int(2), &int(4), &int(17)), int(16));
        assert_eq!(mod_pow(&int(-2), &int(3), &int(17)), int(9));
    }

    #[test]
    fn sqrt_mod_examples() {
        assert_eq!(sqrt_mod(&int(2), &int(17)), Some(int(6)));
        assert_eq!(sqrt_mod(&int(3), &int(17)), None);
        assert_eq!(sqrt_mod(&int(1), &int(7)), Some(int(1)));
        // 13 ≡ 1 (mod 4) exercises the general Tonelli–Shanks branch.
        let r = sqrt_mod(&int(10), &int(13)).unwrap();
        assert_eq!((&r * &r).mod_floor(&int(13)), int(10));
    }

    #[test]
    fn sqrt_mod_matches_euler_criterion() {
        for &p in &[3i64, 5, 7, 11, 13, 17, 97, 101, 65537] {
            let pi = int(p);
            for a in 1..p.min(80) {
                let a = int(a);
                let is_qr = power_residue_index(&a, &pi, 2).unwrap();
                let root = sqrt_mod(&a, &pi);
                assert_eq!(root.is_some(), is_qr, "a={a}, p={p}");
                if let Some(r) = root {
                    assert_eq!(mod_pow(&r, &int(2), &pi), a.mod_floor(&pi));
                    // Smaller of the two roots, for deterministic witnesses.
                    assert!(&r + &r <= pi);
                }
            }
        }
    }

    #[test]
    fn power_residue_examples() {
        assert_eq!(power_residue_index(&int(3), &int(97), 2), Ok(true));
        assert_eq!(power_residue_index(&int(3), &int(97), 4), Ok(false));
        assert_eq!(power_residue_index(&int(1), &int(13), 4), Ok(true));
        assert!(matches!(
            power_residue_index(&int(2), &int(7), 4),
            Err(ArithError::FourthPowerUndefined { .. })
        ));
    }

    #[test]
    fn jacobi_matches_legendre_on_primes() {
        for &p in &[3i64, 5, 7, 11, 13, 17, 19, 23, 97] {
            let pi = int(p);
            for a in 1..p {
                let ai = int(a);
                let euler = mod_pow(&ai, &((&pi - Int::one()) / int(2)), &pi);
                let expected = if euler.is_one() { 1 } else { -1 };
                assert_eq!(jacobi_symbol(&ai, &pi), expected, "a={a}, p={p}");
            }
        }
        assert_eq!(jacobi_symbol(&int(1), &int(9)), 1);
        assert_eq!(jacobi_symbol(&int(2), &int(45)), -1);
        assert_eq!(jacobi_symbol(&int(3), &int(45)), 0);
        assert_eq!(jacobi_symbol(&int(1001), &int(9907)), -1);
        assert_eq!(jacobi_symbol(&int(-1), &int(7)), -1);
        assert_eq!(jacobi_symbol(&int(-1), &int(13)), 1);
    }

    #[test]
    fn rat_is_always_reduced() {
        let r = Rat::new(int(6), int(-8));
        assert_eq!(r.numer().to_i64(), Some(-3));
        assert_eq!(r.denom().to_i64(), Some(4));
    }
}
