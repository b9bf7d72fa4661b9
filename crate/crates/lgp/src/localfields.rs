//! Places of Q and arithmetic in its completions.
//!
//! A place is either the real place or a finite place attached to a prime p.
//! For a nonzero rational we can read off, at every place, its valuation, its
//! unit part, and whether it is a square or a fourth power in the completion.
//! On top of that sit Hensel lifting (the bridge from residue data to genuine
//! local points) and the Hilbert symbol with its product formula.
//!
//! Square and fourth-power criteria used throughout:
//!
//! - odd p: a unit u is a square in Z_p iff u is a quadratic residue mod p,
//!   and a fourth power iff u^((p−1)/4) ≡ 1 (mod p) when p ≡ 1 (mod 4), or
//!   simply a square when p ≡ 3 (mod 4) (squares = fourth powers there);
//! - p = 2: a unit is a square iff it is 1 mod 8, and a fourth power iff it
//!   is 1 mod 16. The mod-16 criterion follows from (1 + 4s)⁴ ∈ 1 + 16·Z₂
//!   together with surjectivity of s ↦ s + 6s² + 16s³ + 16s⁴ on Z₂.

use crate::arith::{self, Int, Rat};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

/// A completion of Q: the real place or a finite place indexed by a prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Real,
    Finite(Int),
}

impl Place {
    /// The finite place at a verified prime. Panics on composite input.
    pub fn finite(p: impl Into<Int>) -> Place {
        let p = p.into();
        assert!(arith::is_prime(&p), "finite places require a prime index");
        Place::Finite(p)
    }

    pub fn is_real(&self) -> bool {
        matches!(self, Place::Real)
    }

    pub fn prime(&self) -> Option<&Int> {
        match self {
            Place::Real => None,
            Place::Finite(p) => Some(p),
        }
    }
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Real => write!(f, "real"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

/// An approximate element of Q_p in offset-normal form: the represented
/// number is p^valuation_offset · u where the unit u is known modulo
/// p^precision and `value` is its representative in [0, p^precision).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicApprox {
    prime: Int,
    value: Int,
    precision: u32,
    valuation_offset: i64,
}

impl PadicApprox {
    /// Offset-normal constructor; `value` must be a unit mod `prime`.
    pub fn new(prime: Int, valuation_offset: i64, value: Int, precision: u32) -> PadicApprox {
        assert!(precision >= 1);
        let modulus = prime.pow(precision);
        let value = value.mod_floor(&modulus);
        assert!(
            !value.is_multiple_of(&prime),
            "offset-normal p-adic value must be a unit"
        );
        PadicApprox { prime, value, precision, valuation_offset }
    }

    pub fn prime(&self) -> &Int {
        &self.prime
    }

    /// Exact valuation of the represented number.
    pub fn valuation(&self) -> i64 {
        self.valuation_offset
    }

    /// Unit representative in [0, p^precision).
    pub fn unit_value(&self) -> &Int {
        &self.value
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// The approximation of −x at the same precision.
    pub fn neg(&self) -> PadicApprox {
        let modulus = self.prime.pow(self.precision);
        PadicApprox::new(
            self.prime.clone(),
            self.valuation_offset,
            (&modulus - &self.value).mod_floor(&modulus),
            self.precision,
        )
    }

    /// A rational in the same disk: p^offset · value. It agrees with the
    /// represented number to the stated precision and, because the unit part
    /// is pinned mod p^precision, it lies in the same square class at p
    /// whenever precision ≥ 1 (odd p) or ≥ 3 (p = 2).
    pub fn representative(&self) -> Rat {
        let unit = Rat::from_integer(self.value.clone());
        let scale = Rat::from_integer(self.prime.pow(self.valuation_offset.unsigned_abs() as u32));
        if self.valuation_offset >= 0 {
            unit * scale
        } else {
            unit / scale
        }
    }
}

/// Exponent of p in a nonzero integer.
pub(crate) fn valuation_int(n: &Int, p: &Int) -> u64 {
    debug_assert!(!n.is_zero());
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Exponent of p in a nonzero rational (negative for denominators).
pub fn valuation(a: &Rat, p: &Int) -> i64 {
    assert!(!a.is_zero(), "valuation of zero is undefined");
    valuation_int(a.numer(), p) as i64 - valuation_int(a.denom(), p) as i64
}

/// a / p^valuation(a, p): the p-unit factor of a.
pub fn unit_part(a: &Rat, p: &Int) -> Rat {
    let v = valuation(a, p);
    let scale = Rat::from_integer(p.pow(v.unsigned_abs() as u32));
    if v >= 0 {
        a / scale
    } else {
        a * scale
    }
}

/// Inverse of a modulo m (gcd(a, m) = 1).
pub(crate) fn inv_mod(a: &Int, m: &Int) -> Int {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "inv_mod requires coprime inputs");
    e.x.mod_floor(m)
}

/// Residue of a p-unit rational modulo p^k, as numerator · denominator⁻¹.
pub(crate) fn unit_residue(a: &Rat, p: &Int, k: u32) -> Int {
    debug_assert_eq!(valuation(a, p), 0, "unit_residue requires a p-unit");
    let m = p.pow(k);
    (a.numer().mod_floor(&m) * inv_mod(a.denom(), &m)).mod_floor(&m)
}

/// Legendre symbol (a|p) for an odd prime p: 0 when p | a, else ±1.
pub fn legendre(a: &Int, p: &Int) -> i32 {
    debug_assert!(p.is_odd() && arith::is_prime(p));
    if a.is_multiple_of(p) {
        0
    } else {
        arith::jacobi_symbol(a, p)
    }
}

/// Jacobi symbol (a|n) for odd positive n, by reciprocity without factoring.
pub fn jacobi(a: &Int, n: &Int) -> i32 {
    assert!(n.is_positive() && n.is_odd(), "jacobi requires odd positive modulus");
    arith::jacobi_symbol(a, n)
}

/// Legendre symbol of a p-unit rational: (num|p) · (den|p).
fn legendre_rat(u: &Rat, p: &Int) -> i32 {
    legendre(u.numer(), p) * legendre(u.denom(), p)
}

/// Whether a nonzero rational is a square in the completion at v.
pub fn is_square_at(a: &Rat, v: &Place) -> bool {
    assert!(!a.is_zero());
    match v {
        Place::Real => a.is_positive(),
        Place::Finite(p) => {
            let val = valuation(a, p);
            if val % 2 != 0 {
                return false;
            }
            let u = unit_part(a, p);
            if p.is_odd() {
                legendre_rat(&u, p) == 1
            } else {
                unit_residue(&u, p, 3).is_one()
            }
        }
    }
}

/// Whether a nonzero rational is a fourth power in the completion at v.
pub fn is_fourth_power_at(a: &Rat, v: &Place) -> bool {
    assert!(!a.is_zero());
    match v {
        Place::Real => a.is_positive(),
        Place::Finite(p) => {
            let val = valuation(a, p);
            if val % 4 != 0 {
                return false;
            }
            let u = unit_part(a, p);
            if !p.is_odd() {
                return unit_residue(&u, p, 4).is_one();
            }
            if (p % Int::from(4)) == Int::one() {
                let exp = (p - Int::one()) / Int::from(4);
                arith::mod_pow(&unit_residue(&u, p, 1), &exp, p).is_one()
            } else {
                // p ≡ 3 (mod 4): squares are fourth powers, and x⁴ − u has
                // simple roots mod p, so the residue test settles it.
                legendre_rat(&u, p) == 1
            }
        }
    }
}

/// Dense integer polynomial (ascending coefficients).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> IntPoly {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    /// x^n + c.
    pub fn monic_power_plus(n: usize, c: Int) -> IntPoly {
        let mut coeffs = vec![Int::zero(); n + 1];
        coeffs[0] = c;
        coeffs[n] = Int::one();
        IntPoly::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::new(vec![Int::zero()]);
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Int::from(i as u64))
                .collect(),
        )
    }
}

/// Hensel lifting: refine an approximate root of f to precision p^k.
///
/// The criterion is the general one: with t = v_p(f′(seed)), the seed must
/// satisfy f(seed) ≡ 0 (mod p^(2t+1)). Simple residue roots are the t = 0
/// case. Returns a root r with f(r) ≡ 0 (mod p^k) and r in the seed's disk
/// (r ≡ seed mod p^(e−t) where e = v_p(f(seed))), or `None` when the
/// criterion fails at the seed.
pub fn hensel_root(f: &IntPoly, p: &Int, seed: &Int, k: u32) -> Option<PadicApprox> {
    assert!(k >= 1);
    let modulus_k = p.pow(k);
    let fs = f.eval(seed);
    if fs.is_zero() {
        // Exact integer root.
        return Some(padic_from_integer(p, &seed.mod_floor(&modulus_k), k));
    }
    let df = f.derivative();
    let dfs = df.eval(seed);
    if dfs.is_zero() {
        return None;
    }
    let t = valuation_int(&dfs, p);
    let e0 = valuation_int(&fs, p);
    if e0 < 2 * t + 1 {
        return None;
    }

    let work_prec = k as u64 + t;
    let modulus = p.pow(work_prec as u32);
    let pt = p.pow(t as u32);
    let mut x = seed.mod_floor(&modulus);
    loop {
        let fx = f.eval(&x);
        if fx.is_zero() || valuation_int(&fx, p) >= work_prec {
            break;
        }
        let dfx = df.eval(&x).mod_floor(&modulus);
        // f'(x) = p^t · w with w a unit; the Newton step f(x)/f'(x) is the
        // integer (f(x)/p^t) times w⁻¹.
        let w = (&dfx / &pt).mod_floor(&modulus);
        debug_assert!(!w.is_multiple_of(p));
        let h = ((fx / &pt).mod_floor(&modulus) * inv_mod(&w, &modulus)).mod_floor(&modulus);
        x = (x - h).mod_floor(&modulus);
    }
    Some(padic_from_integer(p, &x.mod_floor(&modulus_k), k))
}

/// Wrap an integer known mod p^k as a PadicApprox, extracting p-powers so the
/// result is offset-normal. An integer divisible by p^k carries no unit
/// information; it is represented as offset k with unit 1 (the best available
/// statement is "valuation ≥ k").
fn padic_from_integer(p: &Int, n: &Int, k: u32) -> PadicApprox {
    if n.is_zero() {
        return PadicApprox {
            prime: p.clone(),
            value: Int::one(),
            precision: 1,
            valuation_offset: k as i64,
        };
    }
    let v = valuation_int(n, p).min(k as u64 - 1);
    let unit = n / p.pow(v as u32);
    let remaining = k - v as u32;
    PadicApprox::new(p.clone(), v as i64, unit, remaining)
}

/// Square root of a nonzero rational in Q_p, as an offset-normal approximation
/// whose unit part is correct mod p^k. Returns `None` when a is not a square
/// at p. The returned r satisfies v_p(r² − a) ≥ v_p(a) + k.
pub fn sqrt_at(a: &Rat, p: &Int, k: u32) -> Option<PadicApprox> {
    assert!(!a.is_zero());
    let v = valuation(a, p);
    if v % 2 != 0 {
        return None;
    }
    let u = unit_part(a, p);
    // Work with the integer W = num·den: sqrt(u) = sqrt(W)/den.
    let w = u.numer() * u.denom();
    let root_w = if p.is_odd() {
        let seed = arith::sqrt_mod(&w, p)?;
        hensel_root(&IntPoly::new(vec![-&w, Int::zero(), Int::one()]), p, &seed, k + 1)?
    } else {
        if !unit_residue(&u, p, 3).is_one() {
            return None;
        }
        // Units ≡ 1 (mod 8) lift from seed 1: t = v(2·seed) = 1 and
        // W − 1 ≡ 0 (mod 8) meets the 2t+1 criterion.
        hensel_root(&IntPoly::new(vec![-&w, Int::zero(), Int::one()]), p, &Int::one(), k + 1)?
    };
    let modulus = p.pow(k);
    let value = (root_w.unit_value().mod_floor(&modulus) * inv_mod(u.denom(), &modulus))
        .mod_floor(&modulus);
    Some(PadicApprox::new(p.clone(), v / 2, value, k))
}

/// Fourth root of a nonzero rational in Q_p to unit precision p^k, or `None`
/// when a is not a fourth power at p.
pub fn fourth_root_at(a: &Rat, p: &Int, k: u32) -> Option<PadicApprox> {
    assert!(!a.is_zero());
    let v = valuation(a, p);
    if v % 4 != 0 {
        return None;
    }
    let u = unit_part(a, p);
    let w = u.numer() * u.denom();
    let quartic = IntPoly::new(vec![-&w, Int::zero(), Int::zero(), Int::zero(), Int::one()]);
    let root_w = if p.is_odd() {
        // Fourth root as iterated square root: r⁴ = W needs r² = ±sqrt(W).
        let s = arith::sqrt_mod(&w, p)?;
        let seed = arith::sqrt_mod(&s, p).or_else(|| arith::sqrt_mod(&(p - &s), p))?;
        hensel_root(&quartic, p, &seed, k + 1)?
    } else {
        if !unit_residue(&u, p, 4).is_one() {
            return None;
        }
        // Seed search mod 2⁵ meets the criterion for t = v(4·seed³) = 2.
        let m32 = Int::from(32);
        let target = w.mod_floor(&m32);
        let seed = (1..32u32)
            .step_by(2)
            .map(Int::from)
            .find(|s| arith::mod_pow(s, &Int::from(4), &m32) == target)?;
        hensel_root(&quartic, p, &seed, k + 2)?
    };
    let modulus = p.pow(k);
    let value = (root_w.unit_value().mod_floor(&modulus) * inv_mod(u.denom(), &modulus))
        .mod_floor(&modulus);
    Some(PadicApprox::new(p.clone(), v / 4, value, k))
}

fn eps_mod2(u_mod4: u32) -> u32 {
    // (u − 1)/2 mod 2 for odd u.
    if u_mod4 == 1 {
        0
    } else {
        1
    }
}

fn omega_mod2(u_mod8: u32) -> u32 {
    // (u² − 1)/8 mod 2 for odd u.
    if u_mod8 == 1 || u_mod8 == 7 {
        0
    } else {
        1
    }
}

fn unit_mod_pow2(u: &Rat, k: u32) -> u32 {
    use num_traits::ToPrimitive;
    unit_residue(u, &Int::from(2), k).to_u32().unwrap()
}

/// Hilbert symbol (a, b)_v ∈ {+1, −1}.
///
/// Local formulas: at the real place, −1 iff both arguments are negative.
/// At an odd p with a = p^α·u, b = p^β·w:
/// (−1)^(αβ·ε(p)) · (u|p)^β · (w|p)^α. At p = 2 with odd-unit parts u, w:
/// (−1)^(ε(u)ε(w) + α·ω(w) + β·ω(u)), where ε is taken mod 4 and ω mod 8.
pub fn hilbert_symbol(a: &Rat, b: &Rat, v: &Place) -> i32 {
    assert!(!a.is_zero() && !b.is_zero());
    match v {
        Place::Real => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(p) if p.is_odd() => {
            let alpha = valuation(a, p);
            let beta = valuation(b, p);
            let u = unit_part(a, p);
            let w = unit_part(b, p);
            let eps_p = if (p % Int::from(4)) == Int::one() { 0 } else { 1 };
            let mut sign = 1i32;
            if (alpha & 1) * (beta & 1) * eps_p == 1 {
                sign = -sign;
            }
            if beta % 2 != 0 && legendre_rat(&u, p) == -1 {
                sign = -sign;
            }
            if alpha % 2 != 0 && legendre_rat(&w, p) == -1 {
                sign = -sign;
            }
            sign
        }
        Place::Finite(p) => {
            let alpha = valuation(a, p) as u32 & 1;
            let beta = valuation(b, p) as u32 & 1;
            let u = unit_part(a, p);
            let w = unit_part(b, p);
            let u8 = unit_mod_pow2(&u, 3);
            let w8 = unit_mod_pow2(&w, 3);
            let exponent = eps_mod2(u8 % 4) * eps_mod2(w8 % 4)
                + alpha * omega_mod2(w8)
                + beta * omega_mod2(u8);
            if exponent % 2 == 0 {
                1
            } else {
                -1
            }
        }
    }
}

/// Primes at which (a, b)_v can differ from +1: 2 and the odd support of a, b.
pub fn symbol_support(a: &Rat, b: &Rat) -> Vec<Int> {
    let mut primes = vec![Int::from(2)];
    for n in [a.numer(), a.denom(), b.numer(), b.denom()] {
        if n.is_one() {
            continue;
        }
        for (p, _) in arith::factorize(n) {
            if p.is_odd() && !primes.contains(&p) {
                primes.push(p.clone());
            }
        }
    }
    primes.sort();
    primes
}

/// Product-formula check: the product of (a, b)_v over the real place and the
/// finite support of a, b. Symbols at every other place are +1, so this is
/// the full adelic product; it must equal +1 for all nonzero a, b.
pub fn hilbert_product_check(a: &Rat, b: &Rat) -> bool {
    let mut product = hilbert_symbol(a, b, &Place::Real);
    for p in symbol_support(a, b) {
        product *= hilbert_symbol(a, b, &Place::Finite(p));
    }
    product == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(Int::from(n), Int::from(d))
    }

    fn int_rat(n: i64) -> Rat {
        Rat::from_integer(Int::from(n))
    }

    fn fp(p: i64) -> Place {
        Place::finite(Int::from(p))
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&int_rat(50), &Int::from(5)), 2);
        assert_eq!(valuation(&rat(7, 8), &Int::from(2)), -3);
        assert_eq!(valuation(&int_rat(17), &Int::from(17)), 1);
    }

    #[test]
    fn unit_part_examples() {
        assert_eq!(unit_part(&int_rat(50), &Int::from(5)), int_rat(2));
        assert_eq!(unit_part(&int_rat(-17), &Int::from(17)), int_rat(-1));
        assert_eq!(unit_part(&rat(7, 8), &Int::from(2)), int_rat(7));
    }

    #[test]
    fn square_classification() {
        assert!(is_square_at(&int_rat(2), &fp(17)));
        assert!(is_square_at(&int_rat(17), &fp(2)));
        assert!(!is_square_at(&int_rat(-1), &Place::Real));
        assert!(is_square_at(&int_rat(4), &Place::Real));
        assert!(!is_square_at(&int_rat(3), &fp(17)));
        assert!(!is_square_at(&int_rat(5), &fp(2))); // 5 ≢ 1 mod 8
        assert!(is_square_at(&rat(1, 4), &fp(2)));
        assert!(!is_square_at(&int_rat(2), &fp(2)));
    }

    #[test]
    fn fourth_power_classification() {
        assert!(is_fourth_power_at(&int_rat(17), &fp(2))); // 17 ≡ 1 mod 16
        assert!(!is_fourth_power_at(&int_rat(2), &fp(17)));
        assert!(is_fourth_power_at(&int_rat(16), &fp(5)));
        assert!(!is_fourth_power_at(&int_rat(9), &fp(2))); // 9 ≢ 1 mod 16
        assert!(is_fourth_power_at(&int_rat(81), &fp(2)));
        // p ≡ 3 (mod 4): squares are fourth powers.
        assert!(is_fourth_power_at(&int_rat(2), &fp(7))); // 2 ≡ 4² mod 7
        assert!(!is_fourth_power_at(&int_rat(3), &fp(7)));
    }

    #[test]
    fn fourth_power_implies_square_smoke() {
        for a in -50i64..=50 {
            if a == 0 {
                continue;
            }
            for v in [Place::Real, fp(2), fp(3), fp(5), fp(17)] {
                let a = int_rat(a);
                if is_fourth_power_at(&a, &v) {
                    assert!(is_square_at(&a, &v), "{a} at {v}");
                }
            }
        }
    }

    #[test]
    fn hensel_sqrt_2_mod_17() {
        let f = IntPoly::from_i64(&[-2, 0, 1]);
        let r = hensel_root(&f, &Int::from(17), &Int::from(6), 3).unwrap();
        assert_eq!(r.valuation(), 0);
        let m = Int::from(17).pow(3);
        let val = r.unit_value();
        assert_eq!((val * val).mod_floor(&m), Int::from(2));
        assert_eq!(val.mod_floor(&Int::from(17)), Int::from(6));
    }

    #[test]
    fn hensel_sqrt_17_mod_2() {
        let f = IntPoly::from_i64(&[-17, 0, 1]);
        let r = hensel_root(&f, &Int::from(2), &Int::one(), 6).unwrap();
        let m = Int::from(64);
        let val = r.representative();
        assert!(val.is_integer());
        let val = val.to_integer();
        assert_eq!((&val * &val).mod_floor(&m), Int::from(17).mod_floor(&m));
        assert_eq!(val.mod_floor(&Int::from(4)), Int::one());
    }

    #[test]
    fn hensel_rejects_nonresidue() {
        let f = IntPoly::from_i64(&[-3, 0, 1]);
        for seed in 0..17 {
            assert!(hensel_root(&f, &Int::from(17), &Int::from(seed), 3).is_none());
        }
    }

    #[test]
    fn hensel_exact_root() {
        let f = IntPoly::from_i64(&[-16, 0, 0, 0, 1]);
        let r = hensel_root(&f, &Int::from(5), &Int::from(2), 4).unwrap();
        assert_eq!(r.representative(), int_rat(2));
    }

    #[test]
    fn sqrt_at_constructions() {
        // v(2475) = 2 at 5 with unit 99 ≡ 4 a residue: sqrt has valuation 1.
        let r = sqrt_at(&int_rat(2475), &Int::from(5), 8).unwrap();
        assert_eq!(r.valuation(), 1);
        let diff = &r.representative() * &r.representative() - int_rat(2475);
        assert!(valuation(&diff, &Int::from(5)) >= 2 + 8);
        // 50 = 2·5² is not a 5-adic square: 2 is a non-residue mod 5.
        assert!(sqrt_at(&int_rat(50), &Int::from(5), 8).is_none());
        // 17 is a 2-adic square.
        let r = sqrt_at(&int_rat(17), &Int::from(2), 10).unwrap();
        let diff = &r.representative() * &r.representative() - int_rat(17);
        assert!(valuation(&diff, &Int::from(2)) >= 10);
        assert!(sqrt_at(&int_rat(3), &Int::from(17), 5).is_none());
        assert!(sqrt_at(&int_rat(5), &Int::from(2), 5).is_none());
        // Denominators: 1/2 at 17 is a square iff 2 is (it is: 6² ≡ 2).
        let r = sqrt_at(&rat(1, 2), &Int::from(17), 6).unwrap();
        let diff = &r.representative() * &r.representative() - rat(1, 2);
        assert!(valuation(&diff, &Int::from(17)) >= 6);
    }

    #[test]
    fn fourth_root_at_constructions() {
        let r = fourth_root_at(&int_rat(17), &Int::from(2), 10).unwrap();
        let rep = r.representative();
        let diff = &rep * &rep * &rep * &rep - int_rat(17);
        assert!(valuation(&diff, &Int::from(2)) >= 10);
        assert!(fourth_root_at(&int_rat(2), &Int::from(17), 5).is_none());
        // 2 is a fourth power mod 7 (squares = fourth powers at p ≡ 3 mod 4).
        let r = fourth_root_at(&int_rat(2), &Int::from(7), 6).unwrap();
        let rep = r.representative();
        let diff = &rep * &rep * &rep * &rep - int_rat(2);
        assert!(valuation(&diff, &Int::from(7)) >= 6);
    }

    #[test]
    fn hilbert_symbol_examples() {
        assert_eq!(hilbert_symbol(&int_rat(-1), &int_rat(-1), &Place::Real), -1);
        assert_eq!(hilbert_symbol(&int_rat(5), &int_rat(2), &fp(5)), -1);
        assert_eq!(hilbert_symbol(&int_rat(17), &int_rat(2), &fp(17)), 1);
        assert_eq!(hilbert_symbol(&int_rat(-1), &int_rat(-1), &fp(2)), -1);
        assert_eq!(hilbert_symbol(&int_rat(5), &int_rat(2), &fp(2)), -1);
        assert_eq!(hilbert_symbol(&int_rat(2), &int_rat(17), &fp(17)), 1);
        assert_eq!(hilbert_symbol(&int_rat(3), &int_rat(17), &fp(17)), -1);
    }

    #[test]
    fn hilbert_symbol_symmetry_smoke() {
        let places = [Place::Real, fp(2), fp(3), fp(5), fp(17)];
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                if a == 0 || b == 0 {
                    continue;
                }
                for v in &places {
                    let ab = hilbert_symbol(&int_rat(a), &int_rat(b), v);
                    let ba = hilbert_symbol(&int_rat(b), &int_rat(a), v);
                    assert_eq!(ab, ba, "({a},{b}) at {v}");
                }
            }
        }
    }

    #[test]
    fn product_formula_examples() {
        assert!(hilbert_product_check(&int_rat(5), &int_rat(2)));
        assert!(hilbert_product_check(&int_rat(-1), &int_rat(-1)));
        assert!(hilbert_product_check(&int_rat(17), &int_rat(3)));
        assert!(hilbert_product_check(&rat(7, 8), &rat(-15, 17)));
    }

    #[test]
    fn legendre_jacobi_examples() {
        assert_eq!(legendre(&Int::from(3), &Int::from(17)), -1);
        assert_eq!(legendre(&Int::from(2), &Int::from(17)), 1);
        assert_eq!(legendre(&Int::from(34), &Int::from(17)), 0);
        assert_eq!(jacobi(&Int::from(1), &Int::from(9)), 1);
    }

    #[test]
    fn padic_representative_matches_class() {
        let x = PadicApprox::new(Int::from(5), -2, Int::from(7), 4);
        assert_eq!(x.representative(), rat(7, 25));
        assert_eq!(x.valuation(), -2);
    }
}
