//! The quartic genus-one curve family q·y² = x⁴ − p.
//!
//! A validated pair (p, q) of nonzero coprime integers determines a smooth
//! projective genus-one curve, presented by two affine charts:
//!
//! - chart A: q·y² = x⁴ − p, coordinates (x, y);
//! - chart B: q·s² = 1 − p·t⁴, coordinates (t, s);
//!
//! glued by x = 1/t, y = s/t². The points at infinity are the chart-B points
//! with t = 0; over a field F they exist exactly when q is a square in F
//! (s² = 1/q), in which case there are two of them.

use crate::arith::{Int, Rat};
use crate::localfields::PadicApprox;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("zero parameter: {which} must be nonzero")]
    ZeroParameter { which: &'static str },
    #[error("parameters are not coprime: gcd(p, q) = {gcd}")]
    NotCoprime { gcd: Int },
    #[error("bad reduction place {prime}: point counting needs an odd prime not dividing 2pq")]
    BadReductionPlace { prime: Int },
}

/// A validated curve q·y² = x⁴ − p: p, q nonzero and coprime. The nonzero p
/// keeps x⁴ − p separable, which is exactly what smoothness of the projective
/// model needs; genus one then comes for free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticCurve {
    p: Int,
    q: Int,
}

impl QuarticCurve {
    /// Validate raw parameters.
    pub fn new(p: impl Into<Int>, q: impl Into<Int>) -> Result<QuarticCurve, CurveError> {
        let p = p.into();
        let q = q.into();
        if p.is_zero() {
            return Err(CurveError::ZeroParameter { which: "p" });
        }
        if q.is_zero() {
            return Err(CurveError::ZeroParameter { which: "q" });
        }
        let gcd = p.gcd(&q);
        if !gcd.is_one() {
            return Err(CurveError::NotCoprime { gcd });
        }
        Ok(QuarticCurve { p, q })
    }

    pub fn p(&self) -> &Int {
        &self.p
    }

    pub fn q(&self) -> &Int {
        &self.q
    }

    /// (x⁴ − p)/q: the value y² must take on chart A.
    pub fn rhs_affine(&self, x: &Rat) -> Rat {
        let x2 = x * x;
        (&x2 * &x2 - Rat::from_integer(self.p.clone())) / Rat::from_integer(self.q.clone())
    }

    /// (1 − p·t⁴)/q: the value s² must take on chart B.
    pub fn rhs_infinity(&self, t: &Rat) -> Rat {
        let t2 = t * t;
        (Rat::one() - Rat::from_integer(self.p.clone()) * &t2 * &t2)
            / Rat::from_integer(self.q.clone())
    }

    /// 2 together with the odd primes of bad reduction, ascending.
    pub fn bad_primes(&self) -> Vec<Int> {
        let mut primes = vec![Int::from(2)];
        for n in [&self.p, &self.q] {
            for (prime, _) in crate::arith::factorize(n) {
                if prime.is_odd() && !primes.contains(&prime) {
                    primes.push(prime);
                }
            }
        }
        primes.sort();
        primes
    }

    pub(crate) fn is_good_odd_prime(&self, ell: &Int) -> bool {
        ell.is_odd() && !self.p.is_multiple_of(ell) && !self.q.is_multiple_of(ell)
    }
}

impl std::fmt::Display for QuarticCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}·y² = x⁴ − {}", self.q, self.p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Chart {
    /// q·y² = x⁴ − p with coordinates (x, y).
    A,
    /// q·s² = 1 − p·t⁴ with coordinates (t, s); t = 0 is infinity.
    B,
}

/// A coordinate of a point: exact rational, or a p-adic approximation.
#[derive(Clone, Debug, PartialEq)]
pub enum Coord {
    Exact(Rat),
    Approx(PadicApprox),
}

impl Coord {
    pub fn exact(&self) -> Option<&Rat> {
        match self {
            Coord::Exact(r) => Some(r),
            Coord::Approx(_) => None,
        }
    }
}

/// A point on one of the two charts.
#[derive(Clone, Debug, PartialEq)]
pub struct AffinePoint {
    pub chart: Chart,
    pub x: Coord,
    pub y: Coord,
}

impl AffinePoint {
    pub fn exact(chart: Chart, x: Rat, y: Rat) -> AffinePoint {
        AffinePoint { chart, x: Coord::Exact(x), y: Coord::Exact(y) }
    }
}

/// Number of points over F_ℓ on the smooth model, for a good odd prime ℓ:
/// affine chart-A solutions plus the points at infinity (2 when q is a
/// residue mod ℓ, else 0).
pub fn count_points_ff(curve: &QuarticCurve, ell: &Int) -> Result<u64, CurveError> {
    if !crate::arith::is_prime(ell) || !curve.is_good_odd_prime(ell) {
        return Err(CurveError::BadReductionPlace { prime: ell.clone() });
    }
    let l = ell.to_u64().expect("point counting is for desk-scale primes");
    let p_res = curve.p.mod_floor(ell).to_u64().unwrap();
    let q_res = curve.q.mod_floor(ell).to_u64().unwrap();
    let legendre_u = |a: u64| -> i64 {
        // Euler's criterion with u64 arithmetic; ℓ < 2³² keeps products in range.
        if a == 0 {
            return 0;
        }
        let mut base = a % l;
        let mut exp = (l - 1) / 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % l;
            }
            base = base * base % l;
            exp >>= 1;
        }
        if acc == 1 { 1 } else { -1 }
    };
    let q_class = legendre_u(q_res);
    let mut count: i64 = 0;
    for x in 0..l {
        let x2 = x * x % l;
        let x4 = x2 * x2 % l;
        let c = (x4 + l - p_res) % l;
        // Solutions y of q·y² = c: 1 + (c·q⁻¹ | ℓ).
        let chi = legendre_u(c) * q_class;
        count += 1 + chi;
    }
    if q_class == 1 {
        count += 2;
    }
    Ok(count as u64)
}

/// All rational points with x = a/b in lowest terms, |a| ≤ H, 0 < b ≤ H,
/// plus the two infinity points when q is a rational square. Both y-signs are
/// reported; points come out sorted by (chart, x, y) for deterministic output.
pub fn rational_point_search(curve: &QuarticCurve, height: u64) -> Vec<AffinePoint> {
    assert!(height >= 1);
    let mut points = Vec::new();

    match (curve.p.to_i64(), curve.q.to_i64()) {
        (Some(p), Some(q)) if height <= 50_000 => search_small(p, q, height, &mut points),
        _ => search_big(curve, height, &mut points),
    }

    // Infinity points exist over Q iff q is a perfect square.
    if curve.q.is_positive() {
        let root = curve.q.sqrt();
        if &root * &root == curve.q {
            let s = Rat::new(Int::one(), root);
            points.push(AffinePoint::exact(Chart::B, Rat::zero(), s.clone()));
            points.push(AffinePoint::exact(Chart::B, Rat::zero(), -s));
        }
    }

    points.sort_by(|a, b| {
        let key = |pt: &AffinePoint| {
            (pt.chart, pt.x.exact().unwrap().clone(), pt.y.exact().unwrap().clone())
        };
        key(a).cmp(&key(b))
    });
    points
}

fn search_small(p: i64, q: i64, height: u64, points: &mut Vec<AffinePoint>) {
    let h = height as i64;
    let (p, q) = (p as i128, q as i128);
    for b in 1..=h {
        let b4 = (b as i128).pow(4);
        for a in -h..=h {
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            let a4 = (a as i128).pow(4);
            // y² = (a⁴ − p·b⁴)/(q·b⁴); equivalently (q·b²·y)² = (a⁴ − p·b⁴)·q.
            let n = match a4.checked_sub(p * b4).and_then(|d| d.checked_mul(q)) {
                Some(n) => n,
                None => {
                    push_candidate_big(
                        &Int::from(p),
                        &Int::from(q),
                        &Int::from(a),
                        &Int::from(b),
                        points,
                    );
                    continue;
                }
            };
            if n < 0 {
                continue;
            }
            let x = Rat::new(Int::from(a), Int::from(b));
            if n == 0 {
                points.push(AffinePoint::exact(Chart::A, x, Rat::zero()));
                continue;
            }
            let s = isqrt_i128(n);
            if s * s != n {
                continue;
            }
            let y = Rat::new(Int::from(s), Int::from(q) * Int::from(b).pow(2));
            points.push(AffinePoint::exact(Chart::A, x.clone(), y.clone()));
            points.push(AffinePoint::exact(Chart::A, x, -y));
        }
    }
}

fn search_big(curve: &QuarticCurve, height: u64, points: &mut Vec<AffinePoint>) {
    let h = height as i64;
    for b in 1..=h {
        for a in -h..=h {
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            push_candidate_big(&curve.p, &curve.q, &Int::from(a), &Int::from(b), points);
        }
    }
}

fn push_candidate_big(p: &Int, q: &Int, a: &Int, b: &Int, points: &mut Vec<AffinePoint>) {
    let n = (a.pow(4) - p * b.pow(4)) * q;
    if n.is_negative() {
        return;
    }
    let x = Rat::new(a.clone(), b.clone());
    if n.is_zero() {
        points.push(AffinePoint::exact(Chart::A, x, Rat::zero()));
        return;
    }
    let s = n.sqrt();
    if &s * &s != n {
        return;
    }
    let y = Rat::new(s, q * b.pow(2));
    points.push(AffinePoint::exact(Chart::A, x.clone(), y.clone()));
    points.push(AffinePoint::exact(Chart::A, x, -y));
}

fn isqrt_i128(n: i128) -> i128 {
    debug_assert!(n >= 0);
    if n < 2 {
        return n;
    }
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// The Jacobian elliptic curve of the quartic model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jacobian {
    /// Y² = X³ + a·X + b.
    pub a: Int,
    pub b: Int,
    /// Δ = −16·(4a³ + 27b²).
    pub discriminant: Int,
}

/// Jacobian of q·y² = x⁴ − p: the elliptic curve Y² = X³ + 4pq²·X.
///
/// Multiplying the curve equation by q puts it in the form (qy)² = g(x) with
/// g = q·x⁴ − pq, whose classical degree-4 invariants are I = −12pq², J = 0.
/// The associated elliptic curve Y² = X³ − 27I·X − 27J rescales by u = 3 to
/// Y² = X³ + 4pq²·X.
pub fn jacobian(curve: &QuarticCurve) -> Jacobian {
    let a = Int::from(4) * &curve.p * &curve.q * &curve.q;
    let b = Int::zero();
    let discriminant = Int::from(-16) * (Int::from(4) * a.pow(3) + Int::from(27) * b.pow(2));
    Jacobian { a, b, discriminant }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(p: i64, q: i64) -> QuarticCurve {
        QuarticCurve::new(p, q).unwrap()
    }

    #[test]
    fn validation() {
        assert!(QuarticCurve::new(17, 2).is_ok());
        assert_eq!(
            QuarticCurve::new(4, 2),
            Err(CurveError::NotCoprime { gcd: Int::from(2) })
        );
        assert_eq!(
            QuarticCurve::new(0, 3),
            Err(CurveError::ZeroParameter { which: "p" })
        );
        assert_eq!(
            QuarticCurve::new(5, 0),
            Err(CurveError::ZeroParameter { which: "q" })
        );
        assert!(QuarticCurve::new(-15, 4).is_ok());
    }

    #[test]
    fn count_points_examples() {
        // y² = x⁴ + 1 over F₃ has 2 affine points, plus 2 at infinity.
        assert_eq!(count_points_ff(&curve(17, 1), &Int::from(3)), Ok(4));
        let n = count_points_ff(&curve(17, 2), &Int::from(3)).unwrap() as f64;
        assert!((n - 4.0).abs() <= 2.0 * 3f64.sqrt());
        let n = count_points_ff(&curve(97, 3), &Int::from(5)).unwrap() as f64;
        assert!((n - 6.0).abs() <= 2.0 * 5f64.sqrt());
        assert_eq!(
            count_points_ff(&curve(17, 2), &Int::from(2)),
            Err(CurveError::BadReductionPlace { prime: Int::from(2) })
        );
        assert!(count_points_ff(&curve(17, 2), &Int::from(17)).is_err());
    }

    #[test]
    fn count_points_brute_force() {
        // Cross-check against direct enumeration of both charts.
        for (p, q, l) in [(17i64, 2i64, 7u64), (97, 3, 11), (-5, 3, 13), (7, -6, 5)] {
            let c = curve(p, q);
            let li = Int::from(l);
            let mut expected = 0u64;
            for x in 0..l as i64 {
                for y in 0..l as i64 {
                    if (q * y * y - (x * x * x * x - p)).rem_euclid(l as i64) == 0 {
                        expected += 1;
                    }
                }
            }
            // Infinity: s² = 1/q over F_ℓ.
            for s in 0..l as i64 {
                if (q * s * s - 1).rem_euclid(l as i64) == 0 {
                    expected += 1;
                }
            }
            assert_eq!(count_points_ff(&c, &li), Ok(expected), "p={p} q={q} l={l}");
        }
    }

    #[test]
    fn search_finds_small_points() {
        let pts = rational_point_search(&curve(15, 1), 2);
        let has = |x: (i64, i64), y: (i64, i64)| {
            pts.iter().any(|pt| {
                pt.chart == Chart::A
                    && pt.x.exact() == Some(&Rat::new(Int::from(x.0), Int::from(x.1)))
                    && pt.y.exact() == Some(&Rat::new(Int::from(y.0), Int::from(y.1)))
            })
        };
        assert!(has((2, 1), (1, 1)));
        assert!(has((2, 1), (-1, 1)));
        // q = 1 is a square: two points at infinity.
        assert_eq!(pts.iter().filter(|pt| pt.chart == Chart::B).count(), 2);
    }

    #[test]
    fn search_respects_curve_equation() {
        for (p, q) in [(15i64, 1i64), (-7, 3), (1, -4), (16, 9)] {
            let c = curve(p, q);
            for pt in rational_point_search(&c, 8) {
                match pt.chart {
                    Chart::A => {
                        let x = pt.x.exact().unwrap();
                        let y = pt.y.exact().unwrap();
                        assert_eq!(c.rhs_affine(x), y * y, "({p},{q}) at x={x}");
                    }
                    Chart::B => {
                        let t = pt.x.exact().unwrap();
                        let s = pt.y.exact().unwrap();
                        assert_eq!(c.rhs_infinity(t), s * s);
                    }
                }
            }
        }
    }

    #[test]
    fn search_empty_for_lind_curve() {
        assert!(rational_point_search(&curve(17, 2), 100).is_empty());
    }

    #[test]
    fn jacobian_examples() {
        assert_eq!(jacobian(&curve(17, 2)).a, Int::from(272));
        assert_eq!(jacobian(&curve(97, 3)).a, Int::from(3492));
        assert_eq!(jacobian(&curve(11, 1)).a, Int::from(44));
        assert_eq!(jacobian(&curve(17, 2)).b, Int::zero());
        // Δ = −2¹²·p³·q⁶.
        let d = jacobian(&curve(17, 2)).discriminant;
        assert_eq!(d, Int::from(-4096i64) * Int::from(17i64).pow(3) * Int::from(2i64).pow(6));
    }

    #[test]
    fn chart_gluing_on_found_points() {
        // A chart-A point with x ≠ 0 maps to chart B via t = 1/x, s = y/x².
        let c = curve(15, 1);
        for pt in rational_point_search(&c, 3) {
            if pt.chart != Chart::A {
                continue;
            }
            let x = pt.x.exact().unwrap();
            if x.is_zero() {
                continue;
            }
            let y = pt.y.exact().unwrap();
            let t = Rat::one() / x;
            let s = y / (x * x);
            assert_eq!(c.rhs_infinity(&t), &s * &s);
        }
    }
}
