//! The quaternion Brauer class (y, p): local invariants, the obstruction sum,
//! and certificates.
//!
//! At a local point P with y(P) ≠ 0 the class evaluates to the Hilbert symbol
//! (y(P), p)_v, recorded as the invariant 0 (symbol +1) or 1/2 (symbol −1).
//! On chart B the coordinate change y = s/t² differs from s by a square, so
//! the class of s stands in for the class of y; at t = 0 this is exactly the
//! locally-constant extension of the evaluation.
//!
//! Summing the invariants over all places (they vanish at good odd places —
//! a symbol −1 there would force v(y) odd, hence a residue root of x⁴ − p,
//! hence p a local square, contradicting the symbol) gives the obstruction:
//! a constant nonzero sum over an everywhere-locally-solvable curve is
//! incompatible with Hilbert reciprocity at a rational point, so none exists.

use crate::arith::{Int, Rat};
use crate::curve::{self, AffinePoint, Coord, Jacobian, QuarticCurve};
use crate::localfields::{hilbert_symbol, Place};
use crate::localsolve::{
    self, LocalSolveError, LocalWitness, RealWitness, SolvabilityReport, WitnessData,
};
use crate::search::AssumptionReport;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BrauerError {
    #[error(transparent)]
    LocalSolve(#[from] LocalSolveError),
    #[error("cannot evaluate the class at a witness without an explicit point")]
    WitnessWithoutPoint,
    #[error("cannot evaluate the class on the y = 0 locus")]
    YZeroWitness,
    #[error("insufficient precision at {place}: the square class of y is undetermined")]
    PrecisionInsufficient { place: Place },
    #[error("no usable sample points at {place}")]
    NoSamples { place: Place },
    #[error("sampled invariants disagree at {place} although the assumption holds (bug)")]
    ConstancyViolation { place: Place },
    #[error("sampled a nonzero invariant at the good place {place} (bug)")]
    GoodPlaceNonzero { place: Place },
}

/// A local invariant value in (1/2)·Z/Z.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantValue {
    Zero,
    Half,
}

impl InvariantValue {
    fn from_symbol(symbol: i32) -> InvariantValue {
        if symbol == 1 {
            InvariantValue::Zero
        } else {
            InvariantValue::Half
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            InvariantValue::Zero => "0",
            InvariantValue::Half => "1/2",
        }
    }
}

#[derive(Clone, Debug)]
pub struct InvariantSample {
    pub witness: LocalWitness,
    pub symbol: i32,
}

/// The invariant of (y, p) at one place, with its sampling evidence.
#[derive(Clone, Debug)]
pub struct LocalInvariant {
    pub place: Place,
    pub value: InvariantValue,
    pub samples: Vec<InvariantSample>,
    /// All sampled symbols at this place agree.
    pub constant: bool,
}

/// Evaluate the class (y, p) at one explicit witness: the Hilbert symbol of
/// (y(P), p) at the witness's place, and its invariant.
pub fn local_invariant_at(
    curve: &QuarticCurve,
    witness: &LocalWitness,
) -> Result<(i32, InvariantValue), BrauerError> {
    let p_rat = Rat::from_integer(curve.p().clone());
    let symbol = match &witness.data {
        WitnessData::GoodReductionGuarantee => return Err(BrauerError::WitnessWithoutPoint),
        WitnessData::Real(real) => {
            let y_negative = match real {
                RealWitness::Affine { y_squared, y_negative, .. } => {
                    if y_squared.is_zero() {
                        return Err(BrauerError::YZeroWitness);
                    }
                    *y_negative
                }
                // y = s/t² has the sign of s near t = 0.
                RealWitness::InfinityBranch { s_negative } => *s_negative,
            };
            if y_negative && curve.p().is_negative() {
                -1
            } else {
                1
            }
        }
        WitnessData::Affine { point, .. } | WitnessData::Infinity { point, .. } => {
            let y_class = match &point.y {
                Coord::Exact(r) if r.is_zero() => return Err(BrauerError::YZeroWitness),
                Coord::Exact(r) => r.clone(),
                Coord::Approx(a) => {
                    let needed = if a.prime().is_odd() { 1 } else { 3 };
                    if a.precision() < needed {
                        return Err(BrauerError::PrecisionInsufficient {
                            place: witness.place.clone(),
                        });
                    }
                    a.representative()
                }
            };
            hilbert_symbol(&y_class, &p_rat, &witness.place)
        }
    };
    Ok((symbol, InvariantValue::from_symbol(symbol)))
}

/// Deterministic pseudo-random good odd places for a curve: the same curve
/// always samples the same places, so certificates are reproducible.
fn sampled_good_places(curve: &QuarticCurve, count: usize) -> Vec<Place> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut pool: Vec<Int> = Vec::new();
    let mut n = Int::from(3);
    while pool.len() < 120 {
        if crate::arith::is_prime(&n) && curve.is_good_odd_prime(&n) {
            pool.push(n.clone());
        }
        n += 2;
    }
    let mut seed = 0xcbf29ce484222325u64;
    for byte in format!("{}/{}", curve.p(), curve.q()).bytes() {
        seed ^= byte as u64;
        seed = seed.wrapping_mul(0x100000001b3);
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut chosen: Vec<Int> = pool.choose_multiple(&mut rng, count).cloned().collect();
    chosen.sort();
    chosen.into_iter().map(Place::Finite).collect()
}

/// Sample witnesses and evaluate the invariant at every place that matters:
/// the real place, 2, the odd primes dividing pq, and `good_count` sampled
/// good odd places (whose invariants provably vanish — sampling re-checks).
///
/// Requires the curve to be everywhere locally solvable.
pub fn invariant_table(
    curve: &QuarticCurve,
    samples_per_place: usize,
    precision: u32,
    good_count: usize,
) -> Result<Vec<LocalInvariant>, BrauerError> {
    let mut places = vec![Place::Real];
    places.extend(curve.bad_primes().into_iter().map(Place::Finite));
    let sampled_good = sampled_good_places(curve, good_count);
    places.extend(sampled_good.iter().cloned());

    let mut table = Vec::with_capacity(places.len());
    for place in places {
        let entry = place_invariant(curve, &place, samples_per_place, precision)?;
        if sampled_good.contains(&place) && entry.value != InvariantValue::Zero {
            return Err(BrauerError::GoodPlaceNonzero { place });
        }
        table.push(entry);
    }
    Ok(table)
}

fn place_invariant(
    curve: &QuarticCurve,
    place: &Place,
    n: usize,
    precision: u32,
) -> Result<LocalInvariant, BrauerError> {
    let mut k = precision;
    for _attempt in 0..4 {
        let witnesses = localsolve::sample_local_points(curve, place, n, k)?;
        if witnesses.is_empty() {
            return Err(BrauerError::NoSamples { place: place.clone() });
        }
        let mut samples = Vec::with_capacity(witnesses.len());
        let mut insufficient = false;
        for witness in witnesses {
            match local_invariant_at(curve, &witness) {
                Ok((symbol, _)) => samples.push(InvariantSample { witness, symbol }),
                Err(BrauerError::PrecisionInsufficient { .. }) => {
                    insufficient = true;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if insufficient {
            k *= 2;
            continue;
        }
        let first = samples[0].symbol;
        let constant = samples.iter().all(|s| s.symbol == first);
        return Ok(LocalInvariant {
            place: place.clone(),
            value: InvariantValue::from_symbol(first),
            samples,
            constant,
        });
    }
    Err(BrauerError::PrecisionInsufficient { place: place.clone() })
}

/// Sum of the table's invariant values in (1/2)·Z/Z. Invariants at the
/// unsampled places are 0 (good odd reduction), so this is the full sum.
pub fn obstruction_sum(table: &[LocalInvariant]) -> InvariantValue {
    let halves = table
        .iter()
        .filter(|inv| inv.value == InvariantValue::Half)
        .count();
    if halves % 2 == 0 {
        InvariantValue::Zero
    } else {
        InvariantValue::Half
    }
}

/// How strong the certificate's claim is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// The six-condition assumption holds: per-place constancy and the
    /// invariant table shape are theorems, and emptiness is proven.
    Proven,
    /// Sampling evidence only: constancy observed, not derived.
    Empirical,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Proven => "PROVEN",
            Mode::Empirical => "EMPIRICAL",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    /// Everywhere locally solvable, obstruction sum 1/2 under the proven
    /// assumption, empty rational search: no rational points, and the curve
    /// class is a nonzero element of Sha(Q, E)[2].
    LgpViolationProven,
    /// Same shape, but the constancy of the invariants is only sampled.
    LgpViolationEmpirical,
    HasRationalPoint,
    NotLocallySolvable,
    /// Everywhere locally solvable but no obstruction from (y, p) and no
    /// rational point found up to the search height.
    Inconclusive,
}

impl Conclusion {
    pub fn as_str(&self) -> &'static str {
        match self {
            Conclusion::LgpViolationProven => "LGP_VIOLATION_PROVEN",
            Conclusion::LgpViolationEmpirical => "LGP_VIOLATION_EMPIRICAL",
            Conclusion::HasRationalPoint => "HAS_RATIONAL_POINT",
            Conclusion::NotLocallySolvable => "NOT_LOCALLY_SOLVABLE",
            Conclusion::Inconclusive => "INCONCLUSIVE",
        }
    }
}

/// Knobs for certificate assembly.
#[derive(Clone, Debug)]
pub struct CertifyConfig {
    /// Bound on |numerator| and denominator of x in the rational search.
    pub height: u64,
    /// Local precision for sampled witnesses.
    pub precision: u32,
    pub samples_per_place: usize,
    /// Sampled good odd places in the invariant table.
    pub good_places: usize,
    /// Auxiliary place for the assumption check; inferred as |q| when prime.
    pub v0: Option<Int>,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig { height: 1000, precision: 24, samples_per_place: 5, good_places: 5, v0: None }
    }
}

/// A machine-checkable record of the whole pipeline for one curve.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub curve: QuarticCurve,
    pub assumption: AssumptionReport,
    pub solvability: SolvabilityReport,
    pub invariants: Vec<LocalInvariant>,
    pub obstruction: Option<InvariantValue>,
    pub search_height: u64,
    pub rational_points: Vec<AffinePoint>,
    pub jacobian: Jacobian,
    pub mode: Mode,
    pub conclusion: Conclusion,
    pub citations: Vec<&'static str>,
}

const CITATIONS: [&str; 4] = [
    "Hilbert reciprocity: for a rational point P, the local invariants of the quaternion class \
(y(P), p) sum to 0 in Q/Z.",
    "Brauer-Manin obstruction: if the class (y, p) has constant local invariants with nonzero sum \
over a curve with points in every completion, the curve has no rational points.",
    "The curve is a torsor under its Jacobian E: everywhere-local solvability places its class in \
Sha(Q, E), and emptiness over Q makes that class nonzero.",
    "2-torsion: the curve acquires a point over Q(sqrt(q)), so restriction-corestriction gives \
2[C] = 0.",
];

/// Run the full pipeline and assemble a certificate.
pub fn certify(curve: &QuarticCurve, config: &CertifyConfig) -> Result<Certificate, BrauerError> {
    let v0 = config.v0.clone().or_else(|| crate::search::infer_v0(curve.q()));
    let assumption = crate::search::check_assumption(curve.p(), curve.q(), v0.as_ref());
    let solvability = localsolve::everywhere_locally_solvable(curve)?;
    let jacobian = curve::jacobian(curve);
    let rational_points = curve::rational_point_search(curve, config.height);
    let mode = if assumption.passes { Mode::Proven } else { Mode::Empirical };

    if !solvability.everywhere_solvable {
        debug_assert!(!assumption.passes, "the assumption guarantees local solvability");
        return Ok(Certificate {
            curve: curve.clone(),
            assumption,
            solvability,
            invariants: Vec::new(),
            obstruction: None,
            search_height: config.height,
            rational_points,
            jacobian,
            mode: Mode::Empirical,
            conclusion: Conclusion::NotLocallySolvable,
            citations: CITATIONS.to_vec(),
        });
    }

    let invariants = invariant_table(
        curve,
        config.samples_per_place,
        config.precision,
        config.good_places,
    )?;
    let all_constant = invariants.iter().all(|inv| inv.constant);
    let sum = obstruction_sum(&invariants);

    if mode == Mode::Proven {
        // Under the assumption the table shape is a theorem: 1/2 at the place
        // of p, 0 everywhere else. A deviation is an implementation bug.
        for inv in &invariants {
            if !inv.constant {
                return Err(BrauerError::ConstancyViolation { place: inv.place.clone() });
            }
            let expected = if inv.place.prime() == Some(curve.p()) {
                InvariantValue::Half
            } else {
                InvariantValue::Zero
            };
            if inv.value != expected {
                return Err(BrauerError::ConstancyViolation { place: inv.place.clone() });
            }
        }
    }

    let conclusion = if !rational_points.is_empty() {
        debug_assert!(mode != Mode::Proven, "a proven obstruction excludes rational points");
        Conclusion::HasRationalPoint
    } else if sum == InvariantValue::Half && all_constant {
        match mode {
            Mode::Proven => Conclusion::LgpViolationProven,
            Mode::Empirical => Conclusion::LgpViolationEmpirical,
        }
    } else {
        Conclusion::Inconclusive
    };

    Ok(Certificate {
        curve: curve.clone(),
        assumption,
        solvability,
        invariants,
        obstruction: Some(sum),
        search_height: config.height,
        rational_points,
        jacobian,
        mode,
        conclusion,
        citations: CITATIONS.to_vec(),
    })
}
