//! Constructive machinery: witness vectors whose n-th shift image equals a
//! requested target exactly, families of such witnesses, the c₀ obstruction
//! for tail-constant bases, the diagonal limit combinator, and the bilateral
//! contradiction bound.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::criteria::{find_growth_certificate, sound_inf_window, GrowthCertificate};
use crate::error::{Error, Result};
use crate::rational::{self, format_rational, pow_u64, sqrt_exact, to_f64_lossy, Rational};
use crate::vectors::{
    distance_sup, sup_norm, ComplexRational, FiniteVector, TailConstantVector, Vector,
};
use crate::weights::{Ambient, Canonical, WeightSpec};

/// Largest materialized window; beyond this, callers must stay lazy.
const MATERIALIZE_CAP: i64 = 100_000;

/// Search cap for power selection loops that terminate by certificate math.
const POWER_SEARCH_CAP: u64 = 100_000;

/// First index the witness construction may freely overwrite: one past the
/// base vector's support (the construction keeps the base's coordinates
/// below it, parks zeros through the shift power, and solves for the target
/// above it).
pub fn support_shift(x: &FiniteVector) -> i64 {
    x.support_max().map_or(1, |s| s + 1)
}

/// A coordinate oracle for the vector z with coordinates
///   z_k = x_k for k < n₀, 0 for n₀ ≤ k ≤ n,
///   z_k = y_{k−n} / ∏_{i=1}^{n} α_{i+(k−n−1)} for k > n.
/// By construction (T^n z)_j = y_j exactly for every j ≥ 1: the window
/// product multiplying z_{j+n} is the one divided out of it.
///
/// Witnesses stay lazy because targets with constant tails make infinitely
/// many coordinates nonzero; any finite window can still be evaluated
/// exactly on demand.
#[derive(Clone, Debug)]
pub struct LazyWitness {
    weights: WeightSpec,
    base: FiniteVector,
    target: Vector,
    power: u64,
    support_shift: i64,
    /// exact squared distance to the base (ignores overrides)
    distance_sq: Rational,
    /// sup_norm(target)² / C(n)² — the a-priori bound the distance satisfies
    apriori_bound_sq: Rational,
    /// fault-injection hook: explicitly replaced coordinates
    overrides: BTreeMap<i64, ComplexRational>,
}

/// sup over target indices j ≥ j_from of |y_j|² / ∏_{i=1}^{n} α_{i+j−1}².
fn tail_sup_sq_from(w: &WeightSpec, y: &Vector, n: u64, j_from: i64) -> Result<Rational> {
    let mut best = rational::int(0);
    let mut fold = |v: Rational| {
        if v > best {
            best = v;
        }
    };
    match y {
        Vector::Finite(f) => {
            for (&j, value) in f.iter() {
                if j < j_from {
                    continue;
                }
                let p = w.window_product(j - 1, n)?.exact;
                fold(value.modulus_sq() / (&p * &p));
            }
        }
        Vector::TailConstant(t) => {
            for j in j_from.max(1)..t.tail_start() {
                let value = t.coordinate(j)?;
                if value.is_zero() {
                    continue;
                }
                let p = w.window_product(j - 1, n)?.exact;
                fold(value.modulus_sq() / (&p * &p));
            }
            let c_sq = t.tail_value().modulus_sq();
            if c_sq > rational::int(0) {
                let inf = inf_window_from(w, n, t.tail_start().max(j_from) - 1)?;
                fold(c_sq / (&inf * &inf));
            }
        }
    }
    Ok(best)
}

/// Exact inf over offsets j ≥ j_min of ∏_{i=1}^{n} α_{i+j} (unilateral).
///
/// Periodic forms: offsets below the prefix end are scanned individually and
/// one full period of residues covers everything beyond. Block forms: the
/// finitely many offsets touching table entries are scanned, and beyond them
/// min(a,b)^n is both a floor and attained inside a long-enough run.
fn inf_window_from(w: &WeightSpec, n: u64, j_min: i64) -> Result<Rational> {
    let j_min = j_min.max(0);
    match w.canonical() {
        Canonical::Uni { prefix, period } => {
            let hi = j_min.max(prefix.len() as i64) + period.len() as i64;
            let mut best: Option<Rational> = None;
            for j in j_min..hi {
                let p = w.window_product(j, n)?.exact;
                if best.as_ref().is_none_or(|b| &p < b) {
                    best = Some(p);
                }
            }
            Ok(best.expect("nonempty offset scan"))
        }
        Canonical::Blocks { entries, a, b } => {
            let small = if a <= b { &a } else { &b };
            let mut best = pow_u64(small, n);
            for j in j_min..entries.len() as i64 {
                let p = w.window_product(j, n)?.exact;
                if p < best {
                    best = p;
                }
            }
            Ok(best)
        }
        Canonical::Bi { .. } => Err(Error::RequiresUnilateral),
    }
}

/// Build the witness realizing T^n z = y while keeping x's coordinates
/// below the support shift. The exact distance to x and the a-priori bound
/// sup_norm(y)/C(n) are attached.
pub fn build_witness(w: &WeightSpec, x: &FiniteVector, y: &Vector, n: u64) -> Result<LazyWitness> {
    if w.ambient() != Ambient::Unilateral {
        return Err(Error::RequiresUnilateral);
    }
    if x.ambient() != Ambient::Unilateral || y.ambient() != Ambient::Unilateral {
        return Err(Error::AmbientMismatch);
    }
    let n0 = support_shift(x);
    if (n as i64) < n0 {
        return Err(Error::PowerBelowSupportShift { n, n0 });
    }
    let distance_sq = tail_sup_sq_from(w, y, n, 1)?;
    let inf = sound_inf_window(w, n)?.value.exact;
    let norm_sq = sup_norm(y).value_sq;
    let apriori_bound_sq = norm_sq / (&inf * &inf);
    debug_assert!(distance_sq <= apriori_bound_sq);
    Ok(LazyWitness {
        weights: w.clone(),
        base: x.clone(),
        target: y.clone(),
        power: n,
        support_shift: n0,
        distance_sq,
        apriori_bound_sq,
        overrides: BTreeMap::new(),
    })
}

impl LazyWitness {
    pub fn power(&self) -> u64 {
        self.power
    }

    pub fn support_shift(&self) -> i64 {
        self.support_shift
    }

    pub fn base(&self) -> &FiniteVector {
        &self.base
    }

    pub fn target(&self) -> &Vector {
        &self.target
    }

    pub fn weights(&self) -> &WeightSpec {
        &self.weights
    }

    /// Exact squared distance to the base vector (untampered coordinates).
    pub fn distance_sq(&self) -> &Rational {
        &self.distance_sq
    }

    /// sup_norm(target)² / C(n)², always ≥ the exact squared distance.
    pub fn apriori_bound_sq(&self) -> &Rational {
        &self.apriori_bound_sq
    }

    /// Fault-injection hook: pin coordinate `k` to `value`. Verification is
    /// expected to notice.
    pub fn with_override(mut self, k: i64, value: ComplexRational) -> Self {
        self.overrides.insert(k, value);
        self
    }

    /// Exact coordinate k ≥ 1 of the witness.
    pub fn coordinate(&self, k: i64) -> Result<ComplexRational> {
        Ambient::Unilateral.check_index(k)?;
        if let Some(v) = self.overrides.get(&k) {
            return Ok(v.clone());
        }
        if k < self.support_shift {
            return self.base.coordinate(k);
        }
        if k <= self.power as i64 {
            return Ok(ComplexRational::zero());
        }
        let j = k - self.power as i64;
        let y_j = self.target.coordinate(j)?;
        if y_j.is_zero() {
            return Ok(ComplexRational::zero());
        }
        let product = self.weights.window_product(j - 1, self.power)?.exact;
        Ok(y_j.scale(&product.recip()))
    }

    /// Materialize coordinates 1..=up_to.
    pub fn to_finite_vector(&self, up_to: i64) -> Result<FiniteVector> {
        if up_to > MATERIALIZE_CAP {
            return Err(Error::UnsupportedRepresentation(format!(
                "window 1..={up_to} exceeds the materialization cap {MATERIALIZE_CAP}"
            )));
        }
        let mut pairs = Vec::new();
        for k in 1..=up_to {
            let v = self.coordinate(k)?;
            if !v.is_zero() {
                pairs.push((k, v));
            }
        }
        FiniteVector::new(Ambient::Unilateral, pairs)
    }

    /// JSON dump of a coordinate window plus the attached error data.
    pub fn dump(&self, from: i64, to: i64) -> Result<WitnessDump> {
        if to - from > MATERIALIZE_CAP {
            return Err(Error::UnsupportedRepresentation(format!(
                "window {from}..={to} exceeds the materialization cap {MATERIALIZE_CAP}"
            )));
        }
        let mut coordinates = Vec::new();
        for k in from.max(1)..=to {
            let v = self.coordinate(k)?;
            coordinates.push((k, format_rational(&v.re), format_rational(&v.im)));
        }
        Ok(WitnessDump {
            n: self.power,
            n0: self.support_shift,
            coordinates,
            error_bound_sq: format_rational(&self.distance_sq),
            error_bound: sqrt_exact(&self.distance_sq).as_ref().map(format_rational),
            error_bound_float: to_f64_lossy(&self.distance_sq).sqrt(),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessDump {
    pub n: u64,
    pub n0: i64,
    /// [index, re, im] triples over the requested window
    pub coordinates: Vec<(i64, String, String)>,
    pub error_bound_sq: String,
    /// present when the squared bound is a perfect square
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_bound: Option<String>,
    pub error_bound_float: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub shift_identity_ok: bool,
    #[serde(with = "rational::serde_pq")]
    pub distance_sq: Rational,
}

/// Check (T^n witness)_j = y_j for every j in the window, and report the
/// squared distance to the base.
///
/// The identity check evaluates coordinates through the override hook, so a
/// tampered witness fails it. The distance is exact for untampered
/// witnesses; with overrides it additionally folds in the overridden
/// coordinates' actual deviations (exact unless an override shrinks the
/// unique maximizer, which cannot make a passing check unsound).
pub fn verify_witness(witness: &LazyWitness, from: i64, to: i64) -> Result<VerifyReport> {
    if to - from > MATERIALIZE_CAP {
        return Err(Error::UnsupportedRepresentation(format!(
            "window {from}..={to} exceeds the materialization cap {MATERIALIZE_CAP}"
        )));
    }
    let mut ok = true;
    for j in from.max(1)..=to {
        let z = witness.coordinate(j + witness.power as i64)?;
        let image = z.scale(&witness.weights.window_product(j - 1, witness.power)?.exact);
        if image != witness.target.coordinate(j)? {
            ok = false;
            break;
        }
    }
    let mut distance_sq = witness.distance_sq.clone();
    for (&k, value) in &witness.overrides {
        let base_k = if k < witness.support_shift {
            witness.base.coordinate(k)?
        } else {
            ComplexRational::zero()
        };
        let dev = (value.clone() - base_k).modulus_sq();
        if dev > distance_sq {
            distance_sq = dev;
        }
    }
    Ok(VerifyReport {
        shift_identity_ok: ok,
        distance_sq,
    })
}

/// One witness per power of a range, under a growth certificate.
#[derive(Clone, Debug)]
pub struct WitnessFamily {
    pub certificate: GrowthCertificate,
    pub witnesses: Vec<LazyWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyRow {
    pub n: u64,
    #[serde(with = "rational::serde_pq")]
    pub exact_sq: Rational,
    #[serde(with = "rational::serde_pq")]
    pub apriori_sq: Rational,
    /// sup_norm(target)² / lower_bound_at(n)² — monotone along the family
    #[serde(with = "rational::serde_pq")]
    pub certificate_bound_sq: Rational,
}

impl WitnessFamily {
    pub fn rows(&self) -> Result<Vec<FamilyRow>> {
        self.witnesses
            .iter()
            .map(|w| {
                let lb = self.certificate.lower_bound_at(w.power())?;
                let norm_sq = sup_norm(w.target()).value_sq;
                Ok(FamilyRow {
                    n: w.power(),
                    exact_sq: w.distance_sq().clone(),
                    apriori_sq: w.apriori_bound_sq().clone(),
                    certificate_bound_sq: norm_sq / (&lb * &lb),
                })
            })
            .collect()
    }
}

/// Witnesses for every power in [max(n_from, n₀), n_to]; requires a growth
/// certificate so the error bounds provably shrink.
pub fn mixing_family(
    w: &WeightSpec,
    x: &FiniteVector,
    y: &Vector,
    n_from: u64,
    n_to: u64,
) -> Result<WitnessFamily> {
    let Some(certificate) = find_growth_certificate(w, CERT_HORIZON, 0)? else {
        return Err(Error::NoCertificate {
            horizon: CERT_HORIZON,
        });
    };
    let start = n_from.max(support_shift(x) as u64);
    if start > n_to {
        return Err(Error::Domain(format!(
            "power range empty after clamping to the support shift ({start}..={n_to})"
        )));
    }
    let witnesses = (start..=n_to)
        .map(|n| build_witness(w, x, y, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(WitnessFamily {
        certificate,
        witnesses,
    })
}

const CERT_HORIZON: u64 = 4096;

/// Obstruction showing a tail-constant vector with tail value c ≠ 0 is not
/// a J-vector: beyond the first window length n₁ with C(n₁) > 1, every
/// approximation scheme forces coordinates below 2ε, yet |x_k| stays ≥ |c|.
#[derive(Clone, Debug, Serialize)]
pub struct C0Obstruction {
    /// smallest window length whose product infimum exceeds 1
    pub n1: u64,
    /// first index beyond n1 whose modulus defeats the 2ε bound
    pub violating_index: i64,
    #[serde(with = "rational::serde_pq")]
    pub bound_2eps: Rational,
    #[serde(with = "rational::serde_pq")]
    pub modulus_sq_at_index: Rational,
}

pub fn c0_obstruction(
    w: &WeightSpec,
    x: &TailConstantVector,
    eps: &Rational,
) -> Result<C0Obstruction> {
    use num_traits::Signed;
    if w.ambient() != Ambient::Unilateral || x.ambient() != Ambient::Unilateral {
        return Err(Error::RequiresUnilateral);
    }
    if eps.is_negative() {
        return Err(Error::Domain("ε must be nonnegative".into()));
    }
    let two_eps = rational::int(2) * eps;
    let threshold_sq = &two_eps * &two_eps;
    if x.tail_value().modulus_sq() <= threshold_sq {
        return Err(Error::InconclusiveParameters(format!(
            "the tail value must exceed 2ε = {} in modulus",
            format_rational(&two_eps)
        )));
    }
    let Some(cert) = find_growth_certificate(w, CERT_HORIZON, 0)? else {
        return Err(Error::NoCertificate {
            horizon: CERT_HORIZON,
        });
    };
    let n1 = cert.window_len;
    let mut k = n1 as i64 + 1;
    loop {
        let m_sq = x.coordinate(k)?.modulus_sq();
        if m_sq >= threshold_sq {
            return Ok(C0Obstruction {
                n1,
                violating_index: k,
                bound_2eps: two_eps,
                modulus_sq_at_index: m_sq,
            });
        }
        k += 1;
        // the tail value itself violates, so the scan ends by tail_start
        debug_assert!(k <= x.tail_start().max(n1 as i64 + 1) + 1);
    }
}

/// From |y_j − x_j| ≤ δ and |(∏_{i=1}^{k} α_{j−i})·y_j| ≤ ε it follows that
/// |x_j| ≤ δ + ε/∏_{i=1}^{k} α_{j−i}; rows evaluate that bound for
/// k = 1..=k_max and flag every k where it falls below |x_j|.
#[derive(Clone, Debug, Serialize)]
pub struct ObstructionRow {
    pub k: u64,
    #[serde(with = "rational::serde_pq")]
    pub left_product: Rational,
    #[serde(with = "rational::serde_pq")]
    pub bound: Rational,
    pub contradiction: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BilateralObstruction {
    /// coordinate of largest modulus in the base vector (smallest index on ties)
    pub coordinate: i64,
    #[serde(with = "rational::serde_pq")]
    pub modulus_sq: Rational,
    pub rows: Vec<ObstructionRow>,
    pub contradiction_at: Option<u64>,
}

pub fn bilateral_obstruction(
    w: &WeightSpec,
    x: &FiniteVector,
    delta: &Rational,
    eps: &Rational,
    k_max: u64,
) -> Result<BilateralObstruction> {
    use num_traits::Signed;
    if w.ambient() != Ambient::Bilateral || x.ambient() != Ambient::Bilateral {
        return Err(Error::RequiresBilateral);
    }
    if delta.is_negative() || eps.is_negative() {
        return Err(Error::Domain("δ and ε must be nonnegative".into()));
    }
    let mut best: Option<(i64, Rational)> = None;
    for (&idx, value) in x.iter() {
        let m = value.modulus_sq();
        if best.as_ref().is_none_or(|(_, b)| &m > b) {
            best = Some((idx, m));
        }
    }
    let Some((j, modulus_sq)) = best else {
        return Err(Error::Domain(
            "the base vector must have a nonzero coordinate".into(),
        ));
    };
    let mut rows = Vec::new();
    let mut contradiction_at = None;
    for k in 1..=k_max {
        // ∏_{i=1}^{k} α_{j−i} is the window covering indices j−k … j−1
        let left_product = w.window_product(j - 1 - k as i64, k)?.exact;
        let bound = delta + eps / &left_product;
        let contradiction = &bound * &bound < modulus_sq;
        if contradiction && contradiction_at.is_none() {
            contradiction_at = Some(k);
        }
        rows.push(ObstructionRow {
            k,
            left_product,
            bound,
            contradiction,
        });
    }
    Ok(BilateralObstruction {
        coordinate: j,
        modulus_sq,
        rows,
        contradiction_at,
    })
}

/// Supplies witnesses on demand for the diagonal combinator.
pub trait WitnessSource {
    /// A witness for (x, y) with squared tail error strictly below
    /// `bound_sq` and power ≥ `min_power`; `m` names the requesting step
    /// for error reporting.
    fn witness(
        &self,
        m: u64,
        x: &FiniteVector,
        y: &Vector,
        bound_sq: &Rational,
        min_power: u64,
    ) -> Result<LazyWitness>;
}

/// Default source: smallest admissible power, found by exact evaluation.
/// A growth certificate guarantees the search terminates.
pub struct CertificateSource<'a> {
    pub weights: &'a WeightSpec,
}

impl WitnessSource for CertificateSource<'_> {
    fn witness(
        &self,
        m: u64,
        x: &FiniteVector,
        y: &Vector,
        bound_sq: &Rational,
        min_power: u64,
    ) -> Result<LazyWitness> {
        let start = min_power.max(support_shift(x) as u64).max(1);
        for n in start..start + POWER_SEARCH_CAP {
            let witness = build_witness(self.weights, x, y, n)?;
            if witness.distance_sq() < bound_sq {
                return Ok(witness);
            }
        }
        Err(Error::DiagonalStep {
            m,
            reason: format!(
                "no power in {start}..{} brings the squared error below {}",
                start + POWER_SEARCH_CAP,
                format_rational(bound_sq)
            ),
        })
    }
}

/// One emitted element of the diagonal stream: a vector within 1/m of the
/// base limit whose `power`-th shift image is within 1/m of the target
/// limit, both strictly and exactly.
#[derive(Clone, Debug)]
pub struct DiagonalStep {
    pub m: u64,
    /// index of the approximating pair the step selected
    pub pair_index: u64,
    pub power: u64,
    pub base_gap_sq: Rational,
    pub target_gap_sq: Rational,
    pub witness: LazyWitness,
}

/// Sequential diagonal selection: for each m pick a pair close enough to
/// the limits, then a witness with small enough tail error; powers strictly
/// increase. Thresholds for the all-powers variant come from
/// `threshold_power`.
pub struct DiagonalStream<'a, S: WitnessSource> {
    source: &'a S,
    pairs: Box<dyn Fn(u64) -> Option<(FiniteVector, Vector)> + 'a>,
    limit_x: FiniteVector,
    limit_y: Vector,
    cursor: u64,
    last_power: u64,
    m: u64,
}

const PAIR_SCAN_CAP: u64 = 10_000;

impl<'a, S: WitnessSource> DiagonalStream<'a, S> {
    pub fn new(
        source: &'a S,
        pairs: Box<dyn Fn(u64) -> Option<(FiniteVector, Vector)> + 'a>,
        limit_x: FiniteVector,
        limit_y: Vector,
    ) -> Self {
        DiagonalStream {
            source,
            pairs,
            limit_x,
            limit_y,
            cursor: 1,
            last_power: 0,
            m: 0,
        }
    }

    /// Produce the step for the next m (1, 2, 3, …).
    pub fn next_step(&mut self) -> Result<DiagonalStep> {
        self.m += 1;
        let m = self.m;
        let budget_sq = rational::ratio(1, (m * m) as i64);
        // select the first not-yet-used pair with both limits within 1/m
        let mut selected = None;
        for idx in self.cursor..self.cursor + PAIR_SCAN_CAP {
            let Some((x_m, y_m)) = (self.pairs)(idx) else {
                return Err(Error::DiagonalStep {
                    m,
                    reason: format!("pair sequence exhausted at index {idx}"),
                });
            };
            let dx = distance_sup(&x_m.clone().into(), &self.limit_x.clone().into())?.value_sq;
            let dy = distance_sup(&y_m, &self.limit_y)?.value_sq;
            if dx < budget_sq && dy < budget_sq {
                selected = Some((idx, x_m, y_m, dy));
                break;
            }
        }
        let Some((idx, x_m, y_m, target_gap_sq)) = selected else {
            return Err(Error::DiagonalStep {
                m,
                reason: format!("no pair within 1/{m} of the limits in the scanned range"),
            });
        };
        self.cursor = idx + 1;
        // powers must strictly increase and clear the limit base's support,
        // so beyond the power the witness tail is compared against zeros
        let min_power = (self.last_power + 1).max(self.limit_x.support_max().unwrap_or(0) as u64);
        let witness = self.source.witness(m, &x_m, &y_m, &budget_sq, min_power)?;
        self.last_power = witness.power();
        let base_gap_sq = witness_gap_to(&witness, &self.limit_x)?;
        if base_gap_sq >= budget_sq || target_gap_sq >= budget_sq {
            return Err(Error::DiagonalStep {
                m,
                reason: "selected pair and witness do not meet the strict budget".into(),
            });
        }
        Ok(DiagonalStep {
            m,
            pair_index: idx,
            power: witness.power(),
            base_gap_sq,
            target_gap_sq,
            witness,
        })
    }
}

/// Exact squared sup distance between an (untampered) witness and a finite
/// vector whose support the power clears.
fn witness_gap_to(witness: &LazyWitness, v: &FiniteVector) -> Result<Rational> {
    let n = witness.power() as i64;
    if v.support_max().unwrap_or(0) > n {
        return Err(Error::Domain(
            "the comparison vector's support must not exceed the power".into(),
        ));
    }
    let mut best = rational::int(0);
    let mut candidates: Vec<i64> = v.iter().map(|(&k, _)| k).collect();
    candidates.extend(witness.base().iter().map(|(&k, _)| k));
    candidates.sort_unstable();
    candidates.dedup();
    for k in candidates {
        let diff = (witness.coordinate(k)? - v.coordinate(k)?).modulus_sq();
        if diff > best {
            best = diff;
        }
    }
    // beyond the power both reduce to the witness tail against zero
    let tail = tail_sup_sq_from(&witness.weights, witness.target(), witness.power(), 1)?;
    if tail > best {
        best = tail;
    }
    Ok(best)
}

/// Smallest power l₀ such that the certificate bound already defeats the
/// budget at l₀ — and therefore at every l ≥ l₀, since the bound is
/// monotone. This is the all-powers (threshold) form of the combinator.
pub fn threshold_power(w: &WeightSpec, y: &Vector, budget_sq: &Rational) -> Result<u64> {
    let Some(cert) = find_growth_certificate(w, CERT_HORIZON, 0)? else {
        return Err(Error::NoCertificate {
            horizon: CERT_HORIZON,
        });
    };
    let norm_sq = sup_norm(y).value_sq;
    for l in 1..=POWER_SEARCH_CAP {
        let lb = cert.lower_bound_at(l)?;
        if &(norm_sq.clone() / (&lb * &lb)) < budget_sq {
            return Ok(l);
        }
    }
    Err(Error::Domain(format!(
        "no threshold power below {POWER_SEARCH_CAP} meets the budget"
    )))
}
