//! Growth certificates and classification of weighted backward shifts.
//!
//! The central quantity is C(n) = inf over admissible offsets j of the
//! window product ∏_{i=1}^{n} α_{i+j}. A unilateral shift sends every
//! neighborhood-limit set onto the whole space exactly when C(n) → ∞, and
//! a single finite witness C(N) = M > 1 already forces divergence because
//! window products multiply over concatenated windows.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, format_rational, pow_u64, Rational};
use crate::weights::{
    first_run_start, Ambient, Canonical, Exactness, InfWindow, ProductValue, WeightSpec,
};

/// Crate version stamped into every report.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Safety cap on certificate searches that are mathematically guaranteed to
/// terminate; hitting it means the numbers involved are astronomically
/// unbalanced, and the classifier then reports Undecided rather than stall.
const CERT_SEARCH_CAP: u64 = 4096;

/// Scan bounds for report tables. Certification itself never depends on
/// these: verdicts are backed by exact algebra.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Horizons {
    /// largest window length examined by bounded searches
    pub n: u64,
    /// largest offset examined by bounded scans
    pub j: i64,
}

impl Default for Horizons {
    fn default() -> Self {
        Horizons { n: 64, j: 4096 }
    }
}

/// Finite witness that C(N) ≥ M > 1, with the constants that turn it into
/// a lower bound for every window length.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthCertificate {
    /// window length N
    pub window_len: u64,
    /// M, the exact infimum of length-N window products
    #[serde(with = "rational::serde_pq")]
    pub window_floor: Rational,
    /// every single weight is ≥ M / ‖T‖^{N−1}
    #[serde(with = "rational::serde_pq")]
    pub weight_floor: Rational,
    /// C_min = min(weight_floor^{N−1}, 1)
    #[serde(with = "rational::serde_pq")]
    pub floor_constant: Rational,
}

impl GrowthCertificate {
    /// Build the certificate for window length `n_len`, verifying M > 1.
    pub fn for_spec(w: &WeightSpec, window_len: u64) -> Result<Self> {
        if w.ambient() != Ambient::Unilateral {
            return Err(Error::RequiresUnilateral);
        }
        if window_len == 0 {
            return Err(Error::EmptyWindow);
        }
        let inf = sound_inf_window(w, window_len)?;
        let m = inf.value.exact;
        if m <= rational::int(1) {
            return Err(Error::NoCertificate {
                horizon: window_len,
            });
        }
        let norm_pow = pow_u64(&w.operator_norm(), window_len - 1);
        let weight_floor = &m / norm_pow;
        let one = rational::int(1);
        let wf_pow = pow_u64(&weight_floor, window_len - 1);
        let floor_constant = if wf_pow < one { wf_pow } else { one };
        Ok(GrowthCertificate {
            window_len,
            window_floor: m,
            weight_floor,
            floor_constant,
        })
    }

    /// M^⌊n/N⌋ · C_min — an exact lower bound for C(n), any n ≥ 1.
    ///
    /// Splitting a window of length n into ⌊n/N⌋ blocks of length N plus a
    /// remainder of v < N factors, each block contributes ≥ M and each
    /// leftover factor ≥ weight_floor, so the product is ≥ M^⌊n/N⌋ · C_min.
    pub fn lower_bound_at(&self, n: u64) -> Result<Rational> {
        if n == 0 {
            return Err(Error::EmptyWindow);
        }
        Ok(pow_u64(&self.window_floor, n / self.window_len) * &self.floor_constant)
    }

    /// Re-check the defining inequality against the weight sequence.
    pub fn verify_against(&self, w: &WeightSpec) -> Result<bool> {
        let inf = sound_inf_window(w, self.window_len)?;
        Ok(inf.value.exact >= self.window_floor && self.window_floor > rational::int(1))
    }
}

/// Outcome of a classification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    CertifiedJClass,
    CertifiedNotJClass,
    RefutedUpToHorizon,
    Undecided,
}

/// A reproducible bad window: a concrete offset whose product stays small.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BadWindow {
    pub n: u64,
    pub offset: i64,
    #[serde(with = "rational::serde_pq")]
    pub product: Rational,
}

/// Classification report; field order is stable for golden files.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<GrowthCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refutation: Option<Vec<BadWindow>>,
    pub is_jmix: bool,
    pub notes: Vec<String>,
    pub tool_version: &'static str,
}

impl Classification {
    fn assemble(
        verdict: Verdict,
        certificate: Option<GrowthCertificate>,
        refutation: Option<Vec<BadWindow>>,
        notes: Vec<String>,
    ) -> Self {
        Classification {
            verdict,
            certificate,
            refutation,
            is_jmix: verdict == Verdict::CertifiedJClass,
            notes,
            tool_version: TOOL_VERSION,
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("classification serializes")
    }
}

/// Exact C(n) for every representable form (internal).
///
/// Periodic forms scan one offset per residue class plus the aperiodic
/// offsets — a complete enumeration. Block forms combine a complete scan of
/// the finitely many offsets touching table entries with the exact floor
/// min(a,b)^n, which is attained inside the first long-enough run of the
/// smaller weight beyond the entries. The public `inf_window_product` keeps
/// its scan-only contract for block forms; this one is for certification.
pub(crate) fn sound_inf_window(w: &WeightSpec, n: u64) -> Result<InfWindow> {
    if n == 0 {
        return Err(Error::EmptyWindow);
    }
    match w.canonical() {
        Canonical::Uni { .. } | Canonical::Bi { .. } => w.inf_window_product(n, 0),
        Canonical::Blocks { entries, a, b } => {
            let small = if a <= b { &a } else { &b };
            let floor = pow_u64(small, n);
            let run_offset = (first_run_start(a <= b, n, entries.len() as u64) - 1) as i64;
            let mut best: Option<(Rational, i64)> = None;
            for j in 0..entries.len() as i64 {
                let p = w.window_product(j, n)?.exact;
                match &best {
                    Some((min, _)) if &p >= min => {}
                    _ => best = Some((p, j)),
                }
            }
            let (value, achieved_at) = match best {
                Some((scan_min, scan_j)) if scan_min <= floor => (scan_min, scan_j),
                _ => (floor, run_offset),
            };
            Ok(InfWindow {
                value: ProductValue::new(value),
                achieved_at,
                exactness: Exactness::Exact,
            })
        }
    }
}

/// Smallest N ≤ horizon with C(N) > 1, by extending every tracked window
/// one factor per step: periodic forms track one offset per residue class
/// plus the aperiodic offsets, block forms track the offsets touching table
/// entries alongside the exact run floor min(a,b)^n. The running products
/// are kept as unreduced numerator/denominator pairs — all weights are
/// positive, so C(N) > 1 is exactly numerator > denominator, and skipping
/// the per-step gcd keeps deep searches (periods barely above product 1)
/// linear in the digits instead of quadratic.
fn smallest_window_above_one(w: &WeightSpec, horizon_n: u64) -> Result<Option<u64>> {
    use num_bigint::BigInt;
    let (offsets, floor_base): (Vec<i64>, Option<Rational>) = match w.canonical() {
        Canonical::Uni { prefix, period } => {
            ((0..(prefix.len() + period.len()) as i64).collect(), None)
        }
        Canonical::Blocks { entries, a, b } => {
            let small = if a <= b { a } else { b };
            ((0..entries.len() as i64).collect(), Some(small))
        }
        Canonical::Bi { .. } => return Err(Error::RequiresUnilateral),
    };
    let unit = || (BigInt::from(1), BigInt::from(1));
    let mut products = vec![unit(); offsets.len()];
    let mut floor = floor_base.as_ref().map(|_| unit());
    for n in 1..=horizon_n {
        for (slot, j) in products.iter_mut().zip(&offsets) {
            let a = w.weight_at(j + n as i64)?;
            slot.0 *= a.numer();
            slot.1 *= a.denom();
        }
        if let (Some(f), Some(b)) = (&mut floor, &floor_base) {
            f.0 *= b.numer();
            f.1 *= b.denom();
        }
        if floor.as_ref().is_none_or(|f| f.0 > f.1) && products.iter().all(|p| p.0 > p.1) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Smallest window length N ≤ `horizon_n` whose exact infimum exceeds 1,
/// packaged as a certificate; absent when no such N exists in range.
///
/// `horizon_j` is validated for interface symmetry with the offset-scanning
/// reports; certification never truncates an offset scan (the enumerations
/// above are complete), so it does not influence the result.
pub fn find_growth_certificate(
    w: &WeightSpec,
    horizon_n: u64,
    horizon_j: i64,
) -> Result<Option<GrowthCertificate>> {
    if w.ambient() != Ambient::Unilateral {
        return Err(Error::RequiresUnilateral);
    }
    if horizon_j < 0 {
        return Err(Error::NegativeHorizon(horizon_j));
    }
    match smallest_window_above_one(w, horizon_n)? {
        Some(n) => Ok(Some(GrowthCertificate::for_spec(w, n)?)),
        None => Ok(None),
    }
}

/// Unbounded smallest-N search, used once divergence is already proven.
fn smallest_certificate(w: &WeightSpec) -> Result<Option<GrowthCertificate>> {
    match smallest_window_above_one(w, CERT_SEARCH_CAP)? {
        Some(n) => Ok(Some(GrowthCertificate::for_spec(w, n)?)),
        None => Ok(None),
    }
}

fn product_of(values: &[Rational]) -> Rational {
    values.iter().fold(rational::int(1), |acc, v| acc * v)
}

fn undecided_cap_note() -> Classification {
    Classification::assemble(
        Verdict::Undecided,
        None,
        None,
        vec![format!(
            "divergence is certain but the smallest certificate exceeds the \
             internal search cap {CERT_SEARCH_CAP}"
        )],
    )
}

/// Decide whether the unilateral shift is J-class (equivalently J^mix):
/// C(n) → ∞ ⟺ some window length N has exact infimum M > 1.
///
/// Every representable unilateral form is decided exactly: eventually
/// periodic sequences through their period product, block forms through the
/// run structure of the smaller weight.
pub fn classify_unilateral(w: &WeightSpec, _horizons: &Horizons) -> Result<Classification> {
    if w.ambient() != Ambient::Unilateral {
        return Err(Error::RequiresUnilateral);
    }
    let one = rational::int(1);
    match w.canonical() {
        Canonical::Uni { prefix, period } => {
            let p = product_of(&period);
            if p > one {
                let Some(cert) = smallest_certificate(w)? else {
                    return Ok(undecided_cap_note());
                };
                let notes = vec![
                    format!(
                        "period product {} > 1 forces the window-product infimum to diverge",
                        format_rational(&p)
                    ),
                    format!(
                        "window infimum C({}) = {} > 1, and C(qN+v) ≥ C(N)^q·C_min, so C(n) → ∞",
                        cert.window_len,
                        format_rational(&cert.window_floor)
                    ),
                ];
                Ok(Classification::assemble(
                    Verdict::CertifiedJClass,
                    Some(cert),
                    None,
                    notes,
                ))
            } else {
                let len = period.len() as u64;
                let offset = prefix.len() as i64;
                let rows = (1..=4u64)
                    .map(|k| {
                        let n = k * len;
                        let product = w.window_product(offset, n)?.exact;
                        debug_assert!(product <= one);
                        Ok(BadWindow { n, offset, product })
                    })
                    .collect::<Result<Vec<_>>>()?;
                let notes = vec![format!(
                    "period product {} ≤ 1: windows of length k·{} inside the periodic \
                     region multiply to that product's k-th power, so the window-product \
                     infimum never exceeds 1 at infinitely many lengths and cannot diverge",
                    format_rational(&p),
                    len
                )];
                Ok(Classification::assemble(
                    Verdict::CertifiedNotJClass,
                    None,
                    Some(rows),
                    notes,
                ))
            }
        }
        Canonical::Blocks { entries, a, b } => {
            let small = if a <= b { a.clone() } else { b.clone() };
            if small > one {
                let Some(cert) = smallest_certificate(w)? else {
                    return Ok(undecided_cap_note());
                };
                let notes = vec![
                    format!(
                        "both block weights exceed 1 (smaller is {}), so window products \
                         grow at least geometrically beyond the table entries",
                        format_rational(&small)
                    ),
                    format!(
                        "window infimum C({}) = {} > 1 certifies divergence",
                        cert.window_len,
                        format_rational(&cert.window_floor)
                    ),
                ];
                Ok(Classification::assemble(
                    Verdict::CertifiedJClass,
                    Some(cert),
                    None,
                    notes,
                ))
            } else {
                let m = entries.len() as u64;
                let rows = (1..=6u64)
                    .map(|n| {
                        let offset = (first_run_start(a <= b, n, m) - 1) as i64;
                        let product = w.window_product(offset, n)?.exact;
                        debug_assert_eq!(product, pow_u64(&small, n));
                        Ok(BadWindow { n, offset, product })
                    })
                    .collect::<Result<Vec<_>>>()?;
                let how = if small < one {
                    "tends to 0 along those runs"
                } else {
                    "never exceeds 1"
                };
                let notes = vec![format!(
                    "runs of the smaller block weight {} occur with every length, so a \
                     length-n window inside such a run has product {}^n and the \
                     window-product infimum {}",
                    format_rational(&small),
                    format_rational(&small),
                    how
                )];
                Ok(Classification::assemble(
                    Verdict::CertifiedNotJClass,
                    None,
                    Some(rows),
                    notes,
                ))
            }
        }
        Canonical::Bi { .. } => unreachable!("unilateral specs never canonicalize bilaterally"),
    }
}

/// Bilateral shifts are never J-class, whatever the weights.
///
/// Reaching an arbitrary target from near x forces, at any coordinate j
/// where x_j ≠ 0, the bound |x_j| ≤ δ + ε/∏_{i=1}^{k} α_{j−i} for the
/// approximation qualities δ, ε — and suitable small δ, ε contradict it.
pub fn classify_bilateral(w: &WeightSpec) -> Result<Classification> {
    if w.ambient() != Ambient::Bilateral {
        return Err(Error::RequiresBilateral);
    }
    let mut notes = vec![
        "bilateral shifts are never J-class: reaching 0 from a vector close to x forces \
         |x_j| ≤ δ + ε/∏_{i=1}^{k} α_{j−i} at every j with x_j ≠ 0, which fails for \
         small δ and ε"
            .to_string(),
    ];
    if let Canonical::Bi { left, right, .. } = w.canonical() {
        let one = rational::int(1);
        let pl = product_of(&left);
        let pr = product_of(&right);
        notes.push(format!(
            "left period product {}, right period product {}",
            format_rational(&pl),
            format_rational(&pr)
        ));
        if pl > one && pr > one {
            notes.push(
                "both one-sided growth conditions hold, yet the obstruction above still \
                 applies; see the bilateral obstruction bound for explicit contradictions"
                    .to_string(),
            );
        }
    }
    Ok(Classification::assemble(
        Verdict::CertifiedNotJClass,
        None,
        None,
        notes,
    ))
}

/// Verdict for hypercyclicity of the shift on the p-summable spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SalasVerdict {
    Hypercyclic,
    NotHypercyclic,
    Undecided,
}

#[derive(Clone, Debug, Serialize)]
pub struct SalasReport {
    pub verdict: SalasVerdict,
    pub evidence: Vec<String>,
    pub tool_version: &'static str,
}

/// Hypercyclicity on ℓ^p (1 ≤ p < ∞): holds iff the prefix products
/// ∏_{i=1}^{n} α_i are unbounded.
///
/// Eventually periodic forms are decided by the period product P: prefix
/// products scale by P per cycle, so they are unbounded iff P > 1. Block
/// forms are decided by the pair (a·b, which of a, b is larger): letting
/// E_r be the prefix product at the end of the r-th b-block,
/// E_r = (ab)^{r(r+1)/2} · b^r, which is unbounded iff ab > 1, or ab = 1
/// with b > a; otherwise all prefix products stay bounded (for ab < 1 they
/// tend to 0, for ab = 1 with a ≥ b the running exponent of a is ≤ 1).
/// `horizon` only sizes the evidence table.
pub fn classify_salas_lp(w: &WeightSpec, horizon: i64) -> Result<SalasReport> {
    if w.ambient() != Ambient::Unilateral {
        return Err(Error::RequiresUnilateral);
    }
    if horizon < 0 {
        return Err(Error::NegativeHorizon(horizon));
    }
    let one = rational::int(1);
    let report = |verdict, evidence| SalasReport {
        verdict,
        evidence,
        tool_version: TOOL_VERSION,
    };
    match w.canonical() {
        Canonical::Uni { prefix, period } => {
            let p = product_of(&period);
            let cycle_end = (prefix.len() + period.len()) as u64;
            if p > one {
                let mut evidence = vec![format!(
                    "period product {} > 1: prefix products gain that factor every cycle",
                    format_rational(&p)
                )];
                for k in 1..=5u64 {
                    let n = prefix.len() as u64 + k * period.len() as u64;
                    evidence.push(sample_prefix(w, n)?);
                }
                Ok(report(SalasVerdict::Hypercyclic, evidence))
            } else {
                // beyond one full cycle, products repeat scaled by P ≤ 1,
                // so the sup is attained within the first cycle
                let mut sup = w.prefix_product(1)?.exact;
                let mut argmax = 1u64;
                for n in 2..=cycle_end.max(1) {
                    let v = w.prefix_product(n)?.exact;
                    if v > sup {
                        sup = v;
                        argmax = n;
                    }
                }
                let evidence = vec![
                    format!(
                        "period product {} ≤ 1: prefix products scale by it every cycle",
                        format_rational(&p)
                    ),
                    format!(
                        "sup of all prefix products is {}, attained at n = {}",
                        format_rational(&sup),
                        argmax
                    ),
                ];
                Ok(report(SalasVerdict::NotHypercyclic, evidence))
            }
        }
        Canonical::Blocks { entries, a, b } => {
            let ab = &a * &b;
            let unbounded = ab > one || (ab == one && b > a);
            if unbounded {
                let mut evidence = vec![format!(
                    "prefix products at ends of b-blocks are (ab)^(r(r+1)/2)·b^r with \
                     ab = {}, b = {}, which is unbounded",
                    format_rational(&ab),
                    format_rational(&b)
                )];
                for r in 1..=5u64 {
                    // end of block 2r is one before the start of block 2r+1
                    let n = crate::weights::block_start(2 * r + 1) - 1;
                    evidence.push(sample_prefix(w, n)?);
                }
                Ok(report(SalasVerdict::Hypercyclic, evidence))
            } else {
                let mut evidence = Vec::new();
                if ab < one {
                    evidence.push(format!(
                        "ab = {} < 1: block-end prefix products (ab)^(r(r+1)/2)·b^r tend \
                         to 0, so all prefix products are bounded",
                        format_rational(&ab)
                    ));
                    let scan_to = (horizon as u64).max(entries.len() as u64 + 36).max(36);
                    let mut best = w.prefix_product(1)?.exact;
                    let mut argmax = 1u64;
                    for n in 2..=scan_to {
                        let v = w.prefix_product(n)?.exact;
                        if v > best {
                            best = v;
                            argmax = n;
                        }
                    }
                    evidence.push(format!(
                        "largest prefix product over n ≤ {} is {} at n = {} (scan, not a sup)",
                        scan_to,
                        format_rational(&best),
                        argmax
                    ));
                } else {
                    // ab = 1 and a ≥ b: beyond the table the running exponent
                    // of a is at most 1, so the sup is max over the table
                    // region and κ·max(a,1) beyond it
                    let m = entries.len() as u64;
                    let mut sup = rational::int(0);
                    let mut where_note = String::from("beyond the table entries");
                    for n in 1..=m {
                        let v = w.prefix_product(n)?.exact;
                        if v > sup {
                            sup = v.clone();
                            where_note = format!("at n = {n}");
                        }
                    }
                    let kappa = if m == 0 {
                        rational::int(1)
                    } else {
                        let pure = WeightSpec::block_alternating(a.clone(), b.clone())?;
                        w.prefix_product(m)?.exact / pure.prefix_product(m)?.exact
                    };
                    let beyond = kappa * if a > one { a.clone() } else { one.clone() };
                    if beyond >= sup {
                        sup = beyond;
                        where_note = String::from("beyond the table entries");
                    }
                    evidence.push(format!(
                        "ab = 1 with a ≥ b: the running exponent of a in prefix products \
                         never exceeds 1, so the sup is {} ({})",
                        format_rational(&sup),
                        where_note
                    ));
                }
                Ok(report(SalasVerdict::NotHypercyclic, evidence))
            }
        }
        Canonical::Bi { .. } => unreachable!("unilateral specs never canonicalize bilaterally"),
    }
}

fn sample_prefix(w: &WeightSpec, n: u64) -> Result<String> {
    let v = w.prefix_product(n)?;
    Ok(format!(
        "prefix product at n = {} is {}",
        n,
        format_rational(&v.exact)
    ))
}

/// Report on the criterion lim_n inf_j ∏_{i=1}^{n} α_{i+j} = ∞ with j
/// ranging over the whole ambient offset set (j ≥ 0, or j ∈ ℤ).
#[derive(Clone, Debug, Serialize)]
pub struct J0Report {
    /// does the displayed criterion hold as stated?
    pub holds: bool,
    /// true when the criterion over j ≥ 0 holds but the two-sided one fails,
    /// i.e. the verdict flips with the offset convention
    pub discrepancy: bool,
    pub evidence: Vec<String>,
    pub tool_version: &'static str,
}

/// Evaluate the full-offset growth criterion. Unilateral specs reduce to
/// `classify_unilateral`. Bilateral specs are exact: the criterion holds
/// iff both the left and the right period products exceed 1 — if either is
/// ≤ 1, for every n some rotation of a window inside that tail has product
/// ≤ 1 (the geometric mean over the rotations of a length-n periodic window
/// is the period product to the power n/L).
pub fn classify_j0(w: &WeightSpec, horizons: &Horizons) -> Result<J0Report> {
    let one = rational::int(1);
    match w.ambient() {
        Ambient::Unilateral => {
            let c = classify_unilateral(w, horizons)?;
            let holds = c.verdict == Verdict::CertifiedJClass;
            let status = match c.verdict {
                Verdict::CertifiedJClass => "holds",
                Verdict::CertifiedNotJClass => "fails",
                _ => "is undecided within the search cap",
            };
            let mut evidence = vec![format!(
                "offsets range over j ≥ 0, so the criterion coincides with the J-class \
                 classification: {status}"
            )];
            evidence.extend(c.notes);
            Ok(J0Report {
                holds,
                discrepancy: false,
                evidence,
                tool_version: TOOL_VERSION,
            })
        }
        Ambient::Bilateral => {
            let Canonical::Bi { left, right, .. } = w.canonical() else {
                unreachable!("bilateral specs canonicalize bilaterally");
            };
            let pl = product_of(&left);
            let pr = product_of(&right);
            let holds = pl > one && pr > one;
            let mut evidence = vec![format!(
                "two-sided criterion: needs both period products > 1; left is {}, right is {}",
                format_rational(&pl),
                format_rational(&pr)
            )];
            for n in 1..=4u64 {
                let inf = w.inf_window_product(n, 0)?;
                evidence.push(format!(
                    "inf over j ∈ ℤ of length-{} window products is {} (offset {})",
                    n,
                    format_rational(&inf.value.exact),
                    inf.achieved_at
                ));
            }
            let discrepancy = !holds && pr > one;
            if discrepancy {
                evidence.push(
                    "the restriction to offsets j ≥ 0 would satisfy the criterion, but \
                     offsets deep in the left tail keep the two-sided infimum small: the \
                     verdict depends on the offset convention"
                        .to_string(),
                );
            }
            Ok(J0Report {
                holds,
                discrepancy,
                evidence,
                tool_version: TOOL_VERSION,
            })
        }
    }
}
