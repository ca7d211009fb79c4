//! Weight sequences for backward shifts: finitely describable positive
//! sequences over ℕ (indices ≥ 1) or ℤ, their window products, and exact
//! infima of window products over all admissible offsets.

use std::cmp::Ordering;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, format_rational, parse_rational, Rational};

/// Index set the sequence lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    /// indices 1, 2, 3, …
    Unilateral,
    /// indices … −1, 0, 1, …
    Bilateral,
}

impl Ambient {
    pub fn name(self) -> &'static str {
        match self {
            Ambient::Unilateral => "unilateral",
            Ambient::Bilateral => "bilateral",
        }
    }

    pub(crate) fn check_index(self, index: i64) -> Result<()> {
        if self == Ambient::Unilateral && index < 1 {
            return Err(Error::IndexOutsideAmbient {
                ambient: self.name(),
                index,
            });
        }
        Ok(())
    }
}

/// How a weight sequence is generated.
#[derive(Clone, Debug, PartialEq)]
pub enum WeightForm {
    Constant(Rational),
    /// Unilateral: `prefix` then `period` cycling forever.
    EventuallyPeriodic {
        prefix: Vec<Rational>,
        period: Vec<Rational>,
    },
    /// Bilateral: explicit values on `[middle_start, middle_start + middle.len())`,
    /// `right_period` cycling upward from the end of the middle, `left_period`
    /// cycling toward −∞ (its first entry sits at `middle_start − 1`).
    TwoSidedEventuallyPeriodic {
        middle_start: i64,
        middle: Vec<Rational>,
        left_period: Vec<Rational>,
        right_period: Vec<Rational>,
    },
    /// Blocks of lengths 1, 2, 2, 3, 3, 4, 4, … with values alternating
    /// a, b, a, b, … starting with a single `a`.
    BlockAlternating {
        a: Rational,
        b: Rational,
    },
    /// Finite modification: `entries` override indices 1..=len, the tail form
    /// is evaluated unchanged everywhere else.
    Table {
        entries: Vec<Rational>,
        tail: Box<WeightForm>,
    },
}

/// A validated weight sequence over its ambient index set.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSpec {
    ambient: Ambient,
    form: WeightForm,
}

/// Exact product together with a float shadow of its base-2 logarithm.
/// The shadow is advisory: comparisons always go through `exact`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProductValue {
    #[serde(with = "rational::serde_pq")]
    pub exact: Rational,
    pub log2_approx: f64,
}

impl ProductValue {
    pub fn new(exact: Rational) -> Self {
        let log2_approx = rational::log2_approx(&exact);
        ProductValue { exact, log2_approx }
    }
}

/// Whether a reported infimum is the true infimum or only a scan minimum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    /// True infimum over every admissible offset, attained at `achieved_at`.
    Exact,
    /// Minimum over the scanned offsets only; the true infimum may be smaller.
    UpperBoundOnly,
}

/// Result of an infimum query over window products of a fixed length.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InfWindow {
    pub value: ProductValue,
    /// Offset attaining the reported value (the smallest one in the scanned
    /// range; for exact unilateral forms this is the smallest offset overall).
    pub achieved_at: i64,
    pub exactness: Exactness,
}

/// Fully resolved evaluation form: tables absorbed, constants unified.
#[derive(Clone, Debug)]
pub(crate) enum Canonical {
    Uni {
        prefix: Vec<Rational>,
        period: Vec<Rational>,
    },
    Bi {
        middle_start: i64,
        middle: Vec<Rational>,
        left: Vec<Rational>,
        right: Vec<Rational>,
    },
    Blocks {
        entries: Vec<Rational>,
        a: Rational,
        b: Rational,
    },
}

fn all_positive(values: &[Rational]) -> bool {
    use num_traits::Signed;
    values.iter().all(|v| v.is_positive())
}

fn rotate_left(values: &[Rational], by: usize) -> Vec<Rational> {
    let n = values.len();
    (0..n).map(|i| values[(i + by) % n].clone()).collect()
}

fn rem_idx(x: i64, len: usize) -> usize {
    x.rem_euclid(len as i64) as usize
}

impl WeightSpec {
    pub fn new(ambient: Ambient, form: WeightForm) -> Result<Self> {
        Self::validate(ambient, &form, false)?;
        Ok(WeightSpec { ambient, form })
    }

    fn validate(ambient: Ambient, form: &WeightForm, nested: bool) -> Result<()> {
        use num_traits::Signed;
        match form {
            WeightForm::Constant(c) => {
                if !c.is_positive() {
                    return Err(Error::InvalidSpec("weights must be positive".into()));
                }
            }
            WeightForm::EventuallyPeriodic { prefix, period } => {
                if ambient != Ambient::Unilateral {
                    return Err(Error::InvalidSpec(
                        "eventually periodic form is unilateral".into(),
                    ));
                }
                if period.is_empty() {
                    return Err(Error::InvalidSpec("period must be nonempty".into()));
                }
                if !all_positive(prefix) || !all_positive(period) {
                    return Err(Error::InvalidSpec("weights must be positive".into()));
                }
            }
            WeightForm::TwoSidedEventuallyPeriodic {
                middle,
                left_period,
                right_period,
                ..
            } => {
                if ambient != Ambient::Bilateral {
                    return Err(Error::InvalidSpec(
                        "two-sided eventually periodic form is bilateral".into(),
                    ));
                }
                if left_period.is_empty() || right_period.is_empty() {
                    return Err(Error::InvalidSpec("periods must be nonempty".into()));
                }
                if !all_positive(middle)
                    || !all_positive(left_period)
                    || !all_positive(right_period)
                {
                    return Err(Error::InvalidSpec("weights must be positive".into()));
                }
            }
            WeightForm::BlockAlternating { a, b } => {
                if ambient != Ambient::Unilateral {
                    return Err(Error::InvalidSpec(
                        "block alternating form is unilateral".into(),
                    ));
                }
                if !a.is_positive() || !b.is_positive() {
                    return Err(Error::InvalidSpec("weights must be positive".into()));
                }
            }
            WeightForm::Table { entries, tail } => {
                if nested {
                    return Err(Error::InvalidSpec(
                        "table tails may not themselves be tables".into(),
                    ));
                }
                if !all_positive(entries) {
                    return Err(Error::InvalidSpec("weights must be positive".into()));
                }
                Self::validate(ambient, tail, true)?;
            }
        }
        Ok(())
    }

    pub fn constant(ambient: Ambient, c: Rational) -> Result<Self> {
        Self::new(ambient, WeightForm::Constant(c))
    }

    pub fn eventually_periodic(prefix: Vec<Rational>, period: Vec<Rational>) -> Result<Self> {
        Self::new(
            Ambient::Unilateral,
            WeightForm::EventuallyPeriodic { prefix, period },
        )
    }

    pub fn two_sided(
        middle_start: i64,
        middle: Vec<Rational>,
        left_period: Vec<Rational>,
        right_period: Vec<Rational>,
    ) -> Result<Self> {
        Self::new(
            Ambient::Bilateral,
            WeightForm::TwoSidedEventuallyPeriodic {
                middle_start,
                middle,
                left_period,
                right_period,
            },
        )
    }

    pub fn block_alternating(a: Rational, b: Rational) -> Result<Self> {
        Self::new(Ambient::Unilateral, WeightForm::BlockAlternating { a, b })
    }

    pub fn table(ambient: Ambient, entries: Vec<Rational>, tail: WeightForm) -> Result<Self> {
        Self::new(
            ambient,
            WeightForm::Table {
                entries,
                tail: Box::new(tail),
            },
        )
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn form(&self) -> &WeightForm {
        &self.form
    }

    pub(crate) fn canonical(&self) -> Canonical {
        canonicalize(self.ambient, &self.form)
    }

    /// Weight at an index of the ambient set.
    pub fn weight_at(&self, index: i64) -> Result<Rational> {
        self.ambient.check_index(index)?;
        Ok(canonical_weight_at(&self.canonical(), index))
    }

    /// ∏_{i=1}^{n} α_{i+offset}; every touched index must lie in the ambient set.
    pub fn window_product(&self, offset: i64, n: u64) -> Result<ProductValue> {
        if n == 0 {
            return Err(Error::EmptyWindow);
        }
        // fail fast on the lowest index for unilateral ambients
        self.ambient.check_index(offset + 1)?;
        let canon = self.canonical();
        let mut acc = rational::int(1);
        for i in 1..=n as i64 {
            acc *= canonical_weight_at(&canon, offset + i);
        }
        Ok(ProductValue::new(acc))
    }

    /// ∏_{i=1}^{n} α_i — unilateral only.
    pub fn prefix_product(&self, n: u64) -> Result<ProductValue> {
        if self.ambient != Ambient::Unilateral {
            return Err(Error::RequiresUnilateral);
        }
        self.window_product(0, n)
    }

    /// sup of the weight sequence — exact, since every form takes finitely
    /// many values.
    pub fn operator_norm(&self) -> Rational {
        self.extremum(Ordering::Greater)
    }

    /// inf of the weight sequence — exact, and strictly positive.
    pub fn weight_inf(&self) -> Rational {
        self.extremum(Ordering::Less)
    }

    fn extremum(&self, pick: Ordering) -> Rational {
        let keep = |best: &mut Rational, v: &Rational| {
            if v.cmp(best) == pick {
                *best = v.clone();
            }
        };
        match self.canonical() {
            Canonical::Uni { prefix, period } => {
                let mut best = period[0].clone();
                for v in prefix.iter().chain(period.iter()) {
                    keep(&mut best, v);
                }
                best
            }
            Canonical::Bi {
                middle,
                left,
                right,
                ..
            } => {
                let mut best = left[0].clone();
                for v in middle.iter().chain(left.iter()).chain(right.iter()) {
                    keep(&mut best, v);
                }
                best
            }
            Canonical::Blocks { entries, a, b } => {
                let mut best = a.clone();
                keep(&mut best, &b);
                for v in &entries {
                    keep(&mut best, v);
                }
                best
            }
        }
    }

    /// Infimum of length-`n` window products over admissible offsets.
    ///
    /// For constant and eventually periodic forms (including tables over
    /// them) the result is the true infimum, attained at `achieved_at`: past
    /// the aperiodic part a window product depends only on the offset's
    /// residue, so scanning the aperiodic offsets plus one full period
    /// exhausts all values. For block generators the result is the minimum
    /// over offsets `0..=horizon` only and is flagged `UpperBoundOnly`.
    pub fn inf_window_product(&self, n: u64, horizon: i64) -> Result<InfWindow> {
        if n == 0 {
            return Err(Error::EmptyWindow);
        }
        if horizon < 0 {
            return Err(Error::NegativeHorizon(horizon));
        }
        let canon = self.canonical();
        let (offsets, exactness): (Vec<i64>, Exactness) = match &canon {
            Canonical::Uni { prefix, period } => (
                (0..(prefix.len() + period.len()) as i64).collect(),
                Exactness::Exact,
            ),
            Canonical::Bi {
                middle_start,
                middle,
                left,
                right,
            } => {
                let right_start = middle_start + middle.len() as i64;
                let lo = middle_start - n as i64 - left.len() as i64;
                let hi = right_start + right.len() as i64 - 2;
                ((lo..=hi).collect(), Exactness::Exact)
            }
            Canonical::Blocks { .. } => ((0..=horizon).collect(), Exactness::UpperBoundOnly),
        };
        let mut best: Option<(Rational, i64)> = None;
        for j in offsets {
            let mut acc = rational::int(1);
            for i in 1..=n as i64 {
                acc *= canonical_weight_at(&canon, j + i);
            }
            match &best {
                Some((min, _)) if &acc >= min => {}
                _ => best = Some((acc, j)),
            }
        }
        let (value, achieved_at) = best.expect("offset scan is nonempty");
        Ok(InfWindow {
            value: ProductValue::new(value),
            achieved_at,
            exactness,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("weight spec serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("weight spec: {e}")))
    }
}

fn canonicalize(ambient: Ambient, form: &WeightForm) -> Canonical {
    match form {
        WeightForm::Constant(c) => match ambient {
            Ambient::Unilateral => Canonical::Uni {
                prefix: vec![],
                period: vec![c.clone()],
            },
            Ambient::Bilateral => Canonical::Bi {
                middle_start: 1,
                middle: vec![],
                left: vec![c.clone()],
                right: vec![c.clone()],
            },
        },
        WeightForm::EventuallyPeriodic { prefix, period } => Canonical::Uni {
            prefix: prefix.clone(),
            period: period.clone(),
        },
        WeightForm::TwoSidedEventuallyPeriodic {
            middle_start,
            middle,
            left_period,
            right_period,
        } => Canonical::Bi {
            middle_start: *middle_start,
            middle: middle.clone(),
            left: left_period.clone(),
            right: right_period.clone(),
        },
        WeightForm::BlockAlternating { a, b } => Canonical::Blocks {
            entries: vec![],
            a: a.clone(),
            b: b.clone(),
        },
        WeightForm::Table { entries, tail } => absorb_table(entries, canonicalize(ambient, tail)),
    }
}

/// Fold explicit overrides of indices 1..=len into the tail's canonical form.
fn absorb_table(entries: &[Rational], tail: Canonical) -> Canonical {
    if entries.is_empty() {
        return tail;
    }
    let m = entries.len();
    match tail {
        Canonical::Uni { prefix, period } => {
            if m <= prefix.len() {
                let mut new_prefix = entries.to_vec();
                new_prefix.extend_from_slice(&prefix[m..]);
                Canonical::Uni {
                    prefix: new_prefix,
                    period,
                }
            } else {
                // the period's phase at index m+1 shifts by m − |prefix|
                let by = (m - prefix.len()) % period.len();
                Canonical::Uni {
                    prefix: entries.to_vec(),
                    period: rotate_left(&period, by),
                }
            }
        }
        Canonical::Bi {
            middle_start,
            middle,
            left,
            right,
        } => {
            let right_start = middle_start + middle.len() as i64;
            let hull_start = middle_start.min(1);
            let hull_end = (right_start - 1).max(m as i64);
            let tail_canon = Canonical::Bi {
                middle_start,
                middle,
                left: left.clone(),
                right: right.clone(),
            };
            let new_middle = (hull_start..=hull_end)
                .map(|idx| {
                    if idx >= 1 && idx <= m as i64 {
                        entries[(idx - 1) as usize].clone()
                    } else {
                        canonical_weight_at(&tail_canon, idx)
                    }
                })
                .collect();
            let left_shift = rem_idx(middle_start - hull_start, left.len());
            let right_shift = rem_idx(hull_end + 1 - right_start, right.len());
            Canonical::Bi {
                middle_start: hull_start,
                middle: new_middle,
                left: rotate_left(&left, left_shift),
                right: rotate_left(&right, right_shift),
            }
        }
        Canonical::Blocks {
            entries: tail_entries,
            a,
            b,
        } => {
            let len = m.max(tail_entries.len());
            let blocks = Canonical::Blocks {
                entries: vec![],
                a: a.clone(),
                b: b.clone(),
            };
            let merged = (1..=len)
                .map(|idx| {
                    if idx <= m {
                        entries[idx - 1].clone()
                    } else if idx <= tail_entries.len() {
                        tail_entries[idx - 1].clone()
                    } else {
                        canonical_weight_at(&blocks, idx as i64)
                    }
                })
                .collect();
            Canonical::Blocks {
                entries: merged,
                a,
                b,
            }
        }
    }
}

fn canonical_weight_at(canon: &Canonical, index: i64) -> Rational {
    match canon {
        Canonical::Uni { prefix, period } => {
            debug_assert!(index >= 1);
            let pos = (index - 1) as usize;
            if pos < prefix.len() {
                prefix[pos].clone()
            } else {
                period[(pos - prefix.len()) % period.len()].clone()
            }
        }
        Canonical::Bi {
            middle_start,
            middle,
            left,
            right,
        } => {
            let right_start = middle_start + middle.len() as i64;
            if index >= right_start {
                right[rem_idx(index - right_start, right.len())].clone()
            } else if index >= *middle_start {
                middle[(index - middle_start) as usize].clone()
            } else {
                left[rem_idx(middle_start - 1 - index, left.len())].clone()
            }
        }
        Canonical::Blocks { entries, a, b } => {
            debug_assert!(index >= 1);
            let pos = index as u64;
            if pos <= entries.len() as u64 {
                entries[(pos - 1) as usize].clone()
            } else if block_index(pos) % 2 == 1 {
                a.clone()
            } else {
                b.clone()
            }
        }
    }
}

/// First position (1-based) of block `k` in the 1, 2, 2, 3, 3, 4, 4, … layout.
pub(crate) fn block_start(k: u64) -> u64 {
    // lengths sum to (k−1) + ⌊(k−1)²/4⌋ over blocks 1..k
    1 + (k - 1) + (k - 1) * (k - 1) / 4
}

/// Length of block `k`: 1, 2, 2, 3, 3, 4, 4, …
#[cfg(test)]
pub(crate) fn block_len(k: u64) -> u64 {
    k / 2 + 1
}

/// Index of the block containing position `pos` (1-based).
pub(crate) fn block_index(pos: u64) -> u64 {
    debug_assert!(pos >= 1);
    let mut hi = 1u64;
    while block_start(hi + 1) <= pos {
        hi *= 2;
    }
    let mut lo = 1u64;
    // largest k with block_start(k) <= pos
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        if block_start(mid) <= pos {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// First position strictly beyond `beyond` where a run of at least `n`
/// consecutive `a`s (odd blocks) or `b`s (even blocks) begins.
pub(crate) fn first_run_start(letter_a: bool, n: u64, beyond: u64) -> u64 {
    debug_assert!(n >= 1);
    if letter_a {
        // a-blocks are blocks 2r−1 of length r starting at r²
        let r = n.max(beyond.isqrt() + 1);
        r * r
    } else {
        // b-blocks are blocks 2r of length r+1 starting at r²+r
        let r = n.saturating_sub(1).max(1).max(beyond.isqrt() + 1);
        r * r + r
    }
}

// --- serialization -----------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(tag = "form", content = "parameters", rename_all = "snake_case")]
enum FormDto {
    Constant {
        c: String,
    },
    EventuallyPeriodic {
        prefix: Vec<String>,
        period: Vec<String>,
    },
    TwoSidedEventuallyPeriodic {
        middle_start: i64,
        middle: Vec<String>,
        left_period: Vec<String>,
        right_period: Vec<String>,
    },
    BlockAlternating {
        a: String,
        b: String,
    },
    Table {
        entries: Vec<String>,
        tail: Box<FormDto>,
    },
}

#[derive(Serialize, Deserialize)]
struct WeightSpecDto {
    ambient: Ambient,
    #[serde(flatten)]
    form: FormDto,
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

fn rationals(values: &[String]) -> Result<Vec<Rational>> {
    values.iter().map(|s| parse_rational(s)).collect()
}

fn form_to_dto(form: &WeightForm) -> FormDto {
    match form {
        WeightForm::Constant(c) => FormDto::Constant {
            c: format_rational(c),
        },
        WeightForm::EventuallyPeriodic { prefix, period } => FormDto::EventuallyPeriodic {
            prefix: strings(prefix),
            period: strings(period),
        },
        WeightForm::TwoSidedEventuallyPeriodic {
            middle_start,
            middle,
            left_period,
            right_period,
        } => FormDto::TwoSidedEventuallyPeriodic {
            middle_start: *middle_start,
            middle: strings(middle),
            left_period: strings(left_period),
            right_period: strings(right_period),
        },
        WeightForm::BlockAlternating { a, b } => FormDto::BlockAlternating {
            a: format_rational(a),
            b: format_rational(b),
        },
        WeightForm::Table { entries, tail } => FormDto::Table {
            entries: strings(entries),
            tail: Box::new(form_to_dto(tail)),
        },
    }
}

fn form_from_dto(dto: &FormDto) -> Result<WeightForm> {
    Ok(match dto {
        FormDto::Constant { c } => WeightForm::Constant(parse_rational(c)?),
        FormDto::EventuallyPeriodic { prefix, period } => WeightForm::EventuallyPeriodic {
            prefix: rationals(prefix)?,
            period: rationals(period)?,
        },
        FormDto::TwoSidedEventuallyPeriodic {
            middle_start,
            middle,
            left_period,
            right_period,
        } => WeightForm::TwoSidedEventuallyPeriodic {
            middle_start: *middle_start,
            middle: rationals(middle)?,
            left_period: rationals(left_period)?,
            right_period: rationals(right_period)?,
        },
        FormDto::BlockAlternating { a, b } => WeightForm::BlockAlternating {
            a: parse_rational(a)?,
            b: parse_rational(b)?,
        },
        FormDto::Table { entries, tail } => WeightForm::Table {
            entries: rationals(entries)?,
            tail: Box::new(form_from_dto(tail)?),
        },
    })
}

impl Serialize for WeightSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeightSpecDto {
            ambient: self.ambient,
            form: form_to_dto(&self.form),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = WeightSpecDto::deserialize(d)?;
        let form = form_from_dto(&dto.form).map_err(de::Error::custom)?;
        WeightSpec::new(dto.ambient, form).map_err(de::Error::custom)
    }
}
