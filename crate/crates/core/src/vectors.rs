//! Exact finitely-described vectors in the bounded sequence spaces and exact
//! application of powers of the weighted backward shift.
//!
//! Norm decisions are made on squared moduli, which are rational, so no
//! square roots are ever needed for a comparison.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, format_rational, parse_rational, to_f64_lossy, Rational};
use crate::weights::{Ambient, WeightSpec};

/// Complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        ComplexRational {
            re,
            im: rational::int(0),
        }
    }

    pub fn zero() -> Self {
        Self::real(rational::int(0))
    }

    pub fn one() -> Self {
        Self::real(rational::int(1))
    }

    pub fn is_zero(&self) -> bool {
        use num_traits::Zero;
        self.re.is_zero() && self.im.is_zero()
    }

    /// re² + im² — exact, the basis of every norm comparison.
    pub fn modulus_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, t: &Rational) -> Self {
        ComplexRational {
            re: &self.re * t,
            im: &self.im * t,
        }
    }
}

impl Add for ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: ComplexRational) -> ComplexRational {
        ComplexRational {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: ComplexRational) -> ComplexRational {
        ComplexRational {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Neg for ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

/// Finitely supported vector; absent indices are 0, stored entries nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteVector {
    ambient: Ambient,
    entries: BTreeMap<i64, ComplexRational>,
}

impl FiniteVector {
    pub fn new(ambient: Ambient, pairs: Vec<(i64, ComplexRational)>) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (idx, value) in pairs {
            ambient.check_index(idx)?;
            if !value.is_zero() {
                if entries.insert(idx, value).is_some() {
                    return Err(Error::InvalidVector(format!("duplicate index {idx}")));
                }
            }
        }
        Ok(FiniteVector { ambient, entries })
    }

    pub fn zero(ambient: Ambient) -> Self {
        FiniteVector {
            ambient,
            entries: BTreeMap::new(),
        }
    }

    /// The standard basis vector e_index.
    pub fn unit(ambient: Ambient, index: i64) -> Result<Self> {
        Self::new(ambient, vec![(index, ComplexRational::one())])
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coordinate(&self, index: i64) -> Result<ComplexRational> {
        self.ambient.check_index(index)?;
        Ok(self
            .entries
            .get(&index)
            .cloned()
            .unwrap_or_else(ComplexRational::zero))
    }

    pub fn support_max(&self) -> Option<i64> {
        self.entries.keys().next_back().copied()
    }

    pub fn support_min(&self) -> Option<i64> {
        self.entries.keys().next().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &ComplexRational)> {
        self.entries.iter()
    }

    pub fn scale(&self, t: &Rational) -> Self {
        use num_traits::Zero;
        if t.is_zero() {
            return FiniteVector::zero(self.ambient);
        }
        FiniteVector {
            ambient: self.ambient,
            entries: self.entries.iter().map(|(k, v)| (*k, v.scale(t))).collect(),
        }
    }

    pub fn add(&self, other: &FiniteVector) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        let mut entries = self.entries.clone();
        for (k, v) in &other.entries {
            let sum = entries.remove(k).unwrap_or_else(ComplexRational::zero) + v.clone();
            if !sum.is_zero() {
                entries.insert(*k, sum);
            }
        }
        Ok(FiniteVector {
            ambient: self.ambient,
            entries,
        })
    }

    pub fn sub(&self, other: &FiniteVector) -> Result<Self> {
        self.add(&other.scale(&rational::int(-1)))
    }
}

/// Constant value on every index ≤ `end` of a bilateral vector.
#[derive(Clone, Debug, PartialEq)]
pub struct LeftTail {
    pub end: i64,
    pub value: ComplexRational,
}

/// Vector that is eventually constant: explicit finite window, constant
/// `tail_value` from `tail_start` on, and (bilateral only) an optional
/// constant left tail. Indices described by neither part are 0.
#[derive(Clone, Debug, PartialEq)]
pub struct TailConstantVector {
    ambient: Ambient,
    window: BTreeMap<i64, ComplexRational>,
    tail_start: i64,
    tail_value: ComplexRational,
    left: Option<LeftTail>,
}

impl TailConstantVector {
    pub fn new(
        ambient: Ambient,
        window: Vec<(i64, ComplexRational)>,
        tail_start: i64,
        tail_value: ComplexRational,
        left: Option<LeftTail>,
    ) -> Result<Self> {
        ambient.check_index(tail_start)?;
        if left.is_some() && ambient == Ambient::Unilateral {
            return Err(Error::InvalidVector(
                "left tails require a bilateral ambient".into(),
            ));
        }
        if let Some(l) = &left {
            if l.end >= tail_start {
                return Err(Error::InvalidVector(
                    "left tail must end before the right tail starts".into(),
                ));
            }
        }
        let mut map = BTreeMap::new();
        for (idx, value) in window {
            ambient.check_index(idx)?;
            if idx >= tail_start {
                return Err(Error::InvalidVector(format!(
                    "window index {idx} not below tail start {tail_start}"
                )));
            }
            if let Some(l) = &left {
                if idx <= l.end {
                    return Err(Error::InvalidVector(format!(
                        "window index {idx} inside the left tail"
                    )));
                }
            }
            if !value.is_zero() {
                if map.insert(idx, value).is_some() {
                    return Err(Error::InvalidVector(format!("duplicate index {idx}")));
                }
            }
        }
        Ok(TailConstantVector {
            ambient,
            window: map,
            tail_start,
            tail_value,
            left,
        })
    }

    /// The unilateral vector (c, c, c, …).
    pub fn constant(c: ComplexRational) -> Self {
        TailConstantVector {
            ambient: Ambient::Unilateral,
            window: BTreeMap::new(),
            tail_start: 1,
            tail_value: c,
            left: None,
        }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn tail_start(&self) -> i64 {
        self.tail_start
    }

    pub fn tail_value(&self) -> &ComplexRational {
        &self.tail_value
    }

    pub fn left(&self) -> Option<&LeftTail> {
        self.left.as_ref()
    }

    pub fn coordinate(&self, index: i64) -> Result<ComplexRational> {
        self.ambient.check_index(index)?;
        if index >= self.tail_start {
            return Ok(self.tail_value.clone());
        }
        if let Some(l) = &self.left {
            if index <= l.end {
                return Ok(l.value.clone());
            }
        }
        Ok(self
            .window
            .get(&index)
            .cloned()
            .unwrap_or_else(ComplexRational::zero))
    }
}

/// Any finitely described vector handled by this crate.
#[derive(Clone, Debug, PartialEq)]
pub enum Vector {
    Finite(FiniteVector),
    TailConstant(TailConstantVector),
}

impl From<FiniteVector> for Vector {
    fn from(v: FiniteVector) -> Vector {
        Vector::Finite(v)
    }
}

impl From<TailConstantVector> for Vector {
    fn from(v: TailConstantVector) -> Vector {
        Vector::TailConstant(v)
    }
}

impl Vector {
    pub fn ambient(&self) -> Ambient {
        match self {
            Vector::Finite(v) => v.ambient(),
            Vector::TailConstant(v) => v.ambient(),
        }
    }

    pub fn coordinate(&self, index: i64) -> Result<ComplexRational> {
        match self {
            Vector::Finite(v) => v.coordinate(index),
            Vector::TailConstant(v) => v.coordinate(index),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("vector serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("vector: {e}")))
    }
}

/// Exact squared sup-norm plus a float rendering (never fed back into logic).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SupNorm {
    #[serde(with = "rational::serde_pq")]
    pub value_sq: Rational,
    pub value: f64,
}

impl SupNorm {
    fn from_sq(value_sq: Rational) -> Self {
        let value = to_f64_lossy(&value_sq).sqrt();
        SupNorm { value_sq, value }
    }
}

/// (T^n x)_k = (∏_{i=1}^{n} α_{k+i−1}) · x_{k+n}; n = 0 is the identity.
pub fn apply_shift(w: &WeightSpec, x: &FiniteVector, n: u64) -> Result<FiniteVector> {
    if w.ambient() != x.ambient() {
        return Err(Error::AmbientMismatch);
    }
    if n == 0 {
        return Ok(x.clone());
    }
    let mut pairs = Vec::new();
    for (&idx, value) in x.iter() {
        let k = idx - n as i64;
        if x.ambient() == Ambient::Unilateral && k < 1 {
            continue;
        }
        let coeff = w.window_product(k - 1, n)?.exact;
        pairs.push((k, value.scale(&coeff)));
    }
    FiniteVector::new(x.ambient(), pairs)
}

fn fold_max(best: &mut Rational, candidate: Rational) {
    if candidate > *best {
        *best = candidate;
    }
}

/// Exact sup of coordinate moduli.
pub fn sup_norm(v: &Vector) -> SupNorm {
    let mut best = rational::int(0);
    match v {
        Vector::Finite(x) => {
            for (_, value) in x.iter() {
                fold_max(&mut best, value.modulus_sq());
            }
        }
        Vector::TailConstant(x) => {
            for value in x.window.values() {
                fold_max(&mut best, value.modulus_sq());
            }
            fold_max(&mut best, x.tail_value.modulus_sq());
            if let Some(l) = &x.left {
                fold_max(&mut best, l.value.modulus_sq());
            }
        }
    }
    SupNorm::from_sq(best)
}

/// Does the (unilateral) vector converge to 0 coordinate-wise?
pub fn is_c0(v: &Vector) -> Result<bool> {
    if v.ambient() != Ambient::Unilateral {
        return Err(Error::RequiresUnilateral);
    }
    Ok(match v {
        Vector::Finite(_) => true,
        Vector::TailConstant(x) => x.tail_value.is_zero(),
    })
}

/// Exact ℓ∞ distance between two finitely described vectors.
///
/// Both representations are piecewise constant away from finitely many
/// marker indices (window keys and tail boundaries), so the sup of the
/// difference is attained on the markers, their neighbors, and one
/// representative per unbounded tail region — a finite candidate set.
pub fn distance_sup(x: &Vector, y: &Vector) -> Result<SupNorm> {
    if x.ambient() != y.ambient() {
        return Err(Error::AmbientMismatch);
    }
    let ambient = x.ambient();
    let mut markers: Vec<i64> = Vec::new();
    let mut collect = |v: &Vector| match v {
        Vector::Finite(f) => {
            markers.extend(f.entries.keys().copied());
        }
        Vector::TailConstant(t) => {
            markers.extend(t.window.keys().copied());
            markers.push(t.tail_start);
            if let Some(l) = &t.left {
                markers.push(l.end);
            }
        }
    };
    collect(x);
    collect(y);
    let mut candidates: Vec<i64> = Vec::with_capacity(3 * markers.len() + 1);
    for &m in &markers {
        candidates.extend([m - 1, m, m + 1]);
    }
    candidates.push(match ambient {
        Ambient::Unilateral => 1,
        Ambient::Bilateral => 0,
    });
    candidates.sort_unstable();
    candidates.dedup();
    let mut best = rational::int(0);
    for k in candidates {
        if ambient == Ambient::Unilateral && k < 1 {
            continue;
        }
        let diff = x.coordinate(k)? - y.coordinate(k)?;
        fold_max(&mut best, diff.modulus_sq());
    }
    Ok(SupNorm::from_sq(best))
}

// --- serialization -----------------------------------------------------

type EntryDto = (i64, String, String);

#[derive(Serialize, Deserialize)]
struct LeftDto {
    end: i64,
    value: (String, String),
}

#[derive(Serialize, Deserialize)]
struct TailDto {
    start: i64,
    value: (String, String),
    #[serde(skip_serializing_if = "Option::is_none")]
    left: Option<LeftDto>,
}

#[derive(Serialize, Deserialize)]
struct VectorDto {
    ambient: Ambient,
    entries: Vec<EntryDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tail: Option<TailDto>,
}

fn complex_out(v: &ComplexRational) -> (String, String) {
    (format_rational(&v.re), format_rational(&v.im))
}

fn complex_in(re: &str, im: &str) -> Result<ComplexRational> {
    Ok(ComplexRational::new(
        parse_rational(re)?,
        parse_rational(im)?,
    ))
}

fn entries_out(map: &BTreeMap<i64, ComplexRational>) -> Vec<EntryDto> {
    map.iter()
        .map(|(k, v)| {
            let (re, im) = complex_out(v);
            (*k, re, im)
        })
        .collect()
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let dto = match self {
            Vector::Finite(v) => VectorDto {
                ambient: v.ambient,
                entries: entries_out(&v.entries),
                tail: None,
            },
            Vector::TailConstant(v) => VectorDto {
                ambient: v.ambient,
                entries: entries_out(&v.window),
                tail: Some(TailDto {
                    start: v.tail_start,
                    value: complex_out(&v.tail_value),
                    left: v.left.as_ref().map(|l| LeftDto {
                        end: l.end,
                        value: complex_out(&l.value),
                    }),
                }),
            },
        };
        dto.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = VectorDto::deserialize(d)?;
        let entries: Result<Vec<(i64, ComplexRational)>> = dto
            .entries
            .iter()
            .map(|(k, re, im)| Ok((*k, complex_in(re, im)?)))
            .collect();
        let entries = entries.map_err(de::Error::custom)?;
        let v = match dto.tail {
            None => {
                Vector::Finite(FiniteVector::new(dto.ambient, entries).map_err(de::Error::custom)?)
            }
            Some(t) => {
                let left = match t.left {
                    None => None,
                    Some(l) => Some(LeftTail {
                        end: l.end,
                        value: complex_in(&l.value.0, &l.value.1).map_err(de::Error::custom)?,
                    }),
                };
                Vector::TailConstant(
                    TailConstantVector::new(
                        dto.ambient,
                        entries,
                        t.start,
                        complex_in(&t.value.0, &t.value.1).map_err(de::Error::custom)?,
                        left,
                    )
                    .map_err(de::Error::custom)?,
                )
            }
        };
        Ok(v)
    }
}
