//! Numerical probes: closed-form evaluation of the smallest window error
//! achievable under a sup-norm perturbation budget, and of the smallest
//! preimage norm forcing a target within tolerance. Sweeps over shift powers
//! produce CSV/JSON reports and can fan out across threads.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, format_rational, sqrt_exact, to_f64_lossy, Rational};
use crate::vectors::{FiniteVector, Vector};
use crate::weights::{Ambient, WeightSpec};

/// Largest probe window; keeps sweeps O(window · powers).
const WINDOW_CAP: i64 = 100_000;

/// A probe value: exact rational when the optimum is one, otherwise a float
/// (a coordinate modulus √(p/q) need not be rational).
#[derive(Clone, Debug, PartialEq)]
pub enum ErrorValue {
    Exact(Rational),
    Approx(f64),
}

impl ErrorValue {
    pub fn as_f64(&self) -> f64 {
        match self {
            ErrorValue::Exact(r) => to_f64_lossy(r),
            ErrorValue::Approx(f) => *f,
        }
    }

    fn gt(&self, other: &ErrorValue) -> bool {
        match (self, other) {
            (ErrorValue::Exact(a), ErrorValue::Exact(b)) => a > b,
            _ => self.as_f64() > other.as_f64(),
        }
    }

    pub fn display(&self) -> String {
        match self {
            ErrorValue::Exact(r) => format_rational(r),
            ErrorValue::Approx(f) => format!("{f}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeRow {
    pub n: u64,
    pub min_error: ErrorValue,
    /// window coordinate where the reported optimum binds (smallest on ties);
    /// absent when the window contains no admissible index
    pub argmin_k: Option<i64>,
    /// every candidate along the window was evaluated exactly
    pub exact: bool,
}

impl Serialize for ProbeRow {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut row = s.serialize_struct("ProbeRow", 5)?;
        row.serialize_field("n", &self.n)?;
        row.serialize_field("min_error", &self.min_error.display())?;
        row.serialize_field("min_error_float", &self.min_error.as_f64())?;
        row.serialize_field("argmin_k", &self.argmin_k)?;
        row.serialize_field("exact", &self.exact)?;
        row.end()
    }
}

/// What a sweep measures.
#[derive(Clone, Debug)]
pub enum ProbeKind {
    /// smallest window error of T^n(x + perturbation) against y, over
    /// perturbations of sup norm ≤ δ
    WindowError { x: FiniteVector, delta: Rational },
    /// smallest sup norm of any z with (T^n z)_k within tol of y_k on the window
    PreimageNorm { tol: Rational },
}

#[derive(Clone, Debug)]
pub struct ProbeQuery {
    pub weights: WeightSpec,
    pub y: Vector,
    pub kind: ProbeKind,
    /// inclusive index interval the error is measured on
    pub window: (i64, i64),
    /// inclusive power range; empty when from > to
    pub n_range: (u64, u64),
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub mode: String,
    /// δ or tol, as an exact rational
    pub parameter: String,
    pub window: (i64, i64),
    pub rows: Vec<ProbeRow>,
}

impl ProbeReport {
    /// CSV with the fixed header `n,min_error,argmin_k,exact`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,min_error,argmin_k,exact\n");
        for row in &self.rows {
            let k = row.argmin_k.map(|k| k.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{}\n",
                row.n,
                row.min_error.display(),
                k,
                row.exact
            ));
        }
        out
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

struct Fold {
    best: Option<(ErrorValue, i64)>,
    all_exact: bool,
}

impl Fold {
    fn new() -> Self {
        Fold {
            best: None,
            all_exact: true,
        }
    }

    fn push(&mut self, k: i64, value: ErrorValue) {
        if matches!(value, ErrorValue::Approx(_)) {
            self.all_exact = false;
        }
        match &self.best {
            Some((b, _)) if !value.gt(b) => {}
            _ => self.best = Some((value, k)),
        }
    }

    fn finish(self, n: u64) -> ProbeRow {
        match self.best {
            Some((min_error, k)) => ProbeRow {
                n,
                min_error,
                argmin_k: Some(k),
                exact: self.all_exact,
            },
            None => ProbeRow {
                n,
                min_error: ErrorValue::Exact(rational::int(0)),
                argmin_k: None,
                exact: true,
            },
        }
    }
}

/// max(0, √s − t) as an ErrorValue, for s ≥ 0 (a squared modulus) and t ≥ 0.
fn clipped_sqrt_minus(s: &Rational, t: &Rational) -> ErrorValue {
    if *s <= t * t {
        return ErrorValue::Exact(rational::int(0));
    }
    match sqrt_exact(s) {
        Some(r) => ErrorValue::Exact(r - t),
        // s > t² exactly, so clamp any float cancellation at zero
        None => ErrorValue::Approx((to_f64_lossy(s).sqrt() - to_f64_lossy(t)).max(0.0)),
    }
}

/// coefficient of coordinate k+n in (T^n z)_k; the empty product at n = 0
/// is 1, stated explicitly rather than inferred
fn coefficient(w: &WeightSpec, k: i64, n: u64) -> Result<Rational> {
    if n == 0 {
        Ok(rational::int(1))
    } else {
        Ok(w.window_product(k - 1, n)?.exact)
    }
}

fn window_indices(w: &WeightSpec, window: (i64, i64)) -> Result<std::ops::RangeInclusive<i64>> {
    let (lo, hi) = window;
    if lo > hi {
        return Err(Error::Domain(format!("window {lo}..={hi} is reversed")));
    }
    if hi - lo > WINDOW_CAP {
        return Err(Error::UnsupportedRepresentation(format!(
            "window {lo}..={hi} exceeds the probe cap {WINDOW_CAP}"
        )));
    }
    let lo = match w.ambient() {
        Ambient::Unilateral => lo.max(1),
        Ambient::Bilateral => lo,
    };
    Ok(lo..=hi)
}

/// Smallest achievable max_k |y_k − (T^n(x+p))_k| over the window, across
/// perturbations p with sup norm ≤ δ. Coordinates are independent, so the
/// optimum is max_k max(0, |y_k − c_k·x_{k+n}| − c_k·δ) with c_k the window
/// product feeding coordinate k.
pub fn min_window_error(
    w: &WeightSpec,
    x: &FiniteVector,
    y: &Vector,
    n: u64,
    window: (i64, i64),
    delta: &Rational,
) -> Result<ProbeRow> {
    use num_traits::Signed;
    if x.ambient() != w.ambient() || y.ambient() != w.ambient() {
        return Err(Error::AmbientMismatch);
    }
    if delta.is_negative() {
        return Err(Error::Domain("δ must be nonnegative".into()));
    }
    let mut fold = Fold::new();
    for k in window_indices(w, window)? {
        let c = coefficient(w, k, n)?;
        let reachable = x.coordinate(k + n as i64)?.scale(&c);
        let s = (y.coordinate(k)? - reachable).modulus_sq();
        fold.push(k, clipped_sqrt_minus(&s, &(&c * delta)));
    }
    Ok(fold.finish(n))
}

/// Smallest sup norm of any z with |(T^n z)_k − y_k| ≤ tol on the window:
/// coordinate k forces |z_{k+n}| ≥ max(0, |y_k| − tol)/c_k and the bound is
/// attained.
pub fn min_preimage_norm(
    w: &WeightSpec,
    y: &Vector,
    n: u64,
    window: (i64, i64),
    tol: &Rational,
) -> Result<ProbeRow> {
    use num_traits::Signed;
    if y.ambient() != w.ambient() {
        return Err(Error::AmbientMismatch);
    }
    if tol.is_negative() {
        return Err(Error::Domain("tol must be nonnegative".into()));
    }
    let mut fold = Fold::new();
    for k in window_indices(w, window)? {
        let c = coefficient(w, k, n)?;
        let s = y.coordinate(k)?.modulus_sq();
        let clipped = clipped_sqrt_minus(&s, tol);
        let value = match clipped {
            ErrorValue::Exact(r) => ErrorValue::Exact(r / &c),
            ErrorValue::Approx(f) => ErrorValue::Approx(f / to_f64_lossy(&c)),
        };
        fold.push(k, value);
    }
    Ok(fold.finish(n))
}

fn row_for(q: &ProbeQuery, n: u64) -> Result<ProbeRow> {
    match &q.kind {
        ProbeKind::WindowError { x, delta } => {
            min_window_error(&q.weights, x, &q.y, n, q.window, delta)
        }
        ProbeKind::PreimageNorm { tol } => min_preimage_norm(&q.weights, &q.y, n, q.window, tol),
    }
}

fn report_shell(q: &ProbeQuery) -> ProbeReport {
    let (mode, parameter) = match &q.kind {
        ProbeKind::WindowError { delta, .. } => ("window_error", format_rational(delta)),
        ProbeKind::PreimageNorm { tol } => ("preimage_norm", format_rational(tol)),
    };
    ProbeReport {
        mode: mode.into(),
        parameter,
        window: q.window,
        rows: Vec::new(),
    }
}

/// Evaluate the sweep over the power range, in order.
pub fn probe_sweep(q: &ProbeQuery) -> Result<ProbeReport> {
    let mut report = report_shell(q);
    let (from, to) = q.n_range;
    if from <= to {
        for n in from..=to {
            report.rows.push(row_for(q, n)?);
        }
    }
    Ok(report)
}

/// Same sweep fanned out over `threads` scoped workers. Rows are assembled
/// in power order, so the report is identical to the sequential one.
pub fn probe_sweep_threads(q: &ProbeQuery, threads: usize) -> Result<ProbeReport> {
    let mut report = report_shell(q);
    let (from, to) = q.n_range;
    if from > to {
        return Ok(report);
    }
    let ns: Vec<u64> = (from..=to).collect();
    let threads = threads.max(1).min(ns.len());
    let chunk = ns.len().div_ceil(threads);
    let results = std::thread::scope(|scope| {
        let handles: Vec<_> = ns
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || part.iter().map(|&n| row_for(q, n)).collect::<Vec<_>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("probe worker panicked"))
            .collect::<Vec<_>>()
    });
    for row in results {
        report.rows.push(row?);
    }
    Ok(report)
}
