//! Registry of verifiable statements and the verifiers that check them.
//!
//! Each [`IdentityDescriptor`] carries one or more [`Check`]s:
//!
//! - `Series`: both sides are built as [`TruncatedSeries`] at a given order and
//!   compared coefficientwise.
//! - `Enumerative`: both sides are computed for each `n` in a range, one side
//!   by exhaustive enumeration and the other from an alternating sum or a
//!   series coefficient.
//! - `Inequality`: a quantity is checked to be nonnegative for each `n`, and
//!   positive from the stated threshold on.
//!
//! Verifiers return a [`VerificationReport`]. A [`Perturbation`] can be
//! injected into the left-hand side to confirm that a broken identity is
//! caught at the right index.

mod analytic;
mod counting;
mod registry;

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

pub use counting::yao_lhs;
pub use registry::list_identities;

use crate::bijection::BijectionError;
use crate::opart::{Enumerator, OpartError};
use crate::series::{SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HarnessError {
    #[error("unknown identity {0:?}")]
    UnknownId(String),
    #[error("identity {id} has no {form} form")]
    WrongForm { id: String, form: Form },
    #[error("bad parameters for {id}: {reason}")]
    BadParams { id: String, reason: String },
    #[error("perturbation index {0} is outside the compared range")]
    BadPerturbation(i64),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Opart(#[from] OpartError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Form {
    Series,
    Enumerative,
    Inequality,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Series => "series-equality",
            Form::Enumerative => "enumerative-equality",
            Form::Inequality => "inequality",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParamName {
    K,
    M,
    Ell,
    J,
}

impl ParamName {
    pub const ALL: [ParamName; 4] = [ParamName::K, ParamName::M, ParamName::Ell, ParamName::J];

    pub fn as_str(&self) -> &'static str {
        match self {
            ParamName::K => "k",
            ParamName::M => "m",
            ParamName::Ell => "ell",
            ParamName::J => "j",
        }
    }
}

impl fmt::Display for ParamName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parameter assignment for one check. Unused parameters stay `None`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params {
    pub k: Option<i64>,
    pub m: Option<i64>,
    pub ell: Option<i64>,
    pub j: Option<i64>,
}

impl Params {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: ParamName, value: i64) -> Self {
        *self.slot(name) = Some(value);
        self
    }

    pub fn get(&self, name: ParamName) -> Option<i64> {
        match name {
            ParamName::K => self.k,
            ParamName::M => self.m,
            ParamName::Ell => self.ell,
            ParamName::J => self.j,
        }
    }

    fn slot(&mut self, name: ParamName) -> &mut Option<i64> {
        match name {
            ParamName::K => &mut self.k,
            ParamName::M => &mut self.m,
            ParamName::Ell => &mut self.ell,
            ParamName::J => &mut self.j,
        }
    }

    /// Set parameters in `k, m, ell, j` order.
    pub fn entries(&self) -> Vec<(ParamName, i64)> {
        ParamName::ALL.iter().filter_map(|&n| self.get(n).map(|v| (n, v))).collect()
    }

    // Accessors for validated parameter sets.
    pub(crate) fn k(&self) -> i64 {
        self.k.expect("validated")
    }
    pub(crate) fn m(&self) -> i64 {
        self.m.expect("validated")
    }
    pub(crate) fn ell(&self) -> i64 {
        self.ell.expect("validated")
    }
    pub(crate) fn j(&self) -> i64 {
        self.j.expect("validated")
    }
}

/// `k=2;m=-1`, or the empty string when no parameter is set.
impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().iter().map(|(n, v)| format!("{n}={v}")).collect();
        f.write_str(&parts.join(";"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: ParamName,
    pub min: i64,
    pub max: i64,
    /// Closed range scanned when the caller does not give one.
    pub default: (i64, i64),
}

pub(crate) type SeriesFn = fn(&Params, usize) -> Result<analytic::SeriesPair, HarnessError>;
pub(crate) type RowsFn = fn(&Params, u32, &Enumerator) -> Result<Vec<Row>, HarnessError>;

#[derive(Clone, Copy)]
pub(crate) enum Runner {
    Series(SeriesFn),
    Enumerative(RowsFn),
    Inequality {
        value: fn(&Params, i64) -> BigInt,
        strict_from: fn(&Params) -> Option<i64>,
    },
}

/// One way of checking an identity.
#[derive(Clone, Copy)]
pub struct Check {
    pub form: Form,
    pub params: &'static [ParamSpec],
    /// Require `m <= k`.
    pub m_le_k: bool,
    /// Where the right-hand side comes from.
    pub oracle: &'static str,
    pub(crate) runner: Runner,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check")
            .field("form", &self.form)
            .field("params", &self.params)
            .field("m_le_k", &self.m_le_k)
            .field("oracle", &self.oracle)
            .finish()
    }
}

impl Check {
    fn validate(&self, id: &str, params: &Params) -> Result<(), HarnessError> {
        let bad = |reason: String| HarnessError::BadParams { id: id.to_string(), reason };
        for name in ParamName::ALL {
            let spec = self.params.iter().find(|s| s.name == name);
            match (spec, params.get(name)) {
                (Some(s), Some(v)) if v < s.min || v > s.max => {
                    return Err(bad(format!("{name}={v} outside {}..{}", s.min, s.max)));
                }
                (Some(_), None) => return Err(bad(format!("missing {name}"))),
                (None, Some(_)) => return Err(bad(format!("takes no parameter {name}"))),
                _ => {}
            }
        }
        if self.m_le_k && params.m() > params.k() {
            return Err(bad("requires m <= k".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct IdentityDescriptor {
    /// Stable machine id.
    pub id: &'static str,
    /// Human-readable statement of what is checked.
    pub anchor: &'static str,
    pub checks: &'static [Check],
}

impl IdentityDescriptor {
    /// The primary form.
    pub fn kind(&self) -> Form {
        self.checks[0].form
    }

    pub fn forms(&self) -> impl Iterator<Item = Form> + '_ {
        self.checks.iter().map(|c| c.form)
    }

    pub fn check(&self, form: Form) -> Option<&'static Check> {
        self.checks.iter().find(|c| c.form == form)
    }

    pub fn takes(&self, name: ParamName) -> bool {
        self.checks.iter().any(|c| c.params.iter().any(|p| p.name == name))
    }
}

pub fn descriptor(id: &str) -> Result<&'static IdentityDescriptor, HarnessError> {
    list_identities()
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| HarnessError::UnknownId(id.to_string()))
}

/// One compared pair of values at position `index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub index: i64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// Adds `delta` to the left-hand side at `index` before comparing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perturbation {
    pub index: i64,
    pub delta: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComparedRange {
    /// Coefficients of `q^0..=q^order`.
    Order(usize),
    /// Values at `from..=to`.
    Indices { from: i64, to: i64 },
}

impl fmt::Display for ComparedRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComparedRange::Order(n) => write!(f, "order:{n}"),
            ComparedRange::Indices { from, to } => write!(f, "n:{from}..{to}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    /// The two sides differ.
    Mismatch,
    /// An inequality quantity is negative.
    Sign,
    /// An inequality quantity is zero where it should be positive.
    Strictness,
}

impl fmt::Display for FailureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureKind::Mismatch => "mismatch",
            FailureKind::Sign => "sign",
            FailureKind::Strictness => "strictness",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: i64,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub kind: FailureKind,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub id: &'static str,
    pub form: Form,
    pub params: Params,
    pub range: ComparedRange,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    pub elapsed: Duration,
    pub anchor: &'static str,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn sort_key(&self) -> (&'static str, Params, ComparedRange) {
        (self.id, self.params, self.range)
    }
}

/// A single verification request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Job {
    pub id: &'static str,
    pub form: Form,
    pub params: Params,
    /// Series order for series checks, `n_max` otherwise.
    pub extent: usize,
    pub perturbation: Option<Perturbation>,
}

impl Job {
    pub fn new(id: &str, form: Form, params: Params, extent: usize) -> Result<Self, HarnessError> {
        let d = descriptor(id)?;
        if d.check(form).is_none() {
            return Err(HarnessError::WrongForm { id: id.to_string(), form });
        }
        Ok(Self { id: d.id, form, params, extent, perturbation: None })
    }

    pub fn perturbed(mut self, index: i64, delta: impl Into<BigInt>) -> Self {
        self.perturbation = Some(Perturbation { index, delta: delta.into() });
        self
    }
}

pub fn verify(job: &Job, enumerator: &Enumerator) -> Result<VerificationReport, HarnessError> {
    let d = descriptor(job.id)?;
    let check = d.check(job.form).ok_or_else(|| HarnessError::WrongForm { id: job.id.to_string(), form: job.form })?;
    check.validate(d.id, &job.params)?;
    let start = Instant::now();
    let p = &job.params;
    let (range, first_mismatch) = match check.runner {
        Runner::Series(build) => {
            let order = job.extent;
            let (mut lhs, rhs) = build(p, order)?;
            if let Some(pert) = &job.perturbation {
                perturb_series(&mut lhs, pert)?;
            }
            (ComparedRange::Order(order), first_series_mismatch(&lhs, &rhs))
        }
        Runner::Enumerative(rows) => {
            let n_max = u32::try_from(job.extent).unwrap_or(u32::MAX);
            enumerator.check_cap(n_max)?;
            let mut rows = rows(p, n_max, enumerator)?;
            if let Some(pert) = &job.perturbation {
                let row = rows
                    .iter_mut()
                    .find(|r| r.index == pert.index)
                    .ok_or(HarnessError::BadPerturbation(pert.index))?;
                row.lhs += &pert.delta;
            }
            let from = rows.first().map_or(1, |r| r.index);
            let mismatch = rows.into_iter().find(|r| r.lhs != r.rhs).map(|r| Mismatch {
                index: r.index,
                lhs: r.lhs,
                rhs: r.rhs,
                kind: FailureKind::Mismatch,
            });
            (ComparedRange::Indices { from, to: job.extent as i64 }, mismatch)
        }
        Runner::Inequality { value, strict_from } => {
            let n_max = job.extent as i64;
            if let Some(pert) = &job.perturbation {
                if !(1..=n_max).contains(&pert.index) {
                    return Err(HarnessError::BadPerturbation(pert.index));
                }
            }
            let threshold = strict_from(p);
            let mismatch = (1..=n_max).find_map(|n| {
                let mut v = value(p, n);
                if let Some(pert) = job.perturbation.as_ref().filter(|x| x.index == n) {
                    v += &pert.delta;
                }
                let kind = if v.is_negative() {
                    FailureKind::Sign
                } else if v.is_zero() && threshold.is_some_and(|t| n >= t) {
                    FailureKind::Strictness
                } else {
                    return None;
                };
                Some(Mismatch { index: n, lhs: v, rhs: BigInt::zero(), kind })
            });
            (ComparedRange::Indices { from: 1, to: n_max }, mismatch)
        }
    };
    Ok(VerificationReport {
        id: d.id,
        form: job.form,
        params: job.params,
        range,
        status: if first_mismatch.is_some() { Status::Fail } else { Status::Pass },
        first_mismatch,
        elapsed: start.elapsed(),
        anchor: d.anchor,
    })
}

fn perturb_series(lhs: &mut TruncatedSeries, pert: &Perturbation) -> Result<(), HarnessError> {
    let idx = usize::try_from(pert.index)
        .ok()
        .filter(|&i| i <= lhs.order())
        .ok_or(HarnessError::BadPerturbation(pert.index))?;
    let c = lhs.coeff(idx) + &pert.delta;
    lhs.set_coeff(idx, c);
    Ok(())
}

fn first_series_mismatch(lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Option<Mismatch> {
    lhs.coeffs().iter().zip(rhs.coeffs()).enumerate().find(|(_, (a, b))| a != b).map(|(i, (a, b))| Mismatch {
        index: i as i64,
        lhs: a.clone(),
        rhs: b.clone(),
        kind: FailureKind::Mismatch,
    })
}

pub fn verify_series(id: &str, params: &Params, order: usize) -> Result<VerificationReport, HarnessError> {
    verify(&Job::new(id, Form::Series, *params, order)?, &Enumerator::default())
}

pub fn verify_enumerative(
    id: &str,
    params: &Params,
    n_max: u32,
    enumerator: &Enumerator,
) -> Result<VerificationReport, HarnessError> {
    verify(&Job::new(id, Form::Enumerative, *params, n_max as usize)?, enumerator)
}

pub fn verify_inequality(id: &str, params: &Params, n_max: u32) -> Result<VerificationReport, HarnessError> {
    verify(&Job::new(id, Form::Inequality, *params, n_max as usize)?, &Enumerator::default())
}

/// Runs jobs concurrently; reports come back sorted by id, params, range.
pub fn run_jobs(jobs: &[Job], enumerator: &Enumerator) -> Result<Vec<VerificationReport>, HarnessError> {
    let mut reports = jobs.par_iter().map(|j| verify(j, enumerator)).collect::<Result<Vec<_>, _>>()?;
    reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(reports)
}

/// What to run: which identities, parameter ranges, and extents.
#[derive(Debug, Clone, Default)]
pub struct Selection {
    /// `None` selects the whole registry.
    pub ids: Option<Vec<String>>,
    /// Closed ranges overriding each check's default scan.
    pub ranges: Vec<(ParamName, (i64, i64))>,
    pub order: usize,
    pub n_max: u32,
}

/// Expands a selection into one job per form and parameter assignment.
///
/// For explicitly named ids, a range naming a parameter the identity does not
/// take, or values outside its domain, are errors; for the whole registry
/// such values are skipped.
pub fn plan_jobs(selection: &Selection) -> Result<Vec<Job>, HarnessError> {
    let explicit = selection.ids.is_some();
    let descriptors: Vec<&'static IdentityDescriptor> = match &selection.ids {
        Some(ids) => ids.iter().map(|id| descriptor(id)).collect::<Result<_, _>>()?,
        None => list_identities().iter().collect(),
    };
    let mut jobs = Vec::new();
    for d in descriptors {
        if explicit {
            if let Some((name, _)) = selection.ranges.iter().find(|(n, _)| !d.takes(*n)) {
                return Err(HarnessError::BadParams { id: d.id.into(), reason: format!("takes no parameter {name}") });
            }
        }
        for check in d.checks {
            let mut grid = vec![Params::none()];
            for spec in check.params {
                let (lo, hi) = selection
                    .ranges
                    .iter()
                    .find(|(n, _)| *n == spec.name)
                    .map(|&(_, r)| r)
                    .unwrap_or(spec.default);
                if explicit && (lo < spec.min || hi > spec.max) {
                    return Err(HarnessError::BadParams {
                        id: d.id.into(),
                        reason: format!("{} range {lo}..{hi} outside {}..{}", spec.name, spec.min, spec.max),
                    });
                }
                let values: Vec<i64> = (lo.max(spec.min)..=hi.min(spec.max)).collect();
                grid = grid.iter().flat_map(|p| values.iter().map(move |&v| p.with(spec.name, v))).collect();
            }
            if check.m_le_k {
                grid.retain(|p| p.m() <= p.k());
            }
            let extent = match check.form {
                Form::Series => selection.order,
                Form::Enumerative | Form::Inequality => selection.n_max as usize,
            };
            jobs.extend(grid.into_iter().map(|params| Job {
                id: d.id,
                form: check.form,
                params,
                extent,
                perturbation: None,
            }));
        }
    }
    if explicit && jobs.is_empty() {
        return Err(HarnessError::BadParams { id: "selection".into(), reason: "no parameter values in range".into() });
    }
    Ok(jobs)
}
