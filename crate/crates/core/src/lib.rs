//! Exact truncated q-series and overpartition statistics, used to check what
//! happens when the alternating sum in
//! `1 + 2 sum_{j>=1} (-1)^j q^{j^2} = (q;q)_inf / (-q;q)_inf` is cut off early.
//!
//! - [`series`]: power series with big-integer coefficients, q-Pochhammer
//!   products, Gaussian binomials, theta and pentagonal series.
//! - [`opart`]: enumeration of partitions and overpartitions and the
//!   statistics built on them (overline-mex classes, `M̄_k`, `N̄_k`, `M_k`).
//! - [`bijection`]: the constructive maps between overpartition families.
//! - [`harness`]: the registry of identities and the verifiers that check
//!   them at finite order.

pub mod bijection;
pub mod harness;
pub mod opart;
pub mod series;

pub use opart::{Enumerator, MexQuery, Overpartition, Part, Partition};
pub use series::{PochLength, PochSpec, TruncatedSeries};
pub use harness::{
    list_identities, plan_jobs, run_jobs, verify, verify_enumerative, verify_inequality, verify_series, Form,
    HarnessError, IdentityDescriptor, Job, ParamName, Params, Selection, Status, VerificationReport,
};
