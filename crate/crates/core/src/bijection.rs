//! Constructive maps between overpartition families.
//!
//! `phi` sends an overpartition of `n` whose smallest part is non-overlined
//! (family A) to an overpartition of `n - 1` in family B: if `1̄` occurs, the
//! smallest part above 1 is at least `2 + #(non-overlined 1s)` in the overline
//! order. The rest of the overpartitions of `n - 1` form family C, which is
//! nonempty from `n = 4` on. Since `|A(n)| = p̄(n)/2`, this shows
//! `p̄(n) <= 2 p̄(n-1)` with strict inequality for `n >= 4`.
//!
//! The odd staircase maps insert or remove one non-overlined copy of each of
//! `1, 3, ..., 2j-1`, matching overpartitions of `n - j^2` with overpartitions
//! of `n` whose odd overline-mex is at least `2j+1`.

use std::collections::HashSet;
use std::fmt;

use crate::opart::{overline_mex, Enumerator, MexQuery, OpartError, Overpartition, Part};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BijectionError {
    #[error("{0} does not have a non-overlined smallest part")]
    NotInA(Overpartition),
    #[error("{0} is not in family B")]
    NotInB(Overpartition),
    #[error("{lambda} lacks a non-overlined part {missing}")]
    MissingStaircase { lambda: Overpartition, missing: u32 },
    #[error("the family C witness needs n >= 4, got {0}")]
    WitnessTooSmall(u32),
    #[error(transparent)]
    Opart(#[from] OpartError),
}

/// Which definition `classify` tests against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Overpartitions of `n`: family A or nothing.
    A,
    /// Overpartitions of `n - 1`: family B or C.
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbcLabel {
    A,
    B,
    C,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbcClass {
    pub label: AbcLabel,
    /// Weight of the classified overpartition.
    pub weight: u64,
}

pub fn classify(pi: &Overpartition, side: Side) -> AbcClass {
    let label = match side {
        Side::A if in_a(pi) => AbcLabel::A,
        Side::A => AbcLabel::None,
        Side::B if in_b(pi) => AbcLabel::B,
        Side::B => AbcLabel::C,
    };
    AbcClass { label, weight: pi.weight() }
}

fn in_a(pi: &Overpartition) -> bool {
    matches!(pi.smallest(), Some(p) if !p.overlined)
}

fn in_b(lambda: &Overpartition) -> bool {
    if !lambda.contains(Part::over(1)) {
        return true;
    }
    let ones = lambda.plain_count(1) as u32;
    match lambda.parts().iter().rev().find(|p| p.value > 1) {
        // compared in the overline order, so 2̄ < 2 = 2 + 0
        Some(&s) => s >= Part::plain(ones + 2),
        None => true,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// Smallest part is a non-overlined 1.
    SmallestOne,
    /// Smallest part `t >= 2`, traded for `t - 2` ones and a `1̄`.
    SmallestAtLeastTwo,
    Insert,
    Remove,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::SmallestOne => "t=1",
            CaseTag::SmallestAtLeastTwo => "t>=2",
            CaseTag::Insert => "insert",
            CaseTag::Remove => "remove",
        })
    }
}

/// One application of a map, kept for auditing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionTrace {
    pub input: Overpartition,
    pub output: Overpartition,
    pub case: CaseTag,
    pub weight_delta: i64,
}

impl BijectionTrace {
    fn new(input: &Overpartition, output: Overpartition, case: CaseTag) -> Self {
        let weight_delta = output.weight() as i64 - input.weight() as i64;
        Self { input: input.clone(), output, case, weight_delta }
    }
}

/// Maps `pi` in A(n) to B(n - 1).
pub fn phi(pi: &Overpartition) -> Result<BijectionTrace, BijectionError> {
    if !in_a(pi) {
        return Err(BijectionError::NotInA(pi.clone()));
    }
    let mut parts = pi.parts().to_vec();
    let t = parts.pop().expect("nonempty").value;
    let case = if t == 1 {
        CaseTag::SmallestOne
    } else {
        parts.extend(std::iter::repeat(Part::plain(1)).take(t as usize - 2));
        parts.push(Part::over(1));
        CaseTag::SmallestAtLeastTwo
    };
    Ok(BijectionTrace::new(pi, Overpartition::from_sorted_unchecked(parts), case))
}

/// Maps `lambda` in B(n - 1) back to A(n).
pub fn phi_inverse(lambda: &Overpartition) -> Result<BijectionTrace, BijectionError> {
    if !in_b(lambda) {
        return Err(BijectionError::NotInB(lambda.clone()));
    }
    let mut parts = lambda.parts().to_vec();
    let case = if lambda.contains(Part::over(1)) {
        let ones = lambda.plain_count(1) as u32;
        parts.retain(|p| p.value != 1);
        parts.push(Part::plain(ones + 2));
        CaseTag::SmallestAtLeastTwo
    } else {
        parts.push(Part::plain(1));
        CaseTag::SmallestOne
    };
    Ok(BijectionTrace::new(lambda, Overpartition::from_sorted_unchecked(parts), case))
}

/// `(2̄, 1, ..., 1, 1̄)` with `n - 4` ones: an element of C(n - 1).
pub fn c_witness(n: u32) -> Result<Overpartition, BijectionError> {
    if n < 4 {
        return Err(BijectionError::WitnessTooSmall(n));
    }
    let mut parts = vec![Part::over(2)];
    parts.extend(std::iter::repeat(Part::plain(1)).take(n as usize - 4));
    parts.push(Part::over(1));
    Ok(Overpartition::from_sorted_unchecked(parts))
}

/// Adds one non-overlined copy of each of `1, 3, ..., 2j-1`.
pub fn lemma41_insert(mu: &Overpartition, j: u32) -> BijectionTrace {
    let mut parts = mu.parts().to_vec();
    parts.extend((0..j).map(|i| Part::plain(2 * i + 1)));
    let output = Overpartition::new(parts).expect("non-overlined parts keep the overline rule");
    BijectionTrace::new(mu, output, CaseTag::Insert)
}

/// Removes one non-overlined copy of each of `1, 3, ..., 2j-1`.
pub fn lemma41_remove(lambda: &Overpartition, j: u32) -> Result<BijectionTrace, BijectionError> {
    let mut parts = lambda.parts().to_vec();
    for i in 0..j {
        let target = Part::plain(2 * i + 1);
        let pos = parts
            .iter()
            .position(|&p| p == target)
            .ok_or_else(|| BijectionError::MissingStaircase { lambda: lambda.clone(), missing: target.value })?;
        parts.remove(pos);
    }
    Ok(BijectionTrace::new(lambda, Overpartition::from_sorted_unchecked(parts), CaseTag::Remove))
}

/// Exhaustive check of `phi` on A(n).
#[derive(Debug, Clone)]
pub struct Section3Audit {
    pub n: u32,
    pub a_size: u64,
    pub b_size: u64,
    pub c_size: u64,
    pub pbar: u64,
    /// Number of A(n) elements whose image lies in B(n-1) with weight n-1 and
    /// maps back to the original.
    pub round_trips: u64,
    pub distinct_images: u64,
    pub witness: Option<Overpartition>,
    pub witness_in_c: bool,
    pub traces: Vec<BijectionTrace>,
}

impl Section3Audit {
    pub fn is_bijective(&self) -> bool {
        self.round_trips == self.a_size && self.distinct_images == self.a_size && self.a_size == self.b_size
    }

    /// C(n-1) must be empty below 4 and contain the witness from 4 on.
    pub fn c_claim_holds(&self) -> bool {
        if self.n < 4 {
            self.c_size == 0
        } else {
            self.c_size > 0 && self.witness_in_c
        }
    }

    pub fn passed(&self) -> bool {
        self.is_bijective() && self.c_claim_holds() && 2 * self.a_size == self.pbar
    }
}

pub fn audit_section3(n: u32, enumerator: &Enumerator, keep_traces: bool) -> Result<Section3Audit, BijectionError> {
    if n == 0 {
        return Err(OpartError::BadParameter { name: "n", value: 0 }.into());
    }
    let source = enumerator.overpartitions(n)?;
    let target = enumerator.overpartitions(n - 1)?;
    let b_set: HashSet<&Overpartition> = target.iter().filter(|l| in_b(l)).collect();
    let c_set: HashSet<&Overpartition> = target.iter().filter(|l| !in_b(l)).collect();

    let mut audit = Section3Audit {
        n,
        a_size: 0,
        b_size: b_set.len() as u64,
        c_size: c_set.len() as u64,
        pbar: source.len() as u64,
        round_trips: 0,
        distinct_images: 0,
        witness: None,
        witness_in_c: false,
        traces: Vec::new(),
    };
    let mut images = HashSet::new();
    for pi in source.iter().filter(|p| in_a(p)) {
        audit.a_size += 1;
        let trace = phi(pi)?;
        let lands = trace.weight_delta == -1 && b_set.contains(&trace.output);
        if lands && phi_inverse(&trace.output).map(|back| back.output == *pi).unwrap_or(false) {
            audit.round_trips += 1;
        }
        images.insert(trace.output.clone());
        if keep_traces {
            audit.traces.push(trace);
        }
    }
    audit.distinct_images = images.len() as u64;
    if n >= 4 {
        let w = c_witness(n)?;
        audit.witness_in_c = w.weight() == u64::from(n - 1) && c_set.contains(&w);
        audit.witness = Some(w);
    }
    Ok(audit)
}

/// Exhaustive check of the staircase insertion from `n - j^2` to `n`.
#[derive(Debug, Clone)]
pub struct Lemma41Audit {
    pub n: u32,
    pub j: u32,
    pub source_size: u64,
    /// Overpartitions of `n` with odd overline-mex at least `2j+1`.
    pub target_size: u64,
    pub round_trips: u64,
    pub distinct_images: u64,
    pub traces: Vec<BijectionTrace>,
}

impl Lemma41Audit {
    pub fn passed(&self) -> bool {
        self.source_size == self.target_size
            && self.round_trips == self.source_size
            && self.distinct_images == self.source_size
    }
}

pub fn audit_lemma41(n: u32, j: u32, enumerator: &Enumerator, keep_traces: bool) -> Result<Lemma41Audit, BijectionError> {
    let jj = j.checked_mul(j).filter(|&s| j >= 1 && s <= n);
    let Some(jj) = jj else {
        return Err(OpartError::BadParameter { name: "j", value: i64::from(j) }.into());
    };
    let floor = 2 * j + 1;
    let target: HashSet<Overpartition> = enumerator
        .overpartitions(n)?
        .into_iter()
        .filter(|l| overline_mex(l, MexQuery::ODD) >= floor)
        .collect();
    let source = enumerator.overpartitions(n - jj)?;
    let mut audit = Lemma41Audit {
        n,
        j,
        source_size: source.len() as u64,
        target_size: target.len() as u64,
        round_trips: 0,
        distinct_images: 0,
        traces: Vec::new(),
    };
    let mut images = HashSet::new();
    for mu in &source {
        let trace = lemma41_insert(mu, j);
        let back = lemma41_remove(&trace.output, j).map(|t| t.output);
        if target.contains(&trace.output) && back.as_ref() == Ok(mu) {
            audit.round_trips += 1;
        }
        images.insert(trace.output.clone());
        if keep_traces {
            audit.traces.push(trace);
        }
    }
    audit.distinct_images = images.len() as u64;
    Ok(audit)
}
