use super::{OpartError, Overpartition, Part, Partition};

/// Largest `n` enumerated unless configured otherwise.
pub const DEFAULT_ENUMERATION_CAP: u32 = 30;

/// Exhaustive generator of partitions and overpartitions of `n <= cap`.
///
/// Objects are produced in decreasing lexicographic order of their part
/// sequences (largest part first, compared in the overline order), so
/// `n = 2` yields `(2), (2̄), (1,1), (1,1̄)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    cap: u32,
}

impl Default for Enumerator {
    fn default() -> Self {
        Self::new(DEFAULT_ENUMERATION_CAP)
    }
}

impl Enumerator {
    pub fn new(cap: u32) -> Self {
        Self { cap }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn check_cap(&self, n: u32) -> Result<(), OpartError> {
        if n > self.cap {
            return Err(OpartError::CapExceeded { n, cap: self.cap });
        }
        Ok(())
    }

    /// Calls `visit` once per overpartition of `n` with its parts, largest first.
    pub fn for_each_overpartition<F: FnMut(&[Part])>(&self, n: u32, mut visit: F) -> Result<(), OpartError> {
        self.check_cap(n)?;
        let mut buf = Vec::with_capacity(n as usize);
        over_rec(n, 2 * n, &mut buf, &mut visit);
        Ok(())
    }

    pub fn overpartitions(&self, n: u32) -> Result<Vec<Overpartition>, OpartError> {
        let mut out = Vec::new();
        self.for_each_overpartition(n, |p| out.push(Overpartition::from_sorted_unchecked(p.to_vec())))?;
        Ok(out)
    }

    pub fn count_overpartitions_where<F: FnMut(&[Part]) -> bool>(&self, n: u32, mut pred: F) -> Result<u64, OpartError> {
        let mut count = 0u64;
        self.for_each_overpartition(n, |p| count += u64::from(pred(p)))?;
        Ok(count)
    }

    pub fn count_overpartitions(&self, n: u32) -> Result<u64, OpartError> {
        self.count_overpartitions_where(n, |_| true)
    }

    pub fn for_each_partition<F: FnMut(&[u32])>(&self, n: u32, mut visit: F) -> Result<(), OpartError> {
        self.check_cap(n)?;
        let mut buf = Vec::with_capacity(n as usize);
        part_rec(n, n, &mut buf, &mut visit);
        Ok(())
    }

    pub fn partitions(&self, n: u32) -> Result<Vec<Partition>, OpartError> {
        let mut out = Vec::new();
        self.for_each_partition(n, |p| out.push(Partition { parts: p.to_vec() }))?;
        Ok(out)
    }

    pub fn count_partitions_where<F: FnMut(&[u32]) -> bool>(&self, n: u32, mut pred: F) -> Result<u64, OpartError> {
        let mut count = 0u64;
        self.for_each_partition(n, |p| count += u64::from(pred(p)))?;
        Ok(count)
    }
}

fn over_rec<F: FnMut(&[Part])>(remaining: u32, max_rank: u32, buf: &mut Vec<Part>, visit: &mut F) {
    if remaining == 0 {
        visit(buf);
        return;
    }
    for rank in (1..=max_rank.min(2 * remaining)).rev() {
        let part = Part::from_rank(rank);
        // an overlined value cannot repeat
        let next_max = if part.overlined { rank - 1 } else { rank };
        buf.push(part);
        over_rec(remaining - part.value, next_max, buf, visit);
        buf.pop();
    }
}

fn part_rec<F: FnMut(&[u32])>(remaining: u32, max_part: u32, buf: &mut Vec<u32>, visit: &mut F) {
    if remaining == 0 {
        visit(buf);
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        buf.push(part);
        part_rec(remaining - part, part, buf, visit);
        buf.pop();
    }
}
