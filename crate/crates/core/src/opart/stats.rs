use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Enumerator, OpartError, Overpartition, Part, Partition};
use crate::series::{overpartition_gf, partition_gf, TruncatedSeries};

/// Modulus and residue selecting which integers the mex ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MexQuery {
    modulus: u32,
    residue: u32,
}

impl MexQuery {
    pub fn new(modulus: u32, residue: u32) -> Result<Self, OpartError> {
        if modulus == 0 || residue == 0 || residue > modulus {
            return Err(OpartError::InvalidMexQuery { modulus, residue });
        }
        Ok(Self { modulus, residue })
    }

    /// The `(2, 1)` query: odd integers.
    pub const ODD: Self = Self { modulus: 2, residue: 1 };

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn residue(&self) -> u32 {
        self.residue
    }
}

/// Smallest positive integer congruent to the residue that is not a
/// non-overlined part. Overlined parts are ignored.
pub fn overline_mex(pi: &Overpartition, query: MexQuery) -> u32 {
    overline_mex_parts(pi.parts(), query)
}

pub(crate) fn overline_mex_parts(parts: &[Part], query: MexQuery) -> u32 {
    let mut x = query.residue;
    while parts.iter().any(|p| !p.overlined && p.value == x) {
        x += query.modulus;
    }
    x
}

/// Smallest positive integer that is not a part.
pub fn partition_mex(p: &Partition) -> u32 {
    mex_of(p.parts())
}

fn mex_of(parts: &[u32]) -> u32 {
    (1..).find(|x| !parts.contains(x)).expect("unbounded range")
}

struct CoefficientCache {
    build: fn(usize) -> TruncatedSeries,
    coeffs: Mutex<Vec<BigInt>>,
}

impl CoefficientCache {
    const fn new(build: fn(usize) -> TruncatedSeries) -> Self {
        Self { build, coeffs: Mutex::new(Vec::new()) }
    }

    fn get(&self, n: i64) -> BigInt {
        if n < 0 {
            return BigInt::zero();
        }
        let n = n as usize;
        let mut cached = self.coeffs.lock().unwrap_or_else(|e| e.into_inner());
        if n >= cached.len() {
            let order = n.max(2 * cached.len()).max(64);
            *cached = (self.build)(order).into_coeffs();
        }
        cached[n].clone()
    }
}

static PBAR: CoefficientCache = CoefficientCache::new(overpartition_gf);
static PART: CoefficientCache = CoefficientCache::new(partition_gf);

/// Number of overpartitions of `n`, read off the generating function.
/// `pbar(0) = 1` and `pbar(n) = 0` for negative `n`.
pub fn pbar(n: i64) -> BigInt {
    PBAR.get(n)
}

/// Number of ordinary partitions of `n`, zero for negative `n`.
pub fn partition_number(n: i64) -> BigInt {
    PART.get(n)
}

/// `pbar(0..=n_max)`.
pub fn pbar_table(n_max: usize) -> Vec<BigInt> {
    (0..=n_max as i64).map(pbar).collect()
}

/// Counts whose membership test is a single pass over the parts.
impl Enumerator {
    /// `(op_{A,a}(n), opbar_{A,a}(n))`: overpartitions whose overline-mex is
    /// congruent to `a`, respectively `a + A`, modulo `2A`.
    pub fn op_class_counts(&self, n: u32, query: MexQuery) -> Result<(u64, u64), OpartError> {
        let (mut op, mut opbar) = (0u64, 0u64);
        let two_a = 2 * query.modulus;
        self.for_each_overpartition(n, |p| {
            if overline_mex_parts(p, query) % two_a == query.residue % two_a {
                op += 1;
            } else {
                opbar += 1;
            }
        })?;
        Ok((op, opbar))
    }

    /// Overpartitions of `n` whose odd overline-mex is at least `2k+1` and
    /// congruent to `2k+1` modulo 4.
    pub fn op21(&self, n: u32, k: u32) -> Result<u64, OpartError> {
        let floor = 2 * k + 1;
        self.count_overpartitions_where(n, |p| {
            let mex = overline_mex_parts(p, MexQuery::ODD);
            mex >= floor && mex % 4 == floor % 4
        })
    }

    /// Overpartitions of `n` whose smallest part of value greater than `k`
    /// occurs at least `k+1` times, an overlined copy included.
    pub fn mbar(&self, n: u32, k: u32) -> Result<u64, OpartError> {
        self.count_overpartitions_where(n, |p| mbar_holds(p, k))
    }

    /// Overpartitions of `n` counted by the truncated sum with `2k` terms
    /// `-k..k-1`: set an overlined `k̄` aside if present; the smallest remaining
    /// part of value at least `k` must exist, be non-overlined, and its value
    /// must occur exactly `k` times among the remaining parts.
    pub fn nbar(&self, n: u32, k: u32) -> Result<u64, OpartError> {
        if k == 0 {
            return Err(OpartError::BadParameter { name: "k", value: 0 });
        }
        self.count_overpartitions_where(n, |p| nbar_holds(p, k))
    }

    /// Partitions of `n` in which `k` is the least positive integer that is
    /// not a part and parts larger than `k` outnumber parts smaller than `k`.
    pub fn mk_stat(&self, n: u32, k: u32) -> Result<u64, OpartError> {
        if k == 0 {
            return Err(OpartError::BadParameter { name: "k", value: 0 });
        }
        self.count_partitions_where(n, |p| {
            if mex_of(p) != k {
                return false;
            }
            let above = p.iter().filter(|&&x| x > k).count();
            let below = p.iter().filter(|&&x| x < k).count();
            above > below
        })
    }
}

pub(crate) fn mbar_holds(parts: &[Part], k: u32) -> bool {
    // parts are largest first, so the last one above k is the smallest such
    match parts.iter().rev().find(|p| p.value > k) {
        Some(s) => parts.iter().filter(|p| p.value == s.value).count() > k as usize,
        None => false,
    }
}

pub(crate) fn nbar_holds(parts: &[Part], k: u32) -> bool {
    let exempt = Part::over(k);
    let mut kept = parts.iter().filter(|&&p| p != exempt);
    let Some(s) = kept.clone().rfind(|p| p.value >= k) else {
        return false;
    };
    !s.overlined && kept.by_ref().filter(|p| p.value == s.value).count() == k as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(parts: &[(u32, bool)]) -> Overpartition {
        Overpartition::new(parts.iter().map(|&(value, overlined)| Part { value, overlined }).collect()).unwrap()
    }

    fn parse(s: &str) -> Overpartition {
        // "3,2',1" with ' marking an overline
        if s.is_empty() {
            return Overpartition::empty();
        }
        o(&s.split(',')
            .map(|t| match t.strip_suffix('\'') {
                Some(v) => (v.parse().unwrap(), true),
                None => (t.parse().unwrap(), false),
            })
            .collect::<Vec<_>>())
    }

    #[test]
    fn mex_query_validation() {
        assert!(MexQuery::new(2, 1).is_ok());
        assert!(MexQuery::new(2, 2).is_ok());
        assert!(MexQuery::new(2, 3).is_err());
        assert!(MexQuery::new(2, 0).is_err());
        assert!(MexQuery::new(0, 0).is_err());
    }

    #[test]
    fn overline_mex_table_for_four() {
        let table = [
            ("4", 1),
            ("4'", 1),
            ("3,1", 5),
            ("3',1", 3),
            ("3,1'", 1),
            ("3',1'", 1),
            ("2,2", 1),
            ("2,2'", 1),
            ("2,1,1", 3),
            ("2',1,1", 3),
            ("2,1,1'", 3),
            ("2',1,1'", 3),
            ("1,1,1,1", 3),
            ("1,1,1,1'", 3),
        ];
        for (s, mex) in table {
            assert_eq!(overline_mex(&parse(s), MexQuery::ODD), mex, "{s}");
        }
    }

    #[test]
    fn overline_mex_other_moduli() {
        let p = parse("4,3,2',1");
        assert_eq!(overline_mex(&p, MexQuery::new(1, 1).unwrap()), 2);
        assert_eq!(overline_mex(&p, MexQuery::new(2, 2).unwrap()), 2);
        assert_eq!(overline_mex(&p, MexQuery::new(3, 1).unwrap()), 7);
        assert_eq!(overline_mex(&Overpartition::empty(), MexQuery::new(5, 3).unwrap()), 3);
    }

    #[test]
    fn partition_mex_examples() {
        assert_eq!(partition_mex(&Partition::new(vec![2, 1]).unwrap()), 3);
        assert_eq!(partition_mex(&Partition::new(vec![]).unwrap()), 1);
        assert_eq!(partition_mex(&Partition::new(vec![3, 1]).unwrap()), 2);
    }

    #[test]
    fn pbar_values() {
        assert_eq!(pbar(4), BigInt::from(14));
        assert_eq!(pbar(5), BigInt::from(24));
        assert_eq!(pbar(0), BigInt::from(1));
        assert_eq!(pbar(-3), BigInt::zero());
        assert_eq!(partition_number(5), BigInt::from(7));
        assert_eq!(partition_number(-1), BigInt::zero());
        // grows the cache past its first build
        assert_eq!(pbar(150), overpartition_gf(150).coeff(150).clone());
        assert_eq!(pbar_table(4), [1, 2, 4, 8, 14].map(BigInt::from).to_vec());
    }

    #[test]
    fn op_class_counts_examples() {
        let e = Enumerator::default();
        assert_eq!(e.op_class_counts(4, MexQuery::ODD).unwrap(), (7, 7));
        assert_eq!(e.op_class_counts(1, MexQuery::ODD).unwrap(), (1, 1));
    }

    #[test]
    fn op21_examples() {
        let e = Enumerator::default();
        assert_eq!(e.op21(4, 2).unwrap(), 1);
        assert_eq!(e.op21(4, 1).unwrap(), 7);
        assert_eq!(e.op21(4, 0).unwrap(), 7);
        assert_eq!(e.op21(1, 1).unwrap(), 1);
        assert!(e.op21(31, 1).is_err());
    }

    #[test]
    fn mbar_examples() {
        let e = Enumerator::default();
        assert_eq!(e.mbar(4, 0).unwrap(), 14);
        assert_eq!(e.mbar(4, 1).unwrap(), 2);
        assert_eq!(e.mbar(2, 3).unwrap(), 0);
        // the overlined copy counts towards the multiplicity
        assert!(mbar_holds(parse("2,2'").parts(), 1));
        assert!(mbar_holds(parse("2,2").parts(), 1));
        assert!(!mbar_holds(parse("3,2'").parts(), 1));
        assert!(!mbar_holds(parse("1,1").parts(), 1));
    }

    #[test]
    fn nbar_examples() {
        let e = Enumerator::default();
        assert_eq!(e.nbar(4, 1).unwrap(), 6);
        assert_eq!(e.nbar(1, 1).unwrap(), 1);
        assert_eq!(e.nbar(1, 2).unwrap(), 0);
        assert!(e.nbar(3, 0).is_err());
        // k̄ is set aside before looking for the smallest part
        assert!(nbar_holds(parse("3,1'").parts(), 1));
        assert!(nbar_holds(parse("2,2,2'").parts(), 2));
        assert!(!nbar_holds(parse("3',1'").parts(), 1));
        assert!(!nbar_holds(parse("2,2'").parts(), 1));
    }

    #[test]
    fn mk_stat_examples() {
        let e = Enumerator::default();
        assert_eq!(e.mk_stat(4, 1).unwrap(), 2);
        assert_eq!(e.mk_stat(1, 2).unwrap(), 0);
        assert_eq!(e.mk_stat(5, 1).unwrap(), 2);
        assert!(e.mk_stat(5, 0).is_err());
    }

    #[test]
    fn op21_classes_partition_everything() {
        let e = Enumerator::default();
        for n in 1..=25u32 {
            // op21(n, k) is nested in op21(n, k + 2); the difference counts
            // overline-mex exactly 2k+1, and those classes are disjoint
            let op: Vec<u64> = (0..=n + 2).map(|k| e.op21(n, k).unwrap()).collect();
            let total: u64 = (0..=n as usize).map(|k| op[k] - op[k + 2]).sum();
            assert_eq!(BigInt::from(total), pbar(n.into()), "n={n}");
            assert_eq!(BigInt::from(op[0] + op[1]), pbar(n.into()));
        }
    }

    #[test]
    fn class_counts_sum_to_pbar_for_several_queries() {
        let e = Enumerator::default();
        for (a_mod, res) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 3)] {
            let q = MexQuery::new(a_mod, res).unwrap();
            for n in 1..=14u32 {
                let (op, opbar) = e.op_class_counts(n, q).unwrap();
                assert_eq!(BigInt::from(op + opbar), pbar(n.into()));
            }
        }
    }

    #[test]
    fn statistic_relations_up_to_25() {
        let e = Enumerator::default();
        for n in 1..=25u32 {
            let pb = pbar(n.into());
            let op: Vec<u64> = (0..=6).map(|k| e.op21(n, k).unwrap()).collect();
            assert_eq!(BigInt::from(2 * op[0]), pb);
            assert_eq!(BigInt::from(2 * op[1]), pb);
            for j in 1..=4usize {
                assert_eq!(pbar(i64::from(n) - (j * j) as i64), BigInt::from(op[j] + op[j + 1]), "n={n} j={j}");
            }
            let mb: Vec<u64> = (0..=5).map(|k| e.mbar(n, k).unwrap()).collect();
            for k in 0..=4usize {
                assert_eq!(mb[k] % 2, 0);
                assert_eq!(mb[k], 2 * op[k + 1], "mbar n={n} k={k}");
                assert!(mb[k] >= mb[k + 1]);
            }
            for k in 1..=4u32 {
                let nb = e.nbar(n, k).unwrap();
                assert_eq!(nb, op[k as usize] - op[k as usize + 1], "nbar n={n} k={k}");
            }
        }
    }
}
