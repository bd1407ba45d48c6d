use super::analytic;
use super::counting;
use super::{Check, Form, IdentityDescriptor, ParamName, ParamSpec, Params, Runner};

const fn spec(name: ParamName, min: i64, default: (i64, i64)) -> ParamSpec {
    ParamSpec { name, min, max: i64::MAX, default }
}

const NO_PARAMS: &[ParamSpec] = &[];
const K1_8: &[ParamSpec] = &[spec(ParamName::K, 1, (1, 8))];
const K1_4: &[ParamSpec] = &[spec(ParamName::K, 1, (1, 4))];
const K0_4: &[ParamSpec] = &[spec(ParamName::K, 0, (1, 4))];
const K1_10: &[ParamSpec] = &[spec(ParamName::K, 1, (1, 10))];
const J1_4: &[ParamSpec] = &[spec(ParamName::J, 1, (1, 4))];
const YAO: &[ParamSpec] = &[spec(ParamName::K, 1, (1, 3)), spec(ParamName::Ell, 1, (1, 3))];
const M_K: &[ParamSpec] = &[
    ParamSpec { name: ParamName::K, min: i64::MIN, max: i64::MAX, default: (-4, 4) },
    ParamSpec { name: ParamName::M, min: i64::MIN, max: i64::MAX, default: (-4, 4) },
];

const fn series(params: &'static [ParamSpec], oracle: &'static str, f: super::SeriesFn) -> Check {
    Check { form: Form::Series, params, m_le_k: false, oracle, runner: Runner::Series(f) }
}

const fn enumerative(params: &'static [ParamSpec], oracle: &'static str, f: super::RowsFn) -> Check {
    Check { form: Form::Enumerative, params, m_le_k: false, oracle, runner: Runner::Enumerative(f) }
}

const fn inequality(
    params: &'static [ParamSpec],
    value: fn(&Params, i64) -> num_bigint::BigInt,
    strict_from: fn(&Params) -> Option<i64>,
) -> Check {
    Check {
        form: Form::Inequality,
        params,
        m_le_k: false,
        oracle: "sign of an alternating sum of overpartition counts",
        runner: Runner::Inequality { value, strict_from },
    }
}

fn k_of(p: &Params) -> usize {
    p.k() as usize
}

fn never(_: &Params) -> Option<i64> {
    None
}

const ENUM_OVER: &str = "exhaustive enumeration of overpartitions";
const PRODUCT: &str = "closed-form q-series";

static REGISTRY: &[IdentityDescriptor] = &[
    IdentityDescriptor {
        id: "pentagonal-am",
        anchor: "truncated pentagonal number theorem: 1/(q;q)_inf sum_{j<k} (-1)^j q^{j(3j+1)/2}(1-q^{2j+1}) = 1 + (-1)^{k-1} sum_n q^{k(k-1)/2+(k+1)n}/(q;q)_n [n-1;k-1]",
        checks: &[series(K1_8, "Gaussian-binomial sum", |p, n| analytic::pentagonal_am(k_of(p), n))],
    },
    IdentityDescriptor {
        id: "thm-1-1",
        anchor: "(-1)^{k-1} sum_{j<k} (-1)^j (p(n-j(3j+1)/2) - p(n-j(3j+5)/2-1)) = M_k(n): k is the least non-part and parts >k outnumber parts <k",
        checks: &[enumerative(K1_4, "exhaustive enumeration of partitions", counting::thm_1_1)],
    },
    IdentityDescriptor {
        id: "gauss",
        anchor: "Gauss theta identity: 1 + 2 sum_{j>=1} (-1)^j q^{j^2} = (q;q)_inf/(-q;q)_inf",
        checks: &[
            series(NO_PARAMS, "Pochhammer product quotient", |_, n| analytic::gauss(n)),
            enumerative(NO_PARAMS, "zero: pbar(n) + 2 sum (-1)^j pbar(n-j^2) with enumerated pbar", counting::gauss_coefficients),
        ],
    },
    IdentityDescriptor {
        id: "guo-zeng-truncation",
        anchor: "Guo-Zeng truncation: pbar-series times (1 + 2 sum_{j<=k} (-1)^j q^{j^2}) = 1 + (-1)^k sum_{n>k} (-q;q)_k (-1;q)_{n-k} q^{(k+1)n}/(q;q)_n [n-1;k]",
        checks: &[series(K1_8, "Gaussian-binomial sum", |p, n| analytic::guo_zeng(k_of(p), n))],
    },
    IdentityDescriptor {
        id: "ineq-guo-zeng",
        anchor: "(-1)^k (pbar(n) + 2 sum_{j<=k} (-1)^j pbar(n-j^2)) >= 0 and > 0 for n >= (k+1)^2",
        checks: &[inequality(K1_4, counting::ineq_guo_zeng, |p| Some((p.k() + 1).pow(2)))],
    },
    IdentityDescriptor {
        id: "am-2018-truncation",
        anchor: "Andrews-Merca truncation: pbar-series times the truncated theta sum = 1 + 2(-1)^k (-q;q)_k/(q;q)_k sum_j q^{(k+1)(k+j+1)} (-q^{k+j+2};q)_inf/(q^{k+j+1};q)_inf",
        checks: &[series(K1_8, "Pochhammer ratio sum", |p, n| analytic::am_2018(k_of(p), n))],
    },
    IdentityDescriptor {
        id: "thm-1-3",
        anchor: "(-1)^k (pbar(n) + 2 sum_{j<=k} (-1)^j pbar(n-j^2)) = Mbar_k(n): the first part larger than k appears at least k+1 times",
        checks: &[enumerative(K0_4, ENUM_OVER, counting::thm_1_3)],
    },
    IdentityDescriptor {
        id: "yao",
        anchor: "sum_j (-1)^j Mbar_k(n - ell j(3j-1)/2) generates 2 (q^ell;q^ell)_inf/(q;q)_inf sum_j q^{(k+2j+1)^2}(1-q^{2k+4j+3})/(q;q^2)_inf",
        checks: &[enumerative(YAO, "dilated pentagonal series times odd-square sum", counting::yao)],
    },
    IdentityDescriptor {
        id: "ineq-conj-1-5",
        anchor: "(-1)^{k-1} (pbar(n) + 2 sum_{j<=k} (-1)^j pbar(n-j^2)) + pbar(n-k^2) >= 0 and > 0 for n >= k^2",
        checks: &[inequality(K1_4, counting::ineq_conj_1_5, |p| Some(p.k().pow(2)))],
    },
    IdentityDescriptor {
        id: "ineq-xyz",
        anchor: "(-1)^{k-1} (pbar(n) + 2 sum_{j<=k} (-1)^j pbar(n-j^2)) + pbar(n-k(k+1)) >= 0",
        checks: &[inequality(K1_4, counting::ineq_xyz, never)],
    },
    IdentityDescriptor {
        id: "li-truncation",
        anchor: "Li truncation: pbar-series times sum_{j=-k}^{k-1} (-1)^j q^{j^2} = 1 + (-1)^{k-1} (-q;q)_k/(q;q)_{k-1} sum_j q^{k(k+j)} (-q^{k+j+1};q)_inf/(q^{k+j+1};q)_inf",
        checks: &[series(K1_8, "Pochhammer ratio sum", |p, n| analytic::li(k_of(p), n))],
    },
    IdentityDescriptor {
        id: "thm-1-4",
        anchor: "(-1)^{k-1} sum_{j=-k}^{k-1} (-1)^j pbar(n-j^2) = Nbar_k(n): with kbar set aside the smallest part >= k is non-overlined and appears exactly k times",
        checks: &[enumerative(K1_4, ENUM_OVER, counting::thm_1_4)],
    },
    IdentityDescriptor {
        id: "ineq-m-k",
        anchor: "(-1)^{min(|m|;k)} sum_{j=m}^{k} (-1)^j pbar(n-j^2) >= 0 for m <= k",
        checks: &[Check { m_le_k: true, ..inequality(M_K, counting::ineq_m_k, never) }],
    },
    IdentityDescriptor {
        id: "op-split-2-1",
        anchor: "op_{2;1}(n) + opbar_{2;1}(n) = pbar(n): the odd overline-mex is 1 or 3 mod 4",
        checks: &[enumerative(NO_PARAMS, "pbar from the generating function", counting::op_split)],
    },
    IdentityDescriptor {
        id: "thm-2-2",
        anchor: "op_{2;1}(n) = pbar(n)/2",
        checks: &[enumerative(NO_PARAMS, "pbar from the generating function", counting::thm_2_2)],
    },
    IdentityDescriptor {
        id: "thm-2-3",
        anchor: "op_{2;1}(n;1) = pbar(n)/2",
        checks: &[enumerative(NO_PARAMS, "pbar from the generating function", counting::thm_2_3)],
    },
    IdentityDescriptor {
        id: "thm-2-4",
        anchor: "(-1)^{min(|m|;k)} sum_{j=m}^{k} (-1)^j pbar(n-j^2) = op(n;a or a+1) + (-1)^{m+k} op(n;b+1) with a = min(|m|;|k|) and b = max(|m|;|k|)",
        checks: &[Check { m_le_k: true, ..enumerative(M_K, ENUM_OVER, counting::thm_2_4) }],
    },
    IdentityDescriptor {
        id: "cor-2-5-first",
        anchor: "(-1)^k (pbar(n) + 2 sum_{j<=k} (-1)^j pbar(n-j^2)) = 2 op_{2;1}(n;k+1)",
        checks: &[enumerative(K1_4, ENUM_OVER, counting::cor_2_5_first)],
    },
    IdentityDescriptor {
        id: "cor-2-5-second",
        anchor: "(-1)^{k-1} (pbar(n) + 2 sum_{j<=k} (-1)^j pbar(n-j^2)) + pbar(n-k^2) = op_{2;1}(n;k) - op_{2;1}(n;k+1)",
        checks: &[enumerative(K1_4, ENUM_OVER, counting::cor_2_5_second)],
    },
    IdentityDescriptor {
        id: "gen-op",
        anchor: "sum_n op_{2;1}(n;k+1) q^n = (-q;q)_inf/(q;q)_inf sum_j q^{(k+2j+1)^2}(1-q^{2k+4j+3})",
        checks: &[
            enumerative(K0_4, PRODUCT, counting::gen_op),
            series(K0_4, "leading exponents as sums of odd numbers", |p, n| analytic::gen_op(k_of(p), n)),
        ],
    },
    IdentityDescriptor {
        id: "cor-2-6",
        anchor: "pbar-series times (1 + 2 sum_{j<=k} (-1)^j q^{j^2}) = 1 + 2(-1)^k pbar-series times sum_j q^{(k+2j+1)^2}(1-q^{2k+4j+3})",
        checks: &[series(K1_8, "odd-square sum", |p, n| analytic::cor_2_6(k_of(p), n))],
    },
    IdentityDescriptor {
        id: "cor-2-7",
        anchor: "op_{2;1}(n;k+1) = Mbar_k(n)/2 and op_{2;1}(n;k) - op_{2;1}(n;k+1) = Nbar_k(n)",
        checks: &[enumerative(K1_4, ENUM_OVER, counting::cor_2_7)],
    },
    IdentityDescriptor {
        id: "cor-2-9",
        anchor: "sum_n (Mbar_{k-1}(n) - Mbar_k(n)) q^n = 2 (-q;q)_k/(q;q)_{k-1} sum_j q^{k(k+j)} (-q^{k+j+1};q)_inf/(q^{k+j+1};q)_inf",
        checks: &[
            enumerative(K1_4, PRODUCT, counting::cor_2_9),
            Check {
                params: K1_8,
                ..series(K1_8, "difference of Mbar generating functions", |p, n| analytic::cor_2_9(k_of(p), n))
            },
        ],
    },
    IdentityDescriptor {
        id: "euler-odd-distinct",
        anchor: "Euler: 1/(q;q^2)_inf = (-q;q)_inf",
        checks: &[series(NO_PARAMS, "distinct-part product", |_, n| analytic::euler_odd_distinct(n))],
    },
    IdentityDescriptor {
        id: "lemma-4-1",
        anchor: "pbar(n-j^2) = op_{2;1}(n;j) + op_{2;1}(n;j+1) by inserting the parts 1;3;...;2j-1",
        checks: &[enumerative(J1_4, ENUM_OVER, counting::lemma_4_1)],
    },
    IdentityDescriptor {
        id: "sec3-bijection",
        anchor: "phi maps A(n) onto B(n-1) and C(n-1) is nonempty exactly for n >= 4; hence pbar(n) <= 2 pbar(n-1)",
        checks: &[enumerative(NO_PARAMS, "exhaustive audit of phi and its inverse", counting::sec3_bijection)],
    },
    IdentityDescriptor {
        id: "sec5-main",
        anchor: "difference of the Mbar_{k-1} and Mbar_k sums equals (-q;q)_k/(q;q)_{k-1} sum_j q^{k(k+j)} (-q^{k+j+1};q)_inf/(q^{k+j+1};q)_inf",
        checks: &[series(K1_10, "Pochhammer ratio sum", |p, n| analytic::sec5_main(k_of(p), n))],
    },
    IdentityDescriptor {
        id: "sec5-reduced",
        anchor: "(1-q^k) S_{k;0} - (1+q^k) S'_k = (1-q^{2k}) S_{k;1} after clearing the finite products",
        checks: &[series(K1_10, "Pochhammer ratio sum", |p, n| analytic::sec5_reduced(k_of(p), n))],
    },
];

pub fn list_identities() -> &'static [IdentityDescriptor] {
    REGISTRY
}
