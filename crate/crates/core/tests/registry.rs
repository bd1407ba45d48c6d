//! Registry-wide checks at the default orders and ranges.

use overmex::harness::{verify, FailureKind, Job};
use overmex::{
    list_identities, plan_jobs, run_jobs, verify_inequality, verify_series, Enumerator, Form, ParamName, Params,
    Selection, Status,
};

fn k(v: i64) -> Params {
    Params::none().with(ParamName::K, v)
}

#[test]
fn theta_and_euler_to_order_200() {
    for id in ["gauss", "euler-odd-distinct"] {
        let r = verify_series(id, &Params::none(), 200).unwrap();
        assert_eq!(r.status, Status::Pass, "{id}: {:?}", r.first_mismatch);
    }
}

#[test]
fn reduced_identities_up_to_k_10() {
    for id in ["sec5-main", "sec5-reduced"] {
        for kv in 1..=10 {
            assert!(verify_series(id, &k(kv), 100).unwrap().passed(), "{id} k={kv}");
        }
    }
}

#[test]
fn series_checks_beyond_default_k() {
    // nothing in the constructions is specific to small k
    for d in list_identities() {
        if let Some(check) = d.check(Form::Series) {
            if check.params.iter().any(|p| p.name == ParamName::K) {
                for kv in [9, 12] {
                    let job = Job::new(d.id, Form::Series, k(kv), 150).unwrap();
                    assert!(verify(&job, &Enumerator::default()).unwrap().passed(), "{} k={kv}", d.id);
                }
            }
        }
    }
}

#[test]
fn inequality_grid_to_60() {
    for m in -4..=4 {
        for kv in m..=4 {
            let p = Params::none().with(ParamName::M, m).with(ParamName::K, kv);
            assert!(verify_inequality("ineq-m-k", &p, 60).unwrap().passed(), "m={m} k={kv}");
        }
    }
    for id in ["ineq-guo-zeng", "ineq-conj-1-5", "ineq-xyz"] {
        for kv in 1..=4 {
            assert!(verify_inequality(id, &k(kv), 60).unwrap().passed(), "{id} k={kv}");
        }
    }
}

#[test]
fn strictness_boundaries_are_tight() {
    // Subtracting 1 produces a sign failure exactly where the quantity is 0.
    // It is 0 for every n below (k+1)^2 and 2 at (k+1)^2 itself.
    let e = Enumerator::default();
    for kv in 1..=4 {
        let threshold = (kv + 1) * (kv + 1);
        let job = Job::new("ineq-guo-zeng", Form::Inequality, k(kv), threshold as usize + 2).unwrap();
        for n in 1..threshold {
            let m = verify(&job.clone().perturbed(n, -1), &e).unwrap().first_mismatch.unwrap();
            assert_eq!((m.index, m.kind), (n, FailureKind::Sign), "k={kv}");
        }
        assert!(verify(&job.clone().perturbed(threshold, -1), &e).unwrap().passed());
        let m = verify(&job.perturbed(threshold, -2), &e).unwrap().first_mismatch.unwrap();
        assert_eq!((m.index, m.kind), (threshold, FailureKind::Strictness));
    }
}

#[test]
fn default_run_passes_everywhere() {
    let selection = Selection { ids: None, ranges: Vec::new(), order: 100, n_max: 25 };
    let reports = run_jobs(&plan_jobs(&selection).unwrap(), &Enumerator::default()).unwrap();
    assert!(reports.len() > 200);
    for r in &reports {
        assert!(r.passed(), "{} [{}] {:?}", r.id, r.params, r.first_mismatch);
        assert_eq!(r.status == Status::Fail, r.first_mismatch.is_some());
    }
    let ids: std::collections::BTreeSet<&str> = reports.iter().map(|r| r.id).collect();
    assert_eq!(ids.len(), list_identities().len());
}
