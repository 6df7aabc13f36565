use proptest::prelude::*;
use voteselect::axioms::{check_l_ejr, check_l_pjr, check_safe_trace};
use voteselect::baselines::{select_cnn, select_enn, select_icf, select_lsbo, select_lssm, select_noapproved, select_random};
use voteselect::classify::{check_theorem_pjr_knn, evaluate_accuracy, KnnModel};
use voteselect::data::{distance_matrix, make_folds, normalize_minmax};
use voteselect::harness::{load_bundled, run_experiment, ExperimentConfig};
use voteselect::localset::{local_set, nearest_enemy};
use voteselect::pca::pca_project;
use voteselect::rational::{ceil_times, int, ratio};
use voteselect::voting::{gamma, plausibility, run_s2ejr, run_sejr, run_seqphragmen, Step, StepDetail};
use voteselect::{BallotVariant, Dataset, Election, LocalSetTable, Rational, RuleId, RuleTrace};

fn dataset_strategy(max_n: usize, dims: usize, classes: usize) -> impl Strategy<Value = Dataset> {
    grid_dataset(2, max_n, dims, classes)
}

/// Continuous points, so distance ties have probability zero.
fn generic_dataset(max_n: usize) -> impl Strategy<Value = Dataset> {
    (5..=max_n)
        .prop_flat_map(|n| {
            (
                prop::collection::vec(prop::collection::vec(-10.0f64..10.0, 2), n),
                prop::collection::vec(0..2usize, n),
            )
        })
        .prop_filter_map("needs two classes", |(features, labels)| {
            let names: Vec<String> = labels.iter().map(|l| format!("c{l}")).collect();
            let ds = Dataset::from_rows(features, &names).unwrap();
            (ds.distinct_label_count() == 2).then_some(ds)
        })
}

/// Points on a half-unit grid, so distance ties are common.
fn grid_dataset(min_n: usize, max_n: usize, dims: usize, classes: usize) -> impl Strategy<Value = Dataset> {
    (min_n..=max_n).prop_flat_map(move |n| {
        (
            prop::collection::vec(prop::collection::vec(-5i32..=5, dims), n),
            prop::collection::vec(0..classes, n),
        )
            .prop_map(|(points, labels)| {
                let features = points
                    .into_iter()
                    .map(|p| p.into_iter().map(|x| x as f64 * 0.5).collect())
                    .collect();
                let names: Vec<String> = labels.iter().map(|l| format!("c{l}")).collect();
                Dataset::from_rows(features, &names).unwrap()
            })
    })
}

/// At least two classes, so every instance has an enemy.
fn two_class_dataset(max_n: usize, dims: usize) -> impl Strategy<Value = Dataset> {
    grid_dataset(5, max_n, dims, 3).prop_filter("needs two classes", |ds| ds.distinct_label_count() >= 2)
}

fn election_strategy() -> impl Strategy<Value = Election> {
    (1..=8usize, 1..=8usize).prop_flat_map(|(n, m)| {
        (
            prop::collection::vec(prop::collection::vec(any::<bool>(), m), n),
            prop::sample::select(vec![(1, 4), (1, 2), (3, 4), (1, 1), (3, 2), (2, 1)]),
        )
            .prop_map(move |(rows, (a, b))| {
                let ballots = rows
                    .into_iter()
                    .map(|row| (0..m).filter(|&c| row[c]).collect())
                    .collect();
                Election::new(m, ballots, ratio(a, b), None).unwrap()
            })
    })
}

fn step_value(step: &Step) -> Rational {
    match &step.detail {
        StepDetail::Plausibility(p) => int(*p),
        StepDetail::EqualShares { gamma, .. } => gamma.clone(),
        StepDetail::Phragmen { score, .. } => score.clone(),
        StepDetail::Fallback { approvals } => int(*approvals),
    }
}

/// Rule values of a trace in step order (plausibility, payment or load).
fn values(trace: &RuleTrace) -> Vec<Rational> {
    trace.steps.iter().map(step_value).collect()
}

/// Every step's winner was the only candidate reaching the optimum.
fn no_ties(rule: RuleId, e: &Election, trace: &RuleTrace) -> bool {
    let mut w: Vec<usize> = Vec::new();
    let mut budgets = vec![int(1); e.num_voters()];
    let mut loads = vec![int(0); e.num_voters()];
    for step in &trace.steps {
        let target = step_value(step);
        let ties = (0..e.num_candidates())
            .filter(|c| !w.contains(c))
            .filter_map(|c| match rule {
                RuleId::Sejr => Some(int(plausibility(c, &w, e, None))),
                RuleId::S2ejr => Some(int(plausibility(c, &w, e, Some(2)))),
                RuleId::EqualShares => {
                    let mine: Vec<&Rational> = e.approvers(c).iter().map(|&i| &budgets[i]).collect();
                    gamma(&mine, &e.price())
                }
                RuleId::SeqPhragmen => (!e.approvers(c).is_empty()).then(|| {
                    let total: Rational = e.approvers(c).iter().map(|&i| &loads[i]).sum();
                    (total + int(1)) / int(e.approvers(c).len())
                }),
            })
            .filter(|v| *v == target)
            .count();
        if ties > 1 {
            return false;
        }
        match &step.detail {
            StepDetail::EqualShares { budgets: b, .. } => budgets = b.clone(),
            StepDetail::Phragmen { loads: l, .. } => loads = l.clone(),
            _ => {}
        }
        w.push(step.candidate);
    }
    true
}

fn permute_candidates(e: &Election, perm: &[usize]) -> Election {
    let ballots = e
        .ballots()
        .iter()
        .map(|b| b.iter().map(|&c| perm[c]).collect())
        .collect();
    Election::new(e.num_candidates(), ballots, e.q().clone(), e.explicit_t_int()).unwrap()
}

fn permute_voters(e: &Election, perm: &[usize]) -> Election {
    let mut ballots = vec![Vec::new(); e.num_voters()];
    for (i, b) in e.ballots().iter().enumerate() {
        ballots[perm[i]] = b.clone();
    }
    Election::new(e.num_candidates(), ballots, e.q().clone(), e.explicit_t_int()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distance_matrix_is_a_metric(ds in dataset_strategy(30, 3, 2)) {
        let dm = distance_matrix(&ds);
        let n = ds.len();
        for i in 0..n {
            prop_assert_eq!(dm.get(i, i), 0.0);
            for j in 0..n {
                prop_assert_eq!(dm.get(i, j), dm.get(j, i));
                for k in 0..n {
                    prop_assert!(dm.get(i, k) <= dm.get(i, j) + dm.get(j, k) + 1e-12);
                }
            }
        }
    }

    #[test]
    fn folds_partition_indices(ds in dataset_strategy(60, 1, 2), k in 2usize..=10, seed in any::<u64>()) {
        prop_assume!(k <= ds.len());
        let folds = make_folds(&ds, k, seed).unwrap();
        let mut seen = vec![0; ds.len()];
        for f in 0..k {
            for i in folds.members(f) {
                seen[i] += 1;
            }
            let mut both = folds.members(f);
            both.extend(folds.complement(f));
            both.sort_unstable();
            prop_assert_eq!(both, (0..ds.len()).collect::<Vec<_>>());
        }
        prop_assert!(seen.iter().all(|&s| s == 1));
    }

    #[test]
    fn pca_keeps_total_variance(ds in dataset_strategy(25, 3, 2)) {
        let var = |xs: &[f64]| {
            let m = xs.iter().sum::<f64>() / xs.len() as f64;
            xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() - 1) as f64
        };
        let total: f64 = (0..3)
            .map(|j| var(&ds.instances().iter().map(|i| i.features[j]).collect::<Vec<_>>()))
            .sum();
        for dims in 1..=3 {
            let rows = pca_project(&ds, dims).unwrap();
            let projected: f64 = (0..dims)
                .map(|d| var(&rows.iter().map(|r| r.coords[d]).collect::<Vec<_>>()))
                .sum();
            prop_assert!(projected <= total * (1.0 + 1e-9) + 1e-12);
            if dims == 3 {
                prop_assert!((projected - total).abs() <= 1e-9 * total.max(1.0));
            }
        }
    }

    #[test]
    fn normalize_is_idempotent(ds in dataset_strategy(20, 3, 2)) {
        let once = normalize_minmax(&ds);
        let twice = normalize_minmax(&once);
        for (a, b) in once.instances().iter().zip(twice.instances()) {
            prop_assert_eq!(&a.features, &b.features);
        }
    }

    #[test]
    fn local_sets_match_double_loop(ds in two_class_dataset(50, 2)) {
        let dm = distance_matrix(&ds);
        let table = LocalSetTable::new(&ds, &dm).unwrap();
        let included = table.ballots(BallotVariant::Included);
        let excluded = table.ballots(BallotVariant::Excluded);
        for i in 0..ds.len() {
            let enemy = (0..ds.len())
                .filter(|&j| ds.label(j) != ds.label(i))
                .map(|j| dm.get(i, j))
                .fold(f64::INFINITY, f64::min);
            prop_assert_eq!(nearest_enemy(i, &ds, &dm).unwrap().distance, enemy);
            let naive: Vec<usize> = (0..ds.len()).filter(|&j| dm.get(i, j) < enemy).collect();
            prop_assert_eq!(local_set(i, &ds, &dm).unwrap(), naive.clone());
            prop_assert_eq!(naive.contains(&i), enemy > 0.0);
            prop_assert!(naive.iter().all(|&j| ds.label(j) == ds.label(i)));
            let without: Vec<usize> = included[i].iter().copied().filter(|&j| j != i).collect();
            prop_assert_eq!(&excluded[i], &without);
        }
    }

    #[test]
    fn rules_are_deterministic(e in election_strategy()) {
        for rule in [RuleId::Sejr, RuleId::S2ejr, RuleId::EqualShares] {
            prop_assert_eq!(rule.run(&e).unwrap(), rule.run(&e).unwrap());
        }
    }

    #[test]
    fn equal_shares_budgets(e in election_strategy()) {
        let (committee, trace) = RuleId::EqualShares.run(&e).unwrap();
        prop_assume!(!committee.fallback);
        let mut before = vec![int(1); e.num_voters()];
        for step in &trace.steps {
            let StepDetail::EqualShares { gamma, budgets } = &step.detail else {
                panic!("unexpected step");
            };
            let spent: Rational = before.iter().sum::<Rational>() - budgets.iter().sum::<Rational>();
            prop_assert_eq!(spent, e.price());
            for i in 0..e.num_voters() {
                prop_assert!(budgets[i] <= before[i]);
                if !e.approves(i, step.candidate) {
                    prop_assert_eq!(&budgets[i], &before[i]);
                } else {
                    let expected = if before[i] <= *gamma { int(0) } else { &before[i] - gamma };
                    prop_assert_eq!(&budgets[i], &expected);
                }
            }
            before = budgets.clone();
        }
        let report = check_safe_trace(&trace, &e).unwrap();
        prop_assert!(report.all_safe() && report.lemma2_holds(), "{}", report);
    }

    #[test]
    fn sejr_stops_only_when_nothing_is_plausible(e in election_strategy()) {
        for (rule, cap) in [(RuleId::Sejr, None), (RuleId::S2ejr, Some(2))] {
            let (committee, _) = if cap.is_none() { run_sejr(&e) } else { run_s2ejr(&e) };
            if committee.fallback {
                for c in 0..e.num_candidates() {
                    prop_assert_eq!(plausibility(c, &[], &e, cap), 0);
                }
                continue;
            }
            let w = committee.sorted();
            for c in (0..e.num_candidates()).filter(|c| !w.contains(c)) {
                prop_assert_eq!(plausibility(c, &w, &e, cap), 0, "{}", rule);
            }
        }
        let (c2, _) = run_s2ejr(&e);
        prop_assert!(c2.len() <= ceil_times(e.q(), e.num_voters()));
    }

    #[test]
    fn seqphragmen_loads(e in election_strategy()) {
        prop_assume!(e.t_int() >= 1 && e.t_int() <= e.num_candidates());
        let (_, trace) = run_seqphragmen(&e, true).unwrap();
        let mut max_load = int(0);
        let mut last = int(0);
        for step in &trace.steps {
            let StepDetail::Phragmen { score, loads } = &step.detail else {
                panic!("unexpected step");
            };
            for &i in e.approvers(step.candidate) {
                prop_assert_eq!(&loads[i], score);
            }
            let m = loads.iter().max().unwrap().clone();
            prop_assert!(m >= max_load);
            prop_assert!(*score >= last);
            max_load = m;
            last = score.clone();
        }
    }

    #[test]
    fn relabelling_voters_changes_nothing(e in election_strategy(), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..e.num_voters()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let p = permute_voters(&e, &perm);
        for rule in [RuleId::Sejr, RuleId::S2ejr, RuleId::EqualShares] {
            let (a, ta) = rule.run(&e).unwrap();
            let (b, tb) = rule.run(&p).unwrap();
            prop_assert_eq!(a.members, b.members);
            prop_assert_eq!(values(&ta), values(&tb));
        }
    }

    #[test]
    fn relabelling_candidates_keeps_trace_values(e in election_strategy(), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..e.num_candidates()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let p = permute_candidates(&e, &perm);
        let mut rules = vec![RuleId::Sejr, RuleId::S2ejr, RuleId::EqualShares];
        if e.t_int() >= 1 && e.t_int() <= e.num_candidates() {
            rules.push(RuleId::SeqPhragmen);
        }
        for rule in rules {
            let (a, ta) = rule.run(&e).unwrap();
            let (b, tb) = rule.run(&p).unwrap();
            if !no_ties(rule, &e, &ta) || a.fallback {
                continue;
            }
            prop_assert_eq!(values(&ta), values(&tb), "{}", rule);
            let mapped: Vec<usize> = a.members.iter().map(|&c| perm[c]).collect();
            prop_assert_eq!(mapped, b.members);
        }
    }

    #[test]
    fn violations_revalidate_and_ejr_implies_pjr(e in election_strategy(), seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let w: Vec<usize> = (0..e.num_candidates()).filter(|_| rng.gen_bool(0.3)).collect();
        for ell in 1..=3 {
            let ejr = check_l_ejr(&w, &e, ell).unwrap();
            let pjr = check_l_pjr(&w, &e, ell).unwrap();
            if let Some(v) = &ejr {
                prop_assert!(v.revalidate(&w, &e), "{}", v);
            }
            if let Some(v) = &pjr {
                prop_assert!(v.revalidate(&w, &e), "{}", v);
                prop_assert!(ejr.is_some(), "PJR fails but EJR passes at {}", ell);
            }
        }
    }

    #[test]
    fn knn_guarantee_for_k_1_and_3(ds in two_class_dataset(40, 2)) {
        for k in [1, 3] {
            for rule in [RuleId::Sejr, RuleId::EqualShares] {
                let report = check_theorem_pjr_knn(&ds, rule, k).unwrap();
                prop_assert!(report.holds(), "{} K={}: {:?}", rule, k, report.failures);
                if !report.guaranteed.is_empty() {
                    let acc = evaluate_accuracy(&ds, &report.kept, &report.guaranteed, k).unwrap();
                    prop_assert_eq!(acc, 1.0);
                }
            }
        }
    }

    #[test]
    fn knn_is_deterministic(ds in dataset_strategy(30, 2, 3), k in prop::sample::select(vec![1usize, 3, 5])) {
        let model = KnnModel::new(&ds, (0..ds.len()).collect(), k).unwrap();
        for i in 0..ds.len() {
            prop_assert_eq!(model.predict_instance(i), model.predict_instance(i));
            prop_assert_eq!(model.predict(&ds.instance(i).features).unwrap(), model.predict_instance(i));
        }
    }

    #[test]
    fn selectors_return_sorted_subsets(ds in two_class_dataset(40, 2), seed in any::<u64>()) {
        let n = ds.len();
        let results = [
            select_random(&ds, 0.5, seed).unwrap(),
            select_noapproved(&ds).unwrap(),
            select_cnn(&ds).unwrap(),
            select_enn(&ds, 3).unwrap(),
            select_lssm(&ds).unwrap(),
            select_lsbo(&ds).unwrap(),
            select_icf(&ds, 3).unwrap(),
        ];
        for r in &results {
            prop_assert!(!r.kept.is_empty());
            prop_assert!(r.kept.windows(2).all(|w| w[0] < w[1]), "{}", r.method);
            prop_assert!(r.kept.iter().all(|&i| i < n));
            prop_assert_eq!(r.reduction(n), (n - r.kept.len()) as f64 / n as f64);
        }
        let cnn = &results[2].kept;
        let model = KnnModel::new(&ds, cnn.clone(), 1).unwrap();
        for i in (0..n).filter(|i| !cnn.contains(i)) {
            prop_assert_eq!(model.predict_instance(i), ds.label(i));
        }
    }

    #[test]
    fn enn_and_lssm_ignore_input_order(ds in generic_dataset(30), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut order: Vec<usize> = (0..ds.len()).collect();
        order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let shuffled = ds.subset(&order);
        for pick in [0, 1] {
            let run = |d: &Dataset| if pick == 0 { select_enn(d, 3).unwrap() } else { select_lssm(d).unwrap() };
            let (a, b) = (run(&ds), run(&shuffled));
            if a.emptied || b.emptied {
                continue;
            }
            let mut mapped: Vec<usize> = b.kept.iter().map(|&j| order[j]).collect();
            mapped.sort_unstable();
            prop_assert_eq!(a.kept, mapped);
        }
    }
}

#[test]
fn fold_reductions_and_identity() {
    let ds = load_bundled(&std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data"), "wine").unwrap();
    let cfg = ExperimentConfig::rule(RuleId::Sejr, ratio(1, 2), BallotVariant::Excluded);
    let r = run_experiment("wine", &ds, &cfg).unwrap();
    for f in &r.folds {
        assert_eq!(f.reduction(), 1.0 - f.kept as f64 / f.train_size as f64);
        assert!((0.0..1.0).contains(&f.reduction()));
    }
    let mean = r.folds.iter().map(|f| f.reduction()).sum::<f64>() / r.folds.len() as f64;
    assert_eq!(r.reduction, mean);
}

#[test]
fn every_fold_keeps_the_knn_guarantee() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    for name in ["iris", "wine", "glass"] {
        let ds = load_bundled(&dir, name).unwrap();
        let folds = make_folds(&ds, 10, 42).unwrap();
        for f in 0..10 {
            let train = ds.subset(&folds.complement(f));
            for rule in [RuleId::Sejr, RuleId::EqualShares] {
                let report = check_theorem_pjr_knn(&train, rule, 3).unwrap();
                assert!(report.holds(), "{name} fold {f} {rule}: {:?}", report.failures);
            }
        }
    }
}
