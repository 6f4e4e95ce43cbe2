mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use seqsim::distance::{distance_matrix, DistanceMatrix, DistanceOptions, Method, MethodParams, Metric};

const COMBOS: [(Method, Metric); 6] = [
    (Method::DCurve, Metric::Euclidean),
    (Method::DCurve, Metric::OneMinusPcc),
    (Method::Worm, Metric::Euclidean),
    (Method::Digraph, Metric::Euclidean),
    (Method::Digraph, Metric::OneMinusCosine),
    (Method::Digraph, Metric::OneMinusPcc),
];

fn options(workers: usize) -> DistanceOptions {
    DistanceOptions {
        workers: Some(workers),
        cache: true,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn matrix_axioms_and_worker_independence(seed in any::<u64>(), n in 2usize..8) {
        let mut rng = StdRng::seed_from_u64(seed);
        let base = common::random_dna(&mut rng, "root", 80);
        let seqs: Vec<_> = (0..n)
            .map(|i| common::mutate(&mut rng, &base, &format!("s{i}"), 0.15))
            .collect();
        let params = MethodParams::default();
        for (method, metric) in COMBOS {
            let m = match distance_matrix(&seqs, method, metric, &params, options(1)) {
                Ok(m) => m,
                // a degenerate random descriptor (zero variance) is a data error, not a bug
                Err(_) => continue,
            };
            for i in 0..n {
                prop_assert_eq!(m.get(i, i), 0.0);
                for j in 0..n {
                    prop_assert_eq!(m.get(i, j), m.get(j, i));
                    prop_assert!(m.get(i, j).is_finite() && m.get(i, j) >= 0.0);
                }
            }
            let parallel = distance_matrix(&seqs, method, metric, &params, options(4)).unwrap();
            prop_assert_eq!(parallel.to_csv(), m.to_csv());
            let uncached = distance_matrix(&seqs, method, metric, &params, DistanceOptions { workers: Some(3), cache: false }).unwrap();
            prop_assert_eq!(uncached.to_csv(), m.to_csv());
            prop_assert_eq!(DistanceMatrix::from_json(&m.to_json()).unwrap(), m.clone());
            prop_assert_eq!(DistanceMatrix::from_csv(m.to_csv().as_bytes()).unwrap(), m);
        }
    }
}

#[test]
fn unsupported_combinations_rejected() {
    let mut rng = StdRng::seed_from_u64(1);
    let seqs: Vec<_> = (0..3)
        .map(|i| common::random_dna(&mut rng, &format!("s{i}"), 30))
        .collect();
    let params = MethodParams::default();
    for (method, metric) in [
        (Method::DCurve, Metric::OneMinusCosine),
        (Method::Worm, Metric::OneMinusCosine),
        (Method::Worm, Metric::OneMinusPcc),
    ] {
        assert!(distance_matrix(&seqs, method, metric, &params, options(1)).is_err());
    }
}

#[test]
fn invalid_matrices_rejected() {
    let labels = vec!["a".to_string(), "b".to_string()];
    let bad = [
        vec![vec![0.0, 1.0], vec![2.0, 0.0]],
        vec![vec![1.0, 1.0], vec![1.0, 0.0]],
        vec![vec![0.0, -1.0], vec![-1.0, 0.0]],
        vec![vec![0.0, f64::NAN], vec![f64::NAN, 0.0]],
        vec![vec![0.0, 1.0]],
    ];
    for rows in bad {
        assert!(DistanceMatrix::from_rows(labels.clone(), rows).is_err());
    }
    let dup = vec!["a".to_string(), "a".to_string()];
    assert!(DistanceMatrix::from_rows(dup, vec![vec![0.0, 1.0], vec![1.0, 0.0]]).is_err());
}

#[test]
fn duplicate_record_ids_rejected() {
    let mut rng = StdRng::seed_from_u64(2);
    let seqs: Vec<_> = (0..2).map(|_| common::random_dna(&mut rng, "same", 30)).collect();
    assert!(distance_matrix(
        &seqs,
        Method::Worm,
        Metric::Euclidean,
        &MethodParams::default(),
        options(1)
    )
    .is_err());
}
