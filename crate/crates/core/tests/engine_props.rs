use planecheck::engine::{check_axiom, run_suite, verify_witness, StructureHandle};
use planecheck::sampling::{SampleBounds, Stream};
use planecheck::{AxiomId, AxiomReport, ModelId, Status, Strategy, Vertex};
use proptest::prelude::*;

const MODELS: [ModelId; 5] = [
    ModelId::Pentaline,
    ModelId::Prism,
    ModelId::Gf5Mid,
    ModelId::Gf5Comp,
    ModelId::Punctured,
];

fn default_strategy(handle: &StructureHandle, seed: u64) -> Strategy {
    if handle.capabilities.enumerable {
        Strategy::Exhaustive
    } else {
        Strategy::Sampled { seed, samples: 200 }
    }
}

fn suite(model: ModelId, seed: u64) -> Vec<AxiomReport> {
    let handle = StructureHandle::new(model);
    let mut reports = run_suite(
        &handle,
        &handle.supported_axioms(),
        default_strategy(&handle, seed),
    );
    for r in &mut reports {
        r.elapsed_ms = 0;
    }
    reports
}

#[test]
fn every_failure_witness_reverifies() {
    for model in MODELS {
        for report in suite(model, 42) {
            if report.status == Status::Fails {
                let w = report.witness.as_ref().expect("failures carry a witness");
                assert!(
                    verify_witness(model, report.axiom, w).unwrap(),
                    "{model} {} witness {w} does not verify",
                    report.axiom
                );
            }
        }
    }
}

#[test]
fn reports_round_trip_through_json() {
    for model in MODELS {
        for report in suite(model, 3) {
            let text = serde_json::to_string(&report).unwrap();
            let back: AxiomReport = serde_json::from_str(&text).unwrap();
            assert_eq!(back, report);
        }
    }
}

#[test]
fn sampled_and_exhaustive_agree_on_finite_models() {
    for model in [ModelId::Gf5Mid, ModelId::Gf5Comp, ModelId::Pentaline] {
        let handle = StructureHandle::new(model);
        for axiom in handle.supported_axioms() {
            let exhaustive = check_axiom(&handle, axiom, Strategy::Exhaustive).unwrap();
            let Ok(sampled) = check_axiom(
                &handle,
                axiom,
                Strategy::Sampled {
                    seed: 11,
                    samples: 300,
                },
            ) else {
                continue;
            };
            match sampled.status {
                Status::Fails => assert_eq!(exhaustive.status, Status::Fails, "{model} {axiom}"),
                Status::HoldsOnSample => {
                    assert_eq!(exhaustive.status, Status::Holds, "{model} {axiom}")
                }
                other => assert_eq!(other, exhaustive.status, "{model} {axiom}"),
            }
            if exhaustive.status == Status::Holds {
                assert!(
                    matches!(sampled.status, Status::HoldsOnSample | Status::Holds),
                    "{model} {axiom}"
                );
            }
        }
    }
}

#[test]
fn suites_are_reproducible() {
    for model in [ModelId::Prism, ModelId::Punctured] {
        assert_eq!(suite(model, 9), suite(model, 9));
    }
}

#[test]
fn suite_order_follows_request() {
    let handle = StructureHandle::new(ModelId::Gf5Mid);
    let axioms = [AxiomId::T1, AxiomId::B4, AxiomId::I1];
    let got: Vec<AxiomId> = run_suite(&handle, &axioms, Strategy::Exhaustive)
        .into_iter()
        .map(|r| r.axiom)
        .collect();
    assert_eq!(got, axioms);
}

#[test]
fn stream_is_pinned() {
    // regression pin: changing the generator or its keying breaks reproducibility
    let draws: Vec<usize> = {
        let mut s = Stream::new(42, 0, SampleBounds::default());
        (0..8).map(|_| s.below(5)).collect()
    };
    let again: Vec<usize> = {
        let mut s = Stream::new(42, 0, SampleBounds::default());
        (0..8).map(|_| s.below(5)).collect()
    };
    assert_eq!(draws, again);
    let other: Vec<usize> = {
        let mut s = Stream::new(42, 1, SampleBounds::default());
        (0..8).map(|_| s.below(5)).collect()
    };
    assert_ne!(draws, other);
}

#[test]
fn every_vertex_is_drawn_early() {
    let mut s = Stream::new(42, 0, SampleBounds::default());
    let mut seen = [false; 5];
    for _ in 0..100 {
        seen[s.vertex().index()] = true;
    }
    assert!(seen.iter().all(|&b| b), "{seen:?}");
    assert_eq!(Vertex::ALL.len(), 5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn witnesses_survive_a_round_trip(seed in any::<u64>()) {
        for report in suite(ModelId::Prism, seed) {
            if let Some(w) = report.witness {
                let text = serde_json::to_string(&w).unwrap();
                let back: planecheck::engine::Witness = serde_json::from_str(&text).unwrap();
                prop_assert_eq!(&back, &w);
                if report.status == Status::Fails {
                    prop_assert!(verify_witness(ModelId::Prism, report.axiom, &back).unwrap());
                }
            }
        }
    }

    #[test]
    fn sampled_checks_never_fail_holding_axioms(seed in any::<u64>()) {
        use AxiomId::*;
        let handle = StructureHandle::new(ModelId::Punctured);
        for axiom in [I1, I2, I3, I4, B1, B2, B3, T1] {
            let r = check_axiom(&handle, axiom, Strategy::Sampled { seed, samples: 50 }).unwrap();
            prop_assert_eq!(r.status, Status::HoldsOnSample, "{}", axiom);
        }
    }
}
