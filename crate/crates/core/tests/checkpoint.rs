use reptree::search::{Checkpoint, CheckpointConfig, CHECKPOINT_HEADER};
use reptree::{explore, explore_with, Budget, ExploreOptions, FreenessSpec, SearchOutcome};

#[test]
fn interrupted_runs_resume_to_identical_stats() {
    let spec: FreenessSpec = "3/2 @ 2".parse().unwrap();
    let full = explore(3, &spec, Budget::unlimited()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.ckpt");

    let mut limit = 700;
    let mut resume = None;
    let mut stops = 0;
    let finished = loop {
        let opts = ExploreOptions {
            budget: Budget::nodes(limit),
            checkpoint: Some(CheckpointConfig {
                path: path.clone(),
                every: 250,
            }),
            resume: resume.take(),
            ..Default::default()
        };
        match explore_with(3, &spec, &opts).unwrap() {
            SearchOutcome::Finite(s) => break s,
            SearchOutcome::BudgetExceeded { nodes_visited, .. } => {
                assert_eq!(nodes_visited, limit);
                stops += 1;
                resume = Some(Checkpoint::read(&path).unwrap());
                limit += 700;
            }
        }
    };
    assert!(stops >= 3);
    assert_eq!(&finished, full.stats().unwrap());
}

#[test]
fn periodic_snapshots_are_resumable() {
    let spec: FreenessSpec = "8/5 @ 3".parse().unwrap();
    let full = explore(2, &spec, Budget::unlimited()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.ckpt");
    let opts = ExploreOptions {
        checkpoint: Some(CheckpointConfig {
            path: path.clone(),
            every: 1000,
        }),
        ..Default::default()
    };
    explore_with(2, &spec, &opts).unwrap();
    // the last periodic snapshot is mid-run; resuming it finishes the tree
    let ckpt = Checkpoint::read(&path).unwrap();
    assert!(ckpt.nodes_visited > 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with(&format!("{CHECKPOINT_HEADER}\n{{")));
    let opts = ExploreOptions {
        resume: Some(ckpt),
        ..Default::default()
    };
    assert_eq!(explore_with(2, &spec, &opts).unwrap(), full);
}

#[test]
fn snapshot_for_another_spec_is_rejected() {
    let spec: FreenessSpec = "3/2 @ 2".parse().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.ckpt");
    let opts = ExploreOptions {
        budget: Budget::nodes(50),
        checkpoint: Some(CheckpointConfig {
            path: path.clone(),
            every: 10,
        }),
        ..Default::default()
    };
    explore_with(3, &spec, &opts).unwrap();
    let ckpt = Checkpoint::read(&path).unwrap();
    let other: FreenessSpec = "3/2+ @ 2".parse().unwrap();
    let opts = ExploreOptions {
        resume: Some(ckpt.clone()),
        ..Default::default()
    };
    assert!(explore_with(3, &other, &opts).is_err());
    assert!(Checkpoint::from_text("RTCKPT 2\n{}").is_err());
    assert!(
        Checkpoint::from_text(&ckpt.to_text().replace("\"path\":\"0", "\"path\":\"1")).is_err()
    );
    assert_eq!(Checkpoint::from_text(&ckpt.to_text()).unwrap(), ckpt);
}

#[test]
fn sharded_runs_refuse_checkpoints() {
    let spec: FreenessSpec = "3/2 @ 2".parse().unwrap();
    let opts = ExploreOptions {
        shards: 2,
        checkpoint: Some(CheckpointConfig {
            path: "unused".into(),
            every: 10,
        }),
        ..Default::default()
    };
    assert!(explore_with(3, &spec, &opts).is_err());
}
