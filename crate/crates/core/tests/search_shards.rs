// SPDX-License-Identifier: Apache-2.0

use rotbent::search::{exhaustive_search, search_checkpointed, SearchMode, SearchTask, Shard};

fn names(task: &SearchTask) -> (Vec<String>, u64) {
    let r = exhaustive_search(task).unwrap();
    (r.bent_sanfs.iter().map(|s| s.to_string()).collect(), r.candidates_tested)
}

#[test]
fn shard_union_equals_whole_run() {
    for (n, d) in [(8, 2), (10, 2), (10, 3), (6, 3)] {
        let whole = names(&SearchTask::new(n, d));
        for total in [1, 2, 3, 7, 16] {
            let mut bent = Vec::new();
            let mut tested = 0;
            for i in 0..total {
                let (b, t) = names(&SearchTask::new(n, d).shard(Shard::new(i, total).unwrap()));
                bent.extend(b);
                tested += t;
            }
            assert_eq!((bent, tested), whole, "n={n} d={d} T={total}");
        }
    }
}

#[test]
fn modes_agree() {
    for (n, d) in [(8, 2), (10, 2), (8, 3)] {
        let full = names(&SearchTask::new(n, d).mode(SearchMode::Full));
        let fast = names(&SearchTask::new(n, d).mode(SearchMode::EarlyAbort));
        assert_eq!(full, fast);
    }
}

#[test]
fn checkpointed_run_matches_and_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.jsonl");
    let whole = names(&SearchTask::new(10, 2));
    let task = SearchTask::new(10, 2);
    let mut fresh = 0;
    let first = search_checkpointed(&task, &path, |_, resumed| fresh += !resumed as u32).unwrap();
    assert_eq!(fresh, 1);
    let mut resumed_count = 0;
    let second =
        search_checkpointed(&task, &path, |_, resumed| resumed_count += resumed as u32).unwrap();
    assert_eq!(resumed_count, 1);
    for r in [first, second] {
        let got: Vec<String> = r.bent_sanfs.iter().map(|s| s.to_string()).collect();
        assert_eq!((got, r.candidates_tested), whole);
    }
}

#[test]
fn shard_parse() {
    assert_eq!("2/5".parse::<Shard>().unwrap(), Shard::new(2, 5).unwrap());
    assert!("5/5".parse::<Shard>().is_err());
    assert!("1-5".parse::<Shard>().is_err());
    assert!(Shard::new(0, 0).is_err());
}
