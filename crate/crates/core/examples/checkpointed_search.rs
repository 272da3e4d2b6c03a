// SPDX-License-Identifier: Apache-2.0

//! Sharded search with a JSON-lines checkpoint; a second pass resumes from it.

use rotbent::search::{search_checkpointed, SearchTask, Shard};

fn main() -> rotbent::Result<()> {
    let path = std::env::temp_dir().join("rotbent-example-checkpoint.jsonl");
    let _ = std::fs::remove_file(&path);
    for pass in 1..=2 {
        for i in 0..4 {
            let task = SearchTask::new(8, 2).shard(Shard::new(i, 4)?);
            let r = search_checkpointed(&task, &path, |rec, resumed| {
                println!(
                    "pass {pass} shard {}/{} resumed={resumed} bent={}",
                    rec.shard_index,
                    rec.shard_total,
                    rec.bent.len()
                );
            })?;
            println!("  {r}");
        }
    }
    print!("{}", std::fs::read_to_string(&path)?);
    std::fs::remove_file(&path)?;
    Ok(())
}
