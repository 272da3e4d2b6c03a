// SPDX-License-Identifier: Apache-2.0

//! Exhaustive bent search over homogeneous SANFs: cargo run --release --example exhaustive_search -- 10 3

use rotbent::search::{exhaustive_search, SearchTask};

fn main() -> rotbent::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>());
    let n = args.next().and_then(Result::ok).unwrap_or(10);
    let d = args.next().and_then(Result::ok).unwrap_or(3);
    let result = exhaustive_search(&SearchTask::new(n, d))?;
    for f in &result.bent_sanfs {
        println!("{f}");
    }
    println!("n={n} d={d}: {} ({} orbits, {:?})", result, result.orbit_count, result.elapsed);
    Ok(())
}
