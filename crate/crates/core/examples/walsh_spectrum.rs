// SPDX-License-Identifier: Apache-2.0

//! Walsh spectrum and flatness of a few quadratic rotation-symmetric functions.

use rotbent::walsh::{is_bent, walsh_spectrum};
use rotbent::Sanf;

fn main() -> rotbent::Result<()> {
    for (n, text) in [(2, "x1x2"), (4, "x1x3"), (6, "x1x2"), (6, "x1x4"), (8, "x1x5")] {
        let f = Sanf::parse(n, text)?;
        let tt = f.truth_table()?;
        let spec = walsh_spectrum(&tt);
        let mut magnitudes: Vec<i32> = spec.values().iter().map(|v| v.abs()).collect();
        magnitudes.sort_unstable();
        magnitudes.dedup();
        println!(
            "n={n:<2} {:<8} |W| in {:?}  parseval={}  bent={}",
            f.to_string(),
            magnitudes,
            spec.parseval_sum(),
            is_bent(&tt)
        );
    }
    Ok(())
}
