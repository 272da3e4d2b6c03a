// SPDX-License-Identifier: Apache-2.0

//! Which structural checker settles which cubic function.

use rotbent::nonexistence::{check_all, verify_witness};
use rotbent::Sanf;

fn main() -> rotbent::Result<()> {
    let cases = [
        (10, "x1x2x3+x1x2x4"),
        (10, "x1x2x3"),
        (12, "x1x2x3"),
        (16, "x1x3x5"),
        (10, "x1x2x4"),
    ];
    for (n, text) in cases {
        let f = Sanf::parse(n, text)?;
        println!("{f}  (n={n})");
        for r in check_all(&f)? {
            let verified = if r.has_witness() { verify_witness(&f, &r)?.to_string() } else { "-".into() };
            println!(
                "  {:<11} {:<13} rule={:<13} witness={:<18} verified={verified}",
                r.checker,
                r.verdict.to_string(),
                r.rule.as_deref().unwrap_or("-"),
                r.witness_u0.map(|u| u.bitstring()).unwrap_or_else(|| "-".into()),
            );
        }
    }
    Ok(())
}
