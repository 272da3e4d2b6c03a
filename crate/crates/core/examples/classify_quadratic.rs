// SPDX-License-Identifier: Apache-2.0

//! Quadratic homogeneous rotation-symmetric bent functions via gcd with x^n + 1.

use rotbent::gf2poly::{classify_degree2, rots_quadratic_poly};

fn main() -> rotbent::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let bent = classify_degree2(n)?;
    for f in &bent {
        println!("{:<28} p(x) = {}", f.to_string(), rots_quadratic_poly(f)?);
    }
    println!("{} of {} candidates are bent", bent.len(), (1u64 << (n / 2)) - 1);
    Ok(())
}
