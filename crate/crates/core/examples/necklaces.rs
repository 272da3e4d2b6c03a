// SPDX-License-Identifier: Apache-2.0

//! Orbit representatives of weight-w monomials under rotation.

use rotbent::rotsym::enumerate_orbit_reps;

fn main() -> rotbent::Result<()> {
    for n in [6, 8, 10] {
        for w in 2..=4 {
            let reps = enumerate_orbit_reps(n, w)?;
            let terms: Vec<String> = reps.iter().map(|m| m.term()).collect();
            println!("n={n:<2} w={w} {:>3} orbits: {}", reps.len(), terms.join(" "));
        }
    }
    Ok(())
}
