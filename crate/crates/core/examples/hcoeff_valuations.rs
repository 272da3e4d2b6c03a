// SPDX-License-Identifier: Apache-2.0

//! Subset-sum coefficients h_f(u) by both routes and the valuation criterion.

use rotbent::hcoeff::{bent_by_valuation, h_direct, h_from_spectrum, valuation_condition_holds, HRoute};
use rotbent::walsh::walsh_spectrum;
use rotbent::{Monomial, Sanf};

fn main() -> rotbent::Result<()> {
    let f = Sanf::parse(6, "x1x2x3+x1x2x4")?;
    let anf = f.to_anf()?;
    let spec = walsh_spectrum(&f.truth_table()?);

    println!("f = {f} on 6 variables");
    for u in 0..64u64 {
        let u = Monomial::new(6, u)?;
        let direct = h_direct(anf.monomials(), &u)?;
        let spectral = h_from_spectrum(&spec, &u)?;
        assert_eq!(direct, spectral);
        if direct.value != 0 && !valuation_condition_holds(6, u.bits(), direct.valuation) {
            println!("  u={} h={} v2={}  violates the bound", u.bitstring(), direct.value, direct.valuation);
        }
    }
    println!("bent by valuation: {}", bent_by_valuation(&anf, HRoute::Auto)?);
    Ok(())
}
