// SPDX-License-Identifier: Apache-2.0

//! Truth table, ANF and back; expansion of a SANF into its full rotation orbit.

use rotbent::{AnfForm, Sanf, TruthTable};

fn main() -> rotbent::Result<()> {
    let tt = TruthTable::from_bitstring("0001011101111110")?;
    let anf = AnfForm::from_truth_table(&tt);
    let terms: Vec<String> = anf.monomials().iter().map(|m| m.term()).collect();
    println!("{} -> {} (degree {:?})", tt.bitstring(), terms.join(" + "), anf.degree());
    assert_eq!(TruthTable::from_anf(&anf), tt);

    let f = Sanf::parse(6, "x1x2x4")?;
    let full = f.to_anf()?;
    let terms: Vec<String> = full.monomials().iter().map(|m| m.term()).collect();
    println!("{f} on 6 variables expands to {}", terms.join(" + "));
    Ok(())
}
