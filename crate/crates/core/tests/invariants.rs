// SPDX-License-Identifier: Apache-2.0

use proptest::prelude::*;

use rotbent::gf2poly::{gf2_gcd, GF2Poly};
use rotbent::hcoeff::{h_all_from_spectrum, spectrum_from_h};
use rotbent::rotsym::{enumerate_orbit_reps, is_rotation_symmetric};
use rotbent::walsh::walsh_spectrum;
use rotbent::{AnfForm, Monomial, Sanf, TruthTable};

fn table(max_n: usize) -> impl Strategy<Value = TruthTable> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), 1 << n)
            .prop_map(move |bits| TruthTable::from_fn(n, |x| bits[x]).unwrap())
    })
}

fn sanf(n: usize) -> impl Strategy<Value = Sanf> {
    let pool: Vec<Monomial> = (1..=n).flat_map(|w| enumerate_orbit_reps(n, w).unwrap()).collect();
    let k = pool.len();
    proptest::collection::vec(any::<bool>(), k).prop_filter_map("empty", move |pick| {
        let reps: Vec<Monomial> = pool.iter().zip(&pick).filter(|(_, &p)| p).map(|(m, _)| *m).collect();
        Sanf::new(n, reps).ok()
    })
}

fn poly() -> impl Strategy<Value = GF2Poly> {
    proptest::collection::vec(0usize..40, 0..12).prop_map(GF2Poly::from_exponents)
}

proptest! {
    #[test]
    fn moebius_is_an_involution(tt in table(10)) {
        let anf = AnfForm::from_truth_table(&tt);
        prop_assert_eq!(TruthTable::from_anf(&anf), tt);
    }

    #[test]
    fn parseval(tt in table(10)) {
        let n = tt.n();
        prop_assert_eq!(walsh_spectrum(&tt).parseval_sum(), 1i64 << (2 * n));
    }

    #[test]
    fn h_and_spectrum_are_dual(f in sanf(6)) {
        let anf = f.to_anf().unwrap();
        let spec = walsh_spectrum(&f.truth_table().unwrap());
        let h = h_all_from_spectrum(&spec).unwrap();
        if anf.len() <= 24 {
            prop_assert_eq!(spectrum_from_h(anf.monomials(), 6).unwrap(), spec);
        }
        prop_assert_eq!(h[0], 1);
    }

    #[test]
    fn sanf_tables_are_rotation_symmetric(f in sanf(7)) {
        prop_assert!(is_rotation_symmetric(&f.truth_table().unwrap()));
        let again = Sanf::parse(7, &f.to_string()).unwrap();
        prop_assert_eq!(again, f);
    }

    #[test]
    fn canonical_rep_is_rotation_invariant(bits in 1u64..1 << 12, l in 0usize..12) {
        let u = Monomial::new(12, bits).unwrap();
        let c = u.canonical_rep().unwrap();
        prop_assert_eq!(u.rotate(l).canonical_rep().unwrap(), c);
        prop_assert!(c.get(1));
        prop_assert!(u.orbit().contains(&c));
    }

    #[test]
    fn division_identity(a in poly(), b in poly()) {
        if let Some((q, r)) = a.div_rem(&b) {
            prop_assert_eq!(&(&q * &b) + &r, a.clone());
            prop_assert!(r.degree() < b.degree());
        } else {
            prop_assert!(b.is_zero());
        }
    }

    #[test]
    fn gcd_divides_both(a in poly(), b in poly()) {
        if let Ok(g) = gf2_gcd(&a, &b) {
            prop_assert!(g.divides(&a) && g.divides(&b));
        } else {
            prop_assert!(a.is_zero() && b.is_zero());
        }
    }
}
