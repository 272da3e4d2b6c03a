// SPDX-License-Identifier: Apache-2.0

//! Analysis of homogeneous rotation-symmetric Boolean functions: Walsh and
//! `h_f` valuation bent tests, structural nonexistence checkers, the
//! `F_2[x]` classification of quadratic cases and an exhaustive search
//! harness.

pub mod boolfn;
pub mod cli;
pub mod error;
pub mod gf2poly;
pub mod hcoeff;
pub mod nonexistence;
pub mod rotsym;
pub mod search;
pub mod walsh;

pub use boolfn::{AnfForm, Degree, TruthTable};
pub use error::{Error, Result};
pub use gf2poly::GF2Poly;
pub use hcoeff::{HValue, Valuation};
pub use nonexistence::{NonexistenceReport, Verdict};
pub use rotsym::{Monomial, Sanf};
pub use walsh::WalshSpectrum;
