//! Linear codes over `Z_2m`, their Gray-map images and the formal duality
//! between `φ`-images of `(n, n2^k, n2^{k-2})*` codes and `Φ`-images of
//! 1'-perfect codes.
//!
//! Modules, bottom up: [`ring`] (residues, weights, words), [`zcode`]
//! (matrices and linear codes), [`bits`] (binary words and codes),
//! [`gray`] (`φ`, `Φ`), [`weights`] (enumerators and transforms),
//! [`constructions`] (`B_I`, `H_I`, `D_I`), [`verify`], [`format`] and
//! [`reproduce`].

pub mod bits;
pub mod constructions;
pub mod error;
pub mod format;
pub mod gray;
pub mod reproduce;
pub mod ring;
pub mod verify;
pub mod weights;
pub mod zcode;

pub use bits::{BinaryCode, BitWord};
pub use constructions::{build_bi, code_di, code_hi, z24_examples, TypeProfile};
pub use error::{Error, Result};
pub use gray::{image, phi, phi_cap, GrayMap, OrderedHadamard, PerfectPartition};
pub use ring::{Metric, Modulus, RingWord};
pub use verify::VerificationReport;
pub use weights::{HammingWe, SymmetrizedWe};
pub use zcode::{LinearZCode, ZMatrix, DEFAULT_BUDGET};
