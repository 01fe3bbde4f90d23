//! Trace ideals of Hibi rings and stable set rings of finite posets.
//!
//! Given a poset, decide whether a monomial lies in the radical of the
//! trace (with a certificate or a witness), classify the rings as
//! Gorenstein, nearly Gorenstein or Gorenstein on the punctured spectrum,
//! and describe the non-Gorenstein locus by its minimal primes.

pub mod cone;
pub mod construct;
pub mod cycles;
pub mod error;
pub mod gen;
pub mod io;
pub mod linalg;
pub mod locus;
pub mod oracle;
pub mod poset;
pub mod trace;

pub use cone::{LatticePoint, Ring};
pub use error::{Error, Result};
pub use poset::{ExtendedElement, Extension, Poset, Warning};
pub use trace::Analysis;
