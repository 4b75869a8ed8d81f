//! Zeta polynomials of linear codes and function fields, computed exactly.
//!
//! The crate enumerates weight distributions of small linear codes over
//! GF(q), converts them to the zeta polynomial `P_C` and the reduced
//! polynomial `D_C`, tests formal self-duality and the Riemann hypothesis
//! analogue, and analyses L-polynomials of function fields.

pub mod code;
pub mod combin;
pub mod field;
pub mod fixtures;
pub mod poly;
pub mod zeta;
pub mod duality;
pub mod rha;
pub mod funcfield;
pub mod cli;
