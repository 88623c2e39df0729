//! Normal bases of cyclic extensions of finite fields built from the three
//! one-dimensional affine algebraic groups (additive group, multiplicative
//! group, Lucas torus), with a multiplication algorithm that costs five
//! cyclic convolutions.
//!
//! ```
//! use nbasis::ff::{Field, FieldSpec};
//! use nbasis::kummer::{build_kummer_context, KummerParams};
//! use nbasis::engine::nb_multiply;
//! use nbasis::oracle::oracle_multiply;
//!
//! let k = FieldSpec::prime(61).unwrap();
//! let params = KummerParams::with_a(&k, 6, 10, k.from_u64(2)).unwrap();
//! let ctx = build_kummer_context(&params).unwrap();
//! let x = ctx.element_u64(&[1, 3, 1, 1, 2, 1]).unwrap();
//! let y = ctx.element_u64(&[2, 1, 1, 4, 2, 1]).unwrap();
//! assert_eq!(nb_multiply(&ctx, &x, &y).unwrap(), oracle_multiply(&ctx, &x, &y).unwrap());
//! ```

pub mod additive;
pub mod bench;
pub mod cli;
pub mod context_file;
pub mod convolution;
pub mod engine;
pub mod error;
pub mod ff;
pub mod kummer;
pub mod lucas;
pub mod oracle;

pub use error::{Error, Result};
