//! Soft sets, mappings between soft classes, and a bounded exhaustive checker
//! for the laws those mappings satisfy.
//!
//! ```
//! use std::sync::Arc;
//! use softclass::{ClassMapping, Context, MapMode, ResultMode, SoftSet};
//!
//! let x = Arc::new(Context::new(["a", "b"], ["e1", "e2"]).unwrap());
//! let y = Arc::new(Context::new(["y"], ["f"]).unwrap());
//! let f = ClassMapping::new(&x, &y, [("a", "y"), ("b", "y")], [("e1", "f"), ("e2", "f")], MapMode::Strict).unwrap();
//! let s = SoftSet::new(&x, [("e1", vec!["a"]), ("e2", vec![])]).unwrap();
//! assert_eq!(f.image(&s, ResultMode::Raw).unwrap().to_string(), "{f={y}}");
//! ```

pub mod codec;
mod context;
pub mod demo;
mod error;
mod mapping;
pub mod oracle;
mod soft;
mod subset;

pub use context::Context;
pub use error::{Error, Result};
pub use mapping::{combine_pointwise, ClassMapping, CombineOp, MapMode, ResultMode};
pub use soft::SoftSet;
pub use subset::Subset;
