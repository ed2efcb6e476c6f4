//! Exact computations with Gel'fand-Dorfman bialgebras over ℚ: axiom checks,
//! unified products and extending datums, codimension-one (flag) extensions
//! and their equivalence, and the quadratic λ-bracket cross-check.

/// `vsum!(t0, + t1, - t2, ...)` folds owned `Vector` terms left to right.
macro_rules! vsum {
    ($first:expr $(, $sign:tt $e:expr)* $(,)?) => {{
        let mut acc: $crate::linalg::Vector = $first;
        $( vsum!(@op acc $sign $e); )*
        acc
    }};
    (@op $acc:ident + $e:expr) => { $acc = &$acc + &$e; };
    (@op $acc:ident - $e:expr) => { $acc = &$acc - &$e; };
}

pub mod algebras;
pub mod catalog;
pub mod conformal;
pub mod extending;
pub mod flag;
pub mod error;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use linalg::{LinearMap, Vector};
pub use report::{ValidationReport, Violation};
pub use scalar::Scalar;
pub use tensor::BilinearMap;
