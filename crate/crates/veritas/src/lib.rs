//! Special functions of Jacobi, Gegenbauer, Legendre/Ferrers and Laguerre
//! type for complex degree, order and argument, together with an identity
//! catalog that verifies the relations among them numerically.

pub mod branch;
pub mod catalog;
pub mod confluent;
pub mod gamma;
pub mod geometry;
pub mod hyp;
pub mod gegenbauer;
pub mod jacobi;
pub mod laguerre;
pub mod legendre;
pub mod quad;
pub mod value;

pub use value::{ComplexValue, CutPoint, CutSide, EvalError, EvalResult};
