pub mod algebra;
pub mod error;
pub mod family;
pub mod hopf;
pub mod integrals;
pub mod json;
pub mod linalg;
pub mod monomial;
pub mod par;
pub mod presets;
pub mod quotients;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{BaseField, Field, FieldSpec, Scalar, DEFAULT_ORDER_CAP};
