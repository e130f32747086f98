//! Exact computational algebra for the exceptional Lie superalgebra E(5,10).

pub mod exact;
pub mod sl5rep;
pub mod superalgebra;
pub mod verma;
pub mod singular;
pub mod bound;
pub mod pseudo;
pub mod checks;
