pub mod certify;
pub mod constructions;
pub mod graph;
pub mod kexpr;
pub mod recognition;
