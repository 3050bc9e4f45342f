pub mod f2;
pub mod symbols;
pub mod springer;
pub mod corpus;
pub mod families;
pub mod fourier;
pub mod exceptional;
pub mod report;
pub mod verify;
