//! Finite-group data, the set M(Γ) and the nonabelian Fourier pairing.

pub mod cyclotomic;
pub mod group;
pub mod pairing;
pub mod table;

pub use cyclotomic::{Cyclotomic, CyclotomicRepr, RootSum};
pub use group::{catalog_group, Group, GroupError, Perm, CATALOG};
pub use pairing::{fourier_matrix, fourier_matrix_checks, fourier_pairing, m_set, FourierChecks, MPair};
pub use table::{ConjugacyClass, GroupTable, OrthogonalityReport};
