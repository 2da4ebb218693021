pub mod algebra;
pub mod bandform;
pub mod cli;
pub mod diagram;
pub mod invariants;
pub mod obstruct;
pub mod presets;

pub use algebra::{AbelianInvariants, Inertia, LaurentPoly, Matrix, SymMatrix};
pub use bandform::{BandSurface, SurfaceShape};
pub use diagram::CrossingList;

/// Arbitrary-precision integer used by the concrete aliases below.
pub type Integer = num_bigint::BigInt;
pub type Laurent = LaurentPoly<Integer>;
pub type IntMatrix = Matrix<Integer>;
pub type IntSymMatrix = SymMatrix<Integer>;
