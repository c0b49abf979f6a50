//! Generators of the automorphism group acting on S_H: the walls of the
//! fundamental domain, the involution crossing each wall, and the height
//! reduction that moves any isometry into the finite symmetry group.

pub mod generators;
pub mod isometry;
pub mod reduce;
pub mod walls;

pub use generators::{catalog, Catalog, Perm5, WallGenerator};
pub use isometry::{discriminant_action, DiscriminantAction, Isometry};
pub use reduce::{parse_word, reduce_height, Reduction};
pub use walls::{classify_wall_root, walls, WallCase, WallRoot};
