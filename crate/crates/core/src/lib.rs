//! Exact solver for "reverse the triangle" style coin puzzles.
//!
//! Coins sit on the triangular lattice. Flipping a shape costs one move per
//! coin that cannot stay where it is, so the minimum move count follows from
//! the largest overlap between the shape and a translate of its flipped
//! image. [`oracle::solve`] finds that overlap by exhaustive search, and
//! [`formulas`] holds the closed forms it is checked against.
//!
//! ```
//! use coinflip::{oracle::solve, shapes::triangle_up, FlipKind};
//!
//! let triangle = triangle_up(4).unwrap();
//! let result = solve(&triangle, FlipKind::Rotate180).unwrap();
//! assert_eq!(result.min_moves, 3);
//! assert_eq!(result.max_overlap, 7);
//! ```

pub mod cli;
pub mod error;
pub mod formulas;
pub mod lattice;
pub mod oracle;
pub mod shapes;

pub use error::{Error, Result};
pub use lattice::{AxialCoord, CoinSet, FlipKind, Translation};
pub use oracle::{OverlapResult, Placement};
pub use shapes::ShapeSpec;
