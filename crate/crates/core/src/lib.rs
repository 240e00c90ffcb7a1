//! Strongly connected orientations of planar graphs with small directed
//! diameter.
//!
//! The crate covers:
//!
//! * [`plane_graph`]: rotation-system embeddings, face tracing and the
//!   surgical operations (apex insertion, cycle split) used by the orienters;
//! * [`oriented`]: orientations, strongness, directed diameter (unweighted
//!   and weighted over any [`Weight`] scalar) and the exhaustive oracles;
//! * [`trigrid`]: triangular grids `T_r` and their exact `r + 1` orientation;
//! * [`schnyder`]: Schnyder realizers and the realizer-based orientation;
//! * [`separator`]: balanced simple cycle separators for triangulations;
//! * [`planar_orient`]: the separator-based `n/2 + O(sqrt n)` orientation;
//! * [`lower_bound`]: the nested-triangles family;
//! * [`hardness`]: the Partition gadget compiler and its checkers;
//! * [`io`]: the line-oriented text formats (and their JSON mirrors).
//!
//! Weighted algorithms are generic over the edge-weight scalar. The aliases
//! below fix the concrete instantiations the rest of the crate uses.

pub mod error;
pub mod hardness;
pub mod io;
pub mod lower_bound;
pub mod oriented;
pub mod planar_orient;
pub mod plane_graph;
pub mod scalar;
pub mod schnyder;
pub mod separator;
pub mod trigrid;

pub use error::{Error, Result};
pub use oriented::{Digraph, Orientation, WeightMap};
pub use plane_graph::{Face, PlaneGraph};
pub use scalar::{Rational, Weight};

/// Exact weights; every threshold comparison in the hardness module uses these.
pub type RationalWeights = WeightMap<Rational>;

/// Integer weights, used when exact rational weights share one denominator.
pub type IntegerWeights = WeightMap<u64>;

/// Floating point weights, for quick experiments where exactness is not needed.
pub type FloatWeights = WeightMap<f64>;
