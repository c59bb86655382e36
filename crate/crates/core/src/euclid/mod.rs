//! Euclidean configurations: congruence, the grid and edge embeddings, the
//! strip coloring, the rainbow-segment walk, and the `T`-triangle gadget.
//!
//! Everything except the gadget is generic over [`Scalar`](crate::Scalar).

mod embed;
mod gadget;
mod point;
mod segment;
mod strip;

pub use embed::{
    grid_lattice_embedding, planar_rectangle, regular_simplex, simplex_midpoint_embedding, LatticeEmbedding,
    MidpointEmbedding,
};
pub use gadget::{
    gadget_points, is_t_shaped, t_gadget, verify_t_gadget, verify_t_gadget_with, GadgetReport, TGadget, GADGET_COLORS,
    GADGET_LABELS,
};
pub use point::{
    affine_rank, congruent, distance, parse_configuration, write_configuration, Bijection, Configuration, LabeledPoint,
};
pub use segment::{rainbow_segment, segment_iteration_bound, ColoringOracle, HalfPlane, RainbowSegment};
pub use strip::{falsify_strip, strip_color, FalsificationReport, Placement, StripColoring};
