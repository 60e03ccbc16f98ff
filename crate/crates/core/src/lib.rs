//! Distance-2 coloring of planar graphs with maximum degree three.

pub mod coloring;
pub mod corpus;
pub mod embed;
pub mod graph;
pub mod oracle;
pub mod reducer;

pub use coloring::{Color, Coloring};
pub use graph::{Edge, Graph, GraphError, VertexId, VertexSet};
pub use reducer::{color_graph, ColorError, ColorOptions, Colorer, ReductionTrace, StepKind};
