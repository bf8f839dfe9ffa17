//! Graph representation, parsing, enumeration, and pattern isomorphism.

pub mod canon;
pub mod enumerate;
pub mod iso;
pub mod multigraph;
pub mod parse;
pub mod pattern;

pub use canon::{canonical_key, PatternKey};
pub use enumerate::{count_connected_bound, enumerate_connected_sets};
pub use multigraph::{Edge, Multigraph};
pub use parse::{parse_graph, read_graph_file};
pub use pattern::{pattern_dictionary, Flavor, Pattern, PatternDictionary};
