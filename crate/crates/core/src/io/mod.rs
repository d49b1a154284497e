//! Placement files, presets and TSV output.

pub mod placement_file;
pub mod presets;
pub mod tsv;

pub use placement_file::{format_placement, parse_placement};
pub use presets::Preset;
