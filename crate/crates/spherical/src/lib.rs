//! JSON formats, Luna diagram rendering and the command-line interface for
//! [`spherical_core`].

pub mod cli;
pub mod json;
pub mod scene;

pub use cli::run;
pub use scene::{render_svg, render_text, DiagramScene};
