//! Command-line front end: input parsing, JSON and text output, SVG plots.

pub mod app;
pub mod input;
pub mod output;
pub mod plot;
