//! Support code for the `apolar` command line tool: domain-spec parsing,
//! raster rendering and figure emission.

pub mod domain;
pub mod figures;
pub mod render;
