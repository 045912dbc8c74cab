//! File formats, scenarios, seeded path generation, the `lionman` command
//! line and the live-play service, on top of `lionman-core`.

pub mod cli;
pub mod formats;
pub mod gen;
pub mod scenario;
pub mod service;
