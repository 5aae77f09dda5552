//! Report documents and grid-scan machinery behind the `sgp` binary,
//! exposed as a library so integration tests can parse what the binary
//! prints.

pub mod report;
pub mod scan;
