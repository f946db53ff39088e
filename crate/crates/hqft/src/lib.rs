//! Std side of `hqft-core`: the QFLD1/QSPEC1 text formats, single-line
//! signal descriptors, `key=value` reports and the built-in verification
//! suites behind the `hqft` binary.

pub mod descriptor;
pub mod format;
pub mod report;
pub mod verify;
