//! Library half of the `bvf` command: profiles, built-in checks, suites and
//! report output. The binary only parses arguments and maps errors to exit codes.

pub mod app;
pub mod checks;
pub mod output;
pub mod profile;
pub mod suites;

pub use profile::Profile;
pub use suites::Suite;
