//! Shared fixtures for the benchmarks.

use permdn_core::catalog::builtin_entry;
use permdn_core::PermutationGroup;

pub fn bundled(name: &str) -> PermutationGroup {
    builtin_entry(name)
        .unwrap_or_else(|| panic!("{name} not bundled"))
        .group()
        .unwrap()
}
