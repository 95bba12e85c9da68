//! Acceptance suite for `vcover`; the checks live in `tests/acceptance.rs`.
