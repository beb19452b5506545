//! Oracle-based acceptance checks for `fairvd`; everything lives in
//! `tests/acceptance.rs`.
