//! Shared oracles for the integration tests.

#![allow(dead_code)]

pub mod invariants;
pub mod qsqrt3;
