//! Brute-force oracles, exhaustive and random structure generators, and
//! fixed example structures shared by the cranklab test suites.

pub mod corpus;
pub mod fixtures;
pub mod oracle;
