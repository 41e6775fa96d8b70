//! Model checking and bounded countermodel search for a multi-agent epistemic
//! logic with distributed, common and common distributed knowledge and group
//! comparison statements.

pub mod cli;
pub mod corpus;
pub mod kripke;
pub mod search;
pub mod semantics;
pub mod syntax;
