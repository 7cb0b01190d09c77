pub mod cli;
pub mod deform;
pub mod findim;
pub mod freealg;
pub mod rewrite;
pub mod scalars;
pub mod tmod;
