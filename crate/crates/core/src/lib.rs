pub mod cli;
pub mod embedpipe;
pub mod exactfield;
pub mod fixtures;
pub mod intertwine;
pub mod liealg;
pub mod linalg;
pub mod polysolve;
pub mod realform;
pub mod rootsys;
