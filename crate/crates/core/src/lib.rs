pub mod cli;
pub mod gain;
pub mod graph;
pub mod matching;
pub mod spectral;
pub mod theorem;
