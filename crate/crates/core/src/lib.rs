pub mod decomp;
pub mod exactnum;
pub mod fusion;
pub mod greenring;
pub mod grouprep;
pub mod hopfmod;
