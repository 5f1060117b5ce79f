pub mod cli;
pub mod identity;
pub mod lfunc;
pub mod series;
pub mod specfun;
pub mod sum;
pub mod zeta;
