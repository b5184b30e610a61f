pub mod adiabatic;
pub mod dominant;
pub mod gap_sweep;
pub mod grover;
pub mod lambda0_sweep;
pub mod mpd;
pub mod prime;
pub mod qft;
pub mod renyi_sweep;
