pub mod hopf;
pub mod ncalg;
pub mod report;
pub mod scalars;
pub mod pairing;
pub mod coiso;
pub mod quasiinv;
pub mod induce;
pub mod cli;
