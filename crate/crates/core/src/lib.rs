pub mod cartan;
pub mod diagram;
pub mod error;
pub mod fock;
pub mod qlaurent;
pub mod crystal;
pub mod cli;
