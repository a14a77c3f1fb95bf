//! Finite-blocklength achievability bounds for covert (low probability of
//! detection) communication over binary symmetric and AWGN channels.
//!
//! A transmitter talks to a receiver while a warden watches its own noisy
//! copy of the channel. Sparse signalling keeps the warden's optimal test
//! close to a blind guess; Gallager's random-coding exponent then says how
//! many bits still get through reliably at blocklength `n`.
//!
//! * [`specfn`]: Lambert-W and the covertness factor `xi`.
//! * [`channels`]: channel matrices and sparse input laws.
//! * [`divergence`]: chi-squared, TV, KL, the tensorised TV bound, `tau_max`.
//! * [`gallager`]: E0, mutual information, sparse-input lower bounds.
//! * [`bounds`]: the achievability engine and the BSC/AWGN closed forms.
//! * [`verify`]: exact detection, Monte Carlo decoding and the oracle battery.

pub mod bounds;
pub mod channels;
pub mod divergence;
pub mod error;
pub mod gallager;
pub mod search;
pub mod specfn;
pub mod verify;

pub use bounds::{BoundPoint, ChannelPair, Evaluation, OptimalOperating};
pub use channels::{make_bsc, DiscreteChannel, SparseInput};
pub use divergence::DetectionResult;
pub use error::{Error, Result};
pub use specfn::LpdBudget;
