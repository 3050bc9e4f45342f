//! Sequences, symbols and the interval and 𝔗 structures built on them.

pub mod frak;
pub mod intervals;
pub mod pairs;
pub mod sequence;

pub use frak::{t1_bijection, BijectionReport, FrakStructure, Side};
pub use intervals::{Block, Interval, IntervalStructure, TSets};
pub use pairs::{minus, PairError, SymbolPair};
pub use sequence::{swap, Flavor, Sequence, SequenceError};
