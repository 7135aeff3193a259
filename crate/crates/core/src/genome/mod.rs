//! Genome representations.
//!
//! Two individuals are supported. [`FlatGenome`] is the classical fixed-length
//! bit vector. [`SegmentedGenome`] is a stream over `{0, 1, SIG}` in which each
//! signal symbol opens a gene: a big-endian gene id of fixed width followed by
//! a variable-length payload. Meaning travels with the signal, not with the
//! absolute position, so whole segments can be moved around without changing
//! what they encode.

mod extended;
mod flat;
mod segmented;

pub use extended::{decode_extended, ExtendedValue};
pub use flat::{diversity, hamming, FlatGenome};
pub use segmented::{
    parse, serialize, Block, GeneMap, IdWidth, ParsedSegment, Segment, SegmentedGenome, Symbol,
};
