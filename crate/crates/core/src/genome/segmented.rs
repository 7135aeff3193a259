use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One symbol of a segmented genome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Zero,
    One,
    Sig,
}

impl Symbol {
    pub fn from_bit(b: bool) -> Self {
        if b {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }

    /// The bit value, or `None` for a signal.
    pub fn bit(self) -> Option<bool> {
        match self {
            Symbol::Zero => Some(false),
            Symbol::One => Some(true),
            Symbol::Sig => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Sig => 'S',
        }
    }
}

/// Number of binary symbols in a gene-id header.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdWidth(u32);

impl IdWidth {
    pub const MAX: u32 = 16;

    pub fn new(width: u32) -> Result<Self> {
        if (1..=Self::MAX).contains(&width) {
            Ok(Self(width))
        } else {
            Err(Error::InvalidIdWidth(width))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Number of distinct gene ids, `2^width`.
    pub fn id_count(self) -> usize {
        1usize << self.0
    }
}

impl Default for IdWidth {
    fn default() -> Self {
        Self(4)
    }
}

/// A gene: id plus payload bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    pub gene_id: u32,
    pub payload: Vec<bool>,
}

impl Segment {
    pub fn new(gene_id: u32, payload: Vec<bool>) -> Self {
        Self { gene_id, payload }
    }

    /// Length once serialized: signal, id header, payload.
    pub fn serialized_len(&self, width: IdWidth) -> usize {
        1 + width.get() as usize + self.payload.len()
    }
}

/// Symbol stream over `{0, 1, SIG}`. Every stream is a valid genome.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SegmentedGenome {
    symbols: Vec<Symbol>,
}

/// A run of symbols starting at a signal and ending before the next one.
///
/// A block is coding when at least `width` symbols follow its signal.
/// Because a block always ends at a signal or at the end of the stream,
/// its parse does not depend on where it sits in the genome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub span: Range<usize>,
    pub coding: bool,
}

impl SegmentedGenome {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Self { symbols }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub(crate) fn symbols_mut(&mut self) -> &mut [Symbol] {
        &mut self.symbols
    }

    /// Returns the length of the non-coding prefix (everything before the
    /// first signal) and the signal-delimited blocks that follow it.
    pub fn blocks(&self, width: IdWidth) -> (usize, Vec<Block>) {
        let starts: Vec<usize> = self
            .symbols
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Symbol::Sig)
            .map(|(i, _)| i)
            .collect();
        let prefix = starts.first().copied().unwrap_or(self.symbols.len());
        let blocks = starts
            .iter()
            .enumerate()
            .map(|(k, &start)| {
                let end = starts.get(k + 1).copied().unwrap_or(self.symbols.len());
                Block {
                    span: start..end,
                    coding: end - start > width.get() as usize,
                }
            })
            .collect();
        (prefix, blocks)
    }
}

impl fmt::Display for SegmentedGenome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

/// Text literal over `'0'`, `'1'`, `'S'`; whitespace is ignored.
impl FromStr for SegmentedGenome {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(Symbol::Zero),
                '1' => Ok(Symbol::One),
                'S' => Ok(Symbol::Sig),
                other => Err(Error::InvalidLiteral(other)),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

/// A segment as found in a stream, with its position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedSegment {
    pub segment: Segment,
    pub span: Range<usize>,
    /// An earlier segment carries the same gene id.
    pub shadowed: bool,
}

/// Parsed view of a segmented genome.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneMap {
    entries: BTreeMap<u32, Vec<bool>>,
    segments: Vec<ParsedSegment>,
}

impl GeneMap {
    /// Payload of the first segment carrying `gene_id`.
    pub fn get(&self, gene_id: u32) -> Option<&[bool]> {
        self.entries.get(&gene_id).map(Vec::as_slice)
    }

    pub fn entries(&self) -> &BTreeMap<u32, Vec<bool>> {
        &self.entries
    }

    /// Every coding segment in stream order, shadowed duplicates included.
    pub fn segments(&self) -> &[ParsedSegment] {
        &self.segments
    }

    pub fn segment_list(&self) -> Vec<Segment> {
        self.segments.iter().map(|p| p.segment.clone()).collect()
    }

    pub fn shadowed_count(&self) -> usize {
        self.segments.iter().filter(|p| p.shadowed).count()
    }
}

/// Parses a stream into genes.
///
/// A signal opens a header of the next `width` symbols, read as a big-endian
/// id. A signal inside a header abandons it and parsing restarts there; a
/// header cut short by the end of the stream is non-coding. The payload runs
/// to the next signal. For repeated ids the first occurrence wins.
pub fn parse(stream: &SegmentedGenome, width: IdWidth) -> GeneMap {
    let w = width.get() as usize;
    let symbols = stream.symbols();
    let (_, blocks) = stream.blocks(width);
    let mut map = GeneMap::default();
    for block in blocks.into_iter().filter(|b| b.coding) {
        let header = &symbols[block.span.start + 1..block.span.start + 1 + w];
        let gene_id = header.iter().fold(0u32, |acc, s| {
            (acc << 1) | s.bit().expect("signals end a block") as u32
        });
        let payload: Vec<bool> = symbols[block.span.start + 1 + w..block.span.end]
            .iter()
            .map(|s| s.bit().expect("signals end a block"))
            .collect();
        let shadowed = map.entries.contains_key(&gene_id);
        if !shadowed {
            map.entries.insert(gene_id, payload.clone());
        }
        map.segments.push(ParsedSegment {
            segment: Segment::new(gene_id, payload),
            span: block.span,
            shadowed,
        });
    }
    map
}

/// Emits signal, id header and payload for each segment in order.
pub fn serialize(segments: &[Segment], width: IdWidth) -> Result<SegmentedGenome> {
    let w = width.get();
    let mut symbols = Vec::with_capacity(segments.iter().map(|s| s.serialized_len(width)).sum());
    for seg in segments {
        if (seg.gene_id as u64) >= (1u64 << w) {
            return Err(Error::IdOverflow {
                id: seg.gene_id,
                width: w,
            });
        }
        symbols.push(Symbol::Sig);
        symbols.extend(
            (0..w)
                .rev()
                .map(|b| Symbol::from_bit((seg.gene_id >> b) & 1 == 1)),
        );
        symbols.extend(seg.payload.iter().map(|&b| Symbol::from_bit(b)));
    }
    Ok(SegmentedGenome::new(symbols))
}
