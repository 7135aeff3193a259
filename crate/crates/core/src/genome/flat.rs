use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};

/// Fixed-length bit vector, the classical GA individual.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlatGenome {
    bits: Vec<bool>,
}

impl FlatGenome {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn zeros(len: usize) -> Self {
        Self::new(vec![false; len])
    }

    pub fn ones(len: usize) -> Self {
        Self::new(vec![true; len])
    }

    /// Uniform random genome of length `len`.
    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        Self::new((0..len).map(|_| rng.gen::<bool>()).collect())
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn complement(&self) -> Self {
        Self::new(self.bits.iter().map(|b| !b).collect())
    }

    /// Copy with locus `i` flipped.
    pub fn with_flipped(&self, i: usize) -> Self {
        let mut bits = self.bits.clone();
        bits[i] = !bits[i];
        Self::new(bits)
    }

    pub(crate) fn bits_mut(&mut self) -> &mut [bool] {
        &mut self.bits
    }
}

impl From<Vec<bool>> for FlatGenome {
    fn from(bits: Vec<bool>) -> Self {
        Self::new(bits)
    }
}

impl fmt::Display for FlatGenome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Parses `'0'`/`'1'` characters, ignoring whitespace.
impl FromStr for FlatGenome {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidLiteral(other)),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

/// Number of differing loci.
pub fn hamming(a: &FlatGenome, b: &FlatGenome) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.bits.iter().zip(&b.bits).filter(|(x, y)| x != y).count())
}

/// Mean pairwise Hamming distance over all unordered pairs.
///
/// Computed per locus: a locus holding `c` ones among `n` members contributes
/// `c * (n - c)` differing pairs.
pub fn diversity(pop: &[FlatGenome]) -> Result<f64> {
    let n = pop.len();
    if n < 2 {
        return Err(Error::TooFewIndividuals { needed: 2, got: n });
    }
    let len = pop[0].len();
    if let Some(bad) = pop.iter().find(|g| g.len() != len) {
        return Err(Error::LengthMismatch {
            left: len,
            right: bad.len(),
        });
    }
    let mut ones = vec![0u64; len];
    for g in pop {
        for (c, &b) in ones.iter_mut().zip(g.bits()) {
            *c += b as u64;
        }
    }
    let n = n as u64;
    let differing: u64 = ones.iter().map(|&c| c * (n - c)).sum();
    Ok(differing as f64 / (n * (n - 1) / 2) as f64)
}
