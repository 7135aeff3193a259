use std::ops::Range;

use rand::Rng;

use crate::genome::{IdWidth, SegmentedGenome, Symbol};

/// Division of a stream into movable units.
///
/// The head is the non-coding prefix plus any broken fragments before the
/// first coding segment. Each unit is one coding segment followed by the
/// broken fragments trailing it. Units can be reordered freely: every block
/// ends at a signal or the end of the stream, so its parse is unaffected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentLayout {
    pub head: Range<usize>,
    pub units: Vec<Unit>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unit {
    /// Whole unit, fragments included.
    pub span: Range<usize>,
    /// The coding segment at the start of the unit.
    pub coding: Range<usize>,
}

impl SegmentLayout {
    pub fn of(g: &SegmentedGenome, width: IdWidth) -> Self {
        let (prefix, blocks) = g.blocks(width);
        let mut head = 0..prefix;
        let mut units: Vec<Unit> = Vec::new();
        for block in blocks {
            if block.coding {
                units.push(Unit {
                    span: block.span.clone(),
                    coding: block.span,
                });
            } else if let Some(last) = units.last_mut() {
                last.span.end = block.span.end;
            } else {
                head.end = block.span.end;
            }
        }
        Self { head, units }
    }

    /// Rebuilds a stream from the head followed by units in the given order.
    fn assemble<'a>(
        &self,
        g: &SegmentedGenome,
        pieces: impl IntoIterator<Item = &'a Range<usize>>,
    ) -> SegmentedGenome {
        let symbols = g.symbols();
        let mut out: Vec<Symbol> = Vec::with_capacity(g.len());
        out.extend_from_slice(&symbols[self.head.clone()]);
        for r in pieces {
            out.extend_from_slice(&symbols[r.clone()]);
        }
        SegmentedGenome::new(out)
    }
}

/// Two distinct indices in `0..n`, sorted. Uniform over unordered pairs.
fn distinct_pair<R: Rng + ?Sized>(n: usize, rng: &mut R) -> (usize, usize) {
    let a = rng.gen_range(0..n);
    let mut b = rng.gen_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    (a.min(b), a.max(b))
}

/// Reverses the order of a uniformly chosen run of at least two whole
/// segments. Segment contents and the non-coding head are untouched.
pub fn inversion<R: Rng + ?Sized>(
    g: &SegmentedGenome,
    width: IdWidth,
    rng: &mut R,
) -> SegmentedGenome {
    let layout = SegmentLayout::of(g, width);
    let n = layout.units.len();
    if n < 2 {
        return g.clone();
    }
    let (i, j) = distinct_pair(n, rng);
    let mut order: Vec<&Range<usize>> = layout.units.iter().map(|u| &u.span).collect();
    order[i..=j].reverse();
    layout.assemble(g, order)
}

/// Moves a uniformly chosen run of whole segments to a different segment
/// boundary.
pub fn translocation<R: Rng + ?Sized>(
    g: &SegmentedGenome,
    width: IdWidth,
    rng: &mut R,
) -> SegmentedGenome {
    let layout = SegmentLayout::of(g, width);
    let n = layout.units.len();
    if n < 2 {
        return g.clone();
    }
    // Any run except the whole list; the whole list has nowhere else to go.
    let (i, j) = loop {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        let (i, j) = (a.min(b), a.max(b));
        if !(i == 0 && j == n - 1) {
            break (i, j);
        }
    };
    let mut rest: Vec<&Range<usize>> = layout.units.iter().map(|u| &u.span).collect();
    let run: Vec<&Range<usize>> = rest.drain(i..=j).collect();
    // Boundaries of the remaining list are 0..=rest.len(); skip the original.
    let mut at = rng.gen_range(0..rest.len());
    if at >= i {
        at += 1;
    }
    rest.splice(at..at, run);
    layout.assemble(g, rest)
}

/// Copies one uniformly chosen segment and inserts the copy at a uniformly
/// chosen boundary after the original. The copy is shadowed by the original
/// until mutation changes its id.
pub fn duplication<R: Rng + ?Sized>(
    g: &SegmentedGenome,
    width: IdWidth,
    rng: &mut R,
) -> SegmentedGenome {
    let layout = SegmentLayout::of(g, width);
    let n = layout.units.len();
    if n == 0 {
        return g.clone();
    }
    let src = rng.gen_range(0..n);
    let at = rng.gen_range(src + 1..=n);
    let copy = layout.units[src].coding.clone();
    let mut order: Vec<&Range<usize>> = layout.units.iter().map(|u| &u.span).collect();
    order.insert(at, &copy);
    layout.assemble(g, order)
}
