use rand::Rng;

use super::macros::SegmentLayout;
use super::CrossoverKind;
use crate::error::{Error, Result};
use crate::genome::{FlatGenome, IdWidth, SegmentedGenome, Symbol};

/// Prefix of `a` up to `cut` followed by the suffix of `b` from `cut`.
pub fn one_point_at(a: &FlatGenome, b: &FlatGenome, cut: usize) -> Result<FlatGenome> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let cut = cut.min(a.len());
    let mut bits = a.bits()[..cut].to_vec();
    bits.extend_from_slice(&b.bits()[cut..]);
    Ok(FlatGenome::new(bits))
}

/// One offspring from two equal-length parents.
pub fn crossover_flat<R: Rng + ?Sized>(
    a: &FlatGenome,
    b: &FlatGenome,
    kind: CrossoverKind,
    rng: &mut R,
) -> Result<FlatGenome> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    match kind {
        CrossoverKind::OnePointFlat => {
            if a.len() < 2 {
                return Ok(a.clone());
            }
            let cut = rng.gen_range(1..a.len());
            one_point_at(a, b, cut)
        }
        CrossoverKind::UniformFlat => Ok(FlatGenome::new(
            a.bits()
                .iter()
                .zip(b.bits())
                .map(|(&x, &y)| if rng.gen::<bool>() { x } else { y })
                .collect(),
        )),
        other => Err(Error::param(
            "crossover",
            format!("{other:?} does not apply to flat genomes"),
        )),
    }
}

/// One offspring from two segmented parents; lengths may differ.
///
/// `OnePointStream` cuts each parent at an independent uniform symbol
/// position. `SegmentAligned` cuts each parent only between whole segments.
/// Identical parents yield an exact copy.
pub fn crossover_segmented<R: Rng + ?Sized>(
    a: &SegmentedGenome,
    b: &SegmentedGenome,
    kind: CrossoverKind,
    width: IdWidth,
    rng: &mut R,
) -> Result<SegmentedGenome> {
    let (cut_a, cut_b) = match kind {
        CrossoverKind::OnePointStream => (rng.gen_range(0..=a.len()), rng.gen_range(0..=b.len())),
        CrossoverKind::SegmentAligned => {
            let pick = |g: &SegmentedGenome, rng: &mut R| {
                let layout = SegmentLayout::of(g, width);
                let k = rng.gen_range(0..=layout.units.len());
                if k == 0 {
                    layout.head.end
                } else {
                    layout.units[k - 1].span.end
                }
            };
            let ca = pick(a, rng);
            (ca, pick(b, rng))
        }
        other => {
            return Err(Error::param(
                "crossover",
                format!("{other:?} does not apply to segmented genomes"),
            ))
        }
    };
    if a == b {
        return Ok(a.clone());
    }
    let mut symbols: Vec<Symbol> = a.symbols()[..cut_a].to_vec();
    symbols.extend_from_slice(&b.symbols()[cut_b..]);
    Ok(SegmentedGenome::new(symbols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genome::{parse, serialize, Segment};
    use crate::seeded_rng;

    fn f(s: &str) -> FlatGenome {
        s.parse().unwrap()
    }

    #[test]
    fn one_point_vector() {
        assert_eq!(one_point_at(&f("1111"), &f("0000"), 2).unwrap(), f("1100"));
    }

    #[test]
    fn identical_parents_reproduce_exactly() {
        let mut rng = seeded_rng(1);
        let a = FlatGenome::random(50, &mut rng);
        for kind in [CrossoverKind::OnePointFlat, CrossoverKind::UniformFlat] {
            assert_eq!(crossover_flat(&a, &a, kind, &mut rng).unwrap(), a);
        }
        let s: SegmentedGenome = "1S0111S1000S0".parse().unwrap();
        for kind in [CrossoverKind::OnePointStream, CrossoverKind::SegmentAligned] {
            assert_eq!(
                crossover_segmented(&s, &s, kind, IdWidth::new(2).unwrap(), &mut rng).unwrap(),
                s
            );
        }
    }

    #[test]
    fn short_genomes_copy_first_parent() {
        let mut rng = seeded_rng(2);
        assert_eq!(
            crossover_flat(&f("1"), &f("0"), CrossoverKind::OnePointFlat, &mut rng).unwrap(),
            f("1")
        );
    }

    #[test]
    fn mismatched_lengths_are_rejected() {
        let mut rng = seeded_rng(3);
        assert!(crossover_flat(&f("11"), &f("000"), CrossoverKind::UniformFlat, &mut rng).is_err());
        assert!(
            crossover_flat(&f("11"), &f("00"), CrossoverKind::SegmentAligned, &mut rng).is_err()
        );
    }

    #[test]
    fn one_point_cut_stays_inside() {
        let mut rng = seeded_rng(4);
        for _ in 0..500 {
            let child = crossover_flat(
                &f("1111"),
                &f("0000"),
                CrossoverKind::OnePointFlat,
                &mut rng,
            )
            .unwrap();
            let ones = child.count_ones();
            assert!((1..=3).contains(&ones));
            assert!(child.bits()[0] && !child.bits()[3]);
        }
    }

    #[test]
    fn offspring_fitness_mean_matches_parents() {
        // Each locus comes from one parent, so E[ones(child)] = mean ones of
        // the parents. Standard error of the mean here is about 0.05.
        let mut rng = seeded_rng(5);
        let (mut parents, mut children) = (0.0, 0.0);
        for _ in 0..10_000 {
            let a = FlatGenome::random(100, &mut rng);
            let b = FlatGenome::random(100, &mut rng);
            let c = crossover_flat(&a, &b, CrossoverKind::OnePointFlat, &mut rng).unwrap();
            parents += (a.count_ones() + b.count_ones()) as f64 / 2.0;
            children += c.count_ones() as f64;
        }
        assert!((children - parents).abs() / 10_000.0 <= 0.5);
    }

    #[test]
    fn segment_aligned_keeps_segments_whole() {
        let w = IdWidth::new(3).unwrap();
        let a = serialize(
            &[
                Segment::new(1, vec![true; 3]),
                Segment::new(2, vec![false; 2]),
            ],
            w,
        )
        .unwrap();
        let b = serialize(
            &[
                Segment::new(5, vec![true]),
                Segment::new(6, vec![false, true]),
            ],
            w,
        )
        .unwrap();
        let pool: Vec<Segment> = parse(&a, w)
            .segment_list()
            .into_iter()
            .chain(parse(&b, w).segment_list())
            .collect();
        let mut rng = seeded_rng(6);
        for _ in 0..300 {
            let c =
                crossover_segmented(&a, &b, CrossoverKind::SegmentAligned, w, &mut rng).unwrap();
            for s in parse(&c, w).segment_list() {
                assert!(pool.contains(&s));
            }
        }
    }

    #[test]
    fn stream_cut_can_change_length() {
        let w = IdWidth::new(2).unwrap();
        let a: SegmentedGenome = "S0111111".parse().unwrap();
        let b: SegmentedGenome = "S10".parse().unwrap();
        let mut rng = seeded_rng(7);
        let lens: std::collections::BTreeSet<usize> = (0..200)
            .map(|_| {
                crossover_segmented(&a, &b, CrossoverKind::OnePointStream, w, &mut rng)
                    .unwrap()
                    .len()
            })
            .collect();
        assert!(lens.len() > 3);
    }
}
