use rand::Rng;

use crate::genome::{FlatGenome, SegmentedGenome, Symbol};

/// Flips each bit independently with probability `p_m`.
pub fn point_mutate_flat<R: Rng + ?Sized>(g: &FlatGenome, p_m: f64, rng: &mut R) -> FlatGenome {
    let mut out = g.clone();
    for b in out.bits_mut() {
        if rng.gen::<f64>() < p_m {
            *b = !*b;
        }
    }
    out
}

/// Bits flip with probability `p_m` and turn into a signal with probability
/// `p_sig`; signals revert to a uniformly drawn bit with probability `p_sig`.
pub fn point_mutate_segmented<R: Rng + ?Sized>(
    g: &SegmentedGenome,
    p_m: f64,
    p_sig: f64,
    rng: &mut R,
) -> SegmentedGenome {
    let mut out = g.clone();
    for s in out.symbols_mut() {
        let u = rng.gen::<f64>();
        *s = match *s {
            Symbol::Sig if u < p_sig => Symbol::from_bit(rng.gen::<bool>()),
            Symbol::Sig => Symbol::Sig,
            Symbol::Zero if u < p_m => Symbol::One,
            Symbol::One if u < p_m => Symbol::Zero,
            _ if u < p_m + p_sig => Symbol::Sig,
            bit => bit,
        };
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genome::hamming;
    use crate::seeded_rng;

    #[test]
    fn zero_rate_is_identity() {
        let mut rng = seeded_rng(1);
        let f = FlatGenome::random(64, &mut rng);
        assert_eq!(point_mutate_flat(&f, 0.0, &mut rng), f);
        let s: SegmentedGenome = "01S0110S1S0011".parse().unwrap();
        assert_eq!(point_mutate_segmented(&s, 0.0, 0.0, &mut rng), s);
    }

    #[test]
    fn full_rate_flips_everything() {
        let mut rng = seeded_rng(2);
        let zero: FlatGenome = "0000".parse().unwrap();
        assert_eq!(point_mutate_flat(&zero, 1.0, &mut rng).to_string(), "1111");
        let s: SegmentedGenome = "S0110".parse().unwrap();
        assert_eq!(
            point_mutate_segmented(&s, 1.0, 0.0, &mut rng).to_string(),
            "S1001"
        );
    }

    #[test]
    fn signal_rates() {
        let mut rng = seeded_rng(3);
        let s: SegmentedGenome = "0101SSSS".parse().unwrap();
        let all = point_mutate_segmented(&s, 0.0, 1.0, &mut rng);
        assert!(all.symbols()[..4].iter().all(|&x| x == Symbol::Sig));
        assert!(all.symbols()[4..].iter().all(|&x| x != Symbol::Sig));
        assert_eq!(all.len(), s.len());
    }

    #[test]
    fn mean_flip_count_is_length_times_rate() {
        // Binomial(100, 0.01) has mean 1; sd of the mean over 10^4 trials is 0.01.
        let mut rng = seeded_rng(4);
        let g = FlatGenome::random(100, &mut rng);
        let total: usize = (0..10_000)
            .map(|_| hamming(&g, &point_mutate_flat(&g, 0.01, &mut rng)).unwrap())
            .sum();
        let mean = total as f64 / 10_000.0;
        assert!((mean - 1.0).abs() <= 0.05, "mean {mean}");
    }
}
