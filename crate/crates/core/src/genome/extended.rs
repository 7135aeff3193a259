/// Decoded value of an extended gene.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtendedValue {
    pub value: f64,
    /// Set when the payload was empty and the value defaulted to 0.
    pub empty: bool,
}

/// Fraction of ones in `payload`. A single point mutation moves the result by
/// exactly `1 / payload.len()`.
pub fn decode_extended(payload: &[bool]) -> ExtendedValue {
    if payload.is_empty() {
        return ExtendedValue {
            value: 0.0,
            empty: true,
        };
    }
    let ones = payload.iter().filter(|&&b| b).count();
    ExtendedValue {
        value: ones as f64 / payload.len() as f64,
        empty: false,
    }
}
