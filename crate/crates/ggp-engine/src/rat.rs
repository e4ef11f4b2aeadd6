//! Exact rational exponents.

use num::rational::Ratio;
use num::{One, Signed, Zero};

/// Exact rational number used for every cuspidal exponent.  Always in
/// lowest terms with a positive denominator (maintained by `Ratio`).
pub type Rat = Ratio<i64>;

/// Convenience constructor: `rat(n, d) = n/d`.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Ratio::new(numer, denom)
}

/// Convenience constructor for an integer rational.
pub fn int(n: i64) -> Rat {
    Ratio::from_integer(n)
}

/// One half, the ubiquitous twist amount.
pub fn half() -> Rat {
    Ratio::new(1, 2)
}

/// True when `x` is an integer.
pub fn is_integer(x: Rat) -> bool {
    x.is_integer()
}

/// Fractional part normalized to `[0, 1)`; two exponents lie on the same
/// translation class exactly when their fractional parts agree.
pub fn frac_class(x: Rat) -> Rat {
    let f = x - x.floor();
    debug_assert!(!f.is_negative() && f < Rat::one());
    f
}

/// Rounds an integer-valued rational to `i64`, panicking otherwise.
/// Only used where integrality is an invariant already checked.
pub fn to_i64(x: Rat) -> i64 {
    debug_assert!(x.is_integer());
    x.to_integer()
}

/// Renders a rational as `p` or `p/q` (lowest terms).
pub fn display(x: Rat) -> String {
    if x.is_integer() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q` with optional sign.
pub fn parse(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let numer: i64 = n.trim().parse().ok()?;
        let denom: i64 = d.trim().parse().ok()?;
        if denom == 0 {
            return None;
        }
        Some(Ratio::new(numer, denom))
    } else {
        let numer: i64 = s.parse().ok()?;
        Some(Ratio::from_integer(numer))
    }
}

/// True when `x` is zero.
pub fn is_zero(x: Rat) -> bool {
    x.is_zero()
}
