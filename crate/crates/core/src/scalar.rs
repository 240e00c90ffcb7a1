//! Edge-weight scalars.
//!
//! Shortest-path code only needs a totally comparable additive monoid, so the
//! weighted routines are written against [`Weight`] and instantiated with
//! exact rationals, scaled integers or floats.

use std::fmt::Debug;

use num_traits::Num;

/// Exact rational with 64-bit numerator and denominator.
pub type Rational = num_rational::Ratio<i64>;

/// A nonnegative edge-weight scalar.
///
/// `PartialOrd` is enough: weights are never NaN in practice, and the
/// comparisons fall back to `Equal` if they are.
pub trait Weight: Num + PartialOrd + Clone + Debug + Send + Sync {
    /// `self * k`, computed without requiring a conversion from integers.
    fn times(&self, k: usize) -> Self {
        let mut acc = Self::zero();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc + base.clone();
            }
            base = base.clone() + base;
            k >>= 1;
        }
        acc
    }
}

impl<T> Weight for T where T: Num + PartialOrd + Clone + Debug + Send + Sync {}

/// Parses `p/q` (or a bare integer) into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            if q == 0 {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => s.parse::<i64>().ok().map(Rational::from_integer),
    }
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub(crate) fn cmp_weights<W: Weight>(a: &W, b: &W) -> std::cmp::Ordering {
    a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal)
}
