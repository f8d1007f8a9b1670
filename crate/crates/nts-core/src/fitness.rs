//! Scalar objective values under the minimization convention.

use std::cmp::Ordering;
use std::fmt;

/// A finite objective value. Lower is better.
///
/// Construction rejects NaN and infinities, which makes the ordering total.
#[derive(Clone, Copy, PartialEq)]
pub struct Fitness(f64);

impl Fitness {
    pub fn new(value: f64) -> Self {
        assert!(value.is_finite(), "fitness must be finite, got {value}");
        Fitness(value)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

impl Eq for Fitness {}

impl PartialOrd for Fitness {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fitness {
    fn cmp(&self, other: &Self) -> Ordering {
        // Values are finite by construction.
        self.0.partial_cmp(&other.0).unwrap()
    }
}

impl fmt::Debug for Fitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fitness({})", self.0)
    }
}

impl fmt::Display for Fitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_total_on_finite_values() {
        let a = Fitness::new(1.0);
        let b = Fitness::new(2.0);
        assert!(a < b);
        assert_eq!(a.min(b), a);
        assert_eq!(Fitness::new(2.0), b);
    }

    #[test]
    #[should_panic]
    fn rejects_nan() {
        Fitness::new(f64::NAN);
    }
}
