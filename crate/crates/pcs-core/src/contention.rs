//! Shared-resource contention readings.
//!
//! A [`ContentionVector`] carries the four pressure readings observed on a
//! node: core usage, shared-cache misses per kilo-instruction, and disk and
//! network bandwidth. Core usage is a time ratio and saturates at 1; the
//! other readings are unbounded above. All fields are finite and
//! non-negative, which componentwise arithmetic preserves (subtraction
//! clamps at zero, addition saturates core usage at 1).

use core::fmt;
use core::ops::{Add, Sub};

/// One of the four shared resources a component contends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Resource {
    Core,
    Cache,
    DiskBw,
    NetworkBw,
}

impl Resource {
    /// All resources, in the canonical field order of [`ContentionVector`].
    pub const ALL: [Resource; 4] = [
        Resource::Core,
        Resource::Cache,
        Resource::DiskBw,
        Resource::NetworkBw,
    ];
}

impl fmt::Display for Resource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Resource::Core => "core",
            Resource::Cache => "cache",
            Resource::DiskBw => "disk_bw",
            Resource::NetworkBw => "network_bw",
        };
        f.write_str(name)
    }
}

/// Contention readings for one node (or one program's contribution to them).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContentionVector {
    /// Fraction of time the cores run instructions, in `[0, 1]`.
    pub core_usage: f64,
    /// Shared-cache misses per kilo-instruction, `>= 0`.
    pub cache_mpki: f64,
    /// Disk bytes read+written per second, `>= 0`.
    pub disk_bw: f64,
    /// Network bytes sent+received per second, `>= 0`.
    pub network_bw: f64,
}

impl ContentionVector {
    pub const ZERO: ContentionVector = ContentionVector {
        core_usage: 0.0,
        cache_mpki: 0.0,
        disk_bw: 0.0,
        network_bw: 0.0,
    };

    /// Builds a vector from raw readings.
    ///
    /// Readings must be finite. Negative readings clamp to zero and core
    /// usage above 1 (multi-core accounting) clamps to 1.
    pub fn new(core_usage: f64, cache_mpki: f64, disk_bw: f64, network_bw: f64) -> Self {
        assert!(
            core_usage.is_finite()
                && cache_mpki.is_finite()
                && disk_bw.is_finite()
                && network_bw.is_finite(),
            "contention readings must be finite"
        );
        ContentionVector {
            core_usage: core_usage.clamp(0.0, 1.0),
            cache_mpki: cache_mpki.max(0.0),
            disk_bw: disk_bw.max(0.0),
            network_bw: network_bw.max(0.0),
        }
    }

    /// The reading for one resource.
    pub fn reading(&self, resource: Resource) -> f64 {
        match resource {
            Resource::Core => self.core_usage,
            Resource::Cache => self.cache_mpki,
            Resource::DiskBw => self.disk_bw,
            Resource::NetworkBw => self.network_bw,
        }
    }

    /// Componentwise subtraction clamped at zero.
    pub fn saturating_sub(&self, other: &ContentionVector) -> ContentionVector {
        ContentionVector {
            core_usage: (self.core_usage - other.core_usage).max(0.0),
            cache_mpki: (self.cache_mpki - other.cache_mpki).max(0.0),
            disk_bw: (self.disk_bw - other.disk_bw).max(0.0),
            network_bw: (self.network_bw - other.network_bw).max(0.0),
        }
    }

    /// Componentwise scaling by a non-negative factor (core usage still
    /// saturates at 1). Used to scale job footprints by input size.
    pub fn scaled(&self, factor: f64) -> ContentionVector {
        debug_assert!(factor.is_finite() && factor >= 0.0);
        ContentionVector {
            core_usage: (self.core_usage * factor).min(1.0),
            cache_mpki: self.cache_mpki * factor,
            disk_bw: self.disk_bw * factor,
            network_bw: self.network_bw * factor,
        }
    }

    /// True when every field of `self` is `<=` the matching field of `other`.
    pub fn le(&self, other: &ContentionVector) -> bool {
        self.core_usage <= other.core_usage
            && self.cache_mpki <= other.cache_mpki
            && self.disk_bw <= other.disk_bw
            && self.network_bw <= other.network_bw
    }
}

impl Add for ContentionVector {
    type Output = ContentionVector;

    /// Componentwise addition. Core usage is a time ratio, so it saturates
    /// at 1; saturating addition of non-negative ratios is associative,
    /// which keeps node aggregates independent of summation order.
    fn add(self, rhs: ContentionVector) -> ContentionVector {
        ContentionVector {
            core_usage: (self.core_usage + rhs.core_usage).min(1.0),
            cache_mpki: self.cache_mpki + rhs.cache_mpki,
            disk_bw: self.disk_bw + rhs.disk_bw,
            network_bw: self.network_bw + rhs.network_bw,
        }
    }
}

impl Sub for ContentionVector {
    type Output = ContentionVector;

    fn sub(self, rhs: ContentionVector) -> ContentionVector {
        self.saturating_sub(&rhs)
    }
}

impl core::iter::Sum for ContentionVector {
    fn sum<I: Iterator<Item = ContentionVector>>(iter: I) -> ContentionVector {
        iter.fold(ContentionVector::ZERO, |acc, v| acc + v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_clamps_core_usage_and_negatives() {
        let v = ContentionVector::new(1.7, -0.5, 10.0, 0.0);
        assert_eq!(v.core_usage, 1.0);
        assert_eq!(v.cache_mpki, 0.0);
        assert_eq!(v.disk_bw, 10.0);
    }

    #[test]
    fn subtraction_clamps_at_zero() {
        let a = ContentionVector::new(0.6, 1.0, 5.0, 5.0);
        let b = ContentionVector::new(0.2, 2.0, 1.0, 5.0);
        let d = a - b;
        assert_eq!(d.core_usage, 0.4 - f64::EPSILON * 0.0); // exact: 0.6 - 0.2
        assert_eq!(d.cache_mpki, 0.0);
        assert_eq!(d.disk_bw, 4.0);
        assert_eq!(d.network_bw, 0.0);
    }

    #[test]
    fn addition_saturates_core_usage() {
        let a = ContentionVector::new(0.8, 1.0, 1.0, 1.0);
        let b = ContentionVector::new(0.5, 1.0, 1.0, 1.0);
        let s = a + b;
        assert_eq!(s.core_usage, 1.0);
        assert_eq!(s.cache_mpki, 2.0);
    }

    #[test]
    fn saturating_add_is_order_independent() {
        let vs = [
            ContentionVector::new(0.7, 1.0, 2.0, 3.0),
            ContentionVector::new(0.6, 0.5, 1.0, 0.0),
            ContentionVector::new(0.2, 0.0, 0.5, 1.0),
        ];
        let forward: ContentionVector = vs.iter().copied().sum();
        let backward: ContentionVector = vs.iter().rev().copied().sum();
        assert_eq!(forward, backward);
        assert_eq!(forward.core_usage, 1.0);
    }
}
