//! The basic performance model: per-resource service-time regressions and
//! their weighted combination.
//!
//! Each shared resource gets an ordinary least-squares fit of service time
//! against that resource's contention reading, weighted by the absolute
//! Pearson correlation observed during training. A [`CombinedModel`] merges
//! the four fits into one predictor:
//!
//! ```text
//! predicted(U) = sum_i(w_i * fit_i(U_i)) / sum_i(w_i)
//! ```
//!
//! clamped below by a configurable floor so downstream queueing math always
//! sees a positive service time.

use alloc::string::String;
use alloc::vec::Vec;

use crate::contention::{ContentionVector, Resource};
use crate::math;

/// Default prediction floor: 0.1ms.
pub const DEFAULT_FLOOR_S: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("need at least 3 training samples, got {0}")]
    TooFewSamples(usize),
    #[error("all {0} contention readings are identical; slope and weight are undefined")]
    DegenerateSamples(Resource),
    #[error("all four regression weights are zero")]
    ZeroWeightSum,
    #[error("expected exactly one regression per resource, {0} appears twice")]
    DuplicateResource(Resource),
    #[error("no contention samples to predict from")]
    EmptySamples,
}

/// One monitored (contention, observed service time) pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrainingSample {
    pub contention: ContentionVector,
    /// Observed service time in seconds, finite and strictly positive.
    pub service_time: f64,
}

/// A linear fit of service time against one resource's contention reading.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResourceRegression {
    pub resource: Resource,
    /// Predicted service time at zero contention, seconds.
    pub intercept: f64,
    /// Seconds of service time per unit of contention reading.
    pub slope: f64,
    /// Relevance of this resource: |Pearson r| over the training set, in [0, 1].
    pub weight: f64,
}

impl ResourceRegression {
    pub fn predict(&self, reading: f64) -> f64 {
        self.intercept + self.slope * reading
    }
}

/// Fits `service_time = intercept + slope * reading` by ordinary least
/// squares and scores the resource's relevance as |Pearson r|.
///
/// A training set with constant service times carries no linear signal, so
/// its weight is 0 (the fit itself is still well defined and flat).
pub fn train_resource_regression(
    samples: &[(f64, f64)],
    resource: Resource,
) -> Result<ResourceRegression, ModelError> {
    if samples.len() < 3 {
        return Err(ModelError::TooFewSamples(samples.len()));
    }
    let n = samples.len() as f64;
    let mean_x = samples.iter().map(|(x, _)| x).sum::<f64>() / n;
    let mean_y = samples.iter().map(|(_, y)| y).sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for &(x, y) in samples {
        sxx += (x - mean_x) * (x - mean_x);
        syy += (y - mean_y) * (y - mean_y);
        sxy += (x - mean_x) * (y - mean_y);
    }
    if sxx == 0.0 {
        return Err(ModelError::DegenerateSamples(resource));
    }
    let slope = sxy / sxx;
    let weight = if syy == 0.0 {
        0.0
    } else {
        // |r| can drift a hair above 1 on exactly collinear data.
        (math::abs(sxy) / math::sqrt(sxx * syy)).min(1.0)
    };
    Ok(ResourceRegression {
        resource,
        intercept: mean_y - slope * mean_x,
        slope,
        weight,
    })
}

/// The weighted combination of the four per-resource regressions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CombinedModel {
    per_resource: [ResourceRegression; 4],
    /// Minimum predicted service time, seconds, strictly positive.
    floor: f64,
}

impl CombinedModel {
    /// Combines one regression per resource (any order) into a single
    /// predictor. Fails if a resource is missing/doubled or if every weight
    /// is zero, since the weighted mean would then be undefined.
    pub fn new(regressions: [ResourceRegression; 4], floor: f64) -> Result<Self, ModelError> {
        assert!(floor.is_finite() && floor > 0.0, "floor must be > 0");
        let mut ordered = [None; 4];
        for rg in regressions {
            let slot = rg.resource as usize;
            if ordered[slot].is_some() {
                return Err(ModelError::DuplicateResource(rg.resource));
            }
            ordered[slot] = Some(rg);
        }
        let per_resource = ordered.map(|rg| rg.expect("all four resources present"));
        if per_resource.iter().map(|rg| rg.weight).sum::<f64>() == 0.0 {
            return Err(ModelError::ZeroWeightSum);
        }
        Ok(CombinedModel {
            per_resource,
            floor,
        })
    }

    pub fn floor(&self) -> f64 {
        self.floor
    }

    pub fn regression(&self, resource: Resource) -> &ResourceRegression {
        &self.per_resource[resource as usize]
    }

    /// Predicts the service time in seconds for one contention vector;
    /// always finite and `>= floor`.
    pub fn predict(&self, u: &ContentionVector) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for rg in &self.per_resource {
            num += rg.weight * rg.predict(u.reading(rg.resource));
            den += rg.weight;
        }
        (num / den).max(self.floor)
    }

    /// Mean and population variance of the predicted service time over a
    /// window of contention samples.
    pub fn service_time_stats(
        &self,
        samples: &[ContentionVector],
    ) -> Result<(f64, f64), ModelError> {
        if samples.is_empty() {
            return Err(ModelError::EmptySamples);
        }
        let n = samples.len() as f64;
        let mut mean = 0.0;
        for u in samples {
            mean += self.predict(u);
        }
        mean /= n;
        let mut var = 0.0;
        for u in samples {
            let d = self.predict(u) - mean;
            var += d * d;
        }
        Ok((mean, var / n))
    }
}

/// Convenience alias matching the model's role in the pipeline.
pub fn predict_service_time(model: &CombinedModel, u: &ContentionVector) -> f64 {
    model.predict(u)
}

/// Trains the full combined model from (contention, service time) pairs by
/// fitting all four per-resource regressions on their respective readings.
pub fn train_combined_model(
    samples: &[TrainingSample],
    floor: f64,
) -> Result<CombinedModel, ModelError> {
    let mut fits = Vec::with_capacity(4);
    for resource in Resource::ALL {
        let series: Vec<(f64, f64)> = samples
            .iter()
            .map(|s| (s.contention.reading(resource), s.service_time))
            .collect();
        fits.push(train_resource_regression(&series, resource)?);
    }
    CombinedModel::new([fits[0], fits[1], fits[2], fits[3]], floor)
}

/// Error from parsing a training-sample CSV.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CsvError {
    #[error("missing header line")]
    MissingHeader,
    #[error("bad header: expected `{expected}`, got `{got}`")]
    BadHeader { expected: &'static str, got: String },
    #[error("line {line}: expected 5 fields, got {got}")]
    BadFieldCount { line: usize, got: usize },
    #[error("line {line}, field `{field}`: `{value}` is not a finite number")]
    BadNumber {
        line: usize,
        field: &'static str,
        value: String,
    },
    #[error("line {line}: service_time_s must be > 0, got {value}")]
    NonPositiveServiceTime { line: usize, value: f64 },
}

pub const TRAINING_CSV_HEADER: &str = "core_usage,cache_mpki,disk_bw,network_bw,service_time_s";

/// Parses training samples from CSV text with the exact header
/// `core_usage,cache_mpki,disk_bw,network_bw,service_time_s`.
pub fn parse_training_csv(text: &str) -> Result<Vec<TrainingSample>, CsvError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(CsvError::MissingHeader)?;
    if header.trim() != TRAINING_CSV_HEADER {
        return Err(CsvError::BadHeader {
            expected: TRAINING_CSV_HEADER,
            got: String::from(header.trim()),
        });
    }
    const FIELDS: [&str; 5] = [
        "core_usage",
        "cache_mpki",
        "disk_bw",
        "network_bw",
        "service_time_s",
    ];
    let mut samples = Vec::new();
    for (idx, raw) in lines {
        let line = idx + 1; // 1-based, header is line 1
        if raw.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = raw.split(',').collect();
        if cells.len() != 5 {
            return Err(CsvError::BadFieldCount {
                line,
                got: cells.len(),
            });
        }
        let mut values = [0.0f64; 5];
        for (i, cell) in cells.iter().enumerate() {
            let parsed: f64 = cell
                .trim()
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite())
                .ok_or(CsvError::BadNumber {
                    line,
                    field: FIELDS[i],
                    value: String::from(cell.trim()),
                })?;
            values[i] = parsed;
        }
        if values[4] <= 0.0 {
            return Err(CsvError::NonPositiveServiceTime {
                line,
                value: values[4],
            });
        }
        samples.push(TrainingSample {
            contention: ContentionVector::new(values[0], values[1], values[2], values[3]),
            service_time: values[4],
        });
    }
    Ok(samples)
}
