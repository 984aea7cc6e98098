//! Sublinear gauge functions and their concave upper envelopes.
//!
//! A gauge is an evaluable function `κ: [0, ∞) → [1, ∞)` that is monotone
//! nondecreasing and grows sublinearly: `κ(t)/t → 0`. Gauges measure how much
//! room a detour is allowed relative to its distance from the base point.
//! The contract is enforced testably: `κ(t) ≥ 1` everywhere, `κ` nondecreasing
//! on sampled grids, and `κ(t)/t` nonincreasing for `t ≥ 1`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An evaluable sublinear gauge.
///
/// Three families cover the uses in this crate: constants (the classical,
/// non-sublinear degenerate case), powers `max(1, A·t^p)` with `0 < p < 1`,
/// and logarithms `max(1, A·ln(e + t))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum SublinearFunction {
    Constant(f64),
    Power { scale: f64, exponent: f64 },
    Log { scale: f64 },
}

impl SublinearFunction {
    pub fn constant(a: f64) -> Self {
        SublinearFunction::Constant(a)
    }

    pub fn power(scale: f64, exponent: f64) -> Self {
        SublinearFunction::Power { scale, exponent }
    }

    pub fn log(scale: f64) -> Self {
        SublinearFunction::Log { scale }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let t = t.max(0.0);
        let raw = match *self {
            SublinearFunction::Constant(a) => a,
            SublinearFunction::Power { scale, exponent } => {
                // sqrt is correctly rounded by IEEE 754; pow is not. Route the
                // common half-power through sqrt so integer thresholds (patch
                // widths) are stable.
                if exponent == 0.5 {
                    scale * t.sqrt()
                } else {
                    scale * libm::pow(t, exponent)
                }
            }
            SublinearFunction::Log { scale } => scale * libm::log(std::f64::consts::E + t),
        };
        raw.max(1.0)
    }

    /// A witness scale `T(ε)` past which `κ(T)/T < ε`, per family.
    pub fn sublinearity_witness(&self, eps: f64) -> f64 {
        match *self {
            SublinearFunction::Constant(a) => a.max(1.0) / eps * 2.0,
            SublinearFunction::Power { scale, exponent } => {
                // A·t^p / t < ε  ⟺  t > (A/ε)^(1/(1−p))
                libm::pow(scale.max(1.0) / eps, 1.0 / (1.0 - exponent)) * 2.0
            }
            SublinearFunction::Log { scale } => {
                let mut t = 10.0;
                while scale.max(1.0) * libm::log(std::f64::consts::E + t) / t >= eps {
                    t *= 2.0;
                }
                t
            }
        }
    }

    /// Parses the colon grammar used on the command line:
    /// `const:A`, `pow:A:p`, `log:A`.
    pub fn parse(input: &str) -> Result<Self> {
        let bad = |reason: &str| Error::BadSpec {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let parts: Vec<&str> = input.split(':').collect();
        let num = |s: &str| -> Result<f64> {
            s.parse::<f64>().map_err(|_| bad("expected a number"))
        };
        match parts.as_slice() {
            ["const", a] => {
                let a = num(a)?;
                if a < 1.0 {
                    return Err(bad("constant gauge requires A >= 1"));
                }
                Ok(SublinearFunction::Constant(a))
            }
            ["pow", a, p] => {
                let (a, p) = (num(a)?, num(p)?);
                if a <= 0.0 {
                    return Err(bad("power gauge requires A > 0"));
                }
                if !(0.0 < p && p < 1.0) {
                    return Err(bad("power gauge requires 0 < p < 1"));
                }
                Ok(SublinearFunction::Power { scale: a, exponent: p })
            }
            ["log", a] => {
                let a = num(a)?;
                if a <= 0.0 {
                    return Err(bad("log gauge requires A > 0"));
                }
                Ok(SublinearFunction::Log { scale: a })
            }
            _ => Err(bad("expected const:A, pow:A:p, or log:A")),
        }
    }
}

impl fmt::Display for SublinearFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SublinearFunction::Constant(a) => write!(f, "const:{a}"),
            SublinearFunction::Power { scale, exponent } => write!(f, "pow:{scale}:{exponent}"),
            SublinearFunction::Log { scale } => write!(f, "log:{scale}"),
        }
    }
}

/// A gauge given as a table: the upper concave envelope of sampled points,
/// evaluated by linear interpolation between its knots.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConcaveTable {
    knots: Vec<(f64, f64)>,
}

impl ConcaveTable {
    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    /// Evaluate at `t`, clamping outside the sampled domain.
    pub fn eval(&self, t: f64) -> f64 {
        let k = &self.knots;
        if t <= k[0].0 {
            return k[0].1;
        }
        if t >= k[k.len() - 1].0 {
            return k[k.len() - 1].1;
        }
        let j = k.partition_point(|&(x, _)| x <= t);
        let (x0, y0) = k[j - 1];
        let (x1, y1) = k[j];
        y0 + (y1 - y0) * (t - x0) / (x1 - x0)
    }
}

/// Result of envelope construction: the table plus the largest ratio
/// `envelope/input` observed on the grid.
#[derive(Debug, Clone)]
pub struct Concavization {
    pub table: ConcaveTable,
    pub ratio_bound: f64,
}

/// Upper concave envelope of sampled gauge values.
///
/// The grid must be strictly increasing in `t` with values `≥ 1`. The result
/// dominates the input pointwise, equals it on already-concave input, and is
/// itself concave (its knots are the upper convex hull chain of the points).
pub fn concavize(samples: &[(f64, f64)]) -> Result<Concavization> {
    if samples.is_empty() {
        return Err(Error::EmptyGrid);
    }
    for w in samples.windows(2) {
        if w[1].0 <= w[0].0 {
            return Err(Error::Precondition(format!(
                "sample grid not increasing at t={}",
                w[1].0
            )));
        }
    }
    if let Some(&(t, y)) = samples.iter().find(|&&(_, y)| y < 1.0) {
        return Err(Error::Precondition(format!(
            "gauge value {y} < 1 at t={t}"
        )));
    }

    // Upper hull by monotone chain: keep only right turns.
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(samples.len());
    for &p in samples {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }

    let table = ConcaveTable { knots: hull };
    let ratio_bound = samples
        .iter()
        .map(|&(t, y)| table.eval(t) / y)
        .fold(1.0_f64, f64::max);
    Ok(Concavization { table, ratio_bound })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: usize, f: impl Fn(f64) -> f64) -> Vec<(f64, f64)> {
        (0..n).map(|i| (i as f64, f(i as f64))).collect()
    }

    /// Independent oracle: the envelope value at a grid point is the maximum
    /// over all chords through pairs of sample points (and the point itself).
    fn chord_oracle(samples: &[(f64, f64)], t: f64) -> f64 {
        let mut best = f64::NEG_INFINITY;
        for &(u, yu) in samples {
            for &(v, yv) in samples {
                if u <= t && t <= v {
                    let y = if u == v {
                        yu
                    } else {
                        yu + (yv - yu) * (t - u) / (v - u)
                    };
                    best = best.max(y);
                }
            }
        }
        best
    }

    #[test]
    fn concave_input_is_fixed_point() {
        let samples = grid(40, |t| (1.0 + t).sqrt());
        let c = concavize(&samples).unwrap();
        for &(t, y) in &samples {
            assert!((c.table.eval(t) - y).abs() < 1e-12, "t={t}");
        }
        assert!((c.ratio_bound - 1.0).abs() < 1e-12);
    }

    #[test]
    fn step_input_is_dominated() {
        let samples = grid(64, |t| (1.0f64).max((1.0 + t).log2().floor()));
        let c = concavize(&samples).unwrap();
        for &(t, y) in &samples {
            assert!(c.table.eval(t) >= y - 1e-12);
        }
    }

    #[test]
    fn sawtooth_matches_chord_oracle() {
        let samples = grid(50, |t| {
            let saw = if (t as u64) % 7 < 3 { 2.0 } else { 0.3 };
            1.0 + t.sqrt() + saw
        });
        let c = concavize(&samples).unwrap();
        for &(t, _) in &samples {
            let want = chord_oracle(&samples, t);
            let got = c.table.eval(t);
            assert!(
                (got - want).abs() <= 1e-9 * want.abs().max(1.0),
                "t={t}: got {got}, oracle {want}"
            );
        }
    }

    #[test]
    fn empty_grid_rejected() {
        assert!(matches!(concavize(&[]), Err(Error::EmptyGrid)));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["const:1", "pow:1:0.5", "pow:2.5:0.25", "log:3"] {
            let f = SublinearFunction::parse(s).unwrap();
            assert_eq!(SublinearFunction::parse(&f.to_string()).unwrap(), f);
        }
        assert!(SublinearFunction::parse("pow:1:1.5").is_err());
        assert!(SublinearFunction::parse("const:0.5").is_err());
    }

    #[test]
    fn gauge_contract_on_grid() {
        let fns = [
            SublinearFunction::constant(2.0),
            SublinearFunction::power(1.0, 0.5),
            SublinearFunction::power(3.0, 0.25),
            SublinearFunction::log(1.0),
        ];
        for f in &fns {
            let mut prev = 0.0;
            for i in 0..200 {
                let t = i as f64 * 2.5;
                let v = f.eval(t);
                assert!(v >= 1.0);
                assert!(v >= prev - 1e-12, "{f} not monotone at t={t}");
                prev = v;
            }
            // κ(t)/t nonincreasing for t ≥ 1.
            let mut prev_ratio = f64::INFINITY;
            for i in 1..200 {
                let t = i as f64;
                let r = f.eval(t) / t;
                assert!(r <= prev_ratio + 1e-12);
                prev_ratio = r;
            }
            // Eventually below any slope.
            let eps = 1e-3;
            let t = f.sublinearity_witness(eps);
            assert!(f.eval(t) / t < eps, "{f} at witness {t}");
        }
    }
}
