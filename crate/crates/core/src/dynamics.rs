//! Time series of the geometric correlations and their sudden changes.
//!
//! A sudden change is a switch of the axis that plays the intermediate
//! (quantum) or maximal (classical) role among `|c_1(t)|, |c_2(t)|, |c_3(t)|`.
//! Sampled trajectories only seed brackets; every crossing is located by
//! bisection on the closed-form decay laws.

use alloc::vec::Vec;

use crate::channels::{evolve_bell_diagonal, evolve_unchecked, ChannelKind, ChannelModel};
use crate::qstate::{
    sort_by, sort_correlations, Axis, BellDiagonalParams, SortedCorrelations, TIE_TOL,
};
use crate::{Error, Result};

/// Relative tie tolerance used while tracking crossings along a trajectory.
const CROSSING_REL_TOL: f64 = 1e-12;
/// Bisection stops once the bracket is below this fraction of its upper end.
const BISECTION_REL_WIDTH: f64 = 1e-15;
/// Crossings closer than this (relative) are one event.
const SIMULTANEOUS_REL_TOL: f64 = 1e-9;

/// One sampled point of a trajectory.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sample {
    pub time: f64,
    pub correlations: BellDiagonalParams,
    pub sorted: SortedCorrelations,
    /// `Q_G(t) = c_0(t)`.
    pub quantum: f64,
    /// `C_G(t) = c_+(t)`.
    pub classical: f64,
}

impl Sample {
    fn at(time: f64, correlations: BellDiagonalParams) -> Self {
        let sorted = sort_correlations(&correlations);
        Self {
            time,
            correlations,
            sorted,
            quantum: sorted.c_zero(),
            classical: sorted.c_plus(),
        }
    }
}

/// Correlations sampled on a strictly increasing time grid.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    initial: BellDiagonalParams,
    model: ChannelModel,
    samples: Vec<Sample>,
}

impl Trajectory {
    /// Samples the closed-form evolution at the given times.
    pub fn from_times(
        initial: BellDiagonalParams,
        model: ChannelModel,
        times: impl IntoIterator<Item = f64>,
    ) -> Result<Self> {
        let mut samples = Vec::new();
        let mut last = f64::NEG_INFINITY;
        for t in times {
            let c = evolve_bell_diagonal(&initial, t, &model)?;
            if !(t > last) {
                return Err(Error::UnorderedTimes(t));
            }
            last = t;
            samples.push(Sample::at(t, c));
        }
        if samples.len() < 2 {
            return Err(Error::TooFewSteps(samples.len()));
        }
        Ok(Self {
            initial,
            model,
            samples,
        })
    }

    pub fn initial(&self) -> &BellDiagonalParams {
        &self.initial
    }

    pub fn model(&self) -> &ChannelModel {
        &self.model
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.time)
    }

    pub fn quantum_series(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.quantum)
    }

    pub fn classical_series(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.classical)
    }
}

/// Uniform grid of `steps` samples from 0 to `t_max` inclusive.
pub fn simulate_trajectory(
    initial: &BellDiagonalParams,
    model: &ChannelModel,
    t_max: f64,
    steps: usize,
) -> Result<Trajectory> {
    if !(t_max > 0.0 && t_max.is_finite()) {
        return Err(Error::NonPositiveTime {
            name: "t_max",
            value: t_max,
        });
    }
    if steps < 2 {
        return Err(Error::TooFewSteps(steps));
    }
    let last = (steps - 1) as f64;
    let times = (0..steps).map(|k| {
        if k + 1 == steps {
            t_max
        } else {
            t_max * (k as f64 / last)
        }
    });
    Trajectory::from_times(*initial, *model, times)
}

/// Which clauses of the double-transition conditions hold.
///
/// For PD the axis clause is `|c_3| = c_-`, for GAD it is `|c_3| = c_+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct CrossingConditions {
    pub axis3_role: bool,
    pub plus_ne_zero: bool,
    pub zero_ne_minus: bool,
    pub minus_nonzero: bool,
}

impl CrossingConditions {
    pub fn all(&self) -> bool {
        self.axis3_role && self.plus_ne_zero && self.zero_ne_minus && self.minus_nonzero
    }

    /// Human-readable names of the clauses that failed.
    pub fn failed_clauses(&self, kind: ChannelKind) -> impl Iterator<Item = &'static str> {
        let axis = match kind {
            ChannelKind::PhaseDamping => "|c3| = c_minus",
            ChannelKind::GeneralizedAmplitudeDamping => "|c3| = c_plus",
        };
        [
            (self.axis3_role, axis),
            (self.plus_ne_zero, "c_plus != c_zero"),
            (self.zero_ne_minus, "c_zero != c_minus"),
            (self.minus_nonzero, "c_minus != 0"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
    }
}

/// Closed-form times of the two quantum sudden changes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CriticalPoints {
    pub t1: Option<f64>,
    pub t2: Option<f64>,
    pub conditions: CrossingConditions,
}

fn tie(a: f64, b: f64) -> bool {
    (a - b).abs() <= TIE_TOL
}

/// Double sudden change times.
///
/// PD: `t1 = tau ln(c_0/|c_3|)`, `t2 = tau ln(c_+/|c_3|)` when `|c_3| = c_-`.
/// GAD: `t1 = 2 tau ln(|c_3|/c_0)`, `t2 = 2 tau ln(|c_3|/c_-)` when `|c_3| = c_+`.
/// Both also need `c_+ != c_0 != c_- != 0`.
pub fn analytic_critical_points(c: &BellDiagonalParams, model: &ChannelModel) -> CriticalPoints {
    let s = sort_correlations(c);
    let c3 = c.c3().abs();
    let tau = model.decoherence_time();
    let axis3_role = match model.kind() {
        ChannelKind::PhaseDamping => tie(c3, s.c_minus()),
        ChannelKind::GeneralizedAmplitudeDamping => tie(c3, s.c_plus()),
    };
    let conditions = CrossingConditions {
        axis3_role,
        plus_ne_zero: !tie(s.c_plus(), s.c_zero()),
        zero_ne_minus: !tie(s.c_zero(), s.c_minus()),
        minus_nonzero: s.c_minus() > TIE_TOL,
    };
    if !conditions.all() {
        return CriticalPoints {
            t1: None,
            t2: None,
            conditions,
        };
    }
    let (t1, t2) = match model.kind() {
        ChannelKind::PhaseDamping => (
            tau * libm::log(s.c_zero() / c3),
            tau * libm::log(s.c_plus() / c3),
        ),
        ChannelKind::GeneralizedAmplitudeDamping => (
            2.0 * tau * libm::log(c3 / s.c_zero()),
            2.0 * tau * libm::log(c3 / s.c_minus()),
        ),
    };
    CriticalPoints {
        t1: Some(t1),
        t2: Some(t2),
        conditions,
    }
}

/// Time of the single sudden change in `C_G`, if any.
///
/// PD: `tau ln(c_+/|c_3|)` when `c_+ > |c_3| != 0`.
/// GAD: `2 tau ln(|c_3|/c_0)` when `|c_3| > c_0 != 0`.
pub fn classical_sudden_change_time(c: &BellDiagonalParams, model: &ChannelModel) -> Option<f64> {
    let s = sort_correlations(c);
    let c3 = c.c3().abs();
    let tau = model.decoherence_time();
    match model.kind() {
        ChannelKind::PhaseDamping => {
            (s.c_plus() > c3 + TIE_TOL && c3 > TIE_TOL).then(|| tau * libm::log(s.c_plus() / c3))
        }
        ChannelKind::GeneralizedAmplitudeDamping => (c3 > s.c_zero() + TIE_TOL
            && s.c_zero() > TIE_TOL)
            .then(|| 2.0 * tau * libm::log(c3 / s.c_zero())),
    }
}

/// Time after which `C_G` stays constant.
///
/// Only PD has one: `tau ln(c_+/|c_3|)` when `c_+ > |c_3| != 0`, and zero when
/// `c_+ = |c_3| != 0`. Under GAD `C_G` keeps decaying.
pub fn pointer_basis_time(c: &BellDiagonalParams, model: &ChannelModel) -> Option<f64> {
    if model.kind() != ChannelKind::PhaseDamping {
        return None;
    }
    let c3 = c.c3().abs();
    if c3 <= TIE_TOL {
        return None;
    }
    let c_plus = sort_correlations(c).c_plus();
    if c_plus > c3 + TIE_TOL {
        Some(model.decoherence_time() * libm::log(c_plus / c3))
    } else {
        Some(0.0)
    }
}

/// Sudden changes located along a trajectory.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct SuddenChanges {
    /// Switches of the axis carrying `c_0`, ascending.
    pub quantum: Vec<f64>,
    /// Switches of the axis carrying `c_+`, ascending.
    pub classical: Vec<f64>,
    /// Sampling intervals that contained more than one crossing.
    pub crowded_intervals: Vec<(f64, f64)>,
}

struct Crossing {
    time: f64,
    lo: f64,
    hi: f64,
}

fn relative_tie(a: f64, b: f64) -> bool {
    (a - b).abs() <= CROSSING_REL_TOL * a.max(b)
}

/// Detects axis switches of the `c_0` and `c_+` roles.
///
/// Each pair of `|c_i(t)|` curves crosses at most once, so every sampling
/// interval is scanned pair by pair and each flip is bisected on the closed
/// form. Curves already tied at the first sample and curves that coincide
/// identically do not produce changes.
pub fn detect_sudden_changes(traj: &Trajectory) -> SuddenChanges {
    let model = traj.model();
    let initial = traj.initial();
    let at = |t: f64| evolve_unchecked(initial, t, model).to_array().map(f64::abs);
    let precedes = |i: usize, j: usize, t: f64| {
        let v = at(t);
        if relative_tie(v[i], v[j]) {
            i < j
        } else {
            v[i] < v[j]
        }
    };

    let samples = traj.samples();
    let t_first = samples[0].time;
    let t_last = samples[samples.len() - 1].time;
    let start = at(t_first);
    let end = at(t_last);
    let identical =
        |i: usize, j: usize| relative_tie(start[i], start[j]) && relative_tie(end[i], end[j]);

    let mut crossings: Vec<Crossing> = Vec::new();
    let mut crowded_intervals = Vec::new();
    for window in samples.windows(2) {
        let (a, b) = (window[0].time, window[1].time);
        let before = crossings.len();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if relative_tie(start[i], start[j]) {
                continue;
            }
            let flipped_at_a = precedes(i, j, a);
            if flipped_at_a == precedes(i, j, b) {
                continue;
            }
            let (mut lo, mut hi) = (a, b);
            while hi - lo > BISECTION_REL_WIDTH * hi {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if precedes(i, j, mid) == flipped_at_a {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            crossings.push(Crossing {
                time: 0.5 * (lo + hi),
                lo,
                hi,
            });
        }
        let found = &mut crossings[before..];
        found.sort_by(|x, y| x.time.total_cmp(&y.time));
        let distinct = found
            .windows(2)
            .filter(|w| !simultaneous(w[0].time, w[1].time))
            .count()
            + usize::from(!found.is_empty());
        if distinct > 1 {
            crowded_intervals.push((a, b));
        }
    }

    let mut quantum = Vec::new();
    let mut classical = Vec::new();
    let mut k = 0;
    while k < crossings.len() {
        let mut lo = crossings[k].lo;
        let mut hi = crossings[k].hi;
        let mut sum = crossings[k].time;
        let mut count = 1;
        while k + count < crossings.len()
            && simultaneous(crossings[k].time, crossings[k + count].time)
        {
            let c = &crossings[k + count];
            lo = lo.min(c.lo);
            hi = hi.max(c.hi);
            sum += c.time;
            count += 1;
        }
        let time = sum / count as f64;
        k += count;

        let roles = |t: f64| {
            let c = evolve_unchecked(initial, t, model);
            sort_by(&c, relative_tie)
        };
        let (r_lo, r_hi) = (roles(lo), roles(hi));
        let switched = |x: Axis, y: Axis| x != y && !identical(x.index() - 1, y.index() - 1);
        if switched(r_lo.axis_zero(), r_hi.axis_zero()) {
            quantum.push(time);
        }
        if switched(r_lo.axis_plus(), r_hi.axis_plus()) {
            classical.push(time);
        }
    }

    SuddenChanges {
        quantum,
        classical,
        crowded_intervals,
    }
}

fn simultaneous(a: f64, b: f64) -> bool {
    (a - b).abs() <= SIMULTANEOUS_REL_TOL * a.abs().max(b.abs())
}

/// Analytic and detected transitions of one trajectory.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitionReport {
    pub decoherence_time: f64,
    pub quantum_changes: Vec<f64>,
    pub classical_changes: Vec<f64>,
    pub crowded_intervals: Vec<(f64, f64)>,
    pub analytic_t1: Option<f64>,
    pub analytic_t2: Option<f64>,
    pub conditions: CrossingConditions,
    pub classical_change_time: Option<f64>,
    pub pointer_basis_time: Option<f64>,
}

pub fn transition_report(traj: &Trajectory) -> TransitionReport {
    let c = traj.initial();
    let model = traj.model();
    let detected = detect_sudden_changes(traj);
    let critical = analytic_critical_points(c, model);
    TransitionReport {
        decoherence_time: model.decoherence_time(),
        quantum_changes: detected.quantum,
        classical_changes: detected.classical,
        crowded_intervals: detected.crowded_intervals,
        analytic_t1: critical.t1,
        analytic_t2: critical.t2,
        conditions: critical.conditions,
        classical_change_time: classical_sudden_change_time(c, model),
        pointer_basis_time: pointer_basis_time(c, model),
    }
}
