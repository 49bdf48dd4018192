//! Local decoherence channels: Kraus sets for phase damping (PD) and
//! generalized amplitude damping (GAD), the operator-sum map on two qubits,
//! and the closed-form decay of Bell-diagonal correlations.
//!
//! Time is the only evolution parameter exposed to callers; the damping
//! probability of qubit `s` is always `p_s = 1 - exp(-t / T_s)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::qstate::{pauli, Axis, BellDiagonalParams, DensityMatrix, Matrix2, Matrix4};
use crate::{Error, Result};

/// Tolerance on `sum_k E_k^dagger E_k = I`.
pub const COMPLETENESS_TOL: f64 = 1e-10;

/// Tolerance used to decide that GAD runs at `gamma = 1/2`.
pub const GAMMA_HALF_TOL: f64 = 1e-12;

/// Kraus operators of one single-qubit trace-preserving channel.
#[derive(Clone, Debug, PartialEq)]
pub struct KrausSet {
    operators: Vec<Matrix2>,
}

impl KrausSet {
    pub fn new(operators: Vec<Matrix2>) -> Result<Self> {
        if operators.is_empty() {
            return Err(Error::EmptyKraus);
        }
        let set = Self { operators };
        let deviation = set.completeness_defect();
        if !(deviation <= COMPLETENESS_TOL) {
            return Err(Error::IncompleteKraus { deviation });
        }
        Ok(set)
    }

    pub fn identity() -> Self {
        Self {
            operators: vec![Matrix2::identity()],
        }
    }

    pub fn operators(&self) -> &[Matrix2] {
        &self.operators
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    /// `max |sum_k E_k^dagger E_k - I|`.
    pub fn completeness_defect(&self) -> f64 {
        let sum = self
            .operators
            .iter()
            .fold(Matrix2::zeros(), |acc, e| acc + e.adjoint() * *e);
        sum.max_abs_diff(&Matrix2::identity())
    }

    /// Single-qubit action `sum_k E_k rho E_k^dagger`.
    pub fn apply(&self, rho: &Matrix2) -> Matrix2 {
        self.operators
            .iter()
            .fold(Matrix2::zeros(), |acc, e| acc + rho.conjugate_by(e))
    }
}

fn check_probability(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::OutOfUnitInterval { name, value })
    }
}

/// Phase damping: `E0 = sqrt(1 - p/2) I`, `E1 = sqrt(p/2) sigma_z`.
pub fn pd_kraus(p: f64) -> Result<KrausSet> {
    check_probability("p", p)?;
    KrausSet::new(vec![
        Matrix2::identity().scale(libm::sqrt(1.0 - p / 2.0)),
        pauli(Axis::Z).scale(libm::sqrt(p / 2.0)),
    ])
}

/// Generalized amplitude damping with damping probability `p` and
/// thermal weight `gamma` (the population left in |0> at equilibrium).
pub fn gad_kraus(p: f64, gamma: f64) -> Result<KrausSet> {
    check_probability("p", p)?;
    gad_kraus_split(libm::sqrt(1.0 - p), libm::sqrt(p), gamma)
}

/// GAD from the survival amplitude `keep = sqrt(1 - p)` and `jump = sqrt(p)`
/// given separately, so that `keep` keeps full relative precision when `p`
/// rounds to 1.
fn gad_kraus_split(keep: f64, jump: f64, gamma: f64) -> Result<KrausSet> {
    check_probability("gamma", gamma)?;
    let g = libm::sqrt(gamma);
    let h = libm::sqrt(1.0 - gamma);
    KrausSet::new(vec![
        Matrix2::from_real_rows([[g, 0.0], [0.0, g * keep]]),
        Matrix2::from_real_rows([[0.0, g * jump], [0.0, 0.0]]),
        Matrix2::from_real_rows([[h * keep, 0.0], [0.0, h]]),
        Matrix2::from_real_rows([[0.0, 0.0], [h * jump, 0.0]]),
    ])
}

/// `sum_{i,j} (E_i^A ⊗ E_j^B) rho (E_i^A ⊗ E_j^B)^dagger`.
pub fn apply_local_channels(rho: &DensityMatrix, a: &KrausSet, b: &KrausSet) -> DensityMatrix {
    let mut out = Matrix4::zeros();
    for ea in a.operators() {
        for eb in b.operators() {
            out = out + rho.matrix().conjugate_by(&ea.kron(eb));
        }
    }
    DensityMatrix::new_unchecked(out)
}

/// `T_A T_B / (T_A + T_B)`.
pub fn decoherence_time(t_a: f64, t_b: f64) -> Result<f64> {
    check_time("T_A", t_a)?;
    check_time("T_B", t_b)?;
    Ok(t_a * t_b / (t_a + t_b))
}

fn check_time(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveTime { name, value })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    PhaseDamping,
    GeneralizedAmplitudeDamping,
}

impl ChannelKind {
    /// Short lowercase tag, `pd` or `gad`.
    pub fn tag(self) -> &'static str {
        match self {
            ChannelKind::PhaseDamping => "pd",
            ChannelKind::GeneralizedAmplitudeDamping => "gad",
        }
    }
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Same channel kind on both qubits, with independent relaxation times.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelModel {
    kind: ChannelKind,
    t_a: f64,
    t_b: f64,
    gamma: f64,
}

impl ChannelModel {
    /// `gamma` only matters for GAD.
    pub fn new(kind: ChannelKind, t_a: f64, t_b: f64, gamma: f64) -> Result<Self> {
        check_time("T_A", t_a)?;
        check_time("T_B", t_b)?;
        check_probability("gamma", gamma)?;
        Ok(Self {
            kind,
            t_a,
            t_b,
            gamma,
        })
    }

    pub fn phase_damping(t_a: f64, t_b: f64) -> Result<Self> {
        Self::new(ChannelKind::PhaseDamping, t_a, t_b, 0.5)
    }

    pub fn generalized_amplitude_damping(t_a: f64, t_b: f64, gamma: f64) -> Result<Self> {
        Self::new(ChannelKind::GeneralizedAmplitudeDamping, t_a, t_b, gamma)
    }

    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn t_a(&self) -> f64 {
        self.t_a
    }

    pub fn t_b(&self) -> f64 {
        self.t_b
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn decoherence_time(&self) -> f64 {
        self.t_a * self.t_b / (self.t_a + self.t_b)
    }

    /// True when the closed-form Bell-diagonal laws apply.
    pub fn preserves_bell_diagonal(&self) -> bool {
        match self.kind {
            ChannelKind::PhaseDamping => true,
            ChannelKind::GeneralizedAmplitudeDamping => (self.gamma - 0.5).abs() <= GAMMA_HALF_TOL,
        }
    }

    /// `(p_A, p_B)` at time `t`.
    pub fn damping_probabilities(&self, t: f64) -> Result<(f64, f64)> {
        if !(t >= 0.0) {
            return Err(Error::NegativeTime(t));
        }
        let p = |relax: f64| -libm::expm1(-t / relax);
        Ok((p(self.t_a), p(self.t_b)))
    }

    /// Kraus sets for qubits A and B after evolving for `t`.
    pub fn kraus_sets(&self, t: f64) -> Result<(KrausSet, KrausSet)> {
        let (p_a, p_b) = self.damping_probabilities(t)?;
        match self.kind {
            ChannelKind::PhaseDamping => Ok((pd_kraus(p_a)?, pd_kraus(p_b)?)),
            ChannelKind::GeneralizedAmplitudeDamping => {
                let kraus = |p: f64, relax: f64| {
                    gad_kraus_split(libm::exp(-t / (2.0 * relax)), libm::sqrt(p), self.gamma)
                };
                Ok((kraus(p_a, self.t_a)?, kraus(p_b, self.t_b)?))
            }
        }
    }

    /// Full operator-sum evolution of an arbitrary two-qubit state.
    pub fn evolve_density(&self, rho: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
        let (a, b) = self.kraus_sets(t)?;
        Ok(apply_local_channels(rho, &a, &b))
    }
}

/// Closed-form correlations at time `t`.
///
/// PD: `(c1 e^{-t/tau}, c2 e^{-t/tau}, c3)`;
/// GAD at `gamma = 1/2`: `(c1 e^{-t/2tau}, c2 e^{-t/2tau}, c3 e^{-t/tau})`,
/// with `tau` the decoherence time.
pub fn evolve_bell_diagonal(
    c: &BellDiagonalParams,
    t: f64,
    model: &ChannelModel,
) -> Result<BellDiagonalParams> {
    if !(t >= 0.0) {
        return Err(Error::NegativeTime(t));
    }
    if !model.preserves_bell_diagonal() {
        return Err(Error::GammaNotHalf(model.gamma));
    }
    Ok(evolve_unchecked(c, t, model))
}

/// [`evolve_bell_diagonal`] without argument checks.
pub(crate) fn evolve_unchecked(
    c: &BellDiagonalParams,
    t: f64,
    model: &ChannelModel,
) -> BellDiagonalParams {
    let rate = t / model.decoherence_time();
    let [c1, c2, c3] = c.to_array();
    let out = match model.kind {
        ChannelKind::PhaseDamping => {
            let f = libm::exp(-rate);
            [c1 * f, c2 * f, c3]
        }
        ChannelKind::GeneralizedAmplitudeDamping => {
            let f = libm::exp(-rate / 2.0);
            [c1 * f, c2 * f, c3 * libm::exp(-rate)]
        }
    };
    BellDiagonalParams::new_unchecked(out)
}
