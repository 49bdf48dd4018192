#![allow(dead_code)]

use bellcorr_core::{BellDiagonalParams, ChannelKind, ChannelModel, DensityMatrix, Matrix4};
use num_complex::Complex64;
use proptest::prelude::*;

/// Bell-diagonal correlations from four Bell-state weights `w_k` (normalized).
pub fn from_weights(w: [f64; 4]) -> BellDiagonalParams {
    let s: f64 = w.iter().sum();
    let [a, b, c, d] = w.map(|x| x / s);
    BellDiagonalParams::new(a - b + c - d, -a + b + c - d, a + b - c - d).unwrap()
}

pub fn bell_params() -> impl Strategy<Value = BellDiagonalParams> {
    [0.001f64..1.0, 0.001f64..1.0, 0.001f64..1.0, 0.001f64..1.0].prop_map(from_weights)
}

pub fn complex_matrix() -> impl Strategy<Value = Matrix4> {
    proptest::collection::vec(-1.0f64..1.0, 32).prop_map(|v| {
        let mut m = Matrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                let k = 2 * (4 * i + j);
                m[(i, j)] = Complex64::new(v[k], v[k + 1]);
            }
        }
        m
    })
}

pub fn hermitian() -> impl Strategy<Value = Matrix4> {
    complex_matrix().prop_map(|g| (g + g.adjoint()).scale(0.5))
}

/// `G G^dagger / tr(G G^dagger)`.
pub fn density() -> impl Strategy<Value = DensityMatrix> {
    complex_matrix().prop_map(|g| {
        let m = g * g.adjoint();
        let tr = m.trace().re;
        DensityMatrix::new(m.scale(1.0 / tr)).unwrap()
    })
}

pub fn channel_kind() -> impl Strategy<Value = ChannelKind> {
    prop_oneof![
        Just(ChannelKind::PhaseDamping),
        Just(ChannelKind::GeneralizedAmplitudeDamping)
    ]
}

/// Models whose closed form applies (gamma = 1/2 for GAD).
pub fn bell_model() -> impl Strategy<Value = ChannelModel> {
    (channel_kind(), 0.01f64..10.0, 0.01f64..10.0)
        .prop_map(|(kind, ta, tb)| ChannelModel::new(kind, ta, tb, 0.5).unwrap())
}

/// Times at which `|c_3(t)|` meets `|c_1(t)|` or `|c_2(t)|`, straight from the
/// decay laws `|c_i| e^{-r_i t}`.
pub fn pairwise_crossing_times(c: &BellDiagonalParams, model: &ChannelModel) -> Vec<f64> {
    let tau = model.decoherence_time();
    let (rate12, rate3) = match model.kind() {
        ChannelKind::PhaseDamping => (1.0 / tau, 0.0),
        ChannelKind::GeneralizedAmplitudeDamping => (0.5 / tau, 1.0 / tau),
    };
    let c3 = c.c3().abs();
    [c.c1().abs(), c.c2().abs()]
        .into_iter()
        .filter(|&ci| ci > 0.0 && c3 > 0.0)
        .map(|ci| (ci / c3).ln() / (rate12 - rate3))
        .filter(|&t| t > 0.0)
        .collect()
}
