//! Non-linear neural feature-maps.
//!
//! A feature-map transforms base-features `b` in `[0,1]^{N_b}` into
//! target-features `beta` in `(0,1)^{N_t}` through one hidden layer with a
//! scaled sigmoid on both layers. The flat meta-genotype evolved by CMA-ES
//! is decoded into the network weights here; components are clamped to
//! `[-1,1]` at transform time because CMA-ES sampling is unbounded.

use crate::{Error, Result};

/// Default sigmoid scaling factor.
pub const DEFAULT_ALPHA_S: f64 = 30.0;

/// Layer sizes of a feature-map network.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NetworkDims {
    /// Base-feature count `N_b`.
    pub inputs: usize,
    /// Hidden unit count `N_h`.
    pub hidden: usize,
    /// Target-feature count `N_t`.
    pub outputs: usize,
}

impl NetworkDims {
    pub fn new(inputs: usize, hidden: usize, outputs: usize) -> Self {
        Self {
            inputs,
            hidden,
            outputs,
        }
    }

    /// Length of the flat meta-genotype for these dims:
    /// `N_h * N_b + N_t * N_h + 2` (two scalar shared biases).
    pub fn weight_count(&self) -> usize {
        self.hidden * self.inputs + self.outputs * self.hidden + 2
    }
}

/// Flat weight vector evolved in meta-genotypic space, nominal range
/// `[-1,1]` per component.
#[derive(Clone, Debug, PartialEq)]
pub struct MetaGenotype {
    weights: Vec<f64>,
}

impl MetaGenotype {
    pub fn new(weights: Vec<f64>) -> Self {
        Self { weights }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

impl From<Vec<f64>> for MetaGenotype {
    fn from(weights: Vec<f64>) -> Self {
        Self::new(weights)
    }
}

/// Elementwise sigmoid that scales the incoming activation by the number
/// of incoming units: `1 / (1 + exp(-alpha_s * x / (N + 1)))`.
pub fn scaled_sigmoid(x: f64, n_inputs: usize, alpha_s: f64) -> f64 {
    1.0 / (1.0 + (-alpha_s * x / (n_inputs + 1) as f64).exp())
}

/// A decoded feature-map: input-to-hidden and hidden-to-output weight
/// matrices with one shared scalar bias per layer.
#[derive(Clone, Debug, PartialEq)]
pub struct FeatureMapNetwork {
    dims: NetworkDims,
    /// `N_h x N_b`, row-major.
    w1: Vec<f64>,
    /// `N_t x N_h`, row-major.
    w2: Vec<f64>,
    b1: f64,
    b2: f64,
    alpha_s: f64,
}

impl FeatureMapNetwork {
    /// Decodes a meta-genotype: every component is clamped to `[-1,1]`,
    /// then consumed in fixed order W1 row-major, W2 row-major, B1, B2.
    pub fn from_meta_genotype(
        w: &MetaGenotype,
        dims: NetworkDims,
        alpha_s: f64,
    ) -> Result<Self> {
        let expected = dims.weight_count();
        if w.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: w.len(),
            });
        }
        let clamped: Vec<f64> = w.weights().iter().map(|v| v.clamp(-1.0, 1.0)).collect();
        let n1 = dims.hidden * dims.inputs;
        let n2 = dims.outputs * dims.hidden;
        Ok(Self {
            dims,
            w1: clamped[..n1].to_vec(),
            w2: clamped[n1..n1 + n2].to_vec(),
            b1: clamped[n1 + n2],
            b2: clamped[n1 + n2 + 1],
            alpha_s,
        })
    }

    pub fn dims(&self) -> NetworkDims {
        self.dims
    }

    /// Forward pass `beta = S_{N_h}(W2 * S_{N_b}(W1 b + B1) + B2)`. Every
    /// output lies strictly in `(0,1)`.
    pub fn map_features(&self, base: &[f64]) -> Result<Vec<f64>> {
        if base.len() != self.dims.inputs {
            return Err(Error::LengthMismatch {
                expected: self.dims.inputs,
                got: base.len(),
            });
        }
        let mut hidden = vec![0.0; self.dims.hidden];
        for (h, row) in hidden.iter_mut().zip(self.w1.chunks_exact(self.dims.inputs)) {
            let mut acc = self.b1;
            for (w, b) in row.iter().zip(base) {
                acc += w * b;
            }
            *h = scaled_sigmoid(acc, self.dims.inputs, self.alpha_s);
        }
        let mut out = vec![0.0; self.dims.outputs];
        for (o, row) in out.iter_mut().zip(self.w2.chunks_exact(self.dims.hidden)) {
            let mut acc = self.b2;
            for (w, h) in row.iter().zip(&hidden) {
                acc += w * h;
            }
            *o = scaled_sigmoid(acc, self.dims.hidden, self.alpha_s);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream, tags};
    use rand::Rng;

    const TABLE_DIMS: NetworkDims = NetworkDims {
        inputs: 20,
        hidden: 10,
        outputs: 2,
    };

    #[test]
    fn weight_count_identities() {
        assert_eq!(TABLE_DIMS.weight_count(), 222);
        // Cross-check against the robot-domain configuration.
        assert_eq!(NetworkDims::new(50, 10, 4).weight_count(), 542);
    }

    #[test]
    fn zero_genotype_gives_all_half_outputs() {
        let w = MetaGenotype::new(vec![0.0; 222]);
        let net = FeatureMapNetwork::from_meta_genotype(&w, TABLE_DIMS, DEFAULT_ALPHA_S).unwrap();
        let beta = net.map_features(&vec![0.3; 20]).unwrap();
        assert_eq!(beta, vec![0.5, 0.5]);
    }

    #[test]
    fn components_clamp_to_unit_box() {
        let mut weights = vec![0.0; 222];
        weights[0] = 2.0;
        weights[1] = -7.5;
        let net = FeatureMapNetwork::from_meta_genotype(
            &MetaGenotype::new(weights),
            TABLE_DIMS,
            DEFAULT_ALPHA_S,
        )
        .unwrap();
        assert_eq!(net.w1[0], 1.0);
        assert_eq!(net.w1[1], -1.0);
    }

    #[test]
    fn wrong_length_rejected() {
        let w = MetaGenotype::new(vec![0.0; 221]);
        assert!(FeatureMapNetwork::from_meta_genotype(&w, TABLE_DIMS, DEFAULT_ALPHA_S).is_err());
        let net = FeatureMapNetwork::from_meta_genotype(
            &MetaGenotype::new(vec![0.0; 222]),
            TABLE_DIMS,
            DEFAULT_ALPHA_S,
        )
        .unwrap();
        assert!(net.map_features(&[0.0; 19]).is_err());
    }

    #[test]
    fn scaled_sigmoid_fixed_points() {
        assert_eq!(scaled_sigmoid(0.0, 10, DEFAULT_ALPHA_S), 0.5);
        // Scaled argument exactly 1: 1/(1 + e^-1).
        let x = (10.0 + 1.0) / DEFAULT_ALPHA_S;
        assert!((scaled_sigmoid(x, 10, DEFAULT_ALPHA_S) - 0.7310585786300049).abs() < 1e-15);
        // Monotone and bounded at the extremes.
        assert!(scaled_sigmoid(1e6, 10, DEFAULT_ALPHA_S) > 1.0 - 1e-12);
        assert!(scaled_sigmoid(-1e6, 10, DEFAULT_ALPHA_S) < 1e-12);
        let mut prev = f64::NEG_INFINITY;
        for k in -100..=100 {
            let v = scaled_sigmoid(k as f64 / 10.0, 10, DEFAULT_ALPHA_S);
            assert!(v > prev && (0.0..=1.0).contains(&v));
            prev = v;
        }
    }

    #[test]
    fn miniature_network_matches_manual_arithmetic() {
        // 2-input / 2-hidden / 1-output network, worked by hand:
        //   W1 = [[0.5, -0.25], [1, 1]], B1 = 0.1, W2 = [[0.3, -0.2]],
        //   B2 = -0.05, alpha_s = 30, b = (0.2, 0.8)
        // hidden pre-activations: (0.0, 1.1); scale 30/3 = 10
        // h = (0.5, sigmoid(11)); output pre: 0.3*h1 - 0.2*h2 - 0.05
        let dims = NetworkDims::new(2, 2, 1);
        let w = MetaGenotype::new(vec![0.5, -0.25, 1.0, 1.0, 0.3, -0.2, 0.1, -0.05]);
        let net = FeatureMapNetwork::from_meta_genotype(&w, dims, 30.0).unwrap();
        let beta = net.map_features(&[0.2, 0.8]).unwrap();
        assert_eq!(beta.len(), 1);
        assert!((beta[0] - 0.26894798881835696).abs() < 1e-12, "beta = {}", beta[0]);
    }

    #[test]
    fn outputs_stay_in_open_unit_interval() {
        let mut rng = stream(17, tags::TEST, 10, 0);
        for _ in 0..10_000 {
            let w = MetaGenotype::new(
                (0..222).map(|_| 3.0 * (rng.random::<f64>() - 0.5)).collect(),
            );
            let net =
                FeatureMapNetwork::from_meta_genotype(&w, TABLE_DIMS, DEFAULT_ALPHA_S).unwrap();
            let base: Vec<f64> = (0..20).map(|_| rng.random::<f64>()).collect();
            for &v in &net.map_features(&base).unwrap() {
                assert!(v > 0.0 && v < 1.0, "output {v} left (0,1)");
            }
        }
    }

    #[test]
    fn forward_pass_is_continuous_in_base_features() {
        let mut rng = stream(19, tags::TEST, 11, 0);
        for _ in 0..200 {
            let w = MetaGenotype::new(
                (0..222).map(|_| 2.0 * rng.random::<f64>() - 1.0).collect(),
            );
            let net =
                FeatureMapNetwork::from_meta_genotype(&w, TABLE_DIMS, DEFAULT_ALPHA_S).unwrap();
            let base: Vec<f64> = (0..20).map(|_| rng.random::<f64>()).collect();
            let beta = net.map_features(&base).unwrap();
            let mut nudged = base.clone();
            let k = rng.random_range(0..20);
            nudged[k] = (nudged[k] + 1e-6).min(1.0);
            let beta2 = net.map_features(&nudged).unwrap();
            for (a, b) in beta.iter().zip(&beta2) {
                assert!((a - b).abs() < 1e-3, "discontinuous response: {a} -> {b}");
            }
        }
    }
}
