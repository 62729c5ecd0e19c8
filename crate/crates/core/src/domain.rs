//! Rastrigin fitness landscape, genotype encoding, and the landscape
//! perturbations used for meta-fitness evaluation and the test phase.
//!
//! Genotypes are stored normalized in `[0,1]` and decoded affinely into the
//! Rastrigin domain `[-5.12, 5.12]` at evaluation time. All evaluators use
//! the maximization framing: the base landscape has its global maximum 0 at
//! the origin and is negative everywhere else.

use crate::{Error, Result};
use rand::Rng;

/// Lower bound of the Rastrigin search domain.
pub const COORD_MIN: f64 = -5.12;
/// Upper bound of the Rastrigin search domain.
pub const COORD_MAX: f64 = 5.12;
/// Genotype length of the benchmark configuration.
pub const DEFAULT_GENES: usize = 20;
/// Number of index pairs in the Dimension test suite.
pub const DIMENSION_SUITE_LEN: usize = 120;
/// Number of `(a, b)` pairs drawn per Translation meta-fitness evaluation.
pub const TRANSLATION_SET_LEN: usize = 16;

/// Normalized search point; every gene lies in `[0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Genotype {
    genes: Vec<f64>,
}

impl Genotype {
    pub fn new(genes: Vec<f64>) -> Result<Self> {
        if let Some(&g) = genes.iter().find(|g| !(0.0..=1.0).contains(*g)) {
            return Err(Error::InvalidParameter(format!(
                "gene {g} outside [0,1]"
            )));
        }
        Ok(Self { genes })
    }

    /// Uniform random genotype of the given length.
    pub fn random(len: usize, rng: &mut impl Rng) -> Self {
        Self {
            genes: (0..len).map(|_| rng.random::<f64>()).collect(),
        }
    }

    pub fn genes(&self) -> &[f64] {
        &self.genes
    }

    pub fn len(&self) -> usize {
        self.genes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.genes.is_empty()
    }

    /// Affine map `[0,1] -> [-5.12, 5.12]` applied elementwise.
    pub fn decode(&self) -> SearchPoint {
        SearchPoint {
            coords: self
                .genes
                .iter()
                .map(|g| COORD_MIN + (COORD_MAX - COORD_MIN) * g)
                .collect(),
        }
    }

    pub(crate) fn from_genes_unchecked(genes: Vec<f64>) -> Self {
        debug_assert!(genes.iter().all(|g| (0.0..=1.0).contains(g)));
        Self { genes }
    }
}

/// A genotype decoded into Rastrigin coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchPoint {
    coords: Vec<f64>,
}

impl SearchPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if let Some(&c) = coords.iter().find(|c| !(COORD_MIN..=COORD_MAX).contains(*c)) {
            return Err(Error::InvalidParameter(format!(
                "coordinate {c} outside [{COORD_MIN}, {COORD_MAX}]"
            )));
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Inverse of [`Genotype::decode`].
    pub fn encode(&self) -> Genotype {
        Genotype {
            genes: self
                .coords
                .iter()
                .map(|c| ((c - COORD_MIN) / (COORD_MAX - COORD_MIN)).clamp(0.0, 1.0))
                .collect(),
        }
    }
}

fn rastrigin_term(x: f64) -> f64 {
    x * x - 10.0 * (2.0 * std::f64::consts::PI * x).cos()
}

/// Negated Rastrigin: `-(10 N + sum_i (x_i^2 - 10 cos(2 pi x_i)))`.
/// Global maximum 0 at the origin.
pub fn rastrigin(x: &SearchPoint) -> f64 {
    rastrigin_raw(&x.coords)
}

pub(crate) fn rastrigin_raw(coords: &[f64]) -> f64 {
    let sum: f64 = coords.iter().map(|&x| rastrigin_term(x)).sum();
    -(10.0 * coords.len() as f64 + sum)
}

/// Rastrigin with dimension `j` removed from the computation:
/// `-(10 (N-1) + sum_{i != j} (x_i^2 - 10 cos(2 pi x_i)))`.
pub fn eval_dimension_drop(x: &SearchPoint, j: usize) -> Result<f64> {
    let n = x.coords.len();
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, len: n });
    }
    let sum: f64 = x
        .coords
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != j)
        .map(|(_, &x)| rastrigin_term(x))
        .sum();
    Ok(-(10.0 * (n - 1) as f64 + sum))
}

/// Dimension-test landscape: the two dimensions in `j_pair` are removed
/// from the Rastrigin computation and replaced by high-frequency
/// sinusoidal noise of the same amplitude:
/// `-(10 (N-2) + sum_{i not in J} (x_i^2 - 10 cos(2 pi x_i)) - sum_{i in J} 10 sin(6 pi x_i))`.
pub fn eval_dimension_noise_test(x: &SearchPoint, j_pair: (usize, usize)) -> Result<f64> {
    let n = x.coords.len();
    let (j0, j1) = j_pair;
    if j0 >= n {
        return Err(Error::IndexOutOfRange { index: j0, len: n });
    }
    if j1 >= n {
        return Err(Error::IndexOutOfRange { index: j1, len: n });
    }
    if j0 == j1 {
        return Err(Error::DuplicateIndex(j0));
    }
    let mut sum = 0.0;
    for (i, &xi) in x.coords.iter().enumerate() {
        if i == j0 || i == j1 {
            sum -= 10.0 * (6.0 * std::f64::consts::PI * xi).sin();
        } else {
            sum += rastrigin_term(xi);
        }
    }
    Ok(-(10.0 * (n - 2) as f64 + sum))
}

/// Applies `T(x) = a x + b` elementwise, then evaluates the Rastrigin on
/// the transformed point. Transformed coordinates are not re-clamped; the
/// formula is evaluated wherever the transform lands.
pub fn eval_translation(x: &SearchPoint, a: f64, b: f64) -> Result<f64> {
    if a == 0.0 {
        return Err(Error::ZeroSlope);
    }
    let sum: f64 = x.coords.iter().map(|&xi| rastrigin_term(a * xi + b)).sum();
    Ok(-(10.0 * x.coords.len() as f64 + sum))
}

/// A fitness landscape the test phase can evaluate solutions on.
#[derive(Clone, Debug, PartialEq)]
pub enum Landscape {
    Base,
    DimensionDrop { drop_index: usize },
    DimensionNoise { indices: (usize, usize) },
    Translation { a: f64, b: f64 },
}

impl Landscape {
    pub fn dimension_drop(drop_index: usize, n_genes: usize) -> Result<Self> {
        if drop_index >= n_genes {
            return Err(Error::IndexOutOfRange {
                index: drop_index,
                len: n_genes,
            });
        }
        Ok(Landscape::DimensionDrop { drop_index })
    }

    pub fn dimension_noise(indices: (usize, usize), n_genes: usize) -> Result<Self> {
        if indices.0 >= n_genes {
            return Err(Error::IndexOutOfRange {
                index: indices.0,
                len: n_genes,
            });
        }
        if indices.1 >= n_genes {
            return Err(Error::IndexOutOfRange {
                index: indices.1,
                len: n_genes,
            });
        }
        if indices.0 == indices.1 {
            return Err(Error::DuplicateIndex(indices.0));
        }
        Ok(Landscape::DimensionNoise { indices })
    }

    pub fn translation(a: f64, b: f64) -> Result<Self> {
        if a == 0.0 {
            return Err(Error::ZeroSlope);
        }
        Ok(Landscape::Translation { a, b })
    }

    /// Evaluates the landscape at a decoded search point. Construction
    /// validated the variant, so this cannot fail for points of the
    /// length the variant was built for.
    pub fn evaluate(&self, x: &SearchPoint) -> f64 {
        match *self {
            Landscape::Base => rastrigin(x),
            Landscape::DimensionDrop { drop_index } => {
                eval_dimension_drop(x, drop_index).expect("validated at construction")
            }
            Landscape::DimensionNoise { indices } => {
                eval_dimension_noise_test(x, indices).expect("validated at construction")
            }
            Landscape::Translation { a, b } => {
                eval_translation(x, a, b).expect("validated at construction")
            }
        }
    }

    /// Short label for scenario CSVs.
    pub fn label(&self) -> String {
        match *self {
            Landscape::Base => "base".to_string(),
            Landscape::DimensionDrop { drop_index } => format!("drop({drop_index})"),
            Landscape::DimensionNoise { indices } => {
                format!("noise({},{})", indices.0, indices.1)
            }
            Landscape::Translation { a, b } => format!("translate({a},{b})"),
        }
    }
}

/// Draws the 16 translations of one Translation meta-fitness evaluation:
/// 8 non-overlapping ranges given by the sign of `a`, shrink vs. expand,
/// and the sign of `b`, with two independent draws per range.
pub fn sample_translation_set(rng: &mut impl Rng) -> Vec<(f64, f64)> {
    let mut set = Vec::with_capacity(TRANSLATION_SET_LEN);
    for octant in 0..8u8 {
        let a_negative = octant & 0b100 != 0;
        let shrink = octant & 0b010 != 0;
        let b_negative = octant & 0b001 != 0;
        for _ in 0..2 {
            let magnitude = if shrink {
                0.91 + 0.09 * rng.random::<f64>()
            } else {
                1.0 + 0.10 * rng.random::<f64>()
            };
            let a = if a_negative { -magnitude } else { magnitude };
            let b_mag = 0.5 * rng.random::<f64>();
            let b = if b_negative { -b_mag } else { b_mag };
            set.push((a, b));
        }
    }
    set
}

/// Samples the 120 distinct unordered index pairs of the Dimension test
/// suite without replacement.
pub fn generate_dimension_test_suite(
    n_genes: usize,
    rng: &mut impl Rng,
) -> Result<Vec<(usize, usize)>> {
    let mut all_pairs = Vec::new();
    for i in 0..n_genes {
        for j in i + 1..n_genes {
            all_pairs.push((i, j));
        }
    }
    if all_pairs.len() < DIMENSION_SUITE_LEN {
        return Err(Error::InvalidParameter(format!(
            "{n_genes} genes give only {} index pairs, need {DIMENSION_SUITE_LEN}",
            all_pairs.len()
        )));
    }
    let picked = rand::seq::index::sample(rng, all_pairs.len(), DIMENSION_SUITE_LEN);
    Ok(picked.iter().map(|k| all_pairs[k]).collect())
}

/// Enumerates the 120 `(a, b)` pairs of the Translation test suite: 12
/// slopes (base magnitudes {0.01, 0.25, 0.5}, with shrinkage keeping the
/// magnitude and no shrinkage expanding to its reciprocal, each with and
/// without reversal) crossed with the 10 intercepts +/-{0.01, 0.25, 0.50,
/// 0.75, 1.0}.
pub fn generate_translation_test_suite() -> Vec<(f64, f64)> {
    let base = [0.01, 0.25, 0.5];
    let mut slopes = Vec::with_capacity(12);
    for &a in &base {
        for shrink in [true, false] {
            let magnitude = if shrink { a } else { 1.0 / a };
            for reversed in [false, true] {
                slopes.push(if reversed { -magnitude } else { magnitude });
            }
        }
    }
    let intercepts = [0.01, 0.25, 0.50, 0.75, 1.0];
    let mut suite = Vec::with_capacity(120);
    for &a in &slopes {
        for &b_mag in &intercepts {
            suite.push((a, b_mag));
            suite.push((a, -b_mag));
        }
    }
    suite
}
