//! Small statistics helpers: summary moments, a two-sample
//! Kolmogorov-Smirnov statistic, and an exact one-sided Mann-Whitney
//! rank test for the replicate-level comparisons.

/// Arithmetic mean; 0 for an empty slice.
pub fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample standard deviation (ddof = 1); 0 when fewer than two values.
pub fn std_dev(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let m = mean(xs);
    let ss: f64 = xs.iter().map(|x| (x - m) * (x - m)).sum();
    (ss / (xs.len() - 1) as f64).sqrt()
}

/// Population standard deviation (ddof = 0); 0 for an empty slice.
pub fn std_dev_population(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    let m = mean(xs);
    let ss: f64 = xs.iter().map(|x| (x - m) * (x - m)).sum();
    (ss / xs.len() as f64).sqrt()
}

/// Mean and standard error of the mean.
pub fn mean_se(xs: &[f64]) -> (f64, f64) {
    if xs.len() < 2 {
        return (mean(xs), 0.0);
    }
    (mean(xs), std_dev(xs) / (xs.len() as f64).sqrt())
}

/// Mean pairwise Euclidean distance over a set of vectors; 0 when fewer
/// than two vectors.
pub fn mean_pairwise_distance(vectors: &[Vec<f64>]) -> f64 {
    let n = vectors.len();
    if n < 2 {
        return 0.0;
    }
    let mut total = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let d: f64 = vectors[i]
                .iter()
                .zip(&vectors[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum();
            total += d.sqrt();
        }
    }
    total / (n * (n - 1) / 2) as f64
}

/// Two-sample Kolmogorov-Smirnov statistic `sup |F_a - F_b|`.
pub fn ks_statistic(a: &[f64], b: &[f64]) -> f64 {
    assert!(!a.is_empty() && !b.is_empty(), "KS needs non-empty samples");
    let mut a: Vec<f64> = a.to_vec();
    let mut b: Vec<f64> = b.to_vec();
    a.sort_by(|x, y| x.partial_cmp(y).expect("NaN in KS sample"));
    b.sort_by(|x, y| x.partial_cmp(y).expect("NaN in KS sample"));
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let mut i = 0;
    let mut j = 0;
    let mut d: f64 = 0.0;
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

/// Critical value of the two-sample KS statistic at significance 0.05
/// (asymptotic form, coefficient 1.358).
pub fn ks_critical_005(n: usize, m: usize) -> f64 {
    1.358 * (((n + m) as f64) / ((n * m) as f64)).sqrt()
}

/// One-sided Mann-Whitney rank test of H1: `xs` stochastically greater
/// than `ys`. Returns `(u_statistic, p_value)` where the U statistic is
/// computed for `xs` from midranks and the p-value is exact (enumeration
/// over all assignments) for small samples, with a normal approximation
/// beyond that.
pub fn mann_whitney_greater(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len();
    let m = ys.len();
    assert!(n > 0 && m > 0, "rank test needs non-empty samples");

    let mut combined: Vec<(f64, bool)> = xs
        .iter()
        .map(|&v| (v, true))
        .chain(ys.iter().map(|&v| (v, false)))
        .collect();
    combined.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("NaN in rank test"));

    // Midranks over the combined sample.
    let total = combined.len();
    let mut ranks = vec![0.0; total];
    let mut i = 0;
    while i < total {
        let mut j = i;
        while j + 1 < total && combined[j + 1].0 == combined[i].0 {
            j += 1;
        }
        let midrank = (i + j) as f64 / 2.0 + 1.0;
        for r in ranks.iter_mut().take(j + 1).skip(i) {
            *r = midrank;
        }
        i = j + 1;
    }

    let rank_sum_x: f64 = combined
        .iter()
        .zip(&ranks)
        .filter(|((_, is_x), _)| *is_x)
        .map(|(_, r)| r)
        .sum();
    let u_x = rank_sum_x - (n * (n + 1)) as f64 / 2.0;

    let n_choose = binomial(total, n);
    let p = if n_choose <= 500_000 {
        // Exact: enumerate every way of assigning n of the ranks to x.
        let mut at_least = 0u64;
        let mut count = 0u64;
        let mut idx: Vec<usize> = (0..n).collect();
        loop {
            let rs: f64 = idx.iter().map(|&k| ranks[k]).sum();
            let u = rs - (n * (n + 1)) as f64 / 2.0;
            if u >= u_x - 1e-9 {
                at_least += 1;
            }
            count += 1;
            if !next_combination(&mut idx, total) {
                break;
            }
        }
        at_least as f64 / count as f64
    } else {
        // Normal approximation with tie correction.
        let nf = n as f64;
        let mf = m as f64;
        let tie_term: f64 = {
            let mut t = 0.0;
            let mut i = 0;
            while i < total {
                let mut j = i;
                while j + 1 < total && combined[j + 1].0 == combined[i].0 {
                    j += 1;
                }
                let g = (j - i + 1) as f64;
                t += g * g * g - g;
                i = j + 1;
            }
            t
        };
        let tf = total as f64;
        let mu = nf * mf / 2.0;
        let var = nf * mf / 12.0 * (tf + 1.0 - tie_term / (tf * (tf - 1.0)));
        if var <= 0.0 {
            return (u_x, 1.0);
        }
        let z = (u_x - 0.5 - mu) / var.sqrt();
        0.5 * erfc_approx(z / std::f64::consts::SQRT_2)
    };
    (u_x, p)
}

fn binomial(n: usize, k: usize) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

fn next_combination(idx: &mut [usize], total: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < total - (k - i) {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

// Abramowitz-Stegun 7.1.26 rational approximation, |error| < 1.5e-7.
fn erfc_approx(x: f64) -> f64 {
    let sign_negative = x < 0.0;
    let x = x.abs();
    let t = 1.0 / (1.0 + 0.3275911 * x);
    let poly = t
        * (0.254829592
            + t * (-0.284496736 + t * (1.421413741 + t * (-1.453152027 + t * 1.061405429))));
    let erf = 1.0 - poly * (-x * x).exp();
    if sign_negative {
        1.0 + erf
    } else {
        1.0 - erf
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mean_and_se() {
        let (m, se) = mean_se(&[1.0, 3.0]);
        assert_eq!(m, 2.0);
        assert!((se - 1.0).abs() < 1e-12); // sd = sqrt(2), se = sqrt(2)/sqrt(2)
    }

    #[test]
    fn ks_identical_samples_is_zero() {
        let a = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(ks_statistic(&a, &a), 0.0);
    }

    #[test]
    fn ks_disjoint_samples_is_one() {
        let a = vec![0.0; 50];
        let b = vec![1.0; 50];
        assert_eq!(ks_statistic(&a, &b), 1.0);
        assert!((ks_critical_005(50, 50) - 0.2716).abs() < 1e-12);
    }

    #[test]
    fn mann_whitney_separated_samples() {
        // Complete separation with n = m = 5: exact one-sided p = 1/252.
        let hi = [10.0, 11.0, 12.0, 13.0, 14.0];
        let lo = [1.0, 2.0, 3.0, 4.0, 5.0];
        let (u, p) = mann_whitney_greater(&hi, &lo);
        assert_eq!(u, 25.0);
        assert!((p - 1.0 / 252.0).abs() < 1e-12);
        // And the reverse direction is near-certain.
        let (_, p_rev) = mann_whitney_greater(&lo, &hi);
        assert!(p_rev > 0.99);
    }

    #[test]
    fn mann_whitney_identical_samples() {
        let a = [1.0, 1.0, 1.0];
        let (_, p) = mann_whitney_greater(&a, &a);
        assert!(p > 0.45, "tied data should not be significant, p = {p}");
    }

    #[test]
    fn pairwise_distance_triangle() {
        let vs = vec![vec![0.0, 0.0], vec![3.0, 0.0], vec![0.0, 4.0]];
        let expected = (3.0 + 4.0 + 5.0) / 3.0;
        assert!((mean_pairwise_distance(&vs) - expected).abs() < 1e-12);
    }
}
