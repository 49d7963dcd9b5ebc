//! Small-sample summaries and the Kolmogorov-Smirnov goodness-of-fit test.

/// Mean, spread, and normal-approximation 95% interval of a sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleSummary {
    pub count: usize,
    pub mean: f64,
    pub std_dev: f64,
    pub ci_halfwidth: f64,
}

pub fn summarize(values: &[f64]) -> SampleSummary {
    let n = values.len();
    if n == 0 {
        return SampleSummary {
            count: 0,
            mean: f64::NAN,
            std_dev: f64::NAN,
            ci_halfwidth: f64::NAN,
        };
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    if n == 1 {
        return SampleSummary { count: 1, mean, std_dev: f64::NAN, ci_halfwidth: f64::NAN };
    }
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1) as f64;
    let std_dev = var.sqrt();
    SampleSummary { count: n, mean, std_dev, ci_halfwidth: 1.96 * std_dev / (n as f64).sqrt() }
}

/// Two-sided KS statistic of a sample against a continuous CDF.
pub fn ks_statistic(samples: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut sorted = samples.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite samples"));
    let n = sorted.len() as f64;
    let mut d = 0.0f64;
    for (i, x) in sorted.iter().enumerate() {
        let f = cdf(*x);
        d = d.max(((i + 1) as f64 / n - f).abs());
        d = d.max((f - i as f64 / n).abs());
    }
    d
}

/// Asymptotic KS rejection threshold at the given significance level:
/// √(-ln(α/2)/2) / √n.
pub fn ks_critical_value(n: usize, alpha: f64) -> f64 {
    (-(alpha / 2.0).ln() / 2.0).sqrt() / (n as f64).sqrt()
}
