use crate::error::{BenchError, Result};

/// Least-squares slope of `ln(count)` against `ln(n)`.
pub fn fit_scaling_exponent(points: &[(f64, f64)]) -> Result<f64> {
    if points.len() < 3 {
        return Err(BenchError::Usage(format!(
            "exponent fit needs at least 3 points, got {}",
            points.len()
        )));
    }
    if let Some(&(n, c)) = points.iter().find(|&&(n, c)| !(n > 0.0 && c > 0.0)) {
        return Err(BenchError::Usage(format!(
            "exponent fit needs positive values, got ({n}, {c})"
        )));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(n, c)| (n.ln(), c.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(BenchError::Usage(
            "exponent fit needs two distinct n".into(),
        ));
    }
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Ok(sxy / sxx)
}
