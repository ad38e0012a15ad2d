//! Error norms and convergence-order extraction.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ErrorMetricError {
    #[error("reference field is identically zero")]
    ZeroReference,
    #[error("field sample counts differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("need errors from three grids, got {0}")]
    NotATriple(usize),
}

/// max |numeric - reference| / max |reference| over all samples.
///
/// Both slices interleave any number of components; they only need to
/// correspond point-for-point.
pub fn relative_max_error(numeric: &[f64], reference: &[f64]) -> Result<f64, ErrorMetricError> {
    if numeric.len() != reference.len() {
        return Err(ErrorMetricError::LengthMismatch(
            numeric.len(),
            reference.len(),
        ));
    }
    let mut num = 0.0_f64;
    let mut den = 0.0_f64;
    for (a, b) in numeric.iter().zip(reference) {
        num = num.max((a - b).abs());
        den = den.max(b.abs());
    }
    if den == 0.0 {
        return Err(ErrorMetricError::ZeroReference);
    }
    Ok(num / den)
}

/// Observed orders log2(e0/e1), log2(e1/e2) from errors on grids with
/// spacing h, h/2, h/4. Non-monotone error sequences yield negative or
/// meaningless orders; they are returned as-is, not masked.
pub fn convergence_order(errors: &[f64]) -> Result<(f64, f64), ErrorMetricError> {
    if errors.len() != 3 {
        return Err(ErrorMetricError::NotATriple(errors.len()));
    }
    Ok((
        (errors[0] / errors[1]).log2(),
        (errors[1] / errors[2]).log2(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn identical_fields_zero_error() {
        let f = vec![1.0, -2.0, 3.0];
        assert_eq!(relative_max_error(&f, &f).unwrap(), 0.0);
    }

    #[test]
    fn uniform_scaling() {
        let r = vec![1.0, -2.0, 0.5];
        let n: Vec<f64> = r.iter().map(|v| 1.01 * v).collect();
        assert_relative_eq!(
            relative_max_error(&n, &r).unwrap(),
            0.01,
            max_relative = 1e-12
        );
    }

    #[test]
    fn scale_invariance_in_reference() {
        let r = vec![0.3, -1.7, 0.9, 0.02];
        let n = vec![0.35, -1.65, 0.95, 0.0];
        let e1 = relative_max_error(&n, &r).unwrap();
        let s = 7.3;
        let rs: Vec<f64> = r.iter().map(|v| s * v).collect();
        let ns: Vec<f64> = n.iter().map(|v| s * v).collect();
        let e2 = relative_max_error(&ns, &rs).unwrap();
        assert_relative_eq!(e1, e2, max_relative = 1e-12);
    }

    #[test]
    fn zero_reference_rejected() {
        assert!(relative_max_error(&[1.0], &[0.0]).is_err());
    }

    #[test]
    fn order_examples() {
        let (a, b) = convergence_order(&[16.0, 4.0, 1.0]).unwrap();
        assert_relative_eq!(a, 2.0);
        assert_relative_eq!(b, 2.0);
        let (a, b) = convergence_order(&[32.0, 1.0, 1.0 / 32.0]).unwrap();
        assert_relative_eq!(a, 5.0);
        assert_relative_eq!(b, 5.0);
    }

    #[test]
    fn non_monotone_not_masked() {
        let (a, _) = convergence_order(&[1.0, 2.0, 1.0]).unwrap();
        assert!(a < 0.0);
    }
}
