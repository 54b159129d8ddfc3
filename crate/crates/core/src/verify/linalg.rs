//! Small dense linear algebra on column-major sample matrices.

/// Singular values (descending) of the matrix whose columns are `cols`,
/// by one-sided Jacobi rotations.
pub fn singular_values(cols: &[Vec<f64>]) -> Vec<f64> {
    let mut a: Vec<Vec<f64>> = cols.to_vec();
    let n = a.len();
    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha: f64 = a[p].iter().map(|v| v * v).sum();
                let beta: f64 = a[q].iter().map(|v| v * v).sum();
                let gamma: f64 = a[p].iter().zip(&a[q]).map(|(u, v)| u * v).sum();
                if gamma == 0.0 || gamma.abs() <= 1e-15 * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (left, right) = a.split_at_mut(q);
                for (u, v) in left[p].iter_mut().zip(right[0].iter_mut()) {
                    let (x, y) = (*u, *v);
                    *u = c * x - s * y;
                    *v = s * x + c * y;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<f64> = a.iter().map(|c| c.iter().map(|v| v * v).sum::<f64>().sqrt()).collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    sv
}

/// Scale every column to unit Euclidean norm (zero columns stay zero).
pub fn normalize_columns(cols: &[Vec<f64>]) -> Vec<Vec<f64>> {
    cols.iter()
        .map(|c| {
            let norm = c.iter().map(|v| v * v).sum::<f64>().sqrt();
            if norm == 0.0 {
                c.clone()
            } else {
                c.iter().map(|v| v / norm).collect()
            }
        })
        .collect()
}

/// Relative residual ||y - Py|| / ||y|| of the least-squares fit of `y` on
/// the span of `basis`, by modified Gram-Schmidt.
pub fn fit_residual(basis: &[Vec<f64>], y: &[f64]) -> f64 {
    let mut q: Vec<Vec<f64>> = Vec::new();
    for b in basis {
        let mut v = b.clone();
        for _ in 0..2 {
            for e in &q {
                let d: f64 = e.iter().zip(&v).map(|(a, b)| a * b).sum();
                v.iter_mut().zip(e).for_each(|(vi, ei)| *vi -= d * ei);
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.0 {
            q.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
    let mut r = y.to_vec();
    for _ in 0..2 {
        for e in &q {
            let d: f64 = e.iter().zip(&r).map(|(a, b)| a * b).sum();
            r.iter_mut().zip(e).for_each(|(ri, ei)| *ri -= d * ei);
        }
    }
    let ny = y.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nr = r.iter().map(|x| x * x).sum::<f64>().sqrt();
    if ny == 0.0 {
        0.0
    } else {
        nr / ny
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_and_rank_deficient() {
        let sv = singular_values(&[vec![3.0, 0.0, 0.0], vec![0.0, 4.0, 0.0]]);
        assert!((sv[0] - 4.0).abs() < 1e-15 && (sv[1] - 3.0).abs() < 1e-15);
        let sv = singular_values(&[vec![1.0, 2.0, 3.0], vec![2.0, 4.0, 6.0]]);
        assert!(sv[1] < 1e-14);
    }

    #[test]
    fn known_two_by_two() {
        // [[2, 0], [1, 1]] (columns (2,1), (0,1)): σ² = 3 ± √5
        let sv = singular_values(&[vec![2.0, 1.0], vec![0.0, 1.0]]);
        assert!((sv[0] * sv[0] - (3.0 + 5f64.sqrt())).abs() < 1e-13);
        assert!((sv[1] * sv[1] - (3.0 - 5f64.sqrt())).abs() < 1e-13);
    }

    #[test]
    fn fit_in_and_out_of_span() {
        let b = vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]];
        assert!(fit_residual(&b, &[2.0, -1.0, 0.0]) < 1e-15);
        assert!((fit_residual(&b, &[0.0, 0.0, 5.0]) - 1.0).abs() < 1e-15);
    }
}
