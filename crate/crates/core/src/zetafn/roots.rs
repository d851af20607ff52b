//! Aberth-Ehrlich simultaneous root finding for squarefree polynomials.

use num_complex::Complex64;

use super::qpoly::{derivative_c, eval_c};

const MAX_ITER: usize = 200;
const TOL: f64 = 1e-10;

/// Roots of `a` (constant term first, degree >= 1), started on a ring of radius
/// `radius`.
pub(crate) fn aberth(a: &[Complex64], radius: f64) -> Vec<Complex64> {
    let n = a.len() - 1;
    let da = derivative_c(a);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * (k as f64 + 0.25) / n as f64 + 0.1;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    for _ in 0..MAX_ITER {
        let mut worst = 0.0f64;
        for k in 0..n {
            let p = eval_c(a, z[k]);
            let dp = eval_c(&da, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if w.is_finite() {
                z[k] -= w;
                worst = worst.max(w.norm() / z[k].norm().max(1e-300));
            }
        }
        if worst < TOL {
            break;
        }
    }
    for r in z.iter_mut() {
        for _ in 0..3 {
            let dp = eval_c(&da, *r);
            if dp.norm() == 0.0 {
                break;
            }
            let step = eval_c(a, *r) / dp;
            if !step.is_finite() {
                break;
            }
            *r -= step;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_roots() {
        // 5u^2 - 2u + 1: roots (1 +- 2i)/5
        let a = [1.0, -2.0, 5.0].map(|x| Complex64::new(x, 0.0));
        let mut r = aberth(&a, 5f64.powf(-0.5));
        r.sort_by(|x, y| x.im.partial_cmp(&y.im).unwrap());
        assert!((r[0] - Complex64::new(0.2, -0.4)).norm() < 1e-13);
        assert!((r[1] - Complex64::new(0.2, 0.4)).norm() < 1e-13);
    }
}
