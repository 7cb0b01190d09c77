//! Simultaneous root finding (Aberth–Ehrlich) with residual certification.

use num_complex::Complex64;

use super::{Backend, FieldContext, Scalar, ScalarError, UniPoly};

/// Roots of a polynomial together with the checks that certify them.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub roots: Vec<Scalar>,
    /// `|p(α)|` for each returned root.
    pub residuals: Vec<f64>,
    /// Residual bound every root satisfies.
    pub residual_bound: f64,
    /// Smallest pairwise distance between returned roots (`inf` for a single root).
    pub min_separation: f64,
    /// Whether all roots are pairwise separated by more than `separation_tol`.
    pub distinct: bool,
    pub separation_tol: f64,
    pub iterations: usize,
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All `deg p` roots of `p`, with multiplicity, on the approximate backend.
///
/// The residual bound is `eps · max(1, max |coeff|)`; roots count as distinct
/// when separated by more than `sqrt(eps)`.
pub fn poly_roots(p: &UniPoly, ctx: &FieldContext) -> Result<RootSet, ScalarError> {
    if ctx.backend == Backend::Exact {
        return Err(ScalarError::ExactBackendUnsupported);
    }
    let degree = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(ScalarError::DegreeTooSmall),
    };
    let coeffs: Vec<Complex64> = p.coeffs().iter().map(Scalar::to_complex).collect();
    let lead = coeffs[degree];
    if lead.norm() <= ctx.eps {
        return Err(ScalarError::DivisionByZero);
    }
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let scale = coeffs.iter().map(|c| c.norm()).fold(1.0, f64::max);
    let residual_bound = ctx.eps * scale;

    // Initial guesses on a circle of radius given by the Fujiwara-type bound,
    // rotated off the real axis so symmetric polynomials do not stall.
    let radius = (0..degree)
        .map(|k| monic[k].norm().powf(1.0 / (degree - k) as f64))
        .fold(0.0, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / degree as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let mut iterations = 0;
    let mut converged = false;
    while iterations < ctx.root_iteration_cap {
        iterations += 1;
        let mut max_step = 0.0f64;
        for k in 0..degree {
            let (pv, dpv) = horner(&monic, z[k]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dpv;
            let repulsion: Complex64 =
                (0..degree).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if max_step < 1e-15 {
            converged = true;
            break;
        }
    }

    // Newton polish against the original polynomial.
    for root in z.iter_mut() {
        for _ in 0..3 {
            let (pv, dpv) = horner(&coeffs, *root);
            if dpv.norm() == 0.0 {
                break;
            }
            let next = *root - pv / dpv;
            if horner(&coeffs, next).0.norm() < pv.norm() {
                *root = next;
            } else {
                break;
            }
        }
    }

    let residuals: Vec<f64> = z.iter().map(|r| horner(&coeffs, *r).0.norm()).collect();
    if residuals.iter().any(|r| !r.is_finite() || *r > residual_bound) {
        return Err(ScalarError::NonConvergence { iterations, converged });
    }
    let mut min_separation = f64::INFINITY;
    for a in 0..degree {
        for b in a + 1..degree {
            min_separation = min_separation.min((z[a] - z[b]).norm());
        }
    }
    let separation_tol = ctx.eps.sqrt();
    // Stable output order: by real part, then imaginary part.
    z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let residuals = z.iter().map(|r| horner(&coeffs, *r).0.norm()).collect();
    Ok(RootSet {
        roots: z.into_iter().map(Scalar::Approx).collect(),
        residuals,
        residual_bound,
        min_separation,
        distinct: min_separation > separation_tol,
        separation_tol,
        iterations,
    })
}
