//! Exact eigenvalue-threshold decisions for adjacency matrices.
//!
//! The decision path is fully exact: the characteristic polynomial
//! `det(xI - A)` is computed division-free over the integers (Berkowitz's
//! algorithm), shifted by the integer threshold, and the number of
//! eigenvalues above the threshold is read off as the Descartes
//! sign-change count — exact with multiplicity because adjacency matrices
//! are real symmetric, so every root is real. A cyclic Jacobi iteration
//! provides floating-point estimates for diagnostics and cross-checks;
//! it never participates in a decision.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::Graph;
use crate::poly::IntPoly;

/// Errors from spectral queries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectralError {
    /// λ2 is undefined for graphs on fewer than two vertices.
    UndefinedLambda2 { order: usize },
    /// The Jacobi iteration failed to reach its off-diagonal threshold.
    JacobiNonConvergence,
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SpectralError::UndefinedLambda2 { order } => {
                write!(f, "second largest eigenvalue undefined for order {order}")
            }
            SpectralError::JacobiNonConvergence => {
                write!(f, "Jacobi iteration did not converge")
            }
        }
    }
}

impl core::error::Error for SpectralError {}

/// Exact characteristic polynomial `det(xI - A(G))`, monic of degree `n`.
///
/// Berkowitz's algorithm: iterating over trailing principal submatrices,
/// each step multiplies the current coefficient vector by a lower
/// triangular Toeplitz matrix built from the entries `R M^j C`. Division
/// free, so everything stays in `BigInt`.
pub fn char_poly(g: &Graph) -> IntPoly {
    let n = g.vertex_count();
    let a = |i: usize, j: usize| -> BigInt { BigInt::from(u8::from(g.has_edge(i, j))) };
    // Descending coefficients; starts as char poly of the empty matrix.
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for m in (0..n).rev() {
        let size = n - m; // order of the submatrix handled this step
        // q = [1, -A[m][m], -R C, -R M C, …], length size + 1, where
        // R = A[m][m+1..], C = A[m+1..][m], M = A[m+1..][m+1..].
        let mut q: Vec<BigInt> = Vec::with_capacity(size + 1);
        q.push(BigInt::one());
        q.push(-a(m, m));
        let mut v: Vec<BigInt> = (m + 1..n).map(|i| a(i, m)).collect();
        for step in 0..size.saturating_sub(1) {
            let mut s = BigInt::zero();
            for (idx, i) in (m + 1..n).enumerate() {
                if g.has_edge(m, i) {
                    s += &v[idx];
                }
            }
            q.push(-s);
            if step + 2 < size + 1 {
                // v = M v
                let mut next = vec![BigInt::zero(); v.len()];
                for (ri, i) in (m + 1..n).enumerate() {
                    for (ci, j) in (m + 1..n).enumerate() {
                        if g.has_edge(i, j) {
                            let t = &next[ri] + &v[ci];
                            next[ri] = t;
                        }
                    }
                }
                v = next;
            }
        }
        // c_new[i] = Σ_k q[i-k] c[k], i = 0..=size (truncated convolution).
        let mut c_new = vec![BigInt::zero(); size + 1];
        for (k, ck) in c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            for (d, qd) in q.iter().enumerate() {
                let i = k + d;
                if i <= size {
                    c_new[i] += qd * ck;
                }
            }
        }
        c = c_new;
    }
    c.reverse();
    IntPoly::from_coeffs(c)
}

/// Number of eigenvalues of `A(G)` strictly greater than `k`,
/// with multiplicity. Exact.
pub fn count_eigenvalues_greater_than(g: &Graph, k: i64) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    char_poly(g)
        .taylor_shift(k)
        .positive_roots_real_rooted()
        .expect("characteristic polynomial is nonzero")
}

/// Number of eigenvalues of `A(G)` strictly less than `k`. Exact.
pub fn count_eigenvalues_less_than(g: &Graph, k: i64) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    char_poly(g)
        .taylor_shift(k)
        .reflected()
        .positive_roots_real_rooted()
        .expect("characteristic polynomial is nonzero")
}

/// Multiplicity of the integer `k` as an eigenvalue of `A(G)`. Exact.
pub fn multiplicity_of_integer_eigenvalue(g: &Graph, k: i64) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    char_poly(g).taylor_shift(k).root_multiplicity_at_zero()
}

/// True iff λ2(G) ≤ 1, decided exactly.
///
/// Graphs on at most one vertex have no second eigenvalue; they count as
/// satisfying the bound (the classes studied here are closed under taking
/// induced subgraphs, so K1 and K0 must be members).
pub fn lambda2_at_most_one(g: &Graph) -> bool {
    if g.vertex_count() <= 1 {
        return true;
    }
    count_eigenvalues_greater_than(g, 1) <= 1
}

/// True iff λ2(G) = 1 exactly; errors for graphs on fewer than 2 vertices.
pub fn lambda2_equals_one(g: &Graph) -> Result<bool, SpectralError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(SpectralError::UndefinedLambda2 { order: n });
    }
    let above = count_eigenvalues_greater_than(g, 1);
    let at = multiplicity_of_integer_eigenvalue(g, 1);
    Ok(above <= 1 && above + at >= 2)
}

/// Exact counts plus a floating diagnostic for one graph.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralSummary {
    /// Eigenvalues strictly above 1, with multiplicity.
    pub count_above_one: usize,
    /// Multiplicity of the eigenvalue exactly 1.
    pub mult_of_one: usize,
    /// λ2 ≤ 1 (true by convention for orders 0 and 1).
    pub lambda2_le_one: bool,
    /// λ2 = 1 exactly; `None` for orders 0 and 1 where λ2 is undefined.
    pub lambda2_eq_one: Option<bool>,
    /// Floating estimate of λ2 (diagnostic only; `None` for orders < 2
    /// or if the iteration failed).
    pub approx_lambda2: Option<f64>,
}

/// Computes the full summary for a graph.
pub fn spectral_summary(g: &Graph) -> SpectralSummary {
    let n = g.vertex_count();
    let count_above_one = count_eigenvalues_greater_than(g, 1);
    let mult_of_one = multiplicity_of_integer_eigenvalue(g, 1);
    let lambda2_eq_one = if n >= 2 {
        Some(count_above_one <= 1 && count_above_one + mult_of_one >= 2)
    } else {
        None
    };
    let approx_lambda2 = approx_spectrum(g)
        .ok()
        .and_then(|ev| ev.get(1).copied());
    SpectralSummary {
        count_above_one,
        mult_of_one,
        lambda2_le_one: lambda2_at_most_one(g),
        lambda2_eq_one,
        approx_lambda2,
    }
}

/// Off-diagonal Frobenius norm threshold for Jacobi convergence.
pub const JACOBI_OFF_THRESHOLD: f64 = 1e-9;

const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalue estimates in descending order via cyclic Jacobi sweeps.
///
/// Each estimate is within [`JACOBI_OFF_THRESHOLD`] of a true eigenvalue
/// once the off-diagonal norm falls below the threshold; non-convergence
/// within the sweep cap is reported as an error instead of returning bad
/// values.
pub fn approx_spectrum(g: &Graph) -> Result<Vec<f64>, SpectralError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a = vec![0.0f64; n * n];
    for u in 0..n {
        for v in g.neighbors(u).iter() {
            a[u * n + v] = 1.0;
        }
    }
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    s += a[p * n + q] * a[p * n + q];
                }
            }
        }
        libm::sqrt(s)
    };
    let mut converged = off_norm(&a) < JACOBI_OFF_THRESHOLD;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + libm::sqrt(1.0 + tau * tau))
                } else {
                    -1.0 / (-tau + libm::sqrt(1.0 + tau * tau))
                };
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
        converged = off_norm(&a) < JACOBI_OFF_THRESHOLD;
    }
    if !converged {
        return Err(SpectralError::JacobiNonConvergence);
    }
    let mut evals: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    evals.sort_unstable_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
    Ok(evals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;

    fn path(n: usize) -> Graph {
        Graph::new(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn char_poly_of_c4_and_k1() {
        let c4 = cycle(4);
        // Spectrum of C4 is {2, 0, 0, -2}: x^4 - 4x^2.
        assert_eq!(char_poly(&c4), IntPoly::from_i64_coeffs(&[0, 0, -4, 0, 1]));
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(char_poly(&k1), IntPoly::x());
        let k0 = Graph::empty(0).unwrap();
        assert_eq!(char_poly(&k0), IntPoly::one());
    }

    #[test]
    fn char_poly_is_monic_with_trace_and_edge_coefficients() {
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]).unwrap();
        let p = char_poly(&g);
        assert!(p.is_monic());
        assert_eq!(p.degree(), Some(5));
        assert!(p.coeff(4).is_zero());
        assert_eq!(p.coeff(3), BigInt::from(-(g.edge_count() as i64)));
    }

    #[test]
    fn eigenvalue_counts_for_known_spectra() {
        // K_{1,4} has spectrum {2, 0, 0, 0, -2}.
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(count_eigenvalues_greater_than(&star, 1), 1);
        assert_eq!(multiplicity_of_integer_eigenvalue(&star, 0), 3);
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(count_eigenvalues_greater_than(&k1, 1), 0);
        // C4: {2, 0, 0, -2}.
        let c4 = cycle(4);
        assert_eq!(multiplicity_of_integer_eigenvalue(&c4, 0), 2);
        assert_eq!(count_eigenvalues_less_than(&c4, 0), 1);
        // P4: all eigenvalues below 3.
        assert_eq!(multiplicity_of_integer_eigenvalue(&path(4), 3), 0);
    }

    #[test]
    fn lambda2_decisions_on_paths_and_cycles() {
        assert!(lambda2_at_most_one(&path(5)));
        assert_eq!(lambda2_equals_one(&path(5)), Ok(true));
        assert!(!lambda2_at_most_one(&path(6)));
        assert!(lambda2_at_most_one(&cycle(6)));
        assert_eq!(lambda2_equals_one(&cycle(6)), Ok(true));
        let k1 = Graph::new(1, &[]).unwrap();
        assert!(lambda2_at_most_one(&k1));
        assert_eq!(
            lambda2_equals_one(&k1),
            Err(SpectralError::UndefinedLambda2 { order: 1 })
        );
        assert!(lambda2_at_most_one(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn multiplicity_conservation() {
        for g in [path(6), cycle(5), Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap()] {
            for k in -2..=2 {
                let above = count_eigenvalues_greater_than(&g, k);
                let at = multiplicity_of_integer_eigenvalue(&g, k);
                let below = count_eigenvalues_less_than(&g, k);
                assert_eq!(above + at + below, g.vertex_count());
            }
        }
    }

    #[test]
    fn jacobi_matches_known_spectra() {
        let c4 = cycle(4);
        let ev = approx_spectrum(&c4).unwrap();
        let expect = [2.0, 0.0, 0.0, -2.0];
        for (a, b) in ev.iter().zip(expect.iter()) {
            assert!((a - b).abs() < 1e-8, "{ev:?}");
        }
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(approx_spectrum(&k1).unwrap(), vec![0.0]);
        assert!(approx_spectrum(&Graph::empty(0).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn summary_invariants() {
        for g in [path(4), path(6), cycle(6), cycle(4)] {
            let s = spectral_summary(&g);
            assert_eq!(s.lambda2_le_one, s.count_above_one <= 1);
            assert_eq!(
                s.lambda2_eq_one,
                Some(s.count_above_one <= 1 && s.count_above_one + s.mult_of_one >= 2)
            );
        }
    }
}
