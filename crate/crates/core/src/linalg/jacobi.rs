//! Cyclic Jacobi eigensolver for dense complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a[p][q]`, then applies
//! the classical real Jacobi rotation to the resulting real symmetric 2x2 block.
//! The combined unitary is `J = U R U*` with `U = diag(1, e^{-i phi})`, which keeps
//! `J` real on its diagonal.

use num_complex::Complex64;

use super::{Matrix, JACOBI_TOL};

const MAX_SWEEPS: usize = 100;

/// Returns unsorted eigenvalues and, if requested, the unitary whose columns
/// are the eigenvectors.
pub(super) fn jacobi_eigen(input: &Matrix, want_vectors: bool) -> (Vec<f64>, Option<Matrix>) {
    let n = input.dim();
    let mut a = input.data.clone();
    let mut v = want_vectors.then(|| Matrix::identity(n));

    let fro2: f64 = a.iter().map(|z| z.norm_sqr()).sum();
    if fro2 == 0.0 {
        return (vec![0.0; n], v);
    }
    let threshold2 = JACOBI_TOL * JACOBI_TOL * fro2;
    // Pivots this small cannot keep the off-diagonal mass above the threshold.
    let skip2 = threshold2 / (n * n) as f64;

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_mass(&a, n) <= threshold2 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p * n + q].norm_sqr() > skip2 {
                    rotate(&mut a, v.as_mut().map(|m| m.data.as_mut_slice()), n, p, q);
                }
            }
        }
    }

    let values = (0..n).map(|i| a[i * n + i].re).collect();
    (values, v)
}

fn off_diagonal_mass(a: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s
}

fn rotate(a: &mut [Complex64], v: Option<&mut [Complex64]>, n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let r = apq.norm();
    if r < f64::MIN_POSITIVE {
        return;
    }
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let phase = apq / r;

    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let j_pq = phase * s;
    let j_qp = -phase.conj() * s;

    // A <- J* A J. Outside the pivot block only columns p, q change; rows p, q
    // follow by Hermiticity.
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_p = akp * c + akq * j_qp;
        let new_q = akp * j_pq + akq * c;
        a[k * n + p] = new_p;
        a[k * n + q] = new_q;
        a[p * n + k] = new_p.conj();
        a[q * n + k] = new_q.conj();
    }
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
    a[p * n + p] = Complex64::new(app - t * r, 0.0);
    a[q * n + q] = Complex64::new(aqq + t * r, 0.0);

    // V <- V J
    let Some(v) = v else { return };
    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = vkp * c + vkq * j_qp;
        v[k * n + q] = vkp * j_pq + vkq * c;
    }
}
