//! Cyclic Jacobi for complex Hermitian matrices.
//!
//! Each rotation first removes the phase of `a_pq` with a diagonal unitary,
//! then applies the classical real Jacobi rotation to the resulting real
//! symmetric 2x2 block. Sweeps run in row order until the off-diagonal mass
//! is at rounding level.

use num_complex::Complex64;

use super::HermitianMatrix;

const MAX_SWEEPS: usize = 100;

pub(crate) struct Eigen {
    pub values: Vec<f64>,
    /// Column-major: vector `k` is `vectors[k * n..(k + 1) * n]`.
    pub vectors: Vec<Complex64>,
}

pub(crate) fn eigh(a: &HermitianMatrix) -> Option<Eigen> {
    let n = a.n();
    let mut m: Vec<Complex64> = a.entries().to_vec();
    for i in 0..n {
        m[i * n + i] = Complex64::new(m[i * n + i].re, 0.0);
    }
    // row-major V, columns are eigenvectors
    let mut v = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        v[i * n + i] = Complex64::new(1.0, 0.0);
    }
    let scale = a.frobenius_sq().sqrt();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| m[p * n + q].norm_sqr())
            .sum();
        if off.sqrt() <= f64::EPSILON * scale * 1e-2 || off == 0.0 {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, &mut v, n, p, q);
            }
        }
    }
    if !converged {
        return None;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[j * n + j].re.total_cmp(&m[i * n + i].re));
    let values = order.iter().map(|&i| m[i * n + i].re).collect();
    let mut vectors = Vec::with_capacity(n * n);
    for &k in &order {
        vectors.extend((0..n).map(|i| v[i * n + k]));
    }
    Some(Eigen { values, vectors })
}

fn rotate(m: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = m[p * n + q];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let w = apq / g;
    let (app, aqq) = (m[p * n + p].re, m[q * n + q].re);
    let theta = (aqq - app) / (2.0 * g);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // U = diag(1, conj(w)) * [[c, s], [-s, c]] on the (p, q) block
    let u_pp = Complex64::new(c, 0.0);
    let u_pq = Complex64::new(s, 0.0);
    let u_qp = -w.conj() * s;
    let u_qq = w.conj() * c;

    for k in 0..n {
        let (akp, akq) = (m[k * n + p], m[k * n + q]);
        m[k * n + p] = akp * u_pp + akq * u_qp;
        m[k * n + q] = akp * u_pq + akq * u_qq;
    }
    for k in 0..n {
        let (apk, aqk) = (m[p * n + k], m[q * n + k]);
        m[p * n + k] = u_pp.conj() * apk + u_qp.conj() * aqk;
        m[q * n + k] = u_pq.conj() * apk + u_qq.conj() * aqk;
    }
    m[p * n + q] = Complex64::new(0.0, 0.0);
    m[q * n + p] = Complex64::new(0.0, 0.0);
    m[p * n + p] = Complex64::new(app - t * g, 0.0);
    m[q * n + q] = Complex64::new(aqq + t * g, 0.0);

    for k in 0..n {
        let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
        v[k * n + p] = vkp * u_pp + vkq * u_qp;
        v[k * n + q] = vkp * u_pq + vkq * u_qq;
    }
}
