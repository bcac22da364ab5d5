//! Small dense linear algebra: symmetric eigenproblems by cyclic Jacobi,
//! Sturm bisection for symmetric tridiagonal matrices, LU solves, and
//! fixed-size complex matrices for the two-level blocks and the 8x8 state.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{as_f64, lit, Scalar};

/// Dense real symmetric matrix, row-major full storage.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMat<T> {
    pub n: usize,
    pub a: Vec<T>,
}

impl<T: Scalar> SymMat<T> {
    pub fn zeros(n: usize) -> Self {
        SymMat { n, a: vec![T::zero(); n * n] }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.a[i * self.n + j]
    }

    /// Sets both (i, j) and (j, i).
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.a[i * self.n + j] = v;
        self.a[j * self.n + i] = v;
    }

    pub fn max_asymmetry(&self) -> T {
        let mut m = T::zero();
        for i in 0..self.n {
            for j in 0..i {
                m = m.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        m
    }

    /// Eigendecomposition by cyclic Jacobi rotations.
    ///
    /// Returns eigenvalues ascending and the matching orthonormal
    /// eigenvectors as columns of a row-major matrix.
    pub fn eigh(&self) -> (Vec<T>, Vec<T>) {
        let n = self.n;
        let mut a = self.a.clone();
        let mut v = vec![T::zero(); n * n];
        for i in 0..n {
            v[i * n + i] = T::one();
        }
        let eps = T::epsilon();
        for _sweep in 0..100 {
            let mut off = T::zero();
            let mut norm = T::zero();
            for i in 0..n {
                for j in 0..n {
                    let x = a[i * n + j];
                    norm = norm + x * x;
                    if i != j {
                        off = off + x * x;
                    }
                }
            }
            if off <= eps * eps * norm {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a[p * n + q];
                    if apq == T::zero() {
                        continue;
                    }
                    let app = a[p * n + p];
                    let aqq = a[q * n + q];
                    let tau = (aqq - app) / (lit::<T>(2.0) * apq);
                    // stable tangent of the rotation angle
                    let t = if tau >= T::zero() {
                        T::one() / (tau + (T::one() + tau * tau).sqrt())
                    } else {
                        -T::one() / (-tau + (T::one() + tau * tau).sqrt())
                    };
                    let c = T::one() / (T::one() + t * t).sqrt();
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
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&i, &j| {
            a[i * n + i].partial_cmp(&a[j * n + j]).expect("NaN eigenvalue")
        });
        let vals: Vec<T> = idx.iter().map(|&i| a[i * n + i]).collect();
        let mut vecs = vec![T::zero(); n * n];
        for (new, &old) in idx.iter().enumerate() {
            for k in 0..n {
                vecs[k * n + new] = v[k * n + old];
            }
        }
        (vals, vecs)
    }
}

/// Symmetric tridiagonal matrix: `diag` (n) and `off` (n-1).
#[derive(Debug, Clone)]
pub struct Tridiag<T> {
    pub diag: Vec<T>,
    pub off: Vec<T>,
}

impl<T: Scalar> Tridiag<T> {
    fn gershgorin(&self) -> (T, T) {
        let n = self.diag.len();
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for i in 0..n {
            let mut r = T::zero();
            if i > 0 {
                r = r + self.off[i - 1].abs();
            }
            if i + 1 < n {
                r = r + self.off[i].abs();
            }
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below `x` (Sturm count via LDL^T).
    fn count_below(&self, x: T) -> usize {
        let n = self.diag.len();
        let tiny = T::min_positive_value();
        let mut count = 0usize;
        let mut d = self.diag[0] - x;
        if d < T::zero() {
            count += 1;
        }
        for i in 1..n {
            let mut denom = d;
            if denom.abs() < tiny {
                denom = if denom >= T::zero() { tiny } else { -tiny };
            }
            d = self.diag[i] - x - self.off[i - 1] * self.off[i - 1] / denom;
            if d < T::zero() {
                count += 1;
            }
        }
        count
    }

    /// k-th eigenvalue (0-based, ascending) by bisection to machine-relative width.
    pub fn eigenvalue(&self, k: usize) -> T {
        let (mut lo, mut hi) = self.gershgorin();
        let span = hi - lo;
        let eps = T::epsilon() * lit::<T>(4.0);
        let floor = span * T::epsilon();
        for _ in 0..40 + 8 * std::mem::size_of::<T>() * 8 {
            let mid = (lo + hi) * lit::<T>(0.5);
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
            let width = hi - lo;
            if width <= eps * lo.abs().max(hi.abs()) || width <= floor {
                break;
            }
        }
        (lo + hi) * lit::<T>(0.5)
    }

    /// Eigenvector for an eigenvalue `lambda` by two rounds of inverse iteration
    /// with a partially pivoted tridiagonal solve. Normalized, sign-fixed so the
    /// largest-magnitude component is positive.
    pub fn eigenvector(&self, lambda: T) -> Vec<T> {
        let n = self.diag.len();
        let mut v = vec![T::one() / lit::<T>(n as f64).sqrt(); n];
        for _ in 0..3 {
            v = self.solve_shifted(lambda, &v);
            let norm = v.iter().map(|&x| x * x).sum::<T>().sqrt();
            for x in v.iter_mut() {
                *x = *x / norm;
            }
        }
        let mut imax = 0;
        for i in 0..n {
            if v[i].abs() > v[imax].abs() {
                imax = i;
            }
        }
        if v[imax] < T::zero() {
            for x in v.iter_mut() {
                *x = -*x;
            }
        }
        v
    }

    /// Solves (A - lambda I) x = b with partial pivoting on the tridiagonal band.
    fn solve_shifted(&self, lambda: T, b: &[T]) -> Vec<T> {
        let n = self.diag.len();
        // band storage: rows of [sub, diag, super, super2]
        let mut d: Vec<T> = (0..n).map(|i| self.diag[i] - lambda).collect();
        let mut e: Vec<T> = self.off.clone(); // superdiag
        let mut f = vec![T::zero(); n]; // second superdiag from row swaps
        let mut x: Vec<T> = b.to_vec();
        let tiny = T::epsilon() * lit::<T>(1e-30).max(T::min_positive_value());
        let mut sub: Vec<T> = self.off.clone(); // subdiag entries a[i+1][i]
        for i in 0..n - 1 {
            if sub[i].abs() > d[i].abs() {
                // swap row i and i+1
                let (di, ei, fi, xi) = (d[i], e[i], f[i], x[i]);
                d[i] = sub[i];
                e[i] = d[i + 1];
                f[i] = if i + 1 < n - 1 { e.get(i + 1).copied().unwrap_or(T::zero()) } else { T::zero() };
                x[i] = x[i + 1];
                d[i + 1] = ei;
                if i + 1 < n - 1 {
                    e[i + 1] = fi;
                }
                x[i + 1] = xi;
                sub[i] = di;
            }
            let mut piv = d[i];
            if piv.abs() < tiny {
                piv = if piv >= T::zero() { tiny } else { -tiny };
                d[i] = piv;
            }
            let m = sub[i] / piv;
            d[i + 1] = d[i + 1] - m * e[i];
            if i + 1 < n - 1 {
                e[i + 1] = e[i + 1] - m * f[i];
            }
            x[i + 1] = x[i + 1] - m * x[i];
        }
        if d[n - 1].abs() < tiny {
            d[n - 1] = if d[n - 1] >= T::zero() { tiny } else { -tiny };
        }
        // back substitution
        let mut out = vec![T::zero(); n];
        out[n - 1] = x[n - 1] / d[n - 1];
        if n >= 2 {
            out[n - 2] = (x[n - 2] - e[n - 2] * out[n - 1]) / d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            out[i] = (x[i] - e[i] * out[i + 1] - f[i] * out[i + 2]) / d[i];
        }
        out
    }
}

/// Solves A x = b for small dense systems via LU with partial pivoting.
/// Returns an error when the matrix is singular to working precision or the
/// condition estimate exceeds `cond_limit`.
pub fn lu_solve<T: Scalar>(a: &[T], n: usize, b: &[T], cond_limit: T) -> Result<Vec<T>> {
    let mut m = a.to_vec();
    let mut x = b.to_vec();
    let mut max_piv = T::zero();
    let mut min_piv = T::infinity();
    for col in 0..n {
        let mut p = col;
        for r in (col + 1)..n {
            if m[r * n + col].abs() > m[p * n + col].abs() {
                p = r;
            }
        }
        if p != col {
            for k in 0..n {
                m.swap(col * n + k, p * n + k);
            }
            x.swap(col, p);
        }
        let piv = m[col * n + col];
        if piv.abs() <= T::epsilon() * lit::<T>(n as f64) {
            return Err(Error::Network("singular matrix in LU solve".into()));
        }
        max_piv = max_piv.max(piv.abs());
        min_piv = min_piv.min(piv.abs());
        for r in (col + 1)..n {
            let f = m[r * n + col] / piv;
            if f == T::zero() {
                continue;
            }
            for k in col..n {
                m[r * n + k] = m[r * n + k] - f * m[col * n + k];
            }
            x[r] = x[r] - f * x[col];
        }
    }
    if max_piv / min_piv > cond_limit {
        return Err(Error::Network(format!(
            "condition estimate {:.3e} above limit",
            as_f64(max_piv / min_piv)
        )));
    }
    let mut out = vec![T::zero(); n];
    for i in (0..n).rev() {
        let mut s = x[i];
        for k in (i + 1)..n {
            s = s - m[i * n + k] * out[k];
        }
        out[i] = s / m[i * n + i];
    }
    Ok(out)
}

/// Inverse of a small dense matrix (column-by-column LU solves).
pub fn lu_inverse<T: Scalar>(a: &[T], n: usize, cond_limit: T) -> Result<Vec<T>> {
    let mut inv = vec![T::zero(); n * n];
    for j in 0..n {
        let mut e = vec![T::zero(); n];
        e[j] = T::one();
        let col = lu_solve(a, n, &e, cond_limit)?;
        for i in 0..n {
            inv[i * n + j] = col[i];
        }
    }
    Ok(inv)
}

pub type C<T> = Complex<T>;

/// Complex 2x2 matrix for the per-block coupler dynamics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2<T>(pub [[C<T>; 2]; 2]);

impl<T: Scalar> Mat2<T> {
    pub fn zero() -> Self {
        Mat2([[C::new(T::zero(), T::zero()); 2]; 2])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        m.0[0][0] = C::new(T::one(), T::zero());
        m.0[1][1] = C::new(T::one(), T::zero());
        m
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                r.0[i][j] = self.0[i][0] * o.0[0][j] + self.0[i][1] * o.0[1][j];
            }
        }
        r
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.0[i][j] = r.0[i][j] + o.0[i][j];
            }
        }
        r
    }

    pub fn scale(&self, s: C<T>) -> Self {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.0[i][j] = r.0[i][j] * s;
            }
        }
        r
    }

    pub fn dagger(&self) -> Self {
        let mut r = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                r.0[i][j] = self.0[j][i].conj();
            }
        }
        r
    }

    /// Operator-norm distance from unitarity, ||U^+ U - I||_F.
    pub fn unitarity_defect(&self) -> T {
        let p = self.dagger().mul(self);
        let mut s = T::zero();
        for i in 0..2 {
            for j in 0..2 {
                let d = p.0[i][j] - if i == j { C::new(T::one(), T::zero()) } else { C::new(T::zero(), T::zero()) };
                s = s + d.norm_sqr();
            }
        }
        s.sqrt()
    }

    pub fn frobenius_distance(&self, o: &Self) -> T {
        let mut s = T::zero();
        for i in 0..2 {
            for j in 0..2 {
                s = s + (self.0[i][j] - o.0[i][j]).norm_sqr();
            }
        }
        s.sqrt()
    }
}

/// Complex 8x8 matrix: density matrices and block-diagonal operators on
/// qubitA (x) qubitB (x) coupler with basis order |00g>, |00e>, |01g>, ...
#[derive(Debug, Clone, PartialEq)]
pub struct Mat8<T>(pub Box<[[C<T>; 8]; 8]>);

impl<T: Scalar> Mat8<T> {
    pub fn zero() -> Self {
        Mat8(Box::new([[C::new(T::zero(), T::zero()); 8]; 8]))
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..8 {
            m.0[i][i] = C::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_blocks(blocks: &[Mat2<T>; 4]) -> Self {
        let mut m = Self::zero();
        for (b, blk) in blocks.iter().enumerate() {
            for i in 0..2 {
                for j in 0..2 {
                    m.0[2 * b + i][2 * b + j] = blk.0[i][j];
                }
            }
        }
        m
    }

    pub fn outer(v: &[C<T>; 8]) -> Self {
        let mut m = Self::zero();
        for i in 0..8 {
            for j in 0..8 {
                m.0[i][j] = v[i] * v[j].conj();
            }
        }
        m
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for i in 0..8 {
            for k in 0..8 {
                let a = self.0[i][k];
                if a.norm_sqr() == T::zero() {
                    continue;
                }
                for j in 0..8 {
                    r.0[i][j] = r.0[i][j] + a * o.0[k][j];
                }
            }
        }
        r
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for i in 0..8 {
            for j in 0..8 {
                r.0[i][j] = r.0[i][j] + o.0[i][j];
            }
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for i in 0..8 {
            for j in 0..8 {
                r.0[i][j] = r.0[i][j] - o.0[i][j];
            }
        }
        r
    }

    pub fn scale_re(&self, s: T) -> Self {
        let mut r = self.clone();
        for i in 0..8 {
            for j in 0..8 {
                r.0[i][j] = r.0[i][j].scale(s);
            }
        }
        r
    }

    pub fn dagger(&self) -> Self {
        let mut r = Self::zero();
        for i in 0..8 {
            for j in 0..8 {
                r.0[i][j] = self.0[j][i].conj();
            }
        }
        r
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> C<T> {
        let mut t = C::new(T::zero(), T::zero());
        for i in 0..8 {
            t = t + self.0[i][i];
        }
        t
    }

    pub fn mul_vec(&self, v: &[C<T>; 8]) -> [C<T>; 8] {
        let mut out = [C::new(T::zero(), T::zero()); 8];
        for i in 0..8 {
            for j in 0..8 {
                out[i] = out[i] + self.0[i][j] * v[j];
            }
        }
        out
    }

    pub fn max_hermiticity_defect(&self) -> T {
        let mut m = T::zero();
        for i in 0..8 {
            for j in 0..8 {
                m = m.max((self.0[i][j] - self.0[j][i].conj()).norm());
            }
        }
        m
    }

    pub fn frobenius_distance(&self, o: &Self) -> T {
        let mut s = T::zero();
        for i in 0..8 {
            for j in 0..8 {
                s = s + (self.0[i][j] - o.0[i][j]).norm_sqr();
            }
        }
        s.sqrt()
    }

    /// Smallest eigenvalue of a Hermitian matrix, via Jacobi on the 16x16
    /// real embedding [[Re, -Im], [Im, Re]] (eigenvalues come out doubled).
    pub fn min_eigenvalue_hermitian(&self) -> T {
        let n = 16;
        let mut emb = SymMat::zeros(n);
        for i in 0..8 {
            for j in 0..8 {
                let z = (self.0[i][j] + self.0[j][i].conj()).scale(lit::<T>(0.5));
                emb.a[i * n + j] = z.re;
                emb.a[(i + 8) * n + (j + 8)] = z.re;
                emb.a[(i + 8) * n + j] = z.im;
                emb.a[i * n + (j + 8)] = -z.im;
            }
        }
        let (vals, _) = emb.eigh();
        vals[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_small_known() {
        // [[2,1],[1,2]] -> 1, 3 with vectors (1,-1)/sqrt2, (1,1)/sqrt2
        let mut m = SymMat::<f64>::zeros(2);
        m.set(0, 0, 2.0);
        m.set(1, 1, 2.0);
        m.set(0, 1, 1.0);
        let (vals, vecs) = m.eigh();
        assert!((vals[0] - 1.0).abs() < 1e-14);
        assert!((vals[1] - 3.0).abs() < 1e-14);
        let dot = vecs[0] * vecs[1] + vecs[2] * vecs[3];
        assert!(dot.abs() < 1e-14);
    }

    #[test]
    fn jacobi_reconstructs_matrix() {
        let n = 6;
        let mut m = SymMat::<f64>::zeros(n);
        let mut seed = 1u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        for i in 0..n {
            for j in 0..=i {
                m.set(i, j, next());
            }
        }
        let (vals, v) = m.eigh();
        // A v_k = lambda_k v_k
        for k in 0..n {
            for i in 0..n {
                let mut av = 0.0;
                for j in 0..n {
                    av += m.get(i, j) * v[j * n + k];
                }
                assert!((av - vals[k] * v[i * n + k]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn sturm_matches_jacobi() {
        let n = 15;
        let diag: Vec<f64> = (0..n).map(|i| (i as f64 - 7.0).powi(2) * 0.7).collect();
        let off: Vec<f64> = (0..n - 1).map(|i| -1.3 + 0.01 * i as f64).collect();
        let tri = Tridiag { diag: diag.clone(), off: off.clone() };
        let mut m = SymMat::<f64>::zeros(n);
        for i in 0..n {
            m.set(i, i, diag[i]);
        }
        for i in 0..n - 1 {
            m.set(i, i + 1, off[i]);
        }
        let (vals, _) = m.eigh();
        for k in [0usize, 1, 2, n - 1] {
            let s = tri.eigenvalue(k);
            assert!((s - vals[k]).abs() < 1e-11, "k={k}: {s} vs {}", vals[k]);
        }
        // eigenvector residual
        let lam = tri.eigenvalue(0);
        let v = tri.eigenvector(lam);
        for i in 0..n {
            let mut av = diag[i] * v[i];
            if i > 0 {
                av += off[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                av += off[i] * v[i + 1];
            }
            assert!((av - lam * v[i]).abs() < 1e-9);
        }
    }

    #[test]
    fn lu_solves_and_inverts() {
        let a: Vec<f64> = vec![4.0, 1.0, 0.0, 1.0, 3.0, -1.0, 0.0, -1.0, 2.0];
        let b = vec![1.0, 2.0, 3.0];
        let x = lu_solve(&a, 3, &b, 1e12).unwrap();
        for i in 0..3 {
            let mut s = 0.0;
            for j in 0..3 {
                s += a[i * 3 + j] * x[j];
            }
            assert!((s - b[i]).abs() < 1e-12);
        }
        let inv = lu_inverse(&a, 3, 1e12).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0.0;
                for k in 0..3 {
                    s += a[i * 3 + k] * inv[k * 3 + j];
                }
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((s - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn min_eigenvalue_of_hermitian() {
        let mut m = Mat8::<f64>::zero();
        for i in 0..8 {
            m.0[i][i] = Complex::new(i as f64, 0.0);
        }
        m.0[0][1] = Complex::new(0.0, 0.3);
        m.0[1][0] = Complex::new(0.0, -0.3);
        let lo = m.min_eigenvalue_hermitian();
        // 2x2 block [[0, .3i], [-.3i, 1]] has lower eigenvalue (1-sqrt(1+0.36))/2
        let expect = 0.5 * (1.0 - (1.0f64 + 4.0 * 0.09).sqrt());
        assert!((lo - expect).abs() < 1e-12, "{lo} vs {expect}");
    }
}
