//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices, plus a
//! real embedding for Hermitian ones. Dimensions stay small here (<= 256),
//! where Jacobi's quadratic convergence and unconditional stability make a
//! dependency-free solver the right tool.

use crate::error::{Error, Result};

/// Largest accepted input dimension.
pub const MAX_DIM: usize = 256;
const MAX_SWEEPS: usize = 64;
/// Stop when the off-diagonal Frobenius norm falls below this fraction of
/// the total Frobenius norm (which rotations preserve).
const REL_OFF_TOL: f64 = 1e-12;
/// Largest tolerated relative asymmetry of the input.
const REL_ASYM_TOL: f64 = 1e-10;

fn validate_square(matrix: &[Vec<f64>]) -> Result<usize> {
    let n = matrix.len();
    if n == 0 || n > MAX_DIM {
        return Err(Error::InvalidArgument {
            what: format!("matrix dimension must be 1..={MAX_DIM}, got {n}"),
        });
    }
    for row in matrix {
        if row.len() != n {
            return Err(Error::InvalidArgument {
                what: format!("matrix is not square: row of length {} in dimension {n}", row.len()),
            });
        }
        if row.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument {
                what: "matrix entries must be finite".to_string(),
            });
        }
    }
    Ok(n)
}

fn off_norm_sq(a: &[Vec<f64>], n: usize) -> f64 {
    let mut off = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            off += 2.0 * a[p][q] * a[p][q];
        }
    }
    off
}

/// Diagonalize in place by cyclic Jacobi sweeps; returns the number of
/// sweeps used. The Frobenius norm is rotation-invariant, so the stopping
/// threshold is fixed once up front.
fn jacobi_in_place(a: &mut [Vec<f64>], n: usize) -> Result<usize> {
    let total_sq: f64 = a.iter().flatten().map(|v| v * v).sum();
    if total_sq == 0.0 {
        return Ok(0);
    }
    let tol_sq = REL_OFF_TOL * REL_OFF_TOL * total_sq;
    for sweep in 0..MAX_SWEEPS {
        if off_norm_sq(a, n) <= tol_sq {
            return Ok(sweep);
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                // tan of the rotation angle via the stable root of
                // t^2 + 2 t theta - 1 = 0 with smaller magnitude.
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[p][i] = a[i][p];
                    a[i][q] = s * aip + c * aiq;
                    a[q][i] = a[i][q];
                }
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    Err(Error::NonConvergence { sweeps: MAX_SWEEPS })
}

/// All eigenvalues of a dense real symmetric matrix, ascending. The input
/// must be square, of dimension <= 256, and symmetric to within 1e-10
/// relative to its largest entry; it is exactly symmetrized before the
/// iteration so the rotations preserve symmetry bitwise.
pub fn eigvals_symmetric(matrix: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = validate_square(matrix)?;
    let mut max_abs = 0.0f64;
    let mut max_asym = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            max_abs = max_abs.max(matrix[i][j].abs());
            if j > i {
                max_asym = max_asym.max((matrix[i][j] - matrix[j][i]).abs());
            }
        }
    }
    if max_abs > 0.0 && max_asym > REL_ASYM_TOL * max_abs {
        return Err(Error::NotSymmetric { asymmetry: max_asym / max_abs });
    }
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| 0.5 * (matrix[i][j] + matrix[j][i])).collect())
        .collect();
    jacobi_in_place(&mut a, n)?;
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues of finite input are finite"));
    Ok(values)
}

/// All eigenvalues of a dense complex Hermitian matrix W = re + i*im,
/// ascending. Uses the real embedding [[re, -im], [im, re]], a symmetric
/// 2n x 2n matrix whose spectrum is that of W with every eigenvalue
/// doubled; the doubled values are paired off after sorting.
pub fn eigvals_hermitian(re: &[Vec<f64>], im: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = validate_square(re)?;
    if validate_square(im)? != n {
        return Err(Error::InvalidArgument {
            what: "real and imaginary parts must have the same dimension".to_string(),
        });
    }
    let mut max_abs = 0.0f64;
    let mut max_asym = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            max_abs = max_abs.max(re[i][j].abs()).max(im[i][j].abs());
            if j >= i {
                // Hermitian: re symmetric, im antisymmetric (zero diagonal).
                max_asym = max_asym.max((re[i][j] - re[j][i]).abs());
                max_asym = max_asym.max((im[i][j] + im[j][i]).abs());
            }
        }
    }
    if max_abs > 0.0 && max_asym > REL_ASYM_TOL * max_abs {
        return Err(Error::NotSymmetric { asymmetry: max_asym / max_abs });
    }
    let doubled = eigvals_symmetric(&embed_hermitian(re, im, n))?;
    Ok((0..n).map(|i| 0.5 * (doubled[2 * i] + doubled[2 * i + 1])).collect())
}

/// The real symmetric embedding [[re, -im], [im, re]], symmetrized exactly.
fn embed_hermitian(re: &[Vec<f64>], im: &[Vec<f64>], n: usize) -> Vec<Vec<f64>> {
    let mut m = vec![vec![0.0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let a = 0.5 * (re[i][j] + re[j][i]);
            let b = 0.5 * (im[i][j] - im[j][i]);
            m[i][j] = a;
            m[n + i][n + j] = a;
            m[i][n + j] = -b;
            m[n + i][j] = b;
        }
    }
    m
}
