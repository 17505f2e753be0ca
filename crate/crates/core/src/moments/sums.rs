//! The two closed-form sums for the beta = 2 delay-time moments. Gamma
//! ratios are exact integer products; no floating-point Gamma anywhere.

use num::{BigInt, Zero};

use crate::error::{Error, Result};
use crate::exact::rat::{binomial, factorial, gamma_ratio, rat_big, Rat};

// Both sums are finite exactly for N >= k: the extreme MS term carries
// Gamma(N-k+1), and the alpha = N Laguerre weight makes E[Tr W^-k] integrable
// at the origin iff N >= k.
fn check_domain(k: u32, n: u32) -> Result<()> {
    if k < 1 || n < k {
        return Err(Error::GammaDomain { k, n });
    }
    Ok(())
}

/// N-term positive sum:
/// tau_k = N^{k-1}/k * sum_{j=0}^{N-1} C(k+j-1,k-1) C(k+j,k-1)
///         * Gamma(2N-k-j)/Gamma(N-j) * Gamma(N+1)/Gamma(2N).
pub fn tau_exact_sum_nterm(k: u32, n: u32) -> Result<Rat> {
    check_domain(k, n)?;
    let (k64, n64) = (k as u64, n as u64);
    let mut sum = BigInt::zero();
    for j in 0..n64 {
        let term = binomial(k64 + j - 1, k64 - 1)
            * binomial(k64 + j, k64 - 1)
            * gamma_ratio(2 * n64 - k64 - j, n64 - j);
        sum += term;
    }
    let mut num = rat_big(sum);
    num *= rat_big(BigInt::from(n64)).pow((k - 1) as i32);
    let den = rat_big(BigInt::from(k64) * gamma_ratio(2 * n64, n64 + 1));
    Ok(num / den)
}

/// Alternating k-term sum:
/// tau_k = N^{k-1}/k! * sum_{j=0}^{k-1} (-1)^j C(k-1,j)
///         * Gamma(N-j+k)/Gamma(N-j) * Gamma(N+j+1-k)/Gamma(N+j+1).
pub fn tau_exact_sum_alternating(k: u32, n: u32) -> Result<Rat> {
    check_domain(k, n)?;
    let (k64, n64) = (k as u64, n as u64);
    let mut sum = Rat::zero();
    for j in 0..k64 {
        let mut term = rat_big(binomial(k64 - 1, j) * gamma_ratio(n64 - j + k64, n64 - j));
        term /= rat_big(gamma_ratio(n64 + j + 1, n64 + j + 1 - k64));
        if j % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    let mut scale = rat_big(BigInt::from(n64)).pow((k - 1) as i32);
    scale /= rat_big(factorial(k64));
    Ok(sum * scale)
}
