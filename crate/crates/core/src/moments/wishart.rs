//! General-alpha Wishart moments D_N^(beta)(k, alpha) for arbitrary integer
//! k, stepped through three-term recursions away from the k = 0, 1 seeds,
//! plus the closed-form moment generating function used as a cross-check.
//!
//! One generic stepping engine serves two scalar types: exact rationals for
//! numeric queries and rational functions of N for the symbolic
//! specialization checks. The beta = 1 relation consumes the complex
//! (beta = 2) moments of size N-1 alongside; at N = 1 that embedded sequence
//! is the size-0 case and is taken identically zero, by an explicit branch
//! rather than by accident of its zero seeds.

use num::Zero;

use super::Beta;
use crate::error::{Error, Result};
use crate::exact::poly::Var;
use crate::exact::rat::{rat_i64, Rat};
use crate::exact::ratfunc::RatFunc;
use crate::exact::series::TruncSeries;

const B2_CONTEXT: &str = "(k-1)(k^2 - alpha^2) vanishes in the complex-Wishart downward step";
const E_CONTEXT: &str = "(k-1)(k^2 - alpha^2) vanishes in the embedded size N-1 complex sequence";

/// One moment request: D_N^(beta)(k, alpha) = E[Tr W^k] for an N x N Wishart
/// matrix of symmetry class beta and Laguerre parameter alpha.
#[derive(Debug, Clone, PartialEq)]
pub struct WishartMomentQuery {
    pub beta: Beta,
    pub k: i64,
    pub alpha: Rat,
    pub n: u32,
}

/// The minimal field interface the recursions need, implemented by exact
/// rationals and by rational functions of N. `lift` makes an integer
/// constant of the same shape as `self`.
trait Scalar: Clone {
    fn lift(&self, v: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// None when the divisor is exactly zero.
    fn div(&self, o: &Self) -> Option<Self>;
    fn is_zero(&self) -> bool;
}

impl Scalar for Rat {
    fn lift(&self, v: i64) -> Self {
        rat_i64(v)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            None
        } else {
            Some(self / o)
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Scalar for RatFunc {
    fn lift(&self, v: i64) -> Self {
        RatFunc::constant(rat_i64(v), self.var())
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFunc::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::mul(self, o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        RatFunc::div(self, o).ok()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

/// Complex (beta = 2) run along
///   (k+2) D(k+1) = (2k+1)(alpha+2N) D(k) + (k-1)(k^2-alpha^2) D(k-1),
/// valid for every integer k. Returns vals[i] = D(i) for k >= 0, or
/// vals[i] = D(-i) for k < 0, out to |k|. The upward divisor k+2 never
/// vanishes on its path; downward divisors are checked.
fn d_beta2_run<T: Scalar>(k: i64, alpha: &T, n: &T, context: &str) -> Result<Vec<T>> {
    let d0 = n.clone();
    let d1 = n.mul(&n.add(alpha));
    let a2n = alpha.add(&n.mul(&n.lift(2)));
    let alpha_sq = alpha.mul(alpha);
    if k >= 0 {
        let mut vals = vec![d0, d1];
        for j in 1..k {
            let t1 = a2n.mul(&vals[j as usize]).mul(&alpha.lift(2 * j + 1));
            let t2 = alpha
                .lift(j * j)
                .sub(&alpha_sq)
                .mul(&vals[(j - 1) as usize])
                .mul(&alpha.lift(j - 1));
            let next = t1.add(&t2).div(&alpha.lift(j + 2)).expect("positive integer divisor");
            vals.push(next);
        }
        vals.truncate((k + 1) as usize);
        Ok(vals)
    } else {
        let mut vals = vec![d0];
        let mut above = d1;
        for j in (k + 1..=0).rev() {
            let i = (-j) as usize;
            let divisor = alpha.lift(j - 1).mul(&alpha.lift(j * j).sub(&alpha_sq));
            if divisor.is_zero() {
                return Err(Error::SingularCoefficient { k: j, context: context.to_string() });
            }
            let num = alpha
                .lift(j + 2)
                .mul(&above)
                .sub(&alpha.lift(2 * j + 1).mul(&a2n).mul(&vals[i]));
            let below = num.div(&divisor).expect("checked nonzero");
            above = vals[i].clone();
            vals.push(below);
        }
        Ok(vals)
    }
}

fn d_beta2_at<T: Scalar>(k: i64, alpha: &T, n: &T, context: &str) -> Result<T> {
    let mut run = d_beta2_run(k, alpha, n, context)?;
    Ok(run.pop().expect("run is never empty"))
}

/// Real (beta = 1) value along
///   D(k+1) - (2(alpha-1)+4N) D(k) - (1-alpha^2+4k(k-1)) D(k-1)
///     = 3/(k-1) ((alpha+2N-k-1) E(k) - E(k+1)),
/// where E = D^(2)_{N-1}(., alpha). The k = 1 relation is singular (3/(k-1)),
/// so upward stepping starts from the external seed
/// D(2) = N(N+alpha)(2N+alpha+1); downward pivots k <= 0 are regular in that
/// factor but their 1-alpha^2+4k(k-1) divisors are checked.
fn d_beta1_at<T: Scalar>(k: i64, alpha: &T, n: &T) -> Result<T> {
    let d0 = n.clone();
    let d1 = n.mul(&n.add(alpha));
    match k {
        0 => return Ok(d0),
        1 => return Ok(d1),
        _ => {}
    }

    let a2n = alpha.add(&n.mul(&n.lift(2)));
    let alpha_sq = alpha.mul(alpha);
    let nm1 = n.sub(&n.lift(1));
    // Size-0 embedded complex sequence (N = 1): identically zero.
    let e_zero = nm1.is_zero();
    let zero = n.lift(0);
    // 2(alpha - 1) + 4N
    let c1 = alpha.sub(&alpha.lift(1)).mul(&alpha.lift(2)).add(&n.mul(&n.lift(4)));

    if k >= 2 {
        let e_run: Vec<T> = if e_zero {
            vec![zero; (k + 1) as usize]
        } else {
            d_beta2_run(k, alpha, &nm1, E_CONTEXT)?
        };
        let d2 = d1.mul(&a2n.add(&a2n.lift(1)));
        if k == 2 {
            return Ok(d2);
        }
        let (mut prev, mut cur) = (d1, d2);
        for j in 2..k {
            let inner = a2n
                .sub(&a2n.lift(j + 1))
                .mul(&e_run[j as usize])
                .sub(&e_run[(j + 1) as usize]);
            let rhs = inner.mul(&a2n.lift(3)).div(&a2n.lift(j - 1)).expect("j >= 2");
            let next = c1
                .mul(&cur)
                .add(&alpha.lift(1 + 4 * j * (j - 1)).sub(&alpha_sq).mul(&prev))
                .add(&rhs);
            prev = cur;
            cur = next;
        }
        Ok(cur)
    } else {
        let e1 = nm1.mul(&nm1.add(alpha));
        let e_run: Vec<T> = if e_zero {
            vec![zero; (1 - k) as usize]
        } else {
            d_beta2_run(k + 1, alpha, &nm1, E_CONTEXT)?
        };
        let e_at = |j: i64| -> &T {
            if j == 1 {
                &e1
            } else {
                &e_run[(-j) as usize]
            }
        };
        let (mut above, mut cur) = (d1, d0);
        for j in (k + 1..=0).rev() {
            let divisor = alpha.lift(1 + 4 * j * (j - 1)).sub(&alpha_sq);
            if divisor.is_zero() {
                return Err(Error::SingularCoefficient {
                    k: j,
                    context: "1 - alpha^2 + 4k(k-1) vanishes in the real-Wishart downward step"
                        .to_string(),
                });
            }
            let inner = a2n.sub(&a2n.lift(j + 1)).mul(e_at(j)).sub(e_at(j + 1));
            let rhs = inner.mul(&a2n.lift(3)).div(&a2n.lift(j - 1)).expect("j <= 0");
            let num = above.sub(&c1.mul(&cur)).sub(&rhs);
            let below = num.div(&divisor).expect("checked nonzero");
            above = cur;
            cur = below;
        }
        Ok(cur)
    }
}

/// Exact D_N^(beta)(k, alpha) for any integer k.
pub fn wishart_moment(q: &WishartMomentQuery) -> Result<Rat> {
    if q.n == 0 {
        return Err(Error::InvalidArgument { what: "Wishart matrix size N must be >= 1".into() });
    }
    // Finiteness gate: for beta = 2 the level density vanishes like x^alpha
    // at the origin, so E[Tr W^k] with k < 0 and integer alpha exists only
    // for alpha >= |k|. The recursion would otherwise continue analytically
    // through a divergent moment, so the query is rejected.
    if q.beta == Beta::Two && q.k < 0 && q.alpha.is_integer() && q.alpha < rat_i64(-q.k) {
        return Err(Error::DivergentMoment {
            context: format!(
                "beta = 2, k = {}: integer alpha = {} must be at least {}",
                q.k,
                q.alpha,
                -q.k
            ),
        });
    }
    let n = rat_i64(q.n as i64);
    match q.beta {
        Beta::Two => d_beta2_at(q.k, &q.alpha, &n, B2_CONTEXT),
        Beta::One => d_beta1_at(q.k, &q.alpha, &n),
    }
}

/// D(k, alpha) with the size and alpha symbolic in Q(N). This runs the same
/// stepping code as `wishart_moment` over rational functions, so the
/// delay-time specializations alpha = N (beta = 2) and alpha = N+1 (beta = 1,
/// sizes N and N-1) can be compared structurally against the finite-N
/// recursions. For the usual case pass `size = RatFunc::x(Var::N)`.
pub fn wishart_d_symbolic(beta: Beta, k: i64, alpha: &RatFunc, size: &RatFunc) -> Result<RatFunc> {
    match beta {
        Beta::Two => d_beta2_at(k, alpha, size, B2_CONTEXT),
        Beta::One => d_beta1_at(k, alpha, size),
    }
}

/// Truncated series of the closed-form generating function
///   M(s) = N (alpha+N) 2F1(1-alpha-N, 1-N; 2; s^2) (1-s)^(-(alpha+2N)),
/// whose hypergeometric factor terminates at degree 2(N-1). Positive moments
/// follow as D(k) = (k-1)! [s^(k-1)] M(s).
pub fn wishart_mgf_series(alpha: &Rat, n: u32, order: usize) -> TruncSeries {
    assert!(n >= 1, "matrix size must be positive");
    let nr = rat_i64(n as i64);

    // Terminating 2F1 in s^2: running term h_i = (a)_i (b)_i / ((2)_i i!).
    let i_max = (n as usize - 1).min(order / 2);
    let mut hyper = vec![rat_i64(0); order + 1];
    let mut h = rat_i64(1);
    for i in 0..=i_max {
        hyper[2 * i] = h.clone();
        let ir = rat_i64(i as i64);
        h *= (rat_i64(1) - alpha - &nr + &ir) * (rat_i64(1) - &nr + &ir);
        h /= (rat_i64(2) + &ir) * (rat_i64(1) + &ir);
    }

    // Binomial factor (1-s)^(-m), m = alpha + 2N.
    let m = alpha + &nr + &nr;
    let mut binom = vec![rat_i64(0); order + 1];
    let mut c = rat_i64(1);
    for (j, slot) in binom.iter_mut().enumerate() {
        *slot = c.clone();
        c *= (&m + rat_i64(j as i64)) / rat_i64(j as i64 + 1);
    }

    let scale = &nr * (alpha + &nr);
    let mut coeffs = vec![rat_i64(0); order + 1];
    for i in 0..=order {
        if Zero::is_zero(&hyper[i]) {
            continue;
        }
        for j in 0..=(order - i) {
            coeffs[i + j] += &hyper[i] * &binom[j] * &scale;
        }
    }
    TruncSeries::new(coeffs, Var::S)
}
