//! Exact root extraction: rational roots of rational univariate
//! polynomials, and Q(i)-rational roots of Gaussian univariate
//! polynomials via the real/imaginary resultant split.

use crate::linalg::resultant;
use crate::poly::QHPoly;
use crate::scalar::GaussRat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Bound on the integers whose divisors we are willing to enumerate.
/// Divisor search walks up to the square root, so this caps the walk at
/// ten million steps.
pub const DIVISOR_BOUND: u64 = 100_000_000_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("coefficient {value} exceeds the divisor-search bound {bound}; cannot certify the rational root set")]
    CoefficientTooLarge { value: BigInt, bound: u64 },
    #[error("polynomial is zero; roots are not defined")]
    ZeroPolynomial,
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

fn to_small(n: &BigInt) -> Result<u64, RootError> {
    let a = n.abs();
    match a.to_u64() {
        Some(v) if v <= DIVISOR_BOUND => Ok(v),
        _ => Err(RootError::CoefficientTooLarge {
            value: n.clone(),
            bound: DIVISOR_BOUND,
        }),
    }
}

/// All rational roots with multiplicities of a univariate polynomial in
/// variable v with rational (real) coefficients, sorted increasingly.
/// Exact and complete: every rational root is found or an error is
/// returned; no root is ever silently missed.
pub fn rational_roots(p: &QHPoly, v: usize) -> Result<Vec<(BigRational, u32)>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let coeffs = p.coeffs_in(v);
    for c in &coeffs {
        assert!(c.is_constant(), "rational_roots needs a univariate polynomial");
        assert!(c.coeff(&[0, 0, 0]).is_real(), "rational_roots needs real coefficients");
    }
    let mut ints: Vec<BigInt> = {
        let rats: Vec<BigRational> = coeffs.iter().map(|c| c.coeff(&[0, 0, 0]).re).collect();
        let lcm = rats
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        rats.iter()
            .map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer())
            .collect()
    };
    let content = ints
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    for c in ints.iter_mut() {
        *c /= &content;
    }
    let mut found: Vec<(BigRational, u32)> = Vec::new();
    // strip the root at zero
    let zeros = ints.iter().take_while(|c| c.is_zero()).count() as u32;
    if zeros > 0 {
        ints.drain(..zeros as usize);
        found.push((BigRational::zero(), zeros));
    }
    if ints.len() <= 1 {
        found.sort_by(|x, y| x.0.cmp(&y.0));
        return Ok(found);
    }
    let a0 = to_small(&ints[0])?;
    let an = to_small(ints.last().unwrap())?;
    let eval_at_int = |k: i64| -> BigInt {
        let kb = BigInt::from(k);
        ints.iter().rev().fold(BigInt::zero(), |acc, c| acc * &kb + c)
    };
    let f1 = eval_at_int(1);
    let fm1 = eval_at_int(-1);
    for q in divisors(an) {
        let qb = BigInt::from(q);
        for pn in divisors(a0) {
            if pn.gcd(&q) != 1 {
                continue;
            }
            let pb = BigInt::from(pn);
            for sign in [1i64, -1] {
                let num = if sign > 0 { pb.clone() } else { -pb.clone() };
                // cheap filters: (q - p) | f(1) and (q + p) | f(-1)
                let d1 = &qb - &num;
                if !d1.is_zero() && !f1.is_multiple_of(&d1) {
                    continue;
                }
                let d2 = &qb + &num;
                if !d2.is_zero() && !fm1.is_multiple_of(&d2) {
                    continue;
                }
                // exact integer Horner of q^n f(p/q)
                let mut acc = BigInt::zero();
                let mut qpow = BigInt::one();
                for c in ints.iter().rev() {
                    acc = acc * &num + c * &qpow;
                    qpow *= &qb;
                }
                if acc.is_zero() {
                    let root = BigRational::new(num, qb.clone());
                    let m = multiplicity_at(p, v, &GaussRat::new(root.clone(), BigRational::zero()));
                    debug_assert!(m > 0);
                    found.push((root, m));
                }
            }
        }
    }
    found.sort_by(|x, y| x.0.cmp(&y.0));
    found.dedup_by(|x, y| x.0 == y.0);
    Ok(found)
}

/// Multiplicity of `root` as a zero of p in variable v, by repeated
/// exact division by (x_v - root).
pub fn multiplicity_at(p: &QHPoly, v: usize, root: &GaussRat) -> u32 {
    let lin = &QHPoly::var(v) - &QHPoly::constant(root.clone());
    let mut m = 0;
    let mut cur = p.clone();
    while let Some(q) = cur.div_exact(&lin) {
        m += 1;
        cur = q;
        if cur.is_zero() {
            break;
        }
    }
    m
}

/// Roots in Q(i) of a univariate polynomial over Q(i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussRoots {
    /// (root, multiplicity), sorted for determinism.
    pub roots: Vec<(GaussRat, u32)>,
    /// p divided by all found linear factors; has no Q(i)-rational roots.
    pub residual: QHPoly,
}

/// Find every root u + i*w (u, w rational) of p. Split p(u + i*w) into
/// real and imaginary parts A, B in Q[u, w]; candidate u's are rational
/// roots of Res_w(A, B), candidate w's come from the specialized pair.
/// Complete for Q(i)-rational roots: A and B never share a factor, so
/// the resultant is a nonzero polynomial vanishing at every root.
pub fn gauss_roots(p: &QHPoly, v: usize) -> Result<GaussRoots, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let coeffs = p.coeffs_in(v);
    for c in &coeffs {
        assert!(c.is_constant(), "gauss_roots needs a univariate polynomial");
    }
    if coeffs.len() <= 1 {
        return Ok(GaussRoots { roots: vec![], residual: p.clone() });
    }
    // image of p under t -> u + i*w, in slots (0, 1)
    let t_sub = &QHPoly::var(0) + &QHPoly::mono(GaussRat::i(), [0, 1, 0]);
    let mut image = QHPoly::zero();
    let mut tpow = QHPoly::one();
    for c in &coeffs {
        image = &image + &tpow.scale(&c.coeff(&[0, 0, 0]));
        tpow = &tpow * &t_sub;
    }
    let mut a_part = QHPoly::zero();
    let mut b_part = QHPoly::zero();
    for (e, c) in image.terms() {
        a_part = &a_part + &QHPoly::mono(GaussRat::new(c.re.clone(), BigRational::zero()), *e);
        b_part = &b_part + &QHPoly::mono(GaussRat::new(c.im.clone(), BigRational::zero()), *e);
    }
    let mut roots: Vec<(GaussRat, u32)> = Vec::new();
    let push_root = |cand: GaussRat, roots: &mut Vec<(GaussRat, u32)>| {
        if roots.iter().any(|(r, _)| r == &cand) {
            return;
        }
        let m = multiplicity_at(p, v, &cand);
        if m > 0 {
            roots.push((cand, m));
        }
    };
    // for degree >= 1 neither part vanishes identically, and the two are
    // coprime (linear factors of the image and of its bar-conjugate are
    // never associate), so the resultant is a nonzero polynomial in u
    assert!(!a_part.is_zero() && !b_part.is_zero());
    let res = resultant(&a_part, &b_part, 1);
    assert!(!res.is_zero(), "split parts are always coprime");
    let u_candidates: Vec<BigRational> = if res.is_constant() {
        Vec::new()
    } else {
        rational_roots(&res, 0)?.into_iter().map(|(r, _)| r).collect()
    };
    for u0 in u_candidates {
        let ug = GaussRat::new(u0.clone(), BigRational::zero());
        let av = a_part.set_var(0, &ug);
        let bv = b_part.set_var(0, &ug);
        let g = if av.is_zero() {
            bv
        } else if bv.is_zero() {
            av
        } else {
            av.gcd(&bv)
        };
        if g.is_zero() || g.is_constant() {
            continue;
        }
        for (w0, _) in rational_roots(&g, 1)? {
            let cand = GaussRat::new(u0.clone(), w0);
            push_root(cand, &mut roots);
        }
    }
    roots.sort_by(|x, y| x.0.cmp(&y.0));
    let mut residual = p.clone();
    for (r, m) in &roots {
        let lin = &QHPoly::var(v) - &QHPoly::constant(r.clone());
        for _ in 0..*m {
            residual = residual.div_exact(&lin).expect("multiplicity counts divisions");
        }
    }
    Ok(GaussRoots { roots, residual })
}
