//! Sparse polynomials in three variables over Q(i), with quasi-degree
//! bookkeeping relative to an externally supplied weight vector.
//!
//! One type serves both the ambient variables (x0, x1, x2) and chart
//! coordinates (slots 0 and 1, slot 2 unused). Exponent triples are
//! ordered lexicographically, which is a monomial order; exact division
//! and gcd normalization rely on that.

use crate::scalar::GaussRat;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Exps = [u32; 3];

/// Sparse polynomial; invariant: no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QHPoly {
    terms: BTreeMap<Exps, GaussRat>,
}

impl QHPoly {
    pub fn zero() -> Self {
        QHPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        QHPoly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        QHPoly::mono(c, [0, 0, 0])
    }

    pub fn from_int(n: i64) -> Self {
        QHPoly::constant(GaussRat::from_int(n))
    }

    pub fn var(v: usize) -> Self {
        let mut e = [0u32; 3];
        e[v] = 1;
        QHPoly::mono(GaussRat::one(), e)
    }

    pub fn mono(c: GaussRat, e: Exps) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        QHPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exps, GaussRat)>>(it: I) -> Self {
        let mut p = QHPoly::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exps, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let s = slot.get() + &c;
                if s.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e == &[0, 0, 0])
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &GaussRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exps) -> GaussRat {
        self.terms.get(e).cloned().unwrap_or_else(GaussRat::zero)
    }

    /// Lex-largest term, the leading term for all division routines.
    pub fn lead(&self) -> Option<(&Exps, &GaussRat)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &GaussRat) -> QHPoly {
        if c.is_zero() {
            return QHPoly::zero();
        }
        QHPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn mul_mono(&self, c: &GaussRat, e: &Exps) -> QHPoly {
        if c.is_zero() {
            return QHPoly::zero();
        }
        QHPoly {
            terms: self
                .terms
                .iter()
                .map(|(f, a)| ([f[0] + e[0], f[1] + e[1], f[2] + e[2]], a * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> QHPoly {
        let mut acc = QHPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[v]).max()
    }

    /// Highest variable index appearing with positive exponent.
    pub fn max_var(&self) -> Option<usize> {
        let mut m = None;
        for e in self.terms.keys() {
            for v in (0..3).rev() {
                if e[v] > 0 {
                    m = Some(m.map_or(v, |cur: usize| cur.max(v)));
                    break;
                }
            }
        }
        m
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.terms.keys().any(|e| e[v] > 0)
    }

    /// Coefficient polynomials with respect to variable v; index = power
    /// of v. Empty for the zero polynomial.
    pub fn coeffs_in(&self, v: usize) -> Vec<QHPoly> {
        let Some(d) = self.degree_in(v) else {
            return vec![];
        };
        let mut out = vec![QHPoly::zero(); d as usize + 1];
        for (e, c) in &self.terms {
            let mut f = *e;
            let k = f[v] as usize;
            f[v] = 0;
            out[k].add_term(f, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: usize, coeffs: &[QHPoly]) -> QHPoly {
        let mut p = QHPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (e, a) in &c.terms {
                let mut f = *e;
                f[v] += k as u32;
                p.add_term(f, a.clone());
            }
        }
        p
    }

    pub fn derivative(&self, v: usize) -> QHPoly {
        let mut p = QHPoly::zero();
        for (e, c) in &self.terms {
            if e[v] == 0 {
                continue;
            }
            let mut f = *e;
            f[v] -= 1;
            p.add_term(f, c * GaussRat::from_int(e[v] as i64));
        }
        p
    }

    pub fn eval(&self, pt: &[GaussRat; 3]) -> GaussRat {
        let mut s = GaussRat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for v in 0..3 {
                if e[v] > 0 {
                    t = &t * pt[v].pow(e[v] as i64);
                }
            }
            s = &s + &t;
        }
        s
    }

    /// Replace variable v by a scalar; the result no longer uses v.
    pub fn set_var(&self, v: usize, a: &GaussRat) -> QHPoly {
        let mut p = QHPoly::zero();
        for (e, c) in &self.terms {
            let mut f = *e;
            let k = f[v];
            f[v] = 0;
            p.add_term(f, c * a.pow(k as i64));
        }
        p
    }

    /// Replace variable v by a polynomial.
    pub fn subst(&self, v: usize, q: &QHPoly) -> QHPoly {
        let mut p = QHPoly::zero();
        for (e, c) in &self.terms {
            let mut f = *e;
            let k = f[v];
            f[v] = 0;
            let t = QHPoly::mono(c.clone(), f) * q.pow(k);
            p = &p + &t;
        }
        p
    }

    /// Simultaneous monomial substitution x_v -> x_v^(k_v).
    pub fn subst_powers(&self, k: &[u32; 3]) -> QHPoly {
        QHPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0] * k[0], e[1] * k[1], e[2] * k[2]], c.clone()))
                .collect(),
        }
    }

    pub fn weighted_degree(&self, w: &[i64; 3]) -> Option<i64> {
        self.terms
            .keys()
            .map(|e| e[0] as i64 * w[0] + e[1] as i64 * w[1] + e[2] as i64 * w[2])
            .max()
    }

    pub fn weighted_min_degree(&self, w: &[i64; 3]) -> Option<i64> {
        self.terms
            .keys()
            .map(|e| e[0] as i64 * w[0] + e[1] as i64 * w[1] + e[2] as i64 * w[2])
            .min()
    }

    /// Some(d) when every term has the same weighted degree d.
    /// The zero polynomial is homogeneous of every degree; returns None.
    pub fn quasi_degree(&self, w: &[i64; 3]) -> Option<i64> {
        let max = self.weighted_degree(w)?;
        if self.weighted_min_degree(w) == Some(max) {
            Some(max)
        } else {
            None
        }
    }

    pub fn is_quasi_homogeneous(&self, w: &[i64; 3]) -> bool {
        self.is_zero() || self.quasi_degree(w).is_some()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.weighted_degree(&[1, 1, 1])
    }

    /// Decomposition into weighted-homogeneous layers.
    pub fn slices(&self, w: &[i64; 3]) -> BTreeMap<i64, QHPoly> {
        let mut out: BTreeMap<i64, QHPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = e[0] as i64 * w[0] + e[1] as i64 * w[1] + e[2] as i64 * w[2];
            out.entry(d).or_insert_with(QHPoly::zero).add_term(*e, c.clone());
        }
        out
    }

    pub fn slice(&self, w: &[i64; 3], d: i64) -> QHPoly {
        let mut p = QHPoly::zero();
        for (e, c) in &self.terms {
            if e[0] as i64 * w[0] + e[1] as i64 * w[1] + e[2] as i64 * w[2] == d {
                p.add_term(*e, c.clone());
            }
        }
        p
    }

    /// Exact division: Some(q) with self = q * d, else None. Sound under
    /// the lex monomial order: if the leading term of the running
    /// remainder is not divisible by the divisor's leading term, the
    /// division cannot succeed.
    pub fn div_exact(&self, d: &QHPoly) -> Option<QHPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (ed, cd) = d.lead().map(|(e, c)| (*e, c.clone())).unwrap();
        let mut r = self.clone();
        let mut q = QHPoly::zero();
        while let Some((er, cr)) = r.lead().map(|(e, c)| (*e, c.clone())) {
            if er[0] < ed[0] || er[1] < ed[1] || er[2] < ed[2] {
                return None;
            }
            let e = [er[0] - ed[0], er[1] - ed[1], er[2] - ed[2]];
            let c = &cr / &cd;
            q.add_term(e, c.clone());
            r = &r - &d.mul_mono(&c, &e);
        }
        Some(q)
    }

    pub fn divides(&self, other: &QHPoly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Scale so the lex-largest coefficient is 1; the canonical
    /// representative among scalar multiples.
    pub fn monic(&self) -> QHPoly {
        match self.lead() {
            None => QHPoly::zero(),
            Some((_, c)) => {
                let inv = c.inv();
                self.scale(&inv)
            }
        }
    }

    /// gcd in Q(i)[x0,x1,x2], normalized so the lex-leading coefficient
    /// is 1. Subresultant polynomial remainder sequences, recursing from
    /// the highest present variable down to scalars.
    pub fn gcd(&self, other: &QHPoly) -> QHPoly {
        gcd_inner(self, other).monic()
    }

    pub fn gcd_many<'a, I: IntoIterator<Item = &'a QHPoly>>(polys: I) -> QHPoly {
        let mut g = QHPoly::zero();
        for p in polys {
            g = g.gcd(p);
            if g.is_constant() && !g.is_zero() {
                return QHPoly::one();
            }
        }
        g
    }

    /// Content with respect to v: gcd of the v-coefficients.
    fn content_in(&self, v: usize) -> QHPoly {
        QHPoly::gcd_many(self.coeffs_in(v).iter())
    }

    pub fn to_text(&self) -> String {
        self.to_text_with(&["x0", "x1", "x2"])
    }

    pub fn to_text_with(&self, names: &[&str; 3]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mon: Vec<String> = (0..3)
                .filter(|&v| e[v] > 0)
                .map(|v| {
                    if e[v] == 1 {
                        names[v].to_string()
                    } else {
                        format!("{}^{}", names[v], e[v])
                    }
                })
                .collect();
            let ctext = c.to_text();
            let (sign, mag) = if let Some(stripped) = ctext.strip_prefix('-') {
                ("-", stripped.to_string())
            } else {
                ("+", ctext)
            };
            if idx == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            if mon.is_empty() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&mon.join("*"));
            } else {
                out.push_str(&mag);
                out.push('*');
                out.push_str(&mon.join("*"));
            }
        }
        out
    }
}

/// Unnormalized gcd via the subresultant remainder sequence: each step
/// divides the pseudo-remainder by a known exact factor, so coefficient
/// growth stays polynomial and only one content extraction is needed at
/// the end of each recursion level.
fn gcd_inner(f: &QHPoly, g: &QHPoly) -> QHPoly {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    let v = match f.max_var().into_iter().chain(g.max_var()).max() {
        None => return QHPoly::one(), // both nonzero constants
        Some(v) => v,
    };
    let cf = f.content_in(v);
    let cg = g.content_in(v);
    let cont = gcd_inner(&cf, &cg);
    let mut a = f.div_exact(&cf).expect("content divides");
    let mut b = g.div_exact(&cg).expect("content divides");
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    let mut gco = QHPoly::one();
    let mut h = QHPoly::one();
    let candidate = loop {
        let db = b.degree_in(v).expect("nonzero in loop");
        if db == 0 {
            // nonzero remainder free of v: the gcd has v-degree zero
            break QHPoly::one();
        }
        let da = a.degree_in(v).unwrap();
        let delta = da - db;
        let r = pseudo_rem(&a, &b, v, delta);
        if r.is_zero() {
            break b;
        }
        let divisor = &gco * &h.pow(delta);
        let bn = r.div_exact(&divisor).expect("subresultant step divides exactly");
        a = b;
        b = bn;
        gco = a.coeffs_in(v).pop().unwrap();
        if delta > 0 {
            h = gco
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h-update divides exactly");
        }
    };
    let pp = if candidate.degree_in(v).unwrap_or(0) == 0 {
        QHPoly::one()
    } else {
        let c = candidate.content_in(v);
        candidate.div_exact(&c).expect("content divides")
    };
    &cont.monic() * &pp
}

/// Pseudo-remainder of a by b with respect to v: lc_v(b)^(delta+1) * a
/// reduced mod b, delta = deg_v(a) - deg_v(b). Returns a unchanged when
/// deg_v(a) < deg_v(b). Requires deg_v(b) >= 1.
pub(crate) fn prem(a: &QHPoly, b: &QHPoly, v: usize) -> QHPoly {
    let db = b.degree_in(v).expect("nonzero divisor");
    assert!(db >= 1, "pseudo-division needs a divisor of positive degree");
    let da = match a.degree_in(v) {
        None => return QHPoly::zero(),
        Some(d) => d,
    };
    if da < db {
        return a.clone();
    }
    pseudo_rem(a, b, v, da - db)
}

/// Exact pseudo-remainder lc(b)^(delta+1) a mod b with respect to v,
/// where delta = deg_v(a) - deg_v(b) >= 0.
fn pseudo_rem(a: &QHPoly, b: &QHPoly, v: usize, delta: u32) -> QHPoly {
    let n = b.degree_in(v).expect("nonzero divisor");
    let lb = b.coeffs_in(v)[n as usize].clone();
    let mut r = a.clone();
    let mut count = 0u32;
    loop {
        let Some(m) = r.degree_in(v) else { break };
        if m < n {
            break;
        }
        let lr = r.coeffs_in(v)[m as usize].clone();
        let mut shift = [0u32; 3];
        shift[v] = m - n;
        let scaled = &r * &lb;
        let sub = &b.mul_mono(&GaussRat::one(), &shift) * &lr;
        r = &scaled - &sub;
        count += 1;
        debug_assert!(r.degree_in(v).map_or(true, |d| d < m));
    }
    // pad so the total multiplier is exactly lc(b)^(delta+1)
    debug_assert!(count <= delta + 1);
    for _ in count..delta + 1 {
        r = &r * &lb;
    }
    r
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<QHPoly> for QHPoly {
            type Output = QHPoly;
            fn $method(self, rhs: QHPoly) -> QHPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a QHPoly> for QHPoly {
            type Output = QHPoly;
            fn $method(self, rhs: &'a QHPoly) -> QHPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<QHPoly> for &'a QHPoly {
            type Output = QHPoly;
            fn $method(self, rhs: QHPoly) -> QHPoly {
                self.$method(&rhs)
            }
        }
    };
}

impl<'a, 'b> Add<&'b QHPoly> for &'a QHPoly {
    type Output = QHPoly;
    fn add(self, rhs: &'b QHPoly) -> QHPoly {
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(*e, c.clone());
        }
        p
    }
}
forward_poly_binop!(Add, add);

impl<'a, 'b> Sub<&'b QHPoly> for &'a QHPoly {
    type Output = QHPoly;
    fn sub(self, rhs: &'b QHPoly) -> QHPoly {
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(*e, -c);
        }
        p
    }
}
forward_poly_binop!(Sub, sub);

impl<'a, 'b> Mul<&'b QHPoly> for &'a QHPoly {
    type Output = QHPoly;
    fn mul(self, rhs: &'b QHPoly) -> QHPoly {
        let mut p = QHPoly::zero();
        for (e, a) in &self.terms {
            for (f, b) in &rhs.terms {
                p.add_term([e[0] + f[0], e[1] + f[1], e[2] + f[2]], a * b);
            }
        }
        p
    }
}
forward_poly_binop!(Mul, mul);

impl Neg for &QHPoly {
    type Output = QHPoly;
    fn neg(self) -> QHPoly {
        QHPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for QHPoly {
    type Output = QHPoly;
    fn neg(self) -> QHPoly {
        -&self
    }
}

impl fmt::Display for QHPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for QHPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(v: usize) -> QHPoly {
        QHPoly::var(v)
    }

    fn c(n: i64) -> QHPoly {
        QHPoly::from_int(n)
    }

    #[test]
    fn ring_basics() {
        let p = &x(0) + &x(1); // x0 + x1
        let q = &x(0) - &x(1);
        let prod = &p * &q;
        let expect = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        assert_eq!(prod, expect);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn derivative_and_eval() {
        // p = 3 x0^2 x1 + x2
        let p = &(&c(3) * &(&x(0).pow(2) * &x(1))) + &x(2);
        assert_eq!(p.derivative(0), &c(6) * &(&x(0) * &x(1)));
        assert_eq!(p.derivative(2), c(1));
        let pt = [GaussRat::from_int(2), GaussRat::from_int(-1), GaussRat::from_int(5)];
        assert_eq!(p.eval(&pt), GaussRat::from_int(-7));
    }

    #[test]
    fn weighted_degrees() {
        // weights (1, 1, 2): x0^3 and x0 x2 both have degree 3
        let w = [1i64, 1, 2];
        let p = &x(0).pow(3) + &(&x(0) * &x(2));
        assert_eq!(p.quasi_degree(&w), Some(3));
        let q = &p + &x(1);
        assert_eq!(q.quasi_degree(&w), None);
        assert_eq!(q.weighted_degree(&w), Some(3));
        assert_eq!(q.weighted_min_degree(&w), Some(1));
        let s = q.slices(&w);
        assert_eq!(s.len(), 2);
        assert_eq!(s[&1], x(1));
        assert_eq!(s[&3], p);
    }

    #[test]
    fn exact_division() {
        let f = &x(0) + &x(1);
        let g = &(&x(0) * &x(0)) + &(&c(2) * &(&x(0) * &x(1)));
        let prod = &f * &g;
        assert_eq!(prod.div_exact(&f), Some(g.clone()));
        assert_eq!(prod.div_exact(&g), Some(f.clone()));
        let h = &x(0) + &x(2);
        assert_eq!(prod.div_exact(&h), None);
    }

    #[test]
    fn gcd_univariate() {
        // (x0 - 1)(x0 - 2) and (x0 - 1)(x0 + 3) share x0 - 1
        let a = &(&x(0) - &c(1)) * &(&x(0) - &c(2));
        let b = &(&x(0) - &c(1)) * &(&x(0) + &c(3));
        assert_eq!(a.gcd(&b), &x(0) - &c(1));
    }

    #[test]
    fn gcd_multivariate() {
        let h = &(&x(0) * &x(1)) + &x(2);
        let a = &h * &(&x(0) + &c(1));
        let b = &h * &(&x(1).pow(2) + &x(0));
        assert_eq!(a.gcd(&b), h.monic());
        // coprime pair
        let p = &x(0) + &x(1);
        let q = &x(0) - &x(1);
        assert_eq!(p.gcd(&q), QHPoly::one());
    }

    #[test]
    fn gcd_three_way() {
        let h = &x(0) - &x(2);
        let list = [&h * &x(1), &h * &x(0), &h * &(&x(1) + &c(1))];
        assert_eq!(QHPoly::gcd_many(list.iter()), h.monic());
    }

    #[test]
    fn substitution() {
        // p = x0^2 + x1, substitute x1 -> x0^3
        let p = &x(0).pow(2) + &x(1);
        let q = p.subst(1, &x(0).pow(3));
        assert_eq!(q, &x(0).pow(2) + &x(0).pow(3));
        let r = p.set_var(0, &GaussRat::from_int(2));
        assert_eq!(r, &c(4) + &x(1));
        assert_eq!(p.subst_powers(&[2, 1, 1]), &x(0).pow(4) + &x(1));
    }

    #[test]
    fn display_shapes() {
        let p = &(&c(-1) * &x(0).pow(2)) + &(&c(3) * &(&x(1) * &x(2).pow(4)));
        assert_eq!(p.to_text(), "-x0^2 + 3*x1*x2^4");
        let q = &x(0) - &QHPoly::mono(GaussRat::i(), [0, 1, 0]);
        assert_eq!(q.to_text(), "x0 - i*x1");
        assert_eq!(QHPoly::zero().to_text(), "0");
        let m = QHPoly::mono(GaussRat::from_parts(1, 1), [1, 0, 0]);
        assert_eq!(m.to_text(), "(1+i)*x0");
    }

    fn arb_poly() -> impl Strategy<Value = QHPoly> {
        proptest::collection::vec(
            ((0u32..4, 0u32..4, 0u32..3), -6i64..7),
            0..6,
        )
        .prop_map(|terms| {
            QHPoly::from_terms(
                terms
                    .into_iter()
                    .map(|((a, b, z), n)| ([a, b, z], GaussRat::from_int(n))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn prop_product_divides(f in arb_poly(), g in arb_poly()) {
            prop_assume!(!f.is_zero());
            let prod = &f * &g;
            prop_assert_eq!(prod.div_exact(&f), Some(g));
        }

        #[test]
        fn prop_gcd_common_factor(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assume!(!h.is_zero() && !h.is_constant());
            prop_assume!(!f.is_zero() || !g.is_zero());
            let a = &f * &h;
            let b = &g * &h;
            let d = a.gcd(&b);
            prop_assert!(h.divides(&d));
        }

        #[test]
        fn prop_gcd_divides_both(f in arb_poly(), g in arb_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let d = f.gcd(&g);
            prop_assert!(d.divides(&f));
            prop_assert!(d.divides(&g));
        }
    }
}
