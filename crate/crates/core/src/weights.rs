//! Weight vectors for weighted projective planes P(l0, l1, l2).

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Weights (l0, l1, l2) with 1 <= l0 <= l1 <= l2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    pub l: [u32; 3],
}

impl WeightVector {
    pub fn new(l0: u32, l1: u32, l2: u32) -> Self {
        assert!(1 <= l0 && l0 <= l1 && l1 <= l2, "weights must satisfy 1 <= l0 <= l1 <= l2");
        WeightVector { l: [l0, l1, l2] }
    }

    pub fn std() -> Self {
        WeightVector::new(1, 1, 1)
    }

    pub fn total(&self) -> i64 {
        self.l.iter().map(|&x| x as i64).sum()
    }

    pub fn is_pairwise_coprime(&self) -> bool {
        self.l[0].gcd(&self.l[1]) == 1 && self.l[0].gcd(&self.l[2]) == 1 && self.l[1].gcd(&self.l[2]) == 1
    }

    /// Indices != i, in increasing order.
    pub fn others(i: usize) -> (usize, usize) {
        match i {
            0 => (1, 2),
            1 => (0, 2),
            2 => (0, 1),
            _ => panic!("chart index out of range"),
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.l[0], self.l[1], self.l[2])
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Isomorphism data carrying P(l) to the pairwise-coprime model P(l').
///
/// The coordinate substitution [x0:x1:x2] -> [x0^d0 : x1^d1 : x2^d2]
/// (exponents `subst_exps`) is an isomorphism onto P(l'), and degrees
/// rescale uniformly: d_i * l_i = scale * l_i', so a quasi-homogeneous
/// object of degree n on the reduced side corresponds to degree
/// scale * n on the original side.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WeightReduction {
    pub reduced: WeightVector,
    /// Exponents (d0, d1, d2) of the coordinate substitution.
    pub subst_exps: [u32; 3],
    /// Divisors (a0, a1, a2) with l_i' = l_i / a_i.
    pub divisors: [u32; 3],
    /// Uniform degree scale, lcm(a0, a1, a2).
    pub scale: u32,
}

/// Reduce weights to a well-formed (pairwise coprime) triple.
///
/// With d_i = gcd of the other two weights and a_i = lcm of the two
/// d_j with j != i, the reduced weights are l_i' = l_i / a_i
/// (guaranteed integral). The substitution exponent on x_i is d_i / g
/// where g = gcd(l0, l1, l2): dividing out the overall gcd first keeps
/// the coordinate map injective (a common factor of all three weights
/// rescales the torus action without moving points).
pub fn reduce_weights(w: &WeightVector) -> WeightReduction {
    let [l0, l1, l2] = w.l;
    let d0 = l1.gcd(&l2);
    let d1 = l0.gcd(&l2);
    let d2 = l0.gcd(&l1);
    let g = d0.gcd(&d1);
    let a0 = d1.lcm(&d2);
    let a1 = d0.lcm(&d2);
    let a2 = d0.lcm(&d1);
    assert!(l0 % a0 == 0 && l1 % a1 == 0 && l2 % a2 == 0);
    let r = [l0 / a0, l1 / a1, l2 / a2];
    let scale = a0.lcm(&a1).lcm(&a2);
    let reduced = WeightVector { l: r };
    assert!(reduced.is_pairwise_coprime(), "reduction must yield pairwise coprime weights");
    let subst_exps = [d0 / g, d1 / g, d2 / g];
    for i in 0..3 {
        debug_assert_eq!(u64::from(subst_exps[i]) * u64::from(w.l[i]), u64::from(scale) * u64::from(r[i]));
    }
    WeightReduction { reduced, subst_exps, divisors: [a0, a1, a2], scale }
}
