use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Field;
use crate::superspace::Parity;

/// `x^a θ_S` with `S` a bitmask over the odd coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub x: Vec<u32>,
    pub theta: u64,
}

impl Monomial {
    pub fn one(m: usize) -> Self {
        Monomial { x: vec![0; m], theta: 0 }
    }

    pub fn degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit(self.theta.count_ones() as u8 % 2)
    }
}

/// Sign of `θ_A θ_B = ± θ_{A∪B}` for disjoint sorted sets.
pub fn theta_sign(a: u64, b: u64) -> i64 {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> j).count_ones() - ((a >> j) & 1) as u32;
        rest &= rest - 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Polynomial superfunction on `ℝ^{m|n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperPolynomial<F> {
    m: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> SuperPolynomial<F> {
    pub fn zero(m: usize) -> Self {
        SuperPolynomial {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(m: usize, c: F) -> Self {
        let mut p = Self::zero(m);
        p.add_term(Monomial::one(m), c);
        p
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, F::one())
    }

    pub fn even_var(m: usize, i: usize) -> Self {
        let mut mono = Monomial::one(m);
        mono.x[i] = 1;
        let mut p = Self::zero(m);
        p.add_term(mono, F::one());
        p
    }

    pub fn odd_var(m: usize, a: usize) -> Self {
        let mut mono = Monomial::one(m);
        mono.theta = 1 << a;
        let mut p = Self::zero(m);
        p.add_term(mono, F::one());
        p
    }

    pub fn from_terms(m: usize, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(m);
        for (mono, c) in terms {
            p.add_term(mono, c);
        }
        p
    }

    pub fn even_count(&self) -> usize {
        self.m
    }

    pub fn add_term(&mut self, mono: Monomial, c: F) {
        debug_assert_eq!(mono.x.len(), self.m);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(p)` when every monomial has parity `p` (zero counts as even).
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        match it.next() {
            None => Some(Parity::Even),
            Some(p) => it.all(|q| q == p).then_some(p),
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.m);
        }
        SuperPolynomial {
            m: self.m,
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x.clone() * c.clone())).collect(),
        }
    }

    /// The scalar if this is a constant.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => {
                let (k, x) = self.terms.iter().next().unwrap();
                (k.theta == 0 && k.degree() == 0).then(|| x.clone())
            }
            _ => None,
        }
    }

    pub fn diff_even(&self, i: usize) -> Self {
        let mut out = Self::zero(self.m);
        for (k, c) in &self.terms {
            if k.x[i] == 0 {
                continue;
            }
            let mut mono = k.clone();
            mono.x[i] -= 1;
            out.add_term(mono, c.clone() * F::from_i64(k.x[i] as i64));
        }
        out
    }

    /// Left derivative `∂/∂θ_a`.
    pub fn diff_odd(&self, a: usize) -> Self {
        let bit = 1u64 << a;
        let mut out = Self::zero(self.m);
        for (k, c) in &self.terms {
            if k.theta & bit == 0 {
                continue;
            }
            let below = (k.theta & (bit - 1)).count_ones();
            let mut mono = k.clone();
            mono.theta &= !bit;
            let c = if below.is_multiple_of(2) { c.clone() } else { -c.clone() };
            out.add_term(mono, c);
        }
        out
    }

    /// Body at a point: `θ = 0`, `x = point`.
    pub fn eval_body(&self, point: &[F]) -> F {
        let mut acc = F::zero();
        for (k, c) in &self.terms {
            if k.theta != 0 {
                continue;
            }
            let mut t = c.clone();
            for (xi, &e) in point.iter().zip(&k.x) {
                for _ in 0..e {
                    t = t * xi.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }
}

impl<F: Field> Add for &SuperPolynomial<F> {
    type Output = SuperPolynomial<F>;
    fn add(self, rhs: Self) -> SuperPolynomial<F> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &SuperPolynomial<F> {
    type Output = SuperPolynomial<F>;
    fn sub(self, rhs: Self) -> SuperPolynomial<F> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }
}

impl<F: Field> Neg for &SuperPolynomial<F> {
    type Output = SuperPolynomial<F>;
    fn neg(self) -> SuperPolynomial<F> {
        self.scale(&-F::one())
    }
}

impl<F: Field> Mul for &SuperPolynomial<F> {
    type Output = SuperPolynomial<F>;
    fn mul(self, rhs: Self) -> SuperPolynomial<F> {
        let mut out = SuperPolynomial::zero(self.m);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                if a.theta & b.theta != 0 {
                    continue;
                }
                let mono = Monomial {
                    x: a.x.iter().zip(&b.x).map(|(i, j)| i + j).collect(),
                    theta: a.theta | b.theta,
                };
                let c = x.clone() * y.clone();
                out.add_term(mono, if theta_sign(a.theta, b.theta) == 1 { c } else { -c });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type P = SuperPolynomial<Rational>;

    #[test]
    fn odd_variables_anticommute() {
        let t0 = P::odd_var(1, 0);
        let t1 = P::odd_var(1, 1);
        assert_eq!(&(&t0 * &t1) + &(&t1 * &t0), P::zero(1));
        assert!((&t0 * &t0).is_zero());
        assert_eq!((&t0 * &t1).parity(), Some(Parity::Even));
    }

    #[test]
    fn left_derivative_signs() {
        let t0 = P::odd_var(0, 0);
        let t1 = P::odd_var(0, 1);
        let t01 = &t0 * &t1;
        assert_eq!(t01.diff_odd(0), t1);
        assert_eq!(t01.diff_odd(1), -&t0);
    }

    #[test]
    fn leibniz_rule() {
        let x = P::even_var(1, 0);
        let t0 = P::odd_var(1, 0);
        let t1 = P::odd_var(1, 1);
        let f = &(&x * &t0) + &P::one(1);
        let g = &(&x * &x) * &t1;
        // ∂_θ0(fg) = (∂_θ0 f) g + (-1)^{|f|} f ∂_θ0 g for homogeneous f; here f mixed, split by hand
        let fo = &x * &t0;
        let lhs = (&fo * &g).diff_odd(0);
        let rhs = &(&fo.diff_odd(0) * &g) - &(&fo * &g.diff_odd(0));
        assert_eq!(lhs, rhs);
        assert_eq!((&f * &g).diff_even(0), &(&f.diff_even(0) * &g) + &(&f * &g.diff_even(0)));
    }

    #[test]
    fn sign_table() {
        assert_eq!(theta_sign(0b01, 0b10), 1);
        assert_eq!(theta_sign(0b10, 0b01), -1);
        assert_eq!(theta_sign(0b110, 0b001), 1);
        assert_eq!(theta_sign(0b100, 0b011), 1);
        assert_eq!(theta_sign(0b010, 0b101), -1);
    }

    #[test]
    fn body_evaluation_ignores_nilpotents() {
        let x = P::even_var(1, 0);
        let t = P::odd_var(1, 0);
        let f = &(&(&x * &x) + &t) + &P::constant(1, Rational::from_i64(3));
        assert_eq!(f.eval_body(&[Rational::from_i64(2)]), Rational::from_i64(7));
        assert_eq!(f.parity(), None);
    }
}
