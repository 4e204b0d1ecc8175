//! Jets `J^r(ℝ^{p|0}, ℝ^{0|1})`: even `x^i`, odd `ξ_I` for multi-indices
//! `|I| ≤ r`. Coefficient functions are quasi-polynomials `x^a e^{λ·x}`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::{self, Context};
use crate::superfield::poly::theta_sign;
use crate::superfield::vector::{join_terms, signed_term};
use crate::superspace::Parity;

pub type Q = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JetMonomial {
    pub lambda: Vec<Q>,
    pub x: Vec<u32>,
    pub odd: u64,
}

impl JetMonomial {
    pub fn parity(&self) -> Parity {
        Parity::from_bit(self.odd.count_ones() as u8 % 2)
    }
}

/// Coordinates of `J^r` with `p` independent variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetAlgebra {
    p: usize,
    r: usize,
    odd: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

fn multisets(p: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for prev in multisets(p, k - 1) {
        let start = prev.last().copied().unwrap_or(0);
        for i in start..p {
            let mut v = prev.clone();
            v.push(i);
            out.push(v);
        }
    }
    out
}

impl JetAlgebra {
    pub fn new(p: usize, r: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidParameter("need at least one independent variable".into()));
        }
        let odd: Vec<Vec<usize>> = (0..=r).flat_map(|k| multisets(p, k)).collect();
        if odd.len() > 64 {
            return Err(Error::InvalidParameter("jet order too large".into()));
        }
        let index = odd.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        Ok(JetAlgebra { p, r, odd, index })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn order(&self) -> usize {
        self.r
    }

    pub fn odd_count(&self) -> usize {
        self.odd.len()
    }

    /// Index of `ξ_I` (`I` in any order).
    pub fn odd_index(&self, multi: &[usize]) -> Option<usize> {
        let mut key = multi.to_vec();
        key.sort_unstable();
        self.index.get(&key).copied()
    }

    pub fn multi_index(&self, k: usize) -> &[usize] {
        &self.odd[k]
    }

    /// Index of `ξ^{(k)}` when `p = 1`.
    pub fn xi(&self, k: usize) -> usize {
        self.odd_index(&vec![0; k]).expect("order within the jet algebra")
    }

    pub fn x_name(&self, i: usize) -> String {
        if self.p == 1 {
            "x".into()
        } else {
            format!("x{}", i + 1)
        }
    }

    pub fn odd_name(&self, k: usize) -> String {
        let multi = &self.odd[k];
        if self.p == 1 {
            let primes = match multi.len() {
                0 => String::new(),
                1 => "′".into(),
                2 => "″".into(),
                3 => "‴".into(),
                n => "′".repeat(n),
            };
            format!("ξ{primes}")
        } else if multi.is_empty() {
            "ξ".into()
        } else {
            let digits: String = multi.iter().map(|i| (i + 1).to_string()).collect();
            format!("ξ_{digits}")
        }
    }

    fn parse_odd_name(&self, name: &str) -> Option<usize> {
        if self.p == 1 {
            if let Some(rest) = name.strip_prefix("xi") {
                let k = if rest.is_empty() { 0 } else { rest.parse().ok()? };
                return self.odd_index(&vec![0; k]);
            }
            let rest = name.strip_prefix('ξ')?;
            let mut k = 0;
            for c in rest.chars() {
                k += match c {
                    '\'' | '′' => 1,
                    '″' => 2,
                    '‴' => 3,
                    _ => return None,
                };
            }
            return self.odd_index(&vec![0; k]);
        }
        let rest = name.strip_prefix("ξ_").or_else(|| name.strip_prefix("xi_"));
        match rest {
            None if name == "ξ" || name == "xi" => self.odd_index(&[]),
            None => None,
            Some(d) => {
                let multi: Option<Vec<usize>> = d
                    .chars()
                    .map(|c| c.to_digit(10).and_then(|v| (v as usize).checked_sub(1)).filter(|&v| v < self.p))
                    .collect();
                self.odd_index(&multi?)
            }
        }
    }

    fn parse_x_name(&self, name: &str) -> Option<usize> {
        if self.p == 1 {
            return (name == "x").then_some(0);
        }
        let i: usize = name.strip_prefix('x')?.parse().ok()?;
        (1..=self.p).contains(&i).then(|| i - 1)
    }

    pub fn zero(&self) -> JetFn {
        JetFn::default()
    }

    pub fn constant(&self, c: Q) -> JetFn {
        let mut f = JetFn::default();
        f.add_term(self.unit_mono(), c);
        f
    }

    pub fn one(&self) -> JetFn {
        self.constant(Q::one())
    }

    fn unit_mono(&self) -> JetMonomial {
        JetMonomial {
            lambda: vec![Q::zero(); self.p],
            x: vec![0; self.p],
            odd: 0,
        }
    }

    pub fn x(&self, i: usize) -> JetFn {
        let mut m = self.unit_mono();
        m.x[i] = 1;
        JetFn::from_terms([(m, Q::one())])
    }

    pub fn odd_var(&self, k: usize) -> JetFn {
        let mut m = self.unit_mono();
        m.odd = 1 << k;
        JetFn::from_terms([(m, Q::one())])
    }

    /// `e^{λ·x}`.
    pub fn exp(&self, lambda: Vec<Q>) -> JetFn {
        let mut m = self.unit_mono();
        m.lambda = lambda;
        JetFn::from_terms([(m, Q::one())])
    }

    pub fn diff_x(&self, f: &JetFn, i: usize) -> JetFn {
        let mut out = JetFn::default();
        for (m, c) in &f.terms {
            if !m.lambda[i].is_zero() {
                out.add_term(m.clone(), c.clone() * m.lambda[i].clone());
            }
            if m.x[i] > 0 {
                let mut d = m.clone();
                d.x[i] -= 1;
                out.add_term(d, c.clone() * Q::from_integer(m.x[i].into()));
            }
        }
        out
    }

    /// Left derivative `∂/∂ξ_k`.
    pub fn diff_odd(&self, f: &JetFn, k: usize) -> JetFn {
        let bit = 1u64 << k;
        let mut out = JetFn::default();
        for (m, c) in &f.terms {
            if m.odd & bit == 0 {
                continue;
            }
            let below = (m.odd & (bit - 1)).count_ones();
            let mut d = m.clone();
            d.odd &= !bit;
            out.add_term(d, if below.is_multiple_of(2) { c.clone() } else { -c.clone() });
        }
        out
    }

    pub fn mul(&self, f: &JetFn, g: &JetFn) -> JetFn {
        let mut out = JetFn::default();
        for (a, x) in &f.terms {
            for (b, y) in &g.terms {
                if a.odd & b.odd != 0 {
                    continue;
                }
                let m = JetMonomial {
                    lambda: a.lambda.iter().zip(&b.lambda).map(|(s, t)| s + t).collect(),
                    x: a.x.iter().zip(&b.x).map(|(s, t)| s + t).collect(),
                    odd: a.odd | b.odd,
                };
                let c = x.clone() * y.clone();
                out.add_term(m, if theta_sign(a.odd, b.odd) == 1 { c } else { -c });
            }
        }
        out
    }

    /// Truncated total derivative `D^{(s)}_{x^i} = ∂_{x^i} + Σ_{|I|<s} ξ_{Ii} ∂_{ξ_I}`.
    pub fn total_derivative(&self, f: &JetFn, i: usize, s: usize) -> JetFn {
        let mut out = self.diff_x(f, i);
        for (k, multi) in self.odd.iter().enumerate() {
            if multi.len() >= s.min(self.r) {
                continue;
            }
            let d = self.diff_odd(f, k);
            if d.is_zero() {
                continue;
            }
            let mut up = multi.clone();
            up.push(i);
            let target = self.odd_index(&up).expect("within order");
            out = out.add(&self.mul(&self.odd_var(target), &d));
        }
        out
    }

    /// Replaces the odd coordinate `k` by the odd function `g`.
    pub fn substitute(&self, f: &JetFn, k: usize, g: &JetFn) -> JetFn {
        let bit = 1u64 << k;
        let mut out = JetFn::default();
        for (m, c) in &f.terms {
            let mono = JetFn::from_terms([(m.clone(), c.clone())]);
            if m.odd & bit == 0 {
                out = out.add(&mono);
            } else {
                // f = ξ_k · ∂_{ξ_k} f for this monomial
                out = out.add(&self.mul(g, &self.diff_odd(&mono, k)));
            }
        }
        out
    }

    pub fn format(&self, f: &JetFn) -> String {
        let parts = f
            .terms
            .iter()
            .map(|(m, c)| {
                let mut factors = Vec::new();
                for i in 0..self.p {
                    let name = self.x_name(i);
                    match m.x[i] {
                        0 => {}
                        1 => factors.push(name),
                        e => factors.push(format!("{name}^{e}")),
                    }
                }
                let lin: Vec<(bool, String)> = (0..self.p)
                    .filter(|&i| !m.lambda[i].is_zero())
                    .map(|i| signed_term(&m.lambda[i], vec![self.x_name(i)]))
                    .collect();
                if !lin.is_empty() {
                    factors.push(format!("exp({})", join_terms(lin)));
                }
                for k in 0..self.odd.len() {
                    if m.odd >> k & 1 == 1 {
                        factors.push(self.odd_name(k));
                    }
                }
                signed_term(c, factors)
            })
            .collect();
        join_terms(parts)
    }

    pub fn parse(&self, s: &str) -> Result<JetFn> {
        match self.parse_value(s)? {
            JetVal::Fun(f) => Ok(f),
            JetVal::Field(_) => Err(Error::Parse(format!("{s:?}: expected a function"))),
        }
    }

    /// Vector field on this jet space; `∂x`, `∂ξ′`, `∂xi2`, … as directions.
    pub fn parse_field(&self, s: &str) -> Result<JetField> {
        match self.parse_value(s)? {
            JetVal::Field(coeffs) => {
                let f = JetField { coeffs, parity: Parity::Even };
                let parity = f.infer_parity(self).ok_or_else(|| Error::Parse(format!("{s:?}: not parity-homogeneous")))?;
                Ok(JetField { parity, ..f })
            }
            JetVal::Fun(_) => Err(Error::Parse(format!("{s:?}: expected a vector field"))),
        }
    }

    fn parse_value(&self, s: &str) -> Result<JetVal> {
        let e = expr::parse(s).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        expr::eval(self, &e).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }

    /// Direction index in a [`JetField`]: `x^i` first, then the odd coordinates.
    pub fn direction_count(&self) -> usize {
        self.p + self.odd.len()
    }

    fn direction(&self, name: &str) -> Option<usize> {
        self.parse_x_name(name)
            .or_else(|| self.parse_odd_name(name).map(|k| k + self.p))
    }

    pub fn direction_name(&self, j: usize) -> String {
        if j < self.p {
            self.x_name(j)
        } else {
            self.odd_name(j - self.p)
        }
    }

    pub fn direction_parity(&self, j: usize) -> Parity {
        if j < self.p {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Re-embeds an element into a jet algebra with the same `p`.
    pub fn embed(&self, f: &JetFn, into: &JetAlgebra) -> Result<JetFn> {
        let mut out = JetFn::default();
        for (m, c) in &f.terms {
            let mut odd = 0u64;
            for k in 0..self.odd.len() {
                if m.odd >> k & 1 == 1 {
                    let t = into
                        .odd_index(&self.odd[k])
                        .ok_or_else(|| Error::InvalidParameter("jet order too small".into()))?;
                    odd |= 1 << t;
                }
            }
            // keep the product order: re-sort with sign
            let mut sign = 1i64;
            let mut acc = 0u64;
            for k in 0..self.odd.len() {
                if m.odd >> k & 1 == 1 {
                    let t = into.odd_index(&self.odd[k]).unwrap();
                    sign *= theta_sign(acc, 1 << t);
                    acc |= 1 << t;
                }
            }
            debug_assert_eq!(acc, odd);
            let mono = JetMonomial {
                lambda: m.lambda.clone(),
                x: m.x.clone(),
                odd,
            };
            out.add_term(mono, if sign == 1 { c.clone() } else { -c.clone() });
        }
        Ok(out)
    }
}

/// Element of a jet algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JetFn {
    pub terms: BTreeMap<JetMonomial, Q>,
}

impl JetFn {
    pub fn from_terms(terms: impl IntoIterator<Item = (JetMonomial, Q)>) -> Self {
        let mut f = JetFn::default();
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    }

    pub fn add_term(&mut self, m: JetMonomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, g: &JetFn) -> JetFn {
        let mut out = self.clone();
        for (m, c) in &g.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, g: &JetFn) -> JetFn {
        self.add(&g.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> JetFn {
        if c.is_zero() {
            return JetFn::default();
        }
        JetFn {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(JetMonomial::parity);
        match it.next() {
            None => Some(Parity::Even),
            Some(p) => it.all(|q| q == p).then_some(p),
        }
    }
}

/// Vector field on a jet space: coefficient per `∂_{x^i}`, then per `∂_{ξ_I}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetField {
    pub coeffs: Vec<JetFn>,
    pub parity: Parity,
}

impl JetField {
    pub fn zero(alg: &JetAlgebra, parity: Parity) -> Self {
        JetField {
            coeffs: vec![JetFn::default(); alg.direction_count()],
            parity,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(JetFn::is_zero)
    }

    pub fn apply(&self, alg: &JetAlgebra, f: &JetFn) -> JetFn {
        let mut out = JetFn::default();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = if j < alg.p() { alg.diff_x(f, j) } else { alg.diff_odd(f, j - alg.p()) };
            out = out.add(&alg.mul(c, &d));
        }
        out
    }

    pub fn bracket(&self, alg: &JetAlgebra, other: &JetField) -> JetField {
        let s = Q::from_integer(self.parity.sign_with(other.parity).into());
        JetField {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| self.apply(alg, b).sub(&other.apply(alg, a).scale(&s)))
                .collect(),
            parity: self.parity + other.parity,
        }
    }

    fn infer_parity(&self, alg: &JetAlgebra) -> Option<Parity> {
        let mut parity = None;
        for (j, c) in self.coeffs.iter().enumerate() {
            for m in c.terms.keys() {
                let p = m.parity() + alg.direction_parity(j);
                match parity {
                    None => parity = Some(p),
                    Some(q) if q != p => return None,
                    _ => {}
                }
            }
        }
        Some(parity.unwrap_or(Parity::Even))
    }

    pub fn format(&self, alg: &JetAlgebra) -> String {
        let mut parts = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = format!("∂{}", alg.direction_name(j));
            let body = alg.format(c);
            if c.terms.len() == 1 {
                let (neg, t) = (body.starts_with('-'), body.trim_start_matches('-').to_string());
                let t = if t == "1" { d } else { format!("{t}·{d}") };
                parts.push((neg, t));
            } else {
                parts.push((false, format!("({body})·{d}")));
            }
        }
        join_terms(parts)
    }
}

#[derive(Clone)]
pub enum JetVal {
    Fun(JetFn),
    Field(Vec<JetFn>),
}

impl Context for JetAlgebra {
    type Value = JetVal;

    fn number(&self, q: &BigRational) -> std::result::Result<JetVal, String> {
        Ok(JetVal::Fun(self.constant(q.clone())))
    }

    fn var(&self, name: &str) -> std::result::Result<JetVal, String> {
        if let Some(i) = self.parse_x_name(name) {
            return Ok(JetVal::Fun(self.x(i)));
        }
        if let Some(k) = self.parse_odd_name(name) {
            return Ok(JetVal::Fun(self.odd_var(k)));
        }
        Err(format!("unknown jet coordinate {name}"))
    }

    fn partial(&self, name: &str) -> std::result::Result<JetVal, String> {
        let j = self.direction(name).ok_or_else(|| format!("unknown coordinate ∂{name}"))?;
        let mut v = vec![JetFn::default(); self.direction_count()];
        v[j] = self.one();
        Ok(JetVal::Field(v))
    }

    fn call(&self, name: &str, arg: JetVal) -> std::result::Result<JetVal, String> {
        if name != "exp" {
            return Err(format!("unknown function {name}"));
        }
        let JetVal::Fun(arg) = arg else {
            return Err("exp of a vector field".into());
        };
        // only exp(λ·x)
        let mut lambda = vec![Q::zero(); self.p];
        for (m, c) in &arg.terms {
            let lin = m.odd == 0 && m.lambda.iter().all(Zero::is_zero) && m.x.iter().sum::<u32>() == 1;
            if !lin {
                return Err("exp takes a linear form in the x variables".into());
            }
            let i = m.x.iter().position(|&e| e == 1).unwrap();
            lambda[i] = c.clone();
        }
        Ok(JetVal::Fun(self.exp(lambda)))
    }

    fn add(&self, a: JetVal, b: JetVal) -> std::result::Result<JetVal, String> {
        match (a, b) {
            (JetVal::Fun(a), JetVal::Fun(b)) => Ok(JetVal::Fun(a.add(&b))),
            (JetVal::Field(a), JetVal::Field(b)) => Ok(JetVal::Field(a.iter().zip(&b).map(|(x, y)| x.add(y)).collect())),
            _ => Err("cannot add a function and a vector field".into()),
        }
    }

    fn mul(&self, a: JetVal, b: JetVal) -> std::result::Result<JetVal, String> {
        match (a, b) {
            (JetVal::Fun(a), JetVal::Fun(b)) => Ok(JetVal::Fun(JetAlgebra::mul(self, &a, &b))),
            (JetVal::Fun(a), JetVal::Field(b)) => Ok(JetVal::Field(b.iter().map(|y| JetAlgebra::mul(self, &a, y)).collect())),
            (JetVal::Field(_), _) => Err("a vector field must be the last factor".into()),
        }
    }

    fn neg(&self, a: JetVal) -> JetVal {
        match a {
            JetVal::Fun(f) => JetVal::Fun(f.scale(&-Q::one())),
            JetVal::Field(v) => JetVal::Field(v.iter().map(|f| f.scale(&-Q::one())).collect()),
        }
    }

    fn one(&self) -> JetVal {
        JetVal::Fun(JetAlgebra::one(self))
    }
}

/// `S_f = (-1)^{|f|}(∂_{ξ_i} f) D^{(1)}_{x^i} + f ∂_ξ + (D^{(1)}_{x^i} f) ∂_{ξ_i}`
/// on `J¹`; `f` must live on `J¹`.
pub fn contact_vf(alg: &JetAlgebra, f: &JetFn) -> Result<JetField> {
    prolong_field(alg, f, 1)
}

/// `S_f` prolonged to `J^r`: the coefficient of `∂_{ξ_I}` with `|I| = s ≥ 2` is
/// `D^{(s)}_{i_1} ⋯ D^{(s)}_{i_s} f`.
pub fn prolong_field(alg: &JetAlgebra, f: &JetFn, r: usize) -> Result<JetField> {
    let parity = f
        .parity()
        .ok_or_else(|| Error::InvalidParameter("generating function must be parity-homogeneous".into()))?;
    if r == 0 || r > alg.order() {
        return Err(Error::InvalidParameter(format!("prolongation order {r} outside 1..={}", alg.order())));
    }
    for m in f.terms.keys() {
        for k in 0..alg.odd_count() {
            if m.odd >> k & 1 == 1 && alg.multi_index(k).len() > 1 {
                return Err(Error::InvalidParameter("generating function must depend on J¹ only".into()));
            }
        }
    }
    let p = alg.p();
    let sign = Q::from_integer(parity.sign_with(Parity::Odd).into());
    let mut field = JetField::zero(alg, parity + Parity::Odd);
    let xi = alg.odd_index(&[]).unwrap();
    field.coeffs[p + xi] = f.clone();
    for i in 0..p {
        let xi_i = alg.odd_index(&[i]).unwrap();
        let a = alg.diff_odd(f, xi_i).scale(&sign);
        // (-1)^{|f|} (∂_{ξ_i} f)(∂_{x^i} + ξ_i ∂_ξ)
        field.coeffs[i] = field.coeffs[i].add(&a);
        field.coeffs[p + xi] = field.coeffs[p + xi].add(&alg.mul(&a, &alg.odd_var(xi_i)));
        field.coeffs[p + xi_i] = alg.total_derivative(f, i, 1);
    }
    for k in 0..alg.odd_count() {
        let multi = alg.multi_index(k).to_vec();
        let s = multi.len();
        if s < 2 || s > r {
            continue;
        }
        let mut h = f.clone();
        for &i in multi.iter().rev() {
            h = alg.total_derivative(&h, i, s);
        }
        field.coeffs[p + k] = h;
    }
    Ok(field)
}

/// `[f,g] = f(∂_ξ g) + (-1)^{|f|}(∂_ξ f)g + (D_j f)(∂_{ξ_j} g) + (-1)^{|f|}(∂_{ξ_j} f)(D_j g)`.
pub fn lagrange_bracket(alg: &JetAlgebra, f: &JetFn, g: &JetFn) -> Result<JetFn> {
    let pf = f
        .parity()
        .ok_or_else(|| Error::InvalidParameter("generating function must be parity-homogeneous".into()))?;
    g.parity()
        .ok_or_else(|| Error::InvalidParameter("generating function must be parity-homogeneous".into()))?;
    let sign = Q::from_integer(pf.sign_with(Parity::Odd).into());
    let xi = alg.odd_index(&[]).unwrap();
    let mut out = alg.mul(f, &alg.diff_odd(g, xi));
    out = out.add(&alg.mul(&alg.diff_odd(f, xi), g).scale(&sign));
    for j in 0..alg.p() {
        let xj = alg.odd_index(&[j]).unwrap();
        out = out.add(&alg.mul(&alg.total_derivative(f, j, 1), &alg.diff_odd(g, xj)));
        out = out.add(&alg.mul(&alg.diff_odd(f, xj), &alg.total_derivative(g, j, 1)).scale(&sign));
    }
    Ok(out)
}

/// `σ(Z) = Z^ξ - Σ Z^{x^i} ξ_i` for `σ = dξ - dx^i ξ_i`.
pub fn contact_form(alg: &JetAlgebra, z: &JetField) -> JetFn {
    let p = alg.p();
    let xi = alg.odd_index(&[]).unwrap();
    let mut out = z.coeffs[p + xi].clone();
    for i in 0..p {
        let xi_i = alg.odd_index(&[i]).unwrap();
        out = out.sub(&alg.mul(&z.coeffs[i], &alg.odd_var(xi_i)));
    }
    out
}

/// Generators of the Cartan distribution on `J¹`: `D^{(1)}_{x^i}`, `∂_{ξ_i}`.
pub fn cartan_generators(alg: &JetAlgebra) -> Vec<JetField> {
    let p = alg.p();
    let xi = alg.odd_index(&[]).unwrap();
    let mut out = Vec::new();
    for i in 0..p {
        let xi_i = alg.odd_index(&[i]).unwrap();
        let mut d = JetField::zero(alg, Parity::Even);
        d.coeffs[i] = alg.one();
        d.coeffs[p + xi] = alg.odd_var(xi_i);
        out.push(d);
        let mut v = JetField::zero(alg, Parity::Odd);
        v.coeffs[p + xi_i] = alg.one();
        out.push(v);
    }
    out
}
