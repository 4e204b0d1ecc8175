use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::poly::{Monomial, SuperPolynomial};
use crate::error::{Error, Result};
use crate::expr::{self, Context};
use crate::field::Field;
use crate::superspace::Parity;

/// Coordinate names `(x¹..xᵐ | θ¹..θⁿ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coordinates {
    pub even: Vec<String>,
    pub odd: Vec<String>,
}

impl Coordinates {
    pub fn new(even: &[&str], odd: &[&str]) -> Result<Self> {
        let c = Coordinates {
            even: even.iter().map(|s| s.to_string()).collect(),
            odd: odd.iter().map(|s| s.to_string()).collect(),
        };
        c.check()?;
        Ok(c)
    }

    pub fn check(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for n in self.even.iter().chain(&self.odd) {
            if !seen.insert(n) {
                return Err(Error::InvalidParameter(format!("duplicate coordinate {n}")));
            }
        }
        if self.odd.len() > 63 {
            return Err(Error::InvalidParameter("at most 63 odd coordinates".into()));
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.even.len()
    }

    pub fn n(&self) -> usize {
        self.odd.len()
    }

    pub fn dim(&self) -> usize {
        self.m() + self.n()
    }

    /// Direction index: even coordinates first.
    pub fn direction(&self, name: &str) -> Option<usize> {
        self.even
            .iter()
            .position(|s| s == name)
            .or_else(|| self.odd.iter().position(|s| s == name).map(|a| a + self.m()))
    }

    pub fn direction_parity(&self, j: usize) -> Parity {
        if j < self.m() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn direction_name(&self, j: usize) -> &str {
        if j < self.m() {
            &self.even[j]
        } else {
            &self.odd[j - self.m()]
        }
    }

    pub fn format_poly<F: Field>(&self, p: &SuperPolynomial<F>) -> String {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (mono, c) in p.terms() {
            let mut factors = Vec::new();
            for (i, &e) in mono.x.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.even[i].clone()),
                    _ => factors.push(format!("{}^{e}", self.even[i])),
                }
            }
            for a in 0..self.n() {
                if mono.theta >> a & 1 == 1 {
                    factors.push(self.odd[a].clone());
                }
            }
            parts.push(signed_term(c, factors));
        }
        join_terms(parts)
    }
}

/// `(negative, text)` for `c · factors`.
pub(crate) fn signed_term<F: Field>(c: &F, factors: Vec<String>) -> (bool, String) {
    let neg_c = -c.clone();
    let (neg, mag) = match (c.as_rational(), neg_c.as_rational()) {
        (Some(q), _) if q < num_traits::Zero::zero() => (true, neg_c),
        _ => (false, c.clone()),
    };
    let coeff = mag.to_pretty();
    let text = if factors.is_empty() {
        coeff
    } else if mag.is_one() {
        factors.join("·")
    } else if coeff.contains(['+', '-', ' ']) {
        format!("({coeff})·{}", factors.join("·"))
    } else {
        format!("{coeff}·{}", factors.join("·"))
    };
    (neg, text)
}

pub(crate) fn join_terms(parts: Vec<(bool, String)>) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (neg, t)) in parts.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => s.push_str(&t),
            (0, true) => {
                s.push('-');
                s.push_str(&t)
            }
            (_, false) => {
                s.push_str(" + ");
                s.push_str(&t)
            }
            (_, true) => {
                s.push_str(" - ");
                s.push_str(&t)
            }
        }
    }
    s
}

/// `Σ Xʲ ∂ⱼ` with polynomial coefficients; homogeneous of the declared parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperVectorField<F> {
    pub coeffs: Vec<SuperPolynomial<F>>,
    pub parity: Parity,
}

impl<F: Field> SuperVectorField<F> {
    pub fn zero(coords: &Coordinates, parity: Parity) -> Self {
        SuperVectorField {
            coeffs: vec![SuperPolynomial::zero(coords.m()); coords.dim()],
            parity,
        }
    }

    pub fn partial(coords: &Coordinates, j: usize) -> Self {
        let mut f = Self::zero(coords, coords.direction_parity(j));
        f.coeffs[j] = SuperPolynomial::one(coords.m());
        f
    }

    /// Checks homogeneity against the declared parity.
    pub fn new(coords: &Coordinates, coeffs: Vec<SuperPolynomial<F>>, parity: Parity) -> Result<Self> {
        if coeffs.len() != coords.dim() {
            return Err(Error::InvalidParameter("one coefficient per direction".into()));
        }
        for (j, c) in coeffs.iter().enumerate() {
            for (mono, _) in c.terms() {
                if mono.parity() + coords.direction_parity(j) != parity {
                    return Err(Error::InvalidParameter(format!(
                        "coefficient of ∂{} breaks parity",
                        coords.direction_name(j)
                    )));
                }
            }
        }
        Ok(SuperVectorField { coeffs, parity })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SuperPolynomial::is_zero)
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.iter().map(SuperPolynomial::degree).max().unwrap_or(0)
    }

    /// `X(f) = Σ Xʲ ∂ⱼ f`.
    pub fn apply(&self, f: &SuperPolynomial<F>) -> SuperPolynomial<F> {
        let m = f.even_count();
        let mut out = SuperPolynomial::zero(m);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = if j < m { f.diff_even(j) } else { f.diff_odd(j - m) };
            if !d.is_zero() {
                out = &out + &(c * &d);
            }
        }
        out
    }

    /// `f·X`.
    pub fn mul_left(&self, f: &SuperPolynomial<F>, parity: Parity) -> Self {
        SuperVectorField {
            coeffs: self.coeffs.iter().map(|c| f * c).collect(),
            parity: parity + self.parity,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        SuperVectorField {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
            parity: self.parity,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        SuperVectorField {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
            parity: self.parity,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        SuperVectorField {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
            parity: self.parity,
        }
    }

    pub fn eval_body(&self, point: &[F]) -> Vec<F> {
        self.coeffs.iter().map(|c| c.eval_body(point)).collect()
    }

    pub fn format(&self, coords: &Coordinates) -> String {
        let mut parts = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            let d = format!("∂{}", coords.direction_name(j));
            for (mono, x) in c.terms() {
                let mut factors = Vec::new();
                for (i, &e) in mono.x.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => factors.push(coords.even[i].clone()),
                        _ => factors.push(format!("{}^{e}", coords.even[i])),
                    }
                }
                for a in 0..coords.n() {
                    if mono.theta >> a & 1 == 1 {
                        factors.push(coords.odd[a].clone());
                    }
                }
                factors.push(d.clone());
                parts.push(signed_term(x, factors));
            }
        }
        join_terms(parts)
    }

    /// Divides by the first nonzero scalar coefficient.
    pub fn normalized(&self) -> Self {
        for c in &self.coeffs {
            if let Some((_, x)) = c.terms().next() {
                return self.scale(&(F::one() / x.clone()));
            }
        }
        self.clone()
    }

    pub fn parse(coords: &Coordinates, s: &str) -> Result<Self> {
        let e = expr::parse(s).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        let ctx = FieldCtx::<F> {
            coords,
            _f: std::marker::PhantomData,
        };
        let v = expr::eval(&ctx, &e).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        match v {
            Val::Field(f) => {
                let parity = infer_parity(coords, &f).ok_or_else(|| Error::Parse(format!("{s:?}: field is not parity-homogeneous")))?;
                SuperVectorField::new(coords, f, parity)
            }
            Val::Fun(_) => Err(Error::Parse(format!("{s:?}: expected a vector field, got a function"))),
        }
    }
}

fn infer_parity<F: Field>(coords: &Coordinates, coeffs: &[SuperPolynomial<F>]) -> Option<Parity> {
    let mut parity = None;
    for (j, c) in coeffs.iter().enumerate() {
        for (mono, _) in c.terms() {
            let p = mono.parity() + coords.direction_parity(j);
            match parity {
                None => parity = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
    }
    Some(parity.unwrap_or(Parity::Even))
}

/// `XY - (-1)^{|X||Y|} YX`.
pub fn bracket_fields<F: Field>(x: &SuperVectorField<F>, y: &SuperVectorField<F>) -> SuperVectorField<F> {
    let s = F::from_i64(x.parity.sign_with(y.parity));
    let coeffs = x
        .coeffs
        .iter()
        .zip(&y.coeffs)
        .map(|(xj, yj)| &x.apply(yj) - &y.apply(xj).scale(&s))
        .collect();
    SuperVectorField {
        coeffs,
        parity: x.parity + y.parity,
    }
}

#[derive(Clone)]
enum Val<F> {
    Fun(SuperPolynomial<F>),
    Field(Vec<SuperPolynomial<F>>),
}

struct FieldCtx<'a, F> {
    coords: &'a Coordinates,
    _f: std::marker::PhantomData<F>,
}

impl<F: Field> Context for FieldCtx<'_, F> {
    type Value = Val<F>;

    fn number(&self, q: &BigRational) -> std::result::Result<Val<F>, String> {
        Ok(Val::Fun(SuperPolynomial::constant(self.coords.m(), F::from_rational(q.clone()))))
    }

    fn var(&self, name: &str) -> std::result::Result<Val<F>, String> {
        let m = self.coords.m();
        match self.coords.direction(name) {
            Some(j) if j < m => Ok(Val::Fun(SuperPolynomial::even_var(m, j))),
            Some(j) => Ok(Val::Fun(SuperPolynomial::odd_var(m, j - m))),
            None => Err(format!("unknown coordinate {name}")),
        }
    }

    fn partial(&self, name: &str) -> std::result::Result<Val<F>, String> {
        let j = self.coords.direction(name).ok_or_else(|| format!("unknown coordinate ∂{name}"))?;
        let mut v = vec![SuperPolynomial::zero(self.coords.m()); self.coords.dim()];
        v[j] = SuperPolynomial::one(self.coords.m());
        Ok(Val::Field(v))
    }

    fn add(&self, a: Val<F>, b: Val<F>) -> std::result::Result<Val<F>, String> {
        match (a, b) {
            (Val::Fun(a), Val::Fun(b)) => Ok(Val::Fun(&a + &b)),
            (Val::Field(a), Val::Field(b)) => Ok(Val::Field(a.iter().zip(&b).map(|(x, y)| x + y).collect())),
            _ => Err("cannot add a function and a vector field".into()),
        }
    }

    fn mul(&self, a: Val<F>, b: Val<F>) -> std::result::Result<Val<F>, String> {
        match (a, b) {
            (Val::Fun(a), Val::Fun(b)) => Ok(Val::Fun(&a * &b)),
            (Val::Fun(a), Val::Field(b)) => Ok(Val::Field(b.iter().map(|y| &a * y).collect())),
            (Val::Field(_), _) => Err("a vector field must be the last factor".into()),
        }
    }

    fn neg(&self, a: Val<F>) -> Val<F> {
        match a {
            Val::Fun(a) => Val::Fun(-&a),
            Val::Field(v) => Val::Field(v.iter().map(|p| -p).collect()),
        }
    }

    fn one(&self) -> Val<F> {
        Val::Fun(SuperPolynomial::one(self.coords.m()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub x_exponents: Vec<u32>,
    pub theta_subset: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoefficientJson {
    pub direction: String,
    pub monomials: Vec<MonomialJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldJson {
    pub parity: Parity,
    pub coefficients: Vec<CoefficientJson>,
}

/// A generator given either as an expression string or structurally.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldInput {
    Expr(String),
    Json(FieldJson),
}

impl<F: Field> SuperVectorField<F> {
    /// `theta_subset` is listed in the order of the product; it is sorted
    /// with the matching sign.
    pub fn to_json(&self, coords: &Coordinates) -> FieldJson {
        let coefficients = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| CoefficientJson {
                direction: coords.direction_name(j).to_string(),
                monomials: c
                    .terms()
                    .map(|(mono, x)| MonomialJson {
                        x_exponents: mono.x.clone(),
                        theta_subset: (0..coords.n()).filter(|a| mono.theta >> a & 1 == 1).collect(),
                        coeff: x.to_scalar_string(),
                    })
                    .collect(),
            })
            .collect();
        FieldJson {
            parity: self.parity,
            coefficients,
        }
    }

    pub fn from_json(coords: &Coordinates, j: &FieldJson) -> Result<Self> {
        let m = coords.m();
        let mut coeffs = vec![SuperPolynomial::zero(m); coords.dim()];
        for c in &j.coefficients {
            let d = coords
                .direction(&c.direction)
                .ok_or_else(|| Error::Parse(format!("unknown direction {}", c.direction)))?;
            for mono in &c.monomials {
                if mono.x_exponents.len() != m {
                    return Err(Error::Parse("x_exponents has wrong length".into()));
                }
                let mut p = SuperPolynomial::constant(m, F::parse_scalar(&mono.coeff).map_err(|e| Error::Parse(e.to_string()))?);
                let mut x = Monomial::one(m);
                x.x = mono.x_exponents.clone();
                p = &p * &SuperPolynomial::from_terms(m, [(x, F::one())]);
                for &a in &mono.theta_subset {
                    if a >= coords.n() {
                        return Err(Error::Parse(format!("odd index {a} out of range")));
                    }
                    p = &p * &SuperPolynomial::odd_var(m, a);
                }
                coeffs[d] = &coeffs[d] + &p;
            }
        }
        SuperVectorField::new(coords, coeffs, j.parity)
    }

    pub fn from_input(coords: &Coordinates, input: &FieldInput) -> Result<Self> {
        match input {
            FieldInput::Expr(s) => Self::parse(coords, s),
            FieldInput::Json(j) => Self::from_json(coords, j),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type V = SuperVectorField<Rational>;

    fn ex35() -> Coordinates {
        Coordinates::new(&["x", "u", "p", "q", "z"], &["θ", "ν"]).unwrap()
    }

    #[test]
    fn example_brackets() {
        let c = ex35();
        let dx = V::parse(&c, "∂x + p*∂u + q*∂p + q^2*∂z").unwrap();
        let dq = V::parse(&c, "∂q").unwrap();
        let dt = V::parse(&c, "∂θ + q*∂ν + θ*∂p + 2*ν*∂z").unwrap();
        assert_eq!(dt.parity, Parity::Odd);
        assert_eq!(bracket_fields(&dq, &dx), V::parse(&c, "∂p + 2q∂z").unwrap());
        assert_eq!(bracket_fields(&dq, &dt), V::parse(&c, "∂ν").unwrap());
        assert_eq!(bracket_fields(&dx, &dt), V::parse(&c, "-θ*∂u").unwrap());
        assert_eq!(bracket_fields(&dt, &dt), V::parse(&c, "2*(∂p + 2*q*∂z)").unwrap());
    }

    #[test]
    fn formatting_round_trips() {
        let c = ex35();
        for s in ["∂x + p·∂u + q·∂p + q^2·∂z", "-θ·∂u", "1/2·x·ν·θ·∂z - 3·∂x", "0"] {
            let f = if s == "0" { V::zero(&c, Parity::Even) } else { V::parse(&c, s).unwrap() };
            let printed = f.format(&c);
            if s != "0" {
                assert_eq!(V::parse(&c, &printed).unwrap(), f, "{printed}");
            } else {
                assert_eq!(printed, "0");
            }
        }
        assert_eq!(V::parse(&c, "θ*∂u").unwrap().format(&c), "θ·∂u");
    }

    #[test]
    fn json_round_trip() {
        let c = ex35();
        let f = V::parse(&c, "∂θ + q*∂ν + ν*θ*x*∂θ + 2*ν*∂z").unwrap();
        let j = f.to_json(&c);
        let text = serde_json::to_string(&j).unwrap();
        let back: FieldJson = serde_json::from_str(&text).unwrap();
        assert_eq!(V::from_json(&c, &back).unwrap(), f);
    }

    #[test]
    fn rejects_inhomogeneous_and_malformed() {
        let c = ex35();
        assert!(V::parse(&c, "∂x + ∂θ").is_err());
        assert!(V::parse(&c, "x").is_err());
        assert!(V::parse(&c, "∂w").is_err());
        assert!(V::parse(&c, "∂x*x").is_err());
        assert!(V::parse(&c, "∂x + x").is_err());
    }
}
