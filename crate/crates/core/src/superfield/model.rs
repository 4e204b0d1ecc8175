//! Left-invariant fields on the nilpotent supergroup `exp(m)` in
//! exponential coordinates: `X̃ = Σ_c (ψ(ad_Z) X)^c ∂_c` with
//! `Z = Σ_a x^a e_a` and `ψ(u) = u / (1 - e^{-u}) = Σ B⁺_k u^k / k!`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::flag::{DistributionSpec, GradedFrame};
use super::poly::SuperPolynomial;
use super::vector::{Coordinates, SuperVectorField};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::liesuper::LieSuperalgebra;

/// `B⁺_k / k!` for `k = 0..len`.
pub fn bernoulli_series(len: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::new();
    for m in 0..len {
        if m == 0 {
            b.push(BigRational::from_integer(1.into()));
            continue;
        }
        // Σ_{k<m+1} C(m+1,k) B_k = 0 with B_1 = -1/2
        let mut acc = BigRational::from_integer(0.into());
        let mut binom = BigInt::from(1);
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    if len > 1 {
        b[1] = -b[1].clone();
    }
    let mut fact = BigInt::from(1);
    b.into_iter()
        .enumerate()
        .map(|(k, bk)| {
            if k > 0 {
                fact *= BigInt::from(k);
            }
            bk / BigRational::from_integer(fact.clone())
        })
        .collect()
}

/// Coordinates named after the basis of `m`, split by parity.
pub fn group_coordinates<F: Field>(m: &LieSuperalgebra<F>) -> Result<(Coordinates, Vec<usize>)> {
    let (odd, even): (Vec<usize>, Vec<usize>) = (0..m.dim()).partition(|&a| m.parity(a).is_odd());
    let coords = Coordinates {
        even: even.iter().map(|&a| m.name(a).to_string()).collect(),
        odd: odd.iter().map(|&a| m.name(a).to_string()).collect(),
    };
    coords.check()?;
    let mut direction = vec![0; m.dim()];
    for (k, &a) in even.iter().chain(&odd).enumerate() {
        direction[a] = k;
    }
    Ok((coords, direction))
}

/// One left-invariant field per basis element of a negatively graded `m`.
pub fn left_invariant_fields<F: Field>(m: &LieSuperalgebra<F>) -> Result<(Coordinates, Vec<SuperVectorField<F>>)> {
    if (0..m.dim()).any(|a| m.degree(a) >= 0) {
        return Err(Error::InvalidParameter("symbol must be negatively graded".into()));
    }
    let (coords, dir) = group_coordinates(m)?;
    let ne = coords.m();
    let var = |a: usize| -> SuperPolynomial<F> {
        if dir[a] < ne {
            SuperPolynomial::even_var(ne, dir[a])
        } else {
            SuperPolynomial::odd_var(ne, dir[a] - ne)
        }
    };
    let n = m.dim();
    let depth = m.depth() as usize;
    let beta = bernoulli_series(depth + 1);
    let mut fields = Vec::new();
    for x in 0..n {
        // Grassmann-envelope vector Σ g_c ⊗ e_c, total parity |e_x|
        let mut term: Vec<SuperPolynomial<F>> = vec![SuperPolynomial::zero(ne); n];
        term[x] = SuperPolynomial::one(ne);
        let mut total = term.clone();
        for b in beta.iter().skip(1) {
            let mut next = vec![SuperPolynomial::zero(ne); n];
            for (c, gc) in term.iter().enumerate() {
                if gc.is_zero() {
                    continue;
                }
                let gc_parity = m.parity(x) + m.parity(c);
                for a in 0..n {
                    let br = m.bracket_basis(a, c);
                    if br.is_empty() {
                        continue;
                    }
                    let sign = F::from_i64(m.parity(a).sign_with(gc_parity));
                    let coeff = (&var(a) * gc).scale(&sign);
                    for (k, v) in br {
                        next[k] = &next[k] + &coeff.scale(&v);
                    }
                }
            }
            term = next;
            if term.iter().all(SuperPolynomial::is_zero) {
                break;
            }
            let bf = F::from_rational(b.clone());
            for (t, s) in total.iter_mut().zip(&term) {
                *t = &*t + &s.scale(&bf);
            }
        }
        let mut coeffs = vec![SuperPolynomial::zero(ne); n];
        for (c, g) in total.into_iter().enumerate() {
            coeffs[dir[c]] = g;
        }
        fields.push(SuperVectorField::new(&coords, coeffs, m.parity(x))?);
    }
    Ok((coords, fields))
}

/// The left-invariant distribution spanned by the degree `-1` fields, and
/// the full left-invariant frame named after the basis.
pub fn standard_model<F: Field>(m: &LieSuperalgebra<F>) -> Result<(DistributionSpec<F>, GradedFrame<F>)> {
    let (coords, fields) = left_invariant_fields(m)?;
    let gens = (0..m.dim()).filter(|&a| m.degree(a) == -1).map(|a| fields[a].clone()).collect();
    let spec = DistributionSpec::new(coords, gens)?;
    let frame = GradedFrame {
        levels: (0..m.dim()).map(|a| (-m.degree(a)) as usize).collect(),
        names: (0..m.dim()).map(|a| m.name(a).to_string()).collect(),
        fields,
    };
    Ok((spec, frame))
}
