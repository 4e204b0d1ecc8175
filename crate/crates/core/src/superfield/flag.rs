use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::poly::{Monomial, SuperPolynomial};
use super::vector::{bracket_fields, Coordinates, FieldInput, SuperVectorField};
use crate::error::{Error, Result};
use crate::field::{Field, FieldTag, SparseVec, Span};
use crate::liesuper::LieSuperalgebra;
use crate::superspace::{BasisVector, GradedSuperSpace, Parity, SuperDim};

pub const DEFAULT_DEGREE_CAP: u32 = 8;

/// Generators of a distribution on `ℝ^{m|n}` and a base point.
#[derive(Clone, Debug)]
pub struct DistributionSpec<F> {
    pub coords: Coordinates,
    pub generators: Vec<SuperVectorField<F>>,
    pub base_point: Vec<F>,
}

impl<F: Field> DistributionSpec<F> {
    pub fn new(coords: Coordinates, generators: Vec<SuperVectorField<F>>) -> Result<Self> {
        if generators.iter().any(SuperVectorField::is_zero) {
            return Err(Error::InvalidParameter("generators must be nonzero".into()));
        }
        let base_point = vec![F::zero(); coords.m()];
        Ok(DistributionSpec {
            coords,
            generators,
            base_point,
        })
    }

    pub fn parse(coords: Coordinates, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| SuperVectorField::parse(&coords, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(coords, gens)
    }

    pub fn rank(&self) -> SuperDim {
        let mut s = SuperDim::ZERO;
        for g in &self.generators {
            s.count(g.parity);
        }
        s
    }

    pub fn from_json(j: &DistributionJson) -> Result<Self> {
        if j.field == Some(FieldTag::Qi) && F::TAG == FieldTag::Q {
            return Err(Error::Parse("distribution is defined over Qi, requested Q".into()));
        }
        j.coordinates.check()?;
        let gens = j
            .generators
            .iter()
            .map(|g| SuperVectorField::from_input(&j.coordinates, g))
            .collect::<Result<Vec<_>>>()?;
        let mut spec = Self::new(j.coordinates.clone(), gens)?;
        if let Some(p) = &j.base_point {
            if p.len() != spec.coords.m() {
                return Err(Error::Parse("base_point needs one value per even coordinate".into()));
            }
            spec.base_point = p
                .iter()
                .map(|s| F::parse_scalar(s).map_err(|e| Error::Parse(e.to_string())))
                .collect::<Result<_>>()?;
        }
        Ok(spec)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistributionJson {
    pub coordinates: Coordinates,
    pub generators: Vec<FieldInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_point: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldTag>,
}

/// One level `𝒟ⁱ`: an adapted frame (cumulative over levels) plus any
/// generators that could not be reduced to zero but have no invertible entry.
#[derive(Clone, Debug)]
pub struct FlagLevel<F> {
    pub frame: Vec<SuperVectorField<F>>,
    pub pivots: Vec<usize>,
    /// Index in `frame` where this level's new fields start.
    pub new_start: usize,
    pub remainders: Vec<SuperVectorField<F>>,
}

impl<F> FlagLevel<F> {
    pub fn rank(&self) -> SuperDim {
        let mut s = SuperDim::ZERO;
        for f in &self.frame {
            s.count(f.parity);
        }
        s
    }

    pub fn generator_count(&self) -> SuperDim {
        let mut s = self.rank();
        for f in &self.remainders {
            s.count(f.parity);
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct DerivedFlag<F> {
    pub coords: Coordinates,
    pub base_point: Vec<F>,
    pub levels: Vec<FlagLevel<F>>,
    pub bracket_generating: bool,
}

impl<F> DerivedFlag<F> {
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn ranks(&self) -> Vec<SuperDim> {
        self.levels.iter().map(FlagLevel::rank).collect()
    }
}

fn flatten<F: Field>(f: &SuperVectorField<F>) -> BTreeMap<(usize, Monomial), F> {
    let mut out = BTreeMap::new();
    for (j, c) in f.coeffs.iter().enumerate() {
        for (mono, x) in c.terms() {
            out.insert((j, mono.clone()), x.clone());
        }
    }
    out
}

fn invertible_at<F: Field>(p: &SuperPolynomial<F>, point: &[F]) -> bool {
    !p.eval_body(point).is_zero()
}

/// Reduces `candidates` against the frame seeded by `seed`, over the local
/// ring at `point`: pivots are entries with nonzero body at the point.
fn reduce<F: Field>(
    seed: &FlagLevel<F>,
    candidates: Vec<SuperVectorField<F>>,
    point: &[F],
    cap: u32,
    level: usize,
) -> Result<FlagLevel<F>> {
    let mut frame = seed.frame.clone();
    let mut pivots = seed.pivots.clone();
    let new_start = frame.len();
    let mut leftovers = Vec::new();
    let reduce_one = |mut f: SuperVectorField<F>, frame: &[SuperVectorField<F>], pivots: &[usize]| -> Result<SuperVectorField<F>> {
        for (p, &j) in frame.iter().zip(pivots) {
            let b = f.coeffs[j].clone();
            if b.is_zero() {
                continue;
            }
            let a = &p.coeffs[j];
            f = match a.as_constant() {
                Some(c) => f.sub(&p.mul_left(&b.scale(&(F::one() / c)), f.parity + p.parity)),
                None => {
                    let scaled = f.mul_left(a, Parity::Even);
                    if scaled.degree() > cap {
                        return Err(Error::DegreeCap { cap, level });
                    }
                    scaled.sub(&p.mul_left(&b, f.parity + p.parity))
                }
            };
            if f.degree() > cap {
                return Err(Error::DegreeCap { cap, level });
            }
        }
        Ok(f)
    };
    for c in seed.remainders.iter().cloned().chain(candidates) {
        let f = reduce_one(c, &frame, &pivots)?;
        if f.is_zero() {
            continue;
        }
        let choice = pick_pivot(&f, point);
        match choice {
            Some(j) => {
                frame.push(f);
                pivots.push(j);
            }
            None => leftovers.push(f),
        }
    }
    let mut remainders = Vec::new();
    let mut echelon: Vec<((usize, Monomial), BTreeMap<(usize, Monomial), F>)> = Vec::new();
    for f in leftovers {
        let f = reduce_one(f, &frame, &pivots)?;
        if f.is_zero() {
            continue;
        }
        // keep only remainders independent over the scalars
        let mut v = flatten(&f);
        for (key, row) in &echelon {
            if let Some(x) = v.get(key).cloned() {
                let c = x / row[key].clone();
                for (k, y) in row {
                    let e = v.entry(k.clone()).or_insert_with(F::zero);
                    *e = e.clone() - c.clone() * y.clone();
                    if e.is_zero() {
                        v.remove(k);
                    }
                }
            }
        }
        if let Some(key) = v.keys().next().cloned() {
            echelon.push((key, v));
            remainders.push(f);
        }
    }
    Ok(FlagLevel {
        frame,
        pivots,
        new_start,
        remainders,
    })
}

/// Prefers a direction whose coefficient is a nonzero constant.
fn pick_pivot<F: Field>(f: &SuperVectorField<F>, point: &[F]) -> Option<usize> {
    let constant = f
        .coeffs
        .iter()
        .position(|c| c.as_constant().is_some_and(|x| !x.is_zero()));
    constant.or_else(|| f.coeffs.iter().position(|c| invertible_at(c, point)))
}

/// Weak derived flag `𝒟ⁱ = 𝒟 + [𝒟, 𝒟^{i-1}]`.
pub fn derived_flag<F: Field>(spec: &DistributionSpec<F>, max_depth: usize) -> Result<DerivedFlag<F>> {
    derived_flag_capped(spec, max_depth, DEFAULT_DEGREE_CAP)
}

pub fn derived_flag_capped<F: Field>(
    spec: &DistributionSpec<F>,
    max_depth: usize,
    cap: u32,
) -> Result<DerivedFlag<F>> {
    let dim = SuperDim::new(spec.coords.m(), spec.coords.n());
    let empty = FlagLevel {
        frame: Vec::new(),
        pivots: Vec::new(),
        new_start: 0,
        remainders: Vec::new(),
    };
    let first = reduce(&empty, spec.generators.clone(), &spec.base_point, cap, 1)?;
    let base: Vec<SuperVectorField<F>> = first.frame.iter().chain(&first.remainders).cloned().collect();
    let mut levels = vec![first];
    while levels.len() < max_depth {
        let prev = levels.last().unwrap();
        if prev.rank() == dim && prev.remainders.is_empty() {
            break;
        }
        let mut candidates = Vec::new();
        let gens: Vec<&SuperVectorField<F>> = prev.frame.iter().chain(&prev.remainders).collect();
        for g in &base {
            for h in &gens {
                let b = bracket_fields(g, h);
                if !b.is_zero() {
                    candidates.push(b);
                }
            }
        }
        let next = reduce(prev, candidates, &spec.base_point, cap, levels.len() + 1)?;
        let grew = next.frame.len() > prev.frame.len() || next.remainders.len() != prev.remainders.len();
        if !grew {
            break;
        }
        levels.push(next);
    }
    let top = levels.last().unwrap();
    let bracket_generating = top.rank() == dim && top.remainders.is_empty();
    Ok(DerivedFlag {
        coords: spec.coords.clone(),
        base_point: spec.base_point.clone(),
        levels,
        bracket_generating,
    })
}

/// `x₀` followed by `count` rational points drawn from a seeded generator.
pub fn sample_points<F: Field>(base: &[F], count: usize, seed: u64) -> Vec<Vec<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts = vec![base.to_vec()];
    for _ in 0..count {
        pts.push(
            base.iter()
                .map(|b| b.clone() + F::from_ratio(rng.gen_range(-7..=7), rng.gen_range(1..=3)))
                .collect(),
        );
    }
    pts
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A generator of `𝒟ⁱ` with no invertible entry: the module is not a direct factor.
    NotDirectFactor { level: usize, field: String },
    /// Frame evaluations become dependent at a sample point.
    RankDrop { level: usize, point: Vec<String>, field: String },
    /// A graded bracket coefficient differs between sample points.
    NonConstant { left: String, right: String, along: String, values: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegularityReport {
    pub regular: bool,
    pub ranks: Vec<SuperDim>,
    pub sample_points: usize,
    pub bracket_generating: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Always "sample points": regularity is checked only there.
    pub scope: &'static str,
}

/// Graded structure of a regular flag in a chosen adapted frame:
/// `frame[k]` has degree `-levels[k]`.
#[derive(Clone, Debug)]
pub struct GradedFrame<F> {
    pub fields: Vec<SuperVectorField<F>>,
    pub levels: Vec<usize>,
    pub names: Vec<String>,
}

impl<F: Field> GradedFrame<F> {
    /// The flag's own frame, named `X1, X2, …`.
    pub fn canonical(flag: &DerivedFlag<F>) -> Self {
        let mut fields = Vec::new();
        let mut levels = Vec::new();
        for (i, level) in flag.levels.iter().enumerate() {
            for f in &level.frame[level.new_start..] {
                fields.push(f.clone());
                levels.push(i + 1);
            }
        }
        let names = (1..=fields.len()).map(|k| format!("X{k}")).collect();
        GradedFrame { fields, levels, names }
    }

    fn superdim_at(&self, level: usize) -> SuperDim {
        let mut s = SuperDim::ZERO;
        for (f, &l) in self.fields.iter().zip(&self.levels) {
            if l == level {
                s.count(f.parity);
            }
        }
        s
    }
}

fn point_strings<F: Field>(p: &[F]) -> Vec<String> {
    p.iter().map(Field::to_pretty).collect()
}

/// Strong regularity at sample points: no stray generators, constant ranks,
/// constant graded bracket coefficients in the canonical frame.
pub fn check_strong_regularity<F: Field>(flag: &DerivedFlag<F>, points: &[Vec<F>]) -> RegularityReport {
    let frame = GradedFrame::canonical(flag);
    check_in_frame(flag, &frame, points).0
}

fn report<F>(flag: &DerivedFlag<F>, points: &[Vec<F>], witness: Option<Witness>) -> RegularityReport {
    RegularityReport {
        regular: witness.is_none(),
        ranks: flag.ranks(),
        sample_points: points.len(),
        bracket_generating: flag.bracket_generating,
        witness,
        scope: "sample points",
    }
}

type Constants<F> = Vec<((usize, usize), SparseVec<F>)>;

fn check_in_frame<F: Field>(
    flag: &DerivedFlag<F>,
    frame: &GradedFrame<F>,
    points: &[Vec<F>],
) -> (RegularityReport, Option<Constants<F>>) {
    let coords = &flag.coords;
    for (i, level) in flag.levels.iter().enumerate() {
        if let Some(r) = level.remainders.first() {
            let w = Witness::NotDirectFactor {
                level: i + 1,
                field: r.normalized().format(coords),
            };
            return (report(flag, points, Some(w)), None);
        }
    }
    let depth = flag.depth();
    // frame fields of level ≤ i, evaluated at each point
    let mut spans: Vec<Vec<Span<F>>> = Vec::new();
    for pt in points {
        let mut per_level = Vec::new();
        for i in 1..=depth {
            let mut span = Span::new(coords.dim());
            for (k, f) in frame.fields.iter().enumerate() {
                if frame.levels[k] <= i && !span.insert(&f.eval_body(pt)) {
                    let w = Witness::RankDrop {
                        level: i,
                        point: point_strings(pt),
                        field: f.format(coords),
                    };
                    return (report(flag, points, Some(w)), None);
                }
            }
            let covers = flag.levels[i - 1].frame.iter().all(|g| span.contains(&g.eval_body(pt)));
            if span.len() != flag.levels[i - 1].frame.len() || !covers {
                let w = Witness::RankDrop {
                    level: i,
                    point: point_strings(pt),
                    field: "frame does not span the level".into(),
                };
                return (report(flag, points, Some(w)), None);
            }
            per_level.push(span);
        }
        spans.push(per_level);
    }
    let index_at: Vec<Vec<usize>> = (1..=depth)
        .map(|i| (0..frame.fields.len()).filter(|&k| frame.levels[k] <= i).collect())
        .collect();
    let mut constants = Vec::new();
    for a in 0..frame.fields.len() {
        for b in a..frame.fields.len() {
            let l = frame.levels[a] + frame.levels[b];
            if l > depth {
                continue;
            }
            let br = bracket_fields(&frame.fields[a], &frame.fields[b]);
            let mut value: Option<SparseVec<F>> = None;
            for (pt, per_level) in points.iter().zip(&spans) {
                let Some(c) = per_level[l - 1].coords(&br.eval_body(pt)) else {
                    let w = Witness::RankDrop {
                        level: l,
                        point: point_strings(pt),
                        field: br.format(coords),
                    };
                    return (report(flag, points, Some(w)), None);
                };
                let mut graded = SparseVec::new();
                for (pos, x) in c.into_iter().enumerate() {
                    let k = index_at[l - 1][pos];
                    if frame.levels[k] == l && !x.is_zero() {
                        graded.insert(k, x);
                    }
                }
                match &value {
                    None => value = Some(graded),
                    Some(v) if *v == graded => {}
                    Some(v) => {
                        let along = v
                            .keys()
                            .chain(graded.keys())
                            .find(|k| v.get(k) != graded.get(k))
                            .copied()
                            .unwrap_or(0);
                        let show = |s: &SparseVec<F>| s.get(&along).map(Field::to_pretty).unwrap_or_else(|| "0".into());
                        let w = Witness::NonConstant {
                            left: frame.names[a].clone(),
                            right: frame.names[b].clone(),
                            along: frame.names[along].clone(),
                            values: vec![show(v), show(&graded)],
                        };
                        return (report(flag, points, Some(w)), None);
                    }
                }
            }
            let v = value.unwrap_or_default();
            if !v.is_empty() {
                constants.push(((a, b), v));
            }
        }
    }
    (report(flag, points, None), Some(constants))
}

/// The symbol in the canonical frame.
pub fn extract_symbol<F: Field>(flag: &DerivedFlag<F>, points: &[Vec<F>]) -> Result<LieSuperalgebra<F>> {
    extract_symbol_in_frame(flag, &GradedFrame::canonical(flag), points)
}

/// The symbol in a caller-supplied adapted frame (degree `-levels[k]` for
/// `fields[k]`).
pub fn extract_symbol_in_frame<F: Field>(
    flag: &DerivedFlag<F>,
    frame: &GradedFrame<F>,
    points: &[Vec<F>],
) -> Result<LieSuperalgebra<F>> {
    for i in 1..=flag.depth() {
        let expected = if i == 1 {
            flag.levels[0].rank()
        } else {
            let (hi, lo) = (flag.levels[i - 1].rank(), flag.levels[i - 2].rank());
            SuperDim::new(hi.even - lo.even, hi.odd - lo.odd)
        };
        if frame.superdim_at(i) != expected {
            return Err(Error::Inconsistent(format!("frame does not match the flag at level {i}")));
        }
    }
    let (rep, constants) = check_in_frame(flag, frame, points);
    let Some(constants) = constants else {
        return Err(Error::Inconsistent(format!("distribution is not strongly regular: {:?}", rep.witness)));
    };
    let basis = frame
        .fields
        .iter()
        .zip(&frame.levels)
        .zip(&frame.names)
        .map(|((f, &l), name)| BasisVector::new(name.clone(), -(l as i32), f.parity))
        .collect();
    let space = GradedSuperSpace::new(basis).map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let mut alg = LieSuperalgebra::abelian(space);
    for ((a, b), v) in constants {
        alg.set_bracket(a, b, v);
    }
    Ok(alg)
}
