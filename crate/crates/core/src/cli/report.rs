//! Serializable analysis reports and the commands that build them.
//!
//! Every rational travels as a decimal string (`"3"`, `"-1/2"`), so JSON
//! output parses back to the identical exact values.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::annihilator::{self, FilterVerdict, Properness};
use crate::dimension::{self, bounded_shape, DimensionProfile};
use crate::error::{Error, Result};
use crate::factor::factorize;
use crate::reachability::{self, Inclusion, Subspace};
use crate::{Poly, RMatrix, RVector, Rational};

use super::parse::parse_rational;

/// Exact rational that serializes as `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text)
            .map(Q)
            .map_err(serde::de::Error::custom)
    }
}

pub fn exact_vec(v: &RVector) -> Vec<Q> {
    v.iter().cloned().map(Q).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyReport {
    pub text: String,
    /// Ascending: `coeffs[i]` multiplies `z^i`.
    pub coeffs: Vec<Q>,
}

impl From<&Poly> for PolyReport {
    fn from(p: &Poly) -> Self {
        PolyReport {
            text: p.to_string(),
            coeffs: p.coeffs().iter().cloned().map(Q).collect(),
        }
    }
}

impl PolyReport {
    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|q| q.0.clone()).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionError {
    /// `precondition` or `input`
    pub kind: String,
    pub message: String,
}

/// A report section that may have failed independently of the others.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Section<T> {
    Ok(T),
    Error(SectionError),
}

impl<T> Section<T> {
    fn from_result(r: Result<T>) -> Self {
        match r {
            Ok(v) => Section::Ok(v),
            Err(e) => Section::Error(SectionError {
                kind: if e.is_precondition() {
                    "precondition"
                } else {
                    "input"
                }
                .into(),
                message: e.to_string(),
            }),
        }
    }

    pub fn is_precondition_error(&self) -> bool {
        matches!(self, Section::Error(e) if e.kind == "precondition")
    }

    pub fn ok(&self) -> Option<&T> {
        match self {
            Section::Ok(v) => Some(v),
            Section::Error(_) => None,
        }
    }
}

// ---------------------------------------------------------------- dims

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRow {
    pub t: usize,
    pub r: u64,
    /// Closed-form value; absent for `t = 0`.
    pub closed_form: Option<u64>,
    pub factored: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsReport {
    pub m: u64,
    pub k: u64,
    pub p: u64,
    pub rows: Vec<DimRow>,
    pub r_star: u64,
    pub r_star_factored: String,
    pub t_star_bound: usize,
    pub t_star_minimal: usize,
}

fn factored(n: u64) -> Result<String> {
    Ok(factorize(n)?.to_string())
}

/// Dimension table up to `t_max` (default: the invariant-time bound + 2).
pub fn cmd_dims(m: u64, k: u64, p: u64, t_max: Option<usize>) -> Result<DimsReport> {
    let profile = DimensionProfile::build(m, k, p)?;
    let horizon = t_max.unwrap_or(profile.t_star_bound + 2);
    let traj = dimension::dim_trajectory(m, k, p, horizon)?;
    let rows = traj
        .dims
        .iter()
        .enumerate()
        .map(|(t, &r)| {
            Ok(DimRow {
                t,
                r,
                closed_form: if t == 0 {
                    None
                } else {
                    Some(profile.closed_form_dim(t)?)
                },
                factored: factored(r)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DimsReport {
        m,
        k,
        p,
        rows,
        r_star: profile.r_star,
        r_star_factored: factored(profile.r_star)?,
        t_star_bound: profile.t_star_bound,
        t_star_minimal: dimension::minimal_invariant_time(m, k, p)?,
    })
}

// ---------------------------------------------------------------- profile

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KPrimeReport {
    pub prime: u64,
    pub mu: u32,
    pub beta: u32,
    pub tau: u32,
    pub eta: u32,
    pub in_m: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MPrimeReport {
    pub prime: u64,
    pub nu: u32,
    pub theta: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub m: u64,
    pub k: u64,
    pub p: u64,
    pub alpha: u32,
    pub k_primes: Vec<KPrimeReport>,
    pub d: usize,
    /// Primes of `m` coprime to `k` with `ν > θ`.
    pub m_primes_absorbed: Vec<MPrimeReport>,
    /// Primes of `m` coprime to `k` with `ν ≤ θ`.
    pub m_primes_surplus: Vec<MPrimeReport>,
    pub p1: u64,
    pub r_star: u64,
    pub t_star_bound: usize,
    pub t_star_minimal: usize,
}

pub fn cmd_profile(m: u64, k: u64, p: u64) -> Result<ProfileReport> {
    let pr = DimensionProfile::build(m, k, p)?;
    let (absorbed, surplus) = pr.m_primes_split();
    let mp = |xs: &[dimension::MPrime]| {
        xs.iter()
            .map(|x| MPrimeReport {
                prime: x.prime,
                nu: x.nu,
                theta: x.theta,
            })
            .collect()
    };
    Ok(ProfileReport {
        m,
        k,
        p,
        alpha: pr.alpha,
        k_primes: pr
            .k_primes
            .iter()
            .map(|x| KPrimeReport {
                prime: x.prime,
                mu: x.mu,
                beta: x.beta,
                tau: x.tau,
                eta: x.eta,
                in_m: x.in_m,
            })
            .collect(),
        d: pr.d,
        m_primes_absorbed: mp(absorbed),
        m_primes_surplus: mp(surplus),
        p1: pr.p1,
        r_star: pr.r_star,
        t_star_bound: pr.t_star_bound,
        t_star_minimal: dimension::minimal_invariant_time(m, k, p)?,
    })
}

// ---------------------------------------------------------------- reachdim

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReachDimReport {
    pub m: u64,
    pub k: u64,
    pub p: u64,
    pub r: u64,
    pub reachable: bool,
    pub witnesses: Vec<usize>,
    pub at_initial: bool,
    pub invariant_from: Option<usize>,
}

pub fn cmd_reachdim(m: u64, k: u64, p: u64, r: u64) -> Result<ReachDimReport> {
    let res = dimension::is_reachable_dim(m, k, p, r)?;
    Ok(ReachDimReport {
        m,
        k,
        p,
        r,
        reachable: res.is_reachable(),
        witnesses: res.witnesses,
        at_initial: res.at_initial,
        invariant_from: res.invariant_from,
    })
}

// ---------------------------------------------------------------- basis

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceReport {
    pub t: usize,
    pub ambient: usize,
    pub dim: usize,
    pub basis: Vec<Vec<Q>>,
}

impl SubspaceReport {
    fn new(t: usize, s: &Subspace<Rational>) -> Self {
        SubspaceReport {
            t,
            ambient: s.ambient(),
            dim: s.dim(),
            basis: s.basis().iter().map(exact_vec).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub p: usize,
    /// `A^t ⋉→ δ_p^i`, `i = 1..p`.
    pub generators: Vec<Vec<Q>>,
    pub subspace: SubspaceReport,
}

pub fn cmd_basis(a: &RMatrix, p: usize, t: usize) -> Result<BasisReport> {
    let gens = reachability::reach_generators(a, p, t)?;
    let space = Subspace::span(gens[0].dim(), &gens)?;
    Ok(BasisReport {
        p,
        generators: gens.iter().map(exact_vec).collect(),
        subspace: SubspaceReport::new(t, &space),
    })
}

// ---------------------------------------------------------------- member

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub t: usize,
    pub reachable: bool,
    pub rank_with: usize,
    pub rank_without: usize,
    /// Set when the vector's dimension differs from `r(t)`.
    pub expected_dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberReport {
    pub p: usize,
    pub x: Vec<Q>,
    pub verdict: Option<VerdictReport>,
    pub scan_t_max: Option<usize>,
    /// Times `t ≤ scan_t_max` at which `x` is t-step reachable.
    pub reachable_times: Option<Vec<usize>>,
}

pub fn cmd_member(
    a: &RMatrix,
    p: usize,
    x: &RVector,
    t: Option<usize>,
    t_max: Option<usize>,
) -> Result<MemberReport> {
    if t.is_none() && t_max.is_none() {
        return Err(Error::invalid("member needs --t or --t-max"));
    }
    let verdict = t
        .map(|t| {
            reachability::is_t_step_reachable(a, p, t, x).map(|v| VerdictReport {
                t,
                reachable: v.reachable,
                rank_with: v.rank_with,
                rank_without: v.rank_without,
                expected_dim: v.mismatch.map(|m| m.expected),
            })
        })
        .transpose()?;
    let reachable_times = t_max
        .map(|tm| reachability::scan_reachability(a, p, x, tm))
        .transpose()?;
    Ok(MemberReport {
        p,
        x: exact_vec(x),
        verdict,
        scan_t_max: t_max,
        reachable_times,
    })
}

// ---------------------------------------------------------------- annihilator

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnionReport {
    pub p: usize,
    pub t_star: usize,
    pub r_star: u64,
    /// Minimal annihilator of `A^{t*} ⋉→ δ_p^i`.
    pub per_generator: Vec<PolyReport>,
    /// lcm of `per_generator`: minimal annihilator of the union of `R_t`, `t ≥ t*`.
    pub q: PolyReport,
    /// Minimal annihilator of `V_{r*}`.
    pub f: PolyReport,
    /// `f / q` when `q | f`.
    pub f_over_q: Option<PolyReport>,
    /// `proper_subset` or `inconclusive`.
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatorReport {
    pub vector: Option<Vec<Q>>,
    pub vector_annihilator: Option<PolyReport>,
    /// `pass` / `fail`, when both a vector and `p` are given.
    pub reach_filter: Option<String>,
    pub union: Option<UnionReport>,
    pub space_dim: Option<usize>,
    pub space_annihilator: Option<PolyReport>,
}

fn properness_label(p: Properness) -> &'static str {
    match p {
        Properness::ProperSubset => "proper_subset",
        Properness::Inconclusive => "inconclusive",
    }
}

fn union_report(a: &RMatrix, p: usize) -> Result<UnionReport> {
    let u = annihilator::union_annihilators(a, p)?;
    let r_star = usize::try_from(u.r_star).map_err(|_| Error::Overflow("r*"))?;
    let f = annihilator::min_annihilator_space(a, r_star)?;
    let (quot, rem) = f.divmod(&u.union)?;
    let verdict = if f == u.union {
        Properness::Inconclusive
    } else {
        Properness::ProperSubset
    };
    Ok(UnionReport {
        p,
        t_star: u.t_star,
        r_star: u.r_star,
        per_generator: u.per_generator.iter().map(PolyReport::from).collect(),
        q: (&u.union).into(),
        f: (&f).into(),
        f_over_q: rem.is_zero().then(|| (&quot).into()),
        verdict: properness_label(verdict).into(),
    })
}

pub fn cmd_annihilator(
    a: &RMatrix,
    x: Option<&RVector>,
    p: Option<usize>,
    space_dim: Option<usize>,
) -> Result<AnnihilatorReport> {
    if x.is_none() && p.is_none() && space_dim.is_none() {
        return Err(Error::invalid("annihilator needs --vector, --p or --r"));
    }
    let vector_annihilator = x
        .map(|x| annihilator::min_annihilator_vector(a, x))
        .transpose()?;
    let reach_filter = match (x, p) {
        (Some(x), Some(p)) => Some(
            match annihilator::necessary_reach_filter(a, p, x)? {
                FilterVerdict::Pass => "pass",
                FilterVerdict::Fail => "fail",
            }
            .to_string(),
        ),
        _ => None,
    };
    let union = match (x, p) {
        (None, Some(p)) => Some(union_report(a, p)?),
        _ => None,
    };
    let space_annihilator = space_dim
        .map(|n| annihilator::min_annihilator_space(a, n))
        .transpose()?;
    Ok(AnnihilatorReport {
        vector: x.map(exact_vec),
        vector_annihilator: vector_annihilator.as_ref().map(PolyReport::from),
        reach_filter,
        union,
        space_dim,
        space_annihilator: space_annihilator.as_ref().map(PolyReport::from),
    })
}

// ---------------------------------------------------------------- report

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeReport {
    pub m: u64,
    pub k: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationRow {
    pub t1: usize,
    pub t2: usize,
    /// `equal`, `first_in_second`, `second_in_first` or `incomparable`.
    pub relation: String,
    pub intersection_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullReport {
    pub rows: usize,
    pub cols: usize,
    pub matrix: Vec<Vec<Q>>,
    pub p: usize,
    pub shape: Section<ShapeReport>,
    pub profile: Section<ProfileReport>,
    pub dims: Section<DimsReport>,
    pub subspaces: Section<Vec<SubspaceReport>>,
    pub annihilators: Section<UnionReport>,
    pub relations: Section<Vec<RelationRow>>,
}

impl FullReport {
    pub fn has_precondition_error(&self) -> bool {
        self.shape.is_precondition_error()
            || self.profile.is_precondition_error()
            || self.dims.is_precondition_error()
            || self.subspaces.is_precondition_error()
            || self.annihilators.is_precondition_error()
            || self.relations.is_precondition_error()
    }
}

fn inclusion_label(i: Inclusion) -> &'static str {
    match i {
        Inclusion::Equal => "equal",
        Inclusion::FirstInSecond => "first_in_second",
        Inclusion::SecondInFirst => "second_in_first",
        Inclusion::Incomparable => "incomparable",
    }
}

/// Horizon used by [`cmd_report`] when `A` is not dimension-bounded.
pub const UNBOUNDED_HORIZON: usize = 3;

/// Everything at once: profile, dimension table, `R_t` for `t ≤ t* + 2`,
/// annihilators with the properness verdict, and the inclusion table of
/// `R_{t*} … R_{t*+2}`. Sections fail independently.
pub fn cmd_report(a: &RMatrix, p: usize) -> Result<FullReport> {
    if p == 0 {
        return Err(Error::invalid("initial dimension p must be positive"));
    }
    let shape = bounded_shape(a);
    let t_star = with_shape(&shape, |m, k| {
        dimension::minimal_invariant_time(m, k, p as u64)
    });
    let profile = Section::from_result(with_shape(&shape, |m, k| cmd_profile(m, k, p as u64)));
    let dims = Section::from_result(with_shape(&shape, |m, k| cmd_dims(m, k, p as u64, None)));

    let horizon = t_star.as_ref().map_or(UNBOUNDED_HORIZON, |ts| ts + 2);
    let spaces: Result<Vec<Subspace<Rational>>> = (0..=horizon)
        .map(|t| reachability::reach_basis(a, p, t))
        .collect();
    let subspaces = Section::from_result(spaces.as_ref().map_err(Clone::clone).map(|s| {
        s.iter()
            .enumerate()
            .map(|(t, sp)| SubspaceReport::new(t, sp))
            .collect()
    }));
    let relations = Section::from_result(match (&spaces, &t_star) {
        (Ok(s), Ok(ts)) => relation_table(&s[*ts..], *ts),
        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
    });
    let annihilators = Section::from_result(union_report(a, p));

    Ok(FullReport {
        rows: a.rows(),
        cols: a.cols(),
        matrix: (0..a.rows())
            .map(|i| a.row(i).iter().cloned().map(Q).collect())
            .collect(),
        p,
        shape: Section::from_result(shape.map(|(m, k)| ShapeReport { m, k })),
        profile,
        dims,
        subspaces,
        annihilators,
        relations,
    })
}

fn with_shape<T>(shape: &Result<(u64, u64)>, f: impl FnOnce(u64, u64) -> Result<T>) -> Result<T> {
    match shape {
        Ok((m, k)) => f(*m, *k),
        Err(e) => Err(e.clone()),
    }
}

/// Pairwise relations of `spaces`, the first of which is `R_{first_t}`.
fn relation_table(spaces: &[Subspace<Rational>], first_t: usize) -> Result<Vec<RelationRow>> {
    let mut rows = Vec::new();
    for (i, s1) in spaces.iter().enumerate() {
        for (j, s2) in spaces.iter().enumerate().skip(i + 1) {
            let rel = reachability::subspace_relate(s1, s2)?;
            rows.push(RelationRow {
                t1: first_t + i,
                t2: first_t + j,
                relation: inclusion_label(rel.inclusion).into(),
                intersection_dim: rel.intersection_dim,
            });
        }
    }
    Ok(rows)
}

/// Any command's report, tagged by command name in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
// built once per invocation; boxing every variant buys nothing
#[allow(clippy::large_enum_variant)]
pub enum Report {
    Dims(DimsReport),
    Profile(ProfileReport),
    Reachdim(ReachDimReport),
    Basis(BasisReport),
    Member(MemberReport),
    Annihilator(AnnihilatorReport),
    Report(Box<FullReport>),
}

/// Top-level JSON document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub report: Report,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}
