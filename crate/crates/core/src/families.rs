//! Named graph families: highrises, shuttered highrises and a small catalog.
//!
//! Labeling is fixed. `highrise(m)` is `P_2 ⊠ P_k` with grid ids first
//! (`u·k + c` for row `u` and column `c`, so column `c` is the pair
//! `{c, k + c}`), then the apex on column 0, then the apex on column `k − 1`
//! when `m` is even. Shutters follow the apexes in insertion order.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::iso::{canonical_certificate, Certificate, MAX_CERTIFICATE_ORDER};

/// Parameters of `ℋ(m, r, Δ)`: order, number of shutters, maximum degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub m: usize,
    pub r: usize,
    pub max_degree: usize,
}

impl FamilyParams {
    pub fn new(m: usize, r: usize, max_degree: usize) -> Result<Self> {
        let p = FamilyParams { m, r, max_degree };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let FamilyParams { m, r, max_degree: d } = *self;
        let fail = |why: String| Err(Error::InvalidParameters(format!("(m={m}, r={r}, Δ={d}): {why}")));
        if d < 5 {
            return fail("Δ must be at least 5".into());
        }
        if r + 4 < d {
            return fail("r must be at least Δ−4".into());
        }
        if m < r + 5 {
            return fail("m must be at least r+5".into());
        }
        let base = m - r;
        let (slots, need) = if base % 2 == 0 {
            ((base - 2) / 2 * (d - 5), r as isize - 2)
        } else {
            ((base - 3) / 2 * (d - 5), r as isize - 1)
        };
        if (slots as isize) < need {
            return fail(format!("only {slots} extra shutter slots for {need} required"));
        }
        Ok(())
    }
}

fn columns(m: usize) -> Result<usize> {
    if m < 5 {
        return Err(Error::InvalidParameters(format!("highrise order must be at least 5, got {m}")));
    }
    Ok(if m % 2 == 1 { (m - 1) / 2 } else { (m - 2) / 2 })
}

/// The highrise `H_m`, `m ≥ 5`.
pub fn highrise(m: usize) -> Result<Graph> {
    let k = columns(m)?;
    let grid = Graph::path(2).strong_product(&Graph::path(k))?;
    let mut g = grid.with_new_vertex(VertexSet::from_iter([0, k]))?;
    if m.is_multiple_of(2) {
        g = g.with_new_vertex(VertexSet::from_iter([k - 1, 2 * k - 1]))?;
    }
    Ok(g)
}

/// True-twin pairs of degree at least 4, in lexicographic order. These are
/// the pairs a shutter may be attached to.
pub fn shutter_pairs(g: &Graph) -> Vec<(usize, usize)> {
    g.twin_pairs()
        .true_twins
        .into_iter()
        .filter(|p| p.degree >= 4)
        .map(|p| (p.u, p.v))
        .collect()
}

/// `ℋ(m, r, Δ)` with shutters placed greedily: each goes to the first
/// eligible pair whose current degree is at most `Δ − 1`.
pub fn shuttered_highrise(p: FamilyParams) -> Result<Graph> {
    p.validate()?;
    let mut g = highrise(p.m - p.r)?;
    for s in 0..p.r {
        let Some(&(u, v)) = shutter_pairs(&g).iter().find(|&&(u, _)| g.degree(u) < p.max_degree) else {
            return Err(Error::Infeasible(format!(
                "no twin pair below degree {} for shutter {} of {}",
                p.max_degree,
                s + 1,
                p.r
            )));
        };
        g = g.with_new_vertex(VertexSet::from_iter([u, v]))?;
    }
    Ok(g)
}

/// `ℋ(m, r, Δ)` with an explicit plan: shutter `i` goes to
/// `shutter_pairs(highrise(m − r))[plan[i]]`.
pub fn shuttered_highrise_with_plan(p: FamilyParams, plan: &[usize]) -> Result<Graph> {
    p.validate()?;
    if plan.len() != p.r {
        return Err(Error::InvalidParameters(format!(
            "plan has {} entries for {} shutters",
            plan.len(),
            p.r
        )));
    }
    let mut g = highrise(p.m - p.r)?;
    let pairs = shutter_pairs(&g);
    for &i in plan {
        let &(u, v) = pairs.get(i).ok_or_else(|| {
            Error::InvalidParameters(format!("pair index {i} out of range ({} pairs)", pairs.len()))
        })?;
        if g.degree(u) >= p.max_degree {
            return Err(Error::Infeasible(format!(
                "pair ({u}, {v}) already has degree {}",
                g.degree(u)
            )));
        }
        g = g.with_new_vertex(VertexSet::from_iter([u, v]))?;
    }
    Ok(g)
}

/// `S_n`: `K_2 + K̄_3` for `n = 5`, otherwise `ℋ(n, 1, 5)`.
pub fn singly_shuttered(n: usize) -> Result<Graph> {
    match n {
        5 => Graph::complete(2).join(&Graph::empty(3)),
        n if n >= 6 => shuttered_highrise(FamilyParams::new(n, 1, 5)?),
        _ => Err(Error::InvalidParameters(format!("singly shuttered highrise needs n ≥ 5, got {n}"))),
    }
}

/// `D_n`: `K_2 + K̄_4` for `n = 6`, otherwise `ℋ(n, 2, 5)` for even `n ≥ 8`.
pub fn doubly_shuttered(n: usize) -> Result<Graph> {
    match n {
        6 => Graph::complete(2).join(&Graph::empty(4)),
        n if n >= 8 && n % 2 == 0 => shuttered_highrise(FamilyParams::new(n, 2, 5)?),
        _ => Err(Error::InvalidParameters(format!(
            "doubly shuttered highrise needs n = 6 or even n ≥ 8, got {n}"
        ))),
    }
}

fn doubly_defined(n: usize) -> bool {
    n == 6 || (n >= 8 && n.is_multiple_of(2))
}

/// Fixed catalog of small graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Named {
    K24PlusK1,
    K2JoinK3Bar,
    K2JoinK4Bar,
    CubeQ3,
    K33,
    Heawood,
    Petersen,
}

impl Named {
    pub const ALL: [Named; 7] = [
        Named::K24PlusK1,
        Named::K2JoinK3Bar,
        Named::K2JoinK4Bar,
        Named::CubeQ3,
        Named::K33,
        Named::Heawood,
        Named::Petersen,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Named::K24PlusK1 => "k24_plus_k1",
            Named::K2JoinK3Bar => "k2_join_k3bar",
            Named::K2JoinK4Bar => "k2_join_k4bar",
            Named::CubeQ3 => "cube_q3",
            Named::K33 => "k33",
            Named::Heawood => "heawood",
            Named::Petersen => "petersen",
        }
    }

    pub fn build(self) -> Graph {
        let g = match self {
            // 2-side on 0..2, 4-side on 2..6, universal vertex 6.
            Named::K24PlusK1 => Graph::complete_bipartite(2, 4).join(&Graph::empty(1)),
            Named::K2JoinK3Bar => Graph::complete(2).join(&Graph::empty(3)),
            Named::K2JoinK4Bar => Graph::complete(2).join(&Graph::empty(4)),
            Named::CubeQ3 => {
                let edges: Vec<_> = (0..8usize)
                    .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
                    .filter(|&(u, v)| u < v)
                    .collect();
                Graph::new(8, &edges)
            }
            Named::K33 => Ok(Graph::complete_bipartite(3, 3)),
            // C_14 plus chords v ~ v+5 from each even v.
            Named::Heawood => {
                let mut edges: Vec<_> = (0..14).map(|v| (v, (v + 1) % 14)).collect();
                edges.extend((0..14).step_by(2).map(|v| (v, (v + 5) % 14)));
                Graph::new(14, &edges)
            }
            // Outer 5-cycle 0..5, spokes i ~ i+5, inner pentagram.
            Named::Petersen => {
                let mut edges = Vec::new();
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((i + 5, (i + 2) % 5 + 5));
                }
                Graph::new(10, &edges)
            }
        };
        g.expect("catalog constructions are valid")
    }
}

impl FromStr for Named {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Named::ALL
            .into_iter()
            .find(|n| n.id() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

pub fn named(name: &str) -> Result<Graph> {
    Ok(name.parse::<Named>()?.build())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExceptionClass {
    SinglyShuttered(usize),
    DoublyShuttered(usize),
    K24PlusK1,
    K2JoinK3Bar,
    NotExceptional,
}

impl ExceptionClass {
    /// The reference graph of this class, if it has one.
    pub fn reference(self) -> Option<Graph> {
        match self {
            ExceptionClass::SinglyShuttered(n) => singly_shuttered(n).ok(),
            ExceptionClass::DoublyShuttered(n) => doubly_shuttered(n).ok(),
            ExceptionClass::K24PlusK1 => Some(Named::K24PlusK1.build()),
            ExceptionClass::K2JoinK3Bar => Some(Named::K2JoinK3Bar.build()),
            ExceptionClass::NotExceptional => None,
        }
    }

    /// Exception classes of order `n`, in recognition order.
    pub fn candidates(n: usize) -> Vec<ExceptionClass> {
        let mut out = Vec::new();
        if n >= 5 {
            out.push(ExceptionClass::SinglyShuttered(n));
        }
        if doubly_defined(n) {
            out.push(ExceptionClass::DoublyShuttered(n));
        }
        if n == 7 {
            out.push(ExceptionClass::K24PlusK1);
        }
        if n == 5 {
            out.push(ExceptionClass::K2JoinK3Bar);
        }
        out
    }
}

impl fmt::Display for ExceptionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExceptionClass::SinglyShuttered(n) => write!(f, "S_{n}"),
            ExceptionClass::DoublyShuttered(n) => write!(f, "D_{n}"),
            ExceptionClass::K24PlusK1 => f.write_str("K_{2,4}+K_1"),
            ExceptionClass::K2JoinK3Bar => f.write_str("K_2+K3bar"),
            ExceptionClass::NotExceptional => f.write_str("not_exceptional"),
        }
    }
}

impl Serialize for ExceptionClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Precomputed certificates of every exception class up to the certificate cap.
#[derive(Clone, Debug)]
pub struct ExceptionRecognizer {
    refs: Vec<(ExceptionClass, Certificate)>,
}

impl Default for ExceptionRecognizer {
    fn default() -> Self {
        Self::new()
    }
}

impl ExceptionRecognizer {
    pub fn new() -> Self {
        let refs = (0..=MAX_CERTIFICATE_ORDER)
            .flat_map(ExceptionClass::candidates)
            .map(|c| {
                let g = c.reference().expect("candidate classes have references");
                (c, canonical_certificate(&g).expect("references are within the cap"))
            })
            .collect();
        ExceptionRecognizer { refs }
    }

    pub fn certificate(&self, class: ExceptionClass) -> Option<&Certificate> {
        self.refs.iter().find(|(c, _)| *c == class).map(|(_, cert)| cert)
    }

    /// First class, in recognition order, whose reference has this certificate.
    pub fn recognize_certificate(&self, cert: &Certificate) -> ExceptionClass {
        self.refs
            .iter()
            .find(|(_, c)| c == cert)
            .map_or(ExceptionClass::NotExceptional, |(class, _)| *class)
    }

    pub fn recognize(&self, g: &Graph) -> Result<ExceptionClass> {
        Ok(self.recognize_certificate(&canonical_certificate(g)?))
    }
}

pub fn recognize_exception(g: &Graph) -> Result<ExceptionClass> {
    let cert = canonical_certificate(g)?;
    for class in ExceptionClass::candidates(g.order()) {
        let reference = class.reference().expect("candidate classes have references");
        if canonical_certificate(&reference)? == cert {
            return Ok(class);
        }
    }
    Ok(ExceptionClass::NotExceptional)
}
