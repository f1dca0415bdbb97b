use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::crystal::is_yamanouchi;
use crate::enumerate::Fillings;
use crate::error::Error;
use crate::lr::Method;
use crate::partition::{Partition, SkewShape};
use crate::peelable::{psi, walk_peelable};
use crate::shuffle::ShuffleDiagram;
use crate::tableau::{Cell, Content, Shape, ShapeKind, Tableau};

/// Data of the generalized Jacobi–Trudi matrix `(h_{μ_i - ν_j})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JacobiTrudiSpec {
    pub mu: Partition,
    pub nu: Partition,
    pub n: usize,
}

impl JacobiTrudiSpec {
    pub fn new(mu: Partition, nu: Partition, n: usize) -> Result<Self, Error> {
        if mu.len() > n || nu.len() > n {
            return Err(Error::JacobiTrudi(format!("partitions longer than n = {n}")));
        }
        Ok(JacobiTrudiSpec { mu, nu, n })
    }

    pub fn shapes(&self) -> Result<(SkewShape, SkewShape), Error> {
        jacobi_trudi_shapes(&self.mu, &self.nu, self.n)
    }

    pub fn diagram(&self) -> Result<ShuffleDiagram, Error> {
        let (r, b) = self.shapes()?;
        Ok(ShuffleDiagram::new(r, b))
    }
}

/// The red and blue skew shapes of an `n x n` Jacobi–Trudi matrix.
///
/// With `k = ⌈n/2⌉`, red row `i` is `(ν_{2i-1}+i-k, μ_{2i-1}+i-k]` and blue row
/// `i` is `(ν_{2i}+i-k, μ_{2i}+i-k]`. If some part comes out negative, all four
/// sequences are translated by the same amount so the smallest part is 0;
/// this moves the whole diagram sideways and changes nothing else.
pub fn jacobi_trudi_shapes(mu: &Partition, nu: &Partition, n: usize) -> Result<(SkewShape, SkewShape), Error> {
    if mu.len() > n || nu.len() > n {
        return Err(Error::JacobiTrudi(format!("partitions longer than n = {n}")));
    }
    let k = n.div_ceil(2) as i64;
    let part = |p: &Partition, idx: usize, i: usize| p[idx - 1] as i64 + i as i64 - k;
    let red_o: Vec<i64> = (1..=n.div_ceil(2)).map(|i| part(mu, 2 * i - 1, i)).collect();
    let red_i: Vec<i64> = (1..=n.div_ceil(2)).map(|i| part(nu, 2 * i - 1, i)).collect();
    let blue_o: Vec<i64> = (1..=n / 2).map(|i| part(mu, 2 * i, i)).collect();
    let blue_i: Vec<i64> = (1..=n / 2).map(|i| part(nu, 2 * i, i)).collect();
    let all = [&red_o, &red_i, &blue_o, &blue_i];
    for (name, seq) in ["μ_R", "ν_R", "μ_B", "ν_B"].iter().zip(all) {
        if seq.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::JacobiTrudi(format!("{name} = {seq:?} is not weakly decreasing")));
        }
    }
    let low = all.iter().flat_map(|s| s.iter()).copied().min().unwrap_or(0).min(0);
    let shift = |s: &[i64]| -> Vec<usize> { s.iter().map(|&x| (x - low) as usize).collect() };
    let skew = |o: &[i64], i: &[i64], name: &str| {
        let outer = Partition::new(shift(o)).unwrap();
        let inner = Partition::new(shift(i)).unwrap();
        SkewShape::new(outer, inner).map_err(|_| Error::JacobiTrudi(format!("{name} inner not contained in outer")))
    };
    Ok((skew(&red_o, &red_i, "red")?, skew(&blue_o, &blue_i, "blue")?))
}

/// A boundary point of a Temperley–Lieb diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    L(usize),
    R(usize),
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::L(i) => write!(f, "L{i}"),
            Endpoint::R(i) => write!(f, "R{i}"),
        }
    }
}

impl std::str::FromStr for Endpoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("bad endpoint {s:?}"));
        let (side, idx) = s.split_at(1.min(s.len()));
        let idx: usize = idx.parse().map_err(|_| bad())?;
        match side {
            "L" if idx > 0 => Ok(Endpoint::L(idx)),
            "R" if idx > 0 => Ok(Endpoint::R(idx)),
            _ => Err(bad()),
        }
    }
}

/// A perfect noncrossing matching of `L1..Ln` (one side, top to bottom) and
/// `R1..Rn` (other side, top to bottom).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingMatching {
    n: usize,
    pairs: Vec<(Endpoint, Endpoint)>,
}

impl NoncrossingMatching {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (Endpoint, Endpoint)>) -> Result<Self, Error> {
        let mut pairs: Vec<(Endpoint, Endpoint)> =
            pairs.into_iter().map(|(a, b)| if a <= b { (a, b) } else { (b, a) }).collect();
        pairs.sort();
        let mut seen = BTreeSet::new();
        for &(a, b) in &pairs {
            for e in [a, b] {
                let idx = match e {
                    Endpoint::L(i) | Endpoint::R(i) => i,
                };
                if idx == 0 || idx > n || !seen.insert(e) {
                    return Err(Error::Strands(format!("endpoint {e} repeated or out of range")));
                }
            }
        }
        if seen.len() != 2 * n {
            return Err(Error::Strands("matching is not perfect".into()));
        }
        let m = NoncrossingMatching { n, pairs };
        if !m.is_noncrossing() {
            return Err(Error::Strands(format!("matching {m} crosses")));
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(Endpoint, Endpoint)] {
        &self.pairs
    }

    pub fn contains(&self, a: Endpoint, b: Endpoint) -> bool {
        self.pairs.contains(&if a <= b { (a, b) } else { (b, a) })
    }

    /// Position on the boundary circle: down the L side, up the R side.
    fn position(&self, e: Endpoint) -> usize {
        match e {
            Endpoint::L(i) => i - 1,
            Endpoint::R(i) => 2 * self.n - i,
        }
    }

    fn is_noncrossing(&self) -> bool {
        let arcs: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.position(a), self.position(b));
                (x.min(y), x.max(y))
            })
            .collect();
        arcs.iter().all(|&(a, b)| arcs.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
    }

    /// Every noncrossing matching on `2n` points.
    pub fn all(n: usize) -> Vec<NoncrossingMatching> {
        let order: Vec<Endpoint> = (1..=n).map(Endpoint::L).chain((1..=n).rev().map(Endpoint::R)).collect();
        fn rec(points: &[Endpoint]) -> Vec<Vec<(Endpoint, Endpoint)>> {
            if points.is_empty() {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for j in (1..points.len()).step_by(2) {
                for inside in rec(&points[1..j]) {
                    for outside in rec(&points[j + 1..]) {
                        let mut m = vec![(points[0], points[j])];
                        m.extend(inside.iter().copied());
                        m.extend(outside);
                        out.push(m);
                    }
                }
            }
            out
        }
        let mut all: Vec<_> = rec(&order).into_iter().map(|p| NoncrossingMatching::new(n, p).unwrap()).collect();
        all.sort();
        all
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).unwrap()
    }
}

impl Serialize for NoncrossingMatching {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.pairs.len()))?;
        for (a, b) in &self.pairs {
            seq.serialize_element(&[a.to_string(), b.to_string()])?;
        }
        seq.end()
    }
}

impl fmt::Display for NoncrossingMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Value {
    NegInf,
    Real(u32),
    PosInf,
}

/// A lattice point of the strand picture: squares at even `row + col`,
/// gaps between them at odd `row + col`.
pub type Node = (i64, i64);

/// The line segments drawn for a shuffle tableau of a Jacobi–Trudi diagram.
#[derive(Clone, Debug)]
pub struct StrandDiagram {
    n: usize,
    pub segments: BTreeSet<(Node, Node)>,
}

impl StrandDiagram {
    pub fn build(t: &Tableau, n: usize) -> Result<Self, Error> {
        let shape = t.shape();
        if shape.kind() != ShapeKind::Shuffle || shape.num_rows() > n {
            return Err(Error::Strands(format!("expected a shuffle tableau with at most {n} rows")));
        }
        let bounds = |r: usize| -> (i64, i64) {
            let idx = r - 1;
            (shape.inner().get(idx).copied().unwrap_or(0) as i64, shape.outer().get(idx).copied().unwrap_or(0) as i64)
        };
        let value = |(r, c): Node| -> Value {
            if r <= 0 {
                return Value::NegInf;
            }
            if r as usize > n {
                return Value::PosInf;
            }
            let (inner, outer) = bounds(r as usize);
            let j = if r % 2 == 1 { (c + 1).div_euclid(2) } else { c.div_euclid(2) };
            if j <= inner {
                Value::NegInf
            } else if j > outer {
                Value::PosInf
            } else {
                Value::Real(t.get(Cell::new(r as usize, c as usize)).expect("cell in shape"))
            }
        };
        let real = |p: Node| matches!(value(p), Value::Real(_));
        let width = 2 * shape.outer().iter().copied().max().unwrap_or(0) as i64;
        let mut segments = BTreeSet::new();
        let mut add = |a: Node, b: Node| {
            segments.insert(if a <= b { (a, b) } else { (b, a) });
        };
        for r in 0..=n as i64 {
            for c in -4..=width + 4 {
                if (r + 1 + c) % 2 != 0 {
                    continue;
                }
                let (bl, tr) = ((r + 1, c), (r, c + 1));
                let (tl, br) = ((r, c), (r + 1, c + 1));
                if !real(bl) && !real(tr) {
                    continue;
                }
                let inside = |p: Node| p.0 >= 1 && p.0 <= n as i64;
                if value(bl) <= value(tr) {
                    for (a, b) in [(bl, tl), (tr, br)] {
                        if inside(a) && inside(b) {
                            add(a, b);
                        }
                    }
                } else {
                    for (a, b) in [(bl, br), (tr, tl)] {
                        if (real(a) || real(b)) && inside(a) && inside(b) {
                            add(a, b);
                        }
                    }
                }
            }
        }
        Ok(StrandDiagram { n, segments })
    }

    /// Follows every strand from its endpoint to read off the matching.
    pub fn matching(&self) -> Result<NoncrossingMatching, Error> {
        let mut adj: BTreeMap<Node, Vec<Node>> = BTreeMap::new();
        for &(a, b) in &self.segments {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        if let Some((p, _)) = adj.iter().find(|(_, v)| v.len() > 2) {
            return Err(Error::Strands(format!("node {p:?} has degree > 2")));
        }
        let mut label: BTreeMap<Node, Endpoint> = BTreeMap::new();
        let mut pairs = Vec::new();
        for r in 1..=self.n as i64 {
            let ends: Vec<Node> = adj.iter().filter(|(p, v)| p.0 == r && v.len() == 1).map(|(&p, _)| p).collect();
            let any = adj.keys().any(|p| p.0 == r);
            match ends.as_slice() {
                [] if !any => pairs.push((Endpoint::L(r as usize), Endpoint::R(r as usize))),
                [first, .., last] if ends.len() == 2 => {
                    label.insert(*first, Endpoint::R(r as usize));
                    label.insert(*last, Endpoint::L(r as usize));
                }
                _ => {
                    return Err(Error::Strands(format!("row {r} has {} strand ends", ends.len())));
                }
            }
        }
        let mut visited: BTreeSet<Node> = BTreeSet::new();
        for (&start, &e) in &label {
            if visited.contains(&start) {
                continue;
            }
            let (mut prev, mut cur) = (start, start);
            visited.insert(cur);
            loop {
                let next = adj[&cur].iter().copied().find(|&x| x != prev);
                match next {
                    Some(x) if x != prev => {
                        prev = cur;
                        cur = x;
                        visited.insert(cur);
                    }
                    _ => break,
                }
                if adj[&cur].len() == 1 {
                    break;
                }
            }
            let other =
                *label.get(&cur).ok_or_else(|| Error::Strands(format!("strand from {e} ends inside the picture")))?;
            pairs.push((e, other));
        }
        // closed loops carry no endpoints and do not affect the type
        NoncrossingMatching::new(self.n, pairs)
    }
}

/// The Temperley–Lieb type of a shuffle tableau of a Jacobi–Trudi diagram.
pub fn tl_type(t: &Tableau, n: usize) -> Result<NoncrossingMatching, Error> {
    StrandDiagram::build(t, n)?.matching()
}

/// Coefficients indexed by (type, shape).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ImmanantTable {
    pub entries: BTreeMap<(NoncrossingMatching, Partition), u64>,
}

impl ImmanantTable {
    pub fn get(&self, tau: &NoncrossingMatching, lambda: &Partition) -> u64 {
        self.entries.get(&(tau.clone(), lambda.clone())).copied().unwrap_or(0)
    }

    /// Sum over types.
    pub fn marginal(&self) -> crate::lr::CoeffTable {
        let mut m: BTreeMap<Partition, u64> = BTreeMap::new();
        for ((_, l), c) in &self.entries {
            *m.entry(l.clone()).or_default() += c;
        }
        m.into_iter().collect()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Row<'a> {
            #[serde(rename = "type")]
            tau: &'a NoncrossingMatching,
            lambda: &'a [usize],
            coeff: u64,
        }
        let rows: Vec<Row> =
            self.entries.iter().map(|((tau, l), &coeff)| Row { tau, lambda: l.parts(), coeff }).collect();
        serde_json::to_string(&rows).unwrap()
    }
}

/// `Imm_τ(A_{μ,ν}) = Σ_λ c_{τ,λ} s_λ`, by the peelable route (types of the
/// ψ-images) or the Yamanouchi route (types of Yamanouchi tableaux).
pub fn immanant_expansion(spec: &JacobiTrudiSpec, method: Method) -> Result<ImmanantTable, Error> {
    let d = spec.diagram()?;
    let n = spec.n;
    let mut table = ImmanantTable::default();
    match method {
        Method::Peelable => {
            let mut found: Vec<Vec<Vec<u32>>> = Vec::new();
            walk_peelable(&d, None, &mut |rows| found.push(rows.to_vec()));
            for rows in found {
                let t = Tableau::from_rows(rows)?;
                let s = psi(&t, &d)?;
                let tau = tl_type(&s, n)?;
                *table.entries.entry((tau, t.shape().partition().unwrap())).or_default() += 1;
            }
        }
        Method::Yamanouchi => {
            let per_kappa: Vec<Result<Vec<(NoncrossingMatching, Partition)>, Error>> = d
                .kappa_space()
                .into_par_iter()
                .map(|kappa| {
                    Fillings::with_content(d.shape().clone(), &Content::from(&kappa))
                        .filter(is_yamanouchi)
                        .map(|s| Ok((tl_type(&s, n)?, kappa.clone())))
                        .collect()
                })
                .collect();
            for r in per_kappa {
                for key in r? {
                    *table.entries.entry(key).or_default() += 1;
                }
            }
        }
        Method::Classical => {
            return Err(Error::Parse("immanant expansion supports peelable or yamanouchi".into()));
        }
    }
    Ok(table)
}

/// Shape of the Jacobi–Trudi diagram as a tableau shape, for callers that
/// build tableaux by hand.
pub fn jacobi_trudi_shape(spec: &JacobiTrudiSpec) -> Result<Shape, Error> {
    Ok(spec.diagram()?.shape().clone())
}

/// A six-row tableau whose strand picture has closed loops and arcs on both sides.
pub(crate) fn figure_tableau() -> (Tableau, usize) {
    let spec = JacobiTrudiSpec::new(
        Partition::new(vec![9, 9, 7, 6, 4, 2]).unwrap(),
        Partition::new(vec![7, 4, 2, 1]).unwrap(),
        6,
    )
    .unwrap();
    let t = Tableau::new(
        jacobi_trudi_shape(&spec).unwrap(),
        vec![vec![1, 3], vec![2, 2, 2, 4, 4], vec![1, 1, 1, 2, 3], vec![1, 2, 4, 4, 4], vec![1, 2, 2, 3], vec![3, 4]],
    )
    .unwrap();
    (t, 6)
}
