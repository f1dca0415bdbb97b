//! Schur log-concavity for a strip family: hypothesis checks, the injection
//! θ between peelable sets, its inverse, and a dominance certificate.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::partition::{Partition, SkewShape};
use crate::peelable::{is_peelable, walk_peelable};
use crate::shuffle::ShuffleDiagram;
use crate::tableau::{Cell, Tableau};

/// Four weights of equal length `n`, compared as `s_ν s_ρ` against `s_λ s_μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeightQuadruple {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub nu: Vec<i64>,
    pub rho: Vec<i64>,
}

fn show(v: &[i64]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", s.join(","))
}

fn to_partition(v: &[i64]) -> Option<Partition> {
    if v.iter().any(|&x| x < 0) {
        return None;
    }
    Partition::new(v.iter().map(|&x| x as usize).collect()).ok()
}

impl WeightQuadruple {
    pub fn new(lambda: Vec<i64>, mu: Vec<i64>, nu: Vec<i64>, rho: Vec<i64>) -> Self {
        WeightQuadruple { lambda, mu, nu, rho }
    }

    /// `ν = λ - (e_m + … + e_k)` and `ρ = μ + (e_m + … + e_k)`.
    pub fn strip(lambda: Vec<i64>, mu: Vec<i64>, m: usize, k: usize) -> Self {
        let mut nu = lambda.clone();
        let mut rho = mu.clone();
        for i in m..=k.min(lambda.len()) {
            nu[i - 1] -= 1;
        }
        for i in m..=k.min(mu.len()) {
            rho[i - 1] += 1;
        }
        WeightQuadruple { lambda, mu, nu, rho }
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    /// `λ ⊛ μ` and `ν ⊛ ρ`, when all four weights are partitions.
    pub fn diagrams(&self) -> Result<(ShuffleDiagram, ShuffleDiagram), Error> {
        let p = |v: &[i64]| {
            to_partition(v)
                .map(SkewShape::straight)
                .ok_or_else(|| Error::Hypotheses(format!("{} is not a partition", show(v))))
        };
        Ok((ShuffleDiagram::new(p(&self.lambda)?, p(&self.mu)?), ShuffleDiagram::new(p(&self.nu)?, p(&self.rho)?)))
    }
}

impl fmt::Display for WeightQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ={} μ={} ν={} ρ={}", show(&self.lambda), show(&self.mu), show(&self.nu), show(&self.rho))
    }
}

/// A quadruple together with the strip parameters `m ≤ k` and the width `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ThetaInstance {
    pub q: WeightQuadruple,
    pub m: usize,
    pub k: usize,
    pub a: usize,
}

impl ThetaInstance {
    pub fn new(q: WeightQuadruple, m: usize, k: usize, a: usize) -> Self {
        ThetaInstance { q, m, k, a }
    }
}

impl fmt::Display for ThetaInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} m={} k={} a={}", self.q, self.m, self.k, self.a)
    }
}

/// `test_i - test_j` lies weakly between `λ_i - λ_j` and `μ_i - μ_j` for all `i, j`.
pub fn in_parallelepiped(test: &[i64], lambda: &[i64], mu: &[i64]) -> bool {
    let n = test.len();
    if lambda.len() != n || mu.len() != n {
        return false;
    }
    (0..n).all(|i| {
        (0..n).all(|j| {
            let (x, y) = (lambda[i] - lambda[j], mu[i] - mu[j]);
            let t = test[i] - test[j];
            x.min(y) <= t && t <= x.max(y)
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
}

/// Hypothesis checks in a fixed order; the first failed hard check is the
/// diagnostic. Soft checks are reported but never fail the instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub checks: Vec<Check>,
    pub consequences: Vec<Check>,
    pub soft: Vec<Check>,
}

impl HypothesisReport {
    /// The assumptions themselves (without their derived consequences).
    pub fn assumptions_hold(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn holds(&self) -> bool {
        self.assumptions_hold() && self.consequences.iter().all(|c| c.ok)
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.checks.iter().chain(&self.consequences).find(|c| !c.ok).map(|c| c.name.as_str())
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            holds: bool,
            first_failure: Option<&'a str>,
            #[serde(flatten)]
            report: &'a HypothesisReport,
        }
        serde_json::to_string(&Out { holds: self.holds(), first_failure: self.first_failure(), report: self }).unwrap()
    }
}

/// Checks that `λ = (a^k, 1^{n-k-1}, 0)`, `ν = λ - (e_m + … + e_k)`,
/// `λ + μ = ν + ρ`, all four are partitions and `ν, ρ ∈ P_{λ,μ}`; then the
/// consequences `a = λ_m > μ_m ≥ … ≥ μ_k` and `μ_{m-1} > μ_m`.
pub fn check_theorem_hypotheses(inst: &ThetaInstance) -> HypothesisReport {
    let ThetaInstance { q, m, k, a } = inst;
    let (m, k, a) = (*m, *k, *a);
    let n = q.n();
    let mut checks = Vec::new();
    let push = |list: &mut Vec<Check>, name: &str, ok: bool| list.push(Check { name: name.into(), ok });

    let lengths = [&q.mu, &q.nu, &q.rho].iter().all(|v| v.len() == n) && n > 0;
    push(&mut checks, "weights have different lengths", lengths);
    let params = 1 <= m && m <= k && k < n && a >= 1;
    push(&mut checks, "need 1 ≤ m ≤ k ≤ n-1 and a ≥ 1", params);
    if !(lengths && params) {
        return HypothesisReport { checks, consequences: vec![], soft: vec![] };
    }
    let a_ = a as i64;
    let hook: Vec<i64> = (1..=n)
        .map(|i| {
            if i <= k {
                a_
            } else if i < n {
                1
            } else {
                0
            }
        })
        .collect();
    push(&mut checks, "λ is not (a^k,1^(n-k-1),0)", q.lambda == hook);
    let strip = WeightQuadruple::strip(q.lambda.clone(), q.mu.clone(), m, k);
    push(&mut checks, "ν≠λ−(e_m+…+e_k)", q.nu == strip.nu);
    let sums = (0..n).all(|i| q.lambda[i] + q.mu[i] == q.nu[i] + q.rho[i]);
    push(&mut checks, "λ+μ≠ν+ρ", sums);
    for (name, v) in [("λ", &q.lambda), ("μ", &q.mu), ("ν", &q.nu), ("ρ", &q.rho)] {
        push(&mut checks, &format!("{name} is not a partition"), to_partition(v).is_some());
    }
    push(&mut checks, "ν∉P(λ,μ)", in_parallelepiped(&q.nu, &q.lambda, &q.mu));
    push(&mut checks, "ρ∉P(λ,μ)", in_parallelepiped(&q.rho, &q.lambda, &q.mu));

    let mu = |i: usize| q.mu[i - 1];
    let mut consequences = Vec::new();
    let chain = q.lambda[m - 1] == a_ && a_ > mu(m) && (m..k).all(|i| mu(i) >= mu(i + 1));
    push(&mut consequences, "a = λ_m > μ_m ≥ … ≥ μ_k fails", chain);
    push(&mut consequences, "μ_(m-1) > μ_m fails", m == 1 || mu(m - 1) > mu(m));

    // The third consequence names an index ℓ that is not fixed by its
    // statement; both natural readings are evaluated.
    let mut soft = Vec::new();
    for last in [k, k + 1] {
        let ok = last <= n && (m..=k).all(|i| mu(i) - mu(last) < a_);
        push(&mut soft, &format!("μ_i − μ_{last} ≤ a−1 for m ≤ i ≤ k"), ok);
    }
    HypothesisReport { checks, consequences, soft }
}

/// Squares holding `v` that can be changed by one while keeping the tableau
/// semistandard: raised to `v+1` when `v` is odd, lowered to `v-1` when even.
/// Sorted by column.
pub fn changeable_squares(t: &Tableau, v: u32) -> Vec<Cell> {
    let shape = t.shape();
    let mut out = Vec::new();
    for (r, row) in t.rows().iter().enumerate() {
        let hits: Vec<usize> = (0..row.len()).filter(|&i| row[i] == v).collect();
        let pick = if v % 2 == 1 { hits.last() } else { hits.first() };
        let Some(&i) = pick else { continue };
        let c = shape.cell(r, i);
        let blocked = if v % 2 == 1 {
            shape.below(c).and_then(|b| t.get(b)) == Some(v + 1)
        } else {
            v == 0 || shape.above(c).and_then(|b| t.get(b)) == Some(v - 1)
        };
        if !blocked {
            out.push(c);
        }
    }
    out.sort_by_key(|c| (c.col, c.row));
    out
}

/// What θ did: the raised squares `s_m, …`, the lowered squares `t_{k+1}, …`,
/// the path, and the tableau after each stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaTrace {
    pub s_squares: Vec<Cell>,
    pub t_squares: Vec<Cell>,
    pub path: Vec<Cell>,
    pub snapshots: Vec<(String, Tableau)>,
}

impl ThetaTrace {
    pub fn to_json(&self, image: &Tableau) -> String {
        let cells = |v: &[Cell]| -> Vec<[usize; 2]> { v.iter().map(|c| [c.row, c.col]).collect() };
        let snaps: Vec<serde_json::Value> =
            self.snapshots.iter().map(|(label, t)| serde_json::json!({ "stage": label, "rows": t.rows() })).collect();
        serde_json::json!({
            "image": image.rows(),
            "s": cells(&self.s_squares),
            "t": cells(&self.t_squares),
            "path": cells(&self.path),
            "snapshots": snaps,
        })
        .to_string()
    }
}

/// Steps 1 and 2: raise the chosen `2j-1` to `2j` for `m ≤ j ≤ k`. Returns
/// the raised squares; stops early if some square is missing.
fn raise_strip(t: &Tableau, m: usize, k: usize) -> (Tableau, Vec<Cell>) {
    let mut cur = t.clone();
    let mut s: Vec<Cell> = Vec::new();
    for j in m..=k {
        let v = 2 * j as u32 - 1;
        let from = s.last().map_or(0, |c| c.col);
        match changeable_squares(&cur, v).into_iter().find(|c| c.col >= from) {
            Some(c) => {
                cur.set(c, v + 1);
                s.push(c);
            }
            None => break,
        }
    }
    (cur, s)
}

fn path_from(t: &Tableau, s: &[Cell], m: usize, k: usize, a: usize) -> Vec<Cell> {
    let shape = t.shape();
    let mut path = Vec::new();
    let mut h = 0;
    for j in m..=k {
        let idx = j - m;
        if idx > s.len() {
            break;
        }
        let limit = s.get(idx).map_or(a, |c| c.col);
        let min_row = if idx == 0 { 1 } else { s[idx - 1].row + 1 };
        let v = 2 * j as u32 - 1;
        for col in h + 1..=limit {
            let hit = t.cells_with(v).find(|c| c.col == col && c.row >= min_row);
            if let Some(c) = hit {
                if let Some(b) = shape.below(c).filter(|&b| t.get(b) == Some(v + 1)) {
                    path.push(b);
                    h = col;
                }
            }
        }
    }
    path
}

/// The path of θ: runs of `2j`-squares directly below scanned `(2j-1)`-squares.
pub fn theta_path(t: &Tableau, inst: &ThetaInstance) -> Vec<Cell> {
    let (_, s) = raise_strip(t, inst.m, inst.k);
    path_from(t, &s, inst.m, inst.k, inst.a)
}

fn require(inst: &ThetaInstance) -> Result<(ShuffleDiagram, ShuffleDiagram), Error> {
    let report = check_theorem_hypotheses(inst);
    if let Some(f) = report.first_failure() {
        return Err(Error::Hypotheses(f.to_string()));
    }
    inst.q.diagrams()
}

/// Swap loop shared by θ and its inverse. `pick` returns the pair
/// (square to raise to `2j`, square to lower to `2j-1`).
fn swap_until_peelable(
    cur: &mut Tableau,
    target: &ShuffleDiagram,
    k: usize,
    mut pick: impl FnMut(&Tableau, u32) -> Result<(Cell, Cell), Error>,
    mut record: impl FnMut(&Tableau, Cell, Cell, u32),
) -> Result<(), Error> {
    let cap = 2 * cur.shape().num_rows();
    let mut j = k + 1;
    while !is_peelable(cur, target) {
        if j - k > cap {
            return Err(Error::Theta(format!("no peelable tableau after {cap} swaps")));
        }
        let v = 2 * j as u32;
        let (up, down) = pick(cur, v)?;
        cur.set(up, v);
        cur.set(down, v - 1);
        if !cur.is_valid() {
            return Err(Error::Theta(format!("swapping {} and {v} broke semistandardness", v - 1)));
        }
        record(cur, up, down, v);
        j += 1;
    }
    Ok(())
}

fn unique_square(t: &Tableau, v: u32) -> Result<Cell, Error> {
    let cells: Vec<Cell> = t.cells_with(v).collect();
    match cells.as_slice() {
        [c] => Ok(*c),
        _ => Err(Error::Theta(format!("expected one {v}-square, found {}", cells.len()))),
    }
}

/// The injection from `λ⊛μ`-peelable to `ν⊛ρ`-peelable tableaux.
pub fn theta(t: &Tableau, inst: &ThetaInstance) -> Result<(Tableau, ThetaTrace), Error> {
    let (domain, target) = require(inst)?;
    if !t.is_valid() || !is_peelable(t, &domain) {
        return Err(Error::NotPeelable);
    }
    let (m, k) = (inst.m, inst.k);
    let (mut cur, mut s_squares) = raise_strip(t, m, k);
    if s_squares.len() != k - m + 1 {
        let j = m + s_squares.len();
        return Err(Error::Theta(format!("no changeable {}-square for s_{j}", 2 * j - 1)));
    }
    let path = path_from(t, &s_squares, m, k, inst.a);
    let mut snapshots = vec![("steps 1-2".to_string(), cur.clone())];
    let mut t_squares = Vec::new();
    swap_until_peelable(
        &mut cur,
        &target,
        k,
        |cur, v| {
            let s = unique_square(cur, v - 1)?;
            let t = changeable_squares(cur, v)
                .last()
                .copied()
                .ok_or_else(|| Error::Theta(format!("no changeable {v}-square")))?;
            Ok((s, t))
        },
        |cur, s, t, v| {
            s_squares.push(s);
            t_squares.push(t);
            snapshots.push((format!("swap {} {v}", v - 1), cur.clone()));
        },
    )?;
    Ok((cur, ThetaTrace { s_squares, t_squares, path, snapshots }))
}

/// Recovers `T` from `θ(T)`.
pub fn theta_inverse(image: &Tableau, inst: &ThetaInstance) -> Result<Tableau, Error> {
    let (domain, _) = require(inst)?;
    let (m, k, a) = (inst.m, inst.k, inst.a);
    let mut cur = image.clone();
    for i in m..=k {
        let v = 2 * i as u32 - 1;
        let missing: Vec<usize> = (1..=a).filter(|&col| !image.cells_with(v).any(|c| c.col == col)).collect();
        let [col] = missing.as_slice() else {
            return Err(Error::Theta(format!("{} of the first {a} columns lack {v}", missing.len())));
        };
        let c = image
            .cells_with(v + 1)
            .find(|c| c.col == *col)
            .ok_or_else(|| Error::Theta(format!("column {col} has no {}", v + 1)))?;
        cur.set(c, v);
    }
    swap_until_peelable(
        &mut cur,
        &domain,
        k,
        |cur, v| {
            let t = unique_square(cur, v - 1)?;
            let s = cur
                .cells_with(v)
                .max_by_key(|c| (c.col, c.row))
                .ok_or_else(|| Error::Theta(format!("no {v}-square")))?;
            Ok((t, s))
        },
        |_, _, _, _| {},
    )?;
    if !cur.is_valid() {
        return Err(Error::Theta("recovered filling is not semistandard".into()));
    }
    Ok(cur)
}

fn digest(t: &Tableau) -> String {
    let h = Sha256::digest(t.to_json().as_bytes());
    h.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KappaCounts {
    pub kappa: Vec<usize>,
    pub lower: u64,
    pub upper: u64,
}

/// Result of running θ over every `λ⊛μ`-peelable tableau of an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominanceReport {
    pub instance: ThetaInstance,
    pub counts: Vec<KappaCounts>,
    pub injection: Vec<(String, String)>,
    /// Inputs that needed at least one swap after the strip was raised.
    pub swapped: u64,
    pub failures: Vec<String>,
    pub passed: bool,
}

impl DominanceReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).unwrap()
    }
}

fn tally(d: &ShuffleDiagram) -> (BTreeMap<Partition, u64>, Vec<Tableau>) {
    let mut all = Vec::new();
    walk_peelable(d, None, &mut |rows| all.push(Tableau::from_rows(rows.to_vec()).unwrap()));
    let mut counts = BTreeMap::new();
    for t in &all {
        *counts.entry(t.shape().partition().unwrap()).or_default() += 1;
    }
    (counts, all)
}

fn path_ok(t: &Tableau, path: &[Cell], m: usize, k: usize) -> bool {
    let vals: Vec<u32> = path.iter().map(|&c| t.get(c).unwrap()).collect();
    vals.windows(2).all(|w| w[0] <= w[1])
        && vals.iter().all(|&v| 2 * m as u32 <= v && v <= 2 * k as u32)
        && path.iter().enumerate().all(|(i, c)| c.col == i + 1)
}

/// Applies θ to every `λ⊛μ`-peelable tableau and checks that the images are
/// `ν⊛ρ`-peelable of the same shape, distinct, inverted by
/// [`theta_inverse`], and hence that `c^κ_{λ,μ} ≤ c^κ_{ν,ρ}` for every `κ`.
pub fn certify_schur_dominance(inst: &ThetaInstance) -> Result<DominanceReport, Error> {
    let (domain, target) = require(inst)?;
    let (m, k, a) = (inst.m, inst.k, inst.a);
    let (lower, inputs) = tally(&domain);
    let (upper, _) = tally(&target);
    let odd: Vec<u32> = (1..=k as u32).map(|j| 2 * j - 1).collect();
    let results: Vec<(String, Option<Tableau>, bool, Vec<String>)> = inputs
        .par_iter()
        .map(|t| {
            let mut bad = Vec::new();
            for col in 1..=a {
                if !odd.iter().all(|&v| t.cells_with(v).any(|c| c.col == col)) {
                    bad.push(format!("{}: column {col} lacks an odd value ≤ {}", digest(t), 2 * k - 1));
                }
            }
            let mut swapped = false;
            let image = match theta(t, inst) {
                Ok((image, trace)) => {
                    swapped = !trace.t_squares.is_empty();
                    if !path_ok(t, &trace.path, m, k) {
                        bad.push(format!("{}: path {:?} malformed", digest(t), trace.path));
                    }
                    if image.shape() != t.shape() || !is_peelable(&image, &target) {
                        bad.push(format!("{}: image not peelable of the same shape", digest(t)));
                    }
                    match theta_inverse(&image, inst) {
                        Ok(back) if &back == t => {}
                        Ok(_) => bad.push(format!("{}: inverse returns a different tableau", digest(t))),
                        Err(e) => bad.push(format!("{}: inverse failed: {e}", digest(t))),
                    }
                    Some(image)
                }
                Err(e) => {
                    bad.push(format!("{}: {e}", digest(t)));
                    None
                }
            };
            (digest(t), image, swapped, bad)
        })
        .collect();
    let mut failures = Vec::new();
    let mut injection = Vec::new();
    let mut seen = HashSet::new();
    let mut swapped = 0;
    for (h, image, sw, bad) in results {
        failures.extend(bad);
        swapped += sw as u64;
        if let Some(image) = image {
            let hi = digest(&image);
            if !seen.insert(image) {
                failures.push(format!("{h}: image {hi} already hit"));
            }
            injection.push((h, hi));
        }
    }
    let mut counts = Vec::new();
    let kappas: std::collections::BTreeSet<&Partition> = lower.keys().chain(upper.keys()).collect();
    for kappa in kappas {
        let (l, u) = (lower.get(kappa).copied().unwrap_or(0), upper.get(kappa).copied().unwrap_or(0));
        if l > u {
            failures.push(format!("κ={kappa}: {l} > {u}"));
        }
        counts.push(KappaCounts { kappa: kappa.parts().to_vec(), lower: l, upper: u });
    }
    let passed = failures.is_empty();
    Ok(DominanceReport { instance: inst.clone(), counts, injection, swapped, failures, passed })
}

/// Every instance with `n` parts, `2 ≤ a ≤ max_a`, `1 ≤ m ≤ k ≤ n-1` and
/// `μ_n = 0` whose assumptions hold. The assumptions leave `μ_1` unbounded
/// when `m > 1`, so `μ_1 ≤ a + extra` is imposed.
pub fn strip_family(n: usize, max_a: usize, extra: usize) -> Vec<ThetaInstance> {
    let mut out = Vec::new();
    for a in 2..=max_a {
        for k in 1..n {
            let lambda: Vec<i64> = (1..=n)
                .map(|i| {
                    if i <= k {
                        a as i64
                    } else if i < n {
                        1
                    } else {
                        0
                    }
                })
                .collect();
            for mu in Partition::in_box(n - 1, a + extra) {
                let mu: Vec<i64> = mu.padded(n).into_iter().map(|x| x as i64).collect();
                for m in 1..=k {
                    let q = WeightQuadruple::strip(lambda.clone(), mu.clone(), m, k);
                    let inst = ThetaInstance::new(q, m, k, a);
                    if check_theorem_hypotheses(&inst).assumptions_hold() {
                        out.push(inst);
                    }
                }
            }
        }
    }
    out
}
