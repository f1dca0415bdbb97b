//! Exhaustive verification suites over small instances.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::bk::{bk, symmetry_map};
use crate::crystal::{
    apply_e, is_yamanouchi, leftmost_unmatched_upper, reading_word, rightmost_unmatched_lower, FlatCrystal,
};
use crate::enumerate::{ssyt_bounded, Fillings};
use crate::logconcave::{certify_schur_dominance, check_theorem_hypotheses, strip_family};
use crate::lr::{expand_product, Method};
use crate::partition::{Partition, SkewShape};
use crate::peelable::{is_compatible, is_peelable, phi, phi_inverse, psi, psi_inverse, walk_peelable};
use crate::shuffle::ShuffleDiagram;
use crate::tableau::{inverse_standardize, standardize, Cell, Content, Tableau};
use crate::tl::{immanant_expansion, tl_type, Endpoint, JacobiTrudiSpec, NoncrossingMatching};

/// Outcome of one suite: instances checked and failure descriptions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.instances += other.instances;
        self.failures.extend(other.failures);
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn peelables(d: &ShuffleDiagram) -> Vec<Tableau> {
    let mut out = Vec::new();
    walk_peelable(d, None, &mut |rows| out.push(Tableau::from_rows(rows.to_vec()).unwrap()));
    out
}

/// φ, φ⁻¹, ψ, ψ⁻¹ on every pair: each peelable tableau `T` of shape `κ`
/// maps under ψ to a Yamanouchi tableau of content `κ`, ψ factors as φ after
/// standardization, all inverses hold, and every Yamanouchi tableau is hit.
pub fn bijections(max_cells: usize) -> SuiteReport {
    let parts = shape_pairs(max_cells)
        .par_iter()
        .map(|(red, blue)| {
            let mut r = SuiteReport::new("");
            let d = ShuffleDiagram::new(red.clone(), blue.clone());
            let tag = |t: &Tableau, what: &str| format!("{red} * {blue} {t}: {what}");
            let mut images = BTreeSet::new();
            for t in peelables(&d) {
                let kappa = t.shape().partition().unwrap();
                let s = match psi(&t, &d) {
                    Ok(s) => s,
                    Err(e) => {
                        r.check(false, || tag(&t, &format!("ψ failed: {e}")));
                        continue;
                    }
                };
                r.check(is_yamanouchi(&s), || tag(&t, "ψ(T) not Yamanouchi"));
                r.check(s.content().as_partition() == Some(kappa.clone()), || {
                    tag(&t, "content of ψ(T) is not the shape of T")
                });
                r.check(psi_inverse(&s, &d).as_ref() == Ok(&t), || tag(&t, "ψ⁻¹ψ(T) != T"));
                let std = standardize(&t);
                r.check(is_compatible(&std, &d), || tag(&t, "std(T) not compatible"));
                r.check(phi(&std, &d).as_ref() == Ok(&s), || tag(&t, "φ(std T) != ψ(T)"));
                r.check(phi_inverse(&s, &d).as_ref() == Ok(&std), || tag(&t, "φ⁻¹ψ(T) != std(T)"));
                r.check(inverse_standardize(&std, &d).as_ref() == Ok(&t), || tag(&t, "destandardization fails"));
                images.insert(s);
            }
            let yam = FlatCrystal::new(d.shape());
            for kappa in d.kappa_space() {
                let mut fill = Fillings::with_content(d.shape().clone(), &Content::from(&kappa));
                while let Some(v) = fill.next_flat() {
                    if yam.is_yamanouchi(v) {
                        let s = Tableau::from_flat(d.shape(), v);
                        let back = psi_inverse(&s, &d);
                        let ok = back
                            .as_ref()
                            .is_ok_and(|t| t.shape().partition() == Some(kappa.clone()) && is_peelable(t, &d));
                        r.check(ok && images.contains(&s), || {
                            format!("{red} * {blue} {s}: Yamanouchi tableau missed by ψ")
                        });
                    }
                }
            }
            r
        })
        .collect();
    merge("bijections", parts)
}

/// The fixed tableau whose `BK_2` image is checked below.
fn bk_sample() -> (Tableau, Tableau) {
    let t =
        Tableau::from_rows(vec![vec![1, 1, 1, 1, 2, 2, 2, 2, 3], vec![2, 2, 3, 3, 3, 3], vec![3, 4, 4, 5]]).unwrap();
    let b =
        Tableau::from_rows(vec![vec![1, 1, 1, 1, 2, 2, 2, 3, 3], vec![2, 2, 2, 3, 3, 3], vec![3, 4, 4, 5]]).unwrap();
    (t, b)
}

/// Bender–Knuth involutions on every straight SSYT with at most `ssyt_cells`
/// cells and entries at most `max`, and the symmetry map between
/// `red ⊛ blue` and `blue ⊛ red` on every pair with at most `max_cells` cells.
pub fn bk_suite(ssyt_cells: usize, max: u32, max_cells: usize) -> SuiteReport {
    let shapes: Vec<Partition> = (0..=ssyt_cells).flat_map(|n| Partition::all(n, max as usize, n)).collect();
    let mut parts: Vec<SuiteReport> = shapes
        .par_iter()
        .map(|p| {
            let mut r = SuiteReport::new("");
            for t in ssyt_bounded(p, max) {
                for i in 1..max {
                    let b = bk(&t, i);
                    let (c, cb) = (t.content(), b.content());
                    let swapped = c.get(i) == cb.get(i + 1) && c.get(i + 1) == cb.get(i);
                    r.check(b.is_valid() && bk(&b, i) == t && swapped, || format!("BK_{i} on {t}"));
                }
            }
            r
        })
        .collect();
    let (t, b) = bk_sample();
    let mut sample = SuiteReport::new("");
    sample.check(bk(&t, 2) == b, || "BK_2 of the sample".into());
    parts.push(sample);
    parts.extend(
        shape_pairs(max_cells)
            .par_iter()
            .map(|(red, blue)| {
                let mut r = SuiteReport::new("");
                let d = ShuffleDiagram::new(red.clone(), blue.clone());
                let sw = d.swapped();
                let (here, there) = (peelables(&d), peelables(&sw));
                let mut images = BTreeSet::new();
                for t in &here {
                    match symmetry_map(t, &d) {
                        Ok(s) => {
                            let ok = s.shape() == t.shape()
                                && is_peelable(&s, &sw)
                                && symmetry_map(&s, &sw).as_ref() == Ok(t);
                            r.check(ok, || format!("{red} * {blue} {t}: image {s} bad"));
                            images.insert(s);
                        }
                        Err(e) => r.check(false, || format!("{red} * {blue} {t}: {e}")),
                    }
                }
                let there: BTreeSet<Tableau> = there.into_iter().collect();
                r.check(images == there, || format!("{red} * {blue}: image is not the swapped peelable set"));
                r
            })
            .collect::<Vec<_>>(),
    );
    merge("bk", parts)
}

/// θ certificates over the strip family with `n` parts.
pub fn theta_suite(n: usize, max_a: usize, extra: usize) -> SuiteReport {
    let parts = strip_family(n, max_a, extra)
        .par_iter()
        .map(|inst| {
            let mut r = SuiteReport::new("");
            let h = check_theorem_hypotheses(inst);
            r.check(h.holds(), || format!("{inst}: {}", h.first_failure().unwrap_or("")));
            match certify_schur_dominance(inst) {
                Ok(rep) => {
                    r.instances += rep.injection.len() as u64;
                    r.failures.extend(rep.failures.into_iter().map(|f| format!("{inst}: {f}")));
                }
                Err(e) => r.check(false, || format!("{inst}: {e}")),
            }
            r
        })
        .collect();
    merge("theta", parts)
}

/// Distinct skew shapes (by cell set) with at most `rows` rows and parts at
/// most `cols`, including the empty shape, in a fixed order.
pub fn skew_pool(rows: usize, cols: usize) -> Vec<SkewShape> {
    let box_ = Partition::in_box(rows, cols);
    let mut seen = BTreeSet::new();
    for o in &box_ {
        for i in &box_ {
            if let Ok(s) = SkewShape::new(o.clone(), i.clone()) {
                seen.insert((s.size(), s.normalized()));
            }
        }
    }
    seen.into_iter().map(|(_, s)| s).collect()
}

/// Ordered pairs from the 3x4 pool with at most `max_cells` cells in total.
pub fn shape_pairs(max_cells: usize) -> Vec<(SkewShape, SkewShape)> {
    let pool = skew_pool(3, 4);
    let mut out = Vec::new();
    for a in &pool {
        for b in &pool {
            if a.size() + b.size() <= max_cells {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn merge(name: &str, parts: Vec<SuiteReport>) -> SuiteReport {
    let mut r = SuiteReport::new(name);
    for p in parts {
        r.absorb(p);
    }
    r
}

/// Peelable, Yamanouchi and classical counts agree for every pair and κ.
pub fn equivalence(max_cells: usize) -> SuiteReport {
    let parts = shape_pairs(max_cells)
        .par_iter()
        .map(|(red, blue)| {
            let mut r = SuiteReport::new("");
            let p = expand_product(red, blue, Method::Peelable);
            let y = expand_product(red, blue, Method::Yamanouchi);
            let c = expand_product(red, blue, Method::Classical);
            let d = crate::ShuffleDiagram::new(red.clone(), blue.clone());
            for k in d.kappa_space() {
                let (a, b, e) = (p.get(&k), y.get(&k), c.get(&k));
                r.check(a == b && b == e, || format!("{red} * {blue} at {k}: {a} {b} {e}"));
            }
            r
        })
        .collect();
    merge("equivalence", parts)
}

/// Crystal laws on every shuffle tableau of `d` with entries at most `max`:
/// `E_i` and `F_i` act on the `i`-reading word as on letters, undo each
/// other, and every connected component has exactly one Yamanouchi element,
/// whose content is a partition.
pub fn crystal_diagram(d: &ShuffleDiagram, max: u32) -> SuiteReport {
    let mut r = SuiteReport::new("");
    let shape = d.shape();
    let n = shape.size();
    let fc = FlatCrystal::new(shape);
    let mut verts: Vec<u32> = Vec::new();
    let mut fill = Fillings::bounded(shape.clone(), max);
    while let Some(v) = fill.next_flat() {
        verts.extend_from_slice(v);
    }
    let count = verts.len().checked_div(n).unwrap_or(1);
    let at = |k: usize| &verts[k * n..(k + 1) * n];
    // dense index on base-`max` keys, shared per thread and reset afterwards
    let weights: Vec<usize> = (0..n).map(|p| (max as usize).pow((n - 1 - p) as u32)).collect();
    let key = |v: &[u32]| -> usize { v.iter().zip(&weights).map(|(&x, w)| (x as usize - 1) * w).sum() };
    thread_local! {
        static INDEX: std::cell::RefCell<Vec<u32>> = const { std::cell::RefCell::new(Vec::new()) };
    }
    let keys: Vec<usize> = (0..count).map(|k| key(at(k))).collect();
    let mut index = INDEX.with(|c| std::mem::take(&mut *c.borrow_mut()));
    let span = (max as usize).pow(n as u32);
    if index.len() < span {
        index.resize(span, u32::MAX);
    }
    for (k, &x) in keys.iter().enumerate() {
        index[x] = k as u32;
    }
    let none = usize::MAX;
    let ops = max.saturating_sub(1) as usize;
    let mut e_to = vec![none; count * ops];
    let mut f_to = vec![none; count * ops];
    let mut parent: Vec<usize> = (0..count).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let tag = |k: usize, i: u32, what: &str| {
        format!("{} * {} {:?} i={i}: {what}", d.red(), d.blue(), Tableau::from_flat(shape, at(k)).rows())
    };
    let mut buf = vec![0u32; n];
    let mut word: Vec<u32> = Vec::new();
    for (k, &k_key) in keys.iter().enumerate() {
        for i in 1..max {
            let slot = k * ops + i as usize - 1;
            word.clear();
            word.extend(fc.word_letters(at(k), i));
            if word.is_empty() {
                continue;
            }
            for raise in [false, true] {
                let pos = if raise { rightmost_unmatched_lower(&word, i) } else { leftmost_unmatched_upper(&word, i) };
                let (res, name, to) = if raise { (fc.f(at(k), i), "F", i + 1) } else { (fc.e(at(k), i), "E", i) };
                match (res, pos) {
                    (Ok(Some(idx)), Some(pos)) => {
                        buf.copy_from_slice(at(k));
                        buf[idx] = to;
                        let target = word.iter().enumerate().map(|(p, &l)| if p == pos { to } else { l });
                        r.check(fc.word_letters(&buf, i).eq(target), || {
                            tag(k, i, &format!("word of {name} T differs"))
                        });
                        let slot_key = k_key + (to as usize) * weights[idx] - (at(k)[idx] as usize) * weights[idx];
                        match index.get(slot_key).copied().filter(|&j| j != u32::MAX).map(|j| j as usize) {
                            Some(j) => {
                                if raise {
                                    f_to[slot] = j;
                                } else {
                                    e_to[slot] = j;
                                    let (a, b) = (root(&mut parent, k), root(&mut parent, j));
                                    parent[a] = b;
                                }
                            }
                            None => r.check(false, || tag(k, i, &format!("{name} T is not semistandard"))),
                        }
                    }
                    (Ok(None), None) => {}
                    (Ok(_), _) => r.check(false, || tag(k, i, &format!("{name} defined iff the word allows it"))),
                    (Err(e), _) => r.check(false, || tag(k, i, &e.to_string())),
                }
            }
        }
    }
    for k in 0..count {
        for i in 0..ops {
            let (e, f) = (e_to[k * ops + i], f_to[k * ops + i]);
            if e != none {
                r.check(f_to[e * ops + i] == k, || tag(k, i as u32 + 1, "F E T != T"));
            }
            if f != none {
                r.check(e_to[f * ops + i] == k, || tag(k, i as u32 + 1, "E F T != T"));
            }
        }
    }
    for &x in &keys {
        index[x] = u32::MAX;
    }
    INDEX.with(|c| *c.borrow_mut() = index);
    let mut highest: HashMap<usize, Vec<usize>> = HashMap::new();
    for k in 0..count {
        let c = root(&mut parent, k);
        let entry = highest.entry(c).or_default();
        if fc.is_yamanouchi(at(k)) {
            entry.push(k);
        }
    }
    for ys in highest.values() {
        r.check(ys.len() == 1, || {
            format!("{} * {}: component with {} Yamanouchi elements", d.red(), d.blue(), ys.len())
        });
        if let [y] = ys.as_slice() {
            let content = Tableau::from_flat(shape, at(*y)).content();
            r.check(content.as_partition().is_some(), || tag(*y, 0, "Yamanouchi content not a partition"));
        }
    }
    r
}

/// Diagrams of [`shape_pairs`] up to translations that keep the red/blue
/// parity of rows and columns; such translates have identical crystals.
pub fn distinct_diagrams(max_cells: usize) -> Vec<ShuffleDiagram> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (red, blue) in shape_pairs(max_cells) {
        let d = ShuffleDiagram::new(red, blue);
        let cells: Vec<Cell> = d.shape().cells().collect();
        let dr = cells.iter().map(|c| c.row).min().map_or(0, |r| 2 * ((r - 1) / 2));
        let dc = cells.iter().map(|c| c.col).min().map_or(0, |c| 2 * ((c - 1) / 2));
        let mut key: Vec<(usize, usize)> = cells.iter().map(|c| (c.row - dr, c.col - dc)).collect();
        key.sort();
        if seen.insert(key) {
            out.push(d);
        }
    }
    out
}

/// [`crystal_diagram`] over every diagram with at most `max_cells` cells,
/// plus the expected reading words and `E_1` action of a fixed example.
pub fn crystal(max_cells: usize, max: u32) -> SuiteReport {
    let parts = distinct_diagrams(max_cells).par_iter().map(|d| crystal_diagram(d, max)).collect();
    let mut r = merge("crystal", parts);
    let t = overlap_tableau();
    r.check(reading_word(&t, 1).render(5) == "2 | 2 | | 2 | 1 2", || "w_1 of the example".into());
    r.check(reading_word(&t, 2).render(5) == "2 2 | 2 2 | 2 2 2 3 | 3 3 3 | 2", || "w_2 of the example".into());
    let e = apply_e(&t, 1);
    let changed: Vec<Cell> = e
        .iter()
        .flat_map(|e| t.entries().filter(|&(c, v)| e.get(c) != Some(v)).map(|x| x.0).collect::<Vec<_>>())
        .collect();
    r.check(changed == vec![Cell::new(5, 1)] && e.unwrap().get(Cell::new(5, 1)) == Some(1), || {
        "E_1 of the example".into()
    });
    r
}

/// A tableau on red (7,6,2)/(2,1) and blue (6,3)/(1) with many overlaps.
pub fn overlap_tableau() -> Tableau {
    let red = "7,6,2/2,1".parse().unwrap();
    let blue = "6,3/1".parse().unwrap();
    Tableau::new(
        crate::Shape::shuffle(&red, &blue),
        vec![vec![1, 1, 1, 1, 2], vec![1, 2, 3, 3, 3], vec![1, 2, 2, 2, 3], vec![2, 2, 3], vec![2, 2]],
    )
    .unwrap()
}

/// Every Jacobi–Trudi spec with `n <= max_n` and parts at most `max_part`
/// whose shapes are defined.
pub fn jacobi_trudi_specs(max_n: usize, max_part: usize) -> Vec<JacobiTrudiSpec> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pool = Partition::in_box(n, max_part);
        for mu in &pool {
            for nu in &pool {
                let spec = JacobiTrudiSpec { mu: mu.clone(), nu: nu.clone(), n };
                if spec.shapes().is_ok() {
                    out.push(spec);
                }
            }
        }
    }
    out
}

/// Both immanant routes agree, types are noncrossing, and summing over types
/// gives the product expansion.
pub fn tl(max_n: usize, max_part: usize) -> SuiteReport {
    let parts = jacobi_trudi_specs(max_n, max_part)
        .par_iter()
        .map(|spec| {
            let mut r = SuiteReport::new("");
            let tag = || format!("n={} mu={} nu={}", spec.n, spec.mu, spec.nu);
            let (p, y) =
                match (immanant_expansion(spec, Method::Peelable), immanant_expansion(spec, Method::Yamanouchi)) {
                    (Ok(p), Ok(y)) => (p, y),
                    (Err(e), _) | (_, Err(e)) => {
                        r.check(false, || format!("{}: {e}", tag()));
                        return r;
                    }
                };
            r.check(p == y, || format!("{}: routes differ", tag()));
            let d = spec.diagram().unwrap();
            let c = expand_product(d.red(), d.blue(), Method::Classical);
            r.check(p.marginal() == c, || format!("{}: marginal differs from product", tag()));
            let types: BTreeSet<_> = p.entries.keys().map(|(t, _)| t.clone()).collect();
            let catalan = NoncrossingMatching::all(spec.n).len();
            r.check(types.len() <= catalan, || format!("{}: {} types", tag(), types.len()));
            r
        })
        .collect();
    let mut r = merge("tl", parts);
    let (t, n) = crate::tl::figure_tableau();
    match tl_type(&t, n) {
        Ok(m) => {
            use Endpoint::{L, R};
            let want = NoncrossingMatching::new(
                6,
                [(L(1), L(2)), (L(4), L(5)), (L(3), R(1)), (L(6), R(4)), (R(2), R(3)), (R(5), R(6))],
            )
            .unwrap();
            r.check(m == want, || format!("example figure traced to {m}"));
        }
        Err(e) => r.check(false, || format!("example figure: {e}")),
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pool_size() {
        assert_eq!(skew_pool(3, 4).len(), 321);
    }

    #[test]
    fn small_equivalence() {
        let r = equivalence(5);
        assert!(r.passed(), "{:?}", &r.failures[..r.failures.len().min(5)]);
    }

    #[test]
    fn small_crystal() {
        let r = crystal(5, 4);
        assert!(r.passed(), "{:?}", &r.failures[..r.failures.len().min(5)]);
    }

    #[test]
    fn small_bijections() {
        let r = bijections(5);
        assert!(r.passed(), "{:?}", &r.failures[..r.failures.len().min(5)]);
    }

    #[test]
    fn small_bk() {
        let r = bk_suite(5, 4, 5);
        assert!(r.passed(), "{:?}", &r.failures[..r.failures.len().min(5)]);
    }

    #[test]
    fn small_theta() {
        let r = theta_suite(3, 3, 1);
        assert!(r.passed() && r.instances > 0, "{:?}", &r.failures[..r.failures.len().min(5)]);
    }

    #[test]
    fn small_tl() {
        let r = tl(3, 3);
        assert!(r.passed(), "{:?}", &r.failures[..r.failures.len().min(5)]);
    }
}
