use crate::crystal::is_yamanouchi;
use crate::error::Error;
use crate::partition::Partition;
use crate::shuffle::ShuffleDiagram;
use crate::tableau::{is_standard, Cell, Shape, ShapeKind, Tableau};

/// Disjoint `(i-square, (i+2)-square)` pairs with the `i`-square strictly
/// North and weakly East of its partner.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NEMatching {
    pub pairs: Vec<(Cell, Cell)>,
}

fn is_ne(low: Cell, high: Cell) -> bool {
    low.row < high.row && low.col >= high.col
}

/// Greedy maximum NE matching: `(i+2)`-squares east to west, each taking the
/// westmost unused `i`-square NE of it.
pub fn ne_matching(t: &Tableau, i: u32) -> NEMatching {
    let lows: Vec<Cell> = t.cells_with(i).collect();
    let mut highs: Vec<Cell> = t.cells_with(i + 2).collect();
    highs.sort_by(|a, b| b.col.cmp(&a.col).then(a.row.cmp(&b.row)));
    let mut used = vec![false; lows.len()];
    let mut pairs = Vec::new();
    for h in highs {
        let pick = (0..lows.len())
            .filter(|&k| !used[k] && is_ne(lows[k], h))
            .min_by_key(|&k| (lows[k].col, std::cmp::Reverse(lows[k].row)));
        if let Some(k) = pick {
            used[k] = true;
            pairs.push((lows[k], h));
        }
    }
    NEMatching { pairs }
}

pub fn ne_matching_max(t: &Tableau, i: u32) -> usize {
    ne_matching(t, i).pairs.len()
}

pub fn is_peelable(t: &Tableau, d: &ShuffleDiagram) -> bool {
    t.content() == d.content()
        && d.overlap_counts().iter().enumerate().all(|(k, &a)| a == 0 || ne_matching_max(t, k as u32 + 1) >= a)
}

/// Labels the diagram's squares `1..=N` in reverse reading order: top row
/// first, right to left within a row.
#[derive(Clone, Debug)]
pub struct SquareLabeling {
    cells: Vec<Cell>,
}

impl SquareLabeling {
    pub fn new(d: &ShuffleDiagram) -> Self {
        let mut cells: Vec<Cell> = d.shape().cells().collect();
        cells.sort_by(|a, b| a.row.cmp(&b.row).then(b.col.cmp(&a.col)));
        SquareLabeling { cells }
    }

    /// The square carrying `label` (1-based).
    pub fn cell(&self, label: usize) -> Cell {
        self.cells[label - 1]
    }

    pub fn label(&self, c: Cell) -> Option<usize> {
        self.cells.iter().position(|&x| x == c).map(|k| k + 1)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

fn positions(t: &Tableau) -> Vec<Cell> {
    let mut pos = vec![Cell::new(0, 0); t.size() + 1];
    for (c, v) in t.entries() {
        pos[v as usize] = c;
    }
    pos
}

pub fn is_compatible(t: &Tableau, d: &ShuffleDiagram) -> bool {
    if t.size() != d.size() || !is_standard(t) {
        return false;
    }
    let labels = SquareLabeling::new(d);
    let pos = positions(t);
    let shape = d.shape();
    for i in 1..labels.len() {
        let (a, b) = (labels.cell(i), labels.cell(i + 1));
        if a.row == b.row {
            // square i+1 directly left of square i
            let (p, q) = (pos[i], pos[i + 1]);
            if !(q.row <= p.row && q.col > p.col) {
                return false;
            }
        }
    }
    for i in 1..=labels.len() {
        if let Some(below) = shape.below(labels.cell(i)) {
            let j = labels.label(below).unwrap();
            let (p, q) = (pos[i], pos[j]);
            if !(p.row < q.row && p.col >= q.col) {
                return false;
            }
        }
    }
    true
}

/// Square `i` of the diagram receives the row of `i` in `t`.
pub fn phi(t: &Tableau, d: &ShuffleDiagram) -> Result<Tableau, Error> {
    if !is_compatible(t, d) {
        return Err(Error::NotCompatible);
    }
    let labels = SquareLabeling::new(d);
    let pos = positions(t);
    Tableau::from_cells(d.shape().clone(), (1..=labels.len()).map(|i| (labels.cell(i), pos[i].row as u32)))
}

fn check_yamanouchi(s: &Tableau, d: &ShuffleDiagram) -> Result<(), Error> {
    if s.shape() != d.shape() {
        return Err(Error::ShapeMismatch("tableau is not on the diagram".into()));
    }
    if !s.is_valid() {
        return Err(Error::InvalidTableau("not a shuffle tableau".into()));
    }
    if !is_yamanouchi(s) {
        return Err(Error::NotYamanouchi);
    }
    Ok(())
}

fn sorted_rows(mut rows: Vec<Vec<u32>>) -> Result<Tableau, Error> {
    for row in rows.iter_mut() {
        row.sort();
    }
    while rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    Tableau::from_rows(rows)
}

/// If square `i` holds `r`, label `i` goes to row `r`; rows are then sorted.
pub fn phi_inverse(s: &Tableau, d: &ShuffleDiagram) -> Result<Tableau, Error> {
    check_yamanouchi(s, d)?;
    let labels = SquareLabeling::new(d);
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); s.max_entry() as usize];
    for i in 1..=labels.len() {
        let r = s.get(labels.cell(i)).unwrap() as usize;
        rows[r - 1].push(i as u32);
    }
    sorted_rows(rows)
}

/// `k` copies of `i` in row `r` of `t` become `k` copies of `r` in diagram row `i`.
pub fn psi(t: &Tableau, d: &ShuffleDiagram) -> Result<Tableau, Error> {
    if t.shape().kind() != ShapeKind::Straight || !t.is_valid() {
        return Err(Error::InvalidTableau("expected a straight SSYT".into()));
    }
    if !is_peelable(t, d) {
        return Err(Error::NotPeelable);
    }
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); d.num_rows()];
    for (r, row) in t.rows().iter().enumerate() {
        for &v in row {
            rows[v as usize - 1].push(r as u32 + 1);
        }
    }
    for row in rows.iter_mut() {
        row.sort();
    }
    Tableau::new(d.shape().clone(), rows)
}

pub fn psi_inverse(s: &Tableau, d: &ShuffleDiagram) -> Result<Tableau, Error> {
    check_yamanouchi(s, d)?;
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); s.max_entry() as usize];
    for (i, row) in s.rows().iter().enumerate() {
        for &r in row {
            rows[r as usize - 1].push(i as u32 + 1);
        }
    }
    sorted_rows(rows)
}

/// Walks every peelable tableau of `d` (of shape `kappa` when given),
/// handing its rows to `visit`.
///
/// Values are placed one horizontal strip at a time; the NE condition for
/// `(v-2, v)` is checked as soon as value `v` is placed.
pub fn walk_peelable(d: &ShuffleDiagram, kappa: Option<&Partition>, visit: &mut dyn FnMut(&[Vec<u32>])) {
    let content = d.row_sizes();
    let n: usize = content.iter().sum();
    if let Some(k) = kappa {
        if k.size() != n {
            return;
        }
    }
    let max_rows = match kappa {
        Some(k) => k.len(),
        None => d.nonempty_rows(),
    };
    let mut w = Walker {
        content,
        a: d.overlap_counts(),
        bound: kappa.map(|k| k.padded(max_rows)),
        max_rows,
        rows: Vec::new(),
        strips: Vec::new(),
        visit,
    };
    w.place(0);
}

struct Walker<'a> {
    content: Vec<usize>,
    a: Vec<usize>,
    bound: Option<Vec<usize>>,
    max_rows: usize,
    rows: Vec<Vec<u32>>,
    /// per value: (row, first col, count), 0-based row and col
    strips: Vec<Vec<(usize, usize, usize)>>,
    visit: &'a mut dyn FnMut(&[Vec<u32>]),
}

impl Walker<'_> {
    fn place(&mut self, v: usize) {
        if v == self.content.len() {
            let done = match &self.bound {
                Some(b) => (0..self.max_rows).all(|r| self.rows.get(r).map_or(0, Vec::len) == b[r]),
                None => true,
            };
            if done {
                (self.visit)(&self.rows);
            }
            return;
        }
        let before: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        let mut add = Vec::new();
        self.strip(v, 0, self.content[v], &before, &mut add);
    }

    /// Chooses how many cells of value `v+1` go in row `r` and below.
    fn strip(&mut self, v: usize, r: usize, left: usize, before: &[usize], add: &mut Vec<usize>) {
        if left == 0 {
            self.apply(v, before, add);
            return;
        }
        if r >= self.max_rows || (r > 0 && before.get(r - 1).copied().unwrap_or(0) == 0) {
            return;
        }
        let cur = before.get(r).copied().unwrap_or(0);
        let mut cap = match r {
            0 => usize::MAX,
            _ => before[r - 1] - cur,
        };
        if let Some(b) = &self.bound {
            cap = cap.min(b[r].saturating_sub(cur));
        }
        for x in (0..=cap.min(left)).rev() {
            add.push(x);
            self.strip(v, r + 1, left - x, before, add);
            add.pop();
        }
    }

    fn apply(&mut self, v: usize, before: &[usize], add: &[usize]) {
        let value = v as u32 + 1;
        let mut strip = Vec::new();
        for (r, &x) in add.iter().enumerate() {
            if x == 0 {
                continue;
            }
            if r == self.rows.len() {
                self.rows.push(Vec::new());
            }
            let start = before.get(r).copied().unwrap_or(0);
            self.rows[r].extend(std::iter::repeat_n(value, x));
            strip.push((r, start, x));
        }
        self.strips.push(strip);
        if v < 2 || self.ne_ok(v) {
            self.place(v + 1);
        }
        let strip = self.strips.pop().unwrap();
        for &(r, start, _) in &strip {
            self.rows[r].truncate(start);
        }
        while self.rows.last().is_some_and(Vec::is_empty) {
            self.rows.pop();
        }
    }

    fn ne_ok(&self, v: usize) -> bool {
        let need = self.a[v - 2];
        if need == 0 {
            return true;
        }
        let cells = |s: &[(usize, usize, usize)]| -> Vec<(usize, usize)> {
            s.iter().flat_map(|&(r, c, x)| (c..c + x).map(move |col| (r, col))).collect()
        };
        let lows = cells(&self.strips[v - 2]);
        let mut highs = cells(&self.strips[v]);
        if lows.len() < need || highs.len() < need {
            return false;
        }
        highs.sort_by_key(|h| std::cmp::Reverse(h.1));
        let mut used = vec![false; lows.len()];
        let mut count = 0;
        for (hr, hc) in highs {
            let pick =
                (0..lows.len()).filter(|&k| !used[k] && lows[k].0 < hr && lows[k].1 >= hc).min_by_key(|&k| lows[k].1);
            if let Some(k) = pick {
                used[k] = true;
                count += 1;
                if count >= need {
                    return true;
                }
            }
        }
        false
    }
}

/// All peelable tableaux of shape `kappa`, in row-major lexicographic order.
pub fn enumerate_peelable(d: &ShuffleDiagram, kappa: &Partition) -> Vec<Tableau> {
    let mut out: Vec<Vec<Vec<u32>>> = Vec::new();
    walk_peelable(d, Some(kappa), &mut |rows| out.push(rows.to_vec()));
    out.sort();
    let shape = Shape::straight(kappa);
    out.into_iter().map(|rows| Tableau::new(shape.clone(), rows).unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate_ssyt, ssyt_bounded};
    use crate::fixtures::example_diagram;
    use crate::partition::SkewShape;
    use crate::tableau::{inverse_standardize, standardize};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Maximum bipartite matching by augmenting paths.
    fn bipartite_max(t: &Tableau, i: u32) -> usize {
        let lows: Vec<Cell> = t.cells_with(i).collect();
        let highs: Vec<Cell> = t.cells_with(i + 2).collect();
        let mut owner: Vec<Option<usize>> = vec![None; lows.len()];
        fn augment(h: usize, highs: &[Cell], lows: &[Cell], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
            for l in 0..lows.len() {
                if seen[l] || !is_ne(lows[l], highs[h]) {
                    continue;
                }
                seen[l] = true;
                if owner[l].is_none() || augment(owner[l].unwrap(), highs, lows, seen, owner) {
                    owner[l] = Some(h);
                    return true;
                }
            }
            false
        }
        (0..highs.len()).filter(|&h| augment(h, &highs, &lows, &mut vec![false; lows.len()], &mut owner)).count()
    }

    #[test]
    fn greedy_is_maximum() {
        for n in 0..=9 {
            for shape in Partition::all(n, n, n) {
                let max = 6.min(n as u32 + 2);
                for t in ssyt_bounded(&shape, max) {
                    for i in 1..=max.saturating_sub(2) {
                        assert_eq!(ne_matching_max(&t, i), bipartite_max(&t, i), "{t:?} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn example_peelable_tableaux() {
        let d = example_diagram();
        let kappa = p(&[4, 3, 2]);
        let all: Vec<Tableau> = enumerate_ssyt(&SkewShape::straight(kappa.clone()), &d.content()).collect();
        let peel: Vec<&Tableau> = all.iter().filter(|t| is_peelable(t, &d)).collect();
        assert_eq!(peel.len(), 3);
        for t in &peel {
            assert!(ne_matching_max(t, 1) >= 1 && ne_matching_max(t, 2) >= 2);
        }
        let fast = enumerate_peelable(&d, &kappa);
        assert_eq!(fast, peel.into_iter().cloned().collect::<Vec<_>>());
        assert_eq!(ne_matching_max(&all[0], 7), 0);
    }

    #[test]
    fn zero_overlaps_means_content_only() {
        let d = ShuffleDiagram::new("2".parse().unwrap(), "1".parse().unwrap());
        assert!(d.overlap_counts().iter().all(|&a| a == 0));
        for kappa in d.kappa_space() {
            let all = enumerate_ssyt(&SkewShape::straight(kappa.clone()), &d.content()).count();
            assert_eq!(enumerate_peelable(&d, &kappa).len(), all);
        }
    }

    #[test]
    fn phi_and_psi_on_example() {
        let d = example_diagram();
        let kappa = p(&[4, 3, 2]);
        for t in enumerate_peelable(&d, &kappa) {
            let s = psi(&t, &d).unwrap();
            assert!(is_yamanouchi(&s));
            assert_eq!(s.content().as_partition(), Some(kappa.clone()));
            let std = standardize(&t);
            assert!(is_compatible(&std, &d));
            assert_eq!(phi(&std, &d).unwrap(), s);
            assert_eq!(inverse_standardize(&std, &d).unwrap(), t);
            assert_eq!(psi_inverse(&s, &d).unwrap(), t);
            assert_eq!(phi_inverse(&s, &d).unwrap(), std);
        }
    }

    #[test]
    fn single_cell() {
        let d = ShuffleDiagram::new("1".parse().unwrap(), "".parse().unwrap());
        let t = Tableau::from_rows(vec![vec![1]]).unwrap();
        assert!(is_compatible(&t, &d));
        let s = phi(&t, &d).unwrap();
        assert_eq!(s.rows(), &[vec![1]]);
        assert_eq!(phi_inverse(&s, &d).unwrap(), t);
        assert_eq!(psi(&t, &d).unwrap(), s);
        assert_eq!(psi_inverse(&s, &d).unwrap(), t);
    }

    #[test]
    fn rejects_bad_inputs() {
        let d = example_diagram();
        let t = Tableau::from_rows(vec![vec![1, 2, 3, 4, 5, 6, 7, 8, 9]]).unwrap();
        assert_eq!(phi(&t, &d), Err(Error::NotCompatible));
        let ssyt = Tableau::from_rows(vec![vec![1, 1, 2, 2, 3, 3, 4, 4, 4]]).unwrap();
        assert_eq!(psi(&ssyt, &d), Err(Error::NotPeelable));
    }
}
