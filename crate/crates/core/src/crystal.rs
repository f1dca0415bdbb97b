use std::collections::HashMap;

use serde::Serialize;

use crate::error::Error;
use crate::shuffle::{enumerate_shuffle_tableaux, ShuffleDiagram};
use crate::tableau::{Cell, Shape, Tableau};

/// The `i`-reading word: non-overlapped `i` and `i+1` entries, read bottom
/// row to top row and left to right within a row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReadingWord {
    pub i: u32,
    pub letters: Vec<u32>,
    pub positions: Vec<Cell>,
}

impl ReadingWord {
    /// Letters separated by spaces with `|` between consecutive diagram rows,
    /// bottom row first, e.g. `2 | 2 | | 2 | 1 2`.
    pub fn render(&self, num_rows: usize) -> String {
        let mut tokens: Vec<String> = Vec::new();
        for row in (1..=num_rows).rev() {
            if row != num_rows {
                tokens.push("|".into());
            }
            for (l, p) in self.letters.iter().zip(&self.positions) {
                if p.row == row {
                    tokens.push(l.to_string());
                }
            }
        }
        tokens.join(" ")
    }

    /// Index of the leftmost unmatched `i+1`, reading `i+1` as `(` and `i` as `)`.
    pub fn leftmost_unmatched_upper(&self) -> Option<usize> {
        leftmost_unmatched_upper(&self.letters, self.i)
    }

    /// Index of the rightmost unmatched `i`.
    pub fn rightmost_unmatched_lower(&self) -> Option<usize> {
        rightmost_unmatched_lower(&self.letters, self.i)
    }

    /// The letter sequence after applying `E_i`.
    pub fn apply_e(&self) -> Option<Vec<u32>> {
        let k = self.leftmost_unmatched_upper()?;
        let mut w = self.letters.clone();
        w[k] = self.i;
        Some(w)
    }

    /// The letter sequence after applying `F_i`.
    pub fn apply_f(&self) -> Option<Vec<u32>> {
        let k = self.rightmost_unmatched_lower()?;
        let mut w = self.letters.clone();
        w[k] = self.i + 1;
        Some(w)
    }
}

/// Crystal operators on the flat row-major entries of a fixed shape.
///
/// All tableau-level operators go through this type.
pub struct FlatCrystal {
    cells: Vec<Cell>,
    order: Vec<usize>,
    up: Vec<Option<usize>>,
    down: Vec<Option<usize>>,
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl FlatCrystal {
    pub fn new(shape: &Shape) -> Self {
        let cells: Vec<Cell> = shape.cells().collect();
        let index = |c: Cell| cells.iter().position(|&x| x == c);
        let step = shape.step();
        let mut order: Vec<usize> = (0..cells.len()).collect();
        order.sort_by_key(|&k| (std::cmp::Reverse(cells[k].row), cells[k].col));
        let side = |k: usize, right: bool| {
            let c = cells[k];
            let col = if right { c.col + step } else { c.col.checked_sub(step)? };
            index(Cell::new(c.row, col))
        };
        FlatCrystal {
            order,
            up: cells.iter().map(|&c| shape.above(c).and_then(index)).collect(),
            down: cells.iter().map(|&c| shape.below(c).and_then(index)).collect(),
            left: (0..cells.len()).map(|k| side(k, false)).collect(),
            right: (0..cells.len()).map(|k| side(k, true)).collect(),
            cells,
        }
    }

    pub fn cell(&self, k: usize) -> Cell {
        self.cells[k]
    }

    /// `(flat index, letter)` pairs of the `i`-reading word of the filling
    /// `get`, without allocating.
    fn letters<'a, G: Fn(usize) -> u32>(
        &'a self,
        get: &'a G,
        i: u32,
    ) -> impl DoubleEndedIterator<Item = (usize, u32)> + 'a {
        self.order.iter().filter_map(move |&k| {
            let v = get(k);
            let overlapped = if v == i {
                self.down[k].map(get) == Some(i + 1)
            } else if v == i + 1 {
                self.up[k].map(get) == Some(i)
            } else {
                return None;
            };
            (!overlapped).then_some((k, v))
        })
    }

    /// Letters of the `i`-reading word.
    pub fn word_letters<'a>(&'a self, vals: &'a [u32], i: u32) -> impl Iterator<Item = u32> + 'a {
        self.order.iter().filter_map(move |&k| {
            let v = vals[k];
            let overlapped = if v == i {
                self.down[k].map(|d| vals[d]) == Some(i + 1)
            } else if v == i + 1 {
                self.up[k].map(|u| vals[u]) == Some(i)
            } else {
                return None;
            };
            (!overlapped).then_some(v)
        })
    }

    /// `(flat index, letter)` pairs of the `i`-reading word.
    pub fn word(&self, vals: &[u32], i: u32) -> Vec<(usize, u32)> {
        self.letters(&|k| vals[k], i).collect()
    }

    fn valid_at<G: Fn(usize) -> u32>(&self, get: &G, k: usize) -> bool {
        let v = get(k);
        self.left[k].is_none_or(|x| get(x) <= v)
            && self.right[k].is_none_or(|x| get(x) >= v)
            && self.up[k].is_none_or(|x| get(x) < v)
            && self.down[k].is_none_or(|x| get(x) > v)
    }

    /// Flat index changed by `E_i`, if `E_i` applies.
    pub fn e(&self, vals: &[u32], i: u32) -> Result<Option<usize>, Error> {
        if i == 0 {
            return Ok(None);
        }
        // right to left: an `i+1` is unmatched when no pending `i` is left
        let mut pending = 0usize;
        let mut hit = None;
        for (k, l) in self.letters(&|k| vals[k], i).rev() {
            if l == i {
                pending += 1;
            } else if pending > 0 {
                pending -= 1;
            } else {
                hit = Some(k);
            }
        }
        hit.map(|k| self.realize(vals, i, k, i + 1, i)).transpose()
    }

    /// Flat index changed by `F_i`, if `F_i` applies.
    pub fn f(&self, vals: &[u32], i: u32) -> Result<Option<usize>, Error> {
        if i == 0 {
            return Ok(None);
        }
        let mut depth = 0usize;
        let mut hit = None;
        for (k, l) in self.letters(&|k| vals[k], i) {
            if l == i + 1 {
                depth += 1;
            } else if depth > 0 {
                depth -= 1;
            } else {
                hit = Some(k);
            }
        }
        hit.map(|k| self.realize(vals, i, k, i, i + 1)).transpose()
    }

    /// Finds the single-square edit `from -> to` whose result is
    /// semistandard and whose word is the old word with the letter at
    /// `direct` changed, trying `direct` itself first.
    fn realize(&self, vals: &[u32], i: u32, direct: usize, from: u32, to: u32) -> Result<usize, Error> {
        let old = |k: usize| vals[k];
        let ok = |idx: usize| {
            let get = |k: usize| if k == idx { to } else { vals[k] };
            if !self.valid_at(&get, idx) {
                return false;
            }
            let target = self.letters(&old, i).map(|(k, l)| if k == direct { to } else { l });
            self.letters(&get, i).map(|x| x.1).eq(target)
        };
        // the direct square is unoverlapped, so a semistandard edit there
        // leaves every other square's overlap status alone
        let direct_get = |k: usize| if k == direct { to } else { vals[k] };
        if self.valid_at(&direct_get, direct) {
            return Ok(direct);
        }
        let hits: Vec<usize> = (0..vals.len()).filter(|&idx| vals[idx] == from && ok(idx)).collect();
        match hits.as_slice() {
            [idx] => Ok(*idx),
            _ => Err(Error::InvalidTableau(format!(
                "crystal operator (i={i}) on {vals:?} has {} realizations",
                hits.len()
            ))),
        }
    }

    /// No `E_i` applies for any `i`.
    pub fn is_yamanouchi(&self, vals: &[u32]) -> bool {
        let max = vals.iter().copied().max().unwrap_or(0);
        (1..max).all(|i| {
            let mut open = 0usize;
            for &k in &self.order {
                let v = vals[k];
                if v == i + 1 {
                    if self.up[k].map(|u| vals[u]) != Some(i) {
                        open += 1;
                    }
                } else if v == i && self.down[k].map(|d| vals[d]) != Some(i + 1) {
                    open = open.saturating_sub(1);
                }
            }
            open == 0
        })
    }
}

pub(crate) fn leftmost_unmatched_upper(letters: &[u32], i: u32) -> Option<usize> {
    let mut open: Vec<usize> = Vec::new();
    for (k, &l) in letters.iter().enumerate() {
        if l == i + 1 {
            open.push(k);
        } else {
            open.pop();
        }
    }
    open.first().copied()
}

pub(crate) fn rightmost_unmatched_lower(letters: &[u32], i: u32) -> Option<usize> {
    let mut depth = 0usize;
    let mut last = None;
    for (k, &l) in letters.iter().enumerate() {
        if l == i + 1 {
            depth += 1;
        } else if depth > 0 {
            depth -= 1;
        } else {
            last = Some(k);
        }
    }
    last
}

pub fn reading_word(t: &Tableau, i: u32) -> ReadingWord {
    let fc = FlatCrystal::new(t.shape());
    let (positions, letters) = fc.word(&t.rows().concat(), i).into_iter().map(|(k, l)| (fc.cell(k), l)).unzip();
    ReadingWord { i, letters, positions }
}

fn apply(t: &Tableau, i: u32, raise: bool) -> Result<Option<Tableau>, Error> {
    if i == 0 {
        return Ok(None);
    }
    let fc = FlatCrystal::new(t.shape());
    let mut vals = t.rows().concat();
    let hit = if raise { fc.f(&vals, i)? } else { fc.e(&vals, i)? };
    Ok(hit.map(|k| {
        vals[k] = if raise { i + 1 } else { i };
        Tableau::from_flat(t.shape(), &vals)
    }))
}

/// Like [`apply_e`], reporting a missing or ambiguous realization as an error.
pub fn try_apply_e(t: &Tableau, i: u32) -> Result<Option<Tableau>, Error> {
    apply(t, i, false)
}

/// Like [`apply_f`], reporting a missing or ambiguous realization as an error.
pub fn try_apply_f(t: &Tableau, i: u32) -> Result<Option<Tableau>, Error> {
    apply(t, i, true)
}

/// Changes the leftmost unmatched `i+1` of `w_i(t)` to `i`.
///
/// Panics if no single-square edit realizes the new word.
pub fn apply_e(t: &Tableau, i: u32) -> Option<Tableau> {
    try_apply_e(t, i).unwrap()
}

/// Changes the rightmost unmatched `i` of `w_i(t)` to `i+1`.
///
/// Panics if no single-square edit realizes the new word.
pub fn apply_f(t: &Tableau, i: u32) -> Option<Tableau> {
    try_apply_f(t, i).unwrap()
}

/// No `E_i` applies for any `i`.
pub fn is_yamanouchi(t: &Tableau) -> bool {
    FlatCrystal::new(t.shape()).is_yamanouchi(&t.rows().concat())
}

/// The crystal graph on all shuffle tableaux of a diagram with bounded
/// entries; edges are `F_i` arrows labeled by `i`.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub vertices: Vec<Tableau>,
    pub edges: Vec<(usize, usize, u32)>,
}

impl CrystalGraph {
    pub fn build(d: &ShuffleDiagram, max_entry: u32) -> CrystalGraph {
        let vertices: Vec<Tableau> = enumerate_shuffle_tableaux(d, max_entry, None).collect();
        let index: HashMap<&Tableau, usize> = vertices.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let mut edges = Vec::new();
        for (k, t) in vertices.iter().enumerate() {
            for i in 1..max_entry {
                if let Some(f) = apply_f(t, i) {
                    edges.push((k, index[&f], i));
                }
            }
        }
        CrystalGraph { vertices, edges }
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for (k, t) in self.vertices.iter().enumerate() {
            let rows: Vec<String> =
                t.rows().iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect();
            s.push_str(&format!("  v{k} [label=\"{}\"];\n", rows.join(" / ")));
        }
        for (a, b, i) in &self.edges {
            s.push_str(&format!("  v{a} -> v{b} [label=\"{i}\"];\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Edge {
            from: usize,
            to: usize,
            label: u32,
        }
        #[derive(Serialize)]
        struct Graph<'a> {
            vertices: &'a [Tableau],
            edges: Vec<Edge>,
        }
        serde_json::to_string(&Graph {
            vertices: &self.vertices,
            edges: self.edges.iter().map(|&(from, to, label)| Edge { from, to, label }).collect(),
        })
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_diagram, overlap_example};
    use crate::tableau::Content;

    #[test]
    fn overlap_example_reading_words() {
        let t = overlap_example();
        let w1 = reading_word(&t, 1);
        assert_eq!(w1.letters, vec![2, 2, 2, 1, 2]);
        assert_eq!(w1.render(5), "2 | 2 | | 2 | 1 2");
        let w2 = reading_word(&t, 2);
        assert_eq!(w2.letters, vec![2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 2]);
        assert_eq!(w2.render(5), "2 2 | 2 2 | 2 2 2 3 | 3 3 3 | 2");
    }

    #[test]
    fn e1_on_overlap_example() {
        let t = overlap_example();
        let e = apply_e(&t, 1).unwrap();
        let changed: Vec<Cell> = t.entries().filter(|&(c, v)| e.get(c) != Some(v)).map(|x| x.0).collect();
        assert_eq!(changed, vec![Cell::new(5, 1)]);
        assert_eq!(e.get(Cell::new(5, 1)), Some(1));
        assert_eq!(apply_f(&e, 1), Some(t));
    }

    #[test]
    fn empty_word() {
        let t = Tableau::from_rows(vec![vec![3, 3]]).unwrap();
        assert!(reading_word(&t, 1).letters.is_empty());
        assert_eq!(apply_e(&t, 1), None);
        assert_eq!(apply_f(&t, 1), None);
    }

    #[test]
    fn partial_inverse_on_example_diagram() {
        let d = example_diagram();
        let mut n = 0;
        for t in enumerate_shuffle_tableaux(&d, 4, None) {
            for i in 1..4 {
                if let Some(e) = apply_e(&t, i) {
                    assert_eq!(apply_f(&e, i).as_ref(), Some(&t));
                    n += 1;
                }
                if let Some(f) = apply_f(&t, i) {
                    assert_eq!(apply_e(&f, i).as_ref(), Some(&t));
                }
            }
        }
        assert!(n > 0);
    }

    #[test]
    fn three_yamanouchi_tableaux() {
        let d = example_diagram();
        let content = Content::new(vec![4, 3, 2]);
        let yam: Vec<Tableau> = enumerate_shuffle_tableaux(&d, 3, Some(&content)).filter(is_yamanouchi).collect();
        assert_eq!(yam.len(), 3);
        for t in &yam {
            assert!((1..=4).all(|i| apply_e(t, i).is_none()));
        }
    }

    #[test]
    fn flat_test_matches() {
        let d = example_diagram();
        let test = FlatCrystal::new(d.shape());
        let mut fill = crate::enumerate::Fillings::bounded(d.shape().clone(), 4);
        while let Some(v) = fill.next_flat() {
            let t = Tableau::from_flat(d.shape(), v);
            let by_words = (1..4).all(|i| reading_word(&t, i).leftmost_unmatched_upper().is_none());
            assert_eq!(test.is_yamanouchi(v), by_words);
        }
    }

    #[test]
    fn single_red_row_of_ones() {
        let d = ShuffleDiagram::new("3".parse().unwrap(), "".parse().unwrap());
        let t = Tableau::new(d.shape().clone(), vec![vec![1, 1, 1]]).unwrap();
        assert!(is_yamanouchi(&t));
    }

    #[test]
    fn graph_dump() {
        let d = ShuffleDiagram::new("1".parse().unwrap(), "1".parse().unwrap());
        let g = CrystalGraph::build(&d, 2);
        assert_eq!(g.vertices.len(), 4);
        assert_eq!(g.edges.len(), 2);
        assert!(g.to_dot().starts_with("digraph crystal {"));
        assert!(g.to_json().contains("\"edges\""));
    }
}
