use crate::partition::{Partition, SkewShape};
use crate::tableau::{Content, Shape, Tableau};

/// Backtracking enumeration of row-weak, column-strict fillings of a shape.
///
/// Cells are filled in row-major order with candidates tried in increasing
/// order, so fillings come out in row-major lexicographic order.
pub struct Fillings {
    shape: Shape,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    /// cells strictly below in the same column
    depth: Vec<u32>,
    max: u32,
    remaining: Option<Vec<usize>>,
    vals: Vec<u32>,
    state: State,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl Fillings {
    fn build(shape: Shape, max: u32, remaining: Option<Vec<usize>>) -> Fillings {
        let cells: Vec<_> = shape.cells().collect();
        let index = |c| cells.iter().position(|&x| x == c);
        let left = (0..cells.len()).map(|k| (k > 0 && cells[k - 1].row == cells[k].row).then(|| k - 1)).collect();
        let up = cells.iter().map(|&c| shape.above(c).and_then(index)).collect();
        let depth = cells
            .iter()
            .map(|&c| {
                let mut n = 0;
                let mut cur = c;
                while let Some(b) = shape.below(cur) {
                    n += 1;
                    cur = b;
                }
                n
            })
            .collect();
        let n = cells.len();
        Fillings { shape, left, up, depth, max, remaining, vals: vec![0; n], state: State::Fresh }
    }

    /// All fillings with entries in `1..=max`.
    pub fn bounded(shape: Shape, max: u32) -> Fillings {
        Fillings::build(shape, max, None)
    }

    /// All fillings with the given content.
    pub fn with_content(shape: Shape, content: &Content) -> Fillings {
        let counts = content.counts().to_vec();
        let max = counts.len() as u32;
        let state_ok = counts.iter().sum::<usize>() == shape.size();
        let mut f = Fillings::build(shape, max, Some(counts));
        if !state_ok {
            f.state = State::Done;
        }
        f
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Advances to the next filling and returns its entries in row-major
    /// order, without allocating.
    pub fn next_flat(&mut self) -> Option<&[u32]> {
        let n = self.vals.len();
        let mut k = match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                if n == 0 {
                    self.state = State::Done;
                    return Some(&self.vals);
                }
                0
            }
            State::Running => n - 1,
        };
        loop {
            let cur = self.vals[k];
            if cur != 0 {
                if let Some(rem) = &mut self.remaining {
                    rem[cur as usize - 1] += 1;
                }
            }
            let mut lo = cur + 1;
            if let Some(l) = self.left[k] {
                lo = lo.max(self.vals[l]);
            }
            if let Some(u) = self.up[k] {
                lo = lo.max(self.vals[u] + 1);
            }
            let hi = self.max.saturating_sub(self.depth[k]);
            let found = (lo..=hi).find(|&v| match &self.remaining {
                Some(rem) => rem[v as usize - 1] > 0,
                None => true,
            });
            match found {
                Some(v) => {
                    self.vals[k] = v;
                    if let Some(rem) = &mut self.remaining {
                        rem[v as usize - 1] -= 1;
                    }
                    if k + 1 == n {
                        return Some(&self.vals);
                    }
                    k += 1;
                    self.vals[k] = 0;
                }
                None => {
                    self.vals[k] = 0;
                    if k == 0 {
                        self.state = State::Done;
                        return None;
                    }
                    k -= 1;
                }
            }
        }
    }
}

impl Iterator for Fillings {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        self.next_flat()?;
        Some(Tableau::from_flat(&self.shape, &self.vals))
    }
}

/// All SSYT of a straight or skew shape with the given content.
pub fn enumerate_ssyt(shape: &SkewShape, content: &Content) -> Fillings {
    let shape = if shape.is_straight() { Shape::straight(&shape.outer) } else { Shape::skew(shape) };
    Fillings::with_content(shape, content)
}

/// All SSYT of a straight shape with entries at most `max`.
pub fn ssyt_bounded(p: &Partition, max: u32) -> Fillings {
    Fillings::bounded(Shape::straight(p), max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Kostka numbers by removing the horizontal strip of the largest value.
    fn kostka(shape: &[usize], content: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>) -> u64 {
        let shape: Vec<usize> = shape.iter().copied().filter(|&x| x > 0).collect();
        if content.is_empty() {
            return u64::from(shape.is_empty());
        }
        let key = (shape.clone(), content.to_vec());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let last = *content.last().unwrap();
        let rest = &content[..content.len() - 1];
        let mut total = 0;
        // choose how many cells to strip from each row: sub-shape nu with shape/nu a horizontal strip
        fn strips(shape: &[usize], r: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if r == shape.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let next = shape.get(r + 1).copied().unwrap_or(0);
            for take in 0..=left.min(shape[r] - next) {
                cur.push(shape[r] - take);
                strips(shape, r + 1, left - take, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        strips(&shape, 0, last, &mut Vec::new(), &mut out);
        for nu in out {
            total += kostka(&nu, rest, memo);
        }
        memo.insert(key, total);
        total
    }

    #[test]
    fn small_counts() {
        let c = |v: &[usize]| Content::new(v.to_vec());
        assert_eq!(enumerate_ssyt(&SkewShape::straight(p(&[2])), &c(&[2])).count(), 1);
        assert_eq!(enumerate_ssyt(&SkewShape::straight(p(&[1, 1])), &c(&[2])).count(), 0);
        assert_eq!(enumerate_ssyt(&SkewShape::straight(p(&[4, 3, 2])), &c(&[2, 2, 2, 3])).count(), 6);
    }

    #[test]
    fn kostka_oracle_up_to_eight() {
        let mut memo = HashMap::new();
        for n in 0..=8 {
            for shape in Partition::all(n, n, n) {
                for len in 1..=n.max(1) {
                    for content in compositions(n, len) {
                        let got = enumerate_ssyt(&SkewShape::straight(shape.clone()), &Content::new(content.clone()))
                            .count() as u64;
                        assert_eq!(got, kostka(shape.parts(), &content, &mut memo), "{shape} {content:?}");
                    }
                }
            }
        }
    }

    fn compositions(n: usize, len: usize) -> Vec<Vec<usize>> {
        if len == 0 {
            return if n == 0 { vec![vec![]] } else { vec![] };
        }
        // weak compositions, last part nonzero unless n == 0
        let mut out = Vec::new();
        for first in 0..=n {
            for mut rest in compositions(n - first, len - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out.retain(|c| n == 0 || *c.last().unwrap() > 0);
        out
    }

    #[test]
    fn row_major_lexicographic() {
        let all: Vec<Tableau> =
            enumerate_ssyt(&SkewShape::straight(p(&[4, 3, 2])), &Content::new(vec![2, 2, 2, 3])).collect();
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| a.rows().cmp(b.rows()));
        assert_eq!(all, sorted);
        for t in &all {
            assert!(t.is_valid());
            assert_eq!(t.content(), Content::new(vec![2, 2, 2, 3]));
        }
    }

    #[test]
    fn skew_and_empty() {
        let s: SkewShape = "2,1/1".parse().unwrap();
        assert_eq!(enumerate_ssyt(&s, &Content::new(vec![2])).count(), 1);
        let empty = SkewShape::straight(Partition::empty());
        assert_eq!(enumerate_ssyt(&empty, &Content::new(vec![])).count(), 1);
        assert_eq!(ssyt_bounded(&p(&[1]), 3).count(), 3);
    }
}
