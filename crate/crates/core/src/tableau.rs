use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::partition::{Partition, SkewShape};
use crate::shuffle::ShuffleDiagram;

/// A square in matrix coordinates: row 1 is the top row, column 1 the leftmost.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeKind {
    Straight,
    Skew,
    Shuffle,
}

/// The cell set of a tableau.
///
/// Row `r` (0-based) holds `outer[r] - inner[r]` cells. For straight and skew
/// shapes they sit in columns `inner[r]+1 ..= outer[r]`. For shuffle shapes
/// `outer`/`inner` interleave the red and blue skew shapes (red row 1, blue
/// row 1, red row 2, ...) and cells sit every other column, at the positions
/// prescribed by [`ShuffleDiagram`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    kind: ShapeKind,
    outer: Vec<usize>,
    inner: Vec<usize>,
}

impl Shape {
    pub fn straight(p: &Partition) -> Shape {
        Shape { kind: ShapeKind::Straight, outer: p.parts().to_vec(), inner: vec![0; p.len()] }
    }

    pub fn skew(s: &SkewShape) -> Shape {
        let rows = s.rows();
        Shape { kind: ShapeKind::Skew, outer: s.outer.padded(rows), inner: s.inner.padded(rows) }
    }

    pub fn shuffle(red: &SkewShape, blue: &SkewShape) -> Shape {
        let rows = (2 * red.rows()).saturating_sub(1).max(2 * blue.rows());
        let pick = |r: usize, red_p: &Partition, blue_p: &Partition| {
            if r.is_multiple_of(2) {
                red_p[r / 2]
            } else {
                blue_p[r / 2]
            }
        };
        Shape {
            kind: ShapeKind::Shuffle,
            outer: (0..rows).map(|r| pick(r, &red.outer, &blue.outer)).collect(),
            inner: (0..rows).map(|r| pick(r, &red.inner, &blue.inner)).collect(),
        }
    }

    /// Rebuild a shape from its serialized description.
    pub fn from_parts(kind: ShapeKind, outer: Vec<usize>, inner: Vec<usize>) -> Result<Shape, Error> {
        match kind {
            ShapeKind::Straight => {
                if inner.iter().any(|&x| x != 0) {
                    return Err(Error::ShapeMismatch("straight shape with nonzero inner".into()));
                }
                Ok(Shape::straight(&Partition::new(outer)?))
            }
            ShapeKind::Skew => Ok(Shape::skew(&SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?)),
            ShapeKind::Shuffle => {
                let (red, blue) = split_interleaved(&outer, &inner)?;
                Ok(Shape::shuffle(&red, &blue))
            }
        }
    }

    pub fn kind(&self) -> ShapeKind {
        self.kind
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Column distance between row-adjacent cells, and row distance between
    /// column-adjacent cells.
    pub fn step(&self) -> usize {
        match self.kind {
            ShapeKind::Shuffle => 2,
            _ => 1,
        }
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.outer.get(r).map_or(0, |o| o - self.inner[r])
    }

    /// Column of the first cell slot in 0-based row `r`.
    pub fn row_start(&self, r: usize) -> usize {
        match self.kind {
            ShapeKind::Shuffle => 2 * self.inner[r] + 1 + r % 2,
            _ => self.inner[r] + 1,
        }
    }

    pub fn size(&self) -> usize {
        (0..self.num_rows()).map(|r| self.row_len(r)).sum()
    }

    /// The cell at position `idx` of 0-based row `r`.
    pub fn cell(&self, r: usize, idx: usize) -> Cell {
        Cell::new(r + 1, self.row_start(r) + idx * self.step())
    }

    /// Inverse of [`Shape::cell`].
    pub fn locate(&self, c: Cell) -> Option<(usize, usize)> {
        if c.row == 0 || c.row > self.num_rows() {
            return None;
        }
        let r = c.row - 1;
        let start = self.row_start(r);
        if c.col < start || !(c.col - start).is_multiple_of(self.step()) {
            return None;
        }
        let idx = (c.col - start) / self.step();
        (idx < self.row_len(r)).then_some((r, idx))
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.locate(c).is_some()
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.num_rows()).flat_map(move |r| (0..self.row_len(r)).map(move |i| self.cell(r, i)))
    }

    pub fn above(&self, c: Cell) -> Option<Cell> {
        let up = Cell::new(c.row.checked_sub(self.step())?, c.col);
        self.contains(up).then_some(up)
    }

    pub fn below(&self, c: Cell) -> Option<Cell> {
        let down = Cell::new(c.row + self.step(), c.col);
        self.contains(down).then_some(down)
    }

    /// The straight partition of a straight shape.
    pub fn partition(&self) -> Option<Partition> {
        (self.kind == ShapeKind::Straight).then(|| Partition::new(self.outer.clone()).unwrap())
    }
}

fn split_interleaved(outer: &[usize], inner: &[usize]) -> Result<(SkewShape, SkewShape), Error> {
    if outer.len() != inner.len() {
        return Err(Error::ShapeMismatch("outer and inner lengths differ".into()));
    }
    let take = |v: &[usize], parity: usize| -> Vec<usize> { v.iter().skip(parity).step_by(2).copied().collect() };
    let red = SkewShape::new(Partition::new(take(outer, 0))?, Partition::new(take(inner, 0))?)?;
    let blue = SkewShape::new(Partition::new(take(outer, 1))?, Partition::new(take(inner, 1))?)?;
    Ok((red, blue))
}

/// Entry counts: `counts()[i]` is the number of entries equal to `i + 1`.
/// Trailing zeros are stripped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Content(Vec<usize>);

impl Content {
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Content(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, value: u32) -> usize {
        self.0.get(value as usize - 1).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }
}

impl From<&Partition> for Content {
    fn from(p: &Partition) -> Self {
        Content(p.parts().to_vec())
    }
}

/// A filling of a [`Shape`] by positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Shape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: Shape, rows: Vec<Vec<u32>>) -> Result<Tableau, Error> {
        let mut rows = rows;
        rows.resize(rows.len().max(shape.num_rows()), Vec::new());
        if rows.len() != shape.num_rows() || rows.iter().enumerate().any(|(r, row)| row.len() != shape.row_len(r)) {
            return Err(Error::ShapeMismatch("row lengths do not match the shape".into()));
        }
        Ok(Tableau { shape, rows })
    }

    /// A straight-shape tableau given by its rows.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Tableau, Error> {
        let p = Partition::new(rows.iter().map(Vec::len).collect())?;
        Tableau::new(Shape::straight(&p), rows)
    }

    pub fn from_cells(shape: Shape, cells: impl IntoIterator<Item = (Cell, u32)>) -> Result<Tableau, Error> {
        let mut rows: Vec<Vec<u32>> = (0..shape.num_rows()).map(|r| vec![0; shape.row_len(r)]).collect();
        let mut seen = 0;
        for (c, v) in cells {
            let (r, i) = shape.locate(c).ok_or_else(|| Error::ShapeMismatch(format!("cell {c} outside the shape")))?;
            if rows[r][i] != 0 {
                return Err(Error::ShapeMismatch(format!("cell {c} given twice")));
            }
            if v == 0 {
                return Err(Error::InvalidTableau(format!("zero entry at {c}")));
            }
            rows[r][i] = v;
            seen += 1;
        }
        if seen != shape.size() {
            return Err(Error::ShapeMismatch("cells do not cover the shape".into()));
        }
        Ok(Tableau { shape, rows })
    }

    pub(crate) fn from_flat(shape: &Shape, flat: &[u32]) -> Tableau {
        let mut rows = Vec::with_capacity(shape.num_rows());
        let mut k = 0;
        for r in 0..shape.num_rows() {
            let n = shape.row_len(r);
            rows.push(flat[k..k + n].to_vec());
            k += n;
        }
        Tableau { shape: shape.clone(), rows }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Entries of each row in column order (0-based row index).
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn get(&self, c: Cell) -> Option<u32> {
        self.shape.locate(c).map(|(r, i)| self.rows[r][i])
    }

    /// Sets the entry of an existing cell; panics when the cell is absent.
    pub fn set(&mut self, c: Cell, v: u32) {
        let (r, i) = self.shape.locate(c).expect("cell outside the shape");
        self.rows[r][i] = v;
    }

    pub fn with(&self, c: Cell, v: u32) -> Tableau {
        let mut t = self.clone();
        t.set(c, v);
        t
    }

    /// All `(cell, entry)` pairs in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(move |(r, row)| row.iter().enumerate().map(move |(i, &v)| (self.shape.cell(r, i), v)))
    }

    pub fn cells_with(&self, v: u32) -> impl Iterator<Item = Cell> + '_ {
        self.entries().filter(move |&(_, x)| x == v).map(|(c, _)| c)
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn is_valid(&self) -> bool {
        is_valid_tableau(self)
    }

    pub fn content(&self) -> Content {
        content(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableau serializes")
    }

    pub fn from_json(s: &str) -> Result<Tableau, Error> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let s: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

/// Rows weakly increase and columns strictly increase; entries are positive.
pub fn is_valid_tableau(t: &Tableau) -> bool {
    let shape = &t.shape;
    for (r, row) in t.rows.iter().enumerate() {
        if row.first() == Some(&0) || row.windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        for (i, &v) in row.iter().enumerate() {
            if let Some(up) = shape.above(shape.cell(r, i)) {
                if t.get(up).unwrap() >= v {
                    return false;
                }
            }
        }
    }
    true
}

pub fn content(t: &Tableau) -> Content {
    let mut counts = vec![0; t.max_entry() as usize];
    for &v in t.rows.iter().flatten() {
        counts[v as usize - 1] += 1;
    }
    Content::new(counts)
}

/// Entries are exactly 1..N, each once, and the tableau is valid.
pub fn is_standard(t: &Tableau) -> bool {
    let n = t.size();
    let mut seen = vec![false; n + 1];
    for &v in t.rows.iter().flatten() {
        let v = v as usize;
        if v == 0 || v > n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    t.is_valid()
}

/// Relabels each value class left to right, giving a standard tableau.
pub fn standardize(t: &Tableau) -> Tableau {
    let mut order: Vec<(u32, usize, usize)> = t.entries().map(|(c, v)| (v, c.col, c.row)).collect();
    order.sort_unstable();
    let mut out = t.clone();
    for (label, &(_, col, row)) in order.iter().enumerate() {
        out.set(Cell::new(row, col), label as u32 + 1);
    }
    out
}

/// Replaces labels block by block using the interleaved row sizes of `d`:
/// the first block becomes 1, the next 2, and so on.
pub fn inverse_standardize(t: &Tableau, d: &ShuffleDiagram) -> Result<Tableau, Error> {
    if !is_standard(t) {
        return Err(Error::NotStandard);
    }
    let sizes = d.row_sizes();
    if t.size() != sizes.iter().sum::<usize>() {
        return Err(Error::ShapeMismatch(format!("{} cells, diagram has {}", t.size(), sizes.iter().sum::<usize>())));
    }
    let mut block = Vec::with_capacity(t.size() + 1);
    block.push(0);
    for (b, &n) in sizes.iter().enumerate() {
        block.extend(std::iter::repeat_n(b as u32 + 1, n));
    }
    let mut out = t.clone();
    for row in out.rows.iter_mut() {
        for v in row.iter_mut() {
            *v = block[*v as usize];
        }
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    kind: ShapeKind,
    outer: Vec<usize>,
    inner: Vec<usize>,
    cells: Vec<[usize; 3]>,
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let shape = &self.shape;
        let (outer, inner) = match shape.kind {
            ShapeKind::Straight => (shape.outer.clone(), Vec::new()),
            ShapeKind::Skew => {
                let inner = Partition::new(shape.inner.clone()).unwrap();
                (shape.outer.clone(), inner.parts().to_vec())
            }
            ShapeKind::Shuffle => (shape.outer.clone(), shape.inner.clone()),
        };
        TableauJson {
            kind: shape.kind,
            outer,
            inner,
            cells: self.entries().map(|(c, v)| [c.row, c.col, v as usize]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = TableauJson::deserialize(d)?;
        let mut inner = j.inner;
        if j.kind != ShapeKind::Shuffle {
            inner.resize(inner.len().max(j.outer.len()), 0);
        }
        let shape = Shape::from_parts(j.kind, j.outer, inner).map_err(D::Error::custom)?;
        let cells = j.cells.into_iter().map(|[r, c, v]| (Cell::new(r, c), v as u32));
        Tableau::from_cells(shape, cells).map_err(D::Error::custom)
    }
}
