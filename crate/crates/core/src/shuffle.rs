use serde::{Deserialize, Serialize};

use crate::enumerate::Fillings;
use crate::partition::{Partition, SkewShape};
use crate::tableau::{Cell, Content, Shape, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

/// The shuffle of a red skew shape and a blue skew shape.
///
/// Red cell `(i, j)` sits at `(2i-1, 2j-1)` and blue cell `(i, j)` at
/// `(2i, 2j)`, so diagram row `r` is red row `(r+1)/2` when `r` is odd and
/// blue row `r/2` when `r` is even.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShuffleDiagram {
    red: SkewShape,
    blue: SkewShape,
    shape: Shape,
}

pub fn build_shuffle_diagram(red: &SkewShape, blue: &SkewShape) -> ShuffleDiagram {
    ShuffleDiagram::new(red.clone(), blue.clone())
}

impl ShuffleDiagram {
    pub fn new(red: SkewShape, blue: SkewShape) -> Self {
        let shape = Shape::shuffle(&red, &blue);
        ShuffleDiagram { red, blue, shape }
    }

    pub fn red(&self) -> &SkewShape {
        &self.red
    }

    pub fn blue(&self) -> &SkewShape {
        &self.blue
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// The same diagram with the colors exchanged.
    pub fn swapped(&self) -> ShuffleDiagram {
        ShuffleDiagram::new(self.blue.clone(), self.red.clone())
    }

    pub fn num_rows(&self) -> usize {
        self.shape.num_rows()
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn cells(&self) -> Vec<(Cell, Color)> {
        self.shape.cells().map(|c| (c, if c.row % 2 == 1 { Color::Red } else { Color::Blue })).collect()
    }

    /// Sizes of diagram rows 1, 2, ...: `(λ1-μ1, ν1-ρ1, λ2-μ2, ...)`.
    pub fn row_sizes(&self) -> Vec<usize> {
        (0..self.num_rows()).map(|r| self.shape.row_len(r)).collect()
    }

    /// The content every peelable tableau must have.
    pub fn content(&self) -> Content {
        Content::new(self.row_sizes())
    }

    pub fn nonempty_rows(&self) -> usize {
        self.row_sizes().iter().filter(|&&n| n > 0).count()
    }

    /// `a[i-1]` is the number of columns holding cells in both diagram rows
    /// `i` and `i+2`.
    pub fn overlap_counts(&self) -> Vec<usize> {
        let s = &self.shape;
        (0..self.num_rows().saturating_sub(2))
            .map(|r| {
                let lo = s.inner()[r].max(s.inner()[r + 2]);
                let hi = s.outer()[r].min(s.outer()[r + 2]);
                hi.saturating_sub(lo)
            })
            .collect()
    }

    /// Every `κ` that can carry a nonzero coefficient: partitions of the
    /// total size with at most as many parts as nonempty diagram rows.
    pub fn kappa_space(&self) -> Vec<Partition> {
        let n = self.size();
        Partition::all(n, self.nonempty_rows(), n)
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct J<'a> {
            red_outer: &'a [usize],
            red_inner: &'a [usize],
            blue_outer: &'a [usize],
            blue_inner: &'a [usize],
        }
        serde_json::to_string(&J {
            red_outer: self.red.outer.parts(),
            red_inner: self.red.inner.parts(),
            blue_outer: self.blue.outer.parts(),
            blue_inner: self.blue.inner.parts(),
        })
        .unwrap()
    }

    pub fn from_json(s: &str) -> Result<Self, crate::Error> {
        #[derive(Deserialize)]
        struct J {
            red_outer: Vec<usize>,
            #[serde(default)]
            red_inner: Vec<usize>,
            blue_outer: Vec<usize>,
            #[serde(default)]
            blue_inner: Vec<usize>,
        }
        let j: J = serde_json::from_str(s).map_err(|e| crate::Error::Parse(e.to_string()))?;
        let red = SkewShape::new(Partition::new(j.red_outer)?, Partition::new(j.red_inner)?)?;
        let blue = SkewShape::new(Partition::new(j.blue_outer)?, Partition::new(j.blue_inner)?)?;
        Ok(ShuffleDiagram::new(red, blue))
    }
}

/// All valid fillings of `d` with entries at most `max_entry`, restricted to
/// `content` when given, in row-major lexicographic order.
pub fn enumerate_shuffle_tableaux(
    d: &ShuffleDiagram,
    max_entry: u32,
    content: Option<&Content>,
) -> impl Iterator<Item = Tableau> {
    match content {
        Some(c) => Fillings::with_content(d.shape().clone(), c),
        None => Fillings::bounded(d.shape().clone(), max_entry),
    }
}
