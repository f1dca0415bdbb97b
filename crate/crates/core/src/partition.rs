use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are stripped on construction, so equality, ordering and
/// hashing ignore them. Indexing past the end yields 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Parts padded with zeros (or truncated) to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (0..n).map(|i| self[i]).collect()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other[i] <= self[i])
    }

    /// All partitions of `n` with at most `max_len` parts, each at most
    /// `max_part`, in decreasing lexicographic order.
    pub fn all(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
        fn rec(rest: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                if p * slots < rest {
                    break;
                }
                cur.push(p);
                rec(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions fitting in a `rows` x `cols` box, all sizes.
    pub fn in_box(rows: usize, cols: usize) -> Vec<Partition> {
        (0..=rows * cols).flat_map(|n| Partition::all(n, rows, cols)).collect()
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        self.0.get(i).unwrap_or(&0)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self, Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma separated parts, e.g. `4,3,2`. The empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {p:?} in {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// A skew shape `outer/inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, Error> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer: outer.to_string(), inner: inner.to_string() });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    /// Number of rows, counting empty rows above the last nonempty one.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.outer[r] - self.inner[r]
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Cells as 1-based (row, col) pairs in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.rows()).flat_map(|r| (self.inner[r] + 1..=self.outer[r]).map(move |c| (r + 1, c))).collect()
    }

    /// Same cell set as `self`, with the smallest possible outer partition.
    /// Two skew shapes have equal cell sets iff their normal forms agree.
    pub fn normalized(&self) -> SkewShape {
        let rows = self.rows();
        let mut outer = self.outer.padded(rows);
        let mut inner = self.inner.padded(rows);
        // drop trailing empty rows
        while let (Some(o), Some(i)) = (outer.last(), inner.last()) {
            if o == i {
                outer.pop();
                inner.pop();
            } else {
                break;
            }
        }
        // empty rows inside: pull outer down to the next row's outer
        for r in (0..outer.len()).rev() {
            if outer[r] == inner[r] {
                let below = outer.get(r + 1).copied().unwrap_or(0);
                outer[r] = below;
                inner[r] = below;
            }
        }
        SkewShape {
            outer: Partition::new(outer).expect("normalized outer"),
            inner: Partition::new(inner).expect("normalized inner"),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// `outer/inner` or just `outer`, e.g. `3,2/1`.
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}
