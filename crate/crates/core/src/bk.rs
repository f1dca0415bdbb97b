use crate::error::Error;
use crate::peelable::is_peelable;
use crate::shuffle::ShuffleDiagram;
use crate::tableau::{Cell, Tableau};

/// The Bender–Knuth involution exchanging the free `i`s and `i+1`s of each row.
///
/// An `i` with an `i+1` directly below it, and that `i+1`, are fixed; in each
/// row the remaining `b` free `i`s and `c` free `i+1`s are rewritten as `c`
/// `i`s followed by `b` `i+1`s.
pub fn bk(t: &Tableau, i: u32) -> Tableau {
    let shape = t.shape();
    let mut out = t.clone();
    for (r, row) in t.rows().iter().enumerate() {
        let free: Vec<(Cell, u32)> = row
            .iter()
            .enumerate()
            .map(|(k, &v)| (shape.cell(r, k), v))
            .filter(|&(c, v)| {
                if v == i {
                    shape.below(c).and_then(|b| t.get(b)) != Some(i + 1)
                } else if v == i + 1 {
                    shape.above(c).and_then(|a| t.get(a)) != Some(i)
                } else {
                    false
                }
            })
            .collect();
        let b = free.iter().filter(|x| x.1 == i).count();
        let c = free.len() - b;
        for (k, &(cell, _)) in free.iter().enumerate() {
            out.set(cell, if k < c { i } else { i + 1 });
        }
    }
    out
}

/// `BK_1 ∘ BK_3 ∘ … ∘ BK_{2ell-1}` (the factors commute).
pub fn bk_odd(t: &Tableau, ell: usize) -> Tableau {
    (1..=ell).rev().fold(t.clone(), |acc, j| bk(&acc, 2 * j as u32 - 1))
}

/// Sends a peelable tableau of `red ⊛ blue` to one of `blue ⊛ red`.
pub fn symmetry_map(t: &Tableau, d: &ShuffleDiagram) -> Result<Tableau, Error> {
    if !t.is_valid() || !is_peelable(t, d) {
        return Err(Error::NotPeelable);
    }
    let ell = d.red().outer.len().max(d.blue().outer.len());
    Ok(bk_odd(t, ell))
}
