//! The classical lattice-word rule, kept free of the shuffle machinery so it
//! can serve as an independent oracle.

use std::collections::BTreeMap;

use crate::partition::{Partition, SkewShape};

/// Number of SSYT of shape `outer/inner` and content `content` whose reverse
/// reading word (rows top to bottom, right to left) is a lattice word.
pub fn lr_tableaux(outer: &Partition, inner: &Partition, content: &Partition) -> u64 {
    if !outer.contains(inner) || outer.size() - inner.size() != content.size() {
        return 0;
    }
    let rows = outer.len();
    // cells in reverse reading order
    let mut cells = Vec::new();
    for r in 0..rows {
        for c in (inner[r]..outer[r]).rev() {
            cells.push((r, c));
        }
    }
    let width = outer[0];
    let mut grid = vec![vec![0u32; width]; rows];
    let mut left: Vec<usize> = content.parts().to_vec();
    let mut used = vec![0usize; content.len()];
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        inner: &Partition,
        outer: &Partition,
        grid: &mut Vec<Vec<u32>>,
        left: &mut Vec<usize>,
        used: &mut Vec<usize>,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        // right neighbor bounds from above, cell above bounds from below
        let hi = if c + 1 < outer[r] { grid[r][c + 1] } else { left.len() as u32 };
        let lo = if r > 0 && c >= inner[r - 1] { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            let i = v as usize - 1;
            if left[i] == 0 || (i > 0 && used[i] + 1 > used[i - 1]) {
                continue;
            }
            left[i] -= 1;
            used[i] += 1;
            grid[r][c] = v;
            total += rec(k + 1, cells, inner, outer, grid, left, used);
            grid[r][c] = 0;
            used[i] -= 1;
            left[i] += 1;
        }
        total
    }
    rec(0, &cells, inner, outer, &mut grid, &mut left, &mut used)
}

/// `s_{outer/inner} = Σ_σ c^{outer}_{inner,σ} s_σ`, zero terms dropped.
pub fn skew_schur_expansion(s: &SkewShape) -> BTreeMap<Partition, u64> {
    let n = s.size();
    Partition::all(n, s.rows().max(1), n)
        .into_iter()
        .filter_map(|sigma| {
            let c = lr_tableaux(&s.outer, &s.inner, &sigma);
            (c > 0).then_some((sigma, c))
        })
        .collect()
}

/// `c^κ_{red,blue} = Σ_{σ,τ} c^{red}_σ c^{blue}_τ c^κ_{σ,τ}`.
pub fn lr_classical(red: &SkewShape, blue: &SkewShape, kappa: &Partition) -> u64 {
    let r = skew_schur_expansion(red);
    let b = skew_schur_expansion(blue);
    combine(&r, &b, kappa)
}

pub(crate) fn combine(r: &BTreeMap<Partition, u64>, b: &BTreeMap<Partition, u64>, kappa: &Partition) -> u64 {
    let mut total = 0;
    for (sigma, x) in r {
        if !kappa.contains(sigma) {
            continue;
        }
        for (tau, y) in b {
            total += x * y * lr_tableaux(kappa, sigma, tau);
        }
    }
    total
}
