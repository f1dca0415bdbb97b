use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::classical;
use crate::crystal::FlatCrystal;
use crate::enumerate::Fillings;
use crate::error::Error;
use crate::partition::{Partition, SkewShape};
use crate::peelable::walk_peelable;
use crate::shuffle::ShuffleDiagram;
use crate::tableau::Content;

/// How a coefficient is counted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Method {
    /// Peelable tableaux of shape κ.
    #[default]
    Peelable,
    /// Yamanouchi shuffle tableaux of content κ.
    Yamanouchi,
    /// Lattice-word LR tableaux through the Schur expansions of both factors.
    Classical,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Peelable, Method::Yamanouchi, Method::Classical];
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "peelable" => Ok(Method::Peelable),
            "yamanouchi" => Ok(Method::Yamanouchi),
            "classical" => Ok(Method::Classical),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Peelable => "peelable",
            Method::Yamanouchi => "yamanouchi",
            Method::Classical => "classical",
        })
    }
}

/// Nonzero coefficients indexed by shape, in lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoeffTable {
    entries: BTreeMap<Partition, u64>,
}

impl CoeffTable {
    pub fn get(&self, kappa: &Partition) -> u64 {
        self.entries.get(kappa).copied().unwrap_or(0)
    }

    pub fn insert(&mut self, kappa: Partition, coeff: u64) {
        if coeff > 0 {
            self.entries.insert(kappa, coeff);
        } else {
            self.entries.remove(&kappa);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Row<'a> {
            kappa: &'a [usize],
            coeff: u64,
        }
        let rows: Vec<Row> = self.iter().map(|(k, c)| Row { kappa: k.parts(), coeff: c }).collect();
        serde_json::to_string(&rows).unwrap()
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        for (k, c) in self.iter() {
            s.push_str(&format!("{k}\t{c}\n"));
        }
        s
    }
}

impl FromIterator<(Partition, u64)> for CoeffTable {
    fn from_iter<I: IntoIterator<Item = (Partition, u64)>>(iter: I) -> Self {
        let mut t = CoeffTable::default();
        for (k, c) in iter {
            t.insert(k, c);
        }
        t
    }
}

pub fn lr_peelable(red: &SkewShape, blue: &SkewShape, kappa: &Partition) -> u64 {
    let d = ShuffleDiagram::new(red.clone(), blue.clone());
    let mut n = 0;
    walk_peelable(&d, Some(kappa), &mut |_| n += 1);
    n
}

fn count_yamanouchi(d: &ShuffleDiagram, test: &FlatCrystal, kappa: &Partition) -> u64 {
    let mut fill = Fillings::with_content(d.shape().clone(), &Content::from(kappa));
    let mut n = 0;
    while let Some(v) = fill.next_flat() {
        if test.is_yamanouchi(v) {
            n += 1;
        }
    }
    n
}

pub fn lr_yamanouchi(red: &SkewShape, blue: &SkewShape, kappa: &Partition) -> u64 {
    let d = ShuffleDiagram::new(red.clone(), blue.clone());
    if kappa.size() != d.size() {
        return 0;
    }
    count_yamanouchi(&d, &FlatCrystal::new(d.shape()), kappa)
}

pub use classical::lr_classical;

pub fn lr_coefficient(red: &SkewShape, blue: &SkewShape, kappa: &Partition, method: Method) -> u64 {
    match method {
        Method::Peelable => lr_peelable(red, blue, kappa),
        Method::Yamanouchi => lr_yamanouchi(red, blue, kappa),
        Method::Classical => lr_classical(red, blue, kappa),
    }
}

/// The full expansion `s_red · s_blue = Σ_κ c^κ s_κ`.
pub fn expand_product(red: &SkewShape, blue: &SkewShape, method: Method) -> CoeffTable {
    let d = ShuffleDiagram::new(red.clone(), blue.clone());
    match method {
        Method::Peelable => {
            let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
            walk_peelable(&d, None, &mut |rows| {
                *counts.entry(rows.iter().map(Vec::len).collect()).or_default() += 1;
            });
            counts.into_iter().map(|(k, c)| (Partition::new(k).unwrap(), c)).collect()
        }
        Method::Yamanouchi => {
            let test = FlatCrystal::new(d.shape());
            d.kappa_space()
                .into_par_iter()
                .map(|k| {
                    let c = count_yamanouchi(&d, &test, &k);
                    (k, c)
                })
                .collect::<Vec<_>>()
                .into_iter()
                .collect()
        }
        Method::Classical => {
            let r = classical::skew_schur_expansion(red);
            let b = classical::skew_schur_expansion(blue);
            d.kappa_space()
                .into_par_iter()
                .map(|k| {
                    let c = classical::combine(&r, &b, &k);
                    (k, c)
                })
                .collect::<Vec<_>>()
                .into_iter()
                .collect()
        }
    }
}
