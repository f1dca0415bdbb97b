//! Timing of the peelable route against the Yamanouchi route.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::lr::{expand_product, Method};
use crate::partition::SkewShape;

/// Wall time per batch; tiny instances are timed over many calls.
const BATCH_SPAN: Duration = Duration::from_micros(500);
/// Batches per measurement. The fastest batch is kept, which discards
/// one-off stalls such as preemption.
const BATCHES: usize = 3;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub red: SkewShape,
    pub blue: SkewShape,
    pub cells: usize,
    pub peelable_ns: f64,
    pub yamanouchi_ns: f64,
}

impl BenchRow {
    /// Yamanouchi time over peelable time; above 1 means peelable is faster.
    pub fn speedup(&self) -> f64 {
        self.yamanouchi_ns / self.peelable_ns
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchSummary {
    pub rows: Vec<BenchRow>,
}

impl BenchSummary {
    pub fn faster_share(&self) -> f64 {
        if self.rows.is_empty() {
            return 1.0;
        }
        self.rows.iter().filter(|r| r.speedup() > 1.0).count() as f64 / self.rows.len() as f64
    }

    /// Largest peelable/Yamanouchi time ratio.
    pub fn worst_slowdown(&self) -> f64 {
        self.rows.iter().map(|r| 1.0 / r.speedup()).fold(0.0, f64::max)
    }

    /// Never more than 2x slower, and faster on at least 70% of the grid.
    pub fn meets_claim(&self) -> bool {
        self.worst_slowdown() <= 2.0 && self.faster_share() >= 0.7
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("red,blue,cells,peelable_ns,yamanouchi_ns,speedup\n");
        for r in &self.rows {
            writeln!(
                s,
                "\"{}\",\"{}\",{},{:.0},{:.0},{:.3}",
                r.red,
                r.blue,
                r.cells,
                r.peelable_ns,
                r.yamanouchi_ns,
                r.speedup()
            )
            .unwrap();
        }
        s
    }
}

fn time_per_call(mut f: impl FnMut()) -> f64 {
    (0..BATCHES)
        .map(|_| {
            let start = Instant::now();
            let mut calls = 0u32;
            while calls == 0 || start.elapsed() < BATCH_SPAN {
                f();
                calls += 1;
            }
            start.elapsed().as_nanos() as f64 / calls as f64
        })
        .fold(f64::INFINITY, f64::min)
}

/// Times both routes on each pair, single-threaded so the Yamanouchi route's
/// parallel κ loop gains nothing.
pub fn bench_grid(pairs: &[(SkewShape, SkewShape)]) -> BenchSummary {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().expect("thread pool");
    let rows = pool.install(|| {
        pairs
            .iter()
            .map(|(red, blue)| BenchRow {
                red: red.clone(),
                blue: blue.clone(),
                cells: red.size() + blue.size(),
                peelable_ns: time_per_call(|| {
                    std::hint::black_box(expand_product(red, blue, Method::Peelable));
                }),
                yamanouchi_ns: time_per_call(|| {
                    std::hint::black_box(expand_product(red, blue, Method::Yamanouchi));
                }),
            })
            .collect()
    });
    BenchSummary { rows }
}
