//! Small worked instances shared by unit tests.

use crate::shuffle::ShuffleDiagram;
use crate::tableau::{Shape, Tableau};

/// red (3,2)/(1), blue (3,3)/(1)
pub fn example_diagram() -> ShuffleDiagram {
    ShuffleDiagram::new("3,2/1".parse().unwrap(), "3,3/1".parse().unwrap())
}

/// A shuffle tableau on red (7,6,2)/(2,1), blue (6,3)/(1) with many
/// (1,2)-overlaps.
pub fn overlap_example() -> Tableau {
    let red = "7,6,2/2,1".parse().unwrap();
    let blue = "6,3/1".parse().unwrap();
    Tableau::new(
        Shape::shuffle(&red, &blue),
        vec![vec![1, 1, 1, 1, 2], vec![1, 2, 3, 3, 3], vec![1, 2, 2, 2, 3], vec![2, 2, 3], vec![2, 2]],
    )
    .unwrap()
}
