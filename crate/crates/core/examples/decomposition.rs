//! Cut sets of an IVIFS and its reconstruction from them.

use ivifn::oracle::enumerate_grid;
use ivifn::{Ivifn, Ivifs, OrderSelector};

fn main() {
    let order = OrderSelector::Hzx;
    let a = Ivifs::new([
        (
            "x",
            Ivifn::from_ratios((1, 10), (3, 10), (2, 10), (4, 10)).unwrap(),
        ),
        (
            "y",
            Ivifn::from_ratios((2, 10), (2, 10), (3, 10), (3, 10)).unwrap(),
        ),
        (
            "z",
            Ivifn::from_ratios((1, 2), (3, 4), (0, 1), (1, 4)).unwrap(),
        ),
    ])
    .unwrap();

    for (label, degree) in a.iter() {
        println!("cut at A({label}) = {degree}: {:?}", a.cut(degree, order));
    }

    // Any candidate set containing the degrees reconstructs A exactly.
    let grid = enumerate_grid(4);
    let mut candidates = grid.members.clone();
    candidates.extend(a.degree_values());
    let back = a.reconstruct(&candidates, order);
    println!(
        "reconstructed from {} candidate levels: {}",
        candidates.len(),
        if back == a { "identical" } else { "different" }
    );

    // With only grid levels, degrees off the grid round down to the best grid level below.
    for (label, degree) in a.reconstruct(&grid.members, order).iter() {
        println!("  grid-only {label}: {degree}");
    }
}
