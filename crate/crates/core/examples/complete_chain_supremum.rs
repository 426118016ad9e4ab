//! Suprema and infima of infinite families described by level statistics.

use ivifn::{
    infimum, level_statistics, supremum, ChainStats, Ivifn, Level, OrderSelector, Rational,
};

fn main() {
    // alpha_n = <[0,0],[1/2 + 1/n, 1/2 + 1/n]> has scores rising to -1/2 without reaching it.
    for order in OrderSelector::ALL {
        let cs = ChainStats::new(order, vec![Level::open(Rational::new(-1, 2))]).unwrap();
        println!(
            "{order}: sup of scores -> -1/2 (open)       = {}",
            supremum(&cs).unwrap()
        );
    }

    // Score and accuracy attained, E2 approached from below.
    let cs = ChainStats::new(
        OrderSelector::Hzx,
        vec![
            Level::attained(Rational::new(-1, 10)),
            Level::attained(Rational::new(1, 2)),
            Level::open(Rational::new(1, 5)),
        ],
    )
    .unwrap();
    println!(
        "hzx: sup with E2 -> 1/5 (open)          = {}",
        supremum(&cs).unwrap()
    );

    // Scores 1/n fall to 0: the infimum.
    for order in OrderSelector::ALL {
        let cs = ChainStats::new(order, vec![Level::open(Rational::zero())]).unwrap();
        println!(
            "{order}: inf of scores -> 0 (open)           = {}",
            infimum(&cs).unwrap()
        );
    }

    // A finite family: its statistics are all attained and the supremum is its maximum.
    let omega = [
        Ivifn::from_ratios((1, 10), (3, 10), (2, 10), (4, 10)).unwrap(),
        Ivifn::from_ratios((2, 10), (2, 10), (3, 10), (3, 10)).unwrap(),
    ];
    let cs = level_statistics(&omega, OrderSelector::Hzx).unwrap();
    let levels: Vec<String> = cs.levels.iter().map(|l| l.value.to_string()).collect();
    println!(
        "hzx: finite family levels {levels:?} -> {}",
        supremum(&cs).unwrap()
    );

    // Inconsistent statistics are reported, not silently repaired.
    let bad = ChainStats::new(
        OrderSelector::Hzx,
        vec![
            Level::attained(Rational::new(1, 2)),
            Level::open(Rational::new(1, 4)),
        ],
    );
    println!("accuracy below |score|: {}", bad.unwrap_err());
}
