//! Rank a handful of alternatives under both orders and explain each step.

use ivifn::{rank, Ivifn, OrderSelector};

fn main() {
    let alts = [
        (
            "supplier-a",
            Ivifn::from_ratios((1, 10), (3, 10), (2, 10), (4, 10)).unwrap(),
        ),
        (
            "supplier-b",
            Ivifn::from_ratios((2, 10), (2, 10), (3, 10), (3, 10)).unwrap(),
        ),
        (
            "supplier-c",
            Ivifn::from_ratios((3, 10), (3, 10), (1, 10), (5, 10)).unwrap(),
        ),
        (
            "supplier-d",
            Ivifn::from_ratios((3, 20), (9, 20), (3, 10), (3, 10)).unwrap(),
        ),
        (
            "supplier-e",
            Ivifn::from_ratios((5, 10), (6, 10), (1, 10), (2, 10)).unwrap(),
        ),
    ];
    for order in OrderSelector::ALL {
        println!("{order}:");
        let ranked = rank(&alts, order).expect("labels are unique");
        for (i, item) in ranked.iter().enumerate() {
            let why = item
                .decided_vs_next
                .map(|d| format!("beats next on {}", d.key_name(order)))
                .unwrap_or_default();
            println!("  {}. {:<11} {}  {why}", i + 1, item.label, item.value);
        }
    }
}
