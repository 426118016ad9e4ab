//! Push an IVIFS through a map between finite universes.

use std::collections::HashMap;

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
            "w",
            Ivifn::from_ratios((3, 5), (7, 10), (1, 10), (1, 5)).unwrap(),
        ),
    ])
    .unwrap();

    // x and y collapse onto p; nothing maps to r, so r gets the bottom element.
    let f: HashMap<String, String> = [("x", "p"), ("y", "p"), ("w", "q")]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
    let image = a.zadeh_extend_table(&f, &["p", "q", "r"], order).unwrap();
    for (label, degree) in image.iter() {
        println!("f(A)({label}) = {degree}");
    }

    // Composition: extending g after f equals extending g . f directly.
    let g = |y: &str| Some(if y == "r" { "t" } else { "s" }.to_string());
    let step = image.zadeh_extend(g, &["s", "t"], order).unwrap();
    let direct = a
        .zadeh_extend(|x| f.get(x).and_then(|y| g(y)), &["s", "t"], order)
        .unwrap();
    println!("(g . f)(A) == g(f(A)): {}", step == direct);
}
