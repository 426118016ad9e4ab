//! Two IVIFNs with equal score and accuracy that the two orders rank oppositely.

use ivifn::{compare, xu_compare, Ivifn, OrderSelector};

fn main() {
    let a = Ivifn::from_ratios((3, 10), (3, 10), (1, 10), (5, 10)).unwrap();
    let b = Ivifn::from_ratios((3, 20), (9, 20), (3, 10), (3, 10)).unwrap();
    println!("a = {a}");
    println!("b = {b}");
    println!("score/accuracy only: {:?}", xu_compare(&a, &b));

    for order in OrderSelector::ALL {
        let out = compare(&a, &b, order);
        let keys = order.key_names();
        println!(
            "{order}: a is {:?} than b, decided at {}   keys(a) = {:?}, keys(b) = {:?}",
            out.relation,
            out.decided_at.key_name(order),
            keys.iter()
                .zip(order.keys(&a))
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>(),
            keys.iter()
                .zip(order.keys(&b))
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>(),
        );
    }
}
