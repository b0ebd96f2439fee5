use t0kit::constructions::find_homeomorphism;
use t0kit::enumerate::all_spaces;
use t0kit::FiniteSpace;
use t0kit_cli::dsl::{default_names, parse_document, print_space};

/// Every enumerated space up to this size goes through print and parse.
const ROUND_TRIP_MAX: usize = 5;

fn reparse(text: &str) -> FiniteSpace {
    parse_document("round_trip.space", text).unwrap().spaces.remove(0).space
}

/// The `open` form of a space, listing every open but ∅ and the carrier.
fn print_opens(name: &str, x: &FiniteSpace) -> String {
    let labels = default_names(x.n());
    let mut out = format!("space {name}\npoints {}\n", labels.join(" "));
    for u in x.opens().unwrap() {
        if !u.is_empty() && !u.is_full() {
            let pts: Vec<&str> = u.iter().map(|i| labels[i].as_str()).collect();
            out.push_str(&format!("open {}\n", pts.join(" ")));
        }
    }
    out
}

#[test]
fn print_then_parse_is_homeomorphic() {
    let mut seen = 0;
    for n in 0..=ROUND_TRIP_MAX {
        for x in all_spaces(n).unwrap() {
            let text = print_space("X", &default_names(n), &x);
            let back = reparse(&text);
            assert!(find_homeomorphism(&x, &back).unwrap().is_some(), "{text}");
            // labels survive, so the order comes back verbatim
            assert_eq!(back, x, "{text}");
            assert_eq!(print_space("X", &default_names(n), &back), text);
            seen += 1;
        }
    }
    assert_eq!(seen, 1 + 1 + 2 + 5 + 16 + 63);
}

#[test]
fn open_form_agrees_with_order_form() {
    for n in 1..=4 {
        for x in all_spaces(n).unwrap() {
            assert_eq!(reparse(&print_opens("X", &x)), x);
        }
    }
}

#[test]
fn opens_are_completed() {
    // {a} and {b} generate the discrete topology; ∅ and {a,b} are implicit
    assert_eq!(
        reparse("space B\npoints a b\nopen a\nopen b\n"),
        FiniteSpace::discrete(2)
    );
    // nested opens give a chain
    assert_eq!(
        reparse("space X\npoints p q r\nopen r\nopen q r\n"),
        FiniteSpace::chain(3)
    );
    // order lines are closed transitively
    let x = reparse("space X\npoints a b c\nle a b\nle b c\n");
    assert!(x.leq(0, 2));
}
