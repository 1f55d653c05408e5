//! Pretty-printing a parsed document and reparsing it must reproduce the
//! same AST (spans aside, so the comparison goes through the printer).

use alg_cli::dsl::{parse, print};
use proptest::prelude::*;

/// Generate well-formed documents: declarations in dependency order with
/// fresh names, then queries over them.
fn document_strategy() -> impl Strategy<Value = String> {
    let moduli = prop::collection::vec(2u64..12, 1..4);
    let divisor_picks = prop::collection::vec(any::<prop::sample::Index>(), 0..3);
    let elem_picks = prop::collection::vec(any::<prop::sample::Index>(), 0..4);
    (moduli, divisor_picks, elem_picks, any::<bool>(), any::<bool>()).prop_map(
        |(moduli, divisor_picks, elem_picks, make_product, gen_sub)| {
            let mut lines = Vec::new();
            for (i, n) in moduli.iter().enumerate() {
                lines.push(format!("ring r{i} = zmod {n}"));
            }
            lines.push("module m0 = regular r0".to_string());
            let n0 = moduli[0];
            for (k, pick) in divisor_picks.iter().enumerate() {
                let divisors: Vec<u64> = (1..=n0).filter(|d| n0 % d == 0).collect();
                let d = divisors[pick.index(divisors.len())];
                lines.push(format!("module c{k} = zmod {d} over r0"));
            }
            if make_product && moduli.len() >= 2 {
                lines.push("ring rp = product(r0, r1)".to_string());
                lines.push("module mp = regular rp".to_string());
            }
            let elems: Vec<String> = elem_picks
                .iter()
                .map(|p| (p.index(n0 as usize)).to_string())
                .collect();
            let body = if elems.is_empty() {
                "{}".to_string()
            } else {
                format!("{{{}}}", elems.join(", "))
            };
            if gen_sub {
                lines.push(format!("sub p0 of m0 = gen {body}"));
            } else {
                lines.push("sub p0 of m0 = gen {0}".to_string());
            }
            lines.push("set s0 in r0 = {1}".to_string());
            lines.push("query classify p0 s0".to_string());
            lines.push("query s_primary p0 s0".to_string());
            lines.push("query suite thm1-equivalences maxring=4 maxmod=4".to_string());
            lines.push("query search s-primary-not-primary maxring=4".to_string());
            lines.join("\n") + "\n"
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn print_then_parse_is_a_fixpoint(source in document_strategy()) {
        let doc = parse(&source).unwrap();
        let printed = print(&doc);
        let reparsed = parse(&printed).unwrap();
        prop_assert_eq!(&printed, &print(&reparsed));
        prop_assert_eq!(doc.decls.len(), reparsed.decls.len());
        prop_assert_eq!(doc.queries.len(), reparsed.queries.len());
    }
}
