// scratch: hunt for rare branches over wider universes
use halin_packing::constructive::{color_1123, Resolution};
use halin_packing::generators::{enumerate_cubic_halin_with_cap, random_cubic_halin};
use std::collections::BTreeMap;

fn main() {
    let mut graphs = enumerate_cubic_halin_with_cap(18, 20).unwrap();
    for i in 0..3000u64 {
        graphs.push(random_cubic_halin(1 + (i as usize % 29), 1000 + i).unwrap());
    }
    let mut counts: BTreeMap<(String, usize), usize> = BTreeMap::new();
    let mut resolutions: BTreeMap<String, usize> = BTreeMap::new();
    for (idx, h) in graphs.iter().enumerate() {
        let (_, diag) = color_1123(h).unwrap();
        let case = format!("{:?}", diag.case_taken.unwrap());
        *counts.entry((case, h.cycle_len() % 4)).or_default() += 1;
        for c in &diag.conflicts {
            *resolutions.entry(format!("{:?}", c.resolution)).or_default() += 1;
            if c.resolution == Resolution::SubcaseI {
                println!("SubcaseI at graph index {idx} order {}", h.order());
            }
        }
        assert!(!diag.fallback_used, "fallback at index {idx}");
    }
    println!("case coverage:");
    for ((case, m), c) in &counts {
        println!("  {case} n%4={m}: {c}");
    }
    println!("resolutions:");
    for (r, c) in &resolutions {
        println!("  {r}: {c}");
    }
}
