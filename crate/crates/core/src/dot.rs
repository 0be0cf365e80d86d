//! DOT (Graphviz) rendering: tree edges solid, cycle edges dashed, optional
//! class labels from a coloring.

use crate::halin::HalinGraph;
use crate::packing::{Coloring, SPacking};

/// Human-readable class names for a schedule. The (1,1,2,3) schedule uses the
/// customary 1, 1', 2, 3; repeated constraints otherwise get letter subscripts
/// (2_a, 2_b, ...), unique ones print bare.
pub fn class_names(s: &SPacking) -> Vec<String> {
    if s.values() == [1, 1, 2, 3] {
        return vec!["1".into(), "1'".into(), "2".into(), "3".into()];
    }
    let values = s.values();
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let total = values.iter().filter(|&&w| w == v).count();
            if total == 1 {
                v.to_string()
            } else {
                let rank = values[..i].iter().filter(|&&w| w == v).count();
                let letter = (b'a' + rank as u8) as char;
                format!("{v}_{letter}")
            }
        })
        .collect()
}

pub fn to_dot(h: &HalinGraph, coloring: Option<(&SPacking, &Coloring)>) -> String {
    let labels: Vec<String> = match coloring {
        Some((s, c)) => {
            let names = class_names(s);
            (0..h.order())
                .map(|v| match c.class_of(v) {
                    Some(class) => {
                        format!("{}\\n{}", h.name(v), names[(class - 1) as usize])
                    }
                    None => h.name(v).to_string(),
                })
                .collect()
        }
        None => (0..h.order()).map(|v| h.name(v).to_string()).collect(),
    };
    let mut out = String::from("graph halin {\n");
    for v in 0..h.order() {
        out.push_str(&format!("  v{} [label=\"{}\"];\n", v, labels[v]));
    }
    for (u, v) in h.tree_edges() {
        out.push_str(&format!("  v{u} -- v{v};\n"));
    }
    let n = h.cycle_len();
    for i in 0..n {
        let u = h.cycle_order()[i];
        let v = h.cycle_order()[(i + 1) % n];
        out.push_str(&format!("  v{u} -- v{v} [style=dashed];\n"));
    }
    out.push_str("}\n");
    out
}
