//! DOT and JSON export of the stratum poset. Both outputs are byte-stable
//! given the deterministic node and cover order.

use serde::Serialize;

use super::StratumPoset;

#[derive(Debug, Serialize)]
pub struct PosetJson {
    pub degree: u32,
    pub nodes: Vec<NodeJson>,
    pub covers: Vec<CoverJson>,
}

#[derive(Debug, Serialize)]
pub struct NodeJson {
    pub mv: Vec<u32>,
    pub dim: u32,
    pub codim: u32,
}

#[derive(Debug, Serialize)]
pub struct CoverJson {
    pub lower: Vec<u32>,
    pub upper: Vec<u32>,
    pub labels: Vec<String>,
}

pub fn poset_to_json(poset: &StratumPoset) -> PosetJson {
    PosetJson {
        degree: poset.ambient_degree,
        nodes: poset
            .nodes
            .iter()
            .map(|s| NodeJson {
                mv: s.mv().parts().to_vec(),
                dim: s.dimension(),
                codim: s.codimension(),
            })
            .collect(),
        covers: poset
            .covers
            .iter()
            .map(|c| CoverJson {
                lower: c.lower.parts().to_vec(),
                upper: c.upper.parts().to_vec(),
                labels: c.labels.iter().map(|l| l.to_string()).collect(),
            })
            .collect(),
    }
}

/// DOT digraph with edges from each stratum to the covering strata one
/// dimension up. Nodes are labelled "[r1,…,rq] dim=d".
pub fn poset_to_dot(poset: &StratumPoset) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph strata_n{} {{\n", poset.ambient_degree));
    out.push_str("  rankdir=BT;\n");
    for s in &poset.nodes {
        out.push_str(&format!(
            "  \"{}\" [label=\"{} dim={}\"];\n",
            s.mv(),
            s.mv(),
            s.dimension()
        ));
    }
    for c in &poset.covers {
        let labels: Vec<String> = c.labels.iter().map(|l| l.to_string()).collect();
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            c.lower,
            c.upper,
            labels.join(", ")
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::super::build_poset;
    use super::*;

    #[test]
    fn dot_for_degree_two() {
        let dot = poset_to_dot(&build_poset(2));
        assert_eq!(dot.matches("label=").count(), 3 + 2); // 3 nodes, 2 edges
        assert!(dot.contains("\"[2]\" -> \"[]\""));
        assert!(dot.contains("\"[2]\" -> \"[1,1]\""));
    }

    #[test]
    fn json_shape_for_degree_four() {
        let json = poset_to_json(&build_poset(4));
        assert_eq!(json.degree, 4);
        assert_eq!(json.nodes.len(), 11);
        let text = serde_json::to_string(&json).unwrap();
        // byte-stable: serialization is deterministic
        assert_eq!(text, serde_json::to_string(&poset_to_json(&build_poset(4))).unwrap());
        assert!(text.contains("\"labels\":[\"delete2(1)\",\"delete2(2)\"]"));
    }
}
