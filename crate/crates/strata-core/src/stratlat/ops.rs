//! Operations on multiplicity vectors and poset construction.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::polycore::{MultiplicityVector, MvError};

use super::{CoverLabel, CoveringRelation, Stratum, StratumPoset};

/// Validates raw integer parts against an ambient degree. The three failure
/// modes (non-positive part, length overflow, parity) are reported distinctly.
pub fn validate_mv(parts: &[i64], ambient_degree: u32) -> Result<Stratum, MvError> {
    let mut checked = Vec::with_capacity(parts.len());
    for (index, &p) in parts.iter().enumerate() {
        if p <= 0 {
            return Err(MvError::NonPositivePart { index });
        }
        checked.push(p as u32);
    }
    let mv = MultiplicityVector::new(checked)?;
    Stratum::new(mv, ambient_degree)
}

/// All multiplicity vectors valid for degree n, each exactly once, ordered by
/// length descending and lexicographically within a length.
pub fn enumerate_mvs(n: u32) -> Vec<Stratum> {
    let mut out = Vec::new();
    let mut l = n;
    loop {
        if l == 0 {
            out.push(Stratum::new(MultiplicityVector::empty(), n).unwrap());
            break;
        }
        let mut compositions = Vec::new();
        let mut current = Vec::new();
        compositions_of(l, &mut current, &mut compositions);
        for parts in compositions {
            out.push(Stratum::new(MultiplicityVector::new(parts).unwrap(), n).unwrap());
        }
        if l < 2 {
            break;
        }
        l -= 2;
    }
    out
}

/// Compositions of `total` in lexicographic order.
fn compositions_of(total: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if total == 0 {
        out.push(current.clone());
        return;
    }
    for first in 1..=total {
        current.push(first);
        compositions_of(total - first, current, out);
        current.pop();
    }
}

/// All vectors obtainable by merging one or more groups of consecutive
/// components into their sums (confluence of real roots). The input itself
/// is not included. Results are deduplicated and sorted.
pub fn type_a_merges(mv: &MultiplicityVector) -> Vec<MultiplicityVector> {
    let parts = mv.parts();
    let q = parts.len();
    if q < 2 {
        return Vec::new();
    }
    let mut results = BTreeSet::new();
    // Each bit pattern over the q-1 gaps marks where a new group starts.
    for mask in 0..(1u32 << (q - 1)) {
        if mask == (1 << (q - 1)) - 1 {
            continue; // all gaps kept: the identity grouping
        }
        let mut merged = Vec::new();
        let mut acc = parts[0];
        for (gap, &part) in parts.iter().enumerate().skip(1) {
            if mask & (1 << (gap - 1)) != 0 {
                merged.push(acc);
                acc = part;
            } else {
                acc += part;
            }
        }
        merged.push(acc);
        results.insert(MultiplicityVector::new(merged).unwrap());
    }
    results.into_iter().collect()
}

/// All vectors obtainable by one operation of type B for ambient degree n: a
/// complex pair becomes a double real root, either inserted as a new
/// component equal to 2 or added onto an existing component. Requires a
/// complex pair to be available (l ≤ n − 2).
pub fn type_b_results(
    mv: &MultiplicityVector,
    n: u32,
) -> Result<Vec<MultiplicityVector>, MvError> {
    let l = mv.length();
    if l + 2 > n {
        return Err(MvError::LengthOverflow {
            length: l + 2,
            degree: n,
        });
    }
    let parts = mv.parts();
    let mut results = BTreeSet::new();
    for pos in 0..=parts.len() {
        let mut inserted = parts.to_vec();
        inserted.insert(pos, 2);
        results.insert(MultiplicityVector::new(inserted).unwrap());
    }
    for idx in 0..parts.len() {
        let mut bumped = parts.to_vec();
        bumped[idx] += 2;
        results.insert(MultiplicityVector::new(bumped).unwrap());
    }
    Ok(results.into_iter().collect())
}

/// Applies a cover label to a vector, producing the upper neighbour's vector.
pub(crate) fn apply_label(mv: &MultiplicityVector, label: &CoverLabel) -> MultiplicityVector {
    let mut parts = mv.parts().to_vec();
    match *label {
        CoverLabel::Split { component, left } => {
            let r = parts[component - 1];
            debug_assert!(left >= 1 && left < r);
            parts[component - 1] = left;
            parts.insert(component, r - left);
        }
        CoverLabel::Delete2 { component } => {
            debug_assert_eq!(parts[component - 1], 2);
            parts.remove(component - 1);
        }
    }
    MultiplicityVector::new(parts).unwrap()
}

/// All covering relations upward from a stratum: every way one root can
/// bifurcate, i.e. every split of a component > 1 and every deletion of a
/// component equal to 2. Relations are grouped by resulting vector with all
/// labels kept.
pub fn upward_neighbors(stratum: &Stratum) -> Vec<CoveringRelation> {
    let mv = stratum.mv();
    let mut by_upper: BTreeMap<MultiplicityVector, Vec<CoverLabel>> = BTreeMap::new();
    for (idx, &r) in mv.parts().iter().enumerate() {
        let component = idx + 1;
        if r > 1 {
            for left in 1..r {
                let label = CoverLabel::Split { component, left };
                by_upper.entry(apply_label(mv, &label)).or_default().push(label);
            }
        }
        if r == 2 {
            let label = CoverLabel::Delete2 { component };
            by_upper.entry(apply_label(mv, &label)).or_default().push(label);
        }
    }
    by_upper
        .into_iter()
        .map(|(upper, mut labels)| {
            labels.sort();
            CoveringRelation {
                lower: mv.clone(),
                upper,
                labels,
            }
        })
        .collect()
}

/// Decides whether `v1` lies in the topological closure of `v2`, by searching
/// compositions of the adjacency operations: an optional type-A merge first,
/// then one type-B operation per missing complex pair. Reflexively true.
pub fn in_closure(v1: &Stratum, v2: &Stratum) -> Result<bool, MvError> {
    if v1.ambient_degree() != v2.ambient_degree() {
        return Err(MvError::DegreeMismatch {
            left: v1.ambient_degree(),
            right: v2.ambient_degree(),
        });
    }
    if v1.mv() == v2.mv() {
        return Ok(true);
    }
    let l1 = v1.mv().length();
    let l2 = v2.mv().length();
    if l1 < l2 || (l1 - l2) % 2 != 0 {
        return Ok(false);
    }
    let k = (l1 - l2) / 2;
    let mut frontier: HashSet<MultiplicityVector> = HashSet::new();
    frontier.insert(v2.mv().clone());
    for merged in type_a_merges(v2.mv()) {
        frontier.insert(merged);
    }
    if k == 0 {
        return Ok(frontier.contains(v1.mv()));
    }
    let n = v1.ambient_degree();
    for _ in 0..k {
        let mut next = HashSet::new();
        for mv in &frontier {
            if let Ok(results) = type_b_results(mv, n) {
                next.extend(results);
            }
        }
        frontier = next;
    }
    Ok(frontier.contains(v1.mv()))
}

/// Builds the full graded poset for degree n.
pub fn build_poset(n: u32) -> StratumPoset {
    let nodes = enumerate_mvs(n);
    let index: BTreeMap<&MultiplicityVector, usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, s)| (s.mv(), i))
        .collect();
    let mut covers: Vec<CoveringRelation> = nodes.iter().flat_map(upward_neighbors).collect();
    covers.sort_by_key(|c| (index[&c.lower], index[&c.upper]));
    StratumPoset {
        ambient_degree: n,
        nodes,
        covers,
    }
}
