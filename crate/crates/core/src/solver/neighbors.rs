//! Exchange-graph neighbor discovery by binary search, without building the
//! graph.

use crate::element::{Element, ElementSet};
use crate::matroid::{check_in_range, Matroid};

use super::ordered::{first_dependent_prefix, min_dependent_prefix, OrderedGround};
use super::SolveError;

/// `{x ∉ S : S + x independent}`, using exactly `n - |S|` oracle calls.
pub(crate) fn free_additions<M: Matroid + ?Sized>(m: &M, solution: &ElementSet) -> ElementSet {
    let n = m.ground_size();
    let mut probe = solution.clone();
    let mut free = ElementSet::new(n);
    for x in (0..n).filter(|&x| !solution.contains(x)) {
        probe.insert(x);
        if m.is_independent(&probe) {
            free.insert(x);
        }
        probe.remove(x);
    }
    free
}

/// Sources (for `M1`) or sinks (for `M2`): elements outside `solution` that
/// can be added while keeping it independent.
///
/// Verifies `solution` first, so this issues `n - |S| + 1` calls.
pub fn compute_free_additions<M: Matroid + ?Sized>(m: &M, solution: &ElementSet) -> Result<ElementSet, SolveError> {
    check_in_range(m.ground_size(), solution)?;
    if !m.is_independent(solution) {
        return Err(SolveError::ContractViolation(format!(
            "solution {solution:?} is dependent"
        )));
    }
    Ok(free_additions(m, solution))
}

/// Unreached solution elements `u` with `S - u + v` independent in `m2`,
/// i.e. the unique circuit of `S + v` minus `v` and minus the reached prefix.
///
/// Each element found is promoted into the reached prefix of `order`. Stops
/// as soon as the minimum dependent prefix falls inside the reached region,
/// which means every circuit element has been collected.
pub fn fan_in_neighbors<M: Matroid + ?Sized>(
    m2: &M,
    order: &mut OrderedGround,
    v: Element,
) -> Result<ElementSet, SolveError> {
    let mut found = ElementSet::new(m2.ground_size());
    loop {
        let i = min_dependent_prefix(m2, order, v, order.len())
            .map_err(|_| SolveError::ContractViolation(format!("element {v} is a sink; S + {v} is independent")))?;
        if i <= order.reached_len() {
            return Ok(found);
        }
        found.insert(order.sequence()[i - 1]);
        order.promote(i - 1);
    }
}

/// Elements `t ∉ S ∪ reached_out` with `S - v + t` independent in `m1` for
/// some `v` in `layer`, each paired with such a `v`.
///
/// `layer` must be sorted; the parent is the element at the minimum
/// dependent prefix of `layer` on top of `(S \ layer) + t`. Output is in
/// ascending order of `t`.
pub fn fan_out_neighbors<M: Matroid + ?Sized>(
    m1: &M,
    solution: &ElementSet,
    layer: &[Element],
    reached_out: &ElementSet,
) -> Result<Vec<(Element, Element)>, SolveError> {
    let n = m1.ground_size();
    let mut probe = solution.clone();
    for &v in layer {
        probe.remove(v);
    }
    let mut out = Vec::new();
    for u in (0..n).filter(|&u| !solution.contains(u) && !reached_out.contains(u)) {
        probe.insert(u);
        if m1.is_independent(&probe) {
            let i = first_dependent_prefix(m1, &mut probe, layer, 1).ok_or_else(|| {
                SolveError::ContractViolation(format!("element {u} is a source outside the reached set"))
            })?;
            out.push((u, layer[i - 1]));
        }
        probe.remove(u);
    }
    Ok(out)
}
