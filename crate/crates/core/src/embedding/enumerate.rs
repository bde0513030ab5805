//! Exhaustive enumeration of planar rotation systems.

use super::RotationSystem;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`all_rotation_systems`].
pub const ENUMERATION_MAX: usize = 7;

/// Every planar rotation system of `g`, once per mirror pair.
///
/// Rotations are normalized to start at the smallest neighbour; a system is
/// yielded when it is lexicographically no larger than its mirror image.
/// Graphs whose rotations are all self-mirrored (maximum degree 2) yield
/// exactly one system.
pub fn all_rotation_systems(g: &Graph) -> Result<AllRotationSystems> {
    if g.n() > ENUMERATION_MAX {
        return Err(Error::SizeBound { what: "embedding enumeration", n: g.n(), max: ENUMERATION_MAX });
    }
    let choices = (0..g.n())
        .map(|v| {
            let nb: Vec<usize> = g.neighbors(v).iter().collect();
            match nb.split_first() {
                None => vec![Vec::new()],
                Some((&first, rest)) => {
                    let mut out = Vec::new();
                    permutations(&mut rest.to_vec(), 0, &mut |p| {
                        let mut order = vec![first];
                        order.extend_from_slice(p);
                        out.push(order);
                    });
                    out.sort();
                    out
                }
            }
        })
        .collect();
    Ok(AllRotationSystems { graph: g.clone(), choices, idx: vec![0; g.n()], done: false })
}

fn permutations(items: &mut Vec<usize>, k: usize, emit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        emit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, emit);
        items.swap(k, i);
    }
}

pub struct AllRotationSystems {
    graph: Graph,
    choices: Vec<Vec<Vec<usize>>>,
    idx: Vec<usize>,
    done: bool,
}

impl AllRotationSystems {
    fn advance(&mut self) {
        for v in (0..self.idx.len()).rev() {
            self.idx[v] += 1;
            if self.idx[v] < self.choices[v].len() {
                return;
            }
            self.idx[v] = 0;
        }
        self.done = true;
    }
}

fn mirror_normalized(rot: &[Vec<usize>]) -> Vec<Vec<usize>> {
    rot.iter()
        .map(|r| match r.split_first() {
            None => Vec::new(),
            Some((&a, rest)) => std::iter::once(a).chain(rest.iter().rev().copied()).collect(),
        })
        .collect()
}

impl Iterator for AllRotationSystems {
    type Item = RotationSystem;

    fn next(&mut self) -> Option<RotationSystem> {
        while !self.done {
            let rot: Vec<Vec<usize>> = self.idx.iter().enumerate().map(|(v, &i)| self.choices[v][i].clone()).collect();
            self.advance();
            if rot > mirror_normalized(&rot) {
                continue;
            }
            let rs = RotationSystem::new(&self.graph, rot).expect("choices are neighbour orderings");
            if rs.trace_faces().satisfies_euler() {
                return Some(rs);
            }
        }
        None
    }
}
