//! Physical-architecture model: adjacency graphs for the supported
//! qubit arrangements, legality checking of schedules, and the
//! mobile-ancilla relocation counter.
//!
//! Geometry is encoded purely as an adjacency graph; only edge
//! legality matters for deciding whether a schedule can run.

use std::collections::BTreeSet;

use crate::compile::{Block, Encoding};
use crate::pulse::Schedule;

/// Undirected adjacency over physical sites, with the block placement
/// and ancilla designation that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayoutGraph {
    sites: usize,
    edges: BTreeSet<(usize, usize)>,
    blocks: Vec<Block>,
    ancilla_sites: BTreeSet<usize>,
}

impl LayoutGraph {
    fn empty(sites: usize) -> Self {
        LayoutGraph {
            sites,
            edges: BTreeSet::new(),
            blocks: Vec::new(),
            ancilla_sites: BTreeSet::new(),
        }
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert!(a != b && a < self.sites && b < self.sites);
        self.edges.insert((a.min(b), a.max(b)));
    }

    pub fn num_sites(&self) -> usize {
        self.sites
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Blocks this layout was built for, in placement order.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn ancilla_sites(&self) -> impl Iterator<Item = usize> + '_ {
        self.ancilla_sites.iter().copied()
    }

    pub fn is_ancilla(&self, site: usize) -> bool {
        self.ancilla_sites.contains(&site)
    }
}

/// Triangle strip: each block's three sites (3k, 3k+1, 3k+2) are fully
/// connected, and consecutive blocks are joined by the triangles formed
/// by one block's code pair with each code qubit of the next. No edge
/// spans non-adjacent blocks.
///
/// For `Encoding::TruncatedQubit` the third site of each block is
/// marked as an ancilla; for `Encoding::Qutrit` all sites are code.
pub fn triangular_layout(num_blocks: usize, kind: Encoding) -> LayoutGraph {
    let mut g = LayoutGraph::empty(3 * num_blocks);
    for k in 0..num_blocks {
        let base = 3 * k;
        g.add_edge(base, base + 1);
        g.add_edge(base, base + 2);
        g.add_edge(base + 1, base + 2);
        g.blocks.push(Block::contiguous(k));
        if kind == Encoding::TruncatedQubit {
            g.ancilla_sites.insert(base + 2);
        }
        if k + 1 < num_blocks {
            let next = base + 3;
            // Code pair of block k against each code qubit of block k+1.
            g.add_edge(base, next);
            g.add_edge(base + 1, next);
            g.add_edge(base, next + 1);
            g.add_edge(base + 1, next + 1);
        }
    }
    g
}

/// A line of sites with nearest-neighbor edges, optionally augmented
/// with next-nearest edges. Without the augmentation, three-site
/// diagonal sequences are illegal (the end-to-end pair is missing).
pub fn linear_layout(num_sites: usize, next_nearest: bool) -> LayoutGraph {
    let mut g = LayoutGraph::empty(num_sites);
    for i in 0..num_sites.saturating_sub(1) {
        g.add_edge(i, i + 1);
    }
    if next_nearest {
        for i in 0..num_sites.saturating_sub(2) {
            g.add_edge(i, i + 2);
        }
    }
    g
}

/// How the second plane supplies ancillas to the code pairs below.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AncillaMode {
    /// One stationary ancilla above each code pair.
    StaticRow,
    /// A single ancilla transported to whichever pair needs it; every
    /// pair has (potential) edges to it, and relocations are counted by
    /// [`count_ancilla_relocations`].
    Mobile,
}

/// Code pairs in one plane at sites (2k, 2k+1); ancillas in the plane
/// above, each with edges to both members of the pair(s) it serves.
pub fn two_plane_layout(num_pairs: usize, mode: AncillaMode) -> LayoutGraph {
    let ancillas = match mode {
        AncillaMode::StaticRow => num_pairs,
        AncillaMode::Mobile => 1,
    };
    let mut g = LayoutGraph::empty(2 * num_pairs + ancillas);
    for k in 0..num_pairs {
        g.add_edge(2 * k, 2 * k + 1);
        let anc = match mode {
            AncillaMode::StaticRow => 2 * num_pairs + k,
            AncillaMode::Mobile => 2 * num_pairs,
        };
        g.add_edge(2 * k, anc);
        g.add_edge(2 * k + 1, anc);
        g.ancilla_sites.insert(anc);
        g.blocks
            .push(Block::new(2 * k, 2 * k + 1, anc).expect("distinct sites"));
    }
    g
}

/// Why a pulse is illegal on a layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationKind {
    /// The pair is not an edge of the layout.
    NotAnEdge,
    /// A pulse endpoint lies outside the layout's sites.
    SiteOutOfRange,
}

/// One illegal pulse: its position in the schedule and its pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub gate_index: usize,
    pub pair: (usize, usize),
    pub kind: ViolationKind,
}

/// Every pulse whose pair is not an edge of the layout, in schedule
/// order. An empty result means the schedule is legal.
pub fn validate_schedule(schedule: &Schedule, layout: &LayoutGraph) -> Vec<Violation> {
    schedule
        .gates()
        .iter()
        .enumerate()
        .filter_map(|(gate_index, g)| {
            let pair = g.pair();
            if pair.1 >= layout.num_sites() {
                Some(Violation {
                    gate_index,
                    pair,
                    kind: ViolationKind::SiteOutOfRange,
                })
            } else if !layout.has_edge(pair.0, pair.1) {
                Some(Violation {
                    gate_index,
                    pair,
                    kind: ViolationKind::NotAnEdge,
                })
            } else {
                None
            }
        })
        .collect()
}

/// Number of times a mobile ancilla must move between code pairs over
/// the course of a schedule: transitions between distinct pairs in the
/// sequence of ancilla-touching pulses.
pub fn count_ancilla_relocations(schedule: &Schedule, layout: &LayoutGraph) -> usize {
    let mut relocations = 0;
    let mut current_pair: Option<usize> = None;
    for g in schedule.gates() {
        let (a, b) = g.pair();
        let partner = if layout.is_ancilla(a) {
            Some(b)
        } else if layout.is_ancilla(b) {
            Some(a)
        } else {
            None
        };
        if let Some(site) = partner {
            let pair_index = site / 2;
            if let Some(prev) = current_pair {
                if prev != pair_index {
                    relocations += 1;
                }
            }
            current_pair = Some(pair_index);
        }
    }
    relocations
}
