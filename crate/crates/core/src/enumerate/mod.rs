//! Bounded enumeration of the curvatures of a packing, and the reports
//! built on top of it.

mod bitmap;
mod io;
mod report;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use thiserror::Error;

use crate::packing::Quadruple;

pub use bitmap::CurvatureBitmap;
pub use io::{read_bitmap, write_bitmap, APBM_MAGIC, APBM_VERSION};
pub use report::{
    cooccurrence_check, first_inadmissible, missing_curvatures, obstruction_hits,
    obstruction_members, sporadic_set, successive_differences, Cooccurrence, MissingReport,
    SporadicReport,
};

/// Largest bound accepted by the enumerator.
pub const MAX_BOUND: u64 = 1 << 40;

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("bound {0} outside 1..=2^40")]
    BoundOutOfRange(u64),
    #[error("curvature overflow below bound {0}")]
    Overflow(u64),
    #[error("report metadata mismatch: {0}")]
    Mismatch(String),
    #[error("values not strictly increasing at index {0}")]
    NotIncreasing(usize),
    #[error("not an APBM file")]
    BadMagic,
    #[error("unsupported APBM version {0}")]
    UnsupportedVersion(u8),
    #[error("corrupt APBM file: {0}")]
    Corrupt(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub threads: usize,
    /// Keep every `witness_stride`-th quadruple visited (0 keeps none).
    pub witness_stride: u64,
    pub witness_limit: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            threads: 1,
            witness_stride: 0,
            witness_limit: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub bitmap: CurvatureBitmap,
    /// Quadruples generated, including the root.
    pub nodes: u64,
    pub witnesses: Vec<Quadruple>,
}

/// Every curvature in `1..=bound` of the packing containing `root`.
pub fn enumerate_curvatures(
    root: &Quadruple,
    bound: u64,
) -> Result<CurvatureBitmap, EnumerateError> {
    Ok(enumerate_with(root, bound, &EnumerateOptions::default())?.bitmap)
}

/// A node of the tree: the quadruple and the index of the move that
/// produced it (4 for the root).
type Node = ([i64; 4], u8);

/// Frontier size per worker before the parallel phase starts.
const TASKS_PER_THREAD: usize = 64;

pub fn enumerate_with(
    root: &Quadruple,
    bound: u64,
    opts: &EnumerateOptions,
) -> Result<Enumeration, EnumerateError> {
    if bound == 0 || bound > MAX_BOUND {
        return Err(EnumerateError::BoundOutOfRange(bound));
    }
    let root = root.reduce_to_root();
    let n = bound as i64;
    let mut bitmap = CurvatureBitmap::new(root, bound);
    for x in root.entries() {
        if x >= 1 {
            bitmap.insert(x as u64);
        }
    }
    let mut sink = Sink::new(opts);
    sink.visit(&root.entries());

    // At the root only moves that enlarge the quadruple lead away from it,
    // and moves giving the same multiset give congruent subtrees.
    let e = root.entries();
    let s: i64 = e.iter().sum();
    let mut frontier: Vec<Node> = Vec::new();
    let mut seen: Vec<[i64; 4]> = Vec::new();
    for i in 0..4 {
        let v = 2 * (s - e[i]) - e[i];
        if v <= e[i] || v > n {
            continue;
        }
        let mut child = e;
        child[i] = v;
        let mut key = child;
        key.sort_unstable();
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        bitmap.insert(v as u64);
        sink.visit(&child);
        frontier.push((child, i as u8));
    }

    let threads = opts.threads.max(1);
    if threads == 1 {
        let mut stack = frontier;
        descend(&mut stack, n, bitmap.words_mut(), &mut sink);
        return Ok(sink.finish(bitmap));
    }

    // Breadth-first expansion until there are enough independent subtrees
    // to keep every worker busy.
    while !frontier.is_empty() && frontier.len() < threads * TASKS_PER_THREAD {
        let mut next = Vec::with_capacity(frontier.len() * 3);
        for node in frontier {
            expand(node, n, bitmap.words_mut(), &mut sink, |c| next.push(c));
        }
        frontier = next;
    }

    let cursor = AtomicUsize::new(0);
    let frontier = &frontier;
    let results = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| {
                let mut words = vec![0u64; bitmap.words().len()];
                let mut local = Sink::new(opts);
                let mut stack = Vec::new();
                loop {
                    let k = cursor.fetch_add(1, Ordering::Relaxed);
                    let Some(&task) = frontier.get(k) else { break };
                    stack.push(task);
                    descend(&mut stack, n, &mut words, &mut local);
                }
                results.lock().unwrap().push((words, local));
            });
        }
    });
    for (words, local) in results.into_inner().unwrap() {
        bitmap.union_with(&words);
        sink.absorb(local);
    }
    Ok(sink.finish(bitmap))
}

#[inline]
fn set_bit(words: &mut [u64], v: i64) {
    let i = (v - 1) as u64;
    words[(i >> 6) as usize] |= 1 << (i & 63);
}

/// Children of a non-root node: every move but the one that produced it.
/// The replaced entry always grows, so children above the bound are pruned
/// together with their subtrees.
#[inline]
fn expand(node: Node, n: i64, words: &mut [u64], sink: &mut Sink, mut push: impl FnMut(Node)) {
    let (e, last) = node;
    let s = e[0] + e[1] + e[2] + e[3];
    for i in 0..4 {
        if i as u8 == last {
            continue;
        }
        let v = 2 * (s - e[i]) - e[i];
        if v > n || v < 1 {
            continue;
        }
        set_bit(words, v);
        let mut child = e;
        child[i] = v;
        sink.visit(&child);
        push((child, i as u8));
    }
}

fn descend(stack: &mut Vec<Node>, n: i64, words: &mut [u64], sink: &mut Sink) {
    while let Some(node) = stack.pop() {
        expand(node, n, words, sink, |c| stack.push(c));
    }
}

/// Node counter and witness sampler.
struct Sink {
    nodes: u64,
    stride: u64,
    limit: usize,
    witnesses: Vec<[i64; 4]>,
}

impl Sink {
    fn new(opts: &EnumerateOptions) -> Self {
        Sink {
            nodes: 0,
            stride: opts.witness_stride,
            limit: opts.witness_limit,
            witnesses: Vec::new(),
        }
    }

    #[inline]
    fn visit(&mut self, e: &[i64; 4]) {
        self.nodes += 1;
        if self.stride != 0
            && self.nodes.is_multiple_of(self.stride)
            && self.witnesses.len() < self.limit
        {
            self.witnesses.push(*e);
        }
    }

    fn absorb(&mut self, other: Sink) {
        self.nodes += other.nodes;
        let room = self.limit.saturating_sub(self.witnesses.len());
        self.witnesses
            .extend(other.witnesses.into_iter().take(room));
    }

    fn finish(self, bitmap: CurvatureBitmap) -> Enumeration {
        let witnesses = self
            .witnesses
            .into_iter()
            .map(|e| Quadruple::new(e).expect("moves preserve the Descartes relation"))
            .collect();
        Enumeration {
            bitmap,
            nodes: self.nodes,
            witnesses,
        }
    }
}
