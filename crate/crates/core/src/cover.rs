//! Dynamic programming over the subset (or weight-vector) lattice for the
//! four partitioned cover problems the cluster-side solvers reduce to.
//!
//! All four solvers share one table layout: universe subsets (or residual
//! weight vectors) times a set index times a residual block requirement. The
//! requirement tracks only the block of the current set; completed blocks are
//! already accounted for, and the handoff at a block boundary re-seeds it.
//! One choice byte per state is kept for witness reconstruction.

use thiserror::Error;

/// Element subsets are bitmasks over the universe; the table is 2^|U| wide,
/// so universes are capped well below the mask width.
pub type ElemMask = u64;

pub const MAX_UNIVERSE: usize = 26;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("universe of size {0} exceeds the supported maximum {MAX_UNIVERSE}")]
    UniverseTooLarge(usize),
    #[error("element {element} out of range for universe of size {universe}")]
    ElementOutOfRange { element: usize, universe: usize },
    #[error("blocks must partition the family contiguously")]
    BadBlocks,
    #[error("{0} per-block values supplied for {1} blocks")]
    BadBlockAnnotation(usize, usize),
    #[error("{0} element weights supplied for universe of size {1}")]
    BadElementWeights(usize, usize),
}

/// Requirement placed on each block of the family partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockMode {
    /// Pick at least one set from every block whose flag is true.
    AtLeastFlag(Vec<bool>),
    /// Pick exactly one set from every block.
    ExactlyOne,
    /// Pick at least the block's weight many sets from it.
    AtLeastWeight(Vec<u32>),
}

/// Requirement placed on each universe element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverMode {
    AtLeastOnce,
    ExactlyOnce,
    /// Cover element u at least weight(u) times.
    Multicover(Vec<u32>),
}

/// A partitioned cover instance; the common shape behind all four problems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverInstance {
    universe_size: usize,
    family: Vec<ElemMask>,
    /// Half-open index ranges partitioning the family, in order.
    blocks: Vec<(usize, usize)>,
    block_mode: BlockMode,
    cover_mode: CoverMode,
    budget: Option<usize>,
}

impl CoverInstance {
    /// Builds an instance from explicit element lists per set and block sizes.
    pub fn new(
        universe_size: usize,
        sets: &[Vec<usize>],
        block_sizes: &[usize],
        block_mode: BlockMode,
        cover_mode: CoverMode,
    ) -> Result<CoverInstance, CoverError> {
        if universe_size > MAX_UNIVERSE {
            return Err(CoverError::UniverseTooLarge(universe_size));
        }
        let mut family = Vec::with_capacity(sets.len());
        for set in sets {
            let mut mask: ElemMask = 0;
            for &e in set {
                if e >= universe_size {
                    return Err(CoverError::ElementOutOfRange {
                        element: e,
                        universe: universe_size,
                    });
                }
                mask |= 1 << e;
            }
            family.push(mask);
        }
        let mut blocks = Vec::with_capacity(block_sizes.len());
        let mut at = 0;
        for &len in block_sizes {
            blocks.push((at, at + len));
            at += len;
        }
        if at != family.len() {
            return Err(CoverError::BadBlocks);
        }
        let inst = CoverInstance {
            universe_size,
            family,
            blocks,
            block_mode,
            cover_mode,
            budget: None,
        };
        inst.check_annotations()?;
        Ok(inst)
    }

    /// A single unflagged block over the whole family: plain set cover.
    pub fn plain_set_cover(
        universe_size: usize,
        sets: &[Vec<usize>],
    ) -> Result<CoverInstance, CoverError> {
        let blocks = if sets.is_empty() {
            vec![]
        } else {
            vec![sets.len()]
        };
        let flags = vec![false; blocks.len()];
        CoverInstance::new(
            universe_size,
            sets,
            &blocks,
            BlockMode::AtLeastFlag(flags),
            CoverMode::AtLeastOnce,
        )
    }

    pub fn with_budget(mut self, budget: usize) -> CoverInstance {
        self.budget = Some(budget);
        self
    }

    fn check_annotations(&self) -> Result<(), CoverError> {
        match &self.block_mode {
            BlockMode::AtLeastFlag(f) if f.len() != self.blocks.len() => {
                return Err(CoverError::BadBlockAnnotation(f.len(), self.blocks.len()));
            }
            BlockMode::AtLeastWeight(w) if w.len() != self.blocks.len() => {
                return Err(CoverError::BadBlockAnnotation(w.len(), self.blocks.len()));
            }
            _ => {}
        }
        if let CoverMode::Multicover(w) = &self.cover_mode {
            if w.len() != self.universe_size {
                return Err(CoverError::BadElementWeights(w.len(), self.universe_size));
            }
        }
        Ok(())
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn family(&self) -> &[ElemMask] {
        &self.family
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn block_mode(&self) -> &BlockMode {
        &self.block_mode
    }

    pub fn cover_mode(&self) -> &CoverMode {
        &self.cover_mode
    }

    pub fn budget(&self) -> Option<usize> {
        self.budget
    }

    fn full_mask(&self) -> ElemMask {
        if self.universe_size == 0 {
            0
        } else {
            (1 << self.universe_size) - 1
        }
    }

    /// Checks a pick of family indices against both modes. `picks` must be
    /// duplicate-free.
    pub fn is_satisfied_by(&self, picks: &[usize]) -> bool {
        let mut count = vec![0u32; self.universe_size];
        for &j in picks {
            for (e, c) in count.iter_mut().enumerate() {
                if self.family[j] >> e & 1 == 1 {
                    *c += 1;
                }
            }
        }
        let cover_ok = match &self.cover_mode {
            CoverMode::AtLeastOnce => count.iter().all(|&c| c >= 1),
            CoverMode::ExactlyOnce => count.iter().all(|&c| c == 1),
            CoverMode::Multicover(w) => count.iter().zip(w).all(|(&c, &need)| c >= need),
        };
        if !cover_ok {
            return false;
        }
        let mut per_block = vec![0usize; self.blocks.len()];
        for &j in picks {
            let x = self
                .blocks
                .iter()
                .position(|&(s, e)| s <= j && j < e)
                .expect("pick in range");
            per_block[x] += 1;
        }
        match &self.block_mode {
            BlockMode::AtLeastFlag(flags) => {
                per_block.iter().zip(flags).all(|(&c, &f)| !f || c >= 1)
            }
            BlockMode::ExactlyOne => per_block.iter().all(|&c| c == 1),
            BlockMode::AtLeastWeight(w) => per_block
                .iter()
                .zip(w)
                .all(|(&c, &need)| c >= need as usize),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverStatus {
    Feasible,
    Infeasible,
}

/// Result of a cover solve: optimum size, a witness of family indices in
/// ascending order, and the number of DP states the solve touched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSolution {
    pub status: CoverStatus,
    pub size: usize,
    pub witness: Vec<usize>,
    pub states: u64,
}

impl CoverSolution {
    fn infeasible(states: u64) -> CoverSolution {
        CoverSolution {
            status: CoverStatus::Infeasible,
            size: 0,
            witness: Vec::new(),
            states,
        }
    }

    fn trivial() -> CoverSolution {
        CoverSolution {
            status: CoverStatus::Feasible,
            size: 0,
            witness: Vec::new(),
            states: 0,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.status == CoverStatus::Feasible
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SubsetKind {
    Scp,
    Escp,
    ExactOne,
}

/// Plain set cover: minimum subfamily covering the universe.
pub fn solve_set_cover(inst: &CoverInstance) -> CoverSolution {
    match &inst.block_mode {
        BlockMode::AtLeastFlag(flags) => {
            assert!(
                flags.iter().all(|&f| !f),
                "set cover takes unflagged blocks"
            );
            assert!(inst.blocks.len() <= 1, "set cover takes a single block");
        }
        _ => panic!("set cover takes AtLeastFlag block mode"),
    }
    assert!(inst.cover_mode == CoverMode::AtLeastOnce);
    subset_dp(inst, SubsetKind::Scp)
}

/// Set cover with partition: at least one set from every flagged block.
pub fn solve_scp(inst: &CoverInstance) -> CoverSolution {
    assert!(
        matches!(inst.block_mode, BlockMode::AtLeastFlag(_)),
        "scp takes AtLeastFlag blocks"
    );
    assert!(inst.cover_mode == CoverMode::AtLeastOnce);
    subset_dp(inst, SubsetKind::Scp)
}

/// Exact cover with partition: every element covered exactly once, exactly
/// one set per block.
pub fn solve_escp(inst: &CoverInstance) -> CoverSolution {
    assert!(
        inst.block_mode == BlockMode::ExactlyOne,
        "escp takes ExactlyOne blocks"
    );
    assert!(inst.cover_mode == CoverMode::ExactlyOnce);
    subset_dp(inst, SubsetKind::Escp)
}

/// Cover the universe at least once with exactly one set per block.
pub fn solve_exact_one_scp(inst: &CoverInstance) -> CoverSolution {
    assert!(
        inst.block_mode == BlockMode::ExactlyOne,
        "exact-one scp takes ExactlyOne blocks"
    );
    assert!(inst.cover_mode == CoverMode::AtLeastOnce);
    subset_dp(inst, SubsetKind::ExactOne)
}

/// Weighted set multicover with partition, no critical sets.
pub fn solve_wsmp(inst: &CoverInstance) -> CoverSolution {
    assert!(
        matches!(inst.block_mode, BlockMode::AtLeastWeight(_)),
        "wsmp takes AtLeastWeight blocks"
    );
    assert!(matches!(inst.cover_mode, CoverMode::Multicover(_)));
    wsmp_dp(inst, None)
}

/// Weighted set multicover where picking a `critical` set raises its block's
/// requirement by one. The threshold solver marks a clique vertex critical
/// when its own residual demand equals the block weight: a picked vertex does
/// not dominate itself, so one extra pick is needed exactly in that case.
pub(crate) fn solve_wsmp_with_criticals(inst: &CoverInstance, criticals: &[bool]) -> CoverSolution {
    assert!(matches!(inst.block_mode, BlockMode::AtLeastWeight(_)));
    assert!(matches!(inst.cover_mode, CoverMode::Multicover(_)));
    assert_eq!(criticals.len(), inst.family.len());
    wsmp_dp(inst, Some(criticals))
}

/// Drops empty blocks after deciding their requirement outright. Returns
/// None when an empty block is unsatisfiable, making the instance
/// infeasible.
fn normalize_blocks(inst: &CoverInstance) -> Option<(Vec<(usize, usize)>, BlockMode)> {
    let mut blocks = Vec::new();
    let keep = |x: usize| inst.blocks[x].0 < inst.blocks[x].1;
    let mode = match &inst.block_mode {
        BlockMode::AtLeastFlag(flags) => {
            let mut kept = Vec::new();
            for (x, &(s, e)) in inst.blocks.iter().enumerate() {
                if s == e {
                    if flags[x] {
                        return None;
                    }
                } else {
                    blocks.push((s, e));
                    kept.push(flags[x]);
                }
            }
            BlockMode::AtLeastFlag(kept)
        }
        BlockMode::ExactlyOne => {
            if !(0..inst.blocks.len()).all(keep) {
                return None;
            }
            blocks = inst.blocks.clone();
            BlockMode::ExactlyOne
        }
        BlockMode::AtLeastWeight(weights) => {
            let mut kept = Vec::new();
            for (x, &(s, e)) in inst.blocks.iter().enumerate() {
                if s == e {
                    if weights[x] > 0 {
                        return None;
                    }
                } else {
                    blocks.push((s, e));
                    kept.push(weights[x]);
                }
            }
            BlockMode::AtLeastWeight(kept)
        }
    };
    Some((blocks, mode))
}

const CHOICE_SKIP: u8 = 0;
const CHOICE_PICK: u8 = 1;

/// The 2^|U| table shared by SCP, ESCP and exact-one SCP.
///
/// State (W, j, b): minimum picks among the first j+1 sets so that W is
/// covered per the cover mode, every completed block meets the block mode,
/// and the block containing set j still owes b picks. Iteration follows
/// ascending W, then j, then b; base values at j = 0 also admit the empty
/// pick when nothing is owed.
fn subset_dp(inst: &CoverInstance, kind: SubsetKind) -> CoverSolution {
    let u = inst.universe_size;
    assert!(u <= MAX_UNIVERSE);
    let full = inst.full_mask();

    let Some((blocks, mode)) = normalize_blocks(inst) else {
        return CoverSolution::infeasible(0);
    };
    let m = inst.family.len();
    if m == 0 {
        // Nothing to pick: feasible iff nothing is required.
        return if full == 0 {
            CoverSolution::trivial()
        } else {
            CoverSolution::infeasible(0)
        };
    }

    let family = &inst.family;
    let flag_of = |x: usize| -> u8 {
        match &mode {
            BlockMode::AtLeastFlag(f) => f[x] as u8,
            _ => 1,
        }
    };
    let mut block_of = vec![0usize; m];
    let mut first_in_block = vec![false; m];
    for (x, &(s, e)) in blocks.iter().enumerate() {
        block_of[s..e].fill(x);
        first_in_block[s] = true;
    }

    let inf: u32 = m as u32 + 1;
    let n_states = (1usize << u) * m * 2;
    let mut value = vec![inf; n_states];
    let mut choice = vec![CHOICE_SKIP; n_states];
    let idx = |w: ElemMask, j: usize, b: u8| -> usize { ((w as usize * m) + j) * 2 + b as usize };

    for w in 0..(1u64 << u) {
        for j in 0..m {
            for b in 0..2u8 {
                let set = family[j];
                let (mut best, mut best_choice) = (inf, CHOICE_SKIP);
                if j == 0 {
                    // Base: the empty pick when nothing is owed, else S_0 alone.
                    let empty_ok = w == 0 && b == 0;
                    if empty_ok {
                        best = 0;
                    }
                    let pick_ok = match kind {
                        SubsetKind::Scp => w & !set == 0,
                        SubsetKind::Escp => w == set && b == 1,
                        SubsetKind::ExactOne => w & !set == 0 && b == 1,
                    };
                    if pick_ok && 1 < best {
                        best = 1;
                        best_choice = CHOICE_PICK;
                    }
                } else {
                    let x = block_of[j];
                    let (skip_to, pick_to): (Option<u8>, Option<u8>) = if !first_in_block[j] {
                        match kind {
                            SubsetKind::Scp => (Some(b), Some(0)),
                            SubsetKind::Escp => (Some(b), (set & !w == 0 && b == 1).then_some(0)),
                            SubsetKind::ExactOne => (Some(b), (b == 1).then_some(0)),
                        }
                    } else {
                        let h = match kind {
                            SubsetKind::Scp => flag_of(x - 1),
                            SubsetKind::Escp | SubsetKind::ExactOne => 1,
                        };
                        match kind {
                            SubsetKind::Scp => ((b == 0).then_some(h), Some(h)),
                            SubsetKind::Escp => (
                                (b == 0).then_some(h),
                                (set & !w == 0 && b == 1).then_some(h),
                            ),
                            SubsetKind::ExactOne => ((b == 0).then_some(h), (b == 1).then_some(h)),
                        }
                    };
                    if let Some(b2) = skip_to {
                        best = value[idx(w, j - 1, b2)];
                    }
                    if let Some(b2) = pick_to {
                        let sub = value[idx(w & !set, j - 1, b2)];
                        let v = if sub >= inf { inf } else { sub + 1 };
                        if v < best {
                            best = v;
                            best_choice = CHOICE_PICK;
                        }
                    }
                }
                value[idx(w, j, b)] = best;
                choice[idx(w, j, b)] = best_choice;
            }
        }
    }

    let states = n_states as u64;
    debug_assert!(states <= 2 * (1u64 << u) * m as u64);

    let b_final = match kind {
        SubsetKind::Scp => flag_of(blocks.len() - 1),
        SubsetKind::Escp | SubsetKind::ExactOne => 1,
    };
    let total = value[idx(full, m - 1, b_final)];
    if total >= inf {
        return CoverSolution::infeasible(states);
    }

    // Walk the choice bytes back from the final state.
    let mut witness = Vec::new();
    let (mut w, mut b) = (full, b_final);
    for j in (0..m).rev() {
        let picked = choice[idx(w, j, b)] == CHOICE_PICK;
        if j == 0 {
            if picked {
                witness.push(0);
            }
            break;
        }
        let x = block_of[j];
        if picked {
            witness.push(j);
            w &= !family[j];
            b = if !first_in_block[j] {
                0
            } else {
                match kind {
                    SubsetKind::Scp => flag_of(x - 1),
                    _ => 1,
                }
            };
        } else if first_in_block[j] {
            b = match kind {
                SubsetKind::Scp => flag_of(x - 1),
                _ => 1,
            };
        }
    }
    witness.reverse();
    debug_assert_eq!(witness.len(), total as usize);

    CoverSolution {
        status: CoverStatus::Feasible,
        size: total as usize,
        witness,
        states,
    }
}

/// Residual requirement of the current block in the weighted DP: `needed`
/// more picks, and whether a critical set was already picked (which raised
/// the target by one and so must not decrement on its own pick).
#[derive(Clone, Copy, PartialEq, Eq)]
struct BlockFlag {
    needed: u32,
    tainted: bool,
}

impl BlockFlag {
    fn fresh(needed: u32) -> BlockFlag {
        BlockFlag {
            needed,
            tainted: false,
        }
    }

    fn after_pick(self, critical: bool) -> BlockFlag {
        if critical && !self.tainted {
            BlockFlag {
                needed: self.needed,
                tainted: true,
            }
        } else {
            BlockFlag {
                needed: self.needed.saturating_sub(1),
                tainted: self.tainted || critical,
            }
        }
    }
}

/// The (r+1)^|U| weighted table. State (j, w, f): minimum picks among the
/// first j+1 sets meeting residual element demands w, with completed blocks
/// fully served and the current block owing f.
fn wsmp_dp(inst: &CoverInstance, criticals: Option<&[bool]>) -> CoverSolution {
    let u = inst.universe_size;
    assert!(u <= MAX_UNIVERSE);
    let elem_weights = match &inst.cover_mode {
        CoverMode::Multicover(w) => w.clone(),
        _ => unreachable!(),
    };
    let Some((blocks, mode)) = normalize_blocks(inst) else {
        return CoverSolution::infeasible(0);
    };
    let block_weights = match &mode {
        BlockMode::AtLeastWeight(w) => w.clone(),
        _ => unreachable!(),
    };
    let m = inst.family.len();
    if m == 0 {
        return if elem_weights.iter().all(|&w| w == 0) {
            CoverSolution::trivial()
        } else {
            CoverSolution::infeasible(0)
        };
    }

    // Element demands set the radix; block demands (plus one for the taint
    // dimension when criticals are in play) set the flag range.
    let radix = (elem_weights.iter().copied().max().unwrap_or(0) + 1) as usize;
    let max_block = block_weights.iter().copied().max().unwrap_or(0);
    let needed_range = (max_block + 1) as usize;
    let taint_range = if criticals.is_some() { 2 } else { 1 };
    let flag_range = needed_range * taint_range;

    let family = &inst.family;
    let mut block_of = vec![0usize; m];
    let mut first_in_block = vec![false; m];
    for (x, &(s, e)) in blocks.iter().enumerate() {
        block_of[s..e].fill(x);
        first_in_block[s] = true;
    }
    let crit = |j: usize| criticals.is_some_and(|c| c[j]);

    let mut pow = vec![1usize; u + 1];
    for i in 0..u {
        pow[i + 1] = pow[i] * radix;
    }
    let n_codes = pow[u];
    let encode_flag =
        |f: BlockFlag| -> usize { f.needed as usize + needed_range * f.tainted as usize };

    // Residual demand code after picking set `set`: clamped decrement on
    // every covered element.
    let decrement = |code: usize, set: ElemMask| -> usize {
        let mut out = code;
        for (e, &p) in pow[..u].iter().enumerate() {
            if set >> e & 1 == 1 && (code / p) % radix > 0 {
                out -= p;
            }
        }
        out
    };

    let inf: u32 = m as u32 + 1;
    let n_states = m * n_codes * flag_range;
    if criticals.is_none() {
        // Plain WSMP stays within (r+1)^(|U|+1) * m states.
        let r = radix.max(needed_range) as u64;
        debug_assert!(n_states as u64 <= r.pow(u as u32 + 1) * m as u64);
    }
    let mut value = vec![inf; n_states];
    let mut choice = vec![CHOICE_SKIP; n_states];
    let idx = |j: usize, code: usize, f: usize| -> usize { (j * n_codes + code) * flag_range + f };

    let all_flags: Vec<BlockFlag> = (0..flag_range)
        .map(|enc| BlockFlag {
            needed: (enc % needed_range) as u32,
            tainted: enc >= needed_range,
        })
        .collect();

    for j in 0..m {
        let set = family[j];
        let is_crit = crit(j);
        for code in 0..n_codes {
            for &f in &all_flags {
                let (mut best, mut best_choice) = (inf, CHOICE_SKIP);
                if j == 0 {
                    if code == 0 && f.needed == 0 {
                        best = 0;
                    }
                    let covers = (0..u).all(|e| {
                        let digit = (code / pow[e]) % radix;
                        digit <= (set >> e & 1) as usize
                    });
                    if covers && f.after_pick(is_crit).needed == 0 && 1 < best {
                        best = 1;
                        best_choice = CHOICE_PICK;
                    }
                } else {
                    let x = block_of[j];
                    if !first_in_block[j] {
                        best = value[idx(j - 1, code, encode_flag(f))];
                        let sub = value[idx(
                            j - 1,
                            decrement(code, set),
                            encode_flag(f.after_pick(is_crit)),
                        )];
                        if sub < inf && sub + 1 < best {
                            best = sub + 1;
                            best_choice = CHOICE_PICK;
                        }
                    } else {
                        let h = encode_flag(BlockFlag::fresh(block_weights[x - 1]));
                        if f.needed == 0 {
                            best = value[idx(j - 1, code, h)];
                        }
                        if f.after_pick(is_crit).needed == 0 {
                            let sub = value[idx(j - 1, decrement(code, set), h)];
                            if sub < inf && sub + 1 < best {
                                best = sub + 1;
                                best_choice = CHOICE_PICK;
                            }
                        }
                    }
                }
                let at = idx(j, code, encode_flag(f));
                value[at] = best;
                choice[at] = best_choice;
            }
        }
    }

    let states = n_states as u64;

    let full_code: usize = elem_weights
        .iter()
        .zip(&pow)
        .map(|(&w, &p)| w as usize * p)
        .sum();
    let f_final = BlockFlag::fresh(block_weights[blocks.len() - 1]);
    let total = value[idx(m - 1, full_code, encode_flag(f_final))];
    if total >= inf {
        return CoverSolution::infeasible(states);
    }

    let mut witness = Vec::new();
    let (mut code, mut f) = (full_code, f_final);
    for j in (0..m).rev() {
        let picked = choice[idx(j, code, encode_flag(f))] == CHOICE_PICK;
        if j == 0 {
            if picked {
                witness.push(0);
            }
            break;
        }
        let x = block_of[j];
        if picked {
            witness.push(j);
            code = decrement(code, family[j]);
            f = if first_in_block[j] {
                BlockFlag::fresh(block_weights[x - 1])
            } else {
                f.after_pick(crit(j))
            };
        } else if first_in_block[j] {
            f = BlockFlag::fresh(block_weights[x - 1]);
        }
    }
    witness.reverse();
    debug_assert_eq!(witness.len(), total as usize);

    CoverSolution {
        status: CoverStatus::Feasible,
        size: total as usize,
        witness,
        states,
    }
}
