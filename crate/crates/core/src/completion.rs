//! Involutive completion of binomial sets to minimal Janet bases.
//!
//! The state is split into `T`, the part of the basis already processed and
//! indexed by a [`JanetTree`], and `Q`, pending binomials together with the
//! nonmultiplicative prolongations still to be examined. Every element is a
//! [`Triple`] recording its ancestor and which prolongations were already
//! taken.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::binomial::{sort_descending, Binomial};
use crate::error::{Error, Result};
use crate::janet::JanetTree;
use crate::monomial::{Monomial, Var, VarSet};
use crate::order::MonomialOrder;

/// A binomial with its ancestor's leading monomial and the set of
/// nonmultiplicative variables already used for prolongations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    pub bin: Binomial,
    pub anc: Monomial,
    pub nmp: VarSet,
}

impl Triple {
    /// A binomial that is its own ancestor.
    pub fn fresh(bin: Binomial) -> Self {
        let anc = bin.lead().clone();
        Triple { bin, anc, nmp: VarSet::new() }
    }

    pub fn lead(&self) -> &Monomial {
        self.bin.lead()
    }
}

/// `anc(f) * anc(g)` divides `lm(f)`.
pub fn criterion1(f: &Triple, g: &Triple) -> bool {
    f.anc.mul(&g.anc).is_ok_and(|p| p.divides(f.lead()))
}

/// `deg lcm(anc(f), anc(g)) < deg lm(f)`.
pub fn criterion2(f: &Triple, g: &Triple) -> bool {
    f.anc.lcm(&g.anc).degree() < f.lead().degree()
}

/// What happened during one step of the completion loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    /// Intake finished: `T` holds the lowest generator.
    Seeded,
    /// An element was taken from `Q`.
    Selected { lead: Monomial },
    /// Elements of `T` above the selected one moved back to `Q`.
    Displaced { count: usize },
    /// The selected element joined `T`.
    Inserted { lead: Monomial },
    /// New nonmultiplicative prolongations were queued.
    Prolonged { count: usize },
    /// A binomial was discarded by an involutive criterion.
    CriterionHit { discarded: Binomial },
    /// A binomial reduced to zero.
    ReducedToZero,
    Finished,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRecord {
    pub iteration: usize,
    pub t_len: usize,
    pub q_len: usize,
    pub event: TraceEvent,
}

/// Knobs for [`binomial_janet_basis_with`].
#[derive(Default)]
pub struct CompletionOptions<'a> {
    pub trace: Option<&'a mut dyn FnMut(&TraceRecord)>,
    /// Re-check the state invariants after every iteration. Slow.
    pub verify_invariants: bool,
}

/// Result of [`CompletionState::nf_j`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NfOutcome {
    /// Discarded by Criterion I or II without reducing.
    Criterion,
    Zero,
    Binomial(Binomial),
}

impl NfOutcome {
    pub fn into_binomial(self) -> Option<Binomial> {
        match self {
            NfOutcome::Binomial(b) => Some(b),
            _ => None,
        }
    }
}

type QKey = (Vec<u128>, u64);

/// `T` and `Q` of the completion together with the order.
pub struct CompletionState<'o> {
    ord: &'o MonomialOrder,
    slots: Vec<Option<Triple>>,
    free: Vec<usize>,
    tree: JanetTree<usize>,
    queue: BTreeMap<QKey, Triple>,
    seq: u64,
}

impl<'o> CompletionState<'o> {
    pub fn new(nvars: u32, ord: &'o MonomialOrder) -> Self {
        CompletionState {
            ord,
            slots: Vec::new(),
            free: Vec::new(),
            tree: JanetTree::new(nvars),
            queue: BTreeMap::new(),
            seq: 0,
        }
    }

    /// Puts `triple` into `T` as is. Leading monomials must be distinct.
    pub fn add_to_t(&mut self, triple: Triple) -> Result<()> {
        let lead = triple.lead().clone();
        let slot = match self.free.pop() {
            Some(s) => {
                self.slots[s] = Some(triple);
                s
            }
            None => {
                self.slots.push(Some(triple));
                self.slots.len() - 1
            }
        };
        if let Err(e) = self.tree.insert(lead, slot) {
            self.slots[slot] = None;
            self.free.push(slot);
            return Err(e);
        }
        Ok(())
    }

    fn take_from_t(&mut self, slot: usize) -> Triple {
        let triple = self.slots[slot].take().expect("live slot");
        self.tree.remove(triple.lead()).expect("tree mirrors T");
        self.free.push(slot);
        triple
    }

    fn t(&self, slot: usize) -> &Triple {
        self.slots[slot].as_ref().expect("tree points at a live slot")
    }

    pub fn t_len(&self) -> usize {
        self.tree.len()
    }

    pub fn q_len(&self) -> usize {
        self.queue.len()
    }

    pub fn t_triples(&self) -> impl Iterator<Item = &Triple> {
        self.slots.iter().flatten()
    }

    pub fn q_triples(&self) -> impl Iterator<Item = &Triple> {
        self.queue.values()
    }

    fn push_q(&mut self, triple: Triple) {
        self.seq += 1;
        self.queue.insert((self.ord.sort_key(triple.lead()), self.seq), triple);
    }

    /// Janet normal form of `h` modulo `T`, reducing head and tail.
    pub fn janet_nf(&self, mut h: Binomial) -> Result<Option<Binomial>> {
        loop {
            if let Some((_, &g)) = self.tree.j_divisor(h.lead()) {
                match h.reduce_lead(&self.t(g).bin, self.ord)? {
                    Some(r) => h = r,
                    None => return Ok(None),
                }
            } else if let Some((_, &g)) = self.tree.j_divisor(h.tail()) {
                match h.reduce_tail(&self.t(g).bin, self.ord)? {
                    Some(r) => h = r,
                    None => return Ok(None),
                }
            } else {
                return Ok(Some(h));
            }
        }
    }

    /// Tail reduction only; the head is left alone even if `T` divides it.
    fn janet_tail_nf(&self, mut h: Binomial) -> Result<Binomial> {
        while let Some((_, &g)) = self.tree.j_divisor(h.tail()) {
            h = h.reduce_tail(&self.t(g).bin, self.ord)?.expect("tail reduction keeps lead > tail");
        }
        Ok(h)
    }

    /// The Janet normal form of `bin(f)` modulo `T`, or a criterion verdict.
    pub fn nf_j(&self, f: &Triple) -> Result<NfOutcome> {
        if let Some((_, &g)) = self.tree.j_divisor(f.lead()) {
            let g = self.t(g);
            if *f.lead() != f.anc && (criterion1(f, g) || criterion2(f, g)) {
                return Ok(NfOutcome::Criterion);
            }
        }
        Ok(match self.janet_nf(f.bin.clone())? {
            Some(h) => NfOutcome::Binomial(h),
            None => NfOutcome::Zero,
        })
    }

    /// Reduces every triple modulo `T`: drops zeros, resets the ancestry of
    /// triples whose leading monomial changed.
    pub fn janet_reduce(&self, q: Vec<Triple>) -> Result<Vec<Triple>> {
        let mut out = Vec::with_capacity(q.len());
        for p in q {
            if let Some(t) = self.reduce_triple(p, &mut |_| {})? {
                out.push(t);
            }
        }
        Ok(out)
    }

    fn reduce_triple(&self, p: Triple, emit: &mut dyn FnMut(TraceEvent)) -> Result<Option<Triple>> {
        match self.nf_j(&p)? {
            NfOutcome::Criterion => {
                emit(TraceEvent::CriterionHit { discarded: p.bin });
                Ok(None)
            }
            NfOutcome::Zero => {
                emit(TraceEvent::ReducedToZero);
                Ok(None)
            }
            NfOutcome::Binomial(h) if h.lead() != p.lead() => Ok(Some(Triple::fresh(h))),
            NfOutcome::Binomial(h) => Ok(Some(Triple { bin: h, ..p })),
        }
    }
}

/// Is `w` in the Janet cone of `u`, whose nonmultiplicative variables are `nm`?
fn in_cone(u: &Monomial, nm: &VarSet, w: &Monomial) -> bool {
    u.divides(w) && w.support().all(|(v, k)| k == u.deg(v) || !nm.contains(v))
}

struct Run<'o, 'a> {
    st: CompletionState<'o>,
    iteration: usize,
    opts: CompletionOptions<'a>,
}

impl Run<'_, '_> {
    fn emit(&mut self, event: TraceEvent) {
        if let Some(trace) = self.opts.trace.as_mut() {
            trace(&TraceRecord {
                iteration: self.iteration,
                t_len: self.st.t_len(),
                q_len: self.st.q_len(),
                event,
            });
        }
    }

    /// Reduces `p` and queues the survivor, keeping its queue position if
    /// the leading monomial did not move.
    fn requeue(&mut self, key: Option<QKey>, p: Triple) -> Result<()> {
        let mut events = Vec::new();
        let reduced = self.st.reduce_triple(p, &mut |e| events.push(e))?;
        for e in events {
            self.emit(e);
        }
        match (reduced, key) {
            (Some(t), Some(key)) if self.st.ord.sort_key(t.lead()) == key.0 => {
                self.st.queue.insert(key, t);
            }
            (Some(t), _) => self.st.push_q(t),
            (None, _) => {}
        }
        Ok(())
    }

    fn full_reduce(&mut self) -> Result<()> {
        let pending = std::mem::take(&mut self.st.queue);
        for (key, p) in pending {
            self.requeue(Some(key), p)?;
        }
        Ok(())
    }

    fn prolong(&self, q: &Triple, vars: impl IntoIterator<Item = Var>, out: &mut Vec<Triple>) -> Result<()> {
        for x in vars {
            out.push(Triple { bin: q.bin.mul_var(x)?, anc: q.anc.clone(), nmp: VarSet::new() });
        }
        Ok(())
    }

    fn step(&mut self, mut p: Triple) -> Result<()> {
        self.emit(TraceEvent::Selected { lead: p.lead().clone() });
        let mut displaced = false;
        if *p.lead() == p.anc {
            let ord = self.st.ord;
            let victims: Vec<usize> = (0..self.st.slots.len())
                .filter(|&s| {
                    self.st.slots[s]
                        .as_ref()
                        .is_some_and(|r| ord.cmp(r.lead(), p.lead()) == Ordering::Greater)
                })
                .collect();
            if !victims.is_empty() {
                displaced = true;
                for &s in &victims {
                    let r = self.st.take_from_t(s);
                    self.st.push_q(r);
                }
                self.emit(TraceEvent::Displaced { count: victims.len() });
                // freed variables may make the tail, or even the head, reducible
                match self.st.janet_nf(p.bin.clone())? {
                    None => {
                        self.emit(TraceEvent::ReducedToZero);
                        return self.full_reduce();
                    }
                    Some(h) if h.lead() != p.lead() => {
                        self.st.push_q(Triple::fresh(h));
                        return self.full_reduce();
                    }
                    Some(h) => p.bin = h,
                }
            }
        }

        let lead = p.lead().clone();
        let mut fresh = Vec::new();
        if displaced {
            self.st.add_to_t(p)?;
            self.emit(TraceEvent::Inserted { lead: lead.clone() });
            let updates: Vec<(usize, VarSet)> =
                self.st.tree.nonmultiplicative_all().into_iter().map(|(_, &s, nm)| (s, nm)).collect();
            for (s, nm) in updates {
                let q = self.st.t(s);
                self.prolong(q, nm.difference(&q.nmp).iter(), &mut fresh)?;
                self.st.slots[s].as_mut().unwrap().nmp = nm;
            }
        } else {
            let slot = match self.st.free.pop() {
                Some(s) => s,
                None => {
                    self.st.slots.push(None);
                    self.st.slots.len() - 1
                }
            };
            let report = self.st.tree.insert_reporting(lead.clone(), slot)?;
            let gained: Vec<(Var, usize)> = report
                .map(|(v, hs)| hs.into_iter().map(|&s| (v, s)).collect())
                .unwrap_or_default();
            let nm = self.st.tree.nonmultiplicative(&lead).expect("just inserted");
            self.prolong(&p, nm.difference(&p.nmp).iter(), &mut fresh)?;
            p.nmp = nm;
            self.st.slots[slot] = Some(p);
            self.emit(TraceEvent::Inserted { lead: lead.clone() });
            for (v, s) in gained {
                let q = self.st.t(s);
                if !q.nmp.contains(v) {
                    self.prolong(q, [v], &mut fresh)?;
                    self.st.slots[s].as_mut().unwrap().nmp.insert(v);
                }
            }
        }
        if !fresh.is_empty() {
            self.emit(TraceEvent::Prolonged { count: fresh.len() });
        }

        if displaced {
            for f in fresh {
                self.st.push_q(f);
            }
            self.full_reduce()
        } else {
            // inserting p only shrinks the other cones, so only terms in
            // p's own cone can have become reducible
            let nm = self.st.tree.nonmultiplicative(&lead).expect("just inserted");
            let touched: Vec<QKey> = self
                .st
                .queue
                .iter()
                .filter(|(_, e)| in_cone(&lead, &nm, e.bin.lead()) || in_cone(&lead, &nm, e.bin.tail()))
                .map(|(k, _)| k.clone())
                .collect();
            for key in touched {
                let e = self.st.queue.remove(&key).unwrap();
                self.requeue(Some(key), e)?;
            }
            for f in fresh {
                self.requeue(None, f)?;
            }
            Ok(())
        }
    }

    fn verify(&self) {
        let st = &self.st;
        st.tree.check_invariants().unwrap_or_else(|e| panic!("janet tree broken: {e}"));
        let mut leads = 0;
        for (s, t) in st.slots.iter().enumerate() {
            let Some(t) = t else { continue };
            leads += 1;
            assert_eq!(st.tree.get(t.lead()), Some(&s), "tree leaf set differs from lm(T)");
            assert!(t.anc.divides(t.lead()), "ancestor does not divide {}", t.bin);
            let nm = st.tree.nonmultiplicative(t.lead()).unwrap();
            assert!(t.nmp.is_subset(&nm), "nmp not within NM for {}", t.bin);
        }
        assert_eq!(leads, st.tree.len());
        for t in st.queue.values() {
            assert!(st.tree.j_divisor(t.lead()).is_none(), "queued head {} is Janet reducible", t.bin);
            assert!(st.tree.j_divisor(t.bin.tail()).is_none(), "queued tail {} is Janet reducible", t.bin);
        }
    }
}

/// The monic minimal Janet basis of the ideal generated by `gens`, sorted by
/// decreasing leading monomial.
pub fn binomial_janet_basis(gens: &[Binomial], ord: &MonomialOrder) -> Result<Vec<Binomial>> {
    binomial_janet_basis_with(gens, ord, CompletionOptions::default())
}

pub fn binomial_janet_basis_with(
    gens: &[Binomial],
    ord: &MonomialOrder,
    opts: CompletionOptions<'_>,
) -> Result<Vec<Binomial>> {
    let nvars = gens.first().ok_or(Error::EmptyInput)?.nvars();
    if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(Error::AmbientMismatch(nvars, g.nvars()));
    }
    let mut gens: Vec<Binomial> = gens.iter().map(|g| g.clone().reorient(ord)).collect();
    let lowest = (0..gens.len())
        .min_by(|&a, &b| ord.cmp(gens[a].lead(), gens[b].lead()))
        .unwrap();
    let seed = gens.remove(lowest);

    let mut run = Run { st: CompletionState::new(nvars, ord), iteration: 0, opts };
    run.st.add_to_t(Triple::fresh(seed))?;
    for g in gens {
        run.st.push_q(Triple::fresh(g));
    }
    run.full_reduce()?;
    run.emit(TraceEvent::Seeded);
    if run.opts.verify_invariants {
        run.verify();
    }

    while let Some((_, p)) = run.st.queue.pop_first() {
        run.iteration += 1;
        run.step(p)?;
        if run.opts.verify_invariants {
            run.verify();
        }
    }
    run.emit(TraceEvent::Finished);

    let st = &run.st;
    let mut basis = st
        .t_triples()
        .map(|t| st.janet_tail_nf(t.bin.clone()))
        .collect::<Result<Vec<_>>>()?;
    sort_descending(&mut basis, ord);
    Ok(basis)
}

/// Janet normal form of `f` modulo `basis`, whose leading monomials must be
/// distinct.
pub fn janet_normal_form(f: &Binomial, basis: &[Binomial], ord: &MonomialOrder) -> Result<Option<Binomial>> {
    let st = state_of(basis, ord)?;
    st.janet_nf(f.clone().reorient(ord))
}

fn state_of<'o>(basis: &[Binomial], ord: &'o MonomialOrder) -> Result<CompletionState<'o>> {
    let nvars = basis.first().ok_or(Error::EmptyInput)?.nvars();
    let mut st = CompletionState::new(nvars, ord);
    for g in basis {
        st.add_to_t(Triple::fresh(g.clone().reorient(ord)))?;
    }
    Ok(st)
}

/// Whether `basis` is a Janet-autoreduced set closed under Janet reduction of
/// its nonmultiplicative prolongations.
pub fn is_janet_basis(basis: &[Binomial], ord: &MonomialOrder) -> Result<bool> {
    let st = match state_of(basis, ord) {
        Ok(st) => st,
        Err(Error::DuplicateMonomial) => return Ok(false),
        Err(e) => return Err(e),
    };
    for t in st.t_triples() {
        if st.tree.j_divisor(t.bin.tail()).is_some() {
            return Ok(false);
        }
    }
    for (_, &s, nm) in st.tree.nonmultiplicative_all() {
        let f = &st.t(s).bin;
        for x in nm.iter() {
            if st.janet_nf(f.mul_var(x)?)?.is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
