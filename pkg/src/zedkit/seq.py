"""Algorithms on ordered genomes.

Covers the subsequence test, plain and weighted longest common subsequence
with a canonical traceback, the polynomial special cases for mandatory-symbol
LCS feasibility and maximization, and two exact searches for desk-scale
instances of the NP-hard general problem.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import (
    CapExceededError,
    FamilyMismatchError,
    MissingWeightError,
    PreconditionViolatedError,
)
from .model import (
    Alphabet,
    InstanceClass,
    SeqGenome,
    _subsequence_embeds,
    classify_instance,
    occurrence_profile,
)


@dataclass(frozen=True)
class SeqDecision:
    """Yes/no answer with a verifying certificate when the answer is yes."""

    answer: bool
    certificate: SeqGenome | None = None


@dataclass(frozen=True)
class WeightAssignment:
    """Non-negative per-family weights; mandatory_weight records the weight
    applied to mandatory symbols when built for constrained maximization."""

    weight_of: Mapping[int, int]
    mandatory_weight: int = 1

    def __post_init__(self):
        for f, w in self.weight_of.items():
            if w < 0:
                raise ValueError(f"negative weight {w} for family {f}")

    @classmethod
    def uniform(cls, families, weight: int = 1) -> "WeightAssignment":
        return cls({f: weight for f in families}, weight)

    @classmethod
    def elcs(cls, alphabet: Alphabet, a: SeqGenome, b: SeqGenome) -> "WeightAssignment":
        """Weights that make every mandatory symbol outweigh all optional ones
        combined: min(len(a), len(b)) + 1 on mandatory families, 1 elsewhere."""
        w = min(len(a), len(b)) + 1
        families = a.families | b.families | alphabet.mandatory | alphabet.optional
        return cls({f: (w if f in alphabet.mandatory else 1) for f in families}, w)


def is_subsequence(x: SeqGenome, y: SeqGenome) -> bool:
    """True iff x embeds order-preservingly into y under exact signed equality."""
    return _subsequence_embeds(x.genes, y.genes)


def _max_weight_subsequence(
    a: tuple[int, ...], b: tuple[int, ...], weight_of: Mapping[int, int]
) -> tuple[int, ...]:
    """Maximum-total-weight common subsequence, canonical traceback.

    Row recurrence vectorized with a running maximum; traceback prefers a
    match over dropping from a over dropping from b, which pins a unique
    output among equal-weight optima.
    """
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return ()
    A = np.asarray(a, dtype=np.int64)
    B = np.asarray(b, dtype=np.int64)
    wa64 = np.asarray([weight_of[abs(g)] for g in a], dtype=np.int64)
    bound = int(wa64.max(initial=0)) * min(n, m)
    dtype = np.int32 if bound < 2**31 else np.int64
    wa = wa64.astype(dtype)
    eq = A[:, None] == B[None, :]
    W = np.zeros((n + 1, m + 1), dtype=dtype)
    for i in range(1, n + 1):
        cand = np.where(eq[i - 1], W[i - 1, :-1] + wa[i - 1], 0)
        np.maximum(W[i - 1, 1:], cand, out=cand)
        np.maximum.accumulate(cand, out=cand)
        W[i, 1:] = cand
    out: list[int] = []
    i, j = n, m
    while i and j:
        if a[i - 1] == b[j - 1] and W[i, j] == W[i - 1, j - 1] + wa[i - 1]:
            out.append(a[i - 1])
            i -= 1
            j -= 1
        elif W[i, j] == W[i - 1, j]:
            i -= 1
        else:
            j -= 1
    out.reverse()
    return tuple(out)


def lcs(a: SeqGenome, b: SeqGenome) -> SeqGenome:
    """A longest common subsequence under exact signed equality (canonical)."""
    ones = {abs(g): 1 for g in (*a.genes, *b.genes)}
    return SeqGenome(_max_weight_subsequence(a.genes, b.genes, ones))


def weighted_lcs(a: SeqGenome, b: SeqGenome, weights: WeightAssignment) -> SeqGenome:
    """A common subsequence of maximum total weight (canonical traceback)."""
    for g in (*a.genes, *b.genes):
        if abs(g) not in weights.weight_of:
            raise MissingWeightError(f"no weight assigned to family {abs(g)}")
    return SeqGenome(_max_weight_subsequence(a.genes, b.genes, weights.weight_of))


def total_weight(genome: SeqGenome, weights: WeightAssignment) -> int:
    return sum(weights.weight_of[abs(g)] for g in genome.genes)


def zed_one_side_duplicate_free(exemplar_side: SeqGenome, other: SeqGenome) -> SeqDecision:
    """Linear-time decision when one genome is already duplicate-free: the
    distance is zero iff that genome embeds into the other."""
    dup = sorted(f for f, c in occurrence_profile(exemplar_side).items() if c > 1)
    if dup:
        raise PreconditionViolatedError(f"exemplar side repeats families {dup[:5]}")
    if is_subsequence(exemplar_side, other):
        return SeqDecision(True, exemplar_side)
    return SeqDecision(False)


def _check_mandatory_special(a: SeqGenome, b: SeqGenome, alphabet: Alphabet) -> None:
    pa, pb = occurrence_profile(a), occurrence_profile(b)
    bad = sorted(f for f in alphabet.mandatory if pa.get(f, 0) >= 2 and pb.get(f, 0) >= 2)
    if bad:
        raise PreconditionViolatedError(
            f"mandatory families {bad[:5]} occur at least twice in both sequences"
        )


def elcs_feasible(a: SeqGenome, b: SeqGenome, alphabet: Alphabet) -> bool:
    """Decide whether some common subsequence carries every mandatory family.

    Valid when no mandatory family is duplicated in both inputs (then a common
    subsequence can carry each mandatory symbol at most once): delete the
    non-mandatory symbols and test whether the residues' LCS covers all of
    them.  Symbols outside the alphabet are treated as optional.
    """
    _check_mandatory_special(a, b, alphabet)
    ra = SeqGenome(tuple(g for g in a.genes if abs(g) in alphabet.mandatory))
    rb = SeqGenome(tuple(g for g in b.genes if abs(g) in alphabet.mandatory))
    core = lcs(ra, rb)
    return alphabet.mandatory <= {abs(g) for g in core.genes}


def elcs_special(a: SeqGenome, b: SeqGenome, alphabet: Alphabet) -> SeqGenome | None:
    """Longest common subsequence containing every mandatory family, in the
    same special case as elcs_feasible.

    Maximizes total weight with mandatory symbols weighted min(len(a), len(b)) + 1
    and all others weighted 1; the optimum then contains every mandatory
    family (each exactly once) whenever any feasible subsequence does, and is
    a longest such subsequence.  Returns None when infeasible.
    """
    _check_mandatory_special(a, b, alphabet)
    best = weighted_lcs(a, b, WeightAssignment.elcs(alphabet, a, b))
    if alphabet.mandatory <= {abs(g) for g in best.genes}:
        return best
    return None


def zed_seq_special(g1: SeqGenome, g2: SeqGenome) -> SeqDecision:
    """Polynomial decision when every family occurs exactly once in at least
    one genome: distance zero iff the LCS covers all families."""
    try:
        cls = classify_instance(g1, g2)
    except FamilyMismatchError:
        return SeqDecision(False)
    if cls is InstanceClass.GENERAL:
        raise PreconditionViolatedError(
            "instance is general: some family occurs at least twice in both genomes"
        )
    cert = lcs(g1, g2)
    if len(cert) == len(g1.families):
        return SeqDecision(True, cert)
    return SeqDecision(False)


def zed_seq_exact(g1: SeqGenome, g2: SeqGenome, *, max_families: int = 25) -> SeqDecision:
    """Exact decision for the general (NP-hard) problem at desk scale.

    Dynamic programming over family subsets: a state is the set of families
    already placed plus the pair of genome positions consumed so far.  Each
    family is extended through its earliest signed match in both genomes
    (earlier positions dominate later ones), states are explored depth-first
    so a certificate is returned as soon as the full subset is reached, and
    failed states are memoized as Pareto-minimal position pairs per subset.
    A family with no live occurrence pair prunes its whole subtree.
    """
    fams = sorted(g1.families | g2.families)
    if len(fams) > max_families:
        raise CapExceededError(f"{len(fams)} families exceeds the cap of {max_families}")
    if g1.families != g2.families:
        return SeqDecision(False)
    if not fams:
        return SeqDecision(True, SeqGenome(()))

    present1, present2 = set(g1.genes), set(g2.genes)
    slot_values: list[int] = []
    fam_slots: list[list[int]] = []
    for f in fams:
        mine = []
        for v in (f, -f):
            if v in present1 and v in present2:
                mine.append(len(slot_values))
                slot_values.append(v)
        if not mine:
            # no signed form of this family occurs in both genomes
            return SeqDecision(False)
        fam_slots.append(mine)

    def next_tables(genes: tuple[int, ...]) -> list[list[int]]:
        n = len(genes)
        idx = {v: s for s, v in enumerate(slot_values)}
        nxt = [[-1] * (n + 1) for _ in slot_values]
        for i in range(n - 1, -1, -1):
            for row in nxt:
                row[i] = row[i + 1]
            s = idx.get(genes[i])
            if s is not None:
                nxt[s][i] = i
        return nxt

    nxt1 = next_tables(g1.genes)
    nxt2 = next_tables(g2.genes)
    d = len(fams)
    full = (1 << d) - 1
    failed: dict[int, list[tuple[int, int]]] = {}
    path: list[int] = []

    def dominated(mask: int, i: int, j: int) -> bool:
        for fi, fj in failed.get(mask, ()):
            if fi <= i and fj <= j:
                return True
        return False

    def record_failure(mask: int, i: int, j: int) -> None:
        lst = failed.setdefault(mask, [])
        lst[:] = [(fi, fj) for fi, fj in lst if not (i <= fi and j <= fj)]
        lst.append((i, j))

    def search(mask: int, i: int, j: int) -> bool:
        if mask == full:
            return True
        if dominated(mask, i, j):
            return False
        cands: list[tuple[int, int, int, int, int]] = []
        for k in range(d):
            if mask >> k & 1:
                continue
            ext: list[tuple[int, int, int]] = []
            for s in fam_slots[k]:
                p = nxt1[s][i]
                q = nxt2[s][j]
                if p >= 0 and q >= 0:
                    ext.append((p, q, s))
            if not ext:
                record_failure(mask, i, j)
                return False
            if len(ext) == 2:
                # within one family a pointwise-earlier match dominates
                (p0, q0, _), (p1, q1, _) = ext
                if p0 <= p1 and q0 <= q1:
                    ext.pop(1)
                elif p1 <= p0 and q1 <= q0:
                    ext.pop(0)
            for p, q, s in ext:
                cands.append((p + q, p, q, k, s))
        cands.sort()
        for _, p, q, k, s in cands:
            path.append(slot_values[s])
            if search(mask | (1 << k), p + 1, q + 1):
                return True
            path.pop()
        record_failure(mask, i, j)
        return False

    if search(0, 0, 0):
        return SeqDecision(True, SeqGenome(tuple(path)))
    return SeqDecision(False)


def elcs_exact_oracle(
    a: SeqGenome, b: SeqGenome, alphabet: Alphabet, *, max_mandatory: int = 15
) -> SeqGenome | None:
    """Reference search for the mandatory-symbol LCS, exact for arbitrary
    occurrence counts: memoized over (position in a, position in b, set of
    mandatory families used), maximizing length and never reusing a mandatory
    family.  Returns None when no common subsequence covers all of them."""
    mandatory = sorted(alphabet.mandatory)
    if len(mandatory) > max_mandatory:
        raise CapExceededError(
            f"{len(mandatory)} mandatory families exceeds the cap of {max_mandatory}"
        )
    if not (alphabet.mandatory <= a.families and alphabet.mandatory <= b.families):
        return None
    bit = {f: 1 << k for k, f in enumerate(mandatory)}
    full = (1 << len(mandatory)) - 1
    ga, gb = a.genes, b.genes
    n, m = len(ga), len(gb)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), n + m + 100))
    memo: dict[tuple[int, int, int], int] = {}

    def best(i: int, j: int, mask: int) -> int:
        """Max extra length from (i, j); -1 when the missing mandatories cannot all be placed."""
        if i == n or j == m:
            return 0 if mask == full else -1
        key = (i, j, mask)
        hit = memo.get(key)
        if hit is not None:
            return hit
        res = max(best(i + 1, j, mask), best(i, j + 1, mask))
        if ga[i] == gb[j]:
            fb = bit.get(abs(ga[i]))
            if fb is None:
                sub = best(i + 1, j + 1, mask)
                if sub >= 0:
                    res = max(res, 1 + sub)
            elif not mask & fb:
                sub = best(i + 1, j + 1, mask | fb)
                if sub >= 0:
                    res = max(res, 1 + sub)
        memo[key] = res
        return res

    if best(0, 0, 0) < 0:
        return None
    out: list[int] = []
    i = j = mask = 0
    while i < n and j < m:
        cur = best(i, j, mask)
        if ga[i] == gb[j]:
            fb = bit.get(abs(ga[i]))
            if fb is None or not mask & fb:
                nmask = mask | (fb or 0)
                sub = best(i + 1, j + 1, nmask)
                if sub >= 0 and 1 + sub == cur:
                    out.append(ga[i])
                    i += 1
                    j += 1
                    mask = nmask
                    continue
        if best(i + 1, j, mask) == cur:
            i += 1
        else:
            j += 1
    return SeqGenome(tuple(out))
