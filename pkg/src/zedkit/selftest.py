"""Cross-algorithm equivalence suites behind the selftest command.

Each suite replays seeded random instances through two or more independent
code paths and demands identical answers (plus verifying certificates); a
disagreement names the suite and the seed that produced it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .generate import SplitMix64, random_cnf, random_seq_pair, random_set_pair
from .model import Alphabet, verify_seq_certificate
from .sat import (
    assignment_from_seq_certificate,
    assignment_from_set_certificate,
    brute_force_sat,
    eval_assignment,
    reduce_3sat_to_seq_zed,
    reduce_3sat_to_set_zed,
)
from .seq import elcs_exact_oracle, elcs_feasible, elcs_special, zed_seq_exact, zed_seq_special
from .sets import verify_set_certificate, zed_set_exact, zed_set_fpt, zed_set_matching


def _seq_special_vs_exact(seed: int) -> str | None:
    g1, g2 = random_seq_pair(seed, 2 + seed % 5, max_occ=3, special=True)
    a = zed_seq_special(g1, g2)
    b = zed_seq_exact(g1, g2)
    if a.answer != b.answer:
        return f"special={a.answer} exact={b.answer}"
    if a.answer and not verify_seq_certificate(g1, g2, a.certificate):
        return "special certificate rejected"
    if b.answer and not verify_seq_certificate(g1, g2, b.certificate):
        return "exact certificate rejected"
    return None


def _elcs_special_vs_oracle(seed: int) -> str | None:
    g1, g2 = random_seq_pair(seed, 2 + seed % 5, max_occ=3, special=True, signed=False)
    fams = sorted(g1.families)
    mandatory = frozenset(f for k, f in enumerate(fams) if (seed >> k) & 1)
    alphabet = Alphabet.from_mandatory(mandatory, g1.families | g2.families)
    fast = elcs_special(g1, g2, alphabet)
    slow = elcs_exact_oracle(g1, g2, alphabet)
    if (fast is None) != (slow is None):
        return f"feasibility mismatch: special={fast} oracle={slow}"
    if elcs_feasible(g1, g2, alphabet) != (slow is not None):
        return "feasibility test disagrees with oracle"
    if fast is not None and len(fast) != len(slow):
        return f"length mismatch: special={len(fast)} oracle={len(slow)}"
    return None


def _sat_vs_seq_zed(seed: int) -> str | None:
    rng = SplitMix64(seed)
    phi = random_cnf(rng.next64(), rng.randint(1, 3), rng.randint(0, 2))
    satisfiable = brute_force_sat(phi) is not None
    g1, g2, _ = reduce_3sat_to_seq_zed(phi)
    dec = zed_seq_exact(g1, g2)
    if dec.answer != satisfiable:
        return f"sat={satisfiable} zed={dec.answer}"
    if dec.answer:
        sigma = assignment_from_seq_certificate(phi, dec.certificate)
        if not eval_assignment(phi, sigma):
            return "extracted assignment does not satisfy the formula"
    return None


def _sat_vs_set_zed(seed: int) -> str | None:
    rng = SplitMix64(seed)
    phi = random_cnf(rng.next64(), 3, rng.randint(0, 2), distinct_vars=True)
    satisfiable = brute_force_sat(phi) is not None
    g1, g2, _ = reduce_3sat_to_set_zed(phi)
    dec = zed_set_exact(g1, g2)
    if dec.answer != satisfiable:
        return f"sat={satisfiable} zed={dec.answer}"
    if dec.answer:
        sigma = assignment_from_set_certificate(phi, dec.certificate)
        if not eval_assignment(phi, sigma):
            return "extracted assignment does not satisfy the formula"
    return None


def _set_three_way(seed: int) -> str | None:
    g1, g2 = random_set_pair(seed, 3 + seed % 6, 2 + seed % 3, special=True)
    a = zed_set_matching(g1, g2)
    b = zed_set_fpt(g1, g2)
    c = zed_set_exact(g1, g2)
    if not (a.answer == b.answer == c.answer):
        return f"matching={a.answer} fpt={b.answer} exact={c.answer}"
    for name, dec in (("matching", a), ("fpt", b), ("exact", c)):
        if dec.answer and not verify_set_certificate(g1, g2, dec.certificate):
            return f"{name} certificate rejected"
    return None


def _set_fpt_vs_exact(seed: int) -> str | None:
    g1, g2 = random_set_pair(seed, 3 + seed % 6, 2 + seed % 3, max_occ=3)
    b = zed_set_fpt(g1, g2)
    c = zed_set_exact(g1, g2)
    if b.answer != c.answer:
        return f"fpt={b.answer} exact={c.answer}"
    return None


SUITES: tuple[tuple[str, Callable[[int], str | None]], ...] = (
    ("seq-special-vs-exact", _seq_special_vs_exact),
    ("elcs-special-vs-oracle", _elcs_special_vs_oracle),
    ("sat-vs-seq-zed", _sat_vs_seq_zed),
    ("sat-vs-set-zed", _sat_vs_set_zed),
    ("set-three-way", _set_three_way),
    ("set-fpt-vs-exact", _set_fpt_vs_exact),
)


@dataclass
class SelftestReport:
    cases: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    exhausted: bool = False


def run_selftest(
    budget_s: float,
    *,
    min_cases: int = 10,
    max_cases: int = 100,
    base_seed: int = 987_654,
) -> SelftestReport:
    """Round-robin the suites on seeds base_seed, base_seed+1, ... until each
    has run max_cases or the budget runs out."""
    report = SelftestReport(cases={name: 0 for name, _ in SUITES})
    deadline = time.monotonic() + budget_s
    case = 0
    while any(n < max_cases for n in report.cases.values()):
        if time.monotonic() >= deadline:
            report.exhausted = any(n < min_cases for n in report.cases.values())
            break
        for name, fn in SUITES:
            if report.cases[name] >= max_cases:
                continue
            seed = base_seed + case
            problem = fn(seed)
            report.cases[name] += 1
            if problem is not None:
                report.failures.append(f"{name} (seed {seed}): {problem}")
        case += 1
    return report
