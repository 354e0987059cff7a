"""3-CNF model, brute-force satisfiability oracle, and the gadget compilers
that turn a formula into a genome pair whose exemplar distance is zero exactly
when the formula is satisfiable (one compiler per genome model), together with
converters between satisfying assignments and distance-zero certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import CapExceededError, PreconditionViolatedError
from .model import SeqGenome, SetGenome, verify_seq_certificate
from .sets import verify_set_certificate


@dataclass(frozen=True)
class Literal:
    variable: int
    positive: bool

    def __post_init__(self):
        if self.variable < 1:
            raise ValueError("variable indices are 1-based")


Clause = tuple[Literal, Literal, Literal]
Assignment = dict[int, bool]


@dataclass(frozen=True)
class CnfFormula:
    """Conjunction of exactly-three-literal clauses over variables 1..n_vars."""

    n_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(cl) for cl in self.clauses))
        for cl in self.clauses:
            if len(cl) != 3:
                raise ValueError("every clause must have exactly 3 literals")
            for lit in cl:
                if lit.variable > self.n_vars:
                    raise ValueError(f"variable {lit.variable} out of range 1..{self.n_vars}")

    @classmethod
    def of(cls, n_vars: int, *clauses) -> "CnfFormula":
        """Build from clauses given as triples of nonzero signed variable indices."""
        built = tuple(
            tuple(Literal(abs(v), v > 0) for v in cl) for cl in clauses
        )
        return cls(n_vars, built)

    @property
    def distinct_vars_per_clause(self) -> bool:
        return all(len({lit.variable for lit in cl}) == 3 for cl in self.clauses)


def eval_assignment(phi: CnfFormula, sigma: Assignment) -> bool:
    """True iff every clause has a literal satisfied by the (total) assignment."""
    for v in range(1, phi.n_vars + 1):
        if v not in sigma:
            raise PreconditionViolatedError(f"assignment is missing variable {v}")
    return all(any(sigma[l.variable] == l.positive for l in cl) for cl in phi.clauses)


def brute_force_sat(phi: CnfFormula, *, max_vars: int = 24) -> Assignment | None:
    """First satisfying assignment in a fixed enumeration order, or None.

    Assignments are scanned as counters 0 .. 2^n - 1 with bit i-1 giving the
    value of variable i, so the result is deterministic.
    """
    n = phi.n_vars
    if n > max_vars:
        raise CapExceededError(f"{n} variables exceeds the cap of {max_vars}")
    lits = [tuple((l.variable - 1, l.positive) for l in cl) for cl in phi.clauses]
    for code in range(1 << n):
        if all(any(bool(code >> v & 1) == pol for v, pol in cl) for cl in lits):
            return {v + 1: bool(code >> v & 1) for v in range(n)}
    return None


@dataclass(frozen=True)
class GeneNameTable:
    """Bijection between family ids and symbolic gadget roles (x_1, r_2, ...)."""

    role_of: Mapping[int, str]
    family_of: Mapping[str, int] = field(init=False, compare=False)

    def __post_init__(self):
        role_of = dict(self.role_of)
        inverse = {r: f for f, r in role_of.items()}
        if len(inverse) != len(role_of):
            raise ValueError("role names must be unique")
        object.__setattr__(self, "role_of", role_of)
        object.__setattr__(self, "family_of", inverse)

    def role(self, family: int) -> str:
        return self.role_of[family]

    def family(self, role: str) -> int:
        return self.family_of[role]

    def __len__(self) -> int:
        return len(self.role_of)


def _literal_occurrences(phi: CnfFormula):
    """Per variable, the (clause, slot) positions of its positive and negative
    literals, in ascending clause order then slot order."""
    pos: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, phi.n_vars + 1)}
    neg: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, phi.n_vars + 1)}
    for j, cl in enumerate(phi.clauses, start=1):
        for slot, lit in enumerate(cl):
            (pos if lit.positive else neg)[lit.variable].append((j, slot))
    return pos, neg


class _SeqLayout:
    """Canonical family numbering for the ordered-genome reduction.

    x_i = i, y_i = n + i, the separator z = 2n + 1, clause genes a/b/c of
    clause j at 2n + 1 + 3(j-1) + {1,2,3}, literal genes r/s/t of clause j at
    2n + 3m + 1 + 3(j-1) + {1,2,3}.
    """

    def __init__(self, phi: CnfFormula):
        self.phi = phi
        self.n = phi.n_vars
        self.m = len(phi.clauses)
        self.pos, self.neg = _literal_occurrences(phi)

    def x(self, i: int) -> int:
        return i

    def y(self, i: int) -> int:
        return self.n + i

    @property
    def z(self) -> int:
        return 2 * self.n + 1

    def clause_gene(self, j: int, slot: int) -> int:
        return 2 * self.n + 1 + 3 * (j - 1) + slot + 1

    def literal_gene(self, j: int, slot: int) -> int:
        return 2 * self.n + 3 * self.m + 1 + 3 * (j - 1) + slot + 1

    def positive_genes(self, i: int) -> list[int]:
        return [self.literal_gene(j, s) for j, s in self.pos[i]]

    def negative_genes(self, i: int) -> list[int]:
        return [self.literal_gene(j, s) for j, s in self.neg[i]]

    def name_table(self) -> GeneNameTable:
        roles: dict[int, str] = {}
        for i in range(1, self.n + 1):
            roles[self.x(i)] = f"x_{i}"
            roles[self.y(i)] = f"y_{i}"
        roles[self.z] = "z"
        for j in range(1, self.m + 1):
            for slot, nm in enumerate("abc"):
                roles[self.clause_gene(j, slot)] = f"{nm}_{j}"
            for slot, nm in enumerate("rst"):
                roles[self.literal_gene(j, slot)] = f"{nm}_{j}"
        return GeneNameTable(roles)


def reduce_3sat_to_seq_zed(phi: CnfFormula) -> tuple[SeqGenome, SeqGenome, GeneNameTable]:
    """Compile a 3-CNF formula into two ordered genomes whose exemplar distance
    is zero iff the formula is satisfiable.

    Per variable, the first genome carries y p... x q... y and the second
    p... x y x q..., where p/q are the literal genes of its positive/negative
    occurrences; a single separator gene z splits variable gadgets from clause
    gadgets; per clause, the genomes carry r a b c s a b c t and
    a r b a s c b t c.  All genes are positive, each family occurs at most
    twice per genome, and each genome has exactly 3n + 12m + 1 genes.
    """
    lay = _SeqLayout(phi)
    g1: list[int] = []
    g2: list[int] = []
    for i in range(1, lay.n + 1):
        ps = lay.positive_genes(i)
        qs = lay.negative_genes(i)
        x, y = lay.x(i), lay.y(i)
        g1 += [y, *ps, x, *qs, y]
        g2 += [*ps, x, y, x, *qs]
    g1.append(lay.z)
    g2.append(lay.z)
    for j in range(1, lay.m + 1):
        a, b, c = (lay.clause_gene(j, s) for s in range(3))
        r, s, t = (lay.literal_gene(j, s) for s in range(3))
        g1 += [r, a, b, c, s, a, b, c, t]
        g2 += [a, r, b, a, s, c, b, t, c]
    return SeqGenome(tuple(g1)), SeqGenome(tuple(g2)), lay.name_table()


def _taken_literal_genes(lay, sigma: Assignment) -> set[int]:
    taken: set[int] = set()
    for i in range(1, lay.n + 1):
        taken.update(lay.positive_genes(i) if sigma[i] else lay.negative_genes(i))
    return taken


def seq_certificate_from_assignment(phi: CnfFormula, sigma: Assignment) -> SeqGenome:
    """Common exemplar subsequence of the compiled genome pair, built from a
    satisfying assignment.

    True variables contribute p... x y, false ones y x q...; after the
    separator, each clause contributes one of three fixed patterns keyed by
    its highest-priority satisfied literal slot (r before s before t), with a
    literal gene skipped when its other copy was already taken on the variable
    side.
    """
    if not eval_assignment(phi, sigma):
        raise PreconditionViolatedError("assignment does not satisfy the formula")
    lay = _SeqLayout(phi)
    taken = _taken_literal_genes(lay, sigma)
    out: list[int] = []
    for i in range(1, lay.n + 1):
        x, y = lay.x(i), lay.y(i)
        if sigma[i]:
            out += [*lay.positive_genes(i), x, y]
        else:
            out += [y, x, *lay.negative_genes(i)]
    out.append(lay.z)
    for j in range(1, lay.m + 1):
        a, b, c = (lay.clause_gene(j, s) for s in range(3))
        r, s, t = (lay.literal_gene(j, s) for s in range(3))
        # (gene, skip-if-taken) patterns; one of r/s/t is always taken since
        # the clause is satisfied
        if r in taken:
            pattern = [(a, False), (b, False), (s, True), (c, False), (t, True)]
        elif s in taken:
            pattern = [(r, False), (b, False), (a, False), (c, False), (t, True)]
        else:
            pattern = [(r, True), (a, False), (s, True), (b, False), (c, False)]
        for gene, skippable in pattern:
            if skippable and gene in taken:
                continue
            out.append(gene)
    return SeqGenome(tuple(out))


def assignment_from_seq_certificate(phi: CnfFormula, cert: SeqGenome) -> Assignment:
    """Satisfying assignment read off a verified certificate: a variable is
    true iff its x gene precedes its y gene."""
    g1, g2, _ = reduce_3sat_to_seq_zed(phi)
    check = verify_seq_certificate(g1, g2, cert)
    if not check:
        raise PreconditionViolatedError(f"certificate rejected: {check.reason}")
    lay = _SeqLayout(phi)
    index = {abs(g): k for k, g in enumerate(cert.genes)}
    return {i: index[lay.x(i)] < index[lay.y(i)] for i in range(1, lay.n + 1)}


class _SetLayout:
    """Canonical family numbering for the unordered-genome reduction.

    x_i = i, clause genes a/b/c/a'/b'/c' of clause j at n + 6(j-1) + {1..6},
    literal genes r/s/t of clause j at n + 6m + 3(j-1) + {1,2,3}.
    """

    def __init__(self, phi: CnfFormula):
        self.phi = phi
        self.n = phi.n_vars
        self.m = len(phi.clauses)
        self.pos, self.neg = _literal_occurrences(phi)

    def x(self, i: int) -> int:
        return i

    def clause_gene(self, j: int, slot: int) -> int:
        # slot 0..5 -> a, b, c, a', b', c'
        return self.n + 6 * (j - 1) + slot + 1

    def literal_gene(self, j: int, slot: int) -> int:
        return self.n + 6 * self.m + 3 * (j - 1) + slot + 1

    def positive_genes(self, i: int) -> list[int]:
        return [self.literal_gene(j, s) for j, s in self.pos[i]]

    def negative_genes(self, i: int) -> list[int]:
        return [self.literal_gene(j, s) for j, s in self.neg[i]]

    def name_table(self) -> GeneNameTable:
        roles: dict[int, str] = {}
        for i in range(1, self.n + 1):
            roles[self.x(i)] = f"x_{i}"
        for j in range(1, self.m + 1):
            for slot, nm in enumerate(("a", "b", "c", "a'", "b'", "c'")):
                roles[self.clause_gene(j, slot)] = f"{nm}_{j}"
            for slot, nm in enumerate("rst"):
                roles[self.literal_gene(j, slot)] = f"{nm}_{j}"
        return GeneNameTable(roles)


def reduce_3sat_to_set_zed(phi: CnfFormula) -> tuple[SetGenome, SetGenome, GeneNameTable]:
    """Compile a 3-CNF formula (no repeated variable within a clause) into two
    unordered genomes whose exemplar distance is zero iff it is satisfiable.

    Per variable, the first genome holds one chromosome {p..., x, q...} and the
    second two chromosomes {p..., x} and {x, q...}; per clause, the first holds
    {a,b} {b,c} {c,a} {a',r} {b',s} {c',t} and the second {a,b,c} {a,a',r}
    {b,b',s} {c,c',t} {a'} {b'} {c'}.  Each family occurs at most twice per
    genome; totals are n + 15m and 2n + 18m genes.
    """
    if not phi.distinct_vars_per_clause:
        raise PreconditionViolatedError("a clause repeats a variable")
    lay = _SetLayout(phi)
    g1: list[frozenset[int]] = []
    g2: list[frozenset[int]] = []
    for i in range(1, lay.n + 1):
        ps = lay.positive_genes(i)
        qs = lay.negative_genes(i)
        x = lay.x(i)
        g1.append(frozenset([*ps, x, *qs]))
        g2.append(frozenset([*ps, x]))
        g2.append(frozenset([x, *qs]))
    for j in range(1, lay.m + 1):
        a, b, c, a2, b2, c2 = (lay.clause_gene(j, s) for s in range(6))
        r, s, t = (lay.literal_gene(j, s) for s in range(3))
        g1 += [
            frozenset({a, b}),
            frozenset({b, c}),
            frozenset({c, a}),
            frozenset({a2, r}),
            frozenset({b2, s}),
            frozenset({c2, t}),
        ]
        g2 += [
            frozenset({a, b, c}),
            frozenset({a, a2, r}),
            frozenset({b, b2, s}),
            frozenset({c, c2, t}),
            frozenset({a2}),
            frozenset({b2}),
            frozenset({c2}),
        ]
    return SetGenome(tuple(g1)), SetGenome(tuple(g2)), lay.name_table()


def set_certificate_from_assignment(phi: CnfFormula, sigma: Assignment) -> SetGenome:
    """Common reduced genome (a partition of the gene universe) built from a
    satisfying assignment for the unordered-genome reduction.

    True variables contribute {p..., x}, false ones {x, q...}; each clause
    contributes five blocks keyed by its highest-priority satisfied literal
    slot, with a literal gene dropped from its block when already taken on the
    variable side.
    """
    if not phi.distinct_vars_per_clause:
        raise PreconditionViolatedError("a clause repeats a variable")
    if not eval_assignment(phi, sigma):
        raise PreconditionViolatedError("assignment does not satisfy the formula")
    lay = _SetLayout(phi)
    taken = _taken_literal_genes(lay, sigma)
    blocks: list[frozenset[int]] = []
    for i in range(1, lay.n + 1):
        x = lay.x(i)
        if sigma[i]:
            blocks.append(frozenset([*lay.positive_genes(i), x]))
        else:
            blocks.append(frozenset([x, *lay.negative_genes(i)]))
    for j in range(1, lay.m + 1):
        a, b, c, a2, b2, c2 = (lay.clause_gene(j, s) for s in range(6))
        r, s, t = (lay.literal_gene(j, s) for s in range(3))

        def block(anchor: int, lit: int | None) -> frozenset[int]:
            if lit is None or lit in taken:
                return frozenset({anchor})
            return frozenset({anchor, lit})

        if r in taken:
            blocks += [frozenset({a}), frozenset({b, c}), block(a2, None),
                       block(b2, s), block(c2, t)]
        elif s in taken:
            blocks += [frozenset({b}), frozenset({c, a}), block(a2, r),
                       block(b2, None), block(c2, t)]
        else:
            blocks += [frozenset({c}), frozenset({a, b}), block(a2, r),
                       block(b2, s), block(c2, None)]
    return SetGenome(tuple(blocks))


def assignment_from_set_certificate(phi: CnfFormula, cert: SetGenome) -> Assignment:
    """Satisfying assignment read off a verified certificate: a variable is
    true iff the certificate block holding its x gene also holds a literal
    gene of one of its positive occurrences."""
    g1, g2, _ = reduce_3sat_to_set_zed(phi)
    check = verify_set_certificate(g1, g2, cert)
    if not check:
        raise PreconditionViolatedError(f"certificate rejected: {check.reason}")
    lay = _SetLayout(phi)
    home: dict[int, frozenset[int]] = {}
    for block in cert.chromosomes:
        for g in block:
            home[g] = block
    return {
        i: bool(home[lay.x(i)] & set(lay.positive_genes(i)))
        for i in range(1, lay.n + 1)
    }
