"""Core domain types for genomes with duplicate genes.

A gene is a signed integer: the absolute value is its family, the sign its
orientation.  An ordered genome is a sequence of signed genes; an unordered
multichromosomal genome is a collection of gene-family sets.  All values are
immutable and every operation here is a pure function.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Union

from .errors import FamilyMismatchError

# Family ids are positive 32-bit integers; 0 is reserved as a terminator in
# external formats.
MAX_FAMILY = 2**31 - 1


@dataclass(frozen=True)
class SeqGenome:
    """Ordered sequence of signed genes (one chromosome)."""

    genes: tuple[int, ...]

    def __post_init__(self):
        genes = tuple(self.genes)
        for g in genes:
            if g == 0:
                raise ValueError("gene 0 is reserved and never a valid family")
            if abs(g) > MAX_FAMILY:
                raise ValueError(f"family {abs(g)} exceeds the 32-bit bound")
        object.__setattr__(self, "genes", genes)

    @classmethod
    def of(cls, *genes: int) -> "SeqGenome":
        return cls(tuple(genes))

    def __len__(self) -> int:
        return len(self.genes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.genes)

    def __getitem__(self, index):
        return self.genes[index]

    @property
    def families(self) -> frozenset[int]:
        return frozenset(abs(g) for g in self.genes)


@dataclass(frozen=True, eq=False)
class SetGenome:
    """Chromosomes as unordered sets of gene families.

    Chromosome order is preserved as read but carries no meaning: equality and
    hashing compare the multiset of chromosomes.
    """

    chromosomes: tuple[frozenset[int], ...]

    def __post_init__(self):
        chroms = tuple(frozenset(c) for c in self.chromosomes)
        for c in chroms:
            for g in c:
                if g < 1 or g > MAX_FAMILY:
                    raise ValueError(f"invalid family id {g}")
        object.__setattr__(self, "chromosomes", chroms)

    @classmethod
    def of(cls, *chromosomes: Iterable[int]) -> "SetGenome":
        return cls(tuple(frozenset(c) for c in chromosomes))

    @property
    def ground_set(self) -> frozenset[int]:
        out: set[int] = set()
        for c in self.chromosomes:
            out |= c
        return frozenset(out)

    def total_genes(self) -> int:
        """Gene count summed over chromosomes (duplicates across chromosomes count)."""
        return sum(len(c) for c in self.chromosomes)

    def __len__(self) -> int:
        return len(self.chromosomes)

    def _canonical(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(tuple(sorted(c)) for c in self.chromosomes))

    def __eq__(self, other):
        if not isinstance(other, SetGenome):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self):
        return hash(self._canonical())


@dataclass(frozen=True)
class Alphabet:
    """Split of the symbol universe into mandatory and optional families."""

    mandatory: frozenset[int]
    optional: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "mandatory", frozenset(self.mandatory))
        object.__setattr__(self, "optional", frozenset(self.optional))
        if self.mandatory & self.optional:
            raise ValueError("mandatory and optional symbol sets must be disjoint")

    @classmethod
    def from_mandatory(cls, mandatory: Iterable[int], observed: Iterable[int]) -> "Alphabet":
        """Alphabet with the given mandatory set; every other observed family is optional."""
        mand = frozenset(mandatory)
        return cls(mand, frozenset(observed) - mand)


Genome = Union[SeqGenome, SetGenome]

# Occurrence counts per family; Counter is the profile type.
OccurrenceProfile = Counter


class InstanceClass(Enum):
    """Mutually exclusive instance categories, most restrictive first."""

    BOTH_EXEMPLAR = "both-exemplar"
    ONE_SIDE_DUPLICATE_FREE = "one-side-duplicate-free"
    PER_GENE_SPECIAL = "per-gene-special"
    GENERAL = "general"


def occurrence_profile(genome: Genome) -> Counter:
    """Occurrences of each family across the whole genome, ignoring sign."""
    if isinstance(genome, SeqGenome):
        return Counter(abs(g) for g in genome.genes)
    return Counter(g for c in genome.chromosomes for g in c)


def classify_instance(g1: Genome, g2: Genome) -> InstanceClass:
    """Classify a genome pair by its duplicate-gene distribution.

    Raises FamilyMismatchError if the two genomes do not share the same family
    universe; solvers map that to an immediate NO.
    """
    p1, p2 = occurrence_profile(g1), occurrence_profile(g2)
    if p1.keys() != p2.keys():
        odd = sorted(p1.keys() ^ p2.keys())
        raise FamilyMismatchError(
            f"families not shared by both genomes: {odd[:5]}{'...' if len(odd) > 5 else ''}"
        )
    ex1 = all(c == 1 for c in p1.values())
    ex2 = all(c == 1 for c in p2.values())
    if ex1 and ex2:
        return InstanceClass.BOTH_EXEMPLAR
    if ex1 or ex2:
        return InstanceClass.ONE_SIDE_DUPLICATE_FREE
    if all(min(p1[f], p2[f]) == 1 for f in p1):
        return InstanceClass.PER_GENE_SPECIAL
    return InstanceClass.GENERAL


# Stable reason codes for certificate rejection.
DUPLICATE_FAMILY = "DuplicateFamily"
MISSING_FAMILY = "MissingFamily"
NOT_SUBSEQUENCE_OF_G1 = "NotSubsequenceOfG1"
NOT_SUBSEQUENCE_OF_G2 = "NotSubsequenceOfG2"
NOT_PARTITION = "NotPartition"
NO_EMBEDDING_IN_G1 = "NoEmbeddingInG1"
NO_EMBEDDING_IN_G2 = "NoEmbeddingInG2"


@dataclass(frozen=True)
class CertificateCheck:
    """Boolean verdict plus a machine-readable reason when rejected."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _subsequence_embeds(x: tuple[int, ...], y: tuple[int, ...]) -> bool:
    """Greedy left-to-right embedding test under exact signed equality."""
    it = iter(y)
    return all(g in it for g in x)


def verify_seq_certificate(g1: SeqGenome, g2: SeqGenome, cert: SeqGenome) -> CertificateCheck:
    """Check that cert is a common exemplar subsequence of g1 and g2.

    A valid certificate carries each family of the combined universe exactly
    once and embeds order-preservingly, with signs, into both genomes.
    """
    counts = Counter(abs(g) for g in cert.genes)
    if any(c > 1 for c in counts.values()):
        return CertificateCheck(False, DUPLICATE_FAMILY)
    universe = g1.families | g2.families
    if universe - counts.keys():
        return CertificateCheck(False, MISSING_FAMILY)
    if not _subsequence_embeds(cert.genes, g1.genes):
        return CertificateCheck(False, NOT_SUBSEQUENCE_OF_G1)
    if not _subsequence_embeds(cert.genes, g2.genes):
        return CertificateCheck(False, NOT_SUBSEQUENCE_OF_G2)
    return CertificateCheck(True)
