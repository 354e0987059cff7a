"""Plain-text parsers and canonical emitters.

Formats by convention: .seq (ordered genome, signed integer tokens), .set
(one chromosome per line, positive integer tokens, "-" for an explicitly
empty chromosome), .cnf (DIMACS subset restricted to three-literal clauses),
.tsv (gene name table).  Every rejection raises ParseError carrying one
diagnostic with a stable code plus 1-based line and column.
"""

from __future__ import annotations

import re

from .errors import ParseDiagnostic, ParseError
from .model import MAX_FAMILY, SeqGenome, SetGenome
from .sat import CnfFormula, GeneNameTable, Literal

# Stable diagnostic codes.
ZERO_GENE = "ZeroGene"
MALFORMED_TOKEN = "MalformedToken"
EMPTY_INPUT = "EmptyInput"
DUPLICATE_IN_CHROMOSOME = "DuplicateInChromosome"
BAD_HEADER = "BadHeader"
CLAUSE_NOT_TERNARY = "ClauseNotTernary"
VAR_OUT_OF_RANGE = "VarOutOfRange"
CLAUSE_COUNT_MISMATCH = "ClauseCountMismatch"
DUPLICATE_FAMILY = "DuplicateFamily"

_TOKEN = re.compile(r"\S+")
_SIGNED_INT = re.compile(r"[+-]?\d+\Z")
_UNSIGNED_INT = re.compile(r"\d+\Z")


def _fail(line: int, column: int, code: str, message: str):
    raise ParseError(ParseDiagnostic(line, column, code, message))


def _text(data) -> str:
    return data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data


def _data_lines(text: str, comment: str = "#"):
    """(lineno, line) for non-blank, non-comment lines."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(comment):
            continue
        yield lineno, line


def parse_seq_genome(data) -> SeqGenome:
    """Signed integer tokens over any number of lines; '#' starts a comment
    line; token 0 is rejected; empty input is rejected."""
    genes: list[int] = []
    for lineno, line in _data_lines(_text(data)):
        for match in _TOKEN.finditer(line):
            tok, col = match.group(), match.start() + 1
            if not _SIGNED_INT.match(tok):
                _fail(lineno, col, MALFORMED_TOKEN, f"expected a signed integer, got {tok!r}")
            value = int(tok)
            if value == 0:
                _fail(lineno, col, ZERO_GENE, "gene 0 is reserved")
            if abs(value) > MAX_FAMILY:
                _fail(lineno, col, MALFORMED_TOKEN, f"family {abs(value)} exceeds the 32-bit bound")
            genes.append(value)
    if not genes:
        _fail(1, 1, EMPTY_INPUT, "no genes in input")
    return SeqGenome(tuple(genes))


def emit_seq_genome(genome: SeqGenome) -> str:
    """Canonical form: single line, single spaces, no '+' on positive genes."""
    if not genome.genes:
        return ""
    return " ".join(str(g) for g in genome.genes) + "\n"


def parse_set_genome(data) -> SetGenome:
    """One chromosome per non-comment line of positive integer tokens; a line
    holding only '-' is an explicitly empty chromosome."""
    chromosomes: list[frozenset[int]] = []
    for lineno, line in _data_lines(_text(data)):
        matches = list(_TOKEN.finditer(line))
        if len(matches) == 1 and matches[0].group() == "-":
            chromosomes.append(frozenset())
            continue
        members: set[int] = set()
        for match in matches:
            tok, col = match.group(), match.start() + 1
            if not _UNSIGNED_INT.match(tok):
                _fail(lineno, col, MALFORMED_TOKEN, f"expected a positive integer, got {tok!r}")
            value = int(tok)
            if value == 0:
                _fail(lineno, col, ZERO_GENE, "gene 0 is reserved")
            if value > MAX_FAMILY:
                _fail(lineno, col, MALFORMED_TOKEN, f"family {value} exceeds the 32-bit bound")
            if value in members:
                _fail(lineno, col, DUPLICATE_IN_CHROMOSOME, f"family {value} repeated in one chromosome")
            members.add(value)
        chromosomes.append(frozenset(members))
    return SetGenome(tuple(chromosomes))


def emit_set_genome(genome: SetGenome) -> str:
    """Canonical form: one chromosome per line, members ascending, '-' when empty."""
    lines = [
        " ".join(str(f) for f in sorted(c)) if c else "-"
        for c in genome.chromosomes
    ]
    return "\n".join(lines) + "\n" if lines else ""


def parse_dimacs3(data) -> CnfFormula:
    """DIMACS CNF subset: 'c' comment lines, one 'p cnf <n> <m>' header,
    0-terminated clauses of exactly three nonzero literals within 1..n."""
    header: tuple[int, int] | None = None
    clauses: list[tuple[Literal, Literal, Literal]] = []
    pending: list[Literal] = []
    pending_at: tuple[int, int] | None = None
    last_line = 1
    for lineno, line in _data_lines(_text(data), comment="c"):
        last_line = lineno
        stripped = line.strip()
        if stripped.startswith("p"):
            if header is not None:
                _fail(lineno, line.find("p") + 1, BAD_HEADER, "duplicate header")
            parts = stripped.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                _fail(lineno, line.find("p") + 1, BAD_HEADER, "expected 'p cnf <vars> <clauses>'")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                _fail(lineno, line.find("p") + 1, BAD_HEADER, "non-integer header counts")
            if n < 0 or m < 0:
                _fail(lineno, line.find("p") + 1, BAD_HEADER, "negative header counts")
            header = (n, m)
            continue
        if header is None:
            _fail(lineno, _TOKEN.search(line).start() + 1, BAD_HEADER, "clause data before header")
        for match in _TOKEN.finditer(line):
            tok, col = match.group(), match.start() + 1
            if not _SIGNED_INT.match(tok):
                _fail(lineno, col, MALFORMED_TOKEN, f"expected an integer, got {tok!r}")
            value = int(tok)
            if value == 0:
                if len(pending) != 3:
                    _fail(lineno, col, CLAUSE_NOT_TERNARY,
                          f"clause has {len(pending)} literals, expected 3")
                clauses.append(tuple(pending))
                pending = []
                pending_at = None
                continue
            if abs(value) > header[0]:
                _fail(lineno, col, VAR_OUT_OF_RANGE,
                      f"variable {abs(value)} out of range 1..{header[0]}")
            if not pending:
                pending_at = (lineno, col)
            pending.append(Literal(abs(value), value > 0))
    if header is None:
        _fail(1, 1, BAD_HEADER, "missing 'p cnf' header")
    if pending:
        _fail(pending_at[0], pending_at[1], CLAUSE_NOT_TERNARY, "unterminated clause at end of input")
    if len(clauses) != header[1]:
        _fail(last_line, 1, CLAUSE_COUNT_MISMATCH,
              f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def emit_dimacs3(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.n_vars} {len(phi.clauses)}"]
    for cl in phi.clauses:
        lines.append(" ".join(str(l.variable if l.positive else -l.variable) for l in cl) + " 0")
    return "\n".join(lines) + "\n"


def parse_name_table(data) -> GeneNameTable:
    """Tab-separated 'family<TAB>role' lines; both columns must be unique."""
    roles: dict[int, str] = {}
    seen_roles: set[str] = set()
    for lineno, raw in enumerate(_text(data).splitlines(), start=1):
        if not raw.strip():
            continue
        parts = raw.split("\t")
        if len(parts) != 2:
            _fail(lineno, 1, MALFORMED_TOKEN, "expected 'family<TAB>role'")
        fam_str, role = parts
        if not _UNSIGNED_INT.match(fam_str.strip()) or int(fam_str) < 1:
            _fail(lineno, 1, MALFORMED_TOKEN, f"bad family id {fam_str!r}")
        fam = int(fam_str)
        if not role:
            _fail(lineno, len(fam_str) + 2, MALFORMED_TOKEN, "empty role name")
        if fam in roles or role in seen_roles:
            _fail(lineno, 1, DUPLICATE_FAMILY, f"duplicate entry for {fam}/{role}")
        roles[fam] = role
        seen_roles.add(role)
    return GeneNameTable(roles)


def emit_name_table(table: GeneNameTable) -> str:
    lines = [f"{fam}\t{table.role_of[fam]}" for fam in sorted(table.role_of)]
    return "\n".join(lines) + "\n" if lines else ""


def render_seq_roles(genome: SeqGenome, table: GeneNameTable) -> str:
    """Genome as space-separated role tokens ('-' prefix for reversed genes)."""
    toks = [
        table.role(abs(g)) if g > 0 else "-" + table.role(abs(g))
        for g in genome.genes
    ]
    return " ".join(toks) + "\n" if toks else ""


def render_set_roles(genome: SetGenome, table: GeneNameTable) -> str:
    """One chromosome per line as role tokens, members ascending by family id."""
    lines = [
        " ".join(table.role(f) for f in sorted(c)) if c else "-"
        for c in genome.chromosomes
    ]
    return "\n".join(lines) + "\n" if lines else ""
