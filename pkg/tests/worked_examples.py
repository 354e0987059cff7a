"""Hand-checked worked instances shared across the test suite.

The two signed sequence genomes reduce to the common exemplar genome
-4 1 2 -5 3 -6; the set genomes over {1..5} reduce to {1,2} {3} {4,5}; the
mandatory-symbol LCS pair has optimum length 6 with mandatory {1,2,3}; the
two-clause formula is satisfied by (T, F, F, T).
"""

import itertools

from zedkit import CnfFormula, SeqGenome, SetGenome

SEQ_G1 = SeqGenome.of(-4, 1, 2, 3, -5, 1, 2, 3, -6)
SEQ_G2 = SeqGenome.of(-1, -4, 1, 2, -5, 3, -2, -6, 3)
SEQ_CERT = SeqGenome.of(-4, 1, 2, -5, 3, -6)

ELCS_A = SeqGenome.of(1, 2, 4, 2, 3, 5, 4, 5)
ELCS_B = SeqGenome.of(1, 1, 4, 2, 4, 4, 3, 5, 5, 5)
ELCS_MANDATORY = frozenset({1, 2, 3})
ELCS_OPTIONAL = frozenset({4, 5})

SET_G1 = SetGenome.of({1, 2, 3}, {2, 3, 4}, {4, 5})
SET_G2 = SetGenome.of({1, 2}, {2, 3, 4}, {3, 4, 5}, {1, 5})
SET_CERT = SetGenome.of({1, 2}, {3}, {4, 5})

# (v1 or not v2 or not v3) and (not v1 or v3 or v4)
TWO_CLAUSE_FORMULA = CnfFormula.of(4, (1, -2, -3), (-1, 3, 4))
TWO_CLAUSE_SIGMA = {1: True, 2: False, 3: False, 4: True}

# unsatisfiable: (x or x or x) and (not x or not x or not x)
DEGENERATE_UNSAT = CnfFormula.of(1, (1, 1, 1), (-1, -1, -1))

# unsatisfiable and distinct-variable: all 8 sign patterns over v1, v2, v3
COMPLETE_UNSAT_N3 = CnfFormula.of(
    3,
    *[
        tuple((v + 1) * s for v, s in zip(range(3), signs))
        for signs in itertools.product((1, -1), repeat=3)
    ],
)
