"""Published worked example for this code family, kept as audit reference data.

The literature on Z_p Z_p[u]-additive codes exhibits a worked example at
p = 3, alpha = 1, beta = 4: a standard-form generator matrix of claimed type
(3; 1, 4; 2, 2), a printed parity-check matrix, and a claimed dual type.  The
verify command audits the printed claims against the brute-force oracles and
reports any disagreement as a documented discrepancy (the printed matrices
are reproduced here verbatim, typos included).
"""

from __future__ import annotations

from zpzpu.code import HRow
from zpzpu.specfile import CodeSpecDocument
from zpzpu.words import MixedWord, Shape

SHAPE = Shape(3, 1, 4)

GENERATOR_ROWS: tuple[MixedWord, ...] = (
    MixedWord(SHAPE, (1,), ((0, 0), (0, 0), (1, 0), (1, 0))),
    MixedWord(SHAPE, (0,), ((1, 0), (0, 0), (2, 0), (0, 0))),
    MixedWord(SHAPE, (0,), ((0, 0), (0, 1), (0, 0), (0, 2))),
    MixedWord(SHAPE, (0,), ((0, 0), (0, 0), (0, 1), (0, 0))),
)

CLAIMED_TYPE = (3, 1, 4, 2, 2)  # (p; alpha, beta; k0, k1)

# The printed parity-check matrix; its third row places u-multiples in the
# Z_p column, so it is kept as raw (a, b) entries rather than as words.
PUBLISHED_H_ROWS: tuple[HRow, ...] = (
    HRow(((2, 0),), ((0, 0), (1, 0), (0, 0), (1, 0))),
    HRow(((0, 0),), ((0, 0), (0, 2), (0, 0), (0, 0))),
    HRow(((0, 1),), ((0, 2), (0, 0), (0, 2), (0, 0))),
)

# Claimed dual type, quoted as printed (including the "1.4" typo).
CLAIMED_DUAL_TYPE_TEXT = "(3;1.4;1,2)"
CLAIMED_DUAL_SIZE = 3 ** (2 * 1 + 2)  # p^(2*k0 + k1) for the claimed (k0, k1) = (1, 2)


def matches(doc: CodeSpecDocument) -> bool:
    """Whether a parsed document is exactly the published generator matrix."""
    return doc.shape == SHAPE and doc.rows == GENERATOR_ROWS
