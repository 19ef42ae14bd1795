"""Decoder instrumentation: arithmetic-operation and dependency-depth tallies."""

from dataclasses import dataclass


@dataclass
class OpCounter:
    """Work performed by a decoding call tree.

    `add_sub` counts additions/subtractions (butterfly stages, max-log
    differences), `compare` counts pairwise comparisons inside max/min/argmax
    scans, and `sign_mult` counts sign products of the min-sum rule.  `depth`
    is the serial depth of the dependency chain: operations on distinct
    fibers/lanes count once, stages and iterations add up.

    Counters are owned by the caller and passed down explicitly; there is no
    global state, so concurrent decodes with separate counters never interact.
    """

    add_sub: int = 0
    compare: int = 0
    sign_mult: int = 0
    depth: int = 0

    def total(self) -> int:
        """Counted operations, excluding depth."""
        return self.add_sub + self.compare + self.sign_mult
