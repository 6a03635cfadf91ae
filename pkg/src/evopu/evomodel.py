"""Mutation rates, prevalence-derived opportunity counts, and emergence probabilities.

Single-generation mutation probability is nonzero only at Hamming distance 1;
multi-site mutations are treated as exactly zero. The emergence intensity of a
sequence is the rate-weighted sum of opportunity counts over its distance-1
observed ancestors; the scaling nuisance (estimated during training) stays
factored out so intensities can be reused for any value of it.
"""

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    IdenticalSequences,
    InvalidProbability,
    LengthMismatch,
    SameNucleotide,
    UnknownSequence,
)
from .seqcore import NucSeq, encode_bases, hamming_distance, is_purine

DEFAULT_TRANSITION_RATE = 2.6e-5
DEFAULT_TRANSVERSION_RATE = 1.4e-7


class MutationType(enum.Enum):
    TRANSITION = "transition"
    TRANSVERSION = "transversion"


def classify_mutation(base_from: str, base_to: str) -> MutationType:
    """Transition iff both purines or both pyrimidines; transversion otherwise."""
    if base_from == base_to:
        raise SameNucleotide(f"{base_from!r} -> {base_to!r} is not a mutation")
    if is_purine(base_from) == is_purine(base_to):
        return MutationType.TRANSITION
    return MutationType.TRANSVERSION


@dataclass(frozen=True)
class MutationRates:
    """Per-site, per-generation substitution probabilities."""

    transition: float = DEFAULT_TRANSITION_RATE
    transversion: float = DEFAULT_TRANSVERSION_RATE

    def __post_init__(self):
        if not 0.0 < self.transversion <= self.transition < 1.0:
            raise InvalidProbability(
                f"need 0 < transversion <= transition < 1, got "
                f"{self.transversion} / {self.transition}"
            )

    def rate(self, base_from: str, base_to: str) -> float:
        kind = classify_mutation(base_from, base_to)
        return self.transition if kind is MutationType.TRANSITION else self.transversion

    def rate_matrix(self) -> np.ndarray:
        """4x4 matrix over ACGU indices; zero diagonal."""
        m = np.empty((4, 4), dtype=np.float64)
        bases = "ACGU"
        for i, a in enumerate(bases):
            for j, b in enumerate(bases):
                m[i, j] = 0.0 if i == j else self.rate(a, b)
        return m


def single_gen_mutation_prob(y_from, y_to, rates: MutationRates) -> float:
    """P(y_from -> y_to) in one generation; zero beyond Hamming distance 1."""
    a = str(y_from)
    b = str(y_to)
    d = hamming_distance(a, b)
    if d == 0:
        raise IdenticalSequences("sequences are identical")
    if d > 1:
        return 0.0
    i = next(k for k in range(len(a)) if a[k] != b[k])
    return rates.rate(a[i], b[i])


@dataclass(frozen=True)
class EmergenceIntensity:
    """Rate-weighted opportunity sum over distance-1 observed ancestors."""

    value: float

    def __post_init__(self):
        if not (self.value >= 0.0):
            raise InvalidProbability(f"intensity must be >= 0, got {self.value}")

    def __float__(self):
        return self.value


@dataclass
class PrevalenceTable:
    """Observed nucleotide sequences with counts plus the reproducing-host scale T."""

    entries: dict
    T: float
    total_count: int = field(init=False)

    def __post_init__(self):
        if self.T <= 0:
            raise ValueError(f"T must be positive, got {self.T}")
        norm = {}
        length = None
        for seq, count in self.entries.items():
            if not isinstance(seq, NucSeq):
                seq = NucSeq(str(seq))
            if int(count) != count or count <= 0:
                raise ValueError(f"count for {seq} must be a positive integer")
            if length is None:
                length = len(seq)
            elif len(seq) != length:
                raise LengthMismatch(
                    f"{seq} has length {len(seq)}, expected {length}"
                )
            norm[seq] = norm.get(seq, 0) + int(count)
        self.entries = norm
        self.total_count = sum(norm.values())

    def __len__(self):
        return len(self.entries)

    def __contains__(self, seq):
        if not isinstance(seq, NucSeq):
            seq = NucSeq(str(seq))
        return seq in self.entries

    @property
    def width(self) -> int:
        return len(next(iter(self.entries)))

    def to_arrays(self):
        """Sorted (keys, base-index matrix, opportunity counts) for the kernels."""
        keys = sorted(self.entries)
        mat = np.stack([encode_bases(k.seq) for k in keys]) if keys else \
            np.empty((0, 0), dtype=np.uint8)
        counts = np.array(
            [self.entries[k] / self.total_count * self.T for k in keys],
            dtype=np.float64,
        )
        return keys, mat, counts


def opportunity_count(table: PrevalenceTable, y) -> float:
    """c(y): empirical frequency of y scaled by the host count T."""
    if not isinstance(y, NucSeq):
        y = NucSeq(str(y))
    try:
        count = table.entries[y]
    except KeyError:
        raise UnknownSequence(f"{y} not in prevalence table") from None
    return count / table.total_count * table.T


def emergence_intensity(table: PrevalenceTable, y, rates: MutationRates) -> EmergenceIntensity:
    """S(y): sum of rate * c(ancestor) over observed ancestors at distance 1."""
    if not isinstance(y, NucSeq):
        y = NucSeq(str(y))
    total = 0.0
    for ancestor in table.entries:
        if len(ancestor) != len(y):
            raise LengthMismatch(f"{ancestor} and {y} differ in length")
        if hamming_distance(ancestor.seq, y.seq) == 1:
            total += single_gen_mutation_prob(ancestor, y, rates) * opportunity_count(
                table, ancestor
            )
    return EmergenceIntensity(total)


def emergence_prob_approx(intensity, alpha: float) -> float:
    """1 - exp(-alpha * S); the large-count, small-rate limit of the exact form."""
    if not 0.0 < alpha <= 1.0:
        raise InvalidProbability(f"alpha must be in (0, 1], got {alpha}")
    s = float(intensity)
    if s < 0:
        raise InvalidProbability(f"intensity must be >= 0, got {s}")
    return -math.expm1(-alpha * s)


def emergence_prob_exact(ancestors, alpha: float) -> float:
    """1 - prod (1 - P*alpha)^c over (P, c) ancestor pairs, in log space."""
    log_term = 0.0
    for p, c in ancestors:
        if c < 0:
            raise InvalidProbability(f"opportunity count must be >= 0, got {c}")
        pa = p * alpha
        if not 0.0 <= pa < 1.0:
            raise InvalidProbability(f"P*alpha must lie in [0, 1), got {pa}")
        log_term += c * math.log1p(-pa)
    return -math.expm1(log_term)
