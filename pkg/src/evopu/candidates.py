"""Unobserved-candidate generation: single-mutation neighborhood of the observed set.

Every observed sequence contributes its 9*(3L) single-site mutants. A mutant's
intensity accumulates over all observed ancestors that can produce it; mutants
containing stop codons, mutants already observed, and mutants below the
emergence-probability threshold are dropped. The surviving nucleotide set,
its translations, and the per-amino-acid encoding index are returned together.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._kernels import scan_mutants
from .errors import EmptyObservedSet, InvalidProbability, UnknownAminoSequence
from .evomodel import EmergenceIntensity, MutationRates, PrevalenceTable, emergence_prob_approx
from .seqcore import AaSeq, GeneticCode, NucSeq, decode_bases, translate

DEFAULT_EPSILON = -math.expm1(-10.0)  # 1 - exp(-10)


class EncodingEntry(NamedTuple):
    nuc: NucSeq
    observed: bool
    intensity: float


@dataclass
class CandidateSet:
    """Generated unobserved sequences plus the restricted encoding index."""

    nuc_candidates: dict  # NucSeq -> EmergenceIntensity
    aa_candidates: set  # AaSeq, disjoint from the observed amino-acid set
    encoding_index: dict  # AaSeq -> list[EncodingEntry]

    @property
    def n_nuc(self) -> int:
        return len(self.nuc_candidates)

    @property
    def n_aa(self) -> int:
        return len(self.aa_candidates)


def _aggregate_mutants(table: PrevalenceTable, rates: MutationRates, chunk: int):
    """Sum per-mutant intensity contributions over all observed ancestors."""
    keys, mat, counts = table.to_arrays()
    stop_mask = GeneticCode.default().stop_mask()
    rate_mat = rates.rate_matrix()
    w = mat.shape[1]
    observed = {row.tobytes() for row in mat}

    totals = {}
    for lo in range(0, len(keys), chunk):
        muts, contrib = scan_mutants(
            mat[lo : lo + chunk], counts[lo : lo + chunk], rate_mat, stop_mask
        )
        if not len(muts):
            continue
        flat = np.ascontiguousarray(muts).view(f"S{w}").ravel()
        uniq, inv = np.unique(flat, return_inverse=True)
        sums = np.bincount(inv, weights=contrib, minlength=len(uniq))
        for key, s in zip(uniq.tolist(), sums.tolist()):
            if key not in observed:
                totals[key] = totals.get(key, 0.0) + s
    return keys, totals


def generate_neighborhood(
    table: PrevalenceTable,
    rates: MutationRates,
    epsilon: float = DEFAULT_EPSILON,
    alpha_gen: float = 1.0,
    chunk: int = 512,
) -> CandidateSet:
    """Build the candidate set and encoding index from the observed table.

    Keeps mutants whose approximate emergence probability (at alpha_gen)
    strictly exceeds epsilon. epsilon = 1 yields an empty candidate set.
    """
    if len(table) == 0:
        raise EmptyObservedSet("prevalence table has no entries")
    if not 0.0 <= epsilon <= 1.0:
        raise InvalidProbability(f"epsilon must be in [0, 1], got {epsilon}")
    if not 0.0 < alpha_gen <= 1.0:
        raise InvalidProbability(f"alpha_gen must be in (0, 1], got {alpha_gen}")

    observed_keys, totals = _aggregate_mutants(table, rates, chunk)

    nuc_candidates = {}
    for key in sorted(totals):
        s = totals[key]
        if emergence_prob_approx(s, alpha_gen) > epsilon:
            seq = NucSeq._trusted(decode_bases(np.frombuffer(key, dtype=np.uint8)))
            nuc_candidates[seq] = EmergenceIntensity(s)

    observed_aa = {translate(y) for y in observed_keys}
    aa_candidates = {translate(y) for y in nuc_candidates} - observed_aa

    encoding_index = {}
    for y in observed_keys:  # already sorted by to_arrays
        encoding_index.setdefault(translate(y), []).append(EncodingEntry(y, True, 0.0))
    for y, s in nuc_candidates.items():  # sorted by construction
        encoding_index.setdefault(translate(y), []).append(
            EncodingEntry(y, False, s.value)
        )
    return CandidateSet(nuc_candidates, aa_candidates, encoding_index)


def restricted_encodings(cs: CandidateSet, x) -> list:
    """Encoding-index entries for x; errors if x is not an indexed sequence."""
    if not isinstance(x, AaSeq):
        x = AaSeq(str(x))
    try:
        return cs.encoding_index[x]
    except KeyError:
        raise UnknownAminoSequence(f"{x} has no indexed encodings") from None


def write_candidates_csv(cs: CandidateSet, path) -> None:
    """Emit one row per indexed nucleotide sequence, sorted, bit-exact."""
    rows = []
    for aa, entries in cs.encoding_index.items():
        for e in entries:
            rows.append((e.nuc.seq, aa.seq, e.intensity, int(e.observed)))
    rows.sort()
    with open(path, "w") as fh:
        fh.write("nuc_sequence,aa_sequence,intensity,observed\n")
        for nuc, aa, s, obs in rows:
            fh.write(f"{nuc},{aa},{s:.17g},{obs}\n")
