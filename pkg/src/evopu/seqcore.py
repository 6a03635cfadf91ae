"""Nucleotide/amino-acid alphabets, genetic code, translation and codon enumeration.

Sequences are RNA-canonical internally; DNA input is mapped U<->T at ingestion.
All sequence values are validated at construction and immutable afterwards.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from .errors import (
    EnumerationCapExceeded,
    InvalidSymbol,
    LengthMismatch,
    StopCodonPresent,
)

RNA_BASES = "ACGU"
DNA_BASES = "ACGT"
PURINES = frozenset("AG")
PYRIMIDINES = frozenset("CUT")
AMINO_ACIDS = "ACDEFGHIKLMNPQRSTVWY"
STOP_SYMBOL = "*"

BASE_INDEX = {b: i for i, b in enumerate(RNA_BASES)}

DEFAULT_ENUMERATION_CAP = 10_000_000

_AA_SET = frozenset(AMINO_ACIDS)
_RNA_SET = frozenset(RNA_BASES)


def is_purine(base: str) -> bool:
    if base in PURINES:
        return True
    if base in PYRIMIDINES:
        return False
    raise InvalidSymbol(f"not a nucleotide: {base!r}")


def canonical_rna(seq: str, mode: str = "rna") -> str:
    """Uppercase and, for DNA input, map T to U. Validates the per-mode alphabet."""
    seq = seq.upper()
    if mode == "rna":
        bad = set(seq) - _RNA_SET
    elif mode == "dna":
        bad = set(seq) - set(DNA_BASES)
        seq = seq.replace("T", "U")
    else:
        raise ValueError(f"unknown alphabet mode {mode!r}")
    if bad:
        raise InvalidSymbol(f"invalid {mode} symbol(s): {sorted(bad)}")
    return seq


class GeneticCode:
    """Codon -> residue table (stop codons map to '*')."""

    def __init__(self, table: dict):
        if len(table) != 64:
            raise ValueError(f"genetic code must have 64 codons, got {len(table)}")
        for codon, res in table.items():
            if len(codon) != 3 or set(codon) - _RNA_SET:
                raise InvalidSymbol(f"bad codon {codon!r}")
            if res != STOP_SYMBOL and res not in _AA_SET:
                raise InvalidSymbol(f"bad residue {res!r} for codon {codon}")
        self._table = dict(table)
        self._stops = frozenset(c for c, r in table.items() if r == STOP_SYMBOL)
        self._by_residue = {}
        for codon, res in sorted(table.items()):
            if res != STOP_SYMBOL:
                self._by_residue.setdefault(res, []).append(codon)

    @classmethod
    def from_file(cls, path) -> "GeneticCode":
        table = {}
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                codon, res = line.split("\t")
                table[codon] = res
        return cls(table)

    @classmethod
    @lru_cache(maxsize=1)
    def default(cls) -> "GeneticCode":
        ref = resources.files("evopu.data") / "genetic_code.tsv"
        with resources.as_file(ref) as path:
            return cls.from_file(path)

    def residue(self, codon: str) -> str:
        try:
            return self._table[codon]
        except KeyError:
            raise InvalidSymbol(f"unknown codon {codon!r}") from None

    def is_stop(self, codon: str) -> bool:
        return codon in self._stops

    @property
    def stop_codons(self) -> frozenset:
        return self._stops

    def synonymous(self, residue: str) -> tuple:
        try:
            return tuple(self._by_residue[residue])
        except KeyError:
            raise InvalidSymbol(f"unknown residue {residue!r}") from None

    def stop_mask(self) -> np.ndarray:
        """Length-64 uint8 mask indexed by 16*i0 + 4*i1 + i2 over ACGU indices."""
        mask = np.zeros(64, dtype=np.uint8)
        for codon in self._stops:
            i0, i1, i2 = (BASE_INDEX[b] for b in codon)
            mask[16 * i0 + 4 * i1 + i2] = 1
        return mask


@dataclass(frozen=True, order=True, slots=True)
class AaSeq:
    """Amino-acid sequence over the 20-letter alphabet (no stops)."""

    seq: str

    def __post_init__(self):
        object.__setattr__(self, "seq", self.seq.upper())
        bad = set(self.seq) - _AA_SET
        if bad:
            raise InvalidSymbol(f"invalid residue(s): {sorted(bad)}")

    @classmethod
    def _trusted(cls, seq: str) -> "AaSeq":
        obj = object.__new__(cls)
        object.__setattr__(obj, "seq", seq)
        return obj

    def __len__(self):
        return len(self.seq)

    def __str__(self):
        return self.seq


@dataclass(frozen=True, order=True, slots=True)
class NucSeq:
    """Valid nucleotide sequence: RNA alphabet, length 3L, no stop-codon frame."""

    seq: str

    def __post_init__(self):
        object.__setattr__(self, "seq", self.seq.upper())
        bad = set(self.seq) - _RNA_SET
        if bad:
            raise InvalidSymbol(f"invalid nucleotide(s): {sorted(bad)}")
        if len(self.seq) % 3:
            raise LengthMismatch(f"length {len(self.seq)} not divisible by 3")
        code = GeneticCode.default()
        for i in range(0, len(self.seq), 3):
            codon = self.seq[i : i + 3]
            if code.is_stop(codon):
                raise StopCodonPresent(f"stop codon {codon} at position {i}")

    @classmethod
    def _trusted(cls, seq: str) -> "NucSeq":
        obj = object.__new__(cls)
        object.__setattr__(obj, "seq", seq)
        return obj

    def __len__(self):
        return len(self.seq)

    def __str__(self):
        return self.seq


def translate(y) -> AaSeq:
    """Map a nucleotide sequence to its residue sequence under the standard code."""
    if not isinstance(y, NucSeq):
        y = NucSeq(str(y))
    code = GeneticCode.default()
    s = y.seq
    residues = "".join(code.residue(s[i : i + 3]) for i in range(0, len(s), 3))
    return AaSeq._trusted(residues)


def degeneracy(x) -> int:
    """Number of nucleotide sequences encoding x (product of codon degeneracies)."""
    if not isinstance(x, AaSeq):
        x = AaSeq(str(x))
    code = GeneticCode.default()
    n = 1
    for r in x.seq:
        n *= len(code.synonymous(r))
    return n


def encodings_of(x, cap: int = DEFAULT_ENUMERATION_CAP) -> set:
    """All nucleotide sequences translating to x."""
    if not isinstance(x, AaSeq):
        x = AaSeq(str(x))
    if degeneracy(x) > cap:
        raise EnumerationCapExceeded(
            f"degeneracy {degeneracy(x)} exceeds enumeration cap {cap}"
        )
    code = GeneticCode.default()
    pools = [code.synonymous(r) for r in x.seq]
    return {NucSeq._trusted("".join(parts)) for parts in itertools.product(*pools)}


def hamming_distance(a: str, b: str) -> int:
    if len(a) != len(b):
        raise LengthMismatch(f"lengths differ: {len(a)} vs {len(b)}")
    return sum(ca != cb for ca, cb in zip(a, b))


def encode_bases(seq: str) -> np.ndarray:
    """Sequence string -> uint8 indices into ACGU."""
    try:
        return np.array([BASE_INDEX[b] for b in seq], dtype=np.uint8)
    except KeyError as e:
        raise InvalidSymbol(f"invalid nucleotide {e.args[0]!r}") from None


def decode_bases(arr) -> str:
    return "".join(RNA_BASES[i] for i in arr)
