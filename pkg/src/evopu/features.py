"""Continuous sequence representations for the classifiers.

The physicochemical encoding concatenates, position by position, the
z-normalized property values of each residue (normalization statistics are
taken over the 20-residue alphabet). Feature vectors are plain float64
numpy arrays of dimension K*L (properties) or 20*L (one-hot).
"""

import csv
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from .errors import ParseError, UnknownAminoSequence, UnknownResidue
from .seqcore import AMINO_ACIDS, AaSeq


@dataclass
class PropertyTable:
    """Per-residue values for K named properties, with alphabet-level z-stats."""

    names: list
    raw: dict  # residue -> (K,) float array

    def __post_init__(self):
        missing = set(AMINO_ACIDS) - set(self.raw)
        if missing:
            raise ParseError(f"property table missing residues: {sorted(missing)}")
        mat = np.stack([self.raw[r] for r in AMINO_ACIDS])
        mean = mat.mean(axis=0)
        std = mat.std(axis=0)
        if np.any(std <= 0):
            bad = [self.names[i] for i in np.flatnonzero(std <= 0)]
            raise ParseError(f"constant property column(s): {bad}")
        self._norm = {r: (v - mean) / std for r, v in self.raw.items()}
        self.mean = mean
        self.std = std

    @property
    def n_properties(self) -> int:
        return len(self.names)

    def normalized(self, residue: str) -> np.ndarray:
        try:
            return self._norm[residue]
        except KeyError:
            raise UnknownResidue(f"no property values for {residue!r}") from None

    @classmethod
    def from_csv(cls, path) -> "PropertyTable":
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if not header or header[0] != "residue":
                raise ParseError(f"{path}: first column must be 'residue'")
            names = header[1:]
            raw = {}
            for lineno, row in enumerate(reader, start=2):
                if not row:
                    continue
                if len(row) != len(header):
                    raise ParseError(f"{path}:{lineno}: expected {len(header)} fields")
                try:
                    raw[row[0]] = np.array([float(v) for v in row[1:]])
                except ValueError as e:
                    raise ParseError(f"{path}:{lineno}: {e}") from None
        return cls(names, raw)

    @classmethod
    @lru_cache(maxsize=1)
    def default(cls) -> "PropertyTable":
        ref = resources.files("evopu.data") / "chem_properties.csv"
        with resources.as_file(ref) as path:
            return cls.from_csv(path)


def encode_chem(x, table: PropertyTable = None) -> np.ndarray:
    """Position-major concatenation of normalized property values; dim K*L."""
    if table is None:
        table = PropertyTable.default()
    if not isinstance(x, AaSeq):
        x = AaSeq(str(x))
    if len(x) == 0:
        return np.empty(0, dtype=np.float64)
    return np.concatenate([table.normalized(r) for r in x.seq])


_AA_INDEX = {r: i for i, r in enumerate(AMINO_ACIDS)}


def encode_onehot(x) -> np.ndarray:
    """20*L indicator vector, one 1 per position, residue order ACDEFGHIKLMNPQRSTVWY."""
    if not isinstance(x, AaSeq):
        x = AaSeq(str(x))
    out = np.zeros(20 * len(x), dtype=np.float64)
    for i, r in enumerate(x.seq):
        out[20 * i + _AA_INDEX[r]] = 1.0
    return out


def encode_many(xs, encoder) -> np.ndarray:
    """Stack encoder(x) over a sequence collection into an (n, d) matrix."""
    vecs = [encoder(x) for x in xs]
    if not vecs:
        return np.empty((0, 0), dtype=np.float64)
    return np.stack(vecs)


def load_external_features(path) -> dict:
    """Precomputed vectors from CSV: first column sequence, rest float features."""
    mapping = {}
    dim = None
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        next(reader, None)  # header
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                vec = np.array([float(v) for v in row[1:]])
            except ValueError as e:
                raise ParseError(f"{path}:{lineno}: {e}") from None
            if dim is None:
                dim = vec.size
            elif vec.size != dim:
                raise ParseError(f"{path}:{lineno}: expected {dim} features")
            mapping[row[0].upper()] = vec
    if not mapping:
        raise ParseError(f"{path}: no feature rows")
    return mapping


def external_encoder(mapping: dict):
    """Encoder closure over a precomputed-feature lookup."""

    def encode(x):
        key = str(x).upper()
        try:
            return mapping[key]
        except KeyError:
            raise UnknownAminoSequence(f"no external features for {key}") from None

    return encode
