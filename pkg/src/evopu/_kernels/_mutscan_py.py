"""Pure-numpy single-site mutation scan (fallback for the compiled kernel)."""

import numpy as np


def scan_mutants(seqs, counts, rates, stop_mask):
    """Enumerate stop-free single-site mutants of each parent sequence.

    seqs: (N, W) uint8 base indices into ACGU, W divisible by 3.
    counts: (N,) float64 per-parent opportunity counts.
    rates: (4, 4) float64 single-generation substitution rates [orig, new].
    stop_mask: (64,) uint8, indexed by 16*i0 + 4*i1 + i2 over a codon.

    Returns (mutants (M, W) uint8, contrib (M,) float64) where contrib is
    rate(orig -> new) * count(parent) for each emitted (parent, mutant) pair.
    """
    seqs = np.ascontiguousarray(seqs, dtype=np.uint8)
    n, w = seqs.shape
    out_rows = []
    out_contrib = []
    for j in range(w):
        f0 = 3 * (j // 3)
        orig = seqs[:, j]
        for b in range(4):
            keep = orig != b
            if not keep.any():
                continue
            rows = seqs[keep]
            muts = rows.copy()
            muts[:, j] = b
            codon = (
                muts[:, f0].astype(np.intp) * 16
                + muts[:, f0 + 1].astype(np.intp) * 4
                + muts[:, f0 + 2]
            )
            ok = stop_mask[codon] == 0
            if not ok.any():
                continue
            out_rows.append(muts[ok])
            out_contrib.append(rates[rows[ok, j], b] * counts[keep][ok])
    if not out_rows:
        return np.empty((0, w), dtype=np.uint8), np.empty(0, dtype=np.float64)
    return np.concatenate(out_rows), np.concatenate(out_contrib)
