# graph_core/signature_kernels.py
"""
Vectorised degree-dominance filtering over many database nodes at once.

Used wherever a whole label bucket is filtered by the matching node
principal (starting-node candidates, global candidate sets).
"""

import logging
import warnings

import numpy as np

logger = logging.getLogger(__name__)

# Below this many rows the NumPy path wins: no JIT compile on first use
NUMBA_MIN_ROWS = 4096

try:
    from numba import jit

    warnings.filterwarnings('ignore', category=UserWarning, module='numba')
    NUMBA_AVAILABLE = True
except ImportError:
    NUMBA_AVAILABLE = False
    logger.info("Using NumPy signature filtering (Numba not available)")


def _dominating_rows_numpy(counts, totals, rows, labs, dirs, need, need_out, need_in):
    mask = (totals[rows, 0] >= need_out) & (totals[rows, 1] >= need_in)
    if labs.shape[0]:
        mask &= np.all(counts[rows[:, None], labs[None, :], dirs[None, :]] >= need[None, :], axis=1)
    return mask


if NUMBA_AVAILABLE:
    @jit(nopython=True, cache=False)
    def _dominating_rows_numba(counts, totals, rows, labs, dirs, need, need_out, need_in):
        """
        Numba-optimized degree dominance test per candidate row.
        """
        out = np.zeros(rows.shape[0], dtype=np.bool_)
        for i in range(rows.shape[0]):
            v = rows[i]
            if totals[v, 0] < need_out or totals[v, 1] < need_in:
                continue
            ok = True
            for j in range(labs.shape[0]):
                if counts[v, labs[j], dirs[j]] < need[j]:
                    ok = False
                    break
            out[i] = ok
        return out


def dominating_rows(counts: np.ndarray, totals: np.ndarray, rows: np.ndarray,
                    labs: np.ndarray, dirs: np.ndarray, need: np.ndarray,
                    need_out: int, need_in: int) -> np.ndarray:
    """
    Boolean mask over rows: True where the node's signature dominates the requirement.

    Args:
        counts: (|V|, |edge labels|, 2) signature counts
        totals: (|V|, 2) signature totals
        rows: candidate node ids (int64)
        labs, dirs, need: required (label, direction) -> count triples
        need_out, need_in: required totals

    Returns:
        Boolean array aligned with rows
    """
    if rows.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    if NUMBA_AVAILABLE and rows.shape[0] >= NUMBA_MIN_ROWS:
        return _dominating_rows_numba(counts, totals, rows, labs, dirs, need, need_out, need_in)
    return _dominating_rows_numpy(counts, totals, rows, labs, dirs, need, need_out, need_in)
