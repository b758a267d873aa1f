"""Selection between the compiled scan kernel and the pure-Python scan.

The extension module is optional.  When it imported successfully and
``BOTTCOH_PURE`` is not set, bounded scans over integer rings with a small
monomial basis run on dense int64 vectors in C.  A conservative magnitude
bound is checked first, so the kernel is only entered when no intermediate
value can overflow; everything else falls back to the exact pure path.
Both paths enumerate in the same lexicographic order and agree exactly.
"""

from __future__ import annotations

import os
from array import array
from weakref import WeakKeyDictionary

try:
    from . import _fastcore
except ImportError:  # pure-Python install
    _fastcore = None

HAVE_COMPILED = _fastcore is not None

_INT64_LIMIT = 1 << 62
_MAX_BASIS = 128


def compiled_enabled() -> bool:
    return HAVE_COMPILED and os.environ.get("BOTTCOH_PURE") != "1"


def resolve(backend: str | None) -> str:
    """Map a backend request ('auto', 'pure', 'compiled', None) to a mode."""
    if backend in (None, "auto"):
        return "compiled" if compiled_enabled() else "pure"
    if backend == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled kernel is not available in this install")
        return "compiled"
    if backend == "pure":
        return "pure"
    raise ValueError(f"unknown backend {backend!r}")


_tables: WeakKeyDictionary = WeakKeyDictionary()


def _ring_tables(ring):
    tab = _tables.get(ring)
    if tab is None:
        tab = _build_tables(ring)
        _tables[ring] = tab
    return tab


def _build_tables(ring):
    basis = []
    for d in range(ring.top_degree + 1):
        basis.extend(ring.basis(d))
    index = {e: i for i, e in enumerate(basis)}
    K = len(basis)
    m = ring.height
    var_slot = array("i", [0] * m)
    for j in range(m):
        e = [0] * m
        e[j] = 1
        var_slot[j] = index[tuple(e)]
    ptr = [0]
    idx: list[int] = []
    val: list[int] = []
    for ea in basis:
        for eb in basis:
            prod = tuple(x + y for x, y in zip(ea, eb))
            for mono, c in sorted(ring._monomial_nf(prod).items()):
                idx.append(index[mono])
                val.append(int(c))
            ptr.append(len(idx))
    # worst-case column weight of "multiply by a degree-2 class with unit
    # coefficients": used to certify that int64 cannot overflow
    col_weight = [0] * K
    for a in range(K):
        for j in range(m):
            seg = a * K + var_slot[j]
            for s in range(ptr[seg], ptr[seg + 1]):
                col_weight[idx[s]] += abs(val[s])
    return {
        "K": K,
        "index": index,
        "basis": basis,
        "ptr": array("q", ptr),
        "idx": array("i", idx),
        "val": array("q", val),
        "var_slot": var_slot,
        "linear_weight": max(col_weight) if col_weight else 0,
    }


def _certified(tab, piece_max: list[int], tmax: int, bound: int) -> bool:
    w = tab["linear_weight"]
    cur = piece_max[tmax]
    for t in range(tmax - 1, -1, -1):
        cur = cur * bound * w + piece_max[t]
        if cur >= _INT64_LIMIT:
            return False
    return True


def linear_scan(ring, pieces: dict, tmax: int, bound: int, *, strict: bool = False):
    """Run the kernel scan; None means unsupported, caller should go pure.

    ``pieces`` maps exponent t to a CohomologyClass; the scan returns all
    nonzero vectors b in [-bound, bound]^m, in lexicographic order, with
    sum_t pieces[t] * (sum_j b_j y_j)^t == 0.
    """

    def bail(reason):
        if strict:
            raise RuntimeError(f"compiled scan unsupported here: {reason}")
        return None

    if _fastcore is None:
        return bail("extension not built")
    if ring.domain.modulus is not None or ring.domain.name != "Z":
        return bail("integer coefficients required")
    tab = _ring_tables(ring)
    K = tab["K"]
    if K > _MAX_BASIS:
        return bail(f"basis too large ({K})")
    index = tab["index"]
    flat = array("q", [0] * ((tmax + 1) * K))
    piece_max = [0] * (tmax + 1)
    for t, cls in pieces.items():
        for e, c in cls.items():
            c = int(c)
            flat[t * K + index[e]] = c
            piece_max[t] = max(piece_max[t], abs(c))
    if not _certified(tab, piece_max, tmax, bound):
        return bail("int64 magnitude bound not certified")
    return _fastcore.linear_poly_scan(
        ring.height,
        K,
        tab["ptr"],
        tab["idx"],
        tab["val"],
        tab["var_slot"],
        flat,
        tmax,
        bound,
    )
