"""Bounded enumeration over degree-2 classes.

Two operations share one scan primitive ("find all small coefficient
vectors b where a fixed polynomial expression in the class sum b_j y_j
vanishes"): the square-zero search used by the rational-product criterion,
and the row-by-row search for unimodular matrices inducing graded ring
isomorphisms.  Results are deterministic: candidates are enumerated in
lexicographic order and the first complete witness is returned, which makes
it the lexicographically smallest one.
"""

from __future__ import annotations

from itertools import product
from math import gcd

from . import _backend
from .errors import DomainMismatchError
from .linalg import det_int, minors_gcd
from .ring import (
    BottRing,
    CohomologyClass,
    IsoWitness,
    image_of_terms,
    verify_map,
)


def _pure_scan(ring: BottRing, pieces: dict, tmax: int, bound: int):
    zero = ring.zero()
    piece_list = [pieces.get(t, zero) for t in range(tmax + 1)]
    out = []
    for vec in product(range(-bound, bound + 1), repeat=ring.height):
        if not any(vec):
            continue
        h = ring.linear_class(vec)
        acc = piece_list[tmax]
        for t in range(tmax - 1, -1, -1):
            acc = acc * h + piece_list[t]
        if acc.is_zero():
            out.append(vec)
    return out


def _scan(ring: BottRing, pieces: dict, tmax: int, bound: int, backend):
    mode = _backend.resolve(backend)
    if mode == "compiled":
        res = _backend.linear_scan(
            ring, pieces, tmax, bound, strict=(backend == "compiled")
        )
        if res is not None:
            return res
    return _pure_scan(ring, pieces, tmax, bound)


def square_zero_elements(
    ring: BottRing, k: int, bound: int, backend: str | None = None
) -> list[CohomologyClass]:
    """All classes sum(b_j y_j), not all b_j zero, |b_j| <= bound, whose k-th
    power vanishes, in lexicographic order over the coefficient vectors."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("power must be a positive integer")
    if not isinstance(bound, int) or bound < 0:
        raise ValueError("coefficient bound must be nonnegative")
    vectors = _scan(ring, {k: ring.one()}, k, bound, backend)
    return [ring.linear_class(v) for v in vectors]


def iso_search(
    ring: BottRing, ring_prime: BottRing, bound: int, backend: str | None = None
) -> IsoWitness | None:
    """Search integer matrices with entries in [-bound, bound] for a graded
    ring isomorphism H*(ring') -> H*(ring).

    Row i of a candidate matrix expresses the image of the i-th primed
    generator in the unprimed basis.  Matrices are tried in lexicographic
    order (row 1 varies slowest); rows are filtered stage by stage, which is
    possible because the i-th relation only involves the first i generators.
    A gcd-of-minors prune discards prefixes that cannot complete to a
    unimodular matrix.  Returns the first verified witness, or None.
    """
    target, source = ring, ring_prime
    if source.domain != target.domain:
        raise DomainMismatchError("rings must share a coefficient domain")
    if source.height != target.height:
        return None
    if sorted(source.dims) != sorted(target.dims):
        return None
    m = source.height
    rows: list[tuple[int, ...]] = []
    found = None

    def stage_pieces(i: int) -> dict:
        # split f_i by the exponent of the i-th primed generator; the
        # cofactors only involve generators < i, whose rows are fixed
        split: dict[int, dict] = {}
        for e, c in source.relation_terms(i).items():
            t = e[i - 1]
            rest = list(e)
            rest[i - 1] = 0
            split.setdefault(t, {})[tuple(rest)] = c
        return {
            t: image_of_terms(target, rows, part) for t, part in split.items()
        }

    def dfs() -> bool:
        nonlocal found
        depth = len(rows)
        if depth == m:
            if abs(det_int([list(r) for r in rows])) == 1:
                found = tuple(rows)
                return True
            return False
        pieces = stage_pieces(depth + 1)
        candidates = _scan(target, pieces, max(pieces), bound, backend)
        for row in candidates:
            rows.append(row)
            if minors_gcd(rows, m) == 1 and dfs():
                return True
            rows.pop()
        return False

    if not dfs():
        return None
    rm = verify_map(source, target, found)
    if rm is None:  # cannot happen: every stage image was checked
        raise AssertionError("stage-verified matrix failed full verification")
    return IsoWitness(rm)
