# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Dense int64 inner loop for bounded degree-2 scans.

This mirrors the pure scan in bottcoh.search exactly (same candidate order,
same zero test).  bottcoh._backend certifies a magnitude bound before
dispatching here, so plain int64 arithmetic cannot overflow.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset


def linear_poly_scan(int m, int K,
                     long long[::1] ptr, int[::1] idx, long long[::1] val,
                     int[::1] var_slot,
                     long long[::1] pieces,
                     int tmax, int bound):
    """Vectors b in [-bound, bound]^m (b != 0, lexicographic order) where
    sum_t pieces[t] * h^t vanishes, h being the class sum_j b_j y_j.

    ``pieces`` is (tmax+1) x K row-major; multiplication uses the ring's
    structure constants in CSR layout over basis-monomial pairs.
    """
    cdef long long *cur = <long long *> malloc(K * sizeof(long long))
    cdef long long *nxt = <long long *> malloc(K * sizeof(long long))
    cdef long long *b = <long long *> malloc(m * sizeof(long long))
    cdef long long *tmp
    cdef Py_ssize_t j, a, s, c, t, seg
    cdef long long coeff, bj
    cdef bint nonzero, iszero
    out = []
    if cur == NULL or nxt == NULL or b == NULL:
        free(cur)
        free(nxt)
        free(b)
        raise MemoryError()
    try:
        for j in range(m):
            b[j] = -bound
        while True:
            nonzero = False
            for j in range(m):
                if b[j] != 0:
                    nonzero = True
                    break
            if nonzero:
                memcpy(cur, &pieces[tmax * K], K * sizeof(long long))
                for t in range(tmax - 1, -1, -1):
                    memset(nxt, 0, K * sizeof(long long))
                    for a in range(K):
                        coeff = cur[a]
                        if coeff == 0:
                            continue
                        for j in range(m):
                            bj = b[j]
                            if bj == 0:
                                continue
                            seg = a * K + var_slot[j]
                            for s in range(ptr[seg], ptr[seg + 1]):
                                nxt[idx[s]] += coeff * bj * val[s]
                    for c in range(K):
                        nxt[c] += pieces[t * K + c]
                    tmp = cur
                    cur = nxt
                    nxt = tmp
                iszero = True
                for c in range(K):
                    if cur[c] != 0:
                        iszero = False
                        break
                if iszero:
                    out.append(tuple([b[j] for j in range(m)]))
            j = m - 1
            while j >= 0:
                if b[j] < bound:
                    b[j] += 1
                    break
                b[j] = -bound
                j -= 1
            if j < 0:
                break
    finally:
        free(cur)
        free(nxt)
        free(b)
    return out
