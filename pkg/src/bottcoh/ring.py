"""Graded cohomology rings of generalized Bott towers.

The ring of a height-m tower is Z[y_1, ..., y_m] modulo one relation per
stage,

    f_i = y_i^{n_i+1} + c_1(xi_i) y_i^{n_i} + ... + c_{n_i}(xi_i) y_i,

where c_q(xi_i) is the q-th elementary symmetric polynomial in the stage's
summand first Chern classes (classes in y_1, ..., y_{i-1}).  Monomials with
every exponent e_i <= n_i form a free basis; rewriting an overflowing power
of y_i through f_i strictly lowers the y_i-exponent and only introduces
variables of smaller index, so reduction to this normal form terminates.
The generator y_i is minus the first Chern class of the tautological line
bundle of stage i.

Everything here is an immutable value and every operation is a pure
function, so concurrent use needs no locking.  Only even-degree cohomology
exists for these spaces; a class of "degree d" here lives in H^{2d}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainMismatchError, RingMismatchError, UnverifiedMapError
from .linalg import det_int
from .scalars import ZZ, Domain
from .towers import TowerSpec, validate_tower


class BottRing:
    """The cohomology ring of a tower over Z, Q or Z/n.

    The relation table is exposed as ``chern``: ``chern[i][q-1]`` is the
    coefficient dict of c_q(xi_{i+1}) on the monomial basis.
    """

    __slots__ = (
        "tower",
        "dims",
        "domain",
        "_mod",
        "chern",
        "_nf_cache",
        "_basis_cache",
        "_ranks",
        "_top",
        "__weakref__",
    )

    def __init__(self, tower: TowerSpec, domain: Domain = ZZ):
        tower = validate_tower(tower)
        self.tower = tower
        self.dims = tower.dims
        self.domain = domain
        self._mod = domain.modulus
        self._nf_cache = {}
        self._basis_cache = {}
        self._ranks = None
        self._top = tuple(self.dims)
        m = self.height
        chern = []
        for i, stage in enumerate(tower.stages):
            roots = []
            for row in stage.summand_exponents:
                d = {}
                for j, a in enumerate(row):
                    if a:
                        e = [0] * m
                        e[j] = 1
                        d[tuple(e)] = domain.coerce(a)
                roots.append(d)
            # elementary symmetric polynomials of the roots, reduced; only
            # stages < i are touched, which are already in `chern`
            self.chern = tuple(chern)
            es = [{(0,) * m: domain.one}]
            for u in roots:
                new = [dict(es[0])]
                for q in range(1, len(es) + 1):
                    term = self._raw_mul(es[q - 1], u)
                    if q < len(es):
                        term = self._raw_add(dict(es[q]), term)
                    new.append(term)
                es = new
            chern.append(tuple(es[1:]))
        self.chern = tuple(chern)

    # -- structure ---------------------------------------------------------

    @property
    def height(self) -> int:
        return len(self.dims)

    @property
    def top_degree(self) -> int:
        return sum(self.dims)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, BottRing):
            return NotImplemented
        return (
            self.dims == other.dims
            and self.domain == other.domain
            and self.chern == other.chern
        )

    def __hash__(self):
        return hash((self.dims, self.domain))

    def __repr__(self):
        return f"BottRing(dims={self.dims}, domain={self.domain})"

    def compatible(self, other: "BottRing") -> bool:
        return self is other or self == other

    def relation_terms(self, i: int) -> dict:
        """Raw coefficient dict of the stage-i relation f_i (1-based i)."""
        n = self.dims[i - 1]
        m = self.height
        lead = [0] * m
        lead[i - 1] = n + 1
        terms = {tuple(lead): self.domain.one}
        for q in range(1, n + 1):
            for g, c in self.chern[i - 1][q - 1].items():
                e = list(g)
                e[i - 1] += n + 1 - q
                terms[tuple(e)] = c
        return terms

    # -- normal form -------------------------------------------------------

    def _overflow_index(self, e):
        dims = self.dims
        for j in range(len(dims) - 1, -1, -1):
            if e[j] > dims[j]:
                return j
        return None

    def _monomial_nf(self, e):
        cached = self._nf_cache.get(e)
        if cached is not None:
            return cached
        i = self._overflow_index(e)
        if i is None:
            res = {e: self.domain.one}
            self._nf_cache[e] = res
            return res
        n_i = self.dims[i]
        acc = {}
        for q in range(1, n_i + 1):
            cq = self.chern[i][q - 1]
            if not cq:
                continue
            for g, cg in cq.items():
                ee = list(e)
                ee[i] -= q
                for j in range(i):
                    if g[j]:
                        ee[j] += g[j]
                for mono, coeff in self._monomial_nf(tuple(ee)).items():
                    acc[mono] = acc.get(mono, 0) - cg * coeff
        mod = self._mod
        if mod is not None:
            res = {k: v % mod for k, v in acc.items()}
            res = {k: v for k, v in res.items() if v}
        else:
            res = {k: v for k, v in acc.items() if v}
        self._nf_cache[e] = res
        return res

    def _raw_add(self, accum: dict, terms: dict) -> dict:
        mod = self._mod
        for k, v in terms.items():
            w = accum.get(k, 0) + v
            if mod is not None:
                w %= mod
            if w:
                accum[k] = w
            else:
                accum.pop(k, None)
        return accum

    def _raw_mul(self, a: dict, b: dict) -> dict:
        nf = self._monomial_nf
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                c = c1 * c2
                e = tuple(x + y for x, y in zip(e1, e2))
                for mono, d in nf(e).items():
                    out[mono] = out.get(mono, 0) + c * d
        mod = self._mod
        if mod is not None:
            return {k: v % mod for k, v in out.items() if v % mod}
        return {k: v for k, v in out.items() if v}

    def _reduce_raw(self, terms: dict) -> dict:
        out = {}
        nf = self._monomial_nf
        for e, c in terms.items():
            for mono, d in nf(tuple(e)).items():
                out[mono] = out.get(mono, 0) + c * d
        mod = self._mod
        if mod is not None:
            return {k: v % mod for k, v in out.items() if v % mod}
        return {k: v for k, v in out.items() if v}

    # -- element constructors ----------------------------------------------

    def zero(self) -> "CohomologyClass":
        return CohomologyClass(self, {})

    def one(self) -> "CohomologyClass":
        return CohomologyClass(self, {(0,) * self.height: self.domain.one})

    def scalar(self, value) -> "CohomologyClass":
        value = self.domain.coerce(value)
        if value == 0:
            return self.zero()
        return CohomologyClass(self, {(0,) * self.height: value})

    def gen(self, i: int) -> "CohomologyClass":
        """The degree-2 generator y_i, 1-based."""
        if not 1 <= i <= self.height:
            raise IndexError(f"generator index {i} out of range 1..{self.height}")
        e = [0] * self.height
        e[i - 1] = 1
        return CohomologyClass(self, {tuple(e): self.domain.one})

    def gens(self):
        return tuple(self.gen(i) for i in range(1, self.height + 1))

    def linear_class(self, coeffs) -> "CohomologyClass":
        """The class sum(coeffs[j] * y_{j+1})."""
        coeffs = list(coeffs)
        if len(coeffs) != self.height:
            raise ValueError("coefficient vector has wrong length")
        terms = {}
        for j, c in enumerate(coeffs):
            c = self.domain.coerce(c)
            if c != 0:
                e = [0] * self.height
                e[j] = 1
                terms[tuple(e)] = c
        return CohomologyClass(self, terms)

    def from_terms(self, terms) -> "CohomologyClass":
        """Normal form of a formal polynomial given as {exponents: coefficient}.

        Exponents may exceed the componentwise bounds; coefficients are
        coerced into the ring's domain.
        """
        raw = {}
        for e, c in dict(terms).items():
            e = tuple(int(x) for x in e)
            if len(e) != self.height or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e}")
            c = self.domain.coerce(c)
            if c != 0:
                raw[e] = raw.get(e, self.domain.zero) + c
        return CohomologyClass(self, self._reduce_raw(raw))

    # -- graded structure ----------------------------------------------------

    def graded_rank(self, d: int) -> int:
        """Rank of H^{2d}: the t^d coefficient of prod_i (1 + t + ... + t^{n_i})."""
        if self._ranks is None:
            poly = [1]
            for n in self.dims:
                new = [0] * (len(poly) + n)
                for i, c in enumerate(poly):
                    for k in range(n + 1):
                        new[i + k] += c
                poly = new
            self._ranks = tuple(poly)
        if 0 <= d < len(self._ranks):
            return self._ranks[d]
        return 0

    def basis(self, d: int):
        """Basis monomials of degree 2d as exponent tuples, in lexicographic order."""
        cached = self._basis_cache.get(d)
        if cached is not None:
            return cached
        out = []
        e = [0] * self.height

        def fill(j, rest):
            if j == self.height:
                if rest == 0:
                    out.append(tuple(e))
                return
            for v in range(min(rest, self.dims[j]) + 1):
                e[j] = v
                fill(j + 1, rest - v)
            e[j] = 0

        if 0 <= d <= self.top_degree:
            fill(0, d)
        result = tuple(sorted(out))
        self._basis_cache[d] = result
        return result

    def integrate(self, u: "CohomologyClass"):
        """Coefficient of the top monomial y_1^{n_1} ... y_m^{n_m}."""
        if not self.compatible(u.ring):
            raise RingMismatchError("class belongs to a different ring")
        return u._c.get(self._top, self.domain.zero)


class CohomologyClass:
    """A cohomology class in normal form: a finite map basis monomial -> scalar.

    Instances are immutable; arithmetic returns new classes.  Zero
    coefficients are never stored.
    """

    __slots__ = ("ring", "_c")

    def __init__(self, ring: BottRing, coeffs: dict):
        self.ring = ring
        self._c = coeffs

    # mapping-style access ---------------------------------------------------

    def coefficient(self, exponents):
        return self._c.get(tuple(exponents), self.ring.domain.zero)

    def items(self):
        return self._c.items()

    def support(self):
        return sorted(self._c, key=lambda e: (sum(e), e))

    def is_zero(self) -> bool:
        return not self._c

    def degrees(self):
        return sorted({sum(e) for e in self._c})

    def homogeneous_part(self, d: int) -> "CohomologyClass":
        return CohomologyClass(
            self.ring, {e: c for e, c in self._c.items() if sum(e) == d}
        )

    def max_degree(self) -> int:
        return max((sum(e) for e in self._c), default=0)

    # arithmetic --------------------------------------------------------------

    def _binary(self, other) -> "CohomologyClass":
        if isinstance(other, CohomologyClass):
            if not self.ring.compatible(other.ring):
                raise RingMismatchError("classes belong to different rings")
            return other
        return self.ring.scalar(other)

    def __add__(self, other):
        other = self._binary(other)
        merged = self.ring._raw_add(dict(self._c), other._c)
        return CohomologyClass(self.ring, merged)

    __radd__ = __add__

    def __neg__(self):
        mod = self.ring._mod
        if mod is None:
            return CohomologyClass(self.ring, {e: -c for e, c in self._c.items()})
        return CohomologyClass(self.ring, {e: (-c) % mod for e, c in self._c.items()})

    def __sub__(self, other):
        other = self._binary(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CohomologyClass):
            if not self.ring.compatible(other.ring):
                raise RingMismatchError("classes belong to different rings")
            return CohomologyClass(self.ring, self.ring._raw_mul(self._c, other._c))
        return CohomologyClass(
            self.ring, self.ring._raw_mul(self._c, self.ring.scalar(other)._c)
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, CohomologyClass):
            return self.ring.compatible(other.ring) and self._c == other._c
        if isinstance(other, (int, Fraction)):
            try:
                return self._c == self.ring.scalar(other)._c
            except DomainMismatchError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.dims, tuple(sorted(self._c.items()))))

    # presentation -------------------------------------------------------------

    def to_obj(self):
        """Serialized form: graded-lex list of {"exponents": [...], "coeff": str}."""
        dom = self.ring.domain
        return [
            {"exponents": list(e), "coeff": dom.to_str(self._c[e])}
            for e in self.support()
        ]

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e in self.support():
            c = self._c[e]
            mono = "*".join(
                f"y{j + 1}" if k == 1 else f"y{j + 1}^{k}"
                for j, k in enumerate(e)
                if k
            )
            cs = self.ring.domain.to_str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


# -- operation-style wrappers ---------------------------------------------


def build_ring(tower, domain: Domain = ZZ) -> BottRing:
    """Cohomology ring of a tower over the given coefficient domain."""
    return BottRing(validate_tower(tower), domain)


def normal_form(ring: BottRing, terms) -> CohomologyClass:
    """Normal form of a formal polynomial (mapping exponents -> coefficient)."""
    return ring.from_terms(terms)


def multiply(ring: BottRing, u: CohomologyClass, v: CohomologyClass) -> CohomologyClass:
    if not (ring.compatible(u.ring) and ring.compatible(v.ring)):
        raise RingMismatchError("classes do not belong to the given ring")
    return u * v


def power(ring: BottRing, u: CohomologyClass, k: int) -> CohomologyClass:
    if not ring.compatible(u.ring):
        raise RingMismatchError("class does not belong to the given ring")
    return u**k


def graded_rank(ring: BottRing, d: int) -> int:
    return ring.graded_rank(d)


def integrate(ring: BottRing, u: CohomologyClass):
    return ring.integrate(u)


# -- ring maps ----------------------------------------------------------------


@dataclass(frozen=True)
class RingMap:
    """A degree-2 matrix map y'_i -> sum_j matrix[i][j] y_j between rings.

    ``verified`` means every source relation maps to zero in the target, so
    the matrix induces a well-defined graded ring homomorphism.
    """

    source: BottRing
    target: BottRing
    matrix: tuple[tuple[int, ...], ...]
    verified: bool = False

    @property
    def determinant(self) -> int:
        return det_int([list(r) for r in self.matrix])

    @property
    def is_isomorphism(self) -> bool:
        return (
            self.verified
            and len(self.matrix) == self.source.height == self.target.height
            and sorted(self.source.dims) == sorted(self.target.dims)
            and abs(self.determinant) == 1
        )

    def __call__(self, u: CohomologyClass) -> CohomologyClass:
        return apply_map(self, u)

    def to_obj(self):
        return {
            "matrix": [list(r) for r in self.matrix],
            "det": self.determinant,
            "source_dims": list(self.source.dims),
            "target_dims": list(self.target.dims),
        }


@dataclass(frozen=True)
class IsoWitness:
    """A verified ring map whose degree-2 matrix is unimodular."""

    ring_map: RingMap

    def __post_init__(self):
        if not self.ring_map.verified:
            raise UnverifiedMapError("witness requires a verified map")
        if not self.ring_map.is_isomorphism:
            raise ValueError("witness matrix is not unimodular")

    @property
    def matrix(self):
        return self.ring_map.matrix

    @property
    def source(self):
        return self.ring_map.source

    @property
    def target(self):
        return self.ring_map.target

    def __call__(self, u: CohomologyClass) -> CohomologyClass:
        return apply_map(self.ring_map, u)

    def to_obj(self):
        return self.ring_map.to_obj()


def image_of_terms(target: BottRing, matrix, terms: dict) -> CohomologyClass:
    """Substitute y'_j -> sum_k matrix[j][k] y_k into a raw coefficient dict.

    Rows of ``matrix`` beyond the variables that actually occur in ``terms``
    are never read, which lets searches verify relations stage by stage.
    """
    images = {}
    powers = {}

    def img_power(j, k):
        key = (j, k)
        hit = powers.get(key)
        if hit is None:
            if j not in images:
                images[j] = target.linear_class(matrix[j])
            hit = images[j] ** k
            powers[key] = hit
        return hit

    out = target.zero()
    for e, c in terms.items():
        term = None
        for j, ej in enumerate(e):
            if ej:
                p = img_power(j, ej)
                term = p if term is None else term * p
        if term is None:
            term = target.one()
        out = out + term * target.domain.coerce(c)
    return out


def verify_map(source: BottRing, target: BottRing, matrix) -> RingMap | None:
    """Check that a degree-2 matrix sends every source relation to zero.

    Returns a verified RingMap, or None when some relation has a nonzero
    image (failure is a value, not an exception).  The map is flagged an
    isomorphism when additionally the matrix is square unimodular and the
    graded ranks agree.
    """
    if source.domain != target.domain:
        raise DomainMismatchError("rings must share a coefficient domain")
    matrix = tuple(tuple(int(v) for v in row) for row in matrix)
    if len(matrix) != source.height or any(
        len(r) != target.height for r in matrix
    ):
        raise ValueError(
            f"matrix must be {source.height} x {target.height} for these rings"
        )
    for i in range(1, source.height + 1):
        image = image_of_terms(target, matrix, source.relation_terms(i))
        if not image.is_zero():
            return None
    return RingMap(source, target, matrix, verified=True)


def apply_map(rm: RingMap, u: CohomologyClass) -> CohomologyClass:
    """Image of a class under a verified ring map."""
    if not rm.verified:
        raise UnverifiedMapError("refusing to apply an unverified map")
    if not rm.source.compatible(u.ring):
        raise RingMismatchError("class does not live in the map's source ring")
    return image_of_terms(rm.target, rm.matrix, u._c)
