"""Minkowski norms and orthogonality predicates.

A norm is specified in one of three ways: the Euclidean norm, an l_p norm
with exponent p >= 1 (including infinity), or a polyhedral norm given by the
vertices of a centrally symmetric unit-ball polytope.  Polyhedral norms are
evaluated through the Minkowski functional of the polytope: the facet
inequalities are enumerated once at construction time and the norm is the
maximum of the facet functionals.

On top of plain evaluation, this module decides the two classical
orthogonality relations of normed spaces (isosceles and Birkhoff) and
normality of a vector to a hyperplane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import ConvexHull

__all__ = [
    "Tolerances",
    "Norm",
    "is_isosceles_orthogonal",
    "is_birkhoff_orthogonal",
    "is_normal_to_hyperplane",
]


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances shared by the geometric predicates and solvers.

    eps_geom is the incidence/equality tolerance, eps_opt the convergence
    tolerance of inner 1-d searches, max_iters caps iterative solvers.
    """

    eps_geom: float = 1e-9
    eps_opt: float = 1e-12
    max_iters: int = 400

    def __post_init__(self):
        if not (self.eps_geom > 0 and self.eps_opt > 0 and self.max_iters > 0):
            raise ValueError("tolerances must be strictly positive")
        if self.eps_opt > self.eps_geom:
            raise ValueError("eps_opt must not exceed eps_geom")


DEFAULT_TOL = Tolerances()


class Norm:
    """A norm on R^d: Euclidean, l_p, or polyhedral (unit-ball vertices).

    Instances are immutable and callable: ``norm(v)`` evaluates the norm of
    ``v``, vectorized over the leading axes of an ``(..., d)`` array.
    """

    def __init__(self, kind, p=None, vertices=None):
        if kind not in ("euclidean", "lp", "polyhedral"):
            raise ValueError(f"unknown norm kind: {kind!r}")
        self.kind = kind
        self.p = None
        self.dim = None  # fixed only for polyhedral norms
        self._facets = None
        if kind == "lp":
            p = float(p)
            if not p >= 1:
                raise ValueError("lp exponent must be >= 1")
            self.p = p
        elif kind == "polyhedral":
            self._init_polyhedral(vertices)

    # -- constructors ------------------------------------------------------

    @classmethod
    def euclidean(cls):
        return cls("euclidean")

    @classmethod
    def lp(cls, p):
        return cls("lp", p=p)

    @classmethod
    def polyhedral(cls, vertices):
        return cls("polyhedral", vertices=vertices)

    def _init_polyhedral(self, vertices):
        V = np.asarray(vertices, dtype=float)
        if V.ndim != 2 or V.shape[1] < 2:
            raise ValueError("polyhedral unit ball needs an (m, d) vertex array, d >= 2")
        d = V.shape[1]
        if d > 4:
            raise ValueError("polyhedral norms are supported for d <= 4")
        scale = np.abs(V).max()
        # central symmetry: every vertex must have its antipode in the set
        for v in V:
            if np.min(np.linalg.norm(V + v, axis=1)) > 1e-9 * max(1.0, scale):
                raise ValueError("unit-ball vertex set is not centrally symmetric")
        try:
            hull = ConvexHull(V)
        except Exception as exc:
            raise ValueError(f"degenerate unit-ball polytope: {exc}") from None
        # hull facets: a.x + b <= 0; origin strictly interior iff all b < 0
        A = hull.equations[:, :-1]
        b = hull.equations[:, -1]
        if np.any(b >= -1e-12 * max(1.0, scale)):
            raise ValueError("origin is not strictly interior to the unit ball")
        self.dim = d
        self.unit_ball_vertices = V
        # Minkowski functional: gamma(x) = max_f (a_f . x) / (-b_f)
        self._facets = A / (-b)[:, None]

    # -- evaluation --------------------------------------------------------

    def __call__(self, v):
        v = np.asarray(v, dtype=float)
        if self.dim is not None and v.shape[-1] != self.dim:
            raise ValueError(f"vector dimension {v.shape[-1]} != norm dimension {self.dim}")
        if v.shape[-1] < 1:
            raise ValueError("empty vector")
        if self.kind == "euclidean":
            return np.linalg.norm(v, axis=-1)
        if self.kind == "lp":
            if math.isinf(self.p):
                return np.max(np.abs(v), axis=-1)
            return np.sum(np.abs(v) ** self.p, axis=-1) ** (1.0 / self.p)
        return np.maximum(np.max(v @ self._facets.T, axis=-1), 0.0)

    @property
    def smooth(self):
        """True when the unit sphere has a unique supporting line everywhere.

        Guarantees existence of circumcenters for every simplex.
        """
        if self.kind == "euclidean":
            return True
        return self.kind == "lp" and 1.0 < self.p < math.inf

    # -- (de)serialization -------------------------------------------------

    def to_json(self):
        if self.kind == "euclidean":
            return {"kind": "euclidean"}
        if self.kind == "lp":
            return {"kind": "lp", "p": "inf" if math.isinf(self.p) else self.p}
        return {"kind": "polyhedral", "vertices": self.unit_ball_vertices.tolist()}

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "kind" not in obj:
            raise ValueError("norm record must be an object with a 'kind' field")
        kind = obj["kind"]
        if kind == "euclidean":
            extra = set(obj) - {"kind"}
        elif kind == "lp":
            extra = set(obj) - {"kind", "p"}
        elif kind == "polyhedral":
            extra = set(obj) - {"kind", "vertices"}
        else:
            raise ValueError(f"unknown norm kind: {kind!r}")
        if extra:
            raise ValueError(f"unknown fields in norm record: {sorted(extra)}")
        if kind == "euclidean":
            return cls.euclidean()
        if kind == "lp":
            p = obj.get("p")
            if p in ("inf", "infinity"):
                p = math.inf
            return cls.lp(p)
        return cls.polyhedral(obj.get("vertices"))

    def __repr__(self):
        if self.kind == "lp":
            return f"Norm.lp({self.p})"
        if self.kind == "polyhedral":
            return f"Norm.polyhedral(<{len(self.unit_ball_vertices)} vertices, d={self.dim}>)"
        return "Norm.euclidean()"


def _check_pair(spec, x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("x and y must be vectors of the same dimension")
    return x, y


def is_isosceles_orthogonal(spec, x, y, tol=DEFAULT_TOL):
    """x is isosceles orthogonal to y: the two diagonals x+y, x-y have equal length."""
    x, y = _check_pair(spec, x, y)
    scale = max(1.0, spec(x), spec(y))
    return abs(spec(x + y) - spec(x - y)) <= tol.eps_geom * scale


def _golden_min(f, lo, hi, eps):
    """Golden-section minimum of a unimodal f on [lo, hi]."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > eps:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return min(fc, fd)


def is_birkhoff_orthogonal(spec, x, y, tol=DEFAULT_TOL):
    """x is Birkhoff orthogonal to y: ||x|| <= ||x + a*y|| for every scalar a.

    The map a -> ||x + a*y|| is convex, and outside |a| <= 2||x||/||y|| the
    triangle inequality already forces ||x + a*y|| >= ||x||, so a golden-section
    search on that bracket decides the predicate.
    """
    x, y = _check_pair(spec, x, y)
    ny = spec(y)
    if ny == 0.0:
        raise ValueError("y must be nonzero")
    nx = spec(x)
    if nx == 0.0:
        return True
    bracket = 2.0 * nx / ny
    fmin = _golden_min(lambda a: spec(x + a * y), -bracket, bracket,
                       tol.eps_opt * max(1.0, bracket))
    return fmin >= nx - tol.eps_geom * max(1.0, nx)


def _probe_directions(basis, rng_seed=0):
    """Finite probing set spanning a hyperplane: basis vectors, pairwise
    sums/differences, and random unit combinations (guards polyhedral kinks)."""
    W = [w for w in basis]
    k = len(basis)
    for i in range(k):
        for j in range(i + 1, k):
            W.append(basis[i] + basis[j])
            W.append(basis[i] - basis[j])
    rng = np.random.default_rng(rng_seed)
    B = np.asarray(basis, dtype=float)
    for _ in range(2 * k):
        c = rng.normal(size=k)
        w = c @ B
        n = np.linalg.norm(w)
        if n > 1e-12:
            W.append(w / n)
    return W


def is_normal_to_hyperplane(spec, v, hyperplane_basis, tol=DEFAULT_TOL):
    """Is v normal to the hyperplane spanned by the given d-1 directions?

    Normality means v is Birkhoff orthogonal to every direction parallel to
    the hyperplane; this is decided on a finite probing set, which is exact
    for Euclidean and smooth l_p norms and a documented approximation for
    polyhedral ones.
    """
    v = np.asarray(v, dtype=float)
    d = v.shape[0]
    basis = [np.asarray(w, dtype=float) for w in hyperplane_basis]
    if len(basis) != d - 1:
        raise ValueError(f"expected {d - 1} spanning vectors, got {len(basis)}")
    B = np.asarray(basis)
    if np.linalg.matrix_rank(B, tol=1e-12 * max(1.0, np.abs(B).max())) < d - 1:
        raise ValueError("hyperplane basis is degenerate")
    aug = np.vstack([B, v])
    if np.linalg.matrix_rank(aug, tol=1e-12 * max(1.0, np.abs(aug).max())) < d:
        raise ValueError("v lies in the span of the hyperplane basis")
    return all(is_birkhoff_orthogonal(spec, v, w, tol) for w in _probe_directions(basis))
