"""Randomized verification suites behind the `verify` CLI command.

Each suite runs a batch of random instances and aggregates, per claim, the
number of failures and the worst residual.  Residuals are scaled by the
instance diameter (simplices) or circumradius (polygons), so a claim passes
at a uniform relative threshold.
"""

from __future__ import annotations

import math

import numpy as np

from .centers import complementary_point, full_report, m_hyperplanes, monge_lines, monge_point
from .circumcenter import is_circumcenter, solve_circumcenter
from .norms import Norm, Tolerances, is_birkhoff_orthogonal, is_isosceles_orthogonal
from .polygon import sample_cyclic_polygon, verify_polygon_theorems
from .simplex import Simplex, euclid_orthocenter

__all__ = [
    "parse_norm_name",
    "random_simplex",
    "regular_simplex",
    "random_orthocentric_simplex",
    "random_polyhedral_norm",
    "ClaimStats",
    "suite_orthogonality",
    "suite_simplex",
    "suite_polygon",
    "run_suites",
]

REL_TOL = 1e-8  # relative residual threshold shared by all randomized claims


def parse_norm_name(name, d=2, rng=None):
    """Norm from a CLI-style name: euclidean, l<p>, linf, polyhedral."""
    name = name.strip().lower()
    if name == "euclidean":
        return Norm.euclidean()
    if name in ("linf", "linfinity"):
        return Norm.lp(math.inf)
    if name.startswith("l"):
        return Norm.lp(float(name[1:]))
    if name == "polyhedral":
        return random_polyhedral_norm(d, rng)
    raise ValueError(f"unknown norm name: {name!r}")


def random_polyhedral_norm(d, rng=None, n_vertices=None):
    """Centrally symmetric random polytope norm (d <= 3)."""
    rng = np.random.default_rng(rng)
    if n_vertices is None:
        n_vertices = 4 * d
    P = rng.normal(size=(n_vertices, d))
    P /= np.linalg.norm(P, axis=1, keepdims=True)
    return Norm.polyhedral(np.vstack([P, -P]))


def random_simplex(d, rng, spread=1.0):
    rng = np.random.default_rng(rng)
    while True:
        V = rng.normal(size=(d + 1, d)) * spread
        try:
            return Simplex(V)
        except ValueError:
            continue


def regular_simplex(d, rng=None, scale=1.0):
    """Regular d-simplex: random rotation/translation of the standard-basis
    simplex in the sum-one hyperplane of R^(d+1), mapped down to R^d."""
    rng = np.random.default_rng(rng)
    E = np.eye(d + 1) - 1.0 / (d + 1)  # centered vertices, rank d
    B = np.linalg.svd(E, full_matrices=False)[2][:d]  # orthonormal basis rows
    V = E @ B.T  # (d+1, d), pairwise equidistant
    Q, _ = np.linalg.qr(rng.normal(size=(d, d)))
    return Simplex(scale * V @ Q.T + rng.normal(size=d))


def random_orthocentric_simplex(rng, d=3):
    """Corner-orthogonal recipe: mutually orthogonal legs from one vertex,
    randomly rotated and translated."""
    rng = np.random.default_rng(rng)
    Q, _ = np.linalg.qr(rng.normal(size=(d, d)))
    lengths = rng.uniform(0.5, 2.0, size=d)
    t = rng.normal(size=d)
    V = np.vstack([np.zeros(d), lengths[:, None] * Q.T]) + t
    return Simplex(V)


class ClaimStats:
    """Failure count and worst residual for one claim."""

    def __init__(self):
        self.trials = 0
        self.failures = 0
        self.max_residual = 0.0

    def add(self, residual, threshold):
        self.trials += 1
        self.max_residual = max(self.max_residual, residual)
        if residual > threshold:
            self.failures += 1

    def add_bool(self, ok):
        self.trials += 1
        if not ok:
            self.failures += 1

    @property
    def passed(self):
        return self.trials > 0 and self.failures == 0

    def __repr__(self):
        return f"ClaimStats(trials={self.trials}, failures={self.failures}, max_residual={self.max_residual:.3g})"


def _line_distance(line, p):
    w = np.asarray(p) - line.base
    u = line.direction / np.linalg.norm(line.direction)
    return float(np.linalg.norm(w - (w @ u) * u))


def _plane_distance(h, p):
    return float(abs((np.asarray(p) - h.base) @ h.normal()))


def _norm_cycle(names, dims, seed):
    """Instance generator: cycles through (dim, norm) combinations."""
    rng = np.random.default_rng(seed)

    def gen(i):
        d = dims[i % len(dims)]
        name = names[(i // len(dims)) % len(names)]
        if name == "polyhedral" and d > 3:
            d = 3
        norm = parse_norm_name(name, d, rng)
        return d, norm

    return gen, rng


def suite_orthogonality(trials, seed=0, tol=None, dims=(2, 3, 4)):
    tol = tol or Tolerances()
    rng = np.random.default_rng(seed)
    stats = {k: ClaimStats() for k in
             ("norm_axioms", "lp2_matches_euclidean", "polyhedral_crosscheck",
              "isosceles_symmetry", "birkhoff_homogeneity", "euclidean_dot_agreement")}
    eucl = Norm.euclidean()
    cross = Norm.polyhedral([[1, 0], [-1, 0], [0, 1], [0, -1]])
    cube = Norm.polyhedral([[1, 1], [1, -1], [-1, 1], [-1, -1]])
    l1, linf, l2 = Norm.lp(1), Norm.lp(math.inf), Norm.lp(2)
    norms = [eucl, l1, linf, Norm.lp(1.5), Norm.lp(3), cross, cube]
    for _ in range(trials):
        d = int(rng.choice(dims))
        x = rng.normal(size=d)
        y = rng.normal(size=d)
        lam = rng.uniform(0.1, 3.0)
        for norm in norms:
            if norm.dim is not None and norm.dim != d:
                continue
            nx, ny, nxy = norm(x), norm(y), norm(x + y)
            axioms = max(0.0 if nx > 0 else 1.0,
                         abs(norm(lam * x) - lam * nx) / max(1.0, nx),
                         max(0.0, nxy - nx - ny) / max(1.0, nx + ny))
            stats["norm_axioms"].add(axioms, 1e-12 if norm.kind != "polyhedral" else tol.eps_geom)
        stats["lp2_matches_euclidean"].add(abs(l2(x) - eucl(x)) / max(1.0, eucl(x)), 1e-12)
        if d == 2:
            stats["polyhedral_crosscheck"].add(
                max(abs(cross(x) - l1(x)), abs(cube(x) - linf(x))) / max(1.0, l1(x)),
                tol.eps_geom)
            stats["isosceles_symmetry"].add_bool(
                is_isosceles_orthogonal(l1, x, y, tol) == is_isosceles_orthogonal(l1, y, x, tol))
            mu = rng.uniform(0.1, 3.0) * rng.choice([-1.0, 1.0])
            stats["birkhoff_homogeneity"].add_bool(
                is_birkhoff_orthogonal(linf, x, y, tol)
                == is_birkhoff_orthogonal(linf, lam * x, mu * y, tol))
        dot_zero = abs(x @ y) <= tol.eps_geom * max(1.0, eucl(x) * eucl(y))
        stats["euclidean_dot_agreement"].add_bool(
            is_birkhoff_orthogonal(eucl, x, y, tol) == dot_zero
            and is_isosceles_orthogonal(eucl, x, y, tol) == dot_zero)
    return stats


def suite_simplex(trials, dims=(2, 3, 4, 5), norms=("euclidean", "l1.5", "l3", "linf", "polyhedral"),
                  seed=0, tol=None):
    tol = tol or Tolerances()
    gen, rng = _norm_cycle(list(norms), list(dims), seed)
    stats = {k: ClaimStats() for k in
             ("circumcenter_selfconsistent", "smooth_solver_success", "monge_concurrency",
              "m_hyperplane_incidence", "m_hyperplane_count", "euler_ratios",
              "feuerbach_incidence", "euler_collinear", "affine_invariance",
              "orthocenter_crosscheck")}
    for i in range(trials):
        d, norm = gen(i)
        T = random_simplex(d, rng)
        scale = T.diameter
        res = solve_circumcenter(norm, T, tol)
        if norm.smooth:
            stats["smooth_solver_success"].add_bool(res.found)
        if not res.found:
            continue
        M = res.center
        stats["circumcenter_selfconsistent"].add_bool(
            is_circumcenter(norm, T, M, tol) is not None)
        N = monge_point(T, M)
        lines = monge_lines(T, M, tol)
        stats["monge_concurrency"].add(
            max(_line_distance(l, N) for l in lines) / scale, REL_TOL)
        planes = m_hyperplanes(T, M, tol)
        stats["m_hyperplane_count"].add_bool(len(planes) >= d)
        stats["m_hyperplane_incidence"].add(
            max(_plane_distance(h, N) for h in planes) / scale, REL_TOL)
        rep = full_report(norm, T, M, tol)
        if not rep.collapsed:
            worst = max(v for v in rep.ratio_residuals.values() if not isinstance(v, str))
            stats["euler_ratios"].add(worst, 1e-10)
            coll = max(_line_distance(rep.euler_line, p)
                       for p in (rep.G, rep.F_M, rep.N_M, rep.P_M)) / scale
            stats["euler_collinear"].add(coll, REL_TOL)
        stats["feuerbach_incidence"].add(
            max(abs(norm(np.asarray(p) - rep.F_M) - rep.feuerbach_radius)
                for p in rep.facet_centroids + rep.division_points) / max(rep.R, 1e-12),
            REL_TOL)
        # affine invariance of the two affine constructions
        A = rng.normal(size=(d, d)) + np.eye(d) * 2
        b = rng.normal(size=d)
        phiT = Simplex(T.vertices @ A.T + b)
        phiM = A @ M + b
        inv = max(np.linalg.norm(monge_point(phiT, phiM) - (A @ N + b)),
                  np.linalg.norm(complementary_point(phiT, phiM)
                                 - (A @ complementary_point(T, M) + b)))
        stats["affine_invariance"].add(inv / scale, REL_TOL)
    # orthocentric Euclidean cross-check, independent of the cycled norms
    eucl = Norm.euclidean()
    for _ in range(max(trials // 5, 10)):
        T = random_orthocentric_simplex(rng)
        H = euclid_orthocenter(T, tol)
        if H is None:
            stats["orthocenter_crosscheck"].add_bool(False)
            continue
        M = solve_circumcenter(eucl, T, tol).center
        stats["orthocenter_crosscheck"].add(
            np.linalg.norm(monge_point(T, M) - H) / T.diameter, REL_TOL)
    return stats


def suite_polygon(trials, degrees=(3, 4, 5, 6, 7, 8),
                  norms=("euclidean", "l1", "linf", "l3"), seed=0, tol=None):
    tol = tol or Tolerances()
    rng = np.random.default_rng(seed)
    names = list(norms)
    stats = {}
    for i in range(trials):
        d = degrees[i % len(degrees)]
        norm = parse_norm_name(names[(i // len(degrees)) % len(names)], 2, rng)
        M = rng.normal(size=2)
        R = rng.uniform(0.5, 2.0)
        P = sample_cyclic_polygon(norm, M, R, d + 1, rng)
        for claim, (ok, residual) in verify_polygon_theorems(P, tol).items():
            stats.setdefault(claim, ClaimStats()).add(residual / R, REL_TOL)
    return stats


def run_suites(which, trials, dims=None, norms=None, seed=0, tol=None):
    """Run the named suite ('simplex', 'polygon', 'orthogonality', or 'all')."""
    if trials <= 0:
        raise ValueError("empty suite")
    out = {}
    if which in ("orthogonality", "all"):
        out["orthogonality"] = suite_orthogonality(trials, seed=seed, tol=tol)
    if which in ("simplex", "all"):
        kw = {}
        if dims:
            kw["dims"] = dims
        if norms:
            kw["norms"] = norms
        out["simplex"] = suite_simplex(trials, seed=seed, tol=tol, **kw)
    if which in ("polygon", "all"):
        kw = {"degrees": dims} if dims else {}
        if norms:
            kw["norms"] = norms
        out["polygon"] = suite_polygon(trials, seed=seed, tol=tol, **kw)
    if not out:
        raise ValueError(f"unknown suite: {which!r}")
    return out
