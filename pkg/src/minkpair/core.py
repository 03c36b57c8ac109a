"""Exact scalars, primitive directions, cone types and sign predicates.

Everything downstream computes with `fractions.Fraction` coordinates and
integer direction vectors; no floating point enters any decision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations


class GeometryError(ValueError):
    """Invalid geometric input (degenerate direction, non-pointed cone, ...)."""


class ConeMismatchError(GeometryError):
    """Operands do not share the required recession cone."""


# ---------------------------------------------------------------------------
# rationals

def parse_rational(text):
    """Parse "num/den" or "num" (den omitted when 1) into a Fraction."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise GeometryError(f"bad rational {text!r}") from exc


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# vectors: plain tuples, Fraction or int entries

def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def vscale(t, a):
    return tuple(t * x for x in a)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def rot90(u):
    """Counterclockwise quarter turn: (x, y) -> (-y, x)."""
    return (-u[1], u[0])


def is_zero(v) -> bool:
    return all(x == 0 for x in v)


def normalize_direction(v):
    """Primitive integer vector on the ray of v; sign preserved.

    Accepts integer or rational entries of any magnitude.
    """
    if is_zero(v):
        raise GeometryError("degenerate direction")
    fr = [Fraction(x) for x in v]
    den = math.lcm(*(f.denominator for f in fr))
    ints = [int(f * den) for f in fr]
    g = math.gcd(*(abs(n) for n in ints))
    return tuple(n // g for n in ints)


def ccw_compare(u, v, start):
    """Total counterclockwise order on primitive 2D directions from `start`.

    Returns -1 if u precedes v, 0 iff u == v, +1 if v precedes u.  Only sign
    tests on cross and dot products are used.
    """
    if u == v:
        return 0

    def rank(d):
        c = cross2(start, d)
        if c == 0:
            return 0 if dot(start, d) > 0 else 2
        return 1 if c > 0 else 3

    ru, rv = rank(u), rank(v)
    if ru != rv:
        return -1 if ru < rv else 1
    # same open half-turn: direct cross test settles it
    return -1 if cross2(u, v) > 0 else 1


# ---------------------------------------------------------------------------
# linear feasibility (exact Fourier-Motzkin, dimension <= small)

def _normalize_constraint(coeffs, strict, const):
    """Scale by a positive rational so entries are coprime integers."""
    vals = [Fraction(c) for c in coeffs] + [Fraction(const)]
    den = math.lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g = math.gcd(*(abs(n) for n in ints))
    if g > 1:
        ints = [n // g for n in ints]
    return tuple(ints[:-1]), strict, ints[-1]


def linear_feasible(constraints, nvars) -> bool:
    """Decide whether a system of linear constraints has a real solution.

    Each constraint is (coeffs, rel, const) meaning <coeffs, x> rel const
    with rel one of '<', '<=', '='.  Exact variable elimination; intended
    for the small systems (a handful of variables) this library produces.
    """
    work = []
    for coeffs, rel, const in constraints:
        coeffs = tuple(Fraction(c) for c in coeffs)
        const = Fraction(const)
        if rel == "=":
            work.append((coeffs, False, const))
            work.append((vneg(coeffs), False, -const))
        elif rel == "<=":
            work.append((coeffs, False, const))
        elif rel == "<":
            work.append((coeffs, True, const))
        else:
            raise GeometryError(f"unknown relation {rel!r}")

    def tighten(rows):
        best = {}
        out = []
        for coeffs, strict, const in rows:
            if all(c == 0 for c in coeffs):
                if const < 0 or (strict and const == 0):
                    return None
                continue
            key_coeffs, s, c = _normalize_constraint(coeffs, strict, const)
            old = best.get(key_coeffs)
            # smaller bound wins; at equal bound strict wins
            if old is None or (c, not s) < (old[0], not old[1]):
                best[key_coeffs] = (c, s)
        for coeffs, (c, s) in best.items():
            out.append((coeffs, s, Fraction(c)))
        return out

    work = tighten(work)
    if work is None:
        return False
    for var in range(nvars - 1, -1, -1):
        uppers, lowers, rest = [], [], []
        for coeffs, strict, const in work:
            a = coeffs[var]
            if a > 0:
                uppers.append((coeffs, strict, const))
            elif a < 0:
                lowers.append((coeffs, strict, const))
            else:
                rest.append((coeffs, strict, const))
        new = list(rest)
        for cu, su, ku in uppers:
            au = cu[var]
            for cl, sl, kl in lowers:
                al = -cl[var]
                coeffs = tuple(al * x + au * y for x, y in zip(cu, cl))
                new.append((coeffs, su or sl, al * ku + au * kl))
        work = tighten(new)
        if work is None:
            return False
    return True


def cone_strictly_feasible(constraints) -> bool:
    """True iff a NONZERO point satisfies all homogeneous constraints.

    `constraints` is a list of (vector, rel) with rel in {'<', '<='},
    meaning <vector, x> rel 0.  Decided exactly by eliminating variables;
    the nonzero requirement is handled by branching on the sign of each
    coordinate.
    """
    base = [(vec, rel, 0) for vec, rel in constraints]
    if not base:
        return True
    n = len(base[0][0])
    for i in range(n):
        for sign in (1, -1):
            axis = tuple(-sign if j == i else 0 for j in range(n))
            if linear_feasible(base + [(axis, "<", 0)], n):
                return True
    return False


# ---------------------------------------------------------------------------
# planar cones

@dataclass(frozen=True)
class Cone2:
    """Pointed planar recession cone: trivial, a ray, or a wedge.

    Wedge generators are stored in counterclockwise order
    (cross(gens[0], gens[1]) > 0); half-planes and lines are rejected.
    """

    gens: tuple

    def __post_init__(self):
        for g in self.gens:
            if normalize_direction(g) != tuple(g):
                raise GeometryError("cone generators must be primitive")
        if len(self.gens) == 2 and cross2(self.gens[0], self.gens[1]) <= 0:
            raise GeometryError("wedge generators must be independent and CCW")
        if len(self.gens) > 2:
            raise GeometryError("a pointed planar cone has at most 2 generators")

    @staticmethod
    def from_generators(raw):
        """Canonicalize arbitrary generating rays; rejects non-pointed cones."""
        dirs = []
        for g in raw:
            d = normalize_direction(g)
            if d not in dirs:
                dirs.append(d)
        if not dirs:
            return Cone2(())
        if len(dirs) == 1:
            return Cone2((dirs[0],))
        for a, b in combinations(dirs, 2):
            if cross2(a, b) == 0:
                raise GeometryError("cone contains a line (not pointed)")
        # extreme pair: every other generator inside the CCW wedge (a, b)
        for a, b in ((x, y) for x in dirs for y in dirs if x != y):
            if cross2(a, b) <= 0:
                continue
            if all(cross2(a, d) >= 0 and cross2(d, b) >= 0 for d in dirs):
                return Cone2((a, b))
        raise GeometryError("generators do not span a pointed cone")

    @property
    def kind(self) -> str:
        return ("trivial", "ray", "wedge")[len(self.gens)]

    @property
    def is_trivial(self) -> bool:
        return not self.gens

    def u0(self):
        """Reference direction: an exact interior polar direction.

        Trivial cone: (1, 0).  Ray g: -g.  Wedge: -(g1+g2) when that lies in
        the open polar (true for symmetric wedges), else the always-interior
        positive combination of the two polar boundary rays.
        """
        if self.is_trivial:
            return (1, 0)
        if len(self.gens) == 1:
            return vneg(self.gens[0])
        a, b = self.gens
        cand = vneg(vadd(a, b))
        if not is_zero(cand):
            cand = normalize_direction(cand)
            if self.polar_interior_contains(cand):
                return cand
        return normalize_direction(rot90(vsub(b, a)))

    def arc_start(self):
        """First boundary ray of the polar, going counterclockwise."""
        if self.is_trivial:
            return (1, 0)
        if len(self.gens) == 1:
            return rot90(self.gens[0])
        return rot90(self.gens[1])

    def polar_boundary_rays(self):
        """(start, end) rays of the closed polar arc, CCW order."""
        if self.is_trivial:
            raise GeometryError("trivial cone has a full polar")
        if len(self.gens) == 1:
            g = self.gens[0]
            return rot90(g), vneg(rot90(g))
        a, b = self.gens
        return rot90(b), vneg(rot90(a))

    def polar_contains(self, u) -> bool:
        return all(dot(u, g) <= 0 for g in self.gens)

    def polar_interior_contains(self, u) -> bool:
        """Membership in int V° (all of R^2 minus 0 when trivial)."""
        if self.is_trivial:
            return not is_zero(u)
        return all(dot(u, g) < 0 for g in self.gens)

    def contains_vector(self, v) -> bool:
        """Exact membership of a vector in the cone itself."""
        if is_zero(v):
            return True
        if self.is_trivial:
            return False
        if len(self.gens) == 1:
            g = self.gens[0]
            return cross2(g, v) == 0 and dot(g, v) > 0
        a, b = self.gens
        return cross2(a, v) >= 0 and cross2(v, b) >= 0


def in_polar_interior(u, cone) -> bool:
    """True iff u lies in the interior of the polar of `cone`."""
    return cone.polar_interior_contains(u)


# ---------------------------------------------------------------------------
# spatial cones

@dataclass(frozen=True)
class Cone3:
    """Pointed cone in R^3 given by a minimal set of primitive generators.

    An empty generator tuple encodes the trivial cone {0}.
    """

    gens: tuple

    def __post_init__(self):
        if self.gens and not cone_strictly_feasible([(g, "<") for g in self.gens]):
            raise GeometryError("cone is not pointed")

    @staticmethod
    def from_generators(raw):
        dirs = []
        for g in raw:
            d = normalize_direction(g)
            if d not in dirs:
                dirs.append(d)
        if dirs and not cone_strictly_feasible([(g, "<") for g in dirs]):
            raise GeometryError("cone is not pointed")
        kept = []
        for i, g in enumerate(dirs):
            others = dirs[:i] + dirs[i + 1 :]
            if not others or not _in_cone_span(g, others):
                kept.append(g)
        return Cone3(tuple(sorted(kept)))

    @property
    def is_trivial(self) -> bool:
        return not self.gens

    def polar_contains(self, u) -> bool:
        return all(dot(u, g) <= 0 for g in self.gens)

    def polar_interior_contains(self, u) -> bool:
        if self.is_trivial:
            return not is_zero(u)
        return all(dot(u, g) < 0 for g in self.gens)

    def contains_vector(self, v) -> bool:
        if is_zero(v):
            return True
        if self.is_trivial:
            return False
        return _in_cone_span(v, list(self.gens))


def _in_cone_span(v, gens) -> bool:
    """v = sum(lam_i * g_i) with lam_i >= 0, decided exactly."""
    k = len(gens)
    cons = []
    for row in range(3):
        coeffs = tuple(g[row] for g in gens)
        cons.append((coeffs, "=", v[row]))
    for j in range(k):
        axis = tuple(-1 if i == j else 0 for i in range(k))
        cons.append((axis, "<=", 0))
    return linear_feasible(cons, k)


def in_polar_interior3(u, cone: Cone3) -> bool:
    return cone.polar_interior_contains(u)
