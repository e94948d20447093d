"""Cochain-level operations: cup-i products, Steenrod squares, Bocksteins,
and coefficient changes, plus the induced matrices on cohomology.

Steenrod squares are served at the prime 2 only (there is no desk-scale
cochain formula for odd reduced powers; those live in the space catalog).
Bocksteins work at every prime via lift, coboundary, divide.
"""

from __future__ import annotations

from itertools import combinations

from .abelian import GroupHom
from .cohomology import Coefficients
from .errors import (BadIndex, IncompatibleCoefficients, LiftFailure,
                     MixedComplexes, WrongCoefficients)
from .matrices import IntMatrix


class Cochain:
    """A cochain: one coefficient per n-simplex, in lattice order."""

    __slots__ = ("complex", "degree", "coeffs", "values")

    def __init__(self, complex_, degree, coeffs, values):
        values = [int(x) for x in values]
        if len(values) != complex_.n_cells(degree):
            raise ValueError(
                f"expected {complex_.n_cells(degree)} values, got {len(values)}")
        if coeffs.is_mod():
            values = [x % coeffs.modulus for x in values]
        self.complex = complex_
        self.degree = degree
        self.coeffs = coeffs
        self.values = tuple(values)

    @classmethod
    def zero(cls, complex_, degree, coeffs):
        return cls(complex_, degree, coeffs, [0] * complex_.n_cells(degree))

    def value_on(self, simplex):
        return self.values[self.complex.simplex_index(simplex)]

    def __add__(self, other):
        if other.complex is not self.complex or other.degree != self.degree \
                or other.coeffs != self.coeffs:
            raise MixedComplexes("cochain addition mismatch")
        return Cochain(self.complex, self.degree, self.coeffs,
                       [a + b for a, b in zip(self.values, other.values)])

    def coboundary(self):
        k = self.complex
        if self.degree >= k.dim:
            return Cochain.zero(k, self.degree + 1, self.coeffs)
        mat = k.coboundary_matrix(self.degree)
        return Cochain(k, self.degree + 1, self.coeffs,
                       mat.apply(list(self.values)))

    def is_cocycle(self):
        d = self.coboundary()
        if self.coeffs.is_mod():
            return all(x % self.coeffs.modulus == 0 for x in d.values)
        return all(x == 0 for x in d.values)

    def __repr__(self):
        return (f"Cochain(deg={self.degree}, {self.coeffs}, "
                f"values={list(self.values)})")


def cup_i(u, v, i):
    """Steenrod's cup-i product of mod-2 cochains on ordered simplices.

    For an n-simplex with n = deg u + deg v - i, the i+1 cut positions
    0 <= a_0 < ... < a_i <= n slice the vertex list into overlapping
    intervals [0..a_0], [a_0..a_1], ..., [a_i..n]; u eats the even-numbered
    intervals and v the odd ones, and terms of the wrong cardinality drop.
    """
    if u.complex is not v.complex:
        raise MixedComplexes("cup-i of cochains on different complexes")
    if not (u.coeffs.is_mod(2) and v.coeffs.is_mod(2)):
        raise WrongCoefficients("cup-i products are mod-2 only")
    p, q = u.degree, v.degree
    if i < 0 or i > min(p, q):
        raise BadIndex(f"cup-{i} undefined for degrees {p}, {q}")
    k = u.complex
    n = p + q - i
    if n > k.dim:
        return Cochain.zero(k, n, u.coeffs)

    out = []
    for sigma in k.simplices[n]:
        total = 0
        for cuts in combinations(range(n + 1), i + 1):
            bounds = (0,) + cuts + (n,)
            u_pos, v_pos = [], []
            for piece in range(i + 2):
                # interval between consecutive cut points, endpoints shared
                start = bounds[piece] if piece else 0
                stop = bounds[piece + 1]
                target = u_pos if piece % 2 == 0 else v_pos
                target.extend(range(start, stop + 1))
            if len(u_pos) != p + 1 or len(v_pos) != q + 1:
                continue
            uf = tuple(sigma[t] for t in u_pos)
            vf = tuple(sigma[t] for t in v_pos)
            total += u.value_on(uf) * v.value_on(vf)
        out.append(total % 2)
    return Cochain(k, n, u.coeffs, out)


def cup_product(u, v):
    """Ordinary cup product (cup-0) of mod-2 cochains."""
    return cup_i(u, v, 0)


class CohClass:
    """A cohomology class: representative cocycle plus its coordinates."""

    __slots__ = ("cochain", "cohomology", "coords")

    def __init__(self, cochain, cohomology, coords=None):
        if not cochain.is_cocycle():
            raise ValueError("representative is not a cocycle")
        self.cochain = cochain
        self.cohomology = cohomology
        self.coords = (list(coords) if coords is not None
                       else cohomology.coords_of(list(cochain.values)))

    @property
    def degree(self):
        return self.cochain.degree

    @property
    def coeffs(self):
        return self.cochain.coeffs

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __repr__(self):
        return f"CohClass(deg={self.degree}, {self.coeffs}, coords={self.coords})"


def classify(complex_, cochain):
    """Wrap a cocycle as a CohClass against the complex's cohomology."""
    h = complex_.cohomology(cochain.degree, cochain.coeffs)
    return CohClass(cochain, h)


def steenrod_square(k, c):
    """Sq^k on a mod-2 class: [u] -> [u cup_{n-k} u] in degree n + k."""
    if not c.coeffs.is_mod(2):
        raise WrongCoefficients("Steenrod squares act on mod-2 classes")
    if k < 0:
        raise BadIndex("Sq^k needs k >= 0")
    n = c.degree
    kx = c.cochain.complex
    if k > n:
        return classify(kx, Cochain.zero(kx, n + k, c.coeffs))
    w = cup_i(c.cochain, c.cochain, n - k)
    return classify(kx, w)


def bockstein(r, c):
    """beta_r: H^n(X; Z/p^r) -> H^{n+1}(X; Z/p) by lift, delta, divide.

    The coefficient modulus of ``c`` must be p^r for a prime p.
    """
    if not c.coeffs.is_mod():
        raise WrongCoefficients("bockstein needs Z/p^r coefficients")
    p = _prime_root(c.coeffs.modulus, r)
    if p is None:
        raise WrongCoefficients(
            f"modulus {c.coeffs.modulus} is not a prime power p^{r}")
    kx = c.cochain.complex
    pr = p ** r
    lift = Cochain(kx, c.degree, Coefficients.integers(), list(c.cochain.values))
    delta = lift.coboundary()
    out = []
    for x in delta.values:
        if x % pr:
            raise LiftFailure("coboundary of lift not divisible by p^r")
        out.append((x // pr) % p)
    return classify(kx, Cochain(kx, c.degree + 1, Coefficients.mod(p), out))


def _prime_root(m, r):
    """p with p^r == m and p prime, else None."""
    if r < 1:
        return None
    p = round(m ** (1.0 / r))
    for cand in (p - 1, p, p + 1):
        if cand >= 2 and cand ** r == m:
            d = 2
            while d * d <= cand:
                if cand % d == 0:
                    return None
                d += 1
            return cand
    return None


def coefficient_change(c, kind, param):
    """Transport a class along a coefficient homomorphism.

    kind = "reduce":  Z, Z_(p) or Z/m' -> Z/param (param divides m')
    kind = "multiply": Z/m -> Z/(m*param), values scaled by param
    kind = "include": alias of reduce, for Z -> Z/m
    """
    kx = c.cochain.complex
    if kind in ("reduce", "include"):
        m = int(param)
        src = c.coeffs
        if src.is_mod() and src.modulus % m:
            raise IncompatibleCoefficients(
                f"no reduction Z/{src.modulus} -> Z/{m}")
        if src.kind == "local":
            q = m
            while q % src.prime == 0:
                q //= src.prime
            if q != 1:
                raise IncompatibleCoefficients(
                    f"no reduction Z_({src.prime}) -> Z/{m}")
        w = Cochain(kx, c.degree, Coefficients.mod(m), list(c.cochain.values))
        return classify(kx, w)
    if kind == "multiply":
        factor = int(param)
        if not c.coeffs.is_mod():
            raise IncompatibleCoefficients("multiply-by-p needs Z/m source")
        m = c.coeffs.modulus * factor
        w = Cochain(kx, c.degree, Coefficients.mod(m),
                    [factor * x for x in c.cochain.values])
        return classify(kx, w)
    raise IncompatibleCoefficients(f"unknown coefficient map {kind!r}")


def _reduce_values_mod2(rep, coeffs):
    if coeffs.is_mod() and coeffs.modulus % 2 == 0:
        return [x % 2 for x in rep]
    if coeffs.kind == "Z" or (coeffs.kind == "local" and coeffs.prime == 2):
        return [x % 2 for x in rep]
    raise IncompatibleCoefficients(f"no mod-2 reduction from {coeffs}")


def induced_matrix(complex_, n_src, src_coeffs, n_tgt, tgt_coeffs, transform):
    """GroupHom of the map sending each source generator through transform.

    ``transform`` maps a representative cocycle vector to a target cocycle
    vector.  Relation compatibility is checked, so a transform that is not
    well defined on classes is rejected.
    """
    src = complex_.cohomology(n_src, src_coeffs)
    tgt = complex_.cohomology(n_tgt, tgt_coeffs)
    cols = [tgt.coords_of(transform(rep)) for rep in src.reps]
    mat = (IntMatrix.from_columns(cols, rows=tgt.ngens)
           if cols else IntMatrix.zeros(tgt.ngens, 0))
    return GroupHom(src, tgt, mat)


def induced_steenrod_square(complex_, k, n, src_coeffs=None):
    """Sq^k (or Sq^k_G for G = Z, Z/2^r, Z_(2)): H^n(X;G) -> H^{n+k}(X;Z/2)."""
    src = src_coeffs if src_coeffs is not None else Coefficients.mod(2)
    mod2 = Coefficients.mod(2)

    def transform(rep):
        vals = _reduce_values_mod2(rep, src)
        u = Cochain(complex_, n, mod2, vals)
        if k > n:
            return [0] * complex_.n_cells(n + k)
        return list(cup_i(u, u, n - k).values)

    return induced_matrix(complex_, n, src, n + k, mod2, transform)


def induced_bockstein(complex_, r, p, n):
    """beta_r matrix: H^n(X;Z/p^r) -> H^{n+1}(X;Z/p) by integral lifting."""
    src = Coefficients.mod(p ** r)
    tgt = Coefficients.mod(p)
    pr = p ** r

    def transform(rep):
        lift = Cochain(complex_, n, Coefficients.integers(), list(rep))
        delta = lift.coboundary()
        out = []
        for x in delta.values:
            if x % pr:
                raise LiftFailure("coboundary of lift not divisible by p^r")
            out.append((x // pr) % p)
        return out

    return induced_matrix(complex_, n, src, n + 1, tgt, transform)


def induced_coefficient_map(complex_, n, src_coeffs, kind, param):
    """reduce / multiply / include as a matrix H^n(X;A) -> H^n(X;B)."""
    if kind in ("reduce", "include"):
        m = int(param)
        tgt = Coefficients.mod(m)
        transform = lambda rep: [x % m for x in rep]
    elif kind == "multiply":
        factor = int(param)
        if not src_coeffs.is_mod():
            raise IncompatibleCoefficients("multiply-by-p needs Z/m source")
        tgt = Coefficients.mod(src_coeffs.modulus * factor)
        transform = lambda rep: [factor * x for x in rep]
    else:
        raise IncompatibleCoefficients(f"unknown coefficient map {kind!r}")
    return induced_matrix(complex_, n, src_coeffs, n, tgt, transform)


def induced_operation_matrix(complex_, op, n):
    """Dispatch on an operation descriptor tuple.

    ("sq", k)                mod-2 Steenrod square
    ("sq", k, coeffs)        Sq^k_G, reduction followed by the square
    ("beta", r, p)           r-th Bockstein at the prime p
    ("reduce", m) / ("include", m) / ("multiply", factor, coeffs)
    ("p1G", coeffs)          the composite operation at p = 2 (= Sq^2_G)
    """
    tag = op[0]
    if tag == "sq":
        k = op[1]
        src = op[2] if len(op) > 2 else None
        return induced_steenrod_square(complex_, k, n, src)
    if tag == "beta":
        return induced_bockstein(complex_, op[1], op[2], n)
    if tag in ("reduce", "include"):
        src = op[2] if len(op) > 2 else Coefficients.integers()
        return induced_coefficient_map(complex_, n, src, "reduce", op[1])
    if tag == "multiply":
        return induced_coefficient_map(complex_, n, op[2], "multiply", op[1])
    if tag == "p1G":
        return induced_steenrod_square(complex_, 2, n, op[1])
    raise IncompatibleCoefficients(f"unknown operation {op!r}")


def pullback_matrix(big, small, vertex_map, n, coeffs):
    """f*: H^n(big) -> H^n(small) for an order-preserving simplicial injection.

    ``vertex_map[v]`` is the vertex of ``big`` that vertex v of ``small``
    maps to; the map must be strictly increasing for cup-i naturality.
    """
    pairs = sorted(vertex_map.items())
    values = [vertex_map[v] for v in sorted(vertex_map)]
    if any(b >= c for b, c in zip(values, values[1:])):
        raise ValueError("vertex map must be strictly increasing")

    src = big.cohomology(n, coeffs)
    tgt = small.cohomology(n, coeffs)

    def transform(rep):
        out = []
        for s in small.simplices.get(n, ()):
            image = tuple(vertex_map[v] for v in s)
            out.append(rep[big.simplex_index(image)])
        return out

    cols = [tgt.coords_of(transform(rep)) for rep in src.reps]
    mat = (IntMatrix.from_columns(cols, rows=tgt.ngens)
           if cols else IntMatrix.zeros(tgt.ngens, 0))
    return GroupHom(src, tgt, mat)
