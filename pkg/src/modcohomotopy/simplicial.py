"""Finite simplicial complexes: parsing, face lattice, coboundary matrices.

Simplices are stored with strictly increasing vertex order; the global
integer order on vertices is part of the file-format contract because the
cup-i formulas depend on it.  Cohomology is reduced: for a connected complex
it agrees with the unreduced groups in every degree >= 1, and degree-0
queries are rejected.
"""

from __future__ import annotations

import json
from itertools import combinations

from .cohomology import Coefficients, CochainCohomology, cohomology_from_pair
from .errors import DegreeOutOfRange, NotConnected, ParseError
from .matrices import IntMatrix


class SimplicialComplex:
    """Closed face lattice of a facet list.

    >>> k = SimplicialComplex([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    >>> k.f_vector()
    [4, 6, 4]
    """

    def __init__(self, facets, name=None, require_connected=True):
        facets = [tuple(sorted(set(int(v) for v in f))) for f in facets]
        facets = [f for f in facets if f]
        vertices = sorted({v for f in facets for v in f})
        if any(v < 0 for v in vertices):
            raise ParseError("vertices must be nonnegative integers")
        # relabel to 0..V-1 preserving order, so the ordering contract holds
        relabel = {v: i for i, v in enumerate(vertices)}
        facets = [tuple(relabel[v] for v in f) for f in facets]

        self.name = name
        self.vertex_count = len(vertices)
        by_dim = {}
        for f in facets:
            for k in range(1, len(f) + 1):
                for face in combinations(f, k):
                    by_dim.setdefault(k - 1, set()).add(face)
        self.dim = max(by_dim) if by_dim else -1
        self.simplices = {d: sorted(by_dim[d]) for d in by_dim}
        self._index = {d: {s: i for i, s in enumerate(self.simplices[d])}
                       for d in by_dim}
        self.facets = sorted({f for f in facets
                              if not any(set(f) < set(g) for g in facets)})
        self._coh_cache = {}
        if require_connected and not self._connected():
            raise NotConnected("complex is not connected")

    def _connected(self):
        if self.vertex_count <= 1:
            return True
        parent = list(range(self.vertex_count))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for f in self.facets:
            for a, b in zip(f, f[1:]):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        return len({find(v) for v in range(self.vertex_count)}) == 1

    def n_cells(self, d):
        return len(self.simplices.get(d, ()))

    def simplex_index(self, simplex):
        d = len(simplex) - 1
        return self._index[d][tuple(simplex)]

    def has_simplex(self, simplex):
        d = len(simplex) - 1
        return tuple(simplex) in self._index.get(d, {})

    def f_vector(self):
        return [self.n_cells(d) for d in range(self.dim + 1)]

    def euler_characteristic(self):
        return sum((-1) ** d * self.n_cells(d) for d in range(self.dim + 1))

    def coboundary_matrix(self, n):
        """Matrix of delta: C^n -> C^{n+1} with alternating signs.

        delta u (sigma) = sum_i (-1)^i u(d_i sigma), so the row of an
        (n+1)-simplex has (-1)^i in the column of its i-th face.
        """
        if n < 0 or n >= self.dim:
            raise DegreeOutOfRange(
                f"coboundary degree {n} outside [0, {self.dim})")
        rows = self.n_cells(n + 1)
        cols = self.n_cells(n)
        data = [0] * (rows * cols)
        for i, sigma in enumerate(self.simplices[n + 1]):
            for drop in range(len(sigma)):
                face = sigma[:drop] + sigma[drop + 1:]
                j = self._index[n][face]
                data[i * cols + j] += (-1) ** drop
        return IntMatrix(rows, cols, data)

    def cochain_matrices(self, n):
        """(d_in, d_out) around degree n, with empty matrices at the ends."""
        k = self.n_cells(n)
        d_in = (self.coboundary_matrix(n - 1) if 1 <= n <= self.dim
                else IntMatrix.zeros(k, 0))
        d_out = (self.coboundary_matrix(n) if 0 <= n < self.dim
                 else IntMatrix.zeros(0, k))
        return d_in, d_out

    def cohomology(self, n, coeffs) -> CochainCohomology:
        """Reduced cohomology H^n with representative cocycles, n >= 1."""
        if isinstance(coeffs, str):
            coeffs = Coefficients.parse(coeffs)
        if n < 1:
            raise DegreeOutOfRange(
                "reduced cohomology is only served in degrees >= 1")
        key = (n, coeffs)
        if key not in self._coh_cache:
            if n > self.dim:
                result = cohomology_from_pair(IntMatrix.zeros(0, 0),
                                              IntMatrix.zeros(0, 0), coeffs)
            else:
                d_in, d_out = self.cochain_matrices(n)
                result = cohomology_from_pair(d_in, d_out, coeffs)
            self._coh_cache[key] = result
        return self._coh_cache[key]

    def subcomplex(self, facets, name=None):
        """Full subcomplex on the given facets (vertex labels are inherited)."""
        for f in facets:
            if not self.has_simplex(tuple(sorted(f))):
                raise ParseError(f"{f} is not a simplex of the complex")
        return SimplicialComplex(facets, name=name)

    def __repr__(self):
        label = self.name or "complex"
        return f"SimplicialComplex({label}, f={self.f_vector()})"


def parse_complex(text, name=None):
    """Parse a facet list; text or the structured JSON variant.

    Text format: one facet per line of whitespace-separated vertex numbers,
    '#' starts a comment.  The JSON form is an object with "facets" and
    optionally "vertices" and "name".
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON complex: {e}") from None
        if "facets" not in obj:
            raise ParseError("JSON complex needs a 'facets' field")
        facets = obj["facets"]
        if not isinstance(facets, list):
            raise ParseError("'facets' must be a list of vertex lists")
        k = SimplicialComplex(facets, name=obj.get("name", name))
        declared = obj.get("vertices")
        if declared is not None and int(declared) != k.vertex_count:
            raise ParseError(
                f"declared {declared} vertices, facets use {k.vertex_count}")
        return k

    facets = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            facets.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise ParseError(f"line {lineno}: expected vertex integers") from None
    if not facets:
        raise ParseError("no facets found")
    return SimplicialComplex(facets, name=name)
