"""Finitely generated abelian groups, presentations, and homomorphisms.

A ``FinAbGroup`` is always kept in invariant-factor form.  Computations
(kernels, cokernels, subgroups) go through ``Presentation``, which turns an
arbitrary relation matrix into that canonical form while remembering how the
canonical generators sit inside the ambient coordinates.

Generator convention: torsion generators first, in divisibility order
d1 | d2 | ..., then free generators.  ``orders`` lists d1, ..., dk, 0, ..., 0
accordingly.  All values are immutable after construction.
"""

from __future__ import annotations

from math import gcd, prod

from .errors import RelationViolation
from .matrices import (IntMatrix, LinearSolver, column_lattice_basis,
                       kernel_basis, smith_normal_form)


def _factorize(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factors_from_orders(orders):
    """Merge arbitrary cyclic orders into (free_rank, invariant factors).

    >>> invariant_factors_from_orders([2, 3, 4, 0])
    (1, (2, 12))
    """
    rank = 0
    by_prime = {}
    for o in orders:
        o = abs(int(o))
        if o == 0:
            rank += 1
        elif o > 1:
            for p, e in _factorize(o).items():
                by_prime.setdefault(p, []).append(e)
    height = max((len(v) for v in by_prime.values()), default=0)
    factors = []
    for k in range(height):
        f = 1
        for p, exps in by_prime.items():
            exps_sorted = sorted(exps, reverse=True)
            if k < len(exps_sorted):
                f *= p ** exps_sorted[k]
        factors.append(f)
    factors.reverse()  # ascending divisibility d1 | d2 | ...
    return rank, tuple(factors)


class FinAbGroup:
    """A finitely generated abelian group in invariant-factor form.

    >>> print(FinAbGroup(1, [2, 4]))
    Z (+) Z/2 (+) Z/4
    >>> FinAbGroup.from_orders([6, 4]) == FinAbGroup(0, [2, 12])
    True
    """

    __slots__ = ("free_rank", "torsion", "labels")

    def __init__(self, free_rank, torsion=(), labels=None):
        free_rank = int(free_rank)
        torsion = tuple(int(d) for d in torsion)
        if free_rank < 0:
            raise ValueError("negative free rank")
        for d in torsion:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")
        object.__setattr__(self, "free_rank", free_rank)
        object.__setattr__(self, "torsion", torsion)
        object.__setattr__(self, "labels", tuple(labels) if labels else None)

    def __setattr__(self, name, value):
        raise AttributeError("FinAbGroup is immutable")

    @classmethod
    def from_orders(cls, orders):
        rank, torsion = invariant_factors_from_orders(orders)
        return cls(rank, torsion)

    @classmethod
    def trivial(cls):
        return cls(0, ())

    @classmethod
    def cyclic(cls, n):
        if n == 0:
            return cls(1, ())
        return cls(0, (n,)) if n > 1 else cls.trivial()

    @property
    def orders(self):
        """Relation order of each canonical generator (0 means free)."""
        return self.torsion + (0,) * self.free_rank

    @property
    def ngens(self):
        return len(self.torsion) + self.free_rank

    def order(self):
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        return prod(self.torsion) if self.torsion else 1

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def exponent(self):
        if self.free_rank:
            return None
        return self.torsion[-1] if self.torsion else 1

    def direct_sum(self, other):
        return FinAbGroup.from_orders(self.orders + other.orders)

    def p_primary(self, p):
        """Invariant factors of the p-primary part."""
        out = []
        for d in self.torsion:
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            if e:
                out.append(p ** e)
        return FinAbGroup(0, out)

    def __eq__(self, other):
        return (isinstance(other, FinAbGroup)
                and self.free_rank == other.free_rank
                and self.torsion == other.torsion)

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " (+) ".join(parts) if parts else "0"

    def __repr__(self):
        return f"FinAbGroup({self.free_rank}, {list(self.torsion)})"


class LocalModule:
    """Finitely generated Z_(p)-module: free rank plus p-power torsion.

    Torsion factors are stored as p-powers in ascending order.
    """

    __slots__ = ("p", "free_rank", "p_torsion")

    def __init__(self, p, free_rank, p_torsion=()):
        p_torsion = tuple(int(d) for d in p_torsion)
        for d in p_torsion:
            q = d
            while q % p == 0:
                q //= p
            if q != 1 or d < p:
                raise ValueError("torsion factors must be powers of p")
        for a, b in zip(p_torsion, p_torsion[1:]):
            if b % a:
                raise ValueError("p-torsion must be ascending")
        object.__setattr__(self, "p", int(p))
        object.__setattr__(self, "free_rank", int(free_rank))
        object.__setattr__(self, "p_torsion", p_torsion)

    def __setattr__(self, name, value):
        raise AttributeError("LocalModule is immutable")

    @classmethod
    def from_group(cls, group, p):
        """Localize an integral FinAbGroup at p (discard prime-to-p torsion)."""
        tors = []
        for d in group.torsion:
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            if e:
                tors.append(p ** e)
        return cls(p, group.free_rank, tors)

    def as_group(self):
        return FinAbGroup(self.free_rank, self.p_torsion)

    def torsion_group(self):
        return FinAbGroup(0, self.p_torsion)

    def is_trivial(self):
        return self.free_rank == 0 and not self.p_torsion

    def __eq__(self, other):
        return (isinstance(other, LocalModule) and self.p == other.p
                and self.free_rank == other.free_rank
                and self.p_torsion == other.p_torsion)

    def __hash__(self):
        return hash((self.p, self.free_rank, self.p_torsion))

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append(f"Z_({self.p})")
        elif self.free_rank > 1:
            parts.append(f"Z_({self.p})^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.p_torsion)
        return " (+) ".join(parts) if parts else "0"

    def __repr__(self):
        return f"LocalModule({self.p}, {self.free_rank}, {list(self.p_torsion)})"


class PresentedGroup:
    """An abelian group with a fixed, not necessarily canonical, generator list.

    ``orders[i]`` is the relation order of generator i (0 for a free
    generator).  Homomorphism matrices are always written against these
    generators.  ``group`` is the canonical invariant-factor form.
    """

    def __init__(self, orders, labels=None):
        self.orders = tuple(int(o) for o in orders)
        if any(o < 0 for o in self.orders):
            raise ValueError("orders must be nonnegative")
        self.labels = tuple(labels) if labels is not None else None
        self._group = None

    @property
    def ngens(self):
        return len(self.orders)

    @property
    def group(self):
        if self._group is None:
            self._group = FinAbGroup.from_orders(self.orders)
        return self._group

    def order(self):
        if any(o == 0 for o in self.orders):
            return None
        return prod(self.orders) if self.orders else 1

    def is_trivial(self):
        return all(o == 1 for o in self.orders)

    def relation_matrix(self):
        return IntMatrix.diagonal(self.orders, rows=self.ngens, cols=self.ngens)

    def reduce_vector(self, vec):
        """Normalize torsion coordinates modulo the generator orders."""
        return tuple(x % o if o else x for x, o in zip(vec, self.orders))

    def label(self, i):
        if self.labels is not None:
            return self.labels[i]
        return f"g{i}"

    def __repr__(self):
        return f"PresentedGroup(orders={list(self.orders)})"


class GroupHom:
    """Homomorphism between presented groups as an integer matrix.

    Column j is the image of source generator j in target generator
    coordinates.  The constructor checks that source relations map to
    relations (so the matrix really defines a homomorphism).
    """

    def __init__(self, source, target, matrix, check=True):
        if isinstance(source, FinAbGroup):
            source = PresentedGroup(source.orders)
        if isinstance(target, FinAbGroup):
            target = PresentedGroup(target.orders)
        self.source = source
        self.target = target
        self.matrix = matrix
        if matrix.shape != (target.ngens, source.ngens):
            raise ValueError(
                f"matrix shape {matrix.shape} does not match "
                f"{target.ngens} target x {source.ngens} source generators")
        if check:
            self._check_relations()

    def _check_relations(self):
        for j, o in enumerate(self.source.orders):
            if o == 0:
                continue
            for i, to in enumerate(self.target.orders):
                x = o * self.matrix.entry(i, j)
                if (to == 0 and x != 0) or (to != 0 and x % to):
                    raise RelationViolation(
                        f"source relation {o}*g{j} maps to a nonzero element")

    def apply(self, vec):
        return self.target.reduce_vector(self.matrix.apply(vec))

    def compose(self, inner):
        """self o inner (inner is applied first)."""
        if inner.target.orders != self.source.orders:
            raise ValueError("composition mismatch")
        return GroupHom(inner.source, self.target, self.matrix * inner.matrix,
                        check=False)

    def is_zero(self):
        for j in range(self.source.ngens):
            col = self.target.reduce_vector(self.matrix.column(j))
            if any(col):
                return False
        return True

    def image_subgroup(self):
        cols = [list(self.matrix.column(j)) for j in range(self.source.ngens)]
        return Subgroup(self.target, cols)

    def kernel_cokernel(self):
        return hom_kernel_cokernel(self)

    def __repr__(self):
        return (f"GroupHom({self.source.group} -> {self.target.group}, "
                f"{list(map(list, self.matrix))})")


class Presentation:
    """Z^k modulo the columns of a relation matrix, canonicalized by SNF."""

    def __init__(self, relations):
        self.relations = relations
        self.k = relations.rows
        snf = smith_normal_form(relations)
        diag = snf.diag_padded(self.k)
        self._snf = snf
        self._sigma = diag
        self.kept = [i for i in range(self.k) if diag[i] != 1]
        torsion = [diag[i] for i in self.kept if diag[i] >= 2]
        rank = sum(1 for i in self.kept if diag[i] == 0)
        self.group = FinAbGroup(rank, torsion)

    def generator_vectors(self):
        """Canonical generators written in the ambient Z^k coordinates."""
        return [list(self._snf.u_inv.column(i)) for i in self.kept]

    def coordinates(self, vec):
        """Coordinates of an ambient vector in the canonical generators."""
        y = self._snf.u.apply(vec)
        out = []
        for i in self.kept:
            d = self._sigma[i]
            out.append(y[i] % d if d else y[i])
        return out

    def projection_hom(self, source_presented):
        """The quotient map source -> group as a GroupHom."""
        rows = [[self._snf.u.entry(i, j) for j in range(self.k)] for i in self.kept]
        mat = IntMatrix.from_rows(rows, cols=self.k)
        return GroupHom(source_presented, PresentedGroup(self.group.orders), mat,
                        check=False)


class Subgroup:
    """Subgroup of a presented group spanned by coordinate vectors."""

    def __init__(self, ambient, generators):
        self.ambient = ambient
        self.generators = [list(g) for g in generators]
        k = ambient.ngens
        rel = ambient.relation_matrix()
        if self.generators:
            span = IntMatrix.from_columns(self.generators, rows=k).hstack(rel)
        else:
            span = rel
        self._span_solver = LinearSolver(span)
        # abstract isomorphism type: span lattice modulo the relations
        basis = column_lattice_basis(span)
        if basis:
            bmat = IntMatrix.from_columns(basis, rows=k)
            bsolve = LinearSolver(bmat)
            relcols = []
            for j, o in enumerate(ambient.orders):
                if o:
                    col = [0] * k
                    col[j] = o
                    sol = bsolve.solve(col)
                    if sol is None:
                        raise AssertionError("relation escaped its span lattice")
                    relcols.append(sol)
            relmat = (IntMatrix.from_columns(relcols, rows=bmat.cols)
                      if relcols else IntMatrix.zeros(bmat.cols, 0))
            self.group = Presentation(relmat).group
        else:
            self.group = FinAbGroup.trivial()

    def contains(self, vec):
        return self._span_solver.contains(list(vec))

    def contains_subgroup(self, other):
        return all(self.contains(g) for g in other.generators)

    def same_as(self, other):
        return self.contains_subgroup(other) and other.contains_subgroup(self)

    def order(self):
        return self.group.order()

    def index(self):
        """Index in the ambient group (finite ambient only)."""
        total = self.ambient.order()
        if total is None:
            return None
        o = self.group.order()
        return total // o


def hom_kernel_cokernel(f):
    """Kernel and cokernel of a GroupHom, each with its structure map.

    Returns ``(kernel_group, inclusion_hom, cokernel_group, projection_hom)``.
    """
    src, tgt = f.source, f.target
    m = f.matrix

    # cokernel: target modulo image and target relations
    rel = m.hstack(tgt.relation_matrix())
    pres = Presentation(rel)
    coker = pres.group
    proj = pres.projection_hom(tgt)

    # kernel: x with f(x) = 0 in the target, modulo source relations
    big = m.hstack(tgt.relation_matrix())
    kerb = kernel_basis(big)
    lat_cols = [col[:src.ngens] for col in kerb]
    if lat_cols:
        basis = column_lattice_basis(
            IntMatrix.from_columns(lat_cols, rows=src.ngens))
    else:
        basis = []
    if basis:
        bmat = IntMatrix.from_columns(basis, rows=src.ngens)
        bsolve = LinearSolver(bmat)
        relcols = []
        for j, o in enumerate(src.orders):
            if o:
                col = [0] * src.ngens
                col[j] = o
                sol = bsolve.solve(col)
                if sol is None:
                    raise AssertionError("source relation not in kernel lattice")
                relcols.append(sol)
        relmat = (IntMatrix.from_columns(relcols, rows=bmat.cols)
                  if relcols else IntMatrix.zeros(bmat.cols, 0))
        kpres = Presentation(relmat)
        kernel = kpres.group
        gen_vecs = kpres.generator_vectors()
        inc_cols = [bmat.apply(g) for g in gen_vecs]
        inc = GroupHom(PresentedGroup(kernel.orders), src,
                       IntMatrix.from_columns(inc_cols, rows=src.ngens)
                       if inc_cols else IntMatrix.zeros(src.ngens, 0),
                       check=False)
    else:
        kernel = FinAbGroup.trivial()
        inc = GroupHom(PresentedGroup(()), src,
                       IntMatrix.zeros(src.ngens, 0), check=False)
    return kernel, inc, coker, proj


def hom_is_injective(f):
    kernel, _, _, _ = hom_kernel_cokernel(f)
    return kernel.is_trivial()


def tensor_and_tor(a, m):
    """A (x) Z/m and Tor(A, Z/m) for a FinAbGroup A and m >= 2.

    >>> g, t = tensor_and_tor(FinAbGroup(0, [6]), 4)
    >>> str(g), str(t)
    ('Z/2', 'Z/2')
    """
    if m < 2:
        raise ValueError("modulus must be >= 2")
    tensor_orders = [gcd(d, m) for d in a.torsion] + [m] * a.free_rank
    tor_orders = [gcd(d, m) for d in a.torsion]
    return FinAbGroup.from_orders(tensor_orders), FinAbGroup.from_orders(tor_orders)
