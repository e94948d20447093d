"""Cohomology of a cochain pair with Z, Z/m, or Z_(p) coefficients.

``cohomology_from_pair`` turns two coboundary matrices into an explicitly
presented group: invariant factors, one representative cocycle per canonical
generator, and a solver that writes any cocycle in those generators.
"""

from __future__ import annotations

from .abelian import (FinAbGroup, LocalModule, Presentation, PresentedGroup)
from .errors import CompositionNonzero, ParseError
from .matrices import (IntMatrix, LinearSolver, column_lattice_basis,
                       kernel_basis, smith_normal_form)


class Coefficients:
    """Coefficient descriptor: Z, Z/m, or the p-local integers Z_(p).

    >>> str(Coefficients.parse("Z/2^3")), str(Coefficients.parse("Z_(3)"))
    ('Z/8', 'Z_(3)')
    """

    __slots__ = ("kind", "modulus", "prime")

    def __init__(self, kind, modulus=0, prime=0):
        if kind not in ("Z", "mod", "local"):
            raise ValueError(f"unknown coefficient kind {kind!r}")
        if kind == "mod" and modulus < 2:
            raise ValueError("modulus must be >= 2")
        if kind == "local" and not _is_prime(prime):
            raise ValueError("localization requires a prime")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "modulus", int(modulus))
        object.__setattr__(self, "prime", int(prime))

    def __setattr__(self, name, value):
        raise AttributeError("Coefficients is immutable")

    @classmethod
    def integers(cls):
        return cls("Z")

    @classmethod
    def mod(cls, m):
        return cls("mod", modulus=m)

    @classmethod
    def local(cls, p):
        return cls("local", prime=p)

    @classmethod
    def parse(cls, text):
        s = text.replace(" ", "")
        if s == "Z":
            return cls.integers()
        if s.startswith("Z_(") and s.endswith(")"):
            try:
                return cls.local(int(s[3:-1]))
            except ValueError as e:
                raise ParseError(f"bad coefficient string {text!r}: {e}") from None
        if s.startswith("Z/"):
            body = s[2:]
            try:
                if "^" in body:
                    base, exp = body.split("^")
                    return cls.mod(int(base) ** int(exp))
                return cls.mod(int(body))
            except ValueError:
                raise ParseError(f"bad coefficient string {text!r}") from None
        raise ParseError(f"bad coefficient string {text!r}")

    def is_mod(self, m=None):
        return self.kind == "mod" and (m is None or self.modulus == m)

    def __eq__(self, other):
        return (isinstance(other, Coefficients) and self.kind == other.kind
                and self.modulus == other.modulus and self.prime == other.prime)

    def __hash__(self):
        return hash((self.kind, self.modulus, self.prime))

    def __str__(self):
        if self.kind == "Z":
            return "Z"
        if self.kind == "mod":
            return f"Z/{self.modulus}"
        return f"Z_({self.prime})"

    def __repr__(self):
        return f"Coefficients({str(self)})"


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class CochainCohomology(PresentedGroup):
    """ker(d_out) / im(d_in) with representative cocycles.

    The presented generators are canonical (invariant-factor order), each
    backed by an explicit cocycle vector.  ``coords_of`` writes an arbitrary
    cocycle in these generators; for Z_(p) coefficients the coordinates are
    taken in the localized module and ``module`` carries the LocalModule view.
    """

    def __init__(self, coeffs, orders, reps, coords_fn, module=None,
                 cochain_len=0):
        super().__init__(orders)
        self.coeffs = coeffs
        self.reps = [list(r) for r in reps]
        self._coords_fn = coords_fn
        self.module = module
        self.cochain_len = cochain_len

    def coords_of(self, vec):
        """Coordinates of a cocycle vector in the canonical generators."""
        return self._coords_fn(list(vec))


def cohomology_from_pair(d_in, d_out, coeffs):
    """Cohomology of C^{n-1} --d_in--> C^n --d_out--> C^{n+1}.

    ``d_in`` has shape (dim C^n) x (dim C^{n-1}) and ``d_out`` has shape
    (dim C^{n+1}) x (dim C^n).  Raises CompositionNonzero unless
    d_out . d_in = 0 over the given coefficients.
    """
    k = d_out.cols
    if d_in.rows != k:
        raise ValueError("d_in target dimension does not match d_out source")
    comp = d_out * d_in
    if coeffs.is_mod():
        if not comp.mod(coeffs.modulus).is_zero():
            raise CompositionNonzero("d_out . d_in != 0 mod m")
        return _cohomology_mod(d_in, d_out, coeffs)
    if not comp.is_zero():
        raise CompositionNonzero("d_out . d_in != 0")
    return _cohomology_integral(d_in, d_out, coeffs)


def _cohomology_integral(d_in, d_out, coeffs):
    k = d_out.cols
    ker = kernel_basis(d_out)
    if not ker:
        fn = lambda vec: []
        if coeffs.kind == "local":
            return CochainCohomology(coeffs, (), [], fn,
                                     module=LocalModule(coeffs.prime, 0),
                                     cochain_len=k)
        return CochainCohomology(coeffs, (), [], fn, cochain_len=k)
    kmat = IntMatrix.from_columns(ker, rows=k)
    ksolve = LinearSolver(kmat)

    relcols = []
    for j in range(d_in.cols):
        col = list(d_in.column(j))
        sol = ksolve.solve(col)
        if sol is None:
            raise AssertionError("coboundary not in cocycle lattice")
        relcols.append(sol)
    relmat = (IntMatrix.from_columns(relcols, rows=kmat.cols)
              if relcols else IntMatrix.zeros(kmat.cols, 0))
    pres = Presentation(relmat)
    reps = [kmat.apply(g) for g in pres.generator_vectors()]

    if coeffs.kind == "Z":
        def coords(vec):
            sol = ksolve.solve(vec)
            if sol is None:
                raise ValueError("vector is not a cocycle")
            return pres.coordinates(sol)
        return CochainCohomology(coeffs, pres.group.orders, reps, coords,
                                 cochain_len=k)

    # Z_(p): keep the integral presentation, drop prime-to-p torsion
    p = coeffs.prime
    orders = list(pres.group.orders)
    kept, local_orders = [], []
    for i, o in enumerate(orders):
        if o == 0:
            kept.append(i)
            local_orders.append(0)
        else:
            e = 0
            while o % p == 0:
                o //= p
                e += 1
            if e:
                kept.append(i)
                local_orders.append(p ** e)
    local_orders = tuple(sorted(local_orders, key=lambda d: (d == 0, d)))
    kept_sorted = sorted(kept, key=lambda i: (orders[i] == 0,
                                              _p_part(orders[i], p)))
    local_reps = [reps[i] for i in kept_sorted]
    module = LocalModule(p, sum(1 for o in local_orders if o == 0),
                         [o for o in local_orders if o])

    def coords(vec):
        sol = ksolve.solve(vec)
        if sol is None:
            raise ValueError("vector is not a cocycle")
        full = pres.coordinates(sol)
        out = []
        for i, o in zip(kept_sorted, [ _p_part(orders[i], p) or 0
                                       for i in kept_sorted ]):
            out.append(full[i] % o if o else full[i])
        return out

    return CochainCohomology(coeffs, local_orders, local_reps, coords,
                             module=module, cochain_len=k)


def _p_part(d, p):
    if d == 0:
        return 0
    out = 1
    while d % p == 0:
        d //= p
        out *= p
    return out


def _cohomology_mod(d_in, d_out, coeffs):
    m = coeffs.modulus
    k = d_out.cols
    snf = smith_normal_form(d_out)
    diag = snf.diag_padded(k)
    from math import gcd
    scale = [m // gcd(d, m) if d else 1 for d in diag]
    # columns of gmat generate {x : d_out x = 0 mod m}
    gcols = [[snf.v.entry(i, j) * scale[j] for i in range(k)] for j in range(k)]
    gmat = IntMatrix.from_columns(gcols, rows=k) if k else IntMatrix.zeros(0, 0)
    gsolve = LinearSolver(gmat) if k else None

    relcols = []
    sources = [list(d_in.column(j)) for j in range(d_in.cols)]
    sources += [[m if i == j else 0 for i in range(k)] for j in range(k)]
    for col in sources:
        sol = gsolve.solve(col) if gsolve else []
        if sol is None:
            raise AssertionError("relation vector escaped the cocycle lattice")
        relcols.append(sol)
    relmat = (IntMatrix.from_columns(relcols, rows=k)
              if relcols else IntMatrix.zeros(k, 0))
    pres = Presentation(relmat)
    reps = [[x % m for x in gmat.apply(g)] for g in pres.generator_vectors()]

    def coords(vec):
        sol = gsolve.solve([x % m for x in vec]) if gsolve else []
        if sol is None:
            raise ValueError("vector is not a mod-m cocycle")
        return pres.coordinates(sol)

    return CochainCohomology(coeffs, pres.group.orders, reps, coords,
                             cochain_len=k)
