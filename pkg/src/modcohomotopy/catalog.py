"""Symbolic spaces with known cohomology and operation actions.

Supplies the inputs that cannot be triangulated at desk scale: complex and
quaternionic projective spaces (including the odd-prime reduced power P^1),
Moore spaces in any degree, and wedges/suspensions of these.

Each space is flattened to a list of homology cells (degree, cyclic order).
Cohomology with any coefficients follows from Hom/Ext on those cells, with
an explicit generator convention, so coefficient maps and Bocksteins are
computed cell by cell.  The only non-diagonal operation is the reduced
power on a projective family, which follows the closed form
P^1(a^m) = (d m / 2) * a^{m + (2p-2)/d}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd

from .abelian import GroupHom, LocalModule, PresentedGroup
from .cohomology import Coefficients
from .errors import ParseError, UnsupportedOperation
from .matrices import IntMatrix


# ---------------------------------------------------------------------------
# space expressions

@dataclass(frozen=True)
class Sphere:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ParseError("sphere dimension must be >= 1")

    def __str__(self):
        return f"S({self.n})"


@dataclass(frozen=True)
class Moore:
    """Moore space M_n(Z/p^r): reduced homology Z/p^r in degree n."""
    n: int
    p: int
    r: int

    def __post_init__(self):
        if self.n < 2:
            raise ParseError("Moore spaces need n >= 2")
        if self.r < 1:
            raise ParseError("Moore spaces need r >= 1")
        if not _is_prime(self.p):
            raise ParseError(f"{self.p} is not prime")

    def __str__(self):
        return f"M({self.n}; {self.p}^{self.r})"


@dataclass(frozen=True)
class CP:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ParseError("CP(n) needs n >= 1")

    def __str__(self):
        return f"CP({self.n})"


@dataclass(frozen=True)
class HP:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ParseError("HP(n) needs n >= 1")

    def __str__(self):
        return f"HP({self.n})"


@dataclass(frozen=True)
class Wedge:
    parts: tuple

    def __post_init__(self):
        if len(self.parts) < 1:
            raise ParseError("wedge needs at least one factor")

    def __str__(self):
        return "wedge(" + ", ".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class Susp:
    space: object
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ParseError("suspension needs k >= 1")

    def __str__(self):
        return f"susp({self.space}, {self.k})"


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def catalog_dimension(space):
    """CW dimension of a space expression.

    >>> catalog_dimension(parse_space("wedge(S(3), HP(2))"))
    8
    """
    if isinstance(space, Sphere):
        return space.n
    if isinstance(space, Moore):
        return space.n + 1
    if isinstance(space, CP):
        return 2 * space.n
    if isinstance(space, HP):
        return 4 * space.n
    if isinstance(space, Wedge):
        return max(catalog_dimension(p) for p in space.parts)
    if isinstance(space, Susp):
        return catalog_dimension(space.space) + space.k
    raise TypeError(f"not a space expression: {space!r}")


def parse_space(text):
    """Parse the space grammar, whitespace-insensitive.

    >>> parse_space("susp( M(3; 2^2), 2 )")
    Susp(space=Moore(n=3, p=2, r=2), k=2)
    """
    s = re.sub(r"\s+", "", text)
    expr, rest = _parse_expr(s)
    if rest:
        raise ParseError(f"trailing input {rest!r} in space expression")
    return expr


def _parse_expr(s):
    low = s.lower()
    for head, builder in (("wedge(", _parse_wedge), ("susp(", _parse_susp)):
        if low.startswith(head):
            return builder(s[len(head):])
    m = re.match(r"(CP|HP|S|M)\(", s, re.IGNORECASE)
    if not m:
        raise ParseError(f"cannot parse space expression at {s!r}")
    head = m.group(1).upper()
    body, rest = _read_group(s[m.end():])
    if head == "S":
        return Sphere(_int(body)), rest
    if head == "CP":
        return CP(_int(body)), rest
    if head == "HP":
        return HP(_int(body)), rest
    parts = body.split(";")
    if len(parts) != 2:
        raise ParseError("Moore space syntax is M(n; p^r)")
    n = _int(parts[0])
    if "^" in parts[1]:
        p_str, r_str = parts[1].split("^")
        return Moore(n, _int(p_str), _int(r_str)), rest
    q = _int(parts[1])
    p, r = _prime_power(q)
    return Moore(n, p, r), rest


def _parse_wedge(s):
    parts = []
    while True:
        expr, s = _parse_expr(s)
        parts.append(expr)
        if s.startswith(","):
            s = s[1:]
            continue
        if s.startswith(")"):
            return Wedge(tuple(parts)), s[1:]
        raise ParseError("expected ',' or ')' in wedge(...)")


def _parse_susp(s):
    expr, s = _parse_expr(s)
    if not s.startswith(","):
        raise ParseError("suspension syntax is susp(space, k)")
    m = re.match(r",(\d+)\)", s)
    if not m:
        raise ParseError("suspension syntax is susp(space, k)")
    return Susp(expr, int(m.group(1))), s[m.end():]


def _read_group(s):
    depth = 1
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return s[:i], s[i + 1:]
    raise ParseError("unbalanced parentheses in space expression")


def _int(s):
    try:
        return int(s)
    except ValueError:
        raise ParseError(f"expected an integer, got {s!r}") from None


def _prime_power(q):
    for p in range(2, q + 1):
        if _is_prime(p):
            r = 0
            n = q
            while n % p == 0:
                n //= p
                r += 1
            if n == 1 and r >= 1:
                return p, r
    raise ParseError(f"{q} is not a prime power")


# ---------------------------------------------------------------------------
# cells

@dataclass(frozen=True)
class Cell:
    """One cyclic summand of integral homology (order 0 means Z)."""
    index: int
    degree: int
    order: int
    label: str
    family: tuple = None   # ("FP", d, component_path, n_top) on projective cells
    power: int = 0


def cells_of(space):
    out = []
    _flatten(space, "", 0, out)
    return out


def _flatten(space, path, shift, out):
    prefix = f"{path}:" if path else ""
    sigma = f"s^{shift} " if shift else ""
    if isinstance(space, Sphere):
        out.append(Cell(len(out), space.n + shift, 0, f"{prefix}{sigma}iota"))
    elif isinstance(space, Moore):
        out.append(Cell(len(out), space.n + shift, space.p ** space.r,
                        f"{prefix}{sigma}u"))
    elif isinstance(space, (CP, HP)):
        d = 2 if isinstance(space, CP) else 4
        family = ("FP", d, path or "@", space.n)
        for m in range(1, space.n + 1):
            out.append(Cell(len(out), d * m + shift, 0,
                            f"{prefix}{sigma}a^{m}", family, m))
    elif isinstance(space, Susp):
        _flatten(space.space, path, shift + space.k, out)
    elif isinstance(space, Wedge):
        for i, part in enumerate(space.parts):
            sub = f"{path}.{i}" if path else str(i)
            _flatten(part, sub, shift, out)
    else:
        raise TypeError(f"not a space expression: {space!r}")


# ---------------------------------------------------------------------------
# cohomology via Hom/Ext on cells

def _hom_summand(c, coeffs):
    """(order, scale, modulus) of Hom(Z/c, A), or None when trivial.

    The generator is scale * 1 inside A; modulus is 0 for Z and Z_(p).
    """
    if c == 0:
        if coeffs.kind == "mod":
            return (coeffs.modulus, 1, coeffs.modulus)
        return (0, 1, 0)
    if coeffs.kind == "mod":
        g = gcd(coeffs.modulus, c)
        if g == 1:
            return None
        return (g, coeffs.modulus // g, coeffs.modulus)
    return None


def _ext_summand(c, coeffs):
    """(order, scale, modulus) of Ext(Z/c, A) = A/cA, generator class of 1."""
    if c == 0:
        return None
    if coeffs.kind == "Z":
        return (c, 1, 0)
    if coeffs.kind == "mod":
        g = gcd(coeffs.modulus, c)
        if g == 1:
            return None
        return (g, 1, coeffs.modulus)
    v = 1
    cc = c
    while cc % coeffs.prime == 0:
        cc //= coeffs.prime
        v *= coeffs.prime
    if v == 1:
        return None
    return (v, 1, 0)


@dataclass
class Summand:
    cell: Cell
    part: str      # "hom" or "ext"
    order: int
    scale: int
    modulus: int
    label: str = field(default="")


class CatalogCohomology(PresentedGroup):
    """H^n(X; A) of a catalog space, one generator per Hom/Ext summand."""

    def __init__(self, space, degree, coeffs, summands):
        super().__init__([s.order for s in summands],
                         labels=[s.label for s in summands])
        self.space = space
        self.degree = degree
        self.coeffs = coeffs
        self.summands = summands
        if coeffs.kind == "local":
            p = coeffs.prime
            free = sum(1 for s in summands if s.order == 0)
            tors = sorted(s.order for s in summands if s.order)
            self.module = LocalModule(p, free, tors)
        else:
            self.module = None


def catalog_cohomology(space, n, coeffs):
    """Reduced cohomology H^n(X; A) with named generators.

    >>> h = catalog_cohomology(parse_space("CP(3)"), 4, Coefficients.integers())
    >>> str(h.group), h.labels
    ('Z', ('a^2',))
    """
    if isinstance(coeffs, str):
        coeffs = Coefficients.parse(coeffs)
    if n < 1:
        raise UnsupportedOperation("reduced catalog cohomology needs n >= 1")
    summands = []
    cells = cells_of(space)
    for cell in cells:
        if cell.degree == n:
            data = _hom_summand(cell.order, coeffs)
            if data and data[0] != 1:
                summands.append(Summand(cell, "hom", *data, label=cell.label))
    for cell in cells:
        if cell.degree == n - 1 and cell.order:
            data = _ext_summand(cell.order, coeffs)
            if data and data[0] != 1:
                summands.append(Summand(cell, "ext", *data,
                                        label=cell.label + "'"))
    return CatalogCohomology(space, n, coeffs, summands)


# ---------------------------------------------------------------------------
# operations

def _zero_matrix(tgt, src):
    return IntMatrix.zeros(tgt.ngens, src.ngens)


def _transport_scalar(src_summand, tgt_summand, f1):
    """Coefficient of the image of a source generator on a target generator."""
    if src_summand.part == "ext":
        lam = f1
        if tgt_summand.order:
            lam %= tgt_summand.order
        return lam
    value = f1 * src_summand.scale
    if tgt_summand.modulus:
        value %= tgt_summand.modulus
    if value % tgt_summand.scale:
        raise AssertionError("coefficient transport left the target subgroup")
    lam = value // tgt_summand.scale
    if tgt_summand.order:
        lam %= tgt_summand.order
    return lam


def coefficient_map_hom(space, n, src_coeffs, tgt_coeffs, scalar=1):
    """H^n(X; A) -> H^n(X; B) induced by the map A -> B, x -> scalar * x."""
    src = catalog_cohomology(space, n, src_coeffs)
    tgt = catalog_cohomology(space, n, tgt_coeffs)
    by_key = {(s.cell.index, s.part): j for j, s in enumerate(tgt.summands)}
    entries = [[0] * src.ngens for _ in range(tgt.ngens)]
    for jsrc, s in enumerate(src.summands):
        jt = by_key.get((s.cell.index, s.part))
        if jt is None:
            continue
        entries[jt][jsrc] = _transport_scalar(s, tgt.summands[jt], scalar)
    return GroupHom(src, tgt, IntMatrix.from_rows(entries, cols=src.ngens))


def reduction_map(space, n, src_coeffs, modulus):
    """Reduction A -> Z/modulus (A one of Z, Z/m', Z_(p))."""
    src_coeffs = (Coefficients.parse(src_coeffs)
                  if isinstance(src_coeffs, str) else src_coeffs)
    if src_coeffs.kind == "mod" and src_coeffs.modulus % modulus:
        raise UnsupportedOperation(
            f"no reduction Z/{src_coeffs.modulus} -> Z/{modulus}")
    if src_coeffs.kind == "local":
        q = modulus
        while q % src_coeffs.prime == 0:
            q //= src_coeffs.prime
        if q != 1:
            raise UnsupportedOperation(
                f"no reduction Z_({src_coeffs.prime}) -> Z/{modulus}")
    return coefficient_map_hom(space, n, src_coeffs, Coefficients.mod(modulus))


def multiplication_map(space, n, p, r):
    """[p]: H^n(X; Z/p^{r-1}) -> H^n(X; Z/p^r) induced by multiplication by p."""
    if r < 2:
        raise UnsupportedOperation("[p] needs r >= 2")
    return coefficient_map_hom(space, n, Coefficients.mod(p ** (r - 1)),
                               Coefficients.mod(p ** r), scalar=p)


def bockstein_map(space, r, p, n):
    """beta_r: H^n(X; Z/p^r) -> H^{n+1}(X; Z/p), nonzero only on cells whose
    p-height s satisfies 1 <= s <= r (with unit c/p^s mod p)."""
    src = catalog_cohomology(space, n, Coefficients.mod(p ** r))
    tgt = catalog_cohomology(space, n + 1, Coefficients.mod(p))
    ext_index = {(s.cell.index): j for j, s in enumerate(tgt.summands)
                 if s.part == "ext"}
    entries = [[0] * src.ngens for _ in range(tgt.ngens)]
    for jsrc, s in enumerate(src.summands):
        if s.part != "hom" or s.cell.order == 0:
            continue
        c = s.cell.order
        height = 0
        unit = c
        while unit % p == 0:
            unit //= p
            height += 1
        if not 1 <= height <= r:
            continue
        jt = ext_index.get(s.cell.index)
        if jt is not None:
            entries[jt][jsrc] = unit % p
    return GroupHom(src, tgt, IntMatrix.from_rows(entries, cols=src.ngens))


def reduced_power_map(space, p, n):
    """P^1 at the prime p: H^n(X; Z/p) -> H^{n+2p-2}(X; Z/p).

    Acts by P^1(a^m) = (d m / 2) a^{m + (2p-2)/d} on projective families and
    by zero on sphere and Moore cells (degree reasons at desk scale).
    """
    src = catalog_cohomology(space, n, Coefficients.mod(p))
    tgt = catalog_cohomology(space, n + 2 * p - 2, Coefficients.mod(p))
    cells = cells_of(space)
    by_family = {}
    for cell in cells:
        if cell.family is not None:
            by_family[(cell.family, cell.power)] = cell.index
    tgt_index = {(s.cell.index, s.part): j for j, s in enumerate(tgt.summands)}
    entries = [[0] * src.ngens for _ in range(tgt.ngens)]
    for jsrc, s in enumerate(src.summands):
        cell = s.cell
        if s.part != "hom" or cell.family is None:
            continue
        d = cell.family[1]
        if (2 * p - 2) % d:
            continue
        shift = (2 * p - 2) // d
        target_cell = by_family.get((cell.family, cell.power + shift))
        if target_cell is None:
            continue
        jt = tgt_index.get((target_cell, "hom"))
        if jt is None:
            continue
        entries[jt][jsrc] = (d * cell.power // 2) % p
    return GroupHom(src, tgt, IntMatrix.from_rows(entries, cols=src.ngens))


def composite_power_map(space, p, n, src_coeffs):
    """P^1_G = P^1 after reduction mod p: H^n(X;G) -> H^{n+2p-2}(X;Z/p)."""
    rho = reduction_map(space, n, src_coeffs, p)
    power = reduced_power_map(space, p, n)
    return power.compose(rho)


def catalog_operation(space, op, n, coeffs=None):
    """Induced map of a named operation from degree n.

    op is a tuple: ("sq", 1) | ("sq", 2) | ("p1", p) | ("beta", r, p) |
    ("p1G", p) with ``coeffs`` the source coefficients for the composite.
    """
    coeffs = Coefficients.parse(coeffs) if isinstance(coeffs, str) else coeffs
    tag = op[0]
    if tag == "sq":
        k = op[1]
        if k == 1:
            return bockstein_map(space, 1, 2, n)
        if k == 2:
            return reduced_power_map(space, 2, n)
        raise UnsupportedOperation(
            "catalog Steenrod squares are tabulated for Sq^1 and Sq^2 only")
    if tag == "p1":
        return reduced_power_map(space, op[1], n)
    if tag == "beta":
        return bockstein_map(space, op[1], op[2], n)
    if tag == "p1G":
        if coeffs is None:
            raise UnsupportedOperation("p1G needs source coefficients")
        return composite_power_map(space, op[1], n, coeffs)
    raise UnsupportedOperation(f"no catalog rule for operation {op!r}")
