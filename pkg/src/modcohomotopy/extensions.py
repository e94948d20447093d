"""Enumeration of abelian group extensions.

``enumerate_extensions(T, H)`` lists every isomorphism class of finite
abelian E fitting into 0 -> T -> E -> H -> 0.  Working one prime at a time,
a p-group E of partition type lambda admits a subgroup of type mu with
quotient of type nu exactly when the Littlewood-Richardson coefficient
c^lambda_{mu,nu} is positive (Hall's theorem), which is decided by searching
for a lattice-word skew tableau.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .abelian import FinAbGroup
from .errors import TooLarge


def partitions(n, max_part=None):
    """Partitions of n in decreasing-part order.

    >>> list(partitions(4, max_part=2))
    [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n == 0:
        yield ()
        return
    first = n if max_part is None else min(n, max_part)
    for head in range(first, 0, -1):
        for tail in partitions(n - head, head):
            yield (head,) + tail


def _contains(lam, mu):
    return len(mu) <= len(lam) and all(m <= l for l, m in zip(lam, mu))


@lru_cache(maxsize=None)
def lr_positive(lam, mu, nu):
    """Whether c^lambda_{mu, nu} > 0.

    Searches for a semistandard filling of lambda/mu with content nu whose
    reverse reading word is a lattice word.

    >>> lr_positive((2,), (1,), (1,))
    True
    >>> lr_positive((1, 1, 1), (1,), (2,))
    False
    """
    if sum(lam) != sum(mu) + sum(nu) or not _contains(lam, mu):
        return False
    if not nu:
        return lam == mu
    rows = len(lam)
    mu = tuple(mu) + (0,) * (rows - len(mu))
    cells = []
    for i in range(rows):
        for j in range(mu[i], lam[i]):
            cells.append((i, j))
    # reading order: rows top to bottom, right to left inside a row
    cells.sort(key=lambda c: (c[0], -c[1]))
    remaining = list(nu)
    fill = {}

    def feasible(pos):
        if pos == len(cells):
            return all(r == 0 for r in remaining)
        i, j = cells[pos]
        for value in range(len(nu)):
            if remaining[value] == 0:
                continue
            left = fill.get((i, j + 1))   # cell to the right, already filled
            if left is not None and value > left:
                continue  # weakly increasing left to right
            up = fill.get((i - 1, j))
            if up is not None and value <= up:
                continue  # strictly increasing down columns
            if i - 1 >= 0 and j >= mu[i - 1] and (i - 1, j) not in fill:
                continue  # the cell above is in the skew shape but unfilled
            # lattice word: prefix counts never let value+1 pass value;
            # counts so far are nu[k] - remaining[k]
            if value > 0:
                used_prev = nu[value - 1] - remaining[value - 1]
                used_here = nu[value] - remaining[value]
                if used_here + 1 > used_prev:
                    continue
            remaining[value] -= 1
            fill[(i, j)] = value
            if feasible(pos + 1):
                return True
            del fill[(i, j)]
            remaining[value] += 1
        return False

    return feasible(0)


def _partition_of(group, p):
    """Exponent partition of the p-primary part of a finite abelian group."""
    exps = []
    for d in group.torsion:
        e = 0
        while d % p == 0:
            d //= p
            e += 1
        if e:
            exps.append(e)
    return tuple(sorted(exps, reverse=True))


def middle_types(p, mu, nu):
    """Partitions lambda with c^lambda_{mu, nu} > 0 (p only keys the cache)."""
    total = sum(mu) + sum(nu)
    return [lam for lam in partitions(total) if lr_positive(lam, mu, nu)]


def enumerate_extensions(t, h, limit=2 ** 20):
    """All abelian E with a subgroup iso to T and quotient iso to H.

    Both groups must be finite and |T| * |H| must stay desk-scale.

    >>> [str(g) for g in enumerate_extensions(FinAbGroup(0, [2]),
    ...                                       FinAbGroup(0, [2]))]
    ['Z/2 (+) Z/2', 'Z/4']
    """
    if t.order() is None or h.order() is None:
        raise TooLarge("extension enumeration needs finite groups")
    size = t.order() * h.order()
    if size > limit:
        raise TooLarge(f"|T| * |H| = {size} exceeds the guard {limit}")
    if size == 1:
        return [FinAbGroup.trivial()]

    primes = set()
    for d in t.torsion + h.torsion:
        q = d
        f = 2
        while f * f <= q:
            if q % f == 0:
                primes.add(f)
                while q % f == 0:
                    q //= f
            f += 1
        if q > 1:
            primes.add(q)
    primes = sorted(primes)

    per_prime = []
    for p in primes:
        mu = _partition_of(t, p)
        nu = _partition_of(h, p)
        lams = middle_types(p, mu, nu)
        per_prime.append([(p, lam) for lam in lams])

    results = set()
    for combo in product(*per_prime):
        orders = []
        for p, lam in combo:
            orders.extend(p ** e for e in lam)
        results.add(FinAbGroup.from_orders(orders))
    return sorted(results, key=lambda g: (g.order(), g.torsion))


def split_extension(t, h):
    """The direct sum T (+) H."""
    return t.direct_sum(h)
