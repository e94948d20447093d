import random
from itertools import product as iproduct

import pytest

from modcohomotopy.abelian import FinAbGroup
from modcohomotopy.errors import TooLarge
from modcohomotopy.extensions import (enumerate_extensions, lr_positive,
                                      partitions, split_extension)


def test_partitions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1),
                                   (1, 1, 1, 1)]
    assert list(partitions(0)) == [()]


def test_lr_basic_cases():
    assert lr_positive((2,), (1,), (1,))
    assert lr_positive((1, 1), (1,), (1,))
    assert not lr_positive((1, 1, 1), (1,), (2,))
    assert lr_positive((2, 1), (1,), (2,))
    assert lr_positive((3,), (1,), (2,))
    # symmetric in mu and nu
    assert lr_positive((2, 1), (2,), (1,)) == lr_positive((2, 1), (1,), (2,))


def test_extensions_z2_by_z2():
    got = [str(g) for g in enumerate_extensions(FinAbGroup(0, [2]),
                                                FinAbGroup(0, [2]))]
    assert got == ["Z/2 (+) Z/2", "Z/4"]


def test_extensions_trivial_t():
    h = FinAbGroup(0, [2, 6])
    assert enumerate_extensions(FinAbGroup.trivial(), h) == [h]
    assert enumerate_extensions(h, FinAbGroup.trivial()) == [h]


def test_extensions_z2_by_z4():
    got = enumerate_extensions(FinAbGroup(0, [2]), FinAbGroup(0, [4]))
    assert got == [FinAbGroup(0, [2, 4]), FinAbGroup(0, [8])]
    # Z/2 (+) Z/2 (+) Z/2 has no Z/4 quotient by a Z/2 subgroup
    assert FinAbGroup(0, [2, 2, 2]) not in got


def test_extensions_brute_force_oracle():
    """Check against explicit subgroup search in small p-groups."""

    def group_elements(orders):
        return list(iproduct(*[range(o) for o in orders]))

    def subgroup_generated(orders, gens):
        elems = {tuple(0 for _ in orders)}
        frontier = list(elems)
        while frontier:
            new = []
            for e in frontier:
                for g in gens:
                    s = tuple((a + b) % o for a, b, o in zip(e, g, orders))
                    if s not in elems:
                        elems.add(s)
                        new.append(s)
            frontier = new
        return elems

    def iso_type(orders, elems):
        # element-order census determines a finite abelian group
        from collections import Counter
        census = Counter()
        for e in elems:
            o = 1
            for a, m in zip(e, orders):
                if a:
                    q = m // __import__("math").gcd(a, m)
                    o = o * q // __import__("math").gcd(o, q)
            census[o] += 1
        return census

    def census_of(group):
        elems = group_elements(group.orders)
        return iso_type(group.orders, elems)

    def has_extension(e_group, t_group, h_group):
        orders = e_group.orders
        elems = group_elements(orders)
        target_census = census_of(t_group)
        quotient_order = h_group.order()
        seen = set()
        import itertools as it
        for gens in it.combinations(elems, min(len(t_group.orders) + 1, 2)):
            sub = subgroup_generated(orders, gens)
            if len(sub) != t_group.order():
                continue
            key = frozenset(sub)
            if key in seen:
                continue
            seen.add(key)
            if iso_type(orders, sub) != target_census:
                continue
            # quotient census
            from collections import Counter
            cosets = {}
            for e in elems:
                rep = min(tuple((a - s) % o for a, s, o in zip(e, sub_e, orders))
                          for sub_e in sub)
                cosets.setdefault(rep, []).append(e)
            if len(cosets) != quotient_order:
                continue
            # compute quotient element orders
            census = Counter()
            reps = list(cosets)
            index = {min(tuple((a - s) % o for a, s, o in zip(e, sub_e, orders))
                         for sub_e in sub): r
                     for r, e in enumerate([])} if False else None
            for rep in reps:
                o = 1
                cur = rep
                while any(cur):
                    cur_plus = tuple((a + b) % m for a, b, m in zip(cur, rep, orders))
                    # reduce to canonical coset rep
                    cur = min(tuple((a - s) % m for a, s, m in
                               zip(cur_plus, sub_e, orders)) for sub_e in sub)
                    o += 1
                    if o > len(elems):
                        break
                census[o] += 1
            if census == census_of(h_group):
                return True
        return False

    cases = [
        (FinAbGroup(0, [2]), FinAbGroup(0, [2])),
        (FinAbGroup(0, [2]), FinAbGroup(0, [4])),
        (FinAbGroup(0, [4]), FinAbGroup(0, [2])),
        (FinAbGroup(0, [2, 2]), FinAbGroup(0, [2])),
        (FinAbGroup(0, [3]), FinAbGroup(0, [3])),
    ]
    for t, h in cases:
        got = set(enumerate_extensions(t, h))
        size = t.order() * h.order()
        everything = set()
        from modcohomotopy.extensions import partitions as parts

        def groups_of_order(n):
            from modcohomotopy.abelian import _factorize
            out = [[]]
            for p, e in _factorize(n).items():
                new = []
                for lam in parts(e):
                    for base in out:
                        new.append(base + [p ** x for x in lam])
                out = new
            return [FinAbGroup.from_orders(o) for o in out]

        for cand in groups_of_order(size):
            if has_extension(cand, t, h):
                everything.add(cand)
        assert got == everything, (str(t), str(h))


def test_extension_guard():
    with pytest.raises(TooLarge):
        enumerate_extensions(FinAbGroup(0, [2 ** 11]), FinAbGroup(0, [2 ** 11]))
    with pytest.raises(TooLarge):
        enumerate_extensions(FinAbGroup(1, []), FinAbGroup(0, [2]))


def test_split_extension_always_listed():
    rng = random.Random(1)
    pool = [FinAbGroup(0, [2]), FinAbGroup(0, [4]), FinAbGroup(0, [3]),
            FinAbGroup(0, [2, 2]), FinAbGroup(0, [6]), FinAbGroup.trivial()]
    for _ in range(20):
        t, h = rng.choice(pool), rng.choice(pool)
        exts = enumerate_extensions(t, h)
        assert split_extension(t, h) in exts
        for e in exts:
            assert e.order() == t.order() * h.order()
