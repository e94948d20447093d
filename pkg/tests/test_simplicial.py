import json

import pytest

from modcohomotopy.cohomology import Coefficients, cohomology_from_pair
from modcohomotopy.complexes import (cp2_nine, full_simplex, moore_complex,
                                     projective_plane, pseudo_projective,
                                     sphere, suspension, torus, wedge)
from modcohomotopy.errors import (CompositionNonzero, DegreeOutOfRange,
                                  NotConnected, ParseError)
from modcohomotopy.matrices import IntMatrix, smith_normal_form
from modcohomotopy.simplicial import SimplicialComplex, parse_complex
from modcohomotopy.abelian import FinAbGroup

Z = Coefficients.integers()
MOD2 = Coefficients.mod(2)


def test_parse_boundary_of_tetrahedron():
    k = parse_complex("""
    # boundary of the 3-simplex
    0 1 2
    0 1 3
    0 2 3
    1 2 3
    """)
    assert k.f_vector() == [4, 6, 4]


def test_parse_json_variant():
    src = json.dumps({"vertices": 4, "name": "dA3",
                      "facets": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]})
    k = parse_complex(src)
    assert k.name == "dA3"
    assert k.f_vector() == [4, 6, 4]
    with pytest.raises(ParseError):
        parse_complex(json.dumps({"vertices": 9, "facets": [[0, 1]]}))


def test_parse_rp2_euler_characteristic():
    k = projective_plane()
    assert k.f_vector() == [6, 15, 10]
    assert k.euler_characteristic() == 1


def test_parse_rejects_disconnected():
    with pytest.raises(NotConnected):
        parse_complex("0 1\n2 3\n")


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_complex("0 a 2\n")
    with pytest.raises(ParseError):
        parse_complex("   \n# nothing\n")


def test_coboundary_single_edge_sign_convention():
    k = SimplicialComplex([(0, 1)])
    mat = k.coboundary_matrix(0)
    assert list(mat) == [(-1, 1)]


def test_coboundary_squares_to_zero():
    for k in (sphere(2), projective_plane(), torus(), cp2_nine()):
        for n in range(k.dim - 1):
            a = k.coboundary_matrix(n)
            b = k.coboundary_matrix(n + 1)
            assert (b * a).is_zero()


def test_coboundary_degree_errors():
    k = sphere(2)
    with pytest.raises(DegreeOutOfRange):
        k.coboundary_matrix(-1)
    with pytest.raises(DegreeOutOfRange):
        k.coboundary_matrix(2)


def test_rp2_coboundary_rank_mod2():
    # rank 9 over Z/2 in degree 1, consistent with H^1(RP^2;Z/2) = Z/2
    k = projective_plane()
    m = k.coboundary_matrix(1)
    snf = smith_normal_form(m)
    rank2 = sum(1 for d in snf.diagonal if d % 2)
    assert m.shape == (10, 15)
    assert rank2 == 9


def test_cohomology_from_pair_examples():
    s2 = sphere(2)
    h2 = cohomology_from_pair(s2.coboundary_matrix(1),
                              IntMatrix.zeros(0, s2.n_cells(2)), Z)
    assert h2.group == FinAbGroup(1, [])

    # both maps zero on k cochains over Z/m gives (Z/m)^k
    h = cohomology_from_pair(IntMatrix.zeros(3, 0), IntMatrix.zeros(0, 3),
                             Coefficients.mod(4))
    assert h.group == FinAbGroup(0, [4, 4, 4])

    assert projective_plane().cohomology(2, Z).group == FinAbGroup(0, [2])


def test_cohomology_composition_guard():
    d_in = IntMatrix.from_rows([[1], [0]])
    d_out = IntMatrix.from_rows([[1, 0]])
    with pytest.raises(CompositionNonzero):
        cohomology_from_pair(d_in, d_out, Z)


def test_cohomology_brute_force_oracle_mod_m():
    # enumerate cocycles and coboundaries directly for tiny complexes
    from itertools import product as iproduct

    for k, m in [(full_simplex(2), 2), (sphere(1), 3), (sphere(2), 2),
                 (full_simplex(2), 4)]:
        for n in range(1, k.dim + 1):
            coeffs = Coefficients.mod(m)
            h = k.cohomology(n, coeffs)
            d_in, d_out = k.cochain_matrices(n)
            cells = k.n_cells(n)
            cocycles = [v for v in iproduct(range(m), repeat=cells)
                        if all(x % m == 0 for x in d_out.apply(list(v)))]
            images = {tuple(x % m for x in d_in.apply(list(w)))
                      for w in iproduct(range(m), repeat=d_in.cols)}
            order = h.group.order()
            assert order == len(cocycles) // len(images)


def test_degree_zero_rejected_and_above_dim_trivial():
    k = sphere(2)
    with pytest.raises(DegreeOutOfRange):
        k.cohomology(0, Z)
    assert k.cohomology(5, Z).group.is_trivial()


def test_cohomology_local_coefficients():
    rp2 = projective_plane()
    h2 = rp2.cohomology(2, Coefficients.local(2))
    assert str(h2.module) == "Z/2"
    h2_odd = rp2.cohomology(2, Coefficients.local(3))
    assert h2_odd.module.is_trivial()
    t = torus()
    h1 = t.cohomology(1, Coefficients.local(5))
    assert h1.module.free_rank == 2 and not h1.module.p_torsion


def test_torus_cohomology():
    t = torus()
    assert t.f_vector() == [7, 21, 14]
    assert t.cohomology(1, Z).group == FinAbGroup(2, [])
    assert t.cohomology(2, Z).group == FinAbGroup(1, [])


def test_moore_complexes():
    m31 = pseudo_projective(3)
    assert m31.cohomology(1, Z).group.is_trivial()
    assert m31.cohomology(2, Z).group == FinAbGroup(0, [3])
    m32 = moore_complex(3, 2)
    assert m32.cohomology(2, Coefficients.mod(3)).group == FinAbGroup(0, [3])
    assert m32.cohomology(3, Coefficients.mod(3)).group == FinAbGroup(0, [3])


def test_cp2_nine_is_a_closed_four_manifold_with_cp2_homology():
    from collections import Counter
    from itertools import combinations

    k = cp2_nine()
    assert k.f_vector() == [9, 36, 84, 90, 36]
    assert k.euler_characteristic() == 3
    tets = Counter()
    for f in k.facets:
        for t in combinations(f, 4):
            tets[t] += 1
    assert set(tets.values()) == {2}
    assert k.cohomology(1, Z).group.is_trivial()
    assert k.cohomology(2, Z).group == FinAbGroup(1, [])
    assert k.cohomology(3, Z).group.is_trivial()
    assert k.cohomology(4, Z).group == FinAbGroup(1, [])


def test_suspension_shifts_cohomology():
    s = suspension(projective_plane())
    assert s.cohomology(3, Z).group == FinAbGroup(0, [2])
    assert s.cohomology(2, Z).group.is_trivial()


def test_wedge_adds_cohomology():
    w = wedge(sphere(1), sphere(2))
    assert w.cohomology(1, Z).group == FinAbGroup(1, [])
    assert w.cohomology(2, Z).group == FinAbGroup(1, [])


def test_representatives_are_cocycles_and_coords_roundtrip():
    for k in (projective_plane(), torus(), sphere(2)):
        for n in (1, 2):
            for coeffs in (Z, MOD2, Coefficients.mod(4)):
                h = k.cohomology(n, coeffs)
                d_out = (k.coboundary_matrix(n) if n < k.dim
                         else IntMatrix.zeros(0, k.n_cells(n)))
                for idx, rep in enumerate(h.reps):
                    image = d_out.apply(rep)
                    if coeffs.is_mod():
                        assert all(x % coeffs.modulus == 0 for x in image)
                    else:
                        assert all(x == 0 for x in image)
                    coords = h.coords_of(rep)
                    expect = [1 if j == idx else 0 for j in range(h.ngens)]
                    assert coords == expect
