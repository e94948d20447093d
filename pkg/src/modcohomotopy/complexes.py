"""Built-in triangulations and combinatorial constructions.

Everything here returns a SimplicialComplex.  The projective plane and
torus are the classical minimal triangulations; the 9-vertex complex
projective plane is rebuilt from the affine plane AG(2,3) (each facet is a
line together with two points of the next parallel line), which is verified
against its homology in the test suite.
"""

from __future__ import annotations

from itertools import combinations

from .simplicial import SimplicialComplex


def sphere(n):
    """Boundary of the (n+1)-simplex, a triangulated S^n."""
    verts = range(n + 2)
    return SimplicialComplex(list(combinations(verts, n + 1)),
                             name=f"S^{n}")


def full_simplex(n):
    return SimplicialComplex([tuple(range(n + 1))], name=f"Delta^{n}")


def projective_plane():
    """Minimal 6-vertex triangulation of RP^2 (antipodal icosahedron)."""
    facets = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
              (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5)]
    return SimplicialComplex(facets, name="RP^2")


def torus():
    """Csaszar 7-vertex torus: facets {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    facets = []
    for i in range(7):
        facets.append(tuple(sorted(((i) % 7, (i + 1) % 7, (i + 3) % 7))))
        facets.append(tuple(sorted(((i) % 7, (i + 2) % 7, (i + 3) % 7))))
    return SimplicialComplex(facets, name="T^2")


def pseudo_projective(q):
    """S^1 with a disk attached by a degree-q map: a Moore complex M(Z/q, 1).

    Built from a 3q-gon disk whose boundary wraps q times around a
    3-vertex circle.  Vertices: 0..2 circle, 3..3q+2 inner ring, 3q+3 center.
    """
    if q < 2:
        raise ValueError("need q >= 2 for a nontrivial Moore complex")
    n = 3 * q
    outer = lambda i: i % 3
    ring = lambda i: 3 + (i % n)
    center = 3 + n
    facets = []
    for i in range(n):
        facets.append((outer(i), outer(i + 1), ring(i)))
        facets.append((outer(i + 1), ring(i), ring(i + 1)))
        facets.append((center, ring(i), ring(i + 1)))
    return SimplicialComplex(facets, name=f"M(Z/{q},1)")


def suspension(k, times=1):
    """Simplicial suspension: join with two new apex vertices, iterated."""
    out = k
    for _ in range(times):
        base = out.vertex_count
        facets = []
        for f in out.facets:
            facets.append(f + (base,))
            facets.append(f + (base + 1,))
        name = f"susp({out.name})" if out.name else None
        out = SimplicialComplex(facets, name=name)
    return out


def moore_complex(q, n):
    """Simplicial Moore complex M(Z/q, n) for n >= 1 (suspended model)."""
    return suspension(pseudo_projective(q), n - 1)


def wedge(a, b):
    """One-point union, gluing vertex 0 of both complexes."""
    shift = a.vertex_count - 1
    relabel = lambda v: 0 if v == 0 else v + shift
    facets = list(a.facets) + [tuple(sorted(relabel(v) for v in f))
                               for f in b.facets]
    name = f"({a.name} v {b.name})" if a.name and b.name else None
    return SimplicialComplex(facets, name=name)


# orientation of the parallel classes in the AG(2,3) construction; fixed by
# the homology verification in tests (see cp2_nine below)
_CP2_ORIENTATION = (1, 1, 1, 1)


def _ag23_parallel_classes():
    """The 12 lines of AG(2,3) grouped into 4 parallel classes of 3 lines.

    Points (a, b) of Z_3 x Z_3 are numbered 3a + b.  Within each class the
    lines are indexed 0, 1, 2 by the value of a linear form vanishing on the
    direction of the class.
    """
    point = lambda a, b: 3 * (a % 3) + (b % 3)
    classes = []
    for direction, form in (((0, 1), lambda a, b: a),
                            ((1, 0), lambda a, b: b),
                            ((1, 1), lambda a, b: (a - b) % 3),
                            ((1, 2), lambda a, b: (2 * a - b) % 3)):
        lines = {0: [], 1: [], 2: []}
        for a in range(3):
            for b in range(3):
                lines[form(a, b) % 3].append(point(a, b))
        classes.append([tuple(sorted(lines[c])) for c in range(3)])
    return classes


def cp2_nine(orientation=_CP2_ORIENTATION):
    """The 9-vertex triangulation of CP^2.

    Facets are L union {two points of the next line parallel to L}; the
    cyclic successor within each parallel class is fixed by ``orientation``.
    """
    facets = []
    for eps, lines in zip(orientation, _ag23_parallel_classes()):
        for c in range(3):
            succ = lines[(c + eps) % 3]
            for pair in combinations(succ, 2):
                facets.append(tuple(sorted(lines[c] + pair)))
    return SimplicialComplex(facets, name="CP^2_9")


def disjoint_edges():
    """Two disjoint edges (not connected; only for error-path tests)."""
    return SimplicialComplex([(0, 1), (2, 3)], require_connected=False,
                             name="two edges")


def corpus_small():
    """At least ten complexes with at most 30 simplices in total."""
    cycle5 = SimplicialComplex([(i, (i + 1) % 5) for i in range(5)],
                               name="C_5")
    mobius = SimplicialComplex(
        [(0, 1, 2), (1, 2, 3), (2, 3, 4), (3, 4, 0), (4, 0, 1)],
        name="Mobius")
    cone_c4 = SimplicialComplex(
        [(0, 1, 4), (1, 2, 4), (2, 3, 4), (0, 3, 4)], name="cone(C_4)")
    two_triangles = SimplicialComplex([(0, 1, 2), (1, 2, 3)],
                                      name="two triangles")
    graph_theta = SimplicialComplex([(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)],
                                    name="theta graph")
    return [
        sphere(1),            # 3 + 3 = 6 simplices
        sphere(2),            # 4 + 6 + 4 = 14
        sphere(3),            # 5 + 10 + 10 + 5 = 30
        full_simplex(2),      # 3 + 3 + 1 = 7
        full_simplex(3),      # 15
        cycle5,               # 10
        mobius,               # 5 + 10 + 5 = 20
        cone_c4,              # 5 + 8 + 4 = 17
        two_triangles,        # 4 + 5 + 2 = 11
        graph_theta,          # 9
    ]


def corpus_full():
    """Small corpus plus complexes with torsion and nontrivial operations."""
    return corpus_small() + [
        projective_plane(),
        torus(),
        pseudo_projective(3),
        moore_complex(2, 2),   # suspension of RP^2
        moore_complex(3, 2),
    ]
