#!/usr/bin/env python3
"""Regenerates the graph6 fixtures in this directory.

flag_biplane11.g6
    Flag graph of the unique 2-(11,5,2) design (points Z_11, blocks the
    translates of the nonzero quadratic residues). Vertices are incident
    (point, block) pairs; (p,B) ~ (q,C) iff p != q, B != C, q in B, p in C.
    55 vertices, 4-regular, girth 5.

biggs_smith.g6
    Cubic distance-regular graph on 102 vertices with intersection array
    {3,2,2,2,1,1,1; 1,1,1,1,1,1,3} (unique with that array). Built from six
    Z_17 orbits arranged in an H-shaped quotient: four 17-gon rings with
    steps 1, 4, 2, 8 and two hub orbits; hub e_i joins rings a_i, b_i and
    hub f_i; hub f_i joins rings c_i, d_i. The step quadruple was found by
    exhaustive search over all H-configurations, filtered by girth 9 and
    certified by the intersection array (see test_exact_walk).

cubic_non_walk_regular.g6
    Connected cubic graph on 8 vertices whose closed-walk counts differ
    between vertices (vertex 0 lies on a triangle, vertex 6 does not), so it
    is not even 0-walk-regular.
"""

import itertools


def graph6(n, edges):
    es = {(min(u, v), max(u, v)) for u, v in edges}
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in es else 0)
    while len(bits) % 6:
        bits.append(0)
    if n <= 62:
        s = chr(n + 63)
    else:
        s = "~" + "".join(chr(((n >> sh) & 63) + 63) for sh in (12, 6, 0))
    for i in range(0, len(bits), 6):
        val = 0
        for bit in bits[i : i + 6]:
            val = (val << 1) | bit
        s += chr(val + 63)
    return s


def flag_biplane11():
    qr = sorted({(x * x) % 11 for x in range(1, 11)})
    blocks = [sorted((q + i) % 11 for q in qr) for i in range(11)]
    for p, q in itertools.combinations(range(11), 2):
        assert sum(1 for b in blocks if p in b and q in b) == 2
    flags = sorted((p, i) for i in range(11) for p in blocks[i])
    idx = {f: n for n, f in enumerate(flags)}
    edges = set()
    for p, i in flags:
        for q, j in flags:
            if p != q and i != j and q in blocks[i] and p in blocks[j]:
                a, b = idx[(p, i)], idx[(q, j)]
                edges.add((min(a, b), max(a, b)))
    assert len(edges) == 110
    return 55, edges


def biggs_smith():
    p = 17
    steps = (1, 4, 2, 8)  # ring steps for orbits a, b (hub e) and c, d (hub f)
    a, b, c, d, e, f = (k * p for k in range(6))
    edges = set()

    def add(u, v):
        edges.add((min(u, v), max(u, v)))

    for i in range(p):
        add(a + i, a + (i + steps[0]) % p)
        add(b + i, b + (i + steps[1]) % p)
        add(c + i, c + (i + steps[2]) % p)
        add(d + i, d + (i + steps[3]) % p)
        add(e + i, a + i)
        add(e + i, b + i)
        add(f + i, c + i)
        add(f + i, d + i)
        add(e + i, f + i)
    assert len(edges) == 153
    return 6 * p, edges


def cubic_non_walk_regular():
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5),
             (3, 6), (3, 7), (4, 6), (4, 7), (5, 6), (5, 7)]
    return 8, edges


def main():
    import pathlib

    here = pathlib.Path(__file__).parent
    for name, builder in [
        ("flag_biplane11.g6", flag_biplane11),
        ("biggs_smith.g6", biggs_smith),
        ("cubic_non_walk_regular.g6", cubic_non_walk_regular),
    ]:
        n, edges = builder()
        (here / name).write_text(graph6(n, edges) + "\n")
        print(f"{name}: n={n}, m={len(edges)}")


if __name__ == "__main__":
    main()
