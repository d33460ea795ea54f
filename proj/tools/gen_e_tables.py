#!/usr/bin/env python3
"""Regenerates the stored character tables of the binary polyhedral groups.

Builds each group as explicit SU(2) matrices, computes conjugacy classes and
the irreducible characters (Burnside-Dixon eigenvector method), orders the
irreducibles to match the affine E-diagram vertex numbering used in
src/gamma_data.cpp, and prints C++ initializers.
"""
import itertools
import numpy as np

phi = (1 + 5 ** 0.5) / 2


def quat(a, b, c, d):
    return np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]])


def key(m):
    return tuple(np.round(m.flatten(), 6).tolist())


def close(gens):
    elems = {key(np.eye(2)): np.eye(2, dtype=complex)}
    frontier = list(elems.values())
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = g @ x
                k = key(y)
                if k not in elems:
                    elems[k] = y
                    new.append(y)
        frontier = new
    return list(elems.values())


GROUPS = {
    "E6": [quat(0, 1, 0, 0), quat(0, 0, 1, 0), quat(0.5, 0.5, 0.5, 0.5)],
    "E7": [quat(0, 1, 0, 0), quat(0, 0, 1, 0), quat(0.5, 0.5, 0.5, 0.5),
           quat(2 ** -0.5, 2 ** -0.5, 0, 0)],
    "E8": [quat(0.5, 0.5, 0.5, 0.5), quat(phi / 2, 1 / (2 * phi), 0.5, 0)],
}

# affine diagrams in the C++ vertex order
EDGES = {
    "E6": [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)],
    "E7": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)],
    "E8": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)],
}


def classes_of(elems):
    inv = [np.linalg.inv(g) for g in elems]
    index = {key(g): n for n, g in enumerate(elems)}
    seen = [-1] * len(elems)
    classes = []
    for n, x in enumerate(elems):
        if seen[n] >= 0:
            continue
        cls = set()
        for g, gi in zip(elems, inv):
            cls.add(index[key(g @ x @ gi)])
        for m in cls:
            seen[m] = len(classes)
        classes.append(sorted(cls))
    return classes, seen, index


def character_table(elems):
    classes, cls_of, index = classes_of(elems)
    nc = len(classes)
    order = len(elems)
    # direct construction: a_{jl}^k = #{(x,y) in C_j x C_l : x y = z_k}
    a = np.zeros((nc, nc, nc))
    for k in range(nc):
        z = elems[classes[k][0]]
        for j in range(nc):
            for x in classes[j]:
                y = np.linalg.inv(elems[x]) @ z
                a[j, cls_of[index[key(y)]], k] += 1
    rng = np.random.default_rng(1)
    coeffs = rng.normal(size=nc)
    # M_j[l][k] = a[j,l,k]; omega_chi(C_j) omega_chi(C_l) = sum_k a_{jlk} omega_chi(C_k)
    big = sum(c * a[j] for j, c in enumerate(coeffs))
    w, v = np.linalg.eig(big)
    sizes = np.array([len(c) for c in classes])
    rows = []
    for col in range(nc):
        vec = v[:, col]
        vec = vec / vec[0]  # omega(identity class) = 1
        # chi(C_k) = dim * omega(C_k) / |C_k|
        chi0 = vec / sizes
        norm = np.sum(sizes * np.abs(chi0) ** 2) / order
        dim = (1 / norm) ** 0.5
        rows.append(dim * chi0)
    return classes, sizes, np.array(rows)


def snap(z):
    cands = [0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 2 ** 0.5, -(2 ** 0.5),
             phi, -phi, 1 - phi, phi - 1, 0.5, -0.5, 1.5, -1.5,
             3 ** 0.5 / 2, -(3 ** 0.5) / 2, 3 ** 0.5, -(3 ** 0.5)]
    names = {2 ** 0.5: "kSqrt2", -(2 ** 0.5): "-kSqrt2", phi: "kPhi", -phi: "-kPhi",
             1 - phi: "(1.0 - kPhi)", phi - 1: "(kPhi - 1.0)",
             3 ** 0.5 / 2: "kHalfSqrt3", -(3 ** 0.5) / 2: "-kHalfSqrt3",
             3 ** 0.5: "kSqrt3", -(3 ** 0.5): "-kSqrt3"}
    out = []
    for part in (z.real, z.imag):
        for c in cands:
            if abs(part - c) < 1e-8:
                out.append(names.get(c, repr(float(c))))
                break
        else:
            raise SystemExit(f"unrecognised value {part}")
    return out


def main():
    for name, gens in GROUPS.items():
        elems = close(gens)
        classes, sizes, table = character_table(elems)
        nc = len(classes)
        trace = np.array([np.trace(elems[c[0]]) for c in classes])
        triv = next(i for i in range(nc) if np.allclose(table[i], 1))
        vrow = next(i for i in range(nc) if np.allclose(table[i], trace))
        # McKay adjacency between computed irreps
        adj = np.zeros((nc, nc), dtype=int)
        for i in range(nc):
            for j in range(nc):
                val = np.sum(sizes * trace * table[i] * np.conj(table[j])) / len(elems)
                adj[i, j] = int(round(val.real))
        target = np.zeros((nc, nc), dtype=int)
        for x, y in EDGES[name]:
            target[x, y] = target[y, x] = 1
        perm = None
        others = [i for i in range(nc) if i not in (triv, vrow)]
        for p in itertools.permutations(others):
            cand = [triv, vrow] + list(p)  # cand[vertex] = computed irrep row
            if all(adj[cand[x], cand[y]] == target[x, y]
                   for x in range(nc) for y in range(nc)):
                perm = cand
                break
        assert perm is not None, name
        print(f"// {name}: order {len(elems)}")
        print("class_sizes = {" + ", ".join(str(s) for s in sizes) + "};")
        print("characters = {")
        for vtx in range(nc):
            vals = [snap(table[perm[vtx]][k]) for k in range(nc)]
            print("  {" + ", ".join(f"{{{r}, {i}}}" for r, i in vals) + "},")
        print("};")


if __name__ == "__main__":
    main()
