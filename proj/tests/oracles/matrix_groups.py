"""Independent oracle: groups as explicit complex matrix groups, characters
taken as traces. Writes frozen values consumed by the C++ unit tests."""

import itertools
import json
import sys

import numpy as np


def key(m):
    return tuple(np.round(m, 6).flatten().view(float).round(6).tolist())


def close(gens):
    n = gens[0].shape[0]
    ident = np.eye(n, dtype=complex)
    elems = {key(ident): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a @ g
                k = key(b)
                if k not in elems:
                    elems[k] = b
                    nxt.append(b)
        frontier = nxt
        if len(elems) > 4096:
            raise RuntimeError("closure too large")
    return list(elems.values())


def classes(elems):
    index = {key(e): i for i, e in enumerate(elems)}
    inv = [np.linalg.inv(e) for e in elems]
    seen = [False] * len(elems)
    out = []
    for i, x in enumerate(elems):
        if seen[i]:
            continue
        cls = set()
        for g, gi in zip(elems, inv):
            cls.add(index[key(gi @ x @ g)])
        for c in cls:
            seen[c] = True
        out.append(sorted(cls))
    return out, index


def facts(name, gens, kmax=6):
    elems = close(gens)
    cls, index = classes(elems)
    chi = [np.trace(elems[c[0]]) for c in cls]
    reps = [elems[c[0]] for c in cls]
    r = len(cls)
    power_sums = [int(round(sum(v ** k for v in chi).real)) for k in range(1, min(r, kmax) + 1)]
    endo = []
    center = 0
    for x in reps:
        cent = [e for e in elems if np.allclose(e @ x, x @ e)]
        if len(cent) == len(elems):
            center += 1
        endo.append(int(round(sum(abs(np.trace(c)) ** 2 for c in cent).real / len(cent))))
    return {
        "name": name,
        "order": len(elems),
        "classes": r,
        "center": center,
        "degree": gens[0].shape[0],
        "power_sums": power_sums,
        "centralizer_endo_sum": sum(endo),
        "centralizer_endo_sorted": sorted(endo),
    }


def rot(n, k=1):
    t = 2 * np.pi * k / n
    return np.array([[np.cos(t), -np.sin(t)], [np.sin(t), np.cos(t)]], dtype=complex)


REFL = np.array([[1, 0], [0, -1]], dtype=complex)
I2 = np.eye(2, dtype=complex)
QI = np.array([[1j, 0], [0, -1j]])
QJ = np.array([[0, 1], [-1, 0]], dtype=complex)
QK = QI @ QJ


def quat(a, b, c, d):
    return a * I2 + b * QI + c * QJ + d * QK


def bindihedral(n):
    z = np.exp(1j * np.pi / n)
    return [np.array([[z, 0], [0, np.conj(z)]]), QJ]


def binary(kind):
    w = quat(-0.5, 0.5, 0.5, 0.5)
    if kind == "T":
        return [QI, QJ, w]
    if kind == "O":
        return [QI, QJ, w, quat(1, 1, 0, 0) / np.sqrt(2)]
    phi = (1 + 5 ** 0.5) / 2
    return [QI, QJ, w, quat(phi / 2, 1 / (2 * phi), 0.5, 0)]


X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)


def kron_at(m, pos, n):
    out = np.eye(1, dtype=complex)
    for i in range(n):
        out = np.kron(out, m if i == pos else I2)
    return out


def extraspecial(n, plus):
    if n == 0:
        return [np.array([[-1]], dtype=complex)]
    gens = []
    for i in range(n):
        if i == n - 1 and not plus:
            gens += [kron_at(1j * X, i, n), kron_at(1j * Z, i, n)]
        else:
            gens += [kron_at(X, i, n), kron_at(Z, i, n)]
    return gens


def main():
    out = []
    out.append(facts("dihedral:3", [rot(3), REFL]))
    for n in range(4, 13):
        out.append(facts(f"dihedral:{n}", [rot(n), REFL]))
    for n in range(2, 7):
        out.append(facts(f"bindihedral:{n}", bindihedral(n)))
    for kind in "TOI":
        out.append(facts(f"binary:{kind}", binary(kind)))
    for n in range(0, 5):
        for plus in (True, False):
            out.append(facts(f"extraspecial:{'+' if plus else '-'}:{n}", extraspecial(n, plus)))
    json.dump(out, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
