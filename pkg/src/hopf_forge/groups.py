"""Finite groups given by multiplication tables."""
from __future__ import annotations

from itertools import permutations


class NotAGroup(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class FiniteGroup:
    def __init__(self, table, labels=None, name="G"):
        n = len(table)
        self.table = [list(row) for row in table]
        self.order = n
        self.labels = tuple(labels) if labels else tuple(f"g{i}" for i in range(n))
        self.name = name
        self._validate()
        self.inv = [next(h for h in range(n) if self.table[g][h] == self.e) for g in range(n)]

    def _validate(self):
        n = self.order
        t = self.table
        for row in t:
            if len(row) != n or any(not 0 <= x < n for x in row):
                raise NotAGroup("table is not a closed n x n array")
        es = [e for e in range(n) if all(t[e][g] == g and t[g][e] == g for g in range(n))]
        if not es:
            raise NotAGroup("no identity element")
        self.e = es[0]
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if t[t[a][b]][c] != t[a][t[b][c]]:
                        raise NotAGroup("multiplication is not associative", witness=(a, b, c))
        for g in range(n):
            if not any(t[g][h] == self.e and t[h][g] == self.e for h in range(n)):
                raise NotAGroup("element has no inverse", witness=(g,))

    def mul(self, a, b):
        return self.table[a][b]

    def conj(self, g, h):
        """g h g^-1"""
        return self.table[self.table[g][h]][self.inv[g]]

    def is_abelian(self):
        return all(self.table[a][b] == self.table[b][a] for a in range(self.order) for b in range(self.order))


def cyclic_group(n):
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = ["1" if a == 0 else ("K" if a == 1 else f"K^{a}") for a in range(n)]
    return FiniteGroup(table, labels, name=f"Z{n}")


def symmetric_group(k):
    perms = sorted(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    # (p q)(x) = p(q(x))
    table = [[index[tuple(p[q[x]] for x in range(k))] for q in perms] for p in perms]
    labels = []
    for p in perms:
        labels.append("e" if p == tuple(range(k)) else "".join(str(x + 1) for x in p))
    return FiniteGroup(table, labels, name=f"S{k}")


def direct_product(G, H):
    n, m = G.order, H.order
    table = [[G.mul(a // m, b // m) * m + H.mul(a % m, b % m) for b in range(n * m)] for a in range(n * m)]
    labels = [f"({G.labels[a // m]},{H.labels[a % m]})" for a in range(n * m)]
    return FiniteGroup(table, labels, name=f"{G.name}x{H.name}")
