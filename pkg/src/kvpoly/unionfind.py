"""Disjoint sets, plain and with parity labels."""

from __future__ import annotations

from typing import Hashable, Iterable


class UnionFind:
    def __init__(self, items: Iterable[Hashable] = ()):
        self.parent: dict = {}
        for x in items:
            self.add(x)

    def add(self, x) -> None:
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def groups(self) -> list[list]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())

    def __len__(self) -> int:
        return sum(1 for x in self.parent if self.parent[x] == x)


class ParityUnionFind:
    """Union-find over boolean variables with constraints ``x ^ y == p``.

    ``find`` returns ``(root, parity)`` with ``x == root ^ parity``.  A
    constraint that disagrees with earlier ones marks the system
    inconsistent instead of raising.
    """

    def __init__(self, items: Iterable[Hashable] = ()):
        self.parent: dict = {}
        self.parity: dict = {}
        self.consistent = True
        for x in items:
            self.add(x)

    def add(self, x) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.parity[x] = 0

    def find(self, x) -> tuple:
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        # compress, accumulating parity from the top down
        acc = 0
        for node in reversed(path):
            acc ^= self.parity[node]
            self.parent[node] = root
            self.parity[node] = acc
        return root, (self.parity[path[0]] if path else 0)

    def union(self, x, y, p: int) -> bool:
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            if px ^ py != p:
                self.consistent = False
                return False
            return True
        self.parent[ry] = rx
        self.parity[ry] = px ^ py ^ p
        return True

    def roots(self) -> list:
        return [x for x in self.parent if self.parent[x] == x]
