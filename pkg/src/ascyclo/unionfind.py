"""Disjoint-set forest over hashable items."""

import collections


class DisjointSet:
    def __init__(self):
        self.parent = {}
        self.rank = {}

    def make_set(self, e):
        if e not in self.parent:
            self.parent[e] = e
            self.rank[e] = 0

    # find with path compression
    def find(self, e):
        self.make_set(e)
        root = e
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[e] != root:
            self.parent[e], e = root, self.parent[e]
        return root

    # union by rank
    def union(self, x, y):
        x_root, y_root = self.find(x), self.find(y)
        if x_root == y_root:
            return
        if self.rank[x_root] < self.rank[y_root]:
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root
        if self.rank[x_root] == self.rank[y_root]:
            self.rank[x_root] += 1

    def groups(self):
        """Lists of members, each list and the outer list in insertion order."""
        out = collections.OrderedDict()
        for e in self.parent:
            out.setdefault(self.find(e), []).append(e)
        return list(out.values())

    def __len__(self):
        return len(self.parent)
