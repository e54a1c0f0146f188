#!/usr/bin/env python3
"""Independent exact MST-length expectations for tiny graphs.

Self-contained on purpose: no imports from the package, so its output can
serve as ground truth for the library's tests.

Method: with i.i.d. uniform-[0,1] edge weights, condition on the weight
ordering of the m edges.  Every ordering is equally likely (1/m!), Kruskal's
greedy run depends only on the ordering, and the k-th smallest of m uniforms
has mean k/(m+1).  Hence

    E[L] = (1/m!) * sum over orderings of sum of k/(m+1) over accepted ranks.

Exact with Fraction; practical for m <= 8.
"""

from fractions import Fraction
from itertools import permutations


def mst_expectation_by_rank_enumeration(n, edges):
    m = len(edges)
    total = Fraction(0)
    for order in permutations(range(m)):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        picked = 0
        for rank, idx in enumerate(order, start=1):
            u, v = edges[idx]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                total += Fraction(rank, m + 1)
                picked += 1
                if picked == n - 1:
                    break
    import math

    return total / math.factorial(m)


def complete(n):
    return n, [(i, j) for i in range(n) for j in range(i + 1, n)]


def bipartite(a, b):
    return a + b, [(i, a + j) for i in range(a) for j in range(b)]


def cycle(n):
    return n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]


def path(n):
    return n, [(i, i + 1) for i in range(n - 1)]


def star(n):
    return n, [(0, i) for i in range(1, n)]


def main():
    cases = [
        ("K_2", *complete(2)),
        ("K_3", *complete(3)),
        ("K_4", *complete(4)),
        ("K_{3,2}", *bipartite(3, 2)),
        ("C_4", *cycle(4)),
        ("C_5", *cycle(5)),
        ("C_6", *cycle(6)),
        ("P_4", *path(4)),
        ("P_5", *path(5)),
        ("star_6", *star(6)),
    ]
    for name, n, edges in cases:
        value = mst_expectation_by_rank_enumeration(n, edges)
        print(f"{name:9s} n={n} m={len(edges)}  E[L] = {value} = {float(value):.10f}")


if __name__ == "__main__":
    main()
