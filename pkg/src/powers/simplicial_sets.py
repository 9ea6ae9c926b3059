"""
Finite simplicial sets used as weights.

This module handles:
- FiniteSimplicialSet: levels with all faces d_0..d_n and degeneracies
- The standard simplex Δ[k] and its horns Λ^k_j, truncated at a depth
- The simplicial identities checked elementwise
"""

from dataclasses import dataclass

import pandas as pd

from ..base_category.elements import render
from ..base_category.sets import FiniteSet, Morph
from ..combinatorics.simplex import enumerate_hom
from ..utils.errors import DomainError

CHECK_COLUMNS = ["axiom", "n", "i", "j", "checked", "passed", "witness"]


@dataclass(frozen=True, eq=False)
class FiniteSimplicialSet:
    """
    A truncated simplicial set.

    faces[(n, i)]: A_n -> A_{n-1} for 0 <= i <= n
    degeneracies[(n, i)]: A_n -> A_{n+1} for 0 <= i <= n < depth
    """

    levels: tuple
    faces: dict
    degeneracies: dict
    name: str = "A"

    @property
    def depth(self):
        return len(self.levels) - 1

    def level(self, n):
        return self.levels[n]

    def face(self, n, i):
        return self.faces[(n, i)]

    def degeneracy(self, n, i):
        return self.degeneracies[(n, i)]


def _simplex_like(k, depth, keep, name):
    """Levels are value tuples of maps [n] -> [k] accepted by `keep`."""
    levels = tuple(
        FiniteSet(tuple(phi.values for phi in enumerate_hom(n, k) if keep(phi.values)), f"{name}_{n}")
        for n in range(depth + 1)
    )
    faces, degeneracies = {}, {}
    for n in range(1, depth + 1):
        for i in range(n + 1):
            faces[(n, i)] = Morph(levels[n], levels[n - 1], lambda a, i=i: a[:i] + a[i + 1:], f"d{i}")
    for n in range(depth):
        for i in range(n + 1):
            degeneracies[(n, i)] = Morph(levels[n], levels[n + 1], lambda a, i=i: a[: i + 1] + a[i:], f"s{i}")
    return FiniteSimplicialSet(levels, faces, degeneracies, name)


def standard_simplex(k, depth):
    """Δ[k]: the n-simplices are the monotone maps [n] -> [k]."""
    return _simplex_like(k, depth, lambda values: True, f"D[{k}]")


def horn(k, j, depth):
    """
    Λ^k_j: the maps into [k] whose image misses some vertex other than j.
    """
    if not 0 <= j <= k:
        raise DomainError(f"no horn Λ^{k}_{j}")
    others = set(range(k + 1)) - {j}
    return _simplex_like(k, depth, lambda values: not others <= set(values), f"L[{k},{j}]")


def check_simplicial_identities(A):
    """
    d d, d s and s s identities on every level of a finite simplicial set.

    Returns:
        DataFrame with columns axiom, n, i, j, checked, passed, witness
    """
    rows = []

    def record(axiom, n, i, j, lhs, rhs):
        witness = None
        for a in A.level(n).elements:
            left, right = a, a
            for f in lhs:
                left = f(left)
            for f in rhs:
                right = f(right)
            if left != right:
                witness = render(a)
                break
        rows.append({"axiom": axiom, "n": n, "i": i, "j": j, "checked": len(A.level(n)),
                     "passed": witness is None, "witness": witness})

    d, s = A.face, A.degeneracy
    for n in range(2, A.depth + 1):
        for j in range(n + 1):
            for i in range(j):
                record("dd", n, i, j, [d(n, j), d(n - 1, i)], [d(n, i), d(n - 1, j - 1)])
    for n in range(A.depth):
        for j in range(n + 1):
            for i in range(n + 2):
                if i < j:
                    record("ds", n, i, j, [s(n, j), d(n + 1, i)], [d(n, i), s(n - 1, j - 1)])
                elif i in (j, j + 1):
                    record("ds=1", n, i, j, [s(n, j), d(n + 1, i)], [])
                else:
                    record("ds", n, i, j, [s(n, j), d(n + 1, i)], [d(n, i - 1), s(n - 1, j)])
    for n in range(A.depth - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                record("ss", n, i, j, [s(n, j), s(n + 1, i)], [s(n, i), s(n + 1, j + 1)])
    return pd.DataFrame(rows, columns=CHECK_COLUMNS)
