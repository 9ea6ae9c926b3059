"""
Combinatorics of the simplex category Δ and its top-preserving part Δ_r.

This module handles:
- Monotone maps [m] -> [n] stored as dense value tuples
- Face and degeneracy generators, composition and factorization
- The monad R = (-)+1 on Δ_r and the functor U_R
- The maps χ^m_j into [1] and top-preserving extension
- Exhaustive enumeration of hom-sets, in lexicographic order
"""

from dataclasses import dataclass
from functools import cache
from itertools import combinations_with_replacement

from ..utils.errors import DomainError


@dataclass(frozen=True, order=True)
class SimplexMap:
    """
    A monotone map [dom] -> [cod].

    Equality is equality of the value tuples, so the dense form is canonical.
    """

    dom: int
    cod: int
    values: tuple

    def __post_init__(self):
        if self.dom < 0 or self.cod < 0:
            raise DomainError(f"ordinals must be non-negative, got [{self.dom}] -> [{self.cod}]")
        if len(self.values) != self.dom + 1:
            raise DomainError(f"{self.values} does not have {self.dom + 1} values")
        if any(v < 0 or v > self.cod for v in self.values):
            raise DomainError(f"{self.values} leaves [0, {self.cod}]")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise DomainError(f"{self.values} is not monotone")

    def __call__(self, i):
        return self.values[i]

    def __str__(self):
        return f"[{self.dom}]->[{self.cod}]{self.values}"

    @property
    def image(self):
        return frozenset(self.values)


def simplex_map(values, cod):
    """Builds the map with the given value sequence into [cod]."""
    values = tuple(values)
    return SimplexMap(len(values) - 1, cod, values)


def identity(n):
    return SimplexMap(n, n, tuple(range(n + 1)))


def face(n, i):
    """
    δ_i: [n] -> [n+1], the injection skipping i.

    Args:
        n: Domain ordinal
        i: Skipped value, 0 <= i <= n+1

    Returns:
        SimplexMap
    """
    if not 0 <= i <= n + 1:
        raise DomainError(f"face index {i} out of range for [{n}] -> [{n + 1}]")
    return SimplexMap(n, n + 1, tuple(k if k < i else k + 1 for k in range(n + 1)))


def degeneracy(n, i):
    """σ_i: [n+1] -> [n], the surjection repeating i."""
    if not 0 <= i <= n:
        raise DomainError(f"degeneracy index {i} out of range for [{n + 1}] -> [{n}]")
    return SimplexMap(n + 1, n, tuple(k if k <= i else k - 1 for k in range(n + 2)))


def generator(kind, n, i):
    """
    Returns a face or degeneracy generator.

    Args:
        kind: "face" (δ_i: [n] -> [n+1]) or "degeneracy" (σ_i: [n+1] -> [n])
        n: Ordinal index as in the subscript convention above
        i: Generator index

    Returns:
        SimplexMap
    """
    if kind == "face":
        return face(n, i)
    if kind == "degeneracy":
        return degeneracy(n, i)
    raise DomainError(f"unknown generator kind {kind!r}")


def compose(g, f):
    """g ∘ f, evaluated pointwise."""
    if f.cod != g.dom:
        raise DomainError(f"cannot compose {g} after {f}: [{f.cod}] != [{g.dom}]")
    return SimplexMap(f.dom, g.cod, tuple(g.values[v] for v in f.values))


def is_top_preserving(f):
    return f.values[-1] == f.cod


def is_injective(f):
    return len(set(f.values)) == len(f.values)


def is_surjective(f):
    return len(f.image) == f.cod + 1


def factorize(phi):
    """
    Splits φ: [m] -> [n] as ι ∘ ψ with ψ top-preserving.

    k = φ(m), ψ: [m] -> [k] has the values of φ and ι = δ_n ... δ_{k+1} is the
    initial-segment inclusion [k] -> [n]. The pair (k, ψ) is unique.

    Returns:
        Tuple (k, ψ)
    """
    k = phi.values[-1]
    return k, SimplexMap(phi.dom, k, phi.values)


def inclusion(k, n):
    """The initial-segment inclusion ι: [k] -> [n]."""
    if k > n:
        raise DomainError(f"no inclusion [{k}] -> [{n}]")
    return SimplexMap(k, n, tuple(range(k + 1)))


def chi(m, j):
    """
    χ^m_j: [m] -> [1], sending i to 0 if i < j and to 1 otherwise.

    Top-preserving iff j <= m.
    """
    if not 0 <= j <= m + 1:
        raise DomainError(f"chi index {j} out of range for [{m}]")
    return SimplexMap(m, 1, tuple(0 if i < j else 1 for i in range(m + 1)))


def apply_R(psi):
    """ψ + 1: extends a top-preserving map by sending the new top to the new top."""
    if not is_top_preserving(psi):
        raise DomainError(f"{psi} is not top-preserving")
    return SimplexMap(psi.dom + 1, psi.cod + 1, psi.values + (psi.cod + 1,))


def apply_UR(phi):
    """U_R φ: [m+1] -> [n+1], agreeing with φ below the top."""
    return SimplexMap(phi.dom + 1, phi.cod + 1, phi.values + (phi.cod + 1,))


def top_extension(theta):
    """
    θ̄: [m+1] -> [n] extending θ: [m] -> [n] by sending m+1 to n.

    θ̄ ∘ δ_{m+1} = θ and θ̄ is top-preserving.
    """
    return SimplexMap(theta.dom + 1, theta.cod, theta.values + (theta.cod,))


@cache
def enumerate_hom(m, n, which="delta"):
    """
    Lists Δ(m, n) or Δ_r(m, n) in lexicographic order of values.

    |Δ(m, n)| = C(m+n+1, m+1) and |Δ_r(m, n)| = C(m+n, m).

    Args:
        m: Domain ordinal
        n: Codomain ordinal
        which: "delta" for all monotone maps, "delta_r" for top-preserving ones

    Returns:
        Tuple of SimplexMaps
    """
    if which not in ("delta", "delta_r"):
        raise DomainError(f"unknown hom kind {which!r}")
    maps = (SimplexMap(m, n, values) for values in combinations_with_replacement(range(n + 1), m + 1))
    if which == "delta_r":
        return tuple(f for f in maps if is_top_preserving(f))
    return tuple(maps)


def mono_epi(phi):
    """
    Epi-mono factorization φ = μ ∘ ε.

    Returns:
        Tuple (missing, repeats): the values of [cod] outside the image, and
        the positions j with φ(j) = φ(j+1). Applying d_c for c in missing
        (largest first) and then s_j for j in repeats (smallest first) gives
        the presheaf action φ*.
    """
    missing = tuple(c for c in range(phi.cod + 1) if c not in phi.image)
    repeats = tuple(j for j in range(phi.dom) if phi.values[j] == phi.values[j + 1])
    return missing, repeats


def r_bijection_image(m, n):
    """
    Images of Δ_r(m, n) + Δ(m, n-1) under [σ_n ∘ R(-), U_R(-)] in Δ_r(m+1, n).

    Returns:
        List of SimplexMaps, one per element of the disjoint union, in order
    """
    left = [compose(degeneracy(n, n), apply_R(psi)) for psi in enumerate_hom(m, n, "delta_r")]
    # U_R lands in [n] when applied to maps into [n-1]
    right = [apply_UR(phi) for phi in enumerate_hom(m, n - 1)] if n >= 1 else []
    return left + right
