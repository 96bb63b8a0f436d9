"""Type A_n combinatorics.

Weights are integer tuples in simple-coroot coordinates, lam[i-1] = <lam, alpha_i^vee>.
Positive roots alpha_i + ... + alpha_j are named by pairs (i, j) with 1 <= i <= j <= n.
"""

from __future__ import annotations

from functools import lru_cache

Weight = tuple[int, ...]


def cartan_entry(i: int, j: int) -> int:
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


def cartan_matrix(n: int) -> list[list[int]]:
    return [[cartan_entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]


@lru_cache(maxsize=None)
def root_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """All (i, j) with 1 <= i <= j <= n in lexicographic order."""
    return tuple((i, j) for i in range(1, n + 1) for j in range(i, n + 1))


def num_positive_roots(n: int) -> int:
    return n * (n + 1) // 2


def root_weight_coords(root: tuple[int, int], n: int) -> Weight:
    i, j = root
    if not 1 <= i <= j <= n:
        raise ValueError(f"invalid root index {root!r} for rank {n}")
    return tuple(sum(cartan_entry(k, s) for k in range(i, j + 1)) for s in range(1, n + 1))


def simple_root(i: int, n: int) -> Weight:
    return root_weight_coords((i, i), n)


def rho(n: int) -> Weight:
    return (1,) * n


def w0_weight(lam) -> Weight:
    """Action of the longest Weyl group element: (w0 lam)_i = -lam_{n+1-i}."""
    return tuple(-c for c in reversed(tuple(lam)))


def f_primitive_index(lam, ell: int) -> tuple[int, ...]:
    """Multi-index of the unique F-primitive basis vector of V(lam).

    Component (i, j) is -sum_{s=1}^{i} sum_{t=i}^{j} lam_{n+s-t}, reduced into [0, ell).
    Components are returned in ``root_pairs`` order.
    """
    lam = tuple(lam)
    n = len(lam)
    out = []
    for i, j in root_pairs(n):
        total = sum(lam[n + s - t - 1] for s in range(1, i + 1) for t in range(i, j + 1))
        out.append(-total % ell)
    return tuple(out)


def steinberg_test(lam, ell: int) -> bool:
    """True iff lam = (ell-1) rho mod ell * weight lattice."""
    return all(c % ell == ell - 1 for c in lam)


def parse_weight(text: str) -> Weight:
    """Parse ``"1,0,2"`` into a weight."""
    text = text.strip()
    if not text:
        raise ValueError("empty weight")
    return tuple(int(part) for part in text.split(","))
