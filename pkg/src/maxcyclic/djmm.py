"""The maximal cyclic modules V(lam) of the small quantum group of type A_n.

V(lam) has basis u_m, m in (Z/ell)^{n(n+1)/2}, with components m_ij for
1 <= i <= j <= n.  Basis ordinals are mixed-radix with m_11 the least
significant digit and pairs in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import PrimeField, cyclotomic_field, is_prime, specialize_v1, check_ell
from .linalg import SparseOperator
from .root_data import num_positive_roots, root_pairs


def dimension(n: int, ell: int) -> int:
    return ell ** num_positive_roots(n)


def index_rank(m, ell: int) -> int:
    out = 0
    for digit in reversed(tuple(m)):
        out = out * ell + digit % ell
    return out


def index_unrank(k: int, n: int, ell: int) -> tuple[int, ...]:
    out = []
    for _ in range(num_positive_roots(n)):
        k, d = divmod(k, ell)
        out.append(d)
    return tuple(out)


class _Index:
    """Read access m_hat(s, t): the component if 1 <= s <= t <= n, else 0."""

    __slots__ = ("n", "pos", "m")

    def __init__(self, n: int, m: tuple):
        self.n = n
        self.pos = {pair: k for k, pair in enumerate(root_pairs(n))}
        self.m = m

    def __call__(self, s: int, t: int) -> int:
        k = self.pos.get((s, t))
        return 0 if k is None else self.m[k]


def _shift(m: tuple, pos: dict, pairs, sign: int, ell: int) -> tuple:
    out = list(m)
    for pair in pairs:
        k = pos[pair]
        out[k] = (out[k] + sign) % ell
    return tuple(out)


def e_terms(m: tuple, n: int, ell: int, i: int):
    """(bracket argument, target multi-index) for each summand of E_i u_m."""
    mh = _Index(n, m)
    for k in range(i, n + 1):
        arg = mh(i, k) + mh(i, k - 1) - mh(i - 1, k - 1) - mh(i + 1, k)
        yield arg, _shift(m, mh.pos, [(i, t) for t in range(k, n + 1)], 1, ell)


def f_terms(m: tuple, lam, n: int, ell: int, i: int):
    """(bracket argument, target multi-index) for each summand of F_i u_m."""
    mh = _Index(n, m)
    lam_i = lam[i - 1]
    for k in range(1, i + 1):
        arg = (-lam_i + mh(i + 1 - k, n - k) - mh(i + 1 - k, n + 1 - k)
               + mh(i - k, n + 1 - k) - mh(i - k, n - k))
        diag = [(i + 1 - k + t, n + 1 - k + t) for t in range(k)]
        yield arg, _shift(m, mh.pos, diag, -1, ell)


def k_exponent(m: tuple, lam, n: int, i: int) -> int:
    mh = _Index(n, m)
    return lam[i - 1] + 2 * mh(i, n) - mh(i - 1, n) - mh(i + 1, n)


def weight_of_basis(m, lam, ell: int) -> tuple[int, ...]:
    """u0-weight of u_m as residues mod ell: K_i acts on u_m by zeta^(component i)."""
    lam = tuple(lam)
    n = len(lam)
    m = tuple(m)
    return tuple(k_exponent(m, lam, n, i) % ell for i in range(1, n + 1))


@dataclass(frozen=True)
class ModuleData:
    n: int
    ell: int
    lam: tuple
    domain: str  # "cyclotomic" or "fp"
    field: object
    E: tuple
    F: tuple
    K: tuple

    @property
    def dim(self) -> int:
        return dimension(self.n, self.ell)

    @property
    def K_inv(self) -> tuple:
        return tuple(
            SparseOperator.diagonal([k.cols[c][c].inv() for c in range(k.dim)], self.field)
            for k in self.K
        )

    def generators(self) -> list:
        return list(self.E) + list(self.F) + list(self.K) + list(self.K_inv)

    def operators(self) -> dict:
        out = {}
        for name, ops in (("E", self.E), ("F", self.F), ("K", self.K)):
            for i, op in enumerate(ops, 1):
                out[f"{name}{i}"] = op
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ell": self.ell,
            "lambda": list(self.lam),
            "domain": self.domain,
            "operators": {
                name: [[r, c, v.to_json()] for c, r, v in op.entries()]
                for name, op in sorted(self.operators().items())
            },
        }


def _build(lam, ell: int, field, bracket, kpow, domain: str) -> ModuleData:
    lam = tuple(int(c) for c in lam)
    n = len(lam)
    if n < 1:
        raise ValueError("rank must be at least 1")
    dim = dimension(n, ell)
    E = [dict() for _ in range(n)]
    F = [dict() for _ in range(n)]
    K = [[None] * dim for _ in range(n)]
    for col in range(dim):
        m = index_unrank(col, n, ell)
        for i in range(1, n + 1):
            for store, terms in ((E, e_terms(m, n, ell, i)), (F, f_terms(m, lam, n, ell, i))):
                column = store[i - 1].setdefault(col, {})
                for arg, target in terms:
                    c = bracket(arg)
                    if c:
                        row = index_rank(target, ell)
                        column[row] = column[row] + c if row in column else c
            K[i - 1][col] = kpow(k_exponent(m, lam, n, i))
    return ModuleData(
        n=n,
        ell=ell,
        lam=lam,
        domain=domain,
        field=field,
        E=tuple(SparseOperator(dim, field, cols) for cols in E),
        F=tuple(SparseOperator(dim, field, cols) for cols in F),
        K=tuple(SparseOperator.diagonal(vals, field) for vals in K),
    )


def build_module(lam, ell: int) -> ModuleData:
    """V(lam) over the cyclotomic field Q[v]/(phi_ell)."""
    check_ell(ell)
    K = cyclotomic_field(ell)
    return _build(lam, ell, K, K.qint, K.power, "cyclotomic")


def build_module_fp(lam, p: int) -> ModuleData:
    """V_p(lam) built directly with integer brackets r mod p and K_i = 1."""
    check_ell(p)
    if not is_prime(p):
        raise ValueError("specialization requires prime ell")
    Fp = PrimeField(p)
    return _build(lam, p, Fp, Fp, lambda e: Fp.one, "fp")


def dual_module(M: ModuleData) -> ModuleData:
    """tau-dual on the dual basis: E' = F^T, F' = E^T, K' = K."""
    return ModuleData(
        n=M.n,
        ell=M.ell,
        lam=M.lam,
        domain=M.domain,
        field=M.field,
        E=tuple(op.transpose() for op in M.F),
        F=tuple(op.transpose() for op in M.E),
        K=tuple(op.transpose() for op in M.K),
    )


def reduce_mod_p(M: ModuleData) -> ModuleData:
    """V_B(lam) tensored with F_p along v -> 1."""
    if M.domain != "cyclotomic":
        raise ValueError("module is already over a prime field")
    p = M.ell
    if not is_prime(p):
        raise ValueError("specialization requires prime ell")
    Fp = PrimeField(p)

    def to_fp(x):
        return specialize_v1(x, p)

    def conv(ops):
        return tuple(op.map(to_fp, Fp) for op in ops)

    return ModuleData(M.n, p, M.lam, "fp", Fp, conv(M.E), conv(M.F), conv(M.K))
