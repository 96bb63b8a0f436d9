"""Structural checks on constructed modules V(lam) and their mod-p reductions."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .cyclotomic import cyclotomic_field, specialize_v1
from .djmm import (
    ModuleData,
    build_module,
    build_module_fp,
    dual_module,
    index_unrank,
    k_exponent,
    reduce_mod_p,
    weight_of_basis,
)
from .lift import lift_obstruction, verify_certificate
from .linalg import SparseOperator, SubspaceBasis, common_nullspace, submodule_closure
from .root_data import (
    cartan_entry,
    f_primitive_index,
    root_pairs,
    root_weight_coords,
    steinberg_test,
    w0_weight,
)


@dataclass
class RelationReport:
    results: list = dc_field(default_factory=list)  # (name, holds, witness)

    def add(self, name: str, lhs: SparseOperator, rhs: SparseOperator) -> None:
        witness = lhs.first_difference(rhs)
        self.results.append((name, witness is None, witness))

    @property
    def ok(self) -> bool:
        return all(holds for _, holds, _ in self.results)

    def failures(self) -> list:
        return [(name, w) for name, holds, w in self.results if not holds]

    def to_json(self) -> dict:
        return {
            name: {"holds": holds, "witness": None if w is None else list(w)}
            for name, holds, w in self.results
        }


def _scalars(M: ModuleData):
    """zeta**a, [r] and 1/(zeta - zeta^-1) in the coefficient field of M.

    Over F_p these are the v -> 1 images of the cyclotomic values; the
    commutator is never divided by zeta - zeta^-1 there.
    """
    K = cyclotomic_field(M.ell)
    if M.domain == "cyclotomic":
        return K.power, K.qint
    p = M.ell
    return (lambda a: M.field.one), (lambda r: specialize_v1(K.qint(r), p))


def cartan_diagonal(M: ModuleData, i: int) -> SparseOperator:
    """(K_i - K_i^-1) / (zeta - zeta^-1), i.e. [exponent of K_i] on each u_m."""
    _, qint = _scalars(M)
    vals = [qint(k_exponent(index_unrank(c, M.n, M.ell), M.lam, M.n, i)) for c in range(M.dim)]
    return SparseOperator.diagonal(vals, M.field)


def check_relations(M: ModuleData) -> RelationReport:
    rep = RelationReport()
    n, ell, dim, fld = M.n, M.ell, M.dim, M.field
    zpow, qint = _scalars(M)
    one = SparseOperator.identity(dim, fld)
    zero = SparseOperator(dim, fld)
    E, F, K, Kinv = M.E, M.F, M.K, M.K_inv
    rng = range(n)
    for i, j in itertools.product(rng, rng):
        if i < j:
            rep.add(f"K{i+1}K{j+1}=K{j+1}K{i+1}", K[i] @ K[j], K[j] @ K[i])
    for i in rng:
        rep.add(f"K{i+1}K{i+1}^-1=1", K[i] @ Kinv[i], one)
    for i, j in itertools.product(rng, rng):
        a = cartan_entry(i + 1, j + 1)
        rep.add(f"K{i+1}E{j+1}K{i+1}^-1=z^{a}E{j+1}", K[i] @ E[j] @ Kinv[i], E[j].scale(zpow(a)))
        rep.add(f"K{i+1}F{j+1}K{i+1}^-1=z^{-a}F{j+1}", K[i] @ F[j] @ Kinv[i], F[j].scale(zpow(-a)))
    for i, j in itertools.product(rng, rng):
        lhs = E[i] @ F[j] - F[j] @ E[i]
        if i == j:
            if M.domain == "cyclotomic":
                z = fld.zeta
                rhs = (K[i] - Kinv[i]).scale((z - z.inv()).inv())
            else:
                rhs = cartan_diagonal(M, i + 1)
        else:
            rhs = zero
        rep.add(f"E{i+1}F{j+1}-F{j+1}E{i+1}", lhs, rhs)
    q2 = qint(2)
    for i, j in itertools.product(rng, rng):
        for name, X in (("E", E), ("F", F)):
            if abs(i - j) == 1:
                serre = X[i] @ X[i] @ X[j] - (X[i] @ X[j] @ X[i]).scale(q2) + X[j] @ X[i] @ X[i]
                rep.add(f"serre_{name}{i+1}{name}{j+1}", serre, zero)
            elif i < j and abs(i - j) > 1:
                rep.add(f"{name}{i+1}{name}{j+1}={name}{j+1}{name}{i+1}", X[i] @ X[j], X[j] @ X[i])
    for i in rng:
        rep.add(f"E{i+1}^ell=0", E[i] ** ell, zero)
        rep.add(f"F{i+1}^ell=0", F[i] ** ell, zero)
        rep.add(f"K{i+1}^ell=1", K[i] ** ell, one)
    return rep


def primitive_vectors(M: ModuleData, side: str) -> SubspaceBasis:
    """Common kernel of all E_i (side "E") or all F_i (side "F")."""
    if side == "E":
        return common_nullspace(M.E)
    if side == "F":
        return common_nullspace(M.F)
    raise ValueError(f"side must be 'E' or 'F', got {side!r}")


@dataclass
class SocleResult:
    socle_dim: int
    is_simple: bool
    head_dim: int
    head_support: list  # ordinals carrying the E-primitive vector of the tau-dual


def socle_analysis(M: ModuleData) -> SocleResult:
    """Dimension of the submodule generated by u_0, and of the head via the tau-dual.

    The head of M is dual to the socle of its tau-dual, which is generated by
    the dual's E-primitive vectors.
    """
    one = M.field.one
    socle = submodule_closure([{0: one}], M.generators())
    D = dual_module(M)
    top = primitive_vectors(D, "E")
    head = submodule_closure(top.vectors, D.generators())
    return SocleResult(len(socle), len(socle) == M.dim, len(head), top.support())


def head_highest_weight(lam, ell: int) -> tuple:
    """w0 lam + 2(ell-1) rho mod ell, the highest weight of the simple head."""
    return tuple((c + 2 * (ell - 1)) % ell for c in w0_weight(lam))


@lru_cache(maxsize=None)
def simple_dim(mu: tuple, ell: int, domain: str) -> int:
    """dim L(mu), read off as the socle of V(mu) (generated by its weight-mu vector u_0)."""
    M = build_module(mu, ell) if domain == "cyclotomic" else build_module_fp(mu, ell)
    return len(submodule_closure([{0: M.field.one}], M.generators()))


def verma_character(lam, ell: int) -> Counter:
    """Weights mod ell of the infinitesimal Verma module with highest weight lam."""
    lam = tuple(lam)
    n = len(lam)
    char = Counter({tuple(c % ell for c in lam): 1})
    for root in root_pairs(n):
        beta = root_weight_coords(root, n)
        nxt = Counter()
        for mu, mult in char.items():
            for c in range(ell):
                nxt[tuple((x - c * b) % ell for x, b in zip(mu, beta))] += mult
        char = nxt
    return char


def module_character(M: ModuleData) -> Counter:
    return Counter(weight_of_basis(index_unrank(k, M.n, M.ell), M.lam, M.ell) for k in range(M.dim))


def character_compare(M: ModuleData) -> bool:
    return module_character(M) == verma_character(M.lam, M.ell)


def _primitive_json(M: ModuleData, basis: SubspaceBasis) -> dict:
    support = [list(index_unrank(k, M.n, M.ell)) for k in basis.support()]
    single = len(basis) == 1 and len(support) == 1
    return {
        "dim": len(basis),
        "support": support[0] if single else None,
        "support_set": support,
    }


def params_json(M: ModuleData) -> dict:
    return {"n": M.n, "ell": M.ell, "lambda": list(M.lam), "domain": M.domain}


def primitives_report(M: ModuleData) -> dict:
    e = _primitive_json(M, primitive_vectors(M, "E"))
    f = _primitive_json(M, primitive_vectors(M, "F"))
    predicted = list(f_primitive_index(M.lam, M.ell))
    f["predicted_index"] = predicted
    f["weight"] = list(weight_of_basis(predicted, M.lam, M.ell))
    f["w0_lambda"] = [c % M.ell for c in w0_weight(M.lam)]
    zero_index = [0] * len(predicted)
    checks = {
        "e_primitive_unique": e["dim"] == 1 and e["support"] == zero_index,
        "f_primitive_unique": f["dim"] == 1 and f["support"] == predicted,
        "f_primitive_weight": f["weight"] == f["w0_lambda"],
    }
    return {"e_primitive": e, "f_primitive": f, "checks": checks}


def socle_report(M: ModuleData) -> dict:
    res = socle_analysis(M)
    steinberg = steinberg_test(M.lam, M.ell)
    mu = head_highest_weight(M.lam, M.ell)
    head_weights = [list(weight_of_basis(index_unrank(k, M.n, M.ell), M.lam, M.ell)) for k in res.head_support]
    return {
        "socle_dim": res.socle_dim,
        "is_simple": res.is_simple,
        "head_dim": res.head_dim,
        "head_equals_socle": res.head_dim == res.socle_dim,
        "head_highest_weight": list(mu),
        "steinberg": steinberg,
        "checks": {
            "simple_iff_steinberg": res.is_simple == steinberg,
            "proper_socle_iff_not_steinberg": (res.socle_dim < M.dim) == (not steinberg),
            "head_weight": head_weights == [list(mu)],
            "head_is_simple": res.head_dim == simple_dim(mu, M.ell, M.domain),
        },
    }


def character_report(M: ModuleData) -> dict:
    mod = module_character(M)
    ver = verma_character(M.lam, M.ell)
    return {
        "character_match": mod == ver,
        "module_character": [[list(k), v] for k, v in sorted(mod.items())],
        "verma_character": [[list(k), v] for k, v in sorted(ver.items())],
        "checks": {"character_match": mod == ver},
    }


def lift_report(M: ModuleData) -> dict:
    cert = lift_obstruction(M)
    steinberg = steinberg_test(M.lam, M.ell)
    return {
        "lift": cert.to_json(),
        "steinberg": steinberg,
        "checks": {
            "certificate_valid": verify_certificate(M, cert),
            "liftable_iff_steinberg": cert.liftable == steinberg,
        },
    }


def relations_report(M: ModuleData) -> dict:
    rep = check_relations(M)
    return {"relations": rep.to_json(), "checks": {"relations": rep.ok}}


def full_report(M: ModuleData) -> dict:
    """Every check for one module, flattened into a single JSON-ready dict."""
    parts = [relations_report(M), primitives_report(M), socle_report(M), lift_report(M)]
    if M.domain == "cyclotomic":
        parts.append(character_report(M))
    out = {"params": params_json(M), "checks": {}}
    for part in parts:
        checks = part.pop("checks")
        out["checks"].update(checks)
        out.update(part)
    out.pop("module_character", None)
    out.pop("verma_character", None)
    out["passed"] = all(out["checks"].values())
    return out


def fp_report(lam, p: int) -> dict:
    """Checks on V_p(lam) = V_B(lam) tensored with F_p."""
    reduced = reduce_mod_p(build_module(lam, p))
    direct = build_module_fp(lam, p)
    match = all(a == b for a, b in zip(reduced.generators(), direct.generators()))
    out = full_report(reduced)
    out["construction_match"] = match
    out["checks"]["construction_match"] = match
    out["passed"] = all(out["checks"].values())
    return out
