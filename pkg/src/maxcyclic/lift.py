"""Deciding whether the mod-ell weight grading of V(lam) lifts to the weight lattice.

A lift is a decomposition V = sum of V_mu over integral weights mu, refining the
mod-ell weight spaces, with every E_i of degree +alpha_i and every F_i of degree
-alpha_i.  Three stages, each producing a certificate that can be rechecked
independently:

1. potential: integral weights on the basis vectors u_m themselves, propagated
   over the action graph.  Success proves a lift.  Failure yields a cycle whose
   signed labels sum to a nonzero weight, which only rules out lifts in which
   every u_m is a weight vector.
2. weight decomposition: the spans of F-words applied to u_0, indexed by the
   integral weight of the word.  If they form a direct sum filling V that is
   stable under every E_i, this is a lift.
3. grading inconsistency: write each weight of a lift as r + ell*kappa with r
   the residue in [0, ell)^n.  The kappa-grading gives, for each coordinate j,
   an operator D_j preserving mod-ell weight spaces with [D_j, X] = c_j X on
   the block of X leaving residue class r, where c is the carry of r + deg X.
   A combination of these linear equations reading 0 = c != 0 proves no lift
   exists.  Working with the carry rather than the full weight keeps the test
   meaningful in characteristic p, where the residue operator itself would
   solve the uncarried system.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass

from .djmm import ModuleData, index_unrank, weight_of_basis
from .linalg import Echelon, inconsistency_certificate
from .root_data import cartan_entry, simple_root


@dataclass
class LiftCertificate:
    """Outcome of ``lift_obstruction``.

    A cycle step is ``(from, to, generator, sign)``: sign +1 follows the action
    edge from -> to, sign -1 walks it backwards.
    """

    liftable: bool | None
    method: str
    potential: dict | None = None
    weight_spaces: dict | None = None
    cycle: list | None = None
    cycle_weight: tuple | None = None
    obstruction: dict | None = None

    def to_json(self) -> dict:
        out = {
            "liftable": self.liftable,
            "method": self.method,
            "cycle": None if self.cycle is None else [list(step) for step in self.cycle],
            "cycle_weight": None if self.cycle_weight is None else list(self.cycle_weight),
        }
        if self.weight_spaces is not None:
            out["weight_space_dims"] = [[list(mu), len(vs)] for mu, vs in sorted(self.weight_spaces.items())]
        if self.obstruction is not None:
            out["obstruction"] = {
                "coordinate": self.obstruction["coordinate"],
                "equations_used": len(self.obstruction["combination"]),
            }
        return out


def _add(a, b, sign=1):
    return tuple(x + sign * y for x, y in zip(a, b))


def _label(gen: str, n: int):
    root = simple_root(int(gen[1:]), n)
    return root if gen[0] == "E" else tuple(-c for c in root)


def action_edges(M: ModuleData) -> list:
    """(source, target, generator name, label) for every nonzero E_i / F_i entry."""
    edges = []
    for name, ops in (("E", M.E), ("F", M.F)):
        for i, op in enumerate(ops, 1):
            label = _label(f"{name}{i}", M.n)
            for c, r, _ in op.entries():
                edges.append((c, r, f"{name}{i}", label))
    return edges


def basis_weights(M: ModuleData) -> list:
    return [weight_of_basis(index_unrank(k, M.n, M.ell), M.lam, M.ell) for k in range(M.dim)]


# -- stage 1 ------------------------------------------------------------------

def graph_potential(M: ModuleData):
    """Return (potential, None) if consistent, else (None, (cycle, weight))."""
    n, dim = M.n, M.dim
    edges = action_edges(M)
    residues = basis_weights(M)
    adj = [[] for _ in range(dim)]
    for s, t, gen, label in edges:
        adj[s].append((t, gen, 1, label))
        adj[t].append((s, gen, -1, label))
    pot: dict = {}
    parent: dict = {}
    depth: dict = {}
    for root in range(dim):
        if root in pot:
            continue
        pot[root] = tuple(M.lam) if root == 0 else residues[root]
        parent[root], depth[root] = None, 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, gen, sign, label in adj[u]:
                if v not in pot:
                    pot[v] = _add(pot[u], label, sign)
                    parent[v] = (u, gen, sign)
                    depth[v] = depth[u] + 1
                    queue.append(v)
    for s, t, gen, label in edges:
        if _add(pot[t], pot[s], -1) != label:
            cycle = [(s, t, gen, 1)] + _tree_path(t, s, parent, depth)
            total = (0,) * n
            for _, _, g, sign in cycle:
                total = _add(total, _label(g, n), sign)
            return None, (cycle, total)
    return pot, None


def _tree_path(a: int, b: int, parent: dict, depth: dict) -> list:
    """Steps walking the spanning forest from a to b (same component)."""
    up, down = [], []
    while depth[a] > depth[b]:
        p, gen, sign = parent[a]
        up.append((a, p, gen, -sign))
        a = p
    while depth[b] > depth[a]:
        p, gen, sign = parent[b]
        down.append((p, b, gen, sign))
        b = p
    while a != b:
        p, gen, sign = parent[a]
        up.append((a, p, gen, -sign))
        a = p
        q, gen, sign = parent[b]
        down.append((q, b, gen, sign))
        b = q
    return up + down[::-1]


# -- stage 2 ------------------------------------------------------------------

def weight_decomposition(M: ModuleData):
    """Integral weight spaces spanned by F-words on u_0, or None if they do not form a lift."""
    n = M.n
    spaces: dict = {}
    level = {tuple(M.lam): Echelon(M.dim)}
    level[tuple(M.lam)].insert({0: M.field.one})
    while level:
        spaces.update(level)
        nxt: dict = {}
        for mu in sorted(level):
            for i, F in enumerate(M.F, 1):
                target = _add(mu, simple_root(i, n), -1)
                for vec in level[mu].rows.values():
                    image = F.apply(vec)
                    if image:
                        nxt.setdefault(target, Echelon(M.dim)).insert(image)
        level = {mu: ech for mu, ech in nxt.items() if len(ech)}
    out = {mu: ech.basis().vectors for mu, ech in spaces.items()}
    if sum(len(vs) for vs in out.values()) != M.dim:
        return None
    if not _is_lift(M, out):
        return None
    return out


def _is_lift(M: ModuleData, spaces: dict) -> bool:
    n = M.n
    total = Echelon(M.dim)
    for vs in spaces.values():
        for v in vs:
            if total.insert(v) is None:
                return False
    if len(total) != M.dim:
        return False
    residues = basis_weights(M)
    echelons = {}
    for mu, vs in spaces.items():
        ech = Echelon(M.dim)
        for v in vs:
            ech.insert(v)
        echelons[mu] = ech
    for mu, vs in spaces.items():
        res = tuple(c % M.ell for c in mu)
        for v in vs:
            if any(residues[k] != res for k in v):
                return False
            for name, ops in (("E", M.E), ("F", M.F)):
                for i, op in enumerate(ops, 1):
                    image = op.apply(v)
                    if not image:
                        continue
                    target = echelons.get(_add(mu, _label(f"{name}{i}", n)))
                    if target is None or target.reduce(image):
                        return False
    return True


# -- stage 3 ------------------------------------------------------------------

def grading_equations(M: ModuleData, j: int):
    """Linear equations on the entries of the carry grading operator D_j.

    Unknowns are D_j[r][c] for r, c in the same mod-ell weight space.  Returns
    (equations, variable index) with equations as ({var: coeff}, const) meaning
    sum(coeff * var) + const = 0.
    """
    residues = basis_weights(M)
    members = defaultdict(list)
    for k, mu in enumerate(residues):
        members[mu].append(k)
    var = {}
    for mu in sorted(members):
        for r in members[mu]:
            for c in members[mu]:
                var[(r, c)] = len(var)
    ell = M.ell
    gens = []
    for ops, sign in ((M.E, 1), (M.F, -1)):
        for i, op in enumerate(ops, 1):
            gens.append((op, op.rows(), tuple(sign * cartan_entry(i, s) for s in range(1, M.n + 1))))
    equations = []
    # column-major order keeps local inconsistencies early in the list
    for c in range(M.dim):
        for op, rows, shift in gens:
            raw = [x + y for x, y in zip(residues[c], shift)]
            target = tuple(x % ell for x in raw)
            a = (raw[j - 1] - target[j - 1]) // ell
            col = op.cols.get(c, {})
            for r in members.get(target, ()):
                # (D X - X D)[r][c] - carry * X[r][c] = 0
                eq: dict = {}
                for k, v in col.items():
                    key = var[(r, k)]
                    eq[key] = eq[key] + v if key in eq else v
                for k, v in rows.get(r, {}).items():
                    key = var[(k, c)]
                    eq[key] = eq[key] - v if key in eq else -v
                eq = {k: v for k, v in eq.items() if v}
                const = -(col[r] * a) if (a and r in col) else M.field.zero
                if eq or const:
                    equations.append((eq, const))
    return equations, var


def grading_obstruction(M: ModuleData):
    """First coordinate j whose grading equations are inconsistent, with the certificate."""
    for j in range(1, M.n + 1):
        equations, var = grading_equations(M, j)
        combo = inconsistency_certificate(equations, len(var), M.field)
        if combo is not None:
            return {"coordinate": j, "combination": combo}
    return None


def check_combination(M: ModuleData, obstruction: dict) -> bool:
    equations, _ = grading_equations(M, obstruction["coordinate"])
    lhs: dict = {}
    const = M.field.zero
    for idx, y in obstruction["combination"].items():
        eq, c = equations[idx]
        for k, v in eq.items():
            s = lhs.get(k, M.field.zero) + y * v
            if s:
                lhs[k] = s
            else:
                lhs.pop(k, None)
        const = const + y * c
    return not lhs and bool(const)


# -- driver -------------------------------------------------------------------

def lift_obstruction(M: ModuleData) -> LiftCertificate:
    pot, failure = graph_potential(M)
    if pot is not None:
        return LiftCertificate(True, "potential", potential=pot)
    cycle, weight = failure
    spaces = weight_decomposition(M)
    if spaces is not None:
        return LiftCertificate(True, "weight_decomposition", weight_spaces=spaces)
    obstruction = grading_obstruction(M)
    if obstruction is not None:
        return LiftCertificate(False, "grading_inconsistency", cycle=cycle, cycle_weight=weight,
                               obstruction=obstruction)
    return LiftCertificate(None, "undetermined", cycle=cycle, cycle_weight=weight)


def verify_certificate(M: ModuleData, cert: LiftCertificate) -> bool:
    """Recheck a certificate against the operators of M."""
    labels = {(s, t, gen): label for s, t, gen, label in action_edges(M)}
    if cert.method == "potential":
        pot = cert.potential
        residues = basis_weights(M)
        return (
            len(pot) == M.dim
            and all(tuple(c % M.ell for c in pot[k]) == residues[k] for k in range(M.dim))
            and all(_add(pot[t], pot[s], -1) == lab for (s, t, _), lab in labels.items())
        )
    if cert.method == "weight_decomposition":
        return _is_lift(M, cert.weight_spaces)
    if cert.cycle is not None:
        total = (0,) * M.n
        pos = cert.cycle[0][0]
        for a, b, gen, sign in cert.cycle:
            if a != pos:
                return False
            key = (a, b, gen) if sign == 1 else (b, a, gen)
            if key not in labels:
                return False
            total = _add(total, labels[key], sign)
            pos = b
        if pos != cert.cycle[0][0] or not any(total) or total != cert.cycle_weight:
            return False
    if cert.method == "grading_inconsistency":
        return check_combination(M, cert.obstruction)
    return cert.method == "undetermined"
