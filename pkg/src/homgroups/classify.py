"""Exhaustive classification of small Hom-groups, isomorphism, canonical forms.

The search completes Cayley tables cell by cell.  The unit row and column
are pinned to the twist, Latin constraints prune candidate values, a zero
in cell (i,j) forces a zero in (j,i), and both multiplicativity of the
twist and twisted associativity are propagated as soon as the cells they
mention are filled, forcing outer cells where one side of an instance is
already known.  Every completed table is re-verified before it is emitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .core import HomGroup, Permutation, PermLike, _as_perm


class OrderGuardError(ValueError):
    """Requested order exceeds the configured search guard."""


@dataclass(frozen=True)
class SearchConfig:
    order: int
    include_groups: bool = False
    up_to_iso: bool = False
    max_order_guard: int = 6

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")


def _completions(alpha: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
    """All tables with unit 0 whose unit row/column equal alpha and which
    satisfy the Latin, zero-symmetry, multiplicativity, and twisted
    associativity constraints."""
    n = len(alpha)
    ainv = [0] * n
    for i, v in enumerate(alpha):
        ainv[v] = i
    T = [[-1] * n for _ in range(n)]
    rowpos = [[-1] * n for _ in range(n)]
    row_mask = [0] * n
    col_mask = [0] * n
    trail: list[tuple[int, int]] = []
    results: list[tuple[tuple[int, ...], ...]] = []

    def assign(i: int, j: int, v: int) -> bool:
        cur = T[i][j]
        if cur != -1:
            return cur == v
        if (row_mask[i] | col_mask[j]) >> v & 1:
            return False
        if v == 0:
            if T[j][i] > 0:
                return False
        elif T[j][i] == 0:
            return False
        T[i][j] = v
        rowpos[i][v] = j
        row_mask[i] |= 1 << v
        col_mask[j] |= 1 << v
        trail.append((i, j))
        if v == 0 and i != j and not assign(j, i, 0):
            return False
        if not assign(alpha[i], alpha[j], alpha[v]):
            return False
        if not assign(ainv[i], ainv[j], ainv[v]):
            return False

        # Twisted associativity: alpha(g)*(h*k) = (g*h)*alpha(k).  The new
        # cell can appear as either inner product or either outer product;
        # resolve each instance that just became determined, forcing the
        # one unknown outer cell when the opposite side is known.
        for g in range(n):  # inner left: (h,k) = (i,j)
            q = T[g][i]
            if q == -1:
                continue
            a = T[alpha[g]][v]
            b = T[q][alpha[j]]
            if a == -1:
                if b != -1 and not assign(alpha[g], v, b):
                    return False
            elif b == -1:
                if not assign(q, alpha[j], a):
                    return False
            elif a != b:
                return False
        for k in range(n):  # inner right: (g,h) = (i,j)
            p = T[j][k]
            if p == -1:
                continue
            a = T[alpha[i]][p]
            b = T[v][alpha[k]]
            if a == -1:
                if b != -1 and not assign(alpha[i], p, b):
                    return False
            elif b == -1:
                if not assign(v, alpha[k], a):
                    return False
            elif a != b:
                return False
        g3 = ainv[i]  # outer left: (i,j) = (alpha(g), h*k)
        for h in range(n):
            k = rowpos[h][j]
            if k == -1:
                continue
            q = T[g3][h]
            if q == -1:
                continue
            b = T[q][alpha[k]]
            if b == -1:
                if not assign(q, alpha[k], v):
                    return False
            elif b != v:
                return False
        k4 = ainv[j]  # outer right: (i,j) = (g*h, alpha(k))
        for g in range(n):
            h = rowpos[g][i]
            if h == -1:
                continue
            p = T[h][k4]
            if p == -1:
                continue
            a = T[alpha[g]][p]
            if a == -1:
                if not assign(alpha[g], p, v):
                    return False
            elif a != v:
                return False
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            i, j = trail.pop()
            v = T[i][j]
            T[i][j] = -1
            rowpos[i][v] = -1
            row_mask[i] &= ~(1 << v)
            col_mask[j] &= ~(1 << v)

    cells = [(i, j) for i in range(1, n) for j in range(1, n)]

    def search(idx: int) -> None:
        while idx < len(cells) and T[cells[idx][0]][cells[idx][1]] != -1:
            idx += 1
        if idx == len(cells):
            results.append(tuple(tuple(row) for row in T))
            return
        i, j = cells[idx]
        blocked = row_mask[i] | col_mask[j]
        for v in range(n):
            if blocked >> v & 1:
                continue
            mark = len(trail)
            if assign(i, j, v):
                search(idx + 1)
            undo(mark)

    ok = all(assign(0, j, alpha[j]) for j in range(n))
    if ok:
        ok = all(assign(i, 0, alpha[i]) for i in range(1, n))
    if ok:
        search(0)
    return results


def enumerate_hom_groups(cfg: SearchConfig) -> list[HomGroup]:
    """All Hom-groups on {0..order-1} with unit 0, sorted by table.

    The unit row equals the twist, so the search ranges over unit-fixing
    permutations as candidate first rows; the identity row is admitted
    only when include_groups is set, since it forces an ordinary group.
    With up_to_iso, one canonical representative per isomorphism class is
    returned instead.
    """
    if cfg.order > cfg.max_order_guard:
        raise OrderGuardError(
            f"order {cfg.order} exceeds guard {cfg.max_order_guard}; "
            "raise max_order_guard explicitly to search this far"
        )
    n = cfg.order
    identity = tuple(range(n))
    structures: list[HomGroup] = []
    for rest in permutations(range(1, n)):
        alpha = (0,) + rest
        if not cfg.include_groups and alpha == identity:
            continue
        for table in _completions(alpha):
            structures.append(HomGroup(table, alpha, unit=0))
    structures.sort(key=lambda g: g.table.entries)
    if cfg.up_to_iso:
        structures = reduce_to_classes(structures)
    return structures


def reduce_to_classes(structures: list[HomGroup]) -> list[HomGroup]:
    """One canonical representative per isomorphism class, sorted by table."""
    reps: dict[tuple, HomGroup] = {}
    for g in structures:
        c = canonical_form(g)
        reps.setdefault(c.table.entries, c)
    return sorted(reps.values(), key=lambda g: g.table.entries)


def relabel(G: HomGroup, p: PermLike) -> HomGroup:
    """Transport G along the relabeling p: new index p(i) plays old i."""
    p = _as_perm(p)
    if len(p) != G.n:
        raise ValueError(f"relabeling length {len(p)} != carrier size {G.n}")
    n = G.n
    t = G.table.entries
    im = p.images
    pinv = p.inverse().images
    table = tuple(
        tuple(im[t[pinv[i]][pinv[j]]] for j in range(n)) for i in range(n)
    )
    alpha = tuple(im[G.alpha(pinv[i])] for i in range(n))
    labels = None if G.labels is None else tuple(G.labels[pinv[i]] for i in range(n))
    return HomGroup(table, alpha, unit=im[G.unit], labels=labels)


def canonical_form(G: HomGroup) -> HomGroup:
    """Lexicographically minimal relabeling with the unit moved to 0.

    Minimizes the flattened table over every bijection sending the unit
    to index 0; idempotent, and two Hom-groups are isomorphic exactly
    when their canonical tables coincide.
    """
    n = G.n
    t = G.table.entries
    others = [i for i in range(n) if i != G.unit]
    best: Optional[tuple[int, ...]] = None
    for rest in permutations(range(1, n)):
        p = [0] * n
        for src, dst in zip(others, rest):
            p[src] = dst
        pinv = [0] * n
        for i, v in enumerate(p):
            pinv[v] = i
        flat = tuple(p[t[pinv[i]][pinv[j]]] for i in range(n) for j in range(n))
        if best is None or flat < best:
            best = flat
    rows = tuple(best[i * n : (i + 1) * n] for i in range(n))
    return HomGroup(rows, rows[0], unit=0)


def are_isomorphic(G: HomGroup, H: HomGroup) -> Optional[Permutation]:
    """A bijection matching products and intertwining the twists, or None.

    Any such map must send unit to unit, so the search assigns images
    starting there, propagating twist orbits, inverses, and products of
    placed elements; twist cycle types are compared first as a cheap
    rejection.
    """
    n = G.n
    if H.n != n:
        return None
    if G.alpha.cycle_type() != H.alpha.cycle_type():
        return None
    ta, tb = G.table.entries, H.table.entries
    aa, ab = G.alpha.images, H.alpha.images
    ia, ib = G.inverses, H.inverses
    f = [-1] * n
    used = [False] * n

    def assign(a: int, b: int, trail: list[int]) -> bool:
        if f[a] != -1:
            return f[a] == b
        if used[b]:
            return False
        f[a] = b
        used[b] = True
        trail.append(a)
        if not assign(aa[a], ab[b], trail):
            return False
        if not assign(ia[a], ib[b], trail):
            return False
        for x in range(n):
            fx = f[x]
            if fx == -1:
                continue
            if not assign(ta[a][x], tb[b][fx], trail):
                return False
            if not assign(ta[x][a], tb[fx][b], trail):
                return False
        return True

    def undo(trail: list[int]) -> None:
        for a in reversed(trail):
            used[f[a]] = False
            f[a] = -1

    root: list[int] = []
    if not assign(G.unit, H.unit, root):
        return None

    def backtrack() -> Optional[Permutation]:
        a = 0
        while a < n and f[a] != -1:
            a += 1
        if a == n:
            return Permutation(tuple(f))
        for b in range(n):
            if used[b]:
                continue
            trail: list[int] = []
            if assign(a, b, trail):
                result = backtrack()
                if result is not None:
                    return result
            undo(trail)
        return None

    return backtrack()


@dataclass(frozen=True)
class ClassificationReport:
    order: int
    include_groups: bool
    raw_count: int
    class_count: int
    representatives: tuple[HomGroup, ...]


def classify_order(
    n: int, include_groups: bool = False, max_order_guard: int = 6
) -> ClassificationReport:
    """Labeled and up-to-isomorphism counts at one order, with class reps."""
    cfg = SearchConfig(order=n, include_groups=include_groups, max_order_guard=max_order_guard)
    raw = enumerate_hom_groups(cfg)
    classes = reduce_to_classes(raw)
    return ClassificationReport(
        order=n,
        include_groups=include_groups,
        raw_count=len(raw),
        class_count=len(classes),
        representatives=tuple(classes),
    )
