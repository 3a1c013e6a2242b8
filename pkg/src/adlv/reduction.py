"""
Deligne-Lusztig reduction for sigma = identity (split GL_n).

A node w that is not of minimal length in its conjugacy class has, somewhere
in its class under length-preserving simple conjugations, an element w' and
a simple s with l(s w' s) = l(w') - 2.  The node then gets two children,
s w' (type I, length drop 1) and s w' s (type II, length drop 2).
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from adlv.lp import ClassInvariant, basic_class, newton_kappa
from adlv.weyl import Element, kappa, length, multiply, simple, supp_sigma


def sigma_conj_step(w: Element, s: int) -> tuple[Element, int]:
    """(s w s, l(s w s) - l(w))."""
    r = simple(w.n, s)
    w2 = multiply(multiply(r, w), r)
    return w2, length(w2) - length(w)


def cyclic_class(w: Element) -> dict[Element, tuple[Element, int] | None]:
    """Elements reachable by length-preserving simple conjugations.

    Maps each element to its BFS parent and the conjugating index; insertion
    order is BFS order with ascending simple index.
    """
    parents: dict[Element, tuple[Element, int] | None] = {w: None}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for s in range(x.n):
            y, delta = sigma_conj_step(x, s)
            if delta == 0 and y not in parents:
                parents[y] = (x, s)
                queue.append(y)
    return parents


def _moves_to(parents, target: Element) -> tuple[int, ...]:
    out = []
    x = target
    while parents[x] is not None:
        x, s = parents[x]
        out.append(s)
    return tuple(reversed(out))


def _reductions(parents) -> Iterator[tuple[Element, int]]:
    for x in parents:
        for s in range(x.n):
            _, delta = sigma_conj_step(x, s)
            if delta == -2:
                yield x, s


def is_minimal_length(w: Element) -> bool:
    return next(_reductions(cyclic_class(w)), None) is None


def find_minimal(w: Element) -> tuple[Element, tuple[int, ...]]:
    """A minimal length element of the class of w reached by w ->_sigma w_min."""
    moves: list[int] = []
    while True:
        parents = cyclic_class(w)
        hit = next(_reductions(parents), None)
        if hit is None:
            return w, tuple(moves)
        x, s = hit
        moves.extend(_moves_to(parents, x))
        moves.append(s)
        w, _ = sigma_conj_step(x, s)


@dataclass(frozen=True)
class Edge:
    parent: Element
    child: Element
    kind: str  # "I" or "II"
    witness: tuple[int, ...]  # conjugations to w', then the splitting s


@dataclass
class ReductionTree:
    root: Element
    edges: dict[Element, tuple[Edge, Edge]] = field(default_factory=dict)

    @property
    def nodes(self) -> list[Element]:
        seen = [self.root]
        known = {self.root}
        for e1, e2 in self.edges.values():
            for c in (e1.child, e2.child):
                if c not in known:
                    known.add(c)
                    seen.append(c)
        return seen

    def leaves(self) -> list[Element]:
        return [x for x in self.nodes if x not in self.edges]


@dataclass(frozen=True)
class ReductionPath:
    steps: tuple[Edge, ...]
    end: Element

    @property
    def lI(self) -> int:
        return sum(1 for e in self.steps if e.kind == "I")

    @property
    def lII(self) -> int:
        return sum(1 for e in self.steps if e.kind == "II")


def build_tree(w: Element, seed: int | None = None) -> ReductionTree:
    """Reduction tree of w.

    Deterministic by default: the first (w', s) in BFS order of the class of
    the node, ascending s.  With a seed the pair is drawn at random instead.
    """
    rng = random.Random(seed) if seed is not None else None
    tree = ReductionTree(w)
    stack = [w]
    done = set()
    while stack:
        x = stack.pop()
        if x in done:
            continue
        done.add(x)
        parents = cyclic_class(x)
        if rng is None:
            hit = next(_reductions(parents), None)
        else:
            options = list(_reductions(parents))
            hit = rng.choice(options) if options else None
        if hit is None:
            continue
        xp, s = hit
        witness = _moves_to(parents, xp) + (s,)
        r = simple(x.n, s)
        c1 = multiply(r, xp)
        c2 = multiply(c1, r)
        tree.edges[x] = (Edge(x, c1, "I", witness), Edge(x, c2, "II", witness))
        stack.extend((c2, c1))
    return tree


def enumerate_paths(tree: ReductionTree) -> list[ReductionPath]:
    out = []

    def rec(x, steps):
        if x not in tree.edges:
            out.append(ReductionPath(tuple(steps), x))
            return
        for e in tree.edges[x]:
            steps.append(e)
            rec(e.child, steps)
            steps.pop()

    rec(tree.root, [])
    return out


def psi_class(w: Element) -> ClassInvariant:
    return newton_kappa(w)


class InfiniteSupportLeaf(ValueError):
    pass


def dim_via_tree(w: Element, m: int, tree: ReductionTree | None = None) -> int | None:
    """Dimension of X_w(tau^m) read off a reduction tree, None if empty."""
    if kappa(w) != m:
        return None
    if tree is None:
        tree = build_tree(w)
    target = basic_class(w.n, m)
    best = None
    leaf_ok: dict[Element, bool] = {}
    for path in enumerate_paths(tree):
        end = path.end
        if end not in leaf_ok:
            leaf_ok[end] = psi_class(end) == target
            if leaf_ok[end] and len(supp_sigma(end)) == w.n:
                raise InfiniteSupportLeaf(f"{end!r} has infinite sigma-support")
        if leaf_ok[end]:
            d = path.lI + path.lII + length(end)
            best = d if best is None else max(best, d)
    return best


def same_cyclic_class(a: Element, b: Element) -> bool:
    return length(a) == length(b) and b in cyclic_class(a)
