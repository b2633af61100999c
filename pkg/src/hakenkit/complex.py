"""Finite abstract simplicial complexes.

A :class:`Complex` is stored by its maximal simplices.  Simplices are plain
sorted tuples of integer vertex labels; the empty tuple is the empty simplex.
A complex with no vertices is the complex ``{()}`` (the (-1)-sphere): its only
face is the empty simplex, so ``f_vector`` is ``(1,)`` and ``chi`` is 0.
"""

from __future__ import annotations

import threading
from collections import defaultdict
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

Simplex = Tuple[int, ...]


class SearchBudgetExceeded(RuntimeError):
    """Raised when an isomorphism search visits more nodes than allowed."""


def simplex(vertices: Iterable[int]) -> Simplex:
    s = tuple(sorted(int(v) for v in vertices))
    if len(set(s)) != len(s):
        raise ValueError(f"repeated vertex in simplex {s}")
    return s


def _maximal(simplices: Iterable[Simplex]) -> List[Simplex]:
    """Drop every simplex contained in another one."""
    uniq = set(simplices)
    if not uniq:
        return []
    sizes = {len(s) for s in uniq}
    if len(sizes) == 1:
        return sorted(uniq)
    lo = min(sizes)
    covered = set()
    for s in uniq:
        for k in range(lo, len(s)):
            covered.update(combinations(s, k))
    return sorted(s for s in uniq if s not in covered)


class Complex:
    """Immutable finite simplicial complex over integer labels."""

    def __init__(self, simplices: Iterable[Iterable[int]] = (), *, _trusted: bool = False):
        if _trusted:
            maximal = list(simplices)
        else:
            maximal = _maximal(simplex(s) for s in simplices)
            if maximal == [()]:
                maximal = []
        self.maximal: Tuple[Simplex, ...] = tuple(sorted(maximal))
        self.vertices: Tuple[int, ...] = tuple(sorted({v for s in self.maximal for v in s}))
        self.dimension: int = max((len(s) for s in self.maximal), default=0) - 1
        self._lock = threading.Lock()
        self._faces: Optional[Dict[int, FrozenSet[Simplex]]] = None
        self._star_index: Optional[Dict[int, List[Simplex]]] = None
        self._hash: Optional[int] = None

    @classmethod
    def from_faces(cls, faces: Iterable[Simplex]) -> Complex:
        """Complex generated by a collection of sorted simplices."""
        return cls(_maximal(f for f in faces if f), _trusted=True)

    # -- face bookkeeping -------------------------------------------------

    def _face_table(self) -> Dict[int, FrozenSet[Simplex]]:
        if self._faces is None:
            with self._lock:
                if self._faces is None:
                    table: Dict[int, set] = defaultdict(set)
                    for m in self.maximal:
                        for k in range(1, len(m) + 1):
                            table[k - 1].update(combinations(m, k))
                    table[-1] = {()}
                    self._faces = {d: frozenset(fs) for d, fs in table.items()}
        return self._faces

    def faces(self, d: int) -> FrozenSet[Simplex]:
        return self._face_table().get(d, frozenset())

    def all_faces(self) -> List[Simplex]:
        table = self._face_table()
        out: List[Simplex] = []
        for d in range(-1, self.dimension + 1):
            out.extend(sorted(table.get(d, ())))
        return out

    def __contains__(self, s) -> bool:
        s = tuple(s)
        return s in self._face_table().get(len(s) - 1, ())

    def __iter__(self):
        return iter(self.all_faces())

    @property
    def f_vector(self) -> Tuple[int, ...]:
        table = self._face_table()
        return tuple(len(table.get(d, ())) for d in range(-1, self.dimension + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * f for i, f in enumerate(self.f_vector[1:]))

    @property
    def is_empty(self) -> bool:
        return not self.maximal

    def is_pure(self) -> bool:
        return all(len(m) == self.dimension + 1 for m in self.maximal)

    def num_vertices(self) -> int:
        return len(self.vertices)

    # -- local structure ----------------------------------------------------

    def star_index(self) -> Dict[int, List[Simplex]]:
        """Map vertex -> maximal simplices containing it."""
        if self._star_index is None:
            with self._lock:
                if self._star_index is None:
                    idx: Dict[int, List[Simplex]] = defaultdict(list)
                    for m in self.maximal:
                        for v in m:
                            idx[v].append(m)
                    self._star_index = dict(idx)
        return self._star_index

    def maximal_containing(self, s: Simplex) -> List[Simplex]:
        if not s:
            return list(self.maximal)
        cands = self.star_index().get(s[0], [])
        ss = set(s)
        return [m for m in cands if ss.issubset(m)]

    def adjacency(self) -> Dict[int, set]:
        adj: Dict[int, set] = {v: set() for v in self.vertices}
        for a, b in self.faces(1):
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def skeleton(self, d: int) -> Complex:
        if d >= self.dimension:
            return self
        return Complex.from_faces(set().union(*(self.faces(k) for k in range(d + 1))))

    def induced(self, vertices: Iterable[int]) -> Complex:
        """The full subcomplex spanned by ``vertices``."""
        keep = set(vertices)
        return Complex(tuple(v for v in m if v in keep) for m in self.maximal)

    def relabel(self, mapping: Mapping[int, int]) -> Complex:
        return Complex(tuple(mapping[v] for v in m) for m in self.maximal)

    def components(self) -> List[Complex]:
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for m in self.maximal:
            r = find(m[0])
            for v in m[1:]:
                rv = find(v)
                if rv != r:
                    parent[rv] = r
        groups: Dict[int, List[Simplex]] = defaultdict(list)
        for m in self.maximal:
            groups[find(m[0])].append(m)
        comps = [Complex(ms, _trusted=True) for ms in groups.values()]
        comps.sort(key=lambda c: c.vertices[0])
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_subcomplex_of(self, other: Complex) -> bool:
        return all(m in other for m in self.maximal)

    def is_full_in(self, other: Complex) -> bool:
        return other.induced(self.vertices) == self

    def union(self, *others: Complex) -> Complex:
        sims = list(self.maximal)
        for o in others:
            sims.extend(o.maximal)
        return Complex(sims)

    def intersection(self, other: Complex) -> Complex:
        faces = set(self.all_faces()) & set(other.all_faces())
        return Complex.from_faces(faces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self.maximal == other.maximal

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.maximal)
        return self._hash

    def __repr__(self) -> str:
        return f"Complex(dim={self.dimension}, f={self.f_vector}, maximal={len(self.maximal)})"


# -- module-level functions ------------------------------------------------------


def faces(K: Complex, d: int) -> FrozenSet[Simplex]:
    return K.faces(d)


def f_vector(K: Complex) -> Tuple[int, ...]:
    return K.f_vector


def euler_characteristic(K: Complex) -> int:
    return K.euler_characteristic()


def _require_face(K: Complex, s: Simplex) -> Simplex:
    s = simplex(s)
    if s not in K:
        raise ValueError(f"{s} is not a simplex of the complex")
    return s


def link(K: Complex, s: Iterable[int]) -> Complex:
    s = _require_face(K, s)
    if not s:
        return K
    ss = set(s)
    return Complex((tuple(v for v in m if v not in ss) for m in K.maximal_containing(s)), _trusted=True)


def star(K: Complex, s: Iterable[int]) -> Complex:
    """Closed star of ``s``."""
    s = _require_face(K, s)
    return Complex(K.maximal_containing(s), _trusted=True)


def _offset(K1: Complex, K2: Complex) -> int:
    if not K1.vertices or not K2.vertices:
        return 0
    return K1.vertices[-1] + 1 - K2.vertices[0]


def join(K1: Complex, K2: Complex) -> Complex:
    """Simplicial join; ``K2`` is shifted past the labels of ``K1``."""
    if K1.is_empty:
        return K2
    if K2.is_empty:
        return K1
    off = _offset(K1, K2)
    second = [tuple(v + off for v in m) for m in K2.maximal]
    return Complex((a + b for a in K1.maximal for b in second), _trusted=True)


def cone(K: Complex) -> Complex:
    apex = K.vertices[-1] + 1 if K.vertices else 0
    return join(K, Complex([(apex,)]))


def subdivision_faces(K: Complex) -> List[Simplex]:
    """Nonempty faces of ``K`` in the order used to label the vertices of ``K'``."""
    return [f for f in K.all_faces() if f]


def barycentric_subdivision(K: Complex) -> Complex:
    """Order complex of the face poset; vertex ``i`` is ``subdivision_faces(K)[i]``."""
    label = {f: i for i, f in enumerate(subdivision_faces(K))}
    chains = []
    for m in K.maximal:
        for perm in permutations(m):
            chain = tuple(sorted(label[tuple(sorted(perm[: i + 1]))] for i in range(len(perm))))
            chains.append(chain)
    return Complex(chains, _trusted=True)


def subdivide_subcomplex(K: Complex, A: Complex) -> Complex:
    """The subdivision of a subcomplex ``A`` inside ``K'`` (always full there)."""
    label = {f: i for i, f in enumerate(subdivision_faces(K))}
    return barycentric_subdivision(K).induced(label[f] for f in A.all_faces() if f)


def dual_cone(K: Complex, s: Iterable[int]) -> Complex:
    """Subcomplex of ``K'`` spanned by the faces containing ``s``."""
    s = _require_face(K, s)
    if not s:
        raise ValueError("dual cone of the empty simplex is undefined")
    ss = set(s)
    faces_ = subdivision_faces(K)
    return barycentric_subdivision(K).induced(i for i, f in enumerate(faces_) if ss.issubset(f))


def simplex_complex(s: Sequence[int]) -> Complex:
    """The full simplex on ``s`` as a complex."""
    return Complex([tuple(s)]) if len(s) else Complex()


# -- isomorphism ------------------------------------------------------------------

DEFAULT_NODE_BUDGET = 200_000


def _signatures(K: Complex) -> Dict[int, tuple]:
    adj = K.adjacency()
    return {v: (len(adj[v]), link(K, (v,)).f_vector) for v in K.vertices}


def find_isomorphism(
    K1: Complex, K2: Complex, node_budget: int = DEFAULT_NODE_BUDGET
) -> Optional[Dict[int, int]]:
    """Vertex bijection carrying the maximal simplices of K1 onto those of K2, or None."""
    if K1.f_vector != K2.f_vector or len(K1.maximal) != len(K2.maximal):
        return None
    if K1.is_empty:
        return {}
    sig1, sig2 = _signatures(K1), _signatures(K2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None
    by_sig: Dict[tuple, List[int]] = defaultdict(list)
    for v, s in sig2.items():
        by_sig[s].append(v)
    adj1, adj2 = K1.adjacency(), K2.adjacency()
    faces2 = set(K2.all_faces())
    max_by_v1 = K1.star_index()

    # most constrained first, then grow along edges
    order: List[int] = []
    seen = set()
    rank = sorted(K1.vertices, key=lambda v: (len(by_sig[sig1[v]]), -len(adj1[v]), v))
    for root in rank:
        if root in seen:
            continue
        frontier = [root]
        seen.add(root)
        while frontier:
            v = min(frontier, key=lambda u: (-len(adj1[u] & set(order)), len(by_sig[sig1[u]]), u))
            frontier.remove(v)
            order.append(v)
            for w in sorted(adj1[v]):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)

    mapping: Dict[int, int] = {}
    used = set()
    nodes = 0

    def consistent(v: int, c: int) -> bool:
        for u, cu in mapping.items():
            if (u in adj1[v]) != (cu in adj2[c]):
                return False
        mapping[v] = c
        ok = True
        for m in max_by_v1.get(v, ()):
            if all(x in mapping for x in m):
                if tuple(sorted(mapping[x] for x in m)) not in faces2:
                    ok = False
                    break
        del mapping[v]
        return ok

    def search(i: int) -> bool:
        nonlocal nodes
        if i == len(order):
            return True
        v = order[i]
        for c in by_sig[sig1[v]]:
            if c in used:
                continue
            nodes += 1
            if nodes > node_budget:
                raise SearchBudgetExceeded(f"isomorphism search exceeded {node_budget} nodes")
            if not consistent(v, c):
                continue
            mapping[v] = c
            used.add(c)
            if search(i + 1):
                return True
            del mapping[v]
            used.discard(c)
        return False

    if not search(0):
        return None
    image = {tuple(sorted(mapping[x] for x in m)) for m in K1.maximal}
    if image != set(K2.maximal):
        return None
    return dict(mapping)


def are_isomorphic(K1: Complex, K2: Complex, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    return find_isomorphism(K1, K2, node_budget) is not None
