"""The Hochschild prefactorization algebra on combinatorial covers and its Čech complex.

Opens are simplicial subsets of a finite simplicial set, given by generator
ids (the face closure is taken).  Two opens are disjoint when they share no
generator, which is the same as being disjoint at every level.

``PU`` is the set of nonempty families of pairwise-disjoint declared opens.
The value of the prefactorization algebra on a family ``{U_1, ..., U_n}`` is
modelled by CH of the union ``U_1 ⊔ ... ⊔ U_n``; the shuffle product
identifies this with ``⊗ CH_{U_i}`` up to quasi-isomorphism.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product as iproduct
from typing import Mapping, Sequence

from .cdga import _add_into
from .exactla import SparseMatrix
from .hochschild import ChainMap, HochschildComplex, induced_map, shuffle_product
from .homology import is_quasi_iso
from .simplicial import FiniteSimplicialSet, SimplicialError, inclusion, subcomplex


class CoverError(ValueError):
    pass


def _closure(X: FiniteSimplicialSet, ids) -> frozenset:
    return frozenset(g for g, _ in subcomplex(X, ids).generators)


@dataclass
class CombinatorialCover:
    """A finite cover of ``space`` by simplicial subsets."""

    space: FiniteSimplicialSet
    opens: dict

    def __post_init__(self):
        closed = {}
        for name, ids in self.opens.items():
            try:
                closed[name] = _closure(self.space, ids)
            except SimplicialError as exc:
                raise CoverError(str(exc)) from None
        self.opens = closed
        covered = set().union(*closed.values()) if closed else set()
        missing = [g for g, _ in self.space.generators if g not in covered]
        if missing:
            raise CoverError(f"generators {missing} lie in no open")

    @classmethod
    def from_json(cls, space: FiniteSimplicialSet, data) -> "CombinatorialCover":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(space, {str(k): list(v) for k, v in data["opens"].items()})

    def to_json(self) -> dict:
        return {"opens": {k: sorted(v, key=self.space.order.get) for k, v in self.opens.items()}}

    def disjoint(self, a: str, b: str) -> bool:
        return not (self.opens[a] & self.opens[b])

    def factorizing_families(self) -> list:
        """PU: families of pairwise-disjoint opens, in a canonical order."""
        names = list(self.opens)
        fams = []
        for r in range(1, len(names) + 1):
            for fam in combinations(names, r):
                if all(self.disjoint(a, b) for a, b in combinations(fam, 2)):
                    fams.append(fam)
        return fams

    def intersection(self, families: Sequence[tuple]) -> frozenset:
        """Generators of the union of all nonempty intersections ``U_{i_1} ∩ ... ∩ U_{i_k}``."""
        out: set = set()
        for choice in iproduct(*families):
            inter = frozenset.intersection(*(self.opens[u] for u in choice))
            out |= inter
        return frozenset(out)


def single_open_cover(X: FiniteSimplicialSet) -> CombinatorialCover:
    return CombinatorialCover(X, {"X": [g for g, _ in X.generators]})


def two_arc_cover(X: FiniteSimplicialSet) -> CombinatorialCover:
    """The cover of the two-cell circle by its two closed edges."""
    edges = [g for g, d in X.generators if d == 1]
    if len(edges) != 2:
        raise CoverError("expected a circle with two edges")
    return CombinatorialCover(X, {"U1": [edges[0]], "U2": [edges[1]]})


def tuple_counts(cover: CombinatorialCover, cap: int) -> dict:
    """Per Čech layer k: number of tuples, and how many have nonempty intersection."""
    pu = cover.factorizing_families()
    out = {}
    for k in range(1, cap + 1):
        nonempty = sum(1 for t in iproduct(pu, repeat=k) if cover.intersection(t))
        out[k] = (len(pu) ** k, nonempty)
    return out


# -- structure maps ------------------------------------------------------------
class _Complexes:
    """Cache of CH complexes of subcomplexes and the inclusion maps between them."""

    def __init__(self, X, A, window, normalized):
        self.X, self.A, self.window, self.normalized = X, A, window, normalized
        self._cx: dict = {}
        self._maps: dict = {}

    def complex(self, gens: frozenset) -> HochschildComplex:
        if gens not in self._cx:
            if gens == frozenset(g for g, _ in self.X.generators):
                sub = self.X
            else:
                sub = subcomplex(self.X, sorted(gens, key=self.X.order.get),
                                 name="{" + ",".join(sorted(gens, key=self.X.order.get)) + "}") \
                    if gens else FiniteSimplicialSet([], {}, name="∅")
            self._cx[gens] = HochschildComplex(sub, self.A, window=self.window,
                                               normalized=self.normalized)
            if self._cx[gens].A is not self.A:
                self.A = self._cx[gens].A
        return self._cx[gens]

    def inclusion_map(self, small: frozenset, big: frozenset) -> ChainMap:
        key = (small, big)
        if key not in self._maps:
            Cs, Cb = self.complex(small), self.complex(big)
            f = inclusion(Cs.X, Cb.X)
            self._maps[key] = induced_map(f, Cs, Cb)
        return self._maps[key]


def structure_map(cover_or_space, opens: Sequence, V, A, window, chains: Sequence[Mapping],
                  normalized: bool = False, _cache: _Complexes | None = None) -> dict:
    """``μ_{U_1..U_n, V}`` applied to one chain of each ``CH_{U_i}``.

    Opens are generator-id collections; they must be pairwise disjoint and lie
    in ``V``.  Each chain is pushed into ``CH_V`` along the inclusion and the
    results are multiplied with the shuffle product, left to right.
    """
    X = cover_or_space.space if isinstance(cover_or_space, CombinatorialCover) else cover_or_space
    us = [_closure(X, u) for u in opens]
    v = _closure(X, V)
    for a, b in combinations(us, 2):
        if a & b:
            raise CoverError("structure maps need pairwise disjoint opens")
    for u in us:
        if not u <= v:
            raise CoverError("every open must lie inside V")
    cache = _cache or _Complexes(X, A, window, normalized)
    CV = cache.complex(v)
    result = CV.unit_chain()
    for u, ch in zip(us, chains):
        Cu = cache.complex(u)
        f = inclusion(Cu.X, CV.X)
        pushed: dict = {}
        for (k, m), c in ch.items():
            phi = Cu.map_phi(f, CV, k)
            for t, e in Cu.push(m, phi, len(CV.positions(k))).items():
                _add_into(pushed, (k, t), c * e)
        result = shuffle_product(CV, result, CV.project(pushed))
    return result


# -- Čech complex -----------------------------------------------------------------
class CechComplex:
    """Totalized Čech complex ``⊕_k ⊕_{α_1..α_k ∈ PU} F(α_1, ..., α_k)[k-1]``.

    A degree-m element of layer k sits in total degree ``m - (k - 1)``.  The
    differential is the unsigned alternating Čech sum plus ``(-1)^{k-1}`` times
    the Hochschild differential.  Layers stop at ``cap``, so degrees below
    ``2 - cap`` are not trusted.
    """

    def __init__(self, cover: CombinatorialCover, A, window, cap: int, normalized: bool = False):
        if cap < 2:
            raise CoverError("tuple length cap must be at least 2")
        self.cover = cover
        self.n_min = int(window[0] if isinstance(window, (tuple, list)) else window)
        self.cap = cap
        self.trusted_min = max(self.n_min + 1, 2 - cap)
        self.cache = _Complexes(cover.space, A, self.n_min, normalized)
        self.pu = cover.factorizing_families()
        self.tuples = {k: list(iproduct(range(len(self.pu)), repeat=k)) for k in range(1, cap + 1)}
        self._inter: dict = {}
        self._mats: dict = {}

    @property
    def A(self):
        return self.cache.A

    def target(self) -> HochschildComplex:
        return self.cache.complex(frozenset(g for g, _ in self.cover.space.generators))

    def gens_of(self, t: tuple) -> frozenset:
        if t not in self._inter:
            self._inter[t] = self.cover.intersection([self.pu[i] for i in t])
        return self._inter[t]

    def F(self, t: tuple) -> HochschildComplex:
        return self.cache.complex(self.gens_of(t))

    def layers(self, n: int) -> list:
        """``(k, tuple, m)`` summands of total degree n."""
        out = []
        if n > 0 or n < self.n_min:
            return out
        for k in range(1, self.cap + 1):
            m = n + k - 1
            if m > 0:
                break
            for t in self.tuples[k]:
                out.append((k, t, m))
        return out

    def weights(self, n: int) -> list:
        ws = set()
        for k, t, m in self.layers(n):
            ws.update(self.F(t).weights(m))
        return sorted(ws)

    def offsets(self, n: int, w: int) -> dict:
        key = ("off", n, w)
        if key not in self._mats:
            off, pos = {}, 0
            for k, t, m in self.layers(n):
                off[(k, t)] = pos
                pos += self.F(t).dim(m, w)
            self._mats[key] = (off, pos)
        return self._mats[key]

    def dim(self, n: int, w: int | None = None) -> int:
        if w is None:
            return sum(self.dim(n, x) for x in self.weights(n))
        return self.offsets(n, w)[1]

    def differential(self, n: int, w: int = 0) -> SparseMatrix:
        key = ("D", n, w)
        if key in self._mats:
            return self._mats[key]
        src_off, src_dim = self.offsets(n, w)
        if n + 1 > 0:
            m = SparseMatrix.zero(0, src_dim)
            self._mats[key] = m
            return m
        tgt_off, tgt_dim = self.offsets(n + 1, w)
        entries: dict = {}
        for k, t, m in self.layers(n):
            base = src_off[(k, t)]
            Ft = self.F(t)
            if m + 1 <= 0:
                sgn = -1 if (k - 1) % 2 else 1
                Dm = Ft.differential(m, w)
                tb = tgt_off[(k, t)]
                for (r, c), x in Dm.entries().items():
                    _add_into(entries, (tb + r, base + c), sgn * x)
            if k >= 2:
                for j in range(k):
                    t2 = t[:j] + t[j + 1:]
                    inc = self.cache.inclusion_map(self.gens_of(t), self.gens_of(t2)).matrix(m, w)
                    tb = tgt_off[(k - 1, t2)]
                    s = -1 if j % 2 else 1
                    for (r, c), x in inc.entries().items():
                        _add_into(entries, (tb + r, base + c), s * x)
        mat = SparseMatrix(tgt_dim, src_dim, entries)
        self._mats[key] = mat
        return mat

    def check_d_squared(self) -> list:
        bad = []
        for n in range(self.n_min, -1):
            for w in self.weights(n):
                if not (self.differential(n + 1, w) @ self.differential(n, w)).is_zero():
                    bad.append((n, w))
        return bad

    def augmentation(self) -> ChainMap:
        """Layer-1 inclusions ``F(α) -> CH_X``; zero on higher layers."""
        T = self.target()
        aug = ChainMap(self, T, {}, self.n_min)
        full = frozenset(g for g, _ in self.cover.space.generators)
        for n in range(self.n_min, 1):
            for w in sorted(set(self.weights(n)) | set(T.weights(n))):
                off, dim = self.offsets(n, w)
                entries: dict = {}
                for k, t, m in self.layers(n):
                    if k != 1:
                        continue
                    inc = self.cache.inclusion_map(self.gens_of(t), full).matrix(m, w)
                    for (r, c), x in inc.entries().items():
                        entries[(r, off[(k, t)] + c)] = x
                aug.blocks[(n, w)] = SparseMatrix(T.dim(n, w), dim, entries)
        return aug


def cech_complex(cover: CombinatorialCover, A, window, tuple_length_cap: int,
                 normalized: bool = False) -> CechComplex:
    return CechComplex(cover, A, window, tuple_length_cap, normalized)


def cech_compare(C: CechComplex) -> dict:
    """Per trusted degree: is the augmentation a quasi-isomorphism?"""
    aug = C.augmentation()
    flags = is_quasi_iso(aug)
    return {n: ok for n, ok in flags.items() if n >= C.trusted_min}
