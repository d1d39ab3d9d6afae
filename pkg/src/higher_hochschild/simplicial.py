"""Finite simplicial sets in Eilenberg-Zilber normal form.

A simplex is a pair (non-degenerate generator, degeneracy word).  The word
``(j1 < j2 < ... < jl)`` stands for ``s_jl ... s_j2 s_j1 g``; equivalently it is
the set of positions ``t`` where the underlying surjection ``[k] -> [q]``
repeats (``sigma(t) == sigma(t + 1)``).  That second reading is what makes the
degeneracy test in the normalized Hochschild complex a bitmask operation.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Sequence


class SimplicialError(ValueError):
    pass


@dataclass(frozen=True)
class SimplexRef:
    generator: str
    gen_dim: int
    word: tuple = ()

    @property
    def dim(self) -> int:
        return self.gen_dim + len(self.word)

    @property
    def mask(self) -> int:
        m = 0
        for j in self.word:
            m |= 1 << j
        return m

    def is_degenerate(self) -> bool:
        return bool(self.word)

    def __str__(self):
        if not self.word:
            return self.generator
        return "s" + "".join(map(str, self.word)) + "(" + self.generator + ")"


def degenerate(s: SimplexRef, j: int) -> SimplexRef:
    """Normal form of ``s_j(s)``."""
    if not 0 <= j <= s.dim:
        raise SimplicialError(f"s_{j} undefined on a {s.dim}-simplex")
    word = [t for t in s.word if t < j] + [j] + [t + 1 for t in s.word if t >= j]
    return SimplexRef(s.generator, s.gen_dim, tuple(word))


def degenerate_by(s: SimplexRef, word: Iterable[int]) -> SimplexRef:
    """Apply ``s_j1`` first, then ``s_j2``, ... for an increasing word."""
    for j in word:
        s = degenerate(s, j)
    return s


def surjection(s: SimplexRef) -> tuple:
    """The surjection ``[dim s] -> [gen_dim]`` encoded by the word."""
    out, v = [0], 0
    rep = set(s.word)
    for t in range(s.dim):
        if t not in rep:
            v += 1
        out.append(v)
    return tuple(out)


def _word_of(sigma: Sequence[int]) -> tuple:
    return tuple(t for t in range(len(sigma) - 1) if sigma[t] == sigma[t + 1])


class FiniteSimplicialSet:
    """A finite simplicial set presented by its non-degenerate simplices.

    Parameters
    ----------
    generators : sequence of (id, dim)
        Non-degenerate simplices; declaration order fixes the canonical order.
    faces : mapping id -> list of SimplexRef
        ``faces[g][i] = d_i g`` for every generator of positive dimension.
    basepoint : str, optional
        A 0-dimensional generator.
    """

    def __init__(self, generators: Sequence[tuple], faces: Mapping[str, Sequence[SimplexRef]],
                 basepoint: str | None = None, name: str = "X", check: bool = True):
        self.name = name
        self.generators = [(str(g), int(d)) for g, d in generators]
        self.gen_dim = dict(self.generators)
        if len(self.gen_dim) != len(self.generators):
            raise SimplicialError("duplicate generator ids")
        self.order = {g: n for n, (g, _) in enumerate(self.generators)}
        self.faces = {g: tuple(faces.get(g, ())) for g, _ in self.generators}
        self.basepoint = basepoint
        self.max_dim = max((d for _, d in self.generators), default=-1)
        self._levels: dict = {}
        self._index: dict = {}
        self._face_maps: dict = {}
        self._degen_maps: dict = {}
        if basepoint is not None and self.gen_dim.get(basepoint) != 0:
            raise SimplicialError(f"basepoint {basepoint!r} is not a vertex")
        if check:
            self.validate()

    # -- structure -------------------------------------------------------
    def validate(self) -> None:
        for g, d in self.generators:
            fs = self.faces[g]
            if d == 0:
                if fs:
                    raise SimplicialError(f"vertex {g} has faces")
                continue
            if len(fs) != d + 1:
                raise SimplicialError(f"{g} needs {d + 1} faces, got {len(fs)}")
            for f in fs:
                if f.generator not in self.gen_dim or self.gen_dim[f.generator] != f.gen_dim:
                    raise SimplicialError(f"face of {g} refers to unknown generator {f.generator}")
                if f.dim != d - 1:
                    raise SimplicialError(f"face {f} of {g} has wrong dimension")
                if list(f.word) != sorted(set(f.word)) or any(j >= f.dim for j in f.word):
                    raise SimplicialError(f"face {f} of {g} is not in normal form")
        top = max(2, 2 * self.max_dim)
        for k in range(2, top + 1):
            for s in self._generator_level(k):
                for j in range(1, k + 1):
                    for i in range(j):
                        a = self.face(self.face(s, j), i)
                        b = self.face(self.face(s, i), j - 1)
                        if a != b:
                            raise SimplicialError(
                                f"d_{i} d_{j} != d_{j - 1} d_{i} on {s}: {a} vs {b}")

    def _generator_level(self, k: int):
        for g, d in self.generators:
            if d <= k:
                for word in combinations(range(k), k - d):
                    yield SimplexRef(g, d, word)

    def simplex(self, generator: str, word: Sequence[int] = ()) -> SimplexRef:
        return SimplexRef(generator, self.gen_dim[generator], tuple(word))

    def face(self, s: SimplexRef, i: int) -> SimplexRef:
        """``d_i(s)`` by rewriting past the degeneracy word."""
        k = s.dim
        if k < 1 or not 0 <= i <= k:
            raise SimplicialError(f"d_{i} undefined on a {k}-simplex")
        if not s.word:
            return self.faces[s.generator][i]
        j = s.word[-1]
        inner = SimplexRef(s.generator, s.gen_dim, s.word[:-1])
        if i < j:
            return degenerate(self.face(inner, i), j - 1)
        if i == j or i == j + 1:
            return inner
        return degenerate(self.face(inner, i - 1), j)

    def level(self, k: int, pointed: bool = False) -> list:
        """All k-simplices in canonical order (generator order, then word)."""
        key = (k, pointed)
        if key not in self._levels:
            lv = list(self._generator_level(k))
            if pointed:
                if self.basepoint is None:
                    raise SimplicialError(f"{self.name} has no basepoint")
                lv.remove(self.basepoint_simplex(k))
            self._levels[key] = lv
        return self._levels[key]

    def level_size(self, k: int) -> int:
        return sum(comb(k, k - d) for _, d in self.generators if d <= k)

    def index(self, k: int) -> dict:
        if k not in self._index:
            self._index[k] = {s: n for n, s in enumerate(self.level(k))}
        return self._index[k]

    def basepoint_simplex(self, k: int) -> SimplexRef:
        if self.basepoint is None:
            raise SimplicialError(f"{self.name} has no basepoint")
        return SimplexRef(self.basepoint, 0, tuple(range(k)))

    def face_map(self, k: int, i: int) -> tuple:
        """Positions of ``d_i`` of each k-simplex inside level k-1."""
        key = (k, i)
        if key not in self._face_maps:
            idx = self.index(k - 1)
            self._face_maps[key] = tuple(idx[self.face(s, i)] for s in self.level(k))
        return self._face_maps[key]

    def degeneracy_map(self, k: int, j: int) -> tuple:
        key = (k, j)
        if key not in self._degen_maps:
            idx = self.index(k + 1)
            self._degen_maps[key] = tuple(idx[degenerate(s, j)] for s in self.level(k))
        return self._degen_maps[key]

    def is_pointed(self) -> bool:
        return self.basepoint is not None

    def vertices(self) -> list:
        return [g for g, d in self.generators if d == 0]

    def __repr__(self):
        counts = {}
        for _, d in self.generators:
            counts[d] = counts.get(d, 0) + 1
        return f"FiniteSimplicialSet({self.name}, nondegenerate={dict(sorted(counts.items()))})"

    # -- serialization ---------------------------------------------------
    def to_json(self) -> dict:
        return {
            "generators": [{"id": g, "dim": d} for g, d in self.generators],
            "faces": {g: [[f.generator, list(f.word)] for f in fs]
                      for g, fs in self.faces.items() if fs},
            "basepoint": self.basepoint,
        }

    @classmethod
    def from_json(cls, data: Mapping | str, name: str = "X") -> "FiniteSimplicialSet":
        if isinstance(data, str):
            data = json.loads(data)
        gens = [(g["id"], g["dim"]) for g in data["generators"]]
        dims = dict(gens)
        faces = {}
        for g, fs in data.get("faces", {}).items():
            faces[g] = [SimplexRef(str(h), dims[h], tuple(w)) for h, w in fs]
        return cls(gens, faces, data.get("basepoint"), name=name)


# -- maps ------------------------------------------------------------------
class SimplicialMap:
    """A map determined by the images of the source generators."""

    def __init__(self, source: FiniteSimplicialSet, target: FiniteSimplicialSet,
                 images: Mapping[str, SimplexRef], check: bool = True):
        self.source = source
        self.target = target
        self.images = dict(images)
        self._level_maps: dict = {}
        if check:
            self.validate()

    def validate(self, pointed: bool = True) -> None:
        for g, d in self.source.generators:
            im = self.images.get(g)
            if im is None:
                raise SimplicialError(f"no image for generator {g}")
            if im.dim != d:
                raise SimplicialError(f"image of {g} has dimension {im.dim}, expected {d}")
            if im.generator not in self.target.gen_dim:
                raise SimplicialError(f"image of {g} is not a simplex of the target")
            for i in range(d + 1 if d else 0):
                lhs = self.target.face(im, i)
                rhs = self(self.source.faces[g][i])
                if lhs != rhs:
                    raise SimplicialError(f"map does not commute with d_{i} on {g}")
        if pointed and self.source.basepoint is not None and self.target.basepoint is not None:
            if self.images[self.source.basepoint] != self.target.simplex(self.target.basepoint):
                raise SimplicialError("map does not preserve basepoints")

    def __call__(self, s: SimplexRef) -> SimplexRef:
        return degenerate_by(self.images[s.generator], s.word)

    def level_map(self, k: int) -> tuple:
        if k not in self._level_maps:
            idx = self.target.index(k)
            self._level_maps[k] = tuple(idx[self(s)] for s in self.source.level(k))
        return self._level_maps[k]

    def is_injective(self, up_to: int | None = None) -> bool:
        top = up_to if up_to is not None else max(self.source.max_dim, self.target.max_dim, 0) + 1
        return all(len(set(self.level_map(k))) == len(self.level_map(k)) for k in range(top + 1))

    def compose(self, other: "SimplicialMap") -> "SimplicialMap":
        """``self o other``."""
        if other.target is not self.source:
            raise SimplicialError("maps are not composable")
        return SimplicialMap(other.source, self.target,
                             {g: self(other.images[g]) for g, _ in other.source.generators})

    @classmethod
    def identity(cls, X: FiniteSimplicialSet) -> "SimplicialMap":
        return cls(X, X, {g: X.simplex(g) for g, _ in X.generators}, check=False)

    @classmethod
    def collapse(cls, X: FiniteSimplicialSet, pt: FiniteSimplicialSet | None = None) -> "SimplicialMap":
        pt = pt or point()
        v = pt.generators[0][0]
        return cls(X, pt, {g: SimplexRef(v, 0, tuple(range(d))) for g, d in X.generators})


# -- constructions -----------------------------------------------------------
class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def pushout(f: SimplicialMap, g: SimplicialMap, name: str = "W"):
    """Pushout of ``X <-f- Z -g-> Y`` computed levelwise on normal forms.

    Returns ``(W, i, j)`` with ``i: X -> W`` and ``j: Y -> W``.
    """
    if f.source is not g.source:
        raise SimplicialError("pushout needs a common source")
    Z, X, Y = f.source, f.target, g.target
    top = max(X.max_dim, Y.max_dim, 0)
    uf = _UnionFind()
    # tags: 0 for X, 1 for Y; union-find works on (level, tag, position)
    for k in range(top + 1):
        for p in range(len(X.level(k))):
            uf.find((k, 0, p))
        for p in range(len(Y.level(k))):
            uf.find((k, 1, p))
        fm, gm = f.level_map(k), g.level_map(k)
        for z in range(len(Z.level(k))):
            uf.union((k, 0, fm[z]), (k, 1, gm[z]))

    def member(key):
        k, tag, p = key
        return (X if tag == 0 else Y).level(k)[p]

    classes: dict = {}
    for key in sorted(uf.parent):
        classes.setdefault(uf.find(key), []).append(key)

    overlap = set(X.gen_dim) & set(Y.gen_dim)

    def gen_name(tag, gid):
        if not overlap:
            return gid
        return ("x." if tag == 0 else "y.") + gid

    nondeg = {}
    for root, members in classes.items():
        if all(not member(m).word for m in members):
            k, tag, p = members[0]
            nondeg[root] = (gen_name(tag, member(members[0]).generator), k)

    normal: dict = {}

    def normal_form(root):
        if root in normal:
            return normal[root]
        if root in nondeg:
            gid, k = nondeg[root]
            res = SimplexRef(gid, k, ())
        else:
            m = next(m for m in classes[root] if member(m).word)
            s = member(m)
            k, tag = m[0], m[1]
            base = SimplexRef(s.generator, s.gen_dim, ())
            src = X if tag == 0 else Y
            inner = uf.find((s.gen_dim, tag, src.index(s.gen_dim)[base]))
            res = degenerate_by(normal_form(inner), s.word)
        normal[root] = res
        return res

    # generators sorted by dimension, then by first member key
    gens = sorted(((d, min(classes[r]), gid, r) for r, (gid, d) in nondeg.items()))
    generators = [(gid, d) for d, _, gid, _ in gens]
    faces = {}
    for d, first, gid, r in gens:
        if d == 0:
            continue
        k, tag, p = first
        src = X if tag == 0 else Y
        s = member(first)
        fl = []
        for i in range(d + 1):
            fs = src.face(s, i)
            fl.append(normal_form(uf.find((k - 1, tag, src.index(k - 1)[fs]))))
        faces[gid] = fl
    bp = None
    for tag, S in ((0, X), (1, Y)):
        if S.basepoint is not None:
            bp = normal_form(uf.find((0, tag, S.index(0)[S.simplex(S.basepoint)]))).generator
            break
    W = FiniteSimplicialSet(generators, faces, bp, name=name)

    def inclusion(tag, S):
        imgs = {}
        for gid, d in S.generators:
            imgs[gid] = normal_form(uf.find((d, tag, S.index(d)[S.simplex(gid)])))
        m = SimplicialMap(S, W, imgs, check=False)
        # with an unpointed Z the basepoint of Y need not land on that of W
        m.validate(pointed=Z.basepoint is not None)
        return m

    return W, inclusion(0, X), inclusion(1, Y)


def _nondegenerate_pair_form(a: SimplexRef, b: SimplexRef):
    """Split a pair of k-simplices as ``s_L(a', b')`` with ``(a', b')`` non-degenerate."""
    common = sorted(set(a.word) & set(b.word))
    sa, sb = surjection(a), surjection(b)
    keep = [t for t in range(len(sa)) if t == 0 or (t - 1) not in common]
    ra = [sa[t] for t in keep]
    rb = [sb[t] for t in keep]
    return (SimplexRef(a.generator, a.gen_dim, _word_of(ra)),
            SimplexRef(b.generator, b.gen_dim, _word_of(rb)), tuple(common))


def product(X: FiniteSimplicialSet, Y: FiniteSimplicialSet, name: str | None = None):
    """Levelwise product; non-degenerate pairs are those with disjoint words."""
    def pid(a: SimplexRef, b: SimplexRef) -> str:
        return f"({a},{b})"

    entries = []
    for gx, p in X.generators:
        for gy, q in Y.generators:
            for k in range(max(p, q), p + q + 1):
                for J in combinations(range(k), k - p):
                    rest = [t for t in range(k) if t not in J]
                    for K in combinations(rest, k - q):
                        a, b = SimplexRef(gx, p, J), SimplexRef(gy, q, K)
                        entries.append((k, X.order[gx], Y.order[gy], J, K, a, b))
    entries.sort(key=lambda e: e[:5])
    generators = [(pid(a, b), k) for k, _, _, _, _, a, b in entries]
    faces = {}
    for k, _, _, _, _, a, b in entries:
        if k == 0:
            continue
        fl = []
        for i in range(k + 1):
            fa, fb = X.face(a, i), Y.face(b, i)
            na, nb, L = _nondegenerate_pair_form(fa, fb)
            fl.append(SimplexRef(pid(na, nb), na.dim, L))
        faces[pid(a, b)] = fl
    bp = None
    if X.basepoint is not None and Y.basepoint is not None:
        bp = pid(X.simplex(X.basepoint), Y.simplex(Y.basepoint))
    return FiniteSimplicialSet(generators, faces, bp, name=name or f"{X.name}x{Y.name}")


def disjoint_union(X: FiniteSimplicialSet, Y: FiniteSimplicialSet, name: str | None = None):
    """``X ⊔ Y`` with ids prefixed ``a.``/``b.``; the basepoint is X's."""
    def ren(prefix, s):
        return SimplexRef(prefix + s.generator, s.gen_dim, s.word)

    gens = [("a." + g, d) for g, d in X.generators] + [("b." + g, d) for g, d in Y.generators]
    faces = {"a." + g: [ren("a.", f) for f in fs] for g, fs in X.faces.items()}
    faces.update({"b." + g: [ren("b.", f) for f in fs] for g, fs in Y.faces.items()})
    bp = "a." + X.basepoint if X.basepoint is not None else None
    return FiniteSimplicialSet(gens, faces, bp, name=name or f"{X.name}+{Y.name}")


def subcomplex(X: FiniteSimplicialSet, generator_ids: Iterable[str], name: str = "U"):
    """Smallest simplicial subset containing the given generators."""
    keep = set()
    stack = list(generator_ids)
    while stack:
        g = stack.pop()
        if g in keep:
            continue
        if g not in X.gen_dim:
            raise SimplicialError(f"unknown generator {g}")
        keep.add(g)
        stack.extend(f.generator for f in X.faces[g])
    gens = [(g, d) for g, d in X.generators if g in keep]
    bp = X.basepoint if X.basepoint in keep else None
    return FiniteSimplicialSet(gens, {g: X.faces[g] for g, _ in gens}, bp, name=name, check=False)


def inclusion(sub: FiniteSimplicialSet, X: FiniteSimplicialSet) -> SimplicialMap:
    return SimplicialMap(sub, X, {g: X.simplex(g) for g, _ in sub.generators})


# -- standard models -------------------------------------------------------------
def point() -> FiniteSimplicialSet:
    return FiniteSimplicialSet([("v", 0)], {}, "v", name="point")


def _vid(vs) -> str:
    return "[" + "".join(map(str, vs)) + "]"


def delta(n: int, boundary: bool = False) -> FiniteSimplicialSet:
    """The standard n-simplex (or its boundary), vertices ``[0]..[n]``."""
    gens, faces = [], {}
    for q in range(n + 1):
        if boundary and q == n:
            continue
        for vs in combinations(range(n + 1), q + 1):
            gid = _vid(vs)
            gens.append((gid, q))
            if q:
                faces[gid] = [SimplexRef(_vid(vs[:i] + vs[i + 1:]), q - 1) for i in range(q + 1)]
    name = f"boundary_delta({n})" if boundary else f"delta({n})"
    return FiniteSimplicialSet(gens, faces, "[0]", name=name)


def sphere(n: int) -> FiniteSimplicialSet:
    """Δⁿ/∂Δⁿ: one vertex and one n-cell whose faces are all degenerate."""
    if n < 1:
        raise SimplicialError("sphere(n) needs n >= 1")
    base = SimplexRef("v", 0, tuple(range(n - 1)))
    return FiniteSimplicialSet([("v", 0), ("e" if n == 1 else "c", n)],
                               {("e" if n == 1 else "c"): [base] * (n + 1)}, "v",
                               name="circle_minimal" if n == 1 else f"sphere({n})")


def interval() -> FiniteSimplicialSet:
    X = delta(1)
    X.name = "interval"
    return X


def square() -> FiniteSimplicialSet:
    """I x I with the two triangles sharing the diagonal ``00 -> 11``."""
    v = lambda g: SimplexRef(g, 0)  # noqa: E731
    e = lambda g: SimplexRef(g, 1)  # noqa: E731
    gens = [("00", 0), ("01", 0), ("10", 0), ("11", 0),
            ("h0", 1), ("h1", 1), ("v0", 1), ("v1", 1), ("diag", 1),
            ("ta", 2), ("tb", 2)]
    faces = {
        # first coordinate horizontal: h0 = 00->10, h1 = 01->11; v0 = 00->01, v1 = 10->11
        "h0": [v("10"), v("00")], "h1": [v("11"), v("01")],
        "v0": [v("01"), v("00")], "v1": [v("11"), v("10")],
        "diag": [v("11"), v("00")],
        "ta": [e("v1"), e("diag"), e("h0")],   # 00 -> 10 -> 11
        "tb": [e("h1"), e("diag"), e("v0")],   # 00 -> 01 -> 11
    }
    return FiniteSimplicialSet(gens, faces, "00", name="square")


def polygon(n: int) -> FiniteSimplicialSet:
    """A circle with n vertices ``p0..p(n-1)`` and edges ``e_i: p_i -> p_(i+1)``."""
    if n < 1:
        raise SimplicialError("a polygon needs at least one edge")
    gens = [(f"p{i}", 0) for i in range(n)] + [(f"e{i}", 1) for i in range(n)]
    faces = {f"e{i}": [SimplexRef(f"p{(i + 1) % n}", 0, ()), SimplexRef(f"p{i}", 0, ())]
             for i in range(n)}
    return FiniteSimplicialSet(gens, faces, "p0", name=f"polygon({n})")


def circle_two_cell() -> FiniteSimplicialSet:
    Z = FiniteSimplicialSet([("a", 0), ("b", 0)], {}, name="S0")
    I1, I2 = delta(1), delta(1)
    f = SimplicialMap(Z, I1, {"a": I1.simplex("[0]"), "b": I1.simplex("[1]")})
    g = SimplicialMap(Z, I2, {"a": I2.simplex("[0]"), "b": I2.simplex("[1]")})
    W, _, _ = pushout(f, g, name="circle_two_cell")
    return W


def _two_intervals() -> FiniteSimplicialSet:
    return disjoint_union(delta(1), delta(1), name="I+I")


def cylinder_gluing():
    """Data ``(f, g)`` of the gluing ``I² ∪_{I⊔I} I`` along the vertical edges."""
    Sq, I = square(), delta(1)
    Z = _two_intervals()
    f = SimplicialMap(Z, Sq, {"a.[0]": Sq.simplex("00"), "a.[1]": Sq.simplex("01"), "a.[01]": Sq.simplex("v0"),
                              "b.[0]": Sq.simplex("10"), "b.[1]": Sq.simplex("11"), "b.[01]": Sq.simplex("v1")})
    g = SimplicialMap(Z, I, {"a.[0]": I.simplex("[0]"), "a.[1]": I.simplex("[1]"), "a.[01]": I.simplex("[01]"),
                             "b.[0]": I.simplex("[0]"), "b.[1]": I.simplex("[1]"), "b.[01]": I.simplex("[01]")})
    return f, g


def cylinder() -> FiniteSimplicialSet:
    W, _, _ = pushout(*cylinder_gluing(), name="cylinder")
    return W


def torus_gluing():
    """Data ``(f, g)`` gluing the two boundary loops of the cylinder."""
    C = cylinder()
    I = delta(1)
    Z = _two_intervals()
    # the horizontal edges h0, h1 of the square survive as the boundary loops
    loops = [g for g, d in C.generators if d == 1 and g in ("x.h0", "h0")] + \
            [g for g, d in C.generators if d == 1 and g in ("x.h1", "h1")]
    if len(loops) != 2:
        raise SimplicialError("unexpected cylinder presentation")
    f_imgs, g_imgs = {}, {}
    for tag, loop in zip("ab", loops):
        src = C.faces[loop][1]
        tgt = C.faces[loop][0]
        f_imgs[f"{tag}.[0]"], f_imgs[f"{tag}.[1]"] = src, tgt
        f_imgs[f"{tag}.[01]"] = C.simplex(loop)
        g_imgs[f"{tag}.[0]"], g_imgs[f"{tag}.[1]"] = I.simplex("[0]"), I.simplex("[1]")
        g_imgs[f"{tag}.[01]"] = I.simplex("[01]")
    return SimplicialMap(Z, C, f_imgs), SimplicialMap(Z, I, g_imgs)


def torus_glued() -> FiniteSimplicialSet:
    W, _, _ = pushout(*torus_gluing(), name="torus_glued")
    return W


def standard_model(name: str) -> FiniteSimplicialSet:
    """Look up a named model, e.g. ``"circle_minimal"``, ``"delta(2)"``, ``"sphere(3)"``."""
    name = name.strip()
    simple = {
        "point": point, "interval": interval, "square": square,
        "circle_minimal": lambda: sphere(1), "circle_two_cell": circle_two_cell,
        "cylinder": cylinder, "torus_glued": torus_glued,
    }
    if name in simple:
        return _cached(name, simple[name])
    for prefix, fn in (("boundary_delta", lambda n: delta(n, boundary=True)),
                       ("delta", delta), ("sphere", sphere)):
        if name.startswith(prefix + "(") and name.endswith(")"):
            try:
                n = int(name[len(prefix) + 1:-1])
            except ValueError:
                break
            return _cached(name, lambda: fn(n))
    raise SimplicialError(f"unknown model {name!r}")


_MODEL_CACHE: dict = {}


def _cached(name, factory):
    # models are immutable once built; level/face caches are safe to share
    if name not in _MODEL_CACHE:
        _MODEL_CACHE[name] = factory()
    return _MODEL_CACHE[name]


STANDARD_MODELS = ("point", "interval", "delta(2)", "boundary_delta(2)", "sphere(2)", "square",
                   "circle_minimal", "circle_two_cell", "cylinder", "torus_glued")
