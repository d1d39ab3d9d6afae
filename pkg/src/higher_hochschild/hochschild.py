"""The higher Hochschild chain complex CH_X(A) and CH_X(A, M).

A chain at simplicial level ``k`` is a combination of *monomial tensors*: one
basis index of ``A`` for every tensor position.  Unpointed complexes use one
position per k-simplex of ``X`` (canonical level order); pointed complexes put
the module factor first, at the basepoint, followed by the remaining simplices.

A level-k monomial of internal degree ``d`` sits in total cohomological degree
``n = d - k``, and the differential is

    D = sum_i (-1)^i (d_i)_*  +  (-1)^k delta,

where ``delta`` is the internal differential with the usual Koszul signs.  The
complex splits by the auxiliary weight of the algebra, and every matrix here is
one (degree, weight) block.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from .cdga import (AlgebraError, FreeGradedAlgebra, GradedAlgebra, GradedModule, _add_into,
                   as_table)
from .exactla import SparseMatrix
from .simplicial import FiniteSimplicialSet, SimplicialError, SimplicialMap, pushout

DEFAULT_MAX_BASIS = 250_000


class BasisTooLarge(RuntimeError):
    """A tensor basis would exceed ``HH_MAX_BASIS`` elements."""


class ComplexError(ValueError):
    pass


def max_basis() -> int:
    try:
        return int(os.environ.get("HH_MAX_BASIS", DEFAULT_MAX_BASIS))
    except ValueError:
        return DEFAULT_MAX_BASIS


def koszul_sign(degrees: Sequence[int], permutation: Sequence[int]) -> int:
    """Sign of reordering factors of the given degrees into ``permutation`` order.

    ``permutation[p]`` is the old index of the factor that ends up in slot ``p``.

    >>> koszul_sign([-1, -2, -1], [2, 1, 0])
    -1
    """
    if sorted(permutation) != list(range(len(degrees))):
        raise ValueError("not a permutation of the factor indices")
    odd = [degrees[i] % 2 != 0 for i in permutation]
    sign = 1
    for p in range(len(permutation)):
        if not odd[p]:
            continue
        for q in range(p + 1, len(permutation)):
            if odd[q] and permutation[p] > permutation[q]:
                sign = -sign
    return sign


def shuffle_sign(mu: Sequence[int], nu: Sequence[int]) -> int:
    """Sign of the permutation listing ``mu`` then ``nu``."""
    inv = sum(1 for a in mu for b in nu if a > b)
    return -1 if inv % 2 else 1


def _window_bounds(window) -> int:
    if window is None:
        raise ComplexError("a window lower bound is required")
    if isinstance(window, (tuple, list)):
        lo, hi = window
        if hi != 0:
            raise ComplexError("windows must end at degree 0")
        window = lo
    window = int(window)
    if window > 0:
        raise ComplexError("window lower bound must be <= 0")
    return window


class HochschildComplex:
    """CH_X(A) (or CH_X(A, M) when a module is given) in total degrees ``[n_min, 0]``.

    Bases and matrices are built lazily and cached.  Homology in degree
    ``n_min`` is only an upper bound, since differentials from degree
    ``n_min - 1`` are not built; see :attr:`trusted_min`.
    """

    def __init__(self, X: FiniteSimplicialSet, A, M: GradedModule | None = None, window=None,
                 normalized: bool = False, basis_cap: int | None = None):
        self.n_min = _window_bounds(window)
        self.X = X
        if M is not None:
            if X.basepoint is None:
                raise ComplexError("module coefficients need a pointed simplicial set")
            if isinstance(A, FreeGradedAlgebra):
                raise ComplexError("modules are defined over table algebras")
            if M.algebra is not A:
                raise ComplexError("module is defined over a different algebra")
        self.A: GradedAlgebra = as_table(A, self.n_min)
        self.M = M
        self.pointed = M is not None
        self.normalized = normalized
        self.basis_cap = basis_cap if basis_cap is not None else max_basis()
        self._blocks: dict = {}
        self._pos: dict = {}
        self._phi: dict = {}
        self._mats: dict = {}
        A_ = self.A
        self._aodd = [d % 2 != 0 for d in A_.degrees]
        self._modd = [d % 2 != 0 for d in M.degrees] if M else None

    @property
    def trusted_min(self) -> int:
        return self.n_min + 1

    @property
    def max_level(self) -> int:
        return -self.n_min

    def __repr__(self):
        mod = f", M={self.M.name}" if self.M else ""
        norm = ", normalized" if self.normalized else ""
        return f"HochschildComplex(X={self.X.name}, A={self.A.name}{mod}, window=[{self.n_min}, 0]{norm})"

    # -- positions ---------------------------------------------------------
    def positions(self, k: int) -> list:
        """Simplices labelling the tensor positions at level k."""
        if k not in self._pos:
            if self.pointed:
                sims = [self.X.basepoint_simplex(k)] + self.X.level(k, pointed=True)
            else:
                sims = list(self.X.level(k))
            full = self.X.index(k)
            pos_of_full = [0] * len(sims)
            for p, s in enumerate(sims):
                pos_of_full[full[s]] = p
            self._pos[k] = (sims, tuple(pos_of_full), [s.mask for s in sims])
        return self._pos[k][0]

    def pos_of_full(self, k: int) -> tuple:
        self.positions(k)
        return self._pos[k][1]

    def masks(self, k: int) -> list:
        self.positions(k)
        return self._pos[k][2]

    def face_phi(self, k: int, i: int) -> tuple:
        key = ("d", k, i)
        if key not in self._phi:
            fm = self.X.face_map(k, i)
            src = self.positions(k)
            full = self.X.index(k)
            tgt = self.pos_of_full(k - 1)
            self._phi[key] = tuple(tgt[fm[full[s]]] for s in src)
        return self._phi[key]

    def degeneracy_phi(self, k: int, word: Sequence[int]) -> tuple:
        """Position map of ``s_{w_l} ... s_{w_1}`` from level k to level k + l."""
        word = tuple(word)
        key = ("s", k, word)
        if key not in self._phi:
            phi = tuple(range(len(self.positions(k))))
            level = k
            for j in word:
                dm = self.X.degeneracy_map(level, j)
                full_src = self.X.index(level)
                src = self.positions(level)
                tgt = self.pos_of_full(level + 1)
                step = [tgt[dm[full_src[s]]] for s in src]
                phi = tuple(step[p] for p in phi)
                level += 1
            self._phi[key] = phi
        return self._phi[key]

    def map_phi(self, f: SimplicialMap, target: "HochschildComplex", k: int) -> tuple:
        lm = f.level_map(k)
        src = self.positions(k)
        full = self.X.index(k)
        tgt = target.pos_of_full(k)
        phi = tuple(tgt[lm[full[s]]] for s in src)
        if self.pointed and phi[0] != 0:
            raise ComplexError("map does not preserve the basepoint")
        return phi

    # -- factor data -----------------------------------------------------------
    def factor_degree(self, p: int, b: int) -> int:
        if self.pointed and p == 0:
            return self.M.degrees[b]
        return self.A.degrees[b]

    def factor_weight(self, p: int, b: int) -> int:
        if self.pointed and p == 0:
            return self.M.weights[b]
        return self.A.weights[b]

    def _odd(self, p: int, b: int) -> bool:
        if self.pointed and p == 0:
            return self._modd[b]
        return self._aodd[b]

    def mono_degree(self, mono) -> int:
        return sum(self.factor_degree(p, b) for p, b in enumerate(mono))

    def mono_weight(self, mono) -> int:
        return sum(self.factor_weight(p, b) for p, b in enumerate(mono))

    def is_degenerate(self, k: int, mono) -> bool:
        """True when the non-unit support lies in the image of one degeneracy."""
        if k == 0:
            return False
        masks = self.masks(k)
        unit = self.A.unit
        acc = (1 << k) - 1
        start = 1 if self.pointed else 0
        for p in range(start, len(mono)):
            if mono[p] != unit:
                acc &= masks[p]
                if not acc:
                    return False
        return True

    # -- bases -------------------------------------------------------------------
    def _choices(self, p: int):
        if self.pointed and p == 0:
            M = self.M
            return [(b, M.degrees[b], M.weights[b]) for b in range(M.dim)]
        A = self.A
        return [(b, A.degrees[b], A.weights[b]) for b in range(A.dim)]

    def estimate(self, k: int, d: int) -> int:
        """Number of unnormalized monomials of level k and internal degree d."""
        counts = {0: 1}
        for p in range(len(self.positions(k))):
            new: dict = {}
            for dd, c in counts.items():
                for _, deg, _ in self._choices(p):
                    if dd + deg >= d:
                        new[dd + deg] = new.get(dd + deg, 0) + c
            counts = new
        return counts.get(d, 0)

    def block(self, k: int, d: int) -> dict:
        """``{weight: (monomials, index)}`` for level k and internal degree d."""
        key = (k, d)
        if key in self._blocks:
            return self._blocks[key]
        if k < 0 or d > 0 or d - k < self.n_min:
            self._blocks[key] = {}
            return {}
        npos = len(self.positions(k))
        cap = self.basis_cap
        if not self.normalized and self.estimate(k, d) > cap:
            raise BasisTooLarge(f"level {k}, internal degree {d} of {self.X.name} has "
                                f"{self.estimate(k, d)} monomials (cap {cap})")
        choices = [self._choices(p) for p in range(npos)]
        mindeg = [min(c[1] for c in ch) for ch in choices]
        suffix_min = [0] * (npos + 1)
        for p in range(npos - 1, -1, -1):
            suffix_min[p] = suffix_min[p + 1] + mindeg[p]
        masks = self.masks(k)
        unit = self.A.unit
        start = 1 if self.pointed else 0
        full_mask = (1 << k) - 1
        suffix_and = [full_mask] * (npos + 1)
        for p in range(npos - 1, -1, -1):
            suffix_and[p] = suffix_and[p + 1] & (masks[p] if p >= start else full_mask)
        check_norm = self.normalized and k > 0
        out: dict = {}
        count = 0
        mono = [0] * npos

        def rec(p, deg, wt, acc):
            nonlocal count
            if p == npos:
                if deg != d or (check_norm and acc):
                    return
                count += 1
                if count > cap:
                    raise BasisTooLarge(f"level {k}, internal degree {d} of {self.X.name} "
                                        f"exceeds the basis cap {cap}")
                out.setdefault(wt, []).append(tuple(mono))
                return
            if check_norm and acc & suffix_and[p]:
                return
            for b, bd, bw in choices[p]:
                nd = deg + bd
                if nd < d or nd + suffix_min[p + 1] > d:
                    continue
                mono[p] = b
                if p >= start and b != unit:
                    rec(p + 1, nd, wt + bw, acc & masks[p])
                else:
                    rec(p + 1, nd, wt + bw, acc)

        rec(0, 0, 0, full_mask)
        res = {w: (monos, {m: n for n, m in enumerate(monos)}) for w, monos in sorted(out.items())}
        self._blocks[key] = res
        return res

    def basis(self, k: int, d: int, w: int = 0) -> list:
        return self.block(k, d).get(w, ([], {}))[0]

    def levels_in_degree(self, n: int) -> list:
        """Pairs ``(k, d)`` contributing to total degree n."""
        if n > 0 or n < self.n_min:
            return []
        return [(k, n + k) for k in range(0, -n + 1)]

    def weights(self, n: int) -> list:
        ws = set()
        for k, d in self.levels_in_degree(n):
            ws.update(self.block(k, d))
        return sorted(ws)

    def all_weights(self) -> list:
        ws = set()
        for n in range(self.n_min, 1):
            ws.update(self.weights(n))
        return sorted(ws)

    def degree_basis(self, n: int, w: int) -> list:
        """Basis of C^n in weight w as ``(k, monomial)`` pairs, ordered by level."""
        out = []
        for k, d in self.levels_in_degree(n):
            out.extend((k, m) for m in self.basis(k, d, w))
        return out

    def degree_index(self, n: int, w: int) -> dict:
        key = ("idx", n, w)
        if key not in self._mats:
            self._mats[key] = {b: i for i, b in enumerate(self.degree_basis(n, w))}
        return self._mats[key]

    def dim(self, n: int, w: int | None = None) -> int:
        if w is None:
            return sum(self.dim(n, x) for x in self.weights(n))
        return sum(len(self.basis(k, d, w)) for k, d in self.levels_in_degree(n))

    # -- chain-level operations ------------------------------------------------
    def push(self, mono, phi: Sequence[int], n_tgt: int) -> dict:
        """``f_*`` of one monomial along a position map.

        Factors are regrouped by target position (Koszul sign of the stable
        sort), multiplied left to right inside each group, and units fill the
        empty groups.  In the pointed case the module factor absorbs the group
        at the basepoint through the right action ``m·a = (-1)^{|m||a|} a·m``.
        """
        A = self.A
        unit = A.unit
        sign = 1
        odd_pos = [p for p, b in enumerate(mono) if self._odd(p, b)]
        for x in range(len(odd_pos)):
            px = phi[odd_pos[x]]
            for y in range(x + 1, len(odd_pos)):
                if px > phi[odd_pos[y]]:
                    sign = -sign
        parts: list = [None] * n_tgt
        for p, b in enumerate(mono):
            j = phi[p]
            if self.pointed and p == 0:
                parts[0] = {b: 1}
                continue
            if b == unit:
                continue
            cur = parts[j]
            if cur is None:
                parts[j] = {b: 1}
            elif self.pointed and j == 0:
                M = self.M
                new: dict = {}
                for m, c in cur.items():
                    s = -c if (self._modd[m] and self._aodd[b]) else c
                    for t, e in M.action.get((b, m), {}).items():
                        _add_into(new, t, s * e)
                if not new:
                    return {}
                parts[0] = new
            else:
                new = {}
                for a, c in cur.items():
                    for t, e in A.mult.get((a, b), {}).items():
                        _add_into(new, t, c * e)
                if not new:
                    return {}
                parts[j] = new
        return _expand(parts, unit, sign)

    def internal(self, mono) -> dict:
        """The internal differential on a monomial (Koszul-signed)."""
        out: dict = {}
        parity = 0
        for p, b in enumerate(mono):
            if self.pointed and p == 0:
                row = self.M.diff.get(b)
            else:
                row = self.A.diff.get(b)
            if row:
                s = -1 if parity else 1
                for b2, c in row.items():
                    new = mono[:p] + (b2,) + mono[p + 1:]
                    _add_into(out, new, s * c)
            parity ^= self._odd(p, b)
        return out

    def face_chain(self, k: int, i: int, mono) -> dict:
        return self.push(mono, self.face_phi(k, i), len(self.positions(k - 1)))

    def project(self, chain: Mapping) -> dict:
        """Drop degenerate monomials (identity on unnormalized complexes)."""
        if not self.normalized:
            return dict(chain)
        return {(k, m): c for (k, m), c in chain.items() if not self.is_degenerate(k, m)}

    def apply_D(self, chain: Mapping) -> dict:
        """D on a chain ``{(k, monomial): coeff}``, computed without matrices."""
        out: dict = {}
        for (k, m), c in chain.items():
            if k > 0:
                for i in range(k + 1):
                    s = -c if i % 2 else c
                    for t, e in self.face_chain(k, i, m).items():
                        _add_into(out, (k - 1, t), s * e)
            s = -c if k % 2 else c
            for t, e in self.internal(m).items():
                _add_into(out, (k, t), s * e)
        return self.project(out)

    def chain_degree(self, chain: Mapping) -> set:
        return {self.mono_degree(m) - k for (k, m) in chain}

    def to_vector(self, chain: Mapping, n: int, w: int) -> dict:
        idx = self.degree_index(n, w)
        vec: dict = {}
        for key, c in self.project(chain).items():
            if key not in idx:
                raise ComplexError(f"chain term {key} is not in degree {n}, weight {w}")
            _add_into(vec, idx[key], c)
        return vec

    def from_vector(self, n: int, w: int, vec: Mapping) -> dict:
        basis = self.degree_basis(n, w)
        return {basis[i]: c for i, c in vec.items() if c}

    def unit_chain(self) -> dict:
        if self.pointed:
            raise ComplexError("the unit chain lives in the unpointed complex")
        return {(0, tuple([self.A.unit] * len(self.positions(0)))): 1}

    # -- matrices --------------------------------------------------------------
    def _column(self, vec_chain: Mapping, idx: Mapping) -> dict:
        col: dict = {}
        for key, c in vec_chain.items():
            r = idx.get(key)
            if r is None:
                if self.normalized and self.is_degenerate(*key):
                    continue
                raise ComplexError(f"image term {key} missing from the target basis")
            _add_into(col, r, c)
        return col

    def face_matrix(self, k: int, i: int, d: int, w: int = 0) -> SparseMatrix:
        """``(d_i)_*`` from block (k, d, w) to block (k-1, d, w)."""
        key = ("face", k, i, d, w)
        if key not in self._mats:
            src = self.basis(k, d, w)
            tgt = self.block(k - 1, d).get(w, ([], {}))[1]
            cols = []
            for m in src:
                im = {(k - 1, t): c for t, c in self.face_chain(k, i, m).items()}
                cols.append(self._column(im, {(k - 1, t): r for t, r in tgt.items()}) if im else {})
            self._mats[key] = SparseMatrix.from_columns(len(tgt), cols)
        return self._mats[key]

    def internal_matrix(self, k: int, d: int, w: int = 0) -> SparseMatrix:
        key = ("int", k, d, w)
        if key not in self._mats:
            src = self.basis(k, d, w)
            tgt = self.block(k, d + 1).get(w, ([], {}))[1] if d < 0 else {}
            cols = []
            for m in src:
                im = {(k, t): c for t, c in self.internal(m).items()}
                cols.append(self._column(im, {(k, t): r for t, r in tgt.items()}) if im else {})
            self._mats[key] = SparseMatrix.from_columns(len(tgt), cols)
        return self._mats[key]

    def differential(self, n: int, w: int = 0) -> SparseMatrix:
        """D: C^n -> C^{n+1} in weight w."""
        key = ("D", n, w)
        if key not in self._mats:
            src = self.degree_basis(n, w)
            tgt = self.degree_index(n + 1, w) if n + 1 <= 0 else {}
            cols = []
            for (k, m) in src:
                im = self.apply_D({(k, m): 1})
                cols.append(self._column(im, tgt))
            self._mats[key] = SparseMatrix.from_columns(len(tgt), cols)
        return self._mats[key]

    def check_d_squared(self) -> list:
        """``(n, w)`` blocks where D∘D fails to vanish (empty list when it holds)."""
        bad = []
        for n in range(self.n_min, -1):
            for w in self.weights(n):
                if not (self.differential(n + 1, w) @ self.differential(n, w)).is_zero():
                    bad.append((n, w))
        return bad


def _expand(parts: Sequence, unit: int, sign: int) -> dict:
    """Tensor the per-position vectors ``parts`` (None means the unit)."""
    terms = [((), sign)]
    for part in parts:
        if part is None:
            terms = [(t + (unit,), c) for t, c in terms]
        elif len(part) == 1:
            (b, e), = part.items()
            terms = [(t + (b,), c * e) for t, c in terms]
        else:
            terms = [(t + (b,), c * e) for t, c in terms for b, e in part.items()]
    out: dict = {}
    for t, c in terms:
        _add_into(out, t, c)
    return out


def build_complex(X: FiniteSimplicialSet, A, M: GradedModule | None = None, window=None,
                  normalized: bool = False) -> HochschildComplex:
    return HochschildComplex(X, A, M, window, normalized)


# -- chain maps ------------------------------------------------------------------
@dataclass
class ChainMap:
    """A degree-0 map given by one matrix per ``(degree, weight)`` block."""

    source: HochschildComplex
    target: HochschildComplex
    blocks: dict = field(default_factory=dict)
    n_min: int = 0

    def matrix(self, n: int, w: int) -> SparseMatrix:
        if (n, w) in self.blocks:
            return self.blocks[(n, w)]
        return SparseMatrix.zero(self.target.dim(n, w), self.source.dim(n, w))

    def keys(self):
        keys = set()
        for n in range(self.n_min, 1):
            keys.update((n, w) for w in self.source.weights(n))
            keys.update((n, w) for w in self.target.weights(n))
        return sorted(keys, key=lambda t: (-t[0], t[1]))

    def is_chain_map(self) -> bool:
        for n, w in self.keys():
            if n + 1 > 0:
                continue
            lhs = self.target.differential(n, w) @ self.matrix(n, w)
            rhs = self.matrix(n + 1, w) @ self.source.differential(n, w)
            if lhs != rhs:
                return False
        return True

    def compose(self, first: "ChainMap") -> "ChainMap":
        """``self ∘ first``."""
        if first.target is not self.source:
            raise ComplexError("chain maps are not composable")
        nm = max(self.n_min, first.n_min)
        out = ChainMap(first.source, self.target, {}, nm)
        for n, w in out.keys():
            out.blocks[(n, w)] = self.matrix(n, w) @ first.matrix(n, w)
        return out

    def __eq__(self, other):
        if not isinstance(other, ChainMap):
            return NotImplemented
        keys = set(self.keys()) | set(other.keys())
        return all(self.matrix(n, w) == other.matrix(n, w) for n, w in keys)


def _map_from_images(Cs: HochschildComplex, Ct: HochschildComplex, image, n_min: int) -> ChainMap:
    out = ChainMap(Cs, Ct, {}, n_min)
    for n in range(n_min, 1):
        for w in Cs.weights(n):
            tgt = Ct.degree_index(n, w)
            cols = []
            for key in Cs.degree_basis(n, w):
                im = Ct.project(image(key))
                col: dict = {}
                for t, c in im.items():
                    r = tgt.get(t)
                    if r is None:
                        raise ComplexError(f"image {t} outside the target basis (weight not preserved?)")
                    _add_into(col, r, c)
                cols.append(col)
            out.blocks[(n, w)] = SparseMatrix.from_columns(len(tgt), cols)
    return out


def induced_map(f: SimplicialMap, Cs: HochschildComplex, Ct: HochschildComplex) -> ChainMap:
    """The chain map ``f_*: CH_X -> CH_Y`` induced by a simplicial map."""
    if f.source is not Cs.X or f.target is not Ct.X:
        raise ComplexError("simplicial map does not match the complexes")
    if Cs.A is not Ct.A or Cs.M is not Ct.M or Cs.normalized != Ct.normalized:
        raise ComplexError("complexes must share algebra, module and normalization")
    if Cs.n_min != Ct.n_min:
        raise ComplexError("incompatible windows")

    def image(key):
        k, m = key
        phi = Cs.map_phi(f, Ct, k)
        return {(k, t): c for t, c in Cs.push(m, phi, len(Ct.positions(k))).items()}

    return _map_from_images(Cs, Ct, image, Cs.n_min)


def algebra_induced_map(h: Mapping, Cs: HochschildComplex, Ct: HochschildComplex) -> ChainMap:
    """Chain map induced by a CDGA map ``h`` (basis index -> ``{index: coeff}``).

    ``h`` must preserve degree and weight; this is not a substitute for checking
    that it is multiplicative and commutes with d.
    """
    if Cs.X is not Ct.X or Cs.pointed or Ct.pointed:
        raise ComplexError("algebra maps are supported on unpointed complexes over one space")

    def image(key):
        k, m = key
        parts = [h.get(b, {}) for b in m]
        if any(not p for p in parts):
            return {}
        return {(k, t): c for t, c in _expand(parts, Ct.A.unit, 1).items()}

    return _map_from_images(Cs, Ct, image, max(Cs.n_min, Ct.n_min))


def identity_map(C: HochschildComplex) -> ChainMap:
    out = ChainMap(C, C, {}, C.n_min)
    for n in range(C.n_min, 1):
        for w in C.weights(n):
            out.blocks[(n, w)] = SparseMatrix.identity(C.dim(n, w))
    return out


# -- shuffle product ---------------------------------------------------------------
def _pointwise(C: HochschildComplex, a, b) -> dict:
    """Positionwise product of two aligned monomials of C (a from the algebra side)."""
    A = C.A
    odd_a = [A.odd(x) for x in a]
    sign = 1
    suffix = 0
    # sign of moving every b_j leftwards past the a_i with i > j
    for j in range(len(a) - 1, -1, -1):
        if C._odd(j, b[j]) and suffix:
            sign = -sign
        suffix ^= odd_a[j]
    parts = []
    for p, (x, y) in enumerate(zip(a, b)):
        if C.pointed and p == 0:
            row = C.M.action.get((x, y), {})
        else:
            row = A.mult.get((x, y), {})
        if not row:
            return {}
        parts.append(row)
    return _expand(parts, A.unit, sign)


def shuffle_product(C: HochschildComplex, u: Mapping, v: Mapping,
                    left: HochschildComplex | None = None) -> dict:
    """The shuffle product of two chains ``{(k, monomial): coeff}``.

    ``u`` lives in ``left`` (default ``C``).  For a pointed complex ``C``,
    ``left`` must be the unpointed complex over the same space and algebra and
    the result is the module action of CH_X(A) on CH_X(A, M).
    """
    left = left or C
    if left.pointed:
        raise ComplexError("the left factor must come from an unpointed complex")
    if left.X is not C.X or left.A is not C.A:
        raise ComplexError("factors live over different spaces or algebras")
    out: dict = {}
    for (p, mu_mono), cu in u.items():
        du = left.mono_degree(mu_mono)
        for (q, mv_mono), cv in v.items():
            if p + q > C.max_level:
                raise ComplexError("shuffle product leaves the window")
            tot = p + q
            base = cu * cv * (-1 if (q * du) % 2 else 1)
            for mu in combinations(range(tot), p):
                nu = tuple(x for x in range(tot) if x not in mu)
                s = base * shuffle_sign(mu, nu)
                su = left.push(mu_mono, left.degeneracy_phi(p, nu), len(left.positions(tot)))
                sv = C.push(mv_mono, C.degeneracy_phi(q, mu), len(C.positions(tot)))
                if C is not left:
                    su = _realign(left, C, tot, su)
                for a, ca in su.items():
                    for b, cb in sv.items():
                        for t, e in _pointwise(C, a, b).items():
                            _add_into(out, (tot, t), s * ca * cb * e)
    return C.project(out)


def _realign(L: HochschildComplex, C: HochschildComplex, k: int, chain: Mapping) -> dict:
    """Reorder unpointed monomials of L into the position order of the pointed C."""
    phi = tuple(C.pos_of_full(k)[i] for i in range(len(L.positions(k))))
    # positions of L are the full level, so phi is a permutation
    out: dict = {}
    for mono, c in chain.items():
        for t, e in L.push(mono, phi, len(phi)).items():
            _add_into(out, t, c * e)
    return out


# -- pushouts -------------------------------------------------------------------------
@dataclass
class PushoutLevel:
    level: int
    classes: int
    domain_dim: int
    target_dim: int
    iso: bool
    direct_checked: bool = False
    direct_iso: bool | None = None


@dataclass
class PushoutComparison:
    W: FiniteSimplicialSet
    i: SimplicialMap
    j: SimplicialMap
    injective_side: str | None
    levels: list

    @property
    def iso(self) -> bool:
        return all(lv.iso and lv.direct_iso is not False for lv in self.levels)


def _quotient_map_rank(A: GradedAlgebra, nx: int, ny: int, zpairs, min_degree):
    """Dimension of the coequalizer of one class and the rank of its map to A.

    The class has ``nx`` X-simplices and ``ny`` Y-simplices; ``zpairs`` lists
    for each Z-simplex of the class its (X position, Y position).
    """
    from .exactla import rank_of_vectors
    from itertools import product as iproduct
    npos = nx + ny
    monos = [m for m in iproduct(range(A.dim), repeat=npos)
             if min_degree is None or sum(A.degrees[b] for b in m) >= min_degree]
    index = {m: n for n, m in enumerate(monos)}
    zero = tuple([A.unit] * npos)

    def single(pos, c):
        t = list(zero)
        t[pos] = c
        return tuple(t)

    def tensor_mul(a, b):
        # product in A^{⊗npos}
        sign = 1
        suffix = 0
        for j in range(npos - 1, -1, -1):
            if A.odd(b[j]) and suffix:
                sign = -sign
            suffix ^= A.odd(a[j])
        parts = []
        for x, y in zip(a, b):
            row = A.mult.get((x, y), {})
            if not row:
                return {}
            parts.append(row)
        return _expand(parts, A.unit, sign)

    rels = []
    for xp, yp in zpairs:
        for c in range(A.dim):
            if c == A.unit:
                continue
            for m in monos:
                # (x·c)⊗y - x⊗(c·y), written through products in A^{⊗npos}
                dx = sum(A.degrees[b] for b in m[:nx])
                dy = sum(A.degrees[b] for b in m[nx:])
                if min_degree is not None and dx + dy + A.degrees[c] < min_degree:
                    continue
                sl = -1 if (A.odd(c) and dy % 2) else 1
                sr = -1 if (A.odd(c) and dx % 2) else 1
                vec: dict = {}
                for t, e in tensor_mul(m, single(xp, c)).items():
                    if t in index:
                        _add_into(vec, index[t], sl * e)
                for t, e in tensor_mul(single(nx + yp, c), m).items():
                    if t in index:
                        _add_into(vec, index[t], -sr * e)
                if vec:
                    rels.append(vec)
    r_rel = rank_of_vectors(rels)
    # the map multiplies all factors in order
    images = []
    for m in monos:
        acc = {A.unit: 1}
        for b in m:
            acc = A.mul_vec(acc, {b: 1})
        images.append({(0, k): c for k, c in acc.items()})
    flat = [{k: c for (_, k), c in im.items()} for im in images]
    img_rank = rank_of_vectors(flat)
    well_defined = all(not _combine(rel, flat) for rel in rels)
    dom_dim = len(monos) - r_rel
    tgt_dim = sum(1 for b in range(A.dim) if min_degree is None or A.degrees[b] >= min_degree)
    # the quotient map is injective iff rels span the kernel of multiplication
    kernel_dim = len(monos) - img_rank
    injective = (r_rel == kernel_dim)
    return dom_dim, tgt_dim, well_defined and injective and img_rank == tgt_dim


def pushout_comparison(f: SimplicialMap, g: SimplicialMap, A, max_level: int = 4,
                       direct_up_to: int = 1, min_degree: int | None = None) -> PushoutComparison:
    """Compare ``CH_X ⊗_{CH_Z} CH_Y`` with ``CH_W`` level by level.

    The coequalizer splits over the equivalence classes of ``W_k``; each class
    contributes ``A^{⊗E_X} ⊗_{A^{⊗E_Z}} A^{⊗E_Y}`` mapping to one copy of A by
    multiplication.  Levels ``<= direct_up_to`` are also checked on the full
    (unsplit) tensor product when small enough.
    """
    if f.source is not g.source:
        raise SimplicialError("maps must share their source")
    if min_degree is None and isinstance(A, FreeGradedAlgebra):
        raise AlgebraError("give min_degree to compare with a free algebra")
    A = as_table(A, min_degree) if isinstance(A, FreeGradedAlgebra) else A
    W, i, j = pushout(f, g)
    side = "f" if f.is_injective() else ("g" if g.is_injective() else None)
    levels = []
    for k in range(max_level + 1):
        im_i, im_j = i.level_map(k), j.level_map(k)
        fk, gk = f.level_map(k), g.level_map(k)
        nW = W.level_size(k)
        classes = {}
        for x, t in enumerate(im_i):
            classes.setdefault(t, ([], []))[0].append(x)
        for y, t in enumerate(im_j):
            classes.setdefault(t, ([], []))[1].append(y)
        ok = True
        dom = 1
        tgt = 1
        cache: dict = {}
        for t in range(nW):
            xs, ys = classes.get(t, ([], []))
            zs = [z for z in range(len(fk)) if im_i[fk[z]] == t]
            zpairs = tuple(sorted((xs.index(fk[z]), ys.index(gk[z])) for z in zs))
            sig = (len(xs), len(ys), zpairs)
            if sig not in cache:
                cache[sig] = _quotient_map_rank(A, len(xs), len(ys), zpairs, min_degree)
            dd, td, iso = cache[sig]
            dom *= dd
            tgt *= td
            ok = ok and iso
        lv = PushoutLevel(k, nW, dom, tgt, ok)
        if k <= direct_up_to:
            if A.dim ** (len(im_i) + len(im_j)) <= 5000:
                zp = tuple((fk[z], gk[z]) for z in range(len(fk)))
                dd, td, iso = _direct_level(A, len(im_i), len(im_j), zp, im_i, im_j, nW, min_degree)
                lv.direct_checked = True
                # per-class dims are truncated class by class, so they only
                # multiply to the unsplit dim when nothing is truncated
                lv.direct_iso = iso and (min_degree is not None or dd == dom)
        levels.append(lv)
    return PushoutComparison(W, i, j, side, levels)


def _direct_level(A, nx, ny, zpairs, im_i, im_j, nW, min_degree):
    """Unsplit version: quotient of A^{X_k}⊗A^{Y_k} against A^{W_k} via (i, j)_*."""
    from .exactla import rank_of_vectors
    from itertools import product as iproduct
    npos = nx + ny
    monos = [m for m in iproduct(range(A.dim), repeat=npos)
             if min_degree is None or sum(A.degrees[b] for b in m) >= min_degree]
    index = {m: n for n, m in enumerate(monos)}
    unit = A.unit

    def tensor_mul(a, b):
        sign = 1
        suffix = 0
        for q in range(npos - 1, -1, -1):
            if A.odd(b[q]) and suffix:
                sign = -sign
            suffix ^= A.odd(a[q])
        parts = []
        for x, y in zip(a, b):
            row = A.mult.get((x, y), {})
            if not row:
                return {}
            parts.append(row)
        return _expand(parts, unit, sign)

    rels = []
    for xp, yp in zpairs:
        for c in range(A.dim):
            if c == unit:
                continue
            sx = [unit] * npos
            sx[xp] = c
            sy = [unit] * npos
            sy[nx + yp] = c
            for m in monos:
                dx = sum(A.degrees[b] for b in m[:nx])
                dy = sum(A.degrees[b] for b in m[nx:])
                if min_degree is not None and dx + dy + A.degrees[c] < min_degree:
                    continue
                sl = -1 if (A.odd(c) and dy % 2) else 1
                sr = -1 if (A.odd(c) and dx % 2) else 1
                vec: dict = {}
                for t, e in tensor_mul(m, tuple(sx)).items():
                    if t in index:
                        _add_into(vec, index[t], sl * e)
                for t, e in tensor_mul(tuple(sy), m).items():
                    if t in index:
                        _add_into(vec, index[t], -sr * e)
                if vec:
                    rels.append(vec)
    # (i, j)_*: push the X factors then the Y factors to W positions
    phi = list(im_i) + list(im_j)
    images = []
    for m in monos:
        sign = 1
        odd_pos = [p for p, b in enumerate(m) if A.odd(b)]
        for a in range(len(odd_pos)):
            for b in range(a + 1, len(odd_pos)):
                if phi[odd_pos[a]] > phi[odd_pos[b]]:
                    sign = -sign
        parts: list = [None] * nW
        dead = False
        for p, b in enumerate(m):
            if b == unit:
                continue
            t = phi[p]
            parts[t] = {b: 1} if parts[t] is None else A.mul_vec(parts[t], {b: 1})
            if not parts[t]:
                dead = True
                break
        images.append({} if dead else _expand(parts, unit, sign))
    r_rel = rank_of_vectors(rels)
    img_rank = rank_of_vectors(images)
    well_defined = all(not _combine(rel, images) for rel in rels)
    dom_dim = len(monos) - r_rel
    tgt_dim = sum(1 for w in iproduct(range(A.dim), repeat=nW)
                  if min_degree is None or sum(A.degrees[b] for b in w) >= min_degree)
    return dom_dim, tgt_dim, well_defined and (r_rel == len(monos) - img_rank) and img_rank == tgt_dim


def _combine(coeffs: Mapping, vectors: Sequence[Mapping]) -> dict:
    out: dict = {}
    for i, c in coeffs.items():
        for k, x in vectors[i].items():
            _add_into(out, k, c * x)
    return out
