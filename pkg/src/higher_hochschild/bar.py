"""Bar constructions and independent oracles.

* :class:`BarComplex` -- the normalized two-sided bar complex
  ``P ⊗ R̄^{⊗l} ⊗ Q`` computing ``Tor^R(P, Q)`` up to a layer cap.
* :class:`ClassicalHochschild` -- the textbook complex ``M ⊗ A^{⊗k}``, written
  with direct index arithmetic and no simplicial sets.
* :func:`periodic_tor_oracle` -- ``Tor^{A^e}(A, A)`` for the dual numbers from the
  2-periodic free resolution.

All complexes follow the grading of the Hochschild module: a level-l element
of internal degree d has total degree ``d - l`` and
``D = sum_i (-1)^i d_i + (-1)^l delta``.
"""
from __future__ import annotations

from typing import Sequence

from .cdga import GradedAlgebra, GradedModule, _add_into, tensor_algebra
from .exactla import SparseMatrix, rank


def _enumerate(choices: Sequence[Sequence[tuple]], d: int) -> dict:
    """Tuples picking one ``(index, degree, weight)`` per slot with total degree d."""
    n = len(choices)
    mins = [min((c[1] for c in ch), default=0) for ch in choices]
    suffix = [0] * (n + 1)
    for p in range(n - 1, -1, -1):
        suffix[p] = suffix[p + 1] + mins[p]
    out: dict = {}
    cur = [0] * n

    def rec(p, deg, wt):
        if p == n:
            if deg == d:
                out.setdefault(wt, []).append(tuple(cur))
            return
        for b, bd, bw in choices[p]:
            nd = deg + bd
            if nd < d or nd + suffix[p + 1] > d:
                continue
            cur[p] = b
            rec(p + 1, nd, wt + bw)

    if all(choices):
        rec(0, 0, 0)
    return {w: (m, {x: i for i, x in enumerate(m)}) for w, m in sorted(out.items())}


class _TensorWordComplex:
    """Shared bookkeeping: blocks per (level, internal degree, weight)."""

    def __init__(self, n_min: int, trusted_min: int):
        self.n_min = n_min
        self.trusted_min = trusted_min
        self._blocks: dict = {}
        self._mats: dict = {}

    def choices(self, l: int) -> list:
        raise NotImplementedError

    def max_level_for(self, n: int) -> int:
        return -n

    def block(self, l: int, d: int) -> dict:
        key = (l, d)
        if key not in self._blocks:
            if l < 0 or d > 0 or d - l < self.n_min or l > self.max_level_for(d - l):
                self._blocks[key] = {}
            else:
                self._blocks[key] = _enumerate(self.choices(l), d)
        return self._blocks[key]

    def basis(self, l: int, d: int, w: int = 0) -> list:
        return self.block(l, d).get(w, ([], {}))[0]

    def levels_in_degree(self, n: int) -> list:
        if n > 0 or n < self.n_min:
            return []
        return [(l, n + l) for l in range(0, self.max_level_for(n) + 1)]

    def weights(self, n: int) -> list:
        ws = set()
        for l, d in self.levels_in_degree(n):
            ws.update(self.block(l, d))
        return sorted(ws)

    def degree_basis(self, n: int, w: int) -> list:
        return [(l, m) for l, d in self.levels_in_degree(n) for m in self.basis(l, d, w)]

    def dim(self, n: int, w: int | None = None) -> int:
        if w is None:
            return sum(self.dim(n, x) for x in self.weights(n))
        return sum(len(self.basis(l, d, w)) for l, d in self.levels_in_degree(n))

    def faces(self, l: int, m) -> list:
        """``[d_0(m), ..., d_l(m)]`` as dicts over level-(l-1) monomials."""
        raise NotImplementedError

    def internal(self, l: int, m) -> dict:
        raise NotImplementedError

    def apply_D(self, l: int, m) -> dict:
        out: dict = {}
        if l > 0:
            for i, img in enumerate(self.faces(l, m)):
                s = -1 if i % 2 else 1
                for t, c in img.items():
                    _add_into(out, (l - 1, t), s * c)
        s = -1 if l % 2 else 1
        for t, c in self.internal(l, m).items():
            _add_into(out, (l, t), s * c)
        return out

    def differential(self, n: int, w: int = 0) -> SparseMatrix:
        key = ("D", n, w)
        if key not in self._mats:
            src = self.degree_basis(n, w)
            tgt = {b: i for i, b in enumerate(self.degree_basis(n + 1, w))} if n < 0 else {}
            cols = []
            for l, m in src:
                col: dict = {}
                for t, c in self.apply_D(l, m).items():
                    if t in tgt:
                        _add_into(col, tgt[t], c)
                    elif n + 1 <= 0 and t[0] <= self.max_level_for(n + 1):
                        raise ArithmeticError(f"image {t} missing from the target basis")
                cols.append(col)
            self._mats[key] = SparseMatrix.from_columns(len(tgt), cols)
        return self._mats[key]

    def face_matrix(self, l: int, i: int, d: int, w: int = 0) -> SparseMatrix:
        src = self.basis(l, d, w)
        tgt = self.block(l - 1, d).get(w, ([], {}))[1]
        cols = []
        for m in src:
            col: dict = {}
            for t, c in self.faces(l, m)[i].items():
                _add_into(col, tgt[t], c)
            cols.append(col)
        return SparseMatrix.from_columns(len(tgt), cols)

    def internal_matrix(self, l: int, d: int, w: int = 0) -> SparseMatrix:
        src = self.basis(l, d, w)
        tgt = self.block(l, d + 1).get(w, ([], {}))[1] if d < 0 else {}
        cols = []
        for m in src:
            col: dict = {}
            for t, c in self.internal(l, m).items():
                _add_into(col, tgt[t], c)
            cols.append(col)
        return SparseMatrix.from_columns(len(tgt), cols)

    def check_d_squared(self) -> list:
        bad = []
        for n in range(self.n_min, -1):
            for w in self.weights(n):
                if not (self.differential(n + 1, w) @ self.differential(n, w)).is_zero():
                    bad.append((n, w))
        return bad


def _koszul_internal(m, degs, diffs) -> dict:
    """Internal differential of a tensor word; ``degs``/``diffs`` are per-slot tables."""
    out: dict = {}
    parity = 0
    for p, b in enumerate(m):
        row = diffs[p].get(b)
        if row:
            s = -1 if parity else 1
            for b2, c in row.items():
                _add_into(out, m[:p] + (b2,) + m[p + 1:], s * c)
        parity ^= degs[p][b] % 2
    return out


# -- two-sided bar ---------------------------------------------------------------
class BarComplex(_TensorWordComplex):
    """Normalized two-sided bar complex ``B(P, R, Q)``.

    ``P`` and ``Q`` are left DG modules over the CDGA ``R``; ``P`` is used as a
    right module through ``p·r = (-1)^{|p||r|} r·p``.  ``R̄`` is spanned by the
    non-unit basis elements, i.e. ``R`` modulo the unit.
    """

    def __init__(self, P: GradedModule, R: GradedAlgebra, Q: GradedModule, window: int, cap: int):
        if P.algebra is not R or Q.algebra is not R:
            raise ValueError("modules must be defined over R")
        n_min = int(window[0] if isinstance(window, (tuple, list)) else window)
        self.cap = cap
        super().__init__(n_min, max(n_min + 1, -cap + 1))
        self.P, self.R, self.Q = P, R, Q
        self.rbar = [b for b in range(R.dim) if b != R.unit]

    def max_level_for(self, n: int) -> int:
        return min(-n, self.cap)

    def choices(self, l: int) -> list:
        P, R, Q = self.P, self.R, self.Q
        return ([[(b, P.degrees[b], P.weights[b]) for b in range(P.dim)]] +
                [[(b, R.degrees[b], R.weights[b]) for b in self.rbar]] * l +
                [[(b, Q.degrees[b], Q.weights[b]) for b in range(Q.dim)]])

    def _degs(self, l):
        return [self.P.degrees] + [self.R.degrees] * l + [self.Q.degrees]

    def faces(self, l: int, m) -> list:
        P, R, Q = self.P, self.R, self.Q
        unit = R.unit
        out = []
        for i in range(l + 1):
            img: dict = {}
            if i == 0:
                p, r = m[0], m[1]
                s = -1 if (P.degrees[p] % 2 and R.degrees[r] % 2) else 1
                for t, c in P.action.get((r, p), {}).items():
                    _add_into(img, (t,) + m[2:], s * c)
            elif i == l:
                r, q = m[l], m[l + 1]
                for t, c in Q.action.get((r, q), {}).items():
                    _add_into(img, m[:l] + (t,), c)
            else:
                for t, c in R.mult.get((m[i], m[i + 1]), {}).items():
                    if t != unit:
                        _add_into(img, m[:i] + (t,) + m[i + 2:], c)
            out.append(img)
        return out

    def internal(self, l: int, m) -> dict:
        diffs = [self.P.diff] + [self.R.diff] * l + [self.Q.diff]
        out = _koszul_internal(m, self._degs(l), diffs)
        unit = self.R.unit
        return {t: c for t, c in out.items() if unit not in t[1:l + 1]}


def two_sided_bar(P: GradedModule, R: GradedAlgebra, Q: GradedModule, window, cap: int) -> BarComplex:
    return BarComplex(P, R, Q, window, cap)


def module_via(h: dict, R: GradedAlgebra, B: GradedAlgebra, name: str = "M") -> GradedModule:
    """``B`` as a left R-module through an algebra map ``h: R -> B``.

    ``h`` maps R basis indices to ``{B index: coeff}``.
    """
    action = {}
    for r in range(R.dim):
        for b in range(B.dim):
            action[(r, b)] = B.mul_vec(h.get(r, {}), {b: 1})
    return GradedModule(R, B.names, B.degrees, action, B.diff, B.weights, name=name)


def multiplication_map(A: GradedAlgebra, AA: GradedAlgebra) -> dict:
    """``a ⊗ a' -> a a'`` on the basis of ``tensor_algebra(A, A)``."""
    h = {}
    for i in range(A.dim):
        for j in range(A.dim):
            h[i * A.dim + j] = A.mul_basis(i, j)
    return h


def enveloping_bar(A: GradedAlgebra, window, cap: int) -> BarComplex:
    """``B(A, A⊗A, A)`` computing ``Tor^{A⊗A}(A, A)``."""
    AA = tensor_algebra(A, A)
    mu = multiplication_map(A, AA)
    P = module_via(mu, AA, A, name="A")
    return BarComplex(P, AA, P, window, cap)


# -- classical Hochschild --------------------------------------------------------
class ClassicalHochschild(_TensorWordComplex):
    """``M ⊗ A^{⊗k}`` with the textbook faces.

    ``d_0(m⊗a_1⊗…) = m·a_1⊗…``, ``d_i`` multiplies ``a_i a_{i+1}``, and
    ``d_k(m⊗…⊗a_k) = ± a_k·m ⊗ a_1⊗…⊗a_{k-1}`` with the sign of moving ``a_k``
    across everything before it.
    """

    def __init__(self, A: GradedAlgebra, M: GradedModule | None, window):
        n_min = int(window[0] if isinstance(window, (tuple, list)) else window)
        super().__init__(n_min, n_min + 1)
        self.A = A
        if M is None:
            M = GradedModule(A, A.names, A.degrees, dict(A.mult), A.diff, A.weights,
                             name=A.name, check=False)
        self.M = M

    def choices(self, l: int) -> list:
        A, M = self.A, self.M
        return ([[(b, M.degrees[b], M.weights[b]) for b in range(M.dim)]] +
                [[(b, A.degrees[b], A.weights[b]) for b in range(A.dim)]] * l)

    def faces(self, l: int, m) -> list:
        A, M = self.A, self.M
        out = []
        for i in range(l + 1):
            img: dict = {}
            if i == 0:
                mm, a = m[0], m[1]
                s = -1 if (M.degrees[mm] % 2 and A.degrees[a] % 2) else 1
                for t, c in M.action.get((a, mm), {}).items():
                    _add_into(img, (t,) + m[2:], s * c)
            elif i < l:
                for t, c in A.mult.get((m[i], m[i + 1]), {}).items():
                    _add_into(img, m[:i] + (t,) + m[i + 2:], c)
            else:
                a = m[l]
                before = M.degrees[m[0]] + sum(A.degrees[x] for x in m[1:l])
                s = -1 if (A.degrees[a] % 2 and before % 2) else 1
                for t, c in M.action.get((a, m[0]), {}).items():
                    _add_into(img, (t,) + m[1:l], s * c)
            out.append(img)
        return out

    def internal(self, l: int, m) -> dict:
        degs = [self.M.degrees] + [self.A.degrees] * l
        diffs = [self.M.diff] + [self.A.diff] * l
        return _koszul_internal(m, degs, diffs)


def classical_hochschild_oracle(A: GradedAlgebra, M: GradedModule | None = None,
                                window=-6) -> ClassicalHochschild:
    return ClassicalHochschild(A, M, window)


def circle_identification(C, k: int) -> dict:
    """Signed bijection from classical level-k monomials to those of ``C``.

    ``C`` is a Hochschild complex over the minimal circle.  Classical slot 0 is
    the basepoint and slot ``p >= 1`` is the degeneracy of the 1-cell that omits
    index ``p - 1``.  Returns ``{classical monomial: (monomial of C, sign)}``
    over the full (unnormalized) tensor power.
    """
    from itertools import product as iproduct

    sims = C.positions(k)
    slot_of_pos = []
    for s in sims:
        if s.gen_dim == 0:
            slot_of_pos.append(0)
        else:
            missing = [j for j in range(k) if j not in s.word]
            slot_of_pos.append(missing[0] + 1)
    if sorted(slot_of_pos) != list(range(k + 1)):
        raise ValueError("not the minimal circle")
    perm = slot_of_pos  # position p of C holds classical slot perm[p]
    A = C.A
    first = C.M if C.pointed else A
    out = {}
    for mono in iproduct(range(first.dim), *[range(A.dim)] * k):
        degs = [first.degrees[mono[0]]] + [A.degrees[b] for b in mono[1:]]
        new = tuple(mono[perm[p]] for p in range(k + 1))
        sign = 1
        odd = [degs[perm[p]] % 2 for p in range(k + 1)]
        for p in range(k + 1):
            for q in range(p + 1, k + 1):
                if odd[p] and odd[q] and perm[p] > perm[q]:
                    sign = -sign
        out[mono] = (new, sign)
    return out


# -- periodic resolution oracle --------------------------------------------------------
def periodic_tor_oracle(window: int = -4) -> dict:
    """``dim Tor_n^{A^e}(A, A)`` for ``A = Q[ε]/ε²``, reported at degree ``-n``.

    The resolution is ``... -> A^e -(ε1+ε2)-> A^e -(ε1-ε2)-> A^e -> A`` with
    A^e = Q[ε1, ε2]/(ε1², ε2²).  Its exactness is checked by ranks before
    tensoring with A over A^e, which turns the maps into multiplication by the
    images 0 and 2ε.
    """
    n_top = -int(window)
    # A^e on the basis 1, e1, e2, e1e2
    def mult_matrix(u):
        # multiplication by u = (c1, c2) meaning c1*e1 + c2*e2
        c1, c2 = u
        cols = [
            {1: c1, 2: c2},       # 1
            {3: c2},              # e1 -> c2 e2 e1
            {3: c1},              # e2 -> c1 e1 e2
            {},                   # e1e2
        ]
        return SparseMatrix.from_columns(4, cols)

    minus, plus = mult_matrix((1, -1)), mult_matrix((1, 1))
    # exactness of the resolution in the middle: ker = im for both compositions
    for f, g in ((minus, plus), (plus, minus)):
        if not (f @ g).is_zero() or rank(f) + rank(g) != 4:
            raise ArithmeticError("periodic resolution is not exact")
    # after -⊗_{A^e} A: A = span(1, ε), the maps become mu(ε1-ε2)=0 and mu(ε1+ε2)=2ε
    def on_A(u):
        c = u[0] + u[1]
        return SparseMatrix.from_columns(2, [{1: c} if c else {}, {}])

    maps = {n: on_A((1, -1) if n % 2 else (1, 1)) for n in range(1, n_top + 2)}
    dims = {}
    for n in range(0, n_top + 1):
        r_out = rank(maps[n]) if n >= 1 else 0       # P_n -> P_{n-1}
        r_in = rank(maps[n + 1])
        dims[-n] = 2 - r_out - r_in
    return dims
