"""Graded-commutative DG algebras over Q in cohomological degrees <= 0.

Two presentations are supported:

* :class:`GradedAlgebra` -- a finite basis with structure constants (the
  "table" backend).  Everything downstream works with this form.
* :class:`FreeGradedAlgebra` -- free graded-commutative on generators of
  strictly negative degree.  It is infinite-dimensional in total but finite in
  each degree, and :meth:`FreeGradedAlgebra.truncate` turns the part in degrees
  ``>= m`` into a table algebra.

Besides the cohomological degree every basis element carries an auxiliary
integer *weight* (default 0) that products add and differentials preserve.  It
splits Hochschild complexes into independent direct summands.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Mapping, Sequence

from .exactla import _clean, as_rational


class AlgebraError(ValueError):
    pass


def _add_into(acc: dict, key, c):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class GradedAlgebra:
    """Finite-dimensional CDGA given by structure constants.

    ``mult[(i, j)]`` is ``{k: c}`` with ``e_i e_j = sum c e_k``; ``diff[i]`` is
    ``{j: c}`` with ``d e_i = sum c e_j``.  Products that would land below
    ``min_degree`` are dropped -- see :meth:`FreeGradedAlgebra.truncate`.
    """

    def __init__(self, names: Sequence[str], degrees: Sequence[int], unit: int,
                 mult: Mapping, diff: Mapping | None = None, weights: Sequence[int] | None = None,
                 name: str = "A", min_degree: int | None = None, check: bool = True):
        self.name = name
        self.names = list(names)
        self.degrees = [int(d) for d in degrees]
        self.weights = list(weights) if weights is not None else [0] * len(self.names)
        self.unit = unit
        self.min_degree = min_degree
        self.mult = {}
        for (i, j), row in mult.items():
            row = {k: _clean(Fraction(c)) for k, c in row.items() if c != 0}
            if row:
                self.mult[(i, j)] = row
        n = len(self.names)
        for a in range(n):
            self.mult.setdefault((unit, a), {a: 1})
            self.mult.setdefault((a, unit), {a: 1})
        self.diff = {}
        for i, row in (diff or {}).items():
            row = {j: _clean(Fraction(c)) for j, c in row.items() if c != 0}
            if row:
                self.diff[i] = row
        self.by_degree: dict[int, list] = {}
        for i, d in enumerate(self.degrees):
            self.by_degree.setdefault(d, []).append(i)
        if check:
            self.validate()

    @property
    def dim(self) -> int:
        return len(self.names)

    def __repr__(self):
        dims = {d: len(v) for d, v in sorted(self.by_degree.items(), reverse=True)}
        return f"GradedAlgebra({self.name}, dims={dims})"

    def odd(self, i: int) -> bool:
        return self.degrees[i] % 2 != 0

    def is_nilpotent_free(self) -> bool:
        return all(d == 0 for d in self.degrees)

    def dims_by_degree(self) -> dict:
        return {d: len(v) for d, v in self.by_degree.items()}

    def basis_of_degree(self, d: int) -> list:
        return [self.names[i] for i in self.by_degree.get(d, [])]

    def index(self, name: str) -> int:
        return self.names.index(name)

    # -- arithmetic on basis indices -------------------------------------
    def mul_basis(self, i: int, j: int) -> dict:
        return self.mult.get((i, j), {})

    def mul_vec(self, u: Mapping, v: Mapping) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.mult.get((i, j), {}).items():
                    _add_into(out, k, a * b * c)
        return out

    def d_vec(self, u: Mapping) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, c in self.diff.get(i, {}).items():
                _add_into(out, j, a * c)
        return out

    def _in_range(self, *idx) -> bool:
        if self.min_degree is None:
            return True
        return sum(self.degrees[i] for i in idx) >= self.min_degree

    # -- validation ------------------------------------------------------
    def validate(self) -> None:
        n = self.dim
        deg, w = self.degrees, self.weights
        if any(d > 0 for d in deg):
            raise AlgebraError("basis elements of positive degree are not allowed")
        if deg[self.unit] != 0 or w[self.unit] != 0:
            raise AlgebraError("unit must have degree 0 and weight 0")
        for (i, j), row in self.mult.items():
            for k in row:
                if deg[k] != deg[i] + deg[j]:
                    raise AlgebraError(f"product {self.names[i]}*{self.names[j]} is not homogeneous")
                if w[k] != w[i] + w[j]:
                    raise AlgebraError(f"product {self.names[i]}*{self.names[j]} breaks the weight grading")
        for i, row in self.diff.items():
            for j in row:
                if deg[j] != deg[i] + 1:
                    raise AlgebraError(f"d({self.names[i]}) does not have degree {deg[i] + 1}")
                if w[j] != w[i]:
                    raise AlgebraError(f"d({self.names[i]}) breaks the weight grading")
        for i in range(n):
            if self.d_vec(self.d_vec({i: 1})):
                raise AlgebraError(f"d^2 != 0 on {self.names[i]}")
        for i in range(n):
            for j in range(n):
                if not self._in_range(i, j):
                    continue
                ab = self.mul_basis(i, j)
                ba = self.mul_basis(j, i)
                sign = -1 if self.odd(i) and self.odd(j) else 1
                if ab != {k: sign * c for k, c in ba.items()}:
                    raise AlgebraError(f"{self.names[i]}, {self.names[j]} do not graded-commute")
                # Leibniz
                lhs = self.d_vec(ab)
                rhs = self.mul_vec(self.d_vec({i: 1}), {j: 1})
                s = -1 if self.odd(i) else 1
                for k, c in self.mul_vec({i: 1}, self.d_vec({j: 1})).items():
                    _add_into(rhs, k, s * c)
                if lhs != rhs:
                    raise AlgebraError(f"Leibniz rule fails on {self.names[i]}, {self.names[j]}")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if not self._in_range(i, j, k):
                        continue
                    left = self.mul_vec(self.mul_basis(i, j), {k: 1})
                    right = self.mul_vec({i: 1}, self.mul_basis(j, k))
                    if left != right:
                        raise AlgebraError("multiplication is not associative on "
                                           f"{self.names[i]}, {self.names[j]}, {self.names[k]}")

    def augmentation_ok(self) -> bool:
        """True when the non-unit basis elements span a d-stable ideal."""
        for (i, j), row in self.mult.items():
            if i != self.unit and j != self.unit and self.unit in row:
                return False
        return all(self.unit not in row for row in self.diff.values())

    # -- serialization ---------------------------------------------------
    def to_json(self) -> dict:
        return {
            "basis": [{"name": nm, "degree": d} for nm, d in zip(self.names, self.degrees)],
            "unit": self.names[self.unit],
            "product": [[i, j, k, str(c)] for (i, j), row in sorted(self.mult.items())
                        for k, c in sorted(row.items())],
            "differential": [[i, j, str(c)] for i, row in sorted(self.diff.items())
                             for j, c in sorted(row.items())],
            "weights": list(self.weights),
            "min_degree": self.min_degree,
        }

    @classmethod
    def from_json(cls, data, name: str = "A") -> "GradedAlgebra":
        if isinstance(data, str):
            data = json.loads(data)
        names = [b["name"] for b in data["basis"]]
        degrees = [b["degree"] for b in data["basis"]]
        pos = {nm: n for n, nm in enumerate(names)}

        def ix(x):
            return pos[x] if isinstance(x, str) else int(x)

        mult: dict = {}
        for i, j, k, c in data.get("product", []):
            mult.setdefault((ix(i), ix(j)), {})[ix(k)] = as_rational(c)
        diff: dict = {}
        for i, j, c in data.get("differential", []):
            diff.setdefault(ix(i), {})[ix(j)] = as_rational(c)
        return cls(names, degrees, ix(data["unit"]), mult, diff, data.get("weights"), name=name,
                   min_degree=data.get("min_degree"))


@dataclass(frozen=True)
class AlgebraElement:
    algebra: GradedAlgebra = field(repr=False, compare=False)
    degree: int
    coeffs: Mapping = field(default_factory=dict)

    def __post_init__(self):
        for i in self.coeffs:
            if self.algebra.degrees[i] != self.degree:
                raise AlgebraError("element is not homogeneous")

    @classmethod
    def basis(cls, A: GradedAlgebra, name_or_index) -> "AlgebraElement":
        i = A.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return cls(A, A.degrees[i], {i: 1})

    @classmethod
    def one(cls, A: GradedAlgebra) -> "AlgebraElement":
        return cls(A, 0, {A.unit: 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if other.algebra is not self.algebra or other.degree != self.degree:
            raise AlgebraError("can only add homogeneous elements of one algebra and degree")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            _add_into(out, k, c)
        return AlgebraElement(self.algebra, self.degree, out)

    def __rmul__(self, scalar):
        return AlgebraElement(self.algebra, self.degree,
                              {k: c * scalar for k, c in self.coeffs.items() if c * scalar})

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement) and self.algebra is other.algebra
                and self.degree == other.degree and dict(self.coeffs) == dict(other.coeffs))

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.coeffs.items()))))


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.algebra is not b.algebra:
        raise AlgebraError("elements belong to different algebras")
    A = a.algebra
    return AlgebraElement(A, a.degree + b.degree, A.mul_vec(a.coeffs, b.coeffs))


def differential(a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(a.algebra, a.degree + 1, a.algebra.d_vec(a.coeffs))


def basis_of_degree(A, d: int) -> list:
    if d > 0:
        return []
    return A.basis_of_degree(d)


# -- free graded-commutative algebras ---------------------------------------------
class FreeGradedAlgebra:
    """Free graded-commutative algebra on negative-degree generators.

    ``d`` maps a generator name to a list of ``(coefficient, {gen: exponent})``.
    """

    def __init__(self, generators: Sequence[tuple], d: Mapping | None = None, name: str = "F"):
        self.name = name
        self.gens = [str(g) for g, _ in generators]
        self.gdeg = [int(x) for _, x in generators]
        if any(x >= 0 for x in self.gdeg):
            raise AlgebraError("free generators must have strictly negative degree")
        self.pos = {g: n for n, g in enumerate(self.gens)}
        self.d_gen = {}
        for g, expr in (d or {}).items():
            poly = {}
            for c, mono in expr:
                e = [0] * len(self.gens)
                for h, k in dict(mono).items():
                    e[self.pos[h]] += int(k)
                poly[tuple(e)] = poly.get(tuple(e), 0) + as_rational(c)
            self.d_gen[self.pos[g]] = {m: c for m, c in poly.items() if c}
        for i, poly in self.d_gen.items():
            for m in poly:
                if self.mono_degree(m) != self.gdeg[i] + 1:
                    raise AlgebraError(f"d({self.gens[i]}) has the wrong degree")

    def __repr__(self):
        return f"FreeGradedAlgebra({self.name}, gens={list(zip(self.gens, self.gdeg))})"

    def mono_degree(self, m) -> int:
        return sum(e * x for e, x in zip(m, self.gdeg))

    def mono_name(self, m) -> str:
        parts = []
        for g, e in zip(self.gens, m):
            if e == 1:
                parts.append(g)
            elif e > 1:
                parts.append(f"{g}^{e}")
        return "*".join(parts) or "1"

    def monomials_of_degree(self, d: int) -> list:
        """Exponent vectors of degree ``d`` in canonical (lexicographic) order."""
        if d > 0:
            return []
        n = len(self.gens)
        out = []

        def rec(i, remaining, acc):
            if i == n:
                if remaining == 0:
                    out.append(tuple(acc))
                return
            g = -self.gdeg[i]
            top = remaining // g
            if self.gdeg[i] % 2:
                top = min(top, 1)
            for e in range(top + 1):
                acc.append(e)
                rec(i + 1, remaining - e * g, acc)
                acc.pop()

        rec(0, -d, [])
        return sorted(out, reverse=True)

    def basis_of_degree(self, d: int) -> list:
        return [self.mono_name(m) for m in self.monomials_of_degree(d)]

    def mono_mul(self, a, b):
        """``(sign, exponent vector)`` of a*b, or None when it vanishes."""
        sign = 1
        odd = [x % 2 != 0 for x in self.gdeg]
        for i, e in enumerate(a):
            if odd[i] and e and b[i]:
                return None
        parity_b_before = 0
        # moving generator j of b leftwards past generators i > j of a
        for j in range(len(b)):
            if odd[j] and b[j] % 2:
                later = sum(a[i] for i in range(j + 1, len(a)) if odd[i]) % 2
                if later:
                    sign = -sign
        del parity_b_before
        return sign, tuple(x + y for x, y in zip(a, b))

    def poly_mul(self, p: Mapping, q: Mapping) -> dict:
        out: dict = {}
        for a, c in p.items():
            for b, e in q.items():
                r = self.mono_mul(a, b)
                if r is not None:
                    _add_into(out, r[1], r[0] * c * e)
        return out

    def mono_d(self, m) -> dict:
        out: dict = {}
        n = len(m)
        sign_prefix = 0
        for i in range(n):
            e = m[i]
            if e and i in self.d_gen:
                prefix = tuple(m[j] if j < i else 0 for j in range(n))
                suffix = tuple(m[j] if j > i else 0 for j in range(n))
                rest = tuple(e - 1 if j == i else 0 for j in range(n))
                # d(g^e) = e g^(e-1) dg for even g; odd g have e = 1
                core = self.poly_mul({rest: e}, self.d_gen[i])
                term = self.poly_mul(self.poly_mul({prefix: 1}, core), {suffix: 1})
                s = -1 if sign_prefix % 2 else 1
                for k, c in term.items():
                    _add_into(out, k, s * c)
            sign_prefix += e * self.gdeg[i]
        return out

    def word_length_preserved(self) -> bool:
        return all(sum(m) == 1 for poly in self.d_gen.values() for m in poly)

    def truncate(self, min_degree: int) -> GradedAlgebra:
        """Table algebra on all monomials of degree ``>= min_degree``."""
        monos = []
        for d in range(0, min_degree - 1, -1):
            monos.extend(self.monomials_of_degree(d))
        pos = {m: n for n, m in enumerate(monos)}
        mult = {}
        for a in monos:
            for b in monos:
                if self.mono_degree(a) + self.mono_degree(b) < min_degree:
                    continue
                r = self.mono_mul(a, b)
                if r is not None:
                    mult[(pos[a], pos[b])] = {pos[r[1]]: r[0]}
        diff = {}
        for a in monos:
            dd = self.mono_d(a)
            if dd:
                diff[pos[a]] = {pos[k]: c for k, c in dd.items()}
        weights = [sum(m) for m in monos] if self.word_length_preserved() else None
        return GradedAlgebra([self.mono_name(m) for m in monos],
                             [self.mono_degree(m) for m in monos], pos[tuple([0] * len(self.gens))],
                             mult, diff, weights, name=self.name, min_degree=min_degree)

    def to_json(self) -> dict:
        return {
            "free_generators": [{"name": g, "degree": x} for g, x in zip(self.gens, self.gdeg)],
            "d": {self.gens[i]: [[str(c), {self.gens[j]: e for j, e in enumerate(m) if e}]
                                 for m, c in sorted(poly.items())]
                  for i, poly in sorted(self.d_gen.items())},
        }

    @classmethod
    def from_json(cls, data, name: str = "F") -> "FreeGradedAlgebra":
        if isinstance(data, str):
            data = json.loads(data)
        gens = [(g["name"], g["degree"]) for g in data["free_generators"]]
        return cls(gens, data.get("d", {}), name=name)


def as_table(A, min_degree: int) -> GradedAlgebra:
    """Table form of ``A`` adequate for computations in degrees ``>= min_degree``."""
    if isinstance(A, FreeGradedAlgebra):
        return A.truncate(min_degree)
    return A


# -- tensor products ------------------------------------------------------------
def tensor_algebra(A, B, name: str | None = None):
    """``A ⊗ B`` with the Koszul sign ``(a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa'⊗bb'``."""
    if isinstance(A, FreeGradedAlgebra) and isinstance(B, FreeGradedAlgebra):
        clash = set(A.gens) & set(B.gens)
        ren_a = {g: (g + "_1" if g in clash else g) for g in A.gens}
        ren_b = {g: (g + "_2" if g in clash else g) for g in B.gens}

        def dump(F, ren):
            return {ren[F.gens[i]]: [(c, {ren[F.gens[j]]: e for j, e in enumerate(m) if e})
                                     for m, c in poly.items()] for i, poly in F.d_gen.items()}

        gens = [(ren_a[g], x) for g, x in zip(A.gens, A.gdeg)] + \
               [(ren_b[g], x) for g, x in zip(B.gens, B.gdeg)]
        d = dump(A, ren_a)
        d.update(dump(B, ren_b))
        return FreeGradedAlgebra(gens, d, name=name or f"{A.name}⊗{B.name}")
    if isinstance(A, FreeGradedAlgebra) or isinstance(B, FreeGradedAlgebra):
        raise AlgebraError("truncate free algebras before tensoring with a table algebra")
    pairs = list(iproduct(range(A.dim), range(B.dim)))
    pos = {p: n for n, p in enumerate(pairs)}
    mult = {}
    for (a, b) in pairs:
        for (a2, b2) in pairs:
            aa = A.mul_basis(a, a2)
            bb = B.mul_basis(b, b2)
            if not aa or not bb:
                continue
            sign = -1 if B.odd(b) and A.odd(a2) else 1
            mult[(pos[(a, b)], pos[(a2, b2)])] = {pos[(k, l)]: sign * c * e
                                                  for k, c in aa.items() for l, e in bb.items()}
    diff = {}
    for (a, b) in pairs:
        row: dict = {}
        for k, c in A.diff.get(a, {}).items():
            _add_into(row, pos[(k, b)], c)
        s = -1 if A.odd(a) else 1
        for l, c in B.diff.get(b, {}).items():
            _add_into(row, pos[(a, l)], s * c)
        if row:
            diff[pos[(a, b)]] = row
    md = None
    if A.min_degree is not None or B.min_degree is not None:
        md = max(x for x in (A.min_degree, B.min_degree) if x is not None)
    return GradedAlgebra([f"{A.names[a]}⊗{B.names[b]}" for a, b in pairs],
                         [A.degrees[a] + B.degrees[b] for a, b in pairs], pos[(A.unit, B.unit)],
                         mult, diff, [A.weights[a] + B.weights[b] for a, b in pairs],
                         name=name or f"{A.name}⊗{B.name}", min_degree=md)


# -- modules -------------------------------------------------------------
class GradedModule:
    """A DG module over a table algebra.

    ``action[(a, m)]`` is ``{m': c}`` for the left action ``e_a · f_m``; the
    right action used by Hochschild faces is ``m · a = (-1)^{|m||a|} a · m``.
    """

    def __init__(self, algebra: GradedAlgebra, names: Sequence[str], degrees: Sequence[int],
                 action: Mapping, diff: Mapping | None = None, weights: Sequence[int] | None = None,
                 name: str = "M", check: bool = True):
        self.algebra = algebra
        self.name = name
        self.names = list(names)
        self.degrees = [int(d) for d in degrees]
        self.weights = list(weights) if weights is not None else [0] * len(self.names)
        self.action = {}
        for key, row in action.items():
            row = {k: _clean(Fraction(c)) for k, c in row.items() if c != 0}
            if row:
                self.action[key] = row
        for m in range(len(self.names)):
            self.action.setdefault((algebra.unit, m), {m: 1})
        self.diff = {}
        for i, row in (diff or {}).items():
            row = {j: _clean(Fraction(c)) for j, c in row.items() if c != 0}
            if row:
                self.diff[i] = row
        if check:
            self.validate()

    @property
    def dim(self) -> int:
        return len(self.names)

    def odd(self, m: int) -> bool:
        return self.degrees[m] % 2 != 0

    def act_vec(self, a: Mapping, m: Mapping) -> dict:
        out: dict = {}
        for i, x in a.items():
            for j, y in m.items():
                for k, c in self.action.get((i, j), {}).items():
                    _add_into(out, k, x * y * c)
        return out

    def d_vec(self, m: Mapping) -> dict:
        out: dict = {}
        for i, x in m.items():
            for j, c in self.diff.get(i, {}).items():
                _add_into(out, j, x * c)
        return out

    def validate(self) -> None:
        A = self.algebra
        for (a, m), row in self.action.items():
            for k in row:
                if self.degrees[k] != A.degrees[a] + self.degrees[m]:
                    raise AlgebraError("action is not homogeneous")
                if self.weights[k] != A.weights[a] + self.weights[m]:
                    raise AlgebraError("action breaks the weight grading")
        for i, row in self.diff.items():
            for j in row:
                if self.degrees[j] != self.degrees[i] + 1 or self.weights[j] != self.weights[i]:
                    raise AlgebraError("module differential has the wrong degree or weight")
        for m in range(self.dim):
            if self.d_vec(self.d_vec({m: 1})):
                raise AlgebraError("module d^2 != 0")
        for a in range(A.dim):
            for m in range(self.dim):
                if A.min_degree is not None and A.degrees[a] + self.degrees[m] < A.min_degree:
                    # products below a truncated algebra's range are not tracked
                    continue
                lhs = self.d_vec(self.action.get((a, m), {}))
                rhs = self.act_vec(A.d_vec({a: 1}), {m: 1})
                s = -1 if A.odd(a) else 1
                for k, c in self.act_vec({a: 1}, self.d_vec({m: 1})).items():
                    _add_into(rhs, k, s * c)
                if lhs != rhs:
                    raise AlgebraError(f"module Leibniz rule fails on {A.names[a]}, {self.names[m]}")
                for b in range(A.dim):
                    if A.min_degree is not None and \
                            A.degrees[a] + A.degrees[b] + self.degrees[m] < A.min_degree:
                        continue
                    left = self.act_vec({a: 1}, self.action.get((b, m), {}))
                    right = self.act_vec(A.mul_basis(a, b), {m: 1})
                    if left != right:
                        raise AlgebraError("module action is not associative")


def regular_module(A: GradedAlgebra) -> GradedModule:
    action = {(a, m): row for (a, m), row in A.mult.items()}
    return GradedModule(A, A.names, A.degrees, action, A.diff, A.weights, name=A.name)


def augmentation_module(A: GradedAlgebra) -> GradedModule:
    """Q as an A-module through the augmentation killing every non-unit basis element."""
    if not A.augmentation_ok():
        raise AlgebraError(f"{A.name} has no monomial augmentation")
    return GradedModule(A, ["1"], [0], {(A.unit, 0): {0: 1}}, name="Q")


def module_from_json(A: GradedAlgebra, data, name: str = "M") -> GradedModule:
    if isinstance(data, str):
        data = json.loads(data)
    names = [b["name"] for b in data["basis"]]
    degrees = [b["degree"] for b in data["basis"]]
    mpos = {nm: n for n, nm in enumerate(names)}

    def ax(x):
        return A.index(x) if isinstance(x, str) else int(x)

    def mx(x):
        return mpos[x] if isinstance(x, str) else int(x)

    action: dict = {}
    for a, m, k, c in data.get("action", []):
        action.setdefault((ax(a), mx(m)), {})[mx(k)] = as_rational(c)
    diff: dict = {}
    for i, j, c in data.get("differential", []):
        diff.setdefault(mx(i), {})[mx(j)] = as_rational(c)
    return GradedModule(A, names, degrees, action, diff, data.get("weights"), name=name)


# -- builtins -------------------------------------------------------------
def ground_field() -> GradedAlgebra:
    return GradedAlgebra(["1"], [0], 0, {}, name="Q")


def dual_numbers() -> GradedAlgebra:
    """Q[ε]/(ε²) with ε in degree 0 (weight 1)."""
    return GradedAlgebra(["1", "eps"], [0, 0], 0, {}, weights=[0, 1], name="dual_numbers")


def exterior(degree: int = 1) -> FreeGradedAlgebra:
    """Λ(x) on one generator of degree ``-degree`` (odd degrees only)."""
    if degree % 2 == 0:
        raise AlgebraError("exterior algebras need an odd generator")
    return FreeGradedAlgebra([("x", -degree)], name=f"exterior{degree}")


def exterior_table(degree: int = 1) -> GradedAlgebra:
    return exterior(degree).truncate(-degree)


def poly(degree: int = 2) -> FreeGradedAlgebra:
    """Q[y] on one generator of degree ``-degree`` (even degrees only)."""
    if degree % 2:
        raise AlgebraError("polynomial generators need even degree")
    return FreeGradedAlgebra([("y", -degree)], name=f"poly{degree}")


def koszul() -> FreeGradedAlgebra:
    """Λ(x₋₁) ⊗ Q[y₋₂] with dy = x; quasi-isomorphic to Q."""
    return FreeGradedAlgebra([("x", -1), ("y", -2)], {"y": [(1, {"x": 1})]}, name="koszul")


def builtin_algebra(name: str):
    name = name.strip()
    if name in ("Q", "ground", "k"):
        return ground_field()
    if name == "dual_numbers":
        return dual_numbers()
    if name == "koszul":
        return koszul()
    for prefix, fn in (("exterior", exterior), ("poly", poly)):
        if name.startswith(prefix):
            arg = name[len(prefix):].strip("()")
            return fn(int(arg) if arg else (1 if prefix == "exterior" else 2))
    raise AlgebraError(f"unknown algebra {name!r}")


TEST_ALGEBRAS = ("dual_numbers", "exterior1", "poly2", "koszul")
