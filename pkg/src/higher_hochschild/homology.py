"""Homology of graded complexes, representatives, the ring on HH, and quasi-isomorphism tests.

Everything here works with any object exposing ``n_min``, ``trusted_min``,
``weights(n)``, ``dim(n, w)`` and ``differential(n, w)`` (the matrix of
``D: C^n -> C^{n+1}`` in weight ``w``).
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .exactla import (Subspace, image_basis, kernel_basis, rank, rank_of_vectors,
                      representatives as _representatives, solve_modulo, quotient_dim)


@dataclass
class HomologyReport:
    """Homology dimensions per total degree (0 down to ``n_min``)."""

    n_min: int
    trusted_min: int
    dims: dict = field(default_factory=dict)
    by_weight: dict = field(default_factory=dict)
    representatives: dict | None = None
    ring: dict | None = None

    def trusted(self, n: int) -> bool:
        return self.trusted_min <= n <= 0

    def trusted_dims(self) -> dict:
        return {n: d for n, d in self.dims.items() if self.trusted(n)}

    def as_list(self, trusted_only: bool = True) -> list:
        return [self.dims[n] for n in sorted(self.dims, reverse=True)
                if not trusted_only or self.trusted(n)]


def _block_dim(C, n: int, w: int) -> int:
    dn = C.dim(n, w)
    r_out = rank(C.differential(n, w)) if n < 0 else 0
    r_in = rank(C.differential(n - 1, w)) if n - 1 >= C.n_min else 0
    return dn - r_out - r_in


def homology(C, representatives: bool = False, jobs: int = 1) -> HomologyReport:
    """Exact homology dimensions; degree ``n_min`` is reported but untrusted."""
    rep = HomologyReport(C.n_min, C.trusted_min)
    tasks = [(n, w) for n in range(0, C.n_min - 1, -1) for w in C.weights(n)]
    if jobs > 1:
        # build every matrix first; the rank computations are then read-only
        for n, w in tasks:
            if n < 0:
                C.differential(n, w)
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(lambda t: _block_dim(C, *t), tasks))
    else:
        results = [_block_dim(C, n, w) for n, w in tasks]
    for n in range(0, C.n_min - 1, -1):
        rep.dims[n] = 0
    for (n, w), d in zip(tasks, results):
        if d:
            rep.by_weight[(n, w)] = d
        rep.dims[n] += d
    if representatives:
        rep.representatives = {}
        for n, w in tasks:
            if not C.trusted_min <= n:
                continue
            cyc, bnd = cycles_and_boundaries(C, n, w)
            vecs = _representatives(cyc, bnd)
            for v in vecs:
                rep.representatives.setdefault(n, []).append((w, v))
    return rep


def cycles_and_boundaries(C, n: int, w: int):
    dn = C.dim(n, w)
    if n < 0:
        cyc = kernel_basis(C.differential(n, w))
    else:
        cyc = Subspace(dn, tuple({i: 1} for i in range(dn)))
    if n - 1 >= C.n_min:
        bnd = image_basis(C.differential(n - 1, w))
    else:
        bnd = Subspace(dn, ())
    return cyc, bnd


def homology_dims(C) -> dict:
    return homology(C).dims


# -- ring structure -------------------------------------------------------------
def ring_on_homology(C, report: HomologyReport):
    """Products of representatives, expressed in the representative basis.

    Returns ``(labels, table)`` where ``labels[i] = (n, w, vector)`` and
    ``table[(i, j)]`` is a coefficient list over the labels of the product's
    degree and weight, or None when the product leaves the trusted window.
    """
    from .hochschild import shuffle_product

    if report.representatives is None:
        report = homology(C, representatives=True)
    labels = [(n, w, v) for n in sorted(report.representatives, reverse=True)
              for w, v in report.representatives[n]]
    by_slot: dict = {}
    for i, (n, w, _) in enumerate(labels):
        by_slot.setdefault((n, w), []).append(i)
    bnd_cache: dict = {}
    table = {}
    for i, (n1, w1, v1) in enumerate(labels):
        for j, (n2, w2, v2) in enumerate(labels):
            n, w = n1 + n2, w1 + w2
            if n < C.trusted_min:
                table[(i, j)] = None
                continue
            prod = shuffle_product(C, C.from_vector(n1, w1, v1), C.from_vector(n2, w2, v2))
            slot = by_slot.get((n, w), [])
            if not prod:
                table[(i, j)] = {}
                continue
            vec = C.to_vector(prod, n, w)
            if (n, w) not in bnd_cache:
                bnd_cache[(n, w)] = list(cycles_and_boundaries(C, n, w)[1].basis)
            coeffs = solve_modulo(vec, [labels[k][2] for k in slot], bnd_cache[(n, w)])
            if coeffs is None:
                raise ArithmeticError("product of cycles is not a cycle")
            table[(i, j)] = {slot[t]: c for t, c in enumerate(coeffs) if c}
    report.ring = table
    return labels, table


# -- maps ----------------------------------------------------------------------------
class NotAChainMap(ValueError):
    pass


def induced_rank(F, n: int, w: int) -> tuple:
    """``(dim H^n_w(source), dim H^n_w(target), rank of H(F))``."""
    S, T = F.source, F.target
    cyc_s, bnd_s = cycles_and_boundaries(S, n, w)
    cyc_t, bnd_t = cycles_and_boundaries(T, n, w)
    hs = quotient_dim(bnd_s, cyc_s)
    ht = quotient_dim(bnd_t, cyc_t)
    M = F.matrix(n, w)
    images = [M.apply(z) for z in cyc_s.basis]
    r = rank_of_vectors(images + list(bnd_t.basis)) - bnd_t.dim
    return hs, ht, r


def is_quasi_iso(F, check: bool = True) -> dict:
    """Per trusted degree: does F induce an isomorphism on homology?"""
    if check and not F.is_chain_map():
        raise NotAChainMap("map does not commute with the differentials")
    lo = max(F.source.trusted_min, F.target.trusted_min, F.n_min + 1)
    out = {}
    for n in range(0, lo - 1, -1):
        ws = set(F.source.weights(n)) | set(F.target.weights(n))
        ok = True
        for w in sorted(ws):
            hs, ht, r = induced_rank(F, n, w)
            if not (hs == ht == r):
                ok = False
        out[n] = ok
    return out
