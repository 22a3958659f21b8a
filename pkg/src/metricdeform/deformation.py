"""Nijenhuis-Richardson bracket and formal deformations of the bracket."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .bilinear import (BilinearForm, FormError, _entry, _form_from_vector, _form_unknowns,
                       check_metric, find_nondegenerate)
from .cohomology import MAX_DEGREE, Cochain, CochainError, canonical, canonical_tuples, coboundary
from .exactfield import ONE, ZERO, Matrix, S, kernel_basis_sparse, rref_sparse, substitute
from .superalg import LinearMap, SuperAlgebra, is_homomorphism


class DeformationError(ValueError):
    pass


HALF = S("1/2")


def _homogeneous(f):
    """[(parity, part)] for the nonzero homogeneous parts of f."""
    return sorted(f.homogeneous_parts().items())


def _product_homogeneous(alpha, beta, bpar):
    alg = alpha.alg
    p, q = alpha.degree, beta.degree
    N = p + q - 1
    par = [alg.parity(i) for i in range(alg.dim)]
    avals = alpha._values()
    bvals = beta._values()
    out = {}
    for X in canonical_tuples(alg, N):
        for I in itertools.combinations(range(N), p - 1):
            # sign exponent a_{i_1..i_{p-1}} with 1-based positions i_s
            e = 0
            picked = set()
            for s, i in enumerate(I):
                e += i - s  # (i+1) - (s+1)
                if par[X[i]]:
                    e += bpar + sum(par[X[t]] for t in range(i) if t not in picked)
                picked.add(i)
            rest = tuple(X[t] for t in range(N) if t not in picked)
            bv = bvals.get(rest)
            if not bv:
                continue
            head = tuple(X[i] for i in I)
            for k, cb in bv.items():
                sign, tup = canonical(par, head + (k,))
                if not sign:
                    continue
                av = avals.get(tup)
                if not av:
                    continue
                flip = (sign < 0) != bool(e & 1)
                for l, ca in av.items():
                    v = ca * cb
                    v = out.get((X, l), ZERO) + (-v if flip else v)
                    if v:
                        out[(X, l)] = v
                    else:
                        out.pop((X, l), None)
    return out


def nr_product(alpha, beta):
    """The insertion product alpha.beta of degree p+q-1."""
    p, q = alpha.degree, beta.degree
    if p < 1 or q < 1:
        raise CochainError("the product needs cochains of degree at least 1")
    if p + q - 1 > MAX_DEGREE:
        raise CochainError(f"product degree {p + q - 1} exceeds {MAX_DEGREE}")
    out = Cochain(alpha.alg, p + q - 1)
    for bpar, b in _homogeneous(beta):
        coeffs = _product_homogeneous(alpha, b, bpar)
        out = out + Cochain(alpha.alg, p + q - 1, coeffs)
    return out


def nr_bracket(alpha, beta):
    """[a,b] = ab - (-1)^{|a||b|+(p-1)(q-1)} ba, extended bilinearly over parity parts."""
    p, q = alpha.degree, beta.degree
    if p < 1 or q < 1:
        raise CochainError("the bracket needs cochains of degree at least 1")
    if p + q - 1 > MAX_DEGREE:
        raise CochainError(f"bracket degree {p + q - 1} exceeds {MAX_DEGREE}")
    out = Cochain(alpha.alg, p + q - 1)
    for apar, a in _homogeneous(alpha):
        for bpar, b in _homogeneous(beta):
            ab = nr_product(a, b)
            ba = nr_product(b, a)
            if (apar * bpar + (p - 1) * (q - 1)) % 2:
                out = out + ab + ba
            else:
                out = out + ab - ba
    return out


def is_real(phi1):
    """An infinitesimal deformation is real when [phi1, phi1] vanishes."""
    return nr_bracket(phi1, phi1).is_zero()


# ---------------------------------------------------------------------------

@dataclass
class FormalDeformation:
    """[x,y]_t = [x,y] + sum_i t^i phi_i(x,y)."""
    base: SuperAlgebra
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        terms = {}
        for order, phi in dict(self.terms).items():
            if order < 1:
                raise DeformationError("deformation orders start at 1")
            if phi.degree != 2:
                raise DeformationError(f"order-{order} term has degree {phi.degree}, expected 2")
            if phi.parity != "even":
                raise DeformationError(f"order-{order} term is not an even cochain")
            if phi.alg is not self.base:
                phi = phi.on(self.base)
            if phi:
                terms[order] = phi
        self.terms = terms

    @property
    def max_order(self):
        return max(self.terms, default=0)

    def term(self, n):
        return self.terms.get(n) or Cochain(self.base, 2)

    def to_doc(self):
        return {"base": self.base.name or self.base.to_doc(),
                "terms": [{"order": n, "cochain": self.terms[n].to_doc()} for n in sorted(self.terms)]}

    @classmethod
    def from_doc(cls, base, doc):
        try:
            terms = {int(t["order"]): Cochain.from_doc(base, t["cochain"], degree=2) for t in doc["terms"]}
        except (KeyError, TypeError) as exc:
            raise DeformationError(f"malformed deformation document: {exc}") from None
        return cls(base, terms)


def check_deformation(deformation, up_to):
    """[(n, residual)] for each order n <= up_to whose equation fails.

    The order-n equation is d(phi_n) + 1/2 sum_{i+j=n} [phi_i, phi_j] = 0.
    """
    if up_to < 1:
        raise DeformationError("order must be at least 1")
    out = []
    for n in range(1, up_to + 1):
        res = coboundary(deformation.term(n))
        for i in range(1, n):
            a, b = deformation.terms.get(i), deformation.terms.get(n - i)
            if a and b:
                res = res + HALF * nr_bracket(a, b)
        if res:
            out.append((n, res))
    return out


def _table_with(base, contributions):
    table = {ij: dict(v) for ij, v in base.table.items()}
    for (idx, k), c in contributions.items():
        vec = table.setdefault(idx, {})
        v = vec.get(k, ZERO) + c
        if v:
            vec[k] = v
        else:
            vec.pop(k, None)
    return table


def deformed_algebra(deformation, t=None, name=None, check=True):
    """Structure constants of [ , ]_t; ``t`` formal when None, else a Scalar."""
    base = deformation.base
    tt = S("t") if t is None else S(t)
    if t is None and "t" in base.parameters():
        raise DeformationError("base algebra already uses the parameter t")
    contributions = {}
    for n, phi in deformation.terms.items():
        w = tt ** n
        for m, c in phi.coeffs.items():
            contributions[m] = contributions.get(m, ZERO) + w * c
    table = _table_with(base, contributions)
    return SuperAlgebra(base.dim_even, base.dim_odd, table, name or (base.name + "_t" if base.name else ""), check=check)


# ---------------------------------------------------------------------------
# equivalence

@dataclass
class EquivalenceWitness:
    """psi_t = id + sum_i t^i psi_i with even 1-cochains psi_i."""
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        for order, psi in self.terms.items():
            if order < 1 or psi.degree != 1 or psi.parity != "even":
                raise DeformationError(f"order-{order} witness term must be an even 1-cochain")


def _apply1(psi, v):
    """psi(v) for a 1-cochain psi and coordinate vector v."""
    out = [ZERO] * psi.alg.dim
    for ((j,), k), c in psi.coeffs.items():
        if v[j]:
            out[k] = out[k] + c * v[j]
    return out


def _apply2(phi, u, v):
    out = [ZERO] * phi.alg.dim
    par = [phi.alg.parity(i) for i in range(phi.alg.dim)]
    for a, ua in enumerate(u):
        if not ua:
            continue
        for b, vb in enumerate(v):
            if not vb:
                continue
            sign, tup = canonical(par, (a, b))
            if not sign:
                continue
            for k in range(phi.alg.dim):
                c = phi.coeffs.get((tup, k))
                if c:
                    w = ua * vb * c
                    out[k] = out[k] + (w if sign > 0 else -w)
    return out


def _add(u, v):
    return [a + b for a, b in zip(u, v)]


def check_equivalence(def1, def2, psi, up_to):
    """psi_t([x,y]_t) = [psi_t x, psi_t y]'_t through order ``up_to``."""
    alg = def1.base
    if def2.base is not alg and def2.base != alg:
        raise DeformationError("deformations of different algebras")
    n = alg.dim
    mu = Cochain.from_bracket(alg)
    phis1 = {0: mu, **def1.terms}
    phis2 = {0: mu, **{k: v.on(alg) for k, v in def2.terms.items()}}
    psis = {0: Cochain.identity(alg), **{k: v.on(alg) for k, v in psi.terms.items()}}
    for i in range(n):
        for j in range(i, n):
            if i == j and alg.parity(i) == 0:
                continue
            ei = [ONE if q == i else ZERO for q in range(n)]
            ej = [ONE if q == j else ZERO for q in range(n)]
            img_i = {a: _apply1(ps, ei) for a, ps in psis.items() if a <= up_to}
            img_j = {a: _apply1(ps, ej) for a, ps in psis.items() if a <= up_to}
            for order in range(up_to + 1):
                lhs = [ZERO] * n
                for a, ps in psis.items():
                    b = order - a
                    if b in phis1:
                        lhs = _add(lhs, _apply1(ps, phis1[b].evaluate((i, j))))
                rhs = [ZERO] * n
                for a, u in img_i.items():
                    for b, v in img_j.items():
                        c = order - a - b
                        if c in phis2:
                            rhs = _add(rhs, _apply2(phis2[c], u, v))
                if lhs != rhs:
                    return False
    return True


# ---------------------------------------------------------------------------
# metric infinitesimal deformations

class _CochainBracket:
    """Adapter exposing a 2-cochain through ``bracket_basis``."""

    def __init__(self, phi):
        self.phi = phi

    def bracket_basis(self, i, j):
        return {k: c for k, c in enumerate(self.phi.evaluate((i, j))) if c}


def _keyed_invariance(alg, index, g, offset):
    n = alg.dim
    out = {}
    for i in range(n):
        for j in range(n):
            left = g.bracket_basis(i, j)
            for k in range(n):
                row = {}
                for l, c in left.items():
                    e = _entry(alg, index, l, k)
                    if e:
                        q = e[0] + offset
                        row[q] = row.get(q, ZERO) + (c if e[1] > 0 else -c)
                for l, c in g.bracket_basis(j, k).items():
                    e = _entry(alg, index, i, l)
                    if e:
                        q = e[0] + offset
                        row[q] = row.get(q, ZERO) - (c if e[1] > 0 else -c)
                row = {q: a for q, a in row.items() if a}
                if row:
                    out[(i, j, k)] = row
    return out


def metric_infinitesimal_space(alg, phi1):
    """Basis of pairs (B0, B1) with B0 + t B1 invariant for [ , ] + t phi1 mod t^2."""
    unknowns = _form_unknowns(alg)
    index = {u: q for q, u in enumerate(unknowns)}
    d = len(unknowns)
    rows = list(_keyed_invariance(alg, index, alg, 0).values())
    first = _keyed_invariance(alg, index, alg, d)
    second = _keyed_invariance(alg, index, _CochainBracket(phi1), 0)
    for key in set(first) | set(second):
        row = dict(first.get(key, {}))
        for q, a in second.get(key, {}).items():
            v = row.get(q, ZERO) + a
            if v:
                row[q] = v
            else:
                row.pop(q, None)
        if row:
            rows.append(row)
    out = []
    for vec in kernel_basis_sparse(rows, 2 * d):
        out.append((_form_from_vector(alg, unknowns, vec[:d]), _form_from_vector(alg, unknowns, vec[d:])))
    return out


def is_metric_infinitesimal(alg, B, phi1):
    """(True, (B0, B1)) if [ , ] + t phi1 carries an invariant scalar product mod t^2."""
    if phi1.alg is not alg:
        phi1 = phi1.on(alg)
    if phi1.degree != 2 or phi1.parity != "even":
        raise DeformationError("an infinitesimal deformation is an even 2-cochain")
    if not coboundary(phi1).is_zero():
        raise DeformationError("phi1 is not a cocycle")
    if B is not None and not check_metric(alg, B).ok:
        raise FormError("B is not an invariant scalar product")
    if phi1.is_zero():
        if B is None:
            from .bilinear import has_metric
            ok, B = has_metric(alg)
            if not ok:
                return False, None
        return True, (B, BilinearForm(alg, Matrix.zeros(alg.dim, alg.dim)))
    pairs = metric_infinitesimal_space(alg, phi1)
    if not pairs:
        return False, None
    # keep pairs whose B0 parts are independent
    n = alg.dim
    flat = [{i * n + j: P[0].matrix[i, j] for i in range(n) for j in range(n) if P[0].matrix[i, j]} for P in pairs]
    keep = []
    current = []
    for idx, row in enumerate(flat):
        if not row:
            continue
        _, piv = rref_sparse(current + [row], n * n)
        if len(piv) > len(current):
            current = current + [row]
            keep.append(idx)
    if not keep:
        return False, None
    u = find_nondegenerate([pairs[i][0].matrix for i in keep])
    if u is None:
        return False, None
    B0 = Matrix.zeros(n, n)
    B1 = Matrix.zeros(n, n)
    for c, i in zip(u, keep):
        if c:
            B0 = B0 + pairs[i][0].matrix.scale(c)
            B1 = B1 + pairs[i][1].matrix.scale(c)
    return True, (BilinearForm(alg, B0), BilinearForm(alg, B1))
