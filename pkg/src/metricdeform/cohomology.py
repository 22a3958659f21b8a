"""Adjoint cochains, the super Chevalley-Eilenberg coboundary and H^n.

A cochain of degree n is stored on canonical argument tuples: weakly
increasing 0-based indices with no repeated even index.  The monomial
``((i, j), k)`` is the cochain sending ``(e_i, e_j)`` to ``e_k`` and
vanishing on every other canonical tuple; it is written ``e^{i+1,j+1}_{k+1}``.
"""

from __future__ import annotations

import itertools

from .exactfield import ONE, ZERO, S, kernel_basis_sparse, rref_sparse, solve_linear, Matrix, substitute
from .notation import COCHAIN_SYMBOL, parse_combination, render_combination

MAX_DEGREE = 4          # largest degree a cochain may have (target of d on C^3)
MAX_COBOUNDARY = 3      # d is defined on C^0 .. C^3
MAX_COHOMOLOGY = 2


class CochainError(ValueError):
    pass


def _parities(alg):
    return [alg.parity(i) for i in range(alg.dim)]


def canonical(alg, args):
    """Sort ``args`` into canonical order: ``(sign, tuple)``, sign 0 if it vanishes."""
    p = _parities(alg) if not isinstance(alg, list) else alg
    seq = list(args)
    sign = 1
    n = len(seq)
    for a in range(1, n):
        b = a
        while b > 0 and seq[b - 1] > seq[b]:
            x, y = seq[b - 1], seq[b]
            if not (p[x] and p[y]):
                sign = -sign
            seq[b - 1], seq[b] = y, x
            b -= 1
    for a in range(n - 1):
        if seq[a] == seq[a + 1] and not p[seq[a]]:
            return 0, None
    return sign, tuple(seq)


def canonical_tuples(alg, n):
    p = _parities(alg)
    out = []
    for tup in itertools.combinations_with_replacement(range(alg.dim), n):
        if any(tup[a] == tup[a + 1] and not p[tup[a]] for a in range(n - 1)):
            continue
        out.append(tup)
    return out


def monomial_parity(alg, mono):
    idx, k = mono
    return (sum(alg.parity(i) for i in idx) + alg.parity(k)) % 2


def _parity_filter(parity):
    return {"even": (0,), "odd": (1,), "both": (0, 1), 0: (0,), 1: (1,)}[parity]


def cochain_basis(alg, n, parity="both"):
    """Canonical monomials ``(indices, k)`` of degree n, ordered by tuple then target."""
    if n < 0 or n > MAX_DEGREE:
        raise CochainError(f"degree {n} outside 0..{MAX_DEGREE}")
    key = ("basis", n, parity)
    if key in alg._cache:
        return alg._cache[key]
    allowed = _parity_filter(parity)
    out = [(tup, k) for tup in canonical_tuples(alg, n) for k in range(alg.dim)
           if monomial_parity(alg, (tup, k)) in allowed]
    alg._cache[key] = out
    return out


class Cochain:
    """Super-antisymmetric n-linear map g^n -> g with Scalar coefficients."""

    def __init__(self, alg, degree, coeffs=None):
        if degree < 0 or degree > MAX_DEGREE:
            raise CochainError(f"degree {degree} outside 0..{MAX_DEGREE}")
        self.alg = alg
        self.degree = degree
        self.coeffs = {}
        for (idx, k), c in (coeffs or {}).items():
            if len(idx) != degree:
                raise CochainError(f"monomial {idx} does not have degree {degree}")
            if not 0 <= k < alg.dim or any(not 0 <= i < alg.dim for i in idx):
                raise CochainError(f"monomial {idx}->{k} outside the algebra")
            sign, tup = canonical(alg, idx)
            c = S(c)
            if not sign or not c:
                continue
            v = self.coeffs.get((tup, k), ZERO) + (c if sign > 0 else -c)
            if v:
                self.coeffs[(tup, k)] = v
            else:
                self.coeffs.pop((tup, k), None)

    # -- constructors --------------------------------------------------
    @classmethod
    def zero(cls, alg, degree):
        return cls(alg, degree)

    @classmethod
    def monomial(cls, alg, indices, k, c=ONE):
        return cls(alg, len(indices), {(tuple(indices), k): c})

    @classmethod
    def from_bracket(cls, alg):
        """The bracket of ``alg`` as an even 2-cochain."""
        return cls(alg, 2, {((i, j), k): c for (i, j), vec in alg.table.items() for k, c in vec.items()})

    @classmethod
    def from_matrix(cls, alg, M):
        """1-cochain e_j -> column j of M."""
        return cls(alg, 1, {((j,), i): M[i, j] for i in range(alg.dim) for j in range(alg.dim) if M[i, j]})

    @classmethod
    def identity(cls, alg):
        return cls(alg, 1, {((i,), i): ONE for i in range(alg.dim)})

    @classmethod
    def from_text(cls, alg, text, degree=None):
        """``"e^{2,3}_4 - e^{3,3}_1"`` (1-based)."""
        terms = parse_combination(text, COCHAIN_SYMBOL)
        coeffs = []
        for c, m in terms:
            idx = tuple(int(x) - 1 for x in m.group(1).split(",")) if m.group(1) else ()
            coeffs.append((idx, int(m.group(2)) - 1, c))
        if degree is None:
            if not coeffs:
                raise CochainError("degree of the zero cochain must be given")
            degree = len(coeffs[0][0])
        out = cls(alg, degree)
        for idx, k, c in coeffs:
            out = out + cls(alg, degree, {(idx, k): c})
        return out

    @classmethod
    def from_doc(cls, alg, doc, degree=None):
        try:
            entries = [(tuple(int(i) - 1 for i in e["indices"]), int(e["k"]) - 1, S(str(e["c"]))) for e in doc]
        except (KeyError, TypeError, ValueError) as exc:
            raise CochainError(f"malformed cochain document: {exc}") from None
        if degree is None:
            if not entries:
                raise CochainError("degree of an empty cochain document must be given")
            degree = len(entries[0][0])
        out = cls(alg, degree)
        for idx, k, c in entries:
            out = out + cls(alg, degree, {(idx, k): c})
        return out

    def to_doc(self):
        return [{"indices": [i + 1 for i in idx], "k": k + 1, "c": str(c)}
                for (idx, k), c in sorted(self.coeffs.items(), key=lambda kv: kv[0])]

    # -- structure ---------------------------------------------------
    @property
    def parity(self):
        ps = {monomial_parity(self.alg, m) for m in self.coeffs}
        if not ps:
            return "even"
        if ps == {0}:
            return "even"
        if ps == {1}:
            return "odd"
        return "mixed"

    def homogeneous_parts(self):
        """``{0: even part, 1: odd part}`` (absent parts omitted)."""
        parts = {}
        for m, c in self.coeffs.items():
            parts.setdefault(monomial_parity(self.alg, m), {})[m] = c
        return {p: Cochain(self.alg, self.degree, d) for p, d in parts.items()}

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        if other.alg is not self.alg and other.alg != self.alg:
            raise CochainError("cochains live on different algebras")
        if other.degree != self.degree:
            raise CochainError(f"degree {self.degree} vs {other.degree}")
        return True

    def _new(self, coeffs):
        out = Cochain.__new__(Cochain)
        out.alg, out.degree, out.coeffs = self.alg, self.degree, coeffs
        return out

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        d = dict(self.coeffs)
        for m, c in other.coeffs.items():
            v = d.get(m, ZERO) + c
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return self._new(d)

    def __neg__(self):
        return self._new({m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        c = S(c)
        if not c:
            return self._new({})
        return self._new({m: c * a for m, a in self.coeffs.items()})

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def substitute(self, bindings, alg=None):
        alg = alg or self.alg.substitute(bindings)
        return Cochain(alg, self.degree, {m: substitute(c, bindings) for m, c in self.coeffs.items()})

    def on(self, alg):
        """Same coefficients regarded as a cochain on ``alg`` (same dimensions)."""
        return Cochain(alg, self.degree, self.coeffs)

    def parameters(self):
        names = set()
        for c in self.coeffs.values():
            names.update(c.parameters())
        return sorted(names)

    # -- evaluation --------------------------------------------------
    def evaluate(self, args):
        """Value on basis vectors ``args`` (0-based indices) as a coordinate list."""
        if len(args) != self.degree:
            raise CochainError(f"{self.degree}-cochain evaluated on {len(args)} arguments")
        out = [ZERO] * self.alg.dim
        sign, tup = canonical(self.alg, args)
        if not sign:
            return out
        for k in range(self.alg.dim):
            c = self.coeffs.get((tup, k))
            if c:
                out[k] = c if sign > 0 else -c
        return out

    def _values(self):
        """``{canonical tuple: {k: c}}``."""
        vals = {}
        for (tup, k), c in self.coeffs.items():
            vals.setdefault(tup, {})[k] = c
        return vals

    def __str__(self):
        items = [(c, "e^{" + ",".join(str(i + 1) for i in idx) + "}_" + str(k + 1))
                 for (idx, k), c in sorted(self.coeffs.items(), key=lambda kv: kv[0])]
        return render_combination(items)

    def __repr__(self):
        return f"Cochain(deg={self.degree}, {self})"


# ---------------------------------------------------------------------------
# coboundary

def _coboundary_columns(alg, n):
    """``{source monomial: {target monomial: coef}}`` for d: C^n -> C^{n+1}."""
    key = ("d", n)
    if key in alg._cache:
        return alg._cache[key]
    p = _parities(alg)
    dim = alg.dim
    cols = {}

    def add(src, dst, c):
        col = cols.setdefault(src, {})
        v = col.get(dst, ZERO) + c
        if v:
            col[dst] = v
        else:
            col.pop(dst, None)

    for X in canonical_tuples(alg, n + 1):
        # first sum: (-1)^{b_i + |x_i||f|} [x_i, f(x_0..^x_i..x_n)]
        before = 0
        for i, xi in enumerate(X):
            Y = X[:i] + X[i + 1:]
            b = i + p[xi] * before
            before += p[xi]
            ysum = sum(p[y] for y in Y)
            for k in range(dim):
                br = alg.bracket_basis(xi, k)
                if not br:
                    continue
                fpar = (ysum + p[k]) % 2
                sg = (b + p[xi] * fpar) % 2
                for l, c in br.items():
                    add((Y, k), (X, l), -c if sg else c)
        # second sum: (-1)^{c_pq} f([x_p,x_q], x_0..^x_p..^x_q..x_n)
        for q in range(n + 1):
            for pp in range(q):
                br = alg.bracket_basis(X[pp], X[q])
                if not br:
                    continue
                xp, xq = X[pp], X[q]
                pre = sum(p[x] for x in X[:pp])
                mid = sum(p[x] for x in X[pp + 1:q])
                e = (pp + q + (p[xp] + p[xq]) * pre + p[xq] * mid) % 2
                rest = X[:pp] + X[pp + 1:q] + X[q + 1:]
                for m, c in br.items():
                    sign, Z = canonical(p, (m,) + rest)
                    if not sign:
                        continue
                    cc = c if (sign > 0) != bool(e) else -c
                    for k in range(dim):
                        add((Z, k), (X, k), cc)
    alg._cache[key] = cols
    return cols


def coboundary(f):
    """d f for a cochain of degree n <= 3."""
    n = f.degree
    if n > MAX_COBOUNDARY:
        raise CochainError(f"coboundary is only available up to degree {MAX_COBOUNDARY}")
    cols = _coboundary_columns(f.alg, n)
    out = {}
    for m, c in f.coeffs.items():
        for t, a in cols.get(m, {}).items():
            v = out.get(t, ZERO) + c * a
            if v:
                out[t] = v
            else:
                out.pop(t, None)
    g = Cochain.__new__(Cochain)
    g.alg, g.degree, g.coeffs = f.alg, n + 1, out
    return g


def coboundary_matrix_rows(alg, n, parity="both"):
    """Sparse rows of d: C^n -> C^{n+1} over the parity-filtered bases."""
    src = cochain_basis(alg, n, parity)
    cols = _coboundary_columns(alg, n)
    rows = {}
    for j, m in enumerate(src):
        for t, a in cols.get(m, {}).items():
            rows.setdefault(t, {})[j] = a
    return list(rows.values()), src


def _vec(f, index):
    v = {}
    for m, c in f.coeffs.items():
        if m not in index:
            raise CochainError(f"monomial {m} not in the chosen basis")
        v[index[m]] = c
    return v


def _from_vec(alg, n, basis, vec):
    if isinstance(vec, dict):
        items = vec.items()
    else:
        items = enumerate(vec)
    g = Cochain.__new__(Cochain)
    g.alg, g.degree = alg, n
    g.coeffs = {basis[j]: c for j, c in items if c}
    return g


def _coboundary_span(alg, n, parity):
    """Sparse vectors (over the C^n basis) spanning B^n."""
    basis = cochain_basis(alg, n, parity)
    index = {m: j for j, m in enumerate(basis)}
    if n == 0:
        return [], basis, index
    out = []
    for m in cochain_basis(alg, n - 1, parity):
        img = coboundary(Cochain(alg, n - 1, {m: ONE}))
        if img:
            out.append(_vec(img, index))
    return out, basis, index


class CohomologyResult(dict):
    """dict with keys dim, cocycle_dim, coboundary_dim, representatives."""

    def __getattr__(self, name):
        try:
            return self[name]
        except KeyError:
            raise AttributeError(name) from None


def cohomology(alg, n, parity="even"):
    """H^n(g, g) restricted to the given cochain parity."""
    if n < 0 or n > MAX_COHOMOLOGY:
        raise CochainError(f"cohomology is computed for degrees 0..{MAX_COHOMOLOGY}")
    key = ("H", n, parity)
    if key in alg._cache:
        return alg._cache[key]
    rows, basis = coboundary_matrix_rows(alg, n, parity)
    Z = kernel_basis_sparse(rows, len(basis))
    Bspan, _, _ = _coboundary_span(alg, n, parity)
    reduced, pivots = rref_sparse(Bspan, len(basis))
    bdim = len(pivots)
    reps = []
    current = [dict(r) for r in reduced]
    for z in Z:
        zs = {j: c for j, c in enumerate(z) if c}
        red, piv = rref_sparse(current + [zs], len(basis))
        if len(piv) > len(current):
            current = red
            reps.append(_from_vec(alg, n, basis, zs))
    res = CohomologyResult(dim=len(Z) - bdim, cocycle_dim=len(Z), coboundary_dim=bdim,
                           representatives=reps)
    assert len(reps) == res["dim"]
    alg._cache[key] = res
    return res


def is_cocycle(f):
    return coboundary(f).is_zero()


def classify_in_cohomology(alg, f, representatives=None):
    """Cocycle/coboundary status of f and its coordinates in a representative basis."""
    if f.alg is not alg and f.alg != alg:
        f = f.on(alg)
    n = f.degree
    cyc = is_cocycle(f)
    out = {"is_cocycle": cyc, "is_coboundary": False, "coordinates": None}
    if not cyc:
        return out
    parts = f.homogeneous_parts()
    par = "both" if len(parts) > 1 else ("even" if f.parity == "even" else "odd")
    if representatives is None:
        if n > MAX_COHOMOLOGY:
            raise CochainError(f"cohomology is computed for degrees 0..{MAX_COHOMOLOGY}")
        if par == "both":
            representatives = cohomology(alg, n, "even").representatives + cohomology(alg, n, "odd").representatives
        else:
            representatives = cohomology(alg, n, par).representatives
    Bspan, basis, index = _coboundary_span(alg, n, "both")
    cols = [_vec(r, index) for r in representatives] + Bspan
    target = _vec(f, index)
    N = len(basis)
    M = Matrix([[c.get(i, ZERO) for c in cols] for i in range(N)], len(cols))
    x, _ = solve_linear(M, [target.get(i, ZERO) for i in range(N)])
    if x is None:
        return out
    coords = x[:len(representatives)]
    out["coordinates"] = coords
    out["is_coboundary"] = _in_span(Bspan, target, N)
    return out


def _in_span(vectors, target, ncols):
    _, piv = rref_sparse(vectors, ncols)
    _, piv2 = rref_sparse(vectors + [target], ncols)
    return len(piv) == len(piv2)


def class_rank(alg, cochains):
    """Rank of the classes of ``cochains`` modulo coboundaries."""
    if not cochains:
        return 0
    n = cochains[0].degree
    Bspan, basis, index = _coboundary_span(alg, n, "both")
    _, piv = rref_sparse(Bspan, len(basis))
    _, piv2 = rref_sparse(Bspan + [_vec(f.on(alg) if f.alg is not alg else f, index) for f in cochains], len(basis))
    return len(piv2) - len(piv)
