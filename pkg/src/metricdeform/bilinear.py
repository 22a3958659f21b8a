"""Invariant bilinear forms (metric structures) on Lie superalgebras."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .exactfield import ONE, ZERO, Matrix, S, det, kernel_basis_sparse, rank
from .superalg import LinearMap, _maps_from_kernel, _derivation_rows, is_isomorphism


class FormError(ValueError):
    pass


class BilinearForm:
    """B(e_i, e_j) stored at ``matrix[i, j]``."""

    def __init__(self, alg, matrix):
        if not isinstance(matrix, Matrix):
            matrix = Matrix(matrix)
        if matrix.shape != (alg.dim, alg.dim):
            raise FormError(f"form is {matrix.shape[0]}x{matrix.shape[1]}, algebra has dimension {alg.dim}")
        self.alg = alg
        self.matrix = matrix

    def __call__(self, x, y):
        M = self.matrix
        out = ZERO
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if b and M[i, j]:
                    out = out + a * b * M[i, j]
        return out

    def even_block(self):
        m = self.alg.dim_even
        return Matrix([r[:m] for r in self.matrix.rows[:m]], m)

    def odd_block(self):
        m = self.alg.dim_even
        return Matrix([r[m:] for r in self.matrix.rows[m:]], self.alg.dim_odd)

    def to_doc(self, name=""):
        return {"name": name, "matrix": self.matrix.tolist()}

    @classmethod
    def from_doc(cls, alg, doc):
        try:
            rows = doc["matrix"]
            return cls(alg, Matrix([[S(str(c)) for c in r] for r in rows]))
        except (KeyError, TypeError) as exc:
            raise FormError(f"malformed form document: {exc}") from None

    def substitute(self, bindings, alg=None):
        return BilinearForm(alg or self.alg.substitute(bindings), self.matrix.substitute(bindings))

    def __repr__(self):
        return f"BilinearForm({self.matrix!r})"


@dataclass
class MetricVerdict:
    even: bool
    supersymmetric: bool
    invariant: bool
    nondegenerate: bool

    @property
    def ok(self):
        return self.even and self.supersymmetric and self.invariant and self.nondegenerate

    def as_dict(self):
        return {"even": self.even, "supersymmetric": self.supersymmetric,
                "invariant": self.invariant, "nondegenerate": self.nondegenerate}


def invariance_residuals(alg, B):
    """Triples (i, j, k) where B([e_i,e_j],e_k) != B(e_i,[e_j,e_k])."""
    M = B.matrix
    n = alg.dim
    bad = []
    for i in range(n):
        for j in range(n):
            left = alg.bracket_basis(i, j)
            for k in range(n):
                lhs = ZERO
                for l, c in left.items():
                    if M[l, k]:
                        lhs = lhs + c * M[l, k]
                rhs = ZERO
                for l, c in alg.bracket_basis(j, k).items():
                    if M[i, l]:
                        rhs = rhs + c * M[i, l]
                if lhs != rhs:
                    bad.append(((i, j, k), lhs - rhs))
    return bad


def check_metric(alg, B):
    M = B.matrix
    n = alg.dim
    p = alg.parity
    even = all(not M[i, j] for i in range(n) for j in range(n) if p(i) != p(j))
    susy = all(M[j, i] == (M[i, j] if not (p(i) and p(j)) else -M[i, j]) for i in range(n) for j in range(n))
    inv = not invariance_residuals(alg, B)
    nondeg = rank(M) == n
    return MetricVerdict(even, susy, inv, nondeg)


# ---------------------------------------------------------------------------
# unknown entries of an even supersymmetric form

def _form_unknowns(alg):
    """Independent entries: even-even i<=j, odd-odd i<j."""
    p = alg.parity
    n = alg.dim
    return [(i, j) for i in range(n) for j in range(i, n)
            if p(i) == p(j) and not (p(i) and i == j)]


def _entry(alg, index, i, j):
    """(unknown position, sign) for B(e_i, e_j), or None if forced zero."""
    p = alg.parity
    if p(i) != p(j):
        return None
    if i == j and p(i):
        return None
    if i <= j:
        return index[(i, j)], 1
    return index[(j, i)], (-1 if p(i) else 1)


def _form_from_vector(alg, unknowns, vec):
    n = alg.dim
    rows = [[ZERO] * n for _ in range(n)]
    for (i, j), a in zip(unknowns, vec):
        if not a:
            continue
        rows[i][j] = a
        if i != j:
            rows[j][i] = -a if alg.parity(i) else a
    return BilinearForm(alg, Matrix(rows, n))


def _invariance_rows(alg, index, offset=0, alg_for_bracket=None):
    """Rows of B([e_i,e_j],e_k) - B(e_i,[e_j,e_k]) = 0 in the form unknowns."""
    g = alg_for_bracket or alg
    n = alg.dim
    rows = []
    for i in range(n):
        for j in range(n):
            left = g.bracket_basis(i, j)
            for k in range(n):
                row = {}
                for l, c in left.items():
                    e = _entry(alg, index, l, k)
                    if e:
                        q, sg = e
                        row[q + offset] = row.get(q + offset, ZERO) + (c if sg > 0 else -c)
                for l, c in g.bracket_basis(j, k).items():
                    e = _entry(alg, index, i, l)
                    if e:
                        q, sg = e
                        row[q + offset] = row.get(q + offset, ZERO) - (c if sg > 0 else -c)
                row = {q: a for q, a in row.items() if a}
                if row:
                    rows.append(row)
    return rows


def invariant_form_space(alg):
    """Basis of the even supersymmetric invariant forms (possibly degenerate)."""
    unknowns = _form_unknowns(alg)
    index = {u: q for q, u in enumerate(unknowns)}
    rows = _invariance_rows(alg, index)
    return [_form_from_vector(alg, unknowns, v) for v in kernel_basis_sparse(rows, len(unknowns))]


GRID = (-2, -1, 0, 1, 2)
SHELL_BUDGET = 4000


def _grid_points(d):
    """{-2..2}^d ordered by l1-norm, lexicographic within a shell."""
    for norm in range(0, 2 * d + 1):
        for u in _tuples_with_norm(d, norm):
            yield u


def _tuples_with_norm(d, norm):
    if d == 0:
        if norm == 0:
            yield ()
        return
    for first in GRID:
        rest = norm - abs(first)
        if 0 <= rest <= 2 * (d - 1):
            for tail in _tuples_with_norm(d - 1, rest):
                yield (first,) + tail


def find_nondegenerate(matrices):
    """Coefficients u with det(sum u_j M_j) != 0, or None.

    Searches {-2..2}^d shell by shell; for d <= 3 an exhausted budget falls
    back to the grid {0..N}^d, on which a nonzero determinant polynomial
    (degree <= N in each variable) cannot vanish identically.  Larger d
    falls back to seeded random points.
    """
    d = len(matrices)
    if d == 0:
        return None
    n = matrices[0].nrows
    if n == 0:
        return (1,) + (0,) * (d - 1)

    def combo(u):
        rows = [[ZERO] * n for _ in range(n)]
        for c, M in zip(u, matrices):
            if not c:
                continue
            for i in range(n):
                for j in range(n):
                    if M[i, j]:
                        rows[i][j] = rows[i][j] + c * M[i, j]
        return Matrix(rows, n)

    for step, u in enumerate(_grid_points(d)):
        if step >= SHELL_BUDGET:
            break
        if any(u) and det(combo(u)):
            return u
    if d <= 3:
        for u in itertools.product(range(n + 1), repeat=d):
            if any(u) and det(combo(u)):
                return u
        return None
    rng = random.Random(20240229)
    for _ in range(40):
        u = tuple(rng.randint(-50, 50) for _ in range(d))
        if any(u) and det(combo(u)):
            return u
    return None


def _combine(forms, u):
    n = forms[0].alg.dim
    M = Matrix.zeros(n, n)
    for c, F in zip(u, forms):
        if c:
            M = M + F.matrix.scale(c)
    return M


def has_metric(alg):
    """(True, witness form) if some invariant form is nondegenerate."""
    forms = invariant_form_space(alg)
    if alg.dim == 0:
        return True, BilinearForm(alg, Matrix.zeros(0, 0))
    u = find_nondegenerate([F.matrix for F in forms])
    if u is None:
        return False, None
    return True, BilinearForm(alg, _combine(forms, u))


# ---------------------------------------------------------------------------

def _skew_rows(alg, B, unknowns, par):
    """Rows of B(D e_i, e_j) + (-1)^{|D||i|} B(e_i, D e_j) = 0."""
    index = {u: q for q, u in enumerate(unknowns)}
    M = B.matrix
    n = alg.dim
    rows = []
    for i in range(n):
        for j in range(n):
            row = {}
            sg = -1 if (par and alg.parity(i)) else 1
            for r in range(n):
                if M[r, j] and (r, i) in index:
                    q = index[(r, i)]
                    row[q] = row.get(q, ZERO) + M[r, j]
                if M[i, r] and (r, j) in index:
                    q = index[(r, j)]
                    row[q] = row.get(q, ZERO) + (M[i, r] if sg > 0 else -M[i, r])
            row = {q: a for q, a in row.items() if a}
            if row:
                rows.append(row)
    return rows


def skew_derivations(alg, B, parity="both"):
    """Basis of Der(g, B): derivations skew-supersymmetric for B."""
    if not check_metric(alg, B).ok:
        raise FormError("skew derivations need a verified invariant scalar product")
    pars = {"even": [0], "odd": [1], "both": [0, 1], 0: [0], 1: [1]}[parity]
    out = []
    for par in pars:
        unknowns, rows = _derivation_rows(alg, par)
        rows = rows + _skew_rows(alg, B, unknowns, par)
        basis = kernel_basis_sparse(rows, len(unknowns))
        out.extend(_maps_from_kernel(alg, unknowns, basis, par))
    return out


def is_skew(alg, B, D):
    n = alg.dim
    M = D.matrix
    for i in range(n):
        for j in range(n):
            ei = [ONE if q == i else ZERO for q in range(n)]
            ej = [ONE if q == j else ZERO for q in range(n)]
            lhs = B(M.column(i), ej)
            rhs = B(ei, M.column(j))
            sg = -1 if (D.parity and alg.parity(i)) else 1
            if lhs + (rhs if sg > 0 else -rhs):
                return False
    return True


def is_isometry(P, B_src, B_dst):
    """True iff B_dst(P x, P y) = B_src(x, y) on all basis pairs."""
    if not is_isomorphism(P):
        raise FormError("isometry check needs an isomorphism of the underlying algebras")
    return pullback(P, B_dst) == B_src.matrix


def pullback(P, B):
    M = P.matrix
    return M.transpose() @ B.matrix @ M


def compatibility_residuals(alg, B):
    """Residuals of B0([x,y],z) = B1(x,[y,z]) and B1([z,x],y) = -B1(x,[z,y])
    for odd basis x, y and even basis z."""
    m = alg.dim_even
    bad = []
    M = B.matrix
    odd = range(m, alg.dim)
    for x in odd:
        for y in odd:
            for z in range(m):
                lhs = sum((c * M[l, z] for l, c in alg.bracket_basis(x, y).items()), ZERO)
                rhs = sum((c * M[x, l] for l, c in alg.bracket_basis(y, z).items()), ZERO)
                if lhs != rhs:
                    bad.append(("B0([x,y],z)=B1(x,[y,z])", (x, y, z), lhs - rhs))
                lhs = sum((c * M[l, y] for l, c in alg.bracket_basis(z, x).items()), ZERO)
                rhs = sum((c * M[x, l] for l, c in alg.bracket_basis(z, y).items()), ZERO)
                if lhs != -rhs:
                    bad.append(("B1([z,x],y)=-B1(x,[z,y])", (x, y, z), lhs + rhs))
    return bad
