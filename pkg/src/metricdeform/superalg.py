"""Lie superalgebras given by graded structure constants.

Basis vectors are 0-based internally: indices ``0..m-1`` are even and
``m..m+n-1`` are odd.  Text and JSON documents use the 1-based ``e1, e2,
...`` labels.  The bracket of an odd vector with itself is stored
literally, so ``[e4,e4]=e1`` stores the coefficient 1.
"""

from __future__ import annotations

from .exactfield import ONE, ZERO, Matrix, S, kernel_basis_sparse, rank, rref_sparse, substitute
from .notation import VECTOR_SYMBOL, parse_vector, render_vector


class AlgebraError(ValueError):
    pass


class GradingError(AlgebraError):
    pass


class JacobiError(AlgebraError):
    def __init__(self, msg, violations):
        super().__init__(msg)
        self.violations = violations


def _sign(e):
    return -1 if e & 1 else 1


class SuperAlgebra:
    """Finite-dimensional Lie superalgebra with exact structure constants.

    ``brackets`` maps ``(i, j)`` to ``{k: coefficient}``; pairs with
    ``i > j`` are folded onto ``(j, i)`` with the super sign.  Jacobi is
    checked unless ``check=False``.
    """

    def __init__(self, dim_even, dim_odd, brackets=None, name="", check=True):
        self.dim_even = dim_even
        self.dim_odd = dim_odd
        self.dim = dim_even + dim_odd
        self.name = name
        self._table = {}
        self._cache = {}
        seen = {}
        for (i, j), terms in (brackets or {}).items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise AlgebraError(f"bracket [e{i + 1},e{j + 1}] outside a {dim_even}|{dim_odd} space")
            sgn = 1
            if i > j:
                sgn = -_sign(self.parity(i) * self.parity(j))
                i, j = j, i
            vec = {}
            for k, c in terms.items():
                c = S(c)
                if not c:
                    continue
                if not 0 <= k < self.dim:
                    raise AlgebraError(f"e{k + 1} outside a {dim_even}|{dim_odd} space")
                if self.parity(k) != (self.parity(i) + self.parity(j)) % 2:
                    raise GradingError(f"[e{i + 1},e{j + 1}] has a component along e{k + 1} of the wrong parity")
                vec[k] = c if sgn == 1 else -c
            if i == j and self.parity(i) == 0 and vec:
                raise AlgebraError(f"[e{i + 1},e{i + 1}] must vanish for an even vector")
            if (i, j) in seen:
                if seen[(i, j)] != vec:
                    raise AlgebraError(f"conflicting entries for [e{i + 1},e{j + 1}]")
                continue
            seen[(i, j)] = vec
            if vec:
                self._table[(i, j)] = vec
        if check:
            bad = check_jacobi(self)
            if bad:
                (i, j, k), res = bad[0]
                raise JacobiError(
                    f"super Jacobi identity fails on (e{i + 1},e{j + 1},e{k + 1}): {render_vector(res)}", bad)

    # -- basic access -----------------------------------------------------
    def parity(self, i):
        return 0 if i < self.dim_even else 1

    @property
    def parities(self):
        return [self.parity(i) for i in range(self.dim)]

    @property
    def table(self):
        """Nonzero structure constants ``{(i, j): {k: c}}`` with ``i <= j``."""
        return self._table

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a sparse dict, any index order."""
        if i <= j:
            return self._table.get((i, j), {})
        vec = self._table.get((j, i))
        if not vec:
            return {}
        if self.parity(i) and self.parity(j):
            return vec
        return {k: -c for k, c in vec.items()}

    def bracket(self, x, y):
        return bracket(self, x, y)

    def ad(self, i):
        """Matrix of ad e_i (columns are images of basis vectors)."""
        cols = []
        for j in range(self.dim):
            v = [ZERO] * self.dim
            for k, c in self.bracket_basis(i, j).items():
                v[k] = c
            cols.append(v)
        return Matrix.from_columns(cols, self.dim)

    def parameters(self):
        names = set()
        for vec in self._table.values():
            for c in vec.values():
                names.update(c.parameters())
        return sorted(names)

    def substitute(self, bindings, name=None):
        table = {ij: {k: substitute(c, bindings) for k, c in vec.items()} for ij, vec in self._table.items()}
        return SuperAlgebra(self.dim_even, self.dim_odd, table, name or self.name)

    def is_abelian(self):
        return is_abelian(self)

    def __eq__(self, other):
        return (isinstance(other, SuperAlgebra) and self.dim_even == other.dim_even
                and self.dim_odd == other.dim_odd and self._table == other._table)

    def __hash__(self):
        return hash((self.dim_even, self.dim_odd, frozenset((ij, frozenset(v.items())) for ij, v in self._table.items())))

    def __repr__(self):
        return f"SuperAlgebra({self.name or '?'}, {self.dim_even}|{self.dim_odd}: {self.describe()})"

    def describe(self):
        items = []
        for (i, j) in sorted(self._table):
            vec = [ZERO] * self.dim
            for k, c in self._table[(i, j)].items():
                vec[k] = c
            items.append(f"[e{i + 1},e{j + 1}]={render_vector(vec)}")
        return ", ".join(items) or "abelian"

    # -- documents --------------------------------------------------------
    def to_doc(self):
        brackets = []
        for (i, j) in sorted(self._table):
            terms = [{"k": k + 1, "c": str(c)} for k, c in sorted(self._table[(i, j)].items())]
            brackets.append({"i": i + 1, "j": j + 1, "terms": terms})
        return {"name": self.name, "dim_even": self.dim_even, "dim_odd": self.dim_odd,
                "parameters": self.parameters(), "brackets": brackets}

    @classmethod
    def from_doc(cls, doc, check=True):
        try:
            m, n = int(doc["dim_even"]), int(doc["dim_odd"])
            entries = doc.get("brackets", [])
        except (KeyError, TypeError, ValueError) as exc:
            raise AlgebraError(f"malformed algebra document: {exc}") from None
        declared = set(doc.get("parameters", []) or [])
        table = {}
        for pos, b in enumerate(entries):
            i, j = int(b["i"]) - 1, int(b["j"]) - 1
            if i > j:
                raise AlgebraError(f"brackets[{pos}]: i <= j required, got i={i + 1}, j={j + 1}")
            if (i, j) in table:
                raise AlgebraError(f"brackets[{pos}]: duplicate entry for [e{i + 1},e{j + 1}]")
            vec = {}
            for t in b.get("terms", []):
                k = int(t["k"]) - 1
                c = S(str(t["c"]))
                if declared:
                    extra = set(c.parameters()) - declared
                    if extra:
                        raise AlgebraError(f"brackets[{pos}]: undeclared parameter(s) {sorted(extra)}")
                vec[k] = vec.get(k, ZERO) + c
            table[(i, j)] = vec
        return cls(m, n, table, doc.get("name", ""), check=check)

    @classmethod
    def from_text(cls, dim_even, dim_odd, text, name="", check=True):
        """Build from ``"[e4,e4]=e1, [e2,e4]=e3, [e5,e5]=[e4,e6]=e1"``."""
        dim = dim_even + dim_odd
        brackets = {}
        for chunk in _split_relations(text):
            sides = [p.strip() for p in chunk.split("=")]
            rhs = parse_vector(sides[-1], dim)
            for lhs in sides[:-1]:
                i, j = _parse_pair(lhs)
                vec = {k: c for k, c in enumerate(rhs) if c}
                key = (i, j)
                if key in brackets or (j, i) in brackets:
                    raise AlgebraError(f"duplicate relation for [e{i + 1},e{j + 1}]")
                brackets[key] = vec
        return cls(dim_even, dim_odd, brackets, name, check=check)


def _split_relations(text):
    """Split relation text at commas that are outside brackets/parentheses."""
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch in ",;" and depth == 0:
            if cur.strip():
                out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur)
    return out


def _parse_pair(lhs):
    lhs = lhs.strip()
    if not (lhs.startswith("[") and lhs.endswith("]")):
        raise AlgebraError(f"expected [ei,ej], got {lhs!r}")
    a, b = [p.strip() for p in lhs[1:-1].split(",")]
    ma, mb = VECTOR_SYMBOL.match(a), VECTOR_SYMBOL.match(b)
    if not (ma and mb):
        raise AlgebraError(f"expected [ei,ej], got {lhs!r}")
    return int(ma.group(1)) - 1, int(mb.group(1)) - 1


def abelian(dim_even, dim_odd, name=None):
    return SuperAlgebra(dim_even, dim_odd, {}, name or f"C_{dim_even}|{dim_odd}")


# ---------------------------------------------------------------------------

def bracket(alg, x, y):
    """Bilinear extension of the structure constants to coordinate vectors."""
    if len(x) != alg.dim or len(y) != alg.dim:
        raise ValueError(f"vectors must have length {alg.dim}")
    out = [ZERO] * alg.dim
    xs = [(i, S(a)) for i, a in enumerate(x) if a]
    ys = [(j, S(b)) for j, b in enumerate(y) if b]
    for i, a in xs:
        for j, b in ys:
            vec = alg.bracket_basis(i, j)
            if vec:
                ab = a * b
                for k, c in vec.items():
                    out[k] = out[k] + ab * c
    return out


def _bracket_sparse(alg, u, v):
    out = {}
    for i, a in u.items():
        for j, b in v.items():
            for k, c in alg.bracket_basis(i, j).items():
                val = out.get(k, ZERO) + a * b * c
                if val:
                    out[k] = val
                else:
                    out.pop(k, None)
    return out


def _jacobiator(alg, i, j, k):
    p = alg.parity
    out = {}
    terms = (
        (_sign(p(i) * p(k)), i, j, k),
        (_sign(p(j) * p(i)), j, k, i),
        (_sign(p(k) * p(j)), k, i, j),
    )
    for sgn, a, b, c in terms:
        inner = alg.bracket_basis(b, c)
        if not inner:
            continue
        for key, val in _bracket_sparse(alg, {a: ONE}, inner).items():
            tot = out.get(key, ZERO) + (val if sgn > 0 else -val)
            if tot:
                out[key] = tot
            else:
                out.pop(key, None)
    return out


def check_jacobi(alg):
    """Violations of the super Jacobi identity on sorted basis triples.

    Returns ``[((i, j, k), residual vector), ...]``; empty iff the identity
    holds (identically in any formal parameters).
    """
    bad = []
    n = alg.dim
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                res = _jacobiator(alg, i, j, k)
                if res:
                    vec = [res.get(q, ZERO) for q in range(n)]
                    bad.append(((i, j, k), vec))
    return bad


def is_abelian(alg):
    return not alg.table


def direct_sum(a, b, name=None):
    """a ⊕ b with basis (a even, b even, a odd, b odd); cross brackets vanish."""
    ma, mb = a.dim_even, b.dim_even

    def ia(i):
        return i if i < ma else i + mb

    def ib(i):
        return i + ma if i < mb else i + a.dim

    table = {}
    for (i, j), vec in a.table.items():
        table[(ia(i), ia(j))] = {ia(k): c for k, c in vec.items()}
    for (i, j), vec in b.table.items():
        table[(ib(i), ib(j))] = {ib(k): c for k, c in vec.items()}
    if name is None:
        name = f"{a.name}+{b.name}" if a.name and b.name else ""
    return SuperAlgebra(ma + mb, a.dim_odd + b.dim_odd, table, name)


# ---------------------------------------------------------------------------

class LinearMap:
    """Homogeneous linear map; ``matrix`` columns are images of src basis."""

    def __init__(self, src, dst, matrix, parity=0):
        if isinstance(parity, str):
            parity = {"even": 0, "odd": 1}[parity]
        if not isinstance(matrix, Matrix):
            matrix = Matrix(matrix)
        if matrix.shape != (dst.dim, src.dim):
            raise ValueError(f"matrix shape {matrix.shape} does not match {dst.dim}x{src.dim}")
        for r in range(dst.dim):
            for c in range(src.dim):
                if matrix[r, c] and (dst.parity(r) != (src.parity(c) + parity) % 2):
                    kind = "even" if parity == 0 else "odd"
                    raise GradingError(f"{kind} map cannot send e{c + 1} to a vector with an e{r + 1} component")
        self.src, self.dst, self.matrix, self.parity = src, dst, matrix, parity

    @classmethod
    def from_images(cls, src, dst, images, parity=0):
        """Images given as coordinate lists or text like ``"e3 + s*e4"``."""
        cols = [parse_vector(v, dst.dim) if isinstance(v, str) else [S(a) for a in v] for v in images]
        if len(cols) != src.dim:
            raise ValueError(f"need {src.dim} images, got {len(cols)}")
        return cls(src, dst, Matrix.from_columns(cols, dst.dim), parity)

    def __call__(self, v):
        return self.matrix @ v

    def image(self, i):
        return self.matrix.column(i)

    def compose(self, other):
        """self ∘ other."""
        return LinearMap(other.src, self.dst, self.matrix @ other.matrix, (self.parity + other.parity) % 2)

    def substitute(self, bindings):
        return LinearMap(self.src, self.dst, self.matrix.substitute(bindings), self.parity)

    def __repr__(self):
        imgs = "; ".join(render_vector(self.image(i)) for i in range(self.src.dim))
        return f"LinearMap({imgs})"


def homomorphism_residuals(P):
    """``[((i, j), P[e_i,e_j] - [P e_i, P e_j]), ...]`` for nonzero residuals."""
    src, dst = P.src, P.dst
    bad = []
    imgs = [P.image(i) for i in range(src.dim)]
    for i in range(src.dim):
        for j in range(i, src.dim):
            lhs = [ZERO] * src.dim
            for k, c in src.bracket_basis(i, j).items():
                lhs[k] = c
            lhs = P(lhs)
            rhs = bracket(dst, imgs[i], imgs[j])
            res = [a - b for a, b in zip(lhs, rhs)]
            if any(res):
                bad.append(((i, j), res))
    return bad


def is_homomorphism(P):
    if P.parity != 0:
        return False
    return not homomorphism_residuals(P)


def is_isomorphism(P):
    if P.src.dim != P.dst.dim or P.src.dim_even != P.dst.dim_even:
        return False
    if rank(P.matrix) != P.src.dim:
        return False
    return is_homomorphism(P)


# ---------------------------------------------------------------------------

def _derivation_rows(alg, par):
    n = alg.dim
    unknowns = [(r, c) for c in range(n) for r in range(n) if alg.parity(r) == (alg.parity(c) + par) % 2]
    index = {u: q for q, u in enumerate(unknowns)}
    rows = []
    for i in range(n):
        for j in range(n):
            eqs = {}  # output l -> {unknown: coef}

            def add(l, u, c):
                row = eqs.setdefault(l, {})
                q = index.get(u)
                if q is None:
                    return
                v = row.get(q, ZERO) + c
                if v:
                    row[q] = v
                else:
                    row.pop(q, None)

            # D([e_i, e_j])
            for k, c in alg.bracket_basis(i, j).items():
                for l in range(n):
                    add(l, (l, k), c)
            # - [D e_i, e_j]
            for r in range(n):
                for l, c in alg.bracket_basis(r, j).items():
                    add(l, (r, i), -c)
            # - (-1)^{|D||x|} [e_i, D e_j]
            sg = _sign(par * alg.parity(i))
            for r in range(n):
                for l, c in alg.bracket_basis(i, r).items():
                    add(l, (r, j), -c if sg > 0 else c)
            rows.extend(r for r in eqs.values() if r)
    return unknowns, rows


def _maps_from_kernel(alg, unknowns, basis, par):
    out = []
    for vec in basis:
        M = [[ZERO] * alg.dim for _ in range(alg.dim)]
        for (r, c), a in zip(unknowns, vec):
            M[r][c] = a
        out.append(LinearMap(alg, alg, Matrix(M, alg.dim), par))
    return out


def derivations(alg, parity="both"):
    """Basis of the (even, odd or all) derivations of ``alg``."""
    pars = {"even": [0], "odd": [1], "both": [0, 1], 0: [0], 1: [1]}[parity]
    out = []
    for par in pars:
        unknowns, rows = _derivation_rows(alg, par)
        basis = kernel_basis_sparse(rows, len(unknowns))
        out.extend(_maps_from_kernel(alg, unknowns, basis, par))
    return out


def is_derivation(alg, D):
    M = D.matrix
    n = alg.dim
    for i in range(n):
        for j in range(n):
            ei = [ONE if q == i else ZERO for q in range(n)]
            ej = [ONE if q == j else ZERO for q in range(n)]
            lhs = D(bracket(alg, ei, ej))
            rhs1 = bracket(alg, M.column(i), ej)
            rhs2 = bracket(alg, ei, M.column(j))
            sg = _sign(D.parity * alg.parity(i))
            if any(a - b - (c if sg > 0 else -c) for a, b, c in zip(lhs, rhs1, rhs2)):
                return False
    return True


def killing_matrix(alg):
    """Entries str(ad e_i ∘ ad e_j) (even-block trace minus odd-block trace)."""
    ads = [alg.ad(i) for i in range(alg.dim)]
    n = alg.dim
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            P = ads[i] @ ads[j]
            tr = ZERO
            for q in range(n):
                tr = tr + P[q, q] if alg.parity(q) == 0 else tr - P[q, q]
            row.append(tr)
        rows.append(row)
    return Matrix(rows, n)


def killing_form(alg):
    from .bilinear import BilinearForm
    return BilinearForm(alg, killing_matrix(alg))


def fingerprint(alg):
    """Cheap isomorphism invariants: dims of [g,g], [g,[g,g]], centre, Der."""
    n = alg.dim

    def span_dim(vectors):
        vecs = [v for v in vectors if any(v)]
        return rank(Matrix(vecs, n)) if vecs else 0

    derived = [[alg.bracket_basis(i, j).get(k, ZERO) for k in range(n)]
               for i in range(n) for j in range(i, n)]
    d1 = span_dim(derived)
    lower = []
    for v in derived:
        for i in range(n):
            e = [ONE if q == i else ZERO for q in range(n)]
            lower.append(bracket(alg, e, v))
    d2 = span_dim(lower)
    centre_rows = []
    for j in range(n):
        for k in range(n):
            centre_rows.append({i: alg.bracket_basis(i, j)[k] for i in range(n) if alg.bracket_basis(i, j).get(k)})
    centre = n - len(rref_sparse([r for r in centre_rows if r], n)[1])
    return {"dim": f"{alg.dim_even}|{alg.dim_odd}", "derived": d1, "lower2": d2, "centre": centre,
            "der_even": len(derivations(alg, "even")), "der_odd": len(derivations(alg, "odd"))}
