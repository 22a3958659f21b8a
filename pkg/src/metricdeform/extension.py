"""Double extensions of metric Lie superalgebras.

For (g1, B1) metric, g2 acting on g1 by skew derivations psi, the double
extension lives on g2 + g1 + g2*.  Basis order of the result:

    g2 even, g1 even, g2* even, g2 odd, g1 odd, g2* odd

so that for a one-dimensional even g2 = <D> it reads (D, g1 even, D*, g1 odd).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bilinear import BilinearForm, check_metric, is_skew, invariance_residuals
from .exactfield import ONE, ZERO, Matrix, S
from .superalg import LinearMap, SuperAlgebra, abelian, check_jacobi, is_derivation


class ExtensionError(ValueError):
    pass


@dataclass
class DoubleExtensionSpec:
    base: SuperAlgebra
    base_form: BilinearForm
    extender: SuperAlgebra
    action: list                 # psi(e_z) for each basis vector of the extender
    extender_form: BilinearForm = None

    def validate(self):
        g1, g2, B1 = self.base, self.extender, self.base_form
        verdict = check_metric(g1, B1)
        if not verdict.ok:
            raise ExtensionError(f"base form is not an invariant scalar product: {verdict.as_dict()}")
        if len(self.action) != g2.dim:
            raise ExtensionError(f"need {g2.dim} derivations, got {len(self.action)}")
        for z, D in enumerate(self.action):
            if D.parity != g2.parity(z):
                raise ExtensionError(f"psi(e{z + 1}) has the wrong parity")
            if not is_derivation(g1, D):
                raise ExtensionError(f"psi(e{z + 1}) is not a derivation of the base")
            if not is_skew(g1, B1, D):
                raise ExtensionError(f"psi(e{z + 1}) is not skew-supersymmetric for the base form")
        # psi([x,y]) = psi(x)psi(y) - (-1)^{|x||y|} psi(y)psi(x)
        mats = [D.matrix for D in self.action]
        for x in range(g2.dim):
            for y in range(x, g2.dim):
                lhs = Matrix.zeros(g1.dim, g1.dim)
                for k, c in g2.bracket_basis(x, y).items():
                    lhs = lhs + mats[k].scale(c)
                sg = -1 if (g2.parity(x) and g2.parity(y)) else 1
                rhs = mats[x] @ mats[y] - (mats[y] @ mats[x]).scale(sg)
                if lhs != rhs:
                    raise ExtensionError(f"psi is not a homomorphism on the pair (e{x + 1}, e{y + 1})")
        if self.extender_form is not None:
            B2 = self.extender_form
            M = B2.matrix
            n = g2.dim
            par = g2.parity
            if any(M[i, j] for i in range(n) for j in range(n) if par(i) != par(j)):
                raise ExtensionError("extender form is not even")
            if any(M[j, i] != (-M[i, j] if par(i) and par(j) else M[i, j]) for i in range(n) for j in range(n)):
                raise ExtensionError("extender form is not supersymmetric")
            if invariance_residuals(g2, B2):
                raise ExtensionError("extender form is not invariant")


def _layout(g1, g2):
    """Global indices for the three summands."""
    m2, m1 = g2.dim_even, g1.dim_even
    even = m2 + m1 + m2
    pos2, pos1, posd = {}, {}, {}
    for a in range(g2.dim_even):
        pos2[a] = a
        posd[a] = m2 + m1 + a
    for a in range(g1.dim_even):
        pos1[a] = m2 + a
    o2, o1 = g2.dim_odd, g1.dim_odd
    for a in range(o2):
        pos2[g2.dim_even + a] = even + a
        posd[g2.dim_even + a] = even + o2 + o1 + a
    for a in range(o1):
        pos1[g1.dim_even + a] = even + o2 + a
    return even, o2 + o1 + o2, pos2, pos1, posd


def double_extension(spec, name=""):
    """(algebra, invariant scalar product) of the double extension."""
    spec.validate()
    g1, g2, B1 = spec.base, spec.extender, spec.base_form
    psi = [D.matrix for D in spec.action]
    ev, od, pos2, pos1, posd = _layout(g1, g2)
    p1, p2 = g1.parity, g2.parity
    table = {}

    def put(i, j, k, c):
        if not c:
            return
        vec = table.setdefault((i, j), {})
        v = vec.get(k, ZERO) + c
        if v:
            vec[k] = v
        else:
            vec.pop(k, None)

    # [x2, y2]
    for x in range(g2.dim):
        for y in range(x, g2.dim):
            for k, c in g2.bracket_basis(x, y).items():
                put(pos2[x], pos2[y], pos2[k], c)
    # [x2, y1] = psi(x2) y1
    for x in range(g2.dim):
        for y in range(g1.dim):
            for k in range(g1.dim):
                put(pos2[x], pos1[y], pos1[k], psi[x][k, y])
    # [x2, eps_a] = sum_b -(-1)^{|x||a|} c_{xb}^a eps_b
    for x in range(g2.dim):
        for a in range(g2.dim):
            for b in range(g2.dim):
                c = g2.bracket_basis(x, b).get(a)
                if c:
                    put(pos2[x], posd[a], posd[b], c if (p2(x) and p2(a)) else -c)
    # [x1, y1] = [x1, y1]_1 + phi(x1, y1)
    M1 = B1.matrix
    for x in range(g1.dim):
        for y in range(x, g1.dim):
            for k, c in g1.bracket_basis(x, y).items():
                put(pos1[x], pos1[y], pos1[k], c)
            for z in range(g2.dim):
                # B1(psi(z) x, y)
                val = ZERO
                for r in range(g1.dim):
                    if psi[z][r, x] and M1[r, y]:
                        val = val + psi[z][r, x] * M1[r, y]
                if val and ((p1(x) + p1(y)) * p2(z)) % 2:
                    val = -val
                put(pos1[x], pos1[y], posd[z], val)
    table = {ij: v for ij, v in table.items() if v}
    alg = SuperAlgebra(ev, od, table, name, check=False)
    bad = check_jacobi(alg)
    if bad:
        raise ExtensionError(f"double extension violates Jacobi on {len(bad)} triple(s)")

    n = ev + od
    rows = [[ZERO] * n for _ in range(n)]
    for x in range(g1.dim):
        for y in range(g1.dim):
            rows[pos1[x]][pos1[y]] = M1[x, y]
    if spec.extender_form is not None:
        M2 = spec.extender_form.matrix
        for x in range(g2.dim):
            for y in range(g2.dim):
                rows[pos2[x]][pos2[y]] = M2[x, y]
    for a in range(g2.dim):
        rows[posd[a]][pos2[a]] = ONE
        rows[pos2[a]][posd[a]] = -ONE if p2(a) else ONE
    form = BilinearForm(alg, Matrix(rows, n))
    verdict = check_metric(alg, form)
    if not verdict.ok:
        raise ExtensionError(f"double-extension form fails: {verdict.as_dict()}")
    return alg, form


def double_extension_1d(base, B1, D, b=0, name=""):
    """Extension by <D>: basis (D, base even, D*, base odd), B(D,D) = b, B(D*,D) = 1."""
    if D.parity != 0:
        raise ExtensionError("the derivation must be even")
    line = abelian(1, 0)
    b = S(b)
    spec = DoubleExtensionSpec(base, B1, line, [D], BilinearForm(line, Matrix([[b]], 1)))
    return double_extension(spec, name)


def symplectic_plane():
    """C_{0|2} with B(h1, h2) = 1 = -B(h2, h1)."""
    alg = abelian(0, 2, "C_0|2")
    return alg, BilinearForm(alg, Matrix([[ZERO, ONE], [-ONE, ZERO]], 2))


def sp_derivation(k1, k2, k3, alg=None):
    """k1 D1 + k2 D2 + k3 D3 on C_{0|2}: matrix [[k1, k2], [k3, -k1]]."""
    if alg is None:
        alg, _ = symplectic_plane()
    k1, k2, k3 = S(k1), S(k2), S(k3)
    return LinearMap(alg, alg, Matrix([[k1, k2], [k3, -k1]], 2), 0)
