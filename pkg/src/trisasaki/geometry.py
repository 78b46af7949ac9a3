"""Invariant tensor calculus at the origin of a reductive homogeneous space.

Connections are handled through their Nomizu maps Lambda: m x m -> m.  The
Levi-Civita map comes from the standard invariant-metric formula, the
canonical map from adding half the skew torsion; curvature follows the
reductive-space formula

    R(x, y) z = [L_x, L_y] z - L_{[x,y]_m} z - [[x, y]_h, z].

All functions are pure; expensive intermediates (Nomizu maps, curvature)
are returned so callers can reuse them.
"""

from __future__ import annotations

from . import linalg
from .errors import NotSymmetricBase
from .models import SYMMETRIC_FAMILIES, adapted_frame, perm_sign, third_index
from .scalars import converter, is_zero, residual_norm

EVEN_PERMS = ((1, 2, 3), (2, 3, 1), (3, 1, 2))


class NomizuMap:
    """Bilinear map m x m -> m; lam[x] is the matrix of Lambda_{b_x}."""

    def __init__(self, lam):
        self.lam = lam

    def apply(self, x_idx, vec):
        return linalg.mat_vec(self.lam[x_idx], vec)

    def column(self, x_idx, y_idx):
        return [row[y_idx] for row in self.lam[x_idx]]

    def metric_residual(self, g):
        """Max violation of g(L_x y, z) + g(y, L_x z) = 0."""
        worst = 0
        for mat in self.lam:
            s = linalg.mat_add(
                linalg.mat_mul(linalg.mat_transpose(mat), g), linalg.mat_mul(g, mat)
            )
            r = residual_norm(linalg.flatten(s))
            if r > worst:
                worst = r
        return worst


class TorsionTensor:
    """Vector torsion T(x, y) plus its g-lowered totally-antisymmetric form."""

    def __init__(self, vec, low):
        self.vec = vec  # vec[x][y] = m-vector T(b_x, b_y)
        self.low = low  # low[x][y][z] = g(T(b_x, b_y), b_z)

    def antisymmetry_residual(self):
        m = len(self.low)
        vals = []
        for x in range(m):
            for y in range(x, m):
                for z in range(m):
                    vals.append(self.low[x][y][z] + self.low[y][x][z])
                    vals.append(self.low[x][y][z] + self.low[x][z][y])
        return residual_norm(vals)

    def difference(self, other):
        m = len(self.low)
        return residual_norm(
            [
                self.low[x][y][z] - other.low[x][y][z]
                for x in range(m)
                for y in range(m)
                for z in range(m)
            ]
        )


class CurvatureTensor:
    """Lowered curvature, stored on pairs x < y; antisymmetric in both slots."""

    def __init__(self, m_dim, pairs):
        self.m_dim = m_dim
        self._pairs = pairs  # dict (x, y) x<y -> matrix low[z][w]

    def block(self, x, y):
        if x == y:
            return None
        if x < y:
            return self._pairs[(x, y)]
        return linalg.mat_scale(-1, self._pairs[(y, x)])

    def value(self, x, y, z, w):
        if x == y:
            return 0
        if x < y:
            return self._pairs[(x, y)][z][w]
        return -self._pairs[(y, x)][z][w]


def d_eta(model, i):
    """deta_i(x, y) = -eta_i([x, y]_m) on basis pairs."""
    m = model.m_dim
    eta = model.eta[i - 1]
    out = linalg.mat_zeros(m)
    for x in range(m):
        for y in range(x + 1, m):
            acc = 0
            for k, v in model.bracket_m_basis(x, y):
                if eta[k]:
                    acc = acc - v * eta[k]
            out[x][y] = acc
            out[y][x] = -acc
    return out


def fundamental_two_form(model, i):
    """Phi_i(x, y) = g(x, phi_i y)."""
    return linalg.mat_mul(model.g, model.phi[i - 1])


def wedge11(a, b):
    """(a ^ b)(x, y) = a(x) b(y) - a(y) b(x) for 1-forms given as covectors."""
    m = len(a)
    out = linalg.mat_zeros(m)
    for x in range(m):
        if not a[x] and not b[x]:
            continue
        for y in range(m):
            out[x][y] = a[x] * b[y] - a[y] * b[x]
    return out


def wedge12(a, B):
    """(a ^ B)(x,y,z) = a(x)B(y,z) - a(y)B(x,z) + a(z)B(x,y) for a 1-form and 2-form."""
    m = len(a)
    return [
        [
            [
                a[x] * B[y][z] - a[y] * B[x][z] + a[z] * B[x][y]
                for z in range(m)
            ]
            for y in range(m)
        ]
        for x in range(m)
    ]


def wedge111(a, b, c):
    """(a ^ b ^ c)(x, y, z) as the 3 x 3 determinant of evaluations."""
    m = len(a)
    out = []
    for x in range(m):
        plane = []
        for y in range(m):
            row = []
            for z in range(m):
                row.append(
                    a[x] * (b[y] * c[z] - b[z] * c[y])
                    - a[y] * (b[x] * c[z] - b[z] * c[x])
                    + a[z] * (b[x] * c[y] - b[y] * c[x])
                )
            plane.append(row)
        out.append(plane)
    return out


def check_structure(model):
    """Residuals of all defining identities of the structure.

    Returns an ordered dict-like mapping of named residual magnitudes:
    compatibility relations, the defining 2-form equation, isotropy
    equivariance of all tensors, and the Reeb bracket relations.
    """
    m = model.m_dim
    g = model.g
    out = {}
    ident = linalg.mat_identity(m)

    def outer(vec, cov):
        return [[vec[r] * cov[c] for c in range(m)] for r in range(m)]

    comp = []
    for i, j, k in EVEN_PERMS:
        pi, pj, pk = model.phi[i - 1], model.phi[j - 1], model.phi[k - 1]
        xi_i, xi_j = model.xi[i - 1], model.xi[j - 1]
        eta_i, eta_j, eta_k = model.eta[i - 1], model.eta[j - 1], model.eta[k - 1]
        prod = linalg.mat_mul(pi, pj)
        comp += linalg.flatten(
            linalg.mat_sub(linalg.mat_sub(prod, outer(xi_i, eta_j)), pk)
        )
        comp += linalg.vec_sub(linalg.mat_vec(pi, xi_j), model.xi[k - 1])
        comp += linalg.vec_sub(
            [sum(eta_i[a] * pj[a][c] for a in range(m) if eta_i[a]) for c in range(m)],
            eta_k,
        )
    for i in range(3):
        pi = model.phi[i]
        sq = linalg.mat_mul(pi, pi)
        want = linalg.mat_sub(outer(model.xi[i], model.eta[i]), ident)
        comp += linalg.flatten(linalg.mat_sub(sq, want))
        comp += linalg.mat_vec(pi, model.xi[i])
        pullback = linalg.mat_mul(linalg.mat_mul(linalg.mat_transpose(pi), g), pi)
        want = linalg.mat_sub(g, outer_cov(model.eta[i], model.eta[i]))
        comp += linalg.flatten(linalg.mat_sub(pullback, want))
        for j in range(3):
            val = 0
            for a, b in zip(model.eta[i], model.xi[j]):
                if a and b:
                    val = val + a * b
            comp.append(val - (1 if i == j else 0))
    out["compatibility"] = residual_norm(comp)

    alpha, delta = model.alpha, model.delta
    eq = []
    for i, j, k in EVEN_PERMS:
        lhs = d_eta(model, i)
        rhs = linalg.mat_scale(2 * alpha, fundamental_two_form(model, i))
        rhs = linalg.mat_add(
            rhs,
            linalg.mat_scale(
                2 * (alpha - delta), wedge11(model.eta[j - 1], model.eta[k - 1])
            ),
        )
        eq += linalg.flatten(linalg.mat_sub(lhs, rhs))
    out["structure_equation"] = residual_norm(eq)

    equiv = []
    for h in range(len(model.grading.h_idx)):
        A = model.ad_h_on_m(h)
        for i in range(3):
            equiv += linalg.flatten(linalg.mat_commutator(A, model.phi[i]))
            equiv += linalg.mat_vec(A, model.xi[i])
        equiv += linalg.flatten(
            linalg.mat_add(linalg.mat_mul(linalg.mat_transpose(A), g), linalg.mat_mul(g, A))
        )
    out["isotropy_equivariance"] = residual_norm(equiv)

    reeb = []
    for i, j, k in EVEN_PERMS:
        br = model.bracket_m(model.xi[i - 1], model.xi[j - 1])
        want = linalg.vec_scale(2 * delta, model.xi[k - 1])
        reeb += linalg.vec_sub(br, want)
        hpart = model.bracket_h(model.xi[i - 1], model.xi[j - 1])
        reeb += list(hpart)
    out["reeb_brackets"] = residual_norm(reeb)

    sym = [g[r][c] - g[c][r] for r in range(m) for c in range(r + 1, m)]
    out["metric_symmetry"] = residual_norm(sym)
    return out


def outer_cov(a, b):
    m = len(a)
    return [[a[r] * b[c] for c in range(m)] for r in range(m)]


def metric_posdef(model):
    """Positive definiteness of g by symmetric pivoting (exact on Q2)."""
    m = model.m_dim
    rows = [list(r) for r in model.g]
    scale = model.scale()
    for i in range(m):
        piv = rows[i][i]
        if is_zero(piv, scale=scale) or piv < 0:
            return False
        for r in range(i + 1, m):
            f = rows[r][i]
            if not f:
                continue
            ratio = f / piv
            for c in range(i, m):
                if rows[i][c]:
                    rows[r][c] = rows[r][c] - ratio * rows[i][c]
    return True


def levi_civita_nomizu(model):
    """Nomizu map of the Levi-Civita connection.

    L_x y = 1/2 [x,y]_m + U(x,y) with
    2 g(U(x,y), z) = g([z,x]_m, y) + g(x, [z,y]_m); torsion-free and metric.
    """
    m = model.m_dim
    g = model.g
    ginv = model.g_inv()
    conv = converter(model.backend)
    half = conv(1) / 2
    lam = [linalg.mat_zeros(m) for _ in range(m)]
    for x in range(m):
        for y in range(m):
            rhs = [0] * m
            for z in range(m):
                acc = 0
                for k, v in model.bracket_m_basis(z, x):
                    if g[k][y]:
                        acc = acc + v * g[k][y]
                for k, v in model.bracket_m_basis(z, y):
                    if g[x][k]:
                        acc = acc + v * g[x][k]
                rhs[z] = acc
            u = linalg.mat_vec(ginv, rhs)
            col = [half * t for t in u]
            for k, v in model.bracket_m_basis(x, y):
                col[k] = col[k] + half * v
            for r in range(m):
                if col[r]:
                    lam[x][r][y] = col[r]
    return NomizuMap(lam)


def canonical_torsion(model):
    """Closed-form torsion of the canonical connection.

    T(x,y) = 2a sum_i {eta_i(y) phi_i x - eta_i(x) phi_i y + Phi_i(x,y) xi_i}
             - 2(a-d) sum_{even (ijk)} (eta_i ^ eta_j)(x,y) xi_k.
    """
    m = model.m_dim
    alpha, delta = model.alpha, model.delta
    two_a = 2 * alpha
    Phi = [fundamental_two_form(model, i) for i in (1, 2, 3)]
    vec = [[None] * m for _ in range(m)]
    for x in range(m):
        for y in range(m):
            acc = [0] * m
            for i in range(3):
                eta = model.eta[i]
                phi = model.phi[i]
                if eta[y]:
                    c = two_a * eta[y]
                    for r in range(m):
                        if phi[r][x]:
                            acc[r] = acc[r] + c * phi[r][x]
                if eta[x]:
                    c = two_a * eta[x]
                    for r in range(m):
                        if phi[r][y]:
                            acc[r] = acc[r] - c * phi[r][y]
                pxy = Phi[i][x][y]
                if pxy:
                    c = two_a * pxy
                    for r, t in enumerate(model.xi[i]):
                        if t:
                            acc[r] = acc[r] + c * t
            for i, j, k in EVEN_PERMS:
                ei, ej = model.eta[i - 1], model.eta[j - 1]
                w = ei[x] * ej[y] - ei[y] * ej[x]
                if w:
                    c = 2 * (alpha - delta) * w
                    for r, t in enumerate(model.xi[k - 1]):
                        if t:
                            acc[r] = acc[r] - c * t
            vec[x][y] = acc
    low = _lower_torsion(model, vec)
    return TorsionTensor(vec, low)


def _lower_torsion(model, vec):
    m = model.m_dim
    g = model.g
    low = [[[0] * m for _ in range(m)] for _ in range(m)]
    for x in range(m):
        for y in range(m):
            t = vec[x][y]
            gt = linalg.mat_vec(g, t)
            low[x][y] = gt
    return low


def torsion_of(lam, model):
    """Torsion of a Nomizu map: T(x,y) = L_x y - L_y x - [x,y]_m."""
    m = model.m_dim
    vec = [[None] * m for _ in range(m)]
    for x in range(m):
        for y in range(m):
            t = [lam.lam[x][r][y] - lam.lam[y][r][x] for r in range(m)]
            for k, v in model.bracket_m_basis(x, y):
                t[k] = t[k] - v
            vec[x][y] = t
    return TorsionTensor(vec, _lower_torsion(model, vec))


def canonical_nomizu(model, lc=None, torsion=None):
    """Nomizu map of the canonical connection: Lambda^g + 1/2 T-hat."""
    lc = lc if lc is not None else levi_civita_nomizu(model)
    torsion = torsion if torsion is not None else canonical_torsion(model)
    m = model.m_dim
    ginv = model.g_inv()
    conv = converter(model.backend)
    half = conv(1) / 2
    lam = []
    for x in range(m):
        mat = [list(row) for row in lc.lam[x]]
        for y in range(m):
            that = linalg.mat_vec(ginv, torsion.low[x][y])
            for r in range(m):
                if that[r]:
                    mat[r][y] = mat[r][y] + half * that[r]
        lam.append(mat)
    return NomizuMap(lam)


def canonical_case_residuals(model, lam):
    """Entrywise residuals of the four canonical-connection case formulas."""
    m = model.m_dim
    coef = model.beta / (2 * model.delta)
    out = {}
    vals = []
    for x in model.h_coords():
        for y in model.h_coords():
            col = lam.column(x, y)
            vals += [col[r] for r in model.v_coords()]
    out["hh_stays_horizontal"] = residual_norm(vals)
    vals = []
    for x in model.v_coords():
        for y in model.v_coords():
            col = lam.column(x, y)
            want = [0] * m
            for k, v in model.bracket_m_basis(x, y):
                want[k] = coef * v
            vals += linalg.vec_sub(col, want)
    out["vv_case"] = residual_norm(vals)
    vals = []
    two_a = 2 * model.alpha
    for x in model.v_coords():
        etas = [model.eta[i][x] for i in range(3)]
        for y in model.h_coords():
            col = lam.column(x, y)
            want = [0] * m
            for k, v in model.bracket_m_basis(x, y):
                want[k] = want[k] + v
            for i in range(3):
                if etas[i]:
                    c = two_a * etas[i]
                    for r in range(m):
                        p = model.phi[i][r][y]
                        if p:
                            want[r] = want[r] - c * p
            vals += linalg.vec_sub(col, want)
    out["vh_case"] = residual_norm(vals)
    vals = []
    for x in model.h_coords():
        for y in model.v_coords():
            vals += lam.column(x, y)
    out["hv_case"] = residual_norm(vals)
    return out


def symmetric_nomizu_residuals(model, lam_can, lam_lc):
    """Residuals of the symmetric-base closed forms of both Nomizu maps."""
    m = model.m_dim
    conv = converter(model.backend)
    coef = model.beta / (2 * model.delta)
    vals = []
    for x in model.h_coords():
        vals += linalg.flatten(lam_can.lam[x])
    for x in model.v_coords():
        want = linalg.mat_zeros(m)
        for y in range(m):
            for k, v in model.bracket_m_basis(x, y):
                want[k][y] = coef * v
        vals += linalg.flatten(linalg.mat_sub(lam_can.lam[x], want))
    canonical = residual_norm(vals)

    half = conv(1) / 2
    a_over_d = model.alpha / model.delta
    vals = []
    for x in range(m):
        want = linalg.mat_zeros(m)
        x_vertical = x in model.v_coords()
        for y in range(m):
            y_vertical = y in model.v_coords()
            if x_vertical == y_vertical:
                c = half
            elif x_vertical:
                c = 1 - a_over_d
            else:
                c = a_over_d
            for k, v in model.bracket_m_basis(x, y):
                want[k][y] = c * v
        vals += linalg.flatten(linalg.mat_sub(lam_lc.lam[x], want))
    levi_civita = residual_norm(vals)
    return {"canonical_closed_form": canonical, "levi_civita_closed_form": levi_civita}


def nabla_tensor(lam, tensor, kind):
    """Covariant derivative array of an invariant tensor at the origin.

    kind "endomorphism": (D_x S)(y) = L_x(S y) - S(L_x y);
    kind "metric" (any bilinear form): (D_x S)(y,z) = -S(L_x y, z) - S(y, L_x z);
    kind "three-form": contract L_x into each of the three slots.
    Returns the list over directions x.
    """
    m = len(lam.lam)
    out = []
    for x in range(m):
        L = lam.lam[x]
        if kind == "endomorphism":
            out.append(linalg.mat_commutator(L, tensor))
        elif kind == "metric":
            out.append(
                linalg.mat_scale(
                    -1,
                    linalg.mat_add(
                        linalg.mat_mul(linalg.mat_transpose(L), tensor),
                        linalg.mat_mul(tensor, L),
                    ),
                )
            )
        elif kind == "three-form":
            out.append(_nabla_three_form(L, tensor, m))
        else:
            raise ValueError(f"unknown tensor kind {kind!r}")
    return out


def _nabla_three_form(L, T3, m):
    cols = [[(r, L[r][c]) for r in range(m) if L[r][c]] for c in range(m)]
    out = [[[0] * m for _ in range(m)] for _ in range(m)]
    for y in range(m):
        for z in range(m):
            row = T3[y][z]
            for w in range(m):
                acc = 0
                for r, v in cols[y]:
                    t = T3[r][z][w]
                    if t:
                        acc = acc + v * t
                for r, v in cols[z]:
                    t = T3[y][r][w]
                    if t:
                        acc = acc + v * t
                for r, v in cols[w]:
                    t = row[r]
                    if t:
                        acc = acc + v * t
                if acc:
                    out[y][z][w] = -acc
    return out


def curvature(lam, model):
    """Lowered curvature tensor of the connection with Nomizu map `lam`."""
    m = model.m_dim
    g = model.g
    n_h = len(model.grading.h_idx)
    ad_h = [model.ad_h_on_m(h) for h in range(n_h)]
    pairs = {}
    for x in range(m):
        for y in range(x + 1, m):
            rm = linalg.mat_commutator(lam.lam[x], lam.lam[y])
            for k, v in model.bracket_m_basis(x, y):
                mat = lam.lam[k]
                for r in range(m):
                    row = mat[r]
                    out = rm[r]
                    for c in range(m):
                        if row[c]:
                            out[c] = out[c] - v * row[c]
            for k, v in model.bracket_h_basis(x, y):
                mat = ad_h[k]
                for r in range(m):
                    row = mat[r]
                    out = rm[r]
                    for c in range(m):
                        if row[c]:
                            out[c] = out[c] - v * row[c]
            pairs[(x, y)] = linalg.mat_mul(linalg.mat_transpose(rm), g)
    return CurvatureTensor(m, pairs)


def curvature_sign_calibration(model, R):
    """+1 if R(xi1, xi2, xi1, xi2) matches -4 alpha beta, -1 if negated.

    Returns (sign, note); parallel models (beta = 0) give no information
    and default to +1.
    """
    expect = -4 * model.alpha * model.beta
    got = _eval_r(R, model.xi[0], model.xi[1], model.xi[0], model.xi[1])
    scale = model.scale()
    if is_zero(expect, scale=scale):
        return 1, "indeterminate (parallel model); standard convention kept"
    if is_zero(got - expect, scale=scale):
        return 1, "standard convention"
    if is_zero(got + expect, scale=scale):
        return -1, "flipped convention"
    return 0, f"calibration failed: got {got}, expected {expect}"


def _eval_r(R, a, b, c, d):
    acc = 0
    for x, ax in enumerate(a):
        if not ax:
            continue
        for y, by in enumerate(b):
            if not by or x == y:
                continue
            for z, cz in enumerate(c):
                if not cz:
                    continue
                for w, dw in enumerate(d):
                    if dw:
                        v = R.value(x, y, z, w)
                        if v:
                            acc = acc + ax * by * cz * dw * v
    return acc


def curvature_identity_residuals(model, R, sign=1):
    """Residuals of the canonical-curvature identities.

    mixed_zero: R(X, xi_i, Y, xi_j) = R(X, Y, Z, xi_i) = R(xi_i, xi_j, xi_k, X) = 0;
    vertical_pattern: R(xi_i, xi_j, xi_k, xi_l) = -4 a b (d_ik d_jl - d_il d_jk);
    mixed_pair: R(xi_i, xi_j, X, Y) = 2 a b Phi_k(X, Y);
    polarized: R(X,Y,Z,phi_i Z) + R(X,Y,phi_j Z,phi_k Z) = 2 a b Phi_i(X,Y) |Z|^2.
    """
    m = model.m_dim
    ab4 = -4 * model.alpha * model.beta * sign
    ab2 = 2 * model.alpha * model.beta * sign
    hc = list(model.h_coords())
    vc = list(model.v_coords())
    out = {}

    vals = []
    for x in hc:
        for i in vc:
            for y in hc:
                for j in vc:
                    vals.append(R.value(x, i, y, j))
    for x in hc:
        for y in hc:
            for z in hc:
                for i in vc:
                    vals.append(R.value(x, y, z, i))
    for i in vc:
        for j in vc:
            for k in vc:
                for x in hc:
                    vals.append(R.value(i, j, k, x))
    out["mixed_zero"] = residual_norm(vals)

    # xi_i = delta b_i, so basis values pick up a delta^4 rescaling
    d4 = model.delta ** 4
    vals = []
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for l in range(3):
                    got = R.value(i, j, k, l) * d4
                    want = ab4 * ((1 if i == k and j == l else 0) - (1 if i == l and j == k else 0))
                    vals.append(got - want)
    out["vertical_pattern"] = residual_norm(vals)

    d2 = model.delta * model.delta
    Phi = [fundamental_two_form(model, i) for i in (1, 2, 3)]
    vals = []
    for i, j, k in EVEN_PERMS:
        for x in hc:
            for y in hc:
                got = R.value(i - 1, j - 1, x, y) * d2
                vals.append(got - ab2 * Phi[k - 1][x][y])
    out["mixed_pair"] = residual_norm(vals)

    vals = []
    for i, j, k in EVEN_PERMS:
        pi, pj, pk = model.phi[i - 1], model.phi[j - 1], model.phi[k - 1]
        for z in hc:
            piz = [pi[r][z] for r in range(m)]
            pjz = [pj[r][z] for r in range(m)]
            pkz = [pk[r][z] for r in range(m)]
            ez = [0] * m
            ez[z] = 1
            znorm = model.g[z][z]
            for x in hc:
                for y in hc:
                    if x == y:
                        continue
                    t1 = _eval_r(R, _unit(m, x), _unit(m, y), ez, piz)
                    t2 = _eval_r(R, _unit(m, x), _unit(m, y), pjz, pkz)
                    vals.append(t1 + t2 - ab2 * Phi[i - 1][x][y] * znorm)
    out["polarized"] = residual_norm(vals)
    return out


def _unit(m, x):
    v = [0] * m
    v[x] = 1
    return v


def ricci_scalar(R, model):
    """Ricci matrix Ric(x, y) = sum g^{ab} R(b_a, x, y, b_b) and its g-trace."""
    m = model.m_dim
    ginv = model.g_inv()
    ric = linalg.mat_zeros(m)
    for x in range(m):
        for y in range(m):
            acc = 0
            for a in range(m):
                if a == x:
                    continue
                row = ginv[a]
                for b in range(m):
                    if row[b]:
                        v = R.value(a, x, y, b)
                        if v:
                            acc = acc + row[b] * v
            ric[x][y] = acc
    scal = 0
    for x in range(m):
        for y in range(m):
            if ginv[x][y] and ric[x][y]:
                scal = scal + ginv[x][y] * ric[x][y]
    return ric, scal


def ricci_closed_form_residual(model, ric):
    """Ric = 2a(2d(n+2) - 3a) g + 2(a-d)((2n+3)a - d) g|_V entrywise."""
    m = model.m_dim
    a, d, n = model.alpha, model.delta, model.n
    c_all = 2 * a * (2 * d * (n + 2) - 3 * a)
    c_vert = 2 * (a - d) * ((2 * n + 3) * a - d)
    vals = []
    vset = set(model.v_coords())
    for x in range(m):
        for y in range(m):
            want = c_all * model.g[x][y]
            if x in vset and y in vset:
                want = want + c_vert * model.g[x][y]
            vals.append(ric[x][y] - want)
    return residual_norm(vals)


def oneill_a(model):
    """O'Neill tensor A on H x H: A_x y = -a sum_i Phi_i(x, y) xi_i."""
    m = model.m_dim
    Phi = [fundamental_two_form(model, i) for i in (1, 2, 3)]
    out = {}
    for x in model.h_coords():
        for y in model.h_coords():
            acc = [0] * m
            for i in range(3):
                p = Phi[i][x][y]
                if p:
                    c = -model.alpha * p
                    for r, t in enumerate(model.xi[i]):
                        if t:
                            acc[r] = acc[r] + c * t
            out[(x, y)] = acc
    return out


def oneill_residuals(model, lam_lc, a_tensor=None):
    """A equals the vertical part of Lambda^g on H x H; the T tensor vanishes."""
    a_tensor = a_tensor if a_tensor is not None else oneill_a(model)
    vset = set(model.v_coords())
    vals = []
    for (x, y), avec in a_tensor.items():
        col = lam_lc.column(x, y)
        for r in range(model.m_dim):
            want = avec[r] if r in vset else 0
            have = col[r] if r in vset else 0
            vals.append(have - want)
    cross = residual_norm(vals)
    vals = []
    for x in model.v_coords():
        for y in model.h_coords():
            col = lam_lc.column(x, y)
            vals += [col[r] for r in vset]
        for y in model.v_coords():
            col = lam_lc.column(x, y)
            vals += [col[r] for r in range(model.m_dim) if r not in vset]
    geodesic = residual_norm(vals)
    return {"a_from_levi_civita": cross, "fiber_tensor_zero": geodesic}


def oneill_norm_sum(model, frame=None):
    """sum_{i,j} |A_{e_i} e_j|^2 over an adapted frame (equals 12 n a^2)."""
    frame = frame if frame is not None else adapted_frame(model)
    Phi = [fundamental_two_form(model, i) for i in (1, 2, 3)]
    acc = 0
    for ei in frame:
        for ej in frame:
            for i in range(3):
                val = 0
                for r, a in enumerate(ei):
                    if not a:
                        continue
                    row = Phi[i][r]
                    for s, b in enumerate(ej):
                        if b and row[s]:
                            val = val + a * b * row[s]
                if val:
                    acc = acc + model.alpha * model.alpha * val * val
    return acc


def base_scalar(model, ric=None, frame=None):
    """Base scalar curvature through the submersion identity.

    scal_N = sum_i Ric(e_i, e_i) + 2 sum_{i,j} |A_{e_i} e_j|^2 over an
    adapted frame; the right side must equal 16 n (n+2) alpha delta.
    """
    frame = frame if frame is not None else adapted_frame(model)
    if ric is None:
        lam = levi_civita_nomizu(model)
        R = curvature(lam, model)
        ric, _ = ricci_scalar(R, model)
    acc = 0
    for e in frame:
        acc = acc + linalg.bilinear(ric, e, e)
    return acc + 2 * oneill_norm_sum(model, frame)


def qk_holonomy_check(model, frame=None):
    """Holonomy residual of the symmetric-base curvature against sp(n) + sp(1).

    For each horizontal frame pair the symmetric-space curvature operator
    R_N(x, y) z = -[[x, y], z] must commute with the quaternionic structure
    up to the sp(1) span: [R_N, phi_i] = a phi_j + b phi_k.
    """
    fam = model.provenance.get("family")
    if fam not in SYMMETRIC_FAMILIES + ("aloff-wallach", "su21"):
        raise NotSymmetricBase(f"family {fam!r} has no symmetric base")
    frame = frame if frame is not None else adapted_frame(model)
    n4 = len(frame)
    if n4 == 0:
        return 0
    L = model.algebra
    dim = L.dim
    m_idx = model.m_idx

    def embed(vec):
        out = [0] * dim
        for p, a in enumerate(m_idx):
            if vec[p]:
                out[a] = vec[p]
        return out

    frame_alg = [embed(e) for e in frame]
    # phi in frame coordinates
    phiF = []
    for i in range(3):
        mat = linalg.mat_zeros(n4)
        for b, e in enumerate(frame):
            img = linalg.mat_vec(model.phi[i], e)
            for a, f in enumerate(frame):
                mat[a][b] = linalg.bilinear(model.g, f, img)
        phiF.append(mat)
    n_f = 4 * model.n
    worst = 0
    for a in range(n4):
        for b in range(a + 1, n4):
            xy = L.bracket(frame_alg[a], frame_alg[b])
            # curvature operator on the frame
            M = linalg.mat_zeros(n4)
            for d in range(n4):
                w = L.bracket(xy, frame_alg[d])
                wm = [w[idx] for idx in m_idx]
                for c in range(n4):
                    M[c][d] = -linalg.bilinear(model.g, frame[c], wm)
            for i, j, k in EVEN_PERMS:
                C = linalg.mat_commutator(M, phiF[i - 1])
                rem = C
                for p in (j, k):
                    cp = _frobenius(C, phiF[p - 1])
                    if cp:
                        rem = linalg.mat_sub(
                            rem, linalg.mat_scale(cp / n_f, phiF[p - 1])
                        )
                r = residual_norm(linalg.flatten(rem))
                if r > worst:
                    worst = r
    return worst


def _frobenius(A, B):
    acc = 0
    for ra, rb in zip(A, B):
        for a, b in zip(ra, rb):
            if a and b:
                acc = acc + a * b
    return acc
