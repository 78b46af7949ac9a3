"""Builders for the homogeneous models and the model container.

Two constructions are implemented:

* ``build_symmetric`` assembles the classical families fibering over
  symmetric quaternionic Kaehler bases (Sp, SU and SO rows, compact and
  non-compact), starting from an explicit matrix basis of the compact Lie
  algebra (quaternionic and complex matrices are realified).  The
  non-compact dual is obtained by negating exactly the structure constants
  that pair two horizontal elements into the isotropy-vertical part.

* ``build_alekseevsky`` assembles so(V) + V + R D + W with V = R^{3,q},
  the grading derivation D with eigenvalues (0, 1, 1/2), the spin action
  on the Clifford module W and the bracket [W, W] given by the solved
  equivariant map; requires alpha*delta < 0.

Basis order is always: vertical sigma_1..sigma_3, then the horizontal
part in quaternionic quadruples, then the isotropy algebra, so that the
reductive complement occupies the leading coordinates.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .clifford import build_even_clifford, sigma_two_form, solve_equivariant_pi, spin_lift, b_form
from .errors import (
    FrameConstructionFailed,
    InvalidDeformationParameters,
    ParameterSignMismatch,
    SingularMetric,
    UnsupportedSignature,
)
from .liealg import Grading, LieAlgebra, from_matrix_basis
from .scalars import EXACT, converter, format_scalar, is_zero, residual_norm, scalar_sqrt
from .t1_matrices import T1_MATRICES

SYMMETRIC_FAMILIES = ("sp", "su", "so")

# sign of the permutation (i j k) of (1 2 3) determined by its first two entries
_EVEN = {(1, 2), (2, 3), (3, 1)}


def perm_sign(i, j):
    if i == j:
        raise ValueError("degenerate permutation")
    return 1 if (i, j) in _EVEN else -1


def third_index(i, j):
    return 6 - i - j


class SasakiModel:
    """A Lie algebra with reductive grading and the full invariant structure.

    Tensors live on the reductive complement m (dimension 4n + 3) whose
    coordinates are the leading algebra indices: three Reeb vectors xi_i,
    their dual 1-forms eta_i, the endomorphisms phi_i and the metric g.
    Instances are immutable by convention; geometry operates on them purely.
    """

    def __init__(self, algebra, grading, backend, alpha, delta, xi, phi, g, provenance):
        self.algebra = algebra
        self.grading = grading
        self.backend = backend
        self.alpha = alpha
        self.delta = delta
        self.xi = xi
        self.phi = phi
        self.g = g
        self.eta = [linalg.mat_vec(g, x) for x in xi]
        self.provenance = dict(provenance)
        self._g_inv = None
        self._mtab = None

    # -- structure ---------------------------------------------------------
    @property
    def n(self):
        return self.grading.n

    @property
    def m_dim(self):
        return 4 * self.n + 3

    @property
    def beta(self):
        return 2 * (self.delta - 2 * self.alpha)

    @property
    def m_idx(self):
        return self.grading.m_idx

    def _tables(self):
        # sparse bracket tables restricted to m: m-part and h-part separately
        if self._mtab is None:
            m_idx = self.m_idx
            pos = {a: p for p, a in enumerate(m_idx)}
            hpos = {a: p for p, a in enumerate(self.grading.h_idx)}
            mtab = {}
            for i in range(len(m_idx)):
                for j in range(i + 1, len(m_idx)):
                    mpart, hpart = [], []
                    for k, v in self.algebra.bracket_basis(m_idx[i], m_idx[j]):
                        if k in pos:
                            mpart.append((pos[k], v))
                        else:
                            hpart.append((hpos[k], v))
                    if mpart or hpart:
                        mtab[(i, j)] = (tuple(mpart), tuple(hpart))
            self._mtab = mtab
        return self._mtab

    def bracket_m_basis(self, i, j):
        """m-part of [b_i, b_j] for m-coordinates i, j, as sparse (k, v)."""
        if i == j:
            return ()
        if i < j:
            return self._tables().get((i, j), ((), ()))[0]
        return tuple((k, -v) for k, v in self._tables().get((j, i), ((), ()))[0])

    def bracket_h_basis(self, i, j):
        """Isotropy part of [b_i, b_j], sparse over h-coordinates."""
        if i == j:
            return ()
        if i < j:
            return self._tables().get((i, j), ((), ()))[1]
        return tuple((k, -v) for k, v in self._tables().get((j, i), ((), ()))[1])

    def bracket_m(self, x, y):
        """m-projection of [x, y] for m-coordinate vectors."""
        out = [0] * self.m_dim
        for (i, j), (mpart, _) in self._tables().items():
            coef = x[i] * y[j] - x[j] * y[i]
            if not coef:
                continue
            for k, v in mpart:
                out[k] = out[k] + coef * v
        return out

    def bracket_h(self, x, y):
        """Isotropy projection of [x, y] over h-coordinates."""
        out = [0] * len(self.grading.h_idx)
        for (i, j), (_, hpart) in self._tables().items():
            coef = x[i] * y[j] - x[j] * y[i]
            if not coef:
                continue
            for k, v in hpart:
                out[k] = out[k] + coef * v
        return out

    def ad_h_on_m(self, h_coord):
        """Matrix on m of the isotropy basis element with h-coordinate h_coord."""
        a = self.grading.h_idx[h_coord]
        pos = {idx: p for p, idx in enumerate(self.m_idx)}
        out = linalg.mat_zeros(self.m_dim)
        for j, bj in enumerate(self.m_idx):
            for k, v in self.algebra.bracket_basis(a, bj):
                if k in pos:
                    out[pos[k]][j] = v
        return out

    def g_inv(self):
        if self._g_inv is None:
            inv = linalg.mat_inverse(self.g)
            if inv is None:
                raise SingularMetric("model metric is not invertible")
            self._g_inv = inv
        return self._g_inv

    def scale(self):
        """Magnitude estimate used for float-backend zero tests."""
        vals = [abs(float(self.alpha)), abs(float(self.delta)), self.algebra.scale()]
        vals.append(max((abs(float(x)) for row in self.g for x in row), default=1.0))
        return max(vals + [1.0])

    def v_coords(self):
        return range(3)

    def h_coords(self):
        return range(3, self.m_dim)


# -- symmetric-base families ------------------------------------------------


def _quat_left(a, b, c, d):
    return [

        [a, -b, -c, -d],
        [b, a, -d, c],
        [c, d, a, -b],
        [d, -c, b, a],
    ]


def _quat_matrix(size, entries):
    """Realified quaternionic matrix: entries maps (r, c) -> (a, b, c, d)."""
    out = [[0] * (4 * size) for _ in range(4 * size)]
    for (r, c), quat in entries.items():
        block = _quat_left(*quat)
        for i in range(4):
            for j in range(4):
                out[4 * r + i][4 * c + j] = block[i][j]
    return out


def _complex_matrix(size, entries):
    """Realified complex matrix: entries maps (r, c) -> (re, im)."""
    out = [[0] * (2 * size) for _ in range(2 * size)]
    for (r, c), (re_, im) in entries.items():
        out[2 * r][2 * c] = re_
        out[2 * r][2 * c + 1] = -im
        out[2 * r + 1][2 * c] = im
        out[2 * r + 1][2 * c + 1] = re_
    return out


def _antisym(size, pairs):
    """Real antisymmetric matrix with A[a][b] = v, A[b][a] = -v for (a, b, v)."""
    out = [[0] * size for _ in range(size)]
    for a, b, v in pairs:
        out[a][b] = v
        out[b][a] = -v
    return out


_I, _J, _K = (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
_ONE = (1, 0, 0, 0)


def _conj(q):
    return (q[0], -q[1], -q[2], -q[3])


def _neg(q):
    return tuple(-x for x in q)


def _sp_basis(n):
    size = n + 1
    mats, labels = [], []
    for name, unit in (("sigma1", _I), ("sigma2", _J), ("sigma3", _K)):
        mats.append(_quat_matrix(size, {(0, 0): unit}))
        labels.append(name)
    for a in range(1, size):
        for uname, unit in (("1", _ONE), ("i", _I), ("j", _J), ("k", _K)):
            mats.append(_quat_matrix(size, {(0, a): unit, (a, 0): _neg(_conj(unit))}))
            labels.append(f"x{a}{uname}")
    n_h = 0
    for a in range(1, size):
        for uname, unit in (("i", _I), ("j", _J), ("k", _K)):
            mats.append(_quat_matrix(size, {(a, a): unit}))
            labels.append(f"h{n_h}")
            n_h += 1
    for a in range(1, size):
        for b in range(a + 1, size):
            for uname, unit in (("1", _ONE), ("i", _I), ("j", _J), ("k", _K)):
                mats.append(_quat_matrix(size, {(a, b): unit, (b, a): _neg(_conj(unit))}))
                labels.append(f"h{n_h}")
                n_h += 1
    return mats, labels


def _su_basis(n):
    size = n + 2
    mats, labels = [], []
    mats.append(_complex_matrix(size, {(0, 0): (0, 1), (1, 1): (0, -1)}))
    mats.append(_complex_matrix(size, {(0, 1): (-1, 0), (1, 0): (1, 0)}))
    mats.append(_complex_matrix(size, {(0, 1): (0, -1), (1, 0): (0, -1)}))
    labels += ["sigma1", "sigma2", "sigma3"]
    for b in range(2, size):
        quad = [
            {(0, b): (1, 0), (b, 0): (-1, 0)},
            {(0, b): (0, 1), (b, 0): (0, 1)},
            {(1, b): (1, 0), (b, 1): (-1, 0)},
            {(1, b): (0, -1), (b, 1): (0, -1)},
        ]
        for t, ent in enumerate(quad, start=1):
            mats.append(_complex_matrix(size, ent))
            labels.append(f"x{b - 1}e{t}")
    # isotropy: central element plus su(n) in the lower block
    center = {(0, 0): (0, -n), (1, 1): (0, -n)}
    for b in range(2, size):
        center[(b, b)] = (0, 2)
    mats.append(_complex_matrix(size, center))
    labels.append("h0")
    n_h = 1
    for b in range(2, size - 1):
        mats.append(_complex_matrix(size, {(b, b): (0, 1), (b + 1, b + 1): (0, -1)}))
        labels.append(f"h{n_h}")
        n_h += 1
    for b in range(2, size):
        for c in range(b + 1, size):
            mats.append(_complex_matrix(size, {(b, c): (1, 0), (c, b): (-1, 0)}))
            labels.append(f"h{n_h}")
            n_h += 1
            mats.append(_complex_matrix(size, {(b, c): (0, 1), (c, b): (0, 1)}))
            labels.append(f"h{n_h}")
            n_h += 1
    return mats, labels


def _so_basis(n):
    size = n + 4
    u = [n, n + 1, n + 2, n + 3]
    mats, labels = [], []
    mats.append(_antisym(size, [(u[1], u[0], 1), (u[3], u[2], 1)]))
    mats.append(_antisym(size, [(u[2], u[0], 1), (u[1], u[3], 1)]))
    mats.append(_antisym(size, [(u[3], u[0], 1), (u[2], u[1], 1)]))
    labels += ["sigma1", "sigma2", "sigma3"]
    for a in range(n):
        for p in range(4):
            mats.append(_antisym(size, [(a, u[p], 1)]))
            labels.append(f"x{a + 1}u{p + 1}")
    n_h = 0
    for a in range(n):
        for b in range(a + 1, n):
            mats.append(_antisym(size, [(a, b, 1)]))
            labels.append(f"h{n_h}")
            n_h += 1
    # anti-self-dual factor commuting with the sigma's
    mats.append(_antisym(size, [(u[0], u[1], 1), (u[2], u[3], -1)]))
    mats.append(_antisym(size, [(u[0], u[2], 1), (u[1], u[3], 1)]))
    mats.append(_antisym(size, [(u[0], u[3], 1), (u[1], u[2], -1)]))
    labels += [f"h{n_h}", f"h{n_h + 1}", f"h{n_h + 2}"]
    return mats, labels


_FAMILY_BASES = {"sp": _sp_basis, "su": _su_basis, "so": _so_basis}
_FAMILY_MIN_N = {"sp": 0, "su": 1, "so": 3}


def _flip_noncompact(L, grading):
    """Structure constants of the dual algebra: negate H x H -> h + V parts."""
    hh = set(grading.hh_idx)
    keep = set(grading.h_idx) | set(grading.v_idx)
    entries = []
    for i, j, k, v in L.entries:
        if i in hh and j in hh and k in keep:
            v = -v
        entries.append((i, j, k, v))
    return LieAlgebra(L.dim, L.labels, entries)


def _check_parameters(alpha, delta, want_positive, what):
    if not alpha or not delta:
        raise ParameterSignMismatch(f"{what} requires alpha != 0 and delta != 0")
    prod = alpha * delta
    if want_positive and not prod > 0:
        raise ParameterSignMismatch(f"{what} requires alpha*delta > 0")
    if not want_positive and not prod < 0:
        raise ParameterSignMismatch(f"{what} requires alpha*delta < 0")


def _symmetric_tensors(L, grading, alpha, delta, backend):
    """xi, phi, g for a symmetric-base algebra with leading m coordinates."""
    conv = converter(backend)
    n = grading.n
    m_dim = 4 * n + 3
    kappa = L.killing_form()
    norm_v = conv(Fraction(1)) / (4 * delta * delta * (n + 2))
    norm_h = conv(Fraction(1)) / (8 * alpha * delta * (n + 2))
    g = linalg.mat_zeros(m_dim)
    for i in range(3):
        for j in range(3):
            g[i][j] = -norm_v * conv(kappa[grading.v_idx[i]][grading.v_idx[j]])
    for i in range(4 * n):
        for j in range(4 * n):
            gi, gj = grading.hh_idx[i], grading.hh_idx[j]
            g[3 + i][3 + j] = -norm_h * conv(kappa[gi][gj])
    xi = []
    for i in range(3):
        v = [conv(0)] * m_dim
        v[i] = delta
        xi.append(v)
    pos = {a: p for p, a in enumerate(grading.m_idx)}
    phi = []
    half = conv(Fraction(1, 2))
    for i in range(3):
        mat = linalg.mat_zeros(m_dim)
        sig = grading.v_idx[i]
        for j, bj in enumerate(grading.m_idx):
            factor = half if j < 3 else 1
            for k, v in L.bracket_basis(sig, bj):
                mat[pos[k]][j] = factor * conv(v)
        phi.append(mat)
    return xi, phi, g


def build_symmetric(family, n, variant, alpha, delta, backend=EXACT):
    """Model over a symmetric base: families sp / su / so, compact or not.

    Requires alpha*delta > 0 for the compact form and < 0 for the
    non-compact dual; n >= 0 / 1 / 3 respectively.
    """
    family = family.lower()
    if family not in _FAMILY_BASES:
        raise UnsupportedSignature(f"unknown symmetric family {family!r}")
    if variant not in ("compact", "noncompact"):
        raise ParameterSignMismatch(f"unknown variant {variant!r}")
    if n < _FAMILY_MIN_N[family]:
        raise ParameterSignMismatch(
            f"family {family} needs n >= {_FAMILY_MIN_N[family]}"
        )
    conv = converter(backend)
    alpha, delta = conv(alpha), conv(delta)
    _check_parameters(alpha, delta, variant == "compact", f"{family} {variant}")
    raw_mats, labels = _FAMILY_BASES[family](n)
    mats = [[[conv(x) for x in row] for row in m] for m in raw_mats]
    L = from_matrix_basis(mats, labels)
    m_dim = 4 * n + 3
    grading = Grading(
        h_idx=tuple(range(m_dim, L.dim)),
        v_idx=(0, 1, 2),
        hh_idx=tuple(range(3, m_dim)),
    )
    if variant == "noncompact":
        L = _flip_noncompact(L, grading)
    xi, phi, g = _symmetric_tensors(L, grading, alpha, delta, backend)
    provenance = {
        "family": family,
        "n": n,
        "variant": variant,
        "alpha": format_scalar(alpha),
        "delta": format_scalar(delta),
    }
    return SasakiModel(L, grading, backend, alpha, delta, xi, phi, g, provenance)


# -- Alekseevsky-base families ----------------------------------------------


def _alekseevsky_labels(q, l):
    labels = ["sigma1", "sigma2", "sigma3", "2D", "s1", "s2", "s3"]
    for t in range(1, q + 1):
        labels.append(f"e{t}")
        labels += [f"f{i}{t}" for i in (1, 2, 3)]
    if l:
        labels += ["E1", "E2", "E3", "E4"]
    for a in range(1, q + 1):
        for b in range(a + 1, q + 1):
            labels.append(f"h{a}{b}")
    return labels


def build_alekseevsky(q, l, alpha, delta, backend=EXACT):
    """Model over an Alekseevsky base: g = so(3,q) + R^{3,q} + R D + W.

    q in {0, 1, 2} fixes the signature, l in {0, 1} the number of module
    summands; requires alpha*delta < 0.
    """
    if q not in (0, 1, 2):
        raise UnsupportedSignature(f"q = {q} not supported (need 0, 1 or 2)")
    if l not in (0, 1):
        raise UnsupportedSignature(f"l = {l} not supported (need 0 or 1)")
    conv = converter(backend)
    alpha, delta = conv(alpha), conv(delta)
    _check_parameters(alpha, delta, False, "alekseevsky family")
    rep = build_even_clifford(q, backend)
    pi = solve_equivariant_pi(rep) if l else None

    nV = 3 + q
    dim_r = nV + 1 + 4 * l
    d_col = nV

    def empty():
        return linalg.mat_zeros(dim_r)

    def so_element(coeffs):
        out = empty()
        for (a, b), cval in coeffs.items():
            m = rep.so_matrix(a, b)
            for r in range(nV):
                for c in range(nV):
                    if m[r][c]:
                        out[r][c] = out[r][c] + cval * m[r][c]
        if l:
            s = spin_lift(rep, coeffs)
            for r in range(4):
                for c in range(4):
                    out[nV + 1 + r][nV + 1 + c] = s[r][c]
        return out

    def v_element(coeffs):
        out = empty()
        for r in range(nV):
            if coeffs[r]:
                out[r][d_col] = -coeffs[r]
        return out

    mats = []
    # vertical sigma_i
    for i in (1, 2, 3):
        mats.append(so_element(sigma_two_form(i)))
    # H0: 2D and s_i = eh_i + sigma_i
    two_d = empty()
    for r in range(nV):
        two_d[r][r] = 2
    for r in range(4 * l):
        two_d[nV + 1 + r][nV + 1 + r] = 1
    mats.append(two_d)
    for i in (1, 2, 3):
        s = so_element(sigma_two_form(i))
        unit = [0] * nV
        unit[i - 1] = 1
        v = v_element(unit)
        mats.append(linalg.mat_add(s, v))
    # H1 quadruples: e_l then f_{i,l} = 2 eh_i ^ e_l
    for t in range(q):
        unit = [0] * nV
        unit[3 + t] = 1
        mats.append(v_element(unit))
        for i in range(3):
            mats.append(so_element({(i, 3 + t): 2}))
    # W basis; the bracket on W is -Pi, the sign that closes the structure
    # equation against the positive-definite invariant form (the +Pi algebra
    # is isomorphic via negating V).
    if l:
        half = Fraction(1, 2) if backend == EXACT else 0.5
        for r in range(4):
            w = empty()
            w[nV + 1 + r][d_col] = -conv(half)
            for s in range(4):
                comp = pi.coeff[r][s]
                for v in range(nV):
                    if comp[v]:
                        w[v][nV + 1 + s] = -comp[v]
            mats.append(w)
    # isotropy so(q)
    for a in range(q):
        for b in range(a + 1, q):
            mats.append(so_element({(3 + a, 3 + b): 2}))

    labels = _alekseevsky_labels(q, l)
    mats = [[[conv(x) for x in row] for row in m] for m in mats]
    L = from_matrix_basis(mats, labels)

    m_dim = 7 + 4 * q + 4 * l
    sub = {"h0": tuple(range(3, 7))}
    sub["h1"] = tuple(range(7, 7 + 4 * q))
    if l:
        sub["w"] = tuple(range(7 + 4 * q, m_dim))
    grading = Grading(
        h_idx=tuple(range(m_dim, L.dim)),
        v_idx=(0, 1, 2),
        hh_idx=tuple(range(3, m_dim)),
        sub=sub,
    )

    # tensors
    one = conv(1)
    g = linalg.mat_zeros(m_dim)
    inv_d2 = one / (delta * delta)
    inv_ad = -one / (alpha * delta)
    for i in range(3):
        g[i][i] = inv_d2
    for i in range(3, 7 + 4 * q):
        g[i][i] = inv_ad
    if l:
        bmat = b_form(rep, pi)
        w0 = 7 + 4 * q
        coef = -one / (2 * alpha * delta)
        for r in range(4):
            for s in range(4):
                if bmat[r][s]:
                    g[w0 + r][w0 + s] = coef * conv(bmat[r][s])
    xi = []
    for i in range(3):
        v = [conv(0)] * m_dim
        v[i] = delta
        xi.append(v)
    phi = [linalg.mat_zeros(m_dim) for _ in range(3)]
    for i in (1, 2, 3):
        mat = phi[i - 1]
        for j in (1, 2, 3):
            if j != i:
                k = third_index(i, j)
                mat[k - 1][j - 1] = perm_sign(i, j) * one
        # H0: phi_i(2D) = s_i, phi_i(s_i) = -2D, phi_i(s_j) = +/- s_k
        mat[3 + i][3] = one
        mat[3][3 + i] = -one
        for j in (1, 2, 3):
            if j != i:
                k = third_index(i, j)
                mat[3 + k][3 + j] = perm_sign(i, j) * one
        # H1: phi_i(e_l) = f_{i,l}, phi_i(f_{i,l}) = -e_l, phi_i(f_{j,l}) = +/- f_{k,l}
        for t in range(q):
            base = 7 + 4 * t
            mat[base + i][base] = one
            mat[base][base + i] = -one
            for j in (1, 2, 3):
                if j != i:
                    k = third_index(i, j)
                    mat[base + k][base + j] = perm_sign(i, j) * one
        if l:
            w0 = 7 + 4 * q
            s = spin_lift(rep, sigma_two_form(i))
            for r in range(4):
                for c in range(4):
                    if s[r][c]:
                        mat[w0 + r][w0 + c] = conv(s[r][c])
    provenance = {
        "family": "alekseevsky",
        "q": q,
        "l": l,
        "alpha": format_scalar(alpha),
        "delta": format_scalar(delta),
    }
    return SasakiModel(L, grading, backend, alpha, delta, xi, phi, g, provenance)


# -- explicit low-dimensional examples ---------------------------------------


def _su3_example_basis():
    """sigma_i, the four horizontal generators and h for the su(3) picture."""
    mats, labels = _su_basis(1)
    return mats, labels


def rescale_basis(L, factors):
    """New algebra for the basis b_i' = factors[i] * b_i."""
    entries = []
    for i, j, k, v in L.entries:
        entries.append((i, j, k, v * factors[i] * factors[j] / factors[k]))
    realization = None
    if L.realization is not None:
        realization = [
            linalg.mat_scale(factors[i], L.realization[i]) for i in range(L.dim)
        ]
    return LieAlgebra(L.dim, L.labels, entries, realization)


def example_model(name, alpha, delta, backend=EXACT):
    """The explicit 7-dimensional su(3)-based models with orthonormal frame.

    "aloff-wallach" is the compact model (alpha*delta > 0), "su21" its
    non-compact dual (alpha*delta < 0); both carry the horizontal basis
    rescaled by sqrt(+/- 2 alpha delta) so the frame is orthonormal.
    """
    if name not in ("aloff-wallach", "su21"):
        raise UnsupportedSignature(f"unknown example {name!r}")
    conv = converter(backend)
    alpha, delta = conv(alpha), conv(delta)
    compact = name == "aloff-wallach"
    _check_parameters(alpha, delta, compact, name)
    raw_mats, labels = _su3_example_basis()
    labels = ["sigma1", "sigma2", "sigma3", "e1", "e2", "e3", "e4", "h"]
    mats = [[[conv(x) for x in row] for row in m] for m in raw_mats]
    L = from_matrix_basis(mats, labels)
    grading = Grading(h_idx=(7,), v_idx=(0, 1, 2), hh_idx=(3, 4, 5, 6))
    if not compact:
        L = _flip_noncompact(L, grading)
    two_ad = 2 * alpha * delta
    s = scalar_sqrt(two_ad if compact else -two_ad)
    factors = [conv(1)] * 3 + [s] * 4 + [conv(1)]
    L = rescale_basis(L, factors)
    xi, phi, g = _symmetric_tensors(L, grading, alpha, delta, backend)
    provenance = {
        "family": name,
        "n": 1,
        "variant": "compact" if compact else "noncompact",
        "alpha": format_scalar(alpha),
        "delta": format_scalar(delta),
    }
    return SasakiModel(L, grading, backend, alpha, delta, xi, phi, g, provenance)


def t1_matrix_oracle():
    """Labeled 10x10 matrices generating the dim-19 model's algebra.

    Returns (matrices, labels) acting on the basis eh1..eh3, e1, e2, D,
    E1..E4; `from_matrix_basis` on them reproduces build_alekseevsky(2, 1)
    under the documented basis identification.
    """
    labels = [name for name, _ in T1_MATRICES]
    mats = [[list(row) for row in mat] for _, mat in T1_MATRICES]
    return mats, labels


def t1_identification(model):
    """Images of the oracle basis in model coordinates for the q=2, l=1 model.

    The map sends 2eh_i^eh_j to -sigma_k, negates the translation part
    (eh_i to sigma_i - s_i, e_l to -e_l, absorbing the [W, W] = -Pi sign),
    sends 2E_r to 2 E_r and is the identity on 2D, 2eh_i^e_l and 2e1^e2.
    """
    dim = model.algebra.dim
    lab = {name: i for i, name in enumerate(model.algebra.labels)}

    def unit(name, coef=1):
        v = [0] * dim
        v[lab[name]] = coef
        return v

    images = {}
    images["2eh1^eh2"] = unit("sigma3", -1)
    images["2eh3^eh1"] = unit("sigma2", -1)
    images["2eh2^eh3"] = unit("sigma1", -1)
    for i in (1, 2, 3):
        for t in (1, 2):
            images[f"2eh{i}^e{t}"] = unit(f"f{i}{t}")
    images["2e1^e2"] = unit("h12")
    images["2D"] = unit("2D")
    for i in (1, 2, 3):
        v = unit(f"s{i}", -1)
        v[lab[f"sigma{i}"]] = 1
        images[f"eh{i}"] = v
    for t in (1, 2):
        images[f"e{t}"] = unit(f"e{t}", -1)
    for r in (1, 2, 3, 4):
        images[f"2E{r}"] = unit(f"E{r}", 2)
    return images


# -- deformations and frames --------------------------------------------------


def h_deform(model, a, b, c):
    """Homothetic rescaling: g' = a g + b sum eta_i x eta_i, eta' = c eta.

    Maps the parameters to (alpha c / a, delta / c); requires a > 0 and
    c^2 = a + b (c of either sign, nonzero).
    """
    conv = converter(model.backend)
    a, b, c = conv(a), conv(b), conv(c)
    scale = max(model.scale(), abs(float(a)) + abs(float(b)) + abs(float(c)))
    if not a > 0:
        raise InvalidDeformationParameters("need a > 0")
    if not c or not is_zero(c * c - (a + b), scale=scale):
        raise InvalidDeformationParameters("need c nonzero with c^2 = a + b")
    m_dim = model.m_dim
    g = linalg.mat_scale(a, model.g)
    for i in range(3):
        eta = model.eta[i]
        for r in range(m_dim):
            if not eta[r]:
                continue
            for s in range(m_dim):
                if eta[s]:
                    g[r][s] = g[r][s] + b * eta[r] * eta[s]
    xi = [[x / c for x in v] for v in model.xi]
    alpha = model.alpha * c / a
    delta = model.delta / c
    provenance = dict(model.provenance)
    chain = list(provenance.get("deformations", ()))
    chain.append([format_scalar(a), format_scalar(b), format_scalar(c)])
    provenance["deformations"] = chain
    provenance["alpha"] = format_scalar(alpha)
    provenance["delta"] = format_scalar(delta)
    return SasakiModel(
        model.algebra,
        model.grading,
        model.backend,
        alpha,
        delta,
        xi,
        [linalg.mat_scale(1, p) for p in model.phi],
        g,
        provenance,
    )


def adapted_frame(model):
    """g-orthonormal basis of H arranged in quadruples (e, phi_1 e, phi_2 e, phi_3 e)."""
    n4 = 4 * model.n
    if n4 == 0:
        return []
    g = model.g
    scale = model.scale()
    frame = []
    for h in model.h_coords():
        if len(frame) == n4:
            break
        cand = [0] * model.m_dim
        cand[h] = 1
        w = cand
        for f in frame:
            coef = linalg.bilinear(g, w, f)
            if coef:
                w = [wx - coef * fx for wx, fx in zip(w, f)]
        norm2 = linalg.bilinear(g, w, w)
        if is_zero(norm2, scale=scale):
            continue
        if norm2 < 0:
            raise FrameConstructionFailed("metric not positive on H")
        s = scalar_sqrt(norm2)
        e = [x / s for x in w]
        frame.append(e)
        for i in range(3):
            frame.append(linalg.mat_vec(model.phi[i], e))
    if len(frame) != n4:
        raise FrameConstructionFailed(
            f"found {len(frame)} frame vectors, expected {n4}"
        )
    gram = linalg.gram_matrix(g, frame)
    resid = residual_norm(
        [gram[i][j] - (1 if i == j else 0) for i in range(n4) for j in range(n4)]
    )
    if not is_zero(resid, scale=scale):
        raise FrameConstructionFailed(f"frame not orthonormal (residual {resid})")
    return frame
