"""Even Clifford algebra representations Cl^0(3,q) for q in {0, 1, 2}.

The module W is 4-dimensional for every supported q.  Generators of the
quadratic space R^{3,q} are indexed 0, 1, 2 (positive, written eh1..eh3)
followed by 3..2+q (negative, written e1..eq); the Clifford convention is
v.v = -<v,v>, which is the one the stored degree-2 matrices satisfy.

The spin map identifies so(3,q) with the degree-2 part via
u ^ v -> -1/2 uv, and the bracket on so(3,q) comes from the action
(u ^ v) x = <v,x> u - <u,x> v on R^{3,q}.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import (
    DimensionMismatch,
    NoNondegenerateSolution,
    PermutationMismatch,
    UnsupportedSignature,
)
from .scalars import EXACT, converter, is_zero, residual_norm

W_DIM = 4

# Quaternion left multiplication on (1, i, j, k).
_L_I = [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
_L_J = [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]
_L_K = [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]


def _realify2(cm):
    """Realify a 2x2 complex matrix of (re, im) pairs on the basis (1, i) per coordinate."""
    out = [[0] * 4 for _ in range(4)]
    for r in range(2):
        for c in range(2):
            re_, im = cm[r][c]
            out[2 * r][2 * c] = re_
            out[2 * r][2 * c + 1] = -im
            out[2 * r + 1][2 * c] = im
            out[2 * r + 1][2 * c + 1] = re_
    return out


# Degree-2 generator products, keyed by ordered index pairs (a, b), a < b.
_TABLES = {
    0: {
        (0, 1): _L_I,
        (1, 2): _L_J,
        (0, 2): [[-x for x in row] for row in _L_K],  # e_{3^ 1^} = k, stored as (0,2) = -k
    },
    1: {
        (0, 1): _realify2([[(0, 1), (0, 0)], [(0, 0), (0, -1)]]),
        (1, 2): _realify2([[(0, 0), (0, 1)], [(0, 1), (0, 0)]]),
        (0, 2): _realify2([[(0, 0), (1, 0)], [(-1, 0), (0, 0)]]),  # -e_{3^ 1^}
        (2, 3): _realify2([[(1, 0), (0, 0)], [(0, 0), (-1, 0)]]),
        (0, 3): _realify2([[(0, 0), (1, 0)], [(1, 0), (0, 0)]]),
        (1, 3): _realify2([[(0, 0), (0, 1)], [(0, -1), (0, 0)]]),
    },
    2: {
        (0, 1): [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]],
        (1, 2): [[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]],
        (0, 2): [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]],  # -e_{3^ 1^}
        (3, 4): [[0, 0, 1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, 1, 0, 0]],
        (2, 3): [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]],
        (0, 3): [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]],
        (1, 3): [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]],
        (2, 4): [[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]],
        (0, 4): [[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]],
        (1, 4): [[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]],
    },
}


class CliffordRep:
    """Images of the degree-2 Clifford elements on the module W.

    gen2(a, b) is the matrix of e_a e_b; the ordered-pair antisymmetry
    gen2(b, a) = -gen2(a, b) is built in.  Immutable after construction.
    """

    def __init__(self, q, backend=EXACT):
        if q not in _TABLES:
            raise UnsupportedSignature(f"Cl^0(3,{q}) is not supported (q in 0..2)")
        conv = converter(backend)
        self.q = q
        self.backend = backend
        self.w_dim = W_DIM
        self.n_gen = 3 + q
        self.signature = [1] * 3 + [-1] * q
        self._gen2 = {
            pair: [[conv(x) for x in row] for row in mat]
            for pair, mat in _TABLES[q].items()
        }

    def pairs(self):
        """Ordered generator pairs (a, b) with a < b."""
        return sorted(self._gen2)

    def gen2(self, a, b):
        if a == b or not (0 <= a < self.n_gen and 0 <= b < self.n_gen):
            raise DimensionMismatch(f"bad generator pair ({a}, {b})")
        if a < b:
            return self._gen2[(a, b)]
        return linalg.mat_scale(-1, self._gen2[(b, a)])

    def so_matrix(self, a, b):
        """Matrix of e_a ^ e_b acting on R^{3,q}: x -> <e_b,x> e_a - <e_a,x> e_b."""
        n = self.n_gen
        out = linalg.mat_zeros(n)
        out[a][b] = self.signature[b]
        out[b][a] = -self.signature[a]
        return out

    def so_bracket_matrix(self, coeffs_x, coeffs_y):
        """so(3,q) commutator of two 2-vectors given by pair-coefficient dicts."""
        mx = self._two_form_matrix(coeffs_x)
        my = self._two_form_matrix(coeffs_y)
        return linalg.mat_commutator(mx, my)

    def _two_form_matrix(self, coeffs):
        out = linalg.mat_zeros(self.n_gen)
        for (a, b), c in coeffs.items():
            m = self.so_matrix(a, b)
            out = linalg.mat_add(out, linalg.mat_scale(c, m))
        return out

    def scale(self):
        return 1.0


def build_even_clifford(q, backend=EXACT):
    """Representation of Cl^0(3,q) on W = R^4 for q in {0, 1, 2}."""
    return CliffordRep(q, backend)


def spin_lift(rep, two_form):
    """Image on W of an so(3,q) element under u ^ v -> -1/2 uv.

    `two_form` is a dict mapping ordered generator pairs (a, b) to
    coefficients (a 2-vector expanded in the e_a ^ e_b basis).
    """
    out = linalg.mat_zeros(rep.w_dim)
    half = -0.5 if rep.backend != EXACT else -Fraction(1, 2)
    for (a, b), c in two_form.items():
        if a == b:
            raise DimensionMismatch(f"diagonal 2-vector index ({a},{a})")
        out = linalg.mat_add(out, linalg.mat_scale(half * c, rep.gen2(a, b)))
    return out


def sigma_two_form(i):
    """The 2-vector sigma_i = 2 e_k^ ^ e_j^ for the even permutation (i j k)."""
    j, k = {1: (2, 3), 2: (3, 1), 3: (1, 2)}[i]
    a, b = k - 1, j - 1  # 0-based generator indices of e_k^, e_j^
    if a < b:
        return {(a, b): 2}
    return {(b, a): -2}


class PiMap:
    """Antisymmetric bilinear map W x W -> R^{3,q} given by coefficients.

    coeff[r][s] is the list of V-components of Pi(E_r, E_s).
    """

    def __init__(self, rep, coeff):
        self.rep = rep
        self.coeff = coeff

    def value(self, r, s):
        return list(self.coeff[r][s])

    def apply(self, w1, w2):
        """Pi on coordinate vectors of W."""
        n = self.rep.n_gen
        out = [0] * n
        for r, a in enumerate(w1):
            if not a:
                continue
            for s, b in enumerate(w2):
                if not b:
                    continue
                comp = self.coeff[r][s]
                for v in range(n):
                    if comp[v]:
                        out[v] = out[v] + a * b * comp[v]
        return out

    def nondegenerate(self):
        """Full-rank test of the flattened map w -> Pi(w, .)."""
        rows = []
        for t in range(self.rep.w_dim):
            for v in range(self.rep.n_gen):
                rows.append([self.coeff[r][t][v] for r in range(self.rep.w_dim)])
        return linalg.mat_rank(rows) == self.rep.w_dim

    def scale(self):
        return float(residual_norm(
            [abs(x) for plane in self.coeff for row in plane for x in row]
        )) or 1.0


def _pair_index(w_dim):
    pairs = [(r, s) for r in range(w_dim) for s in range(r + 1, w_dim)]
    return pairs, {p: i for i, p in enumerate(pairs)}


def solve_equivariant_pi(rep):
    """Solve for the so(3,q)-equivariant antisymmetric map Pi: L^2 W -> V.

    The solution space is computed exactly (or with pivoted elimination on
    the float backend), a nondegenerate element is selected, and the result
    is normalized so the induced invariant form b has b(E_1, E_1) = 1.
    """
    w, nV = rep.w_dim, rep.n_gen
    pairs, pidx = _pair_index(w)
    nunk = len(pairs) * nV

    def unk(r, s, v):
        # signed unknown index for Pi(E_r, E_s)_v
        if r < s:
            return pidx[(r, s)] * nV + v, 1
        return pidx[(s, r)] * nV + v, -1

    rows = []
    for a, b in rep.pairs():
        S = spin_lift(rep, {(a, b): 1})
        M = rep.so_matrix(a, b)
        for r, s in pairs:
            for v in range(nV):
                row = [0] * nunk
                # Pi(S E_r, E_s)_v
                for t in range(w):
                    if S[t][r] and t != s:
                        idx, sg = unk(t, s, v)
                        row[idx] = row[idx] + sg * S[t][r]
                # Pi(E_r, S E_s)_v
                for t in range(w):
                    if S[t][s] and t != r:
                        idx, sg = unk(r, t, v)
                        row[idx] = row[idx] + sg * S[t][s]
                # -(M Pi(E_r, E_s))_v
                for u in range(nV):
                    if M[v][u]:
                        idx, sg = unk(r, s, u)
                        row[idx] = row[idx] - sg * M[v][u]
                if any(row):
                    rows.append(row)
    basis = linalg.nullspace(rows)
    candidate = None
    for vec in basis:
        cand = _pi_from_vector(rep, vec, pairs)
        if cand.nondegenerate():
            candidate = cand
            break
    if candidate is None:
        raise NoNondegenerateSolution(
            f"no nondegenerate equivariant map for q={rep.q} "
            f"(solution space dimension {len(basis)})"
        )
    candidate.solution_dim = len(basis)
    return _normalize_pi(rep, candidate)


def _pi_from_vector(rep, vec, pairs):
    w, nV = rep.w_dim, rep.n_gen
    coeff = [[[0] * nV for _ in range(w)] for _ in range(w)]
    for i, (r, s) in enumerate(pairs):
        for v in range(nV):
            val = vec[i * nV + v]
            coeff[r][s][v] = val
            coeff[s][r][v] = -val
    return PiMap(rep, coeff)


def _normalize_pi(rep, pi):
    b = b_form(rep, pi, perm=(1, 2, 3), check_permutations=False)
    t = b[0][0]
    if is_zero(t, scale=pi.scale()):
        raise NoNondegenerateSolution("b(E_1, E_1) vanishes; cannot normalize")
    inv = 1 / t
    coeff = [
        [[inv * x for x in comp] for comp in plane] for plane in pi.coeff
    ]
    out = PiMap(rep, coeff)
    out.solution_dim = getattr(pi, "solution_dim", None)
    return out


def b_form(rep, pi, perm=(1, 2, 3), check_permutations=True):
    """The invariant symmetric form b(s, t) = <e_i^, Pi(e_j^ e_k^ . s, t)>.

    (i j k) must be an even permutation of (1 2 3); the result is the same
    for all three, which is verified unless `check_permutations` is False.
    """
    if sorted(perm) != [1, 2, 3] or perm not in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        raise PermutationMismatch(f"{perm} is not an even permutation of (1,2,3)")
    i, j, k = perm
    G = rep.gen2(j - 1, k - 1)
    w = rep.w_dim
    out = linalg.mat_zeros(w)
    for r in range(w):
        GEr = [G[t][r] for t in range(w)]
        for s in range(w):
            acc = 0
            for t, c in enumerate(GEr):
                if c:
                    acc = acc + c * pi.coeff[t][s][i - 1]
            out[r][s] = acc
    if check_permutations:
        scale = pi.scale()
        for other in ((2, 3, 1), (3, 1, 2)):
            if other == perm:
                continue
            alt = b_form(rep, pi, perm=other, check_permutations=False)
            diff = residual_norm(
                [alt[r][s] - out[r][s] for r in range(w) for s in range(w)]
            )
            if not is_zero(diff, scale=scale):
                raise PermutationMismatch(
                    f"b differs between permutations {perm} and {other}"
                )
        sym = residual_norm(
            [out[r][s] - out[s][r] for r in range(w) for s in range(r + 1, w)]
        )
        if not is_zero(sym, scale=scale):
            raise PermutationMismatch("b is not symmetric")
    return out


def clifford_relation_residual(rep):
    """Max violation of the Clifford relations by the stored matrices.

    Checked: squares of degree-2 elements ((e_a e_b)^2 = -sign(a) sign(b)),
    composites with a shared middle index ((e_a e_b)(e_b e_c) = -sign(b)
    e_a e_c, since v.v = -<v,v>), and squares of the derived degree-4
    products over disjoint pairs.
    """
    worst = 0
    n = rep.n_gen
    ident = linalg.mat_identity(rep.w_dim)

    def track(delta):
        nonlocal worst
        r = residual_norm(linalg.flatten(delta))
        if r > worst:
            worst = r

    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            gab = rep.gen2(a, b)
            sq = linalg.mat_mul(gab, gab)
            want = linalg.mat_scale(-rep.signature[a] * rep.signature[b], ident)
            track(linalg.mat_sub(sq, want))
            for c in range(n):
                if c in (a, b):
                    continue
                comp = linalg.mat_mul(gab, rep.gen2(b, c))
                want = linalg.mat_scale(-rep.signature[b], rep.gen2(a, c))
                track(linalg.mat_sub(comp, want))
    # degree-4 squares over disjoint pairs
    for a, b in rep.pairs():
        for c, d in rep.pairs():
            if len({a, b, c, d}) != 4:
                continue
            deg4 = linalg.mat_mul(rep.gen2(a, b), rep.gen2(c, d))
            sq = linalg.mat_mul(deg4, deg4)
            sgn = (
                rep.signature[a]
                * rep.signature[b]
                * rep.signature[c]
                * rep.signature[d]
            )
            track(linalg.mat_sub(sq, linalg.mat_scale(sgn, ident)))
    return worst


def spin_hom_residual(rep):
    """Homomorphism defect of the spin lift over all basis pairs of so(3,q)."""
    worst = 0
    pair_list = [(a, b) for a in range(rep.n_gen) for b in range(a + 1, rep.n_gen)]
    lifts = {p: spin_lift(rep, {p: 1}) for p in pair_list}
    mats = {p: rep.so_matrix(*p) for p in pair_list}
    flat = [linalg.flatten(mats[p]) for p in pair_list]
    cols = linalg.mat_transpose(flat)
    for p in pair_list:
        for p2 in pair_list:
            comm = linalg.mat_commutator(mats[p], mats[p2])
            sols, bad = linalg.solve_many(cols, [linalg.flatten(comm)])
            if sols is None or bad:
                raise DimensionMismatch("so(3,q) bracket left the 2-vector span")
            lift_of_bracket = linalg.mat_zeros(rep.w_dim)
            for coefp, coef in zip(pair_list, sols[0]):
                if coef:
                    lift_of_bracket = linalg.mat_add(
                        lift_of_bracket, linalg.mat_scale(coef, lifts[coefp])
                    )
            delta = linalg.mat_sub(
                linalg.mat_commutator(lifts[p], lifts[p2]), lift_of_bracket
            )
            r = residual_norm(linalg.flatten(delta))
            if r > worst:
                worst = r
    return worst
