"""Structure-constant Lie algebras.

A :class:`LieAlgebra` stores a sparse rank-3 array of structure constants
c[i][j][k] (the coefficient of basis element k in [b_i, b_j]), optionally
together with a realization by square matrices.  Everything downstream
(gradings, Killing form, Nomizu maps, curvature) is computed from c alone,
so a model is self-contained once built.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .errors import DimensionMismatch, LinearlyDependentBasis, NotClosed
from .scalars import residual_norm


class LieAlgebra:
    """Finite-dimensional real Lie algebra given by structure constants.

    `entries` is an iterable of (i, j, k, value) with i < j; the antisymmetric
    counterpart is implied.  Immutable after construction; all operations are
    pure, so instances can be shared freely.
    """

    def __init__(self, dim, labels, entries, realization=None):
        if len(labels) != dim:
            raise DimensionMismatch(f"{len(labels)} labels for dimension {dim}")
        self.dim = dim
        self.labels = list(labels)
        pairs = {}
        for i, j, k, val in entries:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise DimensionMismatch(f"structure index ({i},{j},{k}) out of range")
            if i == j:
                raise DimensionMismatch(f"diagonal structure entry ({i},{i},{k})")
            if i > j:
                i, j, val = j, i, -val
            if not val:
                continue
            pairs.setdefault((i, j), {})
            slot = pairs[(i, j)]
            slot[k] = slot.get(k, 0) + val
        self._pairs = {
            key: tuple((k, v) for k, v in sorted(slot.items()) if v)
            for key, slot in pairs.items()
        }
        self._pairs = {key: val for key, val in self._pairs.items() if val}
        self.realization = realization
        self._killing = None

    @property
    def entries(self):
        """Canonical sparse entries (i, j, k, value) with i < j."""
        out = []
        for (i, j), slot in sorted(self._pairs.items()):
            for k, v in slot:
                out.append((i, j, k, v))
        return out

    def c(self, i, j, k):
        """Single structure constant c[i][j][k]."""
        if i == j:
            return 0
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for kk, v in self._pairs.get((i, j), ()):
            if kk == k:
                return sign * v
        return 0

    def bracket_basis(self, i, j):
        """[b_i, b_j] as a sparse list of (k, value)."""
        if i == j:
            return ()
        if i < j:
            return self._pairs.get((i, j), ())
        return tuple((k, -v) for k, v in self._pairs.get((j, i), ()))

    def bracket(self, x, y):
        """[x, y] for coordinate vectors x, y."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("bracket operands must have the algebra dimension")
        out = [0] * self.dim
        for (i, j), slot in self._pairs.items():
            coef = x[i] * y[j] - x[j] * y[i]
            if not coef:
                continue
            for k, v in slot:
                out[k] = out[k] + coef * v
        return out

    def ad(self, x):
        """Matrix of y -> [x, y] in the basis."""
        if len(x) != self.dim:
            raise DimensionMismatch("ad argument must have the algebra dimension")
        out = linalg.mat_zeros(self.dim)
        for (i, j), slot in self._pairs.items():
            xi, xj = x[i], x[j]
            if xi:
                for k, v in slot:
                    out[k][j] = out[k][j] + xi * v
            if xj:
                for k, v in slot:
                    out[k][i] = out[k][i] - xj * v
        return out

    def ad_basis(self, i):
        out = linalg.mat_zeros(self.dim)
        for j in range(self.dim):
            for k, v in self.bracket_basis(i, j):
                out[k][j] = v
        return out

    def killing_form(self):
        """kappa[i][j] = tr(ad b_i . ad b_j), from structure constants only."""
        if self._killing is None:
            dim = self.dim
            # per-basis sparse ad maps: input index -> [(output index, value)]
            ad_maps = []
            for i in range(dim):
                m = {}
                for j in range(dim):
                    ent = self.bracket_basis(i, j)
                    if ent:
                        m[j] = ent
                ad_maps.append(m)
            kappa = linalg.mat_zeros(dim)
            for i in range(dim):
                for j in range(i, dim):
                    acc = 0
                    for b, outs in ad_maps[i].items():
                        back = ad_maps[j]
                        for k, v in outs:
                            if k in back:
                                for b2, v2 in back[k]:
                                    if b2 == b:
                                        acc = acc + v * v2
                    kappa[i][j] = acc
                    kappa[j][i] = acc
            self._killing = kappa
        return self._killing

    def jacobi_residual(self):
        """Max entrywise violation of the Jacobi identity over basis triples."""
        worst = 0
        dim = self.dim
        for i in range(dim):
            for j in range(i + 1, dim):
                for k in range(j + 1, dim):
                    acc = [0] * dim
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        for t, v in self.bracket_basis(b, c):
                            for s, w in self.bracket_basis(a, t):
                                acc[s] = acc[s] + v * w
                    r = residual_norm(acc)
                    if r > worst:
                        worst = r
        return worst

    def is_invariant_subspace(self, span, under):
        """Whether [b_u, s] stays in the span for all u in `under`, s in `span`.

        `span` is a list of basis indices or of coordinate vectors; `under`
        is a list of basis indices.  Returns (True, None) or (False, (u, s)).
        """
        vectors = []
        for s in span:
            if isinstance(s, int):
                v = [0] * self.dim
                v[s] = 1
                vectors.append(v)
            else:
                vectors.append(list(s))
        span_rows = [list(v) for v in vectors]
        base_rank = linalg.mat_rank(span_rows)
        for u in under:
            for s_pos, v in enumerate(vectors):
                w = self.bracket_basis_vector(u, v)
                r = linalg.mat_rank(span_rows + [w])
                if r > base_rank:
                    return False, (u, span[s_pos])
        return True, None

    def bracket_basis_vector(self, i, y):
        """[b_i, y] for a coordinate vector y."""
        out = [0] * self.dim
        for j, c in enumerate(y):
            if not c:
                continue
            for k, v in self.bracket_basis(i, j):
                out[k] = out[k] + c * v
        return out

    def scale(self):
        """Magnitude of the structure constants (for float tolerances)."""
        vals = [v for slot in self._pairs.values() for _, v in slot]
        return float(residual_norm(vals)) if vals else 1.0


@dataclass(frozen=True)
class Grading:
    """Partition of the basis indices into isotropy, vertical and horizontal.

    `sub` optionally splits the horizontal part further (Alekseevsky models
    record h0, h1 and w quadruple groups there).
    """

    h_idx: tuple
    v_idx: tuple
    hh_idx: tuple
    sub: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.v_idx) != 3:
            raise DimensionMismatch("vertical part must be 3-dimensional")
        if len(self.hh_idx) % 4:
            raise DimensionMismatch("horizontal part must have dimension 4n")
        all_idx = (*self.h_idx, *self.v_idx, *self.hh_idx)
        if len(set(all_idx)) != len(all_idx):
            raise DimensionMismatch("grading parts overlap")

    @property
    def n(self):
        return len(self.hh_idx) // 4

    @property
    def m_idx(self):
        """Indices of the reductive complement, vertical part first."""
        return (*self.v_idx, *self.hh_idx)

    def covers(self, dim):
        return len(self.h_idx) + len(self.v_idx) + len(self.hh_idx) == dim


def from_matrix_basis(mats, labels):
    """Build a LieAlgebra from a list of square matrices.

    The structure constants are found by expressing each pairwise matrix
    commutator in the given basis (exact linear solve).  Raises
    LinearlyDependentBasis or NotClosed (reporting the offending pair).
    """
    dim = len(mats)
    if dim == 0:
        raise DimensionMismatch("empty basis")
    size = len(mats[0])
    for m in mats:
        if len(m) != size or any(len(row) != size for row in m):
            raise DimensionMismatch("basis matrices must share a square shape")
    span = [linalg.flatten(m) for m in mats]
    span_cols = linalg.mat_transpose(span)
    if linalg.mat_rank(span_cols) < dim:
        raise LinearlyDependentBasis(f"{dim} matrices span a smaller space")
    comms = []
    pairs = []
    for i in range(dim):
        for j in range(i + 1, dim):
            comms.append(linalg.flatten(linalg.mat_commutator(mats[i], mats[j])))
            pairs.append((i, j))
    entries = []
    if comms:
        sols, bad = linalg.solve_many(span_cols, comms)
        if sols is None:
            raise LinearlyDependentBasis("matrix basis is rank deficient")
        if bad:
            raise NotClosed(*pairs[bad[0]])
        for (i, j), x in zip(pairs, sols):
            for k, v in enumerate(x):
                if v:
                    entries.append((i, j, k, v))
    return LieAlgebra(dim, labels, entries, realization=[[list(r) for r in m] for m in mats])
