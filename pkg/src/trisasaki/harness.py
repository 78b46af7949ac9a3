"""Verification suite, model serialization and report generation.

``run_suite`` executes every identity check a model must satisfy and
collects the residuals into a :class:`CheckReport`; checks never abort the
suite, failed entries isolate the broken identity.  Reports are
deterministic for a fixed model and backend (wall times are kept out of
the check entries).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import geometry as geo
from . import linalg
from .clifford import (
    b_form,
    build_even_clifford,
    clifford_relation_residual,
    solve_equivariant_pi,
    spin_hom_residual,
)
from .errors import SchemaViolation, UnknownScalarFormat
from .liealg import Grading, LieAlgebra
from .models import (
    SasakiModel,
    SYMMETRIC_FAMILIES,
    adapted_frame,
    t1_identification,
    t1_matrix_oracle,
)
from .liealg import from_matrix_basis
from .scalars import (
    BACKENDS,
    FLOAT_ZERO_TOL,
    format_scalar,
    is_zero,
    parse_scalar,
    residual_norm,
)

_THM37_PI = {
    (0, 1): (0, 0, -1, -1, 0),
    (0, 2): (0, -1, 0, 0, 0),
    (0, 3): (-1, 0, 0, 0, 1),
    (1, 2): (1, 0, 0, 0, 1),
    (3, 1): (0, 1, 0, 0, 0),
    (2, 3): (0, 0, 1, -1, 0),
}


@dataclass
class CheckEntry:
    check_id: str
    description: str
    residual: str
    passed: bool
    note: str = ""


@dataclass
class CheckReport:
    provenance: dict
    backend: str
    tolerance: float
    calibration: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def all_passed(self):
        return all(c.passed for c in self.checks)

    def entry(self, check_id):
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    def to_dict(self):
        return {
            "format": "sasaki-report/1",
            "provenance": self.provenance,
            "backend": self.backend,
            "tolerance": self.tolerance,
            "calibration": self.calibration,
            "all_passed": self.all_passed,
            "checks": [
                {
                    "id": c.check_id,
                    "description": c.description,
                    "residual": c.residual,
                    "passed": c.passed,
                    "note": c.note,
                }
                for c in self.checks
            ],
            "timings": self.timings,
        }

    def render_text(self):
        lines = []
        prov = ", ".join(f"{k}={v}" for k, v in sorted(self.provenance.items()))
        lines.append(f"model: {prov}")
        lines.append(f"backend: {self.backend}")
        for k, v in self.calibration.items():
            lines.append(f"calibration: {k}: {v}")
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            note = f"  [{c.note}]" if c.note else ""
            lines.append(
                f"  {mark}  {c.check_id:<28} residual={c.residual}{note}"
            )
        lines.append("result: " + ("all checks passed" if self.all_passed else "CHECKS FAILED"))
        return "\n".join(lines)


_CHECKS = []


def suite_check_ids():
    """Canonical ordered list of check ids (fixed per model kind)."""
    return [c for c, _ in _CHECKS]


def run_suite(model, tolerance=FLOAT_ZERO_TOL):
    """Run every verification check on the model and report residuals.

    Exact-backend checks pass only on literal zero; float-backend checks
    compare against tolerance * scale.  Failures never abort the run.
    """
    report = CheckReport(
        provenance=dict(model.provenance),
        backend=model.backend,
        tolerance=tolerance,
    )
    report.calibration["spin_lift_sign"] = "-1/2 (two-vector u^v acts as -uv/2)"
    scale = model.scale()

    def record(check_id, description, residual, note=""):
        ok = is_zero(residual, scale=scale, tol=tolerance)
        report.checks.append(
            CheckEntry(check_id, description, format_scalar(residual), ok, note)
        )

    def timed(check_id):
        class _T:
            def __enter__(self_t):
                self_t.t0 = time.perf_counter()

            def __exit__(self_t, *exc):
                report.timings[check_id] = round(time.perf_counter() - self_t.t0, 6)

        return _T()

    fam = model.provenance.get("family")
    symmetric = fam in SYMMETRIC_FAMILIES + ("aloff-wallach", "su21")
    alekseevsky = fam == "alekseevsky"

    with timed("jacobi"):
        record("jacobi", "Jacobi identity of the structure constants",
               model.algebra.jacobi_residual())

    with timed("grading"):
        res = _grading_residual(model)
        record("grading", "reductive grading: h is a subalgebra keeping V and H invariant", res)

    with timed("structure"):
        cs = geo.check_structure(model)
        for key, desc in (
            ("compatibility", "compatibility relations of the three structures"),
            ("structure_equation", "defining 2-form equation d eta_i = 2a Phi_i + 2(a-d) eta_j^eta_k"),
            ("isotropy_equivariance", "isotropy equivariance of xi, phi and g"),
            ("metric_symmetry", "metric symmetry"),
        ):
            record(f"structure.{key}", desc, cs[key])
        record("structure.positive_definite", "metric positive definiteness",
               0 if geo.metric_posdef(model) else 1)

    with timed("reeb"):
        record("reeb", "Reeb brackets [xi_i, xi_j] = 2 delta xi_k",
               geo.check_structure(model)["reeb_brackets"] if False else _reeb_residual(model))

    with timed("levi_civita"):
        lam_g = geo.levi_civita_nomizu(model)
        t_g = geo.torsion_of(lam_g, model)
        record("levi_civita.torsion_free", "Levi-Civita map is torsion-free",
               residual_norm([x for pl in t_g.low for row in pl for x in row]))
        record("levi_civita.metric", "Levi-Civita map is metric",
               lam_g.metric_residual(model.g))

    with timed("torsion"):
        tor = geo.canonical_torsion(model)
        record("torsion.skew", "canonical torsion is a 3-form",
               tor.antisymmetry_residual())
        lam_c = geo.canonical_nomizu(model, lam_g, tor)
        t_c = geo.torsion_of(lam_c, model)
        record("torsion.match", "connection torsion equals the closed form",
               t_c.difference(tor))
        record("torsion.reeb_value", "T(xi_1, xi_2) = 2(delta - 4 alpha) xi_3",
               _reeb_torsion_residual(model, tor))

    with timed("canonical_cases"):
        cases = geo.canonical_case_residuals(model, lam_c)
        for key, desc in (
            ("hh_stays_horizontal", "canonical map preserves H on H x H"),
            ("vv_case", "canonical map is beta/(2 delta) [x,y] on V x V"),
            ("vh_case", "canonical map is [x,y] - 2a sum eta_i(x) phi_i y on V x H"),
            ("hv_case", "canonical map vanishes on H x V"),
        ):
            record(f"canonical.{key}", desc, cases[key])
        if symmetric:
            sym = geo.symmetric_nomizu_residuals(model, lam_c, lam_g)
            record("canonical.symmetric_closed_form",
                   "canonical map is 0 on H, beta/(2 delta) ad on V",
                   sym["canonical_closed_form"])
            record("levi_civita.symmetric_closed_form",
                   "Levi-Civita case formulas over a symmetric base",
                   sym["levi_civita_closed_form"])

    with timed("parallelism"):
        res = residual_norm(
            [
                x
                for mats in geo.nabla_tensor(lam_c, model.g, "metric")
                for x in linalg.flatten(mats)
            ]
        )
        record("parallel.metric_canonical", "canonical connection is metric", res)
        res = residual_norm(
            [
                x
                for mats in geo.nabla_tensor(lam_g, model.g, "metric")
                for x in linalg.flatten(mats)
            ]
        )
        record("parallel.metric_levi_civita", "Levi-Civita connection is metric", res)
        record("parallel.phi_derivative",
               "nabla phi_i = beta (eta_k phi_j - eta_j phi_k)",
               _phi_derivative_residual(model, lam_c))
        nt = geo.nabla_tensor(lam_c, tor.low, "three-form")
        record("parallel.torsion", "canonical torsion is parallel",
               residual_norm([x for t3 in nt for pl in t3 for row in pl for x in row]))

    with timed("curvature"):
        R = geo.curvature(lam_c, model)
        sign, note = geo.curvature_sign_calibration(model, R)
        if sign == 0:
            sign = 1
        report.calibration["curvature_sign"] = note
        ids = geo.curvature_identity_residuals(model, R, sign)
        for key, desc in (
            ("mixed_zero", "curvature vanishes on mixed vertical-horizontal slots"),
            ("vertical_pattern", "R(xi_i,xi_j,xi_k,xi_l) = -4 a b (d_ik d_jl - d_il d_jk)"),
            ("mixed_pair", "R(xi_i,xi_j,X,Y) = 2 a b Phi_k(X,Y)"),
            ("polarized", "R(X,Y,Z,phi_i Z) + R(X,Y,phi_j Z,phi_k Z) = 2 a b Phi_i(X,Y)|Z|^2"),
        ):
            record(f"curvature.{key}", desc, ids[key])

    with timed("ricci"):
        R_g = geo.curvature(lam_g, model)
        ric, scal = geo.ricci_scalar(R_g, model)
        record("ricci.closed_form",
               "Ric = 2a(2d(n+2)-3a) g + 2(a-d)((2n+3)a-d) g|_V",
               geo.ricci_closed_form_residual(model, ric))

    frame = None
    frame_note = ""
    try:
        frame = adapted_frame(model)
    except Exception as exc:  # frame may be unbuildable on odd parameters
        frame_note = f"adapted frame unavailable: {exc}"

    with timed("oneill"):
        on = geo.oneill_residuals(model, lam_g)
        record("oneill.a_tensor", "A equals the vertical part of the Levi-Civita map",
               on["a_from_levi_civita"])
        record("oneill.fibers", "fiber O'Neill tensor vanishes (totally geodesic fibers)",
               on["fiber_tensor_zero"])
        if frame is not None:
            want = 12 * model.n * model.alpha * model.alpha
            record("oneill.norm_sum", "sum |A_{e_i} e_j|^2 = 12 n alpha^2",
                   geo.oneill_norm_sum(model, frame) - want)
        else:
            record("oneill.norm_sum", "sum |A_{e_i} e_j|^2 = 12 n alpha^2", 1,
                   frame_note)

    with timed("base_scalar"):
        if frame is not None:
            want = 16 * model.n * (model.n + 2) * model.alpha * model.delta
            got = geo.base_scalar(model, ric, frame)
            record("base_scalar", "base scalar curvature equals 16 n (n+2) alpha delta",
                   got - want)
        else:
            record("base_scalar", "base scalar curvature equals 16 n (n+2) alpha delta",
                   1, frame_note)

    if symmetric:
        with timed("qk_holonomy"):
            record("qk_holonomy",
                   "base curvature commutes with the quaternionic span",
                   geo.qk_holonomy_check(model, frame) if frame is not None else 1,
                   frame_note)

    if alekseevsky:
        with timed("vertical_projections"):
            record("vertical_projections",
                   "vertical projections of all bracket pairs match the table",
                   _vertical_projection_residual(model))
        if model.provenance.get("l"):
            with timed("clifford"):
                rep = build_even_clifford(model.provenance["q"], model.backend)
                record("clifford.relations", "Clifford table relations",
                       clifford_relation_residual(rep))
                record("clifford.spin_hom", "spin lift is a Lie algebra homomorphism",
                       spin_hom_residual(rep))
        if model.provenance.get("q") == 2 and model.provenance.get("l") == 1:
            with timed("pi_table"):
                record("pi_table", "solved equivariant map matches the explicit table",
                       _pi_table_residual(model.backend))
            with timed("matrix_oracle"):
                record("matrix_oracle",
                       "explicit 10x10 matrices reproduce the built structure constants",
                       _oracle_residual(model))

    return report


def _grading_residual(model):
    L = model.algebra
    gr = model.grading
    h = list(gr.h_idx)
    ok_v, _ = L.is_invariant_subspace(list(gr.v_idx), h)
    ok_h, _ = L.is_invariant_subspace(list(gr.hh_idx), h)
    ok_sub, _ = L.is_invariant_subspace(h, h)
    ok_m, _ = L.is_invariant_subspace(list(gr.m_idx), h)
    return 0 if (ok_v and ok_h and ok_sub and ok_m) else 1


def _reeb_residual(model):
    vals = []
    for i, j, k in geo.EVEN_PERMS:
        br = model.bracket_m(model.xi[i - 1], model.xi[j - 1])
        want = linalg.vec_scale(2 * model.delta, model.xi[k - 1])
        vals += linalg.vec_sub(br, want)
        vals += list(model.bracket_h(model.xi[i - 1], model.xi[j - 1]))
    return residual_norm(vals)


def _reeb_torsion_residual(model, tor):
    t = [
        geo._eval_r_vec(tor, model.xi[0], model.xi[1])
        if hasattr(geo, "_eval_r_vec")
        else None
    ]
    # T(xi_1, xi_2) with xi_i = delta b_i
    d2 = model.delta * model.delta
    got = [d2 * x for x in tor.vec[0][1]]
    want = [2 * (model.delta - 4 * model.alpha) * x for x in model.xi[2]]
    return residual_norm(linalg.vec_sub(got, want))


def _phi_derivative_residual(model, lam_c):
    vals = []
    for i, j, k in geo.EVEN_PERMS:
        d = geo.nabla_tensor(lam_c, model.phi[i - 1], "endomorphism")
        for x in range(model.m_dim):
            want = linalg.mat_sub(
                linalg.mat_scale(model.beta * model.eta[k - 1][x], model.phi[j - 1]),
                linalg.mat_scale(model.beta * model.eta[j - 1][x], model.phi[k - 1]),
            )
            vals += linalg.flatten(linalg.mat_sub(d[x], want))
    return residual_norm(vals)


def _vertical_projection_residual(model):
    """All bracket pairs against the vertical-projection table.

    Expected vertical parts: [sigma_i, sigma_j] = 2 sgn sigma_k,
    [2D, s_i]_V = -2 sigma_i, [s_i, s_j]_V = -2 sgn sigma_k,
    [e_l, f_{i,l}]_V = -2 sigma_i, [f_{i,l}, f_{j,l}]_V = 2 sgn sigma_k,
    [E_r, E_s]_V = +(Pi components against s_i - sigma_i splitting);
    every other pair has no vertical part.
    """
    from .models import perm_sign, third_index

    L = model.algebra
    labels = L.labels
    lab = {name: i for i, name in enumerate(labels)}
    q = model.provenance.get("q", 0)
    l = model.provenance.get("l", 0)
    dim = L.dim

    expected = {}

    def expect(n1, n2, comp):
        expected[(lab[n1], lab[n2])] = comp

    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i == j:
                continue
            k = third_index(i, j)
            expect(f"sigma{i}", f"sigma{j}", {k - 1: 2 * perm_sign(i, j)})
            expect(f"s{i}", f"s{j}", {k - 1: -2 * perm_sign(i, j)})
    for i in (1, 2, 3):
        expect("2D", f"s{i}", {i - 1: -2})
        for t in range(1, q + 1):
            expect(f"e{t}", f"f{i}{t}", {i - 1: -2})
            for j in (1, 2, 3):
                if j != i:
                    k = third_index(i, j)
                    expect(f"f{i}{t}", f"f{j}{t}", {k - 1: 2 * perm_sign(i, j)})
    if l:
        rep = build_even_clifford(q, model.backend)
        pi = solve_equivariant_pi(rep)
        for r in range(4):
            for s in range(4):
                if r == s:
                    continue
                comp = pi.coeff[r][s]
                # bracket is -Pi; vertical part of -eh_i is +sigma_i
                expect(f"E{r + 1}", f"E{s + 1}", {i: comp[i] for i in range(3) if comp[i]})

    vset = set(model.grading.v_idx)
    vals = []
    for a in range(dim):
        for b in range(dim):
            if a == b:
                continue
            want = expected.get((a, b))
            if want is None and (b, a) in expected:
                want = {k: -v for k, v in expected[(b, a)].items()}
            want = want or {}
            got = {k: v for k, v in L.bracket_basis(a, b) if k in vset}
            keys = set(want) | set(got)
            for k in keys:
                vals.append(got.get(k, 0) - want.get(k, 0))
    return residual_norm(vals)


def _pi_table_residual(backend):
    rep = build_even_clifford(2, backend)
    pi = solve_equivariant_pi(rep)
    vals = []
    for (r, s), want in _THM37_PI.items():
        got = pi.value(r, s)
        vals += [g - w for g, w in zip(got, want)]
    # b positive definite with b(E_1, E_1) = 1 pins the scale, so the match
    # must be exact, not just proportional
    b = b_form(rep, pi)
    vals.append(b[0][0] - 1)
    return residual_norm(vals)


def _oracle_residual(model):
    mats, labels = t1_matrix_oracle()
    oracle = from_matrix_basis(mats, labels)
    images = t1_identification(model)
    L = model.algebra
    vals = []
    for a in range(oracle.dim):
        for b in range(oracle.dim):
            lhs = L.bracket(images[labels[a]], images[labels[b]])
            want = [0] * L.dim
            for k, v in oracle.bracket_basis(a, b):
                img = images[labels[k]]
                for t in range(L.dim):
                    if img[t]:
                        want[t] = want[t] + v * img[t]
            vals += linalg.vec_sub(lhs, want)
    return residual_norm(vals)


# -- fault injection -----------------------------------------------------------


def tamper_structure_constant(model, i, j, k, delta_value=1):
    """Model copy with one structure constant perturbed (breaks Jacobi)."""
    entries = list(model.algebra.entries)
    entries.append((i, j, k, delta_value))
    L = LieAlgebra(model.algebra.dim, model.algebra.labels, entries)
    return SasakiModel(
        L, model.grading, model.backend, model.alpha, model.delta,
        model.xi, model.phi, model.g, model.provenance,
    )


def tamper_phi(model, i, r, c, delta_value=1):
    """Model copy with phi_i entry (r, c) perturbed."""
    phi = [linalg.mat_scale(1, p) for p in model.phi]
    phi[i][r][c] = phi[i][r][c] + delta_value
    return SasakiModel(
        model.algebra, model.grading, model.backend, model.alpha, model.delta,
        model.xi, phi, model.g, model.provenance,
    )


def tamper_metric(model, r, c, delta_value=1):
    """Model copy with g entry (r, c) (and (c, r)) perturbed."""
    g = linalg.mat_scale(1, model.g)
    g[r][c] = g[r][c] + delta_value
    if r != c:
        g[c][r] = g[c][r] + delta_value
    return SasakiModel(
        model.algebra, model.grading, model.backend, model.alpha, model.delta,
        model.xi, model.phi, g, model.provenance,
    )


def tamper_xi(model, i, r, delta_value=1):
    """Model copy with xi_i coordinate r perturbed."""
    xi = [list(v) for v in model.xi]
    xi[i][r] = xi[i][r] + delta_value
    return SasakiModel(
        model.algebra, model.grading, model.backend, model.alpha, model.delta,
        xi, model.phi, model.g, model.provenance,
    )


# -- serialization -------------------------------------------------------------

_FORMAT = "sasaki-model/1"


def model_to_dict(model):
    f = format_scalar
    alg = {
        "dim": model.algebra.dim,
        "labels": list(model.algebra.labels),
        "c": [[i, j, k, f(v)] for i, j, k, v in model.algebra.entries],
    }
    if model.algebra.realization is not None:
        alg["realization"] = [
            [[f(x) for x in row] for row in mat] for mat in model.algebra.realization
        ]
    grading = {
        "h": list(model.grading.h_idx),
        "v": list(model.grading.v_idx),
        "hh": list(model.grading.hh_idx),
    }
    if model.grading.sub:
        grading["sub"] = {k: list(v) for k, v in model.grading.sub.items()}
    return {
        "format": _FORMAT,
        "backend": model.backend,
        "provenance": dict(model.provenance),
        "alpha": f(model.alpha),
        "delta": f(model.delta),
        "algebra": alg,
        "grading": grading,
        "xi": [[f(x) for x in v] for v in model.xi],
        "eta": [[f(x) for x in v] for v in model.eta],
        "phi": [[[f(x) for x in row] for row in p] for p in model.phi],
        "g": [[f(x) for x in row] for row in model.g],
    }


def serialize(model):
    """Model as canonical JSON bytes; deserialize() inverts exactly."""
    return json.dumps(model_to_dict(model), indent=1, sort_keys=True).encode()


def _need(data, key, pointer, kind=None):
    if key not in data:
        raise SchemaViolation(f"{pointer}/{key}", "missing required key")
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise SchemaViolation(f"{pointer}/{key}", f"expected {kind.__name__}")
    return value


def deserialize(payload):
    """Rebuild a model from JSON bytes/text, validating the schema."""
    if isinstance(payload, bytes):
        payload = payload.decode()
    try:
        data = json.loads(payload)
    except json.JSONDecodeError as exc:
        raise SchemaViolation("", f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise SchemaViolation("", "top level must be an object")
    if data.get("format") != _FORMAT:
        raise SchemaViolation("/format", f"expected {_FORMAT!r}")
    backend = _need(data, "backend", "", str)
    if backend not in BACKENDS:
        raise SchemaViolation("/backend", f"unknown backend {backend!r}")

    def scal(text, pointer):
        if not isinstance(text, str):
            raise SchemaViolation(pointer, "scalar values must be strings")
        return parse_scalar(text, backend)

    alg = _need(data, "algebra", "", dict)
    dim = _need(alg, "dim", "/algebra", int)
    labels = _need(alg, "labels", "/algebra", list)
    if len(labels) != dim:
        raise SchemaViolation("/algebra/labels", f"expected {dim} labels")
    centries = _need(alg, "c", "/algebra", list)
    seen = {}
    entries = []
    for pos, ent in enumerate(centries):
        pointer = f"/algebra/c/{pos}"
        if not (isinstance(ent, list) and len(ent) == 4):
            raise SchemaViolation(pointer, "entries are [i, j, k, scalar]")
        i, j, k, text = ent
        for t, name in ((i, "i"), (j, "j"), (k, "k")):
            if not isinstance(t, int) or not 0 <= t < dim:
                raise SchemaViolation(pointer, f"index {name} out of range")
        if i == j:
            raise SchemaViolation(pointer, "bracket of an element with itself")
        v = scal(text, pointer)
        if (i, j, k) in seen:
            raise SchemaViolation(pointer, "duplicate entry")
        seen[(i, j, k)] = v
        entries.append((i, j, k, v))
    scale = max((abs(float(v)) for _, _, _, v in entries), default=1.0)
    for (i, j, k), v in seen.items():
        if (j, i, k) in seen and not is_zero(v + seen[(j, i, k)], scale=scale):
            raise SchemaViolation(
                "/algebra/c", f"c[{i}][{j}][{k}] != -c[{j}][{i}][{k}]"
            )
    entries = [
        (i, j, k, v)
        for (i, j, k, v) in entries
        if i < j or (j, i, k) not in seen
    ]
    realization = None
    if "realization" in alg:
        realization = [
            [[scal(x, f"/algebra/realization/{t}") for x in row] for row in mat]
            for t, mat in enumerate(alg["realization"])
        ]
    algebra = LieAlgebra(dim, labels, entries, realization)

    grading_data = _need(data, "grading", "", dict)
    try:
        grading = Grading(
            h_idx=tuple(_need(grading_data, "h", "/grading", list)),
            v_idx=tuple(_need(grading_data, "v", "/grading", list)),
            hh_idx=tuple(_need(grading_data, "hh", "/grading", list)),
            sub={k: tuple(v) for k, v in grading_data.get("sub", {}).items()},
        )
    except Exception as exc:
        raise SchemaViolation("/grading", str(exc)) from None
    if not grading.covers(dim):
        raise SchemaViolation("/grading", "parts do not partition the basis")
    if grading.m_idx != tuple(range(len(grading.m_idx))):
        raise SchemaViolation("/grading", "reductive part must occupy the leading indices")

    alpha = scal(_need(data, "alpha", ""), "/alpha")
    delta = scal(_need(data, "delta", ""), "/delta")
    m_dim = len(grading.m_idx)

    def tensor_matrix(key, obj, pointer):
        if not (isinstance(obj, list) and len(obj) == m_dim):
            raise SchemaViolation(pointer, f"expected {m_dim} rows")
        out = []
        for r, row in enumerate(obj):
            if not (isinstance(row, list) and len(row) == m_dim):
                raise SchemaViolation(f"{pointer}/{r}", f"expected {m_dim} entries")
            out.append([scal(x, f"{pointer}/{r}/{c}") for c, x in enumerate(row)])
        return out

    def tensor_vectors(key):
        obj = _need(data, key, "", list)
        if len(obj) != 3:
            raise SchemaViolation(f"/{key}", "expected 3 vectors")
        out = []
        for t, vec in enumerate(obj):
            if not (isinstance(vec, list) and len(vec) == m_dim):
                raise SchemaViolation(f"/{key}/{t}", f"expected {m_dim} entries")
            out.append([scal(x, f"/{key}/{t}/{c}") for c, x in enumerate(vec)])
        return out

    xi = tensor_vectors("xi")
    eta = tensor_vectors("eta")
    phi_data = _need(data, "phi", "", list)
    if len(phi_data) != 3:
        raise SchemaViolation("/phi", "expected 3 matrices")
    phi = [tensor_matrix("phi", p, f"/phi/{t}") for t, p in enumerate(phi_data)]
    g = tensor_matrix("g", _need(data, "g", "", list), "/g")

    provenance = data.get("provenance", {})
    model = SasakiModel(algebra, grading, backend, alpha, delta, xi, phi, g, provenance)
    mscale = model.scale()
    for t in range(3):
        diff = residual_norm(linalg.vec_sub(model.eta[t], eta[t]))
        if not is_zero(diff, scale=mscale):
            raise SchemaViolation(f"/eta/{t}", "eta inconsistent with g and xi")
    return model


def models_equal(a, b):
    """Structural equality used by the round-trip guarantee."""
    return (
        a.backend == b.backend
        and a.algebra.dim == b.algebra.dim
        and a.algebra.labels == b.algebra.labels
        and a.algebra.entries == b.algebra.entries
        and a.grading == b.grading
        and a.alpha == b.alpha
        and a.delta == b.delta
        and a.xi == b.xi
        and a.phi == b.phi
        and a.g == b.g
        and a.provenance == b.provenance
    )


def dump_tensors(model, directory):
    """Write curvature and torsion as flat JSON arrays with index metadata."""
    import os

    os.makedirs(directory, exist_ok=True)
    lam_g = geo.levi_civita_nomizu(model)
    tor = geo.canonical_torsion(model)
    lam_c = geo.canonical_nomizu(model, lam_g, tor)
    R = geo.curvature(lam_c, model)
    m = model.m_dim
    flat = []
    for x in range(m):
        for y in range(m):
            for z in range(m):
                for w in range(m):
                    flat.append(format_scalar(R.value(x, y, z, w)))
    paths = {}
    with open(os.path.join(directory, "curvature_canonical.json"), "w") as fh:
        json.dump(
            {
                "tensor": "canonical curvature, lowered",
                "index_order": ["x", "y", "z", "w"],
                "dim": m,
                "values": flat,
            },
            fh,
        )
    paths["curvature"] = os.path.join(directory, "curvature_canonical.json")
    flat = []
    for x in range(m):
        for y in range(m):
            for z in range(m):
                flat.append(format_scalar(tor.low[x][y][z]))
    with open(os.path.join(directory, "torsion_canonical.json"), "w") as fh:
        json.dump(
            {
                "tensor": "canonical torsion 3-form",
                "index_order": ["x", "y", "z"],
                "dim": m,
                "values": flat,
            },
            fh,
        )
    paths["torsion"] = os.path.join(directory, "torsion_canonical.json")
    return paths
