"""Floating-point re-derivation of the pencil census, for cross-validation.

This is the numeric shadow of :func:`entfam.pencil.inventory`: locus
polynomials are rebuilt from complex evaluations, roots come from companion
matrices (``numpy.roots``), locus membership is decided by numerical rank at
a tolerance, and the generic type is estimated from random samples.  Nothing
here shares code with the exact census beyond the hyperdeterminant formula
itself.

Numeric decisions close to their thresholds mark the result ill-conditioned
instead of failing; callers compare exact and numeric censuses only on
unflagged runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .forms import INFINITE, RootCount, is_infinite
from .pencil import Pencil, PencilInventory, PointType
from .slocc_classes import cayley_hyperdet

_CLUSTER_RADIUS = 1e-5
_QUARTIC_GROUP_RADIUS = 2e-3
_NEAR_CLUSTER = 1e-3
_TRIM_REL = 1e-10


@dataclass
class NumericInventory:
    """Census counts recovered numerically, plus conditioning diagnostics."""

    product_points: RootCount
    biseparable_points: tuple[RootCount, RootCount, RootCount]
    w_points: RootCount
    generic_type: PointType
    generic_bisep_k: int | None
    generic_agreement: float
    ill_conditioned: bool
    notes: tuple[str, ...] = field(default_factory=tuple)

    def agrees_with(self, exact: PencilInventory) -> bool:
        def same(a: RootCount, b: RootCount) -> bool:
            if is_infinite(a) or is_infinite(b):
                return is_infinite(a) and is_infinite(b)
            return a == b

        return (
            same(self.product_points, exact.product_points)
            and all(
                same(x, y)
                for x, y in zip(self.biseparable_points, exact.biseparable_points)
            )
            and same(self.w_points, exact.w_points)
            and self.generic_type is exact.generic_type
            and self.generic_bisep_k == exact.generic_bisep_k
        )


def _chordal(u: np.ndarray, v: np.ndarray) -> float:
    return abs(u[0] * v[1] - u[1] * v[0])


def _aligned_centroid(points: list[np.ndarray]) -> np.ndarray:
    """Mean of projective representatives after phase alignment to the first."""
    anchor = points[0]
    total = np.zeros(2, dtype=complex)
    for pt in points:
        overlap = complex(np.vdot(anchor, pt))
        phase = overlap / abs(overlap) if overlap else 1.0
        total += pt / phase
    return total / np.linalg.norm(total)


def _projective_roots(coeffs: np.ndarray, notes: list[str], what: str) -> list[np.ndarray]:
    """Distinct-ish projective roots of an ascending coefficient vector.

    Trailing near-zero coefficients drop the chart degree and contribute the
    point at infinity (0:1) once; the rest go through numpy.roots.
    """
    cmax = float(np.max(np.abs(coeffs)))
    degree = len(coeffs) - 1
    effective = degree
    while effective > 0 and abs(coeffs[effective]) <= _TRIM_REL * cmax:
        effective -= 1
    points = []
    if effective < degree:
        points.append(np.array([0.0, 1.0], dtype=complex))
        if any(
            _TRIM_REL * cmax < abs(coeffs[j]) <= 1e-7 * cmax
            for j in range(effective + 1, degree + 1)
        ):
            notes.append(f"{what}: ambiguous degree drop")
    elif abs(coeffs[effective]) <= 1e-7 * cmax:
        notes.append(f"{what}: marginal leading coefficient")
    if effective > 0:
        for x in np.roots(coeffs[: effective + 1][::-1]):
            v = np.array([1.0, x], dtype=complex)
            points.append(v / np.linalg.norm(v))
    return points


def numeric_inventory_oracle(
    pencil: Pencil, samples: int = 200, tol: float = 1e-8, seed: int = 20240801
) -> NumericInventory:
    """Approximate census of a pencil from floating-point evaluations only."""
    if samples < 100:
        raise ValueError("samples must be at least 100")
    notes: list[str] = []

    v0 = np.array([complex(x) for x in pencil.phi0])
    v1 = np.array([complex(x) for x in pencil.phi1])
    amp_scale = float(np.linalg.norm(v0) + np.linalg.norm(v1))
    quad_scale = amp_scale**2
    quart_scale = amp_scale**4

    def flattening(vec: np.ndarray, k: int) -> np.ndarray:
        return np.moveaxis(vec.reshape(2, 2, 2), k - 1, 0).reshape(2, 4)

    def point(a: complex, b: complex) -> np.ndarray:
        return a * v0 + b * v1

    def measurements(vec: np.ndarray) -> tuple[list[float], float]:
        """Per-qubit singular value ratios and |hyperdet| of the unit vector."""
        unit = vec / np.linalg.norm(vec)
        ratios = []
        for k in (1, 2, 3):
            s = np.linalg.svd(flattening(unit, k), compute_uv=False)
            ratios.append(float(s[1] / s[0]))
        det = abs(cayley_hyperdet(list(unit)))
        return ratios, float(det)

    def rank_pattern(ratios, flags: list[str]) -> list[int]:
        for r in ratios:
            if tol * 1e-3 < r < tol * 1e4:
                flags.append("marginal flattening rank")
        return [k for k, r in zip((1, 2, 3), ratios) if r <= tol]

    def classify_sample(ratios, det):
        rank_one = [k for k, r in zip((1, 2, 3), ratios) if r <= tol]
        if len(rank_one) >= 2:
            return ("product", None)
        if len(rank_one) == 1:
            return ("bisep", rank_one[0])
        return ("w", None) if det <= tol else ("ghz", None)

    # Quartic hyperdeterminant coefficients from five evaluations.
    interp = [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 2.0), (2.0, 1.0)]
    matrix = np.array(
        [[a ** (4 - j) * b**j for j in range(5)] for a, b in interp], dtype=complex
    )
    values = np.array([cayley_hyperdet(list(point(a, b))) for a, b in interp])
    quartic = np.linalg.solve(matrix, values)
    qmax = float(np.max(np.abs(quartic)))
    det_is_zero = qmax <= tol * quart_scale
    if tol * quart_scale * 1e-3 < qmax < tol * quart_scale * 1e4:
        notes.append("marginal identically-zero test for the hyperdet form")

    # Quadratic minor coefficients per block qubit, three evaluations each.
    minor_forms: dict[int, list[np.ndarray]] = {}
    k_all_zero: dict[int, bool] = {}
    for k in (1, 2, 3):
        mats = {
            (a, b): flattening(point(a, b), k)
            for a, b in ((1.0, 0.0), (0.0, 1.0), (1.0, 1.0))
        }
        forms = []
        for i in range(4):
            for j in range(i + 1, 4):
                vals = {
                    ab: m[0, i] * m[1, j] - m[0, j] * m[1, i] for ab, m in mats.items()
                }
                alpha = vals[(1.0, 0.0)]
                gamma = vals[(0.0, 1.0)]
                beta = vals[(1.0, 1.0)] - alpha - gamma
                forms.append(np.array([alpha, beta, gamma]))
        minor_forms[k] = forms
        peaks = [float(np.max(np.abs(f))) for f in forms]
        k_all_zero[k] = max(peaks) <= tol * quad_scale
        for peak in peaks:
            if tol * quad_scale * 1e-3 < peak < tol * quad_scale * 1e4:
                notes.append("marginal identically-zero test for a minor form")
    all_minors_zero = all(k_all_zero.values())

    # Candidate special points: minor roots first (best conditioned), then
    # quartic roots; cluster them on the projective line.  A tag remembers
    # where a candidate came from, because a point counts as W exactly when
    # the (nonzero) hyperdet form has a root there.
    candidates: list[tuple[np.ndarray, str]] = []
    for k in (1, 2, 3):
        if k_all_zero[k]:
            continue
        for idx, form in enumerate(minor_forms[k]):
            if float(np.max(np.abs(form))) <= tol * quad_scale:
                continue
            for pt in _projective_roots(form, notes, f"minor {k}.{idx}"):
                candidates.append((pt, "minor"))
    if not det_is_zero:
        # A multiplicity-m quartic root scatters into an m-gon of numeric
        # copies (radius up to ~eps**(1/4)); group copies coarsely and use
        # the phase-aligned centroid, which cancels the scatter.
        raw = _projective_roots(quartic, notes, "hyperdet form")
        groups: list[list[np.ndarray]] = []
        for pt in raw:
            for group in groups:
                if _chordal(group[0], pt) <= _QUARTIC_GROUP_RADIUS:
                    group.append(pt)
                    break
            else:
                groups.append([pt])
        for group in groups:
            diameter = max(
                (_chordal(u, v) for u in group for v in group), default=0.0
            )
            if diameter > 1e-4 and len(group) <= 2:
                notes.append("scattered det-root group of low multiplicity")
            if diameter > 1.2e-3:
                notes.append("det-root group wider than any multiplicity blob")
            candidates.append((_aligned_centroid(group), "quartic"))

    clusters: list[dict] = []
    for cand, tag in candidates:
        for cluster in clusters:
            if _chordal(cluster["members"][0], cand) <= _CLUSTER_RADIUS:
                cluster["members"].append(cand)
                cluster["tags"].add(tag)
                break
        else:
            clusters.append({"members": [cand], "tags": {tag}})

    # Classify each cluster by the best member per measurement: the most
    # accurate member sits closest to the true root, so minima win.
    n_product = 0
    n_bisep = [0, 0, 0]
    n_w = 0
    for cluster in clusters:
        per_member = [measurements(m[0] * v0 + m[1] * v1) for m in cluster["members"]]
        ratios = [min(pm[0][i] for pm in per_member) for i in range(3)]
        cluster_flags: list[str] = []
        rank_one = rank_pattern(ratios, cluster_flags)
        kind = None
        if len(rank_one) == 3:
            kind = "product"
        elif len(rank_one) == 2:
            cluster_flags.append("two rank-one flattenings at a single point")
            kind = "product"
        elif len(rank_one) == 1:
            kind = ("bisep", rank_one[0])
        elif "quartic" in cluster["tags"] and not det_is_zero:
            kind = "w"
        cluster["kind"] = kind  # None: generic point, not counted
        if kind == "product":
            n_product += 1
        elif kind == "w":
            n_w += 1
        elif isinstance(kind, tuple):
            n_bisep[kind[1] - 1] += 1
        # Conditioning worries only matter where they can change a count.
        if kind is not None:
            notes.extend(cluster_flags)
            diameter = max(
                (_chordal(u, v) for u in cluster["members"] for v in cluster["members"]),
                default=0.0,
            )
            if diameter > 0.2 * _CLUSTER_RADIUS:
                notes.append("wide root cluster at a counted point")
    for i in range(len(clusters)):
        for j in range(i + 1, len(clusters)):
            if clusters[i]["kind"] is None or clusters[j]["kind"] is None:
                continue
            near = _chordal(clusters[i]["members"][0], clusters[j]["members"][0])
            if near <= _NEAR_CLUSTER:
                notes.append("two counted root clusters nearly coincide")

    # Generic type from random samples.
    rng = np.random.default_rng(seed)
    tallies: dict[tuple, int] = {}
    for _ in range(samples):
        a = complex(rng.standard_normal(), rng.standard_normal())
        b = complex(rng.standard_normal(), rng.standard_normal())
        ratios, det = measurements(point(a, b))
        key = classify_sample(ratios, det)
        tallies[key] = tallies.get(key, 0) + 1
    majority, hits = max(tallies.items(), key=lambda kv: kv[1])
    agreement = hits / samples
    if agreement < 0.99:
        notes.append(f"generic samples disagree (top share {agreement:.2f})")

    kind_map = {
        "product": PointType.PRODUCT,
        "bisep": PointType.BISEPARABLE,
        "w": PointType.W,
        "ghz": PointType.GHZ,
    }
    generic_type = kind_map[majority[0]]
    generic_k = majority[1]

    # Cross-checks between the sampled generic type and the zero patterns.
    if det_is_zero and generic_type is PointType.GHZ:
        notes.append("hyperdet form vanishes but samples look GHZ")
    if not det_is_zero and generic_type is not PointType.GHZ:
        notes.append("hyperdet form survives but samples are degenerate")
    if all_minors_zero and generic_type is not PointType.PRODUCT:
        notes.append("all minors vanish but samples are not product")
    if generic_type is PointType.BISEPARABLE and not k_all_zero.get(generic_k or 0, False):
        notes.append("biseparable samples without an identically-zero locus")

    if all_minors_zero:
        product_points: RootCount = INFINITE
        bisep_counts: list[RootCount] = [0, 0, 0]
        w_points: RootCount = 0
    else:
        product_points = n_product
        bisep_counts = [
            INFINITE if k_all_zero[k] else n_bisep[k - 1] for k in (1, 2, 3)
        ]
        if det_is_zero:
            w_points = INFINITE if generic_type is PointType.W else 0
        else:
            w_points = n_w

    return NumericInventory(
        product_points=product_points,
        biseparable_points=(bisep_counts[0], bisep_counts[1], bisep_counts[2]),
        w_points=w_points,
        generic_type=generic_type,
        generic_bisep_k=generic_k,
        generic_agreement=agreement,
        ill_conditioned=bool(notes),
        notes=tuple(dict.fromkeys(notes)),
    )
