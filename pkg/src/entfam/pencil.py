"""Census of SLOCC types on a projective line of 3-qubit states.

A rank-2 flattening of a 4-qubit state spans two 3-qubit vectors phi0, phi1;
the points of the span are a*phi0 + b*phi1 for (a : b) on the projective
line.  Every classification question about a point is polynomial in (a, b):

* qubit k factors out  <=>  the six 2x2 minors of the k-flattening vanish
  (six quadratic forms; their gcd is the k-biseparable locus);
* the point is fully separable  <=>  all 18 minors vanish (gcd again);
* the point is not GHZ  <=>  the hyperdeterminant vanishes (a quartic form).

Counting distinct roots of these loci, with coincidences removed via gcds of
squarefree parts, yields the exact census: how many product points, how many
biseparable points per factored qubit, how many W points, and the type of
the generic point.  The census is reduced to a two-slot family label by
picking the two lowest types that can fill a linearly independent spanning
pair, under the degeneration order 000 < 0Psi < W < GHZ.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .errors import InternalCheckError, StateError
from .forms import (
    INFINITE,
    BinaryForm,
    RootCount,
    add_counts,
    count_at_least,
    distinct_root_count,
    form_gcd,
    is_infinite,
    squarefree_part,
)
from .scalars import GaussianRational
from .slocc_classes import Class3, cayley_hyperdet
from .states import ExactMatrix, matrix_rank, solve_linear_system

BLOCK_QUBITS = (1, 2, 3)

# Column pairs of a 2x4 flattening, in lexicographic order.
_MINOR_COLUMNS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


class PointType(enum.Enum):
    """SLOCC type of a single pencil point, ordered by degeneration."""

    PRODUCT = ("000", 0)
    BISEPARABLE = ("0Psi", 1)
    W = ("W", 2)
    GHZ = ("GHZ", 3)

    @property
    def text(self) -> str:
        return self.value[0]

    @property
    def order(self) -> int:
        return self.value[1]


TYPE_ORDER = (PointType.PRODUCT, PointType.BISEPARABLE, PointType.W, PointType.GHZ)


@dataclass(frozen=True)
class Pencil:
    """Two linearly independent 3-qubit amplitude vectors spanning a line."""

    phi0: tuple
    phi1: tuple

    def __post_init__(self):
        phi0 = tuple(GaussianRational.coerce(x) for x in self.phi0)
        phi1 = tuple(GaussianRational.coerce(x) for x in self.phi1)
        object.__setattr__(self, "phi0", phi0)
        object.__setattr__(self, "phi1", phi1)
        if len(phi0) != 8 or len(phi1) != 8:
            raise StateError("pencil vectors must have 8 amplitudes (3 qubits)")
        if matrix_rank(ExactMatrix(2, 8, phi0 + phi1)) != 2:
            raise StateError("pencil vectors must be linearly independent")


@dataclass(frozen=True)
class PencilInventory:
    """Exact census of point types on a pencil's projective line.

    Counts are distinct projective points; biseparable counts exclude fully
    separable points, and w_points excludes both.  generic_bisep_k records
    which qubit factors when the generic point is biseparable.
    """

    product_points: RootCount
    biseparable_points: tuple[RootCount, RootCount, RootCount]
    w_points: RootCount
    generic_type: PointType
    generic_bisep_k: int | None = None

    def biseparable(self, k: int) -> RootCount:
        return self.biseparable_points[k - 1]

    def biseparable_total(self) -> RootCount:
        return add_counts(*self.biseparable_points)

    def to_json_dict(self) -> dict:
        def enc(c: RootCount):
            return "inf" if is_infinite(c) else c

        generic = self.generic_type.text
        if self.generic_type is PointType.BISEPARABLE and self.generic_bisep_k:
            generic = f"0_{self.generic_bisep_k}Psi"
        return {
            "product_points": enc(self.product_points),
            "biseparable_points": {
                str(k): enc(self.biseparable(k)) for k in BLOCK_QUBITS
            },
            "w_points": enc(self.w_points),
            "generic_type": generic,
        }


# -- family labels ----------------------------------------------------------------


@dataclass(frozen=True)
class ProductFamily:
    """Label for a rank-1 coefficient matrix: the singled qubit factors out."""

    cls: Class3

    def text(self, strict_k: bool = False) -> str:
        return f"product:{self.cls.value}"


@dataclass(frozen=True)
class SpanFamily:
    """Two-slot span label; k1/k2 give the factored qubit of 0Psi slots."""

    t1: PointType
    t2: PointType
    k1: int | None = None
    k2: int | None = None

    def __post_init__(self):
        if (self.t1.order, self.k1 or 0) > (self.t2.order, self.k2 or 0):
            raise InternalCheckError("span label slots out of order")

    def text(self, strict_k: bool = False) -> str:
        return "span{%s,%s}" % (
            _slot_text(self.t1, self.k1, strict_k),
            _slot_text(self.t2, self.k2, strict_k),
        )


def _slot_text(t: PointType, k: int | None, strict_k: bool) -> str:
    if strict_k and t is PointType.BISEPARABLE and k is not None:
        return f"0_{k}Psi"
    return t.text


FamilyLabel = Union[ProductFamily, SpanFamily]


def label_text(label: FamilyLabel, strict_k: bool = False) -> str:
    return label.text(strict_k)


def label_key(label: FamilyLabel, strict_k: bool = False):
    """Comparison key; collapses 0Psi across k unless strict_k is set."""
    if isinstance(label, ProductFamily):
        name = label.cls.value
        if not strict_k and label.cls.bisep_k is not None:
            name = "0Psi"
        return ("product", name)
    k1 = label.k1 if strict_k else None
    k2 = label.k2 if strict_k else None
    return ("span", label.t1.text, k1, label.t2.text, k2)


# -- loci -------------------------------------------------------------------------


def _flattening_form_rows(p: Pencil, k: int) -> list[list[BinaryForm]]:
    """2x4 flattening of a*phi0 + b*phi1 along block qubit k, entries linear forms."""
    rest = tuple(q for q in BLOCK_QUBITS if q != k)
    rows = []
    for r in range(2):
        row = []
        for c in range(4):
            index = r << (3 - k)
            index |= ((c >> 1) & 1) << (3 - rest[0])
            index |= (c & 1) << (3 - rest[1])
            row.append(BinaryForm([p.phi0[index], p.phi1[index]]))
        rows.append(row)
    return rows


def flattening_minor_forms(p: Pencil, k: int) -> list[BinaryForm]:
    """The six 2x2 minors of the k-flattening, quadratic forms in (a, b)."""
    if k not in BLOCK_QUBITS:
        raise StateError(f"block qubit must be 1, 2 or 3, got {k}")
    m = _flattening_form_rows(p, k)
    return [
        m[0][i] * m[1][j] - m[0][j] * m[1][i]
        for i, j in _MINOR_COLUMNS
    ]


def _gcd_of(forms) -> BinaryForm:
    """Fold gcd over a list of forms; the zero form if all vanish identically."""
    acc = BinaryForm.zero()
    for f in forms:
        if not f.is_zero:
            acc = f.normalized() if acc.is_zero else form_gcd(acc, f)
    return acc


def biseparable_locus(p: Pencil, k: int) -> BinaryForm:
    """Form whose roots are exactly the points where block qubit k factors out.

    Identically zero when every point of the line is k-separable.
    """
    return _gcd_of(flattening_minor_forms(p, k))


def product_locus(p: Pencil) -> BinaryForm:
    """Form whose roots are the fully separable points (all 18 minors vanish).

    Folding the per-qubit loci is the same gcd as folding all 18 minors
    directly, since each locus is already the gcd of its six.
    """
    return _gcd_of(biseparable_locus(p, k) for k in BLOCK_QUBITS)


def det_form(p: Pencil) -> BinaryForm:
    """Hyperdeterminant of a*phi0 + b*phi1 as an exact quartic form.

    Computed twice, by direct polynomial expansion and by interpolation at
    five rational points, and the two results are required to agree.
    """
    amp_forms = [BinaryForm([p.phi0[i], p.phi1[i]]) for i in range(8)]
    expanded = cayley_hyperdet(amp_forms)
    if not expanded.is_zero and expanded.degree != 4:
        raise InternalCheckError("hyperdeterminant expansion lost homogeneity")

    points = [(1, 0), (0, 1), (1, 1), (1, 2), (2, 1)]
    rows = []
    rhs = []
    for a, b in points:
        ag = GaussianRational.coerce(a)
        bg = GaussianRational.coerce(b)
        rows.append([ag ** (4 - j) * bg**j for j in range(5)])
        amps = [ag * p.phi0[i] + bg * p.phi1[i] for i in range(8)]
        rhs.append(cayley_hyperdet(amps))
    interpolated = BinaryForm(solve_linear_system(rows, rhs))
    if expanded != interpolated:
        raise InternalCheckError(
            "hyperdeterminant expansion and interpolation disagree: "
            f"{expanded} vs {interpolated}"
        )
    return expanded


# -- census and labeling ------------------------------------------------------------


def _shared_root_count(f: BinaryForm, g: BinaryForm) -> RootCount:
    """Distinct projective points where both nonzero forms vanish."""
    common = form_gcd(squarefree_part(f), squarefree_part(g))
    return distinct_root_count(common)


def inventory(p: Pencil) -> PencilInventory:
    """Exact census of the pencil: counts per point type plus the generic type.

    Root coincidences between loci are removed with gcds of squarefree
    parts; no root value is ever extracted.  An identically-zero locus minus
    a finite set counts as infinitely many points.
    """
    loci = {k: biseparable_locus(p, k) for k in BLOCK_QUBITS}
    product = product_locus(p)
    det = det_form(p)

    product_points = distinct_root_count(product)

    bisep: list[RootCount] = []
    for k in BLOCK_QUBITS:
        locus = loci[k]
        if locus.is_zero:
            # Every point is k-separable; only a whole line of product
            # points can absorb them all.
            bisep.append(0 if product.is_zero else INFINITE)
        else:
            if product.is_zero:
                raise InternalCheckError(
                    "product locus vanishes identically but a biseparable locus does not"
                )
            count = distinct_root_count(locus)
            assert isinstance(count, int)
            bisep.append(count - _shared_root_count(locus, product))

    if det.is_zero:
        if product.is_zero:
            generic: PointType = PointType.PRODUCT
            generic_k = None
        else:
            zero_ks = [k for k in BLOCK_QUBITS if loci[k].is_zero]
            if len(zero_ks) == 1:
                generic = PointType.BISEPARABLE
                generic_k = zero_ks[0]
            elif not zero_ks:
                generic = PointType.W
                generic_k = None
            else:
                raise InternalCheckError(
                    f"two biseparable loci vanish identically (k={zero_ks}) "
                    "without a product line"
                )
        w_points: RootCount = INFINITE if generic is PointType.W else 0
    else:
        generic = PointType.GHZ
        generic_k = None
        if any(loci[k].is_zero for k in BLOCK_QUBITS):
            raise InternalCheckError(
                "biseparable locus vanishes identically but the det form does not"
            )
        det_sf = squarefree_part(det)
        union = squarefree_part(
            squarefree_part(loci[1]) * squarefree_part(loci[2]) * squarefree_part(loci[3])
        )
        w_count = distinct_root_count(det_sf)
        assert isinstance(w_count, int)
        w_points = w_count - _shared_root_count(det_sf, union)

    inv = PencilInventory(
        product_points=product_points,
        biseparable_points=(bisep[0], bisep[1], bisep[2]),
        w_points=w_points,
        generic_type=generic,
        generic_bisep_k=generic_k,
    )
    _check_inventory(inv)
    return inv


def _check_inventory(inv: PencilInventory) -> None:
    def bounded(c: RootCount, limit: int) -> bool:
        return is_infinite(c) or 0 <= c <= limit

    ok = (
        bounded(inv.product_points, 2)
        and all(bounded(c, 2) for c in inv.biseparable_points)
        and bounded(inv.w_points, 4)
    )
    if not ok:
        raise InternalCheckError(f"census out of bounds: {inv}")
    if inv.generic_type is PointType.GHZ and (
        is_infinite(inv.product_points)
        or any(is_infinite(c) for c in inv.biseparable_points)
        or is_infinite(inv.w_points)
    ):
        raise InternalCheckError(f"GHZ-generic pencil with an infinite locus: {inv}")


def family_label(inv: PencilInventory) -> SpanFamily:
    """Reduce a census to a span label: the two lowest independently choosable types.

    The generic type always supplies infinitely many points.  The first slot
    takes the minimal type with at least one point; if that type has two or
    more points (two distinct projective points are always linearly
    independent), it fills both slots, otherwise the second slot takes the
    next-lowest type with a point to offer.  Biseparable slots record which
    qubit factors, chosen in increasing qubit order.
    """
    psi_remaining = list(inv.biseparable_points)

    def take_psi_k() -> int:
        for idx, c in enumerate(psi_remaining):
            if count_at_least(c, 1):
                if not is_infinite(c):
                    psi_remaining[idx] = c - 1
                return idx + 1
        raise InternalCheckError("no biseparable point left to take")

    counts: dict[PointType, RootCount] = {
        PointType.PRODUCT: inv.product_points,
        PointType.BISEPARABLE: inv.biseparable_total(),
        PointType.W: inv.w_points,
        PointType.GHZ: INFINITE if inv.generic_type is PointType.GHZ else 0,
    }

    t1 = next((t for t in TYPE_ORDER if count_at_least(counts[t], 1)), None)
    if t1 is None:
        raise InternalCheckError("census lists no points at all")
    k1 = take_psi_k() if t1 is PointType.BISEPARABLE else None
    if count_at_least(counts[t1], 2):
        t2 = t1
    else:
        t2 = next(
            (t for t in TYPE_ORDER if t is not t1 and count_at_least(counts[t], 1)),
            None,
        )
        if t2 is None:
            raise InternalCheckError("census offers no second independent point")
    k2 = take_psi_k() if t2 is PointType.BISEPARABLE else None
    return SpanFamily(t1, t2, k1, k2)
