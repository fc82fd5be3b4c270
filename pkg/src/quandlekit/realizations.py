"""Concrete smooth quandle families behind one record-of-callables interface.

Every realization packages a parametrized operation ``op(x, t, y)`` together
with the sampler, metric and tolerance that the verification engine needs.
Matrix realizations conjugate by a matrix exponential (skew convention
``e^{itX}`` on Hermitian elements, plain convention ``e^{tX}`` on arbitrary
ones), the sphere realization rotates unit 3-vectors, the convex realizations
mix affinely, and the union realization glues a 1-dimensional rotation
algebra onto the plane it acts on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import numpy as np

from .linalg import (
    as_matrix,
    commutator,
    conjugate_by_exp,
    hermitize,
    matrix_from_json,
    matrix_to_json,
    max_abs,
    random_hermitian,
    random_complex,
    require_hermitian,
    spectrum,
)

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=np.complex128)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128)

#: Spectrum closure tolerance for the fixed-spectrum carrier.
SPECTRUM_TOL = 1e-8
#: Minimum pairwise gap between fixed-spectrum eigenvalues.
SPECTRUM_GAP = 1e-6
#: How closely a sphere point must sit on the unit sphere.
UNIT_TOL = 1e-12

REALIZATION_NAMES = (
    "matrix-hermitian",
    "matrix-general",
    "bloch",
    "convex-flow",
    "convex-spindle",
    "fixed-spectrum",
    "union",
)


@dataclass(frozen=True)
class Realization:
    """A carrier with a real-parameter operation and its verification hooks.

    ``op(x, t, y)`` is x acting on y for time t; for non-family realizations
    (``family`` false) the operation is fixed and t is ignored.  ``metric``
    is the distance all tolerances refer to.  ``vector_carrier`` says whether
    elements subtract and divide by scalars (needed for difference
    quotients).  ``generator`` maps an element to the plain-convention matrix
    generator of its flow, when one exists.
    """

    name: str
    carrier: str
    op: Callable[[Any, float, Any], Any]
    metric: Callable[[Any, Any], float]
    sample: Callable[[np.random.Generator], Any]
    default_tolerance: float
    family: bool = True
    vector_carrier: bool = True
    analytic_bracket: Optional[Callable[[Any, Any], Any]] = None
    tangent_norm: Optional[Callable[[Any], float]] = None
    generator: Optional[Callable[[Any], np.ndarray]] = None
    decode: Optional[Callable[[Any], Any]] = None
    encode: Optional[Callable[[Any], Any]] = None
    encode_tangent: Optional[Callable[[Any], Any]] = None
    flat_labels: Optional[Callable[[Any], list[str]]] = None
    flatten: Optional[Callable[[Any], list[float]]] = None
    params: dict = field(default_factory=dict)


class UnionElement:
    """Tagged element of the algebra-plus-plane union carrier.

    ``part`` is "algebra" (value: real scale of the planar rotation
    generator) or "space" (value: 2-vector).
    """

    __slots__ = ("part", "value")

    def __init__(self, part: str, value):
        if part not in ("algebra", "space"):
            raise ValueError(f"part must be 'algebra' or 'space', got {part!r}")
        if part == "algebra":
            value = float(value)
            if not math.isfinite(value):
                raise ValueError("algebra value must be finite")
        else:
            value = np.asarray(value, dtype=np.float64)
            if value.shape != (2,) or not np.all(np.isfinite(value)):
                raise ValueError("space value must be a finite 2-vector")
        object.__setattr__(self, "part", part)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("UnionElement is immutable")

    def __repr__(self):
        return f"UnionElement({self.part!r}, {self.value!r})"


# ---------------------------------------------------------------------------
# raw operations


def op_matrix_skew(x: np.ndarray, t: float, y: np.ndarray) -> np.ndarray:
    """``e^{itX} Y e^{-itX}`` — adjoint flow of a Hermitian generator."""
    return conjugate_by_exp(1j * x, t, y)


def op_matrix_plain(x: np.ndarray, t: float, y: np.ndarray) -> np.ndarray:
    """``e^{tX} Y e^{-tX}`` on the full matrix algebra."""
    return conjugate_by_exp(x, t, y)


def bloch_rotate(x: np.ndarray, t: float, y: np.ndarray) -> np.ndarray:
    """Rotate unit vector y by angle t about axis x, right-handed.

    Rodrigues: y cos t + (x × y) sin t + x (x·y)(1 − cos t), renormalized so
    repeated application cannot drift off the sphere.
    """
    c, s = math.cos(t), math.sin(t)
    r = y * c + np.cross(x, y) * s + x * float(x @ y) * (1.0 - c)
    return r / float(np.linalg.norm(r))


def op_convex_flow(x: np.ndarray, t: float, y: np.ndarray) -> np.ndarray:
    """Exponential relaxation of y toward x: (1 − e^{−t})x + e^{−t}y."""
    w = math.exp(-t)
    return (1.0 - w) * x + w * y


def planar_rotation(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]], dtype=np.float64)


def op_union(x: UnionElement, t: float, y: UnionElement) -> UnionElement:
    """Three cases: space elements act trivially; the abelian algebra acts
    trivially on itself; an algebra element of scale a rotates a plane point
    by angle t·a."""
    if x.part == "space" or y.part == "algebra":
        return y
    return UnionElement("space", planar_rotation(t * x.value) @ y.value)


def bloch_embedding(p: np.ndarray) -> np.ndarray:
    """Rank-1 projection (I + p·σ)/2 attached to a sphere point."""
    p = np.asarray(p, dtype=np.float64)
    sigma = p[0] * PAULI_X + p[1] * PAULI_Y + p[2] * PAULI_Z
    return (np.eye(2, dtype=np.complex128) + sigma) / 2.0


def bloch_generator(p: np.ndarray) -> np.ndarray:
    """Hermitian generator −p·σ/2 whose skew flow rotates the sphere about
    axis p with the same orientation as `bloch_rotate`."""
    p = np.asarray(p, dtype=np.float64)
    return -(p[0] * PAULI_X + p[1] * PAULI_Y + p[2] * PAULI_Z) / 2.0


# ---------------------------------------------------------------------------
# metrics, codecs, flatteners


def _matrix_metric(a, b) -> float:
    return max_abs(np.asarray(a) - np.asarray(b))


def _euclidean_metric(a, b) -> float:
    return float(np.linalg.norm(np.asarray(a, dtype=np.float64) - np.asarray(b, dtype=np.float64)))


def _union_metric(a: UnionElement, b: UnionElement) -> float:
    if a.part != b.part:
        return math.inf
    if a.part == "algebra":
        return abs(a.value - b.value)
    return float(np.linalg.norm(a.value - b.value))


def _decode_vector(obj, dim: int) -> np.ndarray:
    v = np.asarray(obj, dtype=np.float64)
    if v.shape != (dim,):
        raise ValueError(f"expected a length-{dim} array of reals")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    return v


def _encode_vector(v: np.ndarray) -> list:
    return [float(c) for c in v]


def _matrix_labels(a: np.ndarray) -> list[str]:
    n = a.shape[0]
    labels = []
    for i in range(n):
        for j in range(n):
            labels.append(f"re_{i}{j}")
            labels.append(f"im_{i}{j}")
    return labels


def _matrix_flatten(a: np.ndarray) -> list[float]:
    out = []
    for v in np.asarray(a, dtype=np.complex128).ravel():
        out.append(float(v.real))
        out.append(float(v.imag))
    return out


# ---------------------------------------------------------------------------
# samplers


def _sample_unit_sphere(rng: np.random.Generator) -> np.ndarray:
    while True:
        v = rng.normal(size=3)
        n = float(np.linalg.norm(v))
        if n > 1e-3:
            return v / n


def _sample_general_matrix(rng: np.random.Generator, dim: int) -> np.ndarray:
    # Kept small so e^{±3X} cannot amplify rounding noise anywhere near the
    # 1e-8 verification tolerance.
    m = random_complex(rng, dim)
    return 0.5 * m / max(max_abs(m), 1e-9)


def _sample_box(rng: np.random.Generator, dim: int) -> np.ndarray:
    return rng.uniform(0.0, 1.0, size=dim)


def _sample_simplex(rng: np.random.Generator, dim: int) -> np.ndarray:
    w = -np.log(rng.uniform(1e-12, 1.0, size=dim))
    return w / float(np.sum(w))


def _sample_union(rng: np.random.Generator) -> UnionElement:
    if rng.random() < 0.5:
        while True:
            a = rng.uniform(-1.0, 1.0)
            if abs(a) >= 0.05:
                return UnionElement("algebra", a)
    while True:
        p = rng.uniform(-1.0, 1.0, size=2)
        if float(np.linalg.norm(p)) >= 0.05:
            return UnionElement("space", p)


# ---------------------------------------------------------------------------
# factories


def _check_dim(dim: int, low: int = 1, high: int = 16) -> int:
    dim = int(dim)
    if not low <= dim <= high:
        raise ValueError(f"dim must be in [{low}, {high}], got {dim}")
    return dim


def matrix_hermitian(dim: int = 2) -> Realization:
    """Hermitian matrices under the skew flow e^{itX} Y e^{-itX}."""
    dim = _check_dim(dim)

    def decode(obj):
        return require_hermitian(matrix_from_json(obj))

    return Realization(
        name="matrix-hermitian",
        carrier=f"{dim}x{dim} Hermitian matrices",
        op=op_matrix_skew,
        metric=_matrix_metric,
        sample=lambda rng: random_hermitian(rng, dim, unit_norm=True),
        default_tolerance=1e-8,
        analytic_bracket=lambda x, y: 1j * commutator(x, y),
        tangent_norm=max_abs,
        generator=lambda x: 1j * x,
        decode=decode,
        encode=matrix_to_json,
        encode_tangent=matrix_to_json,
        flat_labels=_matrix_labels,
        flatten=_matrix_flatten,
        params={"dim": dim},
    )


def matrix_general(dim: int = 2) -> Realization:
    """All complex matrices under the plain flow e^{tX} Y e^{-tX}."""
    dim = _check_dim(dim)
    return Realization(
        name="matrix-general",
        carrier=f"{dim}x{dim} complex matrices",
        op=op_matrix_plain,
        metric=_matrix_metric,
        sample=lambda rng: _sample_general_matrix(rng, dim),
        default_tolerance=1e-8,
        analytic_bracket=commutator,
        tangent_norm=max_abs,
        generator=lambda x: x,
        decode=matrix_from_json,
        encode=matrix_to_json,
        encode_tangent=matrix_to_json,
        flat_labels=_matrix_labels,
        flatten=_matrix_flatten,
        params={"dim": dim},
    )


def bloch() -> Realization:
    """Unit sphere with x acting on y by rotation about axis x."""

    def decode(obj):
        v = _decode_vector(obj, 3)
        if abs(float(np.linalg.norm(v)) - 1.0) > UNIT_TOL:
            raise ValueError("sphere point must be a unit 3-vector")
        return v

    return Realization(
        name="bloch",
        carrier="unit vectors on the 2-sphere",
        op=bloch_rotate,
        metric=_euclidean_metric,
        sample=_sample_unit_sphere,
        default_tolerance=1e-8,
        analytic_bracket=lambda x, y: np.cross(x, y),
        tangent_norm=lambda v: float(np.linalg.norm(v)),
        decode=decode,
        encode=_encode_vector,
        encode_tangent=_encode_vector,
        flat_labels=lambda v: ["x", "y", "z"],
        flatten=lambda v: [float(c) for c in v],
    )


def convex_flow(dim: int = 3) -> Realization:
    """d-space with exponential relaxation toward the acting point."""
    dim = _check_dim(dim)
    return Realization(
        name="convex-flow",
        carrier=f"{dim}-vectors under affine relaxation",
        op=op_convex_flow,
        metric=_euclidean_metric,
        sample=lambda rng: rng.uniform(-1.0, 1.0, size=dim),
        default_tolerance=1e-12,
        analytic_bracket=lambda x, y: x - y,
        tangent_norm=lambda v: float(np.linalg.norm(v)),
        decode=lambda obj: _decode_vector(obj, dim),
        encode=_encode_vector,
        encode_tangent=_encode_vector,
        flat_labels=lambda v: [f"v{i}" for i in range(dim)],
        flatten=lambda v: [float(c) for c in v],
        params={"dim": dim},
    )


def convex_spindle(bias: float = 0.5, dim: int = 3, body: str = "box") -> Realization:
    """Fixed-bias mixing x ▷ y = (1−s)x + sy on a convex body.

    Not a t-family: the parameter passed to op is ignored.  Left translations
    are generally not bijections on the body, so this is a spindle only.
    """
    bias = float(bias)
    if not 0.0 <= bias <= 1.0:
        raise ValueError(f"bias must lie in [0, 1], got {bias}")
    dim = _check_dim(dim)
    if body not in ("box", "simplex"):
        raise ValueError(f"body must be 'box' or 'simplex', got {body!r}")
    sampler = _sample_box if body == "box" else _sample_simplex

    def op(x, t, y):
        return (1.0 - bias) * x + bias * y

    return Realization(
        name="convex-spindle",
        carrier=f"{dim}-vectors in the unit {body}",
        op=op,
        metric=_euclidean_metric,
        sample=lambda rng: sampler(rng, dim),
        default_tolerance=1e-12,
        family=False,
        decode=lambda obj: _decode_vector(obj, dim),
        encode=_encode_vector,
        flat_labels=lambda v: [f"v{i}" for i in range(dim)],
        flatten=lambda v: [float(c) for c in v],
        params={"bias": bias, "dim": dim, "body": body},
    )


def fixed_spectrum(eigenvalues) -> Realization:
    """Hermitian matrices with one shared spectrum, closed under the skew
    flow; every op output is checked to still carry that spectrum."""
    spec = np.sort(np.asarray(eigenvalues, dtype=np.float64))
    if spec.ndim != 1 or spec.size < 1:
        raise ValueError("eigenvalues must be a nonempty 1-d sequence")
    if not np.all(np.isfinite(spec)):
        raise ValueError("eigenvalues must be finite")
    if spec.size > 1 and float(np.min(np.diff(spec))) < SPECTRUM_GAP:
        raise ValueError(f"eigenvalue gaps must be >= {SPECTRUM_GAP}")
    dim = _check_dim(spec.size)
    base = np.diag(spec.astype(np.complex128))

    def check(a: np.ndarray) -> np.ndarray:
        drift = float(np.max(np.abs(spectrum(a) - spec)))
        if drift > SPECTRUM_TOL:
            raise ArithmeticError(
                f"spectrum drifted by {drift:.3e} (tolerance {SPECTRUM_TOL:.0e})"
            )
        return a

    def op(x, t, y):
        return check(hermitize(op_matrix_skew(x, t, y)))

    def sample(rng):
        h = random_hermitian(rng, dim, unit_norm=True)
        return hermitize(conjugate_by_exp(1j * h, 1.0, base))

    def decode(obj):
        return check(require_hermitian(matrix_from_json(obj)))

    return Realization(
        name="fixed-spectrum",
        carrier=f"Hermitian {dim}x{dim} matrices with spectrum {spec.tolist()}",
        op=op,
        metric=_matrix_metric,
        sample=sample,
        default_tolerance=1e-8,
        analytic_bracket=lambda x, y: 1j * commutator(x, y),
        tangent_norm=max_abs,
        generator=lambda x: 1j * x,
        decode=decode,
        encode=matrix_to_json,
        encode_tangent=matrix_to_json,
        flat_labels=_matrix_labels,
        flatten=_matrix_flatten,
        params={"spectrum": [float(v) for v in spec]},
    )


def union_lie() -> Realization:
    """The 1-d rotation algebra glued to the plane it rotates.

    Algebra elements act on the plane and fix each other; plane points fix
    everything.  The smallest smooth example where "x fixes y" and "y fixes
    x" come apart.
    """

    def decode(obj):
        if not isinstance(obj, dict) or "part" not in obj or "value" not in obj:
            raise ValueError('union element JSON needs "part" and "value"')
        return UnionElement(obj["part"], obj["value"])

    def encode(e: UnionElement):
        value = e.value if e.part == "algebra" else [float(c) for c in e.value]
        return {"part": e.part, "value": value}

    return Realization(
        name="union",
        carrier="rotation-algebra scalars plus plane points",
        op=op_union,
        metric=_union_metric,
        sample=_sample_union,
        default_tolerance=1e-12,
        vector_carrier=False,
        decode=decode,
        encode=encode,
    )


def corrupted_flow(dim: int = 3) -> Realization:
    """Negative control: returns y + 1e-3·x, which is no kind of quandle.

    Exists so the verifier can be shown to fail loudly; not reachable from
    the command line.
    """
    dim = _check_dim(dim)
    return Realization(
        name="corrupted",
        carrier=f"{dim}-vectors under a deliberately broken operation",
        op=lambda x, t, y: y + 1e-3 * x,
        metric=_euclidean_metric,
        sample=lambda rng: rng.uniform(-1.0, 1.0, size=dim),
        default_tolerance=1e-8,
        decode=lambda obj: _decode_vector(obj, dim),
        encode=_encode_vector,
        params={"dim": dim},
    )


def make_realization(
    name: str,
    *,
    dim: int = 2,
    bias: float = 0.5,
    body: str = "box",
    eigenvalues=None,
) -> Realization:
    """Build a realization from its command-line name."""
    if name == "matrix-hermitian":
        return matrix_hermitian(dim)
    if name == "matrix-general":
        return matrix_general(dim)
    if name == "bloch":
        return bloch()
    if name == "convex-flow":
        return convex_flow(dim)
    if name == "convex-spindle":
        return convex_spindle(bias, dim, body)
    if name == "fixed-spectrum":
        if eigenvalues is None:
            eigenvalues = [float(k) for k in range(1, dim + 1)]
        return fixed_spectrum(eigenvalues)
    if name == "union":
        return union_lie()
    raise ValueError(f"unknown realization {name!r}; choose from {REALIZATION_NAMES}")
