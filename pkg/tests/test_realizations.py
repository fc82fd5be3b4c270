"""Realization-level tests: pinned operation values, carrier closure,
convex identities, and the sphere-to-projection embedding."""

import math

import numpy as np
import pytest

import quandlekit as qk

EX = np.array([1.0, 0.0, 0.0])
EY = np.array([0.0, 1.0, 0.0])
EZ = np.array([0.0, 0.0, 1.0])


def family_realizations():
    return [
        qk.matrix_hermitian(2),
        qk.matrix_hermitian(3),
        qk.matrix_general(2),
        qk.matrix_general(4),
        qk.bloch(),
        qk.convex_flow(3),
        qk.fixed_spectrum([1.0, 2.0, 3.0]),
        qk.union_lie(),
    ]


# ---------------------------------------------------------------------------
# matrix realizations


def test_skew_op_at_zero_and_idempotency():
    rng = np.random.default_rng(42)
    r = qk.matrix_hermitian(3)
    x, y = r.sample(rng), r.sample(rng)
    assert r.metric(r.op(x, 0.0, y), y) == 0.0
    assert r.metric(r.op(x, 1.9, x), x) < 1e-12


def test_skew_quarter_turn_pin():
    out = qk.op_matrix_skew(qk.PAULI_Z, math.pi / 2, qk.PAULI_X)
    assert qk.max_abs(out + qk.PAULI_X) < 1e-12


def test_skew_outputs_stay_hermitian():
    rng = np.random.default_rng(1)
    r = qk.matrix_hermitian(4)
    for _ in range(25):
        x, y = r.sample(rng), r.sample(rng)
        t = float(rng.uniform(-3, 3))
        assert qk.is_hermitian(r.op(x, t, y), tol=1e-10)


def test_plain_op_matches_direct_exponentials():
    rng = np.random.default_rng(2)
    r = qk.matrix_general(3)
    x, y = r.sample(rng), r.sample(rng)
    t = 1.3
    want = qk.expm(t * x) @ y @ qk.expm(-t * x)
    assert qk.max_abs(r.op(x, t, y) - want) == 0.0


def test_inverse_law_within_1e9():
    rng = np.random.default_rng(3)
    for r in family_realizations():
        worst = 0.0
        for _ in range(50):
            x, y = r.sample(rng), r.sample(rng)
            t = float(rng.uniform(-3, 3))
            worst = max(worst, r.metric(r.op(x, -t, r.op(x, t, y)), y))
        assert worst <= 1e-9, r.name


# ---------------------------------------------------------------------------
# sphere realization


def test_bloch_rotation_pins():
    assert np.linalg.norm(qk.bloch_rotate(EZ, 2 * math.pi, EX) - EX) < 1e-12
    assert np.linalg.norm(qk.bloch_rotate(EZ, math.pi, EX) - (-EX)) < 1e-12
    # right-hand rule: a quarter turn about +z sends +x to +y
    assert np.linalg.norm(qk.bloch_rotate(EZ, math.pi / 2, EX) - EY) < 1e-12


def test_bloch_fixes_own_axis():
    rng = np.random.default_rng(4)
    r = qk.bloch()
    for _ in range(20):
        x = r.sample(rng)
        t = float(rng.uniform(-3, 3))
        assert np.linalg.norm(qk.bloch_rotate(x, t, x) - x) < 1e-12


def test_bloch_outputs_are_unit():
    rng = np.random.default_rng(5)
    r = qk.bloch()
    for _ in range(50):
        out = r.op(r.sample(rng), float(rng.uniform(-3, 3)), r.sample(rng))
        assert abs(np.linalg.norm(out) - 1.0) <= 1e-12


def test_bloch_small_time_moves_along_cross_product():
    rng = np.random.default_rng(6)
    r = qk.bloch()
    x, y = r.sample(rng), r.sample(rng)
    h = 1e-6
    drift = (r.op(x, h, y) - y) / h
    assert np.linalg.norm(drift - np.cross(x, y)) < 1e-5


def test_bloch_decode_requires_unit_vector():
    r = qk.bloch()
    assert np.allclose(r.decode([0.0, 0.0, 1.0]), EZ)
    with pytest.raises(ValueError):
        r.decode([0.0, 0.0, 1.1])
    with pytest.raises(ValueError):
        r.decode([1.0, 0.0])


# ---------------------------------------------------------------------------
# embedding


def test_embedding_pins():
    np.testing.assert_allclose(qk.bloch_embedding(EZ), np.diag([1.0, 0.0]), atol=1e-15)
    np.testing.assert_allclose(qk.bloch_embedding(-EZ), np.diag([0.0, 1.0]), atol=1e-15)


def test_embedding_is_rank_one_projection():
    rng = np.random.default_rng(7)
    r = qk.bloch()
    for _ in range(20):
        p = qk.bloch_embedding(r.sample(rng))
        assert qk.max_abs(p @ p - p) <= 1e-12
        assert abs(float(np.trace(p).real) - 1.0) <= 1e-12
        assert qk.is_hermitian(p)


def test_embedding_intertwines_rotation_and_conjugation():
    # embed(x >t y) = e^{it h(x)} embed(y) e^{-it h(x)} with h = bloch_generator
    rng = np.random.default_rng(8)
    r = qk.bloch()
    worst = 0.0
    for _ in range(100):
        x, y = r.sample(rng), r.sample(rng)
        t = float(rng.uniform(-3, 3))
        lhs = qk.bloch_embedding(r.op(x, t, y))
        rhs = qk.op_matrix_skew(qk.bloch_generator(x), t, qk.bloch_embedding(y))
        worst = max(worst, qk.max_abs(lhs - rhs))
    assert worst <= 1e-8


def test_generator_map_matches_rotation_derivative():
    # d/dt embed(x >t y) at 0 equals i[h(x), embed(y)]
    rng = np.random.default_rng(9)
    r = qk.bloch()
    x, y = r.sample(rng), r.sample(rng)
    h = 1e-6
    lhs = (qk.bloch_embedding(r.op(x, h, y)) - qk.bloch_embedding(r.op(x, -h, y))) / (2 * h)
    rhs = 1j * qk.commutator(qk.bloch_generator(x), qk.bloch_embedding(y))
    assert qk.max_abs(lhs - rhs) < 1e-9


# ---------------------------------------------------------------------------
# convex realizations


def test_convex_flow_pins():
    rng = np.random.default_rng(10)
    x, y = rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)
    assert np.allclose(qk.op_convex_flow(x, 0.0, y), y)
    assert np.allclose(qk.op_convex_flow(x, 2.2, x), x)
    np.testing.assert_allclose(
        qk.op_convex_flow(np.zeros(3), math.log(2.0), y), y / 2, atol=1e-15
    )


def test_convex_flow_identities_to_1e12():
    rng = np.random.default_rng(11)
    r = qk.convex_flow(4)
    worst = {"additive": 0.0, "left-sd": 0.0, "right-sd": 0.0}
    for _ in range(300):
        x, y, z = (r.sample(rng) for _ in range(3))
        s, t = rng.uniform(-3, 3, size=2)
        op = r.op
        worst["additive"] = max(
            worst["additive"], r.metric(op(x, t + s, y), op(x, t, op(x, s, y)))
        )
        worst["left-sd"] = max(
            worst["left-sd"],
            r.metric(op(x, s, op(y, t, z)), op(op(x, s, y), t, op(x, s, z))),
        )
        # corrected mixed right self-distributivity
        worst["right-sd"] = max(
            worst["right-sd"],
            r.metric(op(op(x, t, y), s, z), op(op(x, s, z), t, op(y, s, z))),
        )
    for name, value in worst.items():
        assert value <= 1e-12, (name, value)


def test_convex_flow_uncorrected_right_sd_fails_at_s_zero():
    # the uncorrected parameter placement (x*t y)*s z = (x*t z)*s (y*t z)
    # collapses to z = y*t z at s = 0, which is false whenever y != z
    r = qk.convex_flow(3)
    x = np.array([1.0, 0.0, 0.0])
    y = np.array([0.0, 1.0, 0.0])
    z = np.array([0.0, 0.0, 1.0])
    s, t = 0.0, 1.0
    lhs = r.op(r.op(x, t, y), s, z)
    rhs = r.op(r.op(x, t, z), s, r.op(y, t, z))
    assert r.metric(lhs, rhs) > 0.5


def test_convex_spindle_axioms_and_right_sd():
    rng = np.random.default_rng(12)
    for body in ("box", "simplex"):
        r = qk.convex_spindle(0.3, 4, body)
        for _ in range(100):
            x, y, z = (r.sample(rng) for _ in range(3))
            op = r.op
            assert r.metric(op(x, 0.0, x), x) <= 1e-15
            assert r.metric(op(x, 0.0, op(y, 0.0, z)),
                            op(op(x, 0.0, y), 0.0, op(x, 0.0, z))) <= 1e-15
            assert r.metric(op(op(x, 0.0, y), 0.0, z),
                            op(op(x, 0.0, z), 0.0, op(y, 0.0, z))) <= 1e-15


def test_convex_spindle_stays_in_body():
    rng = np.random.default_rng(13)
    box = qk.convex_spindle(0.7, 3, "box")
    for _ in range(50):
        out = box.op(box.sample(rng), 0.0, box.sample(rng))
        assert np.all(out >= 0.0) and np.all(out <= 1.0)
    simplex = qk.convex_spindle(0.7, 3, "simplex")
    for _ in range(50):
        out = simplex.op(simplex.sample(rng), 0.0, simplex.sample(rng))
        assert np.all(out >= 0.0) and abs(float(np.sum(out)) - 1.0) <= 1e-12


def test_convex_spindle_validation():
    with pytest.raises(ValueError):
        qk.convex_spindle(bias=1.5)
    with pytest.raises(ValueError):
        qk.convex_spindle(bias=-0.1)
    with pytest.raises(ValueError):
        qk.convex_spindle(body="ball")
    assert qk.convex_spindle(0.0).family is False


# ---------------------------------------------------------------------------
# fixed spectrum


def test_fixed_spectrum_sampler_has_the_spectrum():
    r = qk.fixed_spectrum([1.0, 2.0, 3.0])
    rng = np.random.default_rng(14)
    for _ in range(10):
        a = r.sample(rng)
        assert qk.is_hermitian(a)
        np.testing.assert_allclose(np.linalg.eigvalsh(a), [1.0, 2.0, 3.0], atol=1e-10)


def test_fixed_spectrum_op_preserves_spectrum():
    r = qk.fixed_spectrum([-1.0, 0.5, 2.0])
    rng = np.random.default_rng(15)
    for _ in range(15):
        x, y = r.sample(rng), r.sample(rng)
        t = float(rng.uniform(-3, 3))
        out = r.op(x, t, y)
        np.testing.assert_allclose(np.linalg.eigvalsh(out), [-1.0, 0.5, 2.0], atol=1e-8)
    assert r.metric(r.op(x, 0.0, y), y) < 1e-12
    assert r.metric(r.op(x, 1.1, x), x) < 1e-12


def test_fixed_spectrum_rejects_drift():
    r = qk.fixed_spectrum([1.0, 2.0])
    wrong = np.diag([1.0, 2.5]).astype(complex)
    with pytest.raises(ArithmeticError):
        r.op(wrong, 0.3, wrong)


def test_fixed_spectrum_factory_validation():
    with pytest.raises(ValueError):
        qk.fixed_spectrum([1.0, 1.0 + 1e-9])  # gap below threshold
    with pytest.raises(ValueError):
        qk.fixed_spectrum([])
    with pytest.raises(ValueError):
        qk.fixed_spectrum([np.nan, 1.0])


def test_fixed_spectrum_decode_checks_spectrum():
    r = qk.fixed_spectrum([1.0, 2.0])
    good = qk.matrix_to_json(np.diag([2.0, 1.0]).astype(complex))
    assert r.decode(good) is not None
    with pytest.raises((ValueError, ArithmeticError)):
        r.decode(qk.matrix_to_json(np.diag([1.0, 3.0]).astype(complex)))


# ---------------------------------------------------------------------------
# union realization


def test_union_op_cases():
    a = qk.UnionElement("algebra", 1.0)
    b = qk.UnionElement("algebra", -0.4)
    p = qk.UnionElement("space", [1.0, 0.0])
    # space fixes everything
    assert qk.op_union(p, 2.0, a) is a
    assert qk.op_union(p, 2.0, p) is p
    # abelian algebra: a fixes b
    assert qk.op_union(a, 2.0, b) is b
    # algebra rotates the plane: angle t*a
    out = qk.op_union(a, math.pi / 2, p)
    assert out.part == "space"
    np.testing.assert_allclose(out.value, [0.0, 1.0], atol=1e-12)


def test_union_element_validation():
    with pytest.raises(ValueError):
        qk.UnionElement("vector", 1.0)
    with pytest.raises(ValueError):
        qk.UnionElement("space", [1.0, 2.0, 3.0])
    with pytest.raises(ValueError):
        qk.UnionElement("algebra", float("inf"))
    e = qk.UnionElement("algebra", 2)
    with pytest.raises(AttributeError):
        e.part = "space"


def test_union_metric_and_codec():
    r = qk.union_lie()
    a = qk.UnionElement("algebra", 0.5)
    p = qk.UnionElement("space", [0.0, 1.0])
    assert r.metric(a, p) == math.inf
    assert r.metric(a, qk.UnionElement("algebra", 0.75)) == 0.25
    round_a = r.decode(r.encode(a))
    assert round_a.part == "algebra" and round_a.value == 0.5
    round_p = r.decode(r.encode(p))
    assert round_p.part == "space" and np.allclose(round_p.value, p.value)
    with pytest.raises(ValueError):
        r.decode({"part": "algebra"})


def test_union_sampler_produces_both_parts():
    r = qk.union_lie()
    rng = np.random.default_rng(16)
    parts = {r.sample(rng).part for _ in range(50)}
    assert parts == {"algebra", "space"}


# ---------------------------------------------------------------------------
# registry and plumbing


def test_make_realization_names():
    for name in qk.REALIZATION_NAMES:
        r = qk.make_realization(name, dim=3)
        assert r.name == name
    with pytest.raises(ValueError):
        qk.make_realization("octonion")


def test_make_realization_fixed_spectrum_default():
    r = qk.make_realization("fixed-spectrum", dim=3)
    assert r.params["spectrum"] == [1.0, 2.0, 3.0]


def test_sampler_normalizations():
    rng = np.random.default_rng(17)
    h = qk.matrix_hermitian(4).sample(rng)
    assert qk.is_hermitian(h) and abs(qk.max_abs(h) - 1.0) < 1e-14
    g = qk.matrix_general(4).sample(rng)
    assert qk.max_abs(g) <= 0.5 + 1e-12
    b = qk.bloch().sample(rng)
    assert abs(np.linalg.norm(b) - 1.0) < 1e-12


def test_realizations_are_frozen():
    r = qk.bloch()
    with pytest.raises(Exception):
        r.name = "other"
