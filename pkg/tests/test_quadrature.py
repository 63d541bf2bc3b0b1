import math

import numpy as np
import pytest

from overheat import (
    BathPair,
    CircuitParams,
    QuadratureConfig,
    ToleranceNotMetError,
    TransferMode,
    classical_integral,
    derive_scales,
    digamma,
    heat_classical,
    heat_exact,
    heat_quantum,
    quantum_integral,
    transfer_f12,
)
from overheat.quadrature import _f12_integral

LINEAR = TransferMode.OVERDAMPED_LINEAR
CUBIC = TransferMode.EXACT_CUBIC


def overdamped_draw(rng, gamma_exponent=(2.0, 8.0)):
    R, L = (float(v) for v in np.exp(rng.uniform(-1, 1, size=2)))
    M = L * float(rng.uniform(0.1, 0.9))
    gamma = math.exp(rng.uniform(*gamma_exponent))
    wc = math.exp(rng.uniform(-1, 3))
    p = CircuitParams(R=R, L=L, C=1.0 / (R * gamma), M=M, omega_c=wc)
    T1, T2 = (float(v) for v in np.exp(rng.uniform(-2, 2, size=2)))
    if abs(T1 - T2) < 0.05 * max(T1, T2):
        T2 = 0.5 * T1
    return p, BathPair.from_temperatures(T1, T2)


class TestQuadratureConfig:
    def test_defaults_valid(self):
        q = QuadratureConfig()
        assert q.rel_tol == 1e-9 and q.tail_cut_multiplier == 60.0

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"rel_tol": 0.0},
            {"rel_tol": -1e-9},
            {"abs_tol": -1.0},
            {"max_subdivisions": 5},
            {"tail_cut_multiplier": 2.0},
        ],
    )
    def test_rejects_bad_values(self, kwargs):
        with pytest.raises(ValueError):
            QuadratureConfig(**kwargs)


class TestHeatExact:
    def test_equilibrium_is_zero(self, circuit):
        b = BathPair.from_temperatures(1.0, 1.0)
        assert heat_exact(circuit, b) == 0.0

    def test_decoupled_is_zero(self):
        p = CircuitParams(R=2.0, L=2.0, C=5e-5, M=0.0, omega_c=5.0)
        b = BathPair.from_temperatures(2.0, 1.0)
        assert heat_exact(p, b) == 0.0

    def test_matches_closed_form_total(self, circuit, scales, baths):
        # gamma/omega_d = 1e4: the overdamped closed forms should nail the
        # linear-mode integral well inside 100x the quadrature tolerance
        expected = heat_classical(circuit, scales, baths) + heat_quantum(
            circuit, scales, baths
        )
        value = heat_exact(circuit, baths, LINEAR)
        assert abs(value - expected) <= 1e-7 * abs(expected)

    def test_antisymmetry(self):
        rng = np.random.default_rng(61)
        for _ in range(5):
            p, b = overdamped_draw(rng)
            swapped = BathPair.from_temperatures(b.T2, b.T1)
            forward = heat_exact(p, b, CUBIC)
            backward = heat_exact(p, swapped, CUBIC)
            assert backward == pytest.approx(-forward, rel=1e-8)

    def test_sign(self):
        rng = np.random.default_rng(67)
        for _ in range(8):
            p, b = overdamped_draw(rng)
            hot_first = b if b.T1 > b.T2 else BathPair.from_temperatures(b.T2, b.T1)
            assert heat_exact(p, hot_first, CUBIC) > 0.0

    def test_monotone_tolerance(self, circuit, baths):
        # tightening rel_tol cannot move the result by more than the prior
        # error budget rel_tol*|value| + abs_tol
        loose = QuadratureConfig(rel_tol=1e-6)
        tight = QuadratureConfig(rel_tol=1e-7)
        for mode in (LINEAR, CUBIC):
            v_loose = heat_exact(circuit, baths, mode, loose)
            v_tight = heat_exact(circuit, baths, mode, tight)
            assert abs(v_loose - v_tight) <= 1e-6 * abs(v_loose) + loose.abs_tol

    def test_tolerance_failure_carries_estimate(self, circuit, baths):
        # a cut at 10 thermal units leaves an exponential tail bound far above
        # the default relative target, so the evaluation must refuse
        q = QuadratureConfig(tail_cut_multiplier=10.0)
        with pytest.raises(ToleranceNotMetError) as excinfo:
            heat_exact(circuit, baths, LINEAR, q)
        err = excinfo.value
        assert err.estimate > err.target > 0.0
        # the carried value is still the right integral to ~tail accuracy
        reference = heat_exact(circuit, baths, LINEAR)
        assert err.value == pytest.approx(reference, rel=1e-4)


class TestClassicalIntegral:
    def test_decoupled_is_zero(self):
        p = CircuitParams(R=2.0, L=2.0, C=5e-5, M=0.0, omega_c=5.0)
        assert classical_integral(p) == 0.0

    def test_reference_value(self, circuit):
        # residue arithmetic for the linear mode polynomials:
        # (1/2)(M/L)^2 (omega_c/(omega_c+omega_d)) lambda_+ lambda_-/omega_d
        expected = 0.5 * 0.25 * (5.0 / 6.0) * (100.0 / 119.0)
        value = classical_integral(circuit, LINEAR)
        assert value == pytest.approx(expected, rel=1e-9)

    def test_split_additivity(self, circuit):
        rng = np.random.default_rng(71)
        q = QuadratureConfig()
        for mode in (LINEAR, CUBIC):
            full, _ = _f12_integral(circuit, mode, q)
            for _ in range(3):
                omega_split = math.exp(rng.uniform(-3, 3))
                head, _ = _f12_integral(circuit, mode, q, 0.0, omega_split)
                tail, _ = _f12_integral(circuit, mode, q, omega_split, math.inf)
                assert head + tail == pytest.approx(full, rel=1e-9)


class TestQuantumIntegral:
    def test_equilibrium_is_zero(self, circuit):
        b = BathPair.from_temperatures(3.0, 3.0)
        assert quantum_integral(circuit, b) == 0.0

    def test_matches_closed_form(self, circuit, scales, baths):
        expected = heat_quantum(circuit, scales, baths)
        value = quantum_integral(circuit, baths, LINEAR)
        assert abs(value - expected) <= 1e-6 * abs(expected)

    def test_negative_when_bath1_hot(self, circuit, baths):
        # the quantum piece reduces the classical flow
        assert quantum_integral(circuit, baths, LINEAR) < 0.0

    def test_decomposition_identity(self):
        # heat_exact = k_b (T1-T2) classical_integral + quantum_integral
        rng = np.random.default_rng(73)
        for _ in range(6):
            p, b = overdamped_draw(rng, gamma_exponent=(1.0, 6.0))
            for mode in (LINEAR, CUBIC):
                total = heat_exact(p, b, mode)
                cl = p.kb * (b.T1 - b.T2) * classical_integral(p, mode)
                qu = quantum_integral(p, b, mode)
                assert cl + qu == pytest.approx(total, rel=1e-7)

    def test_integrand_conjugate_symmetry(self, circuit, baths):
        # the full-line integrand satisfies F(-omega) = conj(F(omega)), which
        # is what justifies evaluating twice the real part on the half line
        def full_line(w: float) -> complex:
            x1 = baths.beta1 * circuit.hbar * w / (2.0 * math.pi)
            x2 = baths.beta2 * circuit.hbar * w / (2.0 * math.pi)
            psi_diff = digamma(complex(1.0, -x2)) - digamma(complex(1.0, -x1))
            return (
                complex(0.0, -circuit.hbar / (2.0 * math.pi))
                * w
                * transfer_f12(w, circuit, LINEAR)
                * psi_diff
            )

        for w in (0.3, 1.0, 4.7, 25.0):
            assert full_line(-w) == pytest.approx(
                full_line(w).conjugate(), rel=1e-13
            )
