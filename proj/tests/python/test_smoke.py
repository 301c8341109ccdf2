import math

import pytest

qrabi = pytest.importorskip("qrabi")


def test_coherent_state():
    betas = qrabi.coherent_betas(math.sqrt(10.0), 60)
    assert betas[0] == pytest.approx(math.exp(-5.0), rel=1e-13)
    assert qrabi.tail_deficit(math.sqrt(10.0), 60) < 1e-12
    assert qrabi.choose_truncation(math.sqrt(10.0), 1e-12) <= 60


def test_level_energies():
    assert qrabi.rwa_energy(1, 0, 0.06) == pytest.approx(0.44, abs=1e-14)
    assert qrabi.rwa_energy(2, 0, 0.06) == pytest.approx(0.56, abs=1e-14)
    assert qrabi.crwa_energy_closed(1, 3, 0.0) == pytest.approx(3.5, abs=1e-12)
    assert qrabi.ground_state_energy(0.2, 2) == pytest.approx(-0.5202, abs=1e-13)

    # closed roots solve the cubic
    a2, a1, a0 = qrabi.cubic_coefficients(5, 0.1)
    for k in (1, 2):
        e = qrabi.crwa_energy_closed(k, 5, 0.1)
        assert abs(((e + a2) * e + a1) * e + a0) < 1e-10

    exact = qrabi.exact_energies(0.2, 40)
    assert exact[0] == pytest.approx(-0.5202, abs=5e-6)


def test_inversion_backends():
    tau, w_rwa = qrabi.inversion("rwa", 0.06, 10.0, tau_max=10.0, n_points=201)
    assert tau[0] == 0.0 and len(tau) == 201
    assert w_rwa[0] == pytest.approx(1.0, abs=1e-10)

    _, w_exact = qrabi.inversion("exact", 0.06, 10.0, tau_max=10.0, n_points=201)
    assert w_exact[0] == pytest.approx(1.0, abs=1e-10)

    # the analytic total starts at 1 - g^2 alpha^2
    _, w_crwa = qrabi.inversion("crwa", 0.06, 10.0, tau_max=10.0, n_points=201)
    assert w_crwa[0] == pytest.approx(1.0 - 0.06**2 * 10.0, abs=5e-4)

    with pytest.raises(ValueError):
        qrabi.inversion("bogus", 0.06, 10.0)


def test_components_sum():
    parts = qrabi.crwa_components(0.06, 10.0, tau_max=5.0, n_points=101)
    for i in range(101):
        total = (
            parts["constant"]
            + parts["gs"][i]
            + parts["rabi"][i]
            + parts["same_k"][i]
            + parts["diff_k"][i]
        )
        assert total == pytest.approx(parts["total"][i], abs=1e-12)


def test_spectrum_rabi_peak():
    freqs, power = qrabi.power_spectrum("rwa", 0.06, 10.0, bin=0.5, freq_min=1.0, freq_max=6.0)
    peaks = qrabi.detect_peaks(freqs, power, 0.1)
    assert peaks, "no peaks detected"
    top = max(peaks, key=lambda p: p["height"])
    assert abs(top["frequency"] - math.sqrt(11.0)) <= 0.5

    preds = qrabi.predict_peaks(0.06, 10.0)
    assert preds["rabi"] == pytest.approx(math.sqrt(11.0))
    assert preds["omega_c"] == pytest.approx(16.6517, abs=1e-3)
    assert set(preds) >= {
        "rabi",
        "omega_s_k1",
        "omega_s_k2",
        "omega_d_k1",
        "omega_d_k2",
        "omega_c",
        "Omega_s_k1",
        "Omega_s_k2",
        "Omega_d_k1",
        "Omega_d_k2",
    }


def test_parity_labels():
    labels = qrabi.parity_labels(0.1, 30)
    assert labels[0] == -1
    assert all(l in (-1, 1) for l in labels)
