"""Centered Fourier operator, its projectors, and circulant algebra."""

import numpy as np
import pytest

from finosc import (
    Signal,
    circulant,
    closed_form_coordinate_transforms,
    coordinate_signal,
    dft_operator,
    equidistant_circulant,
    fourier_projectors,
    make_lattice,
    transform_of_coordinate_at,
    transform_of_coordinate_squared_at,
)
from conftest import naive_dft


@pytest.mark.parametrize("d", [5, 7, 21])
def test_dft_matches_definition(d):
    lat = make_lattice(d)
    F = dft_operator(lat).mat
    assert np.max(np.abs(F - naive_dft(d))) < 1e-15


@pytest.mark.parametrize("d", [5, 21])
def test_dft_unitary_and_inverse(d):
    lat = make_lattice(d)
    F = dft_operator(lat).mat
    Fi = dft_operator(lat, inverse=True).mat
    assert np.max(np.abs(F @ F.conj().T - np.eye(d))) < 1e-14
    assert np.max(np.abs(Fi - F.conj().T)) < 1e-15


def test_dft_fourth_power_and_parity(lat21):
    F = dft_operator(lat21).mat
    F2 = F @ F
    # F² reverses the grid about the center
    reversal = np.eye(21)[::-1]
    assert np.max(np.abs(F2 - reversal)) < 1e-13
    assert np.max(np.abs(F2 @ F2 - np.eye(21))) < 1e-13


def test_projectors_resolve_identity(lat5):
    proj = fourier_projectors(lat5)
    F = dft_operator(lat5).mat
    total = sum(proj[m].mat for m in range(4))
    assert np.max(np.abs(total - np.eye(5))) < 1e-14
    for m in range(4):
        pm = proj[m].mat
        assert np.max(np.abs(pm @ pm - pm)) < 1e-14
        assert np.max(np.abs(F @ pm - (-1j) ** m * pm)) < 1e-13
        for k in range(m + 1, 4):
            assert np.max(np.abs(pm @ proj[k].mat)) < 1e-14
    # index is 4-periodic
    assert proj[5] is proj[1]


@pytest.mark.parametrize("d", [5, 21, 51])
def test_coordinate_transform_closed_forms(d):
    lat = make_lattice(d)
    F = naive_dft(d)
    q = lat.points
    fq, fq2 = closed_form_coordinate_transforms(lat)
    assert np.max(np.abs(fq.amp - F @ q)) < 1e-12
    assert np.max(np.abs(fq2.amp - F @ q**2)) < 1e-11
    # pointwise accessors agree with the assembled signals and wrap in j
    for j in (-lat.s, 0, 1, lat.s):
        assert transform_of_coordinate_at(lat, j) == pytest.approx(
            complex(fq[j]), abs=1e-12
        )
        assert transform_of_coordinate_squared_at(lat, j) == pytest.approx(
            float(fq2[j].real), abs=1e-11
        )
        assert transform_of_coordinate_at(lat, j + d) == pytest.approx(
            transform_of_coordinate_at(lat, j), abs=1e-12
        )


def test_transform_of_coordinate_zero_frequency(lat21):
    assert transform_of_coordinate_at(lat21, 0) == 0.0
    want = (2.0 * np.pi / np.sqrt(21)) * 10 * 11 / 3.0
    assert transform_of_coordinate_squared_at(lat21, 0) == pytest.approx(want)


def test_circulant_materialize_is_shift_structured(lat5):
    rng = np.random.default_rng(11)
    col = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    mat = circulant(lat5, col).materialize().mat
    for n in lat5.indices:
        for m in lat5.indices:
            assert mat[lat5.pos(n), lat5.pos(m)] == col[lat5.pos(n - m)]


@pytest.mark.parametrize("d", [5, 21])
def test_circulant_diagonalized_by_dft(d):
    lat = make_lattice(d)
    rng = np.random.default_rng(d)
    col = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    spec = circulant(lat, col)
    F = dft_operator(lat).mat
    rebuilt = F.conj().T @ np.diag(spec.eigenvalues()) @ F
    assert np.max(np.abs(spec.materialize().mat - rebuilt)) < 1e-12


def test_circulant_rejects_wrong_length(lat5):
    with pytest.raises(ValueError):
        circulant(lat5, np.zeros(4))


@pytest.mark.parametrize("d", [5, 21])
def test_equidistant_circulant_spectrum(d):
    lat = make_lattice(d)
    spec = equidistant_circulant(lat)
    ev = np.sort(spec.eigenvalues().real)
    assert np.max(np.abs(spec.eigenvalues().imag)) < 1e-11
    assert np.max(np.abs(ev - np.arange(1, d + 1))) < 1e-11
    assert spec.first_column[lat.pos(0)] == pytest.approx((d + 1) / 2.0)


def test_circulant_applies_as_cyclic_convolution(lat5):
    rng = np.random.default_rng(2)
    col = rng.standard_normal(5)
    x = rng.standard_normal(5)
    out = circulant(lat5, col).materialize().apply(Signal(lat5, x))
    for n in lat5.indices:
        want = sum(col[lat5.pos(n - m)] * x[lat5.pos(m)] for m in lat5.indices)
        assert out[n] == pytest.approx(want, abs=1e-12)


def test_coordinate_signal_round_trip(lat21):
    # F⁺F restores q exactly within round-off
    F = dft_operator(lat21).mat
    q = coordinate_signal(lat21).amp
    assert np.max(np.abs(F.conj().T @ (F @ q) - q)) < 1e-13
