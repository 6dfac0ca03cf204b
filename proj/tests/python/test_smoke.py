"""Smoke tests for the python bindings."""

import numpy as np
import pytest

import chaoswave as cw


def scene(seed: int = 1, size: int = 64) -> np.ndarray:
    rng = np.random.default_rng(seed)
    base = rng.uniform(0, 2 * np.pi, 4)
    y, x = np.mgrid[0:size, 0:size].astype(float)
    img = (
        np.cos(2 * np.pi * 1.5 * x / size + base[0]) * np.cos(2 * np.pi * 1.0 * y / size + base[1])
        + 0.5 * np.cos(2 * np.pi * 2.5 * x / size + base[2])
    )
    img = (img - img.min()) / (img.max() - img.min())
    return np.clip(np.round(img * 230 + 12), 0, 255).astype(np.uint8)


def test_roundtrip_exact():
    key = cw.SecretKey()
    img = scene()
    blob = cw.encrypt(img, key)
    assert isinstance(blob, bytes)
    assert len(blob) == 14 + 4 * img.size
    back = cw.decrypt(blob, key)
    assert back.dtype == np.uint8
    assert np.array_equal(back, img)


def test_deterministic():
    key = cw.SecretKey()
    img = scene(2)
    assert cw.encrypt(img, key) == cw.encrypt(img, key)


def test_cipher_statistics():
    key = cw.SecretKey()
    img = scene(3, 128)
    blob = cw.encrypt(img, key)
    payload = cw.payload(blob)
    assert len(payload) == 4 * img.size
    assert cw.entropy(payload) > 7.99
    counts, chi2 = cw.histogram(payload)
    assert sum(counts) == len(payload)
    assert chi2 < 400.0
    plane = cw.display_plane(blob)
    assert plane.shape == img.shape
    assert cw.npcr(img.tobytes(), plane.tobytes()) > 99.0


def test_wrong_key_is_garbage():
    key = cw.SecretKey()
    img = scene(4)
    blob = cw.encrypt(img, key)
    wrong = cw.SecretKey(x0=key.x0 + 1e-14)
    garbage = cw.decrypt(blob, wrong)
    assert not np.array_equal(garbage, img)
    report = cw.key_sensitivity(img, key, delta=1e-14)
    assert report["npcr"] >= 99.0


def test_adjacent_correlation_and_reports():
    img = scene(5, 128)
    rho = cw.adjacent_correlation(img, "horizontal", count=1000, seed=0)
    assert rho > 0.7
    plain = cw.analyze_plain(img)
    assert plain["correlation"]["vertical"] > 0.7
    key = cw.SecretKey()
    blob = cw.encrypt(img, key)
    cipher = cw.analyze_cipher(img, blob)
    assert abs(cipher["correlation"]["horizontal"]) < 0.2
    assert cipher["npcr"] > 99.0
    assert cipher["dof"] == 255


def test_shuffled_preview():
    key = cw.SecretKey()
    img = scene(6)
    field = cw.shuffled_preview(img, key)
    assert field.shape == img.shape
    assert field.dtype == np.float64


def test_parameter_validation():
    with pytest.raises(ValueError):
        cw.SecretKey(m=1.5)
    with pytest.raises(ValueError):
        cw.encrypt(np.zeros((3, 4), dtype=np.uint8), cw.SecretKey())
    with pytest.raises(ValueError):
        cw.decrypt(b"not a blob", cw.SecretKey())


def test_key_file_roundtrip(tmp_path):
    key = cw.SecretKey(x0=0.3141592653589793, n1=2, n2=4, n3=6, n4=8)
    path = str(tmp_path / "test.key")
    cw.save_key_file(key, path)
    back = cw.load_key_file(path)
    assert back.x0 == key.x0
    assert back.n4 == 8
    with pytest.raises(OSError):
        cw.load_key_file(str(tmp_path / "missing.key"))


def test_pgm_roundtrip(tmp_path):
    img = scene(7, 32)
    path = str(tmp_path / "img.pgm")
    cw.write_pgm(img, path)
    assert np.array_equal(cw.read_pgm(path), img)
