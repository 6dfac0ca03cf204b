"""Chaotic wavelet-domain grayscale image cipher and its analysis suite."""

from chaoswave._core import (
    FormatError,
    IoError,
    ParamError,
    SecretKey,
    ShapeError,
    adjacent_correlation,
    analyze_cipher,
    analyze_plain,
    decrypt,
    display_plane,
    encrypt,
    entropy,
    histogram,
    key_sensitivity,
    load_key_file,
    npcr,
    payload,
    read_pgm,
    save_key_file,
    shuffled_preview,
    write_pgm,
)

__all__ = [
    "FormatError",
    "IoError",
    "ParamError",
    "SecretKey",
    "ShapeError",
    "adjacent_correlation",
    "analyze_cipher",
    "analyze_plain",
    "decrypt",
    "display_plane",
    "encrypt",
    "entropy",
    "histogram",
    "key_sensitivity",
    "load_key_file",
    "npcr",
    "payload",
    "read_pgm",
    "save_key_file",
    "shuffled_preview",
    "write_pgm",
]

__version__ = "0.1.0"
