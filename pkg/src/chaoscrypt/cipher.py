"""Message-embedded stream cipher driven by a 2-D chaotic map.

Per plaintext byte the running chaotic state is advanced twice; each
advance is quantized to an integer and mixed into the byte by addition
mod 256. The first-stage mixed value is then folded back into the state,
so the dynamics depend on everything already encrypted. Decryption
regenerates the same state sequence from the key and inverts the mixing
exactly.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, replace
from math import floor, fmod
from typing import Iterable

from .maps import (
    DIVERGENCE_BOUND,
    DivergenceError,
    DomainError,
    MapKind,
    MapParams,
    State,
    step_function,
)

__all__ = [
    "SYMBOL_MODULUS",
    "DEFAULT_INITIAL_STATE",
    "Key",
    "CipherConfig",
    "SymbolTrace",
    "default_config",
    "quantize",
    "encrypt",
    "encrypt_bytes",
    "decrypt",
    "encrypt_file",
    "decrypt_file",
    "key_to_json",
    "key_from_json",
    "save_key",
    "load_key",
    "load_config",
    "config_from_dict",
]

SYMBOL_MODULUS = 256

# Public starting points of the transmitter, one per map.
DEFAULT_INITIAL_STATE = {
    MapKind.ARNOLD: State(0.5, 0.06),
    MapKind.DUFFING: State(-0.04, 0.2),
}


@dataclass(frozen=True)
class Key:
    """Secret (a, b) parameter pair of a chaotic map; N stays public."""

    kind: MapKind
    params: MapParams


@dataclass(frozen=True)
class CipherConfig:
    """Public cipher parameters.

    n1 and n2 are the iteration counts before the two quantized snapshots
    of each symbol; quant_scale turns a state coordinate into an integer;
    reinject_gain scales the feedback written back into the state. The
    initial state is public: all secrecy lives in the key.
    """

    initial_state: State
    n1: int = 3
    n2: int = 3
    quant_scale: float = 1e6
    reinject_gain: float = 1.0
    symbol_modulus: int = SYMBOL_MODULUS


@dataclass(frozen=True)
class SymbolTrace:
    """Intermediate values of one symbol: first-stage mix z, emitted
    symbol y, and the two state snapshots they were derived from."""

    z: int
    y: int
    s1: State
    s2: State


def default_config(kind: MapKind) -> CipherConfig:
    """Default configuration for a map kind (differs only in start state)."""
    return CipherConfig(initial_state=DEFAULT_INITIAL_STATE[kind])


def quantize(s: State, cfg: CipherConfig) -> int:
    """floor(|x| * quant_scale) mod symbol_modulus, for the state's x."""
    if not math.isfinite(s.x):
        raise DomainError("cannot quantize a non-finite state")
    return int(floor(abs(s.x) * cfg.quant_scale)) % cfg.symbol_modulus


class _Engine:
    """Keyed state machine shared by encryption and decryption."""

    __slots__ = ("_step", "_x", "_y", "_n1", "_n2", "_q", "_g", "_m", "_count")

    def __init__(self, key: Key, cfg: CipherConfig):
        if cfg.n1 < 1 or cfg.n2 < 1:
            raise DomainError("iteration counts n1 and n2 must be >= 1")
        self._step = step_function(key.kind, key.params)
        self._x = cfg.initial_state.x
        self._y = cfg.initial_state.y
        self._n1 = cfg.n1
        self._n2 = cfg.n2
        self._q = cfg.quant_scale
        self._g = cfg.reinject_gain
        self._m = cfg.symbol_modulus
        self._count = 0

    def _advance_quantize(self, n: int) -> int:
        step = self._step
        x, y = self._x, self._y
        bound = DIVERGENCE_BOUND
        for _ in range(n):
            x, y = step(x, y)
            if not (-bound <= x <= bound and -bound <= y <= bound):
                raise DivergenceError(
                    f"orbit diverged while processing symbol {self._count}",
                    symbol=self._count)
        self._x, self._y = x, y
        return int(floor(abs(x) * self._q)) % self._m

    def _reinject(self, z: int) -> None:
        self._x = fmod(self._x + self._g * z / self._m, 1.0)

    def encrypt_byte(self, c: int) -> tuple[int, int, float, float, float, float]:
        if not 0 <= c < self._m:
            raise DomainError(f"plaintext byte {c} out of range [0, {self._m})")
        q1 = self._advance_quantize(self._n1)
        s1x, s1y = self._x, self._y
        z = (c + q1) % self._m
        q2 = self._advance_quantize(self._n2)
        y_sym = (z + q2) % self._m
        self._reinject(z)
        self._count += 1
        return y_sym, z, s1x, s1y, self._x, self._y

    def decrypt_symbol(self, y_sym: int) -> int:
        if not 0 <= y_sym < self._m:
            raise DomainError(f"ciphertext symbol {y_sym} out of range [0, {self._m})")
        q1 = self._advance_quantize(self._n1)
        q2 = self._advance_quantize(self._n2)
        z = (y_sym - q2) % self._m
        c = (z - q1) % self._m
        self._reinject(z)
        self._count += 1
        return c


def encrypt(plaintext: bytes | Iterable[int], key: Key,
            cfg: CipherConfig | None = None) -> tuple[bytes, list[SymbolTrace]]:
    """Encrypt a byte sequence; returns (ciphertext, per-symbol traces).

    The trace list exposes the intermediate mixed values and state
    snapshots for the analysis procedures.
    """
    if cfg is None:
        cfg = default_config(key.kind)
    engine = _Engine(key, cfg)
    out = bytearray()
    traces = []
    for c in plaintext:
        y_sym, z, s1x, s1y, s2x, s2y = engine.encrypt_byte(c)
        out.append(y_sym)
        traces.append(SymbolTrace(z, y_sym, State(s1x, s1y), State(s2x, s2y)))
    return bytes(out), traces


def encrypt_bytes(plaintext: bytes | Iterable[int], key: Key,
                  cfg: CipherConfig | None = None) -> bytes:
    """Encrypt without collecting traces (fast path for scans and files)."""
    if cfg is None:
        cfg = default_config(key.kind)
    engine = _Engine(key, cfg)
    out = bytearray()
    for c in plaintext:
        out.append(engine.encrypt_byte(c)[0])
    return bytes(out)


def decrypt(ciphertext: bytes | Iterable[int], key: Key,
            cfg: CipherConfig | None = None) -> bytes:
    """Exact inverse of encrypt under the same key and configuration."""
    if cfg is None:
        cfg = default_config(key.kind)
    engine = _Engine(key, cfg)
    out = bytearray()
    for y_sym in ciphertext:
        out.append(engine.decrypt_symbol(y_sym))
    return bytes(out)


_CHUNK = 1 << 16
_WHITESPACE_TABLE = str.maketrans("", "", " \t\r\n")


def encrypt_file(path_in: str | os.PathLike, path_out: str | os.PathLike,
                 key: Key, cfg: CipherConfig | None = None) -> None:
    """Encrypt a file to lowercase hex, two digits per symbol, streaming."""
    if cfg is None:
        cfg = default_config(key.kind)
    engine = _Engine(key, cfg)
    with open(path_in, "rb") as fin, open(path_out, "w", encoding="ascii") as fout:
        while True:
            chunk = fin.read(_CHUNK)
            if not chunk:
                break
            symbols = bytearray()
            for c in chunk:
                symbols.append(engine.encrypt_byte(c)[0])
            fout.write(bytes(symbols).hex())
        fout.write("\n")


def decrypt_file(path_in: str | os.PathLike, path_out: str | os.PathLike,
                 key: Key, cfg: CipherConfig | None = None) -> None:
    """Decrypt a hex ciphertext file back to raw bytes, streaming.

    Whitespace (including the optional trailing newline) is ignored; any
    other non-hex character, or an odd digit count, raises ValueError.
    """
    if cfg is None:
        cfg = default_config(key.kind)
    engine = _Engine(key, cfg)
    carry = ""
    with open(path_in, "r", encoding="ascii") as fin, open(path_out, "wb") as fout:
        while True:
            text = fin.read(_CHUNK)
            if not text:
                break
            digits = carry + text.translate(_WHITESPACE_TABLE)
            take = len(digits) - (len(digits) % 2)
            carry = digits[take:]
            try:
                symbols = bytes.fromhex(digits[:take])
            except ValueError:
                raise ValueError(f"malformed hex in ciphertext file {path_in}")
            out = bytearray()
            for y_sym in symbols:
                out.append(engine.decrypt_symbol(y_sym))
            fout.write(bytes(out))
        if carry:
            raise ValueError(f"odd number of hex digits in ciphertext file {path_in}")


def key_to_json(key: Key) -> str:
    """Single-line JSON rendering with full-precision decimals."""
    return json.dumps({
        "kind": key.kind.value,
        "a": key.params.a,
        "b": key.params.b,
        "n_modulus": key.params.n_modulus,
    })


def key_from_json(text: str) -> Key:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed key JSON: {exc}")
    if not isinstance(obj, dict):
        raise ValueError("malformed key JSON: expected an object")
    try:
        kind = MapKind.parse(str(obj["kind"]))
        params = MapParams(float(obj["a"]), float(obj["b"]),
                           float(obj.get("n_modulus", 1.0)))
    except KeyError as exc:
        raise ValueError(f"key JSON missing field {exc}")
    return Key(kind, params)


def save_key(key: Key, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii") as f:
        f.write(key_to_json(key) + "\n")


def load_key(path: str | os.PathLike) -> Key:
    with open(path, "r", encoding="utf-8") as f:
        return key_from_json(f.read())


def config_from_dict(obj: dict, kind: MapKind) -> CipherConfig:
    """Build a config from a JSON-style dict; absent fields take defaults."""
    cfg = default_config(kind)
    if "initial_state" in obj:
        st = obj["initial_state"]
        cfg = replace(cfg, initial_state=State(float(st["x"]), float(st["y"])))
    if "n1" in obj:
        cfg = replace(cfg, n1=int(obj["n1"]))
    if "n2" in obj:
        cfg = replace(cfg, n2=int(obj["n2"]))
    if "quant_scale" in obj:
        cfg = replace(cfg, quant_scale=float(obj["quant_scale"]))
    if "reinject_gain" in obj:
        cfg = replace(cfg, reinject_gain=float(obj["reinject_gain"]))
    if cfg.n1 < 1 or cfg.n2 < 1:
        raise DomainError("config iteration counts n1 and n2 must be >= 1")
    if not (math.isfinite(cfg.quant_scale) and cfg.quant_scale > 0.0):
        raise DomainError("config quant_scale must be finite and > 0")
    return cfg


def load_config(path: str | os.PathLike, kind: MapKind) -> CipherConfig:
    with open(path, "r", encoding="utf-8") as f:
        try:
            obj = json.load(f)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed config JSON: {exc}")
    if not isinstance(obj, dict):
        raise ValueError("malformed config JSON: expected an object")
    return config_from_dict(obj, kind)
