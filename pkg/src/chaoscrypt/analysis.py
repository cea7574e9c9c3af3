"""Security-analysis procedures for the chaotic stream cipher.

Covers key-space counting over gridded parameter boxes, plaintext and key
sensitivity percentages, the output-equality identifiability scan, the
known-plaintext key search, and generation of the per-key report tables.

Grid scans are embarrassingly parallel; results are identical regardless
of evaluation order or worker count, and the CHAOSCRYPT_THREADS
environment variable caps parallelism globally.
"""

from __future__ import annotations

import csv
import json
import math
import os
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from importlib import resources
from math import floor
from time import perf_counter
from typing import Callable, Iterable, Sequence, TextIO

from .cipher import (
    CipherConfig,
    Key,
    decrypt,
    default_config,
    encrypt_bytes,
)
from .maps import DivergenceError, DomainError, MapKind, MapParams

__all__ = [
    "KEY_SPACE_RESOLUTION",
    "BRUTE_FORCE_FLOOR",
    "FULL_KEY_DOMAIN",
    "REFERENCE_KEY_SPACE",
    "REFERENCE_PT_SENSITIVITY_BAND",
    "REPORT_HEADER",
    "KeyDomain",
    "IdentifiabilityResult",
    "AttackResult",
    "AnalysisRow",
    "CipherSummary",
    "effective_workers",
    "key_space_size",
    "hamming_bits",
    "plaintext_sensitivity",
    "key_sensitivity",
    "identifiability_scan",
    "known_plaintext_attack",
    "analysis_report",
    "write_report_csv",
    "read_report_csv",
    "load_report_spec",
    "builtin_spec_path",
    "compare_ciphers",
    "write_comparison_csv",
]

# Resolution used when counting the admissible keys of a full cipher
# domain, and the classical floor a key space should exceed to be
# considered brute-force proof.
KEY_SPACE_RESOLUTION = 1e-8
BRUTE_FORCE_FLOOR = 2 ** 100

# Stabilizes floor() against binary representation error in decimal
# increments such as 0.0001 (0.003 / 0.0001 evaluates below 30 otherwise).
_GRID_EPS = 1e-9


def effective_workers(requested: int | None = None) -> int:
    """Requested worker count clamped by the CHAOSCRYPT_THREADS cap."""
    workers = 1 if requested is None else max(1, int(requested))
    cap = os.environ.get("CHAOSCRYPT_THREADS")
    if cap:
        try:
            workers = min(workers, max(1, int(cap)))
        except ValueError:
            raise DomainError(f"CHAOSCRYPT_THREADS must be an integer, got {cap!r}")
    return workers


def _axis_count(lo: float, hi: float, step: float) -> int:
    if not (math.isfinite(lo) and math.isfinite(hi)) or hi < lo:
        raise DomainError(f"degenerate axis [{lo}, {hi}]")
    if not (math.isfinite(step) and step > 0.0):
        raise DomainError("axis step must be finite and > 0")
    return int(floor((hi - lo) / step + _GRID_EPS)) + 1


@dataclass(frozen=True)
class KeyDomain:
    """Rectangular (a, b) parameter box discretized by a per-axis
    increment; the torus modulus is shared by every key in the box."""

    kind: MapKind
    lower: tuple[float, float]
    upper: tuple[float, float]
    increment: float = 1e-4
    n_modulus: float = 1.0

    def __post_init__(self):
        # validates bounds and increment as a side effect
        self.axis_counts()

    def axis_counts(self) -> tuple[int, int]:
        return (_axis_count(self.lower[0], self.upper[0], self.increment),
                _axis_count(self.lower[1], self.upper[1], self.increment))

    def size(self) -> int:
        na, nb = self.axis_counts()
        return na * nb

    def params_at(self, i: int, j: int) -> MapParams:
        return MapParams(self.lower[0] + i * self.increment,
                         self.lower[1] + j * self.increment,
                         self.n_modulus)

    def grid_params(self) -> Iterable[MapParams]:
        """All grid keys in row-major order (a outermost, b innermost)."""
        na, nb = self.axis_counts()
        for i in range(na):
            for j in range(nb):
                yield self.params_at(i, j)

    def snap(self, params: MapParams) -> MapParams:
        """Nearest grid key, clamped into the box."""
        na, nb = self.axis_counts()
        i = min(max(round((params.a - self.lower[0]) / self.increment), 0), na - 1)
        j = min(max(round((params.b - self.lower[1]) / self.increment), 0), nb - 1)
        return self.params_at(i, j)

    def contains(self, params: MapParams) -> bool:
        return (self.lower[0] <= params.a <= self.upper[0]
                and self.lower[1] <= params.b <= self.upper[1])


# Full admissible key boxes of the two ciphers, and the key-space figures
# published for them. The Duffing computed count disagrees with its
# published figure by about an order of magnitude under any per-axis
# resolution that reproduces the published Arnold count, so reports carry
# both numbers with a flag.
FULL_KEY_DOMAIN = {
    MapKind.ARNOLD: KeyDomain(MapKind.ARNOLD, (-5.0, 0.4), (-0.9, 1.5)),
    MapKind.DUFFING: KeyDomain(MapKind.DUFFING, (1.8, -0.59), (2.9, 0.2)),
}
REFERENCE_KEY_SPACE = {
    MapKind.ARNOLD: 5e16,
    MapKind.DUFFING: 9e14,
}
REFERENCE_PT_SENSITIVITY_BAND = {
    MapKind.ARNOLD: (0.5, 2.5),
    MapKind.DUFFING: (0.5, 2.0),
}


def key_space_size(domain: KeyDomain, resolution: float) -> int:
    """Number of keys in the box at the given per-axis resolution
    (product over the two axes of floor(span / resolution) + 1)."""
    return (_axis_count(domain.lower[0], domain.upper[0], resolution)
            * _axis_count(domain.lower[1], domain.upper[1], resolution))


def hamming_bits(c1: bytes, c2: bytes) -> int:
    """Number of differing bits between two equal-length byte strings."""
    if len(c1) != len(c2):
        raise DomainError("hamming_bits requires equal-length inputs")
    return sum(bin(a ^ b).count("1") for a, b in zip(c1, c2))


def _as_bytes(plaintext: bytes | bytearray | str) -> bytes:
    if isinstance(plaintext, str):
        return plaintext.encode("utf-8")
    return bytes(plaintext)


def plaintext_sensitivity(plaintext: bytes | str, key: Key,
                          cfg: CipherConfig | None = None, flip_bit: int = 0) -> float:
    """Percentage of ciphertext bits changed by flipping one plaintext bit."""
    p = _as_bytes(plaintext)
    if not p:
        raise DomainError("plaintext sensitivity needs a non-empty plaintext")
    if not 0 <= flip_bit < 8 * len(p):
        raise DomainError(f"flip_bit {flip_bit} outside [0, {8 * len(p)})")
    if cfg is None:
        cfg = default_config(key.kind)
    flipped = bytearray(p)
    flipped[flip_bit >> 3] ^= 1 << (flip_bit & 7)
    c1 = encrypt_bytes(p, key, cfg)
    c2 = encrypt_bytes(bytes(flipped), key, cfg)
    return 100.0 * hamming_bits(c1, c2) / (8 * len(p))


def _flip_float_bit(value: float, bit: int) -> float:
    if not 0 <= bit < 64:
        raise DomainError(f"float bit index {bit} outside [0, 64)")
    packed = bytearray(struct.pack("<d", value))
    packed[bit >> 3] ^= 1 << (bit & 7)
    return struct.unpack("<d", bytes(packed))[0]


def key_sensitivity(plaintext: bytes | str, key: Key,
                    cfg: CipherConfig | None = None, mode: str = "increment",
                    delta: float = 1e-4, component: str = "a", bit: int = 0) -> float:
    """Percentage of ciphertext bits changed by a minimal key perturbation.

    In "increment" mode the a component is increased by delta (the grid
    increment by default); in "bitflip" mode one bit of the chosen
    component's 64-bit float representation is flipped.
    """
    p = _as_bytes(plaintext)
    if not p:
        raise DomainError("key sensitivity needs a non-empty plaintext")
    if cfg is None:
        cfg = default_config(key.kind)
    params = key.params
    if mode == "increment":
        if not math.isfinite(delta):
            raise DomainError("delta must be finite")
        perturbed = replace(params, a=params.a + delta)
    elif mode == "bitflip":
        if component not in ("a", "b"):
            raise DomainError(f"unknown key component {component!r}")
        value = _flip_float_bit(getattr(params, component), bit)
        if not math.isfinite(value):
            raise DomainError("bit flip produced a non-finite key component")
        perturbed = replace(params, **{component: value})
    else:
        raise DomainError(f"unknown key sensitivity mode {mode!r}")
    c1 = encrypt_bytes(p, key, cfg)
    c2 = encrypt_bytes(p, Key(key.kind, perturbed), cfg)
    return 100.0 * hamming_bits(c1, c2) / (8 * len(p))


@dataclass(frozen=True)
class IdentifiabilityResult:
    """Outcome of an output-equality scan over a key grid."""

    identifiable: bool
    true_key: Key               # snapped onto the scan grid
    matching_keys: list[Key]    # grid keys reproducing the reference output
    grid_size: int

    @property
    def verdict(self) -> str:
        return "I" if self.identifiable else "NI"


@dataclass(frozen=True)
class AttackResult:
    """Outcome of a known-plaintext key search over a grid."""

    candidates: list[Key]
    recovered: Key | None
    robust: bool

    @property
    def verdict(self) -> str:
        return "R" if self.robust else "NR"


def _scan_chunk(args) -> list[int]:
    """Flat grid indices in [start, stop) whose key reproduces the
    reference ciphertext; divergent keys count as non-matching."""
    domain, start, stop, data, cfg, reference = args
    nb = domain.axis_counts()[1]
    kind = domain.kind
    hits = []
    for flat in range(start, stop):
        params = domain.params_at(*divmod(flat, nb))
        try:
            if encrypt_bytes(data, Key(kind, params), cfg) == reference:
                hits.append(flat)
        except DivergenceError:
            pass
    return hits


def _matching_indices(domain: KeyDomain, data: bytes, cfg: CipherConfig,
                      reference: bytes, workers: int,
                      on_progress: Callable[[int, int], None] | None) -> list[int]:
    total = domain.size()
    workers = effective_workers(workers)
    if workers <= 1:
        hits = []
        done = 0
        step = 4096
        for start in range(0, total, step):
            stop = min(start + step, total)
            hits.extend(_scan_chunk((domain, start, stop, data, cfg, reference)))
            done = stop
            if on_progress:
                on_progress(done, total)
        return hits
    chunk = max(256, -(-total // (workers * 4)))
    jobs = [(domain, start, min(start + chunk, total), data, cfg, reference)
            for start in range(0, total, chunk)]
    hits = []
    done = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for job, result in zip(jobs, pool.map(_scan_chunk, jobs)):
            hits.extend(result)
            done += job[2] - job[1]
            if on_progress:
                on_progress(done, total)
    return hits


def identifiability_scan(plaintext: bytes | str, true_key: Key, domain: KeyDomain,
                         cfg: CipherConfig | None = None, iteration_value: int = 3,
                         compare_len: int | None = None, workers: int = 1,
                         on_progress: Callable[[int, int], None] | None = None,
                         ) -> IdentifiabilityResult:
    """Decide whether the true key is the only grid key reproducing the
    cipher's output on this plaintext.

    Both iteration counts are set to iteration_value for the scan, and
    outputs are compared by exact integer equality on the first
    compare_len symbols (default: min(len(plaintext), 8)). The true key
    is snapped to the nearest grid point first.
    """
    p = _as_bytes(plaintext)
    if not p:
        raise DomainError("identifiability scan needs a non-empty plaintext")
    if true_key.kind is not domain.kind:
        raise DomainError("true key and domain use different map kinds")
    if iteration_value < 1:
        raise DomainError("iteration_value must be >= 1")
    if compare_len is None:
        compare_len = min(len(p), 8)
    if not 1 <= compare_len <= len(p):
        raise DomainError(f"compare_len {compare_len} outside [1, {len(p)}]")
    if cfg is None:
        cfg = default_config(true_key.kind)
    scan_cfg = replace(cfg, n1=iteration_value, n2=iteration_value)
    snapped = Key(domain.kind, domain.snap(true_key.params))
    data = p[:compare_len]
    reference = encrypt_bytes(data, snapped, scan_cfg)
    nb = domain.axis_counts()[1]
    indices = _matching_indices(domain, data, scan_cfg, reference, workers, on_progress)
    matching = [Key(domain.kind, domain.params_at(*divmod(flat, nb))) for flat in indices]
    return IdentifiabilityResult(
        identifiable=(matching == [snapped]),
        true_key=snapped,
        matching_keys=matching,
        grid_size=domain.size(),
    )


def known_plaintext_attack(ciphertext: bytes, known_prefix: bytes | str,
                           domain: KeyDomain, cfg: CipherConfig | None = None,
                           workers: int = 1,
                           on_progress: Callable[[int, int], None] | None = None,
                           ) -> AttackResult:
    """Exhaustive grid search for keys whose encryption of the known
    plaintext prefix reproduces the observed ciphertext prefix.

    The cipher is robust against the attack when no single key is
    isolated, or when the isolated key fails to decrypt the full
    ciphertext into an extension of the known prefix.
    """
    prefix = _as_bytes(known_prefix)
    if not prefix:
        raise DomainError("known-plaintext attack needs a non-empty prefix")
    ciphertext = bytes(ciphertext)
    if len(ciphertext) < len(prefix):
        raise DomainError("ciphertext shorter than the known prefix")
    if cfg is None:
        cfg = default_config(domain.kind)
    reference = ciphertext[:len(prefix)]
    nb = domain.axis_counts()[1]
    indices = _matching_indices(domain, prefix, cfg, reference, workers, on_progress)
    candidates = [Key(domain.kind, domain.params_at(*divmod(flat, nb))) for flat in indices]
    recovered = candidates[0] if len(candidates) == 1 else None
    if recovered is None:
        robust = True
    else:
        try:
            robust = not decrypt(ciphertext, recovered, cfg).startswith(prefix)
        except DivergenceError:
            robust = True
    return AttackResult(candidates=candidates, recovered=recovered, robust=robust)


@dataclass
class AnalysisRow:
    """One row of the per-key report table."""

    index: int
    plaintext: str
    key: Key
    domain: KeyDomain
    ciphertext_hex: str = ""
    plaintext_sensitivity_pct: float = field(default=math.nan)
    key_sensitivity_pct: float = field(default=math.nan)
    identifiable: str = "NI"
    robust_kpa: str = "R"
    brute_force_secret: str = "NO"
    error: str | None = None


REPORT_HEADER = [
    "index", "plaintext", "key_a", "key_b", "ciphertext_hex",
    "pt_sensitivity_pct", "key_sensitivity_pct",
    "domain_lo_a", "domain_lo_b", "domain_hi_a", "domain_hi_b", "increment",
    "identifiable", "robust_kpa", "brute_force_secret",
]


def analysis_report(rows_spec: Sequence[tuple[str | bytes, Key, KeyDomain]],
                    cfg: CipherConfig | None = None, *,
                    iteration_values: Sequence[int] = (2, 3),
                    compare_len: int = 8, kpa_prefix_len: int = 2,
                    flip_bit: int = 0, key_delta: float | None = None,
                    workers: int = 1,
                    log: Callable[[str], None] | None = None) -> list[AnalysisRow]:
    """Run every analysis on each (plaintext, key, domain) triple.

    Per-row failures are recorded in the row's error field and the run
    continues; the brute-force verdict always mirrors identifiability.
    """
    rows_spec = list(rows_spec)
    rows = []
    for idx, (plaintext, key, domain) in enumerate(rows_spec, start=1):
        t0 = perf_counter()
        p = _as_bytes(plaintext)
        text = plaintext if isinstance(plaintext, str) else p.decode("utf-8", "backslashreplace")
        row_cfg = cfg if cfg is not None else default_config(key.kind)
        row = AnalysisRow(index=idx, plaintext=text, key=key, domain=domain)
        errors = []

        ciphertext = None
        try:
            ciphertext = encrypt_bytes(p, key, row_cfg)
            row.ciphertext_hex = ciphertext.hex()
        except (DomainError, DivergenceError) as exc:
            errors.append(f"encrypt: {exc}")

        try:
            row.plaintext_sensitivity_pct = plaintext_sensitivity(p, key, row_cfg, flip_bit)
        except (DomainError, DivergenceError) as exc:
            errors.append(f"plaintext_sensitivity: {exc}")

        try:
            delta = domain.increment if key_delta is None else key_delta
            row.key_sensitivity_pct = key_sensitivity(p, key, row_cfg, delta=delta)
        except (DomainError, DivergenceError) as exc:
            errors.append(f"key_sensitivity: {exc}")

        try:
            identifiable = any(
                identifiability_scan(p, key, domain, row_cfg, iteration_value=iv,
                                     compare_len=min(len(p), compare_len),
                                     workers=workers).identifiable
                for iv in iteration_values)
            row.identifiable = "I" if identifiable else "NI"
        except (DomainError, DivergenceError) as exc:
            errors.append(f"identifiability: {exc}")

        if ciphertext is not None:
            try:
                attack = known_plaintext_attack(
                    ciphertext, p[:min(len(p), kpa_prefix_len)], domain, row_cfg,
                    workers=workers)
                row.robust_kpa = attack.verdict
            except (DomainError, DivergenceError) as exc:
                errors.append(f"attack: {exc}")
        else:
            errors.append("attack: skipped, no ciphertext")

        row.brute_force_secret = "YES" if row.identifiable == "I" else "NO"
        row.error = "; ".join(errors) if errors else None
        rows.append(row)
        if log:
            log(f"row {idx}/{len(rows_spec)} key=({key.params.a}, {key.params.b}) "
                f"grid={domain.size()} ident={row.identifiable} kpa={row.robust_kpa} "
                f"elapsed={perf_counter() - t0:.2f}s"
                + (f" error={row.error}" if row.error else ""))
    return rows


def write_report_csv(rows: Sequence[AnalysisRow], out: TextIO) -> None:
    writer = csv.writer(out)
    writer.writerow(REPORT_HEADER)
    for r in rows:
        writer.writerow([
            r.index, r.plaintext, repr(r.key.params.a), repr(r.key.params.b),
            r.ciphertext_hex,
            repr(r.plaintext_sensitivity_pct), repr(r.key_sensitivity_pct),
            repr(r.domain.lower[0]), repr(r.domain.lower[1]),
            repr(r.domain.upper[0]), repr(r.domain.upper[1]),
            repr(r.domain.increment),
            r.identifiable, r.robust_kpa, r.brute_force_secret,
        ])


def read_report_csv(inp: TextIO, kind: MapKind) -> list[AnalysisRow]:
    """Parse a report CSV back into rows (the CSV does not carry the map
    kind or torus modulus, so the kind is supplied by the caller)."""
    reader = csv.reader(inp)
    try:
        header = next(reader)
    except StopIteration:
        raise ValueError("empty report CSV")
    if header != REPORT_HEADER:
        raise ValueError(f"unexpected report header: {header}")
    rows = []
    for rec in reader:
        if len(rec) != len(REPORT_HEADER):
            raise ValueError(f"report row has {len(rec)} columns, expected {len(REPORT_HEADER)}")
        (index, plaintext, key_a, key_b, ciphertext_hex, pt_pct, key_pct,
         lo_a, lo_b, hi_a, hi_b, increment, identifiable, robust, brute) = rec
        if identifiable not in ("I", "NI") or robust not in ("R", "NR") \
                or brute not in ("YES", "NO"):
            raise ValueError(f"unexpected verdicts in report row {index}")
        domain = KeyDomain(kind, (float(lo_a), float(lo_b)),
                           (float(hi_a), float(hi_b)), float(increment))
        rows.append(AnalysisRow(
            index=int(index), plaintext=plaintext,
            key=Key(kind, MapParams(float(key_a), float(key_b), domain.n_modulus)),
            domain=domain, ciphertext_hex=ciphertext_hex,
            plaintext_sensitivity_pct=float(pt_pct),
            key_sensitivity_pct=float(key_pct),
            identifiable=identifiable, robust_kpa=robust, brute_force_secret=brute,
        ))
    return rows


def load_report_spec(path: str | os.PathLike) -> list[tuple[str, Key, KeyDomain]]:
    """Load (plaintext, key, domain) triples from a JSON spec file."""
    with open(path, "r", encoding="utf-8") as f:
        try:
            items = json.load(f)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed report spec JSON: {exc}")
    if not isinstance(items, list):
        raise ValueError("report spec must be a JSON list")
    triples = []
    for item in items:
        kobj = item["key"]
        kind = MapKind.parse(str(kobj["kind"]))
        n_mod = float(kobj.get("n_modulus", 1.0))
        key = Key(kind, MapParams(float(kobj["a"]), float(kobj["b"]), n_mod))
        dobj = item["domain"]
        domain = KeyDomain(
            kind,
            (float(dobj["lower"][0]), float(dobj["lower"][1])),
            (float(dobj["upper"][0]), float(dobj["upper"][1])),
            float(dobj.get("increment", 1e-4)),
            n_modulus=n_mod,
        )
        triples.append((str(item["plaintext"]), key, domain))
    return triples


def builtin_spec_path(name: str):
    """Path to one of the packaged report specs, e.g. 'table1_arnold'."""
    candidate = resources.files("chaoscrypt").joinpath(f"specs/{name}.json")
    if not candidate.is_file():
        raise ValueError(f"no builtin report spec named {name!r}")
    return candidate


@dataclass(frozen=True)
class CipherSummary:
    """One cipher's aggregate line of the comparison table."""

    cipher: str
    rows: int
    key_space: int
    key_space_reference: float
    key_space_flagged: bool
    pt_sensitivity_min: float
    pt_sensitivity_max: float
    key_sensitivity_min: float
    key_sensitivity_max: float
    identifiable_keys: int
    robust_keys: int
    any_identifiable: bool
    any_robust: bool
    exceeds_2pow100: bool


def _minmax(values: Iterable[float]) -> tuple[float, float]:
    clean = [v for v in values if not math.isnan(v)]
    if not clean:
        return math.nan, math.nan
    return min(clean), max(clean)


def _summarize(rows: Sequence[AnalysisRow]) -> CipherSummary:
    if not rows:
        raise DomainError("cannot summarize an empty report")
    kind = rows[0].domain.kind
    computed = key_space_size(FULL_KEY_DOMAIN[kind], KEY_SPACE_RESOLUTION)
    reference = REFERENCE_KEY_SPACE[kind]
    ratio = computed / reference
    pt_min, pt_max = _minmax(r.plaintext_sensitivity_pct for r in rows)
    ks_min, ks_max = _minmax(r.key_sensitivity_pct for r in rows)
    n_ident = sum(1 for r in rows if r.identifiable == "I")
    n_robust = sum(1 for r in rows if r.robust_kpa == "R")
    return CipherSummary(
        cipher=kind.value,
        rows=len(rows),
        key_space=computed,
        key_space_reference=reference,
        key_space_flagged=not (0.5 <= ratio <= 2.0),
        pt_sensitivity_min=pt_min, pt_sensitivity_max=pt_max,
        key_sensitivity_min=ks_min, key_sensitivity_max=ks_max,
        identifiable_keys=n_ident, robust_keys=n_robust,
        any_identifiable=n_ident > 0, any_robust=n_robust > 0,
        exceeds_2pow100=computed > BRUTE_FORCE_FLOOR,
    )


def compare_ciphers(rows_first: Sequence[AnalysisRow],
                    rows_second: Sequence[AnalysisRow]) -> list[CipherSummary]:
    """Aggregate two reports into the two-line cipher comparison."""
    return [_summarize(rows_first), _summarize(rows_second)]


COMPARISON_HEADER = [
    "cipher", "rows", "key_space", "key_space_reference", "key_space_flagged",
    "pt_sensitivity_min_pct", "pt_sensitivity_max_pct",
    "key_sensitivity_min_pct", "key_sensitivity_max_pct",
    "identifiable_keys", "robust_keys",
    "any_identifiable", "any_robust", "key_space_exceeds_2pow100",
]


def write_comparison_csv(summaries: Sequence[CipherSummary], out: TextIO) -> None:
    writer = csv.writer(out)
    writer.writerow(COMPARISON_HEADER)
    for s in summaries:
        writer.writerow([
            s.cipher, s.rows, s.key_space, repr(s.key_space_reference),
            "yes" if s.key_space_flagged else "no",
            repr(s.pt_sensitivity_min), repr(s.pt_sensitivity_max),
            repr(s.key_sensitivity_min), repr(s.key_sensitivity_max),
            s.identifiable_keys, s.robust_keys,
            "yes" if s.any_identifiable else "no",
            "yes" if s.any_robust else "no",
            "yes" if s.exceeds_2pow100 else "no",
        ])
