"""Command-line front end.

Commands: encrypt, decrypt, keygen, trajectory, sensitivity, identify,
attack, report, compare. Every command exits 0 on success and prints a
single machine-parseable `error: ...` line on stderr otherwise
(exit 1: runtime failure such as unreadable files, malformed JSON or hex,
or a divergent orbit; exit 2: bad usage; exit 3: key outside the domain
passed to encrypt/decrypt via --domain).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from time import perf_counter

from . import analysis, cipher, maps
from .analysis import KeyDomain
from .cipher import CipherConfig, Key
from .maps import DivergenceError, MapKind, MapParams, State


def _parse_floats(text: str, n_min: int, n_max: int, what: str) -> list[float]:
    parts = [p for p in text.split(",") if p.strip()]
    if not n_min <= len(parts) <= n_max:
        raise ValueError(f"{what} expects {n_min}"
                         + (f" to {n_max}" if n_max != n_min else "")
                         + f" comma-separated numbers, got {text!r}")
    return [float(p) for p in parts]


def _domain_arg(text: str) -> tuple[float, float, float, float]:
    a_lo, b_lo, a_hi, b_hi = _parse_floats(text, 4, 4, "--domain")
    return a_lo, b_lo, a_hi, b_hi


def _params_arg(text: str) -> MapParams:
    vals = _parse_floats(text, 2, 3, "--params")
    return MapParams(vals[0], vals[1], vals[2] if len(vals) == 3 else 1.0)


def _init_arg(text: str) -> State:
    x, y = _parse_floats(text, 2, 2, "--init")
    return State(x, y)


def _load_cfg(args, kind: MapKind) -> CipherConfig:
    if getattr(args, "config", None):
        return cipher.load_config(args.config, kind)
    return cipher.default_config(kind)


def _plaintext_from(args) -> bytes:
    if getattr(args, "text", None) is not None:
        return args.text.encode("utf-8")
    with open(args.plaintext_file, "rb") as f:
        return f.read()


def _read_hex_file(path: str) -> bytes:
    with open(path, "r", encoding="ascii") as f:
        digits = f.read().translate(str.maketrans("", "", " \t\r\n"))
    if len(digits) % 2:
        raise ValueError(f"odd number of hex digits in {path}")
    try:
        return bytes.fromhex(digits)
    except ValueError:
        raise ValueError(f"malformed hex in {path}")


def _key_dict(key: Key) -> dict:
    return {"kind": key.kind.value, "a": key.params.a, "b": key.params.b,
            "n_modulus": key.params.n_modulus}


def _progress(label: str):
    last = [0.0]
    t0 = perf_counter()

    def report(done: int, total: int):
        now = perf_counter()
        if done >= total or now - last[0] >= 2.0:
            last[0] = now
            print(f"[{label}] {done}/{total} keys, {now - t0:.1f}s",
                  file=sys.stderr)

    return report


def cmd_encrypt(args) -> int:
    key = cipher.load_key(args.key)
    code = _check_key_domain(args, key)
    if code:
        return code
    cipher.encrypt_file(args.infile, args.out, key, _load_cfg(args, key.kind))
    return 0


def cmd_decrypt(args) -> int:
    key = cipher.load_key(args.key)
    code = _check_key_domain(args, key)
    if code:
        return code
    cipher.decrypt_file(args.infile, args.out, key, _load_cfg(args, key.kind))
    return 0


def _check_key_domain(args, key: Key) -> int:
    if args.domain is None:
        return 0
    a_lo, b_lo, a_hi, b_hi = args.domain
    box = KeyDomain(key.kind, (a_lo, b_lo), (a_hi, b_hi), args.increment,
                    n_modulus=key.params.n_modulus)
    if not box.contains(key.params):
        print(f"error: key ({key.params.a}, {key.params.b}) outside domain "
              f"[{a_lo}, {b_lo}]..[{a_hi}, {b_hi}]", file=sys.stderr)
        return 3
    return 0


def cmd_keygen(args) -> int:
    kind = MapKind.parse(args.kind)
    a_lo, b_lo, a_hi, b_hi = args.domain
    domain = KeyDomain(kind, (a_lo, b_lo), (a_hi, b_hi), args.increment,
                       n_modulus=args.n_modulus)
    rng = random.Random(args.seed)
    na, nb = domain.axis_counts()
    key = Key(kind, domain.params_at(rng.randrange(na), rng.randrange(nb)))
    line = cipher.key_to_json(key)
    if args.out:
        with open(args.out, "w", encoding="ascii") as f:
            f.write(line + "\n")
    else:
        print(line)
    return 0


def cmd_trajectory(args) -> int:
    kind = MapKind.parse(args.kind)
    start = args.init if args.init is not None else cipher.DEFAULT_INITIAL_STATE[kind]
    points = maps.trajectory(kind, start, args.params, args.n)
    with open(args.out, "w", encoding="ascii") as f:
        maps.write_trajectory_csv(points, f)
    print(f"{len(points)} points -> {args.out}")
    return 0


def cmd_sensitivity(args) -> int:
    key = cipher.load_key(args.key)
    cfg = _load_cfg(args, key.kind)
    plaintext = _plaintext_from(args)
    if args.mode == "pt":
        pct = analysis.plaintext_sensitivity(plaintext, key, cfg, args.flip_bit)
    else:
        pct = analysis.key_sensitivity(plaintext, key, cfg, delta=args.delta)
    print(f"{pct:.4f}")
    return 0


def cmd_identify(args) -> int:
    key = cipher.load_key(args.key)
    a_lo, b_lo, a_hi, b_hi = args.domain
    domain = KeyDomain(key.kind, (a_lo, b_lo), (a_hi, b_hi), args.increment,
                       n_modulus=key.params.n_modulus)
    if not domain.contains(key.params):
        print(f"warning: key ({key.params.a}, {key.params.b}) outside the scan "
              "domain; it will be snapped to the nearest grid point", file=sys.stderr)
    cfg = _load_cfg(args, key.kind)
    plaintext = _plaintext_from(args)
    t0 = perf_counter()
    result = analysis.identifiability_scan(
        plaintext, key, domain, cfg, iteration_value=args.iters,
        compare_len=args.compare_len, workers=args.workers,
        on_progress=_progress("identify"))
    elapsed = perf_counter() - t0
    if args.json:
        print(json.dumps({
            "verdict": result.verdict,
            "identifiable": result.identifiable,
            "matching": len(result.matching_keys),
            "grid": result.grid_size,
            "true_key": _key_dict(result.true_key),
            "matching_keys": [_key_dict(k) for k in result.matching_keys[:20]],
            "elapsed_s": elapsed,
        }))
    else:
        print(f"verdict={result.verdict} matching={len(result.matching_keys)} "
              f"grid={result.grid_size} elapsed={elapsed:.2f}s")
    return 0


def cmd_attack(args) -> int:
    kind = MapKind.parse(args.kind)
    a_lo, b_lo, a_hi, b_hi = args.domain
    domain = KeyDomain(kind, (a_lo, b_lo), (a_hi, b_hi), args.increment,
                       n_modulus=args.n_modulus)
    cfg = _load_cfg(args, kind)
    ciphertext = _read_hex_file(args.cipher)
    t0 = perf_counter()
    result = analysis.known_plaintext_attack(
        ciphertext, args.known_prefix.encode("utf-8"), domain, cfg,
        workers=args.workers, on_progress=_progress("attack"))
    elapsed = perf_counter() - t0
    if args.json:
        print(json.dumps({
            "candidates": len(result.candidates),
            "candidate_keys": [_key_dict(k) for k in result.candidates[:20]],
            "recovered": _key_dict(result.recovered) if result.recovered else None,
            "robust": result.robust,
            "verdict": result.verdict,
            "grid": domain.size(),
            "elapsed_s": elapsed,
        }))
    else:
        rec = (f"({result.recovered.params.a}, {result.recovered.params.b})"
               if result.recovered else "none")
        print(f"candidates={len(result.candidates)} recovered={rec} "
              f"verdict={result.verdict} grid={domain.size()} elapsed={elapsed:.2f}s")
    return 0


def _resolve_spec(source: str):
    if os.path.exists(source):
        return source
    return analysis.builtin_spec_path(source)


def cmd_report(args) -> int:
    triples = analysis.load_report_spec(_resolve_spec(args.spec))
    t0 = perf_counter()
    rows = analysis.analysis_report(
        triples, workers=args.workers,
        log=lambda s: print(f"[report] {s}", file=sys.stderr))
    with open(args.out, "w", encoding="utf-8", newline="") as f:
        analysis.write_report_csv(rows, f)
    pt_min, pt_max = analysis._minmax(r.plaintext_sensitivity_pct for r in rows)
    ks_min, ks_max = analysis._minmax(r.key_sensitivity_pct for r in rows)
    band = analysis.REFERENCE_PT_SENSITIVITY_BAND.get(
        rows[0].domain.kind) if rows else None
    print(json.dumps({
        "rows": len(rows),
        "out": args.out,
        "pt_sensitivity_range_pct": [pt_min, pt_max],
        "key_sensitivity_range_pct": [ks_min, ks_max],
        "reference_pt_band_pct": list(band) if band else None,
        "errors": sum(1 for r in rows if r.error),
        "elapsed_s": perf_counter() - t0,
    }))
    return 0


def cmd_compare(args) -> int:
    with open(args.arnold, "r", encoding="utf-8", newline="") as f:
        rows_a = analysis.read_report_csv(f, MapKind.ARNOLD)
    with open(args.duffing, "r", encoding="utf-8", newline="") as f:
        rows_d = analysis.read_report_csv(f, MapKind.DUFFING)
    summaries = analysis.compare_ciphers(rows_a, rows_d)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as f:
            analysis.write_comparison_csv(summaries, f)
    else:
        analysis.write_comparison_csv(summaries, sys.stdout)
    for s in summaries:
        if s.key_space_flagged:
            print(f"warning: {s.cipher} computed key space {s.key_space:.3e} "
                  f"disagrees with the reference figure {s.key_space_reference:.0e}",
                  file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaoscrypt",
        description="Chaotic-map stream cipher and cryptanalysis toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text,
                           formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        p.set_defaults(func=func)
        return p

    p = add("encrypt", cmd_encrypt, "encrypt a file to hex ciphertext")
    p.add_argument("--in", dest="infile", required=True, help="input file (raw bytes)")
    p.add_argument("--out", required=True, help="output file (lowercase hex)")
    p.add_argument("--key", required=True, help="key JSON file")
    p.add_argument("--config", help="cipher config JSON file")
    p.add_argument("--domain", type=_domain_arg, default=None,
                   help="a_lo,b_lo,a_hi,b_hi; reject keys outside it (exit 3)")
    p.add_argument("--increment", type=float, default=1e-4,
                   help="grid increment used with --domain")

    p = add("decrypt", cmd_decrypt, "decrypt a hex ciphertext file")
    p.add_argument("--in", dest="infile", required=True, help="input file (hex)")
    p.add_argument("--out", required=True, help="output file (raw bytes)")
    p.add_argument("--key", required=True, help="key JSON file")
    p.add_argument("--config", help="cipher config JSON file")
    p.add_argument("--domain", type=_domain_arg, default=None,
                   help="a_lo,b_lo,a_hi,b_hi; reject keys outside it (exit 3)")
    p.add_argument("--increment", type=float, default=1e-4,
                   help="grid increment used with --domain")

    p = add("keygen", cmd_keygen, "draw a key uniformly from a domain grid")
    p.add_argument("--kind", required=True, choices=["arnold", "duffing"])
    p.add_argument("--domain", type=_domain_arg, required=True,
                   help="a_lo,b_lo,a_hi,b_hi")
    p.add_argument("--increment", type=float, default=1e-4)
    p.add_argument("--n-modulus", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=None,
                   help="seed for a reproducible draw")
    p.add_argument("--out", help="write the key JSON here instead of stdout")

    p = add("trajectory", cmd_trajectory, "dump an orbit as k,x,y CSV")
    p.add_argument("--kind", required=True, choices=["arnold", "duffing"])
    p.add_argument("--params", type=_params_arg, required=True, help="a,b[,N]")
    p.add_argument("--init", type=_init_arg, default=None,
                   help="x,y start point (default: the kind's cipher start state)")
    p.add_argument("--n", type=int, required=True, help="number of steps")
    p.add_argument("--out", required=True, help="CSV output path")

    p = add("sensitivity", cmd_sensitivity,
            "plaintext or key sensitivity percentage")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--text", help="inline plaintext (UTF-8)")
    src.add_argument("--plaintext-file", help="plaintext file (raw bytes)")
    p.add_argument("--key", required=True, help="key JSON file")
    p.add_argument("--mode", required=True, choices=["pt", "key"])
    p.add_argument("--delta", type=float, default=1e-4,
                   help="key increment (key mode)")
    p.add_argument("--flip-bit", type=int, default=0,
                   help="plaintext bit to flip (pt mode)")
    p.add_argument("--config", help="cipher config JSON file")

    p = add("identify", cmd_identify, "output-equality scan over a key grid")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--text", help="inline plaintext (UTF-8)")
    src.add_argument("--plaintext-file", help="plaintext file (raw bytes)")
    p.add_argument("--key", required=True, help="true key JSON file")
    p.add_argument("--domain", type=_domain_arg, required=True,
                   help="a_lo,b_lo,a_hi,b_hi")
    p.add_argument("--increment", type=float, default=1e-4)
    p.add_argument("--iters", type=int, default=3,
                   help="iteration count used for both cipher stages")
    p.add_argument("--compare-len", type=int, default=None,
                   help="symbols compared (default: min(len, 8))")
    p.add_argument("--workers", type=int, default=1,
                   help="parallel scan processes (capped by CHAOSCRYPT_THREADS)")
    p.add_argument("--config", help="cipher config JSON file")
    p.add_argument("--json", action="store_true", help="machine-readable output")

    p = add("attack", cmd_attack, "known-plaintext key search over a grid")
    p.add_argument("--cipher", required=True, help="hex ciphertext file")
    p.add_argument("--known-prefix", required=True,
                   help="known leading plaintext characters (UTF-8)")
    p.add_argument("--kind", required=True, choices=["arnold", "duffing"])
    p.add_argument("--domain", type=_domain_arg, required=True,
                   help="a_lo,b_lo,a_hi,b_hi")
    p.add_argument("--increment", type=float, default=1e-4)
    p.add_argument("--n-modulus", type=float, default=1.0)
    p.add_argument("--workers", type=int, default=1,
                   help="parallel scan processes (capped by CHAOSCRYPT_THREADS)")
    p.add_argument("--config", help="cipher config JSON file")
    p.add_argument("--json", action="store_true", help="machine-readable output")

    p = add("report", cmd_report, "full analysis table from a row spec")
    p.add_argument("--spec", required=True,
                   help="row spec JSON path, or a builtin name "
                        "(table1_arnold, table2_duffing)")
    p.add_argument("--out", required=True, help="report CSV output path")
    p.add_argument("--workers", type=int, default=1,
                   help="parallel scan processes (capped by CHAOSCRYPT_THREADS)")

    p = add("compare", cmd_compare, "merge two reports into the comparison table")
    p.add_argument("--arnold", required=True, help="report CSV of the cat-map cipher")
    p.add_argument("--duffing", required=True, help="report CSV of the Duffing cipher")
    p.add_argument("--out", help="comparison CSV path (default: stdout)")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DivergenceError as exc:
        print(f"error: divergence: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
