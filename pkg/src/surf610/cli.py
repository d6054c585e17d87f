"""Command-line front end.

Every command prints one key-sorted JSON document on stdout and a short
human summary on stderr.  Exit status: 0 success, 2 invalid input or failed
validation (the JSON carries ``error`` and ``reason``), 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .fields import GF, check_scan_prime
from .hilbert import chi_riemann_roch, ci_hilbert_series
from .moduli import VPrimeParams, orbit, param_counts
from .p1sheaf import CASES, pencil_case_verdict, random_gamma
from .sampling import random_surface
from .scan import count_points, enumerate_cone_singularities
from .surface import (
    SurfacePair, ValidationError, base_locus_report, canonical_image, canonical_map_degree,
    normalize, validate_pair,
)
from .wring import PolyParseError


class InputError(Exception):
    def __init__(self, reason: str, detail: str):
        super().__init__(detail)
        self.reason = reason
        self.detail = detail


@dataclass
class RunConfig:
    command: str
    input: Path | None = None
    prime: int | None = None
    seed: int | None = None
    jobs: int = 1
    max_degree: int = 10
    samples: int = 20
    case: str | None = None
    output: Path | None = None
    timing: bool = False

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        return cls(**{k: getattr(ns, k) for k in cls.__dataclass_fields__ if hasattr(ns, k)})


def _read_pair(cfg: RunConfig) -> SurfacePair:
    if cfg.input is None:
        raise InputError("missing_input", "this command needs -i PAIR_FILE")
    try:
        text = Path(cfg.input).read_text()
    except OSError as exc:
        raise InputError("missing_input", f"cannot read {cfg.input}: {exc.strerror}") from exc
    try:
        return SurfacePair.from_text(text)
    except PolyParseError as exc:
        raise InputError("parse_error", f"{exc} (position {exc.pos})") from exc
    except ValidationError as exc:
        raise InputError(exc.reason, str(exc)) from exc
    except ValueError as exc:
        raise InputError("parse_error", str(exc)) from exc


def _prime(cfg: RunConfig) -> int:
    if cfg.prime is None:
        raise InputError("missing_prime", "this command needs -p PRIME")
    try:
        check_scan_prime(cfg.prime)
    except ValueError as exc:
        raise InputError("bad_prime", str(exc)) from exc
    return cfg.prime


def _seed(cfg: RunConfig) -> int:
    if cfg.seed is None:
        raise InputError("missing_seed", "randomized commands need an explicit --seed")
    return cfg.seed


def _valid_pair(cfg: RunConfig) -> SurfacePair:
    pair = _read_pair(cfg)
    rep = validate_pair(pair)
    if not rep.ok:
        raise ValidationError(rep.reason, "pair fails validation")
    return pair


# commands ----------------------------------------------------------------

def cmd_hilbert(cfg):
    if cfg.max_degree < 0:
        raise InputError("bad_degree", "--max-degree must be non-negative")
    h = ci_hilbert_series(cfg.max_degree)
    rr = all(h[n] == chi_riemann_roch(n) for n in range(4, cfg.max_degree + 1))
    out = {
        "max_degree": cfg.max_degree,
        "coefficients": list(h.coefficients),
        "riemann_roch_match": rr,
        "gorenstein_symmetric": h.gorenstein_symmetric(),
    }
    return out, f"Hilbert coefficients through degree {cfg.max_degree}: {list(h.coefficients)}"


def cmd_validate(cfg):
    pair = _read_pair(cfg)
    rep = validate_pair(pair)
    out = rep.to_json()
    if not rep.ok:
        out.update(error="validation", reason=rep.reason)
        return out, f"invalid pair: {rep.reason}", 2
    return out, "pair is valid"


def cmd_normalize(cfg):
    pair = _valid_pair(cfg)
    nf, cert = normalize(pair)
    out = {
        "params": nf.to_json(),
        "certificate": cert.to_json(),
        "certificate_verified": cert.verify(pair, nf.expand()),
        "normal_form": nf.expand().to_json(),
    }
    return out, f"normal form reached; alpha0 = {nf.alpha0}"


def cmd_base_locus(cfg):
    rep = base_locus_report(_valid_pair(cfg))
    return rep.to_json(), "base locus empty" if rep.empty else f"common zero on the Y-line ({rep.common_factor})"


def cmd_canonical_image(cfg):
    pair = _valid_pair(cfg)
    nf, _ = normalize(pair)
    img = canonical_image(nf)
    out = img.to_json()
    out["certificate_verified"] = img.verify(nf.expand())
    out["map_degree"], out["image_degree"] = canonical_map_degree(nf)
    return out, f"canonical image has degree {img.degree}"


def cmd_map_degree(cfg):
    nf, _ = normalize(_valid_pair(cfg))
    d, e = canonical_map_degree(nf)
    return {"map_degree": d, "image_degree": e, "product": d * e}, f"canonical map of degree {d} onto a degree-{e} surface"


def cmd_smooth_scan(cfg):
    pair = _read_pair(cfg)
    p = _prime(cfg)
    rep = enumerate_cone_singularities(pair, p, max(1, cfg.jobs))
    msg = f"{rep.count} singular cone points over F_{p}"
    if rep.elapsed_ms is not None:
        msg += f" ({rep.elapsed_ms:.0f} ms)"
    return rep.to_json(timing=cfg.timing), msg


def cmd_count_points(cfg):
    pc = count_points(_read_pair(cfg), _prime(cfg))
    return pc.to_json(), f"{pc.points} points over F_{pc.prime}"


def cmd_rule_out_pencil(cfg):
    rng = random.Random(_seed(cfg))
    entries = []
    for i in range(cfg.samples):
        case = CASES[i % len(CASES)]
        entries.append(pencil_case_verdict(random_gamma(case, rng)).to_json())
    ok = all(e["ruled_out"] for e in entries)
    out = {"seed": cfg.seed, "samples": len(entries), "entries": entries, "all_ruled_out": ok}
    return out, f"{sum(e['ruled_out'] for e in entries)}/{len(entries)} samples ruled out"


def cmd_splitting(cfg):
    if cfg.case not in CASES:
        raise InputError("bad_case", f"--case must be one of {', '.join(CASES)}")
    g = random_gamma(cfg.case, random.Random(_seed(cfg)))
    v = pencil_case_verdict(g)
    out = v.to_json()
    out["profile"] = {str(k): d for k, d in sorted(v.profile.items())}
    out["gamma"] = {
        "a0": str(g.a0), "a2": str(g.a2),
        "alpha0": [str(c) for c in g.alpha0.coeffs], "alpha2": [str(c) for c in g.alpha2.coeffs],
        "beta0": [str(c) for c in g.beta0.coeffs], "beta2": [str(c) for c in g.beta2.coeffs],
    }
    return out, f"case {v.case.name}: Cok gamma = {v.cok_gamma}"


def cmd_moduli_counts(cfg):
    c = param_counts()
    return c, f"{c['full']} normal-form parameters, {c['vprime']} in V', {c['finite_group']} formal group elements"


def cmd_orbit(cfg):
    p = _prime(cfg)
    if p % 3 != 1:
        raise InputError("bad_prime", f"orbit needs p = 1 mod 3 for a cube root of unity, got {p}")
    if cfg.input is None:
        raise InputError("missing_input", "orbit needs -i PARAMS_JSON")
    try:
        data = json.loads(Path(cfg.input).read_text())
        v = VPrimeParams.from_json(data, GF(p))
    except OSError as exc:
        raise InputError("missing_input", f"cannot read {cfg.input}: {exc.strerror}") from exc
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError("parse_error", f"bad V' parameter file: {exc}") from exc
    rep = orbit(v)
    return rep.to_json(), f"orbit of size {rep.size} under {rep.distinct_transformations} distinct substitutions"


def cmd_random_surface(cfg):
    p = _prime(cfg) if cfg.prime is not None else None
    pair, nf, checks = random_surface(_seed(cfg), p)
    out = {"seed": cfg.seed, "prime": p, "pair": pair.to_json(), "params": nf.to_json(), "checks": checks}
    return out, f"seed {cfg.seed}: " + ", ".join(f"{k}={v}" for k, v in sorted(checks.items()))


COMMANDS = {
    "hilbert": cmd_hilbert,
    "validate": cmd_validate,
    "normalize": cmd_normalize,
    "base-locus": cmd_base_locus,
    "canonical-image": cmd_canonical_image,
    "map-degree": cmd_map_degree,
    "smooth-scan": cmd_smooth_scan,
    "count-points": cmd_count_points,
    "rule-out-pencil": cmd_rule_out_pencil,
    "splitting": cmd_splitting,
    "moduli-counts": cmd_moduli_counts,
    "orbit": cmd_orbit,
    "random-surface": cmd_random_surface,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="surf610", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, *opts):
        sp = sub.add_parser(name)
        sp.add_argument("-o", "--output", type=Path, help="write the JSON report here instead of stdout")
        for o in opts:
            o(sp)
        return sp

    def inp(sp):
        sp.add_argument("-i", "--input", type=Path)

    def prime(sp):
        sp.add_argument("-p", "--prime", type=int)

    def seed(sp):
        sp.add_argument("--seed", type=int)

    add("hilbert", lambda sp: sp.add_argument("--max-degree", dest="max_degree", type=int, default=10))
    for name in ("validate", "normalize", "base-locus", "canonical-image", "map-degree"):
        add(name, inp)
    add("smooth-scan", inp, prime,
        lambda sp: sp.add_argument("--jobs", type=int, default=1),
        lambda sp: sp.add_argument("--timing", action="store_true", help="include elapsed_ms in the report"))
    add("count-points", inp, prime)
    add("rule-out-pencil", seed, lambda sp: sp.add_argument("--samples", type=int, default=20))
    add("splitting", seed, lambda sp: sp.add_argument("--case"))
    add("moduli-counts")
    add("orbit", inp, prime)
    add("random-surface", seed, prime)
    return ap


def _emit(out: dict, cfg: RunConfig) -> None:
    text = json.dumps(out, sort_keys=True, indent=2) + "\n"
    if cfg.output is not None:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig.from_args(ns)
    try:
        result = COMMANDS[cfg.command](cfg)
    except (InputError, ValidationError) as exc:
        out = {"error": "validation" if isinstance(exc, ValidationError) else "input",
               "reason": exc.reason, "detail": exc.detail}
        _emit(out, cfg)
        print(f"error: {exc.reason}: {exc.detail}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        _emit({"error": "internal", "reason": type(exc).__name__, "detail": str(exc)}, cfg)
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    out, summary, *code = result
    _emit(out, cfg)
    print(summary, file=sys.stderr)
    return code[0] if code else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
