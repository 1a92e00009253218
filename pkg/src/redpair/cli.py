"""Command-line front end.

A job is described by a flat UTF-8 config file of ``key = value`` lines
(values: bare words, exact rationals like ``5`` or ``3/2``, and bracketed
arrays, nested once for matrices; decimal floats are rejected so that
exactness survives the I/O boundary).  The command verb comes from the
command line or from a ``command`` key in the config.

Verbs: pair-info, parabolic, generic-check, sl2-threshold, fundseries,
verify.  Output is a human-readable report, a machine-readable JSON
document with canonical ordering (byte-identical across runs), or both.

Exit codes: 0 success, 2 parse error, 3 validation error, 4 resource cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .fundseries import (
    InducingModule,
    MultiplicityTable,
    infinitesimal_character,
    inducing_module,
    ktype_table,
    verify_minimal_ktype,
)
from .genericity import GenericityReport, is_generic, norm2_shifted, sl2_threshold
from .parabolic import CompatibleParabolic, compatible_parabolic
from .reductive import (
    ReductivePair,
    make_cartan_pair,
    make_explicit_pair,
    make_levi_pair,
    make_sl2_pair,
)
from .rootsystem import CapExceeded, build_root_system
from .weights import Weight, WeightMultiset, add, scale

COMMANDS = ("pair-info", "parabolic", "generic-check", "sl2-threshold",
            "fundseries", "verify")

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_CAP = 4


class ConfigError(Exception):
    """The job description cannot be parsed."""


def _parse_scalar(token: str):
    token = token.strip()
    if not token:
        raise ConfigError("empty value")
    head = token[0]
    if head.isdigit() or head in "+-":
        if "." in token:
            raise ConfigError(
                f"decimal floats are not accepted, use an exact fraction: {token!r}"
            )
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"bad rational {token!r}: {exc}") from None
    return token


def _parse_value(text: str):
    text = text.strip()
    if not text.startswith("["):
        return _parse_scalar(text)
    if not text.endswith("]"):
        raise ConfigError(f"unterminated array: {text!r}")
    body = text[1:-1]
    # split at top-level commas only (arrays nest one level for matrices)
    parts, level, current = [], 0, []
    for ch in body:
        if ch == "[":
            level += 1
        elif ch == "]":
            level -= 1
            if level < 0:
                raise ConfigError(f"unbalanced brackets in {text!r}")
        if ch == "," and level == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if level != 0:
        raise ConfigError(f"unbalanced brackets in {text!r}")
    tail = "".join(current).strip()
    if tail:
        parts.append(tail)
    items = []
    for part in parts:
        part = part.strip()
        if not part:
            raise ConfigError(f"empty array element in {text!r}")
        items.append(_parse_value(part))
    return items


def parse_config(text: str) -> dict:
    job: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if not key:
            raise ConfigError(f"line {lineno}: empty key")
        if key in job:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        job[key] = _parse_value(value)
    return job


def _require(job: dict, key: str):
    if key not in job:
        raise ConfigError(f"missing required config key {key!r}")
    return job[key]


def _as_int(value, key: str) -> int:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    raise ConfigError(f"config key {key!r} must be an integer, got {value!r}")


def build_pair(job: dict) -> ReductivePair:
    g = build_root_system(str(_require(job, "lie_type")))
    kind = str(_require(job, "k"))
    if kind == "sl2":
        labels = [_as_int(v, "labels") for v in _require(job, "labels")]
        return make_sl2_pair(g, labels)
    if kind == "cartan":
        return make_cartan_pair(g)
    if kind == "levi":
        nodes = {_as_int(v, "nodes") for v in _require(job, "nodes")}
        return make_levi_pair(g, nodes)
    if kind == "explicit":
        restriction = _require(job, "restriction")
        simple = [tuple(row) for row in _require(job, "k_simple_roots")]
        coroots = [tuple(row) for row in _require(job, "k_coroots")]
        return make_explicit_pair(g, restriction, simple, coroots)
    raise ConfigError(f"unknown k kind {kind!r}; expected sl2, cartan, levi, explicit")


def _as_tweight(value, p: ReductivePair, key: str) -> Weight:
    """A small-side weight: a coordinate array, or a scalar when rank 1."""
    if isinstance(value, Fraction):
        if p.rank_t != 1:
            raise ConfigError(
                f"{key!r} was a scalar but the small side has rank {p.rank_t}"
            )
        return (value,)
    if isinstance(value, list) and all(isinstance(v, Fraction) for v in value):
        if len(value) != p.rank_t:
            raise ConfigError(f"{key!r} must have {p.rank_t} coordinates")
        return tuple(value)
    raise ConfigError(f"{key!r} must be a rational or an array of rationals")


def _as_gweight(value, p: ReductivePair, job: dict) -> Weight:
    """An ambient-side weight; a scalar is read as the restriction value
    of a rank-one small side and lifted orthogonally."""
    if isinstance(value, Fraction):
        if p.rank_t != 1:
            raise ConfigError("scalar nu needs a rank-one small side")
        return p.lift_weight((value,))
    if isinstance(value, list) and all(isinstance(v, Fraction) for v in value):
        if len(value) != p.g.rank:
            raise ConfigError(f"nu must have {p.g.rank} coordinates")
        nu = tuple(value)
        basis = str(job.get("nu_basis", "simple"))
        if basis == "fundamental":
            return p.g.from_fundamental(nu)
        if basis == "simple":
            return nu
        raise ConfigError(f"nu_basis must be simple or fundamental, got {basis!r}")
    raise ConfigError("nu must be a rational or an array of rationals")


# ---------------------------------------------------------------------------
# serialization


def _ser(value):
    """Canonical JSON-ready form: fractions as 'p/q' strings, weights as
    arrays, multisets as sorted weight/mult records."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool) or isinstance(value, int):
        return value
    if isinstance(value, tuple):
        return [_ser(v) for v in value]
    if isinstance(value, list):
        return [_ser(v) for v in value]
    if isinstance(value, WeightMultiset):
        return [{"weight": _ser(w), "mult": m} for w, m in value.items()]
    if isinstance(value, dict):
        return {k: _ser(v) for k, v in value.items()}
    if value is None or isinstance(value, str):
        return value
    raise TypeError(f"cannot serialize {value!r}")


def _fmt(value) -> str:
    """Human rendering of an already-serialized value."""
    if isinstance(value, list):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_fmt(v)}" for k, v in value.items()) + "}"
    return str(value)


def _pair_doc(p: ReductivePair) -> dict:
    return {
        "embedding": p.embedding_kind,
        "rank_g": p.g.rank,
        "rank_t": p.rank_t,
        "restriction": _ser(p.restriction),
        "t_gram": _ser(p.t_gram),
        "delta_t": _ser(sorted(p.delta_t)),
        "k_simple_roots": _ser(list(p.k_simple_roots)),
        "k_positive_roots": _ser(sorted(p.k_positive_roots)),
        "rho": _ser(p.rho),
    }


def _parabolic_doc(p: ReductivePair, parab: CompatibleParabolic) -> dict:
    return {
        "lambda": _ser(parab.lam),
        "minimal": parab.minimal,
        "s": parab.s,
        "r": parab.r,
        "rho_n": _ser(parab.rho_n),
        "rho_n_perp": _ser(parab.rho_n_perp),
        "ch_t_n": _ser(parab.ch_t_n),
        "ch_t_n_cap_k": _ser(parab.ch_t_n_cap_k),
        "ch_t_n_cap_kperp": _ser(parab.ch_t_n_cap_kperp),
        "n_roots": _ser(sorted(parab.n_roots)),
        "m_positive_roots": _ser(sorted(parab.m_positive_roots())),
    }


def _genericity_doc(report: GenericityReport, mu: Weight) -> dict:
    return {
        "mu": _ser(mu),
        "holds": report.holds,
        "condition1_ok": report.condition1_ok,
        "condition2_ok": report.condition2_ok,
        "witness_root": _ser(report.witness_root),
        "witness_submultiset": _ser(report.witness_submultiset),
        "witness_rho_s": _ser(report.witness_rho_s),
        "lambda": _ser(report.lam),
        "rho_n": _ser(report.rho_n),
    }


def _table_doc(p: ReductivePair, table: MultiplicityTable) -> dict:
    return {
        "s": table.s,
        "r": table.r,
        "cutoff": _ser(table.cutoff),
        "mu": _ser(table.mu),
        "dim_e": table.dim_e,
        "entries": [
            {
                "delta": _ser(delta),
                "mult": mult,
                "norm2_shifted": _ser(norm2_shifted(p, delta)),
            }
            for delta, mult in table.sorted_entries(p)
        ],
    }


# ---------------------------------------------------------------------------
# job execution


def _resolve_series_parabolic(p: ReductivePair, omega: Weight,
                              job: dict) -> CompatibleParabolic:
    """Find the minimal parabolic consistent with the inducing weight:
    the chamber must reproduce itself under lam = omega + 2 rho_n_perp
    + 2 rho.  Seeded at the restricted Weyl vector unless the config
    pins a chamber with an explicit ``lambda``."""
    if "lambda" in job:
        lam = _as_tweight(job["lambda"], p, "lambda")
    else:
        lam = p.restrict(p.g.rho_tilde)
    for _ in range(p.g.rank + 3):
        parab = compatible_parabolic(p, lam)
        if not parab.minimal:
            raise ValueError(
                f"the chamber weight {lam} is irregular; give a regular "
                f"'lambda' in the config"
            )
        mu = add(omega, scale(2, parab.rho_n_perp))
        lam_next = add(mu, scale(2, p.rho))
        parab_next = compatible_parabolic(p, lam_next)
        if frozenset(parab_next.n_roots) == frozenset(parab.n_roots):
            return parab_next
        lam = lam_next
    raise ValueError(
        "no compatible parabolic is consistent with this inducing weight; "
        "the chamber iteration did not stabilize"
    )


def _series_inputs(p: ReductivePair, job: dict) -> tuple[CompatibleParabolic, InducingModule]:
    nu = _as_gweight(_require(job, "nu"), p, job)
    omega = p.restrict(nu)
    parab = _resolve_series_parabolic(p, omega, job)
    e = inducing_module(p, parab, nu)
    return parab, e


def _get_cutoff(job: dict, args, p: ReductivePair, e: InducingModule) -> Fraction:
    if args.cutoff is not None:
        return args.cutoff
    if "cutoff" in job:
        value = job["cutoff"]
        if not isinstance(value, Fraction):
            raise ConfigError("cutoff must be a rational")
        return value
    # generous default: the minimal norm plus 100 units of the rho norm,
    # or plus 100 when the subalgebra has no roots at all
    base = norm2_shifted(p, e.mu)
    rho2 = p.t_pair(p.rho, p.rho)
    return base + 100 * (rho2 if rho2 else Fraction(1))


def run_job(job: dict, args) -> dict:
    p = build_pair(job)
    cap = args.max_weyl
    if cap is None and "max_weyl" in job:
        cap = _as_int(job["max_weyl"], "max_weyl")
    if cap is not None:
        # guard: refuse jobs whose small Weyl group would be enumerated
        # beyond the cap
        p.k_weyl_group(max_size=cap)
    doc: dict = {
        "job": {
            "lie_type": str(job.get("lie_type")),
            "k": str(job.get("k")),
            "command": args.command,
        }
    }
    command = args.command

    if command == "pair-info":
        doc["pair"] = _pair_doc(p)
        return doc

    if command == "parabolic":
        if "lambda" in job:
            lam = _as_tweight(job["lambda"], p, "lambda")
        elif "mu" in job:
            lam = add(_as_tweight(job["mu"], p, "mu"), scale(2, p.rho))
        else:
            raise ConfigError("the parabolic command needs 'lambda' or 'mu'")
        doc["parabolic"] = _parabolic_doc(p, compatible_parabolic(p, lam))
        return doc

    if command == "generic-check":
        mu = _as_tweight(_require(job, "mu"), p, "mu")
        doc["genericity"] = _genericity_doc(is_generic(p, mu), mu)
        return doc

    if command == "sl2-threshold":
        value = sl2_threshold(p)
        doc["threshold"] = {
            "value": value,
            "statement": f"generic iff m >= {value - 1}",
        }
        return doc

    if command in ("fundseries", "verify"):
        parab, e = _series_inputs(p, job)
        cutoff = _get_cutoff(job, args, p, e)
        table = ktype_table(p, parab, e, cutoff)
        doc["parabolic"] = _parabolic_doc(p, parab)
        doc["table"] = _table_doc(p, table)
        doc["character"] = {
            "nu": _ser(e.nu),
            "omega": _ser(e.omega),
            "representative": _ser(infinitesimal_character(p.g, e).representative),
        }
        if command == "verify":
            report = verify_minimal_ktype(table, e, p)
            generic = None
            if p.is_dominant_integral(e.mu):
                generic = is_generic(p, e.mu).holds
            doc["verify"] = {
                "minimal_entry_ok": report.minimal_entry_ok,
                "unique_minimum_ok": report.unique_minimum_ok,
                "nonnegative_ok": report.nonnegative_ok,
                "all_ok": report.all_ok,
                "generic": generic,
                "rho_identity_ok":
                    parab.rho_n == add(p.rho, parab.rho_n_perp),
                "degree_sum_ok": parab.s + parab.r == parab.ch_t_n.size(),
            }
        return doc

    raise ConfigError(f"unknown command {command!r}")


# ---------------------------------------------------------------------------
# rendering


def _human_lines(doc: dict) -> list[str]:
    lines: list[str] = []
    for section, body in doc.items():
        lines.append(f"[{section}]")
        if section == "table":
            for key in ("s", "r", "cutoff", "mu", "dim_e"):
                lines.append(f"  {key} = {_fmt(body[key])}")
            lines.append("  delta : mult : |delta + 2 rho|^2")
            for entry in body["entries"]:
                lines.append(
                    f"  {_fmt(entry['delta'])} : {entry['mult']} : "
                    f"{entry['norm2_shifted']}"
                )
        else:
            for key, value in body.items():
                lines.append(f"  {key} = {_fmt(value)}")
        lines.append("")
    return lines


def emit(doc: dict, mode: str, out) -> None:
    machine = json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if mode in ("human", "both"):
        out.write("\n".join(_human_lines(doc)))
    if mode == "both":
        out.write("--- machine ---\n")
    if mode in ("machine", "both"):
        out.write(machine)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="redpair",
        description="exact k-type computations for reductive pairs",
    )
    parser.add_argument("command", nargs="?", choices=COMMANDS,
                        help="job verb; may also come from the config file")
    parser.add_argument("--config", required=True, help="path to the job config")
    parser.add_argument("--cutoff", default=None,
                        help="norm cutoff for tables, as an exact rational")
    parser.add_argument("--max-weyl", type=int, default=None,
                        help="size cap on the small Weyl group enumeration")
    parser.add_argument("--emit", choices=("human", "machine", "both"),
                        default="human")
    args = parser.parse_args(argv)

    try:
        try:
            with open(args.config, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError(f"cannot read config {args.config!r}: {exc}") from None
        job = parse_config(text)
        if args.command is None:
            if "command" not in job:
                raise ConfigError("no command verb given on the command line "
                                  "or in the config")
            verb = str(job["command"])
            if verb not in COMMANDS:
                raise ConfigError(f"unknown command {verb!r} in config")
            args.command = verb
        elif "command" in job and str(job["command"]) != args.command:
            raise ConfigError(
                f"command line says {args.command!r} but config says "
                f"{job['command']!r}"
            )
        if args.cutoff is not None:
            if "." in args.cutoff:
                raise ConfigError("cutoff must be an exact rational, not a float")
            try:
                args.cutoff = Fraction(args.cutoff)
            except (ValueError, ZeroDivisionError) as exc:
                raise ConfigError(f"bad cutoff {args.cutoff!r}: {exc}") from None
        doc = run_job(job, args)
    except ConfigError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    emit(doc, args.emit, sys.stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
