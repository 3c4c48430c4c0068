"""Command-line interface for two-qubit gate characterization.

Subcommands
-----------
characterize     full nonlocal characterization of one gate
table1           entangling-power gate counts for the swap-root family
family-scan      sweep a gate family and emit one characterization row per point
ep               entangling power of one gate by a chosen method
max-concurrence  largest output concurrence over product inputs
synthesize       search for a two-gate CNOT construction over a base gate

All randomness is seeded through flags (no environment configuration), so
identical inputs and seeds produce byte-identical reports.  Reports are JSON:
floats carry full round-trip precision, complex values appear as
{"re": ..., "im": ...} pairs, matrices as flat row-major lists of 16 entries.
table1 and family-scan can emit CSV instead via --format csv.

Exit codes: 0 success, 2 parse error, 3 validation error, 4 I/O error,
5 numeric failure.
"""

import argparse
import csv
import datetime
import io
import json
import math
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import __version__
from .entangling_power import ep_exact, ep_monte_carlo, ep_single_trace
from .errors import DimensionError, NumericError, PreconditionError
from .families import (cnot_gate_count, cu_gate, ep_cu_closed,
                       ep_swap_power_closed, max_output_concurrence,
                       swap_power, swap_root)
from .gates import BUILTIN_GATES, CNOT
from .invariants import (PE_BOUNDARY_TOL, is_perfect_entangler_coords,
                         is_perfect_entangler_hull, local_invariants,
                         weyl_coordinates)
from .linalg import UNITARITY_TOL
from .synthesis import (DEFAULT_SYNTHESIS_TOL, align_locals,
                        local_unitary_pair, search_two_gate_cnot,
                        synthesis_verdict)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_IO = 4
EXIT_NUMERIC = 5

CLOSED_FORM_TOL = 1e-10

G1_NOTE = ("Im(g1) follows the magic-basis computation; closed-form "
           "references may differ from it by complex conjugation.")


class DescriptorError(ValueError):
    """Malformed gate description or command grammar (exit code 2)."""


@dataclass(frozen=True)
class GateDescriptor:
    """A named gate with its defining parameters and 4x4 matrix."""
    kind: str
    name: str
    params: dict
    matrix: np.ndarray

    def echo(self):
        return {"kind": self.kind, "name": self.name, "params": self.params,
                "matrix": serialize_matrix(self.matrix)}


# ---------------------------------------------------------------------------
# serialization helpers

def serialize_complex(z):
    z = complex(z)
    return {"re": float(z.real), "im": float(z.imag)}


def serialize_matrix(matrix):
    """Flat row-major list of {re, im} entries."""
    flat = np.asarray(matrix, dtype=complex).reshape(-1)
    return [serialize_complex(z) for z in flat]


def parse_matrix(data):
    """Accept a flat row-major list of 16 {re, im} entries (or 4 rows of 4)."""
    if not isinstance(data, list):
        raise DescriptorError("matrix must be a list of {re, im} entries")
    flat = data
    if len(data) == 4 and all(isinstance(row, list) for row in data):
        flat = [entry for row in data for entry in row]
    if len(flat) != 16:
        raise DescriptorError("matrix needs 16 row-major entries")
    values = []
    for entry in flat:
        try:
            values.append(complex(float(entry["re"]), float(entry["im"])))
        except (TypeError, KeyError, ValueError) as exc:
            raise DescriptorError("matrix entries must be {re, im} pairs") from exc
    return np.array(values, dtype=complex).reshape(4, 4)


def symbolic_angle(value, tol=1e-12):
    """Render ``value`` as a small rational multiple of pi, or None."""
    for q in range(1, 13):
        p = round(value * q / math.pi)
        if abs(p) <= 4 * q and abs(value - p * math.pi / q) <= tol:
            frac = Fraction(p, q)
            if frac == 0:
                return "0"
            num, den = frac.numerator, frac.denominator
            if num == 1:
                head = "pi"
            elif num == -1:
                head = "-pi"
            else:
                head = "%d*pi" % num
            return head if den == 1 else "%s/%d" % (head, den)
    return None


# ---------------------------------------------------------------------------
# gate descriptors

def descriptor_from_builtin(name):
    key = str(name).upper()
    if key not in BUILTIN_GATES:
        raise DescriptorError("unknown builtin gate %r (choose from %s)"
                              % (name, ", ".join(sorted(BUILTIN_GATES))))
    return GateDescriptor("builtin", key, {}, BUILTIN_GATES[key])


def descriptor_swap_power(alpha):
    alpha = float(alpha)
    return GateDescriptor("swap_power", "SWAP^%g" % alpha,
                          {"alpha": alpha}, swap_power(alpha))


def descriptor_swap_root(m):
    m = float(m)
    return GateDescriptor("swap_root", "SWAP^(1/%g)" % m, {"m": m}, swap_root(m))


def descriptor_cu(alpha, beta, theta, delta):
    params = {"alpha": float(alpha), "beta": float(beta),
              "theta": float(theta), "delta": float(delta)}
    return GateDescriptor("controlled_unitary",
                          "CU(%g, %g, %g, %g)" % (alpha, beta, theta, delta),
                          params, cu_gate(**params))


def descriptor_matrix(matrix):
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape != (4, 4):
        raise DescriptorError("matrix must be 4x4")
    if np.max(np.abs(matrix.conj().T @ matrix - np.eye(4))) > UNITARITY_TOL:
        raise PreconditionError("matrix descriptor is not unitary within %g"
                                % UNITARITY_TOL)
    return GateDescriptor("matrix", "matrix", {}, matrix)


def parse_descriptor_string(text):
    """Parse 'cnot' | 'swap' | 'identity' | 'swap-root:M' | 'swap-power:A'
    | 'cu:alpha,beta,theta,delta'."""
    t = str(text).strip().lower()
    if ":" not in t:
        if t in ("cnot", "swap", "identity"):
            return descriptor_from_builtin(t)
        raise DescriptorError("unknown gate descriptor %r" % text)
    head, _, arg = t.partition(":")
    try:
        if head == "swap-root":
            return descriptor_swap_root(float(arg))
        if head == "swap-power":
            return descriptor_swap_power(float(arg))
        if head == "cu":
            values = [float(x) for x in arg.split(",")]
            if len(values) != 4:
                raise DescriptorError(
                    "cu descriptor needs four angles: cu:alpha,beta,theta,delta")
            return descriptor_cu(*values)
    except ValueError as exc:
        raise DescriptorError("bad numeric parameter in %r" % text) from exc
    raise DescriptorError("unknown gate descriptor %r" % text)


def load_descriptor_file(path):
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise DescriptorError("cannot parse gate file %s: %s" % (path, exc)) from exc
    if not isinstance(data, dict):
        raise DescriptorError("gate file must hold a single JSON object")
    variants = {"builtin", "swap_power", "swap_root", "controlled_unitary", "matrix"}
    present = sorted(variants & set(data))
    if len(present) != 1:
        raise DescriptorError(
            "gate file must contain exactly one of %s" % ", ".join(sorted(variants)))
    key = present[0]
    value = data[key]
    try:
        if key == "builtin":
            return descriptor_from_builtin(value)
        if key == "swap_power":
            return descriptor_swap_power(value["alpha"] if isinstance(value, dict) else value)
        if key == "swap_root":
            return descriptor_swap_root(value["m"] if isinstance(value, dict) else value)
        if key == "controlled_unitary":
            return descriptor_cu(value["alpha"], value["beta"],
                                 value["theta"], value["delta"])
    except (TypeError, KeyError, ValueError) as exc:
        raise DescriptorError("malformed %s descriptor in %s" % (key, path)) from exc
    return descriptor_matrix(parse_matrix(value))


def add_gate_arguments(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--builtin", metavar="NAME",
                       help="one of CNOT, SWAP, IDENTITY")
    group.add_argument("--swap-power", type=float, metavar="ALPHA",
                       help="fractional power of SWAP")
    group.add_argument("--swap-root", type=float, metavar="M",
                       help="SWAP^(1/M) for M >= 1")
    group.add_argument("--cu", type=float, nargs=4,
                       metavar=("ALPHA", "BETA", "THETA", "DELTA"),
                       help="controlled-unitary angles in radians")
    group.add_argument("--gate-file", metavar="PATH",
                       help="JSON file with exactly one gate descriptor variant")


def descriptor_from_args(args):
    if args.builtin is not None:
        return descriptor_from_builtin(args.builtin)
    if args.swap_power is not None:
        return descriptor_swap_power(args.swap_power)
    if args.swap_root is not None:
        return descriptor_swap_root(args.swap_root)
    if args.cu is not None:
        return descriptor_cu(*args.cu)
    return load_descriptor_file(args.gate_file)


# ---------------------------------------------------------------------------
# grid parsing for family-scan and table1

_PI_TOKEN = re.compile(r"(-?\d*\.?\d*)\*?pi(?:/(\d+(?:\.\d*)?))?")


def parse_angle_token(token):
    t = str(token).strip().lower()
    try:
        return float(t)
    except ValueError:
        pass
    match = _PI_TOKEN.fullmatch(t)
    if match is None:
        raise DescriptorError("cannot parse angle %r" % token)
    coeff_text, den_text = match.groups()
    if coeff_text in ("", "-"):
        coeff = -1.0 if coeff_text == "-" else 1.0
    else:
        coeff = float(coeff_text)
    den = float(den_text) if den_text else 1.0
    return coeff * math.pi / den


def parse_range(text):
    """Parse 'LO..HI' with plain numbers or pi expressions at either end."""
    if ".." not in str(text):
        raise DescriptorError("range must look like LO..HI, got %r" % text)
    lo_text, _, hi_text = str(text).partition("..")
    lo = parse_angle_token(lo_text)
    hi = parse_angle_token(hi_text)
    if hi < lo:
        raise DescriptorError("empty range %r" % text)
    return lo, hi


def parse_int_list(text):
    """Parse '2..7' or '2,3,5' into a list of integers."""
    t = str(text).strip()
    if ".." in t:
        lo_text, _, hi_text = t.partition("..")
        try:
            lo, hi = int(lo_text), int(hi_text)
        except ValueError as exc:
            raise DescriptorError("integer range must look like LO..HI") from exc
        if hi < lo:
            raise DescriptorError("empty range %r" % text)
        return list(range(lo, hi + 1))
    try:
        return [int(piece) for piece in t.split(",") if piece.strip()]
    except ValueError as exc:
        raise DescriptorError("cannot parse integer list %r" % text) from exc


# ---------------------------------------------------------------------------
# characterization rows shared by characterize and family-scan

def _require_finite(obj, context="report"):
    if isinstance(obj, dict):
        for value in obj.values():
            _require_finite(value, context)
    elif isinstance(obj, (list, tuple)):
        for value in obj:
            _require_finite(value, context)
    elif isinstance(obj, float) and not math.isfinite(obj):
        raise NumericError("non-finite value in %s" % context)


def _characterization_row(matrix, pe_tol):
    inv = local_invariants(matrix)
    weyl = weyl_coordinates(matrix)
    return {
        "ep_exact": ep_exact(matrix).value,
        "g1_re": inv.g1.real,
        "g1_im": inv.g1.imag,
        "g2": inv.g2,
        "c1": weyl.c1,
        "c2": weyl.c2,
        "c3": weyl.c3,
        "pe_hull": is_perfect_entangler_hull(matrix, pe_tol),
        "pe_coords": is_perfect_entangler_coords(weyl, pe_tol),
    }


def _tool_stanza():
    return {"name": "gatechar", "version": __version__}


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (report dict, csv rows or None)

def run_characterize(args):
    pe_tol = args.tol if args.tol is not None else PE_BOUNDARY_TOL
    desc = descriptor_from_args(args)
    matrix = desc.matrix
    inv = local_invariants(matrix)
    weyl = weyl_coordinates(matrix)
    report = {
        "tool": _tool_stanza(),
        "input": desc.echo(),
        "invariants": {"g1": serialize_complex(inv.g1), "g2": inv.g2},
        "weyl": {
            "coordinates": [weyl.c1, weyl.c2, weyl.c3],
            "symbolic": [symbolic_angle(c) for c in weyl],
        },
        "entangling_power": {
            "exact": ep_exact(matrix).value,
            "single_trace": ep_single_trace(matrix).value,
        },
        "perfect_entangler": {
            "hull": is_perfect_entangler_hull(matrix, pe_tol),
            "coordinate_criterion": is_perfect_entangler_coords(weyl, pe_tol),
        },
        "tolerances": {
            "unitarity": UNITARITY_TOL,
            "perfect_entangler_boundary": pe_tol,
        },
        "notes": [G1_NOTE],
    }
    if args.monte_carlo is not None:
        mc = ep_monte_carlo(matrix, args.monte_carlo, args.seed)
        report["entangling_power"]["monte_carlo"] = {
            "value": mc.value, "std_error": mc.std_error,
            "samples": mc.samples, "seed": mc.seed,
        }
    if args.max_concurrence is not None:
        report["max_output_concurrence"] = {
            "value": max_output_concurrence(matrix, args.max_concurrence, args.seed),
            "restarts": args.max_concurrence,
            "seed": args.seed,
        }
    _require_finite(report)
    return report, None


def run_table1(args):
    ms = parse_int_list(args.m)
    rows = []
    for m in ms:
        count = cnot_gate_count(m)
        rows.append({
            "m": m,
            "ep": ep_swap_power_closed(1.0 / m),
            "gates": count.n if count.n is not None else "infeasible",
        })
    report = {"tool": _tool_stanza(), "table": rows}
    _require_finite(report)
    return report, rows


def run_family_scan(args):
    pe_tol = args.tol if args.tol is not None else PE_BOUNDARY_TOL
    if args.family == "swap":
        if args.m is None:
            raise DescriptorError("family-scan swap requires --m LO..HI")
        lo, hi = parse_range(args.m)
        if args.steps is not None:
            values = np.linspace(lo, hi, args.steps)
        else:
            if abs(lo - round(lo)) > 1e-9 or abs(hi - round(hi)) > 1e-9:
                raise DescriptorError("non-integer --m bounds need --steps")
            values = np.arange(round(lo), round(hi) + 1, dtype=float)
        rows = []
        for m in values:
            gate = swap_root(float(m))
            closed = ep_swap_power_closed(1.0 / float(m))
            row = {"m": float(m), "alpha": 1.0 / float(m), "ep_closed": closed}
            row.update(_characterization_row(gate, pe_tol))
            if abs(row["ep_exact"] - closed) > CLOSED_FORM_TOL:
                raise NumericError(
                    "closed-form and exact entangling power disagree at m=%g" % m)
            rows.append(row)
        grid = {"family": "swap", "m": [float(v) for v in values]}
    else:
        theta_lo, theta_hi = parse_range(args.theta or "0..pi")
        sum_lo, sum_hi = parse_range(args.alpha_plus_beta or "0..2pi")
        steps = args.steps if args.steps is not None else 25
        thetas = np.linspace(theta_lo, theta_hi, steps)
        sums = np.linspace(sum_lo, sum_hi, steps)
        delta = args.delta
        rows = []
        for theta in thetas:
            for total in sums:
                gate = cu_gate(float(total), 0.0, float(theta), delta)
                closed = ep_cu_closed(float(total), 0.0, float(theta))
                row = {"theta": float(theta), "alpha_plus_beta": float(total),
                       "delta": delta, "ep_closed": closed}
                row.update(_characterization_row(gate, pe_tol))
                if abs(row["ep_exact"] - closed) > CLOSED_FORM_TOL:
                    raise NumericError(
                        "closed-form and exact entangling power disagree at "
                        "theta=%g, alpha+beta=%g" % (theta, total))
                rows.append(row)
        grid = {"family": "cu", "theta": [float(v) for v in thetas],
                "alpha_plus_beta": [float(v) for v in sums], "delta": delta}
    report = {"tool": _tool_stanza(), "grid": grid, "rows": rows}
    _require_finite(report)
    return report, rows


def run_ep(args):
    desc = descriptor_from_args(args)
    if args.method == "exact":
        result = ep_exact(desc.matrix)
    elif args.method == "single-trace":
        result = ep_single_trace(desc.matrix)
    else:
        result = ep_monte_carlo(desc.matrix, args.samples, args.seed)
    stanza = {"value": result.value, "method": result.method}
    if result.method == "monte_carlo":
        stanza.update({"std_error": result.std_error,
                       "samples": result.samples, "seed": result.seed})
    report = {"tool": _tool_stanza(), "input": desc.echo(),
              "entangling_power": stanza}
    _require_finite(report)
    return report, None


def run_max_concurrence(args):
    desc = descriptor_from_args(args)
    value = max_output_concurrence(desc.matrix, args.restarts, args.seed)
    report = {"tool": _tool_stanza(), "input": desc.echo(),
              "max_output_concurrence": {"value": value,
                                         "restarts": args.restarts,
                                         "seed": args.seed}}
    _require_finite(report)
    return report, None


def run_synthesize(args):
    tol = args.tol if args.tol is not None else DEFAULT_SYNTHESIS_TOL
    desc = parse_descriptor_string(args.base)
    result = search_two_gate_cnot(desc.matrix, restarts=args.restarts,
                                  seed=args.seed, tol=tol, base_name=desc.name)
    verdict = synthesis_verdict(result.residual, tol)
    alignment = None
    if result.residual <= tol:
        composed = desc.matrix @ local_unitary_pair(result.middle_angles) @ desc.matrix
        k1, k2, infidelity = align_locals(composed, CNOT,
                                          restarts=args.align_restarts,
                                          seed=args.seed)
        alignment = {"k1_angles": list(k1), "k2_angles": list(k2),
                     "infidelity": infidelity}
    report = {
        "tool": _tool_stanza(),
        "base": desc.echo(),
        "search": {
            "restarts": args.restarts,
            "seed": args.seed,
            "tol": tol,
            "residual": result.residual,
            "middle_angles": list(result.middle_angles),
            "verdict": verdict,
        },
        "alignment": alignment,
    }
    _require_finite(report)
    record = {
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "base": args.base,
        "restarts": args.restarts,
        "seed": args.seed,
        "tol": tol,
        "residual": result.residual,
        "verdict": verdict,
        "middle_angles": list(result.middle_angles),
    }
    if alignment is not None:
        record["infidelity"] = alignment["infidelity"]
    with open(args.findings, "a", encoding="utf-8") as handle:
        handle.write(json.dumps(record) + "\n")
    return report, None


# ---------------------------------------------------------------------------
# output plumbing

def rows_to_csv(rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = list(rows[0].keys())
    writer.writerow(header)
    for row in rows:
        writer.writerow([row[key] for key in header])
    return buffer.getvalue()


def emit(report, rows, args):
    if args.format == "csv":
        if rows is None:
            raise DescriptorError(
                "--format csv is only available for table1 and family-scan")
        text = rows_to_csv(rows)
    else:
        text = json.dumps(report, indent=2) + "\n"
    if args.output is not None:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0,
                        help="seed for every random stream (default 0)")
    common.add_argument("--tol", type=float, default=None,
                        help="boundary tolerance: perfect-entangler boundary for "
                             "characterize/family-scan (default 1e-9), "
                             "construction-exists band for synthesize (default 1e-8)")
    common.add_argument("--output", metavar="PATH", default=None,
                        help="write the report to PATH instead of stdout")
    common.add_argument("--format", choices=("report", "csv"), default="report",
                        help="output format; csv applies to tabular commands")

    parser = argparse.ArgumentParser(
        prog="gatechar",
        description="Characterize two-qubit gates by their nonlocal properties.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("characterize", parents=[common],
                       help="invariants, Weyl point, entangling power, and "
                            "perfect-entangler verdicts of one gate")
    add_gate_arguments(p)
    p.add_argument("--monte-carlo", type=int, metavar="SAMPLES", default=None,
                   help="add a Monte-Carlo entangling-power estimate")
    p.add_argument("--max-concurrence", type=int, metavar="RESTARTS", default=None,
                   help="add the maximal output concurrence over product inputs")
    p.set_defaults(handler=run_characterize)

    p = sub.add_parser("table1", parents=[common],
                       help="gate counts from the entangling-power budget "
                            "n (1 - cos(2 pi / m)) >= 8/3; the budget is a "
                            "necessary condition on the count, not a "
                            "sufficiency proof of a construction")
    p.add_argument("--m", default="2..7",
                   help="integers, as LO..HI or a comma list (default 2..7)")
    p.set_defaults(handler=run_table1)

    p = sub.add_parser("family-scan", parents=[common],
                       help="sweep a gate family; one characterization row per "
                            "grid point")
    p.add_argument("family", choices=("swap", "cu"))
    p.add_argument("--m", default=None, help="swap family: root range LO..HI")
    p.add_argument("--theta", default=None, help="cu family: theta range LO..HI")
    p.add_argument("--alpha-plus-beta", dest="alpha_plus_beta", default=None,
                   help="cu family: alpha+beta range LO..HI")
    p.add_argument("--delta", type=float, default=0.0,
                   help="cu family: fixed delta (closed forms do not depend on it)")
    p.add_argument("--steps", type=int, default=None,
                   help="points per axis (swap default: integer steps; cu default 25)")
    p.set_defaults(handler=run_family_scan)

    p = sub.add_parser("ep", parents=[common],
                       help="entangling power of one gate")
    add_gate_arguments(p)
    p.add_argument("--method", choices=("exact", "single-trace", "monte-carlo"),
                   default="exact")
    p.add_argument("--samples", type=int, default=100000,
                   help="sample count for --method monte-carlo")
    p.set_defaults(handler=run_ep)

    p = sub.add_parser("max-concurrence", parents=[common],
                       help="largest output concurrence over product inputs")
    add_gate_arguments(p)
    p.add_argument("--restarts", type=int, default=16)
    p.set_defaults(handler=run_max_concurrence)

    p = sub.add_parser("synthesize", parents=[common],
                       help="search for middle locals making two copies of a "
                            "base gate locally equivalent to CNOT")
    p.add_argument("--base", required=True,
                   help="gate descriptor string, e.g. swap-root:3 or cnot")
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--align-restarts", type=int, default=32,
                   help="restarts for the outer-local alignment stage")
    p.add_argument("--findings", metavar="PATH", default="findings.jsonl",
                   help="append-only JSON-lines record of every run")
    p.set_defaults(handler=run_synthesize)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, rows = args.handler(args)
        emit(report, rows, args)
    except DescriptorError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, DimensionError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION
    except NumericError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
