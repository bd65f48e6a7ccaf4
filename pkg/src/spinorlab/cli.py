"""Command-line entry point.

``spinorlab verify <suite>`` runs a list of checks and emits one certificate per
check; ``spinorlab <command> ...`` evaluates one of the named maps and prints it.

Certificates are plain JSON objects with the keys ``check``, ``status``,
``witness``, ``elapsed_ms`` and ``data_version``.  Serialization sorts keys and
renders every exact number as a string, so two runs with the same arguments and
seed produce the same bytes.  Wall-clock time is the one thing that is not
reproducible; it is recorded only when ``--timing`` is given and is 0 otherwise.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import random
import sys
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import DATA_VERSION
from .exact import GaussianRational, MultiPoly, parse_gaussian

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
STATUSES = ("pass", "fail", "skipped")


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


def to_jsonable(obj):
    """Exact values become strings; containers are converted recursively."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return int(obj)
    if isinstance(obj, (GaussianRational, Fraction, MultiPoly)):
        return str(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {_key(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [to_jsonable(v) for v in obj]
        return sorted(items, key=json.dumps) if isinstance(obj, (set, frozenset)) else items
    if hasattr(obj, "item"):  # numpy scalar
        return to_jsonable(obj.item())
    if hasattr(obj, "name"):
        return str(obj.name)
    return str(obj)


def _key(k) -> str:
    if isinstance(k, tuple):
        return ",".join(str(to_jsonable(x)) for x in k)
    return str(to_jsonable(k))


@dataclasses.dataclass
class Certificate:
    check: str
    status: str
    witness: dict
    elapsed_ms: int = 0
    data_version: str = DATA_VERSION

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "status": self.status,
            "witness": to_jsonable(self.witness),
            "elapsed_ms": int(self.elapsed_ms),
            "data_version": self.data_version,
        }


def dump_certificates(certs: Sequence[Certificate]) -> str:
    return json.dumps([c.to_dict() for c in certs], indent=2, sort_keys=True, ensure_ascii=True) + "\n"


# A check returns (passed, witness).
Check = Callable[["RunOptions"], Tuple[bool, dict]]


@dataclasses.dataclass(frozen=True)
class RunOptions:
    seed: int = 0
    preset: Optional[str] = None
    section_file: Optional[str] = None
    timing: bool = False


def run_check(name: str, check: Check, options: RunOptions) -> Certificate:
    from .config16 import SearchBudgetExceeded
    from .groebner import BudgetExhausted
    from .reflection import GroupTooLarge

    start = time.perf_counter()
    try:
        ok, witness = check(options)
        status = "pass" if ok else "fail"
    except (BudgetExhausted, SearchBudgetExceeded, GroupTooLarge) as exc:
        status, witness = "fail", {"budget_exhausted": str(exc)}
    except Exception as exc:  # a crashing check is a failed check, not a crashed run
        status, witness = "fail", {"error": f"{type(exc).__name__}: {exc}"}
    elapsed = int(round((time.perf_counter() - start) * 1000)) if options.timing else 0
    witness = to_jsonable(witness)
    if not isinstance(witness, dict):
        witness = {"value": witness}
    witness["constants"] = run_constants()
    return Certificate(name, status, witness, elapsed)


_CONSTANTS: Optional[dict] = None


def run_constants() -> dict:
    """Conventions fixed at run time, stamped into every certificate for cross-checking."""
    global _CONSTANTS
    if _CONSTANTS is None:
        from .binaryforms import inversion_identities
        from .cartan import gamma_a_scale
        from .complexes import theta_consistency
        from .kummer import hudson_comparison
        from .spinor import DEFAULT_SIGN

        inv = inversion_identities()
        _CONSTANTS = to_jsonable(
            {
                "pairing_convention": DEFAULT_SIGN,
                "gamma_a_scale": gamma_a_scale(),
                "theta_constant": theta_consistency().constant,
                "kummer_global_constant": hudson_comparison().global_constant,
                "resultant_constant": inv.resultant_constant,
                "j_constant": inv.j_constant,
            }
        )
    return dict(_CONSTANTS)


# ---------------------------------------------------------------------------
# suite definitions
# ---------------------------------------------------------------------------


def _cartan_abelian(_):
    from .cartan import abelian_failures, cartan_bases
    from .spinor import DEFAULT_SIGN

    plus, minus = cartan_bases()
    bad_plus, bad_minus = abelian_failures(plus), abelian_failures(minus)
    return not bad_plus and not bad_minus, {
        "pairing_convention": DEFAULT_SIGN,
        "failures_c": bad_plus,
        "failures_c_prime": bad_minus,
        "uncalibrated_pairing_fails": bool(abelian_failures(plus, "plain") or abelian_failures(minus, "plain")),
    }


def _cartan_gamma(_):
    from .cartan import gamma_a_closed_form, gamma_a_raw, gamma_a_scale

    scale = gamma_a_scale()
    ok = (gamma_a_raw() - gamma_a_closed_form() * scale).is_zero()
    return ok, {"gamma_a_scale": scale, "closed_form_times_scale": ok}


PRINTED_COMMUTATION = {
    (1, 5): "anticommute",
    (2, 3): "anticommute",
    (2, 4): "anticommute",
    (3, 4): "anticommute",
    (3, 5): "anticommute",
}
PRINTED_QUINTET_ACTIONS = ("(12)", "(56)", "(34)", "(23)", "(46)")
PRINTED_PENTAD_ACTIONS = ("(12)(34)(56)", "(12)(36)(45)", "(12)(35)(46)", "(14)(25)(36)", "(16)(25)(34)")


def _reflection_order(_):
    from .reflection import generators, weyl_group

    W = weyl_group()
    center = len(W.center(generators()))
    return W.order == 46080 and center == 4, {"order": W.order, "center_order": center}


def _reflection_heisenberg(_):
    from .exact import ExactMatrix, gq
    from .reflection import commutation_table, heisenberg_generators, heisenberg_group

    g = heisenberg_generators()
    order = heisenberg_group().order
    product_is_i = g[0] * g[1] * g[2] * g[3] == ExactMatrix.identity(4) * gq(0, 1)
    table = commutation_table(g)
    expected = {k: PRINTED_COMMUTATION.get(k, "commute") for k in table}
    return order == 64 and product_is_i and table == expected, {
        "order": order,
        "g1g2g3g4_is_i": product_is_i,
        "commutation": table,
    }


def _reflection_hyperplanes(_):
    from .reflection import cycle_notation, generators, hyperplane_action, is_transitive

    perms = [hyperplane_action(s) for s in generators()]
    transitive = is_transitive(perms, 60)
    return transitive, {
        "transitive": transitive,
        "generator_permutations": [cycle_notation(p) for p in perms],
        "corrected_hyperplane": 12,
    }


def _reflection_actions(_):
    from .reflection import block_pentad_quintet_actions, cycle_notation, generators

    acts = [block_pentad_quintet_actions(s) for s in generators()]
    quint = tuple(cycle_notation(a["quintets"]) for a in acts)
    pent = tuple(cycle_notation(a["pentads"]) for a in acts)
    return quint == PRINTED_QUINTET_ACTIONS and pent == PRINTED_PENTAD_ACTIONS, {
        "quintets": quint,
        "pentads": pent,
    }


def _reflection_stabilizer(_):
    from .reflection import pentad_stabilizer

    r = pentad_stabilizer()
    return r.order == 7680 and r.contains_center, r


def _reflection_kernel(_):
    from .reflection import heisenberg_group, kernel_on_U5

    ks = kernel_on_U5()
    F = heisenberg_group()
    in_f = sum(F.find(m) is not None for m in ks)
    return len(ks) == 64 and in_f == 64, {"kernel_order": len(ks), "inside_F": in_f}


def _flats_lines(_):
    from .reflection import special_lines

    lines = special_lines(6)
    return len(lines) == 30, {"valency6_lines": len(lines)}


def _flats_incidence(_):
    from .reflection import line_point_incidence

    inc = line_point_incidence()
    ok = inc["lines"] == 30 and inc["points"] == 60 and inc["points_per_line"] == [6] and inc["lines_per_point"] == [3]
    return ok, inc


def _flats_histogram(_):
    """Reported against the printed table; discrepancies are listed, never asserted."""
    from .cartan import FLAT_TYPES
    from .reflection import enumerate_flats, valency_histogram

    lines, points = enumerate_flats()
    found = {"lines": valency_histogram(lines), "points": valency_histogram(points)}
    printed = {
        "lines": {t["valency"]: t["count"] for t in FLAT_TYPES.values() if len(t["basis"]) == 2},
        "points": {t["valency"]: t["count"] for t in FLAT_TYPES.values() if len(t["basis"]) == 1},
    }
    discrepancies = []
    for kind in ("lines", "points"):
        for v in sorted(set(found[kind]) | set(printed[kind])):
            if found[kind].get(v) != printed[kind].get(v):
                discrepancies.append({"kind": kind, "valency": v, "found": found[kind].get(v), "printed": printed[kind].get(v)})
    return True, {"found": found, "printed": printed, "discrepancies": discrepancies}


def _complexes_consistency(_):
    from .complexes import theta_consistency

    r = theta_consistency()
    return r.holds, {"theta_constant": r.constant}


def _complexes_igusa(_):
    from .complexes import igusa_membership

    ok = igusa_membership()
    return ok, {"igusa_vanishes": ok}


def _complexes_f_invariance(opts):
    from .complexes import f_invariance, fiber_contains_F_orbit

    chars = f_invariance()
    fiber = fiber_contains_F_orbit(seed=opts.seed)
    ok = all(c is not None for c in chars.values()) and fiber["same_t"] and fiber["distinct_points"] == 16
    return ok, {"characters": chars, "fiber": fiber, "seed": opts.seed}


def _complexes_quartets(_):
    from .complexes import quartet_span

    r = quartet_span()
    return r.ok, {"rank": r.rank, "members_in_span": r.members_in_span, "partition": r.partition_ok}


def _complexes_pencil(_):
    from .complexes import pencil_discriminant

    r = pencil_discriminant()
    return r.block_diagonal and r.constant is not None, {
        "block_diagonal": r.block_diagonal,
        "quadratics": r.quadratics,
        "discriminant_constant": r.constant,
        "printed_exponent_reading_holds": r.printed_reading_holds,
    }


def _kummer_determinant(_):
    from .kummer import determinant_matches_closed_form, printed_rewriting_matches

    det, rewrite = determinant_matches_closed_form(), printed_rewriting_matches()
    return det and rewrite, {"determinant_equals_closed_form": det, "rewriting_matches": rewrite}


def _kummer_hudson(_):
    from .kummer import hudson_comparison

    r = hudson_comparison()
    return r.global_constant is not None, r


def _kummer_segre(_):
    from .kummer import segre_certificate

    r = segre_certificate()
    return r.paper_form["table"], r


def _kummer_heisenberg(_):
    from .kummer import heisenberg_invariance, heisenberg_table

    ok = heisenberg_invariance()
    return ok, {"fixes_all_five": ok, "table": heisenberg_table()}


def _kummer_gradient(_):
    from .kummer import kummer_in_c_gradient_at_a

    grads = kummer_in_c_gradient_at_a()
    ok = all(g.is_zero() for g in grads)
    return ok, {"gradient_vanishes_at_a": ok}


def _kummer_blocks(_):
    from .kummer import blocks_pentads_quintets

    r = blocks_pentads_quintets()
    return r.ok, r


def _kummer_residuals(_):
    from .kummer import residual_report

    r = residual_report(1)
    return r.decomposition_holds and r.thirty_two_identity, r


def _config_incidence(_):
    from .config16 import build_configuration, grid_mismatches

    c = build_configuration()
    degrees = c.regular_degrees()
    bad = grid_mismatches()
    ok = degrees == ({6}, {6}) and c.non_degenerate() and not bad
    return ok, {"degrees": degrees, "non_degenerate": c.non_degenerate(), "grid_mismatches": bad, "grid_cells": 32}


def _config_wd6(_):
    from .config16 import wd6_homomorphism

    r = wd6_homomorphism()
    return r.image_order == 11520 and len(r.kernel) == 2, r


def _config_automorphisms(_):
    from .config16 import automorphism_report

    r = automorphism_report()
    return r.side_preserving == 11520, r


def _bf_identities(_):
    from .binaryforms import (
        ap_map,
        contract,
        inversion_identities,
        resultant_in_pluecker,
        symbolic_cubics,
    )

    c1, c2 = symbolic_cubics()
    ap = ap_map(c1, c2)
    apolar = contract(c1, ap).is_zero() and contract(c2, ap).is_zero()
    cert = inversion_identities()
    return apolar and cert.holds, {
        "apolar": apolar,
        "AP_after_ap_constant": cert.resultant_constant,
        "ap_after_AP_constant": cert.j_constant,
        "resultant_in_pluecker": resultant_in_pluecker(),
    }


def _bf_sylvester(_):
    from .binaryforms import BinaryForm, sylvester_resultant

    x3, y3 = BinaryForm.from_plain([1, 0, 0, 0]), BinaryForm.from_plain([0, 0, 0, 1])
    value = sylvester_resultant(x3, y3)
    return value in (1, -1), {"sylvester_x3_y3": value}


def _models_very_special(_):
    from .models import very_special_model

    r = very_special_model()
    return r.ok, r


def _models_sl2(_):
    from .models import sl2sl2_model

    r = sl2sl2_model()
    return r.ok, r


def _models_gl2(_):
    from .models import gl2_weight_check

    r = gl2_weight_check()
    return r.ok, r


def _qh_classical(_):
    from .qh import classical_ring

    r = classical_ring()
    return r.ok, r


def _qh_gkm(_):
    from .qh import gkm_record, gkm_solve_reports

    r = gkm_record()
    return r.ok, {"record": r, "uniqueness": gkm_solve_reports()}


def _qh_quantum(_):
    from .qh import quantum_ring

    r = quantum_ring()
    return r.ok, r


def _qh_spectrum(_):
    from .qh import sigma1_matrix_spectrum

    r = sigma1_matrix_spectrum()
    return r.ok, {"record": r, "text": r.render()}


# smoothness ---------------------------------------------------------------

EXPECTED_SMOOTH = {
    "codim2-1": True,
    "codim2-2": True,
    "codim3-1": True,
    "codim3-2": True,
    "codim3-3": True,
    "codim3-6": True,
    "codim3-4": False,
    "nil-n0": False,
    "nil-n1": True,
    "nil-n2": True,
    "nil-n3": True,
}
EXPECTED_CONIC_TYPE = {"codim3-1": 3, "codim3-2": 2, "codim3-3": 1, "codim3-6": 0}
SPECIAL_LINE_POINTS = ((0, 0, 1, 1), (0, 0, 1, 2), (0, 0, 2, -3))


def expected_smooth(preset: str) -> bool:
    if preset in EXPECTED_SMOOTH:
        return EXPECTED_SMOOTH[preset]
    from .cartan import flat_point
    from .reflection import on_special_line

    return not on_special_line(flat_point(int(preset.split("-", 1)[1])))


def _smooth_preset(name: str) -> Check:
    def check(_):
        from .cartan import conic_type, preset_section, section_smooth

        section = preset_section(name)
        smooth = section_smooth(section)
        expected = expected_smooth(name)
        witness = {"smooth": smooth, "expected_smooth": expected, "rank": section.rank}
        ok = smooth == expected
        if name in EXPECTED_CONIC_TYPE:
            witness["conic_rank"] = conic_type(section)
            ok = ok and witness["conic_rank"] == EXPECTED_CONIC_TYPE[name]
        return ok, witness

    return check


def random_points_off_special_lines(seed: int, count: int = 3, bound: int = 9) -> List[Tuple[int, ...]]:
    from .reflection import on_special_line

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        pt = tuple(rng.randint(-bound, bound) for _ in range(4))
        if any(pt) and not on_special_line(pt):
            out.append(pt)
    return out


def _smooth_on_lines(_):
    from .cartan import section_from_cartan, section_smooth
    from .reflection import on_special_line

    rows = [
        {"point": p, "on_line": on_special_line(p), "smooth": section_smooth(section_from_cartan(p))}
        for p in SPECIAL_LINE_POINTS
    ]
    return all(r["on_line"] and not r["smooth"] for r in rows), {"points": rows}


def _smooth_off_lines(opts):
    from .cartan import section_from_cartan, section_smooth

    rows = [{"point": p, "smooth": section_smooth(section_from_cartan(p))} for p in random_points_off_special_lines(opts.seed)]
    return all(r["smooth"] for r in rows), {"seed": opts.seed, "points": rows}


def _smooth_file(path: str) -> Check:
    def check(_):
        from .cartan import SectionDatum, section_smooth
        from .spinor import Spinor

        with open(path) as fh:
            records = json.load(fh)
        slots = [Spinor()] * 4
        for rec in records:
            slots[int(rec["slot"]) - 1] = Spinor.from_records(rec["terms"])
        section = SectionDatum(tuple(slots), path)
        smooth = section_smooth(section)
        return True, {"smooth": smooth, "rank": section.rank, "section": section.to_records()}

    return check


def smoothness_checks(options: RunOptions) -> List[Tuple[str, Check]]:
    from .cartan import PRESET_NAMES

    if options.section_file:
        return [("smoothness.file", _smooth_file(options.section_file))]
    if options.preset:
        if options.preset not in PRESET_NAMES:
            raise UsageError(f"unknown preset {options.preset!r}; known presets: {', '.join(PRESET_NAMES)}")
        return [(f"smoothness.{options.preset}", _smooth_preset(options.preset))]
    checks = [(f"smoothness.{n}", _smooth_preset(n)) for n in EXPECTED_SMOOTH]
    checks += [("smoothness.special_line_points", _smooth_on_lines), ("smoothness.random_points", _smooth_off_lines)]
    return checks


SUITES: Dict[str, Tuple[Tuple[str, Check], ...]] = {
    "cartan": (("cartan.abelian", _cartan_abelian), ("cartan.gamma_a", _cartan_gamma)),
    "reflection": (
        ("reflection.group_order", _reflection_order),
        ("reflection.heisenberg", _reflection_heisenberg),
        ("reflection.hyperplane_action", _reflection_hyperplanes),
        ("reflection.quintet_pentad_actions", _reflection_actions),
        ("reflection.pentad_stabilizer", _reflection_stabilizer),
        ("reflection.kernel_on_quartics", _reflection_kernel),
    ),
    "flats": (
        ("flats.valency6_lines", _flats_lines),
        ("flats.incidence", _flats_incidence),
        ("flats.histogram", _flats_histogram),
    ),
    "complexes": (
        ("complexes.theta_consistency", _complexes_consistency),
        ("complexes.igusa_membership", _complexes_igusa),
        ("complexes.f_invariance", _complexes_f_invariance),
        ("complexes.quartets", _complexes_quartets),
        ("complexes.pencil_discriminant", _complexes_pencil),
    ),
    "kummer": (
        ("kummer.determinant", _kummer_determinant),
        ("kummer.hudson", _kummer_hudson),
        ("kummer.segre", _kummer_segre),
        ("kummer.heisenberg", _kummer_heisenberg),
        ("kummer.gradient", _kummer_gradient),
        ("kummer.blocks", _kummer_blocks),
        ("kummer.residuals", _kummer_residuals),
    ),
    "config16": (
        ("config16.incidence", _config_incidence),
        ("config16.wd6", _config_wd6),
        ("config16.automorphisms", _config_automorphisms),
    ),
    "binaryforms": (("binaryforms.inversion", _bf_identities), ("binaryforms.sylvester", _bf_sylvester)),
    "models": (
        ("models.very_special", _models_very_special),
        ("models.sl2xsl2", _models_sl2),
        ("models.gl2", _models_gl2),
    ),
    "qh": (
        ("qh.classical", _qh_classical),
        ("qh.gkm", _qh_gkm),
        ("qh.quantum", _qh_quantum),
        ("qh.spectrum", _qh_spectrum),
    ),
}
SUITE_NAMES = tuple(SUITES) + ("smoothness", "all")


class UsageError(ValueError):
    pass


def suite_checks(suite: str, options: RunOptions) -> List[Tuple[str, Check]]:
    if suite == "smoothness":
        return smoothness_checks(options)
    if suite == "all":
        out: List[Tuple[str, Check]] = []
        for name in SUITES:
            out.extend(SUITES[name])
        return out + smoothness_checks(options)
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    return list(SUITES[suite])


def run_suite(suite: str, options: RunOptions = RunOptions()) -> Tuple[List[Certificate], int]:
    certs = [run_check(name, check, options) for name, check in suite_checks(suite, options)]
    return certs, EXIT_PASS if all(c.passed for c in certs) else EXIT_FAIL


# ---------------------------------------------------------------------------
# compute commands
# ---------------------------------------------------------------------------


def parse_point(text: str) -> Tuple[GaussianRational, ...]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected four comma-separated rationals")
    try:
        return tuple(parse_gaussian(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fmt(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def cmd_theta(args) -> str:
    from .complexes import theta_coefficients

    t = theta_coefficients(args.a)
    return "\n".join(f"t{k} = {v}" for k, v in enumerate(t))


def cmd_gamma_a(args) -> str:
    from .cartan import gamma_a

    v = gamma_a(args.a)
    return "\n".join(f"{v.label(k)} = {c}" for k, c in enumerate(v.coeffs))


def cmd_kummer(args) -> str:
    from .kummer import hudson_coeffs, kummer_of

    h = hudson_coeffs(args.a)
    lines = [f"{n} = {v}" for n, v in zip("ABCDE", h.as_tuple())]
    lines.append(f"quartic = {kummer_of(args.a).poly}")
    return "\n".join(lines)


def cmd_joubert(args) -> str:
    from .kummer import joubert_map

    return _fmt(joubert_map(args.pentad, args.a))


def cmd_blocks(_) -> str:
    from . import tables
    from .kummer import blocks_pentads_quintets

    r = blocks_pentads_quintets()
    lines = [f"D{k}: {hs}" for k, hs in sorted(tables.blocks().items())]
    lines += [f"P{k + 1}: {p}" for k, p in enumerate(r.pentads_found)]
    lines += [f"Q{k + 1}: {q}" for k, q in enumerate(r.quintets_found)]
    lines.append(f"global constant = {r.global_constant}")
    return "\n".join(lines)


def cmd_hyperplanes(_) -> str:
    from . import tables

    return "\n".join(f"H{hp.index}: {_fmt(hp.coeffs)}" for hp in tables.hyperplanes())


def cmd_flats(_) -> str:
    from .reflection import enumerate_flats, line_point_incidence, valency_histogram

    lines, points = enumerate_flats()
    return "\n".join(
        [
            f"lines by valency: {valency_histogram(lines)}",
            f"points by valency: {valency_histogram(points)}",
            f"incidence: {line_point_incidence()}",
        ]
    )


def cmd_group_order(_) -> str:
    from .reflection import weyl_group

    return str(weyl_group().order)


def cmd_qh_matrix(_) -> str:
    from .qh import sigma1_matrix_spectrum

    return sigma1_matrix_spectrum().render()


def cmd_config16_aut(_) -> str:
    from .config16 import automorphism_report

    r = automorphism_report()
    return "\n".join(
        [
            f"side-preserving: {r.side_preserving}",
            f"side-swapping: {r.side_swapping}",
            f"point orbit: {r.point_orbit_size}",
        ]
    )


COMMANDS = {
    "theta": (cmd_theta, True),
    "kummer": (cmd_kummer, True),
    "gamma-a": (cmd_gamma_a, True),
    "joubert": (cmd_joubert, True),
    "blocks": (cmd_blocks, False),
    "hyperplanes": (cmd_hyperplanes, False),
    "flats": (cmd_flats, False),
    "group-order": (cmd_group_order, False),
    "qh-matrix": (cmd_qh_matrix, False),
    "config16-aut": (cmd_config16_aut, False),
}


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinorlab", description="Exact verification of spinor and Kummer identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITE_NAMES)
    v.add_argument("--json", metavar="PATH", help="write the certificates to PATH")
    v.add_argument("--seed", type=int, default=0, help="seed for randomized sample points")
    v.add_argument("--preset", help="restrict the smoothness suite to one preset section")
    v.add_argument("--section", metavar="FILE", help="smoothness of a section read from a JSON file")
    v.add_argument("--timing", action="store_true", help="record wall-clock milliseconds")
    v.add_argument("--quiet", action="store_true", help="suppress the per-check summary")

    for name, (_, needs_point) in COMMANDS.items():
        c = sub.add_parser(name)
        if needs_point:
            c.add_argument("--a", type=parse_point, required=True, metavar="r1,r2,r3,r4")
        if name == "joubert":
            c.add_argument("--pentad", type=int, choices=range(1, 7), required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS

    if args.command == "verify":
        options = RunOptions(seed=args.seed, preset=args.preset, section_file=args.section, timing=args.timing)
        try:
            certs, code = run_suite(args.suite, options)
        except UsageError as exc:
            print(f"spinorlab: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if not args.quiet:
            for c in certs:
                print(f"{c.status.upper():7s} {c.check}")
        if args.json:
            with open(args.json, "w") as fh:
                fh.write(dump_certificates(certs))
        return code

    func, _ = COMMANDS[args.command]
    try:
        print(func(args))
    except ValueError as exc:
        print(f"spinorlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
