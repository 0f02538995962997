"""Command line interface.

Subcommands: component-groups, cuspidal, quotient-graph, quaternion,
drinfeld-census, verify.  Output format comes from --format or the
JLLAB_OUTPUT environment variable (json | dot | text); dot only makes
sense for graph-producing commands.  --figures DIR additionally renders
matplotlib PNG figures next to the printed report.

Exit codes: 0 success, 1 failed verification, 2 invalid arguments.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import (
    FiniteField,
    Poly,
    ResidueRing,
    default_level_polys,
    poly_from_string,
    prime_power_decomposition,
)
from .btquotient import build_quotient_graph, finite_dual_graph, genus_from_quotient
from .cuspidal import CuspidalAnalysis
from .drinfeld import supersingular_census
from .isogeny import compare_component_tables, q2_kernel_selection, verify_q2_curve_table
from .quaternion import component_groups, genus_ramified, mass_and_units, quotient_graph_at


class CliError(Exception):
    pass


def _emit(text: str):
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _get_format(args) -> str:
    fmt = args.format or os.environ.get("JLLAB_OUTPUT") or "text"
    if fmt not in ("json", "dot", "text"):
        raise CliError(f"unknown output format {fmt!r}")
    return fmt


def _get_q(args) -> int:
    q = args.q
    if prime_power_decomposition(q) is None or q > 16:
        raise CliError(f"q must be a prime power <= 16, got {q}")
    return q


def _level(args, q):
    field = FiniteField.of_order(q)
    dx, dy = default_level_polys(q)
    x = poly_from_string(field, args.x) if getattr(args, "x", None) else dx
    y = poly_from_string(field, args.y) if getattr(args, "y", None) else dy
    if x.degree != 1 or not x.is_irreducible():
        raise CliError(f"x must be a monic irreducible of degree 1, got {x}")
    if y.degree != 2 or not y.is_irreducible():
        raise CliError(f"y must be a monic irreducible of degree 2, got {y}")
    return x, y


def _figdir(args):
    d = getattr(args, "figures", None)
    if d:
        os.makedirs(d, exist_ok=True)
    return d


# ---------------------------------------------------------------------------
# subcommands

def cmd_component_groups(args) -> int:
    q = _get_q(args)
    fmt = _get_format(args)
    if fmt == "dot":
        raise CliError("component-groups has no dot output; use quotient-graph")
    x, y = _level(args, q)
    ca = CuspidalAnalysis(q, x, y)
    quat = component_groups(q)
    rows = []
    for place in ("x", "y", "inf"):
        sp = ca.specialization(place)
        rows.append(
            {
                "place": place,
                "jacobian": sp.component_group.to_json(),
                "jacobian_structure": sp.component_group.structure_string(),
                "jacobian_provenance": (
                    "btquotient: tree quotient -> dual graph -> critical group"
                    if place == "inf"
                    else "cuspidal: fiber model -> critical group"
                ),
                "quaternionic": quat[place].to_json(),
                "quaternionic_structure": quat[place].structure_string(),
                "quaternionic_provenance": "quaternion: mass formula graph -> critical group",
            }
        )
    if fmt == "json":
        _emit(_json({"q": q, "x": str(x), "y": str(y), "places": rows}))
    else:
        _emit("place\tjacobian\tquaternionic")
        for r in rows:
            _emit(f"{r['place']}\t{r['jacobian_structure']}\t{r['quaternionic_structure']}")
    figdir = _figdir(args)
    if figdir:
        from .figures import render_length_graph

        sp = ca.specialization("inf")
        render_length_graph(
            sp.critical.graph,
            os.path.join(figdir, f"component-groups-q{q}-inf.png"),
            title=f"dual graph at infinity, q={q}",
        )
        for place in ("x", "y"):
            render_length_graph(
                ca.specialization(place).critical.graph,
                os.path.join(figdir, f"component-groups-q{q}-{place}.png"),
                title=f"fiber dual graph at {place}, q={q}",
            )
    return 0


def cmd_cuspidal(args) -> int:
    q = _get_q(args)
    fmt = _get_format(args)
    if fmt == "dot":
        raise CliError("cuspidal has no dot output")
    x, y = _level(args, q)
    ca = CuspidalAnalysis(q, x, y)
    rep = ca.report()
    if fmt == "json":
        _emit(_json(rep))
    else:
        _emit(f"q\t{q}")
        _emit(f"group\t{rep['structure']}")
        for place, info in rep["specializations"].items():
            _emit(
                f"{place}\ttarget={info['structure']}"
                f"\tker={info['kernel']['factors']}\tcoker={info['cokernel']['factors']}"
            )
        checks = rep["certification"]["checks"]
        for name, val in sorted(checks.items()):
            _emit(f"check:{name}\t{'pass' if val else 'FAIL'}")
    return 0


def cmd_quotient_graph(args) -> int:
    q = _get_q(args)
    fmt = _get_format(args)
    x, y = _level(args, q)
    ring = ResidueRing(x * y)
    qg = build_quotient_graph(ring)
    res = finite_dual_graph(qg)
    if fmt == "json":
        payload = qg.to_json()
        payload["dual_graph"] = res.graph.to_json() if res.graph else None
        payload["attachments"] = {k: str(v) for k, v in res.attachments.items()}
        payload["genus"] = genus_from_quotient(qg)
        _emit(_json(payload))
    elif fmt == "dot":
        if res.graph is None:
            raise CliError("dual graph is empty (genus 0); nothing to draw")
        _emit(res.graph.to_dot(name="dual"))
    else:
        _emit(f"q\t{q}")
        _emit(f"stable_layer\t{qg.stable_layer}")
        for lo in qg.layers:
            _emit(f"layer\t{lo.layer}\torbits\t{len(lo.orbits)}\tsizes\t{lo.sizes}")
        _emit(f"genus\t{genus_from_quotient(qg)}")
        if res.graph:
            _emit(f"dual_vertices\t{res.graph.n_vertices}")
            _emit(f"dual_edges\t{res.graph.n_edges}")
            for label, v in sorted(res.attachments.items()):
                _emit(f"cusp\t{label}\t{v}")
    figdir = _figdir(args)
    if figdir:
        from .figures import render_length_graph, render_quotient_graph

        render_quotient_graph(
            qg, os.path.join(figdir, f"quotient-graph-q{q}.png"), title=f"quotient, q={q}"
        )
        if res.graph:
            render_length_graph(
                res.graph,
                os.path.join(figdir, f"dual-graph-q{q}.png"),
                title=f"finite dual graph, q={q}",
            )
    return 0


def cmd_quaternion(args) -> int:
    q = _get_q(args)
    fmt = _get_format(args)
    if fmt == "dot":
        graph = quotient_graph_at(q, "y")
        _emit(graph.to_dot(name="quaternion_y"))
        return 0
    mass, units, h = mass_and_units(q, [1, 2])
    quat = component_groups(q)
    payload = {
        "q": q,
        "mass": [mass.numerator, mass.denominator],
        "unit_term": [units.numerator, units.denominator],
        "class_number": h,
        "genus": genus_ramified(q, [1, 2]),
        "component_groups": {
            place: quat[place].to_json() for place in ("x", "y", "inf")
        },
    }
    if fmt == "json":
        _emit(_json(payload))
    else:
        _emit(f"q\t{q}")
        _emit(f"mass\t{mass}")
        _emit(f"class_number\t{h}")
        _emit(f"genus\t{payload['genus']}")
        for place in ("x", "y", "inf"):
            _emit(f"{place}\t{quat[place].structure_string()}")
    figdir = _figdir(args)
    if figdir:
        from .figures import render_length_graph

        for place in ("x", "y", "inf"):
            render_length_graph(
                quotient_graph_at(q, place),
                os.path.join(figdir, f"quaternion-q{q}-{place}.png"),
                title=f"quaternionic quotient at {place}, q={q}",
            )
    return 0


def cmd_drinfeld_census(args) -> int:
    q = _get_q(args)
    fmt = _get_format(args)
    if fmt == "dot":
        raise CliError("drinfeld-census has no dot output")
    x, y = _level(args, q)
    out = {}
    for name, prime in (("x", x), ("y", y)):
        js = supersingular_census(q, prime)
        out[name] = {
            "prime": str(prime),
            "search_field_order": q ** (2 * prime.degree),
            "supersingular_j": js,
        }
    if fmt == "json":
        _emit(_json({"q": q, "census": out}))
    else:
        for name, info in out.items():
            _emit(
                f"{name}\t{info['prime']}\tF_{info['search_field_order']}\t"
                f"j={info['supersingular_j']}"
            )
    return 0


def cmd_verify(args) -> int:
    q = args.q
    if prime_power_decomposition(q) is None or q > 16:
        raise CliError(f"q must be a prime power <= 16, got {q}")
    fmt = _get_format(args)
    if fmt == "dot":
        raise CliError("verify has no dot output")

    field = FiniteField.of_order(q)
    if q == 2:
        # the reference level for the full verification
        x = Poly.from_ints(field, [1, 1])
        y = Poly.from_ints(field, [1, 1, 1])
    else:
        x, y = default_level_polys(q)
    ca = CuspidalAnalysis(q, x, y)

    checks = dict(ca.certify_orders()["checks"])
    seqs = ca.exact_sequences()
    checks["ker_x"] = seqs["x"]["kernel"].invariant_factors == (q + 1,)
    checks["coker_x"] = seqs["x"]["cokernel"].invariant_factors == (q + 1,)
    checks["ker_y"] = seqs["y"]["kernel"].invariant_factors == (q * q + 1,)
    checks["coker_y"] = seqs["y"]["cokernel"].is_trivial
    if q % 2 == 0:
        checks["inf_iso"] = (
            seqs["inf"]["kernel"].is_trivial and seqs["inf"]["cokernel"].is_trivial
        )
    else:
        checks["inf_two_torsion"] = (
            seqs["inf"]["kernel"].invariant_factors == (2,)
            and seqs["inf"]["cokernel"].invariant_factors == (2,)
        )
    table_ok, table_rows = compare_component_tables(q)
    checks["quotient_table_matches_quaternionic"] = table_ok

    report = {"q": q, "x": str(x), "y": str(y), "tables": table_rows}
    skipped = []
    if q == 2:
        curves_ok, curve_rows = verify_q2_curve_table()
        if args.inject_fault:
            curves_ok = False
            curve_rows["E1"]["computed"] = (0, 0, 0)
        checks["curve_table"] = curves_ok
        sel = q2_kernel_selection()
        checks["kernel_selection_unique"] = sel["selected"] == "C0"
        report["curves"] = curve_rows
        report["kernel_selection"] = sel
    else:
        skipped = ["curve_table", "kernel_selection_unique"]

    ok = all(checks.values())
    report["checks"] = checks
    report["not_applicable"] = skipped
    report["ok"] = ok
    if fmt == "json":
        _emit(_json(report))
    else:
        for name, val in sorted(checks.items()):
            _emit(f"{name}\t{'pass' if val else 'FAIL'}")
        for name in skipped:
            _emit(f"{name}\tn/a")
        _emit(f"verify\t{'pass' if ok else 'FAIL'}")
    return 0 if ok else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="jllab",
        description="Component groups, quotient graphs and censuses at level x*y over F_q(T).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_level=True):
        sp.add_argument("--q", type=int, default=2, help="size of the constant field")
        sp.add_argument(
            "--format",
            choices=("json", "dot", "text"),
            default=None,
            help="output format (default: JLLAB_OUTPUT env var, then text)",
        )
        sp.add_argument("--figures", metavar="DIR", help="also render PNG figures into DIR")
        if with_level:
            sp.add_argument("--x", help="degree-1 monic irreducible (default T)")
            sp.add_argument(
                "--y", help="degree-2 monic irreducible (default the smallest one)"
            )

    common(sub.add_parser("component-groups", help="component groups on both sides"))
    common(sub.add_parser("cuspidal", help="cuspidal group and specializations"))
    common(sub.add_parser("quotient-graph", help="quotient of the tree at level x*y"))
    common(sub.add_parser("quaternion", help="mass formulas and quaternionic graphs"), with_level=False)
    common(sub.add_parser("drinfeld-census", help="supersingular j-invariant census"))
    vp = sub.add_parser("verify", help="run the full consistency verification")
    common(vp, with_level=False)
    vp.add_argument(
        "--inject-fault",
        action="store_true",
        help=argparse.SUPPRESS,  # test hook: corrupt a table entry on purpose
    )
    return p


_COMMANDS = {
    "component-groups": cmd_component_groups,
    "cuspidal": cmd_cuspidal,
    "quotient-graph": cmd_quotient_graph,
    "quaternion": cmd_quaternion,
    "drinfeld-census": cmd_drinfeld_census,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except CliError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
