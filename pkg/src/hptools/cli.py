"""Batch command-line surface: every analysis as a reproducible report.

One invocation produces one self-describing report (json, csv, or text).
Exit status: 0 success, 1 domain error, 2 usage error.  Reports echo every
parameter and the seed, and are byte-reproducible apart from the timing
field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .errors import DomainError
from .freeness import (BipGraph, bipgraph_decode, count_nonshattering_attachments,
                       count_sparse_bipartite, count_uk_free_bipartite,
                       count_uk_free_bipartite_range,
                       distinguishing_set, extract_clone_classes,
                       max_separated_subset, separated_subset_ceiling)
from .graphs import (Graph, bits, edgelist_decode, graph6_decode, graph6_encode,
                     mask_of)
from .hereditary import (PropertySpec, abt_bounds, colouring_number, count_hrv,
                         enumerate_property, load_property, speed,
                         valid_hrv_patterns)
from .regularity import min_intra_edges_parts
from .structure import (DecompositionCertificate, PackingPiece, PackingReport,
                        decompose, extract_universal_packing,
                        verify_decomposition, verify_packing_maximality,
                        verify_packing_report)
from .universal import (construct_generalized_universal, construct_universal,
                        construct_universal_star, shatters)


def _vlist(mask: int) -> list[int]:
    return list(bits(mask))


def _parse_vertices(text: str) -> int:
    if not text.strip():
        return 0
    return mask_of(int(tok) for tok in text.replace(",", " ").split())


def _parse_labels(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.replace(",", " ").split())


def load_graph(path: str, fmt: str = "auto") -> Graph:
    with open(path) as fh:
        text = fh.read()
    if fmt == "auto":
        first = text.strip().splitlines()[0].strip() if text.strip() else ""
        fmt = "edgelist" if first.isdigit() else "graph6"
    if fmt == "graph6":
        return graph6_decode(text.strip())
    if fmt == "edgelist":
        return edgelist_decode(text)
    raise DomainError(f"unknown graph format {fmt!r}")


def load_bipgraph(path: str) -> BipGraph:
    with open(path) as fh:
        return bipgraph_decode(fh.read())


# ---------------------------------------------------------------------------
# certificate schemas (version 1)


def packing_to_dict(report: PackingReport, G: Graph, parts) -> dict:
    return {
        "type": "packing-report",
        "schema_version": 1,
        "graph6": graph6_encode(G).decode("ascii"),
        "parts": list(parts),
        "k": report.k,
        "r": report.r,
        "pieces": [{
            "level": p.level,
            "layers": [_vlist(m) for m in p.layers],
            "placement": list(p.placement),
        } for p in report.pieces],
        "residual": [_vlist(m) for m in report.residual],
    }


def packing_from_dict(data: dict) -> tuple[Graph, tuple[int, ...], PackingReport]:
    G = graph6_decode(data["graph6"])
    parts = tuple(data["parts"])
    pieces = tuple(PackingPiece(tuple(mask_of(layer) for layer in p["layers"]),
                                p["level"], tuple(p["placement"]))
                   for p in data["pieces"])
    report = PackingReport(pieces, tuple(mask_of(v) for v in data["residual"]),
                           data["k"], data["r"])
    return G, parts, report


def certificate_to_dict(cert: DecompositionCertificate, G: Graph,
                        hint_parts) -> dict:
    return {
        "type": "decomposition-certificate",
        "schema_version": 1,
        "graph6": graph6_encode(G).decode("ascii"),
        "n": cert.n,
        "r": cert.r,
        "k": cert.k,
        "A": _vlist(cert.exceptional),
        "parts": [_vlist(m) for m in cert.parts],
        "provenance": {
            "bad_set": _vlist(cert.bad_set),
            "alpha": cert.alpha,
            "eps_out": cert.eps_out,
            "hint_parts": list(hint_parts) if hint_parts is not None else None,
            "adjusted_labels": list(cert.adjusted_labels),
            "adjustment_ok": cert.adjustment_ok,
            "packing": {
                "pieces": [{
                    "level": p.level,
                    "layers": [_vlist(m) for m in p.layers],
                    "placement": list(p.placement),
                } for p in cert.packing.pieces],
            },
        },
        "budget": cert.budget,
        "budget_ok": cert.budget_ok,
    }


def certificate_from_dict(data: dict) -> tuple[Graph, DecompositionCertificate]:
    G = graph6_decode(data["graph6"])
    prov = data["provenance"]
    pieces = tuple(PackingPiece(tuple(mask_of(layer) for layer in p["layers"]),
                                p["level"], tuple(p["placement"]))
                   for p in prov["packing"]["pieces"])
    packing = PackingReport(pieces, (), data["k"], data["r"])
    cert = DecompositionCertificate(
        n=data["n"], r=data["r"], k=data["k"],
        exceptional=mask_of(data["A"]),
        parts=tuple(mask_of(v) for v in data["parts"]),
        bad_set=mask_of(prov["bad_set"]),
        adjusted_labels=tuple(prov["adjusted_labels"]),
        adjustment_ok=prov["adjustment_ok"],
        packing=packing, alpha=prov["alpha"], eps_out=prov["eps_out"],
        budget=data["budget"], budget_ok=data["budget_ok"])
    return G, cert


# ---------------------------------------------------------------------------
# report emission


def emit(args, results: dict, seed=None, rows=None) -> None:
    report = {
        "tool": "hptools",
        "version": __version__,
        "command": args.command,
        "params": {k: v for k, v in sorted(vars(args).items())
                   if k not in ("command", "func", "_t0") and v is not None},
        "seed": seed,
        "results": results,
        "timing_ms": round((time.perf_counter() - args._t0) * 1000, 3),
    }
    fmt = getattr(args, "format", "json")
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, default=str))
    elif fmt == "csv":
        if rows is None:
            rows = [results]
        cols = sorted({key for row in rows for key in row})
        print(",".join(cols))
        for row in rows:
            print(",".join(str(row.get(c, "")) for c in cols))
    else:
        for key in sorted(results):
            print(f"{key}: {results[key]}")


def _log2_str(x: float) -> str:
    return f"{x:.6f}"


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(args) -> None:
    if args.r is None:
        uni = construct_universal(args.k)
        w = shatters(uni.graph, uni.A, uni.B)
        results = {
            "graph6": graph6_encode(uni.graph).decode("ascii"),
            "A": _vlist(uni.A), "B": _vlist(uni.B),
            "edges": uni.graph.edge_count(),
            "shatters": w is not None,
        }
    else:
        if args.v is not None:
            v = tuple(int(b) for b in args.v.replace(",", ""))
            lay = construct_universal_star(args.r, args.k, v)
        else:
            lay = construct_generalized_universal(args.r, args.k)
        results = {
            "graph6": graph6_encode(lay.graph).decode("ascii"),
            "layers": [_vlist(m) for m in lay.layers],
            "layer_sizes": [m.bit_count() for m in lay.layers],
            "edges": lay.graph.edge_count(),
        }
    emit(args, results)


def cmd_shatter(args) -> None:
    G = load_graph(args.graph, args.graph_format)
    A = _parse_vertices(args.A)
    B = _parse_vertices(args.B)
    w = shatters(G, A, B)
    results = {"shatters": w is not None}
    if w is not None:
        results["realizers"] = {str(sorted(_vlist(tr))): v
                                for tr, v in sorted(w.realizers.items())}
    emit(args, results)


def cmd_chi_c(args) -> None:
    spec = load_property(args.forbidden)
    chi = colouring_number(spec, args.r_max)
    emit(args, {
        "colouring_number": chi.value,
        "capped": chi.capped,
        "degenerate": chi.degenerate,
        "witness_v": list(chi.witness_v) if chi.witness_v else None,
    })


def cmd_speed(args) -> None:
    spec = load_property(args.forbidden)
    row = speed(spec, args.n)
    emit(args, {"n": row.n, "count": str(row.count),
                "entropy": _log2_str(row.entropy)})


def cmd_census(args) -> None:
    spec = load_property(args.forbidden)
    chi = colouring_number(spec)
    if chi.degenerate:
        raise DomainError("degenerate property: the one-vertex graph is forbidden")
    r = chi.value
    patterns = valid_hrv_patterns(spec)
    rows = []
    for n in range(1, args.n_max + 1):
        row = speed(spec, n)
        lower = max((count_hrv(n, rr, vv) for rr, vv in patterns), default=0)
        lo2, hi2 = abt_bounds(n, r, args.eps)
        entry = {
            "n": n,
            "count": str(row.count),
            "entropy": _log2_str(row.entropy),
            "hrv_lower": str(lower),
            "abt_log2_lower": _log2_str(lo2),
            "abt_log2_upper": _log2_str(hi2),
        }
        if args.certify:
            # min-intra-edge hint: the toy block partitioner is far too slow
            # to run once per enumerated member
            good = total = 0
            for G in enumerate_property(spec, n):
                total += 1
                try:
                    hint = min_intra_edges_parts(G, r)
                    cert = decompose(G, r, args.k, args.alpha,
                                     parts_hint=hint, eps_out=args.budget_eps)
                except DomainError:
                    continue
                if verify_decomposition(G, cert) and cert.budget_ok:
                    good += 1
            entry["certified_fraction"] = (f"{good}/{total}"
                                           if total else "0/0")
        rows.append(entry)
    emit(args, {"rows": rows, "colouring_number": r}, rows=rows)


def cmd_count_free(args) -> None:
    threads = int(os.environ.get("HPTOOLS_THREADS", "1"))
    total = 1 << (args.m * args.n)
    if threads > 1 and total >= 1 << 12:
        from concurrent.futures import ProcessPoolExecutor
        step = -(-total // threads)
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(count_uk_free_bipartite_range, args.m,
                                   args.n, args.k, args.mode, lo,
                                   min(lo + step, total))
                       for lo in range(0, total, step)]
            count = sum(f.result() for f in futures)
    else:
        count = count_uk_free_bipartite(args.m, args.n, args.k, args.mode)
    emit(args, {"count": str(count)})


def cmd_count_attach(args) -> None:
    exact, printed, corrected = count_nonshattering_attachments(args.a, args.n)
    emit(args, {"exact": str(exact), "printed_bound": str(printed),
                "corrected_bound": str(corrected)})


def cmd_separated(args) -> None:
    bg = load_bipgraph(args.bipgraph)
    res = max_separated_subset(bg, args.side, args.x, args.mode)
    results = {"vertices": _vlist(res.vertices), "size": res.size,
               "exact": res.exact}
    if args.k is not None:
        n_side = bg.n if args.side == "A" else bg.m
        m_side = bg.m if args.side == "A" else bg.n
        results["ceiling"] = _log2_str(
            separated_subset_ceiling(n_side, args.x, args.k, m_side))
    emit(args, results)


def cmd_sparsen(args) -> None:
    if args.t is None:
        bg = load_bipgraph(args.bipgraph)
        u_sub = _parse_vertices(args.usub) if args.usub else (1 << bg.m) - 1
        ds = distinguishing_set(bg, u_sub, Fraction(args.alpha), args.seed)
        emit(args, {"X": _vlist(ds.X), "size": ds.size,
                    "attempts": ds.attempts}, seed=args.seed)
        return
    G = load_graph(args.graph, args.graph_format)
    parts = _parse_labels(args.parts)
    B = _parse_vertices(args.core)
    out = extract_clone_classes(G, parts, B, Fraction(args.alpha), args.t,
                                args.seed, args.direction)
    emit(args, {
        "b_prime": _vlist(out.b_prime),
        "classes": [[_vlist(c) for c in part] for part in out.classes],
        "delta": out.params.delta,
        "condition_a": out.condition_a,
        "condition_b": out.condition_b,
    }, seed=args.seed)


def cmd_pack(args) -> None:
    G = load_graph(args.graph, args.graph_format)
    parts = _parse_labels(args.parts)
    report = extract_universal_packing(G, parts, args.k)
    problems = verify_packing_report(G, parts, report)
    data = packing_to_dict(report, G, parts)
    data["structure_ok"] = not problems
    data["maximal"] = verify_packing_maximality(G, parts, report)
    emit(args, data)


def cmd_decompose(args) -> None:
    G = load_graph(args.graph, args.graph_format)
    hint = _parse_labels(args.parts) if args.parts else None
    cert = decompose(G, args.r, args.k, args.alpha, parts_hint=hint,
                     eps_out=args.eps_out)
    data = certificate_to_dict(cert, G, hint)
    data["verified"] = verify_decomposition(G, cert)
    emit(args, data)


def cmd_verify(args) -> None:
    with open(args.certificate) as fh:
        payload = json.load(fh)
    data = payload.get("results", payload)  # accept raw or wrapped reports
    kind = data.get("type")
    if kind == "decomposition-certificate":
        G, cert = certificate_from_dict(data)
        if args.graph:
            G = load_graph(args.graph, args.graph_format)
        ok = verify_decomposition(G, cert, args.budget_eps)
        emit(args, {"type": kind, "valid": ok})
    elif kind == "packing-report":
        G, parts, report = packing_from_dict(data)
        if args.graph:
            G = load_graph(args.graph, args.graph_format)
        problems = verify_packing_report(G, parts, report)
        ok = not problems and verify_packing_maximality(G, parts, report)
        emit(args, {"type": kind, "valid": ok, "problems": problems})
    else:
        raise DomainError(f"unknown certificate type {kind!r}")


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hptools",
        description="Exact desk-scale toolkit for universal graphs, "
                    "hereditary speeds, and structure certificates.")
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=fn)
        p.add_argument("--format", choices=("json", "csv", "text"),
                       default="json")
        return p

    p = add("construct", cmd_construct, help="build a universal graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--v", help="layer pattern bits for the starred variant")

    p = add("shatter", cmd_shatter, help="test whether A shatters B")
    p.add_argument("--graph", required=True)
    p.add_argument("--graph-format", default="auto",
                   choices=("auto", "graph6", "edgelist"))
    p.add_argument("--A", required=True, help="comma-separated vertices")
    p.add_argument("--B", required=True)

    p = add("chi-c", cmd_chi_c, help="colouring number of a property")
    p.add_argument("--forbidden", required=True)
    p.add_argument("--r-max", type=int, default=8)

    p = add("speed", cmd_speed, help="exact |P_n|")
    p.add_argument("--forbidden", required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("census", cmd_census, help="per-n speed/entropy/bound table")
    p.add_argument("--forbidden", required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--eps", type=float, default=0.5)
    p.add_argument("--alpha", type=float, default=0.25)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--budget-eps", type=float, default=0.5)
    p.add_argument("--certify", action=argparse.BooleanOptionalAction,
                   default=False,
                   help="also decompose every member and report the "
                        "fraction meeting the |A| budget")

    p = add("count-free", cmd_count_free, help="exact U(k)-free bipartite count")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("whole", "cross"), default="whole")

    p = add("count-attach", cmd_count_attach,
            help="exact non-shattering attachment count")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("separated", cmd_separated, help="max pairwise-separated subset")
    p.add_argument("--bipgraph", required=True)
    p.add_argument("--side", choices=("A", "B"), default="A")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--mode", choices=("exact", "greedy"), default="exact")
    p.add_argument("--k", type=int, help="report the U(k)-free ceiling too")

    p = add("sparsen", cmd_sparsen,
            help="distinguishing set, or clone classes when --t is given")
    p.add_argument("--bipgraph")
    p.add_argument("--usub", help="A-side vertices to distinguish")
    p.add_argument("--graph")
    p.add_argument("--graph-format", default="auto",
                   choices=("auto", "graph6", "edgelist"))
    p.add_argument("--parts", help="part label per vertex, comma-separated")
    p.add_argument("--core", help="core vertex set B")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--direction", choices=("to-core", "from-core"),
                   default="to-core")
    p.add_argument("--seed", type=int, default=0)

    p = add("pack", cmd_pack, help="extract a universal packing")
    p.add_argument("--graph", required=True)
    p.add_argument("--graph-format", default="auto",
                   choices=("auto", "graph6", "edgelist"))
    p.add_argument("--parts", required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("decompose", cmd_decompose, help="decomposition certificate")
    p.add_argument("--graph", required=True)
    p.add_argument("--graph-format", default="auto",
                   choices=("auto", "graph6", "edgelist"))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--parts")
    p.add_argument("--eps-out", type=float, default=0.5)

    p = add("verify", cmd_verify, help="re-verify an emitted certificate")
    p.add_argument("--certificate", required=True)
    p.add_argument("--graph", help="optional cross-check graph file")
    p.add_argument("--graph-format", default="auto",
                   choices=("auto", "graph6", "edgelist"))
    p.add_argument("--budget-eps", type=float)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._t0 = time.perf_counter()
    try:
        args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
