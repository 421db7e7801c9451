#!/usr/bin/env python3
"""Solve an LP file written by `lrc_cli ilp --export` with scipy's MILP solver.

Reads only the subset of the CPLEX LP format the exporter writes: one
objective, named constraints (continuation lines indented), lower bounds,
General and Binary sections.

Exit status: 0 optimal, 1 infeasible, 2 bad input or scipy missing,
3 time limit or other solver stop.
"""

import argparse
import json
import re
import sys

SECTIONS = {"minimize", "subject to", "bounds", "general", "binary", "end"}
SENSES = ("<=", ">=", "=")


class LpError(Exception):
    pass


def parse_linear(text, lineno):
    """'x + 3 y - n' -> [(coef, name), ...]"""
    terms = []
    tokens = re.findall(r"[+-]|[0-9]+(?:\.[0-9]+)?|[A-Za-z_][A-Za-z0-9_]*", text)
    if "".join(tokens) != re.sub(r"\s+", "", text):
        raise LpError(f"line {lineno}: unexpected characters in '{text.strip()}'")
    sign, coef = 1, None
    for tok in tokens:
        if tok in "+-":
            if coef is not None:
                raise LpError(f"line {lineno}: dangling coefficient")
            sign = -1 if tok == "-" else 1
        elif tok[0].isdigit():
            coef = float(tok)
        else:
            terms.append((sign * (coef if coef is not None else 1.0), tok))
            sign, coef = 1, None
    if coef is not None:
        raise LpError(f"line {lineno}: coefficient without variable")
    return terms


def parse_lp(text):
    meta = {}
    objective = None
    constraints = []  # (name, terms, sense, rhs)
    lower = {}
    general, binary = [], []
    section = None
    pending = None  # (name, text, lineno) of the constraint being read

    def flush():
        nonlocal pending
        if pending is None:
            return
        name, body, lineno = pending
        for sense in SENSES:
            if sense in body:
                lhs, rhs = body.split(sense, 1)
                break
        else:
            raise LpError(f"line {lineno}: constraint '{name}' has no sense")
        try:
            value = float(rhs)
        except ValueError:
            raise LpError(f"line {lineno}: bad right-hand side '{rhs.strip()}'")
        constraints.append((name, parse_linear(lhs, lineno), sense, value))
        pending = None

    for lineno, raw in enumerate(text.splitlines(), 1):
        if raw.startswith("\\"):
            for key, value in re.findall(r"(\w+)=(\d+)", raw):
                meta[key] = int(value)
            continue
        line = raw.strip()
        if not line:
            continue
        if line.lower() in SECTIONS:
            flush()
            section = line.lower()
            if section == "end":
                break
            continue
        if section == "minimize":
            name, _, body = line.partition(":")
            objective = parse_linear(body, lineno)
        elif section == "subject to":
            m = re.match(r"([A-Za-z_][A-Za-z0-9_]*):(.*)$", line)
            if m and not raw.startswith("   "):
                flush()
                pending = (m.group(1), m.group(2), lineno)
            elif pending is not None:
                pending = (pending[0], pending[1] + " " + line, pending[2])
            else:
                raise LpError(f"line {lineno}: continuation before any constraint")
        elif section == "bounds":
            m = re.match(r"([A-Za-z_][A-Za-z0-9_]*)\s*>=\s*(-?[0-9.]+)$", line)
            if not m:
                raise LpError(f"line {lineno}: unsupported bound '{line}'")
            lower[m.group(1)] = float(m.group(2))
        elif section == "general":
            general.extend(line.split())
        elif section == "binary":
            binary.extend(line.split())
        else:
            raise LpError(f"line {lineno}: text outside any section")
    flush()
    if objective is None:
        raise LpError("no objective")
    return meta, objective, constraints, lower, general, binary


def solve(parsed, time_limit):
    import numpy as np
    from scipy.optimize import Bounds, LinearConstraint, milp

    meta, objective, constraints, lower, general, binary = parsed
    names = []
    index = {}

    def var(name):
        if name not in index:
            index[name] = len(names)
            names.append(name)
        return index[name]

    for _, v in objective:
        var(v)
    for _, terms, _, _ in constraints:
        for _, v in terms:
            var(v)
    for v in general + binary:
        var(v)

    nv = len(names)
    c = np.zeros(nv)
    for coef, v in objective:
        c[index[v]] += coef
    a = np.zeros((len(constraints), nv))
    lb = np.full(len(constraints), -np.inf)
    ub = np.full(len(constraints), np.inf)
    for i, (_, terms, sense, rhs) in enumerate(constraints):
        for coef, v in terms:
            a[i, index[v]] += coef
        if sense in ("<=", "="):
            ub[i] = rhs
        if sense in (">=", "="):
            lb[i] = rhs
    vlo = np.zeros(nv)
    vhi = np.full(nv, np.inf)
    for v, value in lower.items():
        vlo[var(v)] = value
    for v in binary:
        vhi[index[v]] = 1
    integrality = np.zeros(nv)
    for v in general + binary:
        integrality[index[v]] = 1
    options = {"time_limit": time_limit} if time_limit else {}
    res = milp(c, constraints=LinearConstraint(a, lb, ub), integrality=integrality,
               bounds=Bounds(vlo, vhi), options=options)
    out = {"meta": meta, "variables": nv, "constraints": len(constraints)}
    if res.status == 0:
        out["status"] = "optimal"
        out["objective"] = round(res.fun)
        out["values"] = {names[i]: round(x) for i, x in enumerate(res.x) if round(x) != 0}
        return 0, out
    if res.status == 2:
        out["status"] = "infeasible"
        return 1, out
    out["status"] = "stopped"
    out["message"] = res.message
    return 3, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("lp_file")
    ap.add_argument("--time-limit", type=float, default=None, help="seconds")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    try:
        with open(args.lp_file) as f:
            parsed = parse_lp(f.read())
    except (OSError, LpError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        code, out = solve(parsed, args.time_limit)
    except ImportError as e:
        print(f"error: scipy unavailable ({e})", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(out, sort_keys=True))
    else:
        print(f"status: {out['status']}")
        if "objective" in out:
            print(f"n: {out['objective']}")
        print(f"variables: {out['variables']} constraints: {out['constraints']}")
    return code


if __name__ == "__main__":
    sys.exit(main())
