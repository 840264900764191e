"""Machine-readable reports and their JSON schema."""

from __future__ import annotations

import time

import jsonschema

from . import __version__
from .dim4 import Dim4Input, boundary_b, homology_34, pi3_of_P4
from .ext import tau_class
from .pi3 import assemble_pi3, verify_module_axioms
from .ring import GroupRingElement

_INT = {"type": "integer"}
_VEC = {"type": "array", "items": _INT}
_MAT = {"type": "array", "items": _VEC}
_GROUP = {
    "type": "object",
    "required": ["torsion", "rank"],
    "properties": {"torsion": _VEC, "rank": _INT},
}
_MODULE = {
    "type": "object",
    "required": ["torsion", "rank", "action"],
    "properties": {"torsion": _VEC, "rank": _INT, "action": _MAT},
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["version", "input", "pi2", "H3", "gamma_pi2", "A_table", "B_table", "B_linear",
                 "pi3", "verdict", "axioms", "timing"],
    "properties": {
        "version": {"type": "string"},
        "input": {"type": "object", "required": ["f", "x"], "properties": {"f": _INT, "x": _VEC}},
        "pi2": _MODULE,
        "H3": {"type": "object", "required": ["rank", "basis", "action"],
               "properties": {"rank": _INT, "basis": _MAT, "action": _MAT}},
        "gamma_pi2": _MODULE,
        "A_table": {"type": "array", "items": _MAT},
        "B_table": _MAT,
        "B_linear": _MAT,
        "pi3": _MODULE,
        "verdict": {
            "type": "object",
            "required": ["split", "class_order", "coker_beta", "class", "certificate"],
            "properties": {
                "split": {"type": "boolean"},
                "class_order": _INT,
                "coker_beta": _GROUP,
                "class": _VEC,
                "certificate": {
                    "oneOf": [
                        {"type": "object", "required": ["kind", "t"],
                         "properties": {"kind": {"const": "splitting"}, "t": _MAT}},
                        {"type": "object", "required": ["kind", "lambda", "modulus"],
                         "properties": {"kind": {"const": "obstruction"}, "lambda": _VEC, "modulus": _INT}},
                    ]
                },
            },
        },
        "axioms": {"type": "array", "items": {"type": "string"}},
        "timing": {"type": "object", "properties": {"seconds": {"type": "number"}}},
    },
}

DIM4_SCHEMA = {
    "type": "object",
    "required": ["version", "input", "H3P", "H4P", "b", "pi3P", "coker_b", "ext", "timing"],
    "properties": {
        "version": {"type": "string"},
        "input": {"type": "object", "required": ["xtilde", "ytilde", "alpha"],
                  "properties": {"xtilde": _INT, "ytilde": _INT, "alpha": _VEC}},
        "H3P": _MODULE,
        "H4P": {"type": "object", "required": ["torsion", "rank", "action", "generator"],
                "properties": {"torsion": _VEC, "rank": _INT, "action": _MAT, "generator": _VEC}},
        "b": {"type": "object", "required": ["closed_form", "model", "agree"],
              "properties": {"closed_form": _VEC, "model": _VEC, "agree": {"type": "boolean"}}},
        "pi3P": {"type": "object", "required": ["torsion", "rank", "action", "action_trivial"],
                 "properties": {"torsion": _VEC, "rank": _INT, "action": _MAT,
                                "action_trivial": {"type": "boolean"}}},
        "coker_b": _GROUP,
        "ext": {"type": "object", "required": ["group", "class", "lift_check"],
                "properties": {"group": _GROUP, "class": _VEC, "lift_check": {"type": "boolean"}}},
        "timing": {"type": "object", "properties": {"seconds": {"type": "number"}}},
    },
}


def _group(g) -> dict:
    return {"torsion": list(g.torsion), "rank": g.rank}


def _module(group, action) -> dict:
    return {**_group(group), "action": action.as_lists()}


def build_report(f: int, x: GroupRingElement) -> dict:
    t0 = time.perf_counter()
    p = assemble_pi3(f, x)
    v = tau_class(p)
    problems = verify_module_axioms(p)
    rep = {
        "version": __version__,
        "input": {"f": f, "x": list(x.coeffs)},
        "pi2": _module(p.pi2.group, p.pi2.module.action),
        "H3": {"rank": p.rank, "basis": [list(b.coeffs) for b in p.H3.basis], "action": p.H3.action_matrix},
        "gamma_pi2": _module(p.gamma.group, p.gamma.action),
        "A_table": [[list(a) for a in row] for row in p.A_table],
        "B_table": [list(b) for b in p.B_table],
        "B_linear": [list(b) for b in p.B_linear],
        "pi3": _module(p.assembled.group, p.assembled.action),
        "verdict": {k: val for k, val in v.as_dict().items() if k != "B_linear"},
        "axioms": problems,
        "timing": {"seconds": round(time.perf_counter() - t0, 6)},
    }
    jsonschema.validate(rep, REPORT_SCHEMA)
    return rep


def build_dim4_report(inp: Dim4Input) -> dict:
    t0 = time.perf_counter()
    h = homology_34(inp)
    b = boundary_b(inp)
    P = pi3_of_P4(inp)
    rep = {
        "version": __version__,
        "input": {"xtilde": inp.xtilde, "ytilde": inp.ytilde, "alpha": list(inp.alpha)},
        "H3P": _module(h.H3.group, h.H3.action),
        "H4P": {**_group(h.H4.group), "action": h.H4.action.as_lists(), "generator": h.H4_basis[0]},
        "b": {"closed_form": list(b.closed_form), "model": list(b.model), "agree": b.agree},
        "pi3P": {**_module(P.group, P.action), "action_trivial": P.action_trivial},
        "coker_b": _group(P.coker_b),
        "ext": {"group": _group(P.ext_group), "class": list(P.ext_class), "lift_check": P.lift_check},
        "timing": {"seconds": round(time.perf_counter() - t0, 6)},
    }
    jsonschema.validate(rep, DIM4_SCHEMA)
    return rep


def group_text(g: dict) -> str:
    parts = [f"Z/{d}" for d in g["torsion"]]
    if g["rank"]:
        parts.append("Z" if g["rank"] == 1 else f"Z^{g['rank']}")
    return " + ".join(parts) if parts else "0"


def render_text(rep: dict) -> str:
    v = rep["verdict"]
    lines = [
        f"f = {rep['input']['f']}, x = ({','.join(map(str, rep['input']['x']))})",
        f"pi_2           {group_text(rep['pi2'])}   action {rep['pi2']['action']}",
        f"H_3            Z^{rep['H3']['rank']}   basis {rep['H3']['basis']}   action {rep['H3']['action']}",
        f"Gamma(pi_2)    {group_text(rep['gamma_pi2'])}   action {rep['gamma_pi2']['action']}",
        f"A table        {rep['A_table']}",
        f"B table        {rep['B_table']}",
        f"B linear       {rep['B_linear']}",
        f"pi_3           {group_text(rep['pi3'])}   action {rep['pi3']['action']}",
        f"split          {str(v['split']).lower()}   class order {v['class_order']}   "
        f"coker beta {group_text(v['coker_beta'])}   class {v['class']}",
        f"certificate    {v['certificate']}",
        f"axioms         {'ok' if not rep['axioms'] else '; '.join(rep['axioms'])}",
        f"time           {rep['timing']['seconds']:.3f} s",
    ]
    return "\n".join(lines)


def render_dim4_text(rep: dict) -> str:
    i = rep["input"]
    lines = [
        f"xtilde = {i['xtilde']}, ytilde = {i['ytilde']}, alpha = {i['alpha']}",
        f"H_3 P^         {group_text(rep['H3P'])}   action {rep['H3P']['action']}",
        f"H_4 P^         {group_text(rep['H4P'])}   action {rep['H4P']['action']}   generator {rep['H4P']['generator']}",
        f"b(generator)   closed form {rep['b']['closed_form']}   model {rep['b']['model']}   "
        f"{'agree' if rep['b']['agree'] else 'DISAGREE'}",
        f"pi_3 P         {group_text(rep['pi3P'])}   action {rep['pi3P']['action']}   "
        f"trivial {str(rep['pi3P']['action_trivial']).lower()}",
        f"coker b        {group_text(rep['coker_b'])}",
        f"Ext class      {rep['ext']['class']} in {group_text(rep['ext']['group'])}   "
        f"lift check {str(rep['ext']['lift_check']).lower()}",
        f"time           {rep['timing']['seconds']:.3f} s",
    ]
    return "\n".join(lines)
