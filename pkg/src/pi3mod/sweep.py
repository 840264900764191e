"""Grid verification over the special family x = xtilde k_1."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import _signs
from .ext import expected_split, congruence_system, split_oracle, tau_class, verify_verdict
from .pi3 import assemble_pi3, closed_form_check, special_x, verify_module_axioms


@dataclass
class Cell:
    f: int
    xtilde: int
    closed_form: bool = False
    axioms: bool = False
    tau_split: bool | None = None
    class_order: int | None = None
    certificate_ok: bool = False
    congruence_split: bool | None = None
    oracle_split: bool | None = None
    oracle_method: str = ""
    expected_split: bool = False
    error: str = ""
    details: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        if self.error:
            return False
        verdicts = {self.tau_split, self.congruence_split, self.oracle_split, self.expected_split}
        order_ok = self.class_order == (1 if self.expected_split else 2)
        return self.closed_form and self.axioms and self.certificate_ok and len(verdicts) == 1 and order_ok


def run_cell(f: int, xtilde: int, mutate: str | None = None) -> Cell:
    if mutate:
        with _signs.flipped(mutate):
            return _run(f, xtilde)
    return _run(f, xtilde)


def _run(f: int, xtilde: int) -> Cell:
    c = Cell(f, xtilde, expected_split=expected_split(f, xtilde))
    try:
        c.closed_form, c.details = closed_form_check(f, xtilde)
        p = assemble_pi3(f, special_x(f, xtilde))
        problems = verify_module_axioms(p)
        c.axioms = not problems
        c.details += problems
        v = tau_class(p)
        c.tau_split, c.class_order = v.split, v.class_order
        c.certificate_ok = verify_verdict(p, v)
        c.congruence_split = congruence_system(f, xtilde).solvable
        c.oracle_split, c.oracle_method = split_oracle(p)
    except Exception as exc:  # a mutated formula may break invariants anywhere
        c.error = f"{type(exc).__name__}: {exc}"
    return c


def _star(args):
    return run_cell(*args)


def verify_grid(f_max: int, xtilde_max: int, mutate: str | None = None, jobs: int = 1) -> list[Cell]:
    tasks = [(f, xt, mutate) for f in range(2, f_max + 1) for xt in range(1, xtilde_max + 1)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cells = list(pool.map(_star, tasks))
    else:
        cells = [_star(t) for t in tasks]
    return sorted(cells, key=lambda c: (c.f, c.xtilde))


def cell_dict(c: Cell) -> dict:
    d = asdict(c)
    d["ok"] = c.ok
    return d
