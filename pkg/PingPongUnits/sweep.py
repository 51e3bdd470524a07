"""
Runs every applicable recipe over a range of d.

Which recipes a d must pass is derived from the preconditions: the norm of
the fundamental unit and its x coordinate.
"""


import concurrent.futures
import logging
import typing

import PingPongUnits.exactnum
import PingPongUnits.exceptions
import PingPongUnits.pell
import PingPongUnits.pingpong
import PingPongUnits.quaternion
import PingPongUnits.recipe.table
import PingPongUnits.semigroup


module_logger = logging.getLogger(__name__)

WKind = PingPongUnits.quaternion.WKind


class RecipeOutcome:
    """
    One recipe at one d. passed is None when the recipe does not apply.
    """

    name: str
    passed: typing.Optional[bool]
    note: str

    def __init__(self, name: str, passed: typing.Optional[bool], note: str = ""):
        self.name = name
        self.passed = passed
        self.note = note

    @property
    def expected(self) -> bool:
        return self.passed is not None

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "note": self.note}

    def __repr__(self):
        return "<{}.{} object at {} name={} passed={} note={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self.name,
            self.passed,
            self.note,
        )


class SweepItem:
    """
    All outcomes for a single d.
    """

    d: int
    x: int
    y: int
    norm: int
    outcomes: typing.List[RecipeOutcome]

    def __init__(self, d: int, x: int, y: int, norm: int, outcomes: typing.List[RecipeOutcome]):
        self.d = d
        self.x = x
        self.y = y
        self.norm = norm
        self.outcomes = list(outcomes)

    @property
    def ok(self) -> bool:
        return all(outcome.passed for outcome in self.outcomes if outcome.expected)

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "x": str(self.x),
            "y": str(self.y),
            "norm": self.norm,
            "ok": self.ok,
            "outcomes": [outcome.to_dict() for outcome in self.outcomes],
        }

    def __repr__(self):
        return "<{}.{} object at {} d={} ok={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self.d,
            self.ok,
        )


def square_free_range(d_max: int) -> typing.List[int]:
    return [d for d in range(2, d_max + 1) if PingPongUnits.exactnum.is_square_free(d)]


def _run(name: str, check: typing.Callable[[], bool]) -> RecipeOutcome:
    try:
        return RecipeOutcome(name, bool(check()))
    except PingPongUnits.exceptions.InvalidInput as error:
        module_logger.error("Recipe %r raised %r", name, error)
        return RecipeOutcome(name, False, str(error))


def sweep_item(d: int) -> SweepItem:
    """
    Certifies every recipe that applies at d, and marks the rest as not
    applicable with the reason.

    :param d: A square-free integer >= 2.

    :type d: int

    :return: The outcomes for d.
    :rtype: SweepItem
    """
    fund = PingPongUnits.pell.pell_fundamental(d)
    outcomes = []

    module_logger.info("Sweeping d=%r with %r", d, fund)

    if fund.norm == 1:
        for kind in WKind:
            name = kind.value
            if kind is WKind.W2 and fund.x <= 2:
                outcomes.append(RecipeOutcome(f"group-{ name }", None, "x <= 2"))
                outcomes.append(RecipeOutcome(f"lemmas-{ name }", None, "x <= 2"))
                continue

            outcomes.append(
                _run(
                    f"group-{ name }",
                    lambda kind=kind: PingPongUnits.pingpong.certify_pair(
                        PingPongUnits.recipe.table.table_recipe_for(d, kind)
                    ).passed,
                )
            )
            outcomes.append(
                _run(
                    f"lemmas-{ name }",
                    lambda kind=kind: PingPongUnits.pingpong.verify_interval_lemmas(d, kind).all_hold,
                )
            )

        outcomes.append(RecipeOutcome("group-corollary", None, "norm +1"))
    else:
        for kind in WKind:
            outcomes.append(RecipeOutcome(f"group-{ kind.value }", None, "norm -1"))

        if fund.x == 1:
            outcomes.append(RecipeOutcome("group-corollary", None, "x = 1"))
        else:
            outcomes.append(
                _run(
                    "group-corollary",
                    lambda: PingPongUnits.pingpong.certify_pair(
                        PingPongUnits.recipe.table.CorollaryTableRecipe(d)
                    ).passed,
                )
            )

    for kind in WKind:
        name = f"semigroup-{ kind.value }"
        if fund.norm == -1 and kind is not WKind.W1:
            outcomes.append(RecipeOutcome(name, None, "norm -1"))
            continue

        outcomes.append(
            _run(name, lambda kind=kind: PingPongUnits.semigroup.certify_semigroup(d, kind).passed)
        )

    return SweepItem(int(d), fund.x, fund.y, fund.norm, outcomes)


def run_sweep(d_max: int, workers: int = 1) -> typing.List[SweepItem]:
    """
    Sweeps every square-free d in 2..d_max.

    :param d_max: The largest d.
    :param workers: Worker processes; 1 runs in-process.

    :type d_max: int
    :type workers: int

    :return: The items sorted by d.
    :rtype: typing.List[SweepItem]
    """
    values = square_free_range(d_max)

    if workers <= 1:
        return [sweep_item(d) for d in values]

    items = []
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(sweep_item, d) for d in values]
        for future in concurrent.futures.as_completed(futures):
            items.append(future.result())

    return sorted(items, key=lambda item: item.d)


def summarize(items: typing.Sequence[SweepItem]) -> typing.Dict[str, typing.Dict[str, int]]:
    """
    Per recipe: how many d were expected, passed and failed.
    """
    summary: typing.Dict[str, typing.Dict[str, int]] = {}
    for item in items:
        for outcome in item.outcomes:
            counts = summary.setdefault(outcome.name, {"expected": 0, "passed": 0, "failed": 0})
            if not outcome.expected:
                continue
            counts["expected"] += 1
            counts["passed" if outcome.passed else "failed"] += 1
    return summary
