"""
The pingpong-units command line.

Exit codes: 0 when every requested certificate passes, 1 when one fails,
2 on invalid input or configuration.
"""


import functools
import logging
import pathlib
import time
import typing

import click

import PingPongUnits.config
import PingPongUnits.document
import PingPongUnits.exceptions
import PingPongUnits.oracle
import PingPongUnits.pell
import PingPongUnits.pingpong
import PingPongUnits.quaternion
import PingPongUnits.recipe.table
import PingPongUnits.semigroup
import PingPongUnits.sweep


module_logger = logging.getLogger(__name__)

BasisSlot = PingPongUnits.quaternion.BasisSlot
CertificateDocument = PingPongUnits.document.CertificateDocument
WKind = PingPongUnits.quaternion.WKind

W_KINDS = [kind.value for kind in WKind]


class InputError(click.ClickException):
    """
    An InvalidInput raised by the library, reported with exit code 2.
    """

    exit_code = 2


def handles_input_errors(command):
    """
    Converts library input errors into InputError.
    """

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except PingPongUnits.exceptions.InvalidInput as e:
            raise InputError(f"{ e.__class__.__name__ }: { e }") from e

    return wrapper


def output_options(command):
    command = click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True), help="Write the result to a file")(command)
    command = click.option("--format", "output_format", type=click.Choice(PingPongUnits.config.OUTPUT_FORMATS), default=None, help="text or json, from the configuration by default")(command)
    return command


def _search_config(ctx: click.Context) -> PingPongUnits.config.AbstractSearchConfig:
    return ctx.find_root().obj


def _elapsed_ms(started: float) -> int:
    return int((time.monotonic() - started) * 1000)


def _emit(run: PingPongUnits.config.RunConfig, document: CertificateDocument, lines: typing.List[str]):
    if run.output_format == "json":
        text = document.serialize()
    else:
        text = "\n".join(lines)

    if run.out_path is not None:
        pathlib.Path(run.out_path).write_text(text + "\n")
    else:
        click.echo(text)


def _condition_lines(conditions) -> typing.List[str]:
    lines = []
    for condition in conditions:
        verdict = "pass" if condition.holds else "FAIL"
        line = f"  [{ verdict }] { condition.id }: { condition.description }"
        if not condition.holds and condition.witness is not None:
            line += f" (witness { condition.witness }{ ', boundary only' if condition.boundary_only else '' })"
        lines.append(line)
    return lines


def _oracle_lines(report: typing.Optional[PingPongUnits.oracle.OracleReport]) -> typing.List[str]:
    if report is None:
        return ["oracle: skipped"]

    format_word = PingPongUnits.oracle.format_word
    lines = [f"oracle ({ report.mode }, depth { report.depth }, { report.words_examined } words):"]
    if report.degenerate:
        lines.append(f"  degenerate pair: { ', '.join(report.degenerate) }")
    if report.counterexample is not None:
        lines.append(f"  word equal to 1: { format_word(report.counterexample) }")
    if report.collision is not None:
        lines.append(f"  equal products: { format_word(report.collision[0]) } = { format_word(report.collision[1]) }")
    if report.torsion_witnesses:
        lines.append(f"  words equal to -1: { '; '.join(format_word(word) for word in report.torsion_witnesses) }")
    if report.clean:
        lines.append("  no relation found")
    return lines


@click.group()
@click.option("--verbose", "-v", default=False, is_flag=True, help="Log every condition and oracle level")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), help="Search configuration file, pingpong.yml is looked up by default")
@click.pass_context
def entry_point(ctx, verbose, config_path):
    if verbose:
        logging.basicConfig(level=logging.DEBUG)

    try:
        ctx.obj = PingPongUnits.config.load(None if config_path is None else pathlib.Path(config_path))
    except PingPongUnits.exceptions.InvalidInput as e:
        raise InputError(str(e)) from e


@click.command("pell", help="Fundamental units of Q(sqrt(d))")
@click.option("--d", type=int, help="A square-free d >= 2")
@click.option("--d-max", type=int, help="List every square-free d up to this bound")
@output_options
@click.pass_context
@handles_input_errors
def pingpong_pell(ctx, d, d_max, output_format, out_path):
    search = _search_config(ctx)
    run = PingPongUnits.config.RunConfig(
        "pell", d=d, d_max=d_max, output_format=output_format or search.output_format, out_path=out_path
    ).validate()

    started = time.monotonic()

    if d is not None:
        values = [d]
    elif d_max is not None:
        values = PingPongUnits.sweep.square_free_range(d_max)
    else:
        raise InputError("One of --d or --d-max is required")

    units = [PingPongUnits.pell.pell_fundamental(value) for value in values]

    lines = []
    for fund in units:
        a0, period = PingPongUnits.pell.continued_fraction_sqrt(fund.d)
        lines.append(f"d={ fund.d } x={ fund.x } y={ fund.y } norm={ fund.norm:+d} period={ len(period) } cf=[{ a0 }; { ','.join(map(str, period)) }]")

    document = CertificateDocument(
        "pell",
        {"d": d, "d_max": d_max},
        [PingPongUnits.document.pell_payload(fund) for fund in units],
        None,
        _elapsed_ms(started),
    )
    _emit(run, document, lines)


def _family_units(d: int, family: str, m: typing.Optional[int], sign: int):
    fund = PingPongUnits.pell.pell_fundamental(d) if family != "gauss" else None

    if family == "pell2":
        return [
            ("u", PingPongUnits.quaternion.pell2_unit(fund, BasisSlot.I, BasisSlot.ONE)),
            ("w1", PingPongUnits.quaternion.pell2_unit(fund, BasisSlot.ONE, BasisSlot.K)),
        ]

    if family == "pell3":
        solution = PingPongUnits.pell.pell_fundamental_2d(d)
        if solution is None:
            raise PingPongUnits.exceptions.PreconditionViolated(
                f"No (2x - 1)**2 - 2d*y**2 = 1 solution found for d={ d }"
            )
        return [("pell3", PingPongUnits.quaternion.pell3_unit(solution, BasisSlot.ONE, BasisSlot.I, BasisSlot.J))]

    if family == "pell4":
        return [
            (
                "pell4",
                PingPongUnits.quaternion.pell4_unit(
                    fund, BasisSlot.ONE, BasisSlot.I, BasisSlot.J, BasisSlot.K, sign
                ),
            )
        ]

    if family == "pell4sq":
        return [("pell4sq", PingPongUnits.quaternion.pell4_unit_from_square(fund))]

    if family == "gauss":
        if m is None:
            raise PingPongUnits.exceptions.PreconditionViolated("The gauss family needs --m")
        unit = PingPongUnits.quaternion.gauss_unit(d, m, sign)
        if unit is None:
            raise PingPongUnits.exceptions.PreconditionViolated(
                f"No Gauss unit for d={ d } m={ m } sign={ sign:+d}"
            )
        return [("gauss", unit)]

    units = PingPongUnits.quaternion.prop_pp1_units(fund)
    return list(zip(["u"] + W_KINDS, units))


@click.command("units", help="Exact units of one family")
@click.option("--d", type=int, required=True, help="A square-free d >= 2")
@click.option("--family", type=click.Choice(PingPongUnits.config.FAMILIES), default="pp1", help="Unit family, pp1 by default")
@click.option("--m", type=int, help="The sqrt(-d) coefficient of a Gauss unit")
@click.option("--sign", type=int, default=1, help="Norm sign for gauss, x sign for pell4")
@output_options
@click.pass_context
@handles_input_errors
def pingpong_units(ctx, d, family, m, sign, output_format, out_path):
    search = _search_config(ctx)
    run = PingPongUnits.config.RunConfig(
        "units", d=d, family=family, m=m, sign=sign, output_format=output_format or search.output_format, out_path=out_path
    ).validate()

    started = time.monotonic()
    units = _family_units(d, family, m, sign)

    lines = []
    for label, unit in units:
        support = "".join(slot.value for slot in BasisSlot if slot in unit.support())
        lines.append(
            f"{ label }: { unit }  norm={ unit.norm() } support={ support } in_order={ unit.in_order() }"
        )

    document = CertificateDocument(
        "units",
        {"d": d, "family": family, "m": m, "sign": sign},
        [PingPongUnits.document.unit_payload(label, unit) for label, unit in units],
        None,
        _elapsed_ms(started),
    )
    _emit(run, document, lines)


def _group_recipe(d, w_kind, theorem1, d2special, corollary, table_path):
    if theorem1:
        recipe = PingPongUnits.recipe.table.TheoremOneTableRecipe()
        definition = {"type": "theorem1"}
    elif d2special:
        recipe = PingPongUnits.recipe.table.D2SpecialTableRecipe()
        definition = {"type": "d2special"}
    else:
        if d is None:
            raise InputError("--d is required unless --theorem1 or --d2special is given")
        if corollary:
            recipe = PingPongUnits.recipe.table.CorollaryTableRecipe(d)
            definition = {"type": "corollary", "d": d}
        else:
            recipe = PingPongUnits.recipe.table.table_recipe_for(d, WKind(w_kind))
            definition = {"type": recipe.name, "d": d, "require_x_guard": False}

    if table_path is not None:
        definition["table"] = PingPongUnits.config.parse_table_file(pathlib.Path(table_path), recipe.d)
        recipe = PingPongUnits.recipe.table.CustomTableRecipe(definition)

    return recipe


@click.command("group", help="Ping-Pong certificate for the pair (u, w)")
@click.option("--d", type=int, help="A square-free d >= 2")
@click.option("--w-kind", type=click.Choice(W_KINDS), default="w1", help="The second generator, w1 by default")
@click.option("--theorem1", default=False, is_flag=True, help="The d = 1 maps z/(2z+1) and z+2")
@click.option("--d2special", default=False, is_flag=True, help="The d = 2 pair (u^2, w)")
@click.option("--corollary", default=False, is_flag=True, help="The norm -1 table, x != 1 enforced")
@click.option("--table", "table_path", type=click.Path(exists=True, dir_okay=False), help="A YAML ping-pong table to check instead")
@click.option("--n", "power", type=int, default=1, help="Also decide the pair of n-th powers")
@click.option("--L", "depth", type=int, help="Oracle depth")
@click.option("--no-oracle", default=False, is_flag=True, help="Skip the word oracle cross-check")
@output_options
@click.pass_context
@handles_input_errors
def pingpong_certify_group(ctx, d, w_kind, theorem1, d2special, corollary, table_path, power, depth, no_oracle, output_format, out_path):
    search = _search_config(ctx)
    run = PingPongUnits.config.RunConfig(
        "certify-group",
        d=d,
        w_kind=w_kind,
        power=power,
        depth=depth or search.group_depth,
        output_format=output_format or search.output_format,
        out_path=out_path,
        oracle_enabled=search.oracle_enabled and not no_oracle,
        table_path=table_path,
    ).validate()

    started = time.monotonic()

    recipe = _group_recipe(d, w_kind, theorem1, d2special, corollary, table_path)
    certificate = PingPongUnits.pingpong.certify_pair(recipe)

    report = None
    units = [generator.unit for generator in certificate.generators]
    if run.oracle_enabled and certificate.passed and all(unit is not None for unit in units):
        report = PingPongUnits.oracle.free_group_word_check(units[0], units[1], run.depth)

    verdict = None
    if power > 1:
        verdict = PingPongUnits.pingpong.power_certificate(certificate, power)

    lines = [f"certificate { certificate.recipe } d={ certificate.d }: { 'PASS' if certificate.passed else 'FAIL' }"]
    for generator in certificate.generators:
        lines.append(f"  { generator.label }: { generator.mobius }" + ("" if generator.unit is None else f"  from { generator.unit }"))
    for slot, sign in certificate.table.keys():
        lines.append(f"  { PingPongUnits.pingpong.set_label(slot, sign) } = { certificate.table.get(slot, sign) }")
    lines += _condition_lines(certificate.conditions)
    lines += _oracle_lines(report)
    if verdict is not None:
        lines.append(f"powers n={ verdict.n }: { verdict.status } ({ verdict.reason })")

    if not certificate.passed and certificate.d == 2 and not d2special:
        lines.append("hint: the pair (u, w) at d = 2 fails every symmetric table; try --d2special for (u^2, w)")

    document = CertificateDocument.from_certificate(
        "certify group",
        {
            "d": int(certificate.d),
            "recipe": certificate.recipe,
            "w_kind": w_kind,
            "n": power,
            "table_file": table_path,
        },
        certificate,
        report,
        _elapsed_ms(started),
    )
    if verdict is not None:
        document.certificate["power"] = PingPongUnits.document.power_payload(verdict)

    _emit(run, document, lines)

    if not certificate.passed or (verdict is not None and not verdict.free) or (report is not None and report.relation_found):
        ctx.exit(1)


@click.command("semigroup", help="Free-semigroup certificate for the pair (u, w)")
@click.option("--d", type=int, required=True, help="A square-free d >= 2")
@click.option("--w-kind", type=click.Choice(W_KINDS), default="w1", help="The second generator, w1 by default")
@click.option("--L", "depth", type=int, help="Oracle depth")
@click.option("--no-oracle", default=False, is_flag=True, help="Skip the word oracle cross-check")
@output_options
@click.pass_context
@handles_input_errors
def pingpong_certify_semigroup(ctx, d, w_kind, depth, no_oracle, output_format, out_path):
    search = _search_config(ctx)
    run = PingPongUnits.config.RunConfig(
        "certify-semigroup",
        d=d,
        w_kind=w_kind,
        depth=depth or search.semigroup_depth,
        output_format=output_format or search.output_format,
        out_path=out_path,
        oracle_enabled=search.oracle_enabled and not no_oracle,
    ).validate()

    started = time.monotonic()

    certificate = PingPongUnits.semigroup.certify_semigroup(d, WKind(w_kind))

    report = None
    if run.oracle_enabled and certificate.passed:
        first, second = (generator.unit for generator in certificate.generators)
        report = PingPongUnits.oracle.free_semigroup_word_check(first, second, run.depth)

    lines = [
        f"semigroup certificate { certificate.recipe } d={ certificate.d }: { 'PASS' if certificate.passed else 'FAIL' }",
        f"  U = { certificate.invariant_set }, x0 = { certificate.base_point }",
    ]
    for label, generator in zip(("phi1", "phi2"), certificate.generators):
        lines.append(f"  { label } = { generator.label }: { generator.mobius }")
    lines += _condition_lines(certificate.conditions)
    lines += _oracle_lines(report)

    document = CertificateDocument.from_semigroup_certificate(
        "certify semigroup",
        {
            "d": d,
            "w_kind": w_kind,
            "fundamental_unit": PingPongUnits.document.pell_payload(PingPongUnits.pell.pell_fundamental(d)),
        },
        certificate,
        report,
        _elapsed_ms(started),
    )
    _emit(run, document, lines)

    if not certificate.passed or (report is not None and report.relation_found):
        ctx.exit(1)


@click.command("oracle", help="Brute-force word check for (u, w) or their n-th powers")
@click.option("--d", type=int, help="A square-free d >= 2")
@click.option("--w-kind", type=click.Choice(W_KINDS), default="w1", help="The second generator, w1 by default")
@click.option("--d2special", default=False, is_flag=True, help="Use the d = 2 pair (u^2, w)")
@click.option("--semigroup", default=False, is_flag=True, help="Positive words only")
@click.option("--L", "depth", type=int, help="Largest word length")
@click.option("--n", "power", type=int, default=1, help="Check (u^n, w^n)")
@click.option("--workers", type=int, help="Worker processes for the group check, from the configuration by default")
@output_options
@click.pass_context
@handles_input_errors
def pingpong_oracle(ctx, d, w_kind, d2special, semigroup, depth, power, workers, output_format, out_path):
    search = _search_config(ctx)
    run = PingPongUnits.config.RunConfig(
        "oracle",
        d=d,
        w_kind=w_kind,
        power=power,
        depth=depth or (search.semigroup_depth if semigroup else search.group_depth),
        output_format=output_format or search.output_format,
        out_path=out_path,
        workers=workers or search.workers,
    ).validate()

    started = time.monotonic()

    if d2special:
        generators = PingPongUnits.recipe.table.D2SpecialTableRecipe().generators()
        u, w = generators[1].unit, generators[0].unit
    elif d is None:
        raise InputError("--d is required unless --d2special is given")
    else:
        fund = PingPongUnits.pell.pell_fundamental(d)
        u = PingPongUnits.quaternion.u_unit(fund)
        w = PingPongUnits.quaternion.w_unit(fund, WKind(w_kind))

    report = PingPongUnits.oracle.power_word_check(u, w, power, run.depth, semigroup, run.workers)

    lines = [f"g1 = ({ u })^{ power }", f"g2 = ({ w })^{ power }"] + _oracle_lines(report)

    document = CertificateDocument(
        "oracle",
        {"d": 2 if d2special else d, "w_kind": w_kind, "n": power, "semigroup": semigroup, "d2special": d2special},
        None,
        PingPongUnits.document.oracle_payload(report),
        _elapsed_ms(started),
    )
    _emit(run, document, lines)

    if report.relation_found:
        ctx.exit(1)


@click.command("sweep", help="Every applicable recipe for each square-free d")
@click.option("--d-max", type=int, help="Largest d, from the configuration by default")
@click.option("--workers", type=int, help="Worker processes, from the configuration by default")
@output_options
@click.pass_context
@handles_input_errors
def pingpong_sweep(ctx, d_max, workers, output_format, out_path):
    search = _search_config(ctx)
    run = PingPongUnits.config.RunConfig(
        "sweep",
        d_max=d_max or search.d_max,
        output_format=output_format or search.output_format,
        out_path=out_path,
        workers=workers or search.workers,
    ).validate()

    started = time.monotonic()
    items = PingPongUnits.sweep.run_sweep(run.d_max, run.workers)
    summary = PingPongUnits.sweep.summarize(items)

    lines = []
    for item in items:
        failed = [outcome.name for outcome in item.outcomes if outcome.expected and not outcome.passed]
        lines.append(
            f"d={ item.d } norm={ item.norm:+d} x={ item.x }: { 'ok' if item.ok else 'FAILED ' + ', '.join(failed) }"
        )
    lines.append("summary:")
    for name, counts in sorted(summary.items()):
        lines.append(f"  { name }: { counts['passed'] }/{ counts['expected'] } passed")

    document = CertificateDocument(
        "sweep",
        {"d_max": run.d_max, "workers": run.workers, "summary": summary},
        [item.to_dict() for item in items],
        None,
        _elapsed_ms(started),
    )
    _emit(run, document, lines)

    if not all(item.ok for item in items):
        ctx.exit(1)


@click.command("infeasibility", help="Sampled check that no symmetric table certifies (u, w) at d = 2")
@click.option("--resolution", type=int, help="Grid points per axis, from the configuration by default")
@output_options
@click.pass_context
@handles_input_errors
def pingpong_infeasibility(ctx, resolution, output_format, out_path):
    search = _search_config(ctx)
    run = PingPongUnits.config.RunConfig(
        "infeasibility",
        resolution=resolution or search.resolution,
        output_format=output_format or search.output_format,
        out_path=out_path,
    ).validate()

    started = time.monotonic()
    report = PingPongUnits.pingpong.infeasibility_sweep(run.resolution)

    lines = [
        report.LABEL,
        f"  reduced system: { len(report.reduced_satisfying) } of { report.reduced_samples } samples satisfy it",
        f"  full tables: { len(report.table_passes) } of { report.table_samples } pass",
        f"  infeasible on the grid: { report.infeasible }",
    ]

    document = CertificateDocument(
        "infeasibility",
        {"resolution": run.resolution},
        PingPongUnits.document.infeasibility_payload(report),
        None,
        _elapsed_ms(started),
    )
    _emit(run, document, lines)

    if not report.infeasible:
        ctx.exit(1)


@click.command("lemmas", help="The endpoint inequalities behind a W-kind table")
@click.option("--d", type=int, required=True, help="A square-free d >= 2")
@click.option("--w-kind", type=click.Choice(W_KINDS), default="w1", help="The second generator, w1 by default")
@output_options
@click.pass_context
@handles_input_errors
def pingpong_lemmas(ctx, d, w_kind, output_format, out_path):
    search = _search_config(ctx)
    run = PingPongUnits.config.RunConfig(
        "lemmas", d=d, w_kind=w_kind, output_format=output_format or search.output_format, out_path=out_path
    ).validate()

    started = time.monotonic()
    report = PingPongUnits.pingpong.verify_interval_lemmas(d, WKind(w_kind))

    lines = [f"interval lemmas { report.recipe } d={ report.d }: { 'PASS' if report.all_hold else 'FAIL' }"]
    for check in report.checks:
        lines.append(f"  [{ 'pass' if check.holds else 'FAIL' }] { check }")

    document = CertificateDocument(
        "lemmas",
        {"d": d, "w_kind": w_kind},
        PingPongUnits.document.lemma_payload(report),
        None,
        _elapsed_ms(started),
    )
    _emit(run, document, lines)

    if not report.all_hold:
        ctx.exit(1)


@click.group("certify", help="Group and semigroup certificates")
def pingpong_certify():
    pass


pingpong_certify.add_command(pingpong_certify_group)
pingpong_certify.add_command(pingpong_certify_semigroup)
entry_point.add_command(pingpong_pell)
entry_point.add_command(pingpong_units)
entry_point.add_command(pingpong_certify)
entry_point.add_command(pingpong_oracle)
entry_point.add_command(pingpong_sweep)
entry_point.add_command(pingpong_infeasibility)
entry_point.add_command(pingpong_lemmas)
