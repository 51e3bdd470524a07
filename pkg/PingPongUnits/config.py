"""
Defines abstract search configuration models, the bundled presets, and the
per-invocation run configuration.
"""


import pathlib
import abc
import typing

import schema
import yaml

import PingPongUnits.exactnum
import PingPongUnits.exceptions
import PingPongUnits.mobius
import PingPongUnits.quaternion


COMMANDS = ("pell", "units", "certify-group", "certify-semigroup", "oracle", "sweep", "infeasibility", "lemmas")
FAMILIES = ("pell2", "pell3", "pell4", "pell4sq", "gauss", "pp1")
OUTPUT_FORMATS = ("text", "json")


class AbstractSearchConfig(abc.ABC):
    """
    The AbstractSearchConfig class holds the default search parameters used
    when the command line leaves them unset.
    """

    group_depth: int
    semigroup_depth: int
    resolution: int
    d_max: int
    output_format: str
    oracle_enabled: bool
    workers: int

    def __init__(
        self,
        group_depth: typing.Optional[int] = None,
        semigroup_depth: typing.Optional[int] = None,
        resolution: typing.Optional[int] = None,
        d_max: typing.Optional[int] = None,
        output_format: typing.Optional[str] = None,
        oracle_enabled: typing.Optional[bool] = None,
        workers: typing.Optional[int] = None,
    ):
        """
        A basic constructor for the object. Unset values keep the class
        defaults.

        :param group_depth: The largest word length of the group oracle.
        :param semigroup_depth: The largest word length of the semigroup oracle.
        :param resolution: Grid points per axis of the infeasibility sweep.
        :param d_max: The largest d visited by a sweep.
        :param output_format: "text" or "json".
        :param oracle_enabled: Whether certifications cross-check with the oracle.
        :param workers: Worker processes used by a sweep and by the group oracle.

        :type group_depth: int
        :type semigroup_depth: int
        :type resolution: int
        :type d_max: int
        :type output_format: str
        :type oracle_enabled: bool
        :type workers: int
        """

        if group_depth is not None:
            self.group_depth = group_depth

        if semigroup_depth is not None:
            self.semigroup_depth = semigroup_depth

        if resolution is not None:
            self.resolution = resolution

        if d_max is not None:
            self.d_max = d_max

        if output_format is not None:
            self.output_format = output_format

        if oracle_enabled is not None:
            self.oracle_enabled = oracle_enabled

        if workers is not None:
            self.workers = workers

    def __repr__(self):
        return (
            "<{}.{} object at {} group_depth={} semigroup_depth={} resolution={} "
            "d_max={} output_format={} oracle_enabled={} workers={}>"
        ).format(
            __class__.__module__,
            self.__class__.__name__,
            hex(id(self)),
            self.group_depth,
            self.semigroup_depth,
            self.resolution,
            self.d_max,
            self.output_format,
            self.oracle_enabled,
            self.workers,
        )


class DefaultSearchConfig(AbstractSearchConfig):
    """
    Depth 8 for reduced words (8748 words at the last level) and 12 for
    positive words (4096 at the last level), a 100 x 100 infeasibility grid
    and sweeps up to d = 100.
    """

    group_depth = 8
    semigroup_depth = 12
    resolution = 100
    d_max = 100
    output_format = "text"
    oracle_enabled = True
    workers = 1


class QuickSearchConfig(DefaultSearchConfig):
    """
    Smoke-run sizes.
    """

    group_depth = 5
    semigroup_depth = 8
    resolution = 20
    d_max = 30


class ExhaustiveSearchConfig(DefaultSearchConfig):
    """
    Deeper words and a finer grid. Exact coefficients grow with the depth,
    so expect minutes rather than seconds.
    """

    group_depth = 10
    semigroup_depth = 14
    resolution = 200
    d_max = 200


class CustomSearchConfig(DefaultSearchConfig):
    """
    A wrapper class around the default search configuration wherein custom
    configuration files will be instantiated.
    """


PRESETS = {
    "default": DefaultSearchConfig,
    "quick": QuickSearchConfig,
    "exhaustive": ExhaustiveSearchConfig,
}


def load(path: typing.Optional[pathlib.Path] = None) -> AbstractSearchConfig:
    """
    Determines the default search parameters. An explicit path wins; then a
    located configuration file; then the default configuration.

    :param path: An explicit configuration file path.

    :type path: pathlib.Path

    :return: A search configuration object.
    :rtype: AbstractSearchConfig
    """
    if path is None:
        path = resolve_path()

    if path is not None:
        return parse(path)

    return DefaultSearchConfig()


def resolve_path(filename: str = "pingpong.yml") -> typing.Optional[pathlib.Path]:
    """
    Attempts to locate a search configuration in the file-system: the current
    working directory first, then each parent up to the root, then $HOME.

    Example: Runtime CWD = /home/user/research/

    1) /home/user/research/pingpong.yml
    2) /home/user/pingpong.yml
    3) /home/pingpong.yml
    4) /pingpong.yml
    5) $HOME/pingpong.yml

    :param filename: The expected configuration filename

    :type filename: str

    :return: A configuration file path, or None if none located.
    :rtype: pathlib.Path
    """

    dir_path = pathlib.Path.cwd()

    while True:
        file_path = dir_path / filename

        if file_path.is_file():
            return file_path

        if dir_path == dir_path.parent:
            break

        dir_path = dir_path.parent

    file_path = pathlib.Path.home() / filename

    if file_path.is_file():
        return file_path

    return None


_POSITIVE = schema.And(int, lambda value: value >= 1)

CONFIG_SCHEMA = schema.Schema(
    {
        "search_config": {
            schema.Optional("preset"): schema.Or(*PRESETS),
            schema.Optional("group_depth"): _POSITIVE,
            schema.Optional("semigroup_depth"): _POSITIVE,
            schema.Optional("resolution"): _POSITIVE,
            schema.Optional("d_max"): schema.And(int, lambda value: value >= 2),
            schema.Optional("output_format"): schema.Or(*OUTPUT_FORMATS),
            schema.Optional("oracle_enabled"): bool,
            schema.Optional("workers"): _POSITIVE,
        }
    }
)


def parse(path: pathlib.Path) -> CustomSearchConfig:
    """
    Parses the provided configuration path and returns an initialized
    CustomSearchConfig object. A preset supplies the values the file leaves
    out.

    :param path: A search configuration file path.

    :type path: pathlib.Path

    :return: An initialized CustomSearchConfig object.
    :rtype: CustomSearchConfig
    """

    with open(path) as handler:
        config_dict = yaml.safe_load(handler)

    try:
        CONFIG_SCHEMA.validate(config_dict)
    except schema.SchemaError as e:
        raise PingPongUnits.exceptions.InvalidConfigFile(str(path), e)

    search_config = config_dict.get("search_config")
    preset = PRESETS[search_config.get("preset", "default")]

    return CustomSearchConfig(
        group_depth=search_config.get("group_depth", preset.group_depth),
        semigroup_depth=search_config.get("semigroup_depth", preset.semigroup_depth),
        resolution=search_config.get("resolution", preset.resolution),
        d_max=search_config.get("d_max", preset.d_max),
        output_format=search_config.get("output_format", preset.output_format),
        oracle_enabled=search_config.get("oracle_enabled", preset.oracle_enabled),
        workers=search_config.get("workers", preset.workers),
    )


TABLE_SCHEMA = schema.Schema(
    {
        "table": [
            {
                "slot": schema.And(int, lambda value: value >= 1),
                "sign": schema.Or(1, -1),
                "arcs": [str],
            }
        ]
    }
)


def parse_table_file(path: pathlib.Path, d) -> typing.List[typing.Tuple[int, int, PingPongUnits.mobius.ArcSet]]:
    """
    Reads a user-supplied ping-pong table.

    Example:

        table:
          - slot: 1
            sign: 1
            arcs: ["[-3/2*sqrt(3), -1/4*sqrt(3)]"]
          - slot: 2
            sign: 1
            arcs: ["]3/2*sqrt(3), inf]", "[-inf, -3/2*sqrt(3)["]

    :param path: A table file path.
    :param d: The radicand every endpoint must live over.

    :type path: pathlib.Path
    :type d: int

    :return: (slot, sign, arcs) entries in file order.
    :rtype: list
    """
    d = PingPongUnits.exactnum.as_d(d)

    try:
        with open(path) as handler:
            table_dict = yaml.safe_load(handler)
    except (OSError, yaml.YAMLError) as e:
        raise PingPongUnits.exceptions.InvalidTableFile(str(path), e)

    try:
        TABLE_SCHEMA.validate(table_dict)
    except schema.SchemaError as e:
        raise PingPongUnits.exceptions.InvalidTableFile(str(path), e)

    entries = []
    for entry in table_dict["table"]:
        arcs = PingPongUnits.mobius.ArcSet((), d)
        for text in entry["arcs"]:
            try:
                arcs = arcs.union(PingPongUnits.mobius.ArcSet.parse(text, d))
            except PingPongUnits.exceptions.InvalidInput as e:
                raise PingPongUnits.exceptions.InvalidTableFile(str(path), e)
        entries.append((entry["slot"], entry["sign"], arcs))

    return entries


class RunConfig:
    """
    Everything one command invocation needs, validated before dispatch.
    """

    def __init__(
        self,
        command: str,
        d: typing.Optional[int] = None,
        d_max: typing.Optional[int] = None,
        w_kind: typing.Optional[str] = None,
        family: typing.Optional[str] = None,
        m: typing.Optional[int] = None,
        sign: int = 1,
        depth: typing.Optional[int] = None,
        power: int = 1,
        resolution: typing.Optional[int] = None,
        output_format: str = "text",
        out_path: typing.Optional[pathlib.Path] = None,
        oracle_enabled: bool = True,
        workers: int = 1,
        table_path: typing.Optional[pathlib.Path] = None,
    ):
        self.command = command
        self.d = d
        self.d_max = d_max
        self.w_kind = w_kind
        self.family = family
        self.m = m
        self.sign = sign
        self.depth = depth
        self.power = power
        self.resolution = resolution
        self.output_format = output_format
        self.out_path = out_path
        self.oracle_enabled = oracle_enabled
        self.workers = workers
        self.table_path = table_path

    def validate(self) -> "RunConfig":
        """
        Raises an InvalidInput subclass on the first bad value.

        :return: The same object, for chaining.
        :rtype: RunConfig
        """
        if self.command not in COMMANDS:
            raise PingPongUnits.exceptions.PreconditionViolated(f"Unknown command { self.command }")

        if self.d is not None:
            PingPongUnits.exactnum.SquareFreeD(self.d)

        if self.d_max is not None and self.d_max < 2:
            raise PingPongUnits.exceptions.PreconditionViolated(f"d_max must be >= 2, got { self.d_max }")

        if self.w_kind is not None:
            try:
                PingPongUnits.quaternion.WKind(self.w_kind)
            except ValueError as e:
                raise PingPongUnits.exceptions.PreconditionViolated(f"Unknown w-kind { self.w_kind }") from e

        if self.family is not None and self.family not in FAMILIES:
            raise PingPongUnits.exceptions.PreconditionViolated(f"Unknown unit family { self.family }")

        if self.sign not in (1, -1):
            raise PingPongUnits.exceptions.PreconditionViolated(f"sign must be +1 or -1, got { self.sign }")

        for name in ("depth", "resolution", "power", "workers"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise PingPongUnits.exceptions.PreconditionViolated(f"{ name } must be positive, got { value }")

        if self.output_format not in OUTPUT_FORMATS:
            raise PingPongUnits.exceptions.PreconditionViolated(f"Unknown output format { self.output_format }")

        if self.table_path is not None and not pathlib.Path(self.table_path).is_file():
            raise PingPongUnits.exceptions.InvalidTableFile(str(self.table_path), "no such file")

        return self

    def __repr__(self):
        return "<{}.{} object at {} command={} d={} d_max={} w_kind={} depth={} power={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self.command,
            self.d,
            self.d_max,
            self.w_kind,
            self.depth,
            self.power,
        )
