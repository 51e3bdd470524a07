"""
Brute-force word enumeration over exact quaternion arithmetic.

The oracle knows nothing about tables or invariant sets: it multiplies out
every reduced word (group case) or every positive word (semigroup case) up
to a depth and looks for a relation.
"""


import concurrent.futures
import logging
import typing

import PingPongUnits.exceptions
import PingPongUnits.mobius
import PingPongUnits.quaternion


module_logger = logging.getLogger(__name__)

QuatElem = PingPongUnits.quaternion.QuatElem
MobiusMap = PingPongUnits.mobius.MobiusMap

# A letter is (generator index, exponent sign); a word is a tuple of letters
Letter = typing.Tuple[int, int]
Word = typing.Tuple[Letter, ...]

GROUP_LETTERS: typing.Tuple[Letter, ...] = ((1, 1), (1, -1), (2, 1), (2, -1))
SEMIGROUP_LETTERS: typing.Tuple[Letter, ...] = ((1, 1), (2, 1))

DEFAULT_GROUP_DEPTH = 8
DEFAULT_SEMIGROUP_DEPTH = 12

# Words equal to -1 kept in a report
TORSION_WITNESS_LIMIT = 5


def format_word(word: Word) -> str:
    """
    "g1 g2^-1 g1" style text; the empty word is "1".
    """
    if not word:
        return "1"
    return " ".join(f"g{ index }" if sign == 1 else f"g{ index }^-1" for index, sign in word)


def parse_word(text: str) -> Word:
    letters = []
    for token in text.split():
        name, _, exponent = token.partition("^")
        if name not in ("g1", "g2") or exponent not in ("", "1", "-1"):
            raise PingPongUnits.exceptions.MalformedWord(text, token)
        letters.append((int(name[1]), -1 if exponent == "-1" else 1))
    return tuple(letters)


def is_reduced(word: Word) -> bool:
    return all(
        not (left[0] == right[0] and left[1] == -right[1])
        for left, right in zip(word, word[1:])
    )


def evaluate_word(word: Word, generators: typing.Sequence[QuatElem]) -> QuatElem:
    """
    The product of the word's letters, left to right, in the quaternion algebra.
    """
    result = QuatElem.one(generators[0].d)
    inverses = {}
    for index, sign in word:
        if sign == 1:
            letter = generators[index - 1]
        else:
            if index not in inverses:
                inverses[index] = PingPongUnits.quaternion.quat_inverse(generators[index - 1])
            letter = inverses[index]
        result = PingPongUnits.quaternion.quat_mul(result, letter)
    return result


def evaluate_word_mobius(word: Word, maps: typing.Sequence[MobiusMap]) -> MobiusMap:
    """
    The composite of the word's letters as Mobius maps, in the same order
    as evaluate_word.
    """
    result = MobiusMap.identity(maps[0].d)
    for index, sign in word:
        letter = maps[index - 1] if sign == 1 else maps[index - 1].inverse()
        result = result.compose(letter)
    return result


class OracleReport:
    """
    The outcome of one bounded enumeration.
    """

    GROUP = "group"
    SEMIGROUP = "semigroup"

    mode: str
    depth: int
    counts: typing.Dict[int, int]
    counterexample: typing.Optional[Word]
    collision: typing.Optional[typing.Tuple[Word, Word]]
    torsion_witnesses: typing.List[Word]
    degenerate: typing.List[str]

    def __init__(self, mode: str, depth: int):
        assert mode in (self.GROUP, self.SEMIGROUP)

        self.mode = mode
        self.depth = depth
        self.counts = {}
        self.counterexample = None
        self.collision = None
        self.torsion_witnesses = []
        self.degenerate = []

    @property
    def words_examined(self) -> int:
        return sum(self.counts.values())

    @property
    def relation_found(self) -> bool:
        return self.counterexample is not None or self.collision is not None

    @property
    def clean(self) -> bool:
        """
        No relation and no degenerate input up to the depth.
        """
        return not self.relation_found and not self.degenerate

    def __repr__(self):
        return "<{}.{} object at {} mode={} depth={} examined={} counterexample={} collision={} degenerate={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self.mode,
            self.depth,
            self.words_examined,
            None if self.counterexample is None else format_word(self.counterexample),
            None if self.collision is None else tuple(format_word(word) for word in self.collision),
            self.degenerate,
        )


def _check_depth(depth: int):
    assert isinstance(depth, int)
    if depth < 1:
        raise PingPongUnits.exceptions.PreconditionViolated(f"The word depth must be >= 1, got { depth }")


def degenerate_flags(u: QuatElem, w: QuatElem) -> typing.List[str]:
    """
    Relations visible without enumeration: u = w, u = w^-1, or a generator
    equal to +1 or -1.
    """
    one = QuatElem.one(u.d)
    flags = []
    if u == w:
        flags.append("g1 = g2")
    if u == PingPongUnits.quaternion.quat_inverse(w):
        flags.append("g1 = g2^-1")
    for label, unit in (("g1", u), ("g2", w)):
        if unit == one or unit == -one:
            flags.append(f"{ label } is central")
    return flags


def free_group_word_check(
    u: QuatElem, w: QuatElem, depth: int = DEFAULT_GROUP_DEPTH, workers: int = 1
) -> OracleReport:
    """
    Multiplies out every reduced word in u, w and their inverses of length
    1..depth, level by level in canonical order, and stops at the first
    word equal to 1.

    The words are split into four blocks by first letter. With workers > 1
    the blocks run in a process pool; the merged report does not depend on
    the schedule.

    Degenerate pairs are reported without enumerating, since their reduced
    words in independent symbols do not describe the group.

    :param u: A unit.
    :param w: A unit over the same d.
    :param depth: The largest word length.
    :param workers: Worker processes; 1 runs in-process.

    :type u: QuatElem
    :type w: QuatElem
    :type depth: int
    :type workers: int

    :return: The report. Words equal to -1 are listed as torsion witnesses
        and do not count as counterexamples.
    :rtype: OracleReport
    """
    _check_depth(depth)
    for unit in (u, w):
        if not unit.is_unit():
            raise PingPongUnits.exceptions.NonUnit(unit.norm())

    report = OracleReport(OracleReport.GROUP, depth)
    report.degenerate = degenerate_flags(u, w)
    if report.degenerate:
        module_logger.warning("Degenerate pair: %r", report.degenerate)
        return report

    generators = {
        (1, 1): u,
        (1, -1): PingPongUnits.quaternion.quat_inverse(u),
        (2, 1): w,
        (2, -1): PingPongUnits.quaternion.quat_inverse(w),
    }

    module_logger.info("Group oracle to depth %r for u=%s w=%s workers=%r", depth, u, w, workers)

    blocks: typing.List[PrefixBlock] = []
    if workers <= 1:
        # Later blocks only need to reach the shortest counterexample so far
        limit = depth
        for first in GROUP_LETTERS:
            block = enumerate_group_block(first, generators, limit)
            blocks.append(block)
            if block.counterexample is not None:
                limit = min(limit, len(block.counterexample))
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(enumerate_group_block, first, generators, depth) for first in GROUP_LETTERS
            ]
            blocks = [future.result() for future in futures]

    _merge_group_blocks(report, blocks)
    if report.counterexample is not None:
        module_logger.info("Word %s equals 1", format_word(report.counterexample))

    return report


def _letter_key(word: Word) -> typing.Tuple[int, typing.Tuple[int, ...]]:
    return len(word), tuple(GROUP_LETTERS.index(letter) for letter in word)


class PrefixBlock:
    """
    The reduced words sharing one first letter, enumerated level by level.
    The block stops at its own first word equal to 1.
    """

    first: Letter
    counts: typing.Dict[int, int]
    counterexample: typing.Optional[Word]
    torsion_witnesses: typing.List[Word]

    def __init__(self, first: Letter):
        self.first = first
        self.counts = {}
        self.counterexample = None
        self.torsion_witnesses = []


def enumerate_group_block(
    first: Letter, generators: typing.Dict[Letter, QuatElem], depth: int
) -> PrefixBlock:
    """
    Multiplies out the reduced words of length 1..depth starting with first.

    :param first: The first letter of every word in the block.
    :param generators: The value of each of the four letters.
    :param depth: The largest word length.

    :type first: Letter
    :type generators: typing.Dict[Letter, QuatElem]
    :type depth: int

    :return: Per length counts, the block's first word equal to 1 and its
        first words equal to -1. At the length of the counterexample the
        count is its position in the level.
    :rtype: PrefixBlock
    """
    block = PrefixBlock(first)
    one = QuatElem.one(generators[first].d)
    minus_one = -one

    frontier = [((), one)]
    for length in range(1, depth + 1):
        next_frontier = []
        for word, value in frontier:
            for letter in GROUP_LETTERS if word else (first,):
                if word and word[-1] == (letter[0], -letter[1]):
                    continue

                extended = word + (letter,)
                product = PingPongUnits.quaternion.quat_mul(value, generators[letter])

                if product == one:
                    block.counts[length] = len(next_frontier) + 1
                    block.counterexample = extended
                    return block

                if product == minus_one and len(block.torsion_witnesses) < TORSION_WITNESS_LIMIT:
                    block.torsion_witnesses.append(extended)

                next_frontier.append((extended, product))

        block.counts[length] = len(next_frontier)
        frontier = next_frontier

    return block


def _merge_group_blocks(report: OracleReport, blocks: typing.Sequence[PrefixBlock]):
    """
    Folds the blocks, in GROUP_LETTERS order, into the report a single
    level-by-level run would give: the first counterexample in (length,
    letter) order, the counts up to it and the torsion witnesses before it.
    """
    found = [(len(block.counterexample), index) for index, block in enumerate(blocks) if block.counterexample]
    stop_length, winner = min(found) if found else (report.depth, len(blocks))

    for length in range(1, stop_length + 1):
        if length < stop_length or not found:
            report.counts[length] = sum(block.counts[length] for block in blocks)
        else:
            report.counts[length] = sum(block.counts[length] for block in blocks[: winner + 1])
        module_logger.debug("Length %r: %r reduced words", length, report.counts[length])

    if found:
        report.counterexample = blocks[winner].counterexample

    witnesses = [
        word
        for index, block in enumerate(blocks)
        for word in block.torsion_witnesses
        if len(word) < stop_length or (len(word) == stop_length and index <= winner)
    ]
    report.torsion_witnesses = sorted(witnesses, key=_letter_key)[:TORSION_WITNESS_LIMIT]


def free_semigroup_word_check(u: QuatElem, w: QuatElem, depth: int = DEFAULT_SEMIGROUP_DEPTH) -> OracleReport:
    """
    Multiplies out every positive word in u, w of length 1..depth and stops
    at the first two distinct words with the same product.

    :param u: A quaternion.
    :param w: A quaternion over the same d.
    :param depth: The largest word length.

    :type u: QuatElem
    :type w: QuatElem
    :type depth: int

    :return: The report with the colliding pair, earlier word first.
    :rtype: OracleReport
    """
    _check_depth(depth)

    report = OracleReport(OracleReport.SEMIGROUP, depth)
    if u == w:
        report.degenerate.append("g1 = g2")

    generators = {(1, 1): u, (2, 1): w}

    module_logger.info("Semigroup oracle to depth %r for u=%s w=%s", depth, u, w)

    seen: typing.Dict[tuple, Word] = {}
    frontier = [((), QuatElem.one(u.d))]
    for length in range(1, depth + 1):
        next_frontier = []
        for word, value in frontier:
            for letter in SEMIGROUP_LETTERS:
                extended = word + (letter,)
                product = PingPongUnits.quaternion.quat_mul(value, generators[letter])
                key = product.canonical_key()

                if key in seen:
                    report.counts[length] = len(next_frontier) + 1
                    report.collision = (seen[key], extended)
                    module_logger.info(
                        "Words %s and %s have the same product",
                        format_word(seen[key]),
                        format_word(extended),
                    )
                    return report

                seen[key] = extended
                next_frontier.append((extended, product))

        report.counts[length] = len(next_frontier)
        module_logger.debug("Length %r: %r positive words", length, len(next_frontier))
        frontier = next_frontier

    return report


def power_word_check(
    u: QuatElem,
    w: QuatElem,
    n: int,
    depth: int = DEFAULT_GROUP_DEPTH,
    semigroup: bool = False,
    workers: int = 1,
) -> OracleReport:
    """
    Runs the group (or semigroup) check on (u**n, w**n). Only the group
    check uses workers.
    """
    assert isinstance(n, int)
    if n < 1:
        raise PingPongUnits.exceptions.PreconditionViolated(f"Powers need n >= 1, got { n }")

    u_power = PingPongUnits.quaternion.quat_pow(u, n)
    w_power = PingPongUnits.quaternion.quat_pow(w, n)

    if semigroup:
        return free_semigroup_word_check(u_power, w_power, depth)
    return free_group_word_check(u_power, w_power, depth, workers)
