"""
JSON documents for certificates and reports.

Every number is written as an exact string ("3/2+1/2*sqrt(7)", "inf"), so a
document parses back without loss and never holds a float.
"""


import json
import logging
import typing

import schema

import PingPongUnits.exactnum
import PingPongUnits.exceptions
import PingPongUnits.mobius
import PingPongUnits.models
import PingPongUnits.oracle
import PingPongUnits.pell
import PingPongUnits.quaternion


module_logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

Arc = PingPongUnits.mobius.Arc
ArcSet = PingPongUnits.mobius.ArcSet
ExtPoint = PingPongUnits.mobius.ExtPoint
QuadElem = PingPongUnits.exactnum.QuadElem


def format_number(value: typing.Union[QuadElem, ExtPoint, None]) -> str:
    if value is None:
        return "inf"
    return str(value)


def parse_number(text: str, d=None) -> ExtPoint:
    """
    Parses an exact number or "inf".
    """
    return ExtPoint.parse(text, d)


def format_arc(arc: typing.Union[Arc, ArcSet]) -> str:
    return str(arc)


def parse_arc(text: str, d=None) -> Arc:
    return Arc.parse(text, d)


def parse_arcset(text: str, d=None) -> ArcSet:
    return ArcSet.parse(text, d)


def _generator_dict(generator: PingPongUnits.models.Generator) -> dict:
    return {
        "label": generator.label,
        "exponent": generator.exponent,
        "unit": None
        if generator.unit is None
        else [str(coefficient) for coefficient in generator.unit.coefficients],
        "mobius": [format_number(entry) for entry in generator.mobius.entries],
    }


def _condition_dict(condition: PingPongUnits.models.Condition) -> dict:
    document = {
        "id": condition.id,
        "description": condition.description,
        "lhs_arc": None if condition.lhs is None else format_arc(condition.lhs),
        "rhs_arc": None if condition.rhs is None else format_arc(condition.rhs),
        "verdict": "pass" if condition.holds else "fail",
    }
    if not condition.holds:
        document["witness"] = None if condition.witness is None else str(condition.witness)
        document["boundary_only"] = condition.boundary_only
    return document


def certificate_payload(certificate: PingPongUnits.models.Certificate) -> dict:
    return {
        "kind": "group",
        "recipe": certificate.recipe,
        "d": int(certificate.d),
        "passed": certificate.passed,
        "generators": [_generator_dict(generator) for generator in certificate.generators],
        "table": [
            {"slot": slot, "sign": sign, "arcs": format_arc(certificate.table.get(slot, sign))}
            for slot, sign in certificate.table.keys()
        ],
        "conditions": [_condition_dict(condition) for condition in certificate.conditions],
    }


def semigroup_payload(certificate: PingPongUnits.models.SemigroupCertificate) -> dict:
    return {
        "kind": "semigroup",
        "recipe": certificate.recipe,
        "d": int(certificate.d),
        "passed": certificate.passed,
        "generators": [_generator_dict(generator) for generator in certificate.generators],
        "invariant_set": format_arc(certificate.invariant_set),
        "base_point": str(certificate.base_point),
        "conditions": [_condition_dict(condition) for condition in certificate.conditions],
    }


def oracle_payload(report: PingPongUnits.oracle.OracleReport) -> dict:
    format_word = PingPongUnits.oracle.format_word
    return {
        "mode": report.mode,
        "depth": report.depth,
        "counts": {str(length): count for length, count in sorted(report.counts.items())},
        "counterexample": None if report.counterexample is None else format_word(report.counterexample),
        "collision": None if report.collision is None else [format_word(word) for word in report.collision],
        "torsion_witnesses": [format_word(word) for word in report.torsion_witnesses],
        "degenerate": list(report.degenerate),
    }


def pell_payload(fund: PingPongUnits.pell.PellSolution) -> dict:
    return {"d": int(fund.d), "x": str(fund.x), "y": str(fund.y), "norm": fund.norm}


def unit_payload(label: str, unit: PingPongUnits.quaternion.QuatElem) -> dict:
    return {
        "label": label,
        "value": str(unit),
        "coefficients": [str(coefficient) for coefficient in unit.coefficients],
        "norm": str(unit.norm()),
        "support": [slot.value for slot in PingPongUnits.quaternion.BasisSlot if slot in unit.support()],
        "in_order": unit.in_order(),
    }


def lemma_payload(report: PingPongUnits.models.LemmaReport) -> dict:
    return {
        "recipe": report.recipe,
        "d": int(report.d),
        "all_hold": report.all_hold,
        "checks": [
            {
                "label": check.label,
                "lhs": format_number(check.lhs),
                "rhs": format_number(check.rhs),
                "strict": check.strict,
                "verdict": "pass" if check.holds else "fail",
            }
            for check in report.checks
        ],
    }


def infeasibility_payload(report: PingPongUnits.models.InfeasibilityReport) -> dict:
    def pairs(samples):
        return [{"a1": format_number(a1), "a2": format_number(a2)} for a1, a2 in samples]

    return {
        "label": report.LABEL,
        "resolution": report.resolution,
        "reduced_samples": report.reduced_samples,
        "reduced_satisfying": pairs(report.reduced_satisfying),
        "table_samples": report.table_samples,
        "table_passes": pairs(report.table_passes),
        "infeasible": report.infeasible,
    }


def power_payload(verdict: PingPongUnits.models.PowerVerdict) -> dict:
    return {
        "n": verdict.n,
        "status": verdict.status,
        "reason": verdict.reason,
        "certificate": None if verdict.certificate is None else certificate_payload(verdict.certificate),
    }


def _no_floats(value) -> bool:
    if isinstance(value, float):
        return False
    if isinstance(value, dict):
        return all(_no_floats(item) for item in value.values())
    if isinstance(value, list):
        return all(_no_floats(item) for item in value)
    return True


_CONDITION_SCHEMA = schema.Schema(
    {
        "id": str,
        "description": str,
        "lhs_arc": schema.Or(None, str),
        "rhs_arc": schema.Or(None, str),
        "verdict": schema.Or("pass", "fail"),
        schema.Optional("witness"): schema.Or(None, str),
        schema.Optional("boundary_only"): bool,
    }
)

_PAYLOAD_SCHEMA = schema.Schema(
    schema.Or(
        None,
        {
            schema.Optional("conditions"): [_CONDITION_SCHEMA],
            schema.Optional("passed"): bool,
            str: object,
        },
        [dict],
    )
)

DOCUMENT_SCHEMA = schema.Schema(
    schema.And(
        {
            "schema_version": SCHEMA_VERSION,
            "command": str,
            "inputs": {str: object},
            "certificate": _PAYLOAD_SCHEMA,
            "oracle": schema.Or(None, {str: object}, [{str: object}]),
            "timing_ms": schema.And(int, lambda ms: ms >= 0),
        },
        _no_floats,
    )
)


class CertificateDocument:
    """
    The serialized form of one command's result.
    """

    command: str
    inputs: dict
    certificate: typing.Any
    oracle: typing.Any
    timing_ms: int

    def __init__(
        self,
        command: str,
        inputs: dict,
        certificate: typing.Any = None,
        oracle: typing.Any = None,
        timing_ms: int = 0,
    ):
        self.command = command
        self.inputs = dict(inputs)
        self.certificate = certificate
        self.oracle = oracle
        self.timing_ms = int(timing_ms)

    @classmethod
    def from_certificate(cls, command: str, inputs: dict, certificate, oracle=None, timing_ms: int = 0):
        """
        Wraps a group certificate, with an optional oracle report.
        """
        return cls(
            command,
            inputs,
            certificate_payload(certificate),
            None if oracle is None else oracle_payload(oracle),
            timing_ms,
        )

    @classmethod
    def from_semigroup_certificate(cls, command: str, inputs: dict, certificate, oracle=None, timing_ms: int = 0):
        return cls(
            command,
            inputs,
            semigroup_payload(certificate),
            None if oracle is None else oracle_payload(oracle),
            timing_ms,
        )

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "certificate": self.certificate,
            "oracle": self.oracle,
            "timing_ms": self.timing_ms,
        }

    def serialize(self) -> str:
        """
        Canonical JSON: sorted keys, two-space indent.
        """
        document = self.to_dict()
        try:
            DOCUMENT_SCHEMA.validate(document)
        except schema.SchemaError as error:
            raise PingPongUnits.exceptions.InvalidDocument(error) from error

        return json.dumps(document, sort_keys=True, indent=2)

    @classmethod
    def parse(cls, text: str) -> "CertificateDocument":
        """
        Parses and validates a serialized document.

        :param text: JSON text.

        :type text: str

        :return: The document.
        :rtype: CertificateDocument
        """
        try:
            document = DOCUMENT_SCHEMA.validate(json.loads(text))
        except json.JSONDecodeError as error:
            raise PingPongUnits.exceptions.InvalidDocument(error) from error
        except schema.SchemaError as error:
            raise PingPongUnits.exceptions.InvalidDocument(error) from error

        return cls(
            document["command"],
            document["inputs"],
            document["certificate"],
            document["oracle"],
            document["timing_ms"],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, CertificateDocument):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return "<{}.{} object at {} command={} timing_ms={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self.command,
            self.timing_ms,
        )
