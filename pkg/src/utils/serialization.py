# src/utils/serialization.py
# FORMATOS JSON DE INTERCAMBIO (curvas, bloques, semillas, escalados, clasificaciones)

import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from ..arith.field import FieldDescriptor, FieldKind, format_element, parse_element
from ..config.settings import Config
from ..curves.weierstrass import INFINITY, WeierstrassCurve
from ..nets.elliptic_net import EllipticNet, block_indices
from ..nets.lattice import canonical
from ..nets.propagate import SeedSet
from ..nets.recover import NORMAL_FORM
from ..nets.transform import QuadraticFormScaling
from .errors import ParseError

Entry = Tuple[List[int], str]
PointText = Union[Tuple[str, str], Literal["inf"]]


class FieldModel(BaseModel):
    kind: FieldKind
    modulus: Optional[int] = None

    @model_validator(mode='before')
    @classmethod
    def _from_text(cls, data: Any) -> Any:
        if isinstance(data, str):
            desc = FieldDescriptor.parse(data)
            return {'kind': desc.kind, 'modulus': desc.modulus}
        return data

    def to_descriptor(self) -> FieldDescriptor:
        if self.kind == FieldKind.PRIME:
            return FieldDescriptor.prime(self.modulus)
        return FieldDescriptor.rationals()

    @classmethod
    def from_descriptor(cls, desc: FieldDescriptor) -> "FieldModel":
        return cls(kind=desc.kind, modulus=desc.modulus)


class CurveModel(BaseModel):
    field: FieldModel
    a: List[str] = Field(min_length=5, max_length=5)
    points: List[PointText] = Field(default_factory=list)
    normal_form: Optional[str] = None

    def to_curve(self):
        desc = self.field.to_descriptor()
        curve = WeierstrassCurve(*(parse_element(desc, a) for a in self.a))
        points = []
        for P in self.points:
            if P == "inf":
                points.append(INFINITY)
            else:
                points.append(curve.point(parse_element(desc, P[0]), parse_element(desc, P[1])))
        return curve, points

    @classmethod
    def from_curve(cls, curve, points=(), normal_form: Optional[str] = None) -> "CurveModel":
        return cls(
            field=FieldModel.from_descriptor(curve.field),
            a=[format_element(a) for a in curve.coefficients],
            points=["inf" if P.is_infinity else (format_element(P.x), format_element(P.y)) for P in points],
            normal_form=normal_form,
        )


class NetBlockModel(BaseModel):
    rank: int = Field(ge=1)
    field: FieldModel
    origin_note: str = "W(0)=0"
    ranges: List[Tuple[int, int]]
    entries: List[Entry]

    @field_validator('ranges')
    @classmethod
    def _ordered(cls, ranges: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
        for lo, hi in ranges:
            if lo > hi:
                raise ValueError(f"rango vacío {lo}:{hi}")
        return ranges

    def to_net(self):
        desc = self.field.to_descriptor()
        W = EllipticNet(self.rank, desc, provenance={'ranges': [list(r) for r in self.ranges]})
        for v, text in self.entries:
            W.set(v, parse_element(desc, text))
        return W

    @classmethod
    def from_net(cls, W, ranges) -> "NetBlockModel":
        keys = sorted({canonical(v)[1] for v in block_indices(ranges) if any(v)})
        return cls(
            rank=W.rank,
            field=FieldModel.from_descriptor(W.field),
            ranges=[tuple(r) for r in ranges],
            entries=[(list(v), format_element(W.get(v))) for v in keys],
        )


class SeedFileModel(BaseModel):
    rank: int = Field(ge=1)
    field: FieldModel
    seeds: List[Entry]

    def to_seedset(self):
        desc = self.field.to_descriptor()
        return SeedSet(self.rank, desc, {tuple(v): parse_element(desc, text) for v, text in self.seeds})

    @classmethod
    def from_seedset(cls, seeds) -> "SeedFileModel":
        return cls(
            rank=seeds.rank,
            field=FieldModel.from_descriptor(seeds.field),
            seeds=[(list(v), format_element(x)) for v, x in sorted(seeds.values.items())],
        )


class ScalingModel(BaseModel):
    rank: int = Field(ge=1)
    A: Dict[str, str]

    def to_scaling(self, desc: FieldDescriptor):
        coefficients = {}
        for key, text in self.A.items():
            try:
                i, j = sorted(int(c) - 1 for c in key.split(","))
            except ValueError:
                raise ParseError(f"clave de coeficiente mal formada: {key!r}")
            coefficients[(i, j)] = parse_element(desc, text)
        return QuadraticFormScaling(self.rank, coefficients)

    @classmethod
    def from_scaling(cls, f) -> "ScalingModel":
        return cls(rank=f.rank, A={f"{i + 1},{j + 1}": format_element(a)
                                   for (i, j), a in sorted(f.coefficients.items())})


class ClassificationModel(BaseModel):
    degenerate: bool
    reason: Optional[str] = None
    singular: Optional[bool] = None
    discriminant: Optional[str] = None
    j_invariant: Optional[str] = None
    curve: Optional[CurveModel] = None

    @classmethod
    def from_classification(cls, result) -> "ClassificationModel":
        return cls(
            degenerate=result.degenerate,
            reason=result.reason,
            singular=result.singular,
            discriminant=None if result.discriminant is None else format_element(result.discriminant),
            j_invariant=None if result.j_invariant is None else format_element(result.j_invariant),
            curve=None if result.curve is None else CurveModel.from_curve(result.curve, result.points, NORMAL_FORM),
        )


class VerificationModel(BaseModel):
    samples: int
    zero_residuals: int
    passed: bool
    failures: List[List[List[int]]] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report) -> "VerificationModel":
        failing = [[list(instance.p), list(instance.q), list(instance.r), list(instance.s)]
                   for instance, _ in report.failures]
        return cls(samples=len(report.entries), zero_residuals=len(report.entries) - len(failing),
                   passed=report.passed, failures=failing)


def dump_model(model: BaseModel) -> str:
    return model.model_dump_json(indent=Config.JSON_INDENT, exclude_none=True)


def load_model(model_class, source: Union[str, Path]):
    """Lee y valida un archivo JSON; los errores de formato se informan como ParseError"""
    text = Path(source).read_text(encoding='utf-8')
    try:
        return model_class.model_validate(json.loads(text))
    except (ValidationError, json.JSONDecodeError) as exc:
        raise ParseError(f"{source}: {exc}")
