"""Input documents accepted by the command-line subcommands"""

from typing import Any, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from covercrimp.constants import CliConstants
from covercrimp.errors import SchemaError

ScalarLiteral = Union[int, str]
FieldSpec = Union[str, int, dict[str, int]]


class SeriesDocument(BaseModel):
    """A series with its own field and precision"""

    model_config = ConfigDict(extra="forbid")

    coefficients: list[ScalarLiteral]
    field: FieldSpec | None = None
    precision: int | None = Field(default=None, ge=1)


SeriesLiteral = Union[ScalarLiteral, list[ScalarLiteral], SeriesDocument]


class _JobDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    field: FieldSpec | None = None
    precision: int | None = Field(default=None, ge=CliConstants.MIN_PRECISION)


class TableDocument(BaseModel):
    """Structure constants: ``constants[i][j][k]`` is c_ij^k"""

    model_config = ConfigDict(extra="forbid")

    unit: list[SeriesLiteral]
    constants: list[list[list[SeriesLiteral]]]
    generically_etale: bool = False


class CoverDocument(_JobDocument):
    """One of ``polynomial`` (ascending, monic), ``branches``, ``table`` or ``catalog``"""

    polynomial: list[SeriesLiteral] | None = None
    branches: list[SeriesLiteral] | None = None
    table: TableDocument | None = None
    catalog: str | None = None
    parameter: ScalarLiteral | None = None
    basis_change: list[list[SeriesLiteral]] | None = None
    label: str | None = None

    @model_validator(mode="after")
    def _one_presentation(self) -> "CoverDocument":
        given = [
            name
            for name in ("polynomial", "branches", "table", "catalog")
            if getattr(self, name) is not None
        ]
        if len(given) != 1:
            raise ValueError(
                "exactly one of polynomial, branches, table, catalog is required, "
                f"got {given or 'none'}"
            )
        if self.parameter is not None and self.catalog is None:
            raise ValueError("parameter only applies to catalog covers")
        return self


class NormalizationDocument(BaseModel):
    """``split`` with a degree, or an explicit ramification profile"""

    model_config = ConfigDict(extra="forbid")

    kind: str = "split"
    degree: int | None = Field(default=None, ge=1)
    ramification: list[int] | None = None
    galois: bool = False

    @model_validator(mode="after")
    def _shape(self) -> "NormalizationDocument":
        if self.kind == "split":
            if self.degree is None:
                raise ValueError("split normalizations need a degree")
        elif self.kind == "ramified":
            if self.ramification is None:
                self.ramification = [2]
            if len(self.ramification) != 1:
                raise ValueError("a ramified disk has one ramification index; use kind profile")
        elif self.kind == "profile":
            if self.ramification is None:
                raise ValueError("profile normalizations need a ramification list")
        else:
            raise ValueError(f"unknown normalization kind {self.kind!r}")
        if self.ramification is not None and any(e < 1 for e in self.ramification):
            raise ValueError("ramification indices must be positive")
        return self


class CrimpsDocument(_JobDocument):
    normalization: NormalizationDocument
    b: int = Field(ge=1)
    strategy: str | None = None


class CrimpDocument(BaseModel):
    """A crimp given by branches u_1..u_d of a split cover or by spanning rows of S"""

    model_config = ConfigDict(extra="forbid")

    branches: list[SeriesLiteral] | None = None
    rows: list[list[ScalarLiteral]] | None = None

    @model_validator(mode="after")
    def _one_presentation(self) -> "CrimpDocument":
        if (self.branches is None) == (self.rows is None):
            raise ValueError("exactly one of branches, rows is required")
        return self


class IsoDocument(_JobDocument):
    normalization: NormalizationDocument
    b: int = Field(ge=1)
    first: CrimpDocument
    second: CrimpDocument


class ComponentDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    genus: int = Field(ge=0)


class MarkingDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    component: int = Field(default=0, ge=0)
    mult: int = Field(default=1, ge=1)


class PointDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    component: int = Field(default=0, ge=0)


class CurveDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    components: list[ComponentDocument] = Field(min_length=1)
    edges: list[tuple[int, int]] = []
    markings: list[MarkingDocument] = []
    points: list[PointDocument] = []

    @model_validator(mode="after")
    def _components_exist(self) -> "CurveDocument":
        count = len(self.components)
        for i, j in self.edges:
            if not (0 <= i < count and 0 <= j < count):
                raise ValueError(f"node ({i}, {j}) joins a missing component")
        for m in self.markings:
            if m.component >= count:
                raise ValueError(f"marking on missing component {m.component}")
        for p in self.points:
            if p.component >= count:
                raise ValueError(f"point on missing component {p.component}")
        return self


class StableDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    curve: CurveDocument
    epsilon: ScalarLiteral | None = None


class RiemannHurwitzDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    d: int = Field(ge=1)
    h: int = Field(ge=0)
    b: int | None = Field(default=None, ge=0)
    g: int | None = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _one_unknown(self) -> "RiemannHurwitzDocument":
        if (self.b is None) == (self.g is None):
            raise ValueError("exactly one of b, g is required")
        return self


class HurwitzDocument(BaseModel):
    """Simple branching (``b``) or explicit cycle types at the punctures"""

    model_config = ConfigDict(extra="forbid")

    d: int = Field(ge=1)
    h: int = Field(default=0, ge=0)
    b: int | None = Field(default=None, ge=0)
    punctures: list[list[int]] | None = None
    include_disconnected: bool = False

    @model_validator(mode="after")
    def _one_branching(self) -> "HurwitzDocument":
        if self.b is not None and self.punctures is not None:
            raise ValueError("give b or punctures, not both")
        if self.b is None and self.punctures is None:
            self.punctures = []
        return self


def parse_document(model: type[BaseModel], document: Any) -> Any:
    """Validate ``document`` against ``model``; violations become SchemaError"""
    if not isinstance(document, dict):
        raise SchemaError(f"Input must be a JSON object, got {type(document).__name__}")
    try:
        return model.model_validate(document)
    except ValidationError as err:
        problems = [
            {"loc": ".".join(str(part) for part in e["loc"]), "msg": e["msg"]}
            for e in err.errors()
        ]
        raise SchemaError(
            f"Input does not match the {model.__name__} schema", {"errors": problems}
        ) from err
