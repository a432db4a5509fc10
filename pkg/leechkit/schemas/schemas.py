from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from leechkit.core.lattice import Ambient, FiniteQuadraticForm, Lattice


def _fraction(value: str) -> Fraction:
    return Fraction(str(value))


def _text(value: Fraction) -> str:
    return str(Fraction(value))


# ========================================
# Schemas de Reticulado
# ========================================
class AmbientSchema(BaseModel):
    gram: List[List[str]]
    basis: List[List[str]]
    blocks: Optional[List[int]] = None


class LatticeSchema(BaseModel):
    """Formato JSON de reticulado; racionais como strings "p/q"."""

    label: str = ""
    gram: List[List[int]]
    ambient: Optional[AmbientSchema] = None

    @classmethod
    def from_lattice(cls, lattice: Lattice) -> "LatticeSchema":
        ambient = None
        if lattice.ambient is not None:
            ambient = AmbientSchema(
                gram=[[_text(x) for x in row] for row in lattice.ambient.gram],
                basis=[[_text(x) for x in row] for row in lattice.ambient.basis],
                blocks=list(lattice.ambient.blocks) if lattice.ambient.blocks else None,
            )
        return cls(label=lattice.label, gram=lattice.matrix(), ambient=ambient)

    def to_lattice(self) -> Lattice:
        ambient = None
        if self.ambient is not None:
            ambient = Ambient(
                tuple(tuple(_fraction(x) for x in row) for row in self.ambient.gram),
                tuple(tuple(_fraction(x) for x in row) for row in self.ambient.basis),
                tuple(self.ambient.blocks) if self.ambient.blocks else None,
            )
        return Lattice(tuple(map(tuple, self.gram)), self.label, ambient)


class DiscriminantFormSchema(BaseModel):
    invariants: List[int]
    q: Optional[List[str]] = None
    b: List[List[str]]

    @classmethod
    def from_form(cls, form: FiniteQuadraticForm) -> "DiscriminantFormSchema":
        return cls(
            invariants=list(form.invariants),
            q=[_text(x) for x in form.q] if form.q is not None else None,
            b=[[_text(x) for x in row] for row in form.b],
        )

    def to_form(self) -> FiniteQuadraticForm:
        return FiniteQuadraticForm(
            tuple(self.invariants),
            tuple(_fraction(x) for x in self.q) if self.q is not None else None,
            tuple(tuple(_fraction(x) for x in row) for row in self.b),
        )


class DiscriminantResponse(BaseModel):
    label: str
    form: DiscriminantFormSchema
    order: int
    length: int
    signature: str
    milgram_signature: Optional[int] = None
    consistent: Optional[bool] = None


class EnumerateRequest(BaseModel):
    lattice: LatticeSchema
    bound: int = Field(gt=0)
    keep_vectors: bool = False
    limit: Optional[int] = None


class EnumerationResponse(BaseModel):
    label: str
    bound: int
    counts: Dict[int, int]
    total: int
    minimum: Optional[int] = None
    vectors: Optional[List[List[int]]] = None
    elapsed: float


class IsometryRequest(BaseModel):
    first: LatticeSchema
    second: LatticeSchema
    node_cap: Optional[int] = None


class IsometryResponse(BaseModel):
    status: str
    witness: Optional[List[List[int]]] = None
    nodes: int = 0
    reason: str = ""


# ========================================
# Schemas de Niemeier
# ========================================
class NiemeierRow(BaseModel):
    name: str
    components: List[str]
    rank: int
    coxeter: int
    expected_roots: int
    glue: List[str]
    leech_group: str
    leech_group_order: int


class NiemeierLatticeResponse(BaseModel):
    row: NiemeierRow
    lattice: LatticeSchema
    roots: Optional[int] = None
    roots_ok: Optional[bool] = None


# ========================================
# Schemas de Claims
# ========================================
class ClaimStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INDETERMINATE = "indeterminate"


class ClaimDefinition(BaseModel):
    id: str
    anchor: str
    description: str
    handler: str
    slow: bool = False


class ClaimReport(BaseModel):
    id: str
    anchor: str
    status: ClaimStatus
    evidence: Dict[str, Any] = Field(default_factory=dict)
    elapsed: float = 0.0


# ========================================
# Schemas da cúbica de Klein
# ========================================
class KleinRanksResponse(BaseModel):
    residue_ranks: Dict[str, int]
    lattice_ranks: Dict[int, int]
    consistent: bool


class FixedLinesResponse(BaseModel):
    automorphism: str
    fixed_points: List[int]
    lines: List[List[int]]


class SmoothnessResponse(BaseModel):
    prime: int
    points: int
    singular: int
    smooth: bool
    elapsed: float
