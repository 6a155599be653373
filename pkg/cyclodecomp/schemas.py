# cyclodecomp/schemas.py
from typing import Dict, List, Optional

from pydantic import BaseModel, field_validator, model_validator

from .exactmath import parse_rational


class SequenceFile(BaseModel):
    # Rationals travel as strings ("1", "-1/2") so they round-trip exactly
    period: int
    values: List[str]

    @field_validator("period")
    @classmethod
    def period_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("period must be a positive integer")
        return v

    @field_validator("values")
    @classmethod
    def values_rational(cls, v: List[str]) -> List[str]:
        for text in v:
            parse_rational(text)
        return v

    @model_validator(mode="after")
    def length_matches(self) -> "SequenceFile":
        if len(self.values) != self.period:
            raise ValueError(f"period {self.period} needs {self.period} values, got {len(self.values)}")
        return self


class CyclotomicOut(BaseModel):
    n: int
    poly: str


class PhiOut(BaseModel):
    n: int
    phi: int


class FactorOut(BaseModel):
    d: int
    poly: str


class FactorUnityOut(BaseModel):
    n: int
    factors: List[FactorOut]


class DecompositionOut(BaseModel):
    support: List[int]
    components: Dict[str, SequenceFile]
    minimal_annihilator: str
    fundamental_period: int
    oracle_max_error: Optional[float] = None


class HalvingOut(BaseModel):
    periodic: Optional[SequenceFile] = None
    antiperiodic: Optional[SequenceFile] = None
    chain: Optional[Dict[str, SequenceFile]] = None
    remainder: Optional[SequenceFile] = None


class DiffEqReportOut(BaseModel):
    char_poly: str
    cyclotomic_factors: Dict[str, int]
    residual: str
    has_integer_periodic: bool
    is_cyclotomic_equation: bool
    common_period: Optional[int] = None
    unit_modulus_flag: str
    verdict: str
    sample_solutions: Dict[str, SequenceFile]


class CirculantOut(BaseModel):
    row: str
    matrix: List[List[str]]
    det: Optional[str] = None
    singular: Optional[bool] = None
    witnesses: Optional[List[int]] = None
    nullspace: Optional[List[List[str]]] = None
    periodic_solutions: Optional[Dict[str, SequenceFile]] = None


class AnnihilatorOut(BaseModel):
    matrix: List[List[str]]
    nullspace: List[List[str]]
    minimal_annihilator: str
    consistent: bool


class SuiteResult(BaseModel):
    name: str
    cases: int
    passed: bool
    failure: Optional[str] = None


class SelfCheckOut(BaseModel):
    max_n: int
    passed: bool
    suites: List[SuiteResult]
