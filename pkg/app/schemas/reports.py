from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, RootModel

ResidueTable = Dict[str, List[int]]


class ElementInfo(BaseModel):
    """One row of a group's element listing"""
    index: int
    name: str
    order: int


class GroupInfoReport(BaseModel):
    """Structure summary of a group (info verb)"""
    group: str
    family: str
    order: int
    abelianization: List[int] = Field(..., description="Invariant factors d1 | d2 | ... of G/[G,G]")
    derived_order: int
    generators: List[str]
    involution_count: int
    default_involutions: List[str]
    squares: int
    elements: Optional[List[ElementInfo]] = None


class Sr2Pair(BaseModel):
    """Unordered pair of involutions and a square root of its product (None if there is none)"""
    a: str
    b: str
    product: str
    witness: Optional[str] = None


class Sr2ReportSchema(BaseModel):
    group: str
    involutions: List[str]
    generates: bool
    verdict: bool
    pairs: List[Sr2Pair]


class KernelFactor(BaseModel):
    """Solutions with values in one cyclic factor Z/modulus"""
    modulus: int
    orders: List[int]
    cardinality: int
    generators: List[ResidueTable]


class SolutionSpaceReport(BaseModel):
    group: str
    target: str
    equation: str
    cardinality: int
    unnormalized_cardinality: int
    per_factor: List[KernelFactor]
    solutions: Optional[List[ResidueTable]] = None


class HomReport(BaseModel):
    group: str
    target: str
    abelianization: List[int]
    count: int
    expected_count: int = Field(..., description="prod over i, j of gcd(m_i, d_j)")
    maps: Optional[List[ResidueTable]] = None


class CounterexampleReport(BaseModel):
    group: str
    target: str
    k: int
    u: List[int]
    c: List[int]
    solves_j1: bool
    is_homomorphism: bool
    map: ResidueTable


class InstanceSchema(BaseModel):
    group: str
    target: Optional[str] = None
    params: Dict[str, Any] = Field(default_factory=dict)


class CheckResultSchema(BaseModel):
    check_id: str
    instance: InstanceSchema
    status: str = Field(..., description="pass, fail or skip")
    counterexample: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = Field(default_factory=dict)


class SuiteSummary(BaseModel):
    total: int
    passed: int
    failed: int
    skipped: int


class SuiteReport(BaseModel):
    summary: SuiteSummary
    results: List[CheckResultSchema]


class SuiteResults(RootModel[List[CheckResultSchema]]):
    """JSON form of a verify run: a bare array of check results"""
