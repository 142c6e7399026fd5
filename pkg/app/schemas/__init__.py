from app.schemas.reports import (
   CheckResultSchema,
   CounterexampleReport,
   ElementInfo,
   GroupInfoReport,
   HomReport,
   InstanceSchema,
   KernelFactor,
   SolutionSpaceReport,
   Sr2Pair,
   Sr2ReportSchema,
   SuiteReport,
   SuiteResults,
   SuiteSummary,
)
from app.schemas.suite import ProductInstance, SuiteConfig

__all__ = [
   "CheckResultSchema",
   "CounterexampleReport",
   "ElementInfo",
   "GroupInfoReport",
   "HomReport",
   "InstanceSchema",
   "KernelFactor",
   "SolutionSpaceReport",
   "Sr2Pair",
   "Sr2ReportSchema",
   "SuiteReport",
   "SuiteResults",
   "SuiteSummary",
   "ProductInstance",
   "SuiteConfig",
]
