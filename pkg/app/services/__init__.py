from app.services.suite_service import run_paper_suite

__all__ = ["run_paper_suite"]
