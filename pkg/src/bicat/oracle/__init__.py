"""Exhaustive bounded verification of the catalogued results."""
from .forms import FormFamily, Instance, Match, build, candidates, gen_family, match_form
from .report import ALL_PASS, COUNTEREXAMPLE, VerificationReport
from .runner import CATALOG, DEFAULT_BUDGET, THEOREM_IDS, verify

__all__ = [
    "ALL_PASS", "CATALOG", "COUNTEREXAMPLE", "DEFAULT_BUDGET", "FormFamily", "Instance", "Match",
    "THEOREM_IDS", "VerificationReport", "build", "candidates", "gen_family", "match_form", "verify",
]
