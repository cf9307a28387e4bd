"""
Pytest configuration for the desk-scale sweeps.
"""

import pytest


@pytest.fixture(scope="module")
def pipeline():
    """Parallel pipeline shared by a test module (two workers)."""
    from polya_groups.api.survey_parallel import SurveyPipelineParallel

    return SurveyPipelineParallel(precision=50, workers=2)
