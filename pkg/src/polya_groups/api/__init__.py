"""
User-facing API of polya-groups.

Survey pipelines (sequential and process-parallel), the per-field report
and the table writers.
"""

from polya_groups.api.tables import Table, write_table
from polya_groups.api.report import quad_report
from polya_groups.api.survey import SurveyPipeline
from polya_groups.api.survey_parallel import SurveyPipelineParallel

__all__ = [
    'Table',
    'write_table',
    'quad_report',
    'SurveyPipeline',
    'SurveyPipelineParallel',
]
