"""
polya-groups: class groups, Polya groups, units and abelian discriminants.

Main package exports for the user-facing API.
"""

from polya_groups.services import make_field, polya_group, relative_class_group
from polya_groups.api import SurveyPipeline, SurveyPipelineParallel, quad_report

__all__ = [
    'make_field',
    'polya_group',
    'relative_class_group',
    'SurveyPipeline',
    'SurveyPipelineParallel',
    'quad_report',
]
