"""
Unit tests for SurveyPipelineParallel.

These start real worker processes, so bounds stay small.
"""

import pytest

pytestmark = pytest.mark.unit


class TestSurveyPipelineParallel:
    """Test suite for the process-pool runner."""

    def test_same_table_for_any_worker_count(self):
        """workers=2 should emit exactly the bytes of workers=1."""
        from polya_groups.api.survey_parallel import SurveyPipelineParallel
        from polya_groups.api.tables import to_csv

        sequential = SurveyPipelineParallel(workers=1).survey(300)
        parallel = SurveyPipelineParallel(workers=2).survey(300)

        assert to_csv(parallel, 12) == to_csv(sequential, 12)

    def test_cyclotomic_order_is_kept(self):
        """Rows should come back in prime order."""
        from polya_groups.api.survey_parallel import SurveyPipelineParallel

        table = SurveyPipelineParallel(precision=30, workers=3).cyclotomic(31)

        assert [r.p for r in table.rows] == [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]

    def test_failing_chunk_propagates(self):
        """An exception in a worker should be re-raised after the pool drains."""
        from polya_groups.api.survey import survey_chunk
        from polya_groups.api.survey_parallel import SurveyPipelineParallel
        from polya_groups.errors import NotFundamental

        pipeline = SurveyPipelineParallel(workers=2)

        with pytest.raises(NotFundamental):
            pipeline._map_chunks(survey_chunk, [[-3, -4], [-12]], 10_000)

    def test_single_worker_runs_in_process(self, monkeypatch):
        """workers=1 should never create a pool."""
        from polya_groups.api import survey_parallel
        from polya_groups.api.survey import survey_chunk

        def boom(*args, **kwargs):
            raise AssertionError("pool created")

        monkeypatch.setattr(survey_parallel, 'ProcessPoolExecutor', boom)
        pipeline = survey_parallel.SurveyPipelineParallel(workers=1)

        rows = pipeline._map_chunks(survey_chunk, [[-3], [-4]], 10_000)

        assert [r.d for part in rows for r in part] == [-3, -4]
