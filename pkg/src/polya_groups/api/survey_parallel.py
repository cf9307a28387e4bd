"""
Parallel survey runner.

Runs the chunk functions of SurveyPipeline on a ProcessPoolExecutor.

Design:
- Chunk functions are module-level and pure, so they pickle to workers
- No shared state between processes (results come back as return values)
- Results are keyed by chunk index and merged in order, so the emitted
  table is byte-identical for any worker count
- A failed chunk is logged with its traceback; the first failure is
  re-raised once the pool has drained, and nothing is written

Usage:
    pipeline = SurveyPipelineParallel(workers=8)
    table = pipeline.survey(100_000)
"""

from concurrent.futures import ProcessPoolExecutor, as_completed
import logging
from typing import Any, Callable, Dict, List, Optional, Tuple

from polya_groups.api.survey import SurveyPipeline

logger = logging.getLogger(__name__)


def _chunk_worker(fn: Callable[..., List[Any]], index: int, chunk: List[Any], args: Tuple[Any, ...]) -> Tuple[int, List[Any]]:
    """
    Worker function for one chunk, run in a child process.

    Returns:
        (chunk index, rows)
    """
    try:
        return index, fn(chunk, *args)
    except Exception as e:
        logger.error(f"Worker failed on chunk {index} ({fn.__name__}, {len(chunk)} items): {e}", exc_info=True)
        raise


class SurveyPipelineParallel(SurveyPipeline):
    """
    SurveyPipeline whose chunks run on a process pool.

    With workers == 1 (or a single chunk) everything runs in-process.

    Example:
        >>> table = SurveyPipelineParallel(workers=4).survey(1000)
    """

    def _map_chunks(self, fn: Callable[..., List[Any]], chunks: List[List[Any]], *args: Any) -> List[List[Any]]:
        if self.workers == 1 or len(chunks) <= 1:
            return super()._map_chunks(fn, chunks, *args)

        logger.info(f"Running {len(chunks)} {fn.__name__} chunks on {self.workers} workers")
        results: Dict[int, List[Any]] = {}
        failure: Optional[BaseException] = None

        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            future_to_index = {
                executor.submit(_chunk_worker, fn, i, chunk, args): i
                for i, chunk in enumerate(chunks)
            }
            for future in as_completed(future_to_index):
                i = future_to_index[future]
                try:
                    index, rows = future.result()
                    results[index] = rows
                except Exception as e:
                    logger.error(f"Chunk {i} of {fn.__name__} failed: {e}", exc_info=True)
                    if failure is None:
                        failure = e

        if failure is not None:
            raise failure
        return [results[i] for i in range(len(chunks))]
