import asyncio
import functools
import logging

from concurrent.futures import ThreadPoolExecutor

from .case_runner import run_case

__all__ = ["CaseExecutor"]

class CaseExecutor:
    """Runs benchmark cases in a thread pool driven from the event loop.

    Cases are independent, so they may finish in any order; run() returns their reports in submission order.
    """
    def __init__(self, statistics, sample_every : dict, max_workers : int = None):
        self.logger = logging.getLogger("sinc_dqm")
        self.executor = ThreadPoolExecutor(max_workers=max_workers)
        self.statistics = statistics
        self.sample_every = sample_every

    async def run(self, case_configs, progress = None):
        reports = await asyncio.gather(*[self.submit(config, progress) for config in case_configs])
        return list(reports)

    async def submit(self, case_config, progress = None):
        loop = asyncio.get_running_loop()
        record = self.statistics.create_record(case_config)
        report = await loop.run_in_executor(self.executor, functools.partial(self.execute_case, case_config, record))
        self.statistics.log_record(record)
        if progress is not None:
            progress.update(1)
        return report

    def execute_case(self, case_config, record):
        record.case_started()
        report = run_case(case_config, self.sample_every.get(case_config.problem))
        record.case_completed(report)
        return report

    def shutdown(self):
        self.executor.shutdown(wait=True)
