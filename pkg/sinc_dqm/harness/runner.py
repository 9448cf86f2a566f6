import asyncio
import logging

from tqdm import tqdm

from ..stats import CaseStatistics, FileLogger, MonitorDaemon
from .config import HarnessConfig
from .executor import CaseExecutor

__all__ = ["BenchmarkRunner"]

LOG_FORMAT = '[%(asctime)s] %(name)s - %(levelname)s: %(message)s'

class BenchmarkRunner:
    """Common entry point of the harness commands.

    The runner configures logging, loads the harness configuration and executes batches of cases in parallel while
    the monitor daemon writes their statistics records, when a statistics directory is configured.
    """
    def __init__(self, config : HarnessConfig = None):
        if config is None:
            config = HarnessConfig().load_config()
        self.config = config

        logging.basicConfig(format=LOG_FORMAT, level=config.log_level)
        self.logger = logging.getLogger("sinc_dqm")
        self.logger.setLevel(config.log_level)

        self.statistics = None

    def run_cases(self, case_configs, description : str = "cases"):
        """Executes the cases and returns their reports in the given order."""
        return asyncio.run(self.start(list(case_configs), description))

    async def start(self, case_configs, description : str):
        stats_queue = asyncio.Queue() if self.config.stats_dir else None
        self.statistics = CaseStatistics(stats_queue)

        monitor_task = None
        if stats_queue is not None:
            monitor_daemon = MonitorDaemon(stats_queue, FileLogger(self.config.stats_dir))
            monitor_task = asyncio.create_task(monitor_daemon.start())

        executor = CaseExecutor(self.statistics, self.config.sample_every, self.config.workers)
        with tqdm(total=len(case_configs), desc=description, disable=not self.config.show_progress) as progress:
            try:
                reports = await executor.run(case_configs, progress)
            finally:
                executor.shutdown()

        if monitor_task is not None:
            await stats_queue.join()
            monitor_task.cancel()

        self.logger.info(str(self.statistics))
        return reports
