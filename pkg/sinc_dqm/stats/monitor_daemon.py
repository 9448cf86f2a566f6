import asyncio
import functools
import logging
from concurrent.futures import ThreadPoolExecutor

from .file_logger import FileLogger

class MonitorDaemon:
    """Consumes statistics records from a queue until cancelled, writing them off the event loop."""
    def __init__(self, queue, file_logger : FileLogger):
        self.logger = logging.getLogger("sinc_dqm")
        self.executor = ThreadPoolExecutor(max_workers=1)
        self.queue = queue
        self.file_logger = file_logger
        self.records_written = 0

    async def start(self):
        self.logger.debug(f"Monitor daemon writing statistics to '{self.file_logger.data_dir}'.")
        loop = asyncio.get_running_loop()
        try:
            while True:
                record = await self.queue.get()
                try:
                    await loop.run_in_executor(self.executor, functools.partial(self.file_logger.log_record, record))
                    self.records_written += 1
                except OSError as error:
                    self.logger.error(f"Unable to write statistics of case '{record.case_id}': {error}")
                finally:
                    self.queue.task_done()
        finally:
            self.executor.shutdown(wait=False)
            self.logger.debug(f"Monitor daemon stopped after {self.records_written} records.")
