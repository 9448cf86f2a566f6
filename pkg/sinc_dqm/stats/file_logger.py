import logging
import os
from datetime import datetime

class FileLogger:
    """Writes statistics records as CSV rows, one file per record type and harness run.

    Files are named '<record type>_<run label>.csv'; the label defaults to the start time of the run.
    """
    def __init__(self, data_dir : str, run_label : str = None):
        self.logger = logging.getLogger("sinc_dqm")

        self.data_dir = data_dir
        self.run_label = run_label or datetime.now().strftime("%Y%m%d-%H%M%S")
        os.makedirs(data_dir, exist_ok=True)

        self.paths = {}

    def path_for(self, record) -> str:
        record_type = type(record).__name__
        path = self.paths.get(record_type)
        if path is None:
            path = os.path.join(self.data_dir, f"{record_type}_{self.run_label}.csv")
            with open(path, 'a') as f:
                if f.tell() == 0:
                    f.write(record.csv_header())
            self.paths[record_type] = path
        return path

    def log_record(self, record):
        path = self.path_for(record)
        with open(path, 'a') as f:
            f.write(record.to_csv())
        self.logger.debug(f"Wrote statistics of case '{record.case_id}' to '{path}'.")
